//! Primitive lifts of indecomposables.

use std::collections::BTreeMap;

use crate::error::{HopfError, Result};
use crate::hopf::{indecomposables, verschiebung, Bialgebra};
use crate::linear::{AffineSystem, Field, Vector};

/// A primitive `x + c` with `c ∈ H̄²`, for a homogeneous `x ∈ H̄`.
///
/// In characteristic `p` the input must satisfy `V(x) = 0`. The correction
/// is the lex-least solution of `Δ̄(x + c) = 0`.
pub fn find_primitive_lift(h: &Bialgebra, x: &Vector) -> Result<Vector> {
    let field = h.field();
    let mut degrees = x.keys().map(|i| h.degree(*i));
    let Some(d) = degrees.next() else {
        return Ok(Vector::new());
    };
    if d == 0 || degrees.any(|e| e != d) {
        return Err(HopfError::Validation(
            "a lift needs a homogeneous element of positive degree".into(),
        ));
    }
    if matches!(field, Field::Prime(_)) && h.is_cocommutative() {
        let v = verschiebung(&h.coalgebra)?;
        let mut vx = Vector::new();
        for (i, c) in x.iter() {
            vx.add_scaled(&v[*i], c);
        }
        if !vx.is_zero() {
            return Err(HopfError::Domain(format!(
                "lift needs V(x) = 0, but V(x) = {}",
                h.format_vector(&vx)
            )));
        }
    }
    let q = indecomposables(h)?;
    let dec: Vec<Vector> = q.decomposables(d).rows().cloned().collect();
    let constant = h.reduced_vec(x);
    let mut rows: BTreeMap<(usize, usize), Vector> = constant.keys().map(|k| (*k, Vector::new())).collect();
    for (k, delta) in dec.iter().enumerate() {
        for (ab, c) in h.reduced_vec(delta).iter() {
            rows.entry(*ab).or_default().add_term(k, c.clone());
        }
    }
    let mut system = AffineSystem::new(field, dec.len());
    for (ab, row) in &rows {
        let rhs = constant.coeff(ab).map(|c| -c).unwrap_or_else(|| field.zero());
        if !system.add(row, &rhs) {
            return Err(HopfError::infeasible(
                "theorems::find_primitive_lift",
                d,
                "no primitive lift",
            ));
        }
    }
    let solution = system.solve().expect("consistent system");
    let mut lift = x.clone();
    for (k, c) in solution.particular.iter() {
        lift.add_scaled(&dec[*k], c);
    }
    Ok(lift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::FreePresentation;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn loops_cp3() -> Bialgebra {
        FreePresentation::parse(
            f2(),
            &[("y1", 2), ("y2", 4), ("y3", 6)],
            &[("y2", "y1@y1"), ("y3", "y2@y1 + y1@y2")],
        )
        .unwrap()
        .build(12)
        .unwrap()
    }

    #[test]
    fn primitive_input_is_returned() {
        let h = loops_cp3();
        let y1 = h.algebra.basis_vector(h.generator("y1").unwrap());
        assert_eq!(find_primitive_lift(&h, &y1).unwrap(), y1);
    }

    #[test]
    fn y3_lifts_to_a_primitive() {
        let h = loops_cp3();
        let y3 = h.algebra.basis_vector(h.generator("y3").unwrap());
        let lift = find_primitive_lift(&h, &y3).unwrap();
        assert!(h.reduced_vec(&lift).is_zero());
        let q = indecomposables(&h).unwrap();
        let mut diff = lift.clone();
        diff.sub_assign(&y3);
        assert!(q.is_decomposable(&diff));
    }

    #[test]
    fn nonzero_verschiebung_is_a_precondition_error() {
        let h = FreePresentation::parse(f2(), &[("x", 1), ("y", 2), ("z", 4)], &[("z", "x^2@x^2")])
            .unwrap()
            .build(8)
            .unwrap();
        let z = h.algebra.basis_vector(h.generator("z").unwrap());
        assert!(matches!(find_primitive_lift(&h, &z), Err(HopfError::Domain(_))));
    }

    #[test]
    fn over_q_an_unliftable_class_is_infeasible() {
        // With x odd, Δ̄(x²) = x⊗x − x⊗x = 0, so x⊗x cannot be cancelled.
        let h = FreePresentation::parse(Field::Rational, &[("x", 1), ("y", 2)], &[("y", "x@x")])
            .unwrap()
            .build(4)
            .unwrap();
        let y = h.algebra.basis_vector(h.generator("y").unwrap());
        assert!(matches!(
            find_primitive_lift(&h, &y),
            Err(HopfError::Infeasible { degree: 2, .. })
        ));
    }
}
