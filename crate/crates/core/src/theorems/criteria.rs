//! Isomorphism tests and structural criteria.

use serde::Serialize;

use crate::error::{HopfError, Result};
use crate::fv::{iso_test_fv, Decomposition};
use crate::hopf::{
    frobenius_module, indecomposables, primitives, verschiebung_module, Bialgebra, GradedAlgebra, GradedCoalgebra,
    MonomialAlgebraPresentation,
};
use crate::linear::{rank_of, Field, Vector};

use super::split::{split_with, SplitnessCertificate};

/// What an isomorphism verdict was based on.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    /// Classifications of the F- or V-modules that decide the question.
    Modules { left: Decomposition, right: Decomposition },
    /// Graded dimensions, in characteristic zero.
    Dimensions { left: Vec<usize>, right: Vec<usize> },
}

/// `verdict` is `None` when the invariants agree but do not decide.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsoVerdict {
    pub verdict: Option<bool>,
    pub detail: String,
    pub evidence: Evidence,
}

fn same_setting(f1: Field, f2: Field, b1: usize, b2: usize) -> Result<()> {
    if f1 != f2 || b1 != b2 {
        return Err(HopfError::Validation("inputs must share field and bound".into()));
    }
    Ok(())
}

fn modules_verdict(what: &str, left: Decomposition, right: Decomposition, same: bool) -> IsoVerdict {
    let detail = if same {
        format!("{what} agree: {left}")
    } else {
        format!("{what} differ: {left} vs {right}")
    };
    IsoVerdict {
        verdict: Some(same),
        detail,
        evidence: Evidence::Modules { left, right },
    }
}

fn dims_verdict(what: &str, left: Vec<usize>, right: Vec<usize>) -> IsoVerdict {
    let same = left == right;
    let fmt = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let detail = if same {
        format!("{what} agree: [{}]", fmt(&left))
    } else {
        format!("{what} differ: [{}] vs [{}]", fmt(&left), fmt(&right))
    };
    IsoVerdict {
        verdict: Some(same),
        detail,
        evidence: Evidence::Dimensions { left, right },
    }
}

fn reduced_dims(dims: Vec<usize>) -> Vec<usize> {
    let mut d = dims;
    d[0] = 0;
    d
}

/// Whether `J∨(A) ≅ J∨(B)` as Hopf algebras: in characteristic `p` exactly
/// when `Ā ≅ B̄` as F-modules, in characteristic zero exactly when they have
/// the same graded dimensions.
pub fn iso_test_jvee(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<IsoVerdict> {
    same_setting(a.field, b.field, a.bound(), b.bound())?;
    if !a.commutative || !b.commutative {
        return Err(HopfError::Domain("J∨ needs commutative algebras".into()));
    }
    match a.field {
        Field::Prime(_) => {
            let (fa, fb) = (frobenius_module(a)?, frobenius_module(b)?);
            let same = iso_test_fv(&fa, &fb)?;
            Ok(modules_verdict("F-modules", fa.classify(), fb.classify(), same))
        }
        Field::Rational => Ok(dims_verdict(
            "dimensions",
            reduced_dims(a.basis.dims()),
            reduced_dims(b.basis.dims()),
        )),
    }
}

/// Whether `J(C) ≅ J(D)`: in characteristic `p` exactly when `C̄ ≅ D̄` as
/// V-modules, in characteristic zero when the graded dimensions agree.
pub fn iso_test_j(c: &GradedCoalgebra, d: &GradedCoalgebra) -> Result<IsoVerdict> {
    same_setting(c.field, d.field, c.bound(), d.bound())?;
    if !c.cocommutative || !d.cocommutative {
        return Err(HopfError::Domain("J needs cocommutative coalgebras".into()));
    }
    match c.field {
        Field::Prime(_) => {
            let (vc, vd) = (verschiebung_module(c)?, verschiebung_module(d)?);
            let same = iso_test_fv(&vc, &vd)?;
            Ok(modules_verdict("V-modules", vc.classify(), vd.classify(), same))
        }
        Field::Rational => Ok(dims_verdict(
            "dimensions",
            reduced_dims(c.basis.dims()),
            reduced_dims(d.basis.dims()),
        )),
    }
}

/// Isomorphism test for cocommutative Hopf algebras that are free as
/// algebras.
///
/// In characteristic `p`, different Q V-modules rule out an isomorphism;
/// equal ones decide it only when both sides are split. In characteristic
/// zero the dimensions of `Q` decide.
pub fn iso_test_hopf(h1: &Bialgebra, h2: &Bialgebra) -> Result<IsoVerdict> {
    same_setting(h1.field(), h2.field(), h1.bound(), h2.bound())?;
    if !h1.is_cocommutative() || !h2.is_cocommutative() {
        return Err(HopfError::Domain(
            "the Hopf isomorphism test needs cocommutative inputs".into(),
        ));
    }
    let (q1, q2) = (indecomposables(h1)?, indecomposables(h2)?);
    match h1.field() {
        Field::Prime(_) => {
            let (m1, m2) = (q1.v_module()?, q2.v_module()?);
            let (c1, c2) = (m1.classify(), m2.classify());
            if c1 != c2 {
                return Ok(modules_verdict("Q V-modules", c1, c2, false));
            }
            let s1 = split_with(h1, &q1)?.split;
            let s2 = split_with(h2, &q2)?.split;
            let mut v = modules_verdict("Q V-modules", c1, c2, true);
            if s1 && s2 {
                v.detail.push_str("; both split");
            } else {
                v.verdict = None;
                v.detail.push_str("; not both split, undecided");
            }
            Ok(v)
        }
        Field::Rational => Ok(dims_verdict("Q dimensions", q1.dims(), q2.dims())),
    }
}

/// Verdict of [`is_primitively_generated`] with both routes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrimitivelyGenerated {
    pub verdict: bool,
    /// Lowest degree where primitives miss part of `Q`.
    pub failing_degree: Option<usize>,
    /// `None` where `V` is undefined: characteristic 0 or not cocommutative.
    pub v_trivial_on_q: Option<bool>,
    pub split: Option<SplitnessCertificate>,
}

/// Decides whether primitives generate `H`, once by testing that `P → Q` is
/// onto in every degree and once structurally: cocommutative, and in
/// characteristic `p` also split with trivial `V` on `Q`. The two answers
/// must agree.
pub fn is_primitively_generated(h: &Bialgebra) -> Result<PrimitivelyGenerated> {
    let q = indecomposables(h)?;
    let mut failing_degree = None;
    for d in 1..=h.bound() {
        let dim = q.indices_in_degree(d).len();
        if dim == 0 {
            continue;
        }
        let images: Vec<Vector> = primitives(h, d)?.iter().map(|x| q.project(x)).collect();
        if rank_of(h.field(), &images) < dim {
            failing_degree = Some(d);
            break;
        }
    }
    let (v_trivial_on_q, split) = match h.field() {
        Field::Prime(_) if h.is_cocommutative() => {
            let v = (0..q.len()).map(|i| q.v_of(i)).collect::<Result<Vec<_>>>()?;
            (Some(v.iter().all(Vector::is_zero)), Some(split_with(h, &q)?))
        }
        _ => (None, None),
    };
    let via_primitives = failing_degree.is_none();
    let via_structure = h.is_cocommutative()
        && match (&split, v_trivial_on_q) {
            (Some(s), Some(trivial)) => s.split && trivial,
            _ => true,
        };
    if via_primitives != via_structure {
        return Err(HopfError::invariant(
            "theorems::is_primitively_generated",
            format!("P → Q onto: {via_primitives}, structural route: {via_structure}"),
        ));
    }
    Ok(PrimitivelyGenerated {
        verdict: via_primitives,
        failing_degree,
        v_trivial_on_q,
        split,
    })
}

/// Verdict of [`polynomial_criterion`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialVerdict {
    pub polynomial: bool,
    /// Source degree of a witness against.
    pub failing_degree: Option<usize>,
    /// Highest degree whose `F` was checked.
    pub checked_through: usize,
}

/// Whether `J∨(A)` is polynomial, decided on `A`: `F` must be injective on
/// `Ā`, and at odd `p` `A` must live in even degrees. Degrees `d` with
/// `p·d` above the bound are not checked for injectivity.
pub fn polynomial_criterion(a: &GradedAlgebra) -> Result<PolynomialVerdict> {
    let Field::Prime(p) = a.field else {
        return Err(HopfError::Domain(
            "the polynomial criterion needs characteristic p".into(),
        ));
    };
    let p = p as usize;
    let f = frobenius_module(a)?;
    let checked_through = a.bound() / p;
    for d in 1..=a.bound() {
        let dim = f.dim(d);
        if dim == 0 {
            continue;
        }
        let odd_fails = p != 2 && d % 2 == 1;
        let f_fails = d <= checked_through && f.block(d).is_none_or(|m| m.rank() < dim);
        if odd_fails || f_fails {
            return Ok(PolynomialVerdict {
                polynomial: false,
                failing_degree: Some(d),
                checked_through,
            });
        }
    }
    Ok(PolynomialVerdict {
        polynomial: true,
        failing_degree: None,
        checked_through,
    })
}

/// The integral criterion for a monomial presentation over `Z`: the check
/// in characteristic `p` for each listed prime.
pub fn polynomial_criterion_integral(
    presentation: &MonomialAlgebraPresentation,
    primes: &[u32],
    bound: usize,
) -> Result<Vec<(u32, PolynomialVerdict)>> {
    primes
        .iter()
        .map(|&p| {
            let mut reduced = presentation.clone();
            reduced.field = Field::prime(p)?;
            Ok((p, polynomial_criterion(&reduced.build(bound)?)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_cofree::build_jvee;
    use crate::hopf::parse::letters;
    use crate::hopf::{FreePresentation, MonomialRelation};

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn truncated(field: Field, height: usize, bound: usize) -> GradedAlgebra {
        MonomialAlgebraPresentation {
            field,
            generators: letters(&[("y", 2)]),
            relations: vec![MonomialRelation::Power(0, height)],
            commutative: true,
        }
        .build(bound)
        .unwrap()
    }

    fn polynomial(field: Field, bound: usize) -> GradedAlgebra {
        MonomialAlgebraPresentation {
            field,
            generators: letters(&[("y", 2)]),
            relations: vec![],
            commutative: true,
        }
        .build(bound)
        .unwrap()
    }

    fn square_zero(field: Field, bound: usize) -> GradedAlgebra {
        MonomialAlgebraPresentation {
            field,
            generators: letters(&[("u", 2), ("w", 4)]),
            relations: vec![
                MonomialRelation::Product(0, 0),
                MonomialRelation::Product(0, 1),
                MonomialRelation::Product(1, 1),
            ],
            commutative: true,
        }
        .build(bound)
        .unwrap()
    }

    fn h1_h2(bound: usize) -> (Bialgebra, Bialgebra) {
        let gens = [("x", 1), ("y", 2), ("z", 4)];
        let h1 = FreePresentation::parse(f(2), &gens, &[("z", "y@y")])
            .unwrap()
            .build(bound)
            .unwrap();
        let h2 = FreePresentation::parse(f(2), &gens, &[("z", "x^2@x^2")])
            .unwrap()
            .build(bound)
            .unwrap();
        (h1, h2)
    }

    #[test]
    fn jvee_iso_is_reflexive() {
        let a = truncated(f(2), 3, 12);
        assert_eq!(iso_test_jvee(&a, &a).unwrap().verdict, Some(true));
    }

    #[test]
    fn jvee_iso_separates_f_modules_in_char_two() {
        let v = iso_test_jvee(&truncated(f(2), 3, 12), &square_zero(f(2), 12)).unwrap();
        assert_eq!(v.verdict, Some(false));
        assert_eq!(v.detail, "F-modules differ: {(2,1)} vs {(2,0),(4,0)}");
    }

    #[test]
    fn jvee_iso_in_char_zero_compares_dimensions() {
        let v = iso_test_jvee(&truncated(Field::Rational, 3, 12), &square_zero(Field::Rational, 12)).unwrap();
        assert_eq!(v.verdict, Some(true));
    }

    #[test]
    fn h1_and_h2_have_different_q() {
        let (h1, h2) = h1_h2(12);
        let v = iso_test_hopf(&h1, &h2).unwrap();
        assert_eq!(v.verdict, Some(false));
        assert_eq!(v.detail, "Q V-modules differ: {(1,0),(2,1)} vs {(1,0),(2,0),(4,0)}");
    }

    #[test]
    fn hopf_iso_with_itself_is_decided_only_when_split() {
        let (h1, h2) = h1_h2(8);
        assert_eq!(iso_test_hopf(&h1, &h1).unwrap().verdict, Some(true));
        assert_eq!(iso_test_hopf(&h2, &h2).unwrap().verdict, None);
    }

    #[test]
    fn primitively_generated_routes() {
        let t = FreePresentation::parse(f(2), &[("x", 1)], &[])
            .unwrap()
            .build(8)
            .unwrap();
        assert!(is_primitively_generated(&t).unwrap().verdict);
        let (h1, h2) = h1_h2(8);
        let r1 = is_primitively_generated(&h1).unwrap();
        assert!(!r1.verdict && r1.split.unwrap().split && r1.v_trivial_on_q == Some(false));
        let r2 = is_primitively_generated(&h2).unwrap();
        assert!(!r2.verdict && !r2.split.unwrap().split);
        assert_eq!(r2.failing_degree, Some(4));
    }

    #[test]
    fn quasi_shuffle_algebras_are_not_primitively_generated() {
        for p in [0, 2] {
            let h = build_jvee(&polynomial(Field::from_characteristic(p).unwrap(), 8), 8).unwrap();
            let r = is_primitively_generated(&h).unwrap();
            assert!(!r.verdict && r.split.is_none(), "p = {p}");
        }
    }

    #[test]
    fn cocommutative_algebras_over_q_are_primitively_generated() {
        let h = FreePresentation::parse(Field::Rational, &[("x", 2), ("y", 4)], &[("y", "x@x")])
            .unwrap()
            .build(8)
            .unwrap();
        assert!(is_primitively_generated(&h).unwrap().verdict);
    }

    #[test]
    fn polynomial_algebras_pass() {
        for p in [2, 3] {
            assert!(polynomial_criterion(&polynomial(f(p), 12)).unwrap().polynomial);
        }
    }

    #[test]
    fn truncated_polynomial_fails_in_degree_four() {
        let v = polynomial_criterion(&truncated(f(2), 3, 12)).unwrap();
        assert!(!v.polynomial);
        assert_eq!(v.failing_degree, Some(4));
    }

    #[test]
    fn odd_classes_fail_at_odd_primes() {
        let a = MonomialAlgebraPresentation {
            field: f(3),
            generators: letters(&[("e", 3)]),
            relations: vec![],
            commutative: true,
        }
        .build(12)
        .unwrap();
        assert_eq!(polynomial_criterion(&a).unwrap().failing_degree, Some(3));
    }

    #[test]
    fn integral_criterion_per_prime() {
        let pres = MonomialAlgebraPresentation {
            field: Field::Rational,
            generators: letters(&[("y", 2), ("z", 2)]),
            relations: vec![MonomialRelation::Product(0, 1)],
            commutative: true,
        };
        let verdicts = polynomial_criterion_integral(&pres, &[2, 3, 5], 12).unwrap();
        assert_eq!(verdicts.len(), 3);
        assert!(verdicts.iter().all(|(_, v)| v.polynomial));
    }
}
