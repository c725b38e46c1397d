//! Splitness: V-equivariant sections of `H̄ → QH`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{HopfError, Result};
use crate::hopf::{indecomposables, verschiebung, Bialgebra, Indecomposables};
use crate::linear::{AffineSystem, Vector};

/// Outcome of [`is_split`]. A section is given by the images `s(q)` in `H`
/// of the `Q` basis; on failure the lowest degree whose equations are
/// inconsistent is reported.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SplitnessCertificate {
    pub split: bool,
    #[serde(skip)]
    pub section: Option<Vec<Vector>>,
    pub failing_degree: Option<usize>,
}

fn combine(images: &[Vector], v: &Vector) -> Vector {
    let mut out = Vector::new();
    for (i, c) in v.iter() {
        out.add_scaled(&images[*i], c);
    }
    out
}

/// Searches for a section `s: QH → H̄` with `π∘s = id` and `V∘s = s∘V`.
///
/// Each `s(q)` is the chosen representative of `q` plus an unknown
/// decomposable of the same degree; equations are added degree by degree.
pub fn is_split(h: &Bialgebra) -> Result<SplitnessCertificate> {
    let q = indecomposables(h)?;
    split_with(h, &q)
}

pub fn split_with(h: &Bialgebra, q: &Indecomposables) -> Result<SplitnessCertificate> {
    let vq = q.v_module()?;
    let p = vq.prime() as usize;
    let vh = verschiebung(&h.coalgebra)?;
    let field = h.field();

    let dec: Vec<Vec<Vector>> = (0..=h.bound())
        .map(|d| q.decomposables(d).rows().cloned().collect())
        .collect();
    let mut offsets = Vec::with_capacity(q.len());
    let mut total = 0;
    for qi in 0..q.len() {
        offsets.push(total);
        total += dec[q.degree(qi)].len();
    }

    let mut system = AffineSystem::new(field, total);
    let mut failing_degree = None;
    'degrees: for big in 1..=h.bound() {
        if big % p != 0 {
            continue;
        }
        let d = big / p;
        for qi in q.indices_in_degree(big) {
            let vq_of = q.v_of(qi)?;
            // Equation in H_d: V(σq + Σ c δ) − Σ_{q'} a_{q'} (σq' + Σ c' δ') = 0.
            let mut rows: BTreeMap<usize, Vector> = BTreeMap::new();
            let mut constant = vh[q.section(qi)].clone();
            for (qp, a) in vq_of.iter() {
                constant.add_term(q.section(*qp), -a);
            }
            for (k, delta) in dec[big].iter().enumerate() {
                for (b, c) in combine(&vh, delta).iter() {
                    rows.entry(*b).or_default().add_term(offsets[qi] + k, c.clone());
                }
            }
            for (qp, a) in vq_of.iter() {
                for (k, delta) in dec[d].iter().enumerate() {
                    for (b, c) in delta.iter() {
                        rows.entry(*b).or_default().add_term(offsets[*qp] + k, -(a * c));
                    }
                }
            }
            for b in constant.keys() {
                rows.entry(*b).or_default();
            }
            for (b, row) in &rows {
                let rhs = constant.coeff(b).map(|c| -c).unwrap_or_else(|| field.zero());
                if !system.add(row, &rhs) {
                    failing_degree = Some(big);
                    break 'degrees;
                }
            }
        }
    }
    let Some(solution) = system.solve() else {
        return Ok(SplitnessCertificate {
            split: false,
            section: None,
            failing_degree,
        });
    };
    let section: Vec<Vector> = (0..q.len())
        .map(|qi| {
            let mut s = h.algebra.basis_vector(q.section(qi));
            for (k, delta) in dec[q.degree(qi)].iter().enumerate() {
                if let Some(c) = solution.particular.coeff(&(offsets[qi] + k)) {
                    s.add_scaled(delta, c);
                }
            }
            s
        })
        .collect();
    verify_section(h, q, &vh, &section)?;
    Ok(SplitnessCertificate {
        split: true,
        section: Some(section),
        failing_degree: None,
    })
}

fn verify_section(h: &Bialgebra, q: &Indecomposables, vh: &[Vector], section: &[Vector]) -> Result<()> {
    for (qi, s) in section.iter().enumerate() {
        if q.project(s) != Vector::single(qi, h.field().one()) {
            return Err(HopfError::invariant(
                "theorems::is_split",
                "section is not a right inverse of π",
            ));
        }
        let lhs = combine(vh, s);
        let rhs = combine(section, &q.v_of(qi)?);
        if lhs != rhs {
            return Err(HopfError::invariant(
                "theorems::is_split",
                "section does not commute with V",
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::FreePresentation;
    use crate::linear::Field;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn h1_is_split() {
        let h = FreePresentation::parse(f2(), &[("x", 1), ("y", 2), ("z", 4)], &[("z", "y@y")])
            .unwrap()
            .build(8)
            .unwrap();
        let cert = is_split(&h).unwrap();
        assert!(cert.split);
        assert_eq!(cert.section.unwrap().len(), 3);
    }

    #[test]
    fn witt_h12_is_split() {
        let h = FreePresentation::parse(
            f2(),
            &[("x", 1), ("y", 2), ("z", 4)],
            &[("y", "x@x"), ("z", "xy@x + x^3@x + y@y + x@x^3 + x@xy")],
        )
        .unwrap()
        .build(8)
        .unwrap();
        assert!(is_split(&h).unwrap().split);
    }

    #[test]
    fn h2_fails_in_degree_four() {
        let h = FreePresentation::parse(f2(), &[("x", 1), ("y", 2), ("z", 4)], &[("z", "x^2@x^2")])
            .unwrap()
            .build(8)
            .unwrap();
        let cert = is_split(&h).unwrap();
        assert!(!cert.split);
        assert_eq!(cert.failing_degree, Some(4));
    }

    #[test]
    fn primitive_tensor_algebra_is_split() {
        let h = FreePresentation::parse(f2(), &[("x", 1)], &[])
            .unwrap()
            .build(6)
            .unwrap();
        assert!(is_split(&h).unwrap().split);
    }
}
