//! Borel decomposition of a commutative algebra into monogenic factors.

use crate::error::{HopfError, Result};
use crate::fv::{Decomposition, Extent, Summand};
use crate::hopf::GradedAlgebra;
use crate::linear::{rank_of, Echelon, Field, TruncatedSeries, Vector};

/// Factors `A(n,j)` of an algebra assumed to underlie a commutative Hopf
/// algebra in characteristic `p`: `A(n,j) = k[x]/(x^{p^{j+1}})` with
/// `|x| = n`, and `A(n,0) = Λ(x)` for odd `n` at odd `p`.
///
/// For each `n`, the generators in degree `n` are a basis of `A_n` modulo
/// the ideal generated by lower degrees, and the number of them whose
/// `p^i`-th power survives in that quotient fixes the heights. Heights that
/// reach past the bound are reported `at_least`. The product of the factor
/// series must reproduce the series of `A`.
pub fn borel_decomposition(a: &GradedAlgebra) -> Result<Decomposition> {
    let Field::Prime(p) = a.field else {
        return Err(HopfError::Domain(
            "the Borel decomposition needs characteristic p".into(),
        ));
    };
    if !a.commutative {
        return Err(HopfError::Domain(
            "the Borel decomposition needs a commutative algebra".into(),
        ));
    }
    let p = p as usize;
    let bound = a.bound();
    let basis = &a.basis;
    let mut ideal: Vec<Echelon> = (0..=bound).map(|_| Echelon::new(a.field)).collect();
    let mut out = Decomposition::new(bound);

    for n in 1..=bound {
        let generators: Vec<usize> = basis.range(n).filter(|i| !ideal[n].is_pivot(*i)).collect();
        if !generators.is_empty() {
            if p != 2 && n % 2 == 1 {
                out.add(Summand::finite(n, 0), generators.len());
            } else {
                let mut ranks = vec![generators.len()];
                let mut powers: Vec<Vector> = generators.iter().map(|g| a.basis_vector(*g)).collect();
                let mut d = n;
                while d * p <= bound {
                    d *= p;
                    powers = powers.iter().map(|x| a.pow_vec(x, p)).collect();
                    let reduced: Vec<Vector> = powers.iter().map(|x| ideal[d].reduce_vector(x)).collect();
                    ranks.push(rank_of(a.field, &reduced));
                }
                let top = ranks.len() - 1;
                for j in 0..top {
                    out.add(Summand::finite(n, j), ranks[j] - ranks[j + 1]);
                }
                let last = if a.complete {
                    Summand::finite(n, top)
                } else {
                    Summand::at_least(n, top)
                };
                out.add(last, ranks[top]);
            }
        }
        for i in basis.range(n) {
            for j in 0..a.len() {
                let e = n + a.degree(j);
                if e > bound {
                    break;
                }
                ideal[e].insert_homogeneous(&a.mul(i, j));
            }
        }
    }

    let expected = TruncatedSeries::from_coeffs(bound, &basis.dims().iter().map(|d| *d as i64).collect::<Vec<_>>());
    let produced = factor_series(&out, p)?;
    if produced != expected {
        let degree = (0..=bound)
            .find(|d| produced.coeff(*d) != expected.coeff(*d))
            .unwrap_or(0);
        return Err(HopfError::infeasible(
            "theorems::borel_decomposition",
            degree,
            "factor series differs from the algebra's; the input is not the algebra of a Hopf algebra",
        ));
    }
    Ok(out)
}

/// Product of the Poincaré series of the factors, up to the bound.
pub fn factor_series(factors: &Decomposition, p: usize) -> Result<TruncatedSeries> {
    let bound = factors.bound;
    let mut total = TruncatedSeries::one(bound);
    for s in factors.summands() {
        let series = if p != 2 && s.n % 2 == 1 {
            TruncatedSeries::one(bound).add(&TruncatedSeries::monomial(bound, s.n, 1))?
        } else {
            let height = p.pow(s.j.observed() as u32 + 1);
            let mut f = TruncatedSeries::zero(bound);
            let mut m = 0;
            while s.n * m <= bound && (matches!(s.j, Extent::AtLeast(_)) || m < height) {
                f.set_coeff(s.n * m, 1);
                m += 1;
            }
            f
        };
        total = total.mul(&series)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_cofree::build_jvee;
    use crate::hopf::parse::letters;
    use crate::hopf::{MonomialAlgebraPresentation, MonomialRelation};

    fn algebra(p: u32, gens: &[(&str, usize)], relations: Vec<MonomialRelation>, bound: usize) -> GradedAlgebra {
        MonomialAlgebraPresentation {
            field: Field::prime(p).unwrap(),
            generators: letters(gens),
            relations,
            commutative: true,
        }
        .build(bound)
        .unwrap()
    }

    #[test]
    fn polynomial_algebra_is_one_open_factor() {
        let a = algebra(2, &[("y", 2)], vec![], 12);
        assert_eq!(
            borel_decomposition(&a).unwrap(),
            Decomposition::from_summands(12, &[Summand::at_least(2, 2)])
        );
    }

    #[test]
    fn truncated_algebra_is_closed() {
        let a = algebra(2, &[("y", 2)], vec![MonomialRelation::Power(0, 4)], 12);
        assert_eq!(
            borel_decomposition(&a).unwrap(),
            Decomposition::from_summands(12, &[Summand::finite(2, 1)])
        );
    }

    #[test]
    fn odd_generators_are_exterior_at_odd_primes() {
        let a = algebra(3, &[("e", 3), ("y", 2)], vec![], 12);
        let d = borel_decomposition(&a).unwrap();
        assert_eq!(d.multiplicity(&Summand::finite(3, 0)), 1);
        assert_eq!(d.multiplicity(&Summand::at_least(2, 1)), 1);
    }

    #[test]
    fn quasi_shuffles_on_a_truncated_algebra() {
        let a = algebra(2, &[("y", 2)], vec![MonomialRelation::Power(0, 3)], 16);
        let j = build_jvee(&a, 16).unwrap();
        let d = borel_decomposition(&j.algebra).unwrap();
        assert!(d.multiplicity(&Summand::finite(2, 1)) >= 1, "{d}");
        assert!(d.multiplicity(&Summand::finite(4, 1)) >= 1, "{d}");
        let produced = factor_series(&d, 2).unwrap();
        let dims: Vec<i64> = j.basis().dims().iter().map(|x| *x as i64).collect();
        assert_eq!(produced, TruncatedSeries::from_coeffs(16, &dims));
    }

    #[test]
    fn non_hopf_algebras_fail_the_bookkeeping() {
        // k[y]/(y³) at p = 2 is not the algebra of a Hopf algebra.
        let a = algebra(2, &[("y", 2)], vec![MonomialRelation::Power(0, 3)], 12);
        assert!(matches!(
            borel_decomposition(&a),
            Err(HopfError::Infeasible { degree: 6, .. })
        ));
    }
}
