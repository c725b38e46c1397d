//! Degreewise verification of the connected bialgebra axioms.

use std::fmt;

use serde::Serialize;

use crate::linear::Tensor2;

use super::algebra::{koszul, Bialgebra, GradedAlgebra, GradedCoalgebra, Product};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    Compatibility,
    Commutativity,
    Cocommutativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Compatibility => "compatibility",
            Axiom::Commutativity => "commutativity",
            Axiom::Cocommutativity => "cocommutativity",
        };
        f.write_str(s)
    }
}

/// One failing instance: the basis indices involved and their total degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub degree: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Lowest degree at which `axiom` fails.
    pub fn first_failure(&self, axiom: Axiom) -> Option<usize> {
        self.failures
            .iter()
            .filter(|f| f.axiom == axiom)
            .map(|f| f.degree)
            .min()
    }

    fn push(&mut self, axiom: Axiom, indices: Vec<usize>, degree: usize) {
        self.failures.push(AxiomFailure { axiom, indices, degree });
    }
}

/// Associativity, unit and the declared commutativity of an algebra.
pub fn check_algebra(a: &GradedAlgebra) -> AxiomReport {
    let mut report = AxiomReport::default();
    let n = a.len();
    let bound = a.bound();
    if let Product::Table(t) = &a.product {
        for ((i, j), v) in t {
            let d = a.degree(*i) + a.degree(*j);
            if *i == 0 || *j == 0 || v.keys().any(|k| a.degree(*k) != d) {
                report.push(Axiom::Unit, vec![*i, *j], d);
            }
        }
        for i in 1..n {
            for j in 1..n {
                let dij = a.degree(i) + a.degree(j);
                if dij > bound {
                    break;
                }
                let ij = a.mul(i, j);
                for k in 1..n {
                    let d = dij + a.degree(k);
                    if d > bound {
                        break;
                    }
                    let left = a.mul_vec(&ij, &a.basis_vector(k));
                    let right = a.mul_vec(&a.basis_vector(i), &a.mul(j, k));
                    if left != right {
                        report.push(Axiom::Associativity, vec![i, j, k], d);
                    }
                }
            }
        }
    }
    if a.commutative {
        for i in 1..n {
            for j in i..n {
                let d = a.degree(i) + a.degree(j);
                if d > bound {
                    break;
                }
                let sign = a.field.sign(koszul(a.degree(i), a.degree(j)));
                if a.mul(i, j) != a.mul(j, i).scaled(&sign) {
                    report.push(Axiom::Commutativity, vec![i, j], d);
                }
            }
        }
    }
    report
}

/// Coassociativity, counit and the declared cocommutativity of a coalgebra.
pub fn check_coalgebra(c: &GradedCoalgebra) -> AxiomReport {
    let mut report = AxiomReport::default();
    let one = c.field.one();
    for i in 0..c.len() {
        let d = c.degree(i);
        let delta = c.coproduct(i);
        let counit_ok = if i == 0 {
            *delta == Tensor2::single((0, 0), one.clone())
        } else {
            delta.coeff(&(i, 0)) == Some(&one)
                && delta.coeff(&(0, i)) == Some(&one)
                && delta.iter().all(|((a, b), _)| {
                    c.degree(*a) + c.degree(*b) == d
                        && ((*a != 0 && *b != 0) || (*a, *b) == (i, 0) || (*a, *b) == (0, i))
                })
        };
        if !counit_ok {
            report.push(Axiom::Counit, vec![i], d);
        }
        if c.left_iterate(i) != c.right_iterate(i) {
            report.push(Axiom::Coassociativity, vec![i], d);
        }
        if c.cocommutative && c.twist(delta) != *delta {
            report.push(Axiom::Cocommutativity, vec![i], d);
        }
    }
    report
}

/// All bialgebra axioms, listing every failing tuple of basis indices.
///
/// For free algebras compatibility is checked on products `w·g` with `g` a
/// generator, which implies it on all products.
pub fn check_axioms(h: &Bialgebra) -> AxiomReport {
    let mut report = check_algebra(&h.algebra);
    report.failures.extend(check_coalgebra(&h.coalgebra).failures);
    let n = h.len();
    let bound = h.bound();
    let right_factors: Vec<usize> = match (&h.algebra.product, &h.words) {
        (Product::Concat(_), Some(words)) => (0..words.letters().len())
            .filter_map(|l| words.letter_word(l))
            .collect(),
        _ => (1..n).collect(),
    };
    for i in 1..n {
        for &j in &right_factors {
            let d = h.degree(i) + h.degree(j);
            if d > bound {
                continue;
            }
            let lhs = h.coproduct_vec(&h.mul(i, j));
            let rhs = h.algebra.mul_tensor(h.coproduct(i), h.coproduct(j));
            if lhs != rhs {
                report.push(Axiom::Compatibility, vec![i, j], d);
            }
        }
    }
    report.failures.sort_by_key(|f| (f.degree, f.indices.clone()));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::FreePresentation;
    use crate::linear::Field;

    const H12: &str = "xy@x + x^3@x + y@y + x@x^3 + x@xy";

    fn h12(dz: &str) -> Bialgebra {
        let f = Field::prime(2).unwrap();
        FreePresentation::parse(f, &[("x", 1), ("y", 2), ("z", 4)], &[("y", "x@x"), ("z", dz)])
            .unwrap()
            .build(8)
            .unwrap()
    }

    #[test]
    fn h12_passes() {
        let report = check_axioms(&h12(H12));
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn dropping_y_tensor_y_breaks_coassociativity_in_degree_four() {
        let report = check_axioms(&h12("xy@x + x^3@x + x@x^3 + x@xy"));
        assert_eq!(report.first_failure(Axiom::Coassociativity), Some(4));
    }

    #[test]
    fn loop_space_model_is_cocommutative() {
        let f = Field::prime(2).unwrap();
        let h = FreePresentation::parse(f, &[("x", 1), ("z", 4)], &[("z", "x^2@x^2")])
            .unwrap()
            .build(12)
            .unwrap();
        assert!(h.is_cocommutative());
        assert!(check_axioms(&h).passed());
    }

    #[test]
    fn declared_commutativity_is_checked() {
        let mut h = h12(H12);
        h.algebra.commutative = true;
        let report = check_axioms(&h);
        assert_eq!(report.first_failure(Axiom::Commutativity), Some(3));
    }
}
