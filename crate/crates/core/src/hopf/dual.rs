//! Graded duals of finite-type bialgebras.

use std::collections::HashMap;

use crate::linear::{Tensor2, Vector};

use super::algebra::{Bialgebra, GradedAlgebra, GradedCoalgebra, Product, Shape};

/// The dual bialgebra on the dual basis (same labels): the product is the
/// transpose of `Δ` and the coproduct is the transpose of `∇`.
pub fn dualize_hopf(h: &Bialgebra) -> Bialgebra {
    let field = h.field();
    let basis = h.algebra.basis.clone();
    let n = h.len();

    let mut table: HashMap<(usize, usize), Vector> = HashMap::new();
    for x in 1..n {
        for ((a, b), c) in h.reduced(x).iter() {
            table.entry((*a, *b)).or_default().add_term(x, c.clone());
        }
    }
    table.retain(|_, v| !v.is_zero());

    let mut coproducts: Vec<Tensor2> = (0..n)
        .map(|x| {
            let mut t = Tensor2::single((x, 0), field.one());
            if x != 0 {
                t.add_term((0, x), field.one());
            }
            t
        })
        .collect();
    match (&h.algebra.product, &h.words) {
        (Product::Concat(_), Some(words)) => {
            for x in 1..n {
                let w = words.word(x);
                for cut in 1..w.len() {
                    let a = words.index_of(&w[..cut]).expect("prefix is a word");
                    let b = words.index_of(&w[cut..]).expect("suffix is a word");
                    coproducts[x].add_term((a, b), field.one());
                }
            }
        }
        (Product::Concat(_), None) => unreachable!("concatenation needs a word basis"),
        (Product::Table(t), _) => {
            for ((a, b), v) in t {
                for (x, c) in v.iter() {
                    coproducts[*x].add_term((*a, *b), c.clone());
                }
            }
        }
    }

    let algebra = GradedAlgebra {
        field,
        basis: basis.clone(),
        product: Product::Table(table),
        commutative: h.coalgebra.cocommutative,
        complete: h.coalgebra.complete,
    };
    let coalgebra = GradedCoalgebra {
        field,
        basis,
        coproducts,
        cocommutative: h.algebra.commutative,
        complete: h.algebra.complete,
    };
    let shape = match h.shape {
        Shape::Free => Shape::Cofree,
        Shape::Cofree => Shape::Free,
        Shape::Plain => Shape::Plain,
    };
    Bialgebra {
        algebra,
        coalgebra,
        words: h.words.clone(),
        shape,
    }
}

/// The dual coalgebra of an algebra, on the same labels.
pub fn dual_coalgebra(a: &GradedAlgebra) -> GradedCoalgebra {
    let field = a.field;
    let n = a.len();
    let mut coproducts: Vec<Tensor2> = (0..n)
        .map(|x| {
            let mut t = Tensor2::single((x, 0), field.one());
            if x != 0 {
                t.add_term((0, x), field.one());
            }
            t
        })
        .collect();
    for i in 1..n {
        for j in 1..n {
            if a.degree(i) + a.degree(j) > a.bound() {
                break;
            }
            for (x, c) in a.mul(i, j).iter() {
                coproducts[*x].add_term((i, j), c.clone());
            }
        }
    }
    GradedCoalgebra {
        field,
        basis: a.basis.clone(),
        coproducts,
        cocommutative: a.commutative,
        complete: a.complete,
    }
}

/// The dual algebra of a coalgebra, on the same labels.
pub fn dual_algebra(c: &GradedCoalgebra) -> GradedAlgebra {
    let mut table: HashMap<(usize, usize), Vector> = HashMap::new();
    for x in 1..c.len() {
        for ((a, b), coeff) in c.reduced(x).iter() {
            table.entry((*a, *b)).or_default().add_term(x, coeff.clone());
        }
    }
    table.retain(|_, v| !v.is_zero());
    GradedAlgebra {
        field: c.field,
        basis: c.basis.clone(),
        product: Product::Table(table),
        commutative: c.cocommutative,
        complete: c.complete,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::axioms::check_axioms;
    use crate::hopf::parse::letters;
    use crate::hopf::structure::{frobenius_module, verschiebung, verschiebung_module};
    use crate::hopf::{FreePresentation, MonomialAlgebraPresentation, MonomialRelation};
    use crate::linear::Field;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn h2() -> Bialgebra {
        FreePresentation::parse(f2(), &[("x", 1), ("y", 2), ("z", 4)], &[("z", "x^2@x^2")])
            .unwrap()
            .build(8)
            .unwrap()
    }

    fn table_of(a: &GradedAlgebra) -> Vec<((usize, usize), Vector)> {
        let mut out = Vec::new();
        for i in 0..a.len() {
            for j in 0..a.len() {
                if a.degree(i) + a.degree(j) <= a.bound() {
                    out.push(((i, j), a.mul(i, j)));
                }
            }
        }
        out
    }

    #[test]
    fn double_dual_has_the_same_structure_constants() {
        let h = h2();
        let dd = dualize_hopf(&dualize_hopf(&h));
        assert_eq!(table_of(&dd.algebra), table_of(&h.algebra));
        assert_eq!(dd.coalgebra.coproducts, h.coalgebra.coproducts);
        assert_eq!(dd.shape, h.shape);
    }

    #[test]
    fn dual_swaps_flags_and_passes_axioms() {
        let h = h2();
        let d = dualize_hopf(&h);
        assert!(d.is_commutative() && !d.is_cocommutative());
        assert_eq!(d.shape, Shape::Cofree);
        let report = check_axioms(&d);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn divided_powers_verschiebung() {
        let a = MonomialAlgebraPresentation {
            field: f2(),
            generators: letters(&[("y", 2)]),
            relations: vec![MonomialRelation::Power(0, 4)],
            commutative: true,
        }
        .build(12)
        .unwrap();
        let c = dual_coalgebra(&a);
        let v = verschiebung(&c).unwrap();
        // γ_k is the dual of y^k, at index k.
        assert_eq!(v[2], Vector::single(1, f2().one()));
        assert!(v[1].is_zero() && v[3].is_zero());
        let vm = verschiebung_module(&c).unwrap();
        let fm = frobenius_module(&a).unwrap();
        for d in 1..=3 {
            assert_eq!(vm.block(d), fm.block(d).map(|m| m.transpose()).as_ref());
        }
    }

    #[test]
    fn v_is_transpose_of_f_on_odd_primes() {
        let f3 = Field::prime(3).unwrap();
        let a = MonomialAlgebraPresentation {
            field: f3,
            generators: letters(&[("u", 2), ("w", 4)]),
            relations: vec![MonomialRelation::Power(0, 9)],
            commutative: true,
        }
        .build(12)
        .unwrap();
        let c = dual_coalgebra(&a);
        let vm = verschiebung_module(&c).unwrap();
        let fm = frobenius_module(&a).unwrap();
        for d in 1..=4 {
            assert_eq!(vm.block(d), fm.block(d).map(|m| m.transpose()).as_ref(), "degree {d}");
        }
    }

    #[test]
    fn primitive_tensor_algebra_over_q_dualizes() {
        let h = FreePresentation::primitive(Field::Rational, letters(&[("a", 1), ("b", 1)]))
            .build(4)
            .unwrap();
        let d = dualize_hopf(&h);
        assert!(check_axioms(&d).passed());
    }
}
