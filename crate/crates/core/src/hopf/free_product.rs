//! Free products (coproducts in the category of connected Hopf algebras).

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{HopfError, Result};
use crate::linear::{Tensor2, Vector};

use super::algebra::{Bialgebra, GradedAlgebra, GradedCoalgebra, Product, Shape};
use super::basis::Basis;
use super::build::{FreePresentation, WordTensor};

impl Bialgebra {
    /// The presentation of a bialgebra built on a free word basis.
    pub fn free_presentation(&self) -> Option<FreePresentation> {
        if self.shape != Shape::Free {
            return None;
        }
        let words = self.words.as_ref()?;
        let mut reduced = Vec::with_capacity(words.letters().len());
        for l in 0..words.letters().len() {
            let t: WordTensor = match words.letter_word(l) {
                Some(g) => self
                    .reduced(g)
                    .iter()
                    .map(|((a, b), c)| ((words.word(*a).to_vec(), words.word(*b).to_vec()), c.clone()))
                    .collect(),
                None => WordTensor::new(),
            };
            reduced.push(t);
        }
        Some(FreePresentation {
            field: self.field(),
            letters: words.letters().to_vec(),
            reduced,
        })
    }
}

/// Free product of cocommutative bialgebras over the same field and bound.
///
/// Free factors combine their generators. Other factors use the basis of
/// alternating words in the positive parts, with adjacent pieces from the
/// same factor multiplied out.
pub fn free_product(factors: &[Bialgebra]) -> Result<Bialgebra> {
    let Some(first) = factors.first() else {
        return Err(HopfError::Validation("a free product needs at least one factor".into()));
    };
    let (field, bound) = (first.field(), first.bound());
    for h in factors {
        if h.field() != field || h.bound() != bound {
            return Err(HopfError::Validation(
                "free product factors must share field and bound".into(),
            ));
        }
        if !h.is_cocommutative() {
            return Err(HopfError::Domain("free product factors must be cocommutative".into()));
        }
    }
    let factors: Vec<&Bialgebra> = factors.iter().filter(|h| h.len() > 1).collect();
    if factors.is_empty() {
        return Ok(first.clone());
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    if let Some(presentations) = factors
        .iter()
        .map(|h| h.free_presentation())
        .collect::<Option<Vec<_>>>()
    {
        let mut letters = Vec::new();
        let mut reduced = Vec::new();
        for pres in presentations {
            let offset = letters.len();
            letters.extend(pres.letters);
            reduced.extend(pres.reduced.into_iter().map(|t| {
                t.iter()
                    .map(|((a, b), c)| {
                        let shift = |w: &Vec<usize>| w.iter().map(|l| l + offset).collect::<Vec<_>>();
                        ((shift(a), shift(b)), c.clone())
                    })
                    .collect()
            }));
        }
        let mut seen = HashSet::new();
        if let Some(l) = letters.iter().find(|l| !seen.insert(l.label.clone())) {
            return Err(HopfError::Validation(format!(
                "generator {} occurs in two factors",
                l.label
            )));
        }
        return FreePresentation {
            field,
            letters,
            reduced,
        }
        .build(bound);
    }
    alternating_product(&factors)
}

/// A piece of an alternating word: `(factor, positive basis index)`.
type Piece = (usize, usize);

fn alternating_product(factors: &[&Bialgebra]) -> Result<Bialgebra> {
    let field = factors[0].field();
    let bound = factors[0].bound();
    let piece_degree = |p: &Piece| factors[p.0].degree(p.1);

    let mut by_degree: Vec<Vec<Vec<Piece>>> = vec![Vec::new(); bound + 1];
    by_degree[0].push(Vec::new());
    for d in 1..=bound {
        let mut ws = Vec::new();
        for (f, h) in factors.iter().enumerate() {
            for i in 1..h.len() {
                let e = h.degree(i);
                if e > d {
                    break;
                }
                for rest in &by_degree[d - e] {
                    if rest.first().is_some_and(|p| p.0 == f) {
                        continue;
                    }
                    let mut w = vec![(f, i)];
                    w.extend_from_slice(rest);
                    ws.push(w);
                }
            }
        }
        ws.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        by_degree[d] = ws;
    }
    let words: Vec<Vec<Piece>> = by_degree.into_iter().flatten().collect();
    let index: HashMap<Vec<Piece>, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let entries = words
        .iter()
        .map(|w| {
            let label = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|p| factors[p.0].label(p.1)).collect::<Vec<_>>().join("·")
            };
            (label, w.iter().map(piece_degree).sum())
        })
        .collect();
    let basis = Arc::new(Basis::new(bound, entries)?);

    // Product of alternating words, merging equal-factor ends.
    let multiply = |u: &[Piece], v: &[Piece]| -> Vector {
        match (u.last(), v.first()) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                let mut out = Vector::new();
                for (k, c) in factors[a.0].mul(a.1, b.1).iter() {
                    let mut w = u[..u.len() - 1].to_vec();
                    w.push((a.0, *k));
                    w.extend_from_slice(&v[1..]);
                    out.add_term(index[&w], c.clone());
                }
                out
            }
            _ => {
                let w = [u, v].concat();
                Vector::single(index[&w], field.one())
            }
        }
    };
    let mut table = HashMap::new();
    for i in 1..words.len() {
        for j in 1..words.len() {
            if basis.degree(i) + basis.degree(j) > bound {
                continue;
            }
            let v = multiply(&words[i], &words[j]);
            if !v.is_zero() {
                table.insert((i, j), v);
            }
        }
    }
    let commutative = false;
    let algebra = GradedAlgebra {
        field,
        basis: basis.clone(),
        product: Product::Table(table),
        commutative,
        complete: false,
    };

    let embed = |f: usize, t: &Tensor2| -> Tensor2 {
        let lift = |i: usize| if i == 0 { 0 } else { index[&vec![(f, i)]] };
        t.iter().map(|((a, b), c)| ((lift(*a), lift(*b)), c.clone())).collect()
    };
    let mut coproducts: Vec<Tensor2> = Vec::with_capacity(words.len());
    for (i, w) in words.iter().enumerate() {
        let delta = match w.len() {
            0 => Tensor2::single((0, 0), field.one()),
            1 => embed(w[0].0, factors[w[0].0].coproduct(w[0].1)),
            n => {
                let prefix = index[&w[..n - 1].to_vec()];
                let last = w[n - 1];
                algebra.mul_tensor(&coproducts[prefix], &embed(last.0, factors[last.0].coproduct(last.1)))
            }
        };
        debug_assert_eq!(coproducts.len(), i);
        coproducts.push(delta);
    }
    let coalgebra = GradedCoalgebra {
        field,
        basis,
        coproducts,
        cocommutative: true,
        complete: false,
    };
    Bialgebra::new(algebra, coalgebra, None, Shape::Plain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fv::{Decomposition, Summand};
    use crate::hopf::axioms::check_axioms;
    use crate::hopf::parse::letters;
    use crate::hopf::structure::indecomposables;
    use crate::hopf::{MonomialAlgebraPresentation, MonomialRelation};
    use crate::linear::Field;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn q_classes(h: &Bialgebra) -> Decomposition {
        indecomposables(h).unwrap().v_module().unwrap().classify()
    }

    #[test]
    fn free_factors_reproduce_h2() {
        let ty = FreePresentation::parse(f2(), &[("y", 2)], &[])
            .unwrap()
            .build(8)
            .unwrap();
        let txz = FreePresentation::parse(f2(), &[("x", 1), ("z", 4)], &[("z", "x^2@x^2")])
            .unwrap()
            .build(8)
            .unwrap();
        let h = free_product(&[ty, txz]).unwrap();
        assert!(check_axioms(&h).passed());
        let expected = Decomposition::from_summands(
            8,
            &[Summand::finite(1, 0), Summand::finite(2, 0), Summand::finite(4, 0)],
        );
        assert_eq!(q_classes(&h), expected);
    }

    #[test]
    fn unit_factor_is_neutral() {
        let k = FreePresentation::parse(f2(), &[], &[]).unwrap().build(6).unwrap();
        let h = FreePresentation::parse(f2(), &[("x", 1), ("y", 2)], &[("y", "x@x")])
            .unwrap()
            .build(6)
            .unwrap();
        assert_eq!(free_product(&[h.clone(), k]).unwrap(), h);
    }

    fn truncated_polynomial() -> Bialgebra {
        MonomialAlgebraPresentation {
            field: f2(),
            generators: letters(&[("y", 2)]),
            relations: vec![MonomialRelation::Power(0, 4)],
            commutative: true,
        }
        .primitively_generated(8)
        .unwrap()
    }

    #[test]
    fn q_of_a_free_product_is_the_sum() {
        let a = truncated_polynomial();
        assert!(check_axioms(&a).passed());
        let b = FreePresentation::parse(f2(), &[("x", 1), ("z", 4)], &[("z", "x^2@x^2")])
            .unwrap()
            .build(8)
            .unwrap();
        let prod = free_product(&[a.clone(), b.clone()]).unwrap();
        let report = check_axioms(&prod);
        assert!(report.passed(), "{:?}", report.failures);
        let lhs = q_classes(&prod);
        let rhs = q_classes(&a).union(&q_classes(&b));
        assert_eq!(lhs.summands(), rhs.summands());
    }
}
