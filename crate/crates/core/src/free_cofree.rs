//! The free Hopf algebra `J(C)` on a cocommutative coalgebra and the cofree
//! Hopf algebra `J∨(A)` on a commutative algebra.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{HopfError, Result};
use crate::hopf::{
    Bialgebra, FreePresentation, GradedAlgebra, GradedCoalgebra, Letter, Product, Shape, WordBasis, WordStyle,
    WordTensor,
};
use crate::linear::{Tensor2, Vector};

/// Order-preserving injections `α: l → n`, `β: m → n` whose images cover
/// `n`. Positions are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SurjectionPair {
    pub n: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl SurjectionPair {
    /// Number of slots hit by both maps.
    pub fn overlaps(&self) -> usize {
        self.alpha.len() + self.beta.len() - self.n
    }
}

/// Every pair for `n` from `max(l, m)` to `l + m`, grouped by increasing `n`.
pub fn enumerate_surjection_pairs(l: usize, m: usize) -> Vec<SurjectionPair> {
    // Each slot holds a letter of the first word, of the second, or both.
    fn go(l: usize, m: usize, alpha: &mut Vec<usize>, beta: &mut Vec<usize>, n: usize, out: &mut Vec<SurjectionPair>) {
        if alpha.len() == l && beta.len() == m {
            out.push(SurjectionPair {
                n,
                alpha: alpha.clone(),
                beta: beta.clone(),
            });
            return;
        }
        if alpha.len() < l {
            alpha.push(n);
            go(l, m, alpha, beta, n + 1, out);
            alpha.pop();
        }
        if beta.len() < m {
            beta.push(n);
            go(l, m, alpha, beta, n + 1, out);
            beta.pop();
        }
        if alpha.len() < l && beta.len() < m {
            alpha.push(n);
            beta.push(n);
            go(l, m, alpha, beta, n + 1, out);
            alpha.pop();
            beta.pop();
        }
    }
    let mut out = Vec::new();
    go(l, m, &mut Vec::new(), &mut Vec::new(), 0, &mut out);
    out.sort();
    out
}

/// The `(l, m)` component of deconcatenation: the split of `w` after `l`
/// letters.
pub fn deconcat_component(w: &[usize], l: usize, m: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if w.len() != l + m {
        return Err(HopfError::Domain(format!(
            "a word of length {} has no ({l}, {m}) component",
            w.len()
        )));
    }
    Ok((w[..l].to_vec(), w[l..].to_vec()))
}

/// Letters for the positive basis elements of a connected space.
fn letters_of(labels: &[String], degree: impl Fn(usize) -> usize) -> Vec<Letter> {
    (1..labels.len())
        .map(|i| Letter {
            label: labels[i].clone(),
            degree: degree(i),
        })
        .collect()
}

/// `J(C)`: the tensor algebra on `C̄` with the coproduct extending `Δ_C`.
/// Letter `i` is the basis element `i + 1` of `C`.
pub fn build_j(c: &GradedCoalgebra, bound: usize) -> Result<Bialgebra> {
    if !c.cocommutative {
        return Err(HopfError::Domain("J(C) needs a cocommutative coalgebra".into()));
    }
    let letters = letters_of(c.basis.labels(), |i| c.degree(i));
    let reduced = (1..c.len())
        .map(|i| {
            c.reduced(i)
                .iter()
                .map(|((a, b), coeff)| ((vec![a - 1], vec![b - 1]), coeff.clone()))
                .collect::<WordTensor>()
        })
        .collect();
    FreePresentation {
        field: c.field,
        letters,
        reduced,
    }
    .build_styled(bound, WordStyle::Bracket)
}

/// `J∨(A)`: the deconcatenation coalgebra on words in `Ā` with the
/// quasi-shuffle product. Letter `i` is the basis element `i + 1` of `A`.
///
/// Signs: a term carries `(−1)^{|u_i||v_j|}` for every letter `v_j` placed
/// strictly before `u_i`; an overlap slot holds `u_i·v_j` in that order.
pub fn build_jvee(a: &GradedAlgebra, bound: usize) -> Result<Bialgebra> {
    if !a.commutative {
        return Err(HopfError::Domain("J∨(A) needs a commutative algebra".into()));
    }
    let field = a.field;
    let letters = letters_of(a.basis.labels(), |i| a.degree(i));
    let words = Arc::new(WordBasis::new(letters, bound, WordStyle::Bracket)?);
    let basis = Arc::new(words.basis(bound)?);
    let n = words.len();

    let coproducts: Vec<Tensor2> = (0..n)
        .map(|x| {
            let w = words.word(x);
            (0..=w.len())
                .map(|cut| {
                    let (u, v) = deconcat_component(w, cut, w.len() - cut).expect("lengths add up");
                    let key = (words.index_of(&u).expect("prefix"), words.index_of(&v).expect("suffix"));
                    (key, field.one())
                })
                .collect()
        })
        .collect();

    let mut pairs_cache: HashMap<(usize, usize), Vec<SurjectionPair>> = HashMap::new();
    let mut table: HashMap<(usize, usize), Vector> = HashMap::new();
    let letter_degree = |l: usize| words.letters()[l].degree;
    for i in 1..n {
        for j in 1..n {
            if basis.degree(i) + basis.degree(j) > bound {
                continue;
            }
            let (u, v) = (words.word(i), words.word(j));
            let pairs = pairs_cache
                .entry((u.len(), v.len()))
                .or_insert_with(|| enumerate_surjection_pairs(u.len(), v.len()));
            let mut product = Vector::new();
            for pair in pairs.iter() {
                let mut odd = false;
                for (ui, &ai) in pair.alpha.iter().enumerate() {
                    for (vj, &bj) in pair.beta.iter().enumerate() {
                        if bj < ai && letter_degree(u[ui]) % 2 == 1 && letter_degree(v[vj]) % 2 == 1 {
                            odd = !odd;
                        }
                    }
                }
                // Slot contents as combinations of letters (basis of Ā, shifted by one).
                let mut slots: Vec<Vector> = vec![Vector::new(); pair.n];
                let mut from_u: Vec<Option<usize>> = vec![None; pair.n];
                for (ui, &ai) in pair.alpha.iter().enumerate() {
                    from_u[ai] = Some(u[ui]);
                }
                let mut dead = false;
                for (slot, content) in slots.iter_mut().enumerate() {
                    let uv = pair.beta.iter().position(|b| *b == slot).map(|vj| v[vj]);
                    *content = match (from_u[slot], uv) {
                        (Some(x), Some(y)) => a.mul(x + 1, y + 1).iter().map(|(k, c)| (k - 1, c.clone())).collect(),
                        (Some(x), None) | (None, Some(x)) => Vector::single(x, field.one()),
                        (None, None) => unreachable!("images cover every slot"),
                    };
                    if content.is_zero() {
                        dead = true;
                        break;
                    }
                }
                if dead {
                    continue;
                }
                let mut expansion: Vec<(Vec<usize>, crate::linear::Scalar)> = vec![(Vec::new(), field.sign(odd))];
                for content in &slots {
                    let mut next = Vec::with_capacity(expansion.len() * content.len());
                    for (w, c) in &expansion {
                        for (l, d) in content.iter() {
                            let mut w2 = w.clone();
                            w2.push(*l);
                            next.push((w2, c * d));
                        }
                    }
                    expansion = next;
                }
                for (w, c) in expansion {
                    product.add_term(words.index_of(&w).expect("degree within bound"), c);
                }
            }
            if !product.is_zero() {
                table.insert((i, j), product);
            }
        }
    }

    let algebra = GradedAlgebra {
        field,
        basis: basis.clone(),
        product: Product::Table(table),
        commutative: true,
        complete: a.len() == 1,
    };
    let mut coalgebra = GradedCoalgebra {
        field,
        basis,
        coproducts,
        cocommutative: false,
        complete: a.len() == 1,
    };
    coalgebra.cocommutative = (0..n).all(|x| coalgebra.twist(coalgebra.coproduct(x)) == *coalgebra.coproduct(x));
    Bialgebra::new(algebra, coalgebra, Some(words), Shape::Cofree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::parse::letters;
    use crate::hopf::{check_axioms, dual_algebra, dualize_hopf, MonomialAlgebraPresentation, MonomialRelation};
    use crate::linear::{Field, TruncatedSeries};

    fn truncated(field: Field, gens: &[(&str, usize)], rels: Vec<MonomialRelation>, bound: usize) -> GradedAlgebra {
        MonomialAlgebraPresentation {
            field,
            generators: letters(gens),
            relations: rels,
            commutative: true,
        }
        .build(bound)
        .unwrap()
    }

    fn bracket(h: &Bialgebra, v: &Vector) -> String {
        h.format_vector(v)
    }

    #[test]
    fn surjection_pair_counts() {
        let p11 = enumerate_surjection_pairs(1, 1);
        assert_eq!(p11.len(), 3);
        assert_eq!(p11.iter().filter(|p| p.n == 2).count(), 2);
        let p22 = enumerate_surjection_pairs(2, 2);
        assert_eq!(p22.len(), 13);
        assert_eq!(p22.iter().filter(|p| p.n == 4).count(), 6);
        assert_eq!(p22.iter().filter(|p| p.n == 3).count(), 6);
        assert_eq!(enumerate_surjection_pairs(0, 2).len(), 1);
    }

    #[test]
    fn surjection_pairs_match_brute_force() {
        // Oracle: count maps γ: l+m → n that are increasing on each block and onto.
        fn brute(l: usize, m: usize) -> usize {
            let mut count = 0;
            for n in l.max(m)..=l + m {
                let total = (n as u64).pow((l + m) as u32);
                for code in 0..total {
                    let mut c = code;
                    let g: Vec<usize> = (0..l + m)
                        .map(|_| {
                            let d = (c % n as u64) as usize;
                            c /= n as u64;
                            d
                        })
                        .collect();
                    let inc = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
                    let onto = (0..n).all(|i| g.contains(&i));
                    if inc(&g[..l]) && inc(&g[l..]) && onto {
                        count += 1;
                    }
                }
            }
            count
        }
        for l in 0..=3 {
            for m in 0..=3 {
                assert_eq!(enumerate_surjection_pairs(l, m).len(), brute(l, m), "({l},{m})");
            }
        }
    }

    #[test]
    fn deconcatenation_components() {
        assert_eq!(deconcat_component(&[3, 5], 1, 1).unwrap(), (vec![3], vec![5]));
        assert_eq!(deconcat_component(&[3, 5], 0, 2).unwrap(), (vec![], vec![3, 5]));
        assert!(deconcat_component(&[3], 1, 1).is_err());
    }

    #[test]
    fn y_star_y_in_char_two() {
        let f = Field::prime(2).unwrap();
        let a = truncated(f, &[("y", 2)], vec![MonomialRelation::Power(0, 3)], 8);
        let j = build_jvee(&a, 8).unwrap();
        let y = j.index_of("[y]").unwrap();
        assert_eq!(bracket(&j, &j.mul(y, y)), "[y^2]");
        let report = check_axioms(&j);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn thirteen_term_expansion() {
        let q = Field::Rational;
        let a = truncated(q, &[("w", 2), ("x", 2), ("y", 2), ("z", 2)], Vec::new(), 8);
        let j = build_jvee(&a, 8).unwrap();
        let wx = j.index_of("[w|x]").unwrap();
        let yz = j.index_of("[y|z]").unwrap();
        let prod = j.mul(wx, yz);
        let mut got: Vec<String> = prod
            .iter()
            .map(|(k, c)| {
                assert!(c.is_one());
                j.label(*k).to_string()
            })
            .collect();
        got.sort();
        let mut expected: Vec<String> = [
            "[w|x|y|z]",
            "[w|y|x|z]",
            "[w|y|z|x]",
            "[y|w|x|z]",
            "[y|w|z|x]",
            "[y|z|w|x]",
            "[w|xy|z]",
            "[w|y|xz]",
            "[wy|x|z]",
            "[wy|z|x]",
            "[y|w|xz]",
            "[y|wz|x]",
            "[wy|xz]",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn shuffle_with_zero_product() {
        let q = Field::Rational;
        let a = truncated(q, &[("w", 3), ("x", 5)], vec![MonomialRelation::Product(0, 1)], 8);
        let j = build_jvee(&a, 8).unwrap();
        let w = j.index_of("[w]").unwrap();
        let x = j.index_of("[x]").unwrap();
        assert_eq!(bracket(&j, &j.mul(w, x)), "[w|x] - [x|w]");
    }

    #[test]
    fn odd_letters_give_graded_commutative_associative_products() {
        let q = Field::Rational;
        let a = truncated(q, &[("a", 1), ("b", 2), ("c", 3)], Vec::new(), 6);
        let j = build_jvee(&a, 6).unwrap();
        let report = check_axioms(&j);
        assert!(
            report.passed(),
            "{:?}",
            &report.failures[..report.failures.len().min(5)]
        );
    }

    #[test]
    fn j_of_divided_powers_is_nsym() {
        let f = Field::prime(2).unwrap();
        let poly = truncated(f, &[("t", 2)], Vec::new(), 8);
        let mut c = crate::hopf::dual_coalgebra(&poly);
        c.cocommutative = true;
        let j = build_j(&c, 8).unwrap();
        assert!(check_axioms(&j).passed());
        let t2 = j.index_of("[t^2]").unwrap();
        assert_eq!(j.format_tensor(j.coproduct(t2)), "1⊗[t^2] + [t]⊗[t] + [t^2]⊗1");
    }

    #[test]
    fn dual_of_j_is_jvee_of_the_dual() {
        for field in [Field::Rational, Field::prime(2).unwrap(), Field::prime(3).unwrap()] {
            let a = truncated(field, &[("u", 1), ("v", 2)], Vec::new(), 5);
            let c = crate::hopf::dual_coalgebra(&a);
            let j = build_j(&c, 5).unwrap();
            let lhs = dualize_hopf(&j);
            let rhs = build_jvee(&dual_algebra(&c), 5).unwrap();
            for x in 0..lhs.len() {
                assert_eq!(lhs.coproduct(x), rhs.coproduct(x), "{field}");
                for y in 0..lhs.len() {
                    if lhs.degree(x) + lhs.degree(y) <= 5 {
                        assert_eq!(lhs.mul(x, y), rhs.mul(x, y), "{field} {x} {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn jvee_series_is_the_geometric_series() {
        let f = Field::prime(2).unwrap();
        let a = truncated(f, &[("y", 2)], vec![MonomialRelation::Power(0, 3)], 12);
        let j = build_jvee(&a, 12).unwrap();
        let chi_a = TruncatedSeries::from_coeffs(12, &a.basis.dims().iter().map(|d| *d as i64).collect::<Vec<_>>());
        let one = TruncatedSeries::one(12);
        let expected = one.sub(&chi_a.sub(&one).unwrap()).unwrap().inverse().unwrap();
        let got: Vec<i64> = j.basis().dims().iter().map(|d| *d as i64).collect();
        assert_eq!(got, (0..=12).map(|d| expected.coeff(d)).collect::<Vec<_>>());
    }
}
