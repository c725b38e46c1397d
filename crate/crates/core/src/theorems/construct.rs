//! The split Hopf algebra `H(M)` free on a V-module `M`, by solving for the
//! coproducts of its generators.

use std::collections::{BTreeMap, HashMap};

use crate::error::{HopfError, Result};
use crate::fv::{Extent, Summand, VModule};
use crate::hopf::{diagonal, koszul, Bialgebra, FreePresentation, Letter, WordTensor};
use crate::linear::{AffineSystem, Field, Vector};

/// Builds `H(M)` from the classification of `M`.
pub fn construct_h(m: &VModule, bound: usize) -> Result<Bialgebra> {
    let summands = m.classify().summands();
    construct_h_from(m.field(), &summands, bound)
}

/// Builds `H(M)` for `M = ⊕ M(n,j)` given as a list of summands.
///
/// Summand `k` contributes generators `g{k}_0, g{k}_1, …` in degrees
/// `n, pn, p²n, …` with `V(g{k}_i) = g{k}_{i−1}` and `g{k}_0` primitive;
/// `at_least` chains continue up to the bound. The reduced coproduct of each
/// generator is the lexicographically least solution of the linear
/// conditions for counitality, coassociativity, cocommutativity and `V`.
pub fn construct_h_from(field: Field, summands: &[Summand], bound: usize) -> Result<Bialgebra> {
    let Field::Prime(p) = field else {
        return Err(HopfError::Domain(
            "H(M) needs a field of positive characteristic".into(),
        ));
    };
    let mut letters = Vec::new();
    let mut reduced = Vec::new();
    for (k, s) in summands.iter().enumerate() {
        if s.n == 0 {
            return Err(HopfError::Validation("summands need positive degree".into()));
        }
        if p != 2 && s.n % 2 == 1 && s.j.observed() > 0 {
            return Err(HopfError::Validation(format!(
                "M({},{}) does not exist at p = {p}",
                s.n,
                s.j.observed()
            )));
        }
        let chain = solve_chain(field, k, s, bound)?;
        let offset = letters.len();
        letters.extend(chain.letters);
        for t in chain.reduced {
            let shift = |w: &Vec<usize>| w.iter().map(|l| l + offset).collect::<Vec<_>>();
            reduced.push(t.iter().map(|((a, b), c)| ((shift(a), shift(b)), c.clone())).collect());
        }
    }
    FreePresentation {
        field,
        letters,
        reduced,
    }
    .build(bound)
}

fn chain_length(p: usize, s: &Summand, bound: usize) -> usize {
    let mut len = 0;
    let mut d = s.n;
    while d <= bound {
        if let Extent::Finite(j) = s.j {
            if len > j {
                break;
            }
        }
        len += 1;
        d *= p;
    }
    len
}

/// Solves one summand, generator by generator.
fn solve_chain(field: Field, k: usize, s: &Summand, bound: usize) -> Result<FreePresentation> {
    let p = field.characteristic() as usize;
    let mut pres = FreePresentation::primitive(field, Vec::new());
    let mut degree = s.n;
    for i in 0..chain_length(p, s, bound) {
        let d = reduced_for(&pres, degree, i)?;
        pres.letters.push(Letter {
            label: format!("g{k}_{i}"),
            degree,
        });
        pres.reduced.push(d);
        degree *= p;
    }
    Ok(pres)
}

/// The lex-least reduced coproduct for a new generator of degree `d` over
/// the free algebra on the letters of `lower`, with `V` of the new
/// generator equal to letter `i − 1` (or zero when `i = 0`).
fn reduced_for(lower: &FreePresentation, d: usize, i: usize) -> Result<WordTensor> {
    let field = lower.field;
    let p = field.characteristic() as usize;
    if lower.letters.is_empty() {
        return Ok(WordTensor::new());
    }
    let h = lower.build(d - 1)?;
    let words = h.words.clone().expect("free presentation has words");
    let degrees: Vec<usize> = (0..h.len()).map(|x| h.degree(x)).collect();

    let mut pairs = Vec::new();
    for a in 1..h.len() {
        for b in 1..h.len() {
            if degrees[a] + degrees[b] == d {
                pairs.push((a, b));
            }
        }
    }
    let var: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(v, ab)| (*ab, v)).collect();
    let mut system = AffineSystem::new(field, pairs.len());
    let fail = |what: &str| HopfError::infeasible("theorems::construct_h", d, format!("no {what} coproduct"));

    for (v, &(a, b)) in pairs.iter().enumerate() {
        let sign = field.sign(koszul(degrees[a], degrees[b]));
        let mut row = Vector::single(v, field.one());
        row.add_term(var[&(b, a)], -sign);
        if !system.add(&row, &field.zero()) {
            return Err(fail("cocommutative"));
        }
    }

    let mut coassoc: BTreeMap<(usize, usize, usize), Vector> = BTreeMap::new();
    for (v, &(a, b)) in pairs.iter().enumerate() {
        for ((u, w), c) in h.reduced(a).iter() {
            coassoc.entry((*u, *w, b)).or_default().add_term(v, c.clone());
        }
        for ((u, w), c) in h.reduced(b).iter() {
            coassoc.entry((a, *u, *w)).or_default().add_term(v, -c);
        }
    }
    for row in coassoc.values() {
        if !system.add(row, &field.zero()) {
            return Err(fail("coassociative"));
        }
    }

    if d.is_multiple_of(p) {
        let target = (i > 0).then(|| words.letter_word(i - 1).expect("lower letter"));
        let mut memo = HashMap::new();
        let mut rows: BTreeMap<usize, Vector> = BTreeMap::new();
        for x in 1..h.len() {
            if degrees[x] == d / p {
                rows.insert(x, Vector::new());
            }
        }
        for (v, &(a, b)) in pairs.iter().enumerate() {
            if degrees[b] != d / p {
                continue;
            }
            let diag = diagonal(&h.coalgebra.coproducts, &degrees, &field.one(), a, p - 1, &mut memo);
            if let Some(c) = diag.coeff(&b) {
                rows.get_mut(&b).expect("row in degree d/p").add_term(v, c.clone());
            }
        }
        for (x, row) in &rows {
            let rhs = if Some(*x) == target { field.one() } else { field.zero() };
            if !system.add(row, &rhs) {
                return Err(fail("V-compatible"));
            }
        }
    } else if i > 0 {
        return Err(HopfError::invariant(
            "theorems::construct_h",
            "chain degree not divisible by p",
        ));
    }

    let solution = system.solve().ok_or_else(|| fail("admissible"))?;
    Ok(solution
        .particular
        .iter()
        .map(|(v, c)| {
            let (a, b) = pairs[*v];
            ((words.word(a).to_vec(), words.word(b).to_vec()), c.clone())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fv::Decomposition;
    use crate::hopf::{check_axioms, indecomposables, verschiebung};
    use crate::theorems::is_split;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn m10_is_a_primitive_tensor_algebra() {
        let h = construct_h_from(f(2), &[Summand::finite(1, 0)], 6).unwrap();
        assert_eq!(h.len(), 7);
        assert!(h.reduced(1).is_zero());
    }

    #[test]
    fn m11_has_x_tensor_x() {
        let h = construct_h_from(f(2), &[Summand::finite(1, 1)], 6).unwrap();
        let y = h.generator("g0_1").unwrap();
        assert_eq!(h.format_tensor(&h.reduced(y)), "g0_0⊗g0_0");
    }

    #[test]
    fn m12_is_split_with_the_right_q() {
        let h = construct_h_from(f(2), &[Summand::finite(1, 2)], 10).unwrap();
        let report = check_axioms(&h);
        assert!(report.passed(), "{:?}", report.failures);
        let v = verschiebung(&h.coalgebra).unwrap();
        let g = |l: &str| h.generator(l).unwrap();
        assert_eq!(v[g("g0_2")], Vector::single(g("g0_1"), f(2).one()));
        assert_eq!(v[g("g0_1")], Vector::single(g("g0_0"), f(2).one()));
        assert!(v[g("g0_0")].is_zero());
        let q = indecomposables(&h).unwrap();
        assert_eq!(
            q.v_module().unwrap().classify(),
            Decomposition::from_summands(10, &[Summand::finite(1, 2)])
        );
        assert!(is_split(&h).unwrap().split);
    }

    #[test]
    fn several_summands_at_odd_prime() {
        let summands = [Summand::finite(2, 1), Summand::finite(3, 0), Summand::finite(4, 0)];
        let h = construct_h_from(f(3), &summands, 8).unwrap();
        let report = check_axioms(&h);
        assert!(report.passed(), "{:?}", report.failures);
        let q = indecomposables(&h).unwrap();
        let expected = [Summand::at_least(2, 1), Summand::finite(3, 0), Summand::at_least(4, 0)];
        assert_eq!(
            q.v_module().unwrap().classify(),
            Decomposition::from_summands(8, &expected)
        );
    }

    #[test]
    fn odd_chains_are_rejected_at_odd_primes() {
        assert!(construct_h_from(f(3), &[Summand::finite(3, 1)], 12).is_err());
    }
}
