//! Cocommutative coalgebra structures on a given graded basis, solved
//! element by element.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{HopfError, Result};
use crate::hopf::{diagonal, koszul, Basis, GradedCoalgebra, Letter};
use crate::linear::{AffineSystem, Field, Scalar, Solution, Tensor2, Vector};

/// A basis `1, e_1, …, e_m` (the letters, in increasing degree) on which
/// coproducts are sought. `v[i]`, when given, is the required Verschiebung
/// of `e_{i+1}` in basis indices.
#[derive(Clone, Debug)]
pub struct CoalgebraProblem {
    pub field: Field,
    pub basis: Arc<Basis>,
    pub v: Option<Vec<Vector>>,
}

/// Outcome of [`CoalgebraProblem::enumerate`].
#[derive(Clone, Debug)]
pub struct CoalgebraEnumeration {
    pub structures: Vec<GradedCoalgebra>,
    /// Lowest degree at which some branch had no solution.
    pub obstruction_degree: Option<usize>,
    pub candidates: u64,
}

impl CoalgebraProblem {
    pub fn new(field: Field, letters: &[Letter], bound: usize, v: Option<Vec<Vector>>) -> Result<Self> {
        let mut entries = vec![("1".to_string(), 0)];
        entries.extend(letters.iter().map(|l| (l.label.clone(), l.degree)));
        let basis = Arc::new(Basis::new(bound, entries)?);
        if let Some(v) = &v {
            if v.len() != letters.len() {
                return Err(HopfError::Validation(
                    "one V image per basis element is required".into(),
                ));
            }
        }
        Ok(CoalgebraProblem { field, basis, v })
    }

    fn finish(&self, coproducts: Vec<Tensor2>) -> GradedCoalgebra {
        GradedCoalgebra {
            field: self.field,
            basis: self.basis.clone(),
            coproducts,
            cocommutative: true,
            complete: true,
        }
    }

    fn counit_part(&self, x: usize) -> Tensor2 {
        let one = self.field.one();
        let mut t = Tensor2::single((x, 0), one.clone());
        if x != 0 {
            t.add_term((0, x), one);
        }
        t
    }

    /// The affine system for the reduced coproduct of `x`, given full
    /// coproducts of all earlier elements, with its unknown pairs.
    fn system(&self, x: usize, lower: &[Tensor2]) -> Result<Option<(Solution, Vec<(usize, usize)>)>> {
        let field = self.field;
        let degrees: Vec<usize> = (0..self.basis.len()).map(|i| self.basis.degree(i)).collect();
        let d = degrees[x];
        let pairs: Vec<(usize, usize)> = (1..x)
            .flat_map(|a| (1..x).map(move |b| (a, b)))
            .filter(|(a, b)| degrees[*a] + degrees[*b] == d)
            .collect();
        let var: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(v, ab)| (*ab, v)).collect();
        let mut system = AffineSystem::new(field, pairs.len());
        let reduced = |i: usize| -> Tensor2 {
            let mut t = lower[i].clone();
            t.retain(|(a, b)| *a != 0 && *b != 0);
            t
        };

        let mut consistent = true;
        for (v, &(a, b)) in pairs.iter().enumerate() {
            let mut row = Vector::single(v, field.one());
            row.add_term(var[&(b, a)], -field.sign(koszul(degrees[a], degrees[b])));
            consistent &= system.add(&row, &field.zero());
        }
        let mut coassoc: BTreeMap<(usize, usize, usize), Vector> = BTreeMap::new();
        for (v, &(a, b)) in pairs.iter().enumerate() {
            for ((u, w), c) in reduced(a).iter() {
                coassoc.entry((*u, *w, b)).or_default().add_term(v, c.clone());
            }
            for ((u, w), c) in reduced(b).iter() {
                coassoc.entry((a, *u, *w)).or_default().add_term(v, -c);
            }
        }
        for row in coassoc.values() {
            consistent &= system.add(row, &field.zero());
        }
        if let (Some(v), Field::Prime(p)) = (&self.v, field) {
            let p = p as usize;
            let target = &v[x - 1];
            if !d.is_multiple_of(p) {
                if !target.is_zero() {
                    return Err(HopfError::Validation(format!(
                        "V of {} must vanish",
                        self.basis.label(x)
                    )));
                }
            } else {
                let mut padded = lower.to_vec();
                padded.resize(self.basis.len(), Tensor2::new());
                let mut memo = HashMap::new();
                let mut rows: BTreeMap<usize, Vector> = self.basis.range(d / p).map(|b| (b, Vector::new())).collect();
                for (v, &(a, b)) in pairs.iter().enumerate() {
                    if degrees[b] != d / p {
                        continue;
                    }
                    if let Some(c) = diagonal(&padded, &degrees, &field.one(), a, p - 1, &mut memo).coeff(&b) {
                        rows.get_mut(&b).expect("row").add_term(v, c.clone());
                    }
                }
                for (b, row) in &rows {
                    let rhs = target.coeff(b).cloned().unwrap_or_else(|| field.zero());
                    consistent &= system.add(row, &rhs);
                }
            }
        }
        if !consistent {
            return Ok(None);
        }
        Ok(system.solve().map(|s| (s, pairs)))
    }

    fn coproduct_from(&self, x: usize, pairs: &[(usize, usize)], point: &Vector) -> Tensor2 {
        let mut t = self.counit_part(x);
        for (v, c) in point.iter() {
            t.add_term(pairs[*v], c.clone());
        }
        t
    }

    /// One structure, element by element, with `choose` picking a point of
    /// each solution space. Fails with the degree of the first element whose
    /// system has no solution.
    pub fn solve_with(&self, mut choose: impl FnMut(usize, &Solution) -> Vector) -> Result<GradedCoalgebra> {
        let mut coproducts = vec![self.counit_part(0)];
        for x in 1..self.basis.len() {
            let Some((solution, pairs)) = self.system(x, &coproducts)? else {
                return Err(HopfError::infeasible(
                    "theorems::coalgebra",
                    self.basis.degree(x),
                    format!("no coproduct for {}", self.basis.label(x)),
                ));
            };
            let point = choose(x, &solution);
            coproducts.push(self.coproduct_from(x, &pairs, &point));
        }
        Ok(self.finish(coproducts))
    }

    /// Every structure over a finite field, depth first, evaluating at most
    /// `limit` candidates.
    pub fn enumerate(&self, limit: u64) -> Result<CoalgebraEnumeration> {
        let elements = self
            .field
            .elements()
            .ok_or_else(|| HopfError::Domain("exhaustive enumeration needs a finite field".into()))?;
        let mut out = CoalgebraEnumeration {
            structures: Vec::new(),
            obstruction_degree: None,
            candidates: 0,
        };
        let mut coproducts = vec![self.counit_part(0)];
        self.descend(&elements, &mut coproducts, &mut out, limit)?;
        Ok(out)
    }

    fn descend(
        &self,
        elements: &[Scalar],
        coproducts: &mut Vec<Tensor2>,
        out: &mut CoalgebraEnumeration,
        limit: u64,
    ) -> Result<()> {
        let x = coproducts.len();
        if x == self.basis.len() {
            out.structures.push(self.finish(coproducts.clone()));
            return Ok(());
        }
        let Some((solution, pairs)) = self.system(x, coproducts)? else {
            let d = self.basis.degree(x);
            out.obstruction_degree = Some(out.obstruction_degree.map_or(d, |o| o.min(d)));
            return Ok(());
        };
        let mut digits = vec![0usize; solution.dimension()];
        loop {
            out.candidates += 1;
            if out.candidates > limit {
                return Err(HopfError::Budget(limit));
            }
            let lambdas: Vec<Scalar> = digits.iter().map(|i| elements[*i].clone()).collect();
            coproducts.push(self.coproduct_from(x, &pairs, &solution.point(&lambdas)));
            self.descend(elements, coproducts, out, limit)?;
            coproducts.pop();
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    return Ok(());
                }
                digits[pos] += 1;
                if digits[pos] < elements.len() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::parse::letters;
    use crate::hopf::{check_coalgebra, verschiebung};

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    /// Every assignment of 0/1 coefficients on all pairs of the right
    /// degree, kept when the axioms (and `V`, if given) hold.
    fn brute_force(problem: &CoalgebraProblem) -> usize {
        let basis = &problem.basis;
        let n = basis.len();
        let slots: Vec<Vec<(usize, usize)>> = (0..n)
            .map(|x| {
                let mut s = Vec::new();
                for a in 1..n {
                    for b in 1..n {
                        if x > 0 && basis.degree(a) + basis.degree(b) == basis.degree(x) {
                            s.push((a, b));
                        }
                    }
                }
                s
            })
            .collect();
        let total: usize = slots.iter().map(Vec::len).sum();
        let mut count = 0;
        for mask in 0u64..(1 << total) {
            let mut bit = 0;
            let coproducts: Vec<Tensor2> = (0..n)
                .map(|x| {
                    let mut t = problem.counit_part(x);
                    for ab in &slots[x] {
                        if mask & (1 << bit) != 0 {
                            t.add_term(*ab, f2().one());
                        }
                        bit += 1;
                    }
                    t
                })
                .collect();
            let c = problem.finish(coproducts);
            if !check_coalgebra(&c).passed() {
                continue;
            }
            if let Some(v) = &problem.v {
                let actual = verschiebung(&c).unwrap();
                if (1..n).any(|x| actual[x] != v[x - 1]) {
                    continue;
                }
            }
            count += 1;
        }
        count
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let problem =
            CoalgebraProblem::new(f2(), &letters(&[("x", 1), ("w", 1), ("y", 2), ("z", 3)]), 3, None).unwrap();
        let found = problem.enumerate(1 << 20).unwrap();
        assert_eq!(found.structures.len(), brute_force(&problem));
        for c in &found.structures {
            assert!(check_coalgebra(c).passed());
        }
    }

    #[test]
    fn verschiebung_targets_match_brute_force() {
        let one = f2().one();
        let v = vec![
            Vector::new(),
            Vector::new(),
            Vector::single(1, one.clone()),
            Vector::new(),
        ];
        let problem =
            CoalgebraProblem::new(f2(), &letters(&[("x", 1), ("w", 1), ("y", 2), ("z", 3)]), 3, Some(v)).unwrap();
        let found = problem.enumerate(1 << 20).unwrap();
        assert!(!found.structures.is_empty());
        assert_eq!(found.structures.len(), brute_force(&problem));
    }

    #[test]
    fn chosen_points_give_valid_coalgebras_over_q() {
        let problem = CoalgebraProblem::new(
            Field::Rational,
            &letters(&[("a", 1), ("b", 2), ("c", 2), ("d", 4)]),
            4,
            None,
        )
        .unwrap();
        let c = problem
            .solve_with(|_, s| {
                let lambdas: Vec<Scalar> = (0..s.dimension())
                    .map(|i| Field::Rational.from_i64(i as i64 + 1))
                    .collect();
                s.point(&lambdas)
            })
            .unwrap();
        assert!(check_coalgebra(&c).passed());
    }

    #[test]
    fn chain_of_length_two_has_no_coalgebra_in_characteristic_two() {
        let one = f2().one();
        let v = vec![Vector::new(), Vector::single(1, one.clone()), Vector::single(2, one)];
        let problem = CoalgebraProblem::new(f2(), &letters(&[("x", 1), ("y", 2), ("z", 4)]), 4, Some(v)).unwrap();
        let found = problem.enumerate(1 << 20).unwrap();
        assert!(found.structures.is_empty());
        assert_eq!(found.obstruction_degree, Some(4));
        assert_eq!(brute_force(&problem), 0);
    }
}
