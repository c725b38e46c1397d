//! Sparse affine linear systems solved by incremental elimination.
//!
//! Rows are kept fully reduced and every row is pivoted on its largest
//! variable index. With that convention, setting all free variables to zero
//! yields the lexicographically least solution when variables are compared
//! from index 0 upward (each pivot variable only depends on free variables
//! of smaller index).

use std::collections::BTreeMap;

use super::combo::Vector;
use super::scalar::{Field, Scalar};

/// Reduced echelon form of a growing set of affine equations
/// `row · x = rhs`.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: BTreeMap<usize, (Vector, Scalar)>,
}

/// Outcome of inserting an equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The equation introduced a new pivot.
    Pivot(usize),
    /// The equation was a consequence of earlier ones.
    Redundant,
    /// The equation contradicts earlier ones.
    Inconsistent,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, var: usize) -> bool {
        self.rows.contains_key(&var)
    }

    /// The stored rows, a basis of the span of the inserted homogeneous
    /// equations, in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &Vector> + '_ {
        self.rows.values().map(|(row, _)| row)
    }

    /// Reduces `(row, rhs)` against the stored pivots.
    pub fn reduce(&self, row: &Vector, rhs: &Scalar) -> (Vector, Scalar) {
        let mut row = row.clone();
        let mut rhs = rhs.clone();
        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .filter(|(k, _)| self.rows.contains_key(k))
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        for (var, coeff) in hits {
            let (prow, prhs) = &self.rows[&var];
            row.add_scaled(prow, &-&coeff);
            rhs -= &(prhs * &coeff);
        }
        (row, rhs)
    }

    /// Remainder of a vector modulo the span of the stored rows.
    pub fn reduce_vector(&self, v: &Vector) -> Vector {
        self.reduce(v, &self.field.zero()).0
    }

    pub fn insert(&mut self, row: &Vector, rhs: &Scalar) -> Insert {
        let (row, rhs) = self.reduce(row, rhs);
        let Some(&pivot) = row.last_key() else {
            return if rhs.is_zero() {
                Insert::Redundant
            } else {
                Insert::Inconsistent
            };
        };
        let inv = row.coeff(&pivot).expect("pivot present").inverse().expect("nonzero");
        let row = row.scaled(&inv);
        let rhs = &rhs * &inv;
        for (prow, prhs) in self.rows.values_mut() {
            if let Some(c) = prow.coeff(&pivot).cloned() {
                prow.add_scaled(&row, &-&c);
                *prhs -= &(&rhs * &c);
            }
        }
        self.rows.insert(pivot, (row, rhs));
        Insert::Pivot(pivot)
    }

    pub fn insert_homogeneous(&mut self, row: &Vector) -> Insert {
        let zero = self.field.zero();
        self.insert(row, &zero)
    }

    /// The solution with every free variable set to zero.
    pub fn particular(&self) -> Vector {
        self.rows.iter().map(|(var, (_, rhs))| (*var, rhs.clone())).collect()
    }

    /// A basis of the homogeneous solution space over variables `0..num_vars`.
    pub fn kernel(&self, num_vars: usize) -> Vec<Vector> {
        let mut basis = Vec::new();
        for free in (0..num_vars).filter(|v| !self.rows.contains_key(v)) {
            let mut v = Vector::single(free, self.field.one());
            for (var, (row, _)) in &self.rows {
                if let Some(c) = row.coeff(&free) {
                    v.add_term(*var, -c);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// An affine system over `num_vars` unknowns.
#[derive(Clone, Debug)]
pub struct AffineSystem {
    num_vars: usize,
    echelon: Echelon,
    consistent: bool,
}

/// A solved system: `particular + span(kernel)`.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Vector,
    pub kernel: Vec<Vector>,
}

impl AffineSystem {
    pub fn new(field: Field, num_vars: usize) -> Self {
        AffineSystem {
            num_vars,
            echelon: Echelon::new(field),
            consistent: true,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn field(&self) -> Field {
        self.echelon.field()
    }

    /// Adds `row · x = rhs`; returns `false` once the system is inconsistent.
    pub fn add(&mut self, row: &Vector, rhs: &Scalar) -> bool {
        debug_assert!(row.keys().all(|k| *k < self.num_vars));
        if self.consistent && self.echelon.insert(row, rhs) == Insert::Inconsistent {
            self.consistent = false;
        }
        self.consistent
    }

    pub fn is_consistent(&self) -> bool {
        self.consistent
    }

    pub fn solve(&self) -> Option<Solution> {
        if !self.consistent {
            return None;
        }
        Some(Solution {
            particular: self.echelon.particular(),
            kernel: self.echelon.kernel(self.num_vars),
        })
    }
}

impl Solution {
    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }

    /// `particular + Σ λ_i kernel_i`.
    pub fn point(&self, lambdas: &[Scalar]) -> Vector {
        let mut v = self.particular.clone();
        for (k, l) in self.kernel.iter().zip(lambdas) {
            v.add_scaled(k, l);
        }
        v
    }

    /// Every point of the solution space when the field is finite, in the
    /// order of the coefficient tuples read as base-`p` numbers; the
    /// particular solution comes first. `None` over `Q` or when the space has
    /// more than `limit` points.
    pub fn enumerate(&self, field: Field, limit: u64) -> Option<Vec<Vector>> {
        let elements = field.elements()?;
        let p = elements.len() as u64;
        let count = p.checked_pow(self.kernel.len() as u32)?;
        if count > limit {
            return None;
        }
        let mut out = Vec::with_capacity(count as usize);
        for idx in 0..count {
            let mut rest = idx;
            let lambdas: Vec<Scalar> = (0..self.kernel.len())
                .map(|_| {
                    let digit = (rest % p) as usize;
                    rest /= p;
                    elements[digit].clone()
                })
                .collect();
            out.push(self.point(&lambdas));
        }
        Some(out)
    }
}

/// Rank of a family of sparse vectors.
pub fn rank_of(field: Field, vectors: &[Vector]) -> usize {
    let mut e = Echelon::new(field);
    for v in vectors {
        e.insert_homogeneous(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec(f: Field, entries: &[(usize, i64)]) -> Vector {
        entries.iter().map(|(k, c)| (*k, f.from_i64(*c))).collect()
    }

    #[test]
    fn lex_least_solution_prefers_small_indices_zero() {
        let f = Field::prime(2).unwrap();
        let mut s = AffineSystem::new(f, 3);
        // x0 + x2 = 1, x1 + x2 = 1
        s.add(&vec(f, &[(0, 1), (2, 1)]), &f.one());
        s.add(&vec(f, &[(1, 1), (2, 1)]), &f.one());
        let sol = s.solve().unwrap();
        assert_eq!(sol.particular, vec(f, &[(2, 1)]));
        assert_eq!(sol.dimension(), 1);
        assert_eq!(sol.enumerate(f, 10).unwrap().len(), 2);
    }

    #[test]
    fn inconsistency_is_sticky() {
        let q = Field::Rational;
        let mut s = AffineSystem::new(q, 2);
        assert!(s.add(&vec(q, &[(0, 1), (1, 1)]), &q.one()));
        assert!(!s.add(&vec(q, &[(0, 2), (1, 2)]), &q.from_i64(3)));
        assert!(s.solve().is_none());
    }

    #[test]
    fn kernel_vectors_solve_the_homogeneous_system() {
        let f = Field::prime(5).unwrap();
        let rows = [vec(f, &[(0, 1), (1, 2), (3, 4)]), vec(f, &[(1, 1), (2, 3)])];
        let mut e = Echelon::new(f);
        for r in &rows {
            e.insert_homogeneous(r);
        }
        for k in e.kernel(4) {
            for r in &rows {
                let dot = r
                    .iter()
                    .fold(f.zero(), |acc, (i, c)| &acc + &(c * k.coeff(i).unwrap_or(&f.zero())));
                assert!(dot.is_zero());
            }
        }
        assert_eq!(e.rank() + e.kernel(4).len(), 4);
    }
}
