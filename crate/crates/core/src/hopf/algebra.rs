//! Truncated connected graded algebras, coalgebras and bialgebras given by
//! structure constants.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{HopfError, Result};
use crate::linear::{Field, Scalar, Tensor2, Tensor3, Vector};

use super::basis::{Basis, WordBasis};

/// How products of basis elements are obtained.
#[derive(Clone, Debug, PartialEq)]
pub enum Product {
    /// Explicit table over pairs of positive basis elements; missing pairs
    /// multiply to zero.
    Table(HashMap<(usize, usize), Vector>),
    /// Concatenation in a word basis (a free algebra).
    Concat(Arc<WordBasis>),
}

/// A connected graded algebra truncated at `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebra {
    pub field: Field,
    pub basis: Arc<Basis>,
    pub product: Product,
    pub commutative: bool,
    /// The algebra is zero above the bound, so nothing is lost by the cut.
    pub complete: bool,
}

/// A connected graded coalgebra truncated at `N`. `coproducts[i]` is the
/// full coproduct of basis element `i`, including `i⊗1` and `1⊗i`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedCoalgebra {
    pub field: Field,
    pub basis: Arc<Basis>,
    pub coproducts: Vec<Tensor2>,
    pub cocommutative: bool,
    pub complete: bool,
}

/// Extra structure of word-based bialgebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Tensor algebra on the letters with a multiplicative coproduct.
    Free,
    /// Deconcatenation coalgebra on the letters with a shuffle-type product.
    Cofree,
    /// No word structure.
    Plain,
}

/// A bialgebra: algebra and coalgebra on the same basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Bialgebra {
    pub algebra: GradedAlgebra,
    pub coalgebra: GradedCoalgebra,
    pub words: Option<Arc<WordBasis>>,
    pub shape: Shape,
}

/// `(−1)^{ab}` as a parity.
pub fn koszul(a: usize, b: usize) -> bool {
    a % 2 == 1 && b % 2 == 1
}

impl GradedAlgebra {
    pub fn bound(&self) -> usize {
        self.basis.bound()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.basis.degree(i)
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn unit(&self) -> Vector {
        Vector::single(0, self.field.one())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::single(i, self.field.one())
    }

    /// Product of two basis elements. Panics when the product lies above the
    /// bound; use [`GradedAlgebra::mul_checked`] to get an error instead.
    pub fn mul(&self, i: usize, j: usize) -> Vector {
        self.mul_checked(i, j).expect("product within the truncation bound")
    }

    pub fn mul_checked(&self, i: usize, j: usize) -> Result<Vector> {
        let d = self.degree(i) + self.degree(j);
        if d > self.bound() {
            return Err(HopfError::truncation("hopf_core::mul", d, self.bound()));
        }
        if i == 0 {
            return Ok(self.basis_vector(j));
        }
        if j == 0 {
            return Ok(self.basis_vector(i));
        }
        Ok(match &self.product {
            Product::Table(t) => t.get(&(i, j)).cloned().unwrap_or_default(),
            Product::Concat(words) => {
                let k = words.concat(i, j).expect("concatenation within bound");
                self.basis_vector(k)
            }
        })
    }

    pub fn mul_vec(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled(&self.mul(*i, *j), &(x * y));
            }
        }
        out
    }

    /// `a^k` for `k ≥ 1`.
    pub fn pow_vec(&self, a: &Vector, k: usize) -> Vector {
        let mut acc = self.unit();
        for _ in 0..k {
            acc = self.mul_vec(&acc, a);
        }
        acc
    }

    /// Product in `A⊗A`: `(a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd`.
    pub fn mul_tensor(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for ((a, b), s) in x.iter() {
            for ((c, d), t) in y.iter() {
                let coeff = &(s * t) * &self.field.sign(koszul(self.degree(*b), self.degree(*c)));
                let ac = self.mul(*a, *c);
                let bd = self.mul(*b, *d);
                for (u, cu) in ac.iter() {
                    for (v, cv) in bd.iter() {
                        out.add_term((*u, *v), &(&coeff * cu) * cv);
                    }
                }
            }
        }
        out
    }

    /// Degree of a homogeneous vector; `None` for zero or mixed degrees.
    pub fn vector_degree(&self, v: &Vector) -> Option<usize> {
        let mut degrees = v.keys().map(|i| self.degree(*i));
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }
}

impl GradedCoalgebra {
    pub fn bound(&self) -> usize {
        self.basis.bound()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.basis.degree(i)
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn coproduct(&self, i: usize) -> &Tensor2 {
        &self.coproducts[i]
    }

    /// `Δ(x) − x⊗1 − 1⊗x` for a positive basis element.
    pub fn reduced(&self, i: usize) -> Tensor2 {
        let mut t = self.coproducts[i].clone();
        if i != 0 {
            t.retain(|(a, b)| *a != 0 && *b != 0);
        }
        t
    }

    pub fn coproduct_vec(&self, v: &Vector) -> Tensor2 {
        v.map_linear(|i| self.coproducts[*i].clone())
    }

    pub fn reduced_vec(&self, v: &Vector) -> Tensor2 {
        v.map_linear(|i| self.reduced(*i))
    }

    /// `(Δ⊗1)Δ(x)`
    pub fn left_iterate(&self, i: usize) -> Tensor3 {
        let mut out = Tensor3::new();
        for ((a, b), c) in self.coproducts[i].iter() {
            for ((u, v), d) in self.coproducts[*a].iter() {
                out.add_term((*u, *v, *b), c * d);
            }
        }
        out
    }

    /// `(1⊗Δ)Δ(x)`
    pub fn right_iterate(&self, i: usize) -> Tensor3 {
        let mut out = Tensor3::new();
        for ((a, b), c) in self.coproducts[i].iter() {
            for ((u, v), d) in self.coproducts[*b].iter() {
                out.add_term((*a, *u, *v), c * d);
            }
        }
        out
    }

    /// `τ` on `C⊗C`.
    pub fn twist(&self, t: &Tensor2) -> Tensor2 {
        t.iter()
            .map(|((a, b), c)| {
                let s = self.field.sign(koszul(self.degree(*a), self.degree(*b)));
                ((*b, *a), c * &s)
            })
            .collect()
    }
}

impl Bialgebra {
    pub fn new(
        algebra: GradedAlgebra,
        coalgebra: GradedCoalgebra,
        words: Option<Arc<WordBasis>>,
        shape: Shape,
    ) -> Result<Self> {
        if algebra.basis != coalgebra.basis || algebra.field != coalgebra.field {
            return Err(HopfError::Structural(
                "algebra and coalgebra must share basis and field".into(),
            ));
        }
        Ok(Bialgebra {
            algebra,
            coalgebra,
            words,
            shape,
        })
    }

    pub fn field(&self) -> Field {
        self.algebra.field
    }

    pub fn characteristic(&self) -> u32 {
        self.algebra.field.characteristic()
    }

    pub fn basis(&self) -> &Basis {
        &self.algebra.basis
    }

    pub fn bound(&self) -> usize {
        self.algebra.bound()
    }

    pub fn len(&self) -> usize {
        self.algebra.len()
    }

    pub fn is_empty(&self) -> bool {
        self.algebra.is_empty()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.algebra.degree(i)
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.commutative
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.cocommutative
    }

    pub fn mul(&self, i: usize, j: usize) -> Vector {
        self.algebra.mul(i, j)
    }

    pub fn mul_vec(&self, a: &Vector, b: &Vector) -> Vector {
        self.algebra.mul_vec(a, b)
    }

    pub fn coproduct(&self, i: usize) -> &Tensor2 {
        self.coalgebra.coproduct(i)
    }

    pub fn coproduct_vec(&self, v: &Vector) -> Tensor2 {
        self.coalgebra.coproduct_vec(v)
    }

    pub fn reduced(&self, i: usize) -> Tensor2 {
        self.coalgebra.reduced(i)
    }

    pub fn reduced_vec(&self, v: &Vector) -> Tensor2 {
        self.coalgebra.reduced_vec(v)
    }

    pub fn label(&self, i: usize) -> &str {
        self.basis().label(i)
    }

    /// Index of a basis element by label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis().index_of(label)
    }

    /// Basis index of a generator (one-letter word) of a free bialgebra.
    pub fn generator(&self, label: &str) -> Option<usize> {
        let words = self.words.as_ref()?;
        let l = words.letters().iter().position(|l| l.label == label)?;
        words.letter_word(l)
    }

    /// Renders a vector as a signed combination of basis labels.
    pub fn format_vector(&self, v: &Vector) -> String {
        format_combination(v.iter().map(|(i, c)| (self.label(*i).to_string(), c)))
    }

    pub fn format_tensor(&self, t: &Tensor2) -> String {
        format_combination(
            t.iter()
                .map(|((a, b), c)| (format!("{}⊗{}", self.label(*a), self.label(*b)), c)),
        )
    }
}

/// `3x - y + z` style rendering; `0` for the empty combination.
pub fn format_combination<'a>(terms: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        let neg = c.is_negative();
        let magnitude = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
            if label != "1" {
                out.push(' ');
            }
        }
        if !(label == "1" && !magnitude.is_one()) {
            out.push_str(&label);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
