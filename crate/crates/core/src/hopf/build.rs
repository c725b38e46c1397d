//! Materializing bialgebras from free presentations and algebras from
//! monomial presentations.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{HopfError, Result};
use crate::linear::{Combo, Field, Tensor2, Vector};

use super::algebra::{koszul, Bialgebra, GradedAlgebra, GradedCoalgebra, Product, Shape};
use super::basis::{Basis, Letter, WordBasis, WordStyle};

/// A tensor of words, each word a list of letter indices.
pub type WordTensor = Combo<(Vec<usize>, Vec<usize>)>;

/// The tensor algebra on graded letters with a chosen reduced coproduct on
/// each letter, extended multiplicatively.
#[derive(Clone, Debug, PartialEq)]
pub struct FreePresentation {
    pub field: Field,
    pub letters: Vec<Letter>,
    /// `reduced[i]` is `Δ(g_i) − g_i⊗1 − 1⊗g_i`.
    pub reduced: Vec<WordTensor>,
}

/// A monomial relation on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialRelation {
    /// `g^e = 0`
    Power(usize, usize),
    /// `g h = 0`
    Product(usize, usize),
}

/// An algebra on generators subject to monomial relations.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialAlgebraPresentation {
    pub field: Field,
    pub generators: Vec<Letter>,
    pub relations: Vec<MonomialRelation>,
    pub commutative: bool,
}

impl FreePresentation {
    /// Letters with all generators primitive.
    pub fn primitive(field: Field, letters: Vec<Letter>) -> Self {
        let reduced = vec![WordTensor::new(); letters.len()];
        FreePresentation {
            field,
            letters,
            reduced,
        }
    }

    /// Letters from `(label, degree)` and reduced coproducts written as
    /// `(label, tensor)`, e.g. `("y", "x@x")`; unlisted letters are primitive.
    pub fn parse(field: Field, letters: &[(&str, usize)], coproducts: &[(&str, &str)]) -> Result<Self> {
        let mut pres = FreePresentation::primitive(field, super::parse::letters(letters));
        for (label, tensor) in coproducts {
            let l = pres
                .letter_index(label)
                .ok_or_else(|| HopfError::Parse(format!("unknown generator `{label}`")))?;
            pres.reduced[l] = super::parse::parse_tensor(tensor, &pres.letters, field)?;
        }
        Ok(pres)
    }

    pub fn letter_index(&self, label: &str) -> Option<usize> {
        self.letters.iter().position(|l| l.label == label)
    }

    fn validate(&self) -> Result<()> {
        if self.reduced.len() != self.letters.len() {
            return Err(HopfError::Validation(
                "one reduced coproduct per generator is required".into(),
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &self.letters {
            if l.degree == 0 {
                return Err(HopfError::Validation(format!("generator {} has degree 0", l.label)));
            }
            if !seen.insert(l.label.as_str()) {
                return Err(HopfError::Validation(format!("duplicate generator {}", l.label)));
            }
        }
        let deg = |w: &[usize]| -> Option<usize> {
            w.iter()
                .map(|l| self.letters.get(*l).map(|x| x.degree))
                .sum::<Option<usize>>()
        };
        for (g, t) in self.letters.iter().zip(&self.reduced) {
            for ((a, b), _) in t.iter() {
                let ok = !a.is_empty()
                    && !b.is_empty()
                    && matches!((deg(a), deg(b)), (Some(x), Some(y)) if x + y == g.degree);
                if !ok {
                    return Err(HopfError::Validation(format!(
                        "coproduct of generator {} is not counital of degree {}",
                        g.label, g.degree
                    )));
                }
            }
        }
        Ok(())
    }

    /// The bialgebra on the word basis up to degree `bound`, with words
    /// printed as monomials.
    pub fn build(&self, bound: usize) -> Result<Bialgebra> {
        self.build_styled(bound, WordStyle::Monomial)
    }

    pub fn build_styled(&self, bound: usize, style: WordStyle) -> Result<Bialgebra> {
        self.validate()?;
        let words = Arc::new(WordBasis::new(self.letters.clone(), bound, style)?);
        let basis = Arc::new(words.basis(bound)?);
        let field = self.field;
        let p = field.characteristic();
        let commutative = self.letters.is_empty()
            || (self.letters.len() == 1 && (p == 2 || self.letters[0].degree.is_multiple_of(2)));
        let algebra = GradedAlgebra {
            field,
            basis: basis.clone(),
            product: Product::Concat(words.clone()),
            commutative,
            complete: self.letters.is_empty(),
        };

        let to_index = |w: &[usize]| words.index_of(w).expect("coproduct word within bound");
        let mut generator_coproducts: HashMap<usize, Tensor2> = HashMap::new();
        for (l, t) in self.reduced.iter().enumerate() {
            let Some(g) = words.letter_word(l) else { continue };
            let mut full = t
                .iter()
                .map(|((a, b), c)| ((to_index(a), to_index(b)), c.clone()))
                .collect::<Tensor2>();
            full.add_term((g, 0), field.one());
            full.add_term((0, g), field.one());
            generator_coproducts.insert(l, full);
        }

        let mut coproducts: Vec<Tensor2> = Vec::with_capacity(words.len());
        for i in 0..words.len() {
            let w = words.word(i);
            let delta = match w.len() {
                0 => Tensor2::single((0, 0), field.one()),
                1 => generator_coproducts[&w[0]].clone(),
                n => {
                    let prefix = to_index(&w[..n - 1]);
                    algebra.mul_tensor(&coproducts[prefix], &generator_coproducts[&w[n - 1]])
                }
            };
            coproducts.push(delta);
        }

        let mut coalgebra = GradedCoalgebra {
            field,
            basis,
            coproducts,
            cocommutative: false,
            complete: self.letters.is_empty(),
        };
        coalgebra.cocommutative = self
            .letters
            .iter()
            .enumerate()
            .all(|(l, _)| match words.letter_word(l) {
                Some(g) => {
                    let t = coalgebra.reduced(g);
                    coalgebra.twist(&t) == t
                }
                None => true,
            });
        Bialgebra::new(algebra, coalgebra, Some(words), Shape::Free)
    }
}

impl MonomialAlgebraPresentation {
    fn height(&self, g: usize) -> Option<usize> {
        let mut h = self
            .relations
            .iter()
            .filter_map(|r| match r {
                MonomialRelation::Power(x, e) if *x == g => Some(*e),
                MonomialRelation::Product(x, y) if *x == g && *y == g => Some(2),
                _ => None,
            })
            .min();
        if self.commutative && self.field.characteristic() != 2 && self.generators[g].degree % 2 == 1 {
            h = Some(h.map_or(2, |e| e.min(2)));
        }
        h
    }

    fn forbids_pair(&self, g: usize, h: usize) -> bool {
        self.relations.iter().any(|r| match r {
            MonomialRelation::Product(x, y) => (*x == g && *y == h) || (self.commutative && *x == h && *y == g),
            _ => false,
        })
    }

    fn validate(&self) -> Result<()> {
        for l in &self.generators {
            if l.degree == 0 {
                return Err(HopfError::Validation(format!("generator {} has degree 0", l.label)));
            }
        }
        for r in &self.relations {
            let (a, b) = match r {
                MonomialRelation::Power(g, e) => {
                    if *e == 0 {
                        return Err(HopfError::Validation("relation g^0 = 0 kills the unit".into()));
                    }
                    (*g, *g)
                }
                MonomialRelation::Product(g, h) => (*g, *h),
            };
            if a >= self.generators.len() || b >= self.generators.len() {
                return Err(HopfError::Validation("relation names an unknown generator".into()));
            }
        }
        Ok(())
    }

    /// Admissible monomials up to `bound`, as exponent vectors (commutative)
    /// or words (otherwise), grouped by degree.
    fn admissible(&self, bound: usize) -> Vec<Vec<Vec<usize>>> {
        let n = self.generators.len();
        let mut by_degree: Vec<Vec<Vec<usize>>> = vec![Vec::new(); bound + 1];
        if self.commutative {
            by_degree[0].push(vec![0; n]);
            let mut stack = vec![(0usize, vec![0usize; n], 0usize)];
            while let Some((g, e, d)) = stack.pop() {
                if g == n {
                    if d > 0 {
                        by_degree[d].push(e);
                    }
                    continue;
                }
                let mut k = 0;
                loop {
                    let deg = d + k * self.generators[g].degree;
                    if deg > bound || self.height(g).is_some_and(|h| k >= h) {
                        break;
                    }
                    if k > 0 && (0..g).any(|h| e[h] > 0 && self.forbids_pair(h, g)) {
                        break;
                    }
                    let mut next = e.clone();
                    next[g] = k;
                    stack.push((g + 1, next, deg));
                    k += 1;
                }
            }
            for ws in by_degree.iter_mut() {
                ws.sort_by(|a, b| b.cmp(a));
            }
        } else {
            by_degree[0].push(Vec::new());
            for d in 1..=bound {
                let mut ws = Vec::new();
                for (g, l) in self.generators.iter().enumerate() {
                    if l.degree > d {
                        continue;
                    }
                    for prefix in &by_degree[d - l.degree] {
                        if prefix.last().is_some_and(|h| self.forbids_pair(*h, g)) {
                            continue;
                        }
                        let run = prefix.iter().rev().take_while(|h| **h == g).count() + 1;
                        if self.height(g).is_some_and(|h| run >= h) {
                            continue;
                        }
                        let mut w = prefix.clone();
                        w.push(g);
                        ws.push(w);
                    }
                }
                ws.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
                by_degree[d] = ws;
            }
        }
        by_degree
    }

    fn label(&self, m: &[usize]) -> String {
        let mut out = String::new();
        if self.commutative {
            for (g, e) in m.iter().enumerate() {
                if *e > 0 {
                    out.push_str(&self.generators[g].label);
                    if *e > 1 {
                        out.push_str(&format!("^{e}"));
                    }
                }
            }
        } else {
            let mut i = 0;
            while i < m.len() {
                let mut j = i;
                while j < m.len() && m[j] == m[i] {
                    j += 1;
                }
                out.push_str(&self.generators[m[i]].label);
                if j - i > 1 {
                    out.push_str(&format!("^{}", j - i));
                }
                i = j;
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    /// The bialgebra with every generator primitive. The relations must
    /// generate a Hopf ideal (e.g. `g^{p^k} = 0` in characteristic `p`);
    /// [`check_axioms`](super::axioms::check_axioms) detects when they do not.
    pub fn primitively_generated(&self, bound: usize) -> Result<Bialgebra> {
        let algebra = self.build(bound)?;
        let field = self.field;
        let gens: Vec<usize> = self
            .generators
            .iter()
            .filter_map(|g| algebra.basis.index_of(&g.label))
            .collect();
        let mut coproducts: Vec<Option<Tensor2>> = vec![None; algebra.len()];
        coproducts[0] = Some(Tensor2::single((0, 0), field.one()));
        for &g in &gens {
            let mut t = Tensor2::single((g, 0), field.one());
            t.add_term((0, g), field.one());
            coproducts[g] = Some(t);
        }
        for j in 1..algebra.len() {
            for &g in &gens {
                if algebra.degree(j) + algebra.degree(g) > bound {
                    continue;
                }
                let v = algebra.mul(j, g);
                let Some((i, c)) = v.iter().next() else { continue };
                if coproducts[*i].is_none() {
                    let inv = c.inverse().expect("nonzero coefficient");
                    let dj = coproducts[j].as_ref().expect("lower degree first");
                    let dg = coproducts[g].as_ref().expect("generator");
                    coproducts[*i] = Some(algebra.mul_tensor(dj, dg).scaled(&inv));
                }
            }
        }
        let coproducts = coproducts
            .into_iter()
            .map(|t| t.ok_or_else(|| HopfError::Validation("monomial not reachable from generators".into())))
            .collect::<Result<Vec<_>>>()?;
        let coalgebra = GradedCoalgebra {
            field,
            basis: algebra.basis.clone(),
            coproducts,
            cocommutative: true,
            complete: algebra.complete,
        };
        Bialgebra::new(algebra, coalgebra, None, Shape::Plain)
    }

    /// The algebra with basis the admissible monomials of degree `≤ bound`.
    pub fn build(&self, bound: usize) -> Result<GradedAlgebra> {
        self.validate()?;
        let max_gen = self.generators.iter().map(|g| g.degree).max().unwrap_or(0);
        let extended = self.admissible(bound + max_gen);
        let complete = extended[bound + 1..].iter().all(|ws| ws.is_empty());
        let monomials: Vec<Vec<usize>> = extended.into_iter().take(bound + 1).flatten().collect();
        let degree_of = |m: &[usize]| -> usize {
            if self.commutative {
                m.iter().zip(&self.generators).map(|(e, g)| e * g.degree).sum()
            } else {
                m.iter().map(|g| self.generators[*g].degree).sum()
            }
        };
        let entries = monomials.iter().map(|m| (self.label(m), degree_of(m))).collect();
        let basis = Arc::new(Basis::new(bound, entries)?);
        let index: HashMap<&[usize], usize> = monomials.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();

        let field = self.field;
        let mut table = HashMap::new();
        for i in 1..monomials.len() {
            for j in 1..monomials.len() {
                if basis.degree(i) + basis.degree(j) > bound {
                    continue;
                }
                let (a, b) = (&monomials[i], &monomials[j]);
                let (product, odd) = if self.commutative {
                    let e: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    let mut odd = false;
                    for (gi, ei) in a.iter().enumerate() {
                        for (gj, fj) in b.iter().enumerate().take(gi) {
                            let di = self.generators[gi].degree;
                            let dj = self.generators[gj].degree;
                            if koszul(ei * di, fj * dj) {
                                odd = !odd;
                            }
                        }
                    }
                    (e, odd)
                } else {
                    ([a.as_slice(), b.as_slice()].concat(), false)
                };
                if let Some(k) = index.get(product.as_slice()) {
                    table.insert((i, j), Vector::single(*k, field.sign(odd)));
                }
            }
        }
        Ok(GradedAlgebra {
            field,
            basis,
            product: Product::Table(table),
            commutative: self.commutative,
            complete,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letter(label: &str, degree: usize) -> Letter {
        Letter {
            label: label.into(),
            degree,
        }
    }

    #[test]
    fn square_of_a_primitive_in_char_two() {
        let f = Field::prime(2).unwrap();
        let h = FreePresentation::primitive(f, vec![letter("x", 1)]).build(4).unwrap();
        assert_eq!(h.basis().labels(), ["1", "x", "x^2", "x^3", "x^4"]);
        let x2 = h.index_of("x^2").unwrap();
        assert_eq!(h.format_tensor(h.coproduct(x2)), "1⊗x^2 + x^2⊗1");
        assert!(h.is_commutative() && h.is_cocommutative());
    }

    #[test]
    fn h11_coproduct_of_y() {
        let f = Field::prime(2).unwrap();
        let mut reduced = vec![WordTensor::new(), WordTensor::new()];
        reduced[1].add_term((vec![0], vec![0]), f.one());
        let pres = FreePresentation {
            field: f,
            letters: vec![letter("x", 1), letter("y", 2)],
            reduced,
        };
        let h = pres.build(6).unwrap();
        let y = h.generator("y").unwrap();
        assert_eq!(h.format_tensor(h.coproduct(y)), "1⊗y + x⊗x + y⊗1");
        assert!(!h.is_commutative());
    }

    #[test]
    fn non_counital_generator_is_rejected() {
        let f = Field::prime(2).unwrap();
        let mut reduced = vec![WordTensor::new(), WordTensor::new()];
        reduced[1].add_term((vec![1], Vec::new()), f.one());
        let pres = FreePresentation {
            field: f,
            letters: vec![letter("x", 1), letter("y", 2)],
            reduced,
        };
        let err = pres.build(4).unwrap_err();
        assert!(err.to_string().contains("generator y"));
    }

    #[test]
    fn truncated_polynomial_algebra() {
        let f = Field::prime(2).unwrap();
        let pres = MonomialAlgebraPresentation {
            field: f,
            generators: vec![letter("y", 2)],
            relations: vec![MonomialRelation::Power(0, 3)],
            commutative: true,
        };
        let a = pres.build(8).unwrap();
        assert_eq!(a.basis.labels(), ["1", "y", "y^2"]);
        assert!(a.mul(1, 2).is_zero());
        assert_eq!(a.mul(1, 1), a.basis_vector(2));
        assert!(a.complete);
    }

    #[test]
    fn koszul_signs_for_odd_generators() {
        let f = Field::Rational;
        let pres = MonomialAlgebraPresentation {
            field: f,
            generators: vec![letter("a", 1), letter("b", 1), letter("c", 2)],
            relations: Vec::new(),
            commutative: true,
        };
        let alg = pres.build(4).unwrap();
        let a = alg.basis.index_of("a").unwrap();
        let b = alg.basis.index_of("b").unwrap();
        let ab = alg.basis.index_of("ab").unwrap();
        assert!(alg.basis.index_of("a^2").is_none());
        assert_eq!(alg.mul(a, b), alg.basis_vector(ab));
        assert_eq!(alg.mul(b, a), alg.basis_vector(ab).scaled(&f.from_i64(-1)));
        assert!(!alg.complete);
    }

    #[test]
    fn noncommutative_monomial_words() {
        let f = Field::prime(3).unwrap();
        let pres = MonomialAlgebraPresentation {
            field: f,
            generators: vec![letter("x", 1), letter("y", 1)],
            relations: vec![MonomialRelation::Product(0, 1), MonomialRelation::Power(1, 2)],
            commutative: false,
        };
        let alg = pres.build(3).unwrap();
        assert_eq!(alg.basis.labels(), ["1", "x", "y", "x^2", "yx", "x^3", "yx^2"]);
        let (x, y) = (1, 2);
        assert!(alg.mul(x, y).is_zero());
        assert_eq!(alg.mul(y, x), alg.basis_vector(4));
    }
}
