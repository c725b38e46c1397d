//! Hopf algebra maps out of free bialgebras, found generator by generator.

use std::collections::BTreeMap;

use crate::error::{HopfError, Result};
use crate::hopf::{indecomposables, Bialgebra, Indecomposables};
use crate::linear::{rank_of, AffineSystem, Field, Scalar, Solution, Tensor2, Vector};

/// Default number of candidate evaluations for [`hopf_morphism_search`].
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A bialgebra map `φ` out of a free bialgebra.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfMorphismWitness {
    /// `(label, φ(g))` for every generator, in target basis indices.
    pub generator_images: Vec<(String, Vector)>,
    /// `φ` of every source basis element.
    pub images: Vec<Vector>,
    pub is_iso_on_q: bool,
    /// `φ` is bijective in every degree up to the bound.
    pub is_iso: bool,
}

impl HopfMorphismWitness {
    /// Rank of `φ` in degree `d`.
    pub fn rank(&self, source: &Bialgebra, d: usize) -> usize {
        let images: Vec<Vector> = source.basis().range(d).map(|i| self.images[i].clone()).collect();
        rank_of(source.field(), &images)
    }
}

/// Searches for a bialgebra map `φ: source → target` inducing `q_spec` on
/// indecomposables. `q_spec[q]` is the image of source `Q` basis element
/// `q` in target `Q` indices.
///
/// Each generator image is the chosen representative of its prescribed
/// class plus an unknown decomposable, constrained by
/// `Δ̄(φg) = (φ⊗φ)(Δ̄g)`. Over `F_p` the solution spaces are enumerated
/// depth first and at most `budget` candidates are evaluated.
pub fn hopf_morphism_search(
    source: &Bialgebra,
    target: &Bialgebra,
    q_spec: &[Vector],
    budget: u64,
) -> Result<HopfMorphismWitness> {
    let pres = source
        .free_presentation()
        .ok_or_else(|| HopfError::Domain("the source must be free on listed generators".into()))?;
    let words = source.words.clone().expect("free bialgebra has words");
    if source.field() != target.field() || source.bound() != target.bound() {
        return Err(HopfError::Validation(
            "source and target must share field and bound".into(),
        ));
    }
    let qs = indecomposables(source)?;
    let qt = indecomposables(target)?;
    if q_spec.len() != qs.len() {
        return Err(HopfError::Validation(format!(
            "q_spec has {} images for {} indecomposables",
            q_spec.len(),
            qs.len()
        )));
    }
    for (q, image) in q_spec.iter().enumerate() {
        if image.keys().any(|t| *t >= qt.len() || qt.degree(*t) != qs.degree(q)) {
            return Err(HopfError::Validation(format!(
                "q_spec image of {} is not homogeneous",
                qs.label(q)
            )));
        }
    }
    check_v_map(&qs, &qt, q_spec, source.field())?;

    let mut order: Vec<usize> = (0..pres.letters.len()).collect();
    order.sort_by_key(|l| (pres.letters[*l].degree, *l));
    let mut search = Search {
        target,
        qt: &qt,
        reduced: pres
            .reduced
            .iter()
            .map(|t| {
                t.iter()
                    .map(|((a, b), c)| ((a.clone(), b.clone()), c.clone()))
                    .collect::<Vec<_>>()
            })
            .collect(),
        order: order.clone(),
        classes: order
            .iter()
            .map(|l| {
                let g = words.letter_word(*l).expect("letter within bound");
                let q = qs.project(&source.algebra.basis_vector(g));
                let mut image = Vector::new();
                for (qi, c) in q.iter() {
                    image.add_scaled(&q_spec[*qi], c);
                }
                qt.section_vector(&image)
            })
            .collect(),
        degrees: order.iter().map(|l| pres.letters[*l].degree).collect(),
        letter_images: vec![Vector::new(); pres.letters.len()],
        budget,
        spent: 0,
        obstructed: None,
    };
    if !search.level(0)? {
        let degree = search.obstructed.unwrap_or(0);
        return Err(HopfError::infeasible(
            "theorems::hopf_morphism_search",
            degree,
            "no lift of q_spec",
        ));
    }

    let mut images: Vec<Vector> = Vec::with_capacity(source.len());
    for x in 0..source.len() {
        let w = words.word(x);
        let image = match w.len() {
            0 => target.algebra.unit(),
            1 => search.letter_images[w[0]].clone(),
            n => {
                let prefix = words.index_of(&w[..n - 1]).expect("prefix is a word");
                target.mul_vec(&images[prefix], &search.letter_images[w[n - 1]])
            }
        };
        images.push(image);
    }
    let is_iso_on_q = (0..=source.bound()).all(|d| {
        let src = qs.indices_in_degree(d);
        let tgt = qt.indices_in_degree(d);
        src.len() == tgt.len()
            && rank_of(
                source.field(),
                &src.iter().map(|q| q_spec[*q].clone()).collect::<Vec<_>>(),
            ) == src.len()
    });
    let mut witness = HopfMorphismWitness {
        generator_images: pres
            .letters
            .iter()
            .zip(&search.letter_images)
            .map(|(l, v)| (l.label.clone(), v.clone()))
            .collect(),
        images,
        is_iso_on_q,
        is_iso: false,
    };
    witness.is_iso = (0..=source.bound())
        .all(|d| source.basis().dim(d) == target.basis().dim(d) && witness.rank(source, d) == source.basis().dim(d));
    Ok(witness)
}

fn check_v_map(qs: &Indecomposables, qt: &Indecomposables, q_spec: &[Vector], field: Field) -> Result<()> {
    if !matches!(field, Field::Prime(_)) {
        return Ok(());
    }
    let (Ok(_), Ok(_)) = (qs.v_module(), qt.v_module()) else {
        return Ok(());
    };
    let apply = |v: &Vector| {
        let mut out = Vector::new();
        for (q, c) in v.iter() {
            out.add_scaled(&q_spec[*q], c);
        }
        out
    };
    for q in 0..qs.len() {
        let lhs = apply(&qs.v_of(q)?);
        let mut rhs = Vector::new();
        for (t, c) in q_spec[q].iter() {
            rhs.add_scaled(&qt.v_of(*t)?, c);
        }
        if lhs != rhs {
            return Err(HopfError::Validation(format!(
                "q_spec does not commute with V on {}",
                qs.label(q)
            )));
        }
    }
    Ok(())
}

struct Search<'a> {
    target: &'a Bialgebra,
    qt: &'a Indecomposables,
    /// Reduced coproduct of each letter as pairs of words.
    reduced: Vec<Vec<((Vec<usize>, Vec<usize>), Scalar)>>,
    /// Letters in increasing degree.
    order: Vec<usize>,
    /// Representative of the prescribed class of each letter in `order`.
    classes: Vec<Vector>,
    degrees: Vec<usize>,
    letter_images: Vec<Vector>,
    budget: u64,
    spent: u64,
    obstructed: Option<usize>,
}

impl Search<'_> {
    fn word_image(&self, w: &[usize]) -> Vector {
        let mut out = self.target.algebra.unit();
        for l in w {
            out = self.target.mul_vec(&out, &self.letter_images[*l]);
        }
        out
    }

    /// Solution space for the letter at position `level` of `order`, given
    /// the images of all earlier letters. Variables are coefficients of the
    /// decomposables echelon rows in its degree.
    fn solve(&self, level: usize) -> Option<(Solution, Vec<Vector>)> {
        let field = self.target.field();
        let l = self.order[level];
        let d = self.degrees[level];
        let dec: Vec<Vector> = self.qt.decomposables(d).rows().cloned().collect();

        let mut rhs = Tensor2::new();
        for ((a, b), c) in &self.reduced[l] {
            let (fa, fb) = (self.word_image(a), self.word_image(b));
            for (i, x) in fa.iter() {
                for (j, y) in fb.iter() {
                    rhs.add_term((*i, *j), &(x * y) * c);
                }
            }
        }
        rhs.sub_assign(&self.target.reduced_vec(&self.classes[level]));

        let mut rows: BTreeMap<(usize, usize), Vector> = rhs.keys().map(|k| (*k, Vector::new())).collect();
        for (k, delta) in dec.iter().enumerate() {
            for (ab, c) in self.target.reduced_vec(delta).iter() {
                rows.entry(*ab).or_default().add_term(k, c.clone());
            }
        }
        let mut system = AffineSystem::new(field, dec.len());
        for (ab, row) in &rows {
            let r = rhs.coeff(ab).cloned().unwrap_or_else(|| field.zero());
            if !system.add(row, &r) {
                return None;
            }
        }
        system.solve().map(|s| (s, dec))
    }

    fn assign(&mut self, level: usize, point: &Vector, dec: &[Vector]) {
        let mut image = self.classes[level].clone();
        for (k, c) in point.iter() {
            image.add_scaled(&dec[*k], c);
        }
        self.letter_images[self.order[level]] = image;
    }

    fn level(&mut self, level: usize) -> Result<bool> {
        if level == self.order.len() {
            return Ok(true);
        }
        let Some((solution, dec)) = self.solve(level) else {
            let d = self.degrees[level];
            self.obstructed = Some(self.obstructed.map_or(d, |o| o.min(d)));
            return Ok(false);
        };
        let elements = match self.target.field().elements() {
            Some(e) => e,
            None => {
                self.spend()?;
                self.assign(level, &solution.particular, &dec);
                return self.level(level + 1);
            }
        };
        // Base-p counter over the kernel coordinates, particular point first.
        let mut digits = vec![0usize; solution.dimension()];
        loop {
            self.spend()?;
            let lambdas: Vec<Scalar> = digits.iter().map(|i| elements[*i].clone()).collect();
            let point = solution.point(&lambdas);
            self.assign(level, &point, &dec);
            if self.level(level + 1)? {
                return Ok(true);
            }
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    return Ok(false);
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

    fn spend(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(HopfError::Budget(self.budget));
        }
        Ok(())
    }
}

/// The identity on indecomposables, for a map between bialgebras whose `Q`
/// bases correspond label by label.
pub fn q_by_labels(source: &Bialgebra, target: &Bialgebra, pairs: &[(&str, &str)]) -> Result<Vec<Vector>> {
    let qs = indecomposables(source)?;
    let qt = indecomposables(target)?;
    let field = source.field();
    let mut out = vec![Vector::new(); qs.len()];
    for (a, b) in pairs {
        let find = |q: &Indecomposables, h: &Bialgebra, label: &str| -> Result<usize> {
            let i = h
                .index_of(label)
                .ok_or_else(|| HopfError::Validation(format!("unknown basis element {label}")))?;
            let v = q.project(&Vector::single(i, field.one()));
            let found = match v.iter().next() {
                Some((k, c)) if v.len() == 1 && c.is_one() => Some(*k),
                _ => None,
            };
            found.ok_or_else(|| HopfError::Validation(format!("{label} is not a Q basis element")))
        };
        out[find(&qs, source, a)?] = Vector::single(find(&qt, target, b)?, field.one());
    }
    Ok(out)
}
