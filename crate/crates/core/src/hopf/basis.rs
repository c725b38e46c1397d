//! Graded bases indexed globally by `usize`, and word bases of tensor
//! (co)algebras.

use std::collections::HashMap;
use std::ops::Range;

use crate::error::{HopfError, Result};
use crate::linear::{Field, GradedSpace};

/// A basis of a connected graded space in degrees `0..=N`. Index `0` is the
/// unit in degree 0; indices are sorted by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    bound: usize,
    degrees: Vec<usize>,
    labels: Vec<String>,
    offsets: Vec<usize>,
    index: HashMap<String, usize>,
}

impl Basis {
    /// `entries` lists `(label, degree)` in increasing degree, starting with
    /// the single degree-0 element.
    pub fn new(bound: usize, entries: Vec<(String, usize)>) -> Result<Self> {
        if entries.first().map(|e| e.1) != Some(0) || entries.iter().skip(1).any(|e| e.1 == 0) {
            return Err(HopfError::Structural(
                "a connected basis has exactly one element in degree 0, listed first".into(),
            ));
        }
        if entries.windows(2).any(|w| w[0].1 > w[1].1) {
            return Err(HopfError::Structural("basis entries must be sorted by degree".into()));
        }
        if let Some(e) = entries.iter().find(|e| e.1 > bound) {
            return Err(HopfError::truncation("hopf_core::basis", e.1, bound));
        }
        let mut offsets = vec![0; bound + 2];
        for (_, d) in &entries {
            offsets[d + 1] += 1;
        }
        for d in 1..offsets.len() {
            offsets[d] += offsets[d - 1];
        }
        let mut index = HashMap::new();
        for (i, (l, _)) in entries.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(HopfError::Structural(format!("duplicate basis label {l}")));
            }
        }
        let (labels, degrees) = entries.into_iter().unzip();
        Ok(Basis {
            bound,
            degrees,
            labels,
            offsets,
            index,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Indices of the basis elements of degree `d` (empty above the bound).
    pub fn range(&self, d: usize) -> Range<usize> {
        if d > self.bound {
            return 0..0;
        }
        self.offsets[d]..self.offsets[d + 1]
    }

    pub fn dim(&self, d: usize) -> usize {
        self.range(d).len()
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.bound).map(|d| self.dim(d)).collect()
    }

    /// Indices of positive degree.
    pub fn positive(&self) -> Range<usize> {
        1..self.len()
    }

    pub fn graded_space(&self, field: Field) -> GradedSpace {
        let labels = (0..=self.bound)
            .map(|d| self.range(d).map(|i| self.labels[i].clone()).collect())
            .collect();
        GradedSpace::new(field, labels).expect("labels are distinct")
    }

    /// The reduced part as a graded space (degree 0 dropped).
    pub fn reduced_space(&self, field: Field) -> GradedSpace {
        let labels = (0..=self.bound)
            .map(|d| {
                if d == 0 {
                    Vec::new()
                } else {
                    self.range(d).map(|i| self.labels[i].clone()).collect()
                }
            })
            .collect();
        GradedSpace::new(field, labels).expect("labels are distinct")
    }
}

/// A letter of a word basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub label: String,
    pub degree: usize,
}

/// How word basis elements are printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordStyle {
    /// Juxtaposed letters with runs as powers: `x^2yz`.
    Monomial,
    /// Bracketed letter lists: `[y|y^2]`.
    Bracket,
}

/// All words of total degree `≤ N` in a graded alphabet, ordered by degree,
/// then length, then lexicographically in letter indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordBasis {
    letters: Vec<Letter>,
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    style: WordStyle,
}

impl WordBasis {
    pub fn new(letters: Vec<Letter>, bound: usize, style: WordStyle) -> Result<Self> {
        if let Some(l) = letters.iter().find(|l| l.degree == 0) {
            return Err(HopfError::Validation(format!("letter {} has degree 0", l.label)));
        }
        let mut by_degree: Vec<Vec<Vec<usize>>> = vec![Vec::new(); bound + 1];
        by_degree[0].push(Vec::new());
        for d in 1..=bound {
            let mut ws = Vec::new();
            for (li, l) in letters.iter().enumerate() {
                if l.degree > d {
                    continue;
                }
                for rest in &by_degree[d - l.degree] {
                    let mut w = Vec::with_capacity(rest.len() + 1);
                    w.push(li);
                    w.extend_from_slice(rest);
                    ws.push(w);
                }
            }
            ws.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            by_degree[d] = ws;
        }
        let words: Vec<Vec<usize>> = by_degree.into_iter().flatten().collect();
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(WordBasis {
            letters,
            words,
            index,
            style,
        })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn style(&self) -> WordStyle {
        self.style
    }

    pub fn with_style(&self, style: WordStyle) -> Self {
        WordBasis { style, ..self.clone() }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Index of the concatenation, if it lies within the bound.
    pub fn concat(&self, a: usize, b: usize) -> Option<usize> {
        let mut w = self.words[a].clone();
        w.extend_from_slice(&self.words[b]);
        self.index_of(&w)
    }

    /// Index of the one-letter word on letter `l`.
    pub fn letter_word(&self, l: usize) -> Option<usize> {
        self.index_of(&[l])
    }

    pub fn word_degree(&self, word: &[usize]) -> usize {
        word.iter().map(|l| self.letters[*l].degree).sum()
    }

    pub fn label_of(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        match self.style {
            WordStyle::Bracket => {
                let parts: Vec<&str> = word.iter().map(|l| self.letters[*l].label.as_str()).collect();
                format!("[{}]", parts.join("|"))
            }
            WordStyle::Monomial => {
                let mut out = String::new();
                let mut i = 0;
                while i < word.len() {
                    let mut j = i;
                    while j < word.len() && word[j] == word[i] {
                        j += 1;
                    }
                    out.push_str(&self.letters[word[i]].label);
                    if j - i > 1 {
                        out.push_str(&format!("^{}", j - i));
                    }
                    i = j;
                }
                out
            }
        }
    }

    /// The basis entries `(label, degree)` in index order.
    pub fn entries(&self) -> Vec<(String, usize)> {
        self.words
            .iter()
            .map(|w| (self.label_of(w), self.word_degree(w)))
            .collect()
    }

    /// The matching graded basis.
    pub fn basis(&self, bound: usize) -> Result<Basis> {
        Basis::new(bound, self.entries())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(spec: &[(&str, usize)]) -> Vec<Letter> {
        spec.iter()
            .map(|(l, d)| Letter {
                label: l.to_string(),
                degree: *d,
            })
            .collect()
    }

    #[test]
    fn word_counts_follow_the_composition_recurrence() {
        let wb = WordBasis::new(letters(&[("x", 1), ("y", 2), ("z", 4)]), 12, WordStyle::Monomial).unwrap();
        let basis = wb.basis(12).unwrap();
        let mut a = vec![1usize; 13];
        for n in 1..=12 {
            a[n] = a[n - 1] + if n >= 2 { a[n - 2] } else { 0 } + if n >= 4 { a[n - 4] } else { 0 };
        }
        assert_eq!(basis.dims(), a);
    }

    #[test]
    fn labels_and_order() {
        let wb = WordBasis::new(letters(&[("x", 1), ("y", 2)]), 3, WordStyle::Monomial).unwrap();
        let labels: Vec<String> = wb.entries().into_iter().map(|e| e.0).collect();
        assert_eq!(labels, ["1", "x", "y", "x^2", "xy", "yx", "x^3"]);
        let br = wb.with_style(WordStyle::Bracket);
        assert_eq!(br.label_of(&[0, 0, 1]), "[x|x|y]");
    }
}
