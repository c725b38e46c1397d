//! JSON presentation documents for algebras, coalgebras and free Hopf
//! algebras.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "kind": "free-hopf",
//!   "characteristic": 2,
//!   "truncation": 12,
//!   "generators": [{"name": "x", "degree": 1}, {"name": "y", "degree": 2}],
//!   "coproducts": {"y": "x@x"}
//! }
//! ```
//!
//! `algebra` documents list monomial `relations` (`y^3`, `u*w`) of a
//! commutative algebra `A` and stand for `J∨(A)`. `coalgebra` documents give
//! the reduced coproduct of each basis element of `C̄` in terms of the others
//! and stand for `J(C)`. `free-hopf` documents give the reduced coproduct of
//! each generator of a tensor algebra as a combination of tensors of words.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};
use crate::free_cofree::{build_j, build_jvee};
use crate::hopf::parse::{parse_tensor, parse_word};
use crate::hopf::{
    format_combination, Basis, Bialgebra, FreePresentation, GradedAlgebra, GradedCoalgebra, Letter,
    MonomialAlgebraPresentation, MonomialRelation, WordBasis, WordStyle,
};
use crate::linear::{Field, Tensor2};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DocumentKind {
    Algebra,
    Coalgebra,
    FreeHopf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    pub schema: u32,
    pub kind: DocumentKind,
    pub characteristic: u32,
    pub truncation: usize,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coproducts: BTreeMap<String, String>,
}

/// A parsed presentation.
#[derive(Clone, Debug, PartialEq)]
pub enum Presentation {
    /// A commutative monomial algebra `A`, standing for `J∨(A)`.
    Algebra(MonomialAlgebraPresentation),
    /// A cocommutative coalgebra `C`, standing for `J(C)`.
    Coalgebra(GradedCoalgebra),
    Free(FreePresentation),
}

impl Presentation {
    pub fn field(&self) -> Field {
        match self {
            Presentation::Algebra(a) => a.field,
            Presentation::Coalgebra(c) => c.field,
            Presentation::Free(f) => f.field,
        }
    }

    /// The Hopf algebra the presentation stands for, up to `bound`.
    pub fn hopf(&self, bound: usize) -> Result<Bialgebra> {
        match self {
            Presentation::Algebra(a) => build_jvee(&a.build(bound)?, bound),
            Presentation::Coalgebra(c) => {
                if c.basis.bound() < bound {
                    return Err(HopfError::truncation("document", bound, c.basis.bound()));
                }
                build_j(c, bound)
            }
            Presentation::Free(f) => f.build(bound),
        }
    }

    /// The algebra `A` of an algebra presentation.
    pub fn algebra(&self, bound: usize) -> Result<GradedAlgebra> {
        match self {
            Presentation::Algebra(a) => a.build(bound),
            _ => Err(HopfError::Validation("an algebra document is required".into())),
        }
    }

    pub fn to_document(&self, truncation: usize) -> Result<PresentationDocument> {
        let characteristic = self.field().characteristic();
        let spec = |letters: &[Letter]| -> Vec<GeneratorSpec> {
            letters
                .iter()
                .map(|l| GeneratorSpec {
                    name: l.label.clone(),
                    degree: l.degree,
                })
                .collect()
        };
        let mut doc = PresentationDocument {
            schema: SCHEMA,
            kind: DocumentKind::Algebra,
            characteristic,
            truncation,
            generators: Vec::new(),
            relations: Vec::new(),
            coproducts: BTreeMap::new(),
        };
        match self {
            Presentation::Algebra(a) => {
                if !a.commutative {
                    return Err(HopfError::Validation("algebra documents are commutative".into()));
                }
                doc.generators = spec(&a.generators);
                let name = |g: usize| a.generators[g].label.clone();
                doc.relations = a
                    .relations
                    .iter()
                    .map(|r| match r {
                        MonomialRelation::Power(g, e) => format!("{}^{e}", name(*g)),
                        MonomialRelation::Product(g, h) => format!("{}*{}", name(*g), name(*h)),
                    })
                    .collect();
            }
            Presentation::Coalgebra(c) => {
                doc.kind = DocumentKind::Coalgebra;
                doc.generators = (1..c.len())
                    .map(|i| GeneratorSpec {
                        name: c.basis.label(i).to_string(),
                        degree: c.degree(i),
                    })
                    .collect();
                for i in 1..c.len() {
                    let reduced = c.reduced(i);
                    if reduced.is_empty() {
                        continue;
                    }
                    let text = format_combination(
                        reduced
                            .iter()
                            .map(|((a, b), s)| (format!("{}@{}", c.basis.label(*a), c.basis.label(*b)), s)),
                    );
                    doc.coproducts.insert(c.basis.label(i).to_string(), text);
                }
            }
            Presentation::Free(f) => {
                doc.kind = DocumentKind::FreeHopf;
                doc.generators = spec(&f.letters);
                let words = WordBasis::new(f.letters.clone(), 0, WordStyle::Monomial)?;
                for (l, t) in f.letters.iter().zip(&f.reduced) {
                    if t.is_empty() {
                        continue;
                    }
                    let text = format_combination(
                        t.iter()
                            .map(|((a, b), s)| (format!("{}@{}", words.label_of(a), words.label_of(b)), s)),
                    );
                    doc.coproducts.insert(l.label.clone(), text);
                }
            }
        }
        check_integral(&doc)?;
        Ok(doc)
    }
}

/// Rational structure constants have no text form here.
fn check_integral(doc: &PresentationDocument) -> Result<()> {
    if let Some(t) = doc.coproducts.values().find(|t| t.contains('/')) {
        return Err(HopfError::Validation(format!("non-integral coefficient in `{t}`")));
    }
    Ok(())
}

impl PresentationDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PresentationDocument =
            serde_json::from_str(text).map_err(|e| HopfError::Parse(format!("presentation document: {e}")))?;
        if doc.schema != SCHEMA {
            return Err(HopfError::Validation(format!("unsupported schema {}", doc.schema)));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn letters(&self) -> Result<Vec<Letter>> {
        let mut seen = std::collections::HashSet::new();
        self.generators
            .iter()
            .map(|g| {
                if g.degree == 0 {
                    return Err(HopfError::Validation(format!("generator {} has degree 0", g.name)));
                }
                if !seen.insert(g.name.as_str()) {
                    return Err(HopfError::Validation(format!("duplicate generator {}", g.name)));
                }
                Ok(Letter {
                    label: g.name.clone(),
                    degree: g.degree,
                })
            })
            .collect()
    }

    /// The presentation in the document's own characteristic.
    pub fn to_presentation(&self) -> Result<Presentation> {
        let field = Field::from_characteristic(self.characteristic)?;
        let letters = self.letters()?;
        let index = |name: &str| -> Result<usize> {
            letters
                .iter()
                .position(|l| l.label == name)
                .ok_or_else(|| HopfError::Parse(format!("unknown generator `{name}`")))
        };
        match self.kind {
            DocumentKind::Algebra => {
                if !self.coproducts.is_empty() {
                    return Err(HopfError::Validation(
                        "algebra documents take relations, not coproducts".into(),
                    ));
                }
                let relations = self
                    .relations
                    .iter()
                    .map(|r| {
                        let r = r.trim();
                        if let Some((g, h)) = r.split_once('*') {
                            return Ok(MonomialRelation::Product(index(g.trim())?, index(h.trim())?));
                        }
                        let (g, e) = match r.split_once('^') {
                            Some((g, e)) => {
                                let e = e
                                    .trim()
                                    .parse()
                                    .map_err(|_| HopfError::Parse(format!("bad exponent in relation `{r}`")))?;
                                (g.trim(), e)
                            }
                            None => (r, 1),
                        };
                        Ok(MonomialRelation::Power(index(g)?, e))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Presentation::Algebra(MonomialAlgebraPresentation {
                    field,
                    generators: letters,
                    relations,
                    commutative: true,
                }))
            }
            DocumentKind::Coalgebra => {
                if !self.relations.is_empty() {
                    return Err(HopfError::Validation(
                        "coalgebra documents take coproducts, not relations".into(),
                    ));
                }
                let mut sorted = letters.clone();
                sorted.sort_by_key(|l| l.degree);
                if sorted != letters {
                    return Err(HopfError::Validation(
                        "coalgebra generators must be listed by degree".into(),
                    ));
                }
                let mut entries = vec![("1".to_string(), 0)];
                entries.extend(letters.iter().map(|l| (l.label.clone(), l.degree)));
                let basis = Arc::new(Basis::new(self.truncation, entries)?);
                let mut coproducts = vec![Tensor2::single((0, 0), field.one())];
                for (i, l) in letters.iter().enumerate() {
                    let mut t = Tensor2::single((i + 1, 0), field.one());
                    t.add_term((0, i + 1), field.one());
                    if let Some(text) = self.coproducts.get(&l.label) {
                        for ((a, b), c) in parse_tensor(text, &letters, field)?.iter() {
                            if a.len() != 1 || b.len() != 1 || letters[a[0]].degree + letters[b[0]].degree != l.degree {
                                return Err(HopfError::Validation(format!(
                                    "coproduct of {} must pair basis elements of total degree {}",
                                    l.label, l.degree
                                )));
                            }
                            t.add_term((a[0] + 1, b[0] + 1), c.clone());
                        }
                    }
                    coproducts.push(t);
                }
                if let Some(name) = self.coproducts.keys().find(|k| index(k).is_err()) {
                    return Err(HopfError::Parse(format!("unknown generator `{name}`")));
                }
                Ok(Presentation::Coalgebra(GradedCoalgebra {
                    field,
                    basis,
                    coproducts,
                    cocommutative: true,
                    complete: false,
                }))
            }
            DocumentKind::FreeHopf => {
                if !self.relations.is_empty() {
                    return Err(HopfError::Validation(
                        "free-hopf documents take coproducts, not relations".into(),
                    ));
                }
                let mut pres = FreePresentation::primitive(field, letters.clone());
                for (name, text) in &self.coproducts {
                    let l = index(name)?;
                    pres.reduced[l] = parse_tensor(text, &pres.letters, field)?;
                }
                Ok(Presentation::Free(pres))
            }
        }
    }
}

/// A word written in a bialgebra's own syntax, checked against its basis.
pub fn parse_element(h: &Bialgebra, text: &str) -> Result<crate::linear::Vector> {
    let words = h
        .words
        .as_ref()
        .ok_or_else(|| HopfError::Validation("elements can only be read in word bases".into()))?;
    let combo = crate::hopf::parse::parse_combination(text, words.letters(), h.field())?;
    let mut out = crate::linear::Vector::new();
    for (w, c) in combo.iter() {
        let i = words
            .index_of(w)
            .ok_or_else(|| HopfError::truncation("document", words.word_degree(w), h.bound()))?;
        out.add_term(i, c.clone());
    }
    Ok(out)
}

/// A single word in bracket or monomial syntax.
pub fn parse_single_word(h: &Bialgebra, text: &str) -> Result<Vec<usize>> {
    let words = h
        .words
        .as_ref()
        .ok_or_else(|| HopfError::Validation("elements can only be read in word bases".into()))?;
    parse_word(text, words.letters())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_document_round_trip() {
        let text = r#"{"schema": 1, "kind": "free-hopf", "characteristic": 2, "truncation": 8,
            "generators": [{"name": "x", "degree": 1}, {"name": "y", "degree": 2}], "coproducts": {"y": "x@x"}}"#;
        let doc = PresentationDocument::from_json(text).unwrap();
        let pres = doc.to_presentation().unwrap();
        let again = pres.to_document(8).unwrap();
        assert_eq!(doc, again);
        assert_eq!(PresentationDocument::from_json(&again.to_json()).unwrap(), doc);
    }

    #[test]
    fn algebra_relations_parse() {
        let text = r#"{"schema": 1, "kind": "algebra", "characteristic": 3, "truncation": 8,
            "generators": [{"name": "u", "degree": 2}, {"name": "w", "degree": 4}], "relations": ["u^3", "u*w"]}"#;
        let Presentation::Algebra(a) = PresentationDocument::from_json(text)
            .unwrap()
            .to_presentation()
            .unwrap()
        else {
            panic!("algebra expected")
        };
        assert_eq!(
            a.relations,
            vec![MonomialRelation::Power(0, 3), MonomialRelation::Product(0, 1)]
        );
    }

    #[test]
    fn bad_documents_are_rejected() {
        let unknown = r#"{"schema": 1, "kind": "free-hopf", "characteristic": 2, "truncation": 8,
            "generators": [{"name": "x", "degree": 1}], "coproducts": {"q": "x@x"}}"#;
        assert!(PresentationDocument::from_json(unknown)
            .unwrap()
            .to_presentation()
            .is_err());
        let schema = r#"{"schema": 2, "kind": "algebra", "characteristic": 2, "truncation": 8, "generators": []}"#;
        assert!(PresentationDocument::from_json(schema).is_err());
        let zero = r#"{"schema": 1, "kind": "algebra", "characteristic": 4, "truncation": 8, "generators": []}"#;
        assert!(PresentationDocument::from_json(zero)
            .unwrap()
            .to_presentation()
            .is_err());
    }
}
