//! Named fixtures: the standard small Hopf algebras and maps used as test
//! inputs and exposed by the command line.

use std::sync::Arc;

use crate::document::Presentation;
use crate::error::{HopfError, Result};
use crate::hopf::parse::letters;
use crate::hopf::{Basis, Bialgebra, FreePresentation, GradedCoalgebra, MonomialAlgebraPresentation, MonomialRelation};
use crate::linear::{Field, Tensor2, Vector};

/// A linear map between two fixtures, given on basis elements.
#[derive(Clone, Debug)]
pub struct GalleryMorphism {
    pub source: Bialgebra,
    pub target: Bialgebra,
    pub images: Vec<Vector>,
}

#[derive(Clone, Debug)]
pub enum GalleryObject {
    Hopf(Bialgebra),
    Morphism(GalleryMorphism),
}

impl GalleryObject {
    /// The bialgebra, or the source of a morphism.
    pub fn bialgebra(&self) -> &Bialgebra {
        match self {
            GalleryObject::Hopf(h) => h,
            GalleryObject::Morphism(m) => &m.source,
        }
    }
}

pub struct GalleryEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    /// `None` when every characteristic is allowed.
    pub characteristic: Option<u32>,
    pub description: &'static str,
    build: Builder,
}

enum Builder {
    Presented(fn(Field, usize) -> Result<Presentation>),
    /// A map, with the presentation of its source.
    Map(
        fn(Field, usize) -> Result<Presentation>,
        fn(Field, usize) -> Result<GalleryMorphism>,
    ),
}

const ENTRIES: &[GalleryEntry] = &[
    GalleryEntry {
        name: "qsym",
        aliases: &[],
        characteristic: None,
        description: "quasi-symmetric functions: J∨(k[t]) with |t| = 2",
        build: Builder::Presented(qsym),
    },
    GalleryEntry {
        name: "nsym",
        aliases: &[],
        characteristic: None,
        description: "noncommutative symmetric functions: J(C) for the divided power coalgebra on t_k, |t_k| = 2k",
        build: Builder::Presented(nsym),
    },
    GalleryEntry {
        name: "H1",
        aliases: &[],
        characteristic: Some(2),
        description: "T(x,y,z), |x|,|y|,|z| = 1,2,4, Δ̄(z) = y⊗y",
        build: Builder::Presented(h1),
    },
    GalleryEntry {
        name: "H2",
        aliases: &[],
        characteristic: Some(2),
        description: "T(x,y,z), |x|,|y|,|z| = 1,2,4, Δ̄(z) = x²⊗x²",
        build: Builder::Presented(h2),
    },
    GalleryEntry {
        name: "theta",
        aliases: &[],
        characteristic: Some(2),
        description: "the segment map H1 → H2 exchanging x² and y inside each x^a y^b z^c block",
        build: Builder::Map(h1, theta),
    },
    GalleryEntry {
        name: "H-sub",
        aliases: &[],
        characteristic: Some(2),
        description: "T(u,y,z) with u = x²: the common sub-Hopf algebra of H1 and H2, with the swap u ↔ y",
        build: Builder::Map(h_sub_source, h_sub),
    },
    GalleryEntry {
        name: "witt-1-0",
        aliases: &[],
        characteristic: Some(2),
        description: "H(1,0) = T(x), x primitive",
        build: Builder::Presented(witt_10),
    },
    GalleryEntry {
        name: "witt-1-1",
        aliases: &[],
        characteristic: Some(2),
        description: "H(1,1) = T(x,y), Δ̄(y) = x⊗x",
        build: Builder::Presented(witt_11),
    },
    GalleryEntry {
        name: "witt-1-2",
        aliases: &[],
        characteristic: Some(2),
        description: "H(1,2) = T(x,y,z), free on the V-module M(1,2)",
        build: Builder::Presented(witt_12),
    },
    GalleryEntry {
        name: "loops-cp2",
        aliases: &["qsym-cp2"],
        characteristic: None,
        description: "J∨(k[y]/(y³)) with |y| = 2",
        build: Builder::Presented(loops_cp2),
    },
    GalleryEntry {
        name: "loops-cp3",
        aliases: &[],
        characteristic: Some(2),
        description: "T(y1,y2,y3), |y_i| = 2i, Δ̄(y2) = y1⊗y1, Δ̄(y3) = y2⊗y1 + y1⊗y2",
        build: Builder::Presented(loops_cp3),
    },
    GalleryEntry {
        name: "omega-c",
        aliases: &[],
        characteristic: Some(2),
        description: "T(x,z), |x| = 1, |z| = 4, Δ̄(z) = x²⊗x²",
        build: Builder::Presented(omega_c),
    },
];

pub fn entries() -> &'static [GalleryEntry] {
    ENTRIES
}

pub fn find(name: &str) -> Option<&'static GalleryEntry> {
    ENTRIES.iter().find(|e| e.name == name || e.aliases.contains(&name))
}

/// One line per entry: name, aliases, characteristic and description.
pub fn listing() -> String {
    let mut out = String::new();
    for e in ENTRIES {
        let aliases = if e.aliases.is_empty() {
            String::new()
        } else {
            format!(" (alias {})", e.aliases.join(", "))
        };
        let char = e.characteristic.map_or("any".to_string(), |p| p.to_string());
        out.push_str(&format!("{}{aliases}\tchar {char}\t{}\n", e.name, e.description));
    }
    out
}

/// Builds an entry in characteristic `p` (0 for `Q`) up to degree `bound`.
pub fn gallery_build(name: &str, p: u32, bound: usize) -> Result<GalleryObject> {
    let (entry, field) = lookup(name, p)?;
    match entry.build {
        Builder::Presented(f) => Ok(GalleryObject::Hopf(f(field, bound)?.hopf(bound)?)),
        Builder::Map(_, f) => Ok(GalleryObject::Morphism(f(field, bound)?)),
    }
}

fn lookup(name: &str, p: u32) -> Result<(&'static GalleryEntry, Field)> {
    let entry = find(name).ok_or_else(|| {
        let names: Vec<&str> = ENTRIES.iter().map(|e| e.name).collect();
        HopfError::Validation(format!(
            "unknown gallery entry `{name}`; available: {}",
            names.join(", ")
        ))
    })?;
    if let Some(q) = entry.characteristic {
        if q != p {
            return Err(HopfError::Validation(format!(
                "{} is defined in characteristic {q} only",
                entry.name
            )));
        }
    }
    Ok((entry, Field::from_characteristic(p)?))
}

/// The presentation of an entry, or of the source of a map.
pub fn gallery_presentation(name: &str, p: u32, bound: usize) -> Result<Presentation> {
    let (entry, field) = lookup(name, p)?;
    match entry.build {
        Builder::Presented(f) | Builder::Map(f, _) => f(field, bound),
    }
}

/// Builds an entry that must be a bialgebra.
pub fn gallery_hopf(name: &str, p: u32, bound: usize) -> Result<Bialgebra> {
    match gallery_build(name, p, bound)? {
        GalleryObject::Hopf(h) => Ok(h),
        GalleryObject::Morphism(_) => Err(HopfError::Validation(format!("{name} is a morphism, not a bialgebra"))),
    }
}

fn free(field: Field, gens: &[(&str, usize)], coproducts: &[(&str, &str)]) -> Result<Presentation> {
    Ok(Presentation::Free(FreePresentation::parse(field, gens, coproducts)?))
}

fn polynomial(field: Field, relations: Vec<MonomialRelation>, label: &str) -> Presentation {
    Presentation::Algebra(MonomialAlgebraPresentation {
        field,
        generators: letters(&[(label, 2)]),
        relations,
        commutative: true,
    })
}

fn qsym(field: Field, _: usize) -> Result<Presentation> {
    Ok(polynomial(field, vec![], "t"))
}

fn loops_cp2(field: Field, _: usize) -> Result<Presentation> {
    Ok(polynomial(field, vec![MonomialRelation::Power(0, 3)], "y"))
}

/// The divided power coalgebra: `t_k` in degree `2k`, `Δ(t_k) = Σ t_i⊗t_{k−i}`.
pub fn divided_power_coalgebra(field: Field, bound: usize) -> Result<GradedCoalgebra> {
    let top = bound / 2;
    let mut entries = vec![("1".to_string(), 0)];
    entries.extend((1..=top).map(|k| (format!("t{k}"), 2 * k)));
    let basis = Arc::new(Basis::new(bound, entries)?);
    let coproducts = (0..=top)
        .map(|k| (0..=k).map(|i| ((i, k - i), field.one())).collect::<Tensor2>())
        .collect();
    Ok(GradedCoalgebra {
        field,
        basis,
        coproducts,
        cocommutative: true,
        complete: false,
    })
}

fn nsym(field: Field, bound: usize) -> Result<Presentation> {
    Ok(Presentation::Coalgebra(divided_power_coalgebra(field, bound)?))
}

const XYZ: &[(&str, usize)] = &[("x", 1), ("y", 2), ("z", 4)];
const WITT_Z: &str = "xy@x + x^3@x + y@y + x@x^3 + x@xy";

fn h1(field: Field, _: usize) -> Result<Presentation> {
    free(field, XYZ, &[("z", "y@y")])
}

fn h2(field: Field, _: usize) -> Result<Presentation> {
    free(field, XYZ, &[("z", "x^2@x^2")])
}

fn witt_10(field: Field, _: usize) -> Result<Presentation> {
    free(field, &[("x", 1)], &[])
}

fn witt_11(field: Field, _: usize) -> Result<Presentation> {
    free(field, &[("x", 1), ("y", 2)], &[("y", "x@x")])
}

fn witt_12(field: Field, _: usize) -> Result<Presentation> {
    free(field, XYZ, &[("y", "x@x"), ("z", WITT_Z)])
}

fn loops_cp3(field: Field, _: usize) -> Result<Presentation> {
    free(
        field,
        &[("y1", 2), ("y2", 4), ("y3", 6)],
        &[("y2", "y1@y1"), ("y3", "y2@y1 + y1@y2")],
    )
}

fn omega_c(field: Field, _: usize) -> Result<Presentation> {
    free(field, &[("x", 1), ("z", 4)], &[("z", "x^2@x^2")])
}

/// A block `x^{2i+ε} y^j z^k` of a word in `x, y, z` (letters 0, 1, 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// Cuts a word into blocks `x^a y^b z^c` scanning left to right, each run
/// taken as long as possible.
pub fn segments(word: &[usize]) -> Vec<Segment> {
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < word.len() {
        let mut run = [0usize; 3];
        for (letter, count) in run.iter_mut().enumerate() {
            while pos < word.len() && word[pos] == letter {
                *count += 1;
                pos += 1;
            }
        }
        out.push(Segment {
            x: run[0],
            y: run[1],
            z: run[2],
        });
    }
    out
}

/// `x^{2i+ε} y^j z^k ↦ x^{2j+ε} y^i z^k` on each block.
pub fn theta_word(word: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for s in segments(word) {
        let (i, eps, j) = (s.x / 2, s.x % 2, s.y);
        out.extend(std::iter::repeat_n(0, 2 * j + eps));
        out.extend(std::iter::repeat_n(1, i));
        out.extend(std::iter::repeat_n(2, s.z));
    }
    out
}

fn word_images(source: &Bialgebra, target: &Bialgebra, f: impl Fn(&[usize]) -> Vec<usize>) -> Result<Vec<Vector>> {
    let (src, tgt) = match (&source.words, &target.words) {
        (Some(s), Some(t)) => (s, t),
        _ => return Err(HopfError::Structural("word maps need word bases".into())),
    };
    (0..source.len())
        .map(|i| {
            let image = f(src.word(i));
            let k = tgt.index_of(&image).ok_or_else(|| {
                HopfError::invariant("gallery", format!("image of {} is not a basis word", source.label(i)))
            })?;
            Ok(Vector::single(k, source.field().one()))
        })
        .collect()
}

fn theta(field: Field, bound: usize) -> Result<GalleryMorphism> {
    let source = h1(field, bound)?.hopf(bound)?;
    let target = h2(field, bound)?.hopf(bound)?;
    let images = word_images(&source, &target, theta_word)?;
    Ok(GalleryMorphism { source, target, images })
}

const UYZ: &[(&str, usize)] = &[("u", 2), ("y", 2), ("z", 4)];

fn h_sub_source(field: Field, _: usize) -> Result<Presentation> {
    free(field, UYZ, &[("z", "y@y")])
}

fn h_sub(field: Field, bound: usize) -> Result<GalleryMorphism> {
    let source = h_sub_source(field, bound)?.hopf(bound)?;
    let target = free(field, UYZ, &[("z", "u@u")])?.hopf(bound)?;
    let swap = |w: &[usize]| w.iter().map(|l| [1, 0, 2][*l]).collect();
    let images = word_images(&source, &target, swap)?;
    Ok(GalleryMorphism { source, target, images })
}

/// The inclusion `T(u,y,z) → T(x,y,z)` with `u ↦ x²`.
pub fn h_sub_inclusion(sub: &Bialgebra, ambient: &Bialgebra) -> Result<Vec<Vector>> {
    word_images(sub, ambient, |w| {
        w.iter()
            .flat_map(|l| match l {
                0 => vec![0, 0],
                1 => vec![1],
                _ => vec![2],
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_axioms;

    fn word(s: &str) -> Vec<usize> {
        s.chars().map(|c| "xyz".find(c).unwrap()).collect()
    }

    #[test]
    fn printed_theta_values() {
        assert_eq!(theta_word(&word("xyz")), word("xxxz"));
        let w = [
            word("x"),
            word("yy"),
            word("zzz"),
            word("xxxx"),
            word("yyyyy"),
            word("zzzzzz"),
        ]
        .concat();
        let expected = [
            word("xxxxx"),
            word("zzz"),
            word("x").repeat(10),
            word("yy"),
            word("zzzzzz"),
        ]
        .concat();
        assert_eq!(theta_word(&w), expected);
    }

    #[test]
    fn segments_are_maximal_runs() {
        assert_eq!(
            segments(&word("xyzyx")),
            vec![
                Segment { x: 1, y: 1, z: 1 },
                Segment { x: 0, y: 1, z: 0 },
                Segment { x: 1, y: 0, z: 0 }
            ]
        );
    }

    #[test]
    fn every_bialgebra_entry_passes_the_axioms() {
        for e in entries() {
            let p = e.characteristic.unwrap_or(2);
            match gallery_build(e.name, p, 8).unwrap() {
                GalleryObject::Hopf(h) => assert!(check_axioms(&h).passed(), "{}", e.name),
                GalleryObject::Morphism(m) => {
                    assert!(
                        check_axioms(&m.source).passed() && check_axioms(&m.target).passed(),
                        "{}",
                        e.name
                    )
                }
            }
        }
    }

    #[test]
    fn aliases_and_unknown_names() {
        assert!(gallery_build("qsym-cp2", 2, 6).is_ok());
        let err = gallery_build("nope", 2, 6).unwrap_err().to_string();
        assert!(err.contains("witt-1-2") && err.contains("omega-c"), "{err}");
        assert!(gallery_build("H1", 3, 6).is_err());
    }

    #[test]
    fn nsym_has_composition_dimensions() {
        let h = gallery_hopf("nsym", 0, 10).unwrap();
        assert_eq!(h.basis().dims(), vec![1, 0, 1, 0, 2, 0, 4, 0, 8, 0, 16]);
    }
}
