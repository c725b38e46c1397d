//! Over `Q`, `J∨(A)` depends only on the graded dimensions of `Ā`: an
//! explicit isomorphism onto `J∨` of the square-zero algebra.

use std::collections::HashMap;

use crate::error::{HopfError, Result};
use crate::free_cofree::build_jvee;
use crate::hopf::{indecomposables, Bialgebra, GradedAlgebra, Product};
use crate::linear::{rank_of, Field, Matrix, Scalar, Vector};

use super::morphism::HopfMorphismWitness;

/// The square-zero algebra on the same graded basis.
pub fn square_zero(a: &GradedAlgebra) -> GradedAlgebra {
    GradedAlgebra {
        field: a.field,
        basis: a.basis.clone(),
        product: Product::Table(HashMap::new()),
        commutative: true,
        complete: a.complete,
    }
}

/// Builds `q̃: J∨(A) → J∨(A_triv)` and checks that it is a bijective
/// bialgebra map up to the bound.
///
/// The primitives of `J∨(A)` are the one-letter words; their map to `Q`
/// must be injective. A left inverse `q` of it gives `f = q∘π: J̄ → Ā`, and
/// `q̃(w) = Σ [f(w_1)|…|f(w_k)]` over all ways to cut `w` into consecutive
/// nonempty subwords.
pub fn char0_trivialize(a: &GradedAlgebra, bound: usize) -> Result<(HopfMorphismWitness, Bialgebra, Bialgebra)> {
    if a.field != Field::Rational {
        return Err(HopfError::Domain("the trivialization needs characteristic zero".into()));
    }
    let j = build_jvee(a, bound)?;
    let t = build_jvee(&square_zero(a), bound)?;
    let words = j.words.clone().expect("J∨ has words");
    let field = a.field;
    let q = indecomposables(&j)?;

    // f on every positive basis element of J, as a combination of letters.
    let mut f: Vec<Vector> = vec![Vector::new(); j.len()];
    for d in 1..=bound {
        let letters: Vec<usize> = j.basis().range(d).filter(|x| words.word(*x).len() == 1).collect();
        if letters.is_empty() {
            continue;
        }
        let qd = q.indices_in_degree(d);
        let mut m = Matrix::zeros(field, qd.len(), letters.len());
        for (col, x) in letters.iter().enumerate() {
            for (k, c) in q.project(&j.algebra.basis_vector(*x)).iter() {
                let row = qd.iter().position(|r| r == k).expect("class in degree");
                m.set(row, col, c.clone());
            }
        }
        let left = m.left_inverse().ok_or_else(|| {
            HopfError::invariant(
                "theorems::char0_trivialize",
                format!("P → Q is not injective in degree {d}"),
            )
        })?;
        for x in j.basis().range(d) {
            let class = q.project(&j.algebra.basis_vector(x));
            let mut image = Vector::new();
            for (row, l) in letters.iter().enumerate() {
                let mut c = field.zero();
                for (k, v) in class.iter() {
                    let col = qd.iter().position(|r| r == k).expect("class in degree");
                    c += &(left.get(row, col) * v);
                }
                image.add_term(words.word(*l)[0], c);
            }
            f[x] = image;
        }
    }

    let images: Vec<Vector> = (0..j.len())
        .map(|x| {
            let w = words.word(x);
            if w.is_empty() {
                return t.algebra.unit();
            }
            let mut out = Vector::new();
            for cuts in 0..(1usize << (w.len() - 1)) {
                let mut pieces = Vec::new();
                let mut start = 0;
                for pos in 1..w.len() {
                    if cuts & (1 << (pos - 1)) != 0 {
                        pieces.push(&w[start..pos]);
                        start = pos;
                    }
                }
                pieces.push(&w[start..]);
                let mut terms: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), field.one())];
                for piece in pieces {
                    let fp = &f[words.index_of(piece).expect("subword")];
                    let mut next = Vec::new();
                    for (word, c) in &terms {
                        for (l, e) in fp.iter() {
                            let mut w2 = word.clone();
                            w2.push(*l);
                            next.push((w2, c * e));
                        }
                    }
                    terms = next;
                }
                for (word, c) in terms {
                    out.add_term(words.index_of(&word).expect("same word basis"), c);
                }
            }
            out
        })
        .collect();

    let apply = |v: &Vector| {
        let mut out = Vector::new();
        for (i, c) in v.iter() {
            out.add_scaled(&images[*i], c);
        }
        out
    };
    for x in 0..j.len() {
        let mut lhs = crate::linear::Tensor2::new();
        for ((a1, b1), c) in j.coproduct(x).iter() {
            for (u, e) in images[*a1].iter() {
                for (v, g) in images[*b1].iter() {
                    lhs.add_term((*u, *v), &(c * e) * g);
                }
            }
        }
        if lhs != t.coproduct_vec(&images[x]) {
            return Err(HopfError::invariant(
                "theorems::char0_trivialize",
                format!("not a coalgebra map on {}", j.label(x)),
            ));
        }
        for y in 1..j.len() {
            if j.degree(x) + j.degree(y) > bound {
                break;
            }
            if apply(&j.mul(x, y)) != t.mul_vec(&images[x], &images[y]) {
                return Err(HopfError::invariant(
                    "theorems::char0_trivialize",
                    format!("not an algebra map on {} * {}", j.label(x), j.label(y)),
                ));
            }
        }
    }

    let rank = |d: usize| {
        rank_of(
            field,
            &j.basis().range(d).map(|x| images[x].clone()).collect::<Vec<_>>(),
        )
    };
    let is_iso = (0..=bound).all(|d| rank(d) == j.basis().dim(d) && t.basis().dim(d) == j.basis().dim(d));
    let qt = indecomposables(&t)?;
    let is_iso_on_q = (1..=bound).all(|d| {
        let src = q.indices_in_degree(d);
        let classes: Vec<Vector> = src.iter().map(|k| qt.project(&images[q.section(*k)])).collect();
        src.len() == qt.indices_in_degree(d).len() && rank_of(field, &classes) == src.len()
    });
    let generator_images = (0..j.len())
        .filter(|x| words.word(*x).len() == 1)
        .map(|x| (j.label(x).to_string(), images[x].clone()))
        .collect();
    let witness = HopfMorphismWitness {
        generator_images,
        images,
        is_iso_on_q,
        is_iso,
    };
    Ok((witness, j, t))
}
