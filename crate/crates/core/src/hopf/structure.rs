//! Derived structure: antipode, primitives, indecomposables and the
//! Frobenius and Verschiebung maps.

use std::collections::{BTreeMap, HashMap};

use crate::error::{HopfError, Result};
use crate::fv::{FModule, FvModule, Kind, VModule};
use crate::linear::{DegreeRule, Echelon, Field, GradedMap, Matrix, Tensor2, Vector};

use super::algebra::{Bialgebra, GradedAlgebra, GradedCoalgebra, Product};
use super::basis::Basis;

/// The matrix `H_src → H_tgt` whose columns are the images of the basis of
/// degree `src`; `image(i)` must lie in degree `tgt`.
pub fn block_matrix(
    basis: &Basis,
    field: Field,
    src: usize,
    tgt: usize,
    mut image: impl FnMut(usize) -> Vector,
) -> Matrix {
    let (s, t) = (basis.range(src), basis.range(tgt));
    let mut m = Matrix::zeros(field, t.len(), s.len());
    for (col, i) in s.enumerate() {
        for (k, c) in image(i).iter() {
            debug_assert!(t.contains(k));
            m.set(k - t.start, col, c.clone());
        }
    }
    m
}

/// Degree-preserving map `H → H` from the images of basis elements.
pub fn degreewise_map(basis: &Basis, field: Field, images: &[Vector]) -> GradedMap {
    let space = basis.graded_space(field);
    let blocks = (0..=basis.bound())
        .map(|d| Some(block_matrix(basis, field, d, d, |i| images[i].clone())))
        .collect();
    GradedMap::new(space.clone(), space, DegreeRule::Identity, blocks).expect("square blocks")
}

/// `S(x) = −x − Σ S(x′)x″` over the reduced coproduct, for every basis
/// element.
pub fn antipode(h: &Bialgebra) -> Vec<Vector> {
    let field = h.field();
    let mut s: Vec<Vector> = Vec::with_capacity(h.len());
    for i in 0..h.len() {
        if i == 0 {
            s.push(h.algebra.unit());
            continue;
        }
        let mut v = h.algebra.basis_vector(i).scaled(&field.from_i64(-1));
        for ((a, b), c) in h.reduced(i).iter() {
            let term = h.mul_vec(&s[*a], &h.algebra.basis_vector(*b));
            v.add_scaled(&term, &-c);
        }
        s.push(v);
    }
    s
}

pub fn antipode_map(h: &Bialgebra) -> GradedMap {
    degreewise_map(h.basis(), h.field(), &antipode(h))
}

/// `∇(S⊗1)Δ = ηε = ∇(1⊗S)Δ` on every basis element.
pub fn check_antipode(h: &Bialgebra, s: &[Vector]) -> bool {
    (0..h.len()).all(|i| {
        let expected = if i == 0 { h.algebra.unit() } else { Vector::new() };
        let mut left = Vector::new();
        let mut right = Vector::new();
        for ((a, b), c) in h.coproduct(i).iter() {
            left.add_scaled(&h.mul_vec(&s[*a], &h.algebra.basis_vector(*b)), c);
            right.add_scaled(&h.mul_vec(&h.algebra.basis_vector(*a), &s[*b]), c);
        }
        left == expected && right == expected
    })
}

/// Basis of the primitives of degree `d`, in global indices.
pub fn primitives(h: &Bialgebra, d: usize) -> Result<Vec<Vector>> {
    if d > h.bound() {
        return Err(HopfError::truncation("hopf_core::primitives", d, h.bound()));
    }
    let range = h.basis().range(d);
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut rows: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
    for (local, i) in range.clone().enumerate() {
        for (key, c) in h.reduced(i).iter() {
            rows.entry(*key).or_default().add_term(local, c.clone());
        }
    }
    let mut e = Echelon::new(h.field());
    for row in rows.values() {
        e.insert_homogeneous(row);
    }
    Ok(e.kernel(range.len())
        .into_iter()
        .map(|v| v.iter().map(|(k, c)| (range.start + k, c.clone())).collect())
        .collect())
}

/// Coefficient vector of `b ↦ [b^{⊗k}]Δ^{(k−1)}(x)` for coproducts given
/// as full tensors on a basis with the listed degrees, memoized over `(x, k)`.
pub fn diagonal(
    coproducts: &[Tensor2],
    degrees: &[usize],
    one: &crate::linear::Scalar,
    x: usize,
    k: usize,
    memo: &mut HashMap<(usize, usize), Vector>,
) -> Vector {
    if k == 1 {
        return Vector::single(x, one.clone());
    }
    if let Some(v) = memo.get(&(x, k)) {
        return v.clone();
    }
    let d = degrees[x];
    let mut out = Vector::new();
    if d.is_multiple_of(k) && d > 0 {
        let target = d / k;
        for ((a, b), coeff) in coproducts[x].iter() {
            if degrees[*b] != target {
                continue;
            }
            if let Some(inner) = diagonal(coproducts, degrees, one, *a, k - 1, memo).coeff(b) {
                out.add_term(*b, coeff * inner);
            }
        }
    }
    memo.insert((x, k), out.clone());
    out
}

/// Verschiebung of every basis element: `V(x) = Σ_b [b^{⊗p}]Δ^{(p−1)}(x) b`.
/// Elements whose degree is not divisible by `p` map to zero.
pub fn verschiebung(c: &GradedCoalgebra) -> Result<Vec<Vector>> {
    let p = match c.field {
        Field::Prime(p) => p as usize,
        Field::Rational => return Err(HopfError::Domain("the Verschiebung needs characteristic p".into())),
    };
    let mut memo = HashMap::new();
    let degrees: Vec<usize> = (0..c.len()).map(|i| c.degree(i)).collect();
    let one = c.field.one();
    Ok((0..c.len())
        .map(|x| {
            if x == 0 {
                Vector::single(0, one.clone())
            } else {
                diagonal(&c.coproducts, &degrees, &one, x, p, &mut memo)
            }
        })
        .collect())
}

/// Frobenius `x ↦ x^p` of every basis element whose image lies within the
/// bound; `None` above it.
pub fn frobenius(a: &GradedAlgebra) -> Result<Vec<Option<Vector>>> {
    let p = match a.field {
        Field::Prime(p) => p as usize,
        Field::Rational => return Err(HopfError::Domain("the Frobenius needs characteristic p".into())),
    };
    Ok((0..a.len())
        .map(|x| {
            let d = a.degree(x);
            if d * p > a.bound() {
                None
            } else if p != 2 && d % 2 == 1 {
                Some(Vector::new())
            } else {
                Some(a.pow_vec(&a.basis_vector(x), p))
            }
        })
        .collect())
}

/// The F-module structure of the augmentation ideal of a commutative algebra.
pub fn frobenius_module(a: &GradedAlgebra) -> Result<FModule> {
    if !a.commutative {
        return Err(HopfError::Domain(
            "the Frobenius module needs a commutative algebra".into(),
        ));
    }
    let f = frobenius(a)?;
    let p = a.field.characteristic() as usize;
    let mut blocks = BTreeMap::new();
    for d in 1..=a.bound() / p {
        blocks.insert(
            d,
            block_matrix(&a.basis, a.field, d, d * p, |i| f[i].clone().unwrap_or_default()),
        );
    }
    FvModule::from_space(Kind::F, a.basis.reduced_space(a.field), &blocks, a.complete)
}

/// The V-module structure of the coaugmentation coideal of a cocommutative
/// coalgebra.
pub fn verschiebung_module(c: &GradedCoalgebra) -> Result<VModule> {
    if !c.cocommutative {
        return Err(HopfError::Domain(
            "the Verschiebung module needs a cocommutative coalgebra".into(),
        ));
    }
    let v = verschiebung(c)?;
    let p = c.field.characteristic() as usize;
    let mut blocks = BTreeMap::new();
    for d in 1..=c.bound() / p {
        blocks.insert(d, block_matrix(&c.basis, c.field, d * p, d, |i| v[i].clone()));
    }
    FvModule::from_space(Kind::V, c.basis.reduced_space(c.field), &blocks, c.complete)
}

/// `x ↦ Δ(x) − x⊗1 − 1⊗x` extended linearly.
pub fn reduced_coproduct(h: &Bialgebra, v: &Vector) -> Tensor2 {
    h.reduced_vec(v)
}

/// Echelon form of the decomposables `H̄·H̄` in each degree.
pub fn decomposables(a: &GradedAlgebra) -> Vec<Echelon> {
    let mut out: Vec<Echelon> = (0..=a.bound()).map(|_| Echelon::new(a.field)).collect();
    match &a.product {
        Product::Concat(words) => {
            for i in 1..a.len() {
                if words.word(i).len() >= 2 {
                    out[a.degree(i)].insert_homogeneous(&a.basis_vector(i));
                }
            }
        }
        Product::Table(t) => {
            let mut keys: Vec<&(usize, usize)> = t.keys().collect();
            keys.sort();
            for (i, j) in keys {
                out[a.degree(*i) + a.degree(*j)].insert_homogeneous(&t[&(*i, *j)]);
            }
        }
    }
    out
}

/// `Q(H) = H̄/H̄²` with a basis of representatives, the projection, and the
/// induced Verschiebung when `H` is cocommutative of characteristic `p`.
#[derive(Clone, Debug)]
pub struct Indecomposables {
    field: Field,
    bound: usize,
    /// Basis indices of `H` whose classes form a basis of `Q`, by degree.
    representatives: Vec<usize>,
    degrees: Vec<usize>,
    labels: Vec<String>,
    q_index: HashMap<usize, usize>,
    decomposables: Vec<Echelon>,
    v: Option<VModule>,
}

impl Indecomposables {
    pub fn new(h: &Bialgebra) -> Result<Self> {
        let a = &h.algebra;
        let decomposables = decomposables(a);
        let mut representatives = Vec::new();
        for i in 1..a.len() {
            if !decomposables[a.degree(i)].is_pivot(i) {
                representatives.push(i);
            }
        }
        let degrees: Vec<usize> = representatives.iter().map(|i| a.degree(*i)).collect();
        let labels = representatives.iter().map(|i| h.label(*i).to_string()).collect();
        let q_index = representatives.iter().enumerate().map(|(q, i)| (*i, q)).collect();
        let mut q = Indecomposables {
            field: a.field,
            bound: a.bound(),
            representatives,
            degrees,
            labels,
            q_index,
            decomposables,
            v: None,
        };
        if let (Field::Prime(p), true) = (a.field, h.is_cocommutative()) {
            let p = p as usize;
            let vh = verschiebung(&h.coalgebra)?;
            let mut blocks = BTreeMap::new();
            for d in 1..=q.bound / p {
                let src = q.indices_in_degree(d * p);
                let tgt = q.indices_in_degree(d);
                let mut m = Matrix::zeros(q.field, tgt.len(), src.len());
                for (col, qi) in src.iter().enumerate() {
                    let image = q.project(&vh[q.representatives[*qi]]);
                    for (k, c) in image.iter() {
                        let row = tgt.iter().position(|t| t == k).expect("projection in degree");
                        m.set(row, col, c.clone());
                    }
                }
                blocks.insert(d, m);
            }
            let mut labels = vec![Vec::new(); q.bound + 1];
            for (l, d) in q.labels.iter().zip(&q.degrees) {
                labels[*d].push(l.clone());
            }
            let space = crate::linear::GradedSpace::new(q.field, labels)?;
            q.v = Some(FvModule::from_space(
                Kind::V,
                space,
                &blocks,
                h.coalgebra.complete && h.algebra.complete,
            )?);
        }
        Ok(q)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn degree(&self, q: usize) -> usize {
        self.degrees[q]
    }

    pub fn label(&self, q: usize) -> &str {
        &self.labels[q]
    }

    pub fn dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.bound + 1];
        for d in &self.degrees {
            dims[*d] += 1;
        }
        dims
    }

    /// `Q` indices in degree `d`.
    pub fn indices_in_degree(&self, d: usize) -> Vec<usize> {
        (0..self.len()).filter(|q| self.degrees[*q] == d).collect()
    }

    /// The chosen representative `σ(q)` in `H`.
    pub fn section(&self, q: usize) -> usize {
        self.representatives[q]
    }

    pub fn section_vector(&self, v: &Vector) -> Vector {
        v.iter().map(|(q, c)| (self.representatives[*q], c.clone())).collect()
    }

    /// `π: H̄ → Q`, in `Q` indices. The unit maps to zero.
    pub fn project(&self, v: &Vector) -> Vector {
        let mut out = Vector::new();
        let mut by_degree: BTreeMap<usize, Vector> = BTreeMap::new();
        for (i, c) in v.iter() {
            if let Some(d) = self.degree_of_h(*i) {
                by_degree.entry(d).or_default().add_term(*i, c.clone());
            }
        }
        for (d, part) in by_degree {
            for (i, c) in self.decomposables[d].reduce_vector(&part).iter() {
                out.add_term(self.q_index[i], c.clone());
            }
        }
        out
    }

    fn degree_of_h(&self, i: usize) -> Option<usize> {
        if i == 0 {
            return None;
        }
        if let Some(q) = self.q_index.get(&i) {
            return Some(self.degrees[*q]);
        }
        self.decomposables.iter().position(|e| e.is_pivot(i))
    }

    /// Whether `v` lies in `H̄²`.
    pub fn is_decomposable(&self, v: &Vector) -> bool {
        self.project(v).is_zero() && !v.keys().any(|k| *k == 0)
    }

    /// Echelon form of `H̄²` in degree `d`.
    pub fn decomposables(&self, d: usize) -> &Echelon {
        &self.decomposables[d]
    }

    /// The induced Verschiebung on `Q`.
    pub fn v_module(&self) -> Result<&VModule> {
        self.v
            .as_ref()
            .ok_or_else(|| HopfError::Domain("V on Q needs a cocommutative Hopf algebra in characteristic p".into()))
    }

    /// `V_Q(q)` as a vector of `Q` indices.
    pub fn v_of(&self, q: usize) -> Result<Vector> {
        let m = self.v_module()?;
        let p = m.prime() as usize;
        let d = self.degrees[q];
        if !d.is_multiple_of(p) {
            return Ok(Vector::new());
        }
        let src = self.indices_in_degree(d);
        let tgt = self.indices_in_degree(d / p);
        let col = src.iter().position(|x| *x == q).expect("q in its degree");
        let block = m.block(d / p);
        Ok(tgt
            .iter()
            .enumerate()
            .filter_map(|(row, t)| {
                let c = block?.get(row, col);
                (!c.is_zero()).then(|| (*t, c.clone()))
            })
            .collect())
    }
}

/// `Q(H)` with its induced Verschiebung.
pub fn indecomposables(h: &Bialgebra) -> Result<Indecomposables> {
    Indecomposables::new(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fv::{Extent, Summand};
    use crate::hopf::parse::{letters, parse_combination};
    use crate::hopf::{FreePresentation, MonomialAlgebraPresentation, MonomialRelation};

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn free(ls: &[(&str, usize)], dz: &[(&str, &str)], n: usize) -> Bialgebra {
        FreePresentation::parse(f2(), ls, dz).unwrap().build(n).unwrap()
    }

    fn element(h: &Bialgebra, s: &str) -> Vector {
        let words = h.words.as_ref().unwrap();
        parse_combination(s, words.letters(), h.field())
            .unwrap()
            .iter()
            .map(|(w, c)| (words.index_of(w).unwrap(), c.clone()))
            .collect()
    }

    #[test]
    fn antipode_of_h11() {
        let h = free(&[("x", 1), ("y", 2)], &[("y", "x@x")], 6);
        let s = antipode(&h);
        let y = h.generator("y").unwrap();
        assert_eq!(s[y], element(&h, "y + x^2"));
        assert_eq!(s[0], h.algebra.unit());
        assert!(check_antipode(&h, &s));
    }

    #[test]
    fn antipode_of_a_primitive_over_q() {
        let h = FreePresentation::primitive(Field::Rational, letters(&[("a", 1), ("b", 2)]))
            .build(5)
            .unwrap();
        let s = antipode(&h);
        let a = h.generator("a").unwrap();
        assert_eq!(s[a], h.algebra.basis_vector(a).scaled(&Field::Rational.from_i64(-1)));
        assert!(check_antipode(&h, &s));
    }

    #[test]
    fn primitives_of_h11_in_degree_two() {
        let h = free(&[("x", 1), ("y", 2)], &[("y", "x@x")], 4);
        assert_eq!(primitives(&h, 2).unwrap(), vec![element(&h, "x^2")]);
        assert_eq!(primitives(&h, 1).unwrap().len(), 1);
    }

    #[test]
    fn loop_space_primitive_lift() {
        let h = free(
            &[("y1", 2), ("y2", 4), ("y3", 6)],
            &[("y2", "y1@y1"), ("y3", "y2@y1 + y1@y2")],
            6,
        );
        let prims = primitives(&h, 6).unwrap();
        let target = element(&h, "y3 + y1y2 + y1^3");
        assert!(h.reduced_vec(&target).is_zero());
        let mut e = Echelon::new(h.field());
        for p in &prims {
            e.insert_homogeneous(p);
        }
        assert!(e.reduce_vector(&target).is_zero());
    }

    #[test]
    fn q_of_h1_and_h2() {
        let h1 = free(&[("x", 1), ("y", 2), ("z", 4)], &[("z", "y@y")], 8);
        let h2 = free(&[("x", 1), ("y", 2), ("z", 4)], &[("z", "x^2@x^2")], 8);
        let q1 = indecomposables(&h1).unwrap();
        let q2 = indecomposables(&h2).unwrap();
        let z = q1.indices_in_degree(4)[0];
        let y = q1.indices_in_degree(2)[0];
        assert_eq!(q1.v_of(z).unwrap(), Vector::single(y, f2().one()));
        let d1 = q1.v_module().unwrap().classify();
        assert_eq!(d1.multiplicity(&Summand::finite(2, 1)), 1);
        assert!(q2
            .v_module()
            .unwrap()
            .classify()
            .summands()
            .iter()
            .all(|s| s.j == Extent::Finite(0)));
    }

    #[test]
    fn frobenius_on_truncated_polynomials() {
        let a = MonomialAlgebraPresentation {
            field: f2(),
            generators: letters(&[("y", 2)]),
            relations: vec![MonomialRelation::Power(0, 3)],
            commutative: true,
        }
        .build(8)
        .unwrap();
        let f = frobenius(&a).unwrap();
        assert_eq!(f[1], Some(a.basis_vector(2)));
        assert_eq!(f[2], Some(Vector::new()));
        let m = frobenius_module(&a).unwrap();
        assert_eq!(m.classify().summands(), vec![Summand::finite(2, 1)]);
    }

    #[test]
    fn primitives_are_killed_by_v() {
        let h = free(&[("x", 1), ("z", 4)], &[("z", "x^2@x^2")], 12);
        let v = verschiebung(&h.coalgebra).unwrap();
        for d in 1..=12 {
            for p in primitives(&h, d).unwrap() {
                let image: Vector = p.iter().fold(Vector::new(), |mut acc, (i, c)| {
                    acc.add_scaled(&v[*i], c);
                    acc
                });
                assert!(image.is_zero(), "degree {d}");
            }
        }
    }
}
