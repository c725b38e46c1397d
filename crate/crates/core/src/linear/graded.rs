//! Finite-type graded vector spaces and graded linear maps.

use crate::error::{HopfError, Result};

use super::matrix::Matrix;
use super::scalar::Field;

/// A graded vector space represented in degrees `0..=N`, one label per
/// basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    field: Field,
    labels: Vec<Vec<String>>,
}

impl GradedSpace {
    pub fn new(field: Field, labels: Vec<Vec<String>>) -> Result<Self> {
        if labels.is_empty() {
            return Err(HopfError::Structural("a graded space needs degree 0".into()));
        }
        for (d, ls) in labels.iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            if let Some(dup) = ls.iter().find(|l| !seen.insert(l.as_str())) {
                return Err(HopfError::Structural(format!("duplicate label {dup} in degree {d}")));
            }
        }
        Ok(GradedSpace { field, labels })
    }

    /// A space with generated labels `e{d}_{i}`.
    pub fn from_dims(field: Field, dims: &[usize]) -> Self {
        let labels = dims
            .iter()
            .enumerate()
            .map(|(d, n)| (0..*n).map(|i| format!("e{d}_{i}")).collect())
            .collect();
        GradedSpace { field, labels }
    }

    pub fn zero(field: Field, bound: usize) -> Self {
        Self::from_dims(field, &vec![0; bound + 1])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn bound(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn dim(&self, d: usize) -> usize {
        self.labels.get(d).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn labels(&self, d: usize) -> &[String] {
        &self.labels[d]
    }

    pub fn is_reduced(&self) -> bool {
        self.dim(0) == 0
    }

    /// Graded tensor product; `(M⊗N)_k` has basis the pairs `(a, b)` with
    /// `|a| + |b| = k`, ordered by `|a|`, then `a`, then `b`.
    pub fn tensor(&self, other: &GradedSpace) -> Result<GradedSpace> {
        check_compatible(self, other)?;
        let n = self.bound();
        let labels = (0..=n)
            .map(|k| {
                tensor_pairs(self, other, k)
                    .into_iter()
                    .map(|(i, a, j, b)| format!("{}⊗{}", self.labels[i][a], other.labels[j][b]))
                    .collect()
            })
            .collect();
        Ok(GradedSpace {
            field: self.field,
            labels,
        })
    }
}

fn check_compatible(a: &GradedSpace, b: &GradedSpace) -> Result<()> {
    if a.field != b.field {
        return Err(HopfError::Structural(format!(
            "fields differ: {} vs {}",
            a.field, b.field
        )));
    }
    if a.bound() != b.bound() {
        return Err(HopfError::Structural(format!(
            "truncation bounds differ: {} vs {}",
            a.bound(),
            b.bound()
        )));
    }
    Ok(())
}

/// Basis of `(M⊗N)_k` as `(degree of a, index of a, degree of b, index of b)`.
pub fn tensor_pairs(m: &GradedSpace, n: &GradedSpace, k: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..=k {
        let j = k - i;
        for a in 0..m.dim(i) {
            for b in 0..n.dim(j) {
                out.push((i, a, j, b));
            }
        }
    }
    out
}

/// How a graded map moves degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeRule {
    /// `n -> n`
    Identity,
    /// `n -> q n`
    Stretch(usize),
    /// `q n -> n`, defined only on degrees divisible by `q`.
    Contract(usize),
}

impl DegreeRule {
    /// Target degree of a source degree, if the map is defined there.
    pub fn apply(&self, d: usize) -> Option<usize> {
        match *self {
            DegreeRule::Identity => Some(d),
            DegreeRule::Stretch(q) => Some(d * q),
            DegreeRule::Contract(q) => d.is_multiple_of(q).then(|| d / q),
        }
    }

    /// Rule of `self ∘ other`.
    pub fn compose(&self, other: &DegreeRule) -> Option<DegreeRule> {
        use DegreeRule::*;
        match (*self, *other) {
            (Identity, r) | (r, Identity) => Some(r),
            (Stretch(a), Stretch(b)) => Some(Stretch(a * b)),
            (Contract(a), Contract(b)) => Some(Contract(a * b)),
            _ => None,
        }
    }
}

/// A graded linear map. `blocks[d]` is the matrix from source degree `d` to
/// its target degree; it is absent when the target lies above the bound or
/// the rule is undefined in degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedSpace,
    target: GradedSpace,
    rule: DegreeRule,
    blocks: Vec<Option<Matrix>>,
}

impl GradedMap {
    pub fn new(
        source: GradedSpace,
        target: GradedSpace,
        rule: DegreeRule,
        blocks: Vec<Option<Matrix>>,
    ) -> Result<Self> {
        check_compatible(&source, &target)?;
        if blocks.len() != source.bound() + 1 {
            return Err(HopfError::Structural("one block slot per source degree".into()));
        }
        for (d, b) in blocks.iter().enumerate() {
            let expected = rule.apply(d).filter(|t| *t <= target.bound());
            match (b, expected) {
                (Some(m), Some(t)) => {
                    if m.shape() != (target.dim(t), source.dim(d)) {
                        return Err(HopfError::Structural(format!(
                            "block in degree {d} has shape {:?}, expected {:?}",
                            m.shape(),
                            (target.dim(t), source.dim(d))
                        )));
                    }
                }
                (None, _) => {}
                (Some(_), None) => {
                    return Err(HopfError::Structural(format!(
                        "block in degree {d} has no target degree"
                    )))
                }
            }
        }
        Ok(GradedMap {
            source,
            target,
            rule,
            blocks,
        })
    }

    /// The map that is zero wherever it is defined.
    pub fn zero(source: GradedSpace, target: GradedSpace, rule: DegreeRule) -> Self {
        let blocks = (0..=source.bound())
            .map(|d| {
                rule.apply(d)
                    .filter(|t| *t <= target.bound())
                    .map(|t| Matrix::zeros(source.field(), target.dim(t), source.dim(d)))
            })
            .collect();
        GradedMap {
            source,
            target,
            rule,
            blocks,
        }
    }

    pub fn identity(space: GradedSpace) -> Self {
        let blocks = (0..=space.bound())
            .map(|d| Some(Matrix::identity(space.field(), space.dim(d))))
            .collect();
        GradedMap {
            source: space.clone(),
            target: space,
            rule: DegreeRule::Identity,
            blocks,
        }
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn rule(&self) -> DegreeRule {
        self.rule
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn block(&self, d: usize) -> Option<&Matrix> {
        self.blocks.get(d).and_then(Option::as_ref)
    }

    pub fn set_block(&mut self, d: usize, m: Matrix) {
        self.blocks[d] = Some(m);
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        if other.target != self.source {
            return Err(HopfError::Structural("composition: spaces do not match".into()));
        }
        let rule = self.rule.compose(&other.rule).ok_or_else(|| {
            HopfError::Structural(format!(
                "degree rules {:?} and {:?} do not compose",
                self.rule, other.rule
            ))
        })?;
        let blocks = (0..=other.source.bound())
            .map(|d| {
                let mid = other.rule.apply(d)?;
                let inner = other.block(d)?;
                let outer = self.block(mid)?;
                Some(outer.mul(inner))
            })
            .collect();
        GradedMap::new(other.source.clone(), self.target.clone(), rule, blocks)
    }

    /// `f ⊗ g` on the truncated tensor products. Maps preserving degree carry
    /// no Koszul sign; Frobenius-type maps act factorwise as
    /// `F(a⊗b) = F(a)⊗F(b)`.
    pub fn tensor(&self, other: &GradedMap) -> Result<GradedMap> {
        check_compatible(&self.source, &other.source)?;
        if self.rule != other.rule {
            return Err(HopfError::Structural(format!(
                "tensor of maps with rules {:?} and {:?}",
                self.rule, other.rule
            )));
        }
        let source = self.source.tensor(&other.source)?;
        let target = self.target.tensor(&other.target)?;
        let field = self.field();
        let mut out = GradedMap::zero(source, target, self.rule);
        for k in 0..=out.source.bound() {
            let Some(tk) = self.rule.apply(k).filter(|t| *t <= out.target.bound()) else {
                out.blocks[k] = None;
                continue;
            };
            let src_pairs = tensor_pairs(&self.source, &other.source, k);
            let tgt_pairs = tensor_pairs(&self.target, &other.target, tk);
            let tgt_index: std::collections::HashMap<_, _> =
                tgt_pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
            let mut m = Matrix::zeros(field, tgt_pairs.len(), src_pairs.len());
            for (col, &(i, a, j, b)) in src_pairs.iter().enumerate() {
                let (Some(ti), Some(tj)) = (self.rule.apply(i), other.rule.apply(j)) else {
                    continue;
                };
                let (Some(fa), Some(gb)) = (self.block(i), other.block(j)) else {
                    continue;
                };
                for x in 0..fa.rows() {
                    let u = fa.get(x, a);
                    if u.is_zero() {
                        continue;
                    }
                    for y in 0..gb.rows() {
                        let v = gb.get(y, b);
                        if v.is_zero() {
                            continue;
                        }
                        let row = tgt_index[&(ti, x, tj, y)];
                        let cur = m.get(row, col) + &(u * v);
                        m.set(row, col, cur);
                    }
                }
            }
            out.blocks[k] = Some(m);
        }
        Ok(out)
    }

    /// The dual map: transposes every block and reverses the degree rule.
    pub fn transpose(&self) -> GradedMap {
        let rule = match self.rule {
            DegreeRule::Identity => DegreeRule::Identity,
            DegreeRule::Stretch(q) => DegreeRule::Contract(q),
            DegreeRule::Contract(q) => DegreeRule::Stretch(q),
        };
        let mut blocks = vec![None; self.target.bound() + 1];
        for (d, b) in self.blocks.iter().enumerate() {
            if let (Some(m), Some(t)) = (b, self.rule.apply(d)) {
                if t <= self.target.bound() {
                    blocks[t] = Some(m.transpose());
                }
            }
        }
        GradedMap {
            source: self.target.clone(),
            target: self.source.clone(),
            rule,
            blocks,
        }
    }
}

/// The symmetry `τ: M⊗N → N⊗M`, `a⊗b ↦ (−1)^{|a||b|} b⊗a`.
pub fn braiding(m: &GradedSpace, n: &GradedSpace) -> Result<GradedMap> {
    let source = m.tensor(n)?;
    let target = n.tensor(m)?;
    let field = m.field();
    let mut out = GradedMap::zero(source, target, DegreeRule::Identity);
    for k in 0..=m.bound() {
        let src = tensor_pairs(m, n, k);
        let tgt: std::collections::HashMap<_, _> = tensor_pairs(n, m, k)
            .into_iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut mat = Matrix::zeros(field, src.len(), src.len());
        for (col, &(i, a, j, b)) in src.iter().enumerate() {
            mat.set(tgt[&(j, b, i, a)], col, field.sign(i * j % 2 == 1));
        }
        out.blocks[k] = Some(mat);
    }
    Ok(out)
}
