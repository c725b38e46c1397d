//! F-modules and V-modules over `F_p`: construction, the regrading functor
//! `Φ`, duality, tensor products and classification into chains.
//!
//! A module is stored as a reduced graded space together with its structure
//! map: `F: M_n → M_{pn}` or `V: M_{pn} → M_n`. Over `F_p` the Frobenius
//! twist acts trivially on scalars, so both are plain matrices.
//!
//! Classification splits the degrees into lanes: for `p = 2` the orbits
//! `n, 2n, 4n, …` of odd seeds `n`; for odd `p` the orbits `2m, 2pm, …` of
//! seeds with `p ∤ m`, while every odd degree carries only singletons.
//! Within a lane the module is a graded `k[t]`-module and the number of
//! chains occupying exactly the lane positions `a..=b` is
//!
//! `r(a,b) − r(a−1,b) − r(a,b+1) + r(a−1,b+1)`
//!
//! where `r(a,b)` is the rank of the composite structure map from position
//! `a` to position `b` (`r(a,a)` is the dimension), and ranks with an index
//! outside the lane are zero.
//!
//! Truncated uniqueness: two modules bounded at `N` have the same
//! decomposition exactly when all composite ranks `r(a,b)` agree on every
//! lane, since those ranks and the multiplicities determine each other.
//! A chain that reaches the last lane position below `N` in a module that
//! continues above `N` is reported as `at_least(J)`: it may be `N(n,J)` or
//! any longer chain, up to `N(n,∞)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{HopfError, Result};
use crate::linear::{DegreeRule, Field, GradedMap, GradedSpace, Matrix};

/// Which structure map a module carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    /// Frobenius: `M_n → M_{pn}`.
    F,
    /// Verschiebung: `M_{pn} → M_n`.
    V,
}

impl Kind {
    pub fn dual(self) -> Kind {
        match self {
            Kind::F => Kind::V,
            Kind::V => Kind::F,
        }
    }
}

/// Chain length of a summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    /// Exactly `j + 1` basis elements.
    Finite(usize),
    /// At least `J + 1` basis elements; the rest lies above the bound.
    AtLeast(usize),
}

impl Extent {
    pub fn observed(&self) -> usize {
        match *self {
            Extent::Finite(j) | Extent::AtLeast(j) => j,
        }
    }
}

/// An indecomposable `N(n,j)` (F-modules) or `M(n,j)` (V-modules).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Summand {
    pub n: usize,
    pub j: Extent,
}

impl Summand {
    pub fn finite(n: usize, j: usize) -> Self {
        Summand {
            n,
            j: Extent::Finite(j),
        }
    }

    pub fn at_least(n: usize, j: usize) -> Self {
        Summand {
            n,
            j: Extent::AtLeast(j),
        }
    }

    /// Projectivity in the category of `kind`-modules; `None` when an
    /// `at_least` marker leaves the answer open.
    pub fn is_projective(&self, kind: Kind, p: u32) -> Option<bool> {
        match kind {
            Kind::F => self.f_projective(p),
            Kind::V => self.f_injective(p),
        }
    }

    /// Injectivity in the category of `kind`-modules; `None` when an
    /// `at_least` marker leaves the answer open.
    pub fn is_injective(&self, kind: Kind, p: u32) -> Option<bool> {
        match kind {
            Kind::F => self.f_injective(p),
            Kind::V => self.f_projective(p),
        }
    }

    fn f_projective(&self, p: u32) -> Option<bool> {
        if p != 2 && self.n % 2 == 1 {
            return Some(true);
        }
        match self.j {
            Extent::Finite(_) => Some(false),
            Extent::AtLeast(_) => None,
        }
    }

    fn f_injective(&self, p: u32) -> Option<bool> {
        if p == 2 {
            Some(self.n % 2 == 1)
        } else if self.n % 2 == 1 {
            Some(true)
        } else {
            Some(!(self.n / 2).is_multiple_of(p as usize))
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.j {
            Extent::Finite(j) => write!(f, "({},{})", self.n, j),
            Extent::AtLeast(j) => write!(f, "({},≥{})", self.n, j),
        }
    }
}

/// A multiset of summands valid up to the truncation bound.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub bound: usize,
    pub counts: BTreeMap<Summand, usize>,
}

impl Decomposition {
    pub fn new(bound: usize) -> Self {
        Decomposition {
            bound,
            counts: BTreeMap::new(),
        }
    }

    pub fn from_summands(bound: usize, summands: &[Summand]) -> Self {
        let mut d = Self::new(bound);
        for s in summands {
            d.add(*s, 1);
        }
        d
    }

    pub fn add(&mut self, s: Summand, mult: usize) {
        if mult > 0 {
            *self.counts.entry(s).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, s: &Summand) -> usize {
        self.counts.get(s).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Summands listed with repetition, in sorted order.
    pub fn summands(&self) -> Vec<Summand> {
        self.counts
            .iter()
            .flat_map(|(s, m)| std::iter::repeat_n(*s, *m))
            .collect()
    }

    /// Multiset union.
    pub fn union(&self, other: &Decomposition) -> Decomposition {
        let mut out = self.clone();
        out.bound = self.bound.min(other.bound);
        for (s, m) in &other.counts {
            out.add(*s, *m);
        }
        out
    }

    /// Dimension of the summands' span in each degree `0..=bound`.
    pub fn dims(&self, p: u32) -> Vec<usize> {
        let mut dims = vec![0; self.bound + 1];
        for (s, m) in &self.counts {
            for d in chain_degrees(p, s.n, Some(s.j.observed()), self.bound) {
                dims[d] += m;
            }
        }
        dims
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Serialize)]
struct SummandRecord {
    n: usize,
    j: String,
    multiplicity: usize,
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<SummandRecord> = self
            .counts
            .iter()
            .map(|(s, m)| SummandRecord {
                n: s.n,
                j: match s.j {
                    Extent::Finite(j) => j.to_string(),
                    Extent::AtLeast(j) => format!("≥{j}"),
                },
                multiplicity: *m,
            })
            .collect();
        records.serialize(serializer)
    }
}

/// Degrees of the basis `x_0, x_1, …` of a chain starting in degree `n`,
/// cut at the bound. `j = None` means an infinite chain.
fn chain_degrees(p: u32, n: usize, j: Option<usize>, bound: usize) -> Vec<usize> {
    let p = p as usize;
    let mut out = Vec::new();
    let mut d = n;
    let mut i = 0;
    while d <= bound && j.is_none_or(|j| i <= j) {
        out.push(d);
        if p != 2 && n % 2 == 1 {
            break;
        }
        d *= p;
        i += 1;
    }
    out
}

/// Positions of a lane, as degrees `≤ bound`.
fn lane_positions(p: u32, seed: usize, bound: usize) -> Vec<usize> {
    chain_degrees(p, seed, None, bound)
}

/// Lane seeds up to the bound: odd `n` for `p = 2`; `2m` with `p ∤ m` and
/// every odd degree for odd `p`.
fn lane_seeds(p: u32, bound: usize) -> Vec<usize> {
    let p = p as usize;
    (1..=bound)
        .filter(|&n| {
            if p == 2 {
                n % 2 == 1
            } else {
                n % 2 == 1 || (n / 2) % p != 0
            }
        })
        .collect()
}

/// An F-module or V-module truncated at `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FvModule {
    kind: Kind,
    prime: u32,
    map: GradedMap,
    closed: bool,
}

pub type FModule = FvModule;
pub type VModule = FvModule;

impl FvModule {
    /// Builds a module from its structure map. `closed` records that the
    /// module is zero above the bound, so that chains reaching the bound are
    /// known to stop there.
    pub fn new(kind: Kind, map: GradedMap, closed: bool) -> Result<Self> {
        let field = map.field();
        let Field::Prime(p) = field else {
            return Err(HopfError::Domain(
                "F- and V-modules need a field of positive characteristic".into(),
            ));
        };
        let expected = match kind {
            Kind::F => DegreeRule::Stretch(p as usize),
            Kind::V => DegreeRule::Contract(p as usize),
        };
        if map.rule() != expected {
            return Err(HopfError::Structural(format!(
                "{kind:?}-module needs degree rule {expected:?}, got {:?}",
                map.rule()
            )));
        }
        if map.source() != map.target() || !map.source().is_reduced() {
            return Err(HopfError::Structural(
                "structure map must be an endomorphism of a reduced space".into(),
            ));
        }
        if p != 2 {
            // F vanishes out of odd degrees; V vanishes into odd degrees.
            for d in 0..=map.source().bound() {
                let bad = match kind {
                    Kind::F => d % 2 == 1,
                    Kind::V => d % (p as usize) == 0 && (d / p as usize) % 2 == 1,
                };
                if bad && map.block(d).is_some_and(|m| !m.is_zero()) {
                    return Err(HopfError::Domain(format!(
                        "{kind:?} must vanish in degree {d} when p = {p}"
                    )));
                }
            }
        }
        Ok(FvModule {
            kind,
            prime: p,
            map,
            closed,
        })
    }

    /// Builds a module from per-degree matrices: `blocks[d]` is the matrix
    /// of the structure map out of degree `d` (F) or out of degree `p·d`
    /// into degree `d` (V), with `dims[d]` the dimension of `M_d`.
    pub fn from_blocks(
        kind: Kind,
        field: Field,
        dims: &[usize],
        blocks: &BTreeMap<usize, Matrix>,
        closed: bool,
    ) -> Result<Self> {
        let space = GradedSpace::from_dims(field, dims);
        Self::from_space(kind, space, blocks, closed)
    }

    pub fn from_space(kind: Kind, space: GradedSpace, blocks: &BTreeMap<usize, Matrix>, closed: bool) -> Result<Self> {
        let field = space.field();
        let p = field.characteristic() as usize;
        if p == 0 {
            return Err(HopfError::Domain(
                "F- and V-modules need a field of positive characteristic".into(),
            ));
        }
        let rule = match kind {
            Kind::F => DegreeRule::Stretch(p),
            Kind::V => DegreeRule::Contract(p),
        };
        let mut map = GradedMap::zero(space.clone(), space, rule);
        for (&d, m) in blocks {
            let src = match kind {
                Kind::F => d,
                Kind::V => d * p,
            };
            if src > map.source().bound() {
                return Err(HopfError::truncation("fv_mod", src, map.source().bound()));
            }
            map.set_block(src, m.clone());
        }
        let map = GradedMap::new(
            map.source().clone(),
            map.target().clone(),
            rule,
            (0..=map.source().bound()).map(|d| map.block(d).cloned()).collect(),
        )?;
        Self::new(kind, map, closed)
    }

    pub fn zero(kind: Kind, field: Field, bound: usize) -> Result<Self> {
        Self::from_blocks(kind, field, &vec![0; bound + 1], &BTreeMap::new(), true)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn field(&self) -> Field {
        self.map.field()
    }

    pub fn bound(&self) -> usize {
        self.map.source().bound()
    }

    pub fn space(&self) -> &GradedSpace {
        self.map.source()
    }

    pub fn structure_map(&self) -> &GradedMap {
        &self.map
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn dim(&self, d: usize) -> usize {
        self.space().dim(d)
    }

    pub fn total_dim(&self) -> usize {
        self.space().total_dim()
    }

    /// Highest degree with a nonzero piece.
    pub fn top_degree(&self) -> Option<usize> {
        (0..=self.bound()).rev().find(|d| self.dim(*d) > 0)
    }

    /// Matrix of the map in Frobenius direction `M_d → M_{pd}`: `F` itself,
    /// or the transpose of `V` (which classifies the same way).
    fn forward(&self, d: usize) -> Option<Matrix> {
        let p = self.prime as usize;
        if d * p > self.bound() {
            return None;
        }
        match self.kind {
            Kind::F => self.map.block(d).cloned(),
            Kind::V => self.map.block(d * p).map(Matrix::transpose),
        }
    }

    /// The structure map as a matrix: out of degree `d` for F-modules, out
    /// of degree `p·d` into degree `d` for V-modules.
    pub fn block(&self, d: usize) -> Option<&Matrix> {
        match self.kind {
            Kind::F => self.map.block(d),
            Kind::V => self.map.block(d * self.prime as usize),
        }
    }

    /// The chain module `N(n,j)` or `M(n,j)`; `j = None` is an infinite
    /// chain, cut at the bound.
    pub fn standard(kind: Kind, n: usize, j: Option<usize>, p: u32, bound: usize) -> Result<Self> {
        let field = Field::prime(p)?;
        if n == 0 {
            return Err(HopfError::Domain("summands start in positive degree".into()));
        }
        if p != 2 && n % 2 == 1 && j != Some(0) {
            return Err(HopfError::Domain(format!(
                "({n},{}) is not a summand at p = {p}: odd bottom degree forces j = 0",
                j.map_or("∞".to_string(), |j| j.to_string())
            )));
        }
        if n > bound {
            return Err(HopfError::truncation("fv_mod", n, bound));
        }
        let degrees = chain_degrees(p, n, j, bound);
        let mut dims = vec![0; bound + 1];
        for d in &degrees {
            dims[*d] = 1;
        }
        let mut blocks = BTreeMap::new();
        for w in degrees.windows(2) {
            blocks.insert(w[0], Matrix::identity(field, 1));
        }
        let last = *degrees.last().expect("n ≤ bound");
        let complete = j.is_some_and(|j| degrees.len() == j + 1) || (p != 2 && n % 2 == 1);
        let closed = complete && last <= bound;
        Self::from_blocks(kind, field, &dims, &blocks, closed)
    }

    /// Direct sum of modules of the same kind, prime and bound.
    pub fn direct_sum(parts: &[FvModule]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| HopfError::Structural("empty direct sum".into()))?;
        let (kind, field, bound) = (first.kind, first.field(), first.bound());
        for m in parts {
            if m.kind != kind || m.field() != field || m.bound() != bound {
                return Err(HopfError::Structural(
                    "direct sum of modules of different kind, field or bound".into(),
                ));
            }
        }
        let dims: Vec<usize> = (0..=bound).map(|d| parts.iter().map(|m| m.dim(d)).sum()).collect();
        let p = first.prime as usize;
        let mut blocks = BTreeMap::new();
        for d in 1..=bound {
            if d * p > bound {
                break;
            }
            let mut m = Matrix::zeros(field, dims[d * p], dims[d]);
            // Assemble in Frobenius direction, transposing back for V.
            let (mut r0, mut c0) = (0, 0);
            for part in parts {
                if let Some(b) = part.forward(d) {
                    for r in 0..b.rows() {
                        for c in 0..b.cols() {
                            m.set(r0 + r, c0 + c, b.get(r, c).clone());
                        }
                    }
                }
                r0 += part.dim(d * p);
                c0 += part.dim(d);
            }
            let m = match kind {
                Kind::F => m,
                Kind::V => m.transpose(),
            };
            blocks.insert(d, m);
        }
        let closed = parts.iter().all(|m| m.closed);
        Self::from_blocks(kind, field, &dims, &blocks, closed)
    }

    /// The regrading functor: degree `n` moves to `pn` (for odd `p` only
    /// even degrees survive, `2m ↦ 2pm`). Degrees pushed above the bound
    /// raise a truncation error for closed modules and are cut otherwise.
    pub fn phi(&self) -> Result<Self> {
        let p = self.prime as usize;
        let bound = self.bound();
        let keep = |d: usize| p == 2 || d.is_multiple_of(2);
        let mut dims = vec![0; bound + 1];
        for d in 1..=bound {
            if self.dim(d) == 0 || !keep(d) {
                continue;
            }
            if d * p > bound {
                if self.closed {
                    return Err(HopfError::truncation("fv_mod::phi", d * p, bound));
                }
                continue;
            }
            dims[d * p] = self.dim(d);
        }
        let mut blocks = BTreeMap::new();
        for d in 1..=bound {
            if d * p * p > bound || !keep(d) {
                continue;
            }
            if let Some(b) = self.block(d) {
                blocks.insert(d * p, b.clone());
            }
        }
        Self::from_blocks(self.kind, self.field(), &dims, &blocks, self.closed)
    }

    /// The dual module: same basis labels, transposed structure map.
    pub fn dualize(&self) -> Self {
        FvModule {
            kind: self.kind.dual(),
            prime: self.prime,
            map: self.map.transpose(),
            closed: self.closed,
        }
    }

    /// Tensor product, with `F(a⊗b) = F(a)⊗F(b)` (resp. `V`).
    pub fn tensor(&self, other: &FvModule) -> Result<Self> {
        if self.kind != other.kind || self.prime != other.prime {
            return Err(HopfError::Structural(
                "tensor of modules of different kind or prime".into(),
            ));
        }
        let map = self.map.tensor(&other.map)?;
        let closed = self.closed
            && other.closed
            && match (self.top_degree(), other.top_degree()) {
                (Some(a), Some(b)) => a + b <= self.bound(),
                _ => true,
            };
        Self::new(self.kind, map, closed)
    }

    /// Decomposition into indecomposable chains, exact within the bound.
    pub fn classify(&self) -> Decomposition {
        let bound = self.bound();
        let p = self.prime;
        let mut out = Decomposition::new(bound);
        for seed in lane_seeds(p, bound) {
            let lane = lane_positions(p, seed, bound);
            if lane.iter().all(|d| self.dim(*d) == 0) {
                continue;
            }
            let len = lane.len();
            // Odd lanes at odd p are single positions and never continue.
            let open = !self.closed && !(p != 2 && seed % 2 == 1);
            // composites[a][b] = map from lane[a] to lane[b]
            let mut rank = vec![vec![0usize; len + 1]; len + 1];
            for a in 0..len {
                rank[a][a] = self.dim(lane[a]);
                let mut acc: Option<Matrix> = None;
                for b in a + 1..len {
                    let step = self
                        .forward(lane[b - 1])
                        .unwrap_or_else(|| Matrix::zeros(self.field(), self.dim(lane[b]), self.dim(lane[b - 1])));
                    let next = match acc {
                        None => step,
                        Some(m) => step.mul(&m),
                    };
                    rank[a][b] = next.rank();
                    acc = Some(next);
                }
            }
            let r = |a: isize, b: usize| -> usize {
                if a < 0 || b >= len {
                    0
                } else {
                    rank[a as usize][b]
                }
            };
            for a in 0..len {
                for b in a..len {
                    let ai = a as isize;
                    let m = (r(ai, b) + r(ai - 1, b + 1)) as isize - r(ai - 1, b) as isize - r(ai, b + 1) as isize;
                    debug_assert!(m >= 0, "negative multiplicity");
                    if m <= 0 {
                        continue;
                    }
                    let j = b - a;
                    let summand = if b == len - 1 && open {
                        Summand::at_least(lane[a], j)
                    } else {
                        Summand::finite(lane[a], j)
                    };
                    out.add(summand, m as usize);
                }
            }
        }
        out
    }
}

/// Isomorphism test by comparing decompositions; `at_least` markers match
/// only identical markers.
pub fn iso_test_fv(a: &FvModule, b: &FvModule) -> Result<bool> {
    if a.kind != b.kind || a.prime != b.prime || a.bound() != b.bound() {
        return Err(HopfError::Structural(
            "isomorphism test needs the same kind, prime and bound".into(),
        ));
    }
    Ok(a.classify() == b.classify())
}

/// Direct sum of standard summands realizing a decomposition.
pub fn rebuild(kind: Kind, p: u32, decomposition: &Decomposition, closed: bool) -> Result<FvModule> {
    let bound = decomposition.bound;
    let mut parts = vec![FvModule::zero(kind, Field::prime(p)?, bound)?];
    for s in decomposition.summands() {
        let j = match s.j {
            Extent::Finite(j) => Some(j),
            Extent::AtLeast(_) => None,
        };
        parts.push(FvModule::standard(kind, s.n, j, p, bound)?);
    }
    let mut m = FvModule::direct_sum(&parts)?;
    m.closed = closed;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn n(n: usize, j: usize, bound: usize) -> FvModule {
        FvModule::standard(Kind::F, n, Some(j), 2, bound).unwrap()
    }

    #[test]
    fn standard_chain_shapes() {
        let m = n(2, 1, 12);
        assert_eq!(m.dim(2), 1);
        assert_eq!(m.dim(4), 1);
        assert_eq!(m.block(2).unwrap(), &Matrix::identity(f2(), 1));
        assert!(m.block(4).unwrap().is_zero());
        let three = FvModule::standard(Kind::F, 3, Some(0), 3, 12).unwrap();
        assert_eq!(three.classify().to_string(), "{(3,0)}");
        assert!(FvModule::standard(Kind::F, 3, Some(1), 3, 12).is_err());
        let open = FvModule::standard(Kind::F, 1, None, 2, 8).unwrap();
        assert_eq!(open.classify().to_string(), "{(1,≥3)}");
    }

    #[test]
    fn projectivity_tables() {
        assert_eq!(Summand::finite(3, 2).is_injective(Kind::F, 2), Some(true));
        assert_eq!(Summand::finite(2, 2).is_injective(Kind::F, 2), Some(false));
        assert_eq!(Summand::at_least(2, 2).is_projective(Kind::F, 2), None);
        assert_eq!(Summand::finite(3, 0).is_projective(Kind::F, 3), Some(true));
        assert_eq!(Summand::finite(6, 1).is_injective(Kind::F, 3), Some(false));
        assert_eq!(Summand::finite(4, 1).is_injective(Kind::F, 3), Some(true));
        assert_eq!(Summand::finite(3, 1).is_projective(Kind::V, 2), Some(true));
    }

    #[test]
    fn phi_shifts_chains() {
        let m = FvModule::standard(Kind::V, 1, Some(1), 2, 12).unwrap();
        assert_eq!(m.phi().unwrap().classify().to_string(), "{(2,1)}");
        let m0 = FvModule::standard(Kind::V, 1, Some(0), 2, 12).unwrap();
        assert_eq!(m0.phi().unwrap().phi().unwrap().classify().to_string(), "{(4,0)}");
        let z = FvModule::zero(Kind::F, f2(), 6).unwrap();
        assert!(z.phi().unwrap().classify().is_empty());
        let top = n(8, 0, 12);
        assert!(matches!(top.phi(), Err(HopfError::Truncation { .. })));
    }

    #[test]
    fn duality_preserves_classification() {
        let m = FvModule::direct_sum(&[n(2, 1, 12), n(3, 2, 12), n(6, 0, 12)]).unwrap();
        let d = m.dualize();
        assert_eq!(d.kind(), Kind::V);
        assert_eq!(d.classify(), m.classify());
        assert_eq!(d.dualize(), m);
    }

    #[test]
    fn tensor_square_of_two_chain() {
        let m = n(2, 1, 12);
        let sq = m.tensor(&m).unwrap();
        let expected = Decomposition::from_summands(
            12,
            &[Summand::finite(4, 1), Summand::finite(6, 0), Summand::finite(6, 0)],
        );
        assert_eq!(sq.classify(), expected);
    }

    #[test]
    fn rank_one_lane_map() {
        let f = f2();
        let mut dims = vec![0; 13];
        dims[3] = 2;
        dims[6] = 2;
        let mut blocks = BTreeMap::new();
        blocks.insert(3, Matrix::from_i64(f, &[&[1, 1], &[0, 0]]));
        let m = FvModule::from_blocks(Kind::F, f, &dims, &blocks, true).unwrap();
        let expected = Decomposition::from_summands(
            12,
            &[Summand::finite(3, 0), Summand::finite(3, 1), Summand::finite(6, 0)],
        );
        assert_eq!(m.classify(), expected);
    }
}
