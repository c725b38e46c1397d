//! Poincaré series of F-modules: the cokernel series `χ^j` of `F^{j+1}`,
//! the torsion-free series `χ^∞`, and recovery of chain multiplicities from
//! the series of a tensor algebra.
//!
//! With `a^j(n)` the number of chains `N(n,j)` and `b^j = Σ_{k≥j} a^k + a^∞`,
//!
//! `χ^j(t) = b^0(t) + b^1(t^p) + … + b^j(t^{p^j})`, `χ^∞(t) = Σ_j a^∞(t^{p^j})`,
//!
//! so `a^j(t^{p^{j+1}}) = [χ^j(t^p) − χ^{j−1}(t^p)] − [χ^{j+1}(t) − χ^j(t)]`
//! and `a^∞(t) = χ^∞(t) − χ^∞(t^p)`.
//!
//! On a tensor algebra `F(a⊗b) = F(a)⊗F(b)`, so the image of `F^{j+1}` on
//! `TN` is the tensor algebra on its image in `N` and `χ^∞` is multiplicative.
//! The cokernel series is not: `T(N(2,1))` has cokernel dimension 3 in
//! degree 6 while `1/(1 − t²)` has 1. Recovery therefore inverts the image
//! and total series, and [`verify_tensor_identity`] reports the cokernel
//! identity as it stands.

use std::collections::HashMap;

use crate::error::{HopfError, Result};
use crate::fv::{Decomposition, Extent, FModule, Kind};
use crate::linear::{Echelon, Field, Scalar, TruncatedSeries, Vector};

/// The series of an F-module up to its bound, for `j = 0..=j_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesProfile {
    pub prime: u32,
    pub bound: usize,
    pub j_max: usize,
    pub total: TruncatedSeries,
    /// `chi[j]` is the series of `coker F^{j+1}`.
    pub chi: Vec<TruncatedSeries>,
    pub chi_infinity: TruncatedSeries,
    /// Whether the torsion in each degree is settled within the bound.
    pub infinity_determined: Vec<bool>,
}

/// Chain multiplicities by length, `None` where the truncation hides them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicities {
    pub bound: usize,
    /// `finite[j][n]` is `a^j(n)`.
    pub finite: Vec<Vec<Option<i64>>>,
    pub infinite: Vec<Option<i64>>,
}

/// Default top index: `p^{j_max} ≤ N < p^{j_max+1}`.
pub fn j_max(p: u32, bound: usize) -> usize {
    let mut j = 0;
    let mut q = p as usize;
    while q <= bound {
        j += 1;
        q *= p as usize;
    }
    j
}

/// A graded space with a Frobenius, given on basis elements.
trait Frobenius {
    fn field(&self) -> Field;
    fn bound(&self) -> usize;
    fn closed(&self) -> bool;
    fn dim(&self, d: usize) -> usize;
    /// `F(e_i)` for `e_i` in degree `d`, in the basis of degree `p·d`.
    fn apply(&mut self, d: usize, i: usize) -> Vector;
}

impl Frobenius for FModule {
    fn field(&self) -> Field {
        FModule::field(self)
    }
    fn bound(&self) -> usize {
        FModule::bound(self)
    }
    fn closed(&self) -> bool {
        self.is_closed()
    }
    fn dim(&self, d: usize) -> usize {
        FModule::dim(self, d)
    }
    fn apply(&mut self, d: usize, i: usize) -> Vector {
        let mut out = Vector::new();
        if let Some(m) = self.block(d) {
            for r in 0..m.rows() {
                out.add_term(r, m.get(r, i).clone());
            }
        }
        out
    }
}

/// The reduced tensor algebra `T̄M` with letterwise Frobenius. Words are
/// numbered on demand per degree, so only degrees that are touched get
/// enumerated; dimensions come from a composition count.
struct TensorAlgebra<'a> {
    module: &'a FModule,
    dims: Vec<usize>,
    words: Vec<Vec<Vec<(usize, usize)>>>,
    index: Vec<HashMap<Vec<(usize, usize)>, usize>>,
}

impl<'a> TensorAlgebra<'a> {
    fn new(module: &'a FModule) -> Self {
        let bound = module.bound();
        let mut dims = vec![0usize; bound + 1];
        for d in 1..=bound {
            let mut count = module.dim(d);
            for first in 1..d {
                count += module.dim(first) * dims[d - first];
            }
            dims[d] = count;
        }
        TensorAlgebra {
            module,
            dims,
            words: vec![Vec::new(); bound + 1],
            index: vec![HashMap::new(); bound + 1],
        }
    }

    fn intern(&mut self, d: usize, word: Vec<(usize, usize)>) -> usize {
        if let Some(i) = self.index[d].get(&word) {
            return *i;
        }
        let i = self.words[d].len();
        self.words[d].push(word.clone());
        self.index[d].insert(word, i);
        i
    }

    /// Enumerates degree `d` in a fixed order so that index `i` is defined.
    fn word(&mut self, d: usize, i: usize) -> Vec<(usize, usize)> {
        if self.words[d].len() < self.dims[d] {
            let mut all = Vec::new();
            self.extend(d, &mut Vec::new(), &mut all);
            for w in all {
                self.intern(d, w);
            }
        }
        self.words[d][i].clone()
    }

    fn extend(&self, remaining: usize, prefix: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for d in 1..=remaining {
            for i in 0..self.module.dim(d) {
                prefix.push((d, i));
                self.extend(remaining - d, prefix, out);
                prefix.pop();
            }
        }
    }
}

impl Frobenius for TensorAlgebra<'_> {
    fn field(&self) -> Field {
        self.module.field()
    }
    fn bound(&self) -> usize {
        self.module.bound()
    }
    fn closed(&self) -> bool {
        false
    }
    fn dim(&self, d: usize) -> usize {
        self.dims[d]
    }
    fn apply(&mut self, d: usize, i: usize) -> Vector {
        let p = self.module.prime() as usize;
        let word = self.word(d, i);
        let field = self.field();
        let mut terms: Vec<(Vec<(usize, usize)>, Scalar)> = vec![(Vec::new(), field.one())];
        for (e, k) in word {
            let mut letter = Vector::new();
            if let Some(m) = self.module.block(e) {
                for r in 0..m.rows() {
                    letter.add_term(r, m.get(r, k).clone());
                }
            }
            let mut next = Vec::new();
            for (w, c) in &terms {
                for (r, v) in letter.iter() {
                    let mut w2 = w.clone();
                    w2.push((e * p, *r));
                    next.push((w2, c * v));
                }
            }
            terms = next;
        }
        let mut out = Vector::new();
        for (w, c) in terms {
            let key = self.intern(d * p, w);
            out.add_term(key, c);
        }
        out
    }
}

fn profile_of(source: &mut impl Frobenius, p: u32) -> SeriesProfile {
    let bound = source.bound();
    let field = source.field();
    let top = j_max(p, bound);
    let pu = p as usize;
    let total = TruncatedSeries::from_coeffs(bound, &(0..=bound).map(|d| source.dim(d) as i64).collect::<Vec<_>>());
    // image[k][e]: rank of F^{k+1} into degree e.
    let mut image = vec![TruncatedSeries::zero(bound); top + 1];
    let mut chi_infinity = TruncatedSeries::zero(bound);
    let mut infinity_determined = vec![true; bound + 1];
    for d in 1..=bound {
        let dim = source.dim(d);
        if dim == 0 {
            continue;
        }
        let mut current: Vec<Vector> = (0..dim).map(|i| Vector::single(i, field.one())).collect();
        let mut degree = d;
        let mut k = 0;
        while degree * pu <= bound {
            let mut next = Echelon::new(field);
            for v in &current {
                let mut w = Vector::new();
                for (i, c) in v.iter() {
                    w.add_scaled(&source.apply(degree, *i), c);
                }
                next.insert_homogeneous(&w);
            }
            degree *= pu;
            current = next.rows().cloned().collect();
            if k <= top {
                image[k].set_coeff(degree, current.len() as i64);
            }
            k += 1;
        }
        // Surviving rank of the longest composite inside the bound.
        let surviving = if source.closed() { 0 } else { current.len() };
        chi_infinity.set_coeff(d, surviving as i64);
        infinity_determined[d] = source.closed() || surviving == 0;
    }
    let chi = image.iter().map(|im| total.sub(im).expect("same bound")).collect();
    SeriesProfile {
        prime: p,
        bound,
        j_max: top,
        total,
        chi,
        chi_infinity,
        infinity_determined,
    }
}

fn require_f(m: &FModule) -> Result<()> {
    if m.kind() != Kind::F {
        return Err(HopfError::Validation(
            "series profiles are defined for F-modules".into(),
        ));
    }
    Ok(())
}

/// The series of `M` itself.
pub fn series_profile(m: &FModule) -> Result<SeriesProfile> {
    require_f(m)?;
    let mut source = m.clone();
    Ok(profile_of(&mut source, m.prime()))
}

/// The series of the reduced tensor algebra `T̄M` up to the bound of `M`.
pub fn tensor_profile(m: &FModule) -> Result<SeriesProfile> {
    require_f(m)?;
    let mut source = TensorAlgebra::new(m);
    Ok(profile_of(&mut source, m.prime()))
}

/// `1 − 1/(1 + s)`: the generating series of `N` from that of `T̄N`.
fn untensor(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    let bound = s.bound();
    let one = TruncatedSeries::one(bound);
    one.sub(&one.add(s)?.inverse()?)
}

impl SeriesProfile {
    /// `b^j(n)`, read off `χ^j − χ^{j−1}` at `n·p^j`.
    pub fn b(&self, j: usize, n: usize) -> Option<i64> {
        let q = (self.prime as usize).checked_pow(j as u32)?;
        let e = n.checked_mul(q)?;
        if e > self.bound || j > self.j_max {
            return None;
        }
        let lower = if j == 0 { 0 } else { self.chi[j - 1].coeff(e) };
        Some(self.chi[j].coeff(e) - lower)
    }

    /// The multiplicities encoded by these series.
    pub fn multiplicities(&self) -> Multiplicities {
        let p = self.prime as usize;
        let finite = (0..=self.j_max)
            .map(|j| {
                (0..=self.bound)
                    .map(|n| {
                        if n == 0 {
                            return Some(0);
                        }
                        Some(self.b(j, n)? - self.b(j + 1, n)?)
                    })
                    .collect()
            })
            .collect();
        let infinite = (0..=self.bound)
            .map(|n| {
                if n == 0 {
                    return Some(0);
                }
                let lower = if n % p == 0 {
                    if !self.infinity_determined[n / p] {
                        return None;
                    }
                    self.chi_infinity.coeff(n / p)
                } else {
                    0
                };
                self.infinity_determined[n].then(|| self.chi_infinity.coeff(n) - lower)
            })
            .collect();
        Multiplicities {
            bound: self.bound,
            finite,
            infinite,
        }
    }

    /// Rows `j`, columns degree.
    pub fn table(&self) -> String {
        let mut out = String::from("j");
        for d in 0..=self.bound {
            out.push_str(&format!("\t{d}"));
        }
        out.push('\n');
        let mut row = |name: String, s: &TruncatedSeries, mark: &dyn Fn(usize) -> bool| {
            out.push_str(&name);
            for d in 0..=self.bound {
                if mark(d) {
                    out.push_str(&format!("\t{}", s.coeff(d)));
                } else {
                    out.push_str("\t?");
                }
            }
            out.push('\n');
        };
        for (j, s) in self.chi.iter().enumerate() {
            row(j.to_string(), s, &|_| true);
        }
        row("∞".into(), &self.chi_infinity, &|d| self.infinity_determined[d]);
        out
    }
}

/// The profile of `N` recovered from the profile of `T̄N`: the total,
/// image-of-`F^{j+1}` and torsion-free series of `N` are `1 − 1/(1 + s)`
/// applied to those of `T̄N`.
pub fn recover_profile(tn: &SeriesProfile) -> Result<SeriesProfile> {
    let total = untensor(&tn.total)?;
    let chi = tn
        .chi
        .iter()
        .map(|c| {
            let image = untensor(&tn.total.sub(c)?)?;
            total.sub(&image)
        })
        .collect::<Result<Vec<_>>>()?;
    let chi_infinity = untensor(&tn.chi_infinity)?;
    let mut infinity_determined = Vec::with_capacity(tn.bound + 1);
    let mut all = true;
    for d in 0..=tn.bound {
        all &= tn.infinity_determined[d];
        infinity_determined.push(all);
    }
    Ok(SeriesProfile {
        prime: tn.prime,
        bound: tn.bound,
        j_max: tn.j_max,
        total,
        chi,
        chi_infinity,
        infinity_determined,
    })
}

/// Chain multiplicities of `N` from the profile of its tensor algebra.
pub fn recover_decomposition(tn: &SeriesProfile) -> Result<Multiplicities> {
    Ok(recover_profile(tn)?.multiplicities())
}

/// Whether `1 + χ^j_{T̄M} = 1/(1 − χ^j_M)` for every `j ≤ j_max`, with the
/// left side from the tensor algebra and the right from `M`.
pub fn verify_tensor_identity(m: &FModule) -> Result<bool> {
    Ok(tensor_identity_failure(m)?.is_none())
}

/// The first `(j, degree)` where the cokernel identity fails.
pub fn tensor_identity_failure(m: &FModule) -> Result<Option<(usize, usize)>> {
    let direct = series_profile(m)?;
    let tensor = tensor_profile(m)?;
    let one = TruncatedSeries::one(m.bound());
    for j in 0..=direct.j_max {
        let left = one.add(&tensor.chi[j])?;
        let right = one.sub(&direct.chi[j])?.inverse()?;
        if let Some(d) = (0..=m.bound()).find(|d| left.coeff(*d) != right.coeff(*d)) {
            return Ok(Some((j, d)));
        }
    }
    Ok(None)
}

impl Multiplicities {
    /// The multiplicities of a decomposition, hiding the lengths that an
    /// `at_least` chain leaves open.
    pub fn from_decomposition(decomposition: &Decomposition, p: u32) -> Self {
        let bound = decomposition.bound;
        let top = j_max(p, bound);
        let mut finite = vec![vec![Some(0i64); bound + 1]; top + 1];
        let mut infinite = vec![Some(0i64); bound + 1];
        for s in decomposition.summands() {
            match s.j {
                Extent::Finite(j) => {
                    if j <= top {
                        if let Some(c) = &mut finite[j][s.n] {
                            *c += 1;
                        }
                    }
                }
                Extent::AtLeast(j) => {
                    for row in finite.iter_mut().skip(j) {
                        row[s.n] = None;
                    }
                    infinite[s.n] = None;
                }
            }
        }
        Multiplicities {
            bound,
            finite,
            infinite,
        }
    }

    /// Whether the two agree wherever both are determined.
    pub fn agrees_with(&self, other: &Multiplicities) -> bool {
        let same = |a: &Option<i64>, b: &Option<i64>| match (a, b) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        };
        self.finite
            .iter()
            .zip(&other.finite)
            .all(|(r, s)| r.iter().zip(s).all(|(a, b)| same(a, b)))
            && self.infinite.iter().zip(&other.infinite).all(|(a, b)| same(a, b))
    }

    /// Number of determined coefficients.
    pub fn determined(&self) -> usize {
        self.finite
            .iter()
            .flatten()
            .chain(&self.infinite)
            .filter(|c| c.is_some())
            .count()
    }

    /// `a^j` as a series, with undetermined coefficients left out.
    pub fn series(&self, j: usize) -> Vec<(usize, i64)> {
        self.finite[j]
            .iter()
            .enumerate()
            .filter_map(|(n, c)| c.filter(|c| *c != 0).map(|c| (n, c)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fv::{FvModule, Summand};
    use crate::linear::Matrix;
    use std::collections::BTreeMap;

    fn chain(n: usize, j: usize) -> FModule {
        FvModule::standard(Kind::F, n, Some(j), 2, 12).unwrap()
    }

    fn series(terms: &[(usize, i64)]) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(12);
        for (d, c) in terms {
            s.set_coeff(*d, *c);
        }
        s
    }

    #[test]
    fn chain_profile() {
        let p = series_profile(&chain(2, 1)).unwrap();
        assert_eq!(p.chi[0], series(&[(2, 1)]));
        assert_eq!(p.chi[1], series(&[(2, 1), (4, 1)]));
        assert_eq!(p.chi[3], p.chi[1]);
        assert!(p.chi_infinity.is_zero());
    }

    #[test]
    fn trivial_point_profile() {
        let m = FvModule::from_blocks(
            Kind::F,
            Field::prime(2).unwrap(),
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &BTreeMap::new(),
            true,
        )
        .unwrap();
        let p = series_profile(&m).unwrap();
        for c in &p.chi {
            assert_eq!(*c, series(&[(3, 1)]));
        }
        assert!(verify_tensor_identity(&m).unwrap());
    }

    #[test]
    fn infinite_chain_is_torsion_free() {
        let m = FvModule::standard(Kind::F, 2, None, 2, 12).unwrap();
        let p = series_profile(&m).unwrap();
        assert_eq!(p.chi_infinity, series(&[(2, 1), (4, 1), (8, 1)]));
        // Every orbit leaves the bound, so none of it is settled.
        assert!(p.infinity_determined[1] && !p.infinity_determined[2] && !p.infinity_determined[8]);
    }

    #[test]
    fn recovery_from_the_tensor_algebra_of_a_chain() {
        let m = chain(2, 1);
        let recovered = recover_decomposition(&tensor_profile(&m).unwrap()).unwrap();
        assert_eq!(recovered.series(1), vec![(2, 1)]);
        for j in [0, 2, 3] {
            assert!(recovered.series(j).is_empty());
        }
    }

    #[test]
    fn recovery_matches_the_direct_profile() {
        let m = FvModule::direct_sum(&[chain(2, 1), chain(3, 0)]).unwrap();
        let direct = series_profile(&m).unwrap().multiplicities();
        let recovered = recover_decomposition(&tensor_profile(&m).unwrap()).unwrap();
        assert_eq!(direct.finite, recovered.finite);
        assert!(recovered.agrees_with(&Multiplicities::from_decomposition(&m.classify(), 2)));
    }

    #[test]
    fn cokernel_identity_fails_on_a_chain() {
        assert_eq!(tensor_identity_failure(&chain(2, 1)).unwrap(), Some((0, 6)));
    }

    #[test]
    fn tensor_algebra_dimensions_count_words() {
        // Generators in degrees 1, 2: Fibonacci.
        let m = chain(1, 1);
        let t = tensor_profile(&m).unwrap();
        assert_eq!(&t.total.coeffs()[..7], &[0, 1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn tensor_frobenius_is_letterwise() {
        // In N(1,1), F(e1) = e2 and F(e2) = 0. Degree 2 holds [e1|e1] and
        // [e2], with images [e2|e2] and 0.
        let m = chain(1, 1);
        let t = tensor_profile(&m).unwrap();
        assert_eq!(t.total.coeff(4) - t.chi[0].coeff(4), 1);
        let f = Matrix::identity(Field::prime(2).unwrap(), 1);
        assert_eq!(m.block(1), Some(&f));
    }

    #[test]
    fn decomposition_multiplicities_hide_open_lengths() {
        let d = Decomposition::from_summands(12, &[Summand::at_least(4, 1), Summand::finite(2, 0)]);
        let m = Multiplicities::from_decomposition(&d, 2);
        assert_eq!(m.finite[0][2], Some(1));
        assert_eq!(m.finite[0][4], Some(0));
        assert_eq!(m.finite[1][4], None);
        assert_eq!(m.infinite[4], None);
    }
}
