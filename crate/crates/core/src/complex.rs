//! Weighted simplicial complexes and their vertex covers.
//!
//! Vertices are 0-indexed internally and 1-indexed in every external
//! rendering ([`ComplexFile`], `Display`). A vector `a ∈ ℕⁿ` is a vertex
//! cover of order `k` of `(Δ, w)` when `Σ_{i∈F} a(i) ≥ k·w_F` for every
//! facet `F`; the minimal covers of order `k` generate the ideal
//! `⋂_F P_F^{k·w_F}`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// A simplicial complex given by its facets, each carrying a positive weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
    weights: Vec<u64>,
}

/// A candidate vertex cover `a` together with its order `k`; corresponds
/// to the monomial `x^a t^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverPoint {
    pub a: ExponentVector,
    pub k: u64,
}

impl CoverPoint {
    pub fn new(a: ExponentVector, k: u64) -> Self {
        CoverPoint { a, k }
    }

    /// Sort key: order first, then the canonical monomial order on `a`.
    pub fn canonical_cmp(&self, other: &CoverPoint) -> std::cmp::Ordering {
        self.k
            .cmp(&other.k)
            .then_with(|| self.a.canonical_cmp(&other.a))
    }

    /// The lattice point `(a(1), …, a(n), k)`.
    pub fn to_lattice(&self) -> Vec<u64> {
        let mut v = self.a.coords().to_vec();
        v.push(self.k);
        v
    }
}

impl fmt::Display for CoverPoint {
    /// `x1*x2*t^2`; the `t` factor is dropped at order 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = if self.a.is_zero() && self.k > 0 {
            String::new()
        } else {
            self.a.to_string()
        };
        match self.k {
            0 => write!(f, "{mono}"),
            1 if mono.is_empty() => write!(f, "t"),
            1 => write!(f, "{mono}*t"),
            k if mono.is_empty() => write!(f, "t^{k}"),
            k => write!(f, "{mono}*t^{k}"),
        }
    }
}

/// `ν_F(a) = Σ_{i∈F} a(i)`, the largest power of `P_F` containing `x^a`.
pub fn nu(a: &ExponentVector, facet: &[usize]) -> u128 {
    facet.iter().map(|&i| a.coords()[i] as u128).sum()
}

fn facet_cmp(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl WeightedComplex {
    /// Validates raw input with 1-indexed vertices. `weights = None` means
    /// the canonical weight function (all 1).
    pub fn validate(n: usize, facets: &[Vec<usize>], weights: Option<&[u64]>) -> Result<Self> {
        let weights: Vec<u64> = match weights {
            Some(w) => {
                if w.len() != facets.len() {
                    return Err(Error::WeightCount {
                        facets: facets.len(),
                        weights: w.len(),
                    });
                }
                w.to_vec()
            }
            None => vec![1; facets.len()],
        };
        let mut zero_based = Vec::with_capacity(facets.len());
        for (idx, facet) in facets.iter().enumerate() {
            if facet.is_empty() {
                return Err(Error::EmptyFacet { facet: idx + 1 });
            }
            let mut f = Vec::with_capacity(facet.len());
            for &v in facet {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange {
                        facet: idx + 1,
                        vertex: v,
                        n,
                    });
                }
                f.push(v - 1);
            }
            f.sort_unstable();
            if let Some(w) = f.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex {
                    facet: idx + 1,
                    vertex: w[0] + 1,
                });
            }
            if weights[idx] == 0 {
                return Err(Error::ZeroWeight { facet: idx + 1 });
            }
            zero_based.push(f);
        }
        for i in 0..zero_based.len() {
            for j in i + 1..zero_based.len() {
                if is_subset(&zero_based[i], &zero_based[j])
                    || is_subset(&zero_based[j], &zero_based[i])
                {
                    return Err(Error::ComparableFacets {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }
        Ok(Self::from_sorted_parts(n, zero_based, weights))
    }

    /// Builds from already-validated 0-indexed, internally sorted facets.
    pub(crate) fn from_sorted_parts(n: usize, facets: Vec<Vec<usize>>, weights: Vec<u64>) -> Self {
        let mut paired: Vec<(Vec<usize>, u64)> = facets.into_iter().zip(weights).collect();
        paired.sort_by(|a, b| facet_cmp(&a.0, &b.0));
        let (facets, weights) = paired.into_iter().unzip();
        WeightedComplex { n, facets, weights }
    }

    /// Complex with canonical weights from 0-indexed facets; validated.
    pub fn with_canonical_weights(n: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        let one_based: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| f.iter().map(|v| v + 1).collect())
            .collect();
        Self::validate(n, &one_based, None)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-indexed facets, sorted by size then lexicographically.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_canonical(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn is_graph(&self) -> bool {
        self.facets.iter().all(|f| f.len() == 2)
    }

    /// Same facets, weights multiplied by `c`.
    pub fn scale_weights(&self, c: u64) -> Result<WeightedComplex> {
        if c == 0 {
            return Err(Error::InvalidArgument("weight scale must be positive".into()));
        }
        let weights = self
            .weights
            .iter()
            .map(|w| w.checked_mul(c).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightedComplex {
            n: self.n,
            facets: self.facets.clone(),
            weights,
        })
    }

    fn check_dim(&self, a: &ExponentVector) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        Ok(())
    }

    /// Whether `a` is a vertex cover of order `k`.
    pub fn is_cover(&self, a: &ExponentVector, k: u64) -> Result<bool> {
        self.check_dim(a)?;
        Ok(self
            .facets
            .iter()
            .zip(&self.weights)
            .all(|(f, &w)| nu(a, f) >= k as u128 * w as u128))
    }

    /// Largest `k` for which `a` is a cover of order `k`; `None` when the
    /// complex has no facets (every order works).
    pub fn max_order(&self, a: &ExponentVector) -> Result<Option<u64>> {
        self.check_dim(a)?;
        Ok(self
            .facets
            .iter()
            .zip(&self.weights)
            .map(|(f, &w)| (nu(a, f) / w as u128).min(u64::MAX as u128) as u64)
            .min())
    }

    /// Whether `a` is a componentwise-minimal cover of order `k`.
    pub fn is_minimal_cover(&self, a: &ExponentVector, k: u64) -> Result<bool> {
        if !self.is_cover(a, k)? {
            return Ok(false);
        }
        let mut b = a.coords().to_vec();
        for i in 0..b.len() {
            if b[i] == 0 {
                continue;
            }
            b[i] -= 1;
            let smaller = self.is_cover(&ExponentVector::new(b.clone()), k)?;
            b[i] += 1;
            if smaller {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `P_F^m` for the `idx`-th facet.
    fn facet_prime_power(&self, idx: usize, m: u64) -> MonomialIdeal {
        prime_power(self.n, &self.facets[idx], m)
    }

    /// `⋂_F P_F^{k·w_F}`; the unit ideal when there are no facets.
    fn scaled_cover_ideal(&self, k: u64) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for (idx, &w) in self.weights.iter().enumerate() {
            let m = w.checked_mul(k).ok_or(Error::Overflow)?;
            acc = acc.intersect(&self.facet_prime_power(idx, m))?;
        }
        Ok(acc)
    }

    /// The cover ideal `I*(Δ, w) = ⋂_F P_F^{w_F}`.
    pub fn cover_ideal(&self) -> MonomialIdeal {
        self.scaled_cover_ideal(1)
            .expect("weights were validated and fit in u64")
    }

    /// Minimal covers of order `k`: the S-module generators of `A_k`.
    pub fn module_generators(&self, k: u64) -> Result<Vec<CoverPoint>> {
        if k == 0 {
            return Err(Error::OrderTooSmall { min: 1, got: 0 });
        }
        let ideal = self.scaled_cover_ideal(k)?;
        Ok(ideal
            .gens()
            .iter()
            .map(|g| CoverPoint::new(g.clone(), k))
            .collect())
    }

    /// Facet complex of a squarefree monomial ideal: facets are the
    /// supports of the minimal generators.
    pub fn facet_complex(ideal: &MonomialIdeal) -> Result<WeightedComplex> {
        if let Some(g) = ideal.gens().iter().find(|g| !g.is_squarefree()) {
            return Err(Error::NotSquarefree(g.to_string()));
        }
        let facets: Vec<Vec<usize>> = ideal.gens().iter().map(|g| g.support()).collect();
        if facets.iter().any(Vec::is_empty) {
            return Err(Error::InvalidArgument(
                "the unit ideal has no facet complex".into(),
            ));
        }
        // minimal generators are an antichain, so their supports are too
        let weights = vec![1; facets.len()];
        Ok(Self::from_sorted_parts(ideal.n(), facets, weights))
    }

    /// The complex whose facets are the minimal vertex covers (minimal
    /// hitting sets) of this complex's facets; weights are ignored.
    pub fn cover_complex(&self) -> Result<WeightedComplex> {
        if self.facets.is_empty() {
            return Err(Error::NoFacets);
        }
        let facets = minimal_hitting_sets(self.n, &self.facets)?;
        let weights = vec![1; facets.len()];
        Ok(Self::from_sorted_parts(self.n, facets, weights))
    }

    /// The `j`-skeleton of the full simplex on `n` vertices: all
    /// `(j+1)`-subsets as facets.
    pub fn skeleton(n: usize, j: usize) -> Result<WeightedComplex> {
        if n < 2 || j > n - 2 {
            return Err(Error::SkeletonRange { n, j });
        }
        let facets = subsets(n, j + 1);
        let weights = vec![1; facets.len()];
        Ok(Self::from_sorted_parts(n, facets, weights))
    }

    /// Splits off the zero-dimensional facets, whose contribution to the
    /// cover ideal is a principal factor.
    pub fn strip_zero_dim_facets(&self) -> StrippedComplex {
        let mut higher = Vec::new();
        let mut higher_w = Vec::new();
        let mut singletons = Vec::new();
        for (f, &w) in self.facets.iter().zip(&self.weights) {
            if f.len() == 1 {
                singletons.push((f[0], w));
            } else {
                higher.push(f.clone());
                higher_w.push(w);
            }
        }
        let all_singletons = higher.is_empty() && !singletons.is_empty();
        StrippedComplex {
            higher: Self::from_sorted_parts(self.n, higher, higher_w),
            singletons,
            all_singletons,
        }
    }
}

impl fmt::Display for WeightedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} facets=[", self.n)?;
        for (i, (facet, w)) in self.facets.iter().zip(&self.weights).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("{")?;
            for (j, v) in facet.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", v + 1)?;
            }
            f.write_str("}")?;
            if *w != 1 {
                write!(f, "^{w}")?;
            }
        }
        f.write_str("]")
    }
}

/// Result of [`WeightedComplex::strip_zero_dim_facets`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrippedComplex {
    /// Facets of size at least 2, with their weights.
    pub higher: WeightedComplex,
    /// Zero-dimensional facets as (0-indexed vertex, weight).
    pub singletons: Vec<(usize, u64)>,
    /// Set when every facet was a singleton.
    pub all_singletons: bool,
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// All `size`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(size).collect()
}

/// `P_F^m`: all monomials of degree `m` supported on `facet`.
pub(crate) fn prime_power(n: usize, facet: &[usize], m: u64) -> MonomialIdeal {
    let mut gens = Vec::new();
    let mut buf = vec![0u64; n];
    weak_compositions(facet, m, &mut buf, &mut gens);
    MonomialIdeal::from_generators(n, gens).expect("all vectors have length n")
}

fn weak_compositions(parts: &[usize], m: u64, buf: &mut [u64], out: &mut Vec<ExponentVector>) {
    match parts {
        [] => {
            if m == 0 {
                out.push(ExponentVector::new(buf.to_vec()));
            }
        }
        [last] => {
            buf[*last] = m;
            out.push(ExponentVector::new(buf.to_vec()));
            buf[*last] = 0;
        }
        [first, rest @ ..] => {
            for e in (0..=m).rev() {
                buf[*first] = e;
                weak_compositions(rest, m - e, buf, out);
            }
            buf[*first] = 0;
        }
    }
}

/// Inclusion-minimal vertex sets meeting every facet, by branching on the
/// vertices of the first facet left uncovered.
fn minimal_hitting_sets(n: usize, facets: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    if n > 128 {
        return Err(Error::InvalidArgument(format!(
            "hitting-set enumeration supports at most 128 vertices, got {n}"
        )));
    }
    let masks: Vec<u128> = facets
        .iter()
        .map(|f| f.iter().fold(0u128, |m, &v| m | (1u128 << v)))
        .collect();
    let mut found: Vec<u128> = Vec::new();
    branch(&masks, 0, &mut found);
    found.sort_unstable();
    found.dedup();
    let minimal: Vec<u128> = found
        .iter()
        .copied()
        .filter(|&s| !found.iter().any(|&t| t != s && t & s == t))
        .collect();
    Ok(minimal
        .into_iter()
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect())
}

fn branch(masks: &[u128], chosen: u128, found: &mut Vec<u128>) {
    // bound: supersets of an already found hitting set cannot be minimal
    if found.iter().any(|&t| t & !chosen == 0) {
        return;
    }
    match masks.iter().find(|&&m| m & chosen == 0) {
        None => found.push(chosen),
        Some(&facet) => {
            let mut rest = facet;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                branch(masks, chosen | (1u128 << v), found);
            }
        }
    }
}

/// Ordinary symbolic power `I^(k)` of a squarefree monomial ideal, as
/// `⋂_F P_F^k` over the facets `F` of the complex whose cover ideal is `I`.
pub fn squarefree_symbolic_power(ideal: &MonomialIdeal, k: u64) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        let g = ideal.gens().iter().find(|g| !g.is_squarefree()).unwrap();
        return Err(Error::NotSquarefree(g.to_string()));
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let primes = WeightedComplex::facet_complex(ideal)?.cover_complex()?;
    let mut acc = MonomialIdeal::unit(ideal.n());
    for facet in primes.facets() {
        acc = acc.intersect(&prime_power(ideal.n(), facet, k))?;
    }
    Ok(acc)
}

/// Closed-form minimal generators of the cover algebra of the `j`-skeleton
/// of the simplex on `n` vertices: for each `q = 1..=j+1`, every squarefree
/// monomial on `n-j+q-1` vertices at degree `q`.
pub fn skeleton_generators(n: usize, j: usize) -> Result<AlgebraPresentation> {
    let source = WeightedComplex::skeleton(n, j)?;
    let mut gens = Vec::new();
    for q in 1..=j + 1 {
        for set in subsets(n, n - j + q - 1) {
            gens.push(CoverPoint::new(ExponentVector::indicator(n, &set), q as u64));
        }
    }
    Ok(AlgebraPresentation::new(source, gens, false))
}

/// On-disk complex format: `{"n": 7, "facets": [[1,2],[2,3]], "weights": [1,2]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
}

impl ComplexFile {
    pub fn into_complex(self) -> Result<WeightedComplex> {
        WeightedComplex::validate(self.n, &self.facets, self.weights.as_deref())
    }
}

impl From<&WeightedComplex> for ComplexFile {
    fn from(c: &WeightedComplex) -> Self {
        ComplexFile {
            n: c.n,
            facets: c
                .facets
                .iter()
                .map(|f| f.iter().map(|v| v + 1).collect())
                .collect(),
            weights: if c.is_canonical() {
                None
            } else {
                Some(c.weights.clone())
            },
        }
    }
}
