//! Graded presentations of vertex cover algebras and predicates on them.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::complex::{squarefree_symbolic_power, CoverPoint, WeightedComplex};
use crate::cone::{hilbert_basis, ConeSystem};
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// Hard ceiling on the default degree cap.
pub const DEFAULT_CAP_CEILING: u64 = 1_000_000;

/// Minimal generators of positive degree of `A(Δ, w)` over `S`; the
/// degree-0 unit vectors are implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    source: WeightedComplex,
    generators: Vec<CoverPoint>,
    truncated: bool,
}

impl AlgebraPresentation {
    /// Sorts `generators` by order, then by the canonical monomial order.
    pub fn new(source: WeightedComplex, mut generators: Vec<CoverPoint>, truncated: bool) -> Self {
        generators.sort_by(|a, b| a.canonical_cmp(b));
        AlgebraPresentation {
            source,
            generators,
            truncated,
        }
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }

    pub fn source(&self) -> &WeightedComplex {
        &self.source
    }

    pub fn generators(&self) -> &[CoverPoint] {
        &self.generators
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Generators keyed by order.
    pub fn by_degree(&self) -> BTreeMap<u64, Vec<&CoverPoint>> {
        let mut out: BTreeMap<u64, Vec<&CoverPoint>> = BTreeMap::new();
        for g in &self.generators {
            out.entry(g.k).or_default().push(g);
        }
        out
    }

    /// Largest order of a generator, 0 when there are none.
    pub fn max_degree(&self) -> Result<u64> {
        if self.truncated {
            return Err(Error::Truncated {
                cap: self.generators.iter().map(|g| g.k).max().unwrap_or(0),
            });
        }
        Ok(self.generators.iter().map(|g| g.k).max().unwrap_or(0))
    }

    /// The first generator of order above 1, if any.
    pub fn nonstandard_witness(&self) -> Option<&CoverPoint> {
        self.generators.iter().find(|g| g.k > 1)
    }
}

/// The cap used when none is given: the degree bound for `n` vertices,
/// clamped to [`DEFAULT_CAP_CEILING`].
pub fn default_cap(n: usize) -> u64 {
    DegreeBound::new(n.max(1)).max_allowed().min(DEFAULT_CAP_CEILING)
}

/// Hilbert basis of the cover cone without its degree-0 part.
pub fn generators(c: &WeightedComplex, degree_cap: Option<u64>) -> Result<AlgebraPresentation> {
    let cap = degree_cap.unwrap_or_else(|| default_cap(c.n()));
    let cone = ConeSystem::cover_cone(c)?;
    let hb = hilbert_basis(&cone, Some(cap))?;
    let gens = hb
        .points()
        .iter()
        .filter(|p| p[p.len() - 1] > 0)
        .map(|p| {
            let (k, a) = p.split_last().expect("cone points are non-empty");
            CoverPoint::new(
                ExponentVector::new(a.iter().map(|&x| x as u64).collect()),
                *k as u64,
            )
        })
        .collect();
    Ok(AlgebraPresentation::new(c.clone(), gens, hb.truncated()))
}

/// `A(Δ, w)^{(c)} = A(Δ, c·w)`.
pub fn veronese(c: &WeightedComplex, scale: u64) -> Result<WeightedComplex> {
    c.scale_weights(scale)
}

/// Whether every generator has order 1.
pub fn is_standard_graded(c: &WeightedComplex) -> Result<bool> {
    Ok(generators(c, None)?.max_degree()? <= 1)
}

/// Outcome of [`find_veronese_d`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VeroneseSearch {
    /// `(⋂ I_j^d)^k = ⋂ I_j^{dk}` for every `k ≤ verified_up_to`.
    Found { d: u64, verified_up_to: u64 },
    NotFound { searched_up_to: u64 },
}

/// Smallest `d ≤ d_max` with `(⋂ I_j^d)^k = ⋂ I_j^{dk}` for all `k ≤ k_max`.
pub fn find_veronese_d(ideals: &[MonomialIdeal], k_max: u64, d_max: u64) -> Result<VeroneseSearch> {
    if k_max == 0 || d_max == 0 {
        return Err(Error::InvalidArgument("search bounds must be positive".into()));
    }
    let Some(first) = ideals.first() else {
        return Err(Error::InvalidArgument("need at least one ideal".into()));
    };
    if let Some(bad) = ideals.iter().find(|i| i.n() != first.n()) {
        return Err(Error::DimensionMismatch {
            expected: first.n(),
            found: bad.n(),
        });
    }
    let section = |e: u64| -> Result<MonomialIdeal> {
        let powers = ideals.iter().map(|i| i.power(e)).collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::intersect_all(&powers)?.expect("at least one ideal"))
    };
    for d in 1..=d_max {
        let base = section(d)?;
        let mut ok = true;
        for k in 2..=k_max {
            let dk = d.checked_mul(k).ok_or(Error::Overflow)?;
            if !base.power(k)?.equals(&section(dk)?)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(VeroneseSearch::Found {
                d,
                verified_up_to: k_max,
            });
        }
    }
    Ok(VeroneseSearch::NotFound {
        searched_up_to: d_max,
    })
}

/// Verdict of [`is_gorenstein`] with the zero-dimensional facets removed
/// beforehand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinVerdict {
    pub gorenstein: bool,
    /// Removed singleton facets as (0-indexed vertex, weight).
    pub stripped: Vec<(usize, u64)>,
    /// 0-indexed facets with `w_F ≠ |F| − 1`.
    pub offending: Vec<Vec<usize>>,
}

/// Whether `w_F = |F| − 1` on every facet of size at least 2.
pub fn is_gorenstein(c: &WeightedComplex) -> Result<GorensteinVerdict> {
    let stripped = c.strip_zero_dim_facets();
    if stripped.all_singletons {
        return Err(Error::AllSingletonFacets);
    }
    if stripped.higher.facets().is_empty() {
        return Err(Error::NoFacets);
    }
    let offending: Vec<Vec<usize>> = stripped
        .higher
        .facets()
        .iter()
        .zip(stripped.higher.weights())
        .filter(|(f, &w)| w != f.len() as u64 - 1)
        .map(|(f, _)| f.clone())
        .collect();
    Ok(GorensteinVerdict {
        gorenstein: offending.is_empty(),
        stripped: stripped.singletons,
        offending,
    })
}

/// Exact form of `d < (n+1)^{(n+3)/2} / 2^n`: `d²·4ⁿ < (n+1)^{n+3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBound {
    n: usize,
    rhs: BigUint,
    four_n: BigUint,
}

impl DegreeBound {
    pub fn new(n: usize) -> Self {
        let n1 = BigUint::from(n as u64 + 1);
        DegreeBound {
            n,
            rhs: n1.pow(n as u32 + 3),
            four_n: BigUint::from(4u32).pow(n as u32),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn holds(&self, d: u64) -> bool {
        let d = BigUint::from(d);
        &d * &d * &self.four_n < self.rhs
    }

    /// Largest `d` with [`holds`](Self::holds), saturated at `u64::MAX`.
    pub fn max_allowed(&self) -> u64 {
        let q = (&self.rhs - 1u32) / &self.four_n;
        q.sqrt().to_u64().unwrap_or(u64::MAX)
    }
}

/// Exact form of `v ≤ (n+1)^{(n+1)/2} / 2^n`: `v²·4ⁿ ≤ (n+1)^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsDeterminantBound {
    n: usize,
    rhs: BigUint,
    four_n: BigUint,
}

impl FsDeterminantBound {
    pub fn new(n: usize) -> Self {
        let n1 = BigUint::from(n as u64 + 1);
        FsDeterminantBound {
            n,
            rhs: n1.pow(n as u32 + 1),
            four_n: BigUint::from(4u32).pow(n as u32),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn holds(&self, v: &BigUint) -> bool {
        v * v * &self.four_n <= self.rhs
    }

    /// Largest `v` with [`holds`](Self::holds).
    pub fn max_allowed(&self) -> BigUint {
        (&self.rhs / &self.four_n).sqrt()
    }
}

/// Outcome of [`compare_powers`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerComparison {
    Equal,
    /// `witness` is a minimal generator of `I^(k)` outside `I^k`.
    Proper { witness: ExponentVector },
}

/// Compares `I^k` with the symbolic power `I^(k)` of a squarefree ideal.
pub fn compare_powers(ideal: &MonomialIdeal, k: u64) -> Result<PowerComparison> {
    if k == 0 {
        return Err(Error::OrderTooSmall { min: 1, got: 0 });
    }
    let symbolic = squarefree_symbolic_power(ideal, k)?;
    let ordinary = ideal.power(k)?;
    for g in symbolic.gens() {
        if !ordinary.contains(g)? {
            return Ok(PowerComparison::Proper { witness: g.clone() });
        }
    }
    Ok(PowerComparison::Equal)
}

/// `max_degree` of the Veronese rescalings `c = 1..=c_max`, computed in
/// parallel.
pub fn veronese_degrees(c: &WeightedComplex, c_max: u64) -> Result<Vec<u64>> {
    (1..=c_max)
        .into_par_iter()
        .map(|s| generators(&veronese(c, s)?, None)?.max_degree())
        .collect()
}
