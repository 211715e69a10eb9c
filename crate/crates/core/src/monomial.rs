//! Monomial ideals in `n` variables.
//!
//! A monomial `x₁^a(1)···xₙ^a(n)` is stored as its [`ExponentVector`]; a
//! [`MonomialIdeal`] is stored as the antichain of its minimal generators
//! under divisibility, kept in a canonical order so that ideal equality is
//! plain vector equality. Every operation re-minimalizes before returning.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(coords: Vec<u64>) -> Self {
        ExponentVector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The variable `x_{i+1}` (0-indexed `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    /// Indicator vector of a vertex set (0-indexed).
    pub fn indicator(n: usize, set: &[usize]) -> Self {
        let mut v = vec![0; n];
        for &i in set {
            v[i] = 1;
        }
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Total degree.
    pub fn degree(&self) -> u128 {
        self.0.iter().map(|&e| e as u128).sum()
    }

    /// `self | other`, i.e. componentwise `self ≤ other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn checked_scale(&self, c: u64) -> Result<ExponentVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(c).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise maximum (exponent vector of the lcm).
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise `max(self - other, 0)`: the generator of `(self) : (other)`.
    pub fn quotient(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Componentwise difference, `None` unless `other ≤ self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// 0-indexed support.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Canonical order: ascending total degree, then lexicographic with
    /// `x1 > x2 > ... > xn` (so `x1*x2` precedes `x1*x3`).
    pub fn canonical_cmp(&self, other: &ExponentVector) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for ExponentVector {
    /// Renders as `x1^2*x3`, or `1` for the zero vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl From<Vec<u64>> for ExponentVector {
    fn from(v: Vec<u64>) -> Self {
        ExponentVector(v)
    }
}

/// A monomial ideal of `K[x1..xn]` given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

/// Reduces a set of exponent vectors to the antichain of its
/// componentwise-minimal elements, in canonical order.
pub fn minimalize<I>(n: usize, vectors: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = ExponentVector>,
{
    let mut all: Vec<ExponentVector> = Vec::new();
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        all.push(v);
    }
    Ok(MonomialIdeal {
        n,
        gens: minimal_elements(all),
    })
}

fn minimal_elements(mut all: Vec<ExponentVector>) -> Vec<ExponentVector> {
    all.sort_by(|a, b| a.canonical_cmp(b));
    all.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(all.len());
    // a divisor has degree <= its multiple, so sorted order means only
    // earlier vectors can divide later ones
    for v in all {
        if !kept.iter().any(|g| g.divides(&v)) {
            kept.push(v);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![ExponentVector::zeros(n)],
        }
    }

    pub fn principal(m: ExponentVector) -> Self {
        MonomialIdeal {
            n: m.len(),
            gens: vec![m],
        }
    }

    /// Ideal generated by the given vectors (which need not be minimal).
    pub fn from_generators<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        minimalize(n, gens)
    }

    /// Convenience constructor from raw exponent lists.
    pub fn from_exponents(n: usize, gens: &[&[u64]]) -> Result<Self> {
        minimalize(n, gens.iter().map(|g| ExponentVector::new(g.to_vec())))
    }

    /// The prime `(x_i : i ∈ set)`.
    pub fn prime(n: usize, set: &[usize]) -> Self {
        let gens = set.iter().map(|&i| ExponentVector::unit(n, i));
        minimalize(n, gens).expect("unit vectors have length n")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(ExponentVector::is_squarefree)
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if self.n != found {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found,
            });
        }
        Ok(())
    }

    /// Membership of the monomial `m`.
    pub fn contains(&self, m: &ExponentVector) -> Result<bool> {
        self.check_dim(m.len())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        other.check_dim(self.n)?;
        Ok(self
            .gens
            .iter()
            .all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    /// Equality of ideals (identical minimal generating sets).
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other.n)?;
        Ok(self.gens == other.gens)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        minimalize(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        minimalize(self.n, lcms)
    }

    /// Intersection of a non-empty family; `None` for the empty family.
    pub fn intersect_all<'a, I>(ideals: I) -> Result<Option<MonomialIdeal>>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut acc: Option<MonomialIdeal> = None;
        for ideal in ideals {
            acc = Some(match acc {
                None => ideal.clone(),
                Some(a) => a.intersect(ideal)?,
            });
        }
        Ok(acc)
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                products.push(a.checked_add(b)?);
            }
        }
        minimalize(self.n, products)
    }

    /// `self^k` by binary exponentiation; `self^0` is the unit ideal.
    pub fn power(&self, k: u64) -> Result<MonomialIdeal> {
        let mut result = MonomialIdeal::unit(self.n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.multiply(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(result)
    }

    /// `self : (m)` for a single monomial.
    pub fn colon_monomial(&self, m: &ExponentVector) -> Result<MonomialIdeal> {
        self.check_dim(m.len())?;
        minimalize(self.n, self.gens.iter().map(|f| f.quotient(m)))
    }

    /// `self : other = ⋂_{g ∈ gens(other)} self : g`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        if other.is_zero() {
            return Err(Error::ZeroColon);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let q = self.colon_monomial(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("other has at least one generator"))
    }

    /// `self : other^∞`, the stable value of the ascending chain
    /// `self ⊆ self:other ⊆ self:other² ⊆ …`.
    pub fn saturate(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut current = self.colon(other)?;
        if current == *self {
            return Ok(current);
        }
        loop {
            let next = current.colon(other)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `self^k : other^∞`, the k-th symbolic power with respect to `other`.
    pub fn symbolic_power_wrt(&self, other: &MonomialIdeal, k: u64) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        if other.is_zero() {
            return Err(Error::ZeroColon);
        }
        self.power(k)?.saturate(other)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// On-disk ideal format: `{"n": 3, "gens": [[1,1,0],[0,1,1]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub n: usize,
    pub gens: Vec<Vec<u64>>,
}

impl IdealFile {
    pub fn into_ideal(self) -> Result<MonomialIdeal> {
        minimalize(self.n, self.gens.into_iter().map(ExponentVector::new))
    }
}

impl From<&MonomialIdeal> for IdealFile {
    fn from(ideal: &MonomialIdeal) -> Self {
        IdealFile {
            n: ideal.n,
            gens: ideal.gens.iter().map(|g| g.coords().to_vec()).collect(),
        }
    }
}
