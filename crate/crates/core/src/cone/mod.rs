//! Rational cones, their extreme rays, triangulations and Hilbert bases.
//!
//! The cover cone of `(Δ, w)` lives in `ℤ^{n+1}` and is cut out by
//! `Σ_{i∈F} z_i − w_F·y ≥ 0` for every facet together with `z ≥ 0, y ≥ 0`.
//! Its lattice points `(a, k)` are exactly the vertex covers `a` of order
//! `k`, so its Hilbert basis is the minimal generating set of `A(Δ, w)`.
//!
//! The pipeline is [`ConeSystem::extreme_rays`] (double description),
//! [`triangulate`] (placing triangulation), [`SimplicialSubcone::local_candidates`]
//! (parallelepiped points, reduced within their subcone) and [`hilbert_basis`]
//! (reduction by a strictly positive grading).

mod dd;
mod hilbert;
pub(crate) mod linalg;
mod triangulation;

pub use hilbert::{hilbert_basis, hilbert_basis_with_rays, HilbertBasis};
pub use triangulation::{triangulate, SimplicialSubcone};

use crate::complex::WeightedComplex;
use crate::error::{Error, Result};

/// A cone `{p ∈ ℚ^dim : row · p ≥ 0 for every row}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSystem {
    dim: usize,
    rows: Vec<Vec<i64>>,
}

/// A primitive integer vector spanning an extreme ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray(Vec<i64>);

impl Ray {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Last coordinate (the `t`-degree for cover cones).
    pub fn degree(&self) -> i64 {
        *self.0.last().expect("rays are non-empty")
    }

    /// Scales a non-zero vector to be primitive; `None` for the zero vector.
    pub fn primitive(v: Vec<i64>) -> Option<Ray> {
        let g = v.iter().fold(0u64, |g, &x| num_integer::gcd(g, x.unsigned_abs()));
        if g == 0 {
            return None;
        }
        Some(Ray(v.into_iter().map(|x| x / g as i64).collect()))
    }
}

impl ConeSystem {
    /// General inequality system. Every row must have length `dim`.
    pub fn new(dim: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("cone dimension must be positive".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: r.len(),
            });
        }
        Ok(ConeSystem { dim, rows })
    }

    /// The non-negative orthant in `ℚ^dim`.
    pub fn orthant(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut r = vec![0; dim];
                r[i] = 1;
                r
            })
            .collect();
        ConeSystem { dim, rows }
    }

    /// The cover cone: one row per facet (`+1` on the facet's vertices,
    /// `−w_F` in the last column) followed by the `n+1` coordinate rows.
    pub fn cover_cone(complex: &WeightedComplex) -> Result<Self> {
        let n = complex.n();
        let dim = n + 1;
        let mut rows = Vec::with_capacity(complex.facets().len() + dim);
        for (facet, &w) in complex.facets().iter().zip(complex.weights()) {
            let mut r = vec![0i64; dim];
            for &v in facet {
                r[v] = 1;
            }
            r[n] = -i64::try_from(w).map_err(|_| Error::Overflow)?;
            rows.push(r);
        }
        rows.extend(ConeSystem::orthant(dim).rows);
        Ok(ConeSystem { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Whether every row is non-negative on `p`.
    pub fn in_cone(&self, p: &[i64]) -> Result<bool> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.len(),
            });
        }
        Ok(self.contains_unchecked(p))
    }

    pub(crate) fn contains_unchecked(&self, p: &[i64]) -> bool {
        self.rows.iter().all(|r| {
            r.iter()
                .zip(p)
                .map(|(&a, &b)| a as i128 * b as i128)
                .sum::<i128>()
                >= 0
        })
    }

    /// Minimal primitive generators of the cone, sorted lexicographically.
    pub fn extreme_rays(&self) -> Result<Vec<Ray>> {
        dd::extreme_rays(self)
    }

    /// A linear form with strictly positive integer values on every non-zero
    /// point of a pointed cone: the sum of all rows.
    pub(crate) fn grading(&self) -> Vec<i128> {
        let mut g = vec![0i128; self.dim];
        for r in &self.rows {
            for (gi, &x) in g.iter_mut().zip(r) {
                *gi += x as i128;
            }
        }
        g
    }
}

/// Free-function spelling of [`ConeSystem::cover_cone`].
pub fn build_cone(complex: &WeightedComplex) -> Result<ConeSystem> {
    ConeSystem::cover_cone(complex)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge() -> WeightedComplex {
        WeightedComplex::validate(2, &[vec![1, 2]], None).unwrap()
    }

    fn triangle() -> WeightedComplex {
        WeightedComplex::skeleton(3, 1).unwrap()
    }

    #[test]
    fn cover_cone_rows() {
        let c = build_cone(&edge()).unwrap();
        assert_eq!(
            c.rows(),
            &[vec![1, 1, -1], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
        let t = build_cone(&triangle()).unwrap();
        assert_eq!(t.rows().len(), 3 + 4);
        assert!(t.in_cone(&[1, 1, 1, 2]).unwrap());
    }

    #[test]
    fn membership() {
        let t = build_cone(&triangle()).unwrap();
        assert!(t.in_cone(&[1, 1, 1, 2]).unwrap());
        assert!(!t.in_cone(&[1, 1, 0, 2]).unwrap());
        assert!(t.in_cone(&[0, 0, 0, 0]).unwrap());
        assert!(t.in_cone(&[0, 0, 0]).is_err());
    }

    #[test]
    fn primitive_rays() {
        assert_eq!(Ray::primitive(vec![2, 4, -6]).unwrap().coords(), &[1, 2, -3]);
        assert!(Ray::primitive(vec![0, 0]).is_none());
    }
}
