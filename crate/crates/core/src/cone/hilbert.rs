//! Hilbert bases of pointed rational cones.

use rayon::prelude::*;

use super::{triangulate, ConeSystem, Ray};
use crate::error::Result;

/// The irreducible lattice points of a cone, sorted by last coordinate and
/// then lexicographically (descending, so `x1` outranks `x2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    dim: usize,
    points: Vec<Vec<i64>>,
    truncated: bool,
}

impl HilbertBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    /// Set when points above the degree cap were dropped.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Points with the given last coordinate.
    pub fn degree(&self, k: i64) -> impl Iterator<Item = &Vec<i64>> {
        self.points.iter().filter(move |p| p[p.len() - 1] == k)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.points.iter().map(|p| p[p.len() - 1]).max()
    }
}

fn point_cmp(a: &[i64], b: &[i64]) -> std::cmp::Ordering {
    let d = a.len();
    a[d - 1]
        .cmp(&b[d - 1])
        .then_with(|| {
            let sa: i128 = a[..d - 1].iter().map(|&x| x as i128).sum();
            let sb: i128 = b[..d - 1].iter().map(|&x| x as i128).sum();
            sa.cmp(&sb)
        })
        .then_with(|| b.cmp(a))
}

/// Hilbert basis of a full-dimensional pointed cone.
///
/// Candidates are the extreme rays together with the non-zero lattice
/// points of the fundamental parallelepipeds of a triangulation that are
/// not already reducible within their own subcone. Grouped by
/// the value of a strictly positive grading, a candidate is kept iff no
/// already accepted point of smaller grading can be subtracted from it
/// without leaving the cone. With `degree_cap`, basis points whose last
/// coordinate exceeds the cap are dropped afterwards and the result is
/// marked truncated.
pub fn hilbert_basis(cone: &ConeSystem, degree_cap: Option<u64>) -> Result<HilbertBasis> {
    let rays = cone.extreme_rays()?;
    hilbert_basis_with_rays(cone, &rays, degree_cap)
}

/// [`hilbert_basis`] with the extreme rays supplied by the caller; their
/// order fixes the placing triangulation.
pub fn hilbert_basis_with_rays(cone: &ConeSystem, rays: &[Ray], degree_cap: Option<u64>) -> Result<HilbertBasis> {
    let subcones = triangulate(rays)?;

    let per_subcone: Vec<Vec<Vec<i64>>> = subcones
        .par_iter()
        .map(|s| s.local_candidates())
        .collect::<Result<_>>()?;
    let mut candidates: Vec<Vec<i64>> = rays.iter().map(|r| r.coords().to_vec()).collect();
    candidates.extend(
        per_subcone
            .into_iter()
            .flatten()
            .filter(|p| p.iter().any(|&x| x != 0)),
    );

    let grading = cone.grading();
    let grade = |p: &[i64]| -> i128 {
        grading
            .iter()
            .zip(p)
            .map(|(&g, &x)| g * x as i128)
            .sum()
    };
    let mut graded: Vec<(i128, Vec<i64>)> = candidates.into_iter().map(|p| (grade(&p), p)).collect();
    graded.sort();
    graded.dedup();

    let mut basis: Vec<Vec<i64>> = Vec::new();
    let mut start = 0;
    while start < graded.len() {
        let level = graded[start].0;
        let end = start + graded[start..].partition_point(|(g, _)| *g == level);
        // points of equal grading cannot reduce each other
        let survivors: Vec<Vec<i64>> = graded[start..end]
            .par_iter()
            .filter(|(_, x)| !reducible(cone, &basis, x))
            .map(|(_, x)| x.clone())
            .collect();
        basis.extend(survivors);
        start = end;
    }

    let mut truncated = false;
    if let Some(cap) = degree_cap {
        let before = basis.len();
        basis.retain(|p| p[p.len() - 1] <= i64::try_from(cap).unwrap_or(i64::MAX));
        truncated = basis.len() < before;
    }
    basis.sort_by(|a, b| point_cmp(a, b));
    Ok(HilbertBasis {
        dim: cone.dim(),
        points: basis,
        truncated,
    })
}

fn reducible(cone: &ConeSystem, basis: &[Vec<i64>], x: &[i64]) -> bool {
    let mut diff = vec![0i64; x.len()];
    basis.iter().any(|y| {
        for ((d, a), b) in diff.iter_mut().zip(x).zip(y) {
            *d = a - b;
        }
        cone.contains_unchecked(&diff)
    })
}
