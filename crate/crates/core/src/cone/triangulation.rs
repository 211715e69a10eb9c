//! Placing triangulations and fundamental parallelepipeds.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::linalg::{det_adjugate, dot_sign, rank, to_i128_vec};
use super::Ray;
use crate::error::{Error, Result};

/// Subcones with more lattice points than this in their fundamental
/// parallelepiped are rejected.
pub const MAX_SUBCONE_INDEX: u64 = 50_000_000;

/// A cone spanned by `dim` linearly independent rays.
#[derive(Clone, Debug)]
pub struct SimplicialSubcone {
    rays: Vec<Ray>,
    ray_ids: Vec<usize>,
    index: BigInt,
    /// Row `j` is `|det| · (Q⁻¹)_j`: zero on every generator but the
    /// `j`-th, where it equals the index.
    normals: Vec<Vec<BigInt>>,
    normals_fast: Option<Vec<Vec<i128>>>,
}

impl SimplicialSubcone {
    /// Subcone spanned by the given rays; fails unless they form a basis.
    pub fn new(rays: Vec<Ray>) -> Result<Self> {
        let ids = (0..rays.len()).collect();
        Self::with_ids(rays, ids)
    }

    fn with_ids(rays: Vec<Ray>, ray_ids: Vec<usize>) -> Result<Self> {
        let d = rays.len();
        if let Some(r) = rays.iter().find(|r| r.dim() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: r.dim(),
            });
        }
        // generators are the columns
        let q: Vec<Vec<i64>> = (0..d)
            .map(|row| rays.iter().map(|r| r.coords()[row]).collect())
            .collect();
        let Some((det, adj)) = det_adjugate(&q) else {
            return Err(Error::RankDeficient {
                rank: rank(&rays.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>()),
                dim: d,
            });
        };
        let normals: Vec<Vec<BigInt>> = if det.is_negative() {
            adj.into_iter()
                .map(|r| r.into_iter().map(|x| -x).collect())
                .collect()
        } else {
            adj
        };
        let normals_fast = normals.iter().map(|r| to_i128_vec(r)).collect();
        Ok(SimplicialSubcone {
            rays,
            ray_ids,
            index: det.abs(),
            normals,
            normals_fast,
        })
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    /// Positions of the generators in the ray list given to [`triangulate`].
    pub fn ray_ids(&self) -> &[usize] {
        &self.ray_ids
    }

    /// `|det|` of the generator matrix: the number of lattice points in the
    /// half-open fundamental parallelepiped.
    pub fn index(&self) -> &BigInt {
        &self.index
    }

    /// `index · λ` where `p = Σ λ_j q_j`.
    pub fn scaled_coordinates(&self, p: &[i64]) -> Vec<BigInt> {
        self.normals
            .iter()
            .map(|r| r.iter().zip(p).map(|(a, &b)| a * b).sum())
            .collect()
    }

    fn facet_side(&self, pos: usize, p: &[i64]) -> Ordering {
        dot_sign(
            self.normals_fast.as_ref().map(|n| n[pos].as_slice()),
            &self.normals[pos],
            p,
        )
    }

    /// All lattice points `Σ λ_j q_j` with every `λ_j ∈ [0, 1)`, sorted.
    pub fn parallelepiped_points(&self) -> Result<Vec<Vec<i64>>> {
        let d = self.rays.len();
        let (modulus, residues) = self.residues()?;
        let mut points = residues
            .chunks(d)
            .map(|r| self.point_from_residue(r, modulus))
            .collect::<Result<Vec<_>>>()?;
        points.sort();
        Ok(points)
    }

    /// Non-zero parallelepiped points whose coordinate vector `λ` is
    /// componentwise minimal among all parallelepiped points, sorted.
    ///
    /// If `λ(y) ≤ λ(x)` then `x − y` lies in this subcone, so every other
    /// point is reducible and cannot belong to a Hilbert basis of any cone
    /// containing this one.
    pub fn local_candidates(&self) -> Result<Vec<Vec<i64>>> {
        let d = self.rays.len();
        let (modulus, residues) = self.residues()?;
        let mut order: Vec<(u64, usize)> = residues
            .chunks(d)
            .enumerate()
            .map(|(i, r)| (r.iter().map(|&x| x as u64).sum(), i))
            .filter(|&(s, _)| s > 0)
            .collect();
        order.sort_unstable();
        // distinct residues with y ≤ x have a smaller sum, so one pass suffices
        let mut kept: Vec<&[u32]> = Vec::new();
        for &(_, i) in &order {
            let r = &residues[i * d..(i + 1) * d];
            if !kept.iter().any(|y| y.iter().zip(r).all(|(a, b)| a <= b)) {
                kept.push(r);
            }
        }
        let mut points = kept
            .into_iter()
            .map(|r| self.point_from_residue(r, modulus))
            .collect::<Result<Vec<_>>>()?;
        points.sort();
        Ok(points)
    }

    /// Residue vectors `index · λ mod index` of all parallelepiped points,
    /// flattened `d` per point.
    ///
    /// They are the images of coset representatives of `ℤ^d / Qℤ^d`. A
    /// triangular basis of `Qℤ^d` has diagonal `h`, and the box
    /// `Π [0, h_i)` is a set of representatives, walked as an odometer.
    fn residues(&self) -> Result<(u64, Vec<u32>)> {
        let d = self.rays.len();
        let modulus = self
            .index
            .to_u64()
            .filter(|&m| m <= MAX_SUBCONE_INDEX)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "subcone index {} exceeds the enumeration limit {MAX_SUBCONE_INDEX}",
                    self.index
                ))
            })?;
        let m = BigInt::from(modulus);
        // residue of the unit vector e_j
        let cols: Vec<Vec<u64>> = (0..d)
            .map(|j| {
                (0..d)
                    .map(|k| {
                        let r = ((&self.normals[k][j] % &m) + &m) % &m;
                        r.to_u64().expect("residue is below the modulus")
                    })
                    .collect()
            })
            .collect();
        let diag = self.triangular_diagonal(modulus);
        debug_assert_eq!(diag.iter().product::<u64>(), modulus);
        let wrap: Vec<Vec<u64>> = cols
            .iter()
            .zip(&diag)
            .map(|(c, &h)| c.iter().map(|&x| (modulus - (h * x) % modulus) % modulus).collect())
            .collect();

        let mut out: Vec<u32> = Vec::with_capacity(modulus as usize * d);
        let mut digits = vec![0u64; d];
        let mut res = vec![0u64; d];
        let add = |res: &mut [u64], v: &[u64]| {
            for (r, x) in res.iter_mut().zip(v) {
                *r = (*r + x) % modulus;
            }
        };
        'walk: loop {
            out.extend(res.iter().map(|&r| r as u32));
            let mut j = 0;
            loop {
                if j == d {
                    break 'walk;
                }
                digits[j] += 1;
                add(&mut res, &cols[j]);
                if digits[j] < diag[j] {
                    break;
                }
                digits[j] = 0;
                add(&mut res, &wrap[j]);
                j += 1;
            }
        }
        debug_assert_eq!(out.len() as u64, modulus * d as u64);
        Ok((modulus, out))
    }

    /// Diagonal of a lower triangular basis of `Qℤ^d`, computed modulo
    /// the index, which is legitimate because `index · ℤ^d ⊆ Qℤ^d`.
    fn triangular_diagonal(&self, modulus: u64) -> Vec<u64> {
        let d = self.rays.len();
        let m = modulus as i128;
        let mut gens: Vec<Vec<i128>> = self
            .rays
            .iter()
            .map(|r| r.coords().iter().map(|&x| (x as i128).rem_euclid(m)).collect())
            .collect();
        let mut diag = Vec::with_capacity(d);
        for i in 0..d {
            let mut pivot = vec![0i128; d];
            pivot[i] = m;
            for g in gens.iter_mut().filter(|g| g[i] != 0) {
                let e = pivot[i].extended_gcd(&g[i]);
                let (a, b) = (pivot[i] / e.gcd, g[i] / e.gcd);
                for c in i + 1..d {
                    let (p, q) = (pivot[c], g[c]);
                    pivot[c] = (e.x * p + e.y * q).rem_euclid(m);
                    g[c] = (a * q - b * p).rem_euclid(m);
                }
                pivot[i] = e.gcd;
                g[i] = 0;
            }
            diag.push(pivot[i] as u64);
        }
        diag
    }

    fn point_from_residue(&self, residue: &[u32], modulus: u64) -> Result<Vec<i64>> {
        let d = self.rays.len();
        (0..d)
            .map(|row| {
                let mut acc: i128 = 0;
                for (r, q) in residue.iter().zip(&self.rays) {
                    let term = (*r as i128)
                        .checked_mul(q.coords()[row] as i128)
                        .ok_or(Error::Overflow)?;
                    acc = acc.checked_add(term).ok_or(Error::Overflow)?;
                }
                debug_assert_eq!(acc % modulus as i128, 0);
                i64::try_from(acc / modulus as i128).map_err(|_| Error::Overflow)
            })
            .collect()
    }
}

/// Placing triangulation of the cone spanned by `rays`.
///
/// A maximal linearly independent prefix (chosen greedily in the given
/// order) forms the first simplex; every remaining ray, in order, is coned
/// over the boundary facets of the current triangulation that it sees.
pub fn triangulate(rays: &[Ray]) -> Result<Vec<SimplicialSubcone>> {
    let Some(first) = rays.first() else {
        return Err(Error::RankDeficient { rank: 0, dim: 0 });
    };
    let d = first.dim();
    if let Some(r) = rays.iter().find(|r| r.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: r.dim(),
        });
    }

    let mut independent: Vec<usize> = Vec::with_capacity(d);
    for (i, r) in rays.iter().enumerate() {
        if independent.len() == d {
            break;
        }
        let mut trial: Vec<&[i64]> = independent.iter().map(|&j| rays[j].coords()).collect();
        trial.push(r.coords());
        if rank(&trial) == trial.len() {
            independent.push(i);
        }
    }
    if independent.len() < d {
        return Err(Error::RankDeficient {
            rank: independent.len(),
            dim: d,
        });
    }

    let make = |ids: Vec<usize>| {
        SimplicialSubcone::with_ids(ids.iter().map(|&i| rays[i].clone()).collect(), ids)
    };

    let mut simplices = vec![make(independent.clone())?];
    // boundary facet (sorted ids) -> (simplex, position of the omitted ray)
    let mut boundary: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
    add_facets(&mut boundary, &simplices[0], 0);

    let rest = (0..rays.len()).filter(|i| !independent.contains(i));
    for t in rest {
        let p = rays[t].coords();
        let visible: Vec<Vec<usize>> = boundary
            .iter()
            .filter(|(_, &(s, pos))| simplices[s].facet_side(pos, p) == Ordering::Less)
            .map(|(key, _)| key.clone())
            .collect();
        for key in visible {
            let mut ids = key;
            ids.push(t);
            let s = make(ids)?;
            let idx = simplices.len();
            add_facets(&mut boundary, &s, idx);
            simplices.push(s);
        }
    }
    Ok(simplices)
}

/// Toggles the facets of a new simplex in the boundary map: a facet seen
/// for the second time is interior.
fn add_facets(
    boundary: &mut BTreeMap<Vec<usize>, (usize, usize)>,
    simplex: &SimplicialSubcone,
    idx: usize,
) {
    for pos in 0..simplex.ray_ids.len() {
        let mut key: Vec<usize> = simplex
            .ray_ids
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != pos)
            .map(|(_, &id)| id)
            .collect();
        key.sort_unstable();
        if boundary.remove(&key).is_none() {
            boundary.insert(key, (idx, pos));
        }
    }
}
