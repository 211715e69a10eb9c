//! Incremental double description with the combinatorial adjacency test.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::linalg::{det_adjugate, normalize_big, rank};
use super::{ConeSystem, Ray};
use crate::error::{Error, Result};

/// Set of row indices, one bit per row.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn new(rows: usize) -> Self {
        RowSet(vec![0; rows.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &RowSet) -> RowSet {
        RowSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &RowSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct DdRay {
    v: Vec<BigInt>,
    zeros: RowSet,
}

fn eval(row: &[i64], v: &[BigInt]) -> BigInt {
    row.iter()
        .zip(v)
        .filter(|(&a, _)| a != 0)
        .map(|(&a, x)| x * a)
        .sum()
}

pub(super) fn extreme_rays(cone: &ConeSystem) -> Result<Vec<Ray>> {
    let d = cone.dim;
    let rows = &cone.rows;

    // initial simplicial cone from d independent rows, sparsest first
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| rows[i].iter().filter(|&&x| x != 0).count());
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    for &i in &order {
        if basis.len() == d {
            break;
        }
        let mut trial: Vec<&[i64]> = basis.iter().map(|&b| rows[b].as_slice()).collect();
        trial.push(&rows[i]);
        if rank(&trial) == trial.len() {
            basis.push(i);
        }
    }
    if basis.len() < d {
        // lineality space is non-trivial
        return Err(Error::DegenerateCone);
    }
    let a0: Vec<Vec<i64>> = basis.iter().map(|&b| rows[b].clone()).collect();
    let (det, adj) = det_adjugate(&a0).expect("basis rows are independent");
    let sign = if det.is_negative() { -1 } else { 1 };

    let mut rays: Vec<DdRay> = (0..d)
        .map(|col| {
            let mut v: Vec<BigInt> = (0..d).map(|r| &adj[r][col] * sign).collect();
            normalize_big(&mut v);
            let mut zeros = RowSet::new(rows.len());
            for (j, &b) in basis.iter().enumerate() {
                if j != col {
                    zeros.insert(b);
                }
            }
            DdRay { v, zeros }
        })
        .collect();

    let mut processed: Vec<bool> = vec![false; rows.len()];
    for &b in &basis {
        processed[b] = true;
    }

    for h in 0..rows.len() {
        if processed[h] {
            continue;
        }
        processed[h] = true;
        let row = &rows[h];
        let values: Vec<BigInt> = rays.iter().map(|r| eval(row, &r.v)).collect();

        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (i, val) in values.iter().enumerate() {
            match val.sign_cmp() {
                Ordering::Greater => pos.push(i),
                Ordering::Less => neg.push(i),
                Ordering::Equal => rays[i].zeros.insert(h),
            }
        }
        if neg.is_empty() {
            continue;
        }

        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.intersection(&rays[q].zeros);
                if common.len() + 2 < d {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(r, ray)| {
                    r == p || r == q || !common.is_subset(&ray.zeros)
                });
                if !adjacent {
                    continue;
                }
                // positive combination vanishing on row h
                let vp = &values[p];
                let vq = -&values[q];
                let mut v: Vec<BigInt> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xq, xp)| xq * vp + xp * &vq)
                    .collect();
                normalize_big(&mut v);
                let mut zeros = common;
                zeros.insert(h);
                created.push(DdRay { v, zeros });
            }
        }

        let mut keep = vec![true; rays.len()];
        for &q in &neg {
            keep[q] = false;
        }
        let mut next: Vec<DdRay> = rays
            .into_iter()
            .zip(keep)
            .filter_map(|(r, k)| k.then_some(r))
            .collect();
        next.extend(created);
        rays = next;
    }

    let mut out: Vec<Ray> = rays
        .into_iter()
        .map(|r| {
            r.v.iter()
                .map(|x| x.to_i64().ok_or(Error::Overflow))
                .collect::<Result<Vec<i64>>>()
                .map(Ray)
        })
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    if rank(&out.iter().map(|r| r.0.clone()).collect::<Vec<_>>()) < d {
        return Err(Error::DegenerateCone);
    }
    Ok(out)
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::WeightedComplex;
    use num_rational::BigRational;
    use num_traits::One;

    /// Vertices of `{a ≥ 0, Σ_{F} a ≥ w_F}` found by solving every square
    /// subsystem of tight constraints, scaled to primitive `(a, 1)` rays,
    /// plus the recession directions `e_i`.
    fn cross_section_oracle(c: &WeightedComplex) -> Vec<Ray> {
        let n = c.n();
        let mut cons: Vec<(Vec<i64>, i64)> = Vec::new();
        for (f, &w) in c.facets().iter().zip(c.weights()) {
            let mut r = vec![0; n];
            for &v in f {
                r[v] = 1;
            }
            cons.push((r, w as i64));
        }
        for i in 0..n {
            let mut r = vec![0; n];
            r[i] = 1;
            cons.push((r, 0));
        }
        let feasible = |x: &[BigRational]| {
            cons.iter().all(|(r, b)| {
                let s: BigRational = r
                    .iter()
                    .zip(x)
                    .map(|(&a, v)| v * BigRational::from_integer(a.into()))
                    .sum();
                s >= BigRational::from_integer((*b).into())
            })
        };
        let mut out = Vec::new();
        for subset in itertools::Itertools::combinations(0..cons.len(), n) {
            let mut m: Vec<Vec<BigRational>> = subset
                .iter()
                .map(|&i| {
                    let mut row: Vec<BigRational> = cons[i]
                        .0
                        .iter()
                        .map(|&a| BigRational::from_integer(a.into()))
                        .collect();
                    row.push(BigRational::from_integer(cons[i].1.into()));
                    row
                })
                .collect();
            // Gauss-Jordan
            let mut ok = true;
            for col in 0..n {
                let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                    ok = false;
                    break;
                };
                m.swap(p, col);
                let piv = m[col][col].clone();
                for x in m[col].iter_mut() {
                    *x = &*x / &piv;
                }
                let prow = m[col].clone();
                for (r, row) in m.iter_mut().enumerate() {
                    if r != col && !row[col].is_zero() {
                        let f = row[col].clone();
                        for (x, y) in row.iter_mut().zip(&prow) {
                            *x = &*x - &f * y;
                        }
                    }
                }
            }
            if !ok {
                continue;
            }
            let x: Vec<BigRational> = m.iter().map(|r| r[n].clone()).collect();
            if !feasible(&x) {
                continue;
            }
            let lcm = x
                .iter()
                .fold(BigInt::one(), |l, v| num_integer::Integer::lcm(&l, v.denom()));
            let mut v: Vec<i64> = x
                .iter()
                .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer().to_i64().unwrap())
                .collect();
            v.push(lcm.to_i64().unwrap());
            out.push(Ray::primitive(v).unwrap());
        }
        for i in 0..n {
            let mut v = vec![0; n + 1];
            v[i] = 1;
            out.push(Ray(v));
        }
        out.sort();
        out.dedup();
        out
    }

    fn rays_of(c: &WeightedComplex) -> Vec<Ray> {
        ConeSystem::cover_cone(c).unwrap().extreme_rays().unwrap()
    }

    #[test]
    fn orthant_rays_are_unit_vectors() {
        let rays = ConeSystem::orthant(4).extreme_rays().unwrap();
        let mut want: Vec<Ray> = (0..4)
            .map(|i| {
                let mut v = vec![0; 4];
                v[i] = 1;
                Ray(v)
            })
            .collect();
        want.sort();
        assert_eq!(rays, want);
    }

    #[test]
    fn edge_and_triangle_rays() {
        let edge = WeightedComplex::validate(2, &[vec![1, 2]], None).unwrap();
        let got = rays_of(&edge);
        let mut want = vec![
            Ray(vec![1, 0, 0]),
            Ray(vec![0, 1, 0]),
            Ray(vec![1, 0, 1]),
            Ray(vec![0, 1, 1]),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(got, cross_section_oracle(&edge));

        let tri = WeightedComplex::skeleton(3, 1).unwrap();
        let got = rays_of(&tri);
        assert!(got.contains(&Ray(vec![1, 1, 1, 2])));
        assert!(got.contains(&Ray(vec![1, 1, 0, 1])));
        assert_eq!(got, cross_section_oracle(&tri));
    }

    #[test]
    fn rays_match_cross_section_oracle_on_random_complexes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(2..=4);
            let facets = crate::complex::tests_support::random_antichain(&mut rng, n);
            let weights: Vec<u64> = facets.iter().map(|_| rng.gen_range(1..=3)).collect();
            let one_based: Vec<Vec<usize>> =
                facets.iter().map(|f| f.iter().map(|v| v + 1).collect()).collect();
            let c = WeightedComplex::validate(n, &one_based, Some(&weights)).unwrap();
            assert_eq!(rays_of(&c), cross_section_oracle(&c), "{c}");
        }
    }

    #[test]
    fn degenerate_systems_are_rejected() {
        // x >= 0, -x >= 0 in the plane: a ray pair, not full-dimensional
        let c = ConeSystem::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap();
        assert_eq!(c.extreme_rays().unwrap_err(), Error::DegenerateCone);
        // a half-plane has a lineality space
        let c = ConeSystem::new(2, vec![vec![1, 0]]).unwrap();
        assert_eq!(c.extreme_rays().unwrap_err(), Error::DegenerateCone);
    }
}
