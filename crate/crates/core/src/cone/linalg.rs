//! Exact integer linear algebra on small dense matrices.
//!
//! Everything here runs on `i128` with checked arithmetic first and is
//! repeated over `BigInt` when an intermediate value overflows.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

/// Integer types usable by the fraction-free routines. `None` from a
/// checked operation means overflow.
pub(crate) trait ExactInt:
    Clone + Zero + One + PartialEq + Signed + CheckedMul + CheckedSub + CheckedDiv
{
}

impl<T> ExactInt for T where
    T: Clone + Zero + One + PartialEq + Signed + CheckedMul + CheckedSub + CheckedDiv
{
}

/// Outcome of a fraction-free inversion.
pub(crate) enum Inversion<T> {
    Singular,
    /// `det` and `adj = det · M⁻¹`.
    Regular { det: T, adj: Vec<Vec<T>> },
}

/// Fraction-free Gauss–Jordan on `[M | I]`. Every division is exact; all
/// intermediate entries are minors of the augmented matrix. Returns `None`
/// on overflow.
pub(crate) fn scaled_inverse<T: ExactInt>(m: &[Vec<T>]) -> Option<Inversion<T>> {
    let d = m.len();
    let mut a: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..d).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let mut prev = T::one();
    let mut swaps_odd = false;
    for k in 0..d {
        let Some(p) = (k..d).find(|&i| !a[i][k].is_zero()) else {
            return Some(Inversion::Singular);
        };
        if p != k {
            a.swap(p, k);
            swaps_odd = !swaps_odd;
        }
        let pivot_row = a[k].clone();
        let pivot = pivot_row[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for j in 0..2 * d {
                if j == k {
                    continue;
                }
                let lhs = pivot.checked_mul(&row[j])?;
                let rhs = factor.checked_mul(&pivot_row[j])?;
                row[j] = lhs.checked_sub(&rhs)?.checked_div(&prev)?;
            }
            row[k] = T::zero();
        }
        prev = pivot;
    }
    // left block is prev·I and right block is prev·(PM)⁻¹·P = prev·M⁻¹
    let (det, flip) = if swaps_odd {
        (-prev, true)
    } else {
        (prev, false)
    };
    let adj = a
        .into_iter()
        .map(|row| {
            row.into_iter()
                .skip(d)
                .map(|x| if flip { -x } else { x })
                .collect()
        })
        .collect();
    Some(Inversion::Regular { det, adj })
}

/// Determinant and adjugate of an integer matrix, promoting to `BigInt`
/// when the `i128` pass overflows. `None` when singular.
pub(crate) fn det_adjugate(m: &[Vec<i64>]) -> Option<(BigInt, Vec<Vec<BigInt>>)> {
    let small: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match scaled_inverse(&small) {
        Some(Inversion::Singular) => None,
        Some(Inversion::Regular { det, adj }) => Some((
            BigInt::from(det),
            adj.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )),
        None => {
            let big: Vec<Vec<BigInt>> = m
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            det_adjugate_big(&big)
        }
    }
}

/// Same as [`det_adjugate`] for a `BigInt` matrix.
pub(crate) fn det_adjugate_big(m: &[Vec<BigInt>]) -> Option<(BigInt, Vec<Vec<BigInt>>)> {
    match scaled_inverse(m).expect("BigInt arithmetic cannot overflow") {
        Inversion::Singular => None,
        Inversion::Regular { det, adj } => Some((det, adj)),
    }
}

/// Rank of a list of integer vectors (fraction-free row echelon over `BigInt`).
pub(crate) fn rank<V: AsRef<[i64]>>(vectors: &[V]) -> usize {
    let mut rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| v.as_ref().iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    rank_big(&mut rows)
}

pub(crate) fn rank_big(rows: &mut [Vec<BigInt>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                row[j] = &pivot_row[c] * &row[j] - &f * &pivot_row[j];
            }
            normalize_big(row);
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Divides a vector by the gcd of its entries (no-op for the zero vector).
pub(crate) fn normalize_big(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Sign of `Σ a_i b_i`, computed in `i128` when possible.
pub(crate) fn dot_sign(fast: Option<&[i128]>, exact: &[BigInt], v: &[i64]) -> Ordering {
    if let Some(a) = fast {
        let mut acc: i128 = 0;
        let ok = a.iter().zip(v).try_for_each(|(x, &y)| {
            acc = acc.checked_add(i128::checked_mul(*x, y as i128)?)?;
            Some(())
        });
        if ok.is_some() {
            return acc.cmp(&0);
        }
    }
    let s: BigInt = exact.iter().zip(v).map(|(x, &y)| x * y).sum();
    s.sign_cmp()
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

pub(crate) fn to_i128_vec(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(ToPrimitive::to_i128).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        m.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Laplace expansion; independent of the elimination code.
    fn laplace(m: &[Vec<i64>]) -> i128 {
        if m.len() == 1 {
            return m[0][0] as i128;
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] as i128 * laplace(&minor)
            })
            .sum()
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn adjugate_identity_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let d = rng.gen_range(1..=5);
            let m: Vec<Vec<i64>> = (0..d)
                .map(|_| (0..d).map(|_| rng.gen_range(-4..=4)).collect())
                .collect();
            let oracle = laplace(&m);
            match det_adjugate(&m) {
                None => assert_eq!(oracle, 0),
                Some((det, adj)) => {
                    assert_eq!(det, BigInt::from(oracle));
                    for i in 0..d {
                        for j in 0..d {
                            let s: BigInt = (0..d).map(|t| &adj[i][t] * m[t][j]).sum();
                            let want = if i == j { det.clone() } else { BigInt::zero() };
                            assert_eq!(s, want);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn overflow_promotes_to_bigint() {
        let x = 1i64 << 62;
        let m = vec![vec![x, 1, 0], vec![1, x, 1], vec![0, 1, x]];
        let (det, _) = det_adjugate(&m).unwrap();
        let (det_big, _) = det_adjugate_big(&big(&m)).unwrap();
        assert_eq!(det, det_big);
        let xb = BigInt::from(x);
        assert_eq!(det, &xb * &xb * &xb - &xb - &xb);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[vec![1i64, 0], vec![0, 1]]), 2);
        assert_eq!(rank(&[vec![1i64, 2, 3], vec![2, 4, 6]]), 1);
        assert_eq!(rank(&[vec![0i64, 0]]), 0);
        assert_eq!(rank::<Vec<i64>>(&[]), 0);
    }
}
