//! Exact null-space computation over the rationals.
//!
//! Matrices are cleared to integers and reduced by fraction-free (Bareiss)
//! Gaussian elimination; kernel vectors are returned primitive (integer
//! entries with gcd 1, first nonzero entry positive). Dimensions here are
//! tiny (at most 70), so exactness is the only concern.

use crate::rational::Rational;
use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, Zero};

/// Clears denominators row-wise, returning an integer matrix with the same
/// kernel.
fn clear_denominators(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for x in row {
                lcm = lcm.lcm(x.denom());
            }
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect()
}

/// Result of the echelon reduction: the reduced rows plus, per pivot, its
/// (row, column) position.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<(usize, usize)>,
}

/// Fraction-free Gaussian elimination (single-step Bareiss).
fn echelon(mut m: Vec<Vec<BigInt>>) -> Echelon {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pr) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss exact division failed");
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        pivots.push((rank, col));
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Echelon { rows: m, pivots }
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    echelon(clear_denominators(rows)).pivots.len()
}

/// Kernel of the matrix `rows` (acting on column vectors), as primitive
/// integer-valued rational vectors. One vector per free column, each with a
/// 1 (up to overall scaling) in its free slot.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let ech = echelon(clear_denominators(rows));
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut x = vec![Rational::zero(); ncols];
        x[free] = Rational::one();
        // Back-substitute pivot variables from the bottom up.
        for &(pr, pc) in ech.pivots.iter().rev() {
            let mut acc = Rational::zero();
            for c in pc + 1..ncols {
                if !ech.rows[pr][c].is_zero() && !x[c].is_zero() {
                    acc += Rational::from_integer(ech.rows[pr][c].clone()) * &x[c];
                }
            }
            x[pc] = -acc / Rational::from_integer(ech.rows[pr][pc].clone());
        }
        primitive_normalize(&mut x);
        basis.push(x);
    }
    basis
}

/// Scales a rational vector to integer entries with gcd 1 and a positive
/// first nonzero entry.
pub fn primitive_normalize(v: &mut [Rational]) {
    let mut lcm = BigInt::one();
    for x in v.iter() {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    if g.is_zero() {
        return;
    }
    if let Some(first) = ints.iter().find(|n| !n.is_zero()) {
        if first.is_negative() {
            g = -g;
        }
    }
    for n in &mut ints {
        *n /= &g;
    }
    for (slot, n) in v.iter_mut().zip(ints) {
        *slot = Rational::from_integer(n);
    }
}

/// Exact dot product.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // Rows sum to zero vector combos: kernel of [[1,1,1],[1,1,1]] is 2-dim.
        let rows = m(&[&[1, 1, 1], &[1, 1, 1]]);
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dot(&rows[0], v).is_zero());
        }
    }

    #[test]
    fn kernel_of_full_rank_matrix_is_empty() {
        let rows = m(&[&[2, 0], &[1, 3]]);
        assert!(kernel(&rows, 2).is_empty());
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn kernel_handles_rationals() {
        // x + y/2 = 0 -> kernel spanned by (1, -2)
        let rows = vec![vec![int(1), ratio(1, 2)]];
        let k = kernel(&rows, 2);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![int(1), int(-2)]);
    }

    #[test]
    fn l2_block_eigen_kernels() {
        // The 2x2 block ((4,-2),(-2,4)) has eigenvalues 2 and 6.
        let a = m(&[&[4 - 2, -2], &[-2, 4 - 2]]);
        assert_eq!(kernel(&a, 2).len(), 1);
        let b = m(&[&[4 - 6, -2], &[-2, 4 - 6]]);
        assert_eq!(kernel(&b, 2).len(), 1);
        let c = m(&[&[4 - 3, -2], &[-2, 4 - 3]]);
        assert!(kernel(&c, 2).is_empty());
    }
}
