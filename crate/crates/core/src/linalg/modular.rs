//! Multi-modular determinant: residues modulo word-size primes, Chinese
//! remaindering, and a Hadamard-bound certificate. Opt-in per call and
//! never wrong: if the prime supply runs out the caller falls back to
//! exact Bareiss elimination.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{to_integer_rows, LinalgError, QMatrix};
use crate::arith::Rat;

/// Deterministic Miller-Rabin for u64 (the listed witness set is exact for
/// all 64-bit inputs).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Primes descending from 2^62; enough of them covers any determinant the
/// Hadamard bound admits at our sizes.
fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = (1u64 << 62) - 1;
    while out.len() < count {
        if is_prime_u64(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

fn det_mod_p(m: &[Vec<BigInt>], p: u64) -> u64 {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let r = x.mod_floor_u64(p);
                    r
                })
                .collect()
        })
        .collect();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(col, piv);
            det = p - det % p;
            if det == p {
                det = 0;
            }
        }
        let pivot = a[col][col];
        det = mul_mod(det, pivot, p);
        let inv = pow_mod(pivot, p - 2, p);
        for r in col + 1..n {
            if a[r][col] == 0 {
                continue;
            }
            let f = mul_mod(a[r][col], inv, p);
            for c in col..n {
                let sub = mul_mod(f, a[col][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
    }
    det % p
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = self % BigInt::from(p);
        let m = if m.sign() == Sign::Minus {
            m + BigInt::from(p)
        } else {
            m
        };
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

/// Hadamard bound |det| <= prod_i ||row_i||_2, padded one bit.
fn hadamard_bound(m: &[Vec<BigInt>]) -> BigInt {
    let mut sq = BigInt::one();
    for row in m {
        let s: BigInt = row.iter().map(|x| x * x).sum();
        sq *= if s.is_zero() { BigInt::one() } else { s };
    }
    sq.sqrt() + 1
}

/// Identical contract to [`QMatrix::det`], computed via CRT residues.
pub fn det_multimodular(m: &QMatrix) -> Result<Rat, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() == 0 {
        return Ok(Rat::one());
    }
    let (int_rows, scales) = to_integer_rows(m);
    let bound = hadamard_bound(&int_rows);
    // need prod(primes) > 2*bound + 1
    let needed = {
        let target = &bound * 2 + 2;
        let mut count = 1usize;
        let mut acc = BigInt::from(1u64 << 62);
        while acc < target {
            acc *= BigInt::from(1u64 << 61);
            count += 1;
        }
        count
    };
    if needed > 512 {
        // prime budget exhausted; take the exact path instead
        return m.det();
    }
    let ps = primes(needed);
    let residues: Vec<u64> = ps.par_iter().map(|&p| det_mod_p(&int_rows, p)).collect();
    // incremental CRT
    let mut value = BigInt::from(residues[0]);
    let mut modulus = BigInt::from(ps[0]);
    for (&p, &r) in ps.iter().zip(&residues).skip(1) {
        let p_big = BigInt::from(p);
        // solve value + modulus * t = r (mod p)
        let m_mod_p = modulus.mod_floor_u64(p);
        let v_mod_p = value.mod_floor_u64(p);
        let inv = pow_mod(m_mod_p, p - 2, p);
        let diff = (r + p - v_mod_p) % p;
        let t = mul_mod(diff, inv, p);
        value += &modulus * BigInt::from(t);
        modulus *= p_big;
    }
    // symmetric representative
    if &value * 2 > modulus {
        value -= &modulus;
    }
    let mut denom = BigInt::one();
    for s in scales {
        denom *= s;
    }
    Ok(Rat::new(value, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn small_cases() {
        let d = QMatrix::from_rows(vec![
            vec![rat_int(2), rat_int(0)],
            vec![rat_int(0), rat_int(3)],
        ]);
        assert_eq!(det_multimodular(&d).unwrap(), rat_int(6));
        let s = QMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ]);
        assert_eq!(det_multimodular(&s).unwrap(), rat_int(0));
    }

    #[test]
    fn rational_entries() {
        let a = QMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 5), rat(7, 2)],
        ]);
        assert_eq!(det_multimodular(&a).unwrap(), a.det().unwrap());
    }

    #[test]
    fn agrees_with_bareiss_on_200_random_8x8() {
        let mut rng = StdRng::seed_from_u64(20240811);
        for _ in 0..200 {
            let a = QMatrix::from_fn(8, 8, |_, _| rat_int(rng.gen_range(-50..=50)));
            assert_eq!(det_multimodular(&a).unwrap(), a.det().unwrap());
        }
    }

    #[test]
    fn prime_generation() {
        let ps = primes(4);
        assert_eq!(ps.len(), 4);
        for p in ps {
            assert!(is_prime_u64(p));
            assert!(p < 1 << 62);
        }
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64((1 << 62) - 1)); // 4611686018427387903 = 3 * ...
    }
}
