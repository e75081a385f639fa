//! Prime-field specialization points.

use crate::laurent::{mul_mod, pow_mod};

/// Default modulus, the Mersenne prime `2^61 - 1`.
pub const DEFAULT_PRIME: u64 = (1 << 61) - 1;

/// Smallest accepted modulus.
pub const MIN_PRIME: u64 = 1 << 30;

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
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
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Why a candidate point was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointError {
    /// Modulus is not a prime above `2^30`.
    BadModulus,
    /// `q0` or `r0` is zero modulo `p`.
    NotInvertible,
    /// `q0^k = 1` for some small `k`.
    RootOfUnity(u32),
    /// `r0 = +-q0^k` for some small `|k|`.
    RCollision(i32),
}

/// A point `(q0, r0)` of the prime field at which the generic identities
/// of the rank-`n_max` algebra can be specialized.
///
/// Guards: `q0^k != 1` for `1 <= k <= 2 n_max + 2` and `r0 != +-q0^k` for
/// `|k| <= 2 n_max + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePoint {
    pub p: u64,
    pub q0: u64,
    pub r0: u64,
    pub n_max: u32,
}

impl PrimePoint {
    pub fn new(p: u64, q0: u64, r0: u64, n_max: u32) -> Result<Self, PointError> {
        if p < MIN_PRIME || !is_prime(p) {
            return Err(PointError::BadModulus);
        }
        let (q0, r0) = (q0 % p, r0 % p);
        if q0 == 0 || r0 == 0 {
            return Err(PointError::NotInvertible);
        }
        let bound = 2 * n_max + 2;
        let mut qk = 1u64;
        for k in 1..=bound {
            qk = mul_mod(qk, q0, p);
            if qk == 1 {
                return Err(PointError::RootOfUnity(k));
            }
        }
        let q_inv = inv_mod(q0, p);
        let mut up = 1u64;
        let mut down = 1u64;
        for k in 0..=bound as i32 {
            for (v, kk) in [(up, k), (down, -k)] {
                if r0 == v || r0 == p - v {
                    return Err(PointError::RCollision(kk));
                }
            }
            up = mul_mod(up, q0, p);
            down = mul_mod(down, q_inv, p);
        }
        Ok(PrimePoint { p, q0, r0, n_max })
    }

    pub fn q_inv(&self) -> u64 {
        inv_mod(self.q0, self.p)
    }

    pub fn r_inv(&self) -> u64 {
        inv_mod(self.r0, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(DEFAULT_PRIME));
        assert!(is_prime((1 << 31) - 1));
        assert!(!is_prime(DEFAULT_PRIME - 2));
        assert!(!is_prime(561));
    }

    #[test]
    fn guards_reject_degenerate_points() {
        let p = DEFAULT_PRIME;
        assert_eq!(PrimePoint::new(p, 1, 5, 3), Err(PointError::RootOfUnity(1)));
        assert_eq!(PrimePoint::new(p, p - 1, 5, 3), Err(PointError::RootOfUnity(2)));
        assert_eq!(PrimePoint::new(p, 7, 49, 3), Err(PointError::RCollision(2)));
        assert_eq!(PrimePoint::new(p, 7, p - 1, 3), Err(PointError::RCollision(0)));
        assert_eq!(PrimePoint::new(1000003, 7, 11, 3), Err(PointError::BadModulus));
        assert!(PrimePoint::new(p, 7, 11, 3).is_ok());
    }
}
