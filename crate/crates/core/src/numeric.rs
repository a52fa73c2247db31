//! Exact-arithmetic helpers shared across modules.  All combinatorial counts
//! in this crate are big integers; nothing here touches floating point.

use num_bigint::BigUint;
use num_traits::One;

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Number of r-regular multipermutations of length `n`: `n! / (r!)^(n/r)`.
pub fn multiperm_count(n: usize, r: usize) -> BigUint {
    let denom = factorial(r).pow((n / r) as u32);
    factorial(n) / denom
}

/// Floor of the integer square root.
pub fn isqrt(x: u64) -> u64 {
    if x == 0 {
        return 0;
    }
    let mut s = (x as f64).sqrt() as u64;
    while s.saturating_mul(s) > x {
        s -= 1;
    }
    while (s + 1).saturating_mul(s + 1) <= x {
        s += 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(12), BigUint::from(479_001_600u64));
    }

    #[test]
    fn space_sizes() {
        assert_eq!(multiperm_count(6, 2), BigUint::from(90u32));
        assert_eq!(multiperm_count(6, 3), BigUint::from(20u32));
        assert_eq!(multiperm_count(8, 4), BigUint::from(70u32));
        assert_eq!(multiperm_count(5, 1), BigUint::from(120u32));
        assert_eq!(multiperm_count(4, 4), BigUint::one());
    }

    #[test]
    fn integer_sqrt() {
        for x in 0..2000u64 {
            let s = isqrt(x);
            assert!(s * s <= x && (s + 1) * (s + 1) > x, "x={x} s={s}");
        }
        assert_eq!(isqrt(u64::MAX), (1u64 << 32) - 1);
    }
}
