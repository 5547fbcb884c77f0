//! Scalar arithmetic modulo a small prime. Residues are kept in `[0, p)`.

#[inline]
pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        (a as u64 + p as u64 - b as u64) as u32
    }
}

#[inline]
pub fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow_mod(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue by Fermat's little theorem.
pub fn inv_mod(a: u32, p: u32) -> Option<u32> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p as u64 - 2, p))
    }
}

/// Deterministic trial division; moduli here never exceed 2^16.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_mod_small_primes() {
        for p in [2u32, 3, 5, 7, 65521] {
            for a in 1..p.min(200) {
                let inv = inv_mod(a, p).unwrap();
                assert_eq!(mul_mod(a, inv, p), 1);
            }
            assert_eq!(inv_mod(0, p), None);
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&m| is_prime(m)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(65521));
        assert!(!is_prime(65536));
    }

    #[test]
    fn sub_wraps() {
        assert_eq!(sub_mod(1, 2, 3), 2);
        assert_eq!(neg_mod(1, 3), 2);
        assert_eq!(add_mod(2, 2, 3), 1);
    }
}
