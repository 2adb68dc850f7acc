//! Exact modular arithmetic on `u64` values with `u128` intermediates.
//!
//! Everything here is deterministic: primality uses a fixed witness set
//! that is exact below 2^64, `primitive_root` returns the smallest
//! generator, and `unit_scale_solve` returns the smallest solving unit, so
//! all downstream searches are reproducible.

use crate::{Error, Result};

/// Multiplication mod `m` without overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Binary exponentiation: `base^exp mod m`.
pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    base %= m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Modular inverse, `None` when `gcd(a, m) != 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Reduce a signed integer into `[0, m)`.
#[inline]
pub fn reduce(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

/// Deterministic Miller-Rabin, exact for all `n < 2^64`.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to
/// be sound over the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
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

/// Prime factorization by trial division; adequate for the desk-scale
/// inputs this crate searches (p - 1 for p below ~10^9).
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d as u128 * d as u128 <= n as u128 {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Simple sieve of all primes `<= bound`.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

/// Smallest generator of `(Z/pZ)^*`.
///
/// For `p = 2` the unit group is trivial and the answer is 1.
pub fn primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if p == 2 {
        return Ok(1);
    }
    let phi = p - 1;
    let prime_divisors: Vec<u64> = factor(phi).into_iter().map(|(q, _)| q).collect();
    for g in 2..p {
        if prime_divisors.iter().all(|&q| pow_mod(g, phi / q, p) != 1) {
            return Ok(g);
        }
    }
    unreachable!("every prime has a primitive root")
}

/// Baby-step giant-step discrete logarithm: the unique `b` in `[0, p-1)`
/// with `g^b = a mod p`.  Time and memory are O(sqrt p).
pub fn discrete_log(g: u64, a: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let a = a % p;
    if a == 0 {
        return Err(Error::invalid("discrete log of 0 is undefined"));
    }
    let order = p - 1;
    let m = (order as f64).sqrt().ceil() as u64 + 1;
    let mut baby = std::collections::HashMap::with_capacity(m as usize);
    let mut cur = 1u64;
    for j in 0..m {
        baby.entry(cur).or_insert(j);
        cur = mul_mod(cur, g, p);
    }
    // giant stride g^{-m}
    let gm_inv = inv_mod(pow_mod(g, m, p), p)
        .ok_or_else(|| Error::invalid("generator not a unit"))?;
    let mut gamma = a;
    for i in 0..=m {
        if let Some(&j) = baby.get(&gamma) {
            let b = (i * m + j) % order;
            // g may not generate: caller promised a primitive root, verify cheaply
            if pow_mod(g, b, p) == a {
                return Ok(b);
            }
        }
        gamma = mul_mod(gamma, gm_inv, p);
    }
    Err(Error::invalid(format!("{a} is not a power of {g} mod {p}")))
}

/// Legendre symbol `(a/p)` for an odd prime `p`, via the Jacobi chain.
pub fn legendre(a: i64, p: u64) -> i32 {
    debug_assert!(p > 2 && is_prime(p), "legendre needs an odd prime");
    let a = reduce(a, p);
    jacobi(a, p)
}

/// Jacobi symbol `(a/n)` for odd `n >= 1` and `a >= 0`.
pub fn jacobi(mut a: u64, mut n: u64) -> i32 {
    debug_assert!(n % 2 == 1 && n >= 1);
    a %= n;
    let mut sign = 1i32;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// The power-residue index of `l` modulo `p` at level `n`: the class
/// `b mod n` where `l = g^b mod p` and `g` is the smallest primitive root.
/// Class 0 exactly when `l` is an n-th power mod `p`.
pub fn power_residue_index(l: u64, p: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::invalid("modulus n must be positive"));
    }
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if (p - 1) % n != 0 {
        return Err(Error::invalid(format!("p = {p} is not 1 mod n = {n}")));
    }
    let l = l % p;
    if l == 0 {
        return Err(Error::invalid("l must be coprime to p"));
    }
    if n == 1 {
        return Ok(0);
    }
    let g = primitive_root(p)?;
    // Index only matters mod n, so match l^((p-1)/n) among the powers of
    // the order-n root zeta = g^((p-1)/n); this avoids a full discrete log.
    let zeta = pow_mod(g, (p - 1) / n, p);
    let target = pow_mod(l, (p - 1) / n, p);
    small_dlog(zeta, target, n, p)
        .ok_or_else(|| Error::invalid("interrupted power-residue scan"))
}

/// Discrete log in the cyclic group generated by `zeta` of known order `n`,
/// by direct scan (n stays desk-scale here).
pub(crate) fn small_dlog(zeta: u64, target: u64, n: u64, p: u64) -> Option<u64> {
    let mut cur = 1u64;
    for k in 0..n {
        if cur == target {
            return Some(k);
        }
        cur = mul_mod(cur, zeta, p);
    }
    None
}

/// `p` when `p = 1 mod 4`, otherwise `-p`: the signed prime whose square
/// root lies in the p-th cyclotomic field.
pub fn star_value(p: u64) -> i64 {
    debug_assert!(p % 2 == 1 && is_prime(p));
    if p % 4 == 1 {
        p as i64
    } else {
        -(p as i64)
    }
}

/// A vector of residues, stored reduced modulo a common modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueVector {
    modulus: u64,
    entries: Vec<u64>,
}

impl ResidueVector {
    /// Builds a vector, reducing every entry (negative entries allowed).
    pub fn new(modulus: u64, entries: &[i64]) -> Result<Self> {
        if modulus < 1 {
            return Err(Error::invalid("modulus must be >= 1"));
        }
        Ok(ResidueVector {
            modulus,
            entries: entries.iter().map(|&e| reduce(e, modulus)).collect(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Smallest unit `u mod n` with `u * a_i = b_i mod n` for all `i`, or
/// `None` when no unit works.
///
/// Panics if the two vectors disagree in length or modulus; that is a
/// caller bug, not a data condition.
pub fn unit_scale_solve(a: &ResidueVector, b: &ResidueVector) -> Option<u64> {
    assert_eq!(a.modulus, b.modulus, "unit_scale_solve: moduli differ");
    assert_eq!(a.len(), b.len(), "unit_scale_solve: lengths differ");
    let n = a.modulus;
    (1..=n)
        .filter(|&u| gcd(u, n) == 1)
        .find(|&u| {
            a.entries
                .iter()
                .zip(&b.entries)
                .all(|(&ai, &bi)| mul_mod(u, ai, n) == bi)
        })
}

/// Slice convenience for [`unit_scale_solve`].
pub fn unit_scale_solve_slices(a: &[u64], b: &[u64], n: u64) -> Option<u64> {
    let av = ResidueVector::new(n, &a.iter().map(|&x| x as i64).collect::<Vec<_>>()).ok()?;
    let bv = ResidueVector::new(n, &b.iter().map(|&x| x as i64).collect::<Vec<_>>()).ok()?;
    unit_scale_solve(&av, &bv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn is_prime_basics() {
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        // 6971 appears as a ramified prime in the corpus; cross-check by
        // trial division.
        assert!(is_prime(6971));
        let trial = |n: u64| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0) && n >= 2;
        assert_eq!(is_prime(6971), trial(6971));
        for n in 0..2000u64 {
            assert_eq!(is_prime(n), trial(n), "mismatch at {n}");
        }
        // strong pseudoprime stress values around 2^32 and known Carmichaels
        assert!(!is_prime(3215031751)); // spsp to 2,3,5,7
        assert!(!is_prime(561));
        assert!(is_prime(4294967311));
    }

    #[test]
    fn primitive_root_smallest() {
        assert_eq!(primitive_root(7).unwrap(), 3);
        assert_eq!(primitive_root(13).unwrap(), 2);
        assert_eq!(primitive_root(3).unwrap(), 2);
        assert!(primitive_root(8).is_err());
        // brute-force oracle: order of the returned g is exactly p-1, and
        // nothing smaller generates
        for &p in &[5u64, 11, 17, 19, 23, 29, 101, 257] {
            let g = primitive_root(p).unwrap();
            let order = |x: u64| (1..=p - 1).find(|&k| pow_mod(x, k, p) == 1).unwrap();
            assert_eq!(order(g), p - 1);
            for smaller in 2..g {
                assert!(order(smaller) < p - 1);
            }
        }
    }

    #[test]
    fn primitive_root_order_randomized() {
        let mut rng = StdRng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 40 {
            let p = rng.gen_range(3u64..1_000_000);
            if !is_prime(p) {
                continue;
            }
            checked += 1;
            let g = primitive_root(p).unwrap();
            for (q, _) in factor(p - 1) {
                assert_ne!(pow_mod(g, (p - 1) / q, p), 1, "g not primitive mod {p}");
            }
        }
    }

    #[test]
    fn discrete_log_examples() {
        assert_eq!(discrete_log(2, 3, 13).unwrap(), 4); // 2^4 = 16 = 3
        assert_eq!(discrete_log(2, 1, 13).unwrap(), 0);
        assert_eq!(discrete_log(3, 3, 7).unwrap(), 1);
        assert!(discrete_log(2, 0, 13).is_err());
    }

    #[test]
    fn discrete_log_round_trip() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let p = loop {
                let c = rng.gen_range(3u64..5_000_000);
                if is_prime(c) {
                    break c;
                }
            };
            let g = primitive_root(p).unwrap();
            let a = rng.gen_range(1..p);
            let b = discrete_log(g, a, p).unwrap();
            assert_eq!(pow_mod(g, b, p), a);
            assert!(b < p - 1);
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(3, 5), -1);
        assert_eq!(legendre(7, 3), 1);
        assert_eq!(legendre(26, 13), 0);
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(-1, 7), -1);
    }

    #[test]
    fn legendre_euler_criterion_and_multiplicativity() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..1000 {
            let p = loop {
                let c = rng.gen_range(3u64..100_000);
                if is_prime(c) {
                    break c;
                }
            };
            let a = rng.gen_range(0..p) as i64;
            let euler = pow_mod(reduce(a, p), (p - 1) / 2, p);
            let sym = legendre(a, p);
            let euler_signed = if euler == p - 1 { -1 } else { euler as i64 };
            assert_eq!(sym as i64, euler_signed, "euler mismatch a={a} p={p}");

            let b = rng.gen_range(0..p) as i64;
            assert_eq!(
                legendre(a * b % p as i64, p),
                legendre(a, p) * legendre(b, p)
            );
        }
    }

    #[test]
    fn legendre_quadratic_reciprocity() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..300 {
            let mut draw = || loop {
                let c = rng.gen_range(3u64..50_000);
                if is_prime(c) {
                    break c;
                }
            };
            let p = draw();
            let q = draw();
            if p == q {
                continue;
            }
            let lhs = legendre(p as i64, q) * legendre(q as i64, p);
            let rhs = if p % 4 == 3 && q % 4 == 3 { -1 } else { 1 };
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn power_residue_index_examples() {
        assert_eq!(power_residue_index(3, 13, 4).unwrap(), 0); // 3 = 2^4 mod 13
        assert_eq!(power_residue_index(2, 13, 4).unwrap(), 1);
        assert_eq!(power_residue_index(5, 13, 4).unwrap(), 1); // 5 = 2^9, 9 mod 4 = 1
        assert!(power_residue_index(3, 7, 4).is_err()); // 7 != 1 mod 4
    }

    #[test]
    fn power_residue_matches_full_dlog() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..60 {
            let n = [2u64, 3, 4, 5, 6][rng.gen_range(0..5)];
            let p = loop {
                let c = rng.gen_range(3u64..50_000);
                if is_prime(c) && (c - 1) % n == 0 {
                    break c;
                }
            };
            let l = rng.gen_range(1..p);
            let g = primitive_root(p).unwrap();
            let full = discrete_log(g, l, p).unwrap() % n;
            assert_eq!(power_residue_index(l, p, n).unwrap(), full);
        }
    }

    #[test]
    fn star_values() {
        assert_eq!(star_value(5), 5);
        assert_eq!(star_value(3), -3);
        assert_eq!(star_value(13), 13);
    }

    #[test]
    fn unit_scale_examples() {
        let rv = |n: u64, e: &[i64]| ResidueVector::new(n, e).unwrap();
        assert_eq!(unit_scale_solve(&rv(5, &[1, 2]), &rv(5, &[2, 4])), Some(2));
        assert_eq!(unit_scale_solve(&rv(3, &[1, 0]), &rv(3, &[0, 1])), None);
        // exhaustive oracle over units mod 9 confirms 5 is the least
        assert_eq!(unit_scale_solve(&rv(9, &[2, 4]), &rv(9, &[1, 2])), Some(5));
        for u in 1..5u64 {
            if gcd(u, 9) != 1 {
                continue;
            }
            assert!(!(u * 2 % 9 == 1 && u * 4 % 9 == 2));
        }
    }

    #[test]
    fn unit_scale_identity_and_inverse_symmetry() {
        let mut rng = StdRng::seed_from_u64(53);
        for _ in 0..200 {
            let n = rng.gen_range(2u64..40);
            let len = rng.gen_range(0..4usize);
            let a: Vec<i64> = (0..len).map(|_| rng.gen_range(0..n as i64)).collect();
            let av = ResidueVector::new(n, &a).unwrap();
            assert_eq!(unit_scale_solve(&av, &av), Some(1));

            let b: Vec<i64> = (0..len).map(|_| rng.gen_range(0..n as i64)).collect();
            let bv = ResidueVector::new(n, &b).unwrap();
            if let Some(u) = unit_scale_solve(&av, &bv) {
                let back = unit_scale_solve(&bv, &av).expect("inverse direction must solve");
                assert_eq!(mul_mod(u, back, n) % n, 1 % n);
            }
        }
    }

    #[test]
    fn residue_vector_reduces_on_entry() {
        let v = ResidueVector::new(7, &[-1, 15, 7]).unwrap();
        assert_eq!(v.entries(), &[6, 1, 0]);
    }
}
