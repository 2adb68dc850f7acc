//! The reciprocity check: the exponent vector of a Frobenius on the
//! Kummer side `Q(zeta_n, l_1^{1/n}, ..., l_s^{1/n})` agrees with the
//! power-residue index vector on the cyclotomic side `K_n(p)` up to a
//! single unit scaling mod n.  Choosing a different prime above `p` (a
//! different reference root of unity) changes the unit, never the truth.

use crate::arith::{
    self, is_prime, pow_mod, small_dlog, unit_scale_solve, ResidueVector,
};
use crate::{Error, Result};

/// One instance of the reciprocity statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityInstance {
    n: u64,
    p: u64,
    ls: Vec<u64>,
    zeta: u64,
}

impl ReciprocityInstance {
    /// Builds an instance with the canonical reference root
    /// `zeta = g^((p-1)/n)` for the smallest primitive root `g`.
    pub fn new(n: u64, p: u64, ls: Vec<u64>) -> Result<Self> {
        let g = arith::primitive_root(p)?;
        let zeta = pow_mod(g, (p - 1) / n.max(1), p);
        Self::with_reference_root(n, p, ls, zeta)
    }

    /// Builds an instance with an explicit reference root of unity, which
    /// selects the prime above `p` on the Kummer side.  The root must
    /// have exact order `n` mod `p`.
    pub fn with_reference_root(n: u64, p: u64, ls: Vec<u64>, zeta: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("level n must be positive"));
        }
        if !is_prime(p) || (p - 1) % n != 0 {
            return Err(Error::invalid(format!("p = {p} is not a prime 1 mod {n}")));
        }
        for (idx, &l) in ls.iter().enumerate() {
            if !is_prime(l) {
                return Err(Error::invalid(format!("{l} is not prime")));
            }
            if l == p {
                return Err(Error::invalid("the l_i must differ from p"));
            }
            if arith::gcd(l, n) != 1 {
                return Err(Error::invalid(format!("{l} is not coprime to n = {n}")));
            }
            if ls[..idx].contains(&l) {
                return Err(Error::invalid(format!("repeated prime {l}")));
            }
        }
        // exact order n
        let zeta = zeta % p;
        if zeta == 0 || pow_mod(zeta, n, p) != 1 {
            return Err(Error::invalid("reference root does not have order dividing n"));
        }
        for (q, _) in arith::factor(n) {
            if pow_mod(zeta, n / q, p) == 1 {
                return Err(Error::invalid("reference root has order smaller than n"));
            }
        }
        Ok(ReciprocityInstance { n, p, ls, zeta })
    }

    pub fn level(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn primes(&self) -> &[u64] {
        &self.ls
    }

    pub fn reference_root(&self) -> u64 {
        self.zeta
    }

    /// Kummer-side exponents: `a_i` with
    /// `l_i^((p-1)/n) = zeta^{a_i} mod p` — the action of the Frobenius
    /// at the selected prime on the Kummer generators.
    pub fn kummer_exponents(&self) -> Result<Vec<u64>> {
        self.ls
            .iter()
            .map(|&l| {
                let val = pow_mod(l % self.p, (self.p - 1) / self.n, self.p);
                small_dlog(self.zeta, val, self.n, self.p).ok_or_else(|| {
                    Error::invalid("Kummer value outside the span of the reference root")
                })
            })
            .collect()
    }

    /// Cyclotomic-side indices: `b_i` = power-residue index of `l_i`
    /// modulo `p` at level `n` (smallest-primitive-root convention).
    pub fn cyclotomic_indices(&self) -> Result<Vec<u64>> {
        self.ls
            .iter()
            .map(|&l| arith::power_residue_index(l, self.p, self.n))
            .collect()
    }
}

/// True exactly when a single unit mod `n` carries the Kummer-side
/// exponent vector onto the cyclotomic-side index vector.
pub fn reciprocity_check(inst: &ReciprocityInstance) -> Result<bool> {
    let a = inst.kummer_exponents()?;
    let b = inst.cyclotomic_indices()?;
    let n = inst.level();
    let to_vec = |v: &[u64]| {
        ResidueVector::new(n, &v.iter().map(|&x| x as i64).collect::<Vec<_>>())
    };
    Ok(unit_scale_solve(&to_vec(&a)?, &to_vec(&b)?).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn quadratic_case_is_quadratic_reciprocity() {
        // at n = 2 the exponent a_1 records whether l is a square mod p
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let p = loop {
                let c = rng.gen_range(3u64..5_000);
                if is_prime(c) {
                    break c;
                }
            };
            let l = loop {
                let c = rng.gen_range(3u64..5_000);
                if is_prime(c) && c != p {
                    break c;
                }
            };
            let inst = ReciprocityInstance::new(2, p, vec![l]).unwrap();
            assert!(reciprocity_check(&inst).unwrap());
            let a = inst.kummer_exponents().unwrap();
            let expected = if arith::legendre(l as i64, p) == 1 { 0 } else { 1 };
            assert_eq!(a[0], expected, "p={p} l={l}");
        }
    }

    #[test]
    fn cubic_example() {
        let inst = ReciprocityInstance::new(3, 7, vec![2]).unwrap();
        assert!(reciprocity_check(&inst).unwrap());
        // 2 is not a cube mod 7 (cubes are {1, 6}), so the index is nonzero
        let b = inst.cyclotomic_indices().unwrap();
        assert_ne!(b[0], 0);
    }

    #[test]
    fn empty_instance_is_vacuous() {
        let inst = ReciprocityInstance::new(3, 7, vec![]).unwrap();
        assert!(reciprocity_check(&inst).unwrap());
    }

    #[test]
    fn holds_for_every_reference_root() {
        // changing the reference root models changing the prime above p;
        // the unit absorbs it and the check still passes
        let mut rng = StdRng::seed_from_u64(17);
        let levels = [3u64, 5, 9, 15];
        for _ in 0..100 {
            let n = levels[rng.gen_range(0..levels.len())];
            let p = loop {
                let c = rng.gen_range(3u64..10_000);
                if is_prime(c) && (c - 1) % n == 0 {
                    break c;
                }
            };
            let s = rng.gen_range(1..=3usize);
            let mut ls = Vec::new();
            while ls.len() < s {
                let c = rng.gen_range(2u64..10_000);
                if is_prime(c) && c != p && arith::gcd(c, n) == 1 && !ls.contains(&c) {
                    ls.push(c);
                }
            }
            // random unit power of the canonical root
            let base = ReciprocityInstance::new(n, p, ls.clone()).unwrap();
            let v = loop {
                let c = rng.gen_range(1..n);
                if arith::gcd(c, n) == 1 {
                    break c;
                }
            };
            let zeta = pow_mod(base.reference_root(), v, p);
            let inst = ReciprocityInstance::with_reference_root(n, p, ls, zeta).unwrap();
            assert!(reciprocity_check(&inst).unwrap(), "n={n} p={p}");
        }
    }

    #[test]
    fn instance_validation() {
        assert!(ReciprocityInstance::new(3, 7, vec![7]).is_err()); // l = p
        assert!(ReciprocityInstance::new(3, 7, vec![3]).is_err()); // gcd(l, n) > 1
        assert!(ReciprocityInstance::new(3, 7, vec![2, 2]).is_err()); // repeat
        assert!(ReciprocityInstance::new(4, 7, vec![3]).is_err()); // 7 != 1 mod 4
    }
}
