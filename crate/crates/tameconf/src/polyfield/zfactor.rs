//! Irreducibility over the rationals for monic integer polynomials, by
//! factoring modulo a good prime, Hensel lifting, and bounded-subset
//! recombination.  The mod-p shortcut alone cannot certify polynomials
//! whose Galois group has no full-length cycle (every Galois octic in the
//! bundled tables factors modulo every prime), so the lift is the
//! workhorse here.

use super::modp::{
    factor_mod_p, fp_deg, fp_from_int, fp_mul, fp_one, fp_to_int, fp_xgcd,
    FpPoly,
};
use super::poly::{coeff_bound, IntPoly};
use crate::arith;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Reduce coefficients of `f` into the symmetric range `(-m/2, m/2]`.
fn center_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let mut r = c % m;
                if r.is_negative() {
                    r += m;
                }
                if r > half {
                    r -= m;
                }
                r
            })
            .collect(),
    )
}

fn poly_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let mut r = c % m;
                if r.is_negative() {
                    r += m;
                }
                r
            })
            .collect(),
    )
}

/// One linear Hensel step: given monic `f = g*h mod m` with Bezout data
/// `u*g + v*h = 1 mod p` (p | m), returns `(g', h')` monic with
/// `f = g'*h' mod (m*p)` and `g' = g mod m`.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    u: &IntPoly,
    v: &IntPoly,
    m: &BigInt,
    p: u64,
) -> (IntPoly, IntPoly) {
    let pm = BigInt::from(p);
    let next = m * &pm;
    // e = (f - g h)/m, a polynomial mod p
    let diff = f.sub(&g.mul(h));
    let e = IntPoly::new(diff.coeffs().iter().map(|c| c / m).collect());
    let e_mod = poly_mod(&e, &pm);
    // corrections: dg = v e mod g, dh = u e mod h (all mod p)
    let fp_e = fp_from_int(&e_mod, p);
    let fp_g = fp_from_int(&poly_mod(g, &pm), p);
    let fp_h = fp_from_int(&poly_mod(h, &pm), p);
    let fp_u = fp_from_int(&poly_mod(u, &pm), p);
    let fp_v = fp_from_int(&poly_mod(v, &pm), p);
    let dg = super::modp::fp_rem(&fp_mul(&fp_v, &fp_e, p), &fp_g, p);
    let dh = super::modp::fp_rem(&fp_mul(&fp_u, &fp_e, p), &fp_h, p);
    let g_next = poly_mod(&g.add(&fp_to_int(&dg).scale(m)), &next);
    let h_next = poly_mod(&h.add(&fp_to_int(&dh).scale(m)), &next);
    (g_next, h_next)
}

/// Lifts the (squarefree) factorization of monic `f` modulo `p` to a
/// factorization modulo `p^k >= target`.  Returns the modulus reached
/// and the lifted monic factors.
fn hensel_lift_factors(
    f: &IntPoly,
    factors_mod_p: &[FpPoly],
    p: u64,
    target: &BigInt,
) -> (BigInt, Vec<IntPoly>) {
    if factors_mod_p.len() == 1 {
        let mut m = BigInt::from(p);
        while &m < target {
            m *= p;
        }
        let lifted = poly_mod(f, &m);
        return (m, vec![lifted]);
    }
    // split the factor list in two halves and recurse
    let half = factors_mod_p.len() / 2;
    let g0: FpPoly = factors_mod_p[..half]
        .iter()
        .fold(fp_one(), |acc, x| fp_mul(&acc, x, p));
    let h0: FpPoly = factors_mod_p[half..]
        .iter()
        .fold(fp_one(), |acc, x| fp_mul(&acc, x, p));
    let (gcd, u, v) = fp_xgcd(&g0, &h0, p);
    debug_assert_eq!(fp_deg(&gcd), 0, "squarefree split must be coprime");
    let mut m = BigInt::from(p);
    let mut g = fp_to_int(&g0);
    let mut h = fp_to_int(&h0);
    let (ui, vi) = (fp_to_int(&u), fp_to_int(&v));
    while &m < target {
        let (g2, h2) = hensel_step(&poly_mod(f, &(&m * p)), &g, &h, &ui, &vi, &m, p);
        g = g2;
        h = h2;
        m *= p;
    }
    let (_, mut left) = hensel_lift_factors(&g, &factors_mod_p[..half], p, target);
    let (_, mut right) = hensel_lift_factors(&h, &factors_mod_p[half..], p, target);
    left.append(&mut right);
    (m, left)
}

/// Decides irreducibility of a monic polynomial over the rationals.
pub fn is_irreducible(f: &IntPoly) -> Result<bool> {
    if f.is_zero() || f.degree() == 0 {
        return Err(Error::invalid("irreducibility needs degree >= 1"));
    }
    if !f.is_monic() {
        return Err(Error::invalid("irreducibility check expects a monic polynomial"));
    }
    if f.degree() == 1 {
        return Ok(true);
    }
    if f.coeff(0).is_zero() {
        return Ok(false); // x divides
    }
    let disc = f.discriminant()?;
    if disc.is_zero() {
        return Ok(false); // repeated factor over Q
    }
    // good prime: squarefree reduction
    let p = (2u64..)
        .filter(|&p| arith::is_prime(p))
        .find(|&p| (&disc % BigInt::from(p)) != BigInt::zero())
        .expect("some small prime misses the discriminant");
    let factors = factor_mod_p(f, p)?;
    debug_assert!(factors.iter().all(|&(_, m)| m == 1));
    if factors.len() == 1 {
        return Ok(true);
    }
    // lift to p^k beyond twice the factor coefficient bound:
    // any monic divisor of f has |coeff| <= 2^deg * max|f coeff| * (deg+1)
    let bound: BigInt =
        (BigInt::one() << f.degree()) * coeff_bound(f) * BigInt::from(f.degree() as u64 + 1);
    let target = &bound * 2 + 1;
    let fp_factors: Vec<FpPoly> = factors
        .iter()
        .map(|(g, _)| fp_from_int(g, p))
        .collect();
    let (modulus, lifted) = hensel_lift_factors(f, &fp_factors, p, &target);
    debug_assert!(lifted
        .iter()
        .all(|g| g.is_monic()));
    // subset recombination: any proper divisor of f over Z reduces to a
    // sub-product of the lifted factors
    let r = lifted.len();
    if r > 20 {
        return Err(Error::resource("too many modular factors to recombine"));
    }
    for mask in 1u32..(1 << r) - 1 {
        // skip complements: only masks containing index 0
        if mask & 1 == 0 {
            continue;
        }
        let mut prod = IntPoly::from_i64(&[1]);
        for (i, g) in lifted.iter().enumerate() {
            if mask >> i & 1 == 1 {
                prod = poly_mod(&prod.mul(g), &modulus);
            }
        }
        let candidate = center_mod(&prod, &modulus);
        if candidate.degree() == f.degree() {
            continue;
        }
        if f.div_exact(&candidate).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}
