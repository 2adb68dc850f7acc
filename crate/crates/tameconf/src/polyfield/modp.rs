//! Polynomial arithmetic and factorization over prime fields: squarefree
//! decomposition, distinct-degree splitting, and equal-degree splitting
//! (exhaustive for tiny `p^d`, Cantor-Zassenhaus otherwise, with the
//! random stream seeded from the input so output is bit-stable).

use super::poly::IntPoly;
use crate::arith::{inv_mod, mul_mod};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Dense constant-first coefficient vector over `F_p`, normalized.
pub type FpPoly = Vec<u64>;

fn norm(mut v: FpPoly) -> FpPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn fp_deg(f: &FpPoly) -> usize {
    f.len().saturating_sub(1)
}

pub fn fp_is_zero(f: &FpPoly) -> bool {
    f.is_empty()
}

pub fn fp_one() -> FpPoly {
    vec![1]
}

pub fn fp_x() -> FpPoly {
    vec![0, 1]
}

pub fn fp_from_int(f: &IntPoly, p: u64) -> FpPoly {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    let pm = BigInt::from(p);
    norm(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = ((c % &pm) + &pm) % &pm;
                r.to_u64().expect("reduced residue fits u64")
            })
            .collect(),
    )
}

pub fn fp_to_int(f: &FpPoly) -> IntPoly {
    IntPoly::from_i64(&f.iter().map(|&c| c as i64).collect::<Vec<_>>())
}

#[cfg_attr(not(test), allow(dead_code))]
pub fn fp_add(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    norm(
        (0..n)
            .map(|k| {
                let x = a.get(k).copied().unwrap_or(0);
                let y = b.get(k).copied().unwrap_or(0);
                (x + y) % p
            })
            .collect(),
    )
}

pub fn fp_sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    norm(
        (0..n)
            .map(|k| {
                let x = a.get(k).copied().unwrap_or(0);
                let y = b.get(k).copied().unwrap_or(0);
                (x + p - y % p) % p
            })
            .collect(),
    )
}

pub fn fp_mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if fp_is_zero(a) || fp_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    norm(out)
}

pub fn fp_scale(a: &FpPoly, c: u64, p: u64) -> FpPoly {
    norm(a.iter().map(|&x| mul_mod(x, c, p)).collect())
}

/// Euclidean division, tolerating any invertible leading coefficient.
pub fn fp_divmod(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    assert!(!fp_is_zero(b), "division by zero polynomial");
    if fp_deg(a) < fp_deg(b) || fp_is_zero(a) {
        return (Vec::new(), a.clone());
    }
    let lc_inv = inv_mod(*b.last().unwrap(), p).expect("leading coefficient invertible");
    let mut rem = a.clone();
    let d = fp_deg(b);
    let mut quot = vec![0u64; fp_deg(a) - d + 1];
    for k in (0..quot.len()).rev() {
        let top = rem.get(k + d).copied().unwrap_or(0);
        if top == 0 {
            continue;
        }
        let q = mul_mod(top, lc_inv, p);
        quot[k] = q;
        for (j, &bc) in b.iter().enumerate() {
            let idx = k + j;
            rem[idx] = (rem[idx] + p - mul_mod(q, bc, p)) % p;
        }
    }
    (norm(quot), norm(rem))
}

pub fn fp_rem(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    fp_divmod(a, b, p).1
}

pub fn fp_monic(a: &FpPoly, p: u64) -> FpPoly {
    if fp_is_zero(a) {
        return a.clone();
    }
    let inv = inv_mod(*a.last().unwrap(), p).expect("unit leading coefficient");
    fp_scale(a, inv, p)
}

/// Monic gcd.
pub fn fp_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !fp_is_zero(&y) {
        let r = fp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if fp_is_zero(&x) {
        x
    } else {
        fp_monic(&x, p)
    }
}

/// Extended gcd: returns (g, u, v) monic with `u a + v b = g`.
pub fn fp_xgcd(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (fp_one(), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), fp_one());
    while !fp_is_zero(&r1) {
        let (q, r) = fp_divmod(&r0, &r1, p);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if fp_is_zero(&r0) {
        return (r0, s0, t0);
    }
    let lc_inv = inv_mod(*r0.last().unwrap(), p).unwrap();
    (
        fp_scale(&r0, lc_inv, p),
        fp_scale(&s0, lc_inv, p),
        fp_scale(&t0, lc_inv, p),
    )
}

pub fn fp_derivative(a: &FpPoly, p: u64) -> FpPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    norm(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mul_mod(c, (k as u64) % p, p))
            .collect(),
    )
}

pub fn fp_mulmod(a: &FpPoly, b: &FpPoly, f: &FpPoly, p: u64) -> FpPoly {
    fp_rem(&fp_mul(a, b, p), f, p)
}

/// `base^exp mod f` with an arbitrary-size exponent.
pub fn fp_powmod(base: &FpPoly, exp: &BigUint, f: &FpPoly, p: u64) -> FpPoly {
    let mut acc = fp_rem(&fp_one(), f, p);
    let mut cur = fp_rem(base, f, p);
    let mut e = exp.clone();
    while !e.is_zero() {
        if e.is_odd() {
            acc = fp_mulmod(&acc, &cur, f, p);
        }
        cur = fp_mulmod(&cur, &cur, f, p);
        e >>= 1;
    }
    acc
}

/// Squarefree decomposition of a monic polynomial: pairwise-coprime monic
/// parts with their multiplicities.
pub fn fp_squarefree_decomposition(f: &FpPoly, p: u64) -> Vec<(FpPoly, u32)> {
    let f = fp_monic(f, p);
    if fp_deg(&f) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let deriv = fp_derivative(&f, p);
    let mut c = if fp_is_zero(&deriv) {
        f.clone()
    } else {
        fp_gcd(&f, &deriv, p)
    };
    let mut w = fp_divmod(&f, &c, p).0;
    let mut i = 1u32;
    while fp_deg(&w) > 0 {
        let y = fp_gcd(&w, &c, p);
        let z = fp_divmod(&w, &y, p).0;
        if fp_deg(&z) > 0 {
            out.push((z, i));
        }
        c = fp_divmod(&c, &y, p).0;
        w = y;
        i += 1;
    }
    // leftover c is a p-th power
    if fp_deg(&c) > 0 {
        let root = fp_pth_root(&c, p);
        for (g, m) in fp_squarefree_decomposition(&root, p) {
            out.push((g, m * p as u32));
        }
    }
    out
}

fn fp_pth_root(f: &FpPoly, p: u64) -> FpPoly {
    // over the prime field, coefficients are Frobenius-fixed
    let mut out = Vec::new();
    for (k, &c) in f.iter().enumerate() {
        if c != 0 {
            debug_assert_eq!(k as u64 % p, 0, "p-th power has p-divisible exponents");
        }
        if k as u64 % p == 0 {
            out.push(c);
        }
    }
    norm(out)
}

/// Distinct-degree splitting of a squarefree monic polynomial: pairs
/// (product of all irreducible factors of degree d, d).
pub fn fp_distinct_degree(f: &FpPoly, p: u64) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut rest = fp_monic(f, p);
    let mut h = fp_rem(&fp_x(), &rest, p);
    let mut d = 0usize;
    while fp_deg(&rest) > 0 {
        d += 1;
        if 2 * d > fp_deg(&rest) {
            out.push((rest.clone(), fp_deg(&rest)));
            break;
        }
        h = fp_powmod(&h, &BigUint::from(p), &rest, p);
        let g = fp_gcd(&fp_sub(&h, &fp_x(), p), &rest, p);
        if fp_deg(&g) > 0 {
            out.push((g.clone(), d));
            rest = fp_divmod(&rest, &g, p).0;
            h = fp_rem(&h, &rest, p);
        }
    }
    out
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Equal-degree splitting: factor a monic squarefree product of
/// irreducibles all of degree `d`.  Exhaustive trial division when `p^d`
/// is tiny, Cantor-Zassenhaus otherwise (`p` odd there; `p = 2` always
/// lands in the exhaustive branch at this crate's degree cap).
pub fn fp_equal_degree(f: &FpPoly, d: usize, p: u64, seed: &mut u64) -> Vec<FpPoly> {
    if fp_deg(f) == d {
        return vec![fp_monic(f, p)];
    }
    let small_cap = 1u128 << 16;
    let pd = (p as u128).checked_pow(d as u32);
    if pd.map(|v| v <= small_cap).unwrap_or(false) {
        // enumerate monic degree-d candidates in lexicographic order
        let mut out = Vec::new();
        let mut rest = fp_monic(f, p);
        let total = (p as u128).pow(d as u32);
        let mut code = 0u128;
        while code < total && fp_deg(&rest) > 0 {
            let mut cand = vec![0u64; d + 1];
            let mut c = code;
            for slot in cand.iter_mut().take(d) {
                *slot = (c % p as u128) as u64;
                c /= p as u128;
            }
            cand[d] = 1;
            let cand = norm(cand);
            loop {
                let (q, r) = fp_divmod(&rest, &cand, p);
                if fp_is_zero(&r) && fp_deg(&rest) >= d {
                    out.push(cand.clone());
                    rest = q;
                } else {
                    break;
                }
            }
            code += 1;
        }
        debug_assert!(fp_deg(&rest) == 0);
        return out;
    }
    assert!(p % 2 == 1, "large equal-degree splitting requires odd p");
    // Cantor-Zassenhaus
    let mut work = vec![fp_monic(f, p)];
    let mut done = Vec::new();
    let exponent = ((BigUint::from(p).pow(d as u32)) - BigUint::one()) >> 1;
    while let Some(g) = work.pop() {
        if fp_deg(&g) == d {
            done.push(g);
            continue;
        }
        // random element of F_p[x]/(g)
        let a: FpPoly = norm(
            (0..fp_deg(&g))
                .map(|_| splitmix(seed) % p)
                .collect(),
        );
        if fp_is_zero(&a) {
            work.push(g);
            continue;
        }
        let shared = fp_gcd(&a, &g, p);
        if fp_deg(&shared) > 0 && fp_deg(&shared) < fp_deg(&g) {
            work.push(fp_divmod(&g, &shared, p).0);
            work.push(shared);
            continue;
        }
        let b = fp_powmod(&a, &exponent, &g, p);
        let split = fp_gcd(&fp_sub(&b, &fp_one(), p), &g, p);
        if fp_deg(&split) > 0 && fp_deg(&split) < fp_deg(&g) {
            work.push(fp_divmod(&g, &split, p).0);
            work.push(split);
        } else {
            work.push(g);
        }
    }
    done.sort();
    done
}

/// Full factorization over `F_p`: monic irreducible factors with
/// multiplicities, deterministically ordered by (degree, coefficients).
/// Errors when the leading coefficient vanishes mod `p`.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<Vec<(IntPoly, u32)>> {
    if !crate::arith::is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if f.is_zero() {
        return Err(Error::invalid("cannot factor the zero polynomial"));
    }
    let reduced = fp_from_int(f, p);
    if reduced.len() != f.coeffs().len() {
        return Err(Error::invalid(format!(
            "leading coefficient vanishes mod {p}"
        )));
    }
    let mut seed = 0x1234_5678_9abc_def0u64 ^ p;
    for &c in &reduced {
        seed = seed.rotate_left(7) ^ c;
    }
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    for (part, mult) in fp_squarefree_decomposition(&reduced, p) {
        for (prod, d) in fp_distinct_degree(&part, p) {
            for irr in fp_equal_degree(&prod, d, p, &mut seed) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|a, b| (fp_deg(&a.0), &a.0).cmp(&(fp_deg(&b.0), &b.0)));
    Ok(out.into_iter().map(|(g, m)| (fp_to_int(&g), m)).collect())
}
