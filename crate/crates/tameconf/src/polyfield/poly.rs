//! Integer polynomials with exact arithmetic: the base type for the
//! number-field verifier.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A polynomial with arbitrary-precision integer coefficients, stored
/// constant-first with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds from constant-first coefficients, trimming leading zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn x_power(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention of the
    /// callers, guard with `is_zero` where it matters.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division; `None` when `other` does not divide `self` over Z.
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let d = other.degree();
        let lc = other.leading();
        let mut quot = vec![BigInt::zero(); self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + d].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % &lc) != BigInt::zero() {
                return None;
            }
            let q = &top / &lc;
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[k + j] -= &q * b;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// The polynomial `f(x + c)`.
    pub fn shift(&self, c: i64) -> IntPoly {
        // Horner on (x + c)
        let mut out = IntPoly::zero();
        let shift = IntPoly::from_i64(&[c, 1]);
        for a in self.coeffs.iter().rev() {
            out = out.mul(&shift).add(&IntPoly::new(vec![a.clone()]));
        }
        out
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact resultant of `self` and `other` via fraction-free Gaussian
    /// elimination of the Sylvester matrix.
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        if self.is_zero() || other.is_zero() {
            return BigInt::zero();
        }
        let n = self.degree();
        let m = other.degree();
        if n == 0 {
            return self.leading().pow(m as u32);
        }
        if m == 0 {
            return other.leading().pow(n as u32);
        }
        let size = n + m;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..m {
            for (k, c) in self.coeffs.iter().enumerate() {
                mat[row][row + n - k] = c.clone();
            }
        }
        for row in 0..n {
            for (k, c) in other.coeffs.iter().enumerate() {
                mat[m + row][row + m - k] = c.clone();
            }
        }
        bareiss_determinant(mat)
    }

    /// The discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Result<BigInt> {
        if self.is_zero() || self.degree() < 1 {
            return Err(Error::invalid("discriminant needs degree >= 1"));
        }
        let n = self.degree();
        let res = self.resultant(&self.derivative());
        let lc = self.leading();
        let quotient = &res / &lc;
        debug_assert!((&quotient * &lc - &res).is_zero());
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        Ok(quotient * BigInt::from(sign))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match k {
                0 => format!("{c}"),
                1 if c.is_one() => "x".to_string(),
                1 => format!("{c}*x"),
                _ if c.is_one() => format!("x^{k}"),
                _ => format!("{c}*x^{k}"),
            };
            parts.push(term);
        }
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}

/// Exact determinant of an integer matrix by Bareiss fraction-free
/// elimination.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].clone() * BigInt::from(sign)
}

/// Infinity norm of the coefficient vector.
pub fn coeff_bound(f: &IntPoly) -> BigInt {
    f.coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_examples() {
        // x^4 - x - 1 has discriminant -283
        let f = IntPoly::from_i64(&[-1, -1, 0, 0, 1]);
        assert_eq!(f.discriminant().unwrap(), BigInt::from(-283));
        // x^2 - 5: b^2 - 4ac = 20
        let f = IntPoly::from_i64(&[-5, 0, 1]);
        assert_eq!(f.discriminant().unwrap(), BigInt::from(20));
        // x^3 - x: 4
        let f = IntPoly::from_i64(&[0, -1, 0, 1]);
        assert_eq!(f.discriminant().unwrap(), BigInt::from(4));
    }

    #[test]
    fn discriminant_matches_root_product_for_quadratics_cubics() {
        // oracle: disc(ax^2+bx+c) = b^2-4ac; disc(x^3+px+q) = -4p^3-27q^2
        for (p, q) in [(1i64, 1i64), (-2, 3), (0, -7), (5, 5)] {
            let f = IntPoly::from_i64(&[q, p, 0, 1]);
            assert_eq!(
                f.discriminant().unwrap(),
                BigInt::from(-4 * p * p * p - 27 * q * q)
            );
        }
        for (a, b, c) in [(1i64, 3i64, -2i64), (2, -1, 7), (3, 0, 5)] {
            let f = IntPoly::from_i64(&[c, b, a]);
            assert_eq!(
                f.discriminant().unwrap(),
                BigInt::from(b * b - 4 * a * c)
            );
        }
    }

    #[test]
    fn shift_and_divide() {
        let f = IntPoly::from_i64(&[-1, -1, 0, 0, 1]);
        let g = f.shift(2);
        // f(x+2) at x = 1 equals f(3)
        assert_eq!(g.eval(&BigInt::from(1)), f.eval(&BigInt::from(3)));

        let a = IntPoly::from_i64(&[1, 2, 1]); // (x+1)^2
        let b = IntPoly::from_i64(&[1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), b);
        assert!(a.div_exact(&IntPoly::from_i64(&[2, 1])).is_none());
    }

    #[test]
    fn resultant_of_shared_root_vanishes() {
        let a = IntPoly::from_i64(&[-2, 0, 1]); // x^2 - 2
        let b = IntPoly::from_i64(&[-4, 0, 0, 0, 1]); // x^4 - 4
        assert_eq!(a.resultant(&b), BigInt::zero());
        let c = IntPoly::from_i64(&[-3, 0, 1]);
        assert_ne!(a.resultant(&c), BigInt::zero());
    }
}
