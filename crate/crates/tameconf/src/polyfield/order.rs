//! Ramification at a single prime through the p-maximal order.
//!
//! The Dedekind criterion decides nothing when `p` divides the index, and
//! shifting the generator cannot change the index (`Z[x+c] = Z[x]`): some
//! table polynomials have essential index divisors at 2.  This module
//! saturates the equation order at one prime by the standard
//! radical/multiplier-ring chain and then tests whether the quotient mod
//! `p` is reduced, which decides ramification exactly.  It deliberately
//! stops short of factoring `p` in the maximal order; the verifier only
//! needs the unramified/ramified decision here.

use super::poly::IntPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An order in `Q[x]/(f)` containing `Z[theta]`: the rows of `m / d` are
/// a basis in the power basis, kept lower-triangular.
struct POrder {
    f: IntPoly,
    n: usize,
    d: BigInt,
    m: Vec<Vec<BigInt>>,
}

impl POrder {
    fn equation_order(f: &IntPoly) -> Self {
        let n = f.degree();
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        POrder {
            f: f.clone(),
            n,
            d: BigInt::one(),
            m,
        }
    }

    /// Power-basis vector of `theta^k * row` reduced mod `f`, for the
    /// product of two power-basis vectors.
    fn power_mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = self.n;
        let mut wide = vec![BigInt::zero(); 2 * n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                wide[i + j] += x * y;
            }
        }
        // reduce mod monic f
        for k in (n..2 * n).rev() {
            if wide[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut wide[k], BigInt::zero());
            for (j, fc) in self.f.coeffs().iter().take(n).enumerate() {
                wide[k - n + j] -= &c * fc;
            }
        }
        wide.truncate(n);
        wide
    }

    /// Coordinates of a power-basis vector `v / (d * scale)` with respect
    /// to the order basis; exact by construction, panics on non-integral
    /// input (an internal invariant violation).
    fn coords(&self, v: &[BigInt], scale: &BigInt) -> Vec<BigInt> {
        // solve c * M = v / scale by back substitution (M lower triangular)
        let n = self.n;
        let mut rhs: Vec<BigInt> = v.to_vec();
        let mut c = vec![BigInt::zero(); n];
        for i in (0..n).rev() {
            let num = &rhs[i];
            let den = &self.m[i][i] * scale;
            debug_assert!(!den.is_zero());
            let q = num / &den;
            debug_assert!((num - &q * &den).is_zero(), "non-integral coordinate");
            for j in 0..=i {
                rhs[j] = &rhs[j] - &q * &self.m[i][j] * scale;
            }
            c[i] = q;
        }
        c
    }

    /// Coordinates of the product of basis elements `i` and `j`.
    fn basis_product(&self, i: usize, j: usize) -> Vec<BigInt> {
        let w = self.power_mul(&self.m[i], &self.m[j]);
        self.coords(&w, &self.d)
    }

    /// Structure constants: table[i][j] = coords of `w_i * w_j`.
    fn multiplication_table(&self) -> Vec<Vec<Vec<BigInt>>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.basis_product(i, j)).collect())
            .collect()
    }
}

fn mod_p(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    let digits = r.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

/// Kernel basis of an F_p matrix given in column-major action
/// (`mat[r][c]`, mapping coordinate vectors on the right).
fn fp_kernel(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut a: Vec<Vec<u64>> = mat.to_vec();
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0usize;
    for c in 0..cols {
        let Some(r) = (rank..rows).find(|&r| a[r][c] % p != 0) else {
            continue;
        };
        a.swap(rank, r);
        let inv = crate::arith::inv_mod(a[rank][c] % p, p).unwrap();
        for x in a[rank].iter_mut() {
            *x = crate::arith::mul_mod(*x % p, inv, p);
        }
        for r2 in 0..rows {
            if r2 != rank && a[r2][c] % p != 0 {
                let factor = a[r2][c] % p;
                for cc in 0..cols {
                    let sub = crate::arith::mul_mod(factor, a[rank][cc], p);
                    a[r2][cc] = (a[r2][cc] + p - sub) % p;
                }
            }
        }
        pivot_of_col[c] = rank;
        rank += 1;
    }
    let mut kernel = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for c in 0..cols {
            let r = pivot_of_col[c];
            if r != usize::MAX {
                v[c] = (p - a[r][free] % p) % p;
            }
        }
        kernel.push(v);
    }
    kernel
}

/// Row-style Hermite normal form (lower triangular, nonnegative
/// diagonal) of a full-rank stack of integer rows.
fn hnf_rows(rows: Vec<Vec<BigInt>>, n: usize) -> Vec<Vec<BigInt>> {
    let mut work = rows;
    let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for col in (0..n).rev() {
        // eliminate all but one row with a nonzero entry at `col` among
        // rows not yet consumed
        loop {
            let mut idxs: Vec<usize> = work
                .iter()
                .enumerate()
                .filter(|(_, r)| !r[col].is_zero())
                .map(|(i, _)| i)
                .collect();
            if idxs.len() <= 1 {
                break;
            }
            idxs.sort_by_key(|&i| work[i][col].abs());
            let (small, big) = (idxs[0], idxs[1]);
            let q = &work[big][col] / &work[small][col];
            for c in 0..n {
                let sub = &q * &work[small][c];
                work[big][c] -= sub;
            }
        }
        if let Some(i) = work.iter().position(|r| !r[col].is_zero()) {
            let mut row = work.remove(i);
            if row[col].is_negative() {
                for c in row.iter_mut() {
                    *c = -&*c;
                }
            }
            out.push(row);
        }
    }
    out.reverse();
    debug_assert_eq!(out.len(), n, "rows must have full rank");
    out
}

/// Decides whether `p` is unramified in `Q[x]/(f)` by saturating the
/// equation order at `p` and testing the quotient mod `p` for radicals.
pub fn p_unramified_via_maximal_order(f: &IntPoly, p: u64) -> Result<bool> {
    let (_, radical_dim) = saturate(f, p)?;
    Ok(radical_dim == 0)
}

/// Saturates the equation order at `p`; returns the p-maximal order and
/// the radical dimension of its quotient mod `p`.
fn saturate(f: &IntPoly, p: u64) -> Result<(POrder, usize)> {
    if !f.is_monic() || f.degree() < 1 {
        return Err(Error::invalid("order saturation expects a monic polynomial"));
    }
    let n = f.degree();
    let mut order = POrder::equation_order(f);
    for _round in 0..128 {
        let table = order.multiplication_table();
        // frobenius power map on O/pO: x -> x^(p^e), p^e >= n
        let mut e = 0u32;
        let mut pe = 1u64;
        while (pe as usize) < n {
            pe = pe.saturating_mul(p);
            e += 1;
        }
        let identity_coords = {
            let mut v = vec![BigInt::zero(); n];
            v[0] = order.d.clone();
            order.coords(&v, &BigInt::one())
        };
        let frob = frobenius_matrix(&table, &identity_coords, n, p, e.max(1));
        let kernel = fp_kernel(&frob, p);
        // radical ideal I: lifts of kernel plus p * O, as O-coordinates
        let mut ideal_rows: Vec<Vec<BigInt>> = kernel
            .iter()
            .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        for i in 0..n {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::from(p);
            ideal_rows.push(row);
        }
        let ideal = hnf_rows(ideal_rows, n);
        // multiplier map: y -> coords of (y * b_j) in the ideal basis, mod p
        let ideal_order_view = POrder {
            f: f.clone(),
            n,
            d: BigInt::one(),
            m: ideal.clone(),
        };
        let mut mat: Vec<Vec<u64>> = vec![vec![0u64; n]; n * n];
        for col in 0..n {
            for (j, b) in ideal.iter().enumerate() {
                // y = w_col, b_j in O-coords: product in O-coords
                let mut prod = vec![BigInt::zero(); n];
                for (k, bk) in b.iter().enumerate() {
                    if bk.is_zero() {
                        continue;
                    }
                    for (t, c) in table[col][k].iter().enumerate() {
                        prod[t] += bk * c;
                    }
                }
                // coords of prod with respect to the ideal basis
                let in_ideal = ideal_order_view.coords_in_rows(&prod);
                for (r, val) in in_ideal.iter().enumerate() {
                    mat[j * n + r][col] = mod_p(val, p);
                }
            }
        }
        let mult_kernel = fp_kernel(&mat, p);
        if mult_kernel.is_empty() {
            // p-maximal: ramified exactly when the radical is nonzero
            return Ok((order, kernel.len()));
        }
        // enlarge: O' = (1/p) <kernel lifts, p O>
        let mut rows: Vec<Vec<BigInt>> = mult_kernel
            .iter()
            .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        for i in 0..n {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::from(p);
            rows.push(row);
        }
        let h = hnf_rows(rows, n);
        // new power-basis matrix: (h * M) / (d * p), simplified
        let mut new_m = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let add = &h[i][k] * &order.m[k][j];
                    new_m[i][j] += add;
                }
            }
        }
        let mut new_d = &order.d * BigInt::from(p);
        let mut g = new_d.clone();
        for row in &new_m {
            for x in row {
                g = num_integer::Integer::gcd(&g, x);
                if g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() {
            for row in new_m.iter_mut() {
                for x in row.iter_mut() {
                    *x = &*x / &g;
                }
            }
            new_d = new_d / &g;
        }
        order = POrder {
            f: f.clone(),
            n,
            d: new_d,
            m: new_m,
        };
    }
    Err(Error::Resource(
        "order saturation did not stabilize".to_string(),
    ))
}

impl POrder {
    /// Coordinates of an integral O-coordinate vector in terms of the
    /// triangular row basis `m` (denominator 1 view).
    fn coords_in_rows(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.coords(v, &BigInt::one())
    }
}

/// Row-echelon subspace of `F_p^dim` supporting rank queries and
/// reduction of vectors modulo the subspace.
struct FpSpace {
    p: u64,
    dim: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl FpSpace {
    fn new(p: u64, dim: usize) -> Self {
        FpSpace {
            p,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut v = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if v[piv] != 0 {
                let c = v[piv];
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + p - crate::arith::mul_mod(c, *r, p)) % p;
                }
            }
        }
        v
    }

    /// Inserts a vector; returns true when it enlarged the space.
    fn insert(&mut self, v: &[u64]) -> bool {
        let r = self.reduce(v);
        let Some(piv) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = crate::arith::inv_mod(r[piv], self.p).unwrap();
        let normalized: Vec<u64> = r
            .iter()
            .map(|&x| crate::arith::mul_mod(x, inv, self.p))
            .collect();
        self.rows.push(normalized);
        self.pivots.push(piv);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn free_columns(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}

/// The F_p-algebra `O/pO` of an order, with multiplication through the
/// structure constants reduced mod p.
struct AlgebraModP {
    n: usize,
    p: u64,
    table: Vec<Vec<Vec<u64>>>,
    identity: Vec<u64>,
}

impl AlgebraModP {
    fn new(order: &POrder, p: u64) -> Self {
        let n = order.n;
        let big = order.multiplication_table();
        let table: Vec<Vec<Vec<u64>>> = big
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.iter().map(|x| mod_p(x, p)).collect())
                    .collect()
            })
            .collect();
        let identity_coords = {
            let mut v = vec![BigInt::zero(); n];
            v[0] = order.d.clone();
            order.coords(&v, &BigInt::one())
        };
        let identity = identity_coords.iter().map(|c| mod_p(c, p)).collect();
        AlgebraModP {
            n,
            p,
            table,
            identity,
        }
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (n, p) = (self.n, self.p);
        let mut out = vec![0u64; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = crate::arith::mul_mod(x, y, p);
                for (t, &c) in self.table[i][j].iter().enumerate() {
                    out[t] = (out[t] + crate::arith::mul_mod(xy, c, p)) % p;
                }
            }
        }
        out
    }

    /// Matrix of the Frobenius `x -> x^p` (columns are basis images).
    fn frobenius(&self) -> Vec<Vec<u64>> {
        let n = self.n;
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = vec![0u64; n];
            v[i] = 1;
            cols.push(self.pow_p(&v));
        }
        (0..n)
            .map(|r| (0..n).map(|c| cols[c][r]).collect())
            .collect()
    }

    fn pow_p(&self, a: &[u64]) -> Vec<u64> {
        let mut acc = self.identity.clone();
        let mut cur = a.to_vec();
        let mut e = self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &cur);
            }
            cur = self.mul(&cur, &cur);
            e >>= 1;
        }
        acc
    }
}

fn mat_apply(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| (acc + crate::arith::mul_mod(a, b, p)) % p)
        })
        .collect()
}

/// Splitting pattern of `p` through the p-maximal order, when the local
/// invariants pin it uniquely: the residue-degree multiset comes from
/// Frobenius fixed spaces on the semisimple quotient, the ramification
/// indices from the radical filtration, under the tameness constraint.
/// Returns `None` when several tame patterns share the invariants (does
/// not happen for uniform patterns, e.g. any Galois field).
pub fn p_splitting_via_maximal_order(
    f: &IntPoly,
    p: u64,
) -> Result<Option<Vec<(u64, u64)>>> {
    let (order, _) = saturate(f, p)?;
    let n = order.n;
    let alg = AlgebraModP::new(&order, p);
    let frob = alg.frobenius();
    // radical = kernel of Frobenius^e with p^e >= n
    let mut e = 0u32;
    let mut pe = 1u64;
    while (pe as usize) < n {
        pe = pe.saturating_mul(p);
        e += 1;
    }
    let mut frob_e = frob.clone();
    for _ in 1..e.max(1) {
        frob_e = mat_mul_modp(&frob_e, &frob, p);
    }
    let mut radical = FpSpace::new(p, n);
    for v in fp_kernel(&frob_e, p) {
        radical.insert(&v);
    }
    // radical filtration: marginal(k) = dim R^k - dim R^{k+1} counts
    // sum of f_i over components with e_i > k
    let mut power_dims = vec![n, radical.rank()];
    let mut current: Vec<Vec<u64>> = radical.rows.clone();
    while !current.is_empty() {
        let mut next = FpSpace::new(p, n);
        for a in &current {
            for b in &radical.rows {
                next.insert(&alg.mul(a, b));
            }
        }
        power_dims.push(next.rank());
        if next.rank() == 0 {
            break;
        }
        current = next.rows.clone();
    }
    let marginals: Vec<usize> = (1..power_dims.len())
        .map(|k| power_dims[k] - power_dims.get(k + 1).copied().unwrap_or(0))
        .collect();
    // semisimple quotient dimension and Frobenius fixed spaces
    let s = n - radical.rank();
    let free = radical.free_columns();
    let fixed_dim = |k: usize| -> usize {
        // dim ker of (Frobenius^k - id) on A/R
        let mut phik: Vec<Vec<u64>> = identity_matrix(n);
        for _ in 0..k {
            phik = mat_mul_modp(&phik, &frob, p);
        }
        let mut rows_mat: Vec<Vec<u64>> = vec![vec![0u64; s]; s];
        for (cj, &j) in free.iter().enumerate() {
            let mut v = vec![0u64; n];
            v[j] = 1;
            let mut img = mat_apply(&phik, &v, p);
            img[j] = (img[j] + p - 1) % p;
            let red = radical.reduce(&img);
            for (ri, &fc) in free.iter().enumerate() {
                rows_mat[ri][cj] = red[fc];
            }
        }
        s - rank_modp(&rows_mat, p)
    };
    let g = fixed_dim(1);
    let d_values: Vec<usize> = (1..=s.max(1)).map(fixed_dim).collect();
    // residue degree multiset: the unique partition of s into g parts
    // matching all Frobenius fixed dimensions
    let mut f_candidates: Vec<Vec<u64>> = Vec::new();
    let mut scratch = Vec::new();
    partitions_into(s as u64, g, s as u64, &mut scratch, &mut f_candidates);
    let f_multisets: Vec<Vec<u64>> = f_candidates
        .into_iter()
        .filter(|parts| {
            (1..=s).all(|k| {
                let want: u64 = parts.iter().map(|&fi| gcd64(k as u64, fi)).sum();
                want == d_values[k - 1] as u64
            })
        })
        .collect();
    if f_multisets.len() != 1 {
        return Ok(None);
    }
    let fs = &f_multisets[0];
    // enumerate tame ramification assignments against the filtration
    let mut assignments: Vec<Vec<(u64, u64)>> = Vec::new();
    enumerate_e(
        fs,
        0,
        &mut vec![0u64; fs.len()],
        &marginals,
        n as u64,
        p,
        &mut assignments,
    );
    let mut unique: Vec<Vec<(u64, u64)>> = Vec::new();
    for mut a in assignments {
        a.sort_unstable_by(|x, y| y.cmp(x));
        if !unique.contains(&a) {
            unique.push(a);
        }
    }
    if unique.len() == 1 {
        Ok(Some(unique.pop().unwrap()))
    } else {
        Ok(None)
    }
}

fn identity_matrix(n: usize) -> Vec<Vec<u64>> {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

fn mat_mul_modp(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] =
                    (out[i][j] + crate::arith::mul_mod(a[i][k], b[k][j], p)) % p;
            }
        }
    }
    out
}

fn rank_modp(m: &[Vec<u64>], p: u64) -> usize {
    let mut space = FpSpace::new(p, m.first().map(|r| r.len()).unwrap_or(0));
    let mut rank = 0;
    for row in m {
        if space.insert(row) {
            rank += 1;
        }
    }
    rank
}

fn gcd64(a: u64, b: u64) -> u64 {
    crate::arith::gcd(a, b)
}

fn partitions_into(
    total: u64,
    parts: usize,
    cap: u64,
    scratch: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if parts == 0 {
        if total == 0 {
            out.push(scratch.clone());
        }
        return;
    }
    let lo = total.div_ceil(parts as u64);
    for take in (lo..=cap.min(total.saturating_sub(parts as u64 - 1))).rev() {
        scratch.push(take);
        partitions_into(total - take, parts - 1, take, scratch, out);
        scratch.pop();
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate_e(
    fs: &[u64],
    idx: usize,
    es: &mut Vec<u64>,
    marginals: &[usize],
    n: u64,
    p: u64,
    out: &mut Vec<Vec<(u64, u64)>>,
) {
    if idx == fs.len() {
        // check the radical filtration marginals
        let max_e = es.iter().copied().max().unwrap_or(1);
        for k in 1..=(max_e.max(marginals.len() as u64)) {
            let want = marginals
                .get(k as usize - 1)
                .copied()
                .unwrap_or(0) as u64;
            let got: u64 = fs
                .iter()
                .zip(es.iter())
                .filter(|&(_, &e)| e > k)
                .map(|(&f, _)| f)
                .sum();
            if got != want {
                return;
            }
        }
        let sum: u64 = fs.iter().zip(es.iter()).map(|(&f, &e)| e * f).sum();
        if sum == n {
            out.push(es.iter().copied().zip(fs.iter().copied()).collect());
        }
        return;
    }
    for e in 1..=n {
        if gcd64(e, p) != 1 {
            continue;
        }
        es[idx] = e;
        // partial degree bound
        let partial: u64 = fs[..=idx]
            .iter()
            .zip(es[..=idx].iter())
            .map(|(&f, &ev)| ev * f)
            .sum();
        if partial + (fs.len() - idx - 1) as u64 <= n {
            enumerate_e(fs, idx + 1, es, marginals, n, p, out);
        }
    }
}

fn frobenius_matrix(
    table: &[Vec<Vec<BigInt>>],
    identity_coords: &[BigInt],
    n: usize,
    p: u64,
    e: u32,
) -> Vec<Vec<u64>> {
    // multiply elements given by F_p coordinate vectors via the table
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = crate::arith::mul_mod(x, y, p);
                for (t, c) in table[i][j].iter().enumerate() {
                    out[t] = (out[t] + crate::arith::mul_mod(xy, mod_p(c, p), p)) % p;
                }
            }
        }
        out
    };
    let pow_p = |a: &[u64], identity: &[u64]| -> Vec<u64> {
        let mut acc = identity.to_vec();
        let mut cur = a.to_vec();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(&acc, &cur);
            }
            cur = mul(&cur, &cur);
            e >>= 1;
        }
        acc
    };
    let identity: Vec<u64> = identity_coords.iter().map(|c| mod_p(c, p)).collect();
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = vec![0u64; n];
        v[i] = 1;
        let mut w = v;
        for _ in 0..e {
            w = pow_p(&w, &identity);
        }
        cols.push(w);
    }
    // row-major matrix with columns = images
    (0..n)
        .map(|r| (0..n).map(|c| cols[c][r]).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn quadratic_cases_match_field_discriminant() {
        // x^2 - 5: index 2, field disc 5: 2 unramified, 5 ramified
        assert!(p_unramified_via_maximal_order(&poly(&[-5, 0, 1]), 2).unwrap());
        assert!(!p_unramified_via_maximal_order(&poly(&[-5, 0, 1]), 5).unwrap());
        // x^2 - 3: field disc 12: both 2 and 3 ramified
        assert!(!p_unramified_via_maximal_order(&poly(&[-3, 0, 1]), 2).unwrap());
        assert!(!p_unramified_via_maximal_order(&poly(&[-3, 0, 1]), 3).unwrap());
        // x^2 - 45 = (3 sqrt 5)^2: disc 180, field disc 5
        assert!(p_unramified_via_maximal_order(&poly(&[-45, 0, 1]), 2).unwrap());
        assert!(p_unramified_via_maximal_order(&poly(&[-45, 0, 1]), 3).unwrap());
        assert!(!p_unramified_via_maximal_order(&poly(&[-45, 0, 1]), 5).unwrap());
    }

    #[test]
    fn agrees_with_dedekind_where_dedekind_decides() {
        use super::super::split::dedekind_unchecked;
        use super::super::split::splitting_pattern_unchecked;
        use super::super::split::PatternOutcome;
        let polys = [
            poly(&[-1, -1, 0, 0, 1]),
            poly(&[1, -1, 0, 0, 1]),
            poly(&[1, 0, 1]),
            poly(&[17, -43, 29, -1, 1]),
        ];
        for f in &polys {
            for p in [2u64, 3, 5, 7, 229, 283] {
                if dedekind_unchecked(f, p).unwrap() {
                    let unram = match splitting_pattern_unchecked(f, p).unwrap() {
                        PatternOutcome::Pattern(pat) => pat.is_unramified(),
                        PatternOutcome::IndexObstruction => unreachable!(),
                    };
                    assert_eq!(
                        p_unramified_via_maximal_order(f, p).unwrap(),
                        unram,
                        "f = {f}, p = {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn cyclotomic_octic_is_unramified_away_from_conductor() {
        // 15th cyclotomic polynomial: ramified exactly at 3 and 5
        let f = poly(&[1, -1, 0, 1, -1, 1, 0, -1, 1]);
        assert!(!p_unramified_via_maximal_order(&f, 3).unwrap());
        assert!(!p_unramified_via_maximal_order(&f, 5).unwrap());
        assert!(p_unramified_via_maximal_order(&f, 2).unwrap());
        assert!(p_unramified_via_maximal_order(&f, 7).unwrap());
    }
}
