//! Sign matrices and the quadratic-residue matrix machinery.
//!
//! A sign matrix has zero diagonal and ±1 off-diagonal entries.  It is a QR
//! matrix when its entries arise as Legendre symbols `(p_i/p_j)` of distinct
//! odd primes, which is decidable from the diagonal of the square: the
//! diagonal of `S^2` must consist of `s-k` occurrences of `s-1` and `k`
//! occurrences of `s-2k+1` for some `1 <= k <= s`.

use crate::arith::{is_prime, legendre, primes_up_to};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An `s x s` matrix with zero diagonal and ±1 off-diagonal entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignMatrix {
    s: usize,
    entries: Vec<i8>, // row-major
}

impl SignMatrix {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let s = rows.len();
        if s == 0 {
            return Err(Error::invalid("sign matrix must have dimension >= 1"));
        }
        let mut entries = Vec::with_capacity(s * s);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != s {
                return Err(Error::invalid(format!(
                    "row {i} has length {}, expected {s}",
                    row.len()
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                let ok = if i == j { e == 0 } else { e == 1 || e == -1 };
                if !ok {
                    return Err(Error::invalid(format!(
                        "entry ({i},{j}) = {e} violates the sign-matrix shape"
                    )));
                }
                entries.push(e);
            }
        }
        Ok(SignMatrix { s, entries })
    }

    /// Parses the CLI text format: rows separated by `;`, entries by `,`,
    /// e.g. `0,-1,-1;-1,0,-1;1,1,0`.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<i8>> = text
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<i8>()
                            .map_err(|_| Error::invalid(format!("bad matrix entry {e:?}")))
                    })
                    .collect::<Result<Vec<i8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SignMatrix::new(rows)
    }

    pub fn dim(&self) -> usize {
        self.s
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.s + j]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.s).map(|c| c.to_vec()).collect()
    }

    /// Symmetric (skew entries never count the zero diagonal).
    pub fn is_symmetric(&self) -> bool {
        (0..self.s).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Diagonal of `S^2`.
    pub fn square_diagonal(&self) -> Vec<i64> {
        (0..self.s)
            .map(|i| {
                (0..self.s)
                    .map(|j| self.get(i, j) as i64 * self.get(j, i) as i64)
                    .sum()
            })
            .collect()
    }

    /// Applies a simultaneous row+column permutation: entry (i,j) of the
    /// result is `self[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> SignMatrix {
        let s = self.s;
        let mut entries = vec![0i8; s * s];
        for i in 0..s {
            for j in 0..s {
                entries[i * s + j] = self.get(perm[i], perm[j]);
            }
        }
        SignMatrix { s, entries }
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";");
        f.write_str(&text)
    }
}

/// Outcome of the QR decision: the diagonal of `S^2`, whether the
/// diagonal criterion is met, and the smallest fitting `k` when it is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QrVerdict {
    pub is_qr: bool,
    pub k: Option<usize>,
    pub diagonal: Vec<i64>,
}

/// Decides whether a sign matrix is a QR matrix via the diagonal criterion.
pub fn qr_test(m: &SignMatrix) -> QrVerdict {
    let s = m.dim();
    let diagonal = m.square_diagonal();
    let mut sorted = diagonal.clone();
    sorted.sort_unstable();
    for k in 1..=s {
        let mut expected: Vec<i64> = Vec::with_capacity(s);
        expected.extend(std::iter::repeat(s as i64 - 1).take(s - k));
        expected.extend(std::iter::repeat(s as i64 - 2 * k as i64 + 1).take(k));
        expected.sort_unstable();
        if expected == sorted {
            return QrVerdict {
                is_qr: true,
                k: Some(k),
                diagonal,
            };
        }
    }
    QrVerdict {
        is_qr: false,
        k: None,
        diagonal,
    }
}

/// The sign matrix of Legendre symbols `m_ij = (p_i/p_j)` for distinct odd
/// primes.
pub fn qr_matrix_of_primes(primes: &[u64]) -> Result<SignMatrix> {
    if primes.is_empty() {
        return Err(Error::invalid("need at least one prime"));
    }
    for (idx, &p) in primes.iter().enumerate() {
        if p == 2 {
            return Err(Error::invalid("even prime 2 is not allowed"));
        }
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if primes[..idx].contains(&p) {
            return Err(Error::invalid(format!("repeated prime {p}")));
        }
    }
    let s = primes.len();
    let rows = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    if i == j {
                        0i8
                    } else {
                        legendre(primes[i] as i64, primes[j]) as i8
                    }
                })
                .collect()
        })
        .collect();
    SignMatrix::new(rows)
}

const WORD_BITS: usize = 64;

/// Legendre data over all odd primes up to a bound, reusable across many
/// sign-matrix searches at the same bound.
///
/// For each prime index `i` and each ordered sign pair `(a, b)` it stores
/// the bitset of indices `k` with `(p_i/p_k) = a` and `(p_k/p_i) = b`.
/// Rows are filled lazily: searches that succeed early never pay for the
/// full quadratic table.
pub struct SignSearch {
    primes: Vec<u64>,
    words: usize,
    rows: Vec<Option<[Vec<u64>; 4]>>,
}

#[inline]
fn pattern_index(a: i8, b: i8) -> usize {
    (((a == 1) as usize) << 1) | ((b == 1) as usize)
}

impl SignSearch {
    /// Prepares the prime list for all odd primes `<= bound`.
    pub fn new(bound: u64) -> Self {
        let primes: Vec<u64> = primes_up_to(bound).into_iter().filter(|&p| p > 2).collect();
        let n = primes.len();
        let words = n.div_ceil(WORD_BITS).max(1);
        SignSearch {
            primes,
            words,
            rows: vec![None; n],
        }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    fn ensure_row(&mut self, i: usize) {
        if self.rows[i].is_some() {
            return;
        }
        let n = self.primes.len();
        let mut masks = [
            vec![0u64; self.words],
            vec![0u64; self.words],
            vec![0u64; self.words],
            vec![0u64; self.words],
        ];
        for k in 0..n {
            if i == k {
                continue;
            }
            let a = legendre(self.primes[i] as i64, self.primes[k]) as i8;
            let b = legendre(self.primes[k] as i64, self.primes[i]) as i8;
            masks[pattern_index(a, b)][k / WORD_BITS] |= 1u64 << (k % WORD_BITS);
        }
        self.rows[i] = Some(masks);
    }

    /// Lexicographically least sequence of distinct odd primes realizing
    /// `m` as its Legendre matrix, or `None` when the table is exhausted.
    pub fn find(&mut self, m: &SignMatrix) -> Option<Vec<u64>> {
        let s = m.dim();
        let n = self.primes.len();
        if n == 0 {
            return None;
        }
        let full: Vec<u64> = {
            let mut v = vec![u64::MAX; self.words];
            let spare = self.words * WORD_BITS - n;
            if spare > 0 {
                v[self.words - 1] >>= spare;
            }
            v
        };
        // chosen[t] = prime index at position t; cands[t] = candidate set
        // for position t given chosen[..t] (constraints of position t only)
        let mut chosen: Vec<usize> = Vec::with_capacity(s);
        let mut cands: Vec<Vec<u64>> = vec![full.clone(); s + 1];
        let mut cursor: Vec<usize> = vec![0; s + 1];
        let mut depth = 0usize;
        loop {
            let next = next_bit(&cands[depth], cursor[depth], n);
            match next {
                None => {
                    if depth == 0 {
                        return None;
                    }
                    depth -= 1;
                    chosen.pop();
                    continue;
                }
                Some(k) => {
                    cursor[depth] = k + 1;
                    chosen.push(k);
                    if depth + 1 == s {
                        return Some(chosen.iter().map(|&i| self.primes[i]).collect());
                    }
                    // fresh candidate set for position depth+1: all primes
                    // minus the used ones, cut by the Legendre constraints
                    // against every placed prime
                    for &c in &chosen {
                        self.ensure_row(c);
                    }
                    let t = depth + 1;
                    let mut next_set = full.clone();
                    for &c in &chosen {
                        clear_bit(&mut next_set, c);
                    }
                    for (u, &iu) in chosen.iter().enumerate() {
                        let pat = pattern_index(m.get(u, t), m.get(t, u));
                        let mask = &self.rows[iu].as_ref().expect("row ensured")[pat];
                        for w in 0..self.words {
                            next_set[w] &= mask[w];
                        }
                    }
                    depth += 1;
                    cands[depth] = next_set;
                    cursor[depth] = 0;
                }
            }
        }
    }
}

fn next_bit(set: &[u64], from: usize, n: usize) -> Option<usize> {
    if from >= n {
        return None;
    }
    let mut w = from / WORD_BITS;
    let mut word = set[w] & (u64::MAX << (from % WORD_BITS));
    loop {
        if word != 0 {
            let k = w * WORD_BITS + word.trailing_zeros() as usize;
            return if k < n { Some(k) } else { None };
        }
        w += 1;
        if w >= set.len() {
            return None;
        }
        word = set[w];
    }
}

fn clear_bit(set: &mut [u64], k: usize) {
    set[k / WORD_BITS] &= !(1u64 << (k % WORD_BITS));
}

/// One-shot search: the lexicographically least sequence of distinct odd
/// primes `<= bound` whose Legendre matrix equals `m`, or `None` when the
/// search space is exhausted.  Build a [`SignSearch`] directly to amortize
/// the Legendre table over many searches.
pub fn find_primes_for_sign_matrix(m: &SignMatrix, bound: u64) -> Option<Vec<u64>> {
    if bound < 3 {
        return None;
    }
    SignSearch::new(bound).find(m)
}

/// Exhaustive reference search in plain lexicographic tuple order; used
/// as an oracle for [`SignSearch::find`] in tests (quadratic, keep the
/// bound small).
pub fn find_primes_brute_force(m: &SignMatrix, bound: u64) -> Option<Vec<u64>> {
    let primes: Vec<u64> = primes_up_to(bound).into_iter().filter(|&p| p > 2).collect();
    let s = m.dim();
    let mut tuple: Vec<usize> = Vec::with_capacity(s);
    fn rec(
        m: &SignMatrix,
        primes: &[u64],
        tuple: &mut Vec<usize>,
        s: usize,
    ) -> Option<Vec<u64>> {
        if tuple.len() == s {
            return Some(tuple.iter().map(|&i| primes[i]).collect());
        }
        let t = tuple.len();
        'cand: for k in 0..primes.len() {
            if tuple.contains(&k) {
                continue;
            }
            for (u, &iu) in tuple.iter().enumerate() {
                if legendre(primes[iu] as i64, primes[k]) as i8 != m.get(u, t)
                    || legendre(primes[k] as i64, primes[iu]) as i8 != m.get(t, u)
                {
                    continue 'cand;
                }
            }
            tuple.push(k);
            if let Some(hit) = rec(m, primes, tuple, s) {
                return Some(hit);
            }
            tuple.pop();
        }
        None
    }
    rec(m, &primes, &mut tuple, s)
}

/// A QR sign matrix whose realizations have exactly `r` ramified primes
/// with inertial degree 2 (rows containing a `-1`) and `s - r` ramified
/// primes that are otherwise totally split.
///
/// For `r = 0` and `r >= 2` the matrix is symmetric (the `-1` entries fill
/// the top-left `r x r` block); `r = 1` needs the skew pair
/// `m_01 = -1, m_10 = +1`, since a symmetric matrix cannot have exactly one
/// row containing a `-1`.
pub fn inertial_degree_matrix(s: usize, r: usize) -> Result<SignMatrix> {
    if s < 1 {
        return Err(Error::invalid("dimension must be >= 1"));
    }
    if !(s >= 2 || r == 0) || (s >= 2 && r > s - 1) {
        return Err(Error::invalid(format!(
            "r = {r} out of range for s = {s} (need 0 <= r <= s-1)"
        )));
    }
    let mut rows = vec![vec![1i8; s]; s];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 0;
    }
    if r == 1 {
        rows[0][1] = -1;
    } else {
        for i in 0..r {
            for j in 0..r {
                if i != j {
                    rows[i][j] = -1;
                }
            }
        }
    }
    SignMatrix::new(rows)
}

fn permutations(s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..s).collect();
    heap_permute(&mut cur, s, &mut out);
    out
}

fn heap_permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(cur, k - 1, out);
        if k % 2 == 0 {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

/// Lexicographically least matrix among all simultaneous row+column
/// permutations of `m` (flattened row-major comparison).  Idempotent.
pub fn canonical_class(m: &SignMatrix) -> SignMatrix {
    let mut best = m.clone();
    for perm in permutations(m.dim()) {
        let candidate = m.permuted(&perm);
        if candidate.entries < best.entries {
            best = candidate;
        }
    }
    best
}

/// Exact counts of permutation classes of `s x s` sign matrices and of
/// those passing the QR test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub sign_classes: u64,
    pub qr_classes: u64,
}

/// Enumerates all `2^(s^2-s)` sign matrices for `1 <= s <= 5` and counts
/// permutation classes; a matrix is counted when it is its own canonical
/// form, so each class is counted exactly once.
pub fn census(s: usize) -> Result<Census> {
    if s < 1 || s > 5 {
        return Err(Error::invalid(format!(
            "census supports 1 <= s <= 5, got {s}"
        )));
    }
    let perms = permutations(s);
    let offdiag: Vec<(usize, usize)> = (0..s)
        .flat_map(|i| (0..s).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let bits = offdiag.len();
    let mut sign_classes = 0u64;
    let mut qr_classes = 0u64;
    let mut entries = vec![0i8; s * s];
    for code in 0u64..(1u64 << bits) {
        entries.iter_mut().for_each(|e| *e = 0);
        for (b, &(i, j)) in offdiag.iter().enumerate() {
            entries[i * s + j] = if code >> b & 1 == 1 { 1 } else { -1 };
        }
        let m = SignMatrix {
            s,
            entries: entries.clone(),
        };
        // canonical iff no permutation produces a lexicographically
        // smaller flattening
        let mut canonical = true;
        'perm: for perm in &perms {
            for i in 0..s {
                for j in 0..s {
                    let img = m.get(perm[i], perm[j]);
                    let cur = m.get(i, j);
                    if img < cur {
                        canonical = false;
                        break 'perm;
                    }
                    if img > cur {
                        continue 'perm;
                    }
                }
            }
        }
        if canonical {
            sign_classes += 1;
            if qr_test(&m).is_qr {
                qr_classes += 1;
            }
        }
    }
    Ok(Census {
        sign_classes,
        qr_classes,
    })
}

/// All `2^(s^2-s)` sign matrices of dimension `s` (test and census
/// support; keep `s` small).
pub fn all_sign_matrices(s: usize) -> Vec<SignMatrix> {
    let offdiag: Vec<(usize, usize)> = (0..s)
        .flat_map(|i| (0..s).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let bits = offdiag.len();
    (0u64..(1u64 << bits))
        .map(|code| {
            let mut entries = vec![0i8; s * s];
            for (b, &(i, j)) in offdiag.iter().enumerate() {
                entries[i * s + j] = if code >> b & 1 == 1 { 1 } else { -1 };
            }
            SignMatrix { s, entries }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn paper_non_qr() -> SignMatrix {
        SignMatrix::parse("0,-1,-1;-1,0,-1;1,1,0").unwrap()
    }

    #[test]
    fn qr_test_paper_example() {
        let v = qr_test(&paper_non_qr());
        assert!(!v.is_qr);
        assert_eq!(v.diagonal, vec![0, 0, -2]);
    }

    #[test]
    fn qr_test_prime_triple() {
        let m = qr_matrix_of_primes(&[3, 5, 7]).unwrap();
        // direct S^2 oracle
        let mut diag = vec![0i64; 3];
        for i in 0..3 {
            for j in 0..3 {
                diag[i] += m.get(i, j) as i64 * m.get(j, i) as i64;
            }
        }
        let v = qr_test(&m);
        assert_eq!(v.diagonal, diag);
        assert_eq!(v.diagonal, vec![0, 2, 0]);
        assert!(v.is_qr);
        assert_eq!(v.k, Some(2));
    }

    #[test]
    fn qr_test_one_by_one() {
        let m = SignMatrix::new(vec![vec![0]]).unwrap();
        assert!(qr_test(&m).is_qr);
    }

    #[test]
    fn matrix_of_primes_examples() {
        let m = qr_matrix_of_primes(&[3, 5, 7]).unwrap();
        assert_eq!(
            m.rows(),
            vec![vec![0, -1, -1], vec![-1, 0, -1], vec![1, -1, 0]]
        );
        let m2 = qr_matrix_of_primes(&[5, 29]).unwrap();
        assert_eq!(m2.rows(), vec![vec![0, 1], vec![1, 0]]);
        let m3 = qr_matrix_of_primes(&[7]).unwrap();
        assert_eq!(m3.rows(), vec![vec![0]]);
        assert!(qr_matrix_of_primes(&[3, 3]).is_err());
        assert!(qr_matrix_of_primes(&[2, 5]).is_err());
        assert!(qr_matrix_of_primes(&[9, 5]).is_err());
    }

    #[test]
    fn qr_matrices_of_primes_always_pass_the_test() {
        let mut rng = StdRng::seed_from_u64(71);
        let primes: Vec<u64> = primes_up_to(10_000).into_iter().filter(|&p| p > 2).collect();
        for _ in 0..200 {
            let s = rng.gen_range(3..=4usize);
            let mut pick = std::collections::BTreeSet::new();
            while pick.len() < s {
                pick.insert(primes[rng.gen_range(0..primes.len())]);
            }
            let tuple: Vec<u64> = pick.into_iter().collect();
            let m = qr_matrix_of_primes(&tuple).unwrap();
            assert!(qr_test(&m).is_qr, "primes {tuple:?} gave a non-QR verdict");
        }
    }

    #[test]
    fn find_primes_examples() {
        let m = SignMatrix::parse("0,-1;-1,0").unwrap();
        assert_eq!(find_primes_for_sign_matrix(&m, 100), Some(vec![3, 5]));

        assert_eq!(find_primes_for_sign_matrix(&paper_non_qr(), 2000), None);

        let single = SignMatrix::new(vec![vec![0]]).unwrap();
        assert_eq!(find_primes_for_sign_matrix(&single, 10), Some(vec![3]));
    }

    #[test]
    fn found_primes_reproduce_the_matrix() {
        let mut search = SignSearch::new(500);
        for m in all_sign_matrices(3) {
            if let Some(primes) = search.find(&m) {
                assert_eq!(qr_matrix_of_primes(&primes).unwrap(), m);
            }
        }
    }

    #[test]
    fn find_agrees_with_brute_force_oracle() {
        // completeness and lexicographic-least order, against a plain
        // recursive scan, for every 2x2 and 3x3 matrix
        let mut search2 = SignSearch::new(200);
        for m in all_sign_matrices(2) {
            assert_eq!(
                search2.find(&m),
                find_primes_brute_force(&m, 200),
                "matrix {m}"
            );
        }
        let mut search3 = SignSearch::new(150);
        for m in all_sign_matrices(3) {
            assert_eq!(
                search3.find(&m),
                find_primes_brute_force(&m, 150),
                "matrix {m}"
            );
        }
    }

    #[test]
    fn inertial_matrix_examples() {
        let m = inertial_degree_matrix(2, 0).unwrap();
        assert_eq!(m.rows(), vec![vec![0, 1], vec![1, 0]]);
        assert!(qr_test(&m).is_qr);

        let m = inertial_degree_matrix(3, 2).unwrap();
        assert!(qr_test(&m).is_qr);
        assert!(m.is_symmetric());
        // exactly r rows contain a -1
        let rows_with_minus = m
            .rows()
            .iter()
            .filter(|row| row.iter().any(|&e| e == -1))
            .count();
        assert_eq!(rows_with_minus, 2);

        assert!(inertial_degree_matrix(3, 3).is_err());
        assert!(inertial_degree_matrix(1, 1).is_err());
    }

    #[test]
    fn inertial_matrix_row_counts_and_qr() {
        for s in 1..=5usize {
            for r in 0..s.max(1) {
                if s >= 2 && r > s - 1 {
                    continue;
                }
                let m = inertial_degree_matrix(s, r).unwrap();
                assert!(qr_test(&m).is_qr, "s={s} r={r} not QR");
                let rows_with_minus = m
                    .rows()
                    .iter()
                    .filter(|row| row.iter().any(|&e| e == -1))
                    .count();
                assert_eq!(rows_with_minus, r, "s={s} r={r}");
            }
        }
    }

    #[test]
    fn canonical_class_orbit_invariance() {
        let mut rng = StdRng::seed_from_u64(97);
        for m in all_sign_matrices(3) {
            let canon = canonical_class(&m);
            assert_eq!(canonical_class(&canon), canon, "idempotence");
            // random permutation conjugate lands in the same class
            let mut perm: Vec<usize> = (0..3).collect();
            for i in (1..3).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            assert_eq!(canonical_class(&m.permuted(&perm)), canon);
        }
    }

    #[test]
    fn canonical_class_enumerated_orbits_s2() {
        // full orbit enumeration oracle for s = 2: orbits are
        // {(+,+)}, {(-,-)}, {(+,-), (-,+)}
        let ms = all_sign_matrices(2);
        let canon: std::collections::BTreeSet<_> =
            ms.iter().map(|m| canonical_class(m).to_string()).collect();
        assert_eq!(canon.len(), 3);
        for m in &ms {
            if m.is_symmetric() {
                assert_eq!(&canonical_class(m), m, "symmetric 2x2 is its own form");
            }
        }
    }

    #[test]
    fn census_small() {
        assert_eq!(
            census(1).unwrap(),
            Census {
                sign_classes: 1,
                qr_classes: 1
            }
        );
        let c2 = census(2).unwrap();
        // all classes QR at s <= 2
        assert_eq!(c2.sign_classes, c2.qr_classes);
        let c3 = census(3).unwrap();
        assert!(c3.qr_classes < c3.sign_classes);
        assert!(census(6).is_err());
        assert!(census(0).is_err());
    }

    #[test]
    fn census_matches_orbit_enumeration_oracle() {
        for s in 1..=3usize {
            let mut canon = std::collections::BTreeSet::new();
            let mut canon_qr = std::collections::BTreeSet::new();
            for m in all_sign_matrices(s) {
                let c = canonical_class(&m);
                if qr_test(&c).is_qr {
                    canon_qr.insert(c.clone());
                }
                canon.insert(c);
            }
            let got = census(s).unwrap();
            assert_eq!(got.sign_classes, canon.len() as u64, "s={s}");
            assert_eq!(got.qr_classes, canon_qr.len() as u64, "s={s}");
        }
    }

    #[test]
    fn census_frozen_values() {
        // frozen from the orbit-enumeration oracle above
        let c2 = census(2).unwrap();
        assert_eq!((c2.sign_classes, c2.qr_classes), (3, 3));
        let c3 = census(3).unwrap();
        assert_eq!((c3.sign_classes, c3.qr_classes), (16, 10));
    }

    #[test]
    fn qr_test_permutation_invariant_s3() {
        for m in all_sign_matrices(3) {
            let v = qr_test(&m).is_qr;
            for perm in permutations(3) {
                assert_eq!(qr_test(&m.permuted(&perm)).is_qr, v);
            }
        }
    }

    #[test]
    fn symmetric_matrices_pass_qr_test() {
        for s in 1..=4usize {
            for m in all_sign_matrices(s) {
                if m.is_symmetric() {
                    assert!(qr_test(&m).is_qr, "symmetric {m} must be QR");
                }
            }
        }
    }

    #[test]
    fn parse_display_round_trip() {
        let text = "0,-1,-1;-1,0,-1;1,1,0";
        let m = SignMatrix::parse(text).unwrap();
        assert_eq!(m.to_string(), text);
        assert!(SignMatrix::parse("0,1;1,1").is_err());
        assert!(SignMatrix::parse("0,2;1,0").is_err());
        assert!(SignMatrix::parse("").is_err());
    }
}
