//! Finite groups by Cayley table, with element indices as the working
//! representation.  The identity always sits at index 0 and construction
//! orders are deterministic, so every downstream enumeration is
//! reproducible.

use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::Arc;

/// Hard cap on group order (the closure cap for permutation generators).
pub const MAX_ORDER: usize = 10_000;

/// Maximum permutation degree accepted by [`FiniteGroup::from_generators`].
pub const MAX_DEGREE: usize = 12;

/// A permutation given by its image vector (0-based points).
pub type Perm = Vec<u8>;

pub fn perm_identity(degree: usize) -> Perm {
    (0..degree as u8).collect()
}

/// `(a*b)(x) = a(b(x))`: apply `b` first.  This matches the convention in
/// which `(1 2)(3 6) * (2 6 7)(3 4 5)` equals the 7-cycle `(1 2 3 4 5 6 7)`.
pub fn perm_compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

/// Parses cycle notation like `(1 2)(3 6)` (1-based points, spaces or
/// commas inside a cycle).  The empty string and `()` denote the identity.
pub fn perm_from_cycles(text: &str, degree: usize) -> Result<Perm> {
    let mut perm = perm_identity(degree);
    let mut used = vec![false; degree];
    let body = text.trim();
    if body.is_empty() || body == "()" || body == "1" {
        return Ok(perm);
    }
    let mut rest = body;
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| Error::invalid(format!("expected '(' in cycles {text:?}")))?;
        let close = rest[open..]
            .find(')')
            .ok_or_else(|| Error::invalid(format!("unclosed cycle in {text:?}")))?
            + open;
        let cycle: Vec<usize> = rest[open + 1..close]
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad point {t:?} in {text:?}")))
            })
            .collect::<Result<_>>()?;
        for &pt in &cycle {
            if pt == 0 || pt > degree {
                return Err(Error::invalid(format!(
                    "point {pt} outside 1..={degree} in {text:?}"
                )));
            }
        }
        for w in 0..cycle.len() {
            let from = cycle[w] - 1;
            let to = cycle[(w + 1) % cycle.len()] - 1;
            if used[from] {
                return Err(Error::invalid(format!("point repeated in {text:?}")));
            }
            used[from] = true;
            perm[from] = to as u8;
        }
        rest = &rest[close + 1..];
    }
    Ok(perm)
}

/// Renders a permutation in 1-based cycle notation; identity prints `()`.
pub fn perm_to_cycles(p: &Perm) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// A finite group of order `<= MAX_ORDER` with full Cayley table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    elem_order: Vec<u32>,
    label: Option<String>,
    perms: Option<Vec<Perm>>,
}

impl FiniteGroup {
    fn finish(
        order: usize,
        table: Vec<u16>,
        label: Option<String>,
        perms: Option<Vec<Perm>>,
    ) -> Result<Self> {
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        // identity law at index 0
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::invalid("index 0 is not an identity"));
            }
        }
        let mut inverse = vec![u16::MAX; order];
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| at(a, b) == 0 && at(b, a) == 0)
                .ok_or_else(|| Error::invalid(format!("element {a} has no inverse")))?;
            inverse[a] = inv as u16;
        }
        // associativity spot check on pseudo-random triples
        let mut state = 0x9e3779b97f4a7c15u64 ^ (order as u64);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as usize
        };
        for _ in 0..64.min(order * order) {
            let (a, b, c) = (next() % order, next() % order, next() % order);
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(Error::invalid("multiplication table is not associative"));
            }
        }
        let mut elem_order = vec![0u32; order];
        for a in 0..order {
            let mut x = a;
            let mut k = 1u32;
            while x != 0 {
                x = at(x, a);
                k += 1;
            }
            elem_order[a] = k;
        }
        Ok(FiniteGroup {
            order,
            table,
            inverse,
            elem_order,
            label,
            perms,
        })
    }

    /// Closure of a set of permutations on a common domain of at most
    /// [`MAX_DEGREE`] points; errors when the closure exceeds [`MAX_ORDER`].
    pub fn from_generators(gens: &[Perm]) -> Result<Self> {
        let degree = gens.iter().map(|g| g.len()).max().unwrap_or(1);
        if degree > MAX_DEGREE {
            return Err(Error::invalid(format!(
                "permutation degree {degree} exceeds {MAX_DEGREE}"
            )));
        }
        let mut gens_padded: Vec<Perm> = Vec::new();
        for g in gens {
            let mut p = g.clone();
            let mut check = p.clone();
            check.sort_unstable();
            if check != perm_identity(p.len()) {
                return Err(Error::invalid("image vector is not a permutation"));
            }
            p.extend((g.len() as u8)..(degree as u8));
            gens_padded.push(p);
        }
        let id = perm_identity(degree);
        let mut elems: Vec<Perm> = vec![id.clone()];
        let mut index: HashMap<Perm, u16> = HashMap::new();
        index.insert(id, 0);
        let mut head = 0usize;
        while head < elems.len() {
            let cur = elems[head].clone();
            head += 1;
            for g in &gens_padded {
                let prod = perm_compose(&cur, g);
                if !index.contains_key(&prod) {
                    if elems.len() >= MAX_ORDER {
                        return Err(Error::resource(format!(
                            "closure exceeds {MAX_ORDER} elements"
                        )));
                    }
                    index.insert(prod.clone(), elems.len() as u16);
                    elems.push(prod);
                }
            }
        }
        let order = elems.len();
        let mut table = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                let prod = perm_compose(&elems[a], &elems[b]);
                table[a * order + b] = index[&prod];
            }
        }
        Self::finish(order, table, None, Some(elems))
    }

    /// The cyclic group of order `n` (addition mod n).
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::resource(format!("cyclic order {n} out of range")));
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = ((a + b) % n) as u16;
            }
        }
        Self::finish(n, table, Some(format!("C{n}")), None)
    }

    /// Direct product; element `(a, b)` has index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let order = a.order * b.order;
        if order > MAX_ORDER {
            return Err(Error::resource(format!(
                "direct product order {order} exceeds {MAX_ORDER}"
            )));
        }
        let mut table = vec![0u16; order * order];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        let i = x1 * b.order + y1;
                        let j = x2 * b.order + y2;
                        let px = a.mul(x1 as u16, x2 as u16) as usize;
                        let py = b.mul(y1 as u16, y2 as u16) as usize;
                        table[i * order + j] = (px * b.order + py) as u16;
                    }
                }
            }
        }
        Self::finish(order, table, None, None)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = Some(label.into());
    }

    /// Permutation images of the elements, when built from permutations.
    pub fn perms(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub fn identity(&self) -> u16 {
        0
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inverse[a as usize]
    }

    #[inline]
    pub fn conj(&self, g: u16, x: u16) -> u16 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elem_order(&self, a: u16) -> u32 {
        self.elem_order[a as usize]
    }

    pub fn pow(&self, a: u16, mut e: i64) -> u16 {
        let o = self.elem_order(a) as i64;
        e = e.rem_euclid(o);
        let mut acc = 0u16;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as u16).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted element set of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[u16]) -> Vec<u16> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut elems = vec![0u16];
        let mut head = 0usize;
        while head < elems.len() {
            let cur = elems[head];
            head += 1;
            for &g in gens {
                let prod = self.mul(cur, g);
                if !in_set[prod as usize] {
                    in_set[prod as usize] = true;
                    elems.push(prod);
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    /// Smallest normal subgroup containing `elems` (sorted element set).
    pub fn normal_closure(&self, elems: &[u16]) -> Vec<u16> {
        let mut conj_closed: Vec<u16> = Vec::new();
        let mut seen = vec![false; self.order];
        for &x in elems {
            for g in 0..self.order as u16 {
                let c = self.conj(g, x);
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    conj_closed.push(c);
                }
            }
        }
        self.subgroup_generated(&conj_closed)
    }

    /// Elements normalizing the subgroup `sub` (given as a sorted set).
    pub fn normalizer(&self, sub: &[u16]) -> Vec<u16> {
        let mut member = vec![false; self.order];
        for &x in sub {
            member[x as usize] = true;
        }
        (0..self.order as u16)
            .filter(|&g| sub.iter().all(|&x| member[self.conj(g, x) as usize]))
            .collect()
    }

    pub fn is_normal(&self, sub: &[u16]) -> bool {
        self.normalizer(sub).len() == self.order
    }

    /// Quotient by a normal subgroup: returns the quotient group and the
    /// projection map from element index to coset index.  Coset indices
    /// are ordered by smallest member, so the identity coset is 0.
    pub fn quotient(&self, normal: &[u16]) -> Result<(FiniteGroup, Vec<u16>)> {
        if !self.is_normal(normal) {
            return Err(Error::invalid("subgroup is not normal"));
        }
        let mut coset_min = vec![u16::MAX; self.order];
        for x in 0..self.order as u16 {
            let m = normal.iter().map(|&n| self.mul(x, n)).min().unwrap();
            coset_min[x as usize] = m;
        }
        let mut reps: Vec<u16> = coset_min.clone();
        reps.sort_unstable();
        reps.dedup();
        let rep_index: HashMap<u16, u16> = reps
            .iter()
            .enumerate()
            .map(|(i, &r)| (r, i as u16))
            .collect();
        let proj: Vec<u16> = coset_min.iter().map(|r| rep_index[r]).collect();
        let q = reps.len();
        let mut table = vec![0u16; q * q];
        for (i, &ri) in reps.iter().enumerate() {
            for (j, &rj) in reps.iter().enumerate() {
                table[i * q + j] = proj[self.mul(ri, rj) as usize];
            }
        }
        let qg = Self::finish(q, table, None, None)?;
        Ok((qg, proj))
    }

    /// The subgroup `sub` as a group in its own right, plus the embedding
    /// map (new index -> old index, which is just the sorted `sub` list).
    pub fn subgroup_as_group(&self, sub: &[u16]) -> Result<(FiniteGroup, Vec<u16>)> {
        let mut elems = sub.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let pos: HashMap<u16, u16> = elems
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u16))
            .collect();
        let n = elems.len();
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul(elems[i], elems[j]);
                let &k = pos
                    .get(&prod)
                    .ok_or_else(|| Error::invalid("element set is not closed"))?;
                table[i * n + j] = k;
            }
        }
        let g = Self::finish(n, table, None, None)?;
        Ok((g, elems))
    }

    /// Greedy generating tuple: repeatedly append the least element not in
    /// the current span.  Errors when more than `cap` generators are needed.
    pub fn generating_tuple(&self, cap: usize) -> Result<Vec<u16>> {
        let mut gens: Vec<u16> = Vec::new();
        let mut span = vec![0u16];
        while span.len() < self.order {
            let next = (0..self.order as u16)
                .find(|x| span.binary_search(x).is_err())
                .expect("span smaller than group");
            gens.push(next);
            span = self.subgroup_generated(&gens);
            if gens.len() > cap {
                return Err(Error::resource(format!(
                    "no generating tuple of <= {cap} elements found greedily"
                )));
            }
        }
        Ok(gens)
    }

    /// Attempts to extend `gens -> images` to a homomorphism by closure;
    /// returns the full map when consistent, `None` otherwise.
    fn extend_hom(
        &self,
        target: &FiniteGroup,
        gens: &[u16],
        images: &[u16],
    ) -> Option<Vec<u16>> {
        let mut map: Vec<u16> = vec![u16::MAX; self.order];
        map[0] = 0;
        let mut work: Vec<u16> = vec![0];
        let mut head = 0;
        while head < work.len() {
            let x = work[head];
            head += 1;
            for (g, &h) in gens.iter().zip(images) {
                let xg = self.mul(x, *g);
                let img = target.mul(map[x as usize], h);
                let slot = &mut map[xg as usize];
                if *slot == u16::MAX {
                    *slot = img;
                    work.push(xg);
                } else if *slot != img {
                    return None;
                }
            }
        }
        if work.len() != self.order {
            return None; // gens did not generate
        }
        Some(map)
    }

    /// All isomorphisms `self -> target` found by mapping a greedy
    /// generating tuple onto same-order elements and closing.
    pub fn isomorphisms_to(&self, target: &FiniteGroup) -> Result<Vec<Vec<u16>>> {
        if self.order != target.order {
            return Ok(Vec::new());
        }
        let mut mine: Vec<u32> = self.elem_order.clone();
        let mut theirs: Vec<u32> = target.elem_order.clone();
        mine.sort_unstable();
        theirs.sort_unstable();
        if mine != theirs {
            return Ok(Vec::new());
        }
        let gens = self.generating_tuple(3)?;
        let mut out = Vec::new();
        let candidates: Vec<Vec<u16>> = gens
            .iter()
            .map(|&g| {
                (0..target.order as u16)
                    .filter(|&h| target.elem_order(h) == self.elem_order(g))
                    .collect()
            })
            .collect();
        let mut images = vec![0u16; gens.len()];
        self.iso_backtrack(target, &gens, &candidates, 0, &mut images, &mut out);
        Ok(out)
    }

    fn iso_backtrack(
        &self,
        target: &FiniteGroup,
        gens: &[u16],
        candidates: &[Vec<u16>],
        depth: usize,
        images: &mut Vec<u16>,
        out: &mut Vec<Vec<u16>>,
    ) {
        if depth == gens.len() {
            if let Some(map) = self.extend_hom(target, gens, images) {
                let mut seen = vec![false; self.order];
                let bij = map.iter().all(|&m| {
                    let fresh = !seen[m as usize];
                    seen[m as usize] = true;
                    fresh
                });
                if bij {
                    out.push(map);
                }
            }
            return;
        }
        for &c in &candidates[depth] {
            images[depth] = c;
            self.iso_backtrack(target, gens, candidates, depth + 1, images, out);
        }
    }

    /// The full automorphism group as permutations of element indices.
    pub fn automorphisms(&self) -> Result<Vec<Vec<u16>>> {
        if self.order > 200 {
            return Err(Error::resource(format!(
                "automorphism search capped at order 200, got {}",
                self.order
            )));
        }
        self.isomorphisms_to(self)
    }

    /// One isomorphism to `target`, or `None`.
    pub fn isomorphism_to(&self, target: &FiniteGroup) -> Result<Option<Vec<u16>>> {
        Ok(self.isomorphisms_to(target)?.into_iter().next())
    }

    /// All normal subgroups as sorted element sets (including trivial and
    /// the whole group), deterministically ordered by (size, elements).
    pub fn normal_subgroups(&self) -> Vec<Vec<u16>> {
        use std::collections::BTreeSet;
        let mut set: BTreeSet<Vec<u16>> = BTreeSet::new();
        set.insert(vec![0u16]);
        for x in 1..self.order as u16 {
            set.insert(self.normal_closure(&[x]));
        }
        // close under join
        loop {
            let snapshot: Vec<Vec<u16>> = set.iter().cloned().collect();
            let before = set.len();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let mut union: Vec<u16> = snapshot[i]
                        .iter()
                        .chain(snapshot[j].iter())
                        .copied()
                        .collect();
                    union.sort_unstable();
                    union.dedup();
                    set.insert(self.subgroup_generated(&union));
                }
            }
            if set.len() == before {
                break;
            }
        }
        let mut out: Vec<Vec<u16>> = set.into_iter().collect();
        out.sort_by_key(|s| (s.len(), s.clone()));
        out
    }

    /// Commutator subgroup (always normal).
    pub fn commutator_subgroup(&self) -> Vec<u16> {
        let mut gens: Vec<u16> = Vec::new();
        let mut seen = vec![false; self.order];
        for a in 0..self.order as u16 {
            for b in 0..self.order as u16 {
                let c = self.mul(
                    self.mul(a, b),
                    self.mul(self.inv(a), self.inv(b)),
                );
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    gens.push(c);
                }
            }
        }
        self.subgroup_generated(&gens)
    }

    /// Internal direct-sum basis of an abelian group: elements whose cyclic
    /// spans decompose the group, with orders forming a divisibility chain
    /// (largest first).  Found by peeling a maximal-order element and
    /// lifting a basis of the quotient.
    pub fn abelian_basis(&self) -> Result<Vec<(u32, u16)>> {
        if !self.is_abelian() {
            return Err(Error::invalid("abelian_basis needs an abelian group"));
        }
        if self.order == 1 {
            return Ok(Vec::new());
        }
        let exp = (1..self.order as u16)
            .map(|x| self.elem_order(x))
            .max()
            .unwrap();
        let x = (1..self.order as u16)
            .find(|&e| self.elem_order(e) == exp)
            .unwrap();
        let span = self.subgroup_generated(&[x]);
        if span.len() == self.order {
            return Ok(vec![(exp, x)]);
        }
        let (q, proj) = self.quotient(&span)?;
        let qbasis = q.abelian_basis()?;
        let mut basis = vec![(exp, x)];
        for (m, qy) in qbasis {
            // lift: pick any preimage y of the coset, then correct by a
            // power of x so the lift has order exactly m
            let y = (0..self.order as u16)
                .find(|&e| proj[e as usize] == qy)
                .unwrap();
            let ym = self.pow(y, m as i64);
            // ym lies in <x>; write ym = x^t
            let t = (0..exp as i64)
                .find(|&t| self.pow(x, t) == ym)
                .expect("lift power must land in the peeled span");
            debug_assert_eq!(t % m as i64, 0, "maximal-order peel guarantees m | t");
            let corrected = self.mul(y, self.pow(x, -(t / m as i64)));
            debug_assert_eq!(self.elem_order(corrected), m);
            basis.push((m, corrected));
        }
        Ok(basis)
    }

    /// Minimal number of elements normally generating the group: computed
    /// from the invariant-factor count of the abelianization, with the
    /// perfect-group case forced to 1.
    pub fn rank(&self) -> usize {
        if self.order == 1 {
            return 0;
        }
        let derived = self.commutator_subgroup();
        let (ab, _) = self.quotient(&derived).expect("derived subgroup is normal");
        let factors = ab.abelian_basis().expect("abelianization is abelian").len();
        factors.max(1)
    }

    /// Exhaustive minimal normal-generation count (cross-validation oracle
    /// for [`FiniteGroup::rank`]; exponential, keep the order small).
    pub fn rank_by_search(&self) -> usize {
        if self.order == 1 {
            return 0;
        }
        for k in 1..=3usize {
            if self.search_generating_sets(k, 0, &mut Vec::new()) {
                return k;
            }
        }
        4 // not reached for the catalog scale
    }

    fn search_generating_sets(&self, k: usize, from: u16, chosen: &mut Vec<u16>) -> bool {
        if chosen.len() == k {
            return self.normal_closure(chosen).len() == self.order;
        }
        for x in from..self.order as u16 {
            chosen.push(x);
            if self.search_generating_sets(k, x + 1, chosen) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// A subgroup of a specific [`FiniteGroup`], stored as a sorted element
/// set that is validated closed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    elems: Vec<u16>,
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, elems: &[u16]) -> Result<Self> {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first() != Some(&0) {
            return Err(Error::invalid("subgroup must contain the identity"));
        }
        for &a in &sorted {
            if a as usize >= group.order() {
                return Err(Error::invalid("element index out of range"));
            }
            if sorted.binary_search(&group.inv(a)).is_err() {
                return Err(Error::invalid("subgroup not closed under inverse"));
            }
            for &b in &sorted {
                if sorted.binary_search(&group.mul(a, b)).is_err() {
                    return Err(Error::invalid("subgroup not closed under product"));
                }
            }
        }
        Ok(Subgroup { elems: sorted })
    }

    pub fn generated(group: &FiniteGroup, gens: &[u16]) -> Self {
        Subgroup {
            elems: group.subgroup_generated(gens),
        }
    }

    pub fn trivial() -> Self {
        Subgroup { elems: vec![0] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup {
            elems: (0..group.order() as u16).collect(),
        }
    }

    pub fn elems(&self) -> &[u16] {
        &self.elems
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, x: u16) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elems.iter().all(|&x| other.contains(x))
    }

    pub fn is_cyclic(&self, group: &FiniteGroup) -> bool {
        self.elems
            .iter()
            .any(|&x| group.elem_order(x) as usize == self.order())
    }

    /// Generators of minimal count: for cyclic subgroups, the elements of
    /// full order.
    pub fn cyclic_generators(&self, group: &FiniteGroup) -> Vec<u16> {
        self.elems
            .iter()
            .copied()
            .filter(|&x| group.elem_order(x) as usize == self.order())
            .collect()
    }

    pub fn apply_map(&self, map: &[u16]) -> Subgroup {
        let mut elems: Vec<u16> = self.elems.iter().map(|&x| map[x as usize]).collect();
        elems.sort_unstable();
        elems.dedup();
        Subgroup { elems }
    }
}

/// Shared handle used by configuration types.
pub type GroupRef = Arc<FiniteGroup>;
