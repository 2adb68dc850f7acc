//! Abelian fields presented inside cyclotomic fields of squarefree odd
//! conductor.
//!
//! Tame ramification forces conductor exponent one at every ramified
//! prime, so every field this crate constructs sits inside `Q(zeta_m)`
//! with `m = l_1 ... l_s` squarefree.  A field is stored as the character
//! data of the quotient `(Z/mZ)^* -> Gal(F/Q)`: for each conductor prime
//! `l_i`, the image of the smallest primitive root `g_i mod l_i`.  That
//! image generates the inertia group at `l_i`, and the Frobenius of any
//! unramified integer is the product of per-prime images at its
//! power-residue indices, so all decomposition data is exact unit-group
//! arithmetic.

use crate::arith::{self, is_prime, pow_mod, small_dlog};
use crate::smallgroup::{FiniteGroup, GroupRef, Subgroup, TameConfig};
use crate::{Error, Result};
use std::sync::Arc;

/// A subfield of `Q(zeta_m)`, `m` squarefree odd, by unit-group character
/// data.  The Galois group is an explicit abelian [`FiniteGroup`].
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    primes: Vec<u64>,
    gal: GroupRef,
    images: Vec<u16>,
}

/// Decomposition data of a rational prime in the field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionData {
    pub e: u64,
    pub f: u64,
    /// Inertia subgroup of the Galois group.
    pub t: Subgroup,
    /// Decomposition subgroup: generated by inertia and Frobenius.
    pub z: Subgroup,
    /// A Frobenius representative (canonical modulo inertia).
    pub frobenius: u16,
}

impl CyclotomicField {
    /// Builds a field from conductor primes, an abelian Galois group and
    /// per-prime images of the smallest primitive roots.  Primes whose
    /// image is the identity do not ramify and are dropped from the
    /// support, so the stored modulus is the exact conductor.
    pub fn new(primes: Vec<u64>, gal: GroupRef, images: Vec<u16>) -> Result<Self> {
        if primes.len() != images.len() {
            return Err(Error::invalid("one image per conductor prime required"));
        }
        if !gal.is_abelian() {
            return Err(Error::invalid("Galois group must be abelian"));
        }
        let mut kept_primes = Vec::new();
        let mut kept_images = Vec::new();
        for (&p, &a) in primes.iter().zip(&images) {
            if p == 2 {
                return Err(Error::unsupported("even conductor primes are rejected"));
            }
            if !is_prime(p) {
                return Err(Error::invalid(format!("{p} is not prime")));
            }
            if kept_primes.contains(&p) {
                return Err(Error::invalid(format!("repeated conductor prime {p}")));
            }
            if (a as usize) >= gal.order() {
                return Err(Error::invalid("image index out of range"));
            }
            if (p - 1) % gal.elem_order(a) as u64 != 0 {
                return Err(Error::invalid(format!(
                    "inertia order {} does not divide {p} - 1",
                    gal.elem_order(a)
                )));
            }
            if a != gal.identity() {
                kept_primes.push(p);
                kept_images.push(a);
            }
        }
        if gal.subgroup_generated(&kept_images).len() != gal.order() {
            return Err(Error::invalid(
                "inertia images do not generate the Galois group",
            ));
        }
        Ok(CyclotomicField {
            primes: kept_primes,
            gal,
            images: kept_images,
        })
    }

    /// `K_n(p)`: the unique degree-`n` subfield of the `p`-th cyclotomic
    /// field, for `p = 1 mod n`.
    pub fn k_n_p(p: u64, n: u64) -> Result<Self> {
        if !is_prime(p) || p == 2 {
            return Err(Error::invalid(format!("{p} is not an odd prime")));
        }
        if n == 0 || (p - 1) % n != 0 {
            return Err(Error::invalid(format!("n = {n} does not divide {p} - 1")));
        }
        let gal = Arc::new(FiniteGroup::cyclic(n as usize)?);
        let image = if n == 1 { 0u16 } else { 1u16 };
        CyclotomicField::new(vec![p], gal, vec![image])
    }

    /// The full cyclotomic field `Q(zeta_m)` for squarefree odd `m` given
    /// by its prime factors.
    pub fn full_cyclotomic(primes: &[u64]) -> Result<Self> {
        let mut field = CyclotomicField::k_n_p(primes[0], primes[0] - 1)?;
        for &p in &primes[1..] {
            field = composite(&field, &CyclotomicField::k_n_p(p, p - 1)?)?;
        }
        Ok(field)
    }

    pub fn conductor_primes(&self) -> &[u64] {
        &self.primes
    }

    /// The conductor `m` (1 for the rational field).
    pub fn modulus(&self) -> u128 {
        self.primes.iter().map(|&p| p as u128).product()
    }

    pub fn degree(&self) -> usize {
        self.gal.order()
    }

    pub fn galois_group(&self) -> &GroupRef {
        &self.gal
    }

    pub fn inertia_images(&self) -> &[u16] {
        &self.images
    }

    /// Ramified primes (a conductor prime always ramifies after the
    /// constructor's normalization).
    pub fn ramified_primes(&self) -> Vec<u64> {
        self.primes.clone()
    }

    /// Image in the Galois group of the residue of `x` at conductor prime
    /// index `i` (the local component of the reciprocity map).
    fn local_image(&self, i: usize, x: u64) -> Result<u16> {
        let l = self.primes[i];
        let a = self.images[i];
        let o = self.gal.elem_order(a) as u64;
        let x = x % l;
        if x == 0 {
            return Err(Error::invalid(format!("{x} not a unit mod {l}")));
        }
        if o == 1 {
            return Ok(self.gal.identity());
        }
        let g = arith::primitive_root(l)?;
        let zeta = pow_mod(g, (l - 1) / o, l);
        let target = pow_mod(x, (l - 1) / o, l);
        let idx = small_dlog(zeta, target, o, l)
            .ok_or_else(|| Error::invalid("projected residue outside the cyclic image"))?;
        Ok(self.gal.pow(a, idx as i64))
    }

    /// Frobenius element of an integer coprime to the conductor: the
    /// Galois-group image of its residue class.
    pub fn frobenius_of_unramified(&self, q: u64) -> Result<u16> {
        let mut acc = self.gal.identity();
        for i in 0..self.primes.len() {
            if q % self.primes[i] == 0 {
                return Err(Error::invalid(format!(
                    "{q} shares the conductor prime {}",
                    self.primes[i]
                )));
            }
            acc = self.gal.mul(acc, self.local_image(i, q)?);
        }
        Ok(acc)
    }

    /// Inertia subgroup at `p`: generated by the local image when `p`
    /// divides the conductor, trivial otherwise.
    pub fn inertia_group(&self, p: u64) -> Subgroup {
        match self.primes.iter().position(|&l| l == p) {
            Some(i) => Subgroup::generated(&self.gal, &[self.images[i]]),
            None => Subgroup::trivial(),
        }
    }

    /// Full decomposition data of a rational prime.  Conductors are odd,
    /// so `p = 2` is always unramified here and its Frobenius data is
    /// exact like any other prime's.
    pub fn decomposition_data(&self, p: u64) -> Result<DecompositionData> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        let g = self.gal.as_ref();
        if let Some(i) = self.primes.iter().position(|&l| l == p) {
            let t = Subgroup::generated(g, &[self.images[i]]);
            // Frobenius: product of the other local images at p
            let mut fr = g.identity();
            for j in 0..self.primes.len() {
                if j != i {
                    fr = g.mul(fr, self.local_image(j, p)?);
                }
            }
            let mut gens: Vec<u16> = t.elems().to_vec();
            gens.push(fr);
            let z = Subgroup::generated(g, &gens);
            // f = order of the Frobenius coset in Z/T
            let mut f = 1u64;
            let mut cur = fr;
            while !t.contains(cur) {
                cur = g.mul(cur, fr);
                f += 1;
            }
            let e = t.order() as u64;
            debug_assert_eq!(e * f, z.order() as u64);
            Ok(DecompositionData {
                e,
                f,
                t,
                z,
                frobenius: fr,
            })
        } else {
            let fr = self.frobenius_of_unramified(p)?;
            let z = Subgroup::generated(g, &[fr]);
            Ok(DecompositionData {
                e: 1,
                f: g.elem_order(fr) as u64,
                t: Subgroup::trivial(),
                z,
                frobenius: fr,
            })
        }
    }

    /// Materializes the subgroup `H <= (Z/mZ)^*` fixing the field, as
    /// sorted least residues; `None` when the conductor exceeds `cap`.
    pub fn subgroup_residues(&self, cap: u64) -> Option<Vec<u64>> {
        let m = self.modulus();
        if m > cap as u128 || m == 0 {
            return None;
        }
        let m = m as u64;
        let mut out = Vec::new();
        for a in 1..m.max(2) {
            if arith::gcd(a, m) != 1 {
                continue;
            }
            let img = self.frobenius_of_unramified(a).ok()?;
            if img == self.gal.identity() {
                out.push(a);
            }
        }
        if m == 1 {
            out.push(0); // degenerate modulus: the trivial unit group
        }
        Some(out)
    }

    /// Extracts the tame decomposition configuration of the field, with
    /// inertia/decomposition pairs listed in the order of `prime_order`,
    /// which must be exactly the ramified primes.
    pub fn extract_config(&self, prime_order: &[u64]) -> Result<TameConfig> {
        let mut claimed = prime_order.to_vec();
        claimed.sort_unstable();
        claimed.dedup();
        let mut actual = self.ramified_primes();
        actual.sort_unstable();
        if claimed != actual || claimed.len() != prime_order.len() {
            return Err(Error::invalid(format!(
                "prime order {prime_order:?} does not match the ramified set {actual:?}"
            )));
        }
        let pairs = prime_order
            .iter()
            .map(|&p| {
                let d = self.decomposition_data(p)?;
                Ok((d.t, d.z))
            })
            .collect::<Result<Vec<_>>>()?;
        TameConfig::new(self.gal.clone(), pairs)
    }

    /// Searches for an isomorphism of the Galois group onto the target
    /// configuration's group carrying this field's inertia/decomposition
    /// pairs onto the target pairs (under some assignment of ramified
    /// primes to indices).  Returns the witness, or `None`.
    pub fn verify_realization(&self, target: &TameConfig) -> Result<Option<RealizationWitness>> {
        let tg = target.group();
        if tg.order() != self.degree() || !tg.is_abelian() {
            return Ok(None);
        }
        let ram = self.ramified_primes();
        if ram.len() != target.s() {
            return Ok(None);
        }
        let mine: Vec<(Subgroup, Subgroup)> = ram
            .iter()
            .map(|&p| {
                let d = self.decomposition_data(p)?;
                Ok((d.t, d.z))
            })
            .collect::<Result<Vec<_>>>()?;
        for iso in self.gal.isomorphisms_to(tg)? {
            // greedy multiset match of mapped pairs against target pairs
            let mapped: Vec<(Subgroup, Subgroup)> = mine
                .iter()
                .map(|(t, z)| (t.apply_map(&iso), z.apply_map(&iso)))
                .collect();
            let mut assignment: Vec<usize> = Vec::with_capacity(ram.len());
            let mut used = vec![false; target.s()];
            let mut ok = true;
            for pair in &mapped {
                match target
                    .pairs()
                    .iter()
                    .enumerate()
                    .find(|(k, tp)| !used[*k] && *tp == pair)
                {
                    Some((k, _)) => {
                        used[k] = true;
                        assignment.push(k);
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return Ok(Some(RealizationWitness {
                    prime_to_index: ram.iter().copied().zip(assignment).collect(),
                    isomorphism: iso,
                }));
            }
        }
        Ok(None)
    }
}

/// Witness that a field realizes a configuration: which ramified prime
/// plays which index, and the group isomorphism used.
#[derive(Debug, Clone)]
pub struct RealizationWitness {
    pub prime_to_index: Vec<(u64, usize)>,
    pub isomorphism: Vec<u16>,
}

/// Composite of two fields with equal or disjoint conductor support.
pub fn composite(f1: &CyclotomicField, f2: &CyclotomicField) -> Result<CyclotomicField> {
    let s1: std::collections::BTreeSet<u64> = f1.primes.iter().copied().collect();
    let s2: std::collections::BTreeSet<u64> = f2.primes.iter().copied().collect();
    let disjoint = s1.is_disjoint(&s2);
    if !disjoint && s1 != s2 {
        return Err(Error::unsupported(
            "composite needs equal or disjoint conductor supports",
        ));
    }
    let prod = Arc::new(FiniteGroup::direct_product(&f1.gal, &f2.gal)?);
    let pair_index =
        |a: u16, b: u16| -> u16 { a * f2.gal.order() as u16 + b };
    let union: Vec<u64> = if disjoint {
        f1.primes.iter().chain(f2.primes.iter()).copied().collect()
    } else {
        f1.primes.clone()
    };
    let joint: Vec<u16> = union
        .iter()
        .map(|&p| {
            let a = f1
                .primes
                .iter()
                .position(|&q| q == p)
                .map(|i| f1.images[i])
                .unwrap_or(0);
            let b = f2
                .primes
                .iter()
                .position(|&q| q == p)
                .map(|i| f2.images[i])
                .unwrap_or(0);
            pair_index(a, b)
        })
        .collect();
    // restrict to the subgroup the joint images generate
    let sub = prod.subgroup_generated(&joint);
    let (gal, embedding) = prod.subgroup_as_group(&sub)?;
    let images: Vec<u16> = joint
        .iter()
        .map(|x| embedding.binary_search(x).expect("image in span") as u16)
        .collect();
    CyclotomicField::new(union, Arc::new(gal), images)
}

/// The direct product of cyclic groups of the given orders; element
/// `(x_1, ..., x_k)` has index `((x_1 c_2 + x_2) c_3 + ...) + x_k`.
pub fn product_of_cyclics(orders: &[u64]) -> Result<FiniteGroup> {
    if orders.is_empty() {
        return FiniteGroup::cyclic(1);
    }
    let mut g = FiniteGroup::cyclic(orders[0] as usize)?;
    for &c in &orders[1..] {
        g = FiniteGroup::direct_product(&g, &FiniteGroup::cyclic(c as usize)?)?;
    }
    Ok(g)
}

/// Index of a coordinate vector in [`product_of_cyclics`] numbering.
pub fn coords_to_index(orders: &[u64], coords: &[u64]) -> u16 {
    let mut idx = 0u64;
    for (&c, &x) in orders.iter().zip(coords) {
        idx = idx * c + (x % c);
    }
    idx as u16
}

/// Coordinates of an index in [`product_of_cyclics`] numbering.
pub fn index_to_coords(orders: &[u64], index: u16) -> Vec<u64> {
    let mut idx = index as u64;
    let mut out = vec![0u64; orders.len()];
    for i in (0..orders.len()).rev() {
        out[i] = idx % orders[i];
        idx /= orders[i];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_n_p_shapes() {
        let f = CyclotomicField::k_n_p(5, 4).unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(f.modulus(), 5);
        assert_eq!(f.subgroup_residues(1000).unwrap(), vec![1]);

        let f = CyclotomicField::k_n_p(13, 2).unwrap();
        assert_eq!(f.degree(), 2);
        // H = squares mod 13
        assert_eq!(
            f.subgroup_residues(1000).unwrap(),
            vec![1, 3, 4, 9, 10, 12]
        );

        let f = CyclotomicField::k_n_p(7, 1).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.modulus(), 1); // unramified support is dropped

        assert!(CyclotomicField::k_n_p(7, 4).is_err());
        assert!(CyclotomicField::k_n_p(2, 1).is_err());
    }

    #[test]
    fn composite_shapes() {
        let a = CyclotomicField::k_n_p(5, 2).unwrap();
        let b = CyclotomicField::k_n_p(13, 2).unwrap();
        let c = composite(&a, &b).unwrap();
        assert_eq!(c.modulus(), 65);
        assert_eq!(c.degree(), 4);

        let q = CyclotomicField::k_n_p(7, 1).unwrap();
        let same = composite(&a, &q).unwrap();
        assert_eq!(same.degree(), a.degree());
        assert_eq!(same.ramified_primes(), a.ramified_primes());

        let c3a = CyclotomicField::k_n_p(7, 3).unwrap();
        let c3b = CyclotomicField::k_n_p(13, 3).unwrap();
        assert_eq!(composite(&c3a, &c3b).unwrap().degree(), 9);

        // equal support: K_2(13) . K_4(13) = K_4(13)
        let k2 = CyclotomicField::k_n_p(13, 2).unwrap();
        let k4 = CyclotomicField::k_n_p(13, 4).unwrap();
        let j = composite(&k2, &k4).unwrap();
        assert_eq!(j.degree(), 4);

        // overlapping non-equal supports are out of scope
        let f513 = composite(&a, &b).unwrap();
        assert!(composite(&a, &f513).is_err());
    }

    #[test]
    fn inertia_and_decomposition() {
        // K_4(5): totally ramified at 5
        let f = CyclotomicField::k_n_p(5, 4).unwrap();
        assert_eq!(f.inertia_group(5).order(), 4);
        let d = f.decomposition_data(5).unwrap();
        assert_eq!((d.e, d.f), (4, 1));

        // 2 has order 4 mod 5: unramified with f = 4 in the full field
        let d2 = f.decomposition_data(2).unwrap();
        assert_eq!((d2.e, d2.f), (1, 4));
        let d3 = f.decomposition_data(3).unwrap();
        assert_eq!((d3.e, d3.f), (1, 4));

        // K_2(5) . K_2(13): order-2 inertia at 5
        let c = composite(
            &CyclotomicField::k_n_p(5, 2).unwrap(),
            &CyclotomicField::k_n_p(13, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(c.inertia_group(5).order(), 2);
        assert_eq!(c.inertia_group(7).order(), 1);

        // K_2(13) at q = 3: legendre(3,13) = +1, so split
        let k13 = CyclotomicField::k_n_p(13, 2).unwrap();
        let d = k13.decomposition_data(3).unwrap();
        assert_eq!((d.e, d.f), (1, 1));
        assert_eq!(crate::arith::legendre(3, 13), 1);
    }

    #[test]
    fn frobenius_matches_residue_class_in_full_cyclotomic() {
        // in Q(zeta_m) the Frobenius of unramified q is the class of q
        let f = CyclotomicField::full_cyclotomic(&[3, 5]).unwrap();
        assert_eq!(f.degree(), 8);
        for q in [2u64, 7, 11, 13, 23] {
            let fr = f.frobenius_of_unramified(q).unwrap();
            // order of Frobenius = multiplicative order of q mod 15
            let mut k = 1u64;
            let mut cur = q % 15;
            while cur != 1 {
                cur = cur * q % 15;
                k += 1;
            }
            assert_eq!(f.gal.elem_order(fr) as u64, k, "q = {q}");
        }
    }

    #[test]
    fn efg_identity_small_fields() {
        let fields = vec![
            CyclotomicField::k_n_p(5, 4).unwrap(),
            CyclotomicField::k_n_p(13, 4).unwrap(),
            composite(
                &CyclotomicField::k_n_p(5, 2).unwrap(),
                &CyclotomicField::k_n_p(13, 2).unwrap(),
            )
            .unwrap(),
            composite(
                &CyclotomicField::k_n_p(7, 3).unwrap(),
                &CyclotomicField::k_n_p(13, 3).unwrap(),
            )
            .unwrap(),
        ];
        for f in &fields {
            for p in crate::arith::primes_up_to(100) {
                let d = f.decomposition_data(p).unwrap();
                let g_count = f.degree() as u64 / d.z.order() as u64;
                assert_eq!(
                    d.e * d.f * g_count,
                    f.degree() as u64,
                    "e f g identity at {p}"
                );
            }
        }
    }

    #[test]
    fn extract_config_and_errors() {
        let c = composite(
            &CyclotomicField::k_n_p(3, 2).unwrap(),
            &CyclotomicField::k_n_p(5, 2).unwrap(),
        )
        .unwrap();
        let cfg = c.extract_config(&[3, 5]).unwrap();
        assert_eq!(cfg.s(), 2);
        assert_eq!(cfg.pairs()[0].0.order(), 2);
        assert!(c.extract_config(&[3, 7]).is_err());
        assert!(c.extract_config(&[3]).is_err());

        let tot = CyclotomicField::k_n_p(5, 4).unwrap();
        let cfg = tot.extract_config(&[5]).unwrap();
        assert!(cfg.is_split());
        assert_eq!(cfg.pairs()[0].1.order(), 4);
    }

    #[test]
    fn verify_realization_quadratic_pairs() {
        use crate::smallgroup::catalog;
        let c22 = catalog("C2^2").unwrap();
        let g = c22.group.as_ref();
        let x1 = c22.named["x1"];
        let x2 = c22.named["x2"];
        let split = TameConfig::new(
            c22.group.clone(),
            vec![
                (
                    Subgroup::generated(g, &[x1]),
                    Subgroup::generated(g, &[x1]),
                ),
                (
                    Subgroup::generated(g, &[x2]),
                    Subgroup::generated(g, &[x2]),
                ),
            ],
        )
        .unwrap();
        // (3/5) = -1: not a split realization
        let f35 = composite(
            &CyclotomicField::k_n_p(3, 2).unwrap(),
            &CyclotomicField::k_n_p(5, 2).unwrap(),
        )
        .unwrap();
        assert!(f35.verify_realization(&split).unwrap().is_none());
        // (13/17) = (17/13) = +1: split realization
        let f1317 = composite(
            &CyclotomicField::k_n_p(13, 2).unwrap(),
            &CyclotomicField::k_n_p(17, 2).unwrap(),
        )
        .unwrap();
        assert!(f1317.verify_realization(&split).unwrap().is_some());
        assert_eq!(crate::arith::legendre(13, 17), 1);
        assert_eq!(crate::arith::legendre(17, 13), 1);
        // wrong order: none
        let f = CyclotomicField::k_n_p(5, 4).unwrap();
        assert!(f.verify_realization(&split).unwrap().is_none());
    }

    #[test]
    fn quadratic_splitting_matches_legendre_fuzz() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(500);
        let mut done = 0;
        while done < 500 {
            let l = loop {
                let c = rng.gen_range(3u64..50_000);
                if crate::arith::is_prime(c) {
                    break c;
                }
            };
            let q = loop {
                let c = rng.gen_range(3u64..50_000);
                if crate::arith::is_prime(c) && c != l {
                    break c;
                }
            };
            let d = CyclotomicField::k_n_p(l, 2)
                .unwrap()
                .decomposition_data(q)
                .unwrap();
            assert_eq!(d.e, 1);
            assert_eq!(
                d.f == 1,
                crate::arith::legendre(q as i64, l) == 1,
                "l={l} q={q}"
            );
            done += 1;
        }
    }

    #[test]
    fn product_index_round_trip() {
        let orders = [4u64, 2, 3];
        for idx in 0..24u16 {
            let c = index_to_coords(&orders, idx);
            assert_eq!(coords_to_index(&orders, &c), idx);
        }
        let g = product_of_cyclics(&orders).unwrap();
        assert_eq!(g.order(), 24);
        let e0 = coords_to_index(&orders, &[1, 0, 0]);
        assert_eq!(g.elem_order(e0), 4);
    }
}
