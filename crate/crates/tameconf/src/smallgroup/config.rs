//! Tame decomposition configurations: cyclic inertia subgroups `T_i` that
//! normally generate the group, paired with decomposition groups `Z_i`
//! where `T_i` is normal in `Z_i` with cyclic quotient.

use super::group::{GroupRef, Subgroup};
use crate::{Error, Result};
use std::sync::Arc;

/// A tame decomposition configuration `(G, {T_i}, {Z_i})`.
#[derive(Debug, Clone)]
pub struct TameConfig {
    group: GroupRef,
    pairs: Vec<(Subgroup, Subgroup)>,
}

impl TameConfig {
    /// Validates every invariant: each `T_i` cyclic, `T_i` normal in `Z_i`
    /// with cyclic quotient, the conjugates of the `T_i` generate the
    /// group, and the number of pairs equals the rank.
    pub fn new(group: GroupRef, pairs: Vec<(Subgroup, Subgroup)>) -> Result<Self> {
        let g = group.as_ref();
        for (idx, (t, z)) in pairs.iter().enumerate() {
            if !t.is_cyclic(g) {
                return Err(Error::invalid(format!("T_{} is not cyclic", idx + 1)));
            }
            if !t.is_subset_of(z) {
                return Err(Error::invalid(format!(
                    "T_{} is not contained in Z_{}",
                    idx + 1,
                    idx + 1
                )));
            }
            // T normal in Z with cyclic quotient
            let (zg, emb) = g.subgroup_as_group(z.elems())?;
            let t_in_z: Vec<u16> = t
                .elems()
                .iter()
                .map(|&x| emb.binary_search(&x).expect("T inside Z") as u16)
                .collect();
            if !zg.is_normal(&t_in_z) {
                return Err(Error::invalid(format!(
                    "T_{} is not normal in Z_{}",
                    idx + 1,
                    idx + 1
                )));
            }
            let (q, _) = zg.quotient(&t_in_z)?;
            if !Subgroup::whole(&q).is_cyclic(&q) {
                return Err(Error::invalid(format!(
                    "Z_{}/T_{} is not cyclic",
                    idx + 1,
                    idx + 1
                )));
            }
        }
        let union: Vec<u16> = pairs
            .iter()
            .flat_map(|(t, _)| t.elems().iter().copied())
            .collect();
        if g.normal_closure(&union).len() != g.order() {
            return Err(Error::invalid(
                "the inertia subgroups do not normally generate the group",
            ));
        }
        if pairs.len() != g.rank() {
            return Err(Error::invalid(format!(
                "{} pairs given but the group has rank {}",
                pairs.len(),
                g.rank()
            )));
        }
        Ok(TameConfig { group, pairs })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn pairs(&self) -> &[(Subgroup, Subgroup)] {
        &self.pairs
    }

    pub fn s(&self) -> usize {
        self.pairs.len()
    }

    /// Split exactly when `T_i = Z_i` for all `i`.
    pub fn is_split(&self) -> bool {
        self.pairs.iter().all(|(t, z)| t == z)
    }

    /// Canonical encoding: subgroup element lists with the pair list
    /// sorted, independent of index order.
    pub fn encode(&self) -> Vec<(Vec<u16>, Vec<u16>)> {
        let mut pairs: Vec<(Vec<u16>, Vec<u16>)> = self
            .pairs
            .iter()
            .map(|(t, z)| (t.elems().to_vec(), z.elems().to_vec()))
            .collect();
        pairs.sort();
        pairs
    }

    /// Least encoding over the automorphism group combined with index
    /// permutations (the pair sort handles index permutations).
    pub fn canonical_encoding(&self, autos: &[Vec<u16>]) -> Vec<(Vec<u16>, Vec<u16>)> {
        let mut best = self.encode();
        for phi in autos {
            let mut pairs: Vec<(Vec<u16>, Vec<u16>)> = self
                .pairs
                .iter()
                .map(|(t, z)| {
                    (
                        t.apply_map(phi).elems().to_vec(),
                        z.apply_map(phi).elems().to_vec(),
                    )
                })
                .collect();
            pairs.sort();
            if pairs < best {
                best = pairs;
            }
        }
        best
    }

    /// Applies an automorphism (or any index map) to every subgroup.
    pub fn apply_map(&self, map: &[u16]) -> Result<TameConfig> {
        let pairs = self
            .pairs
            .iter()
            .map(|(t, z)| (t.apply_map(map), z.apply_map(map)))
            .collect();
        TameConfig::new(self.group.clone(), pairs)
    }
}

/// All tame decomposition configurations of `group` up to the combined
/// action of `Aut(G)` and permutations of the index set, as canonical
/// (lexicographically least) representatives in deterministic order.
///
/// Supported scope: rank 1 at any order `<= 200`, rank 2 at order `<= 200`.
pub fn enumerate_configs(group: &GroupRef) -> Result<Vec<TameConfig>> {
    let g = group.as_ref();
    if g.order() > 200 {
        return Err(Error::resource(format!(
            "configuration enumeration capped at order 200, got {}",
            g.order()
        )));
    }
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    let s = g.rank();
    if s > 2 {
        return Err(Error::unsupported(format!(
            "configuration enumeration handles rank <= 2, got rank {s}"
        )));
    }

    // distinct nontrivial cyclic subgroups
    let mut cyclics: Vec<Subgroup> = Vec::new();
    {
        let mut seen = std::collections::BTreeSet::new();
        for x in 1..g.order() as u16 {
            let sub = Subgroup::generated(g, &[x]);
            if seen.insert(sub.elems().to_vec()) {
                cyclics.push(sub);
            }
        }
        cyclics.sort_by_key(|c| (c.order(), c.elems().to_vec()));
    }

    // candidate Z's for a fixed T: subgroups <T, z> for z normalizing T
    let z_candidates = |t: &Subgroup| -> Vec<Subgroup> {
        let mut out: Vec<Subgroup> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for z in g.normalizer(t.elems()) {
            let mut gens: Vec<u16> = t.elems().to_vec();
            gens.push(z);
            let sub = Subgroup::generated(g, &gens);
            if seen.insert(sub.elems().to_vec()) {
                out.push(sub);
            }
        }
        out.sort_by_key(|c| (c.order(), c.elems().to_vec()));
        out
    };

    let tuples: Vec<Vec<&Subgroup>> = match s {
        1 => cyclics.iter().map(|t| vec![t]).collect(),
        2 => {
            let mut out = Vec::new();
            for i in 0..cyclics.len() {
                for j in i..cyclics.len() {
                    out.push(vec![&cyclics[i], &cyclics[j]]);
                }
            }
            out
        }
        _ => unreachable!(),
    };

    let autos = g.automorphisms()?;
    let mut canon: std::collections::BTreeSet<Vec<(Vec<u16>, Vec<u16>)>> =
        std::collections::BTreeSet::new();

    for tuple in tuples {
        let union: Vec<u16> = tuple
            .iter()
            .flat_map(|t| t.elems().iter().copied())
            .collect();
        if g.normal_closure(&union).len() != g.order() {
            continue;
        }
        let per_index: Vec<Vec<Subgroup>> = tuple.iter().map(|t| z_candidates(t)).collect();
        let mut choice = vec![0usize; s];
        'odometer: loop {
            let pairs: Vec<(Subgroup, Subgroup)> = tuple
                .iter()
                .zip(choice.iter().enumerate())
                .map(|(t, (idx, &c))| ((*t).clone(), per_index[idx][c].clone()))
                .collect();
            let cfg = TameConfig::new(group.clone(), pairs)?;
            canon.insert(cfg.canonical_encoding(&autos));
            // advance the Z-choice odometer
            for idx in (0..s).rev() {
                choice[idx] += 1;
                if choice[idx] < per_index[idx].len() {
                    continue 'odometer;
                }
                choice[idx] = 0;
            }
            break;
        }
    }

    // rebuild each class from its least encoding, so the returned
    // representatives are exactly the canonical ones
    canon
        .into_iter()
        .map(|encoding| {
            let pairs = encoding
                .into_iter()
                .map(|(t, z)| Ok((Subgroup::new(g, &t)?, Subgroup::new(g, &z)?)))
                .collect::<Result<Vec<_>>>()?;
            TameConfig::new(group.clone(), pairs)
        })
        .collect()
}

/// Projects a configuration through the quotient by a normal subgroup.
/// Returns `None` when the quotient drops rank (the projected data is then
/// not a minimal configuration).
pub fn config_quotient(cfg: &TameConfig, normal: &Subgroup) -> Result<Option<TameConfig>> {
    let g = cfg.group().as_ref();
    if !g.is_normal(normal.elems()) {
        return Err(Error::invalid("subgroup is not normal"));
    }
    let (q, proj) = g.quotient(normal.elems())?;
    if q.rank() != g.rank() {
        return Ok(None);
    }
    let qref: GroupRef = Arc::new(q);
    let pairs = cfg
        .pairs()
        .iter()
        .map(|(t, z)| (t.apply_map(&proj), z.apply_map(&proj)))
        .collect();
    Ok(Some(TameConfig::new(qref, pairs)?))
}
