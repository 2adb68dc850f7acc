//! Obstruction predicates: proven reasons a configuration cannot be
//! realized over Q.  A search failure is never treated as an obstruction;
//! only these predicates justify a definite negative.

use super::config::{config_quotient, TameConfig};
use super::group::{FiniteGroup, Subgroup};
use crate::signmatrix::{qr_test, SignMatrix};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Verdict of the obstruction screen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// A proven obstruction applies; the string names the predicate
    /// (`qr-matrix`, `z4z2-reciprocity`, or a quotient propagation).
    Obstructed(String),
    /// The group only admits split realizations and this configuration is
    /// not split (the quaternion case).
    SplitOnly,
    /// No predicate in the catalog fires.
    NoKnownObstruction,
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        !matches!(self, Verdict::NoKnownObstruction)
    }

    /// The predicate name used by the corpus for definite negatives.
    pub fn predicate_name(&self) -> Option<String> {
        match self {
            Verdict::Obstructed(name) => Some(name.clone()),
            Verdict::SplitOnly => Some("q8-split-only".to_string()),
            Verdict::NoKnownObstruction => None,
        }
    }
}

fn is_elementary_abelian_2(g: &FiniteGroup) -> bool {
    g.is_abelian() && (1..g.order() as u16).all(|x| g.elem_order(x) == 2)
}

fn is_z4xz2(g: &FiniteGroup) -> bool {
    if g.order() != 8 || !g.is_abelian() {
        return false;
    }
    let orders: Vec<u32> = g
        .abelian_basis()
        .expect("abelian")
        .iter()
        .map(|&(o, _)| o)
        .collect();
    orders == vec![4, 2]
}

fn is_q8(g: &FiniteGroup) -> bool {
    g.order() == 8
        && !g.is_abelian()
        && (1..8u16).filter(|&x| g.elem_order(x) == 2).count() == 1
}

/// The sign matrix `S_Z` of a configuration on an elementary abelian
/// 2-group: the inertia generators form a basis, each `z_i` is the unique
/// element of `Z_i \ T_i` with no `x_i` component, and
/// `m_ij = (-1)^{a_ij}` for `z_i = prod_j x_j^{a_ij}`.
pub fn config_sign_matrix(cfg: &TameConfig) -> Result<SignMatrix> {
    let g = cfg.group().as_ref();
    if !is_elementary_abelian_2(g) {
        return Err(Error::invalid(
            "sign matrix extraction needs an elementary abelian 2-group",
        ));
    }
    let s = cfg.s();
    let basis: Vec<u16> = cfg
        .pairs()
        .iter()
        .map(|(t, _)| {
            t.elems()
                .iter()
                .copied()
                .find(|&x| x != 0)
                .ok_or_else(|| Error::invalid("trivial inertia subgroup"))
        })
        .collect::<Result<_>>()?;
    // coordinates of v in the basis, by scanning the 2^s combinations
    let coords = |v: u16| -> Option<Vec<u8>> {
        for mask in 0u32..(1 << s) {
            let mut acc = 0u16;
            for (i, &b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc = g.mul(acc, b);
                }
            }
            if acc == v {
                return Some((0..s).map(|i| (mask >> i & 1) as u8).collect());
            }
        }
        None
    };
    let mut rows = vec![vec![0i8; s]; s];
    for (i, (t, z)) in cfg.pairs().iter().enumerate() {
        let exponents: Vec<u8> = if z == t {
            vec![0; s]
        } else {
            // two candidates differ by x_i; keep the one with a_ii = 0
            let cand = z
                .elems()
                .iter()
                .copied()
                .filter(|&v| !t.contains(v))
                .filter_map(&coords)
                .find(|c| c[i] == 0)
                .ok_or_else(|| Error::invalid("inertia subgroups do not form a basis"))?;
            cand
        };
        for j in 0..s {
            rows[i][j] = if i == j {
                0
            } else if exponents[j] == 1 {
                -1
            } else {
                1
            };
        }
    }
    SignMatrix::new(rows)
}

fn direct_verdict(cfg: &TameConfig) -> Result<Verdict> {
    let g = cfg.group().as_ref();
    if is_elementary_abelian_2(g) {
        let m = config_sign_matrix(cfg)?;
        let verdict = qr_test(&m);
        if !verdict.is_qr {
            return Ok(Verdict::Obstructed("qr-matrix".to_string()));
        }
        return Ok(Verdict::NoKnownObstruction);
    }
    if is_z4xz2(g) {
        // order so that T_1 has order 4
        let mut pairs: Vec<(Subgroup, Subgroup)> = cfg.pairs().to_vec();
        if pairs[0].0.order() != 4 {
            pairs.swap(0, 1);
        }
        let (t1, z1) = &pairs[0];
        let (t2, z2) = &pairs[1];
        if t1.order() != 4 {
            return Err(Error::invalid("no order-4 inertia subgroup"));
        }
        let x1 = t1
            .cyclic_generators(g)
            .into_iter()
            .min()
            .expect("cyclic subgroup has a generator");
        let x1_sq = g.mul(x1, x1);
        let mut gens: Vec<u16> = t2.elems().to_vec();
        gens.push(x1_sq);
        let enlarged = Subgroup::generated(g, &gens);
        let reciprocity_holds = (z1 == t1) == z2.is_subset_of(&enlarged);
        if !reciprocity_holds {
            return Ok(Verdict::Obstructed("z4z2-reciprocity".to_string()));
        }
        return Ok(Verdict::NoKnownObstruction);
    }
    if is_q8(g) {
        if !cfg.is_split() {
            return Ok(Verdict::SplitOnly);
        }
        return Ok(Verdict::NoKnownObstruction);
    }
    Ok(Verdict::NoKnownObstruction)
}

/// Applies every predicate whose hypotheses match, including propagation
/// through rank-preserving quotients: an obstructed quotient configuration
/// obstructs the configuration itself.
pub fn known_obstruction(cfg: &TameConfig) -> Result<Verdict> {
    match direct_verdict(cfg)? {
        Verdict::NoKnownObstruction => {}
        hit => return Ok(hit),
    }
    let g = cfg.group().as_ref();
    for normal in g.normal_subgroups() {
        if normal.len() == 1 || normal.len() == g.order() {
            continue;
        }
        let sub = Subgroup::new(g, &normal)?;
        if let Some(qcfg) = config_quotient(cfg, &sub)? {
            match direct_verdict(&qcfg)? {
                Verdict::NoKnownObstruction => {}
                Verdict::Obstructed(reason) => {
                    return Ok(Verdict::Obstructed(format!("quotient:{reason}")))
                }
                Verdict::SplitOnly => {
                    return Ok(Verdict::Obstructed("quotient:q8-split-only".to_string()))
                }
            }
        }
    }
    Ok(Verdict::NoKnownObstruction)
}
