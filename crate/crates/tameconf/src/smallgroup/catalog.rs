//! Built-in catalog of the groups this crate works with, constructed from
//! fixed permutation generators, with named elements for resolving
//! human-readable subgroup words.

use super::group::{perm_from_cycles, FiniteGroup, GroupRef, Perm};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A catalog group: the group itself plus a name -> element map used to
/// resolve words like `x1^2` or `r*s`.
#[derive(Debug, Clone)]
pub struct CatalogGroup {
    pub name: String,
    pub group: GroupRef,
    pub named: BTreeMap<String, u16>,
}

pub fn catalog_names() -> &'static [&'static str] {
    &[
        "C2^2",
        "C2^3",
        "C4xC2",
        "Q8",
        "D8",
        "D10",
        "A4",
        "F20",
        "S4",
        "A5",
        "S5",
        "PSL(2,7)",
    ]
}

fn build(
    name: &str,
    degree: usize,
    gens: &[(&str, &str)],
    extra_named: &[(&str, &str)],
) -> Result<CatalogGroup> {
    let perms: Vec<Perm> = gens
        .iter()
        .map(|&(_, cycles)| perm_from_cycles(cycles, degree))
        .collect::<Result<_>>()?;
    let mut group = FiniteGroup::from_generators(&perms)?;
    group.set_label(name);
    let elems = group.perms().expect("built from permutations").to_vec();
    let locate = |cycles: &str| -> Result<u16> {
        let p = perm_from_cycles(cycles, degree)?;
        elems
            .iter()
            .position(|q| *q == p)
            .map(|i| i as u16)
            .ok_or_else(|| Error::invalid(format!("{cycles} not in {name}")))
    };
    let mut named = BTreeMap::new();
    for &(n, cycles) in gens.iter().chain(extra_named) {
        named.insert(n.to_string(), locate(cycles)?);
    }
    Ok(CatalogGroup {
        name: name.to_string(),
        group: Arc::new(group),
        named,
    })
}

/// Looks up a group by catalog name; names outside the fixed catalog are
/// parsed as direct products of cyclic groups, e.g. `C2xC6` or `C3^2`.
pub fn catalog(name: &str) -> Result<CatalogGroup> {
    match name {
        "C2^2" => build(
            name,
            4,
            &[("x1", "(1 2)"), ("x2", "(3 4)")],
            &[],
        ),
        "C2^3" => build(
            name,
            6,
            &[("x1", "(1 2)"), ("x2", "(3 4)"), ("x3", "(5 6)")],
            &[],
        ),
        "C4xC2" => build(
            name,
            6,
            &[("x1", "(1 2 3 4)"), ("y", "(5 6)")],
            &[("x2", "(5 6)")],
        ),
        "Q8" => build(
            name,
            8,
            &[("i", "(1 2 3 4)(5 6 7 8)"), ("j", "(1 5 3 7)(2 8 4 6)")],
            &[("k", "(1 6 3 8)(2 5 4 7)")],
        ),
        "D8" => build(name, 4, &[("r", "(1 2 3 4)"), ("s", "(1 3)")], &[]),
        "D10" => build(
            name,
            5,
            &[("r", "(1 2 3 4 5)"), ("s", "(2 5)(3 4)")],
            &[],
        ),
        "A4" => build(
            name,
            4,
            &[("a", "(1 2 3)"), ("b", "(1 2)(3 4)")],
            &[],
        ),
        "F20" => build(
            name,
            5,
            &[("c", "(1 2 3 4 5)"), ("t", "(2 3 5 4)")],
            &[],
        ),
        "S4" => build(name, 4, &[("a", "(1 2 3 4)"), ("b", "(1 2)")], &[]),
        "A5" => build(name, 5, &[("a", "(1 2 3 4 5)"), ("b", "(1 2 3)")], &[]),
        "S5" => build(name, 5, &[("a", "(1 2 3 4 5)"), ("b", "(1 2)")], &[]),
        "PSL(2,7)" => build(
            name,
            7,
            &[("a", "(1 2)(3 6)"), ("b", "(2 6 7)(3 4 5)")],
            &[
                ("r", "(1 3 2 6)(5 7)"),
                ("s", "(1 2)(5 7)"),
                ("u", "(2 6)(4 5)"),
                ("v", "(1 2 4)(3 6 5)"),
                ("ab", "(1 2 3 4 5 6 7)"),
            ],
        ),
        other => cyclic_product(other),
    }
}

/// Parses `C<n>`, `C<n>^<k>`, and `x`-joined products of those, building
/// the direct product as disjoint cycles; named elements are `x1, x2, ...`.
fn cyclic_product(name: &str) -> Result<CatalogGroup> {
    let mut orders: Vec<usize> = Vec::new();
    for part in name.split('x') {
        let part = part.trim();
        let rest = part
            .strip_prefix('C')
            .ok_or_else(|| Error::invalid(format!("unknown group name {name:?}")))?;
        let (base, power) = match rest.split_once('^') {
            Some((b, p)) => (
                b.parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad cyclic order in {name:?}")))?,
                p.parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad power in {name:?}")))?,
            ),
            None => (
                rest.parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad cyclic order in {name:?}")))?,
                1,
            ),
        };
        if base < 2 || power < 1 {
            return Err(Error::invalid(format!("degenerate cyclic part in {name:?}")));
        }
        orders.extend(std::iter::repeat(base).take(power));
    }
    if orders.is_empty() {
        return Err(Error::invalid(format!("unknown group name {name:?}")));
    }
    let degree: usize = orders.iter().sum();
    let mut gens: Vec<(String, String)> = Vec::new();
    let mut start = 1usize;
    for (i, &n) in orders.iter().enumerate() {
        let cycle: Vec<String> = (start..start + n).map(|p| p.to_string()).collect();
        gens.push((format!("x{}", i + 1), format!("({})", cycle.join(" "))));
        start += n;
    }
    let gen_refs: Vec<(&str, &str)> = gens
        .iter()
        .map(|(n, c)| (n.as_str(), c.as_str()))
        .collect();
    build(name, degree, &gen_refs, &[])
}
