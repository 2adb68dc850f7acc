//! Words in named group elements, used by the corpus and the CLI to keep
//! subgroup data auditable against the source tables.
//!
//! Grammar: `word := term ('*' term)*`, `term := atom ('^' int)?`,
//! `atom := '1' | name | cycles`.  A `cycles` atom like `(1 2)(3 4)` is
//! resolved against the group's permutation images.  Products apply the
//! right factor first, matching [`super::group::perm_compose`].

use super::group::{perm_from_cycles, FiniteGroup};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Resolves a word to an element index.
pub fn resolve_word(
    group: &FiniteGroup,
    named: &BTreeMap<String, u16>,
    word: &str,
) -> Result<u16> {
    let word = word.trim();
    if word.is_empty() {
        return Err(Error::invalid("empty word"));
    }
    let mut acc = group.identity();
    for term in word.split('*') {
        let term = term.trim();
        let (atom_text, exp) = match term.rsplit_once('^') {
            Some((a, e)) if !a.ends_with('(') => {
                let exp = e
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::invalid(format!("bad exponent in {term:?}")))?;
                (a.trim(), exp)
            }
            _ => (term, 1),
        };
        let atom = resolve_atom(group, named, atom_text)?;
        acc = group.mul(acc, group.pow(atom, exp));
    }
    Ok(acc)
}

fn resolve_atom(
    group: &FiniteGroup,
    named: &BTreeMap<String, u16>,
    text: &str,
) -> Result<u16> {
    if text == "1" || text == "()" {
        return Ok(group.identity());
    }
    if let Some(&idx) = named.get(text) {
        return Ok(idx);
    }
    if text.starts_with('(') {
        let perms = group.perms().ok_or_else(|| {
            Error::invalid("cycle notation needs a permutation-built group")
        })?;
        let degree = perms[0].len();
        let p = perm_from_cycles(text, degree)?;
        return perms
            .iter()
            .position(|q| *q == p)
            .map(|i| i as u16)
            .ok_or_else(|| Error::invalid(format!("{text} is not an element of the group")));
    }
    Err(Error::invalid(format!("unknown name {text:?}")))
}

/// Resolves a comma-separated list of words to element indices.
pub fn resolve_words(
    group: &FiniteGroup,
    named: &BTreeMap<String, u16>,
    words: &str,
) -> Result<Vec<u16>> {
    words
        .split(',')
        .map(|w| resolve_word(group, named, w))
        .collect()
}
