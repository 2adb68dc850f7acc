//! Number-field verification from defining polynomials: exact
//! discriminants, factorization over prime fields, the Dedekind index
//! criterion, splitting patterns, and ramified-prime determination.

mod modp;
mod order;
mod poly;
mod split;
mod verify;
mod zfactor;

pub use modp::factor_mod_p;
pub use poly::IntPoly;
pub use split::{
    dedekind_index_test, factor_bigint, ramified_primes, splitting_pattern, PatternOutcome,
    RamifiedPrime, SplittingPattern,
};
pub use verify::{verify_table_entry, ClaimedPrime, TableClaim, TableReport};
pub use order::{p_splitting_via_maximal_order, p_unramified_via_maximal_order};
pub use zfactor::is_irreducible;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycabelian::CyclotomicField;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn quadratic_agrees_with_cyclotomic_engine() {
        // splitting of q in x^2 - l* matches the decomposition of q in
        // the quadratic subfield of the l-th cyclotomic field
        let mut rng = StdRng::seed_from_u64(2024);
        let mut done = 0;
        while done < 50 {
            let l = loop {
                let c = rng.gen_range(3u64..10_000);
                if crate::arith::is_prime(c) {
                    break c;
                }
            };
            let q = loop {
                let c = rng.gen_range(3u64..10_000);
                if crate::arith::is_prime(c) {
                    break c;
                }
            };
            let lstar = crate::arith::star_value(l);
            let f = IntPoly::from_i64(&[-lstar, 0, 1]);
            let field = CyclotomicField::k_n_p(l, 2).unwrap();
            let d = field.decomposition_data(q).unwrap();
            match splitting_pattern(&f, q).unwrap() {
                PatternOutcome::Pattern(pat) => {
                    let expected = if d.e == 2 {
                        vec![(2, 1)]
                    } else if d.f == 2 {
                        vec![(1, 2)]
                    } else {
                        vec![(1, 1), (1, 1)]
                    };
                    assert_eq!(pat.pairs(), expected.as_slice(), "l={l} q={q}");
                    done += 1;
                }
                PatternOutcome::IndexObstruction => {
                    panic!("odd q cannot obstruct x^2 - l*: l={l} q={q}")
                }
            }
        }
    }
}
