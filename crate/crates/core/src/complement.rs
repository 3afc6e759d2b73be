//! Saturated FDFWs for the complement of an NBW.
//!
//! The leading DFW is a right-congruence quotient of `Σ*` and each progress
//! DFW the quotient of a progress congruence for that leading class. A
//! progress class `[v]` of leading class `[u]` is accepting iff `uv` stays in
//! `[u]` and `u·v^ω` is rejected by the automaton. Both relations make this
//! verdict independent of the chosen members.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::alphabet::Word;
use crate::congruence::{progress_congruence_improved, subset_congruence, CongruenceDfw};
use crate::error::{Error, Result};
use crate::fdfw::Fdfw;
use crate::lasso::accepts;
use crate::nbw::Nbw;
use crate::preorder::{optimal_leading_congruence, optimal_periodic_membership, optimal_progress_congruence};
use crate::profile::periodic_membership_from_profile;
use crate::upword::UpWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Subset leading congruence with profile-based progress congruences.
    Improved,
    /// Preordered-subset leading congruence with max-block progress
    /// congruences.
    Optimal,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "improved" => Ok(Variant::Improved),
            "optimal" => Ok(Variant::Optimal),
            other => Err(Error::semantic(format!("unknown variant {other:?}"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Improved => "improved",
            Variant::Optimal => "optimal",
        })
    }
}

pub fn complement_fdfw(a: &Nbw, variant: Variant, budget: usize) -> Result<Fdfw> {
    match variant {
        Variant::Improved => complement_fdfw_improved(a, budget),
        Variant::Optimal => complement_fdfw_optimal(a, budget),
    }
}

/// A non-empty member of progress class `id`: its witness, or for the class
/// of `ε` the shortest non-empty word returning to it.
fn period_of<P>(p: &CongruenceDfw<P>, id: usize) -> Option<Word> {
    if id == 0 {
        p.nonempty_witness(0)
    } else {
        Some(p.witness(id).to_vec())
    }
}

fn assemble<L: Sync, P: Send>(
    leading: &CongruenceDfw<L>,
    build: impl Fn(&L, &[crate::alphabet::Symbol]) -> Result<CongruenceDfw<P>> + Sync,
) -> Result<Fdfw> {
    let progress = leading
        .classes()
        .par_iter()
        .map(|c| build(&c.payload, &c.witness).map(|p| p.to_dfw("n")))
        .collect::<Result<Vec<_>>>()?;
    let mut f = Fdfw::new(leading.to_dfw("m"), progress).expect("quotients share the alphabet");
    f.set_saturated(true);
    Ok(f)
}

/// The complement FDFW over `∼ⁱ` and `≈ᵤ`. Accepting progress classes are
/// decided from their profiles alone; debug builds confirm each verdict with
/// the lasso oracle.
pub fn complement_fdfw_improved(a: &Nbw, budget: usize) -> Result<Fdfw> {
    let leading = subset_congruence(a);
    assemble(&leading, |s, u| {
        let mut p = progress_congruence_improved(a, s, budget)?;
        let accepting = (0..p.len())
            .map(|id| {
                let Some(v) = period_of(&p, id) else {
                    return false;
                };
                let payload = p.payload(id);
                if &payload.profile().image(s) != s {
                    return false;
                }
                let member = periodic_membership_from_profile(s, payload).expect("δ(S, v) = S was checked");
                debug_assert_eq!(member, accepts(a, &UpWord::new(u.to_vec(), v).expect("non-empty")));
                !member
            })
            .collect();
        p.set_accepting(accepting);
        Ok(p)
    })
}

/// The complement FDFW over `∼ᵒ` and `≈ᵒᵤ`. Accepting progress classes are
/// decided by the lasso oracle on their witnesses; debug builds compare each
/// verdict with the one read off the payload.
pub fn complement_fdfw_optimal(a: &Nbw, budget: usize) -> Result<Fdfw> {
    let leading = optimal_leading_congruence(a, budget)?;
    assemble(&leading, |base, u| {
        let mut p = optimal_progress_congruence(a, base, budget)?;
        let accepting = (0..p.len())
            .map(|id| {
                let Some(v) = period_of(&p, id) else {
                    return false;
                };
                if &p.payload(id).phi_state != base {
                    return false;
                }
                let member = accepts(a, &UpWord::new(u.to_vec(), v).expect("non-empty"));
                debug_assert_eq!(Ok(member), optimal_periodic_membership(base, p.payload(id)));
                !member
            })
            .collect();
        p.set_accepting(accepting);
        Ok(p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::congruence::DEFAULT_BUDGET;
    use crate::families::{gen_bn, gen_bn_dbw};
    use crate::random::random_nbw;
    use crate::upword::enumerate_upwords;

    const VARIANTS: [Variant; 2] = [Variant::Improved, Variant::Optimal];

    fn check_complement(a: &Nbw, max_u: usize, max_v: usize) {
        for v in VARIANTS {
            let f = complement_fdfw(a, v, DEFAULT_BUDGET).unwrap();
            assert!(f.is_marked_saturated());
            for w in enumerate_upwords(a.alphabet(), max_u, max_v) {
                let expected = !accepts(a, &w);
                assert_eq!(f.accepts_upword_saturated(&w), expected, "{v} {w:?}");
                assert_eq!(f.accepts_upword_general(&w), expected, "{v} {w:?}");
            }
        }
    }

    #[test]
    fn universal_and_empty_languages() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let univ = Nbw::universal(ab.clone());
        for v in VARIANTS {
            let f = complement_fdfw(&univ, v, DEFAULT_BUDGET).unwrap();
            assert!(f.progress().iter().all(|p| !p.has_accepting()));
        }
        let never = Nbw::new(ab, vec!["x".into()], [0], [], [(0, 0, 0), (0, 1, 0)]).unwrap();
        for v in VARIANTS {
            let f = complement_fdfw(&never, v, DEFAULT_BUDGET).unwrap();
            for w in enumerate_upwords(never.alphabet(), 2, 2) {
                assert!(f.accepts_upword_saturated(&w));
            }
        }
    }

    #[test]
    fn b3_complement() {
        check_complement(&gen_bn(3), 3, 3);
        let f = complement_fdfw_improved(&gen_bn(3), DEFAULT_BUDGET).unwrap();
        assert!(f.macrostates() <= 6 + 2 * 36);
        let one = UpWord::new(vec![1], vec![1]).unwrap();
        assert_eq!(f.accepts_upword_saturated(&one), !accepts(&gen_bn(3), &one));
    }

    #[test]
    fn dbw_macrostates() {
        let f = complement_fdfw_improved(&gen_bn_dbw(3), DEFAULT_BUDGET).unwrap();
        assert!(f.macrostates() <= 5 + 2 * 25);
    }

    #[test]
    fn random_complements() {
        for seed in 0..25 {
            check_complement(&random_nbw(seed, 1 + seed as usize % 4, 2, 0.4, 0.3), 3, 3);
        }
    }

    #[test]
    fn saturated_on_corpus() {
        for seed in 0..10 {
            let a = random_nbw(seed, 3, 2, 0.4, 0.3);
            for v in VARIANTS {
                let f = complement_fdfw(&a, v, DEFAULT_BUDGET).unwrap();
                assert!(f
                    .check_saturation_sampled(enumerate_upwords(a.alphabet(), 2, 3))
                    .is_saturated());
            }
        }
    }
}
