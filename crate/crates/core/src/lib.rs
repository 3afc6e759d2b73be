//! Congruence relations for nondeterministic Büchi automata and the
//! saturated families of DFWs built from them.
//!
//! The crate provides
//!
//! * the automaton model ([`Nbw`], [`Dfw`], [`Fdfw`]) with native text
//!   formats and a small HOA reader,
//! * a lasso-based membership oracle for ultimately periodic words,
//!   emptiness and intersection,
//! * the classical, subset, and per-prefix progress congruences over
//!   transition profiles,
//! * preordered subsets and the optimal leading and progress congruences,
//! * complement FDFWs from either pair of congruences, their translation
//!   back to NBWs, and language containment,
//! * the families `B_n` and `B'_n` and a seeded random generator.
//!
//! ```
//! use fdfw_core::{accepts, complement_fdfw_optimal, gen_bn, UpWord, DEFAULT_BUDGET};
//!
//! let b3 = gen_bn(3);
//! let f = complement_fdfw_optimal(&b3, DEFAULT_BUDGET).unwrap();
//! let w = UpWord::parse(b3.alphabet(), "1", "1").unwrap();
//! assert_eq!(f.accepts_upword_saturated(&w), !accepts(&b3, &w));
//! ```

pub mod alphabet;
pub mod complement;
pub mod congruence;
pub mod dfw;
pub mod error;
pub mod families;
pub mod fdfw;
pub mod format;
mod hoa;
pub mod lasso;
pub mod nbw;
pub mod preorder;
pub mod product;
pub mod profile;
pub mod random;
pub mod state_set;
pub mod suite;
pub mod to_nbw;
pub mod upword;

pub use alphabet::{Alphabet, Symbol, Word};
pub use complement::{complement_fdfw, complement_fdfw_improved, complement_fdfw_optimal, Variant};
pub use congruence::{
    classical_congruence, progress_congruence_improved, refinement_violations, refines, subset_congruence, ClassRecord,
    CongruenceDfw, DEFAULT_BUDGET,
};
pub use dfw::Dfw;
pub use error::{Error, Result};
pub use families::{gen_bn, gen_bn_dbw, non_saturated_example, FamilySpec, FamilyVariant};
pub use fdfw::{complement_saturated_fdfw, Fdfw, SaturationReport, SaturationViolation};
pub use format::{parse_dfw, parse_fdfw, parse_nbw, serialize_dfw, serialize_fdfw, serialize_nbw};
pub use lasso::{accepts, is_empty, lasso_membership, Lasso, LassoWitness, MembershipVerdict};
pub use nbw::{Nbw, StateId};
pub use preorder::{
    initial_preordered, optimal_leading_congruence, optimal_periodic_membership, optimal_progress_congruence,
    ordered_run_dag, phi_step, phi_word, MaxClassMap, OptProgressState, OrderedRunDag, PreorderedSubset,
};
pub use product::intersect;
pub use profile::{
    epsilon_profile, letter_profile, periodic_membership_from_profile, word_profile, Cell, Profile, RestrictedProfile,
};
pub use random::{random_family, random_nbw, DEFAULT_SEED};
pub use state_set::StateSet;
pub use to_nbw::{containment, fdfw_to_nbw, to_nbw_state_bound, Containment};
pub use upword::{enumerate_upwords, Decomposition, UpWord};
