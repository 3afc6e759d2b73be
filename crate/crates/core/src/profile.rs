//! Transition profiles: for a word `u` and every pair of states `(q, r)`,
//! whether `q` reaches `r` on `u`, and whether it can do so while visiting
//! an accepting state.
//!
//! A run includes both of its endpoints, so a length-zero run from `q`
//! visits `F` iff `q ∈ F`, and a one-letter run visits `F` iff either
//! endpoint is accepting. Under this convention the ε-profile is the exact
//! identity of [`Profile::compose`].

use std::fmt;

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::nbw::{Nbw, StateId};
use crate::state_set::StateSet;

/// The value of one profile cell, ordered `Absent < Reach < ReachF`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Absent,
    Reach,
    /// Reachable through a run visiting an accepting state.
    ReachF,
}

/// A profile stored as two bit matrices, one row per source state.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    reach: Vec<StateSet>,
    // always a subset of `reach` row by row
    reach_f: Vec<StateSet>,
}

impl Profile {
    pub fn empty(n: usize) -> Self {
        Profile {
            reach: vec![StateSet::new(); n],
            reach_f: vec![StateSet::new(); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.reach.len()
    }

    pub fn get(&self, q: StateId, r: StateId) -> Cell {
        if self.reach_f[q].contains(r) {
            Cell::ReachF
        } else if self.reach[q].contains(r) {
            Cell::Reach
        } else {
            Cell::Absent
        }
    }

    pub fn set(&mut self, q: StateId, r: StateId, c: Cell) {
        match c {
            Cell::Absent => {
                self.reach[q].remove(r);
                self.reach_f[q].remove(r);
            }
            Cell::Reach => {
                self.reach[q].insert(r);
                self.reach_f[q].remove(r);
            }
            Cell::ReachF => {
                self.reach[q].insert(r);
                self.reach_f[q].insert(r);
            }
        }
    }

    /// States reachable from `q`.
    pub fn row(&self, q: StateId) -> &StateSet {
        &self.reach[q]
    }

    pub fn row_f(&self, q: StateId) -> &StateSet {
        &self.reach_f[q]
    }

    /// `δ(S, u)` read off the reach rows.
    pub fn image(&self, set: &StateSet) -> StateSet {
        let mut out = StateSet::new();
        for q in set.iter() {
            out.union_with(&self.reach[q]);
        }
        out
    }

    /// Profile of the concatenation: `(q, r)` is reachable iff some `s` has
    /// `q → s` and `s → r`, and reachable through `F` iff one of the two
    /// halves is.
    pub fn compose(&self, other: &Profile) -> Result<Profile> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Profile) -> Profile {
        let n = self.dim();
        let mut out = Profile::empty(n);
        for q in 0..n {
            for s in self.reach[q].iter() {
                out.reach[q].union_with(&other.reach[s]);
                out.reach_f[q].union_with(&other.reach_f[s]);
                if self.reach_f[q].contains(s) {
                    out.reach_f[q].union_with(&other.reach[s]);
                }
            }
        }
        out
    }

    /// Keeps only the rows of `rows`.
    pub fn restrict_rows(&self, rows: &StateSet) -> Profile {
        let mut out = self.clone();
        for q in 0..self.dim() {
            if !rows.contains(q) {
                out.reach[q] = StateSet::new();
                out.reach_f[q] = StateSet::new();
            }
        }
        out
    }

    /// The `S × S` block; rows and columns outside `S` are cleared.
    pub fn restrict_square(&self, set: &StateSet) -> Profile {
        let mut out = self.restrict_rows(set);
        for q in set.iter() {
            out.reach[q].intersect_with(set);
            out.reach_f[q].intersect_with(set);
        }
        out
    }

    /// The encoding as a set of triples `(q, bit, r)`: `(q, 0, r)` for
    /// reachability and `(q, 1, r)` for reachability through `F`.
    pub fn triples(&self) -> Vec<(StateId, u8, StateId)> {
        let mut out = Vec::new();
        for q in 0..self.dim() {
            out.extend(self.reach[q].iter().map(|r| (q, 0, r)));
            out.extend(self.reach_f[q].iter().map(|r| (q, 1, r)));
        }
        out.sort_unstable();
        out
    }

    pub fn from_triples(n: usize, triples: &[(StateId, u8, StateId)]) -> Profile {
        let mut p = Profile::empty(n);
        for &(q, bit, r) in triples {
            if bit == 0 {
                p.reach[q].insert(r);
            } else {
                p.reach_f[q].insert(r);
            }
        }
        p
    }

    /// Compact rendering used in witness tables: one `q>r` or `q=>r` entry
    /// per non-absent cell, `=>` marking reachability through `F`.
    pub fn display<'a>(&'a self, a: &'a Nbw) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Profile, &'a Nbw);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut first = true;
                f.write_str("[")?;
                for q in 0..self.0.dim() {
                    for r in self.0.reach[q].iter() {
                        if !first {
                            f.write_str(",")?;
                        }
                        first = false;
                        let arrow = if self.0.reach_f[q].contains(r) { "=>" } else { ">" };
                        write!(f, "{}{arrow}{}", self.1.name(q), self.1.name(r))?;
                    }
                }
                f.write_str("]")
            }
        }
        D(self, a)
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.triples()).finish()
    }
}

/// The ε-profile: `(q, q)` is `ReachF` for accepting `q`, `Reach` otherwise.
pub fn epsilon_profile(a: &Nbw) -> Profile {
    let mut p = Profile::empty(a.num_states());
    for q in a.states() {
        let c = if a.is_accepting(q) { Cell::ReachF } else { Cell::Reach };
        p.set(q, q, c);
    }
    p
}

/// The profile of a single letter.
pub fn letter_profile(a: &Nbw, sym: Symbol) -> Profile {
    let mut p = Profile::empty(a.num_states());
    for q in a.states() {
        for &r in a.successors(q, sym) {
            let c = if a.is_accepting(q) || a.is_accepting(r) {
                Cell::ReachF
            } else {
                Cell::Reach
            };
            p.set(q, r, c);
        }
    }
    p
}

/// Left fold of [`Profile::compose`] over the letters of `u`.
pub fn word_profile(a: &Nbw, u: &[Symbol]) -> Profile {
    u.iter()
        .fold(epsilon_profile(a), |p, &s| p.compose_unchecked(&letter_profile(a, s)))
}

/// A profile restricted to the rows of a fixed state set `S`; the payload of
/// the per-prefix progress congruence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RestrictedProfile {
    rows: StateSet,
    profile: Profile,
}

impl RestrictedProfile {
    pub fn new(rows: StateSet, profile: &Profile) -> Self {
        RestrictedProfile {
            profile: profile.restrict_rows(&rows),
            rows,
        }
    }

    pub fn rows(&self) -> &StateSet {
        &self.rows
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn get(&self, q: StateId, r: StateId) -> Cell {
        self.profile.get(q, r)
    }

    /// Extends the underlying word by one letter.
    pub fn then(&self, letter: &Profile) -> RestrictedProfile {
        RestrictedProfile {
            rows: self.rows.clone(),
            profile: self.profile.compose_unchecked(letter),
        }
    }
}

/// Decides `u·v^ω ∈ L(A)` from `S = δ(I, u)` and the profile of `v`
/// restricted to `S`, without consulting the automaton.
///
/// Requires `δ(S, v) = S`; then every `v`-boundary of a run lies in `S`, so
/// the word is accepted iff some `q ∈ S` lies on a `v^+` cycle through an
/// accepting state, which the transitive closure of the `S × S` block shows.
pub fn periodic_membership_from_profile(set: &StateSet, p: &RestrictedProfile) -> Result<bool> {
    if &p.profile.image(set) != set {
        return Err(Error::Precondition(
            "δ(S, v) must equal S for the periodic membership decision".into(),
        ));
    }
    let block = p.profile.restrict_square(set);
    let mut closure = block.clone();
    loop {
        let next = closure.compose_unchecked(&block);
        let mut grown = closure.clone();
        for q in set.iter() {
            grown.reach[q].union_with(&next.reach[q]);
            grown.reach_f[q].union_with(&next.reach_f[q]);
        }
        if grown == closure {
            break;
        }
        closure = grown;
    }
    Ok(set.iter().any(|q| closure.reach_f[q].contains(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::families::gen_bn;
    use crate::lasso::accepts;
    use crate::random::random_nbw;
    use crate::upword::UpWord;
    use proptest::prelude::*;

    fn st(a: &Nbw, n: &str) -> StateId {
        a.state(n).unwrap()
    }

    #[test]
    fn epsilon_diagonal() {
        let ab = Alphabet::new(["a"]).unwrap();
        let none = Nbw::new(ab.clone(), vec!["x".into(), "y".into()], [0], [], []).unwrap();
        let all = Nbw::new(ab, vec!["x".into(), "y".into()], [0], [0, 1], []).unwrap();
        let e = epsilon_profile(&none);
        assert_eq!(e.triples(), vec![(0, 0, 0), (1, 0, 1)]);
        let e = epsilon_profile(&all);
        assert_eq!(e.get(0, 0), Cell::ReachF);
        assert_eq!(e.get(1, 1), Cell::ReachF);
        assert_eq!(e.get(0, 1), Cell::Absent);

        let b3 = gen_bn(3);
        let e = epsilon_profile(&b3);
        let f_diag: Vec<&str> = b3
            .states()
            .filter(|&q| e.get(q, q) == Cell::ReachF)
            .map(|q| b3.name(q))
            .collect();
        assert_eq!(f_diag, vec!["q", "qm1"]);
    }

    #[test]
    fn letter_profiles_on_b3() {
        let b3 = gen_bn(3);
        let zero = letter_profile(&b3, 0);
        assert_eq!(zero.get(st(&b3, "q"), st(&b3, "q0")), Cell::ReachF);
        let one = letter_profile(&b3, 1);
        assert_eq!(one.get(st(&b3, "q2"), st(&b3, "q2")), Cell::Reach);

        let ab = Alphabet::new(["a", "b"]).unwrap();
        let a = Nbw::new(ab, vec!["x".into()], [0], [0], [(0, 0, 0)]).unwrap();
        assert!(letter_profile(&a, 1).triples().is_empty());
    }

    #[test]
    fn compose_examples() {
        let b3 = gen_bn(3);
        let zero = letter_profile(&b3, 0);
        let p = word_profile(&b3, &[0, 0]);
        assert_eq!(p, zero.compose(&zero).unwrap());
        assert_eq!(p.get(st(&b3, "q"), st(&b3, "qm1")), Cell::ReachF);
        let e = epsilon_profile(&b3);
        assert_eq!(e.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&e).unwrap(), p);
        assert!(matches!(
            p.compose(&Profile::empty(2)),
            Err(Error::DimensionMismatch { left: 6, right: 2 })
        ));
    }

    #[test]
    fn triple_encoding_is_bijective() {
        let b3 = gen_bn(3);
        for w in [vec![], vec![0], vec![1, 2, 0], vec![3, 3, 1]] {
            let p = word_profile(&b3, &w);
            assert_eq!(Profile::from_triples(6, &p.triples()), p);
        }
    }

    #[test]
    fn periodic_membership_trivial() {
        let ab = Alphabet::new(["a"]).unwrap();
        let acc = Nbw::new(ab.clone(), vec!["p".into()], [0], [0], [(0, 0, 0)]).unwrap();
        let s = StateSet::singleton(0);
        let rp = RestrictedProfile::new(s.clone(), &letter_profile(&acc, 0));
        assert_eq!(rp.get(0, 0), Cell::ReachF);
        assert!(periodic_membership_from_profile(&s, &rp).unwrap());

        let rej = Nbw::new(ab, vec!["p".into()], [0], [], [(0, 0, 0)]).unwrap();
        let rp = RestrictedProfile::new(s.clone(), &letter_profile(&rej, 0));
        assert!(!periodic_membership_from_profile(&s, &rp).unwrap());
    }

    #[test]
    fn periodic_membership_b3() {
        let b3 = gen_bn(3);
        let s = b3.reach(&[0, 0]);
        let rp = RestrictedProfile::new(s.clone(), &word_profile(&b3, &[0]));
        assert!(periodic_membership_from_profile(&s, &rp).unwrap());
        assert!(accepts(&b3, &UpWord::new(vec![0, 0], vec![0]).unwrap()));
        // δ({q0,qm1}, 1) = {q0,qm1} as well, but δ({q}, 1) ≠ {q}
        let q = StateSet::singleton(st(&b3, "q"));
        let rp = RestrictedProfile::new(q.clone(), &word_profile(&b3, &[1]));
        assert!(matches!(
            periodic_membership_from_profile(&q, &rp),
            Err(Error::Precondition(_))
        ));
    }

    proptest! {
        #[test]
        fn monoid_law(seed in 0u64..200, x in proptest::collection::vec(0usize..2, 0..5),
                      y in proptest::collection::vec(0usize..2, 0..5)) {
            let a = random_nbw(seed, 4, 2, 0.35, 0.3);
            let xy: Vec<_> = x.iter().chain(&y).copied().collect();
            prop_assert_eq!(word_profile(&a, &x).compose(&word_profile(&a, &y)).unwrap(), word_profile(&a, &xy));
        }

        #[test]
        fn associativity(seed in 0u64..100, x in proptest::collection::vec(0usize..2, 0..4),
                         y in proptest::collection::vec(0usize..2, 0..4), z in proptest::collection::vec(0usize..2, 0..4)) {
            let a = random_nbw(seed, 5, 2, 0.3, 0.3);
            let (px, py, pz) = (word_profile(&a, &x), word_profile(&a, &y), word_profile(&a, &z));
            prop_assert_eq!(px.compose(&py).unwrap().compose(&pz).unwrap(), px.compose(&py.compose(&pz).unwrap()).unwrap());
        }

        #[test]
        fn image_is_reach(seed in 0u64..200, u in proptest::collection::vec(0usize..2, 0..6)) {
            let a = random_nbw(seed, 4, 2, 0.35, 0.3);
            prop_assert_eq!(word_profile(&a, &u).image(a.initial()), a.reach(&u));
        }
    }
}
