//! Right-congruence quotients built by breadth-first exploration, and the
//! three reachability-based congruences of an NBW.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::dfw::Dfw;
use crate::error::{Error, Result};
use crate::nbw::Nbw;
use crate::profile::{epsilon_profile, letter_profile, Profile, RestrictedProfile};
use crate::state_set::StateSet;

/// Class budget used when none is configured.
pub const DEFAULT_BUDGET: usize = 200_000;

/// One equivalence class: its id, its shortlex-least member and the payload
/// identifying it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord<P> {
    pub id: usize,
    pub witness: Word,
    pub payload: P,
}

/// The quotient of `Σ*` by a right congruence, as a complete deterministic
/// transition system. Class 0 is the class of `ε`.
///
/// Classes are numbered in the order a FIFO exploration discovers them with
/// symbols tried in alphabet order, so each witness is the shortlex-least
/// word of its class and the table is reproducible.
#[derive(Clone, Debug)]
pub struct CongruenceDfw<P> {
    alphabet: Alphabet,
    relation: &'static str,
    classes: Vec<ClassRecord<P>>,
    delta: Vec<Vec<usize>>,
    accepting: Option<Vec<bool>>,
}

impl<P: Clone + Eq + Hash> CongruenceDfw<P> {
    /// Explores payloads reachable from `init` under `step`, failing once
    /// more than `budget` distinct payloads are found.
    pub fn explore(
        alphabet: &Alphabet,
        relation: &'static str,
        budget: usize,
        init: P,
        mut step: impl FnMut(&P, Symbol) -> P,
    ) -> Result<Self> {
        let k = alphabet.len();
        let mut ids: HashMap<P, usize> = HashMap::new();
        let mut classes = vec![ClassRecord {
            id: 0,
            witness: Vec::new(),
            payload: init.clone(),
        }];
        ids.insert(init, 0);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let next = step(&classes[c].payload, a);
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = classes.len();
                        if id >= budget {
                            return Err(Error::BudgetExceeded {
                                relation,
                                budget,
                                explored: id,
                            });
                        }
                        let mut witness = classes[c].witness.clone();
                        witness.push(a);
                        ids.insert(next.clone(), id);
                        classes.push(ClassRecord {
                            id,
                            witness,
                            payload: next,
                        });
                        queue.push_back(id);
                        id
                    }
                };
                row.push(id);
            }
            // classes are dequeued in id order, so rows line up with ids
            delta.push(row);
        }
        Ok(CongruenceDfw {
            alphabet: alphabet.clone(),
            relation,
            classes,
            delta,
            accepting: None,
        })
    }
}

impl<P> CongruenceDfw<P> {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relation(&self) -> &'static str {
        self.relation
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    /// Always false: the class of `ε` exists.
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ClassRecord<P>] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &ClassRecord<P> {
        &self.classes[id]
    }

    pub fn witness(&self, id: usize) -> &[Symbol] {
        &self.classes[id].witness
    }

    pub fn payload(&self, id: usize) -> &P {
        &self.classes[id].payload
    }

    pub fn next(&self, id: usize, a: Symbol) -> usize {
        self.delta[id][a]
    }

    pub fn run_from(&self, id: usize, w: &[Symbol]) -> usize {
        w.iter().fold(id, |c, &a| self.delta[c][a])
    }

    /// The class of `w`.
    pub fn run(&self, w: &[Symbol]) -> usize {
        self.run_from(0, w)
    }

    pub fn max_witness_len(&self) -> usize {
        self.classes.iter().map(|c| c.witness.len()).max().unwrap_or(0)
    }

    pub fn accepting(&self) -> Option<&[bool]> {
        self.accepting.as_deref()
    }

    pub fn is_accepting(&self, id: usize) -> bool {
        self.accepting.as_ref().is_some_and(|f| f[id])
    }

    pub fn set_accepting(&mut self, accepting: Vec<bool>) {
        assert_eq!(accepting.len(), self.len());
        self.accepting = Some(accepting);
    }

    /// The shortlex-least non-empty word of class `id`, if any.
    pub fn nonempty_witness(&self, id: usize) -> Option<Word> {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::new();
        for a in 0..self.alphabet.len() {
            let c = self.delta[0][a];
            if !seen[c] {
                seen[c] = true;
                queue.push_back((c, vec![a]));
            }
        }
        while let Some((c, w)) = queue.pop_front() {
            if c == id {
                return Some(w);
            }
            for a in 0..self.alphabet.len() {
                let d = self.delta[c][a];
                if !seen[d] {
                    seen[d] = true;
                    let mut w2 = w.clone();
                    w2.push(a);
                    queue.push_back((d, w2));
                }
            }
        }
        None
    }

    /// Up to `count` members of class `id` other than its witness, in
    /// shortlex order, among words of length at most `max_len`.
    pub fn alternate_witnesses(&self, id: usize, count: usize, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for len in 0..=max_len {
            for w in self.alphabet.words_of_length(len) {
                if out.len() == count {
                    return out;
                }
                if self.run(&w) == id && w != self.classes[id].witness {
                    out.push(w);
                }
            }
        }
        out
    }

    /// The quotient as a DFW with states `{prefix}0, {prefix}1, ..`.
    pub fn to_dfw(&self, prefix: &str) -> Dfw {
        let names = (0..self.len()).map(|i| format!("{prefix}{i}")).collect();
        let accepting = self.accepting.clone().unwrap_or_else(|| vec![false; self.len()]);
        Dfw::new(self.alphabet.clone(), names, 0, self.delta.clone(), accepting).expect("the class table is complete")
    }
}

/// Pairs `(finer class, coarser class)` showing that the first relation
/// does not refine the second: a class of `finer` meeting two classes of
/// `coarser`. Empty iff every `finer` class lies inside one `coarser` class.
///
/// Exact over all words, via the reachable part of the product of the two
/// transition systems.
pub fn refinement_violations<P, Q>(finer: &CongruenceDfw<P>, coarser: &CongruenceDfw<Q>) -> Vec<(usize, usize, usize)> {
    assert_eq!(finer.alphabet, coarser.alphabet);
    let mut image: Vec<Option<usize>> = vec![None; finer.len()];
    let mut seen = std::collections::HashSet::from([(0usize, 0usize)]);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    let mut out = Vec::new();
    while let Some((i, j)) = queue.pop_front() {
        match image[i] {
            None => image[i] = Some(j),
            Some(j0) if j0 != j => out.push((i, j0, j)),
            Some(_) => {}
        }
        for a in 0..finer.alphabet.len() {
            let p = (finer.next(i, a), coarser.next(j, a));
            if seen.insert(p) {
                queue.push_back(p);
            }
        }
    }
    out
}

pub fn refines<P, Q>(finer: &CongruenceDfw<P>, coarser: &CongruenceDfw<Q>) -> bool {
    refinement_violations(finer, coarser).is_empty()
}

/// The classical congruence: `u ∼ v` iff `u` and `v` have equal profiles.
pub fn classical_congruence(a: &Nbw, budget: usize) -> Result<CongruenceDfw<Profile>> {
    let letters: Vec<Profile> = (0..a.alphabet().len()).map(|s| letter_profile(a, s)).collect();
    CongruenceDfw::explore(a.alphabet(), "classical", budget, epsilon_profile(a), |p, s| {
        p.compose_unchecked(&letters[s])
    })
}

/// The subset right congruence: `u ∼ⁱ v` iff `δ(I, u) = δ(I, v)`. At most
/// `2^n` classes, so no budget applies.
pub fn subset_congruence(a: &Nbw) -> CongruenceDfw<StateSet> {
    CongruenceDfw::explore(a.alphabet(), "subset", usize::MAX, a.initial().clone(), |s, x| {
        a.step(s, x)
    })
    .expect("unbounded budget")
}

/// The progress congruence of the prefixes `u` with `δ(I, u) = rows`: `v`
/// and `v'` are equivalent iff their profiles agree on every row in `rows`.
pub fn progress_congruence_improved(
    a: &Nbw,
    rows: &StateSet,
    budget: usize,
) -> Result<CongruenceDfw<RestrictedProfile>> {
    let letters: Vec<Profile> = (0..a.alphabet().len()).map(|s| letter_profile(a, s)).collect();
    let init = RestrictedProfile::new(rows.clone(), &epsilon_profile(a));
    CongruenceDfw::explore(a.alphabet(), "improved-progress", budget, init, |p, s| {
        p.then(&letters[s])
    })
}
