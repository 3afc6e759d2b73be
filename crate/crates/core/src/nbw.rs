//! Nondeterministic Büchi automata.

use std::collections::HashMap;

use crate::alphabet::{is_token, Alphabet, Symbol};
use crate::error::{Error, Result};
use crate::state_set::StateSet;

/// Index of a state in its automaton's declared state order.
pub type StateId = usize;

/// A nondeterministic Büchi automaton `(Q, I, δ, F)`.
///
/// States are identified by string names but addressed by their index in
/// declaration order. Missing `(state, symbol)` entries of `δ` denote the
/// empty successor set; no sink is ever added implicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nbw {
    alphabet: Alphabet,
    names: Vec<String>,
    initial: StateSet,
    accepting: StateSet,
    // succ[q][a] is sorted and duplicate free
    succ: Vec<Vec<Vec<StateId>>>,
}

impl Nbw {
    /// Builds an automaton from raw parts, validating every invariant.
    pub fn new(
        alphabet: Alphabet,
        names: Vec<String>,
        initial: impl IntoIterator<Item = StateId>,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (StateId, Symbol, StateId)>,
    ) -> Result<Self> {
        let n = names.len();
        let mut seen = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if !is_token(name) || name == "->" {
                return Err(Error::semantic(format!("invalid state name {name:?}")));
            }
            if seen.insert(name.as_str(), i).is_some() {
                return Err(Error::semantic(format!("duplicate state {name:?}")));
            }
        }
        let check = |q: StateId| {
            if q < n {
                Ok(q)
            } else {
                Err(Error::semantic(format!("state index {q} out of range")))
            }
        };
        let initial = initial.into_iter().map(check).collect::<Result<StateSet>>()?;
        let accepting = accepting.into_iter().map(check).collect::<Result<StateSet>>()?;
        let mut succ = vec![vec![Vec::new(); alphabet.len()]; n];
        for (p, a, q) in transitions {
            check(p)?;
            check(q)?;
            if a >= alphabet.len() {
                return Err(Error::semantic(format!("symbol index {a} out of range")));
            }
            succ[p][a].push(q);
        }
        for row in &mut succ {
            for targets in row.iter_mut() {
                targets.sort_unstable();
                targets.dedup();
            }
        }
        Ok(Nbw {
            alphabet,
            names,
            initial,
            accepting,
            succ,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.names.len()
    }

    pub fn name(&self, q: StateId) -> &str {
        &self.names[q]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn state(&self, name: &str) -> Option<StateId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn initial(&self) -> &StateSet {
        &self.initial
    }

    pub fn accepting(&self) -> &StateSet {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(q)
    }

    /// Successors `δ(q, a)` in ascending state order.
    pub fn successors(&self, q: StateId, a: Symbol) -> &[StateId] {
        &self.succ[q][a]
    }

    /// All transitions `(p, a, q)` ordered by source, symbol, target.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        self.succ.iter().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, ts)| ts.iter().map(move |&q| (p, a, q)))
        })
    }

    pub fn num_transitions(&self) -> usize {
        self.succ.iter().flatten().map(Vec::len).sum()
    }

    /// `δ(S, a)`, the union of the `a`-successors of `S`.
    pub fn step(&self, set: &StateSet, a: Symbol) -> StateSet {
        let mut out = StateSet::new();
        for q in set.iter() {
            out.extend(self.succ[q][a].iter().copied());
        }
        out
    }

    /// `δ(S, u)`.
    pub fn step_word(&self, set: &StateSet, u: &[Symbol]) -> StateSet {
        u.iter().fold(set.clone(), |s, &a| self.step(&s, a))
    }

    /// `δ(I, u)`; `reach(ε) = I`.
    pub fn reach(&self, u: &[Symbol]) -> StateSet {
        self.step_word(&self.initial, u)
    }

    /// One initial state and at most one successor per `(state, symbol)`.
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() == 1 && self.succ.iter().flatten().all(|ts| ts.len() <= 1)
    }

    pub fn is_complete(&self) -> bool {
        !self.initial.is_empty() && self.succ.iter().flatten().all(|ts| !ts.is_empty())
    }

    /// The one-state automaton accepting every infinite word.
    pub fn universal(alphabet: Alphabet) -> Nbw {
        let k = alphabet.len();
        Nbw::new(alphabet, vec!["u".into()], [0], [0], (0..k).map(|a| (0, a, 0)))
            .expect("universal automaton is well formed")
    }

    /// Drops states that are unreachable or cannot reach an accepting state.
    /// The language is unchanged and the surviving states keep their order.
    pub fn trim(&self) -> Nbw {
        let n = self.num_states();
        let mut fwd = self.initial.clone();
        let mut stack: Vec<StateId> = fwd.iter().collect();
        while let Some(q) = stack.pop() {
            for &r in self.succ[q].iter().flatten() {
                if fwd.insert(r) {
                    stack.push(r);
                }
            }
        }
        let mut pred: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (p, _, q) in self.transitions() {
            pred[q].push(p);
        }
        let mut bwd = self.accepting.clone();
        let mut stack: Vec<StateId> = bwd.iter().collect();
        while let Some(q) = stack.pop() {
            for &p in &pred[q] {
                if bwd.insert(p) {
                    stack.push(p);
                }
            }
        }
        let keep = fwd.intersection(&bwd);
        let mut index = vec![usize::MAX; n];
        for (i, q) in keep.iter().enumerate() {
            index[q] = i;
        }
        let names = keep.iter().map(|q| self.names[q].clone()).collect();
        Nbw::new(
            self.alphabet.clone(),
            names,
            self.initial.intersection(&keep).iter().map(|q| index[q]),
            self.accepting.intersection(&keep).iter().map(|q| index[q]),
            self.transitions()
                .filter(|&(p, _, q)| keep.contains(p) && keep.contains(q))
                .map(|(p, a, q)| (index[p], a, index[q])),
        )
        .expect("a restriction of a valid automaton is valid")
    }

    /// Formats a set of states as `{a,b}` in declared state order.
    pub fn format_set(&self, set: &StateSet) -> String {
        let names: Vec<&str> = set.iter().map(|q| self.name(q)).collect();
        format!("{{{}}}", names.join(","))
    }
}
