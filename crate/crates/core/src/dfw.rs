use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

/// A complete deterministic finite-word automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfw {
    alphabet: Alphabet,
    names: Vec<String>,
    initial: usize,
    delta: Vec<Vec<usize>>,
    accepting: Vec<bool>,
}

impl Dfw {
    pub fn new(
        alphabet: Alphabet,
        names: Vec<String>,
        initial: usize,
        delta: Vec<Vec<usize>>,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::semantic("a DFW needs at least one state"));
        }
        if initial >= n {
            return Err(Error::semantic("initial state out of range"));
        }
        if delta.len() != n || accepting.len() != n {
            return Err(Error::semantic("transition table size does not match states"));
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::semantic(format!("state {} is missing transitions", names[q])));
            }
            if row.iter().any(|&t| t >= n) {
                return Err(Error::semantic("transition target out of range"));
            }
        }
        Ok(Dfw {
            alphabet,
            names,
            initial,
            delta,
            accepting,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn name(&self, q: usize) -> &str {
        &self.names[q]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn next(&self, q: usize, a: Symbol) -> usize {
        self.delta[q][a]
    }

    pub fn run_from(&self, q: usize, w: &[Symbol]) -> usize {
        w.iter().fold(q, |q, &a| self.delta[q][a])
    }

    /// `D(w)`, the state reached from the initial state.
    pub fn run(&self, w: &[Symbol]) -> usize {
        self.run_from(self.initial, w)
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting(&self) -> &[bool] {
        &self.accepting
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        self.accepting[self.run(w)]
    }

    pub fn has_accepting(&self) -> bool {
        self.accepting.iter().any(|&f| f)
    }

    pub fn set_accepting(&mut self, accepting: Vec<bool>) {
        assert_eq!(accepting.len(), self.len());
        self.accepting = accepting;
    }

    pub(crate) fn complement_accepting(&mut self) {
        for f in &mut self.accepting {
            *f = !*f;
        }
    }
}
