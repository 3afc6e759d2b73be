//! Preordered subsets, the ordered successor function `φ`, the ordered run
//! DAG, and the optimal congruences built on them.
//!
//! A preordered subset lists the currently reachable states as disjoint
//! blocks from least to greatest. A state is greater the more recently the
//! runs reaching it have been able to visit an accepting state, which is the
//! ordering a rank-based complementation would track.

use std::fmt;

use crate::alphabet::{Symbol, Word};
use crate::congruence::CongruenceDfw;
use crate::error::Result;
use crate::nbw::{Nbw, StateId};
use crate::state_set::StateSet;

/// Disjoint non-empty blocks `⟨S_1, .., S_k⟩`, leftmost least.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PreorderedSubset {
    blocks: Vec<StateSet>,
}

impl PreorderedSubset {
    /// Builds from blocks, dropping empty ones. Panics if blocks overlap.
    pub fn new(blocks: impl IntoIterator<Item = StateSet>) -> Self {
        let blocks: Vec<StateSet> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        let mut seen = StateSet::new();
        for b in &blocks {
            assert!(!seen.intersects(b), "blocks of a preordered subset must be disjoint");
            seen.union_with(b);
        }
        PreorderedSubset { blocks }
    }

    pub fn blocks(&self) -> &[StateSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The union of the blocks, forgetting the order.
    pub fn states(&self) -> StateSet {
        let mut s = StateSet::new();
        for b in &self.blocks {
            s.union_with(b);
        }
        s
    }

    /// Index of the block holding `q`.
    pub fn block_of(&self, q: StateId) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(q))
    }

    /// Renders as `<{a,b},{c}>`.
    pub fn display<'a>(&'a self, a: &'a Nbw) -> impl fmt::Display + 'a {
        struct D<'a>(&'a PreorderedSubset, &'a Nbw);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.0.blocks.iter().map(|b| self.1.format_set(b)).collect();
                write!(f, "<{}>", parts.join(","))
            }
        }
        D(self, a)
    }
}

/// `I/≼ = ⟨I \ F, I ∩ F⟩` without empty blocks.
pub fn initial_preordered(a: &Nbw) -> PreorderedSubset {
    let i = a.initial();
    PreorderedSubset::new([i.difference(a.accepting()), i.intersection(a.accepting())])
}

/// For each state, the greatest block of `p` holding one of its
/// `x`-predecessors.
fn parent_blocks(a: &Nbw, p: &PreorderedSubset, x: Symbol) -> Vec<Option<usize>> {
    let mut parent = vec![None; a.num_states()];
    for (j, block) in p.blocks.iter().enumerate() {
        for q in block.iter() {
            for &r in a.successors(q, x) {
                parent[r] = Some(j);
            }
        }
    }
    parent
}

/// `φ(P, a)`. A successor `q'` is ranked by the greatest block with an
/// `a`-predecessor of it, ties split by putting non-accepting states first.
pub fn phi_step(a: &Nbw, p: &PreorderedSubset, x: Symbol) -> PreorderedSubset {
    let mut blocks = vec![StateSet::new(); 2 * p.len()];
    for (r, j) in parent_blocks(a, p, x).into_iter().enumerate() {
        if let Some(j) = j {
            blocks[2 * j + usize::from(a.is_accepting(r))].insert(r);
        }
    }
    PreorderedSubset::new(blocks)
}

/// `φ(I/≼, u)`.
pub fn phi_word(a: &Nbw, u: &[Symbol]) -> PreorderedSubset {
    u.iter().fold(initial_preordered(a), |p, &x| phi_step(a, &p, x))
}

/// The levels of the ordered run DAG along a finite word, with the
/// F-vertices (blocks produced as accepting-successor sets) flagged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedRunDag {
    pub levels: Vec<PreorderedSubset>,
    pub f_flags: Vec<Vec<bool>>,
}

/// Builds the ordered run DAG level by level: each vertex `S_j` contributes
/// its non-accepting successors and then its accepting successors, a state
/// listed several times keeps only its rightmost occurrence, and empty
/// vertices vanish.
pub fn ordered_run_dag(a: &Nbw, u: &[Symbol]) -> OrderedRunDag {
    let f = a.accepting();
    let i = a.initial();
    let first: Vec<(StateSet, bool)> = vec![(i.difference(f), false), (i.intersection(f), true)];
    let mut level: Vec<(StateSet, bool)> = first.into_iter().filter(|(s, _)| !s.is_empty()).collect();
    let mut dag = OrderedRunDag {
        levels: Vec::new(),
        f_flags: Vec::new(),
    };
    let push = |dag: &mut OrderedRunDag, level: &[(StateSet, bool)]| {
        dag.levels
            .push(PreorderedSubset::new(level.iter().map(|(s, _)| s.clone())));
        dag.f_flags.push(level.iter().map(|&(_, b)| b).collect());
    };
    push(&mut dag, &level);
    for &x in u {
        let mut parts: Vec<(StateSet, bool)> = Vec::with_capacity(2 * level.len());
        for (s, _) in &level {
            let succ = a.step(s, x);
            parts.push((succ.difference(f), false));
            parts.push((succ.intersection(f), true));
        }
        // scan right to left so the first sighting is the rightmost one
        let mut kept = StateSet::new();
        for (s, _) in parts.iter_mut().rev() {
            s.difference_with(&kept);
            kept.union_with(s);
        }
        level = parts.into_iter().filter(|(s, _)| !s.is_empty()).collect();
        push(&mut dag, &level);
    }
    dag
}

/// The optimal leading congruence: `u ∼ᵒ v` iff `φ(I/≼, u) = φ(I/≼, v)`.
pub fn optimal_leading_congruence(a: &Nbw, budget: usize) -> Result<CongruenceDfw<PreorderedSubset>> {
    CongruenceDfw::explore(a.alphabet(), "optimal", budget, initial_preordered(a), |p, x| {
        phi_step(a, p, x)
    })
}

/// For each state reached after `uv`, the greatest block of the base
/// `φ(I/≼, u)` from which it is reachable on `v`; `None` for states not
/// reached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MaxClassMap(pub Vec<Option<usize>>);

impl MaxClassMap {
    /// The identity block assignment of the base.
    pub fn identity(n: usize, base: &PreorderedSubset) -> Self {
        MaxClassMap((0..n).map(|q| base.block_of(q)).collect())
    }

    pub fn get(&self, q: StateId) -> Option<usize> {
        self.0[q]
    }

    pub fn domain(&self) -> StateSet {
        self.0.iter().enumerate().filter_map(|(q, v)| v.map(|_| q)).collect()
    }

    /// `f'(q') = max { f(q) | q' ∈ δ(q, x) }`.
    pub fn step(&self, a: &Nbw, x: Symbol) -> Self {
        let mut out = vec![None; self.0.len()];
        for (q, v) in self.0.iter().enumerate() {
            if let Some(v) = *v {
                for &r in a.successors(q, x) {
                    out[r] = out[r].max(Some(v));
                }
            }
        }
        MaxClassMap(out)
    }
}

/// A class payload of the optimal progress congruence.
///
/// Besides `φ(base, v)` and the greatest base block reaching each state, it
/// records the states whose ordered ancestry back to the base visits an
/// accepting state. The ordered ancestry of a state follows, letter by
/// letter, the greatest block holding a predecessor; it ends in exactly the
/// base block `f` names. Without this set, `v = a` and `v = bb` would be
/// equivalent for a state `p` with an `a` self-loop and a `bb` cycle through
/// an accepting state, although only `(bb)^ω` is accepted from `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OptProgressState {
    pub phi_state: PreorderedSubset,
    pub f: MaxClassMap,
    pub visited: StateSet,
}

impl OptProgressState {
    /// The payload of `ε`.
    pub fn initial(a: &Nbw, base: &PreorderedSubset) -> Self {
        OptProgressState {
            phi_state: base.clone(),
            f: MaxClassMap::identity(a.num_states(), base),
            visited: StateSet::new(),
        }
    }

    pub fn step(&self, a: &Nbw, x: Symbol) -> Self {
        let parent = parent_blocks(a, &self.phi_state, x);
        let mut visited = StateSet::new();
        for (r, j) in parent.iter().enumerate() {
            if let Some(j) = *j {
                // states of one block share their ancestry
                let rep = self.phi_state.blocks[j].first().expect("blocks are non-empty");
                if a.is_accepting(r) || self.visited.contains(rep) {
                    visited.insert(r);
                }
            }
        }
        OptProgressState {
            phi_state: phi_step(a, &self.phi_state, x),
            f: self.f.step(a, x),
            visited,
        }
    }
}

/// The optimal progress congruence for the prefixes `u` with
/// `φ(I/≼, u) = base`: `v` and `v'` are equivalent iff their
/// [`OptProgressState`] payloads agree.
pub fn optimal_progress_congruence(
    a: &Nbw,
    base: &PreorderedSubset,
    budget: usize,
) -> Result<CongruenceDfw<OptProgressState>> {
    CongruenceDfw::explore(
        a.alphabet(),
        "optimal-progress",
        budget,
        OptProgressState::initial(a, base),
        |s, x| s.step(a, x),
    )
}

/// Decides `u·v^ω ∈ L(A)` from the payload of `v` when `φ(base, v) = base`.
///
/// Each base block then has one ancestor block one period earlier, so the
/// ordered run DAG over `u·v^ω` repeats the functional graph "block to
/// ancestor". Its infinite branches are exactly the walks that end in a
/// cycle, and a branch visits accepting vertices infinitely often iff its
/// cycle holds a block whose ancestry visits one.
pub fn optimal_periodic_membership(base: &PreorderedSubset, p: &OptProgressState) -> Result<bool> {
    if &p.phi_state != base {
        return Err(crate::error::Error::Precondition(
            "φ(base, v) must equal base for the periodic membership decision".into(),
        ));
    }
    let k = base.len();
    let anc: Vec<usize> = base
        .blocks
        .iter()
        .map(|b| {
            p.f.get(b.first().expect("non-empty"))
                .expect("present states have an ancestor")
        })
        .collect();
    let marked: Vec<bool> = base
        .blocks
        .iter()
        .map(|b| p.visited.contains(b.first().expect("non-empty")))
        .collect();
    // blocks on cycles of the functional graph are those reached from
    // themselves within k steps
    Ok((0..k).any(|b| {
        let mut c = anc[b];
        for _ in 0..k {
            if c == b {
                break;
            }
            c = anc[c];
        }
        if c != b {
            return false;
        }
        let mut x = b;
        loop {
            if marked[x] {
                return true;
            }
            x = anc[x];
            if x == b {
                return false;
            }
        }
    }))
}

/// `f` computed directly from reachability on `v`, without the incremental
/// rule; used to validate [`MaxClassMap::step`].
pub fn max_class_map_direct(a: &Nbw, base: &PreorderedSubset, v: &Word) -> MaxClassMap {
    let mut out = vec![None; a.num_states()];
    for (j, block) in base.blocks().iter().enumerate() {
        for p in block.iter() {
            for r in a.step_word(&StateSet::singleton(p), v).iter() {
                out[r] = out[r].max(Some(j));
            }
        }
    }
    MaxClassMap(out)
}
