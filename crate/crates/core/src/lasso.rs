//! Accepting-lasso search: the ground-truth membership oracle for
//! ultimately periodic words and the emptiness check.

use std::collections::VecDeque;

use crate::alphabet::Symbol;
use crate::nbw::{Nbw, StateId};
use crate::upword::UpWord;

/// A lasso in a labelled graph: a stem from an initial vertex to `cycle[0]`,
/// then a cycle returning to `cycle[0]` through an accepting vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lasso {
    /// Vertices from an initial vertex up to and including `cycle[0]`.
    pub stem: Vec<usize>,
    pub stem_labels: Vec<Symbol>,
    /// Vertices of the cycle; the last equals the first.
    pub cycle: Vec<usize>,
    pub cycle_labels: Vec<Symbol>,
}

/// Searches an explicit graph for a reachable cycle through an accepting
/// vertex. Among reachable accepting vertices on a cycle, the one closest to
/// an initial vertex (ties broken by vertex index) anchors the lasso, and
/// both stem and cycle are shortest paths, so the result is deterministic.
pub(crate) fn find_accepting_lasso(
    adj: &[Vec<(Symbol, usize)>],
    initial: impl IntoIterator<Item = usize>,
    accepting: impl Fn(usize) -> bool,
) -> Option<Lasso> {
    let n = adj.len();
    let (dist, parent) = bfs(adj, initial, |_| true);
    let comp = sccs(adj, &dist);
    let mut best: Option<usize> = None;
    for v in 0..n {
        if dist[v] == usize::MAX || !accepting(v) {
            continue;
        }
        let cyclic = adj[v].iter().any(|&(_, w)| w == v) || adj[v].iter().any(|&(_, w)| comp[w] == comp[v] && w != v);
        if cyclic && best.map_or(true, |b| dist[v] < dist[b]) {
            best = Some(v);
        }
    }
    let anchor = best?;

    let mut stem = vec![anchor];
    let mut stem_labels = Vec::new();
    let mut v = anchor;
    while let Some((p, a)) = parent[v] {
        stem.push(p);
        stem_labels.push(a);
        v = p;
    }
    stem.reverse();
    stem_labels.reverse();

    // shortest cycle: BFS inside the component from the anchor's successors
    let mut cpar: Vec<Option<(usize, Symbol)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    let mut closing = None;
    for &(a, w) in &adj[anchor] {
        if w == anchor {
            closing = Some((anchor, a));
            break;
        }
        if comp[w] == comp[anchor] && !seen[w] {
            seen[w] = true;
            cpar[w] = Some((anchor, a));
            queue.push_back(w);
        }
    }
    while closing.is_none() {
        let v = queue.pop_front().expect("anchor lies on a cycle");
        for &(a, w) in &adj[v] {
            if w == anchor {
                closing = Some((v, a));
                break;
            }
            if comp[w] == comp[anchor] && !seen[w] {
                seen[w] = true;
                cpar[w] = Some((v, a));
                queue.push_back(w);
            }
        }
    }
    let (last, a) = closing.expect("cycle found");
    let mut cycle = vec![anchor, last];
    let mut cycle_labels = vec![a];
    let mut v = last;
    while v != anchor {
        let (p, a) = cpar[v].expect("path back to anchor");
        cycle.push(p);
        cycle_labels.push(a);
        v = p;
    }
    cycle.reverse();
    cycle_labels.reverse();
    Some(Lasso {
        stem,
        stem_labels,
        cycle,
        cycle_labels,
    })
}

type Parents = Vec<Option<(usize, Symbol)>>;

fn bfs(
    adj: &[Vec<(Symbol, usize)>],
    initial: impl IntoIterator<Item = usize>,
    keep: impl Fn(usize) -> bool,
) -> (Vec<usize>, Parents) {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![None; n];
    let mut queue = VecDeque::new();
    for v in initial {
        if dist[v] == usize::MAX {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &(a, w) in &adj[v] {
            if dist[w] == usize::MAX && keep(w) {
                dist[w] = dist[v] + 1;
                parent[w] = Some((v, a));
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

/// Iterative Tarjan over the vertices with finite `dist`; returns a
/// component id per vertex (`usize::MAX` for unreachable ones).
fn sccs(adj: &[Vec<(Symbol, usize)>], dist: &[usize]) -> Vec<usize> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    for root in 0..n {
        if dist[root] == usize::MAX || index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if *edge < adj[v].len() {
                let w = adj[v][*edge].1;
                *edge += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

/// A run witness of `u·v^ω ∈ L(A)` projected onto automaton states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LassoWitness {
    /// States from an initial state up to the first cycle state.
    pub stem: Vec<StateId>,
    /// Cycle states; the last repeats the first and at least one is accepting.
    pub cycle: Vec<StateId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub accepted: bool,
    pub witness: Option<LassoWitness>,
}

/// Decides `u·v^ω ∈ L(A)` on the product of `A` with the lasso-shaped graph
/// of the word (`|u| + |v|` positions, the period positions cyclic).
pub fn lasso_membership(a: &Nbw, w: &UpWord) -> MembershipVerdict {
    let (u, v) = (w.prefix(), w.period());
    let len = u.len() + v.len();
    let next_pos = |p: usize| if p + 1 < len { p + 1 } else { u.len() };
    let n = a.num_states();
    let vertex = |q: StateId, p: usize| q * len + p;
    let mut adj = vec![Vec::new(); n * len];
    for q in a.states() {
        for p in 0..len {
            let sym = w.letter(p);
            let np = next_pos(p);
            adj[vertex(q, p)] = a.successors(q, sym).iter().map(|&r| (sym, vertex(r, np))).collect();
        }
    }
    let lasso = find_accepting_lasso(&adj, a.initial().iter().map(|q| vertex(q, 0)), |x| {
        a.is_accepting(x / len)
    });
    match lasso {
        Some(l) => MembershipVerdict {
            accepted: true,
            witness: Some(LassoWitness {
                stem: l.stem.iter().map(|x| x / len).collect(),
                cycle: l.cycle.iter().map(|x| x / len).collect(),
            }),
        },
        None => MembershipVerdict {
            accepted: false,
            witness: None,
        },
    }
}

/// Shorthand for `lasso_membership(a, w).accepted`.
pub fn accepts(a: &Nbw, w: &UpWord) -> bool {
    lasso_membership(a, w).accepted
}

pub(crate) fn nbw_adjacency(a: &Nbw) -> Vec<Vec<(Symbol, usize)>> {
    a.states()
        .map(|q| {
            (0..a.alphabet().len())
                .flat_map(|s| a.successors(q, s).iter().map(move |&r| (s, r)))
                .collect()
        })
        .collect()
}

/// Emptiness of `L(A)`: `None` when empty, otherwise an accepting lasso
/// whose labels spell a word of `L(A)`.
pub fn is_empty(a: &Nbw) -> Option<Lasso> {
    find_accepting_lasso(&nbw_adjacency(a), a.initial().iter(), |q| a.is_accepting(q))
}

impl Lasso {
    /// The ultimately periodic word spelled by the stem and cycle labels.
    pub fn word(&self) -> UpWord {
        UpWord::new(self.stem_labels.clone(), self.cycle_labels.clone()).expect("a cycle has at least one edge")
    }
}
