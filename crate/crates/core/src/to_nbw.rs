//! From saturated FDFWs back to Büchi automata, and language containment.

use std::collections::{HashMap, VecDeque};

use crate::complement::complement_fdfw_optimal;
use crate::error::{Error, Result};
use crate::fdfw::Fdfw;
use crate::lasso::is_empty;
use crate::nbw::Nbw;
use crate::product::intersect;
use crate::upword::UpWord;

/// An NBW with the same ultimately periodic words as a saturated FDFW.
///
/// It accepts `M_q · (M_{q,q} ∩ N_q(ι, f) ∩ N_q(f, f))^ω` for every
/// leading state `q` and accepting progress state `f`, where `M_{q,q}` are
/// the words leading `q` back to `q`, `N_q(x, y)` the words moving `N_q`
/// from `x` to `y`, and `ι` the initial progress state. Requiring the loop
/// words to also lead `f` to `f` makes the set of loop words closed under
/// concatenation, so every accepted lasso yields a captured normalized
/// decomposition.
///
/// The prefix part is a non-accepting copy of `M`. For each `(q, f)` a loop
/// component tracks the triple (leading state from `q`, progress state from
/// `ι`, progress state from `f`) starting at `s = (q, ι, f)`; any transition
/// entering `(q, f, f)` is doubled by one into `s`, the only accepting state
/// of the component. Each prefix state `q` copies the outgoing transitions
/// of `s` for every `f`. Only reachable states are built, and states that
/// cannot reach an accepting state are trimmed.
pub fn fdfw_to_nbw(f: &Fdfw) -> Nbw {
    let m = f.leading();
    let k = f.alphabet().len();
    let mut names: Vec<String> = (0..m.len()).map(|q| format!("p_{}", m.name(q))).collect();
    let mut accepting = Vec::new();
    let mut trans: Vec<(usize, usize, usize)> = (0..m.len())
        .flat_map(|q| (0..k).map(move |a| (q, a, m.next(q, a))))
        .collect();
    // the start state of each loop component entered from prefix state q
    let mut starts: Vec<Vec<usize>> = vec![Vec::new(); m.len()];
    for (q, n) in f.progress().iter().enumerate() {
        for fin in (0..n.len()).filter(|&x| n.is_accepting(x)) {
            type Key = (usize, usize, usize);
            let mut ids: HashMap<Key, usize> = HashMap::new();
            let mut queue: VecDeque<Key> = VecDeque::new();
            let start = (q, n.initial(), fin);
            let mut id_of = |key: Key, names: &mut Vec<String>, queue: &mut VecDeque<Key>| {
                *ids.entry(key).or_insert_with(|| {
                    names.push(format!(
                        "l_{}_{}_{}_{}_{}",
                        m.name(q),
                        n.name(fin),
                        m.name(key.0),
                        n.name(key.1),
                        n.name(key.2)
                    ));
                    queue.push_back(key);
                    names.len() - 1
                })
            };
            let s = id_of(start, &mut names, &mut queue);
            accepting.push(s);
            starts[q].push(s);
            while let Some(key) = queue.pop_front() {
                let from = id_of(key, &mut names, &mut queue);
                for a in 0..k {
                    let next = (m.next(key.0, a), n.next(key.1, a), n.next(key.2, a));
                    let to = id_of(next, &mut names, &mut queue);
                    trans.push((from, a, to));
                    if next == (q, fin, fin) {
                        trans.push((from, a, s));
                    }
                }
            }
        }
    }
    let mut jumps = Vec::new();
    for (q, ss) in starts.iter().enumerate() {
        for &s in ss {
            jumps.extend(trans.iter().filter(|t| t.0 == s).map(|&(_, a, to)| (q, a, to)));
        }
    }
    trans.extend(jumps);
    let out = Nbw::new(f.alphabet().clone(), names.clone(), [m.initial()], accepting, trans)
        .expect("construction yields a valid automaton")
        .trim();
    if out.num_states() > 0 {
        return out;
    }
    // keep a lone initial state rather than an automaton without states
    Nbw::new(f.alphabet().clone(), vec![names[m.initial()].clone()], [0], [], []).expect("valid automaton")
}

/// The state bound `|M| + Σ_q (|M|·|N_q| + 1)` used in size reports.
pub fn to_nbw_state_bound(f: &Fdfw) -> usize {
    let m = f.leading().len();
    m + f.progress().iter().map(|n| m * n.len() + 1).sum::<usize>()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Containment {
    pub holds: bool,
    /// A word of `L(A) \ L(B)` when containment fails.
    pub counterexample: Option<UpWord>,
}

/// Decides `L(A) ⊆ L(B)` by checking `A ∩ ¬B` for emptiness, with `¬B`
/// obtained from the optimal complement FDFW of `B`.
pub fn containment(a: &Nbw, b: &Nbw, budget: usize) -> Result<Containment> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: a.alphabet().to_string(),
            right: b.alphabet().to_string(),
        });
    }
    let not_b = fdfw_to_nbw(&complement_fdfw_optimal(b, budget)?);
    let product = intersect(a, &not_b)?;
    let lasso = is_empty(&product);
    Ok(Containment {
        holds: lasso.is_none(),
        counterexample: lasso.map(|l| l.word()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::congruence::DEFAULT_BUDGET;
    use crate::dfw::Dfw;
    use crate::families::gen_bn;
    use crate::lasso::accepts;
    use crate::random::random_nbw;
    use crate::upword::enumerate_upwords;

    #[test]
    fn nothing_accepted_gives_empty() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let m = Dfw::new(ab.clone(), vec!["s".into()], 0, vec![vec![0, 0]], vec![false]).unwrap();
        let f = Fdfw::new(m.clone(), vec![m]).unwrap();
        assert!(is_empty(&fdfw_to_nbw(&f)).is_none());
    }

    #[test]
    fn b3_complement_nbw() {
        let b3 = gen_bn(3);
        let f = complement_fdfw_optimal(&b3, DEFAULT_BUDGET).unwrap();
        let c = fdfw_to_nbw(&f);
        for w in enumerate_upwords(b3.alphabet(), 3, 3) {
            assert_eq!(accepts(&c, &w), !accepts(&b3, &w), "{w:?}");
        }
        assert!(is_empty(&intersect(&b3, &c).unwrap()).is_none());
    }

    #[test]
    fn containment_basics() {
        for seed in 0..15 {
            let a = random_nbw(seed, 1 + seed as usize % 4, 2, 0.4, 0.3);
            assert!(containment(&a, &a, DEFAULT_BUDGET).unwrap().holds);
            let u = Nbw::universal(a.alphabet().clone());
            assert!(containment(&a, &u, DEFAULT_BUDGET).unwrap().holds);
        }
        let b3 = gen_bn(3);
        let u = Nbw::universal(b3.alphabet().clone());
        let r = containment(&u, &b3, DEFAULT_BUDGET).unwrap();
        assert!(!r.holds);
        let w = r.counterexample.unwrap();
        assert!(!accepts(&b3, &w));
        let other = Nbw::universal(Alphabet::new(["x"]).unwrap());
        assert!(matches!(
            containment(&u, &other, 10),
            Err(Error::AlphabetMismatch { .. })
        ));
    }
}
