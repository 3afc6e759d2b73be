use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::nbw::{Nbw, StateId};

/// Büchi intersection by the two-copy product, restricted to reachable
/// states. A state `(p, q, c)` is named `(p,q,c)`; copy 0 waits for an
/// accepting state of `a`, copy 1 for one of `b`, and the accepting states
/// are the copy-1 states whose `b` component is accepting.
pub fn intersect(a: &Nbw, b: &Nbw) -> Result<Nbw> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: a.alphabet().to_string(),
            right: b.alphabet().to_string(),
        });
    }
    type Key = (StateId, StateId, u8);
    let mut ids: HashMap<Key, usize> = HashMap::new();
    let mut keys: Vec<Key> = Vec::new();
    let mut queue = VecDeque::new();
    let mut intern = |k: Key, keys: &mut Vec<Key>, queue: &mut VecDeque<usize>| {
        *ids.entry(k).or_insert_with(|| {
            keys.push(k);
            queue.push_back(keys.len() - 1);
            keys.len() - 1
        })
    };
    let mut initial = Vec::new();
    for p in a.initial().iter() {
        for q in b.initial().iter() {
            initial.push(intern((p, q, 0), &mut keys, &mut queue));
        }
    }
    let mut trans = Vec::new();
    while let Some(id) = queue.pop_front() {
        let (p, q, c) = keys[id];
        let next_c = match c {
            0 if a.is_accepting(p) => 1,
            1 if b.is_accepting(q) => 0,
            c => c,
        };
        for s in 0..a.alphabet().len() {
            for &p2 in a.successors(p, s) {
                for &q2 in b.successors(q, s) {
                    let t = intern((p2, q2, next_c), &mut keys, &mut queue);
                    trans.push((id, s, t));
                }
            }
        }
    }
    let accepting = keys
        .iter()
        .enumerate()
        .filter(|(_, &(_, q, c))| c == 1 && b.is_accepting(q))
        .map(|(i, _)| i);
    let names = keys
        .iter()
        .map(|&(p, q, c)| format!("({},{},{c})", a.name(p), b.name(q)))
        .collect();
    Nbw::new(a.alphabet().clone(), names, initial, accepting, trans)
}
