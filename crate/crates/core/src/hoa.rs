//! A restricted reader for HOA-style Büchi automata.
//!
//! Supported header items are `HOA: v1`, `States: <n>`, `Start: <i>`
//! (repeatable), `Alphabet: <sym>...` (an extension replacing `AP:`; symbols
//! are explicit letters rather than propositions), `Acceptance: Buchi` or the
//! equivalent `Acceptance: 1 Inf(0)`, and the ignored `name:`, `acc-name:`
//! and `tool:` items. The body lists `State: <i> [{0}]` lines, where `{0}`
//! marks an accepting state, each followed by edges `[<sym>] <j>...`; the
//! label `[t]` stands for every symbol. States are named by their numbers.
//!
//! ```text
//! HOA: v1
//! States: 2
//! Start: 0
//! Alphabet: a b
//! Acceptance: Buchi
//! --BODY--
//! State: 0
//! [a] 0
//! [b] 1
//! State: 1 {0}
//! [t] 1
//! --END--
//! ```

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::format::Line;
use crate::nbw::Nbw;

pub(crate) fn parse_hoa(lines: &[Line<'_>]) -> Result<Nbw> {
    let mut states: Option<usize> = None;
    let mut start = Vec::new();
    let mut alphabet: Option<Alphabet> = None;
    let mut buchi = false;
    let mut it = lines.iter();
    for line in it.by_ref() {
        if line.text == "--BODY--" {
            break;
        }
        let (key, value) = line
            .text
            .split_once(':')
            .ok_or_else(|| Error::syntax(line.no, "expected `Key: value` header item"))?;
        let value = value.trim();
        match key.trim() {
            "HOA" => {
                if value != "v1" {
                    return Err(Error::syntax(line.no, "only `HOA: v1` is supported"));
                }
            }
            "States" => {
                states = Some(value.parse().map_err(|_| Error::syntax(line.no, "bad state count"))?);
            }
            "Start" => {
                let q: usize = value.parse().map_err(|_| Error::syntax(line.no, "bad start state"))?;
                start.push((line.no, q));
            }
            "Alphabet" => {
                let a = Alphabet::new(value.split_whitespace())
                    .map_err(|e| Error::semantic(format!("line {}: {e}", line.no)))?;
                alphabet = Some(a);
            }
            "Acceptance" => {
                let v: Vec<&str> = value.split_whitespace().collect();
                buchi = matches!(v.as_slice(), ["Buchi"] | ["1", "Inf(0)"]);
                if !buchi {
                    return Err(Error::syntax(line.no, "only Büchi acceptance is supported"));
                }
            }
            "name" | "acc-name" | "tool" => {}
            "AP" => {
                return Err(Error::syntax(
                    line.no,
                    "`AP:` is not supported; declare `Alphabet:` instead",
                ))
            }
            other => return Err(Error::syntax(line.no, format!("unsupported header item {other:?}"))),
        }
    }
    let first = lines.first().map_or(1, |l| l.no);
    let n = states.ok_or_else(|| Error::syntax(first, "missing `States:`"))?;
    let alphabet = alphabet.ok_or_else(|| Error::semantic("empty alphabet: missing `Alphabet:`"))?;
    if !buchi {
        return Err(Error::syntax(first, "missing `Acceptance: Buchi`"));
    }
    let check = |no: usize, q: usize| {
        if q < n {
            Ok(q)
        } else {
            Err(Error::semantic(format!("line {no}: unknown state {q}")))
        }
    };
    let initial = start.iter().map(|&(no, q)| check(no, q)).collect::<Result<Vec<_>>>()?;

    let mut accepting = Vec::new();
    let mut trans = Vec::new();
    let mut current: Option<usize> = None;
    let mut declared = vec![false; n];
    let mut ended = false;
    for line in it {
        if line.text == "--END--" {
            ended = true;
            break;
        }
        if let Some(rest) = line.text.strip_prefix("State:") {
            let mut toks = rest.split_whitespace();
            let q: usize = toks
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::syntax(line.no, "bad state number"))?;
            let q = check(line.no, q)?;
            if std::mem::replace(&mut declared[q], true) {
                return Err(Error::semantic(format!("line {}: duplicate state {q}", line.no)));
            }
            match toks.next() {
                None => {}
                Some("{0}") => accepting.push(q),
                Some(_) => return Err(Error::syntax(line.no, "expected `{0}` or nothing after state")),
            }
            current = Some(q);
        } else if let Some(rest) = line.text.strip_prefix('[') {
            let p = current.ok_or_else(|| Error::syntax(line.no, "edge before any `State:`"))?;
            let (label, targets) = rest
                .split_once(']')
                .ok_or_else(|| Error::syntax(line.no, "unterminated label"))?;
            let label = label.trim();
            let symbols: Vec<usize> = match alphabet.symbol(label) {
                Some(a) => vec![a],
                None if label == "t" => (0..alphabet.len()).collect(),
                None => return Err(Error::semantic(format!("line {}: unknown symbol {label:?}", line.no))),
            };
            for t in targets.split_whitespace() {
                let q: usize = t.parse().map_err(|_| Error::syntax(line.no, "bad target state"))?;
                let q = check(line.no, q)?;
                trans.extend(symbols.iter().map(|&a| (p, a, q)));
            }
        } else {
            return Err(Error::syntax(line.no, "expected `State:` or an edge"));
        }
    }
    if !ended {
        return Err(Error::syntax(lines.last().map_or(1, |l| l.no), "missing `--END--`"));
    }
    Nbw::new(
        alphabet,
        (0..n).map(|i| i.to_string()).collect(),
        initial,
        accepting,
        trans,
    )
}
