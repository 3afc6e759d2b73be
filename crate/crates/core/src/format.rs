//! Native line-oriented text formats for NBWs, DFWs and FDFWs.
//!
//! ```text
//! nbw
//! alphabet: 0 1
//! states: p r
//! initial: p
//! accepting: r
//! trans: p 0 -> p r
//! trans: r 1 -> r
//! ```
//!
//! Everything after `#` on a line is a comment. A `dfw` block uses the same
//! keys but must have exactly one initial state and exactly one successor
//! per state and symbol. An FDFW file is the header `fdfw`, the leading DFW
//! block, then one `progress <leading-state>` line per leading state, each
//! followed by that state's progress DFW block.
//!
//! [`parse_nbw`] also accepts the HOA subset described in [`crate::hoa`].

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Symbol};
use crate::dfw::Dfw;
use crate::error::{Error, Result};
use crate::fdfw::Fdfw;
use crate::nbw::{Nbw, StateId};

/// A comment-stripped, non-empty line with its 1-based line number.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Line<'a> {
    pub no: usize,
    pub text: &'a str,
}

pub(crate) fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.split('#').next().unwrap_or("").trim();
            (!text.is_empty()).then_some(Line { no: i + 1, text })
        })
        .collect()
}

/// The key/value content of one `nbw` or `dfw` block before validation.
#[derive(Debug, Default)]
struct RawBlock<'a> {
    alphabet: Option<(usize, Vec<&'a str>)>,
    states: Option<(usize, Vec<&'a str>)>,
    initial: Vec<(usize, &'a str)>,
    accepting: Vec<(usize, &'a str)>,
    trans: Vec<(usize, &'a str, &'a str, Vec<&'a str>)>,
}

fn parse_block<'a>(body: &[Line<'a>]) -> Result<RawBlock<'a>> {
    let mut raw = RawBlock::default();
    for line in body {
        let (key, value) = line
            .text
            .split_once(':')
            .ok_or_else(|| Error::syntax(line.no, format!("expected `key: value`, got {:?}", line.text)))?;
        let toks: Vec<&str> = value.split_whitespace().collect();
        match key.trim() {
            "alphabet" => {
                if raw.alphabet.replace((line.no, toks)).is_some() {
                    return Err(Error::syntax(line.no, "duplicate `alphabet:` line"));
                }
            }
            "states" => {
                if raw.states.replace((line.no, toks)).is_some() {
                    return Err(Error::syntax(line.no, "duplicate `states:` line"));
                }
            }
            "initial" => raw.initial.extend(toks.into_iter().map(|t| (line.no, t))),
            "accepting" => raw.accepting.extend(toks.into_iter().map(|t| (line.no, t))),
            "trans" => {
                let arrow = toks
                    .iter()
                    .position(|t| *t == "->")
                    .ok_or_else(|| Error::syntax(line.no, "transition without `->`"))?;
                if arrow != 2 {
                    return Err(Error::syntax(
                        line.no,
                        "expected `trans: <state> <symbol> -> <state>...`",
                    ));
                }
                raw.trans.push((line.no, toks[0], toks[1], toks[arrow + 1..].to_vec()));
            }
            other => return Err(Error::syntax(line.no, format!("unknown key {other:?}"))),
        }
    }
    Ok(raw)
}

/// Validated pieces shared by the NBW and DFW readers.
struct Resolved {
    alphabet: Alphabet,
    names: Vec<String>,
    initial: Vec<StateId>,
    accepting: Vec<StateId>,
    trans: Vec<(usize, StateId, Symbol, StateId)>,
}

fn resolve(raw: RawBlock<'_>, header_line: usize) -> Result<Resolved> {
    let (aline, symbols) = raw
        .alphabet
        .ok_or_else(|| Error::syntax(header_line, "missing `alphabet:` line"))?;
    let alphabet = Alphabet::new(symbols.iter().copied()).map_err(|e| Error::semantic(format!("line {aline}: {e}")))?;
    let (sline, states) = raw
        .states
        .ok_or_else(|| Error::syntax(header_line, "missing `states:` line"))?;
    let mut index: HashMap<&str, StateId> = HashMap::new();
    for (i, s) in states.iter().enumerate() {
        if index.insert(s, i).is_some() {
            return Err(Error::semantic(format!("line {sline}: duplicate state {s:?}")));
        }
    }
    let state = |no: usize, name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| Error::semantic(format!("line {no}: unknown state {name:?}")))
    };
    let initial = raw
        .initial
        .iter()
        .map(|&(no, s)| state(no, s))
        .collect::<Result<Vec<_>>>()?;
    let accepting = raw
        .accepting
        .iter()
        .map(|&(no, s)| state(no, s))
        .collect::<Result<Vec<_>>>()?;
    let mut trans = Vec::new();
    for (no, p, a, qs) in &raw.trans {
        let p = state(*no, p)?;
        let a = alphabet
            .symbol(a)
            .ok_or_else(|| Error::semantic(format!("line {no}: unknown symbol {a:?}")))?;
        for q in qs {
            trans.push((*no, p, a, state(*no, q)?));
        }
    }
    Ok(Resolved {
        alphabet,
        names: states.iter().map(|s| s.to_string()).collect(),
        initial,
        accepting,
        trans,
    })
}

fn expect_header(lines: &[Line<'_>], header: &str) -> Result<usize> {
    match lines.first() {
        Some(l) if l.text == header => Ok(l.no),
        Some(l) => Err(Error::syntax(l.no, format!("expected header `{header}`"))),
        None => Err(Error::syntax(1, format!("empty input, expected `{header}`"))),
    }
}

/// Parses an NBW in the native format or the HOA subset.
pub fn parse_nbw(text: &[u8]) -> Result<Nbw> {
    let text = std::str::from_utf8(text).map_err(|e| Error::syntax(1, format!("invalid UTF-8: {e}")))?;
    let ls = lines(text);
    if ls.first().is_some_and(|l| l.text.starts_with("HOA:")) {
        return crate::hoa::parse_hoa(&ls);
    }
    let header = expect_header(&ls, "nbw")?;
    let r = resolve(parse_block(&ls[1..])?, header)?;
    Nbw::new(
        r.alphabet,
        r.names,
        r.initial,
        r.accepting,
        r.trans.into_iter().map(|(_, p, a, q)| (p, a, q)),
    )
}

/// Serializes an NBW in the native format; transitions are grouped per
/// `(state, symbol)` in declared order.
pub fn serialize_nbw(a: &Nbw) -> String {
    let mut out = String::from("nbw\n");
    let _ = writeln!(out, "alphabet: {}", a.alphabet().symbols().join(" "));
    let _ = writeln!(out, "states: {}", a.names().join(" "));
    let names = |set: &crate::StateSet| set.iter().map(|q| a.name(q)).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "initial: {}", names(a.initial()));
    let _ = writeln!(out, "accepting: {}", names(a.accepting()));
    for p in a.states() {
        for s in 0..a.alphabet().len() {
            let ts = a.successors(p, s);
            if !ts.is_empty() {
                let targets: Vec<&str> = ts.iter().map(|&q| a.name(q)).collect();
                let _ = writeln!(
                    out,
                    "trans: {} {} -> {}",
                    a.name(p),
                    a.alphabet().name(s),
                    targets.join(" ")
                );
            }
        }
    }
    out
}

fn dfw_from_block(body: &[Line<'_>], header: usize) -> Result<Dfw> {
    let r = resolve(parse_block(body)?, header)?;
    let initial = match r.initial.as_slice() {
        [q] => *q,
        _ => {
            return Err(Error::semantic(format!(
                "line {header}: a DFW needs exactly one initial state"
            )))
        }
    };
    let n = r.names.len();
    let k = r.alphabet.len();
    let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; k]; n];
    for (no, p, a, q) in r.trans {
        if delta[p][a].replace(q).is_some_and(|old| old != q) {
            return Err(Error::semantic(format!("line {no}: nondeterministic transition")));
        }
    }
    let delta = delta
        .into_iter()
        .enumerate()
        .map(|(p, row)| {
            row.into_iter()
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::semantic(format!("state {:?} is missing transitions", r.names[p])))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut accepting = vec![false; n];
    for q in r.accepting {
        accepting[q] = true;
    }
    Dfw::new(r.alphabet, r.names, initial, delta, accepting)
}

pub fn parse_dfw(text: &str) -> Result<Dfw> {
    let ls = lines(text);
    let header = expect_header(&ls, "dfw")?;
    dfw_from_block(&ls[1..], header)
}

pub fn serialize_dfw(d: &Dfw) -> String {
    let mut out = String::from("dfw\n");
    let _ = writeln!(out, "alphabet: {}", d.alphabet().symbols().join(" "));
    let _ = writeln!(out, "states: {}", d.names().join(" "));
    let _ = writeln!(out, "initial: {}", d.name(d.initial()));
    let acc: Vec<&str> = (0..d.len()).filter(|&q| d.is_accepting(q)).map(|q| d.name(q)).collect();
    let _ = writeln!(out, "accepting: {}", acc.join(" "));
    for q in 0..d.len() {
        for a in 0..d.alphabet().len() {
            let _ = writeln!(
                out,
                "trans: {} {} -> {}",
                d.name(q),
                d.alphabet().name(a),
                d.name(d.next(q, a))
            );
        }
    }
    out
}

pub fn parse_fdfw(text: &str) -> Result<Fdfw> {
    let ls = lines(text);
    let header = expect_header(&ls, "fdfw")?;
    // (line and leading state of a `progress` header, body lines)
    type Section<'a> = (Option<(usize, &'a str)>, Vec<Line<'a>>);
    let mut sections: Vec<Section<'_>> = vec![(None, Vec::new())];
    for line in &ls[1..] {
        if let Some(rest) = line.text.strip_prefix("progress ") {
            sections.push((Some((line.no, rest.trim())), Vec::new()));
        } else if line.text == "progress" {
            return Err(Error::syntax(line.no, "`progress` needs a leading state name"));
        } else {
            sections.last_mut().expect("non-empty").1.push(*line);
        }
    }
    let mut sections = sections.into_iter();
    let (_, leading_lines) = sections.next().expect("leading section");
    let lead_header = expect_header(&leading_lines, "dfw")
        .map_err(|_| Error::syntax(header, "expected the leading `dfw` block after `fdfw`"))?;
    let leading = dfw_from_block(&leading_lines[1..], lead_header)?;
    let mut progress: Vec<Option<Dfw>> = vec![None; leading.len()];
    for (tag, body) in sections {
        let (no, name) = tag.expect("progress sections are tagged");
        let q = leading
            .names()
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::semantic(format!("line {no}: unknown leading state {name:?}")))?;
        let h = expect_header(&body, "dfw").map_err(|_| Error::syntax(no, "expected a `dfw` block"))?;
        if progress[q].replace(dfw_from_block(&body[1..], h)?).is_some() {
            return Err(Error::semantic(format!(
                "line {no}: duplicate progress block for {name:?}"
            )));
        }
    }
    let progress = progress
        .into_iter()
        .enumerate()
        .map(|(q, d)| d.ok_or_else(|| Error::semantic(format!("missing progress block for {:?}", leading.name(q)))))
        .collect::<Result<Vec<_>>>()?;
    Fdfw::new(leading, progress)
}

pub fn serialize_fdfw(f: &Fdfw) -> String {
    let mut out = String::from("fdfw\n");
    out.push_str(&serialize_dfw(f.leading()));
    for (q, p) in f.progress().iter().enumerate() {
        let _ = writeln!(out, "progress {}", f.leading().name(q));
        out.push_str(&serialize_dfw(p));
    }
    out
}
