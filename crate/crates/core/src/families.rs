//! Witness families: the NBWs `B_n`, the DBWs `B'_n`, and a small
//! non-saturated FDFW.

use std::fmt;
use std::str::FromStr;

use crate::alphabet::Alphabet;
use crate::dfw::Dfw;
use crate::error::{Error, Result};
use crate::fdfw::Fdfw;
use crate::nbw::Nbw;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyVariant {
    /// The NBW family `B_n`.
    NbwBn,
    /// The DBW family `B'_n`.
    DbwBnPrime,
}

impl FromStr for FamilyVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bn" => Ok(FamilyVariant::NbwBn),
            "bn-dbw" => Ok(FamilyVariant::DbwBnPrime),
            other => Err(Error::semantic(format!("unknown family variant {other:?}"))),
        }
    }
}

impl fmt::Display for FamilyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyVariant::NbwBn => "bn",
            FamilyVariant::DbwBnPrime => "bn-dbw",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub n: usize,
    pub variant: FamilyVariant,
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Nbw> {
        if self.n == 0 {
            return Err(Error::Precondition("family parameter n must be at least 1".into()));
        }
        Ok(match self.variant {
            FamilyVariant::NbwBn => gen_bn(self.n),
            FamilyVariant::DbwBnPrime => gen_bn_dbw(self.n),
        })
    }
}

fn bn_parts(n: usize, with_sink: bool) -> (Vec<String>, Vec<(usize, usize, usize)>) {
    // q = 0, q_i = i, q_0 = n+1, q_{-1} = n+2
    let (q, q0, qm1) = (0, n + 1, n + 2);
    let mut names = vec!["q".to_string()];
    names.extend((1..=n).map(|i| format!("q{i}")));
    names.push("q0".into());
    let mut t = vec![(q, 0, q0)];
    for i in 1..=n {
        t.push((q, i, i));
        t.push((i, 0, q0));
        for j in 1..=n {
            t.push((i, j, if i == j { q } else { i }));
        }
    }
    for s in 0..=n {
        t.push((q0, s, q0));
        if with_sink {
            t.push((q0, s, qm1));
            t.push((qm1, s, qm1));
        }
    }
    if with_sink {
        names.push("qm1".into());
    }
    (names, t)
}

/// `B_n` over `{0, .., n}` with states `q, q1..qn, q0, qm1`, `I = {q}` and
/// `F = {q, qm1}`.
///
/// `q` moves to `q_i` on `i` and to `q0` on `0`; `q_i` returns to `q` on `i`,
/// stays on other non-zero letters and falls to `q0` on `0`. From `q0` every
/// letter leads to both `q0` and the accepting sink `qm1`.
pub fn gen_bn(n: usize) -> Nbw {
    assert!(n >= 1);
    let (names, t) = bn_parts(n, true);
    Nbw::new(Alphabet::numeric(n + 1).expect("n >= 1"), names, [0], [0, n + 2], t).expect("B_n is well formed")
}

/// `B'_n`: `B_n` without `qm1`, with `q0` a non-accepting sink and `F = {q}`.
/// Deterministic and complete with `n + 2` states.
pub fn gen_bn_dbw(n: usize) -> Nbw {
    assert!(n >= 1);
    let (names, t) = bn_parts(n, false);
    Nbw::new(Alphabet::numeric(n + 1).expect("n >= 1"), names, [0], [0], t).expect("B'_n is well formed")
}

/// An FDFW over `{a, b}` whose leading DFW has the single state `s` and
/// whose progress DFW accepts exactly `ab`. It accepts `(ab)^ω` through the
/// decomposition `(ab, ab)` but rejects the normalized `(ab, abab)`, so it
/// is not saturated.
pub fn non_saturated_example() -> Fdfw {
    let ab = Alphabet::new(["a", "b"]).expect("valid alphabet");
    let leading = Dfw::new(ab.clone(), vec!["s".into()], 0, vec![vec![0, 0]], vec![false]).expect("valid leading DFW");
    // 0 -a-> 1 -b-> 2, everything else to the sink 3
    let progress = Dfw::new(
        ab,
        (0..4).map(|i| format!("n{i}")).collect(),
        0,
        vec![vec![1, 3], vec![3, 2], vec![3, 3], vec![3, 3]],
        vec![false, false, true, false],
    )
    .expect("valid progress DFW");
    Fdfw::new(leading, vec![progress]).expect("valid FDFW")
}
