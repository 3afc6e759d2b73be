//! Families of DFWs and their acceptance of ultimately periodic words.

use crate::alphabet::{Alphabet, Symbol};
use crate::dfw::Dfw;
use crate::error::{Error, Result};
use crate::upword::{Decomposition, UpWord};

/// A leading DFW `M` without accepting states and one progress DFW `N_q`
/// per leading state `q`.
///
/// A decomposition `(u, v)` is accepted when it is normalized, meaning
/// `M(u) = M(uv)`, and captured, meaning `v ∈ L(N_{M(u)})`. An ultimately
/// periodic word is accepted when one of its decompositions is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fdfw {
    leading: Dfw,
    progress: Vec<Dfw>,
    // set by the constructions that guarantee saturation
    saturated: bool,
}

impl Fdfw {
    pub fn new(leading: Dfw, progress: Vec<Dfw>) -> Result<Self> {
        if leading.has_accepting() {
            return Err(Error::semantic("the leading DFW must not have accepting states"));
        }
        if progress.len() != leading.len() {
            return Err(Error::semantic(format!(
                "expected {} progress DFWs, found {}",
                leading.len(),
                progress.len()
            )));
        }
        if let Some(p) = progress.iter().find(|p| p.alphabet() != leading.alphabet()) {
            return Err(Error::AlphabetMismatch {
                left: leading.alphabet().to_string(),
                right: p.alphabet().to_string(),
            });
        }
        Ok(Fdfw {
            leading,
            progress,
            saturated: false,
        })
    }

    /// Marks the family as saturated. The caller vouches for it, for
    /// instance after [`Fdfw::check_saturation_sampled`].
    pub fn assume_saturated(mut self) -> Self {
        self.saturated = true;
        self
    }

    pub fn is_marked_saturated(&self) -> bool {
        self.saturated
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.leading.alphabet()
    }

    pub fn leading(&self) -> &Dfw {
        &self.leading
    }

    pub fn progress(&self) -> &[Dfw] {
        &self.progress
    }

    /// `|M| + Σ_q |N_q|`.
    pub fn macrostates(&self) -> usize {
        self.leading.len() + self.progress.iter().map(Dfw::len).sum::<usize>()
    }

    pub fn max_progress_len(&self) -> usize {
        self.progress.iter().map(Dfw::len).max().unwrap_or(0)
    }

    pub fn is_normalized(&self, d: &Decomposition) -> bool {
        let m = self.leading.run(d.prefix());
        self.leading.run_from(m, d.period()) == m
    }

    pub fn is_captured(&self, d: &Decomposition) -> bool {
        self.progress[self.leading.run(d.prefix())].accepts(d.period())
    }

    /// `is_captured` with an arbitrary, possibly empty, period.
    pub fn captures(&self, u: &[Symbol], v: &[Symbol]) -> bool {
        self.progress[self.leading.run(u)].accepts(v)
    }

    pub fn accepts_decomposition(&self, d: &Decomposition) -> bool {
        self.is_normalized(d) && self.is_captured(d)
    }

    /// Visits the decompositions `(u·v^i·v[..t], rot_t(v)^j)` of `w` within
    /// the enumeration bounds, reporting each normalized one together with
    /// whether it is captured. Stops early when `visit` returns false.
    fn for_each_normalized(&self, w: &UpWord, mut visit: impl FnMut(&[Symbol], &[Symbol], usize, bool) -> bool) {
        let (u, v) = (w.prefix(), w.period());
        let m_len = self.leading.len();
        let max_i = u.len() + m_len + 1;
        let max_j = m_len * self.max_progress_len() + 1;
        for t in 0..v.len() {
            let mut rot = v[t..].to_vec();
            rot.extend_from_slice(&v[..t]);
            let mut prefix = u.to_vec();
            prefix.extend_from_slice(&v[..t]);
            let mut m = self.leading.run(&prefix);
            for i in 0..=max_i {
                if i > 0 {
                    m = self.leading.run_from(m, &rot);
                    prefix.extend_from_slice(&rot);
                }
                let prog = &self.progress[m];
                let (mut mj, mut nj) = (m, prog.initial());
                for j in 1..=max_j {
                    mj = self.leading.run_from(mj, &rot);
                    nj = prog.run_from(nj, &rot);
                    if mj == m && !visit(&prefix, &rot, j, prog.is_accepting(nj)) {
                        return;
                    }
                }
            }
        }
    }

    /// Whether some decomposition of `w` is accepted.
    ///
    /// Relative to the canonical decomposition `(u, v)` of `w`, every
    /// decomposition is `(u·v^i·v[..t], rot_t(v)^j)`. For fixed `t` the
    /// leading states along `i` become periodic within `|M|` steps, and for
    /// fixed `(t, i)` the pair of leading and progress states along `j`
    /// becomes periodic within `|M|·|N|` steps, so bounding `i` by
    /// `|u| + |M| + 1` and `j` by `|M|·max|N_q| + 1` loses nothing.
    pub fn accepts_upword_general(&self, w: &UpWord) -> bool {
        let mut found = false;
        self.for_each_normalized(&w.canonical(), |_, _, _, captured| {
            found = captured;
            !captured
        });
        found
    }

    /// `(u·v^h, v^k)` with the least `h` and then the least `k >= 1` such
    /// that `M(u·v^h) = M(u·v^(h+k))`; both are at most `|M|`.
    pub fn normalize_decomposition(&self, d: &Decomposition) -> Decomposition {
        let mut seen = vec![usize::MAX; self.leading.len()];
        let mut m = self.leading.run(d.prefix());
        let mut i = 0;
        while seen[m] == usize::MAX {
            seen[m] = i;
            m = self.leading.run_from(m, d.period());
            i += 1;
        }
        let (h, k) = (seen[m], i - seen[m]);
        let mut prefix = d.prefix().to_vec();
        for _ in 0..h {
            prefix.extend_from_slice(d.period());
        }
        UpWord::new(prefix, d.period().repeat(k)).expect("non-empty period")
    }

    /// Acceptance assuming saturation: one normalized decomposition decides.
    pub fn accepts_upword_saturated(&self, w: &UpWord) -> bool {
        self.is_captured(&self.normalize_decomposition(w))
    }

    /// [`Fdfw::accepts_upword_saturated`], refusing families not known to be
    /// saturated.
    pub fn accepts_upword_saturated_strict(&self, w: &UpWord) -> Result<bool> {
        if !self.saturated {
            return Err(Error::Precondition(
                "FDFW is not known to be saturated; use general acceptance or verify it first".into(),
            ));
        }
        Ok(self.accepts_upword_saturated(w))
    }

    /// Looks for two normalized decompositions of the same corpus word that
    /// disagree, enumerating relative to each word's given decomposition.
    pub fn check_saturation_sampled(&self, corpus: impl IntoIterator<Item = UpWord>) -> SaturationReport {
        let mut report = SaturationReport::default();
        for w in corpus {
            report.words_checked += 1;
            let mut accepted: Option<Decomposition> = None;
            let mut rejected: Option<Decomposition> = None;
            self.for_each_normalized(&w, |u, v, j, captured| {
                let slot = if captured { &mut accepted } else { &mut rejected };
                if slot.is_none() {
                    *slot = Some(UpWord::new(u.to_vec(), v.repeat(j)).expect("non-empty period"));
                }
                accepted.is_none() || rejected.is_none()
            });
            if let (Some(accepted), Some(rejected)) = (accepted, rejected) {
                report.violations.push(SaturationViolation {
                    word: w,
                    accepted,
                    rejected,
                });
            }
        }
        report
    }

    /// The complement of a saturated family: same structure with every
    /// progress accepting set flipped.
    pub fn complement_saturated(&self) -> Fdfw {
        let mut out = self.clone();
        for p in &mut out.progress {
            p.complement_accepting();
        }
        out
    }

    pub(crate) fn set_saturated(&mut self, saturated: bool) {
        self.saturated = saturated;
    }
}

/// Free-function form of [`Fdfw::complement_saturated`].
pub fn complement_saturated_fdfw(f: &Fdfw) -> Fdfw {
    f.complement_saturated()
}

/// Two normalized decompositions of one word with different verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationViolation {
    pub word: UpWord,
    pub accepted: Decomposition,
    pub rejected: Decomposition,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SaturationReport {
    pub words_checked: usize,
    pub violations: Vec<SaturationViolation>,
}

impl SaturationReport {
    pub fn is_saturated(&self) -> bool {
        self.violations.is_empty()
    }
}
