//! Experiment harness: class counts against the size bounds, and a
//! three-way check of the complement pipeline against the lasso oracle.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::complement::{complement_fdfw, Variant};
use crate::congruence::classical_congruence;
use crate::error::Result;
use crate::fdfw::Fdfw;
use crate::lasso::accepts;
use crate::nbw::Nbw;
use crate::to_nbw::fdfw_to_nbw;
use crate::upword::enumerate_upwords;

/// Outcome of one bound check; `None` when a count was not computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub classical_ms: u128,
    pub improved_ms: u128,
    pub optimal_ms: u128,
}

/// Class counts of one automaton. Counts are `None` when their
/// construction exceeded the budget; the error text is kept in `errors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatsReport {
    pub id: String,
    pub n: usize,
    pub classical: Option<usize>,
    pub subset: Option<usize>,
    pub improved_max: Option<usize>,
    pub improved_sum: Option<usize>,
    pub optimal: Option<usize>,
    pub optimal_progress_max: Option<usize>,
    pub optimal_progress_sum: Option<usize>,
    pub macrostates_improved: Option<usize>,
    pub macrostates_optimal: Option<usize>,
    pub bounds: Vec<BoundCheck>,
    pub errors: Vec<String>,
    #[serde(skip)]
    pub timings: Timings,
}

impl StatsReport {
    /// True iff no computed count breaks its bound.
    pub fn passes(&self) -> bool {
        self.bounds.iter().all(|b| b.holds != Some(false))
    }
}

fn pow(base: usize, exp: usize) -> u128 {
    u32::try_from(exp)
        .ok()
        .and_then(|e| (base as u128).checked_pow(e))
        .unwrap_or(u128::MAX)
}

fn check(name: &'static str, count: Option<usize>, bound: u128) -> BoundCheck {
    BoundCheck {
        name,
        holds: count.map(|c| c as u128 <= bound),
    }
}

fn progress_stats(f: &Fdfw) -> (usize, usize, usize) {
    let lens = f.progress().iter().map(|p| p.len());
    (f.leading().len(), lens.clone().max().unwrap_or(0), lens.sum())
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u128) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis())
}

/// Computes every relation of one automaton and checks
/// `|∼| ≤ 3^(n²)`, `|∼ⁱ| ≤ 2^n`, `|≈ᵤ| ≤ 3^(n²)`, `|∼ᵒ| ≤ n^n`,
/// `|≈ᵒᵤ| ≤ n^n·(n+1)^n`, and `n^n + n^n·n^n·(n+1)^n` macrostates for the
/// optimal complement.
pub fn stats(id: &str, a: &Nbw, budget: usize) -> StatsReport {
    let n = a.num_states();
    let mut errors = Vec::new();
    let (classical, classical_ms) = timed(|| classical_congruence(a, budget).map(|c| c.len()));
    let classical = classical.map_err(|e| errors.push(e.to_string())).ok();
    let (improved, improved_ms) = timed(|| complement_fdfw(a, Variant::Improved, budget));
    let improved = improved.map_err(|e| errors.push(e.to_string())).ok();
    let (optimal, optimal_ms) = timed(|| complement_fdfw(a, Variant::Optimal, budget));
    let optimal = optimal.map_err(|e| errors.push(e.to_string())).ok();

    let (subset, improved_max, improved_sum) = match &improved {
        Some(f) => {
            let (l, m, s) = progress_stats(f);
            (Some(l), Some(m), Some(s))
        }
        None => (None, None, None),
    };
    let (opt, opt_max, opt_sum) = match &optimal {
        Some(f) => {
            let (l, m, s) = progress_stats(f);
            (Some(l), Some(m), Some(s))
        }
        None => (None, None, None),
    };
    let nn = pow(n, n);
    let opt_progress_bound = nn.saturating_mul(pow(n + 1, n));
    let bounds = vec![
        check("classical", classical, pow(3, n * n)),
        check("subset", subset, pow(2, n)),
        check("improved_progress", improved_max, pow(3, n * n)),
        check("optimal", opt, nn),
        check("optimal_progress", opt_max, opt_progress_bound),
        check(
            "macrostates_optimal",
            optimal.as_ref().map(Fdfw::macrostates),
            nn.saturating_add(nn.saturating_mul(opt_progress_bound)),
        ),
    ];
    StatsReport {
        id: id.to_string(),
        n,
        classical,
        subset,
        improved_max,
        improved_sum,
        optimal: opt,
        optimal_progress_max: opt_max,
        optimal_progress_sum: opt_sum,
        macrostates_improved: improved.as_ref().map(Fdfw::macrostates),
        macrostates_optimal: optimal.as_ref().map(Fdfw::macrostates),
        bounds,
        errors,
        timings: Timings {
            classical_ms,
            improved_ms,
            optimal_ms,
        },
    }
}

/// [`stats`] for every automaton, rows in input order.
pub fn run_bounds_suite(automata: &[(String, Nbw)], budget: usize) -> Vec<StatsReport> {
    automata.par_iter().map(|(id, a)| stats(id, a, budget)).collect()
}

fn cell(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |c| c.to_string())
}

const COUNT_COLUMNS: [&str; 11] = [
    "id",
    "n",
    "classical",
    "subset",
    "improved_max",
    "improved_sum",
    "optimal",
    "optimal_progress_max",
    "optimal_progress_sum",
    "macrostates_improved",
    "macrostates_optimal",
];

/// Tab-separated table with one `bound_*` column per check (`ok`, `FAIL`,
/// or `-` when not computed) and a final `status`. Elapsed times are
/// appended only on request so that default output is reproducible.
pub fn bounds_tsv(reports: &[StatsReport], timings: bool) -> String {
    let mut out = COUNT_COLUMNS.join("\t");
    if let Some(r) = reports.first() {
        for b in &r.bounds {
            let _ = write!(out, "\tbound_{}", b.name);
        }
    }
    out.push_str("\tstatus");
    if timings {
        out.push_str("\tclassical_ms\timproved_ms\toptimal_ms");
    }
    out.push('\n');
    for r in reports {
        let counts = [
            r.classical,
            r.subset,
            r.improved_max,
            r.improved_sum,
            r.optimal,
            r.optimal_progress_max,
            r.optimal_progress_sum,
            r.macrostates_improved,
            r.macrostates_optimal,
        ];
        let _ = write!(out, "{}\t{}", r.id, r.n);
        for c in counts {
            let _ = write!(out, "\t{}", cell(c));
        }
        for b in &r.bounds {
            let v = match b.holds {
                Some(true) => "ok",
                Some(false) => "FAIL",
                None => "-",
            };
            let _ = write!(out, "\t{v}");
        }
        let status = if !r.passes() {
            "FAIL"
        } else if r.errors.is_empty() {
            "ok"
        } else {
            "budget"
        };
        let _ = write!(out, "\t{status}");
        if timings {
            let t = &r.timings;
            let _ = write!(out, "\t{}\t{}\t{}", t.classical_ms, t.improved_ms, t.optimal_ms);
        }
        out.push('\n');
    }
    out
}

pub fn bounds_json(reports: &[StatsReport], timings: bool) -> String {
    let rows: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).expect("serializable");
            if timings {
                v["timings"] = serde_json::to_value(&r.timings).expect("serializable");
            }
            v
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({ "rows": rows })).expect("serializable")
}

/// A corpus word on which the complement FDFW, the complement NBW and the
/// negated oracle do not all agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub variant: String,
    pub word: String,
    pub in_language: bool,
    pub fdfw_accepts: bool,
    pub nbw_accepts: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub id: String,
    pub words: usize,
    pub complement_nbw_states: Vec<(String, usize)>,
    pub disagreements: Vec<Disagreement>,
}

impl EquivalenceReport {
    pub fn passes(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares, for both complement variants and every `(u, v)` with
/// `|u| <= max_u` and `1 <= |v| <= max_v`, FDFW acceptance, acceptance by
/// the translated NBW, and rejection by the original automaton.
pub fn run_equivalence_suite(
    id: &str,
    a: &Nbw,
    max_u: usize,
    max_v: usize,
    budget: usize,
) -> Result<EquivalenceReport> {
    let mut report = EquivalenceReport {
        id: id.to_string(),
        ..Default::default()
    };
    let corpus: Vec<_> = enumerate_upwords(a.alphabet(), max_u, max_v).collect();
    report.words = corpus.len();
    let oracle: Vec<bool> = corpus.iter().map(|w| accepts(a, w)).collect();
    for variant in [Variant::Improved, Variant::Optimal] {
        let f = complement_fdfw(a, variant, budget)?;
        let c = fdfw_to_nbw(&f);
        report.complement_nbw_states.push((variant.to_string(), c.num_states()));
        for (w, &in_language) in corpus.iter().zip(&oracle) {
            let fdfw_accepts = f.accepts_upword_saturated(w);
            let nbw_accepts = accepts(&c, w);
            if fdfw_accepts == in_language || nbw_accepts == in_language {
                report.disagreements.push(Disagreement {
                    variant: variant.to_string(),
                    word: w.display(a.alphabet()).to_string(),
                    in_language,
                    fdfw_accepts,
                    nbw_accepts,
                });
            }
        }
    }
    Ok(report)
}

pub fn equivalence_tsv(reports: &[EquivalenceReport]) -> String {
    let mut out = String::from("id\twords\tcomplement_nbw_states\tdisagreements\tstatus\n");
    for r in reports {
        let states: Vec<String> = r
            .complement_nbw_states
            .iter()
            .map(|(v, s)| format!("{v}:{s}"))
            .collect();
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.id,
            r.words,
            states.join(","),
            r.disagreements.len(),
            if r.passes() { "ok" } else { "FAIL" }
        );
        for d in &r.disagreements {
            let _ = writeln!(
                out,
                "# {} {} in_language={} fdfw={} nbw={}",
                d.variant, d.word, d.in_language, d.fdfw_accepts, d.nbw_accepts
            );
        }
    }
    out
}

pub fn equivalence_json(reports: &[EquivalenceReport]) -> String {
    serde_json::to_string_pretty(&serde_json::json!({ "rows": reports })).expect("serializable")
}
