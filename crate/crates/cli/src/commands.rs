use std::error::Error;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use fdfw_core::suite::{
    bounds_json, bounds_tsv, equivalence_json, equivalence_tsv, run_bounds_suite, run_equivalence_suite,
};
use fdfw_core::{
    classical_congruence, complement_fdfw, containment, enumerate_upwords, fdfw_to_nbw, lasso_membership,
    optimal_leading_congruence, optimal_progress_congruence, parse_fdfw, parse_nbw, progress_congruence_improved,
    random_family, serialize_dfw, serialize_fdfw, serialize_nbw, subset_congruence, CongruenceDfw, FamilySpec,
    FamilyVariant, Fdfw, Nbw, UpWord,
};

use crate::{Cli, Command, RelationArg, SuiteInputs};

type Result<T> = std::result::Result<T, Box<dyn Error>>;

/// Runs one subcommand. `Ok(false)` means the command completed but a check
/// it performs failed.
pub fn run(cli: Cli) -> Result<bool> {
    let budget = cli.budget;
    match cli.command {
        Command::Classes { input, relation, dump } => {
            let a = read_nbw(&input)?;
            classes(&a, relation, dump.as_deref(), budget)?;
            Ok(true)
        }
        Command::Complement { variant, input, out } => {
            let a = read_nbw(&input)?;
            let f = complement_fdfw(&a, variant.into(), budget)?;
            write_out(out.as_deref(), &serialize_fdfw(&f))?;
            Ok(true)
        }
        Command::ToNbw { input, out } => {
            let f = read_fdfw(&input)?;
            write_out(out.as_deref(), &serialize_nbw(&fdfw_to_nbw(&f)))?;
            Ok(true)
        }
        Command::Member { input, u, v } => {
            member(&input, &u, &v)?;
            Ok(true)
        }
        Command::Contains { a, b } => {
            let (a, b) = (read_nbw(&a)?, read_nbw(&b)?);
            let c = containment(&a, &b, budget)?;
            match c.counterexample {
                None => println!("contained"),
                Some(w) => println!("not contained: {}", w.display(a.alphabet())),
            }
            Ok(c.holds)
        }
        Command::Family { variant, n, out } => {
            let a = FamilySpec {
                n,
                variant: variant.into(),
            }
            .generate()?;
            write_out(out.as_deref(), &serialize_nbw(&a))?;
            Ok(true)
        }
        Command::SaturationCheck { input, max_u, max_v } => {
            let f = read_fdfw(&input)?;
            let r = f.check_saturation_sampled(enumerate_upwords(f.alphabet(), max_u, max_v));
            let ab = f.alphabet();
            println!("words\t{}", r.words_checked);
            println!("violations\t{}", r.violations.len());
            for v in &r.violations {
                println!(
                    "{}\taccepted {}\trejected {}",
                    v.word.display(ab),
                    v.accepted.display(ab),
                    v.rejected.display(ab)
                );
            }
            Ok(r.is_saturated())
        }
        Command::BoundsSuite {
            inputs,
            output,
            timings,
        } => {
            let automata = suite_automata(&inputs)?;
            let reports = run_bounds_suite(&automata, budget);
            let text = if output.json {
                bounds_json(&reports, timings)
            } else {
                bounds_tsv(&reports, timings)
            };
            write_out(output.out.as_deref(), &text)?;
            Ok(reports.iter().all(|r| r.passes()))
        }
        Command::EquivSuite {
            inputs,
            output,
            max_u,
            max_v,
        } => {
            let automata = suite_automata(&inputs)?;
            let reports = automata
                .iter()
                .map(|(id, a)| run_equivalence_suite(id, a, max_u, max_v, budget))
                .collect::<fdfw_core::Result<Vec<_>>>()?;
            let text = if output.json {
                equivalence_json(&reports)
            } else {
                equivalence_tsv(&reports)
            };
            write_out(output.out.as_deref(), &text)?;
            Ok(reports.iter().all(|r| r.passes()))
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn read_nbw(path: &Path) -> Result<Nbw> {
    parse_nbw(read(path)?.as_bytes()).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn read_fdfw(path: &Path) -> Result<Fdfw> {
    parse_fdfw(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()).into()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// The first significant line names the format: `fdfw`, or an NBW in
/// native or HOA syntax.
fn is_fdfw(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        == Some("fdfw")
}

fn member(path: &Path, u: &str, v: &str) -> Result<()> {
    let text = read(path)?;
    if is_fdfw(&text) {
        let f = parse_fdfw(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let w = UpWord::parse(f.alphabet(), u, v)?;
        println!(
            "{}",
            if f.accepts_upword_general(&w) {
                "accepted"
            } else {
                "rejected"
            }
        );
        return Ok(());
    }
    let a = parse_nbw(text.as_bytes()).map_err(|e| format!("{}: {e}", path.display()))?;
    let w = UpWord::parse(a.alphabet(), u, v)?;
    let verdict = lasso_membership(&a, &w);
    match verdict.witness {
        Some(l) => {
            let names = |qs: &[usize]| qs.iter().map(|&q| a.name(q)).collect::<Vec<_>>().join(" ");
            println!("accepted");
            println!("stem\t{}", names(&l.stem));
            println!("cycle\t{}", names(&l.cycle));
        }
        None => println!("rejected"),
    }
    Ok(())
}

struct ClassTable {
    out: String,
    dump: Option<PathBuf>,
}

impl ClassTable {
    fn add<P>(&mut self, name: &str, c: &CongruenceDfw<P>, start: Instant) -> Result<()> {
        let ms = start.elapsed().as_millis();
        let _ = writeln!(self.out, "{name}\t{}\t{}\t{ms}", c.len(), c.max_witness_len());
        if let Some(dir) = &self.dump {
            let dfw = c.to_dfw("c");
            let path = dir.join(format!("{name}.dfw"));
            fs::write(&path, serialize_dfw(&dfw)).map_err(|e| format!("{}: {e}", path.display()))?;
            let mut table = String::from("class\twitness\n");
            for r in c.classes() {
                let _ = writeln!(table, "{}\t{}", dfw.name(r.id), c.alphabet().format_word(&r.witness));
            }
            let path = dir.join(format!("{name}.witnesses.tsv"));
            fs::write(&path, table).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        Ok(())
    }
}

/// One TSV row per congruence; progress congruences are named after the
/// index of their leading class.
fn classes(a: &Nbw, relation: RelationArg, dump: Option<&Path>, budget: usize) -> Result<()> {
    if let Some(dir) = dump {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    let mut t = ClassTable {
        out: String::from("relation\tclasses\tmax_witness_len\telapsed_ms\n"),
        dump: dump.map(Path::to_path_buf),
    };
    let all = relation == RelationArg::All;
    if all || relation == RelationArg::Classical {
        let start = Instant::now();
        let c = classical_congruence(a, budget)?;
        t.add("classical", &c, start)?;
    }
    if all || relation == RelationArg::Subset || relation == RelationArg::Improved {
        let start = Instant::now();
        let s = subset_congruence(a);
        t.add("subset", &s, start)?;
        if relation != RelationArg::Subset {
            for c in s.classes() {
                let start = Instant::now();
                let p = progress_congruence_improved(a, &c.payload, budget)?;
                t.add(&format!("improved-progress-{}", c.id), &p, start)?;
            }
        }
    }
    if all || relation == RelationArg::Optimal {
        let start = Instant::now();
        let o = optimal_leading_congruence(a, budget)?;
        t.add("optimal", &o, start)?;
        for c in o.classes() {
            let start = Instant::now();
            let p = optimal_progress_congruence(a, &c.payload, budget)?;
            t.add(&format!("optimal-progress-{}", c.id), &p, start)?;
        }
    }
    print!("{}", t.out);
    Ok(())
}

fn suite_automata(inputs: &SuiteInputs) -> Result<Vec<(String, Nbw)>> {
    let mut out = Vec::new();
    for path in &inputs.files {
        out.push((path.display().to_string(), read_nbw(path)?));
    }
    let mut families = inputs.family.clone();
    let mut random = inputs.random.unwrap_or(0);
    if out.is_empty() && families.is_empty() && inputs.random.is_none() {
        families = ["bn:3", "bn:4", "bn-dbw:3", "bn-dbw:4"].map(String::from).to_vec();
        random = 20;
    }
    for spec in &families {
        let (variant, n) = spec
            .split_once(':')
            .ok_or_else(|| format!("family {spec:?}: expected VARIANT:N"))?;
        let variant: FamilyVariant = variant.parse()?;
        let n: usize = n.parse().map_err(|e| format!("family {spec:?}: {e}"))?;
        out.push((format!("{variant}:{n}"), FamilySpec { n, variant }.generate()?));
    }
    if random > 0 {
        if inputs.max_n == 0 || inputs.symbols == 0 {
            return Err("random automata need --max-n and --symbols of at least 1".into());
        }
        let family = random_family(inputs.seed, random, inputs.max_n, inputs.symbols);
        out.extend(family.into_iter().enumerate().map(|(i, a)| (format!("random:{i}"), a)));
    }
    Ok(out)
}
