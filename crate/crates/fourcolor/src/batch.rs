//! Batch verification commands: the library side of the CLI. Each command
//! returns its normative TSV (or plain-text) report plus a process exit
//! code: 0 pass, 1 verification failure, 2 input error, 3 budget exceeded.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use crate::config::{radius, ring_size, structural_screens, validate_configuration, Configuration};
use crate::graph::wrap_ring;
use crate::io;
use crate::kempe::{is_consistent, lift_colorings};
use crate::overcharge::verify_overcharge_bound;
use crate::reduce::{is_d_reducible, ReduceError, ReduceOptions};
use crate::script::{run_presentation, RadiusPolicy, UnavoidableSet};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Report plus exit status of one command run.
#[derive(Clone, Debug)]
pub struct CmdOutput {
    pub exit: i32,
    pub report: String,
}

impl CmdOutput {
    fn input_error(err: impl std::fmt::Display) -> CmdOutput {
        CmdOutput { exit: EXIT_INPUT, report: format!("error\t{err}\n") }
    }
}

/// Row filter for the reduce command: `ring<=11`, `ring=6`, `name=birkhoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    Ring { op: Cmp, value: usize },
    Name(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Lt,
    Gt,
    Eq,
}

impl Filter {
    pub fn parse(text: &str) -> Result<Filter, String> {
        if let Some(rest) = text.strip_prefix("name=") {
            return Ok(Filter::Name(rest.to_string()));
        }
        if let Some(rest) = text.strip_prefix("ring") {
            for (sym, op) in [("<=", Cmp::Le), (">=", Cmp::Ge), ("<", Cmp::Lt), (">", Cmp::Gt), ("=", Cmp::Eq)] {
                if let Some(num) = rest.strip_prefix(sym) {
                    let value: usize = num.parse().map_err(|_| format!("bad filter number {num:?}"))?;
                    return Ok(Filter::Ring { op, value });
                }
            }
        }
        Err(format!("unrecognized filter {text:?} (try ring<=11 or name=foo)"))
    }

    fn keep(&self, name: &str, ring: usize) -> bool {
        match self {
            Filter::Name(n) => n == name,
            Filter::Ring { op, value } => match op {
                Cmp::Le => ring <= *value,
                Cmp::Ge => ring >= *value,
                Cmp::Lt => ring < *value,
                Cmp::Gt => ring > *value,
                Cmp::Eq => ring == *value,
            },
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ReduceCmdOptions {
    pub jobs: Option<usize>,
    pub filter: Option<Filter>,
    pub reduce: ReduceOptions,
}

impl ReduceCmdOptions {
    fn pool(&self) -> rayon::ThreadPool {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = self.jobs {
            b = b.num_threads(j.max(1));
        }
        b.build().expect("thread pool")
    }
}

/// Validate every configuration in a file; one row per record.
pub fn cmd_validate(path: impl AsRef<Path>) -> CmdOutput {
    let configs = match io::parse_configs(&path) {
        Ok(c) => c,
        Err(e) => return CmdOutput::input_error(e),
    };
    let mut report = String::from("name\tkind\toutcome\tring\tradius\twarnings\n");
    let mut exit = EXIT_PASS;
    for k in &configs {
        let valid = validate_configuration(k).is_valid();
        let ring = ring_size(k).map(|r| r.to_string()).unwrap_or_else(|_| "-".into());
        let warnings = structural_screens(k)
            .iter()
            .map(|w| format!("{w:?}"))
            .collect::<Vec<_>>()
            .join(",");
        let outcome = if valid { "pass" } else { "fail" };
        if !valid {
            exit = EXIT_FAIL;
        }
        writeln!(report, "{}\tvalidate\t{}\t{}\t{}\t{}", k.name, outcome, ring, radius(k), warnings).unwrap();
    }
    CmdOutput { exit, report }
}

/// Run D-reducibility over a configuration file: one TSV row per
/// configuration in file order, computed in parallel.
pub fn cmd_reduce(path: impl AsRef<Path>, opts: &ReduceCmdOptions) -> CmdOutput {
    let configs = match io::parse_configs(&path) {
        Ok(c) => c,
        Err(e) => return CmdOutput::input_error(e),
    };
    let mut selected: Vec<&Configuration> = Vec::new();
    for k in &configs {
        let ring = match ring_size(k) {
            Ok(r) => r,
            Err(e) => return CmdOutput::input_error(e),
        };
        if opts.filter.as_ref().is_none_or(|f| f.keep(&k.name, ring)) {
            selected.push(k);
        }
    }
    let verdicts: Vec<Result<crate::reduce::ReduceVerdict, ReduceError>> = opts
        .pool()
        .install(|| selected.par_iter().map(|k| is_d_reducible(k, &opts.reduce)).collect());
    let mut report = String::from("name\tring\tinternal\td_reducible\tremainder\trounds\tmillis\n");
    let mut exit = EXIT_PASS;
    for v in &verdicts {
        match v {
            Ok(v) => {
                if !v.reducible {
                    exit = exit.max(EXIT_FAIL);
                }
                writeln!(
                    report,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    v.name,
                    v.ring,
                    v.internal,
                    v.reducible,
                    v.remainder,
                    v.rounds,
                    v.elapsed.as_millis()
                )
                .unwrap();
            }
            Err(ReduceError::Budget { name, source }) => {
                exit = exit.max(EXIT_BUDGET);
                writeln!(report, "{name}\t-\t-\tbudget-exceeded\t-\t-\t-\t# {source}").unwrap();
            }
            Err(e @ (ReduceError::InvalidConfiguration { .. } | ReduceError::RingTooLarge { .. })) => {
                let name = match e {
                    ReduceError::InvalidConfiguration { name, .. } => name,
                    ReduceError::RingTooLarge { name, .. } => name,
                    ReduceError::Budget { name, .. } => name,
                };
                exit = exit.max(EXIT_FAIL);
                writeln!(report, "{name}\t-\t-\terror\t-\t-\t-\t# {e}").unwrap();
            }
        }
    }
    CmdOutput { exit, report }
}

/// Ring-size histogram with percentages at one decimal.
pub fn cmd_stats(path: impl AsRef<Path>) -> CmdOutput {
    let configs = match io::parse_configs(&path) {
        Ok(c) => c,
        Err(e) => return CmdOutput::input_error(e),
    };
    let mut rings: Vec<usize> = Vec::new();
    for k in &configs {
        match ring_size(k) {
            Ok(r) => rings.push(r),
            Err(e) => return CmdOutput::input_error(e),
        }
    }
    let mut report = String::from("ring\tcount\tpercent\n");
    let total = rings.len();
    if total > 0 {
        let max = *rings.iter().max().unwrap();
        for r in 2..=max {
            let count = rings.iter().filter(|&&x| x == r).count();
            if count == 0 {
                continue;
            }
            let pct = 100.0 * count as f64 / total as f64;
            writeln!(report, "{r}\t{count}\t{pct:.1}").unwrap();
        }
    }
    CmdOutput { exit: EXIT_PASS, report }
}

#[derive(Clone, Debug)]
pub struct DischargeCmdOptions {
    pub degrees: Vec<usize>,
    pub verbose: bool,
    pub radius_policy: RadiusPolicy,
}

impl Default for DischargeCmdOptions {
    fn default() -> Self {
        DischargeCmdOptions { degrees: (5..=11).collect(), verbose: false, radius_policy: RadiusPolicy::Error }
    }
}

/// Verify the presentation script for each requested hub degree. The
/// presentation directory holds one script per degree, named `degree<d>.pres`.
pub fn cmd_discharge(
    rules_path: impl AsRef<Path>,
    configs_path: impl AsRef<Path>,
    present_dir: impl AsRef<Path>,
    opts: &DischargeCmdOptions,
) -> CmdOutput {
    let rules = match io::parse_rules(&rules_path) {
        Ok(r) => r,
        Err(e) => return CmdOutput::input_error(e),
    };
    let configs = match io::parse_configs(&configs_path) {
        Ok(c) => c,
        Err(e) => return CmdOutput::input_error(e),
    };
    let uset = match UnavoidableSet::new(configs, opts.radius_policy) {
        Ok(u) => u,
        Err(e) => return CmdOutput::input_error(e),
    };
    let mut report = String::from("degree\tkind\toutcome\tdispatched\tdetail\n");
    for w in &uset.warnings {
        writeln!(report, "-\tdischarge\twarning\t-\t{w}").unwrap();
    }
    for w in &rules.warnings {
        writeln!(report, "-\tdischarge\twarning\t-\t{w}").unwrap();
    }
    let mut exit = EXIT_PASS;
    let mut verbose_trace = String::new();
    for &d in &opts.degrees {
        let file = present_dir.as_ref().join(format!("degree{d}.pres"));
        let script = match io::parse_presentation(&file) {
            Ok(s) => s,
            Err(e) => return CmdOutput::input_error(e),
        };
        match run_presentation(d, &script, &uset, &rules.rules, opts.verbose) {
            Ok(rep) => {
                writeln!(report, "{d}\tdischarge\tpass\t{}\t", rep.dispatched).unwrap();
                if opts.verbose {
                    for o in &rep.outcomes {
                        writeln!(verbose_trace, "degree {d} line {}: {}", o.line, o.summary).unwrap();
                    }
                }
            }
            Err(e) => {
                exit = exit.max(EXIT_FAIL);
                writeln!(report, "{d}\tdischarge\tfail\t-\t{e}").unwrap();
            }
        }
    }
    if opts.verbose {
        report.push_str(&verbose_trace);
    }
    CmdOutput { exit, report }
}

/// Verify the per-degree edge-transfer bound against a threshold in tenths.
pub fn cmd_overcharge(
    rules_path: impl AsRef<Path>,
    configs_path: impl AsRef<Path>,
    threshold_tenths: i64,
    radius_policy: RadiusPolicy,
) -> CmdOutput {
    let rules = match io::parse_rules(&rules_path) {
        Ok(r) => r,
        Err(e) => return CmdOutput::input_error(e),
    };
    let configs = match io::parse_configs(&configs_path) {
        Ok(c) => c,
        Err(e) => return CmdOutput::input_error(e),
    };
    let screen = match UnavoidableSet::new(configs, radius_policy) {
        Ok(u) => u,
        Err(e) => return CmdOutput::input_error(e),
    };
    let rep = match verify_overcharge_bound(&rules.rules, &screen, threshold_tenths) {
        Ok(r) => r,
        Err(e) => return CmdOutput::input_error(e),
    };
    let mut report = String::new();
    writeln!(report, "threshold {}/10", threshold_tenths).unwrap();
    for b in &rep.bounds {
        writeln!(report, "deg {} bound {}/10 witness", b.source_degree, b.bound).unwrap();
        for line in io::emit_graph(&b.witness.graph).lines() {
            writeln!(report, "  {line}").unwrap();
        }
        for (v, label) in b.witness.labels.iter().enumerate() {
            writeln!(report, "  deg {} {}", v + 1, label).unwrap();
        }
        writeln!(report, "  recount {}/10", b.witness_recount).unwrap();
    }
    writeln!(
        report,
        "high-degree sources: {}",
        if rep.high_degrees_vacuous { "none (bound 0)" } else { "checked explicitly" }
    )
    .unwrap();
    writeln!(report, "overall {}", if rep.pass { "pass" } else { "fail" }).unwrap();
    CmdOutput { exit: if rep.pass { EXIT_PASS } else { EXIT_FAIL }, report }
}

/// Consistency oracle: lift all 4-colorings of an embedded graph through a
/// wrapped ring and check the lifted set is consistent (it always should
/// be; a failure would falsify the Kempe machinery).
pub fn cmd_oracle_consistency(graph_path: impl AsRef<Path>, face: Option<usize>) -> CmdOutput {
    let g = match io::parse_graph(&graph_path) {
        Ok(g) => g,
        Err(e) => return CmdOutput::input_error(e),
    };
    let report = g.validate_embedding();
    if !report.is_valid() {
        return CmdOutput::input_error(format!("invalid embedding: {:?}", report.violations));
    }
    let faces = g.faces();
    let chosen = match face {
        Some(f) if f < faces.len() => f,
        Some(f) => return CmdOutput::input_error(format!("face {f} out of range (have {})", faces.len())),
        None => {
            // deterministic default: the longest walk, first among ties
            (0..faces.len()).max_by_key(|&i| (faces[i].len(), usize::MAX - i)).unwrap_or(0)
        }
    };
    let wrap = match wrap_ring(&g, chosen) {
        Ok(w) => w,
        Err(e) => return CmdOutput::input_error(e),
    };
    if wrap.ring_len < 2 {
        return CmdOutput::input_error("wrapped ring is shorter than 2");
    }
    let lifted = lift_colorings(&g, &wrap.phi);
    let ok = is_consistent(&lifted);
    let mut report = String::from("subject\tkind\toutcome\tring\tlifted\n");
    writeln!(
        report,
        "face{}\tconsistency\t{}\t{}\t{}",
        chosen,
        if ok { "pass" } else { "fail" },
        wrap.ring_len,
        lifted.len()
    )
    .unwrap();
    CmdOutput { exit: if ok { EXIT_PASS } else { EXIT_FAIL }, report }
}
