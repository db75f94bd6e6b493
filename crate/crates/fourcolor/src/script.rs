//! The presentation-script interpreter: a stack machine over parts, the
//! three dispatch tests (reducible appearance, hubcap arithmetic, symmetry)
//! and the charge bound behind hubcaps.

use crate::appearance::well_positioned_appearance;
use crate::config::{radius, Configuration};
use crate::part::{Part, PartError, Symmetry};
use crate::rules::{rule_as_parts, DischargingRule, RulePart, RuleParts};

/// How to treat configurations of radius above two at load time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RadiusPolicy {
    /// Refuse the set (the historical behavior).
    #[default]
    Error,
    /// Keep going; the first-principles appearance check stays sound.
    Warn,
}

/// A loaded unavoidable set, screened for the appearance machinery.
#[derive(Clone, Debug)]
pub struct UnavoidableSet {
    pub configs: Vec<Configuration>,
    pub warnings: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("configuration {name} has radius {radius}, above 2")]
    RadiusTooLarge { name: String, radius: usize },
}

impl UnavoidableSet {
    pub fn new(configs: Vec<Configuration>, policy: RadiusPolicy) -> Result<Self, LoadError> {
        let mut warnings = Vec::new();
        for k in &configs {
            let r = radius(k);
            if r > 2 {
                match policy {
                    RadiusPolicy::Error => {
                        return Err(LoadError::RadiusTooLarge { name: k.name.clone(), radius: r })
                    }
                    RadiusPolicy::Warn => {
                        warnings.push(format!("configuration {} has radius {r} > 2", k.name))
                    }
                }
            }
        }
        Ok(UnavoidableSet { configs, warnings })
    }
}

/// First configuration of the set appearing well-positioned in the part, in
/// file order.
pub fn tau_r(part: &Part, uset: &UnavoidableSet) -> Option<usize> {
    uset.configs.iter().position(|k| well_positioned_appearance(k, part))
}

/// A placement: one rule-part rotated so its non-hub endpoint sits on a
/// chosen spoke. The rotated image identifies the placement.
#[derive(Clone, Debug)]
struct Placement {
    rule_idx: usize,
    q: i64,
    part: Part,
    image: Vec<crate::part::PartVertex>,
}

fn placements(
    rule_parts: &[RuleParts],
    rules: &[DischargingRule],
    variants: impl Fn(&RuleParts) -> Vec<RulePart>,
    targets: &[usize],
    d: usize,
) -> Vec<Placement> {
    let mut out: Vec<Placement> = Vec::new();
    for (rule_idx, rp) in rule_parts.iter().enumerate() {
        for var in variants(rp) {
            for &t in targets {
                let r = (t + d - var.partner_spoke) % d;
                let rotated = var.part.rotated(r);
                let image: Vec<crate::part::PartVertex> =
                    var.image.iter().map(|&pv| pv.rotated(r, d)).collect();
                let duplicate = out.iter().any(|p| p.rule_idx == rule_idx && p.image == image);
                if !duplicate {
                    out.push(Placement { rule_idx, q: rules[rule_idx].q, part: rotated, image });
                }
            }
        }
    }
    out
}

/// Is the rule-part implied by the combined part: every vertex the rule
/// demands exists and its combined interval lies inside the rule's bound,
/// so the rule appears in every fitting cartwheel.
fn induced(comb: &Part, rp: &Part) -> bool {
    rp.vertices().into_iter().all(|v| {
        let want = rp.interval(v).unwrap();
        comb.interval(v).is_some_and(|have| have.subset_of(&want))
    })
}

/// Upper bound, in tenths, on the net charge the spokes u and v can push
/// into the hub over cartwheels fitting the part that avoid the unavoidable
/// set: enumerate compatible combinations of incoming rule placements,
/// discard any that trigger the reducible-appearance test, and charge the
/// outgoing rules that the combination forces.
pub fn zeta_bound(
    part: &Part,
    u: usize,
    v: usize,
    rules: &[DischargingRule],
    rule_parts: &[RuleParts],
    uset: &UnavoidableSet,
) -> i64 {
    let d = part.hub_degree();
    let targets: Vec<usize> = if u == v { vec![u] } else { vec![u, v] };
    if tau_r(part, uset).is_some() {
        return 0; // no fitting cartwheel avoids the set
    }
    let inward = placements(rule_parts, rules, |rp| rp.sink_at_hub.clone(), &targets, d);
    let outward = placements(rule_parts, rules, |rp| rp.source_at_hub.clone(), &targets, d);
    fn explore(
        i: usize,
        comb: &Part,
        sum_in: i64,
        inward: &[Placement],
        outward: &[Placement],
        uset: &UnavoidableSet,
    ) -> i64 {
        if i == inward.len() {
            let forced_out: i64 = outward.iter().filter(|p| induced(comb, &p.part)).map(|p| p.q).sum();
            return sum_in - forced_out;
        }
        let mut best = explore(i + 1, comb, sum_in, inward, outward, uset);
        if let Ok(Some(c2)) = comb.and(&inward[i].part) {
            if tau_r(&c2, uset).is_none() {
                best = best.max(explore(i + 1, &c2, sum_in + inward[i].q, inward, outward, uset));
            }
        }
        best
    }
    explore(0, part, 0, &inward, &outward, uset)
}

/// One hubcap triplet: two spokes (1-based in scripts, 0-based here) and a
/// claimed bound in tenths. A triplet with equal spokes stands for the two
/// identical copies the hubcap sequence would list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HubcapTriplet {
    pub u: usize,
    pub v: usize,
    pub q: i64,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HubcapError {
    #[error("spoke {spoke} appears {count} times in the hubcap, want exactly 2")]
    BadCoverage { spoke: usize, count: usize },
    #[error("hubcap names spoke {0}, beyond the hub degree")]
    NoSuchSpoke(usize),
}

pub fn validate_hubcap(d: usize, triplets: &[HubcapTriplet]) -> Result<(), HubcapError> {
    let mut count = vec![0usize; d];
    for t in triplets {
        for s in [t.u, t.v] {
            if s >= d {
                return Err(HubcapError::NoSuchSpoke(s));
            }
            count[s] += 1;
        }
    }
    for (spoke, &c) in count.iter().enumerate() {
        if c != 2 {
            return Err(HubcapError::BadCoverage { spoke, count: c });
        }
    }
    Ok(())
}

/// Result of the hubcap test with the per-triplet bounds that were
/// established.
#[derive(Clone, Debug)]
pub struct HubcapOutcome {
    pub ok: bool,
    pub zetas: Vec<i64>,
    pub arithmetic: i64,
}

/// The hubcap test: every claimed per-pair bound must dominate the computed
/// charge bound, and 10(6 - d) + floor(sum/2) must be nonpositive, where
/// the sum counts equal-spoke triplets twice.
pub fn tau_h(
    part: &Part,
    triplets: &[HubcapTriplet],
    rules: &[DischargingRule],
    rule_parts: &[RuleParts],
    uset: &UnavoidableSet,
) -> Result<HubcapOutcome, HubcapError> {
    let d = part.hub_degree();
    validate_hubcap(d, triplets)?;
    let mut zetas = Vec::with_capacity(triplets.len());
    let mut ok = true;
    for t in triplets {
        let z = zeta_bound(part, t.u, t.v, rules, rule_parts, uset);
        if z > t.q {
            ok = false;
        }
        zetas.push(z);
    }
    let doubled: i64 = triplets.iter().map(|t| if t.u == t.v { 2 * t.q } else { t.q }).sum();
    let arithmetic = 10 * (6 - d as i64) + doubled.div_euclid(2);
    if arithmetic > 0 {
        ok = false;
    }
    Ok(HubcapOutcome { ok, zetas, arithmetic })
}

/// The symmetry test: the transformed part must equal a previously
/// dispatched part vertexwise.
pub fn tau_s(part: &Part, reference: usize, sym: Symmetry, history: &[Part]) -> Result<bool, ScriptError> {
    let target = history
        .get(reference)
        .ok_or(ScriptError::DanglingReference { reference, dispatched: history.len() })?;
    Ok(sym.apply_to_part(part) == *target)
}

/// One script line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineOp {
    /// Branch on vertex m with signed bound n.
    Condition { m: usize, n: i32 },
    /// tau_R disposition.
    Reduce,
    /// tau_H disposition with its hubcap.
    Hubcap(Vec<HubcapTriplet>),
    /// tau_S disposition referring to an earlier dispatched part.
    SymmetryRef { reference: usize, rotation: usize, mirror: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptLine {
    pub depth: usize,
    pub op: LineOp,
}

/// A parsed presentation script.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PresentationScript {
    pub lines: Vec<ScriptLine>,
}

#[derive(Debug, thiserror::Error)]
pub enum ScriptError {
    #[error("hub degree {0} outside 5..=11")]
    BadHubDegree(usize),
    #[error("line {line}: depth {depth} but the stack holds {stack} parts")]
    DepthMismatch { line: usize, depth: usize, stack: usize },
    #[error("line {line}: {source}")]
    Refine {
        line: usize,
        #[source]
        source: PartError,
    },
    #[error("line {line}: disposition failed: {reason}")]
    DispositionFailed { line: usize, reason: String },
    #[error("line {line}: {source}")]
    Hubcap {
        line: usize,
        #[source]
        source: HubcapError,
    },
    #[error("symmetry reference {reference} but only {dispatched} parts dispatched")]
    DanglingReference { reference: usize, dispatched: usize },
    #[error("script ended with {0} parts still on the stack")]
    TrailingStack(usize),
    #[error("rule {0} failed to encode: {1}")]
    RuleEncoding(String, String),
}

/// Per-line trace entry of a run.
#[derive(Clone, Debug)]
pub struct LineOutcome {
    pub line: usize,
    pub summary: String,
}

#[derive(Clone, Debug)]
pub struct DispatchReport {
    pub hub_degree: usize,
    pub dispatched: usize,
    pub outcomes: Vec<LineOutcome>,
}

/// Run a presentation script: start from the trivial part of the given hub
/// degree, branch on condition lines (the complementary part replaces the
/// top, the primary part is pushed and worked on first), and pop on
/// successful dispositions. Success is an empty stack at script end.
pub fn run_presentation(
    d: usize,
    script: &PresentationScript,
    uset: &UnavoidableSet,
    rules: &[DischargingRule],
    verbose: bool,
) -> Result<DispatchReport, ScriptError> {
    if !(5..=11).contains(&d) {
        return Err(ScriptError::BadHubDegree(d));
    }
    let rule_parts: Vec<RuleParts> = rules
        .iter()
        .map(|r| rule_as_parts(r, d).map_err(|e| ScriptError::RuleEncoding(r.id.clone(), e.to_string())))
        .collect::<Result<_, _>>()?;
    let mut stack: Vec<Part> = vec![Part::trivial(d)];
    let mut history: Vec<Part> = Vec::new();
    let mut outcomes = Vec::new();
    for (idx, line) in script.lines.iter().enumerate() {
        let line_no = idx + 1;
        if line.depth != stack.len() {
            return Err(ScriptError::DepthMismatch { line: line_no, depth: line.depth, stack: stack.len() });
        }
        let top = stack.last().unwrap().clone();
        match &line.op {
            LineOp::Condition { m, n } => {
                let (primary, complement) =
                    top.refine(*m, *n).map_err(|source| ScriptError::Refine { line: line_no, source })?;
                *stack.last_mut().unwrap() = complement;
                stack.push(primary);
                if verbose {
                    outcomes.push(LineOutcome {
                        line: line_no,
                        summary: format!("C {m} {n}: split into [{}] / [{}]", stack[stack.len() - 1], stack[stack.len() - 2]),
                    });
                }
            }
            LineOp::Reduce => match tau_r(&top, uset) {
                Some(ci) => {
                    outcomes.push(LineOutcome {
                        line: line_no,
                        summary: format!("R: {} appears well-positioned", uset.configs[ci].name),
                    });
                    stack.pop();
                    history.push(top);
                }
                None => {
                    return Err(ScriptError::DispositionFailed {
                        line: line_no,
                        reason: format!("no configuration appears well-positioned in [{top}]"),
                    })
                }
            },
            LineOp::Hubcap(triplets) => {
                let outcome = tau_h(&top, triplets, rules, &rule_parts, uset)
                    .map_err(|source| ScriptError::Hubcap { line: line_no, source })?;
                if !outcome.ok {
                    return Err(ScriptError::DispositionFailed {
                        line: line_no,
                        reason: format!(
                            "hubcap rejected on [{top}]: zetas {:?} vs claims {:?}, arithmetic {}",
                            outcome.zetas,
                            triplets.iter().map(|t| t.q).collect::<Vec<_>>(),
                            outcome.arithmetic
                        ),
                    });
                }
                outcomes.push(LineOutcome {
                    line: line_no,
                    summary: format!("H: zetas {:?}, arithmetic {}", outcome.zetas, outcome.arithmetic),
                });
                stack.pop();
                history.push(top);
            }
            LineOp::SymmetryRef { reference, rotation, mirror } => {
                let sym = Symmetry { rotation: *rotation, mirror: *mirror };
                if tau_s(&top, *reference, sym, &history)? {
                    outcomes.push(LineOutcome {
                        line: line_no,
                        summary: format!("S: matches dispatched part {reference}"),
                    });
                    stack.pop();
                    history.push(top);
                } else {
                    return Err(ScriptError::DispositionFailed {
                        line: line_no,
                        reason: format!("part [{top}] is not the stated transform of dispatched part {reference}"),
                    });
                }
            }
        }
    }
    if !stack.is_empty() {
        return Err(ScriptError::TrailingStack(stack.len()));
    }
    Ok(DispatchReport { hub_degree: d, dispatched: history.len(), outcomes })
}
