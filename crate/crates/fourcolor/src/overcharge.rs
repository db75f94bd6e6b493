//! Mechanized bound on the charge a single edge can carry into a
//! high-degree vertex: enumerate how rules with the source at a hub of
//! given degree can pile onto one edge, screen out scenes containing known
//! configurations, and report the maximum with an attaining witness scene.

use crate::graph::RotationGraph;
use crate::part::{Interval, Part, PartVertex};
use crate::rules::{rule_as_parts, DischargingRule, RuleParts};
use crate::script::{tau_r, UnavoidableSet};

/// Degree label of a scene vertex: an exact small degree or a wildcard
/// class of everything at least the stated value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeLabel {
    Exact(u32),
    AtLeast(u32),
}

impl DegreeLabel {
    /// Does every degree in this label class satisfy the interval?
    pub fn satisfies(&self, iv: &Interval) -> bool {
        match *self {
            DegreeLabel::Exact(x) => iv.contains(x),
            DegreeLabel::AtLeast(x) => x >= iv.lo && iv.hi.is_none(),
        }
    }
}

impl std::fmt::Display for DegreeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DegreeLabel::Exact(x) => write!(f, "{x}"),
            DegreeLabel::AtLeast(x) => write!(f, "{x}+"),
        }
    }
}

/// The case-analysis universe around the anchored edge: the amalgamated
/// skeleton plus a degree label per vertex. Vertex 0 is the source hub,
/// vertex 1 the sink.
#[derive(Clone, Debug)]
pub struct Scene {
    pub graph: RotationGraph,
    pub labels: Vec<DegreeLabel>,
    pub descriptors: Vec<PartVertex>,
}

/// Bound for one source degree with its witness.
#[derive(Clone, Debug)]
pub struct EdgeTransferBound {
    pub source_degree: usize,
    /// Maximum transfer in tenths.
    pub bound: i64,
    pub witness: Scene,
    /// Re-evaluating every rule against the witness labels.
    pub witness_recount: i64,
}

#[derive(Debug, thiserror::Error)]
pub enum OverchargeError {
    #[error("rule {0} cannot be encoded as a part: {1}")]
    Unencodable(String, String),
    #[error("wildcard cap {cap} is below the largest finite bound {needed}")]
    CapTooSmall { cap: u32, needed: u32 },
}

/// Largest finite degree bound mentioned by the rules or the screen, plus
/// one: degrees at or above it are indistinguishable.
pub fn wildcard_cap(rules: &[DischargingRule], screen: &UnavoidableSet) -> u32 {
    let mut top = 5;
    for r in rules {
        for v in 0..r.graph.vertex_count() {
            top = top.max(r.lo[v]);
            if let Some(h) = r.hi[v] {
                top = top.max(h);
            }
        }
    }
    for k in &screen.configs {
        for &g in &k.gamma {
            top = top.max(g);
        }
    }
    top + 1
}

/// Maximum total rule charge from a degree-`d_u` vertex across one edge,
/// over all degree-labeled scenes avoiding the screen configurations.
pub fn max_edge_transfer(
    d_u: usize,
    rules: &[DischargingRule],
    screen: &UnavoidableSet,
    cap: Option<u32>,
) -> Result<EdgeTransferBound, OverchargeError> {
    let needed = wildcard_cap(rules, screen);
    if let Some(c) = cap {
        if c < needed {
            return Err(OverchargeError::CapTooSmall { cap: c, needed });
        }
    }
    let rule_parts: Vec<RuleParts> = rules
        .iter()
        .map(|r| rule_as_parts(r, d_u).map_err(|e| OverchargeError::Unencodable(r.id.clone(), e.to_string())))
        .collect::<Result<_, _>>()?;
    // Placements: source at the hub, sink pinned on spoke 0, all rotations
    // of the remaining geometry and both chiralities, keyed by image.
    let mut placements: Vec<(usize, i64, Part, Vec<PartVertex>)> = Vec::new();
    for (rule_idx, rp) in rule_parts.iter().enumerate() {
        for var in &rp.source_at_hub {
            let r = d_u - var.partner_spoke;
            let rotated = var.part.rotated(r % d_u);
            let image: Vec<PartVertex> = var.image.iter().map(|&pv| pv.rotated(r % d_u, d_u)).collect();
            if !placements.iter().any(|(ri, _, _, im)| *ri == rule_idx && *im == image) {
                placements.push((rule_idx, rules[rule_idx].q, rotated, image));
            }
        }
    }
    let base = Part::trivial(d_u);
    let mut best_val = 0;
    let mut best_part = base.clone();
    if tau_r(&base, screen).is_none() {
        explore(0, &base, 0, &placements, screen, &mut best_val, &mut best_part);
    }
    let witness = scene_of(&best_part);
    let witness_recount = recount(&witness, rules);
    Ok(EdgeTransferBound { source_degree: d_u, bound: best_val, witness, witness_recount })
}

fn explore(
    i: usize,
    comb: &Part,
    sum: i64,
    placements: &[(usize, i64, Part, Vec<PartVertex>)],
    screen: &UnavoidableSet,
    best_val: &mut i64,
    best_part: &mut Part,
) {
    if i == placements.len() {
        if sum > *best_val {
            *best_val = sum;
            *best_part = comb.clone();
        }
        return;
    }
    if let Ok(Some(c2)) = comb.and(&placements[i].2) {
        if tau_r(&c2, screen).is_none() {
            explore(i + 1, &c2, sum + placements[i].1, placements, screen, best_val, best_part);
        }
    }
    explore(i + 1, comb, sum, placements, screen, best_val, best_part);
}

/// Materialize the witness scene of a combined part: its part graph with
/// the minimal admissible label per vertex (wildcard for unbounded ones).
/// The graph is relabeled so the hub is vertex 0 and the sink spoke is 1.
fn scene_of(part: &Part) -> Scene {
    let (graph, desc) = part.part_graph();
    let n = graph.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    // hub already 0; move spoke 0 (the sink) to graph vertex 1
    let sink_idx = desc.iter().position(|&v| v == PartVertex::Spoke(0)).unwrap();
    perm.swap(1, sink_idx);
    let mut inv = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    let relabeled = graph.relabeled(&inv);
    let mut labels = vec![DegreeLabel::Exact(5); n];
    let mut descriptors = vec![PartVertex::Hub; n];
    for old in 0..n {
        let iv = part.interval(desc[old]).unwrap();
        labels[inv[old]] = match iv.pinned() {
            Some(g) => DegreeLabel::Exact(g),
            None => match iv.hi {
                Some(_) => DegreeLabel::Exact(iv.lo),
                None => DegreeLabel::AtLeast(iv.lo),
            },
        };
        descriptors[inv[old]] = desc[old];
    }
    Scene { graph: relabeled, labels, descriptors }
}

/// Total charge, in tenths, of all rules appearing with source 0 and sink 1
/// in the witness scene, judged against the label classes.
pub fn recount(scene: &Scene, rules: &[DischargingRule]) -> i64 {
    use crate::appear::find_embeddings;
    let mut total = 0;
    for rule in rules {
        let ok = |p: usize, h: usize| scene.labels[h].satisfies(&rule.interval(p));
        let maps = find_embeddings(&rule.graph, &scene.graph, &ok, &[(rule.source, 0), (rule.sink, 1)]);
        let mut images: Vec<Vec<usize>> = maps
            .into_iter()
            .map(|mut m| {
                m.sort_unstable();
                m
            })
            .collect();
        images.sort();
        images.dedup();
        total += rule.q * images.len() as i64;
    }
    total
}

/// Per-degree report of the overcharge verification.
#[derive(Clone, Debug)]
pub struct OverchargeReport {
    /// Threshold in tenths (default 5 = one half).
    pub threshold: i64,
    pub bounds: Vec<EdgeTransferBound>,
    /// True when no rule admits a source of degree 9 or more, making those
    /// transfers vanish identically.
    pub high_degrees_vacuous: bool,
    pub pass: bool,
}

/// Run the bound for each relevant source degree and compare against the
/// threshold. Source degrees 5..=8 are always checked; higher degrees are
/// checked when some rule admits them (up to the hub-degree cap of 11).
pub fn verify_overcharge_bound(
    rules: &[DischargingRule],
    screen: &UnavoidableSet,
    threshold: i64,
) -> Result<OverchargeReport, OverchargeError> {
    let mut degrees: Vec<usize> = (5..=8).collect();
    let mut high_degrees_vacuous = true;
    for d in 9..=11 {
        if rules.iter().any(|r| r.interval(r.source).contains(d as u32)) {
            degrees.push(d);
            high_degrees_vacuous = false;
        }
    }
    let mut bounds = Vec::new();
    let mut pass = true;
    for d in degrees {
        let b = max_edge_transfer(d, rules, screen, None)?;
        if b.bound > threshold {
            pass = false;
        }
        bounds.push(b);
    }
    Ok(OverchargeReport { threshold, bounds, high_degrees_vacuous, pass })
}
