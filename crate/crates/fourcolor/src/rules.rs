//! Discharging rules: weighted local patterns that move charge between
//! adjacent vertices, their appearance counting, charges on triangulations,
//! and the encoding of rules as parts.
//!
//! All charge amounts are exact integers in tenths.

use crate::appear::find_embeddings;
use crate::graph::RotationGraph;
use crate::part::{Interval, Part, PartVertex};

/// A discharging rule (q, G(L), s, t, gamma-, gamma+). `q` is in tenths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DischargingRule {
    pub id: String,
    pub q: i64,
    pub graph: RotationGraph,
    pub source: usize,
    pub sink: usize,
    pub lo: Vec<u32>,
    pub hi: Vec<Option<u32>>,
}

impl DischargingRule {
    pub fn interval(&self, v: usize) -> Interval {
        Interval { lo: self.lo[v], hi: self.hi[v] }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RuleError {
    #[error("rule {id}: {msg}")]
    Invalid { id: String, msg: String },
    #[error("rule {id} cannot be encoded as a part: {msg}")]
    Unencodable { id: String, msg: String },
}

/// Validate the defining invariants of a rule.
pub fn validate_rule(rule: &DischargingRule) -> Result<(), RuleError> {
    let err = |msg: String| RuleError::Invalid { id: rule.id.clone(), msg };
    let g = &rule.graph;
    let n = g.vertex_count();
    let report = g.validate_embedding();
    if !report.is_valid() {
        return Err(err(format!("bad embedding: {:?}", report.violations)));
    }
    if n == 0 || !g.is_connected() {
        return Err(err("rule graph must be connected and nonempty".into()));
    }
    if rule.lo.len() != n || rule.hi.len() != n {
        return Err(err("bounds arrays must cover every vertex".into()));
    }
    if rule.source == rule.sink || !g.adjacent(rule.source, rule.sink) {
        return Err(err("source and sink must be distinct adjacent vertices".into()));
    }
    // near-triangulation with no cut vertices
    if n >= 3 {
        let faces = g.faces();
        let non_tri = faces.iter().filter(|f| f.len() != 3).count();
        if non_tri > 1 {
            return Err(err("rule graph is not a near-triangulation".into()));
        }
        for v in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            let (sub, _) = g.induced_subgraph(&rest);
            if !sub.is_connected() {
                return Err(err(format!("vertex {v} is a cut vertex")));
            }
        }
    }
    // every vertex within distance two of both endpoints
    for anchor in [rule.source, rule.sink] {
        let dist = g.distances(anchor);
        if dist.iter().any(|&d| d > 2) {
            return Err(err("a vertex lies farther than two steps from an endpoint".into()));
        }
    }
    let boundary = boundary_vertices(g);
    for v in 0..n {
        let d = g.degree(v) as u32;
        let (lo, hi) = (rule.lo[v], rule.hi[v]);
        if lo < 5 {
            return Err(err(format!("vertex {v} lower bound below 5")));
        }
        if hi.is_some_and(|h| h < lo) {
            return Err(err(format!("vertex {v} has empty bounds")));
        }
        if boundary.contains(&v) {
            if hi.is_some_and(|h| h <= d) {
                return Err(err(format!("boundary vertex {v} upper bound must exceed degree")));
            }
            if lo < d {
                return Err(err(format!("boundary vertex {v} lower bound below degree")));
            }
        } else if lo != d || hi != Some(d) {
            return Err(err(format!("internal vertex {v} bounds must pin its degree")));
        }
    }
    Ok(())
}

fn boundary_vertices(g: &RotationGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let faces = g.faces();
    let outer = faces
        .iter()
        .enumerate()
        .filter(|(_, f)| f.len() != 3)
        .map(|(i, _)| i)
        .next();
    // All-triangle rule graphs (a bare triangle) still border the infinite
    // region with every vertex.
    let fi = outer.unwrap_or(0);
    let mut out: Vec<usize> = faces[fi].darts.iter().map(|d| d.from).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Count the distinct images of a rule appearing with the given source and
/// sink in a labeled host graph. Reflections producing different images
/// count separately; coinciding images count once.
pub fn rule_image_count(
    rule: &DischargingRule,
    host: &RotationGraph,
    labels: &[u32],
    src: usize,
    dst: usize,
) -> usize {
    if !host.adjacent(src, dst) {
        return 0;
    }
    let ok = |p: usize, h: usize| rule.interval(p).contains(labels[h]);
    let maps = find_embeddings(&rule.graph, host, &ok, &[(rule.source, src), (rule.sink, dst)]);
    let mut images: Vec<Vec<usize>> = maps
        .into_iter()
        .map(|m| {
            let mut im = m;
            im.sort_unstable();
            im
        })
        .collect();
    images.sort();
    images.dedup();
    images.len()
}

/// Total charge in tenths carried from u to w across a rule set inside a
/// triangulation (labels are the vertex degrees).
pub fn rule_transfer(t: &RotationGraph, u: usize, w: usize, rules: &[DischargingRule]) -> i64 {
    let labels: Vec<u32> = (0..t.vertex_count()).map(|v| t.degree(v) as u32).collect();
    rules.iter().map(|r| r.q * rule_image_count(r, t, &labels, u, w) as i64).sum()
}

/// Charge of a vertex in tenths: 10(6 - d(u)) - outflow + inflow.
pub fn vertex_charge(t: &RotationGraph, u: usize, rules: &[DischargingRule]) -> i64 {
    let mut c = 10 * (6 - t.degree(u) as i64);
    for &w in t.neighbors(u) {
        c -= rule_transfer(t, u, w, rules);
        c += rule_transfer(t, w, u, rules);
    }
    c
}

/// A rule encoded as a part for a fixed hub degree: the part, which spoke
/// carries the non-hub endpoint, the chirality used, and the slot each rule
/// vertex occupies (the appearance image, which identifies the placement).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RulePart {
    pub part: Part,
    pub partner_spoke: usize,
    pub mirrored: bool,
    pub image: Vec<PartVertex>,
}

/// Rule-as-parts encodings for one hub degree: the sink-at-hub variants
/// receive charge at the hub, the source-at-hub variants send it out.
#[derive(Clone, Debug, Default)]
pub struct RuleParts {
    pub sink_at_hub: Vec<RulePart>,
    pub source_at_hub: Vec<RulePart>,
}

impl RuleParts {
    pub fn count(&self) -> usize {
        self.sink_at_hub.len() + self.source_at_hub.len()
    }
}

/// Encode a rule as parts of hub degree `d`. Variants whose hub endpoint
/// bounds exclude `d` are omitted; a rule needing a fan vertex over a spoke
/// of undetermined degree is unencodable and reported as an error.
pub fn rule_as_parts(rule: &DischargingRule, d: usize) -> Result<RuleParts, RuleError> {
    let mut out = RuleParts::default();
    for mirrored in [false, true] {
        let graph = if mirrored { rule.graph.reflected() } else { rule.graph.clone() };
        for (anchor, partner) in [(rule.sink, rule.source), (rule.source, rule.sink)] {
            if !rule.interval(anchor).contains(d as u32) {
                continue;
            }
            let rp = encode(rule, &graph, anchor, partner, d, mirrored)?;
            let bucket = if anchor == rule.sink { &mut out.sink_at_hub } else { &mut out.source_at_hub };
            // Two chiralities giving the same image are one placement.
            if !bucket.iter().any(|e| e.image == rp.image) {
                bucket.push(rp);
            }
        }
    }
    Ok(out)
}

fn encode(
    rule: &DischargingRule,
    graph: &RotationGraph,
    anchor: usize,
    partner: usize,
    d: usize,
    mirrored: bool,
) -> Result<RulePart, RuleError> {
    let uerr = |msg: String| RuleError::Unencodable { id: rule.id.clone(), msg };
    let n = graph.vertex_count();
    let j = graph.degree(anchor);
    if j > d {
        return Err(uerr(format!("hub endpoint has degree {j} above hub degree {d}")));
    }
    // One face acts as the infinite region; boundary rotations break there.
    let faces = graph.faces();
    let outer_idx = faces.iter().position(|f| f.len() != 3).unwrap_or(0);
    let outer_next = |v: usize| -> Option<usize> {
        faces[outer_idx]
            .darts
            .iter()
            .find(|dart| dart.from == v)
            .map(|dart| graph.dart_target(*dart))
    };
    // Linearize the anchor's neighbor arc; internal anchors start at the
    // partner (the starting point is immaterial, the caller rotates).
    let rot_a = graph.neighbors(anchor);
    let start = outer_next(anchor)
        .and_then(|x| rot_a.iter().position(|&y| y == x))
        .unwrap_or_else(|| rot_a.iter().position(|&y| y == partner).unwrap());
    let arc: Vec<usize> = (0..j).map(|i| rot_a[(start + i) % j]).collect();
    // Place arc element i at spoke i.
    let mut slot: std::collections::HashMap<usize, PartVertex> = std::collections::HashMap::new();
    slot.insert(anchor, PartVertex::Hub);
    for (i, &v) in arc.iter().enumerate() {
        slot.insert(v, PartVertex::Spoke(i));
    }
    // Distance-2 vertices: read each spoke's rotation outward from the hub
    // and map signed offsets onto the standard slot pattern.
    let pinned_fan_count = |v: usize| -> Option<usize> {
        rule.interval(v).pinned().map(|g| g as usize - 5)
    };
    for (i, &sv) in arc.iter().enumerate() {
        let rot = graph.neighbors(sv);
        let deg = rot.len();
        let brk = outer_next(sv).and_then(|x| rot.iter().position(|&y| y == x));
        let lin: Vec<usize> = match brk {
            Some(s) => (0..deg).map(|t| rot[(s + t) % deg]).collect(),
            None => rot.to_vec(),
        };
        let hub_pos = lin.iter().position(|&x| x == anchor).unwrap();
        let fans = pinned_fan_count(sv);
        for (t, &v) in lin.iter().enumerate() {
            if t == hub_pos {
                continue;
            }
            let off = if brk.is_some() {
                t as i64 - hub_pos as i64
            } else {
                // internal rule vertices pin their degree, so the full
                // cycle is addressable via positive offsets
                ((t + deg - hub_pos) % deg) as i64
            };
            let expected = offset_slot(d, i, off, fans);
            assign(&mut slot, v, expected, &rule.id)?;
        }
    }
    if slot.len() != n {
        return Err(uerr("some rule vertex could not be placed on the part shape".into()));
    }
    // Build the part: spokes first so fan slots exist.
    let mut part = Part::trivial(d);
    let apply = |want: &dyn Fn(&PartVertex) -> bool, part: &mut Part| -> Result<(), RuleError> {
        for (&v, &pv) in &slot {
            if !want(&pv) {
                continue;
            }
            if part.interval(pv).is_none() {
                return Err(RuleError::Unencodable {
                    id: rule.id.clone(),
                    msg: format!("fan vertex over an undetermined spoke (vertex {v})"),
                });
            }
            part.clamp(pv, rule.interval(v)).ok_or_else(|| RuleError::Invalid {
                id: rule.id.clone(),
                msg: format!("bounds of vertex {v} clash with the part shape"),
            })?;
        }
        Ok(())
    };
    apply(&|pv| matches!(pv, PartVertex::Spoke(_)), &mut part)?;
    apply(&|pv| matches!(pv, PartVertex::Hat(_)), &mut part)?;
    apply(&|pv| matches!(pv, PartVertex::Fan(..)), &mut part)?;
    verify_encoding(rule, graph, &slot, &part)?;
    let partner_spoke = match slot[&partner] {
        PartVertex::Spoke(k) => k,
        _ => unreachable!("partner is adjacent to the hub"),
    };
    let image = (0..n).map(|v| slot[&v]).collect();
    Ok(RulePart { part, partner_spoke, mirrored, image })
}

/// Slot at a signed rotation offset from the hub around spoke i. Positive
/// offsets walk clockwise (previous spoke, hat below, fans ascending);
/// negative walk the other way (next spoke, hat above, fans descending).
fn offset_slot(d: usize, i: usize, off: i64, fans: Option<usize>) -> Option<PartVertex> {
    if off > 0 {
        match off {
            1 => Some(PartVertex::Spoke((i + d - 1) % d)),
            2 => Some(PartVertex::Hat((i + d - 1) % d)),
            s => fans.and_then(|m| {
                let l = (s - 3) as usize;
                if l < m {
                    Some(PartVertex::Fan(i, l))
                } else if l == m {
                    Some(PartVertex::Hat(i))
                } else if l == m + 1 {
                    Some(PartVertex::Spoke((i + 1) % d))
                } else {
                    None
                }
            }),
        }
    } else {
        match -off {
            1 => Some(PartVertex::Spoke((i + 1) % d)),
            2 => Some(PartVertex::Hat(i)),
            s => fans.and_then(|m| {
                let back = (s - 3) as usize;
                if back < m {
                    Some(PartVertex::Fan(i, m - 1 - back))
                } else if back == m {
                    Some(PartVertex::Hat((i + d - 1) % d))
                } else if back == m + 1 {
                    Some(PartVertex::Spoke((i + d - 1) % d))
                } else {
                    None
                }
            }),
        }
    }
}

fn assign(
    slot: &mut std::collections::HashMap<usize, PartVertex>,
    v: usize,
    expected: Option<PartVertex>,
    rule_id: &str,
) -> Result<(), RuleError> {
    let expected = expected.ok_or_else(|| RuleError::Unencodable {
        id: rule_id.to_string(),
        msg: format!("vertex {v} needs a fan slot over a spoke of undetermined degree"),
    })?;
    match slot.get(&v) {
        Some(&prev) if prev != expected => Err(RuleError::Unencodable {
            id: rule_id.to_string(),
            msg: format!("vertex {v} lands on two different slots ({prev:?} vs {expected:?})"),
        }),
        _ => {
            slot.insert(v, expected);
            Ok(())
        }
    }
}


/// Defensive check: over the placed image, rule edges and part-graph edges
/// must coincide, so fitting the encoded part is exactly rule appearance.
fn verify_encoding(
    rule: &DischargingRule,
    graph: &RotationGraph,
    slot: &std::collections::HashMap<usize, PartVertex>,
    part: &Part,
) -> Result<(), RuleError> {
    let (pg, desc) = part.part_graph();
    let index_of = |pv: PartVertex| desc.iter().position(|&x| x == pv);
    let n = graph.vertex_count();
    for a in 0..n {
        for b in (a + 1)..n {
            let (ia, ib) = match (index_of(slot[&a]), index_of(slot[&b])) {
                (Some(x), Some(y)) => (x, y),
                _ => {
                    return Err(RuleError::Unencodable {
                        id: rule.id.clone(),
                        msg: "image slot missing from part graph".into(),
                    })
                }
            };
            if graph.adjacent(a, b) != pg.adjacent(ia, ib) {
                return Err(RuleError::Unencodable {
                    id: rule.id.clone(),
                    msg: format!("adjacency of vertices {a},{b} disagrees with the part shape"),
                });
            }
        }
    }
    Ok(())
}


/// Rule sets used across the test suites.
pub mod known {
    use super::DischargingRule;
    use crate::graph::RotationGraph;

    /// Triangle with free bounds: moves q from s to t whenever they share a
    /// triangle.
    pub fn triangle_rule(q: i64) -> DischargingRule {
        DischargingRule {
            id: "triangle".into(),
            q,
            graph: RotationGraph::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]]),
            source: 0,
            sink: 1,
            lo: vec![5, 5, 5],
            hi: vec![None, None, None],
        }
    }

    /// A bare edge: degree-5 vertices feed their big neighbors.
    pub fn edge_rule(q: i64, src_lo: u32, src_hi: Option<u32>, dst_lo: u32, dst_hi: Option<u32>) -> DischargingRule {
        DischargingRule {
            id: "edge".into(),
            q,
            graph: RotationGraph::new(vec![vec![1], vec![0]]),
            source: 0,
            sink: 1,
            lo: vec![src_lo, dst_lo],
            hi: vec![src_hi, dst_hi],
        }
    }

    /// Two triangles over the source-sink edge, with assorted bounds.
    pub fn double_triangle_rule(q: i64) -> DischargingRule {
        DischargingRule {
            id: "double-triangle".into(),
            q,
            graph: RotationGraph::new(vec![
                vec![2, 1, 3], // source
                vec![3, 0, 2], // sink
                vec![1, 0],    // flank of the first triangle
                vec![0, 1],    // flank of the second
            ]),
            source: 0,
            sink: 1,
            lo: vec![5, 6, 5, 5],
            hi: vec![Some(6), None, None, Some(11)],
        }
    }
}
