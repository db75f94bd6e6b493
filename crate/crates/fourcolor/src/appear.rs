//! Embedding-preserving subgraph search: find copies of a small pattern
//! inside a host so that the image is an induced subgraph, the cyclic
//! neighbor orders agree under one global orientation, and a caller-supplied
//! per-vertex compatibility test holds. This is the appearance test shared
//! by rules and configurations.

use crate::graph::RotationGraph;

/// One embedding: image vertex per pattern vertex.
pub type Embedding = Vec<usize>;

/// Find embeddings of `pattern` into `host`.
///
/// `ok(p, h)` gates which host vertex may carry which pattern vertex.
/// `anchors` pre-assigns pattern vertices (used to pin rule source/sink).
/// Results are deduplicated exactly (identical maps from both orientations
/// collapse); distinct maps with equal image sets are kept.
pub fn find_embeddings(
    pattern: &RotationGraph,
    host: &RotationGraph,
    ok: &dyn Fn(usize, usize) -> bool,
    anchors: &[(usize, usize)],
) -> Vec<Embedding> {
    let np = pattern.vertex_count();
    let nh = host.vertex_count();
    if np == 0 || np > nh {
        return Vec::new();
    }
    let mut map = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    for &(p, h) in anchors {
        if !ok(p, h) || used[h] {
            return Vec::new();
        }
        map[p] = h;
        used[h] = true;
    }
    // Order: anchored vertices first, then BFS over pattern adjacency,
    // then any leftovers (disconnected patterns).
    let mut order: Vec<usize> = anchors.iter().map(|&(p, _)| p).collect();
    let mut seen = vec![false; np];
    for &p in &order {
        seen[p] = true;
    }
    let mut queue: std::collections::VecDeque<usize> = order.iter().copied().collect();
    if queue.is_empty() {
        queue.push_back(0);
        seen[0] = true;
        order.push(0);
    }
    while let Some(v) = queue.pop_front() {
        for &w in pattern.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    for v in 0..np {
        if !seen[v] {
            order.push(v);
        }
    }

    let mut out: Vec<Embedding> = Vec::new();
    backtrack(pattern, host, ok, &order, anchors.len().min(order.len()), &mut map, &mut used, &mut out);
    out.sort();
    out.dedup();
    out
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    pattern: &RotationGraph,
    host: &RotationGraph,
    ok: &dyn Fn(usize, usize) -> bool,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Embedding>,
) {
    if depth == order.len() {
        if embedding_checks(pattern, host, map) {
            out.push(map.clone());
        }
        return;
    }
    let v = order[depth];
    if map[v] != usize::MAX {
        backtrack(pattern, host, ok, order, depth + 1, map, used, out);
        return;
    }
    // Candidates: neighbors of an already-mapped pattern neighbor, or any
    // free host vertex for roots of disconnected pieces.
    let mapped_nbr = pattern.neighbors(v).iter().copied().find(|&w| map[w] != usize::MAX);
    let candidates: Vec<usize> = match mapped_nbr {
        Some(w) => host.neighbors(map[w]).to_vec(),
        None => (0..host.vertex_count()).collect(),
    };
    'cand: for h in candidates {
        if used[h] || !ok(v, h) {
            continue;
        }
        for &w in pattern.neighbors(v) {
            if map[w] != usize::MAX && !host.adjacent(h, map[w]) {
                continue 'cand;
            }
        }
        map[v] = h;
        used[h] = true;
        backtrack(pattern, host, ok, order, depth + 1, map, used, out);
        map[v] = usize::MAX;
        used[h] = false;
    }
}

/// Induced image plus cyclic rotation agreement under one global
/// orientation (reflections allowed: either orientation may hold, but it
/// must be the same at every vertex).
fn embedding_checks(pattern: &RotationGraph, host: &RotationGraph, map: &[usize]) -> bool {
    let np = pattern.vertex_count();
    let mut inverse = std::collections::HashMap::new();
    for (p, &h) in map.iter().enumerate() {
        inverse.insert(h, p);
    }
    // Induced: host adjacency among images must mirror pattern adjacency.
    for p in 0..np {
        let h = map[p];
        for &hn in host.neighbors(h) {
            if let Some(&q) = inverse.get(&hn) {
                if !pattern.adjacent(p, q) {
                    return false;
                }
            }
        }
    }
    // Rotation agreement: restricted host rotation equals mapped pattern
    // rotation, forwards everywhere or backwards everywhere.
    let mut allow_fwd = true;
    let mut allow_bwd = true;
    for p in 0..np {
        if pattern.degree(p) < 3 {
            continue;
        }
        let h = map[p];
        let restricted: Vec<usize> =
            host.neighbors(h).iter().copied().filter(|hn| inverse.contains_key(hn)).collect();
        let mapped: Vec<usize> = pattern.neighbors(p).iter().map(|&q| map[q]).collect();
        if restricted.len() != mapped.len() {
            return false;
        }
        if !cyclic_equal(&mapped, &restricted) {
            allow_fwd = false;
        }
        let reversed: Vec<usize> = mapped.iter().rev().copied().collect();
        if !cyclic_equal(&reversed, &restricted) {
            allow_bwd = false;
        }
        if !allow_fwd && !allow_bwd {
            return false;
        }
    }
    true
}

fn cyclic_equal(a: &[usize], b: &[usize]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    if n == 0 {
        return true;
    }
    (0..n).any(|s| (0..n).all(|i| a[i] == b[(s + i) % n]))
}
