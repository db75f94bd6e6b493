//! Seeded generators for test corpora: internally 6-connected
//! triangulations grown from a subdivided icosahedron by degree-preserving
//! local moves, triangulated disks with a fixed boundary ring, and random
//! sub-configurations of triangulations.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::config::{validate_configuration, Configuration};
use crate::graph::{is_internally_six_connected, is_triangulation, shapes, Dart, RotationGraph};

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Midpoint subdivision: every edge gains a vertex, every face splits into
/// four. Degrees of old vertices are preserved; new vertices have degree 6,
/// so internal 6-connectivity survives.
pub fn subdivide(t: &RotationGraph) -> RotationGraph {
    let n = t.vertex_count();
    let mut edge_id = std::collections::HashMap::new();
    let mut next = n;
    for v in 0..n {
        for &w in t.neighbors(v) {
            let key = (v.min(w), v.max(w));
            edge_id.entry(key).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
        }
    }
    let mid = |u: usize, v: usize| edge_id[&(u.min(v), u.max(v))];
    // Apex of the triangle on the left of each dart.
    let apex = |u: usize, v: usize| -> usize {
        let d = t.dart(u, v).unwrap();
        let d2 = t.next_in_face(d);
        t.dart_target(d2)
    };
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); next];
    for v in 0..n {
        rot[v] = t.neighbors(v).iter().map(|&w| mid(v, w)).collect();
    }
    for v in 0..n {
        for &w in t.neighbors(v) {
            if v > w {
                continue;
            }
            let m = mid(v, w);
            let a = apex(v, w); // left of v->w
            let b = apex(w, v); // left of w->v
            rot[m] = vec![v, mid(v, a), mid(w, a), w, mid(w, b), mid(v, b)];
        }
    }
    RotationGraph::new(rot)
}

/// Flip the edge (u, v) to the opposite diagonal of its two triangles.
/// Returns None when the flip would break simplicity.
pub fn flip_edge(t: &RotationGraph, u: usize, v: usize) -> Option<RotationGraph> {
    let d_uv = t.dart(u, v)?;
    let a = t.dart_target(t.next_in_face(d_uv));
    let d_vu = t.dart(v, u)?;
    let b = t.dart_target(t.next_in_face(d_vu));
    if a == b || t.adjacent(a, b) {
        return None;
    }
    let mut rot: Vec<Vec<usize>> = t.rotations().to_vec();
    rot[u].retain(|&x| x != v);
    rot[v].retain(|&x| x != u);
    // Around a: v then u consecutively; b slots between them.
    let pos = rot[a].iter().position(|&x| x == v)?;
    rot[a].insert(pos + 1, b);
    let pos = rot[b].iter().position(|&x| x == u)?;
    rot[b].insert(pos + 1, a);
    Some(RotationGraph::new(rot))
}

/// Split vertex v along the diagonal (rot[v][i], rot[v][j]): v keeps the
/// clockwise arc i..=j, a new vertex takes the rest, and the two arc ends
/// become adjacent to both halves.
pub fn split_vertex(t: &RotationGraph, v: usize, i: usize, j: usize) -> Option<RotationGraph> {
    let old = t.neighbors(v).to_vec();
    let d = old.len();
    if i == j || (j + d - i) % d < 1 {
        return None;
    }
    let arc_a: Vec<usize> = (0..=(j + d - i) % d).map(|s| old[(i + s) % d]).collect();
    let arc_b: Vec<usize> = (0..=(i + d - j) % d).map(|s| old[(j + s) % d]).collect();
    let v2 = t.vertex_count();
    let mut rot: Vec<Vec<usize>> = t.rotations().to_vec();
    rot.push(Vec::new());
    let mut rv = arc_a.clone();
    rv.push(v2);
    rot[v] = rv;
    let mut rv2 = arc_b.clone();
    rv2.push(v);
    rot[v2] = rv2;
    let n_i = old[i];
    let n_j = old[j];
    for (x, r) in rot.iter_mut().enumerate() {
        if x == v || x == v2 {
            continue;
        }
        if let Some(p) = r.iter().position(|&y| y == v) {
            if x == n_i {
                // triangle (n_i, v, v2): v then v2 clockwise
                r[p] = v;
                r.insert(p + 1, v2);
            } else if x == n_j {
                r[p] = v2;
                r.insert(p + 1, v);
            } else if arc_b[1..arc_b.len() - 1].contains(&x) {
                r[p] = v2;
            }
        }
    }
    Some(RotationGraph::new(rot))
}

fn triangulation_ok(t: &RotationGraph) -> bool {
    t.validate_embedding().is_valid() && matches!(is_triangulation(t), Ok(true))
}

fn i6c_ok(t: &RotationGraph) -> bool {
    triangulation_ok(t)
        && (0..t.vertex_count()).all(|v| t.degree(v) >= 5)
        && matches!(is_internally_six_connected(t), Ok(true))
}

/// Random internally 6-connected triangulation: a subdivided icosahedron
/// randomized by degree-safe flips and splits, rejecting any move that
/// introduces a short circuit.
pub fn random_i6c_triangulation(rng: &mut StdRng, moves: usize) -> RotationGraph {
    let mut t = subdivide(&shapes::icosahedron());
    debug_assert!(i6c_ok(&t));
    let mut applied = 0;
    let mut attempts = 0;
    while applied < moves && attempts < moves * 30 {
        attempts += 1;
        let candidate = if rng.gen_bool(0.7) {
            // flip a random edge whose endpoints can afford to lose one
            let u = rng.gen_range(0..t.vertex_count());
            if t.degree(u) < 7 {
                continue;
            }
            let v = t.neighbors(u)[rng.gen_range(0..t.degree(u))];
            if t.degree(v) < 7 {
                continue;
            }
            flip_edge(&t, u, v)
        } else {
            // split a vertex into two halves of degree >= 5
            let v = rng.gen_range(0..t.vertex_count());
            let d = t.degree(v);
            if d < 8 {
                continue;
            }
            let i = rng.gen_range(0..d);
            let j = (i + 4 + rng.gen_range(0..=(d - 8))) % d;
            split_vertex(&t, v, i, j)
        };
        if let Some(t2) = candidate {
            if i6c_ok(&t2) {
                t = t2;
                applied += 1;
            }
        }
    }
    t
}

/// Triangulated disk: a cycle of `ring_len` boundary vertices 0..ring_len
/// around `internal` interior vertices, randomized by interior splits and
/// flips. Returns the graph; the outer face is the ascending ring walk.
pub fn triangulated_disk(rng: &mut StdRng, ring_len: usize, internal: usize) -> RotationGraph {
    assert!(ring_len >= 3);
    assert!(internal >= 1);
    let hub = ring_len;
    let mut rot: Vec<Vec<usize>> = (0..ring_len)
        .map(|i| vec![(i + 1) % ring_len, hub, (i + ring_len - 1) % ring_len])
        .collect();
    rot.push((0..ring_len).collect());
    let mut t = RotationGraph::new(rot);
    let mut guard = 0;
    while t.vertex_count() - ring_len < internal && guard < 200 {
        guard += 1;
        let v = ring_len + rng.gen_range(0..t.vertex_count() - ring_len);
        let d = t.degree(v);
        if d < 4 {
            continue;
        }
        let i = rng.gen_range(0..d);
        let j = (i + 2 + rng.gen_range(0..=(d - 4))) % d;
        if let Some(t2) = split_vertex(&t, v, i, j) {
            if disk_ok(&t2, ring_len) {
                t = t2;
            }
        }
    }
    // a few interior flips for shape variety
    for _ in 0..6 {
        let u = rng.gen_range(0..t.vertex_count());
        let nbrs = t.neighbors(u);
        if nbrs.is_empty() {
            continue;
        }
        let v = nbrs[rng.gen_range(0..nbrs.len())];
        let boundary_edge =
            u < ring_len && v < ring_len && ((u + 1) % ring_len == v || (v + 1) % ring_len == u);
        if boundary_edge {
            continue;
        }
        if let Some(t2) = flip_edge(&t, u, v) {
            if disk_ok(&t2, ring_len) {
                t = t2;
            }
        }
    }
    t
}

/// Disk validity: valid embedding, the ascending ring walk is a face, and
/// every other face is a triangle.
fn disk_ok(t: &RotationGraph, ring_len: usize) -> bool {
    if !t.validate_embedding().is_valid() || !t.is_connected() {
        return false;
    }
    if (0..ring_len).any(|i| !t.adjacent(i, (i + 1) % ring_len)) {
        return false;
    }
    let faces = t.faces();
    let Some(outer) = outer_ring_face(t, ring_len, &faces) else {
        return false;
    };
    faces
        .iter()
        .enumerate()
        .all(|(fi, f)| fi == outer || f.len() == 3)
}

/// Index of the face that walks the boundary ring exactly.
pub fn outer_ring_face(t: &RotationGraph, ring_len: usize, faces: &[crate::graph::Face]) -> Option<usize> {
    faces.iter().position(|f| {
        f.len() == ring_len && f.darts.iter().all(|d| d.from < ring_len && t.dart_target(*d) < ring_len)
    })
}

/// Set the designated outer face of a disk to the ring walk.
pub fn mark_disk_outer(t: &mut RotationGraph, ring_len: usize) {
    let faces = t.faces();
    if let Some(fi) = outer_ring_face(t, ring_len, &faces) {
        let dart: Dart = faces[fi].darts[0];
        t.set_outer(Some(dart));
    }
}

/// Randomly erase interior edges and vertices of a disk, keeping the
/// boundary ring and connectivity; the outer face stays the ring walk.
pub fn erode_disk(rng: &mut StdRng, t: &RotationGraph, ring_len: usize, steps: usize) -> RotationGraph {
    let mut cur = t.clone();
    for _ in 0..steps {
        let attempt: Option<RotationGraph> = if rng.gen_bool(0.5) && cur.vertex_count() > ring_len + 1 {
            // delete an interior vertex entirely
            let v = ring_len + rng.gen_range(0..cur.vertex_count() - ring_len);
            let keep: Vec<usize> = (0..cur.vertex_count()).filter(|&x| x != v).collect();
            Some(cur.induced_subgraph(&keep).0)
        } else {
            // delete one non-boundary edge
            let u = rng.gen_range(0..cur.vertex_count());
            let nbrs = cur.neighbors(u);
            if nbrs.is_empty() {
                None
            } else {
                let v = nbrs[rng.gen_range(0..nbrs.len())];
                let boundary =
                    u < ring_len && v < ring_len && ((u + 1) % ring_len == v || (v + 1) % ring_len == u);
                if boundary {
                    None
                } else {
                    let mut rot = cur.rotations().to_vec();
                    rot[u].retain(|&x| x != v);
                    rot[v].retain(|&x| x != u);
                    Some(RotationGraph::new(rot))
                }
            }
        };
        if let Some(t2) = attempt {
            let ring_intact = (0..ring_len).all(|i| t2.adjacent(i, (i + 1) % ring_len));
            if ring_intact && t2.validate_embedding().is_valid() && t2.is_connected() {
                let faces = t2.faces();
                if outer_ring_face(&t2, ring_len, &faces).is_some() {
                    cur = t2;
                }
            }
        }
    }
    cur
}

/// Random valid configuration carved out of a triangulation: a small
/// connected induced subgraph with ambient degrees as gamma.
pub fn random_configuration(rng: &mut StdRng, t: &RotationGraph, max_size: usize) -> Option<Configuration> {
    let n = t.vertex_count();
    let target = 1 + rng.gen_range(0..max_size);
    let start = rng.gen_range(0..n);
    let mut chosen = vec![start];
    while chosen.len() < target {
        let from = chosen[rng.gen_range(0..chosen.len())];
        let cands: Vec<usize> = t
            .neighbors(from)
            .iter()
            .copied()
            .filter(|w| !chosen.contains(w))
            .collect();
        if cands.is_empty() {
            break;
        }
        chosen.push(cands[rng.gen_range(0..cands.len())]);
    }
    chosen.sort_unstable();
    let (sub, ids) = t.induced_subgraph(&chosen);
    let gamma: Vec<u32> = ids.iter().map(|&v| t.degree(v) as u32).collect();
    let k = Configuration::new(format!("sampled-{start}"), sub, gamma);
    if validate_configuration(&k).is_valid() {
        Some(k)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivision_is_internally_six_connected() {
        let t = subdivide(&shapes::icosahedron());
        assert_eq!(t.vertex_count(), 42);
        assert!(i6c_ok(&t));
        // degree spectrum: 12 fives, 30 sixes
        let fives = (0..42).filter(|&v| t.degree(v) == 5).count();
        assert_eq!(fives, 12);
        // a degree-six vertex holds no charge under the empty rule set
        let six = (0..42).find(|&v| t.degree(v) == 6).unwrap();
        assert_eq!(crate::rules::vertex_charge(&t, six, &[]), 0);
    }

    #[test]
    fn generator_produces_valid_i6c_triangulations() {
        let mut rng = seeded(7);
        for _ in 0..3 {
            let t = random_i6c_triangulation(&mut rng, 6);
            assert!(i6c_ok(&t));
            // Euler charge identity
            let total: i64 = (0..t.vertex_count()).map(|v| 6 - t.degree(v) as i64).sum();
            assert_eq!(total, 12);
        }
    }

    #[test]
    fn splitting_an_icosahedron_vertex_breaks_six_connectivity() {
        // Arcs of size 4 and 3 leave one half at degree 4.
        let t = shapes::icosahedron();
        let t2 = split_vertex(&t, 0, 0, 3).unwrap();
        assert!(t2.validate_embedding().is_valid());
        assert!(matches!(crate::graph::is_triangulation(&t2), Ok(true)));
        assert!(!matches!(crate::graph::is_internally_six_connected(&t2), Ok(true)));
    }

    #[test]
    fn disks_have_ring_face_and_triangular_interior() {
        let mut rng = seeded(11);
        for ring in 4..=6 {
            let t = triangulated_disk(&mut rng, ring, 3);
            assert!(disk_ok(&t, ring), "ring {ring}");
        }
    }

    #[test]
    fn eroded_disks_keep_the_ring_walk() {
        let mut rng = seeded(13);
        let t = triangulated_disk(&mut rng, 5, 4);
        let e = erode_disk(&mut rng, &t, 5, 6);
        let faces = e.faces();
        assert!(outer_ring_face(&e, 5, &faces).is_some());
    }

    #[test]
    fn sampled_configurations_validate_and_appear() {
        let mut rng = seeded(17);
        let t = random_i6c_triangulation(&mut rng, 4);
        let mut found = 0;
        for _ in 0..40 {
            if let Some(k) = random_configuration(&mut rng, &t, 4) {
                found += 1;
                assert!(validate_configuration(&k).is_valid());
                assert!(crate::appearance::appears_in_triangulation(&k, &t), "{}", k.name);
            }
        }
        assert!(found > 5, "generator should produce some configurations, got {found}");
    }
}
