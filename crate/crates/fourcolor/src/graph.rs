//! Embedded planar graphs as rotation systems.
//!
//! A graph is stored as one clockwise neighbor list per vertex. Faces are the
//! orbits of the dart permutation `(u,v) -> (v, w)` where `w` follows `u` in
//! the clockwise rotation around `v`; a rotation system is a valid sphere
//! embedding exactly when every connected component satisfies V - E + F = 2.

use std::collections::VecDeque;

/// A directed edge occurrence: `from` together with the index of the target
/// in `rot[from]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dart {
    pub from: usize,
    pub slot: usize,
}

/// Embedded graph: clockwise neighbor lists, plus an optional dart marking
/// the face that plays the role of the infinite region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationGraph {
    rot: Vec<Vec<usize>>,
    outer: Option<Dart>,
}

/// One closed face walk, as the sequence of darts traversed.
#[derive(Clone, Debug)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// Cyclic sequence of distinct, consecutively adjacent vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub vertices: Vec<usize>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Canonical form: least rotation of the smaller of the sequence and its
    /// reversal, used to deduplicate circuits found by search.
    pub fn canonical(&self) -> Vec<usize> {
        fn least_rotation(seq: &[usize]) -> Vec<usize> {
            let n = seq.len();
            let mut best: Option<Vec<usize>> = None;
            for s in 0..n {
                let rot: Vec<usize> = (0..n).map(|i| seq[(s + i) % n]).collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
            best.unwrap()
        }
        let fwd = least_rotation(&self.vertices);
        let mut rev = self.vertices.clone();
        rev.reverse();
        let bwd = least_rotation(&rev);
        fwd.min(bwd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingViolation {
    /// A rotation entry names a vertex outside the graph.
    DanglingNeighbor { vertex: usize, neighbor: usize },
    /// The same edge-end is listed twice around one vertex.
    DuplicateEdgeEnd { vertex: usize, neighbor: usize },
    SelfLoop { vertex: usize },
    /// `u` lists `v` but not vice versa.
    AsymmetricAdjacency { vertex: usize, neighbor: usize },
    /// A connected component fails V - E + F = 2.
    EulerFailure { component_root: usize, v: usize, e: usize, f: usize },
}

/// Outcome of [`RotationGraph::validate_embedding`].
#[derive(Clone, Debug, Default)]
pub struct EmbeddingReport {
    pub violations: Vec<EmbeddingViolation>,
    pub face_count: usize,
}

impl EmbeddingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl RotationGraph {
    pub fn new(rot: Vec<Vec<usize>>) -> Self {
        RotationGraph { rot, outer: None }
    }

    pub fn with_outer(rot: Vec<Vec<usize>>, outer: Dart) -> Self {
        RotationGraph { rot, outer: Some(outer) }
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer
    }

    pub fn set_outer(&mut self, dart: Option<Dart>) {
        self.outer = dart;
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rot[u].contains(&v)
    }

    /// Slot of `v` in the rotation around `u`, if adjacent.
    pub fn slot_of(&self, u: usize, v: usize) -> Option<usize> {
        self.rot[u].iter().position(|&w| w == v)
    }

    pub fn dart(&self, u: usize, v: usize) -> Option<Dart> {
        self.slot_of(u, v).map(|slot| Dart { from: u, slot })
    }

    pub fn dart_target(&self, d: Dart) -> usize {
        self.rot[d.from][d.slot]
    }

    /// Successor dart in the face walk: from `(u, v)` continue with `(v, w)`
    /// where `w` follows `u` clockwise around `v`.
    pub fn next_in_face(&self, d: Dart) -> Dart {
        let u = d.from;
        let v = self.dart_target(d);
        let pos = self.slot_of(v, u).expect("edge ends must be symmetric");
        let slot = (pos + 1) % self.rot[v].len();
        Dart { from: v, slot }
    }

    /// All face walks of the embedding. Isolated vertices contribute one
    /// empty walk each so that face counts agree with the sphere picture.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for v in 0..self.rot.len() {
            if self.rot[v].is_empty() {
                faces.push(Face { darts: Vec::new() });
                continue;
            }
            for slot in 0..self.rot[v].len() {
                let start = Dart { from: v, slot };
                if seen[self.dart_index(start)] {
                    continue;
                }
                let mut walk = Vec::new();
                let mut d = start;
                loop {
                    seen[self.dart_index(d)] = true;
                    walk.push(d);
                    d = self.next_in_face(d);
                    if d == start {
                        break;
                    }
                }
                faces.push(Face { darts: walk });
            }
        }
        faces
    }

    /// Index of the face (in `faces()` order) containing the designated
    /// outer dart.
    pub fn outer_face_index(&self, faces: &[Face]) -> Option<usize> {
        let outer = self.outer?;
        faces.iter().position(|f| f.darts.contains(&outer))
    }

    fn dart_count(&self) -> usize {
        self.rot.iter().map(|r| r.len()).sum()
    }

    fn dart_index(&self, d: Dart) -> usize {
        let mut base = 0;
        for v in 0..d.from {
            base += self.rot[v].len();
        }
        base + d.slot
    }

    pub fn validate_embedding(&self) -> EmbeddingReport {
        let mut report = EmbeddingReport::default();
        let n = self.rot.len();
        for v in 0..n {
            let mut seen_nb = std::collections::HashSet::new();
            for &w in &self.rot[v] {
                if w >= n {
                    report.violations.push(EmbeddingViolation::DanglingNeighbor { vertex: v, neighbor: w });
                    continue;
                }
                if w == v {
                    report.violations.push(EmbeddingViolation::SelfLoop { vertex: v });
                }
                if !seen_nb.insert(w) {
                    report.violations.push(EmbeddingViolation::DuplicateEdgeEnd { vertex: v, neighbor: w });
                }
                if w < n && !self.rot[w].contains(&v) {
                    report.violations.push(EmbeddingViolation::AsymmetricAdjacency { vertex: v, neighbor: w });
                }
            }
        }
        if !report.violations.is_empty() {
            return report;
        }
        // Per-component genus check.
        let faces = self.faces();
        report.face_count = faces.len();
        let comp = self.components();
        let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut vcnt = vec![0usize; ncomp];
        let mut ecnt2 = vec![0usize; ncomp];
        let mut fcnt = vec![0usize; ncomp];
        let mut root = vec![usize::MAX; ncomp];
        for v in 0..n {
            let c = comp[v];
            vcnt[c] += 1;
            ecnt2[c] += self.rot[v].len();
            root[c] = root[c].min(v);
        }
        let mut iso_seen = vec![false; ncomp];
        for f in &faces {
            if let Some(d) = f.darts.first() {
                fcnt[comp[d.from]] += 1;
            }
        }
        // Empty walks belong to isolated vertices, one each.
        for v in 0..n {
            if self.rot[v].is_empty() && !iso_seen[comp[v]] {
                fcnt[comp[v]] += 1;
                iso_seen[comp[v]] = true;
            }
        }
        for c in 0..ncomp {
            let v = vcnt[c];
            let e = ecnt2[c] / 2;
            let f = fcnt[c];
            if v + f != e + 2 {
                report.violations.push(EmbeddingViolation::EulerFailure { component_root: root[c], v, e, f });
            }
        }
        report
    }

    /// Component id per vertex, numbered by first appearance.
    pub fn components(&self) -> Vec<usize> {
        let n = self.rot.len();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut q = VecDeque::new();
            comp[s] = next;
            q.push_back(s);
            while let Some(v) = q.pop_front() {
                for &w in &self.rot[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        q.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.rot.is_empty() || self.components().iter().all(|&c| c == 0)
    }

    /// BFS hop distances from `v`; `usize::MAX` marks unreachable vertices.
    pub fn distances(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.rot.len()];
        dist[v] = 0;
        let mut q = VecDeque::new();
        q.push_back(v);
        while let Some(u) = q.pop_front() {
            for &w in &self.rot[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// Induced embedded subgraph on `verts` (rotation order preserved).
    /// Returns the subgraph and the original id of each new vertex.
    pub fn induced_subgraph(&self, verts: &[usize]) -> (RotationGraph, Vec<usize>) {
        let mut back = vec![usize::MAX; self.rot.len()];
        for (i, &v) in verts.iter().enumerate() {
            back[v] = i;
        }
        let rot = verts
            .iter()
            .map(|&v| self.rot[v].iter().filter(|&&w| back[w] != usize::MAX).map(|&w| back[w]).collect())
            .collect();
        (RotationGraph::new(rot), verts.to_vec())
    }

    /// Relabel vertices by `perm` (new id of vertex v is `perm[v]`).
    pub fn relabeled(&self, perm: &[usize]) -> RotationGraph {
        let n = self.rot.len();
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            rot[perm[v]] = self.rot[v].iter().map(|&w| perm[w]).collect();
        }
        let outer = self.outer.map(|d| {
            let target = self.dart_target(d);
            let from = perm[d.from];
            let slot = rot[from].iter().position(|&w| w == perm[target]).unwrap();
            Dart { from, slot }
        });
        RotationGraph { rot, outer }
    }

    /// Mirror image: every rotation reversed.
    pub fn reflected(&self) -> RotationGraph {
        let rot: Vec<Vec<usize>> = self
            .rot
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let outer = self.outer.map(|d| {
            let target = self.dart_target(d);
            let slot = rot[d.from].iter().position(|&w| w == target).unwrap();
            Dart { from: d.from, slot }
        });
        RotationGraph { rot, outer }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GraphOpError {
    #[error("embedding is invalid: {0:?}")]
    InvalidEmbedding(Vec<EmbeddingViolation>),
    #[error("graph is not a triangulation")]
    NotTriangulation,
    #[error("graph is not connected")]
    NotConnected,
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("face {0} does not exist")]
    NoSuchFace(usize),
}

/// True iff every face of the (sphere-interpreted) embedding is a triangle.
pub fn is_triangulation(g: &RotationGraph) -> Result<bool, GraphOpError> {
    let report = g.validate_embedding();
    if !report.is_valid() {
        return Err(GraphOpError::InvalidEmbedding(report.violations));
    }
    if !g.is_connected() {
        return Ok(false);
    }
    Ok(g.vertex_count() >= 3 && g.faces().iter().all(|f| f.len() == 3))
}

/// All circuits of length 3..=5 whose two open regions both hold at least
/// one vertex (length <= 4) or at least two (length 5).
pub fn short_circuits(g: &RotationGraph) -> Result<Vec<Circuit>, GraphOpError> {
    if !is_triangulation(g)? {
        return Err(GraphOpError::NotTriangulation);
    }
    let n = g.vertex_count();
    let mut found: Vec<(Vec<usize>, Circuit)> = Vec::new();
    // Bounded DFS for cycles through each start vertex.
    let mut path = Vec::new();
    for start in 0..n {
        path.clear();
        path.push(start);
        dfs_cycles(g, start, &mut path, 5, &mut |cycle: &[usize]| {
            let circuit = Circuit { vertices: cycle.to_vec() };
            let key = circuit.canonical();
            if found.iter().any(|(k, _)| *k == key) {
                return;
            }
            if let Some((inside, outside)) = region_vertex_counts(g, cycle) {
                let need = if cycle.len() == 5 { 2 } else { 1 };
                if inside >= need && outside >= need {
                    found.push((key, circuit));
                }
            }
        });
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, c)| c).collect())
}

fn dfs_cycles(g: &RotationGraph, start: usize, path: &mut Vec<usize>, max_len: usize, emit: &mut dyn FnMut(&[usize])) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 {
            // Report each cycle once per orientation/start; dedup happens upstream.
            emit(path);
        }
        // Only extend with vertices larger than start to cut duplicates early.
        if w > start && !path.contains(&w) && path.len() < max_len {
            path.push(w);
            dfs_cycles(g, start, path, max_len, emit);
            path.pop();
        }
    }
}

/// Vertex counts of the two open regions bounded by `cycle`, via face-side
/// flood fill. Returns None for non-separating cycles (cannot happen in a
/// valid triangulation).
fn region_vertex_counts(g: &RotationGraph, cycle: &[usize]) -> Option<(usize, usize)> {
    let faces = g.faces();
    let k = cycle.len();
    // Map each dart to its face.
    let mut dart_face = std::collections::HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for &d in &f.darts {
            dart_face.insert((d.from, g.dart_target(d)), fi);
        }
    }
    let on_cycle: std::collections::HashSet<usize> = cycle.iter().copied().collect();
    let mut cycle_edges = std::collections::HashSet::new();
    for i in 0..k {
        let a = cycle[i];
        let b = cycle[(i + 1) % k];
        cycle_edges.insert((a, b));
        cycle_edges.insert((b, a));
    }
    // Seed side 1 with the faces left of the forward darts.
    let mut side = vec![u8::MAX; faces.len()];
    let mut queue = VecDeque::new();
    for i in 0..k {
        let a = cycle[i];
        let b = cycle[(i + 1) % k];
        let f1 = *dart_face.get(&(a, b))?;
        if side[f1] == u8::MAX {
            side[f1] = 1;
            queue.push_back(f1);
        }
        let f2 = *dart_face.get(&(b, a))?;
        if side[f2] == u8::MAX {
            side[f2] = 2;
            queue.push_back(f2);
        }
    }
    // Flood without crossing cycle edges.
    let mut edge_faces: std::collections::HashMap<(usize, usize), Vec<usize>> = std::collections::HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for &d in &f.darts {
            let a = d.from;
            let b = g.dart_target(d);
            let key = if a < b { (a, b) } else { (b, a) };
            edge_faces.entry(key).or_default().push(fi);
        }
    }
    while let Some(fi) = queue.pop_front() {
        for &d in &faces[fi].darts {
            let a = d.from;
            let b = g.dart_target(d);
            if cycle_edges.contains(&(a, b)) {
                continue;
            }
            let key = if a < b { (a, b) } else { (b, a) };
            for &fj in &edge_faces[&key] {
                if side[fj] == u8::MAX {
                    side[fj] = side[fi];
                    queue.push_back(fj);
                } else if side[fj] != side[fi] {
                    return None; // not separating
                }
            }
        }
    }
    let mut v_side = vec![0u8; g.vertex_count()];
    for (fi, f) in faces.iter().enumerate() {
        for &d in &f.darts {
            let v = d.from;
            if !on_cycle.contains(&v) {
                v_side[v] = side[fi];
            }
        }
    }
    let inside = v_side.iter().filter(|&&s| s == 1).count();
    let outside = v_side.iter().filter(|&&s| s == 2).count();
    Some((inside, outside))
}

/// Minimum degree 5 and no short circuits.
pub fn is_internally_six_connected(g: &RotationGraph) -> Result<bool, GraphOpError> {
    if !is_triangulation(g)? {
        return Err(GraphOpError::NotTriangulation);
    }
    if (0..g.vertex_count()).any(|v| g.degree(v) < 5) {
        return Ok(false);
    }
    Ok(short_circuits(g)?.is_empty())
}

/// Second neighborhood of `v`: the induced subgraph on vertices at distance
/// <= 2, plus the flag saying whether distance-1 and distance-2 sets each
/// induce a circuit.
pub struct SecondNeighborhood {
    pub graph: RotationGraph,
    /// Original vertex id of each subgraph vertex.
    pub original_ids: Vec<usize>,
    pub dist1: Vec<usize>,
    pub dist2: Vec<usize>,
    pub well_behaved: bool,
}

pub fn second_neighborhood(g: &RotationGraph, v: usize) -> Result<SecondNeighborhood, GraphOpError> {
    if v >= g.vertex_count() {
        return Err(GraphOpError::NoSuchVertex(v));
    }
    if !g.is_connected() {
        return Err(GraphOpError::NotConnected);
    }
    let dist = g.distances(v);
    let verts: Vec<usize> = (0..g.vertex_count()).filter(|&u| dist[u] <= 2).collect();
    let (graph, original_ids) = g.induced_subgraph(&verts);
    let dist1: Vec<usize> = (0..g.vertex_count()).filter(|&u| dist[u] == 1).collect();
    let dist2: Vec<usize> = (0..g.vertex_count()).filter(|&u| dist[u] == 2).collect();
    let well_behaved = induces_circuit(g, &dist1) && induces_circuit(g, &dist2);
    Ok(SecondNeighborhood { graph, original_ids, dist1, dist2, well_behaved })
}

/// True iff the set induces a single circuit covering all its vertices.
pub fn induces_circuit(g: &RotationGraph, verts: &[usize]) -> bool {
    if verts.len() < 3 {
        return false;
    }
    let in_set: std::collections::HashSet<usize> = verts.iter().copied().collect();
    for &u in verts {
        let deg_in = g.neighbors(u).iter().filter(|w| in_set.contains(w)).count();
        if deg_in != 2 {
            return false;
        }
    }
    // 2-regular and connected means a single cycle.
    let (sub, _) = g.induced_subgraph(verts);
    sub.is_connected()
}

/// A circuit wrapped around a face: position i of the ring maps to walk
/// vertex `phi[i]`.
#[derive(Clone, Debug)]
pub struct FaceWrap {
    pub face: usize,
    pub ring_len: usize,
    pub phi: Vec<usize>,
}

/// Wrap a ring around face `face` (index into `g.faces()`).
pub fn wrap_ring(g: &RotationGraph, face: usize) -> Result<FaceWrap, GraphOpError> {
    let faces = g.faces();
    let f = faces.get(face).ok_or(GraphOpError::NoSuchFace(face))?;
    let phi: Vec<usize> = f.darts.iter().map(|d| d.from).collect();
    Ok(FaceWrap { face, ring_len: phi.len(), phi })
}

/// Canonical embedded graphs used by generators and tests.
pub mod shapes {
    use super::RotationGraph;

    /// Icosahedron: 0 apex, 1..=5 upper ring, 6..=10 lower ring, 11 bottom.
    pub fn icosahedron() -> RotationGraph {
        let up = |k: usize| 1 + (k - 1) % 5;
        let lo = |j: usize| 6 + (j - 1) % 5;
        let mut rot = vec![Vec::new(); 12];
        rot[0] = vec![5, 4, 3, 2, 1];
        for k in 1..=5 {
            rot[k] = vec![0, up(k + 1), lo(k), lo(k + 4), up(k + 4)];
        }
        for j in 1..=5 {
            rot[lo(j)] = vec![up(j), up(j + 1), lo(j + 1), 11, lo(j + 4)];
        }
        rot[11] = vec![6, 7, 8, 9, 10];
        RotationGraph::new(rot)
    }

    /// Octahedron: 0 top, 1..=4 equator, 5 bottom.
    pub fn octahedron() -> RotationGraph {
        let eq = |k: usize| 1 + (k - 1) % 4;
        let mut rot = vec![Vec::new(); 6];
        rot[0] = vec![4, 3, 2, 1];
        for k in 1..=4 {
            rot[k] = vec![0, eq(k + 1), 5, eq(k + 3)];
        }
        rot[5] = vec![1, 2, 3, 4];
        RotationGraph::new(rot)
    }

    /// Cube: top square 0..=3, bottom square 4..=7 (k above k+4).
    pub fn cube() -> RotationGraph {
        let tp = |k: usize| k % 4;
        let bt = |k: usize| 4 + k % 4;
        let mut rot = vec![Vec::new(); 8];
        for k in 0..4 {
            rot[k] = vec![tp(k + 1), bt(k), tp(k + 3)];
        }
        for k in 0..4 {
            rot[bt(k)] = vec![bt(k + 3), tp(k), bt(k + 1)];
        }
        RotationGraph::new(rot)
    }

    /// Triangulation of the sphere with a 5-circuit (vertices 0..=4)
    /// separating two interior vertices {5, 6} from two exterior {7, 8}.
    pub fn five_ring_two_two() -> RotationGraph {
        // inner: 5 adj {0,1,2,6}, 6 adj {2,3,4,0,5}
        // outer: 7 adj {0,1,2,8}, 8 adj {2,3,4,0,7}
        let mut rot = vec![Vec::new(); 9];
        rot[0] = vec![1, 5, 6, 4, 8, 7];
        rot[1] = vec![2, 5, 0, 7];
        rot[2] = vec![3, 6, 5, 1, 7, 8];
        rot[3] = vec![4, 6, 2, 8];
        rot[4] = vec![0, 6, 3, 8];
        rot[5] = vec![0, 1, 2, 6];
        rot[6] = vec![0, 5, 2, 3, 4];
        rot[7] = vec![0, 8, 2, 1];
        rot[8] = vec![0, 4, 3, 2, 7];
        RotationGraph::new(rot)
    }
}

#[cfg(test)]
mod tests {
    use super::shapes::*;
    use super::*;

    #[test]
    fn icosahedron_embedding_valid() {
        let g = icosahedron();
        let report = g.validate_embedding();
        assert!(report.is_valid(), "{:?}", report.violations);
        assert_eq!(report.face_count, 20);
        assert!(is_triangulation(&g).unwrap());
    }

    #[test]
    fn single_vertex_valid_one_face() {
        let g = RotationGraph::new(vec![vec![]]);
        let report = g.validate_embedding();
        assert!(report.is_valid());
        assert_eq!(report.face_count, 1);
    }

    #[test]
    fn duplicate_edge_end_detected() {
        let g = RotationGraph::new(vec![vec![1, 1], vec![0]]);
        let report = g.validate_embedding();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, EmbeddingViolation::DuplicateEdgeEnd { .. })));
    }

    #[test]
    fn face_lengths_sum_to_twice_edges() {
        for g in [icosahedron(), octahedron(), cube(), five_ring_two_two()] {
            let total: usize = g.faces().iter().map(|f| f.len()).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn cube_is_not_triangulation() {
        let g = cube();
        assert!(g.validate_embedding().is_valid());
        assert!(!is_triangulation(&g).unwrap());
    }

    #[test]
    fn octahedron_is_triangulation_but_not_i6c() {
        let g = octahedron();
        assert!(is_triangulation(&g).unwrap());
        assert!(!is_internally_six_connected(&g).unwrap());
        // The 4-circuit around a degree-4 vertex is short.
        let sc = short_circuits(&g).unwrap();
        assert!(sc.iter().any(|c| c.len() == 4));
    }

    #[test]
    fn icosahedron_has_no_short_circuits() {
        let g = icosahedron();
        assert!(short_circuits(&g).unwrap().is_empty());
        assert!(is_internally_six_connected(&g).unwrap());
    }

    #[test]
    fn five_circuit_separating_two_and_two_is_short() {
        let g = five_ring_two_two();
        let report = g.validate_embedding();
        assert!(report.is_valid(), "{:?}", report.violations);
        assert!(is_triangulation(&g).unwrap());
        let sc = short_circuits(&g).unwrap();
        let ring = Circuit { vertices: vec![0, 1, 2, 3, 4] }.canonical();
        assert!(sc.iter().any(|c| c.canonical() == ring));
    }

    #[test]
    fn short_circuits_invariant_under_relabeling() {
        let g = five_ring_two_two();
        let n = g.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v + 3) % n).collect();
        let h = g.relabeled(&perm);
        assert_eq!(short_circuits(&g).unwrap().len(), short_circuits(&h).unwrap().len());
    }

    #[test]
    fn second_neighborhood_icosahedron_well_behaved() {
        let g = icosahedron();
        for v in 0..g.vertex_count() {
            let nb = second_neighborhood(&g, v).unwrap();
            assert!(nb.well_behaved);
            assert_eq!(nb.dist1.len(), 5);
            assert_eq!(nb.dist2.len(), 5);
        }
    }

    #[test]
    fn second_neighborhood_octahedron_not_well_behaved() {
        let g = octahedron();
        let nb = second_neighborhood(&g, 0).unwrap();
        assert!(!nb.well_behaved);
        assert_eq!(nb.dist2.len(), 1);
    }

    #[test]
    fn wrap_ring_triangular_face() {
        let g = icosahedron();
        let wrap = wrap_ring(&g, 0).unwrap();
        assert_eq!(wrap.ring_len, 3);
        let mut phi = wrap.phi.clone();
        phi.dedup();
        assert_eq!(phi.len(), 3);
    }

    #[test]
    fn wrap_ring_counts_bridges_twice() {
        // Path on three vertices: one face, walk length 4 (two bridges).
        let g = RotationGraph::new(vec![vec![1], vec![0, 2], vec![1]]);
        assert!(g.validate_embedding().is_valid());
        let faces = g.faces();
        assert_eq!(faces.len(), 1);
        let wrap = wrap_ring(&g, 0).unwrap();
        assert_eq!(wrap.ring_len, 4);
    }

    #[test]
    fn wrap_ring_cut_vertex_makes_phi_non_injective() {
        // Two triangles sharing vertex 0 (bowtie).
        let rot = vec![vec![1, 2, 3, 4], vec![2, 0], vec![0, 1], vec![4, 0], vec![0, 3]];
        let g = RotationGraph::new(rot);
        let report = g.validate_embedding();
        assert!(report.is_valid(), "{:?}", report.violations);
        let faces = g.faces();
        let outer = faces.iter().position(|f| f.len() > 3).unwrap();
        let wrap = wrap_ring(&g, outer).unwrap();
        assert_eq!(wrap.ring_len, 6);
        let occurrences = wrap.phi.iter().filter(|&&v| v == 0).count();
        assert_eq!(occurrences, 2);
    }

    #[test]
    fn euler_failure_detected_for_torus_rotation() {
        // K5-ish rotation that cannot be spherical: complete graph K5.
        let rot: Vec<Vec<usize>> = (0..5)
            .map(|v| (0..5).filter(|&w| w != v).collect())
            .collect();
        let g = RotationGraph::new(rot);
        let report = g.validate_embedding();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, EmbeddingViolation::EulerFailure { .. })));
    }
}
