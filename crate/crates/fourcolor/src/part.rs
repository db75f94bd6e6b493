//! Parts: interval-bounded partial descriptions of cartwheels, refined by
//! presentation scripts, superposed when placing rules, and matched against
//! cartwheels.
//!
//! Vertex numbering follows the script format: spokes 1..d clockwise, hats
//! d+1..2d (hat k adjacent to spokes k and k+1), and the l-th fan vertex
//! over spoke k is k + (l+1)d. Internally everything is 0-based.

use crate::graph::RotationGraph;

/// Closed degree interval; `hi == None` means unbounded above.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: u32,
    pub hi: Option<u32>,
}

impl Interval {
    pub const FREE: Interval = Interval { lo: 5, hi: None };

    pub fn exact(v: u32) -> Interval {
        Interval { lo: v, hi: Some(v) }
    }

    pub fn pinned(&self) -> Option<u32> {
        match self.hi {
            Some(h) if h == self.lo => Some(self.lo),
            _ => None,
        }
    }

    pub fn contains(&self, x: u32) -> bool {
        x >= self.lo && self.hi.is_none_or(|h| x <= h)
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = match (self.hi, other.hi) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a),
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        if hi.is_some_and(|h| h < lo) {
            None
        } else {
            Some(Interval { lo, hi })
        }
    }

    /// Is every degree admitted by `self` admitted by `other`?
    pub fn subset_of(&self, other: &Interval) -> bool {
        self.lo >= other.lo
            && match (self.hi, other.hi) {
                (_, None) => true,
                (None, Some(_)) => false,
                (Some(a), Some(b)) => a <= b,
            }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.hi {
            None => write!(f, "{}+", self.lo),
            Some(h) if h == self.lo => write!(f, "{}", self.lo),
            Some(h) => write!(f, "{}..{}", self.lo, h),
        }
    }
}

/// Structural position in a part or cartwheel (0-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartVertex {
    Hub,
    Spoke(usize),
    /// Hat k sits between spokes k and k+1.
    Hat(usize),
    /// Fan l over spoke k; fan 0 neighbors hat k-1.
    Fan(usize, usize),
}

impl PartVertex {
    /// Where this position lands when the part rotates by r.
    pub fn rotated(self, r: usize, d: usize) -> PartVertex {
        match self {
            PartVertex::Hub => PartVertex::Hub,
            PartVertex::Spoke(k) => PartVertex::Spoke((k + r) % d),
            PartVertex::Hat(k) => PartVertex::Hat((k + r) % d),
            PartVertex::Fan(k, l) => PartVertex::Fan((k + r) % d, l),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    hub_degree: usize,
    spokes: Vec<Interval>,
    hats: Vec<Interval>,
    /// fans[k] is nonempty exactly when spoke k is pinned (length pinned-5).
    fans: Vec<Vec<Interval>>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PartError {
    #[error("vertex number {0} is outside the numbering scheme of this part")]
    NoSuchVertex(usize),
    #[error("vertex {0} is not refinable (bounds already equal)")]
    NotRefinable(usize),
    #[error("refinement would empty the interval of vertex {0}")]
    EmptyInterval(usize),
    #[error("hub degrees differ: {0} vs {1}")]
    HubMismatch(usize, usize),
}

impl Part {
    /// The trivial part: no fan vertices, every spoke and hat 5..infinity.
    pub fn trivial(hub_degree: usize) -> Part {
        Part {
            hub_degree,
            spokes: vec![Interval::FREE; hub_degree],
            hats: vec![Interval::FREE; hub_degree],
            fans: vec![Vec::new(); hub_degree],
        }
    }

    pub fn hub_degree(&self) -> usize {
        self.hub_degree
    }

    pub fn spoke(&self, k: usize) -> Interval {
        self.spokes[k]
    }

    pub fn hat(&self, k: usize) -> Interval {
        self.hats[k]
    }

    pub fn fan(&self, k: usize, l: usize) -> Option<Interval> {
        self.fans[k].get(l).copied()
    }

    pub fn fan_count(&self, k: usize) -> usize {
        self.fans[k].len()
    }

    pub fn spoke_pinned(&self, k: usize) -> Option<u32> {
        self.spokes[k].pinned()
    }

    /// Interval of a structural vertex, if it exists in this part.
    pub fn interval(&self, v: PartVertex) -> Option<Interval> {
        match v {
            PartVertex::Hub => Some(Interval::exact(self.hub_degree as u32)),
            PartVertex::Spoke(k) => self.spokes.get(k).copied(),
            PartVertex::Hat(k) => self.hats.get(k).copied(),
            PartVertex::Fan(k, l) => self.fans.get(k).and_then(|f| f.get(l)).copied(),
        }
    }

    fn set_interval(&mut self, v: PartVertex, iv: Interval) {
        match v {
            PartVertex::Hub => {}
            PartVertex::Spoke(k) => {
                self.spokes[k] = iv;
                self.sync_fans(k);
            }
            PartVertex::Hat(k) => self.hats[k] = iv,
            PartVertex::Fan(k, l) => self.fans[k][l] = iv,
        }
    }

    /// Create or keep fan slots after a spoke pin; never destroys bounds.
    fn sync_fans(&mut self, k: usize) {
        match self.spokes[k].pinned() {
            Some(g) => {
                let want = (g as usize).saturating_sub(5);
                while self.fans[k].len() < want {
                    self.fans[k].push(Interval::FREE);
                }
                self.fans[k].truncate(want);
            }
            None => self.fans[k].clear(),
        }
    }

    /// External script number of a structural vertex.
    pub fn vertex_number(&self, v: PartVertex) -> Option<usize> {
        let d = self.hub_degree;
        match v {
            PartVertex::Hub => None,
            PartVertex::Spoke(k) => Some(k + 1),
            PartVertex::Hat(k) => Some(d + k + 1),
            PartVertex::Fan(k, l) => Some((k + 1) + (l + 2) * d),
        }
    }

    /// Structural vertex for an external script number.
    pub fn numbered_vertex(&self, m: usize) -> Option<PartVertex> {
        let d = self.hub_degree;
        if m == 0 {
            return None;
        }
        if m <= d {
            return Some(PartVertex::Spoke(m - 1));
        }
        if m <= 2 * d {
            return Some(PartVertex::Hat(m - d - 1));
        }
        let k = (m - 1) % d;
        let l = (m - 1 - k) / d;
        if l < 2 {
            return None;
        }
        let fan = PartVertex::Fan(k, l - 2);
        self.interval(fan).map(|_| fan)
    }

    /// Intersect the interval at a structural vertex in place; a spoke that
    /// becomes pinned gains its fan slots. None when the vertex is absent
    /// or the intersection empties.
    pub fn clamp(&mut self, v: PartVertex, iv: Interval) -> Option<()> {
        let cur = self.interval(v)?;
        let merged = cur.intersect(&iv)?;
        self.set_interval(v, merged);
        Some(())
    }

    /// Refine per a condition line: positive n raises the lower bound of
    /// vertex m to n, negative n lowers the upper bound to -n. Returns the
    /// ordered part and its complementary part; pinning a spoke creates its
    /// fan vertices with free bounds.
    pub fn refine(&self, m: usize, n: i32) -> Result<(Part, Part), PartError> {
        let v = self.numbered_vertex(m).ok_or(PartError::NoSuchVertex(m))?;
        let iv = self.interval(v).unwrap();
        if iv.pinned().is_some() {
            return Err(PartError::NotRefinable(m));
        }
        let (primary, complement) = if n > 0 {
            let b = n as u32;
            if b <= iv.lo || !iv.contains(b) {
                return Err(PartError::EmptyInterval(m));
            }
            (Interval { lo: b, hi: iv.hi }, Interval { lo: iv.lo, hi: Some(b - 1) })
        } else if n < 0 {
            let b = (-n) as u32;
            if !iv.contains(b) || iv.hi == Some(b) {
                return Err(PartError::EmptyInterval(m));
            }
            (Interval { lo: iv.lo, hi: Some(b) }, Interval { lo: b + 1, hi: iv.hi })
        } else {
            return Err(PartError::EmptyInterval(m));
        };
        let mut p1 = self.clone();
        p1.set_interval(v, primary);
        let mut p2 = self.clone();
        p2.set_interval(v, complement);
        Ok((p1, p2))
    }

    /// Superpose two parts: vertexwise interval intersection over the union
    /// shape. None means incompatible.
    pub fn and(&self, other: &Part) -> Result<Option<Part>, PartError> {
        if self.hub_degree != other.hub_degree {
            return Err(PartError::HubMismatch(self.hub_degree, other.hub_degree));
        }
        let d = self.hub_degree;
        let mut out = Part::trivial(d);
        for k in 0..d {
            match self.spokes[k].intersect(&other.spokes[k]) {
                Some(iv) => {
                    out.spokes[k] = iv;
                }
                None => return Ok(None),
            }
            match self.hats[k].intersect(&other.hats[k]) {
                Some(iv) => out.hats[k] = iv,
                None => return Ok(None),
            }
        }
        for k in 0..d {
            out.sync_fans(k);
            let want = out.fans[k].len();
            for l in 0..want {
                let a = self.fans[k].get(l).copied().unwrap_or(Interval::FREE);
                let b = other.fans[k].get(l).copied().unwrap_or(Interval::FREE);
                match a.intersect(&b) {
                    Some(iv) => out.fans[k][l] = iv,
                    None => return Ok(None),
                }
            }
            // A part carrying fan bounds can only combine with one agreeing
            // on the spoke pin; mismatched pins already emptied the spoke.
        }
        Ok(Some(out))
    }

    /// Rotate: old spoke k becomes spoke (k + r) mod d.
    pub fn rotated(&self, r: usize) -> Part {
        let d = self.hub_degree;
        let mut out = Part::trivial(d);
        for k in 0..d {
            out.spokes[(k + r) % d] = self.spokes[k];
            out.hats[(k + r) % d] = self.hats[k];
            out.fans[(k + r) % d] = self.fans[k].clone();
        }
        out
    }

    /// Mirror image fixing spoke 0: spoke k maps to spoke (d - k) mod d;
    /// fan orders over each spoke reverse.
    pub fn reflected(&self) -> Part {
        let d = self.hub_degree;
        let mut out = Part::trivial(d);
        for k in 0..d {
            out.spokes[(d - k) % d] = self.spokes[k];
            out.hats[d - 1 - k] = self.hats[k];
            let mut fans = self.fans[k].clone();
            fans.reverse();
            out.fans[(d - k) % d] = fans;
        }
        out
    }

    /// All structural vertices present in this part.
    pub fn vertices(&self) -> Vec<PartVertex> {
        let d = self.hub_degree;
        let mut out = vec![PartVertex::Hub];
        out.extend((0..d).map(PartVertex::Spoke));
        out.extend((0..d).map(PartVertex::Hat));
        for k in 0..d {
            for l in 0..self.fans[k].len() {
                out.push(PartVertex::Fan(k, l));
            }
        }
        out
    }

    /// The part graph as an embedded graph, with the descriptor of every
    /// graph vertex. Hub is graph vertex 0, spokes 1..=d, hats d+1..=2d,
    /// fans follow grouped by spoke.
    pub fn part_graph(&self) -> (RotationGraph, Vec<PartVertex>) {
        let d = self.hub_degree;
        let mut desc = vec![PartVertex::Hub];
        desc.extend((0..d).map(PartVertex::Spoke));
        desc.extend((0..d).map(PartVertex::Hat));
        let mut fan_base = vec![0usize; d];
        for k in 0..d {
            fan_base[k] = desc.len();
            for l in 0..self.fans[k].len() {
                desc.push(PartVertex::Fan(k, l));
            }
        }
        let spoke = |k: usize| 1 + (k % d);
        let hat = |k: usize| 1 + d + (k % d);
        let fan = |k: usize, l: usize| fan_base[k % d] + l;
        let m = |k: usize| self.fans[k % d].len();
        let pinned = |k: usize| self.spokes[k % d].pinned().is_some();

        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); desc.len()];
        rot[0] = (0..d).map(spoke).collect();
        for k in 0..d {
            let mut r = vec![0, spoke(k + d - 1), hat(k + d - 1)];
            for l in 0..m(k) {
                r.push(fan(k, l));
            }
            r.push(hat(k));
            r.push(spoke(k + 1));
            rot[spoke(k)] = r;
        }
        for k in 0..d {
            let mut r = vec![spoke(k + 1), spoke(k)];
            // side toward spoke k
            if pinned(k) {
                if m(k) > 0 {
                    r.push(fan(k, m(k) - 1));
                } else {
                    r.push(hat(k + d - 1));
                }
            }
            // side toward spoke k+1
            if pinned(k + 1) {
                if m(k + 1) > 0 {
                    r.push(fan(k + 1, 0));
                } else {
                    r.push(hat(k + 1));
                }
            }
            rot[hat(k)] = r;
        }
        for k in 0..d {
            for l in 0..m(k) {
                let prev = if l == 0 { hat(k + d - 1) } else { fan(k, l - 1) };
                let next = if l == m(k) - 1 { hat(k) } else { fan(k, l + 1) };
                rot[fan(k, l)] = vec![spoke(k), prev, next];
            }
        }
        (RotationGraph::new(rot), desc)
    }
}

impl std::fmt::Display for Part {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "d{} spokes[", self.hub_degree)?;
        for (i, s) in self.spokes.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "] hats[")?;
        for (i, h) in self.hats.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, "]")?;
        for k in 0..self.hub_degree {
            if !self.fans[k].is_empty() {
                write!(f, " fans{}[", k + 1)?;
                for (i, fv) in self.fans[k].iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{fv}")?;
                }
                write!(f, "]")?;
            }
        }
        Ok(())
    }
}

/// A concrete cartwheel: the fully determined second-neighborhood shape
/// with a promised ambient degree per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cartwheel {
    pub spoke_degrees: Vec<u32>,
    pub hat_labels: Vec<u32>,
    /// fan_labels[k] has spoke_degrees[k] - 5 entries.
    pub fan_labels: Vec<Vec<u32>>,
}

impl Cartwheel {
    pub fn new(spoke_degrees: Vec<u32>, hat_labels: Vec<u32>, fan_labels: Vec<Vec<u32>>) -> Cartwheel {
        assert_eq!(spoke_degrees.len(), hat_labels.len());
        assert_eq!(spoke_degrees.len(), fan_labels.len());
        for (k, f) in fan_labels.iter().enumerate() {
            assert_eq!(f.len(), spoke_degrees[k] as usize - 5, "fan count at spoke {k}");
        }
        Cartwheel { spoke_degrees, hat_labels, fan_labels }
    }

    /// All labels 5 except the given spoke degrees.
    pub fn with_uniform_labels(spoke_degrees: Vec<u32>, label: u32) -> Cartwheel {
        let d = spoke_degrees.len();
        let fans = spoke_degrees.iter().map(|&g| vec![label; g as usize - 5]).collect();
        Cartwheel::new(spoke_degrees, vec![label; d], fans)
    }

    pub fn hub_degree(&self) -> usize {
        self.spoke_degrees.len()
    }

    pub fn label(&self, v: PartVertex) -> Option<u32> {
        match v {
            PartVertex::Hub => Some(self.hub_degree() as u32),
            PartVertex::Spoke(k) => self.spoke_degrees.get(k).copied(),
            PartVertex::Hat(k) => self.hat_labels.get(k).copied(),
            PartVertex::Fan(k, l) => self.fan_labels.get(k).and_then(|f| f.get(l)).copied(),
        }
    }

    /// The fully pinned part with the same shape (labels become exact
    /// bounds), used to materialize the graph.
    pub fn as_part(&self) -> Part {
        let d = self.hub_degree();
        let mut p = Part::trivial(d);
        for k in 0..d {
            p.spokes[k] = Interval::exact(self.spoke_degrees[k]);
            p.sync_fans(k);
            p.hats[k] = Interval::exact(self.hat_labels[k]);
            for (l, &fl) in self.fan_labels[k].iter().enumerate() {
                p.fans[k][l] = Interval::exact(fl);
            }
        }
        p
    }

    /// Embedded graph of the cartwheel plus per-graph-vertex descriptor and
    /// gamma label.
    pub fn graph(&self) -> (RotationGraph, Vec<PartVertex>, Vec<u32>) {
        let (g, desc) = self.as_part().part_graph();
        let labels = desc.iter().map(|&v| self.label(v).unwrap()).collect();
        (g, desc, labels)
    }
}

/// A transform of the spoke circle: rotation then optional reflection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symmetry {
    pub rotation: usize,
    pub mirror: bool,
}

impl Symmetry {
    pub fn all(d: usize) -> impl Iterator<Item = Symmetry> {
        (0..d).flat_map(|rotation| {
            [Symmetry { rotation, mirror: false }, Symmetry { rotation, mirror: true }]
        })
    }

    pub fn apply_to_part(&self, p: &Part) -> Part {
        let q = if self.mirror { p.reflected() } else { p.clone() };
        q.rotated(self.rotation)
    }
}

/// Does the cartwheel fit the part: some rotation/reflection places the
/// part so that every bound holds and every demanded fan vertex exists.
pub fn part_fits(w: &Cartwheel, p: &Part) -> bool {
    fitting_symmetry(w, p).is_some()
}

/// The first transform under which `w` fits `p`, if any.
pub fn fitting_symmetry(w: &Cartwheel, p: &Part) -> Option<Symmetry> {
    if w.hub_degree() != p.hub_degree() {
        return None;
    }
    Symmetry::all(p.hub_degree()).find(|&sym| fits_via(w, p, sym))
}

fn fits_via(w: &Cartwheel, p: &Part, sym: Symmetry) -> bool {
    let moved = sym.apply_to_part(p);
    for v in moved.vertices() {
        let iv = moved.interval(v).unwrap();
        match w.label(v) {
            Some(l) if iv.contains(l) => {}
            _ => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_part_graph_is_valid() {
        for d in 5..=11 {
            let p = Part::trivial(d);
            let (g, desc) = p.part_graph();
            let report = g.validate_embedding();
            assert!(report.is_valid(), "d={d}: {:?}", report.violations);
            assert_eq!(desc.len(), 1 + 2 * d);
            assert_eq!(g.degree(0), d);
        }
    }

    #[test]
    fn pinned_cartwheel_graph_is_valid_and_triangulated_inside() {
        let w = Cartwheel::with_uniform_labels(vec![5, 6, 7, 5, 8], 9);
        let (g, desc, labels) = w.graph();
        let report = g.validate_embedding();
        assert!(report.is_valid(), "{:?}", report.violations);
        // One face is the outer C2 walk; all others triangles.
        let faces = g.faces();
        let non_tri = faces.iter().filter(|f| f.len() != 3).count();
        assert_eq!(non_tri, 1);
        // Hub degree and labels line up.
        assert_eq!(labels[0], 5);
        assert_eq!(desc[0], PartVertex::Hub);
        // Spokes are internal with full degree.
        for (i, &v) in desc.iter().enumerate() {
            if let PartVertex::Spoke(k) = v {
                assert_eq!(g.degree(i) as u32, w.spoke_degrees[k]);
            }
        }
    }

    #[test]
    fn numbering_scheme_round_trips() {
        let mut p = Part::trivial(5);
        let (p1, _) = p.refine(1, 7).unwrap(); // raise spoke 1 to >= 7
        p = p1;
        let (p2, _) = p.refine(1, -7).unwrap(); // cap at 7: pins, creates fans
        p = p2;
        assert_eq!(p.spoke_pinned(0), Some(7));
        assert_eq!(p.fan_count(0), 2);
        // fan 1 over spoke 1 is 1 + 2*5 = 11; fan 2 is 1 + 3*5 = 16
        assert_eq!(p.numbered_vertex(11), Some(PartVertex::Fan(0, 0)));
        assert_eq!(p.numbered_vertex(16), Some(PartVertex::Fan(0, 1)));
        assert_eq!(p.vertex_number(PartVertex::Fan(0, 1)), Some(16));
        assert_eq!(p.numbered_vertex(6), Some(PartVertex::Hat(0)));
        // fan over an unpinned spoke does not exist
        assert_eq!(p.numbered_vertex(12), None);
    }

    #[test]
    fn refine_examples_from_trivial_degree_five() {
        let p = Part::trivial(5);
        let (p1, p2) = p.refine(1, 6).unwrap();
        assert_eq!(p1.spoke(0), Interval { lo: 6, hi: None });
        assert_eq!(p2.spoke(0), Interval::exact(5));
        assert_eq!(p2.fan_count(0), 0); // degree 5 spoke has no fans
        let (q1, q2) = p.refine(1, -6).unwrap();
        assert_eq!(q1.spoke(0), Interval { lo: 5, hi: Some(6) });
        assert_eq!(q2.spoke(0), Interval { lo: 7, hi: None });
    }

    #[test]
    fn refine_errors() {
        let p = Part::trivial(5);
        assert_eq!(p.refine(99, 6).unwrap_err(), PartError::NoSuchVertex(99));
        let (pinned, _) = p.refine(1, 6).unwrap().0.refine(1, -6).unwrap();
        assert_eq!(pinned.spoke_pinned(0), Some(6));
        assert_eq!(pinned.refine(1, 7).unwrap_err(), PartError::NotRefinable(1));
        assert_eq!(p.refine(1, 5).unwrap_err(), PartError::EmptyInterval(1));
    }

    #[test]
    fn and_is_idempotent_and_identity_on_trivial() {
        let p = Part::trivial(6).refine(2, 7).unwrap().0;
        assert_eq!(p.and(&p).unwrap(), Some(p.clone()));
        assert_eq!(p.and(&Part::trivial(6)).unwrap(), Some(p.clone()));
        // disjoint intervals are incompatible
        let q = Part::trivial(6).refine(2, -6).unwrap().0; // spoke 2 in 5..6
        let r = Part::trivial(6).refine(2, 7).unwrap().0; // spoke 2 >= 7
        assert_eq!(q.and(&r).unwrap(), None);
    }

    #[test]
    fn and_newly_pinned_spoke_creates_fans() {
        let a = Part::trivial(5).refine(1, 6).unwrap().0; // spoke 1 >= 6
        let b = Part::trivial(5).refine(1, -6).unwrap().0; // spoke 1 <= 6
        let c = a.and(&b).unwrap().unwrap();
        assert_eq!(c.spoke_pinned(0), Some(6));
        assert_eq!(c.fan_count(0), 1);
        assert_eq!(c.fan(0, 0), Some(Interval::FREE));
    }

    #[test]
    fn transforms_compose_and_invert() {
        let p = Part::trivial(7).refine(2, 6).unwrap().0.refine(10, 8).unwrap().0;
        assert_eq!(p.rotated(3).rotated(4), p);
        assert_eq!(p.reflected().reflected(), p);
        let (g1, _) = p.part_graph();
        let (g2, _) = p.rotated(2).part_graph();
        assert_eq!(g1.vertex_count(), g2.vertex_count());
    }

    #[test]
    fn every_cartwheel_fits_the_trivial_part() {
        for degs in [vec![5, 5, 5, 5, 5], vec![6, 7, 5, 9, 8], vec![12, 12, 12, 12, 12]] {
            let w = Cartwheel::with_uniform_labels(degs, 6);
            assert!(part_fits(&w, &Part::trivial(5)));
        }
    }

    #[test]
    fn fitting_respects_bounds_and_rotations() {
        let all5 = Cartwheel::with_uniform_labels(vec![5; 5], 5);
        let demanding = Part::trivial(5).refine(1, 6).unwrap().0;
        assert!(!part_fits(&all5, &demanding));
        // One big spoke somewhere: fits via rotation.
        let w = Cartwheel::with_uniform_labels(vec![5, 5, 6, 5, 5], 5);
        assert!(part_fits(&w, &demanding));
        // Monotone: relaxing the bound preserves fit.
        let relaxed = Part::trivial(5);
        assert!(part_fits(&w, &relaxed));
    }

    #[test]
    fn refine_covers_every_fitting_cartwheel() {
        // Exhaustive at hub degree 5 over spoke degrees 5..=12 (labels of
        // hats/fans fixed: the refined vertex is a spoke).
        let base = Part::trivial(5).refine(2, 6).unwrap().0;
        let (p1, p2) = base.refine(3, 8).unwrap();
        let mut degs = vec![5u32; 5];
        let mut count = 0usize;
        loop {
            let w = Cartwheel::with_uniform_labels(degs.clone(), 5);
            if part_fits(&w, &base) {
                count += 1;
                assert!(
                    part_fits(&w, &p1) || part_fits(&w, &p2),
                    "cartwheel {degs:?} fits neither branch"
                );
            }
            // odometer over 5..=12
            let mut i = 0;
            loop {
                if i == 5 {
                    break;
                }
                degs[i] += 1;
                if degs[i] <= 12 {
                    break;
                }
                degs[i] = 5;
                i += 1;
            }
            if i == 5 {
                break;
            }
        }
        assert!(count > 0);
    }
}
