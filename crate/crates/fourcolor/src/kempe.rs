//! Kempe-chain consistency: signed path arrangements, the fitting relation,
//! consistent coloring sets and the maximal-consistent-subset fixed point
//! that decides D-reducibility.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use crate::coloring::{unrank, ColoringSet, RingColoring};
use crate::graph::RotationGraph;

/// Partition of {r, g, b, y} into two unordered pairs. Exactly three exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColorPartition {
    /// {{r,g},{b,y}}
    RgBy,
    /// {{r,b},{g,y}}
    RbGy,
    /// {{r,y},{g,b}}
    RyGb,
}

pub const ALL_PARTITIONS: [ColorPartition; 3] =
    [ColorPartition::RgBy, ColorPartition::RbGy, ColorPartition::RyGb];

impl ColorPartition {
    /// Which pair (0 or 1) a color belongs to.
    pub fn side(self, color: u8) -> usize {
        let mate0 = match self {
            ColorPartition::RgBy => 1, // r with g
            ColorPartition::RbGy => 2, // r with b
            ColorPartition::RyGb => 3, // r with y
        };
        if color == 0 || color as usize == mate0 {
            0
        } else {
            1
        }
    }

    /// The two colors of pair `side`.
    pub fn pair(self, side: usize) -> [u8; 2] {
        let mate0 = match self {
            ColorPartition::RgBy => 1,
            ColorPartition::RbGy => 2,
            ColorPartition::RyGb => 3,
        };
        if side == 0 {
            [0, mate0 as u8]
        } else {
            let mut others = (1..4u8).filter(|&c| c != mate0 as u8);
            [others.next().unwrap(), others.next().unwrap()]
        }
    }
}

/// Maximal cyclic run of ring positions colored within one pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Run {
    pub start: usize,
    pub len: usize,
    /// Color at `start`, i.e. the first color met clockwise.
    pub first_color: u8,
}

impl Run {
    pub fn positions(&self, ring_len: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.start;
        (0..self.len).map(move |i| (start + i) % ring_len)
    }
}

/// Decompose a coloring into its maximal same-pair runs, in cyclic order of
/// start position. A coloring entirely within one pair yields a single run
/// starting at position 0.
pub fn theta_components(c: &RingColoring, theta: ColorPartition) -> Vec<Run> {
    let r = c.len();
    let side: Vec<usize> = (0..r).map(|i| theta.side(c.color(i))).collect();
    if side.iter().all(|&s| s == side[0]) {
        return vec![Run { start: 0, len: r, first_color: c.color(0) }];
    }
    let mut runs = Vec::new();
    let first_boundary = (0..r).find(|&i| side[i] != side[(i + r - 1) % r]).unwrap();
    let mut pos = first_boundary;
    loop {
        let mut len = 1;
        while side[(pos + len) % r] == side[pos] {
            len += 1;
        }
        runs.push(Run { start: pos, len, first_color: c.color(pos) });
        pos = (pos + len) % r;
        if pos == first_boundary {
            break;
        }
    }
    runs.sort_by_key(|run| run.start);
    runs
}

/// Noncrossing grouping of ring runs with a sign per run. The groups are the
/// V_i of the arrangement; the runs of a group are its components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPathArrangement {
    pub ring_len: usize,
    /// Components in cyclic order of start position.
    pub runs: Vec<Run>,
    /// Group id per run.
    pub group_of: Vec<usize>,
    /// Sign per run.
    pub sign_of: Vec<u8>,
}

impl SignedPathArrangement {
    pub fn group_count(&self) -> usize {
        self.group_of.iter().copied().max().map_or(0, |m| m + 1)
    }

    /// Definitional validity: groups are mutually noncrossing position sets
    /// and each group's induced components are exactly its runs.
    pub fn is_valid(&self) -> bool {
        let k = self.runs.len();
        if k == 0 || self.group_of.len() != k || self.sign_of.len() != k {
            return false;
        }
        if k == 1 {
            return true;
        }
        // Adjacent runs in one group would merge into a single component.
        for j in 0..k {
            if self.group_of[j] == self.group_of[(j + 1) % k] {
                return false;
            }
        }
        // Pairwise noncrossing on run indices around the cycle.
        let g = &self.group_of;
        for a in 0..k {
            for b in (a + 1)..k {
                if g[a] != g[b] {
                    continue;
                }
                for x in (a + 1)..b {
                    for y in (b + 1)..(a + k) {
                        let y = y % k;
                        if g[x] == g[y] && g[x] != g[a] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// All arrangements that `c` theta-fits, one per valid noncrossing grouping
/// (sign maps are canonical: they are forced by the first colors up to
/// flips that do not change the fitting set).
pub fn fitting_arrangements(c: &RingColoring, theta: ColorPartition) -> Vec<SignedPathArrangement> {
    let runs = theta_components(c, theta);
    candidate_groupings(&runs)
        .into_iter()
        .filter_map(|group_of| arrangement_for(c.len(), &runs, group_of))
        .collect()
}

/// As `fitting_arrangements`, but deduplicated by fitting set (the public
/// contract); arrangements fitting identical coloring sets are one.
pub fn fitting_arrangements_dedup(
    c: &RingColoring,
    theta: ColorPartition,
) -> Vec<(SignedPathArrangement, Arc<ColoringSet>)> {
    let mut out: Vec<(SignedPathArrangement, Arc<ColoringSet>)> = Vec::new();
    for p in fitting_arrangements(c, theta) {
        let set = colorings_fitting(&p);
        if !out.iter().any(|(_, s)| **s == *set) {
            out.push((p, set));
        }
    }
    out
}

/// Noncrossing partitions of the run cycle with no two adjacent runs in one
/// group (linear noncrossing equals cyclic noncrossing).
fn candidate_groupings(runs: &[Run]) -> Vec<Vec<usize>> {
    let k = runs.len();
    if k == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    // blocks under construction; open[i] indexes blocks that may still grow
    let mut assignment = vec![usize::MAX; k];
    fn rec(
        i: usize,
        k: usize,
        open: &mut Vec<usize>,
        nblocks: &mut usize,
        assignment: &mut Vec<usize>,
        last_of: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == k {
            // Reject cyclically adjacent runs in the same group.
            if k >= 2 && assignment[0] == assignment[k - 1] {
                return;
            }
            out.push(assignment.clone());
            return;
        }
        // Join an open block (closing all blocks opened after it).
        for j in (0..open.len()).rev() {
            let b = open[j];
            if last_of[b] + 1 == i && k > 2 {
                // adjacent runs in one block can never induce separate
                // components; skip early (final cyclic check still applies)
                continue;
            }
            let saved: Vec<usize> = open[j + 1..].to_vec();
            let saved_last = last_of[b];
            open.truncate(j + 1);
            assignment[i] = b;
            last_of[b] = i;
            rec(i + 1, k, open, nblocks, assignment, last_of, out);
            last_of[b] = saved_last;
            open.extend(saved);
        }
        // Open a new block.
        let b = *nblocks;
        *nblocks += 1;
        last_of.push(i);
        open.push(b);
        assignment[i] = b;
        rec(i + 1, k, open, nblocks, assignment, last_of, out);
        open.pop();
        last_of.pop();
        *nblocks -= 1;
        assignment[i] = usize::MAX;
    }
    let mut open = Vec::new();
    let mut nblocks = 0;
    let mut last_of = Vec::new();
    rec(0, k, &mut open, &mut nblocks, &mut assignment, &mut last_of, &mut out);
    out
}

/// Build the arrangement for a grouping, with signs forced by the first
/// colors of the runs. Groups whose runs show more than two first colors
/// admit no sign map and are rejected.
fn arrangement_for(ring_len: usize, runs: &[Run], group_of: Vec<usize>) -> Option<SignedPathArrangement> {
    let k = runs.len();
    let ngroups = group_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut sign_of = vec![0u8; k];
    for g in 0..ngroups {
        let members: Vec<usize> = (0..k).filter(|&j| group_of[j] == g).collect();
        let lead_color = runs[members[0]].first_color;
        let mut second: Option<u8> = None;
        for &j in &members {
            let fc = runs[j].first_color;
            if fc == lead_color {
                sign_of[j] = 0;
            } else {
                match second {
                    None => {
                        second = Some(fc);
                        sign_of[j] = 1;
                    }
                    Some(s) if s == fc => sign_of[j] = 1,
                    Some(_) => return None, // three distinct first colors
                }
            }
        }
    }
    Some(SignedPathArrangement { ring_len, runs: runs.to_vec(), group_of, sign_of })
}

/// Does `c` theta-fit `p`? Direct translation of the definition.
pub fn theta_fits(c: &RingColoring, theta: ColorPartition, p: &SignedPathArrangement) -> bool {
    if c.len() != p.ring_len {
        return false;
    }
    let runs = theta_components(c, theta);
    if runs.len() != p.runs.len() {
        return false;
    }
    // Component sets must coincide (compare as (start, len) since both are
    // listed in start order).
    for (a, b) in runs.iter().zip(p.runs.iter()) {
        if a.start != b.start || a.len != b.len {
            return false;
        }
    }
    // Sign condition within each group.
    let k = runs.len();
    for a in 0..k {
        for b in (a + 1)..k {
            if p.group_of[a] != p.group_of[b] {
                continue;
            }
            let colors_equal = runs[a].first_color == runs[b].first_color;
            let signs_equal = p.sign_of[a] == p.sign_of[b];
            if k >= 2 && colors_equal != signs_equal {
                return false;
            }
        }
    }
    true
}

/// Does `c` fit `p` under some color partition?
pub fn fits(c: &RingColoring, p: &SignedPathArrangement) -> bool {
    ALL_PARTITIONS.iter().any(|&th| theta_fits(c, th, p))
}

type FitKey = (usize, Vec<(usize, usize)>, Vec<usize>, Vec<u8>);

fn fitting_cache() -> &'static Mutex<HashMap<FitKey, Arc<ColoringSet>>> {
    static CACHE: OnceLock<Mutex<HashMap<FitKey, Arc<ColoringSet>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Every coloring of the ring that fits `p` (under any color partition).
pub fn colorings_fitting(p: &SignedPathArrangement) -> Arc<ColoringSet> {
    let cacheable = p.ring_len <= 10;
    let key: FitKey = (
        p.ring_len,
        p.runs.iter().map(|r| (r.start, r.len)).collect(),
        p.group_of.clone(),
        p.sign_of.clone(),
    );
    if cacheable {
        if let Some(hit) = fitting_cache().lock().unwrap().get(&key) {
            return hit.clone();
        }
    }
    let set = Arc::new(compute_fitting_set(p));
    if cacheable {
        fitting_cache().lock().unwrap().insert(key, set.clone());
    }
    set
}

fn compute_fitting_set(p: &SignedPathArrangement) -> ColoringSet {
    let r = p.ring_len;
    let k = p.runs.len();
    let mut out = ColoringSet::empty(r);
    if k >= 2 && k % 2 == 1 {
        return out; // maximal runs must alternate pairs around the ring
    }
    if k == 1 && r % 2 == 1 {
        return out; // a whole-ring run needs an even ring
    }
    let ngroups = p.group_count();
    for theta in ALL_PARTITIONS {
        for orient in 0..2usize {
            // run j is colored within pair (orient + j) mod 2
            let pair_of_run: Vec<usize> = (0..k).map(|j| (orient + j) % 2).collect();
            // Per group, enumerate first-color choices per sign class.
            // Classes must be monochromatic in pair, classes must differ.
            let mut group_choices: Vec<Vec<Vec<u8>>> = Vec::with_capacity(ngroups);
            let mut feasible = true;
            for g in 0..ngroups {
                let members: Vec<usize> = (0..k).filter(|&j| p.group_of[j] == g).collect();
                let class0: Vec<usize> = members.iter().copied().filter(|&j| p.sign_of[j] == 0).collect();
                let class1: Vec<usize> = members.iter().copied().filter(|&j| p.sign_of[j] == 1).collect();
                let homogeneous =
                    |cl: &[usize]| cl.windows(2).all(|w| pair_of_run[w[0]] == pair_of_run[w[1]]);
                if !homogeneous(&class0) || !homogeneous(&class1) {
                    feasible = false;
                    break;
                }
                // Enumerate (first color of class0, first color of class1).
                let mut choices = Vec::new();
                let opts = |cl: &[usize]| -> Vec<u8> {
                    if cl.is_empty() {
                        vec![u8::MAX]
                    } else {
                        theta.pair(pair_of_run[cl[0]]).to_vec()
                    }
                };
                for &f0 in &opts(&class0) {
                    for &f1 in &opts(&class1) {
                        if f0 != u8::MAX && f1 != u8::MAX && f0 == f1 {
                            continue;
                        }
                        choices.push(vec![f0, f1]);
                    }
                }
                if choices.is_empty() {
                    feasible = false;
                    break;
                }
                group_choices.push(choices);
            }
            if !feasible {
                continue;
            }
            // Cartesian product over groups.
            let mut pick = vec![0usize; ngroups];
            loop {
                let mut colors = vec![u8::MAX; r];
                for j in 0..k {
                    let g = p.group_of[j];
                    let f = group_choices[g][pick[g]][p.sign_of[j] as usize];
                    let pair = theta.pair(pair_of_run[j]);
                    let other = if pair[0] == f { pair[1] } else { pair[0] };
                    for (step, pos) in p.runs[j].positions(r).enumerate() {
                        colors[pos] = if step % 2 == 0 { f } else { other };
                    }
                }
                if let Ok(c) = RingColoring::new(colors) {
                    out.insert(&c);
                }
                // advance product counter
                let mut g = 0;
                loop {
                    if g == ngroups {
                        break;
                    }
                    pick[g] += 1;
                    if pick[g] < group_choices[g].len() {
                        break;
                    }
                    pick[g] = 0;
                    g += 1;
                }
                if g == ngroups {
                    break;
                }
            }
        }
    }
    out
}

/// Direct-definition consistency test: for every member and every color
/// partition some fitting arrangement has all its fitting colorings inside
/// the set.
pub fn is_consistent(set: &ColoringSet) -> bool {
    for idx in set.iter_ranks() {
        let c = unrank(set.ring_len(), idx);
        for theta in ALL_PARTITIONS {
            let ok = fitting_arrangements(&c, theta)
                .iter()
                .any(|p| colorings_fitting(p).is_subset(set));
            if !ok {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, thiserror::Error)]
pub enum FixedPointError {
    #[error("fixed point exceeded its budget after {rounds} rounds ({colorings} colorings left)")]
    BudgetExceeded { rounds: usize, colorings: usize },
}

/// Budget for the fixed-point computation.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_rounds: usize,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_rounds: 10_000, time_limit: None }
    }
}

/// The unique maximal consistent subset, by the alternating fixed point:
/// keep a coloring while, for every color partition, some arrangement it
/// fits has all its fitting colorings still in the set.
pub fn max_consistent_subset(input: &ColoringSet) -> ColoringSet {
    max_consistent_subset_budgeted(input, Budget::default()).expect("default budget").0
}

/// As [`max_consistent_subset`], also reporting the number of rounds until
/// stabilization and honoring an explicit budget.
pub fn max_consistent_subset_budgeted(
    input: &ColoringSet,
    budget: Budget,
) -> Result<(ColoringSet, usize), FixedPointError> {
    let start = Instant::now();
    let ring = input.ring_len();
    let mut cur = input.clone();
    // Per-surviving-coloring candidate arrangements per theta; failed
    // candidates never recover because the set only shrinks.
    struct Cand {
        rank: u64,
        per_theta: [Vec<Arc<ColoringSet>>; 3],
    }
    let mut cands: Vec<Cand> = cur
        .iter_ranks()
        .map(|idx| {
            let c = unrank(ring, idx);
            let per_theta = [0, 1, 2].map(|t| {
                fitting_arrangements(&c, ALL_PARTITIONS[t])
                    .iter()
                    .map(colorings_fitting)
                    .collect::<Vec<_>>()
            });
            Cand { rank: idx, per_theta }
        })
        .collect();
    let mut rounds = 0;
    loop {
        if cur.is_empty() {
            return Ok((cur, rounds));
        }
        if rounds >= budget.max_rounds
            || budget.time_limit.is_some_and(|lim| start.elapsed() > lim)
        {
            return Err(FixedPointError::BudgetExceeded { rounds, colorings: cur.len() });
        }
        let mut removed_any = false;
        let mut next = cur.clone();
        for cand in &mut cands {
            if !cur.contains_rank(cand.rank) {
                continue;
            }
            let mut alive = true;
            for t in 0..3 {
                cand.per_theta[t].retain(|fit| fit.is_subset(&cur));
                if cand.per_theta[t].is_empty() {
                    alive = false;
                }
            }
            if !alive {
                next.remove(&unrank(ring, cand.rank));
                removed_any = true;
            }
        }
        rounds += 1;
        if !removed_any {
            return Ok((next, rounds));
        }
        cur = next;
    }
}

/// All proper 4-colorings of an arbitrary graph, reported through a callback.
pub fn for_each_proper_coloring(g: &RotationGraph, mut f: impl FnMut(&[u8])) {
    let n = g.vertex_count();
    if n == 0 {
        return;
    }
    let mut colors = vec![u8::MAX; n];
    fn rec(g: &RotationGraph, v: usize, colors: &mut Vec<u8>, f: &mut impl FnMut(&[u8])) {
        if v == g.vertex_count() {
            f(colors);
            return;
        }
        'cand: for c in 0..4u8 {
            for &w in g.neighbors(v) {
                if w < v && colors[w] == c {
                    continue 'cand;
                }
            }
            colors[v] = c;
            rec(g, v + 1, colors, f);
        }
        colors[v] = u8::MAX;
    }
    rec(g, 0, &mut colors, &mut f);
}

/// Ring colorings of `ring` (a circuit of `g`, in clockwise order) that
/// extend to proper 4-colorings of the whole graph, found by backtracking
/// over the non-ring vertices.
pub fn extendable_colorings(g: &RotationGraph, ring: &[usize]) -> ColoringSet {
    let n = g.vertex_count();
    let r = ring.len();
    let mut is_ring = vec![false; n];
    let mut ring_pos = vec![usize::MAX; n];
    for (i, &v) in ring.iter().enumerate() {
        is_ring[v] = true;
        ring_pos[v] = i;
    }
    let internal: Vec<usize> = (0..n).filter(|&v| !is_ring[v]).collect();
    let mut out = ColoringSet::empty(r);

    // Backtrack over internal vertices, then enumerate compatible ring
    // colorings against the forbidden masks the internal coloring imposes.
    let mut colors = vec![u8::MAX; n];
    fn internal_rec(
        g: &RotationGraph,
        internal: &[usize],
        i: usize,
        colors: &mut Vec<u8>,
        emit: &mut impl FnMut(&Vec<u8>),
    ) {
        if i == internal.len() {
            emit(colors);
            return;
        }
        let v = internal[i];
        'cand: for c in 0..4u8 {
            for &w in g.neighbors(v) {
                if colors[w] == c {
                    continue 'cand;
                }
            }
            colors[v] = c;
            internal_rec(g, internal, i + 1, colors, emit);
            colors[v] = u8::MAX;
        }
    }
    let ring_owned: Vec<usize> = ring.to_vec();
    internal_rec(g, &internal, 0, &mut colors, &mut |colors| {
        // Forbidden color mask per ring position from internal neighbors
        // and ring chords.
        let mut mask = vec![0u8; r];
        for (i, &v) in ring_owned.iter().enumerate() {
            for &w in g.neighbors(v) {
                if colors[w] != u8::MAX {
                    mask[i] |= 1 << colors[w];
                }
            }
        }
        // Chords between non-consecutive ring vertices constrain pairs.
        let mut chords: Vec<(usize, usize)> = Vec::new();
        for (i, &v) in ring_owned.iter().enumerate() {
            for &w in g.neighbors(v) {
                if let Some(j) = ring_owned.iter().position(|&u| u == w) {
                    let consecutive = (i + 1) % r == j || (j + 1) % r == i;
                    if !consecutive && i < j {
                        chords.push((i, j));
                    }
                }
            }
        }
        let mut ring_colors = vec![u8::MAX; r];
        fn ring_rec(
            pos: usize,
            r: usize,
            mask: &[u8],
            chords: &[(usize, usize)],
            ring_colors: &mut Vec<u8>,
            out: &mut ColoringSet,
        ) {
            if pos == r {
                out.insert(&RingColoring::new(ring_colors.clone()).unwrap());
                return;
            }
            'cand: for c in 0..4u8 {
                if mask[pos] & (1 << c) != 0 {
                    continue;
                }
                if pos > 0 && ring_colors[pos - 1] == c {
                    continue;
                }
                if pos == r - 1 && ring_colors[0] == c {
                    continue;
                }
                for &(a, b) in chords {
                    if b == pos && ring_colors[a] == c {
                        continue 'cand;
                    }
                }
                ring_colors[pos] = c;
                ring_rec(pos + 1, r, mask, chords, ring_colors, out);
                ring_colors[pos] = u8::MAX;
            }
        }
        ring_rec(0, r, &mask, &chords, &mut ring_colors, &mut out);
    });
    debug_assert!(out.is_permutation_closed());
    out
}

/// The lifts through `phi` of all proper 4-colorings of `g`: the coloring of
/// the wrapped ring reading the graph colors along the face walk.
pub fn lift_colorings(g: &RotationGraph, phi: &[usize]) -> ColoringSet {
    let r = phi.len();
    let mut out = ColoringSet::empty(r);
    for_each_proper_coloring(g, |colors| {
        let lifted: Vec<u8> = phi.iter().map(|&v| colors[v]).collect();
        out.insert(&RingColoring::new(lifted).expect("face walk lifts are proper"));
    });
    debug_assert!(out.is_permutation_closed());
    out
}
