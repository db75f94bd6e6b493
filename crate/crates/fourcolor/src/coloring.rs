//! Ring colorings over {r, g, b, y} and sets thereof.
//!
//! A proper coloring of an r-ring is ranked by its lexicographic position
//! among all proper colorings, so sets of colorings are plain bit arrays
//! indexed by rank. There are 3^r + 3(-1)^r proper colorings of an r-ring.

use fixedbitset::FixedBitSet;

pub const COLOR_NAMES: [char; 4] = ['r', 'g', 'b', 'y'];

/// Proper coloring of an r-ring, clockwise position order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingColoring {
    colors: Vec<u8>,
}

#[derive(Debug, thiserror::Error)]
pub enum ColoringError {
    #[error("ring length {0} is below the minimum of 2")]
    RingTooShort(usize),
    #[error("coloring is not proper at position {0}")]
    NotProper(usize),
    #[error("unknown color character {0:?}")]
    BadColor(char),
    #[error("ring lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

impl RingColoring {
    pub fn new(colors: Vec<u8>) -> Result<Self, ColoringError> {
        if colors.len() < 2 {
            return Err(ColoringError::RingTooShort(colors.len()));
        }
        let n = colors.len();
        for i in 0..n {
            if colors[i] > 3 {
                return Err(ColoringError::BadColor('?'));
            }
            if colors[i] == colors[(i + 1) % n] {
                return Err(ColoringError::NotProper(i));
            }
        }
        Ok(RingColoring { colors })
    }

    pub fn parse(s: &str) -> Result<Self, ColoringError> {
        let mut colors = Vec::with_capacity(s.len());
        for ch in s.chars() {
            let c = COLOR_NAMES
                .iter()
                .position(|&n| n == ch)
                .ok_or(ColoringError::BadColor(ch))? as u8;
            colors.push(c);
        }
        RingColoring::new(colors)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, pos: usize) -> u8 {
        self.colors[pos % self.colors.len()]
    }

    pub fn permuted(&self, perm: &[u8; 4]) -> RingColoring {
        RingColoring { colors: self.colors.iter().map(|&c| perm[c as usize]).collect() }
    }

    /// Lexicographically least coloring among the 24 color permutations.
    /// Rotations are not quotiented.
    pub fn canonical_class(&self) -> RingColoring {
        all_color_permutations()
            .iter()
            .map(|p| self.permuted(p))
            .min()
            .unwrap()
    }
}

impl std::fmt::Display for RingColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &c in &self.colors {
            write!(f, "{}", COLOR_NAMES[c as usize])?;
        }
        Ok(())
    }
}

/// All 24 permutations of the four colors.
pub fn all_color_permutations() -> &'static [[u8; 4]; 24] {
    use std::sync::OnceLock;
    static PERMS: OnceLock<[[u8; 4]; 24]> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut out = [[0u8; 4]; 24];
        let mut idx = 0;
        for a in 0..4u8 {
            for b in 0..4u8 {
                if b == a {
                    continue;
                }
                for c in 0..4u8 {
                    if c == a || c == b {
                        continue;
                    }
                    let d = (0..4u8).find(|&d| d != a && d != b && d != c).unwrap();
                    out[idx] = [a, b, c, d];
                    idx += 1;
                }
            }
        }
        out
    })
}

/// Number of proper 4-colorings of an r-ring: 3^r + 3(-1)^r.
pub fn coloring_count(r: usize) -> u64 {
    let p = 3u64.pow(r as u32);
    if r % 2 == 0 {
        p + 3
    } else {
        p - 3
    }
}

fn pow3(m: usize) -> u64 {
    3u64.pow(m as u32)
}

/// Proper color sequences of m steps between fixed endpoints:
/// (3^m + 3(-1)^m)/4 for equal endpoints, (3^m - (-1)^m)/4 otherwise.
fn walks(m: usize, equal: bool) -> u64 {
    let sign = if m % 2 == 0 { 1i64 } else { -1 };
    if equal {
        ((pow3(m) as i64 + 3 * sign) / 4) as u64
    } else {
        ((pow3(m) as i64 - sign) / 4) as u64
    }
}

/// Sequences of m further steps from `current` ending at any color other
/// than `first`.
fn tails(m: usize, current_equals_first: bool) -> u64 {
    pow3(m) - walks(m, current_equals_first)
}

/// Rank of a proper coloring among all proper colorings of its ring,
/// lexicographic by color sequence.
pub fn rank(c: &RingColoring) -> u64 {
    let r = c.len();
    let per_first = coloring_count(r) / 4;
    let seq = c.colors();
    let mut rank = seq[0] as u64 * per_first;
    for i in 1..r {
        let m = r - 1 - i;
        for smaller in 0..seq[i] {
            if smaller == seq[i - 1] {
                continue;
            }
            if i == r - 1 && smaller == seq[0] {
                continue; // would close improperly; contributes nothing anyway
            }
            rank += tails(m, smaller == seq[0]);
        }
    }
    rank
}

/// Inverse of [`rank`].
pub fn unrank(r: usize, mut idx: u64) -> RingColoring {
    let per_first = coloring_count(r) / 4;
    let first = (idx / per_first).min(3) as u8;
    idx -= first as u64 * per_first;
    let mut seq = vec![first];
    for i in 1..r {
        let m = r - 1 - i;
        for cand in 0..4u8 {
            if cand == seq[i - 1] {
                continue;
            }
            let cnt = tails(m, cand == seq[0]);
            if idx < cnt {
                seq.push(cand);
                break;
            }
            idx -= cnt;
        }
        debug_assert_eq!(seq.len(), i + 1, "unrank index out of range");
    }
    RingColoring { colors: seq }
}

/// A set of ring colorings, stored as a bit array indexed by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSet {
    ring_len: usize,
    bits: FixedBitSet,
}

impl ColoringSet {
    pub fn empty(ring_len: usize) -> Self {
        ColoringSet { ring_len, bits: FixedBitSet::with_capacity(coloring_count(ring_len) as usize) }
    }

    /// The set of all proper colorings of the r-ring.
    pub fn full(ring_len: usize) -> Self {
        let mut s = Self::empty(ring_len);
        s.bits.insert_range(..);
        s
    }

    pub fn ring_len(&self) -> usize {
        self.ring_len
    }

    pub fn universe_size(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.count_ones(..) == 0
    }

    pub fn insert(&mut self, c: &RingColoring) {
        debug_assert_eq!(c.len(), self.ring_len);
        self.bits.insert(rank(c) as usize);
    }

    pub fn insert_rank(&mut self, idx: u64) {
        self.bits.insert(idx as usize);
    }

    pub fn contains(&self, c: &RingColoring) -> bool {
        self.bits.contains(rank(c) as usize)
    }

    pub fn contains_rank(&self, idx: u64) -> bool {
        self.bits.contains(idx as usize)
    }

    pub fn remove(&mut self, c: &RingColoring) {
        self.bits.remove(rank(c) as usize);
    }

    pub fn iter_ranks(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.ones().map(|i| i as u64)
    }

    pub fn iter(&self) -> impl Iterator<Item = RingColoring> + '_ {
        self.bits.ones().map(move |i| unrank(self.ring_len, i as u64))
    }

    pub fn union_with(&mut self, other: &ColoringSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &ColoringSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &ColoringSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &ColoringSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Complement within the universe of all proper colorings.
    pub fn complement(&self) -> ColoringSet {
        let mut out = Self::full(self.ring_len);
        out.bits.difference_with(&self.bits);
        out
    }

    /// Close the set under the 24 global color permutations.
    pub fn close_under_permutations(&mut self) {
        let mut extra = Vec::new();
        for i in self.bits.ones() {
            let c = unrank(self.ring_len, i as u64);
            for p in all_color_permutations() {
                extra.push(rank(&c.permuted(p)));
            }
        }
        for e in extra {
            self.bits.insert(e as usize);
        }
    }

    pub fn is_permutation_closed(&self) -> bool {
        for i in self.bits.ones() {
            let c = unrank(self.ring_len, i as u64);
            for p in all_color_permutations() {
                if !self.bits.contains(rank(&c.permuted(p)) as usize) {
                    return false;
                }
            }
        }
        true
    }
}

/// All proper colorings of the r-ring.
pub fn enumerate_colorings(r: usize) -> Result<ColoringSet, ColoringError> {
    if r < 2 {
        return Err(ColoringError::RingTooShort(r));
    }
    Ok(ColoringSet::full(r))
}
