//! GF(2) linear algebra: packed bit-vectors, canonical subspaces, and a
//! breadth-first search over cosets of a subspace.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A vector over GF(2), packed into 64-bit words.
///
/// Coordinate 0 is the most significant position for the lexicographic
/// order used by [`Ord`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i))
    }

    /// Builds a vector from the low `len` bits of `mask` (bit i = coordinate i).
    pub fn from_mask(len: usize, mask: u128) -> Self {
        assert!(len <= 128);
        Self::from_indices(len, (0..len).filter(|i| mask >> i & 1 == 1))
    }

    /// Inverse of [`BitVec::from_mask`]; panics above 128 coordinates.
    pub fn to_mask(&self) -> u128 {
        assert!(self.len <= 128);
        self.iter_ones().fold(0u128, |m, i| m | 1 << i)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "length mismatch in and");
        BitVec {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn or(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "length mismatch in or");
        BitVec {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    /// Parity of the coordinate-wise AND.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + t)
                }
            })
        })
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Concatenation `self | other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }
}

impl Ord for BitVec {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Lexicographic with coordinate 0 first; a 1 beats a 0.
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                if a != b {
                    let low = (a ^ b).trailing_zeros();
                    return if a >> low & 1 == 1 {
                        std::cmp::Ordering::Greater
                    } else {
                        std::cmp::Ordering::Less
                    };
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl Serialize for BitVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BitVec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let mut bits = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(serde::de::Error::custom(format!("bad bit {other:?}"))),
            }
        }
        Ok(BitVec::from_bools(&bits))
    }
}

/// A subspace of GF(2)^ambient stored as a reduced row echelon basis.
///
/// Pivots are the lowest set coordinate of each row, every pivot column is
/// zero in all other rows, and rows are sorted by pivot. Equal subspaces
/// therefore compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<BitVec>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace").field("ambient", &self.ambient).field("rows", &self.rows).finish()
    }
}

/// Reduced row echelon form of the row span of `matrix`.
///
/// `ambient` is only consulted when `matrix` is empty.
pub fn rref(matrix: &[BitVec], ambient: usize) -> Result<Subspace> {
    let ambient = match matrix.first() {
        Some(r) => r.len(),
        None => ambient,
    };
    if let Some(bad) = matrix.iter().find(|r| r.len() != ambient) {
        return Err(Error::MixedLength { expected: ambient, found: bad.len() });
    }
    let mut s = Subspace::zero(ambient);
    for row in matrix {
        s.insert(row.clone());
    }
    Ok(s)
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| BitVec::from_indices(ambient, [i])).collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = BitVec>) -> Result<Self> {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::MixedLength { expected: ambient, found: v.len() });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Clears every pivot coordinate of `v`, yielding the lexicographically
    /// smallest element of the coset `v + self`.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        v.len() == self.ambient && self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns false when `v` was already inside.
    pub fn insert(&mut self, v: BitVec) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch in insert");
        let r = self.reduce(&v);
        let Some(p) = r.first_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    /// Coordinates of `v` in terms of the basis rows, or `None` if outside.
    pub fn solve(&self, v: &BitVec) -> Option<Vec<bool>> {
        let mut rest = v.clone();
        let mut coeffs = vec![false; self.rows.len()];
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if rest.get(p) {
                rest.xor_assign(row);
                coeffs[i] = true;
            }
        }
        rest.is_zero().then_some(coeffs)
    }

    pub fn orthogonal_complement(&self) -> Subspace {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut s = Subspace::zero(self.ambient);
        for f in (0..self.ambient).filter(|&f| !is_pivot[f]) {
            let mut v = BitVec::zeros(self.ambient);
            v.set(f, true);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if row.get(f) {
                    v.set(p, true);
                }
            }
            s.insert(v);
        }
        s
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        Ok(s)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        let perp = self.orthogonal_complement().sum(&other.orthogonal_complement())?;
        Ok(perp.orthogonal_complement())
    }

    /// Iterates all 2^dim elements in Gray-code order. Only for small `dim`.
    pub fn elements(&self) -> impl Iterator<Item = BitVec> + '_ {
        let dim = self.dim();
        assert!(dim < 40, "refusing to enumerate 2^{dim} elements");
        let mut cur = BitVec::zeros(self.ambient);
        let mut k: u64 = 0;
        std::iter::from_fn(move || {
            if k >> dim != 0 {
                return None;
            }
            if k > 0 {
                cur.xor_assign(&self.rows[k.trailing_zeros() as usize]);
            }
            k += 1;
            Some(cur.clone())
        })
    }
}

/// Linear coordinates on the quotient space GF(2)^ambient / modulo.
///
/// The coordinates of a coset are the values of its canonical
/// representative on the non-pivot columns of `modulo`.
#[derive(Clone, Debug)]
pub struct QuotientCoords {
    modulo: Subspace,
    free: Vec<usize>,
}

impl QuotientCoords {
    pub fn new(modulo: &Subspace) -> Result<Self> {
        let mut is_pivot = vec![false; modulo.ambient_dim()];
        for &p in modulo.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..modulo.ambient_dim()).filter(|&i| !is_pivot[i]).collect();
        if free.len() > 128 {
            return Err(Error::TooLarge(format!("quotient dimension {} exceeds 128", free.len())));
        }
        Ok(QuotientCoords { modulo: modulo.clone(), free })
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn project(&self, v: &BitVec) -> u128 {
        let r = self.modulo.reduce(v);
        self.free.iter().enumerate().fold(0u128, |m, (k, &i)| if r.get(i) { m | 1 << k } else { m })
    }

    /// The canonical representative of the coset with coordinates `c`.
    pub fn lift(&self, c: u128) -> BitVec {
        BitVec::from_indices(
            self.modulo.ambient_dim(),
            self.free.iter().enumerate().filter(|(k, _)| c >> k & 1 == 1).map(|(_, &i)| i),
        )
    }
}

/// Visited-set for the coset search: dense bitmap for small quotients.
enum Visited {
    Dense(Vec<u64>),
    Sparse(HashSet<u128>),
}

impl Visited {
    fn new(dim: usize) -> Self {
        if dim <= 30 {
            Visited::Dense(vec![0; (1usize << dim).div_ceil(64)])
        } else {
            Visited::Sparse(HashSet::new())
        }
    }

    /// Marks `s`; returns true if it was new.
    fn mark(&mut self, s: u128) -> bool {
        match self {
            Visited::Dense(bits) => {
                let i = s as usize;
                let (w, b) = (i / 64, 1u64 << (i % 64));
                let fresh = bits[w] & b == 0;
                bits[w] |= b;
                fresh
            }
            Visited::Sparse(set) => set.insert(s),
        }
    }
}

/// Outcome of a successful coset search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    /// Number of generators summed.
    pub depth: usize,
    /// Quotient coordinates of the hit; the smallest hit at that depth.
    pub state: u128,
}

/// Breadth-first search over the quotient GF(2)^ambient / modulo, starting
/// at the zero coset and stepping by the projected generators.
///
/// Returns the first depth at which some reached coset satisfies `accept`
/// (depth 0 is the zero coset itself). Generators whose projection is zero
/// are skipped. The result does not depend on generator order.
pub fn coset_search(
    coords: &QuotientCoords,
    generators: &[BitVec],
    budget: usize,
    mut accept: impl FnMut(u128) -> bool,
) -> Result<SearchHit> {
    let mut steps: Vec<u128> = generators.iter().map(|g| coords.project(g)).filter(|&s| s != 0).collect();
    steps.sort_unstable();
    steps.dedup();

    let mut visited = Visited::new(coords.dim());
    visited.mark(0);
    if accept(0) {
        return Ok(SearchHit { depth: 0, state: 0 });
    }
    let mut frontier = vec![0u128];
    let mut depth = 0;
    while !frontier.is_empty() {
        if depth == budget {
            return Err(Error::BudgetExceeded { budget });
        }
        depth += 1;
        let mut next = Vec::new();
        let mut best: Option<u128> = None;
        for &s in &frontier {
            for &g in &steps {
                let t = s ^ g;
                if visited.mark(t) {
                    if accept(t) {
                        best = Some(best.map_or(t, |b: u128| b.min(t)));
                    }
                    next.push(t);
                }
            }
        }
        if let Some(state) = best {
            return Ok(SearchHit { depth, state });
        }
        frontier = next;
    }
    Err(Error::NotFound)
}

/// Distance from the zero coset to every coset, by exhaustive BFS.
/// Unreachable cosets get `u8::MAX`. Requires `coords.dim() <= 26`.
pub fn all_coset_distances(coords: &QuotientCoords, generators: &[BitVec]) -> Result<Vec<u8>> {
    let dim = coords.dim();
    if dim > 26 {
        return Err(Error::TooLarge(format!("exhaustive coset table of dimension {dim}")));
    }
    let mut steps: Vec<usize> =
        generators.iter().map(|g| coords.project(g) as usize).filter(|&s| s != 0).collect();
    steps.sort_unstable();
    steps.dedup();
    let mut dist = vec![u8::MAX; 1usize << dim];
    dist[0] = 0;
    let mut frontier = vec![0usize];
    let mut depth = 0u8;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &s in &frontier {
            for &g in &steps {
                let t = s ^ g;
                if dist[t] == u8::MAX {
                    dist[t] = depth;
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    Ok(dist)
}

/// Least number of generators whose sum, added to `target`, lands in
/// `modulo`.
///
/// `Error::NotFound` means the whole reachable coset space was exhausted;
/// `Error::BudgetExceeded` means the answer exceeds `budget`.
pub fn min_generator_count(
    target: &BitVec,
    generators: &[BitVec],
    modulo: &Subspace,
    budget: usize,
) -> Result<usize> {
    let n = modulo.ambient_dim();
    if target.len() != n {
        return Err(Error::MixedLength { expected: n, found: target.len() });
    }
    if let Some(bad) = generators.iter().find(|g| g.len() != n) {
        return Err(Error::MixedLength { expected: n, found: bad.len() });
    }
    let coords = QuotientCoords::new(modulo)?;
    let goal = coords.project(target);
    coset_search(&coords, generators, budget, |s| s == goal).map(|h| h.depth)
}
