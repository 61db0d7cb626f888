//! Vertices, edges, colorings and validated loose-path / loose-cycle
//! structures for complete k-uniform hypergraphs.
//!
//! Conventions used throughout the crate:
//! * vertices are 0-indexed everywhere;
//! * an edge is a strictly increasing k-tuple of vertices;
//! * edges are ranked colexicographically: `rank = sum_j C(v_j, j+1)`;
//! * colorings are dense bit vectors over edge ranks, bit set = Blue.

use crate::binom::Binom;
use crate::{Error, Result};
use std::fmt;

/// A vertex of the ambient hypergraph, identified by its index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl Vertex {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Edge color. Exactly two values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    #[inline]
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }

    pub fn parse(s: &str) -> Result<Color> {
        match s {
            "red" => Ok(Color::Red),
            "blue" => Ok(Color::Blue),
            other => Err(Error::Parse(format!("unknown color {other:?}"))),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A validated edge: strictly increasing sequence of k vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    verts: Vec<Vertex>,
}

impl Edge {
    pub fn new(verts: Vec<Vertex>, k: usize, n_verts: usize) -> Result<Edge> {
        if verts.len() != k {
            return Err(Error::Structure(format!(
                "edge has {} vertices, expected k={k}",
                verts.len()
            )));
        }
        for w in verts.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Structure(
                    "edge vertices must be strictly increasing".into(),
                ));
            }
        }
        if let Some(&last) = verts.last() {
            if last.index() >= n_verts {
                return Err(Error::Structure(format!(
                    "vertex {last} out of range for N={n_verts}"
                )));
            }
        }
        Ok(Edge { verts })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }
}

/// Colexicographic rank of a valid edge: bijection onto `[0, C(N,k))`.
pub fn edge_rank(edge: &Edge, k: usize, n_verts: usize) -> Result<u64> {
    if edge.verts.len() != k {
        return Err(Error::Structure("edge arity mismatch".into()));
    }
    if edge.verts.last().map_or(false, |v| v.index() >= n_verts) {
        return Err(Error::Structure("edge vertex out of range".into()));
    }
    let b = Binom::new(n_verts, k);
    Ok(rank_sorted(&edge.verts, &b))
}

/// Inverse of [`edge_rank`].
pub fn edge_unrank(rank: u64, k: usize, n_verts: usize) -> Result<Edge> {
    let b = Binom::new(n_verts, k);
    if rank >= b.c(n_verts, k) {
        return Err(Error::InvalidInput(format!(
            "rank {rank} out of range for C({n_verts},{k})"
        )));
    }
    let verts = unrank_sorted(rank, k, n_verts, &b);
    Edge::new(verts, k, n_verts)
}

#[inline]
pub(crate) fn rank_sorted(verts: &[Vertex], b: &Binom) -> u64 {
    verts
        .iter()
        .enumerate()
        .map(|(j, v)| b.c(v.index(), j + 1))
        .sum()
}

pub(crate) fn unrank_sorted(mut rank: u64, k: usize, n_verts: usize, b: &Binom) -> Vec<Vertex> {
    let mut out = vec![Vertex(0); k];
    let mut hi = n_verts;
    for j in (1..=k).rev() {
        // largest v with C(v, j) <= rank
        let mut v = j - 1;
        for cand in (j - 1..hi).rev() {
            if b.c(cand, j) <= rank {
                v = cand;
                break;
            }
        }
        rank -= b.c(v, j);
        out[j - 1] = Vertex(v as u32);
        hi = v;
    }
    out
}

/// How a coloring came to be; round-tripped through the LRC1 header.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    Bitmap,
    LowerBound { n: usize, m: usize },
    Random { seed: u64, p_blue: f64 },
}

/// A total red/blue assignment on all k-subsets of an N-vertex set.
///
/// Stored as a dense bit vector in colex rank order, bit set = Blue.
/// Immutable after construction; recoloring operations return a new value.
#[derive(Debug, Clone)]
pub struct Coloring {
    k: usize,
    n_verts: usize,
    bits: Vec<u64>,
    n_edges: u64,
    binom: Binom,
    pub provenance: Provenance,
}

impl Coloring {
    /// All-red coloring on `n_verts` vertices.
    pub fn all_red(k: usize, n_verts: usize) -> Result<Coloring> {
        if k < 2 || n_verts < k {
            return Err(Error::InvalidInput(format!(
                "need N >= k >= 2, got k={k} N={n_verts}"
            )));
        }
        let binom = Binom::new(n_verts, k);
        let n_edges = binom.c(n_verts, k);
        let words = ((n_edges + 63) / 64) as usize;
        Ok(Coloring {
            k,
            n_verts,
            bits: vec![0u64; words],
            n_edges,
            binom,
            provenance: Provenance::Bitmap,
        })
    }

    pub fn from_bits(k: usize, n_verts: usize, bits: Vec<u64>) -> Result<Coloring> {
        let mut c = Coloring::all_red(k, n_verts)?;
        if bits.len() != c.bits.len() {
            return Err(Error::Structure("bitmap length mismatch".into()));
        }
        c.bits = bits;
        c.mask_tail();
        Ok(c)
    }

    fn mask_tail(&mut self) {
        let extra = (self.bits.len() as u64) * 64 - self.n_edges;
        if extra > 0 {
            if let Some(last) = self.bits.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn n_verts(&self) -> usize {
        self.n_verts
    }

    #[inline]
    pub fn n_edges(&self) -> u64 {
        self.n_edges
    }

    pub(crate) fn binom(&self) -> &Binom {
        &self.binom
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    #[inline]
    fn bit(&self, rank: u64) -> bool {
        self.bits[(rank / 64) as usize] >> (rank % 64) & 1 == 1
    }

    pub fn color_of_rank(&self, rank: u64) -> Color {
        if self.bit(rank) {
            Color::Blue
        } else {
            Color::Red
        }
    }

    /// Color of the edge given by `verts` (any order, must be k distinct
    /// in-range vertices).
    pub fn color_of(&self, verts: &[Vertex]) -> Result<Color> {
        let mut sorted: Vec<Vertex> = verts.to_vec();
        sorted.sort_unstable();
        if sorted.len() != self.k {
            return Err(Error::Structure("edge arity mismatch".into()));
        }
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Structure("duplicate vertex in edge".into()));
            }
        }
        if sorted.last().unwrap().index() >= self.n_verts {
            return Err(Error::Structure("vertex out of range".into()));
        }
        Ok(self.color_of_rank(rank_sorted(&sorted, &self.binom)))
    }

    /// `true` iff the (valid) edge is the given color; `false` on any
    /// structural violation, so it never panics inside search loops.
    #[inline]
    pub fn is_color(&self, verts: &[Vertex], color: Color) -> bool {
        match self.color_of(verts) {
            Ok(c) => c == color,
            Err(_) => false,
        }
    }

    pub fn set_rank(&mut self, rank: u64, color: Color) {
        let w = (rank / 64) as usize;
        let b = rank % 64;
        match color {
            Color::Blue => self.bits[w] |= 1 << b,
            Color::Red => self.bits[w] &= !(1 << b),
        }
    }

    pub fn set(&mut self, verts: &[Vertex], color: Color) -> Result<()> {
        let mut sorted: Vec<Vertex> = verts.to_vec();
        sorted.sort_unstable();
        let e = Edge::new(sorted, self.k, self.n_verts)?;
        let r = rank_sorted(e.vertices(), &self.binom);
        self.set_rank(r, color);
        Ok(())
    }

    pub fn count_blue(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn bitmap_equal(&self, other: &Coloring) -> bool {
        self.k == other.k && self.n_verts == other.n_verts && self.bits == other.bits
    }
}

/// First and last vertex of a loose path, in path order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathEndpoints {
    pub first: Vertex,
    pub last: Vertex,
}

/// A loose path: n edges on n(k-1)+1 distinct vertices, consecutive edges
/// sharing exactly one vertex (the last of one = the first of the next).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoosePath {
    k: usize,
    verts: Vec<Vertex>,
}

fn check_distinct(verts: &[Vertex]) -> Result<()> {
    let mut sorted: Vec<Vertex> = verts.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::Structure(format!("duplicate vertex {}", w[0])));
        }
    }
    Ok(())
}

impl LoosePath {
    pub fn new(k: usize, verts: Vec<Vertex>) -> Result<LoosePath> {
        if k < 3 {
            return Err(Error::InvalidInput("loose path needs k >= 3".into()));
        }
        if verts.len() < k || (verts.len() - 1) % (k - 1) != 0 {
            return Err(Error::Structure(format!(
                "loose path on {} vertices is not n(k-1)+1 for k={k}",
                verts.len()
            )));
        }
        check_distinct(&verts)?;
        Ok(LoosePath { k, verts })
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of edges.
    #[inline]
    pub fn len(&self) -> usize {
        (self.verts.len() - 1) / (self.k - 1)
    }

    pub fn is_empty(&self) -> bool {
        false // a valid loose path has at least one edge
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    /// Edge `j` (0-based) as the vertex slice in path order.
    pub fn edge(&self, j: usize) -> &[Vertex] {
        let s = j * (self.k - 1);
        &self.verts[s..s + self.k]
    }

    pub fn edges(&self) -> impl Iterator<Item = &[Vertex]> + '_ {
        (0..self.len()).map(move |j| self.edge(j))
    }

    pub fn first(&self) -> Vertex {
        self.verts[0]
    }

    pub fn last(&self) -> Vertex {
        *self.verts.last().unwrap()
    }

    pub fn endpoints(&self) -> PathEndpoints {
        PathEndpoints {
            first: self.first(),
            last: self.last(),
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.verts.contains(&v)
    }

    /// Same path traversed in the opposite direction.
    pub fn reversed(&self) -> LoosePath {
        let mut verts = self.verts.clone();
        verts.reverse();
        LoosePath { k: self.k, verts }
    }

    /// Orient the path so it starts at `end` (which must be one of the two
    /// path endpoints).
    pub fn oriented_from(&self, end: Vertex) -> Result<LoosePath> {
        if self.first() == end {
            Ok(self.clone())
        } else if self.last() == end {
            Ok(self.reversed())
        } else {
            Err(Error::InvalidInput(format!("{end} is not a path endpoint")))
        }
    }
}

/// A loose cycle: n >= 3 edges on n(k-1) distinct vertices with wraparound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LooseCycle {
    k: usize,
    verts: Vec<Vertex>,
}

impl LooseCycle {
    pub fn new(k: usize, verts: Vec<Vertex>) -> Result<LooseCycle> {
        if k < 3 {
            return Err(Error::InvalidInput("loose cycle needs k >= 3".into()));
        }
        if verts.len() % (k - 1) != 0 || verts.len() < 3 * (k - 1) {
            return Err(Error::Structure(format!(
                "loose cycle on {} vertices is not n(k-1) with n >= 3 for k={k}",
                verts.len()
            )));
        }
        check_distinct(&verts)?;
        Ok(LooseCycle { k, verts })
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of edges.
    #[inline]
    pub fn len(&self) -> usize {
        self.verts.len() / (self.k - 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    /// Edge `j` (0-based), wrapping around at the end.
    pub fn edge(&self, j: usize) -> Vec<Vertex> {
        let s = j * (self.k - 1);
        (0..self.k)
            .map(|t| self.verts[(s + t) % self.verts.len()])
            .collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = Vec<Vertex>> + '_ {
        (0..self.len()).map(move |j| self.edge(j))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.verts.contains(&v)
    }
}

/// Structures whose derived edges can be color-checked uniformly.
pub trait HyperStructure {
    fn k(&self) -> usize;
    fn edge_sets(&self) -> Vec<Vec<Vertex>>;
}

impl HyperStructure for LoosePath {
    fn k(&self) -> usize {
        self.k
    }
    fn edge_sets(&self) -> Vec<Vec<Vertex>> {
        self.edges().map(|e| e.to_vec()).collect()
    }
}

impl HyperStructure for LooseCycle {
    fn k(&self) -> usize {
        self.k
    }
    fn edge_sets(&self) -> Vec<Vec<Vertex>> {
        self.edges().collect()
    }
}

/// Verifier kernel: `true` iff every derived edge of the structure has the
/// given color under the coloring. Total: structural mismatches yield false.
pub fn path_color_check(coloring: &Coloring, structure: &dyn HyperStructure, color: Color) -> bool {
    if structure.k() != coloring.k() {
        return false;
    }
    structure
        .edge_sets()
        .iter()
        .all(|e| coloring.is_color(e, color))
}

/// Index translation from a restricted coloring back to its parent.
#[derive(Debug, Clone)]
pub struct Translation {
    to_parent: Vec<Vertex>,
}

impl Translation {
    pub fn identity(n: usize) -> Translation {
        Translation {
            to_parent: (0..n as u32).map(Vertex).collect(),
        }
    }

    pub fn lift_vertex(&self, v: Vertex) -> Result<Vertex> {
        self.to_parent
            .get(v.index())
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("vertex {v} outside translation table")))
    }

    pub fn lift_all(&self, vs: &[Vertex]) -> Result<Vec<Vertex>> {
        vs.iter().map(|&v| self.lift_vertex(v)).collect()
    }
}

/// Restriction of a coloring to a vertex subset; edge `{i_1..i_k}` of the
/// restriction inherits the color of the corresponding parent edge. Returns
/// the translation table so witnesses lift back.
pub fn restrict_coloring(coloring: &Coloring, subset: &[Vertex]) -> Result<(Coloring, Translation)> {
    let k = coloring.k();
    if subset.len() < k {
        return Err(Error::InvalidInput(format!(
            "subset of {} vertices is smaller than k={k}",
            subset.len()
        )));
    }
    check_distinct(subset).map_err(|_| Error::InvalidInput("duplicate vertex in subset".into()))?;
    for &v in subset {
        if v.index() >= coloring.n_verts() {
            return Err(Error::InvalidInput(format!("vertex {v} out of range")));
        }
    }
    let mut restricted = Coloring::all_red(k, subset.len())?;
    let b = restricted.binom.clone();
    let mut idx = vec![0usize; k];
    // enumerate all k-subsets of the restricted index space
    fn rec(
        idx: &mut Vec<usize>,
        pos: usize,
        start: usize,
        n: usize,
        k: usize,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if pos == k {
            f(idx);
            return;
        }
        for v in start..=(n - (k - pos)) {
            idx[pos] = v;
            rec(idx, pos + 1, v + 1, n, k, f);
        }
    }
    let mut updates: Vec<(u64, Color)> = Vec::new();
    {
        let n = subset.len();
        let mut handle = |idx: &[usize]| {
            let local: Vec<Vertex> = idx.iter().map(|&i| Vertex(i as u32)).collect();
            let parent: Vec<Vertex> = idx.iter().map(|&i| subset[i]).collect();
            let color = coloring.color_of(&parent).expect("validated above");
            if color == Color::Blue {
                let r = rank_sorted(&local, &b);
                updates.push((r, Color::Blue));
            }
        };
        rec(&mut idx, 0, 0, n, k, &mut handle);
    }
    for (r, c) in updates {
        restricted.set_rank(r, c);
    }
    Ok((
        restricted,
        Translation {
            to_parent: subset.to_vec(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ids: &[u32]) -> Vec<Vertex> {
        ids.iter().map(|&i| Vertex(i)).collect()
    }

    #[test]
    fn rank_smallest_edges() {
        let e0 = Edge::new(vs(&[0, 1, 2, 3, 4]), 5, 12).unwrap();
        assert_eq!(edge_rank(&e0, 5, 12).unwrap(), 0);
        let e1 = Edge::new(vs(&[0, 1, 2, 3, 5]), 5, 12).unwrap();
        assert_eq!(edge_rank(&e1, 5, 12).unwrap(), 1);
    }

    #[test]
    fn unrank_extremes() {
        let e = edge_unrank(0, 5, 12).unwrap();
        assert_eq!(e.vertices(), &vs(&[0, 1, 2, 3, 4])[..]);
        let last = crate::binom::choose(12, 5) - 1;
        let e = edge_unrank(last, 5, 12).unwrap();
        assert_eq!(e.vertices(), &vs(&[7, 8, 9, 10, 11])[..]);
    }

    #[test]
    fn rank_bijection_n12() {
        // exhaustive: ranks of all C(12,5)=792 edges cover [0,792) exactly
        for (k, n) in [(5usize, 12usize), (3, 12), (5, 9), (3, 7)] {
            let total = crate::binom::choose(n, k);
            let mut seen = vec![false; total as usize];
            for r in 0..total {
                let e = edge_unrank(r, k, n).unwrap();
                let back = edge_rank(&e, k, n).unwrap();
                assert_eq!(back, r);
                assert!(!seen[r as usize]);
                seen[r as usize] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn loose_path_shapes() {
        // 9 distinct vertices -> P^5_2
        let p = LoosePath::new(5, vs(&[0, 1, 2, 3, 4, 5, 6, 7, 8])).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.endpoints(), PathEndpoints { first: Vertex(0), last: Vertex(8) });
        // 8 vertices violates n(k-1)+1
        assert!(LoosePath::new(5, vs(&[0, 1, 2, 3, 4, 5, 6, 7])).is_err());
        // k=3, 7 vertices -> P^3_3
        let p3 = LoosePath::new(3, vs(&[0, 1, 2, 3, 4, 5, 6])).unwrap();
        assert_eq!(p3.len(), 3);
        // duplicates rejected
        assert!(LoosePath::new(5, vs(&[0, 1, 2, 3, 4, 5, 6, 7, 0])).is_err());
    }

    #[test]
    fn loose_path_edge_intersections() {
        let p = LoosePath::new(5, (0..13u32).map(Vertex).collect()).unwrap();
        for i in 0..p.len() {
            for j in 0..p.len() {
                let a = p.edge(i);
                let b = p.edge(j);
                let common = a.iter().filter(|v| b.contains(v)).count();
                let expect = match i.abs_diff(j) {
                    0 => 5,
                    1 => 1,
                    _ => 0,
                };
                assert_eq!(common, expect);
            }
        }
    }

    #[test]
    fn loose_cycle_shapes() {
        let c = LooseCycle::new(5, (0..12u32).map(Vertex).collect()).unwrap();
        assert_eq!(c.len(), 3);
        assert!(LooseCycle::new(5, (0..13u32).map(Vertex).collect()).is_err());
        // C^5_6 on 24 vertices: edge 5 wraps back into vertices[0]
        let c6 = LooseCycle::new(5, (0..24u32).map(Vertex).collect()).unwrap();
        assert_eq!(c6.len(), 6);
        let e5 = c6.edge(5);
        let e0 = c6.edge(0);
        let shared: Vec<_> = e5.iter().filter(|v| e0.contains(v)).collect();
        assert_eq!(shared, vec![&Vertex(0)]);
        // cyclic intersections
        for i in 0..6 {
            for j in 0..6 {
                let d = (i as i32 - j as i32).rem_euclid(6).min((j as i32 - i as i32).rem_euclid(6));
                let a = c6.edge(i);
                let b = c6.edge(j);
                let common = a.iter().filter(|v| b.contains(v)).count();
                let expect = match d {
                    0 => 5,
                    1 => 1,
                    _ => 0,
                };
                assert_eq!(common, expect, "edges {i},{j}");
            }
        }
    }

    #[test]
    fn color_check_totals() {
        let red = Coloring::all_red(5, 12).unwrap();
        let c = LooseCycle::new(5, (0..12u32).map(Vertex).collect()).unwrap();
        assert!(path_color_check(&red, &c, Color::Red));
        assert!(!path_color_check(&red, &c, Color::Blue));
    }

    #[test]
    fn restrict_identity() {
        let mut col = Coloring::all_red(5, 8).unwrap();
        col.set(&vs(&[0, 2, 4, 6, 7]), Color::Blue).unwrap();
        let all: Vec<Vertex> = (0..8u32).map(Vertex).collect();
        let (r, _) = restrict_coloring(&col, &all).unwrap();
        assert!(r.bitmap_equal(&col));
    }

    #[test]
    fn restrict_single_edge() {
        let mut col = Coloring::all_red(5, 6).unwrap();
        col.set(&vs(&[0, 1, 2, 3, 5]), Color::Blue).unwrap();
        let (r, _) = restrict_coloring(&col, &vs(&[0, 1, 2, 3, 5])).unwrap();
        assert_eq!(r.n_edges(), 1);
        assert_eq!(r.color_of_rank(0), Color::Blue);
        let (r2, _) = restrict_coloring(&col, &vs(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(r2.color_of_rank(0), Color::Red);
    }

    #[test]
    fn restrict_preserves_colors_exhaustively() {
        // pseudo-random coloring on 10 vertices, restrict to a shuffled subset
        let col = crate::colorings::random_coloring(5, 10, 77, 0.5).unwrap();
        let subset = vs(&[9, 0, 4, 2, 7, 5, 1]);
        let (r, tr) = restrict_coloring(&col, &subset).unwrap();
        // every restricted edge color equals original under translation
        let total = crate::binom::choose(7, 5);
        for rank in 0..total {
            let e = edge_unrank(rank, 5, 7).unwrap();
            let parent = tr.lift_all(e.vertices()).unwrap();
            assert_eq!(
                r.color_of(e.vertices()).unwrap(),
                col.color_of(&parent).unwrap()
            );
        }
    }
}
