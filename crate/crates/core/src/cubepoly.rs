//! Convex subgraphs isomorphic to `Q_{k,l} = P2^k □ P3^l` and the
//! generalized cube polynomial.
//!
//! The search anchors each candidate at a corner (all `P3` coordinates in
//! `{0, 2}`) and grows the grid tuple by tuple: once the axes leaving the
//! anchor are fixed, every other vertex closes a square with two vertices
//! already placed, so it must be a common neighbor of both.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::SimpleGraph;
use crate::polynomial::{BivariatePolynomial, PolyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QklShape {
    pub k: usize,
    pub l: usize,
}

impl QklShape {
    pub fn new(k: usize, l: usize) -> Self {
        Self { k, l }
    }

    pub fn dimension(&self) -> usize {
        self.k + self.l
    }

    /// `2^k 3^l`, or `None` on overflow.
    pub fn vertex_count(&self) -> Option<usize> {
        let twos = 2usize.checked_pow(self.k as u32)?;
        twos.checked_mul(3usize.checked_pow(self.l as u32)?)
    }

    pub fn radix(&self, coord: usize) -> usize {
        if coord < self.k {
            2
        } else {
            3
        }
    }

    /// Mixed-radix index of a tuple; the last coordinate varies fastest.
    pub fn index_of(&self, tuple: &[u8]) -> usize {
        tuple
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &c)| acc * self.radix(i) + c as usize)
    }

    pub fn tuple_of(&self, mut index: usize) -> Vec<u8> {
        let d = self.dimension();
        let mut t = vec![0u8; d];
        for i in (0..d).rev() {
            t[i] = (index % self.radix(i)) as u8;
            index /= self.radix(i);
        }
        t
    }

    /// Tuples are adjacent when they differ by one in exactly one coordinate.
    pub fn adjacent(a: &[u8], b: &[u8]) -> bool {
        let mut diff = 0;
        for (&x, &y) in a.iter().zip(b) {
            match x.abs_diff(y) {
                0 => {}
                1 => diff += 1,
                _ => return false,
            }
        }
        diff == 1
    }
}

/// A labeling of host vertices by `Q_{k,l}` tuples: `vertex_map[i]` is the
/// host vertex carrying the tuple with index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QklEmbedding {
    pub shape: QklShape,
    pub vertex_map: Vec<usize>,
}

impl QklEmbedding {
    pub fn vertex(&self, tuple: &[u8]) -> usize {
        self.vertex_map[self.shape.index_of(tuple)]
    }

    /// Image vertex set, ascending.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut s = self.vertex_map.clone();
        s.sort_unstable();
        s
    }
}

/// Checks that `e` is a bijection onto its image that preserves adjacency
/// in both directions and that the image is convex in `h`.
pub fn verify_embedding(h: &SimpleGraph, e: &QklEmbedding) -> bool {
    let Some(size) = e.shape.vertex_count() else {
        return false;
    };
    if e.vertex_map.len() != size || e.vertex_map.iter().any(|&v| v >= h.vertex_count()) {
        return false;
    }
    let set = e.vertex_set();
    if set.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let tuples: Vec<Vec<u8>> = (0..size).map(|i| e.shape.tuple_of(i)).collect();
    for i in 0..size {
        for j in i + 1..size {
            let q = QklShape::adjacent(&tuples[i], &tuples[j]);
            if q != h.has_edge(e.vertex_map[i], e.vertex_map[j]) {
                return false;
            }
        }
    }
    h.is_convex(&set).unwrap_or(false)
}

const NONE: usize = usize::MAX;

/// Per-shape tables shared by every anchor.
struct Layout {
    shape: QklShape,
    /// Single-nonzero tuples: `axis[i]` for a `P2` coordinate is the index of
    /// `e_i`; for a `P3` coordinate it is `(e_i, 2 e_i)`.
    axis: Vec<(usize, usize)>,
    /// Placed neighbors of each tuple at the time it is filled.
    preds: Vec<Vec<usize>>,
    /// `(t - e_i, t - e_j, t - e_i - e_j)` for the first two nonzero
    /// coordinates of a tuple, `None` for tuples on an axis.
    square: Vec<Option<(usize, usize, usize)>>,
    corner: Vec<bool>,
}

impl Layout {
    fn new(shape: QklShape, size: usize) -> Self {
        let d = shape.dimension();
        let mut stride = vec![1usize; d];
        for i in (0..d.saturating_sub(1)).rev() {
            stride[i] = stride[i + 1] * shape.radix(i + 1);
        }
        let axis = (0..d).map(|i| (stride[i], 2 * stride[i])).collect();
        let mut preds = Vec::with_capacity(size);
        let mut square = Vec::with_capacity(size);
        let mut corner = Vec::with_capacity(size);
        for t in 0..size {
            let tuple = shape.tuple_of(t);
            let nonzero: Vec<usize> = (0..d).filter(|&i| tuple[i] > 0).collect();
            preds.push(nonzero.iter().map(|&i| t - stride[i]).collect());
            square.push(match nonzero[..] {
                [i, j, ..] => Some((t - stride[i], t - stride[j], t - stride[i] - stride[j])),
                _ => None,
            });
            corner.push((shape.k..d).all(|i| tuple[i] != 1));
        }
        Self {
            shape,
            axis,
            preds,
            square,
            corner,
        }
    }
}

struct Search<'a> {
    h: &'a SimpleGraph,
    layout: &'a Layout,
    convex: bool,
    anchor: usize,
    map: Vec<usize>,
    /// Host vertex -> tuple index, or [`NONE`].
    slot: &'a mut Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn placeable(&self, t: usize, x: usize) -> bool {
        if self.slot[x] != NONE || (self.layout.corner[t] && x < self.anchor) {
            return false;
        }
        let preds = &self.layout.preds[t];
        let mut seen = 0;
        for &y in self.h.neighbors(x) {
            let s = self.slot[y];
            if s != NONE {
                if !preds.contains(&s) {
                    return false;
                }
                seen += 1;
            }
        }
        seen == preds.len()
    }

    fn place(&mut self, t: usize, x: usize) {
        self.map[t] = x;
        self.slot[x] = t;
    }

    fn unplace(&mut self, t: usize) {
        self.slot[self.map[t]] = NONE;
        self.map[t] = NONE;
    }

    fn run(&mut self, p2: &[usize], p3: &[(usize, usize)]) {
        self.place(0, self.anchor);
        self.choose_p2(0, 0, p2, p3);
        self.unplace(0);
    }

    fn choose_p2(&mut self, coord: usize, from: usize, p2: &[usize], p3: &[(usize, usize)]) {
        if coord == self.layout.shape.k {
            self.choose_p3(coord, 0, p3);
            return;
        }
        let t = self.layout.axis[coord].0;
        for (i, &x) in p2.iter().enumerate().skip(from) {
            if self.placeable(t, x) {
                self.place(t, x);
                self.choose_p2(coord + 1, i + 1, p2, p3);
                self.unplace(t);
            }
        }
    }

    fn choose_p3(&mut self, coord: usize, from: usize, p3: &[(usize, usize)]) {
        if coord == self.layout.shape.dimension() {
            self.fill(1);
            return;
        }
        let (t1, t2) = self.layout.axis[coord];
        for (i, &(w1, w2)) in p3.iter().enumerate().skip(from) {
            if !self.placeable(t1, w1) {
                continue;
            }
            self.place(t1, w1);
            if self.placeable(t2, w2) {
                self.place(t2, w2);
                self.choose_p3(coord + 1, i + 1, p3);
                self.unplace(t2);
            }
            self.unplace(t1);
        }
    }

    fn fill(&mut self, t: usize) {
        if t == self.map.len() {
            let set = &self.map;
            if !self.convex || self.h.is_convex_by(set, |x| self.slot[x] != NONE) {
                self.out.push(self.map.clone());
            }
            return;
        }
        let Some((a, b, base)) = self.layout.square[t] else {
            // Axis tuples were placed while choosing directions.
            self.fill(t + 1);
            return;
        };
        let (pa, pb, pbase) = (self.map[a], self.map[b], self.map[base]);
        let h = self.h;
        let mut candidates = h
            .neighbors(pa)
            .iter()
            .copied()
            .filter(|&x| x != pbase && h.has_edge(x, pb));
        if self.convex {
            // In a convex set every common neighbor of `pa` and `pb` lies
            // inside it, and the grid leaves room for only one besides `pbase`.
            let (Some(x), None) = (candidates.next(), candidates.next()) else {
                return;
            };
            if self.placeable(t, x) {
                self.place(t, x);
                self.fill(t + 1);
                self.unplace(t);
            }
        } else {
            let xs: Vec<usize> = candidates.collect();
            for x in xs {
                if self.placeable(t, x) {
                    self.place(t, x);
                    self.fill(t + 1);
                    self.unplace(t);
                }
            }
        }
    }
}

fn search(h: &SimpleGraph, shape: QklShape, convex: bool) -> Vec<QklEmbedding> {
    let n = h.vertex_count();
    let Some(size) = shape.vertex_count() else {
        return Vec::new();
    };
    if size > n || (shape.dimension() > 0 && shape.dimension() > h.max_degree()) {
        return Vec::new();
    }
    let layout = Layout::new(shape, size);
    let mut found: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map_init(
            || vec![NONE; n],
            |slot, v| {
                let p2: Vec<usize> = h.neighbors(v).iter().copied().filter(|&x| x > v).collect();
                let mut p3 = Vec::new();
                if shape.l > 0 {
                    for &w1 in h.neighbors(v) {
                        for &w2 in h.neighbors(w1) {
                            if w2 <= v || h.has_edge(v, w2) {
                                continue;
                            }
                            let common = h.neighbors(v).iter().filter(|&&x| h.has_edge(x, w2)).count();
                            if !convex || common == 1 {
                                p3.push((w1, w2));
                            }
                        }
                    }
                    p3.sort_unstable();
                }
                let mut s = Search {
                    h,
                    layout: &layout,
                    convex,
                    anchor: v,
                    map: vec![NONE; size],
                    slot,
                    out: Vec::new(),
                };
                s.run(&p2, &p3);
                s.out
            },
        )
        .flatten()
        .collect();
    found.sort_by_cached_key(|m| {
        let mut s = m.clone();
        s.sort_unstable();
        s
    });
    let mut out: Vec<QklEmbedding> = Vec::with_capacity(found.len());
    for vertex_map in found {
        let e = QklEmbedding { shape, vertex_map };
        if out.last().map_or(true, |p| p.vertex_set() != e.vertex_set()) {
            out.push(e);
        }
    }
    out
}

/// Convex induced `Q_{k,l}` subgraphs of `h`, one embedding per vertex set,
/// ordered by ascending vertex set.
pub fn find_convex_qkl_embeddings(h: &SimpleGraph, k: usize, l: usize) -> Vec<QklEmbedding> {
    search(h, QklShape::new(k, l), true)
}

/// Vertex sets (ascending, lexicographically ordered) of the convex induced
/// `Q_{k,l}` subgraphs of `h`.
pub fn find_convex_qkl(h: &SimpleGraph, k: usize, l: usize) -> Vec<Vec<usize>> {
    find_convex_qkl_embeddings(h, k, l)
        .iter()
        .map(QklEmbedding::vertex_set)
        .collect()
}

/// Induced `Q_k` subgraphs, convex or not.
pub fn count_induced_hypercubes(h: &SimpleGraph, k: usize) -> u64 {
    search(h, QklShape::new(k, 0), false).len() as u64
}

/// Generalized cube polynomial: the coefficient of `x^k y^l` is the number of
/// convex induced `Q_{k,l}` subgraphs.
pub fn gc_polynomial(h: &SimpleGraph) -> Result<BivariatePolynomial, PolyError> {
    let n = h.vertex_count();
    let mut poly = BivariatePolynomial::zero();
    for l in 0.. {
        let mut row_empty = true;
        for k in 0.. {
            let shape = QklShape::new(k, l);
            let fits = shape.vertex_count().is_some_and(|s| s <= n)
                && (k + l == 0 || k + l <= h.max_degree());
            if !fits {
                break;
            }
            let count = find_convex_qkl_embeddings(h, k, l).len() as u64;
            // A convex Q_{k+1,l} or Q_{k,l+1} contains a convex Q_{k,l}.
            if count == 0 {
                break;
            }
            row_empty = false;
            poly.add_term(k as u32, l as u32, count)?;
        }
        if row_empty {
            break;
        }
    }
    Ok(poly)
}
