//! Molecular graphs of benzenoid systems, tubulenes and fullerenes.
//!
//! All three families are stored the same way: a simple graph with sorted
//! adjacency lists, a sorted edge list, and the list of pentagonal and
//! hexagonal faces. Every face boundary is a simple cycle listed in the same
//! rotational sense as every other face of the graph, starting at its
//! smallest vertex.

mod benzenoid;
pub mod catalogue;
mod fullerene;
pub mod tubulene;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use benzenoid::{build_benzenoid, HexCoord};
pub use fullerene::{load_fullerene, RotationSystem};
pub use tubulene::{build_tubulene, TubuleneSpec};

pub type Edge = (usize, usize);
pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChemError {
    #[error("EmptyInput: no hexagons given")]
    EmptyInput,
    #[error("DisconnectedHexagons: hexagon ({q}, {r}) is not edge-connected to the rest")]
    DisconnectedHexagons { q: i32, r: i32 },
    #[error("HoleDetected: v - e + h = {euler} (expected 1); the hexagons enclose a hole")]
    HoleDetected { euler: i64 },
    #[error("InvalidChiralVector: ({n}, {m}) violates |n| + |m| > 1 and n*m != -1")]
    InvalidChiralVector { n: i32, m: i32 },
    #[error("InvalidRings: a tubulene needs at least one hexagon ring")]
    InvalidRings,
    #[error("DegenerateTube: {0}")]
    DegenerateTube(String),
    #[error("NotCubic: vertex {0} does not list exactly three distinct neighbors")]
    NotCubic(usize),
    #[error("VertexOutOfRange: vertex {vertex} lists neighbor {neighbor} outside 0..{n}")]
    VertexOutOfRange { vertex: usize, neighbor: usize, n: usize },
    #[error("AsymmetricAdjacency: {0} lists {1} but not vice versa")]
    AsymmetricAdjacency(usize, usize),
    #[error("NotPlanarEmbedding: {0}")]
    NotPlanarEmbedding(String),
    #[error("BadFaceSize: traced face of length {0} is neither a pentagon nor a hexagon")]
    BadFaceSize(usize),
    #[error("PentagonCount: found {0} pentagonal faces, expected 12")]
    PentagonCount(usize),
    #[error("InvalidGraph: {0}")]
    InvalidGraph(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Benzenoid,
    Tubulene,
    Fullerene,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Benzenoid => "benzenoid",
            Family::Tubulene => "tubulene",
            Family::Fullerene => "fullerene",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceKind {
    Pentagon,
    Hexagon,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Face {
    pub kind: FaceKind,
    pub boundary: Vec<usize>,
}

impl Face {
    /// Normalizes the boundary to start at its smallest vertex, keeping the
    /// traversal direction.
    fn new(mut boundary: Vec<usize>) -> Result<Self, ChemError> {
        let kind = match boundary.len() {
            5 => FaceKind::Pentagon,
            6 => FaceKind::Hexagon,
            len => return Err(ChemError::BadFaceSize(len)),
        };
        let start = (0..boundary.len()).min_by_key(|&i| boundary[i]).unwrap_or(0);
        boundary.rotate_left(start);
        Ok(Self { kind, boundary })
    }

    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn is_hexagon(&self) -> bool {
        self.kind == FaceKind::Hexagon
    }

    /// Boundary edges `(b[i], b[i+1])` in traversal order, unnormalized.
    pub fn darts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.boundary.len();
        (0..n).map(move |i| (self.boundary[i], self.boundary[(i + 1) % n]))
    }

    /// Boundary edges as `(min, max)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.darts().map(|(a, b)| ordered(a, b))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.boundary.contains(&v)
    }
}

/// Two hexagonal faces sharing exactly one edge; the perimeter of their
/// union is a 10-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FusedPair {
    pub first: FaceId,
    pub second: FaceId,
    pub shared: Edge,
}

pub(crate) fn ordered(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A validated benzenoid, tubulene or fullerene.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolecularGraph {
    family: Family,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    fused_pairs: Vec<FusedPair>,
    positions: Option<Vec<(i64, i64)>>,
}

impl MolecularGraph {
    /// Assembles and validates a graph whose edge set is the union of the
    /// given face boundaries plus `extra_edges`.
    pub(crate) fn assemble(
        family: Family,
        vertex_count: usize,
        boundaries: Vec<Vec<usize>>,
        extra_edges: &[Edge],
        positions: Option<Vec<(i64, i64)>>,
    ) -> Result<Self, ChemError> {
        let faces = boundaries
            .into_iter()
            .map(Face::new)
            .collect::<Result<Vec<_>, _>>()?;
        let mut edges: Vec<Edge> = faces.iter().flat_map(Face::edges).collect();
        edges.extend(extra_edges.iter().map(|&(a, b)| ordered(a, b)));
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            if u == v || v >= vertex_count {
                return Err(ChemError::InvalidGraph(format!("bad edge ({u}, {v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let mut g = Self {
            family,
            adjacency,
            edges,
            faces,
            fused_pairs: Vec::new(),
            positions,
        };
        g.validate()?;
        g.fused_pairs = g.compute_fused_pairs();
        Ok(g)
    }

    fn validate(&self) -> Result<(), ChemError> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(ChemError::InvalidGraph("no vertices".into()));
        }
        for (v, list) in self.adjacency.iter().enumerate() {
            let ok = match self.family {
                Family::Fullerene => list.len() == 3,
                _ => (2..=3).contains(&list.len()),
            };
            if !ok {
                return Err(ChemError::InvalidGraph(format!(
                    "vertex {v} has degree {}",
                    list.len()
                )));
            }
        }
        if !self.is_connected() {
            return Err(ChemError::InvalidGraph("graph is disconnected".into()));
        }
        let mut on_faces: BTreeMap<Edge, usize> = BTreeMap::new();
        for (i, face) in self.faces.iter().enumerate() {
            let mut seen = face.boundary.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != face.len() {
                return Err(ChemError::InvalidGraph(format!(
                    "face {i} repeats a vertex"
                )));
            }
            for e in face.edges() {
                *on_faces.entry(e).or_default() += 1;
            }
        }
        if let Some((e, _)) = on_faces.iter().find(|(_, &c)| c > 2) {
            return Err(ChemError::InvalidGraph(format!(
                "edge {e:?} lies on more than two faces"
            )));
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count()
    }

    fn compute_fused_pairs(&self) -> Vec<FusedPair> {
        let mut faces_of_edge: BTreeMap<Edge, Vec<FaceId>> = BTreeMap::new();
        for (i, face) in self.faces.iter().enumerate() {
            if face.is_hexagon() {
                for e in face.edges() {
                    faces_of_edge.entry(e).or_default().push(i);
                }
            }
        }
        let mut shared: BTreeMap<(FaceId, FaceId), Vec<Edge>> = BTreeMap::new();
        for (e, fs) in faces_of_edge {
            if let [a, b] = fs[..] {
                shared.entry((a.min(b), a.max(b))).or_default().push(e);
            }
        }
        shared
            .into_iter()
            .filter(|(_, es)| es.len() == 1)
            .filter(|&((a, b), _)| {
                let mut vs: Vec<usize> = self.faces[a]
                    .boundary
                    .iter()
                    .chain(&self.faces[b].boundary)
                    .copied()
                    .collect();
                vs.sort_unstable();
                vs.dedup();
                vs.len() == 10
            })
            .map(|((first, second), es)| FusedPair {
                first,
                second,
                shared: es[0],
            })
            .collect()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Sorted `(u, v)` edges with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&ordered(u, v)).ok()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> Option<&Face> {
        self.faces.get(id)
    }

    /// Ids of the hexagonal faces, ascending.
    pub fn hexagons(&self) -> Vec<FaceId> {
        (0..self.faces.len())
            .filter(|&i| self.faces[i].is_hexagon())
            .collect()
    }

    pub fn hexagon_count(&self) -> usize {
        self.faces.iter().filter(|f| f.is_hexagon()).count()
    }

    pub fn pentagon_count(&self) -> usize {
        self.faces.len() - self.hexagon_count()
    }

    pub fn fused_pairs(&self) -> &[FusedPair] {
        &self.fused_pairs
    }

    /// Lattice positions (three times the coordinates in the basis of the
    /// two lattice vectors) for benzenoids and tubulenes.
    pub fn positions(&self) -> Option<&[(i64, i64)]> {
        self.positions.as_deref()
    }

    /// Edges lying on exactly one listed face.
    pub fn boundary_edges(&self) -> Vec<Edge> {
        let mut count: BTreeMap<Edge, usize> = BTreeMap::new();
        for face in &self.faces {
            for e in face.edges() {
                *count.entry(e).or_default() += 1;
            }
        }
        self.edges
            .iter()
            .copied()
            .filter(|e| count.get(e).copied().unwrap_or(0) < 2)
            .collect()
    }
}

/// All unordered pairs of hexagonal faces sharing exactly one edge, sorted by
/// face ids.
pub fn fused_hexagon_pairs(g: &MolecularGraph) -> Vec<FusedPair> {
    g.fused_pairs.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(h: i32) -> MolecularGraph {
        build_benzenoid((0..h).map(|q| HexCoord::new(q, 0))).unwrap()
    }

    #[test]
    fn fused_pairs_of_small_chains() {
        assert!(fused_hexagon_pairs(&chain(1)).is_empty());
        let naph = chain(2);
        let pairs = fused_hexagon_pairs(&naph);
        assert_eq!(pairs.len(), 1);
        let anth = chain(3);
        let pairs = fused_hexagon_pairs(&anth);
        let ids: Vec<_> = pairs.iter().map(|p| (p.first, p.second)).collect();
        assert_eq!(ids, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn fused_pair_perimeter_is_a_ten_cycle() {
        let pyrene = build_benzenoid(
            [(0, 0), (1, 0), (0, 1), (1, -1)].map(|(q, r)| HexCoord::new(q, r)),
        )
        .unwrap();
        let pairs = fused_hexagon_pairs(&pyrene);
        assert_eq!(pairs.len(), 5);
        for p in pairs {
            let a = &pyrene.faces()[p.first];
            let b = &pyrene.faces()[p.second];
            let mut vs: Vec<_> = a.boundary.iter().chain(&b.boundary).copied().collect();
            vs.sort_unstable();
            vs.dedup();
            assert_eq!(vs.len(), 10);
            let mut es: Vec<_> = a.edges().chain(b.edges()).collect();
            es.sort_unstable();
            es.dedup();
            assert_eq!(es.len(), 11);
            assert!(a.edges().any(|e| e == p.shared) && b.edges().any(|e| e == p.shared));
        }
    }

    #[test]
    fn handshake_and_face_multiplicity() {
        for g in [chain(1), chain(4)] {
            let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(degree_sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn face_rejects_bad_sizes() {
        assert_eq!(Face::new(vec![0, 1, 2]), Err(ChemError::BadFaceSize(3)));
        let f = Face::new(vec![4, 5, 0, 1, 2, 3]).unwrap();
        assert_eq!(f.boundary, vec![0, 1, 2, 3, 4, 5]);
    }
}
