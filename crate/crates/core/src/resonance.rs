//! Resonance graphs: perfect matchings joined by hexagon flips.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::chemgraph::{FaceId, MolecularGraph};
use crate::graph::{Distance, GraphError, SimpleGraph};
use crate::matchings::{flip_in_place, sextet_parity, PerfectMatching};

/// Vertex `i` is the `i`-th matching of the canonical list; each edge is
/// labeled with the hexagonal face whose flip it performs.
#[derive(Debug, Clone)]
pub struct ResonanceGraph {
    graph: SimpleGraph,
    labels: BTreeMap<(usize, usize), FaceId>,
    matchings: Vec<PerfectMatching>,
    index: HashMap<Vec<usize>, usize>,
}

/// Builds the resonance graph by flipping every sextet of every matching.
///
/// `ms` must be the complete matching list of `g`; a flip leading outside
/// it is a caller bug and panics.
pub fn build_resonance_graph(g: &MolecularGraph, ms: &[PerfectMatching]) -> ResonanceGraph {
    let index: HashMap<Vec<usize>, usize> = ms
        .iter()
        .enumerate()
        .map(|(i, m)| (m.partners().to_vec(), i))
        .collect();
    let hexagons = g.hexagons();
    let found: Vec<Vec<(usize, usize, FaceId)>> = ms
        .par_iter()
        .enumerate()
        .map(|(i, m)| {
            let mut out = Vec::new();
            let mut partner = m.partners().to_vec();
            for &h in &hexagons {
                let b = &g.faces()[h].boundary;
                if let Some(parity) = sextet_parity(&partner, b) {
                    flip_in_place(&mut partner, b, parity);
                    let j = *index
                        .get(&partner)
                        .expect("matching list is not the complete canonical list");
                    if i < j {
                        out.push((i, j, h));
                    }
                    flip_in_place(&mut partner, b, 1 - parity);
                }
            }
            out
        })
        .collect();
    let mut labels = BTreeMap::new();
    let mut edges = Vec::new();
    for (i, j, h) in found.into_iter().flatten() {
        labels.insert((i, j), h);
        edges.push((i, j));
    }
    ResonanceGraph {
        graph: SimpleGraph::from_edges(ms.len(), &edges),
        labels,
        matchings: ms.to_vec(),
        index,
    }
}

impl ResonanceGraph {
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.graph.neighbors(v)
    }

    /// Hexagon flipped along the edge `u v`, if it is an edge.
    pub fn label(&self, u: usize, v: usize) -> Option<FaceId> {
        self.labels.get(&(u.min(v), u.max(v))).copied()
    }

    /// `(u, v, hexagon)` with `u < v`, sorted.
    pub fn labeled_edges(&self) -> impl Iterator<Item = (usize, usize, FaceId)> + '_ {
        self.labels.iter().map(|(&(u, v), &h)| (u, v, h))
    }

    pub fn matchings(&self) -> &[PerfectMatching] {
        &self.matchings
    }

    pub fn matching(&self, id: usize) -> &PerfectMatching {
        &self.matchings[id]
    }

    /// Id of the matching with the given partner array.
    pub fn id_of(&self, partner: &[usize]) -> Option<usize> {
        self.index.get(partner).copied()
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance, GraphError> {
        self.graph.distance(u, v)
    }

    pub fn is_convex(&self, set: &[usize]) -> Result<bool, GraphError> {
        self.graph.is_convex(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chemgraph::{build_benzenoid, load_fullerene, HexCoord, RotationSystem};
    use crate::matchings::enumerate_perfect_matchings;

    fn resonance(cells: &[(i32, i32)]) -> (MolecularGraph, ResonanceGraph) {
        let g = build_benzenoid(cells.iter().map(|&(q, r)| HexCoord::new(q, r))).unwrap();
        let ms = enumerate_perfect_matchings(&g);
        let r = build_resonance_graph(&g, &ms);
        (g, r)
    }

    fn is_path(r: &ResonanceGraph) -> bool {
        let n = r.vertex_count();
        let ends = (0..n).filter(|&v| r.graph().degree(v) == 1).count();
        r.edge_count() + 1 == n && ends == 2 && r.graph().max_degree() <= 2
    }

    #[test]
    fn small_chains_give_paths() {
        let (_, r) = resonance(&[(0, 0)]);
        assert_eq!((r.vertex_count(), r.edge_count()), (2, 1));
        assert_eq!(r.label(0, 1), Some(0));
        let (_, r) = resonance(&[(0, 0), (1, 0)]);
        assert_eq!((r.vertex_count(), r.edge_count()), (3, 2));
        assert!(is_path(&r));
        let (_, r) = resonance(&[(0, 0), (1, 0), (2, 0)]);
        assert_eq!((r.vertex_count(), r.edge_count()), (4, 3));
        assert!(is_path(&r));
    }

    #[test]
    fn naphthalene_distances_and_convexity() {
        let (_, r) = resonance(&[(0, 0), (1, 0)]);
        let ends: Vec<_> = (0..3).filter(|&v| r.graph().degree(v) == 1).collect();
        let mid = (0..3).find(|&v| r.graph().degree(v) == 2).unwrap();
        assert_eq!(r.distance(ends[0], ends[1]).unwrap(), Some(2));
        assert_eq!(r.distance(mid, mid).unwrap(), Some(0));
        assert!(!r.is_convex(&ends).unwrap());
        assert!(r.is_convex(&[mid]).unwrap());
        assert!(r.is_convex(&[0, 1, 2]).unwrap());
        assert!(matches!(r.distance(0, 3), Err(GraphError::UnknownVertex(3, 3))));
    }

    #[test]
    fn dodecahedron_resonance_graph_is_edgeless() {
        let g = load_fullerene(&RotationSystem::polar_triangulation(5).dual()).unwrap();
        let ms = enumerate_perfect_matchings(&g);
        let r = build_resonance_graph(&g, &ms);
        assert_eq!(r.vertex_count(), 36);
        assert_eq!(r.edge_count(), 0);
        assert_eq!(r.distance(0, 1).unwrap(), None);
    }

    #[test]
    fn labels_are_flip_consistent() {
        let (g, r) = resonance(&[(0, 0), (1, 0), (0, 1), (1, -1)]);
        for (u, v, h) in r.labeled_edges() {
            let flipped = crate::matchings::flip(&g, r.matching(u), h).unwrap();
            assert_eq!(&flipped, r.matching(v));
            assert_eq!(r.id_of(flipped.partners()), Some(v));
        }
    }
}
