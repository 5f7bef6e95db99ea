use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{ordered, ChemError, Edge, Family, MolecularGraph};

/// Axial coordinates of a hexagon center on the infinite hexagonal lattice.
///
/// The lattice vectors are `a1 = (1, 0)` and `a2 = (0, 1)` at 60 degrees to
/// each other; the six neighbors of `(q, r)` are at offsets `±(1, 0)`,
/// `±(0, 1)` and `±(-1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HexCoord {
    pub q: i32,
    pub r: i32,
}

impl HexCoord {
    pub const fn new(q: i32, r: i32) -> Self {
        Self { q, r }
    }

    pub fn neighbors(self) -> [HexCoord; 6] {
        NEIGHBOR_OFFSETS.map(|(dq, dr)| HexCoord::new(self.q + dq, self.r + dr))
    }
}

pub(crate) const NEIGHBOR_OFFSETS: [(i32, i32); 6] =
    [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Corner offsets from a hexagon center, counterclockwise, in units of a
/// third of a lattice vector.
pub(crate) const CORNER_OFFSETS: [(i64, i64); 6] =
    [(1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1)];

pub(crate) fn corners(center: (i64, i64)) -> [(i64, i64); 6] {
    CORNER_OFFSETS.map(|(dx, dy)| (center.0 + dx, center.1 + dy))
}

/// Builds the benzenoid graph spanned by the given hexagons.
///
/// Vertices are the distinct hexagon corners, numbered in lexicographic
/// order of their lattice position; face `i` is the `i`-th hexagon in
/// `(q, r)` order. Duplicate hexagons are ignored.
pub fn build_benzenoid<I>(hexagons: I) -> Result<MolecularGraph, ChemError>
where
    I: IntoIterator<Item = HexCoord>,
{
    let cells: BTreeSet<HexCoord> = hexagons.into_iter().collect();
    let first = *cells.iter().next().ok_or(ChemError::EmptyInput)?;

    let mut reached = BTreeSet::from([first]);
    let mut queue = VecDeque::from([first]);
    while let Some(c) = queue.pop_front() {
        for nb in c.neighbors() {
            if cells.contains(&nb) && reached.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    if let Some(&stray) = cells.iter().find(|c| !reached.contains(c)) {
        return Err(ChemError::DisconnectedHexagons {
            q: stray.q,
            r: stray.r,
        });
    }

    let centers: Vec<(i64, i64)> = cells
        .iter()
        .map(|c| (3 * c.q as i64, 3 * c.r as i64))
        .collect();
    let points: BTreeSet<(i64, i64)> = centers.iter().flat_map(|&c| corners(c)).collect();
    let index: BTreeMap<(i64, i64), usize> =
        points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let boundaries: Vec<Vec<usize>> = centers
        .iter()
        .map(|&c| corners(c).iter().map(|p| index[p]).collect())
        .collect();

    let edges: BTreeSet<Edge> = boundaries
        .iter()
        .flat_map(|b| (0..6).map(move |i| ordered(b[i], b[(i + 1) % 6])))
        .collect();
    let euler = points.len() as i64 - edges.len() as i64 + cells.len() as i64;
    if euler != 1 {
        return Err(ChemError::HoleDetected { euler });
    }

    MolecularGraph::assemble(
        Family::Benzenoid,
        points.len(),
        boundaries,
        &[],
        Some(points.into_iter().collect()),
    )
}
