//! Open-ended nanotubes cut from the hexagonal lattice rolled along a chiral
//! vector `n*a1 + m*a2`.
//!
//! A hexagon centered at `(q, r)` gets the axial height `s = n*r - m*q`;
//! translation by the chiral vector leaves `s` unchanged, so hexagons of
//! equal height form straight rings around the axis. One ring is a band of
//! `max(|n|, |m|, |n + m|)` consecutive heights (the largest height step
//! between neighboring hexagons), and a tube with `rings` rings keeps every
//! hexagon with `0 <= s < rings * max(|n|, |m|, |n + m|)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::benzenoid::corners;
use super::{ordered, ChemError, Edge, Family, MolecularGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TubuleneSpec {
    pub n: i32,
    pub m: i32,
    pub rings: u32,
}

impl TubuleneSpec {
    pub fn new(n: i32, m: i32, rings: u32) -> Self {
        Self { n, m, rings }
    }

    pub fn validate(&self) -> Result<(), ChemError> {
        let (n, m) = (self.n as i64, self.m as i64);
        if n.abs() + m.abs() <= 1 || n * m == -1 {
            return Err(ChemError::InvalidChiralVector {
                n: self.n,
                m: self.m,
            });
        }
        if self.rings == 0 {
            return Err(ChemError::InvalidRings);
        }
        Ok(())
    }

    fn ring_width(&self) -> i64 {
        let (n, m) = (self.n as i64, self.m as i64);
        n.abs().max(m.abs()).max((n + m).abs())
    }

    /// Chiral vector in position units (three per lattice vector).
    fn period(&self) -> (i64, i64) {
        (3 * self.n as i64, 3 * self.m as i64)
    }
}

/// Twice the inner product in the 60-degree lattice basis.
fn dot2(p: (i64, i64), c: (i64, i64)) -> i64 {
    2 * p.0 * c.0 + 2 * p.1 * c.1 + p.0 * c.1 + p.1 * c.0
}

/// Representative of `p` modulo `period` whose projection on the period lies
/// in `[0, |period|)`.
fn reduce(p: (i64, i64), period: (i64, i64)) -> (i64, i64) {
    let k = dot2(p, period).div_euclid(dot2(period, period));
    (p.0 - k * period.0, p.1 - k * period.1)
}

/// The six lattice edge vectors in position units.
const EDGE_VECTORS: [(i64, i64); 6] = [(2, -1), (-2, 1), (1, 1), (-1, -1), (-1, 2), (1, -2)];

/// Builds the tubulene for `spec`.
///
/// Faces are the hexagons between the two straight boundary rings, ordered
/// by the reduced position of their centers; vertices are numbered in
/// lexicographic order of their reduced positions.
pub fn build_tubulene(spec: &TubuleneSpec) -> Result<MolecularGraph, ChemError> {
    spec.validate()?;
    let (n, m) = (spec.n as i64, spec.m as i64);
    let period = spec.period();
    let width = spec.rings as i64 * spec.ring_width();

    let reach = 3 * (n.abs() + m.abs()) + width + 3;
    let mut centers = BTreeSet::new();
    for q in -reach..=reach {
        for r in -reach..=reach {
            let s = n * r - m * q;
            if (0..width).contains(&s) {
                centers.insert(reduce((3 * q, 3 * r), period));
            }
        }
    }
    // Each height class holds gcd(n, m) hexagons per period.
    if centers.len() as i64 != width {
        return Err(ChemError::DegenerateTube(format!(
            "expected {width} hexagons, found {}",
            centers.len()
        )));
    }

    let points: BTreeSet<(i64, i64)> = centers
        .iter()
        .flat_map(|&c| corners(c).map(|p| reduce(p, period)))
        .collect();
    let index: BTreeMap<(i64, i64), usize> =
        points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let boundaries: Vec<Vec<usize>> = centers
        .iter()
        .map(|&c| corners(c).iter().map(|&p| index[&reduce(p, period)]).collect())
        .collect();

    let g = MolecularGraph::assemble(
        Family::Tubulene,
        points.len(),
        boundaries,
        &[],
        Some(points.into_iter().collect()),
    )?;

    let euler = g.vertex_count() as i64 - g.edge_count() as i64 + g.faces().len() as i64;
    if euler != 0 {
        return Err(ChemError::DegenerateTube(format!(
            "v - e + f = {euler}, expected 0 for a cylinder"
        )));
    }
    let cycles = boundary_cycles(&g)
        .ok_or_else(|| ChemError::DegenerateTube("boundary is not a union of cycles".into()))?;
    if cycles.len() != 2 {
        return Err(ChemError::DegenerateTube(format!(
            "{} boundary cycles, expected 2",
            cycles.len()
        )));
    }
    for cycle in &cycles {
        if axial_winding(&g, spec, cycle).map(i64::abs) != Some(1) {
            return Err(ChemError::DegenerateTube(
                "a boundary cycle does not wind once around the axis".into(),
            ));
        }
    }
    Ok(g)
}

/// Splits the boundary edges (edges on a single face) into cycles, each
/// starting at its smallest vertex. Returns `None` if some boundary vertex
/// does not meet exactly two boundary edges.
pub fn boundary_cycles(g: &MolecularGraph) -> Option<Vec<Vec<usize>>> {
    let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (u, v) in g.boundary_edges() {
        incident.entry(u).or_default().push(v);
        incident.entry(v).or_default().push(u);
    }
    if incident.values().any(|nb| nb.len() != 2) {
        return None;
    }
    let mut used: BTreeSet<Edge> = BTreeSet::new();
    let mut cycles = Vec::new();
    for (&start, _) in &incident {
        if used.contains(&ordered(start, incident[&start][0])) {
            continue;
        }
        let mut cycle = vec![start];
        let (mut prev, mut cur) = (start, incident[&start][0]);
        used.insert(ordered(prev, cur));
        while cur != start {
            cycle.push(cur);
            let nb = &incident[&cur];
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            used.insert(ordered(cur, next));
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    Some(cycles)
}

/// Number of times a closed vertex walk wraps around the tube axis, or
/// `None` if the graph carries no lattice positions or the walk uses a
/// non-edge.
pub fn axial_winding(g: &MolecularGraph, spec: &TubuleneSpec, cycle: &[usize]) -> Option<i64> {
    let pos = g.positions()?;
    let period = spec.period();
    let mut total = (0i64, 0i64);
    for i in 0..cycle.len() {
        let a = pos[cycle[i]];
        let b = pos[cycle[(i + 1) % cycle.len()]];
        let diff = (b.0 - a.0, b.1 - a.1);
        let step = (-2..=2)
            .map(|j| (diff.0 + j * period.0, diff.1 + j * period.1))
            .find(|d| EDGE_VECTORS.contains(d))?;
        total = (total.0 + step.0, total.1 + step.1);
    }
    if total == (0, 0) {
        return Some(0);
    }
    let k = total.0.checked_div(period.0).or(total.1.checked_div(period.1))?;
    (total == (k * period.0, k * period.1)).then_some(k)
}
