//! Enumeration of benzenoid systems (hole-free polyhexes) up to rotation and
//! reflection, plus the named structures used as presets.

use std::collections::BTreeSet;

use super::benzenoid::NEIGHBOR_OFFSETS;
use super::{build_benzenoid, ChemError, HexCoord};

type Cells = Vec<(i32, i32)>;

fn rotate(c: (i32, i32)) -> (i32, i32) {
    (-c.1, c.0 + c.1)
}

fn reflect(c: (i32, i32)) -> (i32, i32) {
    (c.1, c.0)
}

fn normalize(mut cells: Cells) -> Cells {
    cells.sort_unstable();
    let (q0, r0) = cells[0];
    cells.iter_mut().for_each(|c| *c = (c.0 - q0, c.1 - r0));
    cells
}

/// Lexicographically smallest normalized image under the twelve lattice
/// symmetries.
fn canonical(cells: &[(i32, i32)]) -> Cells {
    let mut best: Option<Cells> = None;
    let mut cur: Cells = cells.to_vec();
    for _ in 0..6 {
        cur = cur.iter().map(|&c| rotate(c)).collect();
        for img in [cur.clone(), cur.iter().map(|&c| reflect(c)).collect()] {
            let img = normalize(img);
            if best.as_ref().map_or(true, |b| img < *b) {
                best = Some(img);
            }
        }
    }
    best.expect("twelve images")
}

/// Every benzenoid system with at most `max_hexagons` hexagons, one
/// representative per symmetry class, ordered by size and then by canonical
/// cell list.
pub fn benzenoids(max_hexagons: usize) -> Vec<Vec<HexCoord>> {
    let mut out = Vec::new();
    if max_hexagons == 0 {
        return out;
    }
    let mut layer: BTreeSet<Cells> = BTreeSet::from([vec![(0, 0)]]);
    for size in 1..=max_hexagons {
        for cells in &layer {
            let hexes: Vec<HexCoord> = cells.iter().map(|&(q, r)| HexCoord::new(q, r)).collect();
            match build_benzenoid(hexes.iter().copied()) {
                Ok(_) => out.push(hexes),
                Err(ChemError::HoleDetected { .. }) => {}
                Err(e) => unreachable!("grown polyhex failed to build: {e}"),
            }
        }
        if size == max_hexagons {
            break;
        }
        // Polyhexes with holes are kept as seeds: filling a hole can yield a
        // larger benzenoid.
        let mut next = BTreeSet::new();
        for cells in &layer {
            let present: BTreeSet<_> = cells.iter().copied().collect();
            for &(q, r) in cells {
                for (dq, dr) in NEIGHBOR_OFFSETS {
                    let c = (q + dq, r + dr);
                    if !present.contains(&c) {
                        let mut grown = cells.clone();
                        grown.push(c);
                        next.insert(canonical(&grown));
                    }
                }
            }
        }
        layer = next;
    }
    out
}

pub fn linear_chain(h: usize) -> Vec<HexCoord> {
    (0..h as i32).map(|q| HexCoord::new(q, 0)).collect()
}

/// Zigzag (angular) chain: annelation alternates between `a2` and `a1`.
pub fn zigzag_chain(h: usize) -> Vec<HexCoord> {
    (0..h as i32).map(|j| HexCoord::new(j / 2, (j + 1) / 2)).collect()
}

pub fn pyrene() -> Vec<HexCoord> {
    [(0, 0), (1, 0), (0, 1), (1, -1)]
        .map(|(q, r)| HexCoord::new(q, r))
        .to_vec()
}

pub fn coronene() -> Vec<HexCoord> {
    std::iter::once((0, 0))
        .chain(NEIGHBOR_OFFSETS)
        .map(|(q, r)| HexCoord::new(q, r))
        .collect()
}
