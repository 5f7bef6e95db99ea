//! The map from generalized Clar covers to convex `Q_{k,l}` subgraphs of the
//! resonance graph, and checks that it is a bijection.
//!
//! A cover fixes the free edges and leaves each cycle component a choice of
//! local matching: two for a hexagon, three for a fused pair. The product of
//! these choices is the image, labeled coordinate-wise.

use serde::Serialize;
use thiserror::Error;

use crate::chemgraph::{Edge, FusedPair, MolecularGraph};
use crate::clarcover::{enumerate_generalized_clar_covers, GeneralizedClarCover};
use crate::cubepoly::{find_convex_qkl, verify_embedding, QklEmbedding, QklShape};
use crate::resonance::ResonanceGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("InvalidCover: {0}")]
    InvalidCover(String),
}

/// Coordinates of a matching in the image of a cover: one entry in `{0, 1}`
/// per hexagon, then one in `{0, 1, 2}` per fused pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PossibilityLabel {
    pub hexagons: Vec<u8>,
    pub pairs: Vec<u8>,
}

impl PossibilityLabel {
    pub fn tuple(&self) -> Vec<u8> {
        self.hexagons.iter().chain(&self.pairs).copied().collect()
    }
}

/// Alternating matchings of a hexagon boundary: possibility 0 matches
/// `b0 b1`, possibility 1 matches `b1 b2`.
fn hexagon_options(b: &[usize]) -> [Vec<Edge>; 2] {
    let pick = |start: usize| (0..3).map(|i| (b[(2 * i + start) % 6], b[(2 * i + start + 1) % 6])).collect();
    [pick(0), pick(1)]
}

/// Local matchings of a fused pair. Possibility 1 contains the shared edge;
/// possibility 0 and 2 are reached from it by flipping the first and the
/// second hexagon respectively.
pub(crate) fn pair_options(g: &MolecularGraph, p: &FusedPair) -> [Vec<Edge>; 3] {
    let side = |f: usize| {
        let b = &g.faces()[f].boundary;
        let [a, c] = hexagon_options(b);
        let has_shared = |m: &Vec<Edge>| m.iter().any(|&(x, y)| crate::chemgraph::ordered(x, y) == p.shared);
        if has_shared(&a) {
            (a, c)
        } else {
            (c, a)
        }
    };
    let (first_with, first_without) = side(p.first);
    let (second_with, second_without) = side(p.second);
    let rest = |m: &[Edge]| -> Vec<Edge> {
        m.iter()
            .copied()
            .filter(|&(x, y)| crate::chemgraph::ordered(x, y) != p.shared)
            .collect()
    };
    let mut one = first_with.clone();
    one.extend(rest(&second_with));
    let mut zero = first_without;
    zero.extend(rest(&second_with));
    let mut two = rest(&first_with);
    two.extend(second_without);
    [zero, one, two]
}

/// Builds the image of `cover` in the resonance graph, labeled by
/// possibility tuples in the order of [`QklShape::index_of`].
pub fn clar_cover_to_subgraph(
    g: &MolecularGraph,
    r: &ResonanceGraph,
    cover: &GeneralizedClarCover,
) -> Result<QklEmbedding, BijectionError> {
    let (k, l) = cover.shape();
    let shape = QklShape::new(k, l);
    let size = shape
        .vertex_count()
        .ok_or_else(|| BijectionError::InvalidCover("shape too large".into()))?;
    let mut options: Vec<Vec<Vec<Edge>>> = Vec::with_capacity(k + l);
    for &h in &cover.hexagons {
        let face = g
            .face(h)
            .filter(|f| f.is_hexagon())
            .ok_or_else(|| BijectionError::InvalidCover(format!("{h} is not a hexagon")))?;
        options.push(hexagon_options(&face.boundary).to_vec());
    }
    for &p in &cover.pairs {
        let pair = g
            .fused_pairs()
            .get(p)
            .ok_or_else(|| BijectionError::InvalidCover(format!("no fused pair {p}")))?;
        options.push(pair_options(g, pair).to_vec());
    }

    let n = g.vertex_count();
    let mut vertex_map = Vec::with_capacity(size);
    for index in 0..size {
        let tuple = shape.tuple_of(index);
        let mut partner = vec![usize::MAX; n];
        let chosen = tuple.iter().zip(&options).flat_map(|(&c, opts)| &opts[c as usize]);
        for &(a, b) in chosen.chain(&cover.free_edges) {
            if a >= n || b >= n || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(BijectionError::InvalidCover(format!("edge ({a}, {b}) overlaps")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        let id = r.id_of(&partner).ok_or_else(|| {
            BijectionError::InvalidCover(format!("tuple {tuple:?} is not a perfect matching"))
        })?;
        vertex_map.push(id);
    }
    Ok(QklEmbedding { shape, vertex_map })
}

/// Possibility label of the `index`-th image vertex of a cover.
pub fn possibility_label(cover: &GeneralizedClarCover, index: usize) -> PossibilityLabel {
    let (k, l) = cover.shape();
    let t = QklShape::new(k, l).tuple_of(index);
    PossibilityLabel {
        hexagons: t[..k].to_vec(),
        pairs: t[k..].to_vec(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeCheck {
    pub k: usize,
    pub l: usize,
    pub covers: u64,
    pub subgraphs: u64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BijectionCounterexample {
    /// No image could be built for the cover.
    InvalidCover { cover: GeneralizedClarCover, reason: String },
    /// The image is not a convex induced `Q_{k,l}` under its labeling.
    NotAnEmbedding { cover: GeneralizedClarCover, vertices: Vec<usize> },
    /// Two covers share an image.
    NotInjective {
        cover: GeneralizedClarCover,
        other: GeneralizedClarCover,
        vertices: Vec<usize>,
    },
    /// A convex `Q_{k,l}` that no cover maps to.
    NotSurjective { k: usize, l: usize, vertices: Vec<usize> },
    /// An image the subgraph search did not report.
    UnexpectedImage { cover: GeneralizedClarCover, vertices: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub passed: bool,
    pub shapes: Vec<ShapeCheck>,
    pub counterexample: Option<BijectionCounterexample>,
}

fn check_shape(
    g: &MolecularGraph,
    r: &ResonanceGraph,
    covers: &[GeneralizedClarCover],
    subgraphs: &[Vec<usize>],
    k: usize,
    l: usize,
) -> Option<BijectionCounterexample> {
    let mut images: Vec<(Vec<usize>, usize)> = Vec::with_capacity(covers.len());
    for (i, cover) in covers.iter().enumerate() {
        let e = match clar_cover_to_subgraph(g, r, cover) {
            Ok(e) => e,
            Err(BijectionError::InvalidCover(reason)) => {
                return Some(BijectionCounterexample::InvalidCover {
                    cover: cover.clone(),
                    reason,
                })
            }
        };
        if !verify_embedding(r.graph(), &e) {
            return Some(BijectionCounterexample::NotAnEmbedding {
                cover: cover.clone(),
                vertices: e.vertex_set(),
            });
        }
        images.push((e.vertex_set(), i));
    }
    images.sort();
    for w in images.windows(2) {
        if w[0].0 == w[1].0 {
            return Some(BijectionCounterexample::NotInjective {
                cover: covers[w[0].1].clone(),
                other: covers[w[1].1].clone(),
                vertices: w[0].0.clone(),
            });
        }
    }
    // Both lists are sorted and duplicate-free; report the first difference.
    let (mut i, mut j) = (0, 0);
    while i < images.len() || j < subgraphs.len() {
        match (images.get(i), subgraphs.get(j)) {
            (Some((a, _)), Some(b)) if a == b => {
                i += 1;
                j += 1;
            }
            (Some((a, c)), b) if b.map_or(true, |b| a < b) => {
                return Some(BijectionCounterexample::UnexpectedImage {
                    cover: covers[*c].clone(),
                    vertices: a.clone(),
                });
            }
            (_, Some(b)) => {
                return Some(BijectionCounterexample::NotSurjective {
                    k,
                    l,
                    vertices: b.clone(),
                });
            }
            (_, None) => unreachable!("loop guard"),
        }
    }
    None
}

/// For every shape with covers or subgraphs, checks that each cover maps to
/// a convex `Q_{k,l}`, that distinct covers have distinct images, and that
/// the images are exactly the convex `Q_{k,l}` subgraphs of `r`.
pub fn verify_bijection(g: &MolecularGraph, r: &ResonanceGraph) -> BijectionReport {
    let h = r.graph();
    let mut shapes = Vec::new();
    let mut counterexample = None;
    for l in 0.. {
        let mut row_empty = true;
        for k in 0.. {
            let covers = enumerate_generalized_clar_covers(g, k, l);
            let fits = QklShape::new(k, l).vertex_count().is_some_and(|s| s <= h.vertex_count());
            let subgraphs = if fits { find_convex_qkl(h, k, l) } else { Vec::new() };
            // Both sides are monotone: a C6 or C10 can be broken into K2s,
            // and a convex Q_{k,l} contains every smaller convex face.
            if covers.is_empty() && subgraphs.is_empty() {
                break;
            }
            row_empty = false;
            let failure = check_shape(g, r, &covers, &subgraphs, k, l);
            shapes.push(ShapeCheck {
                k,
                l,
                covers: covers.len() as u64,
                subgraphs: subgraphs.len() as u64,
                passed: failure.is_none(),
            });
            if counterexample.is_none() {
                counterexample = failure;
            }
        }
        if row_empty {
            break;
        }
    }
    BijectionReport {
        passed: counterexample.is_none(),
        shapes,
        counterexample,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourCycleCounterexample {
    /// `a b c d` in cycle order, `a` the smallest.
    pub cycle: [usize; 4],
    /// Hexagons on `ab`, `bc`, `cd`, `da`.
    pub labels: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourCycleReport {
    pub passed: bool,
    pub cycles: u64,
    pub counterexample: Option<FourCycleCounterexample>,
}

/// Checks every 4-cycle of the resonance graph: opposite edges flip the same
/// hexagon, and the two hexagons involved are vertex-disjoint.
pub fn verify_four_cycle_lemma(g: &MolecularGraph, r: &ResonanceGraph) -> FourCycleReport {
    let mut cycles = 0;
    let mut counterexample = None;
    let label = |u, v| r.label(u, v).expect("edge of the resonance graph");
    for a in 0..r.vertex_count() {
        let ns = r.neighbors(a);
        for (i, &b) in ns.iter().enumerate() {
            for &d in &ns[i + 1..] {
                if b < a || d < a {
                    continue;
                }
                for &c in r.neighbors(b) {
                    if c <= a || c == d || !r.graph().has_edge(c, d) {
                        continue;
                    }
                    cycles += 1;
                    let labels = [label(a, b), label(b, c), label(c, d), label(d, a)];
                    let disjoint = {
                        let h1 = &g.faces()[labels[0]];
                        let h2 = &g.faces()[labels[3]];
                        !h1.boundary.iter().any(|&v| h2.contains(v))
                    };
                    let ok = labels[0] == labels[2] && labels[1] == labels[3] && disjoint;
                    if !ok && counterexample.is_none() {
                        counterexample = Some(FourCycleCounterexample {
                            cycle: [a, b, c, d],
                            labels,
                        });
                    }
                }
            }
        }
    }
    FourCycleReport {
        passed: counterexample.is_none(),
        cycles,
        counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chemgraph::{build_benzenoid, HexCoord};
    use crate::matchings::enumerate_perfect_matchings;
    use crate::resonance::build_resonance_graph;

    fn setup(cells: &[(i32, i32)]) -> (MolecularGraph, ResonanceGraph) {
        let g = build_benzenoid(cells.iter().map(|&(q, r)| HexCoord::new(q, r))).unwrap();
        let r = build_resonance_graph(&g, &enumerate_perfect_matchings(&g));
        (g, r)
    }

    #[test]
    fn benzene_cover_maps_onto_the_whole_resonance_graph() {
        let (g, r) = setup(&[(0, 0)]);
        let cover = &enumerate_generalized_clar_covers(&g, 1, 0)[0];
        let e = clar_cover_to_subgraph(&g, &r, cover).unwrap();
        assert_eq!(e.vertex_set(), vec![0, 1]);
        assert!(verify_embedding(r.graph(), &e));
    }

    #[test]
    fn naphthalene_middle_label_holds_the_shared_edge() {
        let (g, r) = setup(&[(0, 0), (1, 0)]);
        let cover = &enumerate_generalized_clar_covers(&g, 0, 1)[0];
        let e = clar_cover_to_subgraph(&g, &r, cover).unwrap();
        assert_eq!(e.vertex_set(), vec![0, 1, 2]);
        let (s, t) = g.fused_pairs()[0].shared;
        for (i, &m) in e.vertex_map.iter().enumerate() {
            assert_eq!(r.matching(m).contains(s, t), i == 1);
            assert_eq!(possibility_label(cover, i).pairs, vec![i as u8]);
        }
        // Labels 0 and 2 are one flip away from label 1, via the first and
        // second hexagon of the pair.
        let p = g.fused_pairs()[0];
        assert_eq!(r.label(e.vertex_map[0], e.vertex_map[1]), Some(p.first));
        assert_eq!(r.label(e.vertex_map[1], e.vertex_map[2]), Some(p.second));
    }

    #[test]
    fn anthracene_pair_covers_are_convex_triples() {
        let (g, r) = setup(&[(0, 0), (1, 0), (2, 0)]);
        let covers = enumerate_generalized_clar_covers(&g, 0, 1);
        assert_eq!(covers.len(), 2);
        for cover in &covers {
            let e = clar_cover_to_subgraph(&g, &r, cover).unwrap();
            assert_eq!(e.vertex_map.len(), 3);
            assert!(verify_embedding(r.graph(), &e));
        }
        let report = verify_bijection(&g, &r);
        assert!(report.passed, "{report:?}");
        let shapes: Vec<_> = report.shapes.iter().map(|s| (s.k, s.l, s.covers)).collect();
        assert_eq!(shapes, vec![(0, 0, 4), (1, 0, 3), (0, 1, 2)]);
        let lemma = verify_four_cycle_lemma(&g, &r);
        assert!(lemma.passed);
        assert_eq!(lemma.cycles, 0);
    }

    #[test]
    fn pyrene_passes_both_checks() {
        let (g, r) = setup(&[(0, 0), (1, 0), (0, 1), (1, -1)]);
        assert!(verify_bijection(&g, &r).passed);
        let lemma = verify_four_cycle_lemma(&g, &r);
        assert!(lemma.passed);
        assert!(lemma.cycles > 0);
    }

    #[test]
    fn broken_cover_is_reported() {
        let (g, r) = setup(&[(0, 0), (1, 0)]);
        let bad = GeneralizedClarCover {
            hexagons: vec![0],
            pairs: vec![],
            free_edges: vec![],
        };
        assert!(matches!(
            clar_cover_to_subgraph(&g, &r, &bad),
            Err(BijectionError::InvalidCover(_))
        ));
    }
}
