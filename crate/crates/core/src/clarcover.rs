//! Generalized Clar covers: spanning subgraphs whose components are
//! hexagonal faces (C6), perimeters of fused hexagon pairs (C10), and single
//! edges (K2).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chemgraph::{Edge, FaceId, FusedPair, MolecularGraph};
use crate::matchings::{MatchingSearch, BLOCKED, FREE};
use crate::polynomial::{BivariatePolynomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GeneralizedClarCover {
    /// Hexagonal faces used as C6 components, ascending.
    pub hexagons: Vec<FaceId>,
    /// Indices into [`MolecularGraph::fused_pairs`] used as C10 components,
    /// ascending.
    pub pairs: Vec<usize>,
    /// K2 components `(u, v)` with `u < v`, sorted.
    pub free_edges: Vec<Edge>,
}

impl GeneralizedClarCover {
    pub fn shape(&self) -> (usize, usize) {
        (self.hexagons.len(), self.pairs.len())
    }
}

/// One C6 or C10 candidate with the vertices it occupies.
struct Cycle {
    vertices: Vec<usize>,
}

fn cycles(g: &MolecularGraph) -> (Vec<Cycle>, Vec<Cycle>) {
    let hexes = g
        .hexagons()
        .into_iter()
        .map(|h| Cycle {
            vertices: g.faces()[h].boundary.clone(),
        })
        .collect();
    let pairs = g
        .fused_pairs()
        .iter()
        .map(|p| {
            let mut vertices: Vec<usize> = g.faces()[p.first]
                .boundary
                .iter()
                .chain(&g.faces()[p.second].boundary)
                .copied()
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            Cycle { vertices }
        })
        .collect();
    (hexes, pairs)
}

/// Walks vertex-disjoint selections of `k` hexagons followed by `l` fused
/// pairs, in lexicographic order of the chosen index lists.
struct SystemWalk<'a> {
    hexes: &'a [Cycle],
    pairs: &'a [Cycle],
    partner: Vec<usize>,
    chosen_hexes: Vec<usize>,
    chosen_pairs: Vec<usize>,
}

impl<'a> SystemWalk<'a> {
    fn free(&self, c: &Cycle) -> bool {
        c.vertices.iter().all(|&v| self.partner[v] == FREE)
    }

    fn mark(&mut self, c: &Cycle, value: usize) {
        for &v in &c.vertices {
            self.partner[v] = value;
        }
    }

    fn hexes<F: FnMut(&mut Self)>(&mut self, from: usize, k: usize, l: usize, visit: &mut F) {
        if self.chosen_hexes.len() == k {
            self.pairs_from(0, l, visit);
            return;
        }
        for i in from..self.hexes.len() {
            let c = &self.hexes[i];
            if self.free(c) {
                self.mark(c, BLOCKED);
                self.chosen_hexes.push(i);
                self.hexes(i + 1, k, l, visit);
                self.chosen_hexes.pop();
                self.mark(c, FREE);
            }
        }
    }

    fn pairs_from<F: FnMut(&mut Self)>(&mut self, from: usize, l: usize, visit: &mut F) {
        if self.chosen_pairs.len() == l {
            visit(self);
            return;
        }
        for i in from..self.pairs.len() {
            let c = &self.pairs[i];
            if self.free(c) {
                self.mark(c, BLOCKED);
                self.chosen_pairs.push(i);
                self.pairs_from(i + 1, l, visit);
                self.chosen_pairs.pop();
                self.mark(c, FREE);
            }
        }
    }
}

/// All generalized Clar covers with exactly `k` C6 and `l` C10 components,
/// ordered by (hexagon ids, pair indices, canonical matching of the rest).
pub fn enumerate_generalized_clar_covers(
    g: &MolecularGraph,
    k: usize,
    l: usize,
) -> Vec<GeneralizedClarCover> {
    let (hexes, pairs) = cycles(g);
    let hexagon_ids = g.hexagons();
    let mut walk = SystemWalk {
        hexes: &hexes,
        pairs: &pairs,
        partner: vec![FREE; g.vertex_count()],
        chosen_hexes: Vec::new(),
        chosen_pairs: Vec::new(),
    };
    let mut out = Vec::new();
    walk.hexes(0, k, l, &mut |w| {
        let hexagons: Vec<FaceId> = w.chosen_hexes.iter().map(|&i| hexagon_ids[i]).collect();
        let chosen_pairs = w.chosen_pairs.clone();
        MatchingSearch::new(g.adjacency(), w.partner.clone()).for_each(&mut |p| {
            let free_edges = (0..p.len())
                .filter(|&v| p[v] != BLOCKED && v < p[v])
                .map(|v| (v, p[v]))
                .collect();
            out.push(GeneralizedClarCover {
                hexagons: hexagons.clone(),
                pairs: chosen_pairs.clone(),
                free_edges,
            });
        });
    });
    out
}

/// Generalized Zhang-Zhang polynomial: the coefficient of `x^k y^l` counts
/// generalized Clar covers with `k` C6 and `l` C10 components.
pub fn gzz_polynomial(g: &MolecularGraph) -> Result<BivariatePolynomial, PolyError> {
    let (hexes, pairs) = cycles(g);
    let n = g.vertex_count();
    let mut poly = BivariatePolynomial::zero();
    let mut overflow = None;
    for l in 0..=pairs.len() {
        for k in 0..=hexes.len() {
            if 6 * k + 10 * l > n {
                break;
            }
            let mut walk = SystemWalk {
                hexes: &hexes,
                pairs: &pairs,
                partner: vec![FREE; n],
                chosen_hexes: Vec::new(),
                chosen_pairs: Vec::new(),
            };
            let mut systems = 0u64;
            walk.hexes(0, k, l, &mut |w| {
                systems += 1;
                let c = MatchingSearch::new(g.adjacency(), w.partner.clone()).count();
                if let Err(e) = poly.add_term(k as u32, l as u32, c) {
                    overflow.get_or_insert(e);
                }
            });
            // No vertex-disjoint system of this size means none larger.
            if systems == 0 {
                break;
            }
        }
    }
    match overflow {
        Some(e) => Err(e),
        None => Ok(poly),
    }
}

/// Classic Zhang-Zhang polynomial: the `y = 0` slice of the generalized one.
pub fn zz_polynomial(g: &MolecularGraph) -> Result<BivariatePolynomial, PolyError> {
    let (hexes, _) = cycles(g);
    let n = g.vertex_count();
    let mut poly = BivariatePolynomial::zero();
    for k in 0..=hexes.len() {
        if 6 * k > n {
            break;
        }
        let mut walk = SystemWalk {
            hexes: &hexes,
            pairs: &[],
            partner: vec![FREE; n],
            chosen_hexes: Vec::new(),
            chosen_pairs: Vec::new(),
        };
        let mut total = 0u64;
        let mut systems = 0u64;
        walk.hexes(0, k, 0, &mut |w| {
            systems += 1;
            let c = MatchingSearch::new(g.adjacency(), w.partner.clone()).count();
            total = total.saturating_add(c);
        });
        if systems == 0 {
            break;
        }
        if total == u64::MAX {
            return Err(PolyError::CoefficientOverflow(k as u32, 0));
        }
        poly.add_term(k as u32, 0, total)?;
    }
    Ok(poly)
}

/// Edges of the C10 perimeter of a fused pair (both hexagons minus the
/// shared edge).
pub fn perimeter_edges(g: &MolecularGraph, pair: &FusedPair) -> Vec<Edge> {
    let mut es: Vec<Edge> = g.faces()[pair.first]
        .edges()
        .chain(g.faces()[pair.second].edges())
        .filter(|&e| e != pair.shared)
        .collect();
    es.sort_unstable();
    es.dedup();
    es
}

/// Full edge set of the spanning subgraph a cover describes.
pub fn cover_edges(g: &MolecularGraph, cover: &GeneralizedClarCover) -> Vec<Edge> {
    let mut es: Vec<Edge> = cover
        .hexagons
        .iter()
        .flat_map(|&h| g.faces()[h].edges().collect::<Vec<_>>())
        .collect();
    for &p in &cover.pairs {
        es.extend(perimeter_edges(g, &g.fused_pairs()[p]));
    }
    es.extend(cover.free_edges.iter().copied());
    es.sort_unstable();
    es
}

/// Checks that the components of `cover` are valid, pairwise
/// vertex-disjoint and cover every vertex exactly once.
pub fn validate_cover(g: &MolecularGraph, cover: &GeneralizedClarCover) -> Result<(), String> {
    let mut owner = vec![None; g.vertex_count()];
    let mut claim = |v: usize, what: String| -> Result<(), String> {
        match owner.get_mut(v) {
            None => Err(format!("{what} uses unknown vertex {v}")),
            Some(Some(prev)) => Err(format!("vertex {v} is in both {prev} and {what}")),
            Some(slot) => {
                *slot = Some(what);
                Ok(())
            }
        }
    };
    for &h in &cover.hexagons {
        let face = g.face(h).filter(|f| f.is_hexagon()).ok_or(format!("{h} is not a hexagon"))?;
        for &v in &face.boundary {
            claim(v, format!("hexagon {h}"))?;
        }
    }
    for &p in &cover.pairs {
        let pair = g.fused_pairs().get(p).ok_or(format!("no fused pair {p}"))?;
        let vs: BTreeSet<usize> = perimeter_edges(g, pair)
            .into_iter()
            .flat_map(|(a, b)| [a, b])
            .collect();
        for v in vs {
            claim(v, format!("pair {p}"))?;
        }
    }
    for &(a, b) in &cover.free_edges {
        if !g.has_edge(a, b) {
            return Err(format!("({a}, {b}) is not an edge"));
        }
        claim(a, format!("edge ({a}, {b})"))?;
        claim(b, format!("edge ({a}, {b})"))?;
    }
    match owner.iter().position(Option::is_none) {
        Some(v) => Err(format!("vertex {v} is not covered")),
        None => Ok(()),
    }
}
