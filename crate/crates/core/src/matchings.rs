//! Perfect matchings (Kekulé structures), sextets and hexagon flips.

use serde::Serialize;
use thiserror::Error;

use crate::chemgraph::{Edge, FaceId, MolecularGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("UnknownFace: face {0} does not exist")]
    UnknownFace(FaceId),
    #[error("NotAHexagon: face {0} is a pentagon")]
    NotAHexagon(FaceId),
    #[error("NotASextet: face {0} does not meet the matching in three edges")]
    NotASextet(FaceId),
}

/// A perfect matching stored as a partner array. The derived ordering is
/// lexicographic on that array, which is the canonical enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PerfectMatching {
    partner: Vec<usize>,
}

impl PerfectMatching {
    /// Wraps a partner array, checking symmetry and that every pair is an
    /// edge of `g`.
    pub fn from_partners(g: &MolecularGraph, partner: Vec<usize>) -> Option<Self> {
        let n = g.vertex_count();
        let ok = partner.len() == n
            && (0..n).all(|v| {
                let w = partner[v];
                w < n && w != v && partner[w] == v && g.has_edge(v, w)
            });
        ok.then_some(Self { partner })
    }

    pub(crate) fn from_partners_unchecked(partner: Vec<usize>) -> Self {
        Self { partner }
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.partner.get(u) == Some(&v)
    }

    /// Matched edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.partner.len())
            .filter(|&v| v < self.partner[v])
            .map(|v| (v, self.partner[v]))
            .collect()
    }
}

pub(crate) const FREE: usize = usize::MAX;
pub(crate) const BLOCKED: usize = usize::MAX - 1;

/// Depth-first search over perfect matchings of the vertices marked
/// [`FREE`] in `partner`. Branches on the lowest free vertex, trying its
/// free neighbors in ascending order, so completions are produced in
/// lexicographic order of the partner array.
pub(crate) struct MatchingSearch<'a> {
    adjacency: &'a [Vec<usize>],
    partner: Vec<usize>,
}

impl<'a> MatchingSearch<'a> {
    pub(crate) fn new(adjacency: &'a [Vec<usize>], partner: Vec<usize>) -> Self {
        Self { adjacency, partner }
    }

    pub(crate) fn for_each<F: FnMut(&[usize])>(&mut self, visit: &mut F) {
        self.step(0, visit);
    }

    pub(crate) fn count(&mut self) -> u64 {
        let mut total = 0u64;
        self.for_each(&mut |_| total += 1);
        total
    }

    fn stranded(&self, v: usize) -> bool {
        self.partner[v] == FREE && !self.adjacency[v].iter().any(|&x| self.partner[x] == FREE)
    }

    fn step<F: FnMut(&[usize])>(&mut self, from: usize, visit: &mut F) {
        let Some(v) = (from..self.partner.len()).find(|&v| self.partner[v] == FREE) else {
            visit(&self.partner);
            return;
        };
        for i in 0..self.adjacency[v].len() {
            let w = self.adjacency[v][i];
            if self.partner[w] != FREE {
                continue;
            }
            self.partner[v] = w;
            self.partner[w] = v;
            let dead = self.adjacency[v]
                .iter()
                .chain(&self.adjacency[w])
                .any(|&x| self.stranded(x));
            if !dead {
                self.step(v + 1, visit);
            }
            self.partner[v] = FREE;
            self.partner[w] = FREE;
        }
    }
}

/// All perfect matchings of `g` in lexicographic order of their partner
/// arrays. Position in this list is the matching's id everywhere else.
pub fn enumerate_perfect_matchings(g: &MolecularGraph) -> Vec<PerfectMatching> {
    let mut out = Vec::new();
    let mut search = MatchingSearch::new(g.adjacency(), vec![FREE; g.vertex_count()]);
    search.for_each(&mut |p| out.push(PerfectMatching::from_partners_unchecked(p.to_vec())));
    out
}

pub fn count_perfect_matchings(g: &MolecularGraph) -> u64 {
    MatchingSearch::new(g.adjacency(), vec![FREE; g.vertex_count()]).count()
}

fn hexagon<'g>(g: &'g MolecularGraph, h: FaceId) -> Result<&'g [usize], MatchingError> {
    let face = g.face(h).ok_or(MatchingError::UnknownFace(h))?;
    if !face.is_hexagon() {
        return Err(MatchingError::NotAHexagon(h));
    }
    Ok(&face.boundary)
}

/// Whether hexagon `h` has exactly three of its edges in `m`.
pub fn is_sextet(g: &MolecularGraph, m: &PerfectMatching, h: FaceId) -> Result<bool, MatchingError> {
    let b = hexagon(g, h)?;
    Ok(sextet_parity(m.partners(), b).is_some())
}

/// For an alternating hexagon, `Some(0)` if the edge `b0 b1` is matched and
/// `Some(1)` otherwise.
pub(crate) fn sextet_parity(partner: &[usize], b: &[usize]) -> Option<usize> {
    let matched: Vec<bool> = (0..6).map(|i| partner[b[i]] == b[(i + 1) % 6]).collect();
    if matched[0] && matched[2] && matched[4] {
        Some(0)
    } else if matched[1] && matched[3] && matched[5] {
        Some(1)
    } else {
        None
    }
}

/// Rotates the three matched edges of a sextet to the other three.
pub fn flip(g: &MolecularGraph, m: &PerfectMatching, h: FaceId) -> Result<PerfectMatching, MatchingError> {
    let b = hexagon(g, h)?;
    let parity = sextet_parity(m.partners(), b).ok_or(MatchingError::NotASextet(h))?;
    let mut partner = m.partner.clone();
    flip_in_place(&mut partner, b, parity);
    Ok(PerfectMatching { partner })
}

pub(crate) fn flip_in_place(partner: &mut [usize], b: &[usize], parity: usize) {
    for i in 0..3 {
        let a = b[(2 * i + 1 - parity) % 6];
        let c = b[(2 * i + 2 - parity) % 6];
        partner[a] = c;
        partner[c] = a;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chemgraph::{build_benzenoid, HexCoord, RotationSystem, load_fullerene};

    fn chain(h: i32) -> MolecularGraph {
        build_benzenoid((0..h).map(|q| HexCoord::new(q, 0))).unwrap()
    }

    #[test]
    fn benzene_has_two_matchings_that_flip_into_each_other() {
        let g = chain(1);
        let ms = enumerate_perfect_matchings(&g);
        assert_eq!(ms.len(), 2);
        for m in &ms {
            assert!(is_sextet(&g, m, 0).unwrap());
        }
        assert_eq!(flip(&g, &ms[0], 0).unwrap(), ms[1]);
        assert_eq!(flip(&g, &ms[1], 0).unwrap(), ms[0]);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for h in 1..=5 {
            let g = chain(h);
            let ms = enumerate_perfect_matchings(&g);
            assert_eq!(ms.len(), h as usize + 1);
            assert!(ms.windows(2).all(|w| w[0] < w[1]));
            for m in &ms {
                assert!(PerfectMatching::from_partners(&g, m.partners().to_vec()).is_some());
            }
            assert_eq!(count_perfect_matchings(&g), ms.len() as u64);
        }
    }

    #[test]
    fn naphthalene_shared_edge_matching_is_not_a_sextet() {
        let g = chain(2);
        let shared = g.fused_pairs()[0].shared;
        let ms = enumerate_perfect_matchings(&g);
        let m = ms.iter().find(|m| m.contains(shared.0, shared.1)).unwrap();
        // With the shared edge matched, each hexagon still alternates.
        assert!(is_sextet(&g, m, 0).unwrap());
        assert!(is_sextet(&g, m, 1).unwrap());
        let others: Vec<_> = ms.iter().filter(|x| !x.contains(shared.0, shared.1)).collect();
        assert_eq!(others.len(), 2);
        for o in others {
            let sextets = (0..2).filter(|&h| is_sextet(&g, o, h).unwrap()).count();
            assert_eq!(sextets, 1);
            let not = (0..2).find(|&h| !is_sextet(&g, o, h).unwrap()).unwrap();
            assert_eq!(flip(&g, o, not), Err(MatchingError::NotASextet(not)));
        }
    }

    #[test]
    fn pentagon_is_rejected() {
        let g = load_fullerene(&RotationSystem::polar_triangulation(5).truncate()).unwrap();
        let ms = enumerate_perfect_matchings(&g);
        let pent = (0..g.faces().len()).find(|&f| !g.faces()[f].is_hexagon()).unwrap();
        assert_eq!(is_sextet(&g, &ms[0], pent), Err(MatchingError::NotAHexagon(pent)));
        assert_eq!(flip(&g, &ms[0], pent), Err(MatchingError::NotAHexagon(pent)));
        assert_eq!(is_sextet(&g, &ms[0], 999), Err(MatchingError::UnknownFace(999)));
    }

    #[test]
    fn flips_stay_in_the_enumeration() {
        let g = build_benzenoid([(0, 0), (1, 0), (0, 1), (1, -1)].map(|(q, r)| HexCoord::new(q, r)))
            .unwrap();
        let ms = enumerate_perfect_matchings(&g);
        for m in &ms {
            for h in g.hexagons() {
                if let Ok(f) = flip(&g, m, h) {
                    assert!(ms.binary_search(&f).is_ok());
                    assert_eq!(flip(&g, &f, h).unwrap(), *m);
                    let diff: Vec<_> = m
                        .edges()
                        .into_iter()
                        .filter(|e| !f.contains(e.0, e.1))
                        .collect();
                    assert_eq!(diff.len(), 3);
                    assert!(diff.iter().all(|e| g.faces()[h].edges().any(|x| x == *e)));
                }
            }
        }
    }
}
