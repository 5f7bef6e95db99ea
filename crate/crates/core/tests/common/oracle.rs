//! Brute-force reference implementations. They share no search code with
//! the library: matchings and covers come from plain edge-subset recursion,
//! convex subgraphs from subset enumeration with an explicit isomorphism
//! test, and the C60 matching count from a Pfaffian orientation.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use gzz::chemgraph::{MolecularGraph, RotationSystem};

pub type EdgeList = Vec<(usize, usize)>;

/// All perfect matchings as sorted edge lists, by include/exclude recursion
/// over the edge list.
pub fn matchings(n: usize, edges: &[(usize, usize)]) -> BTreeSet<EdgeList> {
    // last[v]: index of the last edge touching v; a vertex still free after
    // that edge can never be covered.
    let mut last = vec![None; n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        last[a] = Some(i);
        last[b] = Some(i);
    }
    let mut out = BTreeSet::new();
    if last.iter().any(Option::is_none) {
        return out;
    }
    let mut used = vec![false; n];
    let mut chosen = Vec::new();
    fn rec(
        i: usize,
        edges: &[(usize, usize)],
        last: &[Option<usize>],
        used: &mut [bool],
        chosen: &mut EdgeList,
        out: &mut BTreeSet<EdgeList>,
    ) {
        if i == edges.len() {
            if used.iter().all(|&u| u) {
                let mut m = chosen.clone();
                m.sort_unstable();
                out.insert(m);
            }
            return;
        }
        let (a, b) = edges[i];
        let dead_after = |used: &[bool]| {
            [a, b]
                .iter()
                .any(|&v| last[v] == Some(i) && !used[v])
        };
        if !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            chosen.push((a.min(b), a.max(b)));
            rec(i + 1, edges, last, used, chosen, out);
            chosen.pop();
            used[a] = false;
            used[b] = false;
        }
        if !dead_after(used) {
            rec(i + 1, edges, last, used, chosen, out);
        }
    }
    rec(0, edges, &last, &mut used, &mut chosen, &mut out);
    out
}

pub fn graph_matchings(g: &MolecularGraph) -> BTreeSet<EdgeList> {
    matchings(g.vertex_count(), g.edges())
}

/// Hexagonal faces as vertex sets, and fused pairs as the union of two
/// hexagons sharing exactly one edge.
fn cycle_shapes(g: &MolecularGraph) -> (Vec<BTreeSet<usize>>, Vec<BTreeSet<usize>>) {
    let hexes: Vec<BTreeSet<usize>> = g
        .faces()
        .iter()
        .filter(|f| f.boundary.len() == 6)
        .map(|f| f.boundary.iter().copied().collect())
        .collect();
    let mut pairs = Vec::new();
    for i in 0..hexes.len() {
        for j in i + 1..hexes.len() {
            let common: Vec<usize> = hexes[i].intersection(&hexes[j]).copied().collect();
            if common.len() == 2 && g.has_edge(common[0], common[1]) {
                pairs.push(hexes[i].union(&hexes[j]).copied().collect());
            }
        }
    }
    (hexes, pairs)
}

/// Every spanning subgraph whose components are hexagonal faces, fused-pair
/// perimeters or single edges, keyed by (#C6, #C10). Each cover is its
/// sorted edge list.
pub fn covers(g: &MolecularGraph) -> BTreeMap<(usize, usize), BTreeSet<EdgeList>> {
    let n = g.vertex_count();
    let edges = g.edges();
    let (hexes, pairs) = cycle_shapes(g);
    let mut out: BTreeMap<(usize, usize), BTreeSet<EdgeList>> = BTreeMap::new();
    let mut deg = vec![0u8; n];
    let mut chosen = Vec::new();

    let mut classify = |chosen: &EdgeList| {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in chosen {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let (mut k, mut l) = (0, 0);
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            let cycle = comp.iter().all(|&v| adj[v].len() == 2);
            match (comp.len(), cycle) {
                (2, false) => {}
                (6, true) if hexes.contains(&comp) => k += 1,
                (10, true) if pairs.contains(&comp) => l += 1,
                _ => return None,
            }
        }
        Some((k, l))
    };

    fn rec<F: FnMut(&EdgeList) -> Option<(usize, usize)>>(
        i: usize,
        edges: &[(usize, usize)],
        deg: &mut [u8],
        chosen: &mut EdgeList,
        classify: &mut F,
        out: &mut BTreeMap<(usize, usize), BTreeSet<EdgeList>>,
    ) {
        if i == edges.len() {
            if deg.iter().all(|&d| d > 0) {
                if let Some(key) = classify(chosen) {
                    let mut c = chosen.clone();
                    c.sort_unstable();
                    out.entry(key).or_default().insert(c);
                }
            }
            return;
        }
        let (a, b) = edges[i];
        if deg[a] < 2 && deg[b] < 2 {
            deg[a] += 1;
            deg[b] += 1;
            chosen.push((a.min(b), a.max(b)));
            rec(i + 1, edges, deg, chosen, classify, out);
            chosen.pop();
            deg[a] -= 1;
            deg[b] -= 1;
        }
        rec(i + 1, edges, deg, chosen, classify, out);
    }
    rec(0, edges, &mut deg, &mut chosen, &mut classify, &mut out);
    out
}

/// Resonance graph from scratch: matchings (sorted as edge lists) are
/// adjacent when their symmetric difference is the edge set of a hexagon.
pub struct Resonance {
    pub matchings: Vec<EdgeList>,
    pub adj: Vec<BTreeSet<usize>>,
}

pub fn resonance(g: &MolecularGraph) -> Resonance {
    let ms: Vec<EdgeList> = graph_matchings(g).into_iter().collect();
    let hex_edges: Vec<BTreeSet<(usize, usize)>> = g
        .faces()
        .iter()
        .filter(|f| f.boundary.len() == 6)
        .map(|f| {
            (0..6)
                .map(|i| {
                    let (a, b) = (f.boundary[i], f.boundary[(i + 1) % 6]);
                    (a.min(b), a.max(b))
                })
                .collect()
        })
        .collect();
    let mut adj = vec![BTreeSet::new(); ms.len()];
    for i in 0..ms.len() {
        let a: BTreeSet<_> = ms[i].iter().copied().collect();
        for j in i + 1..ms.len() {
            let b: BTreeSet<_> = ms[j].iter().copied().collect();
            let diff: BTreeSet<_> = a.symmetric_difference(&b).copied().collect();
            if hex_edges.contains(&diff) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    Resonance { matchings: ms, adj }
}

fn all_pairs_distances(adj: &[BTreeSet<usize>]) -> Vec<Vec<u32>> {
    let n = adj.len();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for &j in &adj[i] {
            d[i][j] = 1;
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][m] + d[m][j] < d[i][j] {
                    d[i][j] = d[i][m] + d[m][j];
                }
            }
        }
    }
    d
}

/// Vertices of `Q_{k,l}` as tuples, with adjacency lists.
fn qkl(k: usize, l: usize) -> Vec<BTreeSet<usize>> {
    let mut tuples: Vec<Vec<u8>> = vec![vec![]];
    for i in 0..k + l {
        let radix = if i < k { 2 } else { 3 };
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..radix).map(move |c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    let adjacent = |a: &[u8], b: &[u8]| {
        let diffs: Vec<u8> = a.iter().zip(b).map(|(x, y)| x.abs_diff(*y)).filter(|&d| d > 0).collect();
        diffs == [1]
    };
    (0..tuples.len())
        .map(|i| {
            (0..tuples.len())
                .filter(|&j| adjacent(&tuples[i], &tuples[j]))
                .collect()
        })
        .collect()
}

/// Backtracking test for an isomorphism between two small graphs.
fn isomorphic(a: &[BTreeSet<usize>], b: &[BTreeSet<usize>]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let mut da: Vec<usize> = a.iter().map(BTreeSet::len).collect();
    let mut db: Vec<usize> = b.iter().map(BTreeSet::len).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(i: usize, a: &[BTreeSet<usize>], b: &[BTreeSet<usize>], map: &mut [usize], used: &mut [bool]) -> bool {
        if i == a.len() {
            return true;
        }
        for c in 0..b.len() {
            if used[c] || a[i].len() != b[c].len() {
                continue;
            }
            let ok = (0..i).all(|j| a[i].contains(&j) == b[c].contains(&map[j]));
            if ok {
                map[i] = c;
                used[c] = true;
                if rec(i + 1, a, b, map, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }
    rec(0, a, b, &mut map, &mut used)
}

fn shape_of_size(size: usize) -> Option<(usize, usize)> {
    let mut s = size;
    let mut k = 0;
    while s % 2 == 0 {
        s /= 2;
        k += 1;
    }
    let mut l = 0;
    while s % 3 == 0 {
        s /= 3;
        l += 1;
    }
    (s == 1).then_some((k, l))
}

/// Every vertex subset of `adj` that is convex (contains every vertex on
/// every geodesic between two members) and induces some `Q_{k,l}`.
pub fn convex_qkl(adj: &[BTreeSet<usize>]) -> BTreeMap<(usize, usize), BTreeSet<Vec<usize>>> {
    induced_qkl(adj, true)
}

/// Vertex subsets inducing some `Q_{k,l}`, optionally only convex ones.
pub fn induced_qkl(adj: &[BTreeSet<usize>], convex_only: bool) -> BTreeMap<(usize, usize), BTreeSet<Vec<usize>>> {
    let n = adj.len();
    assert!(n <= 20, "subset enumeration on {n} vertices");
    let d = all_pairs_distances(adj);
    let mut shapes = BTreeMap::new();
    let mut out: BTreeMap<(usize, usize), BTreeSet<Vec<usize>>> = BTreeMap::new();
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let Some(shape) = shape_of_size(set.len()) else {
            continue;
        };
        let convex = !convex_only || set.iter().all(|&u| {
            set.iter().all(|&v| {
                (0..n).all(|w| mask & (1 << w) != 0 || d[u][w] + d[w][v] != d[u][v])
            })
        });
        if !convex {
            continue;
        }
        let pos: BTreeMap<usize, usize> = set.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let induced: Vec<BTreeSet<usize>> = set
            .iter()
            .map(|v| adj[*v].iter().filter_map(|w| pos.get(w).copied()).collect())
            .collect();
        let target = shapes.entry(shape).or_insert_with(|| qkl(shape.0, shape.1));
        if isomorphic(&induced, target) {
            out.entry(shape).or_default().insert(set);
        }
    }
    out
}

/// Faces traced directly from a rotation system: after arriving at `v`
/// from `u`, leave along the neighbor following `u` in `v`'s rotation.
fn trace(rs: &RotationSystem) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut faces = Vec::new();
    for u in 0..rs.vertex_count() {
        for &v in rs.rotation(u) {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                face.push(a);
                let rot = rs.rotation(b);
                let i = rot.iter().position(|&x| x == a).unwrap();
                let c = rot[(i + 1) % rot.len()];
                (a, b) = (b, c);
            }
            faces.push(face);
        }
    }
    faces
}

/// Determinant by fraction-free Gaussian elimination.
fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Number of perfect matchings of a plane graph given by a rotation system,
/// from a Kasteleyn orientation: every face but one gets an odd number of
/// edges oriented along its traversal, and then the skew adjacency matrix
/// has determinant equal to the square of the count.
pub fn kasteleyn_count(rs: &RotationSystem) -> u128 {
    let n = rs.vertex_count();
    let faces = trace(rs);
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    // orient[(a, b)] with a < b: true means a -> b.
    let mut orient: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    // Spanning tree by DFS, tree edges oriented low -> high.
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in rs.rotation(v) {
            if !seen[w] {
                seen[w] = true;
                orient.insert(key(v, w), true);
                stack.push(w);
            }
        }
    }
    // The non-tree edges form a spanning tree of the dual. Peel faces with
    // a single unoriented edge, leaving the last face unconstrained.
    let mut done = vec![false; faces.len()];
    loop {
        let mut progressed = false;
        for (f, face) in faces.iter().enumerate() {
            if done[f] {
                continue;
            }
            let darts: Vec<(usize, usize)> = (0..face.len()).map(|i| (face[i], face[(i + 1) % face.len()])).collect();
            let open: Vec<&(usize, usize)> = darts.iter().filter(|&&(a, b)| !orient.contains_key(&key(a, b))).collect();
            if open.len() != 1 {
                continue;
            }
            let along = darts
                .iter()
                .filter(|&&(a, b)| orient.get(&key(a, b)).is_some_and(|&fwd| fwd == (a < b)))
                .count();
            let &(a, b) = open[0];
            // Make the total count of edges along the face odd.
            let forward = along % 2 == 0;
            orient.insert(key(a, b), if forward { a < b } else { a > b });
            done[f] = true;
            progressed = true;
        }
        if !progressed {
            break;
        }
    }
    assert_eq!(orient.len(), 3 * n / 2, "every edge oriented");
    let mut m = vec![vec![0i128; n]; n];
    for (&(a, b), &fwd) in &orient {
        let s = if fwd { 1 } else { -1 };
        m[a][b] = s;
        m[b][a] = -s;
    }
    let det = bareiss(m);
    let root = (det as f64).sqrt().round() as u128;
    assert_eq!((root * root) as i128, det, "determinant is a perfect square");
    root
}
