//! Plain undirected graphs with memoized breadth-first distances.
//!
//! Used as the host graph for convex-subgraph searches; the resonance graph
//! is one of these plus edge labels.

use std::collections::VecDeque;
use std::sync::OnceLock;

use thiserror::Error;

/// Sentinel for "no path".
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("UnknownVertex: vertex {0} is not in a graph with {1} vertices")]
    UnknownVertex(usize, usize),
    #[error("EmptyVertexSet: convexity needs a nonempty vertex set")]
    EmptySet,
}

/// Unweighted shortest-path length; `None` means the endpoints lie in
/// different components.
pub type Distance = Option<u32>;

/// Simple undirected graph on `0..n` with sorted adjacency lists.
///
/// BFS rows are computed on first use and cached per source vertex; the
/// cache is safe to share between threads.
#[derive(Debug)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    rows: Vec<OnceLock<Box<[u32]>>>,
}

impl Clone for SimpleGraph {
    fn clone(&self) -> Self {
        Self::from_adjacency(self.adjacency.clone())
    }
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for SimpleGraph {}

impl SimpleGraph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops are
    /// dropped.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} vertices");
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_adjacency(adjacency)
    }

    fn from_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let rows = (0..adjacency.len()).map(|_| OnceLock::new()).collect();
        Self {
            adjacency,
            edge_count,
            rows,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v, self.vertex_count()))
        }
    }

    /// Distances from `source` to every vertex, [`UNREACHABLE`] for other
    /// components. Panics on an out-of-range source.
    pub fn distance_row(&self, source: usize) -> &[u32] {
        self.rows[source].get_or_init(|| self.bfs(source))
    }

    fn bfs(&self, source: usize) -> Box<[u32]> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist.into_boxed_slice()
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance, GraphError> {
        self.check(u)?;
        self.check(v)?;
        let d = self.distance_row(u)[v];
        Ok((d != UNREACHABLE).then_some(d))
    }

    /// Whether `set` contains every vertex of every shortest path between
    /// two of its vertices.
    ///
    /// For each `u` in the set, every geodesic from `u` to a set vertex `w`
    /// leaves `w` through a neighbor one step closer to `u`; the set is
    /// convex iff all such neighbors stay inside it.
    pub fn is_convex(&self, set: &[usize]) -> Result<bool, GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut member = vec![false; self.vertex_count()];
        for &v in set {
            self.check(v)?;
            member[v] = true;
        }
        Ok(self.is_convex_by(set, |x| member[x]))
    }

    /// [`is_convex`](Self::is_convex) with membership given by a predicate
    /// that must agree with `set`.
    pub(crate) fn is_convex_by<F: Fn(usize) -> bool>(&self, set: &[usize], member: F) -> bool {
        for &u in set {
            let row = self.distance_row(u);
            for &w in set {
                let dw = row[w];
                if dw == UNREACHABLE || dw == 0 {
                    continue;
                }
                for &x in self.neighbors(w) {
                    if row[x] + 1 == dw && !member(x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}
