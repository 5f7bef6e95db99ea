use std::fmt;

use super::{ChemError, Family, MolecularGraph};

/// Combinatorial embedding: for each vertex, its neighbors in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(rotation: Vec<Vec<usize>>) -> Self {
        Self { rotation }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    fn dart_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.rotation.len() + 1);
        let mut acc = 0;
        for r in &self.rotation {
            offsets.push(acc);
            acc += r.len();
        }
        offsets.push(acc);
        offsets
    }

    fn position(&self, v: usize, u: usize) -> Option<usize> {
        self.rotation[v].iter().position(|&x| x == u)
    }

    /// Traces the faces as orbits of `(u -> v) => (v -> w)`, where `w`
    /// follows `u` in the rotation at `v`. Each face is the list of its
    /// dart tails. Darts are visited in vertex order, then rotation order.
    ///
    /// Assumes a symmetric rotation system.
    pub fn trace_faces(&self) -> Vec<Vec<usize>> {
        self.trace_darts()
            .into_iter()
            .map(|face| face.into_iter().map(|(u, _)| u).collect())
            .collect()
    }

    fn trace_darts(&self) -> Vec<Vec<(usize, usize)>> {
        let offsets = self.dart_offsets();
        let mut seen = vec![false; offsets[self.rotation.len()]];
        let mut faces = Vec::new();
        for u in 0..self.rotation.len() {
            for i in 0..self.rotation[u].len() {
                if seen[offsets[u] + i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut ai) = (u, i);
                while !seen[offsets[a] + ai] {
                    seen[offsets[a] + ai] = true;
                    let b = self.rotation[a][ai];
                    face.push((a, b));
                    let back = self.position(b, a).expect("rotation system is symmetric");
                    let next = (back + 1) % self.rotation[b].len();
                    (a, ai) = (b, next);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Dual embedding: one vertex per traced face, adjacent across edges.
    pub fn dual(&self) -> RotationSystem {
        let faces = self.trace_darts();
        let mut face_of = std::collections::HashMap::new();
        for (f, darts) in faces.iter().enumerate() {
            for &d in darts {
                face_of.insert(d, f);
            }
        }
        let rotation = faces
            .iter()
            .map(|darts| darts.iter().map(|&(a, b)| face_of[&(b, a)]).collect())
            .collect();
        RotationSystem { rotation }
    }

    /// Vertex truncation: every dart `u -> v` becomes a vertex near `u`,
    /// joined to its twin `v -> u` and to the darts before and after it
    /// around `u`.
    pub fn truncate(&self) -> RotationSystem {
        let offsets = self.dart_offsets();
        let mut rotation = Vec::with_capacity(offsets[self.rotation.len()]);
        for u in 0..self.rotation.len() {
            let d = self.rotation[u].len();
            for i in 0..d {
                let v = self.rotation[u][i];
                let twin = offsets[v] + self.position(v, u).expect("symmetric rotation system");
                let after = offsets[u] + (i + 1) % d;
                let before = offsets[u] + (i + d - 1) % d;
                rotation.push(vec![twin, after, before]);
            }
        }
        RotationSystem { rotation }
    }

    /// Triangulation with two poles of degree `ring` joined through two
    /// staggered rings of `ring` vertices each. `ring = 5` is the
    /// icosahedron; its dual is the dodecahedron, and for `ring = 6` the
    /// dual is the 24-vertex fullerene with two hexagons.
    pub fn polar_triangulation(ring: usize) -> RotationSystem {
        assert!(ring >= 3);
        let north = 0;
        let upper = |i: usize| 1 + i % ring;
        let lower = |i: usize| 1 + ring + i % ring;
        let south = 2 * ring + 1;
        let mut rotation = vec![Vec::new(); 2 * ring + 2];
        rotation[north] = (0..ring).map(upper).collect();
        for i in 0..ring {
            rotation[upper(i)] = vec![
                north,
                upper(i + ring - 1),
                lower(i),
                lower(i + 1),
                upper(i + 1),
            ];
            rotation[lower(i)] = vec![
                upper(i + ring - 1),
                lower(i + ring - 1),
                south,
                lower(i + 1),
                upper(i),
            ];
        }
        rotation[south] = (0..ring).rev().map(lower).collect();
        RotationSystem { rotation }
    }

    /// Parses one line of whitespace-separated neighbor ids per vertex.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut rotation = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| format!("line {}: bad vertex id {t:?}", lineno + 1))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rotation.push(row);
        }
        Ok(Self { rotation })
    }
}

impl fmt::Display for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rotation {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Validates a cubic rotation system as a fullerene and recovers its faces.
pub fn load_fullerene(rs: &RotationSystem) -> Result<MolecularGraph, ChemError> {
    let n = rs.vertex_count();
    if n == 0 {
        return Err(ChemError::InvalidGraph("no vertices".into()));
    }
    for v in 0..n {
        let row = rs.rotation(v);
        if row.len() != 3 {
            return Err(ChemError::NotCubic(v));
        }
        if let Some(&bad) = row.iter().find(|&&w| w >= n) {
            return Err(ChemError::VertexOutOfRange {
                vertex: v,
                neighbor: bad,
                n,
            });
        }
        if row.contains(&v) || row[0] == row[1] || row[1] == row[2] || row[0] == row[2] {
            return Err(ChemError::NotCubic(v));
        }
    }
    for v in 0..n {
        for &w in rs.rotation(v) {
            if !rs.rotation(w).contains(&v) {
                return Err(ChemError::AsymmetricAdjacency(v, w));
            }
        }
    }

    let faces = rs.trace_faces();
    if let Some(f) = faces.iter().find(|f| !(5..=6).contains(&f.len())) {
        return Err(ChemError::BadFaceSize(f.len()));
    }
    let edges = 3 * n / 2;
    let euler = n as i64 - edges as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(ChemError::NotPlanarEmbedding(format!(
            "v - e + f = {euler}, expected 2"
        )));
    }
    for f in &faces {
        let mut vs = f.clone();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != f.len() {
            return Err(ChemError::NotPlanarEmbedding(
                "a traced face repeats a vertex".into(),
            ));
        }
    }
    let pentagons = faces.iter().filter(|f| f.len() == 5).count();
    if pentagons != 12 {
        return Err(ChemError::PentagonCount(pentagons));
    }

    let all_edges: Vec<_> = (0..n)
        .flat_map(|v| rs.rotation(v).iter().map(move |&w| (v, w)))
        .filter(|&(v, w)| v < w)
        .collect();
    MolecularGraph::assemble(Family::Fullerene, n, faces, &all_edges, None)
        .map_err(|e| match e {
            ChemError::InvalidGraph(msg) => ChemError::NotPlanarEmbedding(msg),
            other => other,
        })
}
