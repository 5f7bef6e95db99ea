#![allow(dead_code)]

pub mod oracle;

use gzz::chemgraph::{build_benzenoid, catalogue, HexCoord, MolecularGraph};
use gzz::cli::input::preset;

pub fn benzenoid(cells: &[(i32, i32)]) -> MolecularGraph {
    build_benzenoid(cells.iter().map(|&(q, r)| HexCoord::new(q, r))).unwrap()
}

pub fn from_preset(name: &str) -> MolecularGraph {
    preset(name).unwrap().build().unwrap()
}

/// Named inputs outside the benzenoid catalogue.
pub const EXTRA_PRESETS: [&str; 4] = ["tube:2,2,1", "tube:3,0,2", "c20", "c24"];

/// Every benzenoid with at most six hexagons plus the extra presets, each
/// with a printable name.
pub fn corpus() -> Vec<(String, MolecularGraph)> {
    let mut out: Vec<(String, MolecularGraph)> = catalogue::benzenoids(6)
        .into_iter()
        .map(|cells| {
            let name = cells.iter().map(|c| format!("({},{})", c.q, c.r)).collect::<String>();
            let g = build_benzenoid(cells).unwrap();
            (name, g)
        })
        .collect();
    for p in EXTRA_PRESETS {
        out.push((p.to_string(), from_preset(p)));
    }
    out
}
