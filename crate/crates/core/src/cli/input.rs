//! Input files and named presets.

use std::path::Path;

use crate::chemgraph::{
    build_benzenoid, build_tubulene, catalogue, load_fullerene, ChemError, HexCoord, MolecularGraph,
    RotationSystem, TubuleneSpec,
};

use super::{CliError, Format};

/// A structure description before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Benzenoid(Vec<HexCoord>),
    Tubulene(TubuleneSpec),
    Fullerene(RotationSystem),
}

impl Source {
    pub fn build(&self) -> Result<MolecularGraph, ChemError> {
        match self {
            Source::Benzenoid(cells) => build_benzenoid(cells.iter().copied()),
            Source::Tubulene(spec) => build_tubulene(spec),
            Source::Fullerene(rs) => load_fullerene(rs),
        }
    }

    /// The input file text for this structure.
    pub fn to_text(&self) -> String {
        match self {
            Source::Benzenoid(cells) => cells.iter().map(|c| format!("{} {}\n", c.q, c.r)).collect(),
            Source::Tubulene(s) => format!("{} {} {}\n", s.n, s.m, s.rings),
            Source::Fullerene(rs) => rs.to_string(),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn ints<T: std::str::FromStr>(lineno: usize, line: &str, want: usize) -> Result<Vec<T>, CliError> {
    let parsed = line
        .split_whitespace()
        .map(|t| t.parse::<T>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Parse(format!("line {lineno}: expected integers, got {line:?}")))?;
    if parsed.len() != want {
        return Err(CliError::Parse(format!(
            "line {lineno}: expected {want} integers, got {}",
            parsed.len()
        )));
    }
    Ok(parsed)
}

pub fn parse_benzenoid(text: &str) -> Result<Source, CliError> {
    let mut cells = Vec::new();
    for (lineno, line) in content_lines(text) {
        let v = ints::<i32>(lineno, line, 2)?;
        cells.push(HexCoord::new(v[0], v[1]));
    }
    Ok(Source::Benzenoid(cells))
}

pub fn parse_tubulene(text: &str) -> Result<Source, CliError> {
    let mut lines = content_lines(text);
    let (lineno, line) = lines
        .next()
        .ok_or_else(|| CliError::Parse("empty tubulene file".into()))?;
    let n: Vec<i32> = ints(lineno, line, 3)?;
    if let Some((extra, _)) = lines.next() {
        return Err(CliError::Parse(format!("line {extra}: tubulene file has one line")));
    }
    let rings = u32::try_from(n[2])
        .map_err(|_| CliError::Parse(format!("line {lineno}: ring count must be nonnegative")))?;
    Ok(Source::Tubulene(TubuleneSpec::new(n[0], n[1], rings)))
}

pub fn parse_fullerene(text: &str) -> Result<Source, CliError> {
    RotationSystem::parse(text)
        .map(Source::Fullerene)
        .map_err(CliError::Parse)
}

pub fn infer_format(path: &Path) -> Result<Format, CliError> {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    match ext.to_ascii_lowercase().as_str() {
        "bz" | "benz" | "benzenoid" | "hex" => Ok(Format::Benzenoid),
        "tube" | "tub" | "tubulene" => Ok(Format::Tubulene),
        "ful" | "rot" | "fullerene" => Ok(Format::Fullerene),
        _ => Err(CliError::Usage(format!(
            "cannot infer the format of {}; pass --format",
            path.display()
        ))),
    }
}

pub fn load(path: &Path, format: Option<Format>) -> Result<Source, CliError> {
    let format = match format {
        Some(f) => f,
        None => infer_format(path)?,
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    match format {
        Format::Benzenoid => parse_benzenoid(&text),
        Format::Tubulene => parse_tubulene(&text),
        Format::Fullerene => parse_fullerene(&text),
    }
}

fn count_arg(name: &str, arg: &str) -> Result<usize, CliError> {
    match arg.parse::<usize>() {
        Ok(h) if h > 0 => Ok(h),
        _ => Err(CliError::UnknownPreset(name.into())),
    }
}

/// Resolves `linear:h`, `zigzag:h`, `pyrene`, `coronene`, `tube:n,m,r`,
/// `c20`, `c24` and `c60`.
pub fn preset(name: &str) -> Result<Source, CliError> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let source = match (head, arg) {
        ("linear", Some(a)) => Source::Benzenoid(catalogue::linear_chain(count_arg(name, a)?)),
        ("zigzag", Some(a)) => Source::Benzenoid(catalogue::zigzag_chain(count_arg(name, a)?)),
        ("pyrene", None) => Source::Benzenoid(catalogue::pyrene()),
        ("coronene", None) => Source::Benzenoid(catalogue::coronene()),
        ("tube", Some(a)) => {
            let parts: Vec<&str> = a.split(',').collect();
            let bad = || CliError::UnknownPreset(name.into());
            let [n, m, r] = parts[..] else {
                return Err(bad());
            };
            Source::Tubulene(TubuleneSpec::new(
                n.trim().parse().map_err(|_| bad())?,
                m.trim().parse().map_err(|_| bad())?,
                r.trim().parse().map_err(|_| bad())?,
            ))
        }
        ("c20", None) => Source::Fullerene(RotationSystem::polar_triangulation(5).dual()),
        ("c24", None) => Source::Fullerene(RotationSystem::polar_triangulation(6).dual()),
        ("c60", None) => Source::Fullerene(RotationSystem::polar_triangulation(5).truncate()),
        _ => return Err(CliError::UnknownPreset(name.into())),
    };
    Ok(source)
}
