//! Line-oriented text formats for instances, solutions, and edge-list graphs.
//!
//! Decimals are serialized with 17 significant digits so that write-then-read
//! reproduces every value exactly. `#` starts a comment line anywhere.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::geometry::{DistanceMatrix, Metric, Point};
use crate::instances::Graph;
use crate::nukc_general::{BallCenter, NUkCInstance};
use crate::supplier::KSupplierInstance;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of file: {0}")]
    UnexpectedEof(String),
    #[error("io error: {0}")]
    Io(String),
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        Self::Syntax { line, message: message.into() }
    }
}

/// Instances as stored on disk.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceData {
    KSupplier(KSupplierInstance),
    /// Euclidean non-uniform instance; `facilities = None` encodes `FACILITIES SAME`.
    NUkCEuclid {
        clients: Vec<Point>,
        facilities: Option<Vec<Point>>,
        radii: Vec<f64>,
        counts: Vec<usize>,
    },
    NUkCMetric(NUkCInstance),
}

impl InstanceData {
    /// Client coordinates when the instance is Euclidean.
    pub fn euclid_clients(&self) -> Option<&[Point]> {
        match self {
            InstanceData::KSupplier(inst) => Some(&inst.clients),
            InstanceData::NUkCEuclid { clients, .. } => Some(clients),
            InstanceData::NUkCMetric(_) => None,
        }
    }

    /// Reinterpret as a continuous Euclidean non-uniform instance.
    pub fn as_continuous_nukc(&self) -> Option<NUkCInstance> {
        match self {
            InstanceData::NUkCEuclid { clients, radii, counts, .. } => Some(
                NUkCInstance::euclidean_continuous(clients.clone(), radii.clone(), counts.clone())
                    .expect("validated on load"),
            ),
            _ => None,
        }
    }

    /// Reinterpret as a discrete non-uniform instance (facility list honored).
    pub fn as_discrete_nukc(&self) -> Option<NUkCInstance> {
        match self {
            InstanceData::NUkCEuclid { clients, facilities, radii, counts } => {
                let mut ground = clients.clone();
                let client_ids: Vec<usize> = (0..clients.len()).collect();
                let facility_ids: Vec<usize> = match facilities {
                    None => client_ids.clone(),
                    Some(fac) => {
                        let start = ground.len();
                        ground.extend(fac.iter().cloned());
                        (start..start + fac.len()).collect()
                    }
                };
                Some(
                    NUkCInstance::discrete(
                        Metric::Euclidean(ground),
                        client_ids,
                        facility_ids,
                        radii.clone(),
                        counts.clone(),
                    )
                    .expect("validated on load"),
                )
            }
            InstanceData::NUkCMetric(inst) => Some(inst.clone()),
            InstanceData::KSupplier(_) => None,
        }
    }
}

/// A solver output as stored on disk: claimed cost plus one ball per line.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionData {
    pub cost: f64,
    pub balls: Vec<(BallCenter, f64)>,
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

struct Cursor {
    lines: Vec<(usize, String)>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim().to_string()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Self { lines, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &str), ParseError> {
        match self.lines.get(self.pos) {
            Some((n, l)) => {
                self.pos += 1;
                Ok((*n, l))
            }
            None => Err(ParseError::UnexpectedEof(what.into())),
        }
    }

    fn peek(&self) -> Option<&str> {
        self.lines.get(self.pos).map(|(_, l)| l.as_str())
    }

    fn done(&self) -> bool {
        self.pos == self.lines.len()
    }
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::at(line, format!("expected {what}, got '{token}'")))
}

fn parse_f64(token: &str, line: usize, what: &str) -> Result<f64, ParseError> {
    let v: f64 = token
        .parse()
        .map_err(|_| ParseError::at(line, format!("expected {what}, got '{token}'")))?;
    if !v.is_finite() {
        return Err(ParseError::at(line, format!("{what} must be finite")));
    }
    Ok(v)
}

fn parse_point(line_no: usize, line: &str, dim: usize) -> Result<Point, ParseError> {
    let coords: Vec<f64> = line
        .split_whitespace()
        .map(|t| parse_f64(t, line_no, "coordinate"))
        .collect::<Result<_, _>>()?;
    if coords.len() != dim {
        return Err(ParseError::at(
            line_no,
            format!("expected {dim} coordinates, got {}", coords.len()),
        ));
    }
    Ok(Point::new(coords))
}

fn parse_points(cursor: &mut Cursor, count: usize, dim: usize) -> Result<Vec<Point>, ParseError> {
    (0..count)
        .map(|_| {
            let (n, l) = cursor.next("point line")?;
            parse_point(n, l, dim)
        })
        .collect()
}

fn parse_radii_counts(
    cursor: &mut Cursor,
    t: usize,
    k: usize,
) -> Result<(Vec<f64>, Vec<usize>), ParseError> {
    let (rn, rl) = cursor.next("RADII line")?;
    let mut tokens = rl.split_whitespace();
    if tokens.next() != Some("RADII") {
        return Err(ParseError::at(rn, "expected RADII"));
    }
    let radii: Vec<f64> = tokens
        .map(|tk| parse_f64(tk, rn, "radius"))
        .collect::<Result<_, _>>()?;
    if radii.len() != t {
        return Err(ParseError::at(rn, format!("expected {t} radii, got {}", radii.len())));
    }
    if radii.iter().any(|&r| r <= 0.0) || radii.windows(2).any(|w| w[0] <= w[1]) {
        return Err(ParseError::at(rn, "radii must be strictly decreasing and positive"));
    }
    let (cn, cl) = cursor.next("COUNTS line")?;
    let mut tokens = cl.split_whitespace();
    if tokens.next() != Some("COUNTS") {
        return Err(ParseError::at(cn, "expected COUNTS"));
    }
    let counts: Vec<usize> = tokens
        .map(|tk| parse_usize(tk, cn, "count"))
        .collect::<Result<_, _>>()?;
    if counts.len() != t {
        return Err(ParseError::at(cn, format!("expected {t} counts, got {}", counts.len())));
    }
    if counts.iter().any(|&c| c == 0) {
        return Err(ParseError::at(cn, "counts must be positive"));
    }
    if counts.iter().sum::<usize>() != k {
        return Err(ParseError::at(cn, format!("counts sum to {}, expected k = {k}", counts.iter().sum::<usize>())));
    }
    Ok((radii, counts))
}

/// Parse an instance from text.
pub fn parse_instance(text: &str) -> Result<InstanceData, ParseError> {
    let mut cursor = Cursor::new(text);
    let (hn, header) = cursor.next("header")?;
    let header = header.to_string();
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let data = match tokens.first().copied() {
        Some("KSUPPLIER") => {
            if tokens.len() != 3 {
                return Err(ParseError::at(hn, "expected KSUPPLIER d k"));
            }
            let dim = parse_usize(tokens[1], hn, "dimension")?;
            let k = parse_usize(tokens[2], hn, "k")?;
            let clients = parse_client_section(&mut cursor, dim)?;
            let facilities = parse_facility_section(&mut cursor, dim)?;
            let facilities = facilities.unwrap_or_else(|| clients.clone());
            if k < 1 || k > facilities.len() {
                return Err(ParseError::at(hn, format!("k = {k} out of range for {} facilities", facilities.len())));
            }
            InstanceData::KSupplier(
                KSupplierInstance::new(clients, facilities, k)
                    .map_err(|e| ParseError::at(hn, e.to_string()))?,
            )
        }
        Some("NUKC") => {
            if tokens.len() != 4 {
                return Err(ParseError::at(hn, "expected NUKC d k t"));
            }
            let dim = parse_usize(tokens[1], hn, "dimension")?;
            let k = parse_usize(tokens[2], hn, "k")?;
            let t = parse_usize(tokens[3], hn, "t")?;
            let clients = parse_client_section(&mut cursor, dim)?;
            let facilities = parse_facility_section(&mut cursor, dim)?;
            let (radii, counts) = parse_radii_counts(&mut cursor, t, k)?;
            InstanceData::NUkCEuclid { clients, facilities, radii, counts }
        }
        Some("NUKC-METRIC") => {
            if tokens.len() != 4 {
                return Err(ParseError::at(hn, "expected NUKC-METRIC n k t"));
            }
            let n = parse_usize(tokens[1], hn, "n")?;
            let k = parse_usize(tokens[2], hn, "k")?;
            let t = parse_usize(tokens[3], hn, "t")?;
            let (mn, ml) = cursor.next("MATRIX")?;
            if ml != "MATRIX" {
                return Err(ParseError::at(mn, "expected MATRIX"));
            }
            let mut rows = Vec::with_capacity(n);
            for _ in 0..n {
                let (rn, rl) = cursor.next("matrix row")?;
                let row: Vec<f64> = rl
                    .split_whitespace()
                    .map(|tk| parse_f64(tk, rn, "matrix entry"))
                    .collect::<Result<_, _>>()?;
                if row.len() != n {
                    return Err(ParseError::at(rn, format!("expected {n} entries, got {}", row.len())));
                }
                rows.push(row);
            }
            let matrix = DistanceMatrix::new(rows).map_err(|e| ParseError::at(mn, e.to_string()))?;
            // Optional index sections; defaults are all clients and C = F.
            let mut clients: Vec<usize> = (0..n).collect();
            let mut facilities: Option<Vec<usize>> = None;
            if cursor.peek().is_some_and(|l| l.starts_with("CLIENTS")) {
                let (cn, cl) = cursor.next("CLIENTS")?;
                let m = parse_usize(cl.split_whitespace().nth(1).unwrap_or(""), cn, "client count")?;
                clients = parse_indices(&mut cursor, m, n)?;
            }
            if cursor.peek().is_some_and(|l| l.starts_with("FACILITIES")) {
                let (fnum, fl) = cursor.next("FACILITIES")?;
                let arg = fl.split_whitespace().nth(1).unwrap_or("");
                if arg != "SAME" {
                    let m = parse_usize(arg, fnum, "facility count")?;
                    facilities = Some(parse_indices(&mut cursor, m, n)?);
                }
            }
            let facilities = facilities.unwrap_or_else(|| clients.clone());
            let (radii, counts) = parse_radii_counts(&mut cursor, t, k)?;
            InstanceData::NUkCMetric(
                NUkCInstance::discrete(Metric::Matrix(matrix), clients, facilities, radii, counts)
                    .map_err(|e| ParseError::at(hn, e.to_string()))?,
            )
        }
        _ => return Err(ParseError::at(hn, "expected KSUPPLIER, NUKC, or NUKC-METRIC header")),
    };
    if !cursor.done() {
        let (n, l) = cursor.next("")?;
        return Err(ParseError::at(n, format!("trailing content '{l}'")));
    }
    Ok(data)
}

fn parse_client_section(cursor: &mut Cursor, dim: usize) -> Result<Vec<Point>, ParseError> {
    let (n, l) = cursor.next("CLIENTS")?;
    let tokens: Vec<&str> = l.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != "CLIENTS" {
        return Err(ParseError::at(n, "expected CLIENTS m"));
    }
    let m = parse_usize(tokens[1], n, "client count")?;
    if m == 0 {
        return Err(ParseError::at(n, "client count must be positive"));
    }
    parse_points(cursor, m, dim)
}

fn parse_facility_section(cursor: &mut Cursor, dim: usize) -> Result<Option<Vec<Point>>, ParseError> {
    let (n, l) = cursor.next("FACILITIES")?;
    let tokens: Vec<&str> = l.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != "FACILITIES" {
        return Err(ParseError::at(n, "expected FACILITIES m or FACILITIES SAME"));
    }
    if tokens[1] == "SAME" {
        return Ok(None);
    }
    let m = parse_usize(tokens[1], n, "facility count")?;
    Ok(Some(parse_points(cursor, m, dim)?))
}

fn parse_indices(cursor: &mut Cursor, count: usize, n: usize) -> Result<Vec<usize>, ParseError> {
    (0..count)
        .map(|_| {
            let (ln, l) = cursor.next("index line")?;
            let idx = parse_usize(l, ln, "ground-set index")?;
            if idx >= n {
                return Err(ParseError::at(ln, format!("index {idx} out of range 0..{n}")));
            }
            Ok(idx)
        })
        .collect()
}

/// Serialize an instance; the output parses back to an equal value.
pub fn format_instance(data: &InstanceData) -> String {
    let mut out = String::new();
    let points_block = |out: &mut String, pts: &[Point]| {
        for p in pts {
            let line: Vec<String> = p.coords().iter().map(|&c| fmt_f64(c)).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
    };
    match data {
        InstanceData::KSupplier(inst) => {
            let _ = writeln!(out, "KSUPPLIER {} {}", inst.dim(), inst.k);
            let _ = writeln!(out, "CLIENTS {}", inst.clients.len());
            points_block(&mut out, &inst.clients);
            if inst.facilities == inst.clients {
                let _ = writeln!(out, "FACILITIES SAME");
            } else {
                let _ = writeln!(out, "FACILITIES {}", inst.facilities.len());
                points_block(&mut out, &inst.facilities);
            }
        }
        InstanceData::NUkCEuclid { clients, facilities, radii, counts } => {
            let k: usize = counts.iter().sum();
            let _ = writeln!(out, "NUKC {} {} {}", clients[0].dim(), k, radii.len());
            let _ = writeln!(out, "CLIENTS {}", clients.len());
            points_block(&mut out, clients);
            match facilities {
                None => {
                    let _ = writeln!(out, "FACILITIES SAME");
                }
                Some(fac) => {
                    let _ = writeln!(out, "FACILITIES {}", fac.len());
                    points_block(&mut out, fac);
                }
            }
            write_radii_counts(&mut out, radii, counts);
        }
        InstanceData::NUkCMetric(inst) => {
            let n = inst.metric.len();
            let _ = writeln!(out, "NUKC-METRIC {} {} {}", n, inst.k(), inst.class_count());
            let _ = writeln!(out, "MATRIX");
            for i in 0..n {
                let row: Vec<String> = (0..n).map(|j| fmt_f64(inst.metric.distance(i, j))).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
            let all: Vec<usize> = (0..n).collect();
            if inst.clients != all || !inst.cf_equal {
                let _ = writeln!(out, "CLIENTS {}", inst.clients.len());
                for &c in &inst.clients {
                    let _ = writeln!(out, "{c}");
                }
                if inst.cf_equal {
                    let _ = writeln!(out, "FACILITIES SAME");
                } else {
                    let _ = writeln!(out, "FACILITIES {}", inst.facilities.len());
                    for &f in &inst.facilities {
                        let _ = writeln!(out, "{f}");
                    }
                }
            }
            write_radii_counts(&mut out, &inst.radii, &inst.counts);
        }
    }
    out
}

fn write_radii_counts(out: &mut String, radii: &[f64], counts: &[usize]) {
    let radii_line: Vec<String> = radii.iter().map(|&r| fmt_f64(r)).collect();
    let _ = writeln!(out, "RADII {}", radii_line.join(" "));
    let counts_line: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "COUNTS {}", counts_line.join(" "));
}

pub fn read_instance(path: &Path) -> Result<InstanceData, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io(e.to_string()))?;
    parse_instance(&text)
}

pub fn write_instance(data: &InstanceData, path: &Path) -> Result<(), ParseError> {
    std::fs::write(path, format_instance(data)).map_err(|e| ParseError::Io(e.to_string()))
}

/// Parse a solution file: `SOLUTION cost`, then `BALL c1 .. cd radius` per
/// ball (or `BALL-IDX facility radius` for explicit-matrix instances).
pub fn parse_solution(text: &str) -> Result<SolutionData, ParseError> {
    let mut cursor = Cursor::new(text);
    let (hn, hl) = cursor.next("SOLUTION header")?;
    let tokens: Vec<&str> = hl.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != "SOLUTION" {
        return Err(ParseError::at(hn, "expected SOLUTION cost"));
    }
    let cost = parse_f64(tokens[1], hn, "cost")?;
    let mut balls = Vec::new();
    while !cursor.done() {
        let (ln, l) = cursor.next("BALL line")?;
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens.first().copied() {
            Some("BALL") if tokens.len() >= 3 => {
                let coords: Vec<f64> = tokens[1..tokens.len() - 1]
                    .iter()
                    .map(|tk| parse_f64(tk, ln, "coordinate"))
                    .collect::<Result<_, _>>()?;
                let radius = parse_f64(tokens[tokens.len() - 1], ln, "radius")?;
                balls.push((BallCenter::Free(Point::new(coords)), radius));
            }
            Some("BALL-IDX") if tokens.len() == 3 => {
                let idx = parse_usize(tokens[1], ln, "facility index")?;
                let radius = parse_f64(tokens[2], ln, "radius")?;
                balls.push((BallCenter::Facility(idx), radius));
            }
            _ => return Err(ParseError::at(ln, "expected BALL or BALL-IDX line")),
        }
    }
    Ok(SolutionData { cost, balls })
}

pub fn format_solution(sol: &SolutionData) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "SOLUTION {}", fmt_f64(sol.cost));
    for (center, radius) in &sol.balls {
        match center {
            BallCenter::Free(p) => {
                let coords: Vec<String> = p.coords().iter().map(|&c| fmt_f64(c)).collect();
                let _ = writeln!(out, "BALL {} {}", coords.join(" "), fmt_f64(*radius));
            }
            BallCenter::Facility(i) => {
                let _ = writeln!(out, "BALL-IDX {i} {}", fmt_f64(*radius));
            }
        }
    }
    out
}

pub fn read_solution(path: &Path) -> Result<SolutionData, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io(e.to_string()))?;
    parse_solution(&text)
}

pub fn write_solution(sol: &SolutionData, path: &Path) -> Result<(), ParseError> {
    std::fs::write(path, format_solution(sol)).map_err(|e| ParseError::Io(e.to_string()))
}

/// Edge-list graph reader: `p n m` header then `m` lines `e u v`; `#` and `c`
/// lines are comments.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'));
    let (hn, header) = lines.next().ok_or_else(|| ParseError::UnexpectedEof("graph header".into()))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "p" {
        return Err(ParseError::at(hn, "expected 'p n m' header"));
    }
    let n = parse_usize(tokens[1], hn, "vertex count")?;
    let m = parse_usize(tokens[2], hn, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = lines.next().ok_or_else(|| ParseError::UnexpectedEof("edge line".into()))?;
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "e" {
            return Err(ParseError::at(ln, "expected 'e u v'"));
        }
        edges.push((parse_usize(tokens[1], ln, "vertex")?, parse_usize(tokens[2], ln, "vertex")?));
    }
    Graph::new(n, edges).map_err(|e| ParseError::at(hn, e.to_string()))
}
