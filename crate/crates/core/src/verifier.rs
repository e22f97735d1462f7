//! Independent certification. Everything is re-derived from the raw vertex
//! sequences; nothing here calls into the builders.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use crate::digraph::{Digraph, Factor, Factorization, Kind, Vertex};
use crate::error::Result;
use crate::io;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Code {
    /// A cycle's length differs from the declared cycle length.
    WrongLength,
    /// A vertex occurs twice in one cycle.
    RepeatedVertex,
    /// Two cycles of one factor share a vertex.
    Overlap,
    /// A factor misses an ambient vertex.
    NotSpanning,
    /// A vertex outside the ambient digraph.
    ForeignVertex,
    /// An arc outside the ambient digraph.
    NotInAmbient,
    /// An arc used by two cycles.
    ArcReuse,
    /// Ambient arcs left uncovered.
    MissingArcs,
    /// The number of factors is not `|A| / |V|`.
    FactorCount,
    /// An ordered pair never appears consecutively.
    MissingPair,
    /// An ordered pair appears consecutively more than once.
    DuplicatePair,
    /// The declared cycle length is not the length the cycles have, or does not divide `n`.
    CycleLengthField,
    /// The declared vertex count disagrees with the ambient digraph.
    VertexCountField,
}

impl Code {
    pub fn as_str(&self) -> &'static str {
        match self {
            Code::WrongLength => "wrong-length",
            Code::RepeatedVertex => "repeated-vertex",
            Code::Overlap => "overlap",
            Code::NotSpanning => "not-spanning",
            Code::ForeignVertex => "foreign-vertex",
            Code::NotInAmbient => "not-in-ambient",
            Code::ArcReuse => "arc-reuse",
            Code::MissingArcs => "missing-arcs",
            Code::FactorCount => "factor-count",
            Code::MissingPair => "missing-pair",
            Code::DuplicatePair => "duplicate-pair",
            Code::CycleLengthField => "cycle-length-field",
            Code::VertexCountField => "vertex-count-field",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub code: Code,
    pub factor: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.factor {
            Some(i) => write!(f, "[{}] factor {i}: {}", self.code.as_str(), self.detail),
            None => write!(f, "[{}] {}", self.code.as_str(), self.detail),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub factors: usize,
    pub cycles: usize,
    pub arcs: usize,
    pub violations: Vec<Violation>,
}

// Long reports stay readable.
const SHOWN: usize = 8;

impl Report {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, code: Code) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }

    pub fn codes(&self) -> BTreeSet<Code> {
        self.violations.iter().map(|v| v.code).collect()
    }

    fn push(&mut self, code: Code, factor: Option<usize>, detail: String) {
        self.violations.push(Violation { code, factor, detail });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok: {} factors, {} cycles, {} arcs", self.factors, self.cycles, self.arcs);
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in self.violations.iter().take(SHOWN) {
            write!(f, "\n  {v}")?;
        }
        if self.violations.len() > SHOWN {
            write!(f, "\n  ... and {} more", self.violations.len() - SHOWN)?;
        }
        Ok(())
    }
}

fn check_factor_into(report: &mut Report, idx: Option<usize>, f: &Factor, vertices: &BTreeSet<Vertex>, m: usize) {
    let mut owner: HashMap<Vertex, usize> = HashMap::new();
    for (ci, c) in f.cycles().iter().enumerate() {
        let vs = c.vertices();
        if vs.len() != m {
            report.push(Code::WrongLength, idx, format!("cycle {ci} has {} vertices, expected {m}", vs.len()));
        }
        let mut seen = BTreeSet::new();
        for v in vs {
            if !vertices.contains(v) {
                report.push(Code::ForeignVertex, idx, format!("cycle {ci} visits {v:?}, not an ambient vertex"));
            }
            if !seen.insert(*v) {
                report.push(Code::RepeatedVertex, idx, format!("cycle {ci} visits {v} twice"));
                continue;
            }
            if let Some(other) = owner.insert(*v, ci) {
                report.push(Code::Overlap, idx, format!("cycles {other} and {ci} share {v}"));
            }
        }
    }
    let missing = vertices.iter().filter(|v| !owner.contains_key(v)).count();
    if missing > 0 {
        report.push(Code::NotSpanning, idx, format!("{missing} ambient vertices uncovered"));
    }
}

/// Cycle lengths, disjointness and spanning for one factor.
pub fn verify_factor(f: &Factor, vertices: &BTreeSet<Vertex>, m: usize) -> Report {
    let mut r = Report { factors: 1, cycles: f.cycles().len(), ..Report::default() };
    check_factor_into(&mut r, None, f, vertices, m);
    r
}

// Shared by both top-level checks: the declared fields against the ambient.
fn check_fields(report: &mut Report, fac: &Factorization, n: usize) {
    if fac.n != n {
        report.push(Code::VertexCountField, None, format!("declared n = {}, ambient has {n} vertices", fac.n));
    }
    let lengths: BTreeSet<usize> = fac.factors.iter().flat_map(|f| f.cycles().iter().map(|c| c.len())).collect();
    if fac.cycle_length == 0 || !n.is_multiple_of(fac.cycle_length) {
        report.push(Code::CycleLengthField, None, format!("declared cycle length {} does not divide {n}", fac.cycle_length));
    } else if lengths.len() == 1 && !lengths.contains(&fac.cycle_length) {
        report.push(
            Code::CycleLengthField,
            None,
            format!("declared cycle length {}, every cycle has length {:?}", fac.cycle_length, lengths.first().unwrap()),
        );
    }
}

/// Every factor is a spanning union of disjoint `cycle_length`-cycles, and the
/// factors' arcs partition `A(g)`.
pub fn verify_factorization(fac: &Factorization, g: &Digraph) -> Report {
    let vertices = g.vertices();
    let mut r = Report { factors: fac.factors.len(), ..Report::default() };
    check_fields(&mut r, fac, vertices.len());
    let uniform = r.violations.iter().all(|v| v.code != Code::CycleLengthField);
    let mut first_use: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for (fi, f) in fac.factors.iter().enumerate() {
        r.cycles += f.cycles().len();
        let mut local = Report::default();
        check_factor_into(&mut local, Some(fi), f, vertices, fac.cycle_length);
        r.violations.extend(local.violations.into_iter().filter(|v| uniform || v.code != Code::WrongLength));
        for c in f.cycles() {
            let vs = c.vertices();
            for k in 0..vs.len() {
                let (t, h) = (vs[k], vs[(k + 1) % vs.len()]);
                if !g.contains_arc(t, h) {
                    if t != h {
                        r.push(Code::NotInAmbient, Some(fi), format!("arc ({t}, {h}) is not in the ambient digraph"));
                    }
                    continue;
                }
                if let Some(prev) = first_use.insert((t, h), fi) {
                    r.push(Code::ArcReuse, Some(fi), format!("arc ({t}, {h}) already used in factor {prev}"));
                }
            }
        }
    }
    r.arcs = first_use.len();
    let n = vertices.len();
    let total = g.arc_count();
    if r.arcs < total {
        r.push(Code::MissingArcs, None, format!("{} of {total} arcs uncovered", total - r.arcs));
    }
    if n > 0 && (!total.is_multiple_of(n) || fac.factors.len() != total / n) {
        r.push(Code::FactorCount, None, format!("{} factors, expected {}", fac.factors.len(), total as f64 / n as f64));
    }
    r
}

/// Resolvable Mendelsohn design check on `K*_n`, by counting ordered
/// consecutive pairs over `0..n` and checking each factor is a parallel class.
pub fn verify_mendelsohn(fac: &Factorization) -> Report {
    let n = fac.n;
    let mut r = Report { factors: fac.factors.len(), ..Report::default() };
    // The declared n is the ambient here, so only the length field can clash.
    check_fields(&mut r, fac, n);
    let uniform = r.violations.iter().all(|v| v.code != Code::CycleLengthField);
    let point = |v: &Vertex| -> Option<usize> {
        let p = if fac.kind.is_layered() { v.layer as usize * (n / 2) + v.index as usize } else { v.index as usize };
        let in_range = if fac.kind.is_layered() {
            v.layer < 2 && v.modulus as usize * 2 == n && (v.index as usize) < n / 2
        } else {
            v.layer == 0 && v.modulus as usize == n && p < n
        };
        in_range.then_some(p)
    };
    let mut count = vec![0u16; n * n];
    for (fi, f) in fac.factors.iter().enumerate() {
        let mut hits = vec![0u32; n];
        for (ci, c) in f.cycles().iter().enumerate() {
            r.cycles += 1;
            let vs = c.vertices();
            if uniform && vs.len() != fac.cycle_length {
                r.push(Code::WrongLength, Some(fi), format!("block {ci} has {} points", vs.len()));
            }
            let pts: Vec<Option<usize>> = vs.iter().map(point).collect();
            let mut inside: BTreeMap<usize, u32> = BTreeMap::new();
            for (v, p) in vs.iter().zip(&pts) {
                match p {
                    None => r.push(Code::ForeignVertex, Some(fi), format!("block {ci} has point {v:?} outside 0..{n}")),
                    Some(p) => *inside.entry(*p).or_default() += 1,
                }
            }
            for (&p, &k) in &inside {
                if k > 1 {
                    r.push(Code::RepeatedVertex, Some(fi), format!("block {ci} repeats point {p}"));
                }
                if hits[p] > 0 {
                    r.push(Code::Overlap, Some(fi), format!("point {p} lies in two blocks"));
                }
                hits[p] += 1;
            }
            for k in 0..pts.len() {
                if let (Some(a), Some(b)) = (pts[k], pts[(k + 1) % pts.len()]) {
                    if a != b {
                        count[a * n + b] += 1;
                    }
                }
            }
        }
        let uncovered = hits.iter().filter(|&&h| h == 0).count();
        if uncovered > 0 {
            r.push(Code::NotSpanning, Some(fi), format!("{uncovered} points outside every block"));
        }
    }
    let mut missing = 0;
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            match count[a * n + b] {
                0 => missing += 1,
                1 => r.arcs += 1,
                k => {
                    r.arcs += 1;
                    r.push(Code::DuplicatePair, None, format!("pair ({a}, {b}) appears {k} times"));
                }
            }
        }
    }
    if missing > 0 {
        r.push(Code::MissingPair, None, format!("{missing} of {} ordered pairs never appear", n * (n.saturating_sub(1))));
    }
    r
}

/// Loads a serialized factorization, builds the ambient its kind names, and
/// runs every check. Only parse and I/O failures are errors.
pub fn certify_file(path: &Path) -> Result<Report> {
    let fac = io::read_file(path)?;
    Ok(certify(&fac))
}

pub fn certify(fac: &Factorization) -> Report {
    let mut r = match fac.ambient() {
        Ok(g) => verify_factorization(fac, &g),
        Err(e) => {
            let mut r = Report::default();
            r.push(Code::VertexCountField, None, format!("cannot build the ambient digraph: {e}"));
            return r;
        }
    };
    if fac.kind == Kind::CompleteSymmetric {
        let extra = verify_mendelsohn(fac);
        for v in extra.violations {
            if !r.violations.contains(&v) {
                r.violations.push(v);
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{complete_symmetric, DirectedCycle};

    fn v(i: u32, n: u32) -> Vertex {
        Vertex::new(0, i, n)
    }

    fn cyc(idx: &[u32], n: u32) -> DirectedCycle {
        DirectedCycle::raw(idx.iter().map(|&i| v(i, n)).collect())
    }

    #[test]
    fn single_factor() {
        let all: BTreeSet<Vertex> = (0..10).map(|i| v(i, 10)).collect();
        let ok = Factor::new(vec![cyc(&[0, 1, 2, 3, 4], 10), cyc(&[5, 6, 7, 8, 9], 10)]);
        assert!(verify_factor(&ok, &all, 5).is_ok());
        let shared = Factor::new(vec![cyc(&[0, 1, 2, 3, 4], 10), cyc(&[4, 6, 7, 8, 9], 10)]);
        assert!(verify_factor(&shared, &all, 5).has(Code::Overlap));
        let short = Factor::new(vec![cyc(&[0, 1, 2, 3, 4], 10)]);
        assert_eq!(verify_factor(&short, &all, 5).codes(), [Code::NotSpanning].into());
    }

    #[test]
    fn k4_into_two_cycles() {
        // K*_4 has 12 arcs: three factors of two 2-cycles each.
        let n = 4;
        let fac = Factorization {
            kind: Kind::CompleteSymmetric,
            n: 4,
            cycle_length: 2,
            factors: vec![
                Factor::new(vec![cyc(&[0, 1], n), cyc(&[2, 3], n)]),
                Factor::new(vec![cyc(&[0, 2], n), cyc(&[1, 3], n)]),
                Factor::new(vec![cyc(&[0, 3], n), cyc(&[1, 2], n)]),
            ],
        };
        let g = complete_symmetric(4).unwrap();
        assert!(verify_factorization(&fac, &g).is_ok());
        assert!(verify_mendelsohn(&fac).is_ok());
        let mut bad = fac.clone();
        bad.factors.push(bad.factors[0].clone());
        assert!(verify_factorization(&bad, &g).has(Code::ArcReuse));
        assert!(verify_mendelsohn(&bad).has(Code::DuplicatePair));
        bad.factors.truncate(2);
        assert!(verify_factorization(&bad, &g).has(Code::MissingArcs));
        assert!(verify_mendelsohn(&bad).has(Code::MissingPair));
    }
}
