//! Four-factor factorization of `L_2m = X(m, {1, 3}) ≀ K̄_2` for odd `m >= 13`
//! with `3 ∤ m`, and the certificate that none exists when `3 | m`.

use crate::digraph::{close_sequences, ensure_factorization, l_digraph, DirectedCycle, Factor, Factorization, Kind, Seq, Vertex};
use crate::error::{Error, Result};

// Head dipaths shared by both cases, raw indices.
const HEADS: [[&str; 4]; 4] = [
    [
        "y0 y1 y2 x3 x4 x5 y6 y7 x8 x9 x10 y11 x12 y13",
        "x2 y5 y8 x11 x14",
        "x1 y4 x7 y10 x13",
        "x0 y3 x6 y9 y12 x15",
    ],
    [
        "x0 x1 x2 y3 x4 y5 y6 x7 x8 y9 y10 x11 y12 x13",
        "y2 x5 y8 y11 y14",
        "y1 y4 y7 x10 y13",
        "y0 x3 x6 x9 x12 y15",
    ],
    [
        "x0 y1 x2 x3 y4 x5 x6 x7 y8 y9 x10 x11 x12 x13",
        "y2 y5 x8 y11 x14",
        "x1 x4 y7 y10 y13",
        "y0 y3 y6 x9 y12 y15",
    ],
    [
        "y0 x1 y2 y3 y4 y5 x6 y7 y8 x9 y10 y11 y12 y13",
        "x2 x5 x8 x11 y14",
        "y1 x4 x7 x10 x13",
        "x0 x3 y6 y9 x12 x15",
    ],
];

/// The dipaths of one case, reduced modulo `m`. At `m = 13` some heads close
/// on themselves, hence raw sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LCaseTables {
    pub m: u32,
    /// 1 or 5.
    pub p: u32,
    pub k: u32,
    /// `[W, X, Y, Z]` for each `i`.
    pub heads: [[Seq; 4]; 4],
    /// `Q` for each `i`.
    pub q: [Seq; 4],
    /// `[R, S, T]` (primed when `p = 5`) for each `i`.
    pub rst: [[Seq; 3]; 4],
}

fn parse_raw(s: &str, m: u32) -> Seq {
    s
        .split_whitespace()
        .map(|t| {
            let layer = if t.starts_with('x') { 0 } else { 1 };
            Vertex::new(layer, t[1..].parse::<u32>().unwrap() % m, m)
        })
        .collect()
}

// Arithmetic progression from `start` to `end` (raw indices) with the given step.
fn progression(m: u32, start: u32, end: u32, step: u32, layer: impl Fn(u32, u32) -> u32) -> Seq {
    (0..=(end - start) / step)
        .map(|pos| {
            let raw = start + pos * step;
            Vertex::new(layer(pos, raw), raw % m, m)
        })
        .collect()
}

fn alternating(first: u32) -> impl Fn(u32, u32) -> u32 {
    move |pos, _| (first + pos) % 2
}

fn check_order(m: u32) -> Result<()> {
    if m.is_multiple_of(2) {
        return Err(Error::Unsupported { m, reason: "L construction needs odd m".into() });
    }
    if m.is_multiple_of(3) {
        return Err(Error::LNonExistence(Box::new(l_nonexistence_certificate(m)?)));
    }
    if m < 13 {
        return Err(Error::Unsupported { m, reason: "L construction starts at m = 13".into() });
    }
    Ok(())
}

pub fn l_tables(m: u32) -> Result<LCaseTables> {
    check_order(m)?;
    let (p, k) = (m % 6, m / 6);
    let heads = HEADS.map(|row| row.map(|s| parse_raw(s, m)));
    let q = [
        progression(m, 13, m, 1, |_, _| 1),
        progression(m, 13, m, 1, |_, _| 0),
        progression(m, 13, m, 1, |_, raw| u32::from(raw % 2 == 0)),
        progression(m, 13, m, 1, |_, raw| raw % 2),
    ];
    // (start, end) of R, S, T for the two cases.
    let spans = if p == 1 { [(14, m + 1), (13, m), (15, m + 2)] } else { [(14, m), (15, m + 1), (13, m + 2)] };
    let firsts: [[u32; 3]; 4] = [[0, 0, 0], [1, 1, 1], [0, 1, 1], [1, 0, 0]];
    let mut rst = Vec::new();
    for (i, first) in firsts.iter().enumerate() {
        let mut row = Vec::new();
        for (j, &(a, b)) in spans.iter().enumerate() {
            row.push(if i < 2 {
                progression(m, a, b, 3, move |_, _| first[j])
            } else {
                progression(m, a, b, 3, alternating(first[j]))
            });
        }
        rst.push(<[Seq; 3]>::try_from(row).unwrap());
    }
    Ok(LCaseTables { m, p, k, heads, q, rst: <[[Seq; 3]; 4]>::try_from(rst).unwrap() })
}

/// The eight cycles, ordered factor by factor: the type-1 cycle then the type-3 one.
pub fn l_cycles(m: u32) -> Result<Vec<[DirectedCycle; 2]>> {
    let t = l_tables(m)?;
    (0..4)
        .map(|i| {
            let [w, x, y, z] = &t.heads[i];
            let [r, s, tt] = &t.rst[i];
            let first = close_sequences(&[w, &t.q[i]])?;
            let second = if t.p == 1 {
                close_sequences(&[x, r, y, s, z, tt])?
            } else {
                close_sequences(&[x, r, z, s, y, tt])?
            };
            Ok([first, second])
        })
        .collect()
}

pub fn l_factorization(m: u32) -> Result<Factorization> {
    let factors = l_cycles(m)?.into_iter().map(|pair| Factor::new(pair.to_vec())).collect();
    let fac = Factorization { kind: Kind::L, n: 2 * m as usize, cycle_length: m as usize, factors };
    ensure_factorization(&fac, &l_digraph(m)?)?;
    Ok(fac)
}

/// Why one row of the difference-count table cannot give an `m`-cycle
/// through a difference-3 arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `k1 + 3 k2` is not a multiple of `m`, so the arcs cannot close up.
    NotMultiple,
    /// Closes up, but carries no difference-3 arc.
    NoDifferenceThree,
    /// Every arc has difference 3: index `0` comes back after `period` steps,
    /// so an `m`-step walk meets it `visits` times on only two layers.
    Revisits { period: u32, visits: u32 },
    /// Nothing rules the row out.
    Feasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertRow {
    pub k1: u32,
    pub k2: u32,
    pub arc_sum: u32,
    pub verdict: Verdict,
}

impl CertRow {
    /// A row is feasible when it could be a cycle using a difference-3 arc.
    pub fn feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub m: u32,
    pub rows: Vec<CertRow>,
}

impl Certificate {
    /// Re-derives every verdict and checks the table covers `k2 = 0..=m`.
    pub fn check(&self) -> bool {
        let m = self.m;
        self.rows.len() == m as usize + 1
            && self.rows.iter().enumerate().all(|(k2, row)| {
                let k2 = k2 as u32;
                row.k2 == k2 && row.k1 + row.k2 == m && row.arc_sum == row.k1 + 3 * row.k2 && classify(m, k2) == row.verdict
            })
    }

    pub fn feasible_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.feasible()).count()
    }
}

fn classify(m: u32, k2: u32) -> Verdict {
    let sum = m - k2 + 3 * k2;
    if !sum.is_multiple_of(m) {
        Verdict::NotMultiple
    } else if k2 == 0 {
        Verdict::NoDifferenceThree
    } else {
        let mut idx = 3 % m;
        let mut period = 1;
        while idx != 0 {
            idx = (idx + 3) % m;
            period += 1;
        }
        if period == m {
            Verdict::Feasible
        } else {
            Verdict::Revisits { period, visits: m.div_ceil(period) }
        }
    }
}

pub fn l_nonexistence_certificate(m: u32) -> Result<Certificate> {
    if !m.is_multiple_of(3) || m.is_multiple_of(2) {
        return Err(Error::NotApplicable(format!("m={m} is not an odd multiple of 3")));
    }
    Ok(difference_table(m))
}

/// The full `(k1, k2)` table for any odd `m`. Only when `3 | m` is it free of
/// feasible rows.
pub fn difference_table(m: u32) -> Certificate {
    let rows = (0..=m)
        .map(|k2| CertRow { k1: m - k2, k2, arc_sum: m + 2 * k2, verdict: classify(m, k2) })
        .collect();
    Certificate { m, rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{cycle_type, walk_arc_sum};

    fn len(s: &Seq) -> usize {
        s.len() - 1
    }

    fn show(s: &Seq) -> String {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn lengths() {
        let t = l_tables(13).unwrap();
        assert_eq!((t.p, t.k), (1, 2));
        assert_eq!(len(&t.q[0]), 0);
        assert!(t.rst.iter().flatten().all(|d| len(d) == 0));
        let t = l_tables(37).unwrap();
        assert_eq!(len(&t.q[0]), 24);
        assert!(t.rst.iter().flatten().all(|d| len(d) == 2 * (6 - 2)));
        let t = l_tables(29).unwrap();
        assert_eq!((t.p, t.k), (5, 4));
        for row in &t.rst {
            assert_eq!([len(&row[0]), len(&row[1]), len(&row[2])], [5, 5, 6]);
        }
    }

    #[test]
    fn printed_progressions() {
        let t = l_tables(17).unwrap();
        assert_eq!(show(&t.rst[0][2]), "x13 x16 x2");
        assert_eq!(show(&t.rst[2][0]), "x14 y0");
        let t = l_tables(25).unwrap();
        assert_eq!(show(&t.q[2]), "x13 y14 x15 y16 x17 y18 x19 y20 x21 y22 x23 y24 x0");
        assert_eq!(show(&t.rst[2][1]), "y13 x16 y19 x22 y0");
        assert_eq!(show(&t.rst[3][2]), "x15 y18 x21 y24 x2");
    }

    #[test]
    fn sums_at_thirteen() {
        let cs = l_cycles(13).unwrap();
        assert_eq!(walk_arc_sum(&cs[0][1]).unwrap(), 39);
        assert_eq!(cycle_type(&cs[0][1]).unwrap(), 3);
        assert_eq!(cs[0][0].len(), 13);
        for pair in &cs {
            assert_eq!([cycle_type(&pair[0]).unwrap(), cycle_type(&pair[1]).unwrap()], [1, 3]);
        }
    }

    #[test]
    fn refuses() {
        assert!(matches!(l_factorization(9), Err(Error::LNonExistence(_))));
        assert!(matches!(l_factorization(11), Err(Error::Unsupported { .. })));
        assert!(matches!(l_nonexistence_certificate(13), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn certificate_rows() {
        for m in [9, 15, 21, 45] {
            let c = l_nonexistence_certificate(m).unwrap();
            assert!(c.check());
            assert_eq!(c.feasible_rows(), 0);
            assert_eq!(c.rows.last().unwrap().verdict, Verdict::Revisits { period: m / 3, visits: 3 });
        }
        assert_eq!(difference_table(13).feasible_rows(), 1);
    }
}
