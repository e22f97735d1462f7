//! Basic sets of dipaths and the five-factor factorization of
//! `G_2m = X(m, {1, 3}) ≀ K*_2` for odd `m >= 11`, `3 ∤ m`.
//!
//! Write `m = p + 12k` with `p ∈ {11, 13, 17, 19}`. Vertices with index below
//! `p` form the block `V_0`; each further run of 12 indices is a block `V_i`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use crate::digraph::{close_sequences, cycle_type, ensure_factorization, g_digraph, Arc, DirectedCycle, Factor, Factorization, Kind, Rho, Seq, Vertex};
use crate::error::{Error, Result};
use crate::g_tables;

pub const RESIDUES: [u32; 4] = [11, 13, 17, 19];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSet2 {
    pub p: u32,
    pub k: u32,
    pub w: Seq,
    pub x: Seq,
    pub y: Seq,
    pub z: Seq,
    pub q: Seq,
    pub r: Seq,
    pub s: Seq,
    pub t: Seq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSet1 {
    pub p: u32,
    pub k: u32,
    pub x: Seq,
    pub y: Seq,
    pub r: Seq,
    pub s: Seq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasicSet {
    Type2(BasicSet2),
    Type1(BasicSet1),
}

impl BasicSet {
    pub fn p(&self) -> u32 {
        match self {
            BasicSet::Type2(b) => b.p,
            BasicSet::Type1(b) => b.p,
        }
    }

    pub fn k(&self) -> u32 {
        match self {
            BasicSet::Type2(b) => b.k,
            BasicSet::Type1(b) => b.k,
        }
    }

    /// `(name, dipath)` pairs, heads first.
    pub fn named(&self) -> Vec<(&'static str, &Seq)> {
        match self {
            BasicSet::Type2(b) => vec![
                ("W", &b.w),
                ("X", &b.x),
                ("Y", &b.y),
                ("Z", &b.z),
                ("Q", &b.q),
                ("R", &b.r),
                ("S", &b.s),
                ("T", &b.t),
            ],
            BasicSet::Type1(b) => vec![("X", &b.x), ("Y", &b.y), ("R", &b.r), ("S", &b.s)],
        }
    }

    pub fn heads(&self) -> Vec<&Seq> {
        let n = self.named();
        let h = n.len() / 2;
        n.into_iter().take(h).map(|(_, s)| s).collect()
    }

    pub fn tails(&self) -> Vec<&Seq> {
        let n = self.named();
        let h = n.len() / 2;
        n.into_iter().skip(h).map(|(_, s)| s).collect()
    }

    /// Replaces every tail by the length-0 dipath at its source.
    pub fn truncate_for_k0(&self) -> BasicSet {
        let cut = |s: &Seq| vec![s[0]];
        match self {
            BasicSet::Type2(b) => BasicSet::Type2(BasicSet2 {
                q: cut(&b.q),
                r: cut(&b.r),
                s: cut(&b.s),
                t: cut(&b.t),
                ..b.clone()
            }),
            BasicSet::Type1(b) => BasicSet::Type1(BasicSet1 { r: cut(&b.r), s: cut(&b.s), ..b.clone() }),
        }
    }
}

/// The blocks `V_0, ..., V_k` as index ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub p: u32,
    pub k: u32,
}

impl BlockPartition {
    pub fn new(p: u32, k: u32) -> Self {
        BlockPartition { p, k }
    }

    pub fn modulus(&self) -> u32 {
        self.p + 12 * self.k
    }

    pub fn block_of(&self, v: Vertex) -> usize {
        if v.index < self.p {
            0
        } else {
            1 + ((v.index - self.p) / 12) as usize
        }
    }

    pub fn block(&self, i: usize) -> Vec<Vertex> {
        let m = self.modulus();
        let range = if i == 0 { 0..self.p } else { self.p + 12 * (i as u32 - 1)..self.p + 12 * i as u32 };
        [0, 1].iter().flat_map(|&l| range.clone().map(move |j| Vertex::new(l, j, m))).collect()
    }
}

/// `(p, k)` with `m = p + 12k`, or an error when `m` is outside the construction.
pub fn residue_split(m: u32) -> Result<(u32, u32)> {
    let p = match m % 12 {
        11 => 11,
        1 => 13,
        5 => 17,
        7 => 19,
        _ => return Err(Error::Unsupported { m, reason: "G construction needs odd m >= 11 with 3 not dividing m".into() }),
    };
    if m < p {
        return Err(Error::Unsupported { m, reason: "G construction needs m >= 11".into() });
    }
    Ok((p, (m - p) / 12))
}

fn parse_seq(s: &str, m: u32) -> Seq {
    s.split_whitespace()
        .map(|t| {
            let layer = if t.starts_with('x') { 0 } else { 1 };
            Vertex::new(layer, t[1..].parse::<u32>().unwrap() % m, m)
        })
        .collect()
}

/// The five basic sets `L0..L4` for residue `p`, instantiated at `m = p + 12k`.
/// At `k = 0` the tails are already truncated.
pub fn basic_set_tables(p: u32, k: u32) -> Result<[BasicSet; 5]> {
    let raw = g_tables::raw(p).ok_or(Error::Unsupported { m: p, reason: format!("no basic sets for p={p}") })?;
    let m = p + 12 * k;
    let table: BTreeMap<&str, &str> = raw.iter().copied().collect();
    // At k = 0 only the tail sources matter, and reducing whole tails modulo
    // p can fold them onto themselves.
    let get = |name: &str, i: usize| {
        let s = table[format!("{name}{i}").as_str()];
        let seq = parse_seq(s, m);
        if k == 0 && "QRST".contains(name) {
            vec![seq[0]]
        } else {
            seq
        }
    };
    let two = |i| {
        BasicSet::Type2(BasicSet2 {
            p,
            k,
            w: get("W", i),
            x: get("X", i),
            y: get("Y", i),
            z: get("Z", i),
            q: get("Q", i),
            r: get("R", i),
            s: get("S", i),
            t: get("T", i),
        })
    };
    let one = |i| BasicSet::Type1(BasicSet1 { p, k, x: get("X", i), y: get("Y", i), r: get("R", i), s: get("S", i) });
    Ok([two(0), two(1), two(2), one(3), one(4)])
}

/// One failed condition of a basic set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// `"C1"` to `"C6"`.
    pub condition: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.condition, self.detail)
    }
}

fn viol(condition: &'static str, detail: String) -> Violation {
    Violation { condition, detail }
}

fn show(s: &Seq) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn vertex_set(s: &Seq) -> BTreeSet<Vertex> {
    s.iter().copied().collect()
}

fn disjoint(a: &Seq, b: &Seq) -> bool {
    vertex_set(a).is_disjoint(&vertex_set(b))
}

fn len(s: &Seq) -> u32 {
    s.len() as u32 - 1
}

// Closes `a` then `b` into a cycle when both ends meet.
fn closed_pair(a: &Seq, b: &Seq) -> Option<DirectedCycle> {
    if a.last() != b.first() || b.last() != a.first() {
        return None;
    }
    let mut vs = a.clone();
    vs.pop();
    vs.extend_from_slice(&b[..b.len() - 1]);
    DirectedCycle::new(vs).ok()
}

fn closed_single(a: &Seq) -> Option<DirectedCycle> {
    if a.len() < 3 || a.first() != a.last() {
        return None;
    }
    DirectedCycle::new(a[..a.len() - 1].to_vec()).ok()
}

/// Evaluates C1 to C6 literally against `m = p + 12k`.
pub fn check_basic_set(set: &BasicSet, p: u32, k: u32, m: u32) -> Vec<Violation> {
    let mut out = Vec::new();
    if m != p + 12 * k {
        out.push(viol("C3", format!("m={m} is not p + 12k for p={p}, k={k}")));
        return out;
    }
    let blocks = BlockPartition::new(p, k);
    let named = set.named();
    let h = named.len() / 2;
    let (heads, tails) = named.split_at(h);
    for (name, s) in &named {
        if s.is_empty() || s.iter().any(|v| v.modulus != m) {
            out.push(viol("C3", format!("{name} is empty or not over Z_{m}")));
            return out;
        }
    }

    // C1
    for i in 0..tails.len() {
        for j in i + 1..tails.len() {
            if !disjoint(tails[i].1, tails[j].1) {
                out.push(viol("C1", format!("tails {} and {} meet", tails[i].0, tails[j].0)));
            }
        }
    }
    if k >= 1 {
        for i in 0..heads.len() {
            for j in i + 1..heads.len() {
                if !disjoint(heads[i].1, heads[j].1) {
                    out.push(viol("C1", format!("heads {} and {} meet", heads[i].0, heads[j].0)));
                }
            }
        }
    } else {
        let (cycles, want) = match set {
            BasicSet::Type2(b) => (vec![closed_pair(&b.w, &b.x), closed_pair(&b.y, &b.z)], 2),
            BasicSet::Type1(b) => (vec![closed_single(&b.x), closed_single(&b.y)], 1),
        };
        let mut seen = BTreeSet::new();
        for (ci, c) in cycles.iter().enumerate() {
            match c {
                None => out.push(viol("C1", format!("head cycle {ci} does not close into a directed cycle"))),
                Some(c) => {
                    if cycle_type(c).ok() != Some(want) {
                        out.push(viol("C1", format!("head cycle {c} is not of type {want}")));
                    }
                    if c.vertices().iter().any(|v| !seen.insert(*v)) {
                        out.push(viol("C1", "head cycles meet".into()));
                    }
                }
            }
        }
    }

    // C2
    let back = |v: Vertex| v.rho(-(p as i64));
    let c2_pairs: Vec<(&str, &Seq, &str, &Seq)> = match set {
        BasicSet::Type2(b) => vec![("X", &b.x, "W", &b.w), ("W", &b.w, "X", &b.x), ("Z", &b.z, "Y", &b.y), ("Y", &b.y, "Z", &b.z)],
        BasicSet::Type1(b) => vec![("X", &b.x, "X", &b.x), ("Y", &b.y, "Y", &b.y)],
    };
    for (sn, s, tn, t) in c2_pairs {
        if s[0] != back(*t.last().unwrap()) {
            out.push(viol("C2", format!("s({sn}) = {} but rho^-p(t({tn})) = {}", s[0], back(*t.last().unwrap()))));
        }
    }

    // C3
    let tail_len = if k >= 1 { 12 } else { 0 };
    match set {
        BasicSet::Type2(b) => {
            if len(&b.w) + len(&b.x) != p || len(&b.y) + len(&b.z) != p {
                out.push(viol("C3", format!("head lengths {}+{}, {}+{} should each sum to {p}", len(&b.w), len(&b.x), len(&b.y), len(&b.z))));
            }
            let ok = if k >= 1 {
                len(&b.q) + len(&b.r) == 12 && len(&b.s) + len(&b.t) == 12
            } else {
                [&b.q, &b.r, &b.s, &b.t].iter().all(|s| len(s) == 0)
            };
            if !ok {
                out.push(viol("C3", format!("tail lengths {} {} {} {}", len(&b.q), len(&b.r), len(&b.s), len(&b.t))));
            }
        }
        BasicSet::Type1(b) => {
            if len(&b.x) != p || len(&b.y) != p {
                out.push(viol("C3", format!("head lengths {} and {} should be {p}", len(&b.x), len(&b.y))));
            }
            if len(&b.r) != tail_len || len(&b.s) != tail_len {
                out.push(viol("C3", format!("tail lengths {} and {} should be {tail_len}", len(&b.r), len(&b.s))));
            }
        }
    }

    // C4
    let ends: BTreeSet<u32> = (p..p + 3).map(|t| t % m).collect();
    for (name, s) in heads {
        let body = &s[..s.len() - 1];
        if let Some(v) = body.iter().find(|v| blocks.block_of(**v) != 0) {
            out.push(viol("C4", format!("{name} has {v} outside V_0")));
        }
        let t = s.last().unwrap();
        if !ends.contains(&t.index) {
            out.push(viol("C4", format!("{name} ends at {t}, index not in p..p+2")));
        }
    }

    // C5
    for ((hn, hs), (tn, ts)) in heads.iter().zip(tails.iter()) {
        if hs.last() != ts.first() {
            out.push(viol("C5", format!("t({hn}) = {} but s({tn}) = {}", hs.last().unwrap(), ts[0])));
        }
    }

    // C6
    if k >= 1 {
        for (name, s) in tails {
            let (a, b) = (s[0], *s.last().unwrap());
            if b != a.rho(12) {
                out.push(viol("C6", format!("{name} runs {a} to {b}, expected {}", a.rho(12))));
            }
            if let Some(v) = s[1..s.len() - 1].iter().find(|v| blocks.block_of(**v) != 1) {
                out.push(viol("C6", format!("{name} has interior vertex {v} outside V_1")));
            }
        }
    }
    out
}

fn require_ok(set: &BasicSet, m: u32) -> Result<()> {
    let v = check_basic_set(set, set.p(), set.k(), m);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::BasicSet(v.iter().map(|v| v.to_string()).collect()))
    }
}

// `P ρ^12(P) ... ρ^{12(k-1)}(P)` as one sequence, or the source alone at k = 0.
fn repeat_tail(s: &Seq, k: u32) -> Seq {
    let mut out = vec![s[0]];
    for j in 0..k {
        out.extend(s[1..].iter().map(|v| v.rho(12 * j as i64)));
    }
    out
}

fn finish(c: DirectedCycle, m: u32, want: u64) -> Result<DirectedCycle> {
    if c.len() != m as usize || cycle_type(&c)? != want {
        return Err(Error::Construction(format!("expected a type-{want} {m}-cycle, got {c}")));
    }
    Ok(c)
}

/// `C^0 = W Q.. X R..`, `C^1 = Y S.. Z T..` with tails repeated under `ρ^12`.
pub fn extend_type2(b: &BasicSet2) -> Result<Factor> {
    let m = b.p + 12 * b.k;
    require_ok(&BasicSet::Type2(b.clone()), m)?;
    let rep = |s: &Seq| repeat_tail(s, b.k);
    let c0 = close_sequences(&[&b.w, &rep(&b.q), &b.x, &rep(&b.r)])?;
    let c1 = close_sequences(&[&b.y, &rep(&b.s), &b.z, &rep(&b.t)])?;
    Ok(Factor::new(vec![finish(c0, m, 2)?, finish(c1, m, 2)?]))
}

/// `C^0 = X R..`, `C^1 = Y S..`.
pub fn extend_type1(b: &BasicSet1) -> Result<Factor> {
    let m = b.p + 12 * b.k;
    require_ok(&BasicSet::Type1(b.clone()), m)?;
    let c0 = close_sequences(&[&b.x, &repeat_tail(&b.r, b.k)])?;
    let c1 = close_sequences(&[&b.y, &repeat_tail(&b.s, b.k)])?;
    Ok(Factor::new(vec![finish(c0, m, 1)?, finish(c1, m, 1)?]))
}

pub fn extend(set: &BasicSet) -> Result<Factor> {
    match set {
        BasicSet::Type2(b) => extend_type2(b),
        BasicSet::Type1(b) => extend_type1(b),
    }
}

/// Checks that the heads use every out-arc of `V_0` exactly once and, when
/// `k >= 1`, that the tails do the same for `V_1`. Returns the failures.
pub fn check_arc_disjointness(sets: &[BasicSet]) -> Vec<String> {
    let Some(first) = sets.first() else {
        return vec!["no basic sets".into()];
    };
    let (p, k) = (first.p(), first.k());
    let m = p + 12 * k;
    let blocks = BlockPartition::new(p, k);
    let g = match g_digraph(m) {
        Ok(g) => g,
        Err(e) => return vec![e.to_string()],
    };
    let mut problems = Vec::new();
    let mut tally = |paths: Vec<&Seq>, block: usize, label: &str| {
        let mut count: BTreeMap<Arc, usize> = BTreeMap::new();
        for s in paths {
            for w in s.windows(2) {
                *count.entry(Arc { tail: w[0], head: w[1] }).or_default() += 1;
            }
        }
        for v in blocks.block(block) {
            for a in g.arcs().iter().filter(|a| a.tail == v) {
                match count.remove(a).unwrap_or(0) {
                    1 => {}
                    n => problems.push(format!("{label}: arc {a} appears {n} times")),
                }
            }
        }
        for a in count.keys() {
            problems.push(format!("{label}: arc {a} is not an out-arc of V_{block} in G"));
        }
    };
    tally(sets.iter().flat_map(|s| s.heads()).collect(), 0, "heads");
    if k >= 1 {
        tally(sets.iter().flat_map(|s| s.tails()).collect(), 1, "tails");
    }
    problems
}

pub fn g_factorization(m: u32) -> Result<Factorization> {
    let (p, k) = residue_split(m)?;
    let sets = basic_set_tables(p, k)?;
    let problems = check_arc_disjointness(&sets);
    if !problems.is_empty() {
        return Err(Error::BasicSet(problems));
    }
    let factors = sets.iter().map(extend).collect::<Result<Vec<_>>>()?;
    let fac = Factorization { kind: Kind::G, n: 2 * m as usize, cycle_length: m as usize, factors };
    ensure_factorization(&fac, &g_digraph(m)?)?;
    Ok(fac)
}

/// One line per dipath: `p=11 L0 W: x0 x3 x4 y7 x7 y8 y11`.
pub fn dump_basic_sets(p: u32, k: u32) -> Result<String> {
    let mut out = String::new();
    for (i, set) in basic_set_tables(p, k)?.iter().enumerate() {
        for (name, s) in set.named() {
            writeln!(out, "p={p} L{i} {name}: {}", show(s)).unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str, m: u32) -> Seq {
        parse_seq(s, m)
    }

    #[test]
    fn printed_literals() {
        let sets = basic_set_tables(11, 1).unwrap();
        let BasicSet::Type2(b) = &sets[0] else { panic!() };
        assert_eq!(show(&b.w), "x0 x3 x4 y7 x7 y8 y11");
        let sets = basic_set_tables(19, 2).unwrap();
        let BasicSet::Type2(b) = &sets[0] else { panic!() };
        assert_eq!(show(&b.r), "y19 y22 y25 y28 y31");
        let sets = basic_set_tables(13, 1).unwrap();
        let BasicSet::Type1(b) = &sets[3] else { panic!() };
        assert_eq!((len(&b.x), *b.x.last().unwrap()), (13, Vertex::y(13, 25)));
    }

    #[test]
    fn truncation() {
        let sets = basic_set_tables(11, 0).unwrap();
        let BasicSet::Type2(b) = &sets[0] else { panic!() };
        assert_eq!(b.q, vec![Vertex::y(0, 11)]);
        let full = basic_set_tables(11, 1).unwrap();
        let once = full[0].truncate_for_k0();
        assert_eq!(once.truncate_for_k0(), once);
        let sets = basic_set_tables(13, 0).unwrap();
        let BasicSet::Type1(b) = &sets[3] else { panic!() };
        assert_eq!(b.r, vec![Vertex::y(0, 13)]);
    }

    #[test]
    fn all_sets_pass() {
        for p in RESIDUES {
            for k in 0..4 {
                for (i, set) in basic_set_tables(p, k).unwrap().iter().enumerate() {
                    let v = check_basic_set(set, p, k, p + 12 * k);
                    assert!(v.is_empty(), "p={p} k={k} L{i}: {v:?}");
                }
            }
        }
    }

    #[test]
    fn swapped_heads_break_c5() {
        let sets = basic_set_tables(11, 1).unwrap();
        let BasicSet::Type2(b) = &sets[0] else { panic!() };
        let swapped = BasicSet::Type2(BasicSet2 { w: b.x.clone(), x: b.w.clone(), ..b.clone() });
        let v = check_basic_set(&swapped, 11, 1, 23);
        assert!(v.iter().any(|v| v.condition == "C5"), "{v:?}");
    }

    #[test]
    fn k0_heads_close() {
        let sets = basic_set_tables(11, 0).unwrap();
        let f = extend(&sets[0]).unwrap();
        assert_eq!(f.cycles().len(), 2);
        for c in f.cycles() {
            assert_eq!((c.len(), cycle_type(c).unwrap()), (11, 2));
        }
        let f = extend(&sets[3]).unwrap();
        assert!(f.cycles().iter().all(|c| cycle_type(c).unwrap() == 1));
    }

    #[test]
    fn extension_sizes() {
        let sets = basic_set_tables(13, 2).unwrap();
        let f = extend(&sets[1]).unwrap();
        assert!(f.cycles().iter().all(|c| c.len() == 37 && cycle_type(c).unwrap() == 2));
        let sets = basic_set_tables(19, 1).unwrap();
        let f = extend(&sets[4]).unwrap();
        assert!(f.cycles().iter().all(|c| c.len() == 31 && cycle_type(c).unwrap() == 1));
    }

    #[test]
    fn dispatch() {
        assert_eq!(residue_split(11).unwrap(), (11, 0));
        assert_eq!(residue_split(13).unwrap(), (13, 0));
        assert_eq!(residue_split(53).unwrap(), (17, 3));
        assert!(residue_split(9).is_err());
        assert!(residue_split(7).is_err());
        assert!(residue_split(22).is_err());
    }

    #[test]
    fn counts() {
        let f = g_factorization(11).unwrap();
        assert_eq!(f.factors.len(), 5);
        assert_eq!(f.factors.iter().map(|f| f.arcs().len()).sum::<usize>(), 110);
    }

    #[test]
    fn dump_format() {
        let d = dump_basic_sets(11, 1).unwrap();
        assert_eq!(d.lines().next().unwrap(), "p=11 L0 W: x0 x3 x4 y7 x7 y8 y11");
        assert_eq!(d.lines().count(), 32);
    }

    #[test]
    fn seq_parse_reduces() {
        assert_eq!(seq("x25", 23), vec![Vertex::x(2, 23)]);
    }
}
