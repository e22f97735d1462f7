//! Vertices, arcs, walks and the digraph generators everything else is built on.
//!
//! Vertices are layered residues: `x_a` is layer 0, `y_a` is layer 1. Wreath
//! blow-ups with more than two layers keep the same shape.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub layer: u32,
    pub index: u32,
    pub modulus: u32,
}

impl Vertex {
    pub fn new(layer: u32, index: u32, modulus: u32) -> Self {
        assert!(modulus > 0 && index < modulus, "index {index} out of range for modulus {modulus}");
        Vertex { layer, index, modulus }
    }

    pub fn x(index: u32, modulus: u32) -> Self {
        Vertex::new(0, index, modulus)
    }

    pub fn y(index: u32, modulus: u32) -> Self {
        Vertex::new(1, index, modulus)
    }

    /// Position in `0..layers*modulus`, layer-major.
    pub fn flat(&self) -> u32 {
        self.layer * self.modulus + self.index
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.layer {
            0 => write!(f, "x{}", self.index),
            1 => write!(f, "y{}", self.index),
            l => write!(f, "L{}_{}", l, self.index),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arc {
    pub fn new(tail: Vertex, head: Vertex) -> Result<Self> {
        if tail.modulus != head.modulus {
            return Err(Error::ModulusMismatch(tail.modulus, head.modulus));
        }
        if tail == head {
            return Err(Error::Loop(tail));
        }
        Ok(Arc { tail, head })
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tail, self.head)
    }
}

/// Anything that can be read as a sequence of arcs.
pub trait Walk {
    fn walk_arcs(&self) -> Vec<Arc>;
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dipath {
    vertices: Vec<Vertex>,
}

impl Dipath {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        let first = *vertices.first().ok_or(Error::EmptyWalk)?;
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if v.modulus != first.modulus {
                return Err(Error::ModulusMismatch(first.modulus, v.modulus));
            }
            if !seen.insert(*v) {
                return Err(Error::NotAPath(*v));
            }
        }
        Ok(Dipath { vertices })
    }

    pub fn trivial(v: Vertex) -> Self {
        Dipath { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn source(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn terminus(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn interior(&self) -> &[Vertex] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }
}

impl Walk for Dipath {
    fn walk_arcs(&self) -> Vec<Arc> {
        self.vertices.windows(2).map(|w| Arc { tail: w[0], head: w[1] }).collect()
    }
}

impl fmt::Display for Dipath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tokens(f, &self.vertices)
    }
}

/// A directed cycle stored in canonical rotation (least vertex first).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedCycle {
    vertices: Vec<Vertex>,
}

impl DirectedCycle {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::EmptyWalk);
        }
        Dipath::new(vertices.clone())?;
        Ok(DirectedCycle::raw(vertices))
    }

    /// Canonicalises the rotation but skips every other check. Meant for
    /// untrusted input that the verifier is about to inspect.
    pub fn raw(mut vertices: Vec<Vertex>) -> Self {
        if let Some(pos) = vertices.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i) {
            vertices.rotate_left(pos);
        }
        DirectedCycle { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl Walk for DirectedCycle {
    fn walk_arcs(&self) -> Vec<Arc> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| Arc { tail: self.vertices[i], head: self.vertices[(i + 1) % n] })
            .collect()
    }
}

impl fmt::Display for DirectedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tokens(f, &self.vertices)
    }
}

fn write_tokens(f: &mut fmt::Formatter<'_>, vs: &[Vertex]) -> fmt::Result {
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    vertices: BTreeSet<Vertex>,
    arcs: BTreeSet<Arc>,
}

impl Digraph {
    pub fn new(vertices: BTreeSet<Vertex>, arcs: BTreeSet<Arc>) -> Result<Self> {
        for a in &arcs {
            for v in [a.tail, a.head] {
                if !vertices.contains(&v) {
                    return Err(Error::Construction(format!("arc {a} leaves the vertex set at {v}")));
                }
            }
        }
        Ok(Digraph { vertices, arcs })
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn contains_arc(&self, tail: Vertex, head: Vertex) -> bool {
        self.arcs.contains(&Arc { tail, head })
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        let lo = Arc { tail: v, head: Vertex { layer: 0, index: 0, modulus: 0 } };
        self.arcs.range(lo..).take_while(|a| a.tail == v).count()
    }
}

/// A spanning set of vertex-disjoint cycles, kept sorted by first vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    cycles: Vec<DirectedCycle>,
}

impl Factor {
    pub fn new(mut cycles: Vec<DirectedCycle>) -> Self {
        cycles.sort();
        Factor { cycles }
    }

    pub fn cycles(&self) -> &[DirectedCycle] {
        &self.cycles
    }

    pub fn arcs(&self) -> Vec<Arc> {
        self.cycles.iter().flat_map(|c| c.walk_arcs()).collect()
    }
}

/// Which ambient digraph a factorization claims to decompose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    CompleteSymmetric,
    H,
    L,
    G,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::CompleteSymmetric => "complete_symmetric",
            Kind::H => "H",
            Kind::L => "L",
            Kind::G => "G",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        match s {
            "complete_symmetric" => Some(Kind::CompleteSymmetric),
            "H" => Some(Kind::H),
            "L" => Some(Kind::L),
            "G" => Some(Kind::G),
            _ => None,
        }
    }

    pub fn is_layered(&self) -> bool {
        !matches!(self, Kind::CompleteSymmetric)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub kind: Kind,
    /// Number of ambient vertices.
    pub n: usize,
    pub cycle_length: usize,
    pub factors: Vec<Factor>,
}

impl Factorization {
    /// Builds the digraph this factorization claims to decompose.
    pub fn ambient(&self) -> Result<Digraph> {
        let m = (self.n / 2) as u32;
        match self.kind {
            Kind::CompleteSymmetric => complete_symmetric(self.n),
            _ if !self.n.is_multiple_of(2) || m < 2 => Err(Error::InvalidOrder(self.n)),
            Kind::H => h_digraph(m),
            Kind::L => l_digraph(m),
            Kind::G => g_digraph(m),
        }
    }
}

/// `K*_n` on vertices `v0..v{n-1}`.
pub fn complete_symmetric(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let n32 = n as u32;
    let vertices: BTreeSet<Vertex> = (0..n32).map(|i| Vertex::new(0, i, n32)).collect();
    let mut arcs = BTreeSet::new();
    for &u in &vertices {
        for &v in &vertices {
            if u != v {
                arcs.insert(Arc { tail: u, head: v });
            }
        }
    }
    Digraph::new(vertices, arcs)
}

/// The edgeless digraph on `n` vertices.
pub fn empty_digraph(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    let n32 = n as u32;
    Digraph::new((0..n32).map(|i| Vertex::new(0, i, n32)).collect(), BTreeSet::new())
}

/// `X(m, D)`: vertex set `Z_m`, arc `(a, b)` whenever `b - a` lies in `D`.
pub fn directed_circulant(m: u32, d: &[u32]) -> Result<Digraph> {
    if m == 0 {
        return Err(Error::InvalidOrder(0));
    }
    for &x in d {
        if x == 0 || x >= m {
            return Err(Error::InvalidConnectionSet { m, d: x });
        }
    }
    let vertices: BTreeSet<Vertex> = (0..m).map(|i| Vertex::new(0, i, m)).collect();
    let mut arcs = BTreeSet::new();
    for i in 0..m {
        for &x in d {
            arcs.insert(Arc { tail: Vertex::new(0, i, m), head: Vertex::new(0, (i + x) % m, m) });
        }
    }
    Digraph::new(vertices, arcs)
}

/// Wreath (lexicographic) product `g ≀ h`.
///
/// The vertex `(g_i, h_j)` becomes `Vertex { layer: j, index: i, modulus: |V(g)| }`
/// where `i`, `j` are positions in the sorted vertex sets.
pub fn wreath(g: &Digraph, h: &Digraph) -> Result<Digraph> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let gm = g.vertex_count() as u32;
    let gpos: BTreeMap<Vertex, u32> = g.vertices().iter().enumerate().map(|(i, v)| (*v, i as u32)).collect();
    let hpos: BTreeMap<Vertex, u32> = h.vertices().iter().enumerate().map(|(i, v)| (*v, i as u32)).collect();
    let lift = |gv: &Vertex, hv: &Vertex| Vertex::new(hpos[hv], gpos[gv], gm);

    let mut vertices = BTreeSet::new();
    for gv in g.vertices() {
        for hv in h.vertices() {
            vertices.insert(lift(gv, hv));
        }
    }
    let mut arcs = BTreeSet::new();
    for a in g.arcs() {
        for h1 in h.vertices() {
            for h2 in h.vertices() {
                arcs.insert(Arc { tail: lift(&a.tail, h1), head: lift(&a.head, h2) });
            }
        }
    }
    for gv in g.vertices() {
        for b in h.arcs() {
            arcs.insert(Arc { tail: lift(gv, &b.tail), head: lift(gv, &b.head) });
        }
    }
    Digraph::new(vertices, arcs)
}

/// `X(m, {±1}) ≀ K̄_2`.
pub fn h_digraph(m: u32) -> Result<Digraph> {
    if m < 3 {
        return Err(Error::InvalidOrder(m as usize));
    }
    wreath(&directed_circulant(m, &[1, m - 1])?, &empty_digraph(2)?)
}

/// `X(m, {1, 3}) ≀ K̄_2`.
pub fn l_digraph(m: u32) -> Result<Digraph> {
    wreath(&directed_circulant(m, &[1, 3])?, &empty_digraph(2)?)
}

/// `X(m, {1, 3}) ≀ K*_2`.
pub fn g_digraph(m: u32) -> Result<Digraph> {
    wreath(&directed_circulant(m, &[1, 3])?, &complete_symmetric(2)?)
}

/// `(head - tail) mod m`, blind to layers.
pub fn arc_difference(a: &Arc) -> Result<u32> {
    let m = a.tail.modulus;
    if a.head.modulus != m {
        return Err(Error::ModulusMismatch(m, a.head.modulus));
    }
    Ok((a.head.index + m - a.tail.index) % m)
}

/// Sum of arc differences, each lifted into `1..m`.
///
/// A vertical arc (difference 0) lifts to 0.
pub fn walk_arc_sum<W: Walk>(w: &W) -> Result<u64> {
    let mut total = 0u64;
    for a in w.walk_arcs() {
        total += arc_difference(&a)? as u64;
    }
    Ok(total)
}

/// `walk_arc_sum(c) / m` for a cycle on `m` vertices.
pub fn cycle_type(c: &DirectedCycle) -> Result<u64> {
    let m = c.vertices().first().ok_or(Error::EmptyWalk)?.modulus as u64;
    let s = walk_arc_sum(c)?;
    if s % m != 0 {
        return Err(Error::Construction(format!("arc sum {s} of cycle {c} is not a multiple of {m}")));
    }
    Ok(s / m)
}

/// Index shift `ρ^shift`, layers untouched.
pub trait Rho: Sized {
    fn rho(&self, shift: i64) -> Self;
}

impl Rho for Vertex {
    fn rho(&self, shift: i64) -> Self {
        let m = self.modulus as i64;
        Vertex { index: (self.index as i64 + shift).rem_euclid(m) as u32, ..*self }
    }
}

impl Rho for Arc {
    fn rho(&self, shift: i64) -> Self {
        Arc { tail: self.tail.rho(shift), head: self.head.rho(shift) }
    }
}

impl Rho for Dipath {
    fn rho(&self, shift: i64) -> Self {
        Dipath { vertices: self.vertices.iter().map(|v| v.rho(shift)).collect() }
    }
}

impl Rho for DirectedCycle {
    fn rho(&self, shift: i64) -> Self {
        DirectedCycle::raw(self.vertices.iter().map(|v| v.rho(shift)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Joined {
    Path(Dipath),
    Cycle(DirectedCycle),
}

/// Joins dipaths end to end. Closes into a cycle when the last terminus is the
/// first source.
pub fn concatenate(paths: &[Dipath]) -> Result<Joined> {
    let first = paths.first().ok_or(Error::EmptyWalk)?;
    let mut seq: Vec<Vertex> = first.vertices().to_vec();
    for p in &paths[1..] {
        let prev = *seq.last().unwrap();
        if prev != p.source() {
            return Err(Error::EndpointMismatch { prev, next: p.source() });
        }
        seq.extend_from_slice(&p.vertices()[1..]);
    }
    let closed = seq.len() > 2 && seq.first() == seq.last();
    if closed {
        seq.pop();
    }
    let mut seen = BTreeSet::new();
    for v in &seq {
        if !seen.insert(*v) {
            return Err(Error::NotAPath(*v));
        }
    }
    if closed {
        Ok(Joined::Cycle(DirectedCycle::raw(seq)))
    } else {
        Ok(Joined::Path(Dipath { vertices: seq }))
    }
}

/// A raw vertex sequence. Used where a dipath may fold onto itself once its
/// indices are reduced, so the first and last vertex can coincide.
pub type Seq = Vec<Vertex>;

/// Joins sequences end to end and closes the result into a cycle.
pub fn close_sequences(parts: &[&[Vertex]]) -> Result<DirectedCycle> {
    let first = parts.first().ok_or(Error::EmptyWalk)?;
    let mut vs: Seq = first.to_vec();
    for p in &parts[1..] {
        let prev = *vs.last().ok_or(Error::EmptyWalk)?;
        let next = *p.first().ok_or(Error::EmptyWalk)?;
        if prev != next {
            return Err(Error::EndpointMismatch { prev, next });
        }
        vs.extend_from_slice(&p[1..]);
    }
    if vs.len() < 3 || vs.first() != vs.last() {
        return Err(Error::EndpointMismatch { prev: *vs.last().unwrap(), next: vs[0] });
    }
    vs.pop();
    DirectedCycle::new(vs)
}

/// Like [`concatenate`] but insists on a closed result.
pub fn close_cycle(paths: &[Dipath]) -> Result<DirectedCycle> {
    match concatenate(paths)? {
        Joined::Cycle(c) => Ok(c),
        Joined::Path(p) => Err(Error::EndpointMismatch { prev: p.terminus(), next: p.source() }),
    }
}

/// Internal self-check used by the builders before returning: every cycle has
/// the right length, every factor spans, and the arcs partition `ambient`.
pub(crate) fn ensure_factorization(fac: &Factorization, ambient: &Digraph) -> Result<()> {
    let bug = |msg: String| Err(Error::Construction(msg));
    let mut used = BTreeSet::new();
    for (fi, f) in fac.factors.iter().enumerate() {
        let mut covered = BTreeSet::new();
        for c in f.cycles() {
            if c.len() != fac.cycle_length {
                return bug(format!("factor {fi}: cycle {c} has length {}", c.len()));
            }
            for v in c.vertices() {
                if !covered.insert(*v) {
                    return bug(format!("factor {fi}: vertex {v} covered twice"));
                }
            }
            for a in c.walk_arcs() {
                if !ambient.arcs().contains(&a) {
                    return bug(format!("factor {fi}: arc {a} is not in the ambient digraph"));
                }
                if !used.insert(a) {
                    return bug(format!("factor {fi}: arc {a} used twice"));
                }
            }
        }
        if covered.len() != ambient.vertex_count() {
            return bug(format!("factor {fi} covers {} of {} vertices", covered.len(), ambient.vertex_count()));
        }
    }
    if used.len() != ambient.arc_count() {
        return bug(format!("{} of {} arcs covered", used.len(), ambient.arc_count()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs(m: u32, idx: &[u32]) -> Vec<Vertex> {
        idx.iter().map(|&i| Vertex::x(i, m)).collect()
    }

    #[test]
    fn complete_symmetric_counts() {
        assert_eq!(complete_symmetric(6).unwrap().arc_count(), 30);
        assert_eq!(complete_symmetric(26).unwrap().arc_count(), 650);
        let k2 = complete_symmetric(2).unwrap();
        let v0 = Vertex::new(0, 0, 2);
        let v1 = Vertex::new(0, 1, 2);
        assert!(k2.contains_arc(v0, v1) && k2.contains_arc(v1, v0));
        assert_eq!(complete_symmetric(1), Err(Error::InvalidOrder(1)));
    }

    #[test]
    fn circulant_basics() {
        let c5 = directed_circulant(5, &[1]).unwrap();
        assert_eq!(c5.arc_count(), 5);
        for i in 0..5 {
            assert!(c5.contains_arc(Vertex::x(i, 5), Vertex::x((i + 1) % 5, 5)));
        }
        assert_eq!(directed_circulant(11, &[1, 3]).unwrap().arc_count(), 22);
        assert_eq!(directed_circulant(5, &[0]), Err(Error::InvalidConnectionSet { m: 5, d: 0 }));
        assert!(directed_circulant(5, &[5]).is_err());
    }

    #[test]
    fn wreath_counts() {
        for m in [5u32, 7, 11] {
            let h = h_digraph(m).unwrap();
            assert_eq!(h.vertex_count(), 2 * m as usize);
            assert_eq!(h.arc_count(), 8 * m as usize);
        }
        let g = g_digraph(11).unwrap();
        assert!(g.vertices().iter().all(|&v| g.out_degree(v) == 5));
        let point = directed_circulant(1, &[]).unwrap();
        let k2 = wreath(&point, &complete_symmetric(2).unwrap()).unwrap();
        assert_eq!((k2.vertex_count(), k2.arc_count()), (2, 2));
    }

    #[test]
    fn differences() {
        let d = |t: Vertex, h: Vertex| arc_difference(&Arc::new(t, h).unwrap()).unwrap();
        assert_eq!(d(Vertex::x(2, 11), Vertex::y(5, 11)), 3);
        assert_eq!(d(Vertex::y(10, 11), Vertex::x(1, 11)), 2);
        assert_eq!(d(Vertex::x(0, 13), Vertex::x(3, 13)), 3);
        assert!(Arc::new(Vertex::x(0, 5), Vertex::x(0, 7)).is_err());
    }

    #[test]
    fn sums_and_types() {
        let c = DirectedCycle::new(xs(5, &[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(walk_arc_sum(&c).unwrap(), 5);
        assert_eq!(cycle_type(&c).unwrap(), 1);
        assert_eq!(walk_arc_sum(&Dipath::trivial(Vertex::x(3, 5))).unwrap(), 0);
    }

    #[test]
    fn rho_wraps() {
        assert_eq!(Vertex::x(12, 13).rho(1), Vertex::x(0, 13));
        assert_eq!(Vertex::y(11, 40).rho(12), Vertex::y(23, 40));
        assert_eq!(Vertex::x(3, 23).rho(-11), Vertex::x(15, 23));
    }

    #[test]
    fn concatenation() {
        let p = Dipath::new(xs(5, &[0, 1])).unwrap();
        let q = Dipath::new(xs(5, &[1, 2])).unwrap();
        assert_eq!(concatenate(&[p.clone(), q.clone()]).unwrap(), Joined::Path(Dipath::new(xs(5, &[0, 1, 2])).unwrap()));
        assert!(matches!(concatenate(&[q.clone(), p.clone()]), Err(Error::EndpointMismatch { .. })));
        let r = Dipath::new(xs(5, &[2, 3, 4, 0])).unwrap();
        assert!(matches!(concatenate(&[p.clone(), q.clone(), r]).unwrap(), Joined::Cycle(c) if c.len() == 5));
        let back = Dipath::new(xs(5, &[2, 1])).unwrap();
        assert_eq!(concatenate(&[p, q, back]), Err(Error::NotAPath(Vertex::x(1, 5))));
    }

    #[test]
    fn canonical_rotation() {
        let a = DirectedCycle::new(xs(5, &[3, 4, 0, 1, 2])).unwrap();
        assert_eq!(a.vertices()[0], Vertex::x(0, 5));
        let rev = DirectedCycle::new(xs(5, &[0, 4, 3, 2, 1])).unwrap();
        assert_ne!(a, rev);
    }
}
