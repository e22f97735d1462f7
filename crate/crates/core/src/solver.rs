//! Base orders `m ∈ {5, 7, 9, 11}`: bundled solutions, a backtracking search
//! for `K*_2m`, and an exhaustive enumerator used as a test oracle.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::digraph::{complete_symmetric, Digraph, DirectedCycle, Factor, Factorization, Kind, Vertex};
use crate::error::{Error, Result};
use crate::io;
use crate::verifier::{verify_factorization, verify_mendelsohn};

pub const BASE_ORDERS: [u32; 4] = [5, 7, 9, 11];

const EMBEDDED: [(u32, &str); 4] = [
    (5, include_str!("../data/base/m5.json")),
    (7, include_str!("../data/base/m7.json")),
    (9, include_str!("../data/base/m9.json")),
    (11, include_str!("../data/base/m11.json")),
];

/// File name of the bundled solution for `m`.
pub fn base_file_name(m: u32) -> String {
    format!("m{m}.json")
}

/// The compiled-in JSON for a base order.
pub fn embedded_text(m: u32) -> &'static str {
    EMBEDDED.iter().find(|(k, _)| *k == m).map_or("", |(_, t)| *t)
}

fn check_base(m: u32) -> Result<()> {
    if m == 3 {
        return Err(Error::NonExistent { m, reason: "K*_6 has no directed 3-cycle factorization (exception (2,3))".into() });
    }
    if !BASE_ORDERS.contains(&m) {
        return Err(Error::Unsupported { m, reason: "base orders are 5, 7, 9 and 11".into() });
    }
    Ok(())
}

fn certified(fac: Factorization, m: u32, source: &str) -> Result<Factorization> {
    let n = 2 * m as usize;
    if fac.kind != Kind::CompleteSymmetric || fac.n != n || fac.cycle_length != m as usize {
        return Err(Error::Construction(format!("{source} does not describe K*_{n} split into {m}-cycles")));
    }
    let r = verify_factorization(&fac, &complete_symmetric(n)?);
    if !r.is_ok() {
        return Err(Error::Construction(format!("{source} fails verification: {r}")));
    }
    let r = verify_mendelsohn(&fac);
    if !r.is_ok() {
        return Err(Error::Construction(format!("{source} fails the design check: {r}")));
    }
    Ok(fac)
}

/// The bundled solution for `m`, from `dir` when given, else the copy compiled
/// into the library. Always verified.
pub fn load_base(m: u32, dir: Option<&Path>) -> Result<Factorization> {
    check_base(m)?;
    match dir {
        Some(d) => {
            let path = d.join(base_file_name(m));
            certified(io::read_file(&path)?, m, &path.display().to_string())
        }
        None => {
            certified(io::from_json(embedded_text(m))?, m, &format!("embedded {}", base_file_name(m)))
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// `None` searches until done.
    pub timeout: Option<Duration>,
    /// 0 keeps the natural vertex order; anything else shuffles it.
    pub seed: u64,
    pub use_bundled: bool,
    pub data_dir: Option<PathBuf>,
}

pub fn solve_base(m: u32, opts: &SolveOptions) -> Result<Factorization> {
    check_base(m)?;
    if opts.use_bundled {
        if let Ok(fac) = load_base(m, opts.data_dir.as_deref()) {
            return Ok(fac);
        }
    }
    let fac = search_complete(m, opts.timeout, opts.seed)?;
    certified(fac, m, "search result")
}

const CLOCK_EVERY: u64 = 1 << 16;

// Factor f is the one holding the arc (0, f + 1); inside a factor the first
// cycle starts at 0 and later ones at the least uncovered vertex.
struct Search {
    n: usize,
    m: usize,
    order: Vec<usize>,
    used: Vec<u32>,
    factors: Vec<Vec<Vec<usize>>>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(CLOCK_EVERY) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        !self.timed_out
    }

    fn factor(&mut self, f: usize) -> bool {
        if f == self.n - 1 {
            return true;
        }
        let (zero, next) = (0usize, f + 1);
        if self.used[zero] & (1 << next) != 0 {
            return false;
        }
        self.used[zero] |= 1 << next;
        let mut path = vec![zero, next];
        let cover = (1u32 << zero) | (1 << next);
        let mut cycles = Vec::new();
        let ok = self.walk(f, cover, &mut cycles, &mut path);
        self.used[zero] &= !(1 << next);
        ok
    }

    fn next_cycle(&mut self, f: usize, cover: u32, cycles: &mut Vec<Vec<usize>>) -> bool {
        if cover.count_ones() as usize == self.n {
            self.factors.push(cycles.clone());
            if self.factor(f + 1) {
                return true;
            }
            self.factors.pop();
            return false;
        }
        let s = (!cover).trailing_zeros() as usize;
        let mut path = vec![s];
        self.walk(f, cover | (1 << s), cycles, &mut path)
    }

    fn walk(&mut self, f: usize, cover: u32, cycles: &mut Vec<Vec<usize>>, path: &mut Vec<usize>) -> bool {
        if !self.tick() {
            return false;
        }
        let last = *path.last().unwrap();
        if path.len() == self.m {
            let start = path[0];
            if self.used[last] & (1 << start) != 0 {
                return false;
            }
            self.used[last] |= 1 << start;
            cycles.push(path.clone());
            if self.next_cycle(f, cover, cycles) {
                return true;
            }
            cycles.pop();
            self.used[last] &= !(1 << start);
            return false;
        }
        for k in 0..self.n {
            let v = self.order[k];
            if cover & (1 << v) != 0 || self.used[last] & (1 << v) != 0 {
                continue;
            }
            self.used[last] |= 1 << v;
            path.push(v);
            if self.walk(f, cover | (1 << v), cycles, path) {
                return true;
            }
            path.pop();
            self.used[last] &= !(1 << v);
            if self.timed_out {
                return false;
            }
        }
        false
    }
}

/// Plain backtracking for `K*_2m` with `m` in the base set.
pub fn search_complete(m: u32, timeout: Option<Duration>, seed: u64) -> Result<Factorization> {
    check_base(m)?;
    let n = 2 * m as usize;
    let mut order: Vec<usize> = (0..n).collect();
    if seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut s = Search {
        n,
        m: m as usize,
        order,
        used: vec![0; n],
        factors: Vec::new(),
        nodes: 0,
        deadline: timeout.map(|t| Instant::now() + t),
        timed_out: false,
    };
    if !s.factor(0) {
        return Err(if s.timed_out {
            Error::Timeout(timeout.unwrap_or_default())
        } else {
            Error::NotFound(format!("search for m={m} exhausted after {} nodes", s.nodes))
        });
    }
    let n32 = n as u32;
    let factors = s
        .factors
        .iter()
        .map(|f| {
            let cycles = f
                .iter()
                .map(|c| DirectedCycle::new(c.iter().map(|&i| Vertex::new(0, i as u32, n32)).collect()))
                .collect::<Result<Vec<_>>>()?;
            Ok(Factor::new(cycles))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Factorization { kind: Kind::CompleteSymmetric, n, cycle_length: m as usize, factors })
}

struct Enumerator {
    n: usize,
    m: usize,
    out: Vec<Vec<usize>>,
    has: Vec<Vec<bool>>,
    used: Vec<Vec<bool>>,
    factors_left: usize,
    current: Vec<Vec<Vec<usize>>>,
    found: Vec<Vec<Vec<Vec<usize>>>>,
    limit: usize,
}

impl Enumerator {
    fn done(&self) -> bool {
        self.found.len() >= self.limit
    }

    fn least_free_arc(&self) -> Option<(usize, usize)> {
        (0..self.n).flat_map(|u| self.out[u].iter().map(move |&v| (u, v))).find(|&(u, v)| !self.used[u][v])
    }

    fn factor(&mut self) {
        if self.factors_left == 0 {
            self.found.push(self.current.clone());
            return;
        }
        let Some((t, h)) = self.least_free_arc() else { return };
        if t == h {
            return;
        }
        self.used[t][h] = true;
        let mut cover = vec![false; self.n];
        cover[t] = true;
        cover[h] = true;
        let mut cycles = Vec::new();
        let mut path = vec![t, h];
        self.factors_left -= 1;
        self.walk(&mut cover, &mut cycles, &mut path);
        self.factors_left += 1;
        self.used[t][h] = false;
    }

    fn next_cycle(&mut self, cover: &mut Vec<bool>, cycles: &mut Vec<Vec<usize>>) {
        match cover.iter().position(|c| !c) {
            None => {
                self.current.push(cycles.clone());
                self.factor();
                self.current.pop();
            }
            Some(s) => {
                cover[s] = true;
                let mut path = vec![s];
                self.walk(cover, cycles, &mut path);
                cover[s] = false;
            }
        }
    }

    fn walk(&mut self, cover: &mut Vec<bool>, cycles: &mut Vec<Vec<usize>>, path: &mut Vec<usize>) {
        if self.done() {
            return;
        }
        let last = *path.last().unwrap();
        if path.len() == self.m {
            let start = path[0];
            if self.has[last][start] && !self.used[last][start] && last != start {
                self.used[last][start] = true;
                cycles.push(path.clone());
                self.next_cycle(cover, cycles);
                cycles.pop();
                self.used[last][start] = false;
            }
            return;
        }
        for k in 0..self.out[last].len() {
            let v = self.out[last][k];
            if cover[v] || self.used[last][v] {
                continue;
            }
            cover[v] = true;
            self.used[last][v] = true;
            path.push(v);
            self.walk(cover, cycles, path);
            path.pop();
            self.used[last][v] = false;
            cover[v] = false;
        }
    }
}

/// Every factorization of `g` into `m`-cycles, up to `limit`, each listed once.
/// Each new factor holds the least unused arc; its first cycle starts at that
/// arc's tail and later cycles at the least uncovered vertex.
pub fn brute_force_factorizations(g: &Digraph, m: usize, limit: usize) -> Vec<Vec<Factor>> {
    let verts: Vec<Vertex> = g.vertices().iter().copied().collect();
    let n = verts.len();
    if m < 2 || n == 0 || !n.is_multiple_of(m) || !g.arc_count().is_multiple_of(n) || limit == 0 {
        return Vec::new();
    }
    let pos = |v: &Vertex| verts.binary_search(v).unwrap();
    let mut out = vec![Vec::new(); n];
    let mut has = vec![vec![false; n]; n];
    for a in g.arcs() {
        let (t, h) = (pos(&a.tail), pos(&a.head));
        out[t].push(h);
        has[t][h] = true;
    }
    for o in &mut out {
        o.sort();
    }
    let mut e = Enumerator {
        n,
        m,
        out,
        has,
        used: vec![vec![false; n]; n],
        factors_left: g.arc_count() / n,
        current: Vec::new(),
        found: Vec::new(),
        limit,
    };
    e.factor();
    e.found
        .into_iter()
        .map(|fs| {
            fs.into_iter()
                .map(|cs| Factor::new(cs.into_iter().map(|c| DirectedCycle::raw(c.into_iter().map(|i| verts[i]).collect())).collect()))
                .collect()
        })
        .collect()
}

/// Factors as a set, for order-blind comparison.
pub fn factor_set(factors: &[Factor]) -> BTreeSet<Vec<DirectedCycle>> {
    factors.iter().map(|f| f.cycles().to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::directed_circulant;

    #[test]
    fn five_by_search() {
        let fac = solve_base(5, &SolveOptions::default()).unwrap();
        assert_eq!(fac.factors.len(), 9);
        assert!(fac.factors.iter().all(|f| f.cycles().len() == 2));
    }

    #[test]
    fn seeded_search_repeats() {
        let a = search_complete(5, None, 7).unwrap();
        let b = search_complete(5, None, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_orders() {
        assert!(matches!(solve_base(3, &SolveOptions::default()), Err(Error::NonExistent { .. })));
        assert!(matches!(solve_base(13, &SolveOptions::default()), Err(Error::Unsupported { .. })));
    }

    #[test]
    fn oracle_small_cases() {
        let c5 = directed_circulant(5, &[1]).unwrap();
        assert_eq!(brute_force_factorizations(&c5, 5, 10).len(), 1);
        assert!(brute_force_factorizations(&complete_symmetric(4).unwrap(), 4, 10).is_empty());
        // The doubled perfect matchings of K_4.
        assert_eq!(brute_force_factorizations(&complete_symmetric(4).unwrap(), 2, 100).len(), 1);
    }
}
