//! Tripling the cycle length: a factorization of `K*_2m` into `m`-cycles gives
//! one of `K*_6m` into `3m`-cycles, by blowing every factor up with `K*_3` (the
//! first) or `K̄_3` (the rest).
//!
//! The Hamiltonian decompositions of `C_m ≀ K*_3` and `C_m ≀ K̄_3` are found by
//! search over column colourings. Column `i` holds copies `(i, 0..3)`; colouring
//! the out-arcs of one column with the cycle labels is a block, and a sequence of
//! `m` compatible blocks whose per-colour transfer maps compose to one cycle is a
//! decomposition.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc as Shared, Mutex, OnceLock};

use crate::digraph::{complete_symmetric, ensure_factorization, DirectedCycle, Factor, Factorization, Kind, Vertex};
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::verifier::verify_factorization;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `C_m ≀ K*_3`: five Hamiltonian cycles.
    Full,
    /// `C_m ≀ K̄_3`: three Hamiltonian cycles.
    Empty,
}

impl Mode {
    pub fn colours(self) -> usize {
        match self {
            Mode::Full => 5,
            Mode::Empty => 3,
        }
    }
}

/// Hamiltonian cycles of `C_m ≀ K*_3` or `C_m ≀ K̄_3`; vertex `(i, j)` is copy
/// `j` of position `i` on the cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NgDecomposition {
    pub m: u32,
    pub mode: Mode,
    pub cycles: Vec<Vec<(u32, u32)>>,
}

const NONE: u8 = u8::MAX;
const OTHERS: [[usize; 2]; 3] = [[1, 2], [0, 2], [0, 1]];

// Slots 0..3 are the arcs to copies 0..3 of the next column, slots 3 and 4 the
// arcs to the other two copies in the same column.
type Block = [[u8; 5]; 3];

struct Entry {
    block: Block,
    // Colours entering each copy from the previous column.
    out_sig: [u8; 3],
    // Colours entering each copy from inside the column.
    in_sig: [u8; 3],
    // Per colour: entry copy -> copy reached in the next column.
    transfer: [[u8; 3]; 5],
}

fn permutations(n: u8) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

fn successor(block: &Block, a: usize, c: u8) -> usize {
    block[a].iter().position(|&x| x == c).unwrap()
}

fn analyse(block: Block) -> Option<Entry> {
    let mut in_sig = [0u8; 3];
    for a in 0..3 {
        for (s, &b) in OTHERS[a].iter().enumerate() {
            let bit = 1 << block[a][3 + s];
            if in_sig[b] & bit != 0 {
                return None;
            }
            in_sig[b] |= bit;
        }
    }
    let mut out_sig = [0u8; 3];
    for row in &block {
        for b in 0..3 {
            out_sig[b] |= 1 << row[b];
        }
    }
    let mut transfer = [[NONE; 3]; 5];
    for c in 0..5u8 {
        for e in 0..3 {
            if in_sig[e] & (1 << c) != 0 {
                continue;
            }
            let mut v = e;
            let mut steps = 0;
            loop {
                let s = successor(&block, v, c);
                if s < 3 {
                    transfer[c as usize][e] = s as u8;
                    break;
                }
                v = OTHERS[v][s - 3];
                steps += 1;
                if steps > 3 {
                    return None;
                }
            }
        }
        // Every copy must lie on a path that leaves the column.
        let reach = (0..3).filter(|&v| {
            let mut w = v;
            for _ in 0..3 {
                let s = successor(&block, w, c);
                if s < 3 {
                    return true;
                }
                w = OTHERS[w][s - 3];
            }
            false
        });
        if reach.count() != 3 {
            return None;
        }
    }
    Some(Entry { block, out_sig, in_sig, transfer })
}

struct Library {
    entries: Vec<Entry>,
    by_in: HashMap<[u8; 3], Vec<u32>>,
}

fn library() -> &'static Library {
    static LIB: OnceLock<Library> = OnceLock::new();
    LIB.get_or_init(|| {
        let perms: Vec<[u8; 5]> = permutations(5).into_iter().map(|p| [p[0], p[1], p[2], p[3], p[4]]).collect();
        let mut entries = Vec::new();
        for p0 in &perms {
            for p1 in &perms {
                for p2 in &perms {
                    if let Some(e) = analyse([*p0, *p1, *p2]) {
                        entries.push(e);
                    }
                }
            }
        }
        let mut by_in: HashMap<[u8; 3], Vec<u32>> = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            by_in.entry(e.in_sig).or_default().push(i as u32);
        }
        Library { entries, by_in }
    })
}

fn need(out_sig: [u8; 3]) -> [u8; 3] {
    out_sig.map(|s| 0b11111 & !s)
}

const NODE_BUDGET: u64 = 50_000_000;

struct FullSearch<'a> {
    lib: &'a Library,
    m: usize,
    first: u32,
    seq: Vec<u32>,
    nodes: u64,
}

impl FullSearch<'_> {
    fn closes(&self, state: &[[u8; 3]; 5]) -> bool {
        let first = &self.lib.entries[self.first as usize];
        (0..5).all(|c| {
            let entries: Vec<usize> = (0..3).filter(|&e| first.transfer[c][e] != NONE).collect();
            let start = entries[0];
            let mut v = start;
            let mut len = 0;
            loop {
                v = state[c][v] as usize;
                len += 1;
                if v == start || len > 3 {
                    break;
                }
            }
            v == start && len == entries.len()
        })
    }

    fn dfs(&mut self, pos: usize, state: [[u8; 3]; 5]) -> bool {
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return false;
        }
        let lib = self.lib;
        let prev = &lib.entries[*self.seq.last().unwrap() as usize];
        let Some(cands) = lib.by_in.get(&need(prev.out_sig)) else {
            return false;
        };
        let closing_sig = lib.entries[self.first as usize].in_sig;
        for &j in cands {
            let e = &lib.entries[j as usize];
            if pos == self.m - 1 && need(e.out_sig) != closing_sig {
                continue;
            }
            let mut next = [[NONE; 3]; 5];
            for c in 0..5 {
                for v in 0..3 {
                    if state[c][v] != NONE {
                        next[c][v] = e.transfer[c][state[c][v] as usize];
                    }
                }
            }
            self.seq.push(j);
            if pos == self.m - 1 {
                if self.closes(&next) {
                    return true;
                }
            } else if self.dfs(pos + 1, next) {
                return true;
            }
            self.seq.pop();
        }
        false
    }
}

fn search_full(m: u32) -> Result<Vec<Block>> {
    let lib = library();
    let first = (0..lib.entries.len() as u32)
        .find(|&j| lib.by_in.contains_key(&need(lib.entries[j as usize].out_sig)))
        .ok_or_else(|| Error::NotFound("no block has a compatible successor".into()))?;
    let mut s = FullSearch { lib, m: m as usize, first, seq: vec![first], nodes: 0 };
    if !s.dfs(1, lib.entries[first as usize].transfer) {
        return Err(Error::NotFound(format!("no decomposition of C_{m} wr K*_3 after {} nodes", s.nodes)));
    }
    Ok(s.seq.iter().map(|&j| lib.entries[j as usize].block).collect())
}

fn latin_squares() -> Vec<[[u8; 3]; 3]> {
    let perms = permutations(3);
    let mut out = Vec::new();
    for r0 in &perms {
        for r1 in &perms {
            for r2 in &perms {
                if (0..3).all(|b| r0[b] != r1[b] && r0[b] != r2[b] && r1[b] != r2[b]) {
                    out.push([[r0[0], r0[1], r0[2]], [r1[0], r1[1], r1[2]], [r2[0], r2[1], r2[2]]]);
                }
            }
        }
    }
    out
}

fn search_empty(m: u32) -> Result<Vec<Block>> {
    let squares = latin_squares();
    // state[c][e]: copy reached, in colour c, from copy e of column 0.
    fn go(
        pos: usize,
        m: usize,
        state: [[u8; 3]; 3],
        squares: &[[[u8; 3]; 3]],
        dead: &mut HashSet<(usize, [[u8; 3]; 3])>,
        seq: &mut Vec<usize>,
    ) -> bool {
        if pos == m {
            return state.iter().all(|p| {
                let mut v = 0usize;
                let mut len = 0;
                loop {
                    v = p[v] as usize;
                    len += 1;
                    if v == 0 {
                        break;
                    }
                }
                len == 3
            });
        }
        if dead.contains(&(pos, state)) {
            return false;
        }
        for (k, sq) in squares.iter().enumerate() {
            let mut next = state;
            for c in 0..3 {
                for e in 0..3 {
                    let a = state[c][e] as usize;
                    next[c][e] = sq[a].iter().position(|&x| x == c as u8).unwrap() as u8;
                }
            }
            seq.push(k);
            if go(pos + 1, m, next, squares, dead, seq) {
                return true;
            }
            seq.pop();
        }
        dead.insert((pos, state));
        false
    }
    let mut seq = Vec::new();
    let mut dead = HashSet::new();
    if !go(0, m as usize, [[0, 1, 2]; 3], &squares, &mut dead, &mut seq) {
        return Err(Error::NotFound(format!("no decomposition of C_{m} wr empty K_3")));
    }
    // Cross arcs only: the internal slots are never used.
    Ok(seq.iter().map(|&k| squares[k].map(|row| [row[0], row[1], row[2], NONE, NONE])).collect())
}

fn trace(blocks: &[Block], c: u8, m: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let (mut i, mut a) = (0u32, 0usize);
    for _ in 0..3 * m {
        out.push((i, a as u32));
        let s = successor(&blocks[i as usize], a, c);
        if s < 3 {
            i = (i + 1) % m;
            a = s;
        } else {
            a = OTHERS[a][s - 3];
        }
    }
    out
}

fn check_ng(d: &NgDecomposition) -> Result<()> {
    let m = d.m;
    let bug = |msg: String| Err(Error::Construction(msg));
    let mut used = HashSet::new();
    for cyc in &d.cycles {
        let seen: HashSet<_> = cyc.iter().copied().collect();
        if cyc.len() != 3 * m as usize || seen.len() != cyc.len() || cyc.iter().any(|&(i, j)| i >= m || j >= 3) {
            return bug(format!("cycle is not Hamiltonian in the {:?} blow-up of C_{m}", d.mode));
        }
        for k in 0..cyc.len() {
            let (t, h) = (cyc[k], cyc[(k + 1) % cyc.len()]);
            let cross = h.0 == (t.0 + 1) % m;
            let internal = d.mode == Mode::Full && h.0 == t.0 && h.1 != t.1;
            if !(cross || internal) || !used.insert((t, h)) {
                return bug(format!("arc {t:?} -> {h:?} is foreign or repeated"));
            }
        }
    }
    let want = match d.mode {
        Mode::Full => 15 * m as usize,
        Mode::Empty => 9 * m as usize,
    };
    if used.len() != want {
        return bug(format!("{} of {want} arcs covered", used.len()));
    }
    Ok(())
}

type Memo = Mutex<HashMap<(u32, Mode), Shared<NgDecomposition>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn ng_decompose(m: u32, mode: Mode) -> Result<Shared<NgDecomposition>> {
    if m < 3 {
        return Err(Error::Unsupported { m, reason: "cycle blow-up needs m >= 3".into() });
    }
    if let Some(hit) = memo().lock().unwrap().get(&(m, mode)) {
        return Ok(hit.clone());
    }
    let blocks = match mode {
        Mode::Full => search_full(m)?,
        Mode::Empty => search_empty(m)?,
    };
    let cycles = (0..mode.colours() as u8).map(|c| trace(&blocks, c, m)).collect();
    let d = NgDecomposition { m, mode, cycles };
    check_ng(&d)?;
    let d = Shared::new(d);
    memo().lock().unwrap().insert((m, mode), d.clone());
    Ok(d)
}

/// Blows one factor of `K*_n` up to 3 or 5 factors of its part of `K*_3n`.
/// Copy `j` of vertex `u` becomes `j * n + u`.
pub fn expand_factor(f: &Factor, n: usize, ng: &NgDecomposition) -> Result<Vec<Factor>> {
    let m = ng.m as usize;
    let n32 = n as u32;
    for c in f.cycles() {
        if c.len() != m || c.vertices().iter().any(|v| v.layer != 0 || v.index >= n32) {
            return Err(Error::NotApplicable(format!("factor cycle {c} is not an {m}-cycle of K*_{n}")));
        }
    }
    if f.cycles().len() * m != n {
        return Err(Error::NotApplicable(format!("factor does not span {n} vertices")));
    }
    ng.cycles
        .iter()
        .map(|pattern| {
            let cycles = f
                .cycles()
                .iter()
                .map(|c| {
                    let vs = c.vertices();
                    DirectedCycle::new(
                        pattern.iter().map(|&(i, j)| Vertex::new(0, j * n32 + vs[i as usize].index, 3 * n32)).collect(),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Factor::new(cycles))
        })
        .collect()
}

/// `K*_2m` into `m`-cycles to `K*_6m` into `3m`-cycles: `5 + 3 (2m - 2)` factors.
pub fn reduce_3m(fac: &Factorization, exec: Exec) -> Result<Factorization> {
    let n = fac.n;
    let m = fac.cycle_length;
    if fac.kind != Kind::CompleteSymmetric || n != 2 * m || fac.factors.is_empty() {
        return Err(Error::NotApplicable(format!("expected K*_2m split into m-cycles, got {} on {n} vertices", fac.kind.as_str())));
    }
    let report = verify_factorization(fac, &complete_symmetric(n)?);
    if !report.is_ok() {
        return Err(Error::NotApplicable(format!("input factorization is invalid: {report}")));
    }
    let full = ng_decompose(m as u32, Mode::Full)?;
    let empty = ng_decompose(m as u32, Mode::Empty)?;
    let indexed: Vec<(usize, &Factor)> = fac.factors.iter().enumerate().collect();
    let parts = exec.map(&indexed, |(i, f)| expand_factor(f, n, if *i == 0 { &full } else { &empty }));
    let mut factors = Vec::with_capacity(3 * n - 1);
    for p in parts {
        factors.extend(p?);
    }
    let out = Factorization { kind: Kind::CompleteSymmetric, n: 3 * n, cycle_length: 3 * m, factors };
    ensure_factorization(&out, &complete_symmetric(3 * n)?)?;
    Ok(out)
}
