//! Undirected circulants `X(m, C)`: the split of `K_m` into `X(m, {1, 3})`
//! plus 2- and 4-regular pieces, and Hamiltonian decompositions of the pieces.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectionSet {
    pub modulus: u32,
    pub residues: Vec<u32>,
}

impl ConnectionSet {
    pub fn new(modulus: u32, residues: Vec<u32>) -> Result<Self> {
        if residues.is_empty() {
            return Err(Error::InvalidConnectionSet { m: modulus, d: 0 });
        }
        let mut seen = BTreeSet::new();
        for &d in &residues {
            if d == 0 || d > modulus / 2 || !seen.insert(d) {
                return Err(Error::InvalidConnectionSet { m: modulus, d });
            }
        }
        Ok(ConnectionSet { modulus, residues })
    }

    /// Undirected edges `{v, v + d}` as ordered pairs `(min, max)`.
    pub fn edges(&self) -> BTreeSet<(u32, u32)> {
        let m = self.modulus;
        let mut out = BTreeSet::new();
        for v in 0..m {
            for &d in &self.residues {
                let w = (v + d) % m;
                out.insert((v.min(w), v.max(w)));
            }
        }
        out
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `{1,3}, {2,4}, {5,6}, ...` when `m ≡ 1 (mod 4)` and `{1,3}, {2}, {4,5}, ...`
/// when `m ≡ 3 (mod 4)`.
pub fn km_circulant_split(m: u32) -> Result<Vec<ConnectionSet>> {
    if m < 13 || m.is_multiple_of(2) || m.is_multiple_of(3) {
        return Err(Error::Unsupported { m, reason: "circulant split needs odd m >= 13 with 3 not dividing m".into() });
    }
    let half = (m - 1) / 2;
    let mut sets = vec![vec![1, 3]];
    let mut next = if m % 4 == 1 {
        sets.push(vec![2, 4]);
        5
    } else {
        sets.push(vec![2]);
        4
    };
    while next < half {
        sets.push(vec![next, next + 1]);
        next += 2;
    }
    sets.into_iter().map(|r| ConnectionSet::new(m, r)).collect()
}

/// Edge-disjoint Hamiltonian cycles covering a circulant. Each cycle lists the
/// vertices in walk order starting from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianDecomposition {
    pub modulus: u32,
    pub cycles: Vec<Vec<u32>>,
}

fn memo() -> &'static Mutex<HashMap<ConnectionSet, HamiltonianDecomposition>> {
    static MEMO: OnceLock<Mutex<HashMap<ConnectionSet, HamiltonianDecomposition>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Splits `X(m, C)`, `|C| <= 2`, into `|C|` Hamiltonian cycles.
pub fn hamiltonian_decompose(c: &ConnectionSet) -> Result<HamiltonianDecomposition> {
    if let Some(hit) = memo().lock().unwrap().get(c) {
        return Ok(hit.clone());
    }
    let m = c.modulus;
    if m.is_multiple_of(2) || m < 5 {
        return Err(Error::Unsupported { m, reason: "Hamiltonian decomposition needs odd m >= 5".into() });
    }
    let g = c.residues.iter().fold(m, |acc, &d| gcd(acc, d));
    if g != 1 {
        return Err(Error::Construction(format!("X({m}, {:?}) is disconnected", c.residues)));
    }
    let step_cycle = |d: u32| (0..m).map(|i| (i as u64 * d as u64 % m as u64) as u32).collect::<Vec<_>>();
    let cycles = match c.residues.as_slice() {
        [d] => vec![step_cycle(*d)],
        [a, b] if gcd(*a, m) == 1 && gcd(*b, m) == 1 => vec![step_cycle(*a), step_cycle(*b)],
        [a, b] => PairSearch::new(m, *a, *b).run()?,
        _ => return Err(Error::NotApplicable(format!("connection set {:?} has more than two residues", c.residues))),
    };
    let out = HamiltonianDecomposition { modulus: m, cycles };
    check_hamiltonian_decomposition(&out, c)?;
    memo().lock().unwrap().insert(c.clone(), out.clone());
    Ok(out)
}

/// Every cycle spans `Z_m`, and the cycles' edges partition `E(X(m, C))`.
pub fn check_hamiltonian_decomposition(d: &HamiltonianDecomposition, c: &ConnectionSet) -> Result<()> {
    let m = d.modulus;
    let want = c.edges();
    let mut got = BTreeSet::new();
    for cyc in &d.cycles {
        let distinct: BTreeSet<u32> = cyc.iter().copied().collect();
        if cyc.len() != m as usize || distinct.len() != m as usize || distinct.iter().any(|&v| v >= m) {
            return Err(Error::Construction(format!("{cyc:?} does not span Z_{m}")));
        }
        for i in 0..cyc.len() {
            let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
            let e = (a.min(b), a.max(b));
            if !want.contains(&e) || !got.insert(e) {
                return Err(Error::Construction(format!("edge {e:?} is foreign or repeated")));
            }
        }
    }
    if got.len() != want.len() {
        return Err(Error::Construction(format!("{} of {} edges covered", got.len(), want.len())));
    }
    Ok(())
}

/// Maps each vertex of a Hamiltonian cycle of `K_m` to its position in walk
/// order, carrying the cycle onto `X(m, {1})`.
pub fn relabel_to_unit_circulant(h: &[u32], m: u32) -> Result<Vec<u32>> {
    if h.len() != m as usize {
        return Err(Error::NotApplicable(format!("{h:?} is not Hamiltonian in K_{m}")));
    }
    let mut pos = vec![u32::MAX; m as usize];
    for (i, &v) in h.iter().enumerate() {
        if v >= m || pos[v as usize] != u32::MAX {
            return Err(Error::NotApplicable(format!("{h:?} is not Hamiltonian in K_{m}")));
        }
        pos[v as usize] = i as u32;
    }
    Ok(pos)
}

const FREE: u8 = 0;
const ON_CYCLE: u8 = 1;
const OFF_CYCLE: u8 = 2;

enum Undo {
    Used(usize, u8),
    End(usize, u32),
    Size(usize, u32),
    Degree(usize, u32),
}

// Depth-first search for one Hamiltonian cycle of a 4-regular circulant whose
// complement is also Hamiltonian. Edges a vertex cannot use are pushed to the
// complement right away; complement fragments are tracked by their ends so a
// short complement cycle is caught as soon as it forms.
struct PairSearch {
    m: usize,
    nbr: Vec<[(usize, usize); 4]>,
    used: Vec<u8>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    end: Vec<u32>,
    size: Vec<u32>,
    comp_deg: Vec<u32>,
    log: Vec<Undo>,
    nodes: u64,
}

impl PairSearch {
    fn new(m: u32, a: u32, b: u32) -> Self {
        let mu = m as usize;
        let nbr = (0..mu)
            .map(|v| {
                let mut ns = [
                    ((v + a as usize) % mu, 2 * v),
                    ((v + mu - a as usize) % mu, 2 * ((v + mu - a as usize) % mu)),
                    ((v + b as usize) % mu, 2 * v + 1),
                    ((v + mu - b as usize) % mu, 2 * ((v + mu - b as usize) % mu) + 1),
                ];
                ns.sort();
                ns
            })
            .collect();
        PairSearch {
            m: mu,
            nbr,
            used: vec![FREE; 2 * mu],
            on_path: vec![false; mu],
            path: Vec::with_capacity(mu),
            end: (0..m).collect(),
            size: vec![0; mu],
            comp_deg: vec![0; mu],
            log: Vec::new(),
            nodes: 0,
        }
    }

    fn set_used(&mut self, e: usize, val: u8) {
        self.log.push(Undo::Used(e, self.used[e]));
        self.used[e] = val;
    }

    fn undo_to(&mut self, mark: usize) {
        while self.log.len() > mark {
            match self.log.pop().unwrap() {
                Undo::Used(e, v) => self.used[e] = v,
                Undo::End(i, v) => self.end[i] = v,
                Undo::Size(i, v) => self.size[i] = v,
                Undo::Degree(i, v) => self.comp_deg[i] = v,
            }
        }
    }

    fn add_comp(&mut self, a: usize, b: usize) -> bool {
        for v in [a, b] {
            self.log.push(Undo::Degree(v, self.comp_deg[v]));
            self.comp_deg[v] += 1;
            if self.comp_deg[v] > 2 {
                return false;
            }
        }
        let (ea, eb) = (self.end[a] as usize, self.end[b] as usize);
        if ea == b {
            return self.size[a] + 1 == self.m as u32;
        }
        let total = self.size[a] + self.size[b] + 1;
        for (i, v) in [(ea, eb as u32), (eb, ea as u32)] {
            self.log.push(Undo::End(i, self.end[i]));
            self.end[i] = v;
            self.log.push(Undo::Size(i, self.size[i]));
            self.size[i] = total;
        }
        true
    }

    // `u` now has both cycle edges: everything else at `u` is off the cycle.
    fn finish(&mut self, u: usize) -> bool {
        for k in 0..4 {
            let (w, e) = self.nbr[u][k];
            if self.used[e] == FREE {
                self.set_used(e, OFF_CYCLE);
                if !self.add_comp(u, w) {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(&mut self) -> bool {
        self.nodes += 1;
        let u = *self.path.last().unwrap();
        if self.path.len() == self.m {
            let Some(&(_, e)) = self.nbr[u].iter().find(|(w, _)| *w == 0) else {
                return false;
            };
            if self.used[e] != FREE {
                return false;
            }
            let mark = self.log.len();
            self.set_used(e, ON_CYCLE);
            if self.finish(u) && self.finish(0) {
                return true;
            }
            self.undo_to(mark);
            return false;
        }
        for k in 0..4 {
            let (w, e) = self.nbr[u][k];
            if self.on_path[w] || self.used[e] != FREE || self.comp_deg[w] > 2 {
                continue;
            }
            let mark = self.log.len();
            self.set_used(e, ON_CYCLE);
            if u == 0 || self.finish(u) {
                self.on_path[w] = true;
                self.path.push(w);
                if self.dfs() {
                    return true;
                }
                self.path.pop();
                self.on_path[w] = false;
            }
            self.undo_to(mark);
        }
        false
    }

    fn run(mut self) -> Result<Vec<Vec<u32>>> {
        self.on_path[0] = true;
        self.path.push(0);
        if !self.dfs() {
            return Err(Error::NotFound(format!("no Hamiltonian pair after {} nodes", self.nodes)));
        }
        let first: Vec<u32> = self.path.iter().map(|&v| v as u32).collect();
        // Trace the complement from 0.
        let mut second = vec![0u32];
        let mut prev = usize::MAX;
        let mut cur = 0usize;
        while second.len() < self.m {
            let (next, _) = *self.nbr[cur]
                .iter()
                .find(|(w, e)| self.used[*e] == OFF_CYCLE && *w != prev)
                .ok_or_else(|| Error::Construction("complement is not a cycle".into()))?;
            prev = cur;
            cur = next;
            second.push(cur as u32);
        }
        Ok(vec![first, second])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residues(v: &[ConnectionSet]) -> Vec<Vec<u32>> {
        v.iter().map(|c| c.residues.clone()).collect()
    }

    #[test]
    fn printed_splits() {
        assert_eq!(residues(&km_circulant_split(13).unwrap()), vec![vec![1, 3], vec![2, 4], vec![5, 6]]);
        assert_eq!(
            residues(&km_circulant_split(19).unwrap()),
            vec![vec![1, 3], vec![2], vec![4, 5], vec![6, 7], vec![8, 9]]
        );
        assert!(km_circulant_split(15).is_err());
    }

    #[test]
    fn split_partitions() {
        for m in (13..=99).step_by(2).filter(|m| m % 3 != 0) {
            let all: Vec<u32> = km_circulant_split(m).unwrap().into_iter().flat_map(|c| c.residues).collect();
            let set: BTreeSet<u32> = all.iter().copied().collect();
            assert_eq!(all.len(), set.len());
            assert_eq!(set, (1..=(m - 1) / 2).collect());
        }
    }

    #[test]
    fn search_path() {
        for (m, a, b) in [(25, 5, 6), (35, 5, 6), (35, 7, 8), (49, 7, 8), (13, 2, 4), (5, 1, 2), (55, 10, 11)] {
            let c = ConnectionSet::new(m, vec![a, b]).unwrap();
            let cycles = PairSearch::new(m, a, b).run().unwrap();
            let d = HamiltonianDecomposition { modulus: m, cycles };
            check_hamiltonian_decomposition(&d, &c).unwrap();
        }
    }

    #[test]
    fn single_and_small() {
        let d = hamiltonian_decompose(&ConnectionSet::new(15, vec![2]).unwrap()).unwrap();
        assert_eq!(d.cycles.len(), 1);
        let d = hamiltonian_decompose(&ConnectionSet::new(5, vec![1, 2]).unwrap()).unwrap();
        assert_eq!(d.cycles.iter().map(|c| c.len()).sum::<usize>(), 10);
        assert!(hamiltonian_decompose(&ConnectionSet::new(15, vec![3, 6]).unwrap()).is_err());
    }

    #[test]
    fn relabel() {
        assert_eq!(relabel_to_unit_circulant(&[0, 2, 4, 1, 3], 5).unwrap(), vec![0, 3, 1, 4, 2]);
        assert_eq!(relabel_to_unit_circulant(&[0, 1, 2, 3, 4], 5).unwrap(), vec![0, 1, 2, 3, 4]);
        assert!(relabel_to_unit_circulant(&[0, 1, 1, 3, 4], 5).is_err());
    }
}
