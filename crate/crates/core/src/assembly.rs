//! Gluing the `H`, `L` and `G` factorizations into one of `K*_2m`, and the
//! dispatch over all odd `m`.

use std::collections::BTreeSet;
use std::path::PathBuf;

use crate::circulant::{hamiltonian_decompose, km_circulant_split, relabel_to_unit_circulant};
use crate::construct_g::g_factorization;
use crate::construct_h::h_factorization;
use crate::construct_l::l_factorization;
use crate::digraph::{complete_symmetric, ensure_factorization, g_digraph, h_digraph, l_digraph, DirectedCycle, Factor, Factorization, Kind, Vertex};
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::reduction::reduce_3m;
use crate::solver::load_base;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// A copy of `H_2m` laid along one Hamiltonian cycle of `K_m`.
    H { residues: Vec<u32> },
    /// `L_2m ⊕ G_2m` on the `{±1, ±3}` differences.
    LG,
}

/// One piece of `K*_2m` with the map from its own indices into `Z_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    /// `to_km[i]` is the vertex of `K_m` that index `i` lands on.
    pub to_km: Vec<u32>,
}

fn negation(m: u32) -> Vec<u32> {
    (0..m).map(|i| (m - i) % m).collect()
}

fn flatten(v: &Vertex, map: &[u32], m: u32) -> Vertex {
    Vertex::new(0, v.layer * m + map[v.index as usize], 2 * m)
}

impl Block {
    /// The arcs this block covers, as vertices of `K*_2m`.
    pub fn arcs(&self, m: u32) -> Result<BTreeSet<(Vertex, Vertex)>> {
        let mut out = BTreeSet::new();
        let mut pull = |g: crate::digraph::Digraph, map: &[u32]| {
            for a in g.arcs() {
                out.insert((flatten(&a.tail, map, m), flatten(&a.head, map, m)));
            }
        };
        match self.kind {
            BlockKind::H { .. } => pull(h_digraph(m)?, &self.to_km),
            BlockKind::LG => {
                pull(g_digraph(m)?, &self.to_km);
                pull(l_digraph(m)?, &negation(m));
            }
        }
        Ok(out)
    }

    /// The block's own factorization pulled back into `K*_2m`.
    pub fn factors(&self, m: u32) -> Result<Vec<Factor>> {
        let pull = |fac: Factorization, map: &[u32]| -> Result<Vec<Factor>> {
            fac.factors
                .iter()
                .map(|f| {
                    let cycles = f
                        .cycles()
                        .iter()
                        .map(|c| DirectedCycle::new(c.vertices().iter().map(|v| flatten(v, map, m)).collect()))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Factor::new(cycles))
                })
                .collect()
        };
        match self.kind {
            BlockKind::H { .. } => pull(h_factorization(m)?, &self.to_km),
            BlockKind::LG => {
                let mut out = pull(l_factorization(m)?, &negation(m))?;
                out.extend(pull(g_factorization(m)?, &self.to_km)?);
                Ok(out)
            }
        }
    }
}

fn check_direct(m: u32) -> Result<()> {
    if m.is_multiple_of(2) || m < 13 || m.is_multiple_of(3) {
        return Err(Error::Unsupported { m, reason: "direct assembly needs odd m >= 13 with 3 not dividing m".into() });
    }
    Ok(())
}

/// `(m - 5) / 2` H-blocks in split order, then the `L ⊕ G` block.
pub fn decompose_k2m(m: u32) -> Result<Vec<Block>> {
    check_direct(m)?;
    let mut blocks = Vec::new();
    for c in km_circulant_split(m)?.into_iter().skip(1) {
        for h in hamiltonian_decompose(&c)?.cycles {
            relabel_to_unit_circulant(&h, m)?;
            blocks.push(Block { kind: BlockKind::H { residues: c.residues.clone() }, to_km: h });
        }
    }
    blocks.push(Block { kind: BlockKind::LG, to_km: (0..m).collect() });
    Ok(blocks)
}

/// `2m - 1` factors: four per H-block, then L's four, then G's five.
pub fn construct_k2m_factorization(m: u32) -> Result<Factorization> {
    construct_k2m_factorization_with(m, Exec::default())
}

pub fn construct_k2m_factorization_with(m: u32, exec: Exec) -> Result<Factorization> {
    let blocks = decompose_k2m(m)?;
    let mut factors = Vec::with_capacity(2 * m as usize - 1);
    for part in exec.map(&blocks, |b| b.factors(m)) {
        factors.extend(part?);
    }
    let fac = Factorization { kind: Kind::CompleteSymmetric, n: 2 * m as usize, cycle_length: m as usize, factors };
    ensure_factorization(&fac, &complete_symmetric(2 * m as usize)?)?;
    Ok(fac)
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub exec: Exec,
    /// Directory holding `m5.json` .. `m11.json`; the embedded copies are used
    /// when unset.
    pub data_dir: Option<PathBuf>,
}

/// `m = 3^r t` with `t` either a base order (5, 7, 9, 11) or at least 13.
pub fn split_order(m: u32) -> Result<(u32, u32)> {
    if m.is_multiple_of(2) {
        return Err(Error::Unsupported { m, reason: "m must be odd".into() });
    }
    if m == 3 {
        return Err(Error::NonExistent { m, reason: "K*_6 has no directed 3-cycle factorization (exception (2,3))".into() });
    }
    if m < 5 {
        return Err(Error::Unsupported { m, reason: "m must be at least 5".into() });
    }
    let (mut t, mut r) = (m, 0);
    while t % 3 == 0 && t != 9 {
        t /= 3;
        r += 1;
    }
    Ok((t, r))
}

pub fn full_construct(m: u32) -> Result<Factorization> {
    full_construct_with(m, &Options::default())
}

pub fn full_construct_with(m: u32, opts: &Options) -> Result<Factorization> {
    let (t, r) = split_order(m)?;
    let mut fac = if t >= 13 {
        construct_k2m_factorization_with(t, opts.exec)?
    } else {
        load_base(t, opts.data_dir.as_deref())?
    };
    for _ in 0..r {
        fac = reduce_3m(&fac, opts.exec)?;
    }
    Ok(fac)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_counts() {
        let blocks = decompose_k2m(13).unwrap();
        assert_eq!(blocks.len(), 5);
        let sizes: Vec<usize> = blocks.iter().map(|b| b.arcs(13).unwrap().len()).collect();
        assert_eq!(sizes, vec![104, 104, 104, 104, 234]);
    }

    #[test]
    fn blocks_partition() {
        for m in [13u32, 25] {
            let mut all = BTreeSet::new();
            let mut total = 0;
            for b in decompose_k2m(m).unwrap() {
                let arcs = b.arcs(m).unwrap();
                total += arcs.len();
                all.extend(arcs);
            }
            let n = 2 * m as usize;
            assert_eq!(total, n * (n - 1));
            assert_eq!(all.len(), n * (n - 1));
        }
    }

    #[test]
    fn negation_turns_differences() {
        let m = 17;
        let neg = negation(m);
        for a in 0..m {
            let b = (a + m - 1) % m;
            assert_eq!((neg[b as usize] + m - neg[a as usize]) % m, 1);
        }
    }

    #[test]
    fn factor_counts() {
        assert_eq!(construct_k2m_factorization(13).unwrap().factors.len(), 25);
        assert_eq!(construct_k2m_factorization(19).unwrap().factors.len(), 37);
        assert!(construct_k2m_factorization(15).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(split_order(45).unwrap(), (5, 2));
        assert_eq!(split_order(27).unwrap(), (9, 1));
        assert_eq!(split_order(39).unwrap(), (13, 1));
        assert!(matches!(split_order(3), Err(Error::NonExistent { .. })));
        assert!(matches!(split_order(10), Err(Error::Unsupported { .. })));
    }
}
