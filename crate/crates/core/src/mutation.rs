//! Small corruptions of a valid factorization of `K*_n`, each paired with the
//! violation code the verifier must raise for it.

use rand::Rng;

use crate::digraph::{DirectedCycle, Factor, Factorization, Vertex};
use crate::verifier::Code;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    DropFactor,
    DuplicateFactor,
    RemoveVertex,
    SwapAdjacent,
    BorrowVertex,
    ForeignVertex,
    RepeatVertex,
    ReverseCycle,
    SwapCyclesAcrossFactors,
    WrongCycleLength,
    RelabelInFactor,
    DropCycle,
    MoveVertex,
    ChangeN,
}

pub const ALL: [Mutation; 14] = [
    Mutation::DropFactor,
    Mutation::DuplicateFactor,
    Mutation::RemoveVertex,
    Mutation::SwapAdjacent,
    Mutation::BorrowVertex,
    Mutation::ForeignVertex,
    Mutation::RepeatVertex,
    Mutation::ReverseCycle,
    Mutation::SwapCyclesAcrossFactors,
    Mutation::WrongCycleLength,
    Mutation::RelabelInFactor,
    Mutation::DropCycle,
    Mutation::MoveVertex,
    Mutation::ChangeN,
];

fn cycles_of(fac: &Factorization, f: usize) -> Vec<Vec<Vertex>> {
    fac.factors[f].cycles().iter().map(|c| c.vertices().to_vec()).collect()
}

fn rebuild(cycles: Vec<Vec<Vertex>>) -> Factor {
    Factor::new(cycles.into_iter().map(DirectedCycle::raw).collect())
}

impl Mutation {
    pub fn name(&self) -> &'static str {
        match self {
            Mutation::DropFactor => "drop-factor",
            Mutation::DuplicateFactor => "duplicate-factor",
            Mutation::RemoveVertex => "remove-vertex",
            Mutation::SwapAdjacent => "swap-adjacent",
            Mutation::BorrowVertex => "borrow-vertex",
            Mutation::ForeignVertex => "foreign-vertex",
            Mutation::RepeatVertex => "repeat-vertex",
            Mutation::ReverseCycle => "reverse-cycle",
            Mutation::SwapCyclesAcrossFactors => "swap-cycles-across-factors",
            Mutation::WrongCycleLength => "wrong-cycle-length",
            Mutation::RelabelInFactor => "relabel-in-factor",
            Mutation::DropCycle => "drop-cycle",
            Mutation::MoveVertex => "move-vertex",
            Mutation::ChangeN => "change-n",
        }
    }

    /// The code a verifier run against the original ambient must report.
    pub fn expected(&self) -> Code {
        match self {
            Mutation::DropFactor => Code::MissingArcs,
            Mutation::DuplicateFactor
            | Mutation::SwapAdjacent
            | Mutation::ReverseCycle
            | Mutation::RelabelInFactor => Code::ArcReuse,
            Mutation::RemoveVertex | Mutation::MoveVertex => Code::WrongLength,
            Mutation::BorrowVertex | Mutation::SwapCyclesAcrossFactors => Code::Overlap,
            Mutation::ForeignVertex => Code::ForeignVertex,
            Mutation::RepeatVertex => Code::RepeatedVertex,
            Mutation::WrongCycleLength => Code::CycleLengthField,
            Mutation::DropCycle => Code::NotSpanning,
            Mutation::ChangeN => Code::VertexCountField,
        }
    }

    /// Applies the mutation at positions drawn from `rng`. Expects at least two
    /// factors of at least two cycles of length at least 4.
    pub fn apply<R: Rng>(&self, fac: &Factorization, rng: &mut R) -> Factorization {
        let mut out = fac.clone();
        let nf = fac.factors.len();
        let f = rng.gen_range(0..nf);
        let mut cs = cycles_of(fac, f);
        let len = cs[0].len();
        let k = rng.gen_range(0..len);
        match self {
            Mutation::DropFactor => {
                out.factors.remove(f);
                return out;
            }
            Mutation::DuplicateFactor => {
                out.factors.push(fac.factors[f].clone());
                return out;
            }
            Mutation::RemoveVertex => {
                cs[0].remove(k);
            }
            Mutation::SwapAdjacent => cs[0].swap(k, (k + 1) % len),
            Mutation::BorrowVertex => cs[0][k] = cs[1][rng.gen_range(0..cs[1].len())],
            Mutation::ForeignVertex => {
                let n = fac.n as u32;
                cs[0][k] = Vertex { layer: 0, index: n, modulus: n };
            }
            Mutation::RepeatVertex => {
                let j = (k + 2) % len;
                cs[0][k] = cs[0][j];
            }
            Mutation::ReverseCycle => cs[0].reverse(),
            Mutation::SwapCyclesAcrossFactors => {
                let mine: std::collections::BTreeSet<Vertex> = cs[0].iter().copied().collect();
                let start = rng.gen_range(0..nf);
                let (g, other) = (0..nf)
                    .map(|d| (start + d) % nf)
                    .filter(|&g| g != f)
                    .find_map(|g| {
                        let theirs = cycles_of(fac, g);
                        let set: std::collections::BTreeSet<Vertex> = theirs[0].iter().copied().collect();
                        (set != mine).then_some((g, theirs))
                    })
                    .expect("some factor splits the vertices differently");
                let mut other = other;
                std::mem::swap(&mut cs[0], &mut other[0]);
                out.factors[g] = rebuild(other);
            }
            Mutation::WrongCycleLength => {
                out.cycle_length = if fac.n.is_multiple_of(2 * fac.cycle_length) { 2 * fac.cycle_length } else { fac.cycle_length + 1 };
                return out;
            }
            Mutation::RelabelInFactor => {
                let (u, v) = (cs[0][k], cs[0][(k + 1) % len]);
                for c in cs.iter_mut() {
                    for w in c.iter_mut() {
                        if *w == u {
                            *w = v;
                        } else if *w == v {
                            *w = u;
                        }
                    }
                }
            }
            Mutation::DropCycle => {
                cs.remove(rng.gen_range(0..cs.len()));
            }
            Mutation::MoveVertex => {
                let v = cs[0].remove(k);
                let at = rng.gen_range(0..=cs[1].len());
                cs[1].insert(at, v);
            }
            Mutation::ChangeN => {
                out.n += 2;
                return out;
            }
        }
        out.factors[f] = rebuild(cs);
        out
    }
}
