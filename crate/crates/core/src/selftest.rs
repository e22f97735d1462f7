//! The acceptance checks, shared by `factorizer selftest` and the
//! `acceptance` test target.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::assembly::{full_construct_with, Options};
use crate::circulant::{check_hamiltonian_decomposition, hamiltonian_decompose, km_circulant_split};
use crate::construct_g::{basic_set_tables, check_arc_disjointness, check_basic_set, g_factorization, RESIDUES};
use crate::construct_h::h_factorization;
use crate::construct_l::{l_factorization, l_nonexistence_certificate};
use crate::digraph::{complete_symmetric, cycle_type, g_digraph, h_digraph, l_digraph, Factorization};
use crate::io;
use crate::mutation;
use crate::par::Exec;
use crate::reduction::reduce_3m;
use crate::solver::{base_file_name, brute_force_factorizations, embedded_text, factor_set, solve_base, SolveOptions};
use crate::verifier::{certify, certify_file, verify_factorization, verify_mendelsohn, Code};

/// Per-order time limits.
pub const MAIN_LIMIT: Duration = Duration::from_secs(5);
pub const H_LIMIT: Duration = Duration::from_millis(100);
pub const G_LIMIT: Duration = Duration::from_secs(1);
pub const CIRCULANT_LIMIT: Duration = Duration::from_secs(1);
pub const REDUCTION_LIMIT: Duration = Duration::from_secs(300);
pub const BASE_LIMIT: Duration = Duration::from_secs(600);

#[derive(Clone, Debug)]
pub struct Config {
    /// Upper end of the main and circulant ranges.
    pub max_m: u32,
    /// Where the base files to certify live; the embedded copies otherwise.
    pub data_dir: Option<PathBuf>,
    pub exec: Exec,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_m: 49, data_dir: None, exec: Exec::default(), seed: 2024 }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {}. {}: {} ({:.2?})",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed
        )
    }
}

type Check = std::result::Result<String, String>;

fn timed(id: u32, title: &'static str, f: impl FnOnce() -> Check) -> Outcome {
    let t = Instant::now();
    let r = f();
    let elapsed = t.elapsed();
    let (pass, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, title, pass, detail, elapsed }
}

fn odd_coprime_to_3(lo: u32, hi: u32) -> Vec<u32> {
    (lo..=hi).filter(|m| m % 2 == 1 && m % 3 != 0).collect()
}

fn full_ok(fac: &Factorization, m: u32) -> std::result::Result<(), String> {
    let n = 2 * m as usize;
    let g = complete_symmetric(n).map_err(|e| e.to_string())?;
    let r = verify_factorization(fac, &g);
    if !r.is_ok() {
        return Err(format!("m={m}: {r}"));
    }
    let r = verify_mendelsohn(fac);
    if !r.is_ok() {
        return Err(format!("m={m}: design check: {r}"));
    }
    if fac.factors.len() != n - 1 || fac.factors.iter().any(|f| f.cycles().len() != 2) {
        return Err(format!("m={m}: wrong factor shape"));
    }
    Ok(())
}

pub fn main_theorem(cfg: &Config) -> Check {
    let opts = Options { exec: cfg.exec, data_dir: cfg.data_dir.clone() };
    let orders = odd_coprime_to_3(13, cfg.max_m);
    let mut slowest = Duration::ZERO;
    for &m in &orders {
        let t = Instant::now();
        let fac = full_construct_with(m, &opts).map_err(|e| format!("m={m}: {e}"))?;
        full_ok(&fac, m)?;
        let dt = t.elapsed();
        if dt > MAIN_LIMIT {
            return Err(format!("m={m} took {dt:.2?}, limit {MAIN_LIMIT:?}"));
        }
        slowest = slowest.max(dt);
    }
    Ok(format!("{} orders in 13..={} verified, slowest {slowest:.2?}", orders.len(), cfg.max_m))
}

pub fn h_suite() -> Check {
    let mut count = 0;
    for m in (5..=99).step_by(2) {
        let t = Instant::now();
        let fac = h_factorization(m).map_err(|e| format!("m={m}: {e}"))?;
        let r = verify_factorization(&fac, &h_digraph(m).map_err(|e| e.to_string())?);
        if !r.is_ok() || fac.factors.len() != 4 {
            return Err(format!("m={m}: {r}"));
        }
        if t.elapsed() > H_LIMIT {
            return Err(format!("m={m} took {:.2?}", t.elapsed()));
        }
        count += 1;
    }
    Ok(format!("{count} orders in 5..=99 verified"))
}

pub fn l_suite() -> Check {
    let good = odd_coprime_to_3(13, 97);
    for &m in &good {
        let fac = l_factorization(m).map_err(|e| format!("m={m}: {e}"))?;
        let r = verify_factorization(&fac, &l_digraph(m).map_err(|e| e.to_string())?);
        if !r.is_ok() {
            return Err(format!("m={m}: {r}"));
        }
        for (i, f) in fac.factors.iter().enumerate() {
            let types: BTreeSet<u64> = f.cycles().iter().map(|c| cycle_type(c).unwrap_or(0)).collect();
            if types != BTreeSet::from([1, 3]) || f.cycles().len() != 2 {
                return Err(format!("m={m} factor {i}: cycle types {types:?}"));
            }
        }
    }
    let bad: Vec<u32> = (9..=97).step_by(6).collect();
    for &m in &bad {
        let c = l_nonexistence_certificate(m).map_err(|e| format!("m={m}: {e}"))?;
        if !c.check() || c.feasible_rows() != 0 || c.rows.len() != m as usize + 1 {
            return Err(format!("m={m}: certificate does not hold"));
        }
    }
    Ok(format!("{} constructions verified, {} certificates exhaustive and empty", good.len(), bad.len()))
}

pub fn g_suite() -> Check {
    let mut count = 0;
    for p in RESIDUES {
        for k in 0..=3 {
            let t = Instant::now();
            let m = p + 12 * k;
            let sets = basic_set_tables(p, k).map_err(|e| format!("p={p} k={k}: {e}"))?;
            for (i, s) in sets.iter().enumerate() {
                let v = check_basic_set(s, p, k, m);
                if !v.is_empty() {
                    return Err(format!("p={p} k={k} set {i}: {} condition failures", v.len()));
                }
            }
            let clash = check_arc_disjointness(&sets);
            if !clash.is_empty() {
                return Err(format!("p={p} k={k}: {}", clash.join("; ")));
            }
            let fac = g_factorization(m).map_err(|e| format!("m={m}: {e}"))?;
            let r = verify_factorization(&fac, &g_digraph(m).map_err(|e| e.to_string())?);
            if !r.is_ok() || fac.factors.len() != 5 {
                return Err(format!("m={m}: {r}"));
            }
            if t.elapsed() > G_LIMIT {
                return Err(format!("p={p} k={k} took {:.2?}", t.elapsed()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} (p, k) pairs: basic sets, arc-disjointness and factorizations hold"))
}

pub fn circulant_suite(cfg: &Config) -> Check {
    let mut pieces = 0;
    for m in odd_coprime_to_3(13, cfg.max_m) {
        let split = km_circulant_split(m).map_err(|e| format!("m={m}: {e}"))?;
        let all: Vec<u32> = split.iter().flat_map(|c| c.residues.iter().copied()).collect();
        let set: BTreeSet<u32> = all.iter().copied().collect();
        if all.len() != set.len() || set != (1..=(m - 1) / 2).collect() {
            return Err(format!("m={m}: split is not a partition"));
        }
        for c in &split {
            let t = Instant::now();
            let d = hamiltonian_decompose(c).map_err(|e| format!("m={m} {:?}: {e}", c.residues))?;
            check_hamiltonian_decomposition(&d, c).map_err(|e| format!("m={m} {:?}: {e}", c.residues))?;
            if d.cycles.len() != c.residues.len() {
                return Err(format!("m={m} {:?}: {} cycles", c.residues, d.cycles.len()));
            }
            if t.elapsed() > CIRCULANT_LIMIT {
                return Err(format!("m={m} {:?} took {:.2?}", c.residues, t.elapsed()));
            }
            pieces += 1;
        }
    }
    Ok(format!("{pieces} circulants decomposed and verified"))
}

pub fn reduction_suite(cfg: &Config) -> Check {
    let t = Instant::now();
    let base = solve_base(5, &SolveOptions::default()).map_err(|e| e.to_string())?;
    let once = reduce_3m(&base, cfg.exec).map_err(|e| e.to_string())?;
    full_ok(&once, 15)?;
    let twice = reduce_3m(&once, cfg.exec).map_err(|e| e.to_string())?;
    full_ok(&twice, 45)?;
    if t.elapsed() > REDUCTION_LIMIT {
        return Err(format!("took {:.2?}", t.elapsed()));
    }
    Ok(format!("K*_30 into 15-cycles ({} factors), K*_90 into 45-cycles ({} factors)", once.factors.len(), twice.factors.len()))
}

pub fn base_suite(cfg: &Config) -> Check {
    let t = Instant::now();
    let five = solve_base(5, &SolveOptions { timeout: Some(BASE_LIMIT), ..SolveOptions::default() }).map_err(|e| e.to_string())?;
    full_ok(&five, 5)?;
    let searched = t.elapsed();
    for m in [7, 9, 11] {
        let report = match &cfg.data_dir {
            Some(d) => certify_file(&d.join(base_file_name(m))).map_err(|e| format!("m={m}: {e}"))?,
            None => certify(&io::from_json(embedded_text(m)).map_err(|e| format!("m={m}: {e}"))?),
        };
        if !report.is_ok() || report.factors != 2 * m as usize - 1 {
            return Err(format!("bundled m={m}: {report}"));
        }
    }
    Ok(format!("m=5 found by search in {searched:.2?}; bundled m=7, 9, 11 certified"))
}

pub fn oracle_suite(cfg: &Config) -> Check {
    let want = h_factorization(5).map_err(|e| e.to_string())?;
    let all = brute_force_factorizations(&h_digraph(5).map_err(|e| e.to_string())?, 5, 100_000);
    let target = factor_set(&want.factors);
    if !all.iter().any(|f| factor_set(f) == target) {
        return Err(format!("H_10 construction missing from {} enumerated factorizations", all.len()));
    }
    let opts = Options { exec: cfg.exec, data_dir: cfg.data_dir.clone() };
    let sources: Vec<Factorization> = [5, 7, 13]
        .iter()
        .map(|&m| full_construct_with(m, &opts).map_err(|e| e.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut valid, mut broken) = (0, 0);
    for i in 0..100 {
        let src = &sources[rng.gen_range(0..sources.len())];
        let fac = if rng.gen_bool(0.5) {
            valid += 1;
            src.clone()
        } else {
            broken += 1;
            mutation::ALL[rng.gen_range(0..mutation::ALL.len())].apply(src, &mut rng)
        };
        let a = verify_factorization(&fac, &complete_symmetric(fac.n).map_err(|e| e.to_string())?).is_ok();
        let b = verify_mendelsohn(&fac).is_ok();
        if a != b {
            return Err(format!("input {i}: factorization check {a}, design check {b}"));
        }
    }
    Ok(format!(
        "construction found among {} factorizations of H_10; checks agree on {valid} valid and {broken} mutated inputs",
        all.len()
    ))
}

pub fn mutation_suite(cfg: &Config) -> Check {
    let opts = Options { exec: cfg.exec, data_dir: cfg.data_dir.clone() };
    let fac = full_construct_with(13, &opts).map_err(|e| e.to_string())?;
    let g = complete_symmetric(26).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut missed: Vec<String> = Vec::new();
    for op in mutation::ALL {
        let bad = op.apply(&fac, &mut rng);
        let r = verify_factorization(&bad, &g);
        if !r.has(op.expected()) {
            missed.push(format!("{} gave {:?}", op.name(), r.codes().iter().map(Code::as_str).collect::<Vec<_>>()));
        }
    }
    if missed.is_empty() {
        Ok(format!("all {} operators rejected with their codes", mutation::ALL.len()))
    } else {
        Err(missed.join("; "))
    }
}

pub fn run_all(cfg: &Config) -> Vec<Outcome> {
    vec![
        timed(1, "main construction", || main_theorem(cfg)),
        timed(2, "H factorizations", h_suite),
        timed(3, "L factorizations and certificates", l_suite),
        timed(4, "G basic sets and factorizations", g_suite),
        timed(5, "circulant decompositions", || circulant_suite(cfg)),
        timed(6, "tripling reduction", || reduction_suite(cfg)),
        timed(7, "base orders", || base_suite(cfg)),
        timed(8, "oracle cross-check", || oracle_suite(cfg)),
        timed(9, "mutation killing", || mutation_suite(cfg)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_names_distinct() {
        let names: BTreeSet<&str> = mutation::ALL.iter().map(mutation::Mutation::name).collect();
        assert_eq!(names.len(), mutation::ALL.len());
        assert!(mutation::ALL.len() >= 10);
    }
}
