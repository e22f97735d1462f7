use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::select;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dirfac::assembly::{decompose_k2m, full_construct};
use dirfac::circulant::{check_hamiltonian_decomposition, hamiltonian_decompose, km_circulant_split, relabel_to_unit_circulant, ConnectionSet};
use dirfac::construct_g::g_factorization;
use dirfac::construct_h::h_factorization;
use dirfac::construct_l::{l_factorization, l_nonexistence_certificate};
use dirfac::digraph::{complete_symmetric, cycle_type, g_digraph, h_digraph, l_digraph};
use dirfac::io;
use dirfac::mutation;
use dirfac::reduction::{expand_factor, ng_decompose, Mode};
use dirfac::solver::load_base;
use dirfac::verifier::{verify_factorization, verify_mendelsohn};
use dirfac::{DirectedCycle, Factor, Vertex};

fn odd(lo: u32, hi: u32) -> Vec<u32> {
    (lo..=hi).filter(|m| m % 2 == 1).collect()
}

fn odd_coprime_to_3(lo: u32, hi: u32) -> Vec<u32> {
    odd(lo, hi).into_iter().filter(|m| m % 3 != 0).collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn h_verifies(m in select(odd(5, 99))) {
        let fac = h_factorization(m).unwrap();
        prop_assert!(verify_factorization(&fac, &h_digraph(m).unwrap()).is_ok());
    }

    #[test]
    fn l_verifies_with_types(m in select(odd_coprime_to_3(13, 97))) {
        let fac = l_factorization(m).unwrap();
        prop_assert!(verify_factorization(&fac, &l_digraph(m).unwrap()).is_ok());
        for f in &fac.factors {
            let types: BTreeSet<u64> = f.cycles().iter().map(|c| cycle_type(c).unwrap()).collect();
            prop_assert_eq!(types, BTreeSet::from([1, 3]));
        }
    }

    #[test]
    fn l_certificate_empty(m in select((9..=99u32).step_by(6).collect::<Vec<_>>())) {
        let c = l_nonexistence_certificate(m).unwrap();
        prop_assert!(c.check());
        prop_assert_eq!(c.feasible_rows(), 0);
    }

    #[test]
    fn g_verifies(m in select(odd_coprime_to_3(11, 79))) {
        let fac = g_factorization(m).unwrap();
        prop_assert!(verify_factorization(&fac, &g_digraph(m).unwrap()).is_ok());
    }

    #[test]
    fn split_degrees(m in select(odd_coprime_to_3(13, 99))) {
        let split = km_circulant_split(m).unwrap();
        let degree: u32 = split.iter().map(|c| 2 * c.residues.len() as u32).sum();
        prop_assert_eq!(degree, m - 1);
    }

    #[test]
    fn pairs_decompose(m in select(odd(5, 61)), a in 1u32..30, b in 1u32..30) {
        let (a, b) = (a % (m / 2) + 1, b % (m / 2) + 1);
        prop_assume!(a != b && gcd(gcd(a, b), m) == 1);
        let c = ConnectionSet::new(m, vec![a.min(b), a.max(b)]).unwrap();
        let d = hamiltonian_decompose(&c).unwrap();
        prop_assert!(check_hamiltonian_decomposition(&d, &c).is_ok());
    }

    #[test]
    fn relabel_conjugates_to_unit_cycle(m in select(odd(5, 41)), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut h: Vec<u32> = (0..m).collect();
        h.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let pos = relabel_to_unit_circulant(&h, m).unwrap();
        let pushed: BTreeSet<(u32, u32)> = (0..m as usize)
            .map(|i| {
                let (a, b) = (pos[h[i] as usize], pos[h[(i + 1) % m as usize] as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        let unit: BTreeSet<(u32, u32)> = (0..m).map(|i| { let j = (i + 1) % m; (i.min(j), i.max(j)) }).collect();
        prop_assert_eq!(pushed, unit);
        for (i, &v) in h.iter().enumerate() {
            prop_assert_eq!(pos[v as usize], i as u32);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn constructions_verify_both_ways(m in select(vec![5u32, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 35, 37])) {
        let fac = full_construct(m).unwrap();
        let n = 2 * m as usize;
        prop_assert_eq!(fac.factors.len(), n - 1);
        prop_assert!(verify_factorization(&fac, &complete_symmetric(n).unwrap()).is_ok());
        prop_assert!(verify_mendelsohn(&fac).is_ok());
    }

    #[test]
    fn blocks_partition(m in select(odd_coprime_to_3(13, 49))) {
        let mut all = BTreeSet::new();
        let mut total = 0;
        for b in decompose_k2m(m).unwrap() {
            let arcs = b.arcs(m).unwrap();
            total += arcs.len();
            all.extend(arcs);
        }
        let n = 2 * m as usize;
        prop_assert_eq!(total, n * (n - 1));
        prop_assert_eq!(all.len(), total);
    }

    #[test]
    fn round_trips(m in select(vec![5u32, 7, 13, 15]), text in any::<bool>()) {
        let fac = full_construct(m).unwrap();
        let (s, back) = if text {
            let s = io::to_text(&fac);
            (s.clone(), io::from_text(&s).unwrap())
        } else {
            let s = io::to_json(&fac);
            (s.clone(), io::from_json(&s).unwrap())
        };
        prop_assert_eq!(&back, &fac);
        let again = if text { io::to_text(&back) } else { io::to_json(&back) };
        prop_assert_eq!(again, s);
    }

    #[test]
    fn mutations_caught(m in select(vec![5u32, 7, 13]), op in 0..mutation::ALL.len(), seed in any::<u64>()) {
        let fac = full_construct(m).unwrap();
        let op = mutation::ALL[op];
        let bad = op.apply(&fac, &mut ChaCha8Rng::seed_from_u64(seed));
        let r = verify_factorization(&bad, &complete_symmetric(fac.n).unwrap());
        prop_assert!(r.has(op.expected()), "{} gave {}", op.name(), r);
        let same_n = verify_factorization(&bad, &complete_symmetric(bad.n).unwrap()).is_ok();
        prop_assert_eq!(same_n, verify_mendelsohn(&bad).is_ok());
    }

    #[test]
    fn expansion_commutes_with_relabelling(seed in any::<u64>(), which in 0usize..9) {
        use rand::seq::SliceRandom;
        let base = load_base(5, None).unwrap();
        let n = 10u32;
        let mut sigma: Vec<u32> = (0..n).collect();
        sigma.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let relabel = |f: &Factor, size: u32| {
            Factor::new(
                f.cycles()
                    .iter()
                    .map(|c| {
                        DirectedCycle::new(
                            c.vertices().iter().map(|v| Vertex::new(0, (v.index / n) * n + sigma[(v.index % n) as usize], size)).collect(),
                        )
                        .unwrap()
                    })
                    .collect(),
            )
        };
        let f = &base.factors[which];
        let mode = if which == 0 { Mode::Full } else { Mode::Empty };
        let ng = ng_decompose(5, mode).unwrap();
        // Cycle start points move under relabelling, so compare covered arcs.
        let arcs = |fs: &[Factor]| -> BTreeSet<(Vertex, Vertex)> {
            fs.iter().flat_map(|f| f.arcs()).map(|a| (a.tail, a.head)).collect()
        };
        let lhs = expand_factor(&relabel(f, n), n as usize, &ng).unwrap();
        let rhs: Vec<Factor> = expand_factor(f, n as usize, &ng).unwrap().iter().map(|g| relabel(g, 3 * n)).collect();
        prop_assert_eq!(lhs.len(), rhs.len());
        prop_assert!(lhs.iter().all(|g| g.cycles().iter().map(|c| c.len()).sum::<usize>() == 3 * n as usize));
        prop_assert_eq!(arcs(&lhs), arcs(&rhs));
    }
}
