use std::time::Duration;

use dirfac::assembly::{construct_k2m_factorization_with, full_construct};
use dirfac::digraph::complete_symmetric;
use dirfac::error::Error;
use dirfac::reduction::{expand_factor, ng_decompose, reduce_3m, Mode};
use dirfac::solver::{load_base, search_complete, solve_base, SolveOptions};
use dirfac::verifier::{verify_factorization, verify_mendelsohn};
use dirfac::{Exec, Factorization};

fn assert_valid(fac: &Factorization, m: usize) {
    assert_eq!(fac.n, 2 * m);
    assert_eq!(fac.cycle_length, m);
    assert_eq!(fac.factors.len(), 2 * m - 1);
    assert!(verify_factorization(fac, &complete_symmetric(2 * m).unwrap()).is_ok());
    assert!(verify_mendelsohn(fac).is_ok());
}

#[test]
fn ng_arc_counts() {
    for m in [5u32, 7] {
        let full = ng_decompose(m, Mode::Full).unwrap();
        let empty = ng_decompose(m, Mode::Empty).unwrap();
        assert_eq!(full.cycles.iter().map(|c| c.len()).sum::<usize>(), 15 * m as usize);
        assert_eq!(empty.cycles.iter().map(|c| c.len()).sum::<usize>(), 9 * m as usize);
    }
}

#[test]
fn expansion_sizes() {
    let base = load_base(5, None).unwrap();
    let full = expand_factor(&base.factors[0], 10, &ng_decompose(5, Mode::Full).unwrap()).unwrap();
    let empty = expand_factor(&base.factors[1], 10, &ng_decompose(5, Mode::Empty).unwrap()).unwrap();
    assert_eq!((full.len(), empty.len()), (5, 3));
    for f in full.iter().chain(&empty) {
        assert_eq!(f.cycles().len(), 2);
        assert_eq!(f.cycles().iter().map(|c| c.len()).sum::<usize>(), 30);
    }
}

#[test]
fn reduce_twice_from_five() {
    let base = solve_base(5, &SolveOptions::default()).unwrap();
    let once = reduce_3m(&base, Exec::default()).unwrap();
    assert_valid(&once, 15);
    let twice = reduce_3m(&once, Exec::Sequential).unwrap();
    assert_valid(&twice, 45);
}

#[test]
fn reduce_rejects_broken_input() {
    let mut base = load_base(5, None).unwrap();
    base.factors.pop();
    assert!(matches!(reduce_3m(&base, Exec::default()), Err(Error::NotApplicable(_))));
}

#[test]
fn dispatch() {
    assert_valid(&full_construct(13).unwrap(), 13);
    assert_valid(&full_construct(15).unwrap(), 15);
    assert_valid(&full_construct(27).unwrap(), 27);
    assert!(matches!(full_construct(3), Err(Error::NonExistent { .. })));
    assert!(matches!(full_construct(8), Err(Error::Unsupported { .. })));
}

#[test]
fn sequential_matches_parallel() {
    let a = construct_k2m_factorization_with(25, Exec::Sequential).unwrap();
    let b = construct_k2m_factorization_with(25, Exec::Parallel).unwrap();
    assert_eq!(a, b);
    assert_valid(&a, 25);
}

#[test]
fn search_reaches_every_base_order() {
    for m in [5u32, 7, 9] {
        assert_valid(&search_complete(m, None, 0).unwrap(), m as usize);
    }
    assert_valid(&search_complete(7, None, 99).unwrap(), 7);
}

#[test]
fn search_times_out() {
    match search_complete(11, Some(Duration::ZERO), 0) {
        Err(Error::Timeout(_)) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn bundled_preferred_when_asked() {
    let opts = SolveOptions { use_bundled: true, ..SolveOptions::default() };
    assert_eq!(solve_base(11, &opts).unwrap(), load_base(11, None).unwrap());
}
