use dirfac::construct_h::h_factorization;
use dirfac::digraph::{complete_symmetric, directed_circulant, h_digraph};
use dirfac::solver::{brute_force_factorizations, factor_set};
use dirfac::verifier::verify_factorization;
use dirfac::{Factorization, Kind};

#[test]
fn h10_enumeration_holds_the_construction() {
    let g = h_digraph(5).unwrap();
    let all = brute_force_factorizations(&g, 5, usize::MAX);
    let want = factor_set(&h_factorization(5).unwrap().factors);
    assert!(all.iter().any(|f| factor_set(f) == want));
    // Listed once each.
    let distinct: std::collections::BTreeSet<_> = all.iter().map(|f| factor_set(f)).collect();
    assert_eq!(distinct.len(), all.len());
    for factors in all {
        assert_eq!(factors.len(), g.arc_count() / g.vertex_count());
        let fac = Factorization { kind: Kind::H, n: 10, cycle_length: 5, factors };
        assert!(verify_factorization(&fac, &g).is_ok());
    }
}

#[test]
fn single_cycle() {
    let g = directed_circulant(5, &[1]).unwrap();
    let all = brute_force_factorizations(&g, 5, 10);
    assert_eq!(all.len(), 1);
    assert_eq!(all[0][0].cycles()[0].to_string(), "x0 x1 x2 x3 x4");
}

#[test]
fn no_hamiltonian_factorization_of_k4() {
    assert!(brute_force_factorizations(&complete_symmetric(4).unwrap(), 4, 10).is_empty());
}

#[test]
fn no_triangle_factorization_of_k6() {
    assert!(brute_force_factorizations(&complete_symmetric(6).unwrap(), 3, 10).is_empty());
}

#[test]
fn limit_is_respected() {
    let g = h_digraph(5).unwrap();
    assert_eq!(brute_force_factorizations(&g, 5, 3).len(), 3);
    assert!(brute_force_factorizations(&g, 4, 10).is_empty());
}
