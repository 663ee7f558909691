//! Certification sweep over every family instance with n <= 12: the
//! complete-system checks on sampled vertices and the translation-reduced
//! edge check must pass at tolerance 1e-9 * d throughout.

use hamspec::colouring::{
    certify_complete_system_sampled, certify_edge_orthogonality, chi_q_upper_from_colouring,
    default_tolerance, sample_vertices, Family, PairStrategy,
};
use num_bigint::BigInt;

const SEED: u64 = 0x4b52_4157;

fn certify_instance(family: Family, n: u32, ell: u32) {
    let d = family.validate(n, ell).unwrap();
    let tol = default_tolerance(d);
    let vertices = sample_vertices(n, 4, SEED);
    let system = certify_complete_system_sampled(family, n, ell, &vertices, tol).unwrap();
    assert!(system.pass, "{family} n={n} l={ell} system: {system:?}");
    let edges =
        certify_edge_orthogonality(family, n, ell, tol, PairStrategy::TranslationReduced).unwrap();
    assert!(edges.pass, "{family} n={n} l={ell} edges: {edges:?}");
    assert_eq!(
        chi_q_upper_from_colouring(&system, &edges).unwrap(),
        BigInt::from(d)
    );
}

#[test]
fn hadamard_instances() {
    for n in [4, 8, 12] {
        certify_instance(Family::Hadamard, n, n / 2);
    }
}

#[test]
fn four_t_minus_one_instances() {
    for n in [3, 7, 11] {
        certify_instance(Family::FourTMinusOne, n, n.div_ceil(2));
    }
}

#[test]
fn half_plus_instances() {
    for n in 2..=12u32 {
        for ell in 1..=n {
            if ell % 2 == 0 && 2 * ell >= n {
                certify_instance(Family::HalfPlus, n, ell);
            }
        }
    }
}
