//! The three spectrum routes (closed form, character sums, fast transform)
//! must agree entry-by-entry, and the family closed forms must match the
//! general one wherever both apply.

use num_bigint::BigInt;
use hamspec::exact::binomial;
use hamspec::spectra::{
    family_4tminus1_spectrum, family_4tplus2_spectrum, hadamard_spectrum, negative_chain_report,
    spectrum_bruteforce, spectrum_closed_form, spectrum_walsh_hadamard, verify_weight_classes,
    HammingGraphSpec,
};

#[test]
fn closed_form_equals_bruteforce_and_transform() {
    for n in 1..=10 {
        for ell in 1..=n {
            let spec = HammingGraphSpec::new(n, ell).unwrap();
            let closed = spectrum_closed_form(&spec);
            assert_eq!(closed, spectrum_bruteforce(&spec).unwrap(), "H({n},2,{ell})");
            assert_eq!(
                closed,
                spectrum_walsh_hadamard(&spec).unwrap(),
                "H({n},2,{ell})"
            );
        }
    }
}

#[test]
fn family_forms_match_general_closed_form() {
    for t in 1..=3 {
        let hadamard = hadamard_spectrum(t).unwrap();
        assert_eq!(hadamard, spectrum_closed_form(&hadamard.spec), "4t, t={t}");

        let minus = family_4tminus1_spectrum(t).unwrap();
        assert_eq!(minus, spectrum_closed_form(&minus.spec), "4t-1, t={t}");

        let plus = family_4tplus2_spectrum(t).unwrap();
        assert_eq!(plus, spectrum_closed_form(&plus.spec), "4t+2, t={t}");
    }
}

#[test]
fn lambda_min_exact_identities() {
    for t in 1..=3u32 {
        let ws = hadamard_spectrum(t).unwrap();
        let lambda_min = ws.lambda_extremes().lambda_min;
        assert_eq!(
            lambda_min * BigInt::from(4 * t - 1),
            -binomial(4 * t, i64::from(2 * t))
        );

        let ws = family_4tminus1_spectrum(t).unwrap();
        let lambda_min = ws.lambda_extremes().lambda_min;
        assert_eq!(
            lambda_min * BigInt::from(4 * t - 1),
            -binomial(4 * t - 1, i64::from(2 * t))
        );

        let ws = family_4tplus2_spectrum(t).unwrap();
        let lambda_min = ws.lambda_extremes().lambda_min;
        assert_eq!(
            lambda_min * BigInt::from(2 * t + 1),
            -binomial(4 * t + 2, i64::from(2 * t + 2))
        );
    }
}

#[test]
fn hadamard_lambda_max_sits_at_both_ends() {
    // even l: the degree reappears at weight n
    for t in 1..=3 {
        let ws = hadamard_spectrum(t).unwrap();
        let extremes = ws.lambda_extremes();
        assert_eq!(extremes.argmax, vec![0, ws.spec.n]);
        assert_eq!(&extremes.lambda_max, ws.eigenvalue(0));
    }
}

#[test]
fn sampled_weight_class_constancy() {
    for (n, ell) in [(8, 4), (11, 6), (13, 5)] {
        let spec = HammingGraphSpec::new(n, ell).unwrap();
        verify_weight_classes(&spec, 12, 2024).unwrap();
    }
}

#[test]
fn negative_chain_certified_for_small_t() {
    for t in 1..=6 {
        assert!(negative_chain_report(t).unwrap().holds(), "t={t}");
    }
}
