//! Weight-indexed spectra of the binary Hamming graphs H(n, 2, l).
//!
//! H(n, 2, l) is the Cayley graph on the binary vector group V_n whose
//! connection set is the weight-l sphere; its eigenvalue at a character
//! indexed by a vector of weight r is K_l^{n,2}(r), with multiplicity
//! C(n, r). A spectrum is therefore stored as n+1 weight classes, never as
//! 2^n explicit eigenvalues.
//!
//! Three independent routes produce the same table:
//! * [`spectrum_closed_form`] — the Krawtchouk evaluation;
//! * [`spectrum_bruteforce`] — direct character sums over the connection set;
//! * [`spectrum_walsh_hadamard`] — a full fast transform over all 2^n
//!   characters, which additionally proves the eigenvalue is constant on
//!   every weight class.
//!
//! On top of these, the closed forms for three structured families
//! (n = 4t with l = 2t, n = 4t-1 with l = 2t, n = 4t+2 with l = 2t+2) are
//! built from explicit binomial quotients with exactness-checked divisions.
//!
//! Degenerate shapes worth remembering: l odd makes the graph bipartite,
//! and l = n is a perfect matching. l = 0 would be the identity relation of
//! the scheme, not a graph, and is rejected.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::bits::{dot_sign, weight_masks};
use crate::error::Error;
use crate::exact::{binomial, pow2};
use crate::krawtchouk::{kraw_eval, KrawtchoukParams};

/// Largest n accepted by the brute-force and fast-transform oracles.
pub const DEFAULT_BRUTEFORCE_CAP: u32 = 16;

/// A binary Hamming graph H(n, 2, l): vertices are length-n binary vectors,
/// edges join vectors at Hamming distance exactly l.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HammingGraphSpec {
    pub n: u32,
    pub ell: u32,
}

impl HammingGraphSpec {
    /// Requires 1 <= l <= n (and n small enough for u64 vertex masks).
    pub fn new(n: u32, ell: u32) -> Result<Self, Error> {
        if n == 0 || ell == 0 || ell > n || n >= 64 {
            return Err(Error::InvalidGraphSpec { n, ell });
        }
        Ok(Self { n, ell })
    }

    /// 2^n.
    pub fn vertex_count(&self) -> BigInt {
        pow2(self.n)
    }

    /// C(n, l): the graph is regular of this degree.
    pub fn degree(&self) -> BigInt {
        binomial(self.n, i64::from(self.ell))
    }

    /// Odd distance splits the vertices by weight parity.
    pub fn is_bipartite(&self) -> bool {
        self.ell % 2 == 1
    }
}

/// One weight class of a spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub weight: u32,
    pub eigenvalue: BigInt,
    /// C(n, weight): the number of characters indexed by this class.
    pub multiplicity: BigInt,
}

/// The complete spectrum of a Hamming graph, one entry per weight 0..=n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpectrum {
    pub spec: HammingGraphSpec,
    pub entries: Vec<SpectrumEntry>,
}

/// Exact extremes of a spectrum with their witness weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaExtremes {
    pub lambda_max: BigInt,
    pub lambda_min: BigInt,
    pub argmax: Vec<u32>,
    pub argmin: Vec<u32>,
}

impl WeightSpectrum {
    fn from_eigenvalues(spec: HammingGraphSpec, eigenvalues: Vec<BigInt>) -> Self {
        let entries = eigenvalues
            .into_iter()
            .enumerate()
            .map(|(r, eigenvalue)| SpectrumEntry {
                weight: r as u32,
                eigenvalue,
                multiplicity: binomial(spec.n, r as i64),
            })
            .collect();
        Self { spec, entries }
    }

    pub fn eigenvalue(&self, weight: u32) -> &BigInt {
        &self.entries[weight as usize].eigenvalue
    }

    /// sum_r C(n,r) lambda(r); zero for every l >= 1 (the adjacency trace).
    pub fn trace(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| &e.eigenvalue * &e.multiplicity)
            .sum()
    }

    /// Max/min eigenvalues over all weight classes, with every witness weight.
    pub fn lambda_extremes(&self) -> LambdaExtremes {
        let lambda_max = self
            .entries
            .iter()
            .map(|e| &e.eigenvalue)
            .max()
            .expect("spectrum entries are never empty")
            .clone();
        let lambda_min = self
            .entries
            .iter()
            .map(|e| &e.eigenvalue)
            .min()
            .expect("spectrum entries are never empty")
            .clone();
        let witnesses = |target: &BigInt| {
            self.entries
                .iter()
                .filter(|e| &e.eigenvalue == target)
                .map(|e| e.weight)
                .collect()
        };
        LambdaExtremes {
            argmax: witnesses(&lambda_max),
            argmin: witnesses(&lambda_min),
            lambda_max,
            lambda_min,
        }
    }
}

/// Spectrum via the Krawtchouk closed form: entry r is K_l^{n,2}(r).
pub fn spectrum_closed_form(spec: &HammingGraphSpec) -> WeightSpectrum {
    let params = KrawtchoukParams::new(spec.n, 2, spec.ell)
        .expect("graph spec invariants imply valid polynomial parameters");
    let eigenvalues = (0..=spec.n)
        .map(|r| kraw_eval(&params, r).expect("r <= n"))
        .collect();
    WeightSpectrum::from_eigenvalues(*spec, eigenvalues)
}

fn character_sum(spec: &HammingGraphSpec, a: u64) -> BigInt {
    let sum: i64 = weight_masks(spec.n, spec.ell)
        .map(|s| dot_sign(s, a))
        .sum();
    BigInt::from(sum)
}

/// Spectrum via direct character sums, the independent oracle for every
/// closed form: for one representative a of each weight r it evaluates
/// sum over weight-l vectors s of (-1)^{s.a}.
///
/// Capped at n = [`DEFAULT_BRUTEFORCE_CAP`]; use
/// [`spectrum_bruteforce_capped`] to override.
pub fn spectrum_bruteforce(spec: &HammingGraphSpec) -> Result<WeightSpectrum, Error> {
    spectrum_bruteforce_capped(spec, DEFAULT_BRUTEFORCE_CAP)
}

/// [`spectrum_bruteforce`] with an explicit cap on n.
pub fn spectrum_bruteforce_capped(
    spec: &HammingGraphSpec,
    cap: u32,
) -> Result<WeightSpectrum, Error> {
    if spec.n > cap {
        return Err(Error::BruteforceCapExceeded { n: spec.n, cap });
    }
    let eigenvalues = (0..=spec.n)
        .map(|r| {
            let representative = (1u64 << r) - 1;
            character_sum(spec, representative)
        })
        .collect();
    Ok(WeightSpectrum::from_eigenvalues(*spec, eigenvalues))
}

/// Spot-checks that the character sum is constant on each weight class by
/// comparing randomly sampled class members against the class representative.
pub fn verify_weight_classes(
    spec: &HammingGraphSpec,
    samples_per_weight: u32,
    seed: u64,
) -> Result<(), Error> {
    if spec.n > DEFAULT_BRUTEFORCE_CAP {
        return Err(Error::BruteforceCapExceeded {
            n: spec.n,
            cap: DEFAULT_BRUTEFORCE_CAP,
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for r in 0..=spec.n {
        let expected = character_sum(spec, (1u64 << r) - 1);
        for _ in 0..samples_per_weight {
            let sample = random_weight_mask(&mut rng, spec.n, r);
            if character_sum(spec, sample) != expected {
                return Err(Error::WeightClassMismatch { weight: r });
            }
        }
    }
    Ok(())
}

pub(crate) fn random_weight_mask(rng: &mut ChaCha12Rng, n: u32, weight: u32) -> u64 {
    let mut mask = 0u64;
    let mut remaining = weight;
    // Floyd-style sampling of `weight` distinct positions out of n
    while remaining > 0 {
        let bit = 1u64 << rng.random_range(0..n);
        if mask & bit == 0 {
            mask |= bit;
            remaining -= 1;
        }
    }
    mask
}

/// Spectrum via a full Walsh transform of the connection-set indicator over
/// all 2^n characters. Exact integer arithmetic; also verifies that the
/// transform is constant on every weight class, which the two other routes
/// assume. Capped at n = [`DEFAULT_BRUTEFORCE_CAP`].
pub fn spectrum_walsh_hadamard(spec: &HammingGraphSpec) -> Result<WeightSpectrum, Error> {
    if spec.n > DEFAULT_BRUTEFORCE_CAP {
        return Err(Error::BruteforceCapExceeded {
            n: spec.n,
            cap: DEFAULT_BRUTEFORCE_CAP,
        });
    }
    let size = 1usize << spec.n;
    let mut values = vec![0i64; size];
    for s in weight_masks(spec.n, spec.ell) {
        values[s as usize] = 1;
    }
    // in-place butterfly: values[a] becomes sum_s (-1)^{a.s} values[s]
    let mut h = 1;
    while h < size {
        for block in (0..size).step_by(2 * h) {
            for i in block..block + h {
                let (u, v) = (values[i], values[i + h]);
                values[i] = u + v;
                values[i + h] = u - v;
            }
        }
        h *= 2;
    }

    let mut eigenvalues: Vec<Option<i64>> = vec![None; spec.n as usize + 1];
    for (a, &lambda) in values.iter().enumerate() {
        let r = (a as u64).count_ones() as usize;
        match eigenvalues[r] {
            None => eigenvalues[r] = Some(lambda),
            Some(seen) if seen == lambda => {}
            Some(_) => return Err(Error::WeightClassMismatch { weight: r as u32 }),
        }
    }
    let eigenvalues = eigenvalues
        .into_iter()
        .map(|v| BigInt::from(v.expect("every weight class 0..=n is populated")))
        .collect();
    Ok(WeightSpectrum::from_eigenvalues(*spec, eigenvalues))
}

fn exact_quotient(numerator: BigInt, denominator: &BigInt, weight: u32) -> Result<BigInt, Error> {
    let (quotient, remainder) = numerator.div_rem(denominator);
    if !remainder.is_zero() {
        return Err(Error::InexactEigenvalueDivision { weight });
    }
    Ok(quotient)
}

fn signed(parity: u32, value: BigInt) -> BigInt {
    if parity.is_multiple_of(2) {
        value
    } else {
        -value
    }
}

/// Closed-form spectrum of H(4t, 2, 2t), t >= 1: zero at odd weights and
///
/// ```text
/// lambda(2j) = (-1)^j C(n, n/2) C(n/2, j) / C(n, 2j)
/// ```
///
/// at even weights; the division is exact (any inexact division would
/// falsify the formula and is reported as an error). The minimum is
/// -C(n, n/2)/(n-1), attained at weights 2 and n-2.
pub fn hadamard_spectrum(t: u32) -> Result<WeightSpectrum, Error> {
    if t == 0 {
        return Err(Error::FamilyIndexZero);
    }
    let n = 4 * t;
    let spec = HammingGraphSpec::new(n, 2 * t)?;
    let top = binomial(n, i64::from(2 * t));
    let eigenvalues = (0..=n)
        .map(|r| {
            if r % 2 == 1 {
                return Ok(BigInt::zero());
            }
            let j = r / 2;
            let numerator = &top * binomial(n / 2, i64::from(j));
            let value = exact_quotient(numerator, &binomial(n, i64::from(r)), r)?;
            Ok(signed(j, value))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(WeightSpectrum::from_eigenvalues(spec, eigenvalues))
}

/// Closed-form spectrum of H(4t-1, 2, 2t), t >= 1:
///
/// ```text
/// lambda(2j)   = (-1)^j   C(4t-1, 2t) C(2t-1, j) / C(4t-1, 2j)
/// lambda(2j+1) = (-1)^{j+1} C(4t-1, 2t) C(2t-1, j) / C(4t-1, 2j+1)
/// ```
///
/// The minimum is -C(4t-1, 2t)/(4t-1), attained at weights 1 and 2 (and
/// their mirrors).
pub fn family_4tminus1_spectrum(t: u32) -> Result<WeightSpectrum, Error> {
    if t == 0 {
        return Err(Error::FamilyIndexZero);
    }
    let n = 4 * t - 1;
    let spec = HammingGraphSpec::new(n, 2 * t)?;
    let top = binomial(n, i64::from(2 * t));
    let eigenvalues = (0..=n)
        .map(|r| {
            let j = r / 2;
            let numerator = &top * binomial(2 * t - 1, i64::from(j));
            let value = exact_quotient(numerator, &binomial(n, i64::from(r)), r)?;
            Ok(signed(j + (r % 2), value))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(WeightSpectrum::from_eigenvalues(spec, eigenvalues))
}

/// Closed-form spectrum of H(4t+2, 2, 2t+2), t >= 1:
///
/// ```text
/// lambda(2j)   = (-1)^j   [C(2t, j) - C(2t, j-1)] C(n, l) / C(n, 2j)
/// lambda(2j+1) = (-1)^{j+1} 2 C(2t, j) C(n, l) / C(n, 2j+1)
/// ```
///
/// The minimum is -C(n, l)/(2t+1), attained at the odd weights next to the
/// ends.
pub fn family_4tplus2_spectrum(t: u32) -> Result<WeightSpectrum, Error> {
    if t == 0 {
        return Err(Error::FamilyIndexZero);
    }
    let n = 4 * t + 2;
    let ell = 2 * t + 2;
    let spec = HammingGraphSpec::new(n, ell)?;
    let top = binomial(n, i64::from(ell));
    let eigenvalues = (0..=n)
        .map(|r| {
            let j = r / 2;
            let factor = if r % 2 == 0 {
                binomial(2 * t, i64::from(j)) - binomial(2 * t, i64::from(j) - 1)
            } else {
                BigInt::from(2) * binomial(2 * t, i64::from(j))
            };
            let value = exact_quotient(&top * factor, &binomial(n, i64::from(r)), r)?;
            Ok(signed(j + (r % 2), value))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(WeightSpectrum::from_eigenvalues(spec, eigenvalues))
}

/// Structure of the negative eigenvalues of H(4t-1, 2, 2t).
///
/// The negatives sit at weights 4j+1, 4j+2 (and mirrors); within each pair
/// the two values are equal, and the pairs strictly increase with j, so the
/// minimum is at weight 1. [`negative_chain_report`] checks all of this
/// exhaustively for one t; it is a numeric certificate, not a proof for
/// general t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeChainReport {
    pub t: u32,
    /// Weight pairs (4j+1, 4j+2) in the first half of the table.
    pub pairs: Vec<(u32, u32)>,
    pub equal_within_pairs: bool,
    pub strictly_increasing: bool,
    /// Every negative weight is congruent to 1 or 2 mod 4, up to mirror.
    pub negatives_only_at_expected_weights: bool,
    pub minimum_at_weight_one: bool,
}

impl NegativeChainReport {
    pub fn holds(&self) -> bool {
        self.equal_within_pairs
            && self.strictly_increasing
            && self.negatives_only_at_expected_weights
            && self.minimum_at_weight_one
    }
}

/// Exhaustive scan of the negative part of the H(4t-1, 2, 2t) spectrum.
pub fn negative_chain_report(t: u32) -> Result<NegativeChainReport, Error> {
    let ws = family_4tminus1_spectrum(t)?;
    let n = ws.spec.n;

    let mut pairs = Vec::new();
    let mut j = 0;
    while 4 * j + 2 <= n.div_ceil(2) {
        pairs.push((4 * j + 1, 4 * j + 2));
        j += 1;
    }

    let equal_within_pairs = pairs
        .iter()
        .all(|&(a, b)| ws.eigenvalue(a) == ws.eigenvalue(b));
    let strictly_increasing = pairs
        .windows(2)
        .all(|w| ws.eigenvalue(w[0].0) < ws.eigenvalue(w[1].0));
    let negatives_only_at_expected_weights = ws.entries.iter().all(|e| {
        if !e.eigenvalue.is_negative() {
            return true;
        }
        let folded = e.weight.min(n - e.weight);
        folded % 4 == 1 || folded % 4 == 2
    });
    let minimum_at_weight_one =
        &ws.lambda_extremes().lambda_min == ws.eigenvalue(1) && ws.eigenvalue(1).is_negative();

    Ok(NegativeChainReport {
        t,
        pairs,
        equal_within_pairs,
        strictly_increasing,
        negatives_only_at_expected_weights,
        minimum_at_weight_one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn eigens(ws: &WeightSpectrum) -> Vec<BigInt> {
        ws.entries.iter().map(|e| e.eigenvalue.clone()).collect()
    }

    #[test]
    fn spec_validation() {
        assert!(HammingGraphSpec::new(4, 0).is_err());
        assert!(HammingGraphSpec::new(4, 5).is_err());
        assert!(HammingGraphSpec::new(0, 0).is_err());
        let spec = HammingGraphSpec::new(6, 3).unwrap();
        assert_eq!(spec.vertex_count(), big(64));
        assert_eq!(spec.degree(), big(20));
        assert!(spec.is_bipartite());
        assert!(!HammingGraphSpec::new(6, 4).unwrap().is_bipartite());
    }

    #[test]
    fn closed_form_known_columns() {
        let ws = spectrum_closed_form(&HammingGraphSpec::new(4, 2).unwrap());
        assert_eq!(eigens(&ws), [6, 0, -2, 0, 6].map(big));

        let ws = spectrum_closed_form(&HammingGraphSpec::new(3, 3).unwrap());
        assert_eq!(eigens(&ws), [1, -1, 1, -1].map(big));

        let ws = spectrum_closed_form(&HammingGraphSpec::new(10, 5).unwrap());
        assert_eq!(ws.eigenvalue(5), &big(0));
    }

    #[test]
    fn bruteforce_matches_degree_at_zero() {
        for (n, ell) in [(4, 2), (5, 3), (7, 4), (6, 6)] {
            let spec = HammingGraphSpec::new(n, ell).unwrap();
            let ws = spectrum_bruteforce(&spec).unwrap();
            assert_eq!(ws.eigenvalue(0), &spec.degree());
        }
    }

    #[test]
    fn bruteforce_known_value() {
        let spec = HammingGraphSpec::new(4, 2).unwrap();
        let ws = spectrum_bruteforce(&spec).unwrap();
        assert_eq!(ws.eigenvalue(2), &big(-2));
    }

    #[test]
    fn bruteforce_cap_enforced() {
        let spec = HammingGraphSpec::new(20, 2).unwrap();
        assert_eq!(
            spectrum_bruteforce(&spec),
            Err(Error::BruteforceCapExceeded { n: 20, cap: 16 })
        );
        assert!(spectrum_bruteforce_capped(&HammingGraphSpec::new(6, 2).unwrap(), 5).is_err());
    }

    #[test]
    fn weight_class_sampling_passes() {
        for (n, ell) in [(6, 2), (9, 4), (12, 6)] {
            let spec = HammingGraphSpec::new(n, ell).unwrap();
            verify_weight_classes(&spec, 8, 0x4b52_4157).unwrap();
        }
    }

    #[test]
    fn walsh_transform_agrees_with_closed_form() {
        for (n, ell) in [(4, 2), (7, 4), (10, 3), (12, 6)] {
            let spec = HammingGraphSpec::new(n, ell).unwrap();
            assert_eq!(spectrum_walsh_hadamard(&spec).unwrap(), spectrum_closed_form(&spec));
        }
    }

    #[test]
    fn hadamard_family_known_values() {
        let ws = hadamard_spectrum(2).unwrap();
        assert_eq!(ws.eigenvalue(2), &big(-10));
        assert_eq!(ws.eigenvalue(4), &big(6));
        for r in (1..8).step_by(2) {
            assert_eq!(ws.eigenvalue(r), &big(0));
        }

        let extremes = hadamard_spectrum(1).unwrap().lambda_extremes();
        assert_eq!(extremes.lambda_min, big(-2));
    }

    #[test]
    fn family_4tminus1_known_columns() {
        assert_eq!(
            eigens(&family_4tminus1_spectrum(1).unwrap()),
            [3, -1, -1, 3].map(big)
        );
        assert_eq!(
            eigens(&family_4tminus1_spectrum(2).unwrap()),
            [35, -5, -5, 3, 3, -5, -5, 35].map(big)
        );
    }

    #[test]
    fn family_4tplus2_known_values() {
        let ws = family_4tplus2_spectrum(1).unwrap();
        assert_eq!(ws.eigenvalue(1), &big(-5));
        assert_eq!(ws.eigenvalue(3), &big(3));
    }

    #[test]
    fn families_reject_t_zero() {
        assert_eq!(hadamard_spectrum(0), Err(Error::FamilyIndexZero));
        assert_eq!(family_4tminus1_spectrum(0), Err(Error::FamilyIndexZero));
        assert_eq!(family_4tplus2_spectrum(0), Err(Error::FamilyIndexZero));
    }

    #[test]
    fn lambda_extremes_witnesses() {
        let extremes = hadamard_spectrum(2).unwrap().lambda_extremes();
        assert_eq!(extremes.lambda_max, big(70));
        assert_eq!(extremes.lambda_min, big(-10));
        assert_eq!(extremes.argmax, vec![0, 8]);
        assert_eq!(extremes.argmin, vec![2, 6]);

        let extremes = family_4tminus1_spectrum(1).unwrap().lambda_extremes();
        assert_eq!(
            (extremes.lambda_max, extremes.lambda_min),
            (big(3), big(-1))
        );
        assert_eq!((extremes.argmax, extremes.argmin), (vec![0, 3], vec![1, 2]));

        let ws = spectrum_closed_form(&HammingGraphSpec::new(6, 3).unwrap());
        let extremes = ws.lambda_extremes();
        assert_eq!(
            (extremes.lambda_max, extremes.lambda_min),
            (big(20), big(-20))
        );
        assert_eq!((extremes.argmax, extremes.argmin), (vec![0], vec![6]));
    }

    #[test]
    fn trace_is_zero_and_multiplicities_cover_the_cube() {
        for n in 1..=10 {
            for ell in 1..=n {
                let spec = HammingGraphSpec::new(n, ell).unwrap();
                let ws = spectrum_closed_form(&spec);
                assert!(ws.trace().is_zero(), "trace(H({n},2,{ell})) != 0");
                let total: BigInt = ws.entries.iter().map(|e| &e.multiplicity).sum();
                assert_eq!(total, spec.vertex_count());
                assert_eq!(ws.eigenvalue(0), &spec.degree());
            }
        }
    }

    #[test]
    fn hadamard_vanishes_at_odd_weights() {
        for t in 1..=3 {
            let ws = hadamard_spectrum(t).unwrap();
            for r in (1..ws.spec.n).step_by(2) {
                assert!(ws.eigenvalue(r).is_zero(), "t={t} r={r}");
            }
        }
    }

    #[test]
    fn weight_symmetry() {
        // lambda(n-r) = (-1)^l lambda(r)
        for n in 1..=10u32 {
            for ell in 1..=n {
                let ws = spectrum_closed_form(&HammingGraphSpec::new(n, ell).unwrap());
                for r in 0..=n {
                    let mirrored = ws.eigenvalue(n - r).clone();
                    let expected = signed(ell, ws.eigenvalue(r).clone());
                    assert_eq!(mirrored, expected, "symmetry at n={n} l={ell} r={r}");
                }
            }
        }
    }

    #[test]
    fn negative_chain_holds_up_to_t6() {
        for t in 1..=6 {
            let report = negative_chain_report(t).unwrap();
            assert!(report.holds(), "chain report failed for t={t}: {report:?}");
        }
        // expected pair layout grows with t
        assert_eq!(negative_chain_report(3).unwrap().pairs, vec![(1, 2), (5, 6)]);
        assert_eq!(
            negative_chain_report(6).unwrap().pairs,
            vec![(1, 2), (5, 6), (9, 10)]
        );
    }
}
