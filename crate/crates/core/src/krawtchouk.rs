//! Exact evaluation of Krawtchouk polynomials and machine-checkable forms of
//! their classical identities.
//!
//! The polynomial family is
//!
//! ```text
//! K_l^{n,q}(x) = sum_{j=0..l} (-1)^j (q-1)^{l-j} C(x,j) C(n-x, l-j)
//! ```
//!
//! evaluated on the integer lattice x in [0, n]. All arithmetic is exact
//! (big integers, big rationals); there is no floating point in this module.
//!
//! Identity checkers return residuals (one side minus the other) instead of
//! booleans: a failing case then reports how far off it is, which is far more
//! useful when shrinking a counterexample.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::{binomial, int_pow};

/// Parameter triple (n, q, l) identifying the polynomial K_l^{n,q}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KrawtchoukParams {
    /// Code length; n >= 1.
    pub n: u32,
    /// Alphabet size; q >= 2.
    pub q: u32,
    /// Degree index; 0 <= l <= n.
    pub ell: u32,
}

impl KrawtchoukParams {
    pub fn new(n: u32, q: u32, ell: u32) -> Result<Self, Error> {
        if n == 0 || q < 2 || ell > n {
            return Err(Error::InvalidKrawtchoukParams { n, q, ell });
        }
        Ok(Self { n, q, ell })
    }
}

/// K_l^{n,q}(x), exactly. The argument must lie on the integer lattice [0, n].
pub fn kraw_eval(params: &KrawtchoukParams, x: u32) -> Result<BigInt, Error> {
    if x > params.n {
        return Err(Error::ArgOutOfRange { x, n: params.n });
    }
    Ok(kraw_sum(params.n, params.q, params.ell, x))
}

/// The defining sum, without the l <= n restriction of [`KrawtchoukParams`].
///
/// The recurrence checks step from length n to length n-1 while keeping the
/// degree k, so they can reach K_n^{n-1}; the sum formula still covers that
/// case (it evaluates to zero on the lattice).
pub(crate) fn kraw_sum(n: u32, q: u32, ell: u32, x: u32) -> BigInt {
    debug_assert!(x <= n && q >= 2);
    let mut acc = BigInt::zero();
    for j in 0..=ell {
        let term = int_pow(q - 1, ell - j)
            * binomial(x, i64::from(j))
            * binomial(n - x, i64::from(ell - j));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn check_range(value: u32, n: u32) -> Result<(), Error> {
    if value > n {
        return Err(Error::ArgOutOfRange { x: value, n });
    }
    Ok(())
}

/// Residual of the orthogonality relation
///
/// ```text
/// sum_{d=0..n} K_i(d) K_j(d) (q-1)^d C(n,d)  =  q^n (q-1)^i C(n,i) delta_{i,j}
/// ```
///
/// Always zero when the relation holds.
pub fn check_orthogonality(n: u32, q: u32, i: u32, j: u32) -> Result<BigInt, Error> {
    let pi = KrawtchoukParams::new(n, q, i)?;
    let pj = KrawtchoukParams::new(n, q, j)?;
    let mut sum = BigInt::zero();
    for d in 0..=n {
        sum += kraw_eval(&pi, d)?
            * kraw_eval(&pj, d)?
            * int_pow(q - 1, d)
            * binomial(n, i64::from(d));
    }
    let rhs = if i == j {
        int_pow(q, n) * int_pow(q - 1, i) * binomial(n, i64::from(i))
    } else {
        BigInt::zero()
    };
    Ok(sum - rhs)
}

/// Residuals of the three recursive relations, each on its applicability
/// domain. `None` marks a form whose terms would leave the integer lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceResiduals {
    /// K_k^n(x) - [K_k^{n-1}(x-1) - K_{k-1}^{n-1}(x-1)]; needs x >= 1.
    pub shifted: Option<BigInt>,
    /// K_k^n(x) - [K_k^{n-1}(x) + (q-1) K_{k-1}^{n-1}(x)]; needs x <= n-1.
    pub same_argument: Option<BigInt>,
    /// K_k^{n-1}(x) - sum_{j=0..k} K_j^n(x) (1-q)^{k-j}; needs x <= n-1.
    pub order_reduction: Option<BigInt>,
}

impl RecurrenceResiduals {
    /// True when every applicable residual is zero.
    pub fn all_zero(&self) -> bool {
        [&self.shifted, &self.same_argument, &self.order_reduction]
            .into_iter()
            .flatten()
            .all(|r| r.is_zero())
    }
}

/// Checks the three recursive relations at (n, q, k, x) with 1 <= k <= n.
///
/// The shifted form evaluates at x-1 and is reported not-applicable for
/// x = 0; the two reduced-length forms evaluate K^{n-1} at x and are reported
/// not-applicable for x = n. Outside those corners all three are exact.
pub fn check_recurrences(n: u32, q: u32, k: u32, x: u32) -> Result<RecurrenceResiduals, Error> {
    if n == 0 || q < 2 {
        return Err(Error::InvalidKrawtchoukParams { n, q, ell: k });
    }
    if k == 0 || k > n {
        return Err(Error::OrderOutOfRange { k, n });
    }
    check_range(x, n)?;

    let kn = |deg: u32, arg: u32| kraw_sum(n, q, deg, arg);
    let kn1 = |deg: u32, arg: u32| kraw_sum(n - 1, q, deg, arg);

    let shifted = (x >= 1).then(|| kn(k, x) - (kn1(k, x - 1) - kn1(k - 1, x - 1)));

    let same_argument =
        (x < n).then(|| kn(k, x) - (kn1(k, x) + BigInt::from(q - 1) * kn1(k - 1, x)));

    let order_reduction = (x < n).then(|| {
        let mut sum = BigInt::zero();
        for j in 0..=k {
            // (1-q)^{k-j} = (-1)^{k-j} (q-1)^{k-j}
            let term = kn(j, x) * int_pow(q - 1, k - j);
            if (k - j).is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        kn1(k, x) - sum
    });

    Ok(RecurrenceResiduals {
        shifted,
        same_argument,
        order_reduction,
    })
}

/// Residual of the reciprocal law
///
/// ```text
/// (q-1)^i C(n,i) K_d(i) = (q-1)^d C(n,d) K_i(d)
/// ```
pub fn check_reciprocal(n: u32, q: u32, i: u32, d: u32) -> Result<BigInt, Error> {
    let pd = KrawtchoukParams::new(n, q, d)?;
    let pi = KrawtchoukParams::new(n, q, i)?;
    let lhs = int_pow(q - 1, i) * binomial(n, i64::from(i)) * kraw_eval(&pd, i)?;
    let rhs = int_pow(q - 1, d) * binomial(n, i64::from(d)) * kraw_eval(&pi, d)?;
    Ok(lhs - rhs)
}

/// Coefficient sequence of the generating function
///
/// ```text
/// (1-z)^d (1+(q-1)z)^{n-d} = sum_{k=0..n} K_k^n(d) z^k
/// ```
///
/// obtained by exact polynomial multiplication; coefficient k equals
/// K_k^{n,q}(d).
pub fn gen_function_coeffs(n: u32, q: u32, d: u32) -> Result<Vec<BigInt>, Error> {
    if n == 0 || q < 2 {
        return Err(Error::InvalidKrawtchoukParams { n, q, ell: d });
    }
    check_range(d, n)?;

    let mut coeffs = vec![BigInt::one()];
    let multiply_linear = |coeffs: &mut Vec<BigInt>, c1: BigInt| {
        // multiply by (1 + c1 z)
        coeffs.push(BigInt::zero());
        for k in (1..coeffs.len()).rev() {
            let lower = coeffs[k - 1].clone();
            coeffs[k] += lower * &c1;
        }
    };
    for _ in 0..d {
        multiply_linear(&mut coeffs, BigInt::from(-1));
    }
    for _ in 0..(n - d) {
        multiply_linear(&mut coeffs, BigInt::from(q - 1));
    }
    debug_assert_eq!(coeffs.len(), n as usize + 1);
    Ok(coeffs)
}

/// Round trip through the inversion formula.
///
/// From the values f(0..n) it computes the expansion coefficients
/// f_i = q^{-n} sum_j f(j) K_j^n(i), then re-expands
/// f(x) = sum_j f_j K_j^n(x) at x = 0..n and returns the recovered values.
/// In exact rational arithmetic the recovery is the identity.
pub fn inversion_roundtrip(n: u32, q: u32, f: &[BigRational]) -> Result<Vec<BigRational>, Error> {
    if n == 0 || q < 2 {
        return Err(Error::InvalidKrawtchoukParams { n, q, ell: 0 });
    }
    let expected = n as usize + 1;
    if f.len() != expected {
        return Err(Error::LengthMismatch {
            got: f.len(),
            expected,
        });
    }

    // kraw[j][x] = K_j^n(x); the generating function yields one whole
    // degree column per argument in O(n^2)
    let columns: Vec<Vec<BigInt>> = (0..=n)
        .map(|x| gen_function_coeffs(n, q, x))
        .collect::<Result<_, _>>()?;
    let kraw = |j: usize, x: usize| &columns[x][j];
    let qn = BigRational::from_integer(int_pow(q, n));

    let coeffs: Vec<BigRational> = (0..=n as usize)
        .map(|i| {
            let sum: BigRational = f
                .iter()
                .enumerate()
                .map(|(j, fj)| fj * BigRational::from_integer(kraw(j, i).clone()))
                .sum();
            sum / &qn
        })
        .collect();

    Ok((0..=n as usize)
        .map(|x| {
            coeffs
                .iter()
                .enumerate()
                .map(|(j, cj)| cj * BigRational::from_integer(kraw(j, x).clone()))
                .sum()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn params(n: u32, q: u32, ell: u32) -> KrawtchoukParams {
        KrawtchoukParams::new(n, q, ell).unwrap()
    }

    #[test]
    fn eval_known_values() {
        assert_eq!(kraw_eval(&params(4, 2, 2), 2).unwrap(), big(-2));
        assert_eq!(kraw_eval(&params(3, 2, 1), 3).unwrap(), big(-3));
        assert_eq!(kraw_eval(&params(5, 3, 1), 0).unwrap(), big(10));
        for n in 1..=8 {
            for q in [2, 3, 4] {
                for x in 0..=n {
                    assert_eq!(kraw_eval(&params(n, q, 0), x).unwrap(), big(1));
                }
            }
        }
    }

    #[test]
    fn eval_endpoints_are_signed_binomials() {
        // K_l^{n,2}(0) = C(n,l) and K_l^{n,2}(n) = (-1)^l C(n,l)
        for n in 1..=12u32 {
            for ell in 0..=n {
                let p = params(n, 2, ell);
                let c = binomial(n, i64::from(ell));
                assert_eq!(kraw_eval(&p, 0).unwrap(), c);
                let signed = if ell % 2 == 0 { c.clone() } else { -c };
                assert_eq!(kraw_eval(&p, n).unwrap(), signed);
            }
        }
    }

    #[test]
    fn eval_rejects_out_of_lattice() {
        assert_eq!(
            kraw_eval(&params(4, 2, 2), 5),
            Err(Error::ArgOutOfRange { x: 5, n: 4 })
        );
        assert!(KrawtchoukParams::new(4, 1, 2).is_err());
        assert!(KrawtchoukParams::new(4, 2, 5).is_err());
        assert!(KrawtchoukParams::new(0, 2, 0).is_err());
    }

    #[test]
    fn orthogonality_examples() {
        assert_eq!(check_orthogonality(4, 2, 1, 2).unwrap(), big(0));
        assert_eq!(check_orthogonality(6, 2, 3, 3).unwrap(), big(0));
        assert_eq!(check_orthogonality(5, 3, 2, 2).unwrap(), big(0));
    }

    #[test]
    fn recurrence_examples() {
        let r = check_recurrences(6, 2, 3, 2).unwrap();
        assert_eq!(r.shifted, Some(big(0)));
        assert_eq!(r.same_argument, Some(big(0)));
        assert_eq!(r.order_reduction, Some(big(0)));

        // x = 0: the shifted form steps outside the lattice
        let r = check_recurrences(4, 2, 1, 0).unwrap();
        assert_eq!(r.shifted, None);
        assert_eq!(r.same_argument, Some(big(0)));
        assert_eq!(r.order_reduction, Some(big(0)));

        let r = check_recurrences(7, 4, 5, 3).unwrap();
        assert!(r.all_zero());
        assert!(r.shifted.is_some());

        // x = n: the reduced-length forms would need K^{n-1}(n)
        let r = check_recurrences(5, 2, 2, 5).unwrap();
        assert_eq!(r.shifted, Some(big(0)));
        assert_eq!(r.same_argument, None);
        assert_eq!(r.order_reduction, None);
    }

    #[test]
    fn recurrence_rejects_k_zero() {
        assert_eq!(
            check_recurrences(4, 2, 0, 1),
            Err(Error::OrderOutOfRange { k: 0, n: 4 })
        );
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(check_reciprocal(8, 2, 2, 4).unwrap(), big(0));
        assert_eq!(check_reciprocal(3, 2, 0, 0).unwrap(), big(0));
        assert_eq!(check_reciprocal(9, 3, 4, 7).unwrap(), big(0));
    }

    #[test]
    fn generating_function_examples() {
        let coeffs = gen_function_coeffs(4, 2, 2).unwrap();
        assert_eq!(coeffs, vec![big(1), big(0), big(-2), big(0), big(1)]);

        let coeffs = gen_function_coeffs(2, 2, 0).unwrap();
        assert_eq!(coeffs, vec![big(1), big(2), big(1)]);

        let coeffs = gen_function_coeffs(5, 3, 2).unwrap();
        for (k, c) in coeffs.iter().enumerate() {
            assert_eq!(c, &kraw_eval(&params(5, 3, k as u32), 2).unwrap());
        }
    }

    #[test]
    fn inversion_identity_vector() {
        let ones: Vec<BigRational> = (0..4).map(|_| BigRational::one()).collect();
        assert_eq!(inversion_roundtrip(3, 2, &ones).unwrap(), ones);
    }

    #[test]
    fn inversion_table_row() {
        // row K_2^4(x), x = 0..4
        let row: Vec<BigRational> = (0..=4)
            .map(|x| BigRational::from_integer(kraw_eval(&params(4, 2, 2), x).unwrap()))
            .collect();
        assert_eq!(inversion_roundtrip(4, 2, &row).unwrap(), row);
    }

    #[test]
    fn inversion_rejects_bad_length() {
        let short = vec![BigRational::one(); 3];
        assert_eq!(
            inversion_roundtrip(3, 2, &short),
            Err(Error::LengthMismatch {
                got: 3,
                expected: 4
            })
        );
    }
}
