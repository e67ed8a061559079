//! The Hilbert series numerator: closed form, recurrence, and two
//! independent oracles that recompute it by entirely different routes.
//!
//! The Hilbert series of the embedding is g(x)/(1 - x)^{d+1} with
//! g(x) = sum_{i=0}^{d} a_i x^i, and the numerator coefficients have the
//! closed form
//!
//!   a_i = sum_{j=0}^{i} (-1)^j C(d+1, j) D_{i-j},   D_k = dim L(k lambda).
//!
//! The same numbers satisfy a triangular recurrence against the D_k, fall
//! out of truncated power-series division, and are produced by iterating
//! first-order differential operators; agreement of all four routes is the
//! correctness argument used throughout the test suite.

use crate::dims::{CRatios, HilbertPolynomial};
use crate::error::Error;
use crate::exact::{binomial, factorial, Integer, Polynomial, Rational};
use num_traits::{One, Zero};

/// Numerator g(x) of a Hilbert series with pole order d + 1.
///
/// Exactly d + 1 coefficients are stored, so trailing zeros are kept;
/// `a[0]` is always 1 because dim L(0) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesNumerator {
    a: Vec<Integer>,
}

impl SeriesNumerator {
    fn from_coeffs(a: Vec<Integer>) -> Self {
        assert!(!a.is_empty());
        assert!(a[0].is_one(), "numerator must have constant term 1");
        SeriesNumerator { a }
    }

    /// All d + 1 coefficients, trailing zeros included.
    pub fn coefficients(&self) -> &[Integer] {
        &self.a
    }

    /// Dimension d of the flag variety; the pole order is d + 1.
    pub fn d(&self) -> usize {
        self.a.len() - 1
    }

    /// Exponent of (1 - x) in the denominator.
    pub fn denom_exponent(&self) -> usize {
        self.a.len()
    }

    /// g(1) = sum of the coefficients: the degree of the embedded variety.
    pub fn degree(&self) -> Integer {
        self.a.iter().sum()
    }

    /// Coefficients with trailing zeros removed, for display.
    pub fn trimmed(&self) -> &[Integer] {
        let mut end = self.a.len();
        while end > 1 && self.a[end - 1].is_zero() {
            end -= 1;
        }
        &self.a[..end]
    }
}

fn check_dims(dims: &[Integer], d: usize) -> Result<(), Error> {
    if dims.len() != d + 1 {
        return Err(Error::BadLength {
            expected: d + 1,
            got: dims.len(),
        });
    }
    if !dims[0].is_one() {
        return Err(Error::BadD0 {
            got: dims[0].clone(),
        });
    }
    Ok(())
}

/// Numerator coefficients by the closed form
/// a_i = sum_{j=0}^{i} (-1)^j C(d+1, j) D_{i-j}.
///
/// `dims` must hold D_0 .. D_d with D_0 = 1.
pub fn numerator_from_dims(dims: &[Integer], d: usize) -> Result<SeriesNumerator, Error> {
    check_dims(dims, d)?;
    let mut a = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut acc = Integer::zero();
        for j in 0..=i {
            let term = binomial(d as u64 + 1, j as i64) * &dims[i - j];
            if j.is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        a.push(acc);
    }
    Ok(SeriesNumerator::from_coeffs(a))
}

/// Numerator coefficients by the triangular recurrence
/// a_i = D_i - sum_{j=1}^{i} C(d+j, d) a_{i-j}.
pub fn numerator_by_recurrence(dims: &[Integer], d: usize) -> Result<SeriesNumerator, Error> {
    check_dims(dims, d)?;
    let mut a: Vec<Integer> = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut acc = dims[i].clone();
        for j in 1..=i {
            acc -= binomial((d + j) as u64, d as i64) * &a[i - j];
        }
        a.push(acc);
    }
    Ok(SeriesNumerator::from_coeffs(a))
}

/// Reads dimension values back off the numerator:
/// p(n) = sum_j a_j C(d + n - j, d).
///
/// For a numerator built from D_0 .. D_d this recovers every D_n, which is
/// the identity making the series expansion correct.
pub fn recover_polynomial_values(num: &SeriesNumerator, n: u64) -> Integer {
    let d = num.d() as u64;
    let mut acc = Integer::zero();
    for (j, a) in num.coefficients().iter().enumerate() {
        let j = j as u64;
        if j > d + n {
            break;
        }
        acc += a * binomial(d + n - j, d as i64);
    }
    acc
}

/// A polynomial divided by a power of (1 - x), kept in lowest terms with
/// respect to (1 - x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Polynomial,
    pole_order: usize,
}

impl RationalFunction {
    /// Builds p(x)/(1-x)^m and cancels every common factor of (1 - x).
    pub fn new(numerator: Polynomial, pole_order: usize) -> Self {
        let mut numerator = numerator;
        let mut pole_order = pole_order;
        while pole_order > 0 {
            match numerator.div_one_minus_x() {
                Some(q) => {
                    numerator = q;
                    pole_order -= 1;
                }
                None => break,
            }
        }
        RationalFunction {
            numerator,
            pole_order,
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    /// Applies 1 + c x d/dx to p(x)/(1-x)^m.
    ///
    /// The quotient rule gives the new numerator
    /// p(1-x) + c x p'(x)(1-x) + c m x p(x) over (1-x)^{m+1}.
    fn apply_operator(&self, c: &Rational) -> RationalFunction {
        let one_minus_x = Polynomial::from_int_coeffs(&[1, -1]);
        let p = &self.numerator;
        let m = self.pole_order;
        let keep = p * &one_minus_x;
        let diff = (&p.derivative() * &one_minus_x).times_x().scaled(c);
        let pole = p
            .times_x()
            .scaled(&(c * Rational::from_integer(Integer::from(m))));
        RationalFunction::new(&(&keep + &diff) + &pole, m + 1)
    }
}

/// Oracle 1: numerator via truncated power-series division.
///
/// Multiplies the value series sum_n HP(n) x^n by (1 - x)^{d+1} out to
/// `depth` and checks that everything past degree d cancels, leaving no
/// room for a wrong numerator to slip through. Requires depth >= 2d + 2.
pub fn oracle_truncated_division(
    hp: &HilbertPolynomial,
    depth: usize,
) -> Result<SeriesNumerator, Error> {
    let d = hp.d();
    assert!(
        depth >= 2 * d + 2,
        "depth {depth} too small to certify a numerator of degree {d}"
    );
    let values: Vec<Integer> = (0..=depth as u64)
        .map(|n| hp.eval_integer(n))
        .collect::<Result<_, _>>()?;
    let mut coeffs = Vec::with_capacity(depth + 1);
    for i in 0..=depth {
        let mut acc = Integer::zero();
        for j in 0..=i.min(d + 1) {
            let term = binomial(d as u64 + 1, j as i64) * &values[i - j];
            if j.is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        coeffs.push(acc);
    }
    // Degrees d+1 .. depth-(d+1) are genuine series coefficients and must
    // vanish; closer to the cut-off the convolution is incomplete.
    for (i, c) in coeffs.iter().enumerate().take(depth - d).skip(d + 1) {
        if !c.is_zero() {
            return Err(Error::TailNonzero {
                index: i,
                value: c.clone(),
            });
        }
    }
    Ok(SeriesNumerator::from_coeffs(coeffs[..=d].to_vec()))
}

/// Oracle 2: numerator by iterated differential operators.
///
/// Starts from 1/(1-x) = sum x^n and applies 1 + c x d/dx once per nonzero
/// ratio c, which multiplies the series coefficients by (1 + c n); after
/// all d factors the result is sum HP(n) x^n written with pole order d + 1.
pub fn oracle_diff_operators(c: &CRatios) -> Result<SeriesNumerator, Error> {
    let mut f = RationalFunction::new(Polynomial::one(), 1);
    for value in c.values() {
        if !value.is_zero() {
            f = f.apply_operator(value);
        }
    }
    let d = c.nonzero_count();
    if f.pole_order() != d + 1 {
        return Err(Error::PoleOrderMismatch {
            expected: d + 1,
            got: f.pole_order(),
        });
    }
    assert!(
        f.numerator().degree() <= Some(d),
        "numerator degree exceeds pole order"
    );
    let a = (0..=d)
        .map(|i| {
            let coeff = f.numerator().coeff(i);
            assert!(coeff.is_integer(), "numerator coefficients must be integers");
            coeff.to_integer()
        })
        .collect();
    Ok(SeriesNumerator::from_coeffs(a))
}

/// Checks the alternating binomial identity that makes the closed form and
/// the recurrence agree:
///
///   sum_{j=0}^{l} (-1)^{l-j} C(d+j, d) C(d+1, l-j) = 0   for 1 <= l <= d.
pub fn binomial_identity_check(d: u64, l: u64) -> bool {
    assert!((1..=d).contains(&l), "identity requires 1 <= l <= d");
    let mut acc = Integer::zero();
    for j in 0..=l {
        let term = binomial(d + j, d as i64) * binomial(d + 1, (l - j) as i64);
        if (l - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.is_zero()
}

/// Checks strict log-concavity of the Hilbert polynomial coefficients:
/// h_i^2 > h_{i-1} h_{i+1} for 0 < i < d. Vacuously true for d <= 1.
pub fn log_concavity_check(hp: &HilbertPolynomial) -> bool {
    let h = hp.poly().coeffs();
    (1..hp.d()).all(|i| &h[i] * &h[i] > &h[i - 1] * &h[i + 1])
}

/// Checks a_1 = D_1 - (d + 1), the first nontrivial numerator coefficient.
///
/// Requires d >= 1; for d = 0 there is no a_1 to check.
pub fn a1_corollary_check(num: &SeriesNumerator, dim1: &Integer) -> bool {
    assert!(num.d() >= 1, "a_1 check requires d >= 1");
    num.coefficients()[1] == dim1 - Integer::from(num.d() as u64 + 1)
}

/// Checks degree(X) = d! times the leading coefficient of HP: the sum of
/// the numerator coefficients against the polynomial's top term.
pub fn degree_identity_check(num: &SeriesNumerator, hp: &HilbertPolynomial) -> bool {
    let lhs = Rational::from_integer(num.degree());
    let rhs = Rational::from_integer(factorial(hp.d() as u64)) * hp.leading_coefficient();
    num.d() == hp.d() && lhs == rhs
}
