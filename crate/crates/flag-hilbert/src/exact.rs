//! Exact scalars, combinatorial primitives, and dense rational polynomials.
//!
//! `Integer` and `Rational` are the `num` bignum types: no value in this
//! crate is ever rounded, and every `Rational` is kept in lowest terms with
//! a positive denominator by construction.

use num_traits::{One, Zero};
use std::ops::{Add, Mul};

/// Exact arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Binomial coefficient C(n, k), defined as 0 for k < 0 or k > n.
///
/// The out-of-range convention keeps alternating-sum formulas uniform near
/// their boundaries, so callers never special-case small indices.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n {
        acc *= Integer::from(i);
    }
    acc
}

/// Falling factorial x(x-1)...(x-m+1); the empty product (m = 0) is 1.
pub fn falling_factorial(x: &Integer, m: u64) -> Integer {
    let mut acc = Integer::one();
    for i in 0..m {
        acc *= x - Integer::from(i);
    }
    acc
}

/// Dense univariate polynomial over [`Rational`]; index equals degree.
///
/// The zero polynomial is an empty coefficient list, and a nonzero
/// polynomial always ends with a nonzero coefficient, so equality of
/// polynomials is equality of coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing
    /// zeros to keep the representation canonical.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![Rational::one()],
        }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(Integer::from(c)))
                .collect(),
        )
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Low-to-high coefficients with no trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Evaluates at `t` by Horner's rule.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(Integer::from(i)))
            .collect();
        Polynomial::new(coeffs)
    }

    /// The product c * self.
    pub fn scaled(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The product x * self.
    pub fn times_x(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Exact quotient self / (1 - x), or `None` if (1 - x) does not divide.
    ///
    /// Division by (1 - x) is a running prefix sum of the coefficients; the
    /// quotient is exact precisely when the full sum, the value at x = 1,
    /// vanishes.
    pub fn div_one_minus_x(&self) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let mut run = Rational::zero();
        let mut quotient = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            run += c;
            if i + 1 < self.coeffs.len() {
                quotient.push(run.clone());
            }
        }
        if run.is_zero() {
            Some(Polynomial::new(quotient))
        } else {
            None
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}
