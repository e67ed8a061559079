//! Dimension data of an embedded flag variety: the ratios c_lambda(alpha),
//! the dimensions dim L(k lambda), and the Hilbert polynomial.
//!
//! For a dominant weight lambda the Weyl dimension formula factors as
//!
//!   dim L(k lambda) = prod_alpha (1 + k c_lambda(alpha)),
//!   c_lambda(alpha) = (lambda, alpha) / (rho, alpha),
//!
//! over the positive roots alpha. Replacing k by a variable x turns the
//! product into the Hilbert polynomial of G/P embedded by lambda, whose
//! degree d counts the roots with c_lambda(alpha) != 0.

use crate::error::Error;
use crate::exact::{Integer, Polynomial, Rational};
use crate::rootsys::{DominantWeight, RootSystem};
use num_traits::{One, Signed, Zero};

/// The ratios c_lambda(alpha) over all positive roots, in root order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CRatios {
    values: Vec<Rational>,
}

impl CRatios {
    /// One value per positive root, in the root system's order.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Number of roots with nonzero ratio; the dimension d of G/P.
    pub fn nonzero_count(&self) -> usize {
        self.values.iter().filter(|v| !v.is_zero()).count()
    }
}

/// Computes c_lambda(alpha) = (lambda, alpha)/(rho, alpha) for every
/// positive root.
pub fn c_ratios(rs: &RootSystem, weight: &DominantWeight) -> Result<CRatios, Error> {
    let mut values = Vec::with_capacity(rs.positive_roots().len());
    for root in rs.positive_roots() {
        let num = rs.pairing(weight, root)?;
        let den = rs.rho_pairing(root);
        let v = num / den;
        assert!(!v.is_negative(), "c ratios of a dominant weight are >= 0");
        values.push(v);
    }
    Ok(CRatios { values })
}

/// Dimension of the flag variety G/P_lambda: the number of positive roots
/// not orthogonal to lambda.
pub fn flag_dimension(c: &CRatios) -> usize {
    c.nonzero_count()
}

/// dim L(k lambda) by the Weyl dimension formula, as an exact integer.
///
/// The product of rationals must collapse to an integer; a fractional
/// result cannot happen for consistent inputs and is reported as an error
/// rather than silently truncated.
pub fn weyl_dim(rs: &RootSystem, weight: &DominantWeight, k: u64) -> Result<Integer, Error> {
    let k = Rational::from_integer(Integer::from(k));
    let mut prod = Rational::one();
    for root in rs.positive_roots() {
        let num = rs.pairing(weight, root)?;
        let den = rs.rho_pairing(root);
        prod *= Rational::one() + &k * num / den;
    }
    if prod.is_integer() {
        Ok(prod.to_integer())
    } else {
        Err(Error::NonIntegerProduct { value: prod })
    }
}

/// The Hilbert polynomial together with the dimension d of G/P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    poly: Polynomial,
    d: usize,
}

impl HilbertPolynomial {
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// Degree of the polynomial and dimension of the flag variety.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Leading coefficient, the product of the nonzero c ratios.
    pub fn leading_coefficient(&self) -> Rational {
        self.poly.coeff(self.d)
    }

    /// Evaluates at a nonnegative integer; the value must be an integer.
    pub fn eval_integer(&self, n: u64) -> Result<Integer, Error> {
        let v = self.poly.eval(&Rational::from_integer(Integer::from(n)));
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::NonIntegerProduct { value: v })
        }
    }
}

/// Expands HP(x) = prod over nonzero ratios of (1 + c x).
///
/// Skipping the zero ratios changes nothing in the product and makes the
/// degree equal to d by construction.
pub fn hilbert_polynomial(c: &CRatios) -> HilbertPolynomial {
    let mut poly = Polynomial::one();
    for v in c.values() {
        if !v.is_zero() {
            poly = &poly * &Polynomial::new(vec![Rational::one(), v.clone()]);
        }
    }
    let d = c.nonzero_count();
    assert_eq!(poly.degree(), Some(d), "HP degree must equal d");
    assert_eq!(poly.coeff(0), Rational::one(), "HP constant term must be 1");
    assert!(
        poly.coeffs().iter().all(Signed::is_positive),
        "HP coefficients must be positive"
    );
    HilbertPolynomial { poly, d }
}
