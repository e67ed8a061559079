//! Exact Hilbert polynomials and Hilbert series of partial flag varieties
//! embedded by a dominant weight.
//!
//! For a simple algebraic group G of any type A-G and a dominant weight
//! lambda, the flag variety G/P_lambda sits inside P(L(lambda)) and its
//! Hilbert polynomial factors over the positive roots alpha as
//!
//!   HP(x) = prod (1 + x c(alpha)),   c(alpha) = (lambda, alpha)/(rho, alpha),
//!
//! with one nontrivial factor per root not orthogonal to lambda. The
//! Hilbert series is g(x)/(1 - x)^{d+1} where d = deg HP, and the
//! numerator g comes straight from the dimensions D_k = dim L(k lambda):
//!
//!   a_i = sum_{j=0}^{i} (-1)^j C(d+1, j) D_{i-j}.
//!
//! Everything is computed in exact arbitrary-precision arithmetic, and the
//! numerator is recomputed through independent routes (a recurrence,
//! truncated series division, and iterated differential operators) that
//! must agree before a result is trusted.
//!
//! ```
//! use flag_hilbert::dims::{c_ratios, flag_dimension, weyl_dim};
//! use flag_hilbert::rootsys::{DominantWeight, RootSystem};
//! use flag_hilbert::series::numerator_from_dims;
//!
//! let rs = RootSystem::new("A2".parse().unwrap());
//! let rho = DominantWeight::rho(2);
//! let c = c_ratios(&rs, &rho).unwrap();
//! let d = flag_dimension(&c);
//! let dims: Vec<_> = (0..=d as u64).map(|k| weyl_dim(&rs, &rho, k).unwrap()).collect();
//! let g = numerator_from_dims(&dims, d).unwrap();
//! assert_eq!(g.coefficients(), &[1.into(), 4.into(), 1.into(), 0.into()]);
//! assert_eq!(g.degree(), 6.into());
//! ```

pub mod cli;
pub mod dims;
pub mod error;
pub mod exact;
pub mod rootsys;
pub mod series;
pub mod typea;

pub use error::Error;
