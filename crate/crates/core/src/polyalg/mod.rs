//! Polynomial and series algebra over Q(i): univariate and multivariate
//! polynomials, truncated power series, affine-linear forms in the data
//! point, resultants, gcd and squarefree decomposition.

pub mod affine;
pub mod bivariate;
pub mod coeff;
pub mod mpoly;
pub mod ratfun;
pub mod resultant;
pub mod roots;
pub mod series;
pub mod univariate;

pub use affine::{restrict_to_line, AffineForm, AffineLine, QiAffineForm};
pub use bivariate::{BivariatePolynomial, CoordMode, QiBivariate};
pub use coeff::{CoeffField, FloatField, QiField};
pub use mpoly::{MPoly, VAR_U1, VAR_U2, VAR_X, VAR_Y};
pub use ratfun::RationalFunction;
pub use resultant::{discriminant, resultant, ResultantError};
pub use roots::{aberth_roots, gaussian_rational_roots, numeric_roots_of_exact};
pub use series::{OrdResult, TruncatedSeries};
pub use univariate::{QiPoly, UnivariatePolynomial};
