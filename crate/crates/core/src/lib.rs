//! Exact umbral calculus over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! * [`rational`], [`poly`] and [`series`] hold the exact scalar, dense
//!   polynomial and truncated power series types.
//! * [`umbral`] implements linear functionals, operators, Sheffer sequences,
//!   connection coefficients and umbral composition.
//! * [`families`] provides the classical polynomial families (Laguerre,
//!   Bernoulli, Euler, Frobenius-Euler, falling factorials), Stirling numbers
//!   and the moment-based Laguerre expansion used as ground truth.
//! * [`audit`] registers identities relating those families and checks them
//!   coefficient by coefficient.

pub mod audit;
pub mod error;
pub mod families;
pub mod poly;
pub mod rational;
pub mod series;
pub mod umbral;

pub use error::{Error, Result};
pub use poly::Polynomial;
pub use rational::Rational;
pub use series::PowerSeries;
