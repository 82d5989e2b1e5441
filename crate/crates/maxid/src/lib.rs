//! Hierarchical max-infinitely divisible spatial processes for fields of
//! block extrema, such as annual first-arrival dates observed over a region.
//!
//! The model represents a spatial field of (negated) block minima as
//!
//! ```text
//! Z(s) = eps(s) * Y(s),      Y(s) = { sum_l A_l K_l(s)^(1/alpha) }^alpha
//! ```
//!
//! where the `K_l` are sum-to-one spatial basis functions built from
//! log-Gaussian processes, the scaling coefficients `A_l` follow an
//! exponentially tilted positive-stable (Hougaard) law, and `eps(s)` is an
//! iid Frechet(1/alpha) multiplicative nugget. Marginal distributions are
//! mapped to generalized extreme value (GEV) surfaces whose location and
//! log-scale depend on spatial and climate covariates.
//!
//! The crate provides
//!
//! - exact densities, samplers and transforms for the positive-stable,
//!   Hougaard, GEV and Frechet families ([`dist`]),
//! - Gaussian-process machinery and the normalized-exponential basis
//!   construction ([`gp`], [`basis`]),
//! - forward simulation and the closed-form marginal law ([`process`]),
//! - Bayesian MCMC fitting with cluster block updates and
//!   conditioning-by-Kriging ([`mcmc`]),
//! - marginal GEV maximum likelihood and predictive-score model selection
//!   ([`select`]),
//! - extraction of first-arrival tables from raw sighting records ([`data`]),
//! - posterior predictive draws, projections and summary maps ([`predict`]),
//! - a batch command line front end ([`cli`], see the `maxid` binary).
//!
//! Start with the runnable programs under `examples/`; each one exercises a
//! major capability end to end on a small synthetic data set.

pub mod basis;
pub mod cli;
pub mod config;
pub mod data;
pub mod dist;
pub mod error;
pub mod gp;
pub mod mcmc;
pub mod optim;
pub mod plot;
pub mod predict;
pub mod process;
pub mod quad;
pub mod select;
pub mod sites;
pub mod special;

pub use error::{Error, Result};
