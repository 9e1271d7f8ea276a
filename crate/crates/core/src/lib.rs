//! Bounds on four lattice constants — Hermite's γ_n, the KZ constant α_n,
//! Schnorr's β_k and Rankin's γ_{2k,k} — together with a verification engine
//! that re-checks the finite numerical obligations inside the proofs, a
//! lattice-reduction engine (QR, LLL, SVP enumeration, KZ) for empirical
//! validation, and deterministic figure-data generation.
//!
//! Layout:
//! - [`specfun`]: log-Gamma, half-integer Gamma, digamma, integer zeta, and
//!   the precision policy that governs how claims are certified.
//! - [`highprec`]: fixed-point interval arithmetic on big integers, the
//!   engine behind the high-precision certification mode.
//! - [`hermite`], [`kzconst`], [`schnorr_rankin`]: the bound catalogs.
//! - [`proofcheck`]: named, machine-checked claims with pass/fail margins.
//! - [`reduction`]: basis matrices, QR, size reduction, LLL, exact SVP
//!   enumeration, KZ reduction, and seeded empirical experiments.
//! - [`figures`]: the five ratio-curve data series as stable CSV tables.

pub mod error;
pub mod figures;
pub mod hermite;
pub mod highprec;
pub mod kzconst;
pub mod proofcheck;
pub mod reduction;
pub mod schnorr_rankin;
pub mod specfun;

pub use error::{Error, Result};
