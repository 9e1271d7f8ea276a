//! Hermite constant γ_n: the exactly known values and a family of upper
//! bounds, each tagged with its validity range.
//!
//! γ_n = sup over n-dimensional lattices of λ(L)²/det(L)^{2/n}, where λ(L)
//! is the length of a shortest nonzero vector. Exact values are known for
//! n ≤ 8 and n = 24; everything else is bracketed by bounds. All bounds
//! here are nondecreasing in n on their validity ranges, and every valid
//! bound dominates the exact value where one is known.

use crate::error::{Error, Result};
use crate::specfun::{gamma_half, ln_gamma, PrecisionPolicy};
use serde::Serialize;

/// Whether a [`BoundValue`] is an exact constant, an upper bound, or a
/// lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    Exact,
    Upper,
    Lower,
}

/// One evaluated bound: the value, its natural log (tracked separately so
/// it stays meaningful when `value` overflows f64), the bound kind, the
/// method name, and the parameter range on which the method is valid.
#[derive(Clone, Debug, Serialize)]
pub struct BoundValue {
    pub value: f64,
    pub ln_value: f64,
    pub kind: BoundKind,
    pub method: &'static str,
    pub valid_from: i64,
    pub valid_to: Option<i64>,
}

/// Linear upper-bound families for γ_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LinearMethod {
    /// 2n/3, valid for n ≥ 2.
    Lls,
    /// 1 + n/4, valid for n ≥ 1.
    Nv,
    /// (n + 6)/7, valid for n ≥ 3 ((2+6)/7 would undercut γ_2).
    Neu,
    /// n/8 + 6/5, valid for n ≥ 1.
    Wc18,
    /// n/8.5 + 2, valid for n ≥ 1.
    New,
}

impl LinearMethod {
    pub const ALL: [LinearMethod; 5] = [
        LinearMethod::Lls,
        LinearMethod::Nv,
        LinearMethod::Neu,
        LinearMethod::Wc18,
        LinearMethod::New,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LinearMethod::Lls => "lls",
            LinearMethod::Nv => "nv",
            LinearMethod::Neu => "neu",
            LinearMethod::Wc18 => "wc18",
            LinearMethod::New => "new",
        }
    }

    pub fn valid_from(&self) -> u64 {
        match self {
            LinearMethod::Lls => 2,
            LinearMethod::Neu => 3,
            _ => 1,
        }
    }
}

/// The nine dimensions with exactly known γ_n.
pub const EXACT_DIMENSIONS: [u64; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 24];

/// Exact γ_n for n ∈ {1,…,8, 24}; `None` elsewhere. Values are the
/// correctly rounded f64 of the closed forms; `ln_value` is computed from
/// the closed form directly.
pub fn exact_hermite(n: u64) -> Option<BoundValue> {
    let ln2 = std::f64::consts::LN_2;
    let ln3 = 3.0f64.ln();
    let (value, ln_value) = match n {
        1 => (1.0, 0.0),
        2 => (1.154_700_538_379_251_5, ln2 - 0.5 * ln3), // 2/√3
        3 => (1.259_921_049_894_873_2, ln2 / 3.0),       // 2^{1/3}
        4 => (1.414_213_562_373_095_1, 0.5 * ln2),       // √2
        5 => (1.515_716_566_510_398, 0.6 * ln2),         // 8^{1/5}
        6 => (1.665_366_355_311_208_6, ln2 - ln3 / 6.0), // (64/3)^{1/6}
        7 => (1.811_447_328_527_813_4, 6.0 * ln2 / 7.0), // 64^{1/7}
        8 => (2.0, ln2),
        24 => (4.0, 2.0 * ln2),
        _ => return None,
    };
    Some(BoundValue {
        value,
        ln_value,
        kind: BoundKind::Exact,
        method: "exact",
        valid_from: n as i64,
        valid_to: Some(n as i64),
    })
}

/// Blichfeldt's bound (2/π)·Γ(2 + n/2)^{2/n} for n ≥ 1. The Gamma value is
/// exact (half-integer recurrence) up to n = 200, Stirling beyond.
pub fn blichfeldt_upper(n: u64) -> Result<BoundValue> {
    if n == 0 {
        return Err(Error::Domain("dimension must be ≥ 1".into()));
    }
    let nf = n as f64;
    let two_over_pi = 2.0 / std::f64::consts::PI;
    let (value, ln_value) = if n <= 200 {
        let g = gamma_half(n + 4)?;
        let value = two_over_pi * g.powf(2.0 / nf);
        (value, value.ln())
    } else {
        let lg = ln_gamma(2.0 + nf / 2.0, &PrecisionPolicy::fast64())?;
        let ln_value = two_over_pi.ln() + 2.0 / nf * lg.value;
        (ln_value.exp(), ln_value)
    };
    Ok(BoundValue {
        value,
        ln_value,
        kind: BoundKind::Upper,
        method: "blichfeldt",
        valid_from: 1,
        valid_to: None,
    })
}

/// Linear upper bound on γ_n by the chosen method. Errors when n is below
/// the method's validity threshold.
pub fn linear_upper(n: u64, method: LinearMethod) -> Result<BoundValue> {
    let from = method.valid_from();
    if n < from {
        return Err(Error::Validity {
            method: method.name(),
            param: "n",
            value: n as i64,
            valid_from: from as i64,
        });
    }
    let nf = n as f64;
    let value = match method {
        LinearMethod::Lls => 2.0 * nf / 3.0,
        LinearMethod::Nv => 1.0 + nf / 4.0,
        LinearMethod::Neu => (nf + 6.0) / 7.0,
        LinearMethod::Wc18 => nf / 8.0 + 1.2,
        LinearMethod::New => nf / 8.5 + 2.0,
    };
    Ok(BoundValue {
        value,
        ln_value: value.ln(),
        kind: BoundKind::Upper,
        method: method.name(),
        valid_from: from as i64,
        valid_to: None,
    })
}

/// The sharpest available bound: the exact value when n is in the table
/// (exact wins even if a bound is numerically smaller through rounding),
/// otherwise the minimum over Blichfeldt and all linear bounds valid at n.
pub fn best_upper(n: u64) -> Result<BoundValue> {
    if let Some(exact) = exact_hermite(n) {
        return Ok(exact);
    }
    let mut best = blichfeldt_upper(n)?;
    for method in LinearMethod::ALL {
        if n < method.valid_from() {
            continue;
        }
        let b = linear_upper(n, method)?;
        if b.ln_value < best.ln_value {
            best = b;
        }
    }
    Ok(best)
}
