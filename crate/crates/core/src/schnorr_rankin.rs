//! Bounds on Schnorr's constant β_k and Rankin's constant γ_{2k,k}, plus
//! the handful of exactly known Rankin values.
//!
//! β_k measures the worst-case drop between the first and second half of
//! the R-factor diagonal over 2k-dimensional bases; γ_{2k,k} is the Rankin
//! invariant it controls via γ_{2k,k} ≤ β_k^{k/2}. Everything here is
//! evaluated in log space first: several of these bounds overflow f64 near
//! k ≈ 700 while their logarithms stay small.

use crate::error::{Error, Result};
use crate::hermite::{BoundKind, BoundValue};
use serde::Serialize;

/// Upper-bound families for β_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SchnorrUpperMethod {
    /// 4k², valid for k ≥ 1.
    Schnorr87,
    /// (1 + k/2)^{2ln2 + 1/k}, valid for k ≥ 1.
    Old,
    /// (2^{3ln2}/17^{2ln2})·((4k-1)/17)^{1/(2k-1)}·e^{18/k}·(k-1/2)^{2ln2},
    /// valid for k ≥ 5.
    New,
    /// 0.08698·e^{18/k}·(k-1/2)^{2ln2}, valid for k ≥ 5.
    Simple,
}

impl SchnorrUpperMethod {
    pub const ALL: [SchnorrUpperMethod; 4] = [
        SchnorrUpperMethod::Schnorr87,
        SchnorrUpperMethod::Old,
        SchnorrUpperMethod::New,
        SchnorrUpperMethod::Simple,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SchnorrUpperMethod::Schnorr87 => "schnorr87",
            SchnorrUpperMethod::Old => "old",
            SchnorrUpperMethod::New => "new",
            SchnorrUpperMethod::Simple => "simple",
        }
    }

    pub fn valid_from(&self) -> u64 {
        match self {
            SchnorrUpperMethod::Schnorr87 | SchnorrUpperMethod::Old => 1,
            SchnorrUpperMethod::New | SchnorrUpperMethod::Simple => 5,
        }
    }
}

/// Lower-bound families for β_k, both valid for k ≥ 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SchnorrLowerMethod {
    /// k/12.
    Old,
    /// (4/(π²√k))^{2/k}·2k/(π e^{3/2}).
    New,
}

impl SchnorrLowerMethod {
    pub fn name(&self) -> &'static str {
        match self {
            SchnorrLowerMethod::Old => "old",
            SchnorrLowerMethod::New => "new",
        }
    }
}

/// Bound families for Rankin's constant γ_{2k,k}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RankinMethod {
    /// (k/12)^{k/2}, valid for k ≥ 2.
    OldLower,
    /// (1 + k/2)^{k·ln2 + 1/2}, valid for k ≥ 2.
    OldUpper,
    /// (4/(π²√k))·(2k/(π e^{3/2}))^{k/2}, valid for k ≥ 5.
    NewLower,
    /// e⁹·0.0833^{k/2}·((4k-1)/17)^{k/(4k-2)}·(k-1/2)^{k·ln2}, valid for
    /// k ≥ 5.
    NewUpper,
}

impl RankinMethod {
    pub fn name(&self) -> &'static str {
        match self {
            RankinMethod::OldLower => "old_lower",
            RankinMethod::OldUpper => "old_upper",
            RankinMethod::NewLower => "new_lower",
            RankinMethod::NewUpper => "new_upper",
        }
    }

    pub fn valid_from(&self) -> u64 {
        match self {
            RankinMethod::OldLower | RankinMethod::OldUpper => 2,
            RankinMethod::NewLower | RankinMethod::NewUpper => 5,
        }
    }

    pub fn kind(&self) -> BoundKind {
        match self {
            RankinMethod::OldLower | RankinMethod::NewLower => BoundKind::Lower,
            RankinMethod::OldUpper | RankinMethod::NewUpper => BoundKind::Upper,
        }
    }
}

fn bound(ln_value: f64, kind: BoundKind, method: &'static str, valid_from: u64) -> BoundValue {
    BoundValue {
        value: ln_value.exp(),
        ln_value,
        kind,
        method,
        valid_from: valid_from as i64,
        valid_to: None,
    }
}

/// ln of the leading constant 2^{3ln2}/17^{2ln2} ≈ 0.08321658.
fn ln_con1() -> f64 {
    let ln2 = std::f64::consts::LN_2;
    ln2 * (3.0 * ln2 - 2.0 * 17.0f64.ln())
}

/// The small-k table: β_1 = 4/3 exactly; β_2, β_3, β_4 only have the upper
/// estimates 1.59, 1.91, 2.25.
pub fn schnorr_small(k: u64) -> Option<BoundValue> {
    let (value, kind) = match k {
        1 => (4.0 / 3.0, BoundKind::Exact),
        2 => (1.59, BoundKind::Upper),
        3 => (1.91, BoundKind::Upper),
        4 => (2.25, BoundKind::Upper),
        _ => return None,
    };
    Some(BoundValue {
        value,
        ln_value: value.ln(),
        kind,
        method: "table",
        valid_from: k as i64,
        valid_to: Some(k as i64),
    })
}

/// Upper bound on β_k by the chosen method.
pub fn schnorr_upper(k: u64, method: SchnorrUpperMethod) -> Result<BoundValue> {
    let from = method.valid_from();
    if k < from {
        return Err(Error::Validity {
            method: method.name(),
            param: "k",
            value: k as i64,
            valid_from: from as i64,
        });
    }
    let kf = k as f64;
    let ln2 = std::f64::consts::LN_2;
    let ln_value = match method {
        SchnorrUpperMethod::Schnorr87 => 4.0f64.ln() + 2.0 * kf.ln(),
        SchnorrUpperMethod::Old => (2.0 * ln2 + 1.0 / kf) * (1.0 + kf / 2.0).ln(),
        SchnorrUpperMethod::New => {
            ln_con1()
                + ((4.0 * kf - 1.0) / 17.0).ln() / (2.0 * kf - 1.0)
                + 18.0 / kf
                + 2.0 * ln2 * (kf - 0.5).ln()
        }
        SchnorrUpperMethod::Simple => {
            0.08698f64.ln() + 18.0 / kf + 2.0 * ln2 * (kf - 0.5).ln()
        }
    };
    Ok(bound(ln_value, BoundKind::Upper, method.name(), from))
}

/// Lower bound on β_k for k ≥ 2.
pub fn schnorr_lower(k: u64, method: SchnorrLowerMethod) -> Result<BoundValue> {
    if k < 2 {
        return Err(Error::Validity {
            method: method.name(),
            param: "k",
            value: k as i64,
            valid_from: 2,
        });
    }
    let ln_value = match method {
        SchnorrLowerMethod::Old => (k as f64 / 12.0).ln(),
        SchnorrLowerMethod::New => schnorr_lower_new_ln(k as f64),
    };
    Ok(bound(ln_value, BoundKind::Lower, method.name(), 2))
}

/// ln of (4/(π²√k))^{2/k}·2k/(π e^{3/2}) without the k ≥ 2 gate; the
/// figure grids evaluate the expression down to k = 1.
pub(crate) fn schnorr_lower_new_ln(kf: f64) -> f64 {
    let pi = std::f64::consts::PI;
    (2.0 / kf) * (4.0 / (pi * pi * kf.sqrt())).ln() + (2.0 * kf / (pi * 1.5f64.exp())).ln()
}

/// Tightest available upper bound on β_k: the small-k table when k ≤ 4,
/// otherwise the minimum over every closed-form method valid at k.
pub fn schnorr_best_upper(k: u64) -> Result<BoundValue> {
    if k == 0 {
        return Err(Error::Domain("k must be ≥ 1".into()));
    }
    if let Some(table) = schnorr_small(k) {
        return Ok(table);
    }
    let mut best: Option<BoundValue> = None;
    for method in SchnorrUpperMethod::ALL {
        if k < method.valid_from() {
            continue;
        }
        let b = schnorr_upper(k, method)?;
        if best.as_ref().map_or(true, |cur| b.ln_value < cur.ln_value) {
            best = Some(b);
        }
    }
    Ok(best.expect("schnorr87 and old are valid for every k ≥ 1"))
}

/// Exact Rankin constants γ_{n,ℓ}: only six values are known.
pub fn rankin_exact(n: u64, ell: u64) -> Option<BoundValue> {
    let value = match (n, ell) {
        (1, 1) => 1.0,
        (4, 2) => 1.5,
        (6, 2) => 2.080_083_823_051_904, // 3^{2/3}
        (8, 2) => 3.0,
        (8, 3) => 4.0,
        (8, 4) => 4.0,
        _ => return None,
    };
    Some(BoundValue {
        value,
        ln_value: value.ln(),
        kind: BoundKind::Exact,
        method: "exact",
        valid_from: n as i64,
        valid_to: Some(n as i64),
    })
}

/// Bound on γ_{2k,k} by the chosen method, evaluated in log space.
pub fn rankin_bounds(k: u64, method: RankinMethod) -> Result<BoundValue> {
    let from = method.valid_from();
    if k < from {
        return Err(Error::Validity {
            method: method.name(),
            param: "k",
            value: k as i64,
            valid_from: from as i64,
        });
    }
    let kf = k as f64;
    let ln2 = std::f64::consts::LN_2;
    let pi = std::f64::consts::PI;
    let ln_value = match method {
        RankinMethod::OldLower => (kf / 2.0) * (kf / 12.0).ln(),
        RankinMethod::OldUpper => (kf * ln2 + 0.5) * (1.0 + kf / 2.0).ln(),
        RankinMethod::NewLower => {
            (4.0 / (pi * pi * kf.sqrt())).ln() + (kf / 2.0) * (2.0 * kf / (pi * 1.5f64.exp())).ln()
        }
        RankinMethod::NewUpper => {
            9.0 + (kf / 2.0) * 0.0833f64.ln()
                + (kf / (4.0 * kf - 2.0)) * ((4.0 * kf - 1.0) / 17.0).ln()
                + kf * ln2 * (kf - 0.5).ln()
        }
    };
    Ok(bound(ln_value, method.kind(), method.name(), from))
}

/// γ_{2k,k} ≤ β_k^{k/2} with the sharp β bound: (k/2)·ln(schnorr new).
/// Slightly tighter than `new_upper`, which rounds the leading constant up
/// to 0.0833 per factor.
pub fn rankin_upper_via_beta(k: u64) -> Result<BoundValue> {
    if k < 5 {
        return Err(Error::Validity {
            method: "via_beta",
            param: "k",
            value: k as i64,
            valid_from: 5,
        });
    }
    let beta = schnorr_upper(k, SchnorrUpperMethod::New)?;
    Ok(bound(
        (k as f64 / 2.0) * beta.ln_value,
        BoundKind::Upper,
        "via_beta",
        5,
    ))
}

/// The known bracket 4/√3 ≤ γ_{6,3} ≤ √6 — a bound pair, not an exact
/// value.
pub fn rankin_63_bounds() -> (BoundValue, BoundValue) {
    let lower = 2.309_401_076_758_503; // 4/√3
    let upper = 2.449_489_742_783_178; // √6
    (
        BoundValue {
            value: lower,
            ln_value: lower.ln(),
            kind: BoundKind::Lower,
            method: "known_63",
            valid_from: 6,
            valid_to: Some(6),
        },
        BoundValue {
            value: upper,
            ln_value: upper.ln(),
            kind: BoundKind::Upper,
            method: "known_63",
            valid_from: 6,
            valid_to: Some(6),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let b1 = schnorr_small(1).unwrap();
        assert_eq!(b1.kind, BoundKind::Exact);
        assert!((b1.value - 4.0 / 3.0).abs() < 1e-15);
        for (k, want) in [(2, 1.59), (3, 1.91), (4, 2.25)] {
            let b = schnorr_small(k).unwrap();
            assert_eq!(b.kind, BoundKind::Upper, "k={k}");
            assert_eq!(b.value, want);
        }
        assert!(schnorr_small(5).is_none());
        assert!(schnorr_small(0).is_none());
    }

    #[test]
    fn schnorr87_and_old_values() {
        assert!((schnorr_upper(1, SchnorrUpperMethod::Schnorr87).unwrap().value - 4.0).abs() < 1e-14);
        assert!((schnorr_upper(3, SchnorrUpperMethod::Schnorr87).unwrap().value - 36.0).abs() < 1e-12);
        // old at k=2: 2^{2ln2 + 1/2}.
        let b = schnorr_upper(2, SchnorrUpperMethod::Old).unwrap();
        let want = 2.0f64.powf(2.0 * std::f64::consts::LN_2 + 0.5);
        assert!((b.value - want).abs() < 1e-13);
    }

    #[test]
    fn new_leading_constant_brackets() {
        // 2^{3ln2}/17^{2ln2} = 0.0832165825965…: strictly between
        // 0.0832165 and 0.0832166 (slightly above the rounded-down
        // 0.083216 sometimes quoted).
        let c = ln_con1().exp();
        assert!(c > 0.0832165 && c < 0.0832166, "c={c}");
        assert!(c > 0.083216);
        assert!(c < 0.0833);
    }

    #[test]
    fn validity_ranges_enforced() {
        assert!(schnorr_upper(4, SchnorrUpperMethod::New).is_err());
        assert!(schnorr_upper(4, SchnorrUpperMethod::Simple).is_err());
        assert!(schnorr_upper(5, SchnorrUpperMethod::New).is_ok());
        assert!(schnorr_lower(1, SchnorrLowerMethod::Old).is_err());
        assert!(schnorr_lower(2, SchnorrLowerMethod::New).is_ok());
        assert!(rankin_bounds(1, RankinMethod::OldLower).is_err());
        assert!(rankin_bounds(4, RankinMethod::NewUpper).is_err());
        assert!(rankin_bounds(5, RankinMethod::NewUpper).is_ok());
        assert!(rankin_upper_via_beta(4).is_err());
    }

    #[test]
    fn upper_crossover_at_nine() {
        // The new upper bound overtakes the old one exactly at k = 9; below
        // that the old bound is smaller.
        for k in 5..=1000u64 {
            let new = schnorr_upper(k, SchnorrUpperMethod::New).unwrap().ln_value;
            let old = schnorr_upper(k, SchnorrUpperMethod::Old).unwrap().ln_value;
            assert_eq!(new < old, k >= 9, "k={k}");
        }
    }

    #[test]
    fn improvement_factor_for_large_k() {
        // new/old settles in (0.2, 0.3) for k ≥ 40: roughly a 4× gain.
        for k in 40..=1000u64 {
            let r = (schnorr_upper(k, SchnorrUpperMethod::New).unwrap().ln_value
                - schnorr_upper(k, SchnorrUpperMethod::Old).unwrap().ln_value)
                .exp();
            assert!(r > 0.2 && r < 0.3, "k={k} r={r}");
        }
    }

    #[test]
    fn best_upper_selects_table_then_minimum() {
        // k ≤ 4 comes straight from the table.
        for k in 1..=4u64 {
            let best = schnorr_best_upper(k).unwrap();
            assert_eq!(best.method, "table");
            assert_eq!(best.value, schnorr_small(k).unwrap().value);
        }
        // Above the table the winner flips from `old` to `new` at k = 9.
        assert_eq!(schnorr_best_upper(5).unwrap().method, "old");
        assert_eq!(schnorr_best_upper(8).unwrap().method, "old");
        assert_eq!(schnorr_best_upper(9).unwrap().method, "new");
        for k in 5..=200u64 {
            let best = schnorr_best_upper(k).unwrap().ln_value;
            for m in SchnorrUpperMethod::ALL {
                if k >= m.valid_from() {
                    assert!(best <= schnorr_upper(k, m).unwrap().ln_value + 1e-15, "k={k}");
                }
            }
        }
        assert!(schnorr_best_upper(0).is_err());
    }

    #[test]
    fn simple_bound_relaxes_new() {
        for k in 5..=1000u64 {
            let new = schnorr_upper(k, SchnorrUpperMethod::New).unwrap().ln_value;
            let simple = schnorr_upper(k, SchnorrUpperMethod::Simple).unwrap().ln_value;
            let r = (simple - new).exp();
            assert!(r >= 1.0000170, "k={k} r={r}");
            assert!(r <= 1.0423731, "k={k} r={r}");
        }
    }

    #[test]
    fn asymptotic_constant() {
        // schnorr_upper(k, new)/(k-0.5)^{2ln2} → 2^{3ln2}/17^{2ln2}.
        let k = 1_000_000u64;
        let kf = k as f64;
        let b = schnorr_upper(k, SchnorrUpperMethod::New).unwrap();
        let c = (b.ln_value - 2.0 * std::f64::consts::LN_2 * (kf - 0.5).ln()).exp();
        assert!(c > 0.0832 && c < 0.0834, "c={c}");
        assert!((c - 0.0832185951556).abs() < 1e-10);
    }

    #[test]
    fn lower_bounds_and_crossover_at_eight() {
        assert!((schnorr_lower(12, SchnorrLowerMethod::Old).unwrap().value - 1.0).abs() < 1e-15);
        for k in 2..=1000u64 {
            let old = schnorr_lower(k, SchnorrLowerMethod::Old).unwrap().ln_value;
            let new = schnorr_lower(k, SchnorrLowerMethod::New).unwrap().ln_value;
            assert_eq!(new > old, k >= 8, "k={k}");
        }
    }

    #[test]
    fn lower_ratio_approaches_asymptote() {
        let asym = 24.0 / (std::f64::consts::PI * 1.5f64.exp());
        assert!((asym - 1.7045888611444244).abs() < 1e-15);
        let r = |k: u64| {
            (schnorr_lower(k, SchnorrLowerMethod::New).unwrap().ln_value
                - schnorr_lower(k, SchnorrLowerMethod::Old).unwrap().ln_value)
                .exp()
        };
        let r6 = r(1_000_000);
        assert!((r6 - 1.7046).abs() < 5e-5, "r={r6}");
        // Approach is monotone from below on a coarse grid.
        let mut prev = 0.0;
        for k in [10u64, 100, 1000, 10_000, 100_000, 1_000_000] {
            let v = r(k);
            assert!(v > prev && v < asym, "k={k}");
            prev = v;
        }
    }

    #[test]
    fn rankin_exact_table() {
        assert_eq!(rankin_exact(1, 1).unwrap().value, 1.0);
        assert_eq!(rankin_exact(4, 2).unwrap().value, 1.5);
        assert_eq!(rankin_exact(6, 2).unwrap().value, 2.080083823051904);
        assert_eq!(rankin_exact(8, 2).unwrap().value, 3.0);
        assert_eq!(rankin_exact(8, 3).unwrap().value, 4.0);
        assert_eq!(rankin_exact(8, 4).unwrap().value, 4.0);
        assert!(rankin_exact(10, 5).is_none());
        assert!(rankin_exact(6, 3).is_none());
        // 3^{2/3} literal is pinned by its cube.
        let v = rankin_exact(6, 2).unwrap().value;
        assert!((v.powi(3) - 9.0).abs() < 9.0 * 1e-14);
    }

    #[test]
    fn rankin_values() {
        assert!((rankin_bounds(12, RankinMethod::OldLower).unwrap().value - 1.0).abs() < 1e-12);
        let up5 = rankin_bounds(5, RankinMethod::NewUpper).unwrap();
        assert!(up5.value.is_finite() && up5.value > 0.0);
        assert!((up5.value - 3072.8606662589590).abs() < 1e-8 * up5.value);
    }

    #[test]
    fn rankin_sandwich() {
        for k in 5..=200u64 {
            let nl = rankin_bounds(k, RankinMethod::NewLower).unwrap().ln_value;
            let nu = rankin_bounds(k, RankinMethod::NewUpper).unwrap().ln_value;
            let ol = rankin_bounds(k, RankinMethod::OldLower).unwrap().ln_value;
            let ou = rankin_bounds(k, RankinMethod::OldUpper).unwrap().ln_value;
            assert!(nl <= nu, "k={k}");
            assert!(ol <= ou, "k={k}");
        }
    }

    #[test]
    fn rankin_upper_crossover_at_nine() {
        for k in 5..=1000u64 {
            let new = rankin_bounds(k, RankinMethod::NewUpper).unwrap().ln_value;
            let old = rankin_bounds(k, RankinMethod::OldUpper).unwrap().ln_value;
            assert_eq!(new < old, k >= 9, "k={k}");
        }
    }

    #[test]
    fn rankin_lower_ratio_identity() {
        // ln(new_lower) - ln(old_lower) = ln(4/(π²√k)) + (k/2)·ln(24/(πe^{3/2}))
        // exactly; check the identity numerically.
        let pi = std::f64::consts::PI;
        for k in 5..=1000u64 {
            let kf = k as f64;
            let diff = rankin_bounds(k, RankinMethod::NewLower).unwrap().ln_value
                - rankin_bounds(k, RankinMethod::OldLower).unwrap().ln_value;
            let rhs = (4.0 / (pi * pi * kf.sqrt())).ln()
                + (kf / 2.0) * (24.0 / (pi * 1.5f64.exp())).ln();
            assert!((diff - rhs).abs() < 1e-9, "k={k}: {diff} vs {rhs}");
        }
    }

    #[test]
    fn via_beta_is_tighter_upper() {
        let v5 = rankin_upper_via_beta(5).unwrap();
        assert!((v5.value - 3065.1734642287421).abs() < 1e-8 * v5.value);
        for k in 5..=100u64 {
            let via = rankin_upper_via_beta(k).unwrap().ln_value;
            let direct = rankin_bounds(k, RankinMethod::NewUpper).unwrap().ln_value;
            let lower = rankin_bounds(k, RankinMethod::NewLower).unwrap().ln_value;
            assert!(via <= direct, "k={k}");
            assert!(via >= lower, "k={k}");
        }
        // Definitional identity at k = 50.
        let beta = schnorr_upper(50, SchnorrUpperMethod::New).unwrap().ln_value;
        let via = rankin_upper_via_beta(50).unwrap().ln_value;
        assert!((via - 25.0 * beta).abs() < 1e-12 * via.abs());
        assert!((via - 82.6955869252685).abs() < 1e-10);
    }

    #[test]
    fn log_space_survives_overflow() {
        // (k/12)^{k/2} overflows f64 near k ≈ 700; the log form must not.
        let b = rankin_bounds(800, RankinMethod::OldLower).unwrap();
        assert!(b.value.is_infinite());
        assert!(b.ln_value.is_finite());
        assert!((b.ln_value - 400.0 * (800.0f64 / 12.0).ln()).abs() < 1e-9);
    }

    #[test]
    fn known_63_bracket() {
        let (lo, hi) = rankin_63_bounds();
        assert_eq!(lo.kind, BoundKind::Lower);
        assert_eq!(hi.kind, BoundKind::Upper);
        assert!(lo.value < hi.value);
        // 4/√3 and √6 literals pinned by squares.
        assert!((lo.value * lo.value - 16.0 / 3.0).abs() < 1e-14);
        assert!((hi.value * hi.value - 6.0).abs() < 1e-14);
    }

    #[test]
    fn raw_lower_is_finite_at_one() {
        let v = schnorr_lower_new_ln(1.0);
        assert!(v.is_finite());
        // At k = 1 the expression is (4/π²)²·2/(πe^{3/2}).
        let pi = std::f64::consts::PI;
        let want = ((4.0 / (pi * pi)).powi(2) * 2.0 / (pi * 1.5f64.exp())).ln();
        assert!((v - want).abs() < 1e-12);
    }
}
