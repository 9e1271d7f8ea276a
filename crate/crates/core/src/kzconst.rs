//! Upper bounds on the Korkine–Zolotareff constant α_n.
//!
//! α_n is the supremum of λ(L)²/r_nn² over KZ-reduced bases of rank-n
//! lattices: how short the last diagonal entry of a KZ-reduced R-factor
//! can get relative to the shortest vector. No exact value is known for
//! n ≥ 2; this module evaluates the published upper bounds plus the
//! Hermite-product bound they derive from.

use crate::error::{Error, Result};
use crate::hermite::{best_upper, BoundKind, BoundValue};
use serde::Serialize;

/// Upper-bound families for α_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KzMethod {
    /// n^{1 + ln n}, valid for n ≥ 1.
    Schnorr87,
    /// n·∏_{k=2}^n k^{1/(k-1)}, valid for n ≥ 2.
    Hs08,
    /// 7·(n/8 + 6/5)·((n-1)/8)^{(1/2)ln((n-1)/8)}, valid for n ≥ 9.
    Wc18,
    /// 8.1·(n/8.5 + 2)·((2n-1)/17)^{(1/2)ln((2n-1)/17)}, valid for n ≥ 109.
    New,
    /// γ_n·∏_{k=2}^n γ_k^{1/(k-1)} with the sharpest Hermite bound for
    /// each factor, valid for n ≥ 1.
    Product,
}

impl KzMethod {
    pub const ALL: [KzMethod; 5] = [
        KzMethod::Schnorr87,
        KzMethod::Hs08,
        KzMethod::Wc18,
        KzMethod::New,
        KzMethod::Product,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            KzMethod::Schnorr87 => "schnorr87",
            KzMethod::Hs08 => "hs08",
            KzMethod::Wc18 => "wc18",
            KzMethod::New => "new",
            KzMethod::Product => "product",
        }
    }

    pub fn valid_from(&self) -> u64 {
        match self {
            KzMethod::Schnorr87 | KzMethod::Product => 1,
            KzMethod::Hs08 => 2,
            KzMethod::Wc18 => 9,
            KzMethod::New => 109,
        }
    }
}

fn upper(ln_value: f64, method: &'static str, valid_from: u64) -> BoundValue {
    BoundValue {
        value: ln_value.exp(),
        ln_value,
        kind: BoundKind::Upper,
        method,
        valid_from: valid_from as i64,
        valid_to: None,
    }
}

/// Upper bound on α_n by the chosen method; log-space evaluation
/// throughout since several bounds grow like n^{ln n}.
pub fn kz_upper(n: u64, method: KzMethod) -> Result<BoundValue> {
    let from = method.valid_from();
    if n < from {
        return Err(Error::Validity {
            method: method.name(),
            param: "n",
            value: n as i64,
            valid_from: from as i64,
        });
    }
    if method == KzMethod::Product {
        return kz_upper_product(n);
    }
    let nf = n as f64;
    let ln_value = match method {
        KzMethod::Schnorr87 => (1.0 + nf.ln()) * nf.ln(),
        KzMethod::Hs08 => {
            let mut s = nf.ln();
            for k in 2..=n {
                s += (k as f64).ln() / (k as f64 - 1.0);
            }
            s
        }
        KzMethod::Wc18 => {
            // ((n-1)/8)^{(1/2)ln((n-1)/8)} = exp((1/2)·ln²((n-1)/8)).
            let l = ((nf - 1.0) / 8.0).ln();
            7.0f64.ln() + (nf / 8.0 + 1.2).ln() + 0.5 * l * l
        }
        KzMethod::New => {
            let l = ((2.0 * nf - 1.0) / 17.0).ln();
            8.1f64.ln() + (nf / 8.5 + 2.0).ln() + 0.5 * l * l
        }
        KzMethod::Product => unreachable!(),
    };
    Ok(upper(ln_value, method.name(), from))
}

/// The Hermite-product bound α_n ≤ γ_n·∏_{k=2}^n γ_k^{1/(k-1)},
/// accumulated as ln γ_n + Σ ln γ_k/(k-1). Every factor uses the
/// sharpest available bound (exact γ_k for k ≤ 8 and k = 24).
pub fn kz_upper_product(n: u64) -> Result<BoundValue> {
    if n == 0 {
        return Err(Error::Domain("rank must be ≥ 1".into()));
    }
    let mut ln_value = best_upper(n)?.ln_value;
    for k in 2..=n {
        ln_value += best_upper(k)?.ln_value / (k as f64 - 1.0);
    }
    Ok(upper(ln_value, "product", 1))
}

/// Minimum over all methods valid at n, with the winner recorded.
pub fn kz_best_upper(n: u64) -> Result<BoundValue> {
    if n == 0 {
        return Err(Error::Domain("rank must be ≥ 1".into()));
    }
    let mut best: Option<BoundValue> = None;
    for method in KzMethod::ALL {
        if n < method.valid_from() {
            continue;
        }
        let b = kz_upper(n, method)?;
        if best.as_ref().map_or(true, |cur| b.ln_value < cur.ln_value) {
            best = Some(b);
        }
    }
    Ok(best.expect("schnorr87 and product are valid for every n ≥ 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::{blichfeldt_upper, exact_hermite, linear_upper, LinearMethod};

    #[test]
    fn schnorr87_values() {
        let b = kz_upper(1, KzMethod::Schnorr87).unwrap();
        assert!((b.value - 1.0).abs() < 1e-15);
        let b = kz_upper(2, KzMethod::Schnorr87).unwrap();
        // 2^{1+ln 2}
        let want = 2.0f64.powf(1.0 + std::f64::consts::LN_2);
        assert!((b.value - want).abs() < 1e-12);
    }

    #[test]
    fn wc18_at_validity_edge() {
        // Exponent term is 1 at n = 9, leaving 7·(9/8 + 6/5).
        let b = kz_upper(9, KzMethod::Wc18).unwrap();
        assert!((b.value - 16.275).abs() < 1e-12, "got {}", b.value);
    }

    #[test]
    fn new_bound_at_109() {
        let b = kz_upper(109, KzMethod::New).unwrap();
        assert!((b.value - 3074.4445421202).abs() < 1e-8 * b.value, "got {}", b.value);
    }

    #[test]
    fn validity_ranges_enforced() {
        assert!(kz_upper(1, KzMethod::Hs08).is_err());
        assert!(kz_upper(8, KzMethod::Wc18).is_err());
        assert!(kz_upper(108, KzMethod::New).is_err());
        assert!(kz_upper(109, KzMethod::New).is_ok());
        assert!(kz_upper(0, KzMethod::Schnorr87).is_err());
        assert!(kz_upper_product(0).is_err());
    }

    #[test]
    fn product_bound_small_values() {
        let p1 = kz_upper_product(1).unwrap();
        assert!((p1.value - 1.0).abs() < 1e-15);
        // n = 2: γ_2² = 4/3.
        let p2 = kz_upper_product(2).unwrap();
        assert!((p2.value - 4.0 / 3.0).abs() < 1e-14, "got {}", p2.value);
        assert_eq!(kz_upper(2, KzMethod::Product).unwrap().value, p2.value);
    }

    #[test]
    fn product_bound_collapses_at_8() {
        // ∏_{k=2}^8 γ_k^{1/(k-1)} = 2^{827/420}·3^{-8/15}; all seven factors
        // are exact table values.
        let p8 = kz_upper_product(8).unwrap();
        let ln2 = std::f64::consts::LN_2;
        let ln3 = 3.0f64.ln();
        let want_ln = ln2 + (827.0 / 420.0) * ln2 - (8.0 / 15.0) * ln3;
        assert!((p8.ln_value - want_ln).abs() < 1e-13, "{} vs {want_ln}", p8.ln_value);
        assert!((p8.value - 2.0 * 2.1791028416660).abs() < 1e-10);
    }

    #[test]
    fn product_with_exact_never_exceeds_product_with_bounds() {
        // Swapping each exact γ_k for the best non-exact bound can only
        // increase the product.
        let bound_only = |n: u64| -> f64 {
            let mut best = blichfeldt_upper(n).unwrap().ln_value;
            for m in LinearMethod::ALL {
                if n >= m.valid_from() {
                    best = best.min(linear_upper(n, m).unwrap().ln_value);
                }
            }
            best
        };
        for n in 1..=60u64 {
            if let Some(e) = exact_hermite(n) {
                assert!(e.ln_value <= bound_only(n) + 1e-12, "n={n}");
            }
            let exact_ln = kz_upper_product(n).unwrap().ln_value;
            let mut with_bounds = bound_only(n);
            for k in 2..=n {
                with_bounds += bound_only(k) / (k as f64 - 1.0);
            }
            assert!(exact_ln <= with_bounds + 1e-12, "n={n}");
        }
    }

    #[test]
    fn crossover_new_below_wc18_from_111() {
        let r = |n: u64| {
            kz_upper(n, KzMethod::New).unwrap().ln_value
                - kz_upper(n, KzMethod::Wc18).unwrap().ln_value
        };
        assert!(r(109) > 0.0);
        assert!(r(110) > 0.0);
        for n in 111..=10_000u64 {
            assert!(r(n) < 0.0, "n={n}");
        }
    }

    #[test]
    fn improvement_ratio_strictly_decreasing() {
        let mut prev = f64::INFINITY;
        for n in 111..=1000u64 {
            let ratio = kz_upper(n, KzMethod::New).unwrap().ln_value
                - kz_upper(n, KzMethod::Wc18).unwrap().ln_value;
            assert!(ratio < prev, "n={n}");
            prev = ratio;
        }
        // Endpoints of the swept ratio in value space.
        let first = (kz_upper(111, KzMethod::New).unwrap().ln_value
            - kz_upper(111, KzMethod::Wc18).unwrap().ln_value)
            .exp();
        let last = (kz_upper(1000, KzMethod::New).unwrap().ln_value
            - kz_upper(1000, KzMethod::Wc18).unwrap().ln_value)
            .exp();
        assert!(first < 1.0 && first > 0.999);
        assert!(last > 0.82 && last < 0.83);
    }

    #[test]
    fn all_bounds_at_least_one() {
        for n in 1..=300u64 {
            for method in KzMethod::ALL {
                if n < method.valid_from() {
                    continue;
                }
                let b = kz_upper(n, method).unwrap();
                assert!(b.value >= 1.0 - 1e-12, "{} at n={n}", method.name());
            }
        }
    }

    #[test]
    fn best_upper_is_minimum_and_records_winner() {
        assert!((kz_best_upper(1).unwrap().value - 1.0).abs() < 1e-15);
        assert!(kz_best_upper(2).unwrap().value <= 4.0 / 3.0 + 1e-12);
        for n in 1..=300u64 {
            let best = kz_best_upper(n).unwrap();
            let mut found = false;
            for method in KzMethod::ALL {
                if n < method.valid_from() {
                    continue;
                }
                let b = kz_upper(n, method).unwrap();
                assert!(best.ln_value <= b.ln_value + 1e-12, "n={n}");
                if b.method == best.method {
                    assert!((b.ln_value - best.ln_value).abs() < 1e-12);
                    found = true;
                }
            }
            assert!(found, "winner {} not among methods at n={n}", best.method);
        }
        assert!(kz_best_upper(0).is_err());
    }
}
