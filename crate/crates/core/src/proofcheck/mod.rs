//! Mechanical re-verification of the finite numerical claims behind the
//! bound derivations: grid positivity of the phi ratio, the rho tail
//! estimates, the digamma upper bound, the midpoint and integral comparison
//! lemmas, the assembled product constants, the leading-constant analysis for
//! the Schnorr-constant bound, and the zeta/Gamma product estimates.
//!
//! Every claim is evaluated in one of three regimes: interval arithmetic
//! ([`Fx`]) whose enclosure width is the accumulated error, adaptive
//! quadrature with an explicit error estimate, or exact integer/rational
//! arithmetic with no error at all. A claim passes only when its computed
//! margin strictly exceeds `margin_factor` times the accumulated error, so a
//! pass certifies the strict inequality instead of merely evaluating it.
//! Regardless of the policy's evaluation mode, claims that need transcendental
//! values run in interval arithmetic at `max(64, policy.bits)` bits: a
//! fast-mode policy only lowers the precision floor, never the soundness of
//! the pass/fail decision.

pub mod quad;

pub use quad::{adaptive_simpson, QuadResult};

use crate::highprec::{consts, digamma_fx, factorial, ln_gamma_fx, Consts, Fx};
use crate::specfun::{zeta_fx, PrecisionPolicy};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

/// Outcome of a single verified claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
}

/// One verified numerical claim with its certification margin.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub statement: String,
    /// Amount by which the strict inequality holds.
    pub computed_margin: f64,
    /// margin_factor times the accumulated numerical error; 0 for exact claims.
    pub required_margin: f64,
    pub status: ClaimStatus,
    /// Working precision: interval bits, 53 for f64 quadrature, 0 for exact.
    pub precision_bits: u32,
}

/// How a claim's margin was obtained; decides the pass rule and error bound.
enum Margin {
    /// Interval enclosure of the margin quantity; the enclosure width is the
    /// accumulated error. The pass decision compares mantissas exactly.
    Interval(Fx),
    /// f64 estimate with an explicit error bound (quadrature, differences).
    Float { value: f64, err: f64, bits: u32 },
    /// Exact integer/rational computation: no numerical error.
    Exact(f64),
}

fn finish(policy: &PrecisionPolicy, id: &str, statement: String, margin: Margin) -> ClaimReport {
    let (computed, required, pass, bits) = match margin {
        Margin::Interval(m) => {
            // lo > factor * width, decided on the mantissas so the pass/fail
            // decision itself is free of rounding. factor is dyadic, so its
            // 64-bit fixed-point mantissa is exact.
            let factor = Fx::from_f64(policy.margin_factor, 64);
            let scaled = m.lo_mantissa().clone() << 64u32;
            let pass = m.certainly_positive() && scaled > factor.hi_mantissa().clone() * m.width_mantissa();
            (m.lo_f64(), policy.margin_factor * m.width_f64(), pass, m.bits())
        }
        Margin::Float { value, err, bits } => {
            let required = policy.margin_factor * err;
            (value, required, value > required, bits)
        }
        Margin::Exact(v) => (v, 0.0, v > 0.0, 0),
    };
    ClaimReport {
        claim_id: id.to_string(),
        statement,
        computed_margin: computed,
        required_margin: required,
        status: if pass { ClaimStatus::Pass } else { ClaimStatus::Fail },
        precision_bits: bits,
    }
}

/// Interval computations never run below 64 bits, even under a fast policy.
fn work_bits(policy: &PrecisionPolicy) -> u32 {
    policy.bits.max(64)
}

/// Keeps the grid point whose margin interval has the smallest lower bound.
struct MinTracker {
    best: Option<(Fx, i64)>,
}

impl MinTracker {
    fn new() -> MinTracker {
        MinTracker { best: None }
    }

    fn push(&mut self, m: Fx, label: i64) {
        let better = match &self.best {
            None => true,
            Some((b, _)) => m.lo_mantissa() < b.lo_mantissa(),
        };
        if better {
            self.best = Some((m, label));
        }
    }

    fn take(self) -> (Fx, i64) {
        self.best.expect("empty grid")
    }
}

/// phi(t) = ((pi/8.5)(t+8.5))^t / Gamma(2+t) exceeds 1 on the half-integer
/// grid [0.5, 310.5] (the nominal grid [0.5, 310] plus one extra half-step;
/// t = 0 is excluded because phi(0) = 1 exactly), plus a closed-form
/// cross-check at t = 1.
pub fn check_phi_grid(policy: &PrecisionPolicy) -> Vec<ClaimReport> {
    let bits = work_bits(policy);
    let c = consts(bits);
    let mut min = MinTracker::new();
    for i in 1..=621i64 {
        let t = Fx::from_ratio_i64(i, 2, bits);
        // At half-integer t, (pi/8.5)(t+8.5) = pi (i+17)/17 exactly.
        let arg = c.pi.mul_int(i + 17).div_int(17);
        let ln_phi = t.mul(&arg.ln(&c)).sub(&ln_gamma_fx(&Fx::from_ratio_i64(i + 4, 2, bits), &c));
        min.push(ln_phi, i);
    }
    let (m, i) = min.take();
    let mut out = vec![finish(
        policy,
        "theorem1_phi_grid",
        format!(
            "ln phi(t) > 0 for phi(t) = ((pi/8.5)(t+8.5))^t / Gamma(2+t) at all 621 half-integers t in [0.5, 310.5]; minimum at t = {}",
            i as f64 / 2.0
        ),
        Margin::Interval(m),
    )];

    // Gamma(3) = 2 gives phi(1) = 9.5 pi / 17; the grid-path evaluation must
    // reproduce the closed form.
    let general = c
        .pi
        .mul_int(19)
        .div_int(17)
        .ln(&c)
        .sub(&ln_gamma_fx(&Fx::from_int(3, bits), &c));
    let closed = c.pi.mul_int(19).div_int(34).ln(&c);
    let d = general.sub(&closed);
    let dev = d.lo_f64().abs().max(d.hi_f64().abs());
    out.push(finish(
        policy,
        "theorem1_phi_at_1_identity",
        "grid-path evaluation of phi(1) agrees with the closed form 9.5 pi / 17 = 1.7555958946531198 within 1e-15".to_string(),
        Margin::Float { value: 1e-15 - dev, err: 0.0, bits },
    ));
    out
}

/// rho(t) = ln(t+8.5) - 8.5/(t+8.5) - ln(t+e^{1-gamma}) + ln(pi e/8.5) at integer t.
fn rho_at(bits: u32, c: &Consts, t: i64, e1mg: &Fx) -> Fx {
    let tp = Fx::from_ratio_i64(2 * t + 17, 2, bits);
    let half17 = Fx::from_ratio_i64(17, 2, bits);
    tp.ln(c)
        .sub(&half17.div(&tp))
        .sub(&Fx::from_int(t, bits).add(e1mg).ln(c))
        .add(&c.pi.mul(&c.e).div(&half17).ln(c))
}

/// rho(310) exceeds 0.0000796 (under both gamma conventions), rho'(310) > 0,
/// and rho is nondecreasing on the integer grid 32..=310.
pub fn check_rho_at_310(policy: &PrecisionPolicy) -> Vec<ClaimReport> {
    let bits = work_bits(policy);
    let c = consts(bits);
    // The bound direction gamma > 0.57 makes rho smallest at gamma = 0.57.
    let e057 = Fx::from_ratio_i64(43, 100, bits).exp(&c);
    let efull = Fx::from_int(1, bits).sub(&c.euler).exp(&c);
    let thresh = Fx::from_ratio_i64(796, 10_000_000, bits);
    let mut out = Vec::new();

    out.push(finish(
        policy,
        "theorem1_rho_310_gamma_057",
        "rho(310) > 0.0000796 with the Euler-Mascheroni constant replaced by its lower bracket 0.57 (the substitution that minimises rho)".to_string(),
        Margin::Interval(rho_at(bits, &c, 310, &e057).sub(&thresh)),
    ));
    out.push(finish(
        policy,
        "theorem1_rho_310_gamma_full",
        "rho(310) > 0.0000796 with the Euler-Mascheroni constant at working precision".to_string(),
        Margin::Interval(rho_at(bits, &c, 310, &efull).sub(&thresh)),
    ));

    // rho'(t) = 1/(t+8.5) + 8.5/(t+8.5)^2 - 1/(t+e^{1-gamma}) at t = 310.
    let tp = Fx::from_ratio_i64(637, 2, bits);
    let half17 = Fx::from_ratio_i64(17, 2, bits);
    let one = Fx::from_int(1, bits);
    let rp = one
        .div(&tp)
        .add(&half17.div(&tp.mul(&tp)))
        .sub(&one.div(&Fx::from_int(310, bits).add(&efull)));
    out.push(finish(
        policy,
        "theorem1_rho_prime_310",
        "rho'(310) > 0, consistent with rho'(t) >= 0 for t > 31".to_string(),
        Margin::Interval(rp),
    ));

    let mut prev = rho_at(bits, &c, 32, &e057);
    let mut min = MinTracker::new();
    for t in 33..=310i64 {
        let cur = rho_at(bits, &c, t, &e057);
        min.push(cur.sub(&prev), t - 1);
        prev = cur;
    }
    let (d, at) = min.take();
    out.push(finish(
        policy,
        "theorem1_rho_grid_monotone",
        format!("rho(t+1) - rho(t) > 0 on the integer grid t = 32..=309 (gamma = 0.57); smallest step at t = {at}"),
        Margin::Interval(d),
    ));
    out
}

/// psi(t+2) <= ln(t + e^{1-gamma}) on the half-integer grid (0, 1000], with
/// the exact-equality endpoint t = 0 checked as an identity.
pub fn check_digamma_bound_grid(policy: &PrecisionPolicy) -> Vec<ClaimReport> {
    let bits = work_bits(policy);
    let c = consts(bits);
    let efull = Fx::from_int(1, bits).sub(&c.euler).exp(&c);
    let mut min = MinTracker::new();
    for i in 1..=2000i64 {
        let t = Fx::from_ratio_i64(i, 2, bits);
        let m = t
            .add(&efull)
            .ln(&c)
            .sub(&digamma_fx(&Fx::from_ratio_i64(i + 4, 2, bits), &c));
        min.push(m, i);
    }
    let (m, i) = min.take();
    let mut out = vec![finish(
        policy,
        "digamma_upper_bound_grid",
        format!(
            "ln(t + e^(1-gamma)) - psi(t+2) > 0 at all 2000 half-integers t in (0, 1000]; minimum at t = {}",
            i as f64 / 2.0
        ),
        Margin::Interval(m),
    )];

    // At t = 0 the bound is an equality: psi(2) = 1 - gamma = ln(e^{1-gamma}).
    let d = digamma_fx(&Fx::from_int(2, bits), &c).sub(&Fx::from_int(1, bits).sub(&c.euler));
    let dev = d.lo_f64().abs().max(d.hi_f64().abs());
    out.push(finish(
        policy,
        "digamma_upper_bound_t0_identity",
        "the bound is tight at t = 0: psi(2) = 1 - gamma within 1e-15".to_string(),
        Margin::Float { value: 1e-15 - dev, err: 0.0, bits },
    ));
    out
}

/// Convex test integrand for the midpoint comparison.
pub struct ConvexCase {
    pub name: &'static str,
    pub a: f64,
    pub b: f64,
    pub f: fn(f64) -> f64,
    /// Strictly convex integrands must beat the midpoint rule by a clear
    /// margin; affine integrands are checked for equality within tolerance.
    pub strictly_convex: bool,
}

/// Built-in midpoint-rule suite: three textbook convex functions, the
/// integrand whose convexity the derivation actually needs, and the affine
/// equality case.
pub fn default_midpoint_suite() -> Vec<ConvexCase> {
    vec![
        ConvexCase { name: "exp", a: 0.0, b: 1.0, f: |t| t.exp(), strictly_convex: true },
        ConvexCase { name: "square", a: 0.0, b: 2.0, f: |t| t * t, strictly_convex: true },
        ConvexCase { name: "recip", a: 1.0, b: 3.0, f: |t| 1.0 / t, strictly_convex: true },
        ConvexCase {
            name: "lemma2f",
            a: 107.5,
            b: 500.0,
            f: |t| ((t + 18.0) / 8.5).ln() / t,
            strictly_convex: true,
        },
        ConvexCase { name: "linear", a: 2.0, b: 7.0, f: |t| 3.0 * t - 1.0, strictly_convex: false },
    ]
}

/// (b-a) f((a+b)/2) <= integral of f for convex f, one claim per test case.
pub fn check_midpoint_lemma(policy: &PrecisionPolicy, cases: &[ConvexCase]) -> Vec<ClaimReport> {
    cases
        .iter()
        .map(|case| {
            let q = adaptive_simpson(&case.f, case.a, case.b, 1e-12);
            let mid = (case.b - case.a) * (case.f)(0.5 * (case.a + case.b));
            let id = format!("lemma1_midpoint_{}", case.name);
            if case.strictly_convex {
                let err = q.err_est + f64::EPSILON * (q.value.abs() + mid.abs());
                finish(
                    policy,
                    &id,
                    format!(
                        "(b-a) f((a+b)/2) < integral of `{}` over [{}, {}] (strictly convex integrand)",
                        case.name, case.a, case.b
                    ),
                    Margin::Float { value: q.value - mid, err, bits: 53 },
                )
            } else {
                let dev = (q.value - mid).abs();
                finish(
                    policy,
                    &id,
                    format!(
                        "midpoint rule is exact for the affine integrand `{}` on [{}, {}] within 1e-10",
                        case.name, case.a, case.b
                    ),
                    Margin::Float { value: 1e-10 - dev, err: 0.0, bits: 53 },
                )
            }
        })
        .collect()
}

/// g(t) = 2 (t+18)^2 ln((t+18)/8.5) - 3t^2 - 36t, the convexity witness:
/// f''(t) = g(t) / (t^3 (t+18)^2) for f(t) = ln((t+18)/8.5)/t.
fn g_witness(t: &Fx, c: &Consts) -> Fx {
    let bits = t.bits();
    let tp = t.add(&Fx::from_int(18, bits));
    tp.mul(&tp)
        .mul_int(2)
        .mul(&tp.mul_2exp(1).div_int(17).ln(c))
        .sub(&t.mul(t).mul_int(3))
        .sub(&t.mul_int(36))
}

/// g'(t) = 4 (t+18) ln((t+18)/8.5) - 4t.
fn g_witness_prime(t: &Fx, c: &Consts) -> Fx {
    let bits = t.bits();
    let tp = t.add(&Fx::from_int(18, bits));
    tp.mul_int(4).mul(&tp.mul_2exp(1).div_int(17).ln(c)).sub(&t.mul_int(4))
}

/// Convexity of f(t) = ln((t+18)/8.5)/t via the witness g: positivity of g on
/// a 241-point log grid and at 0, positivity of g', and a central-difference
/// cross-check of f'' itself.
pub fn check_f_convexity(policy: &PrecisionPolicy) -> Vec<ClaimReport> {
    let bits = work_bits(policy);
    let c = consts(bits);
    let mut out = Vec::new();

    let ln10 = Fx::from_int(10, bits).ln(&c);
    let mut min = MinTracker::new();
    for j in -120..=120i64 {
        let t = ln10.mul_int(j).div_int(20).exp(&c);
        min.push(g_witness(&t, &c), j);
    }
    let (m, j) = min.take();
    out.push(finish(
        policy,
        "lemma2_g_positive_grid",
        format!(
            "g(t) = 2(t+18)^2 ln((t+18)/8.5) - 3t^2 - 36t > 0 on the 241-point log grid t = 10^(j/20), j = -120..=120; minimum at t = 10^({})",
            j as f64 / 20.0
        ),
        Margin::Interval(m),
    ));

    out.push(finish(
        policy,
        "lemma2_g_at_zero",
        "g(0) = 648 ln(36/17) > 0 (closed form)".to_string(),
        Margin::Interval(Fx::from_ratio_i64(36, 17, bits).ln(&c).mul_int(648)),
    ));
    out.push(finish(
        policy,
        "lemma2_g_prime_at_zero",
        "g'(0) = 72 ln(36/17) > 0 (closed form)".to_string(),
        Margin::Interval(Fx::from_ratio_i64(36, 17, bits).ln(&c).mul_int(72)),
    ));

    let mut min = MinTracker::new();
    for t in [0i64, 1, 10, 100, 10_000, 1_000_000] {
        min.push(g_witness_prime(&Fx::from_int(t, bits), &c), t);
    }
    let (m, t) = min.take();
    out.push(finish(
        policy,
        "lemma2_g_prime_spot",
        format!("g'(t) = 4(t+18) ln((t+18)/8.5) - 4t > 0 at t in {{0, 1, 10, 100, 1e4, 1e6}}; minimum at t = {t}"),
        Margin::Interval(m),
    ));

    // Independent route: central second differences of f itself, with a
    // Richardson error estimate plus a rounding floor.
    let f = |t: f64| ((t + 18.0) / 8.5).ln() / t;
    let mut worst: Option<(f64, f64, f64)> = None; // (value, err, t)
    let points: Vec<f64> =
        (0..19).map(|j| 10f64.powf(-2.0 + j as f64 / 3.0)).chain([200.0]).collect();
    for &t in &points {
        let h = t * 1e-3;
        let fd2 = |h: f64| (f(t - h) - 2.0 * f(t) + f(t + h)) / (h * h);
        let coarse = fd2(h);
        let fine = fd2(h / 2.0);
        let err = (coarse - fine).abs() / 3.0 + 16.0 * f64::EPSILON * f(t).abs() / (h * h);
        if worst.is_none() || fine < worst.unwrap().0 {
            worst = Some((fine, err, t));
        }
    }
    let (value, err, t) = worst.unwrap();
    out.push(finish(
        policy,
        "lemma2_fpp_central_diff",
        format!(
            "central second differences of f(t) = ln((t+18)/8.5)/t are positive at 20 log-spaced points in [0.01, 1e4]; smallest at t = {t}"
        ),
        Margin::Float { value, err, bits: 53 },
    ));
    out
}

/// One orientation case for the integral comparison bound.
pub struct IntegralCase {
    pub name: &'static str,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// The integration ranges the derivations actually use: lower limit 107.5 for
/// the KZ product tail and (k-0.5, 2k-0.5) for the Schnorr-constant tail.
pub fn default_integral_cases() -> Vec<IntegralCase> {
    vec![
        IntegralCase { name: "theorem2_n109", a: 107.5, b: 108.5, c: 18.0 },
        IntegralCase { name: "theorem2_n500", a: 107.5, b: 499.5, c: 18.0 },
        IntegralCase { name: "theorem2_n1000", a: 107.5, b: 999.5, c: 18.0 },
        IntegralCase { name: "theorem3_k5", a: 4.5, b: 9.5, c: 18.0 },
        IntegralCase { name: "theorem3_k50", a: 49.5, b: 99.5, c: 18.0 },
        IntegralCase { name: "theorem3_k500", a: 499.5, b: 999.5, c: 18.0 },
    ]
}

fn lemma3_rhs(a: f64, b: f64, c: f64) -> f64 {
    9.0 / 8.0 * ((b * (3.0 * a + 2.0 * c)) / (a * (3.0 * b + 2.0 * c))).ln()
        + c * (b - a) / (4.0 * a * b)
}

/// integral of ln(1+c/t)/t over [a, b] is at most
/// (9/8) ln(b(3a+2c)/(a(3b+2c))) + c(b-a)/(4ab), for 0 < a < b.
pub fn check_integral_lemma3(policy: &PrecisionPolicy, cases: &[IntegralCase]) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    for case in cases {
        let cc = case.c;
        let q = adaptive_simpson(&|t: f64| (1.0 + cc / t).ln() / t, case.a, case.b, 1e-12);
        let rhs = lemma3_rhs(case.a, case.b, case.c);
        let err = q.err_est + 8.0 * f64::EPSILON * (rhs.abs() + q.value.abs());
        out.push(finish(
            policy,
            &format!("lemma3_{}", case.name),
            format!(
                "integral of ln(1+{}/t)/t over [{}, {}] is below the closed-form bound (9/8) ln(b(3a+2c)/(a(3b+2c))) + c(b-a)/(4ab)",
                case.c, case.a, case.b
            ),
            Margin::Float { value: rhs - q.value, err, bits: 53 },
        ));
    }

    // Degenerate interval: both sides collapse to zero.
    let q = adaptive_simpson(&|t: f64| (1.0 + 18.0 / t).ln() / t, 107.5, 107.5, 1e-12);
    let rhs = lemma3_rhs(107.5, 107.5, 18.0);
    out.push(finish(
        policy,
        "lemma3_degenerate",
        "at a = b both the integral and the closed-form bound vanish (within 1e-12)".to_string(),
        Margin::Float { value: 1e-12 - q.value.abs().max(rhs.abs()), err: 0.0, bits: 53 },
    ));

    // The hypothesis as stated orders the letters a > b > 0, yet every use
    // integrates from the smaller to the larger limit. With the stated
    // orientation the inequality is false, so the letter ordering is an
    // erratum; the usage orientation (checked above) is the correct reading.
    let q = adaptive_simpson(&|t: f64| (1.0 + 18.0 / t).ln() / t, 4.5, 9.5, 1e-12);
    let violation = -q.value - lemma3_rhs(9.5, 4.5, 18.0);
    let err = q.err_est + 8.0 * f64::EPSILON * (q.value.abs() + 2.0);
    out.push(finish(
        policy,
        "lemma3_orientation_erratum",
        "with the letters ordered as stated (a > b > 0) the bound fails at (a, b, c) = (9.5, 4.5, 18): the integral exceeds the closed form, confirming the stated letter ordering is an erratum and the usage orientation a < b is the correct reading".to_string(),
        Margin::Float { value: violation, err, bits: 53 },
    ));
    out
}

/// The three assembled constants of the KZ product bound: the exact-dimension
/// product identity, the 79.06 tail product, and the final 8.1 constant.
pub fn check_theorem2_constants(policy: &PrecisionPolicy) -> Vec<ClaimReport> {
    let bits = work_bits(policy);
    let c = consts(bits);
    let mut out = Vec::new();

    // (i) product over k = 2..=8 of gamma_k^{1/(k-1)} = 2^{827/420} 3^{-8/15}.
    let mut s = 0.0;
    for k in 2..=8u64 {
        s += crate::hermite::exact_hermite(k).expect("tabulated dimension").ln_value
            / (k as f64 - 1.0);
    }
    let p = s.exp();
    let q = (827.0 / 420.0 * std::f64::consts::LN_2 - 8.0 / 15.0 * 3f64.ln()).exp();
    let rel = (p - q).abs() / q;
    out.push(finish(
        policy,
        "theorem2_product_2_8_identity",
        "product over k = 2..=8 of gamma_k^(1/(k-1)) equals 2^(827/420) 3^(-8/15) to 1e-12 relative".to_string(),
        Margin::Float { value: 1e-12 - rel, err: 0.0, bits: 53 },
    ));

    // (ii) product over k = 9..=108 of (k/8 + 6/5)^{1/(k-1)} < 79.06.
    let mut sum = Fx::zero(bits);
    for k in 9..=108i64 {
        sum = sum.add(&Fx::from_ratio_i64(5 * k + 48, 40, bits).ln(&c).div_int(k - 1));
    }
    out.push(finish(
        policy,
        "theorem2_product_9_108",
        "product over k = 9..=108 of (k/8 + 6/5)^(1/(k-1)) = 79.0582... stays below 79.06".to_string(),
        Margin::Interval(Fx::from_ratio_i64(7906, 100, bits).sub(&sum.exp(&c))),
    ));

    // (iii) 79.06 * 2^(827/420) 3^(-8/15) (119.5/107.5)^(9/8) e^(9/215)
    //       * (8.5/107.5)^((1/2) ln(107.5/8.5)) = 8.0911... < 8.1.
    let ln215_17 = Fx::from_ratio_i64(215, 17, bits).ln(&c);
    let ln_a = Fx::from_ratio_i64(7906, 100, bits)
        .ln(&c)
        .add(&c.ln2.mul_int(827).div_int(420))
        .sub(&Fx::from_int(3, bits).ln(&c).mul_int(8).div_int(15))
        .add(&Fx::from_ratio_i64(239, 215, bits).ln(&c).mul_int(9).div_int(8))
        .add(&Fx::from_ratio_i64(9, 215, bits))
        .sub(&ln215_17.mul(&ln215_17).div_int(2));
    out.push(finish(
        policy,
        "theorem2_assembled_constant",
        "the assembled product-bound constant 79.06 * 2^(827/420) 3^(-8/15) (119.5/107.5)^(9/8) e^(9/215) (8.5/107.5)^((1/2) ln(107.5/8.5)) = 8.0911... stays below 8.1".to_string(),
        Margin::Interval(Fx::from_ratio_i64(81, 10, bits).sub(&ln_a.exp(&c))),
    ));
    out
}

/// Leading-constant analysis for the Schnorr-constant bound: the two-sided
/// bracket of con1 (whose nominal 0.083216 truncation is an erratum), the
/// bracket of f(12), the sign change of h, the grid maximum of f, and the
/// downstream product con1 * f(12) < 0.08698 the final constant relies on.
pub fn check_corollary1(policy: &PrecisionPolicy) -> Vec<ClaimReport> {
    let bits = work_bits(policy);
    let c = consts(bits);
    let mut out = Vec::new();

    // con1 = 2^(3 ln 2) / 17^(2 ln 2); ln con1 = ln2 (3 ln2 - 2 ln17).
    let ln17 = Fx::from_int(17, bits).ln(&c);
    let con1 = c.ln2.mul(&c.ln2.mul_int(3).sub(&ln17.mul_int(2))).exp(&c);
    let m_hi = Fx::from_ratio_i64(832_166, 10_000_000, bits).sub(&con1);
    let m_lo = con1.sub(&Fx::from_ratio_i64(832_165, 10_000_000, bits));
    let m = if m_hi.lo_mantissa() < m_lo.lo_mantissa() { m_hi } else { m_lo };
    out.push(finish(
        policy,
        "corollary1_con1_erratum",
        "con1 = 2^(3 ln 2)/17^(2 ln 2) = 0.08321658... lies in (0.0832165, 0.0832166); the nominal bound '< 0.083216' is exceeded by 5.83e-7 and is an erratum (under-truncated constant); the downstream constant only needs con1 * f(12) < 0.08698, which holds (see corollary1_downstream_margin)".to_string(),
        Margin::Interval(m),
    ));

    // f(x) = ((4x-1)/17)^(1/(2x-1)); f(12) = (47/17)^(1/23).
    let ln_f12 = Fx::from_ratio_i64(47, 17, bits).ln(&c).div_int(23);
    let f12 = ln_f12.exp(&c);
    let m_lo = f12.sub(&Fx::from_ratio_i64(1_045_206, 1_000_000, bits));
    let m_hi = Fx::from_ratio_i64(104_521, 100_000, bits).sub(&f12);
    let m = if m_hi.lo_mantissa() < m_lo.lo_mantissa() { m_hi } else { m_lo };
    out.push(finish(
        policy,
        "corollary1_f12_bracket",
        "f(12) = (47/17)^(1/23) = 1.04520656... lies in (1.045206, 1.04521)".to_string(),
        Margin::Interval(m),
    ));

    // h(x) = (1-4x) ln((4x-1)/17) + 4x - 2 changes sign between 11 and 12.
    let h = |x: i64| {
        Fx::from_ratio_i64(4 * x - 1, 17, bits)
            .ln(&c)
            .mul_int(1 - 4 * x)
            .add(&Fx::from_int(4 * x - 2, bits))
    };
    let h11 = h(11);
    let h12_neg = h(12).neg();
    let m = if h11.lo_mantissa() < h12_neg.lo_mantissa() { h11 } else { h12_neg };
    out.push(finish(
        policy,
        "corollary1_h_sign_change",
        "h(x) = (1-4x) ln((4x-1)/17) + 4x - 2 satisfies h(11) > 0 > h(12), so the integer maximiser of f sits at 11 or 12".to_string(),
        Margin::Interval(m),
    ));

    // f attains its integer-grid maximum at x = 12.
    let mut min = MinTracker::new();
    for x in 5..=10_000i64 {
        if x == 12 {
            continue;
        }
        let ln_fx = Fx::from_ratio_i64(4 * x - 1, 17, bits).ln(&c).div_int(2 * x - 1);
        min.push(ln_f12.sub(&ln_fx), x);
    }
    let (m, x) = min.take();
    out.push(finish(
        policy,
        "corollary1_f_max_at_12",
        format!("ln f(12) > ln f(x) for every integer x in 5..=10000 other than 12; runner-up at x = {x}"),
        Margin::Interval(m),
    ));

    out.push(finish(
        policy,
        "corollary1_downstream_margin",
        "con1 * f(12) = 0.0869785... stays below the rounded constant 0.08698 used in the simplified bound".to_string(),
        Margin::Interval(Fx::from_ratio_i64(8698, 100_000, bits).sub(&con1.mul(&f12))),
    ));
    out
}

/// The zeta product ratio exceeds pi^(4-2k) 2^(3k-7) on an integer grid
/// (the estimate is proved for all k; the grid is corroborating evidence),
/// plus the two closed-form zeta comparisons the proof rests on.
pub fn check_zeta_lemma(policy: &PrecisionPolicy, k_max: u32) -> Vec<ClaimReport> {
    assert!(k_max >= 2, "k_max must be at least 2");
    let bits = work_bits(policy);
    let c = consts(bits);
    let lnpi = c.pi.ln(&c);
    let lnz: Vec<Fx> = (2..=2 * k_max as i64).map(|i| zeta_fx(i, bits).ln(&c)).collect();
    let mut min = MinTracker::new();
    for k in 2..=k_max as i64 {
        let mut lhs = Fx::zero(bits);
        for i in (k + 1)..=(2 * k) {
            lhs = lhs.add(&lnz[(i - 2) as usize]);
        }
        for i in 2..=k {
            lhs = lhs.sub(&lnz[(i - 2) as usize]);
        }
        let rhs = lnpi.mul_int(4 - 2 * k).add(&c.ln2.mul_int(3 * k - 7));
        min.push(lhs.sub(&rhs), k);
    }
    let (m, k) = min.take();
    let mut out = vec![finish(
        policy,
        "lemma4_zeta_ratio_grid",
        format!(
            "ln of (prod_(i=k+1)^(2k) zeta(i)) / (prod_(i=2)^k zeta(i)) exceeds ln of pi^(4-2k) 2^(3k-7) for k = 2..={k_max} (verified on grid; the estimate itself holds for all k); minimum at k = {k}"
        ),
        Margin::Interval(m),
    )];

    out.push(finish(
        policy,
        "lemma4_zeta2_below_2",
        "zeta(2) = pi^2/6 < 2".to_string(),
        Margin::Interval(Fx::from_int(2, bits).sub(&zeta_fx(2, bits))),
    ));
    out.push(finish(
        policy,
        "lemma4_zeta3_below_pi2_over_8",
        "zeta(3) < pi^2/8".to_string(),
        Margin::Interval(c.pi.mul(&c.pi).div_int(8).sub(&zeta_fx(3, bits))),
    ));
    out
}

/// ln Gamma(i/2 + 1): exact factorial for even i, exact rational times
/// sqrt(pi) for odd i = 2m+1, via Gamma(m+3/2) = (2m+2)!/(4^(m+1) (m+1)!) sqrt(pi).
fn ln_gamma_half_plus_one(i: i64, bits: u32, c: &Consts, lnpi: &Fx) -> Fx {
    if i % 2 == 0 {
        Fx::from_bigint(&factorial((i / 2) as u64), bits).ln(c)
    } else {
        let m = (i - 1) / 2;
        let num = factorial((2 * m + 2) as u64);
        let den = factorial((m + 1) as u64) * (BigInt::from(1) << (2 * (m + 1)) as usize);
        Fx::from_ratio(&num, &den, bits).ln(c).add(&lnpi.div_int(2))
    }
}

/// The Gamma product ratio dominates its Stirling-style closed form on an
/// integer grid, plus the two factorial estimates the derivation uses.
pub fn check_gamma_lemma(policy: &PrecisionPolicy, k_max: u32) -> Vec<ClaimReport> {
    assert!(k_max >= 2, "k_max must be at least 2");
    let bits = work_bits(policy);
    let c = consts(bits);
    let lnpi = c.pi.ln(&c);
    let lng: Vec<Fx> =
        (2..=2 * k_max as i64).map(|i| ln_gamma_half_plus_one(i, bits, &c, &lnpi)).collect();
    let mut min = MinTracker::new();
    for k in 2..=k_max as i64 {
        let mut lhs = Fx::zero(bits);
        for i in (k + 1)..=(2 * k) {
            lhs = lhs.add(&lng[(i - 2) as usize]);
        }
        for i in 2..=k {
            lhs = lhs.sub(&lng[(i - 2) as usize]);
        }
        let fact_ratio =
            Fx::from_ratio(&factorial(2 * k as u64), &(factorial(k as u64) * factorial(k as u64 + 1)), bits);
        let rhs = lnpi
            .div_int(2)
            .add(&c.ln2.mul_int(k * k).div_int(2))
            .sub(&Fx::from_ratio_i64(3 * k * k + 4, 4, bits))
            .add(&Fx::from_int(k, bits).ln(&c).mul_int(2 * k * k - 2 * k - 1).div_int(4))
            .add(&fact_ratio.ln(&c).div_int(2));
        min.push(lhs.sub(&rhs), k);
    }
    let (m, k) = min.take();
    let mut out = vec![finish(
        policy,
        "lemma5_gamma_ratio_grid",
        format!(
            "ln of (prod_(i=k+1)^(2k) Gamma(i/2+1)) / (prod_(i=2)^k Gamma(i/2+1)) is at least ln of sqrt(pi) 2^(k^2/2) e^(-(3k^2+4)/4) k^((2k^2-2k-1)/4) sqrt((2k)!/(k!(k+1)!)) for k = 2..={k_max} (verified on grid); minimum at k = {k}"
        ),
        Margin::Interval(m),
    )];

    // sqrt(2 pi) k^(k+1/2) e^(-k) <= k! <= e k^(k+1/2) e^(-k).
    let mut min = MinTracker::new();
    for k in 2..=k_max as i64 {
        let ln_fact = Fx::from_bigint(&factorial(k as u64), bits).ln(&c);
        let stirling = Fx::from_int(k, bits).ln(&c).mul_int(2 * k + 1).div_int(2).sub(&Fx::from_int(k, bits));
        let low = c.ln2.add(&lnpi).div_int(2).add(&stirling);
        let high = Fx::from_int(1, bits).add(&stirling);
        min.push(ln_fact.sub(&low), k);
        min.push(high.sub(&ln_fact), -k); // negative label marks the upper side
    }
    let (m, k) = min.take();
    let side = if k < 0 { "upper" } else { "lower" };
    out.push(finish(
        policy,
        "lemma5_stirling_sandwich",
        format!(
            "sqrt(2 pi) k^(k+1/2) e^(-k) <= k! <= e k^(k+1/2) e^(-k) for k = 2..={k_max}; tightest on the {side} side at k = {}",
            k.abs()
        ),
        Margin::Interval(m),
    ));

    // k! / sqrt((2k)!) > 2^(-k) k^(1/4).
    let mut min = MinTracker::new();
    for k in 2..=k_max as i64 {
        let m = Fx::from_bigint(&factorial(k as u64), bits)
            .ln(&c)
            .sub(&Fx::from_bigint(&factorial(2 * k as u64), bits).ln(&c).div_int(2))
            .add(&c.ln2.mul_int(k))
            .sub(&Fx::from_int(k, bits).ln(&c).div_int(4));
        min.push(m, k);
    }
    let (m, k) = min.take();
    out.push(finish(
        policy,
        "lemma5_factorial_ratio",
        format!("k!/sqrt((2k)!) > 2^(-k) k^(1/4) for k = 2..={k_max}; minimum at k = {k}"),
        Margin::Interval(m),
    ));
    out
}

/// 9(32k^2+24k-23)/(16k^3+72k^2-109k+34.5) <= 18/k for k >= 5, decided in
/// exact integer arithmetic after clearing the (positive) denominators:
/// the difference equals (2160k^2 - 3510k + 1242) / (k (32k^3+144k^2-218k+69)).
pub fn check_theorem3_rational(policy: &PrecisionPolicy) -> Vec<ClaimReport> {
    let mut min: Option<(f64, i64)> = None;
    for k in 5..=1000i64 {
        let kb = BigInt::from(k);
        // D = 2 (16k^3 + 72k^2 - 109k + 34.5), doubling clears the half-integer.
        let d = BigInt::from(32) * &kb * &kb * &kb + BigInt::from(144) * &kb * &kb
            - BigInt::from(218) * &kb
            + BigInt::from(69);
        let num = BigInt::from(2160) * &kb * &kb - BigInt::from(3510) * &kb + BigInt::from(1242);
        // Identity behind the reduction: 18 D - 18 k (32k^2+24k-23) = num.
        let cleared = BigInt::from(18) * &d
            - BigInt::from(18) * &kb * (BigInt::from(32) * &kb * &kb + BigInt::from(24) * &kb - BigInt::from(23));
        assert_eq!(cleared, num, "denominator-clearing identity must hold exactly");
        assert!(d > BigInt::from(0) && num > BigInt::from(0));
        let v = num.to_f64().expect("small numerator")
            / (&kb * &d).to_f64().expect("small denominator");
        if min.is_none() || v < min.unwrap().0 {
            min = Some((v, k));
        }
    }
    let (v, k) = min.unwrap();
    vec![finish(
        policy,
        "theorem3_exp18k_rational",
        format!(
            "9(32k^2+24k-23)/(16k^3+72k^2-109k+34.5) <= 18/k for k = 5..=1000, decided exactly after clearing denominators; smallest slack at k = {k}"
        ),
        Margin::Exact(v),
    )]
}

/// Runs every registered claim and returns all reports; never aborts early.
pub fn run_all(policy: &PrecisionPolicy) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    out.extend(check_phi_grid(policy));
    out.extend(check_rho_at_310(policy));
    out.extend(check_digamma_bound_grid(policy));
    out.extend(check_midpoint_lemma(policy, &default_midpoint_suite()));
    out.extend(check_f_convexity(policy));
    out.extend(check_integral_lemma3(policy, &default_integral_cases()));
    out.extend(check_theorem2_constants(policy));
    out.extend(check_corollary1(policy));
    out.extend(check_zeta_lemma(policy, 60));
    out.extend(check_gamma_lemma(policy, 40));
    out.extend(check_theorem3_rational(policy));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p256() -> PrecisionPolicy {
        PrecisionPolicy::highprec(256).unwrap()
    }

    fn by_id<'a>(reports: &'a [ClaimReport], id: &str) -> &'a ClaimReport {
        reports.iter().find(|r| r.claim_id == id).unwrap_or_else(|| panic!("missing claim {id}"))
    }

    fn assert_close(actual: f64, expected: f64, rel: f64, abs: f64) {
        let tol = abs.max(rel * expected.abs());
        assert!(
            (actual - expected).abs() <= tol,
            "actual {actual} expected {expected} tol {tol}"
        );
    }

    #[test]
    fn run_all_is_green_at_256_bits() {
        let reports = run_all(&p256());
        assert_eq!(reports.len(), 41);
        for r in &reports {
            assert_eq!(r.status, ClaimStatus::Pass, "claim {} failed: {:?}", r.claim_id, r);
            assert!(r.required_margin >= 0.0);
            assert!(r.computed_margin > r.required_margin, "margin rule violated for {}", r.claim_id);
        }
        let ids: HashSet<&str> = reports.iter().map(|r| r.claim_id.as_str()).collect();
        assert_eq!(ids.len(), reports.len(), "claim ids must be unique");
    }

    #[test]
    fn reports_are_deterministic() {
        let policy = PrecisionPolicy::highprec(128).unwrap();
        let a = serde_json::to_string(&run_all(&policy)).unwrap();
        let b = serde_json::to_string(&run_all(&policy)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn raising_precision_never_flips_a_pass() {
        let lo = run_all(&PrecisionPolicy::highprec(128).unwrap());
        let hi = run_all(&p256());
        assert_eq!(lo.len(), hi.len());
        for (l, h) in lo.iter().zip(hi.iter()) {
            assert_eq!(l.claim_id, h.claim_id);
            assert_eq!(l.status, ClaimStatus::Pass);
            assert_eq!(h.status, ClaimStatus::Pass);
            // Margins may only move by the lower run's error allowance.
            assert!(
                h.computed_margin + l.required_margin + 1e-15 >= l.computed_margin,
                "claim {}: margin shrank beyond the old error bound",
                l.claim_id
            );
        }
    }

    #[test]
    fn phi_grid_margin_matches_oracle() {
        let r = check_phi_grid(&p256());
        assert_eq!(r.len(), 2);
        assert_close(r[0].computed_margin, 0.3025722549959737, 1e-12, 0.0);
        assert!(r[0].statement.contains("t = 295.5"));
        assert_eq!(r[1].status, ClaimStatus::Pass);
        assert_eq!(r[1].precision_bits, 256);
    }

    #[test]
    fn rho_margins_match_oracle() {
        let r = check_rho_at_310(&p256());
        assert_close(by_id(&r, "theorem1_rho_310_gamma_057").computed_margin, 6.135682566987225e-8, 1e-9, 0.0);
        assert_close(by_id(&r, "theorem1_rho_310_gamma_full").computed_margin, 3.553900113121923e-5, 1e-9, 0.0);
        assert_close(by_id(&r, "theorem1_rho_prime_310").computed_margin, 1.3506112367867287e-5, 1e-9, 0.0);
        let mono = by_id(&r, "theorem1_rho_grid_monotone");
        assert_close(mono.computed_margin, 1.366041363343987e-5, 1e-9, 0.0);
        assert!(mono.statement.contains("t = 309"));
    }

    #[test]
    fn digamma_grid_margin_matches_oracle() {
        let r = check_digamma_bound_grid(&p256());
        let grid = by_id(&r, "digamma_upper_bound_grid");
        assert_close(grid.computed_margin, 2.6123978541337556e-5, 1e-9, 0.0);
        assert!(grid.statement.contains("t = 1000"));
        assert_eq!(by_id(&r, "digamma_upper_bound_t0_identity").status, ClaimStatus::Pass);
    }

    #[test]
    fn midpoint_suite_margins_match_closed_forms() {
        let r = check_midpoint_lemma(&p256(), &default_midpoint_suite());
        assert_close(by_id(&r, "lemma1_midpoint_exp").computed_margin, 0.06956055775891709, 0.0, 1e-10);
        assert_close(by_id(&r, "lemma1_midpoint_square").computed_margin, 2.0 / 3.0, 0.0, 1e-10);
        assert_close(by_id(&r, "lemma1_midpoint_recip").computed_margin, 0.09861228866810968, 0.0, 1e-10);
        assert_close(by_id(&r, "lemma1_midpoint_lemma2f").computed_margin, 0.5115031921206215, 0.0, 1e-9);
        let lin = by_id(&r, "lemma1_midpoint_linear");
        assert_eq!(lin.status, ClaimStatus::Pass);
        assert!(lin.computed_margin > 0.9e-10, "affine case should sit at the tolerance");
    }

    #[test]
    fn concave_integrand_fails_the_midpoint_claim() {
        let case = ConvexCase { name: "concave", a: 0.0, b: 2.0, f: |t| -t * t, strictly_convex: true };
        let r = check_midpoint_lemma(&p256(), &[case]);
        assert_eq!(r[0].status, ClaimStatus::Fail);
        assert_close(r[0].computed_margin, -2.0 / 3.0, 0.0, 1e-10);
    }

    #[test]
    fn convexity_witness_margins_match_oracle() {
        let r = check_f_convexity(&p256());
        assert_eq!(r.len(), 5);
        let grid = by_id(&r, "lemma2_g_positive_grid");
        assert_close(grid.computed_margin, 486.1980791931356, 1e-12, 0.0);
        assert!(grid.statement.contains("10^(-6)"));
        assert_close(by_id(&r, "lemma2_g_at_zero").computed_margin, 486.19802517113123, 1e-12, 0.0);
        assert_close(by_id(&r, "lemma2_g_prime_at_zero").computed_margin, 54.022002796792364, 1e-12, 0.0);
        let spot = by_id(&r, "lemma2_g_prime_spot");
        assert_close(spot.computed_margin, 54.022002796792364, 1e-12, 0.0);
        assert!(spot.statement.contains("t = 0"));
        let fpp = by_id(&r, "lemma2_fpp_central_diff");
        // Central difference of f'' at the flattest grid point t = 1e4.
        assert_close(fpp.computed_margin, 1.1151329015761251e-11, 1e-4, 0.0);
        assert_eq!(fpp.precision_bits, 53);
    }

    #[test]
    fn lemma3_margins_match_oracle() {
        let r = check_integral_lemma3(&p256(), &default_integral_cases());
        assert_eq!(r.len(), 8);
        assert_close(by_id(&r, "lemma3_theorem2_n109").computed_margin, 1.4804045593360652e-7, 0.0, 1e-10);
        assert_close(by_id(&r, "lemma3_theorem2_n500").computed_margin, 4.296962321653411e-6, 0.0, 1e-10);
        assert_close(by_id(&r, "lemma3_theorem2_n1000").computed_margin, 4.307355640917802e-6, 0.0, 1e-10);
        assert_close(by_id(&r, "lemma3_theorem3_k5").computed_margin, 0.07752906579056439, 0.0, 1e-9);
        assert_close(by_id(&r, "lemma3_theorem3_k50").computed_margin, 6.897267402485981e-5, 0.0, 1e-10);
        assert_close(by_id(&r, "lemma3_theorem3_k500").computed_margin, 1.0393319264391099e-8, 0.0, 1e-10);
        assert_eq!(by_id(&r, "lemma3_degenerate").status, ClaimStatus::Pass);
        let orient = by_id(&r, "lemma3_orientation_erratum");
        assert_eq!(orient.status, ClaimStatus::Pass);
        // By antisymmetry the violation equals the k5 holding margin.
        assert_close(orient.computed_margin, 0.07752906579056439, 0.0, 1e-9);
    }

    #[test]
    fn theorem2_margins_match_oracle() {
        let r = check_theorem2_constants(&p256());
        let ident = by_id(&r, "theorem2_product_2_8_identity");
        assert_eq!(ident.status, ClaimStatus::Pass);
        assert_close(ident.computed_margin, 1e-12, 1e-3, 0.0);
        assert_close(by_id(&r, "theorem2_product_9_108").computed_margin, 0.0017939098372002338, 1e-10, 0.0);
        assert_close(by_id(&r, "theorem2_assembled_constant").computed_margin, 0.00883702663953775, 1e-10, 0.0);
    }

    #[test]
    fn corollary1_margins_match_oracle() {
        let r = check_corollary1(&p256());
        assert_eq!(r.len(), 5);
        let con1 = by_id(&r, "corollary1_con1_erratum");
        assert_close(con1.computed_margin, 1.7403471621530253e-8, 1e-9, 0.0);
        assert!(con1.statement.contains("erratum"));
        assert_close(by_id(&r, "corollary1_f12_bracket").computed_margin, 5.620758775145796e-7, 1e-9, 0.0);
        assert_close(by_id(&r, "corollary1_h_sign_change").computed_margin, 1.7959101097305978, 1e-12, 0.0);
        let fmax = by_id(&r, "corollary1_f_max_at_12");
        assert_close(fmax.computed_margin, 2.4686673026349367e-5, 1e-9, 0.0);
        assert!(fmax.statement.contains("x = 11"));
        assert_close(by_id(&r, "corollary1_downstream_margin").computed_margin, 1.481796579272945e-6, 1e-9, 0.0);
    }

    #[test]
    fn zeta_lemma_margins_match_oracle() {
        let r = check_zeta_lemma(&p256(), 60);
        let grid = by_id(&r, "lemma4_zeta_ratio_grid");
        assert_close(grid.computed_margin, 0.3539974530358948, 1e-12, 0.0);
        assert!(grid.statement.contains("k = 3"));
        assert_close(by_id(&r, "lemma4_zeta2_below_2").computed_margin, 0.35506593315177354, 1e-12, 0.0);
        assert_close(by_id(&r, "lemma4_zeta3_below_pi2_over_8").computed_margin, 0.03164364697657554, 1e-12, 0.0);
    }

    #[test]
    fn gamma_lemma_margins_match_oracle() {
        let r = check_gamma_lemma(&p256(), 40);
        let grid = by_id(&r, "lemma5_gamma_ratio_grid");
        assert_close(grid.computed_margin, 2.152736771288342, 1e-12, 0.0);
        assert!(grid.statement.contains("k = 2"));
        let stirling = by_id(&r, "lemma5_stirling_sandwich");
        assert_close(stirling.computed_margin, 0.0020832899383024218, 1e-12, 0.0);
        assert!(stirling.statement.contains("lower side at k = 40"));
        let ratio = by_id(&r, "lemma5_factorial_ratio");
        assert_close(ratio.computed_margin, 0.2877449307798717, 1e-12, 0.0);
        assert!(ratio.statement.contains("k = 40"));
    }

    #[test]
    fn theorem3_rational_margin_matches_oracle() {
        let r = check_theorem3_rational(&p256());
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].precision_bits, 0);
        assert_eq!(r[0].required_margin, 0.0);
        assert_close(r[0].computed_margin, 6.708890812446604e-5, 1e-12, 0.0);
        assert!(r[0].statement.contains("k = 1000"));
    }

    #[test]
    fn precision_bits_reflect_evaluation_regime() {
        let reports = run_all(&PrecisionPolicy::highprec(128).unwrap());
        for r in &reports {
            let expected = match r.claim_id.as_str() {
                "theorem3_exp18k_rational" => 0,
                id if id.starts_with("lemma1_midpoint_") => 53,
                id if id.starts_with("lemma3_") => 53,
                "lemma2_fpp_central_diff" | "theorem2_product_2_8_identity" => 53,
                _ => 128,
            };
            assert_eq!(r.precision_bits, expected, "claim {}", r.claim_id);
        }
    }

    #[test]
    fn fast_policy_still_uses_sound_intervals() {
        // A fast-mode policy only lowers the interval floor to 64 bits; the
        // verdicts are identical to a highprec run.
        let fast = run_all(&PrecisionPolicy::fast64());
        assert_eq!(fast.len(), 41);
        for r in &fast {
            assert_eq!(r.status, ClaimStatus::Pass, "claim {} failed under fast64", r.claim_id);
        }
        let grid = by_id(&fast, "theorem1_phi_grid");
        assert_eq!(grid.precision_bits, 64);
    }
}
