//! Fixed-point interval arithmetic on big integers.
//!
//! A value is an interval `[lo, hi]·2^{-bits}` guaranteed to contain the exact
//! real it stands for. Every operation rounds outward, so enclosures survive
//! arbitrary composition, and a strict inequality between two results is
//! certified whenever the intervals do not overlap. Transcendental functions
//! (ln, exp, powers) widen their result by an explicit series tail bound, so
//! the enclosure property needs no unproven accuracy assumptions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Interval `[lo, hi]·2^{-bits}` with `lo ≤ hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fx {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

/// floor(x / 2^sh). num-bigint's `>>` rounds toward negative infinity, which
/// is exactly floor; the unit tests pin that semantics.
fn floor_shr(x: &BigInt, sh: u32) -> BigInt {
    x >> sh
}

/// ceil(x / 2^sh) = -floor(-x / 2^sh).
fn ceil_shr(x: &BigInt, sh: u32) -> BigInt {
    -((-x) >> sh)
}

/// floor(num/den) for den > 0.
fn floor_div(num: &BigInt, den: &BigInt) -> BigInt {
    num.div_floor(den)
}

/// ceil(num/den) for den > 0.
fn ceil_div(num: &BigInt, den: &BigInt) -> BigInt {
    num.div_ceil(den)
}

/// Converts a mantissa at scale 2^{-bits} to the nearest-ish f64. Display
/// only: certification never goes through floating point.
fn mantissa_to_f64(m: &BigInt, bits: u32) -> f64 {
    if m.is_zero() {
        return 0.0;
    }
    let nb = m.bits();
    if nb <= 900 {
        match m.to_f64() {
            Some(v) => v * (2.0f64).powi(-(bits as i32)),
            None => f64::NAN,
        }
    } else {
        // Take the top 80 bits and track the exponent separately.
        let sh = (nb - 80) as u32;
        let top: BigInt = m >> sh;
        let v = top.to_f64().unwrap_or(f64::NAN);
        let ex = sh as i64 - bits as i64;
        if ex > 1020 {
            if v > 0.0 {
                f64::INFINITY
            } else {
                f64::NEG_INFINITY
            }
        } else {
            v * (2.0f64).powi(ex as i32)
        }
    }
}

impl Fx {
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn zero(bits: u32) -> Fx {
        Fx { lo: BigInt::zero(), hi: BigInt::zero(), bits }
    }

    pub fn from_int(v: i64, bits: u32) -> Fx {
        let m = BigInt::from(v) << bits;
        Fx { lo: m.clone(), hi: m, bits }
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> Fx {
        let m = v << bits;
        Fx { lo: m.clone(), hi: m, bits }
    }

    /// Exact rational num/den as a one-ulp interval. `den` may be negative.
    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u32) -> Fx {
        assert!(!den.is_zero(), "from_ratio: zero denominator");
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        let scaled = num << bits;
        let lo = floor_div(&scaled, &den);
        let hi = ceil_div(&scaled, &den);
        Fx { lo, hi, bits }
    }

    pub fn from_ratio_i64(num: i64, den: i64, bits: u32) -> Fx {
        Fx::from_ratio(&BigInt::from(num), &BigInt::from(den), bits)
    }

    /// Decimal literal `[-]ddd[.ddd]`, embedded exactly (as a rational) and
    /// rounded outward by at most one ulp.
    pub fn from_decimal(s: &str, bits: u32) -> Fx {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        let digits: String = format!("{int_part}{frac_part}");
        assert!(
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()),
            "from_decimal: malformed literal {s:?}"
        );
        let mut num: BigInt = digits.parse().expect("decimal digits");
        if neg {
            num = -num;
        }
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        Fx::from_ratio(&num, &den, bits)
    }

    /// Embeds an f64 exactly (every finite f64 is a dyadic rational).
    pub fn from_f64(x: f64, bits: u32) -> Fx {
        assert!(x.is_finite(), "from_f64: non-finite input");
        let b = x.to_bits();
        let sign = if b >> 63 == 1 { -1 } else { 1 };
        let raw_exp = ((b >> 52) & 0x7ff) as i64;
        let raw_man = b & 0xf_ffff_ffff_ffff;
        let (man, exp) = if raw_exp == 0 {
            (raw_man, -1074i64)
        } else {
            (raw_man | (1u64 << 52), raw_exp - 1075)
        };
        let v = BigInt::from(sign) * BigInt::from(man);
        let sh = exp + bits as i64;
        if sh >= 0 {
            let m = v << (sh as u32);
            Fx { lo: m.clone(), hi: m, bits }
        } else {
            let k = (-sh) as u32;
            Fx { lo: floor_shr(&v, k), hi: ceil_shr(&v, k), bits }
        }
    }

    /// The exact lower endpoint as a point interval.
    pub fn lo_point(&self) -> Fx {
        Fx { lo: self.lo.clone(), hi: self.lo.clone(), bits: self.bits }
    }

    /// The exact upper endpoint as a point interval.
    pub fn hi_point(&self) -> Fx {
        Fx { lo: self.hi.clone(), hi: self.hi.clone(), bits: self.bits }
    }

    pub fn add(&self, rhs: &Fx) -> Fx {
        debug_assert_eq!(self.bits, rhs.bits);
        Fx { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi, bits: self.bits }
    }

    pub fn neg(&self) -> Fx {
        Fx { lo: -&self.hi, hi: -&self.lo, bits: self.bits }
    }

    pub fn sub(&self, rhs: &Fx) -> Fx {
        debug_assert_eq!(self.bits, rhs.bits);
        Fx { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo, bits: self.bits }
    }

    pub fn mul(&self, rhs: &Fx) -> Fx {
        debug_assert_eq!(self.bits, rhs.bits);
        let cands = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let min = cands.iter().min().unwrap();
        let max = cands.iter().max().unwrap();
        Fx {
            lo: floor_shr(min, self.bits),
            hi: ceil_shr(max, self.bits),
            bits: self.bits,
        }
    }

    /// Exact multiplication by an integer.
    pub fn mul_int(&self, k: i64) -> Fx {
        let k = BigInt::from(k);
        let a = &self.lo * &k;
        let b = &self.hi * &k;
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Fx { lo, hi, bits: self.bits }
    }

    /// Division by an interval that does not contain zero.
    pub fn div(&self, rhs: &Fx) -> Fx {
        debug_assert_eq!(self.bits, rhs.bits);
        assert!(
            rhs.lo.is_positive() || rhs.hi.is_negative(),
            "div: denominator interval contains zero"
        );
        let num_lo = &self.lo << self.bits;
        let num_hi = &self.hi << self.bits;
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for num in [&num_lo, &num_hi] {
            for den in [&rhs.lo, &rhs.hi] {
                let (n, d) = if den.is_negative() {
                    (-num, -den)
                } else {
                    (num.clone(), den.clone())
                };
                let f = floor_div(&n, &d);
                let c = ceil_div(&n, &d);
                lo = Some(match lo {
                    Some(v) => v.min(f),
                    None => f,
                });
                hi = Some(match hi {
                    Some(v) => v.max(c),
                    None => c,
                });
            }
        }
        Fx { lo: lo.unwrap(), hi: hi.unwrap(), bits: self.bits }
    }

    pub fn div_int(&self, k: i64) -> Fx {
        assert!(k != 0);
        let kb = BigInt::from(k.abs());
        let (a, b) = if k > 0 {
            (&self.lo, &self.hi)
        } else {
            (&self.hi, &self.lo)
        };
        let (a, b) = if k > 0 {
            (a.clone(), b.clone())
        } else {
            (-a, -b)
        };
        Fx { lo: floor_div(&a, &kb), hi: ceil_div(&b, &kb), bits: self.bits }
    }

    /// Exact multiplication by 2^k.
    pub fn mul_2exp(&self, k: i64) -> Fx {
        if k >= 0 {
            Fx { lo: &self.lo << (k as u32), hi: &self.hi << (k as u32), bits: self.bits }
        } else {
            let s = (-k) as u32;
            Fx { lo: floor_shr(&self.lo, s), hi: ceil_shr(&self.hi, s), bits: self.bits }
        }
    }

    /// Square root; requires a nonnegative interval.
    pub fn sqrt(&self) -> Fx {
        assert!(!self.lo.is_negative(), "sqrt: negative interval");
        let lo_s = (&self.lo << self.bits).sqrt();
        let hi_scaled = &self.hi << self.bits;
        let s = hi_scaled.sqrt();
        let hi_s = if &s * &s == hi_scaled { s } else { s + 1 };
        Fx { lo: lo_s, hi: hi_s, bits: self.bits }
    }

    /// Widens both endpoints outward by `ulps` units of 2^{-bits}.
    pub fn widen(&self, ulps: &BigInt) -> Fx {
        debug_assert!(!ulps.is_negative());
        Fx { lo: &self.lo - ulps, hi: &self.hi + ulps, bits: self.bits }
    }

    pub fn hull(a: &Fx, b: &Fx) -> Fx {
        debug_assert_eq!(a.bits, b.bits);
        Fx {
            lo: a.lo.clone().min(b.lo.clone()),
            hi: a.hi.clone().max(b.hi.clone()),
            bits: a.bits,
        }
    }

    /// Largest absolute mantissa; an upper bound on |value|·2^bits.
    pub(crate) fn abs_hi_mantissa(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    /// Integer power by repeated squaring.
    pub fn pow_int(&self, e: u64) -> Fx {
        let mut result = Fx::from_int(1, self.bits);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Natural logarithm; requires a strictly positive interval.
    pub fn ln(&self, c: &Consts) -> Fx {
        assert!(self.lo.is_positive(), "ln: non-positive interval");
        let a = ln_point(&self.lo, self.bits, c);
        let b = ln_point(&self.hi, self.bits, c);
        Fx::hull(&a, &b)
    }

    pub fn exp(&self, c: &Consts) -> Fx {
        let a = exp_point(&self.lo, self.bits, c);
        let b = exp_point(&self.hi, self.bits, c);
        Fx::hull(&a, &b)
    }

    /// x^y = exp(y·ln x); requires x > 0.
    pub fn powf(&self, y: &Fx, c: &Consts) -> Fx {
        self.ln(c).mul(y).exp(c)
    }

    /// Certified strict comparison: every point of self exceeds every point
    /// of rhs.
    pub fn certainly_gt(&self, rhs: &Fx) -> bool {
        self.lo > rhs.hi
    }

    pub fn certainly_lt(&self, rhs: &Fx) -> bool {
        self.hi < rhs.lo
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn lo_mantissa(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi_mantissa(&self) -> &BigInt {
        &self.hi
    }

    pub fn width_mantissa(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn lo_f64(&self) -> f64 {
        mantissa_to_f64(&self.lo, self.bits)
    }

    pub fn hi_f64(&self) -> f64 {
        mantissa_to_f64(&self.hi, self.bits)
    }

    pub fn mid_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / 2;
        mantissa_to_f64(&mid, self.bits)
    }

    pub fn width_f64(&self) -> f64 {
        mantissa_to_f64(&self.width_mantissa(), self.bits)
    }
}

/// atanh(num/den) for |num/den| < 0.34, as an enclosure. Series
/// Σ z^{2i+1}/(2i+1); once the power term falls to ≤ 16 ulp the remaining
/// tail is < 16·z²/(1-z²) < 3 ulp, covered by a 16-ulp widening.
fn atanh_ratio(num: &BigInt, den: &BigInt, bits: u32) -> Fx {
    let z = Fx::from_ratio(num, den, bits);
    let z2 = z.mul(&z);
    let mut p = z.clone();
    let mut sum = z.clone();
    let mut i: i64 = 1;
    let threshold = BigInt::from(16);
    loop {
        p = p.mul(&z2);
        sum = sum.add(&p.div_int(2 * i + 1));
        if p.abs_hi_mantissa() <= threshold {
            break;
        }
        i += 1;
        assert!(i < 1_000_000, "atanh series failed to converge");
    }
    sum.widen(&threshold)
}

/// arctan(1/q) for integer q ≥ 2, as an enclosure. Alternating series, so the
/// tail is bounded by the first omitted term.
fn atan_inv(q: i64, bits: u32) -> Fx {
    let x = Fx::from_ratio_i64(1, q, bits);
    let x2 = x.mul(&x);
    let mut p = x.clone();
    let mut sum = x.clone();
    let mut i: i64 = 1;
    let threshold = BigInt::from(16);
    loop {
        p = p.mul(&x2);
        let term = p.div_int(2 * i + 1);
        if i % 2 == 1 {
            sum = sum.sub(&term);
        } else {
            sum = sum.add(&term);
        }
        if p.abs_hi_mantissa() <= threshold {
            break;
        }
        i += 1;
        assert!(i < 1_000_000, "atan series failed to converge");
    }
    sum.widen(&threshold)
}

/// ln of the exact point m·2^{-bits}, m > 0. Reduce to m' ∈ [0.75, 1.5) with
/// value = m'·2^k, then ln m' = 2·atanh((m'-1)/(m'+1)) with |z| ≤ 0.2.
fn ln_point(m: &BigInt, bits: u32, c: &Consts) -> Fx {
    assert!(m.is_positive());
    let mut k = m.bits() as i64 - 1 - bits as i64; // value ∈ [2^k, 2^{k+1})
    // If value·2^{-k} ≥ 1.5, shift once more so m' ∈ [0.75, 1).
    let sh = bits as i64 + k;
    debug_assert!(sh >= 0);
    let three_halves: BigInt = BigInt::from(3) << ((sh - 1).max(0) as u32);
    if sh >= 1 && *m >= three_halves {
        k += 1;
    }
    let sh = bits as i64 + k;
    let one: BigInt = BigInt::from(1) << (sh as u32);
    let num = m - &one;
    let den = m + &one;
    let ln_m = atanh_ratio(&num, &den, bits).mul_int(2);
    ln_m.add(&c.ln2.mul_int(k))
}

/// exp of the exact point m·2^{-bits}. Reduce r = x - k·ln2 with |r| ≤ 0.36,
/// run the Taylor series, then shift by 2^k exactly.
fn exp_point(m: &BigInt, bits: u32, c: &Consts) -> Fx {
    let x = Fx { lo: m.clone(), hi: m.clone(), bits };
    let approx = mantissa_to_f64(m, bits);
    assert!(approx.is_finite(), "exp: argument too large");
    let k = (approx / std::f64::consts::LN_2).round() as i64;
    let r = x.sub(&c.ln2.mul_int(k));
    debug_assert!(r.lo_f64() > -0.5 && r.hi_f64() < 0.5);
    let mut term = Fx::from_int(1, bits);
    let mut sum = Fx::from_int(1, bits);
    let mut i: i64 = 1;
    let threshold = BigInt::from(16);
    loop {
        term = term.mul(&r).div_int(i);
        sum = sum.add(&term);
        if term.abs_hi_mantissa() <= threshold {
            break;
        }
        i += 1;
        assert!(i < 1_000_000, "exp series failed to converge");
    }
    // Tail ≤ |term|·Σ (|r|/(i+1))^j ≤ 16·0.36/(1-0.36) < 16 ulp.
    sum.widen(&threshold).mul_2exp(k)
}

/// Shared constants at a fixed precision.
pub struct Consts {
    pub bits: u32,
    pub pi: Fx,
    pub ln2: Fx,
    pub e: Fx,
    /// Euler–Mascheroni constant γ.
    pub euler: Fx,
}

/// γ to 340 decimal digits, truncated (the true value lies in
/// [literal, literal + 10^-340)).
const EULER_DIGITS: &str = "0.5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917467495146314472498070824809605040144865428362241739976449235362535003337429373377376739427925952582470949160087352039481656708532331517766115286211995015079847937450857057400299213547861466940296043254215190587755352673313992540129674205137541395";

impl Consts {
    fn new(bits: u32) -> Consts {
        // Work at extra guard precision, then round outward to `bits`.
        let gb = bits + 32;
        // Machin: π = 16·atan(1/5) - 4·atan(1/239).
        let pi_g = atan_inv(5, gb).mul_int(16).sub(&atan_inv(239, gb).mul_int(4));
        // ln 2 = 2·atanh(1/3).
        let ln2_g = atanh_ratio(&BigInt::from(1), &BigInt::from(3), gb).mul_int(2);
        let pi = round_to(&pi_g, bits);
        let ln2 = round_to(&ln2_g, bits);
        // γ from the stored literal; truncation makes the +1-ulp digit an
        // upper endpoint.
        let lo_lit = Fx::from_decimal(EULER_DIGITS, bits);
        let digits_after = EULER_DIGITS.len() - 2; // "0."
        let step = BigInt::from(10u32).pow(digits_after as u32);
        let hi_lit = Fx::from_ratio(
            &(EULER_DIGITS[2..].parse::<BigInt>().unwrap() + 1),
            &step,
            bits,
        );
        let euler = Fx::hull(&lo_lit, &hi_lit);
        let mut c = Consts {
            bits,
            pi,
            ln2,
            e: Fx::from_int(0, bits),
            euler,
        };
        c.e = exp_point(&(BigInt::from(1) << bits), bits, &c);
        c
    }
}

fn round_to(x: &Fx, bits: u32) -> Fx {
    assert!(x.bits >= bits);
    let sh = x.bits - bits;
    Fx { lo: floor_shr(&x.lo, sh), hi: ceil_shr(&x.hi, sh), bits }
}

/// Cached per-precision constants.
pub fn consts(bits: u32) -> Arc<Consts> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Consts>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    map.entry(bits).or_insert_with(|| Arc::new(Consts::new(bits))).clone()
}

/// Exact rational with positive reduced denominator; only what the Bernoulli
/// recurrence needs.
#[derive(Clone, Debug)]
pub(crate) struct Rat {
    pub num: BigInt,
    pub den: BigInt,
}

impl Rat {
    fn new(num: BigInt, den: BigInt) -> Rat {
        assert!(!den.is_zero());
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        if g.is_zero() {
            Rat { num, den }
        } else {
            Rat { num: num / &g, den: den / g }
        }
    }

    fn zero() -> Rat {
        Rat { num: BigInt::zero(), den: BigInt::from(1) }
    }

    fn add(&self, rhs: &Rat) -> Rat {
        Rat::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }

    fn mul_ratio(&self, num: &BigInt, den: &BigInt) -> Rat {
        Rat::new(&self.num * num, &self.den * den)
    }

    pub fn to_fx(&self, bits: u32) -> Fx {
        Fx::from_ratio(&self.num, &self.den, bits)
    }
}

/// Bernoulli numbers B_0..B_n (B_1 = -1/2 convention) as exact rationals,
/// via the recurrence Σ_{j=0}^{m} C(m+1, j)·B_j = 0.
pub(crate) fn bernoulli(n: usize) -> Vec<Rat> {
    static CACHE: OnceLock<Mutex<Vec<Rat>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![Rat::new(BigInt::from(1), BigInt::from(1))]));
    let mut v = cache.lock().unwrap();
    while v.len() <= n {
        let m = v.len(); // computing B_m
        // C(m+1, j) running binomial.
        let mut binom = BigInt::from(1);
        let mut acc = Rat::zero();
        for (j, bj) in v.iter().enumerate() {
            // binom = C(m+1, j)
            acc = acc.add(&bj.mul_ratio(&binom, &BigInt::from(1)));
            binom = binom * BigInt::from((m + 1 - j) as u64) / BigInt::from((j + 1) as u64);
        }
        // C(m+1, m)·B_m = -acc  →  B_m = -acc/(m+1)
        let bm = acc.mul_ratio(&BigInt::from(-1), &BigInt::from((m + 1) as u64));
        v.push(bm);
    }
    v[..=n].to_vec()
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigInt {
    let mut f = BigInt::from(1);
    for i in 2..=n {
        f *= i;
    }
    f
}

/// Digamma ψ(x) as an enclosure, for an exact positive interval argument.
///
/// Shifts the argument up until it exceeds a precision-dependent threshold,
/// then applies the asymptotic series ψ(X) = ln X - 1/(2X) - Σ B_{2j}/(2j·X^{2j}).
/// For real positive X the series is enveloping, so the remainder after N
/// terms is bounded in absolute value by the first omitted term; the result
/// is widened by that bound.
pub fn digamma_fx(x: &Fx, c: &Consts) -> Fx {
    assert!(x.certainly_positive(), "digamma: non-positive interval");
    let bits = c.bits;
    let threshold = 16 + (bits as i64) / 3;
    let one = Fx::from_int(1, bits);
    let mut shift_sum = Fx::zero(bits);
    let mut xx = x.clone();
    while xx.lo_f64() < threshold as f64 {
        shift_sum = shift_sum.add(&one.div(&xx));
        xx = xx.add(&one);
    }
    let n_terms = (20 + bits / 6) as usize;
    let bern = bernoulli(2 * n_terms + 2);
    let x2 = xx.mul(&xx);
    let mut result = xx.ln(c).sub(&one.div(&xx.mul_int(2)));
    let mut xpow = x2.clone(); // X^{2j}
    for j in 1..=n_terms {
        let term = bern[2 * j].to_fx(bits).div(&xpow.mul_int(2 * j as i64));
        result = result.sub(&term);
        if j < n_terms {
            xpow = xpow.mul(&x2);
        }
    }
    // First omitted term bound: |B_{2N+2}| / ((2N+2)·X^{2N+2}).
    xpow = xpow.mul(&x2);
    let rem = bern[2 * n_terms + 2]
        .to_fx(bits)
        .div(&xpow.mul_int(2 * (n_terms as i64) + 2));
    let rem_ulps = rem.abs_hi_mantissa() + 1;
    result.widen(&rem_ulps).sub(&shift_sum)
}

/// ln Γ(x) as an enclosure, for an exact positive interval argument.
///
/// Same shift-then-asymptotic-series construction as [`digamma_fx`], using
/// the Stirling series ln Γ(X) = (X-1/2)·ln X - X + ln(2π)/2
/// + Σ B_{2j}/((2j-1)(2j)·X^{2j-1}), whose remainder is likewise bounded by
/// the first omitted term for real positive X.
pub fn ln_gamma_fx(x: &Fx, c: &Consts) -> Fx {
    assert!(x.certainly_positive(), "ln_gamma: non-positive interval");
    let bits = c.bits;
    let threshold = 16 + (bits as i64) / 3;
    let one = Fx::from_int(1, bits);
    let mut shift_sum = Fx::zero(bits);
    let mut xx = x.clone();
    while xx.lo_f64() < threshold as f64 {
        shift_sum = shift_sum.add(&xx.ln(c));
        xx = xx.add(&one);
    }
    let n_terms = (20 + bits / 6) as usize;
    let bern = bernoulli(2 * n_terms + 2);
    let half = Fx::from_ratio_i64(1, 2, bits);
    let ln_2pi_half = c.pi.mul_int(2).ln(c).div_int(2);
    let mut result = xx
        .sub(&half)
        .mul(&xx.ln(c))
        .sub(&xx)
        .add(&ln_2pi_half);
    let x2 = xx.mul(&xx);
    let mut xpow = xx.clone(); // X^{2j-1}
    for j in 1..=n_terms {
        let jj = j as i64;
        let term = bern[2 * j].to_fx(bits).div(&xpow.mul_int((2 * jj - 1) * 2 * jj));
        result = result.add(&term);
        if j < n_terms {
            xpow = xpow.mul(&x2);
        }
    }
    xpow = xpow.mul(&x2);
    let nn = n_terms as i64;
    let rem = bern[2 * n_terms + 2]
        .to_fx(bits)
        .div(&xpow.mul_int((2 * nn + 1) * (2 * nn + 2)));
    let rem_ulps = rem.abs_hi_mantissa() + 1;
    result.widen(&rem_ulps).sub(&shift_sum)
}
