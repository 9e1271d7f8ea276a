//! Size reduction, LLL, KZ reduction, and the reducedness predicates.
//!
//! KZ reduction here is constructive: stage i enumerates the exact shortest
//! vector of the trailing block R_{i:n,i:n} and, when that beats |r_ii|,
//! lifts the witness to the front of the trailing block through an exact
//! unimodular completion. Stages never disturb earlier diagonals (they only
//! recombine trailing columns), so a single pass plus a final size reduction
//! satisfies both reducedness conditions.

use super::{qr, svp_enum, BasisMatrix, RFactor, ReductionResult, Unimodular, ENUM_CAP};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// Conventional Lovász parameter.
pub const DEFAULT_DELTA: f64 = 0.99;
/// Dimension cap for KZ reduction and the reducedness predicates.
pub const KZ_CAP: usize = 12;

/// Relative slack under which a trailing shortest vector is considered to
/// tie |r_ii|; ties skip the lift so already-reduced bases pass through
/// bit-for-bit unchanged.
const TIE_SLACK: f64 = 1e-12;

/// Size-reduces an R factor in place: afterwards every off-diagonal entry
/// satisfies |r_ij| ≤ |r_ii|/2 up to float rounding, the diagonal is
/// untouched, and `transform` accumulates the same integer column
/// operations.
pub fn size_reduce(r: &mut RFactor, transform: &mut Unimodular) {
    let n = r.dim();
    debug_assert_eq!(transform.dim(), n);
    for i in 1..n {
        for j in (0..i).rev() {
            let mu = (r.get(j, i) / r.get(j, j)).round();
            if mu != 0.0 {
                debug_assert!(mu.abs() < 9.0e15, "column multiplier overflows i64");
                for row in 0..=j {
                    let v = r.get(row, i) - mu * r.get(row, j);
                    r.set(row, i, v);
                }
                transform.col_submul(i, j, &BigInt::from(mu as i64));
            }
        }
    }
}

/// Gram–Schmidt data for the working basis: μ coefficients and squared
/// orthogonalized norms. Recomputed from scratch after every basis change —
/// wasteful asymptotically, but exact-shaped and cheap at rank ≤ 12.
struct GramSchmidt {
    mu: Vec<Vec<f64>>,
    bsq: Vec<f64>,
}

impl GramSchmidt {
    fn compute(b: &BasisMatrix) -> Result<Self> {
        let (m, n) = (b.rows(), b.cols());
        let scale = (0..n).map(|j| b.column_norm(j)).fold(0.0f64, f64::max);
        let mut bstar: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut mu = vec![vec![0.0; n]; n];
        let mut bsq = vec![0.0; n];
        for i in 0..n {
            let mut v: Vec<f64> = (0..m).map(|row| b.get(row, i)).collect();
            for j in 0..i {
                let dot: f64 = (0..m).map(|row| v[row] * bstar[j][row]).sum();
                mu[i][j] = dot / bsq[j];
                for row in 0..m {
                    v[row] -= mu[i][j] * bstar[j][row];
                }
            }
            bsq[i] = v.iter().map(|x| x * x).sum();
            if bsq[i].sqrt() <= 1e-10 * scale {
                return Err(Error::RankDeficient(format!(
                    "column {} lies in the span of its predecessors",
                    i + 1
                )));
            }
            bstar.push(v);
        }
        Ok(GramSchmidt { mu, bsq })
    }
}

/// Shared tail of the reduction paths: re-factor, check invariants, and
/// attach the shortest length (exact via enumeration when the rank allows,
/// otherwise the minimum reduced column norm).
fn finalize(
    original: &BasisMatrix,
    reduced: BasisMatrix,
    transform: Unimodular,
    original_det: f64,
) -> Result<ReductionResult> {
    let (_, r) = qr(&reduced)?;
    debug_assert!(transform.is_unimodular());
    debug_assert!((r.det_abs() - original_det).abs() <= 1e-8 * original_det);
    debug_assert!({
        let rebuilt = original.mul_unimodular(&transform).unwrap();
        let scale = (0..reduced.cols())
            .map(|j| reduced.column_norm(j))
            .fold(1.0f64, f64::max);
        let mut worst: f64 = 0.0;
        for i in 0..reduced.rows() {
            for j in 0..reduced.cols() {
                worst = worst.max((rebuilt.get(i, j) - reduced.get(i, j)).abs());
            }
        }
        worst <= 1e-6 * scale
    });
    let shortest = if reduced.cols() <= ENUM_CAP {
        svp_enum(&r)?.length
    } else {
        reduced.min_column_norm()
    };
    Ok(ReductionResult {
        reduced_basis: reduced,
        transform,
        r,
        shortest_length: shortest,
    })
}

/// LLL reduction with Lovász parameter delta ∈ (0.25, 1]; [`DEFAULT_DELTA`]
/// is the conventional 0.99. Output is size-reduced and satisfies
/// δ·r²_{i,i} ≤ r²_{i,i+1} + r²_{i+1,i+1} for every i.
pub fn lll(basis: &BasisMatrix, delta: f64) -> Result<ReductionResult> {
    if !(delta > 0.25 && delta <= 1.0) {
        return Err(Error::Domain(format!(
            "delta must lie in (0.25, 1], got {delta}"
        )));
    }
    let original_det = qr(basis)?.1.det_abs();
    let n = basis.cols();
    let mut b = basis.clone();
    let mut u = Unimodular::identity(n);
    let mut gs = GramSchmidt::compute(&b)?;
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let mu = gs.mu[k][j].round();
            if mu != 0.0 {
                debug_assert!(mu.abs() < 9.0e15, "column multiplier overflows i64");
                b.col_submul(k, j, mu);
                u.col_submul(k, j, &BigInt::from(mu as i64));
                gs = GramSchmidt::compute(&b)?;
            }
        }
        let lovasz = delta * gs.bsq[k - 1]
            <= gs.bsq[k] + gs.mu[k][k - 1] * gs.mu[k][k - 1] * gs.bsq[k - 1];
        if lovasz {
            k += 1;
        } else {
            b.swap_cols(k, k - 1);
            u.swap_cols(k, k - 1);
            gs = GramSchmidt::compute(&b)?;
            k = k.max(2) - 1;
        }
    }
    finalize(basis, b, u, original_det)
}

/// Extends a primitive integer vector to an exact unimodular matrix whose
/// first column is that vector. Euclidean column-style reduction: integer
/// operations shrink a copy of x to ±e_t while the inverse operations
/// accumulate into W, preserving x = W·v throughout.
fn unimodular_completion(x: &[i64]) -> Unimodular {
    let d = x.len();
    let mut v: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
    let mut w = Unimodular::identity(d);
    loop {
        let nonzero: Vec<usize> = (0..d).filter(|&i| !v[i].is_zero()).collect();
        assert!(!nonzero.is_empty(), "cannot complete the zero vector");
        if let [t] = nonzero[..] {
            assert!(
                v[t].abs() == BigInt::from(1),
                "coefficient vector must be primitive"
            );
            if v[t].is_negative() {
                w.negate_col(t);
            }
            if t != 0 {
                w.swap_cols(0, t);
            }
            debug_assert!(w.is_unimodular());
            debug_assert!((0..d).all(|i| w.get(i, 0) == &BigInt::from(x[i])));
            return w;
        }
        let p = *nonzero
            .iter()
            .min_by_key(|&&i| v[i].abs())
            .expect("nonzero set is not empty");
        for &i in &nonzero {
            if i == p {
                continue;
            }
            let q = &v[i] / &v[p];
            if !q.is_zero() {
                let t = &v[i] - &q * &v[p];
                v[i] = t;
                w.col_addmul(p, i, &q);
            }
        }
    }
}

/// KZ reduction (rank ≤ 12): LLL preprocessing, one lift pass over the
/// trailing blocks, then a final size reduction. The output's R factor
/// passes [`is_kz_reduced`].
pub fn kz_reduce(basis: &BasisMatrix) -> Result<ReductionResult> {
    let n = basis.cols();
    if n > KZ_CAP {
        return Err(Error::DimensionCap {
            n,
            cap: KZ_CAP,
            what: "KZ reduction",
        });
    }
    let original_det = qr(basis)?.1.det_abs();
    let pre = lll(basis, DEFAULT_DELTA)?;
    let mut b = pre.reduced_basis;
    let mut u = pre.transform;
    for i in 0..n {
        let (_, r) = qr(&b)?;
        let witness = svp_enum(&r.trailing(i))?;
        // Skip the lift when |r_ii| already attains the trailing shortest
        // length; in particular an already-KZ basis passes through with the
        // identity transform.
        if witness.length >= r.get(i, i).abs() * (1.0 - TIE_SLACK) {
            continue;
        }
        let completion = unimodular_completion(&witness.coeffs);
        b.apply_trailing(i, &completion);
        u.apply_trailing(i, &completion);
    }
    let (_, mut r) = qr(&b)?;
    let mut delta_u = Unimodular::identity(n);
    size_reduce(&mut r, &mut delta_u);
    let b = b.mul_unimodular(&delta_u)?;
    let u = u.mul(&delta_u);
    finalize(basis, b, u, original_det)
}

/// Result of a reducedness predicate: a verdict plus, on failure, a
/// human-readable certificate naming the first violated condition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReducednessCheck {
    pub reduced: bool,
    pub violation: Option<String>,
}

impl ReducednessCheck {
    fn pass() -> Self {
        ReducednessCheck {
            reduced: true,
            violation: None,
        }
    }

    fn fail(msg: String) -> Self {
        ReducednessCheck {
            reduced: false,
            violation: Some(msg),
        }
    }
}

/// Checks KZ reducedness within a relative tolerance: at every stage i the
/// diagonal |r_ii| must equal the shortest length of the trailing block
/// within tol·|r_ii|, and column i must be size-reduced.
pub fn is_kz_reduced(r: &RFactor, tol: f64) -> Result<ReducednessCheck> {
    let n = r.dim();
    if n > KZ_CAP {
        return Err(Error::DimensionCap {
            n,
            cap: KZ_CAP,
            what: "KZ reducedness check",
        });
    }
    for i in 0..n {
        let rii = r.get(i, i).abs();
        let shortest = svp_enum(&r.trailing(i))?.length;
        if (rii - shortest).abs() > tol * rii {
            return Ok(ReducednessCheck::fail(format!(
                "stage {s}: |r_{s}{s}| = {rii} differs from the trailing shortest length {shortest}",
                s = i + 1
            )));
        }
        for j in 0..i {
            let rjj = r.get(j, j).abs();
            if r.get(j, i).abs() > rjj / 2.0 + tol * rjj {
                return Ok(ReducednessCheck::fail(format!(
                    "size reduction: |r_{}{}| = {} exceeds |r_{}{}|/2 = {}",
                    j + 1,
                    i + 1,
                    r.get(j, i).abs(),
                    j + 1,
                    j + 1,
                    rjj / 2.0
                )));
            }
        }
    }
    Ok(ReducednessCheck::pass())
}

/// Checks block-2k reducedness: global size reduction plus KZ reducedness of
/// every overlapping 2k×2k diagonal block. Requires n = ℓ·k with ℓ ≥ 2 and
/// 2k within the KZ cap.
pub fn is_block2k_reduced(r: &RFactor, k: usize, tol: f64) -> Result<ReducednessCheck> {
    let n = r.dim();
    if k == 0 {
        return Err(Error::Shape("block size k must be ≥ 1".into()));
    }
    if n % k != 0 {
        return Err(Error::Shape(format!(
            "rank {n} is not a multiple of the block size {k}"
        )));
    }
    let ell = n / k;
    if ell < 2 {
        return Err(Error::Shape(format!(
            "need at least two blocks, got n = {n} with k = {k}"
        )));
    }
    if 2 * k > KZ_CAP {
        return Err(Error::DimensionCap {
            n: 2 * k,
            cap: KZ_CAP,
            what: "block-2k reducedness check",
        });
    }
    for i in 0..n {
        for j in 0..i {
            let rjj = r.get(j, j).abs();
            if r.get(j, i).abs() > rjj / 2.0 + tol * rjj {
                return Ok(ReducednessCheck::fail(format!(
                    "size reduction: |r_{}{}| = {} exceeds |r_{}{}|/2 = {}",
                    j + 1,
                    i + 1,
                    r.get(j, i).abs(),
                    j + 1,
                    j + 1,
                    rjj / 2.0
                )));
            }
        }
    }
    for blk in 0..ell - 1 {
        let sub = r.block(blk * k, 2 * k);
        let check = is_kz_reduced(&sub, tol)?;
        if !check.reduced {
            return Ok(ReducednessCheck::fail(format!(
                "block {} (columns {}..{}): {}",
                blk + 1,
                blk * k + 1,
                blk * k + 2 * k,
                check.violation.unwrap_or_default()
            )));
        }
    }
    Ok(ReducednessCheck::pass())
}
