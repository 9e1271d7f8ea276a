//! Lattice-reduction engine at desk scale: basis matrices, Householder QR,
//! size reduction, exact SVP enumeration, LLL, KZ reduction, block-2k
//! reducedness predicates, and seeded empirical ratio experiments.
//!
//! The split between exact and floating-point arithmetic is deliberate.
//! Transforms are big-integer matrices whose determinants are verified to be
//! ±1 exactly, so "the reduced basis generates the same lattice" is never a
//! numerical statement. Lengths and R-factors live in f64, and every
//! geometric predicate carries an explicit relative tolerance
//! ([`DEFAULT_TOL`]). Within those tolerances the SVP search is exact — a
//! full depth-first enumeration, not a heuristic — which is what lets the
//! empirical experiments compare measured ratios against proved bounds.

mod empirical;
mod enumerate;
mod reduce;

pub use empirical::{empirical_ratios, empirical_ratios_with, EmpiricalReport, DEFAULT_ENTRY_BOUND};
pub use enumerate::{brute_force_svp, coefficient_box, svp_enum, SvpWitness, BRUTE_CAP, ENUM_CAP};
pub use reduce::{
    is_block2k_reduced, is_kz_reduced, kz_reduce, lll, size_reduce, ReducednessCheck,
    DEFAULT_DELTA, KZ_CAP,
};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Default relative tolerance for reducedness predicates and reconstruction
/// checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Rank-deficiency threshold, relative to the largest column norm.
const RANK_TOL: f64 = 1e-10;

/// A real m×n matrix whose columns generate the lattice. Shape (m ≥ n ≥ 1)
/// and finiteness are enforced at construction; full column rank is the
/// business of [`qr`], which rejects deficient inputs.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisMatrix {
    m: usize,
    n: usize,
    entries: Vec<f64>, // row-major
}

impl BasisMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(m: usize, n: usize, entries: Vec<f64>) -> Result<Self> {
        if n == 0 || m < n {
            return Err(Error::Shape(format!("need m ≥ n ≥ 1, got {m}×{n}")));
        }
        if entries.len() != m * n {
            return Err(Error::Shape(format!(
                "expected {} entries for a {m}×{n} matrix, got {}",
                m * n,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !e.is_finite()) {
            return Err(Error::Parse(format!("non-finite matrix entry {bad}")));
        }
        Ok(BasisMatrix { m, n, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("rows have unequal lengths".into()));
        }
        Self::new(m, n, rows.concat())
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
        }
        BasisMatrix { m: n, n, entries }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.n + j] = v;
    }

    /// Euclidean norm of column j (the j-th basis vector).
    pub fn column_norm(&self, j: usize) -> f64 {
        (0..self.m)
            .map(|i| self.get(i, j) * self.get(i, j))
            .sum::<f64>()
            .sqrt()
    }

    pub fn min_column_norm(&self) -> f64 {
        (0..self.n)
            .map(|j| self.column_norm(j))
            .fold(f64::INFINITY, f64::min)
    }

    fn max_column_norm(&self) -> f64 {
        (0..self.n).map(|j| self.column_norm(j)).fold(0.0, f64::max)
    }

    /// self × u — applies an integer column transform.
    pub fn mul_unimodular(&self, u: &Unimodular) -> Result<Self> {
        if u.dim() != self.n {
            return Err(Error::Shape(format!(
                "transform is {}×{0}, basis has {} columns",
                u.dim(),
                self.n
            )));
        }
        let mut out = vec![0.0; self.m * self.n];
        for i in 0..self.m {
            for j in 0..self.n {
                let mut s = 0.0;
                for k in 0..self.n {
                    let c = u.entry_f64(k, j);
                    if c != 0.0 {
                        s += self.get(i, k) * c;
                    }
                }
                out[i * self.n + j] = s;
            }
        }
        Ok(BasisMatrix {
            m: self.m,
            n: self.n,
            entries: out,
        })
    }

    /// Replaces columns start..n by their combinations under `w`
    /// (columns ← columns × w), leaving earlier columns untouched.
    pub(crate) fn apply_trailing(&mut self, start: usize, w: &Unimodular) {
        let d = w.dim();
        debug_assert_eq!(start + d, self.n);
        let mut old = vec![0.0; d];
        for row in 0..self.m {
            for (k, slot) in old.iter_mut().enumerate() {
                *slot = self.get(row, start + k);
            }
            for j in 0..d {
                let mut s = 0.0;
                for (k, &v) in old.iter().enumerate() {
                    let c = w.entry_f64(k, j);
                    if c != 0.0 {
                        s += v * c;
                    }
                }
                self.set(row, start + j, s);
            }
        }
    }

    pub(crate) fn col_submul(&mut self, target: usize, source: usize, mu: f64) {
        for i in 0..self.m {
            let v = self.get(i, target) - mu * self.get(i, source);
            self.set(i, target, v);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.m {
            let (x, y) = (self.get(i, a), self.get(i, b));
            self.set(i, a, y);
            self.set(i, b, x);
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.m)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

impl Serialize for BasisMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BasisMatrix", 3)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &self.to_rows())?;
        st.end()
    }
}

/// Upper-triangular factor of a QR factorization: entries below the diagonal
/// are exactly zero and every diagonal entry is nonzero. [`qr`] additionally
/// makes the diagonal positive; hand-built factors may carry signs.
#[derive(Clone, Debug, PartialEq)]
pub struct RFactor {
    n: usize,
    entries: Vec<f64>, // row-major n×n
}

impl RFactor {
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("R factor must be at least 1×1".into()));
        }
        if entries.len() != n * n {
            return Err(Error::Shape(format!(
                "expected {} entries for a {n}×{n} factor, got {}",
                n * n,
                entries.len()
            )));
        }
        for (idx, e) in entries.iter().enumerate() {
            if !e.is_finite() {
                return Err(Error::Parse(format!("non-finite entry {e} at index {idx}")));
            }
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i * n + j] != 0.0 {
                    return Err(Error::Shape(format!(
                        "entry ({},{}) below the diagonal is {}, not exactly zero",
                        i + 1,
                        j + 1,
                        entries[i * n + j]
                    )));
                }
            }
            if entries[i * n + i] == 0.0 {
                return Err(Error::Shape(format!("zero diagonal entry at {}", i + 1)));
            }
        }
        Ok(RFactor { n, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("rows have unequal lengths".into()));
        }
        Self::new(n, rows.concat())
    }

    /// Builds diag(d) — handy for tests and hand-checked examples.
    pub fn diagonal(d: &[f64]) -> Result<Self> {
        let n = d.len();
        let mut entries = vec![0.0; n * n];
        for (i, &v) in d.iter().enumerate() {
            entries[i * n + i] = v;
        }
        Self::new(n, entries)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.n + j] = v;
    }

    /// |∏ r_ii| — the covolume of the lattice the factor came from.
    pub fn det_abs(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i).abs()).product()
    }

    /// The square diagonal block starting at `start` with side `size`.
    pub fn block(&self, start: usize, size: usize) -> RFactor {
        debug_assert!(start + size <= self.n && size >= 1);
        let mut entries = vec![0.0; size * size];
        for i in 0..size {
            for j in i..size {
                entries[i * size + j] = self.get(start + i, start + j);
            }
        }
        RFactor { n: size, entries }
    }

    /// The trailing block R_{i:n, i:n} (0-based i).
    pub fn trailing(&self, i: usize) -> RFactor {
        self.block(i, self.n - i)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

impl Serialize for RFactor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RFactor", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &self.to_rows())?;
        st.end()
    }
}

/// An n×n integer matrix, stored exactly; reduction transforms are
/// unimodular (|det| = 1), which [`Unimodular::is_unimodular`] verifies with
/// integer arithmetic — no tolerance involved.
#[derive(Clone, Debug, PartialEq)]
pub struct Unimodular {
    n: usize,
    entries: Vec<BigInt>, // row-major
}

impl Unimodular {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        Unimodular { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn entry_f64(&self, i: usize, j: usize) -> f64 {
        self.get(i, j).to_f64().unwrap_or(f64::NAN)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination: every
    /// division along the way is exact, so the result is the true integer
    /// determinant.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = t / &prev;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = a[k * n + k].clone();
        }
        let d = a[(n - 1) * n + (n - 1)].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// col_target ← col_target − q·col_source.
    pub(crate) fn col_submul(&mut self, target: usize, source: usize, q: &BigInt) {
        for i in 0..self.n {
            let v = self.get(i, target) - q * self.get(i, source);
            self.entries[i * self.n + target] = v;
        }
    }

    /// col_target ← col_target + q·col_source.
    pub(crate) fn col_addmul(&mut self, target: usize, source: usize, q: &BigInt) {
        for i in 0..self.n {
            let v = self.get(i, target) + q * self.get(i, source);
            self.entries[i * self.n + target] = v;
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.n {
            self.entries.swap(i * self.n + a, i * self.n + b);
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.n {
            let v = -self.get(i, j).clone();
            self.entries[i * self.n + j] = v;
        }
    }

    /// self × rhs.
    pub(crate) fn mul(&self, rhs: &Unimodular) -> Unimodular {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Unimodular { n, entries }
    }

    /// Columns start..n ← (columns start..n) × w, exactly.
    pub(crate) fn apply_trailing(&mut self, start: usize, w: &Unimodular) {
        let d = w.dim();
        debug_assert_eq!(start + d, self.n);
        for row in 0..self.n {
            let old: Vec<BigInt> = (0..d).map(|k| self.get(row, start + k).clone()).collect();
            for j in 0..d {
                let mut s = BigInt::zero();
                for (k, v) in old.iter().enumerate() {
                    let c = w.get(k, j);
                    if !c.is_zero() {
                        s += v * c;
                    }
                }
                self.entries[row * self.n + start + j] = s;
            }
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

impl Serialize for Unimodular {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // Entries render as decimal strings: they are arbitrary-precision
        // integers and must survive a JSON round trip exactly.
        let mut st = s.serialize_struct("Unimodular", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &self.to_rows())?;
        st.end()
    }
}

/// Outcome of a reduction. `shortest_length` is the exact enumerated λ
/// whenever the rank permits (n ≤ [`ENUM_CAP`]); for larger ranks it falls
/// back to the minimum reduced column norm, which is an upper bound on λ.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionResult {
    pub reduced_basis: BasisMatrix,
    pub transform: Unimodular,
    pub r: RFactor,
    pub shortest_length: f64,
}

/// Householder QR with the diagonal of R made positive by a sign
/// convention. Returns the thin orthonormal factor Q (m×n) and R (n×n);
/// rejects rank-deficient input (trailing column residual below
/// `RANK_TOL` × the largest column norm).
pub fn qr(basis: &BasisMatrix) -> Result<(BasisMatrix, RFactor)> {
    let (m, n) = (basis.rows(), basis.cols());
    let mut a: Vec<f64> = (0..m * n).map(|idx| basis.entries[idx]).collect();
    let mut q = vec![0.0; m * m];
    for i in 0..m {
        q[i * m + i] = 1.0;
    }
    let scale = basis.max_column_norm();
    if scale == 0.0 {
        return Err(Error::RankDeficient("all columns are zero".into()));
    }
    let mut v = vec![0.0; m];
    for k in 0..n {
        let norm = (k..m).map(|i| a[i * n + k] * a[i * n + k]).sum::<f64>().sqrt();
        if norm <= RANK_TOL * scale {
            return Err(Error::RankDeficient(format!(
                "column {} lies in the span of its predecessors (residual {:.3e})",
                k + 1,
                norm
            )));
        }
        let alpha = if a[k * n + k] >= 0.0 { -norm } else { norm };
        for i in k..m {
            v[i] = a[i * n + k];
        }
        v[k] -= alpha;
        let vnorm2: f64 = (k..m).map(|i| v[i] * v[i]).sum();
        // Reflect the remaining columns: H = I − 2vvᵀ/‖v‖².
        for j in k..n {
            let s: f64 = (k..m).map(|i| v[i] * a[i * n + j]).sum();
            let f = 2.0 * s / vnorm2;
            for i in k..m {
                a[i * n + j] -= f * v[i];
            }
        }
        // Accumulate Q ← Q·H so that basis = Q·R at the end.
        for i in 0..m {
            let s: f64 = (k..m).map(|j| q[i * m + j] * v[j]).sum();
            let f = 2.0 * s / vnorm2;
            for j in k..m {
                q[i * m + j] -= f * v[j];
            }
        }
        a[k * n + k] = alpha;
        for i in k + 1..m {
            a[i * n + k] = 0.0;
        }
    }
    let mut r = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            r[i * n + j] = a[i * n + j];
        }
    }
    let mut qthin = vec![0.0; m * n];
    for i in 0..m {
        for j in 0..n {
            qthin[i * n + j] = q[i * m + j];
        }
    }
    for i in 0..n {
        if r[i * n + i] < 0.0 {
            for j in i..n {
                r[i * n + j] = -r[i * n + j];
            }
            for row in 0..m {
                qthin[row * n + i] = -qthin[row * n + i];
            }
        }
    }
    Ok((
        BasisMatrix {
            m,
            n,
            entries: qthin,
        },
        RFactor { n, entries: r },
    ))
}

/// Parses a basis from either the plain-text format (first line "m n", then
/// m lines of n numbers; columns are the basis vectors) or a JSON document
/// with an "entries" row matrix.
pub fn parse_basis(text: &str) -> Result<BasisMatrix> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        #[derive(serde::Deserialize)]
        struct Doc {
            entries: Vec<Vec<f64>>,
        }
        let doc: Doc = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("structured basis document: {e}")))?;
        return BasisMatrix::from_rows(&doc.entries);
    }
    let mut tokens = text.split_whitespace();
    let mut dim = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("missing {what} in header")))?;
        let v: usize = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad {what} `{tok}` in header")))?;
        if v == 0 || v > 1000 {
            return Err(Error::Parse(format!("{what} {v} out of range 1..=1000")));
        }
        Ok(v)
    };
    let m = dim("row count")?;
    let n = dim("column count")?;
    let mut entries = Vec::with_capacity(m * n);
    for tok in tokens {
        let v: f64 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad matrix entry `{tok}`")))?;
        entries.push(v);
    }
    if entries.len() != m * n {
        return Err(Error::Parse(format!(
            "expected {} entries for a {m}×{n} basis, found {}",
            m * n,
            entries.len()
        )));
    }
    BasisMatrix::new(m, n, entries)
}

/// Renders a basis in the plain-text format accepted by [`parse_basis`].
pub fn render_basis(basis: &BasisMatrix) -> String {
    let mut out = format!("{} {}\n", basis.rows(), basis.cols());
    for i in 0..basis.rows() {
        let row: Vec<String> = (0..basis.cols())
            .map(|j| format!("{}", basis.get(i, j)))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
