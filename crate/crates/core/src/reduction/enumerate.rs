//! Exact shortest-vector search on an R factor: a depth-first enumerator in
//! the Schnorr–Euchner zigzag order, plus an unpruned brute-force oracle the
//! enumerator can be cross-checked against.

use super::RFactor;
use crate::error::{Error, Result};
use serde::Serialize;

/// Dimension cap for [`svp_enum`].
pub const ENUM_CAP: usize = 14;
/// Dimension cap for [`brute_force_svp`].
pub const BRUTE_CAP: usize = 6;

/// A shortest-vector certificate: the exact length and one coefficient
/// vector attaining it. Witnesses are sign-normalized (first nonzero entry
/// positive); among equal-length candidates the lexicographically smallest
/// normalized vector wins, so results are deterministic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SvpWitness {
    pub length: f64,
    pub coeffs: Vec<i64>,
}

/// Sign-normalizes a coefficient vector so its first nonzero entry is
/// positive; ±x describe the same lattice vector.
fn canonical(x: &[i64]) -> Vec<i64> {
    let mut v = x.to_vec();
    if let Some(&first) = v.iter().find(|&&c| c != 0) {
        if first < 0 {
            for c in &mut v {
                *c = -*c;
            }
        }
    }
    v
}

struct Search<'a> {
    r: &'a RFactor,
    n: usize,
    x: Vec<i64>,
    bound2: f64,
    best: Option<(f64, Vec<i64>)>,
}

impl Search<'_> {
    /// Assigns coordinates x[level−1] down to x[0]; `partial` is the squared
    /// norm contributed by rows level..n−1, which only involve assigned
    /// coordinates because R is upper triangular.
    fn descend(&mut self, level: usize, partial: f64) {
        if level == 0 {
            if self.x.iter().all(|&c| c == 0) {
                return; // the zero vector is not a candidate
            }
            let cand = canonical(&self.x);
            let better = match &self.best {
                None => true,
                Some((b2, bx)) => {
                    partial < *b2 || (partial == *b2 && cand.as_slice() < bx.as_slice())
                }
            };
            if better {
                self.bound2 = partial;
                self.best = Some((partial, cand));
            }
            return;
        }
        let i = level - 1;
        let rii = self.r.get(i, i);
        let mut proj = 0.0;
        for j in level..self.n {
            proj += self.r.get(i, j) * self.x[j] as f64;
        }
        let c = -proj / rii;
        // Schnorr–Euchner zigzag: nearest integer first, then alternate
        // outward. |k − c| never decreases along the sequence, so the first
        // pruned candidate ends the level.
        let mut k = c.round();
        let mut dk = if c >= k { 1.0 } else { -1.0 };
        loop {
            let t = (k - c) * rii;
            let next = partial + t * t;
            if next > self.bound2 {
                break;
            }
            self.x[i] = k as i64;
            self.descend(i, next);
            k += dk;
            dk = -dk - dk.signum();
        }
        self.x[i] = 0;
    }
}

/// Exact shortest nonzero vector of the lattice generated by the columns of
/// R: a depth-first search with pruning radius initialized to the first
/// column norm |r_11| and shrunk whenever a shorter vector is found.
pub fn svp_enum(r: &RFactor) -> Result<SvpWitness> {
    let n = r.dim();
    if n > ENUM_CAP {
        return Err(Error::DimensionCap {
            n,
            cap: ENUM_CAP,
            what: "SVP enumeration",
        });
    }
    let first = r.get(0, 0);
    let mut search = Search {
        r,
        n,
        x: vec![0; n],
        bound2: first * first,
        best: None,
    };
    search.descend(n, 0.0);
    let (best2, coeffs) = search
        .best
        .expect("the first basis vector always lies inside the initial radius");
    Ok(SvpWitness {
        length: best2.sqrt(),
        coeffs,
    })
}

/// Exhaustive minimum of ‖Rx‖ over nonzero integer vectors with entries in
/// [−box, box]. Deliberately has no pruning and shares no code with
/// [`svp_enum`], so the two can serve as oracles for each other. The caller
/// must pick `box_radius` large enough that the region provably contains a
/// vector no longer than the first column of R; [`coefficient_box`] computes
/// such a radius.
pub fn brute_force_svp(r: &RFactor, box_radius: i64) -> Result<SvpWitness> {
    let n = r.dim();
    if n > BRUTE_CAP {
        return Err(Error::DimensionCap {
            n,
            cap: BRUTE_CAP,
            what: "brute-force SVP",
        });
    }
    if box_radius < 1 {
        return Err(Error::Domain(format!(
            "box radius must be ≥ 1, got {box_radius}"
        )));
    }
    let width = 2 * box_radius as u128 + 1;
    let total = width.pow(n as u32);
    let mut best: Option<(f64, Vec<i64>)> = None;
    let mut x = vec![0i64; n];
    for idx in 0..total {
        let mut rem = idx;
        // Big-endian digit decode: x runs in lexicographic order.
        for slot in (0..n).rev() {
            x[slot] = (rem % width) as i64 - box_radius;
            rem /= width;
        }
        if x.iter().all(|&c| c == 0) {
            continue;
        }
        let mut norm2 = 0.0;
        for i in 0..n {
            let mut row = 0.0;
            for j in i..n {
                row += r.get(i, j) * x[j] as f64;
            }
            norm2 += row * row;
        }
        let better = match &best {
            None => true,
            Some((b2, bx)) => {
                norm2 < *b2 || (norm2 == *b2 && canonical(&x).as_slice() < bx.as_slice())
            }
        };
        if better {
            best = Some((norm2, canonical(&x)));
        }
    }
    let (best2, coeffs) = best.expect("box radius ≥ 1 always contains ±e_1");
    Ok(SvpWitness {
        length: best2.sqrt(),
        coeffs,
    })
}

/// A box radius guaranteed to contain every coefficient vector x with
/// ‖Rx‖ ≤ |r_11| (the first column norm): back-substitution gives
/// |x_i| ≤ (|r_11| + Σ_{j>i} |r_ij|·B_j)/|r_ii| row by row from the bottom.
pub fn coefficient_box(r: &RFactor) -> i64 {
    let n = r.dim();
    let rho = r.get(0, 0).abs();
    let mut b = vec![0i64; n];
    let mut max_b = 1i64;
    for i in (0..n).rev() {
        let mut slack = rho;
        for j in i + 1..n {
            slack += r.get(i, j).abs() * b[j] as f64;
        }
        b[i] = (slack / r.get(i, i).abs()).floor().max(0.0) as i64;
        max_b = max_b.max(b[i]);
    }
    max_b
}
