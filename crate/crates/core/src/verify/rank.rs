//! Ranks of the differentials evaluated at random points modulo a prime.
//!
//! Matching ranks (`rank ∂_{i-1} + rank ∂_i = rank F_i`) is a necessary
//! condition for exactness only. A rank can drop at an unlucky point but
//! never rise, so a failure may be a false alarm; repeated trials make that
//! unlikely.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::resolution::{ResolutionComplex, SparseMatrix};

/// `2^31 - 1`.
pub const MODULUS: u64 = 2_147_483_647;

fn mul_mod(a: u64, b: u64) -> u64 {
    a * b % MODULUS
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, MODULUS - 2)
}

type SparseColumn = Vec<(u32, u64)>;

/// `a - factor * b` on sorted sparse columns.
fn axpy(a: &[(u32, u64)], factor: u64, b: &[(u32, u64)]) -> SparseColumn {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, (MODULUS - mul_mod(factor, b[j].1)) % MODULUS));
            j += 1;
        } else {
            let v = (a[i].1 + MODULUS - mul_mod(factor, b[j].1)) % MODULUS;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over `F_p` of a matrix given by sparse columns, by column reduction
/// on the largest row index.
pub fn sparse_rank(rows: usize, columns: Vec<SparseColumn>) -> usize {
    let mut pivots: Vec<Option<SparseColumn>> = vec![None; rows];
    let mut rank = 0;
    for mut col in columns {
        col.retain(|&(_, v)| v != 0);
        while let Some(&(low, val)) = col.last() {
            match &pivots[low as usize] {
                Some(p) => col = axpy(&col, val, p),
                None => {
                    let inv = inv_mod(val);
                    for e in col.iter_mut() {
                        e.1 = mul_mod(e.1, inv);
                    }
                    pivots[low as usize] = Some(col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn evaluate(m: &SparseMatrix, point: &[u64]) -> Vec<SparseColumn> {
    (0..m.cols())
        .map(|c| {
            let mut col: SparseColumn = m
                .column(c)
                .iter()
                .map(|e| {
                    let v = point[e.var - 1];
                    (e.row as u32, if e.sign < 0 { MODULUS - v } else { v })
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

fn evaluate_monomial(m: &crate::monomial::Monomial, point: &[u64]) -> u64 {
    m.exponents().iter().zip(point).fold(1, |acc, (&a, &x)| mul_mod(acc, pow_mod(x, a as u64)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositionCheck {
    /// Homological position `i >= 1` of `F_i`.
    pub position: usize,
    pub rank_f: usize,
    /// `rank ∂_{i-1} + rank ∂_i`
    pub image_plus_rank: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub point: Vec<u64>,
    /// `rank ∂_0, rank ∂_1, ...`
    pub ranks: Vec<usize>,
    pub positions: Vec<PositionCheck>,
    /// `rank ∂_i <= min(rank F_i, rank F_{i+1})` everywhere.
    pub bounded: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub condition: &'static str,
    pub modulus: u64,
    pub seed: u64,
    pub trials: Vec<TrialReport>,
    pub pass: bool,
}

/// Ranks of all differentials at one point with nonzero coordinates.
pub fn ranks_at(rc: &ResolutionComplex, point: &[u64]) -> Vec<usize> {
    let gens_nonzero = rc.generators().iter().any(|g| evaluate_monomial(g, point) != 0);
    let mut ranks = vec![usize::from(gens_nonzero)];
    for i in 1..rc.map_count() {
        let m = rc.map(i).expect("maps are contiguous");
        ranks.push(sparse_rank(m.rows(), evaluate(m, point)));
    }
    ranks
}

fn trial(rc: &ResolutionComplex, point: Vec<u64>) -> TrialReport {
    let ranks = ranks_at(rc, &point);
    let len = rc.length();
    let positions: Vec<PositionCheck> = (1..=len)
        .map(|i| {
            let image_plus_rank = ranks[i - 1] + ranks.get(i).copied().unwrap_or(0);
            let rank_f = rc.rank(i);
            PositionCheck { position: i, rank_f, image_plus_rank, pass: image_plus_rank == rank_f }
        })
        .collect();
    let bounded = ranks.iter().enumerate().all(|(i, &r)| r <= rc.rank(i).min(rc.rank(i + 1)));
    let pass = bounded && positions.iter().all(|p| p.pass);
    TrialReport { point, ranks, positions, bounded, pass }
}

pub fn random_rank_check(rc: &ResolutionComplex, seed: u64, trials: usize) -> RankReport {
    let n = rc.quotients().power().spec().n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials: Vec<TrialReport> = (0..trials)
        .map(|_| {
            let point = (0..n).map(|_| rng.gen_range(1..MODULUS)).collect();
            trial(rc, point)
        })
        .collect();
    let pass = trials.iter().all(|t| t.pass);
    RankReport { condition: "necessary condition for exactness", modulus: MODULUS, seed, trials, pass }
}
