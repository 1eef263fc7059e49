//! Independent checks that an assembled complex resolves `S/I^k`.

mod hilbert;
mod rank;

pub use hilbert::{hilbert_numerator, hilbert_numerator_with, HilbertNumerator, PivotPolicy, DEFAULT_NODE_BUDGET};
pub use rank::{random_rank_check, ranks_at, sparse_rank, PositionCheck, RankReport, TrialReport, MODULUS};

use serde::Serialize;

use crate::decomposition::{regularity_check, DecompositionContext, RegularityReport};
use crate::error::Result;
use crate::quotients::{check_set_lemmas, LemmaViolation};
use crate::resolution::ResolutionComplex;

/// `Σ_i (-1)^i Σ_{b ∈ F_i} t^deg(b)`, with `F_0` contributing `1`.
pub fn euler_characteristic(rc: &ResolutionComplex) -> HilbertNumerator {
    let mut chi = HilbertNumerator::one();
    for i in 1..=rc.length() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for b in rc.basis(i) {
            chi.add_term(b.degree, sign);
        }
    }
    chi
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub euler: HilbertNumerator,
    pub hilbert: HilbertNumerator,
    pub pass: bool,
}

pub fn euler_check(rc: &ResolutionComplex) -> Result<EulerReport> {
    euler_check_with_budget(rc, DEFAULT_NODE_BUDGET)
}

pub fn euler_check_with_budget(rc: &ResolutionComplex, budget: u64) -> Result<EulerReport> {
    let euler = euler_characteristic(rc);
    let hilbert = hilbert_numerator_with(rc.generators(), PivotPolicy::default(), budget)?;
    let pass = euler == hilbert;
    Ok(EulerReport { euler, hilbert, pass })
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub compose: Vec<bool>,
    pub minimality: bool,
    pub homogeneity: bool,
    pub set_lemmas: Option<LemmaViolation>,
    pub regularity: RegularityReport,
    pub euler: EulerReport,
    pub rank: RankReport,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.compose.iter().all(|&c| c)
            && self.minimality
            && self.homogeneity
            && self.set_lemmas.is_none()
            && self.regularity == RegularityReport::Regular
            && self.euler.pass
            && self.rank.pass
    }
}

/// Runs every check on a built complex.
pub fn verify_all(rc: &ResolutionComplex, seed: u64, trials: usize, hilbert_budget: u64) -> Result<VerificationReport> {
    let qs = rc.quotients();
    let ctx = DecompositionContext::new(qs).ok();
    Ok(VerificationReport {
        compose: (0..rc.map_count()).map(|i| rc.compose_check(i)).collect(),
        minimality: rc.minimality_check(),
        homogeneity: rc.homogeneity_check(),
        set_lemmas: check_set_lemmas(qs).err(),
        regularity: regularity_check(qs, ctx.as_ref()),
        euler: euler_check_with_budget(rc, hilbert_budget)?,
        rank: random_rank_check(rc, seed, trials),
    })
}
