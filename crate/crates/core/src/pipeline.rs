//! End-to-end helpers shared by the command line and the Python bindings.

use crate::error::{Error, Result};
use crate::lexsegment::{classify_linear_form, normalize_spec, LexSegmentSpec, LinearForm, Normalization};
use crate::monomial::RingContext;
use crate::parse::parse_monomial;
use crate::powers::{power_generators_with_budget, DEFAULT_PRODUCT_BUDGET};
use crate::quotients::{linear_quotients_check, QuotientStructure};
use crate::resolution::{DecompositionRoute, ResolutionComplex, ResolveOptions};

/// A parsed and normalized `(u, v)` pair, classified when possible.
#[derive(Debug, Clone)]
pub struct Instance {
    pub spec: LexSegmentSpec,
    pub normalization: Normalization,
}

impl Instance {
    pub fn parse(n: usize, u: &str, v: &str) -> Result<Self> {
        let ctx = RingContext::new(n)?;
        let (u, v) = (parse_monomial(u, &ctx)?, parse_monomial(v, &ctx)?);
        let (spec, normalization) = normalize_spec(&u, &v)?;
        let spec = match spec.is_normalized().then(|| classify_linear_form(&spec)).transpose()? {
            Some(LinearForm::Yes { .. }) => spec.classified()?,
            _ => spec,
        };
        Ok(Instance { spec, normalization })
    }

    pub fn quotients(&self, k: u32) -> Result<QuotientStructure> {
        self.quotients_with_budget(k, DEFAULT_PRODUCT_BUDGET)
    }

    pub fn quotients_with_budget(&self, k: u32, budget: u128) -> Result<QuotientStructure> {
        Ok(linear_quotients_check(power_generators_with_budget(&self.spec, k, budget)?))
    }

    /// Builds the resolution of `S/I^k`: closed-form decomposition (shadowed
    /// by the oracle) for classified specs, the oracle route when
    /// `allow_oracle` is set, and an error otherwise.
    pub fn resolve(&self, k: u32, allow_oracle: bool) -> Result<ResolutionComplex> {
        resolve_quotients(self.quotients(k)?, allow_oracle)
    }
}

pub fn resolve_quotients(qs: QuotientStructure, allow_oracle: bool) -> Result<ResolutionComplex> {
    let route = if qs.power().spec().l().is_some() {
        DecompositionRoute::ClosedForm
    } else if allow_oracle {
        DecompositionRoute::Oracle
    } else {
        return Err(Error::Unclassified);
    };
    ResolutionComplex::build(qs, ResolveOptions { route, shadow_oracle: true })
}
