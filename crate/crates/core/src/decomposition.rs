//! The decomposition function `g` of `I^k` for the increasing revlex order.
//!
//! `g(x)` is the earliest generator (in the quotient order) dividing `x`.
//! For classified specs it has a closed form on the monomials `x_s m`,
//! `s ∈ set(m)`: divide by `x_min(m)` when `x_s m / x_min(m) ⪰ v^k` and by
//! `x_min(m̃)` otherwise.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::quotients::QuotientStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// `x_s m / x_min(m) ⪰ v^k`
    High,
    /// `x_s m / x_min(m) ≺ v^k`
    Low,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionRecord {
    pub gen: usize,
    pub s: usize,
    pub branch: Branch,
    pub g_value: Monomial,
    pub g_index: usize,
    /// The variable `x_c` with `x_c * g_value = x_s * m`.
    pub coefficient: usize,
}

/// Closed-form evaluation context: the quotient structure of a classified
/// power together with `v^k` and `l`.
#[derive(Debug, Clone)]
pub struct DecompositionContext<'a> {
    qs: &'a QuotientStructure,
    vk: Monomial,
    l: usize,
}

impl<'a> DecompositionContext<'a> {
    pub fn new(qs: &'a QuotientStructure) -> Result<Self> {
        let l = qs.power().spec().l().ok_or(Error::Unclassified)?;
        Ok(DecompositionContext { qs, vk: qs.power().v_power(), l })
    }

    pub fn quotients(&self) -> &'a QuotientStructure {
        self.qs
    }

    pub fn v_power(&self) -> &Monomial {
        &self.vk
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn branch(&self, gen: usize, s: usize) -> Branch {
        let m = &self.qs.generators()[gen];
        let lo = m.min_index().expect("generators are nontrivial");
        let shifted = m.mul_var(s).div_var(lo).expect("x_min(m) divides x_s m");
        if shifted.prec_cmp(&self.vk, self.l).is_lt() {
            Branch::Low
        } else {
            Branch::High
        }
    }

    pub fn g_closed_form(&self, gen: usize, s: usize) -> Result<DecompositionRecord> {
        if !self.qs.set(gen).contains(s) {
            return Err(Error::NotInSet { gen, s });
        }
        let m = &self.qs.generators()[gen];
        let branch = self.branch(gen, s);
        let coefficient = match branch {
            Branch::High => m.min_index()?,
            Branch::Low => m.min_tilde_index(self.l)?,
        };
        let g_value = m.mul_var(s).div_var(coefficient).expect("coefficient divides m");
        let g_index =
            self.qs.power().position(&g_value).ok_or_else(|| Error::ClosedFormNotGenerator(g_value.clone()))?;
        Ok(DecompositionRecord { gen, s, branch, g_value, g_index, coefficient })
    }
}

/// Position of the earliest generator dividing `x`, by direct scan.
pub fn g_oracle(qs: &QuotientStructure, x: &Monomial) -> Result<usize> {
    qs.generators().iter().position(|z| z.divides(x)).ok_or_else(|| Error::NotInIdeal(x.clone()))
}

/// Oracle evaluation of `g(x_s m)` packaged like a closed-form record. The
/// branch is reported as `High` when the oracle divides by `x_min(m)`.
pub fn g_oracle_record(qs: &QuotientStructure, gen: usize, s: usize) -> Result<DecompositionRecord> {
    let m = &qs.generators()[gen];
    let x = m.mul_var(s);
    let g_index = g_oracle(qs, &x)?;
    let g_value = qs.generators()[g_index].clone();
    let quotient = x.try_divide(&g_value).expect("g(x) divides x");
    let coefficient = quotient.as_variable().ok_or_else(|| Error::ClosedFormNotGenerator(g_value.clone()))?;
    let branch = if Some(coefficient) == m.min_index().ok() { Branch::High } else { Branch::Low };
    Ok(DecompositionRecord { gen, s, branch, g_value, g_index, coefficient })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum RegularityReport {
    Regular,
    /// `t ∈ set(g(x_s m_gen))` but `t ∉ set(m_gen)`.
    Counterexample {
        gen: usize,
        s: usize,
        t: usize,
    },
    /// Closed form and oracle disagree on `g(x_s m_gen)`.
    Mismatch {
        gen: usize,
        s: usize,
        closed: Monomial,
        oracle: Monomial,
    },
}

/// Checks `set(g(x_s m)) ⊆ set(m)` for every generator `m` and `s ∈ set(m)`
/// using the oracle `g`, and cross-checks the closed form when `ctx` is
/// given. Violations are reported in (generator, s) order.
pub fn regularity_check(qs: &QuotientStructure, ctx: Option<&DecompositionContext<'_>>) -> RegularityReport {
    for gen in 0..qs.generators().len() {
        for s in qs.set(gen).iter() {
            let oracle = g_oracle_record(qs, gen, s).expect("x_s m lies in the ideal");
            if let Some(ctx) = ctx {
                let closed = ctx.g_closed_form(gen, s);
                let agrees = matches!(&closed, Ok(rec) if rec.g_index == oracle.g_index);
                if !agrees {
                    let closed = match closed {
                        Ok(rec) => rec.g_value,
                        Err(_) => {
                            let m = &qs.generators()[gen];
                            m.mul_var(s)
                        }
                    };
                    return RegularityReport::Mismatch { gen, s, closed, oracle: oracle.g_value };
                }
            }
            let missing = qs.set(oracle.g_index).iter().find(|&t| !qs.set(gen).contains(t));
            if let Some(t) = missing {
                return RegularityReport::Counterexample { gen, s, t };
            }
        }
    }
    RegularityReport::Regular
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexsegment::LexSegmentSpec;
    use crate::monomial::RingContext;
    use crate::powers::power_generators;
    use crate::quotients::linear_quotients_check;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_vec(e.to_vec())
    }

    fn example(k: u32) -> QuotientStructure {
        let spec = LexSegmentSpec::new(RingContext::new(4).unwrap(), m(&[1, 0, 1, 0]), m(&[0, 1, 0, 1]))
            .unwrap()
            .classified()
            .unwrap();
        linear_quotients_check(power_generators(&spec, k).unwrap())
    }

    #[test]
    fn closed_form_examples() {
        let qs = example(1);
        let ctx = DecompositionContext::new(&qs).unwrap();
        // u4 = x1x3, s = 2: x2x3 ⪰ v, g = u3, coefficient x1
        let r = ctx.g_closed_form(3, 2).unwrap();
        assert_eq!((r.branch, r.g_index, r.coefficient), (Branch::High, 2, 1));
        // u4, s = 4: x3x4 ≺ v, g = x1x4 = u2, coefficient x3
        let r = ctx.g_closed_form(3, 4).unwrap();
        assert_eq!((r.branch, r.g_value.clone(), r.g_index, r.coefficient), (Branch::Low, m(&[1, 0, 0, 1]), 1, 3));
        // u5 = x2^2, s = 4: x2x4 = v, g = u1, coefficient x2
        let r = ctx.g_closed_form(4, 4).unwrap();
        assert_eq!((r.branch, r.g_index, r.coefficient), (Branch::High, 0, 2));

        assert_eq!(ctx.g_closed_form(3, 3), Err(Error::NotInSet { gen: 3, s: 3 }));
    }

    #[test]
    fn unclassified_context_is_rejected() {
        let spec = LexSegmentSpec::new(RingContext::new(4).unwrap(), m(&[1, 0, 1, 0]), m(&[0, 1, 0, 1])).unwrap();
        let qs = linear_quotients_check(power_generators(&spec, 1).unwrap());
        assert!(matches!(DecompositionContext::new(&qs), Err(Error::Unclassified)));
    }

    #[test]
    fn oracle_examples() {
        let qs = example(1);
        assert_eq!(g_oracle(&qs, &m(&[1, 1, 1, 0])).unwrap(), 2);
        for (j, u) in qs.generators().iter().enumerate() {
            assert_eq!(g_oracle(&qs, u).unwrap(), j);
        }
        assert_eq!(g_oracle(&qs, &m(&[0, 2, 0, 1])).unwrap(), 0);
        assert!(matches!(g_oracle(&qs, &m(&[0, 0, 3, 3])), Err(Error::NotInIdeal(_))));
    }

    #[test]
    fn regularity() {
        for k in 1..=2 {
            let qs = example(k);
            let ctx = DecompositionContext::new(&qs).unwrap();
            assert_eq!(regularity_check(&qs, Some(&ctx)), RegularityReport::Regular);
            assert_eq!(regularity_check(&qs, None), RegularityReport::Regular);
        }
        let u = m(&[1, 0, 1, 0]);
        let spec = LexSegmentSpec::new(RingContext::new(4).unwrap(), u.clone(), u).unwrap();
        let qs = linear_quotients_check(power_generators(&spec, 1).unwrap());
        assert_eq!(regularity_check(&qs, None), RegularityReport::Regular);
    }
}
