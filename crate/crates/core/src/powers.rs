//! Minimal generators of `I^k` in increasing reverse lexicographic order.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::lexsegment::LexSegmentSpec;
use crate::monomial::Monomial;

pub const DEFAULT_PRODUCT_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerIdeal {
    spec: LexSegmentSpec,
    k: u32,
    generators: Vec<Monomial>,
    positions: HashMap<Monomial, usize>,
}

impl PowerIdeal {
    /// Wraps an already sorted generator list.
    pub(crate) fn from_parts(spec: LexSegmentSpec, k: u32, generators: Vec<Monomial>) -> Self {
        let positions = generators.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        PowerIdeal { spec, k, generators, positions }
    }

    pub fn spec(&self) -> &LexSegmentSpec {
        &self.spec
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn degree(&self) -> u32 {
        self.k * self.spec.d()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Position of `m` in the increasing revlex order, if it is a generator.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.positions.get(m).copied()
    }

    /// `v^k`.
    pub fn v_power(&self) -> Monomial {
        self.spec.v().pow(self.k)
    }
}

/// Number of `k`-multisets drawn from `len` items, saturating.
pub fn multiset_count(len: usize, k: u32) -> u128 {
    // C(len + k - 1, k)
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.saturating_mul(len as u128 + i) / (i + 1);
    }
    acc
}

pub fn power_generators(spec: &LexSegmentSpec, k: u32) -> Result<PowerIdeal> {
    power_generators_with_budget(spec, k, DEFAULT_PRODUCT_BUDGET)
}

/// All distinct products of `k` elements of `L(u, v)`. These are the
/// minimal generators of `I^k`: every candidate has degree `k*d`, and
/// distinct monomials of equal degree never divide one another.
pub fn power_generators_with_budget(spec: &LexSegmentSpec, k: u32, budget: u128) -> Result<PowerIdeal> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let base = spec.lexsegment();
    let needed = multiset_count(base.len(), k);
    if needed > budget {
        return Err(Error::BudgetExceeded { what: "power products", needed, limit: budget });
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut frontier: Vec<(usize, Monomial)> = base.iter().cloned().enumerate().collect();
    for _ in 1..k {
        let mut next = Vec::new();
        for (last, prod) in &frontier {
            for (j, w) in base.iter().enumerate().skip(*last) {
                next.push((j, prod.multiply(w)));
            }
        }
        frontier = next;
    }
    seen.extend(frontier.into_iter().map(|(_, m)| m));
    let mut generators: Vec<Monomial> = seen.into_iter().collect();
    generators.sort_unstable_by(|a, b| a.revlex_cmp(b));
    let pi = PowerIdeal::from_parts(spec.clone(), k, generators);
    if spec.l().is_some() {
        check_bar_degree_bound(&pi)?;
    }
    Ok(pi)
}

/// True iff some generator `z <=_revlex w` divides `x`.
pub fn prefix_membership(pi: &PowerIdeal, w: &Monomial, x: &Monomial) -> Result<bool> {
    let pos = pi.position(w).ok_or_else(|| Error::NotAGenerator(w.clone()))?;
    Ok(pi.generators[..=pos].iter().any(|z| z.divides(x)))
}

/// For a classified spec every generator has bar degree at least `k`.
pub fn check_bar_degree_bound(pi: &PowerIdeal) -> Result<()> {
    let l = pi.spec().l().ok_or(Error::Unclassified)?;
    match pi.generators.iter().find(|m| m.bar_degree(l) < pi.k) {
        Some(m) => Err(Error::BarDegreeBound(m.clone())),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::RingContext;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_vec(e.to_vec())
    }

    fn example() -> LexSegmentSpec {
        LexSegmentSpec::new(RingContext::new(4).unwrap(), m(&[1, 0, 1, 0]), m(&[0, 1, 0, 1]))
            .unwrap()
            .classified()
            .unwrap()
    }

    #[test]
    fn first_power_order() {
        let pi = power_generators(&example(), 1).unwrap();
        let shown: Vec<String> = pi.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x2x4", "x1x4", "x2x3", "x1x3", "x2^2"]);
        check_bar_degree_bound(&pi).unwrap();
    }

    #[test]
    fn second_power_has_one_collision() {
        let pi = power_generators(&example(), 2).unwrap();
        assert_eq!(multiset_count(5, 2), 15);
        assert_eq!(pi.len(), 14);
        assert!(pi.generators().windows(2).all(|w| w[0].revlex_cmp(&w[1]).is_lt()));
        assert!(pi.position(&m(&[1, 1, 1, 1])).is_some());
        check_bar_degree_bound(&pi).unwrap();
    }

    #[test]
    fn single_point_segment() {
        let u = m(&[1, 0, 1, 0]);
        let s = LexSegmentSpec::new(RingContext::new(4).unwrap(), u.clone(), u.clone()).unwrap();
        for k in 1..4 {
            assert_eq!(power_generators(&s, k).unwrap().generators(), &[u.pow(k)]);
        }
    }

    #[test]
    fn budget_and_zero_power() {
        assert_eq!(power_generators(&example(), 0), Err(Error::ZeroPower));
        assert!(matches!(
            power_generators_with_budget(&example(), 3, 10),
            Err(Error::BudgetExceeded { needed: 35, .. })
        ));
    }

    #[test]
    fn prefix_membership_examples() {
        let pi = power_generators(&example(), 1).unwrap();
        let g = pi.generators().to_vec();
        assert!(prefix_membership(&pi, &g[0], &m(&[0, 2, 0, 1])).unwrap());
        assert!(!prefix_membership(&pi, &g[0], &m(&[1, 1, 1, 0])).unwrap());
        assert!(prefix_membership(&pi, &g[4], &m(&[1, 1, 1, 0])).unwrap());
        assert!(prefix_membership(&pi, &m(&[0, 0, 1, 1]), &g[0]).is_err());
    }
}
