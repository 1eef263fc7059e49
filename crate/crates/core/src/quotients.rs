//! Colon ideals along the increasing revlex order and the sets `set(m)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::powers::PowerIdeal;

/// A set of variable indices `⊆ {1..n}`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(u32);

impl VarSet {
    pub fn empty() -> Self {
        VarSet(0)
    }

    pub fn from_bits(bits: u32) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1 << (i - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `|{t ∈ self : t < s}|`.
    pub fn count_below(self, s: usize) -> usize {
        (self.0 & ((1u32 << (s - 1)) - 1)).count_ones() as usize
    }

    /// All subsets of size `size`, ordered as sorted sequences compared
    /// lexicographically.
    pub fn subsets_of_size(self, size: usize) -> Vec<VarSet> {
        let elems = self.to_vec();
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(size);
        subsets_rec(&elems, 0, size, &mut pick, &mut out);
        out
    }
}

fn subsets_rec(elems: &[usize], from: usize, size: usize, pick: &mut Vec<usize>, out: &mut Vec<VarSet>) {
    if pick.len() == size {
        out.push(pick.iter().copied().collect());
        return;
    }
    for i in from..elems.len() {
        if elems.len() - i < size - pick.len() {
            break;
        }
        pick.push(elems[i]);
        subsets_rec(elems, i + 1, size, pick, out);
        pick.pop();
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(VarSet::empty(), VarSet::with)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for VarSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VarSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&i| i == 0 || i > 32) {
            return Err(serde::de::Error::custom("variable index out of range"));
        }
        Ok(v.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum QuotientStatus {
    Linear,
    /// The colon ideal for generator `index` has the non-linear minimal
    /// generator `witness`.
    Failure {
        index: usize,
        witness: Monomial,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientStructure {
    power: PowerIdeal,
    sets: Vec<VarSet>,
    status: QuotientStatus,
}

impl QuotientStructure {
    pub(crate) fn from_parts(power: PowerIdeal, sets: Vec<VarSet>, status: QuotientStatus) -> Self {
        QuotientStructure { power, sets, status }
    }

    pub fn power(&self) -> &PowerIdeal {
        &self.power
    }

    pub fn generators(&self) -> &[Monomial] {
        self.power.generators()
    }

    pub fn sets(&self) -> &[VarSet] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> VarSet {
        self.sets[i]
    }

    pub fn status(&self) -> &QuotientStatus {
        &self.status
    }

    pub fn is_linear(&self) -> bool {
        self.status == QuotientStatus::Linear
    }

    pub fn require_linear(&self) -> Result<()> {
        match &self.status {
            QuotientStatus::Linear => Ok(()),
            QuotientStatus::Failure { index, witness } => {
                Err(Error::NotLinearQuotients { index: *index, witness: witness.clone() })
            }
        }
    }

    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(|s| s.len()).max().unwrap_or(0)
    }
}

/// Minimal monomial generators of `(prefix) : (m)`, sorted lex-descending.
pub fn colon_minimal_generators(prefix: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    let mut quotients: Vec<Monomial> = prefix.iter().map(|z| z.colon(m)).collect();
    quotients.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    quotients.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for q in quotients {
        if !minimal.iter().any(|g| g.divides(&q)) {
            minimal.push(q);
        }
    }
    minimal.sort_unstable_by(|a, b| b.cmp(a));
    minimal
}

/// Computes `set(m_i)` for every generator in order and whether every colon
/// ideal is generated by variables.
pub fn linear_quotients_check(power: PowerIdeal) -> QuotientStructure {
    let gens = power.generators();
    let mut sets = Vec::with_capacity(gens.len());
    let mut status = QuotientStatus::Linear;
    for (i, m) in gens.iter().enumerate() {
        let mut vars = VarSet::empty();
        let mut others: Vec<Monomial> = Vec::new();
        for z in &gens[..i] {
            let q = z.colon(m);
            match q.as_variable() {
                Some(x) => vars = vars.with(x),
                None => others.push(q),
            }
        }
        let uncovered = others.iter().any(|q| !q.support().any(|x| vars.contains(x)));
        if uncovered && status == QuotientStatus::Linear {
            let witness = colon_minimal_generators(&gens[..i], m)
                .into_iter()
                .find(|g| g.degree() != 1)
                .expect("an uncovered quotient yields a non-linear minimal generator");
            status = QuotientStatus::Failure { index: i, witness };
        }
        sets.push(vars);
    }
    QuotientStructure { power, sets, status }
}

/// Sorted multiset `{|set(m_i)|}`.
pub fn set_cardinality_profile(qs: &QuotientStructure) -> Result<Vec<usize>> {
    qs.require_linear()?;
    let mut sizes: Vec<usize> = qs.sets.iter().map(|s| s.len()).collect();
    sizes.sort_unstable();
    Ok(sizes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SetLemma {
    /// `s ∈ set(m) ⇒ s > min(m)`.
    AboveMin,
    /// `s ∈ set(m)` and `x_s m / x_min(m) ≺ v^k` ⇒ `s > min(m̃)`.
    AboveTildeMin,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub lemma: SetLemma,
    pub gen: usize,
    pub s: usize,
}

/// Checks both structural lemmas on `set(m)` for every generator. The
/// second one needs the split index, so it only runs on classified specs.
pub fn check_set_lemmas(qs: &QuotientStructure) -> std::result::Result<(), LemmaViolation> {
    let l = qs.power.spec().l();
    let vk = qs.power.v_power();
    for (i, m) in qs.generators().iter().enumerate() {
        let lo = m.min_index().expect("generators are nontrivial");
        for s in qs.sets[i].iter() {
            if s <= lo {
                return Err(LemmaViolation { lemma: SetLemma::AboveMin, gen: i, s });
            }
            let Some(l) = l else { continue };
            let shifted = m.mul_var(s).div_var(lo).unwrap();
            if shifted.prec_cmp(&vk, l).is_lt() {
                let ok = m.min_tilde_index(l).map(|t| s > t).unwrap_or(false);
                if !ok {
                    return Err(LemmaViolation { lemma: SetLemma::AboveTildeMin, gen: i, s });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexsegment::LexSegmentSpec;
    use crate::monomial::RingContext;
    use crate::powers::power_generators;

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
    fn varset_basics() {
        let s: VarSet = [2, 4].into_iter().collect();
        assert_eq!(s.to_vec(), vec![2, 4]);
        assert_eq!(s.count_below(4), 1);
        assert_eq!(s.count_below(2), 0);
        assert!(VarSet::empty().is_subset(s));
        assert_eq!(s.to_string(), "{2,4}");
        assert_eq!(VarSet::empty().to_string(), "∅");
        let all: VarSet = [1, 2, 3].into_iter().collect();
        let pairs: Vec<Vec<usize>> = all.subsets_of_size(2).into_iter().map(VarSet::to_vec).collect();
        assert_eq!(pairs, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(all.subsets_of_size(0), vec![VarSet::empty()]);
    }

    #[test]
    fn colon_examples() {
        let qs = example(1);
        let g = qs.generators();
        assert_eq!(colon_minimal_generators(&g[..3], &g[3]), vec![m(&[0, 1, 0, 0]), m(&[0, 0, 0, 1])]);
        assert_eq!(colon_minimal_generators(&g[..1], &g[1]), vec![m(&[0, 1, 0, 0])]);
        assert!(colon_minimal_generators(&[], &g[0]).is_empty());
    }

    #[test]
    fn example_sets() {
        let qs = example(1);
        assert!(qs.is_linear());
        let sets: Vec<Vec<usize>> = qs.sets().iter().map(|s| s.to_vec()).collect();
        assert_eq!(sets, vec![vec![], vec![2], vec![4], vec![2, 4], vec![3, 4]]);
        assert_eq!(set_cardinality_profile(&qs).unwrap(), vec![0, 1, 1, 2, 2]);
        check_set_lemmas(&qs).unwrap();
    }

    #[test]
    fn example_squared() {
        let qs = example(2);
        assert!(qs.is_linear());
        assert_eq!(set_cardinality_profile(&qs).unwrap().len(), 14);
        check_set_lemmas(&qs).unwrap();
    }

    #[test]
    fn single_generator() {
        let u = m(&[1, 0, 1, 0]);
        let spec = LexSegmentSpec::new(RingContext::new(4).unwrap(), u.clone(), u).unwrap();
        let qs = linear_quotients_check(power_generators(&spec, 2).unwrap());
        assert!(qs.is_linear());
        assert_eq!(qs.sets(), &[VarSet::empty()]);
        assert_eq!(set_cardinality_profile(&qs).unwrap(), vec![0]);
    }

    #[test]
    fn failure_is_reported() {
        // L = {x1x2, x1x3, x2^2} in revlex order x1x3, x2^2, x1x2 gives (x1x3) : x2^2 = (x1x3)
        let spec = LexSegmentSpec::new(RingContext::new(3).unwrap(), m(&[1, 1, 0]), m(&[0, 2, 0])).unwrap();
        let qs = linear_quotients_check(power_generators(&spec, 1).unwrap());
        match qs.status() {
            QuotientStatus::Failure { index, witness } => {
                assert_eq!(*index, 1);
                assert_eq!(witness.exponents(), &[1, 0, 1]);
            }
            QuotientStatus::Linear => panic!("expected failure"),
        }

        let spec = LexSegmentSpec::new(RingContext::new(4).unwrap(), m(&[1, 0, 0, 1]), m(&[0, 0, 2, 0])).unwrap();
        let qs = linear_quotients_check(power_generators(&spec, 1).unwrap());
        match qs.status() {
            QuotientStatus::Failure { witness, .. } => assert!(witness.degree() > 1),
            QuotientStatus::Linear => panic!("expected failure"),
        }
        assert!(set_cardinality_profile(&qs).is_err());
    }
}
