//! Hilbert series numerators of monomial quotients `S/J` by pivot splitting.
//!
//! For a monomial ideal `J` and a monomial `p ∉ J` the exact sequence
//! `0 -> S/(J:p)(-deg p) -> S/J -> S/(J + p) -> 0` gives
//! `N(J) = N(J + p) + t^deg(p) N(J : p)`. The recursion bottoms out when the
//! generators are pairwise coprime, where `N = Π (1 - t^deg m)`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000;

/// Integer polynomial `N(t)` with `Hilb(S/J) = N(t) / (1 - t)^n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertNumerator {
    coefficients: Vec<i64>,
}

impl HilbertNumerator {
    pub fn zero() -> Self {
        HilbertNumerator { coefficients: Vec::new() }
    }

    pub fn one() -> Self {
        HilbertNumerator { coefficients: vec![1] }
    }

    pub fn from_coefficients(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        HilbertNumerator { coefficients }
    }

    /// `1 - t^d`.
    pub fn principal(d: u32) -> Self {
        let mut p = Self::one();
        p.add_term(d, -1);
        p
    }

    pub fn coefficient(&self, d: u32) -> i64 {
        self.coefficients.get(d as usize).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Nonzero `(degree, coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coefficients.iter().enumerate().filter(|(_, &c)| c != 0).map(|(d, &c)| (d as u32, c))
    }

    pub fn add_term(&mut self, d: u32, c: i64) {
        let d = d as usize;
        if self.coefficients.len() <= d {
            self.coefficients.resize(d + 1, 0);
        }
        self.coefficients[d] += c;
        while self.coefficients.last() == Some(&0) {
            self.coefficients.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        let sum = (0..len as u32).map(|d| self.coefficient(d) + other.coefficient(d)).collect();
        Self::from_coefficients(sum)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return Self::zero();
        }
        let mut out = vec![0i64; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coefficients(out)
    }

    /// Multiplication by `t^d`.
    pub fn shift(&self, d: u32) -> Self {
        if self.coefficients.is_empty() {
            return Self::zero();
        }
        let mut c = vec![0; d as usize];
        c.extend_from_slice(&self.coefficients);
        Self::from_coefficients(c)
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.terms() {
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (d, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{mag}t")?,
                (_, 1) => write!(f, "t^{d}")?,
                _ => write!(f, "{mag}t^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotPolicy {
    /// The variable occurring in the most generators, raised to the median
    /// of its positive exponents.
    #[default]
    MostFrequentVariable,
    /// The smallest-index variable shared by two generators, to the first
    /// power.
    FirstSharedVariable,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort_unstable();
    out
}

fn coprime(a: &Monomial, b: &Monomial) -> bool {
    a.exponents().iter().zip(b.exponents()).all(|(x, y)| *x == 0 || *y == 0)
}

struct Splitter {
    policy: PivotPolicy,
    memo: HashMap<Vec<Monomial>, HilbertNumerator>,
    nodes: u64,
    budget: u64,
}

impl Splitter {
    fn pivot(&self, gens: &[Monomial]) -> Monomial {
        let n = gens[0].n();
        let counts: Vec<usize> = (1..=n).map(|i| gens.iter().filter(|g| g.exp(i) > 0).count()).collect();
        let (var, exp) = match self.policy {
            PivotPolicy::MostFrequentVariable => {
                let var = (1..=n).max_by_key(|&i| (counts[i - 1], std::cmp::Reverse(i))).unwrap();
                let mut exps: Vec<u32> = gens.iter().map(|g| g.exp(var)).filter(|&a| a > 0).collect();
                exps.sort_unstable();
                let mut e = exps[(exps.len() - 1) / 2];
                let p = pure_power(n, var, e);
                if gens.iter().any(|g| g.divides(&p)) {
                    e = 1;
                }
                (var, e)
            }
            PivotPolicy::FirstSharedVariable => ((1..=n).find(|&i| counts[i - 1] >= 2).unwrap(), 1),
        };
        pure_power(n, var, exp)
    }

    fn numerator(&mut self, gens: Vec<Monomial>) -> Result<HilbertNumerator> {
        let gens = minimalize(gens);
        if gens.is_empty() {
            return Ok(HilbertNumerator::one());
        }
        if gens.iter().any(Monomial::is_one) {
            return Ok(HilbertNumerator::zero());
        }
        let all_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| coprime(a, b)));
        if all_coprime {
            return Ok(gens
                .iter()
                .fold(HilbertNumerator::one(), |acc, g| acc.mul(&HilbertNumerator::principal(g.degree()))));
        }
        if let Some(hit) = self.memo.get(&gens) {
            return Ok(hit.clone());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                what: "Hilbert recursion nodes",
                needed: self.nodes as u128,
                limit: self.budget as u128,
            });
        }
        let p = self.pivot(&gens);
        let mut with_pivot = gens.clone();
        with_pivot.push(p.clone());
        let colon: Vec<Monomial> = gens.iter().map(|g| g.colon(&p)).collect();
        let left = self.numerator(with_pivot)?;
        let right = self.numerator(colon)?.shift(p.degree());
        let result = left.add(&right);
        self.memo.insert(gens, result.clone());
        Ok(result)
    }
}

fn pure_power(n: usize, var: usize, e: u32) -> Monomial {
    let mut v = vec![0; n];
    v[var - 1] = e;
    Monomial::from_vec(v)
}

pub fn hilbert_numerator(gens: &[Monomial]) -> Result<HilbertNumerator> {
    hilbert_numerator_with(gens, PivotPolicy::default(), DEFAULT_NODE_BUDGET)
}

pub fn hilbert_numerator_with(gens: &[Monomial], policy: PivotPolicy, budget: u64) -> Result<HilbertNumerator> {
    let mut splitter = Splitter { policy, memo: HashMap::new(), nodes: 0, budget };
    splitter.numerator(gens.to_vec())
}
