//! Exponent-vector monomials in `K[x_1, ..., x_n]`.
//!
//! Variables are indexed from 1 in every public API, matching the usual
//! `x_1 > x_2 > ... > x_n` convention. Internally exponents are stored
//! densely, one slot per variable.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ambient polynomial ring: only the number of variables matters here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingContext {
    n: usize,
}

impl RingContext {
    pub const MAX_VARS: usize = 32;

    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVariables { min: 2, got: n });
        }
        if n > Self::MAX_VARS {
            return Err(Error::TooManyVariables { max: Self::MAX_VARS, got: n });
        }
        Ok(RingContext { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> Monomial {
        Monomial::from_vec(vec![0; self.n])
    }

    /// The variable `x_i`, `1 <= i <= n`.
    pub fn var(&self, i: usize) -> Monomial {
        assert!((1..=self.n).contains(&i), "variable index {i} out of range");
        let mut e = vec![0; self.n];
        e[i - 1] = 1;
        Monomial::from_vec(e)
    }

    /// Builds a monomial from signed exponents, rejecting bad lengths and
    /// negative entries.
    pub fn monomial(&self, exponents: &[i64]) -> Result<Monomial> {
        if exponents.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: exponents.len() });
        }
        let mut e = Vec::with_capacity(self.n);
        for (i, &a) in exponents.iter().enumerate() {
            if a < 0 {
                return Err(Error::NegativeExponent { index: i + 1, value: a });
            }
            e.push(u32::try_from(a).map_err(|_| Error::NegativeExponent { index: i + 1, value: a })?);
        }
        Ok(Monomial::from_vec(e))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.n() == self.n
    }

    /// All monomials of degree `d`, in lex-descending order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.n];
        fill_degree(&mut cur, 0, d, &mut out);
        out
    }
}

fn fill_degree(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(Monomial::from_vec(cur.clone()));
        cur[pos] = 0;
        return;
    }
    for a in (0..=left).rev() {
        cur[pos] = a;
        fill_degree(cur, pos + 1, left - a, out);
    }
    cur[pos] = 0;
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}` with its degree cached.
///
/// `Ord` is the lexicographic order with `x_1 > ... > x_n`; it does not
/// look at degrees, so it is a monomial order only on equal-degree sets.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", from = "Vec<u32>")]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl From<Vec<u32>> for Monomial {
    fn from(e: Vec<u32>) -> Self {
        Monomial::from_vec(e)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.exponents
    }
}

impl Monomial {
    pub fn from_vec(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `nu_i(m)` for `1 <= i <= n`.
    pub fn exp(&self, i: usize) -> u32 {
        self.exponents[i - 1]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Variable indices with nonzero exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i + 1)
    }

    /// `min(supp(m))`.
    pub fn min_index(&self) -> Result<usize> {
        self.support().next().ok_or(Error::EmptySupport)
    }

    /// `max(supp(m))`.
    pub fn max_index(&self) -> Result<usize> {
        self.support().last().ok_or(Error::EmptySupport)
    }

    /// `min(supp(m) ∩ {l+1..n})`, the smallest variable of the tilde part.
    pub fn min_tilde_index(&self, l: usize) -> Result<usize> {
        self.support().find(|&i| i > l).ok_or_else(|| Error::NoTildeSupport(self.clone(), l))
    }

    pub fn multiply(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial::from_vec(self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect())
    }

    /// `x_i * self`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.exponents.clone();
        e[i - 1] += 1;
        Monomial { exponents: e, degree: self.degree + 1 }
    }

    /// `self / x_i`, or `None` when `x_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exponents[i - 1] == 0 {
            return None;
        }
        let mut e = self.exponents.clone();
        e[i - 1] -= 1;
        Some(Monomial { exponents: e, degree: self.degree - 1 })
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::from_vec(self.exponents.iter().map(|a| a * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn try_divide(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a - b).collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_vec(self.exponents.iter().zip(&other.exponents).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_vec(self.exponents.iter().zip(&other.exponents).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / gcd(self, other)`, the generator that `self` contributes to
    /// the colon ideal `(self) : (other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::from_vec(self.exponents.iter().zip(&other.exponents).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// If this is a single variable `x_i`, returns `i`.
    pub fn as_variable(&self) -> Option<usize> {
        if self.degree == 1 {
            self.support().next()
        } else {
            None
        }
    }

    /// Degree of the bar part, i.e. of the factor in `K[x_1..x_l]`.
    pub fn bar_degree(&self, l: usize) -> u32 {
        self.exponents[..l].iter().sum()
    }

    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exponents.cmp(&other.exponents)
    }

    /// Reverse lexicographic comparison: scanning from `x_n` down, at the
    /// first differing index the monomial with the *larger* exponent is
    /// the smaller one.
    pub fn revlex_cmp(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.exponents.iter().zip(&other.exponents).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }

    /// The order `≺` relative to `l`: bar degree first, then lex.
    pub fn prec_cmp(&self, other: &Monomial, l: usize) -> Ordering {
        self.bar_degree(l).cmp(&other.bar_degree(l)).then_with(|| self.lex_cmp(other))
    }

    pub fn split(&self, l: usize) -> BarTildeSplit {
        let mut bar = self.exponents.clone();
        let mut tilde = self.exponents.clone();
        bar[l..].iter_mut().for_each(|a| *a = 0);
        tilde[..l].iter_mut().for_each(|a| *a = 0);
        BarTildeSplit { bar: Monomial::from_vec(bar), tilde: Monomial::from_vec(tilde), l }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &a) in self.exponents.iter().enumerate() {
            match a {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, a)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `m = bar * tilde` with `bar ∈ K[x_1..x_l]` and `tilde ∈ K[x_{l+1}..x_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarTildeSplit {
    pub bar: Monomial,
    pub tilde: Monomial,
    pub l: usize,
}

fn same_context(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::ContextMismatch { left: a.n(), right: b.n() });
    }
    Ok(())
}

fn same_degree(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    Ok(())
}

/// Checks that `2 <= l <= n - 1`.
pub fn check_split_index(n: usize, l: usize) -> Result<()> {
    if l < 2 || l + 1 > n {
        return Err(Error::InvalidSplit { l, max: n.saturating_sub(1) });
    }
    Ok(())
}

pub fn monomial_from_exponents(ctx: &RingContext, e: &[i64]) -> Result<Monomial> {
    ctx.monomial(e)
}

pub fn cmp_lex(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    same_context(a, b)?;
    Ok(a.lex_cmp(b))
}

pub fn cmp_revlex(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    same_context(a, b)?;
    same_degree(a, b)?;
    Ok(a.revlex_cmp(b))
}

pub fn cmp_prec(a: &Monomial, b: &Monomial, l: usize) -> Result<Ordering> {
    same_context(a, b)?;
    same_degree(a, b)?;
    check_split_index(a.n(), l)?;
    Ok(a.prec_cmp(b, l))
}

pub fn bar_tilde_split(m: &Monomial, l: usize) -> Result<BarTildeSplit> {
    check_split_index(m.n(), l)?;
    Ok(m.split(l))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx4() -> RingContext {
        RingContext::new(4).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_vec(e.to_vec())
    }

    #[test]
    fn construction() {
        let c = ctx4();
        let u = c.monomial(&[1, 0, 1, 0]).unwrap();
        assert_eq!(u.to_string(), "x1x3");
        assert_eq!(u.degree(), 2);
        let one = c.monomial(&[0, 0, 0, 0]).unwrap();
        assert!(one.is_one());
        assert_eq!(one.to_string(), "1");
        let sq = c.monomial(&[0, 2, 0, 0]).unwrap();
        assert_eq!(sq.to_string(), "x2^2");
        assert_eq!(sq.degree(), 2);

        assert_eq!(c.monomial(&[1, 0, 1]), Err(Error::LengthMismatch { expected: 4, got: 3 }));
        assert_eq!(c.monomial(&[1, -1, 0, 0]), Err(Error::NegativeExponent { index: 2, value: -1 }));
        assert!(RingContext::new(1).is_err());
    }

    #[test]
    fn lex_examples() {
        let (x1x3, x2x4, x2sq) = (m(&[1, 0, 1, 0]), m(&[0, 1, 0, 1]), m(&[0, 2, 0, 0]));
        assert_eq!(cmp_lex(&x1x3, &x2x4).unwrap(), Ordering::Greater);
        assert_eq!(cmp_lex(&x2sq, &x2x4).unwrap(), Ordering::Greater);
        assert_eq!(cmp_lex(&x2sq, &x2sq).unwrap(), Ordering::Equal);
        assert!(cmp_lex(&x1x3, &m(&[1, 0, 1])).is_err());
    }

    #[test]
    fn revlex_examples() {
        let (x2x4, x1x4, x2sq, x1x3) = (m(&[0, 1, 0, 1]), m(&[1, 0, 0, 1]), m(&[0, 2, 0, 0]), m(&[1, 0, 1, 0]));
        assert_eq!(cmp_revlex(&x2x4, &x1x4).unwrap(), Ordering::Less);
        assert_eq!(cmp_revlex(&x2sq, &x1x3).unwrap(), Ordering::Greater);
        assert_eq!(cmp_revlex(&x1x3, &x1x3).unwrap(), Ordering::Equal);
        assert!(matches!(cmp_revlex(&x1x3, &m(&[1, 0, 0, 0])), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn prec_examples() {
        let (x3x4, x2x4, x2x3) = (m(&[0, 0, 1, 1]), m(&[0, 1, 0, 1]), m(&[0, 1, 1, 0]));
        assert_eq!(cmp_prec(&x3x4, &x2x4, 2).unwrap(), Ordering::Less);
        assert_eq!(cmp_prec(&x2x3, &x2x4, 2).unwrap(), Ordering::Greater);
        assert_eq!(cmp_prec(&x2x3, &x2x3, 2).unwrap(), Ordering::Equal);
        assert!(matches!(cmp_prec(&x2x3, &x2x4, 1), Err(Error::InvalidSplit { .. })));
        assert!(matches!(cmp_prec(&x2x3, &x2x4, 4), Err(Error::InvalidSplit { .. })));
    }

    #[test]
    fn split_examples() {
        let s = bar_tilde_split(&m(&[1, 0, 1, 0]), 2).unwrap();
        assert_eq!((s.bar, s.tilde), (m(&[1, 0, 0, 0]), m(&[0, 0, 1, 0])));
        let s = bar_tilde_split(&m(&[0, 1, 0, 2]), 2).unwrap();
        assert_eq!((s.bar, s.tilde), (m(&[0, 1, 0, 0]), m(&[0, 0, 0, 2])));
        let s = bar_tilde_split(&ctx4().one(), 2).unwrap();
        assert!(s.bar.is_one() && s.tilde.is_one());
    }

    #[test]
    fn arithmetic() {
        let (x2x4, x1x3) = (m(&[0, 1, 0, 1]), m(&[1, 0, 1, 0]));
        assert!(x2x4.gcd(&x1x3).is_one());
        assert_eq!(x2x4.colon(&x1x3), x2x4);
        assert_eq!(m(&[1, 1, 0, 1]).try_divide(&m(&[1, 0, 0, 1])), Some(m(&[0, 1, 0, 0])));
        assert_eq!(x1x3.try_divide(&x2x4), None);
        assert_eq!(x1x3.min_tilde_index(2).unwrap(), 3);
        assert_eq!(x1x3.min_index().unwrap(), 1);
        assert_eq!(ctx4().one().min_index(), Err(Error::EmptySupport));
        assert!(m(&[1, 1, 0, 0]).min_tilde_index(2).is_err());
        assert_eq!(x2x4.lcm(&x1x3), m(&[1, 1, 1, 1]));
    }

    #[test]
    fn degree_enumeration() {
        let c = RingContext::new(3).unwrap();
        let all = c.monomials_of_degree(2);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }
}
