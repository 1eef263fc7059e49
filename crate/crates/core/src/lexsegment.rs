//! Lexsegment sets `L(u, v)`, shadows, and classification of `(u, v)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, RingContext};

/// The endpoints of a lexsegment `L(u, v)` together with the split index
/// `l` once the pair has been recognized as `u = x1*x_{l+1}^a..x_n^a`,
/// `v = x_l*x_n^(d-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexSegmentSpec {
    ctx: RingContext,
    d: u32,
    u: Monomial,
    v: Monomial,
    l: Option<usize>,
}

impl LexSegmentSpec {
    pub fn new(ctx: RingContext, u: Monomial, v: Monomial) -> Result<Self> {
        check_endpoints(&ctx, &u, &v)?;
        Ok(LexSegmentSpec { ctx, d: u.degree(), u, v, l: None })
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn u(&self) -> &Monomial {
        &self.u
    }

    pub fn v(&self) -> &Monomial {
        &self.v
    }

    pub fn l(&self) -> Option<usize> {
        self.l
    }

    pub fn is_normalized(&self) -> bool {
        self.u.exp(1) >= 1 && self.v.exp(1) == 0
    }

    /// Runs [`classify_linear_form`] and records `l` on success.
    pub fn classified(mut self) -> Result<Self> {
        match classify_linear_form(&self)? {
            LinearForm::Yes { l } => {
                self.l = Some(l);
                Ok(self)
            }
            LinearForm::No => Err(Error::Unclassified),
        }
    }

    pub fn lexsegment(&self) -> Vec<Monomial> {
        walk_interval(&self.u, &self.v)
    }
}

fn check_endpoints(ctx: &RingContext, u: &Monomial, v: &Monomial) -> Result<()> {
    for m in [u, v] {
        if !ctx.contains(m) {
            return Err(Error::ContextMismatch { left: ctx.n(), right: m.n() });
        }
    }
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch { left: u.degree(), right: v.degree() });
    }
    if u < v {
        return Err(Error::EndpointsOutOfOrder { u: u.clone(), v: v.clone() });
    }
    Ok(())
}

/// The next smaller monomial of the same degree in lex order, or `None`
/// when `m` is already `x_n^deg`.
pub fn lex_successor(m: &Monomial) -> Option<Monomial> {
    let e = m.exponents();
    let n = e.len();
    let j = (0..n - 1).rev().find(|&j| e[j] > 0)?;
    let mut next = e.to_vec();
    let tail: u32 = e[j + 1..].iter().sum();
    next[j] -= 1;
    next[j + 1] = tail + 1;
    next[j + 2..].iter_mut().for_each(|a| *a = 0);
    Some(Monomial::from_vec(next))
}

fn walk_interval(u: &Monomial, v: &Monomial) -> Vec<Monomial> {
    let mut out = vec![u.clone()];
    let mut cur = u.clone();
    while cur != *v {
        cur = lex_successor(&cur).expect("v lies below u in the same degree");
        out.push(cur.clone());
    }
    out
}

/// All degree-`d` monomials `w` with `u >= w >= v` in lex order, listed
/// lex-descending. Both endpoints are included.
pub fn enumerate_lexsegment(u: &Monomial, v: &Monomial) -> Result<Vec<Monomial>> {
    let ctx = RingContext::new(u.n())?;
    check_endpoints(&ctx, u, v)?;
    Ok(walk_interval(u, v))
}

/// `Shad(T) = { x_i w : w ∈ T }`, deduplicated and sorted lex-descending.
pub fn shadow(ctx: &RingContext, set: &[Monomial]) -> Vec<Monomial> {
    let mut seen = HashSet::with_capacity(set.len() * ctx.n());
    for w in set {
        for i in 1..=ctx.n() {
            seen.insert(w.mul_var(i));
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn check_equidegree(set: &[Monomial]) -> Result<u32> {
    let first = set.first().ok_or(Error::EmptySet)?;
    for m in set {
        if m.degree() != first.degree() {
            return Err(Error::MixedDegrees(first.degree(), m.degree()));
        }
    }
    Ok(first.degree())
}

/// Returns the lex-largest monomial of the interval spanned by `set` that
/// is missing from it, or `None` if `set` is a lexsegment.
pub fn lexsegment_gap(set: &[Monomial]) -> Result<Option<Monomial>> {
    check_equidegree(set)?;
    let members: HashSet<&Monomial> = set.iter().collect();
    let top = set.iter().max().unwrap();
    let bottom = set.iter().min().unwrap();
    let mut cur = top.clone();
    loop {
        if !members.contains(&cur) {
            return Ok(Some(cur));
        }
        if cur == *bottom {
            return Ok(None);
        }
        cur = lex_successor(&cur).expect("bottom is below cur");
    }
}

pub fn is_lexsegment_set(set: &[Monomial]) -> Result<bool> {
    Ok(lexsegment_gap(set)?.is_none())
}

/// Outcome of checking iterated shadows for the lexsegment property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CompletelyLexVerdict {
    /// Every shadow checked was a lexsegment and first-shadow persistence
    /// was assumed.
    Yes,
    /// `Shad^shadow(L)` is not a lexsegment; `witness` lies in its lex
    /// interval but not in the shadow.
    No { shadow: u32, witness: Monomial },
    /// Shadows `1..=depth` are all lexsegments; nothing is claimed beyond.
    UnknownAtDepth { depth: u32 },
}

pub fn is_completely_lexsegment(
    spec: &LexSegmentSpec,
    depth: u32,
    first_shadow_persistence: bool,
) -> CompletelyLexVerdict {
    let ctx = spec.ctx();
    let mut current = spec.lexsegment();
    let depth = if first_shadow_persistence { 1 } else { depth };
    for i in 1..=depth {
        current = shadow(&ctx, &current);
        if let Some(witness) = lexsegment_gap(&current).expect("shadows are nonempty and equidegree") {
            return CompletelyLexVerdict::No { shadow: i, witness };
        }
    }
    if first_shadow_persistence {
        CompletelyLexVerdict::Yes
    } else {
        CompletelyLexVerdict::UnknownAtDepth { depth }
    }
}

/// How `(u, v)` was rewritten so that `x1 | u` and `x1 ∤ v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Normalization {
    Identity,
    /// Both endpoints divided by `x1^shift`; the ideals are isomorphic.
    Shifted {
        shift: u32,
    },
    /// `nu_1(u) = nu_1(v) = common`: the segment lives in `K[x_2..x_n]`
    /// in degree `d - common`.
    Reduced {
        common: u32,
    },
}

pub fn normalize_spec(u: &Monomial, v: &Monomial) -> Result<(LexSegmentSpec, Normalization)> {
    let ctx = RingContext::new(u.n())?;
    check_endpoints(&ctx, u, v)?;
    let (a1, b1) = (u.exp(1), v.exp(1));
    if a1 == 0 {
        return Err(Error::NotDivisibleByX1(u.clone()));
    }
    if b1 == 0 {
        return Ok((LexSegmentSpec::new(ctx, u.clone(), v.clone())?, Normalization::Identity));
    }
    let mut shift = vec![0; ctx.n()];
    shift[0] = b1;
    let shift = Monomial::from_vec(shift);
    let u2 = u.try_divide(&shift).unwrap();
    let v2 = v.try_divide(&shift).unwrap();
    let how = if a1 == b1 { Normalization::Reduced { common: a1 } } else { Normalization::Shifted { shift: b1 } };
    Ok((LexSegmentSpec::new(ctx, u2, v2)?, how))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "linear_form", rename_all = "kebab-case")]
pub enum LinearForm {
    Yes { l: usize },
    No,
}

/// Recognizes `u = x1 * x_{l+1}^{a_{l+1}} ... x_n^{a_n}` and
/// `v = x_l * x_n^{d-1}` with `2 <= l <= n - 1`, reading `l` off `v`.
pub fn classify_linear_form(spec: &LexSegmentSpec) -> Result<LinearForm> {
    if !spec.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let (n, d) = (spec.n(), spec.d());
    let (u, v) = (spec.u(), spec.v());
    let l = v.min_index()?;
    if l < 2 || l + 1 > n || u.exp(1) != 1 || (2..=l).any(|i| u.exp(i) != 0) {
        return Ok(LinearForm::No);
    }
    let mut expected = vec![0; n];
    expected[l - 1] += 1;
    expected[n - 1] += d - 1;
    if v.exponents() != expected.as_slice() {
        return Ok(LinearForm::No);
    }
    Ok(LinearForm::Yes { l })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub completely_lex: CompletelyLexVerdict,
    pub linear_form: LinearForm,
    pub notes: Vec<String>,
}

pub fn classify(spec: &LexSegmentSpec, depth: u32, first_shadow_persistence: bool) -> Result<Classification> {
    let linear_form = classify_linear_form(spec)?;
    let completely_lex = is_completely_lexsegment(spec, depth, first_shadow_persistence);
    let mut notes = Vec::new();
    match &completely_lex {
        CompletelyLexVerdict::No { shadow, witness } => {
            notes.push(format!("shadow {shadow} misses {witness} from its lex interval"))
        }
        CompletelyLexVerdict::UnknownAtDepth { depth } => {
            notes.push(format!("shadows 1..={depth} are lexsegment sets; deeper shadows not checked"))
        }
        CompletelyLexVerdict::Yes => {
            notes.push("first shadow is a lexsegment set; persistence to all shadows assumed".into())
        }
    }
    match linear_form {
        LinearForm::Yes { l } => notes.push(format!("u, v match the linear-quotient pattern with l = {l}")),
        LinearForm::No => notes.push("u, v do not match the linear-quotient pattern".into()),
    }
    Ok(Classification { completely_lex, linear_form, notes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_vec(e.to_vec())
    }

    fn spec(u: &[u32], v: &[u32]) -> LexSegmentSpec {
        LexSegmentSpec::new(RingContext::new(u.len()).unwrap(), m(u), m(v)).unwrap()
    }

    #[test]
    fn enumerate_example_segment() {
        let l = enumerate_lexsegment(&m(&[1, 0, 1, 0]), &m(&[0, 1, 0, 1])).unwrap();
        let shown: Vec<String> = l.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["x1x3", "x1x4", "x2^2", "x2x3", "x2x4"]);

        let u = m(&[0, 1, 1, 0]);
        assert_eq!(enumerate_lexsegment(&u, &u).unwrap(), vec![u.clone()]);

        let l = enumerate_lexsegment(&m(&[2, 0]), &m(&[0, 2])).unwrap();
        assert_eq!(l, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn enumerate_errors() {
        assert!(matches!(
            enumerate_lexsegment(&m(&[0, 1, 0, 1]), &m(&[1, 0, 1, 0])),
            Err(Error::EndpointsOutOfOrder { .. })
        ));
        assert!(matches!(
            enumerate_lexsegment(&m(&[1, 0, 1, 0]), &m(&[0, 1, 0, 0])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn shadow_examples() {
        let ctx = RingContext::new(4).unwrap();
        let s = shadow(&ctx, &[m(&[0, 0, 0, 2])]);
        assert_eq!(s, vec![m(&[1, 0, 0, 2]), m(&[0, 1, 0, 2]), m(&[0, 0, 1, 2]), m(&[0, 0, 0, 3])]);
        assert!(shadow(&ctx, &[]).is_empty());

        let l = spec(&[1, 0, 1, 0], &[0, 1, 0, 1]).lexsegment();
        let s = shadow(&ctx, &l);
        assert_eq!(s.len(), 14);
        assert_eq!(s.first(), Some(&m(&[2, 0, 1, 0])));
        assert_eq!(s.last(), Some(&m(&[0, 1, 0, 2])));
    }

    #[test]
    fn lexsegment_set_examples() {
        assert!(is_lexsegment_set(&spec(&[1, 0, 1, 0], &[0, 1, 0, 1]).lexsegment()).unwrap());
        assert!(!is_lexsegment_set(&[m(&[1, 1, 0]), m(&[0, 1, 1])]).unwrap());
        assert_eq!(lexsegment_gap(&[m(&[1, 1, 0]), m(&[0, 1, 1])]).unwrap(), Some(m(&[1, 0, 1])));
        assert!(is_lexsegment_set(&[m(&[0, 1, 1])]).unwrap());
        assert_eq!(is_lexsegment_set(&[m(&[0, 1, 1]), m(&[1, 0, 0])]), Err(Error::MixedDegrees(2, 1)));
        assert_eq!(is_lexsegment_set(&[]), Err(Error::EmptySet));
    }

    #[test]
    fn completely_lex_examples() {
        let s = spec(&[0, 1, 0], &[0, 1, 0]);
        assert_eq!(
            is_completely_lexsegment(&s, 1, false),
            CompletelyLexVerdict::No { shadow: 1, witness: m(&[1, 0, 1]) }
        );
        let s = spec(&[2, 0], &[2, 0]);
        assert_eq!(is_completely_lexsegment(&s, 3, false), CompletelyLexVerdict::UnknownAtDepth { depth: 3 });
        assert_eq!(is_completely_lexsegment(&s, 3, true), CompletelyLexVerdict::Yes);
    }

    #[test]
    fn normalization() {
        let (s, how) = normalize_spec(&m(&[2, 0, 1]), &m(&[1, 2, 0])).unwrap();
        assert_eq!((s.u(), s.v(), how), (&m(&[1, 0, 1]), &m(&[0, 2, 0]), Normalization::Shifted { shift: 1 }));
        let (s, how) = normalize_spec(&m(&[1, 0, 1, 0]), &m(&[0, 1, 0, 1])).unwrap();
        assert_eq!((s.u(), how), (&m(&[1, 0, 1, 0]), Normalization::Identity));
        let (s, how) = normalize_spec(&m(&[2, 1, 0]), &m(&[2, 0, 1])).unwrap();
        assert_eq!(
            (s.u(), s.v(), s.d(), how),
            (&m(&[0, 1, 0]), &m(&[0, 0, 1]), 1, Normalization::Reduced { common: 2 })
        );
        assert!(matches!(normalize_spec(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Err(Error::NotDivisibleByX1(_))));
    }

    #[test]
    fn linear_form_examples() {
        assert_eq!(classify_linear_form(&spec(&[1, 0, 1, 0], &[0, 1, 0, 1])).unwrap(), LinearForm::Yes { l: 2 });
        assert_eq!(classify_linear_form(&spec(&[1, 1, 0], &[0, 2, 0])).unwrap(), LinearForm::No);
        assert_eq!(classify_linear_form(&spec(&[1, 0, 2, 0], &[0, 1, 0, 2])).unwrap(), LinearForm::Yes { l: 2 });
        assert_eq!(classify_linear_form(&spec(&[1, 0, 0, 1], &[0, 0, 1, 1])).unwrap(), LinearForm::Yes { l: 3 });
        // x1x3 with l = 3 would need nu_3(u) = 0
        assert_eq!(classify_linear_form(&spec(&[1, 0, 1, 0], &[0, 0, 1, 1])).unwrap(), LinearForm::No);
        assert_eq!(classify_linear_form(&spec(&[2, 0, 0], &[1, 1, 0])), Err(Error::NotNormalized));
    }
}
