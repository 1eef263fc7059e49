//! The iterated mapping-cone resolution of `S/I^k` built from linear
//! quotients and a regular decomposition function.
//!
//! `F_0 = S`; for `i >= 1` the free module `F_i` has basis symbols
//! `f(σ; w)` with `σ ⊆ set(w)` and `|σ| = i - 1`. The map
//! `∂_i : F_{i+1} -> F_i` sends
//!
//! ```text
//! f(σ; w) ↦ Σ_{s∈σ} (-1)^α(σ;s) x_c f(σ∖s; g(x_s w))  -  Σ_{s∈σ} (-1)^α(σ;s) x_s f(σ∖s; w)
//! ```
//!
//! where `x_c = x_s w / g(x_s w)`, `α(σ;s) = |{t ∈ σ : t < s}|`, and terms
//! with `σ∖s ⊄ set(g(x_s w))` are dropped. `∂_0` sends `f(∅; w)` to `w`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decomposition::{g_oracle_record, regularity_check, DecompositionContext, RegularityReport};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::quotients::{QuotientStructure, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisSymbol {
    pub sigma: VarSet,
    pub gen: usize,
    pub degree: u32,
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f({};u{})", self.sigma, self.gen + 1)
    }
}

/// The entry `sign * x_var` at `(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedVariableEntry {
    #[serde(rename = "r")]
    pub row: usize,
    #[serde(rename = "c")]
    pub col: usize,
    pub sign: i8,
    pub var: usize,
}

/// Coordinate-format matrix whose entries are `±x_i`, sorted by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<SignedVariableEntry>,
    col_starts: Vec<usize>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize, mut entries: Vec<SignedVariableEntry>) -> Self {
        entries.sort_unstable_by_key(|e| (e.col, e.row, e.var));
        let mut col_starts = vec![0; cols + 1];
        for e in &entries {
            col_starts[e.col + 1] += 1;
        }
        for c in 0..cols {
            col_starts[c + 1] += col_starts[c];
        }
        SparseMatrix { rows, cols, entries, col_starts }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[SignedVariableEntry] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> &[SignedVariableEntry] {
        &self.entries[self.col_starts[c]..self.col_starts[c + 1]]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionRoute {
    /// Closed-form `g` for classified specs.
    ClosedForm,
    /// `g` evaluated by scanning generators; requires a regular `g`.
    Oracle,
}

#[derive(Debug, Clone, Copy)]
pub struct ResolveOptions {
    pub route: DecompositionRoute,
    /// Re-evaluate every closed-form value with the oracle and abort on a
    /// mismatch.
    pub shadow_oracle: bool,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { route: DecompositionRoute::ClosedForm, shadow_oracle: true }
    }
}

/// One term of the expansion of `∂ f(σ; w)`, including terms dropped by
/// the `σ ⊄ set(z)` rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub sign: i8,
    pub var: usize,
    pub sigma: VarSet,
    pub gen: usize,
    pub kept: bool,
}

/// `g(x_s w)` as (generator position, coefficient variable).
pub(crate) type DecompositionTable = HashMap<(usize, usize), (usize, usize)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionComplex {
    qs: QuotientStructure,
    route: DecompositionRoute,
    decomposition: DecompositionTable,
    bases: Vec<Vec<BasisSymbol>>,
    maps: Vec<SparseMatrix>,
    betti: Vec<usize>,
    shifts: Vec<u32>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn sign_of(alpha: usize) -> i8 {
    if alpha.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn decomposition_table(qs: &QuotientStructure, opts: ResolveOptions) -> Result<DecompositionTable> {
    let mut table = HashMap::new();
    match opts.route {
        DecompositionRoute::ClosedForm => {
            let ctx = DecompositionContext::new(qs)?;
            for gen in 0..qs.generators().len() {
                for s in qs.set(gen).iter() {
                    let rec = ctx.g_closed_form(gen, s)?;
                    if opts.shadow_oracle {
                        let oracle = g_oracle_record(qs, gen, s)?;
                        if oracle.g_index != rec.g_index {
                            return Err(Error::ClosedFormMismatch {
                                gen,
                                s,
                                closed: rec.g_value,
                                oracle: oracle.g_value,
                            });
                        }
                    }
                    table.insert((gen, s), (rec.g_index, rec.coefficient));
                }
            }
        }
        DecompositionRoute::Oracle => {
            match regularity_check(qs, None) {
                RegularityReport::Regular => {}
                RegularityReport::Counterexample { gen, s, t } => return Err(Error::NotRegular { gen, s, t }),
                RegularityReport::Mismatch { .. } => unreachable!("no closed form supplied"),
            }
            for gen in 0..qs.generators().len() {
                for s in qs.set(gen).iter() {
                    let rec = g_oracle_record(qs, gen, s)?;
                    table.insert((gen, s), (rec.g_index, rec.coefficient));
                }
            }
        }
    }
    Ok(table)
}

type Layout = (Vec<Vec<BasisSymbol>>, Vec<usize>, Vec<u32>);

/// Bases of `F_1..F_len`, Betti numbers from binomial sums, and shifts.
fn layout(qs: &QuotientStructure) -> Layout {
    let base_degree = qs.power().degree();
    let top = qs.max_set_size() + 1;
    let mut bases = Vec::with_capacity(top);
    for i in 1..=top {
        let mut basis = Vec::new();
        for gen in 0..qs.generators().len() {
            for sigma in qs.set(gen).subsets_of_size(i - 1) {
                basis.push(BasisSymbol { sigma, gen, degree: base_degree + (i - 1) as u32 });
            }
        }
        bases.push(basis);
    }
    let betti =
        std::iter::once(1).chain((1..=top).map(|i| qs.sets().iter().map(|s| binomial(s.len(), i - 1)).sum())).collect();
    let shifts = std::iter::once(0).chain((1..=top).map(|i| base_degree + (i - 1) as u32)).collect();
    (bases, betti, shifts)
}

impl ResolutionComplex {
    pub fn build(qs: QuotientStructure, opts: ResolveOptions) -> Result<Self> {
        qs.require_linear()?;
        let decomposition = decomposition_table(&qs, opts)?;
        let (bases, betti, shifts) = layout(&qs);
        let mut rc = ResolutionComplex { qs, route: opts.route, decomposition, bases, maps: Vec::new(), betti, shifts };
        rc.maps = (1..rc.bases.len()).map(|i| rc.assemble_map(i)).collect();
        Ok(rc)
    }

    /// Reassembles a complex from imported parts without recomputing maps.
    pub(crate) fn from_parts(
        qs: QuotientStructure,
        route: DecompositionRoute,
        decomposition: DecompositionTable,
        maps: Vec<SparseMatrix>,
    ) -> Result<Self> {
        qs.require_linear()?;
        let (bases, betti, shifts) = layout(&qs);
        if maps.len() + 1 != bases.len() {
            return Err(Error::Import(format!("expected {} maps, found {}", bases.len() - 1, maps.len())));
        }
        for (j, m) in maps.iter().enumerate() {
            if m.rows() != bases[j].len() || m.cols() != bases[j + 1].len() {
                return Err(Error::Import(format!("map {} has the wrong shape", j + 1)));
            }
            if m.entries().iter().any(|e| e.row >= m.rows() || e.col >= m.cols()) {
                return Err(Error::Import(format!("map {} has an entry out of range", j + 1)));
            }
        }
        Ok(ResolutionComplex { qs, route, decomposition, bases, maps, betti, shifts })
    }

    fn index_of(&self, i: usize) -> HashMap<(usize, VarSet), usize> {
        self.bases[i - 1].iter().enumerate().map(|(p, b)| ((b.gen, b.sigma), p)).collect()
    }

    /// The matrix of `∂_i : F_{i+1} -> F_i`, `i >= 1`.
    fn assemble_map(&self, i: usize) -> SparseMatrix {
        let rows = self.index_of(i);
        let mut entries = Vec::new();
        for (col, sym) in self.bases[i].iter().enumerate() {
            for term in self.expand(sym.sigma, sym.gen).into_iter().filter(|t| t.kept) {
                let row = rows[&(term.gen, term.sigma)];
                entries.push(SignedVariableEntry { row, col, sign: term.sign, var: term.var });
            }
        }
        SparseMatrix::new(self.bases[i - 1].len(), self.bases[i].len(), entries)
    }

    /// The full expansion of `∂ f(σ; gen)`, in the order
    /// decomposition terms first, then the `x_s f(σ∖s; w)` terms.
    pub fn expand(&self, sigma: VarSet, gen: usize) -> Vec<ExpansionTerm> {
        let mut terms = Vec::with_capacity(2 * sigma.len());
        for s in sigma.iter() {
            let sign = sign_of(sigma.count_below(s));
            let rest = sigma.without(s);
            let (g, c) = self.decomposition[&(gen, s)];
            terms.push(ExpansionTerm { sign, var: c, sigma: rest, gen: g, kept: rest.is_subset(self.qs.set(g)) });
        }
        for s in sigma.iter() {
            let sign = sign_of(sigma.count_below(s));
            terms.push(ExpansionTerm { sign: -sign, var: s, sigma: sigma.without(s), gen, kept: true });
        }
        terms
    }

    pub fn quotients(&self) -> &QuotientStructure {
        &self.qs
    }

    pub fn route(&self) -> DecompositionRoute {
        self.route
    }

    pub fn generators(&self) -> &[Monomial] {
        self.qs.generators()
    }

    /// `(g(x_s m_gen), coefficient)` for `s ∈ set(m_gen)`.
    pub fn decomposition(&self, gen: usize, s: usize) -> Option<(usize, usize)> {
        self.decomposition.get(&(gen, s)).copied()
    }

    /// Length of the resolution: the largest `i` with `F_i ≠ 0`.
    pub fn length(&self) -> usize {
        self.bases.len()
    }

    /// Basis of `F_i` for `i >= 1`; empty beyond the length.
    pub fn basis(&self, i: usize) -> &[BasisSymbol] {
        assert!(i >= 1, "F_0 = S has the single basis element 1");
        self.bases.get(i - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `rank F_i` for `i >= 0`.
    pub fn rank(&self, i: usize) -> usize {
        if i == 0 {
            1
        } else {
            self.basis(i).len()
        }
    }

    /// The matrix of `∂_i : F_{i+1} -> F_i` for `i >= 1`.
    pub fn map(&self, i: usize) -> Option<&SparseMatrix> {
        i.checked_sub(1).and_then(|j| self.maps.get(j))
    }

    /// Number of maps `∂_0 .. ∂_{len-1}`.
    pub fn map_count(&self) -> usize {
        self.bases.len()
    }

    /// Betti numbers `β_0 = 1`, `β_i = Σ_w C(|set(w)|, i - 1)`.
    pub fn betti_numbers(&self) -> &[usize] {
        &self.betti
    }

    /// Generating degree of `F_i`.
    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    /// Checks `∂_i ∘ ∂_{i+1} = 0`.
    pub fn compose_check(&self, i: usize) -> bool {
        let Some(outer) = self.map(i + 1) else { return true };
        if i == 0 {
            let gens = self.generators();
            for c in 0..outer.cols() {
                let mut acc: HashMap<Monomial, i64> = HashMap::new();
                for e in outer.column(c) {
                    let sym = self.basis(1)[e.row];
                    *acc.entry(gens[sym.gen].mul_var(e.var)).or_default() += e.sign as i64;
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
            return true;
        }
        let inner = self.map(i).expect("maps are contiguous");
        for c in 0..outer.cols() {
            let mut acc: HashMap<(usize, usize, usize), i64> = HashMap::new();
            for e in outer.column(c) {
                for f in inner.column(e.row) {
                    let key = (f.row, e.var.min(f.var), e.var.max(f.var));
                    *acc.entry(key).or_default() += (e.sign * f.sign) as i64;
                }
            }
            if acc.values().any(|&v| v != 0) {
                return false;
            }
        }
        true
    }

    pub fn compose_check_all(&self) -> bool {
        (0..self.map_count()).all(|i| self.compose_check(i))
    }

    /// Every entry of every `∂_i`, `i >= 1`, is `±x_j` with no two entries
    /// in the same cell.
    pub fn minimality_check(&self) -> bool {
        let n = self.qs.power().spec().n();
        self.maps.iter().all(|m| {
            let well_formed = m.entries().iter().all(|e| (e.sign == 1 || e.sign == -1) && (1..=n).contains(&e.var));
            let distinct = m.entries().windows(2).all(|w| (w[0].col, w[0].row) != (w[1].col, w[1].row));
            well_formed && distinct
        })
    }

    /// `deg(row symbol) + 1 = deg(column symbol)` for every entry.
    pub fn homogeneity_check(&self) -> bool {
        (1..self.map_count()).all(|i| {
            let m = self.map(i).unwrap();
            m.entries().iter().all(|e| self.basis(i)[e.row].degree + 1 == self.basis(i + 1)[e.col].degree)
        })
    }

    /// Dense rendering of `∂_i` with entries such as `x1`, `-x3`, `0`;
    /// `∂_0` is the single row of generators.
    pub fn dense(&self, i: usize) -> Vec<Vec<String>> {
        if i == 0 {
            return vec![self.generators().iter().map(|g| g.to_string()).collect()];
        }
        let Some(m) = self.map(i) else { return Vec::new() };
        let mut grid = vec![vec![String::new(); m.cols()]; m.rows()];
        for e in m.entries() {
            let cell = &mut grid[e.row][e.col];
            let term = format!("{}x{}", if e.sign < 0 { "-" } else { "" }, e.var);
            if cell.is_empty() {
                *cell = term;
            } else {
                cell.push_str(if e.sign < 0 { "" } else { "+" });
                cell.push_str(&term);
            }
        }
        for cell in grid.iter_mut().flatten() {
            if cell.is_empty() {
                cell.push('0');
            }
        }
        grid
    }
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

    fn example(k: u32) -> ResolutionComplex {
        let spec = LexSegmentSpec::new(RingContext::new(4).unwrap(), m(&[1, 0, 1, 0]), m(&[0, 1, 0, 1]))
            .unwrap()
            .classified()
            .unwrap();
        let qs = linear_quotients_check(power_generators(&spec, k).unwrap());
        ResolutionComplex::build(qs, ResolveOptions::default()).unwrap()
    }

    fn labels(rc: &ResolutionComplex, i: usize) -> Vec<String> {
        rc.basis(i).iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn example_bases() {
        let rc = example(1);
        assert_eq!(labels(&rc, 1), ["f(∅;u1)", "f(∅;u2)", "f(∅;u3)", "f(∅;u4)", "f(∅;u5)"]);
        assert_eq!(labels(&rc, 2), ["f({2};u2)", "f({4};u3)", "f({2};u4)", "f({4};u4)", "f({3};u5)", "f({4};u5)"]);
        assert_eq!(labels(&rc, 3), ["f({2,4};u4)", "f({3,4};u5)"]);
        assert!(rc.basis(4).is_empty());
        assert_eq!(rc.betti_numbers(), &[1, 5, 6, 2]);
        assert_eq!(rc.shifts(), &[0, 2, 3, 4]);
    }

    #[test]
    fn example_first_map() {
        let rc = example(1);
        let expected = [
            ["x1", "x3", "0", "0", "0", "x2"],
            ["-x2", "0", "0", "x3", "0", "0"],
            ["0", "-x4", "x1", "0", "x2", "0"],
            ["0", "0", "-x2", "-x4", "0", "0"],
            ["0", "0", "0", "0", "-x3", "-x4"],
        ];
        assert_eq!(rc.dense(1), expected.map(|r| r.map(String::from).to_vec()).to_vec());
        assert_eq!(rc.dense(0), vec![vec!["x2x4", "x1x4", "x2x3", "x1x3", "x2^2"]]);
    }

    #[test]
    fn dropped_term_is_traced() {
        let rc = example(1);
        let sigma: VarSet = [3, 4].into_iter().collect();
        let terms = rc.expand(sigma, 4);
        let dropped: Vec<_> = terms.iter().filter(|t| !t.kept).collect();
        assert_eq!(dropped.len(), 1);
        assert_eq!((dropped[0].sign, dropped[0].var, dropped[0].gen), (-1, 2, 0));
        assert_eq!(dropped[0].sigma.to_vec(), vec![3]);
    }

    #[test]
    fn complex_checks() {
        for k in 1..=3 {
            let rc = example(k);
            assert!(rc.compose_check_all(), "k = {k}");
            assert!(rc.minimality_check());
            assert!(rc.homogeneity_check());
            for i in 1..=rc.length() {
                assert_eq!(rc.rank(i), rc.betti_numbers()[i]);
            }
        }
    }

    #[test]
    fn single_generator() {
        let u = m(&[1, 0, 1, 0]);
        let spec = LexSegmentSpec::new(RingContext::new(4).unwrap(), u.clone(), u).unwrap();
        let qs = linear_quotients_check(power_generators(&spec, 1).unwrap());
        let opts = ResolveOptions { route: DecompositionRoute::Oracle, shadow_oracle: false };
        let rc = ResolutionComplex::build(qs, opts).unwrap();
        assert_eq!(rc.betti_numbers(), &[1, 1]);
        assert_eq!(rc.length(), 1);
        assert!(rc.map(1).is_none());
        assert!(rc.compose_check_all() && rc.minimality_check());
    }

    #[test]
    fn oracle_route_matches_closed_form() {
        for k in 1..=2 {
            let closed = example(k);
            let qs = closed.quotients().clone();
            let oracle = ResolutionComplex::build(
                qs,
                ResolveOptions { route: DecompositionRoute::Oracle, shadow_oracle: false },
            )
            .unwrap();
            assert_eq!(closed.maps, oracle.maps);
        }
    }
}
