//! JSON, plain-text and Macaulay2 renderings of a resolution.
//!
//! The JSON document lists keys in a fixed order: metadata (`n`, `d`, `k`,
//! `l`, `order`, `u`, `v`, `route`), then `generators` as exponent arrays,
//! `sets`, `betti`, `shifts`, `decomposition`, `bases` (one list per `F_i`,
//! `i >= 1`, of `{sigma, gen}`) and `differentials` (`∂_1, ∂_2, ...` as
//! `{rows, cols, entries: [{r, c, sign, var}]}`). Generator and row/column
//! indices are 0-based; variable indices are 1-based.

use std::collections::HashMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexsegment::LexSegmentSpec;
use crate::monomial::{Monomial, RingContext};
use crate::powers::PowerIdeal;
use crate::quotients::{QuotientStatus, QuotientStructure, VarSet};
use crate::resolution::{DecompositionRoute, ResolutionComplex, SignedVariableEntry, SparseMatrix};

pub const ORDER_NAME: &str = "increasing-revlex";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub sigma: VarSet,
    pub gen: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<SignedVariableEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionEntry {
    pub gen: usize,
    pub s: usize,
    pub g: usize,
    pub var: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDocument {
    pub n: usize,
    pub d: u32,
    pub k: u32,
    pub l: Option<usize>,
    pub order: String,
    pub u: Monomial,
    pub v: Monomial,
    pub route: DecompositionRoute,
    pub generators: Vec<Monomial>,
    pub sets: Vec<VarSet>,
    pub betti: Vec<usize>,
    pub shifts: Vec<u32>,
    pub decomposition: Vec<DecompositionEntry>,
    pub bases: Vec<Vec<BasisEntry>>,
    pub differentials: Vec<MatrixDocument>,
}

impl ResolutionDocument {
    pub fn from_complex(rc: &ResolutionComplex) -> Self {
        let qs = rc.quotients();
        let spec = qs.power().spec();
        let mut decomposition = Vec::new();
        for gen in 0..qs.generators().len() {
            for s in qs.set(gen).iter() {
                let (g, var) = rc.decomposition(gen, s).expect("table covers every (m, s)");
                decomposition.push(DecompositionEntry { gen, s, g, var });
            }
        }
        ResolutionDocument {
            n: spec.n(),
            d: spec.d(),
            k: qs.power().k(),
            l: spec.l(),
            order: ORDER_NAME.to_string(),
            u: spec.u().clone(),
            v: spec.v().clone(),
            route: rc.route(),
            generators: qs.generators().to_vec(),
            sets: qs.sets().to_vec(),
            betti: rc.betti_numbers().to_vec(),
            shifts: rc.shifts().to_vec(),
            decomposition,
            bases: (1..=rc.length())
                .map(|i| rc.basis(i).iter().map(|b| BasisEntry { sigma: b.sigma, gen: b.gen }).collect())
                .collect(),
            differentials: (1..rc.map_count())
                .map(|i| {
                    let m = rc.map(i).unwrap();
                    MatrixDocument { rows: m.rows(), cols: m.cols(), entries: m.entries().to_vec() }
                })
                .collect(),
        }
    }

    pub fn into_complex(self) -> Result<ResolutionComplex> {
        let bad = |msg: &str| Error::Import(msg.to_string());
        if self.order != ORDER_NAME {
            return Err(bad("unknown generator order"));
        }
        let ctx = RingContext::new(self.n)?;
        let n_ok = |m: &Monomial| m.n() == self.n;
        if !n_ok(&self.u) || !n_ok(&self.v) || !self.generators.iter().all(n_ok) {
            return Err(bad("monomial length differs from n"));
        }
        let mut spec = LexSegmentSpec::new(ctx, self.u, self.v)?;
        if self.d != spec.d() {
            return Err(bad("d does not match u"));
        }
        if let Some(l) = self.l {
            spec = spec.classified()?;
            if spec.l() != Some(l) {
                return Err(bad("l does not match u and v"));
            }
        }
        let degree = self.k * self.d;
        if self.generators.iter().any(|g| g.degree() != degree)
            || !self.generators.windows(2).all(|w| w[0].revlex_cmp(&w[1]).is_lt())
        {
            return Err(bad("generators are not strictly increasing in revlex of degree k*d"));
        }
        if self.sets.len() != self.generators.len() || self.sets.iter().any(|s| s.iter().any(|i| i > self.n)) {
            return Err(bad("sets do not match generators"));
        }
        let power = PowerIdeal::from_parts(spec, self.k, self.generators);
        let qs = QuotientStructure::from_parts(power, self.sets, QuotientStatus::Linear);
        let mut table = HashMap::new();
        for e in &self.decomposition {
            if e.gen >= qs.generators().len() || e.g >= qs.generators().len() || !qs.set(e.gen).contains(e.s) {
                return Err(bad("decomposition entry out of range"));
            }
            table.insert((e.gen, e.s), (e.g, e.var));
        }
        let maps = self.differentials.into_iter().map(|m| SparseMatrix::new(m.rows, m.cols, m.entries)).collect();
        let rc = ResolutionComplex::from_parts(qs, self.route, table, maps)?;
        let layout_matches = rc.length() == self.bases.len()
            && self.bases.iter().enumerate().all(|(j, basis)| {
                let ours = rc.basis(j + 1);
                ours.len() == basis.len() && ours.iter().zip(basis).all(|(a, b)| a.sigma == b.sigma && a.gen == b.gen)
            });
        if !layout_matches || rc.betti_numbers() != self.betti.as_slice() || rc.shifts() != self.shifts.as_slice() {
            return Err(bad("bases, Betti numbers or shifts disagree with the sets"));
        }
        Ok(rc)
    }
}

pub fn to_json(rc: &ResolutionComplex) -> String {
    serde_json::to_string_pretty(&ResolutionDocument::from_complex(rc)).expect("document serializes")
}

pub fn from_json(text: &str) -> Result<ResolutionComplex> {
    let doc: ResolutionDocument = serde_json::from_str(text).map_err(|e| Error::Import(e.to_string()))?;
    doc.into_complex()
}

fn write_grid(out: &mut String, row_labels: &[String], col_labels: &[String], grid: &[Vec<String>]) {
    let label_w = row_labels.iter().map(|s| s.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..col_labels.len())
        .map(|c| {
            let cells = grid.iter().map(|r| r[c].chars().count());
            cells.chain([col_labels[c].chars().count()]).max().unwrap_or(0)
        })
        .collect();
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
    let header: Vec<String> = col_labels.iter().zip(&widths).map(|(l, &w)| pad(l, w)).collect();
    let _ = writeln!(out, "{}  {}", " ".repeat(label_w), header.join("  ").trim_end());
    for (label, row) in row_labels.iter().zip(grid) {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| pad(c, w)).collect();
        let _ = writeln!(out, "{}  {}", pad(label, label_w), cells.join("  ").trim_end());
    }
}

/// Human-readable summary with the matrices laid out row by row.
pub fn to_text(rc: &ResolutionComplex) -> String {
    let qs = rc.quotients();
    let spec = qs.power().spec();
    let mut out = String::new();
    let _ =
        writeln!(out, "L({}, {}) in n = {}, d = {}, k = {}", spec.u(), spec.v(), spec.n(), spec.d(), qs.power().k());
    if let Some(l) = spec.l() {
        let _ = writeln!(out, "l = {l}");
    }
    let _ = writeln!(out, "generators ({ORDER_NAME}):");
    for (i, g) in qs.generators().iter().enumerate() {
        let _ = writeln!(out, "  u{} = {}  set = {}", i + 1, g, qs.set(i));
    }
    let betti: Vec<String> = rc.betti_numbers().iter().map(|b| b.to_string()).collect();
    let _ = writeln!(out, "betti: {}", betti.join(" "));
    let mut chain = String::from("0");
    for i in (1..=rc.length()).rev() {
        let _ = write!(chain, " -> S(-{})^{}", rc.shifts()[i], rc.rank(i));
    }
    let _ = writeln!(out, "{chain} -> S -> S/I^{} -> 0", qs.power().k());

    let _ = writeln!(out, "\nd0 =");
    let cols: Vec<String> = rc.basis(1).iter().map(|b| b.to_string()).collect();
    write_grid(&mut out, &["1".to_string()], &cols, &rc.dense(0));
    for i in 1..rc.map_count() {
        let _ = writeln!(out, "\nd{i} =");
        let rows: Vec<String> = rc.basis(i).iter().map(|b| b.to_string()).collect();
        let cols: Vec<String> = rc.basis(i + 1).iter().map(|b| b.to_string()).collect();
        write_grid(&mut out, &rows, &cols, &rc.dense(i));
    }
    out
}

/// Macaulay2 spelling of a monomial, `x_1*x_3^2`.
pub fn m2_monomial(m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    let factors: Vec<String> = m
        .support()
        .map(|i| match m.exp(i) {
            1 => format!("x_{i}"),
            a => format!("x_{i}^{a}"),
        })
        .collect();
    factors.join("*")
}

/// A Macaulay2 script that recomputes the Betti table of `S/I^k`.
pub fn to_macaulay2(rc: &ResolutionComplex) -> String {
    let qs = rc.quotients();
    let spec = qs.power().spec();
    let gens: Vec<String> = qs.generators().iter().map(m2_monomial).collect();
    let betti: Vec<String> = rc.betti_numbers().iter().map(|b| b.to_string()).collect();
    let mut out = String::new();
    let _ = writeln!(out, "-- S/I^{} for I = (L({}, {}))", qs.power().k(), spec.u(), spec.v());
    let _ = writeln!(out, "-- expected total Betti numbers: {}", betti.join(" "));
    let _ = writeln!(out, "R = QQ[x_1..x_{}];", spec.n());
    let _ = writeln!(out, "I = ideal({});", gens.join(", "));
    let _ = writeln!(out, "C = res I;");
    let _ = writeln!(out, "betti C");
    out
}
