//! Python bindings: `import lexres`.
//!
//! Structured results (classifications, verification reports) come back as
//! plain dicts and lists decoded from the library's JSON forms.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;
use serde::Serialize;

use lexres::export;
use lexres::lexsegment::{classify as classify_spec, enumerate_lexsegment};
use lexres::parse::parse_monomial;
use lexres::pipeline::Instance;
use lexres::resolution::ResolutionComplex;
use lexres::verify::{euler_characteristic, hilbert_numerator_with, verify_all, PivotPolicy, DEFAULT_NODE_BUDGET};
use lexres::{Error, RingContext};

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::BudgetExceeded { .. }
        | Error::NotLinearQuotients { .. }
        | Error::NotRegular { .. }
        | Error::ClosedFormMismatch { .. }
        | Error::ClosedFormNotGenerator(_)
        | Error::BarDegreeBound(_) => PyRuntimeError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    PyModule::import(py, "json")?.call_method1("loads", (text,))
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

/// Minimal graded free resolution of `S/I^k`.
#[pyclass(name = "Resolution", module = "lexres", frozen)]
struct PyResolution {
    inner: ResolutionComplex,
}

#[pymethods]
impl PyResolution {
    /// Re-imports a resolution written by `to_json`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        export::from_json(text).map(|inner| PyResolution { inner }).map_err(to_py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.quotients().power().spec().n()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.quotients().power().k()
    }

    #[getter]
    fn l(&self) -> Option<usize> {
        self.inner.quotients().power().spec().l()
    }

    /// Minimal generators of `I^k` in increasing revlex order.
    #[getter]
    fn generators(&self) -> Vec<String> {
        strings(self.inner.generators())
    }

    /// `set(m)` for each generator, as sorted variable indices.
    #[getter]
    fn sets(&self) -> Vec<Vec<usize>> {
        self.inner.quotients().sets().iter().map(|s| s.to_vec()).collect()
    }

    #[getter]
    fn betti(&self) -> Vec<usize> {
        self.inner.betti_numbers().to_vec()
    }

    #[getter]
    fn shifts(&self) -> Vec<u32> {
        self.inner.shifts().to_vec()
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    /// Labels `f({..};u..)` of the basis of `F_i`, `i >= 1`.
    fn basis(&self, i: usize) -> PyResult<Vec<String>> {
        if i == 0 {
            return Err(PyValueError::new_err("F_0 has the single basis element 1"));
        }
        Ok(strings(self.inner.basis(i)))
    }

    /// `∂_i` as a grid of strings such as `"x1"`, `"-x3"`, `"0"`.
    fn dense(&self, i: usize) -> Vec<Vec<String>> {
        self.inner.dense(i)
    }

    /// `∂_i`, `i >= 1`, as `(row, col, sign, var)` tuples.
    fn entries(&self, i: usize) -> PyResult<Vec<(usize, usize, i8, usize)>> {
        let m = self.inner.map(i).ok_or_else(|| PyValueError::new_err(format!("no map d{i}")))?;
        Ok(m.entries().iter().map(|e| (e.row, e.col, e.sign, e.var)).collect())
    }

    /// Coefficients of `Σ (-1)^i Σ_{b ∈ F_i} t^deg b`.
    fn euler_characteristic(&self) -> Vec<i64> {
        euler_characteristic(&self.inner).coefficients().to_vec()
    }

    #[pyo3(signature = (seed = 0, trials = 5, hilbert_budget = DEFAULT_NODE_BUDGET))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        seed: u64,
        trials: usize,
        hilbert_budget: u64,
    ) -> PyResult<Bound<'py, PyAny>> {
        let report = verify_all(&self.inner, seed, trials, hilbert_budget).map_err(to_py_err)?;
        let out = to_py(py, &report)?;
        out.set_item("pass", report.pass())?;
        Ok(out)
    }

    fn to_json(&self) -> String {
        export::to_json(&self.inner)
    }

    fn to_text(&self) -> String {
        export::to_text(&self.inner)
    }

    fn to_macaulay2(&self) -> String {
        export::to_macaulay2(&self.inner)
    }

    fn __repr__(&self) -> String {
        let spec = self.inner.quotients().power().spec();
        format!("Resolution(L({}, {})^{}, betti={:?})", spec.u(), spec.v(), self.k(), self.inner.betti_numbers())
    }
}

/// Builds the resolution of `S/L(u, v)^k`.
#[pyfunction]
#[pyo3(signature = (n, u, v, k = 1, oracle_g = false))]
fn resolve(n: usize, u: &str, v: &str, k: u32, oracle_g: bool) -> PyResult<PyResolution> {
    let inst = Instance::parse(n, u, v).map_err(to_py_err)?;
    inst.resolve(k, oracle_g).map(|inner| PyResolution { inner }).map_err(to_py_err)
}

/// The lexsegment `L(u, v)`, lex-descending.
#[pyfunction]
fn lexsegment(n: usize, u: &str, v: &str) -> PyResult<Vec<String>> {
    let ctx = RingContext::new(n).map_err(to_py_err)?;
    let u = parse_monomial(u, &ctx).map_err(to_py_err)?;
    let v = parse_monomial(v, &ctx).map_err(to_py_err)?;
    enumerate_lexsegment(&u, &v).map(|s| strings(&s)).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (n, u, v, depth = None, first_shadow_persistence = false))]
fn classify<'py>(
    py: Python<'py>,
    n: usize,
    u: &str,
    v: &str,
    depth: Option<u32>,
    first_shadow_persistence: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let inst = Instance::parse(n, u, v).map_err(to_py_err)?;
    let depth = depth.unwrap_or(n as u32);
    let c = classify_spec(&inst.spec, depth, first_shadow_persistence).map_err(to_py_err)?;
    to_py(py, &c)
}

/// Generators of `L(u, v)^k` in increasing revlex order with their sets.
#[pyfunction]
#[pyo3(signature = (n, u, v, k = 1))]
fn quotients(n: usize, u: &str, v: &str, k: u32) -> PyResult<Vec<(String, Vec<usize>)>> {
    let inst = Instance::parse(n, u, v).map_err(to_py_err)?;
    let qs = inst.quotients(k).map_err(to_py_err)?;
    qs.require_linear().map_err(to_py_err)?;
    Ok(qs.generators().iter().zip(qs.sets()).map(|(g, s)| (g.to_string(), s.to_vec())).collect())
}

/// Coefficients of the numerator `N(t)` of the Hilbert series of `S/J`.
#[pyfunction]
#[pyo3(signature = (n, generators, budget = DEFAULT_NODE_BUDGET))]
fn hilbert_numerator(n: usize, generators: Vec<String>, budget: u64) -> PyResult<Vec<i64>> {
    let ctx = RingContext::new(n).map_err(to_py_err)?;
    let gens = generators.iter().map(|g| parse_monomial(g, &ctx)).collect::<Result<Vec<_>, _>>().map_err(to_py_err)?;
    let h = hilbert_numerator_with(&gens, PivotPolicy::default(), budget).map_err(to_py_err)?;
    Ok(h.coefficients().to_vec())
}

#[pymodule]
#[pyo3(name = "lexres")]
fn lexres_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyResolution>()?;
    m.add_function(wrap_pyfunction!(resolve, m)?)?;
    m.add_function(wrap_pyfunction!(lexsegment, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(quotients, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_numerator, m)?)?;
    Ok(())
}
