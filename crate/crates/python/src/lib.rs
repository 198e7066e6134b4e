//! Python bindings. Polynomials and rationals cross the boundary as text.

use clap::Parser;
use gainv::cli::{self, Cli};
use gainv::roberts::{self, roberts};
use gainv::sagbi::{self, DEFAULT_MAX_STEPS};
use gainv::separating::{self, PointFlow, RationalPoint};
use gainv::sl2::{self, RepSum};
use gainv::{MultiDegree, Polynomial};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// `beta_{i,n}` of the seven-dimensional action.
#[pyfunction]
fn beta(i: usize, n: u32) -> PyResult<String> {
    roberts().beta(i, n).map(|p| p.to_string()).map_err(py_err)
}

/// Names and texts of `S_N`.
#[pyfunction]
fn generator_set(n: u32) -> PyResult<Vec<(String, String)>> {
    let g = roberts().generator_set(n).map_err(py_err)?;
    Ok(g.names()
        .iter()
        .zip(g.generators())
        .map(|(name, p)| (name.clone(), p.to_string()))
        .collect())
}

/// Subduction of `poly` against `S_N`: membership flag and certificate text.
#[pyfunction]
fn subduct(poly: &str, n: u32) -> PyResult<(bool, String)> {
    let g = roberts().generator_set(n).map_err(py_err)?;
    let f = roberts().parse(poly).map_err(py_err)?;
    let cert = sagbi::subduct(&f, &g, DEFAULT_MAX_STEPS).map_err(py_err)?;
    Ok((cert.is_member(), cert.to_text()))
}

/// Basis of a graded kernel piece. `ring` is `roberts` or `sl2:SPEC`.
#[pyfunction]
#[pyo3(signature = (ring, degree, restrict=None))]
fn kernel(ring: &str, degree: Vec<i64>, restrict: Option<Vec<String>>) -> PyResult<Vec<String>> {
    let md = MultiDegree(degree);
    let names: Option<Vec<&str>> = restrict.as_ref().map(|v| v.iter().map(String::as_str).collect());
    let basis = if ring == "roberts" {
        let r = roberts();
        r.derivation().graded_kernel(r.weights(), &md, names.as_deref())
    } else if let Some(spec) = ring.strip_prefix("sl2:") {
        let rep = RepSum::parse(spec).map_err(py_err)?;
        rep.raising_derivation().graded_kernel(rep.weights(), &md, names.as_deref())
    } else {
        return Err(PyValueError::new_err(format!("unknown ring `{ring}`")));
    }
    .map_err(py_err)?;
    Ok(basis.basis.iter().map(Polynomial::to_string).collect())
}

/// The quadratic invariants `f_0, ..., f_{n/2}` of `V[n]`.
#[pyfunction]
fn quadratic_invariants(n: u32) -> PyResult<Vec<String>> {
    Ok(sl2::quadratic_invariants(n)
        .map_err(py_err)?
        .iter()
        .map(Polynomial::to_string)
        .collect())
}

fn point(text: &str) -> PyResult<RationalPoint> {
    RationalPoint::parse(roberts().ring(), text).map_err(py_err)
}

/// First generator of `S_N` separating two comma-separated points, if any.
#[pyfunction]
fn separating_generator(v: &str, w: &str, n: u32) -> PyResult<Option<String>> {
    let g = separating::roberts_s_set(n).map_err(py_err)?;
    let r = separating::separates(&point(v)?, &point(w)?, &g, "S_N").map_err(py_err)?;
    Ok(r.disagreeing.map(|(name, _, _)| name))
}

/// A group element `s` with `w = flow_s(v)`, as text, if one exists.
#[pyfunction]
fn solve_group_element(v: &str, w: &str) -> PyResult<Option<String>> {
    let flow = PointFlow::new(roberts().derivation()).map_err(py_err)?;
    let s = separating::solve_group_element(&point(v)?, &point(w)?, &flow).map_err(py_err)?;
    Ok(s.map(|s| s.to_string()))
}

/// Runs a command-line subcommand and returns its reports as JSON.
#[pyfunction]
fn run_checks(args: Vec<String>) -> PyResult<String> {
    let cli = Cli::try_parse_from(std::iter::once("gainv".to_string()).chain(args)).map_err(py_err)?;
    let outcome = cli::execute(&cli.command).map_err(py_err)?;
    Ok(gainv::report::to_json(&outcome.reports))
}

/// The prescribed normal form of `beta_{i,n}` through `z`-degree `n - 2`.
#[pyfunction]
fn beta_prescribed(i: usize, n: u32) -> String {
    roberts().beta_prescribed(i, n).to_string()
}

#[pyfunction]
fn beta_name(i: usize, n: u32) -> String {
    roberts::beta_name(i, n)
}

#[pymodule]
fn gainv_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(beta, m)?)?;
    m.add_function(wrap_pyfunction!(beta_name, m)?)?;
    m.add_function(wrap_pyfunction!(beta_prescribed, m)?)?;
    m.add_function(wrap_pyfunction!(generator_set, m)?)?;
    m.add_function(wrap_pyfunction!(subduct, m)?)?;
    m.add_function(wrap_pyfunction!(kernel, m)?)?;
    m.add_function(wrap_pyfunction!(quadratic_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(separating_generator, m)?)?;
    m.add_function(wrap_pyfunction!(solve_group_element, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    Ok(())
}
