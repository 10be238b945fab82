//! Python bindings. Results are plain dicts and lists; errors raise ValueError.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;
use serde_json::{json, Value};

use borel_ideals::dseries::{
    cell_parameter, cohom_degree, e6_example as e6, fiber_point, k_multiplicity as kmult,
    minimal_k_type as mu_lambda, parse_weight, weight_label, LeviDatum,
};
use borel_ideals::ideals::{enumerate_abelian, enumerate_ad_nilpotent};
use borel_ideals::lattice::{enumerate, lattice_record, PointSet};
use borel_ideals::rootsys::{parse_type, RootSystem};
use borel_ideals::symmspace::{fiber_with_cosets, is_compatible_borel, table_i as table, Tau};
use borel_ideals::verify::{key_for, run_check};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn system(cartan_type: &str, rank: Option<usize>) -> PyResult<RootSystem> {
    let (f, n) = parse_type(cartan_type, rank).map_err(err)?;
    RootSystem::new(f, n).map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => {
            let items = a.iter().map(|x| to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn ser<'py>(py: Python<'py>, x: impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &serde_json::to_value(x).map_err(err)?)
}

/// Marks, Coxeter number, minuscule nodes and the positive roots.
#[pyfunction]
#[pyo3(signature = (cartan_type, rank=None))]
fn root_system_info<'py>(py: Python<'py>, cartan_type: &str, rank: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let rs = system(cartan_type, rank)?;
    ser(py, json!({ "summary": rs.summary(), "positive_roots": rs.positive_roots() }))
}

/// Number of ad-nilpotent (or abelian) ideals of the Borel subalgebra.
#[pyfunction]
#[pyo3(signature = (cartan_type, rank=None, abelian=false))]
fn count_ideals(cartan_type: &str, rank: Option<usize>, abelian: bool) -> PyResult<usize> {
    let rs = system(cartan_type, rank)?;
    Ok(if abelian { enumerate_abelian(&rs).len() } else { enumerate_ad_nilpotent(&rs).len() })
}

/// Abelian ideals as lists of roots in simple-root coordinates.
#[pyfunction]
#[pyo3(signature = (cartan_type, rank=None))]
fn abelian_ideals<'py>(py: Python<'py>, cartan_type: &str, rank: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let rs = system(cartan_type, rank)?;
    let ideals: Vec<_> = enumerate_abelian(&rs).into_iter().map(|i| rs.roots_of(i)).collect();
    ser(py, ideals)
}

/// Points of the simplex D in one of "ztilde", "z", "ztilde-ab", "z-ab".
#[pyfunction]
#[pyo3(signature = (cartan_type, rank=None, set="ztilde"))]
fn lattice_points<'py>(py: Python<'py>, cartan_type: &str, rank: Option<usize>, set: &str) -> PyResult<Bound<'py, PyAny>> {
    let rs = system(cartan_type, rank)?;
    let pts = enumerate(&rs, PointSet::parse(set).map_err(err)?);
    let recs = pts.iter().map(|p| lattice_record(&rs, p)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    ser(py, recs)
}

#[pyfunction]
#[pyo3(signature = (cartan_type, rank=None))]
fn table_i<'py>(py: Python<'py>, cartan_type: &str, rank: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    ser(py, table(&system(cartan_type, rank)?))
}

/// The abelian fiber over τ with compatibility and cohomological degree.
#[pyfunction]
#[pyo3(signature = (cartan_type, tau, rank=None))]
fn fiber<'py>(py: Python<'py>, cartan_type: &str, tau: &str, rank: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let rs = system(cartan_type, rank)?;
    let tau = Tau::parse(&rs, tau).map_err(err)?;
    let mut out = Vec::new();
    for (p, coset) in fiber_with_cosets(&rs, &tau).map_err(err)? {
        out.push(json!({
            "z": p.label(),
            "compatible": is_compatible_borel(&rs, &p.point).map_err(err)?,
            "cohomological_degree": cohom_degree(&rs, &p.point).map_err(err)?,
            "coset_word": coset.reduced_word().iter().map(|i| i + 1).collect::<Vec<_>>(),
        }));
    }
    ser(py, out)
}

/// Runs one named check, e.g. verify("2.4", "B3").
#[pyfunction]
#[pyo3(signature = (key, cartan_type, rank=None))]
fn verify<'py>(py: Python<'py>, key: &str, cartan_type: &str, rank: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let rs = system(cartan_type, rank)?;
    ser(py, run_check(key_for(key).map_err(err)?, &rs).map_err(err)?)
}

/// Minimal K-type, cohomological degree and Levi datum of the cell of z.
#[pyfunction]
#[pyo3(signature = (cartan_type, tau, z, lam="rho", rank=None))]
fn minimal_k_type<'py>(
    py: Python<'py>,
    cartan_type: &str,
    tau: &str,
    z: &str,
    lam: &str,
    rank: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let rs = system(cartan_type, rank)?;
    let tau = Tau::parse(&rs, tau).map_err(err)?;
    let zp = fiber_point(&rs, &tau, z).map_err(err)?;
    let hc = cell_parameter(&rs, &tau, &zp, lam).map_err(err)?;
    let mu = mu_lambda(&rs, &tau, &hc).map_err(err)?;
    ser(py, json!({
        "z": zp.label(),
        "lambda": weight_label(&rs, &hc.lambda),
        "minimal_k_type": weight_label(&rs, &mu),
        "cohomological_degree": cohom_degree(&rs, &zp.point).map_err(err)?,
        "compatible": is_compatible_borel(&rs, &zp.point).map_err(err)?,
        "levi": LeviDatum::new(&rs, &zp.point).summary(&rs),
    }))
}

/// Truncated multiplicity of the K-type μ in the discrete series of the
/// cell of z; requires a compatible cell.
#[pyfunction]
#[pyo3(signature = (cartan_type, tau, z, mu, n_max, lam="rho", rank=None))]
#[allow(clippy::too_many_arguments)]
fn k_multiplicity<'py>(
    py: Python<'py>,
    cartan_type: &str,
    tau: &str,
    z: &str,
    mu: &str,
    n_max: usize,
    lam: &str,
    rank: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let rs = system(cartan_type, rank)?;
    let tau = Tau::parse(&rs, tau).map_err(err)?;
    let zp = fiber_point(&rs, &tau, z).map_err(err)?;
    let hc = cell_parameter(&rs, &tau, &zp, lam).map_err(err)?;
    let mu = parse_weight(&rs, mu).map_err(err)?;
    ser(py, kmult(&rs, &tau, &hc, &mu, n_max).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n_max=2))]
fn e6_example<'py>(py: Python<'py>, n_max: usize) -> PyResult<Bound<'py, PyAny>> {
    ser(py, e6(n_max).map_err(err)?)
}

#[pymodule]
fn pyborel(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(root_system_info, m)?)?;
    m.add_function(wrap_pyfunction!(count_ideals, m)?)?;
    m.add_function(wrap_pyfunction!(abelian_ideals, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_points, m)?)?;
    m.add_function(wrap_pyfunction!(table_i, m)?)?;
    m.add_function(wrap_pyfunction!(fiber, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_k_type, m)?)?;
    m.add_function(wrap_pyfunction!(k_multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(e6_example, m)?)?;
    Ok(())
}
