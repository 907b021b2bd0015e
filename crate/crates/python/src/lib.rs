//! Python bindings. Import name `syzygy`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use syzygy::betti::{self, BettiTable as CoreTable};
use syzygy::exactla::PrimeField;
use syzygy::koszul::{ComputeConfig, DEFAULT_SIZE_CAP};
use syzygy::theory;
use syzygy::variety::{self, DivisorClass, SurfaceModel};

create_exception!(syzygy, SyzygyError, PyValueError);

fn err(e: syzygy::SyzygyError) -> PyErr {
    SyzygyError::new_err(e.to_string())
}

fn target(variety: &str, bundle: &str) -> PyResult<(SurfaceModel, DivisorClass)> {
    let model: SurfaceModel = variety.parse().map_err(err)?;
    let class = model.parse_class(bundle).map_err(err)?;
    Ok((model, class))
}

fn json_to_py<'py>(py: Python<'py>, s: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (s,))
}

/// A computed Betti table. `rows[j][i]` is `beta_{i,i+j}`, `None` for holes.
#[pyclass(name = "BettiTable", module = "syzygy", frozen)]
pub struct PyBettiTable {
    inner: CoreTable,
}

#[pymethods]
impl PyBettiTable {
    #[getter]
    fn variety(&self) -> String {
        self.inner.model.to_string()
    }

    #[getter]
    fn bundle(&self) -> String {
        self.inner.class.to_string()
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r
    }

    #[getter]
    fn certified(&self) -> bool {
        self.inner.certified
    }

    #[getter]
    fn primes(&self) -> Vec<u64> {
        self.inner.primes.iter().map(|p| p.modulus()).collect()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<Option<u64>>> {
        self.inner.rows.clone()
    }

    #[getter]
    fn j_max(&self) -> usize {
        self.inner.j_max()
    }

    /// `beta_{i,i+j}`; zero outside the table, `None` for a hole.
    fn beta(&self, i: i64, j: i64) -> Option<u64> {
        self.inner.beta(i, j)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("table serializes")
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let inner = serde_json::from_str(s).map_err(|e| SyzygyError::new_err(e.to_string()))?;
        Ok(PyBettiTable { inner })
    }

    fn profile<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let p = betti::profile(&self.inner).map_err(err)?;
        let d = json_to_py(py, &serde_json::to_string(&p).expect("profile serializes"))?;
        d.set_item("verdict", p.verdict())?;
        Ok(d)
    }

    /// Claims as dicts with keys `id`, `predicted`, `observed`, `outcome`.
    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let claims = theory::verify_instances(&self.inner, &self.inner.model, &self.inner.class).map_err(err)?;
        json_to_py(py, &serde_json::to_string(&claims).expect("claims serialize"))
    }

    fn __repr__(&self) -> String {
        format!(
            "BettiTable(variety={:?}, bundle={:?}, r={}, certified={})",
            self.variety(),
            self.bundle(),
            self.inner.r,
            self.inner.certified
        )
    }
}

#[pyfunction]
#[pyo3(signature = (variety, bundle, primes=None, jobs=None, size_cap=None))]
fn compute_table(
    py: Python<'_>,
    variety: &str,
    bundle: &str,
    primes: Option<Vec<u64>>,
    jobs: Option<usize>,
    size_cap: Option<u64>,
) -> PyResult<PyBettiTable> {
    let (model, class) = target(variety, bundle)?;
    let primes = match primes {
        Some(ps) => ps.into_iter().map(PrimeField::new).collect::<Result<Vec<_>, _>>().map_err(err)?,
        None => PrimeField::defaults(),
    };
    let cfg = ComputeConfig { primes, size_cap: size_cap.unwrap_or(DEFAULT_SIZE_CAP), jobs: jobs.unwrap_or(0) };
    let inner = py.detach(|| betti::compute_table(model, class, &cfg)).map_err(err)?;
    Ok(PyBettiTable { inner })
}

#[pyfunction]
fn h0(variety: &str, bundle: &str) -> PyResult<u64> {
    let (model, class) = target(variety, bundle)?;
    Ok(variety::h0(&model, &class))
}

#[pyfunction]
fn hilbert_numerator(variety: &str, bundle: &str) -> PyResult<Vec<i64>> {
    let (model, class) = target(variety, bundle)?;
    variety::hilbert_numerator(&model, &class).map_err(err)
}

/// Genus of a general curve in the linear system.
#[pyfunction]
fn genus(variety: &str, bundle: &str) -> PyResult<u64> {
    let (model, class) = target(variety, bundle)?;
    variety::genus_in_system(&model, &class).map_err(err)
}

#[pyfunction]
fn gon_max(variety: &str, bundle: &str) -> PyResult<i64> {
    let (model, class) = target(variety, bundle)?;
    theory::gon_max(&model, &class).map_err(err)
}

#[pyfunction]
fn conjecture_delta<'py>(py: Python<'py>, variety: &str, bundle: &str) -> PyResult<Bound<'py, PyAny>> {
    let (model, class) = target(variety, bundle)?;
    let c = theory::conjecture_delta(&model, &class).map_err(err)?;
    json_to_py(py, &serde_json::to_string(&c).expect("prediction serializes"))
}

#[pyfunction]
fn ell_ceil(q: i64, n: i64) -> PyResult<i64> {
    theory::ell_ceil(q, n).map_err(err)
}

#[pyfunction]
fn ell_floor(q: i64, n: i64) -> PyResult<i64> {
    theory::ell_floor(q, n).map_err(err)
}

/// `predict("cm", n=2, q=3, regk=3, rho=0)`; keyword names are the
/// command-line flags with `_` for `-`, booleans are switches.
#[pyfunction]
#[pyo3(signature = (theorem, **params))]
fn predict<'py>(py: Python<'py>, theorem: &str, params: Option<&Bound<'py, PyDict>>) -> PyResult<Bound<'py, PyAny>> {
    let mut argv = vec![theorem.to_string()];
    if let Some(params) = params {
        for (k, v) in params.iter() {
            let flag = format!("--{}", k.extract::<String>()?.replace('_', "-"));
            if let Ok(b) = v.extract::<bool>() {
                if b {
                    argv.push(flag);
                }
                continue;
            }
            argv.push(flag);
            argv.push(v.str()?.to_string());
        }
    }
    let args = syzygy::cli::parse_predict_args(argv).map_err(err)?;
    let report = syzygy::cli::predict(&args).map_err(err)?;
    let d = json_to_py(py, &serde_json::to_string(&report).expect("report serializes"))?;
    d.set_item("text", report.to_string())?;
    Ok(d)
}

#[pyfunction]
fn theorems<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
    PyList::new(py, theory::TheoremId::ALL.iter().map(|t| t.key()))
}

#[pymodule]
#[pyo3(name = "syzygy")]
fn syzygy_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SyzygyError", m.py().get_type::<SyzygyError>())?;
    m.add_class::<PyBettiTable>()?;
    m.add_function(wrap_pyfunction!(compute_table, m)?)?;
    m.add_function(wrap_pyfunction!(h0, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_numerator, m)?)?;
    m.add_function(wrap_pyfunction!(genus, m)?)?;
    m.add_function(wrap_pyfunction!(gon_max, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_delta, m)?)?;
    m.add_function(wrap_pyfunction!(ell_ceil, m)?)?;
    m.add_function(wrap_pyfunction!(ell_floor, m)?)?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(theorems, m)?)?;
    Ok(())
}
