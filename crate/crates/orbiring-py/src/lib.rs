//! Python bindings: weight systems, sector products, quotient algebras, and
//! the distinguishing test, as an in-process extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use orbiring::{
    check_homotopy_theorem, conjectural_integral_algebra, cr_algebra, distinguish,
    inertial_presentation, multivariable_presentation, obstruction_data, unit_product,
    CircleWeightSystem, FiniteGradedAlgebra,
};

fn domain_err(e: orbiring::Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.name()))
}

/// A diagonal circle action: integer weights, a mode (`"symplectic"` or
/// `"hyper"`), and an optional sector-order override.
#[pyclass(frozen)]
struct WeightSystem {
    inner: CircleWeightSystem,
}

#[pymethods]
impl WeightSystem {
    #[new]
    #[pyo3(signature = (weights, mode = "symplectic", order = None))]
    fn new(weights: Vec<i64>, mode: &str, order: Option<u64>) -> PyResult<Self> {
        let mode = mode.parse().map_err(domain_err)?;
        let inner = match order {
            None => CircleWeightSystem::new(weights, mode),
            Some(order) => CircleWeightSystem::with_order(weights, mode, order),
        }
        .map_err(domain_err)?;
        Ok(WeightSystem { inner })
    }

    #[getter]
    fn weights(&self) -> Vec<i64> {
        self.inner.weights().to_vec()
    }

    #[getter]
    fn mode(&self) -> String {
        self.inner.mode().to_string()
    }

    #[getter]
    fn order(&self) -> u64 {
        self.inner.order()
    }

    /// Fixed indices, age, and degree of sector `g`, as a dict.
    fn sector<'py>(&self, py: Python<'py>, g: u64) -> PyResult<Bound<'py, PyDict>> {
        let s = self.inner.sector(g);
        let d = PyDict::new(py);
        d.set_item("g", s.g)?;
        d.set_item("fixed", s.fixed)?;
        d.set_item("age", s.age.to_string())?;
        d.set_item("degree", s.cr_degree.to_string())?;
        Ok(d)
    }

    /// Product of two sector units: (target sector, coefficient, u exponent).
    fn unit_product(&self, g: u64, h: u64) -> (u64, String, u32) {
        let p = unit_product(&self.inner, g, h);
        (p.target, p.coefficient.to_string(), p.u_exponent)
    }

    /// Obstruction data of a sector pair:
    /// (base, fiber, pushforward, euler coefficient, u exponent).
    fn obstruction(&self, g: u64, h: u64) -> (Vec<usize>, Vec<usize>, Vec<usize>, String, u32) {
        let d = obstruction_data(&self.inner, g, h);
        (d.base, d.fiber, d.pushforward, d.euler_coefficient.to_string(), d.u_exponent)
    }

    /// Text presentation of the sector subring.
    fn presentation(&self) -> PyResult<String> {
        Ok(inertial_presentation(&self.inner).map_err(domain_err)?.to_text())
    }

    /// The rational Chen-Ruan cohomology ring of the quotient.
    fn cr(&self) -> PyResult<Algebra> {
        Ok(Algebra { inner: cr_algebra(&self.inner).map_err(domain_err)? })
    }

    /// Conjectural integral model (tagged, not certified).
    fn cr_integral_conjectural(&self) -> PyResult<Algebra> {
        Ok(Algebra { inner: conjectural_integral_algebra(&self.inner).map_err(domain_err)? })
    }

    /// Three-ideal multivariable presentation of the quotient ring.
    fn multivariable_presentation(&self) -> PyResult<String> {
        multivariable_presentation(&self.inner).map_err(domain_err)
    }

    /// Appending trivial summands leaves every sector relation unchanged.
    fn check_homotopy_theorem(&self, extra_zeros: usize) -> PyResult<bool> {
        check_homotopy_theorem(&self.inner, extra_zeros).map_err(domain_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "WeightSystem(weights={:?}, mode={}, order={})",
            self.inner.weights(),
            self.inner.mode(),
            self.inner.order()
        )
    }
}

/// A finite-dimensional graded algebra on the monomial basis of the quotient.
#[pyclass(frozen)]
struct Algebra {
    inner: FiniteGradedAlgebra,
}

#[pymethods]
impl Algebra {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn coefficients(&self) -> String {
        self.inner.coefficients.to_string()
    }

    /// Hilbert function as {degree-string: dimension}, degrees ascending.
    fn hilbert<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (deg, dim) in self.inner.hilbert() {
            d.set_item(deg.to_string(), dim)?;
        }
        Ok(d)
    }

    fn basis(&self) -> Vec<String> {
        self.inner.basis.iter().map(|b| b.label()).collect()
    }

    fn basis_degrees(&self) -> Vec<String> {
        self.inner.basis.iter().map(|b| b.degree.to_string()).collect()
    }

    /// Product of basis elements i and j as [(index, coefficient), ...].
    fn product(&self, i: usize, j: usize) -> PyResult<Vec<(usize, String)>> {
        if i >= self.inner.dim() || j >= self.inner.dim() {
            return Err(PyValueError::new_err("basis index out of range"));
        }
        Ok(self.inner.product(i, j).iter().map(|(k, c)| (*k, c.to_string())).collect())
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Algebra> {
        Ok(Algebra { inner: FiniteGradedAlgebra::from_json_str(s).map_err(domain_err)? })
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(dim={}, weights={:?}, mode={}, coefficients={})",
            self.inner.dim(),
            self.inner.weights,
            self.inner.mode,
            self.inner.coefficients
        )
    }
}

/// Logweight ((w*g) mod m)/m as an exact fraction string.
#[pyfunction]
fn logweight(w: i64, g: u64, m: u64) -> PyResult<String> {
    if m == 0 {
        return Err(PyValueError::new_err("order must be >= 1"));
    }
    Ok(orbiring::logweight(w, g, m).to_string())
}

/// Whether two diagonal circle representations are representation homotopic
/// (equal multisets of nonzero weights).
#[pyfunction]
fn rep_homotopy_equivalent(weights_a: Vec<i64>, weights_b: Vec<i64>) -> bool {
    orbiring::rep_homotopy_equivalent(&weights_a, &weights_b)
}

/// Compare two algebras by Hilbert function and pairing ranks; returns the
/// verdict JSON.
#[pyfunction(name = "distinguish")]
fn distinguish_py(a: &Algebra, b: &Algebra) -> PyResult<String> {
    if a.inner.coefficients != b.inner.coefficients {
        return Err(PyValueError::new_err("algebras have different coefficient fields"));
    }
    Ok(distinguish(&a.inner, &b.inner).to_json().to_string())
}

#[pymodule]
fn orbiring_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<WeightSystem>()?;
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(logweight, m)?)?;
    m.add_function(wrap_pyfunction!(rep_homotopy_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(distinguish_py, m)?)?;
    Ok(())
}
