//! Python bindings: a `Link` class over the exact-arithmetic core plus
//! module-level helpers for verification and table reproduction.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use linksing::{
    bp_tuples_up_to, classify_link, cross_check, from_bp, infer_weights, link_index,
    make_standard, parse_polynomial, report_to_json, tables, BPExponents, ClassificationReport,
    Int, LinkDescriptor, LinkSign, StandardKind,
};
use tables::RowStatus;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn ints(xs: Vec<i64>) -> Vec<Int> {
    xs.into_iter().map(Int::from).collect()
}

/// A 5-dimensional link of an isolated weighted-homogeneous hypersurface
/// singularity, given by its weight vector and degree.
#[pyclass]
struct Link {
    descriptor: LinkDescriptor,
    bp: Option<BPExponents>,
    poly: Option<linksing::Polynomial>,
}

impl Link {
    fn report(&self) -> PyResult<ClassificationReport> {
        classify_link(&self.descriptor, self.poly.as_ref(), self.bp.as_ref()).map_err(err)
    }
}

#[pymethods]
impl Link {
    #[new]
    fn new(weights: Vec<i64>, degree: i64) -> PyResult<Self> {
        let descriptor = LinkDescriptor::new(ints(weights), Int::from(degree)).map_err(err)?;
        Ok(Link {
            descriptor,
            bp: None,
            poly: None,
        })
    }

    /// Brieskorn-Pham link z0^a0 + ... + z3^a3 with the minimal degree.
    #[staticmethod]
    fn from_bp(exponents: Vec<i64>) -> PyResult<Self> {
        let bp = BPExponents::new(ints(exponents)).map_err(err)?;
        let poly = make_standard(StandardKind::BP, bp.exponents()).map_err(err)?;
        Ok(Link {
            descriptor: from_bp(&bp),
            bp: Some(bp),
            poly: Some(poly),
        })
    }

    /// Parses a polynomial and infers its unique positive weight vector.
    #[staticmethod]
    fn from_poly(text: &str) -> PyResult<Self> {
        let poly = parse_polynomial(text).map_err(err)?;
        let descriptor = infer_weights(&poly).map_err(err)?;
        Ok(Link {
            descriptor,
            bp: None,
            poly: Some(poly),
        })
    }

    fn weights(&self) -> Vec<String> {
        self.descriptor
            .weights()
            .iter()
            .map(|w| w.to_string())
            .collect()
    }

    fn degree(&self) -> String {
        self.descriptor.degree().to_string()
    }

    fn index(&self) -> String {
        link_index(&self.descriptor).index.to_string()
    }

    fn sign(&self) -> &'static str {
        match link_index(&self.descriptor).sign {
            LinkSign::Positive => "positive",
            LinkSign::Null => "null",
            LinkSign::Negative => "negative",
        }
    }

    fn b2(&self) -> PyResult<String> {
        Ok(self.report()?.graph_route.b2.to_string())
    }

    fn torsion(&self) -> PyResult<Vec<String>> {
        Ok(self
            .report()?
            .graph_route
            .torsion
            .invariant_factors()
            .iter()
            .map(|m| m.to_string())
            .collect())
    }

    fn smale_name(&self) -> PyResult<String> {
        Ok(self.report()?.smale.render())
    }

    /// Full classification report as a JSON string; all integers are decimal
    /// strings and rationals are "p/q".
    fn classify_json(&self) -> PyResult<String> {
        Ok(report_to_json(&self.report()?).to_string())
    }

    fn __repr__(&self) -> String {
        format!(
            "Link(weights=[{}], degree={})",
            self.weights().join(","),
            self.degree()
        )
    }
}

/// Cross-checks the two torsion routes and the polytope identities on every
/// BP tuple with 2 <= a0 <= ... <= a3 <= max; returns the instance count.
#[pyfunction]
fn verify_bp(max: u64) -> PyResult<usize> {
    if max < 2 {
        return Err(err("max must be at least 2"));
    }
    let tuples = bp_tuples_up_to(max);
    for t in &tuples {
        let bp = BPExponents::new(t.iter().map(|&x| Int::from(x)).collect()).map_err(err)?;
        cross_check(&from_bp(&bp)).map_err(|e| err(format!("{t:?}: {e}")))?;
    }
    Ok(tuples.len())
}

/// Recomputes one embedded reference table; returns (instance, status, detail)
/// triples with status in {"PASS", "FLAGGED", "FAIL"}.
#[pyfunction]
#[pyo3(signature = (table, depth = 3))]
fn check_table(table: u8, depth: usize) -> PyResult<Vec<(String, String, String)>> {
    let rows = match table {
        1 => tables::check_table1(),
        2 => tables::reproduce_table2(depth),
        3 => tables::reproduce_table3(depth),
        _ => return Err(err("table must be 1, 2, or 3")),
    }
    .map_err(err)?;
    Ok(rows
        .into_iter()
        .map(|r| {
            let (status, detail) = match r.status {
                RowStatus::Pass => ("PASS", String::new()),
                RowStatus::Flagged(d) => ("FLAGGED", d),
                RowStatus::Fail(d) => ("FAIL", d),
            };
            (r.instance, status.to_string(), detail)
        })
        .collect())
}

#[pymodule]
fn linksing_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Link>()?;
    m.add_function(wrap_pyfunction!(verify_bp, m)?)?;
    m.add_function(wrap_pyfunction!(check_table, m)?)?;
    Ok(())
}
