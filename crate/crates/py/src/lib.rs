use graphcover::construct::{flac_cover as flac, krausz_cover as krausz, slug_cover as slug, ConstructionSequence};
use graphcover::orient::{arboricity as arb, local_star_arboricity as lsa, pseudoarboricity as pseudo};
use graphcover::{Budget, CoverCertificate, Graph, Mode, TemplateClass};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

type Edges = Vec<(usize, usize)>;

fn err(e: graphcover::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn graph(n: usize, edges: Edges) -> PyResult<Graph> {
    Graph::new(n, edges).map_err(err)
}

fn class(name: &str) -> PyResult<TemplateClass> {
    name.parse().map_err(err)
}

fn mode(name: &str) -> PyResult<Mode> {
    name.parse().map_err(err)
}

/// Named family as `(n, edges)`.
#[pyfunction]
pub fn generate(family: &str, params: Vec<usize>) -> PyResult<(usize, Edges)> {
    let g = graphcover::graph::generate(family, &params).map_err(err)?;
    Ok((g.vertex_count(), g.edges().to_vec()))
}

#[pyfunction]
pub fn recognize(class_name: &str, n: usize, edges: Edges) -> PyResult<bool> {
    Ok(graphcover::recognize(class(class_name)?, &graph(n, edges)?))
}

/// `(status, value, nodes, certificate_text)`; value and certificate are
/// `None` unless the status is `feasible`.
#[pyfunction]
#[pyo3(signature = (n, edges, class_name, mode_name, max_nodes=None, seconds=None))]
pub fn compute_number(
    n: usize,
    edges: Edges,
    class_name: &str,
    mode_name: &str,
    max_nodes: Option<u64>,
    seconds: Option<f64>,
) -> PyResult<(String, Option<usize>, u64, Option<String>)> {
    let mut budget = max_nodes.map(Budget::nodes).unwrap_or_else(Budget::unlimited);
    if let Some(s) = seconds {
        budget.time_limit = Budget::seconds(s).time_limit;
    }
    let r = graphcover::compute_number(&graph(n, edges)?, class(class_name)?, mode(mode_name)?, budget).map_err(err)?;
    let cert = r.certificate.as_ref().map(CoverCertificate::to_text);
    Ok((r.status.name().to_string(), r.value, r.nodes_explored, cert))
}

/// `(valid, size, max_preimage, injective)`.
#[pyfunction]
pub fn verify_cover(
    n: usize,
    edges: Edges,
    certificate: &str,
    class_name: &str,
    mode_name: &str,
) -> PyResult<(bool, usize, usize, bool)> {
    let cert = CoverCertificate::from_text(certificate).map_err(err)?;
    let rep = graphcover::verify_cover(&graph(n, edges)?, &cert, class(class_name)?, mode(mode_name)?).map_err(err)?;
    Ok((rep.valid, rep.size, rep.max_preimage, rep.injective))
}

#[pyfunction]
pub fn pseudoarboricity(n: usize, edges: Edges) -> PyResult<usize> {
    Ok(pseudo(&graph(n, edges)?).value)
}

#[pyfunction]
pub fn arboricity(n: usize, edges: Edges) -> PyResult<usize> {
    arb(&graph(n, edges)?).map(|(a, _)| a).map_err(err)
}

/// `(value, certificate_text)`.
#[pyfunction]
pub fn local_star_arboricity(n: usize, edges: Edges) -> PyResult<(usize, String)> {
    let l = lsa(&graph(n, edges)?);
    Ok((l.value, l.certificate.to_text()))
}

#[pyfunction]
pub fn flac_cover(n: usize, edges: Edges) -> PyResult<String> {
    flac(&graph(n, edges)?).map(|c| c.to_text()).map_err(err)
}

#[pyfunction]
pub fn slug_cover(n: usize, edges: Edges, sequence: &str) -> PyResult<String> {
    let seq = ConstructionSequence::from_text(sequence).map_err(err)?;
    slug(&graph(n, edges)?, &seq).map(|c| c.to_text()).map_err(err)
}

/// Line graph `(n, edges)` and its clique cover.
#[pyfunction]
pub fn krausz_cover(n: usize, edges: Edges) -> PyResult<(usize, Edges, String)> {
    let (l, cert) = krausz(&graph(n, edges)?);
    Ok((l.vertex_count(), l.edges().to_vec(), cert.to_text()))
}

/// `(id, name, passed, note)` per criterion.
#[pyfunction]
#[pyo3(signature = (seed=0, only=None))]
pub fn report(seed: u64, only: Option<Vec<usize>>) -> PyResult<Vec<(usize, String, bool, String)>> {
    let ids = only.unwrap_or_else(graphcover::report::criterion_ids);
    ids.into_iter()
        .map(|id| {
            graphcover::report::run_criterion(id, seed)
                .map(|r| (r.id, r.name.to_string(), r.passed, r.note))
                .ok_or_else(|| PyValueError::new_err(format!("no criterion {id}")))
        })
        .collect()
}

#[pymodule]
fn graphcover_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(compute_number, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cover, m)?)?;
    m.add_function(wrap_pyfunction!(pseudoarboricity, m)?)?;
    m.add_function(wrap_pyfunction!(arboricity, m)?)?;
    m.add_function(wrap_pyfunction!(local_star_arboricity, m)?)?;
    m.add_function(wrap_pyfunction!(flac_cover, m)?)?;
    m.add_function(wrap_pyfunction!(slug_cover, m)?)?;
    m.add_function(wrap_pyfunction!(krausz_cover, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    Ok(())
}
