use serde::Serialize;

use super::{eval_fo, rewrite_fo, FoError, Formula};
use crate::reductions::{distance_graph, embed_subdivided, Graph};

/// One (graph, sentence) comparison: `H |= phi` against `G |= phi'`, where
/// `G` is the distance-1 graph of the embedding of `H` and `phi'` the
/// rewritten sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoCell {
    pub graph: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub sentence: usize,
    pub original: bool,
    pub rewritten: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FoReport {
    pub classifier: String,
    pub sentences: Vec<String>,
    /// `|phi'| / |phi|` per sentence.
    pub size_ratios: Vec<f64>,
    pub cells: Vec<FoCell>,
    pub total: usize,
    pub agreements: usize,
    pub discrepancies: Vec<usize>,
}

pub fn fo_harness(graphs: &[Graph], sentences: &[Formula], classifier: &Formula) -> Result<FoReport, FoError> {
    let rewritten = sentences
        .iter()
        .map(|phi| rewrite_fo(phi, classifier))
        .collect::<Result<Vec<_>, _>>()?;
    let mut cells = Vec::new();
    for (gi, h) in graphs.iter().enumerate() {
        let g = distance_graph(&embed_subdivided(h), 1).expect("embedding rows are complete");
        for (si, (phi, psi)) in sentences.iter().zip(&rewritten).enumerate() {
            let original = eval_fo(h, phi)?;
            let rewritten = eval_fo(&g, psi)?;
            cells.push(FoCell {
                graph: gi,
                n: h.n(),
                edges: h.edges().to_vec(),
                sentence: si,
                original,
                rewritten,
                agree: original == rewritten,
            });
        }
    }
    let discrepancies: Vec<usize> = cells.iter().enumerate().filter(|(_, c)| !c.agree).map(|(i, _)| i).collect();
    Ok(FoReport {
        classifier: classifier.to_string(),
        sentences: sentences.iter().map(ToString::to_string).collect(),
        size_ratios: sentences
            .iter()
            .zip(&rewritten)
            .map(|(a, b)| b.size() as f64 / a.size() as f64)
            .collect(),
        total: cells.len(),
        agreements: cells.len() - discrepancies.len(),
        discrepancies,
        cells,
    })
}
