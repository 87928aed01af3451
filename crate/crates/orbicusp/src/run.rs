//! Parallel verification over the catalog or an enumerated corpus.

use orbicusp_core::curve::AlphaTable;
use orbicusp_core::mirror::{enumerate_polynomials, verify_polynomial, CorpusBounds, PolynomialVerdict, Summary, TypeFilter, VerifyConfig};
use rayon::prelude::*;

use crate::catalog::{check_entry, CatalogEntry, EntryOutcome};

#[derive(Debug, Clone)]
pub struct CorpusRun {
    /// In enumeration order.
    pub verdicts: Vec<PolynomialVerdict>,
    pub summary: Summary,
}

pub fn run_corpus(bounds: CorpusBounds, filter: TypeFilter, config: VerifyConfig) -> CorpusRun {
    let polys = enumerate_polynomials(bounds, filter);
    let verdicts: Vec<PolynomialVerdict> = polys.par_iter().map(|f| verify_polynomial(f, &config)).collect();
    let summary = orbicusp_core::mirror::summarize(&verdicts);
    CorpusRun { verdicts, summary }
}

#[derive(Debug, Clone)]
pub struct CatalogRun {
    pub outcomes: Vec<EntryOutcome>,
    pub summary: Summary,
}

pub fn run_catalog(entries: &[CatalogEntry], table: AlphaTable) -> CatalogRun {
    let outcomes: Vec<EntryOutcome> = entries.par_iter().map(|e| check_entry(e, table)).collect();
    let mut summary = Summary::default();
    for o in &outcomes {
        for (_, s) in &o.checks {
            summary.record(s);
        }
    }
    CatalogRun { outcomes, summary }
}
