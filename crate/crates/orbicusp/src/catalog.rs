//! Built-in fixtures: published examples with their expected invariants.

use orbicusp_core::curve::AlphaTable;
use orbicusp_core::cusp::{gabrielov_prime_using, gabrielov_using};
use orbicusp_core::mirror::{poincare_check, strange_check, table2_check, verify_mirror_using, MirrorReport, Status};
use orbicusp_core::polynomial::{parse_polynomial, InvertiblePolynomial};
use orbicusp_core::symmetry::{
    contains_g0, dual_group, is_sl_subgroup, junior_count, parse_group, DiagonalGroup,
};
use orbicusp_core::weights::cf;
use serde::{Deserialize, Serialize};

use crate::CliError;

const BUILTIN: &str = include_str!("../data/catalog.toml");

/// How the polynomial text of an entry relates to the checked pair.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Listed {
    /// The text is `f` itself.
    #[default]
    Direct,
    /// The text is `f^T`; the pair is built on its transpose.
    Transpose,
}

/// Which side of the mirror the group lives on.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `G_0 ⊆ G ⊆ G^fin_f`.
    #[default]
    Curve,
    /// `G ⊆ SL`; the pair checked is `(f^T, G^T)`.
    Dual,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub weights: Option<Vec<u64>>,
    pub cf: Option<u64>,
    pub dual_order: Option<u64>,
    /// Exponent of `G^T`, pinning the isomorphism type among the small cases.
    pub dual_exponent: Option<u64>,
    pub dual_generators: Option<String>,
    /// `Γ_{(f^T,{1})}` coordinate by coordinate, ones kept.
    pub gamma_trivial: Option<Vec<u64>>,
    /// `Γ_{(f^T,G^T)}`, ones allowed and ignored.
    pub gamma_group: Option<Vec<u64>>,
    pub dolgachev: Option<Vec<u64>>,
    pub genus: Option<u64>,
    pub junior: Option<u64>,
    pub e_st: Option<i64>,
    pub mu: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub id: String,
    pub polynomial: String,
    pub group: String,
    /// `published` for values read off the source tables, `derived` otherwise.
    pub source: String,
    #[serde(default)]
    pub listed: Listed,
    #[serde(default)]
    pub side: Side,
    pub note: Option<String>,
    #[serde(default)]
    pub expected: Expected,
}

#[derive(Deserialize)]
struct CatalogFile {
    entry: Vec<CatalogEntry>,
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CliError> {
    let file: CatalogFile = toml::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(file.entry)
}

pub fn builtin_catalog() -> Vec<CatalogEntry> {
    parse_catalog(BUILTIN).expect("built-in catalog parses")
}

/// The pair `(f, G)` an entry describes, on the curve side.
#[derive(Debug, Clone)]
pub struct ResolvedEntry {
    pub f: InvertiblePolynomial,
    pub group: DiagonalGroup,
    /// For dual-side entries, the group as given (on the polynomial as given).
    pub given: Option<DiagonalGroup>,
}

pub fn resolve(entry: &CatalogEntry) -> Result<ResolvedEntry, CliError> {
    let text = parse_polynomial(&entry.polynomial)?;
    let f = match entry.listed {
        Listed::Direct => text,
        Listed::Transpose => text.transpose(),
    };
    match entry.side {
        Side::Curve => {
            let group = parse_group(&f, &entry.group)?;
            if !contains_g0(&f, &group) {
                return Err(CliError::Input(format!("{}: group does not contain g0", entry.id)));
            }
            Ok(ResolvedEntry { f, group, given: None })
        }
        Side::Dual => {
            let given = parse_group(&f, &entry.group)?;
            if !is_sl_subgroup(&given) {
                return Err(CliError::Input(format!("{}: dual-side group is not in SL", entry.id)));
            }
            let group = dual_group(&f, &given)?;
            Ok(ResolvedEntry { f: f.transpose(), group, given: Some(given) })
        }
    }
}

/// Named checks of one entry, plus the mirror report they were read from.
#[derive(Debug, Clone)]
pub struct EntryOutcome {
    pub id: String,
    pub checks: Vec<(String, Status)>,
    pub report: Option<MirrorReport>,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, s)| !s.is_fail())
    }
}

fn compare<T: PartialEq + std::fmt::Debug>(expected: &T, found: &T) -> Status {
    if expected == found {
        Status::Pass
    } else {
        Status::Fail(format!("expected {expected:?}, found {found:?}"))
    }
}

fn sorted_without_ones(v: &[u64]) -> Vec<u64> {
    let mut v: Vec<u64> = v.iter().copied().filter(|&x| x != 1).collect();
    v.sort_unstable();
    v
}

pub fn check_entry(entry: &CatalogEntry, table: AlphaTable) -> EntryOutcome {
    let mut checks = Vec::new();
    let report = match check_entry_inner(entry, table, &mut checks) {
        Ok(r) => Some(r),
        Err(e) => {
            checks.push(("resolve".to_string(), Status::Fail(e.to_string())));
            None
        }
    };
    EntryOutcome { id: entry.id.clone(), checks, report }
}

fn check_entry_inner(
    entry: &CatalogEntry,
    table: AlphaTable,
    checks: &mut Vec<(String, Status)>,
) -> Result<MirrorReport, CliError> {
    let ResolvedEntry { f, group, given } = resolve(entry)?;
    let ft = f.transpose();
    let dual = dual_group(&f, &group)?;
    let report = verify_mirror_using(&f, &group, table)?;
    let e = &entry.expected;
    let mut push = |name: &str, s: Status| checks.push((name.to_string(), s));

    if let Some(w) = &e.weights {
        let cw = f.canonical_weights();
        let mut found = cw.weights().to_vec();
        found.push(cw.degree());
        push("weights", compare(w, &found));
    }
    if let Some(c) = e.cf {
        push("cf", compare(&c, &cf(&f)));
    }
    if let Some(o) = e.dual_order {
        push("dual_order", compare(&o, &dual.order()));
    }
    if let Some(x) = e.dual_exponent {
        push("dual_exponent", compare(&x, &dual.exponent()));
    }
    if let Some(gens) = &e.dual_generators {
        let expected = parse_group(&ft, gens)?;
        push("dual_generators", compare(&expected, &dual));
    }
    if let Some(g) = &e.gamma_trivial {
        let found = gabrielov_prime_using(&ft, table)?.gamma_prime.to_vec();
        push("gamma_trivial", compare(g, &found));
    }
    if let Some(g) = &e.gamma_group {
        let found = gabrielov_using(&ft, &dual, table)?.multiset;
        push("gamma_group", compare(&sorted_without_ones(g), &found));
    }
    if let Some(a) = &e.dolgachev {
        push("dolgachev", compare(&sorted_without_ones(a), &report.dolgachev));
    }
    if let Some(g) = e.genus {
        push("genus", compare(&g, &report.genus));
    }
    if let Some(j) = e.junior {
        let found = match &given {
            Some(given) => junior_count(given),
            None => report.junior,
        };
        push("junior", compare(&j, &found));
    }
    if let Some(x) = e.e_st {
        push("e_st", compare(&x, &report.e_st));
    }
    if let Some(x) = e.mu {
        push("mu", compare(&x, &report.mu));
    }
    push("mirror", if report.all_pass() { Status::Pass } else { Status::Fail(format!("{report:?}")) });
    push("strange", strange_check(&f, table));
    push("table2", table2_check(&f, table));
    push("poincare", poincare_check(&f));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads_with_unique_ids() {
        let entries = builtin_catalog();
        let mut ids: Vec<&str> = entries.iter().map(|e| e.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), entries.len());
        for e in &entries {
            assert!(e.source == "published" || e.source == "derived", "{}", e.id);
            resolve(e).unwrap();
        }
    }

    #[test]
    fn rejects_unknown_fields() {
        let text = "[[entry]]\nid = \"a\"\npolynomial = \"x^2+y^3+z^5\"\ngroup = \"G0\"\nsource = \"x\"\nbogus = 1\n";
        assert!(parse_catalog(text).is_err());
    }
}
