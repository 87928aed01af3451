//! The mirror comparison between the orbifold curve of `(f, G)` and the cusp
//! singularity of `(f^T, G^T)`, corpus enumeration and per-polynomial
//! verification.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::atoms::{classify3, InvertibleType};
use crate::curve::{self, alpha_prime_normal, dolgachev_using, AlphaTable};
use crate::cusp::gabrielov_using;
use crate::polynomial::{ExponentMatrix, InvertiblePolynomial};
use crate::spectra::{table2_psi, verify_poincare_theorem, PoincareVerdict};
use crate::symmetry::{dual_group, g0_group, intermediate_groups, junior_count, DiagonalGroup};
use crate::Result;

/// Curve and cusp invariants of one pair; the three verdicts are recomputed
/// from the stored fields on every call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorReport {
    pub polynomial: String,
    pub group: String,
    pub group_order: u64,
    pub dual: String,
    pub dual_order: u64,
    pub dolgachev: Vec<u64>,
    pub gabrielov: Vec<u64>,
    pub genus: u64,
    pub junior: u64,
    pub e_st: i64,
    pub mu: i64,
    pub notes: Vec<String>,
}

impl MirrorReport {
    pub fn a_eq_gamma(&self) -> bool {
        self.dolgachev == self.gabrielov
    }

    pub fn g_eq_j(&self) -> bool {
        self.genus == self.junior
    }

    pub fn e_eq_mu(&self) -> bool {
        self.e_st == self.mu
    }

    pub fn all_pass(&self) -> bool {
        self.a_eq_gamma() && self.g_eq_j() && self.e_eq_mu()
    }
}

pub fn verify_mirror(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<MirrorReport> {
    verify_mirror_using(f, g, alpha_prime_normal)
}

pub fn verify_mirror_using(f: &InvertiblePolynomial, g: &DiagonalGroup, table: AlphaTable) -> Result<MirrorReport> {
    let dolgachev = dolgachev_using(f, g, table)?.multiset;
    let dual = dual_group(f, g)?;
    let genus = junior_count(&dual);
    let e_st = curve::euler_from(genus, &dolgachev);
    let cusp = gabrielov_using(&f.transpose(), &dual, table)?;
    let mut notes = Vec::new();
    if !f.has_unit_coefficients() {
        notes.push("coefficients ignored; invariants depend on exponents only".to_string());
    }
    Ok(MirrorReport {
        polynomial: f.to_string(),
        group: g.to_string(),
        group_order: g.order(),
        dual: dual.to_string(),
        dual_order: dual.order(),
        dolgachev,
        gabrielov: cusp.multiset,
        genus,
        junior: cusp.j,
        e_st,
        mu: cusp.milnor,
        notes,
    })
}

/// Bounds for [`enumerate_polynomials`]: `|det E| ≤ max_det` and every entry
/// of `E` at most `max_exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusBounds {
    pub max_det: u64,
    pub max_exp: u64,
}

impl CorpusBounds {
    pub fn new(max_det: u64, max_exp: u64) -> Self {
        Self { max_det, max_exp }
    }
}

/// Canonical form of an exponent matrix under renaming variables and
/// reordering monomials.
pub fn canonical_key(m: &ExponentMatrix) -> Vec<Vec<u32>> {
    let n = m.n();
    let mut best: Option<Vec<Vec<u32>>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut rows: Vec<Vec<u32>> = m.rows().map(|r| perm.iter().map(|&j| r[j]).collect()).collect();
        rows.sort();
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Which of the five types to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeFilter {
    All,
    Only(u8),
}

impl TypeFilter {
    fn admits(self, roman: u8) -> bool {
        match self {
            TypeFilter::All => true,
            TypeFilter::Only(t) => t == roman,
        }
    }
}

/// Normal forms of every type within the bounds, one per class under
/// renaming variables; ordered by type, then parameters.
pub fn enumerate_polynomials(bounds: CorpusBounds, filter: TypeFilter) -> Vec<InvertiblePolynomial> {
    let CorpusBounds { max_det: det, max_exp: exp } = bounds;
    let mut kinds = Vec::new();
    if filter.admits(1) {
        for p1 in 2..=exp {
            for p2 in p1..=exp {
                for p3 in p2..=exp {
                    if p1 * p2 * p3 > det {
                        break;
                    }
                    kinds.push(InvertibleType::I { p: [p1, p2, p3] });
                }
            }
        }
    }
    if filter.admits(2) {
        for p1 in 2..=exp {
            for p2 in 2..=exp {
                for b in 2..=exp {
                    if p1 * p2 * b > det {
                        break;
                    }
                    kinds.push(InvertibleType::II { p1, p2, p3: p2 * b });
                }
            }
        }
    }
    if filter.admits(3) {
        for p1 in 2..=exp {
            for q2 in 1..exp {
                for q3 in 1..exp {
                    if p1 * ((q2 + 1) * (q3 + 1) - 1) > det {
                        break;
                    }
                    kinds.push(InvertibleType::III { p1, q2, q3 });
                }
            }
        }
    }
    if filter.admits(4) {
        for p1 in 2..=exp {
            for m in 1..=exp {
                for b in 2..=exp {
                    if p1 * m * b > det {
                        break;
                    }
                    kinds.push(InvertibleType::IV { p1, p2: p1 * m, p3: p1 * m * b });
                }
            }
        }
    }
    if filter.admits(5) {
        for q1 in 1..=exp {
            for q2 in 1..=exp {
                for q3 in 1..=exp {
                    if q1 * q2 * q3 + 1 > det {
                        break;
                    }
                    kinds.push(InvertibleType::V { q: [q1, q2, q3] });
                }
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for kind in kinds {
        let m = kind.normal_form();
        if !seen.insert(canonical_key(&m)) {
            continue;
        }
        if let Ok(f) = InvertiblePolynomial::from_matrix(m) {
            out.push(f);
        }
    }
    out
}

/// Every pair `(f, G)` with `G_0 ⊆ G ⊆ G^fin_f` over the enumerated `f`.
pub fn enumerate_corpus(bounds: CorpusBounds) -> impl Iterator<Item = (InvertiblePolynomial, DiagonalGroup)> {
    enumerate_polynomials(bounds, TypeFilter::All).into_iter().flat_map(|f| {
        let groups = intermediate_groups(&f);
        groups.into_iter().map(move |g| (f.clone(), g))
    })
}

/// Verdict of a single check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    NotApplicable(String),
}

impl Status {
    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail(_) => "FAIL",
            Status::NotApplicable(_) => "n/a",
        }
    }

    fn from_result(r: Result<Status>) -> Status {
        r.unwrap_or_else(|e| Status::Fail(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub alpha: AlphaTable,
    /// Check every intermediate group, not only `G_0` and `G^fin`.
    pub all_groups: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { alpha: alpha_prime_normal, all_groups: true }
    }
}

/// All checks run for one polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialVerdict {
    pub polynomial: String,
    pub kind: String,
    /// Exceptional orbits of the weight system against `A_{(f,G_0)}`.
    pub strange: Status,
    /// Closed-form `ψ_{(f,G_0)}` against the definition.
    pub table2: Status,
    /// `ψ_{(f,G_0)}` against `φ(f^T, G_0^T)`.
    pub poincare: Status,
    /// One mirror report per group, or the error that stopped it.
    pub mirror: Vec<(String, core::result::Result<MirrorReport, String>)>,
}

impl PolynomialVerdict {
    pub fn statuses(&self) -> impl Iterator<Item = Status> + '_ {
        [self.strange.clone(), self.table2.clone(), self.poincare.clone()].into_iter().chain(
            self.mirror.iter().map(|(_, r)| match r {
                Ok(rep) if rep.all_pass() => Status::Pass,
                Ok(rep) => Status::Fail(format!(
                    "A={:?} Γ={:?} g={} j={} e={} μ={}",
                    rep.dolgachev, rep.gabrielov, rep.genus, rep.junior, rep.e_st, rep.mu
                )),
                Err(e) => Status::Fail(e.clone()),
            }),
        )
    }
}

pub fn strange_check(f: &InvertiblePolynomial, table: AlphaTable) -> Status {
    Status::from_result((|| {
        let orbits = curve::orbit_invariants(&f.canonical_weights().reduced())?;
        let dolg = dolgachev_using(f, &g0_group(f), table)?.multiset;
        Ok(if orbits == dolg {
            Status::Pass
        } else {
            Status::Fail(format!("orbits {orbits:?} vs Dolgachev {dolg:?}"))
        })
    })())
}

pub fn table2_check(f: &InvertiblePolynomial, table: AlphaTable) -> Status {
    Status::from_result((|| {
        let g0 = g0_group(f);
        let closed = table2_psi(f)?;
        let p = crate::spectra::poincare_series(f, &g0)?;
        let dolg = dolgachev_using(f, &g0, table)?.multiset;
        let direct = p.mul(&crate::cusp::char_poly_from(curve::genus(f, &g0)?, &dolg));
        Ok(if closed == direct { Status::Pass } else { Status::Fail(format!("table {closed} vs psi {direct}")) })
    })())
}

pub fn poincare_check(f: &InvertiblePolynomial) -> Status {
    Status::from_result(verify_poincare_theorem(f).map(|v| match v {
        PoincareVerdict::Equal { .. } => Status::Pass,
        PoincareVerdict::NotApplicable(why) => Status::NotApplicable(why),
        PoincareVerdict::NotEqual { psi, phi } => Status::Fail(format!("psi {psi} vs phi {phi}")),
    }))
}

pub fn verify_polynomial(f: &InvertiblePolynomial, config: &VerifyConfig) -> PolynomialVerdict {
    let kind = classify3(f).map(|t| t.kind.to_string()).unwrap_or_else(|e| e.to_string());
    let mut groups = intermediate_groups(f);
    if !config.all_groups && groups.len() > 2 {
        let last = groups.pop().expect("G^fin");
        groups.truncate(1);
        groups.push(last);
    }
    let mirror = groups
        .iter()
        .map(|g| (g.to_string(), verify_mirror_using(f, g, config.alpha).map_err(|e| e.to_string())))
        .collect();
    PolynomialVerdict {
        polynomial: f.to_string(),
        kind,
        strange: strange_check(f, config.alpha),
        table2: table2_check(f, config.alpha),
        poincare: poincare_check(f),
        mirror,
    }
}

/// Pass / fail / not-applicable tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
}

impl Summary {
    pub fn record(&mut self, s: &Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail(_) => self.fail += 1,
            Status::NotApplicable(_) => self.not_applicable += 1,
        }
    }

    pub fn merge(&mut self, other: Summary) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.not_applicable += other.not_applicable;
    }

    /// `0` without failures, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.fail > 0)
    }
}

pub fn summarize<'a>(verdicts: impl IntoIterator<Item = &'a PolynomialVerdict>) -> Summary {
    let mut s = Summary::default();
    for v in verdicts {
        for status in v.statuses() {
            s.record(&status);
        }
    }
    s
}
