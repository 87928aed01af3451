//! Full invariant reports for a pair `(f, G)` and their serializations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use orbicusp_core::atoms::classify3;
use orbicusp_core::curve::curve_invariants;
use orbicusp_core::cusp::{delta, gabrielov, gabrielov_prime};
use orbicusp_core::polynomial::InvertiblePolynomial;
use orbicusp_core::spectra::{equivariant_char_poly, poincare_series, psi, CycloVector};
use orbicusp_core::symmetry::{dual_group, DiagonalGroup};
use orbicusp_core::weights::cf;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

/// A cyclotomic product as a `{"m": e}` object, largest `m` first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloMap(pub CycloVector);

impl Serialize for CycloMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<(u64, i64)> = self.0.entries().rev().collect();
        let mut map = s.serialize_map(Some(entries.len()))?;
        for (m, e) in entries {
            map.serialize_entry(&m.to_string(), &e)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for CycloMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, i64>::deserialize(d)?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (k, e) in raw {
            let m: u64 = k.parse().map_err(|_| D::Error::custom(format!("bad cyclotomic index {k:?}")))?;
            pairs.push((m, e));
        }
        Ok(CycloMap(CycloVector::from_entries(pairs)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    pub polynomial: String,
    pub group: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weights {
    /// Weights followed by the degree.
    pub canonical: Vec<u64>,
    pub reduced: Vec<u64>,
    pub cf: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub order: u64,
    pub generators: Vec<String>,
}

impl GroupInfo {
    pub fn of(g: &DiagonalGroup) -> Self {
        Self { order: g.order(), generators: g.generators().iter().map(ToString::to_string).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSide {
    pub genus: u64,
    pub dolgachev: Vec<u64>,
    pub stringy_euler: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspSide {
    pub gamma_prime: [u64; 3],
    pub delta: i64,
    pub gabrielov: Vec<u64>,
    pub junior: u64,
    pub milnor: i64,
}

/// `p_{(f,G)}`, `ψ_{(f,G)}` and `φ(f^T, G^T)`; absent when undefined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series {
    pub poincare: Option<CycloMap>,
    pub psi: Option<CycloMap>,
    pub phi: Option<CycloMap>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub a_eq_gamma: bool,
    pub g_eq_j: bool,
    pub e_eq_mu: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: Input,
    pub exponent_matrix: Vec<Vec<u32>>,
    pub det: u64,
    pub weights: Weights,
    #[serde(rename = "type")]
    pub kind: String,
    pub group: GroupInfo,
    pub dual: GroupInfo,
    pub curve: CurveSide,
    pub cusp: CuspSide,
    pub series: Series,
    pub checks: Checks,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.a_eq_gamma && self.checks.g_eq_j && self.checks.e_eq_mu
    }
}

pub fn analyze(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<Report, CliError> {
    let ft = f.transpose();
    let dual = dual_group(f, g)?;
    let curve = curve_invariants(f, g)?;
    let gp = gabrielov_prime(&ft)?.gamma_prime;
    let cusp = gabrielov(&ft, &dual)?;
    let cw = f.canonical_weights();
    let red = cw.reduced();
    let with_degree = |w: &orbicusp_core::weights::WeightSystem| {
        let mut v = w.weights().to_vec();
        v.push(w.degree());
        v
    };
    let mut notes = Vec::new();
    if !f.has_unit_coefficients() {
        notes.push("coefficients ignored: every invariant depends only on the exponents".to_string());
    }
    let mut series_part = |r: orbicusp_core::Result<CycloVector>, what: &str| match r {
        Ok(v) => Some(CycloMap(v)),
        Err(e) => {
            notes.push(format!("{what}: {e}"));
            None
        }
    };
    let series = Series {
        poincare: series_part(poincare_series(f, g), "poincare"),
        psi: series_part(psi(f, g), "psi"),
        phi: series_part(equivariant_char_poly(&ft, &dual), "phi"),
    };
    let report = Report {
        input: Input { polynomial: f.to_string(), group: g.to_string() },
        exponent_matrix: f.matrix().to_rows(),
        det: f.det(),
        weights: Weights { canonical: with_degree(cw), reduced: with_degree(&red), cf: cf(f) },
        kind: classify3(f)?.kind.to_string(),
        group: GroupInfo::of(g),
        dual: GroupInfo::of(&dual),
        checks: Checks {
            a_eq_gamma: curve.dolgachev == cusp.multiset,
            g_eq_j: curve.genus == cusp.j,
            e_eq_mu: curve.e_st == cusp.milnor,
        },
        curve: CurveSide { genus: curve.genus, dolgachev: curve.dolgachev, stringy_euler: curve.e_st },
        cusp: CuspSide { gamma_prime: gp, delta: delta(gp), gabrielov: cusp.multiset, junior: cusp.j, milnor: cusp.milnor },
        series,
        notes,
    };
    Ok(report)
}

fn list(v: &[u64]) -> String {
    if v.is_empty() {
        "-".to_string()
    } else {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

fn show(v: &Option<CycloMap>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |c| c.0.to_string())
}

pub fn to_text(r: &Report) -> String {
    let mut s = String::new();
    let yes = |b: bool| if b { "yes" } else { "NO" };
    let _ = writeln!(s, "polynomial      {}", r.input.polynomial);
    let _ = writeln!(s, "type            {}", r.kind);
    let _ = writeln!(s, "det             {}", r.det);
    let _ = writeln!(s, "weights         canonical {:?}  reduced {:?}  c_f {}", r.weights.canonical, r.weights.reduced, r.weights.cf);
    let _ = writeln!(s, "group           order {}  {}", r.group.order, r.input.group);
    let _ = writeln!(s, "dual group      order {}  <{}>", r.dual.order, r.dual.generators.join("; "));
    let _ = writeln!(s, "genus           {}", r.curve.genus);
    let _ = writeln!(s, "Dolgachev       {}", list(&r.curve.dolgachev));
    let _ = writeln!(s, "stringy Euler   {}", r.curve.stringy_euler);
    let _ = writeln!(s, "gamma'          {:?}  delta {}", r.cusp.gamma_prime, r.cusp.delta);
    let _ = writeln!(s, "Gabrielov       {}", list(&r.cusp.gabrielov));
    let _ = writeln!(s, "junior          {}", r.cusp.junior);
    let _ = writeln!(s, "Milnor          {}", r.cusp.milnor);
    let _ = writeln!(s, "poincare        {}", show(&r.series.poincare));
    let _ = writeln!(s, "psi             {}", show(&r.series.psi));
    let _ = writeln!(s, "phi(f^T, G^T)   {}", show(&r.series.phi));
    let _ = writeln!(
        s,
        "checks          A=Gamma {}  g=j {}  e=mu {}",
        yes(r.checks.a_eq_gamma),
        yes(r.checks.g_eq_j),
        yes(r.checks.e_eq_mu)
    );
    for n in &r.notes {
        let _ = writeln!(s, "note            {n}");
    }
    s
}

pub const CSV_HEADER: [&str; 17] = [
    "polynomial", "type", "det", "cf", "group_order", "group", "dual_order", "dual", "dolgachev", "gabrielov",
    "genus", "junior", "e_st", "mu", "a_eq_gamma", "g_eq_j", "e_eq_mu",
];

pub fn csv_row(r: &Report) -> Vec<String> {
    vec![
        r.input.polynomial.clone(),
        r.kind.clone(),
        r.det.to_string(),
        r.weights.cf.to_string(),
        r.group.order.to_string(),
        r.input.group.clone(),
        r.dual.order.to_string(),
        r.dual.generators.join(";"),
        list(&r.curve.dolgachev),
        list(&r.cusp.gabrielov),
        r.curve.genus.to_string(),
        r.cusp.junior.to_string(),
        r.curve.stringy_euler.to_string(),
        r.cusp.milnor.to_string(),
        r.checks.a_eq_gamma.to_string(),
        r.checks.g_eq_j.to_string(),
        r.checks.e_eq_mu.to_string(),
    ]
}

pub fn to_csv<'a>(reports: impl IntoIterator<Item = &'a Report>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(|e| CliError::Output(e.to_string()))?;
    for r in reports {
        w.write_record(csv_row(r)).map_err(|e| CliError::Output(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use orbicusp_core::polynomial::parse_polynomial;
    use orbicusp_core::symmetry::g0_group;

    #[test]
    fn cyclo_map_json() {
        let v = CycloMap(CycloVector::from_entries([(12, 1), (1, -1)]));
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"12":1,"1":-1}"#);
        let back: CycloMap = serde_json::from_str(r#"{"1":-1,"12":1}"#).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<CycloMap>(r#"{"x":1}"#).is_err());
    }

    #[test]
    fn e6_report() {
        let f = parse_polynomial("x^2+y^3+z^4").unwrap();
        let r = analyze(&f, &g0_group(&f)).unwrap();
        assert_eq!(r.curve.dolgachev, [2, 3, 3]);
        assert_eq!(r.cusp.gabrielov, [2, 3, 3]);
        assert_eq!(r.curve.stringy_euler, 7);
        assert!(r.all_pass());
        assert_eq!(r.series.psi, r.series.phi);
        let text = to_text(&r);
        assert!(text.contains("Dolgachev       2,3,3"));
        let csv = to_csv([&r]).unwrap();
        assert_eq!(csv.lines().count(), 2);
    }
}
