//! The orbifold curve of a pair `(f, G)`: Dolgachev numbers, genus and
//! stringy Euler number, plus the weight-system route to the exceptional
//! orbits of the `ℂ*`-action.

use alloc::format;
use alloc::vec::Vec;

use crate::atoms::{classify3, AtomKind, InvertibleType};
use crate::polynomial::InvertiblePolynomial;
use crate::symmetry::{contains_g0, dual_group, junior_count, subgroup_fixing_coordinate, DiagonalGroup};
use crate::weights::WeightSystem;
use crate::{arith, Error, Result};

/// Maps a normal form to its triple `α′` in normal-form coordinates.
pub type AlphaTable = fn(&InvertibleType) -> [u64; 3];

/// `α′` of `(f, G^fin_f)` for each of the five normal forms.
pub fn alpha_prime_normal(kind: &InvertibleType) -> [u64; 3] {
    match *kind {
        InvertibleType::I { p } => p,
        InvertibleType::II { p1, p2, p3 } => [p1, (p2 - 1) * p1, p3 / p2],
        InvertibleType::III { p1, q2, q3 } => [p1, p1 * q3, p1 * q2],
        InvertibleType::IV { p1, p2, p3 } => [p2 - p1 + 1, (p1 - 1) * p3 / p2, p3 / p2],
        InvertibleType::V { q: [q1, q2, q3] } => [q2 * q3 - q3 + 1, q3 * q1 - q1 + 1, q1 * q2 - q2 + 1],
    }
}

/// `(α′_1, α′_2, α′_3)` in the original variable order. Entries equal to one
/// are kept.
pub fn dolgachev_gfin(f: &InvertiblePolynomial) -> Result<[u64; 3]> {
    dolgachev_gfin_using(f, alpha_prime_normal)
}

pub fn dolgachev_gfin_using(f: &InvertiblePolynomial, table: AlphaTable) -> Result<[u64; 3]> {
    let tag = classify3(f)?;
    Ok(tag.pull_back(table(&tag.kind)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DolgachevEntry {
    pub alpha_prime: u64,
    /// `|K_i|`, the order of the subgroup of `G^T` fixing coordinate `i`.
    pub k_order: u64,
    pub value: u64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DolgachevData {
    pub per_coordinate: [DolgachevEntry; 3],
    /// Sorted, with ones omitted.
    pub multiset: Vec<u64>,
}

fn check_pair(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<()> {
    if f.n() != 3 {
        return Err(Error::WrongArity { expected: 3, found: f.n() });
    }
    if g.matrix() != f.matrix() {
        return Err(Error::NotASubgroup);
    }
    if !contains_g0(f, g) {
        return Err(Error::NotContainingG0);
    }
    Ok(())
}

/// Dolgachev numbers `A_{(f,G)}` for `G_0 ⊆ G ⊆ G^fin_f`, computed on the
/// dual side: `α_i = α′_i |K_i| / |G^T|` with multiplicity `|K_i|`.
pub fn dolgachev(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<DolgachevData> {
    dolgachev_using(f, g, alpha_prime_normal)
}

pub fn dolgachev_using(f: &InvertiblePolynomial, g: &DiagonalGroup, table: AlphaTable) -> Result<DolgachevData> {
    check_pair(f, g)?;
    let alpha = dolgachev_gfin_using(f, table)?;
    let dual = dual_group(f, g)?;
    let mut entries = [DolgachevEntry { alpha_prime: 0, k_order: 0, value: 0, multiplicity: 0 }; 3];
    let mut multiset = Vec::new();
    for i in 0..3 {
        let k = subgroup_fixing_coordinate(&dual, i).order();
        let scaled = alpha[i] * k;
        if !scaled.is_multiple_of(dual.order()) {
            return Err(Error::NonIntegralDolgachev(format!("{}*{}/{}", alpha[i], k, dual.order())));
        }
        let value = scaled / dual.order();
        entries[i] = DolgachevEntry { alpha_prime: alpha[i], k_order: k, value, multiplicity: k };
        if value != 1 {
            multiset.extend(core::iter::repeat_n(value, k as usize));
        }
    }
    multiset.sort_unstable();
    Ok(DolgachevData { per_coordinate: entries, multiset })
}

/// Number of `(k, l) ≥ 0` with `k a + l b = h`.
pub fn count_m(a: u64, b: u64, h: u64) -> u64 {
    assert!(a > 0 && b > 0, "count_m needs positive weights");
    (0..=h / a).filter(|k| (h - k * a).is_multiple_of(b)).count() as u64
}

/// Orders of the exceptional orbits of the `ℂ*`-action with reduced weights
/// `(a_1, a_2, a_3; h)`, sorted.
pub fn orbit_invariants(ws: &WeightSystem) -> Result<Vec<u64>> {
    if ws.n() != 3 {
        return Err(Error::WrongArity { expected: 3, found: ws.n() });
    }
    if !ws.is_reduced() {
        return Err(Error::NotReduced);
    }
    let a = ws.weights();
    let h = ws.degree();
    let mut out: Vec<u64> = a.iter().copied().filter(|&ai| !h.is_multiple_of(ai)).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            let g = arith::gcd(a[i], a[j]);
            if g > 1 {
                let m = count_m(a[i], a[j], h);
                out.extend(core::iter::repeat_n(g, m.saturating_sub(1) as usize));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// `g_{(f,G)} = j_{G^T}`.
pub fn genus(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<u64> {
    check_pair(f, g)?;
    Ok(junior_count(&dual_group(f, g)?))
}

/// Genus of `(f, G)` for a Fermat sum by counting `G`-invariant forms
/// `x^r dx∧dy∧dz` of degree zero.
pub fn genus_bp_oracle(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<u64> {
    check_pair(f, g)?;
    if f.atoms().iter().any(|a| a.kind != AtomKind::Fermat) {
        return Err(Error::NotBrieskornPham);
    }
    let p: Vec<u64> = (0..3).map(|j| (0..3).map(|i| f.exponent(i, j)).max().unwrap_or(0) as u64).collect();
    let gens: Vec<Vec<u64>> = g.generators().iter().map(|v| v.over(g.modulus()).expect("element")).collect();
    let m = g.modulus();
    let mut count = 0;
    for r1 in 0..p[0] - 1 {
        for r2 in 0..p[1] - 1 {
            for r3 in 0..p[2] - 1 {
                let r = [r1, r2, r3];
                // Σ (r_i + 1) / p_i = 1
                let lhs: u64 = (0..3).map(|i| (r[i] + 1) * (p[0] * p[1] * p[2] / p[i])).sum();
                if lhs != p[0] * p[1] * p[2] {
                    continue;
                }
                if gens.iter().all(|v| (0..3).map(|i| (r[i] + 1) * v[i]).sum::<u64>() % m == 0) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// `2 - 2g + Σ (α - 1)`.
pub fn stringy_euler(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<i64> {
    Ok(curve_invariants(f, g)?.e_st)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveInvariants {
    pub genus: u64,
    pub dolgachev: Vec<u64>,
    pub e_st: i64,
}

pub fn euler_from(genus: u64, orders: &[u64]) -> i64 {
    2 - 2 * genus as i64 + orders.iter().map(|&a| a as i64 - 1).sum::<i64>()
}

pub fn curve_invariants(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<CurveInvariants> {
    let dolgachev = dolgachev(f, g)?.multiset;
    let genus = genus(f, g)?;
    Ok(CurveInvariants { genus, e_st: euler_from(genus, &dolgachev), dolgachev })
}

/// Convenience for the reduced system of `f` when `n = 3`.
pub fn strange_pair(f: &InvertiblePolynomial) -> Result<(Vec<u64>, Vec<u64>)> {
    let orbits = orbit_invariants(&f.canonical_weights().reduced())?;
    let g0 = crate::symmetry::g0_group(f);
    Ok((orbits, dolgachev(f, &g0)?.multiset))
}
