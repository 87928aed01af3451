//! Products of cyclotomic factors `∏ (1 − t^m)^{e(m)}`, Poincaré series,
//! monodromy characteristic polynomials and their Lefschetz traces.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{self, Q};
use crate::atoms::{classify3, InvertibleType};
use crate::curve;
use crate::polynomial::InvertiblePolynomial;
use crate::symmetry::{contains_g0, dual_group, g0_group, DiagonalGroup};
use crate::weights::cf;
use crate::{Error, Result};

/// `∏_m (1 − t^m)^{e(m)}` with finitely many non-zero `e(m)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CycloVector {
    entries: BTreeMap<u64, i64>,
}

impl CycloVector {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_entries(pairs: impl IntoIterator<Item = (u64, i64)>) -> Self {
        let mut v = Self::one();
        for (m, e) in pairs {
            v.add_entry(m, e);
        }
        v
    }

    /// Multiplies by `(1 − t^m)^e`.
    pub fn add_entry(&mut self, m: u64, e: i64) {
        assert!(m > 0, "factor 1 - t^0 vanishes");
        let slot = self.entries.entry(m).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.entries.remove(&m);
        }
    }

    pub fn exponent(&self, m: u64) -> i64 {
        self.entries.get(&m).copied().unwrap_or(0)
    }

    /// Non-zero `(m, e(m))` in increasing `m`.
    pub fn entries(&self) -> impl DoubleEndedIterator<Item = (u64, i64)> + '_ {
        self.entries.iter().map(|(&m, &e)| (m, e))
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, e) in other.entries() {
            out.add_entry(m, e);
        }
        out
    }

    pub fn div(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, e) in other.entries() {
            out.add_entry(m, -e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::from_entries(self.entries().map(|(m, e)| (m, e * k)))
    }

    /// `Σ m e(m)`, the degree as a rational function.
    pub fn degree(&self) -> i64 {
        self.entries().map(|(m, e)| m as i64 * e).sum()
    }

    /// `Σ_{m | k} m e(m)`: the sum of the `k`-th powers of the roots.
    pub fn trace(&self, k: u64) -> i64 {
        self.entries().filter(|(m, _)| k.is_multiple_of(*m)).map(|(m, e)| m as i64 * e).sum()
    }

    /// Coefficients, constant term first, of the product. Fails unless the
    /// product is a polynomial.
    pub fn expand(&self) -> Result<Vec<i64>> {
        let mut poly: Vec<i128> = vec![1];
        for (m, e) in self.entries().filter(|&(_, e)| e > 0) {
            for _ in 0..e {
                poly = mul_one_minus(&poly, m as usize);
            }
        }
        for (m, e) in self.entries().filter(|&(_, e)| e < 0) {
            for _ in 0..-e {
                poly = div_one_minus(&poly, m as usize).ok_or(Error::NotPolynomial)?;
            }
        }
        poly.into_iter().map(|c| i64::try_from(c).map_err(|_| Error::Overflow)).collect()
    }
}

fn mul_one_minus(p: &[i128], m: usize) -> Vec<i128> {
    let mut out = vec![0i128; p.len() + m];
    for (i, &c) in p.iter().enumerate() {
        out[i] += c;
        out[i + m] -= c;
    }
    out
}

/// Exact quotient by `1 − t^m`, if any.
fn div_one_minus(p: &[i128], m: usize) -> Option<Vec<i128>> {
    if p.len() <= m {
        return None;
    }
    let qlen = p.len() - m;
    let mut q = vec![0i128; p.len()];
    for k in 0..p.len() {
        q[k] = p[k] + if k >= m { q[k - m] } else { 0 };
    }
    if q[qlen..].iter().any(|&c| c != 0) {
        return None;
    }
    q.truncate(qlen);
    Some(q)
}

/// Numerator factors then denominator factors, largest `m` first, for
/// example `12*3*2 / 6*4*1`; `1^4` stands for `(1 − t)^4`.
impl fmt::Display for CycloVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(v: &CycloVector, sign: i64) -> String {
            let parts: Vec<String> = v
                .entries()
                .rev()
                .filter(|&(_, e)| e * sign > 0)
                .map(|(m, e)| if e * sign == 1 { format!("{m}") } else { format!("{m}^{}", e * sign) })
                .collect();
            parts.join("*")
        }
        let num = side(self, 1);
        let den = side(self, -1);
        match (num.is_empty(), den.is_empty()) {
            (true, true) => f.write_str("1"),
            (false, true) => f.write_str(&num),
            (true, false) => write!(f, "1 / {den}"),
            (false, false) => write!(f, "{num} / {den}"),
        }
    }
}

/// Poincaré series of `ℂ[x,y,z]/(f)` graded by the weights divided by
/// `c = |G^fin_f / G|`.
pub fn poincare_series(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<CycloVector> {
    if g.matrix() != f.matrix() {
        return Err(Error::NotASubgroup);
    }
    if !contains_g0(f, g) {
        return Err(Error::NotContainingG0);
    }
    let w = f.canonical_weights();
    let c = f.det() / g.order();
    if !w.degree().is_multiple_of(c) || w.weights().iter().any(|wi| wi % c != 0) {
        return Err(Error::NotGraded(c));
    }
    let mut v = CycloVector::from_entries([(w.degree() / c, 1)]);
    for wi in w.weights() {
        v.add_entry(wi / c, -1);
    }
    Ok(v)
}

/// `ψ_{(f,G)} = p_{(f,G)} (1−t)^{2−2g} ∏_α (1−t^α)/(1−t)`.
pub fn psi(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<CycloVector> {
    let p = poincare_series(f, g)?;
    let inv = curve::curve_invariants(f, g)?;
    Ok(p.mul(&crate::cusp::char_poly_from(inv.genus, &inv.dolgachev)))
}

fn exact(num: u64, den: u64) -> Result<u64> {
    if den == 0 || !num.is_multiple_of(den) {
        return Err(Error::NotGraded(den));
    }
    Ok(num / den)
}

/// Closed form of `ψ_{(f,G_0)}` for each of the five types, with `c = c_f`
/// and `g` the genus of `(f, G_0)`.
pub fn table2_psi(f: &InvertiblePolynomial) -> Result<CycloVector> {
    let tag = classify3(f)?;
    let c = cf(f);
    let g = curve::genus(f, &g0_group(f))? as i64;
    let gcd = arith::gcd;
    let mut v = CycloVector::one();
    match tag.kind {
        InvertibleType::I { p: [p1, p2, p3] } => {
            let (c1, c2, c3) = (gcd(p2, p3), gcd(p1, p3), gcd(p1, p2));
            v.add_entry(exact(p1 * c1, c)?, c1 as i64);
            v.add_entry(exact(p2 * c2, c)?, c2 as i64);
            v.add_entry(exact(p3 * c3, c)?, c3 as i64);
            v.add_entry(exact(p1 * p2 * p3, c)?, 1);
            v.add_entry(1, -((c1 + c2 + c3) as i64 - 2 + 2 * g));
            v.add_entry(exact(p2 * p3, c)?, -1);
            v.add_entry(exact(p3 * p1, c)?, -1);
            v.add_entry(exact(p1 * p2, c)?, -1);
        }
        InvertibleType::II { p1, p2, p3 } => {
            let (c1, c2) = (gcd(p3 / p2, p2 - 1), gcd(p1, p2));
            v.add_entry(exact(p1 * c1, c)?, c1 as i64);
            v.add_entry(exact(p3 * c2, p2 * c)?, c2 as i64);
            v.add_entry(exact(p1 * p3, c)?, 1);
            v.add_entry(1, -((c1 + c2) as i64 - 1 + 2 * g));
            v.add_entry(exact(p3, c)?, -1);
            v.add_entry(exact(p1 * p3, p2 * c)?, -1);
        }
        InvertibleType::III { p1, q2, q3 } => {
            let p2 = (q2 + 1) * (q3 + 1) - 1;
            let c1 = gcd(q2, q3);
            v.add_entry(exact(p1 * c1, c)?, c1 as i64);
            v.add_entry(exact(p1 * p2, c)?, 1);
            v.add_entry(1, -(c1 as i64 + 2 * g));
            v.add_entry(exact(p2, c)?, -1);
        }
        InvertibleType::IV { p1, p2, p3 } => {
            let c1 = gcd(p2 / p1, p1 - 1);
            v.add_entry(exact(p3 * c1, p2 * c)?, c1 as i64);
            v.add_entry(exact(p3, c)?, 1);
            v.add_entry(1, -(c1 as i64 + 2 * g));
            v.add_entry(exact(p3, p1 * c)?, -1);
        }
        InvertibleType::V { q: [q1, q2, q3] } => {
            v.add_entry(exact(q1 * q2 * q3 + 1, c)?, 1);
            v.add_entry(1, -(1 + 2 * g));
        }
    }
    Ok(v)
}

/// Lefschetz numbers `L_k`, `k = 1, ..., d̃`, of the monodromy of `f` twisted
/// by `G`, where `d̃` is the reduced degree of `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzTable {
    pub modulus: u64,
    /// `values[k - 1] = L_k`.
    pub values: Vec<i64>,
}

impl LefschetzTable {
    pub fn get(&self, k: u64) -> i64 {
        let k = (k - 1) % self.modulus + 1;
        self.values[k as usize - 1]
    }
}

/// Sector sum `Σ_g (−1)^{n_g+1} |G|^{-1} Σ_h ∏_{i ∈ Fix g} (δ_i(h,k) d̃/w̃_i − 1)`
/// with `δ_i(h, k) = 1` iff `phase_i(h) + k w̃_i/d̃ ∈ ℤ`.
pub fn lefschetz_numbers(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<LefschetzTable> {
    if g.matrix() != f.matrix() {
        return Err(Error::NotASubgroup);
    }
    if !crate::symmetry::is_sl_subgroup(g) {
        return Err(Error::NotSL);
    }
    let n = f.n();
    let red = f.canonical_weights().reduced();
    let dt = red.degree();
    let inv_q: Vec<Q> = red.weights().iter().map(|&w| Q::new(dt as i64, w as i64)).collect();
    let m = g.modulus();
    let elements = g.raw_elements();
    let order = Q::from_integer(elements.len() as i64);

    // sectors only matter through their fixed locus
    let mut fix_counts: BTreeMap<u32, i64> = BTreeMap::new();
    for e in elements {
        let mask = (0..n).filter(|&i| e[i] == 0).fold(0u32, |acc, i| acc | 1 << i);
        *fix_counts.entry(mask).or_insert(0) += 1;
    }

    let mut values = Vec::with_capacity(dt as usize);
    for k in 1..=dt {
        // how many h hit each pattern of integral coordinates
        let mut hits: BTreeMap<u32, i64> = BTreeMap::new();
        for e in elements {
            let mask = (0..n)
                .filter(|&i| {
                    // e_i / m + k w̃_i / d̃ ∈ ℤ
                    (e[i] as u128 * dt as u128 + k as u128 * red.weights()[i] as u128 * m as u128).is_multiple_of(m as u128 * dt as u128)
                })
                .fold(0u32, |acc, i| acc | 1 << i);
            *hits.entry(mask).or_insert(0) += 1;
        }
        let mut total = Q::zero();
        for (&fix, &count) in &fix_counts {
            let nfix = fix.count_ones();
            let sign = if nfix % 2 == 1 { 1 } else { -1 };
            let mut inner = Q::zero();
            for (&pattern, &h_count) in &hits {
                let mut prod = Q::one();
                for i in (0..n).filter(|&i| fix & (1 << i) != 0) {
                    prod *= if pattern & (1 << i) != 0 { inv_q[i] - Q::one() } else { -Q::one() };
                }
                inner += prod * Q::from_integer(h_count);
            }
            total += inner * Q::from_integer(sign * count);
        }
        total /= order;
        if !arith::is_integer(&total) {
            return Err(Error::NonIntegralTrace(format!("L_{k} = {total}")));
        }
        values.push(total.to_integer());
    }
    Ok(LefschetzTable { modulus: dt, values })
}

/// Recovers `e(m)` for `m | d̃` from traces by `m e(m) = Σ_{k|m} μ(m/k) L_k`
/// and checks the result against every trace.
pub fn moebius_invert(modulus: u64, trace: impl Fn(u64) -> i64) -> Result<CycloVector> {
    let mut v = CycloVector::one();
    for m in arith::divisors(modulus) {
        let s: i64 = arith::divisors(m).into_iter().map(|k| arith::moebius(m / k) * trace(k)).sum();
        if s % m as i64 != 0 {
            return Err(Error::MoebiusInconsistent(format!("{m} e({m}) = {s}")));
        }
        v.add_entry(m, s / m as i64);
    }
    for k in arith::divisors(modulus) {
        if v.trace(k) != trace(k) {
            return Err(Error::MoebiusInconsistent(format!("trace {k}")));
        }
    }
    Ok(v)
}

/// `φ(f, G)` for `G ⊆ SL ∩ G^fin_f`, from the Lefschetz numbers.
pub fn equivariant_char_poly(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<CycloVector> {
    let table = lefschetz_numbers(f, g)?;
    let dt = table.modulus;
    for k in 1..=dt {
        if table.get(k) != table.get(arith::gcd(k, dt)) {
            return Err(Error::MoebiusInconsistent(format!("L_{k} differs from L_gcd({k},{dt})")));
        }
    }
    let v = moebius_invert(dt, |k| table.get(k))?;
    for k in 1..=dt {
        if v.trace(arith::gcd(k, dt)) != table.get(k) {
            return Err(Error::MoebiusInconsistent(format!("reconstruction of L_{k}")));
        }
    }
    Ok(v)
}

/// Exponents `q` of the monodromy eigenvalues `e[q]`, with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentList {
    pub exponents: Vec<Q>,
}

/// Characteristic polynomial of the monodromy of `f` from the generating
/// function `∏_i (u^{w̃_i} − u^{d̃}) / (1 − u^{w̃_i})` of its exponents.
pub fn char_poly_qh(f: &InvertiblePolynomial) -> Result<(ExponentList, CycloVector)> {
    let red = f.canonical_weights().reduced();
    let dt = red.degree();
    let w = red.weights();
    let mut num: Vec<i128> = vec![1];
    let mut den: Vec<i128> = vec![1];
    for &wi in w {
        if wi >= dt {
            return Err(Error::NotPolynomial);
        }
        num = mul_one_minus(&num, (dt - wi) as usize);
        den = mul_one_minus(&den, wi as usize);
    }
    let quotient = div_poly(&num, &den).ok_or(Error::NotPolynomial)?;
    let shift: u64 = w.iter().sum();
    let mut exponents = Vec::new();
    let mut by_residue = vec![0i64; dt as usize];
    for (j, &c) in quotient.iter().enumerate() {
        if c < 0 {
            return Err(Error::NotPolynomial);
        }
        let power = shift + j as u64;
        for _ in 0..c {
            exponents.push(Q::new(power as i64, dt as i64));
        }
        by_residue[(power % dt) as usize] += c as i64;
    }
    let phi = arith::cyclotomic(dt);
    let mut traces = BTreeMap::new();
    for k in arith::divisors(dt) {
        // Λ_k = Σ_j c_j ζ^{k j} in ℤ[ζ], ζ a primitive d̃-th root of unity
        let mut poly = vec![0i64; dt as usize];
        for (r, &c) in by_residue.iter().enumerate() {
            poly[(r as u64 * k % dt) as usize] += c;
        }
        let reduced = arith::reduce_mod(&poly, &phi);
        if reduced.iter().skip(1).any(|&c| c != 0) {
            return Err(Error::NonIntegralTrace(format!("Λ_{k} is not rational")));
        }
        traces.insert(k, reduced.first().copied().unwrap_or(0));
    }
    let v = moebius_invert(dt, |k| traces[&arith::gcd(k, dt)])?;
    Ok((ExponentList { exponents }, v))
}

/// Exact quotient of integer polynomials with `den[0] = 1`.
fn div_poly(num: &[i128], den: &[i128]) -> Option<Vec<i128>> {
    if num.len() < den.len() {
        return None;
    }
    let qlen = num.len() - den.len() + 1;
    let mut rem = num.to_vec();
    let mut q = vec![0i128; qlen];
    for k in 0..qlen {
        let c = rem[k];
        q[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    rem.iter().all(|&c| c == 0).then_some(q)
}

/// Outcome of comparing `ψ_{(f,G_0)}` with `φ(f^T, G_0^T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PoincareVerdict {
    NotApplicable(String),
    Equal { psi: CycloVector, phi: CycloVector },
    NotEqual { psi: CycloVector, phi: CycloVector },
}

impl PoincareVerdict {
    pub fn is_failure(&self) -> bool {
        matches!(self, PoincareVerdict::NotEqual { .. })
    }
}

pub fn verify_poincare_theorem(f: &InvertiblePolynomial) -> Result<PoincareVerdict> {
    let t = f.transpose();
    let (c, ct) = (cf(f), cf(&t));
    if c != ct {
        return Ok(PoincareVerdict::NotApplicable(format!("c_f = {c} but c_(f^T) = {ct}")));
    }
    let g0 = g0_group(f);
    let genus = curve::genus(f, &g0)?;
    if genus != 0 {
        return Ok(PoincareVerdict::NotApplicable(format!("genus {genus}")));
    }
    let psi = psi(f, &g0)?;
    let phi = equivariant_char_poly(&t, &dual_group(f, &g0)?)?;
    Ok(if psi == phi { PoincareVerdict::Equal { psi, phi } } else { PoincareVerdict::NotEqual { psi, phi } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;
    use crate::symmetry::{gfin, parse_group, trivial_group};

    fn poly(s: &str) -> InvertiblePolynomial {
        parse_polynomial(s).unwrap()
    }

    fn cv(pairs: &[(u64, i64)]) -> CycloVector {
        CycloVector::from_entries(pairs.iter().copied())
    }

    /// Naive product of the factors, dividing by `(1 - t)` last.
    fn naive_expand(pairs: &[(u64, i64)]) -> Vec<i64> {
        let mut p = vec![1i64];
        for &(m, e) in pairs {
            for _ in 0..e.max(0) {
                let mut next = vec![0; p.len() + m as usize];
                for (i, &c) in p.iter().enumerate() {
                    next[i] += c;
                    next[i + m as usize] -= c;
                }
                p = next;
            }
        }
        for &(m, e) in pairs {
            for _ in 0..(-e).max(0) {
                // synthetic division by 1 - t^m
                let mut q = vec![0; p.len() - m as usize];
                for k in 0..q.len() {
                    q[k] = p[k] + if k >= m as usize { q[k - m as usize] } else { 0 };
                }
                p = q;
            }
        }
        p
    }

    fn e6() -> [(u64, i64); 6] {
        [(12, 1), (3, 1), (2, 1), (1, -1), (6, -1), (4, -1)]
    }

    #[test]
    fn cyclo_arithmetic() {
        assert_eq!(cv(&[(2, 1), (1, -1)]).expand().unwrap(), [1, 1]);
        assert_eq!(cv(&[(1, 2)]).expand().unwrap(), [1, -2, 1]);
        let v = cv(&e6());
        assert_eq!(v.expand().unwrap(), naive_expand(&e6()));
        assert_eq!(v.expand().unwrap().len(), 7);
        assert_eq!(v.degree(), 6);
        assert_eq!(cv(&[(1, -1)]).expand(), Err(Error::NotPolynomial));
        assert_eq!(cv(&[(4, 1), (3, -1)]).expand(), Err(Error::NotPolynomial));
        let a = cv(&[(6, 1), (1, -2)]);
        assert_eq!(a.mul(&a).div(&a), a);
        assert!(a.div(&a).is_one());
        assert_eq!(a.to_string(), "6 / 1^2");
    }

    #[test]
    fn poincare_examples() {
        let f = poly("x^2+y^3+z^4");
        assert_eq!(poincare_series(&f, &g0_group(&f)).unwrap(), cv(&[(12, 1), (6, -1), (4, -1), (3, -1)]));
        let f = poly("x^5+y^5+z^5");
        assert_eq!(poincare_series(&f, &g0_group(&f)).unwrap(), cv(&[(5, 1), (1, -3)]));
        let f = poly("x^2+x*y^3+y*z^5");
        assert_eq!(poincare_series(&f, &g0_group(&f)).unwrap(), cv(&[(6, 1), (3, -1), (1, -2)]));
    }

    #[test]
    fn psi_examples() {
        let f = poly("x^2+y^3+z^4");
        assert_eq!(psi(&f, &g0_group(&f)).unwrap(), cv(&e6()));
        assert_eq!(table2_psi(&f).unwrap(), cv(&e6()));
        let f = poly("x^2+x*y^3+y*z^5");
        assert_eq!(psi(&f, &g0_group(&f)).unwrap(), cv(&[(6, 1), (3, -1), (1, -4)]));
        assert_eq!(table2_psi(&f).unwrap(), cv(&[(6, 1), (3, -1), (1, -4)]));
        let e8 = [(30, 1), (5, 1), (3, 1), (2, 1), (15, -1), (10, -1), (6, -1), (1, -1)];
        let f = poly("x^2+y^3+z^5");
        assert_eq!(psi(&f, &g0_group(&f)).unwrap(), cv(&e8));
        let f = poly("x^3*y+y^3*z+z^3*x");
        assert_eq!(table2_psi(&f).unwrap(), cv(&[(4, 1), (1, -7)]));
        assert_eq!(psi(&f, &g0_group(&f)).unwrap(), cv(&[(4, 1), (1, -7)]));
    }

    #[test]
    fn lefschetz_examples() {
        let f = poly("x^2+y^2+z^2");
        let table = lefschetz_numbers(&f, &trivial_group(&f)).unwrap();
        assert_eq!(table.values, [-1, 1]);
        let f = poly("x^2+y^3+z^4");
        let g = parse_group(&f, "1/2(1,0,1)").unwrap();
        let table = lefschetz_numbers(&f, &g).unwrap();
        assert_eq!(table.get(1), -1);
        assert_eq!(table.get(12), 6);
        assert_eq!(equivariant_char_poly(&f, &g).unwrap(), cv(&e6()));
        assert_eq!(lefschetz_numbers(&f, &gfin(&f)), Err(Error::NotSL));
    }

    #[test]
    fn equivariant_examples() {
        let f = poly("x^2+y^2+z^2");
        let g = parse_group(&f, "1/2(0,1,1)").unwrap();
        assert_eq!(equivariant_char_poly(&f, &g).unwrap(), cv(&[(2, 2), (1, -2)]));
        for text in ["x^2+y^3+z^4", "x^2+x*y^3+y*z^5", "x^3*y+y^3*z+z^3*x"] {
            let f = poly(text);
            let (_, qh) = char_poly_qh(&f).unwrap();
            assert_eq!(equivariant_char_poly(&f, &trivial_group(&f)).unwrap(), qh, "{text}");
        }
    }

    #[test]
    fn quasihomogeneous_examples() {
        let (exps, v) = char_poly_qh(&poly("x^2+y^2+z^2")).unwrap();
        assert_eq!(exps.exponents, [Q::new(3, 2)]);
        assert_eq!(v, cv(&[(2, 1), (1, -1)]));
        for k in 2..6u64 {
            let (exps, v) = char_poly_qh(&poly(&format!("x^2+y^2+z^{}", 2 * k))).unwrap();
            assert_eq!(v, cv(&[(2 * k, 1), (1, -1)]));
            assert_eq!(exps.exponents.len() as u64, 2 * k - 1);
        }
        let (exps, v) = char_poly_qh(&poly("x^2+y^3+z^5")).unwrap();
        assert_eq!(v, cv(&[(30, 1), (5, 1), (3, 1), (2, 1), (15, -1), (10, -1), (6, -1), (1, -1)]));
        assert_eq!(exps.exponents.len(), 8);
        assert_eq!(v.degree(), 8);
    }

    #[test]
    fn poincare_theorem_examples() {
        assert!(matches!(verify_poincare_theorem(&poly("x^2+y^3+z^4")).unwrap(), PoincareVerdict::Equal { .. }));
        assert!(matches!(verify_poincare_theorem(&poly("x^2+y^3+z^5")).unwrap(), PoincareVerdict::Equal { .. }));
        assert!(matches!(
            verify_poincare_theorem(&poly("x^2+x*y^3+y*z^5")).unwrap(),
            PoincareVerdict::NotApplicable(_)
        ));
    }
}
