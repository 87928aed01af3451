//! Finite groups of diagonal symmetries, Krawitz duals, ages and junior
//! elements.
//!
//! A diagonal element `diag(e[a_1], ..., e[a_n])` is stored as its phase
//! vector `(a_1, ..., a_n)` with every `a_i` in `[0, 1)`. Inside a group the
//! phases are kept as numerators over the common modulus `|det E|`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::arith::{self, Q};
use crate::polynomial::{ExponentMatrix, InvertiblePolynomial};
use crate::{Error, Result};

/// A vector of rational phases modulo one, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseVector {
    num: Vec<u64>,
    den: u64,
}

impl PhaseVector {
    /// `(num_1 / den, ..., num_n / den)` reduced modulo one.
    pub fn new(num: Vec<u64>, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let num: Vec<u64> = num.into_iter().map(|a| a % den).collect();
        let g = arith::gcd_all(num.iter().copied().chain([den]));
        Self { num: num.into_iter().map(|a| a / g).collect(), den: den / g }
    }

    pub fn from_phases(phases: &[Q]) -> Self {
        let den = phases.iter().fold(1u64, |acc, q| arith::lcm(acc, *q.denom() as u64));
        let num = phases
            .iter()
            .map(|q| {
                let scaled = *q.numer() * (den as i64 / *q.denom());
                scaled.rem_euclid(den as i64) as u64
            })
            .collect();
        Self::new(num, den)
    }

    pub fn identity(n: usize) -> Self {
        Self { num: vec![0; n], den: 1 }
    }

    pub fn n(&self) -> usize {
        self.num.len()
    }

    /// The common denominator, i.e. the order of the element.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn numerators(&self) -> &[u64] {
        &self.num
    }

    pub fn phase(&self, i: usize) -> Q {
        Q::new(self.num[i] as i64, self.den as i64)
    }

    pub fn phases(&self) -> Vec<Q> {
        (0..self.n()).map(|i| self.phase(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.den == 1
    }

    /// Numerators over `modulus`, if every phase has a denominator dividing it.
    pub fn over(&self, modulus: u64) -> Option<Vec<u64>> {
        modulus.is_multiple_of(self.den).then(|| self.num.iter().map(|a| a * (modulus / self.den)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let den = arith::lcm(self.den, other.den);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * (den / self.den) + b * (den / other.den))
            .collect();
        Self::new(num, den)
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.num.iter().map(|a| self.den - a).collect(), self.den)
    }

    pub fn age(&self) -> Q {
        Q::new(self.num.iter().sum::<u64>() as i64, self.den as i64)
    }

    /// Whether the element lies in `SL_n`, i.e. its phases sum to an integer.
    pub fn in_sl(&self) -> bool {
        self.num.iter().sum::<u64>() % self.den == 0
    }

    /// Whether `E · phases` is an integer vector, i.e. the element leaves every
    /// monomial of the polynomial with exponent matrix `E` invariant.
    pub fn is_symmetry_of(&self, matrix: &ExponentMatrix) -> bool {
        self.n() == matrix.n()
            && matrix
                .rows()
                .all(|row| row.iter().zip(&self.num).map(|(&e, &a)| e as u64 * a).sum::<u64>() % self.den == 0)
    }
}

impl PartialOrd for PhaseVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the phases as rationals.
impl Ord for PhaseVector {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.num.iter().zip(&other.num) {
            let ord = (a * other.den).cmp(&(b * self.den));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.num.len().cmp(&other.num.len())
    }
}

/// Written as `1/r(a,b,c)`; the identity as `0`.
impl fmt::Display for PhaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("0");
        }
        write!(f, "1/{}(", self.den)?;
        for (i, a) in self.num.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl core::str::FromStr for PhaseVector {
    type Err = Error;

    /// Parses `1/r(a,b,c)`, or `0` for the identity of unspecified length.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = |msg: &str| Error::Syntax { pos: 0, msg: format!("{msg} in group element '{s}'") };
        let rest = s.strip_prefix("1/").ok_or_else(|| err("expected 1/r(...)"))?;
        let open = rest.find('(').ok_or_else(|| err("missing '('"))?;
        let body = rest[open + 1..].strip_suffix(')').ok_or_else(|| err("missing ')'"))?;
        let den: u64 = rest[..open].trim().parse().map_err(|_| err("bad denominator"))?;
        if den == 0 {
            return Err(err("zero denominator"));
        }
        let mut num = Vec::new();
        for part in body.split(',') {
            let v: i64 = part.trim().parse().map_err(|_| err("bad numerator"))?;
            num.push(v.rem_euclid(den as i64) as u64);
        }
        Ok(Self::new(num, den))
    }
}

/// Age, fixed coordinates and `n_g` of a diagonal element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgeReport {
    pub age: Q,
    pub nfix: usize,
    pub fixed: Vec<usize>,
}

pub fn age_and_fix(g: &PhaseVector) -> AgeReport {
    let fixed: Vec<usize> = (0..g.n()).filter(|&i| g.num[i] == 0).collect();
    AgeReport { age: g.age(), nfix: fixed.len(), fixed }
}

pub fn in_sl(g: &PhaseVector) -> bool {
    g.in_sl()
}

/// A finite subgroup of the maximal diagonal symmetry group of a polynomial.
///
/// Elements are enumerated eagerly and kept in lexicographic order.
#[derive(Debug, Clone)]
pub struct DiagonalGroup {
    matrix: ExponentMatrix,
    modulus: u64,
    generators: Vec<PhaseVector>,
    elements: Vec<Vec<u64>>,
}

impl PartialEq for DiagonalGroup {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && self.elements == other.elements
    }
}

impl Eq for DiagonalGroup {}

impl DiagonalGroup {
    fn from_elements(matrix: ExponentMatrix, modulus: u64, elements: BTreeSet<Vec<u64>>) -> Self {
        let elements: Vec<Vec<u64>> = elements.into_iter().collect();
        let generators = minimal_generators(&elements, modulus);
        Self { matrix, modulus, generators: generators.iter().map(|g| PhaseVector::new(g.clone(), modulus)).collect(), elements }
    }

    /// Exponent matrix of the polynomial this group acts on.
    pub fn matrix(&self) -> &ExponentMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    /// Common denominator of all phases.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// A generating set chosen greedily in element order.
    pub fn generators(&self) -> &[PhaseVector] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = PhaseVector> + '_ {
        self.elements.iter().map(|e| PhaseVector::new(e.clone(), self.modulus))
    }

    /// Numerators over [`Self::modulus`] in lexicographic order.
    pub fn raw_elements(&self) -> &[Vec<u64>] {
        &self.elements
    }

    pub fn contains(&self, g: &PhaseVector) -> bool {
        g.n() == self.n() && g.over(self.modulus).is_some_and(|v| self.elements.binary_search(&v).is_ok())
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &DiagonalGroup) -> bool {
        self.matrix == other.matrix && self.elements().all(|g| other.contains(&g))
    }

    /// Largest order of an element.
    pub fn exponent(&self) -> u64 {
        self.elements().map(|g| g.order()).max().unwrap_or(1)
    }

    fn filtered(&self, keep: impl Fn(&[u64]) -> bool) -> Self {
        let kept = self.elements.iter().filter(|e| keep(e)).cloned().collect();
        Self::from_elements(self.matrix.clone(), self.modulus, kept)
    }
}

impl fmt::Display for DiagonalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("{1}");
        }
        f.write_str("<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

fn add_mod(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| (x + y) % m).collect()
}

/// Closure of `base` (already a group) and `g`.
fn extend(base: &BTreeSet<Vec<u64>>, g: &[u64], m: u64) -> BTreeSet<Vec<u64>> {
    if base.contains(g) {
        return base.clone();
    }
    let mut out = base.clone();
    let mut step = g.to_vec();
    while !base.contains(&step) {
        for h in base {
            out.insert(add_mod(h, &step, m));
        }
        step = add_mod(&step, g, m);
    }
    out
}

fn closure(n: usize, gens: &[Vec<u64>], m: u64) -> BTreeSet<Vec<u64>> {
    let mut set = BTreeSet::new();
    set.insert(vec![0; n]);
    for g in gens {
        set = extend(&set, g, m);
    }
    set
}

fn minimal_generators(elements: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let Some(first) = elements.first() else { return Vec::new() };
    let mut span = closure(first.len(), &[], m);
    let mut gens = Vec::new();
    // prefer elements of large order so cyclic groups get a single generator
    let mut candidates: Vec<&Vec<u64>> = elements.iter().collect();
    candidates.sort_by_key(|e| core::cmp::Reverse(PhaseVector::new((*e).clone(), m).order()));
    for e in candidates {
        if span.len() == elements.len() {
            break;
        }
        if !span.contains(e) {
            span = extend(&span, e, m);
            gens.push(e.clone());
        }
    }
    gens
}

/// `G^fin_f`: all diagonal symmetries of `f`, generated by the columns of
/// `E^{-1}`. Its order is `|det E|`.
pub fn gfin(f: &InvertiblePolynomial) -> DiagonalGroup {
    gfin_of(f.matrix(), f.det())
}

fn gfin_of(matrix: &ExponentMatrix, d: u64) -> DiagonalGroup {
    let n = matrix.n();
    let signed: Vec<i64> = (0..n * n).map(|k| matrix.get(k / n, k % n) as i64).collect();
    let mut gens = Vec::with_capacity(n);
    for j in 0..n {
        let mut unit = vec![0i64; n];
        unit[j] = 1;
        let col = arith::solve(n, &signed, &unit).expect("invertible exponent matrix");
        let num = col
            .iter()
            .map(|q| {
                let scaled = *q * Q::from_integer(d as i64);
                debug_assert!(arith::is_integer(&scaled));
                scaled.numer().rem_euclid(d as i64) as u64
            })
            .collect();
        gens.push(num);
    }
    let elements = closure(n, &gens, d);
    debug_assert_eq!(elements.len() as u64, d);
    DiagonalGroup::from_elements(matrix.clone(), d, elements)
}

/// The exponential grading operator `g_0 = (q_1, ..., q_n)`.
pub fn g0(f: &InvertiblePolynomial) -> PhaseVector {
    let w = f.canonical_weights();
    PhaseVector::new(w.weights().to_vec(), w.degree())
}

/// The cyclic group `G_0` generated by [`g0`].
pub fn g0_group(f: &InvertiblePolynomial) -> DiagonalGroup {
    group_from_generators(f, &[g0(f)]).expect("g0 is a symmetry")
}

pub fn trivial_group(f: &InvertiblePolynomial) -> DiagonalGroup {
    group_from_generators(f, &[]).expect("empty generating set")
}

/// The subgroup of `G^fin_f` generated by `gens`.
pub fn group_from_generators(f: &InvertiblePolynomial, gens: &[PhaseVector]) -> Result<DiagonalGroup> {
    let d = f.det();
    let mut raw = Vec::with_capacity(gens.len());
    for g in gens {
        if g.n() != f.n() {
            return Err(Error::WrongArity { expected: f.n(), found: g.n() });
        }
        if !g.is_symmetry_of(f.matrix()) {
            return Err(Error::NotASymmetry(format!("{g}")));
        }
        raw.push(g.over(d).expect("symmetries have order dividing |det E|"));
    }
    let elements = closure(f.n(), &raw, d);
    Ok(DiagonalGroup::from_elements(f.matrix().clone(), d, elements))
}

/// Krawitz's dual group `G^T ⊆ G^fin_{f^T}`: the elements `u` with
/// `uᵀ E v ∈ ℤ` for every `v ∈ G`.
pub fn dual_group(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<DiagonalGroup> {
    if g.matrix() != f.matrix() || g.modulus() != f.det() {
        return Err(Error::NotASubgroup);
    }
    let n = f.n();
    let d = f.det() as u128;
    let ev: Vec<Vec<u128>> = g
        .generators()
        .iter()
        .map(|v| {
            let v = v.over(f.det()).expect("element of G^fin");
            (0..n).map(|i| (0..n).map(|j| f.exponent(i, j) as u128 * v[j] as u128).sum()).collect()
        })
        .collect();
    let transpose = f.matrix().transpose();
    let all = gfin_of(&transpose, f.det());
    Ok(all.filtered(|u| {
        ev.iter().all(|ev| u.iter().zip(ev).map(|(&a, &b)| a as u128 * b).sum::<u128>() % (d * d) == 0)
    }))
}

/// `j_G`: elements of age one fixing only the origin.
pub fn junior_count(g: &DiagonalGroup) -> u64 {
    let m = g.modulus();
    g.raw_elements().iter().filter(|e| e.iter().all(|&a| a != 0) && e.iter().sum::<u64>() == m).count() as u64
}

/// The subgroup of elements whose `i`-th phase vanishes.
pub fn subgroup_fixing_coordinate(g: &DiagonalGroup, i: usize) -> DiagonalGroup {
    g.filtered(|e| e[i] == 0)
}

pub fn is_sl_subgroup(g: &DiagonalGroup) -> bool {
    g.generators().iter().all(PhaseVector::in_sl)
}

pub fn contains_g0(f: &InvertiblePolynomial, g: &DiagonalGroup) -> bool {
    g.matrix() == f.matrix() && g.contains(&g0(f))
}

/// All groups `G` with `G_0 ⊆ G ⊆ G^fin_f`, ordered by order and then by
/// element list.
pub fn intermediate_groups(f: &InvertiblePolynomial) -> Vec<DiagonalGroup> {
    let d = f.det();
    let full = gfin(f);
    let bottom = g0_group(f);
    let start: BTreeSet<Vec<u64>> = bottom.raw_elements().iter().cloned().collect();
    // one representative per coset of G_0
    let mut reps: Vec<Vec<u64>> = Vec::new();
    let mut covered: BTreeSet<Vec<u64>> = BTreeSet::new();
    for e in full.raw_elements() {
        if covered.contains(e) {
            continue;
        }
        for h in &start {
            covered.insert(add_mod(e, h, d));
        }
        reps.push(e.clone());
    }
    let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.iter().cloned().collect());
    queue.push_back(start);
    while let Some(h) = queue.pop_front() {
        for r in &reps {
            if h.contains(r) {
                continue;
            }
            let bigger = extend(&h, r, d);
            let key: Vec<Vec<u64>> = bigger.iter().cloned().collect();
            if seen.insert(key) {
                queue.push_back(bigger);
            }
        }
    }
    let mut groups: Vec<DiagonalGroup> = seen
        .into_iter()
        .map(|els| DiagonalGroup::from_elements(f.matrix().clone(), d, els.into_iter().collect()))
        .collect();
    groups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    groups
}

/// Resolves a textual group description relative to `f`:
///
/// * `G0`, `Gfin`, `1` (trivial group);
/// * `index:k`, the unique `G ⊇ G_0` with `|G / G_0| = k`;
/// * generators `1/r(a,b,c)` separated by `;`.
pub fn parse_group(f: &InvertiblePolynomial, spec: &str) -> Result<DiagonalGroup> {
    let spec = spec.trim();
    match spec {
        "G0" | "g0" => return Ok(g0_group(f)),
        "Gfin" | "gfin" => return Ok(gfin(f)),
        "1" | "{1}" | "trivial" => return Ok(trivial_group(f)),
        _ => {}
    }
    if let Some(k) = spec.strip_prefix("index:") {
        let k: u64 = k.trim().parse().map_err(|_| Error::Syntax { pos: 6, msg: String::from("bad index") })?;
        let base = g0_group(f).order();
        let hits: Vec<DiagonalGroup> =
            intermediate_groups(f).into_iter().filter(|g| g.order() == base * k).collect();
        return match hits.len() {
            1 => Ok(hits.into_iter().next().expect("one group")),
            0 => Err(Error::NoSuchGroup(format!("no group of index {k} over G0"))),
            _ => Err(Error::NoSuchGroup(format!("{} groups of index {k} over G0", hits.len()))),
        };
    }
    let gens = spec
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<PhaseVector>>>()?;
    group_from_generators(f, &gens)
}
