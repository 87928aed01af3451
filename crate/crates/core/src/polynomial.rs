//! Invertible polynomials: exponent matrices, text parsing and formatting,
//! Berglund–Hübsch transposition and the invertibility diagnostics.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::{self, Q};
use crate::atoms::{decompose_atoms, AtomicPart};
use crate::weights::WeightSystem;
use crate::{Error, Result};

// Inputs beyond these sizes would overflow the fixed-width exact arithmetic.
const MAX_EXPONENT: u32 = 100_000;
const MAX_VARIABLES: usize = 16;

/// A square matrix of non-negative exponents; row `i` is the exponent vector of
/// monomial `i`. No invariants beyond squareness.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl ExponentMatrix {
    pub fn new(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if let Some(row) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare { monomials: n, variables: row.len() });
        }
        Ok(Self { n, entries: rows.iter().flatten().copied().collect() })
    }

    pub fn from_rows<const N: usize>(rows: [[u32; N]; N]) -> Self {
        Self { n: N, entries: rows.iter().flatten().copied().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows().map(<[u32]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        Self { n, entries }
    }

    pub fn determinant(&self) -> Result<i64> {
        let signed: Vec<i64> = self.entries.iter().map(|&e| e as i64).collect();
        arith::determinant(self.n, &signed)
    }

    /// Rational solution of `E q = (1, ..., 1)`.
    pub fn unit_solution(&self) -> Option<Vec<Q>> {
        let signed: Vec<i64> = self.entries.iter().map(|&e| e as i64).collect();
        let ones = alloc::vec![1i64; self.n];
        arith::solve(self.n, &signed, &ones)
    }
}

/// Outcome of [`validate_invertible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Pass,
    Fail(String),
}

impl Validation {
    pub fn passed(&self) -> bool {
        matches!(self, Validation::Pass)
    }
}

/// Checks the conditions under which an exponent matrix defines an invertible
/// polynomial: non-zero determinant, positive canonical weights, and an atomic
/// decomposition of both the matrix and its transpose.
pub fn validate_invertible(matrix: &ExponentMatrix) -> Validation {
    match check_invertible(matrix) {
        Ok(_) => Validation::Pass,
        Err(Error::NotInvertible(reason)) => Validation::Fail(reason),
        Err(e) => Validation::Fail(e.to_string()),
    }
}

fn check_invertible(matrix: &ExponentMatrix) -> Result<(u64, WeightSystem, Vec<AtomicPart>)> {
    let n = matrix.n();
    if n == 0 {
        return Err(Error::NotInvertible("no variables".into()));
    }
    if n > MAX_VARIABLES || matrix.entries.iter().any(|&e| e > MAX_EXPONENT) {
        return Err(Error::Overflow);
    }
    if let Some(j) = (0..n).find(|&j| (0..n).all(|i| matrix.get(i, j) == 0)) {
        return Err(Error::NotInvertible(format!("variable {} does not occur", j + 1)));
    }
    let det = matrix.determinant()?;
    if det == 0 {
        return Err(Error::NotInvertible("exponent matrix is singular".into()));
    }
    let d = det.unsigned_abs();
    let q = matrix.unit_solution().ok_or_else(|| Error::NotInvertible("exponent matrix is singular".into()))?;
    let mut w = Vec::with_capacity(n);
    for qi in &q {
        let wi = *qi * Q::from_integer(d as i64);
        if !arith::is_integer(&wi) || *wi.numer() <= 0 {
            return Err(Error::NotInvertible(format!("canonical weight {wi} is not a positive integer")));
        }
        w.push(*wi.numer() as u64);
    }
    let atoms = decompose_atoms(matrix)?;
    decompose_atoms(&matrix.transpose())
        .map_err(|e| Error::NotInvertible(format!("transpose: {e}")))?;
    Ok((d, WeightSystem::new(w, d), atoms))
}

/// An invertible polynomial `f = Σ a_i ∏_j x_j^{E_ij}`.
///
/// Only valid polynomials can be constructed; the canonical weight system and
/// the atomic decomposition are computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertiblePolynomial {
    matrix: ExponentMatrix,
    coeffs: Vec<i64>,
    names: Vec<String>,
    det: u64,
    weights: WeightSystem,
    atoms: Vec<AtomicPart>,
}

impl InvertiblePolynomial {
    pub fn new(matrix: ExponentMatrix, coeffs: Vec<i64>, names: Vec<String>) -> Result<Self> {
        let n = matrix.n();
        assert_eq!(coeffs.len(), n, "one coefficient per monomial");
        assert_eq!(names.len(), n, "one name per variable");
        let (det, weights, atoms) = check_invertible(&matrix)?;
        Ok(Self { matrix, coeffs, names, det, weights, atoms })
    }

    /// Unit coefficients and the default variable names.
    pub fn from_matrix(matrix: ExponentMatrix) -> Result<Self> {
        let n = matrix.n();
        Self::new(matrix, alloc::vec![1; n], default_names(n))
    }

    pub fn from_rows<const N: usize>(rows: [[u32; N]; N]) -> Result<Self> {
        Self::from_matrix(ExponentMatrix::from_rows(rows))
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &ExponentMatrix {
        &self.matrix
    }

    pub fn exponent(&self, monomial: usize, variable: usize) -> u32 {
        self.matrix.get(monomial, variable)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn has_unit_coefficients(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 1)
    }

    pub fn variable_names(&self) -> &[String] {
        &self.names
    }

    /// `|det E|`, the order of the maximal diagonal symmetry group.
    pub fn det(&self) -> u64 {
        self.det
    }

    pub fn canonical_weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn atoms(&self) -> &[AtomicPart] {
        &self.atoms
    }

    /// The Berglund–Hübsch transpose, with exponent matrix `Eᵀ` and the same
    /// coefficients and variable names.
    pub fn transpose(&self) -> Self {
        Self::new(self.matrix.transpose(), self.coeffs.clone(), self.names.clone())
            .expect("transpose of an invertible polynomial is invertible")
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for InvertiblePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.matrix.rows().enumerate() {
            let c = self.coeffs[i];
            if i > 0 && c > 0 {
                f.write_str("+")?;
            }
            match c {
                1 => {}
                -1 => f.write_str("-")?,
                c => write!(f, "{c}*")?,
            }
            let mut first = true;
            for (j, &e) in row.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&self.names[j])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for InvertiblePolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

/// Parses a sum of monomials such as `x^2+x*y^3+y*z^5` or `x1^3 + x2^3 + 2 x3^3`.
///
/// The variables are those occurring in the text, ordered `x, y, z, ...`
/// and by index for `x1, x2, ...`. Monomials become rows in textual order.
pub fn parse_polynomial(text: &str) -> Result<InvertiblePolynomial> {
    let terms = parse_terms(text)?;
    let mut names: Vec<String> = Vec::new();
    for t in &terms {
        for (name, _) in &t.factors {
            if !names.contains(name) {
                names.push(name.clone());
            }
        }
    }
    names.sort_by_key(|n| variable_sort_key(n));
    build(terms, names)
}

/// Like [`parse_polynomial`] with an explicit, ordered list of variables.
pub fn parse_with_variables(text: &str, variables: &[&str]) -> Result<InvertiblePolynomial> {
    let terms = parse_terms(text)?;
    let names: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
    for t in &terms {
        for (name, _) in &t.factors {
            if !names.contains(name) {
                return Err(Error::Syntax { pos: t.pos, msg: format!("undeclared variable {name}") });
            }
        }
    }
    build(terms, names)
}

fn build(terms: Vec<Term>, names: Vec<String>) -> Result<InvertiblePolynomial> {
    let n = names.len();
    if terms.len() != n {
        return Err(Error::NotSquare { monomials: terms.len(), variables: n });
    }
    let mut rows = alloc::vec![alloc::vec![0u32; n]; n];
    let mut coeffs = Vec::with_capacity(n);
    for (i, t) in terms.into_iter().enumerate() {
        for (name, e) in t.factors {
            let j = names.iter().position(|v| *v == name).expect("variable collected");
            rows[i][j] = rows[i][j].checked_add(e).ok_or(Error::Overflow)?;
        }
        coeffs.push(t.coeff);
    }
    InvertiblePolynomial::new(ExponentMatrix::new(&rows)?, coeffs, names)
}

fn variable_sort_key(name: &str) -> (u32, u64, String) {
    let mut chars = name.chars();
    let letter = chars.next().unwrap_or('x');
    let rank = match letter {
        'x' => 0,
        'y' => 1,
        'z' => 2,
        'w' => 3,
        c => 10 + c as u32,
    };
    let index = chars.as_str().parse::<u64>().unwrap_or(0);
    (rank, index, name.to_string())
}

struct Term {
    pos: usize,
    coeff: i64,
    factors: Vec<(String, u32)>,
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits = core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits.parse().or_else(|_| self.err("number too large"))
    }

    fn identifier(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.bytes.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            _ => return self.err("expected a variable"),
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        Ok(String::from(core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii")))
    }
}

fn parse_terms(text: &str) -> Result<Vec<Term>> {
    let mut lx = Lexer { bytes: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut sign = match lx.peek() {
        Some(b'-') => {
            lx.pos += 1;
            -1
        }
        Some(b'+') => {
            lx.pos += 1;
            1
        }
        Some(_) => 1,
        None => return lx.err("empty polynomial"),
    };
    loop {
        terms.push(parse_term(&mut lx, sign)?);
        match lx.peek() {
            None => break,
            Some(b'+') => sign = 1,
            Some(b'-') => sign = -1,
            Some(c) => return lx.err(format!("unexpected character '{}'", c as char)),
        }
        lx.pos += 1;
    }
    Ok(terms)
}

fn parse_term(lx: &mut Lexer<'_>, sign: i64) -> Result<Term> {
    let pos = lx.pos;
    let mut coeff = sign;
    if matches!(lx.peek(), Some(c) if c.is_ascii_digit()) {
        let c = lx.number()?;
        if c == 0 {
            return lx.err("zero coefficient");
        }
        coeff *= i64::try_from(c).or_else(|_| lx.err("coefficient too large"))?;
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
        }
    }
    let mut factors = Vec::new();
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ if factors.is_empty() => return lx.err("term has no variables"),
            _ => break,
        }
        let name = lx.identifier()?;
        let mut exp = 1u64;
        if lx.peek() == Some(b'^') {
            lx.pos += 1;
            exp = lx.number()?;
            if exp == 0 {
                return lx.err("zero exponent");
            }
        }
        let exp = u32::try_from(exp).ok().filter(|&e| e <= MAX_EXPONENT).ok_or(Error::Overflow)?;
        factors.push((name, exp));
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
            if !matches!(lx.peek(), Some(c) if c.is_ascii_alphabetic()) {
                return lx.err("expected a variable after '*'");
            }
        }
    }
    Ok(Term { pos, coeff, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(f: &InvertiblePolynomial) -> Vec<Vec<u32>> {
        f.matrix().to_rows()
    }

    #[test]
    fn parses_chain_in_textual_order() {
        let f = parse_polynomial("x^2+x*y^3+y*z^5").unwrap();
        assert_eq!(rows(&f), [[2, 0, 0], [1, 3, 0], [0, 1, 5]]);
        assert_eq!(f.det(), 30);
    }

    #[test]
    fn parses_fermat_and_optional_star() {
        let f = parse_polynomial("x^2 + y^3 + z^4").unwrap();
        assert_eq!(rows(&f), [[2, 0, 0], [0, 3, 0], [0, 0, 4]]);
        let g = parse_polynomial("x^2+xy^3+yz^5").unwrap();
        assert_eq!(rows(&g), [[2, 0, 0], [1, 3, 0], [0, 1, 5]]);
    }

    #[test]
    fn records_coefficients_verbatim() {
        let f = parse_polynomial("3x^2 - y^3 + 2*z^5").unwrap();
        assert_eq!(f.coefficients(), &[3, -1, 2]);
        assert!(!f.has_unit_coefficients());
        assert_eq!(f.to_string(), "3*x^2-y^3+2*z^5");
    }

    #[test]
    fn indexed_variables_sort_numerically() {
        let f = parse_polynomial("x10^2+x2^3+x1^5+x3^2+x4^2+x5^2+x6^2+x7^2+x8^2+x9^2").unwrap();
        assert_eq!(f.n(), 10);
        assert_eq!(f.variable_names()[0], "x1");
        assert_eq!(f.variable_names()[9], "x10");
        assert_eq!(f.exponent(0, 9), 2);
    }

    #[test]
    fn rejects_wrong_monomial_count() {
        let err = parse_with_variables("x^2+y^2", &["x", "y", "z"]).unwrap_err();
        assert_eq!(err, Error::NotSquare { monomials: 2, variables: 3 });
        assert!(matches!(parse_polynomial("x^2+y^3+z^4+x*y*z"), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in ["", "x^", "x^2+", "x^2++y^3", "x^2+3", "x^2+y^3+z^a", "x^2+y^3+z^0", "x^2 y^3 #"] {
            assert!(matches!(parse_polynomial(bad), Err(Error::Syntax { .. })), "{bad}");
        }
    }

    #[test]
    fn rejects_non_invertible() {
        assert!(matches!(parse_polynomial("x^2+x^2*y+z^2"), Err(Error::NotInvertible(_))));
        assert!(matches!(parse_polynomial("x*y*z+x^2+y^2"), Err(Error::NotInvertible(_))));
        assert!(matches!(parse_polynomial("x^2+y^2+z"), Err(Error::NotInvertible(_))));
        // E is invertible but the chain head has exponent 1, so the transpose is smooth
        assert!(matches!(parse_polynomial("x*y+y^2+z^2"), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn transpose_examples() {
        let f = parse_polynomial("x^3+y^2+y*z^4").unwrap();
        assert_eq!(f.transpose().to_string(), "x^3+y^2*z+z^4");
        let loop3 = parse_polynomial("x^2*y+y^3*z+z^4*x").unwrap();
        assert_eq!(rows(&loop3.transpose()), [[2, 0, 1], [1, 3, 0], [0, 1, 4]]);
        let fermat = parse_polynomial("x^2+y^3+z^7").unwrap();
        assert_eq!(fermat.transpose(), fermat);
    }

    #[test]
    fn validation_diagnostics() {
        let ok = ExponentMatrix::from_rows([[2, 0, 0], [0, 3, 0], [0, 0, 6]]);
        assert!(validate_invertible(&ok).passed());
        let three_vars = ExponentMatrix::from_rows([[1, 1, 1], [2, 0, 0], [0, 2, 0]]);
        assert!(!validate_invertible(&three_vars).passed());
        let two_loop = ExponentMatrix::from_rows([[2, 1, 0], [1, 2, 0], [0, 0, 2]]);
        assert!(validate_invertible(&two_loop).passed());
        let singular = ExponentMatrix::from_rows([[1, 1], [1, 1]]);
        assert_eq!(validate_invertible(&singular), Validation::Fail("exponent matrix is singular".into()));
    }
}
