//! Decomposition of an exponent matrix into Fermat, chain and loop parts, and
//! the five normal forms of invertible polynomials in three variables.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::polynomial::{ExponentMatrix, InvertiblePolynomial};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomKind {
    /// `x^a` with `a >= 2`.
    Fermat,
    /// `x_1^{a_1} x_2 + x_2^{a_2} x_3 + ... + x_m^{a_m}`.
    Chain,
    /// `x_1^{a_1} x_2 + ... + x_m^{a_m} x_1`.
    Loop,
}

/// One Thom–Sebastiani summand. `vars[k]` carries exponent `exps[k]` in its
/// own monomial and, for chains and loops, multiplies into `vars[k - 1]`'s
/// monomial with exponent one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AtomicPart {
    pub kind: AtomKind,
    pub vars: Vec<usize>,
    pub exps: Vec<u32>,
}

/// A monomial read as `x_owner^exp * x_target`.
#[derive(Debug, Clone, Copy)]
struct Reading {
    owner: usize,
    exp: u32,
    target: Option<usize>,
}

fn readings(row: &[u32]) -> Result<Vec<Reading>> {
    let support: Vec<usize> = (0..row.len()).filter(|&j| row[j] > 0).collect();
    match *support.as_slice() {
        [j] => Ok(vec![Reading { owner: j, exp: row[j], target: None }]),
        [j, k] => {
            let mut out = Vec::new();
            if row[k] == 1 {
                out.push(Reading { owner: j, exp: row[j], target: Some(k) });
            }
            if row[j] == 1 {
                out.push(Reading { owner: k, exp: row[k], target: Some(j) });
            }
            if out.is_empty() {
                return Err(Error::NotInvertible(format!("monomial {row:?} has two variables with exponent >= 2")));
            }
            Ok(out)
        }
        [] => Err(Error::NotInvertible("constant monomial".into())),
        _ => Err(Error::NotInvertible(format!("monomial {row:?} involves three or more variables"))),
    }
}

/// Splits the variables into Fermat, chain and loop atoms by reading each
/// monomial as `x_i^{a_i}` or `x_i^{a_i} x_j` and walking the resulting
/// pointer graph. Atoms are returned ordered by their smallest variable.
pub fn decompose_atoms(matrix: &ExponentMatrix) -> Result<Vec<AtomicPart>> {
    let n = matrix.n();
    let options: Vec<Vec<Reading>> = matrix.rows().map(readings).collect::<Result<_>>()?;
    let mut chosen: Vec<Option<Reading>> = vec![None; n];
    let mut owned = vec![false; n];
    let mut pointed = vec![false; n];
    if !assign(0, &options, &mut chosen, &mut owned, &mut pointed) {
        return Err(Error::NotInvertible("no Fermat/chain/loop decomposition".into()));
    }

    let mut next = vec![None; n];
    let mut exp = vec![0; n];
    for r in chosen.iter().flatten() {
        next[r.owner] = r.target;
        exp[r.owner] = r.exp;
    }
    let mut seen = vec![false; n];
    let mut atoms = Vec::new();
    // paths start at variables nobody points to
    for start in 0..n {
        if pointed[start] {
            continue;
        }
        let mut vars = Vec::new();
        let mut cur = Some(start);
        while let Some(v) = cur {
            seen[v] = true;
            vars.push(v);
            cur = next[v];
        }
        let exps = vars.iter().map(|&v| exp[v]).collect();
        let kind = if vars.len() == 1 { AtomKind::Fermat } else { AtomKind::Chain };
        atoms.push(AtomicPart { kind, vars, exps });
    }
    // whatever remains lies on cycles
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut vars = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            vars.push(v);
            v = next[v].expect("cycle");
        }
        let exps = vars.iter().map(|&v| exp[v]).collect();
        atoms.push(AtomicPart { kind: AtomKind::Loop, vars, exps });
    }
    atoms.sort_by_key(|a| a.vars.iter().copied().min());
    Ok(atoms)
}

fn assign(
    row: usize,
    options: &[Vec<Reading>],
    chosen: &mut [Option<Reading>],
    owned: &mut [bool],
    pointed: &mut [bool],
) -> bool {
    if row == options.len() {
        return true;
    }
    for r in &options[row] {
        // a pure power ends a chain and must be singular at the origin
        if r.target.is_none() && r.exp < 2 {
            continue;
        }
        if owned[r.owner] || r.target.is_some_and(|t| pointed[t]) {
            continue;
        }
        owned[r.owner] = true;
        if let Some(t) = r.target {
            pointed[t] = true;
        }
        chosen[row] = Some(*r);
        if assign(row + 1, options, chosen, owned, pointed) {
            return true;
        }
        owned[r.owner] = false;
        if let Some(t) = r.target {
            pointed[t] = false;
        }
        chosen[row] = None;
    }
    false
}

/// The five types of invertible polynomials in three variables, with the
/// parameters of their normal forms:
///
/// | type | normal form |
/// |------|-------------|
/// | I    | `x^p1 + y^p2 + z^p3` |
/// | II   | `x^p1 + y^p2 + y z^(p3/p2)` |
/// | III  | `x^p1 + z y^(q2+1) + y z^(q3+1)` |
/// | IV   | `x^p1 + x y^(p2/p1) + y z^(p3/p2)` |
/// | V    | `x^q1 y + y^q2 z + z^q3 x` |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvertibleType {
    I { p: [u64; 3] },
    II { p1: u64, p2: u64, p3: u64 },
    III { p1: u64, q2: u64, q3: u64 },
    IV { p1: u64, p2: u64, p3: u64 },
    V { q: [u64; 3] },
}

impl InvertibleType {
    pub fn roman(&self) -> &'static str {
        match self {
            InvertibleType::I { .. } => "I",
            InvertibleType::II { .. } => "II",
            InvertibleType::III { .. } => "III",
            InvertibleType::IV { .. } => "IV",
            InvertibleType::V { .. } => "V",
        }
    }

    /// Exponent matrix of the normal form.
    pub fn normal_form(&self) -> ExponentMatrix {
        let c = |v: u64| v as u32;
        let rows = match *self {
            InvertibleType::I { p } => [[c(p[0]), 0, 0], [0, c(p[1]), 0], [0, 0, c(p[2])]],
            InvertibleType::II { p1, p2, p3 } => [[c(p1), 0, 0], [0, c(p2), 0], [0, 1, c(p3 / p2)]],
            InvertibleType::III { p1, q2, q3 } => [[c(p1), 0, 0], [0, c(q2 + 1), 1], [0, 1, c(q3 + 1)]],
            InvertibleType::IV { p1, p2, p3 } => [[c(p1), 0, 0], [1, c(p2 / p1), 0], [0, 1, c(p3 / p2)]],
            InvertibleType::V { q } => [[c(q[0]), 1, 0], [0, c(q[1]), 1], [1, 0, c(q[2])]],
        };
        ExponentMatrix::from_rows(rows)
    }

    /// Reads a normal form off monomials given in normal-form coordinates.
    fn recognise(rows: &[[u32; 3]; 3]) -> Option<Self> {
        let support = |r: &[u32; 3]| [r[0] > 0, r[1] > 0, r[2] > 0];
        let find = |pred: &dyn Fn(&[u32; 3]) -> bool| -> Option<[u32; 3]> {
            let mut hits = rows.iter().filter(|r| pred(r));
            let hit = *hits.next()?;
            hits.next().is_none().then_some(hit)
        };
        let only = |k: usize| {
            move |r: &[u32; 3]| {
                let s = support(r);
                (0..3).all(|j| s[j] == (j == k)) && r[k] >= 2
            }
        };
        // x_a^e x_b with the given exponent floor on x_a
        let pair = |a: usize, b: usize, floor: u32| {
            move |r: &[u32; 3]| {
                let s = support(r);
                let other = 3 - a - b;
                s[a] && s[b] && !s[other] && r[b] == 1 && r[a] >= floor
            }
        };
        let u = |v: u32| v as u64;
        if let (Some(a), Some(b), Some(c)) = (find(&only(0)), find(&only(1)), find(&only(2))) {
            return Some(InvertibleType::I { p: [u(a[0]), u(b[1]), u(c[2])] });
        }
        if let (Some(a), Some(b), Some(c)) = (find(&only(0)), find(&only(1)), find(&pair(2, 1, 2))) {
            let p2 = u(b[1]);
            return Some(InvertibleType::II { p1: u(a[0]), p2, p3: p2 * u(c[2]) });
        }
        if let (Some(a), Some(b), Some(c)) = (find(&only(0)), find(&pair(1, 2, 2)), find(&pair(2, 1, 2))) {
            return Some(InvertibleType::III { p1: u(a[0]), q2: u(b[1]) - 1, q3: u(c[2]) - 1 });
        }
        if let (Some(a), Some(b), Some(c)) = (find(&only(0)), find(&pair(1, 0, 1)), find(&pair(2, 1, 2))) {
            let p1 = u(a[0]);
            let p2 = p1 * u(b[1]);
            return Some(InvertibleType::IV { p1, p2, p3: p2 * u(c[2]) });
        }
        if let (Some(a), Some(b), Some(c)) = (find(&pair(0, 1, 1)), find(&pair(1, 2, 1)), find(&pair(2, 0, 1))) {
            return Some(InvertibleType::V { q: [u(a[0]), u(b[1]), u(c[2])] });
        }
        None
    }
}

impl fmt::Display for InvertibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvertibleType::I { p } => write!(f, "I(p={},{},{})", p[0], p[1], p[2]),
            InvertibleType::II { p1, p2, p3 } => write!(f, "II(p={p1},{p2},{p3})"),
            InvertibleType::III { p1, q2, q3 } => write!(f, "III(p1={p1},q={q2},{q3})"),
            InvertibleType::IV { p1, p2, p3 } => write!(f, "IV(p={p1},{p2},{p3})"),
            InvertibleType::V { q } => write!(f, "V(q={},{},{})", q[0], q[1], q[2]),
        }
    }
}

/// Type, parameters, and the variable permutation to normal form.
///
/// `perm[k]` is the original index of normal-form coordinate `k`
/// (`k = 0, 1, 2` for `x, y, z`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeTag3 {
    pub kind: InvertibleType,
    pub perm: [usize; 3],
}

impl TypeTag3 {
    /// Re-indexes a normal-form-ordered triple into original variable order.
    pub fn pull_back<T: Copy + Default>(&self, normal: [T; 3]) -> [T; 3] {
        let mut out = [T::default(); 3];
        for k in 0..3 {
            out[self.perm[k]] = normal[k];
        }
        out
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Classifies a three-variable invertible polynomial. Among the variable
/// orders that put `f` in normal form the lexicographically smallest
/// permutation is returned.
pub fn classify3(f: &InvertiblePolynomial) -> Result<TypeTag3> {
    classify_matrix(f.matrix())
}

pub fn classify_matrix(m: &ExponentMatrix) -> Result<TypeTag3> {
    if m.n() != 3 {
        return Err(Error::WrongArity { expected: 3, found: m.n() });
    }
    decompose_atoms(m)?;
    for perm in PERMUTATIONS {
        let mut rows = [[0u32; 3]; 3];
        for (i, row) in m.rows().enumerate() {
            for k in 0..3 {
                rows[i][k] = row[perm[k]];
            }
        }
        if let Some(kind) = InvertibleType::recognise(&rows) {
            return Ok(TypeTag3 { kind, perm });
        }
    }
    Err(Error::NotInvertible("no normal form in three variables".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;

    fn atoms_of(text: &str) -> Vec<AtomicPart> {
        parse_polynomial(text).unwrap().atoms().to_vec()
    }

    #[test]
    fn fermat_sum() {
        let atoms = atoms_of("x^2+y^3+z^6");
        assert_eq!(atoms.len(), 3);
        assert!(atoms.iter().all(|a| a.kind == AtomKind::Fermat));
        assert_eq!(atoms.iter().map(|a| a.exps[0]).collect::<Vec<_>>(), [2, 3, 6]);
    }

    #[test]
    fn chain_walk() {
        // x^2 + x y^3 + y z^5 = z^5 y + y^3 x + x^2
        let atoms = atoms_of("x^2+x*y^3+y*z^5");
        assert_eq!(atoms, [AtomicPart { kind: AtomKind::Chain, vars: vec![2, 1, 0], exps: vec![5, 3, 2] }]);
    }

    #[test]
    fn loop_walk() {
        let atoms = atoms_of("x^3*y+y^3*z+z^3*x");
        assert_eq!(atoms, [AtomicPart { kind: AtomKind::Loop, vars: vec![0, 1, 2], exps: vec![3, 3, 3] }]);
    }

    #[test]
    fn two_loop_plus_fermat() {
        let atoms = atoms_of("x^2*y+y^2*x+z^2");
        assert_eq!(atoms[0].kind, AtomKind::Loop);
        assert_eq!(atoms[0].exps, [2, 2]);
        assert_eq!(atoms[1], AtomicPart { kind: AtomKind::Fermat, vars: vec![2], exps: vec![2] });
    }

    #[test]
    fn ambiguous_linear_monomials_resolve() {
        // x y can be read either way; only x^l + (x <- y) is consistent
        let atoms = atoms_of("x^3+x*y+y*z^2");
        assert_eq!(atoms, [AtomicPart { kind: AtomKind::Chain, vars: vec![2, 1, 0], exps: vec![2, 1, 3] }]);
        let all_ones = atoms_of("x*y+y*z+z*x");
        assert_eq!(all_ones[0].kind, AtomKind::Loop);
        assert_eq!(all_ones[0].exps, [1, 1, 1]);
    }

    #[test]
    fn rejects_three_variable_monomial() {
        let m = ExponentMatrix::from_rows([[1, 1, 1], [2, 0, 0], [0, 2, 0]]);
        assert!(matches!(decompose_atoms(&m), Err(Error::NotInvertible(_))));
        // two variables pointing at the same one
        let m = ExponentMatrix::from_rows([[2, 0, 1], [0, 2, 1], [0, 0, 3]]);
        assert!(matches!(decompose_atoms(&m), Err(Error::NotInvertible(_))));
    }

    fn tag(text: &str) -> TypeTag3 {
        classify3(&parse_polynomial(text).unwrap()).unwrap()
    }

    #[test]
    fn classify_each_type() {
        assert_eq!(tag("x^2+y^3+z^6").kind, InvertibleType::I { p: [2, 3, 6] });
        assert_eq!(tag("x^2+z*y^2+y*z^4").kind, InvertibleType::III { p1: 2, q2: 1, q3: 3 });
        assert_eq!(tag("x^4+x*y+y*z^3").kind, InvertibleType::IV { p1: 4, p2: 4, p3: 12 });
        assert_eq!(tag("x^2+x*y^3+y*z^5").kind, InvertibleType::IV { p1: 2, p2: 6, p3: 30 });
        let t = tag("x^6*y+y^3+z^2");
        assert_eq!(t.kind, InvertibleType::II { p1: 2, p2: 3, p3: 18 });
        assert_eq!(t.perm, [2, 1, 0]);
        let v = tag("x^3*y+y^3*z+z^3*x");
        assert_eq!(v.kind, InvertibleType::V { q: [3, 3, 3] });
        assert_eq!(v.perm, [0, 1, 2]);
    }

    #[test]
    fn smallest_permutation_wins() {
        // the loop part can be named (y, z) or (z, y)
        let t = tag("x^2+z*y^2+y*z^5");
        assert_eq!(t.perm, [0, 1, 2]);
        let s = tag("z^2+x*y^2+y*x^5");
        assert_eq!(s.perm, [2, 0, 1]);
        assert_eq!(s.kind, InvertibleType::III { p1: 2, q2: 4, q3: 1 });
    }

    #[test]
    fn normal_form_round_trips() {
        for text in ["x^2+y^3+z^6", "x^3+y^2+y*z^4", "x^2+z*y^3+y*z^2", "x^3+x*y^2+y*z^2", "x^2*y+y^3*z+z*x"] {
            let f = parse_polynomial(text).unwrap();
            let t = classify3(&f).unwrap();
            let nf = t.kind.normal_form();
            // permuting the original columns yields the normal form up to row order
            let mut permuted: Vec<Vec<u32>> =
                f.matrix().rows().map(|r| (0..3).map(|k| r[t.perm[k]]).collect()).collect();
            let mut expected = nf.to_rows();
            permuted.sort();
            expected.sort();
            assert_eq!(permuted, expected, "{text}");
        }
    }

    #[test]
    fn pull_back_reindexes() {
        let t = TypeTag3 { kind: InvertibleType::I { p: [2, 2, 2] }, perm: [2, 0, 1] };
        assert_eq!(t.pull_back([10, 20, 30]), [20, 30, 10]);
    }
}
