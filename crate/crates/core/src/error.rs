use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{monomials} monomials in {variables} variables; an invertible polynomial needs as many monomials as variables")]
    NotSquare { monomials: usize, variables: usize },
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("expected {expected} variables, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("phase vector {0} is not a diagonal symmetry of the polynomial")]
    NotASymmetry(String),
    #[error("group is not a subgroup of the maximal diagonal symmetry group")]
    NotASubgroup,
    #[error("group does not contain the exponential grading operator")]
    NotContainingG0,
    #[error("group is not contained in SL")]
    NotSL,
    #[error("group does not preserve the cusp monomials with exponents {0}")]
    NotSymmetryOfCusp(String),
    #[error("non-integral Dolgachev number {0}")]
    NonIntegralDolgachev(String),
    #[error("non-integral Gabrielov number {0}")]
    NonIntegralGamma(String),
    #[error("weight system is not reduced")]
    NotReduced,
    #[error("polynomial is not a Brieskorn-Pham (Fermat) sum")]
    NotBrieskornPham,
    #[error("Poincare series is not graded: |Gfin/G| = {0} does not divide all weights")]
    NotGraded(u64),
    #[error("cyclotomic product is not a polynomial")]
    NotPolynomial,
    #[error("non-integral trace {0}")]
    NonIntegralTrace(String),
    #[error("Moebius inversion inconsistent: {0}")]
    MoebiusInconsistent(String),
    #[error("no subgroup with the requested property: {0}")]
    NoSuchGroup(String),
    #[error("arithmetic overflow")]
    Overflow,
}
