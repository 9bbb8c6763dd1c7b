//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by parameter algebra, special-function kernels, measure
/// construction, quadrature and pole extraction.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// alpha1 = 0: the Riccati equation is algebraic and CHGF parameters are undefined.
    #[error("algebraic class (alpha1 = 0): CHGF parameters undefined")]
    AlgebraicClass,
    /// alpha3 = 0: a = 0, handled by the exponential-integral (factorial) path.
    #[error("degenerate a = 0 (alpha3 = 0): factorial class, no CHGF route")]
    DegenerateA,
    /// Scale factor t = 0 is not invertible.
    #[error("zero scale factor")]
    ZeroScale,
    /// The Kummer symmetry needs alpha3 != 0.
    #[error("Kummer partner undefined for alpha3 = 0")]
    ZeroAlpha3,
    /// u0 = 1/(alpha1+alpha2) is infinite; Riccati coefficients undefined.
    #[error("alpha1 + alpha2 = 0: Riccati coefficients undefined (u0 infinite)")]
    InfiniteU0,
    /// Gamma or digamma evaluated at a nonpositive integer.
    #[error("gamma/digamma pole at nonpositive integer argument {0}")]
    PoleArgument(f64),
    /// Kummer M(a,b,x) with b a nonpositive integer.
    #[error("Kummer M undefined: b = {0} is a nonpositive integer")]
    BNonpositiveInteger(f64),
    /// a is a negative integer: U is a polynomial, routed to the Laguerre paths.
    #[error("polynomial case (a in -N): use the Laguerre path")]
    PolynomialCase,
    /// Complex argument on the branch cut (-inf, 0].
    #[error("argument on the branch cut (-inf, 0]")]
    OnBranchCut,
    /// Derived-sequence transform applied to the wrong base sequence.
    #[error("derived transform requires base sequence {expected}")]
    WrongBaseSequence { expected: &'static str },
    /// Bessel-class measure parameter outside [-3/2, 3/2].
    #[error("nu = {0} outside the regular Bessel range [-3/2, 3/2]")]
    OutOfRegularRange(f64),
    /// Laguerre comb with non-real roots (alpha <= -1).
    #[error("Laguerre roots not all real positive (alpha <= -1): no delta comb")]
    ComplexRoots,
    /// Asymptotic Gamma factors blow up (a or a-b in -N).
    #[error("polynomial-degenerate asymptote: a in -N or a-b in -N")]
    PolynomialDegenerate,
    /// x^(n-1) * density not integrable at the origin.
    #[error("moment integrand not integrable at the origin (n = {n})")]
    NonIntegrableOrigin { n: u32 },
    /// Classification demands cut-plane poles but none were supplied.
    #[error("sequence has cut-plane poles; supply a PoleSet")]
    MissingPoles,
    /// Prony regression system numerically singular.
    #[error("Prony regression ill-conditioned (estimate {0:.3e})")]
    IllConditioned(f64),
    /// Post-fit residual too large: likely wrong pole count.
    #[error("Prony fit residual {residual:.3e} exceeds tolerance: wrong zero count?")]
    CountMismatch { residual: f64 },
    /// Newton iteration did not converge.
    #[error("Newton polish did not converge within {0} iterations")]
    NoConvergence(usize),
    /// Newton iterate landed on the branch cut: misclassified zero.
    #[error("Newton polish converged onto the branch cut near z = {re}")]
    ConvergedToCut { re: f64 },
    /// Catch-all for invalid parameter combinations.
    #[error("invalid parameters: {0}")]
    InvalidParams(&'static str),
}

/// Machine-readable error code, stable across releases (used by the CLI).
impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::AlgebraicClass => "algebraic-class",
            Error::DegenerateA => "degenerate-a",
            Error::ZeroScale => "zero-scale",
            Error::ZeroAlpha3 => "zero-alpha3",
            Error::InfiniteU0 => "infinite-u0",
            Error::PoleArgument(_) => "pole-argument",
            Error::BNonpositiveInteger(_) => "b-nonpositive-integer",
            Error::PolynomialCase => "polynomial-case",
            Error::OnBranchCut => "on-branch-cut",
            Error::WrongBaseSequence { .. } => "wrong-base-sequence",
            Error::OutOfRegularRange(_) => "out-of-regular-range",
            Error::ComplexRoots => "complex-roots",
            Error::PolynomialDegenerate => "polynomial-degenerate",
            Error::NonIntegrableOrigin { .. } => "non-integrable-origin",
            Error::MissingPoles => "missing-poles",
            Error::IllConditioned(_) => "ill-conditioned",
            Error::CountMismatch { .. } => "count-mismatch",
            Error::NoConvergence(_) => "no-convergence",
            Error::ConvergedToCut { .. } => "converged-to-cut",
            Error::InvalidParams(_) => "invalid-params",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
