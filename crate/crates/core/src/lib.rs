//! Self-convolutive sequences S(alpha1, alpha2, alpha3): exact evaluation
//! of the recurrence in big-rational arithmetic, construction of the
//! spectral measure whose moments reproduce the sequence, numerical
//! moment quadrature with pole corrections, asymptotic estimates, and
//! extraction of complex zeros of the confluent hypergeometric U(a,b,z)
//! from moment residuals via Prony's method.

pub mod error;
pub mod exact;
pub mod measure;
pub mod moments;
pub mod params;
pub mod poles;
pub mod rational;
pub mod specfun;

pub use error::{Error, Result};
pub use exact::{ExactSequence, TridiagonalOperator};
pub use measure::{Atom, Density, SpectralMeasure};
pub use moments::{MomentQuadrature, VerificationReport};
pub use params::{ChgfParams, ClassificationReport, RiccatiParams, SequenceClass, SequenceParams};
pub use poles::PoleSet;
pub use rational::{parse_rational, Rat};
