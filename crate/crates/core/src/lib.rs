//! Exact symbolic toolkit for the defining ideal of the Rees algebra of a
//! monomial space curve in `A^4` whose parametrizing exponents form an
//! arithmetic progression.
//!
//! The pipeline, end to end:
//!
//! 1. [`curve`] derives the curve parameters from `(m0, d)`, builds the
//!    binomial generators of the curve ideal, and provides two independent
//!    substitution oracles used to certify every computed kernel element.
//! 2. [`rees`] constructs the presentation ring (one fiber variable per
//!    binomial generator), the seven-tier elimination order of [`order`],
//!    the relation ideal, and the explicit polynomial families.
//! 3. [`groebner`] supplies the exact-arithmetic engine: division with an
//!    always-checked invariant, Buchberger completion, basis
//!    verification with S-pair certificates, reduction to the canonical
//!    reduced basis, elimination, and ideal membership/equality.
//! 4. [`verify`] re-derives each published claim as an independent
//!    computation and reports certificates and discrepancies.
//! 5. [`smooth`] audits regularity of the blowup at the distinguished
//!    fiber prime via the Jacobian criterion, with a fraction-free rank
//!    computation cross-checked by seeded rational evaluation.
//! 6. [`report`] renders everything as versioned JSON.
//!
//! All verification arithmetic is over exact rationals; a prime-field
//! coefficient type exists for experimentation but is never used by the
//! verification paths.

pub mod curve;
pub mod field;
pub mod groebner;
pub mod order;
pub mod rees;
pub mod report;
pub mod ring;
pub mod smooth;
pub mod text;
pub mod verify;

pub use curve::{derive_params, CurveError, CurveParams};
pub use field::{Coeff, Fp, Rat};
pub use groebner::{
    buchberger, divide, ideal_membership, ideals_equal, is_groebner_basis,
    minimalize_and_reduce, Division, GroebnerError, IdealEquality, IdealPresentation, Limits,
    SPairCertificate, Strategy,
};
pub use order::{canonical_text, leading_monomial, leading_term, ComparisonTrace, OrderKind, OrderSpec};
pub use rees::{build_ambient, compute_e_b, compute_q_b, Contraction, Family, ReesContext};
pub use ring::{AlgebraError, Monomial, Polynomial, QPoly, RingContext};
pub use smooth::{smoothness_verdict, FiberPrime, JacobianReport, SmoothError, Verdict};
pub use text::{parse_polynomial, ParseError};
pub use verify::{CertificateSummary, Target, TheoremOutcome, Verifier, VerifyError};
