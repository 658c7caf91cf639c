//! Exact arithmetic in skew polynomial rings F[x; σ, δ] over division rings,
//! with Sylvester matrices, Dieudonné determinants, resultants, derivative
//! polynomials and root multiplicities.

pub mod deriv;
pub mod dlinalg;
pub mod error;
pub mod extend;
pub mod parse;
pub mod resultant;
pub mod rings;
pub mod skewpoly;

pub use dlinalg::{DDetValue, DMatrix};
pub use error::{Error, Result};
pub use resultant::Side;
pub use rings::{make_ctx, make_ctx_seeded, DeltaSpec, Elem, RingCtx, RingKind, SigmaSpec};
pub use skewpoly::SkewPoly;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/skew_polynomials.md")]
    mod skew_polynomials {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/determinants.md")]
    mod determinants {}
    #[doc = include_str!("../../../book/src/resultants.md")]
    mod resultants {}
    #[doc = include_str!("../../../book/src/derivatives.md")]
    mod derivatives {}
    #[doc = include_str!("../../../book/src/extensions.md")]
    mod extensions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
