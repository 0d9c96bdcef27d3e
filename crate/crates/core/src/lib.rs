//! Exact-arithmetic workbench for weak crossed products, coproducts and
//! biproducts of finite-dimensional vector spaces.
//!
//! Morphisms are exact matrices over ℚ or 𝔽_p between tensor-structured
//! objects ([`tensor`]). On top of that sit monoid/comonoid records
//! ([`structures`]), weak crossed products ([`wcp`]) and coproducts
//! ([`wcc`]), the equivalence translations between isomorphisms, transfer
//! pairs and gauge pairs ([`equivalence`]), biproducts ([`biproduct`]) and a
//! library of verified instances ([`fixtures`]).
//!
//! Checkers never fail on a false identity: they return a [`CheckReport`]
//! whose failed entries carry both sides of the equation.

/// `comp![g, f, …]` is `g∘f∘…`.
macro_rules! comp {
    ($($m:expr),+ $(,)?) => {
        $crate::tensor::compose_all(&[$(&$m),+])
    };
}

/// `tens![f, g, …]` is `f⊗g⊗…`.
macro_rules! tens {
    ($($m:expr),+ $(,)?) => {
        $crate::tensor::tensor_all(&[$(&$m),+])
    };
}

pub mod biproduct;
pub mod equivalence;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod report;
pub mod structures;
pub mod tensor;
pub mod wcc;
pub mod wcp;

pub use error::{Result, WcpError};
pub use field::{Field, Scalar};
pub use report::{CheckEntry, CheckReport, Failure, Role};
pub use tensor::{compose_all, tensor_all, Factor, Mor, Obj, SplitResult};
