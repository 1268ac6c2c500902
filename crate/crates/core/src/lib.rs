//! Generalized deformed oscillator algebra `W^γ_{α,β}(q)`:
//!
//! ```text
//! a a⁺ − q^γ a⁺ a = q^{αN+β},   [N, a] = −a,   [N, a⁺] = a⁺
//! ```
//!
//! The crate computes the generalized basic numbers `F^γ_{α,β}(n;q)`, classifies
//! the irreducible Hermitian representations with simple `N`-spectrum,
//! builds truncated ladder matrices for every representation family, checks
//! the defining relations on them, and verifies the Hopf structure of the
//! two-relation (restricted) algebras on truncated tensor products.
//!
//! - [`qexpr`]: exact sums of rational powers of `q`
//! - [`qnum`]: the basic number, its factorial and named specializations
//! - [`algebra`]: parameters, presets, central element, selector, two-relation
//!   algebras, dressing of the undeformed oscillator
//! - [`repcls`]: the classification engine
//! - [`repmat`]: truncated matrix realizations and relation residuals
//! - [`hopf`]: coproduct, counit and antipode constants and their verification
//!
//! Everything here is `no_std` (with `alloc`) and free of IO; file formats and
//! the command line live in the companion `gdo` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod hopf;
pub mod matrix;
pub mod qexpr;
pub mod qnum;
pub mod repcls;
pub mod repmat;
mod report;

pub use algebra::{AlgebraParams, AlgebraPreset, ExactParams, ParamError};
pub use qexpr::{QExpr, Rational};
pub use qnum::Sign;
pub use report::VerificationReport;
