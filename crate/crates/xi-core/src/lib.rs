//! Exact computations with Demazure operators on the deformed reflection
//! representation of the affine Weyl group of type A2.
//!
//! Scalars live in `Z[p, p^-1]` with `z = p^2` and `q = p^-3`. The scalars
//! `Xi(a,b,i,k)` are computed three ways: by applying operators to a
//! monomial ([`words::xi_oracle`]), by recursion ([`words::xi_recursive`]),
//! and by closed formula ([`closed_formula::xi_formula`]).

pub mod closed_formula;
pub mod error;
pub mod exec;
pub mod laurent;
pub mod magic;
pub mod polyring;
pub mod report;
pub mod rou;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use laurent::Laurent;
pub use polyring::{Node, TriPoly};
