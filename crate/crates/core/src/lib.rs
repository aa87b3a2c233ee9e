//! Exact computations with monomial ideals.
//!
//! The crate is organized around [`MonomialIdeal`], a monomial ideal kept in
//! canonical form (its minimal generating set, canonically sorted). On top of
//! it sit
//!
//! - [`polymatroid`]: exchange-property predicates, Veronese-type ideals and
//!   componentwise variants,
//! - [`resolution`]: exact graded Betti numbers via upper Koszul simplicial
//!   complexes, linear resolutions and componentwise linearity,
//! - [`quotients`]: linear-quotients certificates (checking, searching, the
//!   reverse-lexicographic order and explicit Veronese extensions),
//! - [`primes`]: irreducible decompositions and associated primes,
//! - [`lab`]: harnesses that check the characterizations of polymatroidal
//!   ideals on concrete ideals and scan ideal spaces for counterexamples.
//!
//! ```
//! use polymat::{MonomialIdeal, VarSubset};
//!
//! let i = MonomialIdeal::parse("x1*x2*x3, x2*x3*x4, x3*x5*x6", 6).unwrap();
//! let ones = VarSubset::from_one_based(&[4], 6).unwrap();
//! assert_eq!(i.localize(&ones).unwrap().to_string(), "x2*x3, x3*x5*x6");
//! ```

pub mod error;
pub mod ideal;
pub mod lab;
pub mod linalg;
pub mod monomial;
pub mod polymatroid;
pub mod primes;
pub mod quotients;
pub mod resolution;

pub use error::{Error, Limits, Result};
pub use ideal::{CombineOp, MonomialIdeal};
pub use linalg::Characteristic;
pub use monomial::{Monomial, VarSubset};
