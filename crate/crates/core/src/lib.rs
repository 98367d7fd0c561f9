//! Exact-integer engine for tilting decompositions of tensor powers of the
//! 2-dimensional module over quantum sl2, in every parameter regime:
//! semisimple, characteristic-zero root of unity, characteristic p with
//! q = 1, and mixed (root of unity in characteristic p).
//!
//! The layers, bottom to top:
//!
//! - [`grothendieck`]: arithmetic in the Grothendieck group — Weyl-basis
//!   vectors, Clebsch-Gordan products, symmetric Laurent characters,
//!   Frobenius-stretched products, change of basis with tensor powers.
//! - [`regime`]: the parameter-case type ([`Regime`]) shared by everything.
//! - [`tilting`]: per-regime Weyl-factor content of indecomposable tilting
//!   modules (the lower-unitriangular matrix `c`) and its inverse `d`.
//! - [`tensor`]: multiplicity grids `(V^{\otimes n} : T(m))` by two
//!   independent algorithms (column recurrences; linear algebra through
//!   `d`), plus fusion-category grids.
//! - [`algebra`]: dimensions of cell and simple modules for Temperley-Lieb
//!   algebras, Jones quotients, endomorphism algebras of tensor powers of a
//!   tilting module, and the BMW specialization.
//!
//! All coefficients are signed arbitrary-precision integers; every
//! computation is exact. All values are immutable once built and safe to
//! share across threads ([`tilting::TiltingTable`] synchronizes its memo
//! internally).

pub mod algebra;
pub mod error;
pub mod grothendieck;
pub mod regime;
pub mod tensor;
pub mod tilting;

pub use algebra::AlgebraDimReport;
pub use error::Error;
pub use grothendieck::{LaurentCharacter, WeylVector};
pub use regime::Regime;
pub use tensor::{GridKind, MultiplicityGrid};
pub use tilting::TiltingTable;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
