//! Unimodular rows, Vaserstein symbols and the quadric morphisms around the
//! Hopf map, computed exactly over finitely presented Q-algebras.
//!
//! The crate is layered bottom-up:
//!
//! * [`polyring`]: rational polynomials, term orders, Buchberger with cofactor tracking
//! * [`quotient`]: presented rings `Q[x]/I` with canonical representatives
//! * [`rows`]: certified unimodular rows and elementary moves
//! * [`witt`]: alternating matrices, Pfaffians, the Vaserstein symbol
//! * [`spheres`]: the quadrics `Q_{2n-1}`, `Q_{2n}` and the maps `f`, `g`, `H`, `h`, `alpha`
//! * [`realize`]: floating-point evaluation on real points and the numeric Hopf invariant
//! * [`suite`]: the identity battery and acceptance checks shared by the CLI and tests

pub mod error;
pub mod io;
pub mod polyring;
pub mod quotient;
pub mod random;
pub mod realize;
pub mod rows;
pub mod spheres;
pub mod suite;
pub mod witt;

pub use error::{Error, Result};
