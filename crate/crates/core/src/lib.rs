//! Exact minimal free resolution data for monomial ideals.
//!
//! * [`ideal`]: minimal generators, minimal and associated primes, Alexander
//!   duality, polarization and powers.
//! * [`classify`]: complete and almost complete intersections, dominance, the
//!   six structural forms of squarefree almost complete intersections, linear
//!   quotients and Cohen–Macaulay tests.
//! * [`resolutions`]: Taylor and Scarf complexes and a homology oracle that
//!   computes multigraded Betti numbers from upper Koszul complexes.
//! * [`formulas`]: closed-form total Betti numbers and a dispatcher.
//! * [`corpus`] and [`verify`]: seeded random ideals and the invariant suite
//!   that cross-checks all of the above.

pub mod classify;
pub mod corpus;
pub mod error;
pub mod formulas;
pub mod ideal;
pub mod limits;
pub mod monomial;
pub mod resolutions;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::{MonomialIdeal, MonomialPrime, PolarizationMap};
pub use limits::Limits;
pub use monomial::{Monomial, Variables};
pub use resolutions::{BettiTable, ChainComplex, SimplicialComplex};
