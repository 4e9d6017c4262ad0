//! Exact invariants of holomorphic triples and `U(p,q)`-Higgs bundle moduli.
//!
//! Every slope, stability parameter and Toledo value is an exact
//! [`Rational`]; there is no floating point anywhere in the crate.

pub mod census;
pub mod classify;
pub mod error;
pub mod higgs;
pub mod morse;
pub mod rational;
pub mod triple;
pub mod walls;

pub use error::{Error, Result};
pub use higgs::HiggsType;
pub use rational::Rational;
pub use triple::{Genus, SubtripleWitness, TripleType};
