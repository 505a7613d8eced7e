//! Rotor-router universality toolkit.
//!
//! - [`rotor`]: rotor types, classification (palindromic, block-repetitive,
//!   balanced, ab-ba), reductions, and run decompositions.
//! - [`network`]: exact rotor-router walks on digraphs and hitting sequences.
//! - [`compressor`]: the UU/UD/DU/DD/BT maps on two-state rotors.
//! - [`universality`]: the randomized compressor algorithm, table enumeration,
//!   and the ab-ba results.

pub mod compressor;
pub mod network;
pub mod rotor;
pub mod universality;

pub use rotor::{canonicalize, RotorError, RotorType, State};
