//! Nested code pairs from the Hermitian curve: finite fields, the curve and
//! its Weierstrass semigroup, one-point and order-bound improved codes,
//! closed-form bounds, pair constructions, and a ramp secret sharing engine.

pub mod analysis;
pub mod cli;
pub mod codes;
pub mod constructions;
pub mod curve;
pub mod gfield;
pub mod interval;
pub mod linalg;
pub mod semigroup;
pub mod sharing;
pub mod verify;
