//! Finite Łukasiewicz chains with the square operator.
//!
//! Exact computations on Ł*_{n+1} = ⟨Ł_{n+1}, *⟩: procedure P and
//! subalgebras, the prime class Π, synthesis of Δ_a and the implications,
//! the matrix logics Λ*_{n+1,i}, and representability of IG★-chains.

pub mod arith;
pub mod chain;
pub mod error;
pub mod formula;
pub mod igstar;
pub mod logic;
pub mod reproduce;
pub mod structure;
pub mod subalgebra;
pub mod synth;

pub use chain::{Chain, Elem};
pub use error::Error;
pub use structure::StarChain;

/// Exact rationals with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::Ratio<num_bigint::BigInt>;

/// The clamped affine map f_S over exact rationals.
pub type PlMap = igstar::PiecewiseLinear<num_bigint::BigInt>;
