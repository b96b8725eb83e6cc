//! Exact combinatorics for unipotent representations of finite unitary groups.
//!
//! Unipotent representations `π_λ` of `U_n(F_q)` are labelled by partitions
//! `λ ⊢ n`. Every quantity computed here (Gan–Gross–Prasad multiplicities,
//! first descents, theta lifts between unitary dual pairs) is independent of
//! `q`, so the crate works purely with partitions and symmetric-group
//! characters.
//!
//! Layers, bottom-up:
//!
//! - [`partitions`]: Young-diagram and multiset calculus.
//! - [`symchar`]: exact `S_n` character values (Murnaghan–Nakayama), an
//!   independent Kostka/power-sum oracle, class-function inner products.
//! - [`dlmult`]: decomposition of `π_λ` over Deligne–Lusztig terms and the
//!   multiplicity formula for `⟨R_{T₁×T₂,θ⊗1}, R_λ⟩`.
//! - [`ggp`]: Bessel and Fourier–Jacobi multiplicities, theta lifts, descents.
//! - [`verify`]: exhaustive identity checks shared by the acceptance tests
//!   and the command-line `verify` runner.
//!
//! The engines are generic over an exact integer type (see [`ExactInt`]).
//! The aliases below fix it to arbitrary precision, which is what callers
//! normally want.

pub mod dlmult;
pub mod error;
pub mod ggp;
pub mod partitions;
pub mod scalar;
pub mod symchar;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{partitions_of, Partition};
pub use scalar::ExactInt;

/// Arbitrary-precision integer used for character values and multiplicities.
pub type Int = num_bigint::BigInt;
/// Exact rational over [`Int`].
pub type Rational = num_rational::BigRational;

pub type CharacterTable = symchar::CharacterTable<Int>;
pub type CharacterCache = symchar::CharacterCache<Int>;
pub type ClassFunction = symchar::ClassFunction<Int>;
pub type VirtualUnipotentChar = dlmult::VirtualUnipotentChar<Int>;
pub type MultiplicityResult = dlmult::MultiplicityResult<Int>;
pub type DlEngine = dlmult::DlEngine<Int>;
pub type Ggp = ggp::Ggp<Int>;
