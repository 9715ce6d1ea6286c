//! Spin-parity quantum information for Dirac bispinors.
//!
//! A Dirac bispinor lives in the product space of an intrinsic-parity qubit
//! and a spin qubit. This crate builds the full numerical toolchain for that
//! picture:
//!
//! - [`clifford`]: Pauli and Dirac matrices as explicit Kronecker products in
//!   the parity⊗spin ordering, plus the free and interacting Hamiltonians.
//! - [`spinors`]: two-component spinors, free-particle bispinors with the
//!   relativistic normalization `u†u = E/m`, Dirac adjoints and closure sums.
//! - [`lorentz`]: spinor-space boost and rotation operators, the spacetime
//!   boost matrix, and the two density-matrix transformation laws.
//! - [`density`]: rest-frame projectors, density matrices in the Hermitian
//!   and covariant normalization conventions, Bloch decompositions, partial
//!   traces and convex mixtures.
//! - [`concurrence`]: spin-flip operations and entanglement quantifiers
//!   (pure-state and rank-2 trace formulas, the sorted-eigenvalue concurrence
//!   for Hermitian states, entanglement of formation, entanglement entropy).
//! - [`magnetic`]: the worked example of a Dirac particle coupled to a
//!   uniform magnetic field, with closed-form Bloch vectors and helicity and
//!   parity projected mixtures.
//!
//! The central numerical statement the crate exists to check: density
//! operators built in the covariant convention `ρ̄ = ±P γ⁰` keep every trace
//! power and both concurrence trace formulas invariant under boosts and
//! rotations, while the Hermitian convention `ρ′ = cosh⁻¹(η) S ρ S†` does
//! not survive boosts.
//!
//! All matrices use the basis order `{|+,↑⟩, |+,↓⟩, |−,↑⟩, |−,↓⟩}` (parity
//! factor first, spin factor second) and the metric signature `(+,−,−,−)`.
//! Every operation is a pure function over immutable values.
//!
//! ```
//! use bispinor::*;
//!
//! // Free eigenstate with spin axis x̂, boosted along z with η = ln 2.
//! let p = FourMomentum::new(1.0, Vec3::new(0.0, 0.0, 0.75))?;
//! let u = free_bispinor(SpinorLabel::new(Sign::Plus, 1)?, &p, &Vec3::X)?;
//!
//! // Hermitian convention: the boost creates spin-parity entanglement.
//! let rho = density_from_bispinor(&u, Sign::Plus, Convention::Hermitian)?;
//! assert!((concurrence_pure(&rho)?.value - 0.6).abs() < 1e-12);
//!
//! // Covariant convention: the concurrence keeps its rest value, zero.
//! let rho_bar = density_from_bispinor(&u, Sign::Plus, Convention::Covariant)?;
//! assert!(concurrence_pure(&rho_bar)?.value.powi(2) < 1e-9);
//! # Ok::<(), bispinor::Error>(())
//! ```

// Fixed-size matrix kernels read best with plain index loops.
#![allow(clippy::needless_range_loop)]

pub mod clifford;
pub mod concurrence;
pub mod density;
pub mod eigen;
pub mod error;
pub mod lorentz;
pub mod magnetic;
pub mod matrix;
pub mod spinors;
pub mod vec3;

pub use error::{Error, Result};
pub use matrix::{ComplexMatrix2, ComplexMatrix4};
pub use num_complex::Complex64;
pub use vec3::Vec3;

pub use clifford::{
    dirac_operator, free_hamiltonian, gamma, general_hamiltonian, kron, minus_i_gamma2, pauli,
    DiracOperator, FieldValues,
};
pub use concurrence::{
    concurrence_from_bloch, concurrence_pure, concurrence_rank2, concurrence_wootters,
    entanglement_entropy, eof_from_concurrence, flip_product, spin_flip, ConcurrenceMethod,
    ConcurrenceResult,
};
pub use density::{
    bloch_decompose, bloch_decompose_matrix, density_from_bispinor, mix, partial_trace,
    rest_projector, trace_power, trace_power_matrix, BlochDecomposition, Convention,
    SpinParityDensity, Subsystem,
};
pub use lorentz::{
    boost_operator, boost_operator_params, rapidity_of, rotate_covariant, rotate_hermitian,
    rotation_operator, spacetime_boost, spinor_inverse, transform_covariant, transform_hermitian,
    BoostParameters, LorentzMatrix, RotationParameters,
};
pub use magnetic::{
    boosted_magnetic_density, closed_form_bloch, magnetic_hamiltonian, magnetic_rest_density,
    projected_mixture, MagneticSetup, ProjectedMixture,
};
pub use spinors::{
    closure_matrix, dirac_adjoint, free_bispinor, free_bispinor_helicity, rest_bispinor,
    slashed_momentum, two_spinor, two_spinor_along, Bispinor, FourMomentum, Sign, SpinorLabel,
    TwoSpinor,
};
