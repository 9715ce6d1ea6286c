//! Dirac particle in a uniform magnetic field: the worked example.
//!
//! The Hamiltonian `H = γ⁰(m + μΣ·B)` keeps the rest eigenstates in
//! projector form `¼(1 ± γ⁰)(1 + (−1)^{s−1}Σ·B̂)`, identical under both
//! normalization conventions. Boosted densities are always produced by exact
//! numeric transformation of the rest densities; the closed-form Bloch
//! vectors quoted for the p ∥ B̂ family serve as oracles only.

use num_complex::Complex64;

use crate::clifford::{kron, pauli};
use crate::density::{mix, Convention, SpinParityDensity};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix2, ComplexMatrix4};
use crate::spinors::{FourMomentum, Sign};
use crate::vec3::Vec3;

/// Mass, magnetic-moment coupling and uniform field, natural units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MagneticSetup {
    m: f64,
    mu: f64,
    b: Vec3,
}

impl MagneticSetup {
    pub fn new(m: f64, mu: f64, b: Vec3) -> Result<Self> {
        if m <= 0.0 || !m.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "mass must be positive and finite, got {m}"
            )));
        }
        if !mu.is_finite() || !b.is_finite() {
            return Err(Error::NonFinite("magnetic setup"));
        }
        Ok(MagneticSetup { m, mu, b })
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn coupling(&self) -> f64 {
        self.mu
    }

    pub fn field(&self) -> Vec3 {
        self.b
    }

    /// |B|.
    pub fn field_magnitude(&self) -> f64 {
        self.b.norm()
    }

    /// B̂; errors when the field vanishes.
    pub fn field_direction(&self) -> Result<Vec3> {
        if self.field_magnitude() == 0.0 {
            return Err(Error::DegenerateField);
        }
        self.b.normalized()
    }
}

/// H = γ⁰(m + μΣ·B) = m σz⊗I + μ σz⊗(σ·B); Hermitian.
pub fn magnetic_hamiltonian(setup: &MagneticSetup) -> ComplexMatrix4 {
    let id2 = ComplexMatrix2::identity();
    let sz = pauli(3).expect("valid");
    let mass = kron(&sz, &id2).scale_re(setup.m);
    let field = kron(&sz, &crate::clifford::pauli_dot(&setup.b)).scale_re(setup.mu);
    mass + field
}

/// Rest eigenstate density ρ^{s,B}_± = ¼(1 ± γ⁰)(1 + (−1)^{s−1}Σ·B̂); the
/// same matrix under both convention tags. Requires |B| > 0 (use
/// `rest_projector` with an explicit axis otherwise).
pub fn magnetic_rest_density(
    sign: Sign,
    s: u8,
    setup: &MagneticSetup,
    convention: Convention,
) -> Result<SpinParityDensity> {
    let bhat = setup.field_direction()?;
    let matrix = crate::density::rest_projector(sign, s, &bhat)?;
    SpinParityDensity::new(matrix, convention)
}

/// Boosted eigenstate density, by exact numeric transformation of the rest
/// density in the requested convention. All terms are retained, including
/// any Σ·(p×B̂) contribution for non-parallel momenta.
pub fn boosted_magnetic_density(
    sign: Sign,
    s: u8,
    setup: &MagneticSetup,
    p: &FourMomentum,
    convention: Convention,
) -> Result<SpinParityDensity> {
    if (p.mass() - setup.m).abs() > 1e-12 * setup.m.max(1.0) {
        return Err(Error::InvalidArgument(format!(
            "momentum mass {} does not match setup mass {}",
            p.mass(),
            setup.m
        )));
    }
    magnetic_rest_density(sign, s, setup, convention)?.boost(p)
}

/// Closed-form Bloch vectors of the boosted eigenstate for p ∥ B̂, in the
/// crate's axis convention for the parity qubit:
///
/// - index 2 (z) is the γ⁰ axis, where the paper's triples list their first
///   component;
/// - index 0 (x) is the boost-mixing axis (lone γ⁵ terms), the paper's third
///   slot;
/// - index 1 (y) carries the covariant imaginary component (γ⁰γ⁵ terms), the
///   paper's second slot.
///
/// With ±  the parity branch and σ_s = (−1)^{s−1}:
///
/// hermitian: a = (σ_s p·B̂, 0, ±m)/E,  b = σ_s (mB̂ + p(p·B̂)/(E+m))/E
/// covariant: ā = (0, ∓σ_s i p·B̂, ±E)/m, b̄ = σ_s (EB̂ − p(p·B̂)/(E+m))/m
///
/// The spin vectors b are genuine spatial vectors and need no reordering.
/// Everything here must agree with `bloch_decompose` of
/// `boosted_magnetic_density` under the parallel precondition.
pub fn closed_form_bloch(
    sign: Sign,
    s: u8,
    setup: &MagneticSetup,
    p: &FourMomentum,
    convention: Convention,
) -> Result<([Complex64; 3], [Complex64; 3])> {
    if s != 1 && s != 2 {
        return Err(Error::InvalidArgument(format!(
            "spin label must be 1 or 2, got {s}"
        )));
    }
    let bhat = setup.field_direction()?;
    let mom = p.momentum();
    let cross = mom.cross(&bhat);
    if cross.norm() > 1e-10 * mom.norm().max(1.0) {
        return Err(Error::Precondition(format!(
            "closed forms require p ∥ B̂; |p × B̂| = {}",
            cross.norm()
        )));
    }

    let (m, e) = (p.mass(), p.energy());
    let pb = mom.dot(&bhat);
    let ps = sign.factor();
    let ss = if s == 1 { 1.0 } else { -1.0 };
    let re = |x: f64| Complex64::new(x, 0.0);

    let (a, b) = match convention {
        Convention::Hermitian => {
            let a = [re(ss * pb / e), re(0.0), re(ps * m / e)];
            let bv = (bhat.scale(m) + mom.scale(pb / (e + m))).scale(ss / e);
            (a, [re(bv.x), re(bv.y), re(bv.z)])
        }
        Convention::Covariant => {
            let a = [
                re(0.0),
                Complex64::new(0.0, -ps * ss * pb / m),
                re(ps * e / m),
            ];
            let bv = (bhat.scale(e) - mom.scale(pb / (e + m))).scale(ss / m);
            (a, [re(bv.x), re(bv.y), re(bv.z)])
        }
    };
    Ok((a, b))
}

/// Rank-2 statistical mixtures of boosted eigenstates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectedMixture {
    /// q ρ^{s,B}_+(p) + (1−q) ρ^{s,B}_−(p): mixes parity branches at fixed s.
    ParityMix { s: u8 },
    /// q ρ^{1,B}_±(p) + (1−q) ρ^{2,B}_±(p): mixes spin labels at fixed branch.
    HelicityMix { sign: Sign },
}

/// Build the mixture; q must lie strictly inside (0, 1). At q = ½ these are
/// the exact helicity and parity projections.
pub fn projected_mixture(
    kind: ProjectedMixture,
    setup: &MagneticSetup,
    p: &FourMomentum,
    q: f64,
    convention: Convention,
) -> Result<SpinParityDensity> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "mixture weight must lie in (0, 1), got {q}"
        )));
    }
    let (first, second) = match kind {
        ProjectedMixture::ParityMix { s } => (
            boosted_magnetic_density(Sign::Plus, s, setup, p, convention)?,
            boosted_magnetic_density(Sign::Minus, s, setup, p, convention)?,
        ),
        ProjectedMixture::HelicityMix { sign } => (
            boosted_magnetic_density(sign, 1, setup, p, convention)?,
            boosted_magnetic_density(sign, 2, setup, p, convention)?,
        ),
    };
    mix(&[(q, &first), (1.0 - q, &second)])
}
