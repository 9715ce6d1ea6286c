//! Density matrices in the two normalization conventions, Bloch
//! decompositions, partial traces, trace powers and convex mixtures.
//!
//! The `Hermitian` convention stores the familiar `ρ = |u⟩⟨u| m/E`: Hermitian
//! and positive semi-definite, but its higher trace powers change under
//! boosts. The `Covariant` convention stores `ρ̄ = ±P γ⁰`, which transforms
//! as `S ρ̄ S⁻¹`: generally non-Hermitian once boosted, with every trace
//! power pinned at 1. The two coincide at rest. Densities are stored as
//! plain matrices plus the convention tag; no Hermiticity or positivity is
//! forced onto covariant matrices.

use num_complex::Complex64;

use crate::clifford::{big_sigma_dot, gamma, kron, pauli};
use crate::eigen::real_eigenvalues4;
use crate::error::{Error, Result};
use crate::lorentz::{
    rotate_covariant, rotate_hermitian, transform_covariant, transform_hermitian,
    RotationParameters,
};
use crate::matrix::{ComplexMatrix2, ComplexMatrix4, C_ZERO};
use crate::spinors::{Bispinor, FourMomentum, Sign};
use crate::vec3::Vec3;

/// Trace-1 tolerance at construction.
pub const TRACE_TOL_STRICT: f64 = 1e-10;
/// Trace-1 tolerance after transformation chains.
pub const TRACE_TOL_RELAXED: f64 = 1e-8;
/// Hermiticity / positivity tolerance for the Hermitian tag.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Normalization convention of a spin-parity density matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// ρ′ = cosh⁻¹(η) S ρ S†: Hermitian, PSD, boost-dependent higher traces.
    Hermitian,
    /// ρ̄ = ±P γ⁰, ρ̄′ = S ρ̄ S⁻¹: unipotent traces, generally non-Hermitian.
    Covariant,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Hermitian => "hermitian",
            Convention::Covariant => "covariant",
        }
    }
}

/// A trace-1 4×4 matrix tagged with its normalization convention.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinParityDensity {
    matrix: ComplexMatrix4,
    convention: Convention,
}

impl SpinParityDensity {
    /// Construction-time validation: unit trace, finite entries, and for the
    /// Hermitian tag also Hermiticity and eigenvalues ≥ −1e−10.
    pub fn new(matrix: ComplexMatrix4, convention: Convention) -> Result<Self> {
        Self::with_tolerance(matrix, convention, TRACE_TOL_STRICT)
    }

    /// Relaxed trace tolerance for matrices produced by transformation chains.
    pub fn from_transformed(matrix: ComplexMatrix4, convention: Convention) -> Result<Self> {
        Self::with_tolerance(matrix, convention, TRACE_TOL_RELAXED)
    }

    fn with_tolerance(
        matrix: ComplexMatrix4,
        convention: Convention,
        trace_tol: f64,
    ) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFinite("density matrix"));
        }
        let deviation = (matrix.trace() - Complex64::new(1.0, 0.0)).norm();
        if deviation > trace_tol {
            return Err(Error::TraceDeviation {
                deviation,
                tolerance: trace_tol,
            });
        }
        if convention == Convention::Hermitian {
            let herm = matrix.hermiticity_deviation();
            if herm > HERMITIAN_TOL {
                return Err(Error::NotHermitianDensity(format!(
                    "hermiticity deviation {herm}"
                )));
            }
            let spectrum = real_eigenvalues4(&matrix);
            let min = spectrum.values[3];
            if min < -HERMITIAN_TOL {
                return Err(Error::NotHermitianDensity(format!(
                    "negative eigenvalue {min}"
                )));
            }
        }
        Ok(SpinParityDensity { matrix, convention })
    }

    pub fn matrix(&self) -> &ComplexMatrix4 {
        &self.matrix
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Boost by the transformation law of this density's convention.
    pub fn boost(&self, p: &FourMomentum) -> Result<SpinParityDensity> {
        let moved = match self.convention {
            Convention::Hermitian => transform_hermitian(&self.matrix, p)?,
            Convention::Covariant => transform_covariant(&self.matrix, p)?,
        };
        SpinParityDensity::from_transformed(moved, self.convention)
    }

    /// Rotate by the transformation law of this density's convention.
    pub fn rotate(&self, r: &RotationParameters) -> Result<SpinParityDensity> {
        let moved = match self.convention {
            Convention::Hermitian => rotate_hermitian(&self.matrix, r),
            Convention::Covariant => rotate_covariant(&self.matrix, r),
        };
        SpinParityDensity::from_transformed(moved, self.convention)
    }
}

/// Rest-frame projector P^s_± = ¼(I + (−1)^{s−1} Σ·k̂)(I ± γ⁰): idempotent,
/// Hermitian, trace 1, equal to the outer product of the matching rest
/// bispinor with itself.
pub fn rest_projector(sign: Sign, s: u8, khat: &Vec3) -> Result<ComplexMatrix4> {
    if s != 1 && s != 2 {
        return Err(Error::InvalidArgument(format!(
            "spin label must be 1 or 2, got {s}"
        )));
    }
    let k = khat.require_unit()?;
    let spin_sign = if s == 1 { 1.0 } else { -1.0 };
    let id = ComplexMatrix4::identity();
    let spin_factor = id + big_sigma_dot(&k).scale_re(spin_sign);
    let parity_factor = id + gamma(0).expect("valid").scale_re(sign.factor());
    Ok((spin_factor * parity_factor).scale_re(0.25))
}

/// Density matrix of a pure bispinor state in either convention.
///
/// Hermitian: `u u† / (u†u)`; the measured norm `u†u = E/m` supplies the
/// `m/E` factor. Covariant: `±(sign) u u† γ⁰`, trace `±ūu = 1`.
pub fn density_from_bispinor(
    u: &Bispinor,
    sign: Sign,
    convention: Convention,
) -> Result<SpinParityDensity> {
    let matrix = match convention {
        Convention::Hermitian => {
            let norm = u.norm_sq();
            if norm <= 0.0 || !norm.is_finite() {
                return Err(Error::InvalidArgument(format!(
                    "bispinor norm² must be positive, got {norm}"
                )));
            }
            u.outer_dagger().scale_re(1.0 / norm)
        }
        Convention::Covariant => {
            let g0 = gamma(0).expect("valid");
            (u.outer_dagger() * g0).scale_re(sign.factor())
        }
    };
    let deviation = (matrix.trace() - Complex64::new(1.0, 0.0)).norm();
    if deviation > TRACE_TOL_RELAXED {
        return Err(Error::TraceDeviation {
            deviation,
            tolerance: TRACE_TOL_RELAXED,
        });
    }
    SpinParityDensity::with_tolerance(matrix, convention, TRACE_TOL_RELAXED)
}

/// Local Bloch vectors and correlation matrix of a two-qubit operator:
/// a_i = Tr[ρ σᵢ⊗I], b_j = Tr[ρ I⊗σⱼ], t_ij = Tr[ρ σᵢ⊗σⱼ]. Components are
/// complex so the decomposition covers covariant matrices too.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochDecomposition {
    pub a: [Complex64; 3],
    pub b: [Complex64; 3],
    pub t: [[Complex64; 3]; 3],
}

impl BlochDecomposition {
    /// ¼[I + Σ aᵢ σᵢ⊗I + Σ bⱼ I⊗σⱼ + Σ t_ij σᵢ⊗σⱼ]; inverse of
    /// `bloch_decompose` on trace-1 matrices.
    pub fn reconstruct(&self) -> ComplexMatrix4 {
        let id2 = ComplexMatrix2::identity();
        let mut out = ComplexMatrix4::identity();
        for i in 0..3 {
            let si = pauli(i as u8 + 1).expect("valid");
            out = out + kron(&si, &id2).scale(self.a[i]);
            out = out + kron(&id2, &si).scale(self.b[i]);
            for j in 0..3 {
                let sj = pauli(j as u8 + 1).expect("valid");
                out = out + kron(&si, &sj).scale(self.t[i][j]);
            }
        }
        out.scale_re(0.25)
    }

    /// a·a without conjugation (the complex bilinear square).
    pub fn a_square(&self) -> Complex64 {
        self.a.iter().map(|z| z * z).sum()
    }

    /// b·b without conjugation.
    pub fn b_square(&self) -> Complex64 {
        self.b.iter().map(|z| z * z).sum()
    }

    /// Largest imaginary magnitude over all components.
    pub fn max_imag(&self) -> f64 {
        let mut worst = 0.0f64;
        for z in self.a.iter().chain(self.b.iter()) {
            worst = worst.max(z.im.abs());
        }
        for row in &self.t {
            for z in row {
                worst = worst.max(z.im.abs());
            }
        }
        worst
    }
}

/// Bloch decomposition of any trace-1 matrix (either convention).
pub fn bloch_decompose_matrix(rho: &ComplexMatrix4) -> BlochDecomposition {
    let id2 = ComplexMatrix2::identity();
    let mut a = [C_ZERO; 3];
    let mut b = [C_ZERO; 3];
    let mut t = [[C_ZERO; 3]; 3];
    for i in 0..3 {
        let si = pauli(i as u8 + 1).expect("valid");
        a[i] = (*rho * kron(&si, &id2)).trace();
        b[i] = (*rho * kron(&id2, &si)).trace();
        for j in 0..3 {
            let sj = pauli(j as u8 + 1).expect("valid");
            t[i][j] = (*rho * kron(&si, &sj)).trace();
        }
    }
    BlochDecomposition { a, b, t }
}

/// Bloch decomposition of a tagged density.
pub fn bloch_decompose(rho: &SpinParityDensity) -> BlochDecomposition {
    bloch_decompose_matrix(rho.matrix())
}

/// Which qubit a partial trace keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    Parity,
    Spin,
}

/// Reduced state of one qubit. Defined for the Hermitian convention only;
/// the covariant ρ̄ has no subsystem-state semantics.
pub fn partial_trace(rho: &SpinParityDensity, keep: Subsystem) -> Result<ComplexMatrix2> {
    if rho.convention() == Convention::Covariant {
        return Err(Error::UnsupportedConvention("covariant"));
    }
    Ok(partial_trace_matrix(rho.matrix(), keep))
}

pub(crate) fn partial_trace_matrix(m: &ComplexMatrix4, keep: Subsystem) -> ComplexMatrix2 {
    let mut out = ComplexMatrix2::zeros();
    match keep {
        Subsystem::Parity => {
            // (ρ₁)_{ab} = Σ_c ρ_{2a+c, 2b+c}
            for a in 0..2 {
                for b in 0..2 {
                    for c in 0..2 {
                        out.m[a][b] += m.m[2 * a + c][2 * b + c];
                    }
                }
            }
        }
        Subsystem::Spin => {
            // (ρ₂)_{cd} = Σ_a ρ_{2a+c, 2a+d}
            for c in 0..2 {
                for d in 0..2 {
                    for a in 0..2 {
                        out.m[c][d] += m.m[2 * a + c][2 * a + d];
                    }
                }
            }
        }
    }
    out
}

/// Real part of Tr\[ρⁿ\] for n ∈ 1..=8; errors when the imaginary residue
/// exceeds 1e−10.
pub fn trace_power(rho: &SpinParityDensity, n: u32) -> Result<f64> {
    trace_power_matrix(rho.matrix(), n)
}

/// `trace_power` on a bare matrix.
pub fn trace_power_matrix(m: &ComplexMatrix4, n: u32) -> Result<f64> {
    if !(1..=8).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "trace power must satisfy 1 ≤ n ≤ 8, got {n}"
        )));
    }
    let t = m.pow(n).trace();
    if t.im.abs() > 1e-10 {
        return Err(Error::NumericConsistency {
            what: "trace power",
            residual: t.im.abs(),
        });
    }
    Ok(t.re)
}

/// Convex combination of densities sharing one convention; weights must be
/// non-negative and sum to 1 within 1e−12.
pub fn mix(terms: &[(f64, &SpinParityDensity)]) -> Result<SpinParityDensity> {
    if terms.is_empty() {
        return Err(Error::InvalidArgument("mixture needs at least one term".into()));
    }
    let convention = terms[0].1.convention();
    let mut total = 0.0;
    for (w, rho) in terms {
        if *w < 0.0 || !w.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "mixture weights must be non-negative, got {w}"
            )));
        }
        if rho.convention() != convention {
            return Err(Error::ConventionMismatch);
        }
        total += w;
    }
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidArgument(format!(
            "mixture weights must sum to 1, got {total}"
        )));
    }
    let mut matrix = ComplexMatrix4::zeros();
    for (w, rho) in terms {
        matrix = matrix + rho.matrix().scale_re(*w);
    }
    SpinParityDensity::from_transformed(matrix, convention)
}
