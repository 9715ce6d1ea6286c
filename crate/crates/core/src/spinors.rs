//! Two-component spinors and free-particle Dirac bispinors.
//!
//! Bispinors carry the relativistic normalization `1/√(2m(E+m))`, so that
//! `u†u = E/m` and `ūu = ±1` with `ū = u†γ⁰`. The spin quantization axis k̂
//! is an explicit parameter, independent of the momentum direction; at rest
//! the prefactors reduce exactly and `free_bispinor` reproduces
//! `rest_bispinor` bit for bit.

use num_complex::Complex64;

use crate::clifford::{gamma, pauli_dot};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix2, ComplexMatrix4, C_ZERO};
use crate::vec3::Vec3;

/// Intrinsic-parity / energy branch ±.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// +1.0 or −1.0.
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Label (±, s) of a free Dirac eigenstate; s ∈ {1, 2} is the spin label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinorLabel {
    pub sign: Sign,
    pub s: u8,
}

impl SpinorLabel {
    pub fn new(sign: Sign, s: u8) -> Result<Self> {
        if s != 1 && s != 2 {
            return Err(Error::InvalidArgument(format!(
                "spin label must be 1 or 2, got {s}"
            )));
        }
        Ok(SpinorLabel { sign, s })
    }
}

/// On-shell four-momentum: mass, 3-momentum and the derived energy
/// `E = sqrt(m² + |p|²)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourMomentum {
    m: f64,
    p: Vec3,
    e: f64,
}

impl FourMomentum {
    pub fn new(m: f64, p: Vec3) -> Result<Self> {
        if m <= 0.0 || !m.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "mass must be positive and finite, got {m}"
            )));
        }
        if !p.is_finite() {
            return Err(Error::NonFinite("momentum"));
        }
        let e = (m * m + p.norm_sq()).sqrt();
        Ok(FourMomentum { m, p, e })
    }

    /// Particle at rest.
    pub fn rest(m: f64) -> Result<Self> {
        FourMomentum::new(m, Vec3::ZERO)
    }

    /// Momentum `m sinh(η)` along a unit direction.
    pub fn from_rapidity(m: f64, rapidity: f64, direction: &Vec3) -> Result<Self> {
        let dir = direction.require_unit()?;
        FourMomentum::new(m, dir.scale(m * rapidity.sinh()))
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn momentum(&self) -> Vec3 {
        self.p
    }

    pub fn energy(&self) -> f64 {
        self.e
    }

    /// |p|.
    pub fn momentum_norm(&self) -> f64 {
        self.p.norm()
    }

    /// Momentum direction; ẑ when at rest.
    pub fn direction(&self) -> Vec3 {
        let n = self.p.norm();
        if n == 0.0 {
            Vec3::Z
        } else {
            self.p.scale(1.0 / n)
        }
    }

    /// Same mass, reversed 3-momentum.
    pub fn reversed(&self) -> FourMomentum {
        FourMomentum {
            m: self.m,
            p: -self.p,
            e: self.e,
        }
    }
}

/// Unit-norm two-component spinor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoSpinor {
    pub c1: Complex64,
    pub c2: Complex64,
}

impl TwoSpinor {
    pub fn norm_sq(&self) -> f64 {
        self.c1.norm_sqr() + self.c2.norm_sqr()
    }

    /// ⟨self|other⟩ (conjugated on the left).
    pub fn dot(&self, other: &TwoSpinor) -> Complex64 {
        self.c1.conj() * other.c1 + self.c2.conj() * other.c2
    }

    /// Apply a 2×2 matrix.
    pub fn apply(&self, m: &ComplexMatrix2) -> TwoSpinor {
        TwoSpinor {
            c1: m.m[0][0] * self.c1 + m.m[0][1] * self.c2,
            c2: m.m[1][0] * self.c1 + m.m[1][1] * self.c2,
        }
    }
}

/// Helicity-basis two-spinors from polar/azimuthal angles:
/// χ₁ = (cos(θ/2), e^{+iφ} sin(θ/2)), χ₂ = (−e^{−iφ} sin(θ/2), cos(θ/2)).
/// χ₁ (χ₂) is the +1 (−1) eigenvector of σ·k̂(θ, φ).
pub fn two_spinor(s: u8, theta: f64, phi: f64) -> Result<TwoSpinor> {
    let half = theta / 2.0;
    let (sin_h, cos_h) = (half.sin(), half.cos());
    match s {
        1 => Ok(TwoSpinor {
            c1: Complex64::new(cos_h, 0.0),
            c2: Complex64::from_polar(1.0, phi) * sin_h,
        }),
        2 => Ok(TwoSpinor {
            c1: -Complex64::from_polar(1.0, -phi) * sin_h,
            c2: Complex64::new(cos_h, 0.0),
        }),
        _ => Err(Error::InvalidArgument(format!(
            "spin label must be 1 or 2, got {s}"
        ))),
    }
}

/// `two_spinor` with the quantization axis given as a unit vector.
pub fn two_spinor_along(s: u8, khat: &Vec3) -> Result<TwoSpinor> {
    let k = khat.require_unit()?;
    let (theta, phi) = k.polar_angles();
    two_spinor(s, theta, phi)
}

/// Four-component Dirac bispinor in the parity⊗spin basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bispinor {
    pub c: [Complex64; 4],
}

impl Bispinor {
    pub fn norm_sq(&self) -> f64 {
        self.c.iter().map(|z| z.norm_sqr()).sum()
    }

    /// u†v.
    pub fn dagger_dot(&self, other: &Bispinor) -> Complex64 {
        (0..4).map(|i| self.c[i].conj() * other.c[i]).sum()
    }

    /// ū v = (u†γ⁰) v.
    pub fn adjoint_dot(&self, other: &Bispinor) -> Complex64 {
        let row = dirac_adjoint(self);
        (0..4).map(|i| row[i] * other.c[i]).sum()
    }

    /// Outer product u u†.
    pub fn outer_dagger(&self) -> ComplexMatrix4 {
        let row: [Complex64; 4] = [
            self.c[0].conj(),
            self.c[1].conj(),
            self.c[2].conj(),
            self.c[3].conj(),
        ];
        ComplexMatrix4::outer(&self.c, &row)
    }

    /// Outer product u ū.
    pub fn outer_adjoint(&self) -> ComplexMatrix4 {
        ComplexMatrix4::outer(&self.c, &dirac_adjoint(self))
    }

    pub fn max_abs_diff(&self, other: &Bispinor) -> f64 {
        (0..4)
            .map(|i| (self.c[i] - other.c[i]).norm())
            .fold(0.0, f64::max)
    }
}

/// Dirac adjoint row covector ū = u†γ⁰: conjugate and flip the sign of the
/// lower parity block.
pub fn dirac_adjoint(w: &Bispinor) -> [Complex64; 4] {
    [
        w.c[0].conj(),
        w.c[1].conj(),
        -w.c[2].conj(),
        -w.c[3].conj(),
    ]
}

/// Rest-frame eigenstate u_{±,s}(0): the two-spinor χ_s(k̂) embedded in the
/// upper (+) or lower (−) parity block.
pub fn rest_bispinor(label: SpinorLabel, khat: &Vec3) -> Result<Bispinor> {
    let chi = two_spinor_along(label.s, khat)?;
    let mut c = [C_ZERO; 4];
    match label.sign {
        Sign::Plus => {
            c[0] = chi.c1;
            c[1] = chi.c2;
        }
        Sign::Minus => {
            c[2] = chi.c1;
            c[3] = chi.c2;
        }
    }
    Ok(Bispinor { c })
}

/// Free-particle eigenstate with the relativistic normalization:
///
/// u_{+,s}(p) = N [(E+m) χ_s(k̂); (p·σ) χ_s(k̂)],
/// u_{−,s}(p) = N [(p·σ) χ_s(k̂); (E+m) χ_s(k̂)],  N = 1/√(2m(E+m)).
///
/// The large-block prefactor is evaluated as √((E+m)/(2m)) so the rest limit
/// is exact.
pub fn free_bispinor(label: SpinorLabel, p: &FourMomentum, khat: &Vec3) -> Result<Bispinor> {
    let chi = two_spinor_along(label.s, khat)?;
    let (m, e) = (p.mass(), p.energy());
    let large = ((e + m) / (2.0 * m)).sqrt();
    let small_norm = 1.0 / (2.0 * m * (e + m)).sqrt();
    let p_sigma = pauli_dot(&p.momentum());
    let small_spinor = chi.apply(&p_sigma);

    let big = [chi.c1 * large, chi.c2 * large];
    let small = [small_spinor.c1 * small_norm, small_spinor.c2 * small_norm];

    let c = match label.sign {
        Sign::Plus => [big[0], big[1], small[0], small[1]],
        Sign::Minus => [small[0], small[1], big[0], big[1]],
    };
    Ok(Bispinor { c })
}

/// `free_bispinor` in the helicity basis: the spin quantization axis
/// defaults to the momentum direction (ẑ at rest), so s = 1 (2) labels the
/// positive (negative) helicity state.
pub fn free_bispinor_helicity(label: SpinorLabel, p: &FourMomentum) -> Result<Bispinor> {
    free_bispinor(label, p, &p.direction())
}

/// Energy-branch closure sum `± Σ_s u_{±,s}(p) ū_{±,s}(p)`, computed as the
/// outer-product sum; equals the projector `(1 ± γ^μ p_μ / m)/2`.
pub fn closure_matrix(sign: Sign, p: &FourMomentum) -> Result<ComplexMatrix4> {
    let khat = Vec3::Z;
    let mut sum = ComplexMatrix4::zeros();
    for s in 1..=2u8 {
        let u = free_bispinor(SpinorLabel::new(sign, s)?, p, &khat)?;
        sum = sum + u.outer_adjoint();
    }
    Ok(sum.scale_re(sign.factor()))
}

/// The slashed momentum γ^μ p_μ = E γ⁰ − p·γ for p_μ = (E, −p).
pub fn slashed_momentum(p: &FourMomentum) -> ComplexMatrix4 {
    let g0 = gamma(0).expect("valid");
    let mom = p.momentum();
    let spatial = gamma(1).expect("valid").scale_re(mom.x)
        + gamma(2).expect("valid").scale_re(mom.y)
        + gamma(3).expect("valid").scale_re(mom.z);
    g0.scale_re(p.energy()) - spatial
}
