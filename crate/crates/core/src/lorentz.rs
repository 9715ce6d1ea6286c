//! Spinor-space boosts and rotations, the spacetime boost matrix, and the
//! two density-matrix transformation laws.
//!
//! Boosts use the half-rapidity form
//! `S = cosh(η/2) + γ⁵(Σ·p̂) sinh(η/2)` with `η = arcsinh(|p|/m)`; every
//! construction is cross-validated against the closed form
//! `(γ^μ p_μ γ⁰ + m)/√(2m(m+E))`. Rotations use the expanded half-angle form
//! `cos(θ/2) + i(Σ·θ̂) sin(θ/2)`, which carries the double cover
//! (θ = 2π ↦ −I).
//!
//! For boosts `S = S†` and `γ⁰S†γ⁰ = S⁻¹`; for rotations `S† = S⁻¹` and
//! `[S, γ⁰] = 0`. The inverse is always taken through the group identity
//! `γ⁰S†γ⁰`, never by numeric inversion.

use num_complex::Complex64;

use crate::clifford::{big_sigma_dot, gamma, kron, metric, pauli, pauli_dot};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix4, C_I};
use crate::spinors::{slashed_momentum, FourMomentum};
use crate::vec3::Vec3;

/// Agreement required between the hyperbolic and closed forms of S.
const FORM_AGREEMENT_TOL: f64 = 1e-12;

/// Rapidity and boost direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoostParameters {
    pub rapidity: f64,
    pub direction: Vec3,
}

impl BoostParameters {
    pub fn new(rapidity: f64, direction: Vec3) -> Result<Self> {
        if !rapidity.is_finite() || rapidity < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "rapidity must be finite and non-negative, got {rapidity}"
            )));
        }
        let direction = direction.require_unit()?;
        Ok(BoostParameters { rapidity, direction })
    }
}

/// Rotation angle and axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotationParameters {
    pub angle: f64,
    pub axis: Vec3,
}

impl RotationParameters {
    pub fn new(angle: f64, axis: Vec3) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::InvalidArgument("rotation angle must be finite".into()));
        }
        let axis = axis.require_unit()?;
        Ok(RotationParameters { angle, axis })
    }
}

/// Boost parameters that carry a rest-frame state to momentum p:
/// η = arcsinh(|p|/m) along p̂ (ẑ with zero rapidity at rest).
pub fn rapidity_of(p: &FourMomentum) -> BoostParameters {
    BoostParameters {
        rapidity: (p.momentum_norm() / p.mass()).asinh(),
        direction: p.direction(),
    }
}

/// Hyperbolic-form spinor boost for explicit parameters:
/// S = cosh(η/2) I + sinh(η/2) (σx ⊗ σ·n̂).
pub fn boost_operator_params(b: &BoostParameters) -> ComplexMatrix4 {
    let half = b.rapidity / 2.0;
    let id = ComplexMatrix4::identity().scale_re(half.cosh());
    let mix = kron(&pauli(1).expect("valid"), &pauli_dot(&b.direction)).scale_re(half.sinh());
    id + mix
}

/// Spinor boost taking u(0) to u(p), validated against the closed form
/// `(γ^μ p_μ γ⁰ + m)/√(2m(m+E))` entrywise.
pub fn boost_operator(p: &FourMomentum) -> Result<ComplexMatrix4> {
    let s = boost_operator_params(&rapidity_of(p));

    let g0 = gamma(0).expect("valid");
    let numerator = slashed_momentum(p) * g0 + ComplexMatrix4::identity().scale_re(p.mass());
    let closed = numerator.scale_re(1.0 / (2.0 * p.mass() * (p.mass() + p.energy())).sqrt());

    let deviation = s.max_abs_diff(&closed);
    if deviation >= FORM_AGREEMENT_TOL {
        return Err(Error::InternalConsistency {
            what: "boost operator hyperbolic vs closed form",
            deviation,
        });
    }
    Ok(s)
}

/// Spinor rotation S = cos(θ/2) I + i sin(θ/2) (I ⊗ σ·θ̂); unitary and
/// commuting with γ⁰.
pub fn rotation_operator(r: &RotationParameters) -> ComplexMatrix4 {
    let half = r.angle / 2.0;
    let id = ComplexMatrix4::identity().scale_re(half.cos());
    let gen = big_sigma_dot(&r.axis).scale(C_I * Complex64::new(half.sin(), 0.0));
    id + gen
}

/// Group-identity inverse γ⁰ S† γ⁰, exact for boosts and rotations alike.
pub fn spinor_inverse(s: &ComplexMatrix4) -> ComplexMatrix4 {
    let g0 = gamma(0).expect("valid");
    g0 * s.dagger() * g0
}

/// Real 4×4 spacetime matrix with Minkowski index order (t, x, y, z).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzMatrix {
    pub m: [[f64; 4]; 4],
}

impl LorentzMatrix {
    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        LorentzMatrix { m }
    }

    pub fn apply(&self, v: &[f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i] += self.m[i][j] * v[j];
            }
        }
        out
    }

    /// Λᵀ g Λ − g, entrywise maximum; zero for a true Lorentz transformation.
    pub fn metric_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                let mut sum = 0.0;
                for mu in 0..4 {
                    sum += self.m[mu][a] * metric(mu, mu) * self.m[mu][b];
                }
                worst = worst.max((sum - metric(a, b)).abs());
            }
        }
        worst
    }
}

/// Symmetric spacetime boost carrying (m, 0) to (E, p):
/// Λ⁰₀ = cosh η, Λ⁰ᵢ = Λᵢ₀ = sinh η n̂ᵢ, Λᵢⱼ = δᵢⱼ + (cosh η − 1) n̂ᵢn̂ⱼ.
pub fn spacetime_boost(p: &FourMomentum) -> LorentzMatrix {
    let b = rapidity_of(p);
    let (ch, sh) = (b.rapidity.cosh(), b.rapidity.sinh());
    let n = [b.direction.x, b.direction.y, b.direction.z];
    let mut m = [[0.0; 4]; 4];
    m[0][0] = ch;
    for i in 0..3 {
        m[0][i + 1] = sh * n[i];
        m[i + 1][0] = sh * n[i];
        for j in 0..3 {
            m[i + 1][j + 1] = if i == j { 1.0 } else { 0.0 } + (ch - 1.0) * n[i] * n[j];
        }
    }
    LorentzMatrix { m }
}

/// Hermitian-convention boost law ρ′ = cosh⁻¹(η) S ρ S†. The cosh factor
/// restores unit trace for states boosted from rest; it always refers to the
/// rapidity of the boost being applied.
pub fn transform_hermitian(rho: &ComplexMatrix4, p: &FourMomentum) -> Result<ComplexMatrix4> {
    let s = boost_operator(p)?;
    let eta = rapidity_of(p).rapidity;
    Ok((s * *rho * s.dagger()).scale_re(1.0 / eta.cosh()))
}

/// Covariant law ρ̄′ = S ρ̄ S⁻¹ with S⁻¹ = γ⁰S†γ⁰.
pub fn transform_covariant(rho_bar: &ComplexMatrix4, p: &FourMomentum) -> Result<ComplexMatrix4> {
    let s = boost_operator(p)?;
    Ok(s * *rho_bar * spinor_inverse(&s))
}

/// Rotation analogue of the Hermitian law; rotations are unitary, so no
/// renormalization factor appears.
pub fn rotate_hermitian(rho: &ComplexMatrix4, r: &RotationParameters) -> ComplexMatrix4 {
    let s = rotation_operator(r);
    s * *rho * s.dagger()
}

/// Rotation analogue of the covariant law.
pub fn rotate_covariant(rho_bar: &ComplexMatrix4, r: &RotationParameters) -> ComplexMatrix4 {
    let s = rotation_operator(r);
    s * *rho_bar * spinor_inverse(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::minus_i_gamma2;
    use crate::spinors::{free_bispinor, rest_bispinor, Sign, SpinorLabel};

    fn test_momentum() -> FourMomentum {
        FourMomentum::new(1.0, Vec3::new(0.0, 0.0, 0.75)).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(BoostParameters::new(-0.1, Vec3::Z).is_err());
        assert!(BoostParameters::new(f64::NAN, Vec3::Z).is_err());
        assert!(BoostParameters::new(1.0, Vec3::new(0.0, 0.0, 2.0)).is_err());
        assert!(RotationParameters::new(1.0, Vec3::new(0.3, 0.0, 0.0)).is_err());
        assert!(RotationParameters::new(f64::INFINITY, Vec3::Z).is_err());
    }

    #[test]
    fn rapidity_of_explicit() {
        // sinh η = 0.75 ⇒ η = ln 2.
        let b = rapidity_of(&test_momentum());
        assert!((b.rapidity - 2.0f64.ln()).abs() < 1e-14);
        assert_eq!(b.direction, Vec3::Z);
    }

    #[test]
    fn rapidity_of_rest() {
        let b = rapidity_of(&FourMomentum::rest(1.0).unwrap());
        assert_eq!(b.rapidity, 0.0);
        assert_eq!(b.direction, Vec3::Z);
    }

    #[test]
    fn cosh_rapidity_is_gamma_factor() {
        let p = FourMomentum::new(0.7, Vec3::new(0.2, -0.9, 0.4)).unwrap();
        let b = rapidity_of(&p);
        assert!((b.rapidity.cosh() - p.energy() / p.mass()).abs() < 1e-12);
    }

    #[test]
    fn boost_at_rest_is_identity() {
        let s = boost_operator(&FourMomentum::rest(1.0).unwrap()).unwrap();
        assert!(s.max_abs_diff(&ComplexMatrix4::identity()) < 1e-15);
    }

    #[test]
    fn boost_diagonal_half_angle_value() {
        // cosh(η/2) = √(9/8) for η = ln 2.
        let s = boost_operator(&test_momentum()).unwrap();
        let want = (9.0f64 / 8.0).sqrt();
        for i in 0..4 {
            assert!((s.m[i][i] - Complex64::new(want, 0.0)).norm() < 1e-13);
        }
        assert!((want - 1.06066).abs() < 1e-5);
    }

    #[test]
    fn boost_is_hermitian_with_unit_determinant_structure() {
        let p = FourMomentum::new(1.3, Vec3::new(0.6, 0.1, -1.1)).unwrap();
        let s = boost_operator(&p).unwrap();
        assert!(s.hermiticity_deviation() < 1e-13);
        assert!((s.det() - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        // S S⁻¹ = I with the group-identity inverse.
        let prod = s * spinor_inverse(&s);
        assert!(prod.max_abs_diff(&ComplexMatrix4::identity()) < 1e-12);
    }

    #[test]
    fn boost_carries_rest_state_to_free_state() {
        let p = FourMomentum::new(0.9, Vec3::new(0.5, -0.3, 0.7)).unwrap();
        let s = boost_operator(&p).unwrap();
        let k = Vec3::from_polar(1.2, 0.5);
        for sign in [Sign::Plus, Sign::Minus] {
            for spin in 1..=2u8 {
                let label = SpinorLabel::new(sign, spin).unwrap();
                let rest = rest_bispinor(label, &k).unwrap();
                let moved = s.mul_vec(&rest.c);
                let want = free_bispinor(label, &p, &k).unwrap();
                for i in 0..4 {
                    assert!((moved[i] - want.c[i]).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn rotation_identity_and_double_cover() {
        let axis = Vec3::from_polar(0.7, 1.9);
        let r0 = rotation_operator(&RotationParameters::new(0.0, axis).unwrap());
        assert!(r0.max_abs_diff(&ComplexMatrix4::identity()) < 1e-15);
        let r2pi = rotation_operator(&RotationParameters::new(2.0 * std::f64::consts::PI, axis).unwrap());
        let minus_id = ComplexMatrix4::identity().scale_re(-1.0);
        assert!(r2pi.max_abs_diff(&minus_id) < 1e-14);
    }

    #[test]
    fn rotation_pi_about_z() {
        let r = rotation_operator(&RotationParameters::new(std::f64::consts::PI, Vec3::Z).unwrap());
        let want = ComplexMatrix4::diag([
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
        ]);
        assert!(r.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn rotation_is_unitary_and_commutes_with_gamma0() {
        let r = rotation_operator(&RotationParameters::new(1.234, Vec3::from_polar(2.0, -0.4)).unwrap());
        let prod = r * r.dagger();
        assert!(prod.max_abs_diff(&ComplexMatrix4::identity()) < 1e-13);
        assert!((r.det() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let g0 = gamma(0).unwrap();
        assert!((r * g0 - g0 * r).max_abs() < 1e-13);
        // γ⁰S†γ⁰ = S⁻¹ holds for rotations as well.
        assert!((r * spinor_inverse(&r)).max_abs_diff(&ComplexMatrix4::identity()) < 1e-13);
    }

    #[test]
    fn spacetime_boost_explicit_entries() {
        let lambda = spacetime_boost(&test_momentum());
        assert!((lambda.m[0][0] - 1.25).abs() < 1e-14);
        assert!((lambda.m[0][3] - 0.75).abs() < 1e-14);
        assert!(lambda.metric_deviation() < 1e-12);
    }

    #[test]
    fn spacetime_boost_rest_momentum() {
        let p = FourMomentum::new(1.4, Vec3::new(-0.3, 1.0, 0.2)).unwrap();
        let lambda = spacetime_boost(&p);
        let boosted = lambda.apply(&[p.mass(), 0.0, 0.0, 0.0]);
        assert!((boosted[0] - p.energy()).abs() < 1e-12);
        assert!((boosted[1] - p.momentum().x).abs() < 1e-12);
        assert!((boosted[2] - p.momentum().y).abs() < 1e-12);
        assert!((boosted[3] - p.momentum().z).abs() < 1e-12);
        assert!(spacetime_boost(&FourMomentum::rest(1.0).unwrap())
            .m
            .iter()
            .enumerate()
            .all(|(i, row)| row
                .iter()
                .enumerate()
                .all(|(j, &e)| (e - if i == j { 1.0 } else { 0.0 }).abs() < 1e-14)));
    }

    #[test]
    fn consistency_relation() {
        // S⁻¹ γ^μ S = Λ^μ_ζ γ^ζ.
        let p = FourMomentum::new(1.1, Vec3::new(0.8, -0.4, 0.9)).unwrap();
        let s = boost_operator(&p).unwrap();
        let s_inv = spinor_inverse(&s);
        let lambda = spacetime_boost(&p);
        for mu in 0..4usize {
            let lhs = s_inv * gamma(mu as u8).unwrap() * s;
            let mut rhs = ComplexMatrix4::zeros();
            for zeta in 0..4usize {
                rhs = rhs + gamma(zeta as u8).unwrap().scale_re(lambda.m[mu][zeta]);
            }
            assert!(lhs.max_abs_diff(&rhs) < 1e-10, "index {mu}");
        }
    }

    #[test]
    fn flip_intertwining() {
        // (−iγ²) S = S* (−iγ²) and (−iγ²) S† = Sᵀ (−iγ²).
        let flip = minus_i_gamma2();
        let p = FourMomentum::new(0.8, Vec3::new(0.2, 0.7, -0.5)).unwrap();
        let rot = RotationParameters::new(0.77, Vec3::from_polar(1.4, 2.2)).unwrap();
        for s in [boost_operator(&p).unwrap(), rotation_operator(&rot)] {
            assert!((flip * s).max_abs_diff(&(s.conj() * flip)) < 1e-12);
            assert!((flip * s.dagger()).max_abs_diff(&(s.transpose() * flip)) < 1e-12);
        }
    }

    #[test]
    fn boost_composition_along_common_axis() {
        let axis = Vec3::from_polar(0.4, -1.0);
        let b1 = BoostParameters::new(0.3, axis).unwrap();
        let b2 = BoostParameters::new(0.9, axis).unwrap();
        let combined = BoostParameters::new(1.2, axis).unwrap();
        let lhs = boost_operator_params(&b1) * boost_operator_params(&b2);
        let rhs = boost_operator_params(&combined);
        assert!(lhs.max_abs_diff(&rhs) < 1e-10);
    }

    #[test]
    fn hermitian_transform_preserves_trace_and_purity_of_projector() {
        use crate::density::rest_projector;
        let p = test_momentum();
        let rho = rest_projector(Sign::Plus, 1, &Vec3::Z).unwrap();
        let moved = transform_hermitian(&rho, &p).unwrap();
        assert!((moved.trace() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(((moved * moved).trace() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        // p = 0 leaves the state untouched.
        let still = transform_hermitian(&rho, &FourMomentum::rest(1.0).unwrap()).unwrap();
        assert!(still.max_abs_diff(&rho) < 1e-15);
    }

    #[test]
    fn covariant_transform_at_rest_is_identity() {
        use crate::density::rest_projector;
        let rho = rest_projector(Sign::Plus, 2, &Vec3::from_polar(0.4, 1.7)).unwrap();
        let g0 = gamma(0).unwrap();
        let rho_bar = rho * g0;
        let still = transform_covariant(&rho_bar, &FourMomentum::rest(0.8).unwrap()).unwrap();
        assert!(still.max_abs_diff(&rho_bar) < 1e-15);
    }

    #[test]
    fn covariant_transform_keeps_unipotent_traces() {
        use crate::density::rest_projector;
        let p = FourMomentum::new(1.0, Vec3::new(0.4, 0.2, -0.8)).unwrap();
        let khat = Vec3::from_polar(0.6, 1.1);
        let proj = rest_projector(Sign::Minus, 2, &khat).unwrap();
        let g0 = gamma(0).unwrap();
        // ρ̄ = −P₋γ⁰ for the minus branch.
        let rho_bar = (proj * g0).scale_re(-1.0);
        let moved = transform_covariant(&rho_bar, &p).unwrap();
        let mut power = ComplexMatrix4::identity();
        for n in 1..=4 {
            power = power * moved;
            let t = power.trace();
            assert!((t.re - 1.0).abs() < 1e-10, "n = {n}: {t}");
            assert!(t.im.abs() < 1e-10);
        }
        // Rotations preserve the same traces.
        let rot = RotationParameters::new(2.1, Vec3::from_polar(1.0, 0.2)).unwrap();
        let rotated = rotate_covariant(&rho_bar, &rot);
        let mut power = ComplexMatrix4::identity();
        for _ in 1..=4 {
            power = power * rotated;
            assert!((power.trace().re - 1.0).abs() < 1e-10);
        }
    }
}
