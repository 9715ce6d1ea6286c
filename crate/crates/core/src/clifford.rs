//! Pauli and Dirac matrices as explicit Kronecker products.
//!
//! Everything is built in the Dirac (standard) representation with the parity
//! factor first: `β = γ⁰ = σz⊗I`, `αᵢ = σx⊗σᵢ`, `γⁱ = γ⁰αⁱ`, and
//! `γ⁵ = iγ⁰γ¹γ²γ³` evaluated by direct multiplication (which lands on
//! `σx⊗I`). The metric is `g = diag(1,−1,−1,−1)`, so
//! `{γ^μ, γ^ν} = 2g^{μν}I₄`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix2, ComplexMatrix4, C_I, C_ONE, C_ZERO};
use crate::spinors::FourMomentum;
use crate::vec3::Vec3;

/// Pauli matrix σᵢ for i ∈ {1,2,3}.
pub fn pauli(i: u8) -> Result<ComplexMatrix2> {
    let m = match i {
        1 => [[C_ZERO, C_ONE], [C_ONE, C_ZERO]],
        2 => [[C_ZERO, -C_I], [C_I, C_ZERO]],
        3 => [[C_ONE, C_ZERO], [C_ZERO, -C_ONE]],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "pauli index must be 1, 2 or 3, got {i}"
            )))
        }
    };
    Ok(ComplexMatrix2 { m })
}

/// σ·v = v_x σ₁ + v_y σ₂ + v_z σ₃.
pub fn pauli_dot(v: &Vec3) -> ComplexMatrix2 {
    ComplexMatrix2 {
        m: [
            [
                Complex64::new(v.z, 0.0),
                Complex64::new(v.x, -v.y),
            ],
            [
                Complex64::new(v.x, v.y),
                Complex64::new(-v.z, 0.0),
            ],
        ],
    }
}

/// Kronecker product with the parity factor first: the result acts on the
/// basis `{|+,↑⟩, |+,↓⟩, |−,↑⟩, |−,↓⟩}`.
pub fn kron(a: &ComplexMatrix2, b: &ComplexMatrix2) -> ComplexMatrix4 {
    let mut out = ComplexMatrix4::zeros();
    for pa in 0..2 {
        for pb in 0..2 {
            for sa in 0..2 {
                for sb in 0..2 {
                    out.m[2 * pa + sa][2 * pb + sb] = a.m[pa][pb] * b.m[sa][sb];
                }
            }
        }
    }
    out
}

/// γ^μ for μ ∈ {0,1,2,3} plus γ⁵ under the index 5.
pub fn gamma(mu: u8) -> Result<ComplexMatrix4> {
    match mu {
        0 => Ok(kron(&pauli(3)?, &ComplexMatrix2::identity())),
        1..=3 => {
            let g0 = gamma(0)?;
            let alpha = kron(&pauli(1)?, &pauli(mu)?);
            Ok(g0 * alpha)
        }
        5 => {
            // iγ⁰γ¹γ²γ³ by direct multiplication; no closed form is assumed.
            let p = gamma(0)? * gamma(1)? * gamma(2)? * gamma(3)?;
            Ok(p.scale(C_I))
        }
        _ => Err(Error::InvalidArgument(format!(
            "gamma index must be 0..3 or 5, got {mu}"
        ))),
    }
}

/// The spin-flip conjugator −iγ² = σy⊗σy (real, symmetric, squares to I₄).
pub fn minus_i_gamma2() -> ComplexMatrix4 {
    gamma(2).expect("index 2 is valid").scale(-C_I)
}

/// Named Dirac operator families indexed by a spatial direction j ∈ {1,2,3}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiracOperator {
    /// α_j = σx⊗σ_j.
    Alpha,
    /// Σ_j = γ⁵α_j = I⊗σ_j.
    BigSigma,
    /// K⁵_j = (i/4)[γ_j, γ⁰] = −(i/2)γ⁵Σ_j, the boost generator.
    K5,
}

/// Build α_j, Σ_j or K⁵_j.
pub fn dirac_operator(name: DiracOperator, j: u8) -> Result<ComplexMatrix4> {
    if !(1..=3).contains(&j) {
        return Err(Error::InvalidArgument(format!(
            "spatial index must be 1, 2 or 3, got {j}"
        )));
    }
    match name {
        DiracOperator::Alpha => Ok(kron(&pauli(1)?, &pauli(j)?)),
        DiracOperator::BigSigma => Ok(kron(&ComplexMatrix2::identity(), &pauli(j)?)),
        DiracOperator::K5 => {
            let gj = gamma(j)?;
            let g0 = gamma(0)?;
            let comm = gj * g0 - g0 * gj;
            Ok(comm.scale(C_I * Complex64::new(0.25, 0.0)))
        }
    }
}

/// Σ·v on the spin factor.
pub fn big_sigma_dot(v: &Vec3) -> ComplexMatrix4 {
    kron(&ComplexMatrix2::identity(), &pauli_dot(v))
}

/// Free-particle Hamiltonian H = p·(σx⊗σ) + m(σz⊗I); Hermitian, traceless,
/// eigenvalues ±E_p each doubly degenerate.
pub fn free_hamiltonian(p: &FourMomentum) -> ComplexMatrix4 {
    let kinetic = kron(&pauli(1).expect("valid"), &pauli_dot(&p.momentum()));
    let mass = kron(&pauli(3).expect("valid"), &ComplexMatrix2::identity())
        .scale_re(p.mass());
    kinetic + mass
}

/// Interaction fields evaluated at a single spacetime point, natural units.
///
/// Holds the couplings of the general interacting Hamiltonian: vector field
/// (a0, a), scalar `phi_s`, pseudoscalar `mu_ps`, pseudovector (q_pv, w),
/// and the non-minimal magnetic/electric couplings (b_field, e_field) with
/// strengths `kappa_a`, `zeta_a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldValues {
    pub a0: f64,
    pub a: Vec3,
    pub phi_s: f64,
    pub mu_ps: f64,
    pub q_pv: f64,
    pub w: Vec3,
    pub b_field: Vec3,
    pub e_field: Vec3,
    pub kappa_a: f64,
    pub zeta_a: f64,
}

impl FieldValues {
    /// All couplings switched off.
    pub fn zero() -> Self {
        FieldValues {
            a0: 0.0,
            a: Vec3::ZERO,
            phi_s: 0.0,
            mu_ps: 0.0,
            q_pv: 0.0,
            w: Vec3::ZERO,
            b_field: Vec3::ZERO,
            e_field: Vec3::ZERO,
            kappa_a: 0.0,
            zeta_a: 0.0,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.a0.is_finite()
            && self.a.is_finite()
            && self.phi_s.is_finite()
            && self.mu_ps.is_finite()
            && self.q_pv.is_finite()
            && self.w.is_finite()
            && self.b_field.is_finite()
            && self.e_field.is_finite()
            && self.kappa_a.is_finite()
            && self.zeta_a.is_finite()
    }
}

/// Assemble the general interacting Hamiltonian at one spacetime point with
/// the momentum operator replaced by the numeric plane-wave momentum:
///
/// `H = A⁰ I + β(m + φ_S) + α·(p − A) + iβγ⁵μ − γ⁵q + γ⁵α·W
///    + iγ·(ζ_a B + κ_a E) + γ⁵γ·(κ_a B − ζ_a E)`
pub fn general_hamiltonian(m: f64, momentum: &Vec3, f: &FieldValues) -> Result<ComplexMatrix4> {
    if m <= 0.0 || !m.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "mass must be positive and finite, got {m}"
        )));
    }
    if !f.is_finite() || !momentum.is_finite() {
        return Err(Error::NonFinite("general_hamiltonian fields"));
    }

    let id2 = ComplexMatrix2::identity();
    let beta = kron(&pauli(3)?, &id2);
    let g5 = gamma(5)?;

    let mut h = ComplexMatrix4::identity().scale_re(f.a0);
    h = h + beta.scale_re(m + f.phi_s);

    let kin = *momentum - f.a;
    h = h + kron(&pauli(1)?, &pauli_dot(&kin));

    h = h + (beta * g5).scale(C_I * Complex64::new(f.mu_ps, 0.0));
    h = h - g5.scale_re(f.q_pv);
    h = h + (g5 * kron(&pauli(1)?, &pauli_dot(&f.w)));

    // γ·v = v_x γ¹ + v_y γ² + v_z γ³
    let gamma_dot = |v: &Vec3| -> Result<ComplexMatrix4> {
        Ok(gamma(1)?.scale_re(v.x) + gamma(2)?.scale_re(v.y) + gamma(3)?.scale_re(v.z))
    };
    let v1 = f.b_field.scale(f.zeta_a) + f.e_field.scale(f.kappa_a);
    let v2 = f.b_field.scale(f.kappa_a) - f.e_field.scale(f.zeta_a);
    h = h + gamma_dot(&v1)?.scale(C_I);
    h = h + (g5 * gamma_dot(&v2)?);

    Ok(h)
}

/// Minkowski metric g = diag(1, −1, −1, −1).
pub fn metric(mu: usize, nu: usize) -> f64 {
    if mu != nu {
        0.0
    } else if mu == 0 {
        1.0
    } else {
        -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::real_eigenvalues4;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_two_explicit() {
        let s2 = pauli(2).unwrap();
        assert_eq!(s2.m[0][0], c(0.0, 0.0));
        assert_eq!(s2.m[0][1], c(0.0, -1.0));
        assert_eq!(s2.m[1][0], c(0.0, 1.0));
        assert_eq!(s2.m[1][1], c(0.0, 0.0));
    }

    #[test]
    fn pauli_algebra() {
        // σ₁σ₂ = iσ₃ and Tr σ₃ = 0.
        let lhs = pauli(1).unwrap() * pauli(2).unwrap();
        let rhs = pauli(3).unwrap().scale(C_I);
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
        assert_eq!(pauli(3).unwrap().trace(), c(0.0, 0.0));
        for i in 1..=3 {
            let s = pauli(i).unwrap();
            assert!((s * s).max_abs_diff(&ComplexMatrix2::identity()) < 1e-15);
            assert!(s.hermiticity_deviation() < 1e-15);
        }
    }

    #[test]
    fn pauli_rejects_bad_index() {
        assert!(pauli(0).is_err());
        assert!(pauli(4).is_err());
    }

    #[test]
    fn kron_identity_and_beta() {
        let id2 = ComplexMatrix2::identity();
        assert!(kron(&id2, &id2).max_abs_diff(&ComplexMatrix4::identity()) < 1e-15);
        let beta = kron(&pauli(3).unwrap(), &id2);
        let want = ComplexMatrix4::from_real([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
        ]);
        assert!(beta.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn kron_sigma_y_sigma_y() {
        // Direct expansion: real with anti-diagonal (−1, 1, 1, −1).
        let m = kron(&pauli(2).unwrap(), &pauli(2).unwrap());
        let want = ComplexMatrix4::from_real([
            [0.0, 0.0, 0.0, -1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0, 0.0],
        ]);
        assert!(m.max_abs_diff(&want) < 1e-15);
        assert!(m.max_imag() < 1e-15);
    }

    #[test]
    fn gamma_zero_is_beta() {
        let want = ComplexMatrix4::diag([c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)]);
        assert!(gamma(0).unwrap().max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn minus_i_gamma2_is_sigma_y_kron_sigma_y() {
        let lhs = minus_i_gamma2();
        let rhs = kron(&pauli(2).unwrap(), &pauli(2).unwrap());
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn gamma5_from_product_is_sigma_x_kron_identity() {
        let g5 = gamma(5).unwrap();
        let want = kron(&pauli(1).unwrap(), &ComplexMatrix2::identity());
        assert!(g5.max_abs_diff(&want) < 1e-14);
    }

    #[test]
    fn gamma_rejects_bad_index() {
        assert!(gamma(4).is_err());
        assert!(gamma(6).is_err());
    }

    #[test]
    fn anticommutation_relations() {
        let g: Vec<ComplexMatrix4> = (0..4).map(|mu| gamma(mu).unwrap()).collect();
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = g[mu] * g[nu] + g[nu] * g[mu];
                let want = ComplexMatrix4::identity().scale_re(2.0 * metric(mu, nu));
                assert!(
                    anti.max_abs_diff(&want) < 1e-12,
                    "{{γ{mu}, γ{nu}}} failed"
                );
            }
        }
    }

    #[test]
    fn alpha_beta_relations() {
        let beta = gamma(0).unwrap();
        let alphas: Vec<ComplexMatrix4> = (1..=3)
            .map(|j| dirac_operator(DiracOperator::Alpha, j).unwrap())
            .collect();
        for (i, ai) in alphas.iter().enumerate() {
            for (j, aj) in alphas.iter().enumerate() {
                let anti = *ai * *aj + *aj * *ai;
                let want = ComplexMatrix4::identity().scale_re(if i == j { 2.0 } else { 0.0 });
                assert!(anti.max_abs_diff(&want) < 1e-12);
            }
            let mixed = *ai * beta + beta * *ai;
            assert!(mixed.max_abs() < 1e-12, "α{i}β + βα{i} ≠ 0");
        }
        assert!((beta * beta).max_abs_diff(&ComplexMatrix4::identity()) < 1e-12);
    }

    #[test]
    fn gamma2_squares_to_minus_identity() {
        let g2 = gamma(2).unwrap();
        let want = ComplexMatrix4::identity().scale_re(-1.0);
        assert!((g2 * g2).max_abs_diff(&want) < 1e-12);
    }

    #[test]
    fn gamma5_anticommutes_with_gammas() {
        let g5 = gamma(5).unwrap();
        for mu in 0..4 {
            let g = gamma(mu).unwrap();
            let anti = g5 * g + g * g5;
            assert!(anti.max_abs() < 1e-12, "γ⁵ vs γ{mu}");
        }
    }

    #[test]
    fn big_sigma_three_is_diagonal() {
        let s3 = dirac_operator(DiracOperator::BigSigma, 3).unwrap();
        let want = ComplexMatrix4::diag([c(1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]);
        assert!(s3.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn k5_matches_gamma5_sigma_form() {
        let g5 = gamma(5).unwrap();
        for j in 1..=3 {
            let k5 = dirac_operator(DiracOperator::K5, j).unwrap();
            let sigma = dirac_operator(DiracOperator::BigSigma, j).unwrap();
            let alt = (g5 * sigma).scale(c(0.0, -0.5));
            assert!(k5.max_abs_diff(&alt) < 1e-14, "K⁵_{j}");
        }
    }

    #[test]
    fn alpha_squares_to_identity() {
        let a1 = dirac_operator(DiracOperator::Alpha, 1).unwrap();
        assert!((a1 * a1).max_abs_diff(&ComplexMatrix4::identity()) < 1e-15);
    }

    #[test]
    fn dirac_operator_rejects_bad_index() {
        assert!(dirac_operator(DiracOperator::Alpha, 0).is_err());
        assert!(dirac_operator(DiracOperator::K5, 4).is_err());
    }

    #[test]
    fn free_hamiltonian_rest_frame() {
        let p = FourMomentum::rest(1.0).unwrap();
        let h = free_hamiltonian(&p);
        let want = ComplexMatrix4::diag([c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)]);
        assert!(h.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn free_hamiltonian_spectrum() {
        // m = 1, p = 0.75 ẑ: eigenvalues ±1.25, each twice (numeric solve).
        let p = FourMomentum::new(1.0, Vec3::new(0.0, 0.0, 0.75)).unwrap();
        let h = free_hamiltonian(&p);
        assert!(h.hermiticity_deviation() < 1e-15);
        assert!(h.trace().norm() < 1e-15);
        let spec = real_eigenvalues4(&h);
        let want = [1.25, 1.25, -1.25, -1.25];
        for (g, w) in spec.values.iter().zip(want.iter()) {
            assert!((g - w).abs() < 1e-9, "{:?}", spec.values);
        }
    }

    #[test]
    fn free_hamiltonian_has_free_bispinor_eigenvectors() {
        // H(p) u_{+,s}(p) = +E_p u_{+,s}(p); the negative branch carries the
        // reversed spatial momentum: H(p) u_{−,s}(−p) = −E_p u_{−,s}(−p).
        use crate::spinors::{free_bispinor, Sign, SpinorLabel};
        let p = FourMomentum::new(0.9, Vec3::new(0.4, -0.7, 0.2)).unwrap();
        let h = free_hamiltonian(&p);
        let k = Vec3::from_polar(1.3, -0.8);
        for s in 1..=2u8 {
            let plus = free_bispinor(SpinorLabel::new(Sign::Plus, s).unwrap(), &p, &k).unwrap();
            let hu = h.mul_vec(&plus.c);
            for i in 0..4 {
                assert!((hu[i] - plus.c[i] * p.energy()).norm() < 1e-12);
            }
            let minus =
                free_bispinor(SpinorLabel::new(Sign::Minus, s).unwrap(), &p.reversed(), &k)
                    .unwrap();
            let hv = h.mul_vec(&minus.c);
            for i in 0..4 {
                assert!((hv[i] + minus.c[i] * p.energy()).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn general_hamiltonian_reduces_to_mass_term() {
        let h = general_hamiltonian(1.0, &Vec3::ZERO, &FieldValues::zero()).unwrap();
        let want = gamma(0).unwrap();
        assert!(h.max_abs_diff(&want) < 1e-14);
    }

    #[test]
    fn general_hamiltonian_hermitian_for_real_sector() {
        let mut f = FieldValues::zero();
        f.a0 = 0.4;
        f.a = Vec3::new(0.1, -0.2, 0.3);
        f.phi_s = 0.25;
        let h = general_hamiltonian(1.3, &Vec3::new(0.5, 0.0, -0.1), &f).unwrap();
        assert!(h.hermiticity_deviation() < 1e-14);
    }

    #[test]
    fn general_hamiltonian_rejects_bad_mass() {
        assert!(general_hamiltonian(0.0, &Vec3::ZERO, &FieldValues::zero()).is_err());
        assert!(general_hamiltonian(-1.0, &Vec3::ZERO, &FieldValues::zero()).is_err());
    }
}
