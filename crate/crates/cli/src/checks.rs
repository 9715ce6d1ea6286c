//! The verification registry: every invariant of the library, each with its
//! pinned tolerance, runnable as one deterministic seeded suite.
//!
//! Each check reports the largest residual it measured; it passes when the
//! residual stays below the check's tolerance. The `perturb` knob injects
//! noise into the spinor boost used by the `boost_consistency_relation`
//! check, as a self-test that the suite actually detects broken operators.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use bispinor::clifford::metric;
use bispinor::*;

use crate::report::{CheckResult, RunReport};

/// Sampling context handed to every check.
pub struct Ctx {
    rng: ChaCha12Rng,
    samples: u32,
    perturb: f64,
}

impl Ctx {
    fn random_unit(&mut self) -> Vec3 {
        let cos_theta: f64 = 1.0 - 2.0 * self.rng.random::<f64>();
        let theta = cos_theta.clamp(-1.0, 1.0).acos();
        let phi = std::f64::consts::TAU * self.rng.random::<f64>();
        Vec3::from_polar(theta, phi)
    }

    /// Random on-shell momentum with |p| ≤ 10 m.
    fn random_momentum(&mut self) -> FourMomentum {
        let m = 0.2 + 1.8 * self.rng.random::<f64>();
        let ratio = 10.0 * self.rng.random::<f64>();
        let dir = self.random_unit();
        FourMomentum::new(m, dir.scale(m * ratio)).expect("valid momentum")
    }

    fn random_rotation(&mut self) -> RotationParameters {
        let angle = 8.0 * self.rng.random::<f64>() - 4.0;
        RotationParameters::new(angle, self.random_unit()).expect("valid rotation")
    }

    fn random_label(&mut self) -> SpinorLabel {
        let sign = if self.rng.random::<bool>() { Sign::Plus } else { Sign::Minus };
        SpinorLabel::new(sign, 1 + (self.rng.random::<bool>() as u8)).expect("valid label")
    }

    fn random_pure_density(&mut self) -> SpinParityDensity {
        let mut v = [Complex64::new(0.0, 0.0); 4];
        for e in v.iter_mut() {
            *e = Complex64::new(
                self.rng.random::<f64>() - 0.5,
                self.rng.random::<f64>() - 0.5,
            );
        }
        let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for e in v.iter_mut() {
            *e /= norm;
        }
        let row = [v[0].conj(), v[1].conj(), v[2].conj(), v[3].conj()];
        SpinParityDensity::new(ComplexMatrix4::outer(&v, &row), Convention::Hermitian)
            .expect("pure state")
    }

    /// Rank-2 Hermitian state from two orthonormal random vectors.
    fn random_rank2_density(&mut self) -> SpinParityDensity {
        let mut v1 = [Complex64::new(0.0, 0.0); 4];
        let mut v2 = [Complex64::new(0.0, 0.0); 4];
        for e in v1.iter_mut().chain(v2.iter_mut()) {
            *e = Complex64::new(
                self.rng.random::<f64>() - 0.5,
                self.rng.random::<f64>() - 0.5,
            );
        }
        let norm1: f64 = v1.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for e in v1.iter_mut() {
            *e /= norm1;
        }
        let overlap: Complex64 = (0..4).map(|i| v1[i].conj() * v2[i]).sum();
        for i in 0..4 {
            v2[i] -= overlap * v1[i];
        }
        let norm2: f64 = v2.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for e in v2.iter_mut() {
            *e /= norm2;
        }
        let w = 0.05 + 0.9 * self.rng.random::<f64>();
        let r1 = [v1[0].conj(), v1[1].conj(), v1[2].conj(), v1[3].conj()];
        let r2 = [v2[0].conj(), v2[1].conj(), v2[2].conj(), v2[3].conj()];
        let m = ComplexMatrix4::outer(&v1, &r1).scale_re(w)
            + ComplexMatrix4::outer(&v2, &r2).scale_re(1.0 - w);
        SpinParityDensity::new(m, Convention::Hermitian).expect("rank-2 state")
    }
}

/// One registered invariant.
pub struct Check {
    pub name: &'static str,
    pub tolerance: f64,
    run: fn(&mut Ctx) -> f64,
}

/// The full registry; every invariant appears exactly once.
pub fn registry() -> Vec<Check> {
    vec![
        Check { name: "clifford_anticommutation", tolerance: 1e-12, run: clifford_anticommutation },
        Check { name: "clifford_alpha_beta_relations", tolerance: 1e-12, run: clifford_alpha_beta },
        Check { name: "clifford_gamma2_square", tolerance: 1e-12, run: clifford_gamma2_square },
        Check { name: "clifford_flip_matrix_real", tolerance: 1e-12, run: clifford_flip_matrix },
        Check { name: "clifford_gamma5_anticommutes", tolerance: 1e-12, run: clifford_gamma5 },
        Check { name: "clifford_free_hamiltonian", tolerance: 1e-12, run: clifford_free_hamiltonian },
        Check { name: "spinor_two_spinor_orthonormal", tolerance: 1e-12, run: spinor_two_spinor },
        Check { name: "spinor_dirac_equation", tolerance: 1e-10, run: spinor_dirac_equation },
        Check { name: "spinor_norm_dichotomy", tolerance: 1e-10, run: spinor_norm_dichotomy },
        Check { name: "spinor_closure_closed_form", tolerance: 1e-10, run: spinor_closure },
        Check { name: "spinor_closure_idempotent", tolerance: 1e-10, run: spinor_closure_idempotent },
        Check { name: "boost_two_forms_agree", tolerance: 1e-12, run: boost_two_forms },
        Check { name: "boost_consistency_relation", tolerance: 1e-10, run: boost_consistency },
        Check { name: "boost_rest_to_free", tolerance: 1e-12, run: boost_rest_to_free },
        Check { name: "lorentz_group_properties", tolerance: 1e-12, run: lorentz_group_properties },
        Check { name: "lorentz_flip_intertwining", tolerance: 1e-12, run: lorentz_flip_intertwining },
        Check { name: "lorentz_boost_composition", tolerance: 1e-10, run: lorentz_boost_composition },
        Check { name: "density_bloch_roundtrip", tolerance: 1e-12, run: density_bloch_roundtrip },
        Check { name: "density_pure_bloch_squares", tolerance: 1e-10, run: density_pure_bloch_squares },
        Check { name: "density_rest_convention_equality", tolerance: 1e-12, run: density_rest_equality },
        Check { name: "density_partial_trace", tolerance: 1e-10, run: density_partial_trace },
        Check { name: "covariant_unipotent_traces", tolerance: 1e-10, run: covariant_unipotent },
        Check { name: "hermitian_purity_counterexample", tolerance: 1e-9, run: hermitian_purity_counterexample },
        Check { name: "concurrence_flip_trace", tolerance: 1e-10, run: concurrence_flip_trace },
        Check { name: "covariant_concurrence_invariance", tolerance: 1e-9, run: covariant_concurrence_invariance },
        Check { name: "hermitian_boost_noninvariance", tolerance: 1e-9, run: hermitian_boost_noninvariance },
        Check { name: "hermitian_rotation_invariance", tolerance: 1e-10, run: hermitian_rotation_invariance },
        Check { name: "rank2_equals_wootters", tolerance: 1e-8, run: rank2_equals_wootters },
        Check { name: "bell_mixture_analytic", tolerance: 1e-10, run: bell_mixture_analytic },
        Check { name: "eof_monotone", tolerance: 1e-12, run: eof_monotone },
        Check { name: "quantifier_entropy_eof", tolerance: 1e-8, run: quantifier_entropy_eof },
        Check { name: "quantifier_bloch_agreement", tolerance: 1e-8, run: quantifier_bloch_agreement },
        Check { name: "magnetic_eigenvalue_property", tolerance: 1e-12, run: magnetic_eigenvalue_property },
        Check { name: "magnetic_bloch_closed_forms", tolerance: 1e-9, run: magnetic_bloch_closed_forms },
        Check { name: "magnetic_projection_concurrence", tolerance: 1e-9, run: magnetic_projection_concurrence },
        Check { name: "magnetic_covariant_all_directions", tolerance: 1e-9, run: magnetic_all_directions },
    ]
}

/// Run the whole registry with one seed. Deterministic: each check gets its
/// own stream derived from the seed, so the registry order cannot perturb
/// the sampling.
pub fn run_all(seed: u64, samples: u32, perturb: f64) -> RunReport {
    let mut checks = Vec::new();
    for (index, check) in registry().into_iter().enumerate() {
        let mut ctx = Ctx {
            rng: ChaCha12Rng::seed_from_u64(seed ^ ((index as u64 + 1) << 32)),
            samples: samples.max(1),
            perturb,
        };
        let residual = (check.run)(&mut ctx);
        checks.push(CheckResult {
            name: check.name.to_string(),
            passed: residual < check.tolerance,
            residual,
            tolerance: check.tolerance,
        });
    }
    let all_passed = checks.iter().all(|c| c.passed);
    RunReport {
        seed,
        samples,
        perturb,
        checks,
        all_passed,
    }
}

/// Run a single named check (used by the acceptance suite).
pub fn run_named(name: &str, seed: u64, samples: u32) -> Option<CheckResult> {
    run_all(seed, samples, 0.0)
        .checks
        .into_iter()
        .find(|c| c.name == name)
}

// ─── clifford ────────────────────────────────────────────────────────────

fn clifford_anticommutation(_: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for mu in 0..4usize {
        for nu in 0..4usize {
            let gm = gamma(mu as u8).unwrap();
            let gn = gamma(nu as u8).unwrap();
            let anti = gm * gn + gn * gm;
            let want = ComplexMatrix4::identity().scale_re(2.0 * metric(mu, nu));
            worst = worst.max(anti.max_abs_diff(&want));
        }
    }
    worst
}

fn clifford_alpha_beta(_: &mut Ctx) -> f64 {
    let beta = gamma(0).unwrap();
    let mut worst = (beta * beta).max_abs_diff(&ComplexMatrix4::identity());
    for i in 1..=3u8 {
        let ai = dirac_operator(DiracOperator::Alpha, i).unwrap();
        worst = worst.max((ai * beta + beta * ai).max_abs());
        for j in 1..=3u8 {
            let aj = dirac_operator(DiracOperator::Alpha, j).unwrap();
            let want =
                ComplexMatrix4::identity().scale_re(if i == j { 2.0 } else { 0.0 });
            worst = worst.max((ai * aj + aj * ai).max_abs_diff(&want));
        }
    }
    worst
}

fn clifford_gamma2_square(_: &mut Ctx) -> f64 {
    let g2 = gamma(2).unwrap();
    (g2 * g2).max_abs_diff(&ComplexMatrix4::identity().scale_re(-1.0))
}

fn clifford_flip_matrix(_: &mut Ctx) -> f64 {
    let flip = minus_i_gamma2();
    let want = kron(&pauli(2).unwrap(), &pauli(2).unwrap());
    flip.max_abs_diff(&want).max(flip.max_imag())
}

fn clifford_gamma5(_: &mut Ctx) -> f64 {
    let g5 = gamma(5).unwrap();
    let mut worst = 0.0f64;
    for mu in 0..4u8 {
        let g = gamma(mu).unwrap();
        worst = worst.max((g5 * g + g * g5).max_abs());
    }
    worst
}

fn clifford_free_hamiltonian(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        let h = free_hamiltonian(&p);
        worst = worst.max(h.hermiticity_deviation());
        worst = worst.max(h.trace().norm());
    }
    worst
}

// ─── spinors ─────────────────────────────────────────────────────────────

fn spinor_two_spinor(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let theta = std::f64::consts::PI * ctx.rng.random::<f64>();
        let phi = std::f64::consts::TAU * ctx.rng.random::<f64>();
        let chi1 = two_spinor(1, theta, phi).unwrap();
        let chi2 = two_spinor(2, theta, phi).unwrap();
        worst = worst.max((chi1.norm_sq() - 1.0).abs());
        worst = worst.max((chi2.norm_sq() - 1.0).abs());
        worst = worst.max(chi1.dot(&chi2).norm());
    }
    worst
}

fn spinor_dirac_equation(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        let k = ctx.random_unit();
        let lab = ctx.random_label();
        let u = free_bispinor(lab, &p, &k).unwrap();
        let op = slashed_momentum(&p)
            - ComplexMatrix4::identity().scale_re(lab.sign.factor() * p.mass());
        let res = op.mul_vec(&u.c);
        let norm: f64 = res.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        worst = worst.max(norm);
    }
    worst
}

fn spinor_norm_dichotomy(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        let k = ctx.random_unit();
        for sign in [Sign::Plus, Sign::Minus] {
            for s in 1..=2u8 {
                for r in 1..=2u8 {
                    let us = free_bispinor(SpinorLabel::new(sign, s).unwrap(), &p, &k).unwrap();
                    let ur = free_bispinor(SpinorLabel::new(sign, r).unwrap(), &p, &k).unwrap();
                    let delta = if s == r { 1.0 } else { 0.0 };
                    let dag = us.dagger_dot(&ur)
                        - Complex64::new(p.energy() / p.mass() * delta, 0.0);
                    let adj = us.adjoint_dot(&ur)
                        - Complex64::new(sign.factor() * delta, 0.0);
                    worst = worst.max(dag.norm());
                    worst = worst.max(adj.norm());
                    let opposite = free_bispinor(
                        SpinorLabel::new(sign.flipped(), r).unwrap(),
                        &p.reversed(),
                        &k,
                    )
                    .unwrap();
                    worst = worst.max(us.dagger_dot(&opposite).norm());
                }
            }
        }
    }
    worst
}

fn spinor_closure(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        let slashed = slashed_momentum(&p).scale_re(1.0 / p.mass());
        for sign in [Sign::Plus, Sign::Minus] {
            let sum = closure_matrix(sign, &p).unwrap();
            let want =
                (ComplexMatrix4::identity() + slashed.scale_re(sign.factor())).scale_re(0.5);
            worst = worst.max(sum.max_abs_diff(&want));
        }
    }
    worst
}

fn spinor_closure_idempotent(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        for sign in [Sign::Plus, Sign::Minus] {
            let m = closure_matrix(sign, &p).unwrap();
            worst = worst.max((m * m).max_abs_diff(&m));
        }
    }
    worst
}

// ─── lorentz ─────────────────────────────────────────────────────────────

fn boost_two_forms(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        let hyper = boost_operator_params(&rapidity_of(&p));
        let g0 = gamma(0).unwrap();
        let closed = (slashed_momentum(&p) * g0
            + ComplexMatrix4::identity().scale_re(p.mass()))
        .scale_re(1.0 / (2.0 * p.mass() * (p.mass() + p.energy())).sqrt());
        worst = worst.max(hyper.max_abs_diff(&closed));
    }
    worst
}

fn boost_consistency(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        let mut s = boost_operator(&p).unwrap();
        if ctx.perturb != 0.0 {
            // Fault injection: additive noise on every entry.
            for i in 0..4 {
                for j in 0..4 {
                    s.m[i][j] += Complex64::new(
                        ctx.perturb * (ctx.rng.random::<f64>() - 0.5),
                        ctx.perturb * (ctx.rng.random::<f64>() - 0.5),
                    );
                }
            }
        }
        let s_inv = spinor_inverse(&s);
        let lambda = spacetime_boost(&p);
        for mu in 0..4usize {
            let lhs = s_inv * gamma(mu as u8).unwrap() * s;
            let mut rhs = ComplexMatrix4::zeros();
            for zeta in 0..4usize {
                rhs = rhs + gamma(zeta as u8).unwrap().scale_re(lambda.m[mu][zeta]);
            }
            worst = worst.max(lhs.max_abs_diff(&rhs));
        }
    }
    worst
}

fn boost_rest_to_free(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        let k = ctx.random_unit();
        let lab = ctx.random_label();
        let s = boost_operator(&p).unwrap();
        let rest = rest_bispinor(lab, &k).unwrap();
        let moved = s.mul_vec(&rest.c);
        let want = free_bispinor(lab, &p, &k).unwrap();
        for i in 0..4 {
            worst = worst.max((moved[i] - want.c[i]).norm());
        }
    }
    worst
}

fn lorentz_group_properties(ctx: &mut Ctx) -> f64 {
    let id = ComplexMatrix4::identity();
    let g0 = gamma(0).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        let s = boost_operator(&p).unwrap();
        worst = worst.max(s.hermiticity_deviation());
        worst = worst.max((s.det() - Complex64::new(1.0, 0.0)).norm());
        worst = worst.max((s * spinor_inverse(&s)).max_abs_diff(&id));
        worst = worst.max(spacetime_boost(&p).metric_deviation());

        let r = rotation_operator(&ctx.random_rotation());
        worst = worst.max((r * r.dagger()).max_abs_diff(&id));
        worst = worst.max((r * g0 - g0 * r).max_abs());
        worst = worst.max((r * spinor_inverse(&r)).max_abs_diff(&id));
    }
    worst
}

fn lorentz_flip_intertwining(ctx: &mut Ctx) -> f64 {
    let flip = minus_i_gamma2();
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        for s in [
            boost_operator(&p).unwrap(),
            rotation_operator(&ctx.random_rotation()),
        ] {
            worst = worst.max((flip * s).max_abs_diff(&(s.conj() * flip)));
            worst = worst.max((flip * s.dagger()).max_abs_diff(&(s.transpose() * flip)));
        }
    }
    worst
}

fn lorentz_boost_composition(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let axis = ctx.random_unit();
        let eta1 = 2.0 * ctx.rng.random::<f64>();
        let eta2 = 2.0 * ctx.rng.random::<f64>();
        let lhs = boost_operator_params(&BoostParameters::new(eta1, axis).unwrap())
            * boost_operator_params(&BoostParameters::new(eta2, axis).unwrap());
        let rhs = boost_operator_params(&BoostParameters::new(eta1 + eta2, axis).unwrap());
        worst = worst.max(lhs.max_abs_diff(&rhs));
    }
    worst
}

// ─── density ─────────────────────────────────────────────────────────────

fn density_bloch_roundtrip(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        let k = ctx.random_unit();
        let lab = ctx.random_label();
        let u = free_bispinor(lab, &p, &k).unwrap();
        for convention in [Convention::Hermitian, Convention::Covariant] {
            let rho = density_from_bispinor(&u, lab.sign, convention).unwrap();
            let d = bloch_decompose(&rho);
            worst = worst.max(d.reconstruct().max_abs_diff(rho.matrix()));
        }
    }
    worst
}

fn density_pure_bloch_squares(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let rho = ctx.random_pure_density();
        let d = bloch_decompose(&rho);
        let a2: f64 = d.a.iter().map(|z| z.norm_sqr()).sum();
        let b2: f64 = d.b.iter().map(|z| z.norm_sqr()).sum();
        worst = worst.max((a2 - b2).abs()).max(d.max_imag());
    }
    worst
}

fn density_rest_equality(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let k = ctx.random_unit();
        let lab = ctx.random_label();
        let u = rest_bispinor(lab, &k).unwrap();
        let proj = rest_projector(lab.sign, lab.s, &k).unwrap();
        for convention in [Convention::Hermitian, Convention::Covariant] {
            let rho = density_from_bispinor(&u, lab.sign, convention).unwrap();
            worst = worst.max(rho.matrix().max_abs_diff(&proj));
        }
    }
    worst
}

fn density_partial_trace(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let rho = ctx.random_rank2_density();
        for keep in [Subsystem::Parity, Subsystem::Spin] {
            let reduced = partial_trace(&rho, keep).unwrap();
            worst = worst.max((reduced.trace() - Complex64::new(1.0, 0.0)).norm());
            worst = worst.max(reduced.hermiticity_deviation());
            let ev = reduced.eigenvalues_hermitian();
            worst = worst.max((-ev[1]).max(0.0));
        }
    }
    worst
}

fn covariant_unipotent(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let k = ctx.random_unit();
        let lab = ctx.random_label();
        let u = rest_bispinor(lab, &k).unwrap();
        let rho = density_from_bispinor(&u, lab.sign, Convention::Covariant).unwrap();
        let boosted = rho.boost(&ctx.random_momentum()).unwrap();
        let rotated = rho.rotate(&ctx.random_rotation()).unwrap();
        for n in 1..=4 {
            worst = worst.max((trace_power(&boosted, n).unwrap() - 1.0).abs());
            worst = worst.max((trace_power(&rotated, n).unwrap() - 1.0).abs());
        }
    }
    worst
}

fn hermitian_purity_counterexample(_: &mut Ctx) -> f64 {
    // q = ½ parity mixture at k̂ = ẑ, boosted with m = 1, p = 0.75 ẑ:
    // purity 0.68 = ½(1 + tanh² ln 2), against 0.5 at rest.
    let p = FourMomentum::new(1.0, Vec3::new(0.0, 0.0, 0.75)).unwrap();
    let mut boosted_terms = Vec::new();
    let mut rest_terms = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        let rho = SpinParityDensity::new(
            rest_projector(sign, 1, &Vec3::Z).unwrap(),
            Convention::Hermitian,
        )
        .unwrap();
        boosted_terms.push(rho.boost(&p).unwrap());
        rest_terms.push(rho);
    }
    let boosted_refs: Vec<(f64, &SpinParityDensity)> =
        boosted_terms.iter().map(|r| (0.5, r)).collect();
    let rest_refs: Vec<(f64, &SpinParityDensity)> = rest_terms.iter().map(|r| (0.5, r)).collect();
    let purity = trace_power(&mix(&boosted_refs).unwrap(), 2).unwrap();
    let rest_purity = trace_power(&mix(&rest_refs).unwrap(), 2).unwrap();

    let mut residual = (purity - 0.68).abs().max((rest_purity - 0.5).abs());
    // The boost must move the purity by a detectable margin.
    if purity - rest_purity <= 1e-3 {
        residual = residual.max(1.0);
    }
    residual
}

// ─── concurrence ─────────────────────────────────────────────────────────

fn concurrence_flip_trace(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let p = ctx.random_momentum();
        let k = ctx.random_unit();
        let lab = ctx.random_label();
        let u = free_bispinor(lab, &p, &k).unwrap();
        for convention in [Convention::Hermitian, Convention::Covariant] {
            let rho = density_from_bispinor(&u, lab.sign, convention).unwrap();
            let flipped = spin_flip(&rho);
            worst = worst.max((flipped.trace() - Complex64::new(1.0, 0.0)).norm());
        }
        let mixed = ctx.random_rank2_density();
        worst = worst
            .max((spin_flip(&mixed).trace() - Complex64::new(1.0, 0.0)).norm());
    }
    worst
}

/// Covariant spinor-state families whose concurrence traces must freeze.
fn covariant_families() -> Vec<(&'static str, SpinParityDensity)> {
    let setup = MagneticSetup::new(1.0, 0.3, Vec3::Z).unwrap();
    let rest = FourMomentum::rest(1.0).unwrap();
    let khat = Vec3::from_polar(1.1, 0.7);
    let u = rest_bispinor(SpinorLabel::new(Sign::Plus, 1).unwrap(), &khat).unwrap();
    vec![
        (
            "free",
            density_from_bispinor(&u, Sign::Plus, Convention::Covariant).unwrap(),
        ),
        (
            "magnetic",
            magnetic_rest_density(Sign::Minus, 2, &setup, Convention::Covariant).unwrap(),
        ),
        (
            "parity_mix",
            projected_mixture(
                ProjectedMixture::ParityMix { s: 1 },
                &setup,
                &rest,
                0.5,
                Convention::Covariant,
            )
            .unwrap(),
        ),
        (
            "helicity_mix",
            projected_mixture(
                ProjectedMixture::HelicityMix { sign: Sign::Plus },
                &setup,
                &rest,
                0.3,
                Convention::Covariant,
            )
            .unwrap(),
        ),
    ]
}

fn covariant_concurrence_invariance(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for (_, rest) in covariant_families() {
        let base = flip_product(&rest);
        let t1 = base.trace().re;
        let t2 = (base * base).trace().re;
        for _ in 0..ctx.samples {
            let moved = if ctx.rng.random::<bool>() {
                rest.boost(&ctx.random_momentum()).unwrap()
            } else {
                rest.rotate(&ctx.random_rotation()).unwrap()
            };
            let prod = flip_product(&moved);
            worst = worst.max((prod.trace().re - t1).abs());
            worst = worst.max(((prod * prod).trace().re - t2).abs());
        }
    }
    worst
}

fn hermitian_boost_noninvariance(_: &mut Ctx) -> f64 {
    // k̂ = x̂ ⊥ p̂ = ẑ free state: C = 0 at rest, |p|/E = 0.6 at η = ln 2.
    let u0 = rest_bispinor(SpinorLabel::new(Sign::Plus, 1).unwrap(), &Vec3::X).unwrap();
    let rest = density_from_bispinor(&u0, Sign::Plus, Convention::Hermitian).unwrap();
    let c_rest = concurrence_pure(&rest).unwrap().value;

    let p = FourMomentum::new(1.0, Vec3::new(0.0, 0.0, 0.75)).unwrap();
    let boosted = rest.boost(&p).unwrap();
    let c_boosted = concurrence_pure(&boosted).unwrap().value;
    let mut residual = c_rest.abs().max((c_boosted - 0.6).abs());

    // Same witness for the magnetic eigenstate boosted across the field.
    let setup = MagneticSetup::new(1.0, 0.3, Vec3::Z).unwrap();
    let transverse = FourMomentum::new(1.0, Vec3::new(0.75, 0.0, 0.0)).unwrap();
    let magnetic =
        boosted_magnetic_density(Sign::Plus, 1, &setup, &transverse, Convention::Hermitian)
            .unwrap();
    residual = residual.max((concurrence_pure(&magnetic).unwrap().value - 0.6).abs());
    residual
}

fn hermitian_rotation_invariance(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let rho = ctx.random_rank2_density();
        let c0 = concurrence_wootters(&rho).unwrap().value;
        let rotated = rho.rotate(&ctx.random_rotation()).unwrap();
        let c1 = concurrence_wootters(&rotated).unwrap().value;
        worst = worst.max((c0 - c1).abs());
    }
    worst
}

fn rank2_equals_wootters(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..(2 * ctx.samples) {
        let rho = ctx.random_rank2_density();
        let a = concurrence_rank2(&rho).unwrap().value;
        let b = concurrence_wootters(&rho).unwrap().value;
        worst = worst.max((a - b).abs());
    }
    worst
}

fn bell_projector(sign: f64) -> SpinParityDensity {
    let inv = 1.0 / 2.0f64.sqrt();
    let v = [
        Complex64::new(inv, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(sign * inv, 0.0),
    ];
    let row = [v[0].conj(), v[1].conj(), v[2].conj(), v[3].conj()];
    SpinParityDensity::new(ComplexMatrix4::outer(&v, &row), Convention::Hermitian).unwrap()
}

fn bell_mixture_analytic(_: &mut Ctx) -> f64 {
    let plus = bell_projector(1.0);
    let minus = bell_projector(-1.0);
    let mut worst = 0.0f64;
    let mut q = 0.05f64;
    while q < 1.0 {
        let mixed = mix(&[(q, &plus), (1.0 - q, &minus)]).unwrap();
        let want = (2.0 * q - 1.0).abs();
        worst = worst.max((concurrence_wootters(&mixed).unwrap().value - want).abs());
        worst = worst.max((concurrence_rank2(&mixed).unwrap().value - want).abs());
        q += 0.05;
    }
    worst
}

fn eof_monotone(_: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    let mut prev = 0.0f64;
    let mut ci = 0.0f64;
    while ci <= 1.0 + 1e-12 {
        let e = eof_from_concurrence(ci.min(1.0)).unwrap();
        worst = worst.max(prev - e);
        prev = e;
        ci += 1e-3;
    }
    worst
}

fn quantifier_entropy_eof(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let rho = ctx.random_pure_density();
        let c = concurrence_pure(&rho).unwrap().value;
        let entropy = entanglement_entropy(&rho).unwrap();
        worst = worst.max((entropy - eof_from_concurrence(c).unwrap()).abs());
    }
    worst
}

fn quantifier_bloch_agreement(ctx: &mut Ctx) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples {
        let rho = ctx.random_pure_density();
        let c = concurrence_pure(&rho).unwrap().value;
        let d = bloch_decompose(&rho);
        worst = worst.max((concurrence_from_bloch(&d).unwrap().value - c).abs());
    }
    worst
}

// ─── magnetic ────────────────────────────────────────────────────────────

fn magnetic_eigenvalue_property(_: &mut Ctx) -> f64 {
    let setup = MagneticSetup::new(1.0, 0.3, Vec3::new(0.2, -0.4, 0.7)).unwrap();
    let h = magnetic_hamiltonian(&setup);
    let mub = setup.coupling() * setup.field_magnitude();
    let mut worst = 0.0f64;
    for convention in [Convention::Hermitian, Convention::Covariant] {
        for sign in [Sign::Plus, Sign::Minus] {
            for s in 1..=2u8 {
                let rho = magnetic_rest_density(sign, s, &setup, convention).unwrap();
                let want = sign.factor()
                    * (setup.mass() + if s == 1 { mub } else { -mub });
                let got = (*rho.matrix() * h).trace();
                worst = worst.max((got.re - want).abs()).max(got.im.abs());
            }
        }
    }
    worst
}

fn magnetic_bloch_closed_forms(ctx: &mut Ctx) -> f64 {
    let setup = MagneticSetup::new(1.0, 0.3, Vec3::Z).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples.min(20) {
        // p ∥ B̂ with random magnitude, either orientation.
        let pz = 3.0 * (ctx.rng.random::<f64>() - 0.5);
        let p = FourMomentum::new(1.0, Vec3::new(0.0, 0.0, pz)).unwrap();
        for convention in [Convention::Hermitian, Convention::Covariant] {
            for sign in [Sign::Plus, Sign::Minus] {
                for s in 1..=2u8 {
                    let rho =
                        boosted_magnetic_density(sign, s, &setup, &p, convention).unwrap();
                    let d = bloch_decompose(&rho);
                    let (a, b) = closed_form_bloch(sign, s, &setup, &p, convention).unwrap();
                    for i in 0..3 {
                        worst = worst.max((d.a[i] - a[i]).norm());
                        worst = worst.max((d.b[i] - b[i]).norm());
                    }
                    if convention == Convention::Covariant {
                        worst = worst.max((d.a_square() - Complex64::new(1.0, 0.0)).norm());
                        worst = worst.max((d.b_square() - Complex64::new(1.0, 0.0)).norm());
                    }
                }
            }
        }
    }
    worst
}

fn magnetic_projection_concurrence(ctx: &mut Ctx) -> f64 {
    let setup = MagneticSetup::new(1.0, 0.3, Vec3::Z).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples.min(20) {
        let eta = 2.5 * ctx.rng.random::<f64>();
        let p = FourMomentum::from_rapidity(1.0, eta, &Vec3::Z).unwrap();
        for kind in [
            ProjectedMixture::ParityMix { s: 1 },
            ProjectedMixture::ParityMix { s: 2 },
            ProjectedMixture::HelicityMix { sign: Sign::Plus },
            ProjectedMixture::HelicityMix { sign: Sign::Minus },
        ] {
            let mixed =
                projected_mixture(kind, &setup, &p, 0.5, Convention::Covariant).unwrap();
            let c = concurrence_rank2(&mixed).unwrap();
            worst = worst.max(c.value * c.value);
        }
    }
    worst
}

fn magnetic_all_directions(ctx: &mut Ctx) -> f64 {
    // Covariant concurrence of boosted pure eigenstates vanishes for every
    // boost direction, not only p ∥ B̂.
    let setup = MagneticSetup::new(1.0, 0.3, Vec3::Z).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..ctx.samples.min(25) {
        let p = FourMomentum::new(1.0, ctx.random_unit().scale(2.0 * ctx.rng.random::<f64>()))
            .unwrap();
        let lab = ctx.random_label();
        let rho =
            boosted_magnetic_density(lab.sign, lab.s, &setup, &p, Convention::Covariant).unwrap();
        let c = concurrence_pure(&rho).unwrap();
        worst = worst.max(c.value * c.value);
    }
    worst
}
