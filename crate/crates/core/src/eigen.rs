//! Eigenvalues of 4×4 matrices with real spectrum.
//!
//! The quantifier pipeline only ever needs eigenvalues of two kinds of 4×4
//! matrices: Hermitian ones (densities, `M†M` for singular values) and
//! products `ρρ̃` whose spectrum is real and non-negative. For that fixed-size
//! problem the characteristic polynomial route beats a general eigensolver:
//! the coefficients come from traces of matrix powers (Faddeev–LeVerrier /
//! Newton identities) and the quartic is solved in closed form with a few
//! guarded Newton polishing steps.
//!
//! Zero eigenvalues of rank-deficient inputs are the common case here
//! (projectors, rank-2 mixtures), so the solver deflates trailing
//! coefficients that sit below the trace-noise floor before factoring, and
//! each factoring branch polishes against its own deflated polynomial.

use crate::matrix::ComplexMatrix4;

/// Trailing coefficients below this (relative to the root scale) deflate a zero root.
const DEFLATE_TOL: f64 = 1e-13;

/// Real spectrum of a 4×4 matrix plus the residues discarded on the way.
#[derive(Clone, Copy, Debug)]
pub struct RealSpectrum {
    /// Eigenvalues, descending.
    pub values: [f64; 4],
    /// Largest imaginary magnitude discarded from the trace powers.
    pub trace_residual: f64,
    /// Magnitude of any complex-pair imaginary part absorbed by clamping.
    pub complex_residual: f64,
}

/// Coefficients `c` of `λ⁴ + c[3]λ³ + c[2]λ² + c[1]λ + c[0] = det(λI − M)`
/// from traces of matrix powers, with the imaginary residue of those traces.
pub fn char_poly_coeffs(m: &ComplexMatrix4) -> ([f64; 4], f64) {
    let m2 = *m * *m;
    let m3 = m2 * *m;
    let m4 = m3 * *m;
    let t = [m.trace(), m2.trace(), m3.trace(), m4.trace()];
    let residual = t.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    let [t1, t2, t3, t4] = [t[0].re, t[1].re, t[2].re, t[3].re];

    let c3 = -t1;
    let c2 = (t1 * t1 - t2) / 2.0;
    let c1 = -(t1 * t1 * t1 - 3.0 * t1 * t2 + 2.0 * t3) / 6.0;
    let c0 = (t1.powi(4) - 6.0 * t1 * t1 * t2 + 3.0 * t2 * t2 + 8.0 * t1 * t3 - 6.0 * t4) / 24.0;
    ([c0, c1, c2, c3], residual)
}

/// All eigenvalues of a matrix with (numerically) real spectrum, descending.
pub fn real_eigenvalues4(m: &ComplexMatrix4) -> RealSpectrum {
    let (c, trace_residual) = char_poly_coeffs(m);
    // Coefficient noise is absolute in the matrix scale (it comes from the
    // trace powers), not relative to the root magnitudes.
    let noise_scale = m.max_abs().max(1.0);
    let (values, complex_residual) = solve_quartic_with_noise(c, noise_scale);
    RealSpectrum {
        values,
        trace_residual,
        complex_residual,
    }
}

/// Squared singular values of `m` (eigenvalues of `m†m`), descending, clamped at 0.
pub fn singular_values_sq(m: &ComplexMatrix4) -> [f64; 4] {
    let gram = m.dagger() * *m;
    let mut v = real_eigenvalues4(&gram).values;
    for x in v.iter_mut() {
        *x = x.max(0.0);
    }
    v
}

/// Fraction of the squared Frobenius mass carried by the two largest singular values.
pub fn rank2_mass_fraction(m: &ComplexMatrix4) -> f64 {
    let s = singular_values_sq(m);
    let total: f64 = s.iter().sum();
    if total <= 0.0 {
        return 1.0;
    }
    (s[0] + s[1]) / total
}

/// Roots of `λ⁴ + c[3]λ³ + c[2]λ² + c[1]λ + c[0]`, all assumed real, sorted
/// descending. The second return value bounds the imaginary part of any
/// complex pair that had to be flattened onto the real axis.
pub fn solve_real_rooted_quartic(c: [f64; 4]) -> ([f64; 4], f64) {
    solve_quartic_with_noise(c, root_scale(&c).max(1.0))
}

/// `solve_real_rooted_quartic` with an explicit noise scale: a coefficient of
/// degree d below `1e−13 · noise_scale^d` counts as an exact zero.
///
/// Trailing coefficients below the floor deflate zero roots one by one (the
/// spectra handled here are routinely rank-deficient). Each branch polishes
/// against its own deflated polynomial: polishing a deflated root on the
/// full quartic would faithfully chase the noise in the dropped
/// coefficients: a root near other roots has a derivative as small as the
/// product of its gaps, so even 1e−17 of dropped constant term can displace
/// it by 1e−9.
pub fn solve_quartic_with_noise(c: [f64; 4], noise_scale: f64) -> ([f64; 4], f64) {
    let s = noise_scale.max(f64::MIN_POSITIVE);
    let floor = |deg: i32| DEFLATE_TOL * s.powi(deg);

    let (mut roots, complex_residual) = if c[0].abs() < floor(4) {
        // λ · (λ³ + c3λ² + c2λ + c1)
        if c[1].abs() < floor(3) {
            // λ² · (λ² + c3λ + c2)
            if c[2].abs() < floor(2) {
                // λ³ · (λ + c3)
                ([-c[3], 0.0, 0.0, 0.0], 0.0)
            } else {
                // The stable quadratic formula is already at coefficient
                // precision; nothing to polish.
                let (r, res) = solve_quadratic(c[3], c[2]);
                ([r.0, r.1, 0.0, 0.0], res)
            }
        } else {
            let mut cr = solve_real_cubic(c[3], c[2], c[1]);
            for r in cr.iter_mut() {
                *r = newton_polish(*r, &[0.0, c[1], c[2], c[3]], Degree::Cubic);
            }
            ([cr[0], cr[1], cr[2], 0.0], 0.0)
        }
    } else {
        let (mut r, res) = ferrari(c, s);
        for x in r.iter_mut() {
            *x = newton_polish(*x, &c, Degree::Quartic);
        }
        (r, res)
    };

    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
    (roots, complex_residual)
}

fn root_scale(c: &[f64; 4]) -> f64 {
    let mut s = 0.0f64;
    s = s.max(c[3].abs());
    s = s.max(c[2].abs().sqrt());
    s = s.max(c[1].abs().powf(1.0 / 3.0));
    s = s.max(c[0].abs().powf(0.25));
    s
}

/// Ferrari factorization of a quartic with real roots.
fn ferrari(c: [f64; 4], scale: f64) -> ([f64; 4], f64) {
    let [c0, c1, c2, c3] = c;
    // Depress: λ = y − c3/4  →  y⁴ + p y² + q y + r.
    let shift = -c3 / 4.0;
    let p = c2 - 3.0 * c3 * c3 / 8.0;
    let q = c1 - c3 * c2 / 2.0 + c3 * c3 * c3 / 8.0;
    let r = c0 - c3 * c1 / 4.0 + c3 * c3 * c2 / 16.0 - 3.0 * c3.powi(4) / 256.0;

    if q.abs() < DEFLATE_TOL * scale.powi(3) {
        // Biquadratic: y² solves z² + p z + r. Degenerate Hamiltonian spectra
        // (±E, each twice) land here and factor exactly.
        let (z, res_z) = solve_quadratic(p, r);
        let mut res = res_z;
        let take = |z: f64| -> (f64, f64) {
            if z >= 0.0 {
                (z.sqrt(), 0.0)
            } else {
                ((-z).sqrt(), (-z).sqrt())
            }
        };
        let (y0, r0) = take(z.0);
        let (y1, r1) = take(z.1);
        res = res.max(r0).max(r1);
        return ([y0 + shift, -y0 + shift, y1 + shift, -y1 + shift], res);
    }

    // Resolvent cubic u³ + 2p u² + (p² − 4r) u − q² = 0; for a real-rooted
    // quartic its roots are (yᵢ+yⱼ)² ≥ 0. Use the largest for stability.
    let u = largest_cubic_root(2.0 * p, p * p - 4.0 * r, -q * q).max(0.0);
    if u <= 0.0 {
        // q ≠ 0 forces u > 0; hitting 0 means severe cancellation, fall back
        // to the biquadratic midpoint and let polishing sort it out.
        let half = -p / 2.0;
        let y = half.max(0.0).sqrt();
        return ([y + shift, -y + shift, y + shift, -y + shift], 0.0);
    }
    let a = u.sqrt();
    let b = (p + u - q / a) / 2.0;
    let d = (p + u + q / a) / 2.0;
    // (y² + a y + b)(y² − a y + d)
    let (r1, res1) = solve_quadratic(a, b);
    let (r2, res2) = solve_quadratic(-a, d);
    (
        [r1.0 + shift, r1.1 + shift, r2.0 + shift, r2.1 + shift],
        res1.max(res2),
    )
}

/// Roots of y² + b y + c, flattening a slightly negative discriminant onto
/// the real axis and reporting the clamped imaginary magnitude.
///
/// A discriminant below roundoff (relative to b² and |c|) is treated as an
/// exact double root: the √eps splitting it would otherwise produce is far
/// larger than the clamping error, and degenerate spectra are routine here.
fn solve_quadratic(b: f64, c: f64) -> ((f64, f64), f64) {
    let mut disc = b * b - 4.0 * c;
    if disc.abs() < 1e-13 * (b * b).max(4.0 * c.abs()) {
        disc = 0.0;
    }
    if disc >= 0.0 {
        let s = disc.sqrt();
        // Avoid cancellation: compute the large-magnitude root first.
        let q = -0.5 * (b + b.signum() * s);
        let (x1, x2) = if b == 0.0 {
            (s / 2.0, -s / 2.0)
        } else {
            (q, if q != 0.0 { c / q } else { -b - q })
        };
        ((x1, x2), 0.0)
    } else {
        let imag = (-disc).sqrt() / 2.0;
        ((-b / 2.0, -b / 2.0), imag)
    }
}

/// Largest real root of u³ + a u² + b u + c.
fn largest_cubic_root(a: f64, b: f64, c: f64) -> f64 {
    let roots = solve_real_cubic(a, b, c);
    roots.into_iter().fold(f64::NEG_INFINITY, f64::max)
}

/// All real roots of u³ + a u² + b u + c (entries repeat when fewer than
/// three exist).
fn solve_real_cubic(a: f64, b: f64, c: f64) -> [f64; 3] {
    // Depress: u = v − a/3  →  v³ + p v + q.
    let shift = -a / 3.0;
    let p = b - a * a / 3.0;
    let q = c + 2.0 * a * a * a / 27.0 - a * b / 3.0;

    if p.abs() < 1e-300 {
        let v = -q.signum() * q.abs().powf(1.0 / 3.0);
        return [v + shift; 3];
    }

    let half_q = q / 2.0;
    let disc = half_q * half_q + (p / 3.0).powi(3);
    if disc <= 0.0 {
        // Three real roots: trigonometric form.
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        let mut roots = [0.0f64; 3];
        for (k, r) in roots.iter_mut().enumerate() {
            *r = m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + shift;
        }
        roots
    } else {
        // One real root: Cardano.
        let s = disc.sqrt();
        let t1 = -half_q + s;
        let t2 = -half_q - s;
        let v = t1.signum() * t1.abs().powf(1.0 / 3.0) + t2.signum() * t2.abs().powf(1.0 / 3.0);
        [v + shift; 3]
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Degree {
    Cubic,
    Quartic,
}

/// A few guarded Newton steps on the monic cubic `x³ + c[3]x² + c[2]x + c[1]`
/// or quartic `x⁴ + c[3]x³ + c[2]x² + c[1]x + c[0]`.
fn newton_polish(x0: f64, c: &[f64; 4], degree: Degree) -> f64 {
    let p = |x: f64| match degree {
        Degree::Quartic => (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0],
        Degree::Cubic => ((x + c[3]) * x + c[2]) * x + c[1],
    };
    let dp = |x: f64| match degree {
        Degree::Quartic => ((4.0 * x + 3.0 * c[3]) * x + 2.0 * c[2]) * x + c[1],
        Degree::Cubic => (3.0 * x + 2.0 * c[3]) * x + c[2],
    };
    let mut x = x0;
    for _ in 0..3 {
        let d = dp(x);
        if d.abs() < 1e-300 {
            break;
        }
        let step = p(x) / d;
        if !step.is_finite() {
            break;
        }
        let next = x - step;
        // Demand a real reduction of |p|: at the rounding-noise plateau the
        // two values tie and the iteration must stop rather than wander.
        if p(next).abs() < 0.5 * p(x).abs() {
            x = next;
        } else {
            break;
        }
    }
    x
}
