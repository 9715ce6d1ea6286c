//! State families and reports: build a density matrix from command-line
//! parameters, decompose it, attach the quantifiers, and render as text or
//! JSON. The JSON form round-trips through [`parse_state_json`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use bispinor::*;
use std::result::Result;

/// The state families the tool can produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Free Dirac eigenstate with independent spin axis, boosted.
    Free,
    /// Magnetic-field eigenstate, boosted.
    Magnetic,
    /// q ρ₊ + (1−q) ρ₋ parity mixture of magnetic eigenstates.
    ParityMix,
    /// q ρ¹ + (1−q) ρ² spin mixture of magnetic eigenstates.
    HelicityMix,
    /// q Φ₊ + (1−q) Φ₋ Bell-projector mixture (Hermitian only, no momentum).
    BellMix,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Free => "free",
            Family::Magnetic => "magnetic",
            Family::ParityMix => "parity_mix",
            Family::HelicityMix => "helicity_mix",
            Family::BellMix => "bell_mix",
        }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "free" => Ok(Family::Free),
            "magnetic" => Ok(Family::Magnetic),
            "parity_mix" => Ok(Family::ParityMix),
            "helicity_mix" => Ok(Family::HelicityMix),
            "bell_mix" => Ok(Family::BellMix),
            other => Err(format!(
                "unknown family '{other}' (expected free, magnetic, parity_mix, helicity_mix or bell_mix)"
            )),
        }
    }
}

/// Everything needed to pin down one state.
#[derive(Clone, Copy, Debug)]
pub struct StateSpec {
    pub family: Family,
    pub convention: Convention,
    pub mass: f64,
    pub mu: f64,
    pub bmag: f64,
    /// Spin quantization axis k̂ for the free family.
    pub spin_axis: Vec3,
    /// Field direction B̂ for the magnetic families.
    pub field_axis: Vec3,
    /// Boost direction (used when `angle` is zero).
    pub boost_axis: Vec3,
    pub eta: f64,
    pub q: f64,
    /// Nonzero: boost at this angle from the reference axis (B̂ for magnetic
    /// families, k̂ for free), in place of `boost_axis`.
    pub angle: f64,
    pub sign: Sign,
    pub s: u8,
}

impl Default for StateSpec {
    fn default() -> Self {
        StateSpec {
            family: Family::Free,
            convention: Convention::Hermitian,
            mass: 1.0,
            mu: 0.3,
            bmag: 1.0,
            spin_axis: Vec3::X,
            field_axis: Vec3::Z,
            boost_axis: Vec3::Z,
            eta: 2.0f64.ln(),
            q: 0.5,
            angle: 0.0,
            sign: Sign::Plus,
            s: 1,
        }
    }
}

impl StateSpec {
    fn reference_axis(&self) -> Vec3 {
        match self.family {
            Family::Free => self.spin_axis,
            _ => self.field_axis,
        }
    }

    /// Boost direction: `boost_axis`, or the reference axis tilted by
    /// `angle` when an angle is set.
    pub fn boost_direction(&self) -> Vec3 {
        if self.angle == 0.0 {
            return self.boost_axis;
        }
        let axis = self.reference_axis();
        let helper = if axis.cross(&Vec3::X).norm() > 1e-6 {
            Vec3::X
        } else {
            Vec3::Y
        };
        let perp = axis.cross(&helper).normalized().expect("nonzero cross");
        (axis.scale(self.angle.cos()) + perp.scale(self.angle.sin()))
            .normalized()
            .expect("unit")
    }

    fn momentum(&self) -> Result<FourMomentum, String> {
        FourMomentum::from_rapidity(self.mass, self.eta, &self.boost_direction())
            .map_err(|e| e.to_string())
    }

    fn magnetic_setup(&self) -> Result<MagneticSetup, String> {
        MagneticSetup::new(self.mass, self.mu, self.field_axis.scale(self.bmag))
            .map_err(|e| e.to_string())
    }
}

fn bell_projector(relative_sign: f64) -> SpinParityDensity {
    let inv = 1.0 / 2.0f64.sqrt();
    let v = [
        Complex64::new(inv, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(relative_sign * inv, 0.0),
    ];
    let row = [v[0].conj(), v[1].conj(), v[2].conj(), v[3].conj()];
    SpinParityDensity::new(ComplexMatrix4::outer(&v, &row), Convention::Hermitian)
        .expect("Bell projector")
}

/// Build the density matrix described by the spec.
pub fn build_density(spec: &StateSpec) -> Result<SpinParityDensity, String> {
    match spec.family {
        Family::Free => {
            let p = spec.momentum()?;
            let label = SpinorLabel::new(spec.sign, spec.s).map_err(|e| e.to_string())?;
            let u = free_bispinor(label, &p, &spec.spin_axis).map_err(|e| e.to_string())?;
            density_from_bispinor(&u, spec.sign, spec.convention).map_err(|e| e.to_string())
        }
        Family::Magnetic => {
            let p = spec.momentum()?;
            boosted_magnetic_density(spec.sign, spec.s, &spec.magnetic_setup()?, &p, spec.convention)
                .map_err(|e| e.to_string())
        }
        Family::ParityMix => {
            let p = spec.momentum()?;
            projected_mixture(
                ProjectedMixture::ParityMix { s: spec.s },
                &spec.magnetic_setup()?,
                &p,
                spec.q,
                spec.convention,
            )
            .map_err(|e| e.to_string())
        }
        Family::HelicityMix => {
            let p = spec.momentum()?;
            projected_mixture(
                ProjectedMixture::HelicityMix { sign: spec.sign },
                &spec.magnetic_setup()?,
                &p,
                spec.q,
                spec.convention,
            )
            .map_err(|e| e.to_string())
        }
        Family::BellMix => {
            if spec.convention == Convention::Covariant {
                return Err("bell_mix is defined for the hermitian convention only".into());
            }
            if !(spec.q > 0.0 && spec.q < 1.0) {
                return Err(format!("bell_mix weight must lie in (0, 1), got {}", spec.q));
            }
            let plus = bell_projector(1.0);
            let minus = bell_projector(-1.0);
            mix(&[(spec.q, &plus), (1.0 - spec.q, &minus)]).map_err(|e| e.to_string())
        }
    }
}

/// Concurrence through the method appropriate to the family and convention:
/// pure-state trace formula for the pure families, sorted-eigenvalue route
/// for Hermitian mixtures, rank-2 trace formula for covariant mixtures.
pub fn concurrence_for(family: Family, rho: &SpinParityDensity) -> Result<ConcurrenceResult, String> {
    match family {
        Family::Free | Family::Magnetic => concurrence_pure(rho).map_err(|e| e.to_string()),
        Family::ParityMix | Family::HelicityMix | Family::BellMix => {
            if rho.convention() == Convention::Hermitian {
                concurrence_wootters(rho).map_err(|e| e.to_string())
            } else {
                concurrence_rank2(rho).map_err(|e| e.to_string())
            }
        }
    }
}

/// Serializable snapshot of one state: matrix, Bloch data, quantifiers.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateReport {
    pub family: String,
    pub convention: String,
    pub matrix_re: [[f64; 4]; 4],
    pub matrix_im: [[f64; 4]; 4],
    pub bloch: BlochReport,
    pub quantifiers: QuantifierReport,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BlochReport {
    pub a_re: [f64; 3],
    pub a_im: [f64; 3],
    pub b_re: [f64; 3],
    pub b_im: [f64; 3],
    pub t_re: [[f64; 3]; 3],
    pub t_im: [[f64; 3]; 3],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuantifierReport {
    pub trace_re: f64,
    pub trace_im: f64,
    /// Re Tr\[ρⁿ\] for n = 1..=4.
    pub trace_powers: [f64; 4],
    pub concurrence: Option<f64>,
    pub concurrence_method: Option<String>,
    pub concurrence_residual: Option<f64>,
    /// Tr\[ρ²\] under its usual name; Hermitian convention only.
    pub purity: Option<f64>,
    pub entanglement_of_formation: Option<f64>,
    pub entanglement_entropy: Option<f64>,
}

/// Build the full report for a spec.
pub fn build_report(spec: &StateSpec) -> Result<StateReport, String> {
    let rho = build_density(spec)?;
    let m = rho.matrix();

    let mut matrix_re = [[0.0; 4]; 4];
    let mut matrix_im = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            matrix_re[i][j] = m.m[i][j].re;
            matrix_im[i][j] = m.m[i][j].im;
        }
    }

    let d = bloch_decompose(&rho);
    let mut bloch = BlochReport {
        a_re: [0.0; 3],
        a_im: [0.0; 3],
        b_re: [0.0; 3],
        b_im: [0.0; 3],
        t_re: [[0.0; 3]; 3],
        t_im: [[0.0; 3]; 3],
    };
    for i in 0..3 {
        bloch.a_re[i] = d.a[i].re;
        bloch.a_im[i] = d.a[i].im;
        bloch.b_re[i] = d.b[i].re;
        bloch.b_im[i] = d.b[i].im;
        for j in 0..3 {
            bloch.t_re[i][j] = d.t[i][j].re;
            bloch.t_im[i][j] = d.t[i][j].im;
        }
    }

    let trace = m.trace();
    let mut trace_powers = [0.0; 4];
    for (n, slot) in trace_powers.iter_mut().enumerate() {
        *slot = m.pow(n as u32 + 1).trace().re;
    }

    let concurrence = concurrence_for(spec.family, &rho).ok();
    let purity = (rho.convention() == Convention::Hermitian).then_some(trace_powers[1]);
    let eof = concurrence
        .as_ref()
        .and_then(|c| eof_from_concurrence(c.value.min(1.0)).ok());
    let entropy = (rho.convention() == Convention::Hermitian)
        .then(|| entanglement_entropy(&rho).ok())
        .flatten();

    Ok(StateReport {
        family: spec.family.name().to_string(),
        convention: spec.convention.name().to_string(),
        matrix_re,
        matrix_im,
        bloch,
        quantifiers: QuantifierReport {
            trace_re: trace.re,
            trace_im: trace.im,
            trace_powers,
            concurrence: concurrence.as_ref().map(|c| c.value),
            concurrence_method: concurrence.as_ref().map(|c| c.method.name().to_string()),
            concurrence_residual: concurrence.as_ref().map(|c| c.residual),
            purity,
            entanglement_of_formation: eof,
            entanglement_entropy: entropy,
        },
    })
}

/// Reader utility: the inverse of `serde_json::to_string(&report)`.
pub fn parse_state_json(s: &str) -> Result<StateReport, serde_json::Error> {
    serde_json::from_str(s)
}

fn fmt12(x: f64) -> String {
    format!("{x:+.11e}")
}

/// Plain-text rendering with fixed 12-significant-digit mantissas.
pub fn render_text(r: &StateReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family: {}  convention: {}", r.family, r.convention);
    let _ = writeln!(out, "density matrix:");
    for i in 0..4 {
        let cells: Vec<String> = (0..4)
            .map(|j| format!("{}{}i", fmt12(r.matrix_re[i][j]), fmt12(r.matrix_im[i][j])))
            .collect();
        let _ = writeln!(out, "  [ {} ]", cells.join("  "));
    }
    let q = &r.quantifiers;
    let _ = writeln!(out, "trace: {}{}i", fmt12(q.trace_re), fmt12(q.trace_im));
    let _ = writeln!(out, "bloch a (re): {} {} {}", fmt12(r.bloch.a_re[0]), fmt12(r.bloch.a_re[1]), fmt12(r.bloch.a_re[2]));
    let _ = writeln!(out, "bloch a (im): {} {} {}", fmt12(r.bloch.a_im[0]), fmt12(r.bloch.a_im[1]), fmt12(r.bloch.a_im[2]));
    let _ = writeln!(out, "bloch b (re): {} {} {}", fmt12(r.bloch.b_re[0]), fmt12(r.bloch.b_re[1]), fmt12(r.bloch.b_re[2]));
    let _ = writeln!(out, "bloch b (im): {} {} {}", fmt12(r.bloch.b_im[0]), fmt12(r.bloch.b_im[1]), fmt12(r.bloch.b_im[2]));
    for i in 0..3 {
        let cells: Vec<String> = (0..3)
            .map(|j| format!("{}{}i", fmt12(r.bloch.t_re[i][j]), fmt12(r.bloch.t_im[i][j])))
            .collect();
        let _ = writeln!(out, "bloch t[{i}]: {}", cells.join("  "));
    }
    let _ = writeln!(
        out,
        "trace powers n=1..4: {} {} {} {}",
        fmt12(q.trace_powers[0]),
        fmt12(q.trace_powers[1]),
        fmt12(q.trace_powers[2]),
        fmt12(q.trace_powers[3])
    );
    if let (Some(c), Some(method)) = (q.concurrence, q.concurrence_method.as_deref()) {
        let _ = writeln!(out, "concurrence ({method}): {}", fmt12(c));
    }
    if let Some(p) = q.purity {
        let _ = writeln!(out, "purity: {}", fmt12(p));
    }
    if let Some(e) = q.entanglement_of_formation {
        let _ = writeln!(out, "entanglement of formation: {}", fmt12(e));
    }
    if let Some(s) = q.entanglement_entropy {
        let _ = writeln!(out, "entanglement entropy: {}", fmt12(s));
    }
    out
}
