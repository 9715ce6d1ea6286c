//! Fixed-size dense complex matrices.
//!
//! `ComplexMatrix4` is the universal carrier of the crate: operators, spinor
//! outer products and density matrices are all plain 4×4 complex matrices in
//! the parity⊗spin basis `{|+,↑⟩, |+,↓⟩, |−,↑⟩, |−,↓⟩}`. `ComplexMatrix2`
//! holds Pauli factors and reduced (partial-traced) states. Both are value
//! types, eagerly constructed, row-major.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

/// 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMatrix2 {
    pub m: [[Complex64; 2]; 2],
}

/// 4×4 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMatrix4 {
    pub m: [[Complex64; 4]; 4],
}

pub(crate) const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const C_ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const C_I: Complex64 = Complex64::new(0.0, 1.0);

impl ComplexMatrix2 {
    pub const fn zeros() -> Self {
        ComplexMatrix2 { m: [[C_ZERO; 2]; 2] }
    }

    pub const fn identity() -> Self {
        let mut m = [[C_ZERO; 2]; 2];
        m[0][0] = C_ONE;
        m[1][1] = C_ONE;
        ComplexMatrix2 { m }
    }

    /// Matrix from real entries.
    pub fn from_real(r: [[f64; 2]; 2]) -> Self {
        let mut m = [[C_ZERO; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = Complex64::new(r[i][j], 0.0);
            }
        }
        ComplexMatrix2 { m }
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut out = ComplexMatrix2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = self.m[j][i].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        for row in out.m.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        worst
    }

    pub fn is_finite(&self) -> bool {
        self.m
            .iter()
            .flatten()
            .all(|e| e.re.is_finite() && e.im.is_finite())
    }

    /// Deviation from Hermiticity: max |M - M†| entrywise.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    /// Eigenvalues of a Hermitian 2×2 matrix, descending, by the closed form
    /// λ± = t/2 ± sqrt((t/2)² − det). Imaginary parts of trace/det discarded.
    pub fn eigenvalues_hermitian(&self) -> [f64; 2] {
        let t = self.trace().re;
        let d = self.det().re;
        let disc = (t * t * 0.25 - d).max(0.0).sqrt();
        [t * 0.5 + disc, t * 0.5 - disc]
    }
}

impl Mul for ComplexMatrix2 {
    type Output = ComplexMatrix2;
    fn mul(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        let mut out = ComplexMatrix2::zeros();
        for i in 0..2 {
            for k in 0..2 {
                let a = self.m[i][k];
                for j in 0..2 {
                    out.m[i][j] += a * rhs.m[k][j];
                }
            }
        }
        out
    }
}

impl Add for ComplexMatrix2 {
    type Output = ComplexMatrix2;
    fn add(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] += rhs.m[i][j];
            }
        }
        out
    }
}

impl Sub for ComplexMatrix2 {
    type Output = ComplexMatrix2;
    fn sub(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] -= rhs.m[i][j];
            }
        }
        out
    }
}

impl ComplexMatrix4 {
    pub const fn zeros() -> Self {
        ComplexMatrix4 { m: [[C_ZERO; 4]; 4] }
    }

    pub const fn identity() -> Self {
        let mut m = [[C_ZERO; 4]; 4];
        let mut i = 0;
        while i < 4 {
            m[i][i] = C_ONE;
            i += 1;
        }
        ComplexMatrix4 { m }
    }

    pub fn from_real(r: [[f64; 4]; 4]) -> Self {
        let mut m = [[C_ZERO; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = Complex64::new(r[i][j], 0.0);
            }
        }
        ComplexMatrix4 { m }
    }

    pub fn diag(d: [Complex64; 4]) -> Self {
        let mut m = ComplexMatrix4::zeros();
        for i in 0..4 {
            m.m[i][i] = d[i];
        }
        m
    }

    /// Rank-1 outer product `col · row` (no implicit conjugation).
    pub fn outer(col: &[Complex64; 4], row: &[Complex64; 4]) -> Self {
        let mut out = ComplexMatrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = col[i] * row[j];
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2] + self.m[3][3]
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut out = ComplexMatrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = self.m[j][i].conj();
            }
        }
        out
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Complex64 {
        let minor = |row: usize, col: usize| -> Complex64 {
            let mut sub = [[C_ZERO; 3]; 3];
            let mut si = 0;
            for i in 0..4 {
                if i == row {
                    continue;
                }
                let mut sj = 0;
                for j in 0..4 {
                    if j == col {
                        continue;
                    }
                    sub[si][sj] = self.m[i][j];
                    sj += 1;
                }
                si += 1;
            }
            sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
                - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
                + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0])
        };
        let mut det = C_ZERO;
        let mut sign = C_ONE;
        for j in 0..4 {
            det += sign * self.m[0][j] * minor(0, j);
            sign = -sign;
        }
        det
    }

    pub fn transpose(&self) -> Self {
        let mut out = ComplexMatrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = self.m[j][i];
            }
        }
        out
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        let mut out = *self;
        for row in out.m.iter_mut() {
            for e in row.iter_mut() {
                *e = e.conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        for row in out.m.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        out
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn mul_vec(&self, v: &[Complex64; 4]) -> [Complex64; 4] {
        let mut out = [C_ZERO; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i] += self.m[i][j] * v[j];
            }
        }
        out
    }

    /// n-th matrix power by repeated multiplication (small n only).
    pub fn pow(&self, n: u32) -> Self {
        let mut out = ComplexMatrix4::identity();
        for _ in 0..n {
            out = out * *self;
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        worst
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        let mut worst = 0.0f64;
        for row in &self.m {
            for e in row {
                worst = worst.max(e.norm());
            }
        }
        worst
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.m.iter().flatten().map(|e| e.norm_sqr()).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.m
            .iter()
            .flatten()
            .all(|e| e.re.is_finite() && e.im.is_finite())
    }

    /// Deviation from Hermiticity: max |M - M†| entrywise.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    /// Largest imaginary magnitude over all entries.
    pub fn max_imag(&self) -> f64 {
        let mut worst = 0.0f64;
        for row in &self.m {
            for e in row {
                worst = worst.max(e.im.abs());
            }
        }
        worst
    }
}

impl Mul for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn mul(self, rhs: ComplexMatrix4) -> ComplexMatrix4 {
        let mut out = ComplexMatrix4::zeros();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.m[i][k];
                if a == C_ZERO {
                    continue;
                }
                for j in 0..4 {
                    out.m[i][j] += a * rhs.m[k][j];
                }
            }
        }
        out
    }
}

impl Add for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn add(self, rhs: ComplexMatrix4) -> ComplexMatrix4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] += rhs.m[i][j];
            }
        }
        out
    }
}

impl Sub for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn sub(self, rhs: ComplexMatrix4) -> ComplexMatrix4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] -= rhs.m[i][j];
            }
        }
        out
    }
}

impl Neg for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn neg(self) -> ComplexMatrix4 {
        self.scale_re(-1.0)
    }
}

impl Index<(usize, usize)> for ComplexMatrix4 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.m[i][j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.m[i][j]
    }
}

impl fmt::Display for ComplexMatrix4 {
    /// Fixed 12-significant-digit mantissas, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|e| format!("{:+.11e}{:+.11e}i", e.re, e.im))
                .collect();
            write!(f, "[ {} ]", cells.join("  "))?;
        }
        Ok(())
    }
}

impl fmt::Display for ComplexMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|e| format!("{:+.11e}{:+.11e}i", e.re, e.im))
                .collect();
            write!(f, "[ {} ]", cells.join("  "))?;
        }
        Ok(())
    }
}
