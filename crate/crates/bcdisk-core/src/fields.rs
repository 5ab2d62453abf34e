//! Function fields on the disk and data on its boundary circle.
//!
//! The bicomplexified coordinate is `zh = bicomplexify(z) = x + j y` for
//! `z = x + i y`; its star conjugate `zh* = x - j y` corresponds to `conj(z)`.
//! In idempotent coordinates `zh = (conj(z), z)` and `zh* = (z, conj(z))`, so
//! a polynomial field
//!
//! ```text
//! f = sum c_{mn} zh^m (zh*)^n,    c_{mn} bicomplex,
//! ```
//!
//! has idempotent components that are ordinary complex polynomials in
//! `(z, conj(z))`:
//!
//! ```text
//! f_plus(z)  = sum c_{mn}^+ z^n conj(z)^m,
//! f_minus(z) = sum c_{mn}^- z^m conj(z)^n.
//! ```
//!
//! [`PolyField`] stores exactly those two [`CPoly`] components, which makes
//! every derivative operator exact and componentwise:
//!
//! * `d_z`, `d_zstar` — plain Wirtinger derivatives applied per component;
//! * [`PolyField::bc_del`] — the bicomplex derivative
//!   `del = p_plus d/dconj(z) + p_minus d/dz` (so `del zh = 1`, `del zh* = 0`);
//! * [`PolyField::bc_delbar`] — its conjugate
//!   `delbar = p_plus d/dz + p_minus d/dconj(z)` (so `delbar zh = 0`,
//!   `delbar zh* = 1`);
//! * [`PolyField::beltrami_apply`] — `delbar f - mu * del f`.
//!
//! [`BoundaryData`] holds bicomplex Fourier coefficients of a function on the
//! unit circle; [`GridField`] holds samples on a polar grid. Finite-difference
//! Wirtinger oracles ([`fd_dz`] and friends) provide the independent check
//! used by the verification suite.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::Bicomplex;
use crate::cpoly::CPoly;
use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// PolyField
// ---------------------------------------------------------------------------

/// A bicomplex-valued polynomial field `sum c_{mn} zh^m (zh*)^n` on the disk,
/// stored as two complex polynomial components in idempotent coordinates.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PolyField {
    plus: CPoly,
    minus: CPoly,
}

impl PolyField {
    /// The zero field.
    pub fn zero() -> Self {
        PolyField::default()
    }

    /// The constant field `w`.
    pub fn constant(w: Bicomplex) -> Self {
        PolyField {
            plus: CPoly::constant(w.plus()),
            minus: CPoly::constant(w.minus()),
        }
    }

    /// The coordinate field `zh` (components `(conj(z), z)`).
    pub fn zhat() -> Self {
        PolyField {
            plus: CPoly::var_zbar(),
            minus: CPoly::var_z(),
        }
    }

    /// The conjugate coordinate field `zh*` (components `(z, conj(z))`).
    pub fn zhat_star() -> Self {
        PolyField {
            plus: CPoly::var_z(),
            minus: CPoly::var_zbar(),
        }
    }

    /// The monomial `c zh^m (zh*)^n`.
    pub fn monomial(m: u32, n: u32, c: Bicomplex) -> Self {
        let mut f = PolyField::zero();
        f.add_monomial(m, n, c);
        f
    }

    /// Adds `c zh^m (zh*)^n` to the field.
    pub fn add_monomial(&mut self, m: u32, n: u32, c: Bicomplex) {
        // plus component of zh^m (zh*)^n is conj(z)^m z^n, minus is z^m conj(z)^n.
        self.plus.add_term(n, m, c.plus());
        self.minus.add_term(m, n, c.minus());
    }

    /// Builds a field from surface coefficients `{(m, n) -> c_{mn}}`.
    pub fn from_bicomplex_coeffs(coeffs: &BTreeMap<(u32, u32), Bicomplex>) -> Self {
        let mut f = PolyField::zero();
        for (&(m, n), &c) in coeffs {
            f.add_monomial(m, n, c);
        }
        f
    }

    /// Recovers the surface coefficients `{(m, n) -> c_{mn}}`.
    pub fn bicomplex_coeffs(&self) -> BTreeMap<(u32, u32), Bicomplex> {
        let mut keys: Vec<(u32, u32)> = Vec::new();
        for (m, n, _) in self.minus.terms() {
            keys.push((m, n));
        }
        for (zm, zn, _) in self.plus.terms() {
            // plus poly z^zm conj(z)^zn corresponds to surface key (zn, zm).
            keys.push((zn, zm));
        }
        keys.sort_unstable();
        keys.dedup();
        let mut out = BTreeMap::new();
        for (m, n) in keys {
            let c = Bicomplex::from_idempotent(self.plus.coeff(n, m), self.minus.coeff(m, n));
            out.insert((m, n), c);
        }
        out
    }

    /// Builds a field directly from its idempotent component polynomials.
    pub fn from_components(plus: CPoly, minus: CPoly) -> Self {
        PolyField { plus, minus }
    }

    /// The `plus` component polynomial (a function of `z, conj(z)`).
    pub fn plus(&self) -> &CPoly {
        &self.plus
    }

    /// The `minus` component polynomial.
    pub fn minus(&self) -> &CPoly {
        &self.minus
    }

    /// Evaluates the field at `z`.
    pub fn eval(&self, z: Complex64) -> Bicomplex {
        Bicomplex::from_idempotent(self.plus.eval(z), self.minus.eval(z))
    }

    /// `self + other`.
    pub fn add(&self, other: &PolyField) -> Self {
        PolyField {
            plus: self.plus.add(&other.plus),
            minus: self.minus.add(&other.minus),
        }
    }

    /// `self - other`.
    pub fn sub(&self, other: &PolyField) -> Self {
        PolyField {
            plus: self.plus.sub(&other.plus),
            minus: self.minus.sub(&other.minus),
        }
    }

    /// Pointwise (bicomplex) product.
    pub fn mul(&self, other: &PolyField) -> Self {
        PolyField {
            plus: self.plus.mul(&other.plus),
            minus: self.minus.mul(&other.minus),
        }
    }

    /// Scales by a bicomplex constant.
    pub fn scale(&self, c: Bicomplex) -> Self {
        PolyField {
            plus: self.plus.scale(c.plus()),
            minus: self.minus.scale(c.minus()),
        }
    }

    /// `-self`.
    pub fn neg(&self) -> Self {
        PolyField {
            plus: self.plus.neg(),
            minus: self.minus.neg(),
        }
    }

    /// Plain Wirtinger derivative `df/dz` applied per component.
    pub fn d_z(&self) -> Self {
        PolyField {
            plus: self.plus.d_z(),
            minus: self.minus.d_z(),
        }
    }

    /// Plain Wirtinger derivative `df/dconj(z)` applied per component.
    pub fn d_zstar(&self) -> Self {
        PolyField {
            plus: self.plus.d_zbar(),
            minus: self.minus.d_zbar(),
        }
    }

    /// Bicomplex derivative `del f` (components `(df+/dconj(z), df-/dz)`).
    ///
    /// Satisfies `del zh = 1`, `del zh* = 0`.
    pub fn bc_del(&self) -> Self {
        PolyField {
            plus: self.plus.d_zbar(),
            minus: self.minus.d_z(),
        }
    }

    /// Conjugate bicomplex derivative `delbar f` (components
    /// `(df+/dz, df-/dconj(z))`).
    ///
    /// Satisfies `delbar zh = 0`, `delbar zh* = 1`.
    pub fn bc_delbar(&self) -> Self {
        PolyField {
            plus: self.plus.d_z(),
            minus: self.minus.d_zbar(),
        }
    }

    /// The Beltrami-type operator `delbar f - mu * del f`.
    ///
    /// For `f = zh` this returns `-mu`; it annihilates any polynomial in the
    /// `mu`-holomorphic combination when `mu` is constant.
    pub fn beltrami_apply(&self, mu: &PolyField) -> Self {
        self.bc_delbar().sub(&mu.mul(&self.bc_del()))
    }

    /// Bicomplex conjugation applied pointwise (swaps the components).
    pub fn bc_conj(&self) -> Self {
        PolyField {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Componentwise complex (star) conjugation applied pointwise.
    pub fn star_conj(&self) -> Self {
        PolyField {
            plus: self.plus.conj_poly(),
            minus: self.minus.conj_poly(),
        }
    }

    /// Maximum total degree over the two components.
    pub fn total_degree(&self) -> u32 {
        self.plus.total_degree().max(self.minus.total_degree())
    }

    /// True when both components are zero.
    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    /// Upper bound for `sup_{|z|<=1} bc_norm(f(z))` from coefficient sums.
    pub fn sup_norm_bound(&self) -> f64 {
        let (p, m) = (self.plus.l1_norm(), self.minus.l1_norm());
        ((p * p + m * m) * 0.5).sqrt()
    }

    /// Drops coefficients of magnitude `<= tol` in both components.
    pub fn pruned(&self, tol: f64) -> Self {
        PolyField {
            plus: self.plus.pruned(tol),
            minus: self.minus.pruned(tol),
        }
    }

    /// Serializes to the versioned text format (one surface coefficient per
    /// row: `m n sc_re sc_im vec_re vec_im`).
    pub fn to_text(&self) -> String {
        let mut out = String::from("# polyfield v1\n# rows: m n sc_re sc_im vec_re vec_im\n");
        for (&(m, n), &c) in self.bicomplex_coeffs().iter() {
            let (s, v) = (c.sc(), c.vec());
            out.push_str(&format!("{m} {n} {} {} {} {}\n", s.re, s.im, v.re, v.im));
        }
        out
    }

    /// Parses the text format produced by [`PolyField::to_text`].
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty polyfield file".into()))?;
        if header.trim() != "# polyfield v1" {
            return Err(Error::Parse(format!(
                "unsupported polyfield header `{}` (expected `# polyfield v1`)",
                header.trim()
            )));
        }
        let mut f = PolyField::zero();
        for line in lines {
            let line = line.trim();
            if line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(Error::Parse(format!(
                    "polyfield row needs 6 fields, got {}: `{line}`"
                , fields.len())));
            }
            let m: u32 = fields[0]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{line}`")))?;
            let n: u32 = fields[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{line}`")))?;
            let nums: Vec<f64> = fields[2..]
                .iter()
                .map(|s| {
                    s.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient in `{line}`")))
                })
                .collect::<Result<_>>()?;
            f.add_monomial(
                m,
                n,
                Bicomplex::new(
                    Complex64::new(nums[0], nums[1]),
                    Complex64::new(nums[2], nums[3]),
                ),
            );
        }
        Ok(f)
    }
}

// ---------------------------------------------------------------------------
// BoundaryData
// ---------------------------------------------------------------------------

/// Bicomplex Fourier data `gamma(theta) = sum_k c_k e^{i k theta}` on the unit
/// circle.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BoundaryData {
    coeffs: BTreeMap<i64, Bicomplex>,
}

impl BoundaryData {
    /// The zero boundary function.
    pub fn zero() -> Self {
        BoundaryData::default()
    }

    /// Builds from bicomplex Fourier coefficients.
    pub fn from_fourier(coeffs: BTreeMap<i64, Bicomplex>) -> Self {
        let mut b = BoundaryData::zero();
        for (k, c) in coeffs {
            b.insert(k, c);
        }
        b
    }

    /// Builds from complex Fourier coefficients (vector part zero).
    pub fn from_complex_fourier(coeffs: &BTreeMap<i64, Complex64>) -> Self {
        let mut b = BoundaryData::zero();
        for (&k, &c) in coeffs {
            b.insert(k, Bicomplex::from_complex(c));
        }
        b
    }

    /// The real boundary function `cos(k theta)`.
    pub fn cos(k: u32) -> Self {
        let mut b = BoundaryData::zero();
        let half = Bicomplex::from_real(0.5);
        if k == 0 {
            b.insert(0, Bicomplex::ONE);
        } else {
            b.insert(k as i64, half);
            b.insert(-(k as i64), half);
        }
        b
    }

    /// The real boundary function `sin(k theta)`.
    pub fn sin(k: u32) -> Self {
        let mut b = BoundaryData::zero();
        if k > 0 {
            let c = Complex64::new(0.0, -0.5);
            b.insert(k as i64, Bicomplex::from_complex(c));
            b.insert(-(k as i64), Bicomplex::from_complex(c.conj()));
        }
        b
    }

    /// The boundary trace of a polynomial field: each `c zh^m (zh*)^n`
    /// restricted to `|z| = 1` contributes `c^- e^{i(m-n)theta}` to the minus
    /// component and `c^+ e^{i(n-m)theta}` to the plus component.
    pub fn trace_of_poly(f: &PolyField) -> Self {
        let mut plus: BTreeMap<i64, Complex64> = BTreeMap::new();
        let mut minus: BTreeMap<i64, Complex64> = BTreeMap::new();
        for (zm, zn, c) in f.plus().terms() {
            *plus.entry(zm as i64 - zn as i64).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        for (zm, zn, c) in f.minus().terms() {
            *minus.entry(zm as i64 - zn as i64).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        let mut b = BoundaryData::zero();
        let keys: Vec<i64> = plus.keys().chain(minus.keys()).copied().collect();
        for k in keys {
            let p = plus.get(&k).copied().unwrap_or(Complex64::new(0.0, 0.0));
            let m = minus.get(&k).copied().unwrap_or(Complex64::new(0.0, 0.0));
            b.insert(k, Bicomplex::from_idempotent(p, m));
        }
        b
    }

    /// Sets the `k`-th Fourier coefficient (removing exact zeros).
    pub fn insert(&mut self, k: i64, c: Bicomplex) {
        if c == Bicomplex::ZERO {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
    }

    /// The `k`-th Fourier coefficient.
    pub fn coeff(&self, k: i64) -> Bicomplex {
        self.coeffs.get(&k).copied().unwrap_or(Bicomplex::ZERO)
    }

    /// Iterates over nonzero coefficients in increasing `k` order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Bicomplex)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    /// Largest `|k|` with a nonzero coefficient.
    pub fn max_abs_k(&self) -> i64 {
        self.coeffs.keys().map(|k| k.abs()).max().unwrap_or(0)
    }

    /// Evaluates `gamma(theta)`.
    pub fn eval(&self, theta: f64) -> Bicomplex {
        let mut acc = Bicomplex::ZERO;
        for (&k, &c) in &self.coeffs {
            acc += c * Complex64::from_polar(1.0, k as f64 * theta);
        }
        acc
    }

    /// Samples at the `n` uniform angles `theta_l = 2 pi l / n`.
    pub fn sample(&self, n: usize) -> Vec<Bicomplex> {
        (0..n)
            .map(|l| self.eval(2.0 * PI * l as f64 / n as f64))
            .collect()
    }

    /// Recovers Fourier coefficients from `n` uniform samples by the discrete
    /// transform (exact for trigonometric polynomials of degree `< n/2`).
    /// Frequencies are taken in `(-n/2, n/2]`; coefficients with magnitude
    /// below `1e-13 * max` are dropped.
    pub fn from_samples(samples: &[Bicomplex]) -> Self {
        let n = samples.len();
        assert!(n > 0, "need at least one boundary sample");
        let mut raw: Vec<(i64, Bicomplex)> = Vec::new();
        let mut max_norm = 0.0f64;
        let half = (n / 2) as i64;
        // Even n: k in [-n/2 + 1, n/2]; odd n: k in [-(n-1)/2, (n-1)/2].
        let (lo, hi) = if n % 2 == 0 {
            (-half + 1, half)
        } else {
            (-half, half)
        };
        for k in lo..=hi {
            let mut acc = Bicomplex::ZERO;
            for (l, &v) in samples.iter().enumerate() {
                let phase = Complex64::from_polar(1.0, -k as f64 * 2.0 * PI * (l as f64) / n as f64);
                acc += v * phase;
            }
            acc = acc * (1.0 / n as f64);
            max_norm = max_norm.max(acc.bc_norm());
            raw.push((k, acc));
        }
        let mut b = BoundaryData::zero();
        let cutoff = 1e-13 * max_norm.max(1e-300);
        for (k, c) in raw {
            if c.bc_norm() > cutoff {
                b.insert(k, c);
            }
        }
        b
    }

    /// Complex Fourier coefficients of the plus component.
    pub fn plus_coeffs(&self) -> BTreeMap<i64, Complex64> {
        self.coeffs.iter().map(|(&k, &c)| (k, c.plus())).collect()
    }

    /// Complex Fourier coefficients of the minus component.
    pub fn minus_coeffs(&self) -> BTreeMap<i64, Complex64> {
        self.coeffs.iter().map(|(&k, &c)| (k, c.minus())).collect()
    }

    /// True when the boundary function is real-valued (zero vector part and
    /// real scalar part) within `tol`, checked on a sample grid resolving all
    /// stored frequencies.
    pub fn is_real_scalar(&self, tol: f64) -> bool {
        let n = (4 * (self.max_abs_k() + 1)).max(8) as usize;
        self.sample(n)
            .iter()
            .all(|v| v.sc().im.abs() <= tol && v.vec().norm() <= tol)
    }

    /// Serializes to the versioned text format. Rows are
    /// `k re im` when every coefficient has zero vector part, otherwise
    /// `k sc_re sc_im vec_re vec_im`.
    pub fn to_text(&self) -> String {
        let complex_only = self
            .coeffs
            .values()
            .all(|c| c.vec() == Complex64::new(0.0, 0.0));
        let mut out = String::from("# boundary v1\n");
        if complex_only {
            out.push_str("# rows: k re im\n");
            for (&k, &c) in &self.coeffs {
                out.push_str(&format!("{k} {} {}\n", c.sc().re, c.sc().im));
            }
        } else {
            out.push_str("# rows: k sc_re sc_im vec_re vec_im\n");
            for (&k, &c) in &self.coeffs {
                let (s, v) = (c.sc(), c.vec());
                out.push_str(&format!("{k} {} {} {} {}\n", s.re, s.im, v.re, v.im));
            }
        }
        out
    }

    /// Parses the text format produced by [`BoundaryData::to_text`].
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty boundary file".into()))?;
        if header.trim() != "# boundary v1" {
            return Err(Error::Parse(format!(
                "unsupported boundary header `{}` (expected `# boundary v1`)",
                header.trim()
            )));
        }
        let mut b = BoundaryData::zero();
        for line in lines {
            let line = line.trim();
            if line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let k: i64 = fields
                .first()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad frequency in `{line}`")))?;
            let nums: Vec<f64> = fields[1..]
                .iter()
                .map(|s| {
                    s.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient in `{line}`")))
                })
                .collect::<Result<_>>()?;
            let c = match nums.len() {
                2 => Bicomplex::from_complex(Complex64::new(nums[0], nums[1])),
                4 => Bicomplex::new(
                    Complex64::new(nums[0], nums[1]),
                    Complex64::new(nums[2], nums[3]),
                ),
                k => {
                    return Err(Error::Parse(format!(
                        "boundary row needs 3 or 5 fields, got {}: `{line}`",
                        k + 1
                    )))
                }
            };
            b.insert(k, b.coeff(k) + c);
        }
        Ok(b)
    }
}

// ---------------------------------------------------------------------------
// GridField
// ---------------------------------------------------------------------------

/// Bicomplex values sampled on a polar grid (radius-major storage).
#[derive(Clone, Debug)]
pub struct GridField {
    radii: Vec<f64>,
    thetas: Vec<f64>,
    values: Vec<Bicomplex>,
}

impl GridField {
    /// Samples `f` on the tensor grid `radii x thetas`.
    pub fn from_fn(
        radii: Vec<f64>,
        thetas: Vec<f64>,
        f: impl Fn(Complex64) -> Bicomplex,
    ) -> Self {
        let mut values = Vec::with_capacity(radii.len() * thetas.len());
        for &r in &radii {
            for &t in &thetas {
                values.push(f(Complex64::from_polar(r, t)));
            }
        }
        GridField {
            radii,
            thetas,
            values,
        }
    }

    /// The radii of the grid.
    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    /// The angles of the grid.
    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    /// Grid node `z = radii[ir] * exp(i thetas[it])`.
    pub fn node(&self, ir: usize, it: usize) -> Complex64 {
        Complex64::from_polar(self.radii[ir], self.thetas[it])
    }

    /// Stored value at node `(ir, it)`.
    pub fn value(&self, ir: usize, it: usize) -> Bicomplex {
        self.values[ir * self.thetas.len() + it]
    }

    /// Largest `bc_norm` over the grid.
    pub fn max_norm(&self) -> f64 {
        self.values.iter().map(|v| v.bc_norm()).fold(0.0, f64::max)
    }

    /// Largest `bc_norm` of the difference with another grid of the same shape.
    pub fn max_diff(&self, other: &GridField) -> f64 {
        assert_eq!(self.values.len(), other.values.len(), "grid shape mismatch");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (*a - *b).bc_norm())
            .fold(0.0, f64::max)
    }
}

// ---------------------------------------------------------------------------
// Finite-difference Wirtinger oracles
// ---------------------------------------------------------------------------

/// Central finite-difference `df/dz = (df/dx - i df/dy) / 2` with step `h`.
pub fn fd_dz(f: impl Fn(Complex64) -> Complex64, z: Complex64, h: f64) -> Complex64 {
    let ih = Complex64::new(0.0, h);
    let fx = (f(z + h) - f(z - h)) / (2.0 * h);
    let fy = (f(z + ih) - f(z - ih)) / (2.0 * h);
    0.5 * (fx - Complex64::i() * fy)
}

/// Central finite-difference `df/dconj(z) = (df/dx + i df/dy) / 2`.
pub fn fd_dzbar(f: impl Fn(Complex64) -> Complex64, z: Complex64, h: f64) -> Complex64 {
    let ih = Complex64::new(0.0, h);
    let fx = (f(z + h) - f(z - h)) / (2.0 * h);
    let fy = (f(z + ih) - f(z - ih)) / (2.0 * h);
    0.5 * (fx + Complex64::i() * fy)
}

/// Finite-difference bicomplex derivative `del f` (idempotent components
/// `(dplus/dconj(z), dminus/dz)`).
pub fn fd_bc_del(f: impl Fn(Complex64) -> Bicomplex, z: Complex64, h: f64) -> Bicomplex {
    Bicomplex::from_idempotent(
        fd_dzbar(|w| f(w).plus(), z, h),
        fd_dz(|w| f(w).minus(), z, h),
    )
}

/// Finite-difference conjugate bicomplex derivative `delbar f` (components
/// `(dplus/dz, dminus/dconj(z))`).
pub fn fd_bc_delbar(f: impl Fn(Complex64) -> Bicomplex, z: Complex64, h: f64) -> Bicomplex {
    Bicomplex::from_idempotent(
        fd_dz(|w| f(w).plus(), z, h),
        fd_dzbar(|w| f(w).minus(), z, h),
    )
}

/// Finite-difference Beltrami operator `delbar f - mu(z) * del f`.
pub fn fd_beltrami(
    f: impl Fn(Complex64) -> Bicomplex + Copy,
    mu: impl Fn(Complex64) -> Bicomplex,
    z: Complex64,
    h: f64,
) -> Bicomplex {
    fd_bc_delbar(f, z, h) - mu(z) * fd_bc_del(f, z, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bicomplexify;
    use crate::tolerances::FD_STEP;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn coordinate_fields_have_expected_components() {
        let zh = PolyField::zhat();
        let z = c(0.3, -0.7);
        assert!((zh.eval(z) - bicomplexify(z)).bc_norm() < 1e-15);
        let zs = PolyField::zhat_star();
        assert!((zs.eval(z) - bicomplexify(z.conj())).bc_norm() < 1e-15);
        assert_eq!(zh.star_conj(), zs);
        assert_eq!(zh.bc_conj(), zs);
    }

    #[test]
    fn derivative_identities_on_coordinates() {
        let zh = PolyField::zhat();
        let zs = PolyField::zhat_star();
        assert!(zh.bc_delbar().is_zero());
        assert_eq!(zh.bc_del(), PolyField::constant(Bicomplex::ONE));
        assert_eq!(zs.bc_delbar(), PolyField::constant(Bicomplex::ONE));
        assert!(zs.bc_del().is_zero());
    }

    #[test]
    fn beltrami_on_zhat_gives_minus_mu() {
        let mu = PolyField::constant(Bicomplex::new(c(0.2, 0.1), c(-0.05, 0.0)));
        let got = PolyField::zhat_star().beltrami_apply(&mu);
        // delbar zh* = 1, del zh* = 0 -> result is 1... while for zh it's -mu.
        assert_eq!(got, PolyField::constant(Bicomplex::ONE));
        let got2 = PolyField::zhat().beltrami_apply(&mu);
        assert_eq!(got2, mu.neg());
    }

    #[test]
    fn surface_coefficients_roundtrip() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((2, 1), Bicomplex::new(c(1.0, -0.5), c(0.25, 2.0)));
        coeffs.insert((0, 3), Bicomplex::J);
        coeffs.insert((1, 0), Bicomplex::P_PLUS);
        let f = PolyField::from_bicomplex_coeffs(&coeffs);
        assert_eq!(f.bicomplex_coeffs(), coeffs);

        // Pointwise check against direct bicomplex powers.
        let z = c(0.4, 0.3);
        let zh = bicomplexify(z);
        let zs = zh.bc_conj();
        let mut want = Bicomplex::ZERO;
        for (&(m, n), &cc) in &coeffs {
            let mut t = cc;
            for _ in 0..m {
                t = t * zh;
            }
            for _ in 0..n {
                t = t * zs;
            }
            want += t;
        }
        assert!((f.eval(z) - want).bc_norm() < 1e-14);
    }

    #[test]
    fn fd_oracle_agrees_with_exact_derivatives() {
        let mut f = PolyField::monomial(3, 1, Bicomplex::new(c(0.3, 1.0), c(-0.2, 0.5)));
        f.add_monomial(0, 2, Bicomplex::J * 0.7);
        let pts = [c(0.1, 0.2), c(-0.4, 0.5), c(0.6, -0.3)];
        for &z in &pts {
            let ex = f.bc_del().eval(z);
            let fd = fd_bc_del(|w| f.eval(w), z, FD_STEP);
            assert!((ex - fd).bc_norm() < 1e-6, "bc_del mismatch at {z}");
            let ex = f.bc_delbar().eval(z);
            let fd = fd_bc_delbar(|w| f.eval(w), z, FD_STEP);
            assert!((ex - fd).bc_norm() < 1e-6, "bc_delbar mismatch at {z}");
            let ex = f.d_z().eval(z).plus();
            let fd = fd_dz(|w| f.eval(w).plus(), z, FD_STEP);
            assert!((ex - fd).norm() < 1e-6);
        }
    }

    #[test]
    fn boundary_fourier_roundtrip_and_eval() {
        let g = BoundaryData::cos(1);
        assert!((g.eval(0.7).sc() - c(0.7f64.cos(), 0.0)).norm() < 1e-14);
        let samples = g.sample(16);
        let back = BoundaryData::from_samples(&samples);
        assert!((back.coeff(1) - Bicomplex::from_real(0.5)).bc_norm() < 1e-13);
        assert!((back.coeff(-1) - Bicomplex::from_real(0.5)).bc_norm() < 1e-13);
        assert_eq!(back.max_abs_k(), 1);
        assert!(g.is_real_scalar(1e-12));
        assert!(!BoundaryData::from_complex_fourier(
            &[(1i64, c(1.0, 0.0))].into_iter().collect()
        )
        .is_real_scalar(1e-12));
    }

    #[test]
    fn trace_of_zhat() {
        let tr = BoundaryData::trace_of_poly(&PolyField::zhat());
        // zh on the circle: minus component e^{i theta}, plus component e^{-i theta}.
        assert_eq!(tr.coeff(1), Bicomplex::P_MINUS);
        assert_eq!(tr.coeff(-1), Bicomplex::P_PLUS);
        let th = 1.1;
        let want = bicomplexify(Complex64::from_polar(1.0, th));
        assert!((tr.eval(th) - want).bc_norm() < 1e-14);
    }

    #[test]
    fn polyfield_text_roundtrip() {
        let mut f = PolyField::monomial(2, 1, Bicomplex::new(c(1.5, -2.0), c(0.0, 0.125)));
        f.add_monomial(0, 0, Bicomplex::from_real(-3.0));
        let text = f.to_text();
        assert!(text.starts_with("# polyfield v1"));
        let back = PolyField::parse_text(&text).unwrap();
        assert_eq!(back, f);
        assert!(PolyField::parse_text("# wrong v9\n0 0 1 0 0 0").is_err());
    }

    #[test]
    fn boundary_text_roundtrip() {
        let mut b = BoundaryData::zero();
        b.insert(-2, Bicomplex::from_complex(c(0.5, 1.0)));
        b.insert(3, Bicomplex::from_complex(c(-1.0, 0.0)));
        let text = b.to_text();
        assert!(text.contains("k re im"));
        assert_eq!(BoundaryData::parse_text(&text).unwrap(), b);

        b.insert(0, Bicomplex::J);
        let text = b.to_text();
        assert!(text.contains("vec_re"));
        assert_eq!(BoundaryData::parse_text(&text).unwrap(), b);
    }

    #[test]
    fn grid_field_storage() {
        let g = GridField::from_fn(
            vec![0.5, 0.9],
            vec![0.0, PI],
            |z| bicomplexify(z),
        );
        assert!((g.value(1, 1) - bicomplexify(c(-0.9, 0.0))).bc_norm() < 1e-14);
        assert!((g.max_norm() - 0.9).abs() < 1e-14);
        assert!(g.max_diff(&g) == 0.0);
    }
}
