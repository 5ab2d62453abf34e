//! Complex bivariate polynomials in `z` and `conj(z)`.
//!
//! [`CPoly`] represents `f(z) = sum c_{mn} z^m zbar^n` with complex
//! coefficients, the workhorse behind the idempotent components of a
//! polynomial bicomplex field. Coefficients live in a `BTreeMap` keyed by
//! `(m, n)` so that iteration (and therefore evaluation and serialization)
//! is deterministic.
//!
//! Wirtinger derivatives are exact term-by-term:
//! `d/dz (z^m zbar^n) = m z^(m-1) zbar^n` and
//! `d/dzbar (z^m zbar^n) = n z^m zbar^(n-1)`.
//! The complex conjugate of a polynomial is again a polynomial with exponents
//! swapped and coefficients conjugated: `conj(f) = sum conj(c_{mn}) z^n zbar^m`.

use std::collections::BTreeMap;

use num_complex::Complex64;

/// A polynomial `sum c_{mn} z^m zbar^n` over the complex numbers.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CPoly {
    coeffs: BTreeMap<(u32, u32), Complex64>,
}

impl CPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        CPoly::default()
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Complex64) -> Self {
        let mut p = CPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    /// The monomial `c z^m zbar^n`.
    pub fn monomial(m: u32, n: u32, c: Complex64) -> Self {
        let mut p = CPoly::zero();
        p.add_term(m, n, c);
        p
    }

    /// The coordinate `z`.
    pub fn var_z() -> Self {
        CPoly::monomial(1, 0, Complex64::new(1.0, 0.0))
    }

    /// The conjugate coordinate `zbar`.
    pub fn var_zbar() -> Self {
        CPoly::monomial(0, 1, Complex64::new(1.0, 0.0))
    }

    /// Expands `sum_k a_k (alpha z + beta zbar)^k` from univariate
    /// coefficients `a_k` via the binomial theorem.
    pub fn from_univariate_in_linear(a: &[Complex64], alpha: Complex64, beta: Complex64) -> Self {
        let mut p = CPoly::zero();
        for (k, &ak) in a.iter().enumerate() {
            if ak == Complex64::new(0.0, 0.0) {
                continue;
            }
            // (alpha z + beta zbar)^k = sum_j C(k,j) alpha^j beta^(k-j) z^j zbar^(k-j)
            for j in 0..=k {
                let c = binomial(k, j) * alpha.powu(j as u32) * beta.powu((k - j) as u32);
                p.add_term(j as u32, (k - j) as u32, ak * c);
            }
        }
        p
    }

    /// Adds `c` to the `(m, n)` coefficient, pruning exact zeros.
    pub fn add_term(&mut self, m: u32, n: u32, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        let slot = self.coeffs.entry((m, n)).or_insert(Complex64::new(0.0, 0.0));
        *slot += c;
        if *slot == Complex64::new(0.0, 0.0) {
            self.coeffs.remove(&(m, n));
        }
    }

    /// The `(m, n)` coefficient (zero when absent).
    pub fn coeff(&self, m: u32, n: u32) -> Complex64 {
        self.coeffs
            .get(&(m, n))
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Iterates over nonzero terms in deterministic `(m, n)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, Complex64)> + '_ {
        self.coeffs.iter().map(|(&(m, n), &c)| (m, n, c))
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// True when no nonzero coefficient is stored.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Maximum total degree `m + n` over nonzero terms (`0` for the zero
    /// polynomial).
    pub fn total_degree(&self) -> u32 {
        self.coeffs.keys().map(|&(m, n)| m + n).max().unwrap_or(0)
    }

    /// Sum of coefficient magnitudes; an upper bound for `sup_{|z|<=1} |f|`.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).sum()
    }

    /// Evaluates at `z` (with `zbar = conj(z)`).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let zb = z.conj();
        let (mut max_m, mut max_n) = (0u32, 0u32);
        for &(m, n) in self.coeffs.keys() {
            max_m = max_m.max(m);
            max_n = max_n.max(n);
        }
        let zp = power_table(z, max_m);
        let zbp = power_table(zb, max_n);
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(m, n), &c) in &self.coeffs {
            acc += c * zp[m as usize] * zbp[n as usize];
        }
        acc
    }

    /// Wirtinger derivative `df/dz`.
    pub fn d_z(&self) -> Self {
        let mut p = CPoly::zero();
        for (m, n, c) in self.terms() {
            if m > 0 {
                p.add_term(m - 1, n, c * m as f64);
            }
        }
        p
    }

    /// Wirtinger derivative `df/dzbar`.
    pub fn d_zbar(&self) -> Self {
        let mut p = CPoly::zero();
        for (m, n, c) in self.terms() {
            if n > 0 {
                p.add_term(m, n - 1, c * n as f64);
            }
        }
        p
    }

    /// The polynomial representing `conj(f)`: exponents swapped, coefficients
    /// conjugated.
    pub fn conj_poly(&self) -> Self {
        let mut p = CPoly::zero();
        for (m, n, c) in self.terms() {
            p.add_term(n, m, c.conj());
        }
        p
    }

    /// `self + other`.
    pub fn add(&self, other: &CPoly) -> Self {
        let mut p = self.clone();
        for (m, n, c) in other.terms() {
            p.add_term(m, n, c);
        }
        p
    }

    /// `self - other`.
    pub fn sub(&self, other: &CPoly) -> Self {
        let mut p = self.clone();
        for (m, n, c) in other.terms() {
            p.add_term(m, n, -c);
        }
        p
    }

    /// `c * self`.
    pub fn scale(&self, c: Complex64) -> Self {
        let mut p = CPoly::zero();
        for (m, n, a) in self.terms() {
            p.add_term(m, n, a * c);
        }
        p
    }

    /// `-self`.
    pub fn neg(&self) -> Self {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    /// Polynomial product.
    pub fn mul(&self, other: &CPoly) -> Self {
        let mut p = CPoly::zero();
        for (m1, n1, c1) in self.terms() {
            for (m2, n2, c2) in other.terms() {
                p.add_term(m1 + m2, n1 + n2, c1 * c2);
            }
        }
        p
    }

    /// Substitutes linear forms for the two variables: returns the polynomial
    /// `f(a0 z + a1 conj(z), b0 z + b1 conj(z))` where `(a0, a1) = first` and
    /// `(b0, b1) = second`. Used for changes of real-linear coordinates such
    /// as the ellipse substitution `Z = z + c conj(z)` and its inverse.
    pub fn substitute_linear(
        &self,
        first: (Complex64, Complex64),
        second: (Complex64, Complex64),
    ) -> Self {
        let deg = self.total_degree();
        let lin1 = {
            let mut p = CPoly::zero();
            p.add_term(1, 0, first.0);
            p.add_term(0, 1, first.1);
            p
        };
        let lin2 = {
            let mut p = CPoly::zero();
            p.add_term(1, 0, second.0);
            p.add_term(0, 1, second.1);
            p
        };
        let mut pow1 = vec![CPoly::constant(Complex64::new(1.0, 0.0))];
        let mut pow2 = pow1.clone();
        for k in 1..=deg as usize {
            pow1.push(pow1[k - 1].mul(&lin1));
            pow2.push(pow2[k - 1].mul(&lin2));
        }
        let mut out = CPoly::zero();
        for (m, n, c) in self.terms() {
            let term = pow1[m as usize].mul(&pow2[n as usize]).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// Drops terms with coefficient magnitude `<= tol` (used to shed exact
    /// cancellations that survive as rounding dust after long operator
    /// compositions).
    pub fn pruned(&self, tol: f64) -> Self {
        let mut p = CPoly::zero();
        for (m, n, c) in self.terms() {
            if c.norm() > tol {
                p.add_term(m, n, c);
            }
        }
        p
    }
}

/// `[1, z, z^2, ..., z^max]`.
fn power_table(z: Complex64, max: u32) -> Vec<Complex64> {
    let mut t = Vec::with_capacity(max as usize + 1);
    let mut acc = Complex64::new(1.0, 0.0);
    t.push(acc);
    for _ in 0..max {
        acc *= z;
        t.push(acc);
    }
    t
}

/// Binomial coefficient as `f64` (exact for the degrees used here).
fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_and_arithmetic() {
        // f = 2 + z^2 zbar - i zbar^3
        let mut f = CPoly::constant(c(2.0, 0.0));
        f.add_term(2, 1, c(1.0, 0.0));
        f.add_term(0, 3, c(0.0, -1.0));
        let z = c(0.3, -0.4);
        let want = c(2.0, 0.0) + z * z * z.conj() - Complex64::i() * z.conj().powu(3);
        assert!((f.eval(z) - want).norm() < 1e-15);

        let g = CPoly::var_z().mul(&CPoly::var_zbar()); // |z|^2
        assert!((g.eval(z) - z * z.conj()).norm() < 1e-15);

        let h = f.mul(&g);
        assert!((h.eval(z) - want * z.norm_sqr()).norm() < 1e-14);
        assert_eq!(f.add(&f).sub(&f), f);
    }

    #[test]
    fn wirtinger_derivatives_are_exact() {
        // f = z^3 zbar^2: df/dz = 3 z^2 zbar^2, df/dzbar = 2 z^3 zbar.
        let f = CPoly::monomial(3, 2, c(1.0, 0.0));
        assert_eq!(f.d_z(), CPoly::monomial(2, 2, c(3.0, 0.0)));
        assert_eq!(f.d_zbar(), CPoly::monomial(3, 1, c(2.0, 0.0)));
        assert!(CPoly::constant(c(1.0, 2.0)).d_z().is_zero());
    }

    #[test]
    fn conj_poly_matches_pointwise_conjugation() {
        let mut f = CPoly::monomial(2, 0, c(1.0, -2.0));
        f.add_term(0, 1, c(0.5, 0.25));
        let g = f.conj_poly();
        for &z in &[c(0.2, 0.7), c(-0.5, 0.1)] {
            assert!((g.eval(z) - f.eval(z).conj()).norm() < 1e-15);
        }
        assert_eq!(g.conj_poly(), f);
    }

    #[test]
    fn linear_substitution_expands_binomially() {
        // (z + 0.5 zbar)^3 evaluated directly vs expanded.
        let a = [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let p = CPoly::from_univariate_in_linear(&a, c(1.0, 0.0), c(0.5, 0.0));
        let z = c(0.3, 0.6);
        let t = z + 0.5 * z.conj();
        assert!((p.eval(z) - t.powu(3)).norm() < 1e-14);
        assert_eq!(p.total_degree(), 3);
    }

    #[test]
    fn l1_bounds_sup_on_disk() {
        let mut f = CPoly::monomial(4, 1, c(0.3, -0.4));
        f.add_term(0, 0, c(-1.0, 0.0));
        let l1 = f.l1_norm();
        for k in 0..50 {
            let th = 2.0 * std::f64::consts::PI * k as f64 / 50.0;
            let z = Complex64::from_polar(0.999, th);
            assert!(f.eval(z).norm() <= l1 + 1e-12);
        }
    }

    #[test]
    fn zero_pruning() {
        let mut f = CPoly::monomial(1, 1, c(1.0, 0.0));
        f.add_term(1, 1, c(-1.0, 0.0));
        assert!(f.is_zero());
        assert_eq!(f.num_terms(), 0);
        let g = CPoly::monomial(2, 0, c(1e-16, 0.0));
        assert!(g.pruned(1e-12).is_zero());
    }
}
