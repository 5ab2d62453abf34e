//! Bicomplex arithmetic.
//!
//! A bicomplex number is `w = s + j v` with `s, v` complex ("scalar" and
//! "vector" parts) and a second imaginary unit `j` satisfying `j^2 = -1` that
//! commutes with `i`. The algebra is commutative but not a field: it contains
//! zero divisors, so no division is provided.
//!
//! Internally a [`Bicomplex`] stores its *idempotent coordinates*
//! `(w_plus, w_minus)` with respect to
//!
//! ```text
//! p_plus = (1 + j i) / 2,    p_minus = (1 - j i) / 2,
//! w      = p_plus * w_plus + p_minus * w_minus,
//! w_plus = s - i v,          w_minus = s + i v.
//! ```
//!
//! `p_plus` and `p_minus` are orthogonal idempotents (`p^2 = p`,
//! `p_plus * p_minus = 0`, `p_plus + p_minus = 1`), so multiplication is
//! componentwise in these coordinates. The equivalent Cartesian product
//! formula
//!
//! ```text
//! (u1 + j u2)(v1 + j v2) = (u1 v1 - u2 v2) + j (u1 v2 + u2 v1)
//! ```
//!
//! is kept in the test suite as an independent oracle.
//!
//! The hyperbolic-style norm is
//! `bc_norm(w) = sqrt((|w_plus|^2 + |w_minus|^2) / 2)`; it satisfies
//! `bc_norm(w v) <= sqrt(2) bc_norm(w) bc_norm(v)` and the per-component
//! bounds `|w_pm| / sqrt(2) <= bc_norm(w) <= (|w_plus| + |w_minus|) / sqrt(2)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::Error;

/// A bicomplex number in idempotent coordinates.
///
/// Construct from Cartesian parts with [`Bicomplex::new`], from idempotent
/// coordinates with [`Bicomplex::from_idempotent`], or from a complex number
/// `z = x + i y` via [`bicomplexify`] (`x + j y`).
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Bicomplex {
    plus: Complex64,
    minus: Complex64,
}

/// `x + i y  ->  x + j y`: embeds the complex plane along the `j` axis.
///
/// The image has idempotent coordinates `(conj(z), z)`, satisfies
/// `bc_conj(bicomplexify(z)) = bicomplexify(conj(z))` and
/// `bc_norm(bicomplexify(z)) = |z|`.
pub fn bicomplexify(z: Complex64) -> Bicomplex {
    Bicomplex::new(Complex64::new(z.re, 0.0), Complex64::new(z.im, 0.0))
}

impl Bicomplex {
    /// Additive identity.
    pub const ZERO: Bicomplex = Bicomplex {
        plus: Complex64::new(0.0, 0.0),
        minus: Complex64::new(0.0, 0.0),
    };

    /// Multiplicative identity.
    pub const ONE: Bicomplex = Bicomplex {
        plus: Complex64::new(1.0, 0.0),
        minus: Complex64::new(1.0, 0.0),
    };

    /// The imaginary unit `i` (scalar part `i`, vector part `0`).
    pub const I: Bicomplex = Bicomplex {
        plus: Complex64::new(0.0, 1.0),
        minus: Complex64::new(0.0, 1.0),
    };

    /// The second imaginary unit `j` (scalar part `0`, vector part `1`).
    ///
    /// In idempotent coordinates `j = (-i, i)`.
    pub const J: Bicomplex = Bicomplex {
        plus: Complex64::new(0.0, -1.0),
        minus: Complex64::new(0.0, 1.0),
    };

    /// The idempotent `p_plus = (1 + j i) / 2`, coordinates `(1, 0)`.
    pub const P_PLUS: Bicomplex = Bicomplex {
        plus: Complex64::new(1.0, 0.0),
        minus: Complex64::new(0.0, 0.0),
    };

    /// The idempotent `p_minus = (1 - j i) / 2`, coordinates `(0, 1)`.
    pub const P_MINUS: Bicomplex = Bicomplex {
        plus: Complex64::new(0.0, 0.0),
        minus: Complex64::new(1.0, 0.0),
    };

    /// Builds `w = sc + j vec` from Cartesian (scalar/vector) parts.
    pub fn new(sc: Complex64, vec: Complex64) -> Self {
        Bicomplex {
            plus: sc - Complex64::i() * vec,
            minus: sc + Complex64::i() * vec,
        }
    }

    /// Builds a bicomplex number directly from idempotent coordinates.
    pub const fn from_idempotent(plus: Complex64, minus: Complex64) -> Self {
        Bicomplex { plus, minus }
    }

    /// Embeds a real number (`sc = x`, `vec = 0`).
    pub fn from_real(x: f64) -> Self {
        Bicomplex {
            plus: Complex64::new(x, 0.0),
            minus: Complex64::new(x, 0.0),
        }
    }

    /// Embeds a complex number as the scalar part (`vec = 0`).
    ///
    /// Both idempotent coordinates equal `z`, so complex scalars act
    /// componentwise under multiplication.
    pub fn from_complex(z: Complex64) -> Self {
        Bicomplex { plus: z, minus: z }
    }

    /// Scalar part `s` of `w = s + j v`.
    pub fn sc(&self) -> Complex64 {
        (self.plus + self.minus) * 0.5
    }

    /// Vector part `v` of `w = s + j v`.
    pub fn vec(&self) -> Complex64 {
        Complex64::i() * (self.plus - self.minus) * 0.5
    }

    /// Idempotent coordinate `w_plus = sc - i vec`.
    pub const fn plus(&self) -> Complex64 {
        self.plus
    }

    /// Idempotent coordinate `w_minus = sc + i vec`.
    pub const fn minus(&self) -> Complex64 {
        self.minus
    }

    /// Both idempotent coordinates as `(plus, minus)`.
    pub const fn to_idempotent(&self) -> (Complex64, Complex64) {
        (self.plus, self.minus)
    }

    /// Bicomplex conjugation `bc_conj(s + j v) = s - j v`.
    ///
    /// In idempotent coordinates this swaps the components:
    /// `bc_conj(w)_plus = w_minus`. It is multiplicative:
    /// `bc_conj(a b) = bc_conj(a) bc_conj(b)`.
    pub const fn bc_conj(&self) -> Self {
        Bicomplex {
            plus: self.minus,
            minus: self.plus,
        }
    }

    /// Componentwise complex conjugation `(w_plus, w_minus) -> (w_plus*, w_minus*)`.
    ///
    /// Equivalently `s + j v -> s* - j v*`: the `*`-conjugation that fixes `j i`.
    /// Under [`bicomplexify`] it corresponds to `z -> conj(z)` composed with
    /// [`Bicomplex::bc_conj`].
    pub fn star_conj(&self) -> Self {
        Bicomplex {
            plus: self.plus.conj(),
            minus: self.minus.conj(),
        }
    }

    /// The norm `sqrt((|w_plus|^2 + |w_minus|^2) / 2)`.
    ///
    /// Examples: `bc_norm(j) = 1`, `bc_norm(p_plus) = 1/sqrt(2)`,
    /// `bc_norm(bicomplexify(z)) = |z|`. Submultiplicative up to `sqrt(2)`:
    /// `bc_norm(w v) <= sqrt(2) bc_norm(w) bc_norm(v)`.
    pub fn bc_norm(&self) -> f64 {
        ((self.plus.norm_sqr() + self.minus.norm_sqr()) * 0.5).sqrt()
    }

    /// True when `w` is a nonzero zero divisor, i.e. exactly one idempotent
    /// coordinate vanishes. Such elements annihilate the opposite idempotent
    /// ray; no multiplicative inverse exists.
    pub fn is_zero_divisor(&self) -> bool {
        (self.plus == Complex64::new(0.0, 0.0)) != (self.minus == Complex64::new(0.0, 0.0))
    }

    /// Componentwise map over the idempotent coordinates.
    pub fn map<F: Fn(Complex64) -> Complex64>(&self, f: F) -> Self {
        Bicomplex {
            plus: f(self.plus),
            minus: f(self.minus),
        }
    }
}

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

impl Add for Bicomplex {
    type Output = Bicomplex;
    fn add(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex {
            plus: self.plus + rhs.plus,
            minus: self.minus + rhs.minus,
        }
    }
}

impl Sub for Bicomplex {
    type Output = Bicomplex;
    fn sub(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex {
            plus: self.plus - rhs.plus,
            minus: self.minus - rhs.minus,
        }
    }
}

impl Mul for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex {
            plus: self.plus * rhs.plus,
            minus: self.minus * rhs.minus,
        }
    }
}

impl Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        Bicomplex {
            plus: -self.plus,
            minus: -self.minus,
        }
    }
}

impl AddAssign for Bicomplex {
    fn add_assign(&mut self, rhs: Bicomplex) {
        *self = *self + rhs;
    }
}

impl SubAssign for Bicomplex {
    fn sub_assign(&mut self, rhs: Bicomplex) {
        *self = *self - rhs;
    }
}

impl MulAssign for Bicomplex {
    fn mul_assign(&mut self, rhs: Bicomplex) {
        *self = *self * rhs;
    }
}

impl Mul<f64> for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: f64) -> Bicomplex {
        Bicomplex {
            plus: self.plus * rhs,
            minus: self.minus * rhs,
        }
    }
}

impl Mul<Bicomplex> for f64 {
    type Output = Bicomplex;
    fn mul(self, rhs: Bicomplex) -> Bicomplex {
        rhs * self
    }
}

impl Mul<Complex64> for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: Complex64) -> Bicomplex {
        Bicomplex {
            plus: self.plus * rhs,
            minus: self.minus * rhs,
        }
    }
}

impl Mul<Bicomplex> for Complex64 {
    type Output = Bicomplex;
    fn mul(self, rhs: Bicomplex) -> Bicomplex {
        rhs * self
    }
}

impl From<f64> for Bicomplex {
    fn from(x: f64) -> Self {
        Bicomplex::from_real(x)
    }
}

impl From<Complex64> for Bicomplex {
    fn from(z: Complex64) -> Self {
        Bicomplex::from_complex(z)
    }
}

// ---------------------------------------------------------------------------
// Literals: parsing and display
// ---------------------------------------------------------------------------

/// Parses a complex literal: `1`, `-2.5`, `3i`, `1+2i`, `0.5-0.25i`, `i`,
/// `-i`, `1e-3+2e-2i`. Whitespace is ignored.
pub fn parse_complex(input: &str) -> Result<Complex64, Error> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let bytes = s.as_bytes();
    // Rightmost '+'/'-' that is not an exponent sign splits the two terms.
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        let c = bytes[k] as char;
        if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
            split = Some(k);
            break;
        }
    }
    let invalid = || Error::Parse(format!("invalid complex literal `{input}`"));
    match split {
        Some(k) => {
            let (a, ai) = parse_term(&s[..k]).ok_or_else(invalid)?;
            let (b, bi) = parse_term(&s[k..]).ok_or_else(invalid)?;
            match (ai, bi) {
                (false, true) => Ok(Complex64::new(a, b)),
                (true, false) => Ok(Complex64::new(b, a)),
                _ => Err(invalid()),
            }
        }
        None => {
            let (x, imag) = parse_term(&s).ok_or_else(invalid)?;
            Ok(if imag {
                Complex64::new(0.0, x)
            } else {
                Complex64::new(x, 0.0)
            })
        }
    }
}

/// Parses one signed term, returning `(value, is_imaginary)`.
fn parse_term(t: &str) -> Option<(f64, bool)> {
    if let Some(num) = t.strip_suffix(['i', 'I']) {
        let v = match num {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => num.parse::<f64>().ok()?,
        };
        Some((v, true))
    } else {
        Some((t.parse::<f64>().ok()?, false))
    }
}

impl FromStr for Bicomplex {
    type Err = Error;

    /// Accepted literal forms:
    ///
    /// * `sc|vec` with complex literals on both sides — e.g. `1+2i|0.5-1i`;
    /// * `idem:p|q` giving the idempotent coordinates — e.g. `idem:1|0`;
    /// * a bare complex literal, taken as the scalar part with `vec = 0`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("idem:") {
            let (p, q) = rest
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("expected `idem:p|q` in `{s}`")))?;
            return Ok(Bicomplex::from_idempotent(
                parse_complex(p)?,
                parse_complex(q)?,
            ));
        }
        match s.split_once('|') {
            Some((sc, vec)) => Ok(Bicomplex::new(parse_complex(sc)?, parse_complex(vec)?)),
            None => Ok(Bicomplex::from_complex(parse_complex(s)?)),
        }
    }
}

fn fmt_complex(f: &mut fmt::Formatter<'_>, z: Complex64) -> fmt::Result {
    if z.im >= 0.0 {
        write!(f, "{}+{}i", z.re, z.im)
    } else {
        write!(f, "{}{}i", z.re, z.im)
    }
}

impl fmt::Display for Bicomplex {
    /// Displays in the Cartesian literal form `a+bi|c+di`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_complex(f, self.sc())?;
        write!(f, "|")?;
        fmt_complex(f, self.vec())
    }
}
