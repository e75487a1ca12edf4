//! Exact univariate polynomials over the integers and the characteristic
//! polynomial machinery built on them.

mod charpoly;
mod identities;
mod rational;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::GraphError;

pub use charpoly::{bareiss_det, charpoly, charpoly_deleted, charpoly_matrix, det_exact, CharpolyCache};
pub use identities::{
    bridge_charpoly_p2, bridge_charpoly_p3, loop_adjusted_charpoly, one_sum_charpoly,
    path_sum_poly, pendant_sqrt2_charpoly, poles_simple, return_walk_gf, walk_equivalent, walk_gf,
};
pub use rational::RationalFunction;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("division is not exact over the integers")]
    NotExact,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("graph has non-integer weights; exact characteristic polynomials need integer weights")]
    NonInteger,
    #[error("polynomial of degree {degree} has only {found} real roots")]
    NotRealRooted { degree: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Polynomial in `t` with arbitrary-precision integer coefficients,
/// ascending degree, no trailing zeros. The zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Also the characteristic polynomial of the graph on zero vertices.
    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn eval_integer(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Value at a float, evaluated exactly at the float's rational value
    /// and rounded once.
    pub fn eval_f64(&self, x: f64) -> f64 {
        match self.eval_dyadic(x) {
            Some((num, shift)) => ratio_to_f64(&BigRational::new_raw(num, BigInt::one() << shift)),
            None => f64::NAN,
        }
    }

    /// `(s, k)` with `p(x) = s / 2^k`, exact; `None` for non-finite `x`.
    fn eval_dyadic(&self, x: f64) -> Option<(BigInt, usize)> {
        if !x.is_finite() {
            return None;
        }
        let (mantissa, exponent, sign) = num_traits::Float::integer_decode(x);
        let mut m = BigInt::from(mantissa) * sign;
        let k = if exponent >= 0 {
            m <<= exponent as usize;
            0
        } else {
            (-exponent) as usize
        };
        let Some(d) = self.degree() else { return Some((BigInt::zero(), 0)) };
        let mut acc = self.coeffs[d].clone();
        for i in (0..d).rev() {
            acc = acc * &m + (&self.coeffs[i] << (k * (d - i)));
        }
        Some((acc, k * d))
    }

    /// Horner in floating point; fast but subject to cancellation.
    pub fn eval_f64_fast(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of `p(x)` (exact).
    pub fn sign_at(&self, x: f64) -> i8 {
        // floating Horner with a running error bound decides most cases
        let n = self.coeffs.len() as f64;
        let (mut v, mut mag) = (0.0f64, 0.0f64);
        for c in self.coeffs.iter().rev() {
            let cf = c.to_f64().unwrap_or(f64::INFINITY);
            v = v * x + cf;
            mag = mag * x.abs() + cf.abs();
        }
        let bound = 4.0 * (n + 1.0) * f64::EPSILON * mag;
        if v.is_finite() && mag.is_finite() && v.abs() > bound {
            return if v > 0.0 { 1 } else { -1 };
        }
        match self.eval_dyadic(x) {
            Some((s, _)) if s.is_positive() => 1,
            Some((s, _)) if s.is_negative() => -1,
            _ => 0,
        }
    }

    /// Pseudo-remainder of `self` by `d`: `lc(d)^e * self = q*d + r`,
    /// `deg r < deg d`.
    pub fn pseudo_rem(&self, d: &Self) -> Result<Self, PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let lc = d.leading().expect("nonzero").clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().expect("nonzero").clone();
            r = &r.scale(&lc) - &d.scale(&lr).shift(dr - dd);
        }
        Ok(r)
    }

    /// Quotient and remainder over `Z[t]`; fails unless every quotient
    /// coefficient is an integer.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let lc = d.leading().expect("nonzero");
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let (qc, rem) = r.leading().expect("nonzero").div_rem(lc);
            if !rem.is_zero() {
                return Err(PolyError::NotExact);
            }
            r = &r - &d.scale(&qc).shift(dr - dd);
            q[dr - dd] = qc;
        }
        Ok((Self::new(q), r))
    }

    /// Exact quotient; errors when `d` does not divide `self` in `Z[t]`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotExact)
        }
    }

    /// Greatest common divisor by the primitive pseudo-remainder sequence;
    /// primitive with positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b is nonzero");
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// `p / gcd(p, p')`: same roots, each simple.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides its argument")
    }

    /// No repeated roots over the complex numbers.
    pub fn is_squarefree(&self) -> bool {
        self.is_constant() || self.gcd(&self.derivative()).is_constant()
    }

    /// Human-readable form, e.g. `t^3 - 2t`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() || k == 0 {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push('t'),
                _ => out.push_str(&format!("t^{k}")),
            }
        }
        out
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Ascending coefficient list, e.g. `[-1, 0, 1]` for `t^2 - 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.pretty())
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}
