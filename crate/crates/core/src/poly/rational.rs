use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use super::{IntPoly, PolyError};

/// Quotient of integer polynomials, kept in lowest terms: numerator and
/// denominator coprime, no common integer content, denominator with
/// positive leading coefficient (monic whenever the quotient admits it).
/// Equal functions therefore have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self { num, den: IntPoly::one() });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g)?;
        let mut den = den.div_exact(&g)?;
        let c = num.content().gcd(&den.content());
        let c = if den.leading().is_some_and(Signed::is_negative) { -c } else { c };
        num = IntPoly::new(num.coeffs().iter().map(|x| x / &c).collect());
        den = IntPoly::new(den.coeffs().iter().map(|x| x / &c).collect());
        Ok(Self { num, den })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self { num: p, den: IntPoly::one() }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Every pole (root of the reduced denominator) is simple.
    pub fn poles_simple(&self) -> bool {
        self.den.is_squarefree()
    }

    pub fn recip(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num.pretty(), self.den.pretty())
    }
}

#[derive(Serialize)]
struct RationalFunctionRepr {
    numerator: String,
    denominator: String,
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RationalFunctionRepr { numerator: self.num.to_string(), denominator: self.den.to_string() }.serialize(s)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}
