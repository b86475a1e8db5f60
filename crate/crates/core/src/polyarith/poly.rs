use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{Int, Rat};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and `degree()` returns `-1` for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type IntPoly = Poly<Int>;
pub type RatPoly = Poly<Rat>;

impl<C: Zero> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> C
    where
        C: Clone,
    {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }
}

impl<C: Zero + One> Poly<C> {
    pub fn one() -> Self {
        Poly::new(vec![C::one()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![C::zero(), C::one()])
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }
}

impl<C> Poly<C>
where
    C: Clone + Zero + One + PartialEq,
    for<'a> &'a C: Add<&'a C, Output = C> + Mul<&'a C, Output = C>,
{
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut factor = C::zero();
        for a in self.coeffs.iter().skip(1) {
            factor = &factor + &C::one();
            out.push(a * &factor);
        }
        Poly::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, a| &(&acc * x) + a)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool
    where
        C: Signed,
    {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl<'a, C> Add<&'a Poly<C>> for &'a Poly<C>
where
    C: Clone + Zero,
    for<'b> &'b C: Add<&'b C, Output = C>,
{
    type Output = Poly<C>;

    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = &*o + s;
        }
        Poly::new(out)
    }
}

impl<'a, C> Sub<&'a Poly<C>> for &'a Poly<C>
where
    C: Clone + Zero,
    for<'b> &'b C: Add<&'b C, Output = C> + Sub<&'b C, Output = C> + Neg<Output = C>,
{
    type Output = Poly<C>;

    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = C::zero();
        let out = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = rhs.coeffs.get(i).unwrap_or(&zero);
                a - b
            })
            .collect();
        Poly::new(out)
    }
}

impl<'a, C> Mul<&'a Poly<C>> for &'a Poly<C>
where
    C: Clone + Zero,
    for<'b> &'b C: Add<&'b C, Output = C> + Mul<&'b C, Output = C>,
{
    type Output = Poly<C>;

    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl<C> Neg for &Poly<C>
where
    C: Zero,
    for<'b> &'b C: Neg<Output = C>,
{
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<C> $tr<Poly<C>> for Poly<C>
        where
            for<'a> &'a Poly<C>: $tr<&'a Poly<C>, Output = Poly<C>>,
        {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl RatPoly {
    pub fn from_int_poly(p: &IntPoly) -> RatPoly {
        Poly {
            coeffs: p.coeffs.iter().cloned().map(Rat::from_integer).collect(),
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> RatPoly {
        Poly::new(coeffs.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    /// `Some` iff every coefficient is an integer.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| Poly { coeffs })
    }

    /// Quotient and remainder of exact division by `divisor`.
    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dd + 1];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dd - 1];
            if top.is_zero() {
                continue;
            }
            let q = top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * d;
            }
            quot[shift] = q;
        }
        rem.truncate(dd - 1);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &RatPoly) -> Result<RatPoly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// `self / divisor`, failing with `Error::Internal` unless the division is exact.
    pub fn exact_quotient(&self, divisor: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    /// Scales to a monic polynomial; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            Some(lead) if !lead.is_one() => self.scale(&lead.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPoly) -> Result<RatPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial("gcd"));
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b)?.monic();
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Positive rational multiple with coprime integer coefficients.
    ///
    /// The scaling factor is positive, so signs at every point are preserved.
    pub fn primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return Poly::zero();
        }
        let den_lcm = self.coeffs.iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<Int> = self.coeffs.iter().map(|c| c.numer() * (&den_lcm / c.denom())).collect();
        let content = scaled.iter().fold(Int::zero(), |acc, c| acc.gcd(c));
        Poly {
            coeffs: scaled.into_iter().map(|c| c / &content).collect(),
        }
    }
}

impl IntPoly {
    pub fn from_ints(coeffs: &[i64]) -> IntPoly {
        Poly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from_int_poly(self)
    }

    /// Sign of the value at a rational point, without forming rationals.
    ///
    /// Evaluates the homogenized form `sum c_i p^i q^(d-i)` with `x = p/q`, `q > 0`.
    pub fn sign_at(&self, x: &Rat) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let (p, q) = (x.numer(), x.denom());
        let mut acc = Int::zero();
        let mut qpow = Int::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        // acc = q^d * f(p/q)
        acc.sign_ordering()
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for Int {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl<C: fmt::Display + Zero + One + PartialEq> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "({c})x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<C: fmt::Display + Zero + One + PartialEq> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}
