//! Dense univariate polynomials over a generic coefficient field.
//!
//! The same code runs in exact rational arithmetic (operator identities)
//! and in `f64`/`Complex64` (eigenfunctions with irrational mixing
//! coefficients). [`Scalar::is_negligible`] is exact zero for rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &BigRational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(v.into()))
    }

    /// Zero for exact types; `|self| <= 1e-12 * scale` for floating types.
    fn is_negligible(&self, scale: f64) -> bool;

    fn magnitude(&self) -> f64;
}

impl Scalar for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().map_or(f64::INFINITY, f64::abs)
    }
}

const FLOAT_NEGLIGIBLE: f64 = 1e-12;

impl Scalar for f64 {
    fn from_rational(r: &BigRational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn is_negligible(&self, scale: f64) -> bool {
        self.abs() <= FLOAT_NEGLIGIBLE * scale.max(1.0)
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    fn from_rational(r: &BigRational) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn is_negligible(&self, scale: f64) -> bool {
        self.norm() <= FLOAT_NEGLIGIBLE * scale.max(1.0)
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// `coeffs[k]` multiplies `x^k`; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn max_magnitude(&self) -> f64 {
        self.coeffs.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_i64(k as i64))
                .collect(),
        )
    }

    /// p(−x).
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Terms of odd degree only.
    pub fn odd_part(&self) -> Self {
        self.filter_parity(1)
    }

    pub fn even_part(&self) -> Self {
        self.filter_parity(0)
    }

    fn filter_parity(&self, rem: usize) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == rem { c.clone() } else { T::zero() })
                .collect(),
        )
    }

    /// x^k · p.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// p / x^k, or `None` when x^k does not divide p.
    pub fn div_x_pow(&self, k: usize) -> Option<Self> {
        let scale = self.max_magnitude();
        if self.coeffs.iter().take(k).any(|c| !c.is_negligible(scale)) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// (1 − x²)·p.
    pub fn mul_one_minus_x2(&self) -> Self {
        self - &self.shift_up(2)
    }

    /// p / (1 − x²), or `None` when the division leaves a remainder.
    pub fn div_one_minus_x2(&self) -> Option<Self> {
        let Some(d) = self.degree() else {
            return Some(Self::zero());
        };
        if d < 2 {
            return None;
        }
        // p_k = q_k − q_{k−2}, solved from the top down.
        let mut q = vec![T::zero(); d - 1];
        for k in (2..=d).rev() {
            let upper = q.get(k).cloned().unwrap_or_else(T::zero);
            q[k - 2] = upper - self.coeffs[k].clone();
        }
        let scale = self.max_magnitude();
        let r0 = self.coeffs[0].clone() - q[0].clone();
        let r1 = self.coeffs[1].clone() - q.get(1).cloned().unwrap_or_else(T::zero);
        if !r0.is_negligible(scale) || !r1.is_negligible(scale) {
            return None;
        }
        Some(Self::new(q))
    }

    /// p(q(x)).
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: Self) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}
