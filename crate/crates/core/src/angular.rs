//! Angular functions f(θ) = A(cos θ) + sin θ·B(cos θ), the Dunkl angular
//! operators and the parity-sector angular eigenproblem.
//!
//! `apply_g` is the real operator G with J_θ = iG:
//!
//! ```text
//! G = ∂_θ + ν₂ cot θ (1 − R₂) − ν₁ tan θ (1 − R₁)
//! ```
//!
//! In polar form R₁: θ → π − θ maps (A(c), B(c)) to (A(−c), B(−c)) and
//! R₂: θ → −θ maps (A, B) to (A, −B).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::params::{half, Branch, Ell, Parity, Sector, WignerParams};
use crate::poly::{Poly, Scalar};

/// A(cos θ) + sin θ·B(cos θ). Unique once sin²θ is reduced to 1 − cos²θ.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly<T> {
    even: Poly<T>,
    odd: Poly<T>,
}

impl<T: Scalar> TrigPoly<T> {
    pub fn new(even: Poly<T>, odd: Poly<T>) -> Self {
        Self { even, odd }
    }

    pub fn zero() -> Self {
        Self::new(Poly::zero(), Poly::zero())
    }

    pub fn one() -> Self {
        Self::new(Poly::constant(T::one()), Poly::zero())
    }

    pub fn cos() -> Self {
        Self::new(Poly::x(), Poly::zero())
    }

    pub fn sin() -> Self {
        Self::new(Poly::zero(), Poly::constant(T::one()))
    }

    /// A, the part without a sin θ factor.
    pub fn even_part(&self) -> &Poly<T> {
        &self.even
    }

    /// B, the coefficient of sin θ.
    pub fn odd_part(&self) -> &Poly<T> {
        &self.odd
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn max_magnitude(&self) -> f64 {
        self.even.max_magnitude().max(self.odd.max_magnitude())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.even + &rhs.even, &self.odd + &rhs.odd)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.even - &rhs.even, &self.odd - &rhs.odd)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.even, -&self.odd)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.even.scale(s), self.odd.scale(s))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let even = &(&self.even * &rhs.even) + &(&self.odd * &rhs.odd).mul_one_minus_x2();
        let odd = &(&self.even * &rhs.odd) + &(&self.odd * &rhs.even);
        Self::new(even, odd)
    }

    /// Multiplication by a polynomial in cos θ.
    pub fn mul_cos_poly(&self, p: &Poly<T>) -> Self {
        Self::new(&self.even * p, &self.odd * p)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> TrigPoly<U> {
        TrigPoly::new(self.even.map(f), self.odd.map(f))
    }

    /// θ → π − θ.
    pub fn reflect_r1(&self) -> Self {
        Self::new(self.even.reflect(), self.odd.reflect())
    }

    /// θ → −θ.
    pub fn reflect_r2(&self) -> Self {
        Self::new(self.even.clone(), -&self.odd)
    }

    pub fn reflect_r1r2(&self) -> Self {
        self.reflect_r1().reflect_r2()
    }

    /// ∂_θ: (A, B) → (cB − (1 − c²)B′, −A′).
    pub fn derivative(&self) -> Self {
        let even = &self.odd.shift_up(1) - &self.odd.derivative().mul_one_minus_x2();
        Self::new(even, -&self.even.derivative())
    }

    /// Evaluates f at θ. Available for coefficient types with a complex embedding.
    pub fn eval(&self, theta: f64) -> Complex64
    where
        T: IntoComplex,
    {
        let c = Complex64::new(theta.cos(), 0.0);
        let horner = |p: &Poly<T>| {
            p.coeffs()
                .iter()
                .rev()
                .fold(Complex64::zero(), |acc, a| acc * c + a.to_complex())
        };
        horner(&self.even) + theta.sin() * horner(&self.odd)
    }

    /// Coefficient vector (A coefficients, then B coefficients), zero-padded.
    fn flatten(&self, even_len: usize, odd_len: usize) -> Vec<T> {
        (0..even_len)
            .map(|k| self.even.coeff(k))
            .chain((0..odd_len).map(|k| self.odd.coeff(k)))
            .collect()
    }
}

pub trait IntoComplex {
    fn to_complex(&self) -> Complex64;
}

impl IntoComplex for BigRational {
    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl IntoComplex for f64 {
    fn to_complex(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

impl IntoComplex for Complex64 {
    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// numerator / (cos^c_pow θ · sin^(2·sin2_pow) θ), used while assembling
/// operators whose individual terms are singular.
struct TrigFraction<T> {
    numerator: TrigPoly<T>,
    cos_pow: usize,
    sin2_pow: usize,
}

impl<T: Scalar> TrigFraction<T> {
    fn whole(f: TrigPoly<T>) -> Self {
        Self {
            numerator: f,
            cos_pow: 0,
            sin2_pow: 0,
        }
    }

    /// tan θ·f = (sin θ·A + (1 − c²)B) / c.
    fn tan_times(f: &TrigPoly<T>) -> Self {
        Self {
            numerator: TrigPoly::new(f.odd.mul_one_minus_x2(), f.even.clone()),
            cos_pow: 1,
            sin2_pow: 0,
        }
    }

    /// cot θ·f = (c(1 − c²)B + sin θ·cA) / (1 − c²).
    fn cot_times(f: &TrigPoly<T>) -> Self {
        Self {
            numerator: TrigPoly::new(f.odd.mul_one_minus_x2().shift_up(1), f.even.shift_up(1)),
            cos_pow: 0,
            sin2_pow: 1,
        }
    }

    fn over_cos2(f: &TrigPoly<T>) -> Self {
        Self {
            numerator: f.clone(),
            cos_pow: 2,
            sin2_pow: 0,
        }
    }

    fn over_sin2(f: &TrigPoly<T>) -> Self {
        Self {
            numerator: f.clone(),
            cos_pow: 0,
            sin2_pow: 1,
        }
    }

    fn scale(mut self, s: &T) -> Self {
        self.numerator = self.numerator.scale(s);
        self
    }

    fn raise_to(&self, cos_pow: usize, sin2_pow: usize) -> TrigPoly<T> {
        let mut num = self.numerator.clone();
        let cos_shift = cos_pow - self.cos_pow;
        num = TrigPoly::new(num.even.shift_up(cos_shift), num.odd.shift_up(cos_shift));
        for _ in self.sin2_pow..sin2_pow {
            num = TrigPoly::new(num.even.mul_one_minus_x2(), num.odd.mul_one_minus_x2());
        }
        num
    }

    fn add(self, rhs: Self) -> Self {
        let cos_pow = self.cos_pow.max(rhs.cos_pow);
        let sin2_pow = self.sin2_pow.max(rhs.sin2_pow);
        let numerator = self
            .raise_to(cos_pow, sin2_pow)
            .add(&rhs.raise_to(cos_pow, sin2_pow));
        Self {
            numerator,
            cos_pow,
            sin2_pow,
        }
    }

    /// Exact division of the numerator; `None` if the result is not a trigonometric polynomial.
    fn reduce(self) -> Option<TrigPoly<T>> {
        let divide = |p: &Poly<T>| -> Option<Poly<T>> {
            let mut q = p.div_x_pow(self.cos_pow)?;
            for _ in 0..self.sin2_pow {
                q = q.div_one_minus_x2()?;
            }
            Some(q)
        };
        Some(TrigPoly::new(
            divide(&self.numerator.even)?,
            divide(&self.numerator.odd)?,
        ))
    }
}

fn nu_pair<T: Scalar>(params: &WignerParams) -> (T, T) {
    (T::from_rational(params.nu1()), T::from_rational(params.nu2()))
}

/// G f = ∂_θ f + ν₂ cot θ (1 − R₂) f − ν₁ tan θ (1 − R₁) f.
pub fn apply_g<T: Scalar>(f: &TrigPoly<T>, params: &WignerParams) -> TrigPoly<T> {
    let (nu1, nu2) = nu_pair::<T>(params);
    let diff_r2 = f.sub(&f.reflect_r2());
    let diff_r1 = f.sub(&f.reflect_r1());
    TrigFraction::whole(f.derivative())
        .add(TrigFraction::cot_times(&diff_r2).scale(&nu2))
        .add(TrigFraction::tan_times(&diff_r1).scale(&(-nu1)))
        .reduce()
        .expect("reflection differences supply the sin/cos factors G divides by")
}

/// B_θ f = −½∂²_θ f + (ν₁ tan θ − ν₂ cot θ)∂_θ f + ν₁/(2cos²θ)(1 − R₁)f + ν₂/(2sin²θ)(1 − R₂)f.
pub fn apply_b<T: Scalar>(f: &TrigPoly<T>, params: &WignerParams) -> TrigPoly<T> {
    let (nu1, nu2) = nu_pair::<T>(params);
    let half = T::from_rational(&half());
    let df = f.derivative();
    let d2f = df.derivative();
    TrigFraction::whole(d2f.scale(&(-half.clone())))
        .add(TrigFraction::tan_times(&df).scale(&nu1))
        .add(TrigFraction::cot_times(&df).scale(&(-nu2.clone())))
        .add(TrigFraction::over_cos2(&f.sub(&f.reflect_r1())).scale(&(nu1 * half.clone())))
        .add(TrigFraction::over_sin2(&f.sub(&f.reflect_r2())).scale(&(nu2 * half)))
        .reduce()
        .expect("B_theta maps trigonometric polynomials to trigonometric polynomials")
}

/// G²f + 2B_θf + 2ν₁ν₂(1 − R₁R₂)f; identically zero since J_θ² = −G².
pub fn angular_identity_residual<T: Scalar>(f: &TrigPoly<T>, params: &WignerParams) -> TrigPoly<T> {
    let (nu1, nu2) = nu_pair::<T>(params);
    let two = T::from_i64(2);
    let g2 = apply_g(&apply_g(f, params), params);
    let b = apply_b(f, params).scale(&two);
    let refl = f.sub(&f.reflect_r1r2()).scale(&(two * nu1 * nu2));
    g2.add(&b).add(&refl)
}

fn jacobi_step<T: Scalar>(n: u32, alpha: &T, beta: &T) -> (T, T, T) {
    let n_ = T::from_i64(i64::from(n));
    let two = T::from_i64(2);
    let s = two.clone() * n_.clone() + alpha.clone() + beta.clone();
    let denom = two.clone() * n_.clone() * (n_.clone() + alpha.clone() + beta.clone()) * (s.clone() - two.clone());
    let a = (s.clone() - T::one()) * s.clone() * (s.clone() - two.clone()) / denom.clone();
    let b = (s.clone() - T::one())
        * (alpha.clone() * alpha.clone() - beta.clone() * beta.clone())
        / denom.clone();
    let c = two * (n_.clone() + alpha.clone() - T::one()) * (n_ + beta.clone() - T::one()) * s / denom;
    (a, b, c)
}

fn jacobi_eval<T: Scalar>(n: u32, alpha: &T, beta: &T, x: &T) -> T {
    let two = T::from_i64(2);
    let p0 = T::one();
    if n == 0 {
        return p0;
    }
    let p1 = (alpha.clone() + T::one())
        + (alpha.clone() + beta.clone() + two.clone()) * (x.clone() - T::one()) / two;
    let (mut prev, mut cur) = (p0, p1);
    for k in 2..=n {
        let (a, b, c) = jacobi_step(k, alpha, beta);
        let next = (a * x.clone() + b) * cur.clone() - c * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// P_n^(α,β)(x) by the three-term recurrence.
pub fn jacobi(n: u32, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if !(alpha > -1.0 && beta > -1.0) {
        return Err(Error::JacobiRange { alpha, beta });
    }
    Ok(jacobi_eval(n, &alpha, &beta, &x))
}

/// Exact rational P_n^(α,β)(x).
pub fn jacobi_exact(n: u32, alpha: &BigRational, beta: &BigRational, x: &BigRational) -> Result<BigRational> {
    check_jacobi_exact(alpha, beta)?;
    Ok(jacobi_eval(n, alpha, beta, x))
}

fn check_jacobi_exact(alpha: &BigRational, beta: &BigRational) -> Result<()> {
    let minus_one = -BigRational::one();
    if *alpha <= minus_one || *beta <= minus_one {
        return Err(Error::JacobiRange {
            alpha: alpha.to_f64().unwrap_or(f64::NAN),
            beta: beta.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// P_n^(α,β) as an exact polynomial in its argument.
pub fn jacobi_poly(n: u32, alpha: &BigRational, beta: &BigRational) -> Result<Poly<BigRational>> {
    check_jacobi_exact(alpha, beta)?;
    let one = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let p0 = Poly::constant(one.clone());
    if n == 0 {
        return Ok(p0);
    }
    let slope = (alpha + beta + &two) / &two;
    let p1 = Poly::new(vec![alpha + &one - &slope, slope]);
    let (mut prev, mut cur) = (p0, p1);
    for k in 2..=n {
        let (a, b, c) = jacobi_step(k, alpha, beta);
        let linear = Poly::new(vec![b, a]);
        let next = &(&linear * &cur) - &prev.scale(&c);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Closed-form λ² : 4ℓ(ℓ+ν₁+ν₂) for ε = +1, 4(ℓ+ν₁)(ℓ+ν₂) for ε = −1.
pub fn lambda_squared(ell: Ell, parity: Parity, params: &WignerParams) -> BigRational {
    let l = ell.to_rational();
    let four = BigRational::from_integer(BigInt::from(4));
    match parity {
        Parity::Even => four * &l * (&l + params.nu1() + params.nu2()),
        Parity::Odd => four * (&l + params.nu1()) * (&l + params.nu2()),
    }
}

/// λ± = ±2√(ℓ(ℓ+ν₁+ν₂)) or ±2√((ℓ+ν₁)(ℓ+ν₂)).
///
/// The radicand is formed exactly and rounded once, so ν₁ = −ν₂ gives the
/// undeformed value bit for bit.
pub fn lambda_value(ell: Ell, parity: Parity, branch: Branch, params: &WignerParams) -> f64 {
    let radicand = lambda_squared(ell, parity, params).to_f64().unwrap_or(f64::NAN);
    branch.sign() * radicand.max(0.0).sqrt()
}

/// Jacobi argument −cos 2θ = 1 − 2cos²θ as a polynomial in cos θ.
fn minus_cos_2theta() -> Poly<BigRational> {
    Poly::new(vec![
        BigRational::one(),
        BigRational::zero(),
        BigRational::from_integer(BigInt::from(-2)),
    ])
}

/// The two real functions spanning a G-invariant plane for (ℓ, ε).
///
/// ε = +1: P_ℓ^(ν₁−½,ν₂−½)(−cos 2θ) and sin θ cos θ P_{ℓ−1}^(ν₁+½,ν₂+½)(−cos 2θ).
/// ε = −1: cos θ P_{ℓ−½}^(ν₁+½,ν₂−½)(−cos 2θ) and sin θ P_{ℓ−½}^(ν₁−½,ν₂+½)(−cos 2θ).
pub fn candidate_basis(ell: Ell, parity: Parity, params: &WignerParams) -> Result<[TrigPoly<BigRational>; 2]> {
    let h = half();
    let (n1, n2) = (params.nu1(), params.nu2());
    let arg = minus_cos_2theta();
    let jac = |deg: u32, a: BigRational, b: BigRational| -> Result<Poly<BigRational>> {
        Ok(jacobi_poly(deg, &a, &b)?.compose(&arg))
    };
    match parity {
        Parity::Even => {
            ell.validate(parity, false)?;
            let l = ell.twice() / 2;
            let first = jac(l, n1 - &h, n2 - &h)?;
            let second = jac(l - 1, n1 + &h, n2 + &h)?.shift_up(1);
            Ok([
                TrigPoly::new(first, Poly::zero()),
                TrigPoly::new(Poly::zero(), second),
            ])
        }
        Parity::Odd => {
            ell.validate(parity, false)?;
            let deg = (ell.twice() - 1) / 2;
            let first = jac(deg, n1 + &h, n2 - &h)?.shift_up(1);
            let second = jac(deg, n1 - &h, n2 + &h)?;
            Ok([
                TrigPoly::new(first, Poly::zero()),
                TrigPoly::new(Poly::zero(), second),
            ])
        }
    }
}

/// The candidate pair exactly as typeset: Jacobi argument −2cos θ, and for
/// ε = +1 the parameters (ν₁+½, ν₂+½) on both terms.
pub fn candidate_basis_as_printed(ell: Ell, parity: Parity, params: &WignerParams) -> Result<[TrigPoly<BigRational>; 2]> {
    let h = half();
    let (n1, n2) = (params.nu1(), params.nu2());
    let arg = Poly::new(vec![BigRational::zero(), BigRational::from_integer(BigInt::from(-2))]);
    let jac = |deg: u32, a: BigRational, b: BigRational| -> Result<Poly<BigRational>> {
        Ok(jacobi_poly(deg, &a, &b)?.compose(&arg))
    };
    ell.validate(parity, false)?;
    match parity {
        Parity::Even => {
            let l = ell.twice() / 2;
            let first = jac(l, n1 + &h, n2 + &h)?;
            let second = jac(l - 1, n1 + &h, n2 + &h)?.shift_up(1);
            Ok([
                TrigPoly::new(first, Poly::zero()),
                TrigPoly::new(Poly::zero(), second),
            ])
        }
        Parity::Odd => {
            let deg = (ell.twice() - 1) / 2;
            let first = jac(deg, n1 + &h, n2 - &h)?.shift_up(1);
            let second = jac(deg, n1 - &h, n2 + &h)?;
            Ok([
                TrigPoly::new(first, Poly::zero()),
                TrigPoly::new(Poly::zero(), second),
            ])
        }
    }
}

/// Coordinates of `target` in span{basis[0], basis[1]}, or `None` if it lies outside.
pub fn coordinates_in_span(
    target: &TrigPoly<BigRational>,
    basis: &[TrigPoly<BigRational>; 2],
) -> Option<[BigRational; 2]> {
    let even_len = basis
        .iter()
        .chain(std::iter::once(target))
        .map(|f| f.even.coeffs().len())
        .max()
        .unwrap_or(0);
    let odd_len = basis
        .iter()
        .chain(std::iter::once(target))
        .map(|f| f.odd.coeffs().len())
        .max()
        .unwrap_or(0);
    let u: Vec<Vec<BigRational>> = basis.iter().map(|b| b.flatten(even_len, odd_len)).collect();
    let w = target.flatten(even_len, odd_len);
    let dot = |a: &[BigRational], b: &[BigRational]| -> BigRational {
        a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
    };
    let (g00, g01, g11) = (dot(&u[0], &u[0]), dot(&u[0], &u[1]), dot(&u[1], &u[1]));
    let det = &g00 * &g11 - &g01 * &g01;
    if det.is_zero() {
        return None;
    }
    let (r0, r1) = (dot(&u[0], &w), dot(&u[1], &w));
    let x0 = (&g11 * &r0 - &g01 * &r1) / &det;
    let x1 = (&g00 * &r1 - &g01 * &r0) / &det;
    let recon = basis[0].scale(&x0).add(&basis[1].scale(&x1));
    (recon == *target).then_some([x0, x1])
}

/// Matrix of G restricted to span(basis); column k holds the coordinates of G(basis[k]).
pub fn restricted_g_matrix(
    basis: &[TrigPoly<BigRational>; 2],
    params: &WignerParams,
) -> Option<[[BigRational; 2]; 2]> {
    let c0 = coordinates_in_span(&apply_g(&basis[0], params), basis)?;
    let c1 = coordinates_in_span(&apply_g(&basis[1], params), basis)?;
    let [m00, m10] = c0;
    let [m01, m11] = c1;
    Some([[m00, m01], [m10, m11]])
}

/// One J_θ eigenpair: J_θ Θ = λΘ, equivalently G Θ = −iλΘ, with R₁R₂Θ = εΘ.
#[derive(Debug, Clone)]
pub struct AngularEigenpair {
    pub sector: Sector,
    pub ell: Ell,
    pub branch: Branch,
    pub lambda: f64,
    /// det of the restricted G matrix; equals λ² exactly.
    pub lambda_squared: BigRational,
    pub basis: Vec<TrigPoly<BigRational>>,
    /// Coefficients of `eigenfunction` in `basis`; the first nonzero one is 1.
    pub mixing: Vec<Complex64>,
    pub eigenfunction: TrigPoly<Complex64>,
    /// The ℓ = 0 constant mode of the ε = +1 sector (λ = 0).
    pub zero_mode: bool,
}

impl AngularEigenpair {
    pub fn parity(&self) -> Parity {
        self.sector.epsilon()
    }

    /// max |GΘ + iλΘ| over coefficients, relative to max |Θ|.
    pub fn residual(&self, params: &WignerParams) -> f64 {
        let g = apply_g(&self.eigenfunction, params);
        let target = self.eigenfunction.scale(&Complex64::new(0.0, -self.lambda));
        g.sub(&target).max_magnitude() / self.eigenfunction.max_magnitude().max(1.0)
    }
}

const EIGEN_TOLERANCE: f64 = 1e-12;

/// Builds the J_θ eigenpair for (ℓ, sector, branch) by diagonalising G on
/// the invariant candidate plane.
pub fn angular_eigenpair(
    ell: Ell,
    sector: Sector,
    branch: Branch,
    params: &WignerParams,
) -> Result<AngularEigenpair> {
    let parity = sector.epsilon();
    ell.validate(parity, true)?;
    if parity == Parity::Even && ell.twice() == 0 {
        return Ok(AngularEigenpair {
            sector,
            ell,
            branch,
            lambda: 0.0,
            lambda_squared: BigRational::zero(),
            basis: vec![TrigPoly::one()],
            mixing: vec![Complex64::new(1.0, 0.0)],
            eigenfunction: TrigPoly::one(),
            zero_mode: true,
        });
    }

    let basis = candidate_basis(ell, parity, params)?;
    let m = restricted_g_matrix(&basis, params).ok_or_else(|| {
        Error::DegenerateAngular(format!("candidate plane for l = {ell} is not invariant under G"))
    })?;
    let trace = &m[0][0] + &m[1][1];
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if !trace.is_zero() || !det.is_positive() {
        return Err(Error::DegenerateAngular(format!(
            "restricted G has trace {trace} and determinant {det}; expected a purely imaginary pair"
        )));
    }
    let expected = lambda_squared(ell, parity, params);
    if det != expected {
        return Err(Error::DegenerateAngular(format!(
            "lambda^2 = {det} from the eigenproblem differs from the closed form {expected}"
        )));
    }

    let lambda = branch.sign() * det.to_f64().unwrap_or(f64::NAN).sqrt();
    // G v = μ v with μ = −iλ.
    let mu = Complex64::new(0.0, -lambda);
    let mf: Vec<Vec<Complex64>> = m
        .iter()
        .map(|row| row.iter().map(IntoComplex::to_complex).collect())
        .collect();
    let mut v = if !m[0][1].is_zero() {
        [mf[0][1], mu - mf[0][0]]
    } else {
        [mu - mf[1][1], mf[1][0]]
    };
    let pivot = if v[0].norm() > 0.0 { v[0] } else { v[1] };
    v = [v[0] / pivot, v[1] / pivot];

    let eigenfunction = basis
        .iter()
        .zip(v.iter())
        .fold(TrigPoly::zero(), |acc, (b, coef)| {
            acc.add(&b.map(IntoComplex::to_complex).scale(coef))
        });

    let pair = AngularEigenpair {
        sector,
        ell,
        branch,
        lambda,
        lambda_squared: det,
        basis: basis.to_vec(),
        mixing: v.to_vec(),
        eigenfunction,
        zero_mode: false,
    };
    let residual = pair.residual(params);
    if residual > EIGEN_TOLERANCE {
        return Err(Error::DegenerateAngular(format!(
            "eigenfunction residual {residual:e} exceeds {EIGEN_TOLERANCE:e}"
        )));
    }
    Ok(pair)
}
