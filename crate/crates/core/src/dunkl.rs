//! Exact Cartesian polynomial arithmetic with reflections and Dunkl
//! derivatives on the plane.
//!
//! For a polynomial p, `p − R_j p` is twice the odd-in-`x_j` part, so the
//! division by `x_j` in `D_j` is an exponent decrement and never an
//! evaluation at `x_j = 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::angular::TrigPoly;
use crate::params::{Axis, WignerParams};
use crate::poly::Poly;

/// Σ c_{ij} x₁^i x₂^j with exact rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn x1() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn x2() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    pub fn var(axis: Axis) -> Self {
        match axis {
            Axis::X1 => Self::x1(),
            Axis::X2 => Self::x2(),
        }
    }

    pub fn monomial(c: BigRational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigRational)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|(i, j)| i + j);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, c)| (k, c * s)))
    }

    fn map_terms(&self, f: impl Fn(u32, u32, &BigRational) -> Option<((u32, u32), BigRational)>) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(&(i, j), c)| f(i, j, c)))
    }

    /// Terms whose exponent in `axis` is odd.
    pub fn odd_part(&self, axis: Axis) -> Self {
        self.map_terms(|i, j, c| (exponent(axis, i, j) % 2 == 1).then(|| ((i, j), c.clone())))
    }

    pub fn partial(&self, axis: Axis) -> Self {
        self.map_terms(|i, j, c| {
            let e = exponent(axis, i, j);
            (e > 0).then(|| {
                let key = match axis {
                    Axis::X1 => (i - 1, j),
                    Axis::X2 => (i, j - 1),
                };
                (key, c * BigRational::from_integer(BigInt::from(e)))
            })
        })
    }

    /// x_axis^k · p.
    pub fn mul_var_pow(&self, axis: Axis, k: u32) -> Self {
        self.map_terms(|i, j, c| {
            let key = match axis {
                Axis::X1 => (i + k, j),
                Axis::X2 => (i, j + k),
            };
            Some((key, c.clone()))
        })
    }

    /// p / x_axis^k by exponent decrement. Panics when x_axis^k does not
    /// divide p: every caller divides a polynomial that carries the factor
    /// by construction.
    pub fn div_var_pow(&self, axis: Axis, k: u32) -> Self {
        self.map_terms(|i, j, c| {
            let e = exponent(axis, i, j);
            assert!(
                e >= k,
                "x{:?}^{k} does not divide the monomial x1^{i} x2^{j}",
                axis
            );
            let key = match axis {
                Axis::X1 => (i - k, j),
                Axis::X2 => (i, j - k),
            };
            Some((key, c.clone()))
        })
    }

    pub fn eval(&self, x1: &BigRational, x2: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(x1.clone(), i as usize) * num_traits::pow(x2.clone(), j as usize)
        })
    }

    /// Restriction to the unit circle: x₁ → cos θ, x₂ → sin θ.
    pub fn to_trig(&self) -> TrigPoly<BigRational> {
        let cos = TrigPoly::new(Poly::x(), Poly::zero());
        let sin = TrigPoly::new(Poly::zero(), Poly::constant(BigRational::one()));
        self.terms.iter().fold(TrigPoly::zero(), |acc, (&(i, j), c)| {
            let term = cos.pow(i).mul(&sin.pow(j)).scale(c);
            acc.add(&term)
        })
    }
}

fn exponent(axis: Axis, i: u32, j: u32) -> u32 {
    match axis {
        Axis::X1 => i,
        Axis::X2 => j,
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if i > 0 {
                write!(f, "*x1^{i}")?;
            }
            if j > 0 {
                write!(f, "*x2^{j}")?;
            }
        }
        Ok(())
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: Self) -> BivarPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: Self) -> BivarPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: Self) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        self.scale(&-BigRational::one())
    }
}

/// R₁ negates x₁, R₂ negates x₂.
pub fn reflect(p: &BivarPoly, axis: Axis) -> BivarPoly {
    p.map_terms(|i, j, c| {
        let c = if exponent(axis, i, j) % 2 == 1 { -c.clone() } else { c.clone() };
        Some(((i, j), c))
    })
}

/// D_j p = ∂_j p + (ν_j / x_j)(p − R_j p).
pub fn dunkl_derive(p: &BivarPoly, axis: Axis, params: &WignerParams) -> BivarPoly {
    let two_nu = params.nu(axis) * BigRational::from_integer(BigInt::from(2));
    // p − R_j p = 2 · odd part
    let difference = p.odd_part(axis).div_var_pow(axis, 1).scale(&two_nu);
    &p.partial(axis) + &difference
}

/// The position/Dunkl-derivative commutator, ordered so that it equals
/// δ_ij(1 + 2ν_j R_j): D_j(x_i p) − x_i D_j p.
///
/// With the opposite ordering x_i D_j − D_j x_i the right-hand side picks up
/// an overall minus sign, exactly as [x, ∂] = −1 in the undeformed case.
pub fn commutator_xd(p: &BivarPoly, i: Axis, j: Axis, params: &WignerParams) -> BivarPoly {
    let after = dunkl_derive(&p.mul_var_pow(i, 1), j, params);
    let before = dunkl_derive(p, j, params).mul_var_pow(i, 1);
    &after - &before
}

/// [D₁, D₂] p.
pub fn commutator_dd(p: &BivarPoly, params: &WignerParams) -> BivarPoly {
    let a = dunkl_derive(&dunkl_derive(p, Axis::X2, params), Axis::X1, params);
    let b = dunkl_derive(&dunkl_derive(p, Axis::X1, params), Axis::X2, params);
    &a - &b
}

/// δ_ij (p + 2ν_j R_j p): the right-hand side of the deformed Heisenberg relation.
pub fn heisenberg_rhs(p: &BivarPoly, i: Axis, j: Axis, params: &WignerParams) -> BivarPoly {
    if i != j {
        return BivarPoly::zero();
    }
    let two_nu = params.nu(j) * BigRational::from_integer(BigInt::from(2));
    p + &reflect(p, j).scale(&two_nu)
}

/// Δ_D p = D₁(D₁ p) + D₂(D₂ p).
pub fn dunkl_laplacian(p: &BivarPoly, params: &WignerParams) -> BivarPoly {
    Axis::BOTH.iter().fold(BivarPoly::zero(), |acc, &axis| {
        let second = dunkl_derive(&dunkl_derive(p, axis, params), axis, params);
        &acc + &second
    })
}

/// Δ_D from its expanded second-order form
/// Σ_j [∂_j² + (2ν_j/x_j)∂_j − (ν_j/x_j²)(1 − R_j)].
/// The last two pieces are individually singular on odd-linear terms, so
/// each axis contribution is assembled over the common factor x_j² first.
pub fn dunkl_laplacian_expanded(p: &BivarPoly, params: &WignerParams) -> BivarPoly {
    Axis::BOTH.iter().fold(BivarPoly::zero(), |acc, &axis| {
        let nu = params.nu(axis);
        let two_nu = nu * BigRational::from_integer(BigInt::from(2));
        let d1 = p.partial(axis);
        let d2 = d1.partial(axis);
        let numerator = &(&d2.mul_var_pow(axis, 2) + &d1.mul_var_pow(axis, 1).scale(&two_nu))
            - &(p - &reflect(p, axis)).scale(nu);
        &acc + &numerator.div_var_pow(axis, 2)
    })
}

/// Dunkl angular momentum x₁D₂ − x₂D₁ (equals ∂_θ plus reflection terms on the unit circle).
pub fn angular_momentum(p: &BivarPoly, params: &WignerParams) -> BivarPoly {
    let a = dunkl_derive(p, Axis::X2, params).mul_var_pow(Axis::X1, 1);
    let b = dunkl_derive(p, Axis::X1, params).mul_var_pow(Axis::X2, 1);
    &a - &b
}

/// x₁D₂ − x₂D₂, the angular term exactly as typeset in the Cartesian
/// Hamiltonian. Kept only so the discrepancy check can show that it is not
/// a rotation generator.
pub fn angular_momentum_as_printed(p: &BivarPoly, params: &WignerParams) -> BivarPoly {
    let d2 = dunkl_derive(p, Axis::X2, params);
    &d2.mul_var_pow(Axis::X1, 1) - &d2.mul_var_pow(Axis::X2, 1)
}
