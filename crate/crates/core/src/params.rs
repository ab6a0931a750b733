//! Deformation parameters and the discrete labels shared by every module:
//! parity sectors, the angular quantum number, branch sign and spin label.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The Wigner pair (ν₁, ν₂). Stored exactly; `f64` views are derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WignerParams {
    nu1: BigRational,
    nu2: BigRational,
}

impl WignerParams {
    pub fn new(nu1: BigRational, nu2: BigRational) -> Result<Self> {
        let bound = -BigRational::new(BigInt::from(1), BigInt::from(2));
        for (name, v) in [("nu1", &nu1), ("nu2", &nu2)] {
            if *v <= bound {
                return Err(Error::WignerRange {
                    name,
                    value: v.to_string(),
                });
            }
        }
        Ok(Self { nu1, nu2 })
    }

    /// Builds the pair from small integer fractions, e.g. `from_ratios((2, 5), (-1, 5))`.
    pub fn from_ratios(nu1: (i64, i64), nu2: (i64, i64)) -> Result<Self> {
        Self::new(
            BigRational::new(nu1.0.into(), nu1.1.into()),
            BigRational::new(nu2.0.into(), nu2.1.into()),
        )
    }

    /// Converts floats through their shortest continued-fraction rational
    /// (0.4 becomes 2/5, not the binary expansion of 0.4).
    pub fn from_f64(nu1: f64, nu2: f64) -> Result<Self> {
        Self::new(rational_from_f64(nu1)?, rational_from_f64(nu2)?)
    }

    pub fn undeformed() -> Self {
        Self {
            nu1: BigRational::zero(),
            nu2: BigRational::zero(),
        }
    }

    pub fn nu1(&self) -> &BigRational {
        &self.nu1
    }

    pub fn nu2(&self) -> &BigRational {
        &self.nu2
    }

    pub fn nu1_f64(&self) -> f64 {
        self.nu1.to_f64().unwrap_or(f64::NAN)
    }

    pub fn nu2_f64(&self) -> f64 {
        self.nu2.to_f64().unwrap_or(f64::NAN)
    }

    pub fn nu(&self, axis: Axis) -> &BigRational {
        match axis {
            Axis::X1 => &self.nu1,
            Axis::X2 => &self.nu2,
        }
    }
}

impl fmt::Display for WignerParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(nu1 = {}, nu2 = {})", self.nu1, self.nu2)
    }
}

pub(crate) fn rational_from_f64(v: f64) -> Result<BigRational> {
    if !v.is_finite() {
        return Err(Error::Parse(format!("non-finite value {v}")));
    }
    if v == v.trunc() && v.abs() < 1e15 {
        return Ok(BigRational::from_integer(BigInt::from(v as i64)));
    }
    Ratio::<i64>::approximate_float(v)
        .map(|r| BigRational::new((*r.numer()).into(), (*r.denom()).into()))
        .or_else(|| BigRational::from_float(v))
        .ok_or_else(|| Error::Parse(format!("cannot represent {v} as a rational")))
}

/// Parses "0.4", "-3/2", "2" exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let all_digits = |t: &str| t.chars().all(|c| c.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let r = BigRational::new(numer, denom);
    Ok(if neg { -r } else { r })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X1,
    X2,
}

impl Axis {
    pub const BOTH: [Axis; 2] = [Axis::X1, Axis::X2];
}

/// Parity sector (ε₁, ε₂): eigenvalues of R₁ and R₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    PlusPlus,
    MinusMinus,
    PlusMinus,
    MinusPlus,
}

impl Sector {
    /// Figure-panel order: ++, --, +-, -+.
    pub const ALL: [Sector; 4] = [
        Sector::PlusPlus,
        Sector::MinusMinus,
        Sector::PlusMinus,
        Sector::MinusPlus,
    ];

    pub fn eps1(self) -> i8 {
        match self {
            Sector::PlusPlus | Sector::PlusMinus => 1,
            Sector::MinusMinus | Sector::MinusPlus => -1,
        }
    }

    pub fn eps2(self) -> i8 {
        match self {
            Sector::PlusPlus | Sector::MinusPlus => 1,
            Sector::MinusMinus | Sector::PlusMinus => -1,
        }
    }

    pub fn epsilon(self) -> Parity {
        if self.eps1() == self.eps2() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn from_signs(eps1: i8, eps2: i8) -> Option<Self> {
        match (eps1, eps2) {
            (1, 1) => Some(Sector::PlusPlus),
            (-1, -1) => Some(Sector::MinusMinus),
            (1, -1) => Some(Sector::PlusMinus),
            (-1, 1) => Some(Sector::MinusPlus),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Sector::PlusPlus => "++",
            Sector::MinusMinus => "--",
            Sector::PlusMinus => "+-",
            Sector::MinusPlus => "-+",
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Sector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "++" | "pp" => Ok(Sector::PlusPlus),
            "--" | "mm" => Ok(Sector::MinusMinus),
            "+-" | "pm" => Ok(Sector::PlusMinus),
            "-+" | "mp" => Ok(Sector::MinusPlus),
            other => Err(Error::Parse(format!(
                "unknown sector {other:?} (expected one of ++, --, +-, -+)"
            ))),
        }
    }
}

/// ε = ε₁ε₂, the R₁R₂ eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// Angular quantum number ℓ, stored as 2ℓ so half-odd values stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ell {
    twice: u32,
}

impl Ell {
    pub fn from_twice(twice: u32) -> Self {
        Self { twice }
    }

    pub fn integer(l: u32) -> Self {
        Self { twice: 2 * l }
    }

    /// ℓ = k + 1/2.
    pub fn half_odd(k: u32) -> Self {
        Self { twice: 2 * k + 1 }
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.twice), BigInt::from(2))
    }

    /// Integer ℓ for ε = +1 (ℓ = 0 only with `allow_zero`), half-odd ℓ for ε = −1.
    pub fn validate(self, parity: Parity, allow_zero: bool) -> Result<()> {
        let ok = match parity {
            Parity::Even => self.is_integer() && (allow_zero || self.twice > 0),
            Parity::Odd => !self.is_integer(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidEll {
                ell: self.to_string(),
                epsilon: parity.sign(),
            })
        }
    }

    /// Smallest sector-valid ℓ (excluding the ℓ = 0 constant mode).
    pub fn minimum(parity: Parity) -> Self {
        match parity {
            Parity::Even => Ell::integer(1),
            Parity::Odd => Ell::half_odd(0),
        }
    }

    /// Sector-valid values `minimum, minimum + 1, ...` up to and including `max`.
    pub fn range(parity: Parity, max: Ell, include_zero: bool) -> Vec<Ell> {
        let start = match (parity, include_zero) {
            (Parity::Even, true) => 0,
            _ => Ell::minimum(parity).twice,
        };
        (start..=max.twice)
            .step_by(2)
            .map(Ell::from_twice)
            .collect()
    }

    pub fn from_rational(r: &BigRational) -> Result<Self> {
        let twice = r * BigRational::from_integer(BigInt::from(2));
        if !twice.is_integer() || twice.is_negative() {
            return Err(Error::Parse(format!(
                "l = {r} must be a nonnegative integer or half-integer"
            )));
        }
        twice
            .to_integer()
            .to_u32()
            .map(Ell::from_twice)
            .ok_or_else(|| Error::Parse(format!("l = {r} is too large")))
    }
}

impl fmt::Display for Ell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for Ell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ell::from_rational(&parse_rational(s)?)
    }
}

/// Sign of the angular eigenvalue λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" | "positive" => Ok(Branch::Plus),
            "-" | "minus" | "negative" => Ok(Branch::Minus),
            other => Err(Error::Parse(format!(
                "unknown branch {other:?} (expected plus or minus)"
            ))),
        }
    }
}

/// Spin projection label m_s = ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    Down,
    Up,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::Down, Spin::Up];

    pub fn value(self) -> i8 {
        match self {
            Spin::Up => 1,
            Spin::Down => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.value())
    }
}

pub(crate) fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}
