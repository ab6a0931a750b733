//! Canonical-ensemble thermodynamics of one fixed-ℓ, fixed-sector ladder
//! E/ω_c = n + 1/2 + ρ − m_s η, as functions of x = βω_c.
//!
//! Energies are in units of ω_c, C and S in units of K. Every quantity is
//! evaluated through log sinh / log cosh forms so that x up to ~700 stays
//! finite.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::params::{Branch, Ell, Sector, WignerParams};
use crate::spectrum::{eta, rho};

/// How U and S are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// U and S derived from log Z; F = U − TS holds.
    #[default]
    Consistent,
    /// The printed closed forms: −ρ in U and coth(xη) in the last term of S.
    PaperFaithful,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Consistent => "consistent",
            Mode::PaperFaithful => "paper-faithful",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "consistent" => Ok(Mode::Consistent),
            "paper-faithful" | "paper_faithful" | "paper" => Ok(Mode::PaperFaithful),
            _ => Err(Error::Parse(format!("unknown mode {s:?} (expected consistent or paper-faithful)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Z,
    F,
    U,
    C,
    S,
}

impl Quantity {
    pub const ALL: [Quantity; 5] = [Quantity::Z, Quantity::F, Quantity::U, Quantity::C, Quantity::S];

    pub fn symbol(self) -> &'static str {
        match self {
            Quantity::Z => "Z",
            Quantity::F => "F",
            Quantity::U => "U",
            Quantity::C => "C",
            Quantity::S => "S",
        }
    }

    pub fn evaluate(self, inputs: &ThermoInputs) -> f64 {
        match self {
            Quantity::Z => partition(inputs),
            Quantity::F => helmholtz(inputs),
            Quantity::U => internal_energy(inputs),
            Quantity::C => heat_capacity(inputs),
            Quantity::S => entropy(inputs),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.symbol().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown quantity {s:?} (expected Z, F, U, C or S)")))
    }
}

/// The (ρ, η) pair that fixes a ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ladder {
    pub rho: f64,
    pub eta: f64,
}

impl Ladder {
    pub fn new(rho: f64, eta: f64) -> Result<Self> {
        if !rho.is_finite() || !eta.is_finite() {
            return Err(Error::ThermoInput(format!("rho = {rho}, eta = {eta} must be finite")));
        }
        Ok(Self { rho, eta })
    }

    pub fn for_level(sector: Sector, ell: Ell, branch: Branch, params: &WignerParams) -> Result<Self> {
        ell.validate(sector.epsilon(), true)?;
        Self::new(rho(ell, sector.epsilon(), branch, params), eta(sector, params))
    }

    pub fn at(&self, x: f64, mode: Mode) -> Result<ThermoInputs> {
        ThermoInputs::new(x, self.rho, self.eta, mode)
    }

    /// E₀/ω_c = 1/2 + ρ − |η|.
    pub fn ground_energy(&self) -> f64 {
        0.5 + self.rho - self.eta.abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoInputs {
    /// βω_c.
    pub x: f64,
    pub rho: f64,
    pub eta: f64,
    pub mode: Mode,
}

impl ThermoInputs {
    pub fn new(x: f64, rho: f64, eta: f64, mode: Mode) -> Result<Self> {
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::ThermoInput(format!("x = {x} must be positive and finite")));
        }
        Ladder::new(rho, eta)?;
        Ok(Self { x, rho, eta, mode })
    }

    pub fn ladder(&self) -> Ladder {
        Ladder {
            rho: self.rho,
            eta: self.eta,
        }
    }

    pub fn with_x(&self, x: f64) -> Self {
        Self { x, ..*self }
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        Self { mode, ..*self }
    }
}

const LN_2: f64 = std::f64::consts::LN_2;

/// log sinh(y) for y > 0.
pub fn log_sinh(y: f64) -> f64 {
    y + (-(-2.0 * y).exp_m1()).ln() - LN_2
}

/// log cosh(y).
pub fn log_cosh(y: f64) -> f64 {
    let a = y.abs();
    a + (-2.0 * a).exp().ln_1p() - LN_2
}

/// 1/sinh²(y) for y > 0.
fn csch2(y: f64) -> f64 {
    let e = (-2.0 * y).exp();
    4.0 * e / ((-2.0 * y).exp_m1() * (-2.0 * y).exp_m1())
}

/// 1/cosh²(y).
fn sech2(y: f64) -> f64 {
    let e = (-2.0 * y.abs()).exp();
    4.0 * e / ((1.0 + e) * (1.0 + e))
}

/// y·coth(y), continuous at y = 0.
fn y_coth_y(y: f64) -> f64 {
    if y.abs() < 1e-8 {
        1.0 + y * y / 3.0
    } else {
        y / y.tanh()
    }
}

/// log Z = −xρ + log cosh(xη) − log sinh(x/2).
pub fn log_partition(inputs: &ThermoInputs) -> f64 {
    let ThermoInputs { x, rho, eta, .. } = *inputs;
    -x * rho + log_cosh(x * eta) - log_sinh(x / 2.0)
}

/// Z = e^{−xρ} cosh(xη) / sinh(x/2).
pub fn partition(inputs: &ThermoInputs) -> f64 {
    log_partition(inputs).exp()
}

/// Number of radial terms whose omission leaves a tail below 1e−14 of Z.
pub fn required_terms(x: f64) -> u32 {
    // tail fraction after n_max is e^{−x(n_max+1)}
    let n = (14.0 * std::f64::consts::LN_10 / x).ceil();
    n.min(f64::from(u32::MAX)) as u32
}

/// Σ_{n ≤ n_max} Σ_{m_s = ±1} e^{−x(n + 1/2 + ρ − m_s η)}.
pub fn direct_sum_partition(x: f64, rho: f64, eta: f64, n_max: u32) -> Result<f64> {
    ThermoInputs::new(x, rho, eta, Mode::Consistent)?;
    let tail_fraction = (-x * (f64::from(n_max) + 1.0)).exp();
    if tail_fraction >= 1e-14 {
        return Err(Error::TruncatedSum { n_max: n_max as usize });
    }
    // smallest terms first
    let sum: f64 = (0..=n_max)
        .rev()
        .map(|n| {
            let base = f64::from(n) + 0.5 + rho;
            (-x * (base + eta)).exp() + (-x * (base - eta)).exp()
        })
        .sum();
    Ok(sum)
}

/// F/ω_c = (log sinh(x/2) − log cosh(xη))/x + ρ; the same in both modes.
pub fn helmholtz(inputs: &ThermoInputs) -> f64 {
    -log_partition(inputs) / inputs.x
}

/// U/ω_c = coth(x/2)/2 − η tanh(xη) ± ρ (+ consistent, − paper-faithful).
pub fn internal_energy(inputs: &ThermoInputs) -> f64 {
    let ThermoInputs { x, rho, eta, mode } = *inputs;
    let thermal = 0.5 / (x / 2.0).tanh() - eta * (x * eta).tanh();
    match mode {
        Mode::Consistent => thermal + rho,
        Mode::PaperFaithful => thermal - rho,
    }
}

/// C/K = (x/2)²/sinh²(x/2) + (xη)²/cosh²(xη).
pub fn heat_capacity(inputs: &ThermoInputs) -> f64 {
    let ThermoInputs { x, eta, .. } = *inputs;
    let half = x / 2.0;
    let y = x * eta;
    let spin = if y == 0.0 { 0.0 } else { y * y * sech2(y) };
    half * half * csch2(half) + spin
}

/// S/K = −log sinh(x/2) + (x/2)coth(x/2) + log cosh(xη) − xη·t(xη),
/// with t = tanh (consistent) or coth (paper-faithful).
///
/// With a = e^{−x} and b = e^{−2|xη|} the consistent form is the sum of
/// positive terms −ln(1 − a) + xa/(1 − a) + ln(1 + b) + 2|xη|b/(1 + b),
/// which keeps full relative precision as T → 0.
pub fn entropy(inputs: &ThermoInputs) -> f64 {
    let ThermoInputs { x, eta, mode, .. } = *inputs;
    let one_minus_a = -(-x).exp_m1();
    let a = (-x).exp();
    let y = (x * eta).abs();
    let b = (-2.0 * y).exp();
    let consistent = -one_minus_a.ln() + x * a / one_minus_a + b.ln_1p() + 2.0 * y * b / (1.0 + b);
    match mode {
        Mode::Consistent => consistent,
        Mode::PaperFaithful => consistent + y * y.tanh() - y_coth_y(y),
    }
}

/// Log-spaced τ grid, endpoints included. A single point needs t_min = t_max.
pub fn log_grid(t_min: f64, t_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(t_min > 0.0 && t_min.is_finite()) {
        return Err(Error::ThermoInput(format!("tmin = {t_min} must be positive")));
    }
    if steps == 1 && t_max == t_min {
        return Ok(vec![t_min]);
    }
    if !(t_max > t_min && t_max.is_finite()) {
        return Err(Error::ThermoInput(format!("tmax = {t_max} must exceed tmin = {t_min}")));
    }
    if steps < 2 {
        return Err(Error::ThermoInput(format!("steps = {steps} must be at least 2 when tmax > tmin")));
    }
    let (a, b) = (t_min.ln(), t_max.ln());
    let last = steps - 1;
    Ok((0..steps)
        .map(|i| match i {
            0 => t_min,
            i if i == last => t_max,
            i => (a + (b - a) * i as f64 / last as f64).exp(),
        })
        .collect())
}

pub const DEFAULT_T_MIN: f64 = 0.01;
pub const DEFAULT_T_MAX: f64 = 10.0;
pub const DEFAULT_STEPS: usize = 400;

pub fn default_grid() -> Vec<f64> {
    log_grid(DEFAULT_T_MIN, DEFAULT_T_MAX, DEFAULT_STEPS).expect("default grid is valid")
}

/// One quantity evaluated along a τ = KT/ω_c grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermoCurve {
    pub quantity: Quantity,
    pub ladder: Ladder,
    pub mode: Mode,
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
}

pub fn sweep(quantity: Quantity, ladder: &Ladder, mode: Mode, grid: &[f64]) -> Result<ThermoCurve> {
    if let Some(bad) = grid.iter().find(|t| !(**t > 0.0 && t.is_finite())) {
        return Err(Error::ThermoInput(format!("temperature {bad} must be positive")));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::ThermoInput("temperature grid must be strictly ascending".into()));
    }
    let values = grid
        .iter()
        .map(|tau| ladder.at(1.0 / tau, mode).map(|inputs| quantity.evaluate(&inputs)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ThermoCurve {
        quantity,
        ladder: *ladder,
        mode,
        grid: grid.to_vec(),
        values,
    })
}
