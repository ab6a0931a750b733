//! Closed-form Dunkl-Pauli energies for the four parity sectors, the
//! compact (ρ, η) form, the Kummer function ₁F₁ and radial wavefunctions.
//!
//! Units: ħ = 1. Energies are ω_c times a dimensionless number; the
//! `*_over_omega` functions return that number.

use crate::angular::lambda_value;
use crate::error::{Error, Result};
use crate::params::{Branch, Ell, Parity, Sector, Spin, WignerParams};

/// ω_c, mass and spin g-factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorScale {
    omega_c: f64,
    mass: f64,
    g_s: f64,
}

impl OscillatorScale {
    /// g_s = 2 is the only value for which the closed-form ladders solve the
    /// radial equations (the Zeeman constant must equal m ω_c).
    pub const DIRAC_G: f64 = 2.0;

    pub fn new(omega_c: f64, mass: f64) -> Result<Self> {
        Self::with_g_factor(omega_c, mass, Self::DIRAC_G)
    }

    pub fn with_g_factor(omega_c: f64, mass: f64, g_s: f64) -> Result<Self> {
        if !(omega_c > 0.0 && omega_c.is_finite()) {
            return Err(Error::InvalidScale(format!("omega_c = {omega_c} must be positive")));
        }
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::InvalidScale(format!("mass = {mass} must be positive")));
        }
        if !g_s.is_finite() {
            return Err(Error::InvalidScale(format!("g_s = {g_s} must be finite")));
        }
        Ok(Self { omega_c, mass, g_s })
    }

    pub fn omega_c(&self) -> f64 {
        self.omega_c
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn g_s(&self) -> f64 {
        self.g_s
    }

    /// Whether the closed-form spectra apply (g_s = 2).
    pub fn is_closed_form_consistent(&self) -> bool {
        self.g_s == Self::DIRAC_G
    }

    /// (m ω_c / 2)^(−1/2), the Gaussian length of the radial ground state.
    pub fn natural_length(&self) -> f64 {
        (self.mass * self.omega_c / 2.0).sqrt().recip()
    }
}

impl Default for OscillatorScale {
    fn default() -> Self {
        Self {
            omega_c: 1.0,
            mass: 1.0,
            g_s: Self::DIRAC_G,
        }
    }
}

/// Quantum numbers of one level: sector, radial n, ℓ, m_s and the λ branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SectorState {
    pub sector: Sector,
    pub n: u32,
    pub ell: Ell,
    pub spin: Spin,
    pub branch: Branch,
}

impl SectorState {
    /// Validates ℓ against the sector (ℓ = 0 is accepted for ε = +1).
    pub fn new(sector: Sector, n: u32, ell: Ell, spin: Spin, branch: Branch) -> Result<Self> {
        ell.validate(sector.epsilon(), true)?;
        Ok(Self {
            sector,
            n,
            ell,
            spin,
            branch,
        })
    }

    pub fn parity(&self) -> Parity {
        self.sector.epsilon()
    }

    pub fn lambda(&self, params: &WignerParams) -> f64 {
        lambda_value(self.ell, self.parity(), self.branch, params)
    }
}

/// ν₁ + ν₂ for ε = +1, ν₁ − ν₂ for ε = −1: the shift inside the ρ radical.
fn radical_shift(parity: Parity, params: &WignerParams) -> f64 {
    match parity {
        Parity::Even => params.nu1_f64() + params.nu2_f64(),
        Parity::Odd => params.nu1_f64() - params.nu2_f64(),
    }
}

/// √((ν₁ ± ν₂)² + λ²).
fn radical(ell: Ell, parity: Parity, params: &WignerParams) -> f64 {
    let lambda = lambda_value(ell, parity, Branch::Plus, params);
    radical_shift(parity, params).hypot(lambda)
}

/// ρ_ℓ^ε = (λ + √((ν₁ ± ν₂)² + λ²)) / 2 with the signed λ of `branch`.
pub fn rho(ell: Ell, parity: Parity, branch: Branch, params: &WignerParams) -> f64 {
    let lambda = lambda_value(ell, parity, branch, params);
    (lambda + radical(ell, parity, params)) / 2.0
}

/// η^{ε₁,ε₂} = (1 + ε₁ν₁ + ε₂ν₂) / 2.
pub fn eta(sector: Sector, params: &WignerParams) -> f64 {
    let e1 = f64::from(sector.eps1());
    let e2 = f64::from(sector.eps2());
    // signed sum first so that ν₁ = −ν₂ gives exactly 1/2
    (1.0 + (e1 * params.nu1_f64() + e2 * params.nu2_f64())) / 2.0
}

/// E/ω_c = n + 1/2 + ρ_ℓ^ε − m_s η^{ε₁,ε₂}.
pub fn energy_over_omega(state: &SectorState, params: &WignerParams) -> f64 {
    let rho = rho(state.ell, state.parity(), state.branch, params);
    f64::from(state.n) + 0.5 + rho - state.spin.as_f64() * eta(state.sector, params)
}

pub fn energy(state: &SectorState, scale: &OscillatorScale, params: &WignerParams) -> f64 {
    scale.omega_c() * energy_over_omega(state, params)
}

/// The four sector-specific ladders written term by term, with the radical
/// already replaced by 2ℓ + ν₁ + ν₂.
pub fn energy_sector_form_over_omega(state: &SectorState, params: &WignerParams) -> f64 {
    let n = f64::from(state.n);
    let l = state.ell.to_f64();
    let (n1, n2) = (params.nu1_f64(), params.nu2_f64());
    let lambda = state.lambda(params);
    let ms = state.spin.as_f64();
    match state.sector {
        Sector::PlusPlus => n + (1.0 + lambda + n1 + n2 + 2.0 * l) / 2.0 - ms * (1.0 + n1 + n2) / 2.0,
        Sector::MinusMinus => n + (1.0 + n1 + n2 + 2.0 * l + lambda) / 2.0 - ms * (1.0 - n1 - n2) / 2.0,
        Sector::PlusMinus => n + (1.0 + lambda + n1 + n2 + 2.0 * l) / 2.0 - ms * (1.0 + n1 - n2) / 2.0,
        Sector::MinusPlus => n + (1.0 + lambda + n1 + n2 + 2.0 * l) / 2.0 - ms * (1.0 + n2 - n1) / 2.0,
    }
}

/// Both sides of √((ν₁ ± ν₂)² + λ²) = 2ℓ + ν₁ + ν₂ (positive branch).
pub fn radical_identity_check(ell: Ell, parity: Parity, params: &WignerParams) -> (f64, f64) {
    let rhs = 2.0 * ell.to_f64() + params.nu1_f64() + params.nu2_f64();
    (radical(ell, parity, params), rhs)
}

/// Coefficient Λ of the 1/r² term in the sector radial equation:
/// λ² for ε = +1 and λ² − 4ν₁ν₂ for ε = −1.
pub fn centrifugal_coefficient(ell: Ell, parity: Parity, params: &WignerParams) -> f64 {
    let lambda = lambda_value(ell, parity, Branch::Plus, params);
    match parity {
        Parity::Even => lambda * lambda,
        Parity::Odd => lambda * lambda - 4.0 * params.nu1_f64() * params.nu2_f64(),
    }
}

const KUMMER_MAX_TERMS: usize = 100_000;

fn nonpositive_integer(v: f64) -> Option<u64> {
    (v <= 0.0 && v == v.trunc()).then(|| (-v) as u64)
}

/// Kummer's function M(a, b, x) = Σ (a)_k / (b)_k · x^k / k!.
///
/// Terminates after n + 1 terms when a = −n. Negative x goes through
/// Kummer's transformation M(a, b, x) = eˣ M(b − a, b, −x) unless the
/// series already terminates.
pub fn hyp1f1(a: f64, b: f64, x: f64) -> Result<f64> {
    let terminating = nonpositive_integer(a);
    if let Some(m) = nonpositive_integer(b) {
        match terminating {
            Some(n) if n <= m => {}
            _ => return Err(Error::HypergeometricPole { a, b }),
        }
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if let Some(n) = terminating {
        return Ok(kummer_series(a, b, x, n as usize + 1));
    }
    if x < 0.0 {
        return Ok(x.exp() * hyp1f1(b - a, b, -x)?);
    }
    Ok(kummer_series(a, b, x, KUMMER_MAX_TERMS))
}

fn kummer_series(a: f64, b: f64, x: f64, max_terms: usize) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..max_terms.saturating_sub(1) {
        let k = k as f64;
        term *= (a + k) / (b + k) * x / (k + 1.0);
        sum += term;
        if term == 0.0 || (k > x && term.abs() <= 1e-17 * sum.abs()) {
            break;
        }
    }
    sum
}

/// Radial exponent s with F ~ r^s at the origin: √((ν₁ ± ν₂)² + λ²) − (ν₁ + ν₂),
/// which equals 2ℓ whenever 2ℓ + ν₁ + ν₂ ≥ 0.
pub fn radial_exponent(ell: Ell, parity: Parity, params: &WignerParams) -> f64 {
    radical(ell, parity, params) - (params.nu1_f64() + params.nu2_f64())
}

/// First and second Kummer parameters of the radial solution.
fn kummer_parameters(state: &SectorState, params: &WignerParams) -> (f64, f64) {
    let parity = state.parity();
    let root = radical(state.ell, parity, params);
    let lambda = state.lambda(params);
    let a = (1.0 + lambda + root) / 2.0
        - state.spin.as_f64() * eta(state.sector, params)
        - energy_over_omega(state, params);
    // quantization makes a = −n; remove the rounding residue
    let a = if (a + f64::from(state.n)).abs() < 1e-9 { -f64::from(state.n) } else { a };
    (a, 1.0 + root)
}

/// Unnormalised F(r) = e^{−mω_c r²/4} r^s ₁F₁(−n, 1 + √(…); mω_c r²/2).
pub fn radial_wavefunction(
    state: &SectorState,
    scale: &OscillatorScale,
    params: &WignerParams,
    r: f64,
) -> f64 {
    let (a, b) = kummer_parameters(state, params);
    let mw = scale.mass() * scale.omega_c();
    let s = radial_exponent(state.ell, state.parity(), params);
    let kummer = hyp1f1(a, b, mw * r * r / 2.0).expect("b = 1 + radical is positive");
    let power = if s == 0.0 { 1.0 } else { r.powf(s) };
    (-mw * r * r / 4.0).exp() * power * kummer
}

/// Residual of the sector radial equation at r, evaluated with a 5-point
/// stencil, together with the magnitude of its largest single term:
///
/// F″ + (1+2ν₁+2ν₂)/r F′ − m²ω_c²r²/4 F − Λ/r² F − mω_cλ F + mω_c g_s/2 m_s (2η) F + 2mE F.
pub fn radial_equation_residual(
    state: &SectorState,
    scale: &OscillatorScale,
    params: &WignerParams,
    r: f64,
) -> (f64, f64) {
    let h = 1e-3 * scale.natural_length();
    let f = |x: f64| radial_wavefunction(state, scale, params, x);
    let (fm2, fm1, f0, fp1, fp2) = (f(r - 2.0 * h), f(r - h), f(r), f(r + h), f(r + 2.0 * h));
    let d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    let d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    let (m, w) = (scale.mass(), scale.omega_c());
    let k = 1.0 + 2.0 * params.nu1_f64() + 2.0 * params.nu2_f64();
    let cent = centrifugal_coefficient(state.ell, state.parity(), params);
    let lambda = state.lambda(params);
    let zeeman = m * w * scale.g_s() / 2.0 * state.spin.as_f64() * 2.0 * eta(state.sector, params);
    let terms = [
        d2,
        k / r * d1,
        -m * m * w * w * r * r / 4.0 * f0,
        -cent / (r * r) * f0,
        -m * w * lambda * f0,
        zeeman * f0,
        2.0 * m * energy(state, scale, params) * f0,
    ];
    let largest = terms.iter().fold(0.0f64, |acc, t| acc.max(t.abs()));
    (terms.iter().sum(), largest)
}

/// C such that ∫₀^∞ |C F(r)|² r^{1+2ν₁+2ν₂} dr = 1.
///
/// The integrand behaves like r^{2s+1+2ν₁+2ν₂} at the origin, which may be
/// an integrable singularity; substituting y = r^p with p = 2s + 2 + 2ν₁ + 2ν₂
/// turns it into a bounded integrand. The cut-off R doubles until the last
/// shell contributes below 1e−14 of the total.
pub fn normalization_constant(state: &SectorState, scale: &OscillatorScale, params: &WignerParams) -> f64 {
    let s = radial_exponent(state.ell, state.parity(), params);
    let p = 2.0 * s + 2.0 + 2.0 * (params.nu1_f64() + params.nu2_f64());
    let smooth = |r: f64| {
        let (a, b) = kummer_parameters(state, params);
        let mw = scale.mass() * scale.omega_c();
        let kummer = hyp1f1(a, b, mw * r * r / 2.0).expect("b = 1 + radical is positive");
        (-mw * r * r / 2.0).exp() * kummer * kummer
    };
    let integrand = |y: f64| smooth(y.powf(1.0 / p)) / p;

    let mut r_hi = 4.0 * scale.natural_length();
    let mut total = adaptive_simpson(&integrand, 0.0, r_hi.powf(p), 1e-13);
    for _ in 0..20 {
        let next = 2.0 * r_hi;
        let shell = adaptive_simpson(&integrand, r_hi.powf(p), next.powf(p), 1e-13);
        total += shell;
        r_hi = next;
        if shell.abs() <= 1e-14 * total.abs() {
            break;
        }
    }
    total.sqrt().recip()
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = simpson(fa, fm, fb, a, b);
    let scale = whole.abs().max(f64::MIN_POSITIVE);
    recurse(f, a, b, fa, fm, fb, whole, tol * scale, 48)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(a: f64, b: f64) -> WignerParams {
        WignerParams::from_f64(a, b).unwrap()
    }

    fn state(sector: Sector, n: u32, ell: Ell, spin: Spin) -> SectorState {
        SectorState::new(sector, n, ell, spin, Branch::Plus).unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(Ell::integer(1), Parity::Even, Branch::Plus, &nu(0.0, 0.0)), 2.0);
        let r = rho(Ell::integer(1), Parity::Even, Branch::Plus, &nu(0.4, 0.4));
        assert!((r - (2.0 * 1.8f64.sqrt() + 2.8) / 2.0).abs() < 1e-14);
        assert!((r - 2.741640786).abs() < 1e-9);
        let r = rho(Ell::half_odd(0), Parity::Odd, Branch::Plus, &nu(0.4, -0.4));
        assert!((r - 0.8).abs() < 1e-14);
    }

    #[test]
    fn eta_examples() {
        assert!((eta(Sector::PlusPlus, &nu(0.4, 0.4)) - 0.9).abs() < 1e-15);
        assert_eq!(eta(Sector::MinusMinus, &nu(0.0, 0.0)), 0.5);
        assert!((eta(Sector::PlusMinus, &nu(0.4, -0.4)) - 0.9).abs() < 1e-15);
        assert_eq!(eta(Sector::PlusPlus, &nu(0.4, -0.4)), 0.5);
        assert_eq!(eta(Sector::MinusMinus, &nu(-0.2, 0.2)), 0.5);
    }

    #[test]
    fn energy_examples() {
        let e = energy_over_omega(&state(Sector::PlusPlus, 0, Ell::integer(1), Spin::Up), &nu(0.0, 0.0));
        assert_eq!(e, 2.0);
        let e = energy_over_omega(&state(Sector::PlusPlus, 0, Ell::integer(1), Spin::Up), &nu(0.4, 0.4));
        assert!((e - 2.341640786).abs() < 1e-9);
        let e = energy_over_omega(&state(Sector::MinusPlus, 1, Ell::half_odd(0), Spin::Down), &nu(0.0, 0.0));
        assert_eq!(e, 3.0);
        let scale = OscillatorScale::new(2.5, 1.0).unwrap();
        let s = state(Sector::PlusPlus, 0, Ell::integer(1), Spin::Up);
        assert_eq!(energy(&s, &scale, &nu(0.0, 0.0)), 5.0);
    }

    #[test]
    fn compact_and_sector_forms_agree() {
        let grid = [-0.4, -0.2, 0.0, 0.2, 0.4];
        for &a in &grid {
            for &b in &grid {
                let p = nu(a, b);
                for sector in Sector::ALL {
                    let ells = Ell::range(sector.epsilon(), Ell::integer(5), false);
                    for ell in ells {
                        for n in 0..=3 {
                            for spin in Spin::BOTH {
                                let s = state(sector, n, ell, spin);
                                let compact = energy_over_omega(&s, &p);
                                let literal = energy_sector_form_over_omega(&s, &p);
                                assert!(
                                    (compact - literal).abs() <= 1e-12 * literal.abs().max(1.0),
                                    "{sector} l={ell} n={n}: {compact} vs {literal}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn undeformed_ladder() {
        let p = nu(0.0, 0.0);
        for l in 1..4 {
            for spin in Spin::BOTH {
                let e0 = energy_over_omega(&state(Sector::PlusPlus, 0, Ell::integer(l), spin), &p);
                let expected = 0.5 + 2.0 * f64::from(l) - spin.as_f64() / 2.0;
                assert_eq!(e0, expected);
                let e1 = energy_over_omega(&state(Sector::PlusPlus, 1, Ell::integer(l), spin), &p);
                assert_eq!(e1 - e0, 1.0);
            }
        }
    }

    #[test]
    fn spin_splitting_is_two_eta() {
        for p in [nu(0.4, -0.2), nu(-0.4, 0.4), nu(0.2, 0.2)] {
            for sector in Sector::ALL {
                let ell = Ell::minimum(sector.epsilon());
                let down = energy_over_omega(&state(sector, 1, ell, Spin::Down), &p);
                let up = energy_over_omega(&state(sector, 1, ell, Spin::Up), &p);
                assert!((down - up - 2.0 * eta(sector, &p)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn radical_identity_examples() {
        let (l, r) = radical_identity_check(Ell::integer(1), Parity::Even, &nu(0.4, 0.4));
        assert!((l - 2.8).abs() < 1e-14 && (r - 2.8).abs() < 1e-14);
        let (l, r) = radical_identity_check(Ell::half_odd(0), Parity::Odd, &nu(0.4, -0.4));
        assert!((l - 1.0).abs() < 1e-14 && (r - 1.0).abs() < 1e-14);
        assert_eq!(radical_identity_check(Ell::integer(2), Parity::Even, &nu(0.0, 0.0)), (4.0, 4.0));
    }

    #[test]
    fn kummer_examples() {
        assert_eq!(hyp1f1(0.3, 1.7, 0.0).unwrap(), 1.0);
        let (b, x) = (2.5, 0.8);
        assert!((hyp1f1(-1.0, b, x).unwrap() - (1.0 - x / b)).abs() < 1e-15);
        // 1 − 1.5 + (−2)(−1)/(2·3)·1.5²/2!
        let by_hand: f64 = 1.0 - 1.5 + (-2.0 * -1.0) / (2.0 * 3.0) * 1.5 * 1.5 / 2.0;
        assert!((by_hand + 0.125).abs() < 1e-15);
        assert!((hyp1f1(-2.0, 2.0, 1.5).unwrap() - by_hand).abs() < 1e-15);
        // M(a, a, x) = eˣ
        assert!((hyp1f1(1.3, 1.3, 2.0).unwrap() - 2f64.exp()).abs() < 1e-13);
        assert!((hyp1f1(1.3, 1.3, -3.0).unwrap() - (-3f64).exp()).abs() < 1e-15);
        // M(1, 2, x) = (eˣ − 1)/x
        assert!((hyp1f1(1.0, 2.0, 4.0).unwrap() - (4f64.exp() - 1.0) / 4.0).abs() < 1e-12);
    }

    #[test]
    fn kummer_pole() {
        assert!(hyp1f1(0.5, -2.0, 1.0).is_err());
        assert!(hyp1f1(-3.0, -2.0, 1.0).is_err());
        assert!(hyp1f1(-2.0, -2.0, 1.0).is_ok());
    }

    #[test]
    fn kummer_terminates_for_negative_integer_a() {
        // Series for a = −n is a degree-n polynomial: the (n+1)-th term factor vanishes.
        for n in 0..6u32 {
            let a = -f64::from(n);
            let b = 1.7;
            let coeffs: Vec<f64> = (0..=n + 3)
                .scan(1.0, |t, k| {
                    let cur = *t;
                    *t *= (a + f64::from(k)) / (b + f64::from(k)) / f64::from(k + 1);
                    Some(cur)
                })
                .collect();
            assert!(coeffs[(n + 1) as usize..].iter().all(|c| *c == 0.0));
            let x: f64 = 0.9;
            let poly: f64 = coeffs.iter().enumerate().map(|(k, c)| c * x.powi(k as i32)).sum();
            assert!((hyp1f1(a, b, x).unwrap() - poly).abs() < 1e-14);
        }
    }

    #[test]
    fn wavefunction_boundary_values() {
        let p = nu(0.0, 0.0);
        let scale = OscillatorScale::default();
        let s = SectorState::new(Sector::PlusPlus, 0, Ell::integer(0), Spin::Up, Branch::Plus).unwrap();
        assert_eq!(radial_wavefunction(&s, &scale, &p, 0.0), 1.0);
        let s = state(Sector::MinusPlus, 2, Ell::half_odd(1), Spin::Down);
        assert!(radial_wavefunction(&s, &scale, &nu(0.2, -0.4), 40.0).abs() < 1e-100);
    }

    #[test]
    fn wavefunction_node_count() {
        let scale = OscillatorScale::new(1.3, 0.7).unwrap();
        for (sector, ell) in [(Sector::PlusPlus, Ell::integer(1)), (Sector::PlusMinus, Ell::half_odd(0))] {
            for n in 0..3u32 {
                let s = state(sector, n, ell, Spin::Up);
                let values: Vec<f64> = (1..4000)
                    .map(|i| radial_wavefunction(&s, &scale, &nu(0.4, -0.2), f64::from(i) * 0.004))
                    .collect();
                let nodes = values.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
                assert_eq!(nodes as u32, n, "{sector} n={n}");
            }
        }
    }

    #[test]
    fn wavefunction_solves_radial_equation() {
        let scale = OscillatorScale::new(1.0, 1.0).unwrap();
        for p in [nu(0.0, 0.0), nu(0.4, 0.4), nu(0.4, -0.4), nu(-0.4, 0.4)] {
            for sector in Sector::ALL {
                let ell = Ell::minimum(sector.epsilon());
                for n in 0..3 {
                    for spin in Spin::BOTH {
                        let s = state(sector, n, ell, spin);
                        for i in 0..50 {
                            let r = 0.1 + 4.9 * f64::from(i) / 49.0;
                            let (res, largest) = radial_equation_residual(&s, &scale, &p, r);
                            assert!(res.abs() <= 1e-6 * largest, "{sector} n={n} r={r}: {res} vs {largest}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn normalization_reproduces_gaussian_ground_state() {
        // ν = 0, ℓ = 0, n = 0: F = e^{−r²/4}; ∫ e^{−r²/2} r dr = 1.
        let s = SectorState::new(Sector::PlusPlus, 0, Ell::integer(0), Spin::Up, Branch::Plus).unwrap();
        let c = normalization_constant(&s, &OscillatorScale::default(), &nu(0.0, 0.0));
        assert!((c - 1.0).abs() < 1e-10, "{c}");
        // ℓ = 1: F = r² e^{−r²/4}; ∫ r⁵ e^{−r²/2} dr = 8.
        let s = state(Sector::PlusPlus, 0, Ell::integer(1), Spin::Up);
        let c = normalization_constant(&s, &OscillatorScale::default(), &nu(0.0, 0.0));
        assert!((c - 8f64.sqrt().recip()).abs() < 1e-10, "{c}");
    }

    #[test]
    fn normalization_handles_singular_weight() {
        // ℓ = 0 with ν₁ + ν₂ = −0.8: weight r^{−0.6}. ∫ r^{−0.6} e^{−r²/2} dr = 2^{−0.8} Γ(0.2).
        let s = SectorState::new(Sector::PlusPlus, 0, Ell::integer(0), Spin::Up, Branch::Plus).unwrap();
        let p = nu(-0.4, -0.4);
        // radial exponent: √(0.64) + 0.8 = 1.6, so the integrand is r^{3.2 − 0.6}.
        let sexp = radial_exponent(Ell::integer(0), Parity::Even, &p);
        assert!((sexp - 1.6).abs() < 1e-14);
        let c = normalization_constant(&s, &OscillatorScale::default(), &p);
        // ∫ r^{2.6} e^{−r²/2} dr = 2^{0.8} Γ(1.8)
        let gamma_1_8 = 0.931_383_770_980_243;
        let expected = (2f64.powf(0.8) * gamma_1_8).sqrt().recip();
        assert!((c - expected).abs() < 1e-9, "{c} vs {expected}");
    }
}
