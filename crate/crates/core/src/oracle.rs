//! Finite-difference eigenvalue solver for the sector radial equations.
//!
//! The substitution F(r) = r^{−(1+2ν₁+2ν₂)/2} u(r) removes the first-derivative
//! term, leaving −u″ + V_eff u = 2mE u on (r_min, r_max) with Dirichlet ends.
//! Central differences give a symmetric tridiagonal matrix whose lowest
//! eigenvalues are found by Sturm-sequence bisection.

use crate::angular::lambda_value;
use crate::error::{Error, Result};
use crate::params::{Branch, Ell, Parity, Sector, Spin, WignerParams};
use crate::spectrum::{energy_over_omega, OscillatorScale, SectorState};

/// One sector radial equation at fixed ℓ, m_s and λ branch.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProblem {
    pub sector: Sector,
    pub ell: Ell,
    pub spin: Spin,
    pub lambda: f64,
    pub params: WignerParams,
    pub scale: OscillatorScale,
    pub centrifugal_coefficient: f64,
}

impl RadialProblem {
    pub fn new(
        sector: Sector,
        ell: Ell,
        spin: Spin,
        branch: Branch,
        params: &WignerParams,
        scale: &OscillatorScale,
    ) -> Result<Self> {
        ell.validate(sector.epsilon(), true)?;
        let lambda = lambda_value(ell, sector.epsilon(), branch, params);
        // J² − 2ν₁ν₂(1 − R₁R₂); 1 − R₁R₂ acts as 0 on ε = +1 and 2 on ε = −1
        let one_minus_r1r2 = match sector.epsilon() {
            Parity::Even => 0.0,
            Parity::Odd => 2.0,
        };
        let centrifugal_coefficient =
            lambda * lambda - 2.0 * params.nu1_f64() * params.nu2_f64() * one_minus_r1r2;
        Ok(Self {
            sector,
            ell,
            spin,
            lambda,
            params: params.clone(),
            scale: *scale,
            centrifugal_coefficient,
        })
    }

    /// 1 + 2ν₁ + 2ν₂, the power of r in the radial measure.
    fn measure_exponent(&self) -> f64 {
        1.0 + 2.0 * (self.params.nu1_f64() + self.params.nu2_f64())
    }

    /// Coefficient of 1/r² in V_eff after the substitution.
    pub fn inverse_square_coefficient(&self) -> f64 {
        let k = self.measure_exponent();
        self.centrifugal_coefficient + (k * k - 2.0 * k) / 4.0
    }

    /// V_eff(r) such that −u″ + V_eff u = 2mE u.
    pub fn effective_potential(&self, r: f64) -> f64 {
        let (m, w, g) = (self.scale.mass(), self.scale.omega_c(), self.scale.g_s());
        let e1 = f64::from(self.sector.eps1());
        let e2 = f64::from(self.sector.eps2());
        let zeeman = m * w * g / 2.0
            * self.spin.as_f64()
            * (1.0 + self.params.nu1_f64() * e1 + self.params.nu2_f64() * e2);
        m * m * w * w * r * r / 4.0 + self.inverse_square_coefficient() / (r * r) + m * w * self.lambda - zeeman
    }
}

/// Uniform grid on (r_max/n_points, r_max) with Dirichlet ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscretizationConfig {
    pub n_points: usize,
    /// In natural lengths (mω_c/2)^{−1/2}.
    pub r_max: f64,
    /// Combine grids h and h/2 as (4E_{h/2} − E_h)/3.
    pub richardson: bool,
}

impl DiscretizationConfig {
    pub const MIN_POINTS: usize = 500;
    pub const MIN_R_MAX: f64 = 8.0;
    /// Grid points per natural length below which the estimated
    /// discretization error exceeds the validation tolerance.
    pub const MIN_DENSITY: f64 = 50.0;

    pub fn new(n_points: usize, r_max: f64) -> Result<Self> {
        let config = Self {
            n_points,
            r_max,
            richardson: true,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_richardson(self, richardson: bool) -> Self {
        Self { richardson, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_points < Self::MIN_POINTS {
            return Err(Error::InvalidDiscretization(format!(
                "n_points = {} is below {}",
                self.n_points,
                Self::MIN_POINTS
            )));
        }
        if self.r_max.is_nan() || self.r_max < Self::MIN_R_MAX {
            return Err(Error::InvalidDiscretization(format!(
                "r_max = {} natural lengths is below {}",
                self.r_max,
                Self::MIN_R_MAX
            )));
        }
        if (self.n_points as f64) / self.r_max < Self::MIN_DENSITY {
            return Err(Error::InvalidDiscretization(format!(
                "grid too coarse: {:.1} points per natural length, need {}",
                self.n_points as f64 / self.r_max,
                Self::MIN_DENSITY
            )));
        }
        Ok(())
    }
}

impl Default for DiscretizationConfig {
    fn default() -> Self {
        Self {
            n_points: 4000,
            r_max: 10.0,
            richardson: true,
        }
    }
}

/// Symmetric tridiagonal matrix: `diag[i]` and `off[i]` = M[i][i+1] = M[i+1][i].
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(off.len() + 1, diag.len().max(1), "off-diagonal length must be n − 1");
        Self { diag, off }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for (i, d) in self.diag.iter().enumerate() {
            let coupling = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            q = d - x - if i == 0 { 0.0 } else { coupling / q };
            if q == 0.0 {
                q = -f64::EPSILON * (d.abs() + x.abs()).max(f64::MIN_POSITIVE);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the spectrum.
    fn bounds(&self) -> (f64, f64) {
        let n = self.len();
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }
}

/// Matrix of −d²/dr² + V_eff on the interior grid points (energies in 2m units).
pub fn build_tridiagonal(problem: &RadialProblem, config: &DiscretizationConfig) -> Result<Tridiagonal> {
    config.validate()?;
    let (_, h, nodes) = grid(problem, config.n_points, config.r_max);
    let inv_h2 = 1.0 / (h * h);
    let diag = nodes
        .iter()
        .map(|&r| 2.0 * inv_h2 + problem.effective_potential(r))
        .collect();
    let off = vec![-inv_h2; nodes.len() - 1];
    Ok(Tridiagonal::new(diag, off))
}

/// (r_min, h, interior nodes) for `n_points` intervals.
fn grid(problem: &RadialProblem, n_points: usize, r_max: f64) -> (f64, f64, Vec<f64>) {
    let length = problem.scale.natural_length();
    let r_hi = r_max * length;
    let r_min = r_hi / n_points as f64;
    let h = (r_hi - r_min) / n_points as f64;
    let nodes = (1..n_points).map(|i| r_min + i as f64 * h).collect();
    (r_min, h, nodes)
}

pub const MAX_EIGENVALUES: usize = 10;
const BISECTION_TOLERANCE: f64 = 1e-10;
const BISECTION_CAP: usize = 200;

/// The k smallest eigenvalues in ascending order.
pub fn lowest_eigenvalues(matrix: &Tridiagonal, k: usize) -> Result<Vec<f64>> {
    if k > MAX_EIGENVALUES || k > matrix.len() {
        return Err(Error::EigenRequest(format!(
            "requested {k} eigenvalues of a {}x{} matrix (limit {MAX_EIGENVALUES})",
            matrix.len(),
            matrix.len()
        )));
    }
    let (lo, hi) = matrix.bounds();
    (0..k)
        .map(|index| {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..BISECTION_CAP {
                if b - a <= BISECTION_TOLERANCE {
                    return Ok(0.5 * (a + b));
                }
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    return Ok(mid);
                }
                if matrix.count_below(mid) > index {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            Err(Error::NoConvergence {
                iterations: BISECTION_CAP,
            })
        })
        .collect()
}

/// Lowest `k` energies E/ω_c of the radial problem.
pub fn oracle_energies(problem: &RadialProblem, config: &DiscretizationConfig, k: usize) -> Result<Vec<f64>> {
    let to_energy = |eig: f64| eig / (2.0 * problem.scale.mass() * problem.scale.omega_c());
    let coarse: Vec<f64> = lowest_eigenvalues(&build_tridiagonal(problem, config)?, k)?
        .into_iter()
        .map(to_energy)
        .collect();
    if !config.richardson {
        return Ok(coarse);
    }
    let fine_config = DiscretizationConfig {
        n_points: 2 * config.n_points,
        ..*config
    };
    let fine = lowest_eigenvalues(&build_tridiagonal(problem, &fine_config)?, k)?;
    Ok(coarse
        .iter()
        .zip(fine)
        .map(|(c, f)| (4.0 * to_energy(f) - c) / 3.0)
        .collect())
}

/// One oracle/closed-form comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationRow {
    pub state: SectorState,
    pub oracle: f64,
    pub closed_form: f64,
    /// |oracle − closed| in units of ω_c.
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub sector: Sector,
    pub params: WignerParams,
    pub rows: Vec<ValidationRow>,
}

impl ValidationReport {
    pub const TOLERANCE: f64 = 1e-5;

    pub fn worst(&self) -> Option<&ValidationRow> {
        self.rows.iter().max_by(|a, b| a.deviation.total_cmp(&b.deviation))
    }

    pub fn worst_deviation(&self) -> f64 {
        self.worst().map_or(0.0, |row| row.deviation)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ValidationRow> {
        self.rows.iter().filter(|row| row.deviation.is_nan() || row.deviation > Self::TOLERANCE)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Compares oracle and closed-form energies for every ℓ in `ells`,
/// n ≤ `n_max` and both spins, on the positive λ branch.
///
/// Mismatches are reported, not raised. The closed form assumes g_s = 2;
/// other g-factors produce a report with NaN closed-form values.
pub fn validate_sector(
    sector: Sector,
    params: &WignerParams,
    scale: &OscillatorScale,
    ells: &[Ell],
    n_max: u32,
    config: &DiscretizationConfig,
) -> Result<ValidationReport> {
    let k = n_max as usize + 1;
    let mut rows = Vec::new();
    for &ell in ells {
        for spin in Spin::BOTH {
            let problem = RadialProblem::new(sector, ell, spin, Branch::Plus, params, scale)?;
            let energies = oracle_energies(&problem, config, k)?;
            for (n, oracle) in (0..=n_max).zip(energies) {
                let state = SectorState::new(sector, n, ell, spin, Branch::Plus)?;
                let closed_form = if scale.is_closed_form_consistent() {
                    energy_over_omega(&state, params)
                } else {
                    f64::NAN
                };
                rows.push(ValidationRow {
                    state,
                    oracle,
                    closed_form,
                    deviation: (oracle - closed_form).abs(),
                });
            }
        }
    }
    Ok(ValidationReport {
        sector,
        params: params.clone(),
        rows,
    })
}
