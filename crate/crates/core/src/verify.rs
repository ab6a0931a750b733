//! The full verification run: exact algebra, angular eigenpairs, closed-form
//! spectra against the finite-difference oracle, thermodynamic identities,
//! and machine checks of the known inconsistencies in the printed formulas.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angular::{
    angular_eigenpair, angular_identity_residual, candidate_basis, candidate_basis_as_printed, restricted_g_matrix,
    TrigPoly,
};
use crate::dunkl::{
    angular_momentum, angular_momentum_as_printed, commutator_dd, commutator_xd, dunkl_derive, dunkl_laplacian,
    dunkl_laplacian_expanded, heisenberg_rhs, reflect, BivarPoly,
};
use crate::figures::{generate, interior_maxima, EllChoice, FigureId};
use crate::oracle::{validate_sector, DiscretizationConfig};
use crate::params::{Axis, Branch, Ell, Parity, Sector, Spin, WignerParams};
use crate::poly::Poly;
use crate::spectrum::{self, energy_sector_form_over_omega, radical_identity_check, rho, OscillatorScale, SectorState};
use crate::thermo::{
    default_grid, direct_sum_partition, entropy, heat_capacity, helmholtz, internal_energy, log_partition, partition,
    required_terms, sweep, Ladder, Mode, Quantity,
};

pub type EtaFn = fn(Sector, &WignerParams) -> f64;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub skip_oracle: bool,
    pub seed: u64,
    /// The η table under test; replaced only by mutation checks.
    pub eta: EtaFn,
    pub discretization: DiscretizationConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            skip_oracle: false,
            seed: 0x5eed_d0e1,
            eta: spectrum::eta,
            discretization: DiscretizationConfig::default(),
        }
    }
}

/// η with the sign of the ν₂ term flipped in the (+1, −1) sector. Used to
/// confirm that the suite notices a corrupted table.
pub fn eta_with_flipped_plus_minus(sector: Sector, params: &WignerParams) -> f64 {
    match sector {
        Sector::PlusMinus => (1.0 + params.nu1_f64() + params.nu2_f64()) / 2.0,
        other => spectrum::eta(other, params),
    }
}

const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub counterexamples: Vec<String>,
    pub skipped: bool,
    pub elapsed: Duration,
}

impl SuiteReport {
    fn skipped(name: &'static str) -> Self {
        Self {
            name,
            passed: 0,
            failed: 0,
            counterexamples: Vec::new(),
            skipped: true,
            elapsed: Duration::ZERO,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

struct Tally {
    name: &'static str,
    start: Instant,
    passed: usize,
    failed: usize,
    counterexamples: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            start: Instant::now(),
            passed: 0,
            failed: 0,
            counterexamples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(describe());
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            passed: self.passed,
            failed: self.failed,
            counterexamples: self.counterexamples,
            skipped: false,
            elapsed: self.start.elapsed(),
        }
    }
}

/// One inconsistency in the printed formulas and the evidence for it.
#[derive(Debug, Clone)]
pub struct Discrepancy {
    pub id: &'static str,
    pub description: &'static str,
    pub detected: bool,
    pub evidence: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
    pub ledger: Vec<Discrepancy>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::ok) && self.ledger.iter().all(|d| d.detected)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = (&'static str, &String)> {
        self.suites
            .iter()
            .flat_map(|s| s.counterexamples.iter().map(move |c| (s.name, c)))
            .take(MAX_COUNTEREXAMPLES)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            if s.skipped {
                let _ = writeln!(out, "suite {:<9} skipped", s.name);
            } else {
                let _ = writeln!(
                    out,
                    "suite {:<9} {:>6} passed {:>4} failed  ({:.2} s)",
                    s.name,
                    s.passed,
                    s.failed,
                    s.elapsed.as_secs_f64()
                );
            }
        }
        let _ = writeln!(out, "discrepancy ledger:");
        for d in &self.ledger {
            let status = if d.detected { "detected" } else { "NOT DETECTED" };
            let _ = writeln!(out, "  [{status}] {}: {}", d.id, d.description);
            let _ = writeln!(out, "      {}", d.evidence);
        }
        let examples: Vec<_> = self.counterexamples().collect();
        if !examples.is_empty() {
            let _ = writeln!(out, "counterexamples (first {MAX_COUNTEREXAMPLES}):");
            for (suite, c) in examples {
                let _ = writeln!(out, "  {suite}: {c}");
            }
        }
        let _ = writeln!(out, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

pub fn run(options: &VerifyOptions) -> VerifyReport {
    let mut suites = vec![
        algebra_suite(options.seed, 200),
        angular_suite(options.seed, 100),
        spectrum_suite(options.eta),
    ];
    suites.push(if options.skip_oracle {
        SuiteReport::skipped("oracle")
    } else {
        oracle_suite(&options.discretization)
    });
    suites.push(thermo_suite());
    VerifyReport {
        suites,
        ledger: discrepancy_ledger(),
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// ν > −1/2 and ν ≤ 2 with a small denominator.
pub fn random_nu(rng: &mut impl Rng) -> BigRational {
    let den: i64 = rng.gen_range(1..=12);
    let lo = (-den).div_euclid(2) + 1;
    ratio(rng.gen_range(lo..=2 * den), den)
}

pub fn random_params(rng: &mut impl Rng) -> WignerParams {
    WignerParams::new(random_nu(rng), random_nu(rng)).expect("drawn inside the admissible range")
}

fn random_coefficient(rng: &mut impl Rng) -> BigRational {
    ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

/// Random polynomial of total degree ≤ `max_degree`.
pub fn random_bivariate(rng: &mut impl Rng, max_degree: u32) -> BivarPoly {
    let terms = rng.gen_range(1..=12);
    BivarPoly::from_terms((0..terms).map(|_| {
        let i = rng.gen_range(0..=max_degree);
        let j = rng.gen_range(0..=max_degree - i);
        ((i, j), random_coefficient(rng))
    }))
}

/// Random A(cos θ) + sin θ · B(cos θ) with deg A, deg B ≤ `max_degree`.
pub fn random_trig(rng: &mut impl Rng, max_degree: usize) -> TrigPoly<BigRational> {
    let even = random_poly(rng, max_degree);
    let odd = random_poly(rng, max_degree);
    TrigPoly::new(even, odd)
}

fn random_poly(rng: &mut impl Rng, max_degree: usize) -> Poly<BigRational> {
    let deg = rng.gen_range(0..=max_degree);
    Poly::new((0..=deg).map(|_| random_coefficient(rng)).collect())
}

fn axis_label(a: Axis) -> &'static str {
    match a {
        Axis::X1 => "1",
        Axis::X2 => "2",
    }
}

/// Deformed Heisenberg relations and reflection relations, exactly.
pub fn algebra_suite(seed: u64, samples: usize) -> SuiteReport {
    let mut t = Tally::new("algebra");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples {
        let params = random_params(&mut rng);
        let p = random_bivariate(&mut rng, 8);
        let here = |what: String| format!("sample {k}: {what} fails for {params}, p = {p}");
        for i in Axis::BOTH {
            for j in Axis::BOTH {
                let ok = commutator_xd(&p, i, j, &params) == heisenberg_rhs(&p, i, j, &params);
                t.check(ok, || here(format!("[x{}, D{}]", axis_label(i), axis_label(j))));
            }
        }
        t.check(commutator_dd(&p, &params).is_zero(), || here("[D1, D2] = 0".into()));
        for j in Axis::BOTH {
            let jl = axis_label(j);
            let rp = reflect(&p, j);
            t.check(reflect(&rp, j) == p, || here(format!("R{jl}^2 = 1")));
            let lhs = reflect(&p.mul_var_pow(j, 1), j);
            t.check(lhs == -&rp.mul_var_pow(j, 1), || here(format!("R{jl} x{jl} = -x{jl} R{jl}")));
            let lhs = reflect(&dunkl_derive(&p, j, &params), j);
            t.check(lhs == -&dunkl_derive(&rp, j, &params), || {
                here(format!("R{jl} D{jl} = -D{jl} R{jl}"))
            });
            for i in Axis::BOTH.into_iter().filter(|&i| i != j) {
                let il = axis_label(i);
                let ok = reflect(&p.mul_var_pow(i, 1), j) == rp.mul_var_pow(i, 1);
                t.check(ok, || here(format!("R{jl} x{il} = x{il} R{jl}")));
                let ok = reflect(&dunkl_derive(&p, i, &params), j) == dunkl_derive(&rp, i, &params);
                t.check(ok, || here(format!("R{jl} D{il} = D{il} R{jl}")));
            }
        }
        let ok = dunkl_laplacian(&p, &params) == dunkl_laplacian_expanded(&p, &params);
        t.check(ok, || here("Laplacian composition = expanded form".into()));
    }
    t.finish()
}

pub const NU_GRID: [f64; 5] = [-0.4, -0.2, 0.0, 0.2, 0.4];

fn nu_grid() -> impl Iterator<Item = WignerParams> {
    NU_GRID
        .into_iter()
        .flat_map(|a| NU_GRID.into_iter().map(move |b| WignerParams::from_f64(a, b).expect("grid values are admissible")))
}

/// ℓ ≤ 5 (integer) or ℓ ≤ 9/2 (half-odd), without the ℓ = 0 mode.
fn ell_grid(parity: Parity) -> Vec<Ell> {
    let max = match parity {
        Parity::Even => Ell::integer(5),
        Parity::Odd => Ell::half_odd(4),
    };
    Ell::range(parity, max, false)
}

/// λ² = 4ℓ(ℓ+ν₁+ν₂) or 4(ℓ+ν₁)(ℓ+ν₂), evaluated directly.
fn reference_lambda(ell: Ell, parity: Parity, params: &WignerParams) -> f64 {
    let (l, n1, n2) = (ell.to_f64(), params.nu1_f64(), params.nu2_f64());
    match parity {
        Parity::Even => 2.0 * (l * (l + n1 + n2)).sqrt(),
        Parity::Odd => 2.0 * ((l + n1) * (l + n2)).sqrt(),
    }
}

/// The angular operator identity on random trigonometric polynomials and
/// the eigenpair construction on the full ν/ℓ grid.
pub fn angular_suite(seed: u64, samples: usize) -> SuiteReport {
    let mut t = Tally::new("angular");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa5a5);
    for k in 0..samples {
        let params = random_params(&mut rng);
        let f = random_trig(&mut rng, 6);
        let residual = angular_identity_residual(&f, &params);
        t.check(residual.is_zero(), || {
            format!("sample {k}: G^2 f + 2B f + 2nu1 nu2 (1 - R1R2) f != 0 for {params}")
        });
    }
    for params in nu_grid() {
        for sector in Sector::ALL {
            let parity = sector.epsilon();
            for ell in ell_grid(parity) {
                for branch in [Branch::Plus, Branch::Minus] {
                    let label = || format!("{sector} l = {ell} branch {} {params}", branch.label());
                    match angular_eigenpair(ell, sector, branch, &params) {
                        Ok(pair) => {
                            let expected = branch.sign() * reference_lambda(ell, parity, &params);
                            let rel = (pair.lambda - expected).abs() / expected.abs();
                            t.check(rel <= 1e-12, || format!("{}: lambda {} vs {expected}", label(), pair.lambda));
                            let res = pair.residual(&params);
                            t.check(res <= 1e-12, || format!("{}: eigen residual {res:e}", label()));
                            let parity_ok = pair.eigenfunction.reflect_r1r2() == pair.eigenfunction.scale(
                                &num_complex::Complex64::new(f64::from(parity.sign()), 0.0),
                            );
                            t.check(parity_ok, || format!("{}: R1R2 parity", label()));
                        }
                        Err(e) => t.check(false, || format!("{}: {e}", label())),
                    }
                }
            }
        }
    }
    t.finish()
}

/// η table, compact versus sector-specific energies, and the radical identity.
pub fn spectrum_suite(eta: EtaFn) -> SuiteReport {
    let mut t = Tally::new("spectrum");
    for params in nu_grid() {
        for sector in Sector::ALL {
            let parity = sector.epsilon();
            let tag = format!("({:+},{:+})", sector.eps1(), sector.eps2());
            let ell0 = Ell::minimum(parity);
            let level = |spin| SectorState::new(sector, 0, ell0, spin, Branch::Plus).expect("valid state");
            // the Zeeman splitting of the sector-specific ladder is 2η
            let split = (energy_sector_form_over_omega(&level(Spin::Down), &params)
                - energy_sector_form_over_omega(&level(Spin::Up), &params))
                / 2.0;
            let value = eta(sector, &params);
            t.check((value - split).abs() <= 1e-12, || {
                format!("eta{tag} at {params} is {value}, splitting gives {split}")
            });

            for ell in ell_grid(parity) {
                let (lhs, rhs) = radical_identity_check(ell, parity, &params);
                t.check((lhs - rhs).abs() <= 1e-12 * rhs.abs(), || {
                    format!("radical identity {sector} l = {ell} {params}: {lhs} vs {rhs}")
                });
                let r = rho(ell, parity, Branch::Plus, &params);
                for n in 0..=3 {
                    for spin in Spin::BOTH {
                        let state = SectorState::new(sector, n, ell, spin, Branch::Plus).expect("valid state");
                        let compact = f64::from(n) + 0.5 + r - spin.as_f64() * value;
                        let literal = energy_sector_form_over_omega(&state, &params);
                        t.check((compact - literal).abs() <= 1e-12 * literal.abs().max(1.0), || {
                            format!(
                                "energy {sector} n = {n} l = {ell} m_s = {} {params} with eta{tag}: {compact} vs {literal}",
                                spin.value()
                            )
                        });
                    }
                }
            }
        }
    }
    t.finish()
}

/// ν combinations of the oracle and partition-function comparisons.
pub const ACCEPTANCE_NU: [(f64, f64); 4] = [(0.0, 0.0), (0.4, 0.4), (0.4, -0.4), (-0.4, 0.4)];

/// First two sector-valid ℓ (ℓ = 0 excluded).
pub fn first_two_ells(parity: Parity) -> [Ell; 2] {
    let first = Ell::minimum(parity);
    [first, Ell::from_twice(first.twice() + 2)]
}

/// Oracle against closed form over 4 sectors × 4 ν × 2 ℓ × n ≤ 2 × m_s = ±1.
pub fn oracle_suite(config: &DiscretizationConfig) -> SuiteReport {
    let mut t = Tally::new("oracle");
    let scale = OscillatorScale::default();
    for (nu1, nu2) in ACCEPTANCE_NU {
        let params = WignerParams::from_f64(nu1, nu2).expect("admissible");
        for sector in Sector::ALL {
            let ells = first_two_ells(sector.epsilon());
            match validate_sector(sector, &params, &scale, &ells, 2, config) {
                Ok(report) => {
                    for row in &report.rows {
                        t.check(row.deviation <= crate::oracle::ValidationReport::TOLERANCE, || {
                            let s = &row.state;
                            format!(
                                "{sector} n = {} l = {} m_s = {} {params}: oracle {} vs closed form {}",
                                s.n,
                                s.ell,
                                s.spin.value(),
                                row.oracle,
                                row.closed_form
                            )
                        });
                    }
                }
                Err(e) => t.check(false, || format!("{sector} {params}: {e}")),
            }
        }
    }
    t.finish()
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

pub const PARTITION_X: [f64; 6] = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0];

/// Ladders for every sector × acceptance ν × first two ℓ.
fn acceptance_ladders() -> Vec<(String, Ladder)> {
    let mut out = Vec::new();
    for (nu1, nu2) in ACCEPTANCE_NU.into_iter().chain([(-0.4, -0.4)]) {
        let params = WignerParams::from_f64(nu1, nu2).expect("admissible");
        for sector in Sector::ALL {
            for ell in first_two_ells(sector.epsilon()) {
                let ladder = Ladder::for_level(sector, ell, Branch::Plus, &params).expect("valid level");
                out.push((format!("{sector} l = {ell} {params}"), ladder));
            }
        }
    }
    out
}

/// Direct summation, derivative chain, F = U − TS, limits and figure shapes.
pub fn thermo_suite() -> SuiteReport {
    let mut t = Tally::new("thermo");
    let ladders = acceptance_ladders();
    for (label, ladder) in &ladders {
        for x in PARTITION_X {
            let inputs = ladder.at(x, Mode::Consistent).expect("positive x");
            let closed = partition(&inputs);
            match direct_sum_partition(x, ladder.rho, ladder.eta, required_terms(x)) {
                Ok(direct) => t.check(rel_close(closed, direct, 1e-12), || {
                    format!("Z {label} x = {x}: closed {closed} vs direct {direct}")
                }),
                Err(e) => t.check(false, || format!("Z {label} x = {x}: {e}")),
            }
        }
        for k in 0..=60 {
            let x = 0.05 * 1000f64.powf(f64::from(k) / 60.0);
            let i = ladder.at(x, Mode::Consistent).expect("positive x");
            let residual = x * helmholtz(&i) - (x * internal_energy(&i) - entropy(&i));
            t.check(residual.abs() <= 1e-10, || format!("F = U - TS {label} x = {x}: residual {residual:e}"));
            let pf = i.with_mode(Mode::PaperFaithful);
            t.check(heat_capacity(&pf) == heat_capacity(&i), || format!("C mode dependence {label} x = {x}"));
        }
        for x in [0.3, 1.0, 3.0] {
            let i = ladder.at(x, Mode::Consistent).expect("positive x");
            let h = 1e-4 * x;
            let lz = |x: f64| log_partition(&i.with_x(x));
            let u_fd = -(lz(x + h) - lz(x - h)) / (2.0 * h);
            let u = internal_energy(&i);
            t.check(rel_close(u, u_fd, 1e-6), || format!("U {label} x = {x}: {u} vs -dlogZ/dbeta {u_fd}"));
            let uu = |x: f64| internal_energy(&i.with_x(x));
            let c_fd = -x * x * (uu(x + h) - uu(x - h)) / (2.0 * h);
            let c = heat_capacity(&i);
            t.check(rel_close(c, c_fd, 1e-6), || format!("C {label} x = {x}: {c} vs -beta^2 dU/dbeta {c_fd}"));
        }
        let c_hot = heat_capacity(&ladder.at(1e-3, Mode::Consistent).expect("positive x"));
        t.check((c_hot - 1.0).abs() <= 1e-3, || format!("C(tau = 1000) {label}: {c_hot}"));
        let grid = default_grid();
        let z = sweep(Quantity::Z, ladder, Mode::Consistent, &grid).expect("valid grid");
        t.check(z.values.windows(2).all(|w| w[1] > w[0]), || format!("Z not increasing {label}"));
        for k in 0..=40 {
            let x = 1e-3 * 7e5f64.powf(f64::from(k) / 40.0);
            for mode in [Mode::Consistent, Mode::PaperFaithful] {
                let i = ladder.at(x, mode).expect("positive x");
                for q in Quantity::ALL {
                    let v = q.evaluate(&i);
                    t.check(v.is_finite(), || format!("{q} {label} x = {x} {mode}: {v}"));
                }
            }
        }
    }

    // ε = +1 with ν₁ = −ν₂ reproduces the undeformed ladder
    let grid = default_grid();
    for ell in [Ell::integer(1), Ell::integer(2)] {
        let base = Ladder::for_level(Sector::PlusPlus, ell, Branch::Plus, &WignerParams::undeformed()).expect("valid");
        let base_z = sweep(Quantity::Z, &base, Mode::Consistent, &grid).expect("valid grid");
        for v in [0.2, 0.4, -0.2, -0.4] {
            let params = WignerParams::from_f64(v, -v).expect("admissible");
            let ladder = Ladder::for_level(Sector::PlusPlus, ell, Branch::Plus, &params).expect("valid");
            let z = sweep(Quantity::Z, &ladder, Mode::Consistent, &grid).expect("valid grid");
            t.check(z.values == base_z.values, || format!("Z(++, l = {ell}, {params}) differs from nu = 0"));
        }
    }

    for number in [5u8, 6] {
        let id = FigureId::new(number, None).expect("figure id");
        for fc in generate(id, &EllChoice::default(), Mode::Consistent, None).expect("figure sweep") {
            let peaks = interior_maxima(&fc.curve.values);
            t.check(peaks == 1, || {
                format!("figure {number}{} {}: {peaks} interior maxima of C", fc.panel, fc.spec.label())
            });
        }
    }
    for number in [7u8, 8] {
        let id = FigureId::new(number, None).expect("figure id");
        for fc in generate(id, &EllChoice::default(), Mode::Consistent, None).expect("figure sweep") {
            let ok = fc.curve.values.windows(2).all(|w| w[1] >= w[0]);
            t.check(ok, || format!("figure {number}{} {}: S decreases", fc.panel, fc.spec.label()));
        }
    }
    t.finish()
}

/// Machine checks of the four inconsistencies.
pub fn discrepancy_ledger() -> Vec<Discrepancy> {
    vec![
        internal_energy_sign(),
        entropy_last_term(),
        hamiltonian_angular_term(),
        jacobi_argument(),
    ]
}

fn reference_ladder() -> Ladder {
    let params = WignerParams::from_ratios((2, 5), (2, 5)).expect("admissible");
    Ladder::for_level(Sector::PlusPlus, Ell::integer(1), Branch::Plus, &params).expect("valid level")
}

fn internal_energy_sign() -> Discrepancy {
    let ladder = reference_ladder();
    let x = 1.0;
    let i = ladder.at(x, Mode::Consistent).expect("positive x");
    let h = 1e-5;
    let lz = |x: f64| log_partition(&i.with_x(x));
    let u_fd = -(lz(x + h) - lz(x - h)) / (2.0 * h);
    let faithful = internal_energy(&i.with_mode(Mode::PaperFaithful)) - u_fd;
    let consistent = internal_energy(&i) - u_fd;
    Discrepancy {
        id: "internal-energy-sign",
        description: "printed U carries -rho where -dlogZ/dbeta gives +rho",
        detected: faithful.abs() > 1e-6 && consistent.abs() <= 1e-6,
        evidence: format!(
            "x = 1, rho = {:.9}: printed U + dlogZ/dbeta = {faithful:.9} (-2 rho = {:.9}); consistent residual {consistent:.1e}",
            ladder.rho,
            -2.0 * ladder.rho
        ),
    }
}

fn entropy_last_term() -> Discrepancy {
    let ladder = reference_ladder();
    let x = 1.0;
    let i = ladder.at(x, Mode::Consistent).expect("positive x");
    let identity = |u: f64, s: f64| x * helmholtz(&i) - (x * u - s);
    let u = internal_energy(&i);
    let printed_s = entropy(&i.with_mode(Mode::PaperFaithful));
    let isolated = identity(u, printed_s);
    let consistent = identity(u, entropy(&i));
    let pf = i.with_mode(Mode::PaperFaithful);
    let all_printed = identity(internal_energy(&pf), entropy(&pf));
    Discrepancy {
        id: "entropy-last-term",
        description: "printed S uses coth(beta omega eta) where F = U - TS requires tanh",
        detected: isolated.abs() > 1e-6 && consistent.abs() <= 1e-10,
        evidence: format!(
            "x = 1, eta = {}: beta(F - U + TS) = {isolated:.9} with printed S, {consistent:.1e} with tanh, {all_printed:.9} with printed U and S",
            ladder.eta
        ),
    }
}

fn hamiltonian_angular_term() -> Discrepancy {
    let params = WignerParams::from_ratios((2, 5), (1, 10)).expect("admissible");
    let r2 = &(&BivarPoly::x1() * &BivarPoly::x1()) + &(&BivarPoly::x2() * &BivarPoly::x2());
    let printed = angular_momentum_as_printed(&r2, &params);
    let rotation = angular_momentum(&r2, &params);
    let x1 = BivarPoly::x1();
    let printed_x1 = angular_momentum_as_printed(&x1, &params);
    let rotation_x1 = angular_momentum(&x1, &params);
    Discrepancy {
        id: "hamiltonian-angular-term",
        description: "printed angular term x1 D2 - x2 D2 is not the rotation generator x1 D2 - x2 D1",
        detected: !printed.is_zero() && rotation.is_zero() && printed_x1 != rotation_x1,
        evidence: format!(
            "on r^2: printed gives {printed}, x1 D2 - x2 D1 gives {}; on x1: printed gives {}, rotation gives {rotation_x1}",
            if rotation.is_zero() { "0".to_string() } else { rotation.to_string() },
            if printed_x1.is_zero() { "0".to_string() } else { printed_x1.to_string() },
        ),
    }
}

fn jacobi_argument() -> Discrepancy {
    let params = WignerParams::from_ratios((2, 5), (1, 10)).expect("admissible");
    let cases = [(Ell::integer(1), Parity::Even), (Ell::half_odd(1), Parity::Odd)];
    let mut printed_invariant = Vec::new();
    let mut corrected_invariant = Vec::new();
    for (ell, parity) in cases {
        let printed = candidate_basis_as_printed(ell, parity, &params).expect("valid ell");
        let corrected = candidate_basis(ell, parity, &params).expect("valid ell");
        printed_invariant.push(restricted_g_matrix(&printed, &params).is_some());
        corrected_invariant.push(restricted_g_matrix(&corrected, &params).is_some());
    }
    Discrepancy {
        id: "jacobi-argument",
        description: "Jacobi argument -2cos(theta) does not give a G-invariant angular space; -cos(2 theta) does",
        detected: printed_invariant.iter().all(|ok| !ok) && corrected_invariant.iter().all(|ok| *ok),
        evidence: format!(
            "G-invariant for (l = 1, eps = +1), (l = 3/2, eps = -1) at {params}: printed {printed_invariant:?}, corrected {corrected_invariant:?}"
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_nu_stays_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let v = random_nu(&mut rng);
            assert!(v > ratio(-1, 2) && v <= ratio(2, 1));
        }
    }

    #[test]
    fn exact_suites_pass() {
        for report in [algebra_suite(1, 20), angular_suite(1, 10), spectrum_suite(spectrum::eta)] {
            assert!(report.ok(), "{}: {:?}", report.name, report.counterexamples);
        }
    }

    #[test]
    fn flipped_eta_is_caught() {
        let report = spectrum_suite(eta_with_flipped_plus_minus);
        assert!(!report.ok());
        assert!(report.counterexamples[0].contains("eta(+1,-1)"), "{}", report.counterexamples[0]);
    }

    #[test]
    fn ledger_detects_all_four() {
        for d in discrepancy_ledger() {
            assert!(d.detected, "{}: {}", d.id, d.evidence);
        }
    }
}
