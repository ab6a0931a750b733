//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use dunkl_pauli::angular::{angular_eigenpair, angular_identity_residual};
use dunkl_pauli::dunkl::{commutator_dd, commutator_xd, dunkl_derive, heisenberg_rhs, reflect};
use dunkl_pauli::figures::{generate, interior_maxima, EllChoice, FigureId};
use dunkl_pauli::oracle::{validate_sector, DiscretizationConfig};
use dunkl_pauli::spectrum::{energy_sector_form_over_omega, eta, radical_identity_check, rho, OscillatorScale, SectorState};
use dunkl_pauli::thermo::{
    default_grid, entropy, heat_capacity, helmholtz, internal_energy, partition, sweep, Ladder, Mode, Quantity,
};
use dunkl_pauli::verify::{discrepancy_ledger, random_bivariate, random_params, random_trig};
use dunkl_pauli::{Axis, Branch, Ell, Parity, Sector, Spin, WignerParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

const NU_VALUES: [f64; 5] = [-0.4, -0.2, 0.0, 0.2, 0.4];
const NU_PAIRS: [(f64, f64); 4] = [(0.0, 0.0), (0.4, 0.4), (0.4, -0.4), (-0.4, 0.4)];

fn nu(a: f64, b: f64) -> WignerParams {
    WignerParams::from_f64(a, b).unwrap()
}

fn first_two(parity: Parity) -> [Ell; 2] {
    let first = Ell::minimum(parity);
    [first, Ell::from_twice(first.twice() + 2)]
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut failures = 0;
    let mut checks = 0;
    for _ in 0..200 {
        let params = random_params(&mut rng);
        let p = random_bivariate(&mut rng, 8);
        for i in Axis::BOTH {
            for j in Axis::BOTH {
                checks += 1;
                failures += usize::from(commutator_xd(&p, i, j, &params) != heisenberg_rhs(&p, i, j, &params));
            }
        }
        checks += 1;
        failures += usize::from(!commutator_dd(&p, &params).is_zero());
        for j in Axis::BOTH {
            let rp = reflect(&p, j);
            checks += 3;
            failures += usize::from(reflect(&rp, j) != p);
            failures += usize::from(reflect(&p.mul_var_pow(j, 1), j) != -&rp.mul_var_pow(j, 1));
            failures += usize::from(reflect(&dunkl_derive(&p, j, &params), j) != -&dunkl_derive(&rp, j, &params));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        failures == 0 && secs < 10.0,
        format!("{checks} exact identities on 200 random polynomials, {failures} nonzero residuals, {secs:.2} s (limit 10 s)"),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let failures = (0..100)
        .filter(|_| {
            let params = random_params(&mut rng);
            let f = random_trig(&mut rng, 6);
            !angular_identity_residual(&f, &params).is_zero()
        })
        .count();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        failures == 0 && secs < 10.0,
        format!("100 random trig polynomials, {failures} nonzero residuals, {secs:.2} s (limit 10 s)"),
    )
}

fn criterion_3() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let mut errors = Vec::new();
    for a in NU_VALUES {
        for b in NU_VALUES {
            let params = nu(a, b);
            for sector in Sector::ALL {
                let parity = sector.epsilon();
                let max = if parity == Parity::Even { Ell::integer(5) } else { Ell::half_odd(4) };
                for ell in Ell::range(parity, max, false) {
                    let l = ell.to_f64();
                    let expected = match parity {
                        Parity::Even => 2.0 * (l * (l + a + b)).sqrt(),
                        Parity::Odd => 2.0 * ((l + a) * (l + b)).sqrt(),
                    };
                    match angular_eigenpair(ell, sector, Branch::Plus, &params) {
                        Ok(pair) => {
                            worst = worst.max(rel(pair.lambda, expected));
                            count += 1;
                        }
                        Err(e) => errors.push(format!("{sector} l={ell} nu=({a},{b}): {e}")),
                    }
                }
            }
        }
    }
    outcome(
        errors.is_empty() && worst <= 1e-12,
        format!("{count} eigenpairs, worst relative lambda error {worst:.2e} (limit 1e-12){}", errors.first().map(|e| format!("; {e}")).unwrap_or_default()),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let scale = OscillatorScale::default();
    let config = DiscretizationConfig::default();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for (a, b) in NU_PAIRS {
        for sector in Sector::ALL {
            let report = validate_sector(sector, &nu(a, b), &scale, &first_two(sector.epsilon()), 2, &config).unwrap();
            for row in &report.rows {
                worst = worst.max(row.deviation);
                count += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        count == 192 && worst <= 1e-5 && secs < 300.0,
        format!("{count} eigenvalues, worst |E_oracle - E_closed|/omega_c = {worst:.2e} (limit 1e-5), {secs:.1} s"),
    )
}

fn criterion_5() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut energy_worst: f64 = 0.0;
    for (a, b) in NU_PAIRS {
        let params = nu(a, b);
        for sector in Sector::ALL {
            let parity = sector.epsilon();
            for ell in first_two(parity) {
                let (lhs, rhs) = radical_identity_check(ell, parity, &params);
                worst = worst.max(rel(lhs, rhs));
                for n in 0..=2 {
                    for spin in Spin::BOTH {
                        let s = SectorState::new(sector, n, ell, spin, Branch::Plus).unwrap();
                        let compact = f64::from(n) + 0.5 + rho(ell, parity, Branch::Plus, &params) - spin.as_f64() * eta(sector, &params);
                        energy_worst = energy_worst.max(rel(compact, energy_sector_form_over_omega(&s, &params)));
                    }
                }
            }
        }
    }
    outcome(
        worst <= 1e-12 && energy_worst <= 1e-12,
        format!("radical identity worst {worst:.2e}, sector-form vs compact energies worst {energy_worst:.2e} (limit 1e-12)"),
    )
}

fn ladders() -> Vec<Ladder> {
    let mut out = Vec::new();
    for (a, b) in NU_PAIRS {
        for sector in Sector::ALL {
            for ell in first_two(sector.epsilon()) {
                out.push(Ladder::for_level(sector, ell, Branch::Plus, &nu(a, b)).unwrap());
            }
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let mut worst: f64 = 0.0;
    for ladder in ladders() {
        for x in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0] {
            // direct sum over the ladder, written out here
            let mut direct = 0.0;
            let mut n = 0u32;
            loop {
                let base = f64::from(n) + 0.5 + ladder.rho;
                let term = (-x * (base - ladder.eta)).exp() + (-x * (base + ladder.eta)).exp();
                direct += term;
                if term < 1e-18 * direct {
                    break;
                }
                n += 1;
            }
            let closed = partition(&ladder.at(x, Mode::Consistent).unwrap());
            worst = worst.max(rel(closed, direct));
        }
    }
    outcome(worst <= 1e-12, format!("worst relative |Z_closed - Z_sum| = {worst:.2e} (limit 1e-12)"))
}

fn criterion_7() -> Outcome {
    let mut identity: f64 = 0.0;
    let mut derivative: f64 = 0.0;
    for ladder in ladders() {
        for k in 0..=100 {
            let x = 0.05 * 1000f64.powf(f64::from(k) / 100.0);
            let i = ladder.at(x, Mode::Consistent).unwrap();
            identity = identity.max((helmholtz(&i) - (internal_energy(&i) - entropy(&i) / x)).abs());
        }
        for x in [0.3, 1.0, 3.0] {
            let h = 1e-4 * x;
            let ln_z = |x: f64| partition(&ladder.at(x, Mode::Consistent).unwrap()).ln();
            let u = |x: f64| internal_energy(&ladder.at(x, Mode::Consistent).unwrap());
            let u_fd = -(ln_z(x + h) - ln_z(x - h)) / (2.0 * h);
            let c_fd = -x * x * (u(x + h) - u(x - h)) / (2.0 * h);
            let i = ladder.at(x, Mode::Consistent).unwrap();
            derivative = derivative.max(rel(internal_energy(&i), u_fd)).max(rel(heat_capacity(&i), c_fd));
        }
    }
    outcome(
        identity <= 1e-10 && derivative <= 1e-6,
        format!("|F - (U - TS)| worst {identity:.2e} (limit 1e-10); U, C vs finite differences worst {derivative:.2e} (limit 1e-6)"),
    )
}

fn criterion_8() -> Outcome {
    let grid = default_grid();
    let mut c_worst: f64 = 0.0;
    let mut monotone = true;
    for ladder in ladders() {
        let c = heat_capacity(&ladder.at(1.0 / 1000.0, Mode::Consistent).unwrap());
        c_worst = c_worst.max((c - 1.0).abs());
        let z = sweep(Quantity::Z, &ladder, Mode::Consistent, &grid).unwrap();
        monotone &= z.values.windows(2).all(|w| w[1] > w[0]);
    }
    let mut aligned = true;
    for ell in [Ell::integer(1), Ell::integer(2), Ell::integer(3)] {
        let base = sweep(Quantity::Z, &Ladder::for_level(Sector::PlusPlus, ell, Branch::Plus, &nu(0.0, 0.0)).unwrap(), Mode::Consistent, &grid).unwrap();
        for v in [-0.4, -0.2, 0.2, 0.4] {
            let ladder = Ladder::for_level(Sector::PlusPlus, ell, Branch::Plus, &nu(v, -v)).unwrap();
            aligned &= sweep(Quantity::Z, &ladder, Mode::Consistent, &grid).unwrap().values == base.values;
        }
    }
    outcome(
        c_worst <= 1e-3 && monotone && aligned,
        format!("|C(tau=1000) - 1| worst {c_worst:.2e} (limit 1e-3); Z increasing: {monotone}; nu1 = -nu2 Z equals nu = 0 pointwise: {aligned}"),
    )
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let mut curves = 0;
    for number in [5, 6] {
        for fc in generate(FigureId::new(number, None).unwrap(), &EllChoice::default(), Mode::Consistent, None).unwrap() {
            curves += 1;
            let peaks = interior_maxima(&fc.curve.values);
            if peaks != 1 {
                bad.push(format!("fig {number}{} {}: {peaks} maxima", fc.panel, fc.spec.label()));
            }
        }
    }
    for number in [7, 8] {
        for fc in generate(FigureId::new(number, None).unwrap(), &EllChoice::default(), Mode::Consistent, None).unwrap() {
            curves += 1;
            if fc.curve.values.windows(2).any(|w| w[1] < w[0]) {
                bad.push(format!("fig {number}{} {}: S decreases", fc.panel, fc.spec.label()));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{curves} C and S curves, {} violations{}", bad.len(), bad.first().map(|b| format!("; {b}")).unwrap_or_default()),
    )
}

fn criterion_10() -> Outcome {
    let ledger = discrepancy_ledger();
    let detected: Vec<_> = ledger.iter().filter(|d| d.detected).map(|d| d.id).collect();
    outcome(
        ledger.len() == 4 && detected.len() == 4,
        format!("{}/4 detected: {}", detected.len(), detected.join(", ")),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("exact Dunkl algebra", criterion_1),
        ("angular operator identity", criterion_2),
        ("angular eigenvalues", criterion_3),
        ("spectrum vs radial oracle", criterion_4),
        ("radical identity", criterion_5),
        ("partition function vs direct sum", criterion_6),
        ("thermodynamic consistency", criterion_7),
        ("limits of Z and C", criterion_8),
        ("figure shapes", criterion_9),
        ("discrepancy ledger", criterion_10),
    ];
    let mut all = true;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        all &= o.pass;
        println!("criterion {:>2} {} {name}: {}", k + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
