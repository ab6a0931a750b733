use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dunkl_pauli::figures::{figure_panels, generate, EllChoice, FigureId};
use dunkl_pauli::params::parse_rational;
use dunkl_pauli::spectrum::{energy_over_omega, eta, rho, SectorState};
use dunkl_pauli::thermo::{log_grid, sweep, Ladder, Mode, Quantity, DEFAULT_STEPS, DEFAULT_T_MAX, DEFAULT_T_MIN};
use dunkl_pauli::verify::{self, VerifyOptions};
use dunkl_pauli::{Branch, Ell, Parity, Sector, Spin, WignerParams};

#[derive(Debug, Parser)]
#[command(name = "dunkl-pauli", version, about = "Dunkl-Pauli spectra, thermodynamics and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy levels E/omega_c of one parity sector as CSV.
    Spectrum(SpectrumArgs),
    /// One thermal quantity along a temperature grid as CSV.
    Thermo(ThermoArgs),
    /// All curves of one figure (or panel) as CSV files plus a manifest.
    Figure(FigureArgs),
    /// Run the verification suites and print the discrepancy ledger.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
struct Deformation {
    /// Wigner parameter nu1 (> -1/2), decimal or p/q.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    nu1: String,
    /// Wigner parameter nu2 (> -1/2), decimal or p/q.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    nu2: String,
}

impl Deformation {
    fn params(&self) -> Result<WignerParams, String> {
        let nu1 = parse_rational(&self.nu1).map_err(|e| format!("--nu1: {e}"))?;
        let nu2 = parse_rational(&self.nu2).map_err(|e| format!("--nu2: {e}"))?;
        WignerParams::new(nu1, nu2).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Args)]
struct Grid {
    /// Lowest dimensionless temperature KT/omega_c.
    #[arg(long, default_value_t = DEFAULT_T_MIN, allow_hyphen_values = true)]
    tmin: f64,
    /// Highest dimensionless temperature KT/omega_c.
    #[arg(long, default_value_t = DEFAULT_T_MAX, allow_hyphen_values = true)]
    tmax: f64,
    /// Number of log-spaced grid points.
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    steps: usize,
}

impl Grid {
    fn points(&self) -> Result<Vec<f64>, String> {
        log_grid(self.tmin, self.tmax, self.steps).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[command(flatten)]
    nu: Deformation,
    /// Parity sector: ++, --, +- or -+.
    #[arg(long, default_value = "++", allow_hyphen_values = true)]
    sector: String,
    /// Largest radial quantum number n.
    #[arg(long, default_value_t = 2)]
    nmax: u32,
    /// Largest l; every sector-valid l up to it is listed.
    #[arg(long, default_value = "2")]
    lmax: String,
    /// A single l instead of the range up to --lmax.
    #[arg(long)]
    ell: Option<String>,
    /// Sign of the angular eigenvalue: plus or minus.
    #[arg(long, default_value = "plus", allow_hyphen_values = true)]
    branch: String,
    /// Only this spin projection (+1 or -1).
    #[arg(long, allow_hyphen_values = true)]
    ms: Option<i8>,
    /// Include the l = 0 constant angular mode of the even sectors.
    #[arg(long)]
    include_zero_mode: bool,
    /// Output file (standard output if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ThermoArgs {
    #[command(flatten)]
    nu: Deformation,
    /// Parity sector: ++, --, +- or -+.
    #[arg(long, default_value = "++", allow_hyphen_values = true)]
    sector: String,
    /// Angular quantum number l (default 1 for even sectors, 1/2 for odd).
    #[arg(long)]
    ell: Option<String>,
    #[arg(long, default_value = "plus", allow_hyphen_values = true)]
    branch: String,
    /// Z, F, U, C or S.
    #[arg(long, default_value = "Z")]
    quantity: String,
    /// consistent or paper-faithful.
    #[arg(long, default_value = "consistent")]
    mode: String,
    #[command(flatten)]
    grid: Grid,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FigureArgs {
    /// Figure number 1-8, optionally with a panel letter (e.g. 2a).
    #[arg(long)]
    figure: String,
    /// l for the panels of matching parity (integer for even, half-odd for odd sectors).
    #[arg(long)]
    ell: Vec<String>,
    #[arg(long, default_value = "consistent")]
    mode: String,
    #[command(flatten)]
    grid: Grid,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Skip the finite-difference oracle comparison.
    #[arg(long)]
    skip_oracle: bool,
    /// Corrupt one entry of the eta table to check that the suite notices.
    #[arg(long, hide = true)]
    inject_eta_flip: bool,
}

/// 17 significant digits.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn parse<T: std::str::FromStr>(flag: &str, value: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|e| format!("--{flag}: {e}"))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to standard output: {e}")),
    }
}

fn cmd_spectrum(args: &SpectrumArgs) -> Result<(), String> {
    let params = args.nu.params()?;
    let sector: Sector = parse("sector", &args.sector)?;
    let branch: Branch = parse("branch", &args.branch)?;
    let parity = sector.epsilon();
    let ells = match &args.ell {
        Some(s) => {
            let ell: Ell = parse("ell", s)?;
            ell.validate(parity, true).map_err(|e| e.to_string())?;
            vec![ell]
        }
        None => {
            let lmax: Ell = parse("lmax", &args.lmax)?;
            Ell::range(parity, lmax, args.include_zero_mode)
        }
    };
    let spins: Vec<Spin> = match args.ms {
        None => Spin::BOTH.to_vec(),
        Some(1) => vec![Spin::Up],
        Some(-1) => vec![Spin::Down],
        Some(other) => return Err(format!("--ms: expected +1 or -1, got {other}")),
    };

    let mut rows = Vec::new();
    for n in 0..=args.nmax {
        for &ell in &ells {
            for &spin in &spins {
                let state = SectorState::new(sector, n, ell, spin, branch).map_err(|e| e.to_string())?;
                rows.push(state);
            }
        }
    }
    rows.sort_by_key(|s| (s.n, s.ell.twice(), s.spin.value()));

    let mut text = String::from("sector,nu1,nu2,n,ell,m_s,branch,lambda,rho,eta,energy_over_omega_c\n");
    for s in rows {
        let _ = writeln!(
            text,
            "{},{},{},{},{},{},{},{},{},{},{}",
            sector,
            num(params.nu1_f64()),
            num(params.nu2_f64()),
            s.n,
            s.ell,
            s.spin.value(),
            branch.label(),
            num(s.lambda(&params)),
            num(rho(s.ell, parity, branch, &params)),
            num(eta(sector, &params)),
            num(energy_over_omega(&s, &params)),
        );
    }
    write_output(args.out.as_deref(), &text)
}

fn default_ell(parity: Parity) -> Ell {
    Ell::minimum(parity)
}

fn curve_csv(comments: &[String], grid: &[f64], values: &[f64]) -> String {
    let mut text = String::new();
    for c in comments {
        let _ = writeln!(text, "# {c}");
    }
    text.push_str("tau,value\n");
    for (t, v) in grid.iter().zip(values) {
        let _ = writeln!(text, "{},{}", num(*t), num(*v));
    }
    text
}

fn cmd_thermo(args: &ThermoArgs) -> Result<(), String> {
    let params = args.nu.params()?;
    let sector: Sector = parse("sector", &args.sector)?;
    let branch: Branch = parse("branch", &args.branch)?;
    let quantity: Quantity = parse("quantity", &args.quantity)?;
    let mode: Mode = parse("mode", &args.mode)?;
    let ell = match &args.ell {
        Some(s) => parse("ell", s)?,
        None => default_ell(sector.epsilon()),
    };
    let ladder = Ladder::for_level(sector, ell, branch, &params).map_err(|e| e.to_string())?;
    let grid = args.grid.points()?;
    let curve = sweep(quantity, &ladder, mode, &grid).map_err(|e| e.to_string())?;
    let comments = vec![
        format!("quantity={quantity} mode={mode}"),
        format!(
            "sector={sector} nu1={} nu2={} ell={ell} branch={} rho={} eta={}",
            params.nu1(),
            params.nu2(),
            branch.label(),
            num(ladder.rho),
            num(ladder.eta)
        ),
    ];
    write_output(args.out.as_deref(), &curve_csv(&comments, &curve.grid, &curve.values))
}

fn cmd_figure(args: &FigureArgs) -> Result<(), String> {
    let id: FigureId = parse("figure", &args.figure)?;
    let mode: Mode = parse("mode", &args.mode)?;
    let mut ells = EllChoice::default();
    for s in &args.ell {
        let ell: Ell = parse("ell", s)?;
        let parity = if ell.is_integer() { Parity::Even } else { Parity::Odd };
        ell.validate(parity, true).map_err(|e| e.to_string())?;
        match parity {
            Parity::Even => ells.even = ell,
            Parity::Odd => ells.odd = ell,
        }
    }
    let grid = args.grid.points()?;
    let curves = generate(id, &ells, mode, Some(&grid)).map_err(|e| e.to_string())?;
    fs::create_dir_all(&args.out).map_err(|e| format!("cannot create {}: {e}", args.out.display()))?;

    let run_config = format!(
        "figure={id} quantity={} mode={mode} ell_even={} ell_odd={} tmin={} tmax={} steps={} branch=+",
        id.quantity(),
        ells.even,
        ells.odd,
        num(args.grid.tmin),
        num(args.grid.tmax),
        args.grid.steps
    );
    let mut manifest = format!("# {run_config}\n");
    for panel in figure_panels(id, &ells) {
        let _ = writeln!(manifest, "# panel {}: {}", panel.letter, panel.caption);
    }
    manifest.push_str("panel,file,sector,nu1,nu2,ell,rho,eta\n");
    for fc in &curves {
        let file = format!("fig{}{}_{}.csv", id.number, fc.panel, fc.spec.stem());
        let comments = vec![
            run_config.clone(),
            format!("panel={} {}", fc.panel, fc.spec.label()),
            format!("rho={} eta={}", num(fc.curve.ladder.rho), num(fc.curve.ladder.eta)),
        ];
        let path = args.out.join(&file);
        fs::write(&path, curve_csv(&comments, &fc.curve.grid, &fc.curve.values))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        let _ = writeln!(
            manifest,
            "{},{},{},{},{},{},{},{}",
            fc.panel,
            file,
            fc.spec.sector,
            fc.spec.nu1,
            fc.spec.nu2,
            fc.spec.ell,
            num(fc.curve.ladder.rho),
            num(fc.curve.ladder.eta)
        );
    }
    let path = args.out.join(format!("fig{id}_manifest.csv"));
    fs::write(&path, manifest).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn cmd_verify(args: &VerifyArgs) -> bool {
    let mut options = VerifyOptions {
        skip_oracle: args.skip_oracle,
        ..VerifyOptions::default()
    };
    if args.inject_eta_flip {
        options.eta = verify::eta_with_flipped_plus_minus;
    }
    let report = verify::run(&options);
    print!("{}", report.render());
    report.passed()
}

fn fail(message: &str) -> ExitCode {
    let line = message.lines().find(|l| !l.trim().is_empty()).unwrap_or(message);
    let line = line.trim().trim_start_matches("error:").trim();
    eprintln!("error: {line}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&e.to_string()),
    };
    let result = match &cli.command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Thermo(args) => cmd_thermo(args),
        Command::Figure(args) => cmd_figure(args),
        Command::Verify(args) => {
            return if cmd_verify(args) { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => fail(&message),
    }
}
