//! Command-line front end.
//!
//! ```text
//! strongfield spectrum --lambda 10 --landau-max 1 --levels 3 --format json
//! strongfield map --n 3 --l 2 --m -2
//! strongfield map --ancestors 3
//! strongfield oracle --lambda 6 --parity even --k 0
//! ```
//!
//! Exit codes: 0 success, 1 usage, 2 regime (field too weak),
//! 3 oracle disagreement.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::correspondence::{
    ground_ancestors, hydrogen_to_strong, strong_to_hydrogen, HydrogenLabel, StrongFieldLabel,
};
use crate::error::Error;
use crate::field::FieldParams;
use crate::format::{json_number, Cell, Document, EnergyUnit, OutputFormat};
use crate::longitudinal::Parity;
use crate::oracle::{self, MAX_ORACLE_LAMBDA};
use crate::spectrum::{assemble_with, validity_check_with, LandauLabel, ValidityThresholds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REGIME: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

/// Lower end of the oracle's lambda range.
pub const MIN_ORACLE_LAMBDA: f64 = 1.0;

#[derive(Debug, Parser)]
#[command(
    name = "strongfield",
    version,
    about = "Hydrogen atom spectrum in a strong magnetic field"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    #[arg(long, global = true, value_enum, default_value_t = EnergyUnit::Hartree)]
    pub units: EnergyUnit,

    /// Root-finding tolerance on nu.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Landau levels with their longitudinal Coulomb series.
    Spectrum(SpectrumArgs),
    /// Zero-field <-> strong-field quantum-number correspondence.
    Map(MapArgs),
    /// Cross-check one longitudinal level against the shooting solver.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// Field in gauss.
    #[arg(long)]
    pub gauss: Option<f64>,
    /// Field in units of H0 = m^2 e^3 c / hbar^3.
    #[arg(long)]
    pub gamma: Option<f64>,
    /// lambda = ln(a / a_H).
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Highest Landau index N included.
    #[arg(long, default_value_t = 0)]
    pub landau_max: u32,
    /// Number of doublets above the singlet in each longitudinal series.
    #[arg(long, default_value_t = 2)]
    pub levels: u32,
    /// Most negative m included (m = m_min..=N for each N).
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub m_min: i32,
    #[arg(long, default_value_t = ValidityThresholds::default().invalid_below)]
    pub lambda_invalid_below: f64,
    #[arg(long, default_value_t = ValidityThresholds::default().marginal_below)]
    pub lambda_marginal_below: f64,
    #[arg(long, default_value_t = ValidityThresholds::default().log_margin)]
    pub log_margin: f64,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub l: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long)]
    pub n_rho: Option<i64>,
    #[arg(long)]
    pub n_z: Option<i64>,
    /// List the zero-field ancestors of the lowest strong-field family.
    #[arg(long)]
    pub ancestors: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long, value_enum)]
    pub parity: ParityArg,
    #[arg(long)]
    pub k: u32,
    /// Override the agreement band (lambda units for even, nu for odd).
    #[arg(long)]
    pub band: Option<f64>,
}

/// Result of one invocation: exit code plus everything to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Self::fail(EXIT_USAGE, format!("error: {}", msg.into()))
    }
}

fn from_error(e: &Error) -> Outcome {
    let code = if e.is_regime() {
        EXIT_REGIME
    } else {
        EXIT_USAGE
    };
    Outcome::fail(code, format!("error: {e}"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    if !(cli.tol > 0.0) {
        return Outcome::usage(format!("--tol must be positive, got {}", cli.tol));
    }
    match &cli.command {
        Command::Spectrum(a) => run_spectrum(&cli, a),
        Command::Map(a) => run_map(&cli, a),
        Command::Oracle(a) => run_oracle(&cli, a),
    }
}

fn field_from_args(a: &SpectrumArgs) -> Result<FieldParams, Outcome> {
    let given: Vec<(&str, f64)> = [
        ("--gauss", a.gauss),
        ("--gamma", a.gamma),
        ("--lambda", a.lambda),
    ]
    .into_iter()
    .filter_map(|(name, v)| v.map(|v| (name, v)))
    .collect();
    match given.as_slice() {
        [] => Err(Outcome::usage(
            "one of --gauss, --gamma, --lambda is required",
        )),
        [(name, value)] => {
            let params = match *name {
                "--gauss" => FieldParams::from_gauss(*value),
                "--gamma" => FieldParams::from_gamma(*value),
                _ => FieldParams::from_lambda(*value),
            };
            params.map_err(|e| match e {
                // a non-positive lambda is a weak field, not a typo
                Error::InvalidInput(_) if *name == "--lambda" && *value <= 0.0 => {
                    from_error(&Error::Regime {
                        lambda: *value,
                        min: a.lambda_invalid_below,
                    })
                }
                e => Outcome::usage(format!("{name}: {e}")),
            })
        }
        [(first, _), (second, _), ..] => Err(Outcome::usage(format!(
            "{first} and {second} cannot be combined; give exactly one field parameter"
        ))),
    }
}

/// Labels with `N <= landau_max` and `m_min <= m <= N`.
pub fn landau_labels(landau_max: u32, m_min: i32) -> Vec<LandauLabel> {
    let mut labels = Vec::new();
    for n in 0..=landau_max {
        for m in m_min..=(n as i32) {
            let n_rho = if m >= 0 { n - m as u32 } else { n };
            labels.push(LandauLabel::new(n_rho, m));
        }
    }
    labels
}

pub fn run_spectrum(cli: &Cli, a: &SpectrumArgs) -> Outcome {
    let params = match field_from_args(a) {
        Ok(p) => p,
        Err(o) => return o,
    };
    if a.m_min > 0 {
        return Outcome::usage(format!("--m-min must be <= 0, got {}", a.m_min));
    }
    let thresholds = ValidityThresholds {
        invalid_below: a.lambda_invalid_below,
        marginal_below: a.lambda_marginal_below,
        log_margin: a.log_margin,
    };
    let labels = landau_labels(a.landau_max, a.m_min);
    let lines = match assemble_with(&params, &labels, a.levels, cli.tol, &thresholds) {
        Ok(lines) => lines,
        Err(e) => return from_error(&e),
    };

    let unit = cli.units;
    let mut rows = Vec::with_capacity(lines.len());
    for line in &lines {
        if !line.is_bound() {
            return Outcome::fail(
                EXIT_USAGE,
                format!("error: internal: line above its Landau level: {line:?}"),
            );
        }
        let verdict = validity_check_with(&params, line.landau.n_landau, &thresholds);
        rows.push(vec![
            Cell::Int(line.landau.n_landau.into()),
            Cell::Int(line.landau.n_rho.into()),
            Cell::Int(line.landau.m.into()),
            Cell::from(line.longitudinal.parity.as_str()),
            Cell::Int(line.longitudinal.k.into()),
            Cell::Num(line.longitudinal.nu),
            Cell::Num(unit.from_hartree(line.longitudinal.energy_hartree)),
            Cell::Num(unit.from_hartree(line.e_landau_hartree)),
            Cell::Num(unit.from_hartree(line.e_total_hartree)),
            Cell::from(verdict.validity.as_str()),
        ]);
    }

    let mut field = Map::new();
    field.insert("gamma".into(), json_number(params.gamma));
    field.insert("lambda".into(), json_number(params.lambda));
    field.insert("a_h_bohr".into(), json_number(params.a_h_bohr));
    let u = unit.suffix();
    let doc = Document {
        preamble: vec![
            ("field".into(), Value::Object(field)),
            ("units".into(), Value::from(u)),
        ],
        rows_key: "lines".into(),
        columns: [
            "N".to_string(),
            "n_rho".into(),
            "m".into(),
            "parity".into(),
            "k".into(),
            "nu".into(),
            format!("e_longitudinal_{u}"),
            format!("e_landau_{u}"),
            format!("e_total_{u}"),
            "validity".into(),
        ]
        .to_vec(),
        json_keys: [
            "n_landau", "n_rho", "m", "parity", "k", "nu", "e_long", "e_landau", "e_total",
            "validity",
        ]
        .map(String::from)
        .to_vec(),
        rows,
    };
    Outcome::ok(doc.render(cli.format))
}

pub fn run_map(cli: &Cli, a: &MapArgs) -> Outcome {
    let hydrogen_side = a.n.is_some() || a.l.is_some();
    let strong_side = a.n_rho.is_some() || a.n_z.is_some();
    let modes = [hydrogen_side, strong_side, a.ancestors.is_some()]
        .iter()
        .filter(|&&b| b)
        .count();
    if modes != 1 {
        return Outcome::usage(
            "give exactly one of (--n --l --m), (--n-rho --n-z --m), or --ancestors COUNT",
        );
    }

    let pairs: Vec<(HydrogenLabel, StrongFieldLabel)> = if let Some(count) = a.ancestors {
        if count == 0 {
            return Outcome::usage("--ancestors must be at least 1");
        }
        if a.m.is_some() {
            return Outcome::usage("--m cannot be combined with --ancestors");
        }
        let mut pairs = Vec::new();
        for h in ground_ancestors(count) {
            match hydrogen_to_strong(&h) {
                Ok(s) => pairs.push((h, s)),
                Err(e) => return from_error(&e),
            }
        }
        pairs
    } else if hydrogen_side {
        let (Some(n), Some(l), Some(m)) = (a.n, a.l, a.m) else {
            return Outcome::usage("--n, --l and --m are all required");
        };
        match HydrogenLabel::new(n, l, m).and_then(|h| Ok((h, hydrogen_to_strong(&h)?))) {
            Ok(p) => vec![p],
            Err(e) => return from_error(&e),
        }
    } else {
        let (Some(n_rho), Some(n_z), Some(m)) = (a.n_rho, a.n_z, a.m) else {
            return Outcome::usage("--n-rho, --n-z and --m are all required");
        };
        match StrongFieldLabel::new(n_rho, n_z, m) {
            Ok(s) => vec![(strong_to_hydrogen(&s), s)],
            Err(e) => return from_error(&e),
        }
    };

    let rows = pairs
        .iter()
        .map(|(h, s)| {
            vec![
                Cell::from(h.to_string()),
                Cell::Int(h.n.into()),
                Cell::Int(h.l.into()),
                Cell::Int(h.m.into()),
                Cell::Int(s.n_rho.into()),
                Cell::Int(s.n_z.into()),
            ]
        })
        .collect();
    let doc = Document {
        preamble: vec![],
        rows_key: "labels".into(),
        columns: ["state", "n", "l", "m", "n_rho", "n_z"]
            .map(String::from)
            .to_vec(),
        json_keys: ["state", "n", "l", "m", "n_rho", "n_z"]
            .map(String::from)
            .to_vec(),
        rows,
    };
    Outcome::ok(doc.render(cli.format))
}

pub fn run_oracle(cli: &Cli, a: &OracleArgs) -> Outcome {
    if !(a.lambda >= MIN_ORACLE_LAMBDA && a.lambda <= MAX_ORACLE_LAMBDA) {
        return Outcome::usage(format!(
            "--lambda {} outside [{MIN_ORACLE_LAMBDA}, {MAX_ORACLE_LAMBDA}]: shooting runs are not \
             supported for stronger fields, where the analytic solver is authoritative",
            a.lambda
        ));
    }
    let parity: Parity = a.parity.into();
    if parity == Parity::Odd && a.k == 0 {
        return Outcome::usage("odd levels start at --k 1");
    }
    let mut cmp = match oracle::compare(a.lambda, parity, a.k) {
        Ok(c) => c,
        Err(e) => return from_error(&e),
    };
    if let Some(band) = a.band {
        if !(band > 0.0) {
            return Outcome::usage(format!("--band must be positive, got {band}"));
        }
        cmp.band = band;
    }

    let row = vec![
        Cell::Num(cmp.lambda),
        Cell::from(parity.as_str()),
        Cell::Int(cmp.k.into()),
        Cell::Num(cmp.nu_analytic),
        Cell::Num(cmp.nu_ode),
        cmp.lambda_effective.map_or(Cell::Empty, Cell::Num),
        Cell::Num(cmp.discrepancy),
        Cell::Num(cmp.band),
        Cell::from(if cmp.agrees() { "yes" } else { "no" }),
    ];
    let keys = [
        "lambda",
        "parity",
        "k",
        "nu_analytic",
        "nu_ode",
        "lambda_effective",
        "discrepancy",
        "band",
        "agrees",
    ]
    .map(String::from)
    .to_vec();
    let doc = Document {
        preamble: vec![],
        rows_key: "comparison".into(),
        columns: keys.clone(),
        json_keys: keys,
        rows: vec![row],
    };
    let mut out = Outcome::ok(doc.render(cli.format));
    if !cmp.agrees() {
        out.code = EXIT_DISAGREE;
        out.stderr = format!(
            "oracle disagreement: discrepancy {} exceeds band {}\n",
            cmp.discrepancy, cmp.band
        );
    }
    out
}
