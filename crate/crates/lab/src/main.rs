use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gorenstein_core::apolarity::{ApolarAlgebra, HilbertVector};
use gorenstein_core::combinatorics::{macaulay_check, symmetric, unimodal};
use gorenstein_core::hessians::{hessian_det_at, hessian_vanishing, Vanishing, DEFAULT_GUARD};
use gorenstein_core::jordan::{conjugate, jordan_report, sperner};
use gorenstein_core::perazzo::{normal_form, wlp_predicate, MinimalVariant};
use gorenstein_core::poly::LinearForm;
use gorenstein_core::sampling::rng_from_seed;
use gorenstein_core::{Scalar, Error as CoreError};
use gorenstein_lab::config::{RunConfig, DEFAULT_D_MAX, DEFAULT_D_MIN, DEFAULT_SAMPLES, SEED_ENV};
use gorenstein_lab::formfile::load_form;
use gorenstein_lab::survey::{cached_survey, classification_json, forbidden, survey_json};
use gorenstein_lab::{json, reproduce, LabError, Result};
use serde_json::{json as json_value, Value};

/// Apolar algebras of Perazzo hypersurfaces: Hilbert functions, Hessians,
/// Lefschetz properties and Jordan types in exact arithmetic.
#[derive(Debug, Parser)]
#[command(name = "gorenstein-lab", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Seed of every random choice.
    #[arg(long, global = true, env = SEED_ENV, default_value_t = gorenstein_lab::config::DEFAULT_SEED)]
    seed: u64,
    /// Random integer coefficients are drawn from [-bound, bound].
    #[arg(long, global = true, default_value_t = gorenstein_core::sampling::DEFAULT_BOUND)]
    bound: i64,
    /// Random linear forms tried before giving up on a Lefschetz element.
    #[arg(long, global = true, default_value_t = gorenstein_core::sampling::DEFAULT_TRIALS)]
    trials: usize,
    /// Random threefolds per socle degree in surveys.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_D_MIN)]
    d_min: u32,
    #[arg(long, global = true, default_value_t = DEFAULT_D_MAX)]
    d_max: u32,
    /// Also write the JSON report to this path (`-` for standard output).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert function of the apolar algebra of a form.
    Hf(FormArgs),
    /// Higher Hessian of a form: its value at a point, or whether it vanishes.
    Hessian {
        #[command(flatten)]
        form: FormArgs,
        #[arg(long, default_value_t = 1)]
        order: u32,
        /// Comma-separated coordinates, e.g. `1,0,2,-1,1/2`.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Jordan type of multiplication by a linear form.
    Jordan {
        #[command(flatten)]
        form: FormArgs,
        /// Linear form in the lower-case operator variables, e.g. `u + 2v`.
        #[arg(long)]
        ell: String,
        /// Also compute a pre-Jordan basis.
        #[arg(long)]
        strings: bool,
    },
    /// Histogram of Hilbert functions and WLP verdicts of random threefolds.
    ClassifyPerazzo {
        #[arg(long)]
        d: u32,
    },
    /// One of the three threefold normal forms with minimal Hilbert function.
    NormalForm {
        /// `i`, `ii` or `iii`.
        #[arg(long)]
        variant: String,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Combinatorial tests of a candidate Hilbert function.
    HfCheck {
        /// Comma-separated, e.g. `1,5,6,8,6,5,1`.
        #[arg(long)]
        vector: String,
    },
    /// Surveys random threefolds: Hilbert functions, WLP, Jordan types, invariants.
    Survey {
        /// A single socle degree; otherwise the configured degree range.
        #[arg(long)]
        d: Option<u32>,
    },
    /// Recomputes every published number and compares it with the expected value.
    Reproduce {
        /// Restrict to these check ids (repeatable).
        #[arg(long)]
        only: Vec<String>,
    },
}

#[derive(Debug, Args)]
struct FormArgs {
    /// Form file in the polynomial grammar.
    #[arg(long)]
    form: PathBuf,
    /// Form variables, overriding any `# vars:` line (default X,Y,Z,U,V).
    #[arg(long)]
    vars: Option<String>,
}

impl Global {
    fn config(&self) -> Result<RunConfig> {
        let cfg = RunConfig {
            seed: self.seed,
            bound: self.bound,
            trials: self.trials,
            samples: self.samples,
            d_min: self.d_min,
            d_max: self.d_max,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn parse_scalar(text: &str) -> Result<Scalar> {
    text.trim()
        .parse()
        .map_err(|_| LabError::Usage(format!("`{text}` is not a rational number")))
}

fn emit(global: &Global, value: &Value) -> Result<()> {
    match &global.json {
        None => Ok(()),
        Some(path) if path.as_os_str() == "-" => {
            print!("{}", json::render(value));
            Ok(())
        }
        Some(path) => std::fs::write(path, json::render(value)).map_err(|source| LabError::Io {
            path: path.display().to_string(),
            source,
        }),
    }
}

/// Exit status of a successful run: 0, or 1 when a check failed.
fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    let cfg = g.config()?;
    match &cli.command {
        Command::Hf(args) => {
            let f = load_form(&args.form, args.vars.as_deref())?;
            let alg = ApolarAlgebra::new(&f)?;
            println!("{}", alg.hilbert());
            emit(g, &json::algebra(&alg))?;
        }
        Command::Hessian { form, order, at } => {
            let f = load_form(&form.form, form.vars.as_deref())?;
            let report = match at {
                Some(point) => {
                    let point: Vec<Scalar> = point.split(',').map(parse_scalar).collect::<Result<_>>()?;
                    let value = hessian_det_at(&f, *order, &point)?;
                    println!("{value}");
                    json_value!({ "order": order, "at": point.iter().map(json::scalar).collect::<Vec<_>>(), "value": json::scalar(&value) })
                }
                None => {
                    let mut rng = rng_from_seed(cfg.seed);
                    let verdict = hessian_vanishing(&f, *order, DEFAULT_GUARD, &mut rng, cfg.bound)?;
                    let (label, points) = match &verdict {
                        Vanishing::Zero => ("zero", Vec::new()),
                        Vanishing::NonZero => ("nonzero", Vec::new()),
                        Vanishing::ProbablyZero { points } => ("probably zero", points.clone()),
                    };
                    println!("{label}");
                    let points: Vec<Vec<Value>> =
                        points.iter().map(|p| p.iter().map(json::scalar).collect()).collect();
                    json_value!({ "order": order, "vanishing": label, "points": points })
                }
            };
            emit(g, &report)?;
        }
        Command::Jordan { form, ell, strings } => {
            let f = load_form(&form.form, form.vars.as_deref())?;
            let l = LinearForm::parse(ell, f.context())?;
            let report = jordan_report(&f, &l, *strings)?;
            println!("{}", report.partition);
            emit(g, &json::jordan(&report))?;
        }
        Command::ClassifyPerazzo { d } => {
            check_degree(*d)?;
            let records = cached_survey(*d, &cfg)?;
            let value = classification_json(*d, &cfg, &records);
            print_histogram(&value);
            emit(g, &value)?;
        }
        Command::NormalForm { variant, d, lambda } => {
            let variant: MinimalVariant = variant.parse()?;
            let pf = normal_form(variant, *d, &parse_scalar(lambda)?)?;
            let h = pf.hilbert()?;
            println!("{}", pf.form());
            println!("{h}");
            emit(
                g,
                &json_value!({ "variant": variant.to_string(), "d": d, "form": pf.form().to_string(), "hilbert_function": json::hilbert(&h) }),
            )?;
        }
        Command::HfCheck { vector } => {
            let h: HilbertVector = vector
                .parse()
                .map_err(|e: CoreError| LabError::Usage(e.to_string()))?;
            let v = h.as_slice();
            let d = h.socle_degree() as u32;
            let value = json_value!({
                "hilbert_function": v,
                "symmetric": symmetric(v),
                "unimodal": unimodal(v),
                "macaulay": macaulay_check(v),
                "sperner": sperner(v),
                "conjugate": json::partition(&conjugate(v)),
                "threefold_wlp_predicate": wlp_predicate(v, d),
                "known_impossible": forbidden(d).iter().any(|f| f.as_slice() == v),
            });
            for key in ["symmetric", "unimodal", "macaulay", "threefold_wlp_predicate", "known_impossible"] {
                println!("{key}: {}", value[key]);
            }
            println!("conjugate: {}", conjugate(v));
            emit(g, &value)?;
        }
        Command::Survey { d } => {
            let degrees: Vec<u32> = match d {
                Some(d) => {
                    check_degree(*d)?;
                    vec![*d]
                }
                None => (cfg.d_min..=cfg.d_max).collect(),
            };
            let mut out = Vec::new();
            for d in degrees {
                let records = cached_survey(d, &cfg)?;
                let value = survey_json(d, &cfg, &records);
                print_histogram(&value);
                out.push(value);
            }
            emit(g, &Value::Array(out))?;
        }
        Command::Reproduce { only } => {
            let report = reproduce::run(&cfg, only)?;
            for c in &report.checks {
                println!(
                    "[{}] {} ({:.1} s): {}",
                    c.status,
                    c.id,
                    c.runtime.as_secs_f64(),
                    c.computed
                );
                if !c.passed() {
                    println!("       expected: {}", c.expected);
                }
            }
            emit(g, &report.to_json())?;
            return Ok(u8::from(!report.all_passed()));
        }
    }
    Ok(0)
}

fn check_degree(d: u32) -> Result<()> {
    if d < 5 {
        return Err(LabError::Usage(format!("threefold surveys need d >= 5 (got {d})")));
    }
    Ok(())
}

fn print_histogram(value: &Value) {
    println!("d = {}: {} samples", value["d"], value["samples"]);
    if let Some(hist) = value["histogram"].as_object() {
        for (hf, entry) in hist {
            println!(
                "  ({hf})  count {}  with WLP {}  predicate {}",
                entry["count"], entry["wlp"], entry["wlp_predicate"]
            );
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(code)
}
