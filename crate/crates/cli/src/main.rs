//! `picard2` command-line front end.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use picard2::cones;
use picard2::model_file;
use picard2::rational::{self, Pretty};
use picard2::report;
use picard2::rr;
use picard2::verify::Verifier;
use picard2::{DivisorClass, Error, Surface, SurfaceModel};

#[derive(Parser, Debug)]
#[command(
    name = "picard2",
    version,
    about = "Exact cohomology bounds on Picard-number-2 surface models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for `verify` (default: all available).
    #[arg(long, global = true, env = "PICARD2_JOBS", value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a model file and print the validation report.
    Validate {
        model: PathBuf,
        /// Print the model back in canonical form instead of the report.
        #[arg(long)]
        echo: bool,
    },
    /// Print the Mori cone generators and the nef cone inequalities.
    Cone { model: PathBuf },
    /// Classify one class and print its certificate.
    Classify {
        model: PathBuf,
        /// Class coordinates as `a,b`; each entry an integer or `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Print the bound constants.
    Bounds { model: PathBuf },
    /// Certify every integral class in `[-N, N]^2`.
    Verify {
        model: PathBuf,
        #[arg(long = "box", default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
        radius: u32,
        /// Check entailment against this constant instead of c_X.
        #[arg(long = "c-x", allow_hyphen_values = true)]
        c_x: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn input_err(e: impl std::fmt::Display) -> anyhow::Error {
    anyhow::anyhow!("{e}")
}

fn load_model(path: &Path) -> anyhow::Result<SurfaceModel> {
    let text =
        std::fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    model_file::parse_model(&text).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn load_surface(path: &Path) -> anyhow::Result<Surface> {
    let model = load_model(path)?;
    Surface::new(model).map_err(|e| match e {
        Error::InvalidModel(r) => {
            let first = r.first_failure().expect("invalid report has a failure");
            input_err(format!(
                "{}: invalid model: check `{}` failed: {}",
                path.display(),
                first.name,
                first.detail
            ))
        }
        other => input_err(other),
    })
}

fn parse_class(s: &str) -> anyhow::Result<DivisorClass> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(input_err(format!(
            "--class `{s}`: expected two coordinates `a,b`"
        )));
    }
    let x = rational::parse(parts[0]).map_err(input_err)?;
    let y = rational::parse(parts[1]).map_err(input_err)?;
    Ok(DivisorClass::new(x, y))
}

fn csv_rows(rows: &[(&str, String)]) -> String {
    let mut out = String::from("field,value\n");
    for (k, v) in rows {
        let _ = writeln!(out, "{k},{v}");
    }
    out
}

fn pretty_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

/// Rendered output plus whether violations were found.
fn run(cli: &Cli) -> anyhow::Result<(String, bool)> {
    let fmt = cli.format;
    let out = match &cli.command {
        Command::Validate { model, echo } => {
            let m = load_model(model)?;
            let r = m.validate();
            if !r.is_valid() {
                let first = r.first_failure().unwrap();
                return Err(input_err(format!(
                    "{}: invalid model: check `{}` failed: {}\n{r}",
                    model.display(),
                    first.name,
                    first.detail
                )));
            }
            if *echo {
                let mut s = model_file::to_json(&m);
                s.push('\n');
                s
            } else {
                match fmt {
                    Format::Json => pretty_json(&report::validation_json(&r)),
                    Format::Csv => {
                        let mut s = String::from("check,passed\n");
                        for c in &r.checks {
                            let _ = writeln!(s, "{},{}", c.name, c.passed);
                        }
                        s
                    }
                    Format::Text => format!("{r}valid\n"),
                }
            }
        }
        Command::Cone { model } => {
            let s = load_surface(model)?;
            let nef = cones::nef_cone(&s);
            match fmt {
                Format::Json => pretty_json(&json!({
                    "kind": s.kind.to_string(),
                    "mori_generators": [report::class_json(&s.gen1), report::class_json(&s.gen2)],
                    "nef_cone": report::nef_cone_json(&nef),
                })),
                Format::Csv => csv_rows(&[
                    ("gen1", s.gen1.to_string()),
                    ("gen2", s.gen2.to_string()),
                    ("nef_1", nef.inequalities[0].to_string()),
                    ("nef_2", nef.inequalities[1].to_string()),
                ]),
                Format::Text => {
                    let mut t = String::new();
                    let _ = writeln!(t, "kind       {}", s.kind);
                    let _ = writeln!(
                        t,
                        "Mori cone  spanned by gen1 = {} and gen2 = {}",
                        s.gen1, s.gen2
                    );
                    let _ = writeln!(t, "nef cone   D = a1 gen1 + a2 gen2 with");
                    for h in &nef.inequalities {
                        let _ = writeln!(t, "  {h}");
                    }
                    t
                }
            }
        }
        Command::Classify { model, class } => {
            let s = load_surface(model)?;
            let d = parse_class(class)?;
            let cert = Verifier::new(&s).certify(&d).map_err(input_err)?;
            let d2 = s.self_int(&d);
            let kd = s.pair(&s.canonical, &d);
            let l = rr::l_value(&s, &d, None);
            let chi = rr::euler_char(&s, &d);
            match fmt {
                Format::Json => pretty_json(&json!({
                    "class": report::class_json(&d),
                    "position": cones::position(&s, &d).to_string(),
                    "d2": report::q(&d2),
                    "k_dot_d": report::q(&kd),
                    "l_value": report::q(&l),
                    "euler_char": report::q(&chi),
                    "certificate": report::certificate_json(&cert),
                })),
                Format::Csv => csv_rows(&[
                    ("position", cert.position.to_string()),
                    ("d2", d2.to_string()),
                    ("k_dot_d", kd.to_string()),
                    ("l_value", l.to_string()),
                    ("euler_char", chi.to_string()),
                    ("proof_case", cert.proof_case.to_string()),
                    ("entailed", cert.entailed.to_string()),
                ]),
                Format::Text => {
                    let mut t = String::new();
                    let _ = writeln!(t, "d^2        {}", Pretty(&d2));
                    let _ = writeln!(t, "K.d        {}", Pretty(&kd));
                    let _ = writeln!(t, "chi(d)     {}", Pretty(&chi));
                    t.push_str(&report::certificate_text(&cert));
                    t
                }
            }
        }
        Command::Bounds { model } => {
            let s = load_surface(model)?;
            let k = Verifier::new(&s).constants().clone();
            match fmt {
                Format::Json => pretty_json(&report::constants_json(&k)),
                Format::Csv => {
                    let mut rows = vec![
                        ("b_x", k.b_x.to_string()),
                        ("slope_bound", k.slope_bound.to_string()),
                        ("area_bound", k.area_bound.to_string()),
                        ("m_x", k.m_x.to_string()),
                    ];
                    for (i, v) in k.case_values.iter().enumerate() {
                        rows.push((["case_1", "case_2", "case_3", "case_4"][i], v.to_string()));
                    }
                    rows.push(("c_x", k.c_x.to_string()));
                    csv_rows(&rows)
                }
                Format::Text => report::constants_text(&k),
            }
        }
        Command::Verify { model, radius, c_x } => {
            let s = load_surface(model)?;
            let mut v = Verifier::new(&s);
            if let Some(c) = c_x {
                v = v.with_c_x(rational::parse(c).map_err(input_err)?);
            }
            let r = v.verify_box(*radius, cli.jobs.map(|j| j as usize));
            let text = match fmt {
                Format::Json => pretty_json(&report::report_json(&r)),
                Format::Csv => report::report_csv(&r),
                Format::Text => report::report_text(&r),
            };
            return Ok((text, !r.passed()));
        }
    };
    Ok((out, false))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(text, violations)| {
        match &cli.output {
            Some(p) => {
                std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?
            }
            None => print!("{text}"),
        }
        Ok(violations)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("picard2: violations found");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("picard2: {e:#}");
            ExitCode::from(2)
        }
    }
}
