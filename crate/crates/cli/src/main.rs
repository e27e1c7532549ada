//! `flagcode` command-line tool: build the orbit flag codes, verify their
//! claimed properties, and inspect distances of stored codes and flags.
//!
//! Exit codes: 0 when every claim passes, 1 when a claim fails, 2 for
//! invalid input, 3 when a resource budget is exhausted or an internal
//! consistency check trips.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagcode::construct::{verify_all, verify_code};
use flagcode::{ConstructionParams, Error, Family, Flag, FlagCode, GeneratorSet, Poly, TypeVector, VerificationReport};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "flagcode",
    version,
    about = "Construct and verify flag codes over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a flag code of the construction and write it out.
    Construct(CodeArgs),
    /// Run the claim suite for one parameter set, a sweep, or a code file.
    Verify(CodeArgs),
    /// Flag distance between two stored flags of the same type.
    Distance { a: PathBuf, b: PathBuf },
    /// Histogram of pairwise flag distances as `distance,count`.
    Spectrum(CodeArgs),
    /// Size, distance, deficit and per-component statistics of a code.
    Report(CodeArgs),
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CodeArgs {
    /// Field order; a comma list with --sweep.
    #[arg(long, default_value = "2")]
    q: String,
    #[arg(long)]
    k: Option<String>,
    #[arg(long, default_value = "0")]
    h: String,
    #[arg(long)]
    s: Option<String>,
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    /// Type vector such as `1,2,5,6`.
    #[arg(long = "type")]
    ty: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Treat --q, --k, --h and --s as comma lists and run every combination.
    #[arg(long)]
    sweep: bool,
    #[arg(long = "order-cap")]
    order_cap: Option<u64>,
    #[arg(long = "factor-cap")]
    factor_cap: Option<u64>,
    /// Primitive polynomial for the block of matching degree, e.g.
    /// `x^3+x^2+1 over GF(2)`. Repeatable.
    #[arg(long)]
    poly: Vec<String>,
    /// Read the code from a file instead of constructing it.
    #[arg(long)]
    code: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_budget() || matches!(e, Error::TheoremViolated(_)) {
            3
        } else {
            2
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(a) => cmd_construct(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Distance { a, b } => cmd_distance(&a, &b),
        Command::Spectrum(a) => cmd_spectrum(&a),
        Command::Report(a) => cmd_report(&a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_list(name: &str, text: &str, sweep: bool) -> Result<Vec<u64>, Failure> {
    let values = text
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<u64>()
                .map_err(|_| invalid(format!("--{name}: `{v}` is not a number")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != 1 && !sweep {
        return Err(invalid(format!("--{name} takes one value unless --sweep is given")));
    }
    Ok(values)
}

impl CodeArgs {
    fn params_list(&self) -> Result<Vec<(u64, usize, usize, usize)>, Failure> {
        let k = self.k.as_deref().ok_or_else(|| invalid("--k is required"))?;
        let s = self.s.as_deref().ok_or_else(|| invalid("--s is required"))?;
        let qs = parse_list("q", &self.q, self.sweep)?;
        let ks = parse_list("k", k, self.sweep)?;
        let hs = parse_list("h", &self.h, self.sweep)?;
        let ss = parse_list("s", s, self.sweep)?;
        let mut out = Vec::new();
        for &q in &qs {
            for &k in &ks {
                for &h in &hs {
                    for &s in &ss {
                        out.push((q, k as usize, h as usize, s as usize));
                    }
                }
            }
        }
        Ok(out)
    }

    fn params(&self, (q, k, h, s): (u64, usize, usize, usize)) -> Result<ConstructionParams, Error> {
        let field = flagcode::FieldSpec::from_order(q)?;
        let mut params = ConstructionParams::with_caps(
            &field,
            k,
            h,
            s,
            self.order_cap.unwrap_or(flagcode::matgf::DEFAULT_ORDER_CAP),
            self.factor_cap.unwrap_or(flagcode::field::DEFAULT_FACTOR_CAP),
        )?;
        for text in &self.poly {
            params = params.with_poly(Poly::parse(text)?)?;
        }
        Ok(params)
    }

    fn single_params(&self) -> Result<ConstructionParams, Failure> {
        let list = self.params_list()?;
        if list.len() != 1 {
            return Err(invalid("this command takes a single parameter set"));
        }
        Ok(self.params(list[0])?)
    }

    fn custom_type(&self, n: usize) -> Result<Option<TypeVector>, Error> {
        self.ty.as_deref().map(|t| TypeVector::parse(n, t)).transpose()
    }

    /// The code named by the arguments: loaded from --code, or constructed.
    fn load_or_build(&self) -> Result<FlagCode, Failure> {
        if let Some(path) = &self.code {
            return Ok(FlagCode::from_text(&read(path)?)?);
        }
        let params = self.single_params()?;
        let family = self.family.unwrap_or(Family::Full);
        let custom = self.custom_type(params.n())?;
        let set = GeneratorSet::build(&params)?;
        Ok(family.build(&set, custom.as_ref())?)
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => fs::write(path, text)?,
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                stdout.flush()?;
            }
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn cmd_construct(args: &CodeArgs) -> CmdResult {
    let code = args.load_or_build()?;
    let body = match args.format.unwrap_or_default() {
        Format::Text => code.to_text(),
        Format::Json => {
            let flags: Vec<_> = code
                .flags()
                .iter()
                .map(|f| match f.generator() {
                    Some(g) => json!({ "generator": matrix_rows(g) }),
                    None => {
                        json!({ "components": f.parts().iter().map(|p| matrix_rows(p.canon())).collect::<Vec<_>>() })
                    }
                })
                .collect();
            let value = json!({
                "n": code.ty().n(),
                "q": code.field().q(),
                "type": code.ty().to_string(),
                "size": code.len(),
                "flags": flags,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
        }
        Format::Csv => return Err(invalid("construct supports text and json output")),
    };
    args.emit(&body)?;
    let summary = format!("{} flags, n = {}, type ({})", code.len(), code.ty().n(), code.ty());
    if args.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn matrix_rows(m: &flagcode::Matrix) -> Vec<Vec<u32>> {
    m.rows().map(|r| r.to_vec()).collect()
}

fn cmd_verify(args: &CodeArgs) -> CmdResult {
    let format = args.format.unwrap_or_default();
    if let Some(path) = &args.code {
        let params = args.single_params()?;
        let family = args.family.ok_or_else(|| invalid("--code needs --family"))?;
        let custom = args.custom_type(params.n())?;
        let code = FlagCode::from_text(&read(path)?)?;
        let report = verify_code(&params, family, custom.as_ref(), &code)?;
        args.emit(&render_reports(std::slice::from_ref(&report), format)?)?;
        return Ok(if report.all_pass() { 0 } else { 1 });
    }

    let list = args.params_list()?;
    let mut reports = Vec::new();
    let mut worst = 0u8;
    for tuple in list {
        let run = || -> Result<VerificationReport, Error> {
            let params = args.params(tuple)?;
            match args.family {
                Some(family) => {
                    let custom = args.custom_type(params.n())?;
                    let set = GeneratorSet::build(&params)?;
                    verify_code(&params, family, custom.as_ref(), &family.build(&set, custom.as_ref())?)
                }
                None => verify_all(&params),
            }
        };
        match run() {
            Ok(report) => {
                if !report.all_pass() {
                    worst = worst.max(1);
                }
                reports.push(report);
            }
            Err(e) if args.sweep => {
                let (q, k, h, s) = tuple;
                let f = Failure::from(e);
                eprintln!("q={q} k={k} h={h} s={s}: error: {}", f.message);
                worst = worst.max(f.code);
            }
            Err(e) => return Err(e.into()),
        }
    }
    args.emit(&render_reports(&reports, format)?)?;
    Ok(worst)
}

fn render_reports(reports: &[VerificationReport], format: Format) -> Result<String, Failure> {
    let many = reports.len() != 1;
    Ok(match format {
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                if many {
                    let p = &r.params;
                    s.push_str(&format!("# q={} k={} h={} s={} n={}\n", p.q, p.k, p.h, p.s, p.n));
                }
                s.push_str(&r.to_text());
                s.push_str(&format!(
                    "# {} claims, {} passed, {} failed\n",
                    r.totals.claims, r.totals.passed, r.totals.failed
                ));
            }
            s
        }
        Format::Json => {
            let value = if many {
                serde_json::to_value(reports)
            } else {
                serde_json::to_value(&reports[0])
            };
            format!(
                "{}\n",
                serde_json::to_string_pretty(&value.expect("serializable")).expect("serializable")
            )
        }
        Format::Csv => {
            let mut s = String::from("q,k,h,s,id,expected,computed,pass\n");
            for r in reports {
                let p = &r.params;
                for c in &r.claims {
                    s.push_str(&format!(
                        "{},{},{},{},{},{},{},{}\n",
                        p.q, p.k, p.h, p.s, c.id, c.expected, c.computed, c.pass
                    ));
                }
            }
            s
        }
    })
}

fn cmd_distance(a: &Path, b: &Path) -> CmdResult {
    let fa = Flag::from_text(&read(a)?)?;
    let fb = Flag::from_text(&read(b)?)?;
    if fa.ty() != fb.ty() {
        return Err(invalid(format!("type mismatch: ({}) vs ({})", fa.ty(), fb.ty())));
    }
    println!("{}", fa.distance(&fb)?);
    Ok(0)
}

fn cmd_spectrum(args: &CodeArgs) -> CmdResult {
    let code = args.load_or_build()?;
    let spectrum = code.spectrum();
    let body = match args.format.unwrap_or(Format::Csv) {
        Format::Json => {
            let map: serde_json::Map<_, _> = spectrum.iter().map(|(d, c)| (d.to_string(), json!(c))).collect();
            format!("{}\n", serde_json::Value::Object(map))
        }
        _ => {
            let mut s = String::from("distance,count\n");
            for (d, c) in &spectrum {
                s.push_str(&format!("{d},{c}\n"));
            }
            s
        }
    };
    args.emit(&body)?;
    Ok(0)
}

fn cmd_report(args: &CodeArgs) -> CmdResult {
    let code = args.load_or_build()?;
    let ty = code.ty();
    let components: Vec<_> = ty
        .dims()
        .iter()
        .enumerate()
        .map(|(i, &t)| -> Result<_, Error> {
            Ok(json!({
                "dim": t,
                "size": code.projected_code(i + 1)?.len(),
                "min_distance": code.projected_min_distance(i + 1)?,
            }))
        })
        .collect::<Result<_, _>>()?;
    let (min, label, deficit) = if code.len() >= 2 {
        let c = code.classify()?;
        (Some(c.min_distance), Some(c.label.to_string()), Some(c.deficit))
    } else {
        (None, None, None)
    };
    let value = json!({
        "n": ty.n(),
        "q": code.field().q(),
        "type": ty.to_string(),
        "size": code.len(),
        "max_distance": ty.max_distance(),
        "min_distance": min,
        "deficit": deficit,
        "label": label,
        "cardinality_consistent": code.is_cardinality_consistent(),
        "components": components,
    });
    let body = match args.format.unwrap_or_default() {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable")),
        Format::Csv => {
            let mut s = String::from("dim,size,min_distance\n");
            for c in value["components"].as_array().expect("array") {
                s.push_str(&format!("{},{},{}\n", c["dim"], c["size"], c["min_distance"]));
            }
            s
        }
        Format::Text => {
            let mut s = format!("type ({}) on GF({})^{}\n", ty, code.field().q(), ty.n());
            s.push_str(&format!("size {}\n", code.len()));
            s.push_str(&format!("max distance {}\n", ty.max_distance()));
            if let (Some(d), Some(l), Some(e)) = (min, label, deficit) {
                s.push_str(&format!("min distance {d} (deficit {e}, {l})\n"));
            }
            s.push_str(&format!(
                "cardinality-consistent {}\n",
                code.is_cardinality_consistent()
            ));
            for c in value["components"].as_array().expect("array") {
                s.push_str(&format!(
                    "dim {} size {} min_distance {}\n",
                    c["dim"], c["size"], c["min_distance"]
                ));
            }
            s
        }
    };
    args.emit(&body)?;
    Ok(0)
}
