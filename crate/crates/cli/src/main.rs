use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use oddcycles::doc::{system_doc, SystemDoc, SystemKind};
use oddcycles::export::{tour_doc, tour_dot, tour_of, tour_svg, tour_text};
use oddcycles::format::{flatten, render_bfile, render_csv, render_text};
use oddcycles::seq::{terms, SequenceId};
use oddcycles::verify::{run, Suite};
use oddcycles::{Error, Result};
use oddcycles_core::algebra::{chebyshev_r, minimal_poly_c, mpr2, p_star, PolyStyle};
use oddcycles_core::equivalence::{coach_to_mds, mds_to_coach, mds_to_sbb, sbb_to_mds};
use oddcycles_core::schick::{sbb_signed_system_with, SeedSignRule};
use oddcycles_core::{Coach, MdsCycle, Modulus, OddModulus, SbbCycle};
use serde_json::json;

#[derive(Parser)]
#[command(name = "oddcycles", version, about = "Doubling cycles of odd moduli")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
    Dot,
    Svg,
    Bfile,
}

#[derive(Args)]
struct SystemArgs {
    /// Odd modulus, at least 3.
    #[arg(long)]
    b: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignRule {
    Literal,
    Closing,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    #[value(name = "R")]
    R,
    #[value(name = "C")]
    C,
    Mpr2,
    Pstar,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertTarget {
    Coach,
    Sbb,
    Mds,
}

#[derive(Subcommand)]
enum Command {
    /// The coach system.
    Coach(SystemArgs),
    /// Unsigned Schick cycles.
    Sbb(SystemArgs),
    /// Signed Schick cycles.
    SbbSigned {
        #[command(flatten)]
        args: SystemArgs,
        /// How seed signs are chosen.
        #[arg(long, value_enum, default_value = "literal")]
        rule: SignRule,
    },
    /// Modified modular doubling cycles.
    Mds(SystemArgs),
    /// Signed cosine cycles of the x^2 - 2 iteration.
    Icos(SystemArgs),
    /// Euler tour of one Schick cycle on the 2b-gon.
    Tour {
        #[arg(long)]
        b: u64,
        /// 1-based cycle index.
        #[arg(long, default_value_t = 1)]
        cycle: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Integer sequences by name or A-number.
    Seq {
        id: SequenceId,
        #[arg(long, default_value_t = 40)]
        count: usize,
        #[arg(long, value_enum, default_value = "bfile")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Invariant sweeps and golden-data checks.
    Verify {
        #[arg(long, default_value_t = 201)]
        max_b: u64,
        /// Suites to run; all when omitted.
        #[arg(long, value_enum)]
        suite: Vec<Suite>,
    },
    /// Polynomials R(n), C(n), MPR2(n) and P*(b).
    Poly {
        kind: PolyKind,
        #[arg(long, alias = "b")]
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Use ASCII operators and `^` exponents.
        #[arg(long)]
        compact: bool,
    },
    /// Converts a JSON system file (coach, sbb or mds) into another system.
    Convert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        to: ConvertTarget,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

enum Outcome {
    Done,
    VerificationFailed,
}

fn odd(b: u64) -> Result<OddModulus> {
    Ok(OddModulus::new(b)?)
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn unsupported(format: Format, what: &str) -> Error {
    let name = format
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    Error::Usage(format!("format '{name}' is not available for {what}"))
}

fn render_system(doc: &SystemDoc, format: Format) -> Result<String> {
    match format {
        Format::Json => doc.to_json(),
        Format::Csv => render_csv(doc),
        Format::Text => Ok(render_text(doc)),
        Format::Bfile => Ok(render_bfile(&flatten(doc))),
        Format::Dot | Format::Svg => Err(unsupported(format, "cycle systems")),
    }
}

fn system_command(kind: SystemKind, args: &SystemArgs) -> Result<Outcome> {
    let doc = system_doc(kind, odd(args.b)?);
    emit(&render_system(&doc, args.format)?, &args.output)?;
    Ok(Outcome::Done)
}

fn signed_command(args: &SystemArgs, rule: SignRule) -> Result<Outcome> {
    let b = odd(args.b)?;
    let mut doc = system_doc(SystemKind::SbbSigned, b);
    if let SignRule::Closing = rule {
        doc.cycles = sbb_signed_system_with(b, SeedSignRule::Closing)
            .into_iter()
            .map(|c| c.elements)
            .collect();
    }
    emit(&render_system(&doc, args.format)?, &args.output)?;
    Ok(Outcome::Done)
}

fn tour_command(b: u64, index: usize, format: Format, output: &Option<PathBuf>) -> Result<Outcome> {
    let tour = tour_of(odd(b)?, index)?;
    let doc = tour_doc(&tour, index);
    let text = match format {
        Format::Text => tour_text(&doc),
        Format::Json => serde_json::to_string_pretty(&doc)? + "\n",
        Format::Dot => tour_dot(&tour, index),
        Format::Svg => tour_svg(&tour, index),
        Format::Bfile => render_bfile(
            &doc.labels
                .iter()
                .enumerate()
                .map(|(i, &v)| (i as u64 + 1, v as i64))
                .collect::<Vec<_>>(),
        ),
        Format::Csv => return Err(unsupported(format, "tours")),
    };
    emit(&text, output)?;
    if output.is_some() || matches!(format, Format::Dot | Format::Svg | Format::Bfile) {
        eprintln!("L={} N={} m={}", doc.length, doc.nodes, doc.blocks);
    }
    Ok(Outcome::Done)
}

fn seq_command(
    id: SequenceId,
    count: usize,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<Outcome> {
    let t = terms(id, count);
    let text = match format {
        Format::Bfile => render_bfile(&t),
        Format::Text => {
            let values: Vec<String> = t.iter().map(|(_, v)| v.to_string()).collect();
            values.join(", ") + "\n"
        }
        Format::Json => {
            let value = json!({
                "id": id.name(),
                "alias": id.alias(),
                "offset": t.first().map_or(1, |&(n, _)| n),
                "terms": t.iter().map(|&(_, v)| v).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&value)? + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "value"])?;
            for (n, v) in &t {
                w.write_record([n.to_string(), v.to_string()])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("UTF-8")
        }
        Format::Dot | Format::Svg => return Err(unsupported(format, "sequences")),
    };
    emit(&text, output)?;
    Ok(Outcome::Done)
}

fn verify_command(max_b: u64, suites: &[Suite]) -> Result<Outcome> {
    let selected = if suites.is_empty() {
        &Suite::ALL[..]
    } else {
        suites
    };
    let mut failed = false;
    let (mut checks, mut failures) = (0, 0);
    for &suite in selected {
        let start = Instant::now();
        let report = run(suite, max_b);
        println!("{report} {:>9.3} s", start.elapsed().as_secs_f64());
        for m in &report.messages {
            println!("    {m}");
        }
        checks += report.checks;
        failures += report.failures;
        failed |= !report.passed();
    }
    println!("total: {checks} checks, {failures} failures");
    Ok(if failed {
        Outcome::VerificationFailed
    } else {
        Outcome::Done
    })
}

fn poly_command(kind: PolyKind, n: u64, format: Format, compact: bool) -> Result<Outcome> {
    let style = if compact {
        PolyStyle::Compact
    } else {
        PolyStyle::Pretty
    };
    let (text, coefficients): (String, serde_json::Value) = match kind {
        PolyKind::Pstar => {
            let p = p_star(odd(n)?);
            let coeffs: Vec<Vec<String>> = p
                .coeffs
                .iter()
                .map(|c| c.coeffs.iter().map(|x| x.to_string()).collect())
                .collect();
            (p.render(style), json!(coeffs))
        }
        _ => {
            let m = Modulus::new(n)?;
            let p = match kind {
                PolyKind::R => chebyshev_r(n as usize),
                PolyKind::C => minimal_poly_c(m),
                _ => mpr2(m),
            };
            let coeffs: Vec<String> = p.coeffs().iter().map(|x| x.to_string()).collect();
            (p.render(style), json!(coeffs))
        }
    };
    match format {
        Format::Text => println!("{text}"),
        Format::Json => {
            let kind_name = kind.to_possible_value().map(|v| v.get_name().to_string());
            let value =
                json!({ "kind": kind_name, "n": n, "text": text, "coefficients": coefficients });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        other => return Err(unsupported(other, "polynomials")),
    }
    Ok(Outcome::Done)
}

fn convert_command(
    input: &PathBuf,
    to: ConvertTarget,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<Outcome> {
    let doc = SystemDoc::from_json(&fs::read_to_string(input)?)?;
    doc.validate()?;
    let b = odd(doc.b)?;
    let as_u64 = |c: &Vec<i64>| c.iter().map(|&x| x as u64).collect::<Vec<u64>>();
    let mds: Vec<MdsCycle> = match doc.kind {
        SystemKind::Mds => doc
            .cycles
            .iter()
            .map(|c| MdsCycle::from_elements(b, as_u64(c)))
            .collect::<std::result::Result<_, _>>()?,
        SystemKind::Coach => {
            let ks = doc.meta.exponents.clone().unwrap_or_default();
            doc.cycles
                .iter()
                .zip(ks)
                .map(|(a, k)| coach_to_mds(&Coach::from_rows(b, as_u64(a), k)?))
                .collect::<std::result::Result<_, _>>()?
        }
        SystemKind::Sbb => doc
            .cycles
            .iter()
            .map(|c| sbb_to_mds(&SbbCycle::from_elements(b, as_u64(c))?))
            .collect::<std::result::Result<_, _>>()?,
        SystemKind::SbbSigned | SystemKind::Icos => {
            return Err(Error::Usage(
                "convert reads coach, sbb or mds systems".into(),
            ))
        }
    };
    let to_i64 = |v: &[u64]| v.iter().map(|&x| x as i64).collect::<Vec<i64>>();
    let mut out = SystemDoc {
        kind: SystemKind::Mds,
        b: doc.b,
        count: mds.len(),
        period: mds[0].len(),
        cycles: mds.iter().map(|c| to_i64(&c.elements)).collect(),
        meta: doc.meta.clone(),
    };
    out.meta.exponents = None;
    match to {
        ConvertTarget::Mds => {}
        ConvertTarget::Sbb => {
            out.kind = SystemKind::Sbb;
            out.cycles = mds
                .iter()
                .map(|c| mds_to_sbb(c).map(|q| to_i64(&q.elements)))
                .collect::<std::result::Result<_, _>>()?;
        }
        ConvertTarget::Coach => {
            let coaches: Vec<Coach> = mds
                .iter()
                .map(mds_to_coach)
                .collect::<std::result::Result<_, _>>()?;
            out.kind = SystemKind::Coach;
            out.cycles = coaches.iter().map(|c| to_i64(&c.a)).collect();
            out.meta.exponents = Some(coaches.iter().map(|c| c.k.clone()).collect());
        }
    }
    emit(&render_system(&out, format)?, output)?;
    Ok(Outcome::Done)
}

fn execute(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Coach(args) => system_command(SystemKind::Coach, &args),
        Command::Sbb(args) => system_command(SystemKind::Sbb, &args),
        Command::SbbSigned { args, rule } => signed_command(&args, rule),
        Command::Mds(args) => system_command(SystemKind::Mds, &args),
        Command::Icos(args) => system_command(SystemKind::Icos, &args),
        Command::Tour {
            b,
            cycle,
            format,
            output,
        } => tour_command(b, cycle, format, &output),
        Command::Seq {
            id,
            count,
            format,
            output,
        } => seq_command(id, count, format, &output),
        Command::Verify { max_b, suite } => verify_command(max_b, &suite),
        Command::Poly {
            kind,
            n,
            format,
            compact,
        } => poly_command(kind, n, format, compact),
        Command::Convert {
            input,
            to,
            format,
            output,
        } => convert_command(&input, to, format, &output),
    }
}

fn usage_error(kind: &str, message: &str) -> ExitCode {
    eprintln!("{}", json!({ "error": kind, "message": message.trim() }));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return usage_error("usage", &e.to_string()),
    };
    match execute(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(Error::Io(e)) => usage_error("io", &e.to_string()),
        Err(e) => usage_error("invalid-input", &e.to_string()),
    }
}
