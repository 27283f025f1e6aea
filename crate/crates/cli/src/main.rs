//! Command line interface: classify single colourings, enumerate colourings
//! by colour count, print colour-count tables, cross-check the classifier
//! against the brute-force patch oracle, and render coloured patches.
//!
//! Exit codes: 0 success, 2 domain error, 3 parse error, 4 internal
//! invariant violation.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use cyclocolour::cyclotomic::CyclotomicRing;
use cyclocolour::ideal::{CosetTable, CycIdeal};
use cyclocolour::render::{ammann_beenker_patch, lattice_patch, render_to_file, Window, PALETTE};
use cyclocolour::report::{format_table, table_groups, ReportJson, TableGroup};
use cyclocolour::splitting::{classify_norm, sweep_norms, DEFAULT_SEED};
use cyclocolour::symmetry::{
    brute_force_verify, classify, colour_stabiliser, is_perfect, IsometryKind, PointIsometry,
};
use cyclocolour::{Element, Error, Int};

#[derive(Parser)]
#[command(
    name = "cyclocolour",
    version,
    about = "Ideal colourings of cyclotomic integer rings: classification, enumeration, rendering"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderMode {
    /// Coloured square/hexagonal lattice patch (n = 3, 4).
    Lattice,
    /// Coloured Ammann–Beenker vertex patch from Z[ξ_8].
    Ab,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the colouring induced by the principal ideal (q).
    Classify {
        /// Ring index n (class number one required).
        #[arg(long)]
        n: u64,
        /// Generator, comma-separated integer coefficients, lowest degree first.
        #[arg(long)]
        q: String,
    },
    /// List and classify all colourings with a given number of colours.
    Enumerate {
        #[arg(long)]
        n: u64,
        /// Number of colours ℓ.
        #[arg(long)]
        colours: u64,
        /// Seed for the randomised equal-degree splitting step.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Colour-count table for all ℓ up to a bound.
    Table {
        #[arg(long)]
        n: u64,
        /// Largest number of colours to list.
        #[arg(long)]
        lmax: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Emit the table as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Compare the classifier against the brute-force patch oracle.
    Verify {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: String,
        /// Coefficient box half-width for the oracle.
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Render a coloured patch as SVG.
    Render {
        #[arg(long, value_enum)]
        mode: RenderMode,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: String,
        #[arg(long)]
        radius: f64,
        /// Output SVG path.
        #[arg(long)]
        out: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Octagonal window circumradius (AB mode); defaults to the
        /// calibrated value √(1+√2/2) ≈ 1.30656.
        #[arg(long)]
        rho: Option<f64>,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::ParseElement(_) => 3,
        Error::Internal(_) => 4,
        _ => 2,
    }
}

fn ring_for(n: u64) -> Result<Arc<CyclotomicRing>, Error> {
    CyclotomicRing::new(n)
}

fn parse_generator(ring: &Arc<CyclotomicRing>, q: &str) -> Result<Element, Error> {
    ring.parse_element::<Int>(q)
}

fn cmd_classify(n: u64, q: &str) -> Result<(), Error> {
    let ring = ring_for(n)?;
    let q = parse_generator(&ring, q)?;
    let ideal = CycIdeal::principal(&q)?;
    let report = ReportJson::from_classification(&classify(&ideal)?);
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serialisable report")
    );
    Ok(())
}

fn cmd_enumerate(n: u64, colours: u64, seed: u64) -> Result<(), Error> {
    let ring = ring_for(n)?;
    let classes = classify_norm::<Int>(&ring, colours, seed)?;
    let reports: Vec<ReportJson> = classes
        .iter()
        .map(ReportJson::from_classification)
        .collect();
    let out = serde_json::json!({
        "n": n,
        "colours": colours,
        "count": reports.len(),
        "reports": reports,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("serialisable list")
    );
    Ok(())
}

fn cmd_table(n: u64, lmax: u64, seed: u64, json: bool) -> Result<(), Error> {
    let ring = ring_for(n)?;
    let rows: Vec<TableGroup> = if lmax < 2 {
        Vec::new()
    } else {
        table_groups(&sweep_norms::<Int>(&ring, lmax, seed)?)
    };
    if json {
        let out = serde_json::json!({ "n": n, "lmax": lmax, "rows": rows });
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serialisable table")
        );
    } else {
        print!("{}", format_table(n, &rows));
    }
    Ok(())
}

fn cmd_verify(n: u64, q: &str, bound: i64) -> Result<(), Error> {
    let ring = ring_for(n)?;
    let q = parse_generator(&ring, q)?;
    let ideal = CycIdeal::principal(&q)?;
    let table = CosetTable::new(ideal.clone())?;
    let perfect = is_perfect(&ideal);
    let stab = colour_stabiliser(&ideal);
    let zero = ring.zero::<Int>();
    let mut all_agree = true;
    for g in PointIsometry::all(&ring) {
        let verdict = brute_force_verify(&table, &g, &zero, bound);
        let classifier_consistent = g.kind == IsometryKind::Rotation || perfect;
        let classifier_preserving = stab.contains(&g);
        // an unconstrained patch (tiny bound or all-distinct colours) cannot
        // refute anything; its accepting verdicts are vacuous, not mismatches
        let consistent_agree = verdict.consistent == classifier_consistent
            || (verdict.consistent && !verdict.constrained);
        let preserving_agree = verdict.colour_preserving == classifier_preserving
            || (verdict.colour_preserving && bound == 0);
        let agree = consistent_agree && preserving_agree;
        all_agree &= agree;
        println!(
            "{:<4} brute: consistent={:<5} preserving={:<5} classifier: consistent={:<5} preserving={:<5} {}",
            g.label(),
            verdict.consistent,
            verdict.colour_preserving,
            classifier_consistent,
            classifier_preserving,
            if !agree {
                "MISMATCH"
            } else if verdict.consistent != classifier_consistent
                || verdict.colour_preserving != classifier_preserving
            {
                "agree (vacuous patch)"
            } else {
                "agree"
            }
        );
    }
    if all_agree {
        println!(
            "PASS: classifier and brute force agree on all {} isometries",
            2 * ring.point_order()
        );
        Ok(())
    } else {
        Err(Error::Internal(
            "classifier disagrees with the brute-force oracle".into(),
        ))
    }
}

fn cmd_render(
    mode: RenderMode,
    n: u64,
    q: &str,
    radius: f64,
    out: &str,
    rho: Option<f64>,
) -> Result<(), Error> {
    let ring = ring_for(n)?;
    let q = parse_generator(&ring, q)?;
    let ideal = CycIdeal::principal(&q)?;
    let table = CosetTable::new(ideal)?;
    let patch = match mode {
        RenderMode::Lattice => lattice_patch(&table, radius)?,
        RenderMode::Ab => {
            let window = match rho {
                Some(r) => Window::new(r),
                None => Window::default(),
            };
            ammann_beenker_patch(&table, &window, radius)?
        }
    };
    render_to_file(&patch, &PALETTE, out)?;
    let summary = serde_json::json!({
        "mode": match mode { RenderMode::Lattice => "lattice", RenderMode::Ab => "ab" },
        "n": n,
        "colours_total": table.len(),
        "colours_used": patch.colours_used().len(),
        "points": patch.points.len(),
        "out": out,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&summary).expect("serialisable summary")
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { n, q } => cmd_classify(n, &q),
        Command::Enumerate { n, colours, seed } => cmd_enumerate(n, colours, seed),
        Command::Table {
            n,
            lmax,
            seed,
            json,
        } => cmd_table(n, lmax, seed, json),
        Command::Verify { n, q, bound } => cmd_verify(n, &q, bound),
        Command::Render {
            mode,
            n,
            q,
            radius,
            out,
            seed: _,
            rho,
        } => cmd_render(mode, n, &q, radius, &out, rho),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
