//! Command-line front end for the orbits library.
//!
//! Subcommands: `list` (orbit labels of an algebra), `compare` (order data
//! for one ordered pair), `diagram` (Hasse diagram of either order),
//! `witness` (build and verify one explicit matrix witness) and
//! `verify-suite` (the deterministic self-check suite).
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! errors (bad flags, invalid algebra or partition, unknown names). All
//! results go to standard output; diagnostics go to standard error. Output
//! for identical invocations is byte-identical.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orbits::{access_report, hasse_diagram, run_suite, AlgebraKind, OrderChoice, Partition};

#[derive(Parser)]
#[command(
    name = "orbits",
    version,
    about = "Nilpotent orbit labels, degeneration orders, and exact matrix witnesses \
             for the classical matrix algebras gl, sl, sp and o"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run only the suite item with this tag.
    #[arg(long, global = true, value_name = "TAG")]
    only: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Copy, Clone, ValueEnum)]
enum OrderArg {
    Dominance,
    Accessibility,
}

impl From<OrderArg> for OrderChoice {
    fn from(value: OrderArg) -> Self {
        match value {
            OrderArg::Dominance => OrderChoice::Dominance,
            OrderArg::Accessibility => OrderChoice::Accessibility,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every nilpotent orbit label, marking distinguished orbits with `*`.
    List {
        /// Algebra family: gl, sl, sp or o.
        kind: String,
        /// Size of the natural representation.
        n: usize,
    },
    /// Print order data for the ordered pair (source, target).
    Compare {
        kind: String,
        n: usize,
        /// Source orbit, e.g. "[6,2]", "6,2" or "3^2,1^2".
        source: String,
        /// Target orbit, in the same notations.
        target: String,
    },
    /// Emit the Hasse diagram of the chosen order on all orbits of the algebra.
    Diagram {
        kind: String,
        n: usize,
        /// Which partial order to draw.
        #[arg(long, value_enum, default_value_t = OrderArg::Accessibility)]
        order: OrderArg,
    },
    /// Build one explicit matrix witness and verify it by exact computation.
    ///
    /// Names and parameters: gl-example; gl-two-part R S K; gl-move-i
    /// R1,..,RP K1,..,KP S; gl-move-ii R S1,..,SQ K1,..,KQ; gl-rst R S T K L;
    /// sp-move1 M; sp-move2 N M; sp-move3 N M; sp-move4 N M; o-move1 M.
    Witness {
        /// Constructor name, e.g. sp-move1.
        name: String,
        /// Integer parameters; list-valued parameters are comma-separated.
        params: Vec<String>,
    },
    /// Run the deterministic self-check suite and report each item.
    VerifySuite,
}

fn main() -> ExitCode {
    restore_default_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Die quietly when the read end of a pipe closes (`orbits list gl 6 | head`)
/// instead of panicking on the failed write.
#[cfg(unix)]
fn restore_default_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn restore_default_sigpipe() {}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::List { ref kind, n } => cmd_list(parse_kind(kind, n)?, cli.format),
        Command::Compare { ref kind, n, ref source, ref target } => {
            cmd_compare(parse_kind(kind, n)?, source, target, cli.format)
        }
        Command::Diagram { ref kind, n, order } => {
            cmd_diagram(parse_kind(kind, n)?, order.into(), cli.format)
        }
        Command::Witness { ref name, ref params } => cmd_witness(name, params, cli.format),
        Command::VerifySuite => cmd_verify_suite(cli.seed, cli.only.as_deref(), cli.format),
    }
}

fn parse_kind(kind: &str, n: usize) -> Result<AlgebraKind, String> {
    let make = match kind.to_ascii_lowercase().as_str() {
        "gl" => AlgebraKind::gl(n),
        "sl" => AlgebraKind::sl(n),
        "sp" => AlgebraKind::sp(n),
        "o" => AlgebraKind::o(n),
        other => return Err(format!("unknown algebra family {other:?}; use gl, sl, sp or o")),
    };
    make.map_err(|e| e.to_string())
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    text.parse::<Partition>().map_err(|e| e.to_string())
}

fn reject_dot(format: Format, command: &str) -> Result<(), String> {
    if format == Format::Dot {
        return Err(format!("dot output applies to the diagram command, not {command}"));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

fn cmd_list(kind: AlgebraKind, format: Format) -> Result<ExitCode, String> {
    reject_dot(format, "list")?;
    let partitions = kind.enumerate_partitions();
    let mut rows = Vec::with_capacity(partitions.len());
    for pi in &partitions {
        let distinguished = kind.is_distinguished(pi).map_err(|e| e.to_string())?;
        rows.push((pi.to_string(), distinguished));
    }
    match format {
        Format::Text => {
            for (label, distinguished) in &rows {
                if *distinguished {
                    println!("{label} *");
                } else {
                    println!("{label}");
                }
            }
        }
        Format::Json => {
            let array: Vec<serde_json::Value> = rows
                .iter()
                .map(|(label, distinguished)| {
                    serde_json::json!({ "partition": label, "distinguished": distinguished })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&serde_json::Value::Array(array)).unwrap());
        }
        Format::Dot => unreachable!("rejected above"),
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

fn cmd_compare(
    kind: AlgebraKind,
    source: &str,
    target: &str,
    format: Format,
) -> Result<ExitCode, String> {
    reject_dot(format, "compare")?;
    let pi1 = parse_partition(source)?;
    let pi2 = parse_partition(target)?;
    let report = access_report(kind, &pi1, &pi2).map_err(|e| e.to_string())?;
    match format {
        Format::Text => {
            println!("kind: {} {}", kind.name(), kind.dim());
            println!("source: {}", report.source);
            println!("target: {}", report.target);
            println!("dominated: {}", yes_no(report.dominated));
            println!("accessible: {}", yes_no(report.accessible));
            println!("1-accessible: {}", report.one_accessible);
            println!("reason: {}", report.one_access_reason);
            match report.obstruction {
                Some(obstruction) => println!("obstruction: {obstruction}"),
                None => println!("obstruction: none"),
            }
            if let Some(chain) = &report.witness_chain {
                let mut line = format!("chain: {}", report.source);
                for (step, mv) in chain {
                    let _ = write!(line, " -> {step} ({mv})");
                }
                println!("{line}");
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
        }
        Format::Dot => unreachable!("rejected above"),
    }
    Ok(ExitCode::SUCCESS)
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

// ---------------------------------------------------------------------------
// diagram
// ---------------------------------------------------------------------------

fn cmd_diagram(
    kind: AlgebraKind,
    order: OrderChoice,
    format: Format,
) -> Result<ExitCode, String> {
    let diagram = hasse_diagram(kind, order).map_err(|e| e.to_string())?;
    match format {
        Format::Text => {
            let levels = node_levels(diagram.nodes.len(), &diagram.edges);
            let deepest = levels.iter().copied().max().unwrap_or(0);
            for level in 0..=deepest {
                for (index, pi) in diagram.nodes.iter().enumerate() {
                    if levels[index] != level {
                        continue;
                    }
                    let marker = if kind.is_distinguished(pi).map_err(|e| e.to_string())? {
                        " *"
                    } else {
                        ""
                    };
                    println!("{}{pi}{marker}", "    ".repeat(level));
                }
            }
        }
        Format::Dot => {
            let mut out = String::new();
            let _ = writeln!(out, "digraph \"{}_{}_{}\" {{", kind.name(), kind.dim(), order.name());
            let _ = writeln!(out, "    rankdir=TB;");
            for pi in &diagram.nodes {
                let shape = if kind.is_distinguished(pi).map_err(|e| e.to_string())? {
                    "doublecircle"
                } else {
                    "ellipse"
                };
                let _ = writeln!(out, "    \"{pi}\" [shape={shape}];");
            }
            for (upper, lower) in diagram.edge_partitions() {
                let _ = writeln!(out, "    \"{upper}\" -> \"{lower}\";");
            }
            let _ = writeln!(out, "}}");
            validate_dot(&out)?;
            print!("{out}");
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&diagram.to_json()).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Longest-path depth of each node below the maximal elements, following the
/// diagram's covering edges.
fn node_levels(count: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut levels = vec![0usize; count];
    // Edges point downward, so repeated relaxation terminates: the edge
    // relation is acyclic and count bounds every path length.
    for _ in 0..count {
        let mut changed = false;
        for &(upper, lower) in edges {
            if levels[lower] < levels[upper] + 1 {
                levels[lower] = levels[upper] + 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    levels
}

/// Minimal structural check of emitted DOT: paired braces and brackets, an
/// even number of quotation marks, and every node or edge line quoted.
fn validate_dot(text: &str) -> Result<(), String> {
    let mut braces = 0i64;
    let mut brackets = 0i64;
    for ch in text.chars() {
        match ch {
            '{' => braces += 1,
            '}' => braces -= 1,
            '[' => brackets += 1,
            ']' => brackets -= 1,
            _ => {}
        }
        if braces < 0 || brackets < 0 {
            return Err("generated dot closes a group it never opened".to_string());
        }
    }
    if braces != 0 || brackets != 0 {
        return Err("generated dot leaves an unclosed group".to_string());
    }
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.matches('"').count() % 2 != 0 {
            return Err(format!("generated dot line has unbalanced quotes: {trimmed}"));
        }
        if (trimmed.starts_with('"') || trimmed.contains("->")) && !trimmed.ends_with(';') {
            return Err(format!("generated dot statement misses its terminator: {trimmed}"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// witness
// ---------------------------------------------------------------------------

fn parse_u32(text: &str) -> Result<u32, String> {
    text.parse::<u32>().map_err(|_| format!("expected a nonnegative integer, got {text:?}"))
}

fn parse_u32_list(text: &str) -> Result<Vec<u32>, String> {
    text.split(',').map(parse_u32).collect()
}

fn scalar_params(name: &str, params: &[String], arity: usize) -> Result<Vec<u32>, String> {
    if params.len() != arity {
        return Err(format!("{name} takes {arity} integer parameters, got {}", params.len()));
    }
    params.iter().map(|p| parse_u32(p)).collect()
}

fn cmd_witness(name: &str, params: &[String], format: Format) -> Result<ExitCode, String> {
    reject_dot(format, "witness")?;
    let witness = match name {
        "gl-example" => {
            if !params.is_empty() {
                return Err("gl-example takes no parameters".to_string());
            }
            Ok(orbits::gl_example_witness())
        }
        "gl-two-part" => {
            let p = scalar_params(name, params, 3)?;
            orbits::gl_two_part_witness(p[0], p[1], p[2])
        }
        "gl-move-i" => {
            if params.len() != 3 {
                return Err(
                    "gl-move-i takes receiver list, shift list and donor size".to_string()
                );
            }
            let receivers = parse_u32_list(&params[0])?;
            let shifts = parse_u32_list(&params[1])?;
            orbits::gl_move_i_witness(&receivers, &shifts, parse_u32(&params[2])?)
        }
        "gl-move-ii" => {
            if params.len() != 3 {
                return Err(
                    "gl-move-ii takes receiver size, donor list and shift list".to_string()
                );
            }
            let donors = parse_u32_list(&params[1])?;
            let shifts = parse_u32_list(&params[2])?;
            orbits::gl_move_ii_witness(parse_u32(&params[0])?, &donors, &shifts)
        }
        "gl-rst" => {
            let p = scalar_params(name, params, 5)?;
            orbits::gl_rst_witness(p[0], p[1], p[2], p[3], p[4])
        }
        "sp-move1" => {
            let p = scalar_params(name, params, 1)?;
            orbits::sp_move_witness(1, &p)
        }
        "sp-move2" | "sp-move3" | "sp-move4" => {
            let move_no = name.as_bytes()[7] - b'0';
            let p = scalar_params(name, params, 2)?;
            orbits::sp_move_witness(u32::from(move_no), &p)
        }
        "o-move1" => {
            let p = scalar_params(name, params, 1)?;
            orbits::o_move1_witness(p[0])
        }
        other => {
            return Err(format!(
                "unknown witness name {other:?}; known names: gl-example, gl-two-part, \
                 gl-move-i, gl-move-ii, gl-rst, sp-move1, sp-move2, sp-move3, sp-move4, o-move1"
            ));
        }
    }
    .map_err(|e| e.to_string())?;

    let report = orbits::verify_witness(&witness);
    match format {
        Format::Text => {
            println!("kind: {} {}", witness.kind.name(), witness.kind.dim());
            println!("source: {}", witness.source);
            println!("target: {}", witness.target);
            println!("lambda: {}", witness.lambda);
            println!("provenance: {}", witness.provenance);
            println!("{report}");
            println!("matrix:");
            print!("{}", witness.x_prime.to_text());
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&witness.bundle_json()).unwrap());
        }
        Format::Dot => unreachable!("rejected above"),
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ---------------------------------------------------------------------------
// verify-suite
// ---------------------------------------------------------------------------

fn cmd_verify_suite(seed: u64, only: Option<&str>, format: Format) -> Result<ExitCode, String> {
    reject_dot(format, "verify-suite")?;
    let report = run_suite(seed, only).map_err(|e| e.to_string())?;
    match format {
        Format::Text => println!("{report}"),
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
        }
        Format::Dot => unreachable!("rejected above"),
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
