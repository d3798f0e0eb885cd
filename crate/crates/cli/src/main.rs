//! Command-line front end: parse a quiver file, generate relations, verify
//! them against exhaustive finite-field enumeration, count points, fit
//! counting polynomials, and print chart/Schubert data.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input error.

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use qpr_core::combinatorics::epsilon;
use qpr_core::{
    all_relations, compare_sets, euler_characteristic, fit_counting_polynomial, subrep_points,
    variety_points, DimensionVector, ExportFormat, GrassmannPoint, IndexSubset, Labeling,
    PlueckerVariable, PrimeField, QuiverFile, Representation, VertexIdx,
};
use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "qpr",
    version,
    about = "Quiver Plücker relations: generation, finite-field verification, point counting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum LabelArg {
    #[default]
    Global,
    Local,
}

impl From<LabelArg> for Labeling {
    fn from(l: LabelArg) -> Labeling {
        match l {
            LabelArg::Global => Labeling::Global,
            LabelArg::Local => Labeling::Local,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum FormatArg {
    #[default]
    Plain,
    Cas,
}

#[derive(Subcommand)]
enum Command {
    /// Print the relation set for the dimension vector in the file.
    Relations {
        file: PathBuf,
        /// Include relations for paths up to this length.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        /// Also generate the classical per-vertex relations.
        #[arg(long)]
        classical: bool,
        #[arg(long, value_enum, default_value_t)]
        labels: LabelArg,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        /// Worker threads; output is byte-identical for any value.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check that the relation solutions equal the enumerated
    /// subrepresentations over each prime field.
    Verify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        /// Parameter assignment `name=rational`, repeatable.
        #[arg(long = "set")]
        set: Vec<String>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Count subrepresentation points over prime fields, optionally fitting
    /// an exact counting polynomial.
    Count {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        /// Fit a polynomial in q through the counts.
        #[arg(long)]
        fit: bool,
        /// Held-out primes whose counts must match the fit exactly.
        #[arg(long, value_delimiter = ',')]
        validate: Vec<u64>,
        #[arg(long = "set")]
        set: Vec<String>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Print the symbolic spanning vectors of the chart at a pivot subset.
    Chart {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
        /// Comma-separated local basis indices, e.g. `1,2`.
        #[arg(long)]
        pivot: String,
    },
    /// Substitute 0/1 for chosen coordinates and print what remains.
    Schubert {
        file: PathBuf,
        /// Coordinate set to zero, as comma-separated global labels. Repeatable.
        #[arg(long = "zero")]
        zeros: Vec<String>,
        /// Coordinate set to one (at most one per vertex). Repeatable.
        #[arg(long = "one")]
        ones: Vec<String>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        #[arg(long)]
        classical: bool,
    },
    /// List the paths used by higher-order relation generation.
    Paths {
        file: PathBuf,
        #[arg(long = "max-len", default_value_t = 1)]
        max_len: usize,
    },
}

enum CliError {
    Input(String),
    Mismatch,
}

fn input_err(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn load(file: &PathBuf) -> Result<QuiverFile, CliError> {
    let text =
        std::fs::read_to_string(file).map_err(|e| input_err(format!("{}: {e}", file.display())))?;
    qpr_core::parse_quiver_file(&text).map_err(|diags| {
        let mut msg = format!("{}: invalid quiver file", file.display());
        for d in diags {
            msg.push_str(&format!("\n  {d}"));
        }
        input_err(msg)
    })
}

fn parse_params(set: &[String]) -> Result<BTreeMap<String, BigRational>, CliError> {
    let mut out = BTreeMap::new();
    for item in set {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| input_err(format!("--set expects `name=value`, got `{item}`")))?;
        let value = BigRational::from_str(value)
            .map_err(|_| input_err(format!("invalid rational `{value}` in --set")))?;
        out.insert(name.to_string(), value);
    }
    Ok(out)
}

fn parse_prime(p: u64) -> Result<PrimeField, CliError> {
    PrimeField::new(p).map_err(|e| input_err(e.to_string()))
}

/// Resolve a comma-separated list of global basis labels to a Plücker
/// variable, inferring the vertex from the label range.
fn resolve_global_variable(
    rep: &Representation,
    sub: &DimensionVector,
    token: &str,
) -> Result<PlueckerVariable, CliError> {
    let globals: Vec<u32> = token
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            input_err(format!(
                "invalid coordinate `{token}`: expected global labels like `1,3`"
            ))
        })?;
    if globals.is_empty() {
        return Err(input_err("empty coordinate"));
    }
    let mut offset = 0u32;
    for (v, &d) in rep.dims().entries().iter().enumerate() {
        let hi = offset + d as u32;
        if globals.iter().all(|&g| g > offset && g <= hi) {
            let vertex = VertexIdx(v);
            let mut members: Vec<u32> = globals.iter().map(|&g| g - offset).collect();
            members.sort_unstable();
            let subset = IndexSubset::new(vertex, members)
                .map_err(|e| input_err(format!("coordinate `{token}`: {e}")))?;
            if subset.len() != sub.get(vertex) {
                return Err(input_err(format!(
                    "coordinate `{token}` has {} indices, expected {} at vertex {}",
                    subset.len(),
                    sub.get(vertex),
                    rep.quiver().vertex_name(vertex)
                )));
            }
            return Ok(PlueckerVariable::new(subset));
        }
        offset = hi;
    }
    Err(input_err(format!(
        "coordinate `{token}` does not fall inside a single vertex's label range"
    )))
}

fn render_point(point: &GrassmannPoint) -> String {
    let parts: Vec<String> = point
        .vectors()
        .iter()
        .map(|v| {
            v.coords()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!("[{}]", parts.join(" | "))
}

fn cmd_relations(
    file: &PathBuf,
    order: u64,
    classical: bool,
    labels: LabelArg,
    format: FormatArg,
) -> Result<(), CliError> {
    let qf = load(file)?;
    let rels = all_relations(&qf.representation, &qf.sub_dims, order as usize, classical)
        .map_err(|e| input_err(e.to_string()))?;
    let format = match format {
        FormatArg::Plain => ExportFormat::Plain,
        FormatArg::Cas => ExportFormat::CasScript,
    };
    print!(
        "{}",
        qpr_core::export_relations(&qf.representation, &rels, format, labels.into())
    );
    Ok(())
}

fn cmd_verify(
    file: &PathBuf,
    primes: &[u64],
    order: u64,
    set: &[String],
    threads: usize,
) -> Result<(), CliError> {
    let qf = load(file)?;
    let params = parse_params(set)?;
    let rels = all_relations(&qf.representation, &qf.sub_dims, order as usize, true)
        .map_err(|e| input_err(e.to_string()))?;
    let mut all_equal = true;
    for &p in primes {
        let field = parse_prime(p)?;
        let variety = variety_points(&qf.representation, &rels, &params, field, threads)
            .map_err(|e| input_err(e.to_string()))?;
        let subreps = subrep_points(&qf.representation, &qf.sub_dims, &params, field, threads)
            .map_err(|e| input_err(e.to_string()))?;
        let report = compare_sets(&variety, &subreps).map_err(|e| input_err(e.to_string()))?;
        if report.equal() {
            println!("p={p}: equal ({} points)", subreps.len());
        } else {
            all_equal = false;
            println!(
                "p={p}: MISMATCH (relations cut {} points, enumeration finds {})",
                variety.len(),
                subreps.len()
            );
            for w in report.missing.iter().take(3) {
                println!("  missing from relation locus: {}", render_point(w));
            }
            for w in report.extra.iter().take(3) {
                println!("  extra in relation locus: {}", render_point(w));
            }
        }
    }
    if all_equal {
        Ok(())
    } else {
        Err(CliError::Mismatch)
    }
}

fn cmd_count(
    file: &PathBuf,
    primes: &[u64],
    fit: bool,
    validate: &[u64],
    set: &[String],
    threads: usize,
) -> Result<(), CliError> {
    let qf = load(file)?;
    let params = parse_params(set)?;
    let count_at = |p: u64| -> Result<u64, CliError> {
        let field = parse_prime(p)?;
        let pts = subrep_points(&qf.representation, &qf.sub_dims, &params, field, threads)
            .map_err(|e| input_err(e.to_string()))?;
        Ok(pts.len() as u64)
    };
    let mut samples = Vec::new();
    for &p in primes {
        let n = count_at(p)?;
        println!("p={p}: {n}");
        samples.push((p, n));
    }
    if !fit {
        return Ok(());
    }
    let mut held_out = Vec::new();
    for &p in validate {
        let n = count_at(p)?;
        println!("p={p}: {n} (validation)");
        held_out.push((p, n));
    }
    let cap: usize = qf
        .representation
        .dims()
        .entries()
        .iter()
        .zip(qf.sub_dims.entries())
        .map(|(&d, &e)| e * (d - e))
        .sum();
    match fit_counting_polynomial(&samples, &held_out, Some(cap)) {
        Ok(cp) => {
            println!("fit: {}", cp.render());
            match cp.validation() {
                qpr_core::ValidationStatus::Validated { primes } => {
                    let ps: Vec<String> = primes.iter().map(u64::to_string).collect();
                    println!("validated at: {}", ps.join(","));
                }
                qpr_core::ValidationStatus::Unvalidated => println!("validated at: (none)"),
            }
            match euler_characteristic(&cp) {
                Ok(chi) => println!("euler characteristic: {chi}"),
                Err(e) => println!("euler characteristic: undefined ({e})"),
            }
        }
        Err(e) => println!("fit failed: {e}"),
    }
    Ok(())
}

fn cmd_chart(file: &PathBuf, vertex: &str, pivot: &str) -> Result<(), CliError> {
    let qf = load(file)?;
    let rep = &qf.representation;
    let v = rep
        .quiver()
        .vertex_idx(vertex)
        .map_err(|e| input_err(e.to_string()))?;
    let members: Vec<u32> = pivot
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            input_err(format!(
                "invalid pivot `{pivot}`: expected local indices like `1,2`"
            ))
        })?;
    let pivot_set = IndexSubset::new(v, members).map_err(|e| input_err(e.to_string()))?;
    let (d, e) = (rep.dim(v), qf.sub_dims.get(v));
    if pivot_set.len() != e {
        return Err(input_err(format!(
            "pivot has {} indices, expected {e} at vertex {vertex}",
            pivot_set.len()
        )));
    }
    pivot_set
        .check_dim(d)
        .map_err(|e| input_err(e.to_string()))?;
    let global = |i: u32| rep.global_label(v, i);
    let pivot_name = {
        let labels: Vec<String> = pivot_set
            .members()
            .iter()
            .map(|&m| global(m).to_string())
            .collect();
        format!("Delta[{}]", labels.join(","))
    };
    println!("# chart of Gr({e},{d}) at vertex {vertex} where {pivot_name} is invertible");
    for &i0 in pivot_set.members() {
        let i_set = pivot_set.without(i0);
        let mut entries = Vec::with_capacity(d);
        for i in 1..=d as u32 {
            if pivot_set.contains(i) {
                entries.push(if i == i0 {
                    "1".to_string()
                } else {
                    "0".to_string()
                });
            } else {
                let sign = if (epsilon(i, &i_set) + epsilon(i0, &i_set)).is_multiple_of(2) {
                    ""
                } else {
                    "-"
                };
                let labels: Vec<String> = {
                    let mut ms = i_set.with(i).members().to_vec();
                    ms.sort_unstable();
                    ms.iter().map(|&m| global(m).to_string()).collect()
                };
                entries.push(format!("{sign}Delta[{}]/{pivot_name}", labels.join(",")));
            }
        }
        println!("n[{}] = ({})", global(i0), entries.join(", "));
    }
    Ok(())
}

fn cmd_schubert(
    file: &PathBuf,
    zeros: &[String],
    ones: &[String],
    order: u64,
    classical: bool,
) -> Result<(), CliError> {
    let qf = load(file)?;
    let rep = &qf.representation;
    let rels = all_relations(rep, &qf.sub_dims, order as usize, classical)
        .map_err(|e| input_err(e.to_string()))?;
    let mut zero_vars = BTreeSet::new();
    for token in zeros {
        zero_vars.insert(resolve_global_variable(rep, &qf.sub_dims, token)?);
    }
    let mut one_vars: BTreeMap<VertexIdx, PlueckerVariable> = BTreeMap::new();
    for token in ones {
        let var = resolve_global_variable(rep, &qf.sub_dims, token)?;
        let vertex = var.subset.vertex();
        if one_vars.insert(vertex, var).is_some() {
            return Err(input_err(format!(
                "two --one coordinates at vertex {}",
                rep.quiver().vertex_name(vertex)
            )));
        }
    }
    let polys = qpr_core::schubert_dehomogenize(&rels, &zero_vars, &one_vars)
        .map_err(|e| input_err(e.to_string()))?;
    println!("# {} equation(s) after dehomogenization", polys.len());
    for p in polys {
        println!("{}", p.canonical_string(rep, Labeling::Global));
    }
    Ok(())
}

fn cmd_paths(file: &PathBuf, max_len: usize) -> Result<(), CliError> {
    let qf = load(file)?;
    let quiver = qf.representation.quiver();
    let paths = qpr_core::enumerate_paths(quiver, max_len);
    println!("# {} path(s) of length 0..={max_len}", paths.len());
    for p in paths {
        println!(
            "{}: {} -> {} (len {})",
            p.label(quiver),
            quiver.vertex_name(p.source()),
            quiver.vertex_name(p.target()),
            p.len()
        );
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Relations {
            file,
            order,
            classical,
            labels,
            format,
            threads: _,
        } => cmd_relations(file, *order, *classical, *labels, *format),
        Command::Verify {
            file,
            primes,
            order,
            set,
            threads,
        } => cmd_verify(file, primes, *order, set, *threads),
        Command::Count {
            file,
            primes,
            fit,
            validate,
            set,
            threads,
        } => cmd_count(file, primes, *fit, validate, set, *threads),
        Command::Chart {
            file,
            vertex,
            pivot,
        } => cmd_chart(file, vertex, pivot),
        Command::Schubert {
            file,
            zeros,
            ones,
            order,
            classical,
        } => cmd_schubert(file, zeros, ones, *order, *classical),
        Command::Paths { file, max_len } => cmd_paths(file, *max_len),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Mismatch) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
