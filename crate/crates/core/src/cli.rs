//! Command-line front end. [`run`] parses arguments, dispatches, and
//! returns the process exit status: 0 on success, 1 when a check finds a
//! violation, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerate::{canonical_form, connected_graphs, GraphSource};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, read_graph6, read_graph6_file, write_graph6};
use crate::harness::{
    comparison_sweep, format_sig, minimizer_search, sampled_source, sharpness_check,
    verify_theorem, RunOptions, Sweep, TheoremId, TheoremSpec,
};
use crate::matching::{
    decide_property, deficiency, direct_property_oracle, Property, PropertyQuery,
};
use crate::quotient::FamilySpec;
use crate::spectra::{distance_spectral_radius, wiener, SolverConfig, DEFAULT_EPS, DEFAULT_TOL};

#[derive(Parser, Debug)]
#[command(
    name = "kms",
    version,
    about = "Distance spectral radius, integer k-matchings and verification of spectral sufficient conditions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format; tables default to csv, single values to plain.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for parallel runs. Results do not depend on it.
    #[arg(long, global = true, env = "KMS_WORKERS")]
    workers: Option<usize>,
    /// Relative residual tolerance of the eigensolver.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Tolerance of the below/equal/above threshold comparison.
    #[arg(long, global = true, default_value_t = DEFAULT_EPS)]
    eps: f64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// S(n,k): a k-clique joined to n-k independent vertices (--k-clique).
    SplitStar,
    /// K1 v (K_{n-2} u K1).
    PendantClique,
    /// K1 v (K_{n-3} u 2K1).
    TwoPendantClique,
    /// K_s v (K_{n-2s-1} u (s+1)K1) (--s).
    CoreOdd,
    /// K_s v (K_{n-2s} u sK1) (--s).
    CoreEven,
    /// K_s v (K_{n1} u ... u K_{np} u iK1) (--s, --parts, --isolated).
    General,
}

#[derive(Args, Debug, Default)]
#[group(id = "source", required = true, multiple = false)]
struct SourceArgs {
    /// A single graph in graph6.
    #[arg(long, group = "source")]
    g6: Option<String>,
    /// A graph6 file, one graph per line; `-` reads standard input.
    #[arg(long, group = "source")]
    file: Option<PathBuf>,
    /// An extremal family graph.
    #[arg(long, value_enum, group = "source", requires = "n")]
    family: Option<Family>,
    /// All connected graphs of this order (1..=8).
    #[arg(long, group = "source")]
    all: Option<usize>,
    #[command(flatten)]
    family_params: FamilyParams,
}

#[derive(Args, Debug, Default)]
struct FamilyParams {
    /// Family order.
    #[arg(long)]
    n: Option<usize>,
    /// Clique size of a split star.
    #[arg(long)]
    k_clique: Option<usize>,
    /// Core size.
    #[arg(long)]
    s: Option<usize>,
    /// Clique part sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Isolated vertices of a general family graph.
    #[arg(long, default_value_t = 0)]
    isolated: usize,
}

#[derive(Args, Debug)]
struct QueryArgs {
    /// perfect-k-matching, gfc, gbc or kd-critical.
    #[arg(long)]
    property: Property,
    #[arg(long)]
    k: u32,
    /// Deficit at the exceptional vertex (kd-critical only).
    #[arg(long)]
    d: Option<u32>,
}

impl QueryArgs {
    fn query(&self) -> PropertyQuery {
        PropertyQuery {
            property: self.property,
            k: self.k,
            d: self.d,
        }
    }
}

#[derive(Args, Debug)]
struct TheoremArgs {
    /// T1 perfect k-matching (odd k, even n >= 6); T2 k-d-critical (odd k, n = d mod 2);
    /// T3 GFC (odd k, odd n); T4 GBC (odd k, even n); T5 GFC/GBC (even k).
    #[arg(long)]
    theorem: TheoremId,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    d: Option<u32>,
}

impl TheoremArgs {
    fn spec(&self) -> Result<TheoremSpec> {
        TheoremSpec::new(self.theorem, self.n, self.k, self.d)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distance spectral radius lambda1(D(G)) with its Perron vector, by power iteration.
    Spectrum(SourceArgs),
    /// Wiener index W(G) and the lower bound 2W(G)/n on the distance spectral radius.
    Wiener(SourceArgs),
    /// k-Berge-Tutte deficiency def_k(G) and the barriers attaining it.
    Deficiency {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        k: u32,
    },
    /// All k-barriers: vertex sets attaining the k-Berge-Tutte deficiency.
    Barriers {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        k: u32,
    },
    /// Decide perfect k-matching, GFC_k, GBC_k or k-d-criticality by the subset characterisation.
    Check {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Decide the same properties by constructing integer k-matchings directly.
    Oracle {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        query: QueryArgs,
    },
    /// List one connected graph per isomorphism class, in graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
    },
    /// Check a spectral sufficient condition over every graph of a source; exit 1 on a violation.
    Verify {
        #[command(flatten)]
        theorem: TheoremArgs,
        /// Graph6 file to read instead of built-in enumeration.
        #[arg(long, conflicts_with = "sampled")]
        source: Option<PathBuf>,
        /// Random connected graphs plus extremal family graphs instead of all graphs.
        #[arg(long)]
        sampled: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Confirm the exceptional graph attains the threshold and lacks the property via its barrier.
    Sharpness {
        #[command(flatten)]
        theorem: TheoremArgs,
    },
    /// Find the property-lacking graph of least distance spectral radius.
    Minimize {
        #[command(flatten)]
        query: QueryArgs,
        #[arg(long)]
        n: usize,
        /// Graph6 file to read instead of built-in enumeration.
        #[arg(long)]
        source: Option<PathBuf>,
    },
    /// Compare distance spectral radii across extremal families, with equality cases.
    Lemmas {
        /// clique-merge (one big clique plus isolated vertices is least),
        /// two-pendant (against K1 v (K_{n-3} u 2K1)), pendant (against
        /// K1 v (K_{n-2} u K1)); all three when omitted.
        #[arg(long)]
        sweep: Option<Sweep>,
        #[arg(long, default_value_t = 30)]
        max_n: usize,
    },
    /// Round-trip graph6 lines through the codec, reporting any that change.
    G6 {
        /// graph6 file; standard input when omitted.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Print canonical relabelings instead of re-encodings.
        #[arg(long)]
        canonical: bool,
    },
}

/// Exit status of a successful command.
enum Outcome {
    Ok,
    Violations,
}

impl SourceArgs {
    fn family_spec(&self, family: Family) -> Result<FamilySpec> {
        let p = &self.family_params;
        let n =
            p.n.ok_or_else(|| Error::InvalidSpec("--family needs --n".into()))?;
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| Error::InvalidSpec(format!("this family needs {flag}")))
        };
        let spec = match family {
            Family::SplitStar => FamilySpec::SplitStar {
                n,
                k: need(p.k_clique, "--k-clique")?,
            },
            Family::PendantClique => FamilySpec::PendantClique { n },
            Family::TwoPendantClique => FamilySpec::TwoPendantClique { n },
            Family::CoreOdd => FamilySpec::CoreOdd {
                n,
                s: need(p.s, "--s")?,
            },
            Family::CoreEven => FamilySpec::CoreEven {
                n,
                s: need(p.s, "--s")?,
            },
            Family::General => {
                let spec = FamilySpec::General {
                    s: need(p.s, "--s")?,
                    parts: p.parts.clone(),
                    isolated: p.isolated,
                };
                if spec.order() != n {
                    return Err(Error::InvalidSpec(format!(
                        "{spec} has {} vertices, not --n {n}",
                        spec.order()
                    )));
                }
                spec
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    fn graphs(&self) -> Result<Vec<Graph>> {
        if let Some(line) = &self.g6 {
            return Ok(vec![parse_graph6(line)?]);
        }
        if let Some(path) = &self.file {
            return if path.as_os_str() == "-" {
                read_graph6(io::stdin().lock())
            } else {
                read_graph6_file(path)
            };
        }
        if let Some(family) = self.family {
            return Ok(vec![self.family_spec(family)?.build()?]);
        }
        if let Some(n) = self.all {
            return connected_graphs(n);
        }
        Err(Error::InvalidSpec("no graph source given".into()))
    }
}

fn write_rows<T: Serialize>(
    out: &mut dyn Write,
    format: Format,
    rows: &[T],
    plain: impl Fn(&T) -> String,
) -> Result<()> {
    match format {
        Format::Plain => {
            for r in rows {
                writeln!(out, "{}", plain(r))?;
            }
        }
        Format::Json => {
            let body = if rows.len() == 1 {
                serde_json::to_string_pretty(&rows[0])
            } else {
                serde_json::to_string_pretty(rows)
            };
            writeln!(out, "{}", body.map_err(|e| Error::Io(e.into()))?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r)
                    .map_err(|e| Error::Io(io::Error::other(e.to_string())))?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| Error::Io(io::Error::other(e.to_string())))?;
            out.write_all(&bytes)?;
        }
    }
    Ok(())
}

fn sig(x: f64) -> String {
    format_sig(x, 10)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let c = &cli.common;
    if !(c.tol > 0.0 && c.eps > 0.0) {
        return Err(Error::OutOfRange {
            what: "tolerance",
            detail: "--tol and --eps must be positive".into(),
        });
    }
    let options = RunOptions {
        eps: c.eps,
        tol: c.tol,
        workers: c.workers,
    };
    let single = c.format.unwrap_or(Format::Plain);
    let table = c.format.unwrap_or(Format::Csv);
    let solver = SolverConfig::with_tol(c.tol);
    match cli.command {
        Command::Spectrum(source) => {
            #[derive(Serialize)]
            struct Row {
                graph6: String,
                lambda1: String,
                residual: f64,
                iterations: usize,
                perron_vector: Vec<f64>,
            }
            let rows = source
                .graphs()?
                .iter()
                .map(|g| {
                    let e = distance_spectral_radius(g, solver)?;
                    Ok(Row {
                        graph6: write_graph6(g),
                        lambda1: sig(e.lambda1),
                        residual: e.residual,
                        iterations: e.iterations,
                        perron_vector: e.vector,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if single == Format::Csv {
                #[derive(Serialize)]
                struct Flat<'a> {
                    graph6: &'a str,
                    lambda1: &'a str,
                }
                let flat: Vec<Flat> = rows
                    .iter()
                    .map(|r| Flat {
                        graph6: &r.graph6,
                        lambda1: &r.lambda1,
                    })
                    .collect();
                write_rows(out, single, &flat, |_| String::new())?;
            } else {
                let many = rows.len() > 1;
                write_rows(out, single, &rows, |r| {
                    if many {
                        format!("{} {}", r.graph6, r.lambda1)
                    } else {
                        r.lambda1.clone()
                    }
                })?;
            }
        }
        Command::Wiener(source) => {
            #[derive(Serialize)]
            struct Row {
                graph6: String,
                wiener: u64,
                bound: String,
            }
            let rows = source
                .graphs()?
                .iter()
                .map(|g| {
                    let w = wiener(g)?;
                    Ok(Row {
                        graph6: write_graph6(g),
                        wiener: w,
                        bound: sig(2.0 * w as f64 / g.order() as f64),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            write_rows(out, single, &rows, |r| {
                format!("W = {}  2W/n = {}", r.wiener, r.bound)
            })?;
        }
        Command::Deficiency { source, k } => {
            let reports = source
                .graphs()?
                .iter()
                .map(|g| deficiency(g, k))
                .collect::<Result<Vec<_>>>()?;
            match single {
                Format::Json => write_rows(out, single, &reports, |_| String::new())?,
                _ => {
                    for r in &reports {
                        let sets: Vec<String> =
                            r.barriers.iter().map(|b| b.set.to_string()).collect();
                        writeln!(
                            out,
                            "def_{} = {}  barriers: {}",
                            r.k,
                            r.value,
                            sets.join(" ")
                        )?;
                    }
                }
            }
        }
        Command::Barriers { source, k } => {
            #[derive(Serialize)]
            struct Row {
                graph6: String,
                barrier: String,
                size: usize,
                isolated: usize,
                odd: usize,
            }
            let mut rows = Vec::new();
            for g in source.graphs()? {
                for b in deficiency(&g, k)?.barriers {
                    rows.push(Row {
                        graph6: write_graph6(&g),
                        barrier: b.set.to_string(),
                        size: b.size(),
                        isolated: b.isolated,
                        odd: b.odd,
                    });
                }
            }
            write_rows(out, table, &rows, |r| r.barrier.clone())?;
        }
        Command::Check { source, query } => {
            let q = query.query();
            for g in source.graphs()? {
                let v = decide_property(&g, &q)?;
                match single {
                    Format::Plain => match v.witness {
                        Some(w) => writeln!(out, "false  witness {w}")?,
                        None => writeln!(out, "true")?,
                    },
                    _ => write_rows(out, single, &[v], |_| String::new())?,
                }
            }
        }
        Command::Oracle { source, query } => {
            let q = query.query();
            for g in source.graphs()? {
                writeln!(out, "{}", direct_property_oracle(&g, &q)?)?;
            }
        }
        Command::Enumerate { n, count } => {
            let graphs = connected_graphs(n)?;
            if count {
                writeln!(out, "{}", graphs.len())?;
            } else {
                for g in &graphs {
                    writeln!(out, "{}", write_graph6(g))?;
                }
            }
        }
        Command::Verify {
            theorem,
            source,
            sampled,
            seed,
        } => {
            let spec = theorem.spec()?;
            let src = match (source, sampled) {
                (Some(path), _) => GraphSource::Graph6File(path),
                (None, Some(count)) => sampled_source(&spec, count, seed)?,
                (None, None) => GraphSource::Enumerated(spec.n),
            };
            let report = verify_theorem(&spec, &src, &options)?;
            match table {
                Format::Json => report.write_json(&mut *out)?,
                Format::Csv => report.write_csv(&mut *out)?,
                Format::Plain => {
                    for r in &report.rows {
                        writeln!(
                            out,
                            "{} {} {} {} {}{}",
                            r.graph6,
                            sig(r.lambda1),
                            r.cmp,
                            r.verdict,
                            if r.exception { "exception" } else { "" },
                            if r.violation { "VIOLATION" } else { "" }
                        )?;
                    }
                }
            }
            writeln!(
                err,
                "{spec}: {} graphs, {} violations, {} exceptions ({})",
                report.graphs,
                report.violations,
                report.exceptions,
                if report.metadata.exhaustive {
                    "exhaustive"
                } else {
                    "sampled"
                }
            )?;
            if !report.passed() {
                return Ok(Outcome::Violations);
            }
        }
        Command::Sharpness { theorem } => {
            let report = sharpness_check(&theorem.spec()?, &options)?;
            match single {
                Format::Json => write_rows(out, single, &[&report], |_| String::new())?,
                _ => {
                    writeln!(out, "threshold {}", sig(report.threshold))?;
                    for c in &report.checks {
                        writeln!(
                            out,
                            "{}  lambda1 {} ({})  witness {}  violates {}  property {}",
                            c.family,
                            sig(c.lambda1),
                            c.cmp,
                            c.witness,
                            c.witness_violates,
                            c.property_holds
                        )?;
                    }
                    writeln!(out, "{}", if report.passed { "sharp" } else { "NOT SHARP" })?;
                }
            }
            if !report.passed {
                return Ok(Outcome::Violations);
            }
        }
        Command::Minimize { query, n, source } => {
            let src = match source {
                Some(p) => GraphSource::Graph6File(p),
                None => GraphSource::Enumerated(n),
            };
            let m = minimizer_search(&query.query(), n, &src, &options)?;
            match single {
                Format::Json => write_rows(out, single, &[&m], |_| String::new())?,
                _ => writeln!(
                    out,
                    "{} {}  ({} candidates, {} at the minimum)",
                    m.graph6,
                    sig(m.lambda1),
                    m.candidates,
                    m.ties
                )?,
            }
        }
        Command::Lemmas { sweep, max_n } => {
            let sweeps = match sweep {
                Some(l) => vec![l],
                None => Sweep::ALL.to_vec(),
            };
            let mut failures = 0;
            for l in sweeps {
                let r = comparison_sweep(l, max_n, &options)?;
                failures += r.failures;
                match single {
                    Format::Json => write_rows(out, single, &[&r], |_| String::new())?,
                    _ => {
                        writeln!(
                            out,
                            "{l}: {} instances, {} failures",
                            r.instances.len(),
                            r.failures
                        )?;
                        for i in r.instances.iter().filter(|i| !i.ok) {
                            writeln!(
                                out,
                                "  FAIL {} n={} {} vs {}: {} {} {}",
                                i.part,
                                i.n,
                                i.smaller,
                                i.larger,
                                sig(i.lhs),
                                i.cmp,
                                sig(i.rhs)
                            )?;
                        }
                    }
                }
            }
            if failures > 0 {
                return Ok(Outcome::Violations);
            }
        }
        Command::G6 { file, canonical } => {
            let lines: Vec<String> = match file {
                Some(p) => io::BufReader::new(File::open(p)?)
                    .lines()
                    .collect::<io::Result<_>>()?,
                None => io::stdin().lock().lines().collect::<io::Result<_>>()?,
            };
            let mut changed = 0;
            for line in lines.iter().map(|l| l.trim()).filter(|l| !l.is_empty()) {
                let g = parse_graph6(line)?;
                let encoded = write_graph6(&g);
                if encoded != line.trim_start_matches(">>graph6<<") {
                    changed += 1;
                    writeln!(err, "round trip changed {line} -> {encoded}")?;
                }
                if canonical {
                    writeln!(out, "{}", write_graph6(&canonical_form(&g)?.to_graph()))?;
                } else {
                    writeln!(out, "{encoded}")?;
                }
            }
            if changed > 0 {
                return Ok(Outcome::Violations);
            }
        }
    }
    Ok(Outcome::Ok)
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            return 2;
        }
    };
    let result = match cli.common.out.clone() {
        Some(path) => match File::create(&path) {
            Ok(f) => {
                let mut w = BufWriter::new(f);
                let r = dispatch(cli, &mut w, err);
                r.and_then(|o| w.flush().map(|_| o).map_err(Error::from))
            }
            Err(e) => Err(e.into()),
        },
        None => dispatch(cli, out, err),
    };
    match result {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Violations) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
