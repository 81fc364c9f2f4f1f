//! `porbits`: command-line access to periodic-orbit arithmetic.
//!
//! Sequences are read from `--in FILE` (or stdin) and written to `--out FILE`
//! (or stdout) as csv or bfile. Exit status: 0 on success, 1 when `check` or
//! `classify` reports a failing verdict, 2 on usage or domain errors.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use periodic_orbits::algebra::{
    additive_convolution, dirichlet_convolution, quotient_check, refute_completely_multiplicative,
    refute_polynomial, search_factorizations, SearchBudget,
};
use periodic_orbits::arith::parse_rational;
use periodic_orbits::generators::{
    gen_binomial, gen_named, gen_s_integer_connected, gen_s_integer_zero_dim_example, gen_sft_trace, gen_toral_det,
    BinomialSpec, MatrixSpec, NamedSequence, SIntegerSpec,
};
use periodic_orbits::oracle::build_permutation;
use periodic_orbits::rategrowth::{
    gen_pathological_orbit_growth, growth_report, pathological_periodic_points, rr_construct_geometric,
    rr_construct_power,
};
use periodic_orbits::recurrence::{classify, ratio_family, Decision, RatioFamily, RecurrenceSpec};
use periodic_orbits::{
    check_er, iterate_per, least_period_counts, orbit_transform, parse_sequence, per_transform, render_sequence,
    Format, IntMatrix, Sequence,
};

#[derive(Parser)]
#[command(name = "porbits", version, about = "Periodic-point and orbit-count arithmetic")]
struct Cli {
    /// Read the input sequence from FILE instead of stdin.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write output to FILE instead of stdout.
    #[arg(long = "out", global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Sequence format for input and output.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Bfile,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Bfile => Format::Bfile,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Orbit counts to periodic-point counts.
    Per,
    /// Periodic-point counts to orbit counts (fails unless realizable).
    Orbit,
    /// Least-period counts f*_n = Σ μ(n/d) a_d.
    Fstar,
    /// Exact-realizability check with the smallest failing index.
    Check,
    /// Periodic-point counts of a realizing system.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Iterate PER, printing K+1 rows.
    Iterate {
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        terms: usize,
        /// Starting orbit counts (default: 1,0,0,…).
        #[arg(long, value_name = "FILE", conflicts_with = "delta")]
        start: Option<PathBuf>,
        #[arg(long)]
        delta: bool,
    },
    /// Classify u_{n+2} = a·u_{n+1} + b·u_n.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long)]
        u1: BigInt,
        #[arg(long)]
        u2: BigInt,
        #[arg(long, default_value_t = 30)]
        terms: usize,
    },
    /// Realizable combinations t·x + s·y of two square-discriminant solutions.
    Family {
        #[arg(long, value_enum)]
        name: FamilyArg,
        #[arg(long)]
        t: BigInt,
        #[arg(long)]
        s: BigInt,
        #[arg(long)]
        terms: usize,
    },
    /// Additive or Dirichlet convolution of two sequence files.
    Conv {
        #[arg(long, value_enum)]
        mode: ConvMode,
        a: PathBuf,
        b: PathBuf,
    },
    /// Termwise quotient of two sequence files.
    Quot { a: PathBuf, b: PathBuf },
    /// Search for factorizations into realizable pairs.
    Factor {
        #[arg(long)]
        max_results: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Smallest index where a polynomial sequence fails the realizability test.
    RefutePoly {
        /// Coefficients c0,c1,… of c0 + c1·n + ….
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, default_value_t = 100)]
        bound: usize,
    },
    /// Smallest failing index of a completely multiplicative sequence.
    RefuteCm {
        /// Prime values as p:v pairs, e.g. "2:3,3:1,5:1".
        #[arg(long)]
        primes: String,
        #[arg(long, default_value_t = 100)]
        bound: usize,
    },
    /// Realization in rate of ⌊n^α⌋ or ⌊βⁿ⌋.
    Rr {
        #[arg(long, conflicts_with = "beta", required_unless_present = "beta")]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Emit::Per)]
        emit: Emit,
    },
    /// Growth table of a positive sequence against n^α.
    Growth {
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value_t = 6)]
        places: u32,
    },
    /// Least-period counts of the super-exponential example.
    Pathology {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = PathologyEmit::Fstar)]
        emit: PathologyEmit,
    },
    /// Build a permutation from orbit counts and recount its fixed points.
    Oracle {
        #[arg(long, value_name = "FILE")]
        orbits: PathBuf,
        #[arg(long)]
        terms: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// trace(Bⁿ) for a non-negative matrix.
    Sft {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[command(flatten)]
        terms: Terms,
    },
    /// |det(Aⁿ - I)| for a matrix with determinant ±1.
    Toral {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[command(flatten)]
        terms: Terms,
    },
    /// C(kn, jn).
    Binom {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        j: u64,
        #[command(flatten)]
        terms: Terms,
    },
    /// Connected S-integer system.
    Sint {
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        /// Comma-separated primes.
        #[arg(long = "S", default_value = "")]
        primes: String,
        #[command(flatten)]
        terms: Terms,
    },
    /// Zero-dimensional S-integer example 2^(n - 2^v₂(n)).
    Sint0 {
        #[command(flatten)]
        terms: Terms,
    },
    /// Named construction.
    Named {
        #[arg(long)]
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        param: Option<String>,
        #[command(flatten)]
        terms: Terms,
    },
}

#[derive(Args)]
struct Terms {
    #[arg(long)]
    terms: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Jacobsthal,
    Mersenne,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvMode {
    Additive,
    Dirichlet,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Orbits,
    Per,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathologyEmit {
    Fstar,
    Per,
}

/// A domain or input error, reported on stderr with exit status 2.
#[derive(Debug)]
struct Failure(String);

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn fail<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure(msg.into()))
}

struct Io {
    input: Option<PathBuf>,
    format: Format,
}

impl Io {
    fn read_text(path: Option<&Path>) -> Result<(String, String), Failure> {
        match path {
            Some(p) if p != Path::new("-") => {
                let text = fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
                Ok((text, p.display().to_string()))
            }
            _ => {
                let mut text = String::new();
                io::stdin().read_to_string(&mut text)?;
                Ok((text, "<stdin>".into()))
            }
        }
    }

    fn read_from(&self, path: Option<&Path>) -> Result<Sequence, Failure> {
        let (text, label) = Self::read_text(path)?;
        parse_sequence(&text, self.format).map_err(|e| Failure(format!("{label}: {e}")))
    }

    fn read(&self) -> Result<Sequence, Failure> {
        self.read_from(self.input.as_deref())
    }

    fn render(&self, seq: &Sequence) -> String {
        render_sequence(seq, self.format)
    }
}

fn parse_matrix(text: &str) -> Result<IntMatrix, Failure> {
    IntMatrix::parse(text).map_err(|e| Failure(format!("--matrix: {e}")))
}

fn parse_rational_arg(flag: &str, text: &str) -> Result<periodic_orbits::Rational, Failure> {
    parse_rational(text).map_err(|e| Failure(format!("{flag}: {e}")))
}

// Comma-separated list with 1-based column diagnostics.
fn parse_list<T: std::str::FromStr>(flag: &str, text: &str) -> Result<Vec<T>, Failure> {
    let mut out = Vec::new();
    let mut col = 1;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        match piece.trim().parse() {
            Ok(v) => out.push(v),
            Err(_) => return fail(format!("{flag}: column {}: `{}` is not an integer", col + lead, piece.trim())),
        }
        col += piece.len() + 1;
    }
    Ok(out)
}

fn parse_prime_values(text: &str) -> Result<BTreeMap<u64, BigInt>, Failure> {
    let mut out = BTreeMap::new();
    let mut col = 1;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let entry = piece.trim();
        let parsed = entry
            .split_once(':')
            .and_then(|(p, v)| Some((p.trim().parse::<u64>().ok()?, v.trim().parse::<BigInt>().ok()?)));
        match parsed {
            Some((p, v)) => {
                out.insert(p, v);
            }
            None => return fail(format!("--primes: column {}: expected `p:value`, found `{entry}`", col + lead)),
        }
        col += piece.len() + 1;
    }
    Ok(out)
}

fn generate(kind: GenKind) -> Result<Sequence, Failure> {
    Ok(match kind {
        GenKind::Sft { matrix, terms } => {
            gen_sft_trace(&MatrixSpec::nonnegative(parse_matrix(&matrix)?)?, terms.terms)?
        }
        GenKind::Toral { matrix, terms } => {
            gen_toral_det(&MatrixSpec::invertible(parse_matrix(&matrix)?)?, terms.terms)?
        }
        GenKind::Binom { k, j, terms } => gen_binomial(BinomialSpec::new(k, j)?, terms.terms)?,
        GenKind::Sint { xi, primes, terms } => {
            let xi = parse_rational_arg("--xi", &xi)?;
            let primes = if primes.trim().is_empty() { Vec::new() } else { parse_list("--S", &primes)? };
            gen_s_integer_connected(&SIntegerSpec::new(xi, primes)?, terms.terms)?
        }
        GenKind::Sint0 { terms } => gen_s_integer_zero_dim_example(terms.terms)?,
        GenKind::Named { name, param, terms } => {
            gen_named(&NamedSequence::from_name(&name, param.as_deref())?, terms.terms)?
        }
    })
}

fn run(cli: Cli) -> Result<(String, ExitCode), Failure> {
    let io = Io { input: cli.input, format: cli.format.into() };
    let ok = |s: String| Ok((s, ExitCode::SUCCESS));
    match cli.command {
        Command::Per => ok(io.render(&per_transform(&io.read()?)?)),
        Command::Orbit => ok(io.render(&orbit_transform(&io.read()?)?)),
        Command::Fstar => ok(io.render(&least_period_counts(&io.read()?)?)),
        Command::Check => {
            let verdict = check_er(&io.read()?)?;
            let code = if verdict.is_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) };
            Ok((format!("{}\n{}\n", verdict.describe(), verdict.machine_line()), code))
        }
        Command::Gen { kind } => ok(io.render(&generate(kind)?)),
        Command::Iterate { steps, terms, start, .. } => {
            let start = match start {
                Some(path) => io.read_from(Some(&path))?,
                None => Sequence::delta(terms)?,
            };
            if start.len() < terms {
                return fail(format!("--start has {} terms, fewer than --terms {terms}", start.len()));
            }
            let rows = iterate_per(&start.truncate(terms)?, steps)?;
            let mut out = String::new();
            for (k, row) in rows.iter().enumerate() {
                if io.format == Format::Bfile {
                    let _ = writeln!(out, "# row {k}");
                }
                out.push_str(&io.render(row));
            }
            ok(out)
        }
        Command::Classify { a, b, u1, u2, terms } => {
            let v = classify(&RecurrenceSpec::new(a, b, u1, u2)?, terms)?;
            let mut out = String::new();
            let _ = writeln!(out, "applicability: {}", v.applicability.as_str());
            let _ = writeln!(out, "decision: {}", v.decision.map_or("undecided", Decision::as_str));
            let _ = writeln!(out, "witness-prime: {}", v.witness_prime.map_or("none".into(), |p| p.to_string()));
            let _ = writeln!(out, "empirical: {}", v.empirical.machine_line());
            if let Some(note) = &v.note {
                let _ = writeln!(out, "note: {note}");
            }
            let failed = v.decision == Some(Decision::NotInEr) || !v.empirical.is_pass();
            Ok((out, if failed { ExitCode::from(1) } else { ExitCode::SUCCESS }))
        }
        Command::Family { name, t, s, terms } => {
            let family = match name {
                FamilyArg::Jacobsthal => RatioFamily::Jacobsthal,
                FamilyArg::Mersenne => RatioFamily::Mersenne,
            };
            ok(io.render(&ratio_family(family, &t, &s, terms)?))
        }
        Command::Conv { mode, a, b } => {
            let (a, b) = (io.read_from(Some(&a))?, io.read_from(Some(&b))?);
            let c = match mode {
                ConvMode::Additive => additive_convolution(&a, &b)?,
                ConvMode::Dirichlet => dirichlet_convolution(&a, &b)?,
            };
            ok(io.render(&c))
        }
        Command::Quot { a, b } => {
            let (a, b) = (io.read_from(Some(&a))?, io.read_from(Some(&b))?);
            ok(io.render(&quotient_check(&a, &b)?))
        }
        Command::Factor { max_results, budget } => {
            let res = search_factorizations(&io.read()?, SearchBudget { max_results, max_nodes: budget })?;
            let mut out = format!(
                "# {} pair(s), {} non-trivial, search {}, {} nodes\n",
                res.pairs.len(),
                res.nontrivial().count(),
                if res.complete { "complete" } else { "incomplete" },
                res.nodes
            );
            for (b, c) in &res.pairs {
                let _ = writeln!(out, "{b} x {c}");
            }
            if res.prefix_prime() {
                out.push_str("# no non-trivial factorization of this prefix\n");
            }
            ok(out)
        }
        Command::RefutePoly { coeffs, bound } => {
            let coeffs: Vec<BigInt> = parse_list("--coeffs", &coeffs)?;
            ok(witness_line(refute_polynomial(&coeffs, bound)?, bound))
        }
        Command::RefuteCm { primes, bound } => {
            let values = parse_prime_values(&primes)?;
            ok(witness_line(refute_completely_multiplicative(&values, bound)?, bound))
        }
        Command::Rr { alpha, beta, terms, emit } => {
            let rr = match (alpha, beta) {
                (Some(a), _) => rr_construct_power(&parse_rational_arg("--alpha", &a)?, terms)?,
                (None, Some(b)) => rr_construct_geometric(&parse_rational_arg("--beta", &b)?, terms)?,
                (None, None) => return fail("one of --alpha or --beta is required"),
            };
            ok(match emit {
                Emit::Orbits => io.render(&rr.orbit_counts),
                Emit::Per => io.render(&rr.periodic_points),
                Emit::Both => format!(
                    "# orbits\n{}# per\n{}",
                    io.render(&rr.orbit_counts),
                    io.render(&rr.periodic_points)
                ),
            })
        }
        Command::Growth { alpha, places } => {
            let alpha = parse_rational_arg("--alpha", &alpha)?;
            ok(growth_report(&io.read()?, &alpha)?.render(places))
        }
        Command::Pathology { k, emit } => ok(io.render(&match emit {
            PathologyEmit::Fstar => gen_pathological_orbit_growth(k)?,
            PathologyEmit::Per => pathological_periodic_points(k)?,
        })),
        Command::Oracle { orbits, terms } => {
            let map = build_permutation(&io.read_from(Some(&orbits))?)?;
            let counts = map.periodic_point_counts(terms).into_iter().map(BigInt::from).collect();
            ok(io.render(&Sequence::new(counts)?))
        }
    }
}

fn witness_line(witness: Option<usize>, bound: usize) -> String {
    match witness {
        Some(n) => format!("witness n={n}\n"),
        None => format!("no witness up to N={bound}\n"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli) {
        Ok((text, code)) => {
            let written = match &output {
                Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
