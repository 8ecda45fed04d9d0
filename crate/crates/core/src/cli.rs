//! The `frobdim` command line.
//!
//! Exit codes: 0 success, 1 parse or precondition error, 2 a formula was
//! required for an unclassifiable quiver, 3 verification failure.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::algebra::{Element, PathAlgebra};
use crate::classify::classify;
use crate::corpus;
use crate::error::{Error, Result};
use crate::format::{parse_quiver_file, write_quiver, QuiverFile};
use crate::frobenius::{
    agrees, coproduct_of, frobdim_formula, frobdim_oracle, tensor_terms, FormulaResult, FrobeniusSpace, Tensor,
};
use crate::quiver::{enumerate_mutation_class, Quiver, Vertex};
use crate::relations::bound_quiver_from_file;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNCLASSIFIED: i32 = 2;
pub const EXIT_FAIL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "frobdim", version, about = "Frobenius dimension of cluster-tilted algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Dynkin {
    A,
    D,
    E6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Forks with a tail.
    #[value(name = "d1")]
    DI,
    /// The sub-II core with two chains.
    #[value(name = "d2")]
    DII,
    /// The square with two decorated 3-cycles.
    #[value(name = "d3")]
    DIII,
    /// Central cycles of length 3 to 6 with every spike pattern.
    #[value(name = "d4")]
    DIV,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the classification as one line.
    Classify { file: PathBuf },
    /// Print the relations of the bound quiver.
    Relations { file: PathBuf },
    /// Print one line per basis class of the algebra.
    Basis { file: PathBuf },
    /// Mutate at a vertex and print (or write) the result.
    Mutate {
        file: PathBuf,
        #[arg(long)]
        vertex: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Frobenius dimension by formula, oracle or both.
    Frobdim {
        file: PathBuf,
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[arg(long)]
        show_basis: bool,
        #[arg(long)]
        show_coproducts: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Enumerate a mutation class up to isomorphism.
    Enumerate {
        #[arg(long, conflicts_with = "type")]
        seed: Option<PathBuf>,
        #[arg(long = "type", value_enum, requires = "rank")]
        r#type: Option<Dynkin>,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
        /// Also print every class.
        #[arg(long)]
        list: bool,
    },
    /// Compare formula and oracle over a corpus.
    Verify {
        /// A single quiver file.
        file: Option<PathBuf>,
        /// Verify the whole mutation class of this quiver.
        #[arg(long)]
        seed: Option<PathBuf>,
        #[arg(long = "type", value_enum, requires = "rank")]
        r#type: Option<Dynkin>,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Unclassified => EXIT_UNCLASSIFIED,
                _ => EXIT_ERROR,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn read_file(path: &PathBuf) -> Result<QuiverFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_quiver_file(&text)
}

fn seed_of(kind: Dynkin, rank: u32) -> Result<Quiver> {
    match (kind, rank) {
        (Dynkin::A, n) if n >= 1 => Ok(corpus::linear_a(n)),
        (Dynkin::D, n) if n >= 4 => Ok(corpus::d_seed(n)),
        (Dynkin::E6, 6) => Ok(corpus::e6_seed()),
        (k, n) => Err(Error::Precondition(format!("no seed for type {k:?} of rank {n}"))),
    }
}

fn family(f: Family) -> Vec<Quiver> {
    match f {
        Family::DI => (0..=4)
            .flat_map(|t| [corpus::d_i_fork(t, false), corpus::d_i_fork(t, true)])
            .collect(),
        Family::DII => (1..=4)
            .flat_map(|n| (1..=4).map(move |m| corpus::d_ii_example(n, m)))
            .collect(),
        Family::DIII => {
            let mut v = vec![corpus::d_iii_square()];
            for i in 0..256u32 {
                let t = [i & 3, i >> 2 & 3, i >> 4 & 3, i >> 6 & 3];
                v.push(corpus::d_iii_with_tails(t));
            }
            v
        }
        Family::DIV => (3..=6)
            .flat_map(|k| (0..1u32 << k).map(move |m| corpus::d_iv(k, m)))
            .collect(),
    }
}

/// `1>2 2>3 ...` in arrow order.
fn compact(q: &Quiver) -> String {
    let parts: Vec<String> = q.arrows().iter().map(|a| format!("{}>{}", a.source, a.target)).collect();
    format!("n={} {}", q.n_vertices(), parts.join(" "))
}

fn tensor_line(a: &PathAlgebra, t: &Tensor) -> String {
    if t.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = tensor_terms(a, t).map(|(c, p, q)| format!("{c} * ({p}) (x) ({q})")).collect();
    parts.join(" + ")
}

fn write_formula(out: &mut dyn Write, f: &FormulaResult) -> std::io::Result<()> {
    writeln!(out, "formula.kind: {}", f.kind)?;
    writeln!(out, "formula.value: {}", f.value)?;
    for p in &f.basis_paths {
        writeln!(out, "formula.basis_path: {p}")?;
    }
    for s in &f.special {
        writeln!(out, "formula.special: {} {} {}", s.vertex, s.into, s.out)?;
    }
    writeln!(out, "formula: {}", f.value)
}

fn write_coproducts(out: &mut dyn Write, a: &PathAlgebra, s: &FrobeniusSpace) -> Result<()> {
    for k in 0..s.dim {
        writeln!(out, "structure {k}").map_err(io)?;
        for &v in a.quiver().vertices() {
            let e = Element::basis(a.idempotent(v)?);
            let t = coproduct_of(s, a, k, &e)?;
            for (c, p, q) in tensor_terms(a, &t) {
                writeln!(out, "Delta(e_{v}) += {c} * ({p}) (x) ({q})").map_err(io)?;
            }
        }
    }
    Ok(())
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Classify { file } => {
            let f = read_file(file)?;
            let label = classify(&f.quiver)?;
            writeln!(out, "class: {label} hereditary={}", label.hereditary).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Relations { file } => {
            let bq = bound_quiver_from_file(&read_file(file)?)?;
            for r in &bq.relations {
                writeln!(out, "{r}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Basis { file } => {
            let bq = bound_quiver_from_file(&read_file(file)?)?;
            let a = PathAlgebra::build(&bq)?;
            write!(out, "{a}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Mutate { file, vertex, out: dest } => {
            let q = read_file(file)?.quiver.mutate(Vertex(*vertex))?;
            let text = write_quiver(&q, &[])?;
            match dest {
                Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Frobdim {
            file,
            method,
            show_basis,
            show_coproducts,
            timing,
        } => frobdim_cmd(file, *method, *show_basis, *show_coproducts, *timing, out),
        Command::Enumerate {
            seed,
            r#type,
            rank,
            limit,
            list,
        } => {
            let q = match (seed, r#type) {
                (Some(p), _) => read_file(p)?.quiver,
                (None, Some(t)) => seed_of(*t, rank.unwrap_or(0))?,
                (None, None) => return Err(Error::Precondition("give --seed or --type with --rank".into())),
            };
            let classes = enumerate_mutation_class(&q, *limit)?;
            writeln!(out, "classes: {}", classes.len()).map_err(io)?;
            if *list {
                for (i, c) in classes.iter().enumerate() {
                    writeln!(out, "quiver {i}: {}", compact(c)).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            file,
            seed,
            r#type,
            rank,
            family: fam,
            limit,
        } => {
            let members: Vec<QuiverFile> = if let Some(p) = file {
                vec![read_file(p)?]
            } else {
                let quivers = if let Some(p) = seed {
                    enumerate_mutation_class(&read_file(p)?.quiver, *limit)?
                } else if let Some(t) = r#type {
                    enumerate_mutation_class(&seed_of(*t, rank.unwrap_or(0))?, *limit)?
                } else if let Some(f) = fam {
                    family(*f)
                } else {
                    return Err(Error::Precondition("give a file, --seed, --type or --family".into()));
                };
                quivers
                    .into_iter()
                    .map(|quiver| QuiverFile {
                        quiver,
                        relations: None,
                    })
                    .collect()
            };
            verify_cmd(&members, out)
        }
    }
}

fn frobdim_cmd(
    file: &PathBuf,
    method: Option<Method>,
    show_basis: bool,
    show_coproducts: bool,
    timing: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let start = Instant::now();
    let f = read_file(file)?;
    let label = classify(&f.quiver)?;
    let method = method.unwrap_or(if label.is_unknown() { Method::Oracle } else { Method::Both });
    if label.is_unknown() && method != Method::Oracle {
        writeln!(out, "class: unknown").map_err(io)?;
        return Err(Error::Unclassified);
    }
    let bq = bound_quiver_from_file(&f)?;
    let a = PathAlgebra::build(&bq)?;
    writeln!(out, "class: {label}").map_err(io)?;
    writeln!(out, "hereditary: {}", label.hereditary).map_err(io)?;
    writeln!(out, "algebra.dim: {}", a.dim()).map_err(io)?;

    let formula = match method {
        Method::Formula | Method::Both => {
            let r = frobdim_formula(&a, &label)?;
            write_formula(out, &r).map_err(io)?;
            Some(r)
        }
        Method::Oracle => None,
    };
    let oracle = match method {
        Method::Oracle | Method::Both => {
            let s = frobdim_oracle(&a);
            writeln!(out, "oracle.dim: {}", s.dim).map_err(io)?;
            writeln!(out, "oracle: {}", s.dim).map_err(io)?;
            if show_basis {
                for (k, z) in s.basis.iter().enumerate() {
                    writeln!(out, "tensor {k}: {}", tensor_line(&a, z)).map_err(io)?;
                }
            }
            if show_coproducts {
                write_coproducts(out, &a, &s)?;
            }
            Some(s)
        }
        Method::Formula => None,
    };
    let mut code = EXIT_OK;
    if let (Some(f), Some(s)) = (&formula, &oracle) {
        let pass = agrees(f, s.dim);
        writeln!(out, "verdict: {}", if pass { "PASS" } else { "FAIL" }).map_err(io)?;
        if !pass {
            code = EXIT_FAIL;
        }
    }
    if timing {
        writeln!(out, "time.ms: {}", start.elapsed().as_millis()).map_err(io)?;
    }
    Ok(code)
}

struct Row {
    line: String,
    pass: bool,
}

/// Explicit relations in the file take precedence over generated ones.
fn verify_one(file: &QuiverFile) -> Result<Row> {
    let q = &file.quiver;
    let label = classify(q)?;
    let Ok(bq) = bound_quiver_from_file(file) else {
        return Ok(Row {
            line: format!("class=unknown formula=not-applicable oracle=- PASS {}", compact(q)),
            pass: true,
        });
    };
    let a = PathAlgebra::build(&bq)?;
    let f = frobdim_formula(&a, &label)?;
    let dim = frobdim_oracle(&a).dim;
    let pass = agrees(&f, dim);
    Ok(Row {
        line: format!(
            "class={} formula={}:{} oracle={} {} {}",
            label.tag(),
            f.kind,
            f.value,
            dim,
            if pass { "PASS" } else { "FAIL" },
            compact(q)
        ),
        pass,
    })
}

fn verify_cmd(members: &[QuiverFile], out: &mut dyn Write) -> Result<i32> {
    let rows: Vec<Result<Row>> = members.par_iter().map(verify_one).collect();
    let mut failures = 0;
    for (i, r) in rows.into_iter().enumerate() {
        let r = r?;
        if !r.pass {
            failures += 1;
        }
        writeln!(out, "member {i}: {}", r.line).map_err(io)?;
    }
    writeln!(out, "members: {}", members.len()).map_err(io)?;
    writeln!(out, "failures: {failures}").map_err(io)?;
    writeln!(out, "verdict: {}", if failures == 0 { "PASS" } else { "FAIL" }).map_err(io)?;
    Ok(if failures == 0 { EXIT_OK } else { EXIT_FAIL })
}
