use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qeuler::render::{poly_csv, poset_json, verify_json, verify_text};
use qeuler::{Bounds, Suite, Threaded, SCHEMA};
use qeuler_core::posetlab::{self, Poset};
use qeuler_core::{genfun, Executor, Poly, Var};
use serde_json::json;

/// Largest `n` scanned by `poly` without `--force`.
const POLY_GUARD: usize = 11;
/// Largest `n` for `homology bn` without `--force`.
const HOMOLOGY_GUARD: usize = 5;

#[derive(Parser)]
#[command(name = "qeuler", version, about = "Exact q-Eulerian polynomials and identity verification")]
struct Cli {
    /// Worker threads for permutation scans.
    #[arg(long, global = true, env = "QEL_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a statistic polynomial over S_n.
    Poly {
        pair: Pair,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        /// Allow n above the guard.
        #[arg(long)]
        force: bool,
    },
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        suite: Suite,
        #[arg(long = "n", visible_alias = "N")]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
        /// Smaller default bounds.
        #[arg(long)]
        small: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reduced Betti numbers of the ideal below ([n], j) in a Rees product with C_n.
    Homology {
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        force: bool,
    },
    /// Dump a poset as JSON {elements, covers, ranks}.
    Poset {
        shape: Shape,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: Option<u32>,
        /// For `ideal`: which maximal element to cut below.
        #[arg(long)]
        j: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Pair {
    MajExc,
    AidDes,
    FixRefined,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Boolean lattice.
    Bn,
    /// Subspace lattice over F_q.
    Bnq,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Boolean,
    Chain,
    Subspace,
    Rees,
    Ideal,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = match cli.threads {
        Some(k) => Threaded::new(k),
        None => Threaded::available(),
    };
    match cli.command {
        Command::Poly { pair, n, json, csv, force } => poly(pair, n, json, csv, force, &exec),
        Command::Verify { suite, n, m, q, small, json } => verify(suite, Bounds { n, m, q, small }, json, &exec),
        Command::Homology { kind, n, j, q, json, force } => homology(kind, n, j, q, json, force),
        Command::Poset { shape, n, q, j } => poset(shape, n, q, j),
    }
}

fn poly(pair: Pair, n: usize, json: bool, csv: bool, force: bool, exec: &dyn Executor) -> ExitCode {
    if n > POLY_GUARD && !force {
        return usage(format!("n = {n} means scanning {n}! permutations; the limit is {POLY_GUARD} without --force"));
    }
    let start = Instant::now();
    let (p, vars, name): (Poly, &[Var], _) = match pair {
        Pair::MajExc => (genfun::maj_exc_poly_with(n, exec), &[Var::Q, Var::T], "maj-exc"),
        Pair::AidDes => (genfun::aid_des_poly_with(n, exec), &[Var::Q, Var::T], "aid-des"),
        Pair::FixRefined => (genfun::fix_refined_poly_with(n, exec), &[Var::Q, Var::T, Var::R], "fix-refined"),
    };
    if json {
        let v = json!({
            "schema": SCHEMA,
            "command": "poly",
            "parameters": {"statistic": name, "n": n},
            "output": p.to_string(),
            "wall_time_ms": start.elapsed().as_millis(),
        });
        println!("{v}");
    } else if csv {
        print!("{}", poly_csv(&p, vars));
    } else {
        println!("{p}");
    }
    ExitCode::SUCCESS
}

fn verify(suite: Suite, bounds: Bounds, json: bool, exec: &dyn Executor) -> ExitCode {
    let start = Instant::now();
    let runs = suite.run(&bounds, exec);
    let pass = runs.iter().all(|r| r.pass());
    if json {
        println!("{}", verify_json(suite.name(), &runs, start.elapsed().as_millis()));
    } else {
        print!("{}", verify_text(&runs));
        if suite == Suite::All {
            println!("all: {}", if pass { "PASS" } else { "FAIL" });
        }
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn homology(kind: Kind, n: usize, j: usize, q: Option<u32>, json: bool, force: bool) -> ExitCode {
    if n == 0 || j == 0 || j > n {
        return usage(format!("need 1 <= j <= n, got n = {n}, j = {j}"));
    }
    let q = match (kind, q) {
        (Kind::Bn, None) => None,
        (Kind::Bn, Some(_)) => return usage("--q only applies to bnq"),
        (Kind::Bnq, None) => return usage("bnq needs --q"),
        (Kind::Bnq, Some(q)) => Some(q),
    };
    if kind == Kind::Bn && n > HOMOLOGY_GUARD && !force {
        return usage(format!("n = {n} exceeds {HOMOLOGY_GUARD} without --force"));
    }
    let ideal = match posetlab::ideal(n, j, q) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let complex = ideal.order_complex();
    let betti = complex.betti_numbers();
    let name = match q {
        None => format!("I_{{{n},{j}}}"),
        Some(q) => format!("I_{{{n},{j}}}({q})"),
    };
    if json {
        let v = json!({
            "schema": SCHEMA,
            "command": "homology",
            "parameters": {"kind": if q.is_some() { "bnq" } else { "bn" }, "n": n, "j": j, "q": q},
            "elements": ideal.len(),
            "face_counts_from_minus_one": complex.face_counts(),
            "betti_from_minus_one": betti.from_minus_one(),
        });
        println!("{v}");
    } else {
        println!("{name}: {} elements, order complex of dimension {}", ideal.len(), complex.dim());
        let from = if complex.dim() < 0 { -1 } else { 0 };
        println!("reduced betti from dimension {from}: {betti}");
    }
    ExitCode::SUCCESS
}

fn poset(shape: Shape, n: usize, q: Option<u32>, j: Option<usize>) -> ExitCode {
    let built = match shape {
        Shape::Boolean if n <= 10 => Ok(Poset::boolean(n)),
        Shape::Boolean => return usage("boolean lattices are limited to n <= 10"),
        Shape::Chain => Ok(Poset::chain(n)),
        Shape::Subspace => Poset::subspace(q.unwrap_or(2), n),
        Shape::Rees => posetlab::rees_with_chain(n, q).map(|r| r.poset),
        Shape::Ideal => match j {
            Some(j) => posetlab::ideal(n, j, q),
            None => return usage("ideal needs --j"),
        },
    };
    match built {
        Ok(p) => {
            println!("{}", poset_json(&p));
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}
