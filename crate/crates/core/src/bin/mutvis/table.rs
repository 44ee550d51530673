use std::fmt::Write as _;
use std::time::Duration;

use clap::ValueEnum;

use mutvis::constructions::known_mu;
use mutvis::solver::mu_lower_bound_seeded;
use mutvis::{mu_exact, upper_bound, ProductGraph, SolveOptions};

use crate::Status;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "PC", alias = "pc")]
    Pc,
    #[value(name = "CC", alias = "cc")]
    Cc,
}

enum Value {
    Exact(usize),
    Range(usize, usize),
}

const CELL: usize = 9;

pub fn run(
    which: Which,
    max_t: usize,
    max_s: usize,
    timeout: Duration,
    seed: u64,
    threads: usize,
) -> mutvis::Result<Status> {
    let mut out = String::new();
    let name = match which {
        Which::Pc => "P_s x C_t",
        Which::Cc => "C_s x C_t",
    };
    let _ = write!(out, "{name:<CELL$}");
    for s in 3..=max_s {
        let _ = write!(out, "{:>CELL$}", format!("s={s}"));
    }
    out.push('\n');
    let mut mismatches = Vec::new();
    for t in 3..=max_t {
        let _ = write!(out, "{:<CELL$}", format!("t={t}"));
        for s in 3..=max_s {
            let g = match which {
                Which::Pc => ProductGraph::cylinder(s, t)?,
                Which::Cc if s >= t => ProductGraph::torus(s, t)?,
                Which::Cc => {
                    let _ = write!(out, "{:>CELL$}", "");
                    continue;
                }
            };
            let value = cell(&g, timeout, seed, threads)?;
            let known = known_mu(&g).map(|k| k.value);
            let (text, mark) = match (&value, known) {
                (Value::Exact(v), Some(k)) if *v == k => (v.to_string(), '='),
                (Value::Exact(v), None) => (v.to_string(), ' '),
                (Value::Range(lb, ub), Some(k)) if (*lb..=*ub).contains(&k) => {
                    (format!("{lb}-{ub}"), '~')
                }
                (Value::Range(lb, ub), None) => (format!("{lb}-{ub}"), ' '),
                (Value::Exact(v), Some(k)) => {
                    mismatches.push(format!("{g}: computed {v}, published {k}"));
                    (v.to_string(), '!')
                }
                (Value::Range(lb, ub), Some(k)) => {
                    mismatches.push(format!("{g}: computed range {lb}..{ub}, published {k}"));
                    (format!("{lb}-{ub}"), '!')
                }
            };
            let _ = write!(out, "{:>CELL$}", format!("{text}{mark}"));
        }
        out.push('\n');
    }
    out.push_str("= matches published value, ~ published value within bounds, ! mismatch; a-b: a <= mu <= b\n");
    print!("{out}");
    for m in &mismatches {
        eprintln!("MISMATCH {m}");
    }
    Ok(if mismatches.is_empty() {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn cell(g: &ProductGraph, timeout: Duration, seed: u64, threads: usize) -> mutvis::Result<Value> {
    let (lb, witness) = mu_lower_bound_seeded(g, seed);
    let ub = upper_bound(g);
    if lb == ub {
        return Ok(Value::Exact(lb));
    }
    let opts = SolveOptions {
        timeout: Some(timeout),
        seed_lower_bound: Some(witness),
        threads,
        seed,
        ..Default::default()
    };
    match mu_exact(g, &opts) {
        Ok(r) if r.exhaustive => Ok(Value::Exact(r.mu)),
        Ok(r) => Ok(Value::Range(r.mu, ub)),
        Err(mutvis::Error::VertexCapExceeded { .. }) => Ok(Value::Range(lb, ub)),
        Err(e) => Err(e),
    }
}
