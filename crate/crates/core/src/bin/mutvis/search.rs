use std::fs;
use std::path::Path;
use std::time::Duration;

use mutvis::constructions::{
    assemble_cylinder, embed_cylinder, extend_torus_to, torus_formula, CylinderLayout,
};
use mutvis::solver::mu_lower_bound_seeded;
use mutvis::{
    is_mutual_visibility_set, mu_exact, upper_bound, Error, ProductGraph, SolveOptions, VertexSet,
};

use crate::Status;

/// Closed forms tried outside the range they are proved for.
fn unproved_forms(g: &ProductGraph) -> Vec<VertexSet> {
    let mut found = Vec::new();
    match (g.fx.is_cycle(), g.fy.is_cycle()) {
        (true, true) => {
            let t = g.height();
            if g.width() >= t {
                let square = VertexSet::from_vertices(
                    ProductGraph::torus(t, t).expect("valid"),
                    torus_formula(t),
                );
                if let Ok(m) = square {
                    if is_mutual_visibility_set(&m).ok {
                        found.extend(extend_torus_to(&m, g.width()).ok());
                    }
                }
            }
        }
        (false, true) => {
            let t = g.height();
            if t >= 6 && g.width() + 1 >= t {
                let layouts =
                    std::iter::once(CylinderLayout::standard(t)).chain(CylinderLayout::all(t));
                let hit = layouts
                    .filter_map(|layout| assemble_cylinder(t, layout).ok())
                    .find(|m| is_mutual_visibility_set(m).ok);
                if let Some(m) = hit {
                    if g.width() + 1 == t {
                        found.push(m);
                    } else {
                        found.extend(embed_cylinder(&m, g.width()).ok());
                    }
                }
            }
        }
        _ => {}
    }
    found
}

pub fn run(
    g: &ProductGraph,
    timeout: Option<Duration>,
    seed: u64,
    threads: usize,
    out: Option<&Path>,
) -> mutvis::Result<Status> {
    let flip = g.fx.is_cycle() && !g.fy.is_cycle() || g.fx.is_cycle() && g.width() < g.height();
    let h = if flip { g.transpose() } else { *g };
    let ub = upper_bound(&h);
    let (_, mut best) = mu_lower_bound_seeded(&h, seed);
    for m in unproved_forms(&h) {
        if m.len() > best.len() && is_mutual_visibility_set(&m).ok {
            best = m;
        }
    }
    let mut status = Status::Ok;
    if best.len() < ub {
        let opts = SolveOptions {
            timeout,
            seed_lower_bound: Some(best.clone()),
            vertex_cap: usize::MAX,
            threads,
            seed,
        };
        match mu_exact(&h, &opts) {
            Ok(r) => {
                if !r.exhaustive {
                    status = Status::TimedOut;
                }
                best = r.witness;
            }
            Err(Error::VertexCapExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let best = if flip { best.transpose() } else { best };
    eprintln!("{}: found {} (upper bound {ub})", g, best.len());
    let text = format!("{}\n", best.to_json());
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(status)
}
