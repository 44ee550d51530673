use std::path::Path;

use mutvis::constructions::{
    construct_cylinder, construct_torus_square, cross_pairs, embed_cylinder, expected_cross_pairs,
    extend_torus_to, fixtures, known_mu, torus_restated, Family,
};
use mutvis::{is_mutual_visibility_set, ProductGraph, VertexSet};

use crate::Status;

struct Failure(String);

fn verified(what: &str, m: &VertexSet, expected_len: usize) -> Result<(), Failure> {
    if m.len() != expected_len {
        return Err(Failure(format!(
            "{what}: {} members, expected {expected_len}",
            m.len()
        )));
    }
    match is_mutual_visibility_set(m).failing_pair {
        None => Ok(()),
        Some((u, v)) => Err(Failure(format!(
            "{what} on {}: {u} and {v} are not mutually visible",
            m.graph()
        ))),
    }
}

fn agrees_with_published(what: &str, g: &ProductGraph, value: usize) -> Result<(), Failure> {
    match known_mu(g) {
        Some(k) if k.value != value => Err(Failure(format!(
            "{what}: {g} has a set of size {value} but the {} gives {}",
            k.source, k.value
        ))),
        _ => Ok(()),
    }
}

fn torus(family: Family, t: usize) -> Result<(), Failure> {
    let what = format!("{family}, t={t}");
    let m = construct_torus_square(t).map_err(|e| Failure(format!("{what}: {e}")))?;
    verified(&what, &m, 3 * t)?;
    if let Some(restated) = torus_restated(t) {
        let other = VertexSet::from_vertices(*m.graph(), restated)
            .map_err(|e| Failure(format!("{what}: {e}")))?;
        if other != m {
            return Err(Failure(format!(
                "{what}: the two printed forms give different sets"
            )));
        }
    }
    if matches!(t % 6, 2 | 4) && cross_pairs(&m) != expected_cross_pairs(t) {
        return Err(Failure(format!(
            "{what}: cross pairs differ from the expected list"
        )));
    }
    agrees_with_published(&what, m.graph(), 3 * t)?;
    let wide = extend_torus_to(&m, 2 * t).map_err(|e| Failure(format!("{what}: {e}")))?;
    verified(&format!("{what}, extended to s={}", 2 * t), &wide, 3 * t)
}

fn cylinder(family: Family, t: usize) -> Result<(), Failure> {
    let what = format!("{family}, t={t}");
    let m = construct_cylinder(t).map_err(|e| Failure(format!("{what}: {e}")))?;
    verified(&what, &m, 2 * t)?;
    agrees_with_published(&what, m.graph(), 2 * t)?;
    let long = embed_cylinder(&m, t + 5).map_err(|e| Failure(format!("{what}: {e}")))?;
    verified(&format!("{what}, embedded in P{}", t + 5), &long, 2 * t)
}

fn all(ceiling: usize, fixture_dir: Option<&Path>) -> Result<(), Failure> {
    for family in Family::ALL {
        let sizes: Vec<usize> = family.sizes(ceiling).collect();
        for &t in &sizes {
            if family.is_torus() {
                torus(family, t)?;
            } else {
                cylinder(family, t)?;
            }
        }
        let listed: Vec<String> = sizes.iter().map(|t| t.to_string()).collect();
        println!(
            "ok  {family}: t = {}",
            if listed.is_empty() {
                "-".into()
            } else {
                listed.join(" ")
            }
        );
    }
    let shipped = match fixture_dir {
        Some(dir) => fixtures::load_dir(dir).map_err(|e| Failure(format!("fixtures: {e}")))?,
        None => fixtures::embedded(),
    };
    for f in &shipped {
        let what = format!("fixture {}", f.name);
        verified(&what, &f.set, f.set.len())?;
        agrees_with_published(&what, f.set.graph(), f.set.len())?;
    }
    println!("ok  {} fixtures", shipped.len());
    Ok(())
}

pub fn run(ceiling: usize, fixture_dir: Option<&Path>) -> mutvis::Result<Status> {
    match all(ceiling, fixture_dir) {
        Ok(()) => Ok(Status::Ok),
        Err(Failure(msg)) => {
            println!("FAIL {msg}");
            Ok(Status::Failed)
        }
    }
}
