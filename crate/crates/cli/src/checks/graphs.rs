use std::collections::BTreeSet;

use jacklr_petjohn::{
    eigenvalue_multiplicity, embeddings, intertwiner_generators, Embedding, JohnsonGraph, MysticPentagon, PetersenGraph,
    Subset,
};

use super::Context;
use crate::report::Outcome;
use crate::CliError;

/// The five squares of `ρ_P` for the pentagon 1-2-3-4-5, as in the figure.
pub const RHO_SQUARES: [[&str; 4]; 5] = [
    ["126", "124", "345", "356"],
    ["136", "456", "245", "123"],
    ["146", "236", "235", "145"],
    ["156", "135", "234", "246"],
    ["256", "346", "134", "125"],
];

fn paper(s: &str) -> Result<Subset, CliError> {
    Ok(Subset::from_paper(s)?)
}

pub fn graphs(_: &Context) -> Result<Vec<Outcome>, CliError> {
    let mut out = Vec::new();
    let pentagon = MysticPentagon::from_cycle(&[1, 2, 3, 4, 5])?;

    for square in RHO_SQUARES {
        let mut bad = Vec::new();
        for k in 0..4 {
            let (from, to) = (paper(square[k])?, paper(square[(k + 1) % 4])?);
            if pentagon.rho(from) != to {
                bad.push(format!("ρ({}) = {}", square[k], pentagon.rho(from).paper()));
            }
        }
        let mut c = Outcome::new(format!("ρ square {}", square.join(" → ")), bad.is_empty(), "pentagon 1-2-3-4-5");
        c.witnesses = bad;
        out.push(c);
    }

    let triples = Subset::all(3, false);
    let bad: Vec<String> = triples
        .iter()
        .filter(|&&t| pentagon.rho(pentagon.rho(t)) != t.complement())
        .map(|t| t.paper())
        .collect();
    let mut c = Outcome::new("ρ² is complementation", bad.is_empty(), format!("{} vertices of J(6,3)", triples.len()));
    c.witnesses = bad;
    out.push(c);

    let all = embeddings();
    let images: BTreeSet<Vec<Subset>> = all.iter().map(|e| e.image_set().into_iter().collect()).collect();
    let adjacency = all.iter().all(Embedding::preserves_adjacency);
    out.push(Outcome::new(
        "twelve distinct Petersen embeddings in J(6,3)",
        all.len() == 12 && images.len() == 12 && adjacency,
        format!("{} embeddings, {} distinct images, adjacency preserved: {adjacency}", all.len(), images.len()),
    ));

    let emb = Embedding::new(pentagon);
    let mut bad = Vec::new();
    let generators = intertwiner_generators();
    for &((i, j), s) in &generators {
        let swap = |e: u8| if e == i { j } else if e == j { i } else { e };
        for &(d, t) in emb.pairs() {
            let moved = Subset::from_elems(&d.elems().iter().map(|&e| swap(e)).collect::<Vec<_>>());
            if s.apply(t) != emb.image(moved) {
                bad.push(format!("s{i}{j} at {}", d.paper()));
            }
        }
    }
    let mut c = Outcome::new(
        "intertwiners satisfy s_ij γ = γ σ_ij",
        bad.is_empty(),
        format!("{} generators on all ten vertices", generators.len()),
    );
    c.witnesses = bad;
    out.push(c);

    let pet = PetersenGraph::new();
    let pm: Vec<usize> = [3, 1, -2].iter().map(|&k| eigenvalue_multiplicity(&pet, k)).collect();
    out.push(Outcome::new("Petersen spectrum 3¹ 1⁵ (−2)⁴", pm == [1, 5, 4], format!("{pm:?}")));
    let john = JohnsonGraph::new();
    let jm: Vec<usize> = [9, 3, -1, -3].iter().map(|&k| eigenvalue_multiplicity(&john, k)).collect();
    out.push(Outcome::new("J(6,3) spectrum 9¹ 3⁵ (−1)⁹ (−3)⁵", jm == [1, 5, 9, 5], format!("{jm:?}")));
    Ok(out)
}
