use std::collections::BTreeSet;

use jacklr_petjohn::*;

fn paper(s: &str) -> Subset {
    Subset::from_paper(s).unwrap()
}

fn standard() -> MysticPentagon {
    MysticPentagon::from_cycle(&[1, 2, 3, 4, 5]).unwrap()
}

#[test]
fn graph_shapes() {
    let p = PetersenGraph::new();
    assert_eq!(p.vertices().len(), 10);
    assert_eq!(p.edge_count(), 15);
    assert!(p.degrees().iter().all(|&d| d == 3));
    assert_eq!(p.girth(), Some(5));

    let j = JohnsonGraph::new();
    assert_eq!(j.vertices().len(), 20);
    assert_eq!(j.edge_count(), 90);
    assert!(j.degrees().iter().all(|&d| d == 9));
}

#[test]
fn spectra() {
    let p = PetersenGraph::new();
    let mults: Vec<usize> = [3, 1, -2].iter().map(|&k| eigenvalue_multiplicity(&p, k)).collect();
    assert_eq!(mults, [1, 5, 4]);
    let j = JohnsonGraph::new();
    let mults: Vec<usize> = [9, 3, -1, -3].iter().map(|&k| eigenvalue_multiplicity(&j, k)).collect();
    assert_eq!(mults, [1, 5, 9, 5]);
    assert_eq!(mults.iter().sum::<usize>(), 20);
}

#[test]
fn pentad_of_standard_pentagon() {
    let pentad = pentad_from_pentagon(&standard());
    let text: BTreeSet<String> = pentad
        .0
        .iter()
        .map(|s| {
            let mut d: Vec<String> = s.0.iter().map(|x| x.paper()).collect();
            d.sort();
            d.join("/")
        })
        .collect();
    for expected in ["12/35/46", "14/23/56", "16/25/34", "13/26/45", "15/24/36"] {
        assert!(text.contains(expected), "{expected} missing from {text:?}");
    }
    assert!(pentad.covers_each_duad_once());
    assert_eq!(pentad.0.len() * 3, 15);
}

#[test]
fn invalid_pentagon() {
    let bad = [paper("12"), paper("23"), paper("13"), paper("45"), paper("15")];
    assert!(MysticPentagon::new(&bad).is_err());
    assert!(MysticPentagon::new(&bad[..4]).is_err());
}

#[test]
fn six_pentagons() {
    let all = all_pentagons();
    assert_eq!(all.len(), 6);
    for p in &all {
        assert_eq!(p.swap_colours().swap_colours(), *p);
        assert!(pentad_from_pentagon(p).covers_each_duad_once());
    }
}

#[test]
fn rho_four_cycles() {
    let p = standard();
    for cycle in [["126", "124", "345", "356"], ["136", "456", "245", "123"], ["146", "236", "235", "145"], ["156", "135", "234", "246"], ["256", "346", "134", "125"]] {
        for k in 0..4 {
            assert_eq!(p.rho(paper(cycle[k])), paper(cycle[(k + 1) % 4]), "from {}", cycle[k]);
        }
    }
    for t in Subset::all(3, false) {
        assert_eq!(p.rho(p.rho(t)), t.complement());
    }
}

#[test]
fn rho_swaps_distances_one_and_two() {
    for p in all_pentagons() {
        let triples = Subset::all(3, false);
        for &t in &triples {
            for &u in &triples {
                assert_eq!(t.distance(u) == 2, p.rho(t).distance(p.rho(u)) == 1);
            }
        }
    }
}

#[test]
fn gamma_embedding() {
    let emb = Embedding::new(standard());
    let expected = [("12", "124"), ("13", "456"), ("14", "236"), ("15", "135"), ("23", "235"), ("24", "156"), ("25", "346"), ("34", "134"), ("35", "126"), ("45", "245")];
    for (d, t) in expected {
        assert_eq!(emb.image(paper(d)), paper(t), "γ({d})");
    }
    assert!(emb.preserves_adjacency());
    let image = emb.image_set();
    let complement: BTreeSet<Subset> = image.iter().map(|t| t.complement()).collect();
    assert!(image.is_disjoint(&complement));
    assert_eq!(image.len() + complement.len(), 20);
}

#[test]
fn twelve_embeddings() {
    let all = embeddings();
    assert_eq!(all.len(), 12);
    assert!(all.iter().all(Embedding::preserves_adjacency));
    let images: BTreeSet<Vec<Subset>> = all.iter().map(|e| e.image_set().into_iter().collect()).collect();
    assert_eq!(images.len(), 12);
}

#[test]
fn intertwiners() {
    let emb = Embedding::new(standard());
    for ((i, j), s) in intertwiner_generators() {
        let sigma = |d: Subset| {
            let swap = |e: u8| if e == i { j } else if e == j { i } else { e };
            Subset::from_elems(&d.elems().iter().map(|&e| swap(e)).collect::<Vec<_>>())
        };
        for &(d, t) in emb.pairs() {
            assert_eq!(s.apply(t), emb.image(sigma(d)), "s{i}{j} at {}", d.paper());
        }
        let sq = s.compose(&s);
        assert!(Subset::all(3, false).into_iter().all(|t| sq.apply(t) == t));
    }
    let (_, s12) = intertwiner_generators()[0];
    assert_eq!(s12.apply(emb.image(paper("13"))), emb.image(paper("23")));
}

#[test]
fn sigma56_signed_map() {
    let s = sigma56_on_ell();
    assert_eq!(s.image(paper("15")), (1, paper("15")));
    assert_eq!(s.image(paper("23")), (-1, paper("14")));
    assert_eq!(s.image(paper("12")), (-1, paper("34")));
    assert_eq!(s.image(paper("24")), (-1, paper("13")));
    for fixed in ["45", "35", "25", "15"] {
        assert_eq!(s.image(paper(fixed)), (1, paper(fixed)));
    }
    assert!(s.compose(&s).is_identity());
}

#[test]
fn sigma56_preserves_claw_span() {
    // cl_b = ℓ_b − Σ_{a~b} ℓ_a as integer vectors over the Petersen vertices.
    let pet = PetersenGraph::new();
    let n = 10;
    let claw = |b: usize| -> Vec<i64> {
        let mut v = vec![0; n];
        v[b] = 1;
        for a in pet.neighbours(b) {
            v[a] = -1;
        }
        v
    };
    let s = sigma56_on_ell();
    let act = |v: &[i64]| -> Vec<i64> {
        let mut out = vec![0; n];
        for (i, &c) in v.iter().enumerate() {
            let (sign, img) = s.image(pet.vertices()[i]);
            out[pet.index_of(img).unwrap()] += sign * c;
        }
        out
    };
    let i15 = pet.index_of(paper("15")).unwrap();
    let expected: Vec<i64> = claw(pet.index_of(paper("25")).unwrap())
        .iter()
        .zip(claw(pet.index_of(paper("34")).unwrap()))
        .map(|(a, b)| -a - b)
        .collect();
    assert_eq!(act(&claw(i15)), expected);
    let i24 = pet.index_of(paper("24")).unwrap();
    assert_eq!(act(&claw(i24)), claw(i24));
}

#[test]
fn appendix_labels_match_an_embedding() {
    // Edges of the drawn Petersen graph on the boxes, by name.
    let edges = [
        ("c4", "c2"), ("c2", "bt3"), ("bt3", "a1"), ("a1", "c5"), ("c5", "c4"),
        ("c4", "c3"), ("c2", "a3"), ("bt3", "b2"), ("a1", "a2"), ("c5", "b1"),
        ("c3", "b2"), ("b2", "b1"), ("b1", "a3"), ("a3", "a2"), ("a2", "c3"),
    ];
    let name = |i: usize| APPENDIX_LABELS[i].0;
    let adjacent = |i: usize, j: usize| edges.iter().any(|&(a, b)| (a, b) == (name(i), name(j)) || (b, a) == (name(i), name(j)));
    let all = embeddings();
    let matches = match_appendix_labels(&all, adjacent);
    assert_eq!(matches.len(), 2);
    // One pentagon and its colour swap; the labels are the exact image of
    // the white cycle 1-2-5-4-3, not of the pentagon used for ψ.
    let exact = MysticPentagon::from_cycle(&[1, 2, 5, 4, 3]).unwrap();
    let emb = &all[matches[0]];
    assert_eq!(*emb.pentagon(), exact);
    assert_eq!(*all[matches[1]].pentagon(), exact.swap_colours());
    for (_, label) in APPENDIX_LABELS {
        assert!(emb.preimage(Subset::parse(label).unwrap()).is_some());
    }
    let standard_index = all.iter().position(|e| *e.pentagon() == standard()).unwrap();
    assert!(!matches.contains(&standard_index));
}
