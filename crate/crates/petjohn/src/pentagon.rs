use std::collections::BTreeSet;
use std::fmt;

use crate::{PetJohnError, PetersenGraph, Subset};

/// A 2-colouring of the edges of `K_5` (on five of the six elements) whose
/// white edges form a 5-cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MysticPentagon {
    white: BTreeSet<Subset>,
    support: Subset,
}

impl MysticPentagon {
    pub fn new(white: &[Subset]) -> Result<Self, PetJohnError> {
        let set: BTreeSet<Subset> = white.iter().copied().collect();
        if set.len() != 5 || set.iter().any(|d| d.len() != 2) {
            return Err(PetJohnError::InvalidPentagon("need five distinct duads".into()));
        }
        let support = set.iter().fold(Subset(0), |acc, &d| acc.union(d));
        if support.len() != 5 {
            return Err(PetJohnError::InvalidPentagon(format!("edges span {} vertices", support.len())));
        }
        // Five vertices of degree two can only form a single 5-cycle.
        for v in support.elems() {
            if set.iter().filter(|d| d.contains(v)).count() != 2 {
                return Err(PetJohnError::InvalidPentagon(format!("vertex {v} is not of degree 2")));
            }
        }
        Ok(MysticPentagon { white: set, support })
    }

    /// White cycle through the listed vertices, paper labels (`6` is `0`).
    pub fn from_cycle(cycle: &[u8]) -> Result<Self, PetJohnError> {
        let v: Vec<u8> = cycle.iter().map(|&e| e % 6).collect();
        let edges: Vec<Subset> = (0..v.len())
            .map(|i| Subset::from_elems(&[v[i], v[(i + 1) % v.len()]]))
            .collect();
        Self::new(&edges)
    }

    /// The element outside the pentagon, `q`.
    pub fn excluded(&self) -> u8 {
        self.support.complement().elems()[0]
    }

    pub fn is_white(&self, d: Subset) -> bool {
        self.white.contains(&d)
    }

    pub fn white_edges(&self) -> Vec<Subset> {
        self.white.iter().copied().collect()
    }

    pub fn black_edges(&self) -> Vec<Subset> {
        let v = self.support.elems();
        let mut out = Vec::new();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                let d = Subset::from_elems(&[v[i], v[j]]);
                if !self.is_white(d) {
                    out.push(d);
                }
            }
        }
        out
    }

    pub fn swap_colours(&self) -> Self {
        MysticPentagon::new(&self.black_edges()).expect("complement of a 5-cycle in K5 is a 5-cycle")
    }

    /// `ρ_P(T) = ±D(T)`, where `−` means complement. A 3-subset and its
    /// complement share the duad `d_T`; the cycle direction follows the
    /// five 4-cycles drawn in the paper.
    pub fn rho(&self, t: Subset) -> Subset {
        let q = self.excluded();
        let q_set = Subset::from_elems(&[q]);
        let with_q = if t.contains(q) { t } else { t.complement() };
        let d = with_q.minus(q_set);
        let pentad = pentad_from_pentagon(self);
        let syn = pentad.syntheme_containing(d).expect("every duad lies in one syntheme");
        let partner = syn.0.iter().copied().find(|&x| x != d && !x.contains(q)).unwrap();
        let image = partner.union(q_set);
        let mut sign = if t.contains(q) { 1 } else { -1 };
        if self.is_white(d) {
            sign = -sign;
        }
        if sign > 0 {
            image
        } else {
            image.complement()
        }
    }
}

/// A perfect matching of `{0,..,5}` into three duads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syntheme(pub [Subset; 3]);

impl Syntheme {
    pub fn contains(&self, d: Subset) -> bool {
        self.0.contains(&d)
    }
}

impl fmt::Display for Syntheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.0[0], self.0[1], self.0[2])
    }
}

/// Five synthemes covering every duad exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pentad(pub Vec<Syntheme>);

impl Pentad {
    pub fn syntheme_containing(&self, d: Subset) -> Option<&Syntheme> {
        self.0.iter().find(|s| s.contains(d))
    }

    pub fn covers_each_duad_once(&self) -> bool {
        Subset::all(2, false)
            .into_iter()
            .all(|d| self.0.iter().filter(|s| s.contains(d)).count() == 1)
    }
}

/// Each white edge `A` pairs with the unique black edge `B` disjoint from it;
/// the leftover vertex `e` joins `q` as the third duad.
pub fn pentad_from_pentagon(p: &MysticPentagon) -> Pentad {
    let q = p.excluded();
    let black = p.black_edges();
    let synthemes = p
        .white
        .iter()
        .map(|&a| {
            let b = black.iter().copied().find(|b| b.is_disjoint(a)).unwrap();
            let e = p.support.minus(a).minus(b).elems()[0];
            Syntheme([a, b, Subset::from_elems(&[e, q])])
        })
        .collect();
    Pentad(synthemes)
}

/// The six mystic pentagons on `{1,..,5}`, each with its white cycle through
/// the edge `12`.
pub fn all_pentagons() -> Vec<MysticPentagon> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let rest = [3u8, 4, 5];
    for a in rest {
        for b in rest {
            for c in rest {
                if a == b || b == c || a == c {
                    continue;
                }
                let p = MysticPentagon::from_cycle(&[1, 2, a, b, c]).unwrap();
                if seen.insert(p.white_edges()) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// `γ_P : (ij) ↦ ρ_P(ij ∪ {q})` on the Petersen vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pentagon: MysticPentagon,
    images: Vec<(Subset, Subset)>,
}

impl Embedding {
    pub fn new(pentagon: MysticPentagon) -> Self {
        let q = Subset::from_elems(&[pentagon.excluded()]);
        let images = PetersenGraph::new()
            .vertices()
            .iter()
            .map(|&d| (d, pentagon.rho(d.union(q))))
            .collect();
        Embedding { pentagon, images }
    }

    pub fn pentagon(&self) -> &MysticPentagon {
        &self.pentagon
    }

    pub fn image(&self, d: Subset) -> Subset {
        self.images.iter().find(|(v, _)| *v == d).expect("Petersen vertex").1
    }

    pub fn preimage(&self, t: Subset) -> Option<Subset> {
        self.images.iter().find(|(_, w)| *w == t).map(|(v, _)| *v)
    }

    pub fn pairs(&self) -> &[(Subset, Subset)] {
        &self.images
    }

    pub fn image_set(&self) -> BTreeSet<Subset> {
        self.images.iter().map(|&(_, t)| t).collect()
    }

    /// Adjacent Petersen vertices land on adjacent Johnson vertices.
    pub fn preserves_adjacency(&self) -> bool {
        let pet = PetersenGraph::new();
        self.images.iter().all(|&(a, ta)| {
            self.images
                .iter()
                .all(|&(b, tb)| !(pet.adjacent(pet.index_of(a).unwrap(), pet.index_of(b).unwrap())) || ta.distance(tb) == 1)
        })
    }
}

/// All twelve embeddings: six pentagons, each with both colourings.
pub fn embeddings() -> Vec<Embedding> {
    all_pentagons()
        .into_iter()
        .flat_map(|p| {
            let swapped = p.swap_colours();
            [Embedding::new(p), Embedding::new(swapped)]
        })
        .collect()
}
