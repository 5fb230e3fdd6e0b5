//! Signed permutations of `[6]`, the intertwiners of the standard embedding,
//! and the induced action of `σ56` on the ℓ-variables.

use std::collections::BTreeMap;

use crate::{Embedding, MysticPentagon, PetersenGraph, Subset};

/// A permutation of `{0,..,5}` optionally followed by complementation,
/// acting on subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub perm: [u8; 6],
    pub negate: bool,
}

impl SignedPerm {
    pub fn identity() -> Self {
        SignedPerm { perm: [0, 1, 2, 3, 4, 5], negate: false }
    }

    /// Disjoint cycles in paper labels (`6` is `0`).
    pub fn from_paper_cycles(cycles: &[&[u8]], negate: bool) -> Self {
        let mut perm = [0, 1, 2, 3, 4, 5];
        for cyc in cycles {
            for (k, &i) in cyc.iter().enumerate() {
                perm[(i % 6) as usize] = cyc[(k + 1) % cyc.len()] % 6;
            }
        }
        SignedPerm { perm, negate }
    }

    pub fn apply(&self, t: Subset) -> Subset {
        let moved = Subset::from_elems(&t.elems().iter().map(|&e| self.perm[e as usize]).collect::<Vec<_>>());
        if self.negate {
            moved.complement()
        } else {
            moved
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> Self {
        let mut perm = [0; 6];
        for i in 0..6 {
            perm[i] = self.perm[other.perm[i] as usize];
        }
        SignedPerm { perm, negate: self.negate ^ other.negate }
    }
}

/// `s12, s23, s34, s45` intertwining the standard embedding with the
/// transpositions `σ_ij` of `[5]`.
pub fn intertwiner_generators() -> Vec<((u8, u8), SignedPerm)> {
    vec![
        ((1, 2), SignedPerm::from_paper_cycles(&[&[4, 6], &[1, 5], &[2, 3]], true)),
        ((2, 3), SignedPerm::from_paper_cycles(&[&[5, 6], &[1, 2], &[3, 4]], true)),
        ((3, 4), SignedPerm::from_paper_cycles(&[&[1, 6], &[2, 3], &[4, 5]], true)),
        ((4, 5), SignedPerm::from_paper_cycles(&[&[2, 6], &[1, 5], &[3, 4]], true)),
    ]
}

/// The fifth generator, `s56 = −(65)(14)(23)`.
pub fn s56() -> SignedPerm {
    SignedPerm::from_paper_cycles(&[&[6, 5], &[1, 4], &[2, 3]], true)
}

/// A signed permutation of the Petersen vertices (the ℓ-variables).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedVertexMap {
    entries: BTreeMap<Subset, (i64, Subset)>,
}

impl SignedVertexMap {
    pub fn image(&self, d: Subset) -> (i64, Subset) {
        self.entries[&d]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, i64, Subset)> + '_ {
        self.entries.iter().map(|(&d, &(s, e))| (d, s, e))
    }

    pub fn compose(&self, other: &SignedVertexMap) -> Self {
        let entries = other
            .entries
            .iter()
            .map(|(&d, &(s, e))| {
                let (s2, e2) = self.image(e);
                (d, (s * s2, e2))
            })
            .collect();
        SignedVertexMap { entries }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|(d, &(s, e))| s == 1 && e == *d)
    }
}

/// `ψ(ℓ_d) = ±x_T` with `T ∋ q`: the embedding read with `T = −T^c`.
pub fn psi(emb: &Embedding) -> Vec<(Subset, i64, Subset)> {
    let q = emb.pentagon().excluded();
    emb.pairs()
        .iter()
        .map(|&(d, t)| if t.contains(q) { (d, 1, t) } else { (d, -1, t.complement()) })
        .collect()
}

/// `σ56 = ψ^{-1} s56 ψ` for the pentagon `(12)(23)(34)(45)(15)`.
pub fn sigma56_on_ell() -> SignedVertexMap {
    let emb = Embedding::new(MysticPentagon::from_cycle(&[1, 2, 3, 4, 5]).unwrap());
    let q = emb.pentagon().excluded();
    let table = psi(&emb);
    let back: BTreeMap<Subset, (i64, Subset)> = table.iter().map(|&(d, s, t)| (t, (s, d))).collect();
    let s = s56();
    let entries = table
        .iter()
        .map(|&(d, sign, t)| {
            let u = s.apply(t);
            let (sign_u, rep) = if u.contains(q) { (1, u) } else { (-1, u.complement()) };
            let (sign_back, target) = back[&rep];
            (d, (sign * sign_u * sign_back, target))
        })
        .collect();
    SignedVertexMap { entries }
}

/// Box labels of the root triple as 3-subsets of `{0,..,5}`, read with
/// `T = −T^c`.
pub const APPENDIX_LABELS: [(&str, &str); 10] = [
    ("a1", "145"),
    ("a2", "135"),
    ("a3", "235"),
    ("b1", "025"),
    ("b2", "012"),
    ("bt3", "124"),
    ("c2", "234"),
    ("c3", "013"),
    ("c4", "034"),
    ("c5", "045"),
];

/// Indices into [`crate::embeddings`] under which the appendix labels
/// (up to complement) are the image of the Petersen graph and the box
/// adjacency `box_adjacent(i, j)` (indices into [`APPENDIX_LABELS`]) agrees
/// with Petersen adjacency of the preimages.
pub fn match_appendix_labels(embeddings: &[Embedding], box_adjacent: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let pet = PetersenGraph::new();
    let labels: Vec<Subset> = APPENDIX_LABELS.iter().map(|(_, t)| Subset::parse(t).unwrap()).collect();
    embeddings
        .iter()
        .enumerate()
        .filter(|(_, emb)| {
            let pre: Option<Vec<usize>> = labels
                .iter()
                .map(|&t| {
                    emb.preimage(t)
                        .or_else(|| emb.preimage(t.complement()))
                        .and_then(|d| pet.index_of(d))
                })
                .collect();
            match pre {
                Some(v) => (0..10).all(|i| (0..10).all(|j| i == j || box_adjacent(i, j) == pet.adjacent(v[i], v[j]))),
                None => false,
            }
        })
        .map(|(k, _)| k)
        .collect()
}
