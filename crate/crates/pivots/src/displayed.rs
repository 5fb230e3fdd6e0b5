//! The four correspondences drawn for `{21, 21, 321}`: each sends a
//! multiplicity-one rule diagram to a boundary datum of the root triple.

use jacklr_partitions::{Cell, Partition, Slot};
use jacklr_stanley::{reference_x, FreeBox, RootDiagram, StanleyDiagram};

use crate::correspondence::hook_correspondence;
use crate::PivotError;

pub struct DisplayedCorrespondence {
    pub name: &'static str,
    pub slot: Slot,
    pub base: &'static [u32],
    pub corners: (Cell, Cell),
    /// The drawing runs from `κ+b` to `κ+a`, i.e. it is `ψ_d⁻¹`.
    pub inverse: bool,
    pub source_shapes: [&'static [u32]; 3],
    pub source: &'static str,
    pub target_shapes: [&'static [u32]; 3],
    pub target: &'static str,
    /// Root box at the pivot; the target should be its boundary datum.
    pub boundary_box: FreeBox,
}

/// Transcribed from the drawings, rows listed from the longest.
pub fn displayed_correspondences() -> [DisplayedCorrespondence; 4] {
    [
        DisplayedCorrespondence {
            name: "2211 to 321 at (0,0)",
            slot: Slot::Lam,
            base: &[2, 2, 1],
            corners: (Cell::new(3, 0), Cell::new(0, 2)),
            inverse: false,
            source_shapes: [&[2, 1], &[2, 1], &[2, 2, 1, 1]],
            source: "mu:UUU;nu:UUU;lam:UUUUUU",
            target_shapes: [&[2, 1], &[2, 1], &[3, 2, 1]],
            target: "mu:UUU;nu:UUU;lam:LLLLUU",
            boundary_box: FreeBox::C4,
        },
        DisplayedCorrespondence {
            name: "3111 to 321 at (1,0)",
            slot: Slot::Lam,
            base: &[3, 1, 1],
            corners: (Cell::new(3, 0), Cell::new(1, 1)),
            inverse: false,
            source_shapes: [&[2, 1], &[2, 1], &[3, 1, 1, 1]],
            source: "mu:ULU;nu:ULU;lam:ULUUUL",
            target_shapes: [&[2, 1], &[2, 1], &[3, 2, 1]],
            target: "mu:ULU;nu:ULU;lam:LUULLL",
            boundary_box: FreeBox::C2,
        },
        DisplayedCorrespondence {
            name: "222 to 321 at (0,1)",
            slot: Slot::Lam,
            base: &[2, 2, 1],
            corners: (Cell::new(2, 1), Cell::new(0, 2)),
            inverse: false,
            source_shapes: [&[2, 1], &[2, 1], &[2, 2, 2]],
            source: "mu:UUL;nu:UUL;lam:UUUULL",
            target_shapes: [&[2, 1], &[2, 1], &[3, 2, 1]],
            target: "mu:UUL;nu:UUL;lam:LLLULU",
            boundary_box: FreeBox::C5,
        },
        DisplayedCorrespondence {
            name: "3 to 21 in mu at (0,0)",
            slot: Slot::Mu,
            base: &[2],
            corners: (Cell::new(1, 0), Cell::new(0, 2)),
            inverse: true,
            source_shapes: [&[3], &[2, 1], &[3, 2, 1]],
            source: "mu:UUL;nu:UUU;lam:UULUUU",
            target_shapes: [&[2, 1], &[2, 1], &[3, 2, 1]],
            target: "mu:LLL;nu:UUU;lam:UULUUU",
            boundary_box: FreeBox::A2,
        },
    ]
}

fn parse(text: &str, shapes: [&[u32]; 3]) -> Result<StanleyDiagram, PivotError> {
    let [mu, nu, lam] = shapes.map(Partition::of);
    Ok(StanleyDiagram::parse(text, &mu, &nu, &lam)?)
}

#[derive(Clone, Debug)]
pub struct DisplayedCheck {
    pub name: &'static str,
    pub image: StanleyDiagram,
    pub expected: StanleyDiagram,
    /// Which of `X^{cl(b)}`, `X̄^{cl(b)}` the image equals, if either.
    pub boundary: Option<RootDiagram>,
}

impl DisplayedCheck {
    pub fn passed(&self) -> bool {
        self.image == self.expected && self.boundary.is_some()
    }
}

pub fn verify_displayed_correspondences() -> Result<Vec<DisplayedCheck>, PivotError> {
    let x = reference_x();
    displayed_correspondences()
        .into_iter()
        .map(|dc| {
            let psi = hook_correspondence(&Partition::of(dc.base), dc.corners.0, dc.corners.1)?;
            let psi = if dc.inverse { psi.inverse() } else { psi };
            let image = psi.apply(&parse(dc.source, dc.source_shapes)?, dc.slot)?;
            let expected = parse(dc.target, dc.target_shapes)?;
            let claw = dc.boundary_box.claw();
            let boundary = [x.flip(claw), x.conjugate().flip(claw)]
                .into_iter()
                .find(|e| e.to_stanley_diagram() == image);
            Ok(DisplayedCheck { name: dc.name, image, expected, boundary })
        })
        .collect()
}
