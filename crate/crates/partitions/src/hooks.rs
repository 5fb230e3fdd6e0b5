use jacklr_exact::{int, MultiPoly, ALPHA};

use crate::{Cell, Partition, PartitionError};

fn check(lam: &Partition, b: Cell) -> Result<(), PartitionError> {
    if lam.has_box(b) {
        Ok(())
    } else {
        Err(PartitionError::BoxNotInDiagram { row: b.row, col: b.col })
    }
}

pub fn arm(lam: &Partition, b: Cell) -> Result<u32, PartitionError> {
    check(lam, b)?;
    Ok(lam.row(b.row) - b.col as u32 - 1)
}

pub fn leg(lam: &Partition, b: Cell) -> Result<u32, PartitionError> {
    check(lam, b)?;
    let below = (b.row + 1..lam.len())
        .take_while(|&i| lam.row(i) as usize > b.col)
        .count();
    Ok(below as u32)
}

/// `c0 + c1·α`.
fn affine(c0: u32, c1: u32) -> MultiPoly {
    MultiPoly::linear(int(c0 as i64), &[(ALPHA, int(c1 as i64))])
}

/// `h^U = α(arm+1) + leg`.
pub fn upper_hook(lam: &Partition, b: Cell) -> Result<MultiPoly, PartitionError> {
    let (a, l) = (arm(lam, b)?, leg(lam, b)?);
    Ok(affine(l, a + 1))
}

/// `h^L = α·arm + leg + 1`.
pub fn lower_hook(lam: &Partition, b: Cell) -> Result<MultiPoly, PartitionError> {
    let (a, l) = (arm(lam, b)?, leg(lam, b)?);
    Ok(affine(l + 1, a))
}

/// `h^U` evaluated at a rational α.
pub fn upper_hook_at(
    lam: &Partition,
    b: Cell,
    alpha: &jacklr_exact::Rational,
) -> Result<jacklr_exact::Rational, PartitionError> {
    let (a, l) = (arm(lam, b)?, leg(lam, b)?);
    Ok(alpha * int(a as i64 + 1) + int(l as i64))
}

pub fn lower_hook_at(
    lam: &Partition,
    b: Cell,
    alpha: &jacklr_exact::Rational,
) -> Result<jacklr_exact::Rational, PartitionError> {
    let (a, l) = (arm(lam, b)?, leg(lam, b)?);
    Ok(alpha * int(a as i64) + int(l as i64 + 1))
}

/// `j_λ = ∏_b h^U(b)·h^L(b)`.
pub fn jnorm(lam: &Partition) -> MultiPoly {
    lam.boxes()
        .into_iter()
        .map(|b| &upper_hook(lam, b).unwrap() * &lower_hook(lam, b).unwrap())
        .product()
}
