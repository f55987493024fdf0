//! Checks that `M^1` and `M^2` are generated by one and two diagrams, and
//! the membership probe showing that the naive three-hole analogue fails.

use serde::Serialize;

use crate::diagram::{remove_cells, Cell, Partition};
use crate::error::{Error, Result};
use crate::poly::delta;

use super::{derivative_closure, space_mkij, Vars};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReductionCheck {
    /// Hole sets whose determinants generate the reduced side.
    pub generators: Vec<Vec<Cell>>,
    pub dim_sum: usize,
    pub dim_reduced: usize,
    pub equal: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReductionReport {
    pub mu: Vec<u32>,
    pub cell: Cell,
    pub k1: ReductionCheck,
    /// `None` when `(i, j+1)` or `(i+1, j)` is outside the partition.
    pub k2: Option<ReductionCheck>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.k1.equal && self.k2.as_ref().is_none_or(|c| c.equal)
    }
}

fn check(mu: &Partition, c: Cell, k: usize, generators: Vec<Vec<Cell>>) -> Result<ReductionCheck> {
    let n = mu.size() - k;
    let full = space_mkij(mu, c, k, Vars::XY)?;
    let gens = generators
        .iter()
        .map(|h| delta(&remove_cells(mu, h)?, n))
        .collect::<Result<Vec<_>>>()?;
    let reduced = derivative_closure(n, &gens)?;
    Ok(ReductionCheck {
        generators,
        dim_sum: full.dim(),
        dim_reduced: reduced.dim(),
        equal: full.same_span(&reduced),
    })
}

/// Compares `M^1_{i,j}` with `M_{mu/(i,j)}` and, when both neighbours of
/// `(i, j)` lie in `mu`, `M^2_{i,j}` with the sum of the two spaces whose
/// holes are `(i,j)` plus one neighbour.
pub fn verify_sum_reduction(mu: &Partition, c: Cell) -> Result<ReductionReport> {
    if !mu.contains(c) {
        return Err(Error::CellNotInPartition(c));
    }
    let k1 = check(mu, c, 1, vec![vec![c]])?;
    let right = Cell::new(c.row, c.col + 1);
    let up = Cell::new(c.row + 1, c.col);
    let k2 = if mu.contains(right) && mu.contains(up) {
        Some(check(mu, c, 2, vec![vec![c, right], vec![c, up]])?)
    } else {
        None
    };
    Ok(ReductionReport {
        mu: mu.parts().to_vec(),
        cell: c,
        k1,
        k2,
    })
}

/// Whether `Delta_{mu/target}` lies in the sum of the `M_{mu/H}` over `gens`.
pub fn counterexample_probe(mu: &Partition, target: &[Cell], gens: &[Vec<Cell>]) -> Result<bool> {
    let k = target.len();
    if gens.iter().any(|h| h.len() != k) {
        return Err(Error::MixedHoleSetSizes);
    }
    let n = mu.size() - k;
    let polys = gens
        .iter()
        .map(|h| delta(&remove_cells(mu, h)?, n))
        .collect::<Result<Vec<_>>>()?;
    let span = derivative_closure(n, &polys)?;
    Ok(span.contains(&delta(&remove_cells(mu, target)?, n)?))
}
