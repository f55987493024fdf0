//! Shift operators: the action of `P_r(dX)`, `e_r(dX)` and `h_r(dX)` on a
//! lattice determinant, predicted combinatorially as a signed sum of
//! determinants of moved diagrams.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use crate::diagram::{
    canonicalize, canonicalize_cells, complement_window, Canonical, Cell, LatticeDiagram,
};
use crate::error::{Error, Result};
use crate::poly::{delta, sym_function, Alphabet, Polynomial, SymKind};
use crate::rational::Rational;

/// One term `coef * Delta_diagram` of a shift expansion.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ShiftTerm {
    pub coef: Rational,
    pub diagram: LatticeDiagram,
}

fn factorial_weight(d: &LatticeDiagram) -> Rational {
    d.cells().iter().fold(Rational::one(), |acc, c| {
        acc * Rational::factorial(c.row) * Rational::factorial(c.col)
    })
}

/// `prod p_i! q_i! / prod p'_i! q'_i!`.
pub fn epsilon(from: &LatticeDiagram, to: &LatticeDiagram) -> Result<Rational> {
    if from.len() != to.len() {
        return Err(Error::CellCountMismatch(from.len(), to.len()));
    }
    Ok(factorial_weight(from) / factorial_weight(to))
}

fn signed(cells: impl IntoIterator<Item = (i64, i64)>) -> Canonical {
    canonicalize(cells)
}

fn to_signed(c: &Cell) -> (i64, i64) {
    (c.row as i64, c.col as i64)
}

/// The predicted right-hand side of `kind_r(dX) Delta_L` as a combination of
/// determinants. Degenerate diagrams are dropped; equal diagrams are merged.
pub fn shift_expand(kind: SymKind, r: u32, diagram: &LatticeDiagram) -> Result<Vec<ShiftTerm>> {
    if r == 0 {
        if kind == SymKind::PowerSum {
            return Err(Error::ZeroPowerSum);
        }
        return Ok(vec![ShiftTerm {
            coef: Rational::one(),
            diagram: diagram.clone(),
        }]);
    }
    let cells = diagram.cells();
    let rr = r as i64;
    let mut acc: BTreeMap<LatticeDiagram, Rational> = BTreeMap::new();
    let mut push = |canon: Canonical| -> Result<()> {
        if let Canonical::Diagram {
            diagram: moved,
            sign,
        } = canon
        {
            let coef = epsilon(diagram, &moved)? * Rational::from_int(sign as i64);
            *acc.entry(moved).or_default() += &coef;
        }
        Ok(())
    };
    match kind {
        SymKind::PowerSum => {
            // one cell moves r steps down
            for i in 0..cells.len() {
                push(signed(cells.iter().enumerate().map(|(j, c)| {
                    let (p, q) = to_signed(c);
                    if i == j {
                        (p - rr, q)
                    } else {
                        (p, q)
                    }
                })))?;
            }
        }
        SymKind::Elementary => {
            // r distinct cells move one step down each
            for chosen in (0..cells.len()).combinations(r as usize) {
                push(signed(cells.iter().enumerate().map(|(j, c)| {
                    let (p, q) = to_signed(c);
                    if chosen.contains(&j) {
                        (p - 1, q)
                    } else {
                        (p, q)
                    }
                })))?;
            }
        }
        SymKind::Homogeneous => {
            // r distinct holes of the complement move one step up each
            let holes = complement_window(diagram);
            for chosen in holes.iter().combinations(r as usize) {
                let sources: BTreeSet<Cell> = chosen.iter().map(|c| **c).collect();
                let targets: Vec<Cell> =
                    chosen.iter().map(|c| Cell::new(c.row + 1, c.col)).collect();
                // every target must be a cell or a vacated hole
                if !targets
                    .iter()
                    .all(|t| diagram.contains(*t) || sources.contains(t))
                {
                    continue;
                }
                // a cell above a run of chosen holes drops to the bottom of the run
                let moved: Vec<Cell> = cells
                    .iter()
                    .map(|c| {
                        let mut row = c.row;
                        while row > 0 && sources.contains(&Cell::new(row - 1, c.col)) {
                            row -= 1;
                        }
                        Cell::new(row, c.col)
                    })
                    .collect();
                push(canonicalize_cells(moved))?;
            }
        }
    }
    Ok(acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(diagram, coef)| ShiftTerm { coef, diagram })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftReport {
    pub kind: SymKind,
    pub r: u32,
    pub diagram: LatticeDiagram,
    #[serde(rename = "match")]
    pub matched: bool,
    #[serde(serialize_with = "as_text")]
    pub lhs: Polynomial,
    #[serde(serialize_with = "as_text")]
    pub rhs: Polynomial,
}

pub(crate) fn as_text<S: serde::Serializer>(
    p: &Polynomial,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// Applies the operator directly and compares with the predicted expansion.
pub fn verify_shift(kind: SymKind, r: u32, diagram: &LatticeDiagram) -> Result<ShiftReport> {
    let n = diagram.len();
    let op = sym_function(kind, r, Alphabet::X, n)?;
    let lhs = op.apply_to(&delta(diagram, n)?)?;
    let mut rhs = Polynomial::zero(n);
    for t in shift_expand(kind, r, diagram)? {
        rhs = rhs.add_scaled(&delta(&t.diagram, n)?, &t.coef)?;
    }
    Ok(ShiftReport {
        kind,
        r,
        diagram: diagram.clone(),
        matched: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(cells: &[(u32, u32)]) -> LatticeDiagram {
        LatticeDiagram::new(cells.iter().map(|&c| c.into()).collect()).unwrap()
    }

    fn term(c: i64, cells: &[(u32, u32)]) -> ShiftTerm {
        ShiftTerm {
            coef: Rational::from_int(c),
            diagram: d(cells),
        }
    }

    #[test]
    fn epsilon_examples() {
        let l = d(&[(1, 0), (1, 1)]);
        assert_eq!(epsilon(&l, &l).unwrap(), Rational::one());
        assert_eq!(epsilon(&l, &d(&[(0, 0), (0, 1)])).unwrap(), Rational::one());
        assert_eq!(
            epsilon(&d(&[(0, 0), (2, 0)]), &d(&[(0, 0), (1, 0)])).unwrap(),
            Rational::from_int(2)
        );
        assert_eq!(
            epsilon(&l, &d(&[(0, 0)])),
            Err(Error::CellCountMismatch(2, 1))
        );
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(
            shift_expand(SymKind::PowerSum, 1, &d(&[(0, 0), (2, 0)])).unwrap(),
            vec![term(2, &[(0, 0), (1, 0)])]
        );
        let l = d(&[(1, 0), (1, 1)]);
        let mut e1 = shift_expand(SymKind::Elementary, 1, &l).unwrap();
        e1.sort_by(|a, b| a.diagram.cells().cmp(b.diagram.cells()));
        assert_eq!(
            e1,
            vec![term(1, &[(0, 0), (1, 1)]), term(1, &[(1, 0), (0, 1)])]
        );
        for cells in [
            &[(1, 0), (1, 1)][..],
            &[(0, 0), (2, 0), (1, 2)],
            &[(0, 1), (3, 0)],
        ] {
            let l = d(cells);
            assert_eq!(
                shift_expand(SymKind::Homogeneous, 1, &l).unwrap(),
                shift_expand(SymKind::Elementary, 1, &l).unwrap()
            );
        }
        assert!(shift_expand(SymKind::PowerSum, 1, &d(&[(0, 0), (1, 0)]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn verify_examples() {
        let r = verify_shift(SymKind::PowerSum, 1, &d(&[(0, 0), (2, 0)])).unwrap();
        assert!(r.matched);
        assert_eq!(r.lhs.to_string(), "2*x2 - 2*x1");
        let mu21 = crate::diagram::Partition::new(vec![2, 1])
            .unwrap()
            .diagram();
        assert!(
            verify_shift(SymKind::Homogeneous, 2, &mu21)
                .unwrap()
                .matched
        );
        let r = verify_shift(SymKind::PowerSum, 1, &d(&[(0, 0), (1, 0)])).unwrap();
        assert!(r.matched && r.lhs.is_zero());
    }

    #[test]
    fn homogeneous_moves_runs_of_holes() {
        // h_2 on {(0,0),(3,0)}: the run of holes at rows 1, 2 moves up and
        // the cell (3,0) drops to row 1
        let l = d(&[(0, 0), (3, 0)]);
        let terms = shift_expand(SymKind::Homogeneous, 2, &l).unwrap();
        assert_eq!(terms, vec![term(6, &[(0, 0), (1, 0)])]);
        assert!(verify_shift(SymKind::Homogeneous, 2, &l).unwrap().matched);
    }
}
