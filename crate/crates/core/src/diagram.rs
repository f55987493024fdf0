//! Cells, partitions and lattice diagrams.
//!
//! A cell `(row, col)` carries the biexponent `(p, q)`: in a lattice
//! determinant the row index is the exponent of `x` and the column index the
//! exponent of `y`. Diagrams are kept in the canonical order that compares
//! columns first and rows second.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub const fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.col, self.row).cmp(&(other.col, other.row))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(u32, u32)> for Cell {
    fn from((row, col): (u32, u32)) -> Self {
        Cell { row, col }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [row, col] = <[u32; 2]>::deserialize(d)?;
        Ok(Cell { row, col })
    }
}

/// Sign of the permutation that sorts `items`.
fn sort_sign<T: Ord>(items: &[T]) -> i32 {
    let mut inversions = 0usize;
    for (a, x) in items.iter().enumerate() {
        inversions += items[a + 1..].iter().filter(|y| *y < x).count();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct LatticeDiagram {
    cells: Vec<Cell>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    cells: Vec<Cell>,
}

impl TryFrom<DiagramRepr> for LatticeDiagram {
    type Error = Error;
    fn try_from(r: DiagramRepr) -> Result<Self> {
        LatticeDiagram::new(r.cells)
    }
}

impl From<LatticeDiagram> for DiagramRepr {
    fn from(d: LatticeDiagram) -> Self {
        DiagramRepr { cells: d.cells }
    }
}

/// Result of putting a list of biexponents into canonical order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Canonical {
    /// The sorted diagram together with the sign of the sorting permutation.
    Diagram { diagram: LatticeDiagram, sign: i32 },
    /// A repeated cell or a negative coordinate: the determinant vanishes.
    Zero,
}

impl Canonical {
    pub fn diagram(&self) -> Option<(&LatticeDiagram, i32)> {
        match self {
            Canonical::Diagram { diagram, sign } => Some((diagram, *sign)),
            Canonical::Zero => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Canonical::Zero)
    }
}

/// Sorts signed biexponents into canonical order.
pub fn canonicalize<I>(cells: I) -> Canonical
where
    I: IntoIterator<Item = (i64, i64)>,
{
    let mut out = Vec::new();
    for (r, c) in cells {
        match (u32::try_from(r), u32::try_from(c)) {
            (Ok(r), Ok(c)) => out.push(Cell::new(r, c)),
            _ => return Canonical::Zero,
        }
    }
    canonicalize_cells(out)
}

pub fn canonicalize_cells(cells: Vec<Cell>) -> Canonical {
    let sign = sort_sign(&cells);
    let mut cells = cells;
    cells.sort();
    if cells.windows(2).any(|w| w[0] == w[1]) {
        return Canonical::Zero;
    }
    Canonical::Diagram {
        diagram: LatticeDiagram { cells },
        sign,
    }
}

impl LatticeDiagram {
    /// Builds a diagram from distinct cells given in any order.
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        let mut cells = cells;
        cells.sort();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedHole(w[0]));
        }
        Ok(LatticeDiagram { cells })
    }

    pub fn empty() -> Self {
        LatticeDiagram { cells: Vec::new() }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// |p|, the X-degree of the determinant.
    pub fn row_sum(&self) -> u32 {
        self.cells.iter().map(|c| c.row).sum()
    }

    /// |q|, the Y-degree of the determinant.
    pub fn col_sum(&self) -> u32 {
        self.cells.iter().map(|c| c.col).sum()
    }

    pub fn max_row(&self) -> Option<u32> {
        self.cells.iter().map(|c| c.row).max()
    }

    pub fn max_col(&self) -> Option<u32> {
        self.cells.last().map(|c| c.col)
    }
}

impl fmt::Display for LatticeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.cells.iter().join(","))
    }
}

/// Complement of `diagram` inside its bounding box, in canonical order.
pub fn complement_window(diagram: &LatticeDiagram) -> Vec<Cell> {
    let (Some(max_row), Some(max_col)) = (diagram.max_row(), diagram.max_col()) else {
        return Vec::new();
    };
    (0..=max_col)
        .flat_map(|col| (0..=max_row).map(move |row| Cell::new(row, col)))
        .filter(|c| !diagram.contains(*c))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    parts: Vec<u32>,
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;
    fn try_from(r: PartitionRepr) -> Result<Self> {
        Partition::new(r.parts)
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr { parts: p.parts }
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// The row lengths sorted into a partition; zero lengths are dropped.
    pub fn from_unsorted(mut lengths: Vec<u32>) -> Self {
        lengths.retain(|&l| l > 0);
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: lengths }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// Length of the first row.
    pub fn width(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn row_len(&self, row: u32) -> u32 {
        self.parts.get(row as usize).copied().unwrap_or(0)
    }

    /// Height of column `col`.
    pub fn col_len(&self, col: u32) -> u32 {
        self.parts.iter().take_while(|&&p| p > col).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: (0..self.width()).map(|c| self.col_len(c)).collect(),
        }
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.col < self.row_len(c.row)
    }

    /// Ferrers cells in canonical order.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.width())
            .flat_map(|col| (0..self.col_len(col)).map(move |row| Cell::new(row, col)))
            .collect()
    }

    pub fn diagram(&self) -> LatticeDiagram {
        LatticeDiagram {
            cells: self.cells(),
        }
    }

    /// `mu!`, the product of the factorials of the parts.
    pub fn factorial_product(&self) -> u64 {
        self.parts.iter().map(|&p| factorial(p as usize)).product()
    }

    /// All partitions of `n`, in reverse lexicographic order of parts.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of every size in `1..=max`.
    pub fn all_up_to(max: usize) -> Vec<Partition> {
        (1..=max).flat_map(Partition::all).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Cells of `mu` weakly north-east of `c`, in canonical order.
pub fn shadow(mu: &Partition, c: Cell) -> Result<Vec<Cell>> {
    if !mu.contains(c) {
        return Err(Error::CellNotInPartition(c));
    }
    Ok(mu
        .cells()
        .into_iter()
        .filter(|d| d.row >= c.row && d.col >= c.col)
        .collect())
}

pub fn shadow_size(mu: &Partition, c: Cell) -> Result<usize> {
    shadow(mu, c).map(|s| s.len())
}

/// The diagram `mu / holes`.
pub fn remove_cells(mu: &Partition, holes: &[Cell]) -> Result<LatticeDiagram> {
    let mut seen = BTreeSet::new();
    for &h in holes {
        if !mu.contains(h) {
            return Err(Error::CellNotInPartition(h));
        }
        if !seen.insert(h) {
            return Err(Error::RepeatedHole(h));
        }
    }
    Ok(LatticeDiagram {
        cells: mu
            .cells()
            .into_iter()
            .filter(|c| !seen.contains(c))
            .collect(),
    })
}

/// All k-subsets of the shadow of `c`, each sorted, in lexicographic order.
pub fn hole_sets(mu: &Partition, c: Cell, k: usize) -> Result<Vec<Vec<Cell>>> {
    let sh = shadow(mu, c)?;
    if k > sh.len() {
        return Err(Error::KTooLarge { k, s: sh.len() });
    }
    Ok(sh.into_iter().combinations(k).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(r: u32, q: u32) -> Cell {
        Cell::new(r, q)
    }

    fn mu(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let Canonical::Diagram { diagram, sign } = canonicalize([(1, 0), (0, 0)]) else {
            panic!()
        };
        assert_eq!(diagram.cells(), &[c(0, 0), c(1, 0)]);
        assert_eq!(sign, -1);
        let Canonical::Diagram { diagram, sign } = canonicalize([(0, 0), (0, 1)]) else {
            panic!()
        };
        assert_eq!(diagram.cells(), &[c(0, 0), c(0, 1)]);
        assert_eq!(sign, 1);
        assert!(canonicalize([(0, 0), (0, 0)]).is_zero());
        assert!(canonicalize([(-1, 0), (0, 0)]).is_zero());
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let Canonical::Diagram { diagram, .. } = canonicalize([(2, 1), (0, 3), (1, 1), (0, 0)])
        else {
            panic!()
        };
        let again = canonicalize(diagram.cells().iter().map(|c| (c.row as i64, c.col as i64)));
        assert_eq!(
            again,
            Canonical::Diagram {
                diagram: diagram.clone(),
                sign: 1
            }
        );
    }

    #[test]
    fn lex_order_prioritizes_column() {
        assert!(c(5, 0) < c(0, 1));
        assert!(c(0, 1) < c(1, 1));
        assert_eq!(
            mu(&[4, 2, 1]).cells(),
            vec![
                c(0, 0),
                c(1, 0),
                c(2, 0),
                c(0, 1),
                c(1, 1),
                c(0, 2),
                c(0, 3)
            ]
        );
    }

    #[test]
    fn shadow_examples() {
        assert_eq!(
            shadow(&mu(&[3, 2]), c(1, 0)).unwrap(),
            vec![c(1, 0), c(1, 1)]
        );
        assert_eq!(shadow(&mu(&[2, 1]), c(0, 0)).unwrap().len(), 3);
        assert_eq!(shadow(&mu(&[3, 2]), c(0, 2)).unwrap(), vec![c(0, 2)]);
        assert_eq!(
            shadow(&mu(&[3, 2]), c(1, 2)),
            Err(Error::CellNotInPartition(c(1, 2)))
        );
    }

    #[test]
    fn shadow_monotone_and_full_at_origin() {
        for m in Partition::all_up_to(7) {
            assert_eq!(shadow(&m, c(0, 0)).unwrap(), m.cells());
            for cell in m.cells() {
                let s = shadow_size(&m, cell).unwrap();
                for next in [c(cell.row + 1, cell.col), c(cell.row, cell.col + 1)] {
                    if m.contains(next) {
                        assert!(shadow_size(&m, next).unwrap() <= s);
                    }
                }
            }
        }
    }

    #[test]
    fn remove_cells_examples() {
        let d = remove_cells(&mu(&[2, 1]), &[c(0, 0)]).unwrap();
        assert_eq!(d.cells(), &[c(1, 0), c(0, 1)]);
        assert!(remove_cells(&mu(&[1]), &[c(0, 0)]).unwrap().is_empty());
        let d = remove_cells(&mu(&[3, 2]), &[c(0, 0), c(1, 0), c(0, 2)]).unwrap();
        assert_eq!(d.cells(), &[c(0, 1), c(1, 1)]);
        assert_eq!(
            remove_cells(&mu(&[2, 1]), &[c(1, 1)]),
            Err(Error::CellNotInPartition(c(1, 1)))
        );
        assert_eq!(
            remove_cells(&mu(&[2, 1]), &[c(0, 1), c(0, 1)]),
            Err(Error::RepeatedHole(c(0, 1)))
        );
    }

    #[test]
    fn removal_is_order_independent() {
        let m = mu(&[3, 2, 1]);
        let a = remove_cells(&m, &[c(0, 2), c(1, 1), c(2, 0)]).unwrap();
        let b = remove_cells(&m, &[c(2, 0), c(0, 2), c(1, 1)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hole_set_examples() {
        assert_eq!(hole_sets(&mu(&[2, 1]), c(0, 0), 1).unwrap().len(), 3);
        assert_eq!(
            hole_sets(&mu(&[2, 1]), c(0, 0), 3).unwrap(),
            vec![mu(&[2, 1]).cells()]
        );
        assert_eq!(hole_sets(&mu(&[3, 2]), c(0, 0), 2).unwrap().len(), 10);
        assert_eq!(
            hole_sets(&mu(&[2, 1]), c(0, 0), 4),
            Err(Error::KTooLarge { k: 4, s: 3 })
        );
    }

    #[test]
    fn hole_set_counts_are_binomial() {
        for m in Partition::all_up_to(8) {
            for cell in m.cells() {
                let s = shadow_size(&m, cell).unwrap();
                for k in 0..=s {
                    let sets = hole_sets(&m, cell, k).unwrap();
                    assert_eq!(sets.len() as u64, binomial(s, k));
                    assert!(sets.windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }

    #[test]
    fn complement_window_examples() {
        let d = |cells: &[(u32, u32)]| {
            LatticeDiagram::new(cells.iter().map(|&x| x.into()).collect()).unwrap()
        };
        assert!(complement_window(&d(&[(0, 0), (1, 0)])).is_empty());
        assert_eq!(complement_window(&d(&[(0, 0), (2, 0)])), vec![c(1, 0)]);
        assert_eq!(complement_window(&mu(&[2, 1]).diagram()), vec![c(1, 1)]);
        assert!(complement_window(&LatticeDiagram::empty()).is_empty());
    }

    #[test]
    fn complement_window_tiles_box() {
        let d = LatticeDiagram::new(vec![c(0, 1), c(3, 0), c(2, 2), c(1, 1)]).unwrap();
        let w = complement_window(&d);
        assert!(w.iter().all(|h| !d.contains(*h)));
        assert_eq!(w.len() + d.len(), 4 * 3);
    }

    #[test]
    fn partitions_of_small_n() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(mu(&[3, 1]).conjugate(), mu(&[2, 1, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn json_encoding() {
        let d = LatticeDiagram::new(vec![c(1, 0), c(0, 0)]).unwrap();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"cells":[[0,0],[1,0]]}"#
        );
        assert_eq!(
            serde_json::to_string(&mu(&[2, 1])).unwrap(),
            r#"{"parts":[2,1]}"#
        );
        let back: Partition = serde_json::from_str(r#"{"parts":[3,1]}"#).unwrap();
        assert_eq!(back, mu(&[3, 1]));
        assert!(serde_json::from_str::<Partition>(r#"{"parts":[1,3]}"#).is_err());
    }
}
