//! Explicit bases of the Y-degree-zero part of `M^k_{i,j}`.
//!
//! A Right diagram circles `k` cells in the shadow of the anchor so that
//! every circle has a circle or the outside of the partition immediately to
//! its right. Each Right diagram `F` yields a partition `mu_F` (circles
//! floated to the top of their columns and deleted) and a diagram `mu_F^k`
//! with `k` holes. The candidate basis applies the monomial basis of
//! `M_{mu_F}(X)` to `Delta_{mu_F^k}`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::diagram::{factorial, hole_sets, remove_cells, Cell, LatticeDiagram, Partition};
use crate::error::{Error, Result};
use crate::harmonic::{space_mkij, Vars};
use crate::poly::{delta, Monomial, Polynomial};
use crate::span::SpanBasis;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RightDiagram {
    mu: Partition,
    anchor: Cell,
    circled: Vec<Cell>,
}

impl Serialize for RightDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RightDiagram", 3)?;
        st.serialize_field("mu", self.mu.parts())?;
        st.serialize_field("anchor", &self.anchor)?;
        st.serialize_field("circled", &self.circled)?;
        st.end()
    }
}

fn is_right(mu: &Partition, circled: &BTreeSet<Cell>, c: Cell) -> bool {
    let next = Cell::new(c.row, c.col + 1);
    !mu.contains(next) || circled.contains(&next)
}

impl RightDiagram {
    /// Validates the shadow and Right conditions.
    pub fn new(mu: Partition, anchor: Cell, mut circled: Vec<Cell>) -> Result<Self> {
        if !mu.contains(anchor) {
            return Err(Error::CellNotInPartition(anchor));
        }
        circled.sort();
        if let Some(w) = circled.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedHole(w[0]));
        }
        let set: BTreeSet<Cell> = circled.iter().copied().collect();
        for &c in &circled {
            let in_shadow = mu.contains(c) && c.row >= anchor.row && c.col >= anchor.col;
            if !in_shadow {
                return Err(Error::CellNotInPartition(c));
            }
            if !is_right(&mu, &set, c) {
                return Err(Error::Parse(format!("circled cell {c} is not Right")));
            }
        }
        Ok(RightDiagram {
            mu,
            anchor,
            circled,
        })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn anchor(&self) -> Cell {
        self.anchor
    }

    /// Circled cells in canonical order.
    pub fn circled(&self) -> &[Cell] {
        &self.circled
    }

    /// Number of uncircled cells in each row of `mu`.
    pub fn row_lengths(&self) -> Vec<u32> {
        let mut rows = self.mu.parts().to_vec();
        for c in &self.circled {
            rows[c.row as usize] -= 1;
        }
        rows
    }

    /// Hole positions of `mu_F^k`, in canonical order.
    ///
    /// Each circle drops within its column past every uncircled position
    /// between the anchor row and itself at which a circle would not be
    /// Right. For the lowest circle of a column this lands on row `i + h`,
    /// `h` counting the positions below it where a Right circle could sit;
    /// the gaps above it count only such positions as well.
    pub fn holes(&self) -> Vec<Cell> {
        let set: BTreeSet<Cell> = self.circled.iter().copied().collect();
        let i = self.anchor.row;
        let mut holes: Vec<Cell> = self
            .circled
            .iter()
            .map(|c| {
                let skipped = (i..c.row)
                    .map(|r| Cell::new(r, c.col))
                    .filter(|p| !set.contains(p) && !is_right(&self.mu, &set, *p))
                    .count() as u32;
                Cell::new(c.row - skipped, c.col)
            })
            .collect();
        holes.sort();
        holes
    }
}

/// All Right diagrams with `k` circles in the shadow of `c`, ordered by
/// their sorted circle lists.
pub fn enumerate_right(mu: &Partition, c: Cell, k: usize) -> Result<Vec<RightDiagram>> {
    let sets = hole_sets(mu, c, k)?;
    Ok(sets
        .into_iter()
        .filter(|h| {
            let set: BTreeSet<Cell> = h.iter().copied().collect();
            h.iter().all(|&x| is_right(mu, &set, x))
        })
        .map(|circled| RightDiagram {
            mu: mu.clone(),
            anchor: c,
            circled,
        })
        .collect())
}

/// The partition obtained by floating the circles of each column to its
/// top and deleting them.
pub fn mu_f(f: &RightDiagram) -> Partition {
    let mu = &f.mu;
    let heights: Vec<u32> = (0..mu.width())
        .map(|col| mu.col_len(col) - f.circled.iter().filter(|c| c.col == col).count() as u32)
        .collect();
    let rows = (0..mu.height() as u32)
        .map(|r| heights.iter().filter(|&&h| h > r).count() as u32)
        .collect();
    Partition::from_unsorted(rows)
}

/// The diagram `mu_F^k`.
pub fn mu_f_holes(f: &RightDiagram) -> Result<LatticeDiagram> {
    let holes = f.holes();
    if let Some(&h) = holes.iter().find(|&&h| !f.mu.contains(h)) {
        return Err(Error::Internal(format!("hole {h} placed outside {}", f.mu)));
    }
    remove_cells(&f.mu, &holes)
}

/// Depths of the holes (non-hole cells of `mu` strictly above each hole in
/// its column), sorted increasingly.
pub fn depth_tuple(mu: &Partition, holes: &[Cell]) -> Vec<u32> {
    let mut out: Vec<u32> = holes
        .iter()
        .map(|h| {
            (h.row + 1..mu.col_len(h.col))
                .filter(|&r| !holes.contains(&Cell::new(r, h.col)))
                .count() as u32
        })
        .collect();
    out.sort_unstable();
    out
}

fn multinomial(rows: &[u32]) -> u64 {
    let n: u32 = rows.iter().sum();
    let mut out = factorial(n as usize);
    for &r in rows {
        out /= factorial(r as usize);
    }
    out
}

/// Number of injective row-increasing tableaux over all Right diagrams:
/// `sum_F n! / prod (row lengths of F)!`.
pub fn tableaux_count(mu: &Partition, c: Cell, k: usize) -> Result<u64> {
    Ok(enumerate_right(mu, c, k)?
        .iter()
        .map(|f| multinomial(&f.row_lengths()))
        .sum())
}

fn divisors(m: &Monomial, nvars: usize) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for i in 0..nvars {
        let e = m.x_exps()[i] as u32;
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            for a in 0..=e {
                let mut x = vec![0; nvars];
                x[i] = a;
                next.push(
                    d.mul(&Monomial::from_exps(&x, &[]).expect("exponent fits"))
                        .expect("no overflow"),
                );
            }
        }
        out = next;
    }
    out
}

fn greedy_basis(mu: &Partition) -> Result<Vec<Monomial>> {
    let n = mu.size();
    let target = (factorial(n) / mu.factorial_product()) as usize;
    let d = delta(&mu.diagram(), n)?;
    // y^b x^a with y^b a full Y-part of a term and x^a dividing its X-part,
    // so that the operator lands in Y-degree zero
    let mut candidates = BTreeSet::new();
    for (yb, coef) in d.y_coefficients() {
        for (xa, _) in coef.terms() {
            for div in divisors(xa, n) {
                candidates.insert(div.mul(&yb)?);
            }
        }
    }
    let mut span = SpanBasis::new(n);
    let mut out = Vec::with_capacity(target);
    for m in candidates {
        if out.len() == target {
            break;
        }
        if span.insert(&d.differentiate_by(&m))? {
            out.push(m);
        }
    }
    if out.len() != target {
        return Err(Error::Internal(format!(
            "monomial basis for {mu} stopped at {} of {target}",
            out.len()
        )));
    }
    Ok(out)
}

type Cache = Mutex<HashMap<Partition, Arc<Vec<Monomial>>>>;

/// Monomials `m` in X and Y, in graded order, such that the `m(d) Delta_mu`
/// form a basis of `M_mu(X)`. Chosen greedily and cached per partition.
pub fn monomial_basis(mu: &Partition) -> Result<Arc<Vec<Monomial>>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("cache poisoned").get(mu) {
        return Ok(b.clone());
    }
    let b = Arc::new(greedy_basis(mu)?);
    cache
        .lock()
        .expect("cache poisoned")
        .insert(mu.clone(), b.clone());
    Ok(b)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Contribution {
    pub right: RightDiagram,
    pub mu_f: Vec<u32>,
    pub holes: Vec<Cell>,
    pub depths: Vec<u32>,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisReport {
    pub mu: Vec<u32>,
    pub anchor: Cell,
    pub k: usize,
    #[serde(skip)]
    pub polys: Vec<Polynomial>,
    pub size: usize,
    pub tableaux: u64,
    pub dim_x: usize,
    pub contributions: Vec<Contribution>,
    pub cardinality_ok: bool,
    pub independent: bool,
    pub spans_ok: bool,
}

impl BasisReport {
    /// All checks pass and the space has the tableaux dimension.
    pub fn passed(&self) -> bool {
        self.cardinality_ok
            && self.independent
            && self.spans_ok
            && self.dim_x as u64 == self.tableaux
    }
}

/// Assembles `{M(d) Delta_{mu_F^k}}` and checks it against `M^k_{i,j}(X)`.
pub fn build_basis_x(mu: &Partition, c: Cell, k: usize) -> Result<BasisReport> {
    let n = mu.size() - k;
    let rights = enumerate_right(mu, c, k)?;
    let mut polys = Vec::new();
    let mut contributions = Vec::with_capacity(rights.len());
    for f in rights {
        let part = mu_f(&f);
        let holes = f.holes();
        let d = delta(&mu_f_holes(&f)?, n)?;
        let monos = monomial_basis(&part)?;
        polys.extend(monos.iter().map(|m| d.differentiate_by(m)));
        contributions.push(Contribution {
            depths: depth_tuple(mu, &holes),
            mu_f: part.parts().to_vec(),
            holes,
            count: monos.len(),
            right: f,
        });
    }
    let mut span = SpanBasis::new(n);
    let mut independent = true;
    for p in &polys {
        independent &= span.insert(p)?;
    }
    let space = space_mkij(mu, c, k, Vars::X)?;
    let tableaux = tableaux_count(mu, c, k)?;
    Ok(BasisReport {
        mu: mu.parts().to_vec(),
        anchor: c,
        k,
        size: polys.len(),
        tableaux,
        dim_x: space.dim(),
        cardinality_ok: polys.len() as u64 == tableaux,
        independent,
        spans_ok: span.dim() == space.dim() && polys.iter().all(|p| space.contains(p)),
        contributions,
        polys,
    })
}
