//! Exact spans of bihomogeneous polynomials, kept in reduced row-echelon form
//! one bidegree block at a time.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;

const NO_PIVOT: u32 = u32::MAX;

type Row = Vec<(u32, Rational)>;

#[derive(Clone, Default)]
struct Block {
    index: HashMap<Monomial, u32>,
    monos: Vec<Monomial>,
    rows: Vec<Row>,
    pivot_row: Vec<u32>,
    // scratch space for reductions, always all-zero between calls
    acc: Vec<Rational>,
    touched: Vec<bool>,
}

impl Block {
    fn intern(&mut self, m: Monomial) -> u32 {
        if let Some(&i) = self.index.get(&m) {
            return i;
        }
        let i = self.monos.len() as u32;
        self.index.insert(m, i);
        self.monos.push(m);
        self.pivot_row.push(NO_PIVOT);
        self.acc.push(Rational::zero());
        self.touched.push(false);
        i
    }

    /// Reduces `v` (given by column ids) against the stored rows.
    fn reduce(
        rows: &[Row],
        pivot_row: &[u32],
        acc: &mut [Rational],
        touched: &mut [bool],
        v: &[(u32, Rational)],
    ) -> Row {
        let mut live: Vec<u32> = Vec::with_capacity(v.len());
        for (col, c) in v {
            acc[*col as usize] = c.clone();
            touched[*col as usize] = true;
            live.push(*col);
        }
        for (col, c) in v {
            let r = pivot_row[*col as usize];
            if r == NO_PIVOT {
                continue;
            }
            for (cc, val) in &rows[r as usize] {
                let cc_u = *cc as usize;
                if !touched[cc_u] {
                    touched[cc_u] = true;
                    live.push(*cc);
                }
                acc[cc_u].sub_mul(c, val);
            }
        }
        let mut out = Vec::new();
        for col in live {
            let i = col as usize;
            touched[i] = false;
            let val = std::mem::take(&mut acc[i]);
            if !val.is_zero() {
                out.push((col, val));
            }
        }
        out
    }

    fn insert(&mut self, p: &Polynomial) -> bool {
        let v: Row = p
            .terms()
            .iter()
            .map(|(m, c)| (self.intern(*m), c.clone()))
            .collect();
        let mut rem = Self::reduce(
            &self.rows,
            &self.pivot_row,
            &mut self.acc,
            &mut self.touched,
            &v,
        );
        if rem.is_empty() {
            return false;
        }
        // pivot on the greatest monomial
        let (pi, _) = rem
            .iter()
            .enumerate()
            .max_by(|a, b| self.monos[a.1 .0 as usize].cmp(&self.monos[b.1 .0 as usize]))
            .expect("nonempty remainder");
        let pivot = rem[pi].0;
        let inv = rem[pi].1.recip();
        for (_, c) in rem.iter_mut() {
            *c *= &inv;
        }
        rem.sort_unstable_by_key(|(col, _)| *col);
        for row in self.rows.iter_mut() {
            if let Ok(j) = row.binary_search_by_key(&pivot, |(col, _)| *col) {
                let f = row[j].1.clone();
                *row = axpy(row, &rem, &f);
            }
        }
        self.pivot_row[pivot as usize] = self.rows.len() as u32;
        self.rows.push(rem);
        true
    }

    fn contains(&self, p: &Polynomial) -> bool {
        let mut v = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            match self.index.get(m) {
                Some(&i) => v.push((i, c.clone())),
                // no stored row has support there, so it survives reduction
                None => return false,
            }
        }
        let mut acc = vec![Rational::zero(); self.monos.len()];
        let mut touched = vec![false; self.monos.len()];
        Self::reduce(&self.rows, &self.pivot_row, &mut acc, &mut touched, &v).is_empty()
    }

    fn polynomials(&self, nvars: usize) -> Vec<Polynomial> {
        self.rows
            .iter()
            .map(|row| {
                let mut terms: Vec<(Monomial, Rational)> = row
                    .iter()
                    .map(|(col, c)| (self.monos[*col as usize], c.clone()))
                    .collect();
                terms.sort_unstable_by_key(|a| a.0);
                Polynomial::from_sorted_terms(nvars, terms)
            })
            .collect()
    }
}

/// `a - f * b` for rows sorted by column.
fn axpy(a: &Row, b: &Row, f: &Rational) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            v.sub_mul(f, &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// One row of an exported Hilbert table.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HilbertEntry {
    pub bidegree: [u32; 2],
    pub dim: usize,
}

/// The span of a collection of bihomogeneous polynomials in a fixed alphabet.
#[derive(Clone)]
pub struct SpanBasis {
    nvars: usize,
    blocks: BTreeMap<(u32, u32), Block>,
}

impl SpanBasis {
    pub fn new(nvars: usize) -> Self {
        SpanBasis {
            nvars,
            blocks: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `p` to the span. Returns whether `p` was independent of the
    /// elements already present.
    pub fn insert(&mut self, p: &Polynomial) -> Result<bool> {
        if p.nvars() != self.nvars {
            return Err(Error::AlphabetMismatch(self.nvars, p.nvars()));
        }
        if p.is_zero() {
            return Ok(false);
        }
        let bideg = p.bidegree().ok_or(Error::NotBihomogeneous)?;
        Ok(self.blocks.entry(bideg).or_default().insert(p))
    }

    /// Inserts every bihomogeneous component of `p`; returns how many were new.
    pub fn insert_components(&mut self, p: &Polynomial) -> Result<usize> {
        let mut added = 0;
        for (_, c) in p.components() {
            added += self.insert(&c)? as usize;
        }
        Ok(added)
    }

    /// Whether `p` lies in the span. Components are checked block by block.
    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.nvars() != self.nvars {
            return false;
        }
        p.components()
            .iter()
            .all(|(bideg, c)| match self.blocks.get(bideg) {
                Some(block) => block.contains(c),
                None => c.is_zero(),
            })
    }

    pub fn dim(&self) -> usize {
        self.blocks.values().map(|b| b.rows.len()).sum()
    }

    pub fn block_dim(&self, a: u32, b: u32) -> usize {
        self.blocks.get(&(a, b)).map_or(0, |blk| blk.rows.len())
    }

    /// Dimension of each nonempty bidegree block.
    pub fn hilbert(&self) -> BTreeMap<(u32, u32), usize> {
        self.blocks
            .iter()
            .filter(|(_, b)| !b.rows.is_empty())
            .map(|(k, b)| (*k, b.rows.len()))
            .collect()
    }

    /// The Hilbert table sorted by total degree, then X-degree.
    pub fn hilbert_table(&self) -> Vec<HilbertEntry> {
        let mut out: Vec<HilbertEntry> = self
            .hilbert()
            .into_iter()
            .map(|((a, b), dim)| HilbertEntry {
                bidegree: [a, b],
                dim,
            })
            .collect();
        out.sort_by_key(|e| (e.bidegree[0] + e.bidegree[1], e.bidegree[0]));
        out
    }

    /// The reduced echelon basis, block by block.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.blocks
            .values()
            .flat_map(|b| b.polynomials(self.nvars))
            .collect()
    }

    /// Basis elements of one bidegree block.
    pub fn block_basis(&self, a: u32, b: u32) -> Vec<Polynomial> {
        self.blocks
            .get(&(a, b))
            .map_or_else(Vec::new, |blk| blk.polynomials(self.nvars))
    }

    /// Replaces `self` by `self + other`.
    pub fn absorb(&mut self, other: &SpanBasis) -> Result<()> {
        for p in other.basis() {
            self.insert(&p)?;
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &SpanBasis) -> bool {
        self.basis().iter().all(|p| other.contains(p))
    }

    pub fn same_span(&self, other: &SpanBasis) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other) && other.is_subspace_of(self)
    }
}

impl std::fmt::Debug for SpanBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpanBasis")
            .field("nvars", &self.nvars)
            .field("hilbert", &self.hilbert())
            .finish()
    }
}
