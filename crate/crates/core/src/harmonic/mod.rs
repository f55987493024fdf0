//! Derivative-closure modules of lattice determinants.
//!
//! `M_L` is the span of all partial derivatives of `Delta_L`; `M^k_{i,j}` is the
//! sum of the `M_{mu/H}` over all `k`-subsets `H` of the shadow of `(i, j)`.
//! Every generator used here is bihomogeneous, so all spaces are bigraded.

mod reduction;
mod shift;

pub use reduction::{counterexample_probe, verify_sum_reduction, ReductionCheck, ReductionReport};
pub use shift::{epsilon, shift_expand, verify_shift, ShiftReport, ShiftTerm};

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{hole_sets, remove_cells, Cell, Partition};
use crate::error::{Error, Result};
use crate::poly::{delta, Polynomial, Var, MAX_VARS};
use crate::span::SpanBasis;

/// Which part of a module is computed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Vars {
    /// The full bigraded module.
    #[serde(rename = "xy")]
    XY,
    /// The subspace of elements of Y-degree zero.
    #[serde(rename = "x")]
    X,
}

impl FromStr for Vars {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "xy" => Ok(Vars::XY),
            "x" => Ok(Vars::X),
            _ => Err(Error::Parse(format!("unknown variable set {s:?}"))),
        }
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Vars::XY => "xy",
            Vars::X => "x",
        })
    }
}

fn close(span: &mut SpanBasis, mut queue: VecDeque<Polynomial>, vars: &[Var]) -> Result<()> {
    while let Some(p) = queue.pop_front() {
        for &v in vars {
            let d = p.derivative(v);
            if !d.is_zero() && span.insert(&d)? {
                queue.push_back(d);
            }
        }
    }
    Ok(())
}

fn seed(span: &mut SpanBasis, gens: &[Polynomial]) -> Result<VecDeque<Polynomial>> {
    let mut queue = VecDeque::new();
    for g in gens {
        if g.nvars() != span.nvars() {
            return Err(Error::AlphabetMismatch(span.nvars(), g.nvars()));
        }
        for (_, c) in g.components() {
            if span.insert(&c)? {
                queue.push_back(c);
            }
        }
    }
    Ok(queue)
}

fn all_vars(n: usize) -> Vec<Var> {
    (0..n).map(Var::X).chain((0..n).map(Var::Y)).collect()
}

/// Span of all partial derivatives, of all orders, of the generators.
///
/// Generators are split into bihomogeneous components first; for the
/// bihomogeneous generators used throughout this crate that is exactly the
/// derivative closure.
pub fn derivative_closure(nvars: usize, gens: &[Polynomial]) -> Result<SpanBasis> {
    let mut span = SpanBasis::new(nvars);
    let queue = seed(&mut span, gens)?;
    close(&mut span, queue, &all_vars(nvars))?;
    Ok(span)
}

/// The Y-degree-zero part of the derivative closure of the generators.
///
/// A derivative `d^a_X d^b_Y g` of a bihomogeneous `g` has Y-degree zero
/// exactly when `|b|` is the Y-degree of `g`, and then `d^b_Y g` is `b!`
/// times the X-coefficient of `y^b` in `g`. So the subspace is the X-closure
/// of those coefficients.
pub fn x_subspace(nvars: usize, gens: &[Polynomial]) -> Result<SpanBasis> {
    let mut seeds = Vec::new();
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::AlphabetMismatch(nvars, g.nvars()));
        }
        for (_, c) in g.components() {
            seeds.extend(c.y_coefficients().into_values());
        }
    }
    let mut span = SpanBasis::new(nvars);
    let queue = seed(&mut span, &seeds)?;
    let xs: Vec<Var> = (0..nvars).map(Var::X).collect();
    close(&mut span, queue, &xs)?;
    Ok(span)
}

/// Determinants `Delta_{mu/H}` for every `k`-subset `H` of the shadow of `c`.
pub fn mkij_generators(mu: &Partition, c: Cell, k: usize) -> Result<Vec<Polynomial>> {
    let sets = hole_sets(mu, c, k)?;
    let n = mu.size() - k;
    if n > MAX_VARS {
        return Err(Error::TooManyVariables(n));
    }
    sets.iter()
        .map(|h| delta(&remove_cells(mu, h)?, n))
        .collect()
}

/// The space `M^k_{i,j}` for the anchor `c` (or its Y-degree-zero part).
pub fn space_mkij(mu: &Partition, c: Cell, k: usize, vars: Vars) -> Result<SpanBasis> {
    let gens = mkij_generators(mu, c, k)?;
    let n = mu.size() - k;
    match vars {
        Vars::XY => derivative_closure(n, &gens),
        Vars::X => x_subspace(n, &gens),
    }
}

/// `M_L` for a single diagram.
pub fn space_of(diagram: &crate::diagram::LatticeDiagram, vars: Vars) -> Result<SpanBasis> {
    let n = diagram.len();
    let g = delta(diagram, n)?;
    match vars {
        Vars::XY => derivative_closure(n, &[g]),
        Vars::X => x_subspace(n, &[g]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{binomial, factorial, shadow_size, LatticeDiagram};
    use crate::poly::Polynomial;

    fn mu(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn closure_examples() {
        let v = Polynomial::parse("x2 - x1", 2).unwrap();
        let span = derivative_closure(2, &[v]).unwrap();
        assert_eq!(span.dim(), 2);
        assert_eq!(
            span.hilbert().into_iter().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 0), 1)]
        );
        let d = delta(&mu(&[2, 1]).diagram(), 3).unwrap();
        let span = derivative_closure(3, &[d]).unwrap();
        assert_eq!(span.dim(), 6);
        let h: Vec<_> = span.hilbert().into_iter().collect();
        assert_eq!(h, vec![((0, 0), 1), ((0, 1), 2), ((1, 0), 2), ((1, 1), 1)]);
        assert_eq!(
            derivative_closure(1, &[Polynomial::one(1)]).unwrap().dim(),
            1
        );
    }

    #[test]
    fn x_subspace_examples() {
        let d21 = delta(&mu(&[2, 1]).diagram(), 3).unwrap();
        assert_eq!(x_subspace(3, &[d21]).unwrap().dim(), 3);
        let row = delta(&mu(&[4]).diagram(), 4).unwrap();
        assert_eq!(x_subspace(4, &[row]).unwrap().dim(), 1);
        let col = delta(&mu(&[1, 1]).diagram(), 2).unwrap();
        assert_eq!(x_subspace(2, &[col]).unwrap().dim(), 2);
    }

    #[test]
    fn x_subspace_matches_full_closure() {
        // the Y-degree-zero blocks of the bigraded closure
        for m in Partition::all_up_to(4) {
            let full = space_of(&m.diagram(), Vars::XY).unwrap();
            let x = space_of(&m.diagram(), Vars::X).unwrap();
            let from_full: usize = full
                .hilbert()
                .iter()
                .filter(|((_, b), _)| *b == 0)
                .map(|(_, d)| d)
                .sum();
            assert_eq!(x.dim(), from_full, "{m}");
            assert!(x.is_subspace_of(&full));
        }
    }

    #[test]
    fn mkij_examples() {
        let c0 = Cell::new(0, 0);
        assert_eq!(space_mkij(&mu(&[2, 1]), c0, 1, Vars::XY).unwrap().dim(), 6);
        assert_eq!(space_mkij(&mu(&[1, 1]), c0, 1, Vars::XY).unwrap().dim(), 2);
        assert_eq!(space_mkij(&mu(&[2, 1]), c0, 1, Vars::X).unwrap().dim(), 3);
        assert_eq!(space_mkij(&mu(&[2, 1]), c0, 0, Vars::XY).unwrap().dim(), 6);
        assert_eq!(space_mkij(&mu(&[1]), c0, 1, Vars::XY).unwrap().dim(), 1);
        assert!(matches!(
            space_mkij(&mu(&[2, 1]), c0, 4, Vars::XY),
            Err(Error::KTooLarge { .. })
        ));
    }

    #[test]
    fn upper_bound_and_s_n_stability_on_small_shapes() {
        for m in Partition::all_up_to(4) {
            for c in m.cells() {
                let s = shadow_size(&m, c).unwrap();
                for k in 0..=s {
                    let n = m.size() - k;
                    let span = space_mkij(&m, c, k, Vars::XY).unwrap();
                    assert!(span.dim() as u64 <= binomial(s, k) * factorial(n));
                    for b in span.basis() {
                        for t in 1..n {
                            let mut sigma: Vec<usize> = (1..=n).collect();
                            sigma.swap(t - 1, t);
                            assert!(span.contains(&b.act(&sigma).unwrap()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closure_is_monotone_in_generators() {
        let m = mu(&[3, 1]);
        let gens = mkij_generators(&m, Cell::new(0, 0), 2).unwrap();
        let mut prev = derivative_closure(2, &[]).unwrap();
        for i in 1..=gens.len() {
            let cur = derivative_closure(2, &gens[..i]).unwrap();
            assert!(prev.is_subspace_of(&cur));
            prev = cur;
        }
    }

    #[test]
    fn single_diagram_space() {
        let d = LatticeDiagram::new(vec![Cell::new(0, 0), Cell::new(2, 0)]).unwrap();
        // x2^2 - x1^2 -> x1, x2 -> 1
        assert_eq!(space_of(&d, Vars::XY).unwrap().dim(), 4);
    }
}
