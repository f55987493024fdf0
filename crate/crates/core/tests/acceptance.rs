//! Acceptance suite: one PASS/FAIL line per criterion. Pass `--slow` (or set
//! `LATTICE_SLOW=1`) to include the bivariate n = 6 dimensions.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};

use lattice_core::basis::{build_basis_x, depth_tuple, enumerate_right};
use lattice_core::cli::{box_diagrams, random_diagrams};
use lattice_core::diagram::{binomial, factorial, remove_cells, shadow_size};
use lattice_core::harmonic::{
    counterexample_probe, epsilon, shift_expand, space_mkij, space_of, verify_shift,
    verify_sum_reduction, Vars,
};
use lattice_core::poly::{delta, sym_function};
use lattice_core::{
    Alphabet, Cell, LatticeDiagram, Monomial, Partition, Polynomial, Rational, SpanBasis, SymKind,
    Var,
};

type Check = Result<String, String>;
/// Exponents of `(x4, y4, x5, y5)`.
type OuterExps = (u8, u8, u8, u8);
/// Expected coefficient: outer exponents, sign, holes.
type Coefficient = (OuterExps, i64, [(u32, u32); 2]);
type Criterion<'a> = (&'a str, Box<dyn Fn() -> Check>);

fn c(r: u32, q: u32) -> Cell {
    Cell::new(r, q)
}

fn diagram(cells: &[(u32, u32)]) -> LatticeDiagram {
    LatticeDiagram::new(cells.iter().map(|&x| x.into()).collect()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn shift_identities() -> Check {
    let t = Instant::now();
    let mut diagrams = box_diagrams(4, 4);
    diagrams.extend(random_diagrams(200, 5, 5, 7));
    let mut count = 0;
    for d in &diagrams {
        for kind in SymKind::ALL {
            for r in 1..=3 {
                let rep = verify_shift(kind, r, d).map_err(|e| e.to_string())?;
                ensure(rep.matched, || {
                    format!("{kind} r={r} on {d}: {} vs {}", rep.lhs, rep.rhs)
                })?;
                count += 1;
            }
        }
    }
    ensure(t.elapsed() < Duration::from_secs(120), || {
        format!("took {:?}", t.elapsed())
    })?;
    Ok(format!("{count} exact identities"))
}

fn e1_twice() -> Check {
    // e1(d) as the plain sum of first derivatives, applied twice
    let l = diagram(&[(1, 0), (1, 1)]);
    let e1 = |p: &Polynomial| {
        (0..2).fold(Polynomial::zero(2), |acc, i| {
            acc.add(&p.derivative(Var::X(i))).unwrap()
        })
    };
    let lhs = e1(&e1(&delta(&l, 2).unwrap()));
    let rhs = delta(&diagram(&[(0, 0), (0, 1)]), 2)
        .unwrap()
        .scale(&Rational::from_int(2));
    ensure(lhs == rhs, || format!("{lhs} vs {rhs}"))?;
    Ok(format!("e1 e1 Delta = {lhs}"))
}

fn laplace_expansion() -> Check {
    let t = Instant::now();
    let mu = Partition::new(vec![3, 2]).unwrap();
    let d = delta(&mu.diagram(), 5).unwrap().derivative(Var::X(4));
    // split each term into its (x4, y4, x5, y5) part and its X3, Y3 part
    let mut groups: BTreeMap<OuterExps, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, coef) in d.terms() {
        let (x, y) = (m.x_exps(), m.y_exps());
        let inner = Monomial::from_exps(
            &[x[0], x[1], x[2]].map(u32::from),
            &[y[0], y[1], y[2]].map(u32::from),
        )
        .unwrap();
        groups
            .entry((x[3], y[3], x[4], y[4]))
            .or_default()
            .push((inner, coef.clone()));
    }
    let expected: [Coefficient; 8] = [
        ((0, 0, 0, 0), 1, [(0, 0), (1, 0)]),
        ((0, 0, 0, 1), 1, [(0, 0), (1, 1)]),
        ((0, 1, 0, 0), -1, [(1, 0), (0, 1)]),
        ((1, 0, 0, 1), -1, [(1, 0), (1, 1)]),
        ((1, 1, 0, 0), 1, [(1, 0), (1, 1)]),
        ((0, 2, 0, 0), -1, [(1, 0), (0, 2)]),
        ((0, 1, 0, 1), 1, [(0, 1), (1, 1)]),
        ((0, 2, 0, 1), -1, [(1, 1), (0, 2)]),
    ];
    ensure(groups.len() == expected.len(), || {
        format!("{} monomial groups", groups.len())
    })?;
    for (key, sign, holes) in expected {
        let holes: Vec<Cell> = holes.iter().map(|&h| h.into()).collect();
        let want = delta(&remove_cells(&mu, &holes).unwrap(), 3)
            .unwrap()
            .scale(&Rational::from_int(sign));
        let got = Polynomial::from_terms(3, groups.get(&key).cloned().unwrap_or_default());
        ensure(got == want, || {
            format!("coefficient of {key:?}: {got} vs {want}")
        })?;
    }
    ensure(t.elapsed() < Duration::from_secs(30), || {
        format!("took {:?}", t.elapsed())
    })?;
    Ok("8 monomial coefficients, 7 distinct determinants".into())
}

fn n_factorial_dims(slow: bool) -> Check {
    let max_xy = if slow { 6 } else { 5 };
    let mut checked = 0;
    for mu in Partition::all_up_to(max_xy) {
        let n = mu.size();
        let d = space_of(&mu.diagram(), Vars::XY)
            .map_err(|e| e.to_string())?
            .dim() as u64;
        ensure(d == factorial(n), || {
            format!("dim M_{mu} = {d}, expected {}", factorial(n))
        })?;
        checked += 1;
    }
    for mu in Partition::all_up_to(7) {
        let n = mu.size();
        let want = factorial(n) / mu.factorial_product();
        let d = space_of(&mu.diagram(), Vars::X)
            .map_err(|e| e.to_string())?
            .dim() as u64;
        ensure(d == want, || {
            format!("dim M_{mu}(X) = {d}, expected {want}")
        })?;
        checked += 1;
    }
    Ok(format!(
        "{checked} partitions (bivariate n <= {max_xy}, X-only n <= 7)"
    ))
}

fn upper_bound() -> Check {
    let (mut total, mut equal) = (0, 0);
    for mu in Partition::all_up_to(5) {
        for a in mu.cells() {
            let s = shadow_size(&mu, a).unwrap();
            for k in 1..=s {
                let n = mu.size() - k;
                let bound = binomial(s, k) * factorial(n);
                let d = space_mkij(&mu, a, k, Vars::XY)
                    .map_err(|e| e.to_string())?
                    .dim() as u64;
                ensure(d <= bound, || {
                    format!("{mu} {a} k={k}: dim {d} > bound {bound}")
                })?;
                total += 1;
                equal += usize::from(d == bound);
            }
        }
    }
    ensure(equal == total, || {
        format!("bound attained on {equal} of {total} instances")
    })?;
    Ok(format!("{total} instances, bound attained on all"))
}

fn explicit_basis() -> Check {
    let t = Instant::now();
    let mut count = 0;
    for mu in Partition::all_up_to(6) {
        for a in mu.cells() {
            let s = shadow_size(&mu, a).unwrap();
            for k in 0..=s.min(3) {
                let r = build_basis_x(&mu, a, k).map_err(|e| e.to_string())?;
                ensure(r.cardinality_ok && r.independent && r.spans_ok, || {
                    format!(
                        "{mu} {a} k={k}: card {} ind {} span {}",
                        r.cardinality_ok, r.independent, r.spans_ok
                    )
                })?;
                ensure(r.dim_x as u64 == r.tableaux, || {
                    format!("{mu} {a} k={k}: dim {} vs tableaux {}", r.dim_x, r.tableaux)
                })?;
                count += 1;
            }
        }
    }
    ensure(t.elapsed() < Duration::from_secs(600), || {
        format!("took {:?}", t.elapsed())
    })?;
    Ok(format!("{count} instances"))
}

fn reductions() -> Check {
    let (mut one, mut two) = (0, 0);
    for mu in Partition::all_up_to(5) {
        for a in mu.cells() {
            let r = verify_sum_reduction(&mu, a).map_err(|e| e.to_string())?;
            ensure(r.k1.equal, || format!("k=1 fails at {mu} {a}"))?;
            one += 1;
            if let Some(k2) = &r.k2 {
                ensure(k2.equal, || format!("k=2 fails at {mu} {a}"))?;
                two += 1;
            }
        }
    }
    Ok(format!("{one} one-hole and {two} two-hole cases"))
}

fn counterexample() -> Check {
    let mu = Partition::new(vec![3, 2]).unwrap();
    let gens = vec![
        vec![c(0, 0), c(1, 0), c(0, 1)],
        vec![c(0, 0), c(0, 1), c(0, 2)],
    ];
    let member = counterexample_probe(&mu, &[c(0, 0), c(1, 0), c(0, 2)], &gens)
        .map_err(|e| e.to_string())?;
    ensure(!member, || "target lies in the sum".into())?;
    Ok("target determinant is outside the two-generator sum".into())
}

fn depth_injectivity() -> Check {
    let t = Instant::now();
    let mut families = 0;
    for mu in Partition::all_up_to(8) {
        for a in mu.cells() {
            let s = shadow_size(&mu, a).unwrap();
            for k in 0..=s {
                let fs = enumerate_right(&mu, a, k).unwrap();
                let depths: Vec<Vec<u32>> =
                    fs.iter().map(|f| depth_tuple(&mu, &f.holes())).collect();
                ensure(depths.iter().all_unique(), || {
                    format!("repeated depth tuple at {mu} {a} k={k}")
                })?;
                families += 1;
            }
        }
    }
    ensure(t.elapsed() < Duration::from_secs(60), || {
        format!("took {:?}", t.elapsed())
    })?;
    Ok(format!("{families} families of Right diagrams"))
}

fn epsilon_multiplicative(rng: &mut StdRng) -> Result<usize, String> {
    let mut done = 0;
    let kinds = SymKind::ALL;
    while done < 500 {
        let n = rng.random_range(2..=5);
        let l = random_diagrams(1, n, 5, rng.random()).pop().unwrap();
        let step = |from: &LatticeDiagram, rng: &mut StdRng| -> Option<LatticeDiagram> {
            let kind = *kinds.choose(rng).unwrap();
            let terms = shift_expand(kind, rng.random_range(1..=2), from).ok()?;
            terms.choose(rng).map(|t| t.diagram.clone())
        };
        let Some(mid) = step(&l, rng) else { continue };
        let Some(end) = step(&mid, rng) else { continue };
        let direct = epsilon(&l, &end).map_err(|e| e.to_string())?;
        let composed = epsilon(&l, &mid).unwrap() * epsilon(&mid, &end).unwrap();
        ensure(direct == composed, || format!("{l} -> {mid} -> {end}"))?;
        done += 1;
    }
    Ok(done)
}

fn alternance() -> Result<usize, String> {
    let mut count = 0;
    for d in box_diagrams(4, 3) {
        let n = d.len();
        let p = delta(&d, n).unwrap();
        for perm in (1..=n).permutations(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let acted = p.act(&perm).unwrap();
            ensure(acted == p.scale(&Rational::from_int(sign)), || {
                format!("{d} under {perm:?}")
            })?;
            count += 1;
        }
    }
    Ok(count)
}

fn newton() -> Result<usize, String> {
    let mut count = 0;
    for m in 1..=5 {
        let sym = |kind, r| sym_function(kind, r, Alphabet::X, m).unwrap();
        for k in 1..=5u32 {
            // sum_i (-1)^i e_i h_{k-i} = 0 and k h_k = sum_i p_i h_{k-i}
            let mut alt = Polynomial::zero(m);
            let mut power = Polynomial::zero(m);
            for i in 0..=k {
                let h = sym(SymKind::Homogeneous, k - i);
                let sign = Rational::from_int(if i % 2 == 0 { 1 } else { -1 });
                alt = alt
                    .add_scaled(&sym(SymKind::Elementary, i).mul(&h).unwrap(), &sign)
                    .unwrap();
                if i >= 1 {
                    power = power
                        .add(&sym(SymKind::PowerSum, i).mul(&h).unwrap())
                        .unwrap();
                }
            }
            ensure(alt.is_zero(), || {
                format!("alternating identity fails for k={k}, m={m}")
            })?;
            let kh = sym(SymKind::Homogeneous, k).scale(&Rational::from_int(k as i64));
            ensure(power == kh, || {
                format!("power-sum identity fails for k={k}, m={m}")
            })?;
            count += 2;
        }
    }
    Ok(count)
}

fn insertion_order(rng: &mut StdRng) -> Result<usize, String> {
    for trial in 0..50 {
        let m = rng.random_range(1..=3);
        let mut gens = Vec::new();
        for _ in 0..rng.random_range(1..=8) {
            // bihomogeneous of a random bidegree
            let (a, b) = (rng.random_range(0..3u32), rng.random_range(0..3u32));
            let mut terms = Vec::new();
            for _ in 0..rng.random_range(1..4) {
                let mut x = vec![0; m];
                let mut y = vec![0; m];
                (0..a).for_each(|_| x[rng.random_range(0..m)] += 1);
                (0..b).for_each(|_| y[rng.random_range(0..m)] += 1);
                terms.push((
                    Monomial::from_exps(&x, &y).unwrap(),
                    Rational::from_int(rng.random_range(-3..=3)),
                ));
            }
            gens.push(Polynomial::from_terms(m, terms));
        }
        let build = |gs: &[Polynomial]| {
            let mut s = SpanBasis::new(m);
            gs.iter().for_each(|g| {
                s.insert(g).unwrap();
            });
            s
        };
        let first = build(&gens);
        let mut shuffled = gens.clone();
        shuffled.shuffle(rng);
        let second = build(&shuffled);
        ensure(
            first.dim() == second.dim() && first.same_span(&second),
            || format!("trial {trial}"),
        )?;
    }
    Ok(50)
}

fn property_suites() -> Check {
    let mut rng = StdRng::seed_from_u64(2024);
    let eps = epsilon_multiplicative(&mut rng)?;
    let alt = alternance()?;
    let newton = newton()?;
    let orders = insertion_order(&mut rng)?;
    Ok(format!(
        "{eps} composed shifts, {alt} permuted determinants, {newton} symmetric identities, {orders} shuffled spans"
    ))
}

fn main() -> ExitCode {
    let slow = std::env::args().any(|a| a == "--slow")
        || std::env::var("LATTICE_SLOW").is_ok_and(|v| v == "1");
    let criteria: Vec<Criterion> = vec![
        ("shift operator identities", Box::new(shift_identities)),
        ("e1 e1 multiplicity two", Box::new(e1_twice)),
        (
            "Laplace expansion of a derivative",
            Box::new(laplace_expansion),
        ),
        (
            "factorial dimensions",
            Box::new(move || n_factorial_dims(slow)),
        ),
        ("upper bound on M^k", Box::new(upper_bound)),
        ("explicit X-basis of M^k", Box::new(explicit_basis)),
        ("one- and two-hole reductions", Box::new(reductions)),
        ("three-hole counterexample", Box::new(counterexample)),
        ("depth tuple injectivity", Box::new(depth_injectivity)),
        ("property suites", Box::new(property_suites)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
