//! Sparse polynomials in `x_1..x_m, y_1..y_m` with exact rational coefficients.
//!
//! Terms are stored sorted under the graded lexicographic order on the
//! exponent vector `(x_1, .., x_m, y_1, .., y_m)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{Canonical, LatticeDiagram};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest supported alphabet size (per alphabet).
pub const MAX_VARS: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u8; 2 * MAX_VARS],
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    X,
    Y,
}

/// One variable: `x_{i+1}` or `y_{i+1}` for index `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Var {
    X(usize),
    Y(usize),
}

impl Var {
    fn slot(self) -> usize {
        match self {
            Var::X(i) => i,
            Var::Y(i) => MAX_VARS + i,
        }
    }
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exps(x: &[u32], y: &[u32]) -> Result<Self> {
        if x.len() > MAX_VARS || y.len() > MAX_VARS {
            return Err(Error::TooManyVariables(x.len().max(y.len())));
        }
        let mut exps = [0u8; 2 * MAX_VARS];
        for (i, &e) in x.iter().enumerate() {
            exps[i] = u8::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        }
        for (i, &e) in y.iter().enumerate() {
            exps[MAX_VARS + i] = u8::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(Monomial { exps })
    }

    pub fn var(v: Var) -> Self {
        let mut m = Self::one();
        m.exps[v.slot()] = 1;
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.slot()] as u32
    }

    pub fn x_exps(&self) -> &[u8] {
        &self.exps[..MAX_VARS]
    }

    pub fn y_exps(&self) -> &[u8] {
        &self.exps[MAX_VARS..]
    }

    pub fn x_degree(&self) -> u32 {
        self.x_exps().iter().map(|&e| e as u32).sum()
    }

    pub fn y_degree(&self) -> u32 {
        self.y_exps().iter().map(|&e| e as u32).sum()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.x_degree(), self.y_degree())
    }

    /// The X-part of the monomial (Y exponents cleared).
    pub fn x_part(&self) -> Self {
        let mut m = *self;
        m.exps[MAX_VARS..].fill(0);
        m
    }

    /// The Y-part of the monomial (X exponents cleared).
    pub fn y_part(&self) -> Self {
        let mut m = *self;
        m.exps[..MAX_VARS].fill(0);
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Self> {
        let mut exps = [0u8; 2 * MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i]
                .checked_add(other.exps[i])
                .ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial { exps })
    }

    /// Highest variable index (plus one) with a nonzero exponent.
    fn support_len(&self) -> usize {
        let x = self
            .x_exps()
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |i| i + 1);
        let y = self
            .y_exps()
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |i| i + 1);
        x.max(y)
    }

    /// `d^self (other) = coef * mono`, or `None` when the derivative vanishes.
    pub fn differentiate(&self, other: &Monomial) -> Option<(u64, Monomial)> {
        let mut out = *other;
        let mut coef = 1u64;
        for (i, &d) in self.exps.iter().enumerate() {
            let e = other.exps[i];
            if d > e {
                return None;
            }
            for f in (e - d + 1)..=e {
                coef *= f as u64;
            }
            out.exps[i] = e - d;
        }
        Some((coef, out))
    }

    /// `prod a_i!` over all exponents.
    pub fn factorial_weight(&self) -> Rational {
        let mut acc = Rational::one();
        for &e in &self.exps {
            if e > 1 {
                acc *= &Rational::factorial(e as u32);
            }
        }
        acc
    }

    /// Applies the substitution `x_i -> x_{perm[i]}`, `y_i -> y_{perm[i]}` (0-based).
    fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Monomial::one();
        for (i, &t) in perm.iter().enumerate() {
            out.exps[t] = self.exps[i];
            out.exps[MAX_VARS + t] = self.exps[MAX_VARS + i];
        }
        out
    }

    fn write_factors(&self, f: &mut fmt::Formatter<'_>, m: usize) -> fmt::Result {
        let mut first = true;
        for (name, block) in [("x", self.x_exps()), ("y", self.y_exps())] {
            for (i, &e) in block.iter().take(m.max(MAX_VARS)).enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{name}{}", i + 1)?;
                } else {
                    write!(f, "{name}{}^{e}", i + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::one() {
            return f.write_str("1");
        }
        self.write_factors(f, MAX_VARS)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, Monomial::one(), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn monomial(nvars: usize, mono: Monomial, c: Rational) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(mono, c)]
        };
        Polynomial { nvars, terms }
    }

    pub fn var(nvars: usize, v: Var) -> Self {
        Self::monomial(nvars, Monomial::var(v), Rational::one())
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += &c;
        }
        Polynomial {
            nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Terms already sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(t, _)| t.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Largest term under the canonical order.
    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    /// `Some((a, b))` when every term has X-degree `a` and Y-degree `b`.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let first = self.terms.first()?.0.bidegree();
        self.terms
            .iter()
            .all(|(m, _)| m.bidegree() == first)
            .then_some(first)
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.bidegree().is_some()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.x_degree()).max()
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.y_degree()).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::AlphabetMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &Rational) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (m, b) = &other.terms[j];
                    let v = b * c;
                    if !v.is_zero() {
                        out.push((*m, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let mut v = self.terms[i].1.clone();
                    v.sub_mul(&-c, &other.terms[j].1);
                    if !v.is_zero() {
                        out.push((self.terms[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms: out,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &Rational::from_int(-1))
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from_int(-1))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = acc.entry(a.mul(b)?).or_default();
                e.sub_mul(&-ca, cb);
            }
        }
        Ok(Self::from_map(self.nvars, acc))
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn from_map(nvars: usize, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        Polynomial { nvars, terms }
    }

    /// First-order partial derivative.
    pub fn derivative(&self, v: Var) -> Self {
        let slot = v.slot();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[slot] > 0)
            .map(|(m, c)| {
                let e = m.exps[slot];
                let mut d = *m;
                d.exps[slot] = e - 1;
                (d, c * &Rational::from_int(e as i64))
            })
            .collect();
        // the order is translation invariant, so the result is still sorted
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// `mono(d) self`.
    pub fn differentiate_by(&self, mono: &Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                mono.differentiate(m)
                    .map(|(k, d)| (d, c * &Rational::from_int(k as i64)))
            })
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// `self(d) p`: substitute derivatives for the variables of `self` and apply to `p`.
    pub fn apply_to(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_same(p)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (q, cq) in &self.terms {
            for (m, cm) in &p.terms {
                if let Some((k, d)) = q.differentiate(m) {
                    let e = acc.entry(d).or_default();
                    e.sub_mul(&-(cq * cm), &Rational::from_int(k as i64));
                }
            }
        }
        Ok(Self::from_map(self.nvars, acc))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// Sum of the terms of bidegree exactly `(a, b)`.
    pub fn bihomogeneous_component(&self, a: u32, b: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.bidegree() == (a, b))
            .cloned()
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// All nonzero bihomogeneous components keyed by bidegree.
    pub fn components(&self) -> BTreeMap<(u32, u32), Polynomial> {
        let mut out: BTreeMap<(u32, u32), Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree()).or_default().push((*m, c.clone()));
        }
        out.into_iter()
            .map(|(k, terms)| {
                (
                    k,
                    Polynomial {
                        nvars: self.nvars,
                        terms,
                    },
                )
            })
            .collect()
    }

    /// Groups terms by their Y-part: `self = sum_b y^b * coeff_b(X)`.
    pub fn y_coefficients(&self) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.y_part())
                .or_default()
                .push((m.x_part(), c.clone()));
        }
        out.into_iter()
            .map(|(k, t)| (k, Polynomial::from_terms(self.nvars, t)))
            .collect()
    }

    /// Diagonal action `x_i -> x_{sigma_i}`, `y_i -> y_{sigma_i}` with `sigma` 1-based.
    pub fn act(&self, sigma: &[usize]) -> Result<Polynomial> {
        let m = self.nvars;
        let mut seen = vec![false; m];
        if sigma.len() != m {
            return Err(Error::InvalidPermutation(m));
        }
        for &s in sigma {
            if s == 0 || s > m || seen[s - 1] {
                return Err(Error::InvalidPermutation(m));
            }
            seen[s - 1] = true;
        }
        let perm: Vec<usize> = sigma.iter().map(|s| s - 1).collect();
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(mono, c)| (mono.permute(&perm), c.clone()))
            .collect();
        terms.sort_unstable_by_key(|a| a.0);
        Ok(Polynomial { nvars: m, terms })
    }

    /// Parses the textual format, e.g. `"x2 - x1"` or `"3/2*x1^2*y2 + 1"`.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty polynomial"));
        }
        if compact == "0" {
            return Ok(Self::zero(nvars));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let mut prev = '+';
        for (i, ch) in compact.char_indices() {
            if i > start && (ch == '+' || ch == '-') && prev != '+' && prev != '-' {
                pieces.push(&compact[start..i]);
                start = i;
            }
            prev = ch;
        }
        pieces.push(&compact[start..]);
        let mut terms = Vec::new();
        for piece in pieces {
            let body = piece.trim_start_matches(['+', '-']);
            let neg = piece[..piece.len() - body.len()].matches('-').count() % 2 == 1;
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let mut coef = Rational::one();
            let (mut x, mut y) = (vec![0u32; nvars], vec![0u32; nvars]);
            for (fi, factor) in body.split('*').enumerate() {
                let first = factor.chars().next().ok_or_else(|| bad("empty factor"))?;
                if first.is_ascii_digit() {
                    if fi != 0 {
                        return Err(bad("coefficient must come first"));
                    }
                    coef = factor.parse()?;
                    continue;
                }
                let block = match first {
                    'x' => &mut x,
                    'y' => &mut y,
                    _ => return Err(bad("unknown variable")),
                };
                let (idx, e) = match factor[1..].split_once('^') {
                    Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (&factor[1..], 1),
                };
                let idx: usize = idx.parse().map_err(|_| bad("bad variable index"))?;
                if idx == 0 || idx > nvars {
                    return Err(bad("variable index out of range"));
                }
                block[idx - 1] += e;
            }
            if neg {
                coef = -coef;
            }
            terms.push((Monomial::from_exps(&x, &y)?, coef));
        }
        Ok(Self::from_terms(nvars, terms))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let is_const = *m == Monomial::one();
            if is_const {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.write_factors(f, self.nvars)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses with the alphabet size inferred from the largest variable index.
    fn from_str(s: &str) -> Result<Self> {
        let p = Polynomial::parse(s, MAX_VARS)?;
        let m = p
            .terms
            .iter()
            .map(|(m, _)| m.support_len())
            .max()
            .unwrap_or(0);
        Ok(Polynomial {
            nvars: m,
            terms: p.terms,
        })
    }
}

fn check_alphabet(m: usize) -> Result<()> {
    if m > MAX_VARS {
        return Err(Error::TooManyVariables(m));
    }
    Ok(())
}

/// The lattice determinant `det(x_i^{p_j} y_i^{q_j})` in `m = n` variables.
pub fn delta(diagram: &LatticeDiagram, m: usize) -> Result<Polynomial> {
    let n = diagram.len();
    if m != n {
        return Err(Error::AlphabetSize {
            alphabet: m,
            cells: n,
        });
    }
    check_alphabet(m)?;
    let cells = diagram.cells();
    let mut exps = Vec::with_capacity(n);
    for c in cells {
        let p = u8::try_from(c.row).map_err(|_| Error::ExponentOverflow)?;
        let q = u8::try_from(c.col).map_err(|_| Error::ExponentOverflow)?;
        exps.push((p, q));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut push = |perm: &[usize], sign: i64| {
        let mut mono = Monomial::one();
        for (i, &j) in perm.iter().enumerate() {
            mono.exps[i] = exps[j].0;
            mono.exps[MAX_VARS + i] = exps[j].1;
        }
        terms.push((mono, Rational::from_int(sign)));
    };
    // Heap's algorithm; every step is one transposition
    push(&perm, sign);
    let mut stack = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            sign = -sign;
            push(&perm, sign);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    // distinct cells give distinct monomials
    terms.sort_unstable_by_key(|a| a.0);
    Ok(Polynomial::from_sorted_terms(m, terms))
}

/// Determinant of a possibly degenerate diagram: zero for the zero marker,
/// otherwise the signed determinant of the canonical diagram.
pub fn delta_canonical(c: &Canonical, m: usize) -> Result<Polynomial> {
    match c {
        Canonical::Zero => Ok(Polynomial::zero(m)),
        Canonical::Diagram { diagram, sign } => {
            Ok(delta(diagram, m)?.scale(&Rational::from_int(*sign as i64)))
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymKind {
    PowerSum,
    Elementary,
    Homogeneous,
}

impl SymKind {
    pub const ALL: [SymKind; 3] = [SymKind::PowerSum, SymKind::Elementary, SymKind::Homogeneous];

    pub fn name(self) -> &'static str {
        match self {
            SymKind::PowerSum => "powersum",
            SymKind::Elementary => "elementary",
            SymKind::Homogeneous => "homogeneous",
        }
    }
}

impl FromStr for SymKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "powersum" | "p" => Ok(SymKind::PowerSum),
            "elementary" | "e" => Ok(SymKind::Elementary),
            "homogeneous" | "h" => Ok(SymKind::Homogeneous),
            _ => Err(Error::Parse(format!(
                "unknown symmetric function kind {s:?}"
            ))),
        }
    }
}

impl fmt::Display for SymKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Power sum, elementary or complete homogeneous symmetric polynomial of degree `r`.
pub fn sym_function(kind: SymKind, r: u32, alphabet: Alphabet, m: usize) -> Result<Polynomial> {
    check_alphabet(m)?;
    let var = |i| match alphabet {
        Alphabet::X => Var::X(i),
        Alphabet::Y => Var::Y(i),
    };
    let exps_to_mono = |e: &[u32]| -> Result<Monomial> {
        let mut mono = Monomial::one();
        for (i, &k) in e.iter().enumerate() {
            mono.exps[var(i).slot()] = u8::try_from(k).map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(mono)
    };
    let mut terms = Vec::new();
    match kind {
        SymKind::PowerSum => {
            if r == 0 {
                return Err(Error::ZeroPowerSum);
            }
            for i in 0..m {
                let mut e = vec![0; m];
                e[i] = r;
                terms.push((exps_to_mono(&e)?, Rational::one()));
            }
        }
        SymKind::Elementary => {
            use itertools::Itertools;
            for subset in (0..m).combinations(r as usize) {
                let mut e = vec![0; m];
                for i in subset {
                    e[i] = 1;
                }
                terms.push((exps_to_mono(&e)?, Rational::one()));
            }
        }
        SymKind::Homogeneous => {
            fn compositions(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
                if slots == 1 {
                    cur.push(rest);
                    out.push(cur.clone());
                    cur.pop();
                    return;
                }
                for k in 0..=rest {
                    cur.push(k);
                    compositions(rest - k, slots - 1, cur, out);
                    cur.pop();
                }
            }
            let mut all = Vec::new();
            if m == 0 {
                if r == 0 {
                    all.push(vec![]);
                }
            } else {
                compositions(r, m, &mut Vec::new(), &mut all);
            }
            for e in all {
                terms.push((exps_to_mono(&e)?, Rational::one()));
            }
        }
    }
    Ok(Polynomial::from_terms(m, terms))
}

/// `<p, q> = L0(p(d) q)`, the constant term of `p(d) q`.
pub fn scalar_product(p: &Polynomial, q: &Polynomial) -> Result<Rational> {
    Ok(p.apply_to(q)?.constant_term())
}
