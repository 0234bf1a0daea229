//! Subsets of `N^m` under the product order: minimal generators, volumes and
//! dimension polynomials.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::numpoly::{binomial, NumericalPolynomial};

/// A point `(u_1, ..., u_m)` of `N^m`.
///
/// The derived `Ord` is plain lexicographic order; it is only used to put
/// generator lists into a canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(entries: Vec<u64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(m: usize) -> Self {
        ExponentVector(vec![0; m])
    }

    /// Unit vector `e_j` (zero-based `j`).
    pub fn unit(m: usize, j: usize) -> Self {
        let mut v = vec![0; m];
        v[j] = 1;
        ExponentVector(v)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Total order `u_1 + ... + u_m`.
    pub fn order(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&u| u == 0)
    }

    /// Product order: every entry of `self` is at most the matching entry of `other`.
    pub fn le_product(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Self {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, assuming `other <= self`.
    pub(crate) fn sub(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, u) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, ")")
    }
}

/// The upward closure of finitely many generators in `N^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentSet {
    m: usize,
    generators: Vec<ExponentVector>,
}

impl ExponentSet {
    pub fn new(m: usize, generators: Vec<ExponentVector>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| g.dim() != m) {
            return Err(Error::AmbientMismatch(format!(
                "generator {bad} has {} entries, expected {m}",
                bad.dim()
            )));
        }
        Ok(ExponentSet { m, generators })
    }

    pub fn empty(m: usize) -> Self {
        ExponentSet {
            m,
            generators: Vec::new(),
        }
    }

    /// Convenience constructor from literal tuples; panics on ragged input.
    pub fn from_tuples(m: usize, tuples: &[&[u64]]) -> Self {
        let gens = tuples
            .iter()
            .map(|t| ExponentVector::new(t.to_vec()))
            .collect();
        ExponentSet::new(m, gens).expect("tuples must all have width m")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether `xi` lies in the upward closure.
    pub fn contains(&self, xi: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.le_product(xi))
    }

    /// Whether the upward closure of `self` is contained in that of `other`.
    pub fn is_subset_of(&self, other: &ExponentSet) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Adds a generator; the result is not canonicalized.
    pub fn insert(&mut self, xi: ExponentVector) -> Result<()> {
        if xi.dim() != self.m {
            return Err(Error::AmbientMismatch(format!(
                "generator {xi} has {} entries, expected {}",
                xi.dim(),
                self.m
            )));
        }
        self.generators.push(xi);
        Ok(())
    }

    /// The antichain of minimal generators, sorted lexicographically.
    pub fn minimal_elements(&self) -> ExponentSet {
        let mut gens = self.generators.clone();
        gens.sort();
        gens.dedup();
        let minimal: Vec<ExponentVector> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.le_product(g)))
            .cloned()
            .collect();
        ExponentSet {
            m: self.m,
            generators: minimal,
        }
    }

    /// Sum of the orders of the minimal generators (0 for the empty set).
    pub fn minimal_order_sum(&self) -> u64 {
        self.minimal_elements()
            .generators
            .iter()
            .map(ExponentVector::order)
            .sum()
    }

    /// Largest order of a minimal generator (0 for the empty set).
    pub fn max_order(&self) -> u64 {
        self.minimal_elements()
            .generators
            .iter()
            .map(ExponentVector::order)
            .max()
            .unwrap_or(0)
    }

    /// Level from which `omega_E` agrees with the volume: `max(0, m(D - 1))`
    /// where `D` sums the orders of the minimal generators.
    pub fn stability_bound(&self) -> u64 {
        let d = self.minimal_order_sum();
        (self.m as u64).saturating_mul(d.saturating_sub(1))
    }

    /// `|V_E(s)|` by enumerating all points of order at most `s`.
    pub fn volume(&self, s: u64) -> Result<BigInt> {
        self.volume_with(s, &Limits::default())
    }

    pub fn volume_with(&self, s: u64, limits: &Limits) -> Result<BigInt> {
        let candidates = binomial(&BigInt::from(s + self.m as u64), self.m);
        if candidates > BigInt::from(limits.enumeration_cap) {
            return Err(Error::ResourceLimit(format!(
                "volume enumeration at s = {s}, m = {} visits {candidates} points (cap {})",
                self.m, limits.enumeration_cap
            )));
        }
        let minimal = self.minimal_elements();
        let mut point = vec![0u64; self.m];
        let mut count = 0u64;
        enumerate_points(&mut point, 0, s, &mut |xi| {
            if !minimal
                .generators
                .iter()
                .any(|g| g.0.iter().zip(xi).all(|(a, b)| a <= b))
            {
                count += 1;
            }
        });
        Ok(BigInt::from(count))
    }

    /// `|V_E(s)|` by inclusion-exclusion over joins of minimal generators.
    pub fn volume_ie(&self, s: u64) -> Result<BigInt> {
        self.volume_ie_with(s, &Limits::default())
    }

    pub fn volume_ie_with(&self, s: u64, limits: &Limits) -> Result<BigInt> {
        let minimal = self.minimal_elements();
        let k = minimal.generators.len();
        if k >= 63 || (1u64 << k) > limits.enumeration_cap {
            return Err(Error::ResourceLimit(format!(
                "inclusion-exclusion over {k} generators"
            )));
        }
        let m = self.m;
        let above = |eta: &ExponentVector| -> BigInt {
            let ord = eta.order();
            if s < ord {
                BigInt::zero()
            } else {
                binomial(&BigInt::from(s - ord + m as u64), m)
            }
        };
        let mut total = BigInt::zero();
        let mut stack = vec![(0usize, ExponentVector::zero(m), false)];
        // each stack entry is (next index to consider, current join, odd size)
        while let Some((next, join, odd)) = stack.pop() {
            let term = above(&join);
            if odd {
                total -= term;
            } else {
                total += term;
            }
            for i in next..k {
                stack.push((i + 1, join.join(&minimal.generators[i]), !odd));
            }
        }
        Ok(total)
    }

    /// The dimension polynomial `omega_E` with degree bound `m`.
    pub fn dimension_polynomial(&self) -> NumericalPolynomial {
        let mut memo = HashMap::new();
        omega(self.minimal_elements(), &mut memo)
    }
}

fn enumerate_points(point: &mut [u64], idx: usize, budget: u64, visit: &mut impl FnMut(&[u64])) {
    if idx == point.len() {
        visit(point);
        return;
    }
    for u in 0..=budget {
        point[idx] = u;
        enumerate_points(point, idx + 1, budget - u, visit);
    }
    point[idx] = 0;
}

type Memo = HashMap<ExponentSet, NumericalPolynomial>;

/// Recursion on a canonical antichain: split off a pivot coordinate `j`,
/// `omega_E(t) = omega_{E1}(t) + omega_{E2}(t - 1)` where `E1` is the slice
/// `u_j = 0` and `E2` is `E` translated down by `e_j`.
fn omega(set: ExponentSet, memo: &mut Memo) -> NumericalPolynomial {
    if let Some(hit) = memo.get(&set) {
        return hit.clone();
    }
    let m = set.m;
    let result = if set.generators.is_empty() {
        NumericalPolynomial::basis(m, m)
    } else if set.generators.iter().any(ExponentVector::is_zero) {
        NumericalPolynomial::zero(m)
    } else if m == 1 {
        NumericalPolynomial::constant(1, set.generators[0].0[0])
    } else {
        // generators are sorted, so the first one is the lexicographically smallest
        let pivot = &set.generators[0];
        let j = pivot
            .0
            .iter()
            .rposition(|&u| u != 0)
            .expect("pivot is nonzero");
        let slice: Vec<ExponentVector> = set
            .generators
            .iter()
            .filter(|g| g.0[j] == 0)
            .map(|g| {
                let mut e = g.0.clone();
                e.remove(j);
                ExponentVector(e)
            })
            .collect();
        let lowered: Vec<ExponentVector> = set
            .generators
            .iter()
            .map(|g| {
                let mut e = g.0.clone();
                e[j] = e[j].saturating_sub(1);
                ExponentVector(e)
            })
            .collect();
        let e1 = ExponentSet {
            m: m - 1,
            generators: slice,
        }
        .minimal_elements();
        let e2 = ExponentSet {
            m,
            generators: lowered,
        }
        .minimal_elements();
        let w1 = omega(e1, memo).padded(m);
        let w2 = omega(e2, memo).shift(1);
        &w1 + &w2
    };
    memo.insert(set, result.clone());
    result
}

impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// Parses comma-separated naturals such as `0,2`, reporting errors at `line`.
pub(crate) fn parse_tuple(text: &str, line: usize, column: usize) -> Result<ExponentVector> {
    let mut entries = Vec::new();
    let mut col = column;
    for tok in text.split(',') {
        let trimmed = tok.trim();
        let offset = tok.len() - tok.trim_start().len();
        let value = trimmed.parse::<u64>().map_err(|_| {
            Error::parse(
                line,
                col + offset,
                format!("expected a natural number, found {trimmed:?}"),
            )
        })?;
        entries.push(value);
        col += tok.len() + 1;
    }
    Ok(ExponentVector(entries))
}

/// Parses the exponent-set text format: one generator per line as
/// comma-separated naturals, with blank lines and `#` comments ignored.
///
/// The dimension is inferred from the tuple width unless `m` is given; an empty
/// file needs an explicit `m`.
pub fn parse_exponent_set(text: &str, m: Option<usize>) -> Result<ExponentSet> {
    let mut width = m;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let xi = parse_tuple(content, line, 1)?;
        match width {
            Some(w) if w != xi.dim() => {
                return Err(Error::parse(
                    line,
                    1,
                    format!("tuple has {} entries, expected {w}", xi.dim()),
                ))
            }
            Some(_) => {}
            None => width = Some(xi.dim()),
        }
        gens.push(xi);
    }
    let m = width.ok_or_else(|| Error::Invalid("empty exponent set needs an explicit m".into()))?;
    ExponentSet::new(m, gens)
}

/// Renders a set in the exponent-set text format.
pub fn format_exponent_set(set: &ExponentSet) -> String {
    set.generators
        .iter()
        .map(|g| {
            let parts: Vec<String> = g.0.iter().map(u64::to_string).collect();
            parts.join(",") + "\n"
        })
        .collect()
}
