//! Prolongation matrices and the sampling route to the Kolchin polynomial.
//!
//! For a linear system the prolongation space at level `s` is the projection
//! of the solution space of the equations differentiated up to level
//! `s + margin` onto the derivatives of order at most `s`. Its dimension is a
//! rank count: with columns ordered by decreasing rank (all order `> s`
//! columns first), echelon rows whose pivot has order `<= s` are exactly the
//! constraints left after projection.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{module_groebner, LinearDiffSystem, LinearEquation};
use crate::diffrank::DifferentialMonomial;
use crate::error::{Error, Result};
use crate::expsets::ExponentVector;
use crate::limits::Limits;
use crate::numpoly::NumericalPolynomial;

/// Sparse integer row; entries sorted by key, the first entry is the pivot
/// candidate (smaller key = further left).
type Row = Vec<(usize, BigInt)>;

/// Fraction-free incremental row echelon form.
#[derive(Default)]
struct Echelon {
    pivots: HashMap<usize, Row>,
}

fn content_normalize(row: &mut Row) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c /= &g;
        }
    }
    if row.first().is_some_and(|(_, c)| c.is_negative()) {
        for (_, c) in row.iter_mut() {
            *c = -&*c;
        }
    }
}

/// `b * row - a * pivot` where `a`, `b` are the leading entries; the lead cancels.
fn eliminate(row: &Row, pivot: &Row) -> Row {
    let a = &row[0].1;
    let b = &pivot[0].1;
    let g = a.gcd(b);
    let (fa, fb) = (a / &g, b / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (key, val) = if take_row {
            let e = (row[i].0, &fb * &row[i].1);
            i += 1;
            e
        } else if take_piv {
            let e = (pivot[j].0, -(&fa * &pivot[j].1));
            j += 1;
            e
        } else {
            let e = (row[i].0, &fb * &row[i].1 - &fa * &pivot[j].1);
            i += 1;
            j += 1;
            e
        };
        if !val.is_zero() {
            out.push((key, val));
        }
    }
    out
}

impl Echelon {
    /// Adds a row; returns the key of the new pivot, if the row was independent.
    fn insert(&mut self, mut row: Row) -> Option<usize> {
        loop {
            let lead = row.first()?.0;
            match self.pivots.get(&lead) {
                Some(p) => {
                    row = eliminate(&row, p);
                    content_normalize(&mut row);
                }
                None => {
                    content_normalize(&mut row);
                    self.pivots.insert(lead, row);
                    return Some(lead);
                }
            }
        }
    }
}

/// Integer coefficients of an equation after clearing denominators.
fn integer_terms(eq: &LinearEquation) -> Vec<(DifferentialMonomial, BigInt)> {
    let lcm = eq
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    eq.terms()
        .map(|(k, c)| {
            let v: BigRational = c * BigRational::from_integer(lcm.clone());
            (k.clone(), v.to_integer())
        })
        .collect()
}

/// Exponent vectors of order exactly `k` in `N^m`, lexicographically increasing.
fn compositions(m: usize, k: u64) -> Vec<ExponentVector> {
    fn go(m: usize, k: u64, prefix: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
        if prefix.len() + 1 == m {
            prefix.push(k);
            out.push(ExponentVector::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for u in 0..=k {
            prefix.push(u);
            go(m, k - u, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if k == 0 {
            out.push(ExponentVector::new(Vec::new()));
        }
        return out;
    }
    go(m, k, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Derivatives of order exactly `k` for all unknowns, in increasing rank.
fn monomials_of_order(m: usize, n: usize, k: u64) -> Vec<DifferentialMonomial> {
    let xis = compositions(m, k);
    (1..=n)
        .flat_map(|var| {
            xis.iter()
                .map(move |xi| DifferentialMonomial::new(xi.clone(), var).expect("var >= 1"))
        })
        .collect()
}

fn matrix_cap(rows: u64, cols: u64, limits: &Limits, level: u64) -> Result<()> {
    if rows.saturating_mul(cols) > limits.matrix_cell_cap {
        return Err(Error::ResourceLimit(format!(
            "prolongation matrix at level {level} has {rows} x {cols} cells (cap {})",
            limits.matrix_cell_cap
        )));
    }
    Ok(())
}

/// The explicit prolongation matrix at level `s` with a margin.
///
/// Columns are all derivatives of order at most `s + margin` in decreasing
/// rank; rows are all `delta^theta eq` with `ord theta + ord eq <= s + margin`.
#[derive(Clone, Debug)]
pub struct ProlongationMatrix {
    s: u64,
    margin: u64,
    columns: Vec<DifferentialMonomial>,
    rows: Vec<Vec<(usize, BigRational)>>,
}

impl ProlongationMatrix {
    pub fn new(sys: &LinearDiffSystem, s: u64, margin: u64, limits: &Limits) -> Result<Self> {
        let top = s + margin;
        let (m, n) = (sys.m(), sys.n());
        let mut columns: Vec<DifferentialMonomial> = (0..=top)
            .flat_map(|k| monomials_of_order(m, n, k))
            .collect();
        columns.reverse();
        let row_count: u64 = sys
            .equations()
            .iter()
            .filter(|eq| eq.order() <= top)
            .map(|eq| {
                (0..=top - eq.order())
                    .map(|k| compositions(m, k).len() as u64)
                    .sum::<u64>()
            })
            .sum();
        matrix_cap(row_count, columns.len() as u64, limits, top)?;
        let position: HashMap<&DifferentialMonomial, usize> =
            columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut rows = Vec::new();
        for eq in sys.equations() {
            if eq.order() > top {
                continue;
            }
            for k in 0..=top - eq.order() {
                for theta in compositions(m, k) {
                    let mut row: Vec<(usize, BigRational)> = eq
                        .derive(&theta)
                        .terms()
                        .map(|(mono, c)| (position[mono], c.clone()))
                        .collect();
                    row.sort_by_key(|(p, _)| *p);
                    rows.push(row);
                }
            }
        }
        Ok(ProlongationMatrix {
            s,
            margin,
            columns,
            rows,
        })
    }

    pub fn level(&self) -> u64 {
        self.s
    }

    pub fn margin(&self) -> u64 {
        self.margin
    }

    /// Columns in decreasing rank.
    pub fn columns(&self) -> &[DifferentialMonomial] {
        &self.columns
    }

    /// Sparse rows as `(column position, entry)`.
    pub fn rows(&self) -> &[Vec<(usize, BigRational)>] {
        &self.rows
    }

    /// Dimension of the projection onto the order-`<= s` coordinates.
    pub fn projected_dimension(&self) -> u64 {
        let mut ech = Echelon::default();
        let mut low_pivots = 0u64;
        for row in &self.rows {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
            let int_row: Row = row
                .iter()
                .map(|(p, c)| {
                    (
                        *p,
                        (c * BigRational::from_integer(lcm.clone())).to_integer(),
                    )
                })
                .collect();
            if let Some(p) = ech.insert(int_row) {
                if self.columns[p].order() <= self.s {
                    low_pivots += 1;
                }
            }
        }
        let low_columns = self.columns.iter().filter(|c| c.order() <= self.s).count() as u64;
        low_columns - low_pivots
    }
}

/// Incremental prolongation: raises the level one order at a time and
/// records, for every level `L` reached, the projected dimensions at all
/// `s <= L`.
pub struct Prolongator<'a> {
    sys: &'a LinearDiffSystem,
    limits: Limits,
    int_equations: Vec<(u64, Vec<(DifferentialMonomial, BigInt)>)>,
    /// ascending-rank index of every column built so far
    index: HashMap<DifferentialMonomial, usize>,
    column_orders: Vec<u64>,
    /// `columns_by_order[k]` = number of columns of order exactly `k`
    columns_by_order: Vec<u64>,
    pivots_by_order: Vec<u64>,
    echelon: Echelon,
    row_count: u64,
    /// `dims[L][s]` for `s <= L`
    dims: Vec<Vec<u64>>,
}

impl<'a> Prolongator<'a> {
    pub fn new(sys: &'a LinearDiffSystem, limits: &Limits) -> Self {
        Prolongator {
            sys,
            limits: *limits,
            int_equations: sys
                .equations()
                .iter()
                .map(|e| (e.order(), integer_terms(e)))
                .collect(),
            index: HashMap::new(),
            column_orders: Vec::new(),
            columns_by_order: Vec::new(),
            pivots_by_order: Vec::new(),
            echelon: Echelon::default(),
            row_count: 0,
            dims: Vec::new(),
        }
    }

    /// Highest level built so far.
    pub fn level(&self) -> Option<u64> {
        self.dims.len().checked_sub(1).map(|l| l as u64)
    }

    fn column_key(&self, mono: &DifferentialMonomial) -> usize {
        !self.index[mono]
    }

    pub fn extend_to(&mut self, top: u64) -> Result<()> {
        let (m, n) = (self.sys.m(), self.sys.n());
        while (self.dims.len() as u64) <= top {
            let level = self.dims.len() as u64;
            let fresh = monomials_of_order(m, n, level);
            self.columns_by_order.push(fresh.len() as u64);
            self.pivots_by_order.push(0);
            for mono in fresh {
                let next = self.index.len();
                self.index.insert(mono, next);
                self.column_orders.push(level);
            }
            let mut new_rows = Vec::new();
            for (order, terms) in &self.int_equations {
                if *order > level {
                    continue;
                }
                for theta in compositions(m, level - order) {
                    new_rows.push(
                        terms
                            .iter()
                            .map(|(k, c)| (k.derive(&theta), c.clone()))
                            .collect::<Vec<_>>(),
                    );
                }
            }
            self.row_count += new_rows.len() as u64;
            matrix_cap(self.row_count, self.index.len() as u64, &self.limits, level)?;
            for terms in new_rows {
                let mut row: Row = terms
                    .iter()
                    .map(|(k, c)| (self.column_key(k), c.clone()))
                    .collect();
                row.sort_by_key(|(k, _)| *k);
                if let Some(key) = self.echelon.insert(row) {
                    self.pivots_by_order[self.column_orders[!key] as usize] += 1;
                }
            }
            let mut dims = Vec::with_capacity(level as usize + 1);
            let (mut cols, mut pivs) = (0u64, 0u64);
            for k in 0..=level as usize {
                cols += self.columns_by_order[k];
                pivs += self.pivots_by_order[k];
                dims.push(cols - pivs);
            }
            self.dims.push(dims);
        }
        Ok(())
    }

    /// Projected dimension at `s` with margin `margin`.
    pub fn dimension(&mut self, s: u64, margin: u64) -> Result<u64> {
        self.extend_to(s + margin)?;
        Ok(self.dims[(s + margin) as usize][s as usize])
    }
}

/// Dimension of the level-`s` prolongation space, computed from the system
/// prolonged to level `s + margin`.
pub fn prolongation_dimension(sys: &LinearDiffSystem, s: u64, margin: u64) -> Result<u64> {
    prolongation_dimension_with(sys, s, margin, &Limits::default())
}

pub fn prolongation_dimension_with(
    sys: &LinearDiffSystem,
    s: u64,
    margin: u64,
    limits: &Limits,
) -> Result<u64> {
    Prolongator::new(sys, limits).dimension(s, margin)
}

/// Outcome of the sampling route.
#[derive(Clone, Debug)]
pub struct ProlongationReport {
    pub polynomial: NumericalPolynomial,
    /// Margin used for the samples.
    pub margin: u64,
    /// First sampled level.
    pub start: u64,
    /// Projected dimensions at `start, ..., start + m`.
    pub values: Vec<BigInt>,
}

pub fn kolchin_via_prolongation(sys: &LinearDiffSystem) -> Result<NumericalPolynomial> {
    Ok(kolchin_via_prolongation_with(sys, &Limits::default())?.polynomial)
}

/// Recovers the Kolchin polynomial from prolongation dimensions at `m + 1`
/// consecutive levels.
///
/// The margin is the larger of the basis order and the certified margin of
/// the Groebner computation. Sampling starts at the stability bound of the
/// leader profile and moves up until the dimensions at margins `mu` and
/// `mu + 1` agree on the whole window.
pub fn kolchin_via_prolongation_with(
    sys: &LinearDiffSystem,
    limits: &Limits,
) -> Result<ProlongationReport> {
    let gb = module_groebner(sys);
    let profile = gb.leader_profile();
    let margin = profile.order().max(gb.certified_margin());
    let m = sys.m() as u64;
    let mut prolongator = Prolongator::new(sys, limits);
    let mut start = profile.stability_bound();
    loop {
        if start > limits.prolongation_ceiling {
            return Err(Error::ResourceLimit(format!(
                "no stable sampling window below level {}",
                limits.prolongation_ceiling
            )));
        }
        let mut values = Vec::with_capacity(m as usize + 1);
        let mut stable = true;
        for s in start..=start + m {
            let at = prolongator.dimension(s, margin)?;
            let next = prolongator.dimension(s, margin + 1)?;
            if at != next {
                stable = false;
                break;
            }
            values.push(BigInt::from(at));
        }
        if stable {
            let polynomial = NumericalPolynomial::interpolate(&values, start, m as usize)?;
            return Ok(ProlongationReport {
                polynomial,
                margin,
                start,
                values,
            });
        }
        start += 1;
    }
}
