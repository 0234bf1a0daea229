//! Linear constant-coefficient homogeneous differential systems.
//!
//! Two routes to the Kolchin polynomial live here. The combinatorial route
//! computes a reduced Groebner basis of the generated module over the operator
//! ring, reads off the leader profile and sums dimension polynomials. The
//! prolongation route never looks at leaders for its values: it ranks the
//! matrices of prolonged equations, projects onto derivatives of order at most
//! `s`, samples `m + 1` consecutive levels and interpolates.

mod groebner;
mod parse;
mod prolong;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diffrank::{DifferentialMonomial, LeaderProfile};
use crate::error::{Error, Result};
use crate::expsets::ExponentVector;
use crate::limits::Limits;
use crate::numpoly::NumericalPolynomial;

pub use groebner::{module_groebner, GroebnerBasis};
pub use parse::parse_system;
pub use prolong::{
    kolchin_via_prolongation, kolchin_via_prolongation_with, prolongation_dimension,
    prolongation_dimension_with, ProlongationMatrix, ProlongationReport, Prolongator,
};

/// A homogeneous linear equation `sum c * delta^xi x_i = 0`.
///
/// Terms are keyed by derivative in ranking order, so the leader is the last key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearEquation {
    terms: BTreeMap<DifferentialMonomial, BigRational>,
}

impl LinearEquation {
    /// Builds an equation, merging repeated derivatives and dropping zero terms.
    pub fn new<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, DifferentialMonomial)>,
    {
        let mut map: BTreeMap<DifferentialMonomial, BigRational> = BTreeMap::new();
        for (c, mono) in terms {
            *map.entry(mono).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        LinearEquation { terms: map }
    }

    pub fn zero() -> Self {
        LinearEquation {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing rank.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&DifferentialMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &DifferentialMonomial) -> Option<&BigRational> {
        self.terms.get(mono)
    }

    /// Highest-ranked derivative occurring in the equation.
    pub fn leader(&self) -> Result<&DifferentialMonomial> {
        self.terms.keys().next_back().ok_or(Error::EmptySupport)
    }

    fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    /// Order of the leader; 0 for the zero equation.
    pub fn order(&self) -> u64 {
        self.terms
            .keys()
            .next_back()
            .map_or(0, DifferentialMonomial::order)
    }

    /// `delta^theta` applied to every term.
    pub fn derive(&self, theta: &ExponentVector) -> Self {
        LinearEquation {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.derive(theta), c.clone()))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => {
                let inv = BigRational::one() / lc;
                LinearEquation {
                    terms: self
                        .terms
                        .iter()
                        .map(|(k, c)| (k.clone(), c * &inv))
                        .collect(),
                }
            }
        }
    }

    /// `self - factor * other`.
    pub(crate) fn sub_scaled(&mut self, factor: &BigRational, other: &LinearEquation) {
        for (k, c) in &other.terms {
            let entry = self
                .terms
                .entry(k.clone())
                .or_insert_with(BigRational::zero);
            *entry -= factor * c;
            if entry.is_zero() {
                self.terms.remove(k);
            }
        }
    }
}

impl fmt::Display for LinearEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{mag}*{mono}")?;
        }
        Ok(())
    }
}

/// A system of linear equations in `n` unknowns and `m` derivations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDiffSystem {
    m: usize,
    n: usize,
    equations: Vec<LinearEquation>,
}

impl LinearDiffSystem {
    /// Validates ambient dimensions; zero equations are dropped.
    pub fn new(m: usize, n: usize, equations: Vec<LinearEquation>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("a system needs at least one unknown".into()));
        }
        for eq in &equations {
            for (mono, _) in eq.terms() {
                if mono.m() != m {
                    return Err(Error::AmbientMismatch(format!(
                        "{mono} has {} derivations, system has m = {m}",
                        mono.m()
                    )));
                }
                if mono.var() > n {
                    return Err(Error::AmbientMismatch(format!(
                        "{mono} refers to x{} but n = {n}",
                        mono.var()
                    )));
                }
            }
        }
        let equations = equations.into_iter().filter(|e| !e.is_zero()).collect();
        Ok(LinearDiffSystem { m, n, equations })
    }

    /// The system with no equations.
    pub fn free(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, Vec::new())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn equations(&self) -> &[LinearEquation] {
        &self.equations
    }

    /// Maximum order over all terms; 0 without equations.
    pub fn order(&self) -> u64 {
        self.equations
            .iter()
            .map(LinearEquation::order)
            .max()
            .unwrap_or(0)
    }

    /// The system with one more equation.
    pub fn with_equation(&self, eq: LinearEquation) -> Result<Self> {
        let mut equations = self.equations.clone();
        equations.push(eq);
        Self::new(self.m, self.n, equations)
    }

    /// Renders the system in its text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("m = {}\nn = {}\n", self.m, self.n);
        for eq in &self.equations {
            out.push_str("eq: ");
            for (i, (mono, c)) in eq.terms().rev().enumerate() {
                let sign = if c.is_negative() { "-" } else { "+" };
                if i == 0 {
                    if c.is_negative() {
                        out.push('-');
                    }
                } else {
                    out.push_str(&format!(" {sign} "));
                }
                let xi: Vec<String> = mono.xi().entries().iter().map(u64::to_string).collect();
                out.push_str(&format!("{}*d[{}]x{}", c.abs(), xi.join(","), mono.var()));
            }
            out.push('\n');
        }
        out
    }
}

/// Leader profile of a reduced Groebner basis.
pub fn leader_profile(gb: &GroebnerBasis) -> LeaderProfile {
    gb.leader_profile()
}

/// Kolchin polynomial through the Groebner basis and its leaders.
pub fn kolchin_polynomial(sys: &LinearDiffSystem) -> NumericalPolynomial {
    module_groebner(sys).leader_profile().kolchin_polynomial()
}

/// Whether the Kolchin polynomial of `sys` eventually dominates or equals `p`.
pub fn omega_at_least(sys: &LinearDiffSystem, p: &NumericalPolynomial) -> bool {
    kolchin_polynomial(sys).compare_eventual(p) != Ordering::Less
}

/// Whether the Kolchin polynomial of `sys` equals `p`.
pub fn omega_equals(sys: &LinearDiffSystem, p: &NumericalPolynomial) -> bool {
    kolchin_polynomial(sys).compare_eventual(p) == Ordering::Equal
}

/// Both pipelines side by side.
#[derive(Clone, Debug)]
pub struct DualCheck {
    pub via_leaders: NumericalPolynomial,
    pub via_prolongation: ProlongationReport,
}

impl DualCheck {
    pub fn agree(&self) -> bool {
        self.via_leaders == self.via_prolongation.polynomial
    }
}

/// Runs both pipelines on `sys`.
pub fn dual_check(sys: &LinearDiffSystem, limits: &Limits) -> Result<DualCheck> {
    let via_leaders = kolchin_polynomial(sys);
    let via_prolongation = kolchin_via_prolongation_with(sys, limits)?;
    Ok(DualCheck {
        via_leaders,
        via_prolongation,
    })
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn heat() -> LinearDiffSystem {
        parse_system("m = 2\nn = 1\neq: 1*d[1,0]x1 - 1*d[0,2]x1\n").unwrap()
    }

    pub fn cauchy_riemann() -> LinearDiffSystem {
        parse_system("m = 2\nn = 2\neq: 1*d[0,1]x2 - 1*d[1,0]x1\neq: 1*d[1,0]x2 + 1*d[0,1]x1\n")
            .unwrap()
    }

    pub fn np(c: &[i64]) -> NumericalPolynomial {
        NumericalPolynomial::from_standard(c.iter().copied()).unwrap()
    }
}
