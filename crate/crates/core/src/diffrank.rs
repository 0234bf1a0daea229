//! Derivative symbols `delta^xi x_i`, the canonical orderly ranking, and
//! Kolchin polynomials assembled from leader profiles.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::expsets::{parse_tuple, ExponentSet, ExponentVector};
use crate::limits::Limits;
use crate::numpoly::NumericalPolynomial;

/// The derivative `delta^xi x_var` with a 1-based variable index.
///
/// `Ord` is the canonical orderly ranking: compare `(ord xi, var, u_1, ..., u_m)`
/// left-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DifferentialMonomial {
    xi: ExponentVector,
    var: usize,
}

/// `(ord xi, var, u_1, ..., u_m)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RankKey(Vec<u64>);

impl RankKey {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl DifferentialMonomial {
    pub fn new(xi: ExponentVector, var: usize) -> Result<Self> {
        if var == 0 {
            return Err(Error::Invalid("variable indices start at 1".into()));
        }
        Ok(DifferentialMonomial { xi, var })
    }

    /// `delta^xi x_var` from a literal exponent tuple; panics if `var == 0`.
    pub fn of(var: usize, xi: &[u64]) -> Self {
        Self::new(ExponentVector::new(xi.to_vec()), var).expect("variable index must be >= 1")
    }

    pub fn xi(&self) -> &ExponentVector {
        &self.xi
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn m(&self) -> usize {
        self.xi.dim()
    }

    pub fn order(&self) -> u64 {
        self.xi.order()
    }

    pub fn rank_key(&self) -> RankKey {
        let mut key = Vec::with_capacity(self.m() + 2);
        key.push(self.order());
        key.push(self.var as u64);
        key.extend_from_slice(self.xi.entries());
        RankKey(key)
    }

    /// `delta^theta` applied to this derivative.
    pub fn derive(&self, theta: &ExponentVector) -> Self {
        DifferentialMonomial {
            xi: self.xi.add(theta),
            var: self.var,
        }
    }

    /// Whether `other = delta^theta self` for some `theta`.
    pub fn divides(&self, other: &Self) -> bool {
        self.var == other.var && self.xi.le_product(&other.xi)
    }
}

impl PartialOrd for DifferentialMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DifferentialMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then(self.var.cmp(&other.var))
            .then_with(|| self.xi.entries().cmp(other.xi.entries()))
    }
}

impl fmt::Display for DifferentialMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.xi.is_zero() {
            return write!(f, "x{}", self.var);
        }
        write!(f, "d[")?;
        for (i, u) in self.xi.entries().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "]x{}", self.var)
    }
}

/// Compares two derivatives in the canonical orderly ranking.
pub fn compare_rank(a: &DifferentialMonomial, b: &DifferentialMonomial) -> Result<Ordering> {
    if a.m() != b.m() {
        return Err(Error::AmbientMismatch(format!(
            "{a} has {} derivations, {b} has {}",
            a.m(),
            b.m()
        )));
    }
    Ok(a.cmp(b))
}

/// The highest-ranked derivative of a support set.
pub fn leader<'a, I>(monomials: I) -> Result<DifferentialMonomial>
where
    I: IntoIterator<Item = &'a DifferentialMonomial>,
{
    let mut best: Option<&DifferentialMonomial> = None;
    for mono in monomials {
        best = match best {
            None => Some(mono),
            Some(b) => {
                if compare_rank(mono, b)? == Ordering::Greater {
                    Some(mono)
                } else {
                    Some(b)
                }
            }
        };
    }
    best.cloned().ok_or(Error::EmptySupport)
}

/// Parses `d[u1,...,um]x<i>` or the order-zero shorthand `x<i>`.
///
/// `column` is the 1-based position of `text` inside its line, used for errors.
pub(crate) fn parse_monomial_at(
    text: &str,
    m: Option<usize>,
    line: usize,
    column: usize,
) -> Result<DifferentialMonomial> {
    let t = text.trim();
    let lead = text.len() - text.trim_start().len();
    let col = column + lead;
    let (xi, rest, rest_col) = if let Some(body) = t.strip_prefix("d[") {
        let close = body
            .find(']')
            .ok_or_else(|| Error::parse(line, col, "missing ']' in derivative"))?;
        let xi = parse_tuple(&body[..close], line, col + 2)?;
        (Some(xi), &body[close + 1..], col + 3 + close)
    } else {
        (None, t, col)
    };
    let idx = rest
        .strip_prefix('x')
        .ok_or_else(|| Error::parse(line, rest_col, format!("expected 'x<i>', found {rest:?}")))?;
    if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(
            line,
            rest_col + 1,
            format!("expected a variable index, found {idx:?}"),
        ));
    }
    let var: usize = idx
        .parse()
        .map_err(|_| Error::parse(line, rest_col + 1, "variable index out of range"))?;
    if var == 0 {
        return Err(Error::parse(
            line,
            rest_col + 1,
            "variable indices start at 1",
        ));
    }
    let xi = match (xi, m) {
        (Some(xi), Some(m)) if xi.dim() != m => {
            return Err(Error::parse(
                line,
                col,
                format!("derivative has {} entries, expected m = {m}", xi.dim()),
            ))
        }
        (Some(xi), _) => xi,
        (None, Some(m)) => ExponentVector::zero(m),
        (None, None) => {
            return Err(Error::parse(
                line,
                col,
                "cannot infer m from an order-zero derivative",
            ))
        }
    };
    Ok(DifferentialMonomial { xi, var })
}

/// Parses a single derivative such as `d[1,0]x1` or `x2`.
pub fn parse_monomial(text: &str, m: Option<usize>) -> Result<DifferentialMonomial> {
    parse_monomial_at(text, m, 1, 1)
}

/// Per-variable leader sets `E_1, ..., E_n`, each kept as an antichain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeaderProfile {
    m: usize,
    sets: Vec<ExponentSet>,
}

impl LeaderProfile {
    pub fn new(m: usize, sets: Vec<ExponentSet>) -> Result<Self> {
        if let Some(bad) = sets.iter().find(|e| e.m() != m) {
            return Err(Error::AmbientMismatch(format!(
                "leader set over N^{} in a profile over N^{m}",
                bad.m()
            )));
        }
        Ok(LeaderProfile {
            m,
            sets: sets.iter().map(ExponentSet::minimal_elements).collect(),
        })
    }

    /// Profile of `n` unconstrained unknowns.
    pub fn free(m: usize, n: usize) -> Self {
        LeaderProfile {
            m,
            sets: vec![ExponentSet::empty(m); n],
        }
    }

    /// Collects the leaders of a family of derivatives into a profile.
    pub fn from_leaders<'a, I>(m: usize, n: usize, leaders: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a DifferentialMonomial>,
    {
        let mut sets = vec![ExponentSet::empty(m); n];
        for l in leaders {
            if l.var() > n {
                return Err(Error::AmbientMismatch(format!(
                    "{l} refers to x{} but n = {n}",
                    l.var()
                )));
            }
            sets[l.var() - 1].insert(l.xi().clone())?;
        }
        LeaderProfile::new(m, sets)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[ExponentSet] {
        &self.sets
    }

    /// `E_i` for a 1-based variable index.
    pub fn set(&self, var: usize) -> &ExponentSet {
        &self.sets[var - 1]
    }

    /// `omega(t) = sum_i omega_{E_i}(t)`.
    pub fn kolchin_polynomial(&self) -> NumericalPolynomial {
        self.sets
            .iter()
            .map(ExponentSet::dimension_polynomial)
            .fold(NumericalPolynomial::zero(self.m), |acc, p| &acc + &p)
    }

    /// Largest generator order across all `E_i`; 0 when all are empty.
    pub fn order(&self) -> u64 {
        self.sets
            .iter()
            .map(ExponentSet::max_order)
            .max()
            .unwrap_or(0)
    }

    /// Level past which every `omega_{E_i}` agrees with its volume.
    pub fn stability_bound(&self) -> u64 {
        self.sets
            .iter()
            .map(ExponentSet::stability_bound)
            .max()
            .unwrap_or(0)
    }

    /// Number of parametric derivatives of order at most `s`: `sum_i |V_{E_i}(s)|`.
    pub fn parametric_count(&self, s: u64, limits: &Limits) -> Result<BigInt> {
        self.sets.iter().map(|e| e.volume_ie_with(s, limits)).sum()
    }

    /// Whether every `E_i` of `self` is contained in the matching set of `other`.
    pub fn is_subset_of(&self, other: &LeaderProfile) -> bool {
        self.m == other.m
            && self.n() == other.n()
            && self
                .sets
                .iter()
                .zip(&other.sets)
                .all(|(a, b)| a.is_subset_of(b))
    }
}

/// `omega_P = sum_i omega_{E_i}` for a leader profile.
pub fn kolchin_from_leaders(profile: &LeaderProfile) -> NumericalPolynomial {
    profile.kolchin_polynomial()
}

/// Maximum generator order of a profile.
pub fn profile_order(profile: &LeaderProfile) -> u64 {
    profile.order()
}

fn header_value(content: &str, key: &str) -> Option<String> {
    let (lhs, rhs) = content.split_once('=')?;
    (lhs.trim() == key).then(|| rhs.trim().to_string())
}

/// Parses the leader-profile format: `i: u1,...,um` per generator line, with
/// optional `m = <nat>` / `n = <nat>` headers, `#` comments and blank lines.
///
/// Without an `n` header (or argument) the number of unknowns is the largest
/// index that occurs.
pub fn parse_leader_profile(
    text: &str,
    m: Option<usize>,
    n: Option<usize>,
) -> Result<LeaderProfile> {
    let mut m = m;
    let mut n = n;
    let mut entries: Vec<(usize, usize, ExponentVector)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        for (key, slot) in [("m", &mut m), ("n", &mut n)] {
            if let Some(v) = header_value(content, key) {
                let v: usize = v
                    .parse()
                    .map_err(|_| Error::parse(line, 1, format!("bad value for {key}: {v:?}")))?;
                if matches!(slot, Some(old) if *old != v) {
                    return Err(Error::parse(line, 1, format!("conflicting {key} = {v}")));
                }
                *slot = Some(v);
            }
        }
        if content.contains('=') {
            if header_value(content, "m").is_none() && header_value(content, "n").is_none() {
                return Err(Error::parse(line, 1, "unknown header"));
            }
            continue;
        }
        let (var_txt, tuple) = content
            .split_once(':')
            .ok_or_else(|| Error::parse(line, 1, "expected 'i: u1,...,um'"))?;
        let var: usize = var_txt.trim().parse().map_err(|_| {
            Error::parse(line, 1, format!("bad variable index {:?}", var_txt.trim()))
        })?;
        if var == 0 {
            return Err(Error::parse(line, 1, "variable indices start at 1"));
        }
        let xi = parse_tuple(tuple, line, var_txt.len() + 2)?;
        match m {
            Some(w) if w != xi.dim() => {
                return Err(Error::parse(
                    line,
                    var_txt.len() + 2,
                    format!("tuple has {} entries, expected m = {w}", xi.dim()),
                ))
            }
            Some(_) => {}
            None => m = Some(xi.dim()),
        }
        entries.push((line, var, xi));
    }
    let m = m.ok_or_else(|| Error::Invalid("leader profile without generators needs m".into()))?;
    let n = n.unwrap_or_else(|| entries.iter().map(|(_, v, _)| *v).max().unwrap_or(0));
    let mut sets = vec![ExponentSet::empty(m); n];
    for (line, var, xi) in entries {
        if var > n {
            return Err(Error::parse(
                line,
                1,
                format!("variable index {var} exceeds n = {n}"),
            ));
        }
        sets[var - 1].insert(xi)?;
    }
    LeaderProfile::new(m, sets)
}

/// Renders a profile in the leader-profile text format, headers included.
pub fn format_leader_profile(profile: &LeaderProfile) -> String {
    let mut out = format!("m = {}\nn = {}\n", profile.m, profile.n());
    for (i, set) in profile.sets.iter().enumerate() {
        for g in set.generators() {
            let parts: Vec<String> = g.entries().iter().map(u64::to_string).collect();
            out.push_str(&format!("{}: {}\n", i + 1, parts.join(",")));
        }
    }
    out
}
