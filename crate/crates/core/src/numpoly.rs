//! Numerical polynomials in the binomial basis.
//!
//! A numerical polynomial of degree at most `m` is stored through its standard
//! coefficients `a_m, ..., a_0`, meaning `p(t) = sum_i a_i * binom(t + i, i)`.
//! Every integer combination of this basis takes integer values on the
//! integers, so all arithmetic here stays in `BigInt`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `binom(s + i, i)` for `i = 0..=m`, valid for every integer `s`.
fn basis_values(s: &BigInt, m: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(m + 1);
    let mut cur = BigInt::one();
    out.push(cur.clone());
    for i in 1..=m {
        cur = cur * (s + BigInt::from(i)) / BigInt::from(i);
        out.push(cur.clone());
    }
    out
}

/// Ascending rational coefficients of `binom(t + i, i) = (t+1)...(t+i) / i!`.
fn basis_expansion(i: usize) -> Vec<BigRational> {
    let mut poly = vec![BigInt::one()];
    for k in 1..=i {
        // multiply by (t + k)
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (j, c) in poly.iter().enumerate() {
            next[j] += c * BigInt::from(k);
            next[j + 1] += c;
        }
        poly = next;
    }
    let fact = factorial(i);
    poly.into_iter()
        .map(|c| BigRational::new(c, fact.clone()))
        .collect()
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub(crate) fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// A numerical polynomial with integer standard coefficients.
///
/// Equality and ordering ignore leading zero padding; the ordering is
/// eventual domination, i.e. lexicographic order of the standard coefficients.
#[derive(Clone, Debug)]
pub struct NumericalPolynomial {
    /// `coeffs[i]` multiplies `binom(t + i, i)`; the length is `degree_bound + 1`.
    coeffs: Vec<BigInt>,
}

impl NumericalPolynomial {
    /// Builds a polynomial from standard coefficients `(a_m, ..., a_0)`.
    pub fn from_standard<I, T>(descending: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = descending.into_iter().map(Into::into).collect();
        if coeffs.is_empty() {
            return Err(Error::Invalid(
                "a numerical polynomial needs at least one standard coefficient".into(),
            ));
        }
        coeffs.reverse();
        Ok(NumericalPolynomial { coeffs })
    }

    pub fn zero(m: usize) -> Self {
        NumericalPolynomial {
            coeffs: vec![BigInt::zero(); m + 1],
        }
    }

    /// The constant `c`, carried with degree bound `m`.
    pub fn constant(m: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(m);
        p.coeffs[0] = c.into();
        p
    }

    /// `binom(t + i, i)` with degree bound `m >= i`.
    pub fn basis(m: usize, i: usize) -> Self {
        let mut p = Self::zero(m.max(i));
        p.coeffs[i] = BigInt::one();
        p
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Standard coefficients `(a_m, ..., a_0)`.
    pub fn standard_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Coefficient of `binom(t + i, i)`; zero past the degree bound.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Copy with degree bound raised to at least `m`.
    pub fn padded(&self, m: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < m + 1 {
            coeffs.resize(m + 1, BigInt::zero());
        }
        NumericalPolynomial { coeffs }
    }

    /// Exact value at `s >= 0`.
    pub fn evaluate(&self, s: &BigInt) -> Result<BigInt> {
        if s.is_negative() {
            return Err(Error::NegativeArgument(s.to_string()));
        }
        Ok(self.value_at(s))
    }

    pub fn evaluate_u64(&self, s: u64) -> BigInt {
        self.value_at(&BigInt::from(s))
    }

    /// Value at any integer; the basis polynomials are defined everywhere.
    pub(crate) fn value_at(&self, s: &BigInt) -> BigInt {
        basis_values(s, self.degree_bound())
            .iter()
            .zip(&self.coeffs)
            .map(|(b, a)| b * a)
            .sum()
    }

    /// `p(t - k)` re-expressed in the binomial basis.
    ///
    /// Uses `binom(t - 1 + i, i) = binom(t + i, i) - binom(t + i - 1, i - 1)`,
    /// so one unit of shift maps `a_j` to `a_j - a_{j+1}`; `k` units give
    /// `a_j' = sum_l (-1)^l binom(k, l) a_{j+l}`.
    pub fn shift(&self, k: u64) -> Self {
        let m = self.degree_bound();
        let k = BigInt::from(k);
        let weights: Vec<BigInt> = (0..=m)
            .map(|l| {
                let b = binomial(&k, l);
                if l % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .collect();
        let coeffs = (0..=m)
            .map(|j| {
                (j..=m)
                    .map(|i| &weights[i - j] * &self.coeffs[i])
                    .sum::<BigInt>()
            })
            .collect();
        NumericalPolynomial { coeffs }
    }

    /// Eventual-domination comparison (lexicographic on standard coefficients).
    pub fn compare_eventual(&self, other: &Self) -> Ordering {
        let m = self.degree_bound().max(other.degree_bound());
        (0..=m)
            .rev()
            .map(|i| self.coeff(i).cmp(&other.coeff(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn differential_type(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Recovers the polynomial of degree at most `m` from its values at the
    /// consecutive points `start, start + 1, ...`.
    ///
    /// At least `m + 1` values are required. Any further values must agree with
    /// the interpolant; otherwise the samples do not come from a numerical
    /// polynomial of degree at most `m`.
    pub fn interpolate(values: &[BigInt], start: u64, m: usize) -> Result<Self> {
        if values.len() < m + 1 {
            return Err(Error::Invalid(format!(
                "interpolation of degree {m} needs {} values, got {}",
                m + 1,
                values.len()
            )));
        }
        let window = &values[..=m];
        // Backward differences at the last sample T = start + m:
        // diffs[k] = (Delta^k p)(T), with Delta p(t) = p(t) - p(t - 1).
        let mut table: Vec<BigInt> = window.to_vec();
        let mut diffs = Vec::with_capacity(m + 1);
        diffs.push(table[m].clone());
        for k in 1..=m {
            for j in (k..=m).rev() {
                table[j] = &table[j] - &table[j - 1];
            }
            diffs.push(table[m].clone());
        }
        // Delta^k p(T) = sum_{i >= k} a_i binom(T + i - k, i - k); solve top-down.
        let last = BigInt::from(start) + BigInt::from(m);
        let basis = basis_values(&last, m);
        let mut coeffs = vec![BigInt::zero(); m + 1];
        for k in (0..=m).rev() {
            let mut a = diffs[k].clone();
            for i in k + 1..=m {
                a -= &coeffs[i] * &basis[i - k];
            }
            coeffs[k] = a;
        }
        let p = NumericalPolynomial { coeffs };
        for (offset, v) in values.iter().enumerate().skip(m + 1) {
            let s = BigInt::from(start) + BigInt::from(offset);
            if &p.value_at(&s) != v {
                return Err(Error::InputNotNumericalPolynomial(format!(
                    "value {v} at s = {s} is inconsistent with degree at most {m}"
                )));
            }
        }
        Ok(p)
    }

    pub fn to_monomial_form(&self) -> MonomialForm {
        let m = self.degree_bound();
        let mut ascending = vec![BigRational::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let a = BigRational::from_integer(a.clone());
            for (j, c) in basis_expansion(i).into_iter().enumerate() {
                ascending[j] += &a * c;
            }
        }
        MonomialForm { ascending }
    }

    /// Cauchy bound `1 + max_j |b_j / b_d|` on the real roots, rounded up.
    ///
    /// Past this value the sign of the polynomial is the sign of its leading
    /// monomial coefficient. Returns `None` for the zero polynomial.
    pub fn cauchy_root_bound(&self) -> Option<BigInt> {
        let form = self.to_monomial_form();
        let d = form.ascending.iter().rposition(|c| !c.is_zero())?;
        let lead = form.ascending[d].abs();
        let max_ratio = form.ascending[..d]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(BigRational::zero);
        if d == 0 {
            return Some(BigInt::zero());
        }
        Some((max_ratio + BigRational::one()).ceil().to_integer())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let m = self.degree_bound().max(other.degree_bound());
        let coeffs = (0..=m)
            .map(|i| f(&self.coeff(i), &other.coeff(i)))
            .collect();
        NumericalPolynomial { coeffs }
    }
}

impl PartialEq for NumericalPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.compare_eventual(other) == Ordering::Equal
    }
}

impl Eq for NumericalPolynomial {}

impl PartialOrd for NumericalPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare_eventual(other)
    }
}

impl Add for &NumericalPolynomial {
    type Output = NumericalPolynomial;

    fn add(self, rhs: Self) -> NumericalPolynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for NumericalPolynomial {
    type Output = NumericalPolynomial;

    fn add(self, rhs: Self) -> NumericalPolynomial {
        &self + &rhs
    }
}

impl Sub for &NumericalPolynomial {
    type Output = NumericalPolynomial;

    fn sub(self, rhs: Self) -> NumericalPolynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &NumericalPolynomial {
    type Output = NumericalPolynomial;

    fn neg(self) -> NumericalPolynomial {
        NumericalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for NumericalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_monomial_form().fmt(f)
    }
}

/// Ordinary power-basis form `sum_j b_j t^j` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialForm {
    ascending: Vec<BigRational>,
}

impl MonomialForm {
    /// Builds the form from `(b_m, ..., b_0)`.
    pub fn from_coeffs(descending: Vec<BigRational>) -> Result<Self> {
        if descending.is_empty() {
            return Err(Error::Invalid("empty coefficient list".into()));
        }
        let mut ascending = descending;
        ascending.reverse();
        Ok(MonomialForm { ascending })
    }

    /// `(b_m, ..., b_0)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.ascending.iter().rev().cloned().collect()
    }

    /// Coefficient of `t^j`.
    pub fn coeff(&self, j: usize) -> BigRational {
        self.ascending
            .get(j)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Converts back to standard coefficients; fails unless the polynomial is
    /// integer-valued.
    pub fn to_numerical(&self) -> Result<NumericalPolynomial> {
        let m = self.ascending.len() - 1;
        let mut rest = self.ascending.clone();
        let mut coeffs = vec![BigInt::zero(); m + 1];
        for i in (0..=m).rev() {
            // binom(t + i, i) has leading coefficient 1 / i!
            let a = &rest[i] * BigRational::from_integer(factorial(i));
            if !a.is_integer() {
                return Err(Error::InputNotNumericalPolynomial(format!(
                    "standard coefficient of degree {i} would be {a}"
                )));
            }
            let a = a.to_integer();
            if !a.is_zero() {
                let a_q = BigRational::from_integer(a.clone());
                for (j, c) in basis_expansion(i).into_iter().enumerate() {
                    rest[j] -= &a_q * c;
                }
            }
            coeffs[i] = a;
        }
        Ok(NumericalPolynomial { coeffs })
    }
}

impl fmt::Display for MonomialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.ascending.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = magnitude.is_one();
            match j {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}*")?;
                    }
                    if j == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{j}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    m: usize,
    standard_coeffs: Vec<CoeffRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Text(String),
    Int(i64),
}

impl Serialize for NumericalPolynomial {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            m: self.degree_bound(),
            standard_coeffs: self
                .standard_coeffs()
                .iter()
                .map(|c| CoeffRepr::Text(c.to_string()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PolyRepr::deserialize(deserializer)?;
        if repr.standard_coeffs.len() != repr.m + 1 {
            return Err(D::Error::custom(format!(
                "m = {} requires {} standard coefficients, got {}",
                repr.m,
                repr.m + 1,
                repr.standard_coeffs.len()
            )));
        }
        let coeffs = repr
            .standard_coeffs
            .into_iter()
            .map(|c| match c {
                CoeffRepr::Text(s) => s
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}"))),
                CoeffRepr::Int(i) => Ok(BigInt::from(i)),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        NumericalPolynomial::from_standard(coeffs).map_err(D::Error::custom)
    }
}

impl NumericalPolynomial {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("polynomial JSON: {e}")))
    }

    /// Parses either a JSON object or a comma-separated list of standard
    /// coefficients such as `0,2,-1`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            return Self::from_json(text);
        }
        let inner = text.trim_start_matches('[').trim_end_matches(']');
        let coeffs = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim().trim_matches('"');
                tok.parse::<BigInt>()
                    .map_err(|_| Error::Invalid(format!("bad standard coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_standard(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn np(c: &[i64]) -> NumericalPolynomial {
        NumericalPolynomial::from_standard(c.iter().copied()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(np(&[1, 0, 0]).evaluate_u64(4), BigInt::from(15));
        assert_eq!(np(&[0, 2, -1]).evaluate_u64(3), BigInt::from(7));
        for s in 0..20 {
            assert!(np(&[0, 0, 0]).evaluate_u64(s).is_zero());
        }
    }

    #[test]
    fn evaluate_rejects_negative() {
        let err = np(&[1, 0]).evaluate(&BigInt::from(-1)).unwrap_err();
        assert!(matches!(err, Error::NegativeArgument(_)));
    }

    #[test]
    fn add_and_shift_examples() {
        assert_eq!(np(&[1, 0]).shift(1).evaluate_u64(5), BigInt::from(5));
        let sum = np(&[0, 2, -1]) + np(&[1, 0, 0]);
        assert_eq!(sum.evaluate_u64(3), BigInt::from(17));
        assert_eq!(sum.evaluate_u64(4), BigInt::from(9 + 15));
        let p = np(&[3, -7, 2]);
        assert_eq!(p.shift(0), p);
    }

    #[test]
    fn shift_matches_pointwise() {
        let p = np(&[2, -3, 5, 1]);
        for k in 0..6u64 {
            let shifted = p.shift(k);
            for s in k..k + 10 {
                assert_eq!(shifted.evaluate_u64(s), p.evaluate_u64(s - k));
            }
        }
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            np(&[0, 2, -1]).compare_eventual(&np(&[0, 1, 4])),
            Ordering::Greater
        );
        let p = np(&[4, 1, 1]);
        assert_eq!(p.compare_eventual(&p), Ordering::Equal);
        assert_eq!(
            np(&[1, 0, 0]).compare_eventual(&np(&[0, 5, 5])),
            Ordering::Greater
        );
        // cross-check by evaluating far out
        let big = BigInt::from(1_000_000);
        assert!(np(&[0, 2, -1]).value_at(&big) > np(&[0, 1, 4]).value_at(&big));
        assert!(np(&[1, 0, 0]).value_at(&big) > np(&[0, 5, 5]).value_at(&big));
    }

    #[test]
    fn padding_does_not_affect_equality() {
        assert_eq!(np(&[0, 0, 2, -1]), np(&[2, -1]));
        assert_eq!(np(&[0, 3]).compare_eventual(&np(&[3])), Ordering::Equal);
    }

    #[test]
    fn interpolate_examples() {
        let v = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(
            NumericalPolynomial::interpolate(&v(&[1, 3, 5]), 0, 2)
                .unwrap()
                .standard_coeffs(),
            v(&[0, 2, -1])
        );
        // the same samples read from s = 1 describe 2t - 1
        assert_eq!(
            NumericalPolynomial::interpolate(&v(&[1, 3, 5]), 1, 2)
                .unwrap()
                .standard_coeffs(),
            v(&[0, 2, -3])
        );
        assert_eq!(
            NumericalPolynomial::interpolate(&v(&[4, 4]), 0, 1)
                .unwrap()
                .standard_coeffs(),
            v(&[0, 4])
        );
        assert_eq!(
            NumericalPolynomial::interpolate(&v(&[1, 3, 6]), 0, 2)
                .unwrap()
                .standard_coeffs(),
            v(&[1, 0, 0])
        );
    }

    #[test]
    fn interpolate_errors() {
        let v = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert!(matches!(
            NumericalPolynomial::interpolate(&v(&[1, 2]), 0, 2),
            Err(Error::Invalid(_))
        ));
        // s^2 sampled at 0..3 is not linear
        assert!(matches!(
            NumericalPolynomial::interpolate(&v(&[0, 1, 4]), 0, 1),
            Err(Error::InputNotNumericalPolynomial(_))
        ));
        // consistent extra samples are accepted
        let p = NumericalPolynomial::interpolate(&v(&[1, 3, 5, 7, 9]), 0, 2).unwrap();
        assert_eq!(p, np(&[0, 2, -1]));
    }

    #[test]
    fn monomial_form_examples() {
        let f = np(&[0, 2, -1]).to_monomial_form();
        assert_eq!(f.coeffs(), vec![q(0, 1), q(2, 1), q(1, 1)]);
        let f = np(&[1, 0, 0]).to_monomial_form();
        assert_eq!(f.coeffs(), vec![q(1, 2), q(3, 2), q(1, 1)]);
        let f = np(&[0, 0, 0]).to_monomial_form();
        assert!(f.coeffs().iter().all(Zero::is_zero));
    }

    #[test]
    fn monomial_form_rejects_non_integer_valued() {
        let f = MonomialForm::from_coeffs(vec![q(1, 3), q(0, 1)]).unwrap();
        assert!(matches!(
            f.to_numerical(),
            Err(Error::InputNotNumericalPolynomial(_))
        ));
        // t(t+1)/2 is integer valued
        let f = MonomialForm::from_coeffs(vec![q(1, 2), q(1, 2), q(0, 1)]).unwrap();
        assert_eq!(f.to_numerical().unwrap(), np(&[1, -1, 0]));
    }

    #[test]
    fn differential_type_examples() {
        assert_eq!(np(&[0, 2, -1]).differential_type(), 1);
        assert_eq!(np(&[1, 0, 0]).differential_type(), 2);
        assert_eq!(np(&[0, 0, 5]).differential_type(), 0);
        assert_eq!(np(&[0, 0, 0]).differential_type(), 0);
    }

    #[test]
    fn render() {
        assert_eq!(np(&[0, 2, -1]).to_string(), "2*t + 1");
        assert_eq!(np(&[1, 0, 0]).to_string(), "1/2*t^2 + 3/2*t + 1");
        assert_eq!(np(&[0, 0]).to_string(), "0");
        assert_eq!(np(&[-1, 1]).to_string(), "-t");
        assert_eq!(np(&[0, 2, 0]).to_string(), "2*t + 2");
    }

    #[test]
    fn json_format() {
        let p = np(&[0, 2, -1]);
        assert_eq!(p.to_json(), r#"{"m":2,"standard_coeffs":["0","2","-1"]}"#);
        assert_eq!(
            NumericalPolynomial::from_json(&p.to_json())
                .unwrap()
                .standard_coeffs(),
            p.standard_coeffs()
        );
        let numeric = NumericalPolynomial::from_json(r#"{"m":1,"standard_coeffs":[2,0]}"#).unwrap();
        assert_eq!(numeric, np(&[2, 0]));
        assert!(NumericalPolynomial::from_json(r#"{"m":2,"standard_coeffs":["1"]}"#).is_err());
        assert!(NumericalPolynomial::from_json(r#"{"m":0,"standard_coeffs":["x"]}"#).is_err());
    }

    #[test]
    fn parse_inline() {
        assert_eq!(
            NumericalPolynomial::parse("0,2,-1").unwrap(),
            np(&[0, 2, -1])
        );
        assert_eq!(
            NumericalPolynomial::parse("[1, 0, 0]").unwrap(),
            np(&[1, 0, 0])
        );
        assert!(NumericalPolynomial::parse("1,a").is_err());
    }

    #[test]
    fn cauchy_bound_simple() {
        // 2t + 1: root -1/2, bound 1 + 1/2 -> 2
        assert_eq!(np(&[0, 2, -1]).cauchy_root_bound(), Some(BigInt::from(2)));
        assert_eq!(np(&[0, 0, 3]).cauchy_root_bound(), Some(BigInt::zero()));
        assert_eq!(np(&[0, 0]).cauchy_root_bound(), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(max_m: usize) -> impl Strategy<Value = NumericalPolynomial> {
            (0..=max_m)
                .prop_flat_map(|m| proptest::collection::vec(-50i64..=50, m + 1))
                .prop_map(|c| NumericalPolynomial::from_standard(c).unwrap())
        }

        proptest! {
            #[test]
            fn interpolation_round_trip(p in poly(5), start in 0u64..40) {
                let m = p.degree_bound();
                let values: Vec<BigInt> = (start..=start + m as u64).map(|s| p.evaluate_u64(s)).collect();
                let back = NumericalPolynomial::interpolate(&values, start, m).unwrap();
                prop_assert_eq!(back.standard_coeffs(), p.standard_coeffs());
            }

            #[test]
            fn monomial_round_trip(p in poly(6)) {
                let form = p.to_monomial_form();
                let fact = BigRational::from_integer(factorial(p.degree_bound()));
                for b in form.coeffs() {
                    prop_assert!((b * &fact).is_integer());
                }
                prop_assert_eq!(form.to_numerical().unwrap().standard_coeffs(), p.standard_coeffs());
            }

            #[test]
            fn add_shift_commute_with_evaluate(p in poly(4), q in poly(4), k in 0u64..6, s in 0u64..30) {
                prop_assert_eq!((&p + &q).evaluate_u64(s), p.evaluate_u64(s) + q.evaluate_u64(s));
                prop_assert_eq!(p.shift(k).evaluate_u64(s + k), p.evaluate_u64(s));
            }

            #[test]
            fn compare_matches_values_past_root_bound(p in poly(4), q in poly(4)) {
                let diff = &p - &q;
                let ord = p.compare_eventual(&q);
                match diff.cauchy_root_bound() {
                    None => prop_assert_eq!(ord, Ordering::Equal),
                    Some(bound) => {
                        let m = p.degree_bound().max(q.degree_bound());
                        let start = bound + 1;
                        for off in 0..=(m as i64 + 2) {
                            let s = &start + BigInt::from(off);
                            let (a, b) = (p.value_at(&s), q.value_at(&s));
                            prop_assert_eq!(a.cmp(&b), ord);
                        }
                    }
                }
            }
        }
    }
}
