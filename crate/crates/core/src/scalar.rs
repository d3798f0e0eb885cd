//! Exact coefficient scalars: sparse polynomials in named parameters with
//! rational coefficients. A scalar with no parameters is just a rational.
//!
//! Specializing all parameters turns a scalar into a rational or a prime
//! field residue; both specializations are ring homomorphisms.

use crate::field::{FieldError, PrimeField};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("parameter `{0}` has no assigned value")]
    UnassignedParameter(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A product of parameter powers, e.g. `lambda^2`. Empty means the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default, Hash)]
pub struct ParamMonomial(BTreeMap<String, u32>);

impl ParamMonomial {
    pub fn one() -> Self {
        ParamMonomial::default()
    }

    pub fn param(name: &str) -> Self {
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), 1);
        ParamMonomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &ParamMonomial) -> ParamMonomial {
        let mut out = self.0.clone();
        for (name, exp) in &other.0 {
            *out.entry(name.clone()).or_insert(0) += exp;
        }
        ParamMonomial(out)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(n, &e)| (n.as_str(), e))
    }
}

impl fmt::Display for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, exp) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Exact scalar: a sparse polynomial in declared parameters over the
/// rationals. Zero terms are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Scalar {
    terms: BTreeMap<ParamMonomial, BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(ParamMonomial::one(), r);
        }
        Scalar { terms }
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn parameter(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ParamMonomial::param(name), BigRational::one());
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, when the scalar involves no parameters.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.terms.len() == 1 {
            self.terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c)
        } else {
            None
        }
    }

    pub fn parameters(&self) -> impl Iterator<Item = &str> {
        let mut seen: Vec<&str> = self
            .terms
            .keys()
            .flat_map(|m| m.iter().map(|(n, _)| n))
            .collect();
        seen.sort_unstable();
        seen.dedup();
        seen.into_iter()
    }

    /// Coefficient of the canonically first term; used for sign normalization.
    pub fn leading_rational(&self) -> Option<&BigRational> {
        self.terms.values().next()
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Scalar { terms }
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        let mut acc: BTreeMap<ParamMonomial, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = acc.entry(m).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Scalar { terms: acc }
    }

    pub fn scale(&self, r: &BigRational) -> Scalar {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    /// Specialize every parameter to a rational value.
    pub fn eval_rational(
        &self,
        params: &BTreeMap<String, BigRational>,
    ) -> Result<BigRational, ScalarError> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (name, exp) in m.iter() {
                let v = params
                    .get(name)
                    .ok_or_else(|| ScalarError::UnassignedParameter(name.to_string()))?;
                for _ in 0..exp {
                    term *= v;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Specialize every parameter and reduce modulo p. Rational parameter
    /// values (and coefficients) whose denominator vanishes mod p are errors.
    pub fn eval_mod(
        &self,
        params: &BTreeMap<String, BigRational>,
        field: PrimeField,
    ) -> Result<u64, ScalarError> {
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut term = field.reduce_rational(c)?;
            for (name, exp) in m.iter() {
                let v = params
                    .get(name)
                    .ok_or_else(|| ScalarError::UnassignedParameter(name.to_string()))?;
                let v = field.reduce_rational(v)?;
                term = field.mul(term, field.pow(v, exp as u64));
            }
            acc = field.add(acc, term);
        }
        Ok(acc)
    }

    /// True when `self == c * other` for the given rational constant.
    pub fn is_rational_multiple_of(&self, other: &Scalar, c: &BigRational) -> bool {
        *self == other.scale(c)
    }

    /// Renders with an explicit leading sign, for use inside polynomial
    /// displays: returns (is_negative, magnitude string, needs_parens).
    pub(crate) fn display_parts(&self) -> (bool, String, bool) {
        if self.terms.is_empty() {
            return (false, "0".to_string(), false);
        }
        if self.terms.len() > 1 {
            // multi-term coefficient: keep verbatim, parenthesized
            return (false, format!("{self}"), true);
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let neg = c.is_negative();
        let mag = c.abs();
        let s = if m.is_one() {
            format!("{mag}")
        } else if mag.is_one() {
            format!("{m}")
        } else {
            format!("{mag}*{m}")
        };
        (neg, s, false)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
