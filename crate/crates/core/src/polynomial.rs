//! Sparse bivariate polynomials in `x` and `y` with nonnegative integer
//! coefficients.
//!
//! Terms are keyed by the exponent pair `(k, l)` of `x^k y^l`. Zero
//! coefficients are never stored, so two polynomials are equal exactly when
//! their term maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("CoefficientOverflow: coefficient of x^{0} y^{1} exceeds u64")]
    CoefficientOverflow(u32, u32),
    #[error("ParseError: {0}")]
    Parse(String),
}

/// Polynomial `sum c_{k,l} x^k y^l` with `c_{k,l} > 0` for every stored term.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), u64>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds a polynomial from `(k, l, coefficient)` triples. Repeated
    /// exponents are summed; zero coefficients are dropped.
    pub fn from_terms<I>(terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (u32, u32, u64)>,
    {
        let mut p = Self::zero();
        for (k, l, c) in terms {
            p.add_term(k, l, c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, k: u32, l: u32) -> u64 {
        self.terms.get(&(k, l)).copied().unwrap_or(0)
    }

    /// Adds `c` to the coefficient of `x^k y^l`, refusing to wrap.
    pub fn add_term(&mut self, k: u32, l: u32, c: u64) -> Result<(), PolyError> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry((k, l)).or_insert(0);
        *slot = slot
            .checked_add(c)
            .ok_or(PolyError::CoefficientOverflow(k, l))?;
        Ok(())
    }

    /// Termwise sum.
    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for (&(k, l), &c) in &other.terms {
            out.add_term(k, l, c)?;
        }
        Ok(out)
    }

    /// Terms in display order: ascending total degree, then ascending `l`.
    pub fn terms(&self) -> Vec<(u32, u32, u64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&(k, l), &c)| (k, l, c)).collect();
        v.sort_by_key(|&(k, l, _)| (k + l, l, k));
        v
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The `y = 0` slice.
    pub fn y_zero_slice(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, l), _)| l == 0)
                .map(|(&e, &c)| (e, c))
                .collect(),
        }
    }

    /// Value at `x = y = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_ones(&self) -> Result<u64, PolyError> {
        self.terms.iter().try_fold(0u64, |acc, (&(k, l), &c)| {
            acc.checked_add(c).ok_or(PolyError::CoefficientOverflow(k, l))
        })
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(k, _)| k).max()
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, l, c)) in self.terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            let constant = k == 0 && l == 0;
            if c != 1 || constant {
                write!(f, "{c}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
            match l {
                0 => {}
                1 => f.write_str("y")?,
                _ => write!(f, "y^{l}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for BivariatePolynomial {
    type Err = PolyError;

    /// Parses sums of terms such as `34+53x+3x^2y+xy^2`. Whitespace is
    /// ignored; terms may repeat and are accumulated.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        let mut p = Self::zero();
        for term in compact.split('+') {
            let (k, l, c) = parse_term(term)?;
            p.add_term(k, l, c)?;
        }
        Ok(p)
    }
}

fn parse_term(term: &str) -> Result<(u32, u32, u64), PolyError> {
    let bad = || PolyError::Parse(format!("malformed term {term:?}"));
    let bytes = term.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    let coeff = if pos == 0 {
        1
    } else {
        term[..pos].parse::<u64>().map_err(|_| bad())?
    };
    let (mut k, mut l) = (0u32, 0u32);
    let mut seen_var = false;
    while pos < bytes.len() {
        let var = bytes[pos];
        pos += 1;
        let mut exp = 1u32;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            exp = term[start..pos].parse().map_err(|_| bad())?;
        }
        match var {
            b'x' if k == 0 => k = exp,
            b'y' if l == 0 => l = exp,
            _ => return Err(bad()),
        }
        seen_var = true;
    }
    if term.is_empty() || (!seen_var && pos == 0) {
        return Err(bad());
    }
    Ok((k, l, coeff))
}

/// JSON form: a list of `[k, l, coefficient]` triples sorted by
/// `(k + l, l, k)`.
impl Serialize for BivariatePolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<[u64; 3]> = self
            .terms()
            .into_iter()
            .map(|(k, l, c)| [k as u64, l as u64, c])
            .collect();
        triples.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let triples = Vec::<(u32, u32, u64)>::deserialize(deserializer)?;
        Self::from_terms(triples).map_err(serde::de::Error::custom)
    }
}
