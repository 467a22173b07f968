use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::text::{format_terms, parse_terms};
use super::{Coefficient, Rat};
use crate::error::Error;

const VARS: [&str; 1] = ["α"];

/// Polynomial in the Jack parameter `α` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: BTreeMap<u32, Rat>,
}

impl AlphaPoly {
    pub fn alpha() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, exp: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        AlphaPoly { coeffs }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(Rat::from_int(c), 0)
    }

    /// `a·α + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::monomial(Rat::from_int(a), 1) + Self::constant(b)
    }

    fn add_term(&mut self, e: u32, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: u32) -> Rat {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn eval(&self, alpha: &Rat) -> Rat {
        // Horner from the top degree down.
        let Some(top) = self.degree() else {
            return Rat::zero();
        };
        let mut acc = Rat::zero();
        for e in (0..=top).rev() {
            acc = &(&acc * alpha) + &self.coeff(e);
        }
        acc
    }
}

impl Zero for AlphaPoly {
    fn zero() -> Self {
        AlphaPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for AlphaPoly {
    fn one() -> Self {
        AlphaPoly::constant(1)
    }
}

impl Add for AlphaPoly {
    type Output = AlphaPoly;
    fn add(mut self, rhs: AlphaPoly) -> AlphaPoly {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c);
        }
        self
    }
}

impl Sub for AlphaPoly {
    type Output = AlphaPoly;
    fn sub(mut self, rhs: AlphaPoly) -> AlphaPoly {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, &-c);
        }
        self
    }
}

impl<'a> Mul<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        let mut out = AlphaPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: AlphaPoly) -> AlphaPoly {
        &self * &rhs
    }
}

impl Neg for AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Coefficient for AlphaPoly {
    const RING: &'static str = "alpha_poly";

    fn from_rat(r: Rat) -> Self {
        AlphaPoly::monomial(r, 0)
    }

    fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return AlphaPoly::zero();
        }
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().map(|(&e, c)| (c, vec![e as i64]));
        f.write_str(&format_terms(terms, &VARS))
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaPoly({self})")
    }
}

impl FromStr for AlphaPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut out = AlphaPoly::zero();
        for (c, e) in parse_terms(s, &VARS)? {
            let e = u32::try_from(e[0])
                .map_err(|_| Error::Parse(format!("negative power of α in `{s}`")))?;
            out.add_term(e, &c);
        }
        Ok(out)
    }
}
