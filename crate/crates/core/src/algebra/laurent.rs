use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::text::{format_terms, parse_terms};
use super::{Coefficient, Rat};
use crate::error::Error;

/// Exponent pair `(a, b)` of the monomial `q^a t^b`.
pub type Exponent = (i32, i32);

const VARS: [&str; 2] = ["q", "t"];

/// The two variables of [`LaurentQT`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Q,
    T,
}

/// Laurent polynomial in `q` and `t` with rational coefficients.
///
/// Terms live in a `BTreeMap` keyed by `(q-exponent, t-exponent)`, so
/// iteration is already in canonical order (ascending `q`, then ascending
/// `t`). Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentQT {
    terms: BTreeMap<Exponent, Rat>,
}

fn checked_exp(a: i64) -> i32 {
    i32::try_from(a).expect("exponent overflow")
}

impl LaurentQT {
    pub fn monomial(coeff: Rat, q: i32, t: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((q, t), coeff);
        }
        LaurentQT { terms }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(Rat::from_int(c), 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    /// `q^a t^b`.
    pub fn qt(a: i32, b: i32) -> Self {
        Self::monomial(Rat::one(), a, b)
    }

    /// `1 - q^a t^b`, the factor shape that shows up everywhere in the
    /// Macdonald weights.
    pub fn one_minus(a: i32, b: i32) -> Self {
        Self::one() - Self::qt(a, b)
    }

    /// The t-analogue `[k]_t = 1 + t + ... + t^(k-1)`.
    pub fn t_integer(k: u32) -> Self {
        (0..k as i32).map(|b| Self::qt(0, b)).fold(Self::zero(), |a, b| a + b)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rat)>>(terms: I) -> Self {
        let mut out = LaurentQT::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    fn add_term(&mut self, e: Exponent, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q: i32, t: i32) -> Rat {
        self.terms.get(&(q, t)).cloned().unwrap_or_else(Rat::zero)
    }

    /// The single term, if this is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(&Rat, Exponent)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(|&(a, b)| a < 0 || b < 0)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(Rat::is_integer)
    }

    /// First term with a negative coefficient or negative exponent.
    pub fn first_non_positive_term(&self) -> Option<LaurentQT> {
        self.terms
            .iter()
            .find(|(&(a, b), c)| c.is_negative() || a < 0 || b < 0)
            .map(|(&(a, b), c)| LaurentQT::monomial(c.clone(), a, b))
    }

    pub fn is_polynomial_in_t_only(&self) -> bool {
        self.terms.keys().all(|&(a, _)| a == 0)
    }

    /// Multiplication by the unit `q^a t^b`.
    pub fn shift(&self, a: i32, b: i32) -> LaurentQT {
        LaurentQT {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| {
                    ((checked_exp(x as i64 + a as i64), checked_exp(y as i64 + b as i64)), c.clone())
                })
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> LaurentQT {
        if r.is_zero() {
            return LaurentQT::zero();
        }
        LaurentQT {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    /// Integer power. Negative powers exist only for monomials, which are
    /// the units of the Laurent ring.
    pub fn pow(&self, k: i64) -> Result<LaurentQT, Error> {
        if k >= 0 {
            let mut result = LaurentQT::one();
            let mut base = self.clone();
            let mut k = k as u64;
            while k > 0 {
                if k & 1 == 1 {
                    result = &result * &base;
                }
                k >>= 1;
                if k > 0 {
                    base = &base * &base;
                }
            }
            return Ok(result);
        }
        let (c, (a, b)) = self
            .as_monomial()
            .ok_or_else(|| Error::Algebra("non-invertible element".into()))?;
        let inv = c.checked_recip().expect("stored coefficients are nonzero");
        let m = -k;
        let mut coeff = Rat::one();
        for _ in 0..m {
            coeff = &coeff * &inv;
        }
        Ok(LaurentQT::monomial(
            coeff,
            checked_exp(-(a as i64) * m),
            checked_exp(-(b as i64) * m),
        ))
    }

    /// Replaces `var` by `image`, which must be a monomial with coefficient
    /// `±1` so the result stays a Laurent polynomial.
    pub fn substitute(&self, var: Var, image: &LaurentQT) -> Result<LaurentQT, Error> {
        let (c, (ia, ib)) = image
            .as_monomial()
            .ok_or_else(|| Error::Algebra("substitution image must be a monomial".into()))?;
        let sign = if c.is_one() {
            1
        } else if *c == -Rat::one() {
            -1
        } else {
            return Err(Error::Algebra("substitution image must have coefficient ±1".into()));
        };
        let mut out = LaurentQT::zero();
        for (&(a, b), coeff) in &self.terms {
            let (power, keep) = match var {
                Var::Q => (a as i64, (0i64, b as i64)),
                Var::T => (b as i64, (a as i64, 0i64)),
            };
            let qa = checked_exp(keep.0 + power * ia as i64);
            let tb = checked_exp(keep.1 + power * ib as i64);
            if sign < 0 && power.rem_euclid(2) == 1 {
                out.add_term((qa, tb), &-coeff);
            } else {
                out.add_term((qa, tb), coeff);
            }
        }
        Ok(out)
    }

    fn exponent_box(&self) -> Option<(i32, i32, i32, i32)> {
        let mut it = self.terms.keys();
        let &(a, b) = it.next()?;
        let init = (a, a, b, b);
        Some(self.terms.keys().fold(init, |(qlo, qhi, tlo, thi), &(a, b)| {
            (qlo.min(a), qhi.max(a), tlo.min(b), thi.max(b))
        }))
    }

    /// Exact quotient `self / divisor`; fails when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &LaurentQT) -> Result<LaurentQT, Error> {
        if divisor.is_zero() {
            return Err(Error::Algebra("division by zero".into()));
        }
        let Some((aqlo, aqhi, atlo, athi)) = self.exponent_box() else {
            return Ok(LaurentQT::zero());
        };
        let (dqlo, dqhi, dtlo, dthi) = divisor.exponent_box().expect("nonzero divisor");
        // Any exact quotient has its exponents inside this box.
        let (qlo, qhi, tlo, thi) = (aqlo - dqlo, aqhi - dqhi, atlo - dtlo, athi - dthi);
        let (&lead_e, lead_c) = divisor.terms.iter().next_back().expect("nonzero divisor");
        let lead_inv = lead_c.checked_recip().expect("stored coefficients are nonzero");

        let remainder_error = || Error::Algebra("remainder nonzero".into());
        let mut remainder = self.clone();
        let mut quotient = LaurentQT::zero();
        while let Some((&(ra, rb), rc)) = remainder.terms.iter().next_back() {
            let (ma, mb) = (ra - lead_e.0, rb - lead_e.1);
            if ma < qlo || ma > qhi || mb < tlo || mb > thi {
                return Err(remainder_error());
            }
            let mc = rc * &lead_inv;
            let step = divisor.shift(ma, mb).scale(&mc);
            quotient.add_term((ma, mb), &mc);
            remainder = remainder - step;
        }
        Ok(quotient)
    }

    /// Whether the coefficient sequence in `t`, from the lowest to the highest
    /// occurring exponent, is a palindrome. Only defined for pure
    /// `t`-polynomials.
    pub fn is_palindromic_in_t(&self) -> Result<bool, Error> {
        if !self.is_polynomial_in_t_only() {
            return Err(Error::Algebra("palindromicity needs a polynomial in t alone".into()));
        }
        let Some((_, _, lo, hi)) = self.exponent_box() else {
            return Ok(true);
        };
        Ok((0..=(hi - lo)).all(|i| self.coeff(0, lo + i) == self.coeff(0, hi - i)))
    }

    /// Evaluation at `q = 1, t = 1`.
    pub fn eval_at_one(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| &acc + c)
    }
}

impl Zero for LaurentQT {
    fn zero() -> Self {
        LaurentQT { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentQT {
    fn one() -> Self {
        LaurentQT::constant(1)
    }
}

impl Hash for LaurentQT {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (e, c) in &self.terms {
            e.hash(state);
            c.hash(state);
        }
    }
}

impl<'a> Add<&'a LaurentQT> for &'a LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Add for LaurentQT {
    type Output = LaurentQT;
    fn add(mut self, rhs: LaurentQT) -> LaurentQT {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
        self
    }
}

impl<'a> Sub<&'a LaurentQT> for &'a LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Sub for LaurentQT {
    type Output = LaurentQT;
    fn sub(mut self, rhs: LaurentQT) -> LaurentQT {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
        self
    }
}

impl<'a> Mul<&'a LaurentQT> for &'a LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                let e = (
                    checked_exp(a1 as i64 + a2 as i64),
                    checked_exp(b1 as i64 + b2 as i64),
                );
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: LaurentQT) -> LaurentQT {
        &self * &rhs
    }
}

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Coefficient for LaurentQT {
    const RING: &'static str = "laurent_qt";

    fn from_rat(r: Rat) -> Self {
        LaurentQT::monomial(r, 0, 0)
    }

    fn scale(&self, r: &Rat) -> Self {
        LaurentQT::scale(self, r)
    }
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b), c)| (c, vec![a as i64, b as i64]));
        f.write_str(&format_terms(terms, &VARS))
    }
}

impl fmt::Debug for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQT({self})")
    }
}

impl FromStr for LaurentQT {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut out = LaurentQT::zero();
        for (c, e) in parse_terms(s, &VARS)? {
            let a = i32::try_from(e[0]).map_err(|_| Error::Parse("exponent out of range".into()))?;
            let b = i32::try_from(e[1]).map_err(|_| Error::Parse("exponent out of range".into()))?;
            out.add_term((a, b), &c);
        }
        Ok(out)
    }
}
