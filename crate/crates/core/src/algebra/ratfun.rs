use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Coefficient, LaurentQT, Rat};
use crate::error::Error;

/// Quotient of two [`LaurentQT`] values.
///
/// No GCDs are taken. Equality is decided by cross-multiplication, so two
/// representations of the same fraction compare equal.
#[derive(Clone)]
pub struct RatFunQT {
    numer: LaurentQT,
    denom: LaurentQT,
}

impl RatFunQT {
    pub fn new(numer: LaurentQT, denom: LaurentQT) -> Result<Self, Error> {
        if denom.is_zero() {
            return Err(Error::Algebra("zero denominator".into()));
        }
        Ok(RatFunQT { numer, denom })
    }

    pub fn numer(&self) -> &LaurentQT {
        &self.numer
    }

    pub fn denom(&self) -> &LaurentQT {
        &self.denom
    }

    /// The Laurent polynomial this equals, when the denominator divides.
    pub fn to_laurent(&self) -> Result<LaurentQT, Error> {
        self.numer.exact_div(&self.denom)
    }

    /// Collapses the fraction when the denominator divides the numerator.
    fn tidy(self) -> Self {
        if self.denom.is_one() {
            return self;
        }
        match self.numer.exact_div(&self.denom) {
            Ok(p) => RatFunQT::from(p),
            Err(_) => self,
        }
    }
}

impl From<LaurentQT> for RatFunQT {
    fn from(p: LaurentQT) -> Self {
        RatFunQT { numer: p, denom: LaurentQT::one() }
    }
}

impl PartialEq for RatFunQT {
    fn eq(&self, other: &Self) -> bool {
        &self.numer * &other.denom == &other.numer * &self.denom
    }
}

impl Zero for RatFunQT {
    fn zero() -> Self {
        RatFunQT::from(LaurentQT::zero())
    }
    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
}

impl One for RatFunQT {
    fn one() -> Self {
        RatFunQT::from(LaurentQT::one())
    }
}

impl Add for RatFunQT {
    type Output = RatFunQT;
    fn add(self, rhs: RatFunQT) -> RatFunQT {
        if self.denom == rhs.denom {
            return RatFunQT { numer: self.numer + rhs.numer, denom: self.denom }.tidy();
        }
        RatFunQT {
            numer: &self.numer * &rhs.denom + &rhs.numer * &self.denom,
            denom: &self.denom * &rhs.denom,
        }
        .tidy()
    }
}

impl Sub for RatFunQT {
    type Output = RatFunQT;
    fn sub(self, rhs: RatFunQT) -> RatFunQT {
        self + (-rhs)
    }
}

impl Mul for RatFunQT {
    type Output = RatFunQT;
    fn mul(self, rhs: RatFunQT) -> RatFunQT {
        RatFunQT {
            numer: &self.numer * &rhs.numer,
            denom: &self.denom * &rhs.denom,
        }
        .tidy()
    }
}

impl Neg for RatFunQT {
    type Output = RatFunQT;
    fn neg(self) -> RatFunQT {
        RatFunQT { numer: -self.numer, denom: self.denom }
    }
}

impl Coefficient for RatFunQT {
    const RING: &'static str = "ratfun_qt";

    fn from_rat(r: Rat) -> Self {
        RatFunQT::from(LaurentQT::from_rat(r))
    }

    fn scale(&self, r: &Rat) -> Self {
        RatFunQT { numer: self.numer.scale(r), denom: self.denom.clone() }
    }
}

impl fmt::Display for RatFunQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({})/({})", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for RatFunQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunQT({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentQT {
        s.parse().unwrap()
    }

    #[test]
    fn cross_multiplied_equality() {
        let a = RatFunQT::new(lp("1 - t^2"), lp("1 - t")).unwrap();
        assert_eq!(a, RatFunQT::from(lp("1 + t")));
        let b = RatFunQT::new(lp("q"), lp("1 - t")).unwrap();
        let c = RatFunQT::new(lp("2*q"), lp("2 - 2*t")).unwrap();
        assert_eq!(b, c);
        assert_ne!(b, RatFunQT::from(lp("q")));
    }

    #[test]
    fn arithmetic() {
        let x = RatFunQT::new(lp("1"), lp("t - 1")).unwrap();
        let y = RatFunQT::new(lp("t"), lp("t - 1")).unwrap();
        assert_eq!(y - x.clone(), RatFunQT::one());
        let z = x.clone() * RatFunQT::from(lp("t^2 - 1"));
        assert_eq!(z.to_laurent().unwrap(), lp("1 + t"));
        assert!(RatFunQT::new(lp("1"), LaurentQT::zero()).is_err());
    }
}
