//! Exact coefficient rings.

mod alpha;
mod laurent;
mod rat;
mod ratfun;
mod text;

use std::fmt;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

pub use alpha::AlphaPoly;
pub use laurent::{Exponent, LaurentQT, Var};
pub use rat::Rat;
pub use ratfun::RatFunQT;

/// A commutative ring containing ℚ, usable as the coefficient ring of a
/// symmetric function.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    /// Name used in the JSON encoding.
    const RING: &'static str;

    fn from_rat(r: Rat) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    /// Multiplication by a rational scalar.
    fn scale(&self, r: &Rat) -> Self;
}

impl Coefficient for Rat {
    const RING: &'static str = "rational";

    fn from_rat(r: Rat) -> Self {
        r
    }

    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
}
