//! Homogeneous symmetric functions in the monomial, Schur, and power-sum
//! bases, with exact changes of basis.

mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{Coefficient, LaurentQT, Rat};
use crate::error::Error;
use crate::shapes::Partition;

pub use transition::{kostka, transition_table, TransitionTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
    Power,
}

impl Basis {
    /// Letter used when printing basis elements (`m`, `s`, `p`).
    pub fn symbol(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Schur => 's',
            Basis::Power => 'p',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
            Basis::Power => "power",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "monomial" | "m" => Ok(Basis::Monomial),
            "schur" | "s" => Ok(Basis::Schur),
            "power" | "p" => Ok(Basis::Power),
            _ => Err(Error::Parse(format!("unknown basis `{s}`"))),
        }
    }
}

/// A homogeneous symmetric function of degree `degree`, stored as a map from
/// partitions of `degree` to nonzero coefficients in one basis.
#[derive(Clone, PartialEq)]
pub struct SymFunc<C> {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, C>,
}

impl<C: Coefficient> SymFunc<C> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc { degree, basis, coeffs: BTreeMap::new() }
    }

    /// The constant 1 (degree zero).
    pub fn one() -> Self {
        let mut f = SymFunc::zero(0, Basis::Monomial);
        f.add_term(&Partition::empty(), C::one());
        f
    }

    pub fn monomial_term(lambda: Partition, c: C) -> Self {
        let mut f = SymFunc::zero(lambda.size(), Basis::Monomial);
        f.add_term(&lambda, c);
        f
    }

    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Partition, C)>,
    {
        let mut f = SymFunc::zero(degree, basis);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::SymFunc(format!(
                    "index {lambda} does not have size {degree}"
                )));
            }
            f.add_term(&lambda, c);
        }
        Ok(f)
    }

    /// Adds `c` to the coefficient of `lambda`.
    ///
    /// Panics if `lambda` has the wrong size.
    pub fn add_term(&mut self, lambda: &Partition, c: C) {
        assert_eq!(lambda.size(), self.degree, "index {lambda} has the wrong size");
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(lambda) {
            Some(slot) => {
                let sum = std::mem::replace(slot, C::zero()) + c;
                if sum.is_zero() {
                    self.coeffs.remove(lambda);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.coeffs.insert(lambda.clone(), c);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.coeffs.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn get(&self, lambda: &Partition) -> Option<&C> {
        self.coeffs.get(lambda)
    }

    /// Terms in ascending lexicographic order of the index.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &C)> {
        self.coeffs.iter()
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> SymFunc<D> {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lambda, c) in &self.coeffs {
            out.add_term(lambda, f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coefficient>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, Error>,
    ) -> Result<SymFunc<D>, Error> {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lambda, c) in &self.coeffs {
            out.add_term(lambda, f(c)?);
        }
        Ok(out)
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn times(&self, c: &C) -> SymFunc<C> {
        self.map_coeffs(|x| x.clone() * c.clone())
    }

    pub fn scale(&self, r: &Rat) -> SymFunc<C> {
        self.map_coeffs(|x| x.scale(r))
    }

    /// Re-expresses `self` in `target`.
    pub fn convert(&self, target: Basis) -> Result<SymFunc<C>, Error> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let table = transition_table(self.degree);
        let monomial = match self.basis {
            Basis::Monomial => self.clone(),
            Basis::Schur => {
                let mut out = SymFunc::zero(self.degree, Basis::Monomial);
                for (lambda, c) in &self.coeffs {
                    let row = table.kostka_row(table.position(lambda));
                    for (mu, &k) in table.partitions().iter().zip(row) {
                        if k != 0 {
                            out.add_term(mu, c.scale(&Rat::from(k as i64)));
                        }
                    }
                }
                out
            }
            Basis::Power => {
                let mut out = SymFunc::zero(self.degree, Basis::Monomial);
                for (lambda, c) in &self.coeffs {
                    let row = table.power_row(table.position(lambda));
                    for (mu, r) in table.partitions().iter().zip(row) {
                        if !r.is_zero() {
                            out.add_term(mu, c.scale(r));
                        }
                    }
                }
                out
            }
        };
        match target {
            Basis::Monomial => Ok(monomial),
            Basis::Schur => monomial_to_schur(&monomial, &table),
            Basis::Power => {
                let mut out = SymFunc::zero(self.degree, Basis::Power);
                for (mu, c) in &monomial.coeffs {
                    let row = table.monomial_to_power_row(table.position(mu));
                    for (lambda, r) in table.partitions().iter().zip(row) {
                        if !r.is_zero() {
                            out.add_term(lambda, c.scale(r));
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// The involution `ω`: `s_λ ↦ s_λ′` and `p_λ ↦ (-1)^{|λ|-ℓ(λ)} p_λ`.
    pub fn omega(&self) -> Result<SymFunc<C>, Error> {
        let mut out = SymFunc::zero(self.degree, self.basis);
        match self.basis {
            Basis::Monomial => {
                return Err(Error::SymFunc("omega is not applied in the monomial basis; convert first".into()))
            }
            Basis::Schur => {
                for (lambda, c) in &self.coeffs {
                    out.add_term(&lambda.conjugate(), c.clone());
                }
            }
            Basis::Power => {
                for (lambda, c) in &self.coeffs {
                    let odd = (lambda.size() - lambda.len()) % 2 == 1;
                    out.add_term(lambda, if odd { -c.clone() } else { c.clone() });
                }
            }
        }
        Ok(out)
    }

    /// Same function, same basis, compared as maps.
    pub fn first_difference(&self, other: &SymFunc<C>) -> Option<(Partition, C, C)> {
        let keys: std::collections::BTreeSet<&Partition> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().rev().find_map(|lambda| {
            let (a, b) = (self.coeff(lambda), other.coeff(lambda));
            (a != b).then(|| (lambda.clone(), a, b))
        })
    }
}

fn monomial_to_schur<C: Coefficient>(
    f: &SymFunc<C>,
    table: &TransitionTable,
) -> Result<SymFunc<C>, Error> {
    // Descending lex order extends dominance, and K is unitriangular with
    // respect to dominance, so each Schur coefficient is determined once all
    // earlier ones are known.
    let parts = table.partitions();
    let mut solved: Vec<C> = Vec::with_capacity(parts.len());
    for (j, lambda) in parts.iter().enumerate() {
        let mut b = f.coeff(lambda);
        for (i, nu) in parts[..j].iter().enumerate() {
            let k = table.kostka(nu, lambda);
            if k != 0 && !solved[i].is_zero() {
                b = b - solved[i].scale(&Rat::from(k as i64));
            }
        }
        if table.kostka(lambda, lambda) != 1 {
            return Err(Error::SymFunc("Kostka matrix is not unitriangular".into()));
        }
        solved.push(b);
    }
    SymFunc::from_terms(f.degree, Basis::Schur, parts.iter().cloned().zip(solved))
}

impl<C: Coefficient> Add for SymFunc<C> {
    type Output = SymFunc<C>;
    fn add(mut self, rhs: SymFunc<C>) -> SymFunc<C> {
        assert_eq!((self.degree, self.basis), (rhs.degree, rhs.basis), "mismatched operands");
        for (lambda, c) in rhs.coeffs {
            self.add_term(&lambda, c);
        }
        self
    }
}

impl<C: Coefficient> Sub for SymFunc<C> {
    type Output = SymFunc<C>;
    fn sub(mut self, rhs: SymFunc<C>) -> SymFunc<C> {
        assert_eq!((self.degree, self.basis), (rhs.degree, rhs.basis), "mismatched operands");
        for (lambda, c) in rhs.coeffs {
            self.add_term(&lambda, -c);
        }
        self
    }
}

/// All distinct rearrangements of `lambda` padded with zeros to `vars` slots.
fn exponent_vectors(lambda: &Partition, vars: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<usize> = lambda.parts().to_vec();
    v.resize(vars, 0);
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // Lexicographic next-permutation walk from the ascending arrangement.
    loop {
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("pivot exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

/// Product of two symmetric functions given in the monomial basis.
///
/// Both factors are expanded into exponent vectors on `deg f + deg g`
/// variables; the product's coefficient of `m_ν` is read off at the
/// weakly decreasing vector `ν`.
pub fn multiply_monomial<C: Coefficient>(
    f: &SymFunc<C>,
    g: &SymFunc<C>,
) -> Result<SymFunc<C>, Error> {
    if f.basis != Basis::Monomial || g.basis != Basis::Monomial {
        return Err(Error::SymFunc("multiply_monomial needs monomial-basis inputs".into()));
    }
    let degree = f.degree + g.degree;
    let vars = degree;
    let mut out = SymFunc::zero(degree, Basis::Monomial);
    let g_vectors: Vec<(Vec<Vec<usize>>, &C)> =
        g.coeffs.iter().map(|(mu, c)| (exponent_vectors(mu, vars), c)).collect();
    for (lambda, a) in &f.coeffs {
        for u in exponent_vectors(lambda, vars) {
            for (vs, b) in &g_vectors {
                for v in vs {
                    let sum: Vec<usize> = u.iter().zip(v).map(|(x, y)| x + y).collect();
                    if sum.windows(2).all(|w| w[0] >= w[1]) {
                        out.add_term(&Partition::from_unsorted(sum), a.clone() * (*b).clone());
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `z_λ = Π_i i^{m_i} m_i!`.
pub fn z_of(lambda: &Partition) -> u64 {
    lambda
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (i as u64).pow(m as u32) * (1..=m as u64).product::<u64>())
        .product()
}

/// Result of a Schur-positivity test: the first offending index and term,
/// scanning indices in descending lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct Positivity {
    pub positive: bool,
    pub witness: Option<(Partition, LaurentQT)>,
}

/// Every Schur coefficient has nonnegative rational coefficients and no
/// negative exponents.
pub fn schur_positive(f: &SymFunc<LaurentQT>) -> Result<Positivity, Error> {
    if f.basis != Basis::Schur {
        return Err(Error::SymFunc("schur_positive needs a Schur-basis input".into()));
    }
    for (lambda, c) in f.coeffs.iter().rev() {
        if let Some(term) = c.first_non_positive_term() {
            return Ok(Positivity { positive: false, witness: Some((lambda.clone(), term)) });
        }
    }
    Ok(Positivity { positive: true, witness: None })
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    index: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonSymFunc {
    object: String,
    degree: usize,
    basis: Basis,
    ring: String,
    terms: Vec<JsonTerm>,
}

impl<C: Coefficient> SymFunc<C> {
    /// Canonical JSON: terms sorted by index in descending lexicographic
    /// order, coefficients in their canonical text form.
    pub fn to_json(&self) -> String {
        let doc = JsonSymFunc {
            object: "symfunc".into(),
            degree: self.degree,
            basis: self.basis,
            ring: C::RING.into(),
            terms: self
                .coeffs
                .iter()
                .rev()
                .map(|(lambda, c)| JsonTerm { index: lambda.parts().to_vec(), coeff: c.to_string() })
                .collect(),
        };
        serde_json::to_string(&doc).expect("plain data serializes")
    }
}

impl<C: Coefficient + FromStr<Err = Error>> SymFunc<C> {
    pub fn from_json(s: &str) -> Result<Self, Error> {
        let doc: JsonSymFunc =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad symfunc JSON: {e}")))?;
        if doc.object != "symfunc" || doc.ring != C::RING {
            return Err(Error::Parse(format!(
                "expected a {} symfunc, got object `{}` over `{}`",
                C::RING, doc.object, doc.ring
            )));
        }
        let terms = doc
            .terms
            .into_iter()
            .map(|t| Ok((Partition::new(t.index)?, t.coeff.parse::<C>()?)))
            .collect::<Result<Vec<_>, Error>>()?;
        SymFunc::from_terms(doc.degree, doc.basis, terms)
    }
}

impl<C: Coefficient> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return writeln!(f, "0");
        }
        for (lambda, c) in self.coeffs.iter().rev() {
            writeln!(f, "{}_{{{}}}: {}", self.basis.symbol(), lambda.to_csv(), c)?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{} deg {}]{{", self.basis.name(), self.degree)?;
        for (i, (lambda, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", lambda, c)?;
        }
        write!(f, "}}")
    }
}
