use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::{multiply_monomial, SymFunc};
use crate::algebra::Rat;
use crate::error::Error;
use crate::shapes::{partitions, Partition};

/// Number of semistandard tableaux of shape `lambda` and content `mu`:
/// rows weakly increase, columns strictly increase away from the bottom row.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64, Error> {
    if lambda.size() != mu.size() {
        return Err(Error::SymFunc(format!(
            "Kostka number needs equal sizes, got {lambda} and {mu}"
        )));
    }
    let shape = lambda.parts();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&p| vec![0; p]).collect();
    let mut remaining = mu.parts().to_vec();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
        .collect();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(k) else {
            return 1;
        };
        let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let min_below = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        let lo = min_left.max(min_below);
        let mut count = 0;
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            rows[r][c] = v;
            count += fill(k + 1, cells, rows, remaining);
            remaining[v - 1] += 1;
        }
        rows[r][c] = 0;
        count
    }

    Ok(fill(0, &cells, &mut rows, &mut remaining))
}

/// Change-of-basis data for one degree. Partitions are listed in descending
/// lexicographic order, which is a linear extension of dominance.
#[derive(Debug)]
pub struct TransitionTable {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `kostka[λ][μ] = K_{λμ}`, so `s_λ = Σ_μ K_{λμ} m_μ`.
    kostka: Vec<Vec<u64>>,
    /// `power_to_monomial[λ][μ]` is the coefficient of `m_μ` in `p_λ`.
    power_to_monomial: Vec<Vec<Rat>>,
    /// `monomial_to_power[μ][λ]` is the coefficient of `p_λ` in `m_μ`.
    monomial_to_power: Vec<Vec<Rat>>,
}

impl TransitionTable {
    fn build(degree: usize) -> Self {
        let partitions = partitions(degree);
        let index: HashMap<Partition, usize> =
            partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let size = partitions.len();

        let kostka: Vec<Vec<u64>> = partitions
            .iter()
            .map(|l| partitions.iter().map(|m| kostka(l, m).expect("same degree")).collect())
            .collect();

        let mut power_to_monomial = vec![vec![Rat::zero(); size]; size];
        for (i, lambda) in partitions.iter().enumerate() {
            let p = power_in_monomials(lambda);
            for (mu, c) in p.terms() {
                power_to_monomial[i][index[mu]] = c.clone();
            }
        }
        let monomial_to_power =
            invert(&power_to_monomial).expect("power-to-monomial matrix is invertible");

        TransitionTable { degree, partitions, index, kostka, power_to_monomial, monomial_to_power }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn kostka(&self, lambda: &Partition, mu: &Partition) -> u64 {
        self.kostka[self.index[lambda]][self.index[mu]]
    }

    pub fn power_to_monomial(&self, lambda: &Partition, mu: &Partition) -> &Rat {
        &self.power_to_monomial[self.index[lambda]][self.index[mu]]
    }

    pub fn monomial_to_power(&self, mu: &Partition, lambda: &Partition) -> &Rat {
        &self.monomial_to_power[self.index[mu]][self.index[lambda]]
    }

    pub(crate) fn position(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }

    pub(crate) fn kostka_row(&self, i: usize) -> &[u64] {
        &self.kostka[i]
    }

    pub(crate) fn power_row(&self, i: usize) -> &[Rat] {
        &self.power_to_monomial[i]
    }

    pub(crate) fn monomial_to_power_row(&self, i: usize) -> &[Rat] {
        &self.monomial_to_power[i]
    }
}

/// `p_λ` expanded in monomials, as an iterated product of `m_(k) = p_k`.
fn power_in_monomials(lambda: &Partition) -> SymFunc<Rat> {
    let mut acc = SymFunc::one();
    for &k in lambda.parts() {
        let pk = SymFunc::monomial_term(Partition::new(vec![k]).expect("single part"), Rat::one());
        acc = multiply_monomial(&acc, &pk).expect("both in monomial basis");
    }
    acc
}

/// Gauss-Jordan inverse over ℚ; `None` if singular.
fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].checked_recip()?;
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..2 * n {
                    let delta = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

static TABLES: OnceLock<Mutex<HashMap<usize, Arc<TransitionTable>>>> = OnceLock::new();

/// The cached table for `degree`, built on first use.
pub fn transition_table(degree: usize) -> Arc<TransitionTable> {
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().expect("table cache poisoned").get(&degree) {
        return Arc::clone(t);
    }
    let built = Arc::new(TransitionTable::build(degree));
    let mut guard = tables.lock().expect("table cache poisoned");
    Arc::clone(guard.entry(degree).or_insert(built))
}
