//! Partitions, French Ferrers diagrams, and the cell statistics used by the
//! Macdonald and Jack formulas.
//!
//! Rows are counted from the bottom of the diagram (the longest row is row
//! 1); cells are labelled `1..=n` in reading order, which scans rows from the
//! top down and each row left to right.
//!
//! The leg of a cell counts the cells strictly above it in its *column*. The
//! original source words this as "above u in its row", which cannot be meant
//! literally; the worked arm/leg example settles the column reading.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Shape(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ′_i = #{j : λ_j ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// `n(λ) = Σ (i-1) λ_i`, which also equals the total leg length.
    pub fn n_stat(&self) -> usize {
        let weighted: usize = self.parts.iter().enumerate().map(|(i, &p)| i * p).sum();
        debug_assert_eq!(weighted, {
            let conj = self.conjugate();
            (1..=self.len())
                .flat_map(|r| (1..=self.part(r)).map(move |c| (r, c)))
                .map(|(r, c)| conj.part(c) - r)
                .sum::<usize>()
        });
        weighted
    }

    /// Multiplicity of each part value `1..=λ_1` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(1) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Dominance order: `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn to_csv(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses comma-separated parts such as `3,1`. An empty string is the empty
/// partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid part `{p}` in partition `{s}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of sizes `1..=max_n`, smallest size first.
pub fn partitions_up_to(max_n: usize) -> Vec<Partition> {
    (1..=max_n).flat_map(partitions).collect()
}

/// A cell of a French Ferrers diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cell {
    /// Counted from the bottom row.
    pub row: usize,
    /// Counted from the left.
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

fn contains(mu: &Partition, u: Cell) -> bool {
    u.row >= 1 && u.col >= 1 && u.col <= mu.part(u.row)
}

fn check_cell(mu: &Partition, u: Cell) -> Result<(), Error> {
    if contains(mu, u) {
        Ok(())
    } else {
        Err(Error::Shape(format!(
            "cell (row {}, col {}) is outside the diagram of {mu}",
            u.row, u.col
        )))
    }
}

/// Number of cells strictly right of `u` in its row.
pub fn arm(mu: &Partition, u: Cell) -> Result<usize, Error> {
    check_cell(mu, u)?;
    Ok(mu.part(u.row) - u.col)
}

/// Number of cells strictly above `u` in its column.
pub fn leg(mu: &Partition, u: Cell) -> Result<usize, Error> {
    check_cell(mu, u)?;
    Ok(mu.conjugate().part(u.col) - u.row)
}

/// The cell immediately below `u`, or `None` in the bottom row.
pub fn down(mu: &Partition, u: Cell) -> Result<Option<Cell>, Error> {
    check_cell(mu, u)?;
    Ok((u.row > 1).then(|| Cell::new(u.row - 1, u.col)))
}

/// Whether two distinct cells attack: same row, or adjacent rows with the
/// upper cell strictly right of the lower one.
pub fn cells_attack(a: Cell, b: Cell) -> bool {
    if a == b {
        return false;
    }
    if a.row == b.row {
        return true;
    }
    let (upper, lower) = if a.row > b.row { (a, b) } else { (b, a) };
    upper.row == lower.row + 1 && upper.col > lower.col
}

/// A partition together with its reading-order labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    shape: Partition,
    conj: Partition,
    cells_by_label: Vec<Cell>,
    /// `label_by_cell[row - 1][col - 1]`.
    label_by_cell: Vec<Vec<usize>>,
}

impl Diagram {
    pub fn new(shape: &Partition) -> Self {
        let mut cells_by_label = Vec::with_capacity(shape.size());
        let mut label_by_cell: Vec<Vec<usize>> =
            shape.parts().iter().map(|&p| vec![0; p]).collect();
        for row in (1..=shape.len()).rev() {
            for col in 1..=shape.part(row) {
                cells_by_label.push(Cell::new(row, col));
                label_by_cell[row - 1][col - 1] = cells_by_label.len();
            }
        }
        Diagram {
            conj: shape.conjugate(),
            shape: shape.clone(),
            cells_by_label,
            label_by_cell,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.cells_by_label.len()
    }

    /// Cell carrying `label` (1-based).
    pub fn cell(&self, label: usize) -> Cell {
        self.cells_by_label[label - 1]
    }

    pub fn label(&self, u: Cell) -> Option<usize> {
        if contains(&self.shape, u) {
            Some(self.label_by_cell[u.row - 1][u.col - 1])
        } else {
            None
        }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells_by_label
    }

    pub fn arm(&self, label: usize) -> usize {
        let u = self.cell(label);
        self.shape.part(u.row) - u.col
    }

    pub fn leg(&self, label: usize) -> usize {
        let u = self.cell(label);
        self.conj.part(u.col) - u.row
    }

    /// Label of the cell directly below, if any.
    pub fn down(&self, label: usize) -> Option<usize> {
        let u = self.cell(label);
        (u.row > 1).then(|| self.label_by_cell[u.row - 2][u.col - 1])
    }

    /// Attacking pairs of labels `(u, v)` with `u < v`, sorted.
    pub fn attacking_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut pairs = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                if cells_attack(self.cell(u), self.cell(v)) {
                    pairs.push((u, v));
                }
            }
        }
        pairs
    }
}

/// Attacking pairs of labels in the reading-order labelling of `mu`.
pub fn attacking_pairs(mu: &Partition) -> Vec<(usize, usize)> {
    Diagram::new(mu).attacking_pairs()
}

pub fn binomial2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}
