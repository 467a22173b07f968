//! Bijective fillings of Ferrers diagrams with local constraints.

use crate::shapes::{partitions, Partition};

/// A filling of `shape` by `1..=n`, each value used once. `rows[0]` is the
/// bottom (longest) row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    /// `pos[v] = (row, col)`, 0-based, for each value `v`.
    pos: Vec<(usize, usize)>,
}

impl Tableau {
    /// Builds a tableau from rows listed bottom row first. Returns `None`
    /// unless the row lengths form a partition and the entries are `1..=n`.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).ok()?;
        let n = shape.size();
        let mut pos = vec![(usize::MAX, usize::MAX); n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || pos[v].0 != usize::MAX {
                    return None;
                }
                pos[v] = (r, c);
            }
        }
        Some(Tableau { shape, rows, pos })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// `(row, col)` of value `v`, 0-based with row 0 at the bottom.
    pub fn position(&self, v: usize) -> (usize, usize) {
        self.pos[v]
    }

    pub fn is_left_adjacent(&self, u: usize, v: usize) -> bool {
        let ((ru, cu), (rv, cv)) = (self.pos[u], self.pos[v]);
        ru == rv && cu + 1 == cv
    }

    /// `u` sits immediately above `v`.
    pub fn is_above_adjacent(&self, u: usize, v: usize) -> bool {
        let ((ru, cu), (rv, cv)) = (self.pos[u], self.pos[v]);
        cu == cv && ru == rv + 1
    }

    pub fn row_of(&self, v: usize) -> usize {
        self.pos[v].0
    }

    /// Horizontal neighbour pairs `(left, right)`.
    pub fn horizontal_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().flat_map(|row| row.windows(2).map(|w| (w[0], w[1])))
    }

    /// Vertical neighbour pairs `(above, below)`.
    pub fn vertical_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .windows(2)
            .flat_map(|w| w[1].iter().zip(&w[0]).map(|(&a, &b)| (a, b)))
    }
}

impl std::fmt::Display for Tableau {
    /// Rows top to bottom, separated by `/`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text: Vec<String> = self
            .rows
            .iter()
            .rev()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", text.join("/"))
    }
}

/// Every bijective filling of `shape` accepted by the two local tests,
/// in lexicographic order of the bottom-up, left-to-right reading word.
///
/// `horizontal(left, right)` is checked for each pair of row neighbours and
/// `vertical(above, below)` for each pair of column neighbours.
pub fn fillings(
    shape: &Partition,
    horizontal: impl Fn(usize, usize) -> bool,
    vertical: impl Fn(usize, usize) -> bool,
) -> Vec<Tableau> {
    let n = shape.size();
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut used = vec![false; n + 1];
    let mut out = Vec::new();

    struct Ctx<'a, H, V> {
        cells: &'a [(usize, usize)],
        horizontal: H,
        vertical: V,
    }

    fn go<H: Fn(usize, usize) -> bool, V: Fn(usize, usize) -> bool>(
        k: usize,
        ctx: &Ctx<'_, H, V>,
        rows: &mut Vec<Vec<usize>>,
        used: &mut Vec<bool>,
        out: &mut Vec<Tableau>,
    ) {
        let Some(&(r, c)) = ctx.cells.get(k) else {
            out.push(Tableau::from_rows(rows.clone()).expect("bijective filling"));
            return;
        };
        for v in 1..used.len() {
            if used[v] {
                continue;
            }
            if c > 0 && !(ctx.horizontal)(rows[r][c - 1], v) {
                continue;
            }
            if r > 0 && !(ctx.vertical)(v, rows[r - 1][c]) {
                continue;
            }
            used[v] = true;
            rows[r][c] = v;
            go(k + 1, ctx, rows, used, out);
            used[v] = false;
        }
        rows[r][c] = 0;
    }

    let ctx = Ctx { cells: &cells, horizontal, vertical };
    go(0, &ctx, &mut rows, &mut used, &mut out);
    out
}

/// [`fillings`] over every shape of size `n`, shapes in descending
/// lexicographic order.
pub fn fillings_of_size(
    n: usize,
    horizontal: impl Fn(usize, usize) -> bool,
    vertical: impl Fn(usize, usize) -> bool,
) -> Vec<Tableau> {
    partitions(n).iter().flat_map(|shape| fillings(shape, &horizontal, &vertical)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_tableaux_count() {
        let shape: Partition = "3,2".parse().unwrap();
        let syt = fillings(&shape, |a, b| a < b, |above, below| above > below);
        assert_eq!(syt.len(), 5);
        let all = fillings(&shape, |_, _| true, |_, _| true);
        assert_eq!(all.len(), 120);
    }

    #[test]
    fn positions_and_adjacency() {
        let t = Tableau::from_rows(vec![vec![1, 4, 6], vec![3, 5], vec![2]]).unwrap();
        assert_eq!(t.position(5), (1, 1));
        assert!(t.is_left_adjacent(1, 4));
        assert!(t.is_above_adjacent(3, 1));
        assert!(!t.is_above_adjacent(2, 1));
        assert_eq!(t.to_string(), "2/3,5/1,4,6");
        assert_eq!(t.vertical_pairs().collect::<Vec<_>>(), vec![(3, 1), (5, 4), (2, 3)]);
        assert!(Tableau::from_rows(vec![vec![1], vec![1]]).is_none());
        assert!(Tableau::from_rows(vec![vec![1], vec![2, 3]]).is_none());
    }
}
