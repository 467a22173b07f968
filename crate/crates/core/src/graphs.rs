//! Labelled simple graphs on `{1..n}`, the attacking graphs of a partition,
//! and coloring enumeration.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::shapes::{Diagram, Partition};

/// Largest vertex count supported by the bitmask adjacency.
pub const MAX_VERTICES: usize = 63;

/// Simple graph on vertices `1..=n`, edges stored as `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `adj[v]` has bit `u` set iff `{u, v}` is an edge.
    adj: Vec<u64>,
}

impl UGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        UGraph { n, edges: Vec::new(), adj: vec![0; n + 1] }
    }

    pub fn new<I>(n: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::InvalidArgument(format!("at most {MAX_VERTICES} vertices")));
        }
        let mut g = UGraph::empty(n);
        for (a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidArgument(format!("bad edge {{{a},{b}}} on {n} vertices")));
            }
            g.insert(a, b);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = UGraph::empty(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.insert(u, v);
            }
        }
        g
    }

    fn insert(&mut self, a: usize, b: usize) {
        let (u, v) = (a.min(b), a.max(b));
        if self.adj[u] >> v & 1 == 1 {
            return;
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        let pos = self.edges.partition_point(|&e| e < (u, v));
        self.edges.insert(pos, (u, v));
    }

    pub fn with_edge(&self, a: usize, b: usize) -> UGraph {
        let mut g = self.clone();
        g.insert(a, b);
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a <= self.n && b <= self.n && self.adj[a] >> b & 1 == 1
    }

    /// Neighbours of `v` as a bitmask over vertex numbers.
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn is_subgraph_of(&self, other: &UGraph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }
}

impl fmt::Display for UGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if self.n >= 10 {
                write!(f, "{u}-{v}")?;
            } else {
                write!(f, "{u}{v}")?;
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for UGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UGraph(n={}, {:?})", self.n, self.edges)
    }
}

/// A down-edge `{upper, lower}` joining a cell to the cell directly below,
/// with the geometry of the upper cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DownEdge {
    pub upper: usize,
    pub lower: usize,
    pub arm: usize,
    pub leg: usize,
}

/// The attacking graph of a partition and its augmentation by down-edges.
#[derive(Clone, Debug)]
pub struct AttackingData {
    pub mu: Partition,
    pub diagram: Diagram,
    pub g: UGraph,
    pub g_plus: UGraph,
    /// One entry per cell outside the bottom row, in increasing `upper`.
    pub down_edges: Vec<DownEdge>,
}

pub fn attacking_data(mu: &Partition) -> AttackingData {
    let diagram = Diagram::new(mu);
    let n = mu.size();
    let g = UGraph::new(n, diagram.attacking_pairs()).expect("labels in range");
    let down_edges: Vec<DownEdge> = (1..=n)
        .filter_map(|u| {
            diagram.down(u).map(|v| DownEdge { upper: u, lower: v, arm: diagram.arm(u), leg: diagram.leg(u) })
        })
        .collect();
    let mut g_plus = g.clone();
    for e in &down_edges {
        g_plus.insert(e.upper, e.lower);
    }
    debug_assert!(is_claw_free(&g) && is_claw_free(&g_plus));
    AttackingData { mu: mu.clone(), diagram, g, g_plus, down_edges }
}

impl AttackingData {
    pub fn n(&self) -> usize {
        self.mu.size()
    }

    /// `G ∪ {down_edges[i] : bit i of mask}`.
    pub fn sandwich(&self, mask: u64) -> UGraph {
        let mut h = self.g.clone();
        for (i, e) in self.down_edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                h.insert(e.upper, e.lower);
            }
        }
        h
    }

    /// Every `H` with `G ⊆ H ⊆ G⁺`, paired with its down-edge mask, in
    /// ascending mask order.
    pub fn sandwich_graphs(&self) -> impl Iterator<Item = (u64, UGraph)> + '_ {
        (0..1u64 << self.down_edges.len()).map(move |mask| (mask, self.sandwich(mask)))
    }

    pub fn select(&self, sel: &GraphSelector) -> Result<UGraph, Error> {
        match sel {
            GraphSelector::Attacking => Ok(self.g.clone()),
            GraphSelector::Augmented => Ok(self.g_plus.clone()),
            GraphSelector::Mask(bits) => {
                if bits.len() != self.down_edges.len() {
                    return Err(Error::InvalidArgument(format!(
                        "mask has {} bits but {} has {} down-edges",
                        bits.len(),
                        self.mu,
                        self.down_edges.len()
                    )));
                }
                let mask = bits.iter().enumerate().fold(0u64, |m, (i, &b)| m | (b as u64) << i);
                Ok(self.sandwich(mask))
            }
        }
    }
}

/// Which sandwich graph to use: `attacking`, `augmented`, or `mask:<bits>`
/// where the i-th character switches on the i-th down-edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSelector {
    Attacking,
    Augmented,
    Mask(Vec<bool>),
}

impl FromStr for GraphSelector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "attacking" => Ok(GraphSelector::Attacking),
            "augmented" => Ok(GraphSelector::Augmented),
            _ => {
                let bits = s
                    .strip_prefix("mask:")
                    .ok_or_else(|| Error::Parse(format!("unknown graph selector `{s}`")))?;
                bits.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::Parse(format!("mask must be a bitstring, got `{bits}`"))),
                    })
                    .collect::<Result<_, _>>()
                    .map(GraphSelector::Mask)
            }
        }
    }
}

/// Sizes of the connected components, isolated vertices included.
pub fn component_partition(h: &UGraph) -> Partition {
    let mut seen = 0u64;
    let mut sizes = Vec::new();
    for start in 1..=h.n {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = h.adj[v] & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        sizes.push(comp.count_ones() as usize);
    }
    Partition::from_unsorted(sizes)
}

/// No induced star `K_{1,3}`.
pub fn is_claw_free(h: &UGraph) -> bool {
    for c in 1..=h.n {
        let nb: Vec<usize> = bits(h.adj[c]).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if h.has_edge(a, b) {
                    continue;
                }
                if nb[j + 1..].iter().any(|&d| !h.has_edge(a, d) && !h.has_edge(b, d)) {
                    return false;
                }
            }
        }
    }
    true
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// Backtracking enumeration of colorings `κ: {1..n} → {1..k}` together
/// with `asc(κ)`, the number of edges `{u<v}` with `κ(u) < κ(v)`.
///
/// Vertices are assigned in order 1..n and colours tried in order 1..k, so
/// colorings come out in lexicographic order.
pub struct Colorings<'a> {
    graph: &'a UGraph,
    palette: u8,
    proper: bool,
    /// Remaining uses of each colour when the content is prescribed.
    remaining: Option<Vec<usize>>,
    colors: Vec<u8>,
    /// `asc[d]` counts ascents among the first `d + 1` vertices.
    asc: Vec<usize>,
    depth: usize,
    state: State,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl<'a> Colorings<'a> {
    pub fn new(graph: &'a UGraph, palette: usize, proper: bool) -> Self {
        assert!(palette >= 1 && palette < 256, "palette must be in 1..=255");
        Colorings {
            graph,
            palette: palette as u8,
            proper,
            remaining: None,
            colors: vec![0; graph.n],
            asc: vec![0; graph.n],
            depth: 0,
            state: State::Fresh,
        }
    }

    /// Restricts to colorings using colour `i + 1` exactly `content[i]`
    /// times; the palette becomes `content.len()`.
    pub fn with_content(mut self, content: &[usize]) -> Self {
        assert_eq!(content.iter().sum::<usize>(), self.graph.n, "content must sum to n");
        self.palette = content.len().max(1) as u8;
        self.remaining = Some(content.to_vec());
        self
    }

    fn admissible(&self, d: usize, c: u8) -> Option<usize> {
        if let Some(rem) = &self.remaining {
            if rem[c as usize - 1] == 0 {
                return None;
            }
        }
        let v = d + 1;
        let mut added = 0;
        for u in bits(self.graph.adj[v] & ((1u64 << v) - 1)) {
            let cu = self.colors[u - 1];
            if cu == c && self.proper {
                return None;
            }
            if cu < c {
                added += 1;
            }
        }
        Some(added)
    }

    /// Moves vertex `d` to its next admissible colour, or clears it.
    fn advance(&mut self, d: usize) -> bool {
        let old = self.colors[d];
        if old != 0 {
            if let Some(rem) = &mut self.remaining {
                rem[old as usize - 1] += 1;
            }
        }
        for c in old + 1..=self.palette {
            if let Some(added) = self.admissible(d, c) {
                self.colors[d] = c;
                if let Some(rem) = &mut self.remaining {
                    rem[c as usize - 1] -= 1;
                }
                self.asc[d] = added + if d > 0 { self.asc[d - 1] } else { 0 };
                return true;
            }
        }
        self.colors[d] = 0;
        false
    }

    /// Next coloring without allocating; colours are `1..=k`.
    pub fn next_ref(&mut self) -> Option<(&[u8], usize)> {
        let n = self.graph.n;
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if n == 0 {
                    self.state = State::Done;
                    return Some((&self.colors, 0));
                }
                self.depth = 0;
            }
            State::Running => {}
        }
        loop {
            if self.advance(self.depth) {
                if self.depth + 1 == n {
                    return Some((&self.colors, self.asc[n - 1]));
                }
                self.depth += 1;
            } else if self.depth == 0 {
                self.state = State::Done;
                return None;
            } else {
                self.depth -= 1;
            }
        }
    }
}

impl Iterator for Colorings<'_> {
    type Item = (Vec<u8>, usize);
    fn next(&mut self) -> Option<Self::Item> {
        self.next_ref().map(|(c, a)| (c.to_vec(), a))
    }
}

pub fn proper_colorings(h: &UGraph, palette: usize) -> Colorings<'_> {
    Colorings::new(h, palette, true)
}

pub fn all_colorings(h: &UGraph, palette: usize) -> Colorings<'_> {
    Colorings::new(h, palette, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{binomial2, partitions};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn attacking_graphs_of_small_shapes() {
        let d = attacking_data(&p("3,2"));
        assert_eq!(d.g.edges(), &[(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]);
        assert_eq!(d.g_plus.edges(), &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]);
        let d = attacking_data(&p("2,1,1"));
        assert_eq!(d.g.edges(), &[(3, 4)]);
        assert_eq!(d.g_plus.edges(), &[(1, 2), (2, 3), (3, 4)]);
        let d = attacking_data(&p("1,1"));
        assert!(d.g.edges().is_empty());
        assert_eq!(d.g_plus.edges(), &[(1, 2)]);
        assert_eq!(d.down_edges, vec![DownEdge { upper: 1, lower: 2, arm: 0, leg: 0 }]);
    }

    #[test]
    fn edge_counts() {
        for n in 1..=8 {
            for mu in partitions(n) {
                let d = attacking_data(&mu);
                let expected = 2 * mu.conjugate().n_stat() - binomial2(mu.part(1));
                assert_eq!(d.g.edge_count(), expected, "{mu}");
                assert_eq!(d.g_plus.edge_count() - d.g.edge_count(), n - mu.part(1));
                for e in &d.down_edges {
                    assert!(e.upper < e.lower && !d.g.has_edge(e.upper, e.lower));
                }
            }
        }
    }

    #[test]
    fn sandwich_counts() {
        assert_eq!(attacking_data(&p("3,2")).sandwich_graphs().count(), 4);
        assert_eq!(attacking_data(&p("4")).sandwich_graphs().count(), 1);
        for n in 1..=7 {
            for mu in partitions(n) {
                let d = attacking_data(&mu);
                let all: Vec<UGraph> = d.sandwich_graphs().map(|(_, h)| h).collect();
                assert_eq!(all.len(), 1 << (n - mu.part(1)));
                let distinct: std::collections::HashSet<&UGraph> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
                for h in &all {
                    assert!(d.g.is_subgraph_of(h) && h.is_subgraph_of(&d.g_plus));
                }
            }
        }
    }

    #[test]
    fn sandwiches_are_claw_free() {
        for n in 1..=6 {
            for mu in partitions(n) {
                let d = attacking_data(&mu);
                assert!(d.sandwich_graphs().all(|(_, h)| is_claw_free(&h)), "{mu}");
            }
        }
    }

    #[test]
    fn claws() {
        let star = UGraph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(!is_claw_free(&star));
        assert!(is_claw_free(&UGraph::complete(4)));
        assert!(is_claw_free(&UGraph::empty(5)));
    }

    #[test]
    fn components() {
        let h = UGraph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(component_partition(&h), p("2,2"));
        assert_eq!(component_partition(&UGraph::empty(3)), p("1,1,1"));
        let path = UGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(component_partition(&path), p("3"));
        assert_eq!(component_partition(&UGraph::empty(0)), Partition::empty());
    }

    #[test]
    fn colorings_of_an_edge() {
        let h = UGraph::new(2, [(1, 2)]).unwrap();
        let all: Vec<_> = proper_colorings(&h, 2).collect();
        assert_eq!(all, vec![(vec![1, 2], 1), (vec![2, 1], 0)]);
        assert_eq!(all_colorings(&h, 2).count(), 4);
        let e = UGraph::empty(3);
        let all: Vec<_> = proper_colorings(&e, 2).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|&(_, a)| a == 0));
        assert_eq!(proper_colorings(&UGraph::empty(0), 3).count(), 1);
        assert_eq!(proper_colorings(&UGraph::complete(3), 2).count(), 0);
    }

    #[test]
    fn content_restriction() {
        let h = UGraph::new(3, [(1, 2)]).unwrap();
        let restricted: Vec<_> = proper_colorings(&h, 3).with_content(&[2, 1]).collect();
        let filtered: Vec<_> = proper_colorings(&h, 2)
            .filter(|(c, _)| c.iter().filter(|&&x| x == 1).count() == 2)
            .collect();
        assert_eq!(restricted, filtered);
    }

    #[test]
    fn selectors() {
        let d = attacking_data(&p("3,2"));
        assert_eq!(d.select(&"attacking".parse().unwrap()).unwrap(), d.g);
        assert_eq!(d.select(&"augmented".parse().unwrap()).unwrap(), d.g_plus);
        assert_eq!(d.select(&"mask:10".parse().unwrap()).unwrap(), d.g.with_edge(1, 3));
        assert!(d.select(&"mask:1".parse().unwrap()).is_err());
        assert!("mask:12".parse::<GraphSelector>().is_err());
        assert!("whatever".parse::<GraphSelector>().is_err());
    }
}
