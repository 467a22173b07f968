//! Integral-form Macdonald polynomials `J_{μ′}(x;q,t)`, computed four ways
//! from the diagram of `μ`.
//!
//! Every function here takes the diagram shape `μ` and returns `J_{μ′}`,
//! the polynomial indexed by the conjugate.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{LaurentQT, Rat};
use crate::chromatic::{inv_perm, inv_tableau, is_lr_max, n_lambda, x_g, BlockPermutation};
use crate::error::Error;
use crate::graphs::{attacking_data, AttackingData, DownEdge, UGraph};
use crate::shapes::{binomial2, partitions, Partition};
use crate::symfunc::{z_of, Basis, SymFunc};
use crate::tableau::{fillings_of_size, Tableau};

/// `(1 - t)^k`.
pub(crate) fn one_minus_t_pow(k: usize) -> LaurentQT {
    let base = LaurentQT::one_minus(0, 1);
    (0..k).fold(LaurentQT::one(), |acc, _| acc * base.clone())
}

fn i32_of(k: usize) -> i32 {
    i32::try_from(k).expect("exponent fits in i32")
}

/// `t^{-n(μ′) + C(μ₁, 2)} (1 - t)^{μ₁}`.
fn chromatic_prefactor(mu: &Partition) -> LaurentQT {
    let shift = binomial2(mu.part(1)) as i64 - mu.conjugate().n_stat() as i64;
    LaurentQT::qt(0, shift as i32) * one_minus_t_pow(mu.part(1))
}

/// The HHL statistics of a non-attacking filling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FillingStats {
    pub maj: usize,
    /// Attacking pairs `u < v` with `σ(u) > σ(v)`.
    pub inv: usize,
    /// Attacking pairs `u < v` with `σ(u) < σ(v)`.
    pub coinv: usize,
    /// Total arm over descent cells; the HHL exponent of `t` is
    /// `n(μ′) - inv + arm_des`.
    pub arm_des: usize,
}

/// `maj`, `inv`, `coinv` and `arm_des` of the filling `values` (indexed by
/// label − 1). `maj` sums `leg + 1` over descent cells, whose value exceeds
/// the value below.
pub fn filling_stats(d: &AttackingData, values: &[u8]) -> FillingStats {
    let des = || d.down_edges.iter().filter(|e| values[e.upper - 1] > values[e.lower - 1]);
    let maj = des().map(|e| e.leg + 1).sum();
    let arm_des = des().map(|e| e.arm).sum();
    let (mut inv, mut coinv) = (0, 0);
    for &(u, v) in d.g.edges() {
        match values[u - 1].cmp(&values[v - 1]) {
            std::cmp::Ordering::Greater => inv += 1,
            std::cmp::Ordering::Less => coinv += 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    FillingStats { maj, inv, coinv, arm_des }
}

/// Non-attacking fillings of content `lambda` (colour `i` used `λ_i` times),
/// grouped by a key computed from each filling.
pub(crate) fn grouped_fillings<K: std::hash::Hash + Eq>(
    d: &AttackingData,
    lambda: &Partition,
    key: impl Fn(&[u8], usize) -> K,
) -> HashMap<K, u64> {
    let mut groups = HashMap::new();
    let mut it = crate::graphs::proper_colorings(&d.g, lambda.len().max(1)).with_content(lambda.parts());
    while let Some((values, asc)) = it.next_ref() {
        *groups.entry(key(values, asc)).or_insert(0) += 1;
    }
    groups
}

/// Bitmask of down-edges whose two cells carry equal values.
pub(crate) fn equal_mask(d: &AttackingData, values: &[u8]) -> u64 {
    d.down_edges
        .iter()
        .enumerate()
        .filter(|(_, e)| values[e.upper - 1] == values[e.lower - 1])
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// `J_{μ′}` by the Haglund-Haiman-Loehr sum over non-attacking fillings, in
/// the monomial basis.
///
/// Each filling is weighted by `q^{maj} t^{n(μ′) - inv + arm_des}`; the
/// `arm_des` correction is what makes a descent cell contribute
/// `q^{leg+1} t^{arm} (1 - t)`, matching the sandwich-graph expansion.
pub fn j_hhl(mu: &Partition) -> SymFunc<LaurentQT> {
    let d = attacking_data(mu);
    let n = mu.size();
    let n_conj = i32_of(mu.conjugate().n_stat());
    let edges = d.g.edge_count();
    let mut f = SymFunc::zero(n, Basis::Monomial);
    for lambda in partitions(n) {
        let groups = grouped_fillings(&d, &lambda, |values, asc| {
            let (mut maj, mut arm_des) = (0, 0);
            for e in d.down_edges.iter().filter(|e| values[e.upper - 1] > values[e.lower - 1]) {
                maj += e.leg + 1;
                arm_des += e.arm;
            }
            // Proper colorings: every attacking pair is an ascent or an inversion.
            let inv = edges - asc;
            (maj, n_conj - i32_of(inv) + i32_of(arm_des), equal_mask(&d, values))
        });
        let mut coeff = LaurentQT::zero();
        for ((maj, t_exp, eq), count) in groups {
            let mut w = LaurentQT::monomial(Rat::from_int(count as i64), i32_of(maj), t_exp);
            for (i, e) in d.down_edges.iter().enumerate() {
                if eq >> i & 1 == 1 {
                    w = w * LaurentQT::one_minus(i32_of(e.leg + 1), i32_of(e.arm + 1));
                }
            }
            w = w * one_minus_t_pow(n - eq.count_ones() as usize);
            coeff = coeff + w;
        }
        f.add_term(&lambda, coeff);
    }
    f
}

/// Product over down-edges of the sandwich weights: `-(1 - q^{leg+1} t^{arm})`
/// for edges in `H` and `1 - q^{leg+1} t^{arm+1}` for edges not in `H`.
fn sandwich_weight(down: &[DownEdge], mask: u64) -> LaurentQT {
    down.iter().enumerate().fold(LaurentQT::one(), |acc, (i, e)| {
        let (l, a) = (i32_of(e.leg + 1), i32_of(e.arm));
        if mask >> i & 1 == 1 {
            acc * -LaurentQT::one_minus(l, a)
        } else {
            acc * LaurentQT::one_minus(l, a + 1)
        }
    })
}

/// `J_{μ′}` as a sum of chromatic quasisymmetric functions over the
/// sandwich graphs `G_μ ⊆ H ⊆ G_μ⁺`, in the monomial basis.
pub fn j_chromatic(mu: &Partition) -> Result<SymFunc<LaurentQT>, Error> {
    let d = attacking_data(mu);
    let mut total = SymFunc::zero(mu.size(), Basis::Monomial);
    for (mask, h) in d.sandwich_graphs() {
        let weight = sandwich_weight(&d.down_edges, mask);
        total = total + x_g(&h, true)?.times(&weight);
    }
    let total = total.times(&chromatic_prefactor(mu));
    if let Some((lambda, c)) = total.terms().find(|(_, c)| c.has_negative_exponent()) {
        return Err(Error::IdentityViolated(format!(
            "Theorem identity violated: coefficient of m_{lambda} is {c}"
        )));
    }
    Ok(total)
}

/// Which weight a down-edge receives in an integral form tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauEdgeCase {
    LeftAdjacent,
    AboveAdjacent,
    AboveNonadjacent,
    Otherwise,
}

/// Which weight a down-edge receives in a block permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermutationEdgeCase {
    Descent,
    LrMax,
    Inversion,
    Otherwise,
}

/// Integral form tableaux of type `μ`: bijective fillings of any shape of
/// size `n` with increasing rows, horizontal neighbours not attacking, and
/// each entry smaller than the one below it joined to it in `G_μ⁺`.
pub fn ift_enumerate(mu: &Partition) -> Vec<Tableau> {
    let d = attacking_data(mu);
    ift_for(&d)
}

pub(crate) fn ift_for(d: &AttackingData) -> Vec<Tableau> {
    fillings_of_size(
        d.n(),
        |l, r| l < r && !d.g.has_edge(l, r),
        |above, below| above > below || d.g_plus.has_edge(above, below),
    )
}

/// True iff `t` satisfies the integral form tableau conditions for `d`.
pub fn is_ift(d: &AttackingData, t: &Tableau) -> bool {
    t.size() == d.n()
        && t.horizontal_pairs().all(|(l, r)| l < r && !d.g.has_edge(l, r))
        && t.vertical_pairs().all(|(a, b)| a > b || d.g_plus.has_edge(a, b))
}

pub fn tableau_edge_case(t: &Tableau, e: &DownEdge) -> TableauEdgeCase {
    if t.is_left_adjacent(e.upper, e.lower) {
        TableauEdgeCase::LeftAdjacent
    } else if t.is_above_adjacent(e.upper, e.lower) {
        TableauEdgeCase::AboveAdjacent
    } else if t.row_of(e.upper) > t.row_of(e.lower) {
        TableauEdgeCase::AboveNonadjacent
    } else {
        TableauEdgeCase::Otherwise
    }
}

/// The weight of an integral form tableau: `t^{inv_μ(T)}` times one factor
/// per down-edge.
pub fn wt_mu(d: &AttackingData, t: &Tableau) -> LaurentQT {
    let mut w = LaurentQT::qt(0, i32_of(inv_tableau(&d.g, t)));
    for e in &d.down_edges {
        let (l, a) = (i32_of(e.leg + 1), i32_of(e.arm));
        let factor = match tableau_edge_case(t, e) {
            TableauEdgeCase::LeftAdjacent => LaurentQT::qt(0, -a) * LaurentQT::one_minus(l, a + 1),
            TableauEdgeCase::AboveAdjacent => -(LaurentQT::qt(0, 1 - a) * LaurentQT::one_minus(l, a)),
            TableauEdgeCase::AboveNonadjacent => LaurentQT::qt(0, -a) * LaurentQT::one_minus(0, 1),
            TableauEdgeCase::Otherwise => LaurentQT::qt(l, 0) * LaurentQT::one_minus(0, 1),
        };
        w = w * factor;
    }
    w
}

/// `J_{μ′} = (1 - t)^{μ₁} Σ_T wt_μ(T) s_{shape(T)}`, in the Schur basis.
pub fn j_schur(mu: &Partition) -> SymFunc<LaurentQT> {
    let d = attacking_data(mu);
    let mut f = SymFunc::zero(mu.size(), Basis::Schur);
    for t in ift_for(&d) {
        f.add_term(t.shape(), wt_mu(&d, &t));
    }
    f.times(&one_minus_t_pow(mu.part(1)))
}

pub fn permutation_edge_case(g: &UGraph, sigma: &BlockPermutation, e: &DownEdge) -> PermutationEdgeCase {
    let pos = sigma.positions();
    let starts = sigma.block_starts();
    let (pu, pv) = (pos[e.upper], pos[e.lower]);
    let s = sigma.sigma();
    if pv + 1 == pu && starts[pu] == starts[pv] {
        PermutationEdgeCase::Descent
    } else if is_lr_max(g, &s[starts[pv]..pv], e.lower) {
        PermutationEdgeCase::LrMax
    } else if pv < pu {
        PermutationEdgeCase::Inversion
    } else {
        PermutationEdgeCase::Otherwise
    }
}

/// The weight of `σ ∈ N_λ(G_μ⁺)`: `t^{inv_{G_μ}(σ)}` times one factor per
/// down-edge.
pub fn wt_p(d: &AttackingData, sigma: &BlockPermutation) -> Result<LaurentQT, Error> {
    if !in_n_lambda(&d.g_plus, sigma) {
        return Err(Error::InvalidArgument(format!(
            "{sigma:?} has a descent or left-to-right maximum for G⁺ of {}",
            d.mu
        )));
    }
    let mut w = LaurentQT::qt(0, i32_of(inv_perm(&d.g, sigma.sigma())));
    for e in &d.down_edges {
        let (l, a) = (i32_of(e.leg + 1), i32_of(e.arm));
        let factor = match permutation_edge_case(&d.g, sigma, e) {
            PermutationEdgeCase::Descent => -(LaurentQT::t() * LaurentQT::one_minus(l, a)),
            PermutationEdgeCase::LrMax => -LaurentQT::one_minus(l, a),
            PermutationEdgeCase::Inversion => LaurentQT::one_minus(0, 1),
            PermutationEdgeCase::Otherwise => LaurentQT::qt(l, a) * LaurentQT::one_minus(0, 1),
        };
        w = w * factor;
    }
    Ok(w)
}

fn in_n_lambda(h: &UGraph, sigma: &BlockPermutation) -> bool {
    sigma.blocks().all(|block| {
        (1..block.len()).all(|i| {
            let (prev, v) = (block[i - 1], block[i]);
            !(prev > v && !h.has_edge(prev, v)) && !is_lr_max(h, &block[..i], v)
        })
    })
}

/// `J_{μ′}` in the power basis, from the sum over `N_λ(G_μ⁺)` of `wt_p`
/// (which gives `ωJ_{μ′}`) followed by `ω`.
pub fn j_power(mu: &Partition) -> Result<SymFunc<LaurentQT>, Error> {
    let d = attacking_data(mu);
    let n = mu.size();
    let mut omega_j = SymFunc::zero(n, Basis::Power);
    for lambda in partitions(n) {
        let mut sum = LaurentQT::zero();
        for sigma in n_lambda(&d.g_plus, &lambda) {
            sum = sum + wt_p(&d, &sigma)?;
        }
        omega_j.add_term(&lambda, sum.scale(&Rat::new(1, z_of(&lambda) as i64)));
    }
    omega_j.times(&chromatic_prefactor(mu)).omega()
}

/// The four computations of `J_{μ′}`, all brought to the monomial basis.
#[derive(Clone, Debug)]
pub struct FourWay {
    pub hhl: SymFunc<LaurentQT>,
    pub chromatic: SymFunc<LaurentQT>,
    pub schur: SymFunc<LaurentQT>,
    pub power: SymFunc<LaurentQT>,
}

pub fn four_way(mu: &Partition) -> Result<FourWay, Error> {
    Ok(FourWay {
        hhl: j_hhl(mu),
        chromatic: j_chromatic(mu)?,
        schur: j_schur(mu).convert(Basis::Monomial)?,
        power: j_power(mu)?.convert(Basis::Monomial)?,
    })
}
