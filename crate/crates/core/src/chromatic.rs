//! Chromatic quasisymmetric functions `X_H(x;t)` of graphs, their Schur and
//! power-sum expansions, and LLT polynomials of graphs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;

use crate::algebra::{Coefficient, LaurentQT, Rat, RatFunQT};
use crate::error::Error;
use crate::graphs::{is_claw_free, Colorings, UGraph};
use crate::shapes::{partitions, Partition};
use crate::symfunc::{z_of, Basis, SymFunc};
use crate::tableau::{fillings_of_size, Tableau};

/// Largest vertex count for the packed colour-content keys.
const MAX_CENSUS_VERTICES: usize = 15;

/// Ascent distributions of colorings with palette `n`, grouped by the sorted
/// content: entry `a` of the vector for `λ` counts colorings of content `λ`
/// with `a` ascents. Ungraded censuses put every coloring at `a = 0`.
fn census(
    h: &UGraph,
    proper: bool,
    graded: bool,
    what: &str,
) -> Result<BTreeMap<Partition, Vec<u64>>, Error> {
    let n = h.n();
    if n > MAX_CENSUS_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "coloring census supports at most {MAX_CENSUS_VERTICES} vertices"
        )));
    }
    let mut out = BTreeMap::new();
    if n == 0 {
        out.insert(Partition::empty(), vec![1]);
        return Ok(out);
    }
    let mut by_key: HashMap<u64, Vec<u64>> = HashMap::new();
    let mut it = Colorings::new(h, n, proper);
    while let Some((colors, asc)) = it.next_ref() {
        let key = colors.iter().fold(0u64, |k, &c| k + (1 << (4 * (c as u32 - 1))));
        let asc = if graded { asc } else { 0 };
        let slot = by_key.entry(key).or_default();
        if slot.len() <= asc {
            slot.resize(asc + 1, 0);
        }
        slot[asc] += 1;
    }

    // Symmetry audit: all rearrangements of a content must be present and
    // carry the same ascent distribution.
    let mut seen: BTreeMap<Partition, (Vec<u64>, u64)> = BTreeMap::new();
    for (key, dist) in by_key {
        let content: Vec<usize> = (0..n).map(|c| (key >> (4 * c) & 0xf) as usize).collect();
        let lambda = Partition::from_unsorted(content.into_iter().filter(|&m| m > 0).collect());
        match seen.get_mut(&lambda) {
            Some((d, count)) => {
                if *d != dist {
                    return Err(Error::IdentityViolated(format!(
                        "{what} not symmetric: content type {lambda} has differing coefficients"
                    )));
                }
                *count += 1;
            }
            None => {
                seen.insert(lambda, (dist, 1));
            }
        }
    }
    for (lambda, (dist, count)) in seen {
        let expected = rearrangements(&lambda, n);
        if count != expected {
            return Err(Error::IdentityViolated(format!(
                "{what} not symmetric: content type {lambda} seen in {count} of {expected} arrangements"
            )));
        }
        out.insert(lambda, dist);
    }
    Ok(out)
}

/// Distinct orderings of `lambda` padded with zeros to length `n`.
fn rearrangements(lambda: &Partition, n: usize) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    let mut denom = fact(n - lambda.len());
    for &m in lambda.multiplicities().iter().skip(1) {
        denom *= fact(m);
    }
    fact(n) / denom
}

fn t_poly(dist: &[u64]) -> LaurentQT {
    LaurentQT::from_terms(
        dist.iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(a, &c)| ((0, a as i32), Rat::from_int(c as i64))),
    )
}

fn census_to_symfunc(n: usize, census: &BTreeMap<Partition, Vec<u64>>, with_t: bool) -> SymFunc<LaurentQT> {
    let mut f = SymFunc::zero(n, Basis::Monomial);
    for (lambda, dist) in census {
        let c = if with_t {
            t_poly(dist)
        } else {
            LaurentQT::constant(dist.iter().sum::<u64>() as i64)
        };
        f.add_term(lambda, c);
    }
    f
}

/// `X_H(x;t) = Σ_κ x^κ t^{asc(κ)}` over proper colorings, in the monomial
/// basis. With `with_t = false` every ascent weight is 1, giving Stanley's
/// `X_H(x)`.
pub fn x_g(h: &UGraph, with_t: bool) -> Result<SymFunc<LaurentQT>, Error> {
    Ok(census_to_symfunc(h.n(), &census(h, true, with_t, "X_H")?, with_t))
}

/// Stanley's chromatic symmetric function `X_H(x)` over any coefficient ring.
pub fn x_g_plain<C: Coefficient>(h: &UGraph) -> Result<SymFunc<C>, Error> {
    let census = census(h, true, false, "X_H")?;
    let mut f = SymFunc::zero(h.n(), Basis::Monomial);
    for (lambda, dist) in &census {
        f.add_term(lambda, C::from_int(dist.iter().sum::<u64>() as i64));
    }
    Ok(f)
}

/// `LLT_H(x;t)`: the same generating function over all colorings, proper
/// or not.
pub fn llt_g(h: &UGraph) -> Result<SymFunc<LaurentQT>, Error> {
    Ok(census_to_symfunc(h.n(), &census(h, false, true, "LLT_H")?, true))
}

/// Tableaux of size `n` whose rows increase, whose horizontal neighbours
/// are non-edges, and in which every entry above another is larger or
/// adjacent to it in `h`.
pub fn g_tableaux(h: &UGraph) -> Vec<Tableau> {
    fillings_of_size(
        h.n(),
        |l, r| l < r && !h.has_edge(l, r),
        |above, below| above > below || h.has_edge(above, below),
    )
}

/// Edges `{u<v}` of `h` with `u` in a row strictly above the row of `v`.
pub fn inv_tableau(h: &UGraph, t: &Tableau) -> usize {
    h.edges().iter().filter(|&&(u, v)| t.row_of(u) > t.row_of(v)).count()
}

/// `X_H(x;t) = Σ_T t^{inv_H(T)} s_{shape(T)}` over G-tableaux; needs `h`
/// claw-free.
pub fn x_g_schur(h: &UGraph) -> Result<SymFunc<LaurentQT>, Error> {
    if !is_claw_free(h) {
        return Err(Error::InvalidArgument(format!("graph {h} contains a claw")));
    }
    let mut f = SymFunc::zero(h.n(), Basis::Schur);
    for t in g_tableaux(h) {
        f.add_term(t.shape(), LaurentQT::qt(0, inv_tableau(h, &t) as i32));
    }
    Ok(f)
}

/// A permutation in one-line notation cut into consecutive blocks whose
/// lengths are the parts of `lambda`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BlockPermutation {
    lambda: Partition,
    sigma: Vec<usize>,
}

impl BlockPermutation {
    pub fn new(lambda: Partition, sigma: Vec<usize>) -> Result<Self, Error> {
        let n = sigma.len();
        let mut seen = vec![false; n + 1];
        for &s in &sigma {
            if s == 0 || s > n || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidArgument(format!("{sigma:?} is not a permutation")));
            }
        }
        if lambda.size() != n {
            return Err(Error::InvalidArgument(format!("block sizes {lambda} do not sum to {n}")));
        }
        Ok(BlockPermutation { lambda, sigma })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[usize]> {
        let mut rest = self.sigma.as_slice();
        self.lambda.parts().iter().map(move |&len| {
            let (head, tail) = rest.split_at(len);
            rest = tail;
            head
        })
    }

    /// For each position, the index where its block starts.
    pub fn block_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.sigma.len());
        let mut at = 0;
        for &len in self.lambda.parts() {
            starts.extend(std::iter::repeat(at).take(len));
            at += len;
        }
        starts
    }

    /// 0-based position of each value: `positions()[v]`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.sigma.len() + 1];
        for (i, &s) in self.sigma.iter().enumerate() {
            pos[s] = i;
        }
        pos
    }
}

impl fmt::Debug for BlockPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

/// Permutations built left to right, where `accept(prefix, new)` sees the
/// entries already placed in the current block.
fn block_permutations(
    lambda: &Partition,
    accept: impl Fn(&[usize], usize) -> bool,
) -> Vec<BlockPermutation> {
    let n = lambda.size();
    let mut starts = Vec::with_capacity(n);
    let mut at = 0;
    for &len in lambda.parts() {
        starts.extend(std::iter::repeat(at).take(len));
        at += len;
    }
    let mut sigma = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        n: usize,
        starts: &[usize],
        lambda: &Partition,
        accept: &dyn Fn(&[usize], usize) -> bool,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<BlockPermutation>,
    ) {
        let i = sigma.len();
        if i == n {
            out.push(BlockPermutation { lambda: lambda.clone(), sigma: sigma.clone() });
            return;
        }
        for v in 1..=n {
            if used[v] || !accept(&sigma[starts[i]..], v) {
                continue;
            }
            used[v] = true;
            sigma.push(v);
            go(n, starts, lambda, accept, sigma, used, out);
            sigma.pop();
            used[v] = false;
        }
    }

    go(n, &starts, lambda, &accept, &mut sigma, &mut used, &mut out);
    out
}

/// A new in-block entry `v` after `prefix` is a nontrivial left-to-right
/// `h`-maximum: it exceeds every earlier entry of its block and is adjacent
/// to none of them.
pub(crate) fn is_lr_max(h: &UGraph, prefix: &[usize], v: usize) -> bool {
    !prefix.is_empty() && prefix.iter().all(|&a| a < v && !h.has_edge(a, v))
}

/// Block permutations with no `h`-descent (`σ_i > σ_{i+1}` in one block and
/// not an edge) and no nontrivial left-to-right `h`-maximum.
pub fn n_lambda(h: &UGraph, lambda: &Partition) -> Vec<BlockPermutation> {
    block_permutations(lambda, |prefix, v| {
        let descent = prefix.last().is_some_and(|&a| a > v && !h.has_edge(a, v));
        !descent && !is_lr_max(h, prefix, v)
    })
}

/// Block permutations whose blocks start with their minimum and whose
/// in-block rises `σ_i < σ_{i+1}` are all edges of `h`.
pub fn n_lambda_tilde(h: &UGraph, lambda: &Partition) -> Vec<BlockPermutation> {
    block_permutations(lambda, |prefix, v| match (prefix.first(), prefix.last()) {
        (Some(&first), Some(&last)) => v > first && (last > v || h.has_edge(last, v)),
        _ => true,
    })
}

/// Pairs `i < j` with `σ_i > σ_j` and `{σ_j, σ_i}` an edge of `h`.
pub fn inv_perm(h: &UGraph, sigma: &[usize]) -> usize {
    let mut count = 0;
    for (i, &a) in sigma.iter().enumerate() {
        for &b in &sigma[i + 1..] {
            if a > b && h.has_edge(a, b) {
                count += 1;
            }
        }
    }
    count
}

fn inv_generating(h: &UGraph, perms: &[BlockPermutation]) -> LaurentQT {
    let mut dist: Vec<u64> = Vec::new();
    for s in perms {
        let a = inv_perm(h, &s.sigma);
        if dist.len() <= a {
            dist.resize(a + 1, 0);
        }
        dist[a] += 1;
    }
    t_poly(&dist)
}

/// `Σ_{σ ∈ N_λ(h)} t^{inv_h(σ)}`.
pub fn n_lambda_inv_sum(h: &UGraph, lambda: &Partition) -> LaurentQT {
    inv_generating(h, &n_lambda(h, lambda))
}

/// `ωX_H(x;t) = Σ_λ (p_λ / z_λ) Σ_{σ ∈ N_λ(H)} t^{inv_H(σ)}` in the power
/// basis. Apply `omega` to compare with `X_H` itself.
pub fn x_g_power(h: &UGraph) -> SymFunc<LaurentQT> {
    let n = h.n();
    let mut f = SymFunc::zero(n, Basis::Power);
    for lambda in partitions(n) {
        let sum = n_lambda_inv_sum(h, &lambda);
        f.add_term(&lambda, sum.scale(&Rat::new(1, z_of(&lambda) as i64)));
    }
    f
}

fn t_minus_one_pow(k: usize) -> LaurentQT {
    let base = LaurentQT::t() - LaurentQT::one();
    (0..k).fold(LaurentQT::one(), |acc, _| acc * base.clone())
}

/// `ωLLT_H = Σ_λ ((t-1)^{n-ℓ(λ)} p_λ / z_λ) Σ_{σ ∈ Ñ_λ(H)} t^{inv_H(σ)}`.
pub fn llt_power_tilde(h: &UGraph) -> SymFunc<RatFunQT> {
    let n = h.n();
    let mut f = SymFunc::zero(n, Basis::Power);
    for lambda in partitions(n) {
        let sum = inv_generating(h, &n_lambda_tilde(h, &lambda));
        let c = (t_minus_one_pow(n - lambda.len()) * sum).scale(&Rat::new(1, z_of(&lambda) as i64));
        f.add_term(&lambda, RatFunQT::from(c));
    }
    f
}

/// `ωLLT_H = (t-1)^n Σ_λ p_λ / (Π_i (t^{λ_i} - 1) z_λ) Σ_{N_λ(H)} t^{inv}`:
/// the power-sum formula for `ωX_H` pushed through `p_k ↦ p_k / (t^k - 1)`.
pub fn llt_power_plethysm(h: &UGraph) -> Result<SymFunc<RatFunQT>, Error> {
    let n = h.n();
    let omega_x = x_g_power(h);
    let mut f = SymFunc::zero(n, Basis::Power);
    for (lambda, c) in omega_x.terms() {
        let denom = lambda
            .parts()
            .iter()
            .fold(LaurentQT::one(), |acc, &k| acc * (LaurentQT::qt(0, k as i32) - LaurentQT::one()));
        f.add_term(lambda, RatFunQT::new(t_minus_one_pow(n) * c.clone(), denom)?);
    }
    Ok(f)
}

/// `ωLLT_H = Σ_λ (t-1)^{n-ℓ(λ)} p_λ / ([λ_1]_t [λ_2]_t ... z_λ) Σ_{N_λ(H)} t^{inv}`.
pub fn llt_power_divided(h: &UGraph) -> Result<SymFunc<RatFunQT>, Error> {
    let n = h.n();
    let mut f = SymFunc::zero(n, Basis::Power);
    for lambda in partitions(n) {
        let sum = n_lambda_inv_sum(h, &lambda);
        let numer = (t_minus_one_pow(n - lambda.len()) * sum).scale(&Rat::new(1, z_of(&lambda) as i64));
        f.add_term(&lambda, RatFunQT::new(numer, t_integer_product(&lambda))?);
    }
    Ok(f)
}

/// `[λ_1]_t [λ_2]_t ...`.
pub fn t_integer_product(lambda: &Partition) -> LaurentQT {
    lambda.parts().iter().fold(LaurentQT::one(), |acc, &k| acc * LaurentQT::t_integer(k as u32))
}

/// Checks that `Π [λ_i]_t` divides `Σ_{N_λ(h)} t^{inv}` exactly for every
/// `λ ⊢ n`, returning the first `λ` where it does not.
pub fn first_indivisible(h: &UGraph) -> Option<Partition> {
    partitions(h.n())
        .into_iter()
        .find(|lambda| n_lambda_inv_sum(h, lambda).exact_div(&t_integer_product(lambda)).is_err())
}

/// Outcome of comparing the three power-sum forms of `ωLLT_H` with the
/// direct expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct PlethysmCheck {
    pub plethysm: bool,
    pub divided: bool,
    pub tilde: bool,
}

impl PlethysmCheck {
    pub fn all(&self) -> bool {
        self.plethysm && self.divided && self.tilde
    }
}

/// `ω` of the direct `LLT_H`, in the power basis over `RatFunQT`.
pub fn llt_power_direct(h: &UGraph) -> Result<SymFunc<RatFunQT>, Error> {
    let direct = llt_g(h)?.convert(Basis::Power)?.omega()?;
    Ok(direct.map_coeffs(|c| RatFunQT::from(c.clone())))
}

pub fn check_plethysm(h: &UGraph) -> Result<PlethysmCheck, Error> {
    let direct = llt_power_direct(h)?;
    Ok(PlethysmCheck {
        plethysm: llt_power_plethysm(h)? == direct,
        divided: llt_power_divided(h)? == direct,
        tilde: llt_power_tilde(h) == direct,
    })
}

/// True iff all three power-sum forms of `ωLLT_H` agree with the direct
/// computation.
pub fn verify_plethysm(h: &UGraph) -> Result<bool, Error> {
    Ok(check_plethysm(h)?.all())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{attacking_data, proper_colorings};
    use num_traits::Zero;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentQT {
        s.parse().unwrap()
    }

    fn edge() -> UGraph {
        UGraph::new(2, [(1, 2)]).unwrap()
    }

    #[test]
    fn x_small() {
        let f = x_g(&UGraph::empty(2), true).unwrap();
        assert_eq!(f.coeff(&p("2")), lp("1"));
        assert_eq!(f.coeff(&p("1,1")), lp("2"));
        let f = x_g(&edge(), true).unwrap();
        assert_eq!(f.coeff(&p("2")), LaurentQT::zero());
        assert_eq!(f.coeff(&p("1,1")), lp("1 + t"));
        let f = x_g(&edge(), false).unwrap();
        assert_eq!(f.coeff(&p("1,1")), lp("2"));
    }

    #[test]
    fn asymmetric_graph_is_reported() {
        // The path 1-3-2 is not the incomparability graph of a natural unit
        // interval order, and its ascent refinement is not symmetric.
        let h = UGraph::new(3, [(1, 3), (2, 3)]).unwrap();
        let err = x_g(&h, true).unwrap_err();
        assert!(err.to_string().contains("X_H not symmetric"), "{err}");
        assert!(x_g(&h, false).is_ok());
    }

    #[test]
    fn llt_small() {
        let f = llt_g(&edge()).unwrap();
        assert_eq!(f.coeff(&p("2")), lp("1"));
        assert_eq!(f.coeff(&p("1,1")), lp("1 + t"));
        let f = llt_g(&UGraph::empty(2)).unwrap();
        assert_eq!(f.coeff(&p("1,1")), lp("2"));
    }

    #[test]
    fn n_lambda_on_two_vertices() {
        assert!(n_lambda(&UGraph::empty(2), &p("2")).is_empty());
        let both: Vec<Vec<usize>> =
            n_lambda(&edge(), &p("2")).iter().map(|s| s.sigma().to_vec()).collect();
        assert_eq!(both, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(n_lambda(&UGraph::empty(3), &p("1,1,1")).len(), 6);
    }

    #[test]
    fn power_expansion_small() {
        let f = x_g_power(&UGraph::empty(2));
        assert_eq!(f.coeff(&p("1,1")), lp("1"));
        assert_eq!(f.coeff(&p("2")), LaurentQT::zero());
        let direct = x_g(&edge(), true).unwrap().convert(Basis::Power).unwrap();
        assert_eq!(x_g_power(&edge()).omega().unwrap(), direct);
    }

    #[test]
    fn schur_expansion_small() {
        let f = x_g_schur(&edge()).unwrap();
        assert_eq!(f, x_g(&edge(), true).unwrap().convert(Basis::Schur).unwrap());
        assert_eq!(f.coeff(&p("1,1")), lp("1 + t"));
        let claw = UGraph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(x_g_schur(&claw).is_err());
    }

    #[test]
    fn chromatic_polynomial_count() {
        // G_(3,2) is the path 1-2-3 glued to the triangle 3,4,5, with
        // chromatic polynomial k(k-1)^3(k-2).
        let d = attacking_data(&p("3,2"));
        let count = proper_colorings(&d.g, 5).count();
        assert_eq!(count, 5 * 4 * 4 * 4 * 3);
    }

    #[test]
    fn plethysm_small() {
        assert!(verify_plethysm(&UGraph::empty(2)).unwrap());
        assert!(verify_plethysm(&edge()).unwrap());
        let d = attacking_data(&p("2,1"));
        assert!(verify_plethysm(&d.g).unwrap());
        assert!(verify_plethysm(&d.g_plus).unwrap());
    }

    #[test]
    fn block_helpers() {
        let s = BlockPermutation::new(p("2,1"), vec![3, 1, 2]).unwrap();
        assert_eq!(s.blocks().collect::<Vec<_>>(), vec![&[3, 1][..], &[2][..]]);
        assert_eq!(s.block_starts(), vec![0, 0, 2]);
        assert_eq!(s.positions()[2], 2);
        assert_eq!(format!("{s:?}"), "31|2");
        assert!(BlockPermutation::new(p("2"), vec![1, 1]).is_err());
    }
}
