//! Integral-form Jack polynomials `J^{(α)}_{μ′}`, computed four ways from
//! the diagram of `μ`.

use num_traits::{One, Zero};

use crate::algebra::AlphaPoly;
use crate::chromatic::x_g_plain;
use crate::error::Error;
use crate::graphs::{attacking_data, component_partition, AttackingData, UGraph};
use crate::macdonald::{equal_mask, grouped_fillings, ift_for};
use crate::shapes::{partitions, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::tableau::Tableau;

/// `α(leg(u) + 1) + arm(u)` for the cell labelled `u`.
pub fn hook_alpha(d: &AttackingData, u: usize) -> AlphaPoly {
    AlphaPoly::linear((d.diagram.leg(u) + 1) as i64, d.diagram.arm(u) as i64)
}

fn hooks(d: &AttackingData) -> Vec<AlphaPoly> {
    d.down_edges.iter().map(|e| hook_alpha(d, e.upper)).collect()
}

/// Knop–Sahi: sum over non-attacking fillings of `x^σ` times `1 + hook(u)`
/// for each cell equal to the cell below it.
pub fn jack_knop_sahi(mu: &Partition) -> SymFunc<AlphaPoly> {
    let d = attacking_data(mu);
    let hooks = hooks(&d);
    let mut f = SymFunc::zero(mu.size(), Basis::Monomial);
    for lambda in partitions(mu.size()) {
        let groups = grouped_fillings(&d, &lambda, |values, _| equal_mask(&d, values));
        let mut coeff = AlphaPoly::zero();
        for (eq, count) in groups {
            let w = hooks
                .iter()
                .enumerate()
                .filter(|(i, _)| eq >> i & 1 == 1)
                .fold(AlphaPoly::constant(count as i64), |acc, (_, h)| acc * (AlphaPoly::one() + h.clone()));
            coeff = coeff + w;
        }
        f.add_term(&lambda, coeff);
    }
    f
}

/// Sum over sandwich graphs of `X_H(x)` times `-hook(u)` for each down-edge
/// in `H` and `1 + hook(u)` for each down-edge outside `H`.
pub fn jack_chromatic(mu: &Partition) -> Result<SymFunc<AlphaPoly>, Error> {
    let d = attacking_data(mu);
    let hooks = hooks(&d);
    let mut total = SymFunc::zero(mu.size(), Basis::Monomial);
    for (mask, h) in d.sandwich_graphs() {
        let weight = hooks.iter().enumerate().fold(AlphaPoly::one(), |acc, (i, hk)| {
            if mask >> i & 1 == 1 {
                acc * -hk.clone()
            } else {
                acc * (AlphaPoly::one() + hk.clone())
            }
        });
        total = total + x_g_plain::<AlphaPoly>(&h)?.times(&weight);
    }
    Ok(total)
}

/// Product over down-edges `{u, v}`: `1 + hook(u)` if `u` sits immediately
/// left of `v`, `-hook(u)` if `u` sits immediately above `v`, 1 otherwise.
pub fn wt_alpha(d: &AttackingData, t: &Tableau) -> AlphaPoly {
    d.down_edges.iter().fold(AlphaPoly::one(), |acc, e| {
        if t.is_left_adjacent(e.upper, e.lower) {
            acc * (AlphaPoly::one() + hook_alpha(d, e.upper))
        } else if t.is_above_adjacent(e.upper, e.lower) {
            acc * -hook_alpha(d, e.upper)
        } else {
            acc
        }
    })
}

/// `Σ_T wt_α(T) s_{shape(T)}` over integral form tableaux of type `μ`.
pub fn jack_schur(mu: &Partition) -> SymFunc<AlphaPoly> {
    let d = attacking_data(mu);
    let mut f = SymFunc::zero(mu.size(), Basis::Schur);
    for t in ift_for(&d) {
        f.add_term(t.shape(), wt_alpha(&d, &t));
    }
    f
}

/// How the sign of a subset term is computed in [`jack_power_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetSign {
    /// `(-1)^{|H ∩ G_μ|}` with `+hook` on each down-edge of `H`.
    AttackingEdges,
    /// `(-1)^{|H|}` with `-hook` on each down-edge of `H`.
    AllEdges,
}

/// Sum over every edge subset `H ⊆ G_μ⁺` of a signed `p_{λ(H)}`, where
/// `λ(H)` lists the component sizes of `H`.
pub fn jack_power_with(mu: &Partition, sign: SubsetSign) -> SymFunc<AlphaPoly> {
    let d = attacking_data(mu);
    let n = mu.size();
    let edges = d.g_plus.edges();
    let hook_of_edge: Vec<Option<AlphaPoly>> = edges
        .iter()
        .map(|&(u, v)| (!d.g.has_edge(u, v)).then(|| hook_alpha(&d, u)))
        .collect();
    let mut f = SymFunc::zero(n, Basis::Power);
    for mask in 0u64..1 << edges.len() {
        let chosen = (0..edges.len()).filter(|i| mask >> i & 1 == 1);
        let h = UGraph::new(n, chosen.clone().map(|i| edges[i])).expect("edges of G⁺");
        let mut w = AlphaPoly::one();
        let mut negative = false;
        for i in chosen {
            match (&hook_of_edge[i], sign) {
                (Some(hk), SubsetSign::AttackingEdges) => w = w * hk.clone(),
                (Some(hk), SubsetSign::AllEdges) => {
                    w = w * -hk.clone();
                    negative = !negative;
                }
                (None, _) => negative = !negative,
            }
        }
        f.add_term(&component_partition(&h), if negative { -w } else { w });
    }
    f
}

pub fn jack_power(mu: &Partition) -> SymFunc<AlphaPoly> {
    jack_power_with(mu, SubsetSign::AttackingEdges)
}

/// The four computations of `J^{(α)}_{μ′}`, all in the monomial basis.
#[derive(Clone, Debug)]
pub struct JackFourWay {
    pub knop_sahi: SymFunc<AlphaPoly>,
    pub chromatic: SymFunc<AlphaPoly>,
    pub schur: SymFunc<AlphaPoly>,
    pub power: SymFunc<AlphaPoly>,
}

pub fn jack_four_way(mu: &Partition) -> Result<JackFourWay, Error> {
    Ok(JackFourWay {
        knop_sahi: jack_knop_sahi(mu),
        chromatic: jack_chromatic(mu)?,
        schur: jack_schur(mu).convert(Basis::Monomial)?,
        power: jack_power(mu).convert(Basis::Monomial)?,
    })
}

/// At `α = 1` the Schur expansion of `J^{(α)}_{μ′}` must be supported on
/// `μ′` alone; returns the offending index otherwise.
pub fn alpha_one_support(mu: &Partition) -> Result<Option<Partition>, Error> {
    let one = crate::algebra::Rat::from_int(1);
    let s = jack_knop_sahi(mu).convert(Basis::Schur)?;
    let conj = mu.conjugate();
    let offender = s
        .terms()
        .find(|(lambda, c)| **lambda != conj && !c.eval(&one).is_zero())
        .map(|(lambda, _)| lambda.clone());
    Ok(offender)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ap(s: &str) -> AlphaPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        let j = jack_knop_sahi(&p("1"));
        assert_eq!(j.coeff(&p("1")), ap("1"));
        let j = jack_knop_sahi(&p("1,1"));
        assert_eq!(j.coeff(&p("2")), ap("1 + α"));
        assert_eq!(j.coeff(&p("1,1")), ap("2"));
        assert_eq!(jack_power(&p("1")).coeff(&p("1")), ap("1"));
    }

    #[test]
    fn hooks_of_small_shapes() {
        let d = attacking_data(&p("3,2"));
        assert_eq!(hook_alpha(&d, 1), ap("1 + α"));
        assert_eq!(hook_alpha(&d, 2), ap("α"));
        let d = attacking_data(&p("2,1,1"));
        assert_eq!(hook_alpha(&d, 1), ap("α"));
        assert_eq!(hook_alpha(&d, 2), ap("2*α"));
    }

    #[test]
    fn displayed_values() {
        let mu = p("2,1,1");
        assert_eq!(jack_knop_sahi(&mu).convert(Basis::Schur).unwrap().coeff(&p("2,2")), ap("2 - 2*α^2"));
        assert_eq!(jack_schur(&mu).coeff(&p("2,2")), ap("2 - 2*α^2"));
        assert_eq!(jack_power(&mu).coeff(&p("2,2")), ap("-α"));
        let d = attacking_data(&p("2,2,2"));
        let t = Tableau::from_rows(vec![vec![1, 4, 6], vec![3, 5], vec![2]]).unwrap();
        // 3|5 and 4|6 are the left-adjacent down-edges: (1 + hook(3))(1 + hook(4)).
        assert_eq!(hook_alpha(&d, 3), ap("1 + 2*α"));
        assert_eq!(wt_alpha(&d, &t), ap("2 + 6*α + 4*α^2"));
    }

    #[test]
    fn four_tableau_weights() {
        let d = attacking_data(&p("2,1,1"));
        let shape = p("2,2");
        let weights: Vec<AlphaPoly> =
            ift_for(&d).iter().filter(|t| t.shape() == &shape).map(|t| wt_alpha(&d, t)).collect();
        // 1, 1 + hook(2), -hook(1)(1 + hook(2)), -hook(1) with hook(1) = α, hook(2) = 2α.
        for w in ["1", "1 + 2*α", "-α - 2*α^2", "-α"] {
            assert!(weights.contains(&ap(w)), "missing {w}");
        }
    }

    #[test]
    fn four_way_small() {
        for n in 1..=4 {
            for mu in partitions(n) {
                let fw = jack_four_way(&mu).unwrap();
                assert_eq!(fw.chromatic, fw.knop_sahi, "{mu}");
                assert_eq!(fw.schur, fw.knop_sahi, "{mu}");
                assert_eq!(fw.power, fw.knop_sahi, "{mu}");
                assert_eq!(alpha_one_support(&mu).unwrap(), None);
                assert_eq!(jack_power_with(&mu, SubsetSign::AllEdges), jack_power(&mu));
            }
        }
    }
}
