//! Brute-force oracles checked against the library's enumerators.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use macchroma::chromatic::{n_lambda, n_lambda_tilde, x_g};
use macchroma::graphs::{attacking_data, UGraph};
use macchroma::macdonald::ift_enumerate;
use macchroma::shapes::{partitions, partitions_up_to};
use macchroma::symfunc::kostka;
use macchroma::{LaurentQT, Partition, Rat};
use num_traits::Zero;
use proptest::prelude::*;

fn sandwich_graphs(max_n: usize) -> Vec<(Partition, UGraph)> {
    partitions_up_to(max_n)
        .into_iter()
        .filter(|mu| mu.size() > 0)
        .flat_map(|mu| {
            let d = attacking_data(&mu);
            d.sandwich_graphs().map(move |(_, h)| (mu.clone(), h)).collect::<Vec<_>>()
        })
        .collect()
}

fn chromatic_polynomial(h: &UGraph, k: i64) -> i64 {
    match h.edges().first() {
        None => k.pow(h.n() as u32),
        Some(&(a, b)) => {
            let deleted = UGraph::new(h.n(), h.edges().iter().copied().filter(|&e| e != (a, b))).unwrap();
            // Contract b into a, then relabel to 1..n-1.
            let relabel = |v: usize| if v == b { a } else { v };
            let shift = |v: usize| if v > b { v - 1 } else { v };
            let contracted: BTreeSet<(usize, usize)> = h
                .edges()
                .iter()
                .map(|&(u, v)| (shift(relabel(u)), shift(relabel(v))))
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            let contracted = UGraph::new(h.n() - 1, contracted).unwrap();
            chromatic_polynomial(&deleted, k) - chromatic_polynomial(&contracted, k)
        }
    }
}

/// `m_λ(1^k)`: the number of distinct rearrangements of `λ` padded to `k` entries.
fn monomial_at_ones(lambda: &Partition, k: i64) -> i64 {
    let l = lambda.len() as i64;
    if l > k {
        return 0;
    }
    let falling: i64 = (k - l + 1..=k).product();
    let repeats: i64 =
        lambda.parts().iter().counts().values().map(|&m| (1..=m as i64).product::<i64>()).product();
    falling / repeats
}

#[test]
fn specialization_gives_chromatic_polynomial() {
    for (mu, h) in sandwich_graphs(5) {
        let x = x_g(&h, false).unwrap();
        for k in 1..=6 {
            let total = x.terms().fold(Rat::zero(), |acc, (lambda, c)| {
                acc + c.coeff(0, 0) * Rat::from_int(monomial_at_ones(lambda, k))
            });
            assert_eq!(total, Rat::from_int(chromatic_polynomial(&h, k)), "μ = {mu}, H = {h}, k = {k}");
        }
    }
}

proptest! {
    #[test]
    fn random_graphs_give_chromatic_polynomial(
        edges in (1usize..=5).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
            (Just(n), prop::sample::subsequence(pairs.clone(), 0..=pairs.len()))
        })
    ) {
        let h = UGraph::new(edges.0, edges.1).unwrap();
        let x = x_g(&h, false).unwrap();
        for k in 1..=5 {
            let total = x.terms().fold(Rat::zero(), |acc, (lambda, c)| {
                acc + c.coeff(0, 0) * Rat::from_int(monomial_at_ones(lambda, k))
            });
            prop_assert_eq!(total, Rat::from_int(chromatic_polynomial(&h, k)));
        }
    }
}

/// Coefficient of `x^λ` read directly from all colorings with `ℓ(λ)` colours.
#[test]
fn monomial_coefficients_from_all_colourings() {
    for (mu, h) in sandwich_graphs(5) {
        let n = h.n();
        let x = x_g(&h, true).unwrap();
        for lambda in partitions(n) {
            let l = lambda.len();
            let mut dist: BTreeMap<i32, i64> = BTreeMap::new();
            for colours in (0..n).map(|_| 0..l).multi_cartesian_product() {
                let content: Vec<usize> = (0..l).map(|c| colours.iter().filter(|&&x| x == c).count()).collect();
                if content != lambda.parts() {
                    continue;
                }
                let proper = h.edges().iter().all(|&(a, b)| colours[a - 1] != colours[b - 1]);
                if proper {
                    let asc = h.edges().iter().filter(|&&(a, b)| colours[a - 1] < colours[b - 1]).count();
                    *dist.entry(asc as i32).or_default() += 1;
                }
            }
            let expected =
                LaurentQT::from_terms(dist.into_iter().map(|(a, c)| ((0, a), Rat::from_int(c))));
            assert_eq!(x.coeff(&lambda), expected, "μ = {mu}, H = {h}, m_{lambda}");
        }
    }
}

fn blocks<'a>(sigma: &'a [usize], lambda: &Partition) -> Vec<&'a [usize]> {
    let mut out = Vec::new();
    let mut start = 0;
    for &part in lambda.parts() {
        out.push(&sigma[start..start + part]);
        start += part;
    }
    out
}

fn in_n_lambda(h: &UGraph, sigma: &[usize], lambda: &Partition) -> bool {
    blocks(sigma, lambda).iter().all(|b| {
        let no_descent = b.windows(2).all(|w| w[0] < w[1] || h.has_edge(w[0], w[1]));
        let no_lr_max = (1..b.len()).all(|j| !b[..j].iter().all(|&a| a < b[j] && !h.has_edge(a, b[j])));
        no_descent && no_lr_max
    })
}

fn in_n_lambda_tilde(h: &UGraph, sigma: &[usize], lambda: &Partition) -> bool {
    blocks(sigma, lambda).iter().all(|b| {
        b.iter().all(|&v| v >= b[0]) && b.windows(2).all(|w| w[0] > w[1] || h.has_edge(w[0], w[1]))
    })
}

#[test]
fn block_permutation_filters() {
    for (mu, h) in sandwich_graphs(5) {
        let n = h.n();
        for lambda in partitions(n) {
            let brute: BTreeSet<Vec<usize>> =
                (1..=n).permutations(n).filter(|s| in_n_lambda(&h, s, &lambda)).collect();
            let fast: BTreeSet<Vec<usize>> = n_lambda(&h, &lambda).iter().map(|s| s.sigma().to_vec()).collect();
            assert_eq!(fast, brute, "N_λ, μ = {mu}, H = {h}, λ = {lambda}");

            let brute: BTreeSet<Vec<usize>> =
                (1..=n).permutations(n).filter(|s| in_n_lambda_tilde(&h, s, &lambda)).collect();
            let fast: BTreeSet<Vec<usize>> =
                n_lambda_tilde(&h, &lambda).iter().map(|s| s.sigma().to_vec()).collect();
            assert_eq!(fast, brute, "Ñ_λ, μ = {mu}, H = {h}, λ = {lambda}");
        }
    }
}

/// Places `word` into `shape` row by row, bottom row first.
fn rows_of(shape: &Partition, word: &[usize]) -> Vec<Vec<usize>> {
    let mut start = 0;
    shape
        .parts()
        .iter()
        .map(|&len| {
            let row = word[start..start + len].to_vec();
            start += len;
            row
        })
        .collect()
}

#[test]
fn integral_form_tableaux_by_filtering() {
    for n in 1..=5 {
        for mu in partitions(n) {
            let d = attacking_data(&mu);
            let mut brute = BTreeSet::new();
            for shape in partitions(n) {
                for word in (1..=n).permutations(n) {
                    let rows = rows_of(&shape, &word);
                    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1] && !d.g.has_edge(w[0], w[1])));
                    let cols_ok = rows.windows(2).all(|pair| {
                        pair[1].iter().zip(&pair[0]).all(|(&above, &below)| above > below || d.g_plus.has_edge(above, below))
                    });
                    if rows_ok && cols_ok {
                        brute.insert(rows);
                    }
                }
            }
            let fast: BTreeSet<Vec<Vec<usize>>> = ift_enumerate(&mu).iter().map(|t| t.rows().to_vec()).collect();
            assert_eq!(fast, brute, "μ = {mu}");
        }
    }
}

#[test]
fn kostka_by_counting_tableaux() {
    for n in 1..=6 {
        for lambda in partitions(n) {
            for content in partitions(n) {
                let word: Vec<usize> =
                    content.parts().iter().enumerate().flat_map(|(i, &m)| std::iter::repeat(i).take(m)).collect();
                let fillings: BTreeSet<Vec<usize>> = word.iter().copied().permutations(n).collect();
                let count = fillings
                    .iter()
                    .filter(|w| {
                        let rows = rows_of(&lambda, w);
                        rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]))
                            && rows.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(a, b)| a > b))
                    })
                    .count();
                assert_eq!(kostka(&lambda, &content).unwrap(), count as u64, "K({lambda}, {content})");
            }
        }
    }
}
