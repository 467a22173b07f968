//! Cross-verification suites and conjecture scans over all partitions up to
//! a given size.

use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Coefficient, LaurentQT, Var};
use crate::chromatic::{check_plethysm, first_indivisible, x_g, x_g_power, x_g_schur};
use crate::error::Error;
use crate::graphs::{attacking_data, is_claw_free};
use crate::jack::{alpha_one_support, jack_four_way, jack_power, jack_power_with, SubsetSign};
use crate::macdonald::{four_way, j_hhl, j_schur};
use crate::shapes::{partitions_up_to, Partition};
use crate::symfunc::{Basis, SymFunc};

/// Environment variable capping the worker pool size.
pub const THREADS_ENV: &str = "MACCHROMA_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first disagreement found for one partition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub mu: Partition,
    pub basis: String,
    pub index: Partition,
    pub expected: String,
    pub actual: String,
    pub check: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ItemReport {
    pub mu: Partition,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub max_n: usize,
    pub passed: bool,
    pub items: Vec<ItemReport>,
    pub counterexample: Option<Counterexample>,
    pub wall_time_ms: u128,
}

impl VerifyReport {
    fn assemble(suite: &str, max_n: usize, items: Vec<ItemReport>, started: Instant) -> Self {
        let counterexample = items.iter().find_map(|i| i.counterexample.clone());
        VerifyReport {
            suite: suite.to_string(),
            max_n,
            passed: items.iter().all(|i| i.status == Status::Pass),
            items,
            counterexample,
            wall_time_ms: started.elapsed().as_millis(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Macdonald,
    Jack,
    Chromatic,
    Llt,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "macdonald" => Ok(Suite::Macdonald),
            "jack" => Ok(Suite::Jack),
            "chromatic" => Ok(Suite::Chromatic),
            "llt" => Ok(Suite::Llt),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite `{s}`"))),
        }
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Macdonald => "macdonald",
            Suite::Jack => "jack",
            Suite::Chromatic => "chromatic",
            Suite::Llt => "llt",
            Suite::All => "all",
        }
    }
}

type CheckResult = Result<Option<Counterexample>, Error>;

/// First index where `actual` and `expected` differ, as a counterexample.
fn compare<C: Coefficient>(
    mu: &Partition,
    check: &str,
    expected: &SymFunc<C>,
    actual: &SymFunc<C>,
) -> Option<Counterexample> {
    expected.first_difference(actual).map(|(index, e, a)| Counterexample {
        mu: mu.clone(),
        basis: expected.basis().name().to_string(),
        index,
        expected: e.to_string(),
        actual: a.to_string(),
        check: check.to_string(),
    })
}

fn failure(mu: &Partition, check: &str, detail: String) -> Counterexample {
    Counterexample {
        mu: mu.clone(),
        basis: String::new(),
        index: mu.clone(),
        expected: String::new(),
        actual: detail,
        check: check.to_string(),
    }
}

fn first_some(checks: impl IntoIterator<Item = CheckResult>) -> CheckResult {
    for c in checks {
        if let Some(ce) = c? {
            return Ok(Some(ce));
        }
    }
    Ok(None)
}

fn check_macdonald(mu: &Partition) -> CheckResult {
    let fw = four_way(mu)?;
    let mut checks = vec![
        Ok(compare(mu, "hhl = chromatic", &fw.hhl, &fw.chromatic)),
        Ok(compare(mu, "hhl = schur formula", &fw.hhl, &fw.schur)),
        Ok(compare(mu, "hhl = power formula", &fw.hhl, &fw.power)),
    ];
    if let Some((lambda, c)) =
        fw.hhl.terms().find(|(_, c)| c.has_negative_exponent() || !c.has_integer_coefficients())
    {
        checks.push(Ok(Some(failure(mu, "hhl polynomiality", format!("m_{lambda}: {c}")))));
    }
    first_some(checks)
}

fn check_jack(mu: &Partition) -> CheckResult {
    let fw = jack_four_way(mu)?;
    let mut checks = vec![
        Ok(compare(mu, "knop-sahi = chromatic", &fw.knop_sahi, &fw.chromatic)),
        Ok(compare(mu, "knop-sahi = schur formula", &fw.knop_sahi, &fw.schur)),
        Ok(compare(mu, "knop-sahi = subset formula", &fw.knop_sahi, &fw.power)),
        Ok(compare(
            mu,
            "subset formula sign forms",
            &jack_power(mu),
            &jack_power_with(mu, SubsetSign::AllEdges),
        )),
    ];
    if let Some(lambda) = alpha_one_support(mu)? {
        checks.push(Ok(Some(failure(mu, "alpha = 1 support", format!("nonzero at s_{lambda}")))));
    }
    first_some(checks)
}

fn check_chromatic(mu: &Partition) -> CheckResult {
    let d = attacking_data(mu);
    for (mask, h) in d.sandwich_graphs() {
        let tag = |what: &str| format!("{what} (H mask {mask:b})");
        if !is_claw_free(&h) {
            return Ok(Some(failure(mu, &tag("claw-free"), format!("{h} has a claw"))));
        }
        let x = match x_g(&h, true) {
            Ok(x) => x,
            Err(e) => return Ok(Some(failure(mu, &tag("symmetry audit"), e.to_string()))),
        };
        let checks = [
            Ok(compare(mu, &tag("schur formula"), &x.convert(Basis::Schur)?, &x_g_schur(&h)?)),
            Ok(compare(mu, &tag("power formula"), &x.convert(Basis::Power)?, &x_g_power(&h).omega()?)),
            Ok(compare(
                mu,
                &tag("t = 1 specialization"),
                &x_g(&h, false)?,
                &x.map_coeffs(|c| LaurentQT::from_rat(c.eval_at_one())),
            )),
        ];
        if let Some(ce) = first_some(checks)? {
            return Ok(Some(ce));
        }
    }
    Ok(None)
}

fn check_llt(mu: &Partition) -> CheckResult {
    let d = attacking_data(mu);
    for (mask, h) in d.sandwich_graphs() {
        let tag = |what: &str| format!("{what} (H mask {mask:b})");
        let r = check_plethysm(&h)?;
        for (ok, what) in [(r.plethysm, "plethysm form"), (r.divided, "divided form"), (r.tilde, "tilde form")] {
            if !ok {
                return Ok(Some(failure(mu, &tag(what), format!("{what} differs from direct LLT"))));
            }
        }
        if let Some(lambda) = first_indivisible(&h) {
            return Ok(Some(failure(mu, &tag("divisibility"), format!("fails at λ = {lambda}"))));
        }
    }
    Ok(None)
}

fn run_items(
    max_n: usize,
    check: impl Fn(&Partition) -> CheckResult + Sync,
    progress: Option<&(dyn Fn(&ItemReport) + Sync)>,
) -> Result<Vec<ItemReport>, Error> {
    let mus: Vec<Partition> = partitions_up_to(max_n).into_iter().filter(|m| m.size() > 0).collect();
    let run = || {
        mus.par_iter()
            .map(|mu| {
                let ce = check(mu)?;
                let item = ItemReport {
                    mu: mu.clone(),
                    status: if ce.is_some() { Status::Fail } else { Status::Pass },
                    counterexample: ce,
                };
                if let Some(p) = progress {
                    p(&item);
                }
                Ok(item)
            })
            .collect::<Result<Vec<_>, Error>>()
    };
    with_pool(run)
}

/// Runs `f` on a pool capped by `MACCHROMA_THREADS` when it is set.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(threads) if threads > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

/// Runs one suite (or all of them) over every `μ ⊢ n` with `1 ≤ n ≤ max_n`.
pub fn run_suite(
    suite: Suite,
    max_n: usize,
    progress: Option<&(dyn Fn(&ItemReport) + Sync)>,
) -> Result<VerifyReport, Error> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("max_n must be at least 1".into()));
    }
    let started = Instant::now();
    let items = match suite {
        Suite::Macdonald => run_items(max_n, check_macdonald, progress)?,
        Suite::Jack => run_items(max_n, check_jack, progress)?,
        Suite::Chromatic => run_items(max_n, check_chromatic, progress)?,
        Suite::Llt => run_items(max_n, check_llt, progress)?,
        Suite::All => run_items(
            max_n,
            |mu| {
                first_some([check_macdonald(mu), check_jack(mu), check_chromatic(mu), check_llt(mu)])
            },
            progress,
        )?,
    };
    Ok(VerifyReport::assemble(suite.name(), max_n, items, started))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// `J_ν(x; q, q^k) / (1 - q)^n` is Schur positive.
    Haglund,
    /// `t^{k n(ν′)} J_ν(x; t^{-k}, t) / (1 - t)^n` is Schur positive with
    /// palindromic coefficients.
    Palindromic,
}

impl std::str::FromStr for Conjecture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "haglund" => Ok(Conjecture::Haglund),
            "palindromic" => Ok(Conjecture::Palindromic),
            _ => Err(Error::Parse(format!("unknown conjecture `{s}`"))),
        }
    }
}

impl Conjecture {
    pub fn name(self) -> &'static str {
        match self {
            Conjecture::Haglund => "haglund",
            Conjecture::Palindromic => "palindromic",
        }
    }
}

fn one_minus_pow(var: Var, n: usize) -> LaurentQT {
    let base = match var {
        Var::Q => LaurentQT::one_minus(1, 0),
        Var::T => LaurentQT::one_minus(0, 1),
    };
    (0..n).fold(LaurentQT::one(), |acc, _| acc * base.clone())
}

/// The specialized Schur coefficient, or the reason it could not be formed.
pub fn specialize(
    which: Conjecture,
    mu: &Partition,
    k: u32,
    coeff: &LaurentQT,
) -> Result<LaurentQT, Error> {
    let n = mu.size();
    let k = k as i32;
    match which {
        Conjecture::Haglund => {
            let sub = coeff.substitute(Var::T, &LaurentQT::qt(k, 0))?;
            sub.exact_div(&one_minus_pow(Var::Q, n))
        }
        Conjecture::Palindromic => {
            // J is indexed by ν = μ′, so n(ν′) = n(μ).
            let shift = k * mu.n_stat() as i32;
            let sub = coeff.substitute(Var::Q, &LaurentQT::qt(0, -k))?.shift(0, shift);
            sub.exact_div(&one_minus_pow(Var::T, n))
        }
    }
}

fn scan_one(which: Conjecture, mu: &Partition, max_k: u32) -> CheckResult {
    let schur = j_schur(mu);
    for k in 1..=max_k {
        if let Some(ce) = scan_coefficients(which, mu, k, &schur)? {
            // Audit: recompute through the filling formula before reporting.
            let audit = j_hhl(mu).convert(Basis::Schur)?;
            let confirmed = scan_coefficients(which, mu, k, &audit)?.is_some_and(|a| a.index == ce.index);
            let mut ce = ce;
            ce.check = format!("{} (audit {})", ce.check, if confirmed { "confirmed" } else { "disagrees" });
            return Ok(Some(ce));
        }
    }
    Ok(None)
}

fn scan_coefficients(
    which: Conjecture,
    mu: &Partition,
    k: u32,
    schur: &SymFunc<LaurentQT>,
) -> CheckResult {
    let make = |index: &Partition, coeff: &LaurentQT, actual: String, what: &str| Counterexample {
        mu: mu.clone(),
        basis: "schur".into(),
        index: index.clone(),
        expected: format!("J_{} coefficient {}", mu.conjugate(), coeff),
        actual,
        check: format!("{} k={k}: {what}", which.name()),
    };
    for (index, coeff) in schur.terms().rev() {
        let value = match specialize(which, mu, k, coeff) {
            Ok(v) => v,
            Err(e) => return Ok(Some(make(index, coeff, e.to_string(), "inexact division"))),
        };
        if let Some(term) = value.first_non_positive_term() {
            return Ok(Some(make(index, coeff, format!("{value} (term {term})"), "not Schur positive")));
        }
        if !value.has_integer_coefficients() {
            return Ok(Some(make(index, coeff, value.to_string(), "non-integer coefficient")));
        }
        if which == Conjecture::Palindromic && !value.is_zero() && !value.is_palindromic_in_t()? {
            return Ok(Some(make(index, coeff, value.to_string(), "not palindromic")));
        }
    }
    Ok(None)
}

/// Scans every `μ ⊢ n ≤ max_n` and `1 ≤ k ≤ max_k`. Counterexamples are
/// reported (after an audit through an independent formula), not raised.
pub fn run_conjecture(
    which: Conjecture,
    max_n: usize,
    max_k: u32,
    progress: Option<&(dyn Fn(&ItemReport) + Sync)>,
) -> Result<VerifyReport, Error> {
    if max_n == 0 || max_k == 0 {
        return Err(Error::InvalidArgument("max_n and max_k must be at least 1".into()));
    }
    let started = Instant::now();
    let items = run_items(max_n, |mu| scan_one(which, mu, max_k), progress)?;
    Ok(VerifyReport::assemble(which.name(), max_n, items, started))
}
