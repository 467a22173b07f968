//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria that are known to fail are listed in `KNOWN_FAILURES` with the
//! reason. The test asserts that the failing set is exactly that list, so a
//! new failure and an unexpected pass both break the build.

use std::io::Write;
use std::time::Instant;

use macchroma::graphs::attacking_data;
use macchroma::jack::{alpha_one_support, jack_four_way, jack_knop_sahi, jack_power, jack_schur, wt_alpha};
use macchroma::macdonald::{filling_stats, four_way, ift_enumerate, j_hhl, j_schur, wt_mu};
use macchroma::shapes::{binomial2, partitions, partitions_up_to};
use macchroma::tableau::Tableau;
use macchroma::verify::{run_conjecture, run_suite, Conjecture, Suite, VerifyReport};
use macchroma::{AlphaPoly, Basis, LaurentQT, Partition};

/// Criteria expected to print FAIL, with the reason.
const KNOWN_FAILURES: &[(u32, &str)] = &[
    (2, "the displayed Jack tableau weight (α+1)(2α+1) does not follow from the weight rule; it gives (1+hook(3))(1+hook(4)) = 2+6α+4α²"),
    (8, "the palindromic specialization is negative at J_(2), k = 2 (s_2 coefficient −t)"),
];

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn expand(factors: &[&str]) -> LaurentQT {
    factors.iter().fold("1".parse().unwrap(), |acc: LaurentQT, f| acc * f.parse::<LaurentQT>().unwrap())
}

fn nonempty_up_to(n: usize) -> Vec<Partition> {
    partitions_up_to(n).into_iter().filter(|m| m.size() > 0).collect()
}

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_checks(checks: Vec<(String, bool)>) -> Self {
        let failed: Vec<String> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.clone()).collect();
        Outcome {
            passed: failed.is_empty(),
            detail: if failed.is_empty() {
                format!("{} checks", checks.len())
            } else {
                format!("failed: {}", failed.join("; "))
            },
        }
    }

    fn from_report(r: &VerifyReport) -> Self {
        Outcome {
            passed: r.passed,
            detail: match &r.counterexample {
                None => format!("{} shapes", r.items.len()),
                Some(ce) => format!(
                    "μ = {}, {}, index {}: expected {}, got {}",
                    ce.mu, ce.check, ce.index, ce.expected, ce.actual
                ),
            },
        }
    }
}

fn macdonald_four_way() -> Outcome {
    let mut checks = Vec::new();
    for mu in nonempty_up_to(6) {
        let fw = four_way(&mu).unwrap();
        checks.push((format!("{mu} chromatic"), fw.chromatic == fw.hhl));
        checks.push((format!("{mu} schur"), fw.schur == fw.hhl));
        checks.push((format!("{mu} power"), fw.power == fw.hhl));
    }
    Outcome::from_checks(checks)
}

fn displayed_values() -> Outcome {
    let mut checks = Vec::new();
    let mu = p("2,1,1");
    let j = j_hhl(&mu).convert(Basis::Schur).unwrap();
    let expected = expand(&["1 - t", "1 - t", "q - t", "1 - q*t", "1 + q*t"]);
    checks.push(("J_(3,1) at s_(2,2)".into(), j.coeff(&p("2,2")).to_string() == expected.to_string()));
    checks.push(("J_(3,1) at s_(2,2) via tableaux".into(), j_schur(&mu).coeff(&p("2,2")) == expected));

    let d = attacking_data(&p("2,2,2"));
    let t = Tableau::from_rows(vec![vec![1, 4, 6], vec![3, 5], vec![2]]).unwrap();
    let expected = expand(&["q*t^2", "1 - t", "1 - t", "1 - q^2*t", "1 - q^2*t^2"]);
    checks.push(("wt_μ of the (2,2,2) tableau".into(), wt_mu(&d, &t).to_string() == expected.to_string()));

    let d = attacking_data(&mu);
    let mut weights: Vec<String> =
        ift_enumerate(&mu).iter().filter(|t| t.shape() == &p("2,2")).map(|t| wt_mu(&d, t).to_string()).collect();
    let mut expected: Vec<String> = [
        expand(&["q", "1 - t", "1 - t"]),
        expand(&["q*t", "1 - t", "1 - q^2*t"]),
        expand(&["-t", "1 - q", "1 - q^2*t"]),
        expand(&["-q^2*t^2", "1 - q", "1 - t"]),
    ]
    .iter()
    .map(|w| w.to_string())
    .collect();
    weights.sort();
    expected.sort();
    checks.push(("four (2,1,1) tableau weights".into(), weights == expected));

    let two_two = p("2,2");
    let jack = jack_knop_sahi(&mu).convert(Basis::Schur).unwrap();
    checks.push(("J^α_(3,1) at s_(2,2)".into(), jack.coeff(&two_two).to_string() == "2 - 2*α^2"));
    checks.push(("J^α_(3,1) at s_(2,2) via tableaux".into(), jack_schur(&mu).coeff(&two_two).to_string() == "2 - 2*α^2"));
    checks.push(("J^α_(3,1) at p_(2,2)".into(), jack_power(&mu).coeff(&two_two).to_string() == "-α"));

    let displayed = "1 + α".parse::<AlphaPoly>().unwrap() * "1 + 2*α".parse::<AlphaPoly>().unwrap();
    let d6 = attacking_data(&p("2,2,2"));
    checks.push(("wt^α of the (2,2,2) tableau".into(), wt_alpha(&d6, &t) == displayed));

    let d = attacking_data(&p("3,2"));
    checks.push(("G_(3,2)".into(), d.g.to_string() == "{12,23,34,35,45}"));
    checks.push(("G⁺_(3,2)".into(), d.g_plus.to_string() == "{12,13,23,24,34,35,45}"));
    let d = attacking_data(&mu);
    checks.push(("G_(2,1,1)".into(), d.g.to_string() == "{34}"));
    checks.push(("G⁺_(2,1,1)".into(), d.g_plus.to_string() == "{12,23,34}"));
    Outcome::from_checks(checks)
}

fn polynomiality() -> Outcome {
    let mut checks = Vec::new();
    for mu in nonempty_up_to(6) {
        let d = attacking_data(&mu);
        let bad = ift_enumerate(&mu)
            .iter()
            .map(|t| wt_mu(&d, t))
            .find(|w| w.has_negative_exponent() || !w.has_integer_coefficients());
        let name = match &bad {
            Some(w) => format!("{mu}: {w}"),
            None => mu.to_string(),
        };
        checks.push((name, bad.is_none()));
    }
    Outcome::from_checks(checks)
}

fn jack_four_way_and_alpha_one() -> Outcome {
    let mut checks = Vec::new();
    for mu in nonempty_up_to(6) {
        let fw = jack_four_way(&mu).unwrap();
        checks.push((format!("{mu} chromatic"), fw.chromatic == fw.knop_sahi));
        checks.push((format!("{mu} schur"), fw.schur == fw.knop_sahi));
        checks.push((format!("{mu} subsets"), fw.power == fw.knop_sahi));
        checks.push((format!("{mu} α = 1 support"), alpha_one_support(&mu).unwrap().is_none()));
    }
    Outcome::from_checks(checks)
}

fn structural_invariants() -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=5 {
        for mu in partitions(n) {
            let d = attacking_data(&mu);
            let edges = 2 * mu.conjugate().n_stat() - binomial2(mu.part(1));
            checks.push((format!("{mu} |E(G)|"), d.g.edge_count() == edges));
            checks.push((format!("{mu} |G⁺ \\ G|"), d.g_plus.edge_count() - d.g.edge_count() == n - mu.part(1)));
            let stats_ok = macchroma::graphs::proper_colorings(&d.g, n).all(|(values, _)| {
                let s = filling_stats(&d, &values);
                s.inv + s.coinv == edges
            });
            checks.push((format!("{mu} inv + coinv"), stats_ok));
        }
    }
    Outcome::from_checks(checks)
}

fn conjectures() -> Outcome {
    let mut checks = Vec::new();
    let mut details = Vec::new();
    for which in [Conjecture::Haglund, Conjecture::Palindromic] {
        let r = run_conjecture(which, 5, 3, None).unwrap();
        let o = Outcome::from_report(&r);
        details.push(format!("{}: {}", which.name(), o.detail));
        checks.push((which.name().to_string(), o.passed));
    }
    let mut o = Outcome::from_checks(checks);
    o.detail = details.join(" | ");
    o
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        (1, "four-way Macdonald equality, n ≤ 6", macdonald_four_way),
        (2, "worked values", displayed_values),
        (3, "integral form tableau weights are polynomials, n ≤ 6", polynomiality),
        (4, "four-way Jack equality and α = 1 support, n ≤ 6", jack_four_way_and_alpha_one),
        (5, "chromatic cross-checks over sandwich graphs, n ≤ 5", || {
            Outcome::from_report(&run_suite(Suite::Chromatic, 5, None).unwrap())
        }),
        (6, "LLT plethysm, tilde form and divisibility, n ≤ 5", || {
            Outcome::from_report(&run_suite(Suite::Llt, 5, None).unwrap())
        }),
        (7, "structural invariants, n ≤ 5", structural_invariants),
        (8, "conjecture scans, n ≤ 5, k ≤ 3", conjectures),
    ];
    // Written to the raw handle so the lines survive libtest output capture.
    let mut out = std::io::stdout().lock();
    let mut failing = Vec::new();
    for (id, name, run) in criteria {
        let started = Instant::now();
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} criterion {id}: {name} ({} ms) {}", started.elapsed().as_millis(), o.detail).unwrap();
        if !o.passed {
            failing.push(id);
        }
    }
    for (id, reason) in KNOWN_FAILURES {
        writeln!(out, "known failure {id}: {reason}").unwrap();
    }
    let known: Vec<u32> = KNOWN_FAILURES.iter().map(|(id, _)| *id).collect();
    assert_eq!(failing, known, "failing criteria differ from the documented known failures");
}
