//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line.

mod common;

use std::time::{Duration, Instant};

use symfunc::cli::{parse_corpus, run_command, WORKED_EXAMPLES};
use symfunc::hall_littlewood::{mul_hl, p_structure_constant, straighten_hl};
use symfunc::oracle::{
    check_hl_pieri_psi, check_hl_x_expansion, check_schur_tableaux, check_t0_degeneration, check_uc_koike,
    check_uc_xy, pairs_up_to, uc_pairs_up_to, OracleReport,
};
use symfunc::schur::mul_schur;
use symfunc::universal::mul_uc;
use symfunc::{Partition, TPoly, UCIndex};

use common::{deformed_fermionic_holds, iv, ordering_trial, pruning_counterexamples, schur_two_row_holds, seeded};

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn from_reports(reports: &[OracleReport], elapsed: Duration, limit: Option<Duration>) -> Verdict {
    let mut ok = limit.is_none_or(|l| elapsed <= l);
    let mut parts = Vec::new();
    for r in reports {
        ok &= r.passed();
        parts.push(r.to_string());
    }
    match limit {
        Some(l) => parts.push(format!("{elapsed:.2?} (limit {l:?})")),
        None => parts.push(format!("{elapsed:.2?}")),
    }
    verdict(ok, parts.join("; "))
}

type Criterion = (&'static str, Box<dyn FnOnce() -> Verdict>);

fn p(v: &[i64]) -> Partition {
    Partition::new(v).unwrap()
}

fn golden_examples() -> Verdict {
    let cases = match parse_corpus(WORKED_EXAMPLES) {
        Ok(c) => c,
        Err(e) => return verdict(false, e),
    };
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for case in &cases {
        let start = Instant::now();
        let (code, out) = run_command(&case.argv);
        let took = start.elapsed();
        slowest = slowest.max(took);
        let got: Option<serde_json::Value> = serde_json::from_str(&out).ok();
        if code != case.exit || got.as_ref() != Some(&case.expected) || took > Duration::from_secs(1) {
            failures.push(case.name.clone());
        }
    }

    // spot checks stated directly
    let t = TPoly::monomial(1, 1);
    let q = |v: &[i64]| straighten_hl(&iv(v)).unwrap();
    let mut t_q32 = symfunc::HLSum::new();
    t_q32.add(p(&[3, 2]), &t);
    if q(&[2, 3]) != t_q32 {
        failures.push("Q(2,3) = tQ(3,2)".into());
    }
    let mut t_q17 = symfunc::HLSum::new();
    t_q17.add_scaled(&q(&[-1, 7]), &t);
    if q(&[-2, 8]) != t_q17 {
        failures.push("Q(-2,8) = tQ(-1,7)".into());
    }
    let expected_321 = &TPoly::from_i64s(&[1, 0, -1]) * &TPoly::from_i64s(&[2, -1]);
    if mul_hl(&p(&[2, 1]), &p(&[2, 1])).unwrap().coeff(&p(&[3, 2, 1])) != expected_321 {
        failures.push("(1-t^2)(2-t) on Q(3,2,1)".into());
    }
    let uc = mul_uc(&UCIndex::new(p(&[2, 1]), p(&[3, 1])), &UCIndex::new(p(&[1]), p(&[1]))).unwrap();
    if uc.coeff(&UCIndex::new(p(&[2, 1]), p(&[3, 1]))) != 4.into() {
        failures.push("coefficient 4 on S[(2,1),(3,1)]".into());
    }
    if mul_schur(&p(&[2, 1]), &p(&[2, 1])).unwrap().len() != 7 {
        failures.push("7 terms in S(2,1)^2".into());
    }

    let detail = format!("{} corpus cases, slowest {:.2?}", cases.len(), slowest);
    if failures.is_empty() {
        verdict(true, detail)
    } else {
        verdict(false, format!("{detail}; failed: {}", failures.join(", ")))
    }
}

fn timed<F: FnOnce() -> Vec<OracleReport>>(limit: Option<Duration>, f: F) -> Verdict {
    let start = Instant::now();
    let reports = f();
    from_reports(&reports, start.elapsed(), limit)
}

fn integrality() -> Verdict {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for (mu, nu) in pairs_up_to(6, 6) {
        if let Err(e) = mul_schur(&mu, &nu) {
            failures.push(format!("S{mu}·S{nu}: {e}"));
        }
        let q = match mul_hl(&mu, &nu) {
            Ok(q) => q,
            Err(e) => {
                failures.push(format!("Q{mu}·Q{nu}: {e}"));
                continue;
            }
        };
        for (la, _) in q.terms() {
            checked += 1;
            if let Err(e) = p_structure_constant(&mu, &nu, la) {
                failures.push(format!("P constant {mu},{nu} -> {la}: {e}"));
            }
        }
    }
    for (a, b) in uc_pairs_up_to(6) {
        if let Err(e) = mul_uc(&a, &b) {
            failures.push(format!("{a}·{b}: {e}"));
        }
    }
    verdict(
        failures.is_empty(),
        format!("{checked} P-basis divisions exact, {} failures{}", failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()),
    )
}

fn identity_suites() -> Verdict {
    let mut bad = Vec::new();
    for a in -2..=6 {
        for b in -2..=6 {
            if !deformed_fermionic_holds(a, b) {
                bad.push(format!("fermionic ({a},{b})"));
            }
            if !schur_two_row_holds(a, b) {
                bad.push(format!("schur two-row ({a},{b})"));
            }
        }
    }
    let mut rng = seeded(0x5eed);
    let (mut order_fail, mut bound_fail) = (0, 0);
    for _ in 0..1000 {
        let (same, within) = ordering_trial(&mut rng);
        order_fail += usize::from(!same);
        bound_fail += usize::from(!within);
    }
    let ok = bad.is_empty() && order_fail == 0 && bound_fail == 0;
    verdict(
        ok,
        format!(
            "81 index pairs x 2 relations, {} failing; 1000 engine instances: {order_fail} order-dependent, {bound_fail} over the potential bound",
            bad.len()
        ),
    )
}

fn pruning_soundness() -> Verdict {
    let (checked, bad) = pruning_counterexamples(4, -4, 6);
    verdict(
        bad.is_empty(),
        format!("{checked} vectors with a negative tail sum, {} not zero{}", bad.len(),
            bad.first().map(|v| format!("; first: {v:?}")).unwrap_or_default()),
    )
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1 golden examples", Box::new(golden_examples)),
        (
            "2 schur vs LR tableaux, weight <= 8",
            Box::new(|| timed(Some(Duration::from_secs(60)), || vec![check_schur_tableaux(8).unwrap()])),
        ),
        (
            "3 hl vs x-expansion (weight <= 6) and psi Pieri (|mu| <= 6, r <= 4)",
            Box::new(|| {
                timed(Some(Duration::from_secs(120)), || {
                    vec![check_hl_x_expansion(6).unwrap(), check_hl_pieri_psi(6, 4).unwrap()]
                })
            }),
        ),
        (
            "4 hl at t=0 vs schur, weight <= 8",
            Box::new(|| timed(None, || vec![check_t0_degeneration(8).unwrap()])),
        ),
        (
            "5 uc vs Koike (weight <= 6) and xy-expansion (weight <= 5)",
            Box::new(|| {
                timed(Some(Duration::from_secs(300)), || vec![check_uc_koike(6).unwrap(), check_uc_xy(5).unwrap()])
            }),
        ),
        ("6 integrality", Box::new(integrality)),
        ("7 identity suites", Box::new(identity_suites)),
        ("8 pruning soundness", Box::new(pruning_soundness)),
    ];
    let mut all_ok = true;
    for (name, run) in criteria {
        let v = run();
        all_ok &= v.ok;
        println!("{} criterion {name}: {}", if v.ok { "PASS" } else { "FAIL" }, v.detail);
    }
    if !all_ok {
        std::process::exit(1);
    }
}
