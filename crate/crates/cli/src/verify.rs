use std::thread;

use incomm_core::angles::{omega_convergence_check, omega_kind, postulate4_check, AngleKind};
use incomm_core::anth::{anth_pair, incomm_certificate, theaetetus_trace, Verdict, DEFAULT_MAX_STEPS};
use incomm_core::book2::{gnomon_chain, verify, PropositionId};
use incomm_core::exact::parse_number;
use incomm_core::harmonics::{musical_anth, never_unison_check, philolaus_table, Interval};
use incomm_core::pell::{
    convergent_anth_check, no_integer_solution, pell_induction_verify, remainder_identity_check, surd_descent,
};
use incomm_core::QuadraticSurd;
use serde_json::json;

use crate::{Output, EXIT_DOMAIN, EXIT_OK};

type CheckFn = Box<dyn Fn() -> Result<(), String> + Send + Sync>;

struct Check {
    name: String,
    reference: String,
    run: CheckFn,
}

struct CheckResult {
    name: String,
    reference: String,
    outcome: Result<(), String>,
}

fn check(
    name: impl Into<String>,
    reference: impl Into<String>,
    run: impl Fn() -> Result<(), String> + Send + Sync + 'static,
) -> Check {
    Check { name: name.into(), reference: reference.into(), run: Box::new(run) }
}

fn ensure(ok: bool, detail: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail.into())
    }
}

fn num(s: &str) -> QuadraticSurd {
    parse_number(s).expect("built-in sample parses")
}

fn checks() -> Vec<Check> {
    let mut out: Vec<Check> = PropositionId::ALL
        .into_iter()
        .map(|id| {
            let reference = if id.label().starts_with("II.") {
                format!("Euclid {}", id.label())
            } else {
                "Book II lemma".to_string()
            };
            check(format!("{} identity", id.label()), reference, move || {
                ensure(verify(id), format!("{} does not expand to zero", id.proposition().statement()))
            })
        })
        .collect();

    out.push(check("Pell n<=256", "side and diameter numbers, q^2 = 2p^2 + (-1)^n", || {
        let report = pell_induction_verify(256);
        ensure(report.base, "base case fails")?;
        ensure(report.first_failure.is_none(), format!("first failure at n = {:?}", report.first_failure))
    }));
    out.push(check("convergents n<=32", "Anth(q_n, p_n) = [1, 2, ..., 2]", || {
        for n in 1..=32 {
            ensure(convergent_anth_check(n).map_err(|e| e.to_string())?, format!("n = {n}"))?;
        }
        Ok(())
    }));
    out.push(check("gnomon chain k<=20", "preservation of gnomons", || {
        let chain = gnomon_chain(20).map_err(|e| e.to_string())?;
        match chain.iter().find(|s| !s.holds) {
            Some(s) => Err(format!("form fails at c_{}", s.n)),
            None => ensure(chain.len() == 20, "chain shorter than 20"),
        }
    }));
    out.push(check("remainder identity k<=20", "c_k = |p_k sqrt(2) - q_k|", || {
        ensure(remainder_identity_check(20).map_err(|e| e.to_string())?, "remainder differs")
    }));
    out.push(check("music 7 steps", "Philolaus, octave against fifth", || {
        let t = musical_anth(&Interval::octave(), &Interval::fifth(), 7).map_err(|e| e.to_string())?;
        ensure(t.quotients == [1, 1, 2, 2, 3, 1, 5], format!("quotients {:?}", t.quotients))?;
        let named = [Interval::fourth(), Interval::tone(), Interval::diesis(), Interval::comma()];
        ensure(t.remainders[..4] == named, "remainders are not fourth, tone, diesis, comma")?;
        ensure(never_unison_check(30).map_err(|e| e.to_string())?, "a remainder reached the unison")
    }));
    out.push(check("Philolaus table", "Philolaus, division of the octave", || {
        ensure(philolaus_table().all_hold(), "a relation fails")
    }));
    out.push(check("angle parity n<=64", "odd w_n acute, even w_n obtuse", || {
        for n in 1..=64 {
            let want = if n % 2 == 1 { AngleKind::Acute } else { AngleKind::Obtuse };
            let got = omega_kind(n).map_err(|e| e.to_string())?;
            ensure(got == want, format!("w_{n} is {got}"))?;
        }
        ensure(omega_convergence_check(64).map_err(|e| e.to_string())?, "|cos w_n| not decreasing")
    }));
    out.push(check("postulate 4 sample", "Euclid, Postulate 4", || {
        let pairs = [("sqrt(2)", "1"), ("3*sqrt(2)/7", "3/7"), ("2 + sqrt(2)", "1 + sqrt(2)"), ("2", "sqrt(2)")]
            .map(|(a, b)| (num(a), num(b)));
        ensure(postulate4_check(&pairs, DEFAULT_MAX_STEPS).map_err(|e| e.to_string())?, "an expansion differs")
    }));
    out.push(check("no integer solution m<=10^4", "no n^2 = 2m^2 in integers", || {
        ensure(no_integer_solution(10_000), "found n^2 = 2m^2")
    }));
    out.push(check("surd descent 20 steps", "(d, s) -> (2s - d, d - s)", || {
        let t = surd_descent(20).map_err(|e| e.to_string())?;
        ensure(t.all_hold(), "d^2 = 2s^2 or monotonicity fails")
    }));
    out.push(check("sqrt(2) certificate", "Euclid X.2", || {
        let e = anth_pair(&num("sqrt(2)"), &num("1"), DEFAULT_MAX_STEPS).map_err(|e| e.to_string())?;
        let c = incomm_certificate(&e).map_err(|e| e.to_string())?;
        ensure(c.verdict == Verdict::Incommensurable, "not incommensurable")
    }));
    out.push(check("Theaetetus trace", "Anth(sqrt(2), 1) = [1, period(2)]", || {
        ensure(theaetetus_trace().all_hold(), "a step of the trace fails")
    }));
    out
}

/// Runs every check, concurrently; results are ordered by name.
pub fn verify_all() -> Output {
    let checks = checks();
    let mut results: Vec<CheckResult> = thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|c| {
                let handle = scope.spawn(|| (c.run)());
                (c, handle)
            })
            .collect();
        handles
            .into_iter()
            .map(|(c, h)| CheckResult {
                name: c.name.clone(),
                reference: c.reference.clone(),
                outcome: h.join().unwrap_or_else(|_| Err("check panicked".into())),
            })
            .collect()
    });
    results.sort_by(|a, b| a.name.cmp(&b.name));

    let passed = results.iter().filter(|r| r.outcome.is_ok()).count();
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut lines: Vec<String> = results
        .iter()
        .map(|r| {
            let status = if r.outcome.is_ok() { "PASS" } else { "FAIL" };
            let mut line = format!("{status}  {:<width$}  {}", r.name, r.reference);
            if let Err(detail) = &r.outcome {
                line.push_str(&format!(": {detail}"));
            }
            line
        })
        .collect();
    lines.push(format!("{passed} of {} checks pass", results.len()));

    let json = json!({
        "checks": results.iter().map(|r| json!({
            "name": r.name,
            "reference": r.reference,
            "pass": r.outcome.is_ok(),
            "detail": r.outcome.as_ref().err(),
        })).collect::<Vec<_>>(),
        "passed": passed,
        "total": results.len(),
        "all_pass": passed == results.len(),
    });
    let first_failure =
        results.iter().find_map(|r| r.outcome.as_ref().err().map(|d| format!("first failure: {}: {d}", r.name)));
    Output {
        text: lines.join("\n"),
        json,
        code: if first_failure.is_some() { EXIT_DOMAIN } else { EXIT_OK },
        note: first_failure,
    }
}
