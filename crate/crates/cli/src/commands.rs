use std::fmt::Display;
use std::fs;

use incomm_core::angles::{
    apex_cosine, classify_isosceles, omega_convergence_check, omega_kind, postulate4_check,
    pythagorean_angle_definition, Boundary,
};
use incomm_core::anth::{anth_pair, euclid_anth, incomm_certificate, surd_anth, AnthExpansion, Verdict, Witness};
use incomm_core::book2::{
    apply_areas_defect, apply_areas_excess, gnomon_chain, mean_extreme, mean_proportional, poly, verify, PropositionId,
};
use incomm_core::exact::{decimal_string, parse_number, parse_rational};
use incomm_core::harmonics::{musical_anth, philolaus_table, Interval};
use incomm_core::pell::{
    defect_of, elegant_step, integer_descent, no_integer_solution, side_diameter, side_diameters, subtractive_step,
    surd_descent,
};
use incomm_core::{QuadraticSurd, Rational};
use num_bigint::BigInt;
use serde_json::json;

use crate::{
    verify, AngleCommand, AreasCommand, Book2Command, Command, DescentCommand, Failure, Opts, Output, EXIT_DOMAIN,
};

type Outcome = Result<Output, Failure>;

pub fn dispatch(command: &Command, opts: Opts) -> Outcome {
    match command {
        Command::Anth { a, b } => anth(a, b, opts),
        Command::Cf { x } => cf(x, opts),
        Command::Pell => pell(opts),
        Command::Elegant { a, b, subtractive } => elegant(a, b, *subtractive),
        Command::Descent(c) => descent(c, opts),
        Command::Book2(c) => book2(c, opts),
        Command::Areas(c) => areas(c, opts),
        Command::Music { steps, table } => music(*steps, *table),
        Command::Angle(c) => angle(c, opts),
        Command::Cert { a, b } => cert(a, b, opts),
        Command::VerifyAll => Ok(verify::verify_all()),
    }
}

fn num(s: &str) -> Result<QuadraticSurd, Failure> {
    Ok(parse_number(s)?)
}

fn rat(s: &str) -> Result<Rational, Failure> {
    Ok(parse_rational(s)?)
}

fn int(s: &str) -> Result<BigInt, Failure> {
    s.trim().parse().map_err(|_| Failure::Usage(format!("cannot parse {s:?} as an integer")))
}

fn list<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// `prefix [..] period [..]`, or `period none` for a finite expansion.
pub fn expansion_line(e: &AnthExpansion) -> String {
    let period = e.period().map_or_else(|| "none".to_string(), list);
    format!("prefix {} period {}", list(e.prefix()), period)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn anth(a: &str, b: &str, opts: Opts) -> Outcome {
    let e = anth_pair(&num(a)?, &num(b)?, opts.max_steps)?;
    let mut text = expansion_line(&e);
    text.push_str(&format!("\nstatus {}", e.status().as_str()));
    if let Some(m) = e.common_measure() {
        text.push_str(&format!("\ncommon measure {m}"));
    }
    text.push_str(&format!("\nremainders {}", list(e.remainders())));
    Ok(Output::ok(text, e.to_json()))
}

fn cf(x: &str, opts: Opts) -> Outcome {
    let x = num(x)?;
    let e = match x.to_rational() {
        Some(r) => euclid_anth(&r, &Rational::from_integer(1.into()))?,
        None => surd_anth(&x, opts.max_steps)?,
    };
    Ok(Output::ok(expansion_line(&e), e.to_json()))
}

fn cert(a: &str, b: &str, opts: Opts) -> Outcome {
    let e = anth_pair(&num(a)?, &num(b)?, opts.max_steps)?;
    let c = incomm_certificate(&e)?;
    let text = match (&c.verdict, &c.witness) {
        (Verdict::Commensurable, Witness::CommonMeasure(m)) => {
            format!("Commensurable: the expansion ends, common measure {m}")
        }
        (_, Witness::Period { prefix, period }) => {
            format!("Incommensurable: the expansion repeats, prefix {} period {}", list(prefix), list(period))
        }
        (v, _) => format!("{v:?}"),
    };
    Ok(Output::ok(text, c.to_json()))
}

fn pell(opts: Opts) -> Outcome {
    let n = opts.n.unwrap_or(10);
    side_diameter(n)?;
    let rows: Vec<_> = side_diameters().take(n as usize).collect();
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            let ratio = decimal_string(&QuadraticSurd::from_rational(&r.ratio()), opts.digits);
            [r.n.to_string(), r.p.to_string(), r.q.to_string(), r.defect.to_string(), ratio]
        })
        .collect();
    let header = ["n", "p", "q", "defect", "q/p"].map(String::from);
    let mut widths = [0usize; 5];
    for row in std::iter::once(&header).chain(&cells) {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |row: &[String; 5]| {
        let padded: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ")
    };
    let text: Vec<String> = std::iter::once(&header).chain(&cells).map(line).collect();
    let json = json!({ "rows": rows.iter().map(|r| r.to_json(opts.digits)).collect::<Vec<_>>() });
    Ok(Output::ok(text.join("\n"), json))
}

fn elegant(a: &str, b: &str, subtractive: bool) -> Outcome {
    let (a, b) = (num(a)?, num(b)?);
    let (x, y) = if subtractive { subtractive_step(&a, &b)? } else { elegant_step(&a, &b)? };
    let (before, after) = (defect_of(&a, &b)?, defect_of(&x, &y)?);
    let rule = if subtractive { "(2b-a, a-b)" } else { "(a+2b, a+b)" };
    let text = format!("(a, b) = ({a}, {b})\n{rule} = ({x}, {y})\na^2 - 2b^2: {before} -> {after}");
    let json = json!({
        "input": [a.to_string(), b.to_string()],
        "output": [x.to_string(), y.to_string()],
        "defect_before": before.to_string(),
        "defect_after": after.to_string(),
    });
    Ok(Output::ok(text, json))
}

fn descent(c: &DescentCommand, opts: Opts) -> Outcome {
    match c {
        DescentCommand::Surd => {
            let trace = surd_descent(opts.n.unwrap_or(8) as usize)?;
            let mut lines: Vec<String> = trace
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    format!(
                        "step {}: d = {}, s = {}, d^2 = 2s^2 {}, s decreasing {}",
                        i + 1,
                        s.d,
                        s.s,
                        yes(s.relation),
                        yes(s.decreasing)
                    )
                })
                .collect();
            lines.push(format!("quotients {}", list(&trace.quotients)));
            lines.push(format!("remainders of Anth(sqrt(2), 1): {}", yes(trace.matches_anth)));
            let json = json!({
                "steps": trace.steps.iter().map(|s| json!({
                    "d": s.d.to_string(), "s": s.s.to_string(), "relation": s.relation, "decreasing": s.decreasing,
                })).collect::<Vec<_>>(),
                "quotients": trace.quotients.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "matches_anth": trace.matches_anth,
                "all_hold": trace.all_hold(),
            });
            let mut out = Output::ok(lines.join("\n"), json);
            if !trace.all_hold() {
                out.code = EXIT_DOMAIN;
            }
            Ok(out)
        }
        DescentCommand::Integer { m, diagonal } => {
            let (m, n) = (int(m)?, int(diagonal)?);
            let (m2, n2) = integer_descent(&m, &n)?;
            let defect = |m: &BigInt, n: &BigInt| -> BigInt { n * n - m * m * 2 };
            let (before, after) = (defect(&m, &n), defect(&m2, &n2));
            let text = format!("(m, n) = ({m}, {n}) -> ({m2}, {n2})\nn^2 - 2m^2: {before} -> {after}");
            let json = json!({
                "input": [m.to_string(), n.to_string()],
                "output": [m2.to_string(), n2.to_string()],
                "defect_before": before.to_string(),
                "defect_after": after.to_string(),
            });
            Ok(Output::ok(text, json))
        }
        DescentCommand::Search => {
            let bound = opts.n.unwrap_or(10_000);
            let none = no_integer_solution(bound);
            let text = if none {
                format!("no integers 1 <= m <= {bound} with n^2 = 2m^2")
            } else {
                format!("found n^2 = 2m^2 with m <= {bound}")
            };
            let mut out = Output::ok(text, json!({ "bound": bound, "no_solution": none }));
            if !none {
                out.code = EXIT_DOMAIN;
            }
            Ok(out)
        }
    }
}

fn book2(c: &Book2Command, opts: Opts) -> Outcome {
    match c {
        Book2Command::Verify { id, all } => {
            let ids: Vec<PropositionId> = match (id, all) {
                (Some(id), false) => vec![id.parse()?],
                (None, true) => PropositionId::ALL.to_vec(),
                _ => return Err(Failure::Usage("give a proposition label or --all".into())),
            };
            let results: Vec<(PropositionId, bool)> = ids.into_iter().map(|id| (id, verify(id))).collect();
            let text: Vec<String> = results
                .iter()
                .map(|(id, ok)| {
                    format!("{} {:<18} {}", if *ok { "PASS" } else { "FAIL" }, id.label(), id.proposition().statement())
                })
                .collect();
            let all_pass = results.iter().all(|(_, ok)| *ok);
            let json = json!({
                "results": results.iter().map(|(id, ok)| json!({
                    "id": id.label(),
                    "statement": id.proposition().statement(),
                    "conditional": id.proposition().hypothesis.is_some(),
                    "pass": ok,
                })).collect::<Vec<_>>(),
                "all_pass": all_pass,
            });
            let mut out = Output::ok(text.join("\n"), json);
            if !all_pass {
                out.code = EXIT_DOMAIN;
            }
            Ok(out)
        }
        Book2Command::Expand { expr } => {
            let p = poly(expr).map_err(|e| Failure::Usage(format!("cannot parse {expr:?}: {e}")))?;
            Ok(Output::ok(p.to_string(), json!({ "input": expr, "expanded": p.to_string() })))
        }
        Book2Command::Gnomon => {
            let steps = gnomon_chain(opts.n.unwrap_or(10) as usize)?;
            let text: Vec<String> = steps
                .iter()
                .map(|s| {
                    format!(
                        "c_{} = {}, c_{}^2 = c_{}(2c_{} + c_{}) {}",
                        s.n,
                        s.remainder,
                        s.n - 1,
                        s.n,
                        s.n - 1,
                        s.n,
                        yes(s.holds)
                    )
                })
                .collect();
            let json = json!({
                "steps": steps.iter().map(|s| json!({
                    "n": s.n, "remainder": s.remainder.to_string(), "holds": s.holds,
                })).collect::<Vec<_>>(),
            });
            Ok(Output::ok(text.join("\n"), json))
        }
    }
}

fn solutions(names: &[&str], xs: &[QuadraticSurd], opts: Opts) -> Output {
    let text: Vec<String> = names.iter().zip(xs).map(|(n, x)| format!("{n} = {x}")).collect();
    let json = json!({
        "solutions": names.iter().zip(xs).map(|(n, x)| json!({
            "name": n, "value": x.to_string(), "decimal": decimal_string(x, opts.digits),
        })).collect::<Vec<_>>(),
        "display_only": true,
    });
    Output::ok(text.join("\n"), json)
}

fn areas(c: &AreasCommand, opts: Opts) -> Outcome {
    Ok(match c {
        AreasCommand::Excess { a, area } => solutions(&["x"], &[apply_areas_excess(&rat(a)?, &rat(area)?)?], opts),
        AreasCommand::Defect { a, area } => {
            let (x1, x2) = apply_areas_defect(&rat(a)?, &rat(area)?)?;
            solutions(&["x1", "x2"], &[x1, x2], opts)
        }
        AreasCommand::MeanExtreme { a } => solutions(&["x"], &[mean_extreme(&rat(a)?)?], opts),
        AreasCommand::MeanProportional { a, b } => solutions(&["x"], &[mean_proportional(&rat(a)?, &rat(b)?)?], opts),
    })
}

fn music(steps: usize, table: bool) -> Outcome {
    // long ratios are left to the JSON output
    let interval = |i: &Interval| match i.ratio_string() {
        Some(r) if r.len() <= 24 => format!("{i} = {r}"),
        _ => i.to_string(),
    };
    if table {
        let t = philolaus_table();
        let mut lines: Vec<String> = t.intervals.iter().map(|(name, i)| format!("{name:<8} {}", interval(i))).collect();
        for r in &t.relations {
            lines.push(format!("{} = {} {}", r.whole, r.parts.join(" + "), yes(r.holds)));
        }
        let mut out = Output::ok(lines.join("\n"), t.to_json());
        if !t.all_hold() {
            out.code = EXIT_DOMAIN;
        }
        return Ok(out);
    }
    let trace = musical_anth(&Interval::octave(), &Interval::fifth(), steps)?;
    let mut lines: Vec<String> = trace
        .quotients
        .iter()
        .zip(&trace.remainders)
        .enumerate()
        .map(|(i, (k, r))| format!("step {}: quotient {k}, remainder {}", i + 1, interval(r)))
        .collect();
    lines.push(format!("quotients {}", list(&trace.quotients)));
    if trace.terminated {
        lines.push("reached the unison".into());
    }
    Ok(Output::ok(lines.join("\n"), trace.to_json()))
}

fn angle(c: &AngleCommand, opts: Opts) -> Outcome {
    match c {
        AngleCommand::Classify { a, c } => {
            let (a, c) = (num(a)?, num(c)?);
            let kind = classify_isosceles(&a, &c)?;
            let cos = apex_cosine(&a, &c)?;
            let json = json!({ "kind": kind.as_str(), "cosine": cos.to_string() });
            Ok(Output::ok(kind.to_string(), json))
        }
        AngleCommand::Omega { index: n } => {
            let kind = omega_kind(*n)?;
            Ok(Output::ok(format!("w_{n} {kind}"), json!({ "n": n, "kind": kind.as_str() })))
        }
        AngleCommand::Define { a, c, inclusive } => {
            let boundary = if *inclusive { Boundary::Inclusive } else { Boundary::Strict };
            let d = pythagorean_angle_definition(&num(a)?, &num(c)?, boundary)?;
            Ok(Output::ok(format!("{}, witness index {}", d.kind, d.witness_index), d.to_json()))
        }
        AngleCommand::Parity => {
            let n = opts.n.unwrap_or(64);
            let mut kinds = Vec::new();
            for k in 1..=n {
                kinds.push(omega_kind(k)?);
            }
            let parity =
                kinds.iter().zip(1u64..).all(|(kind, k)| kind.as_str() == if k % 2 == 1 { "Acute" } else { "Obtuse" });
            let shrinking = n < 2 || omega_convergence_check(n)?;
            let text = format!(
                "odd n acute, even n obtuse for n <= {n}: {}\n|cos w_n| decreasing: {}",
                yes(parity),
                yes(shrinking)
            );
            let json = json!({
                "n": n,
                "kinds": kinds.iter().map(|k| k.as_str()).collect::<Vec<_>>(),
                "parity": parity,
                "decreasing": shrinking,
            });
            let mut out = Output::ok(text, json);
            if !(parity && shrinking) {
                out.code = EXIT_DOMAIN;
            }
            Ok(out)
        }
        AngleCommand::Postulate4 { pairs } => {
            let content = fs::read_to_string(pairs)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", pairs.display())))?;
            let parsed = parse_pairs(&content)?;
            let ok = postulate4_check(&parsed, opts.max_steps)?;
            let text = format!("{} pairs, all [1, period(2)]: {}", parsed.len(), yes(ok));
            let mut out = Output::ok(text, json!({ "pairs": parsed.len(), "all_match": ok }));
            if !ok {
                out.code = EXIT_DOMAIN;
            }
            Ok(out)
        }
    }
}

fn parse_pairs(content: &str) -> Result<Vec<(QuadraticSurd, QuadraticSurd)>, Failure> {
    let mut out = Vec::new();
    for (i, raw) in content.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (a, b) = line
            .split_once(',')
            .ok_or_else(|| Failure::Usage(format!("line {}: expected `a, b`, got {raw:?}", i + 1)))?;
        out.push((num(a)?, num(b)?));
    }
    if out.is_empty() {
        return Err(Failure::Usage("no pairs given".into()));
    }
    Ok(out)
}
