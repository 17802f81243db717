//! Human-readable views of the certificate JSON.

use std::fmt::Write;

use serde_json::Value;

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Bool(b) => if *b { "yes" } else { "no" }.to_string(),
        Value::Array(items) => format!(
            "{{{}}}",
            items.iter().map(text).collect::<Vec<_>>().join(", ")
        ),
        Value::Object(map) => match (map.get("representative"), map.get("modulus")) {
            (Some(rep), Some(m)) => format!("{} mod ({})", text(rep), text(m)),
            _ => v.to_string(),
        },
        Value::Number(n) => n.to_string(),
    }
}

fn outcome_line(label: &str, outcome: &Value, out: &mut String) {
    let status = text(&outcome["status"]);
    match status.as_str() {
        "success" => {
            let _ = writeln!(out, "{label}: success");
            for (key, value) in outcome.as_object().into_iter().flatten() {
                if key != "status" {
                    let _ = writeln!(out, "  {key}: {}", text(value));
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{label}: {status} ({})", text(&outcome["reason"]));
        }
    }
}

/// Text report for one certificate, built from its JSON form.
pub fn render_text(cert: &Value) -> String {
    let mut out = String::new();
    if !cert["parameter_n"].is_null() {
        let _ = writeln!(out, "parameter n: {}", text(&cert["parameter_n"]));
    }
    let _ = writeln!(out, "r(z) = {}", text(&cert["r"]));

    let classes = cert["pole_classes"].as_array().cloned().unwrap_or_default();
    if classes.is_empty() {
        let _ = writeln!(out, "pole classes: none");
    } else {
        let _ = writeln!(out, "pole classes:");
        for class in &classes {
            let _ = write!(
                out,
                "  [{}]  order {}  roots {}",
                text(&class["factor"]),
                text(&class["order"]),
                text(&class["root_count"])
            );
            for key in ["alpha", "beta", "delta"] {
                if !class[key].is_null() {
                    let _ = write!(out, "  {key} {}", text(&class[key]));
                }
            }
            if class["resolved"] == Value::Bool(false) {
                let _ = write!(out, "  (unresolved)");
            }
            out.push('\n');
        }
    }
    let _ = writeln!(
        out,
        "o(inf) = max(0, 4 + deg R - deg S): {}",
        text(&cert["o_infinity_paper"])
    );
    let _ = writeln!(
        out,
        "order at infinity, deg S - deg R: {}",
        text(&cert["order_at_infinity"])
    );
    let _ = writeln!(out, "m+: {}", text(&cert["m_plus"]));
    let _ = writeln!(out, "gamma: {}", text(&cert["gamma"]));

    let filter = &cert["case_filter"];
    let _ = writeln!(out, "allowed cases: {}", text(&filter["allowed"]));
    for line in filter["reasons"].as_array().into_iter().flatten() {
        let _ = writeln!(out, "  {}", text(line));
    }
    for line in filter["notes"].as_array().into_iter().flatten() {
        let _ = writeln!(out, "  note: {}", text(line));
    }

    if let Some(exps) = cert["exponent_sets"].as_object() {
        let _ = writeln!(out, "exponent sets:");
        for class in exps["per_class"].as_array().into_iter().flatten() {
            let _ = write!(
                out,
                "  E[{}] = {}",
                text(&class["factor"]),
                text(&class["values"])
            );
            if !class["undecided"].is_null() {
                let _ = write!(out, "  (undecided: {})", text(&class["undecided"]));
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "  E[inf] = {} (summed), {} (classic)",
            text(&exps["at_infinity_summed"]),
            text(&exps["at_infinity_classic"])
        );
    }

    outcome_line("case 1", &cert["case1"], &mut out);
    let case2 = &cert["case2"];
    outcome_line("case 2", &case2["outcome"], &mut out);
    if case2["outcome"]["status"] != "filtered" {
        let _ = writeln!(
            out,
            "  root-level assignments: {}, parity shortcut: {}",
            text(&case2["assignment_count"]),
            text(&case2["parity_shortcut"])
        );
        if let Some(ex) = case2["exhaustive"].as_object() {
            let _ = writeln!(
                out,
                "  enumerated {} assignments; integer d: {} (summed), {} (classic)",
                text(&ex["assignments"]),
                text(&ex["integer_d_summed"]),
                text(&ex["integer_d_classic"])
            );
        }
        let candidates = case2["candidates"].as_array().map_or(0, Vec::len);
        let _ = writeln!(out, "  candidates with d in N: {candidates}");
    }

    let _ = writeln!(
        out,
        "verdict: {} ({})",
        text(&cert["verdict"]),
        text(&cert["verdict_reason"])
    );
    if !cert["conclusion"].is_null() {
        let _ = writeln!(out, "conclusion: {}", text(&cert["conclusion"]));
    }
    out
}

/// `n`, `gamma` and verdict per certificate; gamma is `-` when there are no finite poles.
pub fn render_summary(certs: &[Value]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>4}  {:>6}  verdict", "n", "gamma");
    for cert in certs {
        let no_poles = cert["pole_classes"].as_array().map_or(true, Vec::is_empty);
        let gamma = if no_poles {
            "-".to_string()
        } else {
            text(&cert["gamma"])
        };
        let _ = writeln!(
            out,
            "{:>4}  {:>6}  {}",
            text(&cert["parameter_n"]),
            gamma,
            text(&cert["verdict"])
        );
    }
    out
}
