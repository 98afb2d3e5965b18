//! JSON and markdown renderings of the driver reports. Key order and row
//! order are fixed, so repeated runs are byte-identical.

use std::fmt::Write;

use hecke_b2::catalog::Entry;
use hecke_b2::driver::{CatalogReport, Claim, Classification, FactorReport};
use hecke_b2::hecke::Parameters;
use hecke_b2::module::{Character, WeightDecomposition};
use hecke_b2::Q;
use serde_json::{json, Value};

use crate::Format;

fn params_json(p: &Parameters<Q>) -> Value {
    json!({ "p": p.p().to_string(), "q": p.q().to_string() })
}

fn weights_json(ws: &[((Q, Q), usize)]) -> Value {
    ws.iter()
        .map(|((a, b), n)| json!({ "weight": format!("({a}, {b})"), "multiplicity": n }))
        .collect()
}

fn factor_report_json(r: &FactorReport<Q>) -> Value {
    json!({
        "character": r.character,
        "chi": r.chi.to_string(),
        "params": params_json(r.chi.params()),
        "P_chi": r.pchi_labels(),
        "factors": r.factors.iter().map(|f| json!({
            "label": f.label,
            "dim": f.dim,
            "calibrated": f.calibrated,
            "irreducible": f.irreducible,
            "weights": weights_json(&f.weights),
        })).collect::<Vec<_>>(),
        "trace_vector": r.trace_vector.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "certified": r.certified,
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn mark(b: bool) -> &'static str {
    if b {
        "○"
    } else {
        "×"
    }
}

pub fn classification(c: &Classification<Q>, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "report": c.title,
            "regime": c.regime.name(),
            "relation": c.regime.relation(),
            "params": params_json(&c.params),
            "v": c.v.to_string(),
            "u": c.u.to_string(),
            "passed": c.passed(),
            "rows": c.rows.iter().map(|r| {
                let mut v = factor_report_json(&r.report);
                v["mismatches"] = json!(r.mismatches);
                v
            }).collect::<Vec<_>>(),
        })),
        Format::Markdown => {
            let mut s = String::new();
            let _ = writeln!(s, "# {} ({})\n", c.title, c.regime.relation());
            let _ = writeln!(s, "{}, v = {}, u = {}\n", c.params, c.v, c.u);
            let _ = writeln!(
                s,
                "| character | (X1, X2) | P(chi) | factor | dim | calibrated | certified |"
            );
            let _ = writeln!(s, "|---|---|---|---|---|---|---|");
            for row in &c.rows {
                let r = &row.report;
                for (k, f) in r.factors.iter().enumerate() {
                    let (name, chi, pchi, cert) = if k == 0 {
                        (
                            r.character.clone(),
                            r.chi.to_string(),
                            format!("{{{}}}", r.pchi_labels().join(", ")),
                            mark(r.certified).to_string(),
                        )
                    } else {
                        Default::default()
                    };
                    let _ = writeln!(
                        s,
                        "| {name} | {chi} | {pchi} | {} | {} | {} | {cert} |",
                        f.label,
                        f.dim,
                        mark(f.calibrated)
                    );
                }
            }
            let bad: Vec<_> = c.rows.iter().filter(|r| !r.passed()).collect();
            if bad.is_empty() {
                let _ = writeln!(s, "\nAll {} rows match the expected table.", c.rows.len());
            } else {
                let _ = writeln!(s, "\nMismatches:\n");
                for r in bad {
                    for m in &r.mismatches {
                        let _ = writeln!(s, "- {}: {m}", r.report.character);
                    }
                }
            }
            s
        }
    }
}

fn claim_text(c: &Claim) -> String {
    match c {
        Claim::Irreducible { calibrated } => {
            format!(
                "irreducible, {}calibrated",
                if *calibrated { "" } else { "non-" }
            )
        }
        Claim::Reducible { into_one_dim: true } => "reducible into 1-dim factors".to_string(),
        Claim::Reducible {
            into_one_dim: false,
        } => "reducible".to_string(),
        Claim::IsomorphicTo { label, .. } => format!("isomorphic to {label}"),
    }
}

pub fn catalog_report(r: &CatalogReport<Q>, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "report": "catalog verification",
            "regime": r.regime.name(),
            "params": params_json(&r.params),
            "passed": r.passed(),
            "entries": r.entries.iter().map(|e| json!({
                "label": e.label,
                "dim": e.dim,
                "relations": e.relations,
                "failures": e.failures,
                "irreducible": e.irreducible,
                "envelope_dim": e.envelope_dim,
                "calibrated": e.calibrated,
                "claim": claim_text(&e.claim),
                "factors": e.factor_labels,
                "ok": e.ok,
            })).collect::<Vec<_>>(),
            "exact_sequences": r.ses.iter().map(|s| json!({
                "character": s.character,
                "subalgebra": s.subalgebra,
                "surjection": s.surjection,
                "injection": s.injection,
                "dims": [s.dims.0, s.dims.1],
                "ok": s.ok,
            })).collect::<Vec<_>>(),
        })),
        Format::Markdown => {
            let mut s = String::new();
            let _ = writeln!(s, "# catalog verification, regime {}\n", r.regime);
            let _ = writeln!(s, "{}\n", r.params);
            let _ = writeln!(
                s,
                "| entry | dim | relations | envelope | calibrated | claim | factors | ok |"
            );
            let _ = writeln!(s, "|---|---|---|---|---|---|---|---|");
            for e in &r.entries {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} | {} | {} |",
                    e.label,
                    e.dim,
                    mark(e.relations),
                    e.envelope_dim,
                    e.calibrated.map(mark).unwrap_or("-"),
                    claim_text(&e.claim),
                    e.factor_labels.join(", "),
                    mark(e.ok)
                );
            }
            let _ = writeln!(
                s,
                "\n| character | subalgebra | M → Ind rho_1 | Ind rho_2 → M | dims | ok |"
            );
            let _ = writeln!(s, "|---|---|---|---|---|---|");
            for q in &r.ses {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {}+{} | {} |",
                    q.character,
                    q.subalgebra,
                    mark(q.surjection),
                    mark(q.injection),
                    q.dims.0,
                    q.dims.1,
                    mark(q.ok)
                );
            }
            let _ = writeln!(
                s,
                "\n{}",
                if r.passed() {
                    "All checks pass."
                } else {
                    "Some checks FAILED."
                }
            );
            s
        }
    }
}

pub fn catalog_dump(entries: &[(String, Entry<Q>)], format: Format) -> String {
    let values: Vec<Value> = entries
        .iter()
        .map(|(label, e)| match e {
            Entry::Module(m) => {
                let mut v = serde_json::to_value(m.to_json()).expect("serializable");
                v["label"] = json!(label);
                v
            }
            Entry::Rep(r) => json!({
                "label": label,
                "subalgebra": r.subalgebra().index(),
                "params": params_json(r.params()),
                "X1": r.x1().to_string(),
                "X2": r.x2().to_string(),
                "T": r.t().to_string(),
            }),
        })
        .collect();
    match format {
        Format::Json => pretty(&Value::Array(values)),
        Format::Markdown => {
            let mut s = String::from("# catalog\n");
            for v in values {
                let _ = writeln!(s, "\n## {}\n", v["label"].as_str().unwrap_or_default());
                let obj = v.as_object().expect("object");
                for (k, x) in obj {
                    if k == "label" {
                        continue;
                    }
                    let text = match x {
                        Value::String(t) => t.clone(),
                        other => other.to_string(),
                    };
                    let _ = writeln!(s, "- {k}: `{text}`");
                }
            }
            s
        }
    }
}

pub fn weights(
    name: &str,
    chi: &Character<Q>,
    wd: &WeightDecomposition<Q>,
    format: Format,
) -> String {
    match format {
        Format::Json => pretty(&json!({
            "character": name,
            "chi": chi.to_string(),
            "params": params_json(chi.params()),
            "calibrated": wd.is_calibrated(),
            "weights": wd.spaces.iter().map(|w| json!({
                "weight": w.weight.to_string(),
                "eigen_dim": w.eig_dim,
                "generalized_dim": w.gen_dim,
            })).collect::<Vec<_>>(),
        })),
        Format::Markdown => {
            let mut s = String::new();
            let _ = writeln!(s, "# weights of M({name}), chi = {chi}\n");
            let _ = writeln!(s, "{}\n", chi.params());
            let _ = writeln!(s, "| weight | eigenspace dim | generalized dim |");
            let _ = writeln!(s, "|---|---|---|");
            for w in &wd.spaces {
                let _ = writeln!(s, "| {} | {} | {} |", w.weight, w.eig_dim, w.gen_dim);
            }
            let _ = writeln!(s, "\ncalibrated: {}", mark(wd.is_calibrated()));
            s
        }
    }
}
