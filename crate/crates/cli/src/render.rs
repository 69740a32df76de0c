use std::fmt::Write as _;

use mcomp_core::io::verdict_json;
use mcomp_core::structure::Analysis;
use mcomp_core::theory::{Kind, Verdict};
use mcomp_core::VertexSet;
use serde_json::{json, Value};

pub fn set(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn labelled(prefix: &str, sets: &[VertexSet]) -> String {
    sets.iter()
        .enumerate()
        .map(|(i, s)| format!("{prefix}{}={}", i + 1, set(s)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The verdict line, e.g. `DIVERGES period=3 case=kappa3-single(j=1)`.
pub fn verdict_line(v: &Verdict) -> String {
    match v.kind {
        Kind::Converges => format!("{} case={}", v.kind, v.case),
        Kind::Diverges => format!("{} period={} case={}", v.kind, v.period, v.case),
    }
}

pub fn classify_text(a: &Analysis, v: &Verdict) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "partite sets: {}", labelled("V", a.partite.parts()));
    let _ = writeln!(s, "components: {}", labelled("Q", a.decomposition.components()));
    match (a.t(), &a.profile, &a.head) {
        (Some(t), Some(p), Some(h)) => {
            let _ = writeln!(s, "t={} kappa={}", t + 1, p.kappa);
            let _ = writeln!(s, "imprimitivity sets: {}", labelled("U", &p.classes));
            let _ = writeln!(s, "r={} A1={} A2={}", h.r, set(&h.a1), set(&h.a2));
        }
        _ => s.push_str("t=none (every strong component is trivial)\n"),
    }
    let _ = writeln!(s, "{}", verdict_line(v));
    if let Some(n0) = v.stabilization_bound {
        let _ = writeln!(s, "certified: periodic from m={n0}");
    }
    match v.kind {
        Kind::Converges => {
            s.push_str("limit:\n");
            s.push_str(&v.graphs[0].adjacency().to_text());
        }
        Kind::Diverges => {
            for (r, g) in v.graphs.iter().enumerate() {
                let _ = writeln!(s, "m ≡ {r} (mod {}):", v.period);
                s.push_str(&g.adjacency().to_text());
            }
        }
    }
    s
}

fn lists(sets: &[VertexSet]) -> Value {
    json!(sets.iter().map(VertexSet::to_vec).collect::<Vec<_>>())
}

pub fn classify_json(a: &Analysis, v: &Verdict) -> Value {
    let mut out = json!({
        "partite_sets": lists(a.partite.parts()),
        "components": lists(a.decomposition.components()),
        "t": a.t().map(|t| t + 1),
        "verdict": verdict_json(v),
    });
    if let (Some(p), Some(h)) = (&a.profile, &a.head) {
        out["kappa"] = json!(p.kappa);
        out["imprimitivity_sets"] = lists(&p.classes);
        out["r"] = json!(h.r);
        out["a1"] = json!(h.a1.to_vec());
        out["a2"] = json!(h.a2.to_vec());
    }
    out
}
