//! JSON and text renderings of a [`Report`].

use fpi_core::classify::{CanonicalOutcome, Report, Verdict};
use fpi_core::gfpoly::Polynomial;
use fpi_core::ring::RingSpec;
use fpi_core::AlgebraError;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

fn poly_str(r: &RingSpec, f: &Polynomial) -> Value {
    Value::String(r.display_poly(f))
}

fn polys(r: &RingSpec, fs: &[Polynomial]) -> Value {
    Value::Array(fs.iter().map(|f| poly_str(r, f)).collect())
}

fn verdict_value(v: Verdict) -> Value {
    match v {
        Verdict::True => Value::Bool(true),
        Verdict::False => Value::Bool(false),
        Verdict::Inconclusive => Value::String("inconclusive".into()),
    }
}

pub fn ring_json(r: &RingSpec) -> Value {
    json!({
        "p": r.p(),
        "vars": r.vars(),
        "ideal": polys(r, r.ideal().generators()),
        "label": r.label(),
        "display": r.to_string(),
    })
}

/// The report as a JSON object with a fixed key order.
pub fn report_json(rep: &Report) -> Value {
    let r = &rep.ring;
    let mut out = Map::new();
    out.insert("schema".into(), json!(SCHEMA_VERSION));
    out.insert("ring".into(), ring_json(r));
    out.insert("dimension".into(), json!(rep.dimension));
    out.insert("depth".into(), json!(rep.depth));
    out.insert("cohen_macaulay".into(), json!(rep.cohen_macaulay));
    out.insert("gorenstein".into(), rep.gorenstein.as_ref().map_or(Value::Null, |g| json!(g.gorenstein)));
    out.insert(
        "gorenstein_witness".into(),
        rep.gorenstein.as_ref().map_or(Value::Null, |g| {
            json!({
                "nonzerodivisor": g.nonzerodivisor.as_ref().map(|l| poly_str(r, l)),
                "socle_dimension": g.socle_dimension,
                "second_reduction": g.second_reduction.as_ref().map(|(l, s)| json!({
                    "nonzerodivisor": poly_str(r, l),
                    "socle_dimension": s,
                })),
            })
        }),
    );
    out.insert("f_pure".into(), rep.f_pure.as_ref().map_or(Value::Null, |w| json!(w.f_pure)));
    out.insert(
        "f_pure_witness".into(),
        rep.f_pure.as_ref().map_or(Value::Null, |w| {
            json!({
                "colon_element": w.witness.as_ref().map(|f| poly_str(r, f)),
                "terms_outside_frobenius_maximal": w.surviving_terms.as_ref().map(|f| poly_str(r, f)),
                "principal_power": w.principal_power.as_ref().map(|f| poly_str(r, f)),
                "colon_generators": polys(r, &w.colon_generators),
            })
        }),
    );
    out.insert(
        "canonical_ideal".into(),
        match &rep.canonical {
            None => Value::Null,
            Some(CanonicalOutcome::Found(c)) => json!({
                "status": "found",
                "generators": polys(r, &c.generators),
                "embedding_degree": c.degree,
                "trials": c.trials,
                "reduction_certificate": {
                    "nonzerodivisor": poly_str(r, &c.certificate.nonzerodivisor),
                    "verdict": format!("{:?}", c.certificate.verdict).to_lowercase(),
                },
            }),
            Some(CanonicalOutcome::Missing { decisive, reason }) => json!({
                "status": if *decisive { "absent" } else { "inconclusive" },
                "reason": reason,
            }),
        },
    );
    out.insert("weakly_fpi".into(), rep.weakly_fpi.as_ref().map_or(Value::Null, |f| verdict_value(f.verdict)));
    out.insert(
        "weakly_fpi_witness".into(),
        rep.weakly_fpi.as_ref().map_or(Value::Null, |f| {
            json!({
                "method": f.method.to_string(),
                "reason": f.reason,
                "canonical_ideal": polys(r, &f.canonical_generators),
                "multiplier": f.multiplier.as_ref().map(|(h, g)| json!({ "h": poly_str(r, h), "f": poly_str(r, g) })),
                "frobenius_hull_dimension": f.frobenius_hull_dims.map(|(a, _)| a),
                "hull_dimension": f.frobenius_hull_dims.map(|(_, b)| b),
            })
        }),
    );
    out.insert("minimal_primes".into(), json!(rep.minimal_primes));
    out.insert(
        "cross_checks".into(),
        Value::Array(
            rep.cross_checks
                .iter()
                .map(|c| json!({ "name": c.name, "status": c.status.to_string(), "detail": c.detail }))
                .collect(),
        ),
    );
    out.insert("notes".into(), json!(rep.notes));
    Value::Object(out)
}

pub fn error_json(e: &AlgebraError) -> Value {
    let kind = format!("{:?}", e);
    let kind = kind.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("").to_string();
    json!({ "schema": SCHEMA_VERSION, "error": { "kind": kind, "message": e.to_string() } })
}

/// A plain-text rendering, one field per line.
pub fn report_text(rep: &Report) -> String {
    let r = &rep.ring;
    let mut lines = vec![format!("ring: {}", r)];
    if let Some(l) = r.label() {
        lines.push(format!("label: {}", l));
    }
    lines.push(format!("dimension: {}", rep.dimension));
    lines.push(format!("depth: {}", rep.depth));
    lines.push(format!("cohen_macaulay: {}", rep.cohen_macaulay));
    if let Some(g) = &rep.gorenstein {
        let mut s = format!("gorenstein: {}", g.gorenstein);
        if let Some(sd) = g.socle_dimension {
            s.push_str(&format!(" (socle dimension {}", sd));
            if let Some(l) = &g.nonzerodivisor {
                s.push_str(&format!(" modulo {}", r.display_poly(l)));
            }
            s.push(')');
        }
        lines.push(s);
    }
    if let Some(w) = &rep.f_pure {
        let mut s = format!("f_pure: {}", w.f_pure);
        if let Some(g) = &w.witness {
            s.push_str(&format!(" (witness {})", r.display_poly(g)));
        }
        lines.push(s);
    }
    match &rep.canonical {
        Some(CanonicalOutcome::Found(c)) => {
            let gens: Vec<String> = c.generators.iter().map(|g| r.display_poly(g)).collect();
            lines.push(format!("canonical_ideal: ({})", gens.join(", ")));
        }
        Some(CanonicalOutcome::Missing { reason, .. }) => lines.push(format!("canonical_ideal: none ({})", reason)),
        None => {}
    }
    if let Some(f) = &rep.weakly_fpi {
        lines.push(format!("weakly_fpi: {} [{}] {}", f.verdict, f.method, f.reason));
        if let Some((h, g)) = &f.multiplier {
            lines.push(format!("multiplier: h = {}, f = {}", r.display_poly(h), r.display_poly(g)));
        }
    }
    if let Some(k) = rep.minimal_primes {
        lines.push(format!("minimal_primes: {}", k));
    }
    for c in &rep.cross_checks {
        lines.push(format!("check {}: {} ({})", c.name, c.status, c.detail));
    }
    for n in &rep.notes {
        lines.push(format!("note: {}", n));
    }
    lines.join("\n") + "\n"
}
