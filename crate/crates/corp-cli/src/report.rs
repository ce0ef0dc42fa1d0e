//! JSON report serialization with a fixed key order and 17-significant-digit
//! reals, so identical inputs yield byte-identical documents. Handwritten
//! instead of a serializer because those two guarantees are the whole point;
//! infinities (possible under the logarithmic rule) become the strings
//! "inf"/"-inf".

use corp::{ReliabilityDiagram, ResolvedBandMethod, ScoreDecomposition, ScoringRule};

pub fn number(x: f64) -> String {
    if x.is_infinite() {
        if x > 0.0 {
            "\"inf\"".to_string()
        } else {
            "\"-inf\"".to_string()
        }
    } else {
        format!("{x:.16e}")
    }
}

pub fn rule_name(rule: ScoringRule) -> &'static str {
    match rule {
        ScoringRule::Brier => "brier",
        ScoringRule::Logarithmic => "log",
        ScoringRule::MisclassificationError => "misclass",
        ScoringRule::Elementary { .. } => "elementary",
    }
}

fn method_name(method: ResolvedBandMethod) -> &'static str {
    match method {
        ResolvedBandMethod::Resampling => "resampling",
        ResolvedBandMethod::AsymptoticDiscrete => "asymptotic-discrete",
        ResolvedBandMethod::AsymptoticContinuous => "asymptotic-continuous",
    }
}

fn push_decomposition(out: &mut String, d: &ScoreDecomposition) {
    out.push_str(&format!(
        "{{\"rule\":\"{}\",\"mean_score\":{},\"mcb\":{},\"dsc\":{},\"unc\":{}}}",
        rule_name(d.rule),
        number(d.mean_score),
        number(d.mcb),
        number(d.dsc),
        number(d.unc),
    ));
}

fn push_number_array(out: &mut String, values: &[f64]) {
    out.push('[');
    for (i, &v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&number(v));
    }
    out.push(']');
}

/// The full diagram report. Key order is part of the format.
pub fn diagram_report(diagram: &ReliabilityDiagram) -> String {
    let mut out = String::new();
    out.push_str("{\"schema\":\"corp/1\"");
    out.push_str(&format!(",\"n\":{}", diagram.n));
    out.push_str(&format!(",\"k\":{}", diagram.points.len()));
    out.push_str(&format!(
        ",\"mode\":\"{}\"",
        match diagram.mode {
            corp::DiagramMode::Discrete => "discrete",
            corp::DiagramMode::Continuous => "continuous",
        }
    ));

    out.push_str(",\"points\":[");
    for (i, p) in diagram.points.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "{{\"forecast\":{},\"calibrated\":{}}}",
            number(p.forecast),
            number(p.calibrated)
        ));
    }
    out.push(']');

    out.push_str(",\"bins\":[");
    for (i, b) in diagram.bins.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "{{\"lower\":{},\"upper\":{},\"calibrated\":{},\"count\":{},\"events\":{}}}",
            number(b.lower),
            number(b.upper),
            number(b.calibrated),
            b.count,
            b.events
        ));
    }
    out.push(']');

    out.push_str(",\"histogram\":[");
    for (i, b) in diagram.histogram.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "{{\"lower\":{},\"upper\":{},\"count\":{}}}",
            number(b.lower),
            number(b.upper),
            b.count
        ));
    }
    out.push(']');

    if let Some(band) = &diagram.band {
        out.push_str(&format!(
            ",\"band\":{{\"method\":\"{}\",\"level\":{},\"lower\":",
            method_name(band.method_used),
            number(band.level)
        ));
        push_number_array(&mut out, &band.lower);
        out.push_str(",\"upper\":");
        push_number_array(&mut out, &band.upper);
        out.push('}');
    }

    out.push_str(",\"decomposition\":");
    push_decomposition(&mut out, &diagram.annotation);
    out.push_str("}\n");
    out
}

/// Standalone decomposition report for the `decompose` subcommand.
pub fn decomposition_report(n: usize, d: &ScoreDecomposition) -> String {
    let mut out = String::new();
    out.push_str(&format!("{{\"schema\":\"corp/1\",\"n\":{n},\"decomposition\":"));
    push_decomposition(&mut out, d);
    out.push_str("}\n");
    out
}
