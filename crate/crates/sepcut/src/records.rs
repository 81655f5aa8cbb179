//! JSON records printed by the command-line tool. Exact rationals are
//! strings `"p/q"` (or plain integers) so nothing passes through floats.

use serde::Serialize;
use serde_json::{json, Value};

use sepcut_core::cuts::Certificate;
use sepcut_core::separators::SeparatorReport;
use sepcut_core::{Budget, Graph, Rational, VertexSet};

use crate::io::encode_graph6;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn rational(r: Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts `p/q`, integers and terminating decimals such as `0.25`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let bad = || format!("not a non-negative rational: {s:?}");
    if let Some((p, q)) = s.split_once('/') {
        let (p, q): (u64, u64) = (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
        if q == 0 {
            return Err("zero denominator".into());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let den = 10u64.pow(frac.len() as u32);
        let num: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let whole = int.checked_mul(den).and_then(|w| w.checked_add(num)).ok_or_else(bad)?;
        return Ok(Rational::new(whole, den));
    }
    s.parse().map(Rational::from_integer).map_err(|_| bad())
}

pub fn budget(b: &Budget) -> Value {
    json!({ "search_nodes": b.search_nodes, "separators": b.separators })
}

pub fn set(x: &VertexSet) -> Vec<usize> {
    x.to_vec()
}

pub fn report(r: &SeparatorReport) -> Value {
    json!({
        "x": set(&r.x),
        "witness": [set(&r.witness.0), set(&r.witness.1)],
        "chi": r.chi_x,
        "omega": r.omega_x,
        "degeneracy": r.degeneracy_x,
    })
}

/// Provenance written next to every constructed graph.
#[derive(Debug, Serialize)]
pub struct Sidecar {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: &'static str,
    pub family: String,
    pub params: Value,
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub average_degree: Option<String>,
    pub graph6: String,
}

impl Sidecar {
    pub fn new(family: &str, params: Value, seed: Option<u64>, g: &Graph) -> Self {
        Sidecar {
            tool: "sepcut",
            version: VERSION,
            subcommand: "construct",
            family: family.into(),
            params,
            seed,
            n: g.order(),
            m: g.size(),
            average_degree: g.average_degree().ok().map(rational),
            graph6: encode_graph6(g),
        }
    }
}

/// Record for a graph with no qualifying cut, or one whose search was cut short.
#[derive(Debug, Serialize)]
pub struct CertificateRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub mode: String,
    pub property: String,
    pub verdict: &'static str,
    pub witness_or_attestation: Value,
    pub seed: Option<u64>,
}

impl CertificateRecord {
    pub fn counterexample(c: &Certificate, mode: &str, seed: Option<u64>) -> Self {
        let per_separator: Vec<Value> =
            c.separator_chi.iter().map(|(x, chi)| json!({ "x": set(x), "chi": chi })).collect();
        CertificateRecord {
            graph6: encode_graph6(&c.graph),
            n: c.graph.order(),
            m: c.graph.size(),
            mode: mode.into(),
            property: format!("chi_lt({})", c.k),
            verdict: "no_cut_exhaustive",
            witness_or_attestation: json!({
                "exhaustive": true,
                "minimal_separators_examined": c.separators_examined,
                "separator_chi": per_separator,
            }),
            seed,
        }
    }

    pub fn unknown(g: &Graph, property: String, reason: &str, mode: &str, seed: Option<u64>) -> Self {
        CertificateRecord {
            graph6: encode_graph6(g),
            n: g.order(),
            m: g.size(),
            mode: mode.into(),
            property,
            verdict: "unknown",
            witness_or_attestation: json!({ "exhaustive": false, "reason": reason }),
            seed,
        }
    }

    pub fn no_cut(g: &Graph, property: String, examined: usize, mode: &str) -> Self {
        CertificateRecord {
            graph6: encode_graph6(g),
            n: g.order(),
            m: g.size(),
            mode: mode.into(),
            property,
            verdict: "no_cut_exhaustive",
            witness_or_attestation: json!({ "exhaustive": true, "minimal_separators_examined": examined }),
            seed: None,
        }
    }
}
