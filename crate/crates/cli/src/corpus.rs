//! Batch corpus runner: entries are evaluated in parallel, results are
//! reassembled in input order, entries sharing a name are cross-checked
//! against each other, and explicit expectations are compared exactly.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use swforge_core::alexander::alexander;
use swforge_core::knot::parse_presentation;
use swforge_core::laurent::LaurentPoly;
use swforge_core::{Error, Result};

#[derive(Deserialize)]
struct CorpusEntry {
    name: String,
    presentation: String,
    #[serde(default)]
    expect_alex: Option<LaurentPoly>,
}

#[derive(Serialize)]
pub struct EntryReport {
    pub name: String,
    pub presentation: String,
    pub delta: LaurentPoly,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expect_match: Option<bool>,
}

#[derive(Serialize)]
pub struct RouteCheck {
    pub name: String,
    pub presentations: usize,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct CorpusReport {
    pub entries: Vec<EntryReport>,
    pub route_checks: Vec<RouteCheck>,
    pub mismatches: usize,
}

/// Structural equality after embedding both sides over the union variable
/// set, so a constant over {} equals the same constant over {t}.
fn same_poly(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    if a == b {
        return true;
    }
    let u = a.vars().union(b.vars());
    match (a.embed(&u), b.embed(&u)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

pub fn run(path: &str) -> Result<CorpusReport> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read corpus `{path}`: {e}")))?;
    let raw: Vec<serde_json::Value> = serde_json::from_str(&text)
        .map_err(|e| Error::Wire(format!("corpus `{path}` is not a JSON array: {e}")))?;
    let entries: Vec<CorpusEntry> = raw
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            serde_json::from_value(v).map_err(|e| Error::Wire(format!("corpus entry {i}: {e}")))
        })
        .collect::<Result<_>>()?;

    // embarrassingly parallel per entry; collect() keeps input order
    let deltas: Vec<Result<LaurentPoly>> = entries
        .par_iter()
        .map(|en| alexander(&parse_presentation(&en.presentation)?))
        .collect();

    let mut reports = Vec::with_capacity(entries.len());
    for (i, (en, d)) in entries.iter().zip(deltas).enumerate() {
        let delta =
            d.map_err(|e| Error::Invalid(format!("corpus entry {i} ({}): {e}", en.name)))?;
        let expect_match = en.expect_alex.as_ref().map(|want| same_poly(want, &delta));
        reports.push(EntryReport {
            name: en.name.clone(),
            presentation: en.presentation.clone(),
            delta,
            expect_match,
        });
    }

    let mut groups: BTreeMap<&str, Vec<&LaurentPoly>> = BTreeMap::new();
    for r in &reports {
        groups.entry(&r.name).or_default().push(&r.delta);
    }
    let route_checks: Vec<RouteCheck> = groups
        .into_iter()
        .filter(|(_, ds)| ds.len() > 1)
        .map(|(name, ds)| RouteCheck {
            name: name.to_string(),
            presentations: ds.len(),
            agree: ds.windows(2).all(|w| same_poly(w[0], w[1])),
        })
        .collect();

    let mismatches = reports
        .iter()
        .filter(|r| r.expect_match == Some(false))
        .count()
        + route_checks.iter().filter(|c| !c.agree).count();

    Ok(CorpusReport {
        entries: reports,
        route_checks,
        mismatches,
    })
}
