//! JSON encodings of representations, covers and reports.

use std::collections::BTreeSet;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::cover::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::{parse_graph, Graph};
use crate::oracle::{DbeReport, OracleResult};
use crate::representation::SetRepresentation;
use crate::theorems::{Tau, Theta, ThetaTauReport};

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

/// `{"universe": [...], "sets": {"<label>": [...]}}`, sets in vertex order.
pub fn representation_to_json(rep: &SetRepresentation) -> Value {
    let mut sets = Map::new();
    for (label, s) in rep.labels().iter().zip(rep.sets()) {
        sets.insert(label.clone(), json!(s));
    }
    json!({ "universe": rep.universe(), "sets": sets })
}

/// A decoded representation file.
#[derive(Debug, Clone)]
pub struct RepresentationFile {
    pub rep: SetRepresentation,
    /// The optional `"graph"` path.
    pub graph: Option<String>,
}

fn element_list(v: &Value, what: &str) -> Result<Vec<u32>> {
    let arr = v
        .as_array()
        .ok_or_else(|| domain(format!("{what} must be an array of integers")))?;
    arr.iter()
        .map(|x| {
            x.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| domain(format!("{what} contains a non-integer element {x}")))
        })
        .collect()
}

/// Parses representation JSON. A `"universe"` field, when present, must
/// equal the union of the sets.
pub fn representation_from_json(v: &Value) -> Result<RepresentationFile> {
    let sets = v
        .get("sets")
        .and_then(Value::as_object)
        .ok_or_else(|| domain("representation needs a \"sets\" object"))?;
    let mut labels = Vec::with_capacity(sets.len());
    let mut family = Vec::with_capacity(sets.len());
    for (label, s) in sets {
        labels.push(label.clone());
        family.push(element_list(s, &format!("set of {label}"))?);
    }
    let rep = SetRepresentation::with_labels(labels, family)?;
    if let Some(u) = v.get("universe") {
        let declared: BTreeSet<u32> = element_list(u, "universe")?.into_iter().collect();
        let actual: BTreeSet<u32> = rep.universe().into_iter().collect();
        if declared != actual {
            return Err(domain(format!(
                "declared universe has {} elements but the sets use {}",
                declared.len(),
                actual.len()
            )));
        }
    }
    let graph = match v.get("graph") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(domain("\"graph\" must be a string")),
    };
    Ok(RepresentationFile { rep, graph })
}

/// Reorders the sets of `rep` to follow the vertex order of `g`, matching by label.
pub fn align_to_graph(rep: &SetRepresentation, g: &Graph) -> Result<SetRepresentation> {
    if rep.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            found: rep.len(),
        });
    }
    let mut sets = Vec::with_capacity(rep.len());
    for label in g.labels() {
        let i = rep
            .labels()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| domain(format!("no set given for vertex {label}")))?;
        sets.push(rep.set(i).to_vec());
    }
    SetRepresentation::with_labels(g.labels().to_vec(), sets)
}

/// `{"graph": "<edge list>", "cliques": [[labels]]}` with the graph inline.
pub fn cover_to_json(cover: &CliqueCover) -> Value {
    json!({
        "graph": cover.base().to_edge_list(),
        "cliques": cover.clique_labels(),
    })
}

/// Parses cover JSON. `"graph"` is an inline edge list when it contains a
/// line break, otherwise a path resolved against `base_dir`.
pub fn cover_from_json(v: &Value, base_dir: Option<&Path>) -> Result<CliqueCover> {
    let graph = v
        .get("graph")
        .and_then(Value::as_str)
        .ok_or_else(|| domain("cover needs a \"graph\" string"))?;
    let g = load_graph_ref(graph, base_dir)?;
    let cliques = v
        .get("cliques")
        .and_then(Value::as_array)
        .ok_or_else(|| domain("cover needs a \"cliques\" array"))?;
    let mut labelled = Vec::with_capacity(cliques.len());
    for c in cliques {
        let c = c
            .as_array()
            .ok_or_else(|| domain("each clique must be an array of labels"))?;
        let mut out = Vec::with_capacity(c.len());
        for x in c {
            out.push(match x {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                other => return Err(domain(format!("bad vertex label {other}"))),
            });
        }
        labelled.push(out);
    }
    CliqueCover::from_labels(g, &labelled)
}

/// Loads a graph given inline or as a path.
pub fn load_graph_ref(graph: &str, base_dir: Option<&Path>) -> Result<Graph> {
    if graph.contains('\n') {
        return parse_graph(graph);
    }
    let path = match base_dir {
        Some(dir) => dir.join(graph),
        None => graph.into(),
    };
    parse_graph(&std::fs::read_to_string(path)?)
}

fn theta_json(t: &Theta) -> Value {
    match t {
        Theta::Exact(v) => json!({ "exact": v }),
        Theta::OracleNeeded(why) => json!({ "oracleNeeded": why }),
    }
}

fn tau_json(t: &Tau) -> Value {
    match t {
        Tau::Exact(v) => json!({ "exact": v }),
        Tau::Symbolic(s) => json!({ "symbolic": s }),
        Tau::Unknown(s) => json!({ "unknown": s }),
    }
}

pub fn report_to_json(r: &ThetaTauReport) -> Value {
    json!({
        "category": r.category,
        "theta": theta_json(&r.theta),
        "tau": tau_json(&r.tau),
        "provenance": r.provenance,
        "witnesses": r.witnesses.iter().map(representation_to_json).collect::<Vec<_>>(),
        "witnessesComplete": r.witnesses_complete,
    })
}

/// Oracle results in the report shape. θ and τ are exact only when the
/// search exhausted its budget's universe range.
pub fn oracle_to_json(r: &OracleResult) -> Value {
    let theta = match (r.theta, r.exhausted) {
        (Some(t), true) => json!({ "exact": t }),
        (Some(t), false) => json!({ "atMost": t }),
        (None, true) => json!({ "none": "no representation within the universe bound" }),
        (None, false) => json!({ "unknown": "budget exhausted" }),
    };
    let tau = match (r.tau(), r.exhausted) {
        (Some(t), true) => json!({ "exact": t }),
        (Some(t), false) => json!({ "atLeast": t }),
        (None, _) => json!({ "unknown": "no representation found" }),
    };
    json!({
        "category": r.category,
        "theta": theta,
        "tau": tau,
        "provenance": "oracle",
        "witnesses": r.classes.iter().map(representation_to_json).collect::<Vec<_>>(),
        "exhausted": r.exhausted,
        "statistics": {
            "nodes": r.stats.nodes,
            "wallTimeMs": r.stats.wall_time.as_millis() as u64,
        },
    })
}

pub fn dbe_to_json(r: &DbeReport) -> Value {
    json!({
        "n": r.n,
        "minimum": r.minimum,
        "equalityCases": r.equality_cases,
        "nearPencils": r.near_pencils,
        "planes": r.planes,
        "other": r.other,
        "planeClasses": r.plane_classes,
        "confirmed": r.confirmed(),
    })
}
