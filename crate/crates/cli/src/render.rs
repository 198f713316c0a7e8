//! Plain-text tables for terminal output.

use std::fmt::Write;

use serde_json::{json, Value};
use setrep::classify::ClassificationReport;
use setrep::oracle::{DbeReport, OracleResult};
use setrep::theorems::{Tau, Theta, ThetaTauReport};
use setrep::{CategoryFlags, Graph, LineGraphMap};

pub fn line_graph_json(map: &LineGraphMap) -> Value {
    let line = &map.line;
    let edge_to_vertex: serde_json::Map<String, Value> = map
        .base
        .edges()
        .iter()
        .zip(&map.edge_to_vertex)
        .map(|(&(u, v), &x)| {
            (
                format!("{} {}", map.base.label(u), map.base.label(v)),
                json!(line.label(x)),
            )
        })
        .collect();
    json!({
        "vertices": line.labels(),
        "edges": line
            .edges()
            .iter()
            .map(|&(a, b)| json!([line.label(a), line.label(b)]))
            .collect::<Vec<_>>(),
        "edgeToVertex": edge_to_vertex,
    })
}

fn labels(g: &Graph, vs: impl IntoIterator<Item = usize>) -> String {
    let v: Vec<&str> = vs.into_iter().map(|x| g.label(x)).collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

pub fn classification_table(c: &ClassificationReport, g: &Graph) -> String {
    let mut s = String::new();
    let row = |s: &mut String, k: &str, v: String| {
        let _ = writeln!(s, "{k:<12} {v}");
    };
    row(
        &mut s,
        "graph",
        format!("{} vertices, {} edges", g.vertex_count(), g.edge_count()),
    );
    row(
        &mut s,
        "class",
        c.special_class().unwrap_or_else(|| "-".into()),
    );
    row(&mut s, "V2", labels(g, c.v2.iter().copied()));
    let vc: Vec<String> =
        c.vc.iter()
            .map(|&(v, m)| format!("{}(m={m})", g.label(v)))
            .collect();
    row(
        &mut s,
        "Vc",
        if vc.is_empty() {
            "-".into()
        } else {
            vc.join(" ")
        },
    );
    row(&mut s, "Vi", labels(g, c.vi.iter().copied()));
    let tri = |t: &[(usize, usize, usize)]| -> String {
        if t.is_empty() {
            return "-".into();
        }
        t.iter()
            .map(|&(a, b, d)| format!("{}{}{}", g.label(a), g.label(b), g.label(d)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    row(&mut s, "wings", tri(&c.wings));
    row(&mut s, "semiwings", tri(&c.semiwings));
    row(&mut s, "V3w", labels(g, c.v3w.iter().copied()));
    row(&mut s, "gamma", c.gamma.to_string());
    row(&mut s, "gamma'", c.gamma_prime.to_string());
    s
}

fn theta_text(t: &Theta) -> String {
    match t {
        Theta::Exact(v) => v.to_string(),
        Theta::OracleNeeded(why) => format!("oracle needed ({why})"),
    }
}

fn tau_text(t: &Tau) -> String {
    match t {
        Tau::Exact(v) => v.to_string(),
        Tau::Symbolic(s) => s.clone(),
        Tau::Unknown(s) => format!("unknown ({s})"),
    }
}

pub fn report_table(r: &ThetaTauReport, oracle: Option<&OracleResult>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "\n[{}]", r.category);
    let _ = writeln!(s, "{:<12} {}", "theta", theta_text(&r.theta));
    let _ = writeln!(s, "{:<12} {}", "tau", tau_text(&r.tau));
    let _ = writeln!(s, "{:<12} {}", "provenance", r.provenance);
    let _ = writeln!(
        s,
        "{:<12} {}{}",
        "witnesses",
        r.witnesses.len(),
        if r.witnesses_complete {
            ""
        } else {
            " (partial)"
        }
    );
    if let Some(o) = oracle {
        s.push_str(&oracle_table(o));
    }
    s
}

pub fn oracle_table(o: &OracleResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "\n[{} oracle]", o.category);
    let theta = match o.theta {
        Some(t) => t.to_string(),
        None => "none".into(),
    };
    let _ = writeln!(s, "{:<12} {}", "theta", theta);
    let _ = writeln!(s, "{:<12} {}", "classes", o.classes.len());
    let _ = writeln!(s, "{:<12} {}", "exhausted", o.exhausted);
    let _ = writeln!(
        s,
        "{:<12} {} nodes, {:.3}s",
        "search",
        o.stats.nodes,
        o.stats.wall_time.as_secs_f64()
    );
    for (i, rep) in o.classes.iter().enumerate() {
        let sets: Vec<String> = rep
            .labels()
            .iter()
            .zip(rep.sets())
            .map(|(l, set)| format!("{l}={set:?}"))
            .collect();
        let _ = writeln!(s, "  class {}: {}", i + 1, sets.join(" "));
    }
    s
}

pub fn verify_table(
    holds: bool,
    pair: Option<&(String, String, bool)>,
    universe: usize,
    f: &CategoryFlags,
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<12} {}", "represents", holds);
    if let Some((a, b, adjacent)) = pair {
        let why = if *adjacent {
            "adjacent but sets are disjoint"
        } else {
            "not adjacent but sets meet"
        };
        let _ = writeln!(s, "{:<12} {a} {b} ({why})", "witness");
    }
    let _ = writeln!(s, "{:<12} {}", "universe", universe);
    let _ = writeln!(
        s,
        "{:<12} s={} d={} a={} u={}",
        "flags", f.simple, f.distinct, f.antichain, f.uniform
    );
    s
}

pub fn dbe_table(r: &DbeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<16} {}", "n", r.n);
    let _ = writeln!(s, "{:<16} {}", "minimum", r.minimum);
    let _ = writeln!(s, "{:<16} {}", "equality cases", r.equality_cases);
    let _ = writeln!(s, "{:<16} {}", "near-pencils", r.near_pencils);
    let _ = writeln!(
        s,
        "{:<16} {} ({} classes)",
        "planes", r.planes, r.plane_classes
    );
    let _ = writeln!(s, "{:<16} {}", "other", r.other);
    let verdict = if r.confirmed() {
        format!(
            "minimum {}; all equality cases near-pencil or plane",
            r.minimum
        )
    } else {
        "bound violated".to_string()
    };
    let _ = writeln!(s, "{:<16} {}", "verdict", verdict);
    s
}
