mod args;
mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::Parser;
use serde_json::{json, Value};
use setrep::classify::classify;
use setrep::geometry::{projective_plane, puncture};
use setrep::io::{
    align_to_graph, cover_from_json, cover_to_json, dbe_to_json, load_graph_ref, oracle_to_json,
    report_to_json, representation_from_json, representation_to_json,
};
use setrep::oracle::{oracle_search, universe_bound, verify_dbe, OracleResult, SearchBudget};
use setrep::theorems::{theta_tau_linegraph, Theta};
use setrep::{
    category_flags, egp_cover, egp_set, line_graph, parse_graph, represents, Category, Error,
    Graph, Represents,
};

use args::{Args, Budget, Command};

/// Failure classes, each with its own exit code.
enum Failure {
    Input(anyhow::Error),
    NotApplicable(String),
    Budget(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::TheoremNotApplicable(what)) => Failure::NotApplicable(what.clone()),
            _ => Failure::Input(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::from(e))
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::NotApplicable(what)) => {
            eprintln!("error: TheoremNotApplicable: {what}");
            eprintln!("hint: run `setrep oracle --line-graph-of <graph>` for an exhaustive search");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(args: Args) -> Outcome {
    let json = args.json;
    match args.command {
        Command::Analyze {
            graph,
            category,
            oracle,
            budget,
        } => analyze(&graph, &category.categories(), oracle, &budget, json),
        Command::Linegraph { graph } => {
            let g = read_graph(&graph)?;
            let map = line_graph(&g)?;
            if json {
                print_json(&render::line_graph_json(&map));
            } else {
                emit(&map.line.to_edge_list());
            }
            Ok(())
        }
        Command::Witness {
            graph,
            category,
            variants,
        } => witness(&graph, &category.categories(), variants),
        Command::Verify {
            graph,
            representation,
        } => verify(&graph, &representation, json),
        Command::Oracle {
            graph,
            line_graph_of,
            category,
            budget,
        } => {
            let h = match (graph, line_graph_of) {
                (_, Some(g)) => line_graph(&read_graph(&g)?)?.line,
                (Some(h), None) => read_graph(&h)?,
                (None, None) => return Err(Failure::Input(anyhow!("no graph given"))),
            };
            let result = run_oracle(&h, category.into(), &budget)?;
            if json {
                print_json(&oracle_to_json(&result));
            } else {
                emit(&render::oracle_table(&result));
            }
            finish_oracle(&result)
        }
        Command::Planes { order, puncture: h } => {
            let plane = projective_plane(order)?;
            let out = match h {
                None => plane.to_json(),
                Some(h) => {
                    let n = plane.space().point_count();
                    let points: Vec<usize> = (n.saturating_sub(h)..n).collect();
                    puncture(&plane, &points)?.to_json()
                }
            };
            print_json(&serde_json::to_value(out).map_err(Error::from)?);
            Ok(())
        }
        Command::Egp {
            file,
            to_set,
            graph,
            ..
        } => egp(&file, to_set, graph.as_deref()),
        Command::Dbe { n, long } => {
            let r = verify_dbe(n, long)?;
            if json {
                print_json(&dbe_to_json(&r));
            } else {
                emit(&render::dbe_table(&r));
            }
            Ok(())
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("values serialize"));
    emit("\n");
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    parse_graph(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::Input)
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::Input)
}

fn to_budget(b: &Budget, default_universe: usize) -> SearchBudget {
    let mut budget = SearchBudget::new(b.max_universe.unwrap_or(default_universe));
    if let Some(s) = b.time_limit {
        budget = budget.with_time_limit(Duration::from_secs_f64(s.max(0.0)));
    }
    if let Some(n) = b.node_limit {
        budget = budget.with_node_limit(n);
    }
    budget
}

fn run_oracle(h: &Graph, cat: Category, b: &Budget) -> Result<OracleResult, Failure> {
    Ok(oracle_search(
        h,
        cat,
        &to_budget(b, universe_bound(h, cat)),
    )?)
}

fn finish_oracle(r: &OracleResult) -> Outcome {
    match (r.theta, r.exhausted) {
        (Some(_), true) => Ok(()),
        (Some(t), false) => Err(Failure::Budget(format!(
            "budget exhausted: found universe size {t} but did not finish the search"
        ))),
        (None, true) => Err(Failure::Budget(
            "no representation within the universe bound".into(),
        )),
        (None, false) => Err(Failure::Budget(
            "budget exhausted before any representation was found".into(),
        )),
    }
}

fn analyze(path: &Path, cats: &[Category], oracle: bool, b: &Budget, json: bool) -> Outcome {
    let g = read_graph(path)?;
    let report = classify(&g)?;
    let line = line_graph(&g)?.line;

    let mut entries = Vec::new();
    let mut not_applicable = Vec::new();
    for &cat in cats {
        match theta_tau_linegraph(&g, cat) {
            Ok(r) => {
                let extra = match (&r.theta, oracle) {
                    (Theta::OracleNeeded(_), true) => Some(run_oracle(&line, cat, b)?),
                    _ => None,
                };
                entries.push((Some(r), extra));
            }
            Err(Error::TheoremNotApplicable(_)) if oracle => {
                entries.push((None, Some(run_oracle(&line, cat, b)?)));
            }
            Err(Error::TheoremNotApplicable(what)) => not_applicable.push(what),
            Err(e) => return Err(e.into()),
        }
    }
    if entries.is_empty() && !not_applicable.is_empty() {
        return Err(Failure::NotApplicable(not_applicable.join(", ")));
    }

    if json {
        let reports: Vec<Value> = entries
            .iter()
            .map(|(r, o)| match (r, o) {
                (Some(r), o) => {
                    let mut v = report_to_json(r);
                    if let Some(o) = o {
                        v["oracle"] = oracle_to_json(o);
                    }
                    v
                }
                (None, Some(o)) => oracle_to_json(o),
                (None, None) => Value::Null,
            })
            .collect();
        print_json(&json!({
            "classification": report.to_json(&g),
            "reports": reports,
        }));
    } else {
        emit(&render::classification_table(&report, &g));
        for (r, o) in &entries {
            match r {
                Some(r) => emit(&render::report_table(r, o.as_ref())),
                None => emit(&o.as_ref().map(render::oracle_table).unwrap_or_default()),
            }
        }
    }
    for o in entries.iter().filter_map(|(_, o)| o.as_ref()) {
        finish_oracle(o)?;
    }
    Ok(())
}

fn witness(path: &Path, cats: &[Category], variants: bool) -> Outcome {
    let g = read_graph(path)?;
    let mut out = Vec::new();
    for &cat in cats {
        let r = theta_tau_linegraph(&g, cat)?;
        if r.witnesses.is_empty() || r.theta.exact().is_none() {
            let class = classify(&g)?
                .special_class()
                .unwrap_or_else(|| "this graph".into());
            return Err(Failure::NotApplicable(format!(
                "no witness construction for {class} in category {cat}"
            )));
        }
        if variants {
            out.push(Value::Array(
                r.witnesses.iter().map(representation_to_json).collect(),
            ));
        } else {
            out.push(representation_to_json(&r.witnesses[0]));
        }
    }
    if out.len() == 1 {
        print_json(&out[0]);
    } else {
        let keyed: serde_json::Map<String, Value> =
            cats.iter().map(|c| c.name().to_string()).zip(out).collect();
        print_json(&Value::Object(keyed));
    }
    Ok(())
}

fn verify(graph: &Path, rep_path: &Path, json: bool) -> Outcome {
    let g = read_graph(graph)?;
    let file = representation_from_json(&read_json(rep_path)?)?;
    let rep = align_to_graph(&file.rep, &g)?;
    let verdict = represents(&rep, &g)?;
    let flags = category_flags(&rep);
    let pair = match verdict {
        Represents::Yes => None,
        Represents::No {
            first,
            second,
            adjacent,
        } => Some((
            g.label(first).to_string(),
            g.label(second).to_string(),
            adjacent,
        )),
    };
    if json {
        print_json(&json!({
            "represents": verdict.holds(),
            "witnessPair": pair.as_ref().map(|(a, b, adj)| json!({
                "first": a, "second": b, "adjacent": adj,
            })),
            "universeSize": rep.universe_size(),
            "flags": flags,
            "categories": Category::ALL
                .iter()
                .filter(|c| flags.satisfies(c.required()))
                .map(|c| c.name())
                .collect::<Vec<_>>(),
        }));
    } else {
        emit(&render::verify_table(
            verdict.holds(),
            pair.as_ref(),
            rep.universe_size(),
            &flags,
        ));
    }
    Ok(())
}

fn egp(file: &Path, to_set: bool, graph: Option<&Path>) -> Outcome {
    let v = read_json(file)?;
    let dir = file
        .parent()
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("."));
    if to_set {
        let cover = cover_from_json(&v, Some(&dir))?;
        let rep = egp_set(&cover)?;
        let mut out =
            representation_to_json(&rep.with_vertex_labels(cover.base().labels().to_vec())?);
        if let Some(g) = v.get("graph") {
            out["graph"] = g.clone();
        }
        print_json(&out);
    } else {
        let file_rep = representation_from_json(&v)?;
        let g = match (graph, &file_rep.graph) {
            (Some(p), _) => read_graph(p)?,
            (None, Some(r)) => load_graph_ref(r, Some(&dir))?,
            (None, None) => {
                return Err(Failure::Input(anyhow!(
                    "representation names no graph; pass --graph"
                )))
            }
        };
        let rep = align_to_graph(&file_rep.rep, &g)?;
        let cover = egp_cover(&rep, &g)?;
        print_json(&cover_to_json(&cover));
    }
    Ok(())
}
