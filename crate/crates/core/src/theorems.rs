//! Closed-form θ and τ for complete graphs and line graphs, with explicit
//! witness representations.

use std::collections::BTreeMap;

use crate::canon::canonical_form;
use crate::classify::{classify, ClassificationReport, PeacockKind};
use crate::cover::{egp_set, CliqueCover};
use crate::error::{Error, Result};
use crate::geometry::{
    fls_to_cover, n_pp, near_pencil, order_for, projective_plane, puncture, silly_partition,
    PlaneCount,
};
use crate::graph::{line_graph, Graph};
use crate::representation::{Category, SetRepresentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Theta {
    Exact(usize),
    OracleNeeded(String),
}

impl Theta {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Theta::Exact(t) => Some(*t),
            Theta::OracleNeeded(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tau {
    Exact(u64),
    /// A formula in the unknown plane counts `N_PP(n)`.
    Symbolic(String),
    Unknown(String),
}

impl Tau {
    pub fn exact(&self) -> Option<u64> {
        match self {
            Tau::Exact(t) => Some(*t),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ThetaTauReport {
    pub category: Category,
    pub theta: Theta,
    pub tau: Tau,
    pub provenance: String,
    /// Representations of the target graph, pairwise non-isomorphic.
    pub witnesses: Vec<SetRepresentation>,
    /// Whether `witnesses` has one member per class counted by `tau`.
    pub witnesses_complete: bool,
}

/// `a + N_PP(n)`, exact when the plane count is known.
fn plus_npp(a: u64, n: usize) -> Tau {
    match n_pp(n) {
        PlaneCount::Count(c) => Tau::Exact(a + c as u64),
        PlaneCount::Unknown if a == 0 => Tau::Symbolic(format!("N_PP({n})")),
        PlaneCount::Unknown => Tau::Symbolic(format!("{a} + N_PP({n})")),
    }
}

fn check_category(cat: Category) -> Result<()> {
    match cat {
        Category::Sd | Category::Sa | Category::Sdu => Ok(()),
        other => Err(Error::Unsupported(format!(
            "no closed form for category {other}"
        ))),
    }
}

/// Desarguesian planes on `n` points that can be built here.
fn constructible_planes(n: usize) -> Vec<CliqueCover> {
    order_for(n)
        .and_then(|r| projective_plane(r).ok())
        .map(|p| vec![fls_to_cover(p.space())])
        .unwrap_or_default()
}

fn n_pp_count(n: usize) -> Option<u32> {
    n_pp(n).known()
}

fn image(cover: &CliqueCover) -> SetRepresentation {
    egp_set(cover).expect("covers built here reach every vertex")
}

/// Witnesses for `K_n` together with whether they exhaust the classes.
fn complete_witnesses(n: usize, cat: Category, theta: usize) -> (Vec<SetRepresentation>, bool) {
    let mut out = Vec::new();
    let planes = constructible_planes(n);
    let all_planes = n_pp_count(n).is_some_and(|c| c as usize == planes.len());
    match cat {
        Category::Sd => {
            if n >= 3 {
                out.push(image(&fls_to_cover(&near_pencil(n).expect("n >= 3"))));
                out.extend(planes.iter().map(image));
            }
            if n >= 2 {
                out.push(image(&silly_partition(n).expect("n >= 2")));
            } else {
                out.push(SetRepresentation::new(vec![vec![1]]).expect("nonempty"));
            }
            (out, n >= 3 && all_planes)
        }
        Category::Sa => {
            if n >= 3 {
                out.push(image(&fls_to_cover(&near_pencil(n).expect("n >= 3"))));
                out.extend(planes.iter().map(image));
            }
            (out, n >= 3 && all_planes)
        }
        _ => {
            if n == 3 {
                out.push(image(&fls_to_cover(&near_pencil(3).expect("n = 3"))));
                return (out, true);
            }
            if theta == n {
                out.extend(planes.iter().map(image));
                return (out, all_planes);
            }
            // n + 1 elements: one common element plus a monopolist each.
            let sets = (0..n as u32).map(|i| vec![1, i + 2]).collect();
            out.push(SetRepresentation::new(sets).expect("nonempty"));
            let bigger = constructible_planes(n + 1);
            let all_bigger = n_pp_count(n + 1).is_some_and(|c| c as usize == bigger.len());
            if let Some(p) = order_for(n + 1).and_then(|r| projective_plane(r).ok()) {
                let space = puncture(&p, &[n]).expect("one point");
                out.push(image(&fls_to_cover(&space)));
            }
            (out, all_bigger)
        }
    }
}

/// θ and τ of the complete graph `K_n`.
pub fn theta_tau_complete(n: usize, cat: Category) -> Result<ThetaTauReport> {
    check_category(cat)?;
    if n == 0 {
        return Err(Error::Domain("K_0 has no representation".into()));
    }
    let small = || Tau::Unknown("formula needs n >= 3; run the oracle".into());
    let (theta, tau, provenance) = match cat {
        Category::Sd => (
            Theta::Exact(n),
            if n >= 3 { plus_npp(2, n) } else { small() },
            "complete-sd",
        ),
        Category::Sa if n >= 3 => (Theta::Exact(n), plus_npp(1, n), "complete-sa"),
        Category::Sa => (
            Theta::OracleNeeded("formula needs n >= 3".into()),
            small(),
            "complete-sa",
        ),
        _ if n == 3 => (Theta::Exact(3), Tau::Exact(1), "complete-sdu"),
        _ if n < 3 => (
            Theta::OracleNeeded("formula needs n >= 3".into()),
            small(),
            "complete-sdu",
        ),
        _ => match n_pp(n) {
            PlaneCount::Count(c) if c >= 1 => {
                (Theta::Exact(n), Tau::Exact(c as u64), "complete-sdu-plane")
            }
            PlaneCount::Count(_) => (
                Theta::Exact(n + 1),
                plus_npp(1, n + 1),
                "complete-sdu-extended",
            ),
            PlaneCount::Unknown => (
                Theta::OracleNeeded(format!(
                    "existence of a projective plane on {n} points is open"
                )),
                Tau::Symbolic(format!(
                    "N_PP({n}) if N_PP({n}) > 0, else 1 + N_PP({})",
                    n + 1
                )),
                "complete-sdu",
            ),
        },
    };
    let (witnesses, complete) = match theta.exact() {
        Some(t) => complete_witnesses(n, cat, t),
        None => (Vec::new(), false),
    };
    let complete = complete && tau.exact() == Some(witnesses.len() as u64);
    Ok(ThetaTauReport {
        category: cat,
        theta,
        tau,
        provenance: provenance.into(),
        witnesses,
        witnesses_complete: complete,
    })
}

/// Edge bookkeeping for building cliques of `G*`.
struct Edges {
    line: Graph,
    incident: Vec<Vec<usize>>,
    index: BTreeMap<(usize, usize), usize>,
}

impl Edges {
    fn new(g: &Graph) -> Result<Self> {
        let line = line_graph(g)?.line;
        let mut incident = vec![Vec::new(); g.vertex_count()];
        let mut index = BTreeMap::new();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            incident[u].push(e);
            incident[v].push(e);
            index.insert((u.min(v), u.max(v)), e);
        }
        Ok(Edges {
            line,
            incident,
            index,
        })
    }

    fn edge(&self, u: usize, v: usize) -> usize {
        self.index[&(u.min(v), u.max(v))]
    }

    fn cover(&self, cliques: Vec<Vec<usize>>) -> SetRepresentation {
        image(&CliqueCover::new(self.line.clone(), cliques).expect("cliques of the line graph"))
    }
}

fn not_applicable(g: &Graph, what: &str) -> Error {
    Error::TheoremNotApplicable(format!(
        "{what} ({} vertices, {} edges)",
        g.vertex_count(),
        g.edge_count()
    ))
}

fn sd_scope(g: &Graph) -> Result<ClassificationReport> {
    let c = classify(g)?;
    let excluded = c.is_k3
        || c.is_k4
        || c.windmill_t.is_some()
        || c.is_3k2_join_k1
        || c.star_center.is_some()
        || c.peacock
            .as_ref()
            .is_some_and(|p| p.kind == PeacockKind::TP1);
    if excluded {
        return Err(not_applicable(
            g,
            &c.special_class().expect("excluded class"),
        ));
    }
    Ok(c)
}

fn sa_scope(g: &Graph) -> Result<ClassificationReport> {
    let c = classify(g)?;
    let excluded = c.is_k3
        || c.is_k4
        || c.windmill_t.is_some()
        || c.star_center.is_some()
        || c.peacock.is_some();
    if excluded {
        return Err(not_applicable(
            g,
            &c.special_class().expect("excluded class"),
        ));
    }
    Ok(c)
}

fn pendant_edges(g: &Graph, e: &Edges, v: usize) -> Vec<usize> {
    e.incident[v]
        .iter()
        .copied()
        .filter(|&x| {
            let (a, b) = g.edges()[x];
            g.deg(a) == 1 || g.deg(b) == 1
        })
        .collect()
}

/// Saturated-star cliques for every vertex of degree at least 2, plus
/// `m_i - drop` monopolist cliques on the pendant edges of each critical vertex.
fn star_cover(g: &Graph, c: &ClassificationReport, e: &Edges, drop: usize) -> Vec<Vec<usize>> {
    let mut cliques: Vec<Vec<usize>> = c.v2.iter().map(|&v| e.incident[v].clone()).collect();
    for &(v, m) in &c.vc {
        let pend = pendant_edges(g, e, v);
        cliques.extend(pend.iter().take(m - drop).map(|&x| vec![x]));
    }
    cliques
}

/// Minimum simple-distinct representation of `G*` with universe size γ.
pub fn witness_sd(g: &Graph) -> Result<SetRepresentation> {
    let c = sd_scope(g)?;
    let e = Edges::new(g)?;
    Ok(e.cover(star_cover(g, &c, &e, 1)))
}

/// One representation per subset of 3-wing stalks, each stalk's wing
/// re-covered by a triangle and two edges. Isomorphic results are kept once.
pub fn witness_sd_variants(g: &Graph) -> Result<Vec<SetRepresentation>> {
    let c = sd_scope(g)?;
    let e = Edges::new(g)?;
    let base = star_cover(g, &c, &e, 1);
    let wing_of = |v: usize| {
        c.wings
            .iter()
            .find(|w| w.0 == v)
            .copied()
            .expect("3-wing stalk has a wing")
    };
    let mut out = Vec::with_capacity(1 << c.v3w.len());
    for mask in 0u32..(1 << c.v3w.len()) {
        let chosen: Vec<usize> = (0..c.v3w.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| c.v3w[i])
            .collect();
        let mut replaced = Vec::new();
        let mut extra = Vec::new();
        for &v in &chosen {
            let (_, x, y) = wing_of(v);
            let z = g
                .neighbor_set(v)
                .ones()
                .find(|&w| w != x && w != y)
                .expect("stalk has a third neighbor");
            let (vx, vy, vz, xy) = (e.edge(v, x), e.edge(v, y), e.edge(v, z), e.edge(x, y));
            replaced.extend([v, x, y]);
            extra.push(vec![vx, vy, xy]);
            extra.push(vec![vx, vz]);
            extra.push(vec![vy, vz]);
        }
        let star_cliques = c.v2.len();
        let cliques: Vec<Vec<usize>> = base
            .iter()
            .enumerate()
            .filter(|&(i, _)| i >= star_cliques || !replaced.contains(&c.v2[i]))
            .map(|(_, q)| q.clone())
            .chain(extra)
            .collect();
        out.push(e.cover(cliques));
    }
    Ok(distinct_classes(out))
}

/// Minimum simple-antichain representation of `G*` with universe size γ′.
pub fn witness_sa(g: &Graph) -> Result<SetRepresentation> {
    let c = sa_scope(g)?;
    let e = Edges::new(g)?;
    Ok(e.cover(star_cover(g, &c, &e, 0)))
}

/// Vertices whose star admits alternative covers: `m = 2, d = 3` or
/// `m >= 3, d = m + 1`.
fn qualifying(g: &Graph, c: &ClassificationReport) -> Vec<(usize, usize)> {
    c.vc.iter()
        .copied()
        .filter(|&(v, m)| m >= 2 && g.deg(v) == m + 1)
        .collect()
}

/// Ways to cover the star of a qualifying vertex `v` (the clique `K_{m+1}`
/// on its edges) together with the monopolists on its pendant edges.
fn star_options(g: &Graph, e: &Edges, v: usize, m: usize) -> Vec<Vec<Vec<usize>>> {
    let pend = pendant_edges(g, e, v);
    let f = *e.incident[v]
        .iter()
        .find(|x| !pend.contains(x))
        .expect("one non-pendant edge");
    let mut opts = Vec::new();
    let mut full = vec![e.incident[v].clone()];
    full.extend(pend.iter().map(|&x| vec![x]));
    opts.push(full);

    let pencil = |hub: usize, rest: &[usize]| {
        let mut q = vec![rest.to_vec()];
        q.extend(rest.iter().map(|&x| vec![x, hub]));
        q
    };
    opts.push(pencil(f, &pend));
    if m >= 3 {
        let hub = pend[m - 1];
        let mut rest = pend[..m - 1].to_vec();
        rest.push(f);
        opts.push(pencil(hub, &rest));
    }
    let points: Vec<usize> = pend.iter().copied().chain([f]).collect();
    for plane in constructible_planes(m + 1) {
        opts.push(
            plane
                .cliques()
                .iter()
                .map(|l| l.iter().map(|&p| points[p]).collect())
                .collect(),
        );
    }
    opts
}

/// The alternatives behind `τ_sa(G*)`: one representation per combination of
/// star covers at the qualifying vertices. Isomorphic results are kept once.
pub fn witness_sa_variants(g: &Graph) -> Result<Vec<SetRepresentation>> {
    let c = sa_scope(g)?;
    let e = Edges::new(g)?;
    let qual = qualifying(g, &c);
    let fixed: Vec<Vec<usize>> = {
        let q: Vec<usize> = qual.iter().map(|&(v, _)| v).collect();
        let mut cl: Vec<Vec<usize>> =
            c.v2.iter()
                .filter(|v| !q.contains(v))
                .map(|&v| e.incident[v].clone())
                .collect();
        for &(v, m) in c.vc.iter().filter(|(v, _)| !q.contains(v)) {
            cl.extend(pendant_edges(g, &e, v).into_iter().take(m).map(|x| vec![x]));
        }
        cl
    };
    let options: Vec<Vec<Vec<Vec<usize>>>> = qual
        .iter()
        .map(|&(v, m)| star_options(g, &e, v, m))
        .collect();
    let mut combos: Vec<Vec<Vec<usize>>> = vec![fixed];
    for opts in &options {
        let mut next = Vec::with_capacity(combos.len() * opts.len());
        for base in &combos {
            for o in opts {
                let mut cl = base.clone();
                cl.extend(o.iter().cloned());
                next.push(cl);
            }
        }
        combos = next;
    }
    Ok(distinct_classes(
        combos.into_iter().map(|cl| e.cover(cl)).collect(),
    ))
}

/// Keeps the first representation of each isomorphism class.
fn distinct_classes(reps: Vec<SetRepresentation>) -> Vec<SetRepresentation> {
    let mut seen = std::collections::BTreeSet::new();
    reps.into_iter()
        .filter(|r| seen.insert(canonical_form(r)))
        .collect()
}

fn relabel(reps: Vec<SetRepresentation>, line: &Graph) -> Vec<SetRepresentation> {
    reps.into_iter()
        .map(|r| {
            r.with_vertex_labels(line.labels().to_vec())
                .expect("same vertex count")
        })
        .collect()
}

/// `2^x · ∏ (3 + N_PP(m_i + 1))` over the qualifying vertices.
fn sa_generic_tau(g: &Graph, c: &ClassificationReport) -> Tau {
    let mut exact: u64 = 1;
    let mut unknown = Vec::new();
    for (_, m) in qualifying(g, c) {
        if m == 2 {
            exact *= 2;
        } else {
            match n_pp(m + 1) {
                PlaneCount::Count(k) => exact *= 3 + k as u64,
                PlaneCount::Unknown => unknown.push(format!("(3 + N_PP({}))", m + 1)),
            }
        }
    }
    if unknown.is_empty() {
        Tau::Exact(exact)
    } else {
        Tau::Symbolic(format!("{exact} * {}", unknown.join(" * ")))
    }
}

/// θ and τ of the line graph `G*` of a connected graph `G`.
pub fn theta_tau_linegraph(g: &Graph, cat: Category) -> Result<ThetaTauReport> {
    check_category(cat)?;
    let c = classify(g)?;
    let line = line_graph(g)?.line;

    if c.star_center.is_some() || c.is_k3 {
        let n = g.edge_count();
        let mut r = theta_tau_complete(n, cat)?;
        r.witnesses = relabel(r.witnesses, &line);
        r.provenance = format!(
            "linegraph-{}/{}",
            if c.is_k3 { "k3" } else { "star" },
            r.provenance
        );
        return Ok(r);
    }

    let special = c.special_class();
    let needed = |why: &str| Theta::OracleNeeded(why.to_string());
    let report = |theta, tau, provenance: &str, witnesses: Vec<SetRepresentation>| {
        let tau_ok = match (&tau, theta_is_exact(&theta)) {
            (Tau::Exact(t), true) => *t == witnesses.len() as u64,
            _ => false,
        };
        Ok(ThetaTauReport {
            category: cat,
            theta,
            tau,
            provenance: provenance.to_string(),
            witnesses_complete: tau_ok,
            witnesses,
        })
    };

    match cat {
        Category::Sd => {
            let special_tau = if c.is_3k2_join_k1 {
                Some(3)
            } else if c.is_k4
                || c.windmill_t.is_some()
                || c.peacock
                    .as_ref()
                    .is_some_and(|p| p.kind == PeacockKind::TP1)
            {
                Some(2)
            } else {
                None
            };
            if let Some(t) = special_tau {
                let class = special.unwrap_or_default();
                return report(
                    needed(&format!("no closed form for {class}")),
                    Tau::Exact(t),
                    "linegraph-sd-special",
                    Vec::new(),
                );
            }
            let variants = witness_sd_variants(g)?;
            report(
                Theta::Exact(c.gamma),
                Tau::Exact(1u64 << c.v3w.len()),
                "linegraph-sd-generic",
                variants,
            )
        }
        Category::Sa => {
            if let Some(p) = &c.peacock {
                let tau = match (p.kind, p.plume_counts.as_slice()) {
                    (PeacockKind::TP2, &[m1, m2]) if m1 >= 2 && m2 >= 2 => {
                        if m1 != m2 {
                            5
                        } else {
                            4
                        }
                    }
                    (PeacockKind::TP2, &[m1, 1]) if m1 >= 2 => 3,
                    _ => 2,
                };
                return report(
                    needed(&format!("no closed form for {}", p.kind.name())),
                    Tau::Exact(tau),
                    "linegraph-sa-peacock",
                    Vec::new(),
                );
            }
            if c.is_k4 || c.windmill_t.is_some() {
                let class = special.unwrap_or_default();
                return report(
                    needed(&format!("no closed form for {class}")),
                    Tau::Exact(2),
                    "linegraph-sa-special",
                    Vec::new(),
                );
            }
            let tau = sa_generic_tau(g, &c);
            let variants = witness_sa_variants(g)?;
            report(
                Theta::Exact(c.gamma_prime),
                tau,
                "linegraph-sa-generic",
                variants,
            )
        }
        _ => {
            let two = c.is_k4
                || c.windmill_t == Some(2)
                || c.peacock
                    .as_ref()
                    .is_some_and(|p| p.kind == PeacockKind::TP1 && p.plume_counts == [1]);
            report(
                needed("no closed form for θ_sdu outside complete graphs"),
                Tau::Exact(if two { 2 } else { 1 }),
                if two {
                    "linegraph-sdu-special"
                } else {
                    "linegraph-sdu-generic"
                },
                Vec::new(),
            )
        }
    }
}

fn theta_is_exact(t: &Theta) -> bool {
    matches!(t, Theta::Exact(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::representation::{category_flags, represents};

    fn g(text: &str) -> Graph {
        parse_graph(text).unwrap()
    }

    #[test]
    fn complete_values() {
        let r = theta_tau_complete(7, Category::Sd).unwrap();
        assert_eq!((r.theta, r.tau.clone()), (Theta::Exact(7), Tau::Exact(3)));
        assert_eq!(r.witnesses.len(), 3);
        let r = theta_tau_complete(5, Category::Sa).unwrap();
        assert_eq!((r.theta, r.tau), (Theta::Exact(5), Tau::Exact(1)));
        let r = theta_tau_complete(4, Category::Sdu).unwrap();
        assert_eq!((r.theta, r.tau), (Theta::Exact(5), Tau::Exact(1)));
        let r = theta_tau_complete(7, Category::Sdu).unwrap();
        assert_eq!((r.theta, r.tau), (Theta::Exact(7), Tau::Exact(1)));
        let r = theta_tau_complete(133, Category::Sd).unwrap();
        assert_eq!(r.tau, Tau::Symbolic("2 + N_PP(133)".into()));
    }

    #[test]
    fn complete_witnesses_are_valid() {
        for n in 3..=8 {
            for cat in [Category::Sd, Category::Sa, Category::Sdu] {
                let r = theta_tau_complete(n, cat).unwrap();
                let k = Graph::complete(n);
                for w in &r.witnesses {
                    assert!(represents(w, &k).unwrap().holds());
                    assert!(category_flags(w).satisfies(cat.required()), "{cat} K{n}");
                    assert_eq!(Some(w.universe_size()), r.theta.exact());
                }
                if r.witnesses_complete {
                    assert_eq!(Some(r.witnesses.len() as u64), r.tau.exact());
                }
            }
        }
    }

    #[test]
    fn p4_witnesses() {
        let p4 = Graph::path(4);
        let sd = witness_sd(&p4).unwrap();
        assert_eq!(sd.universe_size(), 2);
        let sa = witness_sa(&p4).unwrap();
        assert_eq!(sa.universe_size(), 4);
        assert!(category_flags(&sa).antichain);
        assert_eq!(witness_sd_variants(&p4).unwrap().len(), 1);
        assert_eq!(witness_sa_variants(&p4).unwrap().len(), 1);
    }

    #[test]
    fn excluded_classes() {
        assert!(matches!(
            witness_sd(&Graph::complete(4)),
            Err(Error::TheoremNotApplicable(s)) if s.starts_with("K4")
        ));
        let tp2 = g("5 5\na b\nb c\na c\na p\nb q");
        assert!(
            matches!(witness_sa(&tp2), Err(Error::TheoremNotApplicable(s)) if s.starts_with("TP2"))
        );
    }

    #[test]
    fn one_three_wing() {
        let h = g("5 5\nv x\nx y\nv y\nv a\na b");
        let vs = witness_sd_variants(&h).unwrap();
        assert_eq!(vs.len(), 2);
        assert!(crate::canon::isomorphic(&vs[0], &vs[1]).is_none());
        let r = theta_tau_linegraph(&h, Category::Sd).unwrap();
        assert_eq!((r.theta, r.tau), (Theta::Exact(4), Tau::Exact(2)));
    }

    #[test]
    fn peacock_table() {
        let tp2 = |m1: usize, m2: usize| {
            let mut edges = vec!["a b", "b c", "a c"]
                .into_iter()
                .map(String::from)
                .collect::<Vec<_>>();
            edges.extend((0..m1).map(|i| format!("a p{i}")));
            edges.extend((0..m2).map(|i| format!("b q{i}")));
            g(&format!(
                "{} {}\n{}",
                3 + m1 + m2,
                edges.len(),
                edges.join("\n")
            ))
        };
        for ((m1, m2), want) in [((2, 3), 5), ((2, 2), 4), ((2, 1), 3), ((1, 1), 2)] {
            let r = theta_tau_linegraph(&tp2(m1, m2), Category::Sa).unwrap();
            assert_eq!(r.tau, Tau::Exact(want));
        }
    }
}
