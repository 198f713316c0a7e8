//! Structural classification of a base graph `G`: the special classes the
//! line-graph formulas exclude, plus critical/inland vertices, wings and γ.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeacockKind {
    TP1,
    TP2,
    TPd1,
    TPd2,
}

impl PeacockKind {
    pub fn name(self) -> &'static str {
        match self {
            PeacockKind::TP1 => "TP1",
            PeacockKind::TP2 => "TP2",
            PeacockKind::TPd1 => "TPd1",
            PeacockKind::TPd2 => "TPd2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peacock {
    pub kind: PeacockKind,
    /// Tailed vertices, most plumes first.
    pub tailed: Vec<usize>,
    /// Plume counts of `tailed`, in the same (descending) order.
    pub plume_counts: Vec<usize>,
    /// `t` of the underlying `W_t` for diamond-backs.
    pub t: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub is_k3: bool,
    pub is_k4: bool,
    pub windmill_t: Option<usize>,
    pub is_3k2_join_k1: bool,
    pub star_center: Option<usize>,
    pub peacock: Option<Peacock>,
    /// Vertices of degree at least 2.
    pub v2: Vec<usize>,
    /// Critical vertices with their number of degree-1 neighbors.
    pub vc: Vec<(usize, usize)>,
    pub vi: Vec<usize>,
    /// `(stalk, x, y)` with `d(stalk) > 2` and `d(x) = d(y) = 2`.
    pub wings: Vec<(usize, usize, usize)>,
    /// `(w, u, v)` with `w` the only degree-2 vertex of the triangle.
    pub semiwings: Vec<(usize, usize, usize)>,
    pub v3w: Vec<usize>,
    pub gamma: usize,
    pub gamma_prime: usize,
}

impl ClassificationReport {
    /// Name of the special class `G` belongs to, if any.
    pub fn special_class(&self) -> Option<String> {
        if self.is_k3 {
            Some("K3".into())
        } else if self.is_k4 {
            Some("K4".into())
        } else if let Some(t) = self.windmill_t {
            Some(format!("W{t}"))
        } else if self.star_center.is_some() {
            Some("star".into())
        } else if self.is_3k2_join_k1 {
            Some("3K2vK1".into())
        } else {
            self.peacock.as_ref().map(|p| p.kind.name().to_string())
        }
    }

    pub fn m_of(&self, v: usize) -> usize {
        self.vc
            .iter()
            .find(|&&(c, _)| c == v)
            .map_or(0, |&(_, m)| m)
    }

    /// JSON with vertex labels of `g` in place of indices.
    pub fn to_json(&self, g: &Graph) -> Value {
        let l = |v: usize| Value::String(g.label(v).to_string());
        let ls = |vs: &[usize]| Value::Array(vs.iter().map(|&v| l(v)).collect());
        let triple = |&(a, b, c): &(usize, usize, usize)| json!([l(a), l(b), l(c)]);
        json!({
            "isK3": self.is_k3,
            "isK4": self.is_k4,
            "windmillT": self.windmill_t,
            "is3K2JoinK1": self.is_3k2_join_k1,
            "starCenter": self.star_center.map(l),
            "peacock": self.peacock.as_ref().map(|p| json!({
                "kind": p.kind.name(),
                "tailed": ls(&p.tailed),
                "plumeCounts": p.plume_counts,
                "t": p.t,
            })),
            "V2": ls(&self.v2),
            "Vc": self.vc.iter().map(|&(v, m)| json!({"vertex": l(v), "m": m})).collect::<Vec<_>>(),
            "Vi": ls(&self.vi),
            "wings": self.wings.iter().map(triple).collect::<Vec<_>>(),
            "semiwings": self.semiwings.iter().map(triple).collect::<Vec<_>>(),
            "V3w": ls(&self.v3w),
            "gamma": self.gamma,
            "gammaPrime": self.gamma_prime,
        })
    }
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        let (a, b) = (a.min(b), a.max(b));
        let mut common = g.neighbor_set(a).clone();
        common.intersect_with(g.neighbor_set(b));
        out.extend(common.ones().filter(|&c| c > b).map(|c| [a, b, c]));
    }
    out.sort_unstable();
    out
}

pub fn find_wings(g: &Graph) -> Vec<(usize, usize, usize)> {
    triangles(g)
        .into_iter()
        .filter_map(|t| {
            let big: Vec<usize> = t.iter().copied().filter(|&v| g.deg(v) > 2).collect();
            let small: Vec<usize> = t.iter().copied().filter(|&v| g.deg(v) == 2).collect();
            (big.len() == 1 && small.len() == 2).then(|| (big[0], small[0], small[1]))
        })
        .collect()
}

pub fn find_semiwings(g: &Graph) -> Vec<(usize, usize, usize)> {
    triangles(g)
        .into_iter()
        .filter_map(|t| {
            let small: Vec<usize> = t.iter().copied().filter(|&v| g.deg(v) == 2).collect();
            let rest: Vec<usize> = t.iter().copied().filter(|&v| g.deg(v) != 2).collect();
            (small.len() == 1).then(|| (small[0], rest[0], rest[1]))
        })
        .collect()
}

fn is_complete(g: &Graph, n: usize) -> bool {
    g.vertex_count() == n && g.edge_count() == n * (n - 1) / 2
}

/// `t` when `g` is `W_t = tK1 ∨ K2` with `t >= 2`.
fn windmill(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 4 || g.edge_count() != 2 * (n - 2) + 1 {
        return None;
    }
    base_edge(g, n - 2)
}

/// The base edge `ab` of a `W_t`: both endpoints adjacent to every other
/// vertex, all others of degree 2. Returns `t`.
fn base_edge(g: &Graph, t: usize) -> Option<usize> {
    let hubs: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.deg(v) == t + 1)
        .collect();
    if hubs.len() != 2 || !g.has_edge(hubs[0], hubs[1]) {
        return None;
    }
    let ok = (0..g.vertex_count())
        .filter(|v| !hubs.contains(v))
        .all(|v| g.deg(v) == 2 && g.has_edge(v, hubs[0]) && g.has_edge(v, hubs[1]));
    ok.then_some(t)
}

fn is_3k2_join_k1(g: &Graph) -> bool {
    if g.vertex_count() != 7 || g.edge_count() != 9 {
        return false;
    }
    let centers: Vec<usize> = (0..7).filter(|&v| g.deg(v) == 6).collect();
    centers.len() == 1 && (0..7).all(|v| v == centers[0] || g.deg(v) == 2)
}

fn star_center(g: &Graph) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| g.deg(v) == g.edge_count())
}

fn peacock(g: &Graph) -> Option<Peacock> {
    let n = g.vertex_count();
    let plume = |v: usize| g.deg(v) == 1;
    let residue: Vec<usize> = (0..n).filter(|&v| !plume(v)).collect();
    if residue.len() == n {
        return None;
    }
    let mut plumes_on = vec![0usize; n];
    for v in (0..n).filter(|&v| plume(v)) {
        let w = g.neighbor_set(v).ones().next()?;
        if plume(w) {
            return None;
        }
        plumes_on[w] += 1;
    }
    let inner = |v: usize| g.deg(v) - plumes_on[v];
    let residue_edges = g
        .edges()
        .iter()
        .filter(|&&(a, b)| !plume(a) && !plume(b))
        .count();
    let mut tailed: Vec<usize> = residue
        .iter()
        .copied()
        .filter(|&v| plumes_on[v] > 0)
        .collect();
    tailed.sort_by_key(|&v| (std::cmp::Reverse(plumes_on[v]), v));
    let plume_counts: Vec<usize> = tailed.iter().map(|&v| plumes_on[v]).collect();

    let r = residue.len();
    if r == 3 && residue_edges == 3 {
        let kind = match tailed.len() {
            1 => PeacockKind::TP1,
            2 => PeacockKind::TP2,
            _ => return None,
        };
        return Some(Peacock {
            kind,
            tailed,
            plume_counts,
            t: None,
        });
    }
    if r >= 4 && residue_edges == 2 * (r - 2) + 1 {
        let t = r - 2;
        let hubs: Vec<usize> = residue
            .iter()
            .copied()
            .filter(|&v| inner(v) == t + 1)
            .collect();
        if hubs.len() != 2 || !g.has_edge(hubs[0], hubs[1]) {
            return None;
        }
        let shaped = residue.iter().filter(|v| !hubs.contains(v)).all(|&v| {
            inner(v) == 2 && plumes_on[v] == 0 && g.has_edge(v, hubs[0]) && g.has_edge(v, hubs[1])
        });
        if !shaped {
            return None;
        }
        let kind = if tailed.len() == 1 {
            PeacockKind::TPd1
        } else {
            PeacockKind::TPd2
        };
        return Some(Peacock {
            kind,
            tailed,
            plume_counts,
            t: Some(t),
        });
    }
    None
}

/// Classifies a connected graph with at least one edge.
pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    if g.edge_count() == 0 {
        return Err(Error::Domain("graph has no edges".into()));
    }
    if !g.is_connected() {
        return Err(Error::Domain("graph is not connected".into()));
    }
    let n = g.vertex_count();
    let is_k3 = is_complete(g, 3);
    let is_k4 = is_complete(g, 4);
    let windmill_t = windmill(g);
    let star_center = star_center(g);
    let is_3k2 = is_3k2_join_k1(g);
    let special = is_k3 || is_k4 || windmill_t.is_some() || star_center.is_some() || is_3k2;
    let peacock = if special { None } else { peacock(g) };

    let v2: Vec<usize> = (0..n).filter(|&v| g.deg(v) >= 2).collect();
    let mut vc = Vec::new();
    let mut vi = Vec::new();
    for &v in &v2 {
        let m = g.neighbor_set(v).ones().filter(|&w| g.deg(w) == 1).count();
        if m > 0 {
            vc.push((v, m));
        } else {
            vi.push(v);
        }
    }
    let wings = find_wings(g);
    let mut v3w: Vec<usize> = wings
        .iter()
        .map(|w| w.0)
        .filter(|&s| g.deg(s) == 3)
        .collect();
    v3w.dedup();
    let gamma = vi.len() + vc.iter().map(|&(_, m)| m).sum::<usize>();
    Ok(ClassificationReport {
        is_k3,
        is_k4,
        windmill_t,
        is_3k2_join_k1: is_3k2,
        star_center,
        peacock,
        gamma_prime: gamma + vc.len(),
        v2,
        vc,
        vi,
        semiwings: find_semiwings(g),
        wings,
        v3w,
        gamma,
    })
}
