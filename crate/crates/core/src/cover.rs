//! Edge-clique covers and partitions, and the correspondence between covers
//! and set representations (one universe element per clique).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::representation::{represents, Represents, SetRepresentation};

/// An ordered multiset of cliques of `base`. Single-vertex cliques are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    base: Graph,
    cliques: Vec<Vec<usize>>,
}

/// What is wrong with a clique family as a cover or partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverDefect {
    UncoveredVertex(usize),
    UncoveredEdge(usize, usize),
    DoublyCoveredEdge(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverReport {
    pub is_cover: bool,
    pub is_partition: bool,
    pub trivial_count: usize,
    /// First uncovered vertex or edge; if the family is a cover, the first
    /// edge lying in two cliques.
    pub offending: Option<CoverDefect>,
}

impl CliqueCover {
    /// Wraps a clique family; every member must be a nonempty clique of `base`.
    pub fn new(base: Graph, cliques: Vec<Vec<usize>>) -> Result<Self> {
        let n = base.vertex_count();
        let mut clean = Vec::with_capacity(cliques.len());
        for mut c in cliques {
            c.sort_unstable();
            c.dedup();
            if c.is_empty() {
                return Err(Error::Domain("empty clique".into()));
            }
            if let Some(&x) = c.iter().find(|&&x| x >= n) {
                return Err(Error::VertexOutOfRange { index: x, count: n });
            }
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    if !base.has_edge(u, v) {
                        return Err(Error::InvalidClique(
                            base.label(u).to_string(),
                            base.label(v).to_string(),
                        ));
                    }
                }
            }
            clean.push(c);
        }
        Ok(CliqueCover {
            base,
            cliques: clean,
        })
    }

    /// Builds a cover from cliques given by vertex label.
    pub fn from_labels(base: Graph, cliques: &[Vec<String>]) -> Result<Self> {
        let mut idx = Vec::with_capacity(cliques.len());
        for c in cliques {
            let mut q = Vec::with_capacity(c.len());
            for l in c {
                q.push(
                    base.index_of(l)
                        .ok_or_else(|| Error::Domain(format!("unknown vertex {l:?}")))?,
                );
            }
            idx.push(q);
        }
        Self::new(base, idx)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn trivial_count(&self) -> usize {
        self.cliques.iter().filter(|c| c.len() == 1).count()
    }

    pub fn validate(&self) -> CoverReport {
        validate_cover(&self.base, &self.cliques)
    }

    /// Cliques sorted by (size, vertex list); the order used to compare
    /// covers as multisets.
    pub fn canonical_cliques(&self) -> Vec<Vec<usize>> {
        let mut c = self.cliques.clone();
        c.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        c
    }

    pub fn clique_labels(&self) -> Vec<Vec<String>> {
        self.cliques
            .iter()
            .map(|c| c.iter().map(|&v| self.base.label(v).to_string()).collect())
            .collect()
    }
}

/// Computes cover/partition flags for a family of cliques of `g`.
/// Returns `InvalidClique` when a member is not a clique.
pub fn validate_cover_checked(g: &Graph, cliques: &[Vec<usize>]) -> Result<CoverReport> {
    let cover = CliqueCover::new(g.clone(), cliques.to_vec())?;
    Ok(cover.validate())
}

pub(crate) fn validate_cover(g: &Graph, cliques: &[Vec<usize>]) -> CoverReport {
    let n = g.vertex_count();
    let mut vertex_hit = vec![false; n];
    let mut edge_hits = vec![vec![0u32; n]; n];
    for c in cliques {
        for (i, &u) in c.iter().enumerate() {
            vertex_hit[u] = true;
            for &v in &c[i + 1..] {
                edge_hits[u][v] += 1;
                edge_hits[v][u] += 1;
            }
        }
    }
    let mut offending = None;
    let mut is_cover = true;
    if let Some(v) = vertex_hit.iter().position(|&h| !h) {
        is_cover = false;
        offending = Some(CoverDefect::UncoveredVertex(v));
    }
    let mut doubly = None;
    for &(u, v) in g.edges() {
        match edge_hits[u][v] {
            0 => {
                if is_cover {
                    offending = Some(CoverDefect::UncoveredEdge(u, v));
                }
                is_cover = false;
            }
            1 => {}
            _ => {
                if doubly.is_none() {
                    doubly = Some(CoverDefect::DoublyCoveredEdge(u, v));
                }
            }
        }
    }
    if is_cover {
        offending = doubly;
    }
    CoverReport {
        is_cover,
        is_partition: is_cover && doubly.is_none(),
        trivial_count: cliques.iter().filter(|c| c.len() == 1).count(),
        offending,
    }
}

/// Set representation with `S_i = { j+1 : v_i ∈ Q_j }`.
pub fn egp_set(cover: &CliqueCover) -> Result<SetRepresentation> {
    let g = cover.base();
    let mut sets = vec![Vec::new(); g.vertex_count()];
    for (j, c) in cover.cliques().iter().enumerate() {
        for &v in c {
            sets[v].push(j as u32 + 1);
        }
    }
    if let Some(v) = sets.iter().position(Vec::is_empty) {
        return Err(Error::EmptySet(g.label(v).to_string()));
    }
    SetRepresentation::with_labels(g.labels().to_vec(), sets)
}

/// Clique cover with one clique per universe element `s` (in increasing
/// order): the vertices whose sets contain `s`.
pub fn egp_cover(rep: &SetRepresentation, g: &Graph) -> Result<CliqueCover> {
    match represents(rep, g)? {
        Represents::Yes => {}
        Represents::No {
            first,
            second,
            adjacent,
        } => {
            return Err(Error::RepresentationMismatch {
                first: g.label(first).to_string(),
                second: g.label(second).to_string(),
                reason: if adjacent {
                    "adjacent but sets are disjoint".into()
                } else {
                    "not adjacent but sets intersect".into()
                },
            })
        }
    }
    let cliques: Vec<Vec<usize>> = rep
        .universe()
        .into_iter()
        .map(|s| {
            (0..rep.len())
                .filter(|&i| rep.set(i).binary_search(&s).is_ok())
                .collect()
        })
        .collect();
    CliqueCover::new(g.clone(), cliques)
}
