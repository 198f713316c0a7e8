//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use setrep::{canonical_form, Graph, SetRepresentation};

/// Isomorphism key of a graph without isolated vertices: its edges as a
/// family of 2-sets over the vertex universe.
pub fn graph_key(g: &Graph) -> setrep::CanonicalForm {
    let sets = g
        .edges()
        .iter()
        .map(|&(u, v)| vec![u as u32, v as u32])
        .collect();
    canonical_form(&SetRepresentation::new(sets).expect("edges are nonempty"))
}

/// Every connected graph with at least one edge, at most `max_v` vertices
/// and at most `max_e` edges, one per isomorphism class, by edge count.
pub fn connected_graphs(max_v: usize, max_e: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::complete(2)];
    let mut out = layer.clone();
    for _ in 1..max_e {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &layer {
            let n = g.vertex_count();
            let mut candidates = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        candidates.push((u, v, n));
                    }
                }
                if n < max_v {
                    candidates.push((u, n, n + 1));
                }
            }
            for (u, v, size) in candidates {
                let mut edges = g.edges().to_vec();
                edges.push((u, v));
                let h = Graph::with_default_labels(size, &edges).expect("simple");
                if seen.insert(graph_key(&h)) {
                    next.push(h);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Independent brute force for simple categories: every set of distinct
/// nontrivial cliques covering each edge once, completed by every multiset
/// of single-vertex cliques up to `p` cliques in total. Returns the
/// canonical forms of all representations with universe exactly `p` that
/// satisfy `cat`.
pub fn brute_simple(h: &Graph, cat: setrep::Category, p: usize) -> BTreeSet<setrep::CanonicalForm> {
    let n = h.vertex_count();
    let cliques: Vec<Vec<usize>> = setrep::oracle::all_cliques(h)
        .unwrap()
        .into_iter()
        .filter(|m| m.count_ones() >= 2)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    let edge_id = |u: usize, v: usize| {
        h.edges()
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            .unwrap()
    };
    let clique_edges: Vec<Vec<usize>> = cliques
        .iter()
        .map(|c| {
            let mut es = Vec::new();
            for i in 0..c.len() {
                for j in i + 1..c.len() {
                    es.push(edge_id(c[i], c[j]));
                }
            }
            es
        })
        .collect();
    let mut partitions = Vec::new();
    let mut used = vec![false; h.edge_count()];
    fn rec(
        i: usize,
        chosen: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ce: &[Vec<usize>],
        p: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if used.iter().all(|&u| u) {
            out.push(chosen.clone());
            return;
        }
        if i == ce.len() || chosen.len() == p {
            return;
        }
        if ce[i].iter().all(|&e| !used[e]) {
            for &e in &ce[i] {
                used[e] = true;
            }
            chosen.push(i);
            rec(i + 1, chosen, used, ce, p, out);
            chosen.pop();
            for &e in &ce[i] {
                used[e] = false;
            }
        }
        rec(i + 1, chosen, used, ce, p, out);
    }
    rec(
        0,
        &mut Vec::new(),
        &mut used,
        &clique_edges,
        p,
        &mut partitions,
    );

    let mut forms = BTreeSet::new();
    for part in partitions {
        let q = part.len();
        let mut extra = Vec::new();
        fn multisets(
            n: usize,
            k: usize,
            from: usize,
            cur: &mut Vec<usize>,
            f: &mut dyn FnMut(&[usize]),
        ) {
            if cur.len() == k {
                f(cur);
                return;
            }
            for v in from..n {
                cur.push(v);
                multisets(n, k, v, cur, f);
                cur.pop();
            }
        }
        multisets(n, p - q, 0, &mut extra, &mut |mono| {
            let mut sets = vec![Vec::new(); n];
            for (j, &c) in part.iter().enumerate() {
                for &v in &cliques[c] {
                    sets[v].push(j as u32);
                }
            }
            for (k, &v) in mono.iter().enumerate() {
                sets[v].push((q + k) as u32);
            }
            if sets.iter().any(Vec::is_empty) {
                return;
            }
            let rep = SetRepresentation::new(sets).unwrap();
            if setrep::category_flags(&rep).satisfies(cat.required()) {
                forms.insert(canonical_form(&rep));
            }
        });
    }
    forms
}
