//! Exhaustive search for minimum representations of small graphs.
//!
//! Simple categories are searched through their dual: a branch and bound
//! over edge-clique partitions of `H` (u64 vertex masks, so `|V(H)| <= 64`),
//! each completed with the fewest monopolists the category needs. The other
//! categories use a naive enumerator over multisets of cliques.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::{canonical_labeling_of, CanonicalForm};
use crate::cover::{validate_cover, CliqueCover};
use crate::error::{Error, Result};
use crate::geometry::{FiniteLinearSpace, PlaneCertificate};
use crate::graph::Graph;
use crate::representation::{category_flags, Category, SetRepresentation};

/// Limits for one search.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    pub max_universe: usize,
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
    /// Worker threads; `None` reads `SETREP_THREADS` (unset or 0 means one).
    pub threads: Option<usize>,
}

impl SearchBudget {
    pub fn new(max_universe: usize) -> Self {
        SearchBudget {
            max_universe: max_universe.max(1),
            time_limit: None,
            node_limit: None,
            threads: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    fn worker_count(&self) -> usize {
        let n = self.threads.unwrap_or_else(|| {
            std::env::var("SETREP_THREADS")
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(0)
        });
        n.max(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub wall_time: Duration,
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub category: Category,
    /// Least universe size, if one within the budget was proven minimal.
    pub theta: Option<usize>,
    /// One representative per isomorphism class at `theta`, sorted by
    /// canonical form. Elements are numbered canonically from 1.
    pub classes: Vec<SetRepresentation>,
    pub forms: Vec<CanonicalForm>,
    /// False when a time or node limit stopped the search.
    pub exhausted: bool,
    pub stats: SearchStats,
}

impl OracleResult {
    pub fn tau(&self) -> Option<usize> {
        self.theta.map(|_| self.classes.len())
    }
}

/// Minimum universe size and its isomorphism classes for `h` in `category`.
pub fn oracle_search(h: &Graph, category: Category, budget: &SearchBudget) -> Result<OracleResult> {
    if category.is_simple() {
        partition_search(h, category, budget)
    } else {
        naive_search(h, category, budget)
    }
}

fn check_size(h: &Graph) -> Result<()> {
    if h.vertex_count() > 64 {
        return Err(Error::Unsupported(format!(
            "oracle handles at most 64 vertices, got {}",
            h.vertex_count()
        )));
    }
    Ok(())
}

fn masks(h: &Graph) -> Vec<u64> {
    (0..h.vertex_count())
        .map(|v| h.neighbor_set(v).ones().fold(0u64, |m, w| m | 1 << w))
        .collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// All cliques (as masks) of the graph `adj` restricted to `within`,
/// including the empty one, largest first.
fn cliques_within(adj: &[u64], within: u64) -> Vec<u64> {
    fn grow(adj: &[u64], chosen: u64, cand: u64, out: &mut Vec<u64>) {
        out.push(chosen);
        for b in bits(cand) {
            let later = if b >= 63 {
                0
            } else {
                cand & (u64::MAX << (b + 1))
            };
            grow(adj, chosen | 1 << b, later & adj[b], out);
        }
    }
    let mut out = Vec::new();
    grow(adj, 0, within, &mut out);
    out.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    out
}

/// Size of a greedy independent set of `adj` inside `within`.
fn greedy_independent(adj: &[u64], mut within: u64) -> usize {
    let mut k = 0;
    while within != 0 {
        let b = within.trailing_zeros() as usize;
        within &= !(1u64 << b) & !adj[b];
        k += 1;
    }
    k
}

/// Lower bound on the nontrivial cliques still needed to cover `unc`: at
/// each vertex, pairwise non-adjacent uncovered neighbors need separate cliques.
fn clique_lower_bound(unc: &[u64]) -> usize {
    unc.iter()
        .filter(|&&m| m != 0)
        .map(|&m| greedy_independent(unc, m))
        .max()
        .unwrap_or(0)
}

/// Lower bound on monopolists, from vertices whose edges are all covered.
fn trivial_lower_bound(
    cat: Category,
    unc: &[u64],
    cliques: &[u64],
    d: &[u8],
    has_edge: bool,
) -> usize {
    let finished = |v: usize| unc[v] == 0;
    let n = unc.len();
    match cat {
        Category::S => (0..n).filter(|&v| finished(v) && d[v] == 0).count(),
        Category::Sa => (0..n).filter(|&v| finished(v) && d[v] <= 1).count(),
        Category::Sd => {
            let iso = (0..n).filter(|&v| finished(v) && d[v] == 0).count();
            let ones: u64 = (0..n)
                .filter(|&v| finished(v) && d[v] == 1)
                .fold(0, |m, v| m | 1 << v);
            iso + cliques
                .iter()
                .map(|&c| ((c & ones).count_ones() as usize).saturating_sub(1))
                .sum::<usize>()
        }
        Category::Sdu => {
            let k = required_uniform_size(d.iter().copied().max().unwrap_or(0), has_edge);
            (0..n)
                .filter(|&v| finished(v))
                .map(|v| k - d[v] as usize)
                .sum()
        }
        _ => 0,
    }
}

fn required_uniform_size(max_d: u8, has_edge: bool) -> usize {
    let k = (max_d as usize).max(1);
    if k == 1 && has_edge {
        2
    } else {
        k
    }
}

/// Every least set of monopolists completing the partition `cliques` to a
/// representation in `cat`, as vertex lists (one entry per monopolist).
fn placements(cat: Category, n: usize, cliques: &[u64], has_edge: bool) -> Vec<Vec<usize>> {
    let mut d = vec![0u8; n];
    for &c in cliques {
        for v in bits(c) {
            d[v] += 1;
        }
    }
    let zero: Vec<usize> = (0..n).filter(|&v| d[v] == 0).collect();
    match cat {
        Category::S => vec![zero],
        Category::Sa => vec![(0..n).filter(|&v| d[v] <= 1).collect()],
        Category::Sdu => {
            let k = required_uniform_size(d.iter().copied().max().unwrap_or(0), has_edge);
            vec![(0..n)
                .flat_map(|v| std::iter::repeat_n(v, k - d[v] as usize))
                .collect()]
        }
        Category::Sd => {
            // Within a clique, vertices lying in no other clique have equal
            // sets; all but one of them need a monopolist.
            let groups: Vec<Vec<usize>> = cliques
                .iter()
                .map(|&c| bits(c).filter(|&v| d[v] == 1).collect::<Vec<_>>())
                .filter(|g| g.len() >= 2)
                .collect();
            let mut out = vec![zero];
            for g in groups {
                let mut next = Vec::with_capacity(out.len() * g.len());
                for base in &out {
                    for skip in 0..g.len() {
                        let mut p = base.clone();
                        p.extend(
                            g.iter()
                                .enumerate()
                                .filter(|&(i, _)| i != skip)
                                .map(|(_, &v)| v),
                        );
                        next.push(p);
                    }
                }
                out = next;
            }
            out
        }
        _ => unreachable!("non-simple category in partition search"),
    }
}

fn sets_of(n: usize, cliques: &[u64], monopolists: &[usize]) -> Vec<Vec<u32>> {
    let mut sets = vec![Vec::new(); n];
    for (j, &c) in cliques.iter().enumerate() {
        for v in bits(c) {
            sets[v].push(j as u32 + 1);
        }
    }
    for (k, &v) in monopolists.iter().enumerate() {
        sets[v].push((cliques.len() + k) as u32 + 1);
    }
    sets
}

struct Store {
    p: usize,
    classes: BTreeMap<CanonicalForm, Vec<Vec<u32>>>,
}

struct Shared<'a> {
    h: &'a Graph,
    cat: Category,
    has_edge: bool,
    best: AtomicUsize,
    nodes: AtomicU64,
    aborted: AtomicBool,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    store: Mutex<Store>,
}

#[derive(Clone)]
struct Node {
    unc: Vec<u64>,
    cliques: Vec<u64>,
    d: Vec<u8>,
}

impl Node {
    fn root(h: &Graph) -> Node {
        Node {
            unc: masks(h),
            cliques: Vec::new(),
            d: vec![0; h.vertex_count()],
        }
    }

    /// The uncovered edge `(u, v)` with `u`, then `v`, smallest.
    fn next_edge(&self) -> Option<(usize, usize)> {
        let u = self.unc.iter().position(|&m| m != 0)?;
        Some((u, self.unc[u].trailing_zeros() as usize))
    }

    /// Cliques that may cover `(u, v)`: `{u, v}` plus a clique of common
    /// uncovered neighbors.
    fn choices(&self, u: usize, v: usize) -> Vec<u64> {
        let common = self.unc[u] & self.unc[v];
        cliques_within(&self.unc, common)
            .into_iter()
            .map(|k| k | 1 << u | 1 << v)
            .collect()
    }

    fn push(&mut self, c: u64) {
        for x in bits(c) {
            self.unc[x] &= !c;
            self.d[x] += 1;
        }
        self.cliques.push(c);
    }

    fn pop(&mut self) {
        let c = self.cliques.pop().expect("nonempty");
        for x in bits(c) {
            self.unc[x] |= c & !(1 << x);
            self.d[x] -= 1;
        }
    }
}

impl Shared<'_> {
    fn tick(&self) -> bool {
        let k = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.aborted.load(Ordering::Relaxed) {
            return false;
        }
        let over = self.node_limit.is_some_and(|l| k > l)
            || (k.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d));
        if over {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !over
    }

    fn bound(&self, node: &Node) -> usize {
        node.cliques.len()
            + clique_lower_bound(&node.unc)
            + trivial_lower_bound(self.cat, &node.unc, &node.cliques, &node.d, self.has_edge)
    }

    fn dfs(&self, node: &mut Node) {
        if !self.tick() {
            return;
        }
        let Some((u, v)) = node.next_edge() else {
            self.leaf(&node.cliques);
            return;
        };
        if self.bound(node) > self.best.load(Ordering::Relaxed) {
            return;
        }
        for c in node.choices(u, v) {
            node.push(c);
            if self.bound(node) <= self.best.load(Ordering::Relaxed) {
                self.dfs(node);
            }
            node.pop();
            if self.aborted.load(Ordering::Relaxed) {
                return;
            }
        }
    }

    fn leaf(&self, cliques: &[u64]) {
        let n = self.h.vertex_count();
        let options = placements(self.cat, n, cliques, self.has_edge);
        let p = cliques.len() + options[0].len();
        if p > self.best.load(Ordering::Relaxed) {
            return;
        }
        let found: Vec<(CanonicalForm, Vec<Vec<u32>>)> = options
            .iter()
            .map(|mono| {
                let sets = sets_of(n, cliques, mono);
                let lab = canonical_labeling_of(&sets);
                let relabeled = sets
                    .iter()
                    .map(|s| {
                        let mut t: Vec<u32> = s.iter().map(|x| lab.map[x] + 1).collect();
                        t.sort_unstable();
                        t
                    })
                    .collect();
                (lab.form, relabeled)
            })
            .collect();
        self.best.fetch_min(p, Ordering::Relaxed);
        let mut store = self.store.lock().expect("store lock");
        if p < store.p {
            store.p = p;
            store.classes.clear();
        }
        if p == store.p {
            for (form, sets) in found {
                store
                    .classes
                    .entry(form)
                    .and_modify(|s| {
                        if sets < *s {
                            *s = sets.clone();
                        }
                    })
                    .or_insert(sets);
            }
        }
    }
}

/// Expands the tree breadth-first into at least `want` independent subtrees.
fn split(shared: &Shared, root: Node, want: usize) -> Vec<Node> {
    let mut frontier = vec![root];
    loop {
        if frontier.len() >= want {
            return frontier;
        }
        let mut next = Vec::new();
        let mut grew = false;
        for node in frontier {
            match node.next_edge() {
                None => next.push(node),
                Some((u, v)) => {
                    grew = true;
                    for c in node.choices(u, v) {
                        let mut child = node.clone();
                        child.push(c);
                        if shared.bound(&child) <= shared.best.load(Ordering::Relaxed) {
                            next.push(child);
                        }
                    }
                }
            }
        }
        frontier = next;
        if !grew {
            return frontier;
        }
    }
}

fn partition_search(h: &Graph, cat: Category, budget: &SearchBudget) -> Result<OracleResult> {
    check_size(h)?;
    let start = Instant::now();
    let shared = Shared {
        h,
        cat,
        has_edge: h.edge_count() > 0,
        best: AtomicUsize::new(budget.max_universe),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        deadline: budget.time_limit.map(|t| start + t),
        node_limit: budget.node_limit,
        store: Mutex::new(Store {
            p: usize::MAX,
            classes: BTreeMap::new(),
        }),
    };
    let workers = budget.worker_count();
    let root = Node::root(h);
    if workers <= 1 {
        let mut root = root;
        shared.dfs(&mut root);
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
        let tasks = split(&shared, root, workers * 16);
        pool.install(|| {
            tasks
                .into_par_iter()
                .for_each(|mut node| shared.dfs(&mut node));
        });
    }
    let store = shared.store.into_inner().expect("store lock");
    let exhausted = !shared.aborted.load(Ordering::Relaxed);
    Ok(finish(
        h,
        cat,
        store,
        exhausted,
        SearchStats {
            nodes: shared.nodes.load(Ordering::Relaxed),
            wall_time: start.elapsed(),
        },
    ))
}

fn finish(
    h: &Graph,
    cat: Category,
    store: Store,
    exhausted: bool,
    stats: SearchStats,
) -> OracleResult {
    let theta = (exhausted && !store.classes.is_empty()).then_some(store.p);
    let (forms, classes) = if theta.is_some() {
        store
            .classes
            .into_iter()
            .map(|(f, sets)| {
                let rep = SetRepresentation::with_labels(h.labels().to_vec(), sets)
                    .expect("search builds nonempty sets");
                (f, rep)
            })
            .unzip()
    } else {
        (Vec::new(), Vec::new())
    };
    OracleResult {
        category: cat,
        theta,
        classes,
        forms,
        exhausted,
        stats,
    }
}

/// A universe size at which `h` certainly has a representation in `cat`:
/// one element per edge, padded with monopolists. Uniform categories pad
/// every set up to `max(Δ, 2)`.
pub fn universe_bound(h: &Graph, cat: Category) -> usize {
    let (n, m) = (h.vertex_count(), h.edge_count());
    if cat.required().uniform {
        let k = h.degrees().into_iter().max().unwrap_or(0).max(2);
        n * k - m
    } else {
        n + m
    }
}

/// Every nonempty clique of `h` as a mask, in increasing mask order.
pub fn all_cliques(h: &Graph) -> Result<Vec<u64>> {
    check_size(h)?;
    let adj = masks(h);
    let full = if h.vertex_count() == 64 {
        u64::MAX
    } else {
        (1u64 << h.vertex_count()) - 1
    };
    let mut c: Vec<u64> = cliques_within(&adj, full)
        .into_iter()
        .filter(|&m| m != 0)
        .collect();
    c.sort_unstable();
    Ok(c)
}

/// Search by brute force over multisets of `p` cliques, `p = 1, 2, ...`.
/// Works for every category; only practical for very small graphs.
pub fn naive_search(h: &Graph, cat: Category, budget: &SearchBudget) -> Result<OracleResult> {
    let start = Instant::now();
    let cliques = all_cliques(h)?;
    let deadline = budget.time_limit.map(|t| start + t);
    let required = cat.required();
    let n = h.vertex_count();
    let mut nodes = 0u64;
    let mut aborted = false;
    for p in 1..=budget.max_universe {
        let mut store = Store {
            p,
            classes: BTreeMap::new(),
        };
        let mut pick = Vec::with_capacity(p);
        let mut visit = |chosen: &[u64]| -> bool {
            nodes += 1;
            if budget.node_limit.is_some_and(|l| nodes > l)
                || (nodes.is_multiple_of(4096) && deadline.is_some_and(|d| Instant::now() >= d))
            {
                return false;
            }
            let lists: Vec<Vec<usize>> = chosen.iter().map(|&c| bits(c).collect()).collect();
            if !validate_cover(h, &lists).is_cover {
                return true;
            }
            let sets = sets_of(n, chosen, &[]);
            let rep = SetRepresentation::new(sets.clone()).expect("cover gives nonempty sets");
            if category_flags(&rep).satisfies(required) {
                let lab = canonical_labeling_of(&sets);
                let relabeled: Vec<Vec<u32>> = sets
                    .iter()
                    .map(|s| {
                        let mut t: Vec<u32> = s.iter().map(|x| lab.map[x] + 1).collect();
                        t.sort_unstable();
                        t
                    })
                    .collect();
                store
                    .classes
                    .entry(lab.form)
                    .and_modify(|s| {
                        if relabeled < *s {
                            *s = relabeled.clone();
                        }
                    })
                    .or_insert(relabeled);
            }
            true
        };
        if !multisets(&cliques, p, 0, &mut pick, &mut visit) {
            aborted = true;
            break;
        }
        if !store.classes.is_empty() {
            return Ok(finish(
                h,
                cat,
                store,
                true,
                SearchStats {
                    nodes,
                    wall_time: start.elapsed(),
                },
            ));
        }
    }
    Ok(OracleResult {
        category: cat,
        theta: None,
        classes: Vec::new(),
        forms: Vec::new(),
        exhausted: !aborted,
        stats: SearchStats {
            nodes,
            wall_time: start.elapsed(),
        },
    })
}

fn multisets(
    items: &[u64],
    k: usize,
    from: usize,
    pick: &mut Vec<u64>,
    visit: &mut impl FnMut(&[u64]) -> bool,
) -> bool {
    if pick.len() == k {
        return visit(pick);
    }
    for i in from..items.len() {
        pick.push(items[i]);
        let go = multisets(items, k, i, pick, visit);
        pick.pop();
        if !go {
            return false;
        }
    }
    true
}

/// Calls `f` on every edge-clique partition of `h` into at most `max_q`
/// nontrivial cliques (each generated once). `f` returns false to stop.
fn for_each_partition(h: &Graph, max_q: usize, f: &mut impl FnMut(&[u64]) -> bool) -> bool {
    fn go(node: &mut Node, max_q: usize, f: &mut impl FnMut(&[u64]) -> bool) -> bool {
        let Some((u, v)) = node.next_edge() else {
            return f(&node.cliques);
        };
        if node.cliques.len() + clique_lower_bound(&node.unc) > max_q {
            return true;
        }
        for c in node.choices(u, v) {
            node.push(c);
            let more = go(node, max_q, f);
            node.pop();
            if !more {
                return false;
            }
        }
        true
    }
    let mut root = Node::root(h);
    go(&mut root, max_q, f)
}

/// Every edge-clique partition of `h` with exactly `p` cliques. With
/// `allow_trivial`, single-vertex cliques fill the partition up to `p`
/// (as sorted vertex multisets) and every vertex must end up covered.
pub fn enumerate_partitions(h: &Graph, p: usize, allow_trivial: bool) -> Result<Vec<CliqueCover>> {
    check_size(h)?;
    let n = h.vertex_count();
    let mut out = Vec::new();
    for_each_partition(h, p, &mut |cliques| {
        let q = cliques.len();
        let lists: Vec<Vec<usize>> = cliques.iter().map(|&c| bits(c).collect()).collect();
        if !allow_trivial {
            if q == p && validate_cover(h, &lists).is_cover {
                out.push(lists);
            }
            return true;
        }
        let covered = cliques.iter().fold(0u64, |m, &c| m | c);
        let verts: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
        let mut pick = Vec::new();
        multisets(&verts, p - q, 0, &mut pick, &mut |extra: &[u64]| {
            let all = extra.iter().fold(covered, |m, &c| m | c);
            if all.count_ones() as usize == n {
                let mut l = lists.clone();
                l.extend(extra.iter().map(|&c| bits(c).collect::<Vec<_>>()));
                out.push(l);
            }
            true
        });
        true
    });
    out.into_iter()
        .map(|l| CliqueCover::new(h.clone(), l))
        .collect()
}

/// Outcome of checking the De Bruijn–Erdős bound on `K_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DbeReport {
    pub n: usize,
    /// Fewest cliques in a partition of `K_n` into more than one clique,
    /// without trivial cliques.
    pub minimum: usize,
    /// Labeled partitions attaining `n` cliques.
    pub equality_cases: usize,
    pub near_pencils: usize,
    pub planes: usize,
    pub other: usize,
    /// Isomorphism classes among the plane cases.
    pub plane_classes: usize,
}

impl DbeReport {
    /// The bound holds and every equality case is a near-pencil or a plane.
    pub fn confirmed(&self) -> bool {
        self.minimum >= self.n && self.other == 0
    }
}

/// Exhausts nontrivial edge-clique partitions of `K_n` with at most `n`
/// cliques. `n` must lie in `3..=6`, or be 7 when `long` is set.
pub fn verify_dbe(n: usize, long: bool) -> Result<DbeReport> {
    let max = if long { 7 } else { 6 };
    if !(3..=max).contains(&n) {
        return Err(Error::Domain(format!(
            "verify_dbe supports n in 3..={max}{}, got {n}",
            if long { "" } else { " (7 with the long flag)" }
        )));
    }
    let k = Graph::complete(n);
    let full = (1u64 << n) - 1;
    let mut minimum = usize::MAX;
    let mut report = DbeReport {
        n,
        minimum: 0,
        equality_cases: 0,
        near_pencils: 0,
        planes: 0,
        other: 0,
        plane_classes: 0,
    };
    let mut plane_forms = std::collections::BTreeSet::new();
    // Any partition below n cliques would show up under this bound too.
    for_each_partition(&k, n, &mut |cliques| {
        if cliques.len() <= 1 || cliques.contains(&full) {
            return true;
        }
        minimum = minimum.min(cliques.len());
        if cliques.len() != n {
            return true;
        }
        report.equality_cases += 1;
        let mut sizes: Vec<u32> = cliques.iter().map(|c| c.count_ones()).collect();
        sizes.sort_unstable();
        let pencil = sizes[n - 1] as usize == n - 1 && sizes[..n - 1].iter().all(|&s| s == 2);
        let lines: Vec<Vec<usize>> = cliques.iter().map(|&c| bits(c).collect()).collect();
        let plane = FiniteLinearSpace::new(n, lines.clone())
            .and_then(PlaneCertificate::verify)
            .is_ok();
        if pencil {
            report.near_pencils += 1;
        } else if plane {
            report.planes += 1;
            let sets = sets_of(n, cliques, &[]);
            plane_forms.insert(canonical_labeling_of(&sets).form);
        } else {
            report.other += 1;
        }
        true
    });
    report.minimum = minimum;
    report.plane_classes = plane_forms.len();
    Ok(report)
}

/// Whether `rep` represents `h` and lies in `cat`.
pub fn is_valid_solution(rep: &SetRepresentation, h: &Graph, cat: Category) -> Result<bool> {
    Ok(crate::representation::represents(rep, h)?.holds()
        && category_flags(rep).satisfies(cat.required()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{line_graph, parse_graph};

    fn run(h: &Graph, cat: Category, max: usize) -> OracleResult {
        oracle_search(h, cat, &SearchBudget::new(max).with_threads(1)).unwrap()
    }

    #[test]
    fn complete_three() {
        let k3 = Graph::complete(3);
        let sd = run(&k3, Category::Sd, 6);
        assert_eq!((sd.theta, sd.classes.len()), (Some(3), 2));
        let sa = run(&k3, Category::Sa, 6);
        assert_eq!((sa.theta, sa.classes.len()), (Some(3), 1));
    }

    #[test]
    fn k2_antichain_needs_three() {
        let sa = run(&Graph::complete(2), Category::Sa, 6);
        assert_eq!(sa.theta, Some(3));
    }

    #[test]
    fn p4_line_graph() {
        let l = line_graph(&Graph::path(4)).unwrap().line;
        let sd = run(&l, Category::Sd, 6);
        assert_eq!((sd.theta, sd.classes.len()), (Some(2), 1));
    }

    #[test]
    fn emitted_classes_are_sound() {
        let h = parse_graph("5 6\na b\nb c\nc a\nc d\nd e\ne c").unwrap();
        for cat in [Category::S, Category::Sd, Category::Sa, Category::Sdu] {
            let r = run(&h, cat, 9);
            assert!(r.theta.is_some());
            for rep in &r.classes {
                assert!(is_valid_solution(rep, &h, cat).unwrap());
                assert_eq!(rep.universe_size(), r.theta.unwrap());
            }
        }
    }

    #[test]
    fn partitions_of_small_complete_graphs() {
        let k3 = Graph::complete(3);
        assert_eq!(enumerate_partitions(&k3, 3, false).unwrap().len(), 1);
        assert_eq!(enumerate_partitions(&k3, 1, false).unwrap().len(), 1);
        let k4 = enumerate_partitions(&Graph::complete(4), 4, false).unwrap();
        assert_eq!(k4.len(), 4);
        for c in &k4 {
            let mut sizes: Vec<usize> = c.cliques().iter().map(Vec::len).collect();
            sizes.sort_unstable();
            assert_eq!(sizes, vec![2, 2, 2, 3]);
        }
        let with_trivial = enumerate_partitions(&Graph::complete(2), 2, true).unwrap();
        assert_eq!(with_trivial.len(), 2);
    }

    #[test]
    fn budget_stops_search() {
        let r = oracle_search(
            &Graph::complete(6),
            Category::Sd,
            &SearchBudget::new(6).with_node_limit(5).with_threads(1),
        )
        .unwrap();
        assert!(!r.exhausted && r.theta.is_none());
    }

    #[test]
    fn dbe_small() {
        for n in 3..=6 {
            let r = verify_dbe(n, false).unwrap();
            assert_eq!(r.minimum, n);
            assert!(r.confirmed());
            assert_eq!(r.near_pencils, r.equality_cases);
            assert_eq!(r.near_pencils, if n == 3 { 1 } else { n });
        }
        assert!(verify_dbe(7, false).is_err());
        assert!(verify_dbe(2, true).is_err());
    }

    #[test]
    fn naive_agrees_on_tiny_graphs() {
        for h in [Graph::complete(3), Graph::path(4), Graph::star(3)] {
            for cat in [Category::Sd, Category::Sa, Category::Sdu] {
                let a = run(&h, cat, 6);
                let b = naive_search(&h, cat, &SearchBudget::new(6)).unwrap();
                assert_eq!(a.theta, b.theta, "{cat} on {h:?}");
                assert_eq!(a.forms, b.forms, "{cat} on {h:?}");
            }
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let h = line_graph(&parse_graph("5 5\na b\nb c\nc a\na d\nb e").unwrap())
            .unwrap()
            .line;
        let one = run(&h, Category::Sd, 8);
        let many = oracle_search(&h, Category::Sd, &SearchBudget::new(8).with_threads(4)).unwrap();
        assert_eq!(one.forms, many.forms);
        assert_eq!(one.classes, many.classes);
    }
}
