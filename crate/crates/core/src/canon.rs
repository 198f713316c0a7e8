//! Canonical forms and isomorphism of set representations.
//!
//! A representation is viewed as a bipartite incidence structure between
//! universe elements and sets (the two sides are never mixed). Sets form a
//! multiset: only the element bijection matters, duplicate sets are
//! interchangeable and vertex labels are ignored.
//!
//! The canonical form is the lexicographically least sorted list of relabeled
//! sets over all element orderings reachable by individualization and color
//! refinement. Branches equivalent under automorphisms already discovered are
//! skipped.

use std::collections::BTreeMap;

use crate::representation::SetRepresentation;

/// Isomorphism-invariant form of a set family: sets over `0..universe`,
/// each sorted, the list sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    universe: usize,
    sets: Vec<Vec<u32>>,
}

impl CanonicalForm {
    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[Vec<u32>] {
        &self.sets
    }

    /// The form as a representation with elements `1..=universe`.
    pub fn to_representation(&self) -> SetRepresentation {
        SetRepresentation::new(
            self.sets
                .iter()
                .map(|s| s.iter().map(|&x| x + 1).collect())
                .collect(),
        )
        .expect("canonical sets are nonempty")
    }
}

/// A canonical form together with the element relabeling that produced it.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub form: CanonicalForm,
    /// Original element to canonical index (`0..universe`).
    pub map: BTreeMap<u32, u32>,
}

struct Incidence {
    elements: usize,
    /// set -> dense element ids
    set_elems: Vec<Vec<usize>>,
    /// element -> set ids
    elem_sets: Vec<Vec<usize>>,
}

impl Incidence {
    fn node_count(&self) -> usize {
        self.elements + self.set_elems.len()
    }

    fn neighbors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        let p = self.elements;
        let (a, b): (&[usize], usize) = if node < p {
            (&self.elem_sets[node], p)
        } else {
            (&self.set_elems[node - p], 0)
        };
        a.iter().map(move |&x| x + b)
    }
}

/// Color refinement to the coarsest equitable partition finer than `colors`.
/// Colors are returned as ranks, so they are comparable across branches.
fn refine(inc: &Incidence, mut colors: Vec<u32>) -> Vec<u32> {
    let nodes = inc.node_count();
    let mut classes = count_classes(&colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..nodes)
            .map(|v| {
                let mut nb: Vec<u32> = inc.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0u32; nodes];
        let mut rank = 0u32;
        for i in 0..sigs.len() {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        let n_classes = if nodes == 0 { 0 } else { rank as usize + 1 };
        colors = next;
        if n_classes == classes {
            return colors;
        }
        classes = n_classes;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    inc: &'a Incidence,
    first: Option<(Vec<Vec<u32>>, Vec<u32>)>,
    best: Option<(Vec<Vec<u32>>, Vec<u32>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, colors: &[u32]) {
        let p = self.inc.elements;
        let mut order: Vec<usize> = (0..p).collect();
        order.sort_unstable_by_key(|&e| colors[e]);
        let mut lab = vec![0u32; p];
        for (rank, &e) in order.iter().enumerate() {
            lab[e] = rank as u32;
        }
        let mut cert: Vec<Vec<u32>> = self
            .inc
            .set_elems
            .iter()
            .map(|s| {
                let mut t: Vec<u32> = s.iter().map(|&e| lab[e]).collect();
                t.sort_unstable();
                t
            })
            .collect();
        cert.sort_unstable();

        let Some((first_cert, first_lab)) = &self.first else {
            self.first = Some((cert.clone(), lab.clone()));
            self.best = Some((cert, lab));
            return;
        };
        if &cert == first_cert {
            let auto = compose_inverse(first_lab, &lab);
            self.automorphisms.push(auto);
            return;
        }
        let (best_cert, best_lab) = self.best.as_ref().expect("best set with first");
        match cert.cmp(best_cert) {
            std::cmp::Ordering::Less => self.best = Some((cert, lab)),
            std::cmp::Ordering::Equal => {
                let auto = compose_inverse(best_lab, &lab);
                self.automorphisms.push(auto);
            }
            std::cmp::Ordering::Greater => {}
        }
    }

    fn same_orbit(&self, prefix: &[usize], a: usize, b: usize) -> bool {
        let p = self.inc.elements;
        let mut parent: Vec<usize> = (0..p).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.automorphisms {
            if prefix.iter().any(|&x| g[x] != x) {
                continue;
            }
            for (x, &gx) in g.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, gx));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        find(&mut parent, a) == find(&mut parent, b)
    }

    fn run(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) {
        let p = self.inc.elements;
        // first non-singleton element cell, by color
        let mut counts: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for e in 0..p {
            counts.entry(colors[e]).or_default().push(e);
        }
        let Some(cell) = counts.into_values().find(|c| c.len() > 1) else {
            self.leaf(&colors);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &y in &cell {
            if explored.iter().any(|&z| self.same_orbit(prefix, z, y)) {
                continue;
            }
            explored.push(y);
            let child: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(v, &c)| 2 * c + u32::from(v != y))
                .collect();
            let child = refine(self.inc, child);
            prefix.push(y);
            self.run(child, prefix);
            prefix.pop();
        }
    }
}

/// Permutation `x -> a^{-1}(b(x))` where `a`, `b` are labelings of equal certificates.
fn compose_inverse(a: &[u32], b: &[u32]) -> Vec<usize> {
    let mut inv = vec![0usize; a.len()];
    for (x, &ax) in a.iter().enumerate() {
        inv[ax as usize] = x;
    }
    b.iter().map(|&bx| inv[bx as usize]).collect()
}

/// Canonical form of a family of sets (given as sorted element lists) and the
/// element relabeling that realizes it.
pub fn canonical_labeling_of(sets: &[Vec<u32>]) -> Labeling {
    let mut elements: Vec<u32> = sets.iter().flatten().copied().collect();
    elements.sort_unstable();
    elements.dedup();
    let dense: BTreeMap<u32, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let p = elements.len();
    let set_elems: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| s.iter().map(|x| dense[x]).collect())
        .collect();
    let mut elem_sets = vec![Vec::new(); p];
    for (i, s) in set_elems.iter().enumerate() {
        for &e in s {
            elem_sets[e].push(i);
        }
    }
    let inc = Incidence {
        elements: p,
        set_elems,
        elem_sets,
    };
    let initial: Vec<u32> = (0..inc.node_count()).map(|v| u32::from(v >= p)).collect();
    let colors = refine(&inc, initial);
    let mut search = Search {
        inc: &inc,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.run(colors, &mut Vec::new());
    let (cert, lab) = search.best.unwrap_or_default();
    let map = elements
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, lab[i]))
        .collect();
    Labeling {
        form: CanonicalForm {
            universe: p,
            sets: cert,
        },
        map,
    }
}

pub fn canonical_labeling(rep: &SetRepresentation) -> Labeling {
    canonical_labeling_of(rep.sets())
}

pub fn canonical_form(rep: &SetRepresentation) -> CanonicalForm {
    canonical_labeling(rep).form
}

/// A universe bijection carrying the multiset of sets of `a` onto that of `b`,
/// or `None` when the representations are not isomorphic.
pub fn isomorphic(a: &SetRepresentation, b: &SetRepresentation) -> Option<BTreeMap<u32, u32>> {
    if a.len() != b.len() {
        return None;
    }
    let la = canonical_labeling(a);
    let lb = canonical_labeling(b);
    if la.form != lb.form {
        return None;
    }
    let back: BTreeMap<u32, u32> = lb.map.iter().map(|(&x, &c)| (c, x)).collect();
    Some(la.map.iter().map(|(&x, c)| (x, back[c])).collect())
}

/// One isomorphism class of a list of representations.
#[derive(Debug, Clone)]
pub struct IsoClass {
    pub form: CanonicalForm,
    /// Index (into the input) of the representative: the first member.
    pub representative: usize,
    pub members: Vec<usize>,
}

/// Groups representations into isomorphism classes, ordered by canonical form.
pub fn partition_into_classes(reps: &[SetRepresentation]) -> Vec<IsoClass> {
    let mut classes: BTreeMap<CanonicalForm, Vec<usize>> = BTreeMap::new();
    for (i, r) in reps.iter().enumerate() {
        classes.entry(canonical_form(r)).or_default().push(i);
    }
    classes
        .into_iter()
        .map(|(form, members)| IsoClass {
            form,
            representative: members[0],
            members,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(sets: &[&[u32]]) -> SetRepresentation {
        SetRepresentation::new(sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn relabeled_copy_is_isomorphic() {
        let a = rep(&[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]]);
        let b = a.relabel_elements(|x| 10 * (5 - x));
        let bij = isomorphic(&a, &b).expect("isomorphic");
        let mapped = a.relabel_elements(|x| bij[&x]);
        let mut s1: Vec<_> = mapped.sets().to_vec();
        let mut s2: Vec<_> = b.sets().to_vec();
        s1.sort();
        s2.sort();
        assert_eq!(s1, s2);
    }

    #[test]
    fn size_profiles_separate() {
        let np = rep(&[&[1, 2], &[1, 3], &[2, 3]]);
        let sp = rep(&[&[1], &[1, 2], &[1, 3]]);
        assert!(isomorphic(&np, &sp).is_none());
        assert_ne!(canonical_form(&np), canonical_form(&sp));
    }

    #[test]
    fn set_order_is_irrelevant() {
        let a = rep(&[&[1], &[1, 2], &[2, 3]]);
        let b = rep(&[&[2, 3], &[1], &[1, 2]]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        let c = rep(&[&[1], &[1, 2], &[1, 2]]);
        let d = rep(&[&[1, 2], &[1], &[1, 2]]);
        assert_eq!(canonical_form(&c), canonical_form(&d));
    }

    #[test]
    fn classes_group_relabelings() {
        let a = rep(&[&[1, 2], &[2, 3], &[3, 4]]);
        let b = a.relabel_elements(|x| x + 7);
        let c = rep(&[&[1, 2], &[2, 3], &[3, 1]]);
        let classes = partition_into_classes(&[a, b, c]);
        assert_eq!(classes.len(), 2);
        assert_eq!(classes.iter().map(|c| c.members.len()).sum::<usize>(), 3);
        assert_eq!(partition_into_classes(&[rep(&[&[1]])]).len(), 1);
    }
}
