//! Set representations and their category predicates.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{default_labels, Graph};

/// One nonempty set of universe elements per represented vertex.
///
/// The universe is the union of all sets, so it never has unused elements.
/// Sets are stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetRepresentation {
    labels: Vec<String>,
    sets: Vec<Vec<u32>>,
}

impl SetRepresentation {
    /// Representation with vertex labels `v1..vn`.
    pub fn new(sets: Vec<Vec<u32>>) -> Result<Self> {
        let labels = default_labels(sets.len());
        Self::with_labels(labels, sets)
    }

    pub fn with_labels(labels: Vec<String>, sets: Vec<Vec<u32>>) -> Result<Self> {
        if labels.len() != sets.len() {
            return Err(Error::SizeMismatch {
                expected: labels.len(),
                found: sets.len(),
            });
        }
        let mut clean = Vec::with_capacity(sets.len());
        for (l, mut s) in labels.iter().zip(sets) {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::EmptySet(l.clone()));
            }
            clean.push(s);
        }
        Ok(SetRepresentation {
            labels,
            sets: clean,
        })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Vec<u32>] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[u32] {
        &self.sets[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn universe(&self) -> Vec<u32> {
        let u: BTreeSet<u32> = self.sets.iter().flatten().copied().collect();
        u.into_iter().collect()
    }

    pub fn universe_size(&self) -> usize {
        self.universe().len()
    }

    /// Applies `f` to every universe element.
    pub fn relabel_elements(&self, mut f: impl FnMut(u32) -> u32) -> SetRepresentation {
        let sets = self
            .sets
            .iter()
            .map(|s| s.iter().map(|&x| f(x)).collect())
            .collect();
        SetRepresentation::with_labels(self.labels.clone(), sets).expect("nonempty preserved")
    }

    /// Same sets, new vertex labels.
    pub fn with_vertex_labels(&self, labels: Vec<String>) -> Result<SetRepresentation> {
        SetRepresentation::with_labels(labels, self.sets.clone())
    }

    /// Number of sets containing each universe element.
    pub fn element_multiplicity(&self, x: u32) -> usize {
        self.sets
            .iter()
            .filter(|s| s.binary_search(&x).is_ok())
            .count()
    }

    /// Elements that occur in exactly one set.
    pub fn monopolists(&self) -> Vec<u32> {
        self.universe()
            .into_iter()
            .filter(|&x| self.element_multiplicity(x) == 1)
            .collect()
    }
}

pub(crate) fn intersection_size(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                k += 1;
                i += 1;
                j += 1;
            }
        }
    }
    k
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    a.len() <= b.len() && intersection_size(a, b) == a.len()
}

/// Which categories a representation belongs to.
///
/// Equal sets count as contained in each other, so `antichain` implies
/// `distinct`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct CategoryFlags {
    pub distinct: bool,
    pub antichain: bool,
    pub uniform: bool,
    pub simple: bool,
}

impl CategoryFlags {
    /// Whether `self` has every property `required` asks for.
    pub fn satisfies(&self, required: CategoryFlags) -> bool {
        (!required.distinct || self.distinct)
            && (!required.antichain || self.antichain)
            && (!required.uniform || self.uniform)
            && (!required.simple || self.simple)
    }
}

/// A conjunction of the four set properties, as named by its initials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    S,
    D,
    A,
    U,
    Sd,
    Sa,
    Sdu,
}

impl Category {
    pub const ALL: [Category; 7] = [
        Category::S,
        Category::D,
        Category::A,
        Category::U,
        Category::Sd,
        Category::Sa,
        Category::Sdu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Category::S => "s",
            Category::D => "d",
            Category::A => "a",
            Category::U => "u",
            Category::Sd => "sd",
            Category::Sa => "sa",
            Category::Sdu => "sdu",
        }
    }

    pub fn required(self) -> CategoryFlags {
        let mut f = CategoryFlags::default();
        match self {
            Category::S => f.simple = true,
            Category::D => f.distinct = true,
            Category::A => f.antichain = true,
            Category::U => f.uniform = true,
            Category::Sd => (f.simple, f.distinct) = (true, true),
            Category::Sa => (f.simple, f.antichain) = (true, true),
            Category::Sdu => (f.simple, f.distinct, f.uniform) = (true, true, true),
        }
        f
    }

    pub fn is_simple(self) -> bool {
        self.required().simple
    }
}

impl std::fmt::Display for Category {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Category::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown category {s:?}")))
    }
}

pub fn category_flags(rep: &SetRepresentation) -> CategoryFlags {
    let sets = rep.sets();
    let mut flags = CategoryFlags {
        distinct: true,
        antichain: true,
        uniform: true,
        simple: true,
    };
    for i in 0..sets.len() {
        if sets[i].len() != sets[0].len() {
            flags.uniform = false;
        }
        for j in i + 1..sets.len() {
            let (a, b) = (&sets[i], &sets[j]);
            if a == b {
                flags.distinct = false;
            }
            if is_subset(a, b) || is_subset(b, a) {
                flags.antichain = false;
            }
            if intersection_size(a, b) > 1 {
                flags.simple = false;
            }
        }
    }
    flags
}

/// Outcome of checking that a representation's intersection graph is a given graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Represents {
    Yes,
    /// First pair `(i, j)` (in index order) where adjacency and intersection disagree.
    No {
        first: usize,
        second: usize,
        adjacent: bool,
    },
}

impl Represents {
    pub fn holds(&self) -> bool {
        matches!(self, Represents::Yes)
    }
}

/// Checks that `S_i ∩ S_j ≠ ∅` exactly when `ij` is an edge of `h`.
pub fn represents(rep: &SetRepresentation, h: &Graph) -> Result<Represents> {
    if rep.len() != h.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: h.vertex_count(),
            found: rep.len(),
        });
    }
    for i in 0..rep.len() {
        for j in i + 1..rep.len() {
            let meets = intersection_size(rep.set(i), rep.set(j)) > 0;
            let adjacent = h.has_edge(i, j);
            if meets != adjacent {
                return Ok(Represents::No {
                    first: i,
                    second: j,
                    adjacent,
                });
            }
        }
    }
    Ok(Represents::Yes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(sets: &[&[u32]]) -> SetRepresentation {
        SetRepresentation::new(sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn empty_set_rejected() {
        assert!(matches!(
            SetRepresentation::new(vec![vec![1], vec![]]),
            Err(Error::EmptySet(l)) if l == "v2"
        ));
    }

    #[test]
    fn flags_of_small_families() {
        let f = category_flags(&rep(&[&[1], &[1, 2], &[2]]));
        assert!(f.simple && f.distinct && !f.antichain && !f.uniform);
        let f = category_flags(&rep(&[&[1, 2], &[1, 2]]));
        assert!(!f.distinct && !f.antichain && f.uniform && !f.simple);
        let f = category_flags(&rep(&[&[1, 3], &[1, 2], &[2, 4]]));
        assert!(f.simple && f.distinct && f.antichain && f.uniform);
    }

    #[test]
    fn represents_checks_pairs() {
        let k2 = Graph::complete(2);
        assert_eq!(
            represents(&rep(&[&[1], &[2]]), &k2).unwrap(),
            Represents::No {
                first: 0,
                second: 1,
                adjacent: true
            }
        );
        let p3 = Graph::path(3);
        assert!(represents(&rep(&[&[1, 2], &[2, 3], &[3, 4]]), &p3)
            .unwrap()
            .holds());
        assert!(represents(&rep(&[&[1]]), &p3).is_err());
    }

    #[test]
    fn monopolists_are_single_occurrence() {
        let r = rep(&[&[1], &[1, 2], &[1, 3]]);
        assert_eq!(r.monopolists(), vec![2, 3]);
        assert_eq!(r.universe(), vec![1, 2, 3]);
    }
}
