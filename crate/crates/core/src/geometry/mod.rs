//! Finite linear spaces and projective planes.
//!
//! Points are numbered from 0 internally. JSON output numbers them from 1 so
//! that point `i` lines up with vertex `v{i}` of the complete graph.

mod field;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cover::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use field::GaloisField;

/// Points `0..points` and lines as sorted point lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLinearSpace {
    points: usize,
    lines: Vec<Vec<usize>>,
}

impl FiniteLinearSpace {
    /// Validates (L1) line sizes in `2..=n-1` and (L2) every pair of points
    /// on exactly one line.
    pub fn new(points: usize, lines: Vec<Vec<usize>>) -> Result<Self> {
        let mut clean = Vec::with_capacity(lines.len());
        for mut l in lines {
            l.sort_unstable();
            l.dedup();
            if let Some(&x) = l.iter().find(|&&x| x >= points) {
                return Err(Error::VertexOutOfRange {
                    index: x,
                    count: points,
                });
            }
            if l.len() < 2 || l.len() + 1 > points {
                return Err(Error::Domain(format!(
                    "line {l:?} has {} points, need 2..={}",
                    l.len(),
                    points.saturating_sub(1)
                )));
            }
            clean.push(l);
        }
        let mut count = vec![vec![0u32; points]; points];
        for l in &clean {
            for (i, &a) in l.iter().enumerate() {
                for &b in &l[i + 1..] {
                    count[a][b] += 1;
                }
            }
        }
        for a in 0..points {
            for b in a + 1..points {
                if count[a][b] != 1 {
                    return Err(Error::Domain(format!(
                        "points {} and {} lie on {} lines",
                        a + 1,
                        b + 1,
                        count[a][b]
                    )));
                }
            }
        }
        Ok(FiniteLinearSpace {
            points,
            lines: clean,
        })
    }

    pub fn point_count(&self) -> usize {
        self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    /// Lines through point `p`, by index.
    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        (0..self.lines.len())
            .filter(|&i| self.lines[i].binary_search(&p).is_ok())
            .collect()
    }

    fn line_of(&self, a: usize, b: usize) -> usize {
        self.lines
            .iter()
            .position(|l| l.binary_search(&a).is_ok() && l.binary_search(&b).is_ok())
            .expect("(L2) holds")
    }

    pub fn to_json(&self) -> FlsJson {
        FlsJson {
            points: self.points,
            order: None,
            lines: self
                .lines
                .iter()
                .map(|l| l.iter().map(|&p| p + 1).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &FlsJson) -> Result<Self> {
        let mut lines = Vec::with_capacity(j.lines.len());
        for l in &j.lines {
            let mut line = Vec::with_capacity(l.len());
            for &p in l {
                if p == 0 || p > j.points {
                    return Err(Error::VertexOutOfRange {
                        index: p,
                        count: j.points,
                    });
                }
                line.push(p - 1);
            }
            lines.push(line);
        }
        Self::new(j.points, lines)
    }
}

/// JSON shape of a linear space; points are numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlsJson {
    pub points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    pub lines: Vec<Vec<usize>>,
}

/// A linear space checked to be a projective plane of the given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCertificate {
    space: FiniteLinearSpace,
    order: u32,
}

impl PlaneCertificate {
    /// Checks (P1), (P2) and the counting properties of a plane of order `r`.
    pub fn verify(space: FiniteLinearSpace) -> Result<Self> {
        let n = space.point_count();
        let r =
            order_for(n).ok_or_else(|| Error::Domain(format!("{n} is not of the form r^2+r+1")))?;
        let k = r as usize + 1;
        let fail = |what: String| Err(Error::Domain(format!("not a plane of order {r}: {what}")));
        if space.line_count() != n {
            return fail(format!("{} lines", space.line_count()));
        }
        if let Some(l) = space.lines().iter().find(|l| l.len() != k) {
            return fail(format!("line {l:?} has {} points", l.len()));
        }
        for p in 0..n {
            if space.lines_through(p).len() != k {
                return fail(format!("point {} is on the wrong number of lines", p + 1));
            }
        }
        let lines = space.lines();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let meet = lines[i]
                    .iter()
                    .filter(|p| lines[j].binary_search(p).is_ok())
                    .count();
                if meet != 1 {
                    return fail(format!("two lines meet in {meet} points"));
                }
            }
        }
        if quadrangle(&space).is_none() {
            return fail("no four points with no three collinear".into());
        }
        Ok(PlaneCertificate { space, order: r })
    }

    pub fn space(&self) -> &FiniteLinearSpace {
        &self.space
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn to_json(&self) -> FlsJson {
        FlsJson {
            order: Some(self.order),
            ..self.space.to_json()
        }
    }
}

/// `r >= 2` with `n = r^2 + r + 1`, if any.
pub fn order_for(n: usize) -> Option<u32> {
    (2u32..)
        .take_while(|&r| (r * r + r + 1) as usize <= n)
        .find(|&r| (r * r + r + 1) as usize == n)
}

/// Four points, no three on a common line.
fn quadrangle(space: &FiniteLinearSpace) -> Option<[usize; 4]> {
    let n = space.point_count();
    let collinear = |a: usize, b: usize, c: usize| {
        let l = &space.lines()[space.line_of(a, b)];
        l.binary_search(&c).is_ok()
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if collinear(a, b, c) {
                    continue;
                }
                for d in c + 1..n {
                    if !collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// The Desarguesian plane PG(2, q).
pub fn projective_plane(q: u32) -> Result<PlaneCertificate> {
    let f = GaloisField::new(q)?;
    let q = f.order();
    // Normalized vectors: first nonzero coordinate is 1.
    let mut pts: Vec<[usize; 3]> = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for a in 0..q {
        pts.push([0, 1, a]);
    }
    pts.push([0, 0, 1]);
    let dot =
        |x: &[usize; 3], y: &[usize; 3]| (0..3).fold(0, |acc, i| f.add(acc, f.mul(x[i], y[i])));
    let lines: Vec<Vec<usize>> = pts
        .iter()
        .map(|l| (0..pts.len()).filter(|&p| dot(l, &pts[p]) == 0).collect())
        .collect();
    PlaneCertificate::verify(FiniteLinearSpace::new(pts.len(), lines)?)
}

/// One line of `n - 1` points and `n - 1` lines through the last point.
pub fn near_pencil(n: usize) -> Result<FiniteLinearSpace> {
    if n < 3 {
        return Err(Error::Domain(format!("near-pencil needs n >= 3, got {n}")));
    }
    let mut lines = vec![(0..n - 1).collect::<Vec<_>>()];
    lines.extend((0..n - 1).map(|i| vec![i, n - 1]));
    FiniteLinearSpace::new(n, lines)
}

/// `{v1..vn}` followed by the singletons `{v2}..{vn}`.
pub fn silly_partition(n: usize) -> Result<CliqueCover> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "silly partition needs n >= 2, got {n}"
        )));
    }
    let mut cliques = vec![(0..n).collect::<Vec<_>>()];
    cliques.extend((1..n).map(|i| vec![i]));
    CliqueCover::new(Graph::complete(n), cliques)
}

/// Deletes up to two points, renumbering the survivors in order and
/// dropping lines left with fewer than two points.
pub fn puncture(plane: &PlaneCertificate, points: &[usize]) -> Result<FiniteLinearSpace> {
    let removed: BTreeSet<usize> = points.iter().copied().collect();
    if removed.len() > 2 {
        return Err(Error::Unsupported(format!(
            "puncturing {} points (at most 2 supported)",
            removed.len()
        )));
    }
    let n = plane.space().point_count();
    if let Some(&x) = removed.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { index: x, count: n });
    }
    let mut new_index = vec![usize::MAX; n];
    let mut next = 0;
    for (p, slot) in new_index.iter_mut().enumerate() {
        if !removed.contains(&p) {
            *slot = next;
            next += 1;
        }
    }
    let lines = plane
        .space()
        .lines()
        .iter()
        .map(|l| {
            l.iter()
                .filter(|p| !removed.contains(p))
                .map(|&p| new_index[p])
                .collect::<Vec<_>>()
        })
        .filter(|l| l.len() >= 2)
        .collect();
    FiniteLinearSpace::new(next, lines)
}

/// Number of non-isomorphic projective planes on `n` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PlaneCount {
    Count(u32),
    Unknown,
}

impl PlaneCount {
    pub fn known(self) -> Option<u32> {
        match self {
            PlaneCount::Count(c) => Some(c),
            PlaneCount::Unknown => None,
        }
    }
}

pub fn n_pp(n: usize) -> PlaneCount {
    match order_for(n) {
        None => PlaneCount::Count(0),
        Some(2 | 3 | 4 | 5 | 7 | 8) => PlaneCount::Count(1),
        Some(6 | 10) => PlaneCount::Count(0),
        Some(9) => PlaneCount::Count(4),
        Some(_) => PlaneCount::Unknown,
    }
}

/// Each line as a clique of `K_n`.
pub fn fls_to_cover(space: &FiniteLinearSpace) -> CliqueCover {
    CliqueCover::new(Graph::complete(space.point_count()), space.lines().to_vec())
        .expect("lines are cliques of the complete graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_counts() {
        for (q, n) in [
            (2u32, 7usize),
            (3, 13),
            (4, 21),
            (5, 31),
            (7, 57),
            (8, 73),
            (9, 91),
        ] {
            let p = projective_plane(q).unwrap();
            assert_eq!(p.order(), q);
            assert_eq!(p.space().point_count(), n);
            assert_eq!(p.space().line_count(), n);
        }
        assert!(matches!(projective_plane(6), Err(Error::NoPlaneExists(6))));
        assert!(matches!(
            projective_plane(11),
            Err(Error::NoSuchPlaneConstruction(11))
        ));
    }

    #[test]
    fn near_pencil_small() {
        assert_eq!(
            near_pencil(3).unwrap().lines(),
            [vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(
            near_pencil(4).unwrap().lines(),
            [vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
        assert!(near_pencil(2).is_err());
        assert!(PlaneCertificate::verify(near_pencil(7).unwrap()).is_err());
    }

    #[test]
    fn silly_partition_shape() {
        let sp = silly_partition(2).unwrap();
        assert_eq!(sp.cliques(), [vec![0, 1], vec![1]]);
        let r = silly_partition(7).unwrap().validate();
        assert!(r.is_partition);
        assert_eq!(r.trivial_count, 6);
        assert!(silly_partition(1).is_err());
    }

    #[test]
    fn punctures() {
        let fano = projective_plane(2).unwrap();
        assert_eq!(puncture(&fano, &[]).unwrap(), *fano.space());
        let one = puncture(&fano, &[3]).unwrap();
        assert_eq!((one.point_count(), one.line_count()), (6, 7));
        let two = puncture(&fano, &[0, 1]).unwrap();
        assert_eq!((two.point_count(), two.line_count()), (5, 6));
        assert!(matches!(
            puncture(&fano, &[0, 1, 2]),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn n_pp_lookup() {
        assert_eq!(n_pp(7), PlaneCount::Count(1));
        assert_eq!(n_pp(91), PlaneCount::Count(4));
        assert_eq!(n_pp(8), PlaneCount::Count(0));
        assert_eq!(n_pp(43), PlaneCount::Count(0));
        assert_eq!(n_pp(111), PlaneCount::Count(0));
        assert_eq!(n_pp(133), PlaneCount::Unknown);
        assert_eq!(n_pp(1), PlaneCount::Count(0));
        assert_eq!(n_pp(3), PlaneCount::Count(0));
    }

    #[test]
    fn json_round_trip() {
        let p = projective_plane(3).unwrap();
        let j = p.to_json();
        assert_eq!(j.order, Some(3));
        assert_eq!(FiniteLinearSpace::from_json(&j).unwrap(), *p.space());
    }
}
