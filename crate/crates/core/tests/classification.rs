mod common;

use setrep::classify::{classify, PeacockKind};
use setrep::{parse_graph, Graph};

fn flags(g: &Graph) -> Vec<&'static str> {
    let c = classify(g).unwrap();
    let mut out = Vec::new();
    if c.is_k3 {
        out.push("K3");
    }
    if c.is_k4 {
        out.push("K4");
    }
    if c.windmill_t.is_some() {
        out.push("W");
    }
    if c.is_3k2_join_k1 {
        out.push("3K2vK1");
    }
    if c.star_center.is_some() {
        out.push("star");
    }
    if let Some(p) = &c.peacock {
        out.push(p.kind.name());
    }
    out
}

#[test]
fn class_predicates_are_exclusive() {
    let graphs = common::connected_graphs(7, 21);
    assert_eq!(graphs.len(), 995, "connected graphs on 2..=7 vertices");
    let mut seen = std::collections::BTreeMap::new();
    for g in &graphs {
        let f = flags(g);
        assert!(f.len() <= 1, "{f:?} for\n{}", g.to_edge_list());
        if let Some(&name) = f.first() {
            *seen.entry(name).or_insert(0) += 1;
        }
    }
    for name in [
        "K3", "K4", "W", "3K2vK1", "star", "TP1", "TP2", "TPd1", "TPd2",
    ] {
        assert!(seen.contains_key(name), "{name} never detected");
    }
}

#[test]
fn gamma_prime_exceeds_gamma_by_critical_count() {
    for g in common::connected_graphs(7, 9) {
        let c = classify(&g).unwrap();
        assert_eq!(c.gamma_prime - c.gamma, c.vc.len());
    }
}

#[test]
fn star_quantities() {
    for n in 2..=8 {
        let c = classify(&Graph::star(n)).unwrap();
        assert_eq!(c.star_center, Some(0));
        assert_eq!(c.v2, vec![0]);
        assert_eq!(c.vc, vec![(0, n)]);
        assert_eq!(c.gamma, n);
    }
}

/// Sorts each triple's last two entries, then the list.
fn normalized(t: impl IntoIterator<Item = (usize, usize, usize)>) -> Vec<(usize, usize, usize)> {
    let mut v: Vec<_> = t
        .into_iter()
        .map(|(a, b, x)| (a, b.min(x), b.max(x)))
        .collect();
    v.sort();
    v
}

#[test]
fn wings_follow_relabeling() {
    let g = parse_graph("7 9\nc a1\nc a2\na1 a2\nc b1\nc b2\nb1 b2\nb1 x\nx y\nb2 y").unwrap();
    let c = classify(&g).unwrap();
    assert!(!c.wings.is_empty());
    let perm = [3, 6, 0, 5, 1, 4, 2];
    let d = classify(&g.permuted(&perm)).unwrap();
    let moved = |t: &[(usize, usize, usize)]| {
        normalized(t.iter().map(|&(a, b, x)| (perm[a], perm[b], perm[x])))
    };
    assert_eq!(moved(&c.wings), normalized(d.wings.iter().copied()));
    assert_eq!(moved(&c.semiwings), normalized(d.semiwings.iter().copied()));
}

#[test]
fn peacock_templates() {
    let tp2 = parse_graph("6 6\nx y\nx z\ny z\nx p\nx q\ny r").unwrap();
    let p = classify(&tp2).unwrap().peacock.unwrap();
    assert_eq!(p.kind, PeacockKind::TP2);
    assert_eq!(p.plume_counts, vec![2, 1]);

    let d1 = parse_graph("5 6\nx y\nx a\ny a\nx b\ny b\nx p").unwrap();
    let p = classify(&d1).unwrap().peacock.unwrap();
    assert_eq!((p.kind, p.t), (PeacockKind::TPd1, Some(2)));

    // A plume on the degree-2 vertex of W_2 is not a peacock.
    let other = parse_graph("5 6\nx y\nx a\ny a\nx b\ny b\na p").unwrap();
    assert!(classify(&other).unwrap().peacock.is_none());
}
