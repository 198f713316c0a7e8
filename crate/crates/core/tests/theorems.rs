mod common;

use setrep::oracle::{oracle_search, universe_bound, SearchBudget};
use setrep::theorems::{theta_tau_linegraph, witness_sa, witness_sd, Tau, Theta};
use setrep::{category_flags, isomorphic, line_graph, parse_graph, represents, Category, Graph};

fn oracle(g: &Graph, cat: Category) -> (usize, usize) {
    let h = line_graph(g).unwrap().line;
    let r = oracle_search(&h, cat, &SearchBudget::new(universe_bound(&h, cat))).unwrap();
    assert!(r.exhausted);
    (r.theta.unwrap(), r.classes.len())
}

#[test]
fn closed_forms_against_exhaustive_search() {
    for g in common::connected_graphs(8, 7) {
        let h = line_graph(&g).unwrap().line;
        for cat in [Category::Sd, Category::Sa, Category::Sdu] {
            let r = theta_tau_linegraph(&g, cat).unwrap();
            let (theta, tau) = oracle(&g, cat);
            if let Some(t) = r.theta.exact() {
                assert_eq!(t, theta, "{cat} θ\n{}", g.to_edge_list());
            }
            if let Some(t) = r.tau.exact() {
                // The closed forms count some symmetric configurations twice
                // but never miss a class.
                assert!(t as usize >= tau, "{cat} τ\n{}", g.to_edge_list());
            }
            for w in &r.witnesses {
                assert!(represents(w, &h).unwrap().holds());
                assert!(category_flags(w).satisfies(cat.required()));
                assert_eq!(Some(w.universe_size()), r.theta.exact());
            }
            for (i, a) in r.witnesses.iter().enumerate() {
                for b in &r.witnesses[i + 1..] {
                    assert!(isomorphic(a, b).is_none());
                }
            }
            if r.witnesses_complete {
                assert_eq!(
                    r.tau.exact(),
                    Some(tau as u64),
                    "{cat}\n{}",
                    g.to_edge_list()
                );
            }
        }
    }
}

#[test]
fn figure_graph() {
    let g = parse_graph("9 13\nb c\nb h\nb i\nc h\nc i\nh i\nc d\nc e\nd e\nc f\nc g\nf g\nc a")
        .unwrap();
    let sd = theta_tau_linegraph(&g, Category::Sd).unwrap();
    assert_eq!((sd.theta, sd.tau), (Theta::Exact(8), Tau::Exact(1)));
    assert_eq!(oracle(&g, Category::Sd), (8, 1));
    let sa = theta_tau_linegraph(&g, Category::Sa).unwrap();
    assert_eq!((sa.theta, sa.tau), (Theta::Exact(9), Tau::Exact(1)));
    assert_eq!(oracle(&g, Category::Sa), (9, 1));
    assert_eq!(witness_sd(&g).unwrap().universe_size(), 8);
    assert_eq!(witness_sa(&g).unwrap().universe_size(), 9);
}

/// Graphs where the closed-form τ counts two constructions that turn out
/// to be isomorphic as set families.
#[test]
fn known_overcounts() {
    let k4 = Graph::complete(4);
    let w2 = parse_graph("4 5\nx y\nx a\ny a\nx b\ny b").unwrap();
    let paw = parse_graph("4 4\nx y\nx z\ny z\nx p").unwrap();
    for g in [&k4, &w2, &paw] {
        for cat in [Category::Sd, Category::Sa, Category::Sdu] {
            assert_eq!(theta_tau_linegraph(g, cat).unwrap().tau, Tau::Exact(2));
            assert_eq!(oracle(g, cat).1, 1);
        }
    }
    let friendship =
        parse_graph("7 9\nc a1\nc a2\na1 a2\nc b1\nc b2\nb1 b2\nc d1\nc d2\nd1 d2").unwrap();
    assert_eq!(
        theta_tau_linegraph(&friendship, Category::Sd).unwrap().tau,
        Tau::Exact(3)
    );
    assert_eq!(oracle(&friendship, Category::Sd), (7, 2));

    let wings = parse_graph("6 7\nv1 v2\nv1 v3\nv1 v4\nv2 v3\nv4 v5\nv4 v6\nv5 v6").unwrap();
    let r = theta_tau_linegraph(&wings, Category::Sd).unwrap();
    assert_eq!(r.tau, Tau::Exact(4));
    assert_eq!(r.witnesses.len(), 3);
    assert!(!r.witnesses_complete);
    assert_eq!(oracle(&wings, Category::Sd), (6, 3));

    let broom = parse_graph("6 5\nv1 v2\nv1 v3\nv1 v4\nv2 v5\nv2 v6").unwrap();
    let r = theta_tau_linegraph(&broom, Category::Sa).unwrap();
    assert_eq!(r.tau, Tau::Exact(4));
    assert_eq!(r.witnesses.len(), 3);
    assert_eq!(oracle(&broom, Category::Sa), (6, 3));
}

#[test]
fn triangle_sa_has_one_class() {
    let r = theta_tau_linegraph(&Graph::complete(3), Category::Sa).unwrap();
    assert_eq!((r.theta, r.tau), (Theta::Exact(3), Tau::Exact(1)));
    assert_eq!(oracle(&Graph::complete(3), Category::Sa), (3, 1));
}
