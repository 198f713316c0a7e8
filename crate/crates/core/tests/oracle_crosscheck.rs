mod common;

use std::collections::BTreeSet;

use setrep::oracle::{naive_search, oracle_search, universe_bound, SearchBudget};
use setrep::{line_graph, parse_graph, Category, Graph};

const SIMPLE: [Category; 3] = [Category::Sd, Category::Sa, Category::Sdu];

/// The branch-and-bound search and the brute force find the same θ and
/// the same classes.
fn agree_with_brute_force(h: &Graph) {
    for cat in SIMPLE {
        let o = oracle_search(h, cat, &SearchBudget::new(universe_bound(h, cat))).unwrap();
        assert!(o.exhausted);
        let theta = o.theta.unwrap();
        for p in 1..theta {
            assert!(
                common::brute_simple(h, cat, p).is_empty(),
                "{cat}: brute force found universe {p} < {theta}\n{}",
                h.to_edge_list()
            );
        }
        let forms: BTreeSet<_> = o.forms.iter().cloned().collect();
        assert_eq!(
            forms,
            common::brute_simple(h, cat, theta),
            "{cat}\n{}",
            h.to_edge_list()
        );
    }
}

#[test]
fn line_graphs_of_small_graphs() {
    for g in common::connected_graphs(6, 5) {
        agree_with_brute_force(&line_graph(&g).unwrap().line);
    }
}

#[test]
fn small_graphs_directly() {
    for h in common::connected_graphs(5, 6) {
        agree_with_brute_force(&h);
    }
}

#[test]
fn symmetric_line_graphs() {
    let cases = [
        "7 9\nc a1\nc a2\na1 a2\nc b1\nc b2\nb1 b2\nc d1\nc d2\nd1 d2",
        "6 7\nv1 v2\nv1 v3\nv1 v4\nv2 v3\nv4 v5\nv4 v6\nv5 v6",
        "8 7\nv1 v2\nv1 v3\nv1 v4\nv1 v5\nv2 v6\nv2 v7\nv2 v8",
    ];
    for text in cases {
        agree_with_brute_force(&line_graph(&parse_graph(text).unwrap()).unwrap().line);
    }
}

#[test]
fn naive_enumerator_agrees() {
    for h in common::connected_graphs(4, 6) {
        for cat in SIMPLE {
            let budget = SearchBudget::new(6);
            let fast = oracle_search(&h, cat, &budget).unwrap();
            let slow = naive_search(&h, cat, &budget).unwrap();
            assert_eq!(
                (fast.theta, &fast.forms),
                (slow.theta, &slow.forms),
                "{cat}"
            );
        }
    }
}

#[test]
fn categories_are_nested() {
    for h in common::connected_graphs(5, 5) {
        let theta = |cat| {
            oracle_search(&h, cat, &SearchBudget::new(12))
                .unwrap()
                .theta
                .unwrap()
        };
        let s = naive_search(&h, Category::S, &SearchBudget::new(8))
            .unwrap()
            .theta
            .unwrap();
        let (sd, sa) = (theta(Category::Sd), theta(Category::Sa));
        assert!(sa >= sd && sd >= s, "{s} {sd} {sa}\n{}", h.to_edge_list());
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let g = parse_graph("9 13\nb c\nb h\nb i\nc h\nc i\nh i\nc d\nc e\nd e\nc f\nc g\nf g\nc a")
        .unwrap();
    let h = line_graph(&g).unwrap().line;
    for cat in SIMPLE {
        let one = oracle_search(&h, cat, &SearchBudget::new(10).with_threads(1)).unwrap();
        let three = oracle_search(&h, cat, &SearchBudget::new(10).with_threads(3)).unwrap();
        assert_eq!(one.theta, three.theta);
        assert_eq!(one.forms, three.forms);
        assert_eq!(one.classes, three.classes);
    }
}
