mod common;

use common::{all_products, Oracle};
use mutvis::{circ_dist, circ_interval, lin_interval, Factor, ProductGraph, Vertex};
use proptest::prelude::*;

#[test]
fn distances_and_intervals_match_bfs_on_small_products() {
    for g in all_products(6) {
        let o = Oracle::new(g);
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(g.dist(u, v).unwrap(), o.d(u, v), "{g} {u} {v}");
                assert_eq!(g.interval(u, v).unwrap(), o.interval(u, v), "{g} {u} {v}");
            }
        }
    }
}

#[test]
fn factor_intervals_match_bfs() {
    for s in 3..=12 {
        let c = Factor::cycle(s).unwrap();
        let g = ProductGraph::new(c, Factor::path(2).unwrap());
        let o = Oracle::new(g);
        for a in 0..s {
            for b in 0..s {
                let expect: Vec<usize> = o
                    .interval(Vertex::new(a, 0), Vertex::new(b, 0))
                    .iter()
                    .filter(|w| w.y == 0)
                    .map(|w| w.x)
                    .collect();
                assert_eq!(
                    circ_interval(a, b, s).unwrap().members(),
                    &expect[..],
                    "C{s} {a} {b}"
                );
                assert_eq!(
                    circ_dist(a, b, s).unwrap(),
                    o.d(Vertex::new(a, 0), Vertex::new(b, 0))
                );
            }
        }
    }
}

#[test]
fn degenerate_intervals() {
    assert_eq!(lin_interval(4, 4).members(), &[4]);
    assert_eq!(circ_interval(2, 2, 7).unwrap().members(), &[2]);
    assert_eq!(circ_interval(0, 3, 6).unwrap().len(), 6);
    assert!(circ_interval(0, 6, 6).is_err());
    assert!(circ_dist(0, 1, 2).is_err());
}

fn product() -> impl Strategy<Value = ProductGraph> {
    (any::<bool>(), 3usize..14, any::<bool>(), 3usize..14).prop_map(|(cx, s, cy, t)| {
        let f = |cycle: bool, n| {
            if cycle {
                Factor::cycle(n)
            } else {
                Factor::path(n)
            }
        };
        ProductGraph::new(f(cx, s).unwrap(), f(cy, t).unwrap())
    })
}

fn graph_and_vertices(k: usize) -> impl Strategy<Value = (ProductGraph, Vec<Vertex>)> {
    product().prop_flat_map(move |g| {
        let v = (0..g.width(), 0..g.height()).prop_map(|(x, y)| Vertex::new(x, y));
        (Just(g), proptest::collection::vec(v, k))
    })
}

proptest! {
    #[test]
    fn distance_is_a_metric((g, vs) in graph_and_vertices(3)) {
        let (u, v, w) = (vs[0], vs[1], vs[2]);
        let d = |a, b| g.dist(a, b).unwrap();
        prop_assert_eq!(d(u, v), d(v, u));
        prop_assert_eq!(d(u, v) == 0, u == v);
        prop_assert!(d(u, w) <= d(u, v) + d(v, w));
    }

    #[test]
    fn interval_is_symmetric_and_geodesic((g, vs) in graph_and_vertices(2)) {
        let (u, v) = (vs[0], vs[1]);
        let i = g.interval(u, v).unwrap();
        prop_assert_eq!(&i, &g.interval(v, u).unwrap());
        prop_assert!(i.contains(&u) && i.contains(&v));
        let d = g.dist(u, v).unwrap();
        for w in g.vertices() {
            let on = g.dist(u, w).unwrap() + g.dist(w, v).unwrap() == d;
            prop_assert_eq!(on, i.contains(&w));
        }
    }

    #[test]
    fn transpose_preserves_distance((g, vs) in graph_and_vertices(2)) {
        let flip = |v: Vertex| Vertex::new(v.y, v.x);
        prop_assert_eq!(g.dist(vs[0], vs[1]).unwrap(), g.transpose().dist(flip(vs[0]), flip(vs[1])).unwrap());
    }

    #[test]
    fn descriptors_round_trip(g in product()) {
        prop_assert_eq!(g.to_string().parse::<ProductGraph>().unwrap(), g);
    }
}
