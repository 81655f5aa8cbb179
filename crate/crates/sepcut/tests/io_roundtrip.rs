use proptest::prelude::*;
use proptest::sample::subsequence;

use sepcut::io::{
    decode_graph6, encode_graph6, parse_edge_list, read_bipartite, read_graph, write_bipartite, write_edge_list,
    write_graph,
};
use sepcut_core::generators::random_bipartite_restricted;
use sepcut_core::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let total = pairs.len();
        subsequence(pairs, 0..=total).prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn text_formats_round_trip(g in graph(32)) {
        prop_assert_eq!(&parse_edge_list(&write_edge_list(&g)).unwrap(), &g);
        let s = encode_graph6(&g);
        prop_assert_eq!(&decode_graph6(&s).unwrap(), &g);
        prop_assert_eq!(encode_graph6(&decode_graph6(&s).unwrap()), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn files_round_trip(g in graph(32)) {
        let dir = tempfile::tempdir().unwrap();
        for name in ["g.g6", "g.txt", "g.edges"] {
            let path = dir.path().join(name);
            write_graph(&path, &g).unwrap();
            prop_assert_eq!(&read_graph(&path).unwrap(), &g);
        }
    }
}

/// graph6 by hand from the format description: `N(n) = n + 63` for small
/// `n`, then the upper triangle column by column in groups of six bits.
fn reference_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j) as u8);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(0);
    }
    let mut out = vec![n as u8 + 63];
    out.extend(bits.chunks(6).map(|c| c.iter().fold(0, |a, &b| a << 1 | b) + 63));
    out
}

#[test]
fn graph6_star_is_byte_identical() {
    let g = decode_graph6("D?{").unwrap();
    assert_eq!(g.order(), 5);
    assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 4), (1, 4), (2, 4), (3, 4)]);
    assert_eq!(encode_graph6(&g), "D?{");
    assert_eq!(reference_graph6(&g), b"D?{");
}

#[test]
fn graph6_matches_reference_encoder() {
    for n in 0..=12 {
        let g = Graph::path(n);
        assert_eq!(encode_graph6(&g).into_bytes(), reference_graph6(&g));
        let k = Graph::complete(n);
        assert_eq!(encode_graph6(&k).into_bytes(), reference_graph6(&k));
    }
}

#[test]
fn large_orders_use_long_headers() {
    let g = Graph::path(300);
    let s = encode_graph6(&g);
    assert!(s.starts_with('~') && !s.starts_with("~~"));
    assert_eq!(decode_graph6(&s).unwrap(), g);
    // the eight-byte header is accepted on input even for small n
    let long = format!("~~??????{}", &encode_graph6(&Graph::path(4))[1..]);
    let long = long.replacen("??????", "?????C", 1);
    assert_eq!(decode_graph6(&long).unwrap(), Graph::path(4));
}

#[test]
fn edge_list_example() {
    assert_eq!(parse_edge_list("3 2\n0 1\n1 2").unwrap(), Graph::path(3));
    assert!(parse_edge_list("3 1\n1 1").unwrap_err().to_string().starts_with("line 2"));
}

#[test]
fn bipartite_files() {
    let dir = tempfile::tempdir().unwrap();
    let r = random_bipartite_restricted(10, 4, 3).unwrap();
    let path = dir.path().join("h.g6");
    write_bipartite(&path, &r.graph).unwrap();
    assert_eq!(read_bipartite(&path, 10).unwrap(), r.graph);
}
