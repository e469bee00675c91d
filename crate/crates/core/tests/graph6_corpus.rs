use nbwalk::graph::{from_graph6, to_graph6};
use nbwalk::Graph;

const CORPUS: &str = include_str!("data/graph6_corpus.txt");

type Entry = (&'static str, usize, Vec<(usize, usize)>);

fn entries() -> Vec<Entry> {
    CORPUS
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let mut parts = line.split_whitespace();
            let code = parts.next().unwrap();
            let n = parts.next().unwrap().parse().unwrap();
            let edges = match parts.next().unwrap() {
                "-" => Vec::new(),
                list => list
                    .split(',')
                    .map(|e| {
                        let (u, v) = e.split_once('-').unwrap();
                        (u.parse().unwrap(), v.parse().unwrap())
                    })
                    .collect(),
            };
            (code, n, edges)
        })
        .collect()
}

#[test]
fn corpus_decodes_to_reference_edges() {
    let entries = entries();
    assert_eq!(entries.len(), 50);
    for (code, n, edges) in entries {
        let g = from_graph6(code.as_bytes()).unwrap();
        let expected = Graph::from_edges(n, edges).unwrap();
        assert_eq!(g, expected, "{code}");
    }
}

#[test]
fn corpus_round_trips_bytes() {
    for (code, n, edges) in entries() {
        let g = Graph::from_edges(n, edges).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), code.as_bytes());
        let decoded = from_graph6(code.as_bytes()).unwrap();
        assert_eq!(to_graph6(&decoded).unwrap(), code.as_bytes());
    }
}

#[test]
fn corpus_covers_both_size_headers() {
    let sizes: Vec<usize> = entries().iter().map(|e| e.1).collect();
    assert!(sizes.iter().any(|&n| n <= 62));
    assert!(sizes.iter().any(|&n| n > 62));
}

#[test]
fn header_prefix_and_newline_are_accepted() {
    let g = from_graph6(b">>graph6<<Dhc\n").unwrap();
    assert_eq!(g.edge_count(), 5);
    assert!(g.degrees().all(|d| d == 2));
}
