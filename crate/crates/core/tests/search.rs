mod common;

use std::collections::{BTreeMap, HashSet};

use dissrho::graph::{cycle, join, path};
use dissrho::search::{
    canonical_form, min_rho_search, Checkpoint, FreeTrees, GraphList, LabeledConnected,
    SearchError, SearchOptions,
};
use dissrho::Graph;

#[test]
fn free_tree_counts_match_labeled_dedup() {
    for n in 2..=7 {
        let classes: HashSet<String> = common::labeled_trees(n)
            .iter()
            .map(common::tree_code)
            .collect();
        let trees: Vec<Graph> = FreeTrees::new(n).unwrap().iter().collect();
        assert_eq!(trees.len(), classes.len(), "n = {n}");
        let got: HashSet<String> = trees.iter().map(common::tree_code).collect();
        assert_eq!(got, classes);
    }
}

#[test]
fn free_tree_counts_by_leaf_growth() {
    // Every tree on n vertices is a tree on n - 1 vertices plus a leaf.
    let mut level: HashSet<String> = HashSet::from([common::tree_code(&Graph::new(1))]);
    let mut reps = vec![Graph::new(1)];
    for n in 2..=10 {
        let mut next = Vec::new();
        level.clear();
        for t in &reps {
            for v in 0..t.order() {
                let mut g = t.clone();
                let w = g.add_vertex();
                g.add_edge(v, w).unwrap();
                if level.insert(common::tree_code(&g)) {
                    next.push(g);
                }
            }
        }
        reps = next;
        assert_eq!(
            FreeTrees::new(n).unwrap().iter().count(),
            reps.len(),
            "n = {n}"
        );
    }
    assert_eq!(reps.len(), 106);
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn labeled_connected_counts_by_inclusion_exclusion() {
    let mut c = [0u64; 8];
    for n in 1..=6u64 {
        let all = 1u64 << binom(n, 2);
        let split: u64 = (1..n)
            .map(|k| binom(n - 1, k - 1) * c[k as usize] * (1u64 << binom(n - k, 2)))
            .sum();
        c[n as usize] = all - split;
        assert_eq!(
            LabeledConnected::new(n as usize).unwrap().iter().count() as u64,
            c[n as usize]
        );
    }
    assert_eq!((c[3], c[4]), (4, 38));
    assert!(LabeledConnected::new(8).is_err());
}

#[test]
fn canonical_form_separates_classes() {
    // All 112 graph classes on 6 vertices.
    let classes: HashSet<String> = LabeledConnected::new(6)
        .unwrap()
        .iter()
        .map(|g| canonical_form(&g).unwrap())
        .collect();
    assert_eq!(classes.len(), 112);
}

#[test]
fn small_order_minimizer() {
    let res = min_rho_search(
        &LabeledConnected::new(5).unwrap(),
        2,
        &SearchOptions::default(),
    )
    .unwrap();
    let c4_k1 = join(&cycle(4).unwrap(), &Graph::new(1));
    assert_eq!(
        canonical_form(&res.winner.graph().unwrap()).unwrap(),
        canonical_form(&c4_k1).unwrap()
    );
    assert!(res.ties.is_empty());
    let best = LabeledConnected::new(5)
        .unwrap()
        .iter()
        .filter(|g| common::brute_diss(g) == 2)
        .map(|g| common::dense_rho(&g))
        .fold(f64::INFINITY, f64::min);
    assert!((res.winner.rho - best).abs() < 1e-9);
}

#[test]
fn empty_candidate_set() {
    let err =
        min_rho_search(&FreeTrees::new(6).unwrap(), 1, &SearchOptions::default()).unwrap_err();
    assert!(matches!(err, SearchError::NoCandidates { .. }));
}

#[test]
fn explicit_list_source() {
    let list = GraphList::new(9, vec![path(9).unwrap(), cycle(9).unwrap()], "two").unwrap();
    let res = min_rho_search(&list, 6, &SearchOptions::default()).unwrap();
    assert_eq!(
        res.winner.g6,
        dissrho::graph::encode_graph6(&path(9).unwrap())
    );
    assert!(GraphList::new(9, vec![path(8).unwrap()], "bad").is_err());
}

#[test]
fn checkpoint_resume_and_revalidation() {
    let dir = tempfile::tempdir().unwrap();
    let source = FreeTrees::new(13).unwrap();
    let full = min_rho_search(
        &source,
        10,
        &SearchOptions {
            workers: Some(1),
            ..Default::default()
        },
    )
    .unwrap();

    let opts = SearchOptions {
        workers: Some(1),
        checkpoint_dir: Some(dir.path().to_path_buf()),
        checkpoint_every: Some(1),
        stop_after_chunks: Some(2),
    };
    let mut interrupts = 0;
    let resumed = loop {
        match min_rho_search(&source, 10, &opts) {
            Ok(r) => break r,
            Err(SearchError::Interrupted { .. }) => interrupts += 1,
            Err(e) => panic!("{e}"),
        }
        assert!(interrupts < 10_000);
    };
    assert!(interrupts > 0);
    assert_eq!(resumed.winner, full.winner);
    assert_eq!(resumed.near_minimal, full.near_minimal);
    assert_eq!(resumed.graphs_examined, full.graphs_examined);

    let (cursor, records) = Checkpoint::open(dir.path())
        .unwrap()
        .load()
        .unwrap()
        .unwrap();
    assert_eq!(cursor.n, 13);
    for r in &records {
        assert!(r.revalidate().unwrap() < 1e-9);
    }
    let mut bad = records[0].clone();
    bad.diss += 1;
    assert!(bad.revalidate().is_err());

    // A checkpoint for different parameters is discarded, not reused.
    let other = SearchOptions {
        checkpoint_dir: Some(dir.path().into()),
        ..Default::default()
    };
    let res = min_rho_search(&source, 9, &other).unwrap();
    assert_eq!(res.winner.diss, 9);
    let (cursor, _) = Checkpoint::open(dir.path())
        .unwrap()
        .load()
        .unwrap()
        .unwrap();
    assert_eq!(cursor.psi, 9);
}

#[test]
fn equal_radius_pair_is_reported_as_a_tie() {
    // Non-isomorphic connected graphs on 6 vertices with the same radius and
    // dissociation number, grouped by the dense solver.
    let mut groups: BTreeMap<(i64, usize), Vec<Graph>> = BTreeMap::new();
    let mut seen = HashSet::new();
    for g in LabeledConnected::new(6).unwrap().iter() {
        if seen.insert(canonical_form(&g).unwrap()) {
            let key = (
                (common::dense_rho(&g) * 1e8).round() as i64,
                common::brute_diss(&g),
            );
            groups.entry(key).or_default().push(g);
        }
    }
    let (_, pair) = groups
        .into_iter()
        .find(|(_, v)| v.len() >= 2)
        .expect("an equal-radius pair exists");
    let psi = common::brute_diss(&pair[0]);
    let list = GraphList::new(6, pair[..2].to_vec(), "equal radius").unwrap();
    let res = min_rho_search(&list, psi, &SearchOptions::default()).unwrap();
    assert_eq!(res.ties.len(), 1);
    assert_eq!(res.near_minimal.len(), 2);
    assert!(res.exact_comparisons > 0);
    assert!(res.near_minimal.iter().all(|r| r.rho_exact_rank == Some(0)));
}
