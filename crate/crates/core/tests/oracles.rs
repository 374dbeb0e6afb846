mod common;

use altwrithe_core::{blocks, longest_cycle, two_cuts};
use common::oracles::{longest_cycle_dp, random_connected, two_cuts_brute};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn longest_cycle_matches_subset_dp() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let g = random_connected(&mut rng, 12);
        for b in blocks(&g).unwrap().blocks {
            assert_eq!(longest_cycle(&b).unwrap(), longest_cycle_dp(&b), "{b:?}");
        }
    }
}

#[test]
fn two_cuts_match_pair_removal() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..500 {
        let g = random_connected(&mut rng, 12);
        for b in blocks(&g).unwrap().blocks {
            // A triangle or an edge has no pair to separate.
            let expected = if b.vertices.len() < 4 {
                vec![]
            } else {
                two_cuts_brute(&b)
            };
            assert_eq!(two_cuts(&b), expected, "{b:?}");
        }
    }
}

#[test]
fn oracles_on_known_graphs() {
    // Theta graph: two vertices joined by three paths of length 2.
    let g = altwrithe_core::SignedGraph::from_weights(
        5,
        &[
            (0, 2, 1),
            (0, 3, 1),
            (0, 4, 1),
            (1, 2, 1),
            (1, 3, 1),
            (1, 4, 1),
        ],
    )
    .unwrap();
    let b = &blocks(&g).unwrap().blocks[0];
    assert_eq!(longest_cycle_dp(b), 4);
    assert_eq!(two_cuts_brute(b), vec![(0, 1)]);
    assert_eq!(two_cuts(b), vec![(0, 1)]);
}
