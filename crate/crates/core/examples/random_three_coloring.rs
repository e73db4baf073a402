//! A random 3-coloring with distinct colors on each complementary pair
//! distinguishes J(2m,m)_I when I' = I''. Prints how many draws it took.

use merged_johnson::aut::SearchConfig;
use merged_johnson::dist::{complementary_pairs, random_3_coloring};
use merged_johnson::graph::MergedJohnsonSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, set) in [(8, vec![1, 3]), (8, vec![2]), (10, vec![1, 4]), (12, vec![2, 4])] {
        let spec = MergedJohnsonSpec::canonicalize(n, n / 2, &set)?;
        for seed in 0..3 {
            let (c, draws) = random_3_coloring(&spec, seed, 100, &SearchConfig::default())?;
            let ok = complementary_pairs(n / 2).iter().all(|&(u, w)| c.color(u) != c.color(w));
            println!("{spec} seed {seed}: distinguishing after {draws} draw(s), pairs split: {ok}");
        }
    }
    Ok(())
}
