//! J(2m,m)_{m} is a perfect matching on complementary pairs. A coloring
//! distinguishes it exactly when every pair gets its own unordered pair of
//! distinct colors, so Dist is the least r with C(r,2) >= C(2m,m)/2.

use merged_johnson::aut::is_distinguishing;
use merged_johnson::combinatorics::binom_u64;
use merged_johnson::dist::{case8_value, matching_coloring};
use merged_johnson::graph::{Graph, MergedJohnsonSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in 2..=8usize {
        let pairs = binom_u64(2 * m, m) / 2;
        let r = case8_value(m as u64);
        print!("m = {m}: {pairs} pairs, Dist = {r}");
        if m <= 5 {
            let g = Graph::build(&MergedJohnsonSpec::canonicalize(2 * m, m, &[m])?)?;
            print!(", matching coloring distinguishes: {}", is_distinguishing(&g, &matching_coloring(m, r as usize)?)?);
            if let Err(e) = matching_coloring(m, r as usize - 1) {
                print!(", r - 1: {e}");
            }
        }
        println!();
    }
    Ok(())
}
