//! The one exception among Johnson-type graphs with k = 2: the Petersen
//! graph J(5,2)_{2} has no distinguishing 2-coloring, but has a 3-coloring.

use merged_johnson::aut::{is_distinguishing, search, Coloring};
use merged_johnson::dist::brute_force_dist;
use merged_johnson::graph::{Graph, MergedJohnsonSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = MergedJohnsonSpec::canonicalize(5, 2, &[2])?;
    let g = Graph::build(&spec)?;
    println!("{spec}: {} vertices, {} edges", g.n_vertices(), g.edge_count());
    println!("|Aut| = {}", search(&g, None, &[])?.group_order);

    // all 2^10 colorings, not just one per color swap
    let mut distinguishing = 0;
    for mask in 0u32..1 << 10 {
        let c = Coloring::from_colors((0..10).map(|v| (mask >> v & 1) as usize).collect());
        if is_distinguishing(&g, &c)? {
            distinguishing += 1;
        }
    }
    println!("distinguishing 2-colorings: {distinguishing} of 1024");
    println!("Dist by exhaustive search: {}", brute_force_dist(&g, 4)?);
    Ok(())
}
