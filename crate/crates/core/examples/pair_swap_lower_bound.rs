//! Why two colors never suffice for J(8,4)_{1,3}: every 2-coloring is kept
//! by a pair swap, or by the transposition (1 2) corrected with pair swaps.

use merged_johnson::aut::Coloring;
use merged_johnson::dist::PairSwapBreaker;
use merged_johnson::graph::MergedJohnsonSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = MergedJohnsonSpec::canonicalize(8, 4, &[1, 3])?;
    let breaker = PairSwapBreaker::new(&spec)?;
    let nv = breaker.graph().n_vertices();

    let antipodal = Coloring::new(
        (0..nv).map(|v| usize::from(!breaker.graph().label(v).unwrap().contains(1))).collect(),
        2,
    )?;
    let psi = breaker.breaking_automorphism(&antipodal)?;
    println!("antipodal coloring: breaker moves {} vertices", psi.moved_points().count());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut swaps = 0;
    for _ in 0..1000 {
        let c = Coloring::from_colors((0..nv).map(|_| rng.gen_range(0..2)).collect());
        if breaker.breaking_automorphism(&c)?.moved_points().count() == 2 {
            swaps += 1;
        }
    }
    println!("1000 random colorings broken, {swaps} by a single pair swap");
    Ok(())
}
