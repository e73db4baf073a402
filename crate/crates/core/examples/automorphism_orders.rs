//! Automorphism groups found by search, against the family each spec
//! falls in. J(12,4)_{1,3} has a group larger than S_12.

use merged_johnson::aut::search;
use merged_johnson::graph::{Graph, MergedJohnsonSpec};
use merged_johnson::group_actions::{classify, generators};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs: [(usize, usize, &[usize]); 8] = [
        (7, 3, &[1]),
        (9, 4, &[1, 4]),
        (7, 3, &[2]),
        (8, 4, &[1]),
        (8, 4, &[1, 3]),
        (8, 4, &[4]),
        (9, 3, &[2]),
        (12, 4, &[1, 3]),
    ];
    for (n, k, set) in specs {
        let spec = MergedJohnsonSpec::canonicalize(n, k, set)?;
        let d = classify(&spec)?;
        let found = search(&Graph::build(&spec)?, None, &[])?;
        let gens = generators(&d, &spec)?;
        let expected = d.expected_order.as_ref().map_or("-".to_string(), |o| o.to_string());
        println!(
            "{:<16} {:<22} searched {} expected {} ({} explicit generators{})",
            spec.to_string(),
            d.case.to_string(),
            found.group_order,
            expected,
            gens.generators.len(),
            if gens.complete { "" } else { ", proper subgroup" },
        );
    }
    Ok(())
}
