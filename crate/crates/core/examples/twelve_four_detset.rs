//! J(12,4)_{1,3}: a 16-vertex determining set built from cyclic windows,
//! and the 17-vertex asymmetric subgraph that gives Dist = 2.

use merged_johnson::aut::{is_asymmetric, is_determining_set, search};
use merged_johnson::dist::{constructed_asymmetric_set, determining_set_for};
use merged_johnson::graph::{Graph, MergedJohnsonSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = MergedJohnsonSpec::canonicalize(12, 4, &[1, 3])?;
    let g = Graph::build(&spec)?;
    let aut = search(&g, None, &[])?;
    println!("{spec}: {} vertices, |Aut| = {} ({} search nodes)", g.n_vertices(), aut.group_order, aut.stats.nodes);

    let (set, family) = determining_set_for(&spec)?;
    println!("{family:?} set, {} vertices, determining: {}", set.len(), is_determining_set(&g, &set)?);

    let h1 = constructed_asymmetric_set(family)?;
    let h = g.induced_subgraph(&h1)?;
    println!("H1 has {} vertices, asymmetric: {}", h.n_vertices(), is_asymmetric(&h)?);
    for (degree, class) in h.degree_partition() {
        let labels: Vec<String> = class.iter().map(|&v| h.label(v).unwrap().to_string()).collect();
        println!("  D{degree}: {}", labels.join(" "));
    }
    Ok(())
}
