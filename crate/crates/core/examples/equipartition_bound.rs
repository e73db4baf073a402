//! Fixed equipartitions of [2m] by cycle type, and the exact union bound
//! showing a random 3-coloring of equipartitions is usually asymmetric.

use merged_johnson::group_actions::{count_fixed_equipartitions, cycle_type_representatives, lemma_bound, max_fixed_bound};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = 4;
    println!("equipartitions of [{}] fixed by each cycle type:", 2 * m);
    for sigma in cycle_type_representatives(2 * m) {
        let kind: Vec<String> = sigma.cycle_type().iter().rev().map(|c| c.to_string()).collect();
        println!("  {:<18} {}", kind.join("+"), count_fixed_equipartitions(&sigma)?);
    }
    println!("non-identity maximum: C({}, {}) = {}", 2 * m - 2, m - 2, max_fixed_bound(m as u64)?);

    for m in 4..=10 {
        let b = lemma_bound(m)?;
        let exact = if m <= 5 { format!("{b} ") } else { String::new() };
        println!("m = {m:>2}: {exact}~10^{:.2}, below 1: {}", b.log10(), b.is_less_than_one());
    }
    Ok(())
}
