//! Distinguishing numbers of every merged Johnson graph with n <= 10,
//! each backed by a checked certificate.

use merged_johnson::dist::{classify_dist, distinguishing_number};
use merged_johnson::graph::MergedJohnsonSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_n = std::env::args().nth(1).map_or(Ok(10), |a| a.parse())?;
    println!("{:<18} {:>5}  {:<14} {:<19} lower", "graph", "Dist", "case", "upper");
    for n in 4..=max_n {
        for k in 2..=n / 2 {
            for mask in 1u32..(1 << k) - 1 {
                let set: Vec<usize> = (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let spec = MergedJohnsonSpec::canonicalize(n, k, &set)?;
                let cert = distinguishing_number(&spec)?;
                println!(
                    "{:<18} {:>5}  {:<14} {:<19} {}",
                    spec.to_string(),
                    cert.dist,
                    classify_dist(&spec).to_string(),
                    serde_json::to_value(cert.upper.method)?.as_str().unwrap_or(""),
                    serde_json::to_value(cert.lower.method)?.as_str().unwrap_or(""),
                );
            }
        }
    }
    Ok(())
}
