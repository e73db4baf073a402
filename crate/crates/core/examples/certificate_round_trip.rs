//! Certificates survive JSON round trips, and tampering is caught.

use merged_johnson::certificate::{verify_certificate, Certificate};
use merged_johnson::dist::distinguishing_number;
use merged_johnson::graph::MergedJohnsonSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = MergedJohnsonSpec::canonicalize(7, 3, &[1, 3])?;
    let cert = distinguishing_number(&spec)?;
    let json = cert.to_json();
    println!("{}", json.lines().take(8).collect::<Vec<_>>().join("\n"));
    println!("  ...");

    let back = Certificate::from_json(&json)?;
    println!("round trip verifies: {:?}", verify_certificate(&back));

    let mut lower = back.clone();
    lower.dist = 1;
    println!("claiming 1 color: {}", verify_certificate(&lower).unwrap_err());

    let mut recolored = back;
    for entry in recolored.coloring.iter_mut() {
        entry.color = 2;
    }
    println!("one color class: {}", verify_certificate(&recolored).unwrap_err());
    Ok(())
}
