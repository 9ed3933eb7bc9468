//! Prints N_1..N_D for the nodal cubic, D from the first argument (default 4).

use std::time::Instant;

fn main() {
    let max: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let start = Instant::now();
    let n = lgw_core::scattering::nodal_cubic_invariants(max).expect("completion");
    for (d, v) in n.iter().enumerate() {
        println!("N_{} = {}", d + 1, v);
    }
    eprintln!("order {}: {:?}", 2 * max, start.elapsed());
}
