//! Regenerates `src/gf/conway_table.in` by exhaustive Conway-order search.
//!
//! cargo run --release --example conway_table > crates/core/src/gf/conway_table.in

use affcodes::gf::conway::search_chain;

const LIMIT: u64 = 1 << 20;

fn main() {
    println!("[");
    for p in [2u32, 3, 5, 7, 11, 13] {
        let mut max_m = 0;
        while (p as u64).pow(max_m + 1) <= LIMIT {
            max_m += 1;
        }
        for (m, f) in search_chain(p, max_m) {
            let coeffs: Vec<String> = f.iter().map(|c| c.to_string()).collect();
            println!("    ({p}, {m}, &[{}]),", coeffs.join(", "));
        }
    }
    println!("]");
}
