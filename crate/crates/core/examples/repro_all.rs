//! Runs every repro item and prints its report.
use pcaxial::repro::{repro, ReproOptions, ITEMS};
use std::time::Instant;
fn main() {
    let opts = ReproOptions::default();
    for item in ITEMS {
        let t = Instant::now();
        match repro(item, &opts) {
            Ok(r) => print!("{}  ({:.1?})\n", r.text(), t.elapsed()),
            Err(e) => println!("{item}: error {e}"),
        }
    }
}
