//! Maintenance command: regenerates the bundled preflop ranking asset by
//! exact enumeration. Usage: gen-preflop <output-path>

use std::io::Write;
use std::sync::atomic::{AtomicU32, Ordering};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "crates/handeval/data/preflop_ranks.txt".to_string());
    let done = AtomicU32::new(0);
    let started = std::time::Instant::now();
    let table = handeval::enumerate_equities(|_| {
        let n = done.fetch_add(1, Ordering::Relaxed) + 1;
        eprint!(
            "\r{n}/52 outer tasks, {:.0}s elapsed",
            started.elapsed().as_secs_f64()
        );
        let _ = std::io::stderr().flush();
    });
    eprintln!();
    std::fs::write(&path, table.render()).expect("write ranking table");
    let top = table.by_rank(1);
    let bottom = table.by_rank(169);
    eprintln!(
        "wrote {path}: rank 1 = {} ({:.6}), rank 169 = {} ({:.6})",
        top.label(),
        top.equity,
        bottom.label(),
        bottom.equity
    );
}
