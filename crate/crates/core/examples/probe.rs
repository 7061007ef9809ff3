use modinv_core::invariants::*;
use modinv_core::*;
use std::time::Instant;
fn main() {
    let args: Vec<String> = std::env::args().collect();
    let p: u32 = args[1].parse().unwrap();
    let s = ModuleSpec::parse(&args[2], p).unwrap();
    let t = Instant::now();
    let r = noether_number(&s).unwrap();
    for (row, ms) in r.rows.iter().zip(&r.timings_ms) { println!("{row:?} {ms:.0}ms"); }
    println!("beta {} in {:?}", r.beta, t.elapsed());
}
