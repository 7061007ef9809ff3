use modinv_core::coinvariants::*;
use modinv_core::*;
use std::time::Instant;
fn main() {
    let args: Vec<String> = std::env::args().collect();
    let p: u32 = args[1].parse().unwrap();
    let s = ModuleSpec::parse(&args[2], p).unwrap();
    let t = Instant::now();
    let r = coinvariant_profile(&s).unwrap();
    println!("{:?} in {:?}", r, t.elapsed());
    let t = Instant::now();
    let c = leadterm_certificate(&s).unwrap();
    println!("{:?} staircase {:?} in {:?}", c.top_degree, c.staircase_counts, t.elapsed());
}
