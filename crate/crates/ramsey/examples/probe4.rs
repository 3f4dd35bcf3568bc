//! Scratch probe: full uncapped tree of single tasks.

use ramsey::glue::{glue_pair_stats, GlueTask};
use ramsey::graph6::read_g6_file;
use std::path::Path;
use std::time::Instant;

fn main() {
    let dir = Path::new("/root/levels");
    let cones = read_g6_file(&dir.join("c4k5_9.g6")).unwrap();
    let rests = read_g6_file(&dir.join("w5k4_16.g6")).unwrap();
    let args: Vec<String> = std::env::args().collect();
    let ci: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let ri: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(0);
    let task = GlueTask::new(cones[ci], rests[ri]);
    let t0 = Instant::now();
    let (out, nodes, capped) = glue_pair_stats(&task, u64::MAX);
    println!(
        "cone {ci} x rest {ri}: nodes={nodes} capped={capped} out={} in {:?}",
        out.len(),
        t0.elapsed()
    );
}
