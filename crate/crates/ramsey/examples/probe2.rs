//! Scratch probe: node counts of individual glue tasks (not part of the toolkit).

use ramsey::glue::{glue_pair_stats, GlueTask};
use ramsey::graph6::read_g6_file;
use std::path::Path;
use std::time::Instant;

fn main() {
    let dir = Path::new("/root/levels");
    let cones = read_g6_file(&dir.join("c4k5_9.g6")).unwrap();
    let rests = read_g6_file(&dir.join("w5k4_16.g6")).unwrap();
    let args: Vec<String> = std::env::args().collect();
    let ncones: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let nrests: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(5);
    let budget: u64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(3_000_000);

    let t0 = Instant::now();
    let mut total_nodes = 0u64;
    let mut capped = 0usize;
    for (ci, cone) in cones.iter().take(ncones).enumerate() {
        for (ri, rest) in rests.iter().take(nrests).enumerate() {
            let task = GlueTask::new(*cone, *rest);
            let t1 = Instant::now();
            let (out, nodes, hit_cap) = glue_pair_stats(&task, budget);
            total_nodes += nodes;
            capped += hit_cap as usize;
            println!(
                "cone {ci} (e={}) x rest {ri} (e={}): nodes={nodes}{} out={} in {:?}",
                cone.edge_count(),
                rest.edge_count(),
                if hit_cap { " CAP" } else { "" },
                out.len(),
                t1.elapsed()
            );
        }
    }
    println!("total nodes {total_nodes}, capped {capped}, elapsed {:?}", t0.elapsed());
}
