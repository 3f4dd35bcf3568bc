//! Scratch probe for glue search tuning (not part of the toolkit).

use ramsey::graph6::read_g6_file;
use ramsey::SmallGraph;
use std::path::Path;

fn matching_ok(rows: &[u32], mask: u32) -> bool {
    let mut m = mask;
    while m != 0 {
        let u = m.trailing_zeros() as usize;
        m &= m - 1;
        if (rows[u] & mask).count_ones() > 1 {
            return false;
        }
    }
    true
}

fn indep_sets(rows: &[u32], n: usize, k: usize) -> Vec<u32> {
    let full = (1u32 << n) - 1;
    let mut out = Vec::new();
    fn rec(rows: &[u32], chosen: u32, avail: u32, k: usize, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(chosen);
            return;
        }
        let mut m = avail;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            rec(rows, chosen | 1 << v, m & !rows[v], k - 1, out);
        }
    }
    rec(rows, 0, full, k, &mut out);
    out
}

fn main() {
    let dir = Path::new("/root/levels");
    let cones = read_g6_file(&dir.join("c4k5_9.g6")).unwrap();
    let rests = read_g6_file(&dir.join("w5k4_16.g6")).unwrap();
    println!("cones: {}, rests: {}", cones.len(), rests.len());

    // Rest degree stats.
    let mut deg_hist = [0usize; 17];
    for f in &rests {
        for v in 0..f.order() {
            deg_hist[f.degree(v)] += 1;
        }
    }
    println!("rest degree histogram: {deg_hist:?}");

    // Cone candidate pool sizes by row size.
    let mut worst = vec![0usize; 10];
    let mut total = vec![0usize; 10];
    for h in &cones {
        let s = h.order();
        let rows: Vec<u32> = (0..s).map(|u| h.row(u)).collect();
        let ih4 = indep_sets(&rows, s, 4);
        let mut by_size = vec![0usize; s + 1];
        'mask: for mask in 0u32..1 << s {
            if !matching_ok(&rows, mask) {
                continue;
            }
            for &a in &ih4 {
                if a & mask == 0 {
                    continue 'mask;
                }
            }
            by_size[mask.count_ones() as usize] += 1;
        }
        for k in 0..=s {
            total[k] += by_size[k];
            worst[k] = worst[k].max(by_size[k]);
        }
    }
    println!("cone pool avg by size: {:?}", total.iter().map(|t| t / cones.len()).collect::<Vec<_>>());
    println!("cone pool max by size: {worst:?}");

    // Edge counts of cones.
    let e_min = cones.iter().map(SmallGraph::edge_count).min().unwrap();
    let e_max = cones.iter().map(SmallGraph::edge_count).max().unwrap();
    println!("cone edges: {e_min}..{e_max}");

    // Independent-set list sizes per cone.
    let mut max2 = 0;
    let mut max3 = 0;
    let mut max4 = 0;
    for h in &cones {
        let s = h.order();
        let rows: Vec<u32> = (0..s).map(|u| h.row(u)).collect();
        max2 = max2.max(indep_sets(&rows, s, 2).len());
        max3 = max3.max(indep_sets(&rows, s, 3).len());
        max4 = max4.max(indep_sets(&rows, s, 4).len());
    }
    println!("max |ih2|={max2} |ih3|={max3} |ih4|={max4}");

    // Same for the order-13 cone level (worst case for pool sizes).
    for order in [10usize, 11, 12, 13] {
        let cs = read_g6_file(&dir.join(format!("c4k5_{order}.g6"))).unwrap();
        let mut maxpool = 0;
        let mut m3 = 0;
        for h in &cs {
            let s = h.order();
            let rows: Vec<u32> = (0..s).map(|u| h.row(u)).collect();
            let ih4 = indep_sets(&rows, s, 4);
            m3 = m3.max(indep_sets(&rows, s, 3).len());
            let mut pool = 0usize;
            'mask: for mask in 0u32..1 << s {
                if !matching_ok(&rows, mask) {
                    continue;
                }
                for &a in &ih4 {
                    if a & mask == 0 {
                        continue 'mask;
                    }
                }
                pool += 1;
            }
            maxpool = maxpool.max(pool);
        }
        println!("order {order}: cones={} max total pool={maxpool} max |ih3|={m3}", cs.len());
    }
}
