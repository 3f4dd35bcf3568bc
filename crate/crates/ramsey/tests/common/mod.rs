//! Shared helpers for the integration suites: brute-force oracle predicates
//! over explicit vertex tuples, an exhaustive-permutation canonical oracle,
//! random graph generators, and a tiny deterministic RNG.
//!
//! Everything here is deliberately independent of the library's fast paths:
//! oracles enumerate subsets and permutations directly.

#![allow(dead_code)]

use ramsey::{SmallGraph, VertexSet};

/// splitmix64: small, seedable, reproducible across platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// True with probability `num / 256`.
    pub fn chance(&mut self, num: u32) -> bool {
        (self.next_u64() & 0xff) as u32 % 256 < num
    }
}

/// Random graph on `n` vertices; each edge present with probability
/// `density / 256`.
pub fn random_graph(rng: &mut Rng, n: usize, density: u32) -> SmallGraph {
    let mut g = SmallGraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.chance(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_permutation(rng: &mut Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.below(i + 1));
    }
    perm
}

/// All `k`-subsets of `0..n`, as sorted vectors.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Oracle: scan all ordered 4-tuples for a cycle a-b-c-d-a.
pub fn naive_contains_c4(g: &SmallGraph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if a != b
                        && a != c
                        && a != d
                        && b != c
                        && b != d
                        && c != d
                        && g.has_edge(a, b)
                        && g.has_edge(b, c)
                        && g.has_edge(c, d)
                        && g.has_edge(d, a)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Oracle: scan all 4-subsets for six edges.
pub fn naive_contains_k4(g: &SmallGraph) -> bool {
    subsets(g.order(), 4).iter().any(|s| {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    })
}

/// Oracle: scan all 5-subsets, each hub choice, and each of the three ways
/// to arrange the remaining four vertices in a cycle.
pub fn naive_contains_w5(g: &SmallGraph) -> bool {
    for s in subsets(g.order(), 5) {
        for hub_idx in 0..5 {
            let hub = s[hub_idx];
            let rim: Vec<usize> = s
                .iter()
                .copied()
                .filter(|&v| v != hub)
                .collect();
            if rim.iter().any(|&v| !g.has_edge(hub, v)) {
                continue;
            }
            let orders = [
                [rim[0], rim[1], rim[2], rim[3]],
                [rim[0], rim[1], rim[3], rim[2]],
                [rim[0], rim[2], rim[1], rim[3]],
            ];
            for cyc in orders {
                if g.has_edge(cyc[0], cyc[1])
                    && g.has_edge(cyc[1], cyc[2])
                    && g.has_edge(cyc[2], cyc[3])
                    && g.has_edge(cyc[3], cyc[0])
                {
                    return true;
                }
            }
        }
    }
    false
}

/// Oracle: scan all k-subsets for pairwise non-adjacency.
pub fn naive_has_independent_set(g: &SmallGraph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    subsets(g.order(), k).iter().any(|s| {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
    })
}

/// Upper-triangle byte encoding under a given labeling (position -> vertex).
fn encode_under(g: &SmallGraph, lab: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(lab[i], lab[j]) as u8);
        }
    }
    bits
}

/// Oracle canonical form: minimum encoding over all n! labelings. Only
/// sensible for n <= 8.
pub fn naive_canonical(g: &SmallGraph) -> Vec<u8> {
    let n = g.order();
    assert!(n <= 8, "permutation oracle explodes past 8 vertices");
    let mut lab: Vec<usize> = (0..n).collect();
    let mut best = encode_under(g, &lab);
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                lab.swap(0, i);
            } else {
                lab.swap(c[i], i);
            }
            let enc = encode_under(g, &lab);
            if enc < best {
                best = enc;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Oracle isomorphism test via permutations of `a` (n <= 8).
pub fn naive_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    naive_canonical(a) == naive_canonical(b)
}

/// Iterates every labeled graph on `n` vertices (2^C(n,2) of them).
pub fn for_each_labeled_graph<F: FnMut(&SmallGraph)>(n: usize, mut f: F) {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    for bits in 0u64..1 << pairs.len() {
        let mut g = SmallGraph::empty(n);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bits >> k & 1 != 0 {
                g.add_edge(i, j);
            }
        }
        f(&g);
    }
}

/// Builds a random member of `fam` on `n` vertices by growing K1 with
/// uniformly chosen valid extensions. Returns fewer vertices if the walk
/// dead-ends (cannot happen for the families used here, where the empty
/// extension is always valid).
pub fn random_member(rng: &mut Rng, n: usize, fam: ramsey::FamilySpec) -> SmallGraph {
    let mut g = SmallGraph::empty(0);
    for _ in 0..n {
        let choices = ramsey::enumerate::neighborhood_subset_search(&g, fam);
        if choices.is_empty() {
            break;
        }
        let nbrs: VertexSet = choices[rng.below(choices.len())];
        g = g.add_vertex(nbrs).unwrap();
    }
    g
}
