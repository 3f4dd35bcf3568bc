//! Membership predicates for the Ramsey graph families: forbidden-subgraph
//! tests for C4, K4 and the 4-spoked wheel W5, an independence-bound test,
//! and the incremental one-vertex-extension check used inside search loops.
//!
//! A graph belongs to the family `(forbidden, b)` iff it contains no copy of
//! the forbidden graph as a subgraph and no independent set of size `b + 1`.

use crate::graph::{SmallGraph, VertexSet};

/// The forbidden subgraph of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Forbidden {
    C4,
    K4,
    /// K1 + C4: a hub adjacent to all four vertices of a 4-cycle.
    W5,
}

/// Parameterization of a Ramsey graph family: forbidden subgraph plus the
/// maximum permitted independent-set size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub forbidden: Forbidden,
    /// Members may have independent sets up to this size, never larger.
    pub independence_bound: usize,
}

impl FamilySpec {
    /// C4-free graphs with independence number at most 4.
    pub const C4_K5: FamilySpec = FamilySpec {
        forbidden: Forbidden::C4,
        independence_bound: 4,
    };
    /// W5-free graphs with independence number at most 3.
    pub const W5_K4: FamilySpec = FamilySpec {
        forbidden: Forbidden::W5,
        independence_bound: 3,
    };
    /// W5-free graphs with independence number at most 4.
    pub const W5_K5: FamilySpec = FamilySpec {
        forbidden: Forbidden::W5,
        independence_bound: 4,
    };

    pub fn contains_forbidden(&self, g: &SmallGraph) -> bool {
        match self.forbidden {
            Forbidden::C4 => contains_c4(g),
            Forbidden::K4 => contains_k4(g),
            Forbidden::W5 => contains_w5(g),
        }
    }
}

/// Is there a 4-cycle inside the vertex mask? Equivalent to some pair of
/// mask vertices having two common neighbors in the mask.
#[inline]
pub(crate) fn c4_in_mask(rows: &[u32], mask: u32) -> bool {
    let mut xs = mask;
    while xs != 0 {
        let x = xs.trailing_zeros() as usize;
        xs &= xs - 1;
        let mut ys = xs;
        while ys != 0 {
            let y = ys.trailing_zeros() as usize;
            ys &= ys - 1;
            if (rows[x] & rows[y] & mask).count_ones() >= 2 {
                return true;
            }
        }
    }
    false
}

/// Is there a 4-cycle inside `mask` passing through its member `p`?
#[inline]
pub(crate) fn c4_in_mask_through(rows: &[u32], mask: u32, p: usize) -> bool {
    let not_p = !(1u32 << p);
    let mut xs = rows[p] & mask;
    while xs != 0 {
        let x = xs.trailing_zeros() as usize;
        xs &= xs - 1;
        let mut ys = xs;
        while ys != 0 {
            let y = ys.trailing_zeros() as usize;
            ys &= ys - 1;
            if rows[x] & rows[y] & mask & not_p != 0 {
                return true;
            }
        }
    }
    false
}

/// True iff `g` contains a 4-cycle as a (not necessarily induced) subgraph.
pub fn contains_c4(g: &SmallGraph) -> bool {
    let n = g.order();
    for x in 0..n {
        for y in (x + 1)..n {
            if (g.row(x) & g.row(y)).count_ones() >= 2 {
                return true;
            }
        }
    }
    false
}

/// Bits of `mask` strictly above position `v` (safe for `v = 31`).
#[inline]
fn above(mask: u32, v: usize) -> u32 {
    mask & !(((2u64 << v) - 1) as u32)
}

/// True iff some four vertices of `g` are pairwise adjacent.
pub fn contains_k4(g: &SmallGraph) -> bool {
    let n = g.order();
    for x in 0..n {
        let nx = g.row(x);
        let mut ys = above(nx, x);
        while ys != 0 {
            let y = ys.trailing_zeros() as usize;
            ys &= ys - 1;
            let common = nx & g.row(y);
            let mut zs = above(common, y);
            while zs != 0 {
                let z = zs.trailing_zeros() as usize;
                zs &= zs - 1;
                if common & g.row(z) != 0 {
                    return true;
                }
            }
        }
    }
    false
}

/// True iff `g` contains a wheel W5: a hub vertex whose neighborhood
/// contains a 4-cycle.
pub fn contains_w5(g: &SmallGraph) -> bool {
    let n = g.order();
    let mut rows = [0u32; 32];
    for v in 0..n {
        rows[v] = g.row(v);
    }
    (0..n).any(|hub| c4_in_mask(&rows, rows[hub]))
}

/// True iff some `k` vertices of `g` are pairwise non-adjacent.
///
/// Branch and bound on the complement clique problem, with a greedy coloring
/// bound to cut off hopeless branches.
pub fn has_independent_set(g: &SmallGraph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.order();
    if k > n {
        return false;
    }
    // Complement adjacency: a k-clique there is a k-independent-set here.
    let full = VertexSet::full(n).0;
    let mut comp = [0u32; 32];
    for v in 0..n {
        comp[v] = !g.row(v) & full & !(1u32 << v);
    }
    clique_at_least(&comp, full, k)
}

/// Does the graph given by `rows` contain a clique of size `k` within `cand`?
fn clique_at_least(rows: &[u32; 32], cand: u32, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < k {
        return false;
    }
    if greedy_color_bound(rows, cand) < k {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if clique_at_least(rows, rows[v] & rest, k - 1) {
            return true;
        }
        // Vertices already tried cannot reappear: `rest` shrinks, so
        // remaining candidates must still admit a k-clique on their own.
        if (rest.count_ones() as usize) < k {
            return false;
        }
    }
    false
}

/// Greedy coloring of the subgraph on `cand`; the number of color classes
/// bounds the largest clique inside `cand` from above.
fn greedy_color_bound(rows: &[u32; 32], cand: u32) -> usize {
    let mut uncolored = cand;
    let mut classes = 0;
    while uncolored != 0 {
        classes += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            uncolored &= !(1u32 << v);
            avail &= !rows[v];
        }
    }
    classes
}

/// Membership in the family: no forbidden subgraph and no independent set
/// one larger than the bound.
pub fn check_member(g: &SmallGraph, fam: FamilySpec) -> bool {
    !fam.contains_forbidden(g) && !has_independent_set(g, fam.independence_bound + 1)
}

/// Is there an independent set of size `k` within `mask` (adjacency `rows`)?
#[inline]
pub(crate) fn indep_in_mask(rows: &[u32], mask: u32, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (mask.count_ones() as usize) < k {
        return false;
    }
    let v = mask.trailing_zeros() as usize;
    let without_v = mask & (mask - 1);
    indep_in_mask(rows, without_v & !rows[v], k - 1) || indep_in_mask(rows, without_v, k)
}

/// Would attaching a new vertex with neighborhood `nbrs` keep `g` in the
/// family? `g` must already be a member; only structures through the new
/// vertex are examined, which makes this equivalent to recomputing
/// membership of the extension from scratch.
pub fn extension_ok(g: &SmallGraph, nbrs: VertexSet, fam: FamilySpec) -> bool {
    debug_assert!(check_member(g, fam));
    let n = g.order();
    let mut rows = [0u32; 32];
    for v in 0..n {
        rows[v] = g.row(v);
    }
    let s = nbrs.0;
    let forbidden = match fam.forbidden {
        // New C4 through the new vertex: two chosen neighbors with any
        // common neighbor in g.
        Forbidden::C4 => {
            let mut found = false;
            let mut xs = s;
            'c4: while xs != 0 {
                let x = xs.trailing_zeros() as usize;
                xs &= xs - 1;
                let mut ys = xs;
                while ys != 0 {
                    let y = ys.trailing_zeros() as usize;
                    ys &= ys - 1;
                    if rows[x] & rows[y] != 0 {
                        found = true;
                        break 'c4;
                    }
                }
            }
            found
        }
        // New K4 through the new vertex: a triangle inside the chosen set.
        Forbidden::K4 => {
            let mut found = false;
            let mut xs = s;
            'k4: while xs != 0 {
                let x = xs.trailing_zeros() as usize;
                xs &= xs - 1;
                let mut ys = xs & rows[x];
                while ys != 0 {
                    let y = ys.trailing_zeros() as usize;
                    ys &= ys - 1;
                    if rows[x] & rows[y] & s != 0 {
                        found = true;
                        break 'k4;
                    }
                }
            }
            found
        }
        // New W5 through the new vertex v, which is either the hub (a C4
        // inside its chosen neighborhood) or on the rim (hub u in nbrs,
        // rim v-x-z-y with x, y in nbrs ∩ N(u) and z adjacent to both).
        Forbidden::W5 => {
            let mut found = c4_in_mask(&rows, s);
            if !found {
                let mut us = s;
                'w5: while us != 0 {
                    let u = us.trailing_zeros() as usize;
                    us &= us - 1;
                    let ring = rows[u] & s;
                    let mut xs = ring;
                    while xs != 0 {
                        let x = xs.trailing_zeros() as usize;
                        xs &= xs - 1;
                        let mut ys = xs;
                        while ys != 0 {
                            let y = ys.trailing_zeros() as usize;
                            ys &= ys - 1;
                            if rows[u] & rows[x] & rows[y] != 0 {
                                found = true;
                                break 'w5;
                            }
                        }
                    }
                }
            }
            found
        }
    };
    if forbidden {
        return false;
    }
    // New independent set through the new vertex: `bound` non-neighbors of
    // it, pairwise non-adjacent.
    let non_nbrs = nbrs.complement_within(n).0;
    !indep_in_mask(&rows, non_nbrs, fam.independence_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SmallGraph;

    fn petersen() -> SmallGraph {
        let mut g = SmallGraph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5); // outer cycle
            g.add_edge(i, i + 5); // spokes
            g.add_edge(i + 5, (i + 2) % 5 + 5); // pentagram
        }
        g
    }

    fn w5() -> SmallGraph {
        SmallGraph::cycle(4)
            .add_vertex(crate::graph::VertexSet::full(4))
            .unwrap()
    }

    #[test]
    fn c4_detection() {
        assert!(contains_c4(&SmallGraph::cycle(4)));
        assert!(contains_c4(&SmallGraph::complete(4)));
        // Trees are acyclic.
        let star = SmallGraph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]);
        assert!(!contains_c4(&star));
        // Petersen has girth 5.
        assert!(!contains_c4(&petersen()));
        assert!(!contains_c4(&SmallGraph::cycle(5)));
    }

    #[test]
    fn k4_detection() {
        assert!(contains_k4(&SmallGraph::complete(4)));
        assert!(contains_k4(&SmallGraph::complete(6)));
        assert!(!contains_k4(&SmallGraph::cycle(4)));
        // Complement of C5 is C5 again: clique number 2.
        assert!(!contains_k4(&SmallGraph::cycle(5).complement()));
    }

    #[test]
    fn w5_detection() {
        assert!(contains_w5(&w5()));
        assert!(contains_w5(&SmallGraph::complete(5)));
        assert!(contains_w5(&SmallGraph::complete(6)));
        assert!(!contains_w5(&SmallGraph::complete(4)));
        assert!(!contains_w5(&petersen()));
        let g = SmallGraph::circulant(26, &[1, 5, 8, 12, 13]).unwrap();
        assert!(!contains_w5(&g));
    }

    #[test]
    fn independent_sets() {
        assert!(has_independent_set(&SmallGraph::empty(5), 5));
        assert!(!has_independent_set(&SmallGraph::complete(5), 2));
        assert!(has_independent_set(&SmallGraph::complete(5), 1));
        assert!(has_independent_set(&SmallGraph::empty(0), 0));
        assert!(!has_independent_set(&SmallGraph::empty(2), 3));
        let g = SmallGraph::circulant(26, &[1, 5, 8, 12, 13]).unwrap();
        assert!(!has_independent_set(&g, 5));
        assert!(has_independent_set(&g, 4));
    }

    #[test]
    fn membership() {
        let k1 = SmallGraph::empty(1);
        for fam in [FamilySpec::C4_K5, FamilySpec::W5_K4, FamilySpec::W5_K5] {
            assert!(check_member(&k1, fam));
            assert!(check_member(&SmallGraph::empty(0), fam));
        }
        assert!(!check_member(&SmallGraph::cycle(4), FamilySpec::C4_K5));
        let g = SmallGraph::circulant(26, &[1, 5, 8, 12, 13]).unwrap();
        assert!(check_member(&g, FamilySpec::W5_K5));
        assert!(!check_member(&w5(), FamilySpec::W5_K5));
        // The cone of the critical graph is a C4_K5 member.
        let cone = g.decompose(0).cone;
        assert!(check_member(&cone, FamilySpec::C4_K5));
        // And its rest part is a W5_K4 member.
        let rest = g.decompose(0).rest;
        assert!(check_member(&rest, FamilySpec::W5_K4));
    }

    #[test]
    fn extension_ok_basics() {
        let k1 = SmallGraph::empty(1);
        assert!(extension_ok(&k1, VertexSet::EMPTY, FamilySpec::W5_K5));
        assert!(extension_ok(&k1, VertexSet::singleton(0), FamilySpec::C4_K5));
        // Two isolated vertices plus a third, all isolated: fine for bound 3.
        let e2 = SmallGraph::empty(2);
        assert!(extension_ok(&e2, VertexSet::EMPTY, FamilySpec::W5_K4));
        // ...but a fourth isolated vertex would give an independent 4-set.
        let e3 = SmallGraph::empty(3);
        assert!(!extension_ok(&e3, VertexSet::EMPTY, FamilySpec::W5_K4));
    }

    #[test]
    fn extension_matches_full_recheck_on_members() {
        // Every subset choice over a few known members.
        for (g, fam) in [
            (SmallGraph::cycle(5), FamilySpec::C4_K5),
            (SmallGraph::cycle(5), FamilySpec::W5_K4),
            (SmallGraph::complete(4), FamilySpec::W5_K5),
            (SmallGraph::circulant(8, &[1, 4]).unwrap(), FamilySpec::W5_K4),
            (petersen(), FamilySpec::W5_K5),
        ] {
            assert!(check_member(&g, fam));
            for bits in 0u32..1 << g.order() {
                let nbrs = VertexSet(bits);
                let fast = extension_ok(&g, nbrs, fam);
                let slow = check_member(&g.add_vertex(nbrs).unwrap(), fam);
                assert_eq!(fast, slow, "{g:?} nbrs={nbrs:?} fam={fam:?}");
            }
        }
    }
}
