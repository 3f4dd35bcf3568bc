//! Exhaustive isomorph-free generation of a Ramsey family, level by level.
//!
//! Both defining properties (forbidden subgraph, bounded independence) are
//! hereditary, so deleting any vertex of an order-(s+1) member leaves an
//! order-s member: growing every member of level s by every feasible new
//! neighborhood reaches every class of level s+1 at least once, and the
//! canonical-form store collapses the duplicates.

use rayon::prelude::*;

use crate::canon::IsoStore;
use crate::family::{FamilySpec, Forbidden};
use crate::graph::{GraphError, SmallGraph, VertexSet, MAX_VERTICES};

/// All members of one family at one order, pairwise non-isomorphic, in
/// canonical-form sorted order.
#[derive(Clone, Debug)]
pub struct FamilyLevel {
    pub fam: FamilySpec,
    pub order: usize,
    pub graphs: Vec<SmallGraph>,
}

/// Largest order of any C4-free graph with independence number at most 4;
/// R(C4,K5) = 14 caps the family there, and with it the degree of any vertex
/// in a wheel-free graph of bounded independence (its neighborhood is such a
/// graph).
pub const MAX_C4_K5_ORDER: usize = 13;

/// Largest order of any W5-free graph with independence number at most 3
/// (R(W5,K4) = 17).
pub const MAX_W5_K4_ORDER: usize = 16;

/// Degree cap applied while growing W5-free families: the new vertex's
/// neighborhood must itself be C4-free with bounded independence. This is an
/// optimization only; the structural prunes enforce correctness on their own.
fn degree_cap(fam: FamilySpec) -> usize {
    match fam.forbidden {
        Forbidden::W5 => MAX_C4_K5_ORDER,
        Forbidden::C4 | Forbidden::K4 => MAX_VERTICES,
    }
}

/// Calls `emit` for every neighborhood `nbrs` of a prospective new vertex
/// with `extension_ok(g, nbrs, fam)` and `lo <= |nbrs| <= hi`.
///
/// The walk decides vertices 0..n-1 in order. Including a vertex is pruned
/// as soon as the partial neighborhood completes a forbidden subgraph
/// through the new vertex; excluding one is pruned as soon as the partial
/// non-neighborhood holds an independent set that the new vertex extends
/// past the bound. Both violations only ever involve decided vertices, so a
/// surviving leaf is exactly a valid extension.
pub fn for_each_extension<F: FnMut(VertexSet)>(
    g: &SmallGraph,
    fam: FamilySpec,
    lo: usize,
    hi: usize,
    emit: &mut F,
) {
    let n = g.order();
    let mut rows = [0u32; MAX_VERTICES];
    for v in 0..n {
        rows[v] = g.row(v);
    }
    let walk = ExtensionWalk {
        rows,
        n,
        forbidden: fam.forbidden,
        bound: fam.independence_bound,
        lo,
        hi: hi.min(n),
    };
    walk.descend(0, 0, 0, 0, emit);
}

/// Collected form of [`for_each_extension`] over the full size range.
pub fn neighborhood_subset_search(g: &SmallGraph, fam: FamilySpec) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_extension(g, fam, 0, g.order(), &mut |nbrs| out.push(nbrs));
    out
}

struct ExtensionWalk {
    rows: [u32; MAX_VERTICES],
    n: usize,
    forbidden: Forbidden,
    bound: usize,
    lo: usize,
    hi: usize,
}

impl ExtensionWalk {
    fn descend<F: FnMut(VertexSet)>(
        &self,
        idx: usize,
        nbrs: u32,
        excl: u32,
        size: usize,
        emit: &mut F,
    ) {
        if idx == self.n {
            if size >= self.lo {
                emit(VertexSet(nbrs));
            }
            return;
        }
        let remaining = self.n - idx;
        if size < self.hi && self.include_ok(nbrs, idx) {
            self.descend(idx + 1, nbrs | 1 << idx, excl, size + 1, emit);
        }
        if size + remaining - 1 >= self.lo && self.exclude_ok(excl, idx) {
            self.descend(idx + 1, nbrs, excl | 1 << idx, size, emit);
        }
    }

    /// Does adding `i` to the neighborhood complete a forbidden subgraph
    /// through the new vertex?
    fn include_ok(&self, nbrs: u32, i: usize) -> bool {
        let rows = &self.rows;
        let ni = rows[i];
        match self.forbidden {
            Forbidden::C4 => {
                // New cycle v-i-z-x-v needs a decided neighbor x sharing any
                // common neighbor z with i.
                let mut xs = nbrs;
                while xs != 0 {
                    let x = xs.trailing_zeros() as usize;
                    xs &= xs - 1;
                    if rows[x] & ni != 0 {
                        return false;
                    }
                }
                true
            }
            Forbidden::K4 => {
                // New K4 needs an edge inside the decided neighbors of i.
                let mut xs = nbrs & ni;
                while xs != 0 {
                    let x = xs.trailing_zeros() as usize;
                    xs &= xs - 1;
                    if rows[x] & nbrs & ni != 0 {
                        return false;
                    }
                }
                true
            }
            Forbidden::W5 => self.include_ok_w5(nbrs, i),
        }
    }

    /// Wheel completions through the new vertex v that use i, by i's role:
    /// hub of a rim through v, spoke end next to v on the rim, or part of a
    /// 4-cycle under hub v.
    fn include_ok_w5(&self, nbrs: u32, i: usize) -> bool {
        let rows = &self.rows;
        let ni = rows[i];
        // v as hub: 4-cycle through i inside the decided neighborhood.
        let ring = ni & nbrs;
        let mut xs = ring;
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            let mut ys = xs;
            while ys != 0 {
                let y = ys.trailing_zeros() as usize;
                ys &= ys - 1;
                if rows[x] & rows[y] & nbrs & !(1u32 << i) != 0 {
                    return false;
                }
            }
        }
        // i as hub: rim v-x-z-y with x, y decided neighbors adjacent to i
        // and z any common neighbor inside N(i).
        let mut xs = ring;
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            let mut ys = xs;
            while ys != 0 {
                let y = ys.trailing_zeros() as usize;
                ys &= ys - 1;
                if ni & rows[x] & rows[y] != 0 {
                    return false;
                }
            }
        }
        // i on the rim next to v: hub u in nbrs ∩ N(i), the other rim
        // neighbor y of v in nbrs ∩ N(u), and z adjacent to i, y and u.
        let mut us = ring;
        while us != 0 {
            let u = us.trailing_zeros() as usize;
            us &= us - 1;
            let nu = rows[u];
            let mut ys = nu & nbrs & !(1u32 << i);
            while ys != 0 {
                let y = ys.trailing_zeros() as usize;
                ys &= ys - 1;
                if nu & ni & rows[y] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Does excluding `i` complete an independent set of `bound` vertices
    /// among the non-neighbors (which the new vertex would extend)?
    fn exclude_ok(&self, excl: u32, i: usize) -> bool {
        let m = excl & !self.rows[i];
        !crate::family::indep_in_mask(&self.rows, m, self.bound - 1)
    }
}

/// Grows the family level by level up to `max_order`, stopping early once a
/// level is empty. Level 0 (the empty graph) is included; Table-style output
/// starts at order 1.
pub fn enumerate_family(
    fam: FamilySpec,
    max_order: usize,
) -> Result<Vec<FamilyLevel>, GraphError> {
    let mut levels = Vec::new();
    enumerate_family_with(fam, max_order, |level| levels.push(level.clone()))?;
    Ok(levels)
}

/// Streaming variant of [`enumerate_family`]: hands each completed level to
/// `sink` and retains only the level needed to grow the next one.
pub fn enumerate_family_with<F: FnMut(&FamilyLevel)>(
    fam: FamilySpec,
    max_order: usize,
    mut sink: F,
) -> Result<(), GraphError> {
    if max_order > MAX_VERTICES {
        return Err(GraphError::CapacityExceeded { order: max_order });
    }
    let mut current = FamilyLevel {
        fam,
        order: 0,
        graphs: vec![SmallGraph::empty(0)],
    };
    sink(&current);
    for order in 1..=max_order {
        let next = next_level(fam, &current.graphs);
        current = FamilyLevel {
            fam,
            order,
            graphs: next,
        };
        sink(&current);
        if current.graphs.is_empty() {
            break;
        }
    }
    Ok(())
}

/// One growth step: all classes of order n+1 from the classes of order n.
pub fn next_level(fam: FamilySpec, graphs: &[SmallGraph]) -> Vec<SmallGraph> {
    let store = IsoStore::new();
    let cap = degree_cap(fam);
    graphs.par_iter().for_each(|g| {
        for_each_extension(g, fam, 0, cap, &mut |nbrs| {
            let ext = g.add_vertex(nbrs).expect("level order below capacity");
            debug_assert!(crate::family::check_member(&ext, fam));
            store.insert_if_new(&ext);
        });
    });
    store
        .into_sorted_forms()
        .iter()
        .map(|form| form.to_graph())
        .collect()
}
