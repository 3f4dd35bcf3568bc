//! Neighborhood gluing: given a cone graph H (C4-free, independence <= 4)
//! and a rest graph F (W5-free, independence <= 3), enumerate all cross-edge
//! assignments between them such that apex + H + F + cross edges is W5-free
//! with independence <= 4 and minimum degree equal to the cone order.
//!
//! The search assigns each rest vertex a set of cone neighbors drawn from a
//! precomputed candidate pool, always branching on the rest vertex with the
//! fewest surviving candidates. After every assignment the partial assembly
//! is checked incrementally (wheels and independent 5-sets through the new
//! vertex, degree caps and deficits), and the pools of the unassigned rest
//! vertices are filtered by pairwise consistency with the new row.

use std::fmt;

use rayon::prelude::*;

use crate::canon::IsoStore;
use crate::enumerate::{for_each_extension, MAX_C4_K5_ORDER, MAX_W5_K4_ORDER};
use crate::family::{c4_in_mask, c4_in_mask_through, check_member, FamilySpec, Forbidden};
use crate::graph::{Decomposition, SmallGraph, VertexSet, MAX_VERTICES};

/// One gluing work unit: a labeled cone, a labeled rest, and the degree
/// constraint tying them together (the apex must be a minimum-degree vertex,
/// so `min_degree` equals the cone order).
#[derive(Clone, Debug)]
pub struct GlueTask {
    pub cone: SmallGraph,
    pub rest: SmallGraph,
    pub min_degree: usize,
    pub target_order: usize,
}

impl GlueTask {
    pub fn new(cone: SmallGraph, rest: SmallGraph) -> GlueTask {
        let min_degree = cone.order();
        let target_order = 1 + cone.order() + rest.order();
        GlueTask {
            cone,
            rest,
            min_degree,
            target_order,
        }
    }
}

/// The free variables of a glue search: for each rest vertex, its neighbor
/// set inside the cone.
#[derive(Clone, Debug, Default)]
pub struct CrossAssignment {
    pub rows: Vec<VertexSet>,
}

impl CrossAssignment {
    /// Reads the cross edges off an existing graph's decomposition.
    pub fn from_decomposition(g: &SmallGraph, d: &Decomposition) -> CrossAssignment {
        let rows = d
            .rest_map
            .iter()
            .map(|&rw| {
                d.cone_map
                    .iter()
                    .enumerate()
                    .filter(|&(_, &cu)| g.has_edge(rw, cu))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        CrossAssignment { rows }
    }
}

/// Rebuilds the glued graph: vertex 0 is the apex adjacent to exactly the
/// cone block `1..=s`; the cone block carries H, the rest block `s+1..s+t`
/// carries F, and the cross edges follow `cross.rows`.
pub fn assemble(task: &GlueTask, cross: &CrossAssignment) -> SmallGraph {
    let s = task.cone.order();
    let t = task.rest.order();
    debug_assert_eq!(cross.rows.len(), t);
    let mut g = SmallGraph::empty(1 + s + t);
    for u in 0..s {
        g.add_edge(0, 1 + u);
        for v in (u + 1)..s {
            if task.cone.has_edge(u, v) {
                g.add_edge(1 + u, 1 + v);
            }
        }
    }
    for w in 0..t {
        for x in (w + 1)..t {
            if task.rest.has_edge(w, x) {
                g.add_edge(1 + s + w, 1 + s + x);
            }
        }
        for u in cross.rows[w].iter() {
            g.add_edge(1 + s + w, 1 + u);
        }
    }
    g
}

/// Input problems detected when validating level data for gluing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlueError {
    WrongOrder {
        role: &'static str,
        index: usize,
        expected: usize,
        got: usize,
    },
    NotMember {
        role: &'static str,
        index: usize,
    },
}

impl fmt::Display for GlueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlueError::WrongOrder {
                role,
                index,
                expected,
                got,
            } => write!(
                f,
                "{role} graph #{index} has order {got}, expected {expected}"
            ),
            GlueError::NotMember { role, index } => {
                write!(f, "{role} graph #{index} fails family membership")
            }
        }
    }
}

impl std::error::Error for GlueError {}

/// Entries of the independent-3-set list tracked in the pairwise miss masks.
const MISS_WORDS: usize = 2;

/// Cone-side precomputation, shared across every rest it is glued against.
struct ConeCtx {
    s: usize,
    rows: [u32; 16],
    /// 1 + deg_H(u): cone degrees before any rest attachments.
    base_deg: [u8; 16],
    /// All feasible rows, sorted by size then value. A feasible row S
    /// induces max degree <= 1 in H (two H-adjacent chosen vertices under a
    /// common chosen hub close a wheel rim through the apex) and meets every
    /// independent 4-set of H (a missed one plus the rest vertex is an
    /// independent 5-set).
    cands: Vec<u32>,
    /// cands[size_start[k]..size_start[k+1]] are the rows of size k.
    size_start: [u16; 18],
    /// Per candidate: which of the first 128 independent 3-sets it misses.
    miss3: Vec<[u64; MISS_WORDS]>,
    ih2: Vec<u32>,
    ih3: Vec<u32>,
}

impl ConeCtx {
    fn new(cone: &SmallGraph) -> ConeCtx {
        let s = cone.order();
        debug_assert!(s <= MAX_C4_K5_ORDER);
        let mut rows = [0u32; 16];
        let mut base_deg = [0u8; 16];
        for u in 0..s {
            rows[u] = cone.row(u);
            base_deg[u] = 1 + cone.degree(u) as u8;
        }
        let ih2 = indep_sets(&rows, s, 2);
        let ih3 = indep_sets(&rows, s, 3);
        let ih4 = indep_sets(&rows, s, 4);
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
        'mask: for mask in 0u32..1 << s {
            let mut m = mask;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                if (rows[u] & mask).count_ones() > 1 {
                    continue 'mask;
                }
            }
            for &a in &ih4 {
                if a & mask == 0 {
                    continue 'mask;
                }
            }
            by_size[mask.count_ones() as usize].push(mask);
        }
        let mut cands = Vec::new();
        let mut size_start = [0u16; 18];
        for (k, group) in by_size.iter().enumerate() {
            size_start[k] = cands.len() as u16;
            cands.extend_from_slice(group);
            size_start[k + 1] = cands.len() as u16;
        }
        for k in (s + 2)..18 {
            size_start[k] = cands.len() as u16;
        }
        let miss3 = cands
            .iter()
            .map(|&mask| {
                let mut miss = [0u64; MISS_WORDS];
                for (e, &a) in ih3.iter().enumerate().take(MISS_WORDS * 64) {
                    if a & mask == 0 {
                        miss[e >> 6] |= 1u64 << (e & 63);
                    }
                }
                miss
            })
            .collect();
        ConeCtx {
            s,
            rows,
            base_deg,
            cands,
            size_start,
            miss3,
            ih2,
            ih3,
        }
    }
}

/// All independent k-sets of the graph on `0..n` given by `rows`, as masks.
fn indep_sets(rows: &[u32; 16], n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let full = if n >= 32 { u32::MAX } else { (1u32 << n) - 1 };
    fn rec(rows: &[u32; 16], chosen: u32, avail: u32, k: usize, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(chosen);
            return;
        }
        if (avail.count_ones() as usize) < k {
            return;
        }
        let mut m = avail;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            rec(rows, chosen | 1 << v, m & !rows[v], k - 1, out);
            if (m.count_ones() as usize) < k {
                return;
            }
        }
    }
    rec(rows, 0, full, k, &mut out);
    out
}

/// Rest-side precomputation for a fixed minimum degree.
struct RestCtx {
    t: usize,
    /// F adjacency in processing-position space.
    fadj: [u32; 16],
    /// Row-size window per position: the rest vertex must reach the minimum
    /// degree, and its full neighborhood must stay small enough to be
    /// C4-free with independence 4.
    lo: [u8; 16],
    hi: [u8; 16],
    feasible: bool,
}

impl RestCtx {
    fn new(rest: &SmallGraph, s: usize, min_degree: usize) -> RestCtx {
        let t = rest.order();
        debug_assert!(t <= MAX_W5_K4_ORDER);
        // Low-degree rest vertices need the largest rows; putting them first
        // gives the pool-size branching heuristic a sensible tie-break.
        let mut order: Vec<usize> = (0..t).collect();
        order.sort_by_key(|&v| (rest.degree(v), v));
        let mut pos_of = [0usize; 16];
        for (p, &v) in order.iter().enumerate() {
            pos_of[v] = p;
        }
        let mut fadj = [0u32; 16];
        let mut lo = [0u8; 16];
        let mut hi = [0u8; 16];
        let mut feasible = true;
        for (p, &v) in order.iter().enumerate() {
            for u in rest.neighbors(v).iter() {
                fadj[p] |= 1 << pos_of[u];
            }
            let deg = rest.degree(v);
            lo[p] = min_degree.saturating_sub(deg) as u8;
            hi[p] = s.min(MAX_C4_K5_ORDER.saturating_sub(deg)) as u8;
            if lo[p] > hi[p] {
                feasible = false;
            }
        }
        RestCtx {
            t,
            fadj,
            lo,
            hi,
            feasible,
        }
    }
}

/// Backtracking state for one (cone, rest) pair.
struct GlueSearch<'a> {
    cone: &'a ConeCtx,
    rest: &'a RestCtx,
    min_degree: usize,
    /// Alive-candidate bitmaps: one block of `t * words` u64s per depth.
    alive: Vec<u64>,
    words: usize,
    /// Partial assembled adjacency: 0 apex, 1..=s cone, s+1.. rest in
    /// position order.
    adj: [u32; MAX_VERTICES],
    deg_cone: [u8; 16],
    /// Total cone-degree shortfall against the minimum degree.
    deficit: usize,
    /// Sum of hi over unassigned positions: degree supply still available.
    capacity: usize,
    decided: u32,
    decided_count: usize,
    /// Row assigned to each position (valid where `decided` is set).
    rows_by_pos: [u32; 16],
    compat2: Vec<u32>,
    compat3: Vec<u32>,
    node_budget: u64,
    depth_nodes: [u64; 17],
    kills: [u64; 8],
}

impl<'a> GlueSearch<'a> {
    fn new(cone: &'a ConeCtx, rest: &'a RestCtx, min_degree: usize) -> GlueSearch<'a> {
        let s = cone.s;
        let t = rest.t;
        let mut adj = [0u32; MAX_VERTICES];
        let cone_mask: u32 = ((1u64 << s) - 1) as u32;
        adj[0] = cone_mask << 1;
        for u in 0..s {
            adj[1 + u] = (cone.rows[u] << 1) | 1;
        }
        let deficit = (0..s)
            .map(|u| min_degree.saturating_sub(cone.base_deg[u] as usize))
            .sum();
        let capacity = (0..t).map(|p| rest.hi[p] as usize).sum();
        let words = cone.cands.len().div_ceil(64).max(1);
        GlueSearch {
            cone,
            rest,
            min_degree,
            alive: vec![0u64; (t + 1).max(1) * t.max(1) * words],
            words,
            adj,
            deg_cone: cone.base_deg,
            deficit,
            capacity,
            decided: 0,
            decided_count: 0,
            rows_by_pos: [0; 16],
            compat2: vec![0; cone.ih2.len()],
            compat3: vec![0; cone.ih3.len()],
            node_budget: u64::MAX,
            depth_nodes: [0; 17],
            kills: [0; 8],
        }
    }

    #[inline]
    fn pool(&self, depth: usize, p: usize) -> &[u64] {
        let base = (depth * self.rest.t + p) * self.words;
        &self.alive[base..base + self.words]
    }

    #[inline]
    fn pool_mut(&mut self, depth: usize, p: usize) -> &mut [u64] {
        let base = (depth * self.rest.t + p) * self.words;
        &mut self.alive[base..base + self.words]
    }

    fn run<F: FnMut(&SmallGraph)>(&mut self, out: &mut F) {
        let s = self.cone.s;
        let t = self.rest.t;
        if !self.rest.feasible {
            return;
        }
        for u in 0..s {
            if self.min_degree.saturating_sub(self.cone.base_deg[u] as usize) > t {
                return;
            }
        }
        if self.deficit > self.capacity {
            return;
        }
        // Initial pools: the contiguous candidate range of each window.
        for p in 0..t {
            let start = self.cone.size_start[self.rest.lo[p] as usize] as usize;
            let end = self.cone.size_start[self.rest.hi[p] as usize + 1] as usize;
            if start == end {
                return;
            }
            let words = self.words;
            let pool = self.pool_mut(0, p);
            for w in 0..words {
                let first = w * 64;
                let bits = (first..first + 64)
                    .filter(|&i| i >= start && i < end)
                    .fold(0u64, |acc, i| acc | 1u64 << (i - first));
                pool[w] = bits;
            }
        }
        self.descend(0, out);
    }

    fn descend<F: FnMut(&SmallGraph)>(&mut self, depth: usize, out: &mut F) {
        let t = self.rest.t;
        if self.decided_count == t {
            let g = self.emit_graph(1 + self.cone.s + t);
            debug_assert!(check_member(&g, FamilySpec::W5_K5));
            debug_assert_eq!(g.min_degree(), self.min_degree);
            out(&g);
            return;
        }
        // Branch on the unassigned position with the fewest candidates.
        let mut q = usize::MAX;
        let mut best = usize::MAX;
        for p in 0..t {
            if self.decided >> p & 1 != 0 {
                continue;
            }
            let count = self.pool(depth, p).iter().map(|w| w.count_ones() as usize).sum();
            if count < best {
                best = count;
                q = p;
            }
        }
        if best == 0 {
            return;
        }
        for w in 0..self.words {
            let mut bits = self.pool(depth, q)[w];
            while bits != 0 {
                let idx = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let row = self.cone.cands[idx];
                if self.node_budget == 0 {
                    return;
                }
                self.node_budget -= 1;
                self.depth_nodes[depth] += 1;
                if self.place(q, row) && self.forward_filter(depth, q, idx) {
                    self.descend(depth + 1, out);
                }
                self.unplace(q, row);
            }
        }
    }

    /// Copies the pools one level down, drops candidates that clash with the
    /// just-placed row (alone, or jointly with one earlier row), and reports
    /// whether every open position kept at least one candidate.
    fn forward_filter(&mut self, depth: usize, q: usize, placed_idx: usize) -> bool {
        let t = self.rest.t;
        let words = self.words;
        let placed_row = self.cone.cands[placed_idx];
        let placed_miss = self.cone.miss3[placed_idx];
        // Cone vertices at the degree cap cannot take more attachments;
        // vertices whose shortfall equals the open-position count must be in
        // every remaining row.
        let mut capped = 0u32;
        let mut required = 0u32;
        let open = t - self.decided_count;
        for u in 0..self.cone.s {
            let d = self.deg_cone[u] as usize;
            if d >= MAX_C4_K5_ORDER {
                capped |= 1 << u;
            }
            if self.min_degree.saturating_sub(d) == open {
                required |= 1 << u;
            }
        }
        let src_base = depth * t * words;
        let dst_base = (depth + 1) * t * words;
        for p in 0..t {
            if self.decided >> p & 1 != 0 || p == q {
                continue;
            }
            let fedge = self.rest.fadj[q] >> p & 1 != 0;
            // Joint constraints of the new row with one earlier row, seen
            // from a future row at p adjacent to both: 4-cycles in p's own
            // neighborhood (two common cone neighbors of the two rest
            // vertices; or a cone edge split across them when they are
            // themselves adjacent; or a shared hub with a cone spoke).
            let mut triples: [(u32, u32); 16] = [(0, 0); 16];
            let mut ntriples = 0;
            if fedge {
                let mut others = self.rest.fadj[p] & self.decided & !(1u32 << q);
                while others != 0 {
                    let q2 = others.trailing_zeros() as usize;
                    others &= others - 1;
                    let r2 = self.rows_by_pos[q2];
                    let common = placed_row & r2;
                    let hedge = self.rest.fadj[q] >> q2 & 1 != 0;
                    if common != 0 || hedge {
                        triples[ntriples] = (common, if hedge { r2 } else { 0 });
                        ntriples += 1;
                    }
                }
            }
            let mut nonempty = 0u64;
            for w in 0..words {
                let mut kept = 0u64;
                let mut scan = self.alive[src_base + p * words + w];
                while scan != 0 {
                    let bit = scan & scan.wrapping_neg();
                    scan ^= bit;
                    let idx = w * 64 + bit.trailing_zeros() as usize;
                    if self.cand_ok(
                        fedge,
                        placed_row,
                        &placed_miss,
                        idx,
                        capped,
                        required,
                        &triples[..ntriples],
                    ) {
                        kept |= bit;
                    }
                }
                self.alive[dst_base + p * words + w] = kept;
                nonempty |= kept;
            }
            if nonempty == 0 {
                self.kills[7] += 1;
                return false;
            }
        }
        true
    }

    /// Can `cand` still be assigned to an open position, given the row just
    /// placed at an F-adjacent (`fedge`) or F-distant position and the
    /// joint-violation contexts collected for that position?
    #[inline]
    fn cand_ok(
        &self,
        fedge: bool,
        placed_row: u32,
        placed_miss: &[u64; MISS_WORDS],
        cand_idx: usize,
        capped: u32,
        required: u32,
        triples: &[(u32, u32)],
    ) -> bool {
        let cand = self.cone.cands[cand_idx];
        if cand & capped != 0 || required & !cand != 0 {
            return false;
        }
        if !fedge {
            // Two F-distant rest vertices both missing one independent
            // 3-set of H form an independent 5-set with it.
            let m3 = &self.cone.miss3[cand_idx];
            return placed_miss[0] & m3[0] == 0 && placed_miss[1] & m3[1] == 0;
        }
        // Shared hub u whose two ring vertices (one per row, unique by the
        // matching property) are H-adjacent: closes a wheel rim through the
        // F-edge.
        let mut shared = placed_row & cand;
        while shared != 0 {
            let u = shared.trailing_zeros() as usize;
            shared &= shared - 1;
            let x = self.cone.rows[u] & cand;
            let y = self.cone.rows[u] & placed_row;
            if x != 0 && y != 0 {
                let xv = x.trailing_zeros() as usize;
                if self.cone.rows[xv] & y != 0 {
                    return false;
                }
            }
        }
        for &(common, r2) in triples {
            // Two cone vertices shared by both earlier rows and chosen here:
            // a 4-cycle through the two rest vertices under this hub.
            let cc = cand & common;
            if cc.count_ones() >= 2 {
                return false;
            }
            // Shared hub with a cone spoke H-adjacent to another shared
            // vertex: rim rest-rest-rest-cone.
            let mut us = cc;
            while us != 0 {
                let u = us.trailing_zeros() as usize;
                us &= us - 1;
                if self.cone.rows[u] & common != 0 {
                    return false;
                }
            }
            // The two earlier rest vertices are also F-adjacent: a cone edge
            // with one end in each earlier row, both ends chosen here, closes
            // a 4-cycle in this vertex's neighborhood.
            if r2 != 0 {
                let mut xs = cand & placed_row;
                while xs != 0 {
                    let x = xs.trailing_zeros() as usize;
                    xs &= xs - 1;
                    if self.cone.rows[x] & cand & r2 != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn emit_graph(&self, n: usize) -> SmallGraph {
        let mut g = SmallGraph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if self.adj[u] >> v & 1 != 0 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Assigns `row` to position `p`, mutating unconditionally, and reports
    /// whether the partial assembly stays feasible. The caller must always
    /// unplace afterwards.
    fn place(&mut self, p: usize, row: u32) -> bool {
        let s = self.cone.s;
        let w = 1 + s + p;
        let frest = self.rest.fadj[p] & self.decided;
        self.rows_by_pos[p] = row;
        self.adj[w] = (row << 1) | (frest << (1 + s));
        let mut m = row;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            self.adj[1 + u] |= 1 << w;
            if (self.deg_cone[u] as usize) < self.min_degree {
                self.deficit -= 1;
            }
            self.deg_cone[u] += 1;
        }
        let mut m = frest;
        while m != 0 {
            let q = m.trailing_zeros() as usize;
            m &= m - 1;
            self.adj[1 + s + q] |= 1 << w;
        }
        for (e, &a) in self.cone.ih2.iter().enumerate() {
            if a & row == 0 {
                self.compat2[e] |= 1 << p;
            }
        }
        for (e, &a) in self.cone.ih3.iter().enumerate() {
            if a & row == 0 {
                self.compat3[e] |= 1 << p;
            }
        }
        let non_nbrs = !self.rest.fadj[p] & self.decided;
        self.decided |= 1 << p;
        self.decided_count += 1;
        self.capacity -= self.rest.hi[p] as usize;

        // Degree caps and feasibility: a deficient cone vertex gains at most
        // one per open row, and the open rows together supply at most
        // `capacity` more attachments.
        if self.deficit > self.capacity {
            self.kills[0] += 1;
            return false;
        }
        let remaining = self.rest.t - self.decided_count;
        for u in 0..s {
            let d = self.deg_cone[u] as usize;
            if d > MAX_C4_K5_ORDER || d + remaining < self.min_degree {
                self.kills[1] += 1;
                return false;
            }
        }
        // No wheel among assigned vertices: every new edge touches w, so a
        // new rim sits in the neighborhood of w itself, of a chosen cone
        // vertex, or of an assigned rest neighbor, and passes through w.
        if c4_in_mask(&self.adj, self.adj[w]) {
            self.kills[2] += 1;
            return false;
        }
        let mut m = row;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if c4_in_mask_through(&self.adj, self.adj[1 + u], w) {
                self.kills[3] += 1;
                return false;
            }
        }
        let mut m = frest;
        while m != 0 {
            let q = m.trailing_zeros() as usize;
            m &= m - 1;
            if c4_in_mask_through(&self.adj, self.adj[1 + s + q], w) {
                self.kills[4] += 1;
                return false;
            }
        }
        // No independent 5-set through w. Candidate rows already meet every
        // independent 4-set of H, and F has no independent 4-set, so the
        // only new shapes are 3+2 and 2+3 mixed sets.
        for (e, &a) in self.cone.ih3.iter().enumerate() {
            if a & row == 0 && self.compat3[e] & non_nbrs != 0 {
                self.kills[5] += 1;
                return false;
            }
        }
        for (e, &a) in self.cone.ih2.iter().enumerate() {
            if a & row == 0 {
                let m2 = self.compat2[e] & non_nbrs;
                let mut mm = m2;
                while mm != 0 {
                    let q = mm.trailing_zeros() as usize;
                    mm &= mm - 1;
                    if m2 & !self.rest.fadj[q] & !(1u32 << q) != 0 {
                        self.kills[6] += 1;
                        return false;
                    }
                }
            }
        }
        true
    }

    fn unplace(&mut self, p: usize, row: u32) {
        let s = self.cone.s;
        let w = 1 + s + p;
        let clear = !(1u32 << w);
        self.decided &= !(1u32 << p);
        self.decided_count -= 1;
        self.capacity += self.rest.hi[p] as usize;
        let frest = self.rest.fadj[p] & self.decided;
        self.adj[w] = 0;
        let mut m = row;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            self.adj[1 + u] &= clear;
            self.deg_cone[u] -= 1;
            if (self.deg_cone[u] as usize) < self.min_degree {
                self.deficit += 1;
            }
        }
        let mut m = frest;
        while m != 0 {
            let q = m.trailing_zeros() as usize;
            m &= m - 1;
            self.adj[1 + s + q] &= clear;
        }
        let pbit = !(1u32 << p);
        for c in self.compat2.iter_mut() {
            *c &= pbit;
        }
        for c in self.compat3.iter_mut() {
            *c &= pbit;
        }
    }
}

/// Instrumented variant used while tuning; not part of the public surface.
#[doc(hidden)]
pub fn glue_pair_stats(task: &GlueTask, max_nodes: u64) -> (Vec<SmallGraph>, u64, bool) {
    let cone_ctx = ConeCtx::new(&task.cone);
    let rest_ctx = RestCtx::new(&task.rest, task.cone.order(), task.min_degree);
    let mut search = GlueSearch::new(&cone_ctx, &rest_ctx, task.min_degree);
    search.node_budget = max_nodes;
    let mut out = Vec::new();
    search.run(&mut |g| out.push(*g));
    let nodes = max_nodes - search.node_budget;
    eprintln!("depth nodes: {:?}", &search.depth_nodes[..task.rest.order().min(17)]);
    eprintln!("kills [cap,peru,c4w,c4cone,c4rest,ih3,ih2,wipe]: {:?}", search.kills);
    (out, nodes, search.node_budget == 0)
}

/// Every graph assembled from this task that is W5-free, has independence
/// at most 4 and minimum degree `task.min_degree` — duplicates under
/// isomorphism included; dedup is the caller's business.
pub fn glue_pair(task: &GlueTask) -> Vec<SmallGraph> {
    debug_assert!(check_member(&task.cone, FamilySpec::C4_K5));
    debug_assert!(check_member(&task.rest, FamilySpec::W5_K4));
    debug_assert_eq!(task.min_degree, task.cone.order());
    let cone_ctx = ConeCtx::new(&task.cone);
    let rest_ctx = RestCtx::new(&task.rest, task.cone.order(), task.min_degree);
    let mut out = Vec::new();
    GlueSearch::new(&cone_ctx, &rest_ctx, task.min_degree).run(&mut |g| out.push(*g));
    out
}

/// Summary of one full cone-level x rest-level gluing run.
#[derive(Debug)]
pub struct GlueSummary {
    pub cone_order: usize,
    pub rest_order: usize,
    pub cone_count: usize,
    pub rest_count: usize,
    /// Canonical representatives of the glued classes, sorted.
    pub classes: Vec<SmallGraph>,
}

/// Glues every (cone, rest) pair from two family levels and deduplicates the
/// output up to isomorphism. `min_degree_exact` re-asserts that the minimum
/// degree equals the cone order on every output; with the apex pinned at
/// cone-order degree the `>=` filter already forces that, so the flag has no
/// observable effect beyond the extra check.
pub fn glue_level(
    cones: &[SmallGraph],
    rests: &[SmallGraph],
    cone_order: usize,
    rest_order: usize,
    min_degree_exact: bool,
) -> Result<GlueSummary, GlueError> {
    validate_level(cones, cone_order, FamilySpec::C4_K5, "cone")?;
    validate_level(rests, rest_order, FamilySpec::W5_K4, "rest")?;
    let cone_ctxs: Vec<ConeCtx> = cones.iter().map(ConeCtx::new).collect();
    let store = IsoStore::new();
    rests.par_iter().for_each(|rest| {
        let rest_ctx = RestCtx::new(rest, cone_order, cone_order);
        for cc in &cone_ctxs {
            GlueSearch::new(cc, &rest_ctx, cone_order).run(&mut |g| {
                if !min_degree_exact || g.min_degree() == cone_order {
                    store.insert_if_new(g);
                }
            });
        }
    });
    let classes = store
        .into_sorted_forms()
        .iter()
        .map(|f| f.to_graph())
        .collect();
    Ok(GlueSummary {
        cone_order,
        rest_order,
        cone_count: cones.len(),
        rest_count: rests.len(),
        classes,
    })
}

fn validate_level(
    graphs: &[SmallGraph],
    expected_order: usize,
    fam: FamilySpec,
    role: &'static str,
) -> Result<(), GlueError> {
    for (index, g) in graphs.iter().enumerate() {
        if g.order() != expected_order {
            return Err(GlueError::WrongOrder {
                role,
                index,
                expected: expected_order,
                got: g.order(),
            });
        }
        if !check_member(g, fam) {
            return Err(GlueError::NotMember { role, index });
        }
    }
    Ok(())
}

/// All pairwise non-isomorphic one-vertex extensions of `g` inside the
/// family, sorted by canonical form. For the wheel-versus-K5 family the new
/// vertex's degree window is pinned by the auxiliary family orders: its
/// non-neighborhood must fit in the W5/K4 family and its neighborhood in the
/// C4/K5 family.
pub fn extend(g: &SmallGraph, fam: FamilySpec) -> Vec<SmallGraph> {
    debug_assert!(check_member(g, fam));
    let n = g.order();
    let (lo, hi) = match (fam.forbidden, fam.independence_bound) {
        (Forbidden::W5, 4) => (n.saturating_sub(MAX_W5_K4_ORDER), MAX_C4_K5_ORDER),
        _ => (0, n),
    };
    let store = IsoStore::new();
    for_each_extension(g, fam, lo, hi, &mut |nbrs| {
        let ext = g.add_vertex(nbrs).expect("extension below capacity");
        store.insert_if_new(&ext);
    });
    store
        .into_sorted_forms()
        .iter()
        .map(|f| f.to_graph())
        .collect()
}
