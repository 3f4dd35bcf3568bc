//! Small undirected graphs on at most 32 vertices, stored as one `u32`
//! adjacency bitmask per vertex.

use std::fmt;

/// Hard vertex capacity. Nothing in this toolkit ever needs more than 27
/// vertices, so a single machine word per adjacency row is enough.
pub const MAX_VERTICES: usize = 32;

/// A set of vertex ids below [`MAX_VERTICES`], as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Set of all vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u32 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u32 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u32 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Complement within the vertex range `0..n`.
    #[inline]
    pub fn complement_within(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates the members in ascending order.
    #[inline]
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES);
            s.insert(v);
        }
        s
    }
}

/// Iterator over set bits of a mask, low to high.
pub struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Errors from graph constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Requested order exceeds [`MAX_VERTICES`].
    CapacityExceeded { order: usize },
    /// A circulant distance was outside `1..=n/2`.
    DistanceOutOfRange { distance: usize, order: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::CapacityExceeded { order } => {
                write!(f, "graph order {order} exceeds capacity {MAX_VERTICES}")
            }
            GraphError::DistanceOutOfRange { distance, order } => {
                write!(
                    f,
                    "circulant distance {distance} out of range 1..={} for order {order}",
                    order / 2
                )
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// An undirected simple graph on `n <= 32` vertices.
///
/// Row `i` of `adj` is the neighbor set of vertex `i`. All constructors and
/// mutators keep the adjacency symmetric and loop-free; rows at index `>= n`
/// stay empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl SmallGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> SmallGraph {
        assert!(n <= MAX_VERTICES, "order {n} exceeds capacity");
        SmallGraph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> SmallGraph {
        let mut g = SmallGraph::empty(n);
        let full = VertexSet::full(n).0;
        for i in 0..n {
            g.adj[i] = full & !(1u32 << i);
        }
        g
    }

    /// The cycle `0-1-...-(n-1)-0` (requires `n >= 3`).
    pub fn cycle(n: usize) -> SmallGraph {
        assert!(n >= 3);
        let mut g = SmallGraph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// Builds a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> SmallGraph {
        let mut g = SmallGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Circulant graph on `Z_n`: `i ~ j` iff the circular distance
    /// `min(|i-j|, n-|i-j|)` is one of `dists`.
    pub fn circulant(n: usize, dists: &[usize]) -> Result<SmallGraph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded { order: n });
        }
        if n == 0 {
            return Err(GraphError::CapacityExceeded { order: 0 });
        }
        for &d in dists {
            if d < 1 || 2 * d > n {
                return Err(GraphError::DistanceOutOfRange {
                    distance: d,
                    order: n,
                });
            }
        }
        let mut g = SmallGraph::empty(n);
        for i in 0..n {
            for &d in dists {
                g.add_edge(i, (i + d) % n);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Neighbor set of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        let n = self.order();
        assert!(u < n && v < n && u != v, "bad edge ({u},{v}) in order-{n} graph");
        self.adj[u] |= 1u32 << v;
        self.adj[v] |= 1u32 << u;
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.order()]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Non-decreasing list of vertex degrees.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Complement graph on the same vertices.
    pub fn complement(&self) -> SmallGraph {
        let n = self.order();
        let full = VertexSet::full(n).0;
        let mut g = SmallGraph::empty(n);
        for i in 0..n {
            g.adj[i] = !self.adj[i] & full & !(1u32 << i);
        }
        g
    }

    /// Subgraph induced by `w`; local vertex `k` is the `k`-th smallest
    /// member of `w`, so the local order is deterministic.
    pub fn induced_subgraph(&self, w: VertexSet) -> SmallGraph {
        debug_assert!(w.is_subset_of(VertexSet::full(self.order())));
        let members: Vec<usize> = w.iter().collect();
        let mut g = SmallGraph::empty(members.len());
        for (li, &vi) in members.iter().enumerate() {
            for (lj, &vj) in members.iter().enumerate().skip(li + 1) {
                if self.has_edge(vi, vj) {
                    g.adj[li] |= 1u32 << lj;
                    g.adj[lj] |= 1u32 << li;
                }
            }
        }
        g
    }

    /// Returns the graph extended by one vertex (id `n`) adjacent to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<SmallGraph, GraphError> {
        let n = self.order();
        if n >= MAX_VERTICES {
            return Err(GraphError::CapacityExceeded { order: n + 1 });
        }
        debug_assert!(nbrs.is_subset_of(VertexSet::full(n)));
        let mut g = *self;
        g.n += 1;
        g.adj[n] = nbrs.0;
        for v in nbrs.iter() {
            g.adj[v] |= 1u32 << n;
        }
        Ok(g)
    }

    /// Splits the graph at `v` into the subgraph induced on its neighborhood
    /// (the cone) and the subgraph induced on everything else (the rest).
    pub fn decompose(&self, v: usize) -> Decomposition {
        assert!(v < self.order());
        let nbrs = self.neighbors(v);
        let others = nbrs
            .complement_within(self.order())
            .difference(VertexSet::singleton(v));
        Decomposition {
            apex: v,
            cone: self.induced_subgraph(nbrs),
            rest: self.induced_subgraph(others),
            cone_map: nbrs.iter().collect(),
            rest_map: others.iter().collect(),
        }
    }

    /// Relabels the graph by `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> SmallGraph {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut g = SmallGraph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if self.has_edge(u, v) {
                    g.add_edge(perm[u], perm[v]);
                }
            }
        }
        g
    }

    /// Checks symmetry, loop-freedom and empty rows beyond `n`; used by tests.
    pub fn invariants_ok(&self) -> bool {
        let n = self.order();
        let full = VertexSet::full(n).0;
        for i in 0..MAX_VERTICES {
            if i >= n {
                if self.adj[i] != 0 {
                    return false;
                }
                continue;
            }
            if self.adj[i] & !full != 0 || self.adj[i] >> i & 1 != 0 {
                return false;
            }
            for j in (i + 1)..n {
                if self.has_edge(i, j) != self.has_edge(j, i) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges=[", self.n)?;
        let mut first = true;
        for u in 0..self.order() {
            for v in (u + 1)..self.order() {
                if self.has_edge(u, v) {
                    if !first {
                        write!(f, ", ")?;
                    }
                    write!(f, "{u}-{v}")?;
                    first = false;
                }
            }
        }
        write!(f, "])")
    }
}

/// The cone/rest split of a graph at an apex vertex.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub apex: usize,
    /// Induced subgraph on the apex's neighborhood.
    pub cone: SmallGraph,
    /// Induced subgraph on the non-neighbors (apex excluded).
    pub rest: SmallGraph,
    /// Original vertex id of each cone vertex, ascending.
    pub cone_map: Vec<usize>,
    /// Original vertex id of each rest vertex, ascending.
    pub rest_map: Vec<usize>,
}
