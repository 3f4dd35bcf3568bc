//! Canonical labeling and isomorph rejection.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle encoding reachable through the refinement search: iterated
//! equitable partition refinement by neighbor counts per cell, then
//! backtracking over individualized cells, pruning branches whose settled
//! prefix already encodes worse than the best leaf and skipping branches that
//! discovered automorphisms map onto explored ones.

use std::collections::HashSet;
use std::hash::{BuildHasherDefault, Hasher};
use std::sync::Mutex;

use crate::graph::{SmallGraph, MAX_VERTICES};

/// Words needed for the C(32,2) = 496 triangle bits.
const FORM_WORDS: usize = 8;

/// Permutation-invariant encoding of a graph: the vertex count followed by
/// the upper triangle of the canonically relabeled adjacency matrix, packed
/// most-significant-bit first. Two graphs are isomorphic iff their forms are
/// equal, and the derived ordering matches lexicographic order on
/// [`CanonicalForm::to_bytes`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: u8,
    words: [u64; FORM_WORDS],
}

impl CanonicalForm {
    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    fn bit(&self, pos: usize) -> bool {
        self.words[pos >> 6] >> (63 - (pos & 63)) & 1 != 0
    }

    /// Byte encoding: order byte, then the triangle bits packed eight per
    /// byte, most significant first.
    pub fn to_bytes(&self) -> Vec<u8> {
        let n = self.order();
        let nbits = n * n.saturating_sub(1) / 2;
        let mut out = vec![self.n];
        for byte_idx in 0..nbits.div_ceil(8) {
            let mut b = 0u8;
            for k in 0..8 {
                let pos = byte_idx * 8 + k;
                if pos < nbits && self.bit(pos) {
                    b |= 1 << (7 - k);
                }
            }
            out.push(b);
        }
        out
    }

    /// The canonical representative graph this form encodes.
    pub fn to_graph(&self) -> SmallGraph {
        let n = self.order();
        let mut g = SmallGraph::empty(n);
        let mut pos = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bit(pos) {
                    g.add_edge(i, j);
                }
                pos += 1;
            }
        }
        g
    }
}

/// An ordered partition of the vertex set into cells (bitmasks).
#[derive(Clone, Copy)]
struct Partition {
    cells: [u32; MAX_VERTICES],
    len: usize,
}

impl Partition {
    fn unit(n: usize) -> Partition {
        let mut p = Partition {
            cells: [0; MAX_VERTICES],
            len: 0,
        };
        if n > 0 {
            p.cells[0] = crate::graph::VertexSet::full(n).0;
            p.len = 1;
        }
        p
    }

    /// Index of the first smallest cell with more than one vertex.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, u32)> = None;
        for ci in 0..self.len {
            let size = self.cells[ci].count_ones();
            if size > 1 {
                match best {
                    Some((_, s)) if s <= size => {}
                    _ => best = Some((ci, size)),
                }
            }
        }
        best.map(|(ci, _)| ci)
    }

    /// Number of leading singleton cells.
    fn settled_prefix(&self) -> usize {
        self.cells[..self.len]
            .iter()
            .take_while(|c| c.count_ones() == 1)
            .count()
    }

    /// Moves `v` into its own cell directly before the remainder of the cell
    /// that held it.
    fn individualize(&mut self, ci: usize, v: usize) {
        let rem = self.cells[ci] & !(1u32 << v);
        debug_assert!(rem != 0 && self.cells[ci] != rem);
        self.cells.copy_within(ci..self.len, ci + 1);
        self.cells[ci] = 1u32 << v;
        self.cells[ci + 1] = rem;
        self.len += 1;
    }
}

struct Canonizer<'a> {
    g: &'a SmallGraph,
    n: usize,
    rows: [u32; MAX_VERTICES],
    best: Option<Leaf>,
    /// Known automorphisms, as vertex -> vertex maps.
    gens: Vec<[u8; MAX_VERTICES]>,
}

#[derive(Clone, Copy)]
struct Leaf {
    form: CanonicalForm,
    labeling: [u8; MAX_VERTICES], // position -> vertex
}

impl<'a> Canonizer<'a> {
    fn new(g: &'a SmallGraph) -> Canonizer<'a> {
        let mut rows = [0u32; MAX_VERTICES];
        for v in 0..g.order() {
            rows[v] = g.row(v);
        }
        Canonizer {
            g,
            n: g.order(),
            rows,
            best: None,
            gens: Vec::new(),
        }
    }

    /// Refines the partition to equitability: every cell has uniform neighbor
    /// counts into every cell. Splits order sub-cells by ascending count, so
    /// the result depends only on the partition structure, never on vertex
    /// ids — relabeling a graph relabels its refinement.
    fn refine(&self, p: &mut Partition) {
        'restart: loop {
            for si in 0..p.len {
                let splitter = p.cells[si];
                for ci in 0..p.len {
                    if self.split_cell(p, ci, splitter) {
                        continue 'restart;
                    }
                }
            }
            return;
        }
    }

    fn split_cell(&self, p: &mut Partition, ci: usize, splitter: u32) -> bool {
        let cell = p.cells[ci];
        if cell.count_ones() <= 1 {
            return false;
        }
        let mut buckets = [0u32; MAX_VERTICES + 1];
        let mut members = cell;
        while members != 0 {
            let v = members.trailing_zeros() as usize;
            members &= members - 1;
            buckets[(self.rows[v] & splitter).count_ones() as usize] |= 1u32 << v;
        }
        let parts: Vec<u32> = buckets.iter().copied().filter(|&m| m != 0).collect();
        if parts.len() <= 1 {
            return false;
        }
        p.cells.copy_within(ci + 1..p.len, ci + parts.len());
        for (k, m) in parts.iter().enumerate() {
            p.cells[ci + k] = *m;
        }
        p.len += parts.len() - 1;
        true
    }

    fn encode(&self, labeling: &[u8; MAX_VERTICES]) -> CanonicalForm {
        let mut words = [0u64; FORM_WORDS];
        let mut pos = 0;
        for j in 1..self.n {
            let nj = self.rows[labeling[j] as usize];
            for i in 0..j {
                if nj >> labeling[i] & 1 != 0 {
                    words[pos >> 6] |= 1u64 << (63 - (pos & 63));
                }
                pos += 1;
            }
        }
        CanonicalForm {
            n: self.n as u8,
            words,
        }
    }

    /// Compares the encoding determined by the first `k` settled positions
    /// against the current best. `Greater` means the branch cannot contain
    /// the minimum.
    fn prefix_cmp(&self, p: &Partition, k: usize) -> std::cmp::Ordering {
        let best = match &self.best {
            Some(b) => &b.form,
            None => return std::cmp::Ordering::Less,
        };
        let mut lab = [0u8; MAX_VERTICES];
        for (pos, cell) in p.cells[..k].iter().enumerate() {
            lab[pos] = cell.trailing_zeros() as u8;
        }
        let mut pos = 0;
        for j in 1..k {
            let nj = self.rows[lab[j] as usize];
            for i in 0..j {
                let bit = nj >> lab[i] & 1 != 0;
                if bit != best.bit(pos) {
                    return if bit {
                        std::cmp::Ordering::Greater
                    } else {
                        std::cmp::Ordering::Less
                    };
                }
                pos += 1;
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Union-find orbits of the subgroup generated by the known
    /// automorphisms that fix every vertex in `fixed` pointwise.
    fn orbits_fixing(&self, fixed: u32) -> [u8; MAX_VERTICES] {
        let mut parent = [0u8; MAX_VERTICES];
        for v in 0..self.n {
            parent[v] = v as u8;
        }
        fn find(parent: &mut [u8; MAX_VERTICES], v: usize) -> usize {
            let mut r = v;
            while parent[r] as usize != r {
                r = parent[r] as usize;
            }
            let mut c = v;
            while parent[c] as usize != c {
                let next = parent[c] as usize;
                parent[c] = r as u8;
                c = next;
            }
            r
        }
        for gen in &self.gens {
            let applies = (0..self.n).all(|v| fixed >> v & 1 == 0 || gen[v] as usize == v);
            if !applies {
                continue;
            }
            for v in 0..self.n {
                let a = find(&mut parent, v);
                let b = find(&mut parent, gen[v] as usize);
                if a != b {
                    parent[a.max(b)] = a.min(b) as u8;
                }
            }
        }
        let mut roots = [0u8; MAX_VERTICES];
        for v in 0..self.n {
            roots[v] = find(&mut parent, v) as u8;
        }
        roots
    }

    fn visit_leaf(&mut self, p: &Partition) {
        let mut labeling = [0u8; MAX_VERTICES];
        for (pos, cell) in p.cells[..p.len].iter().enumerate() {
            labeling[pos] = cell.trailing_zeros() as u8;
        }
        let form = self.encode(&labeling);
        match &self.best {
            None => self.best = Some(Leaf { form, labeling }),
            Some(b) => match form.cmp(&b.form) {
                std::cmp::Ordering::Less => self.best = Some(Leaf { form, labeling }),
                std::cmp::Ordering::Greater => {}
                std::cmp::Ordering::Equal => {
                    // Two labelings with identical encodings compose to an
                    // automorphism: best[p] -> labeling[p].
                    let mut perm = [0u8; MAX_VERTICES];
                    let best_lab = b.labeling;
                    for pos in 0..self.n {
                        perm[best_lab[pos] as usize] = labeling[pos];
                    }
                    if (0..self.n).any(|v| perm[v] as usize != v)
                        && !self.gens.contains(&perm)
                    {
                        debug_assert!((0..self.n).all(|u| {
                            (0..self.n).all(|v| {
                                self.g.has_edge(u, v)
                                    == self.g.has_edge(perm[u] as usize, perm[v] as usize)
                                    || u == v
                            })
                        }));
                        self.gens.push(perm);
                    }
                }
            },
        }
    }

    fn search(&mut self, p: &Partition, fixed: u32) {
        let ci = match p.target_cell() {
            None => {
                self.visit_leaf(p);
                return;
            }
            Some(ci) => ci,
        };
        let cell = p.cells[ci];
        let mut tried: u32 = 0;
        let mut members = cell;
        while members != 0 {
            let v = members.trailing_zeros() as usize;
            members &= members - 1;
            if tried != 0 {
                // Skip vertices equivalent to an explored sibling under the
                // stabilizer of the fixed prefix.
                let roots = self.orbits_fixing(fixed);
                let mut same_orbit = false;
                let mut t = tried;
                while t != 0 {
                    let w = t.trailing_zeros() as usize;
                    t &= t - 1;
                    if roots[w] == roots[v] {
                        same_orbit = true;
                        break;
                    }
                }
                if same_orbit {
                    tried |= 1u32 << v;
                    continue;
                }
            }
            tried |= 1u32 << v;
            let mut child = *p;
            child.individualize(ci, v);
            self.refine(&mut child);
            if self.prefix_cmp(&child, child.settled_prefix()) == std::cmp::Ordering::Greater {
                continue;
            }
            self.search(&child, fixed | 1u32 << v);
        }
    }
}

/// Canonical form of `g`: invariant under any relabeling of the input.
pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm {
            n: 0,
            words: [0; FORM_WORDS],
        };
    }
    let mut canon = Canonizer::new(g);
    // Refining the unit partition starts by splitting on degree, ascending.
    let mut p = Partition::unit(n);
    canon.refine(&mut p);
    canon.search(&p, 0);
    canon.best.expect("search visits at least one leaf").form
}

/// Canonical form equality.
pub fn is_isomorphic(g1: &SmallGraph, g2: &SmallGraph) -> bool {
    g1.order() == g2.order()
        && g1.edge_count() == g2.edge_count()
        && canonical_form(g1) == canonical_form(g2)
}

#[derive(Default)]
struct FxHasher(u64);

impl Hasher for FxHasher {
    #[inline]
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u64(b as u64);
        }
    }

    #[inline]
    fn write_u8(&mut self, x: u8) {
        self.write_u64(x as u64);
    }

    #[inline]
    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0.rotate_left(5) ^ x).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
    }

    #[inline]
    fn write_usize(&mut self, x: usize) {
        self.write_u64(x as u64);
    }

    #[inline]
    fn finish(&self) -> u64 {
        self.0
    }
}

type FormSet = HashSet<CanonicalForm, BuildHasherDefault<FxHasher>>;

const SHARDS: usize = 64;

/// A concurrent set of isomorphism classes keyed by canonical form.
/// Insertion is idempotent per class and linearizable; iteration order of
/// [`IsoStore::into_sorted_forms`] is deterministic.
pub struct IsoStore {
    shards: Vec<Mutex<FormSet>>,
}

impl Default for IsoStore {
    fn default() -> Self {
        Self::new()
    }
}

impl IsoStore {
    pub fn new() -> IsoStore {
        IsoStore {
            shards: (0..SHARDS).map(|_| Mutex::new(FormSet::default())).collect(),
        }
    }

    #[inline]
    fn shard_of(form: &CanonicalForm) -> usize {
        let mut h = FxHasher::default();
        h.write_u64(form.words[0] ^ (form.n as u64) << 56);
        h.write_u64(form.words[1]);
        (h.finish() % SHARDS as u64) as usize
    }

    /// Inserts the graph's class; true iff it was not present before.
    pub fn insert_if_new(&self, g: &SmallGraph) -> bool {
        self.insert_form(canonical_form(g))
    }

    pub fn insert_form(&self, form: CanonicalForm) -> bool {
        self.shards[Self::shard_of(&form)].lock().unwrap().insert(form)
    }

    pub fn contains(&self, g: &SmallGraph) -> bool {
        let form = canonical_form(g);
        self.shards[Self::shard_of(&form)].lock().unwrap().contains(&form)
    }

    pub fn len(&self) -> usize {
        self.shards.iter().map(|s| s.lock().unwrap().len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Class count per vertex order.
    pub fn counts_by_order(&self) -> Vec<(usize, usize)> {
        let mut counts = [0usize; MAX_VERTICES + 1];
        for shard in &self.shards {
            for form in shard.lock().unwrap().iter() {
                counts[form.order()] += 1;
            }
        }
        counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(n, &c)| (n, c))
            .collect()
    }

    /// Drains the store into ascending canonical-form order.
    pub fn into_sorted_forms(self) -> Vec<CanonicalForm> {
        let mut forms: Vec<CanonicalForm> = self
            .shards
            .into_iter()
            .flat_map(|s| s.into_inner().unwrap().into_iter())
            .collect();
        forms.sort_unstable();
        forms
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn relabelings_of_c5_agree() {
        let c5 = SmallGraph::cycle(5);
        let base = canonical_form(&c5);
        let perms = [
            vec![1, 2, 3, 4, 0],
            vec![4, 2, 0, 3, 1],
            vec![2, 0, 3, 1, 4],
        ];
        for perm in perms {
            assert_eq!(canonical_form(&c5.relabel(&perm)), base);
        }
    }

    #[test]
    fn different_graphs_differ() {
        // Triangle plus isolated vertex vs the 3-edge path: same degree
        // sums, different structure.
        let tri = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]);
        let path = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_ne!(canonical_form(&tri), canonical_form(&path));
        // C6 vs two triangles: same degree sequence.
        let c6 = SmallGraph::cycle(6);
        let two_k3 = SmallGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(!is_isomorphic(&c6, &two_k3));
    }

    #[test]
    fn labeled_graphs_on_four_vertices_fall_into_eleven_classes() {
        let store = IsoStore::new();
        for bits in 0u32..64 {
            let mut g = SmallGraph::empty(4);
            let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if bits >> k & 1 != 0 {
                    g.add_edge(i, j);
                }
            }
            store.insert_if_new(&g);
        }
        assert_eq!(store.len(), 11);
    }

    #[test]
    fn decode_reencodes_to_same_form() {
        for g in [
            SmallGraph::empty(0),
            SmallGraph::empty(6),
            SmallGraph::complete(7),
            SmallGraph::cycle(9),
            SmallGraph::circulant(13, &[1, 5]).unwrap(),
            SmallGraph::circulant(26, &[1, 5, 8, 12, 13]).unwrap(),
        ] {
            let form = canonical_form(&g);
            let rep = form.to_graph();
            assert_eq!(canonical_form(&rep), form);
            assert!(is_isomorphic(&g, &rep));
        }
    }

    #[test]
    fn bytes_order_matches_form_order() {
        let mut forms: Vec<CanonicalForm> = (0u32..64)
            .map(|bits| {
                let mut g = SmallGraph::empty(4);
                let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    if bits >> k & 1 != 0 {
                        g.add_edge(i, j);
                    }
                }
                canonical_form(&g)
            })
            .collect();
        forms.sort_unstable();
        for pair in forms.windows(2) {
            assert!(pair[0].to_bytes() <= pair[1].to_bytes());
        }
    }

    #[test]
    fn store_insert_is_idempotent_per_class() {
        let store = IsoStore::new();
        assert!(store.insert_if_new(&SmallGraph::complete(3)));
        assert!(!store.insert_if_new(&SmallGraph::complete(3)));
        let c5 = SmallGraph::cycle(5);
        assert!(store.insert_if_new(&c5));
        assert!(!store.insert_if_new(&c5.relabel(&[3, 1, 4, 0, 2])));
        assert_eq!(store.len(), 2);
        assert_eq!(store.counts_by_order(), vec![(3, 1), (5, 1)]);
    }

    #[test]
    fn circulant_is_vertex_transitive() {
        let g = SmallGraph::circulant(26, &[1, 5, 8, 12, 13]).unwrap();
        let base = canonical_form(&g);
        for r in 1..26 {
            let perm: Vec<usize> = (0..26).map(|i| (i + r) % 26).collect();
            assert_eq!(canonical_form(&g.relabel(&perm)), base);
        }
        assert!(is_isomorphic(&g, &g.complement().complement()));
    }

    #[test]
    fn automorphism_rich_graphs_terminate_quickly() {
        // Empty and complete graphs exercise the orbit pruning.
        for n in [8, 12, 16] {
            let e = SmallGraph::empty(n);
            assert_eq!(canonical_form(&e).to_graph(), e);
            let k = SmallGraph::complete(n);
            assert_eq!(canonical_form(&k).to_graph(), k);
        }
        // Complete bipartite K4,4.
        let mut g = SmallGraph::empty(8);
        for i in 0..4 {
            for j in 4..8 {
                g.add_edge(i, j);
            }
        }
        let f = canonical_form(&g);
        assert_eq!(canonical_form(&g.relabel(&[7, 2, 5, 0, 1, 6, 3, 4])), f);
    }

    #[test]
    fn petersen_relabelings_collapse_to_one_class() {
        let mut g = SmallGraph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        let store = IsoStore::new();
        store.insert_if_new(&g);
        // A fixed batch of scrambles, all the same class.
        let mut perm: Vec<usize> = (0..10).collect();
        for step in 1..40 {
            perm.rotate_left(step % 9 + 1);
            perm.swap(step % 10, (step * 7) % 10);
            assert!(!store.insert_if_new(&g.relabel(&perm)));
        }
        assert_eq!(store.len(), 1);
    }

    #[test]
    fn empty_and_tiny_graphs() {
        assert_eq!(canonical_form(&SmallGraph::empty(0)).order(), 0);
        assert_eq!(canonical_form(&SmallGraph::empty(0)).to_bytes(), vec![0]);
        assert_eq!(canonical_form(&SmallGraph::empty(1)).order(), 1);
        let k1 = SmallGraph::empty(1);
        let ext = k1.add_vertex(VertexSet::EMPTY).unwrap();
        assert_eq!(canonical_form(&ext).order(), 2);
    }
}
