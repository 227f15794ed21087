//! Exact general position number by branch and bound.
//!
//! A set is in general position iff it contains no conflict triple, a triple
//! in which one member lies on a geodesic between the other two. The search
//! branches on vertices in ascending order (include first), keeps only
//! candidates that form no conflict with any chosen pair, and prunes with a
//! packing bound: from a candidate pair that conflicts with a chosen vertex
//! at most one survives, and from a candidate conflict triple at most two.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::mop::{maximal_fan, MopCertificate, MopError};

/// Bitmask width bounds the largest order the solver can represent.
pub const MAX_SOLVER_ORDER: usize = 64;
pub const DEFAULT_SEARCH_CAP: usize = 40;
pub const DEFAULT_SEED: u64 = 0x6770_5f6d_6f70;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is disconnected (no path from {0} to {1})")]
    Disconnected(Vertex, Vertex),
    #[error("order {order} exceeds the search cap {cap}; pass the override to run anyway")]
    SearchCapExceeded { order: usize, cap: usize },
    #[error("order {0} exceeds the solver limit of {MAX_SOLVER_ORDER}")]
    TooLarge(usize),
    #[error(transparent)]
    Mop(#[from] MopError),
}

/// Unordered triples `{a, b, c}` in which one vertex lies between the others,
/// indexed by pair.
#[derive(Debug, Clone)]
pub struct ConflictTable {
    order: usize,
    /// `pair[a * n + b]`: vertices completing a conflict with `a` and `b`.
    pair: Vec<u64>,
    triples: Vec<[Vertex; 3]>,
}

impl ConflictTable {
    pub fn new(g: &Graph, dm: &DistanceMatrix) -> Result<Self, SolveError> {
        let n = g.order();
        if n > MAX_SOLVER_ORDER {
            return Err(SolveError::TooLarge(n));
        }
        if let Some(v) = (1..n).find(|&v| dm.get(0, v).is_none()) {
            return Err(SolveError::Disconnected(0, v));
        }
        let mut pair = vec![0u64; n * n];
        let mut triples = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if dm.between(a, b, c) || dm.between(b, a, c) || dm.between(a, c, b) {
                        triples.push([a, b, c]);
                        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
                            pair[x * n + y] |= 1 << z;
                            pair[y * n + x] |= 1 << z;
                        }
                    }
                }
            }
        }
        Ok(ConflictTable {
            order: n,
            pair,
            triples,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Sorted triples, lexicographic.
    pub fn triples(&self) -> &[[Vertex; 3]] {
        &self.triples
    }

    /// Bitmask of the vertices that conflict with the pair `a`, `b`.
    #[inline]
    pub fn completing(&self, a: Vertex, b: Vertex) -> u64 {
        self.pair[a * self.order + b]
    }

    pub fn completing_list(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        bits(self.completing(a, b)).collect()
    }

    pub fn is_conflict(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        self.completing(a, b) >> c & 1 == 1
    }

    /// True iff the set contains no conflict triple.
    pub fn is_gp(&self, set: &[Vertex]) -> bool {
        let mask = to_mask(set);
        set.iter().enumerate().all(|(i, &a)| {
            set[i + 1..]
                .iter()
                .all(|&b| self.completing(a, b) & mask == 0)
        })
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn to_mask(set: &[Vertex]) -> u64 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn conflict_triples(g: &Graph, dm: &DistanceMatrix) -> Result<ConflictTable, SolveError> {
    ConflictTable::new(g, dm)
}

/// Result of an exact solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpResult {
    pub value: usize,
    /// Lexicographically least maximum general position set.
    pub witness: Vec<Vertex>,
    pub optimal: bool,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    pub search_cap: usize,
    pub allow_over_cap: bool,
    pub seed: u64,
    pub greedy_passes: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            search_cap: DEFAULT_SEARCH_CAP,
            allow_over_cap: false,
            seed: DEFAULT_SEED,
            greedy_passes: 32,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Solver {
    config: SolverConfig,
}

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        Solver { config }
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    /// Exact gp-number. A certificate, when given, seeds the incumbent with
    /// the fan construction around a maximum-degree vertex.
    pub fn solve(&self, g: &Graph, cert: Option<&MopCertificate>) -> Result<GpResult, SolveError> {
        let n = g.order();
        if n > MAX_SOLVER_ORDER {
            return Err(SolveError::TooLarge(n));
        }
        if n > self.config.search_cap && !self.config.allow_over_cap {
            return Err(SolveError::SearchCapExceeded {
                order: n,
                cap: self.config.search_cap,
            });
        }
        let dm = DistanceMatrix::new(g).expect("order within dense limit");
        let table = ConflictTable::new(g, &dm)?;
        let incumbent = match cert {
            Some(c) => mop_greedy_lower_bound(g, c)?.1,
            None => randomized_greedy(&table, self.config.seed, self.config.greedy_passes),
        };
        debug_assert!(table.is_gp(&incumbent));
        Ok(branch_and_bound(&table, incumbent.len()))
    }
}

/// Exact gp-number with the default configuration.
pub fn gp_number(g: &Graph) -> Result<GpResult, SolveError> {
    Solver::default().solve(g, None)
}

/// Exact gp-number of an MOP, using its certificate for the incumbent.
pub fn gp_number_mop(g: &Graph, cert: &MopCertificate) -> Result<GpResult, SolveError> {
    Solver::default().solve(g, Some(cert))
}

/// Best of several greedy passes over shuffled vertex orders.
pub fn randomized_greedy(table: &ConflictTable, seed: u64, passes: usize) -> Vec<Vertex> {
    let n = table.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    let mut best: Vec<Vertex> = Vec::new();
    for pass in 0..passes.max(1) {
        if pass > 0 {
            order.shuffle(&mut rng);
        }
        let mut chosen: Vec<Vertex> = Vec::new();
        let mut mask = 0u64;
        for &v in &order {
            if chosen.iter().all(|&u| table.completing(u, v) & mask == 0) {
                chosen.push(v);
                mask |= 1 << v;
            }
        }
        if chosen.len() > best.len() {
            best = chosen;
        }
    }
    best.sort_unstable();
    best
}

/// Fan construction around the least maximum-degree vertex: along its fan
/// path keep every vertex except each third one. Returns the bound
/// `floor(2(Δ+1)/3)` and a witness of exactly that size.
pub fn mop_greedy_lower_bound(
    g: &Graph,
    cert: &MopCertificate,
) -> Result<(usize, Vec<Vertex>), MopError> {
    cert.validate(g)?;
    let delta = g.max_degree();
    let centre = g
        .vertices()
        .find(|&v| g.degree(v) == delta)
        .expect("graph is non-empty");
    let path = maximal_fan(g, cert, centre)?;
    let mut witness: Vec<Vertex> = path
        .iter()
        .enumerate()
        .filter(|(i, _)| i % 3 != 2)
        .map(|(_, &v)| v)
        .collect();
    witness.sort_unstable();
    let bound = 2 * (delta + 1) / 3;
    debug_assert_eq!(witness.len(), bound);
    Ok((bound, witness))
}

struct Search<'a> {
    table: &'a ConflictTable,
    best_size: usize,
    best: Option<u64>,
    nodes: u64,
    chosen: Vec<Vertex>,
}

/// Searches for sets strictly larger than `incumbent - 1`, so the first
/// maximum set met in include-first order is the lexicographically least.
fn branch_and_bound(table: &ConflictTable, incumbent: usize) -> GpResult {
    let n = table.order();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        table,
        best_size: incumbent.saturating_sub(1),
        best: None,
        nodes: 0,
        chosen: Vec::with_capacity(n),
    };
    search.dfs(0, all);
    let best = search.best.expect("incumbent guarantees a set is found");
    GpResult {
        value: best.count_ones() as usize,
        witness: bits(best).collect(),
        optimal: true,
        nodes_explored: search.nodes,
    }
}

impl Search<'_> {
    fn dfs(&mut self, chosen: u64, mut cand: u64) {
        self.nodes += 1;
        let size = self.chosen.len();
        if size > self.best_size {
            self.best_size = size;
            self.best = Some(chosen);
        }
        while cand != 0 {
            if size + self.upper_bound(chosen, cand) <= self.best_size {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let mut next = cand;
            for &u in &self.chosen {
                next &= !self.table.completing(u, v);
            }
            self.chosen.push(v);
            self.dfs(chosen | 1 << v, next);
            self.chosen.pop();
        }
    }

    /// Candidates minus one per disjoint blocking pair or triple.
    fn upper_bound(&self, chosen: u64, cand: u64) -> usize {
        let t = self.table;
        let mut rem = cand;
        let mut saved = 0;
        if chosen != 0 {
            for a in bits(cand) {
                if rem >> a & 1 == 0 {
                    continue;
                }
                let blocked = self
                    .chosen
                    .iter()
                    .fold(0u64, |m, &c| m | t.completing(a, c));
                let partners = blocked & rem & !(1 << a);
                if partners != 0 {
                    rem &= !(1 << a | 1 << partners.trailing_zeros());
                    saved += 1;
                }
            }
        }
        for a in bits(cand) {
            if rem >> a & 1 == 0 {
                continue;
            }
            let others = rem & !(1 << a);
            for b in bits(others) {
                let c = t.completing(a, b) & others & !(1 << b);
                if c != 0 {
                    let c = c.trailing_zeros();
                    rem &= !(1 << a | 1 << b | 1 << c);
                    saved += 1;
                    break;
                }
            }
        }
        cand.count_ones() as usize - saved
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        edges.extend((2..n).map(|i| (i - 1, i)));
        Graph::new(n, edges).unwrap()
    }

    fn table(g: &Graph) -> ConflictTable {
        ConflictTable::new(g, &DistanceMatrix::new(g).unwrap()).unwrap()
    }

    #[test]
    fn conflict_counts() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(table(&p3).triples(), &[[0, 1, 2]]);
        let k5 = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert!(table(&k5).triples().is_empty());
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = table(&c4);
        assert_eq!(t.triples().len(), 4);
        assert_eq!(t.completing_list(0, 2), vec![1, 3]);
    }

    #[test]
    fn small_values() {
        let k5 = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(gp_number(&k5).unwrap().value, 5);
        let p6 = Graph::new(6, (1..6).map(|i| (i - 1, i))).unwrap();
        let r = gp_number(&p6).unwrap();
        assert_eq!((r.value, r.witness.clone()), (2, vec![0, 1]));
        assert!(r.optimal);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(gp_number(&c4).unwrap().witness, vec![0, 1]);
        let single = Graph::new(1, []).unwrap();
        assert_eq!(gp_number(&single).unwrap().witness, vec![0]);
    }

    #[test]
    fn fan_nine() {
        let g = fan(9);
        let r = gp_number(&g).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.witness, vec![1, 2, 4, 5, 7, 8]);
        let cert = crate::mop::recognize(&g).unwrap();
        let (bound, w) = mop_greedy_lower_bound(&g, &cert).unwrap();
        assert_eq!(bound, 6);
        assert!(table(&g).is_gp(&w));
        assert_eq!(gp_number_mop(&g, &cert).unwrap(), r);
    }

    #[test]
    fn triangle_lower_bound() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let cert = crate::mop::recognize(&k3).unwrap();
        let (bound, w) = mop_greedy_lower_bound(&k3, &cert).unwrap();
        assert_eq!(bound, 2);
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn errors() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(gp_number(&g), Err(SolveError::Disconnected(0, 2)));
        let big = Graph::new(41, (1..41).map(|i| (i - 1, i))).unwrap();
        assert_eq!(
            gp_number(&big),
            Err(SolveError::SearchCapExceeded { order: 41, cap: 40 })
        );
        let over = Solver::new(SolverConfig {
            allow_over_cap: true,
            ..Default::default()
        });
        assert_eq!(over.solve(&big, None).unwrap().value, 2);
        let wrong = crate::mop::recognize(&fan(5)).unwrap();
        assert!(matches!(
            mop_greedy_lower_bound(&fan(6), &wrong),
            Err(MopError::CertificateMismatch(_))
        ));
    }

    #[test]
    fn seed_does_not_change_the_answer() {
        let g = fan(12);
        let a = Solver::new(SolverConfig {
            seed: 1,
            ..Default::default()
        })
        .solve(&g, None)
        .unwrap();
        let b = Solver::new(SolverConfig {
            seed: 99,
            ..Default::default()
        })
        .solve(&g, None)
        .unwrap();
        assert_eq!((a.value, &a.witness), (b.value, &b.witness));
    }
}
