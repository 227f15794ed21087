//! Deciding whether a vertex set is in general position.
//!
//! Two independent routes are provided. [`is_gp_naive`] tests every ordered
//! triple directly. [`is_gp_characterized`] uses the structural description:
//! the components of the induced subgraph must be cliques whose blocks sit
//! at constant pairwise distance, and no block distance may be the sum of
//! two others through a third block.

use crate::graph::{DistanceMatrix, Graph, GraphError, Vertex};

/// Outcome of a general-position test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpSetCheck {
    /// The tested set, sorted and deduplicated.
    pub set: Vec<Vertex>,
    pub is_gp: bool,
    /// `(a, b, c)` with `b` on a shortest `a`-`c` path.
    pub violation: Option<(Vertex, Vertex, Vertex)>,
    /// Clique blocks, present only for a positive structural verdict.
    pub clique_partition: Option<Vec<Vec<Vertex>>>,
}

impl GpSetCheck {
    fn yes(set: Vec<Vertex>, partition: Option<Vec<Vec<Vertex>>>) -> Self {
        GpSetCheck {
            set,
            is_gp: true,
            violation: None,
            clique_partition: partition,
        }
    }

    fn no(set: Vec<Vertex>, violation: (Vertex, Vertex, Vertex)) -> Self {
        GpSetCheck {
            set,
            is_gp: false,
            violation: Some(violation),
            clique_partition: None,
        }
    }
}

fn prepare(g: &Graph, dm: &DistanceMatrix, s: &[Vertex]) -> Result<Vec<Vertex>, GraphError> {
    let order = g.order();
    if let Some(&vertex) = s.iter().find(|&&v| v >= order) {
        return Err(GraphError::VertexOutOfRange { vertex, order });
    }
    if let Some(v) = (1..order).find(|&v| dm.get(0, v).is_none()) {
        return Err(GraphError::Disconnected(0, v));
    }
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

/// Triple test. On failure reports the lexicographically smallest `(a, b, c)`
/// with `b` the middle vertex.
pub fn is_gp_naive(g: &Graph, dm: &DistanceMatrix, s: &[Vertex]) -> Result<GpSetCheck, GraphError> {
    let set = prepare(g, dm, s)?;
    for &a in &set {
        for &b in &set {
            if b == a {
                continue;
            }
            for &c in &set {
                if c != a && c != b && dm.between(a, b, c) {
                    return Ok(GpSetCheck::no(set, (a, b, c)));
                }
            }
        }
    }
    Ok(GpSetCheck::yes(set, None))
}

/// Structural test via clique components, distance-constant blocks and
/// in-transitivity.
pub fn is_gp_characterized(
    g: &Graph,
    dm: &DistanceMatrix,
    s: &[Vertex],
) -> Result<GpSetCheck, GraphError> {
    let set = prepare(g, dm, s)?;
    let blocks = induced_components(g, &set);

    for block in &blocks {
        if let Some(v) = non_clique_witness(g, block) {
            return Ok(GpSetCheck::no(set, v));
        }
    }

    // block distances; every cross pair must agree
    let k = blocks.len();
    let mut block_dist = vec![0u32; k * k];
    for p in 0..k {
        for q in p + 1..k {
            if let Some(v) = non_constant_witness(dm, &blocks[p], &blocks[q]) {
                return Ok(GpSetCheck::no(set, v));
            }
            let d = u32::from(dm.raw(blocks[p][0], blocks[q][0]));
            block_dist[p * k + q] = d;
            block_dist[q * k + p] = d;
        }
    }

    for p in 0..k {
        for q in 0..k {
            for r in 0..k {
                if p == q || q == r || p == r {
                    continue;
                }
                if block_dist[p * k + r] == block_dist[p * k + q] + block_dist[q * k + r] {
                    let v = (blocks[p][0], blocks[q][0], blocks[r][0]);
                    return Ok(GpSetCheck::no(set, v));
                }
            }
        }
    }

    Ok(GpSetCheck::yes(set, Some(blocks)))
}

/// Connected components of `G[set]`, each sorted, ordered by least member.
fn induced_components(g: &Graph, set: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut comp = vec![usize::MAX; set.len()];
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    for start in 0..set.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        comp[start] = id;
        let mut stack = vec![start];
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(set[i]);
            for (j, &w) in set.iter().enumerate() {
                if comp[j] == usize::MAX && g.has_edge(set[i], w) {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        blocks.push(members);
    }
    blocks
}

/// In a connected non-complete block some `x`, `z` are non-adjacent with a
/// common neighbour `y` in the block, so `y` lies between them.
fn non_clique_witness(g: &Graph, block: &[Vertex]) -> Option<(Vertex, Vertex, Vertex)> {
    for (i, &x) in block.iter().enumerate() {
        for &z in &block[i + 1..] {
            if g.has_edge(x, z) {
                continue;
            }
            if let Some(&y) = block
                .iter()
                .find(|&&y| g.has_edge(x, y) && g.has_edge(y, z))
            {
                return Some((x, y, z));
            }
        }
    }
    // no distance-2 pair inside the block means no non-adjacent pair at all
    debug_assert!(block
        .iter()
        .enumerate()
        .all(|(i, &x)| block[i + 1..].iter().all(|&z| g.has_edge(x, z))));
    None
}

/// If some `p` sees two members `q`, `q'` of a clique at different distances,
/// the nearer one lies on a geodesic from `p` to the farther one.
fn non_constant_witness(
    dm: &DistanceMatrix,
    p_block: &[Vertex],
    q_block: &[Vertex],
) -> Option<(Vertex, Vertex, Vertex)> {
    let check = |from: &[Vertex], to: &[Vertex]| {
        for &p in from {
            let nearest = *to.iter().min_by_key(|&&q| dm.raw(p, q)).unwrap();
            if let Some(&far) = to.iter().find(|&&q| dm.raw(p, q) != dm.raw(p, nearest)) {
                return Some((p, nearest, far));
            }
        }
        None
    };
    check(p_block, q_block).or_else(|| check(q_block, p_block))
}
