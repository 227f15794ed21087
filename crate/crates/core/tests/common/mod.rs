//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's distance, verification or search code.

#![allow(dead_code)]

use std::collections::HashMap;

use mopgp::Graph;
use petgraph::graph::UnGraph;

pub const INF: u32 = u32::MAX / 4;

/// All-pairs distances by Floyd-Warshall.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn is_gp_brute(d: &[Vec<u32>], set: &[usize]) -> bool {
    for &a in set {
        for &b in set {
            for &c in set {
                if a != b && b != c && a != c && d[a][b] + d[b][c] == d[a][c] {
                    return false;
                }
            }
        }
    }
    true
}

/// gp-number by trying all `2^n` subsets.
pub fn brute_gp(g: &Graph) -> usize {
    let n = g.order();
    let d = floyd(g);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_gp_brute(&d, &set) {
            best = size;
        }
    }
    best
}

/// Vertices on some shortest `u`-`v` path, found by walking every path of
/// length `d(u, v)` from `u`.
pub fn brute_interval(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let d = floyd(g);
    let target = d[u][v];
    let mut on = vec![false; g.order()];
    let mut path = vec![u];
    walk(g, v, target, &mut path, &mut on);
    (0..g.order()).filter(|&x| on[x]).collect()
}

fn walk(g: &Graph, v: usize, left: u32, path: &mut Vec<usize>, on: &mut [bool]) {
    let last = *path.last().unwrap();
    if left == 0 {
        if last == v {
            for &x in path.iter() {
                on[x] = true;
            }
        }
        return;
    }
    for &w in g.neighbors(last) {
        if !path.contains(&w) {
            path.push(w);
            walk(g, v, left - 1, path, on);
            path.pop();
        }
    }
}

pub fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Catalan number from the closed form `C(2k, k) / (k + 1)`.
pub fn catalan(k: usize) -> u128 {
    binomial(2 * k as u128, k as u128) / (k as u128 + 1)
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::new_undirected();
    let ids: Vec<_> = g.vertices().map(|_| p.add_node(())).collect();
    for (u, v) in g.edges() {
        p.add_edge(ids[u], ids[v], ());
    }
    p
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && petgraph::algo::is_isomorphic(&to_petgraph(a), &to_petgraph(b))
}

/// Cheap isomorphism invariant used to bucket candidates.
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<(usize, Vec<usize>)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    inv.sort();
    inv
}

/// Isomorphism classes of a list of graphs, first member of each class kept.
pub fn iso_classes(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<usize>> = HashMap::new();
    let mut out: Vec<Graph> = Vec::new();
    for g in graphs {
        let bucket = buckets.entry(invariant(&g)).or_default();
        if bucket.iter().all(|&i| !isomorphic(&out[i], &g)) {
            bucket.push(out.len());
            out.push(g);
        }
    }
    out
}

/// One graph per isomorphism class of connected graphs of order `n`. Every
/// connected graph has a vertex whose removal keeps it connected, so the
/// classes of order `n` arise from those of order `n - 1` plus one vertex.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::new(1, []).unwrap()];
    }
    let smaller = connected_graphs(n - 1);
    let new = n - 1;
    let candidates = smaller.iter().flat_map(|h| {
        (1u32..(1 << new)).map(move |mask| {
            let mut edges: Vec<(usize, usize)> = h.edges().collect();
            edges.extend((0..new).filter(|&v| mask >> v & 1 == 1).map(|v| (v, new)));
            Graph::new(n, edges).unwrap()
        })
    });
    iso_classes(candidates)
}
