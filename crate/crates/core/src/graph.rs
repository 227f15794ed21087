//! Simple undirected graphs, all-pairs hop distances and geodesic intervals.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Vertices are dense indices `0..order`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge ({u},{v}) has an endpoint outside 0..{order}")]
    EdgeOutOfRange { u: Vertex, v: Vertex, order: usize },
    #[error("vertex {vertex} outside 0..{order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("vertices {0} and {1} are not connected")]
    Disconnected(Vertex, Vertex),
    #[error("order {0} exceeds the dense distance-matrix limit")]
    TooLarge(usize),
}

/// Largest order accepted for dense distance matrices.
pub const MAX_DENSE_ORDER: usize = 10_000;

/// Immutable simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if order == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); order];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::EdgeOutOfRange { u, v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count,
        })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Common neighbours of `u` and `v`, ascending.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Applies `perm` (old id -> new id) to every vertex.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        Graph::new(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabelling a valid graph by a permutation")
    }

    fn bfs(&self, source: Vertex) -> Vec<u16> {
        let mut dist = vec![UNREACHABLE; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Marker stored for pairs in different components.
pub const UNREACHABLE: u16 = u16::MAX;

/// All-pairs hop distances of one graph, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u16>,
}

impl DistanceMatrix {
    /// One BFS per source vertex.
    pub fn new(g: &Graph) -> Result<Self, GraphError> {
        let order = g.order();
        if order > MAX_DENSE_ORDER {
            return Err(GraphError::TooLarge(order));
        }
        let mut dist = Vec::with_capacity(order * order);
        for s in g.vertices() {
            dist.extend(g.bfs(s));
        }
        Ok(DistanceMatrix { order, dist })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Raw entry; [`UNREACHABLE`] for disconnected pairs.
    #[inline]
    pub fn raw(&self, u: Vertex, v: Vertex) -> u16 {
        self.dist[u * self.order + v]
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u16> {
        match self.raw(u, v) {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.dist[..self.order].iter().all(|&d| d != UNREACHABLE)
    }

    /// Eccentricity-style maximum over all pairs; `None` when disconnected.
    pub fn diameter(&self) -> Option<u16> {
        if !self.is_connected() {
            return None;
        }
        self.dist.iter().copied().max()
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v >= self.order {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    fn connected_distance(&self, u: Vertex, v: Vertex) -> Result<u32, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.get(u, v)
            .map(u32::from)
            .ok_or(GraphError::Disconnected(u, v))
    }

    /// All vertices on at least one shortest `u`-`v` path, ascending.
    pub fn interval(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>, GraphError> {
        let duv = self.connected_distance(u, v)?;
        Ok((0..self.order)
            .filter(|&w| {
                let (a, b) = (self.raw(u, w), self.raw(w, v));
                a != UNREACHABLE && b != UNREACHABLE && u32::from(a) + u32::from(b) == duv
            })
            .collect())
    }

    /// True iff `b` lies on some shortest `a`-`c` path.
    pub fn lies_on_geodesic(&self, a: Vertex, b: Vertex, c: Vertex) -> Result<bool, GraphError> {
        let ac = self.connected_distance(a, c)?;
        let ab = self.connected_distance(a, b)?;
        let bc = self.connected_distance(b, c)?;
        Ok(ac == ab + bc)
    }

    /// Unchecked variant for hot loops over a connected graph.
    #[inline]
    pub(crate) fn between(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        u32::from(self.raw(a, c)) == u32::from(self.raw(a, b)) + u32::from(self.raw(b, c))
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DistanceMatrix({})", self.order)?;
        for row in self.dist.chunks(self.order.max(1)) {
            let cells: Vec<String> = row
                .iter()
                .map(|&d| {
                    if d == UNREACHABLE {
                        "-".into()
                    } else {
                        d.to_string()
                    }
                })
                .collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}
