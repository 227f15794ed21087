//! Maximal outerplanar graphs (MOPs).
//!
//! Recognition works directly from triangle counts: in an MOP every hull edge
//! lies in exactly one triangle and every chord in exactly two, so the hull
//! can be read off and the chords checked for crossings against it.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MopError {
    #[error("an MOP needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("wrong edge count: {found} != 2n-3 = {expected}")]
    WrongEdgeCount { found: usize, expected: usize },
    #[error("edge ({0},{1}) lies in more than two triangles")]
    EdgeInTooManyTriangles(Vertex, Vertex),
    #[error("edges in exactly one triangle do not form a Hamiltonian cycle")]
    HullNotHamiltonian,
    #[error("chords ({0},{1}) and ({2},{3}) cross")]
    CrossingChords(Vertex, Vertex, Vertex, Vertex),
    #[error("certificate does not match the graph: {0}")]
    CertificateMismatch(String),
    #[error("neighbourhood of {0} is not a path")]
    StructureViolation(Vertex),
    #[error("malformed certificate text: {0}")]
    BadCertificateText(String),
}

/// Hamiltonian cycle plus chord set of an MOP.
///
/// The cycle starts at the smallest vertex id and continues towards the
/// smaller of its two cycle neighbours; this orientation is the one
/// segments call clockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MopCertificate {
    cycle: Vec<Vertex>,
    position: Vec<usize>,
    /// `(u, v)` vertex pairs with `u < v`, sorted.
    chords: Vec<(Vertex, Vertex)>,
}

impl MopCertificate {
    /// Builds and normalizes a certificate from a cycle and chords. Checks
    /// the shape (permutation, chord count, no crossings) but not a graph.
    pub fn new(cycle: Vec<Vertex>, chords: Vec<(Vertex, Vertex)>) -> Result<Self, MopError> {
        let n = cycle.len();
        if n < 3 {
            return Err(MopError::TooSmall(n));
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in cycle.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(MopError::BadCertificateText(format!(
                    "cycle is not a permutation of 0..{n}"
                )));
            }
            position[v] = i;
        }
        let cycle = normalize_cycle(&cycle, &position);
        for (i, &v) in cycle.iter().enumerate() {
            position[v] = i;
        }
        let mut chords: Vec<_> = chords
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        chords.sort_unstable();
        chords.dedup();
        if chords.len() != n - 3 {
            return Err(MopError::WrongEdgeCount {
                found: n + chords.len(),
                expected: 2 * n - 3,
            });
        }
        for &(u, v) in &chords {
            if v >= n || u == v || cyclic_gap(position[u], position[v], n) == 1 {
                return Err(MopError::CertificateMismatch(format!(
                    "({u},{v}) is not a chord of the cycle"
                )));
            }
        }
        let cert = MopCertificate {
            cycle,
            position,
            chords,
        };
        cert.check_non_crossing()?;
        Ok(cert)
    }

    /// Convex polygon `0..n` with the given chords, cycle in natural order.
    pub fn polygon(n: usize, chords: &[(Vertex, Vertex)]) -> Result<Self, MopError> {
        MopCertificate::new((0..n).collect(), chords.to_vec())
    }

    pub fn order(&self) -> usize {
        self.cycle.len()
    }

    pub fn cycle(&self) -> &[Vertex] {
        &self.cycle
    }

    pub fn chords(&self) -> &[(Vertex, Vertex)] {
        &self.chords
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    /// Chords as `(min, max)` cycle positions, sorted.
    pub fn chord_positions(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .chords
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.position[u], self.position[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// True iff `u` and `v` are consecutive on the cycle.
    pub fn is_hull_edge(&self, u: Vertex, v: Vertex) -> bool {
        cyclic_gap(self.position[u], self.position[v], self.order()) == 1
    }

    /// The graph this certificate describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let hull = (0..n).map(|i| (self.cycle[i], self.cycle[(i + 1) % n]));
        Graph::new(n, hull.chain(self.chords.iter().copied()))
            .expect("certificate describes a simple graph")
    }

    /// Checks that the cycle edges plus chords are exactly `E(g)`.
    pub fn validate(&self, g: &Graph) -> Result<(), MopError> {
        if g.order() != self.order() {
            return Err(MopError::CertificateMismatch(format!(
                "order {} vs {}",
                g.order(),
                self.order()
            )));
        }
        if self.to_graph() != *g {
            return Err(MopError::CertificateMismatch("edge sets differ".into()));
        }
        Ok(())
    }

    fn check_non_crossing(&self) -> Result<(), MopError> {
        let mut spans: Vec<(usize, usize)> = self.chord_positions();
        spans.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let mut open: Vec<(usize, usize)> = Vec::new();
        for &(i, j) in &spans {
            while open.last().is_some_and(|&(_, e)| e <= i) {
                open.pop();
            }
            if let Some(&(oi, oj)) = open.last() {
                if oj < j {
                    let (a, b) = (self.cycle[oi], self.cycle[oj]);
                    let (c, d) = (self.cycle[i], self.cycle[j]);
                    return Err(MopError::CrossingChords(
                        a.min(b),
                        a.max(b),
                        c.min(d),
                        c.max(d),
                    ));
                }
            }
            open.push((i, j));
        }
        Ok(())
    }

    /// The clockwise arc from `u` to `v`, both ends included.
    pub fn segment(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let n = self.order();
        let (start, end) = (self.position[u], self.position[v]);
        let len = (end + n - start) % n + 1;
        (0..len).map(|k| self.cycle[(start + k) % n]).collect()
    }

    /// Inner triangular faces as sorted vertex triples.
    pub fn triangles(&self) -> Vec<[Vertex; 3]> {
        triangles_of(&self.to_graph())
    }

    /// Dihedral-invariant key: the least sorted chord-position encoding over
    /// all rotations and reflections of the cycle.
    pub fn canonical_key(&self) -> CanonicalKey {
        let n = self.order();
        let base = self.chord_positions();
        let mut best: Option<Vec<(usize, usize)>> = None;
        let mut buf = Vec::with_capacity(base.len());
        for reflect in [false, true] {
            for shift in 0..n {
                buf.clear();
                buf.extend(base.iter().map(|&(a, b)| {
                    let map = |p: usize| {
                        let p = if reflect { (n - p) % n } else { p };
                        (p + shift) % n
                    };
                    let (x, y) = (map(a), map(b));
                    (x.min(y), x.max(y))
                }));
                buf.sort_unstable();
                if best.as_ref().is_none_or(|b| buf < *b) {
                    best = Some(buf.clone());
                }
            }
        }
        let mut bytes = Vec::with_capacity(4 * base.len());
        for (a, b) in best.unwrap_or_default() {
            bytes.extend_from_slice(&(a as u16).to_be_bytes());
            bytes.extend_from_slice(&(b as u16).to_be_bytes());
        }
        CanonicalKey(bytes)
    }
}

fn cyclic_gap(a: usize, b: usize, n: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}

/// Rotates to start at the least vertex and orients towards its smaller neighbour.
fn normalize_cycle(cycle: &[Vertex], position: &[usize]) -> Vec<Vertex> {
    let n = cycle.len();
    let start = position[0];
    let next = cycle[(start + 1) % n];
    let prev = cycle[(start + n - 1) % n];
    if next < prev {
        (0..n).map(|k| cycle[(start + k) % n]).collect()
    } else {
        (0..n).map(|k| cycle[(start + n - k) % n]).collect()
    }
}

impl fmt::Display for MopCertificate {
    /// Two lines: `cycle: v0 v1 ...` and `chords: (a,b) (c,d) ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycle: Vec<String> = self.cycle.iter().map(ToString::to_string).collect();
        let chords: Vec<String> = self
            .chords
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        writeln!(f, "cycle: {}", cycle.join(" "))?;
        writeln!(f, "chords: {}", chords.join(" "))
    }
}

impl FromStr for MopCertificate {
    type Err = MopError;

    fn from_str(s: &str) -> Result<Self, MopError> {
        let bad = |m: &str| MopError::BadCertificateText(m.to_string());
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let cycle_line = lines
            .next()
            .and_then(|l| l.strip_prefix("cycle:"))
            .ok_or_else(|| bad("missing cycle line"))?;
        let chord_line = lines
            .next()
            .and_then(|l| l.strip_prefix("chords:"))
            .ok_or_else(|| bad("missing chords line"))?;
        let cycle = cycle_line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(t)))
            .collect::<Result<Vec<Vertex>, _>>()?;
        let chords = chord_line
            .split_whitespace()
            .map(|t| {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| bad(t))?;
                let (a, b) = inner.split_once(',').ok_or_else(|| bad(t))?;
                Ok((
                    a.parse().map_err(|_| bad(t))?,
                    b.parse().map_err(|_| bad(t))?,
                ))
            })
            .collect::<Result<Vec<_>, MopError>>()?;
        MopCertificate::new(cycle, chords)
    }
}

/// Canonical isomorphism key of an MOP: big-endian `u16` chord-position pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(pub Vec<u8>);

impl CanonicalKey {
    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Recognizes an MOP and returns its certificate, or the first piece of
/// evidence against it.
pub fn recognize(g: &Graph) -> Result<MopCertificate, MopError> {
    let n = g.order();
    if n < 3 {
        return Err(MopError::TooSmall(n));
    }
    if !g.is_connected() {
        return Err(MopError::Disconnected);
    }
    if g.edge_count() != 2 * n - 3 {
        return Err(MopError::WrongEdgeCount {
            found: g.edge_count(),
            expected: 2 * n - 3,
        });
    }

    let mut hull_adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut chords = Vec::new();
    for (u, v) in g.edges() {
        match g.common_neighbors(u, v).len() {
            1 => {
                hull_adj[u].push(v);
                hull_adj[v].push(u);
            }
            0 | 2 => chords.push((u, v)),
            _ => return Err(MopError::EdgeInTooManyTriangles(u, v)),
        }
    }

    if hull_adj.iter().any(|a| a.len() != 2) {
        return Err(MopError::HullNotHamiltonian);
    }
    let mut cycle = Vec::with_capacity(n);
    let (mut prev, mut cur) = (usize::MAX, 0);
    loop {
        cycle.push(cur);
        let next = if hull_adj[cur][0] != prev {
            hull_adj[cur][0]
        } else {
            hull_adj[cur][1]
        };
        prev = cur;
        cur = next;
        if cur == 0 {
            break;
        }
        if cycle.len() > n {
            return Err(MopError::HullNotHamiltonian);
        }
    }
    if cycle.len() != n {
        return Err(MopError::HullNotHamiltonian);
    }
    MopCertificate::new(cycle, chords)
}

/// Triangles of `g` as sorted triples, lexicographically ordered.
pub(crate) fn triangles_of(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for w in g.common_neighbors(u, v) {
            if w > v {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// Face and degree statistics of an MOP.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MopStats {
    pub internal_triangles: usize,
    pub marginal_triangles: usize,
    pub two_vertices: usize,
    pub max_degree: usize,
    pub striped: bool,
    /// Inner triangular faces; always `n - 2`.
    pub inner_faces: usize,
}

impl MopStats {
    /// Inner faces plus the outer face.
    pub fn faces(&self) -> usize {
        self.inner_faces + 1
    }
}

pub fn mop_stats(g: &Graph, cert: &MopCertificate) -> MopStats {
    let mut internal = 0;
    let mut marginal = 0;
    for [a, b, c] in triangles_of(g) {
        if cert.is_hull_edge(a, b) || cert.is_hull_edge(b, c) || cert.is_hull_edge(a, c) {
            marginal += 1;
        } else {
            internal += 1;
        }
    }
    MopStats {
        internal_triangles: internal,
        marginal_triangles: marginal,
        two_vertices: g.vertices().filter(|&v| g.degree(v) == 2).count(),
        max_degree: g.max_degree(),
        striped: internal == 0,
        inner_faces: internal + marginal,
    }
}

/// Neighbours of `v` as the path of its maximal fan, oriented so the first
/// endpoint has the smaller id.
pub fn maximal_fan(g: &Graph, cert: &MopCertificate, v: Vertex) -> Result<Vec<Vertex>, MopError> {
    let n = cert.order();
    let pv = cert.position(v);
    let mut path: Vec<Vertex> = g.neighbors(v).to_vec();
    path.sort_by_key(|&w| (cert.position(w) + n - pv) % n);
    if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(MopError::StructureViolation(v));
    }
    // the neighbourhood must induce exactly this path
    let induced = path
        .iter()
        .enumerate()
        .map(|(i, &a)| path[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
        .sum::<usize>();
    if induced != path.len().saturating_sub(1) {
        return Err(MopError::StructureViolation(v));
    }
    if path.first() > path.last() {
        path.reverse();
    }
    Ok(path)
}

pub fn segment(cert: &MopCertificate, u: Vertex, v: Vertex) -> Vec<Vertex> {
    cert.segment(u, v)
}

pub fn canonical_form(cert: &MopCertificate) -> CanonicalKey {
    cert.canonical_key()
}

pub fn same_mop(a: &MopCertificate, b: &MopCertificate) -> bool {
    a.order() == b.order() && a.canonical_key() == b.canonical_key()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        edges.extend((2..n).map(|i| (i - 1, i)));
        Graph::new(n, edges).unwrap()
    }

    /// v_i ~ v_j iff 0 < |i-j| <= 2, ids 0-based.
    fn slt(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.extend((2..n).map(|i| (i - 2, i)));
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn fans_are_recognized() {
        let cert = recognize(&fan(6)).unwrap();
        assert_eq!(cert.chords().len(), 3);
        assert_eq!(cert.cycle(), &[0, 1, 2, 3, 4, 5]);
        cert.validate(&fan(6)).unwrap();
    }

    #[test]
    fn triangle_has_no_chords() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let cert = recognize(&k3).unwrap();
        assert!(cert.chords().is_empty());
        let s = mop_stats(&k3, &cert);
        assert_eq!(s.inner_faces, 1);
        assert_eq!(s.max_degree, 2);
    }

    #[test]
    fn rejections_name_their_evidence() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            recognize(&k4),
            Err(MopError::WrongEdgeCount {
                found: 6,
                expected: 5
            })
        );
        // three-page book: u=0, v=1, pages 2,3,4
        let book = Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap();
        assert_eq!(
            recognize(&book),
            Err(MopError::EdgeInTooManyTriangles(0, 1))
        );
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(matches!(
            recognize(&c4),
            Err(MopError::WrongEdgeCount { .. })
        ));
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(recognize(&p3).is_err());
        let disc = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(recognize(&disc), Err(MopError::Disconnected));
    }

    #[test]
    fn crossing_chords_rejected() {
        let err = MopCertificate::polygon(6, &[(0, 2), (1, 4), (2, 4)]).unwrap_err();
        assert_eq!(err, MopError::CrossingChords(0, 2, 1, 4));
        assert!(MopCertificate::polygon(5, &[(0, 2), (1, 3)]).is_err());
    }

    #[test]
    fn stats_match_face_identities() {
        let g = fan(9);
        let cert = recognize(&g).unwrap();
        let s = mop_stats(&g, &cert);
        assert_eq!((s.internal_triangles, s.two_vertices), (0, 2));
        assert!(s.striped);
        assert_eq!(s.faces(), 8);
        // hexagon with the central triangle (0,2,4)
        let cert = MopCertificate::polygon(6, &[(0, 2), (2, 4), (0, 4)]).unwrap();
        let g = cert.to_graph();
        let s = mop_stats(&g, &cert);
        assert_eq!(
            (s.internal_triangles, s.marginal_triangles, s.two_vertices),
            (1, 3, 3)
        );
        assert!(!s.striped);
    }

    #[test]
    fn fan_paths() {
        let g = fan(6);
        let cert = recognize(&g).unwrap();
        assert_eq!(maximal_fan(&g, &cert, 0).unwrap(), vec![1, 2, 3, 4, 5]);
        // a 2-vertex sees one edge
        assert_eq!(maximal_fan(&g, &cert, 5).unwrap(), vec![0, 4]);
        let g = slt(8);
        let cert = recognize(&g).unwrap();
        // v4 -> v2 v3 v5 v6, 0-based 3 -> 1 2 4 5
        assert_eq!(maximal_fan(&g, &cert, 3).unwrap(), vec![1, 2, 4, 5]);
    }

    #[test]
    fn segments() {
        let cert = MopCertificate::polygon(5, &[(0, 2), (0, 3)]).unwrap();
        assert_eq!(segment(&cert, 1, 3), vec![1, 2, 3]);
        assert_eq!(segment(&cert, 3, 1), vec![3, 4, 0, 1]);
        for u in 0..5 {
            for v in 0..5 {
                if u == v {
                    continue;
                }
                let mut all = segment(&cert, u, v);
                let back = segment(&cert, v, u);
                all.extend(&back[1..back.len() - 1]);
                all.sort_unstable();
                assert_eq!(all, vec![0, 1, 2, 3, 4]);
            }
        }
    }

    #[test]
    fn canonical_keys() {
        let a = MopCertificate::polygon(4, &[(0, 2)]).unwrap();
        let b = MopCertificate::polygon(4, &[(1, 3)]).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        let pentagons = [
            [(0, 2), (0, 3)],
            [(1, 3), (1, 4)],
            [(2, 4), (0, 2)],
            [(1, 3), (0, 3)],
            [(2, 4), (1, 4)],
        ];
        let keys: Vec<_> = pentagons
            .iter()
            .map(|c| MopCertificate::polygon(5, c).unwrap().canonical_key())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] == w[1]));
        let f6 = recognize(&fan(6)).unwrap();
        let g6 = recognize(&slt(6)).unwrap();
        assert!(!same_mop(&f6, &g6));
        assert!(same_mop(&f6, &f6));
        assert_eq!(f6.canonical_key().0.len(), 4 * 3);
    }

    #[test]
    fn certificate_text_round_trip() {
        let cert = recognize(&slt(7)).unwrap();
        let text = cert.to_string();
        assert!(text.starts_with("cycle: 0 1 3 5 6 4 2\nchords: "));
        assert_eq!(text.parse::<MopCertificate>().unwrap(), cert);
        assert!("cycle: 0 1 2\n".parse::<MopCertificate>().is_err());
        assert!("cycle: 0 1 2 3\nchords: (0;2)"
            .parse::<MopCertificate>()
            .is_err());
    }
}
