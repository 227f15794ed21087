//! Generators for the named graph families.
//!
//! Every generator is deterministic and records which vertex plays which
//! role (fan centre, path vertices, petals and so on).

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::mop::{recognize, MopCertificate, MopError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("invalid base triangulation: {0}")]
    Base(#[from] MopError),
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::BadParam(msg.into())
}

/// Which seam edge closes a double fan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Seam {
    /// `p_{3j-2} u_1`
    Left,
    /// `p_{3j} u_last`
    Right,
}

impl Seam {
    pub fn from_variant(variant: u8) -> Result<Self, FamilyError> {
        match variant {
            1 => Ok(Seam::Left),
            2 => Ok(Seam::Right),
            v => Err(bad(format!("double fan variant must be 1 or 2, got {v}"))),
        }
    }

    pub fn variant(self) -> u8 {
        match self {
            Seam::Left => 1,
            Seam::Right => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Fan {
        n: usize,
    },
    QuasiFan {
        i: usize,
        n: usize,
    },
    DoubleFan {
        j: usize,
        t: usize,
        n: usize,
        seam: Seam,
    },
    StraightLinear2Tree {
        n: usize,
    },
    Sunflower {
        m: usize,
    },
    GeneralizedSunflower {
        n: usize,
        base: Vec<(Vertex, Vertex)>,
    },
    Complete {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
}

impl Family {
    /// Short label used in census rows; parameters other than the order only.
    pub fn census_label(&self) -> String {
        match self {
            Family::Fan { .. } => "fan".into(),
            Family::QuasiFan { i, .. } => format!("quasi_fan({i})"),
            Family::DoubleFan { j, t, seam, .. } => format!("g{}({j} {t})", seam.variant()),
            Family::StraightLinear2Tree { .. } => "straight_linear_2tree".into(),
            Family::Sunflower { .. } => "sunflower".into(),
            Family::GeneralizedSunflower { .. } => "gsf".into(),
            Family::Complete { .. } => "complete".into(),
            Family::Path { .. } => "path".into(),
            Family::Cycle { .. } => "cycle".into(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Fan { n } => write!(f, "fan(n={n})"),
            Family::QuasiFan { i, n } => write!(f, "quasi_fan(i={i},n={n})"),
            Family::DoubleFan { j, t, n, seam } => {
                write!(
                    f,
                    "double_fan(j={j},t={t},n={n},variant={})",
                    seam.variant()
                )
            }
            Family::StraightLinear2Tree { n } => write!(f, "straight_linear_2tree(n={n})"),
            Family::Sunflower { m } => write!(f, "sunflower(m={m})"),
            Family::GeneralizedSunflower { n, base } => {
                let chords: Vec<String> = base.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                write!(
                    f,
                    "generalized_sunflower(n={n},base=[{}])",
                    chords.join(" ")
                )
            }
            Family::Complete { n } => write!(f, "complete(n={n})"),
            Family::Path { n } => write!(f, "path(n={n})"),
            Family::Cycle { n } => write!(f, "cycle(n={n})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub value: usize,
    pub note: &'static str,
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: Family,
    pub graph: Graph,
    pub predicted_gp: Option<Prediction>,
    pub predicted_internal_triangles: Option<usize>,
    pub role_map: Vec<(String, Vertex)>,
    /// True for the maximal outerplanar families.
    pub is_mop: bool,
}

impl FamilyInstance {
    pub fn role(&self, name: &str) -> Option<Vertex> {
        self.role_map
            .iter()
            .find(|(r, _)| r == name)
            .map(|&(_, v)| v)
    }

    /// Comment lines for the edge-list header.
    pub fn header(&self) -> Vec<String> {
        let roles: Vec<String> = self
            .role_map
            .iter()
            .map(|(r, v)| format!("{r}={v}"))
            .collect();
        let mut out = vec![
            format!("label: {}", self.family.census_label()),
            format!("params: {}", self.family),
            format!("roles: {}", roles.join(" ")),
        ];
        match &self.predicted_gp {
            Some(p) => out.push(format!("predicted_gp: {} ({})", p.value, p.note)),
            None => out.push("predicted_gp: none".into()),
        }
        out
    }
}

struct Builder {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    roles: Vec<(String, Vertex)>,
}

impl Builder {
    fn new(order: usize) -> Self {
        Builder {
            order,
            edges: Vec::new(),
            roles: Vec::new(),
        }
    }

    fn edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    fn role(&mut self, name: impl Into<String>, v: Vertex) {
        self.roles.push((name.into(), v));
    }

    fn finish(
        self,
        family: Family,
        predicted_gp: Option<Prediction>,
        is_mop: bool,
    ) -> FamilyInstance {
        FamilyInstance {
            family,
            graph: Graph::new(self.order, self.edges).expect("generator produced a simple graph"),
            predicted_gp,
            predicted_internal_triangles: None,
            role_map: self.roles,
            is_mop,
        }
    }
}

fn predict(value: usize, note: &'static str) -> Option<Prediction> {
    Some(Prediction { value, note })
}

/// `{v} + P_{n-1}`: centre 0, path vertices `p_k = k`.
pub fn fan(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 3 {
        return Err(bad(format!("fan needs n >= 3, got {n}")));
    }
    let mut b = Builder::new(n);
    b.role("v", 0);
    for k in 1..n {
        b.role(format!("p{k}"), k);
        b.edge(0, k);
        if k > 1 {
            b.edge(k - 1, k);
        }
    }
    let predicted = match n {
        3 => predict(3, "triangle"),
        4 => None,
        _ => predict(2 * n / 3, "fan formula floor(2n/3)"),
    };
    Ok(b.finish(Family::Fan { n }, predicted, true))
}

/// Fan on `n - 1` vertices plus a vertex `u` on the path edge `p_i p_{i+1}`.
pub fn quasi_fan(i: usize, n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 6 {
        return Err(bad(format!("quasi-fan needs n >= 6, got {n}")));
    }
    if i < 1 || i > n - 3 {
        return Err(bad(format!(
            "quasi-fan index must be in 1..={}, got {i}",
            n - 3
        )));
    }
    let mut b = Builder::new(n);
    b.role("v", 0);
    for k in 1..=n - 2 {
        b.role(format!("p{k}"), k);
        b.edge(0, k);
        if k > 1 {
            b.edge(k - 1, k);
        }
    }
    let u = n - 1;
    b.role("u", u);
    b.edge(u, i);
    b.edge(u, i + 1);
    let predicted = (n % 3 == 1).then_some(Prediction {
        value: 2 * n / 3,
        note: "extremal for the floor(2n/3) bound when n = 1 mod 3",
    });
    Ok(b.finish(Family::QuasiFan { i, n }, predicted, true))
}

/// Two fans `{v} + P_{3t}` and `{u} + P_{n-3t-1}` glued by identifying `u`
/// with `p_{3j-1}`, closed by one seam edge.
pub fn double_fan(j: usize, t: usize, n: usize, seam: Seam) -> Result<FamilyInstance, FamilyError> {
    if n < 6 {
        return Err(bad(format!("double fan needs n >= 6, got {n}")));
    }
    if t < 1 || t + 1 > n / 3 {
        return Err(bad(format!(
            "double fan t must be in 1..={}, got {t}",
            n / 3 - 1
        )));
    }
    if j < 1 || j > t {
        return Err(bad(format!("double fan j must be in 1..={t}, got {j}")));
    }
    let mut b = Builder::new(n);
    b.role("v", 0);
    for k in 1..=3 * t {
        b.role(format!("p{k}"), k);
        b.edge(0, k);
        if k > 1 {
            b.edge(k - 1, k);
        }
    }
    let u = 3 * j - 1;
    b.role("u", u);
    let second = n - 3 * t - 1;
    for k in 1..=second {
        let id = 3 * t + k;
        b.role(format!("u{k}"), id);
        b.edge(u, id);
        if k > 1 {
            b.edge(id - 1, id);
        }
    }
    match seam {
        Seam::Left => b.edge(3 * j - 2, 3 * t + 1),
        Seam::Right => b.edge(3 * j, 3 * t + second),
    }
    let predicted = (n % 3 == 1).then_some(Prediction {
        value: 2 * n / 3,
        note: "extremal for the floor(2n/3) bound when n = 1 mod 3",
    });
    Ok(b.finish(Family::DoubleFan { j, t, n, seam }, predicted, true))
}

/// Vertices `v_1..v_n` (ids `0..n`), adjacent iff their indices differ by 1 or 2.
pub fn straight_linear_2tree(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 3 {
        return Err(bad(format!("straight linear 2-tree needs n >= 3, got {n}")));
    }
    let mut b = Builder::new(n);
    for k in 0..n {
        b.role(format!("v{}", k + 1), k);
        if k >= 1 {
            b.edge(k - 1, k);
        }
        if k >= 2 {
            b.edge(k - 2, k);
        }
    }
    let predicted = match n {
        3 => predict(3, "triangle"),
        4 => None,
        _ => predict(3, "minimum over striped MOPs"),
    };
    Ok(b.finish(Family::StraightLinear2Tree { n }, predicted, true))
}

/// Wheel with hub `v` and rim `v_0..v_{m-1}`, plus petals `u_i ~ v_i, v_{i+1}`.
/// Planar but not outerplanar.
pub fn sunflower(m: usize) -> Result<FamilyInstance, FamilyError> {
    if m < 3 {
        return Err(bad(format!("sunflower needs m >= 3, got {m}")));
    }
    let mut b = Builder::new(2 * m + 1);
    b.role("v", 0);
    for i in 0..m {
        let (vi, vn) = (1 + i, 1 + (i + 1) % m);
        b.role(format!("v{i}"), vi);
        b.edge(0, vi);
        b.edge(vi, vn);
    }
    for i in 0..m {
        let (vi, vn, ui) = (1 + i, 1 + (i + 1) % m, 1 + m + i);
        b.role(format!("u{i}"), ui);
        b.edge(ui, vi);
        b.edge(ui, vn);
    }
    Ok(b.finish(Family::Sunflower { m }, None, false))
}

/// Triangulated `m`-gon `h_0..h_{m-1}` (`m = ceil(n/2)`) with a degree-2 petal
/// `v_i ~ h_i, h_{i+1}` on every base edge, except `h_{m-1} h_0` when `n` is
/// odd. The base defaults to the fan from `h_0`.
pub fn generalized_sunflower(
    n: usize,
    base_chords: Option<&[(Vertex, Vertex)]>,
) -> Result<FamilyInstance, FamilyError> {
    if n < 5 {
        return Err(bad(format!("generalized sunflower needs n >= 5, got {n}")));
    }
    let m = n.div_ceil(2);
    let petals = if n.is_multiple_of(2) { m } else { m - 1 };
    let base: Vec<(Vertex, Vertex)> = match base_chords {
        Some(c) => c.to_vec(),
        None => (2..m - 1).map(|k| (0, k)).collect(),
    };
    let cert = MopCertificate::polygon(m, &base)?;
    let mut b = Builder::new(n);
    for i in 0..m {
        b.role(format!("h{i}"), i);
        b.edge(i, (i + 1) % m);
    }
    for &(x, y) in cert.chords() {
        b.edge(x, y);
    }
    for i in 0..petals {
        let v = m + i;
        b.role(format!("v{i}"), v);
        b.edge(v, i);
        b.edge(v, (i + 1) % m);
    }
    let predicted = match n {
        7 => predict(4, "direct check of the seven-vertex instance"),
        n if n >= 8 => predict(n / 2, "equals internal triangles + 2"),
        _ => None,
    };
    let base = cert.chords().to_vec();
    let mut inst = b.finish(Family::GeneralizedSunflower { n, base }, predicted, true);
    inst.predicted_internal_triangles = Some(n / 2 - 2);
    Ok(inst)
}

pub fn complete(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 1 {
        return Err(bad("complete graph needs n >= 1"));
    }
    let mut b = Builder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.edge(u, v);
        }
    }
    Ok(b.finish(
        Family::Complete { n },
        predict(n, "every set is in general position"),
        n == 3,
    ))
}

pub fn path(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 2 {
        return Err(bad("path needs n >= 2"));
    }
    let mut b = Builder::new(n);
    for k in 1..n {
        b.edge(k - 1, k);
    }
    Ok(b.finish(
        Family::Path { n },
        predict(2, "any three path vertices are collinear"),
        false,
    ))
}

pub fn cycle(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    let mut b = Builder::new(n);
    for k in 0..n {
        b.edge(k, (k + 1) % n);
    }
    let predicted = match n {
        3 => predict(3, "triangle"),
        4 => predict(2, "exhaustive check"),
        _ => None,
    };
    Ok(b.finish(Family::Cycle { n }, predicted, n == 3))
}

/// Structural membership test for the generalized sunflowers, independent of
/// the base triangulation: exactly `floor(n/2)` degree-2 vertices, no two of
/// them consecutive on the cycle, and removing them leaves an MOP in which
/// every cycle edge but at most one (odd `n`) carries a petal.
pub fn is_generalized_sunflower(g: &Graph, cert: &MopCertificate) -> bool {
    let n = g.order();
    if n < 5 || cert.order() != n {
        return false;
    }
    let petal: Vec<bool> = g.vertices().map(|v| g.degree(v) == 2).collect();
    if petal.iter().filter(|&&p| p).count() != n / 2 {
        return false;
    }
    let cyc = cert.cycle();
    if (0..n).any(|i| petal[cyc[i]] && petal[cyc[(i + 1) % n]]) {
        return false;
    }
    let base: Vec<Vertex> = cyc.iter().copied().filter(|&v| !petal[v]).collect();
    let m = base.len();
    let mut bare = 0;
    for i in 0..m {
        let (a, b) = (base[i], base[(i + 1) % m]);
        if !g.has_edge(a, b) {
            return false;
        }
        if cert.is_hull_edge(a, b) {
            bare += 1;
        }
    }
    if bare != n % 2 {
        return false;
    }
    let mut id = vec![usize::MAX; n];
    for (i, &v) in base.iter().enumerate() {
        id[v] = i;
    }
    let edges = g
        .edges()
        .filter(|&(u, v)| !petal[u] && !petal[v])
        .map(|(u, v)| (id[u], id[v]));
    match Graph::new(m, edges) {
        Ok(core) => recognize(&core).is_ok(),
        Err(_) => false,
    }
}

/// All quasi-fan parameters at order `n`.
pub fn quasi_fan_params(n: usize) -> impl Iterator<Item = usize> {
    let top = if n >= 6 { n - 3 } else { 0 };
    1..=top
}

/// All `(j, t)` double-fan parameters at order `n`.
pub fn double_fan_params(n: usize) -> Vec<(usize, usize)> {
    if n < 6 {
        return Vec::new();
    }
    (1..n / 3)
        .flat_map(|t| (1..=t).map(move |j| (j, t)))
        .collect()
}

/// Every generated MOP family instance of order `n` with a fixed shape: fan,
/// quasi-fans, double fans of both seams and the straight linear 2-tree.
/// Generalized sunflowers are excluded since their base is free.
pub fn mop_catalog(n: usize) -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    if n >= 3 {
        out.push(fan(n).unwrap());
        out.push(straight_linear_2tree(n).unwrap());
    }
    for i in quasi_fan_params(n) {
        out.push(quasi_fan(i, n).unwrap());
    }
    for (j, t) in double_fan_params(n) {
        for seam in [Seam::Left, Seam::Right] {
            out.push(double_fan(j, t, n, seam).unwrap());
        }
    }
    out
}
