//! Exhaustive census of MOPs of small order.
//!
//! Every MOP of order `n` is a triangulation of the convex polygon `0..n`.
//! The census enumerates all of them, optionally keeps one representative per
//! isomorphism class, and records the gp-number and face statistics of each.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::io;

use rayon::prelude::*;
use thiserror::Error;

use crate::families::{self, is_generalized_sunflower, FamilyInstance};
use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::mop::{mop_stats, recognize, CanonicalKey, MopCertificate};
use crate::solve::{mop_greedy_lower_bound, SolveError, Solver, SolverConfig, DEFAULT_SEED};
use crate::verify::{is_gp_characterized, is_gp_naive};

pub const MIN_ORDER: usize = 3;
pub const MAX_ORDER: usize = 14;
pub const MIN_CLAIM_ORDER: usize = 4;
pub const MAX_CLAIM_ORDER: usize = 13;

pub type Chord = (Vertex, Vertex);

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("thread pool: {0}")]
    Pool(String),
}

fn check_order(n: usize) -> Result<(), CensusError> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(CensusError::BadParam(format!(
            "order must be in {MIN_ORDER}..={MAX_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// `shapes[len]`: triangulations of the polygon `0..=len` with base edge
/// `(0, len)`, in enumeration order.
fn shapes(max_len: usize) -> Vec<Vec<Vec<Chord>>> {
    let mut out: Vec<Vec<Vec<Chord>>> = vec![vec![Vec::new()]; 2.min(max_len + 1)];
    for len in 2..=max_len {
        let mut here = Vec::new();
        for k in 1..len {
            for left in &out[k] {
                for right in &out[len - k] {
                    here.push(join(left, right, k, len));
                }
            }
        }
        out.push(here);
    }
    out
}

/// Triangle `(0, k, len)` with `left` below `k` and `right` shifted by `k`.
fn join(left: &[Chord], right: &[Chord], k: usize, len: usize) -> Vec<Chord> {
    let mut chords = left.to_vec();
    if k > 1 {
        chords.push((0, k));
    }
    if len - k > 1 {
        chords.push((k, len));
    }
    chords.extend(right.iter().map(|&(a, b)| (a + k, b + k)));
    chords
}

/// All triangulations of the convex polygon `0..n`, each exactly once:
/// apex of the triangle on `(0, n-1)` ascending, left sub-polygon outermost.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Vec<Chord>>, CensusError> {
    check_order(n)?;
    let table = shapes(n - 1);
    Ok(table.into_iter().nth(n - 1).unwrap_or_default())
}

/// The part of the enumeration whose triangle on `(0, n-1)` has apex `k`.
pub fn triangulations_with_apex(n: usize, k: usize) -> Result<Vec<Vec<Chord>>, CensusError> {
    check_order(n)?;
    if k == 0 || k >= n - 1 {
        return Err(CensusError::BadParam(format!(
            "apex must be in 1..{}, got {k}",
            n - 1
        )));
    }
    let table = shapes(n - 1);
    let mut out = Vec::with_capacity(table[k].len() * table[n - 1 - k].len());
    for left in &table[k] {
        for right in &table[n - 1 - k] {
            out.push(join(left, right, k, n - 1));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub n: usize,
    pub canonical_key: CanonicalKey,
    /// Chords of the labeled polygon, so vertex ids are cycle positions.
    pub chords: Vec<Chord>,
    pub gp: usize,
    pub gp_witness: Vec<Vertex>,
    pub max_degree: usize,
    pub internal_triangles: usize,
    pub two_vertices: usize,
    pub striped: bool,
    pub family_labels: Vec<String>,
    /// Labeled triangulations in the class; 1 without dedupe.
    pub class_size: usize,
}

impl CensusRecord {
    pub fn certificate(&self) -> MopCertificate {
        MopCertificate::polygon(self.n, &self.chords).expect("census chords form a triangulation")
    }

    pub fn graph(&self) -> Graph {
        self.certificate().to_graph()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    pub dedupe: bool,
    /// Worker threads; `None` lets the pool decide. Never affects output.
    pub jobs: Option<usize>,
    pub seed: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            dedupe: false,
            jobs: None,
            seed: DEFAULT_SEED,
        }
    }
}

/// Canonical keys of the fixed-shape family instances at order `n`.
pub struct FamilyIndex {
    labels: HashMap<CanonicalKey, Vec<String>>,
}

impl FamilyIndex {
    pub fn new(n: usize) -> Self {
        let mut labels: HashMap<CanonicalKey, Vec<String>> = HashMap::new();
        for inst in families::mop_catalog(n) {
            let key = instance_key(&inst);
            let entry = labels.entry(key).or_default();
            let label = inst.family.census_label();
            if !entry.contains(&label) {
                entry.push(label);
            }
        }
        FamilyIndex { labels }
    }

    pub fn labels(&self, key: &CanonicalKey, g: &Graph, cert: &MopCertificate) -> Vec<String> {
        let mut out = self.labels.get(key).cloned().unwrap_or_default();
        if is_generalized_sunflower(g, cert) {
            out.push("gsf".into());
        }
        out
    }
}

/// Canonical key of a generated MOP instance.
pub fn instance_key(inst: &FamilyInstance) -> CanonicalKey {
    recognize(&inst.graph)
        .expect("MOP family instance is recognized")
        .canonical_key()
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, CensusError> {
    if jobs == Some(0) {
        return Err(CensusError::BadParam("jobs must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CensusError::Pool(e.to_string()))
}

/// One record per triangulation (or per class with `dedupe`), sorted by
/// canonical key and then chords.
pub fn run_census(n: usize, opts: &CensusOptions) -> Result<Vec<CensusRecord>, CensusError> {
    check_order(n)?;
    let pool = pool(opts.jobs)?;
    let index = FamilyIndex::new(n);
    let solver = Solver::new(SolverConfig {
        seed: opts.seed,
        ..SolverConfig::default()
    });
    pool.install(|| {
        let mut keyed: Vec<(CanonicalKey, Vec<Chord>)> = (1..n - 1)
            .into_par_iter()
            .flat_map_iter(|k| triangulations_with_apex(n, k).expect("order checked"))
            .map(|mut chords| {
                chords.sort_unstable();
                let key = MopCertificate::polygon(n, &chords)
                    .expect("enumerated chords triangulate the polygon")
                    .canonical_key();
                (key, chords)
            })
            .collect();
        keyed.par_sort_unstable();

        let reps: Vec<(CanonicalKey, Vec<Chord>, usize)> = if opts.dedupe {
            let mut reps: Vec<(CanonicalKey, Vec<Chord>, usize)> = Vec::new();
            for (key, chords) in keyed {
                match reps.last_mut() {
                    Some(last) if last.0 == key => last.2 += 1,
                    _ => reps.push((key, chords, 1)),
                }
            }
            reps
        } else {
            keyed.into_iter().map(|(k, c)| (k, c, 1)).collect()
        };

        reps.into_par_iter()
            .map(|(key, chords, class_size)| record(n, key, chords, class_size, &solver, &index))
            .collect()
    })
}

fn record(
    n: usize,
    key: CanonicalKey,
    chords: Vec<Chord>,
    class_size: usize,
    solver: &Solver,
    index: &FamilyIndex,
) -> Result<CensusRecord, CensusError> {
    let cert =
        MopCertificate::polygon(n, &chords).expect("enumerated chords triangulate the polygon");
    let g = cert.to_graph();
    let stats = mop_stats(&g, &cert);
    let gp = solver.solve(&g, Some(&cert))?;
    let family_labels = index.labels(&key, &g, &cert);
    Ok(CensusRecord {
        n,
        canonical_key: key,
        chords,
        gp: gp.value,
        gp_witness: gp.witness,
        max_degree: stats.max_degree,
        internal_triangles: stats.internal_triangles,
        two_vertices: stats.two_vertices,
        striped: stats.striped,
        family_labels,
        class_size,
    })
}

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "canonical_key",
    "gp",
    "max_degree",
    "internal_triangles",
    "two_vertices",
    "striped",
    "families",
    "chords",
    "witness",
];

pub fn write_csv<W: io::Write>(records: &[CensusRecord], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let chords: Vec<String> = r.chords.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        let witness: Vec<String> = r.gp_witness.iter().map(|v| v.to_string()).collect();
        w.write_record([
            r.n.to_string(),
            r.canonical_key.to_hex(),
            r.gp.to_string(),
            r.max_degree.to_string(),
            r.internal_triangles.to_string(),
            r.two_vertices.to_string(),
            r.striped.to_string(),
            r.family_labels.join(";"),
            chords.join(";"),
            witness.join(";"),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// Must hold; any violation fails the report.
    Assertion,
    /// Reported without a verdict.
    Observation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub id: &'static str,
    pub n: usize,
    pub universe: String,
    pub checked: usize,
    /// Canonical keys (hex) of offending classes, or a short description.
    pub violations: Vec<String>,
    pub kind: ClaimKind,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.kind == ClaimKind::Observation || self.violations.is_empty()
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ClaimKind::Assertion => write!(
                f,
                "CLAIM {} n={} checked={} violations={} status={}",
                self.id,
                self.n,
                self.checked,
                self.violations.len(),
                if self.passed() { "pass" } else { "fail" }
            ),
            ClaimKind::Observation => write!(
                f,
                "INFO {} n={} checked={} matches={}",
                self.id,
                self.n,
                self.checked,
                self.violations.len()
            ),
        }
    }
}

/// Per-triangulation checks, one flag per claim.
#[derive(Debug, Clone, Copy, Default)]
struct RecordChecks {
    two_vertex_identity: bool,
    chord_count: bool,
    degree_lower_bound: bool,
    witness_neighbor_cap: bool,
    witness_triangle_free: bool,
    hull_window: bool,
    two_vertex_lower_bound: bool,
    upper_bound: bool,
    hull_neighborhood: bool,
    hull_edge_apex: bool,
}

fn check_record(r: &CensusRecord) -> RecordChecks {
    let n = r.n;
    let cert = r.certificate();
    let g = cert.to_graph();
    let dm = DistanceMatrix::new(&g).expect("MOPs are connected");
    let w = &r.gp_witness;

    let degree_lower_bound = match mop_greedy_lower_bound(&g, &cert) {
        Ok((bound, set)) => {
            let naive = is_gp_naive(&g, &dm, &set).map(|c| c.is_gp).unwrap_or(false);
            let structural = is_gp_characterized(&g, &dm, &set)
                .map(|c| c.is_gp)
                .unwrap_or(false);
            bound == 2 * (r.max_degree + 1) / 3
                && set.len() == bound
                && naive
                && structural
                && r.gp >= bound
        }
        Err(_) => false,
    };

    let hull_neighborhood = g
        .edges()
        .all(|(u, v)| segment_closed(&g, &cert, u, v) && segment_closed(&g, &cert, v, u));
    RecordChecks {
        two_vertex_identity: r.two_vertices == r.internal_triangles + 2,
        chord_count: g.edge_count() == 2 * n - 3
            && recognize(&g)
                .map(|c| c.chords().len() == n - 3)
                .unwrap_or(false),
        degree_lower_bound,
        witness_neighbor_cap: w.len() < 3 || max_inner_degree(&g, w) <= 2,
        witness_triangle_free: w.len() < 4 || !has_triangle(&g, w),
        hull_window: w.len() < 4 || max_window(&cert, w) <= 2,
        two_vertex_lower_bound: r.gp >= r.internal_triangles + 2,
        upper_bound: r.gp <= 2 * n / 3,
        hull_neighborhood,
        hull_edge_apex: (0..n).all(|i| {
            let (u, v) = (cert.cycle()[i], cert.cycle()[(i + 1) % n]);
            !g.common_neighbors(u, v).is_empty()
        }),
    }
}

/// Largest number of set members adjacent to one member.
pub fn max_inner_degree(g: &Graph, set: &[Vertex]) -> usize {
    set.iter()
        .map(|&a| set.iter().filter(|&&b| g.has_edge(a, b)).count())
        .max()
        .unwrap_or(0)
}

pub fn has_triangle(g: &Graph, set: &[Vertex]) -> bool {
    set.iter().enumerate().any(|(i, &a)| {
        set[i + 1..].iter().enumerate().any(|(j, &b)| {
            g.has_edge(a, b)
                && set[i + j + 2..]
                    .iter()
                    .any(|&c| g.has_edge(a, c) && g.has_edge(b, c))
        })
    })
}

/// Largest number of set members among three consecutive cycle vertices.
pub fn max_window(cert: &MopCertificate, set: &[Vertex]) -> usize {
    let n = cert.order();
    let mut member = vec![false; n];
    for &v in set {
        member[v] = true;
    }
    let cyc = cert.cycle();
    (0..n)
        .map(|i| (0..3).filter(|&d| member[cyc[(i + d) % n]]).count())
        .max()
        .unwrap_or(0)
}

/// Interior vertices of the `u`-`v` arc have all neighbours on the arc.
fn segment_closed(g: &Graph, cert: &MopCertificate, u: Vertex, v: Vertex) -> bool {
    let seg = cert.segment(u, v);
    let mut on = vec![false; g.order()];
    for &x in &seg {
        on[x] = true;
    }
    seg[1..seg.len() - 1]
        .iter()
        .all(|&x| g.neighbors(x).iter().all(|&y| on[y]))
}

/// Classes of a labeled census, keyed by canonical key.
pub fn classes(records: &[CensusRecord]) -> BTreeMap<CanonicalKey, &CensusRecord> {
    let mut out = BTreeMap::new();
    for r in records {
        out.entry(r.canonical_key.clone()).or_insert(r);
    }
    out
}

/// Keys of the instances the upper bound is attained by, per the extremal
/// characterization: the fan, plus the quasi-fans and double fans when
/// `n = 1 mod 3`.
pub fn expected_extremal_keys(n: usize) -> BTreeSet<CanonicalKey> {
    let mut out = BTreeSet::new();
    out.insert(instance_key(&families::fan(n).expect("n >= 3")));
    if n % 3 == 1 {
        for inst in families::mop_catalog(n) {
            if matches!(
                inst.family,
                families::Family::QuasiFan { .. } | families::Family::DoubleFan { .. }
            ) {
                out.insert(instance_key(&inst));
            }
        }
    }
    out
}

/// Striped members of the extremal family that can be generated directly:
/// the fan, the first quasi-fan, the left-seam double fans with `j = 1` and
/// the right-seam double fans with `j = t`.
pub fn listed_striped_extremal(n: usize) -> Vec<FamilyInstance> {
    let mut out = vec![families::fan(n).expect("n >= 3")];
    if n >= 6 {
        out.push(families::quasi_fan(1, n).expect("valid"));
        for t in 1..n / 3 {
            out.push(families::double_fan(1, t, n, families::Seam::Left).expect("valid"));
            out.push(families::double_fan(t, t, n, families::Seam::Right).expect("valid"));
        }
    }
    out
}

fn hex_keys<'a>(keys: impl IntoIterator<Item = &'a CanonicalKey>) -> Vec<String> {
    keys.into_iter().map(CanonicalKey::to_hex).collect()
}

/// Runs a labeled census for each order in range and checks every claim on
/// it. Claims are only evaluated at the orders they are stated for.
pub fn verify_paper_claims(
    n_min: usize,
    n_max: usize,
    opts: &CensusOptions,
) -> Result<Vec<ClaimReport>, CensusError> {
    if !(MIN_CLAIM_ORDER <= n_min && n_min <= n_max && n_max <= MAX_CLAIM_ORDER) {
        return Err(CensusError::BadParam(format!(
            "need {MIN_CLAIM_ORDER} <= n_min <= n_max <= {MAX_CLAIM_ORDER}, got {n_min}..{n_max}"
        )));
    }
    let opts = CensusOptions {
        dedupe: false,
        ..*opts
    };
    let mut reports = Vec::new();
    for n in n_min..=n_max {
        let records = run_census(n, &opts)?;
        let checks: Vec<RecordChecks> =
            pool(opts.jobs)?.install(|| records.par_iter().map(check_record).collect());
        reports.extend(claims_for_order(n, &records, &checks, &opts)?);
    }
    Ok(reports)
}

fn claims_for_order(
    n: usize,
    records: &[CensusRecord],
    checks: &[RecordChecks],
    opts: &CensusOptions,
) -> Result<Vec<ClaimReport>, CensusError> {
    let universe = format!("all {} triangulations of the {n}-gon", records.len());
    let per_record = |id: &'static str, flag: fn(&RecordChecks) -> bool| {
        let bad: BTreeSet<&CanonicalKey> = records
            .iter()
            .zip(checks)
            .filter(|(_, c)| !flag(c))
            .map(|(r, _)| &r.canonical_key)
            .collect();
        ClaimReport {
            id,
            n,
            universe: universe.clone(),
            checked: records.len(),
            violations: hex_keys(bad),
            kind: ClaimKind::Assertion,
        }
    };

    let mut out = vec![
        per_record("two-vertex-identity", |c| c.two_vertex_identity),
        per_record("chord-count", |c| c.chord_count),
        per_record("degree-lower-bound", |c| c.degree_lower_bound),
        per_record("witness-neighbor-cap", |c| c.witness_neighbor_cap),
        per_record("witness-triangle-free", |c| c.witness_triangle_free),
        per_record("hull-window", |c| c.hull_window),
        per_record("two-vertex-lower-bound", |c| c.two_vertex_lower_bound),
        per_record("hull-neighborhood", |c| c.hull_neighborhood),
        per_record("hull-edge-apex", |c| c.hull_edge_apex),
    ];
    if n >= 6 {
        out.push(per_record("upper-bound", |c| c.upper_bound));
    }

    let classes = classes(records);
    let class_universe = format!("{} isomorphism classes of order {n}", classes.len());
    let class_report = |id: &'static str, checked: usize, violations: Vec<String>| ClaimReport {
        id,
        n,
        universe: class_universe.clone(),
        checked,
        violations,
        kind: ClaimKind::Assertion,
    };
    let solver = Solver::new(SolverConfig {
        seed: opts.seed,
        ..SolverConfig::default()
    });

    if n >= 5 {
        let fan = families::fan(n).expect("n >= 3");
        let gp = solver.solve(&fan.graph, None)?.value;
        let bad = if gp == 2 * n / 3 {
            vec![]
        } else {
            vec![format!("gp={gp}")]
        };
        out.push(ClaimReport {
            id: "fan-formula",
            n,
            universe: format!("fan of order {n}"),
            checked: 1,
            violations: bad,
            kind: ClaimKind::Assertion,
        });
    }

    if n >= 6 {
        let top = 2 * n / 3;
        let found: BTreeSet<CanonicalKey> = classes
            .iter()
            .filter(|(_, r)| r.gp == top)
            .map(|(k, _)| k.clone())
            .collect();
        let expected = expected_extremal_keys(n);
        let diff: Vec<String> = found
            .symmetric_difference(&expected)
            .map(|k| {
                let side = if found.contains(k) {
                    "unexpected"
                } else {
                    "missing"
                };
                format!("{side}:{}", k.to_hex())
            })
            .collect();
        out.push(class_report("upper-extremal", classes.len(), diff));
    }

    if n >= 7 {
        let slt = instance_key(&families::straight_linear_2tree(n).expect("n >= 3"));
        let bad: Vec<&CanonicalKey> = classes
            .iter()
            .filter(|(k, r)| (r.max_degree == 4) != (**k == slt))
            .map(|(k, _)| k)
            .collect();
        out.push(class_report(
            "max-degree-four",
            classes.len(),
            hex_keys(bad),
        ));
    }

    if n >= 5 {
        let slt = instance_key(&families::straight_linear_2tree(n).expect("n >= 3"));
        let striped: Vec<(&CanonicalKey, &&CensusRecord)> =
            classes.iter().filter(|(_, r)| r.striped).collect();
        let mut bad: Vec<String> = striped
            .iter()
            .filter(|(k, r)| r.gp < 3 || (r.gp == 3) != (**k == slt))
            .map(|(k, _)| k.to_hex())
            .collect();
        if n % 3 == 1 {
            for inst in listed_striped_extremal(n) {
                let key = instance_key(&inst);
                let ok = classes
                    .get(&key)
                    .is_some_and(|r| r.striped && r.gp == 2 * n / 3);
                if !ok {
                    bad.push(format!("{}:{}", inst.family, key.to_hex()));
                }
            }
        }
        out.push(class_report("striped-extremes", striped.len(), bad));
    }

    if n >= 6 {
        let cap = n / 2 - 2;
        let max_k = classes
            .values()
            .map(|r| r.internal_triangles)
            .max()
            .unwrap_or(0);
        let mut bad = Vec::new();
        if max_k != cap {
            bad.push(format!("max_internal={max_k}"));
        }
        let gsf_key = instance_key(&families::generalized_sunflower(n, None).expect("n >= 5"));
        for (k, r) in &classes {
            let cert = r.certificate();
            let is_gsf = is_generalized_sunflower(&cert.to_graph(), &cert);
            if (r.internal_triangles == cap) != is_gsf {
                bad.push(k.to_hex());
            }
        }
        if classes
            .get(&gsf_key)
            .is_none_or(|r| r.internal_triangles != cap)
        {
            bad.push(format!("generator:{}", gsf_key.to_hex()));
        }
        out.push(class_report("internal-triangle-max", classes.len(), bad));
    }

    let gsf_classes: Vec<(&CanonicalKey, &&CensusRecord)> = classes
        .iter()
        .filter(|(_, r)| r.family_labels.iter().any(|l| l == "gsf"))
        .collect();
    if n >= 8 {
        let bad: Vec<&CanonicalKey> = gsf_classes
            .iter()
            .filter(|(_, r)| r.gp != r.internal_triangles + 2)
            .map(|(k, _)| *k)
            .collect();
        out.push(class_report(
            "gsf-lower-equality",
            gsf_classes.len(),
            hex_keys(bad),
        ));
    }
    let others: Vec<&CanonicalKey> = classes
        .iter()
        .filter(|(_, r)| {
            r.gp == r.internal_triangles + 2 && !r.family_labels.iter().any(|l| l == "gsf")
        })
        .map(|(k, _)| k)
        .collect();
    out.push(ClaimReport {
        id: "non-gsf-lower-equality",
        n,
        universe: class_universe.clone(),
        checked: classes.len(),
        violations: hex_keys(others),
        kind: ClaimKind::Observation,
    });

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        assert_eq!(
            enumerate_triangulations(3).unwrap(),
            vec![Vec::<Chord>::new()]
        );
        assert_eq!(
            enumerate_triangulations(4).unwrap(),
            vec![vec![(1, 3)], vec![(0, 2)]]
        );
        assert_eq!(enumerate_triangulations(5).unwrap().len(), 5);
        assert_eq!(enumerate_triangulations(6).unwrap().len(), 14);
        assert!(enumerate_triangulations(2).is_err());
        assert!(enumerate_triangulations(15).is_err());
    }

    #[test]
    fn apex_partition_covers_enumeration() {
        let all = enumerate_triangulations(8).unwrap();
        let parts: Vec<_> = (1..7)
            .flat_map(|k| triangulations_with_apex(8, k).unwrap())
            .collect();
        assert_eq!(all, parts);
        assert!(triangulations_with_apex(8, 7).is_err());
    }

    #[test]
    fn small_censuses() {
        let dedupe = CensusOptions {
            dedupe: true,
            ..CensusOptions::default()
        };
        let five = run_census(5, &dedupe).unwrap();
        assert_eq!(five.len(), 1);
        assert_eq!(five[0].class_size, 5);
        assert!(five[0].family_labels.contains(&"fan".to_string()));

        let six = run_census(6, &dedupe).unwrap();
        assert_eq!(six.len(), 3);
        assert_eq!(six.iter().map(|r| r.class_size).sum::<usize>(), 14);
        let labeled = run_census(6, &CensusOptions::default()).unwrap();
        assert_eq!(labeled.len(), 14);
        assert!(labeled.iter().all(|r| r.gp <= 4));
    }

    #[test]
    fn csv_layout() {
        let records = run_census(
            4,
            &CensusOptions {
                dedupe: true,
                ..CensusOptions::default()
            },
        )
        .unwrap();
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(
            lines.next().unwrap(),
            "4,00000002,3,3,0,2,true,fan;straight_linear_2tree,0-2,0;1;2"
        );
        assert!(lines.next().is_none());
    }

    #[test]
    fn witness_helpers() {
        let fan = families::fan(6).unwrap().graph;
        let cert = recognize(&fan).unwrap();
        assert!(has_triangle(&fan, &[0, 1, 2]));
        assert!(!has_triangle(&fan, &[1, 2, 4, 5]));
        assert_eq!(max_inner_degree(&fan, &[0, 1, 2, 3]), 3);
        assert_eq!(max_window(&cert, &[1, 2, 4, 5]), 2);
        assert_eq!(max_window(&cert, &[0, 1, 5]), 3);
    }

    #[test]
    fn claim_lines() {
        let reports = verify_paper_claims(6, 7, &CensusOptions::default()).unwrap();
        for r in &reports {
            assert!(r.passed(), "{r}");
        }
        let first = reports[0].to_string();
        assert_eq!(
            first,
            "CLAIM two-vertex-identity n=6 checked=14 violations=0 status=pass"
        );
        assert!(verify_paper_claims(3, 5, &CensusOptions::default()).is_err());
        assert!(verify_paper_claims(8, 7, &CensusOptions::default()).is_err());
    }
}
