//! Certificates that an input set has a unique min-set for every output assignment.
//!
//! Three lenses are offered:
//! - diagonals: a point far (Hamming distance `l ≥ 2`) from every other input forces some
//!   assignment with at least `l` unsigned min-sets;
//! - cylinders: `V` is cylindrically connected iff every output assignment yields exactly
//!   one unsigned min-set (and, for Boolean `V`, at most one signed min-set);
//! - the Type 1/2/3a/3b classification of the candidate multiset `M_Ω`, where Types 1
//!   and 3a guarantee at most one signed min-set.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::datamodel::{FieldSpec, InputSet, LiteralSet, Monomial, Point};
use crate::decompose::minsets_from;
use crate::error::{Error, Result};
use crate::ideals::candidate_multiset;

/// Default bound on `|V|` for weak-order enumeration (ordered Bell number 545,835 at 8).
pub const DEFAULT_MAX_POINTS: usize = 8;

/// An axis-aligned slice of the grid: coordinates in `fixed` are pinned, the rest vary.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "CylinderRepr", try_from = "CylinderRepr")]
pub struct Cylinder {
    fixed: BTreeMap<usize, u32>,
}

#[derive(Serialize, Deserialize)]
struct CylinderRepr {
    /// One-based coordinate to pinned state.
    fixed: BTreeMap<usize, u32>,
}

impl From<Cylinder> for CylinderRepr {
    fn from(c: Cylinder) -> CylinderRepr {
        CylinderRepr { fixed: c.fixed.into_iter().map(|(i, v)| (i + 1, v)).collect() }
    }
}

impl TryFrom<CylinderRepr> for Cylinder {
    type Error = String;

    fn try_from(r: CylinderRepr) -> std::result::Result<Cylinder, String> {
        if r.fixed.contains_key(&0) {
            return Err("cylinder coordinates are one-based".into());
        }
        Ok(Cylinder { fixed: r.fixed.into_iter().map(|(i, v)| (i - 1, v)).collect() })
    }
}

impl Cylinder {
    /// The whole grid.
    pub fn whole() -> Cylinder {
        Cylinder { fixed: BTreeMap::new() }
    }

    /// Pins zero-based coordinates to states.
    pub fn new(fixed: impl IntoIterator<Item = (usize, u32)>) -> Cylinder {
        Cylinder { fixed: fixed.into_iter().collect() }
    }

    /// Zero-based coordinate to pinned state.
    pub fn fixed(&self) -> &BTreeMap<usize, u32> {
        &self.fixed
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.fixed.iter().all(|(&i, &v)| p.coords().get(i) == Some(&v))
    }
}

impl fmt::Display for Cylinder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fixed.is_empty() {
            return write!(f, "{{s : any}}");
        }
        let parts: Vec<String> = self.fixed.iter().map(|(i, v)| format!("s{}={v}", i + 1)).collect();
        write!(f, "{{s : {}}}", parts.join(", "))
    }
}

/// `C(p, q)`: the coordinates where `p` and `q` agree are pinned.
pub fn cylinder_of(p: &Point, q: &Point) -> Cylinder {
    Cylinder::new(
        p.coords()
            .iter()
            .zip(q.coords())
            .enumerate()
            .filter(|(_, (a, b))| a == b)
            .map(|(i, (&a, _))| (i, a)),
    )
}

/// Connectivity of the graph on `points` with an edge between points at distance one.
pub fn is_connected(points: &[Point]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; points.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut reached = 1;
    while let Some(i) = queue.pop_front() {
        for j in 0..points.len() {
            if !seen[j] && points[i].distance(&points[j]) == 1 {
                seen[j] = true;
                reached += 1;
                queue.push_back(j);
            }
        }
    }
    reached == points.len()
}

/// A cylinder whose intersection with `V` separates two inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityWitness {
    pub cylinder: Cylinder,
    pub from: Point,
    pub to: Point,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CylindricalConnectivity {
    pub connected: bool,
    pub witness: Option<ConnectivityWitness>,
}

fn unit_adjacency(pts: &[Point]) -> Vec<Vec<usize>> {
    (0..pts.len())
        .map(|i| (0..pts.len()).filter(|&j| pts[i].distance(&pts[j]) == 1).collect())
        .collect()
}

/// Whether `C ∩ V` is connected for every cylinder `C`.
///
/// Only the cylinders `C(p, q)` for `p, q ∈ V` are inspected: if `p` and `q` are joined
/// inside `C(p, q) ∩ V` they are joined inside every larger cylinder too. On failure the
/// witness is the separating pair whose cylinder pins the most coordinates.
pub fn is_cylindrically_connected(v: &InputSet) -> CylindricalConnectivity {
    let pts = v.points();
    let adj = unit_adjacency(pts);
    let mut best: Option<(usize, usize, usize)> = None;
    let mut seen = vec![false; pts.len()];
    let mut queue = VecDeque::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let d = pts[i].distance(&pts[j]);
            if d <= 1 {
                continue;
            }
            let pinned = pts[i].dim() - d;
            if best.is_some_and(|(_, _, b)| b >= pinned) {
                continue;
            }
            let inside = |k: usize| {
                pts[k].coords().iter().zip(pts[i].coords()).zip(pts[j].coords()).all(|((c, a), b)| a != b || c == a)
            };
            seen.iter_mut().for_each(|s| *s = false);
            seen[i] = true;
            queue.clear();
            queue.push_back(i);
            while let Some(k) = queue.pop_front() {
                for &l in &adj[k] {
                    if !seen[l] && inside(l) {
                        seen[l] = true;
                        queue.push_back(l);
                    }
                }
            }
            if !seen[j] {
                best = Some((i, j, pinned));
            }
        }
    }
    match best {
        None => CylindricalConnectivity { connected: true, witness: None },
        Some((i, j, _)) => CylindricalConnectivity {
            connected: false,
            witness: Some(ConnectivityWitness {
                cylinder: cylinder_of(&pts[i], &pts[j]),
                from: pts[i].clone(),
                to: pts[j].clone(),
            }),
        },
    }
}

/// Checks every cylinder of the grid, `(q + 1)^n` of them. Used to validate the pairwise
/// reduction on small grids.
pub fn every_cylinder_connected(v: &InputSet) -> bool {
    let spec = v.spec();
    let choices = spec.q + 1;
    let total = (choices as u128).pow(spec.n as u32);
    (0..total).all(|mut code| {
        let mut fixed = Vec::new();
        for i in (0..spec.n).rev() {
            let c = (code % choices as u128) as u32;
            code /= choices as u128;
            if c < spec.q {
                fixed.push((i, c));
            }
        }
        let cyl = Cylinder::new(fixed);
        let members: Vec<Point> = v.points().iter().filter(|p| cyl.contains(p)).cloned().collect();
        is_connected(&members)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagonal {
    /// Largest, over inputs `p`, of the distance from `p` to its nearest other input.
    pub length: usize,
    pub witness: Point,
    /// Every coordinate of the witness is `0` or `q - 1`.
    pub corner: bool,
}

impl Diagonal {
    /// A diagonal in the proper sense needs length at least two.
    pub fn exists(&self) -> bool {
        self.length >= 2
    }
}

/// Diagonal length of `V` with an attaining point; among ties a corner point is preferred.
pub fn diagonal_length(v: &InputSet) -> Result<Diagonal> {
    let pts = v.points();
    if pts.len() < 2 {
        return Err(Error::UndefinedDiagonal);
    }
    let spec = v.spec();
    let nearest = |i: usize| {
        pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| pts[i].distance(q)).min().unwrap()
    };
    let mut best: Option<(usize, usize, bool)> = None;
    for (i, p) in pts.iter().enumerate() {
        let len = nearest(i);
        let corner = spec.is_corner(p);
        let better = match best {
            None => true,
            Some((_, l, c)) => len > l || (len == l && corner && !c),
        };
        if better {
            best = Some((i, len, corner));
        }
    }
    let (i, length, corner) = best.unwrap();
    Ok(Diagonal { length, witness: pts[i].clone(), corner })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputClassKind {
    /// Set partitions: which inputs share an output. Enough for unsigned ideals.
    Partition,
    /// Ordered set partitions: which inputs share an output and how classes are ordered.
    WeakOrder,
}

pub fn bell(m: usize) -> u128 {
    // Bell triangle
    let mut row = vec![1u128];
    for _ in 0..m {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

pub fn ordered_bell(m: usize) -> u128 {
    let mut a = vec![1u128; m + 1];
    for k in 1..=m {
        let mut binom = 1u128;
        let mut total = 0u128;
        for i in 1..=k {
            binom = binom * (k - i + 1) as u128 / i as u128;
            total += binom * a[k - i];
        }
        a[k] = total;
    }
    a[m]
}

/// All output assignments of `m` inputs up to relabeling (partitions) or up to an
/// order-preserving relabeling (weak orders), with at most `max_classes` distinct labels.
/// Labels are `0..classes`.
pub fn output_assignments(m: usize, kind: OutputClassKind, max_classes: usize, cap: usize) -> Result<Vec<Vec<u32>>> {
    if m > cap {
        let count = match kind {
            OutputClassKind::Partition => bell(m),
            OutputClassKind::WeakOrder => ordered_bell(m),
        };
        return Err(Error::Capacity(format!("{m} inputs exceed the enumeration cap of {cap} ({count} assignments)")));
    }
    let mut partitions = Vec::new();
    let mut rgs = vec![0u32; m];
    fn grow(pos: usize, blocks: u32, max: u32, rgs: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, u32)>) {
        if pos == rgs.len() {
            out.push((rgs.clone(), blocks));
            return;
        }
        let limit = if blocks < max { blocks + 1 } else { blocks };
        for b in 0..limit {
            rgs[pos] = b;
            grow(pos + 1, blocks.max(b + 1), max, rgs, out);
        }
    }
    grow(0, 0, max_classes.max(1) as u32, &mut rgs, &mut partitions);
    match kind {
        OutputClassKind::Partition => Ok(partitions.into_iter().map(|(p, _)| p).collect()),
        OutputClassKind::WeakOrder => {
            let mut out = Vec::new();
            for (part, blocks) in partitions {
                let mut labels: Vec<u32> = (0..blocks).collect();
                permute(&mut labels, 0, &mut |perm| {
                    out.push(part.iter().map(|&b| perm[b as usize]).collect());
                });
            }
            Ok(out)
        }
    }
}

fn permute(xs: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
    if k == xs.len() {
        visit(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, visit);
        xs.swap(k, i);
    }
}

/// [`output_assignments`] without a bound on the number of classes.
pub fn enumerate_output_classes(m: usize, kind: OutputClassKind, cap: usize) -> Result<Vec<Vec<u32>>> {
    output_assignments(m, kind, m, cap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum TypeClass {
    /// Every candidate monomial is univariate.
    Type1,
    /// Some multivariate candidate has no univariate candidate dividing it.
    Type2 { monomial: LiteralSet, low: Point, high: Point },
    /// Otherwise, and every output assignment gives a prime `I^ext`.
    Type3a,
    /// Otherwise, and the witnessing assignment gives a non-prime `I^ext`.
    Type3b { assignment: Vec<(Point, u32)> },
}

/// Classifies the candidate multiset of `V`. Types 3a and 3b are told apart by
/// enumerating every weak order of `V` with at most `q` classes.
pub fn classify_type(v: &InputSet, max_points: usize) -> Result<TypeClass> {
    let mo = candidate_multiset(v);
    if mo.monomials().all(|m| m.is_univariate()) {
        return Ok(TypeClass::Type1);
    }
    let univariate = mo.monomials().filter(|m| m.is_univariate()).fold(LiteralSet::EMPTY, |a, m| a.union(m));
    let pts = v.points();
    if let Some(e) = mo.entries.iter().find(|e| e.monomial.degree() > 1 && !e.monomial.intersects(univariate)) {
        return Ok(TypeClass::Type2 {
            monomial: e.monomial,
            low: pts[e.low].clone(),
            high: pts[e.high].clone(),
        });
    }

    let r = pts.len();
    let mut table = vec![Monomial::EMPTY; r * r];
    for e in &mo.entries {
        table[e.low * r + e.high] = e.monomial;
    }
    let classes = (v.spec().q as usize).min(r);
    for t in output_assignments(r, OutputClassKind::WeakOrder, classes, max_points)? {
        if !extended_is_prime(&table, r, &t) {
            return Ok(TypeClass::Type3b { assignment: pts.iter().cloned().zip(t).collect() });
        }
    }
    Ok(TypeClass::Type3a)
}

fn extended_is_prime(table: &[Monomial], r: usize, t: &[u32]) -> bool {
    let mut uni = LiteralSet::EMPTY;
    for i in 0..r {
        for j in 0..r {
            if t[i] < t[j] && table[i * r + j].is_univariate() {
                uni = uni.union(table[i * r + j]);
            }
        }
    }
    (0..r).all(|i| (0..r).all(|j| t[i] >= t[j] || table[i * r + j].degree() <= 1 || table[i * r + j].intersects(uni)))
}

/// Exactly one unsigned min-set for every output assignment.
pub fn unsigned_unique_all_outputs(v: &InputSet) -> bool {
    is_cylindrically_connected(v).connected
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignedVerdict {
    /// Boolean input set: decided by cylindrical connectivity.
    Boolean(bool),
    /// More than two states: no characterization is known. `exhaustive` holds the result
    /// of checking every weak order when `|V|` is within the enumeration cap.
    Unknown { exhaustive: Option<bool> },
}

/// At most one signed min-set for every output assignment.
pub fn signed_unique_all_outputs(v: &InputSet, max_points: usize) -> SignedVerdict {
    if v.spec().q == 2 {
        return SignedVerdict::Boolean(is_cylindrically_connected(v).connected);
    }
    let exhaustive = find_signed_ambiguity(v, max_points).ok().map(|w| w.is_none());
    SignedVerdict::Unknown { exhaustive }
}

/// An output assignment (at most `q` classes) with other than exactly one unsigned
/// min-set, if any.
pub fn find_unsigned_ambiguity(v: &InputSet, max_points: usize) -> Result<Option<Vec<u32>>> {
    let classes = (v.spec().q as usize).min(v.len().max(1));
    for t in output_assignments(v.len(), OutputClassKind::Partition, classes, max_points)? {
        if minsets_from(v.spec().n, v.points(), &t).unsigned_minsets.len() != 1 {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// An output assignment (at most `q` classes) with two or more signed min-sets, if any.
pub fn find_signed_ambiguity(v: &InputSet, max_points: usize) -> Result<Option<Vec<u32>>> {
    let classes = (v.spec().q as usize).min(v.len().max(1));
    for t in output_assignments(v.len(), OutputClassKind::WeakOrder, classes, max_points)? {
        if minsets_from(v.spec().n, v.points(), &t).signed_minsets.len() > 1 {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TypeOutcome {
    Classified { class: TypeClass },
    Skipped { reason: String },
}

/// Everything known about uniqueness of min-sets for an input set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub spec: FieldSpec,
    pub points: usize,
    pub cylindrically_connected: bool,
    pub connectivity_witness: Option<ConnectivityWitness>,
    /// Present when `V` has a diagonal of length at least two.
    pub diagonal: Option<Diagonal>,
    pub type_class: TypeOutcome,
    pub unsigned_unique_for_all_outputs: bool,
    pub signed_at_most_one_for_all_outputs: SignedVerdict,
}

pub fn certify(v: &InputSet, max_points: usize) -> Certificate {
    let conn = is_cylindrically_connected(v);
    let diagonal = diagonal_length(v).ok().filter(Diagonal::exists);
    let type_class = match classify_type(v, max_points) {
        Ok(class) => TypeOutcome::Classified { class },
        Err(e) => TypeOutcome::Skipped { reason: e.to_string() },
    };
    Certificate {
        spec: v.spec(),
        points: v.len(),
        cylindrically_connected: conn.connected,
        connectivity_witness: conn.witness,
        diagonal,
        type_class,
        unsigned_unique_for_all_outputs: conn.connected,
        signed_at_most_one_for_all_outputs: signed_unique_all_outputs(v, max_points),
    }
}
