//! Ground truth from first principles, without any ideal.
//!
//! Two independent routes are provided:
//! - enumeration of every completion of the partial function table (the model space),
//!   collecting supports and signed supports and keeping the inclusion-minimal ones;
//! - a direct feasibility test per candidate variable set: a function depending only on
//!   `Y` fits iff no two observations agree on `Y` with different outputs, and a unate one
//!   with signs `W` fits iff the observations are order-preserving for the product order
//!   that `W` induces (the pointwise-max extension then witnesses feasibility).
//!
//! The second route reaches grids where the model space is far too large to list.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::datamodel::{minimal_sets, DataSet, FieldSpec, Literal, LiteralSet, Point};
use crate::error::{Error, Result};

/// Default bound on the number of completions the enumeration route may visit.
pub const COMPLETION_CAP: u128 = 1 << 24;
/// Largest `n` for the feasibility route (it visits `3^n` signed candidates).
pub const FEASIBILITY_MAX_VARS: usize = 16;

/// A coordinate function given by its full value table, inputs in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionTable {
    spec: FieldSpec,
    values: Vec<u32>,
}

impl FunctionTable {
    pub fn new(spec: FieldSpec, values: Vec<u32>) -> Result<FunctionTable> {
        let size = spec.grid_size().filter(|&s| s <= 1 << 24).ok_or_else(|| {
            Error::Capacity(format!("grid {}^{} is too large for a function table", spec.q, spec.n))
        })?;
        if values.len() as u128 != size {
            return Err(Error::Validation(format!("expected {size} values, got {}", values.len())));
        }
        if let Some(v) = values.iter().find(|&&v| v >= spec.q) {
            return Err(Error::Validation(format!("value {v} is outside 0..{}", spec.q)));
        }
        Ok(FunctionTable { spec, values })
    }

    /// Tabulates `f`; outputs are reduced modulo `q`.
    pub fn from_fn(spec: FieldSpec, f: impl Fn(&[u32]) -> u32) -> Result<FunctionTable> {
        let size = spec.grid_size().filter(|&s| s <= 1 << 24).ok_or_else(|| {
            Error::Capacity(format!("grid {}^{} is too large for a function table", spec.q, spec.n))
        })?;
        let values = (0..size).map(|i| f(spec.point_at(i).coords()) % spec.q).collect();
        Ok(FunctionTable { spec, values })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, p: &Point) -> u32 {
        self.values[self.spec.index_of(p) as usize]
    }

    /// Whether `f` fits every observation.
    pub fn fits(&self, data: &DataSet) -> bool {
        data.rows().all(|(p, t)| self.value(p) == t)
    }
}

/// For each variable: (some step raises the output, some step lowers it).
fn directions(spec: FieldSpec, values: &[u32]) -> Vec<(bool, bool)> {
    let q = spec.q as usize;
    let size = values.len();
    (0..spec.n)
        .map(|i| {
            let stride = q.pow((spec.n - 1 - i) as u32);
            let (mut up, mut down) = (false, false);
            for x in 0..size {
                if (x / stride) % q == q - 1 {
                    continue;
                }
                let (a, b) = (values[x], values[x + stride]);
                up |= a < b;
                down |= a > b;
                if up && down {
                    break;
                }
            }
            (up, down)
        })
        .collect()
}

fn support_of(spec: FieldSpec, values: &[u32]) -> LiteralSet {
    directions(spec, values)
        .iter()
        .enumerate()
        .filter(|(_, &(u, d))| u || d)
        .map(|(i, _)| Literal::plain(i))
        .collect()
}

fn signed_support_of(spec: FieldSpec, values: &[u32]) -> Option<LiteralSet> {
    let mut out = LiteralSet::EMPTY;
    for (i, (up, down)) in directions(spec, values).into_iter().enumerate() {
        match (up, down) {
            (true, true) => return None,
            (true, false) => out.insert(Literal::plain(i)),
            (false, true) => out.insert(Literal::barred(i)),
            (false, false) => {}
        }
    }
    Some(out)
}

/// Variables some unit step along which changes the output.
pub fn support(f: &FunctionTable) -> LiteralSet {
    support_of(f.spec, &f.values)
}

/// Signed support, or `None` when `f` is not unate (some variable both raises and lowers
/// the output somewhere).
pub fn signed_support(f: &FunctionTable) -> Option<LiteralSet> {
    signed_support_of(f.spec, &f.values)
}

/// `|Mod(D)| = q^(q^n - m)`, kept symbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelCount {
    pub base: u32,
    pub exponent: u128,
}

impl ModelCount {
    pub fn exact(&self) -> Option<u128> {
        let exp = u32::try_from(self.exponent).ok()?;
        (self.base as u128).checked_pow(exp)
    }
}

pub fn count_model_space(data: &DataSet) -> ModelCount {
    let spec = data.spec();
    let grid = spec.grid_size().unwrap_or(u128::MAX);
    ModelCount { base: spec.q, exponent: grid - data.len() as u128 }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinSetKind {
    Unsigned,
    Signed,
}

/// Result of walking the whole model space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelSpace {
    pub functions: u128,
    pub unate_functions: u128,
    pub unsigned_minsets: Vec<LiteralSet>,
    pub signed_minsets: Vec<LiteralSet>,
}

/// Enumerates every function that fits the data. Refuses beyond `cap` completions.
pub fn enumerate_model_space(data: &DataSet, cap: u128) -> Result<ModelSpace> {
    let spec = data.spec();
    let count = count_model_space(data);
    let total = count.exact().filter(|&c| c <= cap).ok_or_else(|| {
        Error::Capacity(format!("model space has {}^{} functions, cap is {cap}", count.base, count.exponent))
    })?;
    let size = spec.grid_size().unwrap() as usize;
    let mut values = vec![0u32; size];
    let mut known = vec![false; size];
    for (p, t) in data.rows() {
        let i = spec.index_of(p) as usize;
        values[i] = t;
        known[i] = true;
    }
    let free: Vec<usize> = (0..size).filter(|&i| !known[i]).collect();

    let mut supports = HashSet::new();
    let mut signed = HashSet::new();
    let mut unate = 0u128;
    for _ in 0..total {
        supports.insert(support_of(spec, &values));
        if let Some(s) = signed_support_of(spec, &values) {
            unate += 1;
            signed.insert(s);
        }
        // odometer over the free entries
        for &i in &free {
            values[i] += 1;
            if values[i] < spec.q {
                break;
            }
            values[i] = 0;
        }
    }
    Ok(ModelSpace {
        functions: total,
        unate_functions: unate,
        unsigned_minsets: minimal_sets(supports),
        signed_minsets: minimal_sets(signed),
    })
}

/// Whether some function depending only on the variables of `y` fits the data.
pub fn unsigned_feasible(data: &DataSet, y: LiteralSet) -> bool {
    let vars = y.variables();
    let rows: Vec<_> = data.rows().collect();
    rows.iter().enumerate().all(|(i, (a, ta))| {
        rows[i + 1..]
            .iter()
            .all(|(b, tb)| ta == tb || vars.iter().any(|&k| a.coords()[k] != b.coords()[k]))
    })
}

/// Whether some unate function with signed support inside `w` fits the data.
pub fn signed_feasible(data: &DataSet, w: LiteralSet) -> bool {
    if w.is_conflicted() {
        return false;
    }
    let lits: Vec<Literal> = w.iter().collect();
    let below = |a: &Point, b: &Point| {
        lits.iter().all(|l| {
            let (x, y) = (a.coords()[l.var], b.coords()[l.var]);
            match l.polarity {
                crate::datamodel::Polarity::Plain => x <= y,
                crate::datamodel::Polarity::Barred => x >= y,
            }
        })
    };
    let rows: Vec<_> = data.rows().collect();
    rows.iter().all(|(a, ta)| rows.iter().all(|(b, tb)| ta <= tb || !below(a, b)))
}

/// Inclusion-minimal feasible sets found by testing every candidate set.
pub fn feasible_minsets(data: &DataSet, kind: MinSetKind) -> Result<Vec<LiteralSet>> {
    let n = data.spec().n;
    if n > FEASIBILITY_MAX_VARS {
        return Err(Error::Capacity(format!("feasibility oracle handles at most {FEASIBILITY_MAX_VARS} variables")));
    }
    let mut feasible = Vec::new();
    match kind {
        MinSetKind::Unsigned => {
            for mask in 0u32..(1 << n) {
                let y = LiteralSet::from_vars((0..n).filter(|k| mask >> k & 1 == 1));
                if unsigned_feasible(data, y) {
                    feasible.push(y);
                }
            }
        }
        MinSetKind::Signed => {
            for code in 0..3u64.pow(n as u32) {
                let mut w = LiteralSet::EMPTY;
                let mut c = code;
                for k in 0..n {
                    match c % 3 {
                        1 => w.insert(Literal::plain(k)),
                        2 => w.insert(Literal::barred(k)),
                        _ => {}
                    }
                    c /= 3;
                }
                if signed_feasible(data, w) {
                    feasible.push(w);
                }
            }
        }
    }
    Ok(minimal_sets(feasible))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMethod {
    Enumeration,
    Feasibility,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleAnswer {
    pub minsets: Vec<LiteralSet>,
    pub method: OracleMethod,
}

/// Exact min-sets from first principles. The model space is enumerated when it has at
/// most `cap` functions; otherwise every candidate set is tested for feasibility. For the
/// signed kind an empty answer means no unate function fits.
pub fn oracle_minsets(data: &DataSet, kind: MinSetKind, cap: u128) -> Result<OracleAnswer> {
    match enumerate_model_space(data, cap) {
        Ok(space) => Ok(OracleAnswer {
            minsets: match kind {
                MinSetKind::Unsigned => space.unsigned_minsets,
                MinSetKind::Signed => space.signed_minsets,
            },
            method: OracleMethod::Enumeration,
        }),
        Err(Error::Capacity(_)) => Ok(OracleAnswer { minsets: feasible_minsets(data, kind)?, method: OracleMethod::Feasibility }),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeSign {
    Activator,
    Inhibitor,
    Unsigned,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    /// Zero-based source variable.
    pub from: usize,
    /// Zero-based target coordinate function.
    pub to: usize,
    pub sign: EdgeSign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WiringDiagram {
    pub edges: Vec<Edge>,
    pub warnings: Vec<String>,
}

/// Signed wiring diagram of a system given by one table per coordinate. A coordinate that
/// is not unate contributes unsigned edges and a warning.
pub fn wiring_diagram(tables: &[FunctionTable]) -> Result<WiringDiagram> {
    let mut edges = Vec::new();
    let mut warnings = Vec::new();
    for (j, f) in tables.iter().enumerate() {
        if f.spec() != tables[0].spec() {
            return Err(Error::Validation(format!("coordinate function {} uses a different grid", j + 1)));
        }
        match signed_support(f) {
            Some(s) => edges.extend(s.iter().map(|l| Edge {
                from: l.var,
                to: j,
                sign: match l.polarity {
                    crate::datamodel::Polarity::Plain => EdgeSign::Activator,
                    crate::datamodel::Polarity::Barred => EdgeSign::Inhibitor,
                },
            })),
            None => {
                warnings.push(format!("f{} is not unate; its edges are unsigned", j + 1));
                edges.extend(support(f).iter().map(|l| Edge { from: l.var, to: j, sign: EdgeSign::Unsigned }));
            }
        }
    }
    Ok(WiringDiagram { edges, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> LiteralSet {
        s.parse().unwrap()
    }

    fn sets(list: &[&str]) -> Vec<LiteralSet> {
        let mut v: Vec<LiteralSet> = list.iter().map(|s| set(s)).collect();
        v.sort();
        v
    }

    fn p<const N: usize>(c: [u32; N]) -> Point {
        Point::from(c)
    }

    fn ex1() -> DataSet {
        let spec = FieldSpec::new(2, 3).unwrap();
        DataSet::new(spec, vec![(p([1, 1, 1]), 0), (p([0, 0, 0]), 0), (p([1, 1, 0]), 1)]).unwrap()
    }

    fn no_signed() -> DataSet {
        let spec = FieldSpec::new(3, 3).unwrap();
        DataSet::new(spec, vec![(p([1, 1, 0]), 0), (p([1, 2, 0]), 1), (p([1, 2, 2]), 1), (p([1, 0, 0]), 2)]).unwrap()
    }

    #[test]
    fn supports() {
        let b3 = FieldSpec::new(2, 3).unwrap();
        let f = FunctionTable::from_fn(b3, |x| x[1]).unwrap();
        assert_eq!(support(&f), set("x2"));
        let c = FunctionTable::from_fn(b3, |_| 1).unwrap();
        assert_eq!(support(&c), LiteralSet::EMPTY);
        assert_eq!(signed_support(&c), Some(LiteralSet::EMPTY));
        let and = FunctionTable::from_fn(b3, |x| x[0] & (1 - x[2])).unwrap();
        assert_eq!(support(&and), set("x1 x3"));
        assert_eq!(signed_support(&and), Some(set("x1 !x3")));

        let g_spec = FieldSpec::new(3, 4).unwrap();
        let g = FunctionTable::from_fn(g_spec, |x| x[0].min(2 - x[1]).max(x[3])).unwrap();
        assert_eq!(signed_support(&g), Some(set("x1 !x2 x4")));

        let xor = FunctionTable::from_fn(FieldSpec::new(2, 2).unwrap(), |x| x[0] ^ x[1]).unwrap();
        assert_eq!(signed_support(&xor), None);
        assert_eq!(support(&xor), set("x1 x2"));
    }

    #[test]
    fn model_counts() {
        assert_eq!(count_model_space(&ex1()).exact(), Some(32));
        let spec = FieldSpec::new(4, 3).unwrap();
        let t = DataSet::new(spec, vec![(p([0, 2, 1]), 0), (p([1, 0, 3]), 0), (p([3, 0, 3]), 2), (p([2, 3, 0]), 3)])
            .unwrap();
        assert_eq!(count_model_space(&t), ModelCount { base: 4, exponent: 60 });
        let full = DataSet::new(FieldSpec::new(2, 1).unwrap(), vec![(p([0]), 0), (p([1]), 1)]).unwrap();
        assert_eq!(count_model_space(&full).exact(), Some(1));
    }

    #[test]
    fn ex1_model_space() {
        let space = enumerate_model_space(&ex1(), COMPLETION_CAP).unwrap();
        assert_eq!(space.functions, 32);
        // x1x̄3, x2x̄3, x1x2x̄3, (x1+x2)x̄3, and also x1(x̄2+x̄3), x2(x̄1+x̄3)
        assert_eq!(space.unate_functions, 6);
        assert_eq!(space.signed_minsets, sets(&["x1 !x3", "x2 !x3"]));
        assert_eq!(space.unsigned_minsets, sets(&["x1 x3", "x2 x3"]));
    }

    #[test]
    fn ex1_unate_fits() {
        let d = ex1();
        let b3 = d.spec();
        let fits: Vec<FunctionTable> = [
            |x: &[u32]| x[0] & (1 - x[2]),
            |x: &[u32]| x[1] & (1 - x[2]),
            |x: &[u32]| x[0] & x[1] & (1 - x[2]),
            |x: &[u32]| (x[0] | x[1]) & (1 - x[2]),
            |x: &[u32]| x[0] & ((1 - x[1]) | (1 - x[2])),
            |x: &[u32]| x[1] & ((1 - x[0]) | (1 - x[2])),
        ]
        .into_iter()
        .map(|f| FunctionTable::from_fn(b3, f).unwrap())
        .collect();
        for f in &fits {
            assert!(f.fits(&d));
            assert!(signed_support(f).is_some());
        }
        let mut tables: Vec<_> = fits.iter().map(|f| f.values().to_vec()).collect();
        tables.sort();
        tables.dedup();
        assert_eq!(tables.len(), 6);
        assert_eq!(signed_support(&fits[4]), Some(set("x1 !x2 !x3")));
    }

    #[test]
    fn no_unate_fit() {
        let a = oracle_minsets(&no_signed(), MinSetKind::Signed, COMPLETION_CAP).unwrap();
        assert!(a.minsets.is_empty());
        assert_eq!(a.method, OracleMethod::Feasibility);
        let u = oracle_minsets(&no_signed(), MinSetKind::Unsigned, COMPLETION_CAP).unwrap();
        assert_eq!(u.minsets, sets(&["x2"]));
    }

    #[test]
    fn routes_agree_on_small_data() {
        for d in [ex1(), DataSet::new(FieldSpec::new(3, 2).unwrap(), vec![(p([0, 0]), 0), (p([2, 0]), 0), (p([1, 2]), 2)]).unwrap()] {
            let space = enumerate_model_space(&d, COMPLETION_CAP).unwrap();
            assert_eq!(space.unsigned_minsets, feasible_minsets(&d, MinSetKind::Unsigned).unwrap());
            assert_eq!(space.signed_minsets, feasible_minsets(&d, MinSetKind::Signed).unwrap());
        }
        assert!(matches!(enumerate_model_space(&no_signed(), COMPLETION_CAP), Err(Error::Capacity(_))));
    }

    #[test]
    fn example_network_wiring() {
        let b3 = FieldSpec::new(2, 3).unwrap();
        let f1 = FunctionTable::from_fn(b3, |x| x[1]).unwrap();
        let f2 = FunctionTable::from_fn(b3, |x| x[0] & (1 - x[2])).unwrap();
        let f3 = FunctionTable::from_fn(b3, |x| x[0] | x[2]).unwrap();
        let wd = wiring_diagram(&[f1, f2, f3]).unwrap();
        let e = |from, to, sign| Edge { from, to, sign };
        assert_eq!(
            wd.edges,
            vec![
                e(1, 0, EdgeSign::Activator),
                e(0, 1, EdgeSign::Activator),
                e(2, 1, EdgeSign::Inhibitor),
                e(0, 2, EdgeSign::Activator),
                e(2, 2, EdgeSign::Activator),
            ]
        );
        assert!(wd.warnings.is_empty());

        let constant = FunctionTable::from_fn(b3, |_| 0).unwrap();
        assert!(wiring_diagram(&[constant.clone(), constant.clone(), constant]).unwrap().edges.is_empty());

        let ids: Vec<_> = (0..3).map(|i| FunctionTable::from_fn(b3, move |x| x[i]).unwrap()).collect();
        let wd = wiring_diagram(&ids).unwrap();
        assert_eq!(wd.edges.len(), 3);
        assert!(wd.edges.iter().all(|ed| ed.from == ed.to && ed.sign == EdgeSign::Activator));

        let xor = FunctionTable::from_fn(FieldSpec::new(2, 2).unwrap(), |x| x[0] ^ x[1]).unwrap();
        let wd = wiring_diagram(&[xor.clone(), xor]).unwrap();
        assert_eq!(wd.warnings.len(), 2);
        assert!(wd.edges.iter().all(|ed| ed.sign == EdgeSign::Unsigned));
    }
}
