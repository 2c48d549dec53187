#![allow(dead_code)]

use std::path::PathBuf;

use minset::cli::io::{parse_input, Input};
use minset::uniqueness::{cylinder_of, is_connected, Cylinder};
use minset::{DataSet, FieldSpec, InputSet, LiteralSet, Point};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn data(name: &str) -> DataSet {
    match parse_input(&fixture_path(name), None).unwrap() {
        Input::Data(d) => d,
        Input::Inputs(_) => panic!("{name} has no outputs"),
    }
}

pub fn inputs(name: &str) -> InputSet {
    parse_input(&fixture_path(name), None).unwrap().input_set()
}

pub fn sets(list: &[&str]) -> Vec<LiteralSet> {
    let mut v: Vec<LiteralSet> = list.iter().map(|s| s.parse().unwrap()).collect();
    v.sort();
    v
}

pub fn pt(s: &str) -> Point {
    Point::new(s.bytes().map(|b| (b - b'0') as u32).collect())
}

pub fn labelled(v: &InputSet, outputs: &[u32]) -> DataSet {
    DataSet::new(v.spec(), v.points().iter().cloned().zip(outputs.iter().copied()).collect()).unwrap()
}

/// Every cylinder of the grid, `(q + 1)^n` of them.
pub fn all_cylinders(spec: FieldSpec) -> Vec<Cylinder> {
    let choices = spec.q + 1;
    let total = choices.pow(spec.n as u32);
    (0..total)
        .map(|mut code| {
            let mut fixed = Vec::new();
            for i in 0..spec.n {
                let c = code % choices;
                code /= choices;
                if c < spec.q {
                    fixed.push((i, c));
                }
            }
            Cylinder::new(fixed)
        })
        .collect()
}

/// Condition (2) of the cylinder theorems: inside every cylinder, each proper connected
/// subset of `C ∩ V` extends to a strictly larger connected subset.
pub fn every_connected_subset_extends(v: &InputSet) -> bool {
    all_cylinders(v.spec()).iter().all(|c| {
        let members: Vec<Point> = v.points().iter().filter(|p| c.contains(p)).cloned().collect();
        let k = members.len();
        (1u32..(1 << k) - 1).all(|mask| {
            let s: Vec<Point> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| members[i].clone()).collect();
            !is_connected(&s)
                || (0..k).any(|i| mask >> i & 1 == 0 && s.iter().any(|p| p.distance(&members[i]) == 1))
        })
    })
}

/// Brute-force cylindrical connectivity straight from the definition.
pub fn cylindrically_connected_by_definition(v: &InputSet) -> bool {
    all_cylinders(v.spec()).iter().all(|c| {
        let members: Vec<Point> = v.points().iter().filter(|p| c.contains(p)).cloned().collect();
        is_connected(&members)
    })
}

pub fn pinned(p: &Point, q: &Point) -> usize {
    cylinder_of(p, q).fixed().len()
}

/// All assignments of values `0..classes` to `m` inputs.
pub fn all_assignments(m: usize, classes: u32) -> Vec<Vec<u32>> {
    let total = (classes as usize).pow(m as u32);
    (0..total)
        .map(|mut code| {
            (0..m)
                .map(|_| {
                    let c = (code % classes as usize) as u32;
                    code /= classes as usize;
                    c
                })
                .collect()
        })
        .collect()
}
