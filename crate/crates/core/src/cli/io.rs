//! Reading observation files.
//!
//! JSON: `{"q": 3, "n": 2, "rows": [{"input": [0, 1], "output": 2}, ...]}`.
//! CSV: header `x1,...,xn` with an optional trailing `y` column; the number of states is
//! taken from `--states` or inferred as one more than the largest value seen.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::datamodel::{DataSet, FieldSpec, InputSet, Point};
use crate::error::{Error, Result};

/// A parsed file: labelled rows give a data set, unlabelled rows an input set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Data(DataSet),
    Inputs(InputSet),
}

impl Input {
    pub fn input_set(&self) -> InputSet {
        match self {
            Input::Data(d) => d.input_set(),
            Input::Inputs(v) => v.clone(),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        match self {
            Input::Data(d) => d.spec(),
            Input::Inputs(v) => v.spec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonRow {
    pub input: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonFile {
    pub q: u32,
    pub n: usize,
    pub rows: Vec<JsonRow>,
}

impl From<&DataSet> for JsonFile {
    fn from(d: &DataSet) -> JsonFile {
        JsonFile {
            q: d.spec().q,
            n: d.spec().n,
            rows: d.rows().map(|(p, t)| JsonRow { input: p.coords().to_vec(), output: Some(t) }).collect(),
        }
    }
}

impl From<&InputSet> for JsonFile {
    fn from(v: &InputSet) -> JsonFile {
        JsonFile {
            q: v.spec().q,
            n: v.spec().n,
            rows: v.points().iter().map(|p| JsonRow { input: p.coords().to_vec(), output: None }).collect(),
        }
    }
}

fn assemble(spec: FieldSpec, rows: Vec<(Point, Option<u32>)>) -> Result<Input> {
    let labelled = rows.iter().filter(|(_, t)| t.is_some()).count();
    if labelled == 0 {
        InputSet::new(spec, rows.into_iter().map(|(p, _)| p).collect()).map(Input::Inputs)
    } else if labelled == rows.len() {
        DataSet::new(spec, rows.into_iter().map(|(p, t)| (p, t.unwrap())).collect()).map(Input::Data)
    } else {
        Err(Error::Format("some rows have outputs and others do not".into()))
    }
}

pub fn parse_json(text: &str) -> Result<Input> {
    let file: JsonFile =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), detail: e.to_string() })?;
    let spec = FieldSpec::new(file.q, file.n)?;
    assemble(spec, file.rows.into_iter().map(|r| (Point::new(r.input), r.output)).collect())
}

pub fn parse_csv(text: &str, states: Option<u32>) -> Result<Input> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| Error::Parse { line: 1, detail: e.to_string() })?.clone();
    let mut n = header.len();
    let labelled = header.iter().next_back() == Some("y");
    if labelled {
        n -= 1;
    }
    for (i, name) in header.iter().take(n).enumerate() {
        if name != format!("x{}", i + 1) {
            return Err(Error::Parse { line: 1, detail: format!("expected column x{}, found {name:?}", i + 1) });
        }
    }

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            detail: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let value = |s: &str| {
            s.parse::<u32>().map_err(|_| Error::Parse { line, detail: format!("{s:?} is not a state") })
        };
        let coords = record.iter().take(n).map(value).collect::<Result<Vec<_>>>()?;
        let output = match (labelled, record.get(n)) {
            (true, Some("")) | (true, None) => None,
            (true, Some(s)) => Some(value(s)?),
            (false, _) => None,
        };
        rows.push((Point::new(coords), output));
    }
    let q = match states {
        Some(q) => q,
        None => rows
            .iter()
            .flat_map(|(p, t)| p.coords().iter().copied().chain(*t))
            .max()
            .map_or(2, |m| (m + 1).max(2)),
    };
    assemble(FieldSpec::new(q, n)?, rows)
}

/// Reads a `.csv` file as CSV and anything else as JSON.
pub fn parse_input(path: &Path, states: Option<u32>) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        parse_csv(&text, states)
    } else {
        parse_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_data_and_inputs() {
        let text = r#"{"q":4,"n":3,"rows":[
            {"input":[0,2,1],"output":0},{"input":[1,0,3],"output":0},
            {"input":[3,0,3],"output":2},{"input":[2,3,0],"output":3}]}"#;
        let Input::Data(d) = parse_json(text).unwrap() else { panic!() };
        assert_eq!(d.len(), 4);

        let text = r#"{"q":2,"n":2,"rows":[{"input":[0,1]},{"input":[1,1]}]}"#;
        assert!(matches!(parse_json(text).unwrap(), Input::Inputs(v) if v.len() == 2));
    }

    #[test]
    fn json_errors() {
        let mixed = r#"{"q":2,"n":1,"rows":[{"input":[0],"output":1},{"input":[1]}]}"#;
        assert!(matches!(parse_json(mixed), Err(Error::Format(_))));
        let broken = "{\"q\":2,\n\"n\":1,\n\"rows\":[}";
        assert!(matches!(parse_json(broken), Err(Error::Parse { line: 3, .. })));
        let range = r#"{"q":2,"n":1,"rows":[{"input":[2],"output":1}]}"#;
        assert!(matches!(parse_json(range), Err(Error::Range { row: 1, .. })));
    }

    #[test]
    fn csv_forms() {
        let Input::Inputs(v) = parse_csv("x1,x2,x3\n0,0,0\n1,0,0\n1,0,1\n0,1,1\n", None).unwrap() else { panic!() };
        assert_eq!((v.len(), v.spec()), (4, FieldSpec::new(2, 3).unwrap()));

        let Input::Data(d) = parse_csv("x1,x2,y\n0,2,1\n1,1,0\n", None).unwrap() else { panic!() };
        assert_eq!(d.spec().q, 3);
        let Input::Data(d) = parse_csv("x1,x2,y\n0,1,1\n", Some(5)).unwrap() else { panic!() };
        assert_eq!(d.spec().q, 5);

        assert!(matches!(parse_csv("x1,y\n0,1\n1,\n", None), Err(Error::Format(_))));
        assert!(matches!(parse_csv("x1,x2\n0,a\n", None), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_csv("a,b\n0,1\n", None), Err(Error::Parse { line: 1, .. })));
    }
}
