//! Reports, verdicts and CSV tables.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::LabResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Na,
}

/// How a metric is compared with its threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Below,
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">")]
    Above,
    #[serde(rename = ">=")]
    AtLeast,
    /// Informational; never affects the verdict.
    #[serde(rename = "info")]
    Info,
}

/// One metric compared against one threshold.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub relation: Relation,
    pub threshold: f64,
    pub verdict: Verdict,
}

impl Check {
    pub fn new(name: impl Into<String>, value: f64, relation: Relation, threshold: f64) -> Self {
        let holds = match relation {
            Relation::Below => value < threshold,
            Relation::AtMost => value <= threshold,
            Relation::Above => value > threshold,
            Relation::AtLeast => value >= threshold,
            Relation::Info => true,
        };
        let verdict = match relation {
            Relation::Info => Verdict::Na,
            _ if holds => Verdict::Pass,
            _ => Verdict::Fail,
        };
        Self { name: name.into(), value, relation, threshold, verdict }
    }

    pub fn below(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self::new(name, value, Relation::Below, threshold)
    }

    pub fn above(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self::new(name, value, Relation::Above, threshold)
    }

    pub fn at_most(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self::new(name, value, Relation::AtMost, threshold)
    }

    pub fn at_least(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self::new(name, value, Relation::AtLeast, threshold)
    }

    pub fn info(name: impl Into<String>, value: f64) -> Self {
        Self::new(name, value, Relation::Info, f64::NAN)
    }

    /// Informational comparison against a reference level.
    pub fn reference(name: impl Into<String>, value: f64, level: f64) -> Self {
        Self::new(name, value, Relation::Info, level)
    }

    /// A yes/no condition, recorded as `1 >= 1` or `0 >= 1`.
    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Self::new(name, if ok { 1.0 } else { 0.0 }, Relation::AtLeast, 1.0)
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:.16e}"),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

/// A metric table, written as `<name>.csv`.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Self { name: name.into(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> LabResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub config: ExperimentConfig,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    /// Threshold of every check that takes part in the verdict.
    pub tolerances: BTreeMap<String, f64>,
    pub notes: Vec<String>,
    pub wall_time_s: f64,
    #[serde(skip)]
    pub tables: Vec<Table>,
}

impl ExperimentReport {
    /// Pass when every non-informational check holds; `na` if there are none.
    pub fn new(config: &ExperimentConfig, checks: Vec<Check>, tables: Vec<Table>, notes: Vec<String>) -> Self {
        let verdict = verdict_of(&checks);
        let tolerances = checks
            .iter()
            .filter(|c| c.relation != Relation::Info)
            .map(|c| (c.name.clone(), c.threshold))
            .collect();
        Self {
            experiment: config.experiment.name().to_string(),
            config: config.clone(),
            verdict,
            checks,
            tolerances,
            notes,
            wall_time_s: 0.0,
            tables,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    /// Writes `report.json` and one CSV per table into `dir`.
    pub fn write(&self, dir: &Path) -> LabResult<()> {
        fs::create_dir_all(dir)?;
        for t in &self.tables {
            fs::write(dir.join(format!("{}.csv", t.name)), t.to_csv()?)?;
        }
        fs::write(dir.join("report.json"), serde_json::to_string_pretty(self)?)?;
        Ok(())
    }
}

pub fn verdict_of(checks: &[Check]) -> Verdict {
    let scored: Vec<_> = checks.iter().filter(|c| c.verdict != Verdict::Na).collect();
    if scored.is_empty() {
        Verdict::Na
    } else if scored.iter().all(|c| c.verdict == Verdict::Pass) {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        assert_eq!(Check::below("a", 1.0, 2.0).verdict, Verdict::Pass);
        assert_eq!(Check::below("a", 2.0, 2.0).verdict, Verdict::Fail);
        assert_eq!(Check::at_most("a", 2.0, 2.0).verdict, Verdict::Pass);
        assert_eq!(Check::above("a", f64::NAN, 0.0).verdict, Verdict::Fail);
        assert_eq!(Check::info("a", 5.0).verdict, Verdict::Na);
    }

    #[test]
    fn overall_verdict() {
        assert_eq!(verdict_of(&[Check::info("a", 1.0)]), Verdict::Na);
        assert_eq!(verdict_of(&[Check::info("a", 1.0), Check::holds("b", true)]), Verdict::Pass);
        assert_eq!(verdict_of(&[Check::holds("b", true), Check::holds("c", false)]), Verdict::Fail);
    }

    #[test]
    fn csv_uses_seventeen_digits() {
        let mut t = Table::new("t", &["n", "x"]);
        t.push(vec![3usize.into(), (1.0f64 / 3.0).into()]);
        assert_eq!(t.to_csv().unwrap(), "n,x\n3,3.3333333333333331e-1\n");
    }
}
