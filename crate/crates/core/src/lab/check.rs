use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::lab::family::LineFamily;
use crate::lab::lines::{image_shape, lines_in_direction, normalize, ImageShape};
use crate::lab::table::FiniteMapTable;

/// Whether family lines must land inside a line or fill one exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Into,
    Onto,
}

impl FromStr for CheckMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckMode> {
        match s {
            "into" => Ok(CheckMode::Into),
            "onto" => Ok(CheckMode::Onto),
            other => Err(Error::Input(format!("unknown mode {other:?} (expected into or onto)"))),
        }
    }
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Into => "into",
            CheckMode::Onto => "onto",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationReason {
    /// The image is not contained in any line.
    NotALine,
    /// The image lies in a line but misses some of its points.
    NotOnto,
    /// Image lines of one direction are not all parallel.
    NotParallel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Normalized family direction.
    pub direction: Vec<u32>,
    /// Lexicographically smallest point of the offending line.
    pub base: Vec<u32>,
    pub reason: ViolationReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl FamilyReport {
    fn from_violations(violations: Vec<Violation>) -> FamilyReport {
        FamilyReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn check_dims(table: &FiniteMapTable, fam: &LineFamily) -> Result<Vec<Vec<u32>>> {
    if table.n() != fam.n() {
        return input(format!("table has dimension {}, family has {}", table.n(), fam.n()));
    }
    fam.residues(table.p())
}

/// Every line of the family is checked; all violations are listed.
pub fn check_family(table: &FiniteMapTable, fam: &LineFamily, mode: CheckMode) -> Result<FamilyReport> {
    let dirs = check_dims(table, fam)?;
    let (p, grid) = (table.p(), table.grid());
    let mut violations = Vec::new();
    for d in &dirs {
        for line in lines_in_direction(&grid, d)? {
            let image: Vec<&[u32]> = line.indices.iter().map(|&i| table.value(i)).collect();
            let reason = match (image_shape(&image, p), mode) {
                (ImageShape::Line(_), _) | (ImageShape::Inside, CheckMode::Into) => continue,
                (ImageShape::Inside, CheckMode::Onto) => ViolationReason::NotOnto,
                (ImageShape::Scattered, _) => ViolationReason::NotALine,
            };
            violations.push(Violation {
                direction: normalize(d, p),
                base: line.base,
                reason,
            });
        }
    }
    Ok(FamilyReport::from_violations(violations))
}

/// Lines whose image direction differs from that of the first line in the same family direction.
/// Requires an injective table that maps the family onto lines.
pub fn parallelism_violations(table: &FiniteMapTable, fam: &LineFamily) -> Result<Vec<Violation>> {
    let dirs = check_dims(table, fam)?;
    if !table.is_injective() {
        return input("parallelism check needs an injective table");
    }
    let (p, grid) = (table.p(), table.grid());
    let mut violations = Vec::new();
    for d in &dirs {
        let mut expected: Option<Vec<u32>> = None;
        for line in lines_in_direction(&grid, d)? {
            let image: Vec<&[u32]> = line.indices.iter().map(|&i| table.value(i)).collect();
            let ImageShape::Line(dir) = image_shape(&image, p) else {
                return input(format!("line through {:?} is not mapped onto a line", line.base));
            };
            match &expected {
                None => expected = Some(dir),
                Some(e) if *e == dir => {}
                Some(_) => violations.push(Violation {
                    direction: normalize(d, p),
                    base: line.base,
                    reason: ViolationReason::NotParallel,
                }),
            }
        }
    }
    Ok(violations)
}

/// True iff, for each family direction, all its lines have parallel images.
pub fn check_parallelism(table: &FiniteMapTable, fam: &LineFamily) -> Result<bool> {
    Ok(parallelism_violations(table, fam)?.is_empty())
}
