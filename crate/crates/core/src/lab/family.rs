use std::fmt;

use crate::error::{input, Result};
use crate::exact::{FieldSpec, Vector};
use crate::lab::lines::{normalize, ratio};
use crate::lab::table::residues;

/// The family `L(v_1, ..., v_k)` of all lines parallel to one of the `v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineFamily {
    n: usize,
    directions: Vec<Vector>,
}

impl LineFamily {
    /// Rejects zero directions and parallel pairs. An empty family is allowed.
    pub fn new(n: usize, directions: Vec<Vector>) -> Result<LineFamily> {
        if n == 0 {
            return input("dimension must be positive");
        }
        for (i, v) in directions.iter().enumerate() {
            if v.len() != n {
                return input(format!("direction {v} does not have length {n}"));
            }
            if v.is_zero() {
                return input("family directions must be nonzero");
            }
            if let Some(w) = directions[..i].iter().find(|w| w.field() != v.field() || w.is_parallel(v)) {
                return input(format!("directions {w} and {v} are parallel or over different fields"));
            }
        }
        Ok(LineFamily { n, directions })
    }

    /// Like [`LineFamily::new`] but silently drops directions parallel to an earlier one.
    pub fn deduplicated(n: usize, directions: Vec<Vector>) -> Result<LineFamily> {
        let mut kept: Vec<Vector> = Vec::new();
        for v in directions {
            if !v.is_zero() && !kept.iter().any(|w| w.is_parallel(&v)) {
                kept.push(v);
            }
        }
        LineFamily::new(n, kept)
    }

    /// Integer directions over the rationals.
    pub fn from_i64(n: usize, directions: &[&[i64]]) -> Result<LineFamily> {
        LineFamily::new(n, directions.iter().map(|d| Vector::from_i64(FieldSpec::RATIONAL, d)).collect())
    }

    /// `L(e_1, ..., e_n)`.
    pub fn axes(field: FieldSpec, n: usize) -> LineFamily {
        LineFamily {
            n,
            directions: (0..n).map(|i| Vector::unit(field, n, i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn directions(&self) -> &[Vector] {
        &self.directions
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    /// Directions reduced mod `p`; they must stay nonzero and pairwise non-parallel.
    pub fn residues(&self, p: u32) -> Result<Vec<Vec<u32>>> {
        let field = FieldSpec::prime(p as u64)?;
        let mut out: Vec<Vec<u32>> = Vec::with_capacity(self.len());
        for v in &self.directions {
            let r = residues(&v.reduce_into(field)?)?;
            if r.iter().all(|&x| x == 0) {
                return input(format!("direction {v} vanishes mod {p}"));
            }
            if out.iter().any(|w| ratio(w, &normalize(&r, p), p).is_some()) {
                return input(format!("direction {v} becomes parallel to another mod {p}"));
            }
            out.push(r);
        }
        Ok(out)
    }
}

impl fmt::Display for LineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.directions.iter().map(|d| d.to_string()).collect();
        write!(f, "L({})", parts.join(", "))
    }
}

/// `{e_i} ∪ {e_i + e_j : i < j} ∪ {e_1 + ... + e_n}` over the rationals, duplicates collapsed.
pub fn s_family(n: usize) -> Result<LineFamily> {
    if n < 2 {
        return input("the S family needs n >= 2");
    }
    let q = FieldSpec::RATIONAL;
    let mut dirs: Vec<Vector> = (0..n).map(|i| Vector::unit(q, n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            dirs.push(Vector::unit(q, n, i).add(&Vector::unit(q, n, j))?);
        }
    }
    dirs.push(Vector::ones(q, n));
    LineFamily::deduplicated(n, dirs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(LineFamily::from_i64(2, &[&[1, 0], &[2, 0]]).is_err());
        assert!(LineFamily::from_i64(2, &[&[0, 0]]).is_err());
        assert!(LineFamily::from_i64(2, &[&[1, 0, 0]]).is_err());
        assert!(LineFamily::from_i64(2, &[]).unwrap().is_empty());
        let fam = LineFamily::from_i64(2, &[&[1, 2], &[1, -3]]).unwrap();
        assert!(fam.residues(5).is_err());
        assert_eq!(fam.residues(7).unwrap(), vec![vec![1, 2], vec![1, 4]]);
    }

    #[test]
    fn s_family_sizes() {
        let s2 = s_family(2).unwrap();
        assert_eq!(s2.len(), 3);
        assert_eq!(s2.directions()[2], Vector::from_i64(FieldSpec::RATIONAL, &[1, 1]));
        assert_eq!(s_family(3).unwrap().len(), 7);
        assert_eq!(s_family(4).unwrap().len(), 11);
        assert!(s_family(1).is_err());
    }
}
