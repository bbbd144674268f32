use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::exact::{is_prime, FieldSpec, Vector};

/// Default cap on the number of points a tabulation may visit.
pub const DEFAULT_POINT_BUDGET: usize = 1_000_000;

/// The affine space `(Z_p)^n`, with points indexed in mixed-radix lexicographic
/// order (first coordinate most significant).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub p: u32,
    pub n: usize,
}

impl Grid {
    pub fn new(p: u32, n: usize) -> Result<Grid> {
        if p == 2 || !is_prime(p as u64) {
            return input(format!("{p} is not an odd prime"));
        }
        if n == 0 {
            return input("dimension must be positive");
        }
        Ok(Grid { p, n })
    }

    /// `p^n`, or `None` on overflow.
    pub fn checked_size(&self) -> Option<usize> {
        (self.p as usize).checked_pow(self.n as u32)
    }

    pub fn size(&self) -> usize {
        self.checked_size().expect("grid size overflows usize")
    }

    pub fn within_budget(&self, budget: usize) -> Result<usize> {
        match self.checked_size() {
            Some(s) if s <= budget => Ok(s),
            _ => Err(Error::Resource(format!(
                "{}^{} points exceed the budget of {budget}",
                self.p, self.n
            ))),
        }
    }

    pub fn point(&self, mut index: usize) -> Vec<u32> {
        let p = self.p as usize;
        let mut x = vec![0u32; self.n];
        for slot in x.iter_mut().rev() {
            *slot = (index % p) as u32;
            index /= p;
        }
        x
    }

    pub fn index(&self, x: &[u32]) -> usize {
        x.iter().fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    pub fn points(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.size()).map(move |i| self.point(i))
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec::prime(self.p as u64).expect("grid modulus is an odd prime")
    }
}

/// Residues of a vector over `Z_p`.
pub fn residues(v: &Vector) -> Result<Vec<u32>> {
    v.iter()
        .map(|s| {
            s.residue()
                .map(|r| r as u32)
                .ok_or_else(|| Error::Input(format!("{v} is not over a prime field")))
        })
        .collect()
}

/// A map `(Z_p)^n -> (Z_p)^m` given by its full value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMapTable {
    p: u32,
    n: usize,
    m: usize,
    values: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    p: u32,
    n: usize,
    m: usize,
    values: Vec<Vec<u32>>,
}

impl FiniteMapTable {
    /// Validates and wraps a flattened table of `p^n` rows of `m` residues.
    pub fn new(p: u32, n: usize, m: usize, values: Vec<u32>) -> Result<FiniteMapTable> {
        let grid = Grid::new(p, n)?;
        if m == 0 {
            return input("codomain dimension must be positive");
        }
        let expected = grid.checked_size().and_then(|s| s.checked_mul(m));
        if expected != Some(values.len()) {
            return input(format!(
                "table holds {} residues, expected {}^{}*{m}",
                values.len(),
                p,
                n
            ));
        }
        if let Some(v) = values.iter().find(|&&v| v >= p) {
            return input(format!("table entry {v} is not reduced mod {p}"));
        }
        Ok(FiniteMapTable { p, n, m, values })
    }

    /// Tabulates `f` over the whole grid.
    pub fn from_fn(
        p: u32,
        n: usize,
        m: usize,
        budget: usize,
        mut f: impl FnMut(&[u32]) -> Vec<u32>,
    ) -> Result<FiniteMapTable> {
        let grid = Grid::new(p, n)?;
        let size = grid.within_budget(budget)?;
        let mut values = Vec::with_capacity(size * m);
        for i in 0..size {
            let y = f(&grid.point(i));
            if y.len() != m {
                return input(format!("value has length {}, expected {m}", y.len()));
            }
            values.extend(y.into_iter().map(|c| c % p));
        }
        Ok(FiniteMapTable { p, n, m, values })
    }

    pub fn identity(p: u32, n: usize) -> Result<FiniteMapTable> {
        FiniteMapTable::from_fn(p, n, n, DEFAULT_POINT_BUDGET, |x| x.to_vec())
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn grid(&self) -> Grid {
        Grid { p: self.p, n: self.n }
    }

    pub fn len(&self) -> usize {
        self.values.len() / self.m
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, index: usize) -> &[u32] {
        &self.values[index * self.m..(index + 1) * self.m]
    }

    pub fn value_at(&self, x: &[u32]) -> &[u32] {
        self.value(self.grid().index(x))
    }

    pub fn raw_values(&self) -> &[u32] {
        &self.values
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.len());
        (0..self.len()).all(|i| seen.insert(self.value(i)))
    }

    /// Two distinct inputs with the same image, if any.
    pub fn find_collision(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let mut seen = std::collections::HashMap::with_capacity(self.len());
        for i in 0..self.len() {
            if let Some(&j) = seen.get(self.value(i)) {
                let g = self.grid();
                return Some((g.point(j), g.point(i)));
            }
            seen.insert(self.value(i), i);
        }
        None
    }

    /// True iff the table is a bijection of `(Z_p)^n` onto itself.
    pub fn is_bijection(&self) -> bool {
        self.m == self.n && self.is_injective()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let file = TableFile {
            p: self.p,
            n: self.n,
            m: self.m,
            values: (0..self.len()).map(|i| self.value(i).to_vec()).collect(),
        };
        serde_json::to_value(file).expect("table serializes")
    }

    pub fn from_json_str(s: &str) -> Result<FiniteMapTable> {
        let file: TableFile =
            serde_json::from_str(s).map_err(|e| Error::Format(format!("table file: {e}")))?;
        if let Some(row) = file.values.iter().find(|r| r.len() != file.m) {
            return Err(Error::Format(format!("table row {row:?} does not have length {}", file.m)));
        }
        FiniteMapTable::new(file.p, file.n, file.m, file.values.concat())
            .map_err(|e| Error::Format(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_order_is_lexicographic() {
        let g = Grid::new(3, 2).unwrap();
        assert_eq!(g.point(0), vec![0, 0]);
        assert_eq!(g.point(1), vec![0, 1]);
        assert_eq!(g.point(3), vec![1, 0]);
        assert_eq!(g.point(8), vec![2, 2]);
        for i in 0..9 {
            assert_eq!(g.index(&g.point(i)), i);
        }
        assert!(Grid::new(2, 2).is_err());
        assert!(Grid::new(9, 2).is_err());
    }

    #[test]
    fn identity_table_entries_are_points() {
        let t = FiniteMapTable::identity(3, 2).unwrap();
        for i in 0..9 {
            assert_eq!(t.value(i), t.grid().point(i).as_slice());
        }
        assert!(t.is_bijection());
    }

    #[test]
    fn budget_guard() {
        let err = FiniteMapTable::from_fn(7, 8, 1, DEFAULT_POINT_BUDGET, |_| vec![0]);
        assert!(matches!(err, Err(Error::Resource(_))));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let t = FiniteMapTable::identity(3, 2).unwrap();
        let s = t.to_json().to_string();
        assert_eq!(FiniteMapTable::from_json_str(&s).unwrap(), t);
        assert!(FiniteMapTable::from_json_str(r#"{"p":3,"n":1,"m":1,"values":[[0],[1],[3]]}"#).is_err());
        assert!(FiniteMapTable::from_json_str(r#"{"p":3,"n":1,"m":1,"values":[[0],[1]]}"#).is_err());
    }

    #[test]
    fn collisions() {
        let t = FiniteMapTable::from_fn(3, 2, 1, 100, |x| vec![x[0]]).unwrap();
        assert!(!t.is_injective());
        assert_eq!(t.find_collision(), Some((vec![0, 0], vec![0, 1])));
    }
}
