use std::fmt;
use std::ops::Index;

use serde_json::Value;

use super::field::{FieldSpec, Scalar};
use crate::combinatorics::combinations;
use crate::error::{input, Error, Result};

/// A dense vector over one field.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Vector {
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: FieldSpec, entries: Vec<Scalar>) -> Result<Vector> {
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return input(format!("entry {bad} is over {} but the vector is over {field}", bad.field()));
        }
        Ok(Vector { field, entries })
    }

    /// Builds a vector from scalars, taking the field from the first entry.
    pub fn from_scalars(entries: Vec<Scalar>) -> Result<Vector> {
        let field = match entries.first() {
            Some(s) => s.field(),
            None => return input("cannot infer the field of an empty vector"),
        };
        Vector::new(field, entries)
    }

    pub fn from_i64(field: FieldSpec, values: &[i64]) -> Vector {
        Vector {
            field,
            entries: values.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn zeros(field: FieldSpec, len: usize) -> Vector {
        Vector {
            field,
            entries: vec![field.zero(); len],
        }
    }

    pub fn unit(field: FieldSpec, len: usize, i: usize) -> Vector {
        let mut v = Vector::zeros(field, len);
        v.entries[i] = field.one();
        v
    }

    pub fn ones(field: FieldSpec, len: usize) -> Vector {
        Vector {
            field,
            entries: vec![field.one(); len],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn check_compatible(&self, other: &Vector) -> Result<()> {
        if self.field != other.field {
            return input(format!("vectors over {} and {}", self.field, other.field));
        }
        if self.len() != other.len() {
            return input(format!("vector lengths {} and {}", self.len(), other.len()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Vector, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Vector {
        Vector {
            field: self.field,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Adds `c * other` in place. Both operands must be compatible.
    pub(crate) fn axpy(&mut self, c: &Scalar, other: &Vector) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a = &*a + &(c * b);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            field: self.field,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn dot(&self, other: &Vector) -> Result<Scalar> {
        self.check_compatible(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b)))
    }

    /// True iff the two vectors span at most a one-dimensional space.
    pub fn is_parallel(&self, other: &Vector) -> bool {
        if self.check_compatible(other).is_err() {
            return false;
        }
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                let minor = &(&self.entries[i] * &other.entries[j]) - &(&self.entries[j] * &other.entries[i]);
                if !minor.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Scales so the first nonzero entry is one. Zero vectors are returned unchanged.
    pub fn normalized(&self) -> Vector {
        match self.entries.iter().find(|s| !s.is_zero()) {
            Some(lead) => self.scale(&lead.inv().expect("nonzero lead")),
            None => self.clone(),
        }
    }

    pub fn reduce_into(&self, target: FieldSpec) -> Result<Vector> {
        let entries = self.entries.iter().map(|s| s.reduce_into(target)).collect::<Result<_>>()?;
        Ok(Vector { field: target, entries })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.entries.iter().map(Scalar::to_json).collect())
    }

    pub fn from_json(field: FieldSpec, v: &Value) -> Result<Vector> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Format(format!("expected an array of scalars, got {v}")))?;
        let entries = arr.iter().map(|x| field.scalar_from_json(x)).collect::<Result<_>>()?;
        Ok(Vector { field, entries })
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// A dense row-major matrix over one field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows of scalars; every entry must lie in `field`.
    pub fn new(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return input("matrices must have at least one row and one column");
        }
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return input(format!("row {i} has {} entries, expected {c}", row.len()));
            }
            for s in row {
                if s.field() != field {
                    return input(format!("entry {s} over {} in a matrix over {field}", s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            field,
            data,
        })
    }

    pub fn from_rows(rows: &[Vector]) -> Result<Matrix> {
        let field = match rows.first() {
            Some(v) => v.field(),
            None => return input("matrices must have at least one row"),
        };
        Matrix::new(field, rows.iter().map(|v| v.entries().to_vec()).collect())
    }

    pub fn from_columns(cols: &[Vector]) -> Result<Matrix> {
        Ok(Matrix::from_rows(cols)?.transpose())
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::new(
            field,
            rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "matrix entry field mismatch");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector {
            field: self.field,
            entries: self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector {
            field: self.field,
            entries: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.rows {
            return input(format!(
                "cannot multiply {}x{} over {} by {}x{} over {}",
                self.rows, self.cols, self.field, other.rows, other.cols, other.field
            ));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.data[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if self.field != v.field() || self.cols != v.len() {
            return input(format!(
                "cannot apply a {}x{} matrix over {} to a length-{} vector over {}",
                self.rows,
                self.cols,
                self.field,
                v.len(),
                v.field()
            ));
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(self.field.zero(), |acc, k| &acc + &(self.get(i, k) * &v[k]))
            })
            .collect();
        Ok(Vector {
            field: self.field,
            entries,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    /// Gauss-Jordan elimination to the unique reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&factor * m.get(r, j));
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            rank: pivots.len(),
            matrix: m,
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of the kernel, one vector per free column in increasing column order.
    /// Each basis vector has a one in its free column and zeros in the other free columns.
    pub fn nullspace(&self) -> Vec<Vector> {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.field, self.cols);
                v.entries[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v.entries[pc] = -matrix.get(row, f);
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Vector) -> Result<Option<Vector>> {
        if rhs.field() != self.field || rhs.len() != self.rows {
            return input("right-hand side does not match the matrix");
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.data[i * (self.cols + 1) + j] = self.get(i, j).clone();
            }
            aug.data[i * (self.cols + 1) + self.cols] = rhs[i].clone();
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.field, self.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            x.entries[pc] = matrix.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return input("determinant of a non-square matrix");
        }
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(self.field.zero());
            };
            if pr != c {
                m.swap_rows(pr, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c) * &inv;
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.data[i * m.cols + j] = v;
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return input("inverse of a non-square matrix");
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.data[i * 2 * n + n + i] = self.field.one();
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = matrix.get(i, n + j).clone();
            }
        }
        Ok(Some(inv))
    }

    pub fn reduce_into(&self, target: FieldSpec) -> Result<Matrix> {
        let data = self.data.iter().map(|s| s.reduce_into(target)).collect::<Result<_>>()?;
        Ok(Matrix {
            field: target,
            data,
            ..*self
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array((0..self.rows).map(|i| self.row(i).to_json()).collect())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

/// True iff every `j` of the vectors are linearly independent.
pub fn is_j_independent(vectors: &[Vector], j: usize) -> Result<bool> {
    let Some(first) = vectors.first() else {
        return input("no vectors given");
    };
    let n = first.len();
    if vectors.iter().any(|v| v.len() != n || v.field() != first.field()) {
        return input("vectors differ in dimension or field");
    }
    if j == 0 || j > n.min(vectors.len()) {
        return input(format!("j = {j} outside 1..={}", n.min(vectors.len())));
    }
    for subset in combinations(vectors.len(), j) {
        let rows: Vec<Vector> = subset.iter().map(|&i| vectors[i].clone()).collect();
        if Matrix::from_rows(&rows)?.rank() < j {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::RATIONAL
    }

    #[test]
    fn rref_identity_and_dependent_rows() {
        let id = Matrix::identity(q(), 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 2);

        let m = Matrix::from_i64(q(), &[&[1, 1], &[2, 2]]).unwrap();
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]).unwrap());
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_mod_three() {
        let f = FieldSpec::prime(3).unwrap();
        let m = Matrix::from_i64(f, &[&[1, 1], &[1, 2]]).unwrap();
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::identity(f, 2));
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn mixed_field_rows_rejected() {
        let z3 = FieldSpec::prime(3).unwrap();
        let err = Matrix::new(q(), vec![vec![q().one(), z3.one()]]);
        assert!(matches!(err, Err(Error::Input(_))));
    }

    #[test]
    fn nullspace_examples() {
        assert!(Matrix::identity(q(), 3).nullspace().is_empty());
        let ones = Matrix::from_i64(q(), &[&[1, 1, 1, 1, 1, 1]]).unwrap();
        let ns = ones.nullspace();
        assert_eq!(ns.len(), 5);
        for b in &ns {
            assert!(ones.mul_vec(b).unwrap().is_zero());
        }
        assert_eq!(ns[0], Vector::from_i64(q(), &[-1, 1, 0, 0, 0, 0]));
        assert_eq!(Matrix::zeros(q(), 2, 3).nullspace().len(), 3);
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_i64(q(), &[&[2, 1], &[1, 3]]).unwrap();
        let rhs = Vector::from_i64(q(), &[3, 5]);
        let x = m.solve(&rhs).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), rhs);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(q(), 2));
        assert_eq!(m.determinant().unwrap(), q().from_i64(5));

        let sing = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).unwrap();
        assert!(sing.inverse().unwrap().is_none());
        assert!(sing.solve(&Vector::from_i64(q(), &[1, 0])).unwrap().is_none());
        assert!(sing.determinant().unwrap().is_zero());
    }

    #[test]
    fn j_independence() {
        let frame = vec![
            Vector::from_i64(q(), &[1, 0, 0]),
            Vector::from_i64(q(), &[0, 1, 0]),
            Vector::from_i64(q(), &[0, 0, 1]),
            Vector::from_i64(q(), &[1, 1, 1]),
        ];
        assert!(is_j_independent(&frame, 3).unwrap());

        let pair = vec![Vector::from_i64(q(), &[1, 0]), Vector::from_i64(q(), &[2, 0])];
        assert!(!is_j_independent(&pair, 2).unwrap());

        let z5 = FieldSpec::prime(5).unwrap();
        let four = vec![
            Vector::from_i64(z5, &[1, 0]),
            Vector::from_i64(z5, &[0, 1]),
            Vector::from_i64(z5, &[1, 1]),
            Vector::from_i64(z5, &[1, 2]),
        ];
        assert!(is_j_independent(&four, 2).unwrap());
        assert!(is_j_independent(&four, 3).is_err());
        assert!(is_j_independent(&four, 0).is_err());
    }

    #[test]
    fn parallel_and_normalized() {
        let a = Vector::from_i64(q(), &[1, 1, -1]);
        let b = Vector::from_i64(q(), &[2, 2, -2]);
        assert!(a.is_parallel(&b));
        assert!(!a.is_parallel(&Vector::from_i64(q(), &[1, 0, 0])));
        assert_eq!(b.normalized(), a);
    }
}
