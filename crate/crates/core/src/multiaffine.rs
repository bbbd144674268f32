use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{input, Error, Result};
use crate::exact::{FieldSpec, Matrix, Scalar, Vector};
use crate::lab::table::{residues, FiniteMapTable, Grid, DEFAULT_POINT_BUDGET};

/// Largest supported domain dimension (masks are `u32`).
pub const MAX_DIMENSION: usize = 24;

/// `F(x) = sum over masks d of u_d * prod_{i in d} x_i`. Bit `i` of a mask stands for `x_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiAffineMap {
    n: usize,
    m: usize,
    field: FieldSpec,
    coeffs: BTreeMap<u32, Vector>,
}

impl MultiAffineMap {
    /// Builds a map from `(mask, u_mask)` pairs. Zero coefficients are dropped; repeated masks are an error.
    pub fn new(
        n: usize,
        m: usize,
        field: FieldSpec,
        coeffs: impl IntoIterator<Item = (u32, Vector)>,
    ) -> Result<MultiAffineMap> {
        if n == 0 || m == 0 {
            return input("map dimensions must be positive");
        }
        if n > MAX_DIMENSION {
            return input(format!("domain dimension {n} exceeds {MAX_DIMENSION}"));
        }
        let mut stored = BTreeMap::new();
        for (mask, u) in coeffs {
            if mask >> n != 0 {
                return input(format!("mask {mask:#b} has bits beyond dimension {n}"));
            }
            if u.len() != m || u.field() != field {
                return input(format!("coefficient {u} is not a length-{m} vector over {field}"));
            }
            if stored.contains_key(&mask) {
                return input(format!("mask {mask:#b} given twice"));
            }
            if !u.is_zero() {
                stored.insert(mask, u);
            }
        }
        Ok(MultiAffineMap { n, m, field, coeffs: stored })
    }

    pub fn zero(n: usize, m: usize, field: FieldSpec) -> Result<MultiAffineMap> {
        MultiAffineMap::new(n, m, field, [])
    }

    pub fn identity(field: FieldSpec, n: usize) -> Result<MultiAffineMap> {
        MultiAffineMap::new(n, n, field, (0..n).map(|i| (1u32 << i, Vector::unit(field, n, i))))
    }

    /// The map `x -> A x + b`.
    pub fn from_affine(a: &AffineMap) -> Result<MultiAffineMap> {
        let (m, n, field) = (a.matrix.rows(), a.matrix.cols(), a.matrix.field());
        let linear = (0..n).map(|j| (1u32 << j, a.matrix.column(j)));
        MultiAffineMap::new(n, m, field, std::iter::once((0, a.offset.clone())).chain(linear))
    }

    /// Builds a map from per-coordinate polynomials given as `(mask, coefficient)` terms.
    pub fn from_coordinates(n: usize, field: FieldSpec, coords: &[Vec<(u32, i64)>]) -> Result<MultiAffineMap> {
        let m = coords.len();
        let mut acc: BTreeMap<u32, Vector> = BTreeMap::new();
        for (c, terms) in coords.iter().enumerate() {
            for &(mask, v) in terms {
                let entry = acc.entry(mask).or_insert_with(|| Vector::zeros(field, m));
                entry.axpy(&field.from_i64(v), &Vector::unit(field, m, c));
            }
        }
        MultiAffineMap::new(n, m, field, acc)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `u_mask`, or `None` when it vanishes.
    pub fn coeff(&self, mask: u32) -> Option<&Vector> {
        self.coeffs.get(&mask)
    }

    /// `u_mask`, with absent masks expanded to the zero vector.
    pub fn coeff_or_zero(&self, mask: u32) -> Vector {
        self.coeffs.get(&mask).cloned().unwrap_or_else(|| Vector::zeros(self.field, self.m))
    }

    /// Nonzero coefficients in ascending mask order.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &Vector)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    /// Largest `|d|` with `u_d != 0`.
    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(|k| k.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn evaluate(&self, x: &Vector) -> Result<Vector> {
        if x.len() != self.n || x.field() != self.field {
            return input(format!("point {x} is not a length-{} vector over {}", self.n, self.field));
        }
        let mut out = Vector::zeros(self.field, self.m);
        for (&mask, u) in &self.coeffs {
            let mut w = self.field.one();
            for i in bits(mask) {
                w = &w * &x[i];
            }
            if !w.is_zero() {
                out.axpy(&w, u);
            }
        }
        Ok(out)
    }

    /// Reduces rational coefficients into a prime field, dropping terms that vanish.
    pub fn reduce_into(&self, target: FieldSpec) -> Result<MultiAffineMap> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&k, v)| Ok((k, v.reduce_into(target)?)))
            .collect::<Result<Vec<_>>>()?;
        MultiAffineMap::new(self.n, self.m, target, coeffs)
    }

    pub fn to_json(&self) -> Value {
        let field = match self.field.modulus() {
            None => json!({"type": "rational"}),
            Some(p) => json!({"type": "prime", "p": p}),
        };
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&mask, u)| {
                let delta: Vec<u8> = (0..self.n).map(|i| ((mask >> i) & 1) as u8).collect();
                json!({"delta": delta, "value": u.to_json()})
            })
            .collect();
        json!({"n": self.n, "m": self.m, "field": field, "coeffs": coeffs})
    }

    pub fn from_json(v: &Value) -> Result<MultiAffineMap> {
        let fmt_err = |m: &str| Error::Format(m.to_string());
        let n = v["n"].as_u64().ok_or_else(|| fmt_err("map file needs an integer \"n\""))? as usize;
        let m = v["m"].as_u64().ok_or_else(|| fmt_err("map file needs an integer \"m\""))? as usize;
        let field = parse_field(&v["field"])?;
        let entries = v["coeffs"]
            .as_array()
            .ok_or_else(|| fmt_err("map file needs a \"coeffs\" array"))?;
        let mut coeffs = Vec::with_capacity(entries.len());
        for e in entries {
            let delta = e["delta"]
                .as_array()
                .ok_or_else(|| fmt_err("coefficient entry needs a \"delta\" array"))?;
            if delta.len() != n {
                return Err(Error::Format(format!("delta {:?} does not have length {n}", e["delta"])));
            }
            let mut mask = 0u32;
            for (i, d) in delta.iter().enumerate() {
                match d.as_u64() {
                    Some(0) => {}
                    Some(1) if i < MAX_DIMENSION => mask |= 1 << i,
                    _ => return Err(Error::Format(format!("delta entries must be 0 or 1, got {d}"))),
                }
            }
            coeffs.push((mask, Vector::from_json(field, &e["value"])?));
        }
        MultiAffineMap::new(n, m, field, coeffs).map_err(|e| match e {
            Error::Input(s) => Error::Format(s),
            other => other,
        })
    }

    pub fn from_json_str(s: &str) -> Result<MultiAffineMap> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Format(format!("map file: {e}")))?;
        MultiAffineMap::from_json(&v)
    }
}

impl fmt::Display for MultiAffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = (0..self.m)
            .map(|c| {
                let mut s = String::new();
                for (&mask, u) in &self.coeffs {
                    let a = &u[c];
                    if a.is_zero() {
                        continue;
                    }
                    let mono: Vec<String> = bits(mask).map(|i| format!("x{}", i + 1)).collect();
                    let (neg, mag) = if *a < self.field.zero() && self.field.is_rational() {
                        (true, -a)
                    } else {
                        (false, a.clone())
                    };
                    s.push_str(match (s.is_empty(), neg) {
                        (true, false) => "",
                        (true, true) => "-",
                        (false, false) => " + ",
                        (false, true) => " - ",
                    });
                    if mono.is_empty() {
                        s.push_str(&mag.to_string());
                    } else {
                        if !mag.is_one() {
                            s.push_str(&format!("{mag}*"));
                        }
                        s.push_str(&mono.join("*"));
                    }
                }
                if s.is_empty() {
                    "0".into()
                } else {
                    s
                }
            })
            .collect();
        write!(f, "({})", coords.join(", "))
    }
}

fn parse_field(v: &Value) -> Result<FieldSpec> {
    match v["type"].as_str() {
        Some("rational") => Ok(FieldSpec::RATIONAL),
        Some("prime") => {
            let p = v["p"]
                .as_u64()
                .ok_or_else(|| Error::Format("prime field needs an integer \"p\"".into()))?;
            FieldSpec::prime(p).map_err(|e| Error::Format(e.to_string()))
        }
        _ => Err(Error::Format(format!("unknown field descriptor {v}"))),
    }
}

/// Indices of the set bits of `mask`, ascending.
pub fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| (mask >> i) & 1 == 1)
}

/// `x -> matrix * x + offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    matrix: Matrix,
    offset: Vector,
}

impl AffineMap {
    pub fn new(matrix: Matrix, offset: Vector) -> Result<AffineMap> {
        if matrix.rows() != offset.len() || matrix.field() != offset.field() {
            return input("affine map offset must match the matrix rows and field");
        }
        Ok(AffineMap { matrix, offset })
    }

    pub fn linear(matrix: Matrix) -> AffineMap {
        let offset = Vector::zeros(matrix.field(), matrix.rows());
        AffineMap { matrix, offset }
    }

    pub fn identity(field: FieldSpec, n: usize) -> AffineMap {
        AffineMap::linear(Matrix::identity(field, n))
    }

    pub fn translation(v: Vector) -> AffineMap {
        AffineMap {
            matrix: Matrix::identity(v.field(), v.len()),
            offset: v,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn offset(&self) -> &Vector {
        &self.offset
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        self.matrix.mul_vec(x)?.add(&self.offset)
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &AffineMap) -> Result<AffineMap> {
        let matrix = self.matrix.mul(&inner.matrix)?;
        let offset = self.apply(&inner.offset)?;
        AffineMap::new(matrix, offset)
    }
}

/// Sparse polynomial with vector coefficients, keyed by full exponent vectors.
type Expansion = BTreeMap<Vec<u32>, Vector>;

/// Multiaffine normal form of `left ∘ map ∘ right`. Fails if the result has an exponent above 1.
pub fn compose(left: &AffineMap, map: &MultiAffineMap, right: &AffineMap) -> Result<MultiAffineMap> {
    let field = map.field;
    if left.matrix.field() != field || right.matrix.field() != field {
        return input("composition factors must share the map's field");
    }
    if right.matrix.rows() != map.n {
        return input(format!("right factor outputs {} coordinates, map takes {}", right.matrix.rows(), map.n));
    }
    if left.matrix.cols() != map.m {
        return input(format!("left factor takes {} coordinates, map outputs {}", left.matrix.cols(), map.m));
    }
    let inner_dim = right.matrix.cols();
    if inner_dim == 0 || inner_dim > MAX_DIMENSION {
        return input(format!("unsupported domain dimension {inner_dim}"));
    }
    // x_i = sum_j R_ij y_j + r_i as (exponent, coefficient) terms.
    let forms: Vec<Vec<(Option<usize>, Scalar)>> = (0..map.n)
        .map(|i| {
            let mut terms = Vec::new();
            if !right.offset[i].is_zero() {
                terms.push((None, right.offset[i].clone()));
            }
            for j in 0..inner_dim {
                let c = right.matrix.get(i, j);
                if !c.is_zero() {
                    terms.push((Some(j), c.clone()));
                }
            }
            terms
        })
        .collect();

    let mut total: Expansion = BTreeMap::new();
    for (&mask, u) in &map.coeffs {
        let mut poly: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        poly.insert(vec![0; inner_dim], field.one());
        for i in bits(mask) {
            let mut next: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
            for (exp, c) in &poly {
                for (var, a) in &forms[i] {
                    let mut e = exp.clone();
                    if let Some(j) = var {
                        e[*j] += 1;
                    }
                    let term = c * a;
                    let slot = next.entry(e).or_insert_with(|| field.zero());
                    *slot = &*slot + &term;
                }
            }
            next.retain(|_, c| !c.is_zero());
            poly = next;
        }
        for (exp, c) in poly {
            let slot = total.entry(exp).or_insert_with(|| Vector::zeros(field, map.m));
            slot.axpy(&c, u);
        }
    }
    total.retain(|_, v| !v.is_zero());

    let out_dim = left.matrix.rows();
    let mut coeffs: BTreeMap<u32, Vector> = BTreeMap::new();
    for (exp, v) in total {
        if let Some(j) = exp.iter().position(|&e| e > 1) {
            return input(format!(
                "composition is not multiaffine: y{} appears with exponent {}",
                j + 1,
                exp[j]
            ));
        }
        let mask = exp.iter().enumerate().fold(0u32, |acc, (j, &e)| acc | (e << j));
        coeffs.insert(mask, left.matrix.mul_vec(&v)?);
    }
    let constant = coeffs.entry(0).or_insert_with(|| Vector::zeros(field, out_dim));
    *constant = constant.add(&left.offset)?;
    MultiAffineMap::new(inner_dim, out_dim, field, coeffs)
}

/// `t -> c_0 + c_1 t + ... + c_d t^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateCurve {
    m: usize,
    field: FieldSpec,
    coeffs: Vec<Vector>,
}

impl UnivariateCurve {
    /// Trims trailing zero coefficients, keeping at least `c_0`.
    pub fn new(field: FieldSpec, m: usize, mut coeffs: Vec<Vector>) -> Result<UnivariateCurve> {
        if coeffs.iter().any(|c| c.len() != m || c.field() != field) {
            return input(format!("curve coefficients must be length-{m} vectors over {field}"));
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(Vector::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Vector::zeros(field, m));
        }
        Ok(UnivariateCurve { m, field, coeffs })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[Vector] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn evaluate(&self, t: &Scalar) -> Vector {
        let mut out = Vector::zeros(self.field, self.m);
        for c in self.coeffs.iter().rev() {
            out = out.scale(t).add(c).expect("curve coefficients share a length");
        }
        out
    }
}

/// Expansion of `t -> map(a + t b)`.
pub fn restrict_to_line(map: &MultiAffineMap, a: &Vector, b: &Vector) -> Result<UnivariateCurve> {
    let f = map.field;
    for v in [a, b] {
        if v.len() != map.n || v.field() != f {
            return input(format!("{v} is not a length-{} vector over {f}", map.n));
        }
    }
    if b.is_zero() {
        return input("line direction must be nonzero");
    }
    let mut coeffs = vec![Vector::zeros(f, map.m); map.degree() + 1];
    for (&mask, u) in &map.coeffs {
        // prod_{i in mask} (a_i + t b_i)
        let mut poly = vec![f.one()];
        for i in bits(mask) {
            let mut next = vec![f.zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k] = &next[k] + &(c * &a[i]);
                next[k + 1] = &next[k + 1] + &(c * &b[i]);
            }
            poly = next;
        }
        for (k, c) in poly.iter().enumerate() {
            if !c.is_zero() {
                coeffs[k].axpy(c, u);
            }
        }
    }
    UnivariateCurve::new(f, map.m, coeffs)
}

/// True iff all `c_k` with `k >= 1` are pairwise parallel, so the image lies in a line or a point.
pub fn curve_lies_in_line(c: &UnivariateCurve) -> bool {
    let nonzero: Vec<&Vector> = c.coeffs.iter().skip(1).filter(|v| !v.is_zero()).collect();
    match nonzero.first() {
        None => true,
        Some(first) => nonzero.iter().all(|v| first.is_parallel(v)),
    }
}

/// Full value table of a map over `Z_p`, visiting at most `budget` points.
pub fn tabulate_with_budget(map: &MultiAffineMap, budget: usize) -> Result<FiniteMapTable> {
    let p = match map.field.modulus() {
        Some(p) => p as u32,
        None => return input("tabulation needs a prime field"),
    };
    Grid::new(p, map.n)?.within_budget(budget)?;
    let terms: Vec<(u32, Vec<u64>)> = map
        .coeffs
        .iter()
        .map(|(&k, v)| Ok((k, residues(v)?.into_iter().map(u64::from).collect())))
        .collect::<Result<_>>()?;
    let p64 = p as u64;
    let m = map.m;
    FiniteMapTable::from_fn(p, map.n, m, budget, |x| {
        let mut out = vec![0u64; m];
        for (mask, u) in &terms {
            let mut w = 1u64;
            for i in bits(*mask) {
                w = w * x[i] as u64 % p64;
            }
            if w != 0 {
                for (o, c) in out.iter_mut().zip(u) {
                    *o = (*o + w * c) % p64;
                }
            }
        }
        out.into_iter().map(|v| v as u32).collect()
    })
}

/// [`tabulate_with_budget`] with the default point budget.
pub fn tabulate(map: &MultiAffineMap) -> Result<FiniteMapTable> {
    tabulate_with_budget(map, DEFAULT_POINT_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vector {
        Vector::from_i64(FieldSpec::RATIONAL, v)
    }

    /// (x1 + x3(x1 - x2), x2 + x3(x1 - x2), x3)
    fn example_map(field: FieldSpec) -> MultiAffineMap {
        MultiAffineMap::from_coordinates(
            3,
            field,
            &[
                vec![(0b001, 1), (0b101, 1), (0b110, -1)],
                vec![(0b010, 1), (0b101, 1), (0b110, -1)],
                vec![(0b100, 1)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let id = MultiAffineMap::identity(FieldSpec::RATIONAL, 3).unwrap();
        assert_eq!(id.evaluate(&q(&[4, -1, 7])).unwrap(), q(&[4, -1, 7]));
        let p = example_map(FieldSpec::RATIONAL);
        assert_eq!(p.evaluate(&q(&[1, 2, 3])).unwrap(), q(&[-2, -1, 3]));
        assert_eq!(p.degree(), 2);
        assert!(p.evaluate(&q(&[1, 2])).is_err());
    }

    #[test]
    fn compose_identity_and_translation() {
        let f = FieldSpec::RATIONAL;
        let p = example_map(f);
        let id = AffineMap::identity(f, 3);
        assert_eq!(compose(&id, &p, &id).unwrap(), p);
        let shifted = compose(&AffineMap::translation(q(&[1, 0, -2])), &p, &id).unwrap();
        for (mask, u) in shifted.coeffs() {
            if mask != 0 {
                assert_eq!(Some(u), p.coeff(mask));
            }
        }
        assert_eq!(shifted.coeff(0), Some(&q(&[1, 0, -2])));
    }

    #[test]
    fn compose_rejects_squares() {
        let f = FieldSpec::RATIONAL;
        let square = MultiAffineMap::from_coordinates(2, f, &[vec![(0b11, 1)]]).unwrap();
        let collapse = AffineMap::linear(Matrix::from_i64(f, &[&[1, 0], &[1, 0]]).unwrap());
        let err = compose(&AffineMap::identity(f, 1), &square, &collapse);
        assert!(matches!(err, Err(Error::Input(_))));
    }

    #[test]
    fn compose_with_basis_change_stays_multiaffine() {
        let f = FieldSpec::RATIONAL;
        let right = AffineMap::linear(Matrix::from_i64(f, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, -1]]).unwrap());
        let c = compose(&AffineMap::identity(f, 3), &example_map(f), &right).unwrap();
        for pt in [[1, 2, 3], [0, -1, 5], [2, 2, 2]] {
            let y = q(&pt);
            let expect = example_map(f).evaluate(&right.apply(&y).unwrap()).unwrap();
            assert_eq!(c.evaluate(&y).unwrap(), expect);
        }
    }

    #[test]
    fn restrict_examples() {
        let f = FieldSpec::RATIONAL;
        let id = MultiAffineMap::identity(f, 2).unwrap();
        let c = restrict_to_line(&id, &q(&[3, 4]), &q(&[1, -1])).unwrap();
        assert_eq!(c.coeffs(), &[q(&[3, 4]), q(&[1, -1])]);

        let w = q(&[2, 5, 1]);
        let c = restrict_to_line(&example_map(f), &w, &q(&[1, 1, -1])).unwrap();
        assert_eq!(c.degree(), 1);
        assert!(c.coeffs()[1].is_parallel(&q(&[1 + 5 - 2, 1 + 5 - 2, -1])));

        let sharp = MultiAffineMap::from_coordinates(
            4,
            f,
            &[vec![(1, 1)], vec![(2, 1)], vec![(4, 1)], vec![(8, 1), (0b0011, 1), (0b0101, -1)]],
        )
        .unwrap();
        assert_eq!(sharp.evaluate(&q(&[1, 1, 1, 1])).unwrap(), q(&[1, 1, 1, 1]));
        let c = restrict_to_line(&sharp, &q(&[0, 0, 0, 0]), &q(&[1, 1, 1, 1])).unwrap();
        assert_eq!(c.coeffs(), &[q(&[0, 0, 0, 0]), q(&[1, 1, 1, 1])]);
        assert!(restrict_to_line(&sharp, &q(&[0, 0, 0, 0]), &q(&[0, 0, 0, 0])).is_err());
    }

    #[test]
    fn lies_in_line_examples() {
        let f = FieldSpec::RATIONAL;
        let line = UnivariateCurve::new(f, 2, vec![q(&[1, 1]), q(&[2, 3])]).unwrap();
        assert!(curve_lies_in_line(&line));
        let bent = UnivariateCurve::new(f, 2, vec![q(&[0, 0]), q(&[1, 0]), q(&[0, 1])]).unwrap();
        assert!(!curve_lies_in_line(&bent));
        let folded = UnivariateCurve::new(f, 3, vec![q(&[0, 0, 0]), q(&[1, 1, -1]), q(&[2, 2, -2])]).unwrap();
        assert!(curve_lies_in_line(&folded));
    }

    #[test]
    fn tabulate_examples() {
        let z3 = FieldSpec::prime(3).unwrap();
        let t = tabulate(&MultiAffineMap::identity(z3, 2).unwrap()).unwrap();
        for i in 0..9 {
            assert_eq!(t.value(i), t.grid().point(i).as_slice());
        }
        let z5 = FieldSpec::prime(5).unwrap();
        let t = tabulate(&example_map(z5)).unwrap();
        assert_eq!(t.len(), 125);
        assert!(t.is_bijection());
        let c = MultiAffineMap::new(2, 2, z5, [(0, Vector::from_i64(z5, &[4, 1]))]).unwrap();
        let t = tabulate(&c).unwrap();
        assert!((0..25).all(|i| t.value(i) == [4, 1]));
        assert!(tabulate(&example_map(FieldSpec::RATIONAL)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = example_map(FieldSpec::RATIONAL);
        assert_eq!(MultiAffineMap::from_json_str(&p.to_json().to_string()).unwrap(), p);
        let z7 = p.reduce_into(FieldSpec::prime(7).unwrap()).unwrap();
        assert_eq!(MultiAffineMap::from_json_str(&z7.to_json().to_string()).unwrap(), z7);
        let dup = r#"{"n":1,"m":1,"field":{"type":"rational"},"coeffs":[{"delta":[1],"value":["1"]},{"delta":[1],"value":["2"]}]}"#;
        assert!(matches!(MultiAffineMap::from_json_str(dup), Err(Error::Format(_))));
        let bad = r#"{"n":1,"m":1,"field":{"type":"prime","p":4},"coeffs":[]}"#;
        assert!(MultiAffineMap::from_json_str(bad).is_err());
    }

    #[test]
    fn display_is_readable() {
        let p = example_map(FieldSpec::RATIONAL);
        assert_eq!(p.to_string(), "(x1 + x1*x3 - x2*x3, x2 + x1*x3 - x2*x3, x3)");
    }
}
