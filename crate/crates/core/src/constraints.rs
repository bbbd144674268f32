use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::combinatorics::{combinations, masks_of_weight};
use crate::error::{input, Error, Result};
use crate::exact::{is_j_independent, FieldSpec, Matrix, Scalar, Vector};
use crate::lab::table::{Grid, DEFAULT_POINT_BUDGET};
use crate::multiaffine::{bits, curve_lies_in_line, restrict_to_line, tabulate_with_budget, MultiAffineMap};

/// Origin of one constraint row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowKind {
    /// `u_mask = 0`.
    Vanishing { mask: u32 },
    /// `sum of u_d over |d| = k, d ⊇ subset` is zero.
    Sum { k: usize, subset: Vec<usize> },
}

impl RowKind {
    fn masks(&self, n: usize) -> Vec<u32> {
        match self {
            RowKind::Vanishing { mask } => vec![*mask],
            RowKind::Sum { k, subset } => {
                let need = subset.iter().fold(0u32, |m, &i| m | (1 << i));
                masks_of_weight(n, *k).into_iter().filter(|d| d & need == need).collect()
            }
        }
    }
}

/// Linear conditions on the coefficients of a multiaffine map, applied to each output coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub n: usize,
    /// All `2^n` masks in numeric order; column `j` of `rows` belongs to `unknowns[j]`.
    pub unknowns: Vec<u32>,
    pub rows: Matrix,
    pub kinds: Vec<RowKind>,
}

impl ConstraintSystem {
    /// Dimension of the solution space per output coordinate.
    pub fn solution_dimension(&self) -> usize {
        self.unknowns.len() - self.rows.rank()
    }

    pub fn to_json(&self) -> Value {
        let unknowns: Vec<Vec<u8>> = self
            .unknowns
            .iter()
            .map(|&m| (0..self.n).map(|i| ((m >> i) & 1) as u8).collect())
            .collect();
        let rows: Vec<Value> = (0..self.rows.rows()).map(|i| self.rows.row(i).to_json()).collect();
        json!({"unknowns": unknowns, "rows": rows})
    }
}

fn system_from_kinds(n: usize, kinds: Vec<RowKind>) -> Result<ConstraintSystem> {
    let q = FieldSpec::RATIONAL;
    let unknowns: Vec<u32> = (0..1u32 << n).collect();
    let mut rows = Matrix::zeros(q, kinds.len(), unknowns.len());
    for (r, kind) in kinds.iter().enumerate() {
        for mask in kind.masks(n) {
            rows.set(r, mask as usize, q.one());
        }
    }
    Ok(ConstraintSystem { n, unknowns, rows, kinds })
}

fn check_n(n: usize) -> Result<()> {
    if !(2..=16).contains(&n) {
        return input(format!("constraint systems are built for 2 <= n <= 16, got {n}"));
    }
    Ok(())
}

/// Vanishing rows for `2|d| >= n + 2`, then sum rows for `2 <= k`, `2k < n + 2`, `|subset| <= k - 2`.
pub fn build_constraints(n: usize) -> Result<ConstraintSystem> {
    check_n(n)?;
    let mut kinds = Vec::new();
    for mask in 0..1u32 << n {
        if 2 * mask.count_ones() as usize >= n + 2 {
            kinds.push(RowKind::Vanishing { mask });
        }
    }
    for k in (2..).take_while(|k| 2 * k < n + 2) {
        for l in 0..=k - 2 {
            for subset in combinations(n, l) {
                kinds.push(RowKind::Sum { k, subset });
            }
        }
    }
    system_from_kinds(n, kinds)
}

/// Only the rows with `|subset| = k - 2`, for every `2 <= k <= n`.
pub fn pattern_rows(n: usize) -> Result<ConstraintSystem> {
    check_n(n)?;
    let mut kinds = Vec::new();
    for k in 2..=n {
        for subset in combinations(n, k - 2) {
            kinds.push(RowKind::Sum { k, subset });
        }
    }
    system_from_kinds(n, kinds)
}

/// True iff the pattern rows and the full system have the same row space.
pub fn pattern_rows_span_system(n: usize) -> Result<bool> {
    let full = build_constraints(n)?;
    let pattern = pattern_rows(n)?;
    let mut stacked: Vec<Vector> = (0..pattern.rows.rows()).map(|i| pattern.rows.row(i)).collect();
    stacked.extend((0..full.rows.rows()).map(|i| full.rows.row(i)));
    let joint = Matrix::from_rows(&stacked)?.rank();
    Ok(joint == pattern.rows.rank() && joint == full.rows.rank())
}

/// A constraint row that some output coordinate violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowViolation {
    pub row: usize,
    pub kind: RowKind,
    pub coordinate: usize,
    pub value: Scalar,
}

/// `None` if the map satisfies every row in every coordinate, otherwise the first violation.
pub fn satisfies_line_constraints(map: &MultiAffineMap) -> Result<Option<RowViolation>> {
    let n = map.n();
    let sys = build_constraints(n)?;
    for (row, kind) in sys.kinds.iter().enumerate() {
        let mut total = Vector::zeros(map.field(), map.m());
        for mask in kind.masks(n) {
            if let Some(u) = map.coeff(mask) {
                total = total.add(u)?;
            }
        }
        if let Some(coordinate) = total.iter().position(|s| !s.is_zero()) {
            return Ok(Some(RowViolation {
                row,
                kind: kind.clone(),
                coordinate,
                value: total[coordinate].clone(),
            }));
        }
    }
    Ok(None)
}

/// A line along which the map picks up a term of degree at least 2 in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConverseFailure {
    pub direction: Vector,
    /// Concrete base point (prime fields).
    pub base: Option<Vector>,
    /// Monomial in the base indeterminates carrying the offending term (rationals).
    pub monomial: Option<u32>,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConverseReport {
    pub directions: Vec<Vector>,
    pub failures: Vec<ConverseFailure>,
}

impl ConverseReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| {
                json!({
                    "direction": f.direction.to_json(),
                    "base": f.base.as_ref().map(Vector::to_json),
                    "monomial": f.monomial.map(|m| bits(m).map(|i| i + 1).collect::<Vec<_>>()),
                    "degree": f.degree,
                })
            })
            .collect();
        json!({"ok": self.ok(), "failures": failures})
    }
}

/// Coefficients of `t^j a^R` with `j >= 2` in `F(a + t b)` for indeterminate `a`, keyed by `(R, j)`.
pub fn symbolic_high_degree_terms(map: &MultiAffineMap, b: &Vector) -> Result<BTreeMap<(u32, usize), Vector>> {
    if b.len() != map.n() || b.field() != map.field() {
        return input(format!("direction {b} does not match the map"));
    }
    let support = (0..map.n()).filter(|&i| !b[i].is_zero()).fold(0u32, |m, i| m | (1 << i));
    let mut out: BTreeMap<(u32, usize), Vector> = BTreeMap::new();
    for (mask, u) in map.coeffs() {
        let active = mask & support;
        let mut t = active;
        while t != 0 {
            let j = t.count_ones() as usize;
            if j >= 2 {
                let w = bits(t).fold(map.field().one(), |acc, i| &acc * &b[i]);
                out.entry((mask & !t, j))
                    .or_insert_with(|| Vector::zeros(map.field(), map.m()))
                    .axpy(&w, u);
            }
            t = (t - 1) & active;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Line-degree failures along each direction: symbolic base over the rationals, every base point over `Z_p`.
pub fn line_degree_failures(map: &MultiAffineMap, directions: &[Vector], budget: usize) -> Result<Vec<ConverseFailure>> {
    let mut failures = Vec::new();
    match map.field().modulus() {
        None => {
            for b in directions {
                for ((monomial, degree), _) in symbolic_high_degree_terms(map, b)? {
                    failures.push(ConverseFailure {
                        direction: b.clone(),
                        base: None,
                        monomial: Some(monomial),
                        degree,
                    });
                }
            }
        }
        Some(p) => {
            let grid = Grid::new(p as u32, map.n())?;
            grid.within_budget(budget)?;
            let terms: Vec<(Vec<usize>, Vec<u64>)> = map
                .coeffs()
                .map(|(mask, v)| (bits(mask).collect(), v.iter().map(|c| c.residue().unwrap_or(0)).collect()))
                .collect();
            for b in directions {
                if b.len() != map.n() || b.field() != map.field() || b.is_zero() {
                    return input(format!("{b} is not a nonzero length-{} direction over the map's field", map.n()));
                }
                let bv: Vec<u64> = b.iter().map(|c| c.residue().unwrap_or(0)).collect();
                for x in grid.points() {
                    let a: Vec<u64> = x.iter().map(|&c| c as u64).collect();
                    let degree = residue_line_degree(&terms, &a, &bv, p, map.m(), map.degree());
                    if degree >= 2 {
                        failures.push(ConverseFailure {
                            direction: b.clone(),
                            base: Some(Vector::from_i64(map.field(), &x.iter().map(|&c| c as i64).collect::<Vec<_>>())),
                            monomial: None,
                            degree,
                        });
                    }
                }
            }
        }
    }
    Ok(failures)
}

/// Degree in `t` of `map(a + t b)` over `Z_p`, from residue coefficients.
fn residue_line_degree(terms: &[(Vec<usize>, Vec<u64>)], a: &[u64], b: &[u64], p: u64, m: usize, max: usize) -> usize {
    let mut coeffs = vec![vec![0u64; m]; max + 1];
    let mut poly = Vec::with_capacity(max + 1);
    for (vars, value) in terms {
        poly.clear();
        poly.push(1u64);
        for &i in vars {
            poly.push(0);
            for k in (0..poly.len()).rev() {
                let lower = if k > 0 { poly[k - 1] * b[i] % p } else { 0 };
                poly[k] = (poly[k] * a[i] + lower) % p;
            }
        }
        for (k, c) in poly.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (acc, u) in coeffs[k].iter_mut().zip(value) {
                *acc = (*acc + c * u) % p;
            }
        }
    }
    coeffs.iter().rposition(|c| c.iter().any(|&x| x != 0)).unwrap_or(0)
}

/// `e_1, ..., e_n` and the all-ones vector.
pub fn axes_and_diagonal(field: FieldSpec, n: usize) -> Vec<Vector> {
    let mut dirs: Vec<Vector> = (0..n).map(|i| Vector::unit(field, n, i)).collect();
    dirs.push(Vector::ones(field, n));
    dirs
}

/// Checks that a map satisfying the constraint system restricts to degree at most 1 along every
/// line parallel to some `e_i` or to the all-ones vector.
pub fn converse_check(map: &MultiAffineMap) -> Result<ConverseReport> {
    if map.n() < 2 {
        return input("converse check needs n >= 2");
    }
    if let Some(v) = satisfies_line_constraints(map)? {
        return input(format!("map violates constraint row {} in coordinate {}", v.row, v.coordinate + 1));
    }
    let directions = axes_and_diagonal(map.field(), map.n());
    let failures = line_degree_failures(map, &directions, DEFAULT_POINT_BUDGET)?;
    Ok(ConverseReport { directions, failures })
}

/// The triangular sharp map `(x_1, ..., x_{2k-1}, x_{2k} + sum alpha_d x^d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpMapSpec {
    pub dim: usize,
    /// `(mask, alpha_mask)` for `|mask| = k`, last coordinate excluded, ascending mask order.
    pub alphas: Vec<(u32, Scalar)>,
    pub map: MultiAffineMap,
}

/// Builds the sharp map from the first nullspace vector of the restricted pattern rows.
pub fn construct_sharp_map(dim: usize) -> Result<SharpMapSpec> {
    if dim < 4 || !dim.is_multiple_of(2) || dim > 16 {
        return input(format!("sharp construction needs an even dimension 4 <= dim <= 16, got {dim}"));
    }
    let q = FieldSpec::RATIONAL;
    let k = dim / 2;
    let last = 1u32 << (dim - 1);
    let unknowns: Vec<u32> = masks_of_weight(dim, k).into_iter().filter(|m| m & last == 0).collect();
    let subsets: Vec<u32> = combinations(dim, k - 2)
        .into_iter()
        .map(|s| s.iter().fold(0u32, |m, &i| m | (1 << i)))
        .filter(|s| s & last == 0)
        .collect();
    let mut rows = Matrix::zeros(q, subsets.len(), unknowns.len());
    for (r, s) in subsets.iter().enumerate() {
        for (c, d) in unknowns.iter().enumerate() {
            if d & s == *s {
                rows.set(r, c, q.one());
            }
        }
    }
    let kernel = rows.nullspace();
    let alpha = kernel
        .first()
        .ok_or_else(|| Error::Construction(format!("restricted system for dim {dim} has only the zero solution")))?;
    let alphas: Vec<(u32, Scalar)> = unknowns.iter().copied().zip(alpha.iter().cloned()).collect();

    let mut coeffs: BTreeMap<u32, Vector> = (0..dim).map(|i| (1u32 << i, Vector::unit(q, dim, i))).collect();
    for (mask, a) in &alphas {
        if !a.is_zero() {
            coeffs.insert(*mask, Vector::unit(q, dim, dim - 1).scale(a));
        }
    }
    let map = MultiAffineMap::new(dim, dim, q, coeffs)?;
    if let Some(v) = satisfies_line_constraints(&map)? {
        return Err(Error::Internal(format!("sharp map violates constraint row {}", v.row)));
    }
    if !converse_check(&map)?.ok() {
        return Err(Error::Internal("sharp map bends a line of the checked family".into()));
    }
    Ok(SharpMapSpec { dim, alphas, map })
}

/// Injectivity of the reduction mod `p`, or `None` when `p^dim` exceeds the budget.
pub fn injective_mod(map: &MultiAffineMap, p: u64, budget: usize) -> Result<Option<bool>> {
    let reduced = map.reduce_into(FieldSpec::prime(p)?)?;
    match tabulate_with_budget(&reduced, budget) {
        Ok(t) => Ok(Some(t.is_injective())),
        Err(Error::Resource(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `(x1 + x3(x1 - x2), x2 + x3(x1 - x2), x3)`.
pub fn example_r3_map(field: FieldSpec) -> MultiAffineMap {
    MultiAffineMap::from_coordinates(
        3,
        field,
        &[
            vec![(0b001, 1), (0b101, 1), (0b110, -1)],
            vec![(0b010, 1), (0b101, 1), (0b110, -1)],
            vec![(0b100, 1)],
        ],
    )
    .expect("fixed coefficients are well formed")
}

/// Variant 1: `(x1 + a x3(x1 - x2), x2 + a x3(x1 - x2), x3)`.
/// Variant 2: `(x1 - x3, x2, a x3 + x2(x1 - x3))`.
pub fn canonical_r3_forms(alpha: &Scalar, variant: u8) -> Result<MultiAffineMap> {
    if alpha.is_zero() {
        return input("the canonical forms need a nonzero parameter");
    }
    let f = alpha.field();
    let e = |i| Vector::unit(f, 3, i);
    let coeffs: Vec<(u32, Vector)> = match variant {
        1 => {
            let mixed = e(0).add(&e(1))?.scale(alpha);
            vec![(0b001, e(0)), (0b010, e(1)), (0b100, e(2)), (0b101, mixed.clone()), (0b110, mixed.scale(&-f.one()))]
        }
        2 => vec![
            (0b001, e(0)),
            (0b010, e(1)),
            (0b100, e(2).scale(alpha).sub(&e(0))?),
            (0b011, e(2)),
            (0b110, e(2).scale(&-f.one())),
        ],
        v => return input(format!("unknown canonical variant {v} (expected 1 or 2)")),
    };
    MultiAffineMap::new(3, 3, f, coeffs)
}

/// True iff the line `{t u}` is not carried into a line. `u = (a, b, 1)` must have
/// `a, b` outside `{0, 1}`, `a != b`, and `{e1, e2, e3, (1,1,1), u}` 3-independent.
pub fn fifth_direction_refutation(map: &MultiAffineMap, u: &Vector) -> Result<bool> {
    let f = map.field();
    if map.n() != 3 || u.len() != 3 || u.field() != f {
        return input("fifth-direction check works on maps of three variables");
    }
    let (a, b) = (&u[0], &u[1]);
    let special = |s: &Scalar| s.is_zero() || s.is_one();
    if !u[2].is_one() || special(a) || special(b) || a == b {
        return input(format!("direction {u} is not of the form (a, b, 1) with distinct a, b outside {{0, 1}}"));
    }
    let mut five = axes_and_diagonal(f, 3);
    five.push(u.clone());
    if !is_j_independent(&five, 3)? {
        return input(format!("{u} makes the five directions 3-dependent"));
    }
    let origin = Vector::zeros(f, 3);
    match f.modulus() {
        None => Ok(!curve_lies_in_line(&restrict_to_line(map, &origin, u)?)),
        Some(p) => {
            let pts: Vec<Vector> = (0..p as i64)
                .map(|t| map.evaluate(&u.scale(&f.from_i64(t))))
                .collect::<Result<_>>()?;
            let diffs: Vec<Vector> = pts[1..].iter().map(|x| x.sub(&pts[0])).collect::<Result<_>>()?;
            let lead = diffs.iter().find(|d| !d.is_zero());
            Ok(lead.is_some_and(|l| diffs.iter().any(|d| !l.is_parallel(d))))
        }
    }
}

/// `(x1, x2, x3, x4 - x2 x3 + x2 x4)`.
pub fn twisted_r4_map(field: FieldSpec) -> MultiAffineMap {
    MultiAffineMap::from_coordinates(
        4,
        field,
        &[vec![(1, 1)], vec![(2, 1)], vec![(4, 1)], vec![(8, 1), (0b0110, -1), (0b1010, 1)]],
    )
    .expect("fixed coefficients are well formed")
}

/// `(x1, x2, x3, x4 + x1 x2 - x1 x3)`.
pub fn sharp_r4_map(field: FieldSpec) -> MultiAffineMap {
    MultiAffineMap::from_coordinates(
        4,
        field,
        &[vec![(1, 1)], vec![(2, 1)], vec![(4, 1)], vec![(8, 1), (0b0011, 1), (0b0101, -1)]],
    )
    .expect("fixed coefficients are well formed")
}

/// Two points of `(Z_p)^n` with equal images under the reduction of `map`, if any.
pub fn find_collision_mod(map: &MultiAffineMap, p: u64) -> Result<Option<(Vec<u32>, Vec<u32>)>> {
    let t = tabulate_with_budget(&map.reduce_into(FieldSpec::prime(p)?)?, DEFAULT_POINT_BUDGET)?;
    Ok(t.find_collision())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vector {
        Vector::from_i64(FieldSpec::RATIONAL, v)
    }

    #[test]
    fn small_systems() {
        let s2 = build_constraints(2).unwrap();
        assert_eq!(s2.kinds, vec![RowKind::Vanishing { mask: 0b11 }]);
        let s3 = build_constraints(3).unwrap();
        assert_eq!(s3.kinds.len(), 2);
        assert_eq!(s3.kinds[1], RowKind::Sum { k: 2, subset: vec![] });
        let row: Vec<usize> = (0..8).filter(|&j| !s3.rows.get(1, j).is_zero()).collect();
        assert_eq!(row, vec![0b011, 0b101, 0b110]);
        let s4 = build_constraints(4).unwrap();
        assert_eq!(s4.rows.rows(), 6);
        assert_eq!(s4.solution_dimension(), 10);
    }

    #[test]
    fn pattern_rows_agree() {
        for n in 2..=6 {
            assert!(pattern_rows_span_system(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn satisfaction() {
        let f = FieldSpec::RATIONAL;
        assert_eq!(satisfies_line_constraints(&example_r3_map(f)).unwrap(), None);
        let affine = MultiAffineMap::from_coordinates(2, f, &[vec![(0, 3), (1, 2)], vec![(2, -1)]]).unwrap();
        assert_eq!(satisfies_line_constraints(&affine).unwrap(), None);
        let saddle = MultiAffineMap::from_coordinates(2, f, &[vec![(1, 1)], vec![(2, 1)], vec![(3, 1)]]).unwrap();
        let v = satisfies_line_constraints(&saddle).unwrap().unwrap();
        assert_eq!((v.kind, v.coordinate), (RowKind::Vanishing { mask: 3 }, 2));
    }

    #[test]
    fn converse_examples() {
        let z5 = FieldSpec::prime(5).unwrap();
        assert!(converse_check(&sharp_r4_map(z5)).unwrap().ok());
        assert!(converse_check(&example_r3_map(FieldSpec::RATIONAL)).unwrap().ok());
        assert!(converse_check(&example_r3_map(z5)).unwrap().ok());
        let off = line_degree_failures(&example_r3_map(FieldSpec::RATIONAL), &[q(&[1, 0, 1])], 0).unwrap();
        assert!(!off.is_empty());
        assert!(converse_check(&twisted_r4_map(FieldSpec::RATIONAL)).unwrap().ok());
    }

    #[test]
    fn sharp_dim4_shape() {
        let spec = construct_sharp_map(4).unwrap();
        let masks: Vec<u32> = spec.alphas.iter().map(|(m, _)| *m).collect();
        assert_eq!(masks, vec![0b0011, 0b0101, 0b0110]);
        let a = &spec.alphas[0].1;
        assert!(!a.is_zero());
        assert_eq!(spec.alphas[1].1, -a);
        assert!(spec.alphas[2].1.is_zero());
        assert_eq!(spec.map.degree(), 2);
        assert_eq!(injective_mod(&spec.map, 3, DEFAULT_POINT_BUDGET).unwrap(), Some(true));
        assert!(construct_sharp_map(5).is_err());
    }

    #[test]
    fn sharp_guard_is_structural() {
        for dim in [4, 6, 8] {
            let spec = construct_sharp_map(dim).unwrap();
            let last = 1u32 << (dim - 1);
            assert!(spec.alphas.iter().all(|(m, _)| m & last == 0));
            assert_eq!(spec.map.degree(), dim / 2);
        }
    }

    #[test]
    fn canonical_forms() {
        let one = FieldSpec::RATIONAL.one();
        assert_eq!(canonical_r3_forms(&one, 1).unwrap(), example_r3_map(FieldSpec::RATIONAL));
        let v2 = canonical_r3_forms(&one, 2).unwrap();
        assert_eq!(v2.evaluate(&q(&[2, 3, 1])).unwrap(), q(&[1, 3, 4]));
        assert!(canonical_r3_forms(&FieldSpec::RATIONAL.zero(), 1).is_err());
        assert!(canonical_r3_forms(&one, 3).is_err());
    }

    #[test]
    fn fifth_direction() {
        let one = FieldSpec::RATIONAL.one();
        let u = q(&[2, 3, 1]);
        for variant in [1, 2] {
            let m = canonical_r3_forms(&one, variant).unwrap();
            assert!(fifth_direction_refutation(&m, &u).unwrap());
        }
        let id = MultiAffineMap::identity(FieldSpec::RATIONAL, 3).unwrap();
        assert!(!fifth_direction_refutation(&id, &u).unwrap());
        assert!(fifth_direction_refutation(&id, &q(&[1, 3, 1])).is_err());
        assert!(fifth_direction_refutation(&id, &q(&[2, 2, 1])).is_err());
        let z5 = FieldSpec::prime(5).unwrap();
        let m = canonical_r3_forms(&z5.one(), 1).unwrap();
        assert!(fifth_direction_refutation(&m, &Vector::from_i64(z5, &[2, 3, 1])).unwrap());
    }

    #[test]
    fn twisted_map_collides() {
        let (a, b) = find_collision_mod(&twisted_r4_map(FieldSpec::RATIONAL), 3).unwrap().unwrap();
        assert_ne!(a, b);
        assert_eq!(a[1], 2);
        assert_eq!(find_collision_mod(&sharp_r4_map(FieldSpec::RATIONAL), 3).unwrap(), None);
    }

    #[test]
    fn emit_shape() {
        let v = build_constraints(3).unwrap().to_json();
        assert_eq!(v["unknowns"].as_array().unwrap().len(), 8);
        assert_eq!(v["unknowns"][3], json!([1, 1, 0]));
        assert_eq!(v["rows"][0][7], json!("1"));
    }
}
