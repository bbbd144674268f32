use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::combinations;
use crate::error::{input, Error, Result};
use crate::exact::{is_j_independent, FieldSpec, Matrix, Vector};
use crate::lab::check::{CheckMode, ViolationReason};
use crate::lab::lines::{add_mod, normalize, rank_mod, scale_mod};
use crate::lab::table::{residues, FiniteMapTable, Grid, DEFAULT_POINT_BUDGET};

/// A point of projective space, stored by homogeneous coordinates whose first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vector,
}

impl ProjPoint {
    pub fn new(v: Vector) -> Result<ProjPoint> {
        if v.is_empty() || v.is_zero() {
            return input("homogeneous coordinates must not all vanish");
        }
        Ok(ProjPoint { coords: v.normalized() })
    }

    pub fn from_i64(field: FieldSpec, coords: &[i64]) -> Result<ProjPoint> {
        ProjPoint::new(Vector::from_i64(field, coords))
    }

    /// The standard frame `e_1, ..., e_{n+1}, [1 : ... : 1]` of projective `n`-space.
    pub fn standard_frame(field: FieldSpec, n: usize) -> Vec<ProjPoint> {
        let mut pts: Vec<ProjPoint> = (0..=n)
            .map(|i| ProjPoint { coords: Vector::unit(field, n + 1, i) })
            .collect();
        pts.push(ProjPoint { coords: Vector::ones(field, n + 1) });
        pts
    }

    /// The normalized lift.
    pub fn coords(&self) -> &Vector {
        &self.coords
    }

    /// Projective dimension `n` (the lift has `n + 1` coordinates).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn field(&self) -> FieldSpec {
        self.coords.field()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

fn same_space(points: &[ProjPoint]) -> Result<()> {
    if let Some(first) = points.first() {
        if points.iter().any(|q| q.dim() != first.dim() || q.field() != first.field()) {
            return input("points live in different projective spaces");
        }
    }
    Ok(())
}

/// True iff every `k <= n + 1` of the lifts are linearly independent.
pub fn proj_general_position(points: &[ProjPoint]) -> Result<bool> {
    same_space(points)?;
    let Some(first) = points.first() else {
        return Ok(true);
    };
    let lifts: Vec<Vector> = points.iter().map(|q| q.coords.clone()).collect();
    if lifts.iter().collect::<BTreeSet<_>>().len() != lifts.len() {
        return Ok(false);
    }
    is_j_independent(&lifts, (first.dim() + 1).min(points.len()))
}

/// An invertible matrix up to scaling, canonicalized so its first nonzero entry (row-major) is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjLinearMap {
    matrix: Matrix,
}

impl ProjLinearMap {
    pub fn new(matrix: Matrix) -> Result<ProjLinearMap> {
        if matrix.rows() != matrix.cols() || matrix.rows() < 2 {
            return input("projective maps need a square matrix of size at least 2");
        }
        if matrix.determinant()?.is_zero() {
            return input("projective maps need an invertible matrix");
        }
        let n = matrix.rows();
        let lead = (0..n * n)
            .map(|k| matrix.get(k / n, k % n))
            .find(|s| !s.is_zero())
            .expect("invertible matrices are nonzero")
            .clone();
        let inv = lead.inv().expect("leading entry is nonzero");
        Ok(ProjLinearMap { matrix: matrix.scale(&inv) })
    }

    pub fn identity(field: FieldSpec, n: usize) -> ProjLinearMap {
        ProjLinearMap { matrix: Matrix::identity(field, n + 1) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Projective dimension acted on.
    pub fn dim(&self) -> usize {
        self.matrix.rows() - 1
    }

    pub fn apply(&self, x: &ProjPoint) -> Result<ProjPoint> {
        ProjPoint::new(self.matrix.mul_vec(&x.coords)?)
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &ProjLinearMap) -> Result<ProjLinearMap> {
        ProjLinearMap::new(self.matrix.mul(&inner.matrix)?)
    }

    pub fn inverse(&self) -> Result<ProjLinearMap> {
        let inv = self.matrix.inverse()?.ok_or_else(|| Error::Internal("stored matrix lost invertibility".into()))?;
        ProjLinearMap::new(inv)
    }

    pub fn to_json(&self) -> Value {
        self.matrix.to_json()
    }
}

impl fmt::Display for ProjLinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// `P = A diag(lambda)` with columns `a_1..a_{n+1}` and `A lambda = a_{n+2}`.
fn frame_matrix(points: &[ProjPoint]) -> Result<Matrix> {
    let n1 = points[0].dim() + 1;
    let cols: Vec<Vector> = points[..n1].iter().map(|q| q.coords.clone()).collect();
    let a = Matrix::from_columns(&cols)?;
    let lambda = a
        .solve(&points[n1].coords)?
        .ok_or_else(|| Error::Internal("frame lifts admit no scaling".into()))?;
    let scaled: Vec<Vector> = cols.iter().zip(lambda.iter()).map(|(c, l)| c.scale(l)).collect();
    Matrix::from_columns(&scaled)
}

/// The unique projective-linear map sending `src[i]` to `dst[i]` for `n + 2` points in general position.
pub fn transform_from_correspondence(src: &[ProjPoint], dst: &[ProjPoint]) -> Result<ProjLinearMap> {
    let Some(first) = src.first() else {
        return input("empty correspondence");
    };
    let n = first.dim();
    if n == 0 || src.len() != n + 2 || dst.len() != n + 2 {
        return input(format!("a correspondence in dimension {n} needs exactly {} point pairs", n + 2));
    }
    let mut all = src.to_vec();
    all.extend_from_slice(dst);
    same_space(&all)?;
    if !proj_general_position(src)? || !proj_general_position(dst)? {
        return input("correspondence points are not in general position");
    }
    let p = frame_matrix(src)?;
    let q = frame_matrix(dst)?;
    let p_inv = p.inverse()?.ok_or_else(|| Error::Internal("frame matrix is singular".into()))?;
    let map = ProjLinearMap::new(q.mul(&p_inv)?)?;
    for (s, d) in src.iter().zip(dst) {
        if map.apply(s)? != *d {
            return Err(Error::Internal(format!("constructed map sends {s} to {} instead of {d}", map.apply(s)?)));
        }
    }
    Ok(map)
}

/// The projective map induced by `x -> D x + b` on the affine chart `[x : 1]`, matrix `(D b; 0 1)`.
pub fn affine_lift(d: &Matrix, b: &Vector) -> Result<ProjLinearMap> {
    let n = d.rows();
    if d.cols() != n || b.len() != n || b.field() != d.field() {
        return input("affine lift needs a square matrix and a matching offset");
    }
    let f = d.field();
    let mut m = Matrix::zeros(f, n + 1, n + 1);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, d.get(i, j).clone());
        }
        m.set(i, n, b[i].clone());
    }
    m.set(n, n, f.one());
    ProjLinearMap::new(m)
}

/// `x -> [x : 1]`.
pub fn embed_affine(x: &Vector) -> ProjPoint {
    let mut coords = x.entries().to_vec();
    coords.push(x.field().one());
    ProjPoint::new(Vector::new(x.field(), coords).expect("entries share the field")).expect("last coordinate is 1")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Split {
    /// `[x : 1]`, returned as `x`.
    Affine(Vector),
    /// `[y : 0]`, returned as the point `[y]` one dimension down.
    Frontier(ProjPoint),
}

/// Inverse of [`embed_affine`], classifying points with last coordinate zero as frontier points.
pub fn split(point: &ProjPoint) -> Split {
    let c = point.coords.entries();
    let (last, head) = c.split_last().expect("lifts are nonempty");
    let f = point.field();
    let head = Vector::new(f, head.to_vec()).expect("entries share the field");
    if last.is_zero() {
        Split::Frontier(ProjPoint { coords: head })
    } else {
        let inv = last.inv().expect("nonzero");
        Split::Affine(head.scale(&inv))
    }
}

/// `PG(n, p)` with points indexed in lexicographic order of their normalized coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectiveSpace {
    pub p: u32,
    pub n: usize,
}

impl ProjectiveSpace {
    pub fn new(p: u32, n: usize) -> Result<ProjectiveSpace> {
        let grid = Grid::new(p, n + 1)?;
        grid.within_budget(DEFAULT_POINT_BUDGET)?;
        Ok(ProjectiveSpace { p, n })
    }

    /// `(p^(n+1) - 1) / (p - 1)`.
    pub fn size(&self) -> usize {
        ((self.p as usize).pow(self.n as u32 + 1) - 1) / (self.p as usize - 1)
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec::prime(self.p as u64).expect("odd prime")
    }

    /// Index of the point with these homogeneous coordinates, or `None` for the zero vector.
    pub fn index(&self, coords: &[u32]) -> Option<usize> {
        let c = normalize(coords, self.p);
        let lead = c.iter().position(|&x| x != 0)?;
        let p = self.p as usize;
        let skipped = (p.pow((self.n - lead) as u32) - 1) / (p - 1);
        let tail = c[lead + 1..].iter().fold(0usize, |acc, &x| acc * p + x as usize);
        Some(skipped + tail)
    }

    pub fn point(&self, mut index: usize) -> Vec<u32> {
        let p = self.p as usize;
        let mut lead = self.n;
        loop {
            let block = p.pow((self.n - lead) as u32);
            if index < block {
                break;
            }
            index -= block;
            lead -= 1;
        }
        let mut c = vec![0u32; self.n + 1];
        c[lead] = 1;
        for slot in c[lead + 1..].iter_mut().rev() {
            *slot = (index % p) as u32;
            index /= p;
        }
        c
    }

    pub fn proj_point(&self, index: usize) -> ProjPoint {
        let c: Vec<i64> = self.point(index).iter().map(|&x| x as i64).collect();
        ProjPoint::from_i64(self.field(), &c).expect("indexed points are nonzero")
    }

    pub fn index_of(&self, point: &ProjPoint) -> Result<usize> {
        if point.field() != self.field() || point.dim() != self.n {
            return input(format!("{point} is not a point of PG({}, {})", self.n, self.p));
        }
        Ok(self.index(&residues(&point.coords)?).expect("projective points are nonzero"))
    }

    /// The `p + 1` points of the line through two distinct points, ascending.
    pub fn line_through(&self, i: usize, j: usize) -> Vec<usize> {
        let (x, y) = (self.point(i), self.point(j));
        let mut pts = vec![i];
        for t in 0..self.p {
            let z = add_mod(&y, &scale_mod(t, &x, self.p), self.p);
            pts.push(self.index(&z).expect("distinct points span a line"));
        }
        pts.sort_unstable();
        pts
    }

    /// All lines through point `i`, ascending.
    pub fn lines_through(&self, i: usize) -> Vec<Vec<usize>> {
        let mut lines = BTreeSet::new();
        for j in (0..self.size()).filter(|&j| j != i) {
            lines.insert(self.line_through(i, j));
        }
        lines.into_iter().collect()
    }

    /// Points lying in the span of the given points, ascending.
    pub fn span(&self, indices: &[usize]) -> Vec<usize> {
        let vs: Vec<Vec<u32>> = indices.iter().map(|&i| self.point(i)).collect();
        let mut out = BTreeSet::new();
        let mut acc = vec![vec![0u32; self.n + 1]];
        for v in &vs {
            acc = acc
                .iter()
                .flat_map(|x| (0..self.p).map(move |c| (x, c)))
                .map(|(x, c)| add_mod(x, &scale_mod(c, v, self.p), self.p))
                .collect();
        }
        for x in acc {
            if let Some(i) = self.index(&x) {
                out.insert(i);
            }
        }
        out.into_iter().collect()
    }

    fn rank(&self, indices: &[usize]) -> usize {
        let vs: Vec<Vec<u32>> = indices.iter().map(|&i| self.point(i)).collect();
        rank_mod(&vs, self.p)
    }
}

/// All lines of `PG(n, p)` through `point`, each as its `p + 1` points in canonical order.
pub fn lines_through(point: &ProjPoint, p: u32) -> Result<Vec<Vec<ProjPoint>>> {
    let space = ProjectiveSpace::new(p, point.dim())?;
    let i = space.index_of(point)?;
    Ok(space
        .lines_through(i)
        .into_iter()
        .map(|l| l.into_iter().map(|j| space.proj_point(j)).collect())
        .collect())
}

/// A self-map of `PG(n, p)` given by the image index of every point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjTable {
    space: ProjectiveSpace,
    values: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ProjTableFile {
    p: u32,
    n: usize,
    values: Vec<Vec<i64>>,
}

impl ProjTable {
    pub fn new(p: u32, n: usize, values: Vec<usize>) -> Result<ProjTable> {
        let space = ProjectiveSpace::new(p, n)?;
        if values.len() != space.size() || values.iter().any(|&v| v >= space.size()) {
            return input(format!("a table on PG({n}, {p}) needs {} valid point indices", space.size()));
        }
        Ok(ProjTable { space, values })
    }

    pub fn from_fn(p: u32, n: usize, mut f: impl FnMut(&[u32]) -> Vec<u32>) -> Result<ProjTable> {
        let space = ProjectiveSpace::new(p, n)?;
        let values = (0..space.size())
            .map(|i| {
                let y = f(&space.point(i));
                if y.len() != n + 1 {
                    return input("image has the wrong number of homogeneous coordinates");
                }
                space.index(&y).ok_or_else(|| Error::Input("image has all coordinates zero".into()))
            })
            .collect::<Result<_>>()?;
        Ok(ProjTable { space, values })
    }

    pub fn identity(p: u32, n: usize) -> Result<ProjTable> {
        ProjTable::from_fn(p, n, |x| x.to_vec())
    }

    pub fn from_linear(map: &ProjLinearMap) -> Result<ProjTable> {
        let p = map
            .matrix
            .field()
            .modulus()
            .ok_or_else(|| Error::Input("tables need a prime field".into()))? as u32;
        let space = ProjectiveSpace::new(p, map.dim())?;
        let values = (0..space.size())
            .map(|i| space.index_of(&map.apply(&space.proj_point(i))?))
            .collect::<Result<_>>()?;
        Ok(ProjTable { space, values })
    }

    /// Extends an affine table on `(Z_p)^n` by `[x : 1] -> [F(x) : 1]`, fixing every frontier point.
    pub fn extend_affine(table: &FiniteMapTable) -> Result<ProjTable> {
        if table.m() != table.n() {
            return input("affine extension needs a self-map of (Z_p)^n");
        }
        ProjTable::from_fn(table.p(), table.n(), |x| {
            let (last, head) = x.split_last().expect("nonempty");
            if *last == 0 {
                return x.to_vec();
            }
            let inv = crate::lab::lines::inv_mod(*last, table.p());
            let affine = scale_mod(inv, head, table.p());
            let mut y = table.value_at(&affine).to_vec();
            y.push(1);
            y
        })
    }

    pub fn space(&self) -> ProjectiveSpace {
        self.space
    }

    pub fn image(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_injective(&self) -> bool {
        self.values.iter().collect::<BTreeSet<_>>().len() == self.values.len()
    }

    /// The same table with the images of points `i` and `j` exchanged.
    pub fn with_swap(&self, i: usize, j: usize) -> ProjTable {
        let mut t = self.clone();
        t.values.swap(i, j);
        t
    }

    pub fn to_json(&self) -> Value {
        let values: Vec<Vec<u32>> = self.values.iter().map(|&v| self.space.point(v)).collect();
        json!({"p": self.space.p, "n": self.space.n, "values": values})
    }

    pub fn from_json_str(s: &str) -> Result<ProjTable> {
        let file: ProjTableFile =
            serde_json::from_str(s).map_err(|e| Error::Format(format!("projective table file: {e}")))?;
        let fmt = |e: Error| Error::Format(e.to_string());
        let space = ProjectiveSpace::new(file.p, file.n).map_err(fmt)?;
        if file.values.len() != space.size() {
            return Err(Error::Format(format!("expected {} entries, got {}", space.size(), file.values.len())));
        }
        let p = file.p as i64;
        let values = file
            .values
            .iter()
            .map(|v| {
                if v.len() != file.n + 1 {
                    return Err(Error::Format(format!("entry {v:?} needs {} coordinates", file.n + 1)));
                }
                let r: Vec<u32> = v.iter().map(|&x| x.rem_euclid(p) as u32).collect();
                space
                    .index(&r)
                    .ok_or_else(|| Error::Format(format!("entry {v:?} vanishes mod {p}")))
            })
            .collect::<Result<_>>()?;
        Ok(ProjTable { space, values })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjViolation {
    pub anchor: Vec<u32>,
    /// The offending line through the anchor, as normalized points.
    pub line: Vec<Vec<u32>>,
    pub reason: ViolationReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjReport {
    pub ok: bool,
    pub violations: Vec<ProjViolation>,
}

/// Checks that every line through every anchor lands in (into) or on (onto) a projective line.
pub fn check_projective_hypotheses(table: &ProjTable, anchors: &[ProjPoint], mode: CheckMode) -> Result<ProjReport> {
    if !table.is_injective() {
        return input("projective hypotheses are checked on injective tables");
    }
    let space = table.space;
    let mut violations = Vec::new();
    for anchor in anchors {
        let a = space.index_of(anchor)?;
        for line in space.lines_through(a) {
            let image: Vec<usize> = line.iter().map(|&i| table.image(i)).collect();
            let reason = if space.rank(&image) > 2 {
                ViolationReason::NotALine
            } else if mode == CheckMode::Onto && image.iter().collect::<BTreeSet<_>>().len() != line.len() {
                ViolationReason::NotOnto
            } else {
                continue;
            };
            violations.push(ProjViolation {
                anchor: space.point(a),
                line: line.iter().map(|&i| space.point(i)).collect(),
                reason,
            });
        }
    }
    Ok(ProjReport {
        ok: violations.is_empty(),
        violations,
    })
}

/// Which anchor arrangement a list of `n + 2` points realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnchorLayout {
    /// `p_1..p_{n+1}` in general position, `p_{n+2}` off the span of `p_1..p_n` and distinct from `p_{n+1}`.
    Frame,
    /// `p_1..p_{n+1}` on a hyperplane and in general position within it, `p_{n+2}` off that hyperplane.
    Hyperplane,
    Neither,
}

pub fn classify_anchors(points: &[ProjPoint]) -> Result<AnchorLayout> {
    same_space(points)?;
    let Some(first) = points.first() else {
        return input("no anchors given");
    };
    let n = first.dim();
    if points.len() != n + 2 {
        return input(format!("expected {} anchors in dimension {n}", n + 2));
    }
    let lifts: Vec<Vector> = points.iter().map(|q| q.coords.clone()).collect();
    let rank = |vs: &[Vector]| -> Result<usize> { Ok(Matrix::from_rows(vs)?.rank()) };
    let head = &lifts[..n + 1];
    let last = &lifts[n + 1];
    let mut head_n: Vec<Vector> = lifts[..n].to_vec();
    head_n.push(last.clone());
    if rank(head)? == n + 1 && (n == 0 || rank(&head_n)? == n + 1) && points[n + 1] != points[n] {
        return Ok(AnchorLayout::Frame);
    }
    if n >= 1 && rank(head)? == n && is_j_independent(head, n)? {
        let mut with_last = head.to_vec();
        with_last.push(last.clone());
        if rank(&with_last)? == n + 1 {
            return Ok(AnchorLayout::Hyperplane);
        }
    }
    Ok(AnchorLayout::Neither)
}

/// True iff for every subset of the anchors the image of its span is the span of its images.
pub fn preserves_spans(table: &ProjTable, anchors: &[usize]) -> bool {
    let space = table.space;
    (1..=anchors.len().min(space.n + 1)).all(|k| {
        combinations(anchors.len(), k).into_iter().all(|subset| {
            let pts: Vec<usize> = subset.iter().map(|&i| anchors[i]).collect();
            let imgs: Vec<usize> = pts.iter().map(|&i| table.image(i)).collect();
            let mut mapped: Vec<usize> = space.span(&pts).into_iter().map(|i| table.image(i)).collect();
            mapped.sort_unstable();
            mapped == space.span(&imgs)
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjDecision {
    /// The table is induced by this map.
    Linear(ProjLinearMap),
    /// The candidate built from `frame` disagrees with the table at point `witness`.
    NotLinear { frame: Vec<usize>, witness: usize },
    /// No `n + 2` points in general position have images in general position.
    NoFrame,
}

fn extends_generic(space: &ProjectiveSpace, chosen: &[usize], next: usize) -> bool {
    let n1 = space.n + 1;
    let size = chosen.len() + 1;
    if size <= n1 {
        let mut all = chosen.to_vec();
        all.push(next);
        return space.rank(&all) == size;
    }
    combinations(chosen.len(), n1 - 1).into_iter().all(|subset| {
        let mut pts: Vec<usize> = subset.iter().map(|&i| chosen[i]).collect();
        pts.push(next);
        space.rank(&pts) == n1
    })
}

fn find_frame(table: &ProjTable, chosen: &mut Vec<usize>, start: usize) -> bool {
    let space = table.space;
    if chosen.len() == space.n + 2 {
        return true;
    }
    for next in start..space.size() {
        let images: Vec<usize> = chosen.iter().map(|&i| table.image(i)).collect();
        if extends_generic(&space, chosen, next) && extends_generic(&space, &images, table.image(next)) {
            chosen.push(next);
            if find_frame(table, chosen, next + 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Decides whether an injective table is induced by a projective-linear map, using the
/// lexicographically first generic frame with generic images.
pub fn decide_projective_linear(table: &ProjTable) -> Result<ProjDecision> {
    if !table.is_injective() {
        return input("projective-linearity is decided for injective tables");
    }
    let space = table.space;
    let mut frame = Vec::with_capacity(space.n + 2);
    if !find_frame(table, &mut frame, 0) {
        return Ok(ProjDecision::NoFrame);
    }
    let src: Vec<ProjPoint> = frame.iter().map(|&i| space.proj_point(i)).collect();
    let dst: Vec<ProjPoint> = frame.iter().map(|&i| space.proj_point(table.image(i))).collect();
    let map = transform_from_correspondence(&src, &dst)?;
    let candidate = ProjTable::from_linear(&map)?;
    match (0..space.size()).find(|&i| candidate.image(i) != table.image(i)) {
        None => Ok(ProjDecision::Linear(map)),
        Some(witness) => Ok(ProjDecision::NotLinear { frame, witness }),
    }
}

/// Scalar helper for callers building matrices from integer rows.
pub fn matrix_mod(p: u32, rows: &[&[i64]]) -> Result<Matrix> {
    Matrix::from_i64(FieldSpec::prime(p as u64)?, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::RATIONAL
    }

    #[test]
    fn general_position_examples() {
        assert!(proj_general_position(&ProjPoint::standard_frame(q(), 2)).unwrap());
        let collinear: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [1, 1, 0]]
            .iter()
            .map(|c| ProjPoint::from_i64(q(), c).unwrap())
            .collect();
        assert!(!proj_general_position(&collinear).unwrap());
        let z3 = FieldSpec::prime(3).unwrap();
        let pg1: Vec<ProjPoint> = [[1, 0], [0, 1], [1, 1], [1, 2]]
            .iter()
            .map(|c| ProjPoint::from_i64(z3, c).unwrap())
            .collect();
        assert!(proj_general_position(&pg1).unwrap());
        let repeated = vec![pg1[0].clone(), pg1[1].clone(), pg1[0].clone()];
        assert!(!proj_general_position(&repeated).unwrap());
    }

    #[test]
    fn correspondence_examples() {
        let frame = ProjPoint::standard_frame(q(), 2);
        let id = transform_from_correspondence(&frame, &frame).unwrap();
        assert_eq!(id, ProjLinearMap::identity(q(), 2));

        let z3 = FieldSpec::prime(3).unwrap();
        let pts = |cs: &[[i64; 2]]| -> Vec<ProjPoint> { cs.iter().map(|c| ProjPoint::from_i64(z3, c).unwrap()).collect() };
        let swap = transform_from_correspondence(&pts(&[[1, 0], [0, 1], [1, 1]]), &pts(&[[0, 1], [1, 0], [1, 1]])).unwrap();
        assert_eq!(swap.matrix(), &Matrix::from_i64(z3, &[&[0, 1], &[1, 0]]).unwrap());
    }

    #[test]
    fn affine_lift_matches_embedding() {
        let d = Matrix::from_i64(q(), &[&[2, 0], &[0, 3]]).unwrap();
        let b = Vector::from_i64(q(), &[1, -1]);
        let m = affine_lift(&d, &b).unwrap();
        let frame: Vec<Vector> = vec![
            Vector::from_i64(q(), &[0, 0]),
            Vector::from_i64(q(), &[1, 0]),
            Vector::from_i64(q(), &[0, 1]),
            Vector::from_i64(q(), &[1, 1]),
        ];
        let src: Vec<ProjPoint> = frame.iter().map(embed_affine).collect();
        let dst: Vec<ProjPoint> = frame
            .iter()
            .map(|x| embed_affine(&d.mul_vec(x).unwrap().add(&b).unwrap()))
            .collect();
        assert_eq!(transform_from_correspondence(&src, &dst).unwrap(), m);
    }

    #[test]
    fn embedding_round_trip() {
        let origin = embed_affine(&Vector::from_i64(q(), &[0, 0]));
        assert_eq!(origin, ProjPoint::from_i64(q(), &[0, 0, 1]).unwrap());
        let frontier = ProjPoint::from_i64(q(), &[1, 2, 0]).unwrap();
        assert_eq!(split(&frontier), Split::Frontier(ProjPoint::from_i64(q(), &[1, 2]).unwrap()));
        let z3 = FieldSpec::prime(3).unwrap();
        for x in Grid::new(3, 2).unwrap().points() {
            let v = Vector::from_i64(z3, &[x[0] as i64, x[1] as i64]);
            assert_eq!(split(&embed_affine(&v)), Split::Affine(v));
        }
    }

    #[test]
    fn space_indexing() {
        for (p, n) in [(3, 1), (3, 2), (5, 2), (3, 3), (7, 2)] {
            let s = ProjectiveSpace::new(p, n).unwrap();
            let all: Vec<Vec<u32>> = (0..s.size()).map(|i| s.point(i)).collect();
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!((0..s.size()).all(|i| s.index(&s.point(i)) == Some(i)));
            assert_eq!(s.index(&scale_mod(2, &s.point(s.size() - 1), p)), Some(s.size() - 1));
        }
        assert_eq!(ProjectiveSpace::new(3, 1).unwrap().point(0), vec![0, 1]);
    }

    #[test]
    fn lines_through_counts() {
        let z3 = FieldSpec::prime(3).unwrap();
        let x = ProjPoint::from_i64(z3, &[1, 2, 0]).unwrap();
        let lines = lines_through(&x, 3).unwrap();
        assert_eq!(lines.len(), 4);
        assert!(lines.iter().all(|l| l.len() == 4 && l.contains(&x)));
        let y = ProjPoint::from_i64(z3, &[0, 1]).unwrap();
        assert_eq!(lines_through(&y, 3).unwrap().len(), 1);
    }

    #[test]
    fn hypotheses_and_decisions() {
        let m = ProjLinearMap::new(matrix_mod(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 0]]).unwrap()).unwrap();
        let t = ProjTable::from_linear(&m).unwrap();
        let anchors = ProjPoint::standard_frame(FieldSpec::prime(3).unwrap(), 2);
        assert!(check_projective_hypotheses(&t, &anchors, CheckMode::Onto).unwrap().ok);
        assert_eq!(decide_projective_linear(&t).unwrap(), ProjDecision::Linear(m));

        let bent = ProjTable::identity(3, 2).unwrap().with_swap(0, 5);
        assert!(!check_projective_hypotheses(&bent, &anchors, CheckMode::Onto).unwrap().ok);
        assert!(matches!(decide_projective_linear(&bent).unwrap(), ProjDecision::NotLinear { .. }));
    }

    #[test]
    fn anchor_layouts() {
        let frame = ProjPoint::standard_frame(q(), 2);
        assert_eq!(classify_anchors(&frame).unwrap(), AnchorLayout::Frame);
        let hyper: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]
            .iter()
            .map(|c| ProjPoint::from_i64(q(), c).unwrap())
            .collect();
        assert_eq!(classify_anchors(&hyper).unwrap(), AnchorLayout::Hyperplane);
        let bad: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0]]
            .iter()
            .map(|c| ProjPoint::from_i64(q(), c).unwrap())
            .collect();
        assert_eq!(classify_anchors(&bad).unwrap(), AnchorLayout::Neither);
    }

    #[test]
    fn table_json_round_trip() {
        let t = ProjTable::identity(3, 2).unwrap().with_swap(1, 2);
        assert_eq!(ProjTable::from_json_str(&t.to_json().to_string()).unwrap(), t);
        assert!(ProjTable::from_json_str(r#"{"p":3,"n":1,"values":[[0,1],[1,0],[1,1],[0,0]]}"#).is_err());
        let scaled = ProjTable::from_json_str(r#"{"p":3,"n":1,"values":[[0,2],[2,0],[1,1],[-1,1]]}"#).unwrap();
        assert_eq!(scaled, ProjTable::identity(3, 1).unwrap());
    }
}
