use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::exact::FieldSpec;
use crate::lab::check::{check_family, check_parallelism, CheckMode};
use crate::lab::family::LineFamily;
use crate::lab::lines::{add_mod, rank_mod, ratio, scale_mod, sub_mod};
use crate::lab::table::FiniteMapTable;

/// `F(sum a_i u_i) = base + sum f_i(a_i) w_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalForm {
    pub p: u32,
    pub base: Vec<u32>,
    pub u: Vec<Vec<u32>>,
    pub w: Vec<Vec<u32>>,
    /// `f[i][a] = f_i(a)`.
    pub f: Vec<Vec<u32>>,
}

impl DiagonalForm {
    /// The domain point `sum a_i u_i`.
    pub fn point(&self, alpha: &[u32]) -> Vec<u32> {
        let len = self.base.len().min(self.u.first().map_or(0, Vec::len));
        let mut x = vec![0; len];
        for (a, u) in alpha.iter().zip(&self.u) {
            x = add_mod(&x, &scale_mod(*a, u, self.p), self.p);
        }
        x
    }

    /// `base + sum f_i(a_i) w_i`.
    pub fn value(&self, alpha: &[u32]) -> Vec<u32> {
        let mut y = self.base.clone();
        for ((a, w), f) in alpha.iter().zip(&self.w).zip(&self.f) {
            y = add_mod(&y, &scale_mod(f[*a as usize], w, self.p), self.p);
        }
        y
    }
}

/// `F(s e_1 + t e_2) - base = f(s) u1 + g(t) u2 + f(s) g(t) u3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneForm {
    pub p: u32,
    pub base: Vec<u32>,
    pub u1: Vec<u32>,
    pub u2: Vec<u32>,
    pub u3: Vec<u32>,
    pub f: Vec<u32>,
    pub g: Vec<u32>,
}

impl PlaneForm {
    pub fn value(&self, s: u32, t: u32) -> Vec<u32> {
        let p = self.p;
        let (fs, gt) = (self.f[s as usize], self.g[t as usize]);
        let mut y = add_mod(&self.base, &scale_mod(fs, &self.u1, p), p);
        y = add_mod(&y, &scale_mod(gt, &self.u2, p), p);
        add_mod(&y, &scale_mod((fs as u64 * gt as u64 % p as u64) as u32, &self.u3, p), p)
    }

    /// True iff the mixed term vanishes.
    pub fn is_separable(&self) -> bool {
        self.u3.iter().all(|&x| x == 0)
    }
}

/// Reads `h(a)` from `F(a v) - base = h(a) w`.
fn coordinate_table(table: &FiniteMapTable, v: &[u32], base: &[u32], w: &[u32]) -> Result<Vec<u32>> {
    let p = table.p();
    (0..p)
        .map(|a| {
            let d = sub_mod(table.value_at(&scale_mod(a, v, p)), base, p);
            ratio(&d, w, p).ok_or_else(|| {
                Error::Internal(format!("image of {a}*{v:?} is off the line through F(0) and F({v:?})"))
            })
        })
        .collect()
}

/// Recovers `u_i = v_i`, `w_i`, `f_i` and verifies the form on every grid point.
pub fn recover_diagonal_form(table: &FiniteMapTable, fam: &LineFamily) -> Result<DiagonalForm> {
    let (p, n) = (table.p(), table.n());
    if fam.n() != n || fam.len() != n {
        return input("diagonal form needs n directions in dimension n");
    }
    let u = fam.residues(p)?;
    if rank_mod(&u, p) != n {
        return input("family directions are not independent mod p");
    }
    if !table.is_injective() {
        return input("diagonal form needs an injective table");
    }
    if !check_family(table, fam, CheckMode::Onto)?.ok {
        return input("some family line is not mapped onto a line");
    }
    if !check_parallelism(table, fam)? {
        return input("family lines are not mapped onto parallel lines");
    }
    let base = table.value(0).to_vec();
    let w: Vec<Vec<u32>> = u.iter().map(|v| sub_mod(table.value_at(v), &base, p)).collect();
    let f = u
        .iter()
        .zip(&w)
        .map(|(v, wi)| coordinate_table(table, v, &base, wi))
        .collect::<Result<Vec<_>>>()?;
    let form = DiagonalForm { p, base, u, w, f };
    for alpha in table.grid().points() {
        if table.value_at(&form.point(&alpha)) != form.value(&alpha).as_slice() {
            return Err(Error::Internal(format!("diagonal form disagrees with the table at coefficients {alpha:?}")));
        }
    }
    Ok(form)
}

/// Recovers the plane form of an injective table on `(Z_p)^2` mapping `L(e_1, e_2)` onto lines.
pub fn recover_plane_form(table: &FiniteMapTable) -> Result<PlaneForm> {
    let p = table.p();
    if table.n() != 2 || table.m() < 2 {
        return input("plane form needs a table on (Z_p)^2 with at least two output coordinates");
    }
    if !table.is_injective() {
        return input("plane form needs an injective table");
    }
    let axes = LineFamily::axes(FieldSpec::RATIONAL, 2);
    if !check_family(table, &axes, CheckMode::Onto)?.ok {
        return input("axis-parallel lines are not all mapped onto lines");
    }
    let base = table.value(0).to_vec();
    let u1 = sub_mod(table.value_at(&[1, 0]), &base, p);
    let u2 = sub_mod(table.value_at(&[0, 1]), &base, p);
    let f = coordinate_table(table, &[1, 0], &base, &u1)?;
    let g = coordinate_table(table, &[0, 1], &base, &u2)?;
    let u3 = sub_mod(&sub_mod(&sub_mod(table.value_at(&[1, 1]), &base, p), &u1, p), &u2, p);
    let form = PlaneForm { p, base, u1, u2, u3, f, g };
    for s in 0..p {
        for t in 0..p {
            if table.value_at(&[s, t]) != form.value(s, t).as_slice() {
                return Err(Error::Internal(format!("plane form disagrees with the table at ({s}, {t})")));
            }
        }
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::table::DEFAULT_POINT_BUDGET;

    #[test]
    fn identity_diagonal() {
        let t = FiniteMapTable::identity(3, 2).unwrap();
        let d = recover_diagonal_form(&t, &LineFamily::axes(FieldSpec::RATIONAL, 2)).unwrap();
        assert_eq!(d.w, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(d.f, vec![vec![0, 1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn cube_map_is_recovered() {
        let cube = |x: u32| x * x * x % 5;
        let t = FiniteMapTable::from_fn(5, 2, 2, DEFAULT_POINT_BUDGET, |x| vec![cube(x[0]), x[1]]).unwrap();
        let d = recover_diagonal_form(&t, &LineFamily::axes(FieldSpec::RATIONAL, 2)).unwrap();
        assert_eq!(d.f[0], (0..5).map(cube).collect::<Vec<_>>());
        assert_eq!(d.f[1], vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn affine_bijection_with_preimage_axes() {
        // A = [[1,2],[3,4]] mod 5, b = (2,1). A^-1 = [[3,1],[4,2]].
        let t = FiniteMapTable::from_fn(5, 2, 2, DEFAULT_POINT_BUDGET, |x| {
            vec![(x[0] + 2 * x[1] + 2) % 5, (3 * x[0] + 4 * x[1] + 1) % 5]
        })
        .unwrap();
        let fam = LineFamily::from_i64(2, &[&[3, 4], &[1, 2]]).unwrap();
        let d = recover_diagonal_form(&t, &fam).unwrap();
        assert_eq!(d.base, vec![2, 1]);
        assert!(d.f.iter().all(|f| *f == vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn separable_and_paraboloid_planes() {
        let cube = |x: u32| x * x * x % 5;
        let t = FiniteMapTable::from_fn(5, 2, 2, DEFAULT_POINT_BUDGET, |x| vec![cube(x[0]), x[1]]).unwrap();
        let form = recover_plane_form(&t).unwrap();
        assert_eq!((form.u1.clone(), form.u2.clone()), (vec![1, 0], vec![0, 1]));
        assert!(form.is_separable());

        let t = FiniteMapTable::from_fn(5, 2, 3, DEFAULT_POINT_BUDGET, |x| vec![x[0], x[1], x[0] * x[1] % 5]).unwrap();
        let form = recover_plane_form(&t).unwrap();
        assert_eq!(form.u3, vec![0, 0, 1]);
        assert!(!check_parallelism(&t, &LineFamily::axes(FieldSpec::RATIONAL, 2)).unwrap());

        let t = FiniteMapTable::identity(3, 2).unwrap();
        let form = recover_plane_form(&t).unwrap();
        assert_eq!(form.f, vec![0, 1, 2]);
        assert_eq!(form.g, vec![0, 1, 2]);
        assert!(form.is_separable());
    }

    #[test]
    fn preconditions_are_enforced() {
        let t = FiniteMapTable::from_fn(3, 2, 2, DEFAULT_POINT_BUDGET, |x| vec![x[0], x[0] * x[0] + x[1]]).unwrap();
        assert!(matches!(recover_plane_form(&t), Err(Error::Input(_))));
    }
}
