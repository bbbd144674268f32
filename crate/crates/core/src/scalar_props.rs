use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::combinatorics::{factorial_saturating, next_permutation};
use crate::error::{input, Error, Result};
use crate::exact::is_prime;
use crate::lab::lines::{add_mod, inv_mod, rank_mod, scale_mod, sub_mod};
use crate::lab::table::Grid;

/// Default cap on enumerated candidates for the scalar checks.
pub const DEFAULT_SCALAR_BUDGET: u64 = 1_000_000;

/// A function `Z_p -> Z_p` by its values `f(0), ..., f(p-1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ScalarFunctionTable {
    pub p: u32,
    pub values: Vec<u32>,
}

impl ScalarFunctionTable {
    pub fn new(p: u32, values: Vec<u32>) -> Result<ScalarFunctionTable> {
        check_prime(p)?;
        if values.len() != p as usize || values.iter().any(|&v| v >= p) {
            return input(format!("a function on Z_{p} needs {p} reduced values"));
        }
        Ok(ScalarFunctionTable { p, values })
    }

    pub fn from_fn(p: u32, f: impl Fn(u64) -> u64) -> Result<ScalarFunctionTable> {
        ScalarFunctionTable::new(p, (0..p as u64).map(|x| (f(x) % p as u64) as u32).collect())
    }

    pub fn identity(p: u32) -> Result<ScalarFunctionTable> {
        ScalarFunctionTable::from_fn(p, |x| x)
    }

    /// `x -> x^k`.
    pub fn power(p: u32, k: u64) -> Result<ScalarFunctionTable> {
        ScalarFunctionTable::from_fn(p, |x| pow_mod(x, k, p as u64))
    }

    pub fn at(&self, x: u32) -> u32 {
        self.values[(x % self.p) as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.iter().collect::<BTreeSet<_>>().len() == self.values.len()
    }
}

fn check_prime(p: u32) -> Result<()> {
    if p == 2 || !is_prime(p as u64) {
        return input(format!("{p} is not an odd prime"));
    }
    Ok(())
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn add(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

fn mul(a: u32, b: u32, p: u32) -> u32 {
    (a as u64 * b as u64 % p as u64) as u32
}

fn sub(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

/// `f(a + b) = f(a) + f(b)` for all pairs.
pub fn is_additive(f: &ScalarFunctionTable) -> bool {
    let p = f.p;
    (0..p).all(|a| (0..p).all(|b| f.at(add(a, b, p)) == add(f.at(a), f.at(b), p)))
}

/// `f(ab) = f(a) f(b)` for all pairs.
pub fn is_multiplicative(f: &ScalarFunctionTable) -> bool {
    let p = f.p;
    (0..p).all(|a| (0..p).all(|b| f.at(mul(a, b, p)) == mul(f.at(a), f.at(b), p)))
}

fn guard(count: u64, budget: u64, what: &str) -> Result<()> {
    if count > budget {
        return Err(Error::Resource(format!("{count} {what} exceed the budget of {budget}")));
    }
    Ok(())
}

/// Every bijection of `Z_p` with `f(0) = 0` and `f(1) = 1`, in lexicographic order.
pub fn normalized_bijections(p: u32, budget: u64) -> Result<Vec<ScalarFunctionTable>> {
    check_prime(p)?;
    guard(factorial_saturating(p as u64 - 2), budget, "normalized bijections")?;
    let mut rest: Vec<u32> = (2..p).collect();
    let mut out = Vec::new();
    loop {
        let mut values = vec![0, 1];
        values.extend_from_slice(&rest);
        out.push(ScalarFunctionTable { p, values });
        if !next_permutation(&mut rest) {
            break;
        }
    }
    Ok(out)
}

/// True iff for every `b` the ratio `(f(a + b) - f(b)) / f(a)` takes one value over all `a != 0`.
pub fn satisfies_ratio_criterion(f: &ScalarFunctionTable) -> bool {
    let p = f.p;
    (0..p).all(|b| {
        let ratios: BTreeSet<u32> = (1..p)
            .map(|a| mul(sub(f.at(add(a, b, p)), f.at(b), p), inv_mod(f.at(a), p), p))
            .collect();
        ratios.len() == 1
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioReport {
    pub p: u32,
    pub candidates: usize,
    pub passing: Vec<ScalarFunctionTable>,
    pub additive: Vec<ScalarFunctionTable>,
    /// The passing set equals the additive set.
    pub characterizes: bool,
}

/// Over all normalized bijections, compares the maps passing the ratio criterion with the additive ones.
pub fn ratio_criterion_implies_additive(p: u32, budget: u64) -> Result<RatioReport> {
    let all = normalized_bijections(p, budget)?;
    let passing: Vec<_> = all.iter().filter(|f| satisfies_ratio_criterion(f)).cloned().collect();
    let additive: Vec<_> = all.iter().filter(|f| is_additive(f)).cloned().collect();
    Ok(RatioReport {
        p,
        candidates: all.len(),
        characterizes: passing == additive,
        passing,
        additive,
    })
}

/// Exponents `1 <= k < p - 1` with `gcd(k, p - 1) = 1`: the power maps that permute `Z_p`.
pub fn multiplicative_injection_exponents(p: u32) -> Result<Vec<u64>> {
    check_prime(p)?;
    let order = p as u64 - 1;
    Ok((1..order.max(2)).filter(|k| k.gcd(&order) == 1).collect())
}

/// Multiplicative injections of `Z_p` found by scanning every permutation.
pub fn multiplicative_injections_brute_force(p: u32, budget: u64) -> Result<Vec<ScalarFunctionTable>> {
    check_prime(p)?;
    guard(factorial_saturating(p as u64), budget, "permutations")?;
    let mut perm: Vec<u32> = (0..p).collect();
    let mut out = Vec::new();
    loop {
        let f = ScalarFunctionTable { p, values: perm.clone() };
        if is_multiplicative(&f) {
            out.push(f);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

/// Which shifted companion of `f` is tested for multiplicativity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Companion {
    /// `g(x) = f(x + 1) - 1`.
    Shifted,
    /// `g(x) = (f(x + 1) - 1) / (f(2) - 1)`, defined only when `f(2) != 1`.
    Scaled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultIdentityReport {
    pub p: u32,
    pub companion: Companion,
    /// Power-map exponents of the multiplicative injections.
    pub exponents: Vec<u64>,
    /// Power maps agree with a scan over all permutations; `None` when the scan was skipped.
    pub brute_force_agrees: Option<bool>,
    /// Exponents whose companion is multiplicative.
    pub passing: Vec<u64>,
    /// Exponents with `f(2) = 1`, for which the scaled companion is undefined.
    pub excluded_f2_one: Vec<u64>,
    /// Only the identity passes.
    pub only_identity: bool,
}

/// Largest prime for which the power-map enumeration is cross-checked against all permutations.
pub const BRUTE_FORCE_MAX_P: u32 = 7;

/// For each multiplicative injection `f`, tests whether the chosen companion `g` is multiplicative.
pub fn verify_mult_identity_lemmas(p: u32, companion: Companion) -> Result<MultIdentityReport> {
    let exponents = multiplicative_injection_exponents(p)?;
    let powers: Vec<ScalarFunctionTable> =
        exponents.iter().map(|&k| ScalarFunctionTable::power(p, k)).collect::<Result<_>>()?;
    let brute_force_agrees = if p <= BRUTE_FORCE_MAX_P {
        let mut structural = powers.clone();
        structural.sort();
        Some(multiplicative_injections_brute_force(p, DEFAULT_SCALAR_BUDGET)? == structural)
    } else {
        None
    };
    let mut passing = Vec::new();
    let mut excluded_f2_one = Vec::new();
    for (f, &k) in powers.iter().zip(&exponents) {
        let denom = match companion {
            Companion::Shifted => 1,
            Companion::Scaled => {
                let d = sub(f.at(2), 1, p);
                if d == 0 {
                    excluded_f2_one.push(k);
                    continue;
                }
                inv_mod(d, p)
            }
        };
        let g = ScalarFunctionTable::from_fn(p, |x| {
            mul(sub(f.at(add(x as u32, 1, p)), 1, p), denom, p) as u64
        })?;
        if is_multiplicative(&g) {
            passing.push(k);
        }
    }
    Ok(MultIdentityReport {
        p,
        companion,
        only_identity: passing == [1],
        exponents,
        brute_force_agrees,
        passing,
        excluded_f2_one,
    })
}

/// Additive bijections with `f(1) = 1`, by depth-first search with additivity pruning.
pub fn additive_bijections_fixing_one(p: u32) -> Result<Vec<ScalarFunctionTable>> {
    check_prime(p)?;
    fn extend(p: u32, vals: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<ScalarFunctionTable>) {
        let x = vals.len() as u32;
        if x == p {
            out.push(ScalarFunctionTable { p, values: vals.clone() });
            return;
        }
        for v in 0..p {
            if used[v as usize] || (x == 1 && v != 1) {
                continue;
            }
            vals.push(v);
            let ok = (0..=x).all(|a| {
                let b = x - a;
                let s = add(a, b, p);
                // only pairs whose sum is already assigned
                s > x || vals[s as usize] == add(vals[a as usize], vals[b as usize], p)
            }) && (0..x).all(|a| {
                let s = add(a, x, p);
                s > x || vals[s as usize] == add(vals[a as usize], vals[x as usize], p)
            });
            if ok {
                used[v as usize] = true;
                extend(p, vals, used, out);
                used[v as usize] = false;
            }
            vals.pop();
        }
    }
    let mut out = Vec::new();
    extend(p, &mut Vec::with_capacity(p as usize), &mut vec![false; p as usize], &mut out);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diag2Report {
    pub p: u32,
    pub x0: Vec<u32>,
    pub candidates: usize,
    /// Surviving `(f_1, f_2)` pairs.
    pub survivors: Vec<(Vec<u32>, Vec<u32>)>,
    pub only_identity: bool,
}

fn lines_through(grid: &Grid, x: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let p = grid.p;
    (1..grid.size())
        .map(|i| grid.point(i))
        .filter(|d| d.iter().find(|&&c| c != 0) == Some(&1))
        .map(|d| (0..p).map(|t| add_mod(x, &scale_mod(t, &d, p), p)).collect())
        .collect()
}

fn collinear(points: &[Vec<u32>], p: u32) -> bool {
    let diffs: Vec<Vec<u32>> = points.iter().map(|q| sub_mod(q, &points[0], p)).collect();
    rank_mod(&diffs, p) <= 1
}

/// Among diagonal maps `(x_1, x_2) -> (f_1(x_1), f_2(x_2))` with normalized bijections `f_i`,
/// keeps those sending every line through 0 and every line through `x0` into a line.
pub fn verify_diag2str(p: u32, n: usize, x0: &[u32], budget: u64) -> Result<Diag2Report> {
    if n != 2 {
        return input("the diagonal check is implemented for n = 2");
    }
    if x0.len() != 2 || x0.iter().any(|&c| c > 1) || x0.iter().all(|&c| c == 0) {
        return input("x0 must be a nonzero 0/1 vector of length 2");
    }
    let single = factorial_saturating(p as u64 - 2);
    guard(single.saturating_mul(single), budget, "diagonal candidates")?;
    let fs = normalized_bijections(p, budget)?;
    let grid = Grid::new(p, 2)?;
    let mut lines = lines_through(&grid, &[0, 0]);
    lines.extend(lines_through(&grid, x0));
    let mut survivors = Vec::new();
    for f1 in &fs {
        for f2 in &fs {
            let ok = lines.iter().all(|line| {
                let img: Vec<Vec<u32>> = line.iter().map(|x| vec![f1.at(x[0]), f2.at(x[1])]).collect();
                collinear(&img, p)
            });
            if ok {
                survivors.push((f1.values.clone(), f2.values.clone()));
            }
        }
    }
    let id: Vec<u32> = (0..p).collect();
    Ok(Diag2Report {
        p,
        x0: x0.to_vec(),
        candidates: fs.len() * fs.len(),
        only_identity: survivors == [(id.clone(), id)],
        survivors,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Add1Report {
    pub p: u32,
    pub x0: Vec<u32>,
    pub matrices: usize,
    pub bijections: usize,
    /// Every bijective matrix map is additive, sends lines through `x0` into lines, and is affine.
    pub all_pass: bool,
}

/// Enumerates all `2 x 2` matrices over `Z_p`, keeps the bijective ones, and checks each on the
/// lines through `x0`.
pub fn verify_add1str(p: u32, n: usize, x0: &[u32], budget: u64) -> Result<Add1Report> {
    if n != 2 {
        return input("the additive check is implemented for n = 2");
    }
    if x0.len() != 2 {
        return input("x0 must have length 2");
    }
    let grid = Grid::new(p, 2)?;
    let count = (p as u64).pow(4);
    guard(count, budget, "matrices")?;
    let x0: Vec<u32> = x0.iter().map(|&c| c % p).collect();
    let lines = lines_through(&grid, &x0);
    let mut bijections = 0;
    let mut all_pass = true;
    let m4 = Grid::new(p, 4)?;
    for e in m4.points() {
        let apply = |x: &[u32]| {
            vec![
                add(mul(e[0], x[0], p), mul(e[1], x[1], p), p),
                add(mul(e[2], x[0], p), mul(e[3], x[1], p), p),
            ]
        };
        let image: BTreeSet<Vec<u32>> = grid.points().map(|x| apply(&x)).collect();
        if image.len() != grid.size() {
            continue;
        }
        bijections += 1;
        let additive = grid.points().all(|x| {
            grid.points().all(|y| apply(&add_mod(&x, &y, p)) == add_mod(&apply(&x), &apply(&y), p))
        });
        let lines_ok = lines.iter().all(|l| collinear(&l.iter().map(|x| apply(x)).collect::<Vec<_>>(), p));
        all_pass &= additive && lines_ok;
    }
    Ok(Add1Report {
        p,
        x0,
        matrices: count as usize,
        bijections,
        all_pass,
    })
}
