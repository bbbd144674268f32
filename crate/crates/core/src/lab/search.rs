use std::collections::HashSet;

use crate::combinatorics::factorial_saturating;
use crate::error::{Error, Result};
use crate::lab::check::CheckMode;
use crate::lab::family::LineFamily;
use crate::lab::lines::lines_in_direction;
use crate::lab::table::{FiniteMapTable, Grid};

/// Largest permitted `(p^n)!`; admits `p = 3, n = 2`.
pub const DEFAULT_SEARCH_BUDGET: u64 = 362_880;

struct Search<'a> {
    n_points: usize,
    all_lines: HashSet<Vec<usize>>,
    completes_at: Vec<Vec<&'a [usize]>>,
    image: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn accepts(&self, line: &[usize]) -> bool {
        let mut img: Vec<usize> = line.iter().map(|&i| self.image[i]).collect();
        img.sort_unstable();
        self.all_lines.contains(&img)
    }

    fn run(&mut self, pos: usize) {
        if pos == self.n_points {
            self.found.push(self.image.clone());
            return;
        }
        for v in 0..self.n_points {
            if self.used[v] {
                continue;
            }
            self.image[pos] = v;
            if self.completes_at[pos].iter().all(|l| self.accepts(l)) {
                self.used[v] = true;
                self.run(pos + 1);
                self.used[v] = false;
            }
        }
    }
}

/// Every bijection of `(Z_p)^n` sending each family line onto a line, in lexicographic table order.
///
/// Permutations are enumerated depth first and pruned as soon as a family line is fully assigned.
/// For bijections the two modes coincide, since `p` distinct points inside a line fill it.
pub fn exhaustive_bijection_search(
    p: u32,
    n: usize,
    fam: &LineFamily,
    _mode: CheckMode,
    budget: u64,
) -> Result<Vec<FiniteMapTable>> {
    let grid = Grid::new(p, n)?;
    if fam.n() != n {
        return Err(Error::Input(format!("family has dimension {}, search has {n}", fam.n())));
    }
    let n_points = grid.checked_size().unwrap_or(usize::MAX);
    let candidates = factorial_saturating(n_points as u64);
    if candidates > budget {
        return Err(Error::Resource(format!(
            "({p}^{n})! = {candidates} candidate bijections exceed the budget of {budget}"
        )));
    }

    let mut all_lines = HashSet::new();
    for i in 1..n_points {
        let d = grid.point(i);
        if d.iter().find(|&&x| x != 0) == Some(&1) {
            for l in lines_in_direction(&grid, &d)? {
                all_lines.insert(l.indices);
            }
        }
    }
    let family_lines: Vec<Vec<usize>> = fam
        .residues(p)?
        .iter()
        .map(|d| lines_in_direction(&grid, d))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .map(|l| l.indices)
        .collect();
    let mut completes_at: Vec<Vec<&[usize]>> = vec![Vec::new(); n_points];
    for l in &family_lines {
        completes_at[*l.last().expect("lines are nonempty")].push(l);
    }

    let mut search = Search {
        n_points,
        all_lines,
        completes_at,
        image: vec![0; n_points],
        used: vec![false; n_points],
        found: Vec::new(),
    };
    search.run(0);
    search
        .found
        .into_iter()
        .map(|img| {
            let values = img.into_iter().flat_map(|i| grid.point(i)).collect();
            FiniteMapTable::new(p, n, n, values)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::FieldSpec;

    #[test]
    fn vacuous_family_gives_all_permutations() {
        let fam = LineFamily::from_i64(1, &[]).unwrap();
        let all = exhaustive_bijection_search(3, 1, &fam, CheckMode::Onto, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].raw_values(), &[0, 1, 2]);
        assert_eq!(all[5].raw_values(), &[2, 1, 0]);
    }

    #[test]
    fn guard_rejects_large_spaces() {
        let fam = LineFamily::axes(FieldSpec::RATIONAL, 2);
        let err = exhaustive_bijection_search(5, 2, &fam, CheckMode::Onto, DEFAULT_SEARCH_BUDGET);
        assert!(matches!(err, Err(Error::Resource(_))));
    }

    #[test]
    fn full_line_family_on_z3_line_is_everything() {
        // On (Z_3)^1 the only line is the whole space.
        let fam = LineFamily::from_i64(1, &[&[1]]).unwrap();
        let all = exhaustive_bijection_search(3, 1, &fam, CheckMode::Onto, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(all.len(), 6);
    }
}
