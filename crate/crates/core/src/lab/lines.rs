use crate::error::{input, Result};
use crate::lab::table::Grid;

/// `a^-1 mod p` for `a != 0`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    let (p64, mut base, mut e, mut acc) = (p as u64, a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}

pub fn sub_mod(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| ((x as u64 + p as u64 - y as u64) % p as u64) as u32).collect()
}

pub fn add_mod(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| ((x as u64 + y as u64) % p as u64) as u32).collect()
}

pub fn scale_mod(c: u32, a: &[u32], p: u32) -> Vec<u32> {
    a.iter().map(|&x| (c as u64 * x as u64 % p as u64) as u32).collect()
}

/// Scales `d` so its first nonzero entry is 1. Zero stays zero.
pub fn normalize(d: &[u32], p: u32) -> Vec<u32> {
    match d.iter().find(|&&x| x != 0) {
        None => d.to_vec(),
        Some(&lead) => scale_mod(inv_mod(lead, p), d, p),
    }
}

/// `lambda` with `e = lambda * d`, if one exists. `d` must be nonzero.
pub fn ratio(e: &[u32], d: &[u32], p: u32) -> Option<u32> {
    let k = d.iter().position(|&x| x != 0)?;
    let lambda = (e[k] as u64 * inv_mod(d[k], p) as u64 % p as u64) as u32;
    (scale_mod(lambda, d, p) == e).then_some(lambda)
}

/// Rank of a list of vectors over `Z_p`.
pub fn rank_mod(vectors: &[Vec<u32>], p: u32) -> usize {
    let mut rows: Vec<Vec<u64>> = vectors.iter().map(|v| v.iter().map(|&x| x as u64 % p as u64).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let p64 = p as u64;
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = inv_mod(rows[rank][c] as u32, p) as u64;
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p64;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p64 - f * y % p64) % p64;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// How a set of image points sits relative to the lines of `(Z_p)^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImageShape {
    /// Exactly the `p` points of one line, with this normalized direction.
    Line(Vec<u32>),
    /// Inside a line (or a single point) but not all of it.
    Inside,
    /// Not contained in any line.
    Scattered,
}

/// Shape of the image of a `p`-point line.
pub fn image_shape(points: &[&[u32]], p: u32) -> ImageShape {
    let first = points[0];
    let mut dir: Option<Vec<u32>> = None;
    for q in &points[1..] {
        let e = sub_mod(q, first, p);
        if e.iter().all(|&x| x == 0) {
            continue;
        }
        match &dir {
            None => dir = Some(normalize(&e, p)),
            Some(d) => {
                if ratio(&e, d, p).is_none() {
                    return ImageShape::Scattered;
                }
            }
        }
    }
    let mut sorted: Vec<&[u32]> = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    match dir {
        Some(d) if sorted.len() == p as usize => ImageShape::Line(d),
        _ => ImageShape::Inside,
    }
}

/// One line `{a + t b}` of `(Z_p)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    /// Lexicographically smallest point.
    pub base: Vec<u32>,
    /// Normalized direction.
    pub direction: Vec<u32>,
    /// Point indices in ascending order.
    pub indices: Vec<usize>,
}

impl Line {
    pub fn points(&self, grid: &Grid) -> Vec<Vec<u32>> {
        self.indices.iter().map(|&i| grid.point(i)).collect()
    }
}

/// The `p^(n-1)` lines of `(Z_p)^n` in direction `b`, ordered by base point.
pub fn lines_in_direction(grid: &Grid, b: &[u32]) -> Result<Vec<Line>> {
    if b.len() != grid.n {
        return input(format!("direction {b:?} does not have length {}", grid.n));
    }
    let b: Vec<u32> = b.iter().map(|&x| x % grid.p).collect();
    if b.iter().all(|&x| x == 0) {
        return input("line direction must be nonzero mod p");
    }
    let direction = normalize(&b, grid.p);
    let size = grid.within_budget(usize::MAX)?;
    let mut seen = vec![false; size];
    let mut lines = Vec::with_capacity(size / grid.p as usize);
    for start in 0..size {
        if seen[start] {
            continue;
        }
        let base = grid.point(start);
        let mut x = base.clone();
        let mut indices = Vec::with_capacity(grid.p as usize);
        for _ in 0..grid.p {
            let i = grid.index(&x);
            seen[i] = true;
            indices.push(i);
            x = add_mod(&x, &direction, grid.p);
        }
        indices.sort_unstable();
        lines.push(Line {
            base,
            direction: direction.clone(),
            indices,
        });
    }
    Ok(lines)
}

/// Each line as its list of points, for callers that want coordinates.
pub fn enumerate_lines(p: u32, n: usize, direction: &[u32]) -> Result<Vec<Vec<Vec<u32>>>> {
    let grid = Grid::new(p, n)?;
    Ok(lines_in_direction(&grid, direction)?.iter().map(|l| l.points(&grid)).collect())
}

/// All points `sum c_i v_i` for `c` ranging over `(Z_p)^k`.
pub fn span_points(vectors: &[Vec<u32>], len: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; len]];
    for v in vectors {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for x in &out {
            for c in 0..p {
                next.push(add_mod(x, &scale_mod(c, v, p), p));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_lines() {
        let lines = enumerate_lines(3, 2, &[1, 0]).unwrap();
        assert_eq!(lines.len(), 3);
        for (c, line) in lines.iter().enumerate() {
            let c = c as u32;
            assert_eq!(line, &vec![vec![0, c], vec![1, c], vec![2, c]]);
        }
    }

    #[test]
    fn diagonal_lines_are_cosets() {
        let lines = enumerate_lines(3, 2, &[1, 1]).unwrap();
        assert_eq!(lines.len(), 3);
        let mut firsts: Vec<u32> = lines
            .iter()
            .map(|l| l.iter().find(|x| x[0] == 0).unwrap()[1])
            .collect();
        firsts.sort();
        assert_eq!(firsts, vec![0, 1, 2]);
    }

    #[test]
    fn lines_partition_the_grid() {
        let g = Grid::new(5, 3).unwrap();
        let lines = lines_in_direction(&g, &[2, 0, 3]).unwrap();
        assert_eq!(lines.len(), 25);
        let mut all: Vec<usize> = lines.iter().flat_map(|l| l.indices.clone()).collect();
        all.sort();
        assert_eq!(all, (0..125).collect::<Vec<_>>());
        assert!(lines.iter().all(|l| l.indices.len() == 5 && l.direction == vec![1, 0, 4]));
        assert!(lines_in_direction(&g, &[0, 5, 0]).is_err());
    }

    #[test]
    fn shapes() {
        let p = 5;
        let line: Vec<Vec<u32>> = (0..5).map(|t| vec![t, 2 * t % 5]).collect();
        let refs: Vec<&[u32]> = line.iter().map(|v| v.as_slice()).collect();
        assert_eq!(image_shape(&refs, p), ImageShape::Line(vec![1, 2]));
        let folded: Vec<Vec<u32>> = (0..5).map(|t| vec![t * t % 5, 0]).collect();
        let refs: Vec<&[u32]> = folded.iter().map(|v| v.as_slice()).collect();
        assert_eq!(image_shape(&refs, p), ImageShape::Inside);
        let bent: Vec<Vec<u32>> = (0..5).map(|t| vec![t, t * t % 5]).collect();
        let refs: Vec<&[u32]> = bent.iter().map(|v| v.as_slice()).collect();
        assert_eq!(image_shape(&refs, p), ImageShape::Scattered);
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(inv_mod(3, 7), 5);
        assert_eq!(normalize(&[0, 3, 1], 7), vec![0, 1, 5]);
        assert_eq!(ratio(&[0, 6, 2], &[0, 3, 1], 7), Some(2));
        assert_eq!(ratio(&[1, 6, 2], &[0, 3, 1], 7), None);
        assert_eq!(span_points(&[vec![1, 0], vec![0, 1]], 2, 3).len(), 9);
        assert_eq!(rank_mod(&[vec![1, 2, 0], vec![2, 4, 0], vec![0, 0, 3]], 5), 2);
        assert_eq!(rank_mod(&[vec![1, 1], vec![1, 2]], 3), 2);
    }
}
