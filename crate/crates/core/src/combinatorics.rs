/// All `k`-subsets of `0..n` as increasing index lists, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Bitmasks over `n` bits with exactly `k` bits set, increasing.
pub fn masks_of_weight(n: usize, k: usize) -> Vec<u32> {
    (0..1u32 << n).filter(|m| m.count_ones() as usize == k).collect()
}

/// `n!`, saturating at `u64::MAX`.
pub fn factorial_saturating(n: u64) -> u64 {
    (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k)).unwrap_or(u64::MAX)
}

/// Advances `perm` to the next permutation in lexicographic order; false after the last.
pub fn next_permutation<T: Ord>(perm: &mut [T]) -> bool {
    let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
        return false;
    };
    let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).len(), 0);
        assert_eq!(combinations(4, 2)[0], vec![0, 1]);
        assert_eq!(combinations(4, 2)[5], vec![2, 3]);
    }

    #[test]
    fn permutations_enumerate_all() {
        let mut p = [0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(p, [3, 2, 1, 0]);
    }

    #[test]
    fn weights_and_factorials() {
        assert_eq!(masks_of_weight(4, 2), vec![3, 5, 6, 9, 10, 12]);
        assert_eq!(factorial_saturating(9), 362_880);
        assert_eq!(factorial_saturating(100), u64::MAX);
    }
}
