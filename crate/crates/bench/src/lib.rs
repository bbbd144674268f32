//! Fixtures shared by the benches.

use linemap_core::constraints::example_r3_map;
use linemap_core::multiaffine::tabulate;
use linemap_core::{FieldSpec, FiniteMapTable, Matrix};

/// The example map of three variables tabulated over `Z_5`.
pub fn example_table() -> FiniteMapTable {
    tabulate(&example_r3_map(FieldSpec::prime(5).expect("5 is prime"))).expect("125 points fit the budget")
}

/// A dense `size x size` integer matrix with full rank over the rationals.
pub fn dense_matrix(field: FieldSpec, size: usize) -> Matrix {
    let rows: Vec<Vec<i64>> = (0..size)
        .map(|i| (0..size).map(|j| if i == j { 2 + i as i64 } else { ((i * 7 + j * 3) % 5) as i64 - 2 }).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Matrix::from_i64(field, &refs).expect("rows are square")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        assert!(example_table().is_bijection());
        assert_eq!(dense_matrix(FieldSpec::RATIONAL, 6).rank(), 6);
    }
}
