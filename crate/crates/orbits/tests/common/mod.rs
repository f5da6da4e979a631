//! Helpers shared by the integration tests.
//!
//! The centrepiece is an independent Jordan-type oracle: it simulates the
//! vector sequences `x^k e_i` by repeated application to coordinate vectors
//! and measures their spans with an elimination routine written here, sharing
//! no code with the library's matrix powers, rank computation or type
//! extraction.

use orbits::{ratio, ExactMatrix, FieldScalar, Partition};

/// Apply `x` to a coordinate vector, entry by entry.
fn apply(x: &ExactMatrix, v: &[FieldScalar]) -> Vec<FieldScalar> {
    let n = x.rows();
    (0..n)
        .map(|row| {
            let mut acc = FieldScalar::zero();
            for (col, value) in v.iter().enumerate() {
                if !value.is_zero() {
                    acc = &acc + &(x.at(row, col) * value);
                }
            }
            acc
        })
        .collect()
}

/// Dimension of the span of the given coordinate vectors, by forward
/// elimination on a local copy.
fn span_dim(vectors: &[Vec<FieldScalar>]) -> usize {
    let mut rows: Vec<Vec<FieldScalar>> =
        vectors.iter().filter(|v| v.iter().any(|e| !e.is_zero())).cloned().collect();
    let width = match rows.first() {
        Some(first) => first.len(),
        None => return 0,
    };
    let mut rank = 0usize;
    for col in 0..width {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for r in (rank + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].div(&pivot).expect("pivot is nonzero");
            for c in col..width {
                let delta = &factor * &rows[rank][c];
                rows[r][c] = &rows[r][c] + &(-&delta);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Jordan type of a nilpotent matrix from simulated vector sequences: the
/// vectors `x^k e_i` span the image of the k-th power, and the drop in span
/// dimension from one layer to the next counts the blocks of size at least k.
pub fn chain_oracle_type(x: &ExactMatrix) -> Partition {
    let n = x.rows();
    let mut layer: Vec<Vec<FieldScalar>> = (0..n)
        .map(|i| {
            let mut e = vec![FieldScalar::zero(); n];
            e[i] = FieldScalar::one();
            e
        })
        .collect();
    let mut span_dims = vec![n];
    for _ in 0..n {
        layer = layer.iter().map(|v| apply(x, v)).collect();
        let dim = span_dim(&layer);
        span_dims.push(dim);
        if dim == 0 {
            break;
        }
    }
    assert_eq!(*span_dims.last().unwrap(), 0, "matrix is not nilpotent");
    let mut conjugate_parts = Vec::new();
    for k in 1..span_dims.len() {
        let blocks_of_at_least_k = span_dims[k - 1] - span_dims[k];
        if blocks_of_at_least_k > 0 {
            conjugate_parts.push(blocks_of_at_least_k as u32);
        }
    }
    Partition::new(conjugate_parts).conjugate()
}

/// A deterministic pseudo-random strictly upper-triangular matrix with small
/// rational entries, driven by a caller-owned counter state.
pub fn upper_triangular_sample(n: usize, state: &mut u64) -> ExactMatrix {
    let mut next = || {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (*state >> 33) as i64
    };
    ExactMatrix::from_fn(n, n, |i, j| {
        if i >= j {
            return FieldScalar::zero();
        }
        let draw = next();
        if draw % 3 == 0 {
            FieldScalar::zero()
        } else {
            FieldScalar::from_rat(ratio(draw % 7 - 3, (draw % 4).abs() + 1))
        }
    })
}
