//! Small exact integer matrix helpers (row-major `Vec<i64>`, n ≤ 8).

/// n×n identity.
pub(crate) fn identity(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

pub(crate) fn mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

pub(crate) fn apply(n: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            out[i] += m[i * n + j] * v[j];
        }
    }
    out
}

/// Rank over the rationals by fraction-free (Bareiss) elimination in i128.
pub(crate) fn rank(n_rows: usize, n_cols: usize, m: &[i64]) -> usize {
    let mut a: Vec<i128> = m.iter().map(|&x| x as i128).collect();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..n_cols {
        // find a pivot row at or below `rank`
        let pivot = (rank..n_rows).find(|&r| a[r * n_cols + col] != 0);
        let Some(p) = pivot else { continue };
        a.swap(p * n_cols..(p + 1) * n_cols, rank * n_cols);
        let piv = a[rank * n_cols + col];
        for r in rank + 1..n_rows {
            for c in 0..n_cols {
                if c == col {
                    continue;
                }
                a[r * n_cols + c] =
                    (piv * a[r * n_cols + c] - a[r * n_cols + col] * a[rank * n_cols + c]) / prev;
            }
            a[r * n_cols + col] = 0;
        }
        prev = piv;
        rank += 1;
        if rank == n_rows {
            break;
        }
    }
    rank
}

// `slice::swap` does not swap ranges; tiny helper trait to keep `rank` readable.
trait SwapRange {
    fn swap(&mut self, a: std::ops::Range<usize>, b_start: usize);
}

impl SwapRange for Vec<i128> {
    fn swap(&mut self, a: std::ops::Range<usize>, b_start: usize) {
        let len = a.len();
        let a_start = a.start;
        if a_start == b_start {
            return;
        }
        for k in 0..len {
            self.as_mut_slice().swap(a_start + k, b_start + k);
        }
    }
}
