//! Dense elimination over a coefficient field.

use alloc::vec::Vec;

use crate::field::Coefficients;

/// Rank of a dense matrix given by rows.
pub fn rank<F: Coefficients>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).expect("nonzero pivot");
        let pivot: Vec<F::Elem> = m[r].iter().map(|x| f.normalize(f.mul(x, &inv))).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                *x = f.normalize(f.sub(x, &f.mul(&factor, y)));
            }
        }
        m[r] = pivot;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Dimension of `{v : v M_t = lambda v for every t}` for square matrices
/// acting on row vectors.
pub fn common_left_eigenspace_dim<F: Coefficients>(f: &F, mats: &[Vec<Vec<F::Elem>>], lambda: &F::Elem) -> usize {
    let dim = mats.first().map_or(0, |m| m.len());
    let mut stacked: Vec<Vec<F::Elem>> = alloc::vec![Vec::new(); dim];
    for m in mats {
        for (j, row) in m.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                let v = if j == c { f.sub(x, lambda) } else { x.clone() };
                stacked[j].push(f.normalize(v));
            }
        }
    }
    dim - rank(f, &stacked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Exact;
    use crate::scalar::Scalar;

    #[test]
    fn small_ranks() {
        let f = Exact::new();
        let i = |v: i64| Scalar::from_int(v);
        assert_eq!(rank(&f, &[alloc::vec![i(1), i(2)], alloc::vec![i(2), i(4)]]), 1);
        assert_eq!(rank(&f, &[alloc::vec![i(1), i(2)], alloc::vec![i(2), i(5)]]), 2);
        let m = alloc::vec![alloc::vec![i(2), i(0)], alloc::vec![i(0), i(3)]];
        assert_eq!(common_left_eigenspace_dim(&f, &[m], &i(2)), 1);
    }
}
