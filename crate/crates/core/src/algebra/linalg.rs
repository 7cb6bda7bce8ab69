//! Small dense linear algebra over the rationals and the integers.

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    let mut m = vectors.to_vec();
    rref(&mut m).len()
}

/// Is `v` in the linear hull of `vectors`? The hull of nothing is `{0}`.
pub fn in_span(vectors: &[Vec<Rational>], v: &[Rational]) -> bool {
    if vectors.is_empty() {
        return v.iter().all(Zero::is_zero);
    }
    let mut with = vectors.to_vec();
    with.push(v.to_vec());
    rank(&with) == rank(vectors)
}

pub fn determinant(m: &Matrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let delta = &f * &a[c][j];
                    a[i][j] -= delta;
                }
            }
        }
    }
    det
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve `x A = b` for a row vector `x`, where the rows of `A` are the given
/// vectors. Returns `None` if `b` is not in the row space; the solution is
/// some particular one when the rows are dependent.
pub fn solve_row_combination(rows: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let k = rows.len();
    let n = b.len();
    // Columns of the system are the given rows; augment with b.
    let mut m: Matrix = (0..n)
        .map(|j| {
            let mut r: Vec<Rational> = rows.iter().map(|row| row[j].clone()).collect();
            r.push(b[j].clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][k].clone();
    }
    Some(x)
}

/// Row-style Hermite normal form of a nonsingular square integer matrix:
/// upper triangular with positive diagonal, same row lattice.
pub fn hermite_normal_form(mut m: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let n = m.len();
    for c in 0..n {
        loop {
            let nonzero: Vec<usize> = (c..n).filter(|&i| m[i][c] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(c, p);
            if m[c][c] < 0 {
                for x in m[c].iter_mut() {
                    *x = -*x;
                }
            }
            let mut done = true;
            for i in c + 1..n {
                let f = m[i][c].div_euclid(m[c][c]);
                if f != 0 {
                    for j in 0..n {
                        m[i][j] -= f * m[c][j];
                    }
                }
                if m[i][c] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
    }
    m
}

/// Transversal of `Z^n / L` where `L` is spanned by the rows of a
/// nonsingular integer matrix: the box `0 <= c_i < h_ii` of its Hermite form.
pub fn lattice_transversal(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let h = hermite_normal_form(rows.to_vec());
    let n = h.len();
    let mut out = vec![vec![0i64; n]];
    for i in 0..n {
        let d = h[i][i];
        assert!(d > 0, "singular lattice basis");
        let mut next = Vec::with_capacity(out.len() * d as usize);
        for c in 0..d {
            for v in &out {
                let mut w = v.clone();
                w[i] = c;
                next.push(w);
            }
        }
        out = next;
    }
    out.sort();
    out
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn max_abs(v: &[Rational]) -> Rational {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
}
