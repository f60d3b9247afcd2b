//! Smith normal form over the Euclidean domain F2[v].

use super::sparse::SparseMat;
use super::PolyV;

/// Invariant factors `d1 | d2 | ... | dr` of a matrix over F2[v].
///
/// Pivoting is Euclidean: at every step the nonzero entry of least degree
/// in the active submatrix becomes the pivot (ties go to the lowest
/// `(row, col)`), its row and column are cleared by division with
/// remainder, and a nonzero remainder restarts the step with a strictly
/// smaller pivot. The result has length equal to the rank over F2(v).
#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(m: &SparseMat<PolyV>) -> Vec<PolyV> {
    let (nr, nc) = (m.rows(), m.cols());
    let mut a: Vec<Vec<PolyV>> = vec![vec![PolyV::zero(); nc]; nr];
    for (r, c, e) in m.iter() {
        a[r][c] = e.clone();
    }

    let mut factors = Vec::new();
    for t in 0..nr.min(nc) {
        if !place_min_pivot(&mut a, t) {
            break;
        }
        loop {
            let pivot = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].divmod(&pivot).expect("pivot is nonzero");
                for j in t..nc {
                    let delta = &q * &a[t][j];
                    a[i][j] += &delta;
                }
                dirty |= !r.is_zero();
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].divmod(&pivot).expect("pivot is nonzero");
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[j] += &delta;
                }
                dirty |= !r.is_zero();
            }
            if dirty {
                place_min_pivot(&mut a, t);
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            let offender = (t + 1..nr)
                .find(|&i| (t + 1..nc).any(|j| !a[i][j].is_zero() && !pivot.divides(&a[i][j])));
            match offender {
                Some(i) => {
                    for j in t..nc {
                        let x = a[i][j].clone();
                        a[t][j] += &x;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].clone());
    }
    factors
}

/// Moves the least-degree nonzero entry of the submatrix `[t.., t..]` to
/// `(t, t)`. Returns false when the submatrix is zero.
fn place_min_pivot(a: &mut [Vec<PolyV>], t: usize) -> bool {
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, e) in row.iter().enumerate().skip(t) {
            if let Some(d) = e.degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    let Some((_, i, j)) = best else {
        return false;
    };
    a.swap(t, i);
    for row in a.iter_mut() {
        row.swap(t, j);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(k: usize) -> PolyV {
        PolyV::monomial(k)
    }

    #[test]
    fn one_by_one() {
        let m = SparseMat::from_dense(vec![vec![v(1)]]);
        assert_eq!(smith_normal_form(&m), vec![v(1)]);
    }

    #[test]
    fn upper_triangular_two_by_two() {
        let m = SparseMat::from_dense(vec![vec![v(1), v(2)], vec![PolyV::zero(), v(3)]]);
        assert_eq!(smith_normal_form(&m), vec![v(1), v(3)]);
    }

    #[test]
    fn zero_matrix() {
        let m = SparseMat::<PolyV>::new(2, 3);
        assert!(smith_normal_form(&m).is_empty());
    }

    #[test]
    fn empty_matrix() {
        let m = SparseMat::<PolyV>::new(0, 4);
        assert!(smith_normal_form(&m).is_empty());
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(v^2, v+1): gcd is 1, determinant v^3+v^2
        let m = SparseMat::from_dense(vec![
            vec![v(2), PolyV::zero()],
            vec![PolyV::zero(), PolyV::from_exponents([1, 0])],
        ]);
        assert_eq!(
            smith_normal_form(&m),
            vec![PolyV::one(), PolyV::from_exponents([3, 2])]
        );
    }

    #[test]
    fn factors_divide_in_chain() {
        let m = SparseMat::from_dense(vec![
            vec![v(2), v(1), PolyV::zero()],
            vec![v(3), PolyV::one(), v(1)],
            vec![PolyV::zero(), v(2), v(3)],
        ]);
        let f = smith_normal_form(&m);
        for w in f.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
    }
}
