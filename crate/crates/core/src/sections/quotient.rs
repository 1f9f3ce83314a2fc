use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polycore::{Degree, Poly2};
use crate::rational::Rational;

/// Default largest `δ` accepted by [`brute_force_quotient_dim`].
pub const DEFAULT_DESK_CAP: u32 = 24;

fn monomials_up_to(deg: u32) -> Vec<(u32, u32)> {
    (0..=deg).flat_map(|t| (0..=t).map(move |a| (a, t - a))).collect()
}

/// Rank of a dense rational matrix by Gaussian elimination.
fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, pivot);
        let p = rows[r][col].clone();
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &p;
            for (x, y) in row[col..ncols].iter_mut().zip(&pivot_row[col..ncols]) {
                *x -= &f * y;
            }
        }
        r += 1;
    }
    r
}

/// `dim C_δ[x,y] / r·C_(δ−d)[x,y]` by exact linear algebra.
pub fn brute_force_quotient_dim(delta: u32, d: u32, r: &Poly2, cap: u32) -> Result<u64> {
    if r.degree() != Degree::Finite(d) {
        return Err(Error::DegreeMismatch { declared: d, actual: r.degree().to_string() });
    }
    if delta > cap {
        return Err(Error::DeskScale { delta, cap });
    }
    let target = monomials_up_to(delta);
    let total = target.len() as u64;
    if delta < d {
        return Ok(total);
    }
    let index = |a: u32, b: u32| target.iter().position(|&m| m == (a, b)).expect("monomial in range");
    let rows: Vec<Vec<Rational>> = monomials_up_to(delta - d)
        .into_iter()
        .map(|(a, b)| {
            let mut row = vec![Rational::zero(); target.len()];
            for (ra, rb, c) in r.terms() {
                row[index(a + ra, b + rb)] = c.clone();
            }
            row
        })
        .collect();
    Ok(total - rank(rows) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_poly;

    #[test]
    fn examples() {
        let r = parse_poly("x^4 + y^4 - 2").unwrap();
        assert_eq!(brute_force_quotient_dim(4, 4, &r, DEFAULT_DESK_CAP).unwrap(), 14);
        assert_eq!(brute_force_quotient_dim(2, 4, &r, DEFAULT_DESK_CAP).unwrap(), 6);
        assert_eq!(brute_force_quotient_dim(5, 4, &r, DEFAULT_DESK_CAP).unwrap(), 18);
        assert_eq!(brute_force_quotient_dim(30, 4, &r, DEFAULT_DESK_CAP), Err(Error::DeskScale { delta: 30, cap: 24 }));
        assert!(matches!(brute_force_quotient_dim(5, 3, &r, DEFAULT_DESK_CAP), Err(Error::DegreeMismatch { .. })));
    }
}
