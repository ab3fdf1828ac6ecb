use super::{MultiPoly, Var};

/// Sylvester resultant with respect to `v`, by fraction-free (Bareiss)
/// elimination over the polynomial ring in the remaining variables.
pub(super) fn sylvester_resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> MultiPoly {
    if p.is_zero() || q.is_zero() {
        return MultiPoly::zero();
    }
    let m = p.degree_in(v) as usize;
    let n = q.degree_in(v) as usize;
    if m == 0 && n == 0 {
        return MultiPoly::one();
    }
    let pc = p.coefficients_in(v);
    let qc = q.coefficients_in(v);
    let size = m + n;
    let mut mat = vec![vec![MultiPoly::zero(); size]; size];
    // rows of p shifted n times, rows of q shifted m times; leading coefficient first
    for i in 0..n {
        for (k, c) in pc.iter().enumerate() {
            mat[i][i + m - k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in qc.iter().enumerate() {
            mat[n + i][i + n - k] = c.clone();
        }
    }
    bareiss_det(mat)
}

pub(crate) fn bareiss_det(mut mat: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let size = mat.len();
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..size {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&i| !mat[i][k].is_zero()) else {
                return MultiPoly::zero();
            };
            mat.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.exact_divide(&prev).expect("Bareiss division is exact");
            }
            mat[i][k] = MultiPoly::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use crate::exactpoly::{poly, Var};

    #[test]
    fn conic_against_line() {
        // 2x2 Sylvester matrix of a degree-2 and a degree-0 form in y
        assert_eq!(poly("x*z - y^2").resultant_wrt(&poly("x"), Var::Y), poly("x^2"));
    }

    #[test]
    fn common_factor_vanishes() {
        let p = poly("x*y^2 + z*y - x^3");
        assert!(p.resultant_wrt(&p, Var::Y).is_zero());
    }

    #[test]
    fn linear_pair() {
        let r = poly("y - x").resultant_wrt(&poly("y + x"), Var::Y);
        assert!(r == poly("2*x") || r == poly("-2*x"));
    }

    #[test]
    fn matches_product_of_differences() {
        // res_y((y-a)(y-b), y-c) = (c-a)(c-b) with a=x, b=z, c=2x
        let p = poly("(y - x)*(y - z)");
        let q = poly("y - 2*x");
        assert_eq!(p.resultant_wrt(&q, Var::Y), poly("x*(2*x - z)"));
    }
}
