//! Dense phase-one simplex, used as an independent convex-hull oracle.

/// Whether `point` is a convex combination of `vertices`: feasibility of
/// `Σ λ_k v_k = point, Σ λ_k = 1, λ ≥ 0`, decided with Bland's rule.
pub fn in_convex_hull(vertices: &[Vec<f64>], point: &[f64], tol: f64) -> bool {
    let n = vertices.len();
    let d = point.len();
    if n == 0 {
        return false;
    }
    // rows: d coordinates + the affine constraint
    let m = d + 1;
    let cols = n + m;
    let mut a = vec![vec![0.0; cols + 1]; m];
    for (r, row) in a.iter_mut().enumerate() {
        for (k, v) in vertices.iter().enumerate() {
            row[k] = if r < d { v[r] } else { 1.0 };
        }
        let mut rhs = if r < d { point[r] } else { 1.0 };
        if rhs < 0.0 {
            row[..n].iter_mut().for_each(|x| *x = -*x);
            rhs = -rhs;
        }
        row[n + r] = 1.0;
        row[cols] = rhs;
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // reduced costs of the artificial objective Σ a_r
    let cost = |a: &Vec<Vec<f64>>, basis: &[usize], j: usize| -> f64 {
        let c_j = if j >= n { 1.0 } else { 0.0 };
        c_j - (0..m)
            .map(|r| if basis[r] >= n { a[r][j] } else { 0.0 })
            .sum::<f64>()
    };

    for _ in 0..10_000 {
        let Some(enter) = (0..cols).find(|&j| !basis.contains(&j) && cost(&a, &basis, j) < -1e-12)
        else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best = f64::INFINITY;
        for r in 0..m {
            if a[r][enter] > 1e-12 {
                let ratio = a[r][cols] / a[r][enter];
                let better = ratio < best - 1e-15
                    || (ratio <= best + 1e-15 && leave.is_some_and(|l| basis[r] < basis[l]));
                if better {
                    best = ratio;
                    leave = Some(r);
                }
            }
        }
        let Some(l) = leave else {
            // unbounded direction cannot occur for a bounded phase-one objective
            break;
        };
        let piv = a[l][enter];
        a[l].iter_mut().for_each(|x| *x /= piv);
        let pivot_row = a[l].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != l {
                let f = row[enter];
                if f != 0.0 {
                    row.iter_mut().zip(&pivot_row).for_each(|(x, p)| *x -= f * p);
                }
            }
        }
        basis[l] = enter;
    }
    let infeasibility: f64 = (0..m).filter(|&r| basis[r] >= n).map(|r| a[r][cols]).sum();
    infeasibility <= tol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square() {
        let v = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]];
        assert!(in_convex_hull(&v, &[0.5, 0.5], 1e-9));
        assert!(in_convex_hull(&v, &[1.0, 1.0], 1e-9));
        assert!(in_convex_hull(&v, &[0.0, 0.3], 1e-9));
        assert!(!in_convex_hull(&v, &[1.1, 0.5], 1e-9));
        assert!(!in_convex_hull(&v, &[-0.01, 0.5], 1e-9));
    }

    #[test]
    fn degenerate_duplicates() {
        let v = vec![vec![1.0, 0.0]; 5];
        assert!(in_convex_hull(&v, &[1.0, 0.0], 1e-9));
        assert!(!in_convex_hull(&v, &[0.9, 0.1], 1e-9));
    }
}
