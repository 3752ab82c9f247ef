//! Naive reference fusion: explicit harmonious/disharmonious index sets and
//! plain nested loops over `Vec<Vec<f64>>`.

#![allow(clippy::needless_range_loop)]

pub struct Naive {
    pub x_star: Vec<Vec<f64>>,
    pub r: Vec<Vec<f64>>,
    pub c: Vec<Vec<f64>>,
    pub d: Vec<Vec<f64>>,
    pub u: Vec<Vec<f64>>,
    pub zeta: Vec<f64>,
    pub ranking: Vec<usize>,
}

pub fn naive_fusion(x: &[Vec<f64>], w: &[f64]) -> Naive {
    let n = x.len();
    let k = w.len();
    let mut x_star = vec![vec![0.0; k]; n];
    for l in 0..k {
        let mut lo = x[0][l];
        let mut hi = x[0][l];
        for row in x {
            if row[l] < lo {
                lo = row[l];
            }
            if row[l] > hi {
                hi = row[l];
            }
        }
        for i in 0..n {
            x_star[i][l] = if hi > lo {
                (x[i][l] - lo) / (hi - lo)
            } else {
                0.0
            };
        }
    }
    let mut r = vec![vec![0.0; k]; n];
    for i in 0..n {
        for l in 0..k {
            r[i][l] = w[l] * x_star[i][l];
        }
    }
    let w_sum: f64 = w.iter().sum();
    let mut c = vec![vec![0.0; n]; n];
    let mut d = vec![vec![0.0; n]; n];
    let mut u = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let h: Vec<usize> = (0..k).filter(|&l| r[i][l] >= r[j][l]).collect();
            let b: Vec<usize> = (0..k).filter(|&l| r[i][l] < r[j][l]).collect();
            let mut support = 0.0;
            for &l in &h {
                support += w[l];
            }
            c[i][j] = support / w_sum;
            let mut num = 0.0f64;
            for &l in &b {
                num = num.max((r[i][l] - r[j][l]).abs());
            }
            let mut den = 0.0f64;
            for l in 0..k {
                den = den.max((r[i][l] - r[j][l]).abs());
            }
            d[i][j] = if b.is_empty() || den == 0.0 {
                0.0
            } else {
                num / den
            };
            u[i][j] = c[i][j] - d[i][j];
        }
    }
    let mut zeta = vec![0.0; n];
    for i in 0..n {
        for m in 0..n {
            if m != i {
                zeta[i] += u[i][m] - u[m][i];
            }
        }
    }
    // Selection sort: highest score first, lowest index among equals.
    let mut used = vec![false; n];
    let mut ranking = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<usize> = None;
        for i in 0..n {
            if !used[i] && best.is_none_or(|b| zeta[i] > zeta[b]) {
                best = Some(i);
            }
        }
        let b = best.unwrap();
        used[b] = true;
        ranking.push(b);
    }
    Naive {
        x_star,
        r,
        c,
        d,
        u,
        zeta,
        ranking,
    }
}
