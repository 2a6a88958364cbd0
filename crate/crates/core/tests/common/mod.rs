#![allow(dead_code)]

//! Test-only oracles, written independently of the library's code paths.

use std::collections::HashSet;

/// Dense transition matrix of the bordered 3D walk, following the reference
/// loop structure: list node points in z/y/x order, collect neighbour points
/// per node in the order -x,+x,-y,+y,-z,+z, map them through
/// `x + w(y-1) + wd(z-1)` and assign `1/degree` to each.
pub fn reference_bordered_matrix(w: usize, d: usize, h: usize) -> Vec<Vec<f64>> {
    let n = w * d * h;
    let mut p = vec![vec![0.0; n]; n];

    let mut node_points = Vec::with_capacity(n);
    for z in 1..=h {
        for y in 1..=d {
            for x in 1..=w {
                node_points.push((x, y, z));
            }
        }
    }

    let neighbour_nodes = |x: usize, y: usize, z: usize| {
        let mut out = Vec::new();
        if x > 1 {
            out.push((x - 1, y, z));
        }
        if x < w {
            out.push((x + 1, y, z));
        }
        if y > 1 {
            out.push((x, y - 1, z));
        }
        if y < d {
            out.push((x, y + 1, z));
        }
        if z > 1 {
            out.push((x, y, z - 1));
        }
        if z < h {
            out.push((x, y, z + 1));
        }
        out
    };
    let transform = |(x, y, z): (usize, usize, usize)| x + w * (y - 1) + w * d * (z - 1);

    for (node, &(x, y, z)) in node_points.iter().enumerate() {
        let nb = neighbour_nodes(x, y, z);
        let degree = nb.len() as f64;
        for point in nb {
            p[node][transform(point) - 1] = 1.0 / degree;
        }
    }
    p
}

/// Dense matrix of the planar torus walk, from modular arithmetic on 0-based coordinates.
pub fn reference_torus_matrix(w: usize, d: usize) -> Vec<Vec<f64>> {
    let n = w * d;
    let mut p = vec![vec![0.0; n]; n];
    for y in 0..d {
        for x in 0..w {
            let s = x + w * y;
            for (dx, dy) in [(w - 1, 0), (1, 0), (0, d - 1), (0, 1)] {
                let t = (x + dx) % w + w * ((y + dy) % d);
                p[s][t] += 0.25;
            }
        }
    }
    p
}

/// Expected covered fraction after `n_max` steps by explicit path enumeration
/// over a dense matrix, using a set of visited states per path.
pub fn enumerate_coverage(p: &[Vec<f64>], start: &[f64], n_max: usize) -> Vec<f64> {
    fn go(p: &[Vec<f64>], path: &mut Vec<usize>, w: f64, n_max: usize, acc: &mut [f64]) {
        let distinct: HashSet<_> = path.iter().collect();
        acc[path.len() - 1] += w * distinct.len() as f64;
        if path.len() - 1 == n_max {
            return;
        }
        let s = *path.last().unwrap();
        for (t, &q) in p[s].iter().enumerate() {
            if q > 0.0 {
                path.push(t);
                go(p, path, w * q, n_max, acc);
                path.pop();
            }
        }
    }
    let mut acc = vec![0.0; n_max + 1];
    for (s, &w) in start.iter().enumerate() {
        if w > 0.0 {
            go(p, &mut vec![s], w, n_max, &mut acc);
        }
    }
    acc.iter().map(|v| v / p.len() as f64).collect()
}

/// `P(X_n = target)` by enumerating all paths of length `n` over a dense matrix.
pub fn enumerate_occupancy(p: &[Vec<f64>], start: &[f64], n: usize, target: usize) -> f64 {
    fn go(p: &[Vec<f64>], s: usize, left: usize, target: usize) -> f64 {
        if left == 0 {
            return if s == target { 1.0 } else { 0.0 };
        }
        p[s].iter()
            .enumerate()
            .filter(|(_, &q)| q > 0.0)
            .map(|(t, &q)| q * go(p, t, left - 1, target))
            .sum()
    }
    start
        .iter()
        .enumerate()
        .filter(|(_, &w)| w > 0.0)
        .map(|(s, &w)| w * go(p, s, n, target - 1))
        .sum()
}

/// The 9x9 bordered matrix as printed for the 3x3 grid.
pub fn printed_3x3() -> Vec<Vec<f64>> {
    const H: f64 = 1.0 / 2.0;
    const T: f64 = 1.0 / 3.0;
    const Q: f64 = 1.0 / 4.0;
    vec![
        vec![0., H, 0., H, 0., 0., 0., 0., 0.],
        vec![T, 0., T, 0., T, 0., 0., 0., 0.],
        vec![0., H, 0., 0., 0., H, 0., 0., 0.],
        vec![T, 0., 0., 0., T, 0., T, 0., 0.],
        vec![0., Q, 0., Q, 0., Q, 0., Q, 0.],
        vec![0., 0., T, 0., T, 0., 0., 0., T],
        vec![0., 0., 0., H, 0., 0., 0., H, 0.],
        vec![0., 0., 0., 0., T, 0., T, 0., T],
        vec![0., 0., 0., 0., 0., H, 0., H, 0.],
    ]
}

/// The printed 3x3 matrix with row 5 replaced by the unit row.
pub fn printed_3x3_absorbing_5() -> Vec<Vec<f64>> {
    let mut p = printed_3x3();
    p[4] = vec![0., 0., 0., 0., 1., 0., 0., 0., 0.];
    p
}

pub fn max_entry_diff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .flat_map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| (x - y).abs()))
        .fold(0.0, f64::max)
}

pub fn same_pattern(a: &[Vec<f64>], b: &[Vec<f64>]) -> bool {
    a.iter()
        .zip(b)
        .all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| (*x == 0.0) == (*y == 0.0)))
}
