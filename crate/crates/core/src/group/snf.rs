//! Smith normal form over the integers and the abelianization it computes.

use serde::{Deserialize, Serialize};

use super::presentation::Presentation;

/// Diagonal of the Smith normal form of an integer matrix: nonzero entries
/// d_1 | d_2 | …, all positive.
pub fn smith_diagonal(matrix: &[Vec<i64>]) -> Vec<i64> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<i128>> =
        matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut diag = Vec::new();
    let mut top = 0usize;

    while top < rows && top < cols {
        // find a pivot: smallest nonzero entry in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in top..cols {
                if m[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(top, pj);
        }

        // clear the pivot row and column; repeat until clean since
        // remainders can reintroduce entries
        loop {
            let mut dirty = false;
            for i in top + 1..rows {
                if m[i][top] != 0 {
                    let f = m[i][top].div_euclid(m[top][top]);
                    for j in top..cols {
                        m[i][j] -= f * m[top][j];
                    }
                    if m[i][top] != 0 {
                        // remainder smaller than pivot: swap up and restart
                        m.swap(top, i);
                        dirty = true;
                    }
                }
            }
            for j in top + 1..cols {
                if m[top][j] != 0 {
                    let f = m[top][j].div_euclid(m[top][top]);
                    for row in m.iter_mut() {
                        row[j] -= f * row[top];
                    }
                    if m[top][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(top, j);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        diag.push(m[top][top].abs());
        top += 1;
    }

    // enforce the divisibility chain d_i | d_{i+1}
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..diag.len().saturating_sub(1) {
            if diag[i + 1] % diag[i] != 0 {
                let a = diag[i];
                let b = diag[i + 1];
                let g = gcd(a, b);
                diag[i] = g;
                diag[i + 1] = a / g * b;
                changed = true;
            }
        }
    }
    diag.iter().map(|&d| d as i64).collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// A finitely generated abelian group: free rank plus invariant factors
/// (> 1, in divisibility order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(order: i64) -> Self {
        if order.abs() <= 1 {
            if order == 0 {
                AbelianGroup::free(1)
            } else {
                AbelianGroup::trivial()
            }
        } else {
            AbelianGroup { free_rank: 0, torsion: vec![order.abs()] }
        }
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        parts.extend(std::iter::repeat("Z".to_string()).take(self.free_rank));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// First homology of a presentation: Smith normal form of its exponent-sum
/// matrix.
pub fn abelianization(pres: &Presentation) -> AbelianGroup {
    let matrix = pres.relation_matrix();
    let diag = smith_diagonal(&matrix);
    let rank = diag.len();
    AbelianGroup {
        free_rank: pres.generators.len() - rank,
        torsion: diag.into_iter().filter(|&d| d > 1).collect(),
    }
}

/// Does `v` lie in the row lattice of `matrix`? Decided by comparing the
/// Smith data of the lattice with and without `v` appended: appending a
/// lattice member never changes rank or invariant factors.
pub fn in_row_lattice(matrix: &[Vec<i64>], v: &[i64]) -> bool {
    let base = smith_diagonal(matrix);
    let mut extended: Vec<Vec<i64>> = matrix.to_vec();
    extended.push(v.to_vec());
    smith_diagonal(&extended) == base
}
