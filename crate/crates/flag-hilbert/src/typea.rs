//! Type A specializations: closed forms for the adjoint variety of
//! SL(n+1), the lattice-path model for its dimensions, the rascal
//! triangle, and the a_1 coefficient for fundamental weights.

use crate::exact::{binomial, factorial, falling_factorial, Integer};
use num_traits::Zero;

/// dim L(k(omega_1 + omega_n)) for SL(n+1) in closed form:
///
///   ((n+k-1)(n+k-2)...(k+1))^2 (n + 2k) / ((n-1)! n!).
///
/// Valid for every n >= 1; at n = 1 the squared factor is empty and the
/// value is 2k + 1, the dimensions of the odd-dimensional SL(2) modules.
pub fn adjoint_dim_closed_form(n: u64, k: u64) -> Integer {
    assert!(n >= 1, "adjoint closed form requires n >= 1");
    let top = falling_factorial(&Integer::from(n + k - 1), n - 1);
    let num = &top * &top * Integer::from(n + 2 * k);
    let den = factorial(n - 1) * factorial(n);
    let rem = &num % &den;
    assert!(rem.is_zero(), "closed form must divide exactly");
    num / den
}

/// Counts lattice paths from (0, 0) to (n, n) using steps east, north,
/// diagonal, or wait, that occupy (n, n) at time `steps` and never before.
///
/// These counts reproduce dim L(k(omega_1 + omega_n)) with steps = n + k,
/// giving a combinatorial model for the adjoint dimension data.
pub fn lattice_path_count(n: u64, steps: u64) -> Integer {
    assert!(n >= 1 && steps >= n, "need at least n steps to reach (n, n)");
    let n = n as usize;
    let steps = steps as usize;
    let mut dp = vec![vec![Integer::zero(); n + 1]; n + 1];
    dp[0][0] = Integer::from(1);
    for t in 1..=steps {
        let last = t == steps;
        let mut next = vec![vec![Integer::zero(); n + 1]; n + 1];
        for (x, row) in dp.iter().enumerate() {
            for (y, count) in row.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for (dx, dy) in [(1, 0), (0, 1), (1, 1), (0, 0)] {
                    let (nx, ny) = (x + dx, y + dy);
                    if nx > n || ny > n {
                        continue;
                    }
                    if nx == n && ny == n && !last {
                        continue;
                    }
                    next[nx][ny] += count;
                }
            }
        }
        dp = next;
    }
    dp[n][n].clone()
}

/// Entry of the rascal triangle, computed by the defining recurrence
///
///   R(r, c) = (R(r-1, c-1) R(r-1, c) + 1) / R(r-2, c-1)
///
/// with all-ones borders, then checked against the closed form
/// c(r - c) + 1. The division is verified exact at every step.
pub fn rascal(row: u32, col: u32) -> Integer {
    assert!(col <= row, "rascal entry needs col <= row");
    let value = if row <= 1 {
        Integer::from(1)
    } else {
        let mut prev: Vec<Integer> = vec![Integer::from(1)];
        let mut cur: Vec<Integer> = vec![Integer::from(1), Integer::from(1)];
        for _ in 2..=row {
            let mut next = vec![Integer::from(1)];
            for c in 1..cur.len() {
                let num = &cur[c - 1] * &cur[c] + Integer::from(1);
                let den = &prev[c - 1];
                let rem = &num % den;
                assert!(rem.is_zero(), "rascal recurrence must divide exactly");
                next.push(num / den);
            }
            next.push(Integer::from(1));
            prev = cur;
            cur = next;
        }
        cur[col as usize].clone()
    };
    assert_eq!(
        value,
        Integer::from(col as u64 * (row - col) as u64 + 1),
        "rascal entry must match its closed form"
    );
    value
}

/// A rascal-triangle entry with its position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RascalEntry {
    pub row: u32,
    pub col: u32,
    pub value: Integer,
}

impl RascalEntry {
    pub fn new(row: u32, col: u32) -> Self {
        RascalEntry {
            row,
            col,
            value: rascal(row, col),
        }
    }
}

/// Dimension of the flag variety for SL(n+1) with lambda = omega_i:
/// the Grassmannian Gr(i, n+1) of dimension i(n + 1 - i).
pub fn fundamental_flag_dim(n: u64, i: u64) -> u64 {
    assert!((1..=n).contains(&i), "need 1 <= i <= n");
    i * (n + 1 - i)
}

/// First numerator coefficient for SL(n+1) with lambda = omega_i:
///
///   a_1 = C(n+1, i) - (i(n - i + 1) + 1),
///
/// the representation dimension minus a rascal-triangle entry.
pub fn a1_fundamental(n: u64, i: u64) -> Integer {
    assert!((1..=n).contains(&i), "need 1 <= i <= n");
    binomial(n + 1, i as i64) - Integer::from(i * (n - i + 1) + 1)
}

/// The dimensions dim L(k(omega_1 + omega_n)) for k = 0..=kmax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointDims {
    n: u64,
    values: Vec<Integer>,
}

impl AdjointDims {
    pub fn new(n: u64, kmax: u64) -> Self {
        assert!(n >= 2, "the adjoint weight needs n >= 2 distinct nodes");
        let values: Vec<Integer> = (0..=kmax)
            .map(|k| adjoint_dim_closed_form(n, k))
            .collect();
        assert_eq!(values[0], Integer::from(1));
        if kmax >= 1 {
            assert_eq!(values[1], Integer::from((n + 1) * (n + 1) - 1));
        }
        AdjointDims { n, values }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn values(&self) -> &[Integer] {
        &self.values
    }
}

/// Adjoint-variety numerators for SL(n+1) as printed in the original
/// tables, kept verbatim for comparison output; `None` when n has no
/// printed row.
pub fn published_adjoint_numerator(n: u64) -> Option<&'static [i64]> {
    match n {
        3 => Some(&[1, 10, 19, 20, 20]),
        4 => Some(&[1, 17, 53, 69, 70, 70, 70]),
        5 => Some(&[1, 26, 126, 226, 251, 252, 252, 252, 252]),
        _ => None,
    }
}
