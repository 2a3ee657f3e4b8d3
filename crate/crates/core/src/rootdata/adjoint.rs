//! Traces of the adjoint action of diagonal involutions on `so_{2n+1}`.

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{int, Rational};

fn check(n: usize, a: usize, b: usize) -> Result<()> {
    if a + b != n {
        return Err(Error::Argument(format!(
            "block signature ({a}, {b}) does not sum to n = {n}"
        )));
    }
    Ok(())
}

/// Trace of `Ad(t)` for `t = diag(1_a, -1_b, 1, -1_b, 1_a)`: `2(a-b)^2 + 2(a-b) - n`.
pub fn adjoint_trace_so(n: usize, a: usize, b: usize) -> Result<i64> {
    check(n, a, b)?;
    let d = a as i64 - b as i64;
    Ok(2 * d * d + 2 * d - n as i64)
}

/// The same trace computed on an explicit basis of
/// `{A : A + J A^T J = 0}`, `J` the antidiagonal identity.
pub fn adjoint_trace_explicit(n: usize, a: usize, b: usize) -> Result<i64> {
    check(n, a, b)?;
    let m = 2 * n + 1;
    let mut diag = vec![1i64; m];
    for i in a..n {
        diag[i] = -1;
        diag[m - 1 - i] = -1;
    }
    // Linear map A -> A + J A^T J on the m^2 matrix entries:
    // (J A^T J)_{ij} = A_{m-1-j, m-1-i}.
    let idx = |i: usize, j: usize| i * m + j;
    let mut lin: Matrix<Rational> = Matrix::zeros(m * m, m * m);
    for i in 0..m {
        for j in 0..m {
            let r = idx(i, j);
            let v = lin.get(r, r).clone() + int(1);
            lin.set(r, r, v);
            let s = idx(m - 1 - j, m - 1 - i);
            let v = lin.get(r, s).clone() + int(1);
            lin.set(r, s, v);
        }
    }
    // Nullspace basis vectors have a unit at their free coordinate and zero at
    // the other free coordinates, so Ad(t) (diagonal in matrix entries) has
    // trace equal to the sum of its eigenvalues at the free coordinates.
    let (_, pivots) = lin.rref();
    let trace = (0..m * m)
        .filter(|c| !pivots.contains(c))
        .map(|c| diag[c / m] * diag[c % m])
        .sum();
    Ok(trace)
}

/// Trace of `Ad(t)` equals `-n`.
pub fn is_odd(n: usize, a: usize, b: usize) -> Result<bool> {
    Ok(adjoint_trace_so(n, a, b)? == -(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(adjoint_trace_so(2, 1, 1).unwrap(), -2);
        assert!(is_odd(2, 1, 1).unwrap());
        assert_eq!(adjoint_trace_so(3, 1, 2).unwrap(), -3);
        assert!(is_odd(3, 1, 2).unwrap());
        assert_eq!(adjoint_trace_so(3, 3, 0).unwrap(), 21);
        assert!(!is_odd(3, 3, 0).unwrap());
        assert!(adjoint_trace_so(3, 1, 1).is_err());
    }

    #[test]
    fn explicit_matches_closed_form() {
        for n in 1..=3 {
            for a in 0..=n {
                assert_eq!(
                    adjoint_trace_explicit(n, a, n - a).unwrap(),
                    adjoint_trace_so(n, a, n - a).unwrap()
                );
            }
        }
    }
}
