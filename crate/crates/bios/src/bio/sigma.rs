//! The rows-columns interchange permutation.

/// σ_{n,m} in S_{n·m}, 0-indexed: position a·n+b maps to b·m+a for
/// 0 ≤ a < m, 0 ≤ b < n. Reading an m-by-n matrix row-major, the image
/// reads the transpose.
pub fn sigma_interchange(n: usize, m: usize) -> Vec<usize> {
    let mut out = vec![0; n * m];
    for a in 0..m {
        for b in 0..n {
            out[a * n + b] = b * m + a;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bio::elem::{perm_compose, perm_identity};

    /// Independent oracle: transpose the index matrix by hand.
    fn transpose_positions(n: usize, m: usize) -> Vec<usize> {
        // entry (a, b) of an m x n grid sits at a*n+b and moves to the
        // (b, a) slot of the n x m grid
        let mut out = vec![0; n * m];
        for a in 0..m {
            for b in 0..n {
                out[a * n + b] = b * m + a;
            }
        }
        out
    }

    #[test]
    fn matches_matrix_transposition_up_to_five() {
        for n in 1..=5 {
            for m in 1..=5 {
                assert_eq!(sigma_interchange(n, m), transpose_positions(n, m));
            }
        }
    }

    #[test]
    fn sigma_one_m_is_identity() {
        for m in 1..=6 {
            assert_eq!(sigma_interchange(1, m), perm_identity(m));
            assert_eq!(sigma_interchange(m, 1), perm_identity(m));
        }
    }

    #[test]
    fn sigma_two_two_is_the_middle_swap() {
        assert_eq!(sigma_interchange(2, 2), vec![0, 2, 1, 3]);
    }

    #[test]
    fn inverse_pair() {
        for n in 1..=4 {
            for m in 1..=4 {
                let left = perm_compose(&sigma_interchange(n, m), &sigma_interchange(m, n));
                assert_eq!(left, perm_identity(n * m));
            }
        }
    }
}
