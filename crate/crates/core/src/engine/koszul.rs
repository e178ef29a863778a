//! Graded Betti numbers of an artinian quotient from Koszul homology.
//!
//! `beta_{i,j}(R/I) = dim H_i(x_0, ..., x_{n-1}; R/I)_j`, computed with exact
//! linear algebra on the Koszul complex in each internal degree. Small inputs
//! only: the complex has `2^n` exterior basis elements per quotient monomial.

use crate::exec::Execution;
use crate::lex::BettiTable;

use super::ideal::GradedIdealModel;
use super::linalg::rank;
use super::{EngineError, Result};

/// Subsets of `0..n` of size `i`, each sorted, in lex order.
fn subsets(n: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            rec(s + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, i, &mut Vec::new(), &mut out);
    out
}

/// Requires `[R/I]_cap = 0`, so the quotient is known in every degree.
pub fn koszul_betti(model: &GradedIdealModel) -> Result<BettiTable> {
    let cap = model.cap();
    let h = model.hilbert_function();
    if h[cap] != 0 {
        return Err(EngineError::NotArtinianWithinCap { cap });
    }
    let n = model.nvars();
    let f = model.field();
    let bases = model.bases();
    // Quotient basis in degree t: free columns of [I]_t.
    let free: Vec<Vec<usize>> = (0..cap).map(|t| model.space(t).free_columns()).collect();
    let quotient_dim = |t: isize| -> usize {
        if t < 0 || t as usize >= cap {
            0
        } else {
            free[t as usize].len()
        }
    };
    let subsets_by_size: Vec<Vec<Vec<usize>>> = (0..=n).map(|i| subsets(n, i)).collect();

    // Matrix of d_i : K_i -> K_{i-1} in internal degree j, rows indexed by
    // the source basis (subset, quotient monomial of degree j - i).
    let differential_rank = |i: usize, j: usize| -> usize {
        if i == 0 || i > n || j < i {
            return 0;
        }
        let t = j - i;
        if t >= cap {
            return 0;
        }
        let target_t = t + 1;
        if target_t >= cap {
            return 0;
        }
        let target_free = &free[target_t][..];
        let target_pos: std::collections::HashMap<usize, usize> =
            target_free.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let lower = &subsets_by_size[i - 1];
        let lower_pos: std::collections::HashMap<&Vec<usize>, usize> =
            lower.iter().enumerate().map(|(k, s)| (s, k)).collect();
        let block = target_free.len();
        let ncols = lower.len() * block;
        if ncols == 0 {
            return 0;
        }
        let mut rows = Vec::new();
        for s in &subsets_by_size[i] {
            for &c in &free[t] {
                let mut row = vec![0u64; ncols];
                for (pos, &k) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(pos);
                    let base = lower_pos[&rest] * block;
                    // Normal form of x_k * m modulo [I]_{t+1}, read on free columns.
                    let mut unit = vec![0; bases.dim(t)];
                    unit[c] = 1;
                    let mut img = bases.times_var(t, &unit, k);
                    model.space(target_t).reduce(f, &mut img);
                    for (col, &v) in img.iter().enumerate() {
                        if v == 0 {
                            continue;
                        }
                        let at = base + target_pos[&col];
                        let signed = if pos % 2 == 0 { v } else { f.neg(v) };
                        row[at] = f.add(row[at], signed);
                    }
                }
                rows.push(row);
            }
        }
        rank(f, ncols, rows, Execution::Sequential)
    };

    let mut table = BettiTable::empty(n);
    let max_j = cap - 1 + n;
    for j in 0..=max_j {
        for i in 0..=n.min(j) {
            let dim_k = subsets_by_size[i].len() * quotient_dim(j as isize - i as isize);
            let kernel = dim_k - differential_rank(i, j);
            let beta = kernel - differential_rank(i + 1, j);
            table.add(i, j, beta as u64);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::field::DEFAULT_PRIME;
    use crate::engine::ideal::build_ideal;
    use crate::engine::poly::Polynomial;

    #[test]
    fn square_of_maximal_ideal() {
        let gens: Vec<Polynomial> = [[2, 0], [1, 1], [0, 2]]
            .iter()
            .map(|e| Polynomial::monomial(1, e.to_vec()))
            .collect();
        let m = build_ideal(&gens, 2, DEFAULT_PRIME, 3).unwrap();
        let b = koszul_betti(&m).unwrap();
        assert_eq!(b.get(0, 0), 1);
        assert_eq!(b.get(1, 2), 3);
        assert_eq!(b.get(2, 3), 2);
        assert_eq!(b.entries().count(), 3);
    }

    #[test]
    fn complete_intersection() {
        let gens = vec![Polynomial::monomial(1, vec![1, 0])];
        let m = build_ideal(&gens, 2, DEFAULT_PRIME, 2).unwrap();
        assert!(matches!(koszul_betti(&m), Err(EngineError::NotArtinianWithinCap { .. })));
        let gens = vec![Polynomial::monomial(1, vec![2, 0]), Polynomial::monomial(1, vec![0, 2])];
        let m = build_ideal(&gens, 2, DEFAULT_PRIME, 3).unwrap();
        let b = koszul_betti(&m).unwrap();
        assert_eq!((b.get(0, 0), b.get(1, 2), b.get(2, 4)), (1, 2, 1));
        assert_eq!(b.entries().count(), 3);
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
