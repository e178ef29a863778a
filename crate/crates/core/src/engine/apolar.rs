//! Hilbert functions of apolar algebras from catalecticant ranks.

use crate::exec::Execution;
use crate::lex::{monomials_of_degree, Monomial};

use super::field::PrimeField;
use super::linalg::rank;
use super::poly::{DegreeBasis, Polynomial};
use super::{EngineError, Result};

/// `prod_k (a_k + g_k)! / g_k!`: the scalar in `d^alpha x^(alpha+gamma)`.
fn falling(field: PrimeField, alpha: &Monomial, gamma: &Monomial) -> u64 {
    let mut acc = 1;
    for (&a, &g) in alpha.exponents().iter().zip(gamma.exponents()) {
        for k in 1..=a as u64 {
            acc = field.mul(acc, (g as u64 + k) % field.p());
        }
    }
    acc
}

/// `h_i = rank` of the `i`-th catalecticant of `F`, whose rows are the
/// partial derivatives of order `i` written in the degree `d - i` basis.
///
/// Differentiation needs `p > deg F` so that no factorial vanishes.
pub fn apolar_hf(form: &Polynomial, nvars: usize, p: u64) -> Result<Vec<u64>> {
    let field = PrimeField::new(p)?;
    let d = form
        .homogeneous_degree(field, nvars, 0)?
        .ok_or(EngineError::ZeroForm)?;
    if p <= d as u64 {
        return Err(EngineError::CharacteristicTooSmall { p, degree: d });
    }
    let top = DegreeBasis::new(nvars, d);
    let coeffs = form.to_vector(field, &top);
    let hf = (0..=d)
        .map(|i| {
            let rows: Vec<Vec<u64>> = monomials_of_degree(nvars, i)
                .iter()
                .map(|alpha| {
                    monomials_of_degree(nvars, d - i)
                        .iter()
                        .map(|gamma| {
                            let sum = Monomial::new(
                                alpha.exponents().iter().zip(gamma.exponents()).map(|(a, g)| a + g).collect(),
                            );
                            let c = coeffs[top.index(&sum).expect("degree d monomial")];
                            field.mul(c, falling(field, alpha, gamma))
                        })
                        .collect()
                })
                .collect();
            rank(field, DegreeBasis::new(nvars, d - i).len(), rows, Execution::Sequential) as u64
        })
        .collect();
    Ok(hf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::field::DEFAULT_PRIME;
    use crate::engine::poly::PolyTerm;

    fn poly(terms: &[(i64, &[u16])]) -> Polynomial {
        Polynomial::new(
            terms
                .iter()
                .map(|(c, e)| PolyTerm {
                    coef: *c,
                    exp: e.to_vec(),
                })
                .collect(),
        )
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    fn bareiss_rank(mut m: Vec<Vec<i128>>) -> usize {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        let mut prev = 1i128;
        for c in 0..cols {
            let Some(pivot) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, pivot);
            for i in r + 1..rows {
                for k in c + 1..cols {
                    m[i][k] = (m[r][c] * m[i][k] - m[i][c] * m[r][k]) / prev;
                }
                m[i][c] = 0;
            }
            prev = m[r][c];
            r += 1;
            if r == rows {
                break;
            }
        }
        r
    }

    fn rational_catalecticant_ranks(form: &[(i64, &[u16])], nvars: usize, d: usize) -> Vec<u64> {
        let coef = |e: &[u16]| -> i128 {
            form.iter().find(|(_, x)| *x == e).map_or(0, |(c, _)| *c as i128)
        };
        (0..=d)
            .map(|i| {
                let rows = monomials_of_degree(nvars, i)
                    .iter()
                    .map(|a| {
                        monomials_of_degree(nvars, d - i)
                            .iter()
                            .map(|g| {
                                let mut scale = 1i128;
                                let mut sum = Vec::new();
                                for (&x, &y) in a.exponents().iter().zip(g.exponents()) {
                                    for k in 1..=x as i128 {
                                        scale *= y as i128 + k;
                                    }
                                    sum.push(x + y);
                                }
                                coef(&sum) * scale
                            })
                            .collect()
                    })
                    .collect();
                bareiss_rank(rows) as u64
            })
            .collect()
    }

    #[test]
    fn examples_match_rational_ranks() {
        let cases: Vec<(Vec<(i64, &[u16])>, usize, Vec<u64>)> = vec![
            (vec![(1, &[4][..])], 1, vec![1, 1, 1, 1, 1]),
            (
                vec![(1, &[4, 0, 0][..]), (1, &[0, 4, 0][..]), (1, &[0, 0, 4][..])],
                3,
                vec![1, 3, 3, 3, 1],
            ),
            (vec![(1, &[2, 2][..])], 2, vec![1, 2, 3, 2, 1]),
            (
                vec![(1, &[1, 1, 1, 0][..]), (2, &[0, 0, 0, 3][..]), (-1, &[2, 0, 0, 1][..])],
                4,
                vec![],
            ),
        ];
        for (terms, n, expect) in cases {
            let d = terms[0].1.iter().map(|&e| e as usize).sum();
            let got = apolar_hf(&poly(&terms), n, DEFAULT_PRIME).unwrap();
            assert_eq!(got, rational_catalecticant_ranks(&terms, n, d));
            if !expect.is_empty() {
                assert_eq!(got, expect);
            }
            let mut rev = got.clone();
            rev.reverse();
            assert_eq!(got, rev);
        }
    }

    #[test]
    fn rejections() {
        let inhom = poly(&[(1, &[2, 0]), (1, &[0, 1])]);
        assert_eq!(apolar_hf(&inhom, 2, DEFAULT_PRIME), Err(EngineError::Inhomogeneous { index: 0 }));
        let quartic = poly(&[(1, &[4, 0])]);
        assert!(matches!(
            apolar_hf(&quartic, 2, 3),
            Err(EngineError::CharacteristicTooSmall { p: 3, degree: 4 })
        ));
        assert_eq!(apolar_hf(&Polynomial::default(), 2, 7), Err(EngineError::ZeroForm));
    }
}
