//! Sparse polynomials and per-degree monomial bases.

use std::collections::HashMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::lex::{monomials_of_degree, Monomial};

use super::field::PrimeField;
use super::{EngineError, Result};

/// One term `coef * x^exp`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub coef: i64,
    pub exp: Vec<u16>,
}

/// A polynomial with integer coefficients, read modulo `p` when used.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial(pub Vec<PolyTerm>);

impl Polynomial {
    pub fn new(terms: Vec<PolyTerm>) -> Self {
        Polynomial(terms)
    }

    pub fn monomial(coef: i64, exp: Vec<u16>) -> Self {
        Polynomial(vec![PolyTerm { coef, exp }])
    }

    /// A form of degree `d` in the variables `vars` with coefficients uniform in `[0, p)`.
    pub fn random_form(nvars: usize, d: usize, vars: &[usize], p: u64, rng: &mut impl Rng) -> Self {
        let terms = monomials_of_degree(vars.len(), d)
            .into_iter()
            .map(|m| {
                let mut exp = vec![0; nvars];
                for (&v, &e) in vars.iter().zip(m.exponents()) {
                    exp[v] = e;
                }
                PolyTerm {
                    coef: rng.random_range(0..p) as i64,
                    exp,
                }
            })
            .collect();
        Polynomial(terms)
    }

    pub fn terms(&self) -> &[PolyTerm] {
        &self.0
    }

    /// Common degree of the nonzero terms modulo `p`; `None` for zero.
    /// `index` labels errors.
    pub fn homogeneous_degree(&self, field: PrimeField, nvars: usize, index: usize) -> Result<Option<usize>> {
        let mut degree = None;
        for t in &self.0 {
            if t.exp.len() != nvars {
                return Err(EngineError::ArityMismatch {
                    index,
                    expected: nvars,
                    found: t.exp.len(),
                });
            }
            if field.from_i64(t.coef) == 0 {
                continue;
            }
            let d: usize = t.exp.iter().map(|&e| e as usize).sum();
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return Err(EngineError::Inhomogeneous { index }),
                _ => {}
            }
        }
        Ok(degree)
    }

    /// Coefficient vector in the degree-`d` monomial basis.
    pub fn to_vector(&self, field: PrimeField, basis: &DegreeBasis) -> Vec<u64> {
        let mut v = vec![0; basis.len()];
        for t in &self.0 {
            let c = field.from_i64(t.coef);
            if c == 0 {
                continue;
            }
            if let Some(i) = basis.index(&Monomial::new(t.exp.clone())) {
                v[i] = field.add(v[i], c);
            }
        }
        v
    }
}

/// Monomials of one degree in descending lex order, with reverse lookup.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn new(nvars: usize, d: usize) -> Self {
        let monomials = monomials_of_degree(nvars, d);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        DegreeBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Bases of `R_0, ..., R_cap` and the tables for multiplication by a variable.
#[derive(Debug, Clone)]
pub struct RingBases {
    nvars: usize,
    degrees: Vec<DegreeBasis>,
    /// `times_var[t][i * nvars + k]` is the index of `m_i * x_k` in degree `t + 1`.
    times_var: Vec<Vec<usize>>,
}

impl RingBases {
    pub fn new(nvars: usize, cap: usize) -> Self {
        let degrees: Vec<DegreeBasis> = (0..=cap).map(|d| DegreeBasis::new(nvars, d)).collect();
        let times_var = (0..cap)
            .map(|t| {
                let next = &degrees[t + 1];
                degrees[t]
                    .monomials
                    .iter()
                    .flat_map(|m| {
                        (0..nvars).map(move |k| next.index(&m.times_var(k)).expect("degree t+1 monomial"))
                    })
                    .collect()
            })
            .collect();
        RingBases {
            nvars,
            degrees,
            times_var,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn degree(&self, t: usize) -> &DegreeBasis {
        &self.degrees[t]
    }

    pub fn dim(&self, t: usize) -> usize {
        self.degrees[t].len()
    }

    pub fn times_var_index(&self, t: usize, i: usize, k: usize) -> usize {
        self.times_var[t][i * self.nvars + k]
    }

    /// `x_k * v` for `v` in degree `t`.
    pub fn times_var(&self, t: usize, v: &[u64], k: usize) -> Vec<u64> {
        let mut out = vec![0; self.dim(t + 1)];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                out[self.times_var_index(t, i, k)] = c;
            }
        }
        out
    }

    /// `L * v` for `v` in degree `t` and a linear form `L`.
    pub fn times_linear(&self, field: PrimeField, t: usize, v: &[u64], linear: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.dim(t + 1)];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (k, &l) in linear.iter().enumerate() {
                if l != 0 {
                    let j = self.times_var_index(t, i, k);
                    out[j] = field.add(out[j], field.mul(c, l));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homogeneity() {
        let f = PrimeField::new(5).unwrap();
        let p = Polynomial::new(vec![
            PolyTerm { coef: 1, exp: vec![2, 0] },
            PolyTerm { coef: 5, exp: vec![0, 1] },
        ]);
        assert_eq!(p.homogeneous_degree(f, 2, 0).unwrap(), Some(2));
        let q = Polynomial::new(vec![
            PolyTerm { coef: 1, exp: vec![2, 0] },
            PolyTerm { coef: 1, exp: vec![0, 1] },
        ]);
        assert_eq!(q.homogeneous_degree(f, 2, 3), Err(EngineError::Inhomogeneous { index: 3 }));
        assert!(Polynomial::monomial(1, vec![1]).homogeneous_degree(f, 2, 0).is_err());
    }

    #[test]
    fn json_format() {
        let p: Polynomial = serde_json::from_str(r#"[{"coef":3,"exp":[1,2]},{"coef":-1,"exp":[0,3]}]"#).unwrap();
        assert_eq!(p.terms()[1].coef, -1);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"[{"coef":3,"exp":[1,2]},{"coef":-1,"exp":[0,3]}]"#);
    }

    #[test]
    fn multiplication_tables() {
        let b = RingBases::new(3, 3);
        assert_eq!(b.dim(3), 10);
        let f = PrimeField::default();
        let x0 = Polynomial::monomial(1, vec![1, 0, 0]).to_vector(f, b.degree(1));
        let prod = b.times_linear(f, 1, &x0, &[1, 1, 0]);
        let expect = Polynomial::new(vec![
            PolyTerm { coef: 1, exp: vec![2, 0, 0] },
            PolyTerm { coef: 1, exp: vec![1, 1, 0] },
        ])
        .to_vector(f, b.degree(2));
        assert_eq!(prod, expect);
    }
}
