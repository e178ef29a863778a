//! Homogeneous ideals truncated at a degree cap, stored degree by degree.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exec::Execution;
use crate::extremal::{RelateInput, SchemeProfile};
use crate::lex::MonomialIdeal;
use crate::macaulay::macaulay_bound;

use super::field::PrimeField;
use super::linalg::{left_kernel, Subspace};
use super::poly::{Polynomial, PolyTerm, RingBases};
use super::{EngineError, Result};

/// Attempts at drawing a linear form outside `[I]_1` before giving up.
const LINEAR_FORM_ATTEMPTS: usize = 64;

/// `[I]_t` for `t = 0..=cap` as reduced echelon row spaces in the monomial basis.
#[derive(Debug, Clone)]
pub struct GradedIdealModel {
    field: PrimeField,
    bases: Arc<RingBases>,
    spaces: Vec<Subspace>,
    generators: Vec<Polynomial>,
    exec: Execution,
}

/// Builds the ideal generated by `gens` through degree `cap`.
pub fn build_ideal(gens: &[Polynomial], nvars: usize, p: u64, cap: usize) -> Result<GradedIdealModel> {
    build_ideal_with(gens, nvars, p, cap, Execution::default())
}

pub fn build_ideal_with(
    gens: &[Polynomial],
    nvars: usize,
    p: u64,
    cap: usize,
    exec: Execution,
) -> Result<GradedIdealModel> {
    if nvars == 0 {
        return Err(EngineError::NoVariables);
    }
    let field = PrimeField::new(p)?;
    let mut by_degree: Vec<Vec<&Polynomial>> = vec![Vec::new(); cap + 1];
    for (index, g) in gens.iter().enumerate() {
        match g.homogeneous_degree(field, nvars, index)? {
            None => {}
            Some(d) if d > cap => return Err(EngineError::AboveCap { index, degree: d, cap }),
            Some(d) => by_degree[d].push(g),
        }
    }
    let bases = Arc::new(RingBases::new(nvars, cap));
    let mut spaces: Vec<Subspace> = Vec::with_capacity(cap + 1);
    for (t, fresh) in by_degree.iter().enumerate() {
        let mut rows = if t == 0 {
            Vec::new()
        } else {
            multiply_up(&bases, &spaces[t - 1], t - 1, exec)
        };
        rows.extend(fresh.iter().map(|g| g.to_vector(field, bases.degree(t))));
        spaces.push(Subspace::spanned_by(field, bases.dim(t), rows, exec));
    }
    Ok(GradedIdealModel {
        field,
        bases,
        spaces,
        generators: gens.to_vec(),
        exec,
    })
}

/// `x_k * row` for every basis row of `space` (degree `t`) and every variable.
fn multiply_up(bases: &RingBases, space: &Subspace, t: usize, exec: Execution) -> Vec<Vec<u64>> {
    let n = bases.nvars();
    let products = exec.map(space.rows(), |row| {
        (0..n).map(|k| bases.times_var(t, row, k)).collect::<Vec<_>>()
    });
    products.into_iter().flatten().collect()
}

impl GradedIdealModel {
    pub fn from_monomial_ideal(ideal: &MonomialIdeal, p: u64, cap: usize) -> Result<Self> {
        let gens: Vec<Polynomial> = ideal
            .generators()
            .iter()
            .filter(|g| g.degree() <= cap)
            .map(|g| Polynomial::monomial(1, g.exponents().to_vec()))
            .collect();
        build_ideal(&gens, ideal.nvars(), p, cap)
    }

    pub fn with_execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    pub fn nvars(&self) -> usize {
        self.bases.nvars()
    }

    pub fn cap(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn bases(&self) -> &RingBases {
        &self.bases
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn space(&self, t: usize) -> &Subspace {
        &self.spaces[t]
    }

    /// `dim [I]_t`.
    pub fn ideal_dim(&self, t: usize) -> usize {
        self.spaces[t].dim()
    }

    /// `dim [R/I]_t` for `t = 0..=cap`.
    pub fn hilbert_function(&self) -> Vec<u64> {
        self.spaces.iter().map(|s| s.codim() as u64).collect()
    }

    pub fn contains(&self, t: usize, v: &[u64]) -> bool {
        self.spaces[t].contains(self.field, v)
    }

    /// `[I]_t ⊇ R_1 [I]_{t-1}` for every `t`.
    pub fn is_ideal(&self) -> bool {
        (1..=self.cap()).all(|t| {
            multiply_up(&self.bases, &self.spaces[t - 1], t - 1, self.exec)
                .iter()
                .all(|r| self.contains(t, r))
        })
    }

    fn derived(&self, spaces: Vec<Subspace>, generators: Vec<Polynomial>) -> Self {
        let bases = if spaces.len() == self.spaces.len() {
            Arc::clone(&self.bases)
        } else {
            Arc::new(RingBases::new(self.nvars(), spaces.len() - 1))
        };
        GradedIdealModel {
            field: self.field,
            bases,
            spaces,
            generators,
            exec: self.exec,
        }
    }

    fn check_linear_form(&self, linear: &[u64]) -> Result<()> {
        if linear.len() != self.nvars() {
            return Err(EngineError::ArityMismatch {
                index: 0,
                expected: self.nvars(),
                found: linear.len(),
            });
        }
        if self.cap() == 0 {
            return Err(EngineError::CapTooSmall { needed: 1, cap: 0 });
        }
        if self.contains(1, linear) {
            return Err(EngineError::LinearFormInIdeal);
        }
        Ok(())
    }

    fn linear_polynomial(&self, linear: &[u64]) -> Polynomial {
        let n = self.nvars();
        Polynomial::new(
            linear
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| {
                    let mut exp = vec![0; n];
                    exp[k] = 1;
                    PolyTerm { coef: c as i64, exp }
                })
                .collect(),
        )
    }

    /// `(I, L)` through the same cap.
    pub fn restrict(&self, linear: &[u64]) -> Result<Self> {
        self.check_linear_form(linear)?;
        let f = self.field;
        let spaces = (0..=self.cap())
            .map(|t| {
                let mut s = self.spaces[t].clone();
                if t > 0 {
                    let rows = self
                        .bases
                        .degree(t - 1)
                        .monomials()
                        .iter()
                        .enumerate()
                        .map(|(i, _)| {
                            let mut unit = vec![0; self.bases.dim(t - 1)];
                            unit[i] = 1;
                            self.bases.times_linear(f, t - 1, &unit, linear)
                        })
                        .collect();
                    s.extend(f, rows, self.exec);
                }
                s
            })
            .collect();
        let mut gens = self.generators.clone();
        gens.push(self.linear_polynomial(linear));
        Ok(self.derived(spaces, gens))
    }

    /// `(I : L)` through degree `cap - 1`, computed degreewise as
    /// `{f : L f in [I]_{t+1}}`.
    pub fn colon_linear(&self, linear: &[u64]) -> Result<Self> {
        self.check_linear_form(linear)?;
        let f = self.field;
        let spaces = (0..self.cap())
            .map(|t| {
                let dim = self.bases.dim(t);
                let images: Vec<Vec<u64>> = (0..dim)
                    .map(|i| {
                        let mut unit = vec![0; dim];
                        unit[i] = 1;
                        let mut img = self.bases.times_linear(f, t, &unit, linear);
                        self.spaces[t + 1].reduce(f, &mut img);
                        img
                    })
                    .collect();
                left_kernel(f, self.bases.dim(t + 1), &images, self.exec)
            })
            .collect();
        Ok(self.derived(spaces, Vec::new()))
    }

    /// The ideal generated by `[I]_{<=d}`, through the same cap.
    pub fn truncation_generated(&self, d: usize) -> Result<Self> {
        if d > self.cap() {
            return Err(EngineError::CapTooSmall { needed: d, cap: self.cap() });
        }
        let mut spaces: Vec<Subspace> = self.spaces[..=d].to_vec();
        for t in d + 1..=self.cap() {
            let rows = multiply_up(&self.bases, &spaces[t - 1], t - 1, self.exec);
            spaces.push(Subspace::spanned_by(self.field, self.bases.dim(t), rows, self.exec));
        }
        let gens = self
            .generators
            .iter()
            .enumerate()
            .filter(|(i, g)| {
                g.homogeneous_degree(self.field, self.nvars(), *i)
                    .ok()
                    .flatten()
                    .is_some_and(|deg| deg <= d)
            })
            .map(|(_, g)| g.clone())
            .collect();
        Ok(self.derived(spaces, gens))
    }

    /// A uniformly random linear form outside `[I]_1`.
    pub fn random_linear_form(&self, rng: &mut impl Rng) -> Result<Vec<u64>> {
        if self.cap() == 0 || self.spaces[1].codim() == 0 {
            return Err(EngineError::NoAdmissibleLinearForm);
        }
        let p = self.field.p();
        for _ in 0..LINEAR_FORM_ATTEMPTS {
            let l: Vec<u64> = (0..self.nvars()).map(|_| rng.random_range(0..p)).collect();
            if !self.contains(1, &l) {
                return Ok(l);
            }
        }
        Err(EngineError::NoAdmissibleLinearForm)
    }

    /// `h`, `b`, `l` rows for the linear form `L`.
    pub fn profile_for(&self, linear: &[u64], seed: u64) -> Result<RestrictionProfile> {
        let h = self.hilbert_function();
        let b = self.colon_linear(linear)?.hilbert_function();
        let l = self.restrict(linear)?.hilbert_function();
        for i in 1..h.len() {
            if h[i] != b[i - 1] + l[i] {
                return Err(EngineError::AdditivityViolated {
                    degree: i,
                    h: h[i],
                    b: b[i - 1],
                    l: l[i],
                });
            }
        }
        Ok(RestrictionProfile {
            h,
            b,
            l,
            p: self.field.p(),
            seed,
        })
    }
}

/// Rows of `R/I`, `R/(I:L)`, `R/(I,L)` for a seeded random `L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionProfile {
    pub h: Vec<u64>,
    pub b: Vec<u64>,
    pub l: Vec<u64>,
    pub p: u64,
    pub seed: u64,
}

impl From<RestrictionProfile> for RelateInput {
    fn from(p: RestrictionProfile) -> Self {
        RelateInput {
            h: p.h,
            b: p.b,
            l: p.l,
            ..Default::default()
        }
    }
}

pub fn restriction_profile(model: &GradedIdealModel, seed: u64) -> Result<RestrictionProfile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let linear = model.random_linear_form(&mut rng)?;
    model.profile_for(&linear, seed)
}

/// Rows for the extremality report at degree `d`: the profile of `I`, the
/// `R/J` and `R/(J:L)` rows for `J = <[I]_{<=d}>` with the same `L`, and the
/// saturation of `J` read off as a scheme profile.
pub fn relate_input(model: &GradedIdealModel, d: usize, seed: u64) -> Result<RelateInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let linear = model.random_linear_form(&mut rng)?;
    let profile = model.profile_for(&linear, seed)?;
    let j = model.truncation_generated(d)?;
    let j_h = j.hilbert_function();
    let j_b = j.colon_linear(&linear)?.hilbert_function();
    Ok(RelateInput {
        j_h: Some(j_h),
        j_b: Some(j_b),
        ..profile.into()
    })
}

/// A scheme profile from an ideal assumed saturated: its Hilbert function and
/// the Hilbert function of the restriction by a seeded random `L`.
pub fn scheme_profile(model: &GradedIdealModel, seed: u64) -> Result<SchemeProfile> {
    let p = restriction_profile(model, seed)?;
    Ok(SchemeProfile { h: p.h, l: p.l })
}

/// Whether `(I : L)_t = I_t` for `t` in `[m, cap - 1]` for at least one of
/// `trials` seeded random linear forms.
///
/// Colon always contains `I`, so equality is a dimension check. A saturated
/// ideal passes for a general `L`; an answer of `false` can come from every
/// sampled `L` being special, and more trials make that less likely.
pub fn is_saturated_from(model: &GradedIdealModel, m: usize, trials: usize, seed: u64) -> Result<bool> {
    if m >= model.cap() {
        return Err(EngineError::CapTooSmall { needed: m + 1, cap: model.cap() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let linear = model.random_linear_form(&mut rng)?;
        let colon = model.colon_linear(&linear)?;
        if (m..model.cap()).all(|t| colon.ideal_dim(t) == model.ideal_dim(t)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Least `m` from which [`is_saturated_from`] holds, if any below the cap.
pub fn saturation_index(model: &GradedIdealModel, trials: usize, seed: u64) -> Result<Option<usize>> {
    for m in 0..model.cap() {
        if is_saturated_from(model, m, trials, seed)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// `h_{d+1}, ..., h_{d+horizon}` forced by maximal growth from degree `d`.
pub fn gotzmann_predict(h_d: u64, d: usize, horizon: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(horizon);
    let mut cur = h_d;
    for t in d..d + horizon {
        cur = macaulay_bound(cur, t)?;
        out.push(cur);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::field::DEFAULT_PRIME;

    fn mono(exp: &[u16]) -> Polynomial {
        Polynomial::monomial(1, exp.to_vec())
    }

    #[test]
    fn linear_ideal() {
        let m = build_ideal(&[mono(&[1, 0])], 2, DEFAULT_PRIME, 3).unwrap();
        assert_eq!(m.hilbert_function(), vec![1, 1, 1, 1]);
        assert!(m.is_ideal());
    }

    #[test]
    fn inhomogeneous_rejected_with_index() {
        let bad = Polynomial::new(vec![
            PolyTerm { coef: 1, exp: vec![1, 0] },
            PolyTerm { coef: 1, exp: vec![0, 2] },
        ]);
        let err = build_ideal(&[mono(&[1, 0]), bad], 2, DEFAULT_PRIME, 3).unwrap_err();
        assert_eq!(err, EngineError::Inhomogeneous { index: 1 });
        assert!(matches!(
            build_ideal(&[mono(&[3, 0])], 2, DEFAULT_PRIME, 2),
            Err(EngineError::AboveCap { index: 0, .. })
        ));
        assert!(matches!(build_ideal(&[], 2, 4, 2), Err(EngineError::NotPrime(4))));
    }

    #[test]
    fn colon_of_reduced_hypersurface() {
        let m = build_ideal(&[mono(&[1, 1])], 2, DEFAULT_PRIME, 5).unwrap();
        let colon = m.colon_linear(&[3, 5]).unwrap();
        assert_eq!(colon.cap(), 4);
        for t in 0..=4 {
            assert_eq!(colon.space(t), m.space(t));
        }
    }

    #[test]
    fn linear_form_in_ideal_rejected() {
        let m = build_ideal(&[mono(&[1, 0])], 2, DEFAULT_PRIME, 3).unwrap();
        assert_eq!(m.colon_linear(&[2, 0]).unwrap_err(), EngineError::LinearFormInIdeal);
        assert_eq!(m.restrict(&[2, 0]).unwrap_err(), EngineError::LinearFormInIdeal);
        let all = build_ideal(&[mono(&[1, 0]), mono(&[0, 1])], 2, DEFAULT_PRIME, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(all.random_linear_form(&mut rng), Err(EngineError::NoAdmissibleLinearForm));
    }

    #[test]
    fn truncation_at_cap_is_identity() {
        let m = build_ideal(&[mono(&[2, 0]), mono(&[1, 1])], 2, DEFAULT_PRIME, 4).unwrap();
        let j = m.truncation_generated(4).unwrap();
        assert_eq!(j.hilbert_function(), m.hilbert_function());
        assert!(m.truncation_generated(5).is_err());
    }

    #[test]
    fn artinian_not_saturated() {
        let m = build_ideal(&[mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 3])], 2, DEFAULT_PRIME, 5).unwrap();
        assert!(!is_saturated_from(&m, 0, 3, 1).unwrap());
        assert_eq!(saturation_index(&m, 3, 1).unwrap(), Some(3));
    }

    #[test]
    fn gotzmann_tails() {
        assert_eq!(gotzmann_predict(19, 3, 2).unwrap(), vec![31, 46]);
        assert_eq!(gotzmann_predict(28, 4, 1).unwrap(), vec![40]);
        assert_eq!(gotzmann_predict(1, 4, 5).unwrap(), vec![1; 5]);
    }
}
