use hilbfun::engine::{relate_input, GradedIdealModel, DEFAULT_PRIME};
use hilbfun::extremal::{relate_report, Finding};
use hilbfun::lex::{Monomial, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Default)]
pub struct SweepStats {
    pub instances: usize,
    pub hypotheses_held: usize,
    pub violations: usize,
}

/// A random monomial ideal; most of them avoid the last variable so that a
/// general linear form is a nonzerodivisor in many degrees.
pub fn random_monomial_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let n = rng.random_range(3..=4);
    let support = if rng.random_bool(0.7) { n - 1 } else { n };
    let count = rng.random_range(1..=4);
    let gens = (0..count)
        .map(|_| {
            let deg = rng.random_range(2..=4);
            let mut e = vec![0u16; n];
            for _ in 0..deg {
                e[rng.random_range(0..support)] += 1;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(n, gens).unwrap()
}

/// Runs `relate_report` on random monomial ideals at `d` in `2..=4` until
/// `target` instances satisfy the hypotheses of some part.
pub fn random_relate_sweep(target: usize, seed: u64) -> SweepStats {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = SweepStats::default();
    while stats.hypotheses_held < target && stats.instances < 50 * target {
        let ideal = random_monomial_ideal(&mut rng);
        let model = GradedIdealModel::from_monomial_ideal(&ideal, DEFAULT_PRIME, 6).unwrap();
        let d = rng.random_range(2..=4);
        let input = relate_input(&model, d, rng.random()).unwrap();
        let report = relate_report(&input, d).unwrap();
        stats.instances += 1;
        if report.parts.iter().any(|p| p.hypotheses_hold == Some(true)) {
            stats.hypotheses_held += 1;
        }
        if report.parts.iter().any(|p| p.finding == Finding::Counterexample) {
            stats.violations += 1;
        }
    }
    stats
}
