use std::collections::BTreeMap;

use hilbfun::engine::{koszul_betti, GradedIdealModel, DEFAULT_PRIME};
use hilbfun::lex::{
    cancellation_socle_lower_bound, ek_betti, ek_betti_with, hf_of_monomial_ideal, is_stable, lex_ideal,
    lex_segment_growth, monomials_of_degree, ring_dim, socle_dimensions, truncate_ideal, MonomialIdeal,
};
use hilbfun::macaulay::{binomial, is_o_sequence, macaulay_bound};
use hilbfun::Execution;
use proptest::prelude::*;

fn truncated_lex(h: &[u64], nvars: usize, d: usize) -> MonomialIdeal {
    truncate_ideal(&lex_ideal(h, nvars).unwrap(), d)
}

/// Coefficients of `sum_t h_t z^t * (1 - z)^n`.
fn k_polynomial_from_hf(h: &[u64], n: usize) -> BTreeMap<usize, i64> {
    let mut k = BTreeMap::new();
    for (t, &ht) in h.iter().enumerate() {
        for s in 0..=n {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            *k.entry(t + s).or_insert(0) += sign * ht as i64 * binomial(n as u64, s as u64).unwrap() as i64;
        }
    }
    k.retain(|_, v| *v != 0);
    k
}

#[test]
fn nineteen_variables_top_value_thirty() {
    let i = truncated_lex(&[1, 19, 17, 19, 30], 19, 4);
    assert_eq!(hf_of_monomial_ideal(&i, 5), vec![1, 19, 17, 19, 30, 0]);
    let b = ek_betti(&i).unwrap();
    assert_eq!(b.get(1, 2), 173);
    assert_eq!(b.get(1, 3), 19);
    assert_eq!(b.get(1, 4), 1);
    assert_eq!(b.get(1, 5), 43);
    assert_eq!(i.generators_of_degree(5).count(), 43);
    assert_eq!(b.get(18, 19), 247);
    assert_eq!(b.get(18, 20), 131);
    assert_eq!(b.get(18, 21), 0);
    assert_eq!(b.get(18, 22), 551);
    assert_eq!(b.get(19, 20), 13);
    assert_eq!(b.get(19, 21), 7);
    assert_eq!(b.get(19, 23), 30);
    assert_eq!(cancellation_socle_lower_bound(&b, 19, 21), 7);
}

#[test]
fn nineteen_variables_top_value_twenty_nine() {
    let i = truncated_lex(&[1, 19, 17, 19, 29], 19, 4);
    let b = ek_betti(&i).unwrap();
    assert_eq!(b.get(1, 2), 173);
    assert_eq!(b.get(1, 4), 2);
    assert_eq!(b.get(1, 5), 41);
    assert_eq!(i.generators_of_degree(5).count(), 41);
    assert_eq!(b.get(18, 21), 1);
    assert_eq!(b.get(19, 21), 7);
    assert_eq!(b.get(19, 23), 29);
    assert_eq!(cancellation_socle_lower_bound(&b, 19, 21), 6);
}

#[test]
fn nineteen_variable_tables_satisfy_k_polynomial_and_socle_duality() {
    for top in [29u64, 30] {
        let h = [1, 19, 17, 19, top];
        let i = truncated_lex(&h, 19, 4);
        let b = ek_betti(&i).unwrap();
        assert_eq!(b.k_polynomial(), k_polynomial_from_hf(&h, 19));
        let socle = socle_dimensions(&i, 4);
        for (t, &s) in socle.iter().enumerate() {
            assert_eq!(b.get(19, 19 + t), s, "socle degree {t}");
        }
    }
}

#[test]
fn modes_agree_on_betti_tables() {
    let i = truncated_lex(&[1, 19, 17, 19, 30], 19, 4);
    let tables: Vec<_> = Execution::all().into_iter().map(|e| ek_betti_with(&i, e).unwrap()).collect();
    assert!(tables.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn small_koszul_oracle() {
    for (h, n) in [
        (vec![1u64, 2, 1], 2usize),
        (vec![1, 2, 3, 1], 2),
        (vec![1, 3, 3, 1], 3),
        (vec![1, 3, 6, 4, 1], 3),
        (vec![1, 3, 2, 2, 1], 3),
        (vec![1, 2, 2, 2, 2], 2),
    ] {
        let i = lex_ideal(&h, n).unwrap();
        let model = GradedIdealModel::from_monomial_ideal(&i, DEFAULT_PRIME, h.len()).unwrap();
        assert_eq!(koszul_betti(&model).unwrap(), ek_betti(&i).unwrap(), "h = {h:?}");
    }
}

#[test]
fn lex_segment_growth_matches_macaulay_bound() {
    for d in 1..=4usize {
        for r in 1..=300u64 {
            let mut n = 1;
            while ring_dim(n, d).unwrap() < r {
                n += 1;
            }
            let best = (n..=n + 1).map(|m| lex_segment_growth(r, d, m).unwrap()).max().unwrap();
            assert_eq!(best, macaulay_bound(r, d).unwrap(), "r={r} d={d}");
        }
    }
}

/// Small O-sequences ending in positive values, in `n` variables.
fn o_sequences(n: usize, max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    (1..=max_len, proptest::collection::vec(0.0f64..1.0, max_len)).prop_map(move |(len, fr)| {
        let mut h = vec![1u64];
        for d in 1..len {
            let cap = if d == 1 {
                n as u64
            } else {
                macaulay_bound(h[d - 1], d - 1).unwrap()
            };
            let v = ((cap as f64) * fr[d]).ceil() as u64;
            if v == 0 {
                break;
            }
            h.push(v.min(cap));
        }
        h
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lex_round_trip_and_stability(n in 1usize..=4, h in o_sequences(4, 6)) {
        prop_assume!(h.get(1).is_none_or(|&h1| h1 <= n as u64));
        prop_assert!(is_o_sequence(&h).unwrap().is_valid());
        let i = lex_ideal(&h, n).unwrap();
        prop_assert!(is_stable(&i).is_ok());
        let mut expect = h.clone();
        expect.push(0);
        prop_assert_eq!(hf_of_monomial_ideal(&i, h.len()), expect);
    }

    #[test]
    fn ek_properties(n in 1usize..=4, h in o_sequences(4, 6)) {
        prop_assume!(h.get(1).is_none_or(|&h1| h1 <= n as u64));
        let i = lex_ideal(&h, n).unwrap();
        let b = ek_betti(&i).unwrap();
        prop_assert_eq!(b.get(0, 0), 1);
        prop_assert_eq!(b.k_polynomial(), k_polynomial_from_hf(&h, n));
        let socle = socle_dimensions(&i, h.len());
        for (t, &s) in socle.iter().enumerate() {
            prop_assert_eq!(b.get(n, n + t), s);
        }
        for d in 1..=h.len() {
            let in_ideal_prev: Vec<_> = monomials_of_degree(n, d - 1).into_iter().filter(|m| i.contains(m)).collect();
            let mut products = std::collections::HashSet::new();
            for m in &in_ideal_prev {
                for k in 0..n {
                    products.insert(m.times_var(k));
                }
            }
            let hd = h.get(d).copied().unwrap_or(0);
            let new = ring_dim(n, d).unwrap() - hd - products.len() as u64;
            prop_assert_eq!(b.get(1, d), new);
            prop_assert_eq!(i.generators_of_degree(d).count() as u64, new);
        }
    }

    #[test]
    fn ek_matches_koszul(n in 1usize..=3, h in o_sequences(3, 5)) {
        prop_assume!(h.get(1).is_none_or(|&h1| h1 <= n as u64));
        let i = lex_ideal(&h, n).unwrap();
        let model = GradedIdealModel::from_monomial_ideal(&i, DEFAULT_PRIME, h.len()).unwrap();
        prop_assert_eq!(koszul_betti(&model).unwrap(), ek_betti(&i).unwrap());
    }
}
