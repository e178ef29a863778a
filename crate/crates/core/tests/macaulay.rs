use hilbfun::decomposition::{enumerate_gorenstein_decompositions, validate_decomposition, HVector};
use hilbfun::macaulay::{binomial, expand, green_bound, is_o_sequence, lower_shift, macaulay_bound};
use proptest::prelude::*;

/// Exponent vectors of degree `d` in `n` variables, largest in lex order first.
fn lex_monomials(n: usize, d: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in lex_monomials(n - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

fn vars_needed(h: u64, d: usize) -> usize {
    (1..).find(|&n| binomial((n + d - 1) as u64, d as u64).unwrap() >= h).unwrap()
}

/// Monomials outside a lex segment in `n` variables are the `h` lex-smallest
/// ones; those are the standard monomials of a lex ideal with `h_d = h`.
fn standard_lex(h: u64, d: usize, n: usize) -> Vec<Vec<usize>> {
    let all = lex_monomials(n, d);
    all[all.len() - h as usize..].to_vec()
}

/// Standard monomials not divisible by the last variable span the restriction
/// of the lex quotient by it, which realizes Green's bound.
fn green_oracle(h: u64, d: usize) -> u64 {
    let n = vars_needed(h, d) + 1;
    standard_lex(h, d, n).iter().filter(|m| m[n - 1] == 0).count() as u64
}

/// A degree `d + 1` monomial survives modulo the ideal generated by a lex
/// segment exactly when all of its degree `d` divisors are standard; the
/// survivors count realizes Macaulay's bound.
fn macaulay_oracle(h: u64, d: usize) -> u64 {
    let n = vars_needed(h, d);
    let std = standard_lex(h, d, n);
    lex_monomials(n, d + 1)
        .into_iter()
        .filter(|m| {
            (0..n).filter(|&i| m[i] > 0).all(|i| {
                let mut q = m.clone();
                q[i] -= 1;
                std.contains(&q)
            })
        })
        .count() as u64
}

#[test]
fn bounds_match_lex_oracles_exhaustively() {
    for d in 1..=4 {
        for h in 1..=60 {
            assert_eq!(macaulay_bound(h, d).unwrap(), macaulay_oracle(h, d), "macaulay({h},{d})");
            assert_eq!(green_bound(h, d).unwrap(), green_oracle(h, d), "green({h},{d})");
        }
    }
}

proptest! {
    #[test]
    fn expansion_is_well_formed(r in 1u64..100_000, d in 1usize..10) {
        let e = expand(r, d).unwrap();
        prop_assert!(e.is_well_formed());
        prop_assert_eq!(e.value(), r);
        let sum: u64 = e.terms().iter().map(|t| binomial(t.top, t.bottom as u64).unwrap()).sum();
        prop_assert_eq!(sum, r);
        let terms = e.terms();
        prop_assert_eq!(terms[0].bottom, d);
        for w in terms.windows(2) {
            prop_assert!(w[0].top > w[1].top);
            prop_assert_eq!(w[0].bottom, w[1].bottom + 1);
        }
        for t in terms {
            prop_assert!(t.top >= t.bottom as u64);
        }
    }

    #[test]
    fn bounds_are_ordered(r in 1u64..5_000, d in 1usize..8) {
        let up = macaulay_bound(r, d).unwrap();
        prop_assert!(up >= r);
        prop_assert!(green_bound(r, d).unwrap() <= r);
        prop_assert!(lower_shift(r, d).unwrap() <= r);
        // Growth bounds are monotone in the value.
        prop_assert!(macaulay_bound(r + 1, d).unwrap() >= up);
        prop_assert!(green_bound(r + 1, d).unwrap() >= green_bound(r, d).unwrap());
    }

    #[test]
    fn maximal_growth_sequences_are_o_sequences(r in 1u64..300, steps in 1usize..4) {
        let mut h = vec![1u64, r];
        for t in 1..=steps {
            h.push(macaulay_bound(h[t], t).unwrap());
        }
        prop_assert!(is_o_sequence(&h).unwrap().is_valid());
        let mut over = h.clone();
        *over.last_mut().unwrap() += 1;
        prop_assert!(!is_o_sequence(&over).unwrap().is_valid());
    }

    #[test]
    fn enumerated_decompositions_match_brute_force(mid in 1u64..8, top in 1u64..8) {
        let h = vec![1, top, mid, top, 1];
        prop_assume!(is_o_sequence(&h).unwrap().is_valid());
        let hv = HVector::new(h.clone()).unwrap();
        let found = enumerate_gorenstein_decompositions(&hv).unwrap();
        for dec in &found {
            prop_assert!(validate_decomposition(dec, true).unwrap().is_valid());
        }
        let mut brute = Vec::new();
        for b1 in 0..=top.min(mid) {
            let b = vec![1, b1, b1, 1];
            let l = vec![1, h[1] - 1, h[2] - b1, h[3] - b1, 0];
            if h[2] < b1 || h[3] < b1 {
                continue;
            }
            let l_ok = is_o_sequence(&l).unwrap().is_valid()
                && (1..=4).all(|d| h[d] == 0 || l[d] <= green_oracle(h[d], d));
            let b_ok = is_o_sequence(&b).unwrap().is_valid();
            if l_ok && b_ok && b1 >= 1 {
                brute.push(b);
            }
        }
        let rows: Vec<Vec<u64>> = found.iter().map(|d| d.b.clone()).collect();
        prop_assert_eq!(rows, brute);
    }
}
