use num_bigint::BigInt;
use opprank_core::characters::FormalCharacter;
use opprank_core::jantzen::{jantzen_sum, resolve_simple, ResolutionStatus, DEFAULT_DEPTH_LIMIT};
use opprank_core::{RootSystem, Weight};

const PRIMES: [u64; 3] = [11, 13, 17];

fn e6() -> RootSystem {
    RootSystem::new("E6".parse().unwrap())
}

/// `a·ω1 + Σ c_i ω_i` with `a = p − shift`.
fn wt(p: u64, shift: i64, rest: &[(usize, i64)]) -> Weight {
    let mut c = vec![0i64; 6];
    c[0] = p as i64 - shift;
    for &(i, k) in rest {
        c[i - 1] += k;
    }
    Weight::new(c)
}

/// The five-term alternating sum, in chain order.
fn alternating_terms(p: u64) -> Vec<(Weight, i64)> {
    vec![
        (wt(p, 7, &[(6, 3)]), 1),
        (wt(p, 8, &[(4, 1), (6, 2)]), -1),
        (wt(p, 9, &[(3, 1), (6, 1)]), 1),
        (wt(p, 10, &[(2, 1), (5, 1)]), -1),
        (wt(p, 11, &[(2, 2)]), 1),
    ]
}

fn closed_form(p: u64) -> BigInt {
    let p = BigInt::from(p);
    let pw = |k: u32| num_traits::pow(p.clone(), k as usize);
    let inner = 3 * pw(8) - 12 * pw(7) + 39 * pw(6) + 320 * pw(5) - 550 * pw(4)
        + 1240 * pw(3)
        + 2080 * pw(2)
        - 1920 * &p
        + 1440;
    let num = &p * (&p + 1) * (&p + 3) * inner;
    let den = BigInt::from(128 * 3 * 5 * 11);
    assert_eq!(&num % &den, BigInt::from(0), "closed form not integral");
    num / den
}

#[test]
fn top_jantzen_sum_is_five_term_alternating() {
    let rs = e6();
    for p in PRIMES {
        let lambda = wt(p, 1, &[]);
        let sum = jantzen_sum(&rs, &lambda, p).unwrap();
        let expected = FormalCharacter::from_terms(rs.spec(), alternating_terms(p)).unwrap();
        assert_eq!(sum, expected, "p = {p}");
    }
}

#[test]
fn intermediate_sums_follow_the_tail_of_the_alternating_sum() {
    let rs = e6();
    for p in PRIMES {
        let terms = alternating_terms(p);
        for k in 0..terms.len() {
            let sum = jantzen_sum(&rs, &terms[k].0, p).unwrap();
            // the sum for the k-th weight is the remaining tail, sign-normalised
            let tail: Vec<(Weight, i64)> = terms[k + 1..]
                .iter()
                .map(|(w, c)| (w.clone(), c * terms[k + 1].1.signum()))
                .collect();
            let expected = FormalCharacter::from_terms(rs.spec(), tail).unwrap();
            assert_eq!(sum, expected, "p = {p}, link {k}");
        }
    }
}

#[test]
fn chain_resolution_matches_closed_form() {
    let rs = e6();
    for p in PRIMES {
        let lambda = wt(p, 1, &[]);
        let res = resolve_simple(&rs, &lambda, p, DEFAULT_DEPTH_LIMIT).unwrap();
        assert_eq!(res.status, ResolutionStatus::ChainResolved, "p = {p}");
        assert_eq!(res.depth(), 5);
        let weights: Vec<&Weight> = res.chain.iter().map(|l| &l.weight).collect();
        assert_eq!(weights[0], &lambda);
        for (link, (w, _)) in weights[1..].iter().zip(alternating_terms(p)) {
            assert_eq!(*link, &w);
        }
        assert_eq!(res.dim.unwrap(), closed_form(p), "p = {p}");
    }
}

#[test]
fn dimension_is_alternating_sum_of_weyl_dimensions() {
    let rs = e6();
    for p in PRIMES {
        let mut total = rs.weyl_dim(&wt(p, 1, &[])).unwrap();
        for (w, c) in alternating_terms(p) {
            total -= BigInt::from(c) * rs.weyl_dim(&w).unwrap();
        }
        assert_eq!(total, closed_form(p));
    }
}
