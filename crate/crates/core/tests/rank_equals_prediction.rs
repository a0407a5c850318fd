//! Brute-force p-ranks of oppositeness matrices against dim L(λ_opp).

use num_bigint::BigInt;
use opprank_core::exactlinalg::MatrixModP;
use opprank_core::finitegeom::GeometryProblem;
use opprank_core::jantzen::{
    lambda_opp, resolve_simple, steinberg_rank_power, OppositeWeightSpec, ResolutionStatus,
    DEFAULT_DEPTH_LIMIT,
};
use opprank_core::{RootSystem, RootSystemSpec, TypeSet};

fn predicted(spec: RootSystemSpec, cotype: &TypeSet, p: u64, t: u32) -> Option<BigInt> {
    let rs = RootSystem::new(spec);
    let ws = OppositeWeightSpec {
        cotype: cotype.clone(),
        p,
        t: 1,
        twist: None,
    };
    let lambda = lambda_opp(&rs, &ws).unwrap();
    let res = resolve_simple(&rs, &lambda, p, DEFAULT_DEPTH_LIMIT).unwrap();
    res.dim.map(|d| steinberg_rank_power(&d, t))
}

fn measured(spec: RootSystemSpec, cotype: &TypeSet, p: u64, t: u32) -> usize {
    let problem = GeometryProblem::new(spec, p, t, cotype.clone()).unwrap();
    let m = problem.build_incidence().unwrap();
    MatrixModP::from_incidence(&m, p).unwrap().rank()
}

fn all_cotypes(rank: usize) -> Vec<TypeSet> {
    (0u32..1 << rank)
        .map(|mask| {
            let nodes = (1..=rank).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            TypeSet::new(nodes, rank).unwrap()
        })
        .collect()
}

/// Resolved predictions must equal the rank; unresolved ones must at least
/// bound it strictly by the Weyl dimension.
fn check(name: &str, cotype: TypeSet, p: u64, t: u32) {
    let spec: RootSystemSpec = name.parse().unwrap();
    let rank = BigInt::from(measured(spec, &cotype, p, t));
    match predicted(spec, &cotype, p, t) {
        Some(pred) => assert_eq!(pred, rank, "{name} cotype {cotype} q={p}^{t}"),
        None => {
            let rs = RootSystem::new(spec);
            let ws = OppositeWeightSpec {
                cotype: cotype.clone(),
                p,
                t: 1,
                twist: None,
            };
            let weyl = rs.weyl_dim(&lambda_opp(&rs, &ws).unwrap()).unwrap();
            assert!(
                steinberg_rank_power(&weyl, t) > rank,
                "{name} cotype {cotype} q={p}^{t}"
            );
        }
    }
}

#[test]
fn multiplicity_two_sum_stays_unresolved() {
    // V(ω1+ω3) for A3 at p = 2 has Jantzen sum 2χ(0)
    let spec: RootSystemSpec = "A3".parse().unwrap();
    let cotype = TypeSet::new(vec![2], 3).unwrap();
    assert_eq!(predicted(spec, &cotype, 2, 1), None);
    assert_eq!(measured(spec, &cotype, 2, 1), 14);
}

#[test]
fn projective_lines_and_planes() {
    for (p, t) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        check("A1", TypeSet::empty(), p, t);
        for cotype in all_cotypes(2) {
            check("A2", cotype, p, t);
        }
    }
}

#[test]
fn projective_three_space() {
    for (p, t) in [(2u64, 1u32), (3, 1), (2, 2)] {
        for cotype in all_cotypes(3) {
            // full flags over GF(3) and GF(4) exceed a comfortable test size
            if cotype.is_empty() && p.pow(t) > 2 {
                continue;
            }
            check("A3", cotype, p, t);
        }
    }
}

#[test]
fn projective_four_space_points_and_lines() {
    for cotype in [vec![2, 3, 4], vec![1, 3, 4], vec![1, 2, 4], vec![1, 2, 3]] {
        check("A4", TypeSet::new(cotype, 4).unwrap(), 2, 1);
    }
}

fn points(rank: usize) -> TypeSet {
    TypeSet::new((2..=rank).collect(), rank).unwrap()
}

#[test]
fn symplectic_points() {
    for (p, t) in [(2, 1), (3, 1), (5, 1), (2, 2)] {
        check("C2", points(2), p, t);
    }
    check("C3", points(3), 2, 1);
    check("C3", points(3), 3, 1);
}

#[test]
fn parabolic_quadric_points() {
    check("B2", points(2), 3, 1);
    check("B2", points(2), 5, 1);
    check("B3", points(3), 3, 1);
}

#[test]
fn hyperbolic_quadric_points() {
    check("D3", points(3), 2, 1);
    check("D3", points(3), 3, 1);
    check("D4", points(4), 2, 1);
    check("D4", points(4), 3, 1);
}

#[test]
fn rank_never_exceeds_weyl_dimension() {
    for (name, cotype, p) in [("C2", points(2), 3), ("B2", points(2), 3), ("D4", points(4), 2)] {
        let spec: RootSystemSpec = name.parse().unwrap();
        let rs = RootSystem::new(spec);
        let ws = OppositeWeightSpec {
            cotype: cotype.clone(),
            p,
            t: 1,
            twist: None,
        };
        let lambda = lambda_opp(&rs, &ws).unwrap();
        let res = resolve_simple(&rs, &lambda, p, DEFAULT_DEPTH_LIMIT).unwrap();
        let weyl = rs.weyl_dim(&lambda).unwrap();
        let rank = BigInt::from(measured(spec, &cotype, p, 1));
        assert!(rank <= weyl);
        assert_eq!(rank == weyl, res.status == ResolutionStatus::Simple, "{name} p={p}");
    }
}
