//! Library results against small independent computations.

use std::collections::{BTreeMap, BTreeSet};

use assoc_core::cluster::{initial_seed_an, ExchangeGraph, Quiver, Seed, DEFAULT_BUDGET};
use assoc_core::flipgraph::{catalan, count_faces, FlipGraph};
use assoc_core::repcc::{cc_map, IntervalModule, Orientation};
use assoc_core::{Diagonal, LaurentPoly, Partition, Triangulation, Var};
use num_bigint::BigInt;
use num_rational::BigRational;

type Pair = (usize, usize);

fn crosses(a: Pair, b: Pair) -> bool {
    let (p, q) = a;
    let (r, s) = b;
    (p < r && r < q && q < s) || (r < p && p < s && s < q)
}

fn all_diagonals(n: usize) -> Vec<Pair> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 2..n {
            if !(a == 0 && b == n - 1) {
                out.push((a, b));
            }
        }
    }
    out
}

fn non_crossing(set: &[Pair]) -> bool {
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !crosses(a, b)))
}

/// Every non-crossing subset of diagonals, by subset search.
fn dissections(n: usize) -> Vec<Vec<Pair>> {
    let ds = all_diagonals(n);
    let mut out = Vec::new();
    for mask in 0u32..(1 << ds.len()) {
        let set: Vec<Pair> = (0..ds.len()).filter(|i| mask >> i & 1 == 1).map(|i| ds[i]).collect();
        if non_crossing(&set) {
            out.push(set);
        }
    }
    out
}

fn pairs_of(t: &Triangulation) -> BTreeSet<Pair> {
    t.diagonals().iter().map(|d| (d.tail.min(d.head), d.tail.max(d.head))).collect()
}

#[test]
fn enumeration_matches_subset_search() {
    for n in 3..=8 {
        let brute: BTreeSet<BTreeSet<Pair>> = dissections(n)
            .into_iter()
            .filter(|s| s.len() == n - 3)
            .map(|s| s.into_iter().collect())
            .collect();
        let lib: BTreeSet<BTreeSet<Pair>> = Triangulation::enumerate(n).unwrap().iter().map(pairs_of).collect();
        assert_eq!(brute, lib, "n={n}");
        assert_eq!(brute.len() as u64, catalan(n - 2));
    }
}

#[test]
fn flips_match_unique_replacement() {
    for n in 4..=8 {
        let ds = all_diagonals(n);
        for t in Triangulation::enumerate(n).unwrap() {
            let set = pairs_of(&t);
            for d in t.diagonals() {
                let key = (d.tail.min(d.head), d.tail.max(d.head));
                let rest: Vec<Pair> = set.iter().copied().filter(|&e| e != key).collect();
                let candidates: Vec<Pair> = ds
                    .iter()
                    .copied()
                    .filter(|&e| e != key && !rest.contains(&e) && rest.iter().all(|&r| !crosses(r, e)))
                    .collect();
                assert_eq!(candidates.len(), 1, "{t} {d}");
                let mut expected: BTreeSet<Pair> = rest.into_iter().collect();
                expected.insert(candidates[0]);
                assert_eq!(pairs_of(&t.flip_diagonal(d).unwrap()), expected);
            }
        }
    }
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn face_counts_match_dissection_formula() {
    for n in 1..=5u64 {
        let m = n + 3;
        for k in 0..=n {
            let j = n - k;
            let expected = binom(m - 3, j) * binom(m + j - 1, j) / (j + 1);
            assert_eq!(count_faces(n as usize, k as usize).unwrap(), expected, "n={n} k={k}");
        }
    }
    // and against subset search on the hexagon
    let hexagon = dissections(6);
    for k in 0..=3usize {
        let by_size = hexagon.iter().filter(|s| s.len() == 3 - k).count() as u64;
        assert_eq!(count_faces(3, k).unwrap(), by_size);
    }
}

#[test]
fn flip_graph_from_triangulation_flips() {
    for n in 1..=6 {
        let g = FlipGraph::build(n).unwrap();
        let mut expected = BTreeSet::new();
        for t in Triangulation::enumerate(n + 2).unwrap() {
            let p = t.lambda_map().unwrap();
            for d in t.diagonals() {
                let q = t.flip_diagonal(d).unwrap().lambda_map().unwrap();
                expected.insert(if p < q { (p.clone(), q) } else { (q, p.clone()) });
            }
        }
        assert_eq!(g.edges, expected, "n={n}");
    }
}

/// Arrow-level mutation: compose paths through k, reverse arrows at k,
/// cancel 2-cycles, drop arrows between frozen vertices.
fn pictorial_mutation(q: &Quiver, k: usize) -> Vec<Vec<i64>> {
    let s = q.size();
    let mut arrows: BTreeMap<Pair, i64> = BTreeMap::new();
    for (i, j, m) in q.arrows() {
        *arrows.entry((i, j)).or_default() += m;
    }
    let into: Vec<(usize, i64)> = arrows.iter().filter(|(&(_, j), _)| j == k).map(|(&(i, _), &m)| (i, m)).collect();
    let out: Vec<(usize, i64)> = arrows.iter().filter(|(&(i, _), _)| i == k).map(|(&(_, j), &m)| (j, m)).collect();
    let mut next: BTreeMap<Pair, i64> = BTreeMap::new();
    for (&(i, j), &m) in &arrows {
        if i == k || j == k {
            *next.entry((j, i)).or_default() += m;
        } else {
            *next.entry((i, j)).or_default() += m;
        }
    }
    for &(i, a) in &into {
        for &(j, b) in &out {
            *next.entry((i, j)).or_default() += a * b;
        }
    }
    let mut b = vec![vec![0i64; s]; s];
    for ((i, j), m) in next {
        b[i - 1][j - 1] += m;
        b[j - 1][i - 1] -= m;
    }
    let frozen = q.mutable_count();
    for i in frozen..s {
        for j in frozen..s {
            b[i][j] = 0;
        }
    }
    b
}

#[test]
fn mutation_matches_pictorial_rule() {
    let quivers = vec![
        Quiver::linear(4),
        Quiver::alternating(5),
        Quiver::from_arrows(3, 3, &[(1, 2), (2, 3), (3, 1)]).unwrap(),
        Quiver::from_arrows(4, 2, &[(1, 2), (2, 3), (4, 2), (3, 1)]).unwrap(),
        Quiver::from_arrows(4, 4, &[(1, 2), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap(),
    ];
    for q in quivers {
        let mut cur = q;
        for k in [1, 2, 1, 2, 1] {
            if k > cur.mutable_count() {
                continue;
            }
            let next = cur.mutate(k).unwrap();
            assert_eq!(next.matrix(), pictorial_mutation(&cur, k).as_slice(), "{cur} at {k}");
            cur = next;
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Numerical exchange relation applied to values, never forming polynomials.
fn numeric_mutate(b: &[Vec<i64>], vals: &mut [BigRational], k: usize) {
    let mut plus = rat(1, 1);
    let mut minus = rat(1, 1);
    for (i, v) in vals.iter().enumerate() {
        let e = b[i][k - 1];
        if e > 0 {
            plus *= v.pow(e as i32);
        } else if e < 0 {
            minus *= v.pow((-e) as i32);
        }
    }
    vals[k - 1] = (plus + minus) / &vals[k - 1];
}

#[test]
fn exchange_relation_evaluated_numerically() {
    let point: Vec<BigRational> = vec![rat(2, 1), rat(3, 5), rat(7, 2), rat(-1, 3), rat(5, 4)];
    for (n, walk) in [(3usize, vec![1, 2, 3, 1, 2, 1]), (4, vec![2, 4, 1, 3, 2, 4, 3]), (5, vec![3, 1, 5, 2, 4, 3, 1])] {
        let mut seed: Seed = initial_seed_an(n);
        let mut vals = point[..n].to_vec();
        let assignment: BTreeMap<Var, BigRational> =
            (1..=n).map(|i| (Var::X(i as u32), point[i - 1].clone())).collect();
        for k in walk {
            numeric_mutate(seed.quiver.matrix(), &mut vals, k);
            seed = seed.mutate(k).unwrap();
            for (i, v) in seed.vars.iter().enumerate() {
                assert_eq!(v.eval(&assignment).unwrap(), vals[i], "A_{n} var {}", i + 1);
            }
        }
    }
}

#[test]
fn a2_closure_by_hand() {
    let g = ExchangeGraph::build(&initial_seed_an(2), DEFAULT_BUDGET).unwrap();
    let x1 = LaurentPoly::x(1);
    let x2 = LaurentPoly::x(2);
    let one = LaurentPoly::one();
    let expected: BTreeSet<LaurentPoly> = [
        x1.clone(),
        x2.clone(),
        (&one + &x2).div_exact(&x1).unwrap(),
        (&one + &x1).div_exact(&x2).unwrap(),
        (&(&one + &x1) + &x2).div_exact(&(&x1 * &x2)).unwrap(),
    ]
    .into_iter()
    .collect();
    assert_eq!(g.cluster_variables(), expected);
    let m = IntervalModule::new(Orientation::linear(2), 1, 2).unwrap();
    assert_eq!(cc_map(&m).unwrap(), "(1 + x1 + x2)/(x1*x2)".parse().unwrap());
}

#[test]
fn golden_triangulation() {
    let t: Triangulation = "8; (4,6),(2,4),(2,6),(0,2),(0,6)".parse().unwrap();
    let p = t.lambda_map().unwrap();
    assert_eq!(p, Partition::new(vec![4, 2, 2]).unwrap());
    assert_eq!(Triangulation::lambda_inverse(&p, 8).unwrap(), t);
    assert!(t.contains(&Diagonal::new(2, 6).unwrap()));
}
