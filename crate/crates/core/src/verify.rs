//! Named invariant suites. Each suite runs a family of exhaustive or
//! randomized checks and reports one line per property.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arcs::{self, ArcFamily};
use crate::cluster::{self, ExchangeGraph, LazySeedAInfty, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::flipgraph::{self, catalan, FlipGraph};
use crate::partition::{DihedralElement, Partition};
use crate::repcc;
use crate::triangulation::Triangulation;

pub const SUITES: &[&str] = &[
    "bijection",
    "flip-conjugation",
    "embedding",
    "associahedron",
    "dihedral",
    "transpose",
    "exchange-graph",
    "laurent-phenomenon",
    "census",
    "cc",
    "extension",
    "gsv",
    "alt",
    "arcs",
];

/// Seed for every randomized check.
pub const RNG_SEED: u64 = 0x5eed_a55e;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub property: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }
}

fn prop(property: &str, passed: bool, detail: impl Into<String>) -> PropertyResult {
    PropertyResult {
        property: property.into(),
        passed,
        detail: detail.into(),
    }
}

fn cap(suite: &str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::BudgetExceeded(format!("suite {suite} supports n <= {max}")));
    }
    Ok(())
}

pub fn run_suite(name: &str, n: usize) -> Result<SuiteReport> {
    let properties = match name {
        "bijection" => bijection(n)?,
        "flip-conjugation" => flip_conjugation(n)?,
        "embedding" => embedding(n)?,
        "associahedron" => associahedron(n)?,
        "dihedral" => dihedral(n)?,
        "transpose" => transpose(n)?,
        "exchange-graph" => exchange_graph(n)?,
        "laurent-phenomenon" => laurent_phenomenon(n)?,
        "census" => census(n)?,
        "cc" => cc(n)?,
        "extension" => extension(n)?,
        "gsv" => gsv(n)?,
        "alt" => alt(n)?,
        "arcs" => arc_flips(n)?,
        other => return Err(Error::Parse(format!("unknown suite {other:?}; known: {}", SUITES.join(", ")))),
    };
    Ok(SuiteReport {
        suite: name.into(),
        n,
        properties,
    })
}

fn bijection(n: usize) -> Result<Vec<PropertyResult>> {
    cap("bijection", n, 10)?;
    let mut out = Vec::new();
    for m in 0..=n {
        let tris = Triangulation::enumerate(m + 2)?;
        let images: BTreeSet<Partition> = tris.iter().map(|t| t.lambda_map()).collect::<Result<_>>()?;
        let target: BTreeSet<Partition> = Partition::all_fitting(m).into_iter().collect();
        let round_trip = tris
            .iter()
            .all(|t| Triangulation::lambda_inverse(&t.lambda_map().unwrap(), m + 2).as_ref() == Ok(t));
        out.push(prop(
            &format!("lambda bijective T_{} -> Y_{m}", m + 2),
            images == target && images.len() == tris.len() && round_trip && tris.len() as u64 == catalan(m),
            format!("{} triangulations, {} diagrams", tris.len(), target.len()),
        ));
    }
    Ok(out)
}

fn flip_conjugation(n: usize) -> Result<Vec<PropertyResult>> {
    cap("flip-conjugation", n, 9)?;
    let mut out = Vec::new();
    for m in 1..=n {
        let mut checked = 0;
        let mut bad = Vec::new();
        for t in Triangulation::enumerate(m + 2)? {
            let p = t.lambda_map()?;
            for (k, d) in t.diag_order().iter().enumerate() {
                checked += 1;
                if t.flip_diagonal(d)?.lambda_map()? != p.flip_row(k + 1) {
                    bad.push(format!("{t} row {}", k + 1));
                }
            }
        }
        out.push(prop(
            &format!("flips commute with lambda on T_{}", m + 2),
            bad.is_empty(),
            format!("{checked} flips checked{}", if bad.is_empty() { String::new() } else { format!(", first failure {}", bad[0]) }),
        ));
    }
    Ok(out)
}

fn embedding(n: usize) -> Result<Vec<PropertyResult>> {
    cap("embedding", n, flipgraph::GRAPH_LIMIT - 1)?;
    (1..=n.max(1))
        .map(|m| Ok(prop(&format!("Y_{m} is induced in Y_{}", m + 1), flipgraph::embedding_check(m)?, "")))
        .collect()
}

fn associahedron(n: usize) -> Result<Vec<PropertyResult>> {
    cap("associahedron", n, flipgraph::GRAPH_LIMIT)?;
    let mut out = Vec::new();
    for m in 1..=n.max(1) {
        let g = FlipGraph::build(m)?;
        out.push(prop(
            &format!("flip graph of Y_{m}"),
            g.vertices.len() as u64 == catalan(m)
                && g.is_regular(m - 1)
                && g.is_connected()
                && 2 * g.edges.len() as u64 == (m as u64 - 1) * catalan(m),
            format!("{} vertices, {} edges", g.vertices.len(), g.edges.len()),
        ));
    }
    if n <= flipgraph::FACE_LIMIT {
        let fv = flipgraph::face_vector(n)?;
        out.push(prop(
            &format!("face vector of As^{n}"),
            fv[0] == catalan(n + 1) && fv[n] == 1 && (n == 0 || fv[n - 1] as usize == (n + 3) * n / 2),
            format!("{fv:?}"),
        ));
    }
    Ok(out)
}

fn dihedral(n: usize) -> Result<Vec<PropertyResult>> {
    cap("dihedral", n, 8)?;
    let order = n + 2;
    let ys = Partition::all_fitting(n);
    let a = DihedralElement::alpha(order);
    let b = DihedralElement::beta(order);
    let act = |p: &Partition, w: &[&DihedralElement]| -> Result<Partition> {
        // rightmost letter acts first
        w.iter().rev().try_fold(p.clone(), |q, g| q.act(g, n))
    };
    let mut alpha_sq = true;
    let mut beta_pow = true;
    let mut braid = true;
    for p in &ys {
        alpha_sq &= act(p, &[&a, &a])? == *p;
        beta_pow &= act(p, &vec![&b; order])? == *p;
        let binv = b.inverse();
        braid &= act(p, &[&a, &b, &a])? == p.act(&binv, n)?;
    }
    let mut out = vec![
        prop("alpha^2 = id", alpha_sq, ""),
        prop(&format!("beta^{order} = id"), beta_pow, ""),
        prop("alpha beta alpha = beta^-1", braid, ""),
    ];
    if (1..=flipgraph::GRAPH_LIMIT).contains(&n) {
        let g = FlipGraph::build(n)?;
        let auto = |h: &DihedralElement| -> Result<bool> {
            for (p, q) in &g.edges {
                if !g.has_edge(&p.act(h, n)?, &q.act(h, n)?) {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        out.push(prop("alpha and beta are flip-graph automorphisms", auto(&a)? && auto(&b)?, ""));
    }
    if order <= 10 {
        let mut eq = true;
        for t in Triangulation::enumerate(order)? {
            let p = t.lambda_map()?;
            eq &= t.reflect().lambda_map()? == p.act_alpha(n)?;
            eq &= t.rotate().lambda_map()? == p.act_beta(n)?;
        }
        out.push(prop(&format!("lambda is equivariant on T_{order}"), eq, ""));
    }
    Ok(out)
}

fn transpose(n: usize) -> Result<Vec<PropertyResult>> {
    cap("transpose", n, flipgraph::FACE_LIMIT)?;
    let mut out = Vec::new();
    let mut first = None;
    for m in 1..=n.max(1) {
        let ys: BTreeSet<Partition> = Partition::all_fitting(m).into_iter().collect();
        let ok = ys.iter().all(|p| p.transpose().transpose() == *p && ys.contains(&p.transpose()));
        out.push(prop(&format!("transpose is an involution of Y_{m}"), ok, ""));
        let defect = flipgraph::transpose_edge_defect(m)?;
        if first.is_none() && !defect.is_empty() {
            first = Some((m, defect.len()));
        }
    }
    out.push(prop(
        "transpose breaks some flip edge",
        first.is_some(),
        match first {
            Some((m, k)) => format!("first defect at n={m} ({k} edges)"),
            None => "no defect found".into(),
        },
    ));
    Ok(out)
}

fn exchange_graph(n: usize) -> Result<Vec<PropertyResult>> {
    cap("exchange-graph", n, 5)?;
    let mut out = Vec::new();
    for m in 1..=n.max(1) {
        out.push(prop(
            &format!("exchange graph of A_{m} is the flip graph of Y_{}", m + 1),
            cluster::exchange_graph_is_associahedron(m)?,
            format!("{} seeds", catalan(m + 1)),
        ));
    }
    if n <= 3 {
        for m in 1..=n.max(1) {
            let plain = ExchangeGraph::build(&cluster::initial_seed_an(m), DEFAULT_BUDGET)?;
            let ice = ExchangeGraph::build(&cluster::initial_seed_an_ice(m), DEFAULT_BUDGET)?;
            let forgot: BTreeSet<BTreeSet<_>> = ice.seeds.iter().map(|s| s.forget_coefficients().key()).collect();
            let keys: BTreeSet<BTreeSet<_>> = plain.seeds.iter().map(|s| s.key()).collect();
            let same_edges = {
                let f = |g: &ExchangeGraph, forget: bool| -> BTreeSet<(BTreeSet<_>, BTreeSet<_>)> {
                    g.adjacent_pairs()
                        .into_iter()
                        .map(|(i, j)| {
                            let k = |s: &cluster::Seed| if forget { s.forget_coefficients().key() } else { s.key() };
                            let (a, b) = (k(&g.seeds[i]), k(&g.seeds[j]));
                            if a < b { (a, b) } else { (b, a) }
                        })
                        .collect()
                };
                f(&ice, true) == f(&plain, false)
            };
            out.push(prop(
                &format!("coefficients do not change the A_{m} exchange graph"),
                forgot == keys && ice.seeds.len() == plain.seeds.len() && same_edges,
                "",
            ));
        }
    }
    Ok(out)
}

/// `count` random mutation sequences of the given length, vertices in
/// `1..=max_vertex`.
pub fn random_walks(count: usize, length: usize, max_vertex: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..length).map(|_| rng.gen_range(1..=max_vertex)).collect())
        .collect()
}

fn laurent_phenomenon(n: usize) -> Result<Vec<PropertyResult>> {
    cap("laurent-phenomenon", n, 5)?;
    let mut out = Vec::new();
    for m in 1..=n.max(1) {
        let g = ExchangeGraph::build(&cluster::initial_seed_an(m), DEFAULT_BUDGET)?;
        let vars = g.cluster_variables();
        out.push(prop(
            &format!("A_{m} closure is Laurent with positive coefficients"),
            vars.iter().all(|v| v.has_positive_coefficients()),
            format!("{} variables", vars.len()),
        ));
    }
    let mut ok = true;
    let mut count = 0;
    for walk in random_walks(200, 12, 8, RNG_SEED) {
        let mut s = LazySeedAInfty::new(false);
        for k in walk {
            s = s.mutate(k)?;
            count += 1;
            ok &= (1..=s.window()).all(|i| s.var(i).has_positive_coefficients());
        }
    }
    out.push(prop("A_inf random walks stay Laurent and positive", ok, format!("{count} mutations")));
    Ok(out)
}

fn census(n: usize) -> Result<Vec<PropertyResult>> {
    cap("census", n, 5)?;
    let mut out = Vec::new();
    for m in 1..=n.max(1) {
        let g = ExchangeGraph::build(&cluster::initial_seed_an(m), DEFAULT_BUDGET)?;
        let vars = g.cluster_variables();
        let initial: BTreeSet<_> = (1..=m as u32).map(crate::LaurentPoly::x).collect();
        let dens: BTreeSet<Vec<i32>> = vars
            .iter()
            .filter(|v| !initial.contains(*v))
            .map(|v| repcc::denominator_vector(v, m))
            .collect();
        let roots: BTreeSet<Vec<i32>> = repcc::positive_roots_an(m)?.into_iter().collect();
        out.push(prop(
            &format!("A_{m} has n(n+3)/2 variables, denominators = positive roots"),
            vars.len() == m * (m + 3) / 2 && dens == roots && vars.len() - m == roots.len(),
            format!("{} variables", vars.len()),
        ));
    }
    Ok(out)
}

fn cc(n: usize) -> Result<Vec<PropertyResult>> {
    cap("cc", n, 5)?;
    let mut out = Vec::new();
    for m in 1..=n.max(1) {
        for o in [repcc::Orientation::linear(m), repcc::Orientation::alternating(m)] {
            let r = repcc::verify_cc_theorem_for(&o)?;
            out.push(prop(
                &format!("CC(V) is the cluster variable of V over A_{m}@{o}"),
                r.holds,
                format!("{} modules", r.records.len()),
            ));
        }
    }
    Ok(out)
}

fn extension(n: usize) -> Result<Vec<PropertyResult>> {
    cap("extension", n, repcc::REP_LIMIT)?;
    let mut out = Vec::new();
    for big in 2..=n {
        for m in 1..big {
            let r = repcc::infinite_extension_report(m, big)?;
            let differ: Vec<&str> = r.iter().filter(|x| !x.identical).map(|x| x.module.as_str()).collect();
            out.push(prop(
                &format!("zero padding A_{m} -> A_{big} keeps characters"),
                differ.is_empty(),
                if differ.is_empty() { String::new() } else { format!("changed: {}", differ.join(" ")) },
            ));
        }
    }
    out.push(prop(
        "characters are stable once the chain passes the support",
        repcc::stable_extension_check(n.max(1))?,
        "",
    ));
    Ok(out)
}

fn gsv(n: usize) -> Result<Vec<PropertyResult>> {
    cap("gsv", n, 5)?;
    let mut out = Vec::new();
    for m in 1..=n.max(1) {
        let g = ExchangeGraph::build(&cluster::initial_seed_an(m), DEFAULT_BUDGET)?;
        let adj = g.adjacent_pairs();
        let mut ok = true;
        for i in 0..g.seeds.len() {
            for j in i + 1..g.seeds.len() {
                ok &= adj.contains(&(i, j)) == (cluster::cluster_difference(&g.seeds[i], &g.seeds[j]) == 1);
            }
        }
        out.push(prop(&format!("A_{m}: adjacent iff one variable differs"), ok, ""));
    }
    let (det, adj, pairs) = gsv_random_pairs(200, RNG_SEED)?;
    out.push(prop("A_inf windows: seed determined by cluster", det, format!("{pairs} pairs")));
    out.push(prop("A_inf windows: adjacent iff one variable differs", adj, format!("{pairs} pairs")));
    Ok(out)
}

/// GSV properties on pairs of random `A_inf` walks, compared inside a
/// common window. The second walk of each pair extends the first by a
/// suffix: empty, one step, a repeated step, or random steps.
pub fn gsv_random_pairs(count: usize, seed: u64) -> Result<(bool, bool, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut determined, mut adjacency) = (true, true);
    for _ in 0..count {
        let w1: Vec<usize> = (0..12).map(|_| rng.gen_range(1..=8)).collect();
        let mut w2 = w1.clone();
        match rng.gen_range(0..4) {
            0 => {}
            1 => w2.push(rng.gen_range(1..=8)),
            2 => {
                let k = rng.gen_range(1..=8);
                w2.extend([k, k]);
            }
            _ => w2.extend((0..rng.gen_range(1..4)).map(|_| rng.gen_range(1..=8))),
        }
        let window = w1.iter().chain(&w2).max().unwrap() + 2;
        let s1 = LazySeedAInfty::replay(false, window, &w1)?;
        let s2 = LazySeedAInfty::replay(false, window, &w2)?;
        let (a, b) = (s1.seed(), s2.seed());
        if a.key() == b.key() {
            determined &= cluster::same_seed_up_to_relabeling(a, b);
        }
        let one_step = (1..=window - 2).any(|k| a.mutate(k).map(|s| s.key() == b.key()).unwrap_or(false));
        adjacency &= one_step == (cluster::cluster_difference(a, b) == 1);
    }
    Ok((determined, adjacency, count))
}

fn alt(n: usize) -> Result<Vec<PropertyResult>> {
    cap("alt", n, cluster::ISOMORPHISM_LIMIT)?;
    (1..=n.max(1))
        .map(|m| {
            let r = cluster::alt_equivalence_check(m)?;
            Ok(prop(
                &format!("A_{m}^alt is mutation equivalent to A_{m}"),
                r.isomorphic_to_linear && r.levels_ok,
                format!("schedule {:?}, reorientation {:?}", r.schedule, r.reorientation),
            ))
        })
        .collect()
}

fn arc_flips(n: usize) -> Result<Vec<PropertyResult>> {
    cap("arcs", n, 9)?;
    let mut out = Vec::new();
    for big in 4..=n.max(4) {
        let hi = big as i64 - 1;
        let mut ok = true;
        for t in Triangulation::enumerate(big)? {
            let col = arcs::triangulation_to_arcs(&t, 0);
            for d in t.diagonals() {
                let a = arcs::Arc::new(d.tail as i64, d.head as i64)?;
                let flipped = arcs::flip_arc(&col, a, 0, hi)?;
                ok &= flipped == arcs::triangulation_to_arcs(&t.flip_diagonal(d)?, 0);
                ok &= arcs::flip_arc(&flipped, *flipped.difference(&col).next().unwrap(), 0, hi)? == col;
            }
        }
        out.push(prop(&format!("arc flips on {big} points are polygon flips"), ok, ""));
    }
    let r = arcs::reachability_window_check(&ArcFamily::FountainT0(0), -5, 5, 4)?;
    out.push(prop(
        "fountain flips keep (k-c)(l-c) >= 0",
        r.sign_condition,
        format!("{} collections, {} arcs reached, {} not yet", r.collections_visited, r.reached.len(), r.not_reached.len()),
    ));
    Ok(out)
}
