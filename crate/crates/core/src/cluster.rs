//! Quivers, ice quivers and seed mutation for cluster algebras of type A,
//! including windows onto the infinite-rank types `A_inf` and `D_inf`.
//!
//! Vertex numbers in the public API are 1-based; mutable vertices come
//! first, frozen ones after them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flipgraph::{catalan, ExportGraph, FlipGraph};
use crate::laurent::{LaurentPoly, Var};
use crate::triangulation::{Diagonal, Triangulation};

pub const DEFAULT_BUDGET: usize = 10_000;
/// Largest quiver handled by [`quiver_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 9;

/// A quiver without loops or 2-cycles, stored as its exchange matrix:
/// `b[i][j] > 0` counts arrows `i -> j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Quiver {
    mutable: usize,
    b: Vec<Vec<i64>>,
}

impl Quiver {
    pub fn new(mutable: usize, b: Vec<Vec<i64>>) -> Result<Quiver> {
        let m = b.len();
        if mutable > m {
            return Err(Error::InvalidQuiver(format!("{mutable} mutable vertices out of {m}")));
        }
        for (i, row) in b.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidQuiver("matrix is not square".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if v != -b[j][i] {
                    return Err(Error::InvalidQuiver(format!(
                        "not skew-symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                if i >= mutable && j >= mutable && v != 0 {
                    return Err(Error::InvalidQuiver(format!(
                        "arrow between frozen vertices {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Quiver { mutable, b })
    }

    /// Quiver on `size` vertices from 1-based arrows `(i, j)` meaning `i -> j`.
    /// Repeated arrows add up; arrows in both directions cancel.
    pub fn from_arrows(size: usize, mutable: usize, arrows: &[(usize, usize)]) -> Result<Quiver> {
        let mut b = vec![vec![0i64; size]; size];
        for &(i, j) in arrows {
            if i == 0 || j == 0 || i > size || j > size || i == j {
                return Err(Error::InvalidQuiver(format!("bad arrow {i} -> {j}")));
            }
            b[i - 1][j - 1] += 1;
            b[j - 1][i - 1] -= 1;
        }
        Quiver::new(mutable, b)
    }

    /// `1 -> 2 -> ... -> n`.
    pub fn linear(n: usize) -> Quiver {
        let arrows: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Quiver::from_arrows(n, n, &arrows).unwrap()
    }

    /// Path on `1..n` with every odd vertex a source.
    pub fn alternating(n: usize) -> Quiver {
        let arrows: Vec<_> = (1..n)
            .map(|i| if i % 2 == 1 { (i, i + 1) } else { (i + 1, i) })
            .collect();
        Quiver::from_arrows(n, n, &arrows).unwrap()
    }

    pub fn size(&self) -> usize {
        self.b.len()
    }

    pub fn mutable_count(&self) -> usize {
        self.mutable
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// Signed arrow count between 1-based vertices.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.b[i - 1][j - 1]
    }

    /// All arrows `(i, j, multiplicity)`, 1-based.
    pub fn arrows(&self) -> Vec<(usize, usize, i64)> {
        let m = self.size();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if self.b[i][j] > 0 {
                    out.push((i + 1, j + 1, self.b[i][j]));
                }
            }
        }
        out
    }

    fn check_mutable(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.mutable {
            return Err(Error::NotMutable {
                vertex: k,
                mutable: self.mutable,
            });
        }
        Ok(())
    }

    /// Quiver mutation at the 1-based vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        self.check_mutable(k)?;
        let k = k - 1;
        let m = self.size();
        let mut b = self.b.clone();
        for i in 0..m {
            for j in 0..m {
                if i == k || j == k {
                    b[i][j] = -self.b[i][j];
                } else {
                    let (bik, bkj) = (self.b[i][k], self.b[k][j]);
                    b[i][j] = self.b[i][j] + (bik.abs() * bkj + bik * bkj.abs()) / 2;
                }
                if i >= self.mutable && j >= self.mutable {
                    b[i][j] = 0;
                }
            }
        }
        Ok(Quiver {
            mutable: self.mutable,
            b,
        })
    }

    /// Full subquiver on the given 1-based vertices, in that order. The
    /// first `mutable` listed vertices become the mutable part.
    pub fn subquiver(&self, vertices: &[usize], mutable: usize) -> Quiver {
        let b = vertices
            .iter()
            .map(|&i| vertices.iter().map(|&j| self.b[i - 1][j - 1]).collect())
            .collect();
        Quiver { mutable, b }
    }

    /// The mutable part alone.
    pub fn principal_part(&self) -> Quiver {
        let vs: Vec<usize> = (1..=self.mutable).collect();
        self.subquiver(&vs, self.mutable)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arrows()
            .into_iter()
            .map(|(i, j, k)| if k == 1 { format!("{i}->{j}") } else { format!("{i}-{k}->{j}") })
            .collect();
        write!(f, "{} mutable of {}: {}", self.mutable, self.size(), parts.join(", "))
    }
}

/// True iff some bijection of vertices, mutable to mutable and frozen to
/// frozen, carries one exchange matrix to the other.
pub fn quiver_isomorphic(q1: &Quiver, q2: &Quiver) -> Result<bool> {
    let m = q1.size();
    if m > ISOMORPHISM_LIMIT || q2.size() > ISOMORPHISM_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "isomorphism search limited to {ISOMORPHISM_LIMIT} vertices"
        )));
    }
    if m != q2.size() || q1.mutable != q2.mutable {
        return Ok(false);
    }
    let profile = |q: &Quiver, i: usize| -> (bool, Vec<i64>) {
        let mut row = q.b[i].clone();
        row.sort();
        (i < q.mutable, row)
    };
    let p1: Vec<_> = (0..m).map(|i| profile(q1, i)).collect();
    let p2: Vec<_> = (0..m).map(|i| profile(q2, i)).collect();
    let mut s1 = p1.clone();
    let mut s2 = p2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(false);
    }
    fn extend(
        i: usize,
        image: &mut Vec<usize>,
        used: &mut [bool],
        q1: &Quiver,
        q2: &Quiver,
        p1: &[(bool, Vec<i64>)],
        p2: &[(bool, Vec<i64>)],
    ) -> bool {
        let m = q1.size();
        if i == m {
            return true;
        }
        for j in 0..m {
            if used[j] || p1[i] != p2[j] {
                continue;
            }
            if (0..i).all(|a| q1.b[a][i] == q2.b[image[a]][j]) {
                used[j] = true;
                image.push(j);
                if extend(i + 1, image, used, q1, q2, p1, p2) {
                    return true;
                }
                image.pop();
                used[j] = false;
            }
        }
        false
    }
    Ok(extend(0, &mut Vec::new(), &mut vec![false; m], q1, q2, &p1, &p2))
}

/// A quiver with a cluster: one Laurent polynomial per mutable vertex and a
/// coefficient symbol per frozen vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub quiver: Quiver,
    pub vars: Vec<LaurentPoly>,
    pub coeffs: Vec<Var>,
}

/// Serialized seed: matrix, mutable count, variables as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedRecord {
    pub matrix: Vec<Vec<i64>>,
    pub mutable_count: usize,
    pub vars: Vec<String>,
    pub coeffs: Vec<String>,
}

impl Seed {
    pub fn new(quiver: Quiver, vars: Vec<LaurentPoly>, coeffs: Vec<Var>) -> Result<Seed> {
        if vars.len() != quiver.mutable || vars.len() + coeffs.len() != quiver.size() {
            return Err(Error::InvalidQuiver(format!(
                "{} variables and {} coefficients for a quiver with {} of {} vertices mutable",
                vars.len(),
                coeffs.len(),
                quiver.mutable,
                quiver.size()
            )));
        }
        if vars.iter().any(LaurentPoly::is_zero) {
            return Err(Error::InvalidQuiver("zero cluster variable".into()));
        }
        Ok(Seed { quiver, vars, coeffs })
    }

    /// Seed with initial variables `x1..xn` and coefficients `c1..`.
    pub fn initial(quiver: Quiver) -> Seed {
        let n = quiver.mutable;
        let vars = (1..=n as u32).map(LaurentPoly::x).collect();
        let coeffs = (1..=(quiver.size() - n) as u32).map(Var::C).collect();
        Seed { quiver, vars, coeffs }
    }

    fn element(&self, i: usize) -> LaurentPoly {
        let n = self.quiver.mutable;
        if i < n {
            self.vars[i].clone()
        } else {
            LaurentPoly::var(self.coeffs[i - n])
        }
    }

    /// Exchange relation at the 1-based vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        self.quiver.check_mutable(k)?;
        let kk = k - 1;
        let mut incoming = LaurentPoly::one();
        let mut outgoing = LaurentPoly::one();
        for i in 0..self.quiver.size() {
            let b = self.quiver.b[i][kk];
            if b > 0 {
                incoming = &incoming * &self.element(i).pow(b as u32);
            } else if b < 0 {
                outgoing = &outgoing * &self.element(i).pow((-b) as u32);
            }
        }
        let new_var = (&incoming + &outgoing).div_exact(&self.vars[kk])?;
        let mut vars = self.vars.clone();
        vars[kk] = new_var;
        Ok(Seed {
            quiver: self.quiver.mutate(k)?,
            vars,
            coeffs: self.coeffs.clone(),
        })
    }

    pub fn mutate_sequence(&self, ks: &[usize]) -> Result<Seed> {
        ks.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Identity key: the unordered cluster.
    pub fn key(&self) -> BTreeSet<LaurentPoly> {
        self.vars.iter().cloned().collect()
    }

    pub fn cluster_string(&self) -> String {
        let mut vs: Vec<String> = self.vars.iter().map(LaurentPoly::to_fraction_string).collect();
        vs.sort();
        format!("{{{}}}", vs.join(", "))
    }

    pub fn to_record(&self) -> SeedRecord {
        SeedRecord {
            matrix: self.quiver.b.clone(),
            mutable_count: self.quiver.mutable,
            vars: self.vars.iter().map(ToString::to_string).collect(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_record(r: &SeedRecord) -> Result<Seed> {
        let quiver = Quiver::new(r.mutable_count, r.matrix.clone())?;
        let vars = r.vars.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?;
        let coeffs = r.coeffs.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?;
        Seed::new(quiver, vars, coeffs)
    }

    /// Every `c_j` set to 1 and frozen vertices removed.
    pub fn forget_coefficients(&self) -> Seed {
        Seed {
            quiver: self.quiver.principal_part(),
            vars: self.vars.iter().map(LaurentPoly::specialize_coefficients).collect(),
            coeffs: Vec::new(),
        }
    }
}

/// True iff some relabelling of mutable vertices matching equal cluster
/// variables carries one seed onto the other.
pub fn same_seed_up_to_relabeling(s1: &Seed, s2: &Seed) -> bool {
    let n = s1.quiver.mutable;
    if n != s2.quiver.mutable || s1.quiver.size() != s2.quiver.size() || s1.key() != s2.key() {
        return false;
    }
    let mut perm: Vec<usize> = Vec::with_capacity(s1.quiver.size());
    for v in &s1.vars {
        match s2.vars.iter().position(|w| w == v) {
            Some(j) => perm.push(j),
            None => return false,
        }
    }
    perm.extend(n..s1.quiver.size());
    let m = s1.quiver.size();
    (0..m).all(|i| (0..m).all(|j| s1.quiver.b[i][j] == s2.quiver.b[perm[i]][perm[j]]))
}

/// Number of cluster variables of `s1` missing from `s2`.
pub fn cluster_difference(s1: &Seed, s2: &Seed) -> usize {
    let k2 = s2.key();
    s1.key().iter().filter(|v| !k2.contains(v)).count()
}

pub fn initial_seed_an(n: usize) -> Seed {
    Seed::initial(Quiver::linear(n))
}

/// Arrows of the coefficient pattern for `x_1..x_n` with frozen `c_j` at
/// vertex `n + j`, limited to `c_1..c_{frozen}`.
fn ice_arrows(n: usize, frozen: usize) -> Vec<(usize, usize)> {
    let c = |j: usize| n + j;
    let mut arrows = Vec::new();
    if frozen >= 1 {
        arrows.push((c(1), 1));
    }
    for k in 1..=n {
        if k < n {
            arrows.push((k, k + 1));
        }
        if k < frozen {
            arrows.push((k, c(k + 1)));
        }
        if k + 2 <= frozen {
            arrows.push((c(k + 2), k));
        }
    }
    arrows
}

/// `A_n` with `n + 3` frozen vertices `c_1..c_{n+3}`; it is the ice quiver
/// of the fan triangulation of the `(n + 3)`-gon.
pub fn initial_seed_an_ice(n: usize) -> Seed {
    let mut arrows = ice_arrows(n, n + 2);
    arrows.push((n, n + n + 3));
    Seed::initial(Quiver::from_arrows(2 * n + 3, n, &arrows).unwrap())
}

/// Window `1..N` of the `D_inf` quiver: `1 -> 3`, `2 -> 3`, `3 -> 4 -> ...`.
pub fn initial_seed_dinfty_window(big_n: usize) -> Result<Seed> {
    if big_n < 3 {
        return Err(Error::InvalidQuiver("D_inf window needs at least 3 vertices".into()));
    }
    let mut arrows = vec![(1, 3), (2, 3)];
    arrows.extend((3..big_n).map(|i| (i, i + 1)));
    Ok(Seed::initial(Quiver::from_arrows(big_n, big_n, &arrows)?))
}

/// Frozen index of a polygon side: `(k-1, k)` is `c_k`, `(N-1, 0)` is `c_N`.
fn side_index(ngon: usize, a: usize, b: usize) -> Option<usize> {
    let (a, b) = (a.min(b), a.max(b));
    if b == a + 1 {
        Some(b)
    } else if a == 0 && b == ngon - 1 {
        Some(ngon)
    } else {
        None
    }
}

/// Dual ice quiver with the mutable vertices in the given order.
pub fn triangulation_quiver_in_order(t: &Triangulation, order: &[Diagonal]) -> Result<Quiver> {
    if !t.validate() {
        return Err(Error::InvalidTriangulation(t.to_string()));
    }
    let n = order.len();
    let ngon = t.ngon();
    let slot: BTreeMap<Diagonal, usize> = order.iter().enumerate().map(|(i, d)| (*d, i + 1)).collect();
    if slot.len() != t.diagonals().len() || order.iter().any(|d| !t.contains(d)) {
        return Err(Error::InvalidTriangulation("vertex order does not list the diagonals".into()));
    }
    let vertex = |a: usize, b: usize| -> usize {
        match side_index(ngon, a, b) {
            Some(k) => n + k,
            None => slot[&Diagonal { tail: a.min(b), head: a.max(b) }],
        }
    };
    let mut arrows = Vec::new();
    for [a, b, c] in t.triangles() {
        let (e1, e2, e3) = (vertex(a, b), vertex(a, c), vertex(b, c));
        for (u, v) in [(e1, e2), (e2, e3), (e3, e1)] {
            if u <= n || v <= n {
                arrows.push((u, v));
            }
        }
    }
    Quiver::from_arrows(n + ngon, n, &arrows)
}

/// Ice seed dual to `t`: diagonals in tail order are `x1..xn`, sides are
/// the frozen `c1..cN`.
pub fn triangulation_to_ice_quiver(t: &Triangulation) -> Result<Seed> {
    Ok(Seed::initial(triangulation_quiver_in_order(t, &t.diag_order())?))
}

/// Mutation closure of a seed.
#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    /// In discovery order.
    pub seeds: Vec<Seed>,
    /// `(i, j, k)`: mutation at vertex `k` takes seed `i` to seed `j`, `i < j`.
    pub edges: BTreeSet<(usize, usize, usize)>,
}

impl ExchangeGraph {
    pub fn build(seed: &Seed, budget: usize) -> Result<ExchangeGraph> {
        let mut index: BTreeMap<BTreeSet<LaurentPoly>, usize> = BTreeMap::new();
        let mut seeds = vec![seed.clone()];
        index.insert(seed.key(), 0);
        let mut edges = BTreeSet::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for k in 1..=seed.quiver.mutable {
                let next = seeds[i].mutate(k)?;
                let key = next.key();
                let j = match index.get(&key) {
                    Some(&j) => j,
                    None => {
                        if seeds.len() >= budget {
                            return Err(Error::BudgetExceeded(format!(
                                "exchange graph exceeds {budget} seeds"
                            )));
                        }
                        seeds.push(next);
                        index.insert(key, seeds.len() - 1);
                        queue.push_back(seeds.len() - 1);
                        seeds.len() - 1
                    }
                };
                edges.insert((i.min(j), i.max(j), k));
            }
        }
        Ok(ExchangeGraph { seeds, edges })
    }

    /// Unlabelled edge set.
    pub fn adjacent_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(|&(i, j, _)| (i, j)).collect()
    }

    pub fn cluster_variables(&self) -> BTreeSet<LaurentPoly> {
        self.seeds.iter().flat_map(|s| s.vars.iter().cloned()).collect()
    }

    pub fn to_export(&self, name: &str) -> ExportGraph {
        let labels: Vec<String> = self.seeds.iter().map(Seed::cluster_string).collect();
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut pos = vec![0; labels.len()];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        ExportGraph {
            kind: "exchange-graph".into(),
            name: name.into(),
            vertices: order.iter().map(|&i| labels[i].clone()).collect(),
            edges: self.adjacent_pairs().into_iter().map(|(i, j)| (pos[i], pos[j])).collect(),
        }
    }
}

/// Walks the exchange graph of `A_n` alongside flips of the fan
/// triangulation of the `(n + 3)`-gon and checks that the induced map to
/// `Y_{n+1}` is a graph isomorphism onto the flip graph.
pub fn exchange_graph_is_associahedron(n: usize) -> Result<bool> {
    if !(1..=6).contains(&n) {
        return Err(Error::BudgetExceeded("associahedron check supported for 1 <= n <= 6".into()));
    }
    let start = initial_seed_an(n);
    let fan = Triangulation::fan(n + 3);
    let slots: Vec<Diagonal> = (2..n + 2).map(|h| Diagonal { tail: 0, head: h }).collect();

    let mut tri_of: BTreeMap<BTreeSet<LaurentPoly>, Triangulation> = BTreeMap::new();
    let mut seen_tri: BTreeSet<Triangulation> = BTreeSet::new();
    let mut pairs: BTreeSet<(BTreeSet<LaurentPoly>, BTreeSet<LaurentPoly>)> = BTreeSet::new();
    let mut queue = VecDeque::from([(start.clone(), fan.clone(), slots)]);
    tri_of.insert(start.key(), fan.clone());
    seen_tri.insert(fan);
    while let Some((seed, tri, slots)) = queue.pop_front() {
        // the seed quiver must be the dual quiver of its triangulation
        if triangulation_quiver_in_order(&tri, &slots)?.principal_part() != seed.quiver {
            return Ok(false);
        }
        for k in 1..=n {
            let next = seed.mutate(k)?;
            let d = slots[k - 1];
            let flipped = tri.flip_diagonal(&d)?;
            let mut next_slots = slots.clone();
            next_slots[k - 1] = tri.flipped_diagonal(&d)?;
            let (a, b) = (seed.key(), next.key());
            pairs.insert(if a < b { (a, b) } else { (b, a) });
            match tri_of.get(&next.key()) {
                Some(t) if *t != flipped => return Ok(false),
                Some(_) => {}
                None => {
                    if !seen_tri.insert(flipped.clone()) {
                        return Ok(false);
                    }
                    tri_of.insert(next.key(), flipped.clone());
                    queue.push_back((next, flipped, next_slots));
                }
            }
        }
    }
    if tri_of.len() as u64 != catalan(n + 1) {
        return Ok(false);
    }
    let graph = FlipGraph::build(n + 1)?;
    let mut mapped = BTreeSet::new();
    for (a, b) in &pairs {
        let p = tri_of[a].lambda_map()?;
        let q = tri_of[b].lambda_map()?;
        mapped.insert(if p < q { (p, q) } else { (q, p) });
    }
    let vertices: BTreeSet<_> = tri_of.values().map(|t| t.lambda_map()).collect::<Result<_>>()?;
    Ok(mapped == graph.edges && vertices.len() == graph.vertices.len())
}

/// Finite window onto the initial `A_inf` seed (or its coefficient version)
/// after finitely many mutations. Beyond the window every vertex still
/// carries its initial variable and arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazySeedAInfty {
    with_coefficients: bool,
    seed: Seed,
    history: Vec<usize>,
}

/// Initial window `1..N`, with frozen `c_1..c_{N+1}` if requested.
fn ainfty_window(big_n: usize, with_coefficients: bool) -> Seed {
    if with_coefficients {
        let arrows = ice_arrows(big_n, big_n + 1);
        Seed::initial(Quiver::from_arrows(2 * big_n + 1, big_n, &arrows).unwrap())
    } else {
        initial_seed_an(big_n)
    }
}

impl LazySeedAInfty {
    pub fn new(with_coefficients: bool) -> LazySeedAInfty {
        LazySeedAInfty {
            with_coefficients,
            seed: ainfty_window(2, with_coefficients),
            history: Vec::new(),
        }
    }

    /// Fresh window of size `big_n` with `history` replayed.
    pub fn replay(with_coefficients: bool, big_n: usize, history: &[usize]) -> Result<LazySeedAInfty> {
        let mut s = LazySeedAInfty {
            with_coefficients,
            seed: ainfty_window(big_n.max(2), with_coefficients),
            history: Vec::new(),
        };
        for &k in history {
            s = s.mutate(k)?;
        }
        Ok(s)
    }

    pub fn window(&self) -> usize {
        self.seed.quiver.mutable
    }

    pub fn history(&self) -> &[usize] {
        &self.history
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    /// Cluster variable at any positive index.
    pub fn var(&self, i: usize) -> LaurentPoly {
        if i <= self.window() {
            self.seed.vars[i - 1].clone()
        } else {
            LaurentPoly::x(i as u32)
        }
    }

    /// Grow the window to `big_n` vertices. Pairs involving a new vertex get
    /// their initial arrows; mutated vertices are never adjacent to them.
    pub fn extend_to(&self, big_n: usize) -> LazySeedAInfty {
        let old = self.window();
        if big_n <= old {
            return self.clone();
        }
        let fresh = ainfty_window(big_n, self.with_coefficients);
        // vertex map old -> new, 0-based
        let remap = |i: usize| if i < old { i } else { i - old + big_n };
        let mut b = fresh.quiver.b.clone();
        let old_size = self.seed.quiver.size();
        for i in 0..old_size {
            for j in 0..old_size {
                b[remap(i)][remap(j)] = self.seed.quiver.b[i][j];
            }
        }
        let mut vars = self.seed.vars.clone();
        vars.extend((old + 1..=big_n).map(|i| LaurentPoly::x(i as u32)));
        LazySeedAInfty {
            with_coefficients: self.with_coefficients,
            seed: Seed {
                quiver: Quiver {
                    mutable: big_n,
                    b,
                },
                vars,
                coeffs: fresh.coeffs,
            },
            history: self.history.clone(),
        }
    }

    pub fn mutate(&self, k: usize) -> Result<LazySeedAInfty> {
        if k == 0 {
            return Err(Error::NotMutable {
                vertex: 0,
                mutable: usize::MAX,
            });
        }
        let mut s = self.extend_to(k + 2);
        s.seed = s.seed.mutate(k)?;
        s.history.push(k);
        Ok(s)
    }
}

/// Result of replaying the mutation schedule that turns `A_n^alt` into the
/// linear orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltReport {
    pub n: usize,
    /// Every level `m` left the alternating quiver on `1..m-1`.
    pub levels_ok: bool,
    /// Mutations applied by the recursive schedule.
    pub schedule: Vec<usize>,
    /// Sink mutations used to straighten the resulting path.
    pub reorientation: Vec<usize>,
    pub isomorphic_to_linear: bool,
}

/// The schedule for level `m`, in application order: for even `m` the odd
/// vertices below `m` and then the even ones, for odd `m` the reverse.
pub fn alt_level_schedule(m: usize) -> Vec<usize> {
    let odds: Vec<usize> = (1..m).filter(|i| i % 2 == 1).rev().collect();
    let evens: Vec<usize> = (1..m).filter(|i| i % 2 == 0).rev().collect();
    if m % 2 == 0 {
        odds.into_iter().chain(evens).collect()
    } else {
        evens.into_iter().chain(odds).collect()
    }
}

/// Shortest sequence of sink/source mutations taking `q` to a quiver
/// isomorphic to `1 -> 2 -> ... -> n`. Such mutations keep a path a path.
fn straighten_path(q: &Quiver) -> Result<(Quiver, Vec<usize>)> {
    let n = q.size();
    let target = Quiver::linear(n);
    let mut seen = BTreeSet::from([q.clone()]);
    let mut queue = VecDeque::from([(q.clone(), Vec::new())]);
    while let Some((cur, seq)) = queue.pop_front() {
        if quiver_isomorphic(&cur, &target)? {
            return Ok((cur, seq));
        }
        for k in 1..=n {
            let row = &cur.b[k - 1];
            if row.iter().all(|&v| v >= 0) || row.iter().all(|&v| v <= 0) {
                let next = cur.mutate(k)?;
                if seen.insert(next.clone()) {
                    let mut s = seq.clone();
                    s.push(k);
                    queue.push_back((next, s));
                }
            }
        }
    }
    Ok((q.clone(), Vec::new()))
}

pub fn alt_equivalence_check(n: usize) -> Result<AltReport> {
    if n == 0 || n > ISOMORPHISM_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "alt check supported for 1 <= n <= {ISOMORPHISM_LIMIT}"
        )));
    }
    let mut q = Quiver::alternating(n);
    let mut schedule = Vec::new();
    let mut levels_ok = true;
    for m in (2..=n).rev() {
        for k in alt_level_schedule(m) {
            q = q.mutate(k)?;
            schedule.push(k);
        }
        let lower: Vec<usize> = (1..m).collect();
        if q.subquiver(&lower, m - 1) != Quiver::alternating(m - 1) {
            levels_ok = false;
        }
    }
    let (q, reorientation) = straighten_path(&q)?;
    Ok(AltReport {
        n,
        levels_ok,
        schedule,
        reorientation,
        isomorphic_to_linear: quiver_isomorphic(&q, &Quiver::linear(n))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quiver_mutation_examples() {
        let a2 = Quiver::linear(2);
        assert_eq!(a2.mutate(1).unwrap(), Quiver::from_arrows(2, 2, &[(2, 1)]).unwrap());
        let a3 = Quiver::linear(3);
        assert_eq!(
            a3.mutate(2).unwrap(),
            Quiver::from_arrows(3, 3, &[(2, 1), (3, 2), (1, 3)]).unwrap()
        );
        assert_eq!(a3.mutate(4), Err(Error::NotMutable { vertex: 4, mutable: 3 }));
        assert_eq!(a3.mutate(0), Err(Error::NotMutable { vertex: 0, mutable: 3 }));
    }

    #[test]
    fn seed_mutation_examples() {
        let s = initial_seed_an(2);
        let s1 = s.mutate(1).unwrap();
        assert_eq!(s1.vars, vec![lp("(1 + x2)/x1"), lp("x2")]);
        let s2 = s1.mutate(2).unwrap();
        assert_eq!(s2.vars, vec![lp("(1 + x2)/x1"), lp("(1 + x1 + x2)/(x1*x2)")]);
        assert_eq!(s1.mutate(1).unwrap(), s);
    }

    #[test]
    fn initial_seeds() {
        let s = initial_seed_an(2);
        assert_eq!(s.quiver.arrows(), vec![(1, 2, 1)]);
        assert_eq!(s.vars, vec![lp("x1"), lp("x2")]);
        let ice = initial_seed_an_ice(1);
        assert_eq!((ice.quiver.mutable_count(), ice.quiver.size()), (1, 5));
        assert_eq!(ice.coeffs, vec![Var::C(1), Var::C(2), Var::C(3), Var::C(4)]);
        let d = initial_seed_dinfty_window(4).unwrap();
        assert_eq!(d.quiver.arrows(), vec![(1, 3, 1), (2, 3, 1), (3, 4, 1)]);
        assert!(initial_seed_dinfty_window(2).is_err());
    }

    #[test]
    fn square_dual_quiver() {
        let t = Triangulation::from_pairs(4, &[(0, 2)]).unwrap();
        let s = triangulation_to_ice_quiver(&t).unwrap();
        assert_eq!((s.quiver.mutable_count(), s.quiver.size()), (1, 5));
        assert_eq!(s.quiver.arrows().len(), 4);
        assert_eq!(s, initial_seed_an_ice(1));
    }

    #[test]
    fn fan_matches_ice_seed() {
        for n in 1..=6 {
            let t = Triangulation::fan(n + 3);
            assert_eq!(triangulation_to_ice_quiver(&t).unwrap(), initial_seed_an_ice(n), "n={n}");
        }
    }

    #[test]
    fn small_exchange_graphs() {
        let g1 = ExchangeGraph::build(&initial_seed_an(1), DEFAULT_BUDGET).unwrap();
        assert_eq!(g1.seeds.len(), 2);
        let g2 = ExchangeGraph::build(&initial_seed_an(2), DEFAULT_BUDGET).unwrap();
        assert_eq!((g2.seeds.len(), g2.adjacent_pairs().len(), g2.cluster_variables().len()), (5, 5, 5));
        let g3 = ExchangeGraph::build(&initial_seed_an(3), DEFAULT_BUDGET).unwrap();
        assert_eq!((g3.seeds.len(), g3.cluster_variables().len()), (14, 9));
        assert!(matches!(
            ExchangeGraph::build(&initial_seed_an(3), 10),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn associahedron_small() {
        for n in 1..=3 {
            assert!(exchange_graph_is_associahedron(n).unwrap());
        }
    }

    #[test]
    fn lazy_window() {
        let s = LazySeedAInfty::new(false).mutate(1).unwrap();
        assert_eq!(s.var(1), lp("(1 + x2)/x1"));
        assert_eq!(s.var(2), lp("x2"));
        assert_eq!(s.var(40), lp("x40"));
        let s = LazySeedAInfty::new(false).mutate(5).unwrap();
        assert_eq!(s.window(), 7);
        assert_eq!(s.var(9), lp("x9"));
        assert_eq!(LazySeedAInfty::new(true).var(3), lp("x3"));
    }

    #[test]
    fn isomorphism() {
        let a = Quiver::from_arrows(3, 3, &[(1, 2), (3, 2)]).unwrap();
        let b = Quiver::from_arrows(3, 3, &[(2, 1), (2, 3)]).unwrap();
        let c = Quiver::from_arrows(3, 3, &[(1, 3), (3, 2)]).unwrap();
        assert!(quiver_isomorphic(&a, &a).unwrap());
        assert!(!quiver_isomorphic(&a, &b).unwrap());
        assert!(!quiver_isomorphic(&a, &c).unwrap());
        assert!(quiver_isomorphic(&Quiver::linear(3), &c).unwrap());
    }

    #[test]
    fn alt_small() {
        for n in 1..=5 {
            let r = alt_equivalence_check(n).unwrap();
            assert!(r.isomorphic_to_linear, "{r:?}");
        }
        assert_eq!(alt_level_schedule(4), vec![3, 1, 2]);
        assert_eq!(alt_level_schedule(5), vec![4, 2, 3, 1]);
    }

    #[test]
    fn seed_record_round_trip() {
        let s = initial_seed_an_ice(2).mutate(1).unwrap();
        let r = s.to_record();
        assert_eq!(Seed::from_record(&r).unwrap(), s);
    }
}
