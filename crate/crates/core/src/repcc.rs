//! Interval modules over orientations of `A_n`, their quiver Grassmannians
//! and Caldero–Chapoton characters.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cluster::{ExchangeGraph, Quiver, Seed, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, Var};

pub const REP_LIMIT: usize = 8;

/// Orientation of the path `1 - 2 - ... - n`, written one character per
/// edge: `>` for `i -> i+1`, `<` for `i+1 -> i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation(Vec<bool>);

impl Orientation {
    pub fn linear(n: usize) -> Orientation {
        Orientation(vec![true; n.saturating_sub(1)])
    }

    /// Odd vertices are sources.
    pub fn alternating(n: usize) -> Orientation {
        Orientation((1..n).map(|i| i % 2 == 1).collect())
    }

    pub fn from_edges(edges: Vec<bool>) -> Orientation {
        Orientation(edges)
    }

    pub fn n(&self) -> usize {
        self.0.len() + 1
    }

    /// Arrows `(s, t)`, 1-based.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &fwd)| if fwd { (i + 1, i + 2) } else { (i + 2, i + 1) })
            .collect()
    }

    pub fn quiver(&self) -> Quiver {
        Quiver::from_arrows(self.n(), self.n(), &self.arrows()).unwrap()
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &fwd in &self.0 {
            f.write_str(if fwd { ">" } else { "<" })?;
        }
        Ok(())
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '>' => Ok(true),
                '<' => Ok(false),
                _ => Err(Error::Parse(format!("orientation must use '>' and '<', got {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Orientation)
    }
}

/// The indecomposable with identity maps on the interval `[i, j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalModule {
    pub orientation: Orientation,
    pub i: usize,
    pub j: usize,
}

impl IntervalModule {
    pub fn new(orientation: Orientation, i: usize, j: usize) -> Result<IntervalModule> {
        if i == 0 || i > j || j > orientation.n() {
            return Err(Error::Parse(format!(
                "interval [{i},{j}] is not inside 1..{}",
                orientation.n()
            )));
        }
        Ok(IntervalModule { orientation, i, j })
    }

    pub fn n(&self) -> usize {
        self.orientation.n()
    }

    pub fn dimension_vector(&self) -> Vec<i32> {
        (1..=self.n())
            .map(|k| i32::from(self.i <= k && k <= self.j))
            .collect()
    }

    /// All indecomposables over an orientation, ordered by interval.
    pub fn all(orientation: &Orientation) -> Vec<IntervalModule> {
        let n = orientation.n();
        (1..=n)
            .flat_map(|i| (i..=n).map(move |j| (i, j)))
            .map(|(i, j)| IntervalModule {
                orientation: orientation.clone(),
                i,
                j,
            })
            .collect()
    }
}

impl fmt::Display for IntervalModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M[{},{}]@{}", self.i, self.j, self.orientation)
    }
}

impl FromStr for IntervalModule {
    type Err = Error;

    /// `M[i,j]@>><`; the orientation fixes `n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected M[i,j]@orientation, got {s:?}"));
        let s = s.trim();
        let (body, orient) = s.split_once('@').ok_or_else(bad)?;
        let inner = body
            .strip_prefix("M[")
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        let i = i.trim().parse().map_err(|_| bad())?;
        let j = j.trim().parse().map_err(|_| bad())?;
        IntervalModule::new(orient.parse()?, i, j)
    }
}

/// `1_{[i,j]}` for all `1 <= i <= j <= n`.
pub fn positive_roots_an(n: usize) -> Result<Vec<Vec<i32>>> {
    if n == 0 || n > REP_LIMIT {
        return Err(Error::BudgetExceeded(format!("roots supported for 1 <= n <= {REP_LIMIT}")));
    }
    Ok(IntervalModule::all(&Orientation::linear(n))
        .iter()
        .map(IntervalModule::dimension_vector)
        .collect())
}

/// Euler characteristic of `Gr_e(V)`: 1 if `e` spans a subrepresentation,
/// else 0.
pub fn grassmannian_chi(v: &IntervalModule, e: &[i32]) -> Result<i32> {
    let d = v.dimension_vector();
    if e.len() != d.len() || e.iter().zip(&d).any(|(&a, &b)| a < 0 || a > b) {
        return Err(Error::Parse(format!("subdimension vector {e:?} is not below {d:?}")));
    }
    let closed = v
        .orientation
        .arrows()
        .into_iter()
        .filter(|&(s, t)| d[s - 1] == 1 && d[t - 1] == 1)
        .all(|(s, t)| e[s - 1] <= e[t - 1]);
    Ok(i32::from(closed))
}

/// The Caldero–Chapoton character of `v`.
pub fn cc_map(v: &IntervalModule) -> Result<LaurentPoly> {
    let n = v.n();
    if n > REP_LIMIT {
        return Err(Error::BudgetExceeded(format!("representations limited to n <= {REP_LIMIT}")));
    }
    let d = v.dimension_vector();
    let arrows = v.orientation.arrows();
    let support: Vec<usize> = (v.i..=v.j).collect();
    let mut sum = LaurentPoly::zero();
    for mask in 0u32..(1 << support.len()) {
        let mut e = vec![0i32; n];
        for (b, &k) in support.iter().enumerate() {
            e[k - 1] = ((mask >> b) & 1) as i32;
        }
        let chi = grassmannian_chi(v, &e)?;
        if chi == 0 {
            continue;
        }
        // exponent of x_i: sum of e_j over arrows j -> i, plus d_j - e_j
        // over arrows i -> j
        let mut exps = vec![0i32; n];
        for &(s, t) in &arrows {
            exps[t - 1] += e[s - 1];
            exps[s - 1] += d[t - 1] - e[t - 1];
        }
        let m = Monomial::from_pairs(exps.iter().enumerate().map(|(i, &x)| (Var::X(i as u32 + 1), x)));
        sum = &sum + &LaurentPoly::term(chi, m);
    }
    let den = Monomial::from_pairs(d.iter().enumerate().map(|(i, &x)| (Var::X(i as u32 + 1), -x)));
    Ok(sum.mul_monomial(&den))
}

/// `d_i = max(0, -min exponent of x_i)` for `i = 1..n`.
pub fn denominator_vector(p: &LaurentPoly, n: usize) -> Vec<i32> {
    (1..=n as u32)
        .map(|i| (-p.min_exponent(Var::X(i))).max(0))
        .collect()
}

/// One line of a character check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CcRecord {
    pub module: String,
    pub dimension_vector: Vec<i32>,
    pub cc: String,
    pub denominator_vector: Vec<i32>,
    /// The non-initial cluster variable with that denominator vector.
    pub matched_variable: Option<String>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CcReport {
    pub orientation: String,
    pub records: Vec<CcRecord>,
    pub non_initial_variables: usize,
    /// Every indecomposable matched, and the matching is onto.
    pub holds: bool,
}

/// Compares each character with the non-initial cluster variable of the
/// same denominator vector in the exchange closure of the orientation.
pub fn verify_cc_theorem_for(orientation: &Orientation) -> Result<CcReport> {
    let n = orientation.n();
    if n > 5 {
        return Err(Error::BudgetExceeded("character check supported for n <= 5".into()));
    }
    let graph = ExchangeGraph::build(&Seed::initial(orientation.quiver()), DEFAULT_BUDGET)?;
    let initial: BTreeSet<LaurentPoly> = (1..=n as u32).map(LaurentPoly::x).collect();
    let non_initial: Vec<LaurentPoly> = graph
        .cluster_variables()
        .into_iter()
        .filter(|v| !initial.contains(v))
        .collect();
    let mut records = Vec::new();
    let mut matched = BTreeSet::new();
    for v in IntervalModule::all(orientation) {
        let cc = cc_map(&v)?;
        let dv = v.dimension_vector();
        let hits: Vec<&LaurentPoly> = non_initial
            .iter()
            .filter(|p| denominator_vector(p, n) == dv)
            .collect();
        let ok = hits.len() == 1 && *hits[0] == cc && denominator_vector(&cc, n) == dv;
        if hits.len() == 1 {
            matched.insert(hits[0].clone());
        }
        records.push(CcRecord {
            module: v.to_string(),
            dimension_vector: dv,
            denominator_vector: denominator_vector(&cc, n),
            cc: cc.to_fraction_string(),
            matched_variable: (hits.len() == 1).then(|| hits[0].to_fraction_string()),
            ok,
        });
    }
    let holds = records.iter().all(|r| r.ok) && matched.len() == non_initial.len();
    Ok(CcReport {
        orientation: orientation.to_string(),
        records,
        non_initial_variables: non_initial.len(),
        holds,
    })
}

/// The character check for the linear orientation of `A_n`.
pub fn verify_cc_theorem(n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::Parse("n must be positive".into()));
    }
    Ok(verify_cc_theorem_for(&Orientation::linear(n))?.holds)
}

/// One module of an extension comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionRecord {
    pub module: String,
    pub cc_small: String,
    pub cc_padded: String,
    pub identical: bool,
}

/// Characters of every `A_n` indecomposable next to those of its zero
/// padding to the chain `A_N`.
pub fn infinite_extension_report(n: usize, big_n: usize) -> Result<Vec<ExtensionRecord>> {
    if n == 0 || n >= big_n || big_n > REP_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "extension check needs 1 <= n < N <= {REP_LIMIT}"
        )));
    }
    IntervalModule::all(&Orientation::linear(n))
        .into_iter()
        .map(|v| {
            let padded = IntervalModule::new(Orientation::linear(big_n), v.i, v.j)?;
            let (a, b) = (cc_map(&v)?.to_fraction_string(), cc_map(&padded)?.to_fraction_string());
            Ok(ExtensionRecord {
                module: v.to_string(),
                identical: a == b,
                cc_small: a,
                cc_padded: b,
            })
        })
        .collect()
}

/// True iff zero padding from `A_n` to `A_N` leaves every character
/// textually unchanged. Modules whose support reaches vertex `n` pick up
/// `x_{n+1}` through the arrow `n -> n+1`, so this fails for all `n < N`.
pub fn infinite_extension_check(n: usize, big_n: usize) -> Result<bool> {
    Ok(infinite_extension_report(n, big_n)?.iter().all(|r| r.identical))
}

/// The part of padding invariance that does hold: a module supported on
/// `[i, j]` has the same character over every chain `A_m` with `m > j`.
pub fn stable_extension_check(big_n: usize) -> Result<bool> {
    if big_n == 0 || big_n > REP_LIMIT {
        return Err(Error::BudgetExceeded(format!("needs 1 <= N <= {REP_LIMIT}")));
    }
    for v in IntervalModule::all(&Orientation::linear(big_n)) {
        let reference = cc_map(&v)?;
        for m in v.j + 1..=big_n {
            if cc_map(&IntervalModule::new(Orientation::linear(m), v.i, v.j)?)? != reference {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn module(i: usize, j: usize, o: &str) -> IntervalModule {
        IntervalModule::new(o.parse().unwrap(), i, j).unwrap()
    }

    #[test]
    fn roots() {
        assert_eq!(positive_roots_an(1).unwrap(), vec![vec![1]]);
        let r2: BTreeSet<_> = positive_roots_an(2).unwrap().into_iter().collect();
        assert_eq!(r2, BTreeSet::from([vec![1, 0], vec![0, 1], vec![1, 1]]));
        assert_eq!(positive_roots_an(3).unwrap().len(), 6);
        assert!(positive_roots_an(9).is_err());
    }

    #[test]
    fn chi_examples() {
        let v = module(1, 2, ">");
        assert_eq!(grassmannian_chi(&v, &[1, 0]).unwrap(), 0);
        assert_eq!(grassmannian_chi(&v, &[0, 1]).unwrap(), 1);
        assert_eq!(grassmannian_chi(&v, &[0, 0]).unwrap(), 1);
        assert_eq!(grassmannian_chi(&v, &[1, 1]).unwrap(), 1);
        assert!(grassmannian_chi(&module(2, 2, ">"), &[1, 1]).is_err());
    }

    #[test]
    fn characters() {
        assert_eq!(cc_map(&module(1, 2, ">")).unwrap(), lp("(1 + x1 + x2)/(x1*x2)"));
        assert_eq!(cc_map(&module(2, 2, ">")).unwrap(), lp("(1 + x1)/x2"));
        assert_eq!(cc_map(&module(1, 1, ">")).unwrap(), lp("(1 + x2)/x1"));
        assert_eq!(cc_map(&module(1, 1, "")).unwrap(), lp("2*x1^-1"));
    }

    #[test]
    fn denominators() {
        assert_eq!(denominator_vector(&lp("(1 + x1 + x2)/(x1*x2)"), 2), vec![1, 1]);
        assert_eq!(denominator_vector(&lp("(1 + x1)/x2"), 2), vec![0, 1]);
        assert_eq!(denominator_vector(&lp("x3"), 3), vec![0, 0, 0]);
    }

    #[test]
    fn theorem_small() {
        for n in 1..=3 {
            assert!(verify_cc_theorem(n).unwrap());
        }
        assert!(verify_cc_theorem_for(&Orientation::alternating(3)).unwrap().holds);
    }

    #[test]
    fn padding() {
        let r = infinite_extension_report(2, 4).unwrap();
        let same: Vec<bool> = r.iter().map(|x| x.identical).collect();
        // [1,1], [1,2], [2,2]
        assert_eq!(same, vec![true, false, false]);
        assert_eq!(r[1].cc_padded.parse::<LaurentPoly>().unwrap(), lp("(x1 + x3 + x2*x3)/(x1*x2)"));
        assert!(!infinite_extension_check(1, 2).unwrap());
        assert_eq!(cc_map(&module(1, 1, ">")).unwrap(), lp("(1 + x2)/x1"));
        assert!(stable_extension_check(6).unwrap());
        assert!(infinite_extension_report(3, 3).is_err());
    }

    #[test]
    fn module_names() {
        let v = module(1, 2, "><");
        assert_eq!(v.to_string(), "M[1,2]@><");
        assert_eq!(v.to_string().parse::<IntervalModule>().unwrap(), v);
        assert!("M[3,2]@>>".parse::<IntervalModule>().is_err());
        assert!("M[1,4]@>>".parse::<IntervalModule>().is_err());
        assert!(">x".parse::<Orientation>().is_err());
    }
}
