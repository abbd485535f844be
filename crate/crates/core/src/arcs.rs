//! Arcs between non-neighbouring integers, the standard infinite
//! non-crossing families, and flips inside a finite window.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triangulation::{parse_pair, split_pairs, Diagonal, Triangulation};

/// Largest number of collections visited by [`reachability_window_check`].
pub const REACHABILITY_LIMIT: usize = 200_000;

/// An arc `(m, n)` with `n - m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub m: i64,
    pub n: i64,
}

impl Arc {
    /// Endpoints may come in either order.
    pub fn new(a: i64, b: i64) -> Result<Arc> {
        let (m, n) = (a.min(b), a.max(b));
        if n - m < 2 {
            return Err(Error::InvalidArc(a, b));
        }
        Ok(Arc { m, n })
    }

    pub fn crosses(&self, other: &Arc) -> bool {
        (self.m < other.m && other.m < self.n && self.n < other.n)
            || (other.m < self.m && self.m < other.n && other.n < self.n)
    }

    pub fn within(&self, lo: i64, hi: i64) -> bool {
        lo <= self.m && self.n <= hi
    }
}

pub fn crossing(a: &Arc, b: &Arc) -> bool {
    a.crosses(b)
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

impl FromStr for Arc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = parse_pair(s)?;
        Arc::new(a, b)
    }
}

pub fn parse_arcs(s: &str) -> Result<BTreeSet<Arc>> {
    split_pairs(s).into_iter().map(str::parse).collect()
}

pub fn format_arcs(arcs: &BTreeSet<Arc>) -> String {
    arcs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArcFamily {
    Explicit(BTreeSet<Arc>),
    /// `(c-i-1, c)` and `(c, c+i+1)`.
    FountainT0(i64),
    /// `(-n, n)` and `(-n, n+1)`.
    LeapfrogT0Prime,
    /// `(c, c+2k)`, `(c-2k, c)`, `(c-2k-2, c-2k)` and `(c+2k, c+2k+2)`.
    FountainSpaced(i64),
    /// `(-n, n)` and `(-(n+1), n)`.
    LeapfrogShifted,
}

/// `slope * k + offset` for the family parameter `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Affine(i64, i64);

impl Affine {
    fn at(self, k: i64) -> i64 {
        self.0 * k + self.1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Fountain(i64),
    LocallyFinite,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Fountain(c) => write!(f, "fountain({c})"),
            Classification::LocallyFinite => f.write_str("locally_finite"),
        }
    }
}

impl ArcFamily {
    fn patterns(&self) -> Vec<(Affine, Affine)> {
        match *self {
            ArcFamily::Explicit(_) => Vec::new(),
            ArcFamily::FountainT0(c) => vec![
                (Affine(-1, c - 1), Affine(0, c)),
                (Affine(0, c), Affine(1, c + 1)),
            ],
            ArcFamily::LeapfrogT0Prime => vec![(Affine(-1, 0), Affine(1, 0)), (Affine(-1, 0), Affine(1, 1))],
            ArcFamily::FountainSpaced(c) => vec![
                (Affine(0, c), Affine(2, c)),
                (Affine(-2, c), Affine(0, c)),
                (Affine(-2, c - 2), Affine(-2, c)),
                (Affine(2, c), Affine(2, c + 2)),
            ],
            ArcFamily::LeapfrogShifted => vec![(Affine(-1, 0), Affine(1, 0)), (Affine(-1, -1), Affine(1, 0))],
        }
    }

    /// Family arcs with both endpoints in `[lo, hi]`.
    pub fn materialize(&self, lo: i64, hi: i64) -> Result<BTreeSet<Arc>> {
        if lo >= hi {
            return Err(Error::Parse(format!("empty window [{lo},{hi}]")));
        }
        if let ArcFamily::Explicit(arcs) = self {
            return Ok(arcs.iter().filter(|a| a.within(lo, hi)).copied().collect());
        }
        let span = (hi - lo).abs() + lo.abs() + hi.abs() + 2;
        let mut out = BTreeSet::new();
        for (pm, pn) in self.patterns() {
            for k in 1..=span {
                let (m, n) = (pm.at(k), pn.at(k));
                if lo <= m && n <= hi {
                    out.insert(Arc::new(m, n)?);
                }
            }
        }
        Ok(out)
    }

    /// Decided from the family formula: a point that is the fixed right end
    /// of one infinite pattern and the fixed left end of another is a
    /// fountain; with no fixed ends at all the family is locally finite.
    pub fn classify(&self) -> Result<Classification> {
        let pats = self.patterns();
        if pats.is_empty() {
            return Err(Error::NotClassifiable);
        }
        let fixed_right: BTreeSet<i64> = pats.iter().filter(|(m, n)| n.0 == 0 && m.0 != 0).map(|(_, n)| n.1).collect();
        let fixed_left: BTreeSet<i64> = pats.iter().filter(|(m, n)| m.0 == 0 && n.0 != 0).map(|(m, _)| m.1).collect();
        if let Some(&c) = fixed_right.intersection(&fixed_left).next() {
            return Ok(Classification::Fountain(c));
        }
        if pats.iter().all(|(m, n)| m.0 != 0 && n.0 != 0) {
            return Ok(Classification::LocallyFinite);
        }
        Err(Error::NotClassifiable)
    }
}

impl fmt::Display for ArcFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcFamily::Explicit(arcs) => write!(f, "explicit:{}", format_arcs(arcs)),
            ArcFamily::FountainT0(c) => write!(f, "fountain:{c}"),
            ArcFamily::LeapfrogT0Prime => f.write_str("leapfrog"),
            ArcFamily::FountainSpaced(c) => write!(f, "fountain-spaced:{c}"),
            ArcFamily::LeapfrogShifted => f.write_str("leapfrog-shifted"),
        }
    }
}

impl FromStr for ArcFamily {
    type Err = Error;

    /// `fountain:5`, `leapfrog`, `leapfrog-shifted`, `fountain-spaced:5`,
    /// or `explicit:(0,2),(1,3)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let center = |c: &str| c.trim().parse::<i64>().map_err(|_| Error::UnknownFamily(s.to_string()));
        match s.split_once(':') {
            Some(("fountain", c)) => Ok(ArcFamily::FountainT0(center(c)?)),
            Some(("fountain-spaced", c)) => Ok(ArcFamily::FountainSpaced(center(c)?)),
            Some(("explicit", arcs)) => Ok(ArcFamily::Explicit(parse_arcs(arcs)?)),
            None if s == "leapfrog" => Ok(ArcFamily::LeapfrogT0Prime),
            None if s == "leapfrog-shifted" => Ok(ArcFamily::LeapfrogShifted),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

fn check_collection(collection: &BTreeSet<Arc>, lo: i64, hi: i64) -> Result<()> {
    let arcs: Vec<&Arc> = collection.iter().collect();
    for (i, a) in arcs.iter().enumerate() {
        if !a.within(lo, hi) {
            return Err(Error::InvalidArc(a.m, a.n));
        }
        if let Some(b) = arcs[i + 1..].iter().find(|b| a.crosses(b)) {
            return Err(Error::InvalidArc(b.m, b.n));
        }
    }
    Ok(())
}

/// True iff the arcs, together with the unit sides and the frozen hull
/// `(lo, hi)`, triangulate the polygon on `lo..=hi`.
pub fn is_windowed_maximal(collection: &BTreeSet<Arc>, lo: i64, hi: i64) -> bool {
    let hull = Arc { m: lo, n: hi };
    check_collection(collection, lo, hi).is_ok()
        && collection.iter().filter(|a| **a != hull).count() as i64 == (hi - lo + 1) - 3
}

fn has_edge(collection: &BTreeSet<Arc>, a: i64, b: i64, lo: i64, hi: i64) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    b - a == 1 || (a == lo && b == hi) || collection.contains(&Arc { m: a, n: b })
}

fn flip_inner(collection: &BTreeSet<Arc>, a: Arc, lo: i64, hi: i64, localized: bool) -> Result<BTreeSet<Arc>> {
    if !collection.contains(&a) {
        return Err(Error::ArcNotPresent(a.m, a.n));
    }
    if a.m == lo && a.n == hi {
        return Err(Error::FrozenArc(a.m, a.n));
    }
    check_collection(collection, lo, hi)?;
    let apex = |range: Vec<i64>| -> Vec<i64> {
        range
            .into_iter()
            .filter(|&x| has_edge(collection, a.m, x, lo, hi) && has_edge(collection, x, a.n, lo, hi))
            .collect()
    };
    let inner = apex((a.m + 1..a.n).collect());
    let outer = apex((lo..a.m).chain(a.n + 1..=hi).collect());
    // a triangulated window has exactly one apex on each side of `a`
    let (x, y) = match (inner.as_slice(), outer.as_slice()) {
        ([x], [y]) => (*x, *y),
        _ => return Err(Error::NoUniqueReplacement(a.m, a.n)),
    };
    if localized && [x, y].iter().any(|&v| {
        let tri = [a.m, a.n, v];
        tri.contains(&lo) && tri.contains(&hi)
    }) {
        return Err(Error::NoUniqueReplacement(a.m, a.n));
    }
    let mut out = collection.clone();
    out.remove(&a);
    out.insert(Arc::new(x, y)?);
    Ok(out)
}

/// Replace `a` by the other diagonal of its quadrilateral in the polygon on
/// `lo..=hi`, whose hull `(lo, hi)` is a frozen side.
pub fn flip_arc(collection: &BTreeSet<Arc>, a: Arc, lo: i64, hi: i64) -> Result<BTreeSet<Arc>> {
    flip_inner(collection, a, lo, hi, false)
}

/// Like [`flip_arc`], but refuses flips whose quadrilateral uses the hull:
/// for a window cut from an infinite family those depend on arcs outside.
pub fn flip_arc_localized(collection: &BTreeSet<Arc>, a: Arc, lo: i64, hi: i64) -> Result<BTreeSet<Arc>> {
    flip_inner(collection, a, lo, hi, true)
}

/// Arcs on `lo..=hi` as a triangulation of the polygon with vertices
/// `0..=hi-lo`; the hull becomes a side.
pub fn arcs_to_triangulation(collection: &BTreeSet<Arc>, lo: i64, hi: i64) -> Result<Triangulation> {
    let ngon = (hi - lo + 1) as usize;
    let diagonals = collection
        .iter()
        .filter(|a| !(a.m == lo && a.n == hi))
        .map(|a| Diagonal::new((a.m - lo) as usize, (a.n - lo) as usize))
        .collect::<Result<Vec<_>>>()?;
    Triangulation::new(ngon, diagonals)
}

pub fn triangulation_to_arcs(t: &Triangulation, lo: i64) -> BTreeSet<Arc> {
    t.diagonals()
        .iter()
        .map(|d| Arc {
            m: d.tail as i64 + lo,
            n: d.head as i64 + lo,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReachabilityReport {
    pub center: i64,
    pub window: (i64, i64),
    pub budget: usize,
    pub collections_visited: usize,
    /// Every arc seen satisfies `(k - c)(l - c) >= 0`.
    pub sign_condition: bool,
    pub violations: Vec<Arc>,
    /// Window arcs with `(k - c)(l - c) >= 0`, split by whether some
    /// descendant within the budget contains them.
    pub reached: Vec<Arc>,
    pub not_reached: Vec<Arc>,
}

/// Flip search from a fountain family inside `[lo, hi]`, using only flips
/// that the window determines.
pub fn reachability_window_check(family: &ArcFamily, lo: i64, hi: i64, budget: usize) -> Result<ReachabilityReport> {
    let Classification::Fountain(c) = family.classify()? else {
        return Err(Error::NotClassifiable);
    };
    let start = family.materialize(lo, hi)?;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    let mut arcs_seen: BTreeSet<Arc> = BTreeSet::new();
    while let Some((col, depth)) = queue.pop_front() {
        arcs_seen.extend(col.iter().copied());
        if depth == budget {
            continue;
        }
        for a in &col {
            let Ok(next) = flip_arc_localized(&col, *a, lo, hi) else {
                continue;
            };
            if seen.insert(next.clone()) {
                if seen.len() > REACHABILITY_LIMIT {
                    return Err(Error::BudgetExceeded(format!(
                        "more than {REACHABILITY_LIMIT} collections within {budget} flips"
                    )));
                }
                queue.push_back((next, depth + 1));
            }
        }
    }
    let legal = |a: &Arc| (a.m - c) * (a.n - c) >= 0;
    let violations: Vec<Arc> = arcs_seen.iter().filter(|a| !legal(a)).copied().collect();
    let (reached, not_reached) = (lo..=hi)
        .flat_map(|m| (m + 2..=hi).map(move |n| Arc { m, n }))
        .filter(|a| legal(a) && !(a.m == lo && a.n == hi))
        .partition(|a| arcs_seen.contains(a));
    Ok(ReachabilityReport {
        center: c,
        window: (lo, hi),
        budget,
        collections_visited: seen.len(),
        sign_condition: violations.is_empty(),
        violations,
        reached,
        not_reached,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(m: i64, n: i64) -> Arc {
        Arc::new(m, n).unwrap()
    }

    fn set(pairs: &[(i64, i64)]) -> BTreeSet<Arc> {
        pairs.iter().map(|&(m, n)| arc(m, n)).collect()
    }

    #[test]
    fn crossings() {
        assert!(crossing(&arc(0, 2), &arc(1, 3)));
        assert!(!crossing(&arc(0, 2), &arc(2, 4)));
        assert!(!crossing(&arc(0, 5), &arc(1, 3)));
        assert_eq!(Arc::new(3, 4), Err(Error::InvalidArc(3, 4)));
        assert_eq!(arc(5, 1), Arc { m: 1, n: 5 });
    }

    #[test]
    fn materialized_windows() {
        let f = ArcFamily::FountainT0(0);
        assert_eq!(f.materialize(-3, 3).unwrap(), set(&[(-2, 0), (-3, 0), (0, 2), (0, 3)]));
        let l = ArcFamily::LeapfrogT0Prime;
        assert_eq!(l.materialize(-2, 2).unwrap(), set(&[(-1, 1), (-1, 2), (-2, 2)]));
        let e = ArcFamily::Explicit(set(&[(0, 2), (5, 9)]));
        assert_eq!(e.materialize(0, 4).unwrap(), set(&[(0, 2)]));
        assert_eq!(
            ArcFamily::FountainSpaced(0).materialize(-4, 4).unwrap(),
            set(&[(-4, -2), (-4, 0), (-2, 0), (0, 2), (0, 4), (2, 4)])
        );
        assert_eq!(
            ArcFamily::LeapfrogShifted.materialize(-3, 3).unwrap(),
            set(&[(-1, 1), (-2, 1), (-2, 2), (-3, 2), (-3, 3)])
        );
    }

    #[test]
    fn classification() {
        assert_eq!(ArcFamily::FountainT0(5).classify().unwrap(), Classification::Fountain(5));
        assert_eq!(ArcFamily::FountainSpaced(-2).classify().unwrap(), Classification::Fountain(-2));
        assert_eq!(ArcFamily::LeapfrogT0Prime.classify().unwrap(), Classification::LocallyFinite);
        assert_eq!(ArcFamily::LeapfrogShifted.classify().unwrap(), Classification::LocallyFinite);
        assert_eq!(ArcFamily::Explicit(BTreeSet::new()).classify(), Err(Error::NotClassifiable));
    }

    #[test]
    fn family_strings() {
        for s in ["fountain:5", "leapfrog", "leapfrog-shifted", "fountain-spaced:-3", "explicit:(0,2),(1,4)"] {
            assert_eq!(s.parse::<ArcFamily>().unwrap().to_string(), s);
        }
        assert_eq!("spiral".parse::<ArcFamily>(), Err(Error::UnknownFamily("spiral".into())));
        assert!("fountain:x".parse::<ArcFamily>().is_err());
    }

    #[test]
    fn square_flip() {
        let c = set(&[(0, 2)]);
        assert_eq!(flip_arc(&c, arc(0, 2), 0, 3).unwrap(), set(&[(1, 3)]));
        assert_eq!(flip_arc(&set(&[(0, 3), (0, 2)]), arc(0, 3), 0, 3), Err(Error::FrozenArc(0, 3)));
        assert_eq!(flip_arc(&c, arc(1, 3), 0, 3), Err(Error::ArcNotPresent(1, 3)));
        assert_eq!(flip_arc_localized(&c, arc(0, 2), 0, 3), Err(Error::NoUniqueReplacement(0, 2)));
    }

    #[test]
    fn fountain_window_flips() {
        let f = ArcFamily::FountainT0(0).materialize(-4, 4).unwrap();
        assert!(is_windowed_maximal(&f, -4, 4));
        assert_eq!(
            flip_arc_localized(&f, arc(0, 2), -4, 4).unwrap(),
            set(&[(-2, 0), (-3, 0), (-4, 0), (1, 3), (0, 3), (0, 4)])
        );
        assert_eq!(flip_arc_localized(&f, arc(0, 4), -4, 4), Err(Error::NoUniqueReplacement(0, 4)));
    }

    #[test]
    fn reachability_small() {
        let f = ArcFamily::FountainT0(0);
        let r0 = reachability_window_check(&f, -4, 4, 0).unwrap();
        assert!(r0.sign_condition);
        assert_eq!(r0.collections_visited, 1);
        let r3 = reachability_window_check(&f, -4, 4, 3).unwrap();
        assert!(r3.sign_condition);
        assert!(!r3.reached.contains(&arc(-1, 1)) && !r3.not_reached.contains(&arc(-1, 1)));
        assert!(r3.reached.contains(&arc(1, 3)));
        assert_eq!(
            reachability_window_check(&ArcFamily::LeapfrogT0Prime, -3, 3, 1),
            Err(Error::NotClassifiable)
        );
    }
}
