//! Triangulations of a labelled convex polygon and the bijection with
//! Young diagrams that sends a triangulation to the decreasing list of its
//! diagonal tails.
//!
//! Vertices are labelled `0..N` counter-clockwise. Every diagonal is stored
//! as `(tail, head)` with `tail < head`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{DihedralElement, Partition};

/// Largest polygon [`Triangulation::enumerate`] will expand.
pub const ENUMERATION_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Diagonal {
    pub tail: usize,
    pub head: usize,
}

impl Diagonal {
    /// Normalizes the endpoint order. Neighbouring labels are rejected; the
    /// closing side `(0, N-1)` can only be detected against a polygon.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        let (tail, head) = if a < b { (a, b) } else { (b, a) };
        if head - tail < 2 {
            return Err(Error::InvalidDiagonal(a, b));
        }
        Ok(Diagonal { tail, head })
    }

    /// True iff the two chords cross in the open interior.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        let (a, b, c, d) = (self.tail, self.head, other.tail, other.head);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    fn fits_polygon(&self, ngon: usize) -> bool {
        self.head < ngon && !(self.tail == 0 && self.head == ngon - 1)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

impl FromStr for Diagonal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = parse_pair(s)?;
        let conv = |v: i64| usize::try_from(v).map_err(|_| Error::Parse(format!("negative label in {s:?}")));
        Diagonal::new(conv(a)?, conv(b)?)
    }
}

/// Parses `"(a,b)"`.
pub(crate) fn parse_pair(s: &str) -> Result<(i64, i64)> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (a,b), got {s:?}")))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected (a,b), got {s:?}")))?;
    let num = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    Ok((num(a)?, num(b)?))
}

/// Splits `"(a,b),(c,d)"` into pair strings.
pub(crate) fn split_pairs(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => start = Some(i),
            ')' => {
                if let Some(st) = start.take() {
                    out.push(&s[st..=i]);
                }
            }
            _ => {}
        }
    }
    out
}

/// A set of diagonals of a convex `ngon`. Values built through
/// [`Triangulation::new`] are always valid triangulations; partial sets can
/// be held through [`Triangulation::from_parts`] and checked with
/// [`Triangulation::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    ngon: usize,
    diagonals: BTreeSet<Diagonal>,
}

impl Triangulation {
    pub fn new(ngon: usize, diagonals: impl IntoIterator<Item = Diagonal>) -> Result<Self> {
        let t = Triangulation::from_parts(ngon, diagonals);
        t.check()?;
        Ok(t)
    }

    pub fn from_parts(ngon: usize, diagonals: impl IntoIterator<Item = Diagonal>) -> Self {
        Triangulation {
            ngon,
            diagonals: diagonals.into_iter().collect(),
        }
    }

    /// Builds from raw `(a, b)` pairs in any endpoint order.
    pub fn from_pairs(ngon: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let diags = pairs
            .iter()
            .map(|&(a, b)| Diagonal::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Triangulation::new(ngon, diags)
    }

    /// The fan of diagonals `(0, 2), (0, 3), ..., (0, N-2)`.
    pub fn fan(ngon: usize) -> Self {
        Triangulation {
            ngon,
            diagonals: (2..ngon.saturating_sub(1))
                .map(|h| Diagonal { tail: 0, head: h })
                .collect(),
        }
    }

    pub fn ngon(&self) -> usize {
        self.ngon
    }

    pub fn diagonals(&self) -> &BTreeSet<Diagonal> {
        &self.diagonals
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.contains(d)
    }

    fn check(&self) -> Result<()> {
        let n = self.ngon;
        // the 2-gon is the degenerate case with one, empty, triangulation
        if n < 2 {
            return Err(Error::InvalidTriangulation(format!("{n}-gon")));
        }
        if n == 2 {
            return match self.diagonals.first() {
                Some(d) => Err(Error::InvalidTriangulation(format!("{d} is not a diagonal of the 2-gon"))),
                None => Ok(()),
            };
        }
        if let Some(d) = self.diagonals.iter().find(|d| !d.fits_polygon(n)) {
            return Err(Error::InvalidTriangulation(format!("{d} is not a diagonal of the {n}-gon")));
        }
        if self.diagonals.len() != n - 3 {
            return Err(Error::InvalidTriangulation(format!(
                "{} diagonals, expected {}",
                self.diagonals.len(),
                n - 3
            )));
        }
        let ds: Vec<_> = self.diagonals.iter().collect();
        for (i, a) in ds.iter().enumerate() {
            for b in &ds[i + 1..] {
                if a.crosses(b) {
                    return Err(Error::InvalidTriangulation(format!("{a} crosses {b}")));
                }
            }
        }
        Ok(())
    }

    /// True iff the diagonals are pairwise non-crossing and there are
    /// exactly `N - 3` of them.
    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    /// Decreasing sequence of diagonal tails.
    pub fn lambda_map(&self) -> Result<Partition> {
        self.check()?;
        Ok(Partition::from_unsorted(
            self.diagonals.iter().map(|d| d.tail).collect(),
        ))
    }

    /// The unique triangulation of the `ngon` whose tails are the rows of
    /// `p`, built by repeatedly cutting off the ear at `b_1 + 1` where `b_1`
    /// is the longest remaining row.
    pub fn lambda_inverse(p: &Partition, ngon: usize) -> Result<Triangulation> {
        if ngon < 2 || !p.fits_in(ngon - 2) {
            return Err(Error::DoesNotFit {
                partition: p.to_string(),
                n: ngon.saturating_sub(2),
            });
        }
        let rows: Vec<usize> = (1..ngon - 2).map(|k| p.row(k)).collect();
        let mut diagonals: Vec<Diagonal> = Vec::with_capacity(rows.len());
        // Innermost polygon first: the last row belongs to a square.
        for (depth, &b) in rows.iter().enumerate().rev() {
            let size = ngon - depth;
            debug_assert!(b + 2 < size);
            for d in diagonals.iter_mut() {
                if d.tail > b {
                    d.tail += 1;
                }
                if d.head > b {
                    d.head += 1;
                }
            }
            diagonals.push(Diagonal { tail: b, head: b + 2 });
        }
        Triangulation::new(ngon, diagonals)
    }

    /// Diagonals numbered `1..N-3`: larger tails come first, and among equal
    /// tails the shorter diagonal comes first. The `k`-th tail is row `k` of
    /// [`Triangulation::lambda_map`].
    pub fn diag_order(&self) -> Vec<Diagonal> {
        let mut ds: Vec<Diagonal> = self.diagonals.iter().copied().collect();
        ds.sort_by(|a, b| b.tail.cmp(&a.tail).then(a.head.cmp(&b.head)));
        ds
    }

    /// True for sides and diagonals of the triangulation.
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        b - a == 1 || (a == 0 && b == self.ngon - 1) || self.diagonals.contains(&Diagonal { tail: a, head: b })
    }

    /// Triangles `[a, b, c]` with `a < b < c`, in increasing order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.ngon;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !self.has_edge(a, b) {
                    continue;
                }
                for c in b + 1..n {
                    if self.has_edge(b, c) && self.has_edge(a, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// The diagonal that replaces `d` in a flip.
    pub fn flipped_diagonal(&self, d: &Diagonal) -> Result<Diagonal> {
        if !self.diagonals.contains(d) {
            return Err(Error::DiagonalNotPresent(d.tail, d.head));
        }
        let apexes: Vec<usize> = (0..self.ngon)
            .filter(|&c| c != d.tail && c != d.head)
            .filter(|&c| self.has_edge(d.tail, c) && self.has_edge(c, d.head))
            .collect();
        // Two triangles border every diagonal of a triangulation: one apex
        // lies strictly between tail and head, the other outside.
        let inner = apexes.iter().copied().find(|&c| d.tail < c && c < d.head);
        let outer = apexes.iter().copied().find(|&c| c < d.tail || c > d.head);
        match (inner, outer) {
            (Some(i), Some(o)) => Diagonal::new(i, o),
            _ => Err(Error::InvalidTriangulation(format!("{d} does not border two triangles"))),
        }
    }

    /// Replaces `d` by the other diagonal of the quadrilateral formed by the
    /// two triangles adjacent to it.
    pub fn flip_diagonal(&self, d: &Diagonal) -> Result<Triangulation> {
        let replacement = self.flipped_diagonal(d)?;
        let mut diagonals = self.diagonals.clone();
        diagonals.remove(d);
        diagonals.insert(replacement);
        Ok(Triangulation {
            ngon: self.ngon,
            diagonals,
        })
    }

    fn relabel(&self, f: impl Fn(usize) -> usize) -> Triangulation {
        Triangulation {
            ngon: self.ngon,
            diagonals: self
                .diagonals
                .iter()
                .map(|d| {
                    let (a, b) = (f(d.tail), f(d.head));
                    Diagonal {
                        tail: a.min(b),
                        head: a.max(b),
                    }
                })
                .collect(),
        }
    }

    /// Rotation `v -> v + 1 (mod N)`.
    pub fn rotate(&self) -> Triangulation {
        let n = self.ngon;
        self.relabel(|v| (v + 1) % n)
    }

    /// Reflection `v -> N - 1 - v`, fixing the bisector of the side `(0, N-1)`.
    pub fn reflect(&self) -> Triangulation {
        let n = self.ngon;
        self.relabel(|v| n - 1 - v)
    }

    pub fn act(&self, g: &DihedralElement) -> Triangulation {
        assert_eq!(g.order, self.ngon, "dihedral element of the wrong polygon");
        let mut t = self.clone();
        for _ in 0..g.rotations {
            t = t.rotate();
        }
        if g.reflect {
            t = t.reflect();
        }
        t
    }

    /// All triangulations of the `ngon`, sorted. There are `Catalan(N-2)`.
    /// The 2-gon counts as having one.
    pub fn enumerate(ngon: usize) -> Result<Vec<Triangulation>> {
        if !(2..=ENUMERATION_LIMIT).contains(&ngon) {
            return Err(Error::BudgetExceeded(format!(
                "enumeration supports 2 <= N <= {ENUMERATION_LIMIT}, got {ngon}"
            )));
        }
        // Triangulations of the sub-polygon lo..=hi, as diagonal lists.
        fn sub(lo: usize, hi: usize, outer: bool) -> Vec<Vec<Diagonal>> {
            if hi - lo < 2 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for apex in lo + 1..hi {
                let left = sub(lo, apex, false);
                let right = sub(apex, hi, false);
                for l in &left {
                    for r in &right {
                        let mut ds = Vec::with_capacity(l.len() + r.len() + 1);
                        ds.extend_from_slice(l);
                        ds.extend_from_slice(r);
                        if !outer {
                            ds.push(Diagonal { tail: lo, head: hi });
                        }
                        out.push(ds);
                    }
                }
            }
            out
        }
        let mut all: Vec<Triangulation> = sub(0, ngon - 1, true)
            .into_iter()
            .map(|ds| Triangulation::from_parts(ngon, ds.into_iter().filter(|d| d.head - d.tail >= 2)))
            .collect();
        all.sort();
        Ok(all)
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.ngon)?;
        for (i, d) in self.diag_order().iter().enumerate() {
            f.write_str(if i == 0 { " " } else { "," })?;
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for Triangulation {
    type Err = Error;

    /// Accepts `"N; (a,b),(c,d),..."` with diagonals in any order.
    fn from_str(s: &str) -> Result<Self> {
        let (n, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected \"N; (a,b),...\", got {s:?}")))?;
        let ngon = n
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad polygon size {n:?}")))?;
        let diags = split_pairs(rest)
            .into_iter()
            .map(str::parse::<Diagonal>)
            .collect::<Result<Vec<_>>>()?;
        Triangulation::new(ngon, diags)
    }
}

impl Serialize for Triangulation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Triangulation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Triangulation {
        Triangulation::from_pairs(8, &[(4, 6), (2, 4), (2, 6), (0, 2), (0, 6)]).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(example().validate());
        assert!(Triangulation::from_pairs(4, &[(0, 2)]).is_ok());
        let bad = Triangulation::from_parts(5, [Diagonal::new(0, 2).unwrap(), Diagonal::new(1, 3).unwrap()]);
        assert!(!bad.validate());
        assert!(!Triangulation::from_parts(5, [Diagonal::new(0, 2).unwrap()]).validate());
        assert!(!Triangulation::from_parts(4, [Diagonal::new(0, 3).unwrap()]).validate());
        assert!(Diagonal::new(3, 4).is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(example().lambda_map().unwrap(), "[4,2,2]".parse().unwrap());
        let sq0 = Triangulation::from_pairs(4, &[(0, 2)]).unwrap();
        let sq1 = Triangulation::from_pairs(4, &[(1, 3)]).unwrap();
        assert_eq!(sq0.lambda_map().unwrap(), Partition::empty());
        assert_eq!(sq1.lambda_map().unwrap(), "[1]".parse().unwrap());
        assert_eq!(Triangulation::lambda_inverse(&"[4,2,2]".parse().unwrap(), 8).unwrap(), example());
        assert_eq!(Triangulation::lambda_inverse(&Partition::empty(), 4).unwrap(), sq0);
        assert_eq!(Triangulation::lambda_inverse(&Partition::empty(), 7).unwrap(), Triangulation::fan(7));
        assert!(Triangulation::lambda_inverse(&"[3]".parse().unwrap(), 5).is_err());
    }

    #[test]
    fn order_example() {
        let order: Vec<String> = example().diag_order().iter().map(|d| d.to_string()).collect();
        assert_eq!(order, ["(4,6)", "(2,4)", "(2,6)", "(0,2)", "(0,6)"]);
    }

    #[test]
    fn flip_examples() {
        let sq0 = Triangulation::from_pairs(4, &[(0, 2)]).unwrap();
        let sq1 = Triangulation::from_pairs(4, &[(1, 3)]).unwrap();
        assert_eq!(sq0.flip_diagonal(&Diagonal::new(0, 2).unwrap()).unwrap(), sq1);
        assert_eq!(sq1.flip_diagonal(&Diagonal::new(1, 3).unwrap()).unwrap(), sq0);
        assert_eq!(
            sq0.flip_diagonal(&Diagonal::new(1, 3).unwrap()),
            Err(Error::DiagonalNotPresent(1, 3))
        );
    }

    // The two 8-gon pictures accompanying the definition of a flip.
    #[test]
    fn flip_figure_pairs() {
        let left = Triangulation::from_pairs(8, &[(2, 4), (4, 6), (2, 6), (1, 7), (1, 6)]).unwrap();
        let flipped = left.flip_diagonal(&Diagonal::new(1, 6).unwrap()).unwrap();
        let expected = Triangulation::from_pairs(8, &[(2, 4), (4, 6), (2, 6), (1, 7), (2, 7)]).unwrap();
        assert_eq!(flipped, expected);

        let right = Triangulation::from_pairs(8, &[(2, 4), (4, 6), (2, 6), (0, 6), (0, 2)]).unwrap();
        let flipped = right.flip_diagonal(&Diagonal::new(0, 2).unwrap()).unwrap();
        let expected = Triangulation::from_pairs(8, &[(2, 4), (4, 6), (2, 6), (0, 6), (1, 6)]).unwrap();
        assert_eq!(flipped, expected);
        assert_eq!(flipped.lambda_map().unwrap(), "[4,2,2,1]".parse().unwrap());
        assert_eq!(right.lambda_map().unwrap().flip_row(4), "[4,2,2,1]".parse().unwrap());
    }

    #[test]
    fn text_round_trip() {
        let t = example();
        assert_eq!(t.to_string(), "8; (4,6),(2,4),(2,6),(0,2),(0,6)");
        let parsed: Triangulation = "8; (0,6),(2,6),(0,2),(6,4),(2,4)".parse().unwrap();
        assert_eq!(parsed, t);
        assert_eq!("3;".parse::<Triangulation>().unwrap().to_string(), "3;");
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (3..=10).map(|n| Triangulation::enumerate(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
        assert!(Triangulation::enumerate(13).is_err());
        assert!(Triangulation::enumerate(7).unwrap().iter().all(Triangulation::validate));
    }
}
