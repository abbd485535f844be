//! Young diagrams stored as partitions, the row-flip operation and the
//! dihedral action on diagrams that fit under the line `y = x - n`.
//!
//! Rows are indexed from 1. A partition is implicitly followed by
//! infinitely many rows of length zero, so `row(k)` is total.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive row lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing rows. Trailing zero rows
    /// are dropped.
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(rows));
        }
        let mut rows = rows;
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Partition { rows })
    }

    /// Builds a partition from row lengths in any order.
    pub fn from_unsorted(mut rows: Vec<usize>) -> Self {
        rows.retain(|&r| r > 0);
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition { rows }
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// Non-zero rows, longest first.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row `k` (1-based); zero past the stored rows.
    pub fn row(&self, k: usize) -> usize {
        assert!(k >= 1, "rows are indexed from 1");
        self.rows.get(k - 1).copied().unwrap_or(0)
    }

    /// Number of non-zero rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// True iff the diagram lies in the triangle cut out by the axes and the
    /// line `y = x - n`, i.e. `p_i + i <= n` for every non-zero row.
    pub fn fits_in(&self, n: usize) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| r + i < n)
    }

    fn require_fit(&self, n: usize) -> Result<()> {
        if self.fits_in(n) {
            Ok(())
        } else {
            Err(Error::DoesNotFit {
                partition: self.to_string(),
                n,
            })
        }
    }

    /// Length of the row inserted by a flip in row `k`.
    ///
    /// When row `k+1` is as long as row `k` (this covers every zero row) the
    /// new length is `k + mu_k - max T` with `T = {m < k : m + mu_m >= k + mu_k}`,
    /// or `k + mu_k` when `T` is empty. When row `k+1` is strictly shorter it is
    /// `k + mu_k - min T` with `T = {m > k : m + mu_m >= k + mu_k}`, or 0 when
    /// `T` is empty.
    pub fn flip_row_length(&self, k: usize) -> usize {
        assert!(k >= 1, "rows are indexed from 1");
        let mu_k = self.row(k);
        let level = k + mu_k;
        if self.row(k + 1) == mu_k {
            (1..k)
                .rev()
                .find(|&m| m + self.row(m) >= level)
                .map_or(level, |m| level - m)
        } else {
            // Any m >= level qualifies, so the scan stops by m = level.
            ((k + 1)..=level)
                .find(|&m| m + self.row(m) >= level)
                .map_or(0, |m| level - m)
        }
    }

    /// Removes row `k` and inserts a row of the length given by
    /// [`Partition::flip_row_length`] where it keeps the rows decreasing.
    pub fn flip_row(&self, k: usize) -> Partition {
        let l = self.flip_row_length(k);
        let mut rows = self.rows.clone();
        if k <= rows.len() {
            rows.remove(k - 1);
        }
        rows.push(l);
        Partition::from_unsorted(rows)
    }

    /// All diagrams reachable by one flip in rows `1..n`.
    pub fn flip_neighbors(&self, n: usize) -> Result<BTreeSet<Partition>> {
        self.require_fit(n)?;
        Ok((1..n).map(|k| self.flip_row(k)).collect())
    }

    /// Heads `l_1..l_{n-1}` of the numbered diagonals of the triangulation
    /// corresponding to this diagram:
    /// `l_k = 1 + k + d_k - max({m < k : m + d_m > k + d_k} ∪ {0})`.
    pub fn heads(&self, n: usize) -> Result<Vec<usize>> {
        self.require_fit(n)?;
        Ok((1..n)
            .map(|k| {
                let level = k + self.row(k);
                let m = (1..k)
                    .rev()
                    .find(|&m| m + self.row(m) > level)
                    .unwrap_or(0);
                1 + level - m
            })
            .collect())
    }

    /// Conjugate partition.
    pub fn transpose(&self) -> Partition {
        let width = self.rows.first().copied().unwrap_or(0);
        let cols = (1..=width)
            .map(|c| self.rows.iter().take_while(|&&r| r >= c).count())
            .collect();
        Partition { rows: cols }
    }

    /// Reflection over the perpendicular bisector of the side `(0, n+1)`:
    /// the rows are `n + 1 - l_k` for the heads `l_k`, sorted.
    pub fn act_alpha(&self, n: usize) -> Result<Partition> {
        let heads = self.heads(n)?;
        Ok(Partition::from_unsorted(
            heads.into_iter().map(|l| n + 1 - l).collect(),
        ))
    }

    /// Rotation by one step counter-clockwise: every row `i < n` grows by one
    /// box unless it touches the line, in which case it becomes empty.
    pub fn act_beta(&self, n: usize) -> Result<Partition> {
        self.require_fit(n)?;
        Ok(Partition::from_unsorted(
            (1..n)
                .map(|i| {
                    let a = self.row(i);
                    if a + i < n {
                        a + 1
                    } else {
                        0
                    }
                })
                .collect(),
        ))
    }

    /// Applies a dihedral group element.
    pub fn act(&self, g: &DihedralElement, n: usize) -> Result<Partition> {
        if g.order != n + 2 {
            return Err(Error::Parse(format!(
                "element of D_{} applied to diagrams of Y_{n}",
                g.order
            )));
        }
        self.require_fit(n)?;
        let mut p = self.clone();
        for _ in 0..g.rotations {
            p = p.act_beta(n)?;
        }
        if g.reflect {
            p = p.act_alpha(n)?;
        }
        Ok(p)
    }

    /// Every diagram of `Y_n`, in increasing order.
    pub fn all_fitting(n: usize) -> Vec<Partition> {
        fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Partition>) {
            out.push(Partition {
                rows: prefix.clone(),
            });
            let i = prefix.len() + 1;
            let cap = prefix.last().copied().unwrap_or(usize::MAX);
            let bound = n.saturating_sub(i).min(cap);
            for r in 1..=bound {
                prefix.push(r);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::new(), n, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [a,b,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let rows = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row length {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

/// An element `alpha^reflect * beta^rotations` of the dihedral group of the
/// `order`-gon. Acting on a diagram, the rotation is applied first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralElement {
    pub order: usize,
    pub reflect: bool,
    pub rotations: usize,
}

impl DihedralElement {
    pub fn identity(order: usize) -> Self {
        DihedralElement {
            order,
            reflect: false,
            rotations: 0,
        }
    }

    pub fn alpha(order: usize) -> Self {
        DihedralElement {
            order,
            reflect: true,
            rotations: 0,
        }
    }

    pub fn beta(order: usize) -> Self {
        DihedralElement {
            order,
            reflect: false,
            rotations: 1 % order,
        }
    }

    pub fn new(order: usize, reflect: bool, rotations: i64) -> Self {
        DihedralElement {
            order,
            reflect,
            rotations: rotations.rem_euclid(order as i64) as usize,
        }
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &DihedralElement) -> DihedralElement {
        assert_eq!(self.order, other.order, "mismatched dihedral groups");
        let r = self.rotations as i64;
        let s = other.rotations as i64;
        // beta^r alpha = alpha beta^-r
        if other.reflect {
            DihedralElement::new(self.order, !self.reflect, s - r)
        } else {
            DihedralElement::new(self.order, self.reflect, r + s)
        }
    }

    pub fn inverse(&self) -> DihedralElement {
        if self.reflect {
            *self
        } else {
            DihedralElement::new(self.order, false, -(self.rotations as i64))
        }
    }

    pub fn pow(&self, e: usize) -> DihedralElement {
        (0..e).fold(DihedralElement::identity(self.order), |acc, _| {
            acc.compose(self)
        })
    }

    /// Parses a word in the generators `a` (reflection) and `b` (rotation),
    /// e.g. `"a b^3 a"` or `"e"`; letters compose left to right as written,
    /// so the rightmost letter acts first.
    pub fn parse_word(word: &str, order: usize) -> Result<DihedralElement> {
        let mut acc = DihedralElement::identity(order);
        let cleaned: String = word.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        let mut chars = cleaned.chars().peekable();
        while let Some(c) = chars.next() {
            let gen = match c {
                'a' => DihedralElement::alpha(order),
                'b' => DihedralElement::beta(order),
                'e' => DihedralElement::identity(order),
                _ => return Err(Error::Parse(format!("unknown generator {c:?} in {word:?}"))),
            };
            let mut exp: i64 = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                if chars.peek() == Some(&'-') {
                    digits.push('-');
                    chars.next();
                }
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                exp = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {word:?}")))?;
            }
            let base = if exp < 0 { gen.inverse() } else { gen };
            acc = acc.compose(&base.pow(exp.unsigned_abs() as usize));
        }
        Ok(acc)
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.reflect, self.rotations) {
            (false, 0) => f.write_str("e"),
            (true, 0) => f.write_str("a"),
            (false, r) => write!(f, "b^{r}"),
            (true, r) => write!(f, "a b^{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn fits_examples() {
        assert!(p(&[4, 2, 2]).fits_in(6));
        assert!(Partition::empty().fits_in(0));
        // 4+1, 2+2 and 2+3 are all at most 5; the first failing n is 4.
        assert!(p(&[4, 2, 2]).fits_in(5));
        assert!(!p(&[4, 2, 2]).fits_in(4));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(p(&[4, 3, 2]).flip_row(2), p(&[4, 2, 2]));
        assert_eq!(p(&[4, 3, 2]).flip_row_length(2), 2);
        assert_eq!(p(&[4, 2, 2]).flip_row(2), p(&[4, 3, 2]));
        assert_eq!(p(&[4, 2, 2]).flip_row_length(2), 3);
        assert_eq!(Partition::empty().flip_row(1), p(&[1]));
    }

    #[test]
    fn neighbors_small() {
        let n3: BTreeSet<_> = [Partition::empty(), p(&[1, 1])].into_iter().collect();
        assert_eq!(p(&[1]).flip_neighbors(3).unwrap(), n3);
        let n2: BTreeSet<_> = [p(&[1])].into_iter().collect();
        assert_eq!(Partition::empty().flip_neighbors(2).unwrap(), n2);
        let big = p(&[4, 2, 2]).flip_neighbors(6).unwrap();
        assert_eq!(big.len(), 5);
        assert!(big.contains(&p(&[4, 3, 2])));
        assert!(p(&[3]).flip_neighbors(3).is_err());
    }

    #[test]
    fn heads_examples() {
        assert_eq!(p(&[4, 2, 2]).heads(6).unwrap(), vec![6, 4, 6, 2, 6]);
        assert_eq!(Partition::empty().heads(2).unwrap(), vec![2]);
        assert_eq!(p(&[1]).heads(2).unwrap(), vec![3]);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[4, 2, 2]).transpose(), p(&[3, 3, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).transpose(), p(&[3]));
    }

    #[test]
    fn dihedral_examples() {
        assert_eq!(p(&[4, 2, 2]).act_alpha(6).unwrap(), p(&[5, 3, 1, 1, 1]));
        assert_eq!(Partition::empty().act_alpha(2).unwrap(), p(&[1]));
        assert_eq!(p(&[4, 2, 2]).act_beta(6).unwrap(), p(&[5, 3, 3, 1, 1]));
        assert_eq!(p(&[1]).act_beta(2).unwrap(), Partition::empty());

        let beta = DihedralElement::beta(8);
        assert_eq!(p(&[4, 2, 2]).act(&beta, 6).unwrap(), p(&[5, 3, 3, 1, 1]));
        let id = DihedralElement::identity(8);
        assert_eq!(p(&[4, 2, 2]).act(&id, 6).unwrap(), p(&[4, 2, 2]));
        let a = DihedralElement::alpha(8);
        let aba = a.compose(&beta).compose(&a);
        assert_eq!(aba, beta.pow(7));
        assert_eq!(
            p(&[4, 2, 2]).act(&aba, 6).unwrap(),
            p(&[4, 2, 2]).act(&beta.pow(7), 6).unwrap()
        );
    }

    #[test]
    fn word_parsing() {
        let g = DihedralElement::parse_word("a b a", 8).unwrap();
        assert_eq!(g, DihedralElement::new(8, false, -1));
        assert_eq!(DihedralElement::parse_word("b^3", 5).unwrap().rotations, 3);
        assert_eq!(DihedralElement::parse_word("b^-1", 5).unwrap().rotations, 4);
        assert!(DihedralElement::parse_word("c", 5).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[4, 2, 2]).to_string(), "[4,2,2]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[4, 2,2]".parse::<Partition>().unwrap(), p(&[4, 2, 2]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("[3,0]".parse::<Partition>().unwrap(), p(&[3]));
        assert!("[2,3]".parse::<Partition>().is_err());
        assert!("4,2".parse::<Partition>().is_err());
    }

    #[test]
    fn young_counts() {
        let counts: Vec<usize> = (0..=9).map(|n| Partition::all_fitting(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }
}
