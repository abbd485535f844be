//! Sparse Laurent polynomials with integer coefficients in the cluster
//! variables `x1, x2, ...` and the coefficient variables `c1, c2, ...`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A variable. Indices are 1-based. Cluster variables sort before
/// coefficient variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(u32),
    C(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::C(j) => write!(f, "c{j}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad variable {s:?}"));
        let (tag, rest) = s.split_at(s.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(s.len()));
        let idx: u32 = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match tag {
            "x" => Ok(Var::X(idx)),
            "c" => Ok(Var::C(idx)),
            _ => Err(bad()),
        }
    }
}

/// A Laurent monomial: variables with nonzero exponents, sorted by variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the first variable where the two differ (`x1 > x2 > ... > c1 > ...`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Monomial {
        let mut acc: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    fn combine(&self, other: &Monomial, sign: i32) -> Monomial {
        Monomial::from_pairs(
            self.0
                .iter()
                .copied()
                .chain(other.0.iter().map(|&(v, e)| (v, sign * e))),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    /// Componentwise minimum of exponents (zero counts).
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut vars: Vec<Var> = self.0.iter().chain(&other.0).map(|&(v, _)| v).collect();
        vars.sort();
        vars.dedup();
        Monomial::from_pairs(
            vars.into_iter()
                .map(|v| (v, self.exponent(v).min(other.exponent(v)))),
        )
    }

    /// True iff every exponent of `self` is at most the matching one of `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        let mut vars: Vec<Var> = self.0.iter().chain(&other.0).map(|&(v, _)| v).collect();
        vars.dedup();
        vars.into_iter().all(|v| self.exponent(v) <= other.exponent(v))
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, f))) => return 0.cmp(&f),
                (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                    Ordering::Less => return e.cmp(&0),
                    Ordering::Greater => return 0.cmp(&f),
                    Ordering::Equal => {
                        if e != f {
                            return e.cmp(&f);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An integer Laurent polynomial in canonical form: no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(k: T) -> LaurentPoly {
        LaurentPoly::term(k, Monomial::one())
    }

    pub fn term<T: Into<BigInt>>(k: T, m: Monomial) -> LaurentPoly {
        let k = k.into();
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(m, k);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> LaurentPoly {
        LaurentPoly::term(1, m)
    }

    pub fn var(v: Var) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::var(v))
    }

    pub fn x(i: u32) -> LaurentPoly {
        LaurentPoly::var(Var::X(i))
    }

    pub fn c(j: u32) -> LaurentPoly {
        LaurentPoly::var(Var::C(j))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single monomial if `self` is `1 * m`.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, k)) if self.terms.len() == 1 && k.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn min_exponent(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exponent(v)).min().unwrap_or(0)
    }

    pub fn max_exponent(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Componentwise minimum over the support.
    fn lowest_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = it.next().cloned().unwrap_or_default();
        it.fold(first, |acc, m| acc.meet(m))
    }

    /// The monomial `D` with `self * D` a polynomial not divisible by any
    /// variable.
    pub fn denominator(&self) -> Monomial {
        self.lowest_monomial().inverse()
    }

    /// True iff every coefficient is a positive integer.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&(_, e)| e >= 0))
    }

    fn insert(&mut self, m: Monomial, k: BigInt) {
        if k.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *entry += k;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(n, k)| (n.mul(m), k.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        (0..e).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / b`, or `NotDivisible` if it is not Laurent.
    pub fn div_exact(&self, b: &LaurentPoly) -> Result<LaurentPoly> {
        if b.is_zero() {
            return Err(Error::ZeroDivision("divisor".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Strip extremal monomials; both sides become polynomials coprime to
        // every variable, and then any Laurent quotient is a polynomial.
        let ma = self.lowest_monomial();
        let mb = b.lowest_monomial();
        let a = self.mul_monomial(&ma.inverse());
        let bb = b.mul_monomial(&mb.inverse());
        let (lm, lc) = bb.terms.iter().next_back().map(|(m, k)| (m.clone(), k.clone())).unwrap();
        let mut rest = a;
        let mut q = LaurentPoly::zero();
        while let Some((m, k)) = rest.terms.iter().next_back().map(|(m, k)| (m.clone(), k.clone())) {
            if !lm.divides(&m) || !(&k % &lc).is_zero() {
                return Err(Error::NotDivisible);
            }
            let t = LaurentPoly::term(&k / &lc, m.div(&lm));
            rest = &rest - &(&t * &bb);
            q = &q + &t;
        }
        Ok(q.mul_monomial(&ma.div(&mb)))
    }

    /// Exact value under `assignment`.
    pub fn eval(&self, assignment: &BTreeMap<Var, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, k) in &self.terms {
            let mut t = BigRational::from_integer(k.clone());
            for &(v, e) in &m.0 {
                let val = assignment
                    .get(&v)
                    .ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                if e < 0 && val.is_zero() {
                    return Err(Error::ZeroDivision(v.to_string()));
                }
                t *= num_traits::pow::Pow::pow(val, e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Replace each variable by the given polynomial; unmapped variables are
    /// kept. Negative powers require the image to be a monomial.
    pub fn substitute(&self, map: &BTreeMap<Var, LaurentPoly>) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, k) in &self.terms {
            let mut t = LaurentPoly::constant(k.clone());
            for &(v, e) in &m.0 {
                let factor = match map.get(&v) {
                    None => LaurentPoly::monomial(Monomial(vec![(v, e)])),
                    Some(img) if e >= 0 => img.pow(e as u32),
                    Some(img) => {
                        let mono = img.as_monomial().ok_or(Error::NotDivisible)?;
                        LaurentPoly::monomial(Monomial(
                            mono.0.iter().map(|&(w, f)| (w, f * e)).collect(),
                        ))
                    }
                };
                t = &t * &factor;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Set every coefficient variable `c_j` to 1.
    pub fn specialize_coefficients(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, k) in &self.terms {
            let kept = Monomial(m.0.iter().copied().filter(|(v, _)| matches!(v, Var::X(_))).collect());
            out.insert(kept, k.clone());
        }
        out
    }

    /// Terms in display order: ascending degree, then `x1` before `x2`.
    fn display_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| b.lex_cmp(a)));
        ts
    }

    /// `N/D` with `D` the denominator monomial, e.g. `(1 + x2)/x1`.
    pub fn to_fraction_string(&self) -> String {
        let d = Monomial::from_pairs(self.denominator().0.into_iter().filter(|&(_, e)| e > 0));
        if d.is_one() {
            return self.to_string();
        }
        let num = self.mul_monomial(&d);
        let num_s = if num.len() > 1 { format!("({num})") } else { num.to_string() };
        let den_s = if d.0.len() > 1 || d.0[0].1 != 1 { format!("({d})") } else { d.to_string() };
        format!("{num_s}/{den_s}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, k)) in self.display_terms().into_iter().enumerate() {
            let neg = k.is_negative();
            let mag = k.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, k) in &rhs.terms {
            out.insert(m.clone(), k.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), -k)).collect(),
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, k) in &self.terms {
            for (n, l) in &rhs.terms {
                out.insert(m.mul(n), k * l);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts `1 + x1 - 3*x2^-1*c1`, with `·` as an alternative product
    /// sign, and a single quotient `(P)/(Q)` whose value must be Laurent.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(pos) = top_level_slash(s) {
            let num: LaurentPoly = strip_parens(&s[..pos]).parse()?;
            let den: LaurentPoly = strip_parens(&s[pos + 1..]).parse()?;
            return num.div_exact(&den);
        }
        let s = strip_parens(s);
        let bad = || Error::Parse(format!("bad Laurent polynomial {s:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        let mut out = LaurentPoly::zero();
        // split into signed terms at + / - not following '^'
        let chars: Vec<char> = s.chars().collect();
        let mut start = 0;
        let mut pieces = Vec::new();
        for i in 0..chars.len() {
            let c = chars[i];
            if (c == '+' || c == '-') && i > 0 {
                let prev = chars[..i].iter().rev().find(|c| !c.is_whitespace());
                if prev.is_some_and(|&p| p != '^' && p != '(') {
                    pieces.push(chars[start..i].iter().collect::<String>());
                    start = i;
                }
            }
        }
        pieces.push(chars[start..].iter().collect::<String>());
        for piece in pieces {
            let piece = piece.trim();
            let (neg, body) = match piece.strip_prefix('-') {
                Some(b) => (true, b.trim()),
                None => (false, piece.strip_prefix('+').unwrap_or(piece).trim()),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coeff = BigInt::one();
            let mut pairs = Vec::new();
            for factor in body.split(['*', '·']) {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(bad());
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    coeff *= factor.parse::<BigInt>().map_err(|_| bad())?;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e = e.trim().trim_start_matches('(').trim_end_matches(')');
                        (n.trim(), e.trim().parse::<i32>().map_err(|_| bad())?)
                    }
                    None => (factor, 1),
                };
                pairs.push((name.parse::<Var>()?, exp));
            }
            if neg {
                coeff = -coeff;
            }
            out.insert(Monomial::from_pairs(pairs), coeff);
        }
        Ok(out)
    }
}

fn top_level_slash(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        // only if the outer pair matches
        let mut depth = 0;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 && i != s.len() - 1 {
                        return s;
                    }
                }
                _ => {}
            }
        }
        return strip_parens(&s[1..s.len() - 1]);
    }
    s
}
