//! Knot and link presentations: braid words, torus-knot parameters, 2-bridge
//! fractions, and explicit skein resolution trees.
//!
//! Text grammar (whitespace between tokens is ignored):
//!
//! ```text
//! presentation := braid | torus | twobridge | skein
//! braid        := "B(" n ":" letter* ")"           B(3: 1 -2 1 -2)
//! torus        := "T(" p "," q ")"                 T(2,3)
//! twobridge    := "K(" alpha "/" beta ")"          K(105/64)
//! skein        := "U"                              unknot leaf
//!               | "S(" m ")"                       split link, m >= 2 components
//!               | "(" ("+"|"-") skein skein ")"    crossing: (sign flip zero)
//!               | braid | torus | twobridge        leaf resolved by another route
//! ```
//!
//! A crossing node `(+ flip zero)` stands for a diagram whose marked crossing
//! is positive, with `flip` the crossing-changed diagram and `zero` the
//! oriented resolution; `(- flip zero)` is the mirror-signed case.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A word in the braid group B_n: letter `i > 0` is the generator σ_i,
/// `i < 0` its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidPresentation(format!(
                "braid needs at least 2 strands, got {strands}"
            )));
        }
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx > strands - 1 {
                return Err(Error::InvalidPresentation(format!(
                    "letter {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The permutation induced on strand positions (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    /// Number of components of the closure = cycle count of the permutation.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = perm[k];
            }
        }
        cycles
    }

    /// Sum of letter signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }
}

/// Parameters of the (p,q) torus knot, stored with p < q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusKnotParams {
    p: i64,
    q: i64,
}

impl TorusKnotParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        if p < 2 {
            return Err(Error::InvalidPresentation(format!(
                "torus parameters must be >= 2, got ({p},{q})"
            )));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidPresentation(format!("gcd({p},{q}) != 1")));
        }
        Ok(TorusKnotParams { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

/// The 2-bridge knot K(α,β): α odd ≥ 3, 0 < β < α, gcd = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoBridgeParams {
    alpha: i64,
    beta: i64,
}

impl TwoBridgeParams {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if alpha < 3 || alpha % 2 == 0 {
            return Err(Error::InvalidPresentation(format!(
                "alpha must be odd and >= 3, got {alpha}"
            )));
        }
        if beta <= 0 || beta >= alpha {
            return Err(Error::InvalidPresentation(format!(
                "beta must satisfy 0 < beta < alpha, got {beta}/{alpha}"
            )));
        }
        if alpha.gcd(&beta) != 1 {
            return Err(Error::InvalidPresentation(format!(
                "gcd({alpha},{beta}) != 1"
            )));
        }
        Ok(TwoBridgeParams { alpha, beta })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingSign {
    Positive,
    Negative,
}

/// A resolution tree: crossings are resolved top-down until every leaf is an
/// unknot, a split link, or a presentation computable by another route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkeinTree {
    Unknot,
    /// A split link with the given number (≥ 2) of components.
    SplitLink(u32),
    Crossing {
        sign: CrossingSign,
        flip: Box<SkeinTree>,
        zero: Box<SkeinTree>,
    },
    Leaf(Box<KnotPresentation>),
}

/// One of the four presentation carriers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotPresentation {
    Braid(BraidWord),
    Torus(TorusKnotParams),
    TwoBridge(TwoBridgeParams),
    Skein(SkeinTree),
}

impl fmt::Display for KnotPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotPresentation::Braid(b) => {
                if b.letters().is_empty() {
                    write!(f, "B({}:)", b.strands())
                } else {
                    let ls: Vec<String> = b.letters().iter().map(|l| l.to_string()).collect();
                    write!(f, "B({}: {})", b.strands(), ls.join(" "))
                }
            }
            KnotPresentation::Torus(t) => write!(f, "T({},{})", t.p(), t.q()),
            KnotPresentation::TwoBridge(tb) => write!(f, "K({}/{})", tb.alpha(), tb.beta()),
            KnotPresentation::Skein(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Display for SkeinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkeinTree::Unknot => write!(f, "U"),
            SkeinTree::SplitLink(m) => write!(f, "S({m})"),
            SkeinTree::Crossing { sign, flip, zero } => {
                let s = match sign {
                    CrossingSign::Positive => '+',
                    CrossingSign::Negative => '-',
                };
                write!(f, "({s} {flip} {zero})")
            }
            SkeinTree::Leaf(p) => write!(f, "{p}"),
        }
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == b => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected `{}`", b as char))),
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos.min(self.bytes.len()),
            msg: msg.into(),
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let v: i64 = s.parse().map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn parse_braid(cur: &mut Cursor) -> Result<BraidWord> {
    cur.expect(b'B')?;
    cur.expect(b'(')?;
    let n = cur.int()?;
    cur.expect(b':')?;
    let mut letters = Vec::new();
    while cur.peek() != Some(b')') {
        if cur.at_end() {
            return Err(cur.error("unterminated braid word"));
        }
        let l = cur.int()?;
        let l32 = i32::try_from(l).map_err(|_| cur.error("letter out of range"))?;
        letters.push(l32);
    }
    cur.expect(b')')?;
    if !(2..=1024).contains(&n) {
        return Err(Error::InvalidPresentation(format!(
            "strand count {n} out of range"
        )));
    }
    BraidWord::new(n as usize, letters)
}

fn parse_torus(cur: &mut Cursor) -> Result<TorusKnotParams> {
    cur.expect(b'T')?;
    cur.expect(b'(')?;
    let p = cur.int()?;
    cur.expect(b',')?;
    let q = cur.int()?;
    cur.expect(b')')?;
    TorusKnotParams::new(p, q)
}

fn parse_two_bridge(cur: &mut Cursor) -> Result<TwoBridgeParams> {
    cur.expect(b'K')?;
    cur.expect(b'(')?;
    let alpha = cur.int()?;
    cur.expect(b'/')?;
    let beta = cur.int()?;
    cur.expect(b')')?;
    TwoBridgeParams::new(alpha, beta)
}

fn parse_skein(cur: &mut Cursor, depth: usize) -> Result<SkeinTree> {
    if depth > 128 {
        return Err(cur.error("skein tree too deep"));
    }
    match cur.peek() {
        Some(b'U') => {
            cur.pos += 1;
            Ok(SkeinTree::Unknot)
        }
        Some(b'S') => {
            cur.pos += 1;
            cur.expect(b'(')?;
            let m = cur.int()?;
            cur.expect(b')')?;
            if m < 2 {
                return Err(Error::InvalidPresentation(format!(
                    "split link needs >= 2 components, got {m}"
                )));
            }
            let m = u32::try_from(m).map_err(|_| {
                Error::InvalidPresentation(format!("component count {m} too large"))
            })?;
            Ok(SkeinTree::SplitLink(m))
        }
        Some(b'(') => {
            cur.expect(b'(')?;
            let sign = match cur.peek() {
                Some(b'+') => CrossingSign::Positive,
                Some(b'-') => CrossingSign::Negative,
                _ => return Err(cur.error("expected `+` or `-`")),
            };
            cur.pos += 1;
            let flip = parse_skein(cur, depth + 1)?;
            let zero = parse_skein(cur, depth + 1)?;
            cur.expect(b')')?;
            Ok(SkeinTree::Crossing {
                sign,
                flip: Box::new(flip),
                zero: Box::new(zero),
            })
        }
        Some(b'B') => Ok(SkeinTree::Leaf(Box::new(KnotPresentation::Braid(
            parse_braid(cur)?,
        )))),
        Some(b'T') => Ok(SkeinTree::Leaf(Box::new(KnotPresentation::Torus(
            parse_torus(cur)?,
        )))),
        Some(b'K') => Ok(SkeinTree::Leaf(Box::new(KnotPresentation::TwoBridge(
            parse_two_bridge(cur)?,
        )))),
        _ => Err(cur.error("expected a skein node")),
    }
}

/// Parse any of the four presentation grammars, consuming the whole input.
pub fn parse_presentation(text: &str) -> Result<KnotPresentation> {
    let mut cur = Cursor::new(text);
    let p = match cur.peek() {
        Some(b'B') => KnotPresentation::Braid(parse_braid(&mut cur)?),
        Some(b'T') => KnotPresentation::Torus(parse_torus(&mut cur)?),
        Some(b'K') => KnotPresentation::TwoBridge(parse_two_bridge(&mut cur)?),
        Some(b'U') | Some(b'S') | Some(b'(') => KnotPresentation::Skein(parse_skein(&mut cur, 0)?),
        _ => return Err(cur.error("expected a presentation")),
    };
    if !cur.at_end() {
        return Err(cur.error("trailing input after presentation"));
    }
    Ok(p)
}

impl std::str::FromStr for KnotPresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_presentation(s)
    }
}

/// All-positive continued fraction of α/β:
/// `α/β = a₁ + 1/(a₂ + 1/(⋯ + 1/a_k))`, every `aᵢ ≥ 1` and `a_k ≥ 2`.
/// The expansion is recomputed into a fraction before returning; failure to
/// reconstruct α/β exactly is an internal bug.
pub fn two_bridge_continued_fraction(tb: &TwoBridgeParams) -> Result<Vec<i64>> {
    let mut terms = Vec::new();
    let (mut a, mut b) = (tb.alpha(), tb.beta());
    while b > 0 {
        terms.push(a / b);
        let r = a % b;
        a = b;
        b = r;
    }
    // mandatory postcondition: fold the expansion back into a fraction
    let (mut num, mut den) = (1i128, 0i128);
    for &t in terms.iter().rev() {
        let next_num = t as i128 * num + den;
        den = num;
        num = next_num;
    }
    if num != tb.alpha() as i128 || den != tb.beta() as i128 {
        return Err(Error::Internal(format!(
            "continued fraction [{}] does not reconstruct {}/{}",
            terms
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(","),
            tb.alpha(),
            tb.beta()
        )));
    }
    Ok(terms)
}
