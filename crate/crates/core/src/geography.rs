//! Geography arithmetic: characteristic numbers of 4-manifolds, the Noether
//! line, rational-blowdown plumbing chains with their lens-space boundaries,
//! lens-space classification, and the intersection-form comparison behind
//! Freedman's theorem.
//!
//! Everything here is exact integer arithmetic over the two linear
//! identities
//!
//! ```text
//! c₁² = 2e + 3·sign        χ = (e + sign)/4
//! ```
//!
//! and their inversion e = 12χ − c₁², sign = c₁² − 8χ.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Parity of an intersection form: even iff every square Q(x,x) is even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// The characteristic numbers (e, sign, c₁², χ, b⁺) of a closed 4-manifold,
/// kept mutually consistent by construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharNumbers {
    e: i64,
    sign: i64,
    c1sq: i64,
    chi: i64,
    b_plus: i64,
    parity: Parity,
    simply_connected: bool,
}

impl CharNumbers {
    pub fn new(
        e: i64,
        sign: i64,
        b_plus: i64,
        parity: Parity,
        simply_connected: bool,
    ) -> Result<Self> {
        if (e + sign).rem_euclid(4) != 0 {
            return Err(Error::InvalidMeta(format!(
                "e + sign = {} is not divisible by 4",
                e + sign
            )));
        }
        let chi = (e + sign) / 4;
        if b_plus < 0 {
            return Err(Error::InvalidMeta(format!("b_plus = {b_plus} is negative")));
        }
        if simply_connected && (b_plus % 2 == 0 || chi != (b_plus + 1) / 2) {
            return Err(Error::InvalidMeta(format!(
                "simply connected: chi = {chi} must equal (b_plus + 1)/2 = {}/2",
                b_plus + 1
            )));
        }
        Ok(CharNumbers {
            e,
            sign,
            c1sq: 2 * e + 3 * sign,
            chi,
            b_plus,
            parity,
            simply_connected,
        })
    }

    /// Inverse construction from (c₁², χ): e = 12χ − c₁², sign = c₁² − 8χ.
    pub fn from_c1sq_chi(
        c1sq: i64,
        chi: i64,
        b_plus: i64,
        parity: Parity,
        simply_connected: bool,
    ) -> Result<Self> {
        CharNumbers::new(
            12 * chi - c1sq,
            c1sq - 8 * chi,
            b_plus,
            parity,
            simply_connected,
        )
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn sign(&self) -> i64 {
        self.sign
    }

    pub fn c1sq(&self) -> i64 {
        self.c1sq
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn b_plus(&self) -> i64 {
        self.b_plus
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn simply_connected(&self) -> bool {
        self.simply_connected
    }
}

/// Genus of the (p,q) torus knot: (p−1)(q−1)/2.
pub fn genus_torus(p: i64, q: i64) -> Result<i64> {
    if p < 2 || q < 2 {
        return Err(Error::Invalid(format!("need p, q >= 2, got ({p},{q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::Invalid(format!("({p},{q}) are not coprime")));
    }
    Ok((p - 1) * (q - 1) / 2)
}

/// The blowup count r(p,q) of the elliptic-fibration construction, known in
/// closed form for two families only:
///
/// ```text
/// r(2, 2n+1) = 4n + 5        r(3, n+1) = 3n + 7
/// ```
///
/// The (2, odd) value is pinned by the self-sum identity: the fiber sum of
/// Z(2,2n+1) with itself is E(n+1), so 10 + 8n − 2·r = c₁²(E(n+1)) = 0
/// forces r = 4n + 5. Everything outside the two families needs the
/// Brieskorn resolution graph; supply r by hand there.
pub fn r_value(p: i64, q: i64) -> Result<i64> {
    let (p, q) = if p <= q { (p, q) } else { (q, p) };
    if p < 2 {
        return Err(Error::Invalid(format!("need p, q >= 2, got ({p},{q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::Invalid(format!("({p},{q}) are not coprime")));
    }
    match p {
        2 => Ok(2 * q + 3),  // q = 2n+1: 4n + 5
        3 => Ok(3 * q + 4),  // q = n+1: 3n + 7
        _ => Err(Error::UnsupportedFamily(format!(
            "r({p},{q}) has no closed form here; supported families are (2, odd) and (3, q); supply r manually"
        ))),
    }
}

/// Characteristic numbers of the genus-g fiber sum built from two
/// Brieskorn pieces with blowup counts r1, r2:
/// c₁² = 10 + 8g − r1 − r2, χ = 1 + g, b⁺ = 2g + 1.
pub fn fiber_sum_geography(g: i64, r1: i64, r2: i64) -> Result<CharNumbers> {
    if g < 1 {
        return Err(Error::Invalid(format!("genus must be >= 1, got {g}")));
    }
    if r1 < 0 || r2 < 0 {
        return Err(Error::Invalid(format!(
            "blowup counts must be >= 0, got ({r1},{r2})"
        )));
    }
    CharNumbers::from_c1sq_chi(10 + 8 * g - r1 - r2, 1 + g, 2 * g + 1, Parity::Odd, true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoetherVerdict {
    Satisfied,
    Violated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NoetherReport {
    pub margin: i64,
    pub verdict: NoetherVerdict,
}

/// Margin against the Noether inequality c₁² ≥ 2χ − 6; negative margin
/// means the manifold cannot be a complex surface of general type.
pub fn noether_check(cn: &CharNumbers) -> NoetherReport {
    let margin = cn.c1sq - (2 * cn.chi - 6);
    NoetherReport {
        margin,
        verdict: if margin < 0 {
            NoetherVerdict::Violated
        } else {
            NoetherVerdict::Satisfied
        },
    }
}

/// A negative-definite linear plumbing of 2-spheres: framings all ≤ −2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlumbingChain {
    framings: Vec<i64>,
}

impl PlumbingChain {
    pub fn new(framings: Vec<i64>) -> Result<Self> {
        if framings.is_empty() {
            return Err(Error::Invalid("plumbing chain cannot be empty".into()));
        }
        if let Some(bad) = framings.iter().find(|&&f| f > -2) {
            return Err(Error::Invalid(format!(
                "plumbing framings must be <= -2, got {bad}"
            )));
        }
        Ok(PlumbingChain { framings })
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn len(&self) -> usize {
        self.framings.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires nonempty
    }
}

/// The rational-blowdown configuration C_n: framings −(n+1), −2, …, −2
/// ((n−3) twos, total length n−2), bounding L((n−1)², n−2).
pub fn blowdown_chain(n: i64) -> Result<PlumbingChain> {
    if n < 4 {
        return Err(Error::Invalid(format!(
            "blowdown chain needs n >= 4, got {n}"
        )));
    }
    let mut framings = vec![-(n + 1)];
    framings.extend(std::iter::repeat(-2).take((n - 3) as usize));
    PlumbingChain::new(framings)
}

/// Lens space L(p,q), stored with q reduced mod p; gcd(p,q) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LensSpace {
    p: i64,
    q: i64,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::Invalid(format!("lens space needs p >= 1, got {p}")));
        }
        let q = q.rem_euclid(p);
        if p.gcd(&q) != 1 {
            return Err(Error::Invalid(format!(
                "gcd({p},{q}) != 1: not a lens space"
            )));
        }
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

impl std::fmt::Display for LensSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// Boundary lens space of a negative-definite chain: p/q is the negative
/// continued fraction [a₁,…,a_k]⁻ = a₁ − 1/(a₂ − 1/(…)) of the absolute
/// framing values. With every aᵢ ≥ 2 the fraction never degenerates and
/// p > q ≥ 1 with gcd 1.
pub fn chain_boundary(ch: &PlumbingChain) -> Result<LensSpace> {
    let mut num: i128 = 1;
    let mut den: i128 = 0;
    for &f in ch.framings().iter().rev() {
        let a = (-f) as i128;
        let next = a
            .checked_mul(num)
            .and_then(|x| x.checked_sub(den))
            .ok_or_else(|| Error::Invalid("continued fraction overflow".into()))?;
        den = num;
        num = next;
    }
    let p = i64::try_from(num)
        .map_err(|_| Error::Invalid("lens space parameters exceed i64".into()))?;
    let q = i64::try_from(den)
        .map_err(|_| Error::Invalid("lens space parameters exceed i64".into()))?;
    LensSpace::new(p, q)
}

fn mod_inverse(q: i64, p: i64) -> i64 {
    // extended Euclid; gcd(q, p) = 1 guaranteed by LensSpace construction
    let (mut r0, mut r1) = (p, q.rem_euclid(p));
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (s0, s1) = (s1, s0 - k * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p)
}

/// Lens-space classification: L(p,q) ≅ L(p,q′) iff q′ ≡ q^{±1} mod p
/// preserving orientation, and q′ ≡ ±q^{±1} mod p allowing reversal.
pub fn lens_equiv(a: &LensSpace, b: &LensSpace, orientation_sensitive: bool) -> bool {
    if a.p != b.p {
        return false;
    }
    let p = a.p;
    if p == 1 {
        return true;
    }
    let qinv = mod_inverse(a.q, p);
    let mut reps = vec![a.q, qinv];
    if !orientation_sensitive {
        reps.push((-a.q).rem_euclid(p));
        reps.push((-qinv).rem_euclid(p));
    }
    reps.contains(&b.q)
}

/// The (rank, signature, parity) triple classifying a unimodular form of a
/// simply connected closed 4-manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormDescriptor {
    rank: i64,
    signature: i64,
    parity: Parity,
}

impl FormDescriptor {
    pub fn new(rank: i64, signature: i64, parity: Parity) -> Result<Self> {
        if rank < 0 {
            return Err(Error::Invalid(format!("rank must be >= 0, got {rank}")));
        }
        if signature.abs() > rank {
            return Err(Error::Invalid(format!(
                "|signature| = {} exceeds rank {rank}",
                signature.abs()
            )));
        }
        if (signature - rank) % 2 != 0 {
            return Err(Error::Invalid(format!(
                "signature {signature} and rank {rank} have different parities"
            )));
        }
        if parity == Parity::Even && signature.abs() == rank && signature % 8 != 0 {
            return Err(Error::Invalid(format!(
                "even definite form needs signature divisible by 8, got {signature}"
            )));
        }
        Ok(FormDescriptor {
            rank,
            signature,
            parity,
        })
    }

    /// Descriptor of a simply connected manifold's form: rank b₂ = e − 2.
    pub fn from_char_numbers(cn: &CharNumbers) -> Result<Self> {
        if !cn.simply_connected() {
            return Err(Error::Invalid(
                "intersection-form descriptor needs a simply connected manifold".into(),
            ));
        }
        FormDescriptor::new(cn.e() - 2, cn.sign(), cn.parity())
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn signature(&self) -> i64 {
        self.signature
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    fn is_definite(&self) -> bool {
        self.rank > 0 && self.signature.abs() == self.rank
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomeoVerdict {
    Homeomorphic,
    Distinct,
    Indeterminate,
}

/// Freedman comparison of simply connected closed smooth 4-manifolds by
/// their forms. Indefinite forms are classified by (rank, signature,
/// parity); definite smooth forms are diagonal by Donaldson, so odd
/// definite descriptors also compare by the triple, while an even definite
/// descriptor of positive rank describes no smooth manifold at all and the
/// comparison is declared indeterminate. Rank 0 is the empty form, one
/// homeomorphism type.
pub fn homeo_test(a: &FormDescriptor, b: &FormDescriptor) -> HomeoVerdict {
    if (a.is_definite() && a.parity == Parity::Even)
        || (b.is_definite() && b.parity == Parity::Even)
    {
        return HomeoVerdict::Indeterminate;
    }
    if a.rank == 0 && b.rank == 0 {
        return HomeoVerdict::Homeomorphic;
    }
    if a.rank == b.rank && a.signature == b.signature && a.parity == b.parity {
        HomeoVerdict::Homeomorphic
    } else {
        HomeoVerdict::Distinct
    }
}

/// Characteristic numbers of the elliptic surface E(n): e = 12n,
/// sign = −8n, c₁² = 0, χ = n, b⁺ = 2n − 1, even form iff n is even.
pub fn char_from_en(n: i64) -> Result<CharNumbers> {
    if n < 1 {
        return Err(Error::Invalid(format!("E(n) needs n >= 1, got {n}")));
    }
    CharNumbers::new(
        12 * n,
        -8 * n,
        2 * n - 1,
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        },
        true,
    )
}
