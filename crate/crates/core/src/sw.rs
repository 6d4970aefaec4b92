//! Seiberg-Witten invariants as Laurent polynomials in formal basis-class
//! variables, and the surgery formulas that transform them.
//!
//! A class β ∈ H₂ is tracked through the exponent of its variable
//! (t_{α+β} = t_α·t_β becomes exponent addition); the invariant of a
//! manifold is the finite sum SW_X = Σ SW_X(β)·t_β. Construction of an
//! [`SWInvariant`] eagerly checks the symmetry law
//! SW(−β) = (−1)^{(e+sign)/4}·SW(β), so every value of the type is a
//! plausible invariant, and every operation re-checks its output.
//!
//! Knot surgery multiplies by Δ_K(t), t = exp(2[T]) — exponents double.
//! The Gromov variant multiplies by A_K(τ), τ = exp([T]) — no doubling.
//! The two must not be conflated; tests pin the distinction.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::alexander::{is_monic, normalized_alexander};
use crate::error::{Error, Result};
use crate::laurent::{HalfInt, LaurentPoly, SubstRule};

/// Topological bookkeeping for the underlying 4-manifold: Euler number,
/// signature, b₂⁺ and the two flags the comparison pipelines need.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MetaWire")]
pub struct ManifoldMeta {
    e: i64,
    sign: i64,
    b_plus: i64,
    spin: bool,
    simply_connected: bool,
}

#[derive(Deserialize)]
struct MetaWire {
    e: i64,
    sign: i64,
    b_plus: i64,
    spin: bool,
    simply_connected: bool,
}

impl TryFrom<MetaWire> for ManifoldMeta {
    type Error = Error;

    fn try_from(w: MetaWire) -> Result<Self> {
        ManifoldMeta::new(w.e, w.sign, w.b_plus, w.spin, w.simply_connected)
    }
}

impl ManifoldMeta {
    /// Validates e + sign ≡ 0 mod 4 (integrality of the symmetry exponent)
    /// and, for simply connected manifolds, the identity
    /// (e + sign)/4 = (b⁺ + 1)/2.
    pub fn new(e: i64, sign: i64, b_plus: i64, spin: bool, simply_connected: bool) -> Result<Self> {
        if (e + sign).rem_euclid(4) != 0 {
            return Err(Error::InvalidMeta(format!(
                "e + sign = {} is not divisible by 4",
                e + sign
            )));
        }
        if b_plus < 0 {
            return Err(Error::InvalidMeta(format!("b_plus = {b_plus} is negative")));
        }
        if simply_connected && (b_plus % 2 == 0 || (e + sign) / 4 != (b_plus + 1) / 2) {
            return Err(Error::InvalidMeta(format!(
                "simply connected manifold needs (e+sign)/4 = (b_plus+1)/2; got {} vs {}/2",
                (e + sign) / 4,
                b_plus + 1
            )));
        }
        Ok(ManifoldMeta {
            e,
            sign,
            b_plus,
            spin,
            simply_connected,
        })
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn sign(&self) -> i64 {
        self.sign
    }

    pub fn b_plus(&self) -> i64 {
        self.b_plus
    }

    pub fn spin(&self) -> bool {
        self.spin
    }

    pub fn simply_connected(&self) -> bool {
        self.simply_connected
    }

    /// The holomorphic Euler characteristic χ = (e + sign)/4.
    pub fn chi(&self) -> i64 {
        (self.e + self.sign) / 4
    }
}

/// A finitely supported SW series together with its manifold metadata.
/// Constructing one checks the symmetry law; the type never holds a
/// violating polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SwWire")]
pub struct SWInvariant {
    meta: ManifoldMeta,
    poly: LaurentPoly,
}

#[derive(Deserialize)]
struct SwWire {
    meta: ManifoldMeta,
    poly: LaurentPoly,
}

impl TryFrom<SwWire> for SWInvariant {
    type Error = Error;

    fn try_from(w: SwWire) -> Result<Self> {
        SWInvariant::new(w.meta, w.poly)
    }
}

/// The charge-conjugation symmetry law as a predicate on raw data: every
/// monomial's negation must carry the coefficient scaled by (−1)^{(e+sign)/4}.
/// Equivalently bar(p) = ±p with the sign decided by the parity of χ.
pub fn symmetry_holds(meta: &ManifoldMeta, poly: &LaurentPoly) -> bool {
    if meta.chi() % 2 == 0 {
        poly.bar() == *poly
    } else {
        poly.bar() == poly.neg()
    }
}

impl SWInvariant {
    pub fn new(meta: ManifoldMeta, poly: LaurentPoly) -> Result<Self> {
        if !symmetry_holds(&meta, &poly) {
            return Err(Error::SymmetryViolation(format!(
                "SW(-b) = (-1)^{}·SW(b) fails for the given polynomial",
                meta.chi()
            )));
        }
        Ok(SWInvariant { meta, poly })
    }

    pub fn meta(&self) -> &ManifoldMeta {
        &self.meta
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }
}

/// True iff the stored polynomial satisfies the symmetry law for the stored
/// metadata. Always true for values built through [`SWInvariant::new`]; the
/// raw-data form [`symmetry_holds`] is the one corrupted inputs can fail.
pub fn check_symmetry(x: &SWInvariant) -> bool {
    symmetry_holds(&x.meta, &x.poly)
}

/// SW of the elliptic surface E(n) = (t_F − t_F⁻¹)^{n−2} in the fiber-class
/// variable `tF`, with e = 12n, sign = −8n, b⁺ = 2n−1, spin iff n is even.
pub fn sw_en(n: i64) -> Result<SWInvariant> {
    if n < 2 {
        return Err(Error::Invalid(format!("E(n) needs n >= 2, got {n}")));
    }
    let meta = ManifoldMeta::new(12 * n, -8 * n, 2 * n - 1, n % 2 == 0, true)?;
    let base = LaurentPoly::univar("tF", &[(2, 1), (-2, -1)])?;
    SWInvariant::new(meta, prune_vars(base.pow((n - 2) as u32)))
}

/// The shape required of every Δ_K fed to a surgery formula: univariate,
/// integer exponents, bar-symmetric, value +1 at t = 1. Returns the name of
/// the effective variable, or `None` for the unknot's constant 1.
fn ensure_knot_alexander(delta: &LaurentPoly) -> Result<Option<String>> {
    if delta.is_zero() {
        return Err(Error::NotSymmetrized("zero polynomial".into()));
    }
    if !delta.has_integer_exponents() {
        return Err(Error::NotSymmetrized(
            "half-integer exponents present".into(),
        ));
    }
    if !delta.is_bar_symmetric() {
        return Err(Error::NotSymmetrized("not bar-symmetric".into()));
    }
    if delta.coeff_sum() != BigInt::one() {
        return Err(Error::NotSymmetrized(format!(
            "value at t = 1 is {}, expected +1",
            delta.coeff_sum()
        )));
    }
    let eff = delta.effective_vars();
    match eff.len() {
        0 => Ok(None),
        1 => Ok(Some(delta.vars().names()[eff[0]].clone())),
        n => Err(Error::NotSymmetrized(format!(
            "knot polynomial must be univariate, found {n} variables"
        ))),
    }
}

/// Re-express over exactly the effective variables, so that results are
/// canonical regardless of which inert variables the inputs declared.
fn prune_vars(p: LaurentPoly) -> LaurentPoly {
    let eff = p.effective_vars();
    if eff.len() == p.vars().len() {
        return p;
    }
    let target = crate::laurent::VarSet::new(eff.iter().map(|&i| p.vars().names()[i].as_str()))
        .expect("subset of a valid variable set");
    p.embed(&target).expect("effective variables are retained")
}

fn mul_across(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    let union = a.vars().union(b.vars());
    Ok(prune_vars(a.embed(&union)?.mul(&b.embed(&union)?)?))
}

fn surgery(
    x: &SWInvariant,
    delta: &LaurentPoly,
    class_var: &str,
    what: &str,
) -> Result<SWInvariant> {
    if x.meta.b_plus <= 1 {
        return Err(Error::InvalidMeta(format!(
            "{what} needs b_plus > 1, got {}",
            x.meta.b_plus
        )));
    }
    let Some(src) = ensure_knot_alexander(delta)? else {
        return Ok(x.clone()); // unknot: SW unchanged
    };
    let scaled = delta.substitute_var(&src, SubstRule::scaled(class_var, HalfInt::from_int(2)))?;
    SWInvariant::new(x.meta.clone(), mul_across(&x.poly, &scaled)?)
}

/// Knot surgery on a c-embedded torus: SW_{X_K} = SW_X · Δ_K(t) with
/// t = exp(2[T]), i.e. Δ's exponents enter doubled in `torus_var`. The
/// homeomorphism type — hence the metadata — is unchanged.
pub fn knot_surgery(x: &SWInvariant, delta: &LaurentPoly, torus_var: &str) -> Result<SWInvariant> {
    surgery(x, delta, torus_var, "knot surgery")
}

/// Rim surgery on an embedded surface: same formula as [`knot_surgery`] in
/// the rim-torus class variable. The ambient topology is untouched; only
/// the embedded surface changes.
pub fn rim_surgery(x: &SWInvariant, delta: &LaurentPoly, rim_var: &str) -> Result<SWInvariant> {
    surgery(x, delta, rim_var, "rim surgery")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceVerdict {
    Distinguished,
    Inconclusive,
}

/// Rim surgery with distinct Δ's forces smoothly inequivalent surface
/// pairs. Equal polynomials decide nothing (the converse is open), so the
/// answer is never "same".
pub fn distinguish_surfaces(d1: &LaurentPoly, d2: &LaurentPoly) -> SurfaceVerdict {
    if d1 == d2 {
        SurfaceVerdict::Inconclusive
    } else {
        SurfaceVerdict::Distinguished
    }
}

/// Gromov-invariant form of knot surgery for fibered K:
/// Gr_{X_K} = Gr_X · A_K(τ), τ = exp([T]) — scale 1, unlike the SW case.
/// Fiberedness is demanded through its monicity consequence.
pub fn gromov_knot_surgery(
    gr: &LaurentPoly,
    delta: &LaurentPoly,
    torus_var: &str,
) -> Result<LaurentPoly> {
    let src = ensure_knot_alexander(delta)?;
    if !is_monic(delta)? {
        return Err(Error::NonMonic(
            "Gromov knot surgery requires a fibered knot".into(),
        ));
    }
    let Some(src) = src else {
        return Ok(gr.clone());
    };
    let a = normalized_alexander(delta)?;
    let renamed = a.substitute_var(&src, SubstRule::rename(torus_var))?;
    mul_across(gr, &renamed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymplecticVerdict {
    Obstructed,
    NoVerdict,
}

/// A non-monic Δ_K bars the surgered manifold X_K from admitting a
/// symplectic structure (Taubes: SW of the canonical class of a symplectic
/// manifold is ±1, so the top SW coefficient would have to be a unit).
/// Monic Δ decides nothing.
pub fn symplectic_obstruction(delta: &LaurentPoly) -> Result<SymplecticVerdict> {
    Ok(if is_monic(delta)? {
        SymplecticVerdict::NoVerdict
    } else {
        SymplecticVerdict::Obstructed
    })
}

/// Wrap a caller-supplied multivariable link polynomial as the SW invariant
/// of the link-surgery manifold. No canonical metadata comes with the
/// construction; it is caller-supplied and the symmetry law is enforced
/// against it.
pub fn link_surgery_sw(delta_l: &LaurentPoly, meta: ManifoldMeta) -> Result<SWInvariant> {
    SWInvariant::new(meta, delta_l.clone())
}

/// SW of the α-fold branched cover manifold:
/// Δ_L(t₁,…,t_α) · ∏ⱼ (tⱼ^{1/2} − tⱼ^{−1/2}). A constant Δ_L is taken over
/// default variables t1…tα; otherwise the declared variable count must be
/// exactly α. Output always vanishes at the all-ones point.
pub fn cover_sw(delta_l: &LaurentPoly, alpha: i64) -> Result<LaurentPoly> {
    if alpha < 1 {
        return Err(Error::Invalid(format!(
            "cover degree must be >= 1, got {alpha}"
        )));
    }
    let names: Vec<String> = if delta_l.vars().is_empty() {
        (1..=alpha).map(|j| format!("t{j}")).collect()
    } else if delta_l.vars().len() == alpha as usize {
        delta_l.vars().names().to_vec()
    } else {
        return Err(Error::VariableCount {
            expected: alpha as usize,
            found: delta_l.vars().len(),
        });
    };
    let mut acc = delta_l.clone();
    for name in &names {
        let factor = LaurentPoly::univar(name, &[(1, 1), (-1, -1)])?;
        acc = mul_across(&acc, &factor)?;
    }
    Ok(acc)
}

/// SW shared by a knot-surgered mirror pair: Δ_K(t)·Δ_K(−t). Needs integer
/// exponents for t ↦ −t to stay in the coefficient ring.
pub fn pair_product_sw(delta: &LaurentPoly) -> Result<LaurentPoly> {
    if !delta.has_integer_exponents() {
        return Err(Error::HalfExponent(
            "pair product needs integer exponents".into(),
        ));
    }
    let eff = delta.effective_vars();
    match eff.len() {
        0 => delta.mul(delta),
        1 => {
            let src = delta.vars().names()[eff[0]].clone();
            let negated = delta.substitute_var(&src, SubstRule::negated(&src))?;
            delta.mul(&negated)
        }
        n => Err(Error::Invalid(format!(
            "pair product needs a univariate polynomial, found {n} variables"
        ))),
    }
}

/// One {β, −β} orbit of nonzero SW values. `e2` is the doubled exponent
/// vector of the representative (the lexicographically larger of the pair);
/// the zero class stands alone with `paired = false`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicClass {
    pub e2: Vec<i64>,
    #[serde(serialize_with = "ser_bigint")]
    pub coefficient: BigInt,
    pub paired: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicClassReport {
    pub vars: Vec<String>,
    pub classes: Vec<BasicClass>,
    pub count_mod_negation: usize,
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_opt_bigint<S: serde::Serializer>(
    x: &Option<BigInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// Group the nonzero monomials of SW_X into {β, −β} orbits — the basic
/// classes counted mod sign. Each orbit is reported once, through its
/// lexicographically larger representative, whose term is guaranteed to be
/// present by the symmetry law.
pub fn basic_classes(x: &SWInvariant) -> BasicClassReport {
    let mut classes = Vec::new();
    for (m, c) in x.poly.terms() {
        if *m >= m.neg() {
            classes.push(BasicClass {
                e2: m.exps2().to_vec(),
                coefficient: c.clone(),
                paired: !m.is_zero(),
            });
        }
    }
    BasicClassReport {
        vars: x.poly.vars().names().to_vec(),
        count_mod_negation: classes.len(),
        classes,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZkVerdict {
    Nonsymplectic,
    NoConclusion,
}

/// Degree-vs-genus conclusions for the manifold Z_K built from a genus-g
/// knot K.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZkReport {
    pub maximal_degree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basic_class_count: Option<u32>,
    #[serde(
        serialize_with = "ser_opt_bigint",
        skip_serializing_if = "Option::is_none"
    )]
    pub top_magnitude: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symplectic_verdict: Option<ZkVerdict>,
}

/// When deg Δ_K equals the genus g, Z_K has exactly one basic class with
/// |SW| = |a_d|, and |a_d| > 1 makes Z_K nonsymplectic. Degrees beyond g
/// contradict the Seifert bound and are rejected as input errors; below g
/// the analysis is silent.
pub fn z_k_analysis(delta: &LaurentPoly, g: i64) -> Result<ZkReport> {
    if g < 1 {
        return Err(Error::Invalid(format!("genus must be >= 1, got {g}")));
    }
    let src = ensure_knot_alexander(delta)?;
    let (degree, top) = match src {
        None => (0, delta.constant_value()),
        Some(name) => (
            delta
                .degree(&name)?
                .as_integer()
                .expect("integer exponents checked"),
            delta.top_coefficient(&name)?,
        ),
    };
    if degree > g {
        return Err(Error::DegreeExceedsGenus {
            degree: degree.to_string(),
            genus: g,
        });
    }
    if degree < g {
        return Ok(ZkReport {
            maximal_degree: false,
            basic_class_count: None,
            top_magnitude: None,
            symplectic_verdict: None,
        });
    }
    let mag = top.abs();
    let verdict = if mag > BigInt::one() {
        ZkVerdict::Nonsymplectic
    } else {
        ZkVerdict::NoConclusion
    };
    Ok(ZkReport {
        maximal_degree: true,
        basic_class_count: Some(1),
        top_magnitude: Some(mag),
        symplectic_verdict: Some(verdict),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::VarSet;
    use num_rational::BigRational;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn tpoly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::univar("t", terms).unwrap()
    }

    fn trefoil() -> LaurentPoly {
        tpoly(&[(2, 1), (0, -1), (-2, 1)])
    }

    fn fig8() -> LaurentPoly {
        tpoly(&[(2, -1), (0, 3), (-2, -1)])
    }

    fn big_delta() -> LaurentPoly {
        tpoly(&[
            (-8, 1),
            (-6, -5),
            (-4, 13),
            (-2, -21),
            (0, 25),
            (2, -21),
            (4, 13),
            (6, -5),
            (8, 1),
        ])
    }

    fn binom(n: i64, k: i64) -> BigInt {
        if k < 0 || k > n {
            return BigInt::zero();
        }
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        acc
    }

    #[test]
    fn meta_validation() {
        assert!(ManifoldMeta::new(24, -16, 3, true, true).is_ok());
        // e + sign not divisible by 4
        assert!(matches!(
            ManifoldMeta::new(3, 0, 3, false, false),
            Err(Error::InvalidMeta(_))
        ));
        // simply connected chi identity broken
        assert!(matches!(
            ManifoldMeta::new(24, -16, 5, true, true),
            Err(Error::InvalidMeta(_))
        ));
        // same numbers fine without the simply-connected claim
        assert!(ManifoldMeta::new(24, -16, 5, true, false).is_ok());
        assert!(ManifoldMeta::new(0, 0, -1, false, false).is_err());
    }

    #[test]
    fn meta_serialization_field_order() {
        let m = ManifoldMeta::new(24, -16, 3, true, true).unwrap();
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"e":24,"sign":-16,"b_plus":3,"spin":true,"simply_connected":true}"#
        );
        let back: ManifoldMeta = serde_json::from_str(
            r#"{"e":24,"sign":-16,"b_plus":3,"spin":true,"simply_connected":true}"#,
        )
        .unwrap();
        assert_eq!(back, m);
        // deserialization re-validates
        let bad: std::result::Result<ManifoldMeta, _> = serde_json::from_str(
            r#"{"e":25,"sign":-16,"b_plus":3,"spin":true,"simply_connected":true}"#,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn sw_en_small_cases() {
        let k3 = sw_en(2).unwrap();
        assert!(k3.poly().is_one());
        assert_eq!(k3.meta().e(), 24);
        assert_eq!(k3.meta().sign(), -16);
        assert_eq!(k3.meta().b_plus(), 3);
        assert!(k3.meta().spin());
        assert!(k3.meta().simply_connected());
        assert_eq!(k3.meta().chi(), 2);

        let e3 = sw_en(3).unwrap();
        assert_eq!(
            *e3.poly(),
            LaurentPoly::univar("tF", &[(2, 1), (-2, -1)]).unwrap()
        );
        assert!(!e3.meta().spin());

        let e4 = sw_en(4).unwrap();
        assert_eq!(
            *e4.poly(),
            LaurentPoly::univar("tF", &[(4, 1), (0, -2), (-4, 1)]).unwrap()
        );

        assert!(sw_en(1).is_err());
        assert!(sw_en(0).is_err());
    }

    #[test]
    fn sw_en_binomial_coefficients() {
        // coefficient of t^{n-2m} is (-1)^{m-1} C(n-2, m-1), m = 1..n-1
        for n in 2..=8i64 {
            let x = sw_en(n).unwrap();
            let by_exp: BTreeMap<i64, BigInt> = x
                .poly()
                .terms()
                .map(|(m, c)| (m.exps2().first().copied().unwrap_or(0), c.clone()))
                .collect();
            let mut expected = BTreeMap::new();
            for m in 1..n {
                let c = binom(n - 2, m - 1);
                let signed = if (m - 1) % 2 == 0 { c } else { -c };
                if !signed.is_zero() {
                    let prev = expected.insert(2 * (n - 2 * m), signed);
                    assert!(prev.is_none());
                }
            }
            assert_eq!(by_exp, expected, "E({n})");
        }
    }

    #[test]
    fn knot_surgery_on_k3() {
        let k3 = sw_en(2).unwrap();
        let surgered = knot_surgery(&k3, &trefoil(), "tT").unwrap();
        assert_eq!(
            *surgered.poly(),
            LaurentPoly::univar("tT", &[(4, 1), (0, -1), (-4, 1)]).unwrap()
        );
        assert_eq!(surgered.meta(), k3.meta());
        assert!(check_symmetry(&surgered));
        assert_eq!(basic_classes(&surgered).count_mod_negation, 2);
    }

    #[test]
    fn knot_surgery_identity_law() {
        let k3 = sw_en(2).unwrap();
        assert_eq!(
            knot_surgery(&k3, &LaurentPoly::constant(1), "tT").unwrap(),
            k3
        );
        // the unknot's Delta parsed over {t} is still the constant 1
        assert_eq!(knot_surgery(&k3, &tpoly(&[(0, 1)]), "tT").unwrap(), k3);
        let e4 = sw_en(4).unwrap();
        assert_eq!(
            knot_surgery(&e4, &LaurentPoly::constant(1), "tT").unwrap(),
            e4
        );
    }

    #[test]
    fn knot_surgery_multiplicativity() {
        let e4 = sw_en(4).unwrap();
        let twice =
            knot_surgery(&knot_surgery(&e4, &trefoil(), "tT").unwrap(), &fig8(), "tT").unwrap();
        let product = knot_surgery(&e4, &trefoil().mul(&fig8()).unwrap(), "tT").unwrap();
        assert_eq!(twice, product);
    }

    #[test]
    fn knot_surgery_rejects_bad_input() {
        let k3 = sw_en(2).unwrap();
        // not symmetric
        assert!(matches!(
            knot_surgery(&k3, &tpoly(&[(2, 1), (0, -1)]), "tT"),
            Err(Error::NotSymmetrized(_))
        ));
        // symmetric but value -1 at 1 (our convention fixes +1)
        assert!(matches!(
            knot_surgery(&k3, &trefoil().neg(), "tT"),
            Err(Error::NotSymmetrized(_))
        ));
        // half-integer exponents
        assert!(matches!(
            knot_surgery(&k3, &tpoly(&[(1, 1), (-1, 1)]), "tT"),
            Err(Error::NotSymmetrized(_))
        ));
        // b_plus too small
        let small = SWInvariant::new(
            ManifoldMeta::new(0, 0, 1, false, false).unwrap(),
            LaurentPoly::constant(1),
        )
        .unwrap();
        assert!(matches!(
            knot_surgery(&small, &trefoil(), "tT"),
            Err(Error::InvalidMeta(_))
        ));
    }

    #[test]
    fn rim_surgery_multiplies_and_cancels() {
        let e4 = sw_en(4).unwrap();
        let rimmed = rim_surgery(&e4, &trefoil(), "r").unwrap();
        let expected = e4
            .poly()
            .embed(&VarSet::new(["tF", "r"]).unwrap())
            .unwrap()
            .mul(
                &LaurentPoly::univar("r", &[(4, 1), (0, -1), (-4, 1)])
                    .unwrap()
                    .embed(&VarSet::new(["tF", "r"]).unwrap())
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(*rimmed.poly(), expected);
        assert!(check_symmetry(&rimmed));

        // cancellation: distinct Deltas on the same base give distinct outputs
        let a = rim_surgery(&e4, &trefoil(), "r").unwrap();
        let b = rim_surgery(&e4, &fig8(), "r").unwrap();
        assert_ne!(a, b);
        assert_eq!(
            rim_surgery(&e4, &LaurentPoly::constant(1), "r").unwrap(),
            e4
        );
    }

    #[test]
    fn distinguish_surfaces_verdicts() {
        assert_eq!(
            distinguish_surfaces(&trefoil(), &LaurentPoly::constant(1)),
            SurfaceVerdict::Distinguished
        );
        assert_eq!(
            distinguish_surfaces(&big_delta(), &big_delta()),
            SurfaceVerdict::Inconclusive
        );
        assert_eq!(
            distinguish_surfaces(&trefoil(), &trefoil()),
            SurfaceVerdict::Inconclusive
        );
    }

    #[test]
    fn gromov_surgery_uses_scale_one() {
        let one = LaurentPoly::constant(1);
        let g = gromov_knot_surgery(&one, &trefoil(), "tT").unwrap();
        assert_eq!(
            g,
            LaurentPoly::univar("tT", &[(4, 1), (2, -1), (0, 1)]).unwrap()
        );
        // contrast with the SW scale-2 result on the same knot
        let k3 = sw_en(2).unwrap();
        let sw = knot_surgery(&k3, &trefoil(), "tT").unwrap();
        assert_ne!(g, *sw.poly());

        assert_eq!(
            gromov_knot_surgery(&trefoil(), &one, "tT").unwrap(),
            trefoil()
        );
        assert!(matches!(
            gromov_knot_surgery(&one, &tpoly(&[(2, 2), (0, -3), (-2, 2)]), "tT"),
            Err(Error::NonMonic(_))
        ));
    }

    #[test]
    fn gromov_preserves_minimum_exponent() {
        let gr = LaurentPoly::univar("tT", &[(-4, 2), (0, 3)]).unwrap();
        let out = gromov_knot_surgery(&gr, &fig8(), "tT").unwrap();
        let min_exp = |p: &LaurentPoly| p.terms().map(|(m, _)| m.exps2()[0]).min().unwrap();
        assert_eq!(min_exp(&out), min_exp(&gr));
    }

    #[test]
    fn symplectic_obstruction_verdicts() {
        assert_eq!(
            symplectic_obstruction(&tpoly(&[(2, 2), (0, -3), (-2, 2)])).unwrap(),
            SymplecticVerdict::Obstructed
        );
        assert_eq!(
            symplectic_obstruction(&trefoil()).unwrap(),
            SymplecticVerdict::NoVerdict
        );
        assert_eq!(
            symplectic_obstruction(&big_delta()).unwrap(),
            SymplecticVerdict::NoVerdict
        );
    }

    #[test]
    fn link_surgery_wraps_and_validates() {
        let k3meta = ManifoldMeta::new(24, -16, 3, true, true).unwrap();
        let x = link_surgery_sw(&LaurentPoly::constant(1), k3meta.clone()).unwrap();
        assert!(x.poly().is_one());

        // Hopf-style polynomial needs odd chi for its antisymmetry
        let hopf = LaurentPoly::from_terms(
            VarSet::new(["t1", "t2"]).unwrap(),
            [(vec![1, 1], 1), (vec![-1, -1], -1)],
        )
        .unwrap();
        let odd_meta = ManifoldMeta::new(4, 0, 2, false, false).unwrap();
        let wrapped = link_surgery_sw(&hopf, odd_meta).unwrap();
        assert_eq!(*wrapped.poly(), hopf);

        // symmetry violation rejected
        assert!(matches!(
            link_surgery_sw(&tpoly(&[(2, 1), (-2, -2)]), k3meta),
            Err(Error::SymmetryViolation(_))
        ));
    }

    #[test]
    fn sw_invariant_serde_round_trip() {
        let x = knot_surgery(&sw_en(2).unwrap(), &trefoil(), "tT").unwrap();
        let json = serde_json::to_string(&x).unwrap();
        let back: SWInvariant = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        // corrupting an off-center coefficient breaks the symmetry check
        let bad = json.replace(r#"{"c":"1","e2":[-4]}"#, r#"{"c":"3","e2":[-4]}"#);
        assert_ne!(bad, json);
        assert!(serde_json::from_str::<SWInvariant>(&bad).is_err());
    }

    #[test]
    fn cover_sw_examples() {
        assert_eq!(
            cover_sw(&LaurentPoly::constant(1), 1).unwrap(),
            LaurentPoly::univar("t1", &[(1, 1), (-1, -1)]).unwrap()
        );
        let two = cover_sw(&LaurentPoly::constant(1), 2).unwrap();
        let expected = LaurentPoly::from_terms(
            VarSet::new(["t1", "t2"]).unwrap(),
            [
                (vec![1, 1], 1),
                (vec![1, -1], -1),
                (vec![-1, 1], -1),
                (vec![-1, -1], 1),
            ],
        )
        .unwrap();
        assert_eq!(two, expected);

        let uni = LaurentPoly::univar("t1", &[(2, 1), (0, -1), (-2, 1)]).unwrap();
        assert!(matches!(
            cover_sw(&uni, 2),
            Err(Error::VariableCount {
                expected: 2,
                found: 1
            })
        ));
        assert!(cover_sw(&LaurentPoly::constant(1), 0).is_err());
    }

    #[test]
    fn cover_sw_vanishes_at_all_ones() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0030);
        for _ in 0..30 {
            let alpha = rng.gen_range(1..=4i64);
            let names: Vec<String> = (1..=alpha).map(|j| format!("t{j}")).collect();
            let vars = VarSet::new(names.clone()).unwrap();
            let terms: Vec<(Vec<i64>, i64)> = (0..rng.gen_range(1..=5))
                .map(|_| {
                    (
                        (0..alpha).map(|_| rng.gen_range(-3..=3i64)).collect(),
                        rng.gen_range(-5..=5i64),
                    )
                })
                .collect();
            let d = LaurentPoly::from_terms(vars, terms).unwrap();
            let covered = cover_sw(&d, alpha).unwrap();
            let point: BTreeMap<String, BigRational> = names
                .iter()
                .map(|n| (n.clone(), BigRational::from(BigInt::one())))
                .collect();
            assert!(covered.evaluate(&point).unwrap().is_zero());
        }
    }

    #[test]
    fn pair_product_examples() {
        assert!(pair_product_sw(&LaurentPoly::constant(1)).unwrap().is_one());
        let p = pair_product_sw(&trefoil()).unwrap();
        assert_eq!(p, tpoly(&[(4, -1), (0, -1), (-4, -1)]));
        assert_eq!(p.coeff_sum(), BigInt::from(-3));
        assert_eq!(p.coeff_sum().abs(), BigInt::from(3)); // trefoil determinant

        let big = pair_product_sw(&big_delta()).unwrap();
        assert_eq!(big.coeff_sum(), BigInt::from(105));

        assert!(matches!(
            pair_product_sw(&tpoly(&[(1, 1), (-1, -1)])),
            Err(Error::HalfExponent(_))
        ));
    }

    #[test]
    fn basic_class_reports() {
        assert_eq!(basic_classes(&sw_en(2).unwrap()).count_mod_negation, 1);
        let e4 = basic_classes(&sw_en(4).unwrap());
        assert_eq!(e4.count_mod_negation, 2);
        assert_eq!(e4.vars, vec!["tF".to_string()]);
        let paired: Vec<bool> = e4.classes.iter().map(|c| c.paired).collect();
        assert_eq!(paired.iter().filter(|&&p| p).count(), 1);

        let surgered = knot_surgery(&sw_en(2).unwrap(), &big_delta(), "tT").unwrap();
        let report = basic_classes(&surgered);
        assert_eq!(report.count_mod_negation, 5);
        assert_eq!(report.classes.iter().filter(|c| c.paired).count(), 4);
        // representative of the top orbit carries the top coefficient
        assert_eq!(report.classes.last().unwrap().e2, vec![16]);
        assert_eq!(report.classes.last().unwrap().coefficient, BigInt::one());
    }

    #[test]
    fn zk_analysis_reports() {
        let r = z_k_analysis(&trefoil(), 1).unwrap();
        assert!(r.maximal_degree);
        assert_eq!(r.basic_class_count, Some(1));
        assert_eq!(r.top_magnitude, Some(BigInt::one()));
        assert_eq!(r.symplectic_verdict, Some(ZkVerdict::NoConclusion));

        let r = z_k_analysis(&big_delta(), 4).unwrap();
        assert!(r.maximal_degree);
        assert_eq!(r.top_magnitude, Some(BigInt::one()));

        let synthetic = tpoly(&[(2, 2), (0, -3), (-2, 2)]);
        let r = z_k_analysis(&synthetic, 1).unwrap();
        assert_eq!(r.top_magnitude, Some(BigInt::from(2)));
        assert_eq!(r.symplectic_verdict, Some(ZkVerdict::Nonsymplectic));

        let r = z_k_analysis(&trefoil(), 5).unwrap();
        assert!(!r.maximal_degree);
        assert_eq!(r.basic_class_count, None);
        assert_eq!(r.top_magnitude, None);
        assert_eq!(r.symplectic_verdict, None);

        assert!(matches!(
            z_k_analysis(&big_delta(), 3),
            Err(Error::DegreeExceedsGenus { genus: 3, .. })
        ));
        assert!(z_k_analysis(&trefoil(), 0).is_err());
    }

    #[test]
    fn symmetry_check_examples() {
        for n in 2..=8 {
            assert!(check_symmetry(&sw_en(n).unwrap()), "E({n})");
        }
        let meta_even = ManifoldMeta::new(24, -16, 3, true, true).unwrap();
        assert!(!symmetry_holds(&meta_even, &tpoly(&[(2, 1), (-2, -2)])));
        assert!(symmetry_holds(&meta_even, &tpoly(&[(2, 1), (-2, 1)])));
        // odd chi flips the required sign
        let meta_odd = ManifoldMeta::new(4, 0, 2, false, false).unwrap();
        assert!(symmetry_holds(&meta_odd, &tpoly(&[(2, 1), (-2, -1)])));
        assert!(!symmetry_holds(&meta_odd, &tpoly(&[(2, 1), (-2, 1)])));
    }
}
