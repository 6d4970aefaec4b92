//! Symmetrized Alexander polynomials by three independent routes, plus the
//! predicates applied to them (monicity, A-polynomial shape, degree/genus).
//!
//! Routes:
//!
//! 1. **Burau** — the reduced Burau representation of the braid group sends
//!    σ_i to an (n−1)×(n−1) matrix over ℤ[t^{±1}]; for a braid β whose
//!    closure is a knot, Δ ≐ det(B(β) − I)·(t−1)/(t^n − 1) up to a unit,
//!    erased by `normalize_symmetric`.
//! 2. **Closed forms** — torus knots via
//!    (t^{pq}−1)(t−1)/((t^p−1)(t^q−1)), 2-bridge knots via the alternating
//!    state sum Δ ≐ Σ_{k=0}^{α−1} (−1)^k t^{N_k}, N_k = Σ_{i≤k} (−1)^{⌊iβ/α⌋}.
//! 3. **Skein trees** — bottom-up evaluation of an explicit resolution tree
//!    with Δ(unknot) = 1, Δ(split link) = 0 and
//!    Δ_{K₊} = Δ_{K₋} + (t^{1/2} − t^{−1/2})·Δ_{K₀}.
//!
//! All routes return the symmetrized representative: Δ = bar(Δ), Δ(1) = +1.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::knot::{
    BraidWord, CrossingSign, KnotPresentation, SkeinTree, TorusKnotParams, TwoBridgeParams,
};
use crate::laurent::{LaurentPoly, VarSet};

fn tvar() -> VarSet {
    VarSet::single("t").expect("valid name")
}

fn tpoly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::univar("t", terms).expect("valid terms")
}

/// A square matrix over ℤ[t^{±1}], the image of a braid word under the
/// reduced Burau representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauMatrix {
    strands: usize,
    entries: Vec<LaurentPoly>, // (n-1)^2, row-major
}

impl BurauMatrix {
    pub fn identity(strands: usize) -> Self {
        let m = strands - 1;
        let mut entries = vec![LaurentPoly::zero(tvar()); m * m];
        for i in 0..m {
            entries[i * m + i] = LaurentPoly::one(tvar());
        }
        BurauMatrix { strands, entries }
    }

    /// Image of the single letter σ_i (positive) or σ_i^{-1} (negative).
    /// Only column i−1 differs from the identity:
    ///
    /// ```text
    /// σ_i:   t above the diagonal, −t on it, 1 below
    /// σ_i⁻¹: 1 above the diagonal, −t⁻¹ on it, t⁻¹ below
    /// ```
    pub fn generator(strands: usize, letter: i32) -> Self {
        let m = strands - 1;
        let j = letter.unsigned_abs() as usize - 1;
        let mut g = BurauMatrix::identity(strands);
        if letter > 0 {
            g.set(j, j, tpoly(&[(2, -1)]));
            if j >= 1 {
                g.set(j - 1, j, tpoly(&[(2, 1)]));
            }
            if j + 1 < m {
                g.set(j + 1, j, tpoly(&[(0, 1)]));
            }
        } else {
            g.set(j, j, tpoly(&[(-2, -1)]));
            if j >= 1 {
                g.set(j - 1, j, tpoly(&[(0, 1)]));
            }
            if j + 1 < m {
                g.set(j + 1, j, tpoly(&[(-2, 1)]));
            }
        }
        g
    }

    pub fn dim(&self) -> usize {
        self.strands - 1
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim() + col]
    }

    fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        let m = self.dim();
        self.entries[row * m + col] = value;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = self.dim();
        let mut out = BurauMatrix {
            strands: self.strands,
            entries: vec![LaurentPoly::zero(tvar()); m * m],
        };
        for i in 0..m {
            for j in 0..m {
                let mut acc = LaurentPoly::zero(tvar());
                for k in 0..m {
                    let prod = self.entry(i, k).mul(other.entry(k, j)).expect("same vars");
                    acc = acc.add(&prod).expect("same vars");
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn sub_identity(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim() {
            let e = out
                .entry(i, i)
                .sub(&LaurentPoly::one(tvar()))
                .expect("same vars");
            out.set(i, i, e);
        }
        out
    }

    /// Fraction-free Bareiss determinant; every interior division is exact
    /// by Sylvester's identity, so a division failure is an internal bug.
    pub fn det(&self) -> Result<LaurentPoly> {
        let m = self.dim();
        if m == 0 {
            return Ok(LaurentPoly::one(tvar()));
        }
        let mut a: Vec<Vec<LaurentPoly>> = (0..m)
            .map(|i| (0..m).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut negated = false;
        let mut prev = LaurentPoly::one(tvar());
        let internal = |e: Error| Error::Internal(format!("Bareiss elimination: {e}"));
        for k in 0..m - 1 {
            if a[k][k].is_zero() {
                let Some(r) = (k + 1..m).find(|&r| !a[r][k].is_zero()) else {
                    return Ok(LaurentPoly::zero(tvar()));
                };
                a.swap(k, r);
                negated = !negated;
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    let lead = a[k][k].mul(&a[i][j]).map_err(internal)?;
                    let cross = a[i][k].mul(&a[k][j]).map_err(internal)?;
                    a[i][j] = lead
                        .sub(&cross)
                        .map_err(internal)?
                        .exact_div(&prev)
                        .map_err(internal)?;
                }
                a[i][k] = LaurentPoly::zero(tvar());
            }
            prev = a[k][k].clone();
        }
        let det = a[m - 1][m - 1].clone();
        Ok(if negated { det.neg() } else { det })
    }
}

/// Product of generator images over the word; empty words give the identity.
pub fn burau_reduced(b: &BraidWord) -> BurauMatrix {
    let mut acc = BurauMatrix::identity(b.strands());
    for &l in b.letters() {
        acc = acc.mul(&BurauMatrix::generator(b.strands(), l));
    }
    acc
}

/// Δ of the closure of `b` via the reduced Burau determinant. The closure
/// must be a knot.
pub fn alexander_from_braid(b: &BraidWord) -> Result<LaurentPoly> {
    let comps = b.closure_components();
    if comps != 1 {
        return Err(Error::LinkClosure(comps));
    }
    let det = burau_reduced(b).sub_identity().det()?;
    let n = b.strands() as i64;
    let numerator = det.mul(&tpoly(&[(2, 1), (0, -1)])).expect("same vars");
    let quot = numerator
        .exact_div(&tpoly(&[(2 * n, 1), (0, -1)]))
        .map_err(|e| Error::Internal(format!("Burau determinant not divisible by t^n - 1: {e}")))?;
    quot.normalize_symmetric()
        .map_err(|e| Error::Internal(format!("Burau quotient not symmetrizable: {e}")))
}

/// Δ of the (p,q) torus knot: (t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1)).
pub fn alexander_torus(p: i64, q: i64) -> Result<LaurentPoly> {
    let params = TorusKnotParams::new(p, q)?;
    let (p, q) = (params.p(), params.q());
    let cyc = |k: i64| tpoly(&[(2 * k, 1), (0, -1)]);
    let numerator = cyc(p * q).mul(&cyc(1)).expect("same vars");
    let quot = numerator
        .exact_div(&cyc(p))
        .and_then(|r| r.exact_div(&cyc(q)))
        .map_err(|e| Error::Internal(format!("torus closed form division failed: {e}")))?;
    quot.normalize_symmetric()
        .map_err(|e| Error::Internal(format!("torus quotient not symmetrizable: {e}")))
}

/// Δ of the 2-bridge knot K(α,β) by the alternating state sum
/// Σ_{k=0}^{α−1} (−1)^k t^{N_k}. The sum needs β odd; for even β the
/// mirror parameter α−β is used (Δ is mirror-invariant).
pub fn alexander_two_bridge(tb: &TwoBridgeParams) -> Result<LaurentPoly> {
    let alpha = tb.alpha();
    let beta = if tb.beta() % 2 == 0 {
        alpha - tb.beta()
    } else {
        tb.beta()
    };
    let mut n_k: i64 = 0;
    let mut sum = std::collections::BTreeMap::<i64, BigInt>::new();
    for k in 0..alpha {
        if k > 0 {
            // k, beta, alpha all positive: truncation is floor
            let step = (k as i128 * beta as i128) / (alpha as i128);
            n_k += if step % 2 == 0 { 1 } else { -1 };
        }
        let c = sum.entry(2 * n_k).or_insert_with(BigInt::zero);
        if k % 2 == 0 {
            *c += 1;
        } else {
            *c -= 1;
        }
    }
    let raw = LaurentPoly::from_terms(tvar(), sum.into_iter().map(|(e2, c)| (vec![e2], c)))
        .expect("arity 1");
    raw.normalize_symmetric()
        .map_err(|e| Error::Internal(format!("state sum not symmetrizable: {e}")))
}

/// Bottom-up skein evaluation. Unknots give 1, split links 0, and a crossing
/// node combines its children through the skein relation (solved for the
/// flipped diagram when the sign is negative). Presentation leaves are
/// resolved by their own route; the value is not re-normalized, so link
/// values keep their computed unit.
pub fn skein_evaluate(tree: &SkeinTree) -> Result<LaurentPoly> {
    match tree {
        SkeinTree::Unknot => Ok(LaurentPoly::one(tvar())),
        SkeinTree::SplitLink(m) => {
            if *m < 2 {
                return Err(Error::InvalidPresentation(format!(
                    "split link needs >= 2 components, got {m}"
                )));
            }
            Ok(LaurentPoly::zero(tvar()))
        }
        SkeinTree::Crossing { sign, flip, zero } => {
            let f = skein_evaluate(flip)?;
            let z = skein_evaluate(zero)?;
            let zfac = tpoly(&[(1, 1), (-1, -1)]);
            let corr = zfac.mul(&z).expect("same vars");
            match sign {
                CrossingSign::Positive => f.add(&corr).map_err(|e| Error::Internal(e.to_string())),
                CrossingSign::Negative => f.sub(&corr).map_err(|e| Error::Internal(e.to_string())),
            }
        }
        SkeinTree::Leaf(p) => alexander(p),
    }
}

/// Dispatch a presentation to its computing route. Braid, torus and
/// 2-bridge presentations return the symmetrized Δ; skein trees return the
/// tree's exact skein value (identical for knots).
pub fn alexander(p: &KnotPresentation) -> Result<LaurentPoly> {
    match p {
        KnotPresentation::Braid(b) => alexander_from_braid(b),
        KnotPresentation::Torus(t) => alexander_torus(t.p(), t.q()),
        KnotPresentation::TwoBridge(tb) => alexander_two_bridge(tb),
        KnotPresentation::Skein(t) => skein_evaluate(t),
    }
}

/// A_K(t) = t^{degree} · Δ_K(t): the normalized (ordinary) polynomial form.
pub fn normalized_alexander(d: &LaurentPoly) -> Result<LaurentPoly> {
    if d.is_zero() {
        return Err(Error::ZeroPolynomial("normalized form"));
    }
    let eff = d.effective_vars();
    let Some(&v) = eff.first() else {
        return Ok(d.clone());
    };
    if eff.len() > 1 {
        return Err(Error::Invalid(
            "normalized form needs a single effective variable".into(),
        ));
    }
    let name = d.vars().names()[v].clone();
    let deg = d.degree(&name)?;
    let shift = LaurentPoly::from_terms(
        d.vars().clone(),
        [(
            {
                let mut e2 = vec![0i64; d.vars().len()];
                e2[v] = deg.twice();
                e2
            },
            BigInt::one(),
        )],
    )
    .expect("arity matches");
    Ok(d.mul(&shift).expect("same vars"))
}

fn single_var_top(d: &LaurentPoly) -> Result<BigInt> {
    if d.is_zero() {
        return Err(Error::ZeroPolynomial("top coefficient"));
    }
    let eff = d.effective_vars();
    match eff.len() {
        0 => Ok(d.constant_value()),
        1 => d.top_coefficient(&d.vars().names()[eff[0]]),
        n => Err(Error::Invalid(format!(
            "needs a single effective variable, found {n}"
        ))),
    }
}

/// |top coefficient| = 1 (fibered-knot necessary condition).
pub fn is_monic(d: &LaurentPoly) -> Result<bool> {
    Ok(single_var_top(d)?.abs() == BigInt::one())
}

/// Whether `p` has the shape of a knot Alexander polynomial: bar-symmetric,
/// integer exponents, and value ±1 at t = 1.
pub fn is_a_polynomial(p: &LaurentPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("A-polynomial test"));
    }
    let sum = p.coeff_sum();
    Ok(p.is_bar_symmetric()
        && p.has_integer_exponents()
        && (sum == BigInt::one() || sum == -BigInt::one()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeGenus {
    Maximal,
    Submaximal,
    Violation,
}

/// Compare degree(d) against the Seifert genus bound d ≤ g.
pub fn degree_genus_check(d: &LaurentPoly, g: i64) -> Result<DegreeGenus> {
    if d.is_zero() {
        return Err(Error::ZeroPolynomial("degree/genus check"));
    }
    if g < 0 {
        return Err(Error::Invalid(format!("genus must be >= 0, got {g}")));
    }
    let eff = d.effective_vars();
    let deg2 = match eff.first() {
        None => 0,
        Some(&v) => d.degree(&d.vars().names()[v])?.twice(),
    };
    if eff.len() > 1 {
        return Err(Error::Invalid(
            "degree/genus check needs a single effective variable".into(),
        ));
    }
    if deg2 % 2 != 0 {
        return Err(Error::Invalid(
            "half-integer degree: not a knot polynomial".into(),
        ));
    }
    let d_int = deg2 / 2;
    Ok(if d_int == g {
        DegreeGenus::Maximal
    } else if d_int < g {
        DegreeGenus::Submaximal
    } else {
        DegreeGenus::Violation
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::parse_presentation;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn braid(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn trefoil_delta() -> LaurentPoly {
        tpoly(&[(2, 1), (0, -1), (-2, 1)])
    }

    fn fig8_delta() -> LaurentPoly {
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

    fn eval_at_one(p: &LaurentPoly) -> BigInt {
        p.coeff_sum()
    }

    #[test]
    fn burau_generator_templates() {
        let g = BurauMatrix::generator(2, 1);
        assert_eq!(g.dim(), 1);
        assert_eq!(*g.entry(0, 0), tpoly(&[(2, -1)]));
        let cube = burau_reduced(&braid(2, &[1, 1, 1]));
        assert_eq!(*cube.entry(0, 0), tpoly(&[(6, -1)]));

        let s1 = BurauMatrix::generator(3, 1);
        assert_eq!(*s1.entry(0, 0), tpoly(&[(2, -1)]));
        assert_eq!(*s1.entry(1, 0), tpoly(&[(0, 1)]));
        assert_eq!(*s1.entry(0, 1), LaurentPoly::zero(tvar()));
        assert_eq!(*s1.entry(1, 1), LaurentPoly::one(tvar()));
    }

    #[test]
    fn burau_respects_braid_relation_and_inverses() {
        assert_eq!(
            burau_reduced(&braid(3, &[1, 2, 1])),
            burau_reduced(&braid(3, &[2, 1, 2]))
        );
        assert_eq!(burau_reduced(&braid(3, &[1, -1])), BurauMatrix::identity(3));
        assert_eq!(
            burau_reduced(&braid(4, &[2, -2, 3, -3])),
            BurauMatrix::identity(4)
        );
    }

    #[test]
    fn burau_randomized_representation_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0020);
        for _ in 0..60 {
            let n = rng.gen_range(3..=5usize);
            let len = rng.gen_range(0..=6usize);
            let prefix: Vec<i32> = (0..len)
                .map(|_| {
                    let g = rng.gen_range(1..=(n - 1) as i32);
                    if rng.gen() {
                        g
                    } else {
                        -g
                    }
                })
                .collect();

            // inverse cancellation anywhere in a word
            let g = rng.gen_range(1..=(n - 1) as i32);
            let mut with_pair = prefix.clone();
            with_pair.extend([g, -g]);
            assert_eq!(
                burau_reduced(&braid(n, &with_pair)),
                burau_reduced(&braid(n, &prefix))
            );

            // braid relation
            let i = rng.gen_range(1..=(n - 2) as i32);
            let mut lhs = prefix.clone();
            lhs.extend([i, i + 1, i]);
            let mut rhs = prefix.clone();
            rhs.extend([i + 1, i, i + 1]);
            assert_eq!(
                burau_reduced(&braid(n, &lhs)),
                burau_reduced(&braid(n, &rhs))
            );

            // far commutation
            if n >= 4 {
                let mut ab = prefix.clone();
                ab.extend([1, 3]);
                let mut ba = prefix.clone();
                ba.extend([3, 1]);
                assert_eq!(burau_reduced(&braid(n, &ab)), burau_reduced(&braid(n, &ba)));
            }
        }
    }

    #[test]
    fn bareiss_matches_laplace_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0021);
        for _ in 0..25 {
            let m = rng.gen_range(1..=4usize);
            let entries: Vec<LaurentPoly> = (0..m * m)
                .map(|_| {
                    let terms: Vec<(i64, i64)> = (0..rng.gen_range(0..=2))
                        .map(|_| (2 * rng.gen_range(-2..=2i64), rng.gen_range(-3..=3i64)))
                        .collect();
                    tpoly(&terms)
                })
                .collect();
            let mat = BurauMatrix {
                strands: m + 1,
                entries: entries.clone(),
            };
            assert_eq!(mat.det().unwrap(), laplace(&entries, m));
        }
    }

    fn laplace(entries: &[LaurentPoly], m: usize) -> LaurentPoly {
        if m == 1 {
            return entries[0].clone();
        }
        let mut acc = LaurentPoly::zero(tvar());
        for col in 0..m {
            if entries[col].is_zero() {
                continue;
            }
            let minor: Vec<LaurentPoly> = (1..m)
                .flat_map(|r| {
                    (0..m)
                        .filter(|&c| c != col)
                        .map(move |c| entries[r * m + c].clone())
                })
                .collect();
            let cof = entries[col].mul(&laplace(&minor, m - 1)).unwrap();
            acc = if col % 2 == 0 {
                acc.add(&cof).unwrap()
            } else {
                acc.sub(&cof).unwrap()
            };
        }
        acc
    }

    #[test]
    fn alexander_from_braid_examples() {
        assert_eq!(
            alexander_from_braid(&braid(2, &[1, 1, 1])).unwrap(),
            trefoil_delta()
        );
        assert!(alexander_from_braid(&braid(2, &[1])).unwrap().is_one());
        assert_eq!(
            alexander_from_braid(&braid(3, &[1, -2, 1, -2])).unwrap(),
            fig8_delta()
        );
    }

    #[test]
    fn alexander_from_braid_rejects_links() {
        assert_eq!(
            alexander_from_braid(&braid(2, &[1, 1])),
            Err(Error::LinkClosure(2))
        );
        assert_eq!(
            alexander_from_braid(&braid(3, &[])),
            Err(Error::LinkClosure(3))
        );
    }

    #[test]
    fn alexander_torus_examples() {
        assert_eq!(alexander_torus(2, 3).unwrap(), trefoil_delta());
        assert_eq!(
            alexander_torus(2, 5).unwrap(),
            tpoly(&[(4, 1), (2, -1), (0, 1), (-2, -1), (-4, 1)])
        );
        assert!(alexander_torus(2, 4).is_err());
        assert!(alexander_torus(1, 5).is_err());
    }

    #[test]
    fn torus_degree_equals_genus_up_to_nine() {
        for p in 2..=9i64 {
            for q in (p + 1)..=9i64 {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let d = alexander_torus(p, q).unwrap();
                assert_eq!(
                    d.degree("t").unwrap().as_integer().unwrap(),
                    (p - 1) * (q - 1) / 2,
                    "degree of T({p},{q})"
                );
                assert_eq!(eval_at_one(&d), BigInt::one());
            }
        }
    }

    #[test]
    fn two_bridge_examples() {
        let k = |a, b| alexander_two_bridge(&TwoBridgeParams::new(a, b).unwrap()).unwrap();
        assert_eq!(k(3, 1), trefoil_delta());
        assert_eq!(k(5, 3), fig8_delta());
        assert_eq!(k(105, 64), big_delta());
        assert_eq!(k(105, 76), big_delta());
        assert_eq!(k(5, 1), alexander_torus(2, 5).unwrap());
        assert_eq!(k(7, 1), alexander_torus(2, 7).unwrap());
        assert_eq!(k(7, 3), tpoly(&[(2, 2), (0, -3), (-2, 2)]));
    }

    #[test]
    fn two_bridge_inverse_beta_equivalence() {
        // beta * beta' = 1 mod alpha presents the same knot
        for alpha in (5..=35i64).step_by(2) {
            for beta in 1..alpha {
                if num_integer::gcd(alpha, beta) != 1 {
                    continue;
                }
                let inv = (1..alpha).find(|b| (b * beta) % alpha == 1).unwrap();
                let a = alexander_two_bridge(&TwoBridgeParams::new(alpha, beta).unwrap()).unwrap();
                let b = alexander_two_bridge(&TwoBridgeParams::new(alpha, inv).unwrap()).unwrap();
                assert_eq!(a, b, "K({alpha},{beta}) vs K({alpha},{inv})");
            }
        }
    }

    #[test]
    fn two_bridge_determinant_and_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0022);
        let mut point = BTreeMap::new();
        point.insert("t".to_string(), BigRational::from(BigInt::from(-1)));
        for _ in 0..40 {
            let alpha = 2 * rng.gen_range(1..=40i64) + 1;
            let beta = rng.gen_range(1..alpha);
            let Ok(tb) = TwoBridgeParams::new(alpha, beta) else {
                continue;
            };
            let d = alexander_two_bridge(&tb).unwrap();
            assert_eq!(d.bar(), d);
            assert_eq!(eval_at_one(&d), BigInt::one());
            // |Δ(-1)| is the knot determinant, equal to alpha for 2-bridge
            let det = d.evaluate(&point).unwrap();
            assert_eq!(det.to_integer().abs(), BigInt::from(alpha));
        }
    }

    #[test]
    fn skein_evaluation_examples() {
        let eval = |s: &str| match parse_presentation(s).unwrap() {
            KnotPresentation::Skein(t) => skein_evaluate(&t).unwrap(),
            _ => panic!("not a tree"),
        };
        assert!(eval("U").is_one());
        assert_eq!(eval("(+ S(2) U)"), tpoly(&[(1, 1), (-1, -1)]));
        assert_eq!(eval("(+ U (+ S(2) U))"), trefoil_delta());
        assert_eq!(eval("(- U (+ S(2) U))"), fig8_delta());
        assert_eq!(
            eval("(+ U (+ (+ S(2) U) U))"),
            tpoly(&[(2, 2), (0, -3), (-2, 2)])
        );
        // presentation leaves resolve through their own route
        assert_eq!(eval("(+ T(2,3) S(2))"), trefoil_delta());
    }

    #[test]
    fn skein_knot_trees_have_integer_exponents() {
        for s in [
            "U",
            "(+ U (+ S(2) U))",
            "(- U (+ S(2) U))",
            "(+ U (+ (+ S(2) U) U))",
        ] {
            let KnotPresentation::Skein(t) = parse_presentation(s).unwrap() else {
                panic!()
            };
            assert!(skein_evaluate(&t).unwrap().has_integer_exponents(), "{s}");
        }
        let KnotPresentation::Skein(hopf) = parse_presentation("(+ S(2) U)").unwrap() else {
            panic!()
        };
        assert!(!skein_evaluate(&hopf).unwrap().has_integer_exponents());
    }

    #[test]
    fn skein_unresolvable_leaf_errors() {
        let KnotPresentation::Skein(t) = parse_presentation("(+ B(2: 1 1) U)").unwrap() else {
            panic!()
        };
        assert_eq!(skein_evaluate(&t), Err(Error::LinkClosure(2)));
    }

    #[test]
    fn normalized_alexander_examples() {
        assert_eq!(
            normalized_alexander(&trefoil_delta()).unwrap(),
            tpoly(&[(4, 1), (2, -1), (0, 1)])
        );
        assert!(normalized_alexander(&LaurentPoly::constant(1))
            .unwrap()
            .is_one());
        let a = normalized_alexander(&big_delta()).unwrap();
        assert_eq!(a.degree("t").unwrap().as_integer().unwrap(), 8);
        assert_eq!(a.constant_value(), BigInt::one());
        assert_eq!(a.bar().degree("t").unwrap().twice(), 0); // lowest exponent is 0
        assert!(matches!(
            normalized_alexander(&LaurentPoly::constant(0)),
            Err(Error::ZeroPolynomial(_))
        ));
    }

    #[test]
    fn monicity_and_a_polynomial_predicates() {
        assert!(is_monic(&big_delta()).unwrap());
        assert!(is_monic(&trefoil_delta()).unwrap());
        let synthetic = tpoly(&[(2, 2), (0, -3), (-2, 2)]);
        assert!(!is_monic(&synthetic).unwrap());
        assert!(is_a_polynomial(&synthetic).unwrap()); // sum is 1, symmetric
        assert!(is_a_polynomial(&trefoil_delta()).unwrap());
        assert!(!is_a_polynomial(&tpoly(&[(2, 1), (0, 1), (-2, 1)])).unwrap()); // sum 3
        assert!(!is_a_polynomial(&tpoly(&[(1, 1), (-1, -1)])).unwrap()); // half exps
        assert!(is_monic(&LaurentPoly::constant(0)).is_err());
        assert!(is_a_polynomial(&LaurentPoly::constant(0)).is_err());
    }

    #[test]
    fn degree_genus_examples() {
        assert_eq!(
            degree_genus_check(&alexander_torus(2, 5).unwrap(), 2).unwrap(),
            DegreeGenus::Maximal
        );
        assert_eq!(
            degree_genus_check(&trefoil_delta(), 5).unwrap(),
            DegreeGenus::Submaximal
        );
        assert_eq!(
            degree_genus_check(&big_delta(), 3).unwrap(),
            DegreeGenus::Violation
        );
        assert!(degree_genus_check(&LaurentPoly::constant(0), 1).is_err());
        assert!(degree_genus_check(&trefoil_delta(), -1).is_err());
    }
}
