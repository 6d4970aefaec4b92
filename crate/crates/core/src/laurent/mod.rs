//! Exact sparse Laurent polynomials in named variables, with half-integer
//! exponents.
//!
//! Every invariant computed by this crate — Alexander polynomials,
//! Seiberg-Witten basic-class series, Gromov series — is a value of
//! [`LaurentPoly`]:
//!
//! ```text
//! t^4 - 5*t^3 + 13*t^2 - 21*t + 25 - 21*t^-1 + ...      one variable
//! t1^(1/2)*t2^(1/2) - t1^(-1/2)*t2^(-1/2)               several, half powers
//! ```
//!
//! Exponents are stored *doubled* (`e2 = 2k` for the exponent `k`), so the
//! formal square roots that appear in skein calculus and in multi-component
//! link formulas remain exact integer data; no floating point, no extension
//! field. Coefficients are arbitrary-precision integers and terms live in an
//! ordered map, which makes equality, printing and serialization
//! deterministic.

mod text;
mod wire;

pub use text::parse_poly;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of ½·ℤ, stored as its double so that it is exact integer data.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const ONE: HalfInt = HalfInt(2);
    pub const HALF: HalfInt = HalfInt(1);

    pub fn from_int(k: i64) -> Self {
        HalfInt(2 * k)
    }

    /// Build from the doubled value: `from_twice(3)` is 3/2.
    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }
}

impl From<i64> for HalfInt {
    fn from(k: i64) -> Self {
        HalfInt::from_int(k)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// An ordered set of distinct variable names. The canonical order is sorted;
/// exponent vectors are always indexed against it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

fn valid_ident(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarSet {
    /// Sorts the names and rejects duplicates and non-identifier strings.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidVarSet(format!("duplicate name `{}`", w[0])));
            }
        }
        for n in &names {
            if !valid_ident(n) {
                return Err(Error::InvalidVarSet(format!("bad name `{n}`")));
            }
        }
        Ok(VarSet { names })
    }

    pub fn empty() -> Self {
        VarSet { names: Vec::new() }
    }

    pub fn single(name: &str) -> Result<Self> {
        VarSet::new([name])
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        let set: BTreeSet<&String> = self.names.iter().chain(&other.names).collect();
        VarSet {
            names: set.into_iter().cloned().collect(),
        }
    }

    fn brace_list(&self) -> String {
        self.names.join(", ")
    }
}

/// The exponent vector of one term, doubled units, one entry per variable of
/// the owning polynomial's [`VarSet`]. Derived `Ord` is lexicographic, which
/// is the canonical term order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps2: Vec<i64>,
}

impl Monomial {
    pub fn new(exps2: Vec<i64>) -> Self {
        Monomial { exps2 }
    }

    pub fn exps2(&self) -> &[i64] {
        &self.exps2
    }

    pub fn is_zero(&self) -> bool {
        self.exps2.iter().all(|&e| e == 0)
    }

    pub fn neg(&self) -> Monomial {
        Monomial {
            exps2: self.exps2.iter().map(|&e| -e).collect(),
        }
    }
}

/// How one variable is rewritten by [`LaurentPoly::substitute`]:
/// `t ↦ (sign) · target^scale` with `sign = -1` when `negate` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstRule {
    pub target: String,
    pub scale: HalfInt,
    pub negate: bool,
}

impl SubstRule {
    pub fn rename(target: &str) -> Self {
        SubstRule {
            target: target.into(),
            scale: HalfInt::ONE,
            negate: false,
        }
    }

    pub fn scaled(target: &str, scale: HalfInt) -> Self {
        SubstRule {
            target: target.into(),
            scale,
            negate: false,
        }
    }

    pub fn negated(target: &str) -> Self {
        SubstRule {
            target: target.into(),
            scale: HalfInt::ONE,
            negate: true,
        }
    }
}

/// A sparse Laurent polynomial with [`BigInt`] coefficients and half-integer
/// exponents over a fixed [`VarSet`]. Stored coefficients are never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    // ---- constructors -----------------------------------------------------

    pub fn zero(vars: VarSet) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: VarSet) -> Self {
        let mut p = LaurentPoly::zero(vars);
        p.add_term(vec![0; p.vars.len()], BigInt::one());
        p
    }

    /// A constant over the empty variable set; embeds into any other set.
    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        let mut p = LaurentPoly::zero(VarSet::empty());
        p.add_term(Vec::new(), c.into());
        p
    }

    /// The polynomial `name^1` over the one-variable set `{name}`.
    pub fn variable(name: &str) -> Result<Self> {
        let vars = VarSet::single(name)?;
        let mut p = LaurentPoly::zero(vars);
        p.add_term(vec![2], BigInt::one());
        Ok(p)
    }

    /// Build from `(exps2, coefficient)` pairs; zero coefficients are dropped
    /// and duplicate monomials accumulate.
    pub fn from_terms<I, C>(vars: VarSet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero(vars);
        for (e2, c) in terms {
            if e2.len() != p.vars.len() {
                return Err(Error::InvalidVarSet(format!(
                    "exponent vector of length {} over {} variables",
                    e2.len(),
                    p.vars.len()
                )));
            }
            p.add_term(e2, c.into());
        }
        Ok(p)
    }

    /// One-variable convenience: `(doubled exponent, coefficient)` pairs.
    pub fn univar<C: Into<BigInt> + Clone>(name: &str, terms: &[(i64, C)]) -> Result<Self> {
        LaurentPoly::from_terms(
            VarSet::single(name)?,
            terms.iter().map(|(e2, c)| (vec![*e2], c.clone().into())),
        )
    }

    fn add_term(&mut self, e2: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let m = Monomial::new(e2);
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            // re-fetch the key to remove; cheapest is retain
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    // ---- accessors --------------------------------------------------------

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_value() == BigInt::one()
    }

    /// The constant term (zero monomial) coefficient.
    pub fn constant_value(&self) -> BigInt {
        self.terms
            .get(&Monomial::new(vec![0; self.vars.len()]))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Sum of all coefficients; equals evaluation at the all-ones point.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Indices of variables that occur with a nonzero exponent somewhere.
    pub fn effective_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.vars.len()];
        for m in self.terms.keys() {
            for (i, &e) in m.exps2().iter().enumerate() {
                if e != 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(i, &u)| u.then_some(i))
            .collect()
    }

    /// `Some(index)` when exactly one variable is effective, `None` for a
    /// constant. More than one effective variable is the caller's error.
    fn only_effective_var(&self) -> std::result::Result<Option<usize>, usize> {
        let eff = self.effective_vars();
        match eff.len() {
            0 => Ok(None),
            1 => Ok(Some(eff[0])),
            n => Err(n),
        }
    }

    // ---- variable-set plumbing ---------------------------------------------

    fn unified_vars(&self, other: &Self) -> Result<VarSet> {
        if self.vars == other.vars {
            Ok(self.vars.clone())
        } else if self.is_constant() {
            Ok(other.vars.clone())
        } else if other.is_constant() {
            Ok(self.vars.clone())
        } else {
            Err(Error::VarMismatch(
                self.vars.brace_list(),
                other.vars.brace_list(),
            ))
        }
    }

    /// Re-express over `target`. Every variable that actually occurs must be
    /// a member of `target`; unused declared variables may be dropped.
    pub fn embed(&self, target: &VarSet) -> Result<Self> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .vars
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut out = LaurentPoly::zero(target.clone());
        for (m, c) in &self.terms {
            let mut e2 = vec![0i64; target.len()];
            for (i, &x) in m.exps2().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e2[j] = x,
                    None => {
                        return Err(Error::UnknownVariable(self.vars.names()[i].clone()));
                    }
                }
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    // ---- arithmetic --------------------------------------------------------

    pub fn add(&self, other: &Self) -> Result<Self> {
        let vars = self.unified_vars(other)?;
        let mut out = self.embed(&vars)?;
        for (m, c) in &other.embed(&vars)?.terms {
            out.add_term(m.exps2().to_vec(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let vars = self.unified_vars(other)?;
        let a = self.embed(&vars)?;
        let b = other.embed(&vars)?;
        let mut out = LaurentPoly::zero(vars);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let e2: Vec<i64> = ma
                    .exps2()
                    .iter()
                    .zip(mb.exps2())
                    .map(|(x, y)| x + y)
                    .collect();
                out.add_term(e2, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one(self.vars.clone());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same variable set");
            }
            base = base.mul(&base).expect("same variable set");
            n >>= 1;
        }
        acc
    }

    /// Mirror map `bar`: every variable `t ↦ t^{-1}` simultaneously.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.neg(), c.clone()))
                .collect(),
        }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| self.terms.get(&m.neg()) == Some(c))
    }

    /// Simultaneously rewrite variables by the given rules; unlisted
    /// variables pass through. Rewriting `t ↦ -(...)` of a term with a
    /// half-integer exponent of `t`, or scaling that would leave the
    /// half-integer lattice, is an error.
    pub fn substitute(&self, rules: &BTreeMap<String, SubstRule>) -> Result<Self> {
        for src in rules.keys() {
            if !self.vars.contains(src) {
                return Err(Error::UnknownVariable(src.clone()));
            }
        }
        let mut names: BTreeSet<String> = self
            .vars
            .names()
            .iter()
            .filter(|n| !rules.contains_key(*n))
            .cloned()
            .collect();
        for r in rules.values() {
            names.insert(r.target.clone());
        }
        let target = VarSet::new(names)?;
        // per source index: destination index and the rule, if any
        let plan: Vec<(usize, Option<&SubstRule>)> = self
            .vars
            .names()
            .iter()
            .map(|n| match rules.get(n) {
                Some(r) => (target.index_of(&r.target).unwrap(), Some(r)),
                None => (target.index_of(n).unwrap(), None),
            })
            .collect();
        let mut out = LaurentPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e2 = vec![0i64; out.vars.len()];
            let mut coeff = c.clone();
            for (i, &x) in m.exps2().iter().enumerate() {
                let (j, rule) = &plan[i];
                match rule {
                    None => e2[*j] += x,
                    Some(r) => {
                        if r.negate {
                            if x % 2 != 0 {
                                return Err(Error::HalfExponent(format!(
                                    "cannot negate `{}` on exponent {}",
                                    self.vars.names()[i],
                                    HalfInt::from_twice(x)
                                )));
                            }
                            if (x / 2) % 2 != 0 {
                                coeff = -coeff;
                            }
                        }
                        let prod = x * r.scale.twice();
                        if prod % 2 != 0 {
                            return Err(Error::HalfExponent(format!(
                                "scaling exponent {} of `{}` by {} leaves the half-integer lattice",
                                HalfInt::from_twice(x),
                                self.vars.names()[i],
                                r.scale
                            )));
                        }
                        e2[*j] += prod / 2;
                    }
                }
            }
            out.add_term(e2, coeff);
        }
        Ok(out)
    }

    /// Single-variable convenience wrapper around [`Self::substitute`].
    pub fn substitute_var(&self, source: &str, rule: SubstRule) -> Result<Self> {
        let mut rules = BTreeMap::new();
        rules.insert(source.to_string(), rule);
        self.substitute(&rules)
    }

    /// Evaluate at a rational point. The assignment must cover the variable
    /// set exactly, every value must be nonzero, and a variable appearing
    /// with half-integer exponents must be assigned a rational square.
    pub fn evaluate(&self, point: &BTreeMap<String, BigRational>) -> Result<BigRational> {
        for name in self.vars.names() {
            if !point.contains_key(name) {
                return Err(Error::EvalDomain(format!(
                    "missing assignment for `{name}`"
                )));
            }
        }
        for name in point.keys() {
            if !self.vars.contains(name) {
                return Err(Error::EvalDomain(format!(
                    "assignment for unknown variable `{name}`"
                )));
            }
        }
        let mut needs_sqrt = vec![false; self.vars.len()];
        for m in self.terms.keys() {
            for (i, &e) in m.exps2().iter().enumerate() {
                if e % 2 != 0 {
                    needs_sqrt[i] = true;
                }
            }
        }
        // per variable: the base that is raised to the *doubled* exponent
        // when a square root is required, or to the plain exponent otherwise
        let mut bases: Vec<BigRational> = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            let v = &point[name];
            if v.is_zero() {
                return Err(Error::EvalDomain(format!("zero assignment for `{name}`")));
            }
            if needs_sqrt[i] {
                let root = exact_sqrt(v).ok_or_else(|| {
                    Error::EvalDomain(format!(
                        "`{name}` occurs with half-integer exponents but {v} is not a rational square"
                    ))
                })?;
                bases.push(root);
            } else {
                bases.push(v.clone());
            }
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for (i, &e2) in m.exps2().iter().enumerate() {
                let k = if needs_sqrt[i] { e2 } else { e2 / 2 };
                term *= rat_pow(&bases[i], k);
            }
            total += term;
        }
        Ok(total)
    }

    /// Exact division in ℤ[t^{±1/2}]: errors unless the quotient exists with
    /// integer coefficients. At most one variable may be effective across
    /// numerator and divisor.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let vars = self.unified_vars(divisor)?;
        let a = self.embed(&vars)?;
        let b = divisor.embed(&vars)?;
        if a.is_zero() {
            return Ok(a);
        }
        let mut eff = a.effective_vars();
        for i in b.effective_vars() {
            if !eff.contains(&i) {
                eff.push(i);
            }
        }
        if eff.len() > 1 {
            return Err(Error::MultivariateDivision);
        }
        let Some(&v) = eff.first() else {
            // both constants
            let (num, den) = (a.constant_value(), b.constant_value());
            let (q, r) = num_integer::Integer::div_rem(&num, &den);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let mut out = LaurentPoly::zero(vars);
            out.add_term(vec![0; out.vars.len()], q);
            return Ok(out);
        };
        // Laurent units are invertible: shift both operands so that the
        // minimum exponent is zero, divide as ordinary polynomials, shift
        // back. The doubled exponent acts as an honest integer degree in the
        // formal variable u = v^(1/2).
        let amap = a.uni_map(v);
        let bmap = b.uni_map(v);
        let amin = *amap.keys().next().unwrap();
        let bmin = *bmap.keys().next().unwrap();
        let shifted = |map: &BTreeMap<i64, BigInt>, s: i64| -> BTreeMap<i64, BigInt> {
            map.iter().map(|(e, c)| (e - s, c.clone())).collect()
        };
        let mut rem = shifted(&amap, amin);
        let bsh = shifted(&bmap, bmin);
        let (&bdeg, blc) = bsh.iter().next_back().unwrap();
        let mut quot: BTreeMap<i64, BigInt> = BTreeMap::new();
        while let Some((&adeg, alc)) = rem.iter().next_back() {
            if adeg < bdeg {
                return Err(Error::NotDivisible);
            }
            let (qc, qr) = num_integer::Integer::div_rem(alc, blc);
            if !qr.is_zero() {
                return Err(Error::NotDivisible);
            }
            let qe = adeg - bdeg;
            for (&e, c) in &bsh {
                let entry = rem.entry(e + qe).or_insert_with(BigInt::zero);
                *entry -= c * &qc;
            }
            rem.retain(|_, c| !c.is_zero());
            quot.insert(qe, qc);
        }
        let shift = amin - bmin;
        let mut out = LaurentPoly::zero(vars);
        for (e, c) in quot {
            let mut e2 = vec![0i64; out.vars.len()];
            e2[v] = e + shift;
            out.add_term(e2, c);
        }
        Ok(out)
    }

    /// Dense view of a polynomial with (at most) the single effective
    /// variable `v`: doubled exponent → coefficient.
    fn uni_map(&self, v: usize) -> BTreeMap<i64, BigInt> {
        self.terms
            .iter()
            .map(|(m, c)| (m.exps2()[v], c.clone()))
            .collect()
    }

    /// Strip the unit factor `±t^k` (`k` half-integral) from a polynomial
    /// that is a unit multiple of a bar-symmetric one. The result `r`
    /// satisfies `r = ±bar(r)` with centered support; its sign is fixed by
    /// `r(1) > 0` when `r(1) ≠ 0`, and by a positive leading coefficient
    /// otherwise.
    pub fn normalize_symmetric(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("symmetric normalization"));
        }
        let v = match self.only_effective_var() {
            Ok(opt) => opt,
            Err(n) => {
                return Err(Error::NotSymmetrizable(format!(
                    "{n} effective variables, need at most one"
                )))
            }
        };
        let vars = self.vars.clone();
        let arity = vars.len();
        let (vi, map) = match v {
            Some(vi) => (vi, self.uni_map(vi)),
            None => {
                // nonzero constant: only the sign needs fixing
                let c = self.constant_value();
                let mut out = LaurentPoly::zero(vars);
                out.add_term(vec![0; arity], c.abs());
                return Ok(out);
            }
        };
        let emin = *map.keys().next().unwrap();
        let emax = *map.keys().next_back().unwrap();
        if (emin + emax) % 2 != 0 {
            return Err(Error::NotSymmetrizable(
                "support cannot be centered on the exponent lattice".into(),
            ));
        }
        let shift = -(emin + emax) / 2;
        let centered: BTreeMap<i64, BigInt> =
            map.iter().map(|(e, c)| (e + shift, c.clone())).collect();
        // mirror coefficients must agree up to one global sign
        let top = centered.keys().next_back().copied().unwrap();
        let eta_plus = centered.iter().all(|(e, c)| centered.get(&-e) == Some(c));
        let eta_minus = centered
            .iter()
            .all(|(e, c)| centered.get(&-e).map(|d| -d) == Some(c.clone()));
        if !eta_plus && !eta_minus {
            return Err(Error::NotSymmetrizable(
                "mirror coefficients do not match up to a global sign".into(),
            ));
        }
        let sum: BigInt = centered.values().sum();
        let flip = if !sum.is_zero() {
            sum.is_negative()
        } else {
            centered[&top].is_negative()
        };
        let mut out = LaurentPoly::zero(vars);
        for (e, c) in centered {
            let mut e2 = vec![0i64; arity];
            e2[vi] = e;
            out.add_term(e2, if flip { -c } else { c });
        }
        Ok(out)
    }

    /// Largest exponent of `var` across all terms. Constants answer the
    /// query for any variable (they embed into any set) with degree 0.
    pub fn degree(&self, var: &str) -> Result<HalfInt> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("degree"));
        }
        let Some(v) = self.vars.index_of(var) else {
            if self.is_constant() {
                return Ok(HalfInt::ZERO);
            }
            return Err(Error::UnknownVariable(var.into()));
        };
        let e2 = self.terms.keys().map(|m| m.exps2()[v]).max().unwrap();
        Ok(HalfInt::from_twice(e2))
    }

    /// Coefficient of the unique term realizing `degree(var)`; errors when
    /// several terms share that exponent.
    pub fn top_coefficient(&self, var: &str) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("top coefficient"));
        }
        let Some(v) = self.vars.index_of(var) else {
            if self.is_constant() {
                return Ok(self.constant_value());
            }
            return Err(Error::UnknownVariable(var.into()));
        };
        let e2 = self.terms.keys().map(|m| m.exps2()[v]).max().unwrap();
        let mut hits = self.terms.iter().filter(|(m, _)| m.exps2()[v] == e2);
        let (_, c) = hits.next().unwrap();
        if hits.next().is_some() {
            return Err(Error::AmbiguousTop(format!(
                "several terms have maximal `{var}` exponent {}",
                HalfInt::from_twice(e2)
            )));
        }
        Ok(c.clone())
    }

    /// True when every exponent of every variable is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.exps2().iter().all(|e| e % 2 == 0))
    }
}

fn exact_sqrt(v: &BigRational) -> Option<BigRational> {
    if !v.is_positive() {
        return None;
    }
    let (n, d) = (v.numer(), v.denom());
    let sn = n.sqrt();
    if &(&sn * &sn) != n {
        return None;
    }
    let sd = d.sqrt();
    if &(&sd * &sd) != d {
        return None;
    }
    Some(BigRational::new(sn, sd))
}

fn rat_pow(v: &BigRational, k: i64) -> BigRational {
    if k < 0 {
        return rat_pow(&v.recip(), -k);
    }
    num_traits::pow(v.clone(), k as usize)
}
