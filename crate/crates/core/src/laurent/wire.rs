//! JSON wire format for polynomials.
//!
//! ```json
//! {"vars": ["t"], "terms": [{"c": "1", "e2": [-2]}, {"c": "-1", "e2": [0]}, {"c": "1", "e2": [2]}]}
//! ```
//!
//! Coefficients travel as decimal strings so arbitrary precision survives
//! every JSON implementation; exponents travel doubled (`e2`), exactly as
//! stored. Serialization always emits canonical order (sorted variables,
//! ascending lexicographic terms); deserialization accepts any order and
//! canonicalizes.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, VarSet};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct PolyWire {
    vars: Vec<String>,
    terms: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    c: CoeffWire,
    e2: Vec<i64>,
}

/// Canonical form is a decimal string; bare JSON integers are tolerated on
/// input for hand-written files.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffWire {
    Str(String),
    Int(i64),
}

impl From<&LaurentPoly> for PolyWire {
    fn from(p: &LaurentPoly) -> Self {
        PolyWire {
            vars: p.vars.names().to_vec(),
            terms: p
                .terms
                .iter()
                .map(|(m, c)| TermWire {
                    c: CoeffWire::Str(c.to_string()),
                    e2: m.exps2().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyWire> for LaurentPoly {
    type Error = Error;

    fn try_from(w: PolyWire) -> Result<Self> {
        let vars = VarSet::new(w.vars.iter().cloned())?;
        // incoming variables may be unsorted: permute each exponent vector
        let perm: Vec<usize> = w
            .vars
            .iter()
            .map(|n| vars.index_of(n).expect("member of own set"))
            .collect();
        let mut p = LaurentPoly::zero(vars);
        for (i, t) in w.terms.into_iter().enumerate() {
            if t.e2.len() != perm.len() {
                return Err(Error::Wire(format!(
                    "term {i}: exponent vector of length {}, expected {}",
                    t.e2.len(),
                    perm.len()
                )));
            }
            let c = match t.c {
                CoeffWire::Int(v) => BigInt::from(v),
                CoeffWire::Str(s) => s
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Wire(format!("term {i}: bad coefficient `{s}`")))?,
            };
            if c.is_zero() {
                continue;
            }
            let mut e2 = vec![0i64; perm.len()];
            for (src, &dst) in perm.iter().enumerate() {
                e2[dst] = t.e2[src];
            }
            p.add_term(e2, c);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = PolyWire::deserialize(d)?;
        LaurentPoly::try_from(w).map_err(serde::de::Error::custom)
    }
}

impl LaurentPoly {
    /// Canonical single-line JSON encoding.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Wire(e.to_string()))
    }
}
