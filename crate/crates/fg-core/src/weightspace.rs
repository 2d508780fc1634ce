//! Exact weight vectors, invariant bilinear forms, parity, and formal
//! characters.
//!
//! Weights of F(4) live in the 4-dimensional space with basis
//! `(eps1, eps2, eps3, delta)`; weights of G(3) live in the 3-dimensional
//! space with basis `(eps1, eps2, delta)`, the third epsilon being
//! eliminated through `eps3 = -eps1 - eps2`. All coordinates of interest
//! are half-integers, so a weight is stored as a vector of doubled integer
//! coordinates. The fiber algebras sl(3) and sl(2) use fundamental-weight
//! coordinates.
//!
//! A [`FormalCharacter`] is a finitely supported integer function on the
//! (scaled) weight lattice, i.e. a sparse Laurent combination of lattice
//! points; the ring operations, the dimension specialization `e^mu -> 1`,
//! and the signed superdimension specialization live here.

use crate::{Error, Result};
use num::rational::Ratio;
use num::{One, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Exact rational scalar used throughout the crate.
pub type Q = Ratio<i64>;

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

/// Shorthand for the integer rational `n`.
pub fn qi(n: i64) -> Q {
    Ratio::from_integer(n)
}

/// Render a rational as `p` or `p/q`.
pub fn q_to_string(x: Q) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse a rational from `p` or `p/q`.
pub fn q_from_str(s: &str) -> Result<Q> {
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        None => s.trim().parse::<i64>().map(Ratio::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = n.trim().parse::<i64>().map_err(|_| bad())?;
            let d = d.trim().parse::<i64>().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(n, d))
        }
    }
}

/// The algebras whose weights and roots appear in this crate.
///
/// `F4` shares its coordinate space with its even part `B3xA1`, and `G3`
/// with `G2xA1`. `Sl3` and `Sl2` are the fiber algebras attached to a
/// rank-one self-commuting element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraId {
    F4,
    G3,
    B3xA1,
    G2xA1,
    Sl3,
    Sl2,
}

impl AlgebraId {
    /// Number of stored coordinates.
    pub const fn rank(self) -> usize {
        match self {
            AlgebraId::F4 | AlgebraId::B3xA1 => 4,
            AlgebraId::G3 | AlgebraId::G2xA1 => 3,
            AlgebraId::Sl3 => 2,
            AlgebraId::Sl2 => 1,
        }
    }

    /// Canonical representative of the coordinate space this algebra uses.
    pub const fn space(self) -> AlgebraId {
        match self {
            AlgebraId::F4 | AlgebraId::B3xA1 => AlgebraId::F4,
            AlgebraId::G3 | AlgebraId::G2xA1 => AlgebraId::G3,
            other => other,
        }
    }

    /// Whether two algebras share a coordinate space (so their weights may mix).
    pub fn same_space(self, other: AlgebraId) -> bool {
        self.space() == other.space()
    }

    /// One of the two superalgebras proper.
    pub fn is_super(self) -> bool {
        matches!(self, AlgebraId::F4 | AlgebraId::G3)
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::F4 => "F4",
            AlgebraId::G3 => "G3",
            AlgebraId::B3xA1 => "B3xA1",
            AlgebraId::G2xA1 => "G2xA1",
            AlgebraId::Sl3 => "SL3",
            AlgebraId::Sl2 => "SL2",
        }
    }

    pub fn parse(s: &str) -> Option<AlgebraId> {
        match s.to_ascii_lowercase().as_str() {
            "f4" | "f(4)" => Some(AlgebraId::F4),
            "g3" | "g(3)" => Some(AlgebraId::G3),
            "b3xa1" => Some(AlgebraId::B3xA1),
            "g2xa1" => Some(AlgebraId::G2xA1),
            "sl3" | "sl(3)" => Some(AlgebraId::Sl3),
            "sl2" | "sl(2)" => Some(AlgebraId::Sl2),
            _ => None,
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An element of Z/2, additive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Parity(pub u8);

impl Parity {
    pub const EVEN: Parity = Parity(0);
    pub const ODD: Parity = Parity(1);

    pub fn from_i64(n: i64) -> Parity {
        Parity((n.rem_euclid(2)) as u8)
    }

    pub fn flip(self) -> Parity {
        Parity(self.0 ^ 1)
    }

    /// The sign `(-1)^p`.
    pub fn sign(self) -> i64 {
        if self.0 == 0 {
            1
        } else {
            -1
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity(self.0 ^ rhs.0)
    }
}

/// An exact weight vector.
///
/// Coordinates are stored doubled, as integers, so every weight of the
/// half-integer lattice has an exact hashable representation. Construction
/// rejects denominators larger than 2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    algebra: AlgebraId,
    scaled: Vec<i64>,
}

impl Weight {
    pub fn new(algebra: AlgebraId, coords: &[Q]) -> Result<Weight> {
        if coords.len() != algebra.rank() {
            return Err(Error::RankMismatch { expected: algebra.rank(), found: coords.len() });
        }
        let mut scaled = Vec::with_capacity(coords.len());
        for c in coords {
            let d = *c * qi(2);
            if !d.denom().is_one() {
                return Err(Error::DenominatorTooLarge(q_to_string(*c)));
            }
            scaled.push(*d.numer());
        }
        Ok(Weight { algebra, scaled })
    }

    /// Build from doubled integer coordinates.
    pub fn from_scaled(algebra: AlgebraId, scaled: Vec<i64>) -> Weight {
        assert_eq!(scaled.len(), algebra.rank(), "scaled coordinate length");
        Weight { algebra, scaled }
    }

    pub fn zero(algebra: AlgebraId) -> Weight {
        Weight { algebra, scaled: vec![0; algebra.rank()] }
    }

    /// A G(3) weight given on the redundant basis, with `eps3` eliminated
    /// through `eps1 + eps2 + eps3 = 0`.
    pub fn g3_from_eps(e1: Q, e2: Q, e3: Q, d: Q) -> Result<Weight> {
        Weight::new(AlgebraId::G3, &[e1 - e3, e2 - e3, d])
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn scaled(&self) -> &[i64] {
        &self.scaled
    }

    pub fn coord(&self, i: usize) -> Q {
        q(self.scaled[i], 2)
    }

    pub fn coords(&self) -> Vec<Q> {
        self.scaled.iter().map(|&s| q(s, 2)).collect()
    }

    /// The coefficient of `delta` (the last coordinate, for F4/G3 spaces).
    pub fn delta_coord(&self) -> Q {
        self.coord(self.scaled.len() - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.scaled.iter().all(|&s| s == 0)
    }

    /// Re-tag a weight with a space-compatible algebra label.
    pub fn retag(&self, algebra: AlgebraId) -> Weight {
        assert!(
            self.algebra.same_space(algebra),
            "cannot retag {} as {}",
            self.algebra,
            algebra
        );
        Weight { algebra, scaled: self.scaled.clone() }
    }

    /// Membership in the integral weight lattice.
    ///
    /// For F4 this is the lattice spanned by `(eps1+eps2+eps3)/2`, `eps1`,
    /// `eps2` and `delta/2`: the three epsilon coordinates agree modulo 1 and
    /// the delta coordinate is a half-integer. For G3 all coordinates are
    /// integers.
    pub fn is_integral(&self) -> bool {
        match self.algebra.space() {
            AlgebraId::F4 => {
                let p = self.scaled[0].rem_euclid(2);
                self.scaled[1].rem_euclid(2) == p && self.scaled[2].rem_euclid(2) == p
            }
            AlgebraId::G3 => self.scaled.iter().all(|&s| s % 2 == 0),
            // fundamental-weight coordinates: integral means integer coordinates
            _ => self.scaled.iter().all(|&s| s % 2 == 0),
        }
    }

    pub fn checked_add(&self, rhs: &Weight) -> Result<Weight> {
        self.compat(rhs)?;
        Ok(self + rhs)
    }

    fn compat(&self, rhs: &Weight) -> Result<()> {
        if !self.algebra.same_space(rhs.algebra) {
            return Err(Error::AlgebraMismatch {
                expected: self.algebra.to_string(),
                found: rhs.algebra.to_string(),
            });
        }
        Ok(())
    }

    pub fn scale(&self, k: Q) -> Result<Weight> {
        let coords: Vec<Q> = self.coords().iter().map(|c| *c * k).collect();
        Weight::new(self.algebra, &coords)
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert!(self.algebra.same_space(rhs.algebra), "weight space mismatch");
        let scaled = self.scaled.iter().zip(&rhs.scaled).map(|(a, b)| a + b).collect();
        Weight { algebra: self.algebra, scaled }
    }
}

impl std::ops::Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert!(self.algebra.same_space(rhs.algebra), "weight space mismatch");
        let scaled = self.scaled.iter().zip(&rhs.scaled).map(|(a, b)| a - b).collect();
        Weight { algebra: self.algebra, scaled }
    }
}

impl std::ops::Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { algebra: self.algebra, scaled: self.scaled.iter().map(|s| -s).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|c| q_to_string(*c)).collect();
        match self.algebra.space() {
            AlgebraId::F4 | AlgebraId::G3 => {
                let (eps, delta) = parts.split_at(parts.len() - 1);
                write!(f, "({}|{})", eps.join(","), delta[0])
            }
            _ => write!(f, "({})", parts.join(",")),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.algebra, self)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("algebra", self.algebra.name())?;
        m.serialize_entry("scaled", &self.scaled)?;
        m.serialize_entry("scale", &2)?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Weight, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            algebra: String,
            scaled: Vec<i64>,
            scale: i64,
        }
        let raw = Raw::deserialize(d)?;
        if raw.scale != 2 {
            return Err(de::Error::custom("weight scale must be 2"));
        }
        let algebra = AlgebraId::parse(&raw.algebra)
            .ok_or_else(|| de::Error::custom(format!("unknown algebra {:?}", raw.algebra)))?;
        if raw.scaled.len() != algebra.rank() {
            return Err(de::Error::custom("wrong coordinate count"));
        }
        Ok(Weight::from_scaled(algebra, raw.scaled))
    }
}

/// The invariant symmetric bilinear form of a coordinate space.
///
/// F4: `(eps_i, eps_j) = delta_ij`, `(delta, delta) = -3`, mixed pairs 0.
/// G3 (after eliminating eps3): `(eps_i, eps_i) = 2`, `(eps1, eps2) = -1`,
/// `(delta, delta) = -2`, mixed pairs 0. The fiber algebras carry the
/// standard forms in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    algebra: AlgebraId,
    gram: Vec<Vec<Q>>,
}

impl BilinearForm {
    pub fn for_algebra(algebra: AlgebraId) -> BilinearForm {
        let gram: Vec<Vec<Q>> = match algebra.space() {
            AlgebraId::F4 => vec![
                vec![qi(1), qi(0), qi(0), qi(0)],
                vec![qi(0), qi(1), qi(0), qi(0)],
                vec![qi(0), qi(0), qi(1), qi(0)],
                vec![qi(0), qi(0), qi(0), qi(-3)],
            ],
            AlgebraId::G3 => vec![
                vec![qi(2), qi(-1), qi(0)],
                vec![qi(-1), qi(2), qi(0)],
                vec![qi(0), qi(0), qi(-2)],
            ],
            // sl(3) in fundamental-weight coordinates: dual of the A2 Cartan matrix
            AlgebraId::Sl3 => vec![vec![q(2, 3), q(1, 3)], vec![q(1, 3), q(2, 3)]],
            // sl(2) in the fundamental-weight coordinate
            AlgebraId::Sl2 => vec![vec![q(1, 2)]],
            _ => unreachable!(),
        };
        BilinearForm { algebra: algebra.space(), gram }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }
}

/// The invariant pairing `u^T . gram . v`, exactly.
pub fn pair(form: &BilinearForm, u: &Weight, v: &Weight) -> Result<Q> {
    for w in [u, v] {
        if !w.algebra().same_space(form.algebra) {
            return Err(Error::AlgebraMismatch {
                expected: form.algebra.to_string(),
                found: w.algebra().to_string(),
            });
        }
    }
    let (uc, vc) = (u.coords(), v.coords());
    let mut acc = Q::zero();
    for (i, ui) in uc.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in vc.iter().enumerate() {
            if !vj.is_zero() && !form.gram[i][j].is_zero() {
                acc += *ui * form.gram[i][j] * vj;
            }
        }
    }
    Ok(acc)
}

/// Parity of an integral weight.
///
/// F4: `p(eps_i/2) = 0`, `p(delta/2) = 1`, extended additively, so the
/// parity is twice the delta coordinate mod 2. G3: `p(eps_i) = 0`,
/// `p(delta) = 1`, so the parity is the delta coordinate mod 2.
pub fn parity_of(w: &Weight) -> Result<Parity> {
    if !w.is_integral() {
        return Err(Error::NotIntegral(w.to_string()));
    }
    match w.algebra().space() {
        AlgebraId::F4 => Ok(Parity::from_i64(w.scaled()[3])),
        AlgebraId::G3 => Ok(Parity::from_i64(w.scaled()[2] / 2)),
        other => Err(Error::ParityUndefined(other.to_string())),
    }
}

/// A finitely supported integer-coefficient function on the scaled weight
/// lattice; the character ring of the algebra.
///
/// Keys are doubled coordinate vectors; zero coefficients are never stored,
/// and iteration order is lexicographic on the keys, which makes the JSON
/// form canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalCharacter {
    algebra: AlgebraId,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl FormalCharacter {
    pub fn zero(algebra: AlgebraId) -> FormalCharacter {
        FormalCharacter { algebra, terms: BTreeMap::new() }
    }

    /// The unit `e^0`.
    pub fn one(algebra: AlgebraId) -> FormalCharacter {
        FormalCharacter::monomial(&Weight::zero(algebra), 1)
    }

    /// The single term `coeff * e^w`.
    pub fn monomial(w: &Weight, coeff: i64) -> FormalCharacter {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(w.scaled().to_vec(), coeff);
        }
        FormalCharacter { algebra: w.algebra(), terms }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w.scaled()).copied().unwrap_or(0)
    }

    /// Iterate over `(weight, coefficient)` pairs in lexicographic key order.
    pub fn support(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.terms.iter().map(move |(k, &v)| (Weight::from_scaled(self.algebra, k.clone()), v))
    }

    pub(crate) fn add_term(&mut self, key: &[i64], coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(key.to_vec()).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(key);
        }
    }

    pub(crate) fn add_assign(&mut self, rhs: &FormalCharacter) {
        for (k, &v) in &rhs.terms {
            self.add_term(k, v);
        }
    }

    pub(crate) fn add_assign_scaled(&mut self, rhs: &FormalCharacter, factor: i64) {
        if factor == 0 {
            return;
        }
        for (k, &v) in &rhs.terms {
            self.add_term(k, v * factor);
        }
    }

    fn compat(&self, rhs: &FormalCharacter) -> Result<()> {
        if !self.algebra.same_space(rhs.algebra) {
            return Err(Error::AlgebraMismatch {
                expected: self.algebra.to_string(),
                found: rhs.algebra.to_string(),
            });
        }
        Ok(())
    }
}

/// Sum in the group algebra of the weight lattice.
pub fn char_add(a: &FormalCharacter, b: &FormalCharacter) -> Result<FormalCharacter> {
    a.compat(b)?;
    let mut out = a.clone();
    out.add_assign(b);
    Ok(out)
}

/// Difference in the group algebra of the weight lattice.
pub fn char_sub(a: &FormalCharacter, b: &FormalCharacter) -> Result<FormalCharacter> {
    a.compat(b)?;
    let mut out = a.clone();
    out.add_assign_scaled(b, -1);
    Ok(out)
}

/// Product in the group algebra: `e^u * e^v = e^{u+v}`, extended bilinearly.
pub fn char_mul(a: &FormalCharacter, b: &FormalCharacter) -> Result<FormalCharacter> {
    a.compat(b)?;
    let mut out = FormalCharacter::zero(a.algebra);
    let mut key = Vec::new();
    for (ka, &ca) in &a.terms {
        for (kb, &cb) in &b.terms {
            key.clear();
            key.extend(ka.iter().zip(kb).map(|(x, y)| x + y));
            out.add_term(&key, ca * cb);
        }
    }
    Ok(out)
}

/// Evaluation at `e^mu -> 1`: the dimension of a module character.
pub fn specialize_dim(c: &FormalCharacter) -> i64 {
    c.terms.values().sum()
}

/// Signed evaluation `e^mu -> (-1)^{p(mu)}`: the superdimension.
pub fn specialize_sdim(c: &FormalCharacter) -> Result<i64> {
    let mut acc = 0i64;
    for (w, coeff) in c.support() {
        let p = parity_of(&w).map_err(|_| Error::SupportOutsideLattice(w.to_string()))?;
        acc += coeff * p.sign();
    }
    Ok(acc)
}

impl FormalCharacter {
    /// Negate every coefficient.
    pub fn neg(&self) -> FormalCharacter {
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect();
        FormalCharacter { algebra: self.algebra, terms }
    }

    /// Divide every coefficient by 2; fails on odd coefficients.
    pub fn try_halve(&self) -> Result<FormalCharacter> {
        let mut terms = BTreeMap::new();
        for (k, &v) in &self.terms {
            if v % 2 != 0 {
                let w = Weight::from_scaled(self.algebra, k.clone());
                return Err(Error::OddCoefficient(w.to_string()));
            }
            terms.insert(k.clone(), v / 2);
        }
        Ok(FormalCharacter { algebra: self.algebra, terms })
    }

    /// Push the character through a map of the scaled lattice.
    pub fn map_exponents(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> FormalCharacter {
        let mut out = FormalCharacter::zero(self.algebra);
        for (k, &v) in &self.terms {
            out.add_term(&f(k), v);
        }
        out
    }

    /// First negative-coefficient weight, if any.
    pub fn first_negative(&self) -> Option<Weight> {
        self.terms
            .iter()
            .find(|(_, &v)| v < 0)
            .map(|(k, _)| Weight::from_scaled(self.algebra, k.clone()))
    }
}

impl Serialize for FormalCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a BTreeMap<Vec<i64>, i64>);
        struct Term<'a>(&'a [i64], i64);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("exp", self.0)?;
                m.serialize_entry("coeff", &self.1)?;
                m.end()
            }
        }
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (k, &v) in self.0 {
                    seq.serialize_element(&Term(k, v))?;
                }
                seq.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("algebra", self.algebra.name())?;
        m.serialize_entry("terms", &Terms(&self.terms))?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for FormalCharacter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<FormalCharacter, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = FormalCharacter;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a formal character object")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<FormalCharacter, A::Error> {
                let mut algebra: Option<String> = None;
                let mut raw_terms: Option<Vec<RawTerm>> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "algebra" => algebra = Some(map.next_value()?),
                        "terms" => raw_terms = Some(map.next_value()?),
                        other => return Err(de::Error::unknown_field(other, &["algebra", "terms"])),
                    }
                }
                let algebra = algebra.ok_or_else(|| de::Error::missing_field("algebra"))?;
                let algebra = AlgebraId::parse(&algebra)
                    .ok_or_else(|| de::Error::custom(format!("unknown algebra {algebra:?}")))?;
                let mut out = FormalCharacter::zero(algebra);
                for t in raw_terms.ok_or_else(|| de::Error::missing_field("terms"))? {
                    if t.exp.len() != algebra.rank() {
                        return Err(de::Error::custom("wrong exponent length"));
                    }
                    out.add_term(&t.exp, t.coeff);
                }
                Ok(out)
            }
        }
        #[derive(Deserialize)]
        struct RawTerm {
            exp: Vec<i64>,
            coeff: i64,
        }
        d.deserialize_map(V)
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, v) in &self.terms {
            let w = Weight::from_scaled(self.algebra, k.clone());
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{}*e^{}", v, w)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f4(coords: [Q; 4]) -> Weight {
        Weight::new(AlgebraId::F4, &coords).unwrap()
    }

    fn g3(coords: [Q; 3]) -> Weight {
        Weight::new(AlgebraId::G3, &coords).unwrap()
    }

    #[test]
    fn form_values_f4() {
        let form = BilinearForm::for_algebra(AlgebraId::F4);
        let delta = f4([qi(0), qi(0), qi(0), qi(1)]);
        let e1 = f4([qi(1), qi(0), qi(0), qi(0)]);
        let e2 = f4([qi(0), qi(1), qi(0), qi(0)]);
        assert_eq!(pair(&form, &delta, &delta).unwrap(), qi(-3));
        assert_eq!(pair(&form, &e1, &e2).unwrap(), qi(0));
        assert_eq!(pair(&form, &e1, &e1).unwrap(), qi(1));
        assert_eq!(pair(&form, &e1, &delta).unwrap(), qi(0));
    }

    #[test]
    fn form_values_g3() {
        let form = BilinearForm::for_algebra(AlgebraId::G3);
        let e1 = g3([qi(1), qi(0), qi(0)]);
        let e2 = g3([qi(0), qi(1), qi(0)]);
        let delta = g3([qi(0), qi(0), qi(1)]);
        assert_eq!(pair(&form, &e1, &e2).unwrap(), qi(-1));
        assert_eq!(pair(&form, &e1, &e1).unwrap(), qi(2));
        assert_eq!(pair(&form, &delta, &delta).unwrap(), qi(-2));
        // eps3 = -eps1 - eps2 has the same square length as the others
        let e3 = Weight::g3_from_eps(qi(0), qi(0), qi(1), qi(0)).unwrap();
        assert_eq!(pair(&form, &e3, &e3).unwrap(), qi(2));
        assert_eq!(pair(&form, &e3, &e1).unwrap(), qi(-1));
    }

    #[test]
    fn algebra_mismatch_is_an_error() {
        let form = BilinearForm::for_algebra(AlgebraId::F4);
        let u = f4([qi(1), qi(0), qi(0), qi(0)]);
        let v = g3([qi(1), qi(0), qi(0)]);
        assert!(pair(&form, &u, &v).is_err());
    }

    #[test]
    fn parity_values() {
        let half_delta = f4([qi(0), qi(0), qi(0), q(1, 2)]);
        assert_eq!(parity_of(&half_delta).unwrap(), Parity::ODD);
        let e12 = f4([qi(1), qi(1), qi(0), qi(0)]);
        assert_eq!(parity_of(&e12).unwrap(), Parity::EVEN);
        let g = g3([qi(1), qi(0), qi(1)]);
        assert_eq!(parity_of(&g).unwrap(), Parity::ODD);
        // not in the lattice: eps1/2 alone for F4
        let bad = f4([q(1, 2), qi(0), qi(0), qi(0)]);
        assert!(parity_of(&bad).is_err());
    }

    #[test]
    fn char_ring_small_identities() {
        let a = AlgebraId::F4;
        let alpha = f4([qi(1), qi(0), qi(0), qi(0)]);
        let x = char_add(
            &FormalCharacter::monomial(&alpha, 1),
            &FormalCharacter::monomial(&(-&alpha), 1),
        )
        .unwrap();
        // (e^a + e^-a)^2 = e^2a + 2 + e^-2a
        let sq = char_mul(&x, &x).unwrap();
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.coeff(&Weight::zero(a)), 2);
        assert_eq!(sq.coeff(&(&alpha + &alpha)), 1);
        assert_eq!(specialize_dim(&sq), 4);
        // e^0 * c = c
        assert_eq!(char_mul(&FormalCharacter::one(a), &sq).unwrap(), sq);
        // empty character
        assert_eq!(specialize_dim(&FormalCharacter::zero(a)), 0);
        assert_eq!(specialize_dim(&FormalCharacter::one(a)), 1);
    }

    #[test]
    fn sdim_values() {
        assert_eq!(specialize_sdim(&FormalCharacter::one(AlgebraId::F4)).unwrap(), 1);
        let half_delta = f4([qi(0), qi(0), qi(0), q(1, 2)]);
        assert_eq!(specialize_sdim(&FormalCharacter::monomial(&half_delta, 1)).unwrap(), -1);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let mut c = FormalCharacter::zero(AlgebraId::F4);
        c.add_term(&[1, -3, 0, 2], 4);
        c.add_term(&[0, 0, 0, 0], -1);
        c.add_term(&[1, -4, 0, 2], 7);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            "{\"algebra\":\"F4\",\"terms\":[{\"exp\":[0,0,0,0],\"coeff\":-1},\
             {\"exp\":[1,-4,0,2],\"coeff\":7},{\"exp\":[1,-3,0,2],\"coeff\":4}]}"
        );
        let back: FormalCharacter = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(q_to_string(q(-3, 2)), "-3/2");
        assert_eq!(q_to_string(qi(5)), "5");
        assert_eq!(q_from_str("-3/2").unwrap(), q(-3, 2));
        assert_eq!(q_from_str("7").unwrap(), qi(7));
        assert!(q_from_str("a/b").is_err());
    }

    fn arb_weight(algebra: AlgebraId) -> impl Strategy<Value = Weight> {
        prop::collection::vec(-12i64..13, algebra.rank())
            .prop_map(move |scaled| Weight::from_scaled(algebra, scaled))
    }

    fn arb_integral_weight(algebra: AlgebraId) -> impl Strategy<Value = Weight> {
        arb_weight(algebra).prop_map(move |w| {
            let mut scaled = w.scaled().to_vec();
            match algebra.space() {
                AlgebraId::F4 => {
                    let p = scaled[0].rem_euclid(2);
                    scaled[1] += (p - scaled[1].rem_euclid(2)).rem_euclid(2);
                    scaled[2] += (p - scaled[2].rem_euclid(2)).rem_euclid(2);
                }
                _ => {
                    for s in scaled.iter_mut() {
                        if *s % 2 != 0 {
                            *s += 1;
                        }
                    }
                }
            }
            Weight::from_scaled(algebra, scaled)
        })
    }

    fn arb_char(algebra: AlgebraId) -> impl Strategy<Value = FormalCharacter> {
        prop::collection::vec((arb_integral_weight(algebra), -4i64..5), 0..4).prop_map(
            move |terms| {
                let mut c = FormalCharacter::zero(algebra);
                for (w, coeff) in terms {
                    c.add_term(w.scaled(), coeff);
                }
                c
            },
        )
    }

    proptest! {
        #[test]
        fn pair_is_symmetric_and_bilinear(
            u in arb_weight(AlgebraId::F4),
            v in arb_weight(AlgebraId::F4),
            w in arb_weight(AlgebraId::F4),
        ) {
            let form = BilinearForm::for_algebra(AlgebraId::F4);
            prop_assert_eq!(pair(&form, &u, &v).unwrap(), pair(&form, &v, &u).unwrap());
            let uv = &u + &v;
            prop_assert_eq!(
                pair(&form, &uv, &w).unwrap(),
                pair(&form, &u, &w).unwrap() + pair(&form, &v, &w).unwrap()
            );
        }

        #[test]
        fn parity_is_a_lattice_homomorphism(
            u in arb_integral_weight(AlgebraId::F4),
            v in arb_integral_weight(AlgebraId::F4),
        ) {
            let sum = &u + &v;
            prop_assert_eq!(
                parity_of(&sum).unwrap(),
                parity_of(&u).unwrap() + parity_of(&v).unwrap()
            );
        }

        #[test]
        fn char_ring_laws(
            a in arb_char(AlgebraId::G3),
            b in arb_char(AlgebraId::G3),
            c in arb_char(AlgebraId::G3),
        ) {
            let ab = char_mul(&a, &b).unwrap();
            let ba = char_mul(&b, &a).unwrap();
            prop_assert_eq!(&ab, &ba);
            let abc1 = char_mul(&ab, &c).unwrap();
            let abc2 = char_mul(&a, &char_mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(abc1, abc2);
            let d1 = char_mul(&a, &char_add(&b, &c).unwrap()).unwrap();
            let d2 = char_add(&ab, &char_mul(&a, &c).unwrap()).unwrap();
            prop_assert_eq!(d1, d2);
        }

        #[test]
        fn specializations_are_multiplicative(
            a in arb_char(AlgebraId::G3),
            b in arb_char(AlgebraId::G3),
        ) {
            let ab = char_mul(&a, &b).unwrap();
            prop_assert_eq!(specialize_dim(&ab), specialize_dim(&a) * specialize_dim(&b));
            prop_assert_eq!(
                specialize_sdim(&ab).unwrap(),
                specialize_sdim(&a).unwrap() * specialize_sdim(&b).unwrap()
            );
        }
    }
}
