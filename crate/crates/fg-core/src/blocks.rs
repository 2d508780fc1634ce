//! Atypicality, block labels, and the c-parametrization of the dominant
//! weights of an atypical block.
//!
//! An atypical block of F(4) is labeled by a pair `(a, b)` with
//! `a >= b >= 1` and `a = b (mod 3)`; symmetric blocks (`a = b`) have
//! D-shaped quivers with two special endpoints `lambda1`, `lambda2` and a
//! branch vertex `lambda0`; non-symmetric blocks are A-shaped chains with a
//! distinguished vertex `lambda0` at `c = 0`. An atypical block of G(3) is
//! labeled by an odd `a >= 1` and is always D-shaped.
//!
//! Every dominant weight of an atypical block is pinned by one half-integer
//! `c`. The map `c -> lambda_c` is given by closed interval-wise formulas;
//! `c` equals the delta coordinate of `lambda_c + rho` on the J intervals
//! and on I1..I4, and its negative on I5..I8.

use crate::rootsystems::{Root, RootSystem};
use crate::weightspace::{
    pair, parity_of, q, q_to_string, qi, AlgebraId, Parity, Q, Weight,
};
use crate::weylgroup::{is_dominant_coordinates, WeylGroup};
use crate::{Error, Result};
use num::{One, Signed, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use std::fmt;

/// Central-character label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BlockId {
    /// Typical central character: a singleton block.
    Typical(Weight),
    /// Atypical F(4) block; `a >= b >= 1`, `a = b (mod 3)`.
    F4 { a: i64, b: i64 },
    /// Atypical G(3) block; `a` odd, `a >= 1`.
    G3 { a: i64 },
}

impl BlockId {
    pub fn algebra(&self) -> AlgebraId {
        match self {
            BlockId::Typical(w) => w.algebra(),
            BlockId::F4 { .. } => AlgebraId::F4,
            BlockId::G3 { .. } => AlgebraId::G3,
        }
    }

    pub fn is_atypical(&self) -> bool {
        !matches!(self, BlockId::Typical(_))
    }

    /// Symmetric F4 blocks and all G3 blocks carry D-shaped quivers.
    pub fn is_d_shaped(&self) -> bool {
        match self {
            BlockId::F4 { a, b } => a == b,
            BlockId::G3 { .. } => true,
            BlockId::Typical(_) => false,
        }
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockId::Typical(w) => write!(f, "typical({})", w),
            BlockId::F4 { a, b } => write!(f, "F4({},{})", a, b),
            BlockId::G3 { a } => write!(f, "G3({})", a),
        }
    }
}

/// The wall parameters of a non-symmetric F4 block: `t1 = (2a+b)/3`,
/// `t2 = (a+2b)/3`, `t3 = (a-b)/3`, with `t1 = t2 + t3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CParams {
    pub t1: Q,
    pub t2: Q,
    pub t3: Q,
}

impl CParams {
    pub fn of(a: i64, b: i64) -> CParams {
        CParams { t1: q(2 * a + b, 3), t2: q(a + 2 * b, 3), t3: q(a - b, 3) }
    }
}

/// Which closed-form family produced a block weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IntervalLabel {
    J1,
    J2,
    J3,
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
    I7,
    I8,
    /// The exceptional negative-c formulas producing `lambda1`.
    Special,
}

impl IntervalLabel {
    pub fn name(self) -> &'static str {
        match self {
            IntervalLabel::J1 => "J1",
            IntervalLabel::J2 => "J2",
            IntervalLabel::J3 => "J3",
            IntervalLabel::I1 => "I1",
            IntervalLabel::I2 => "I2",
            IntervalLabel::I3 => "I3",
            IntervalLabel::I4 => "I4",
            IntervalLabel::I5 => "I5",
            IntervalLabel::I6 => "I6",
            IntervalLabel::I7 => "I7",
            IntervalLabel::I8 => "I8",
            IntervalLabel::Special => "special",
        }
    }
}

/// Marker for the three distinguished vertices of a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecialVertex {
    Lambda0,
    Lambda1,
    Lambda2,
}

/// One dominant weight of an atypical block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockWeight {
    pub block: BlockId,
    pub c: Q,
    pub lambda: Weight,
    pub vanishing_root: Root,
    pub interval: IntervalLabel,
    pub special: Option<SpecialVertex>,
}

impl fmt::Display for BlockWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[c={}]", self.block, q_to_string(self.c))
    }
}

impl Serialize for BlockWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(6))?;
        m.serialize_entry("block", &self.block.to_string())?;
        m.serialize_entry("c", &q_to_string(self.c))?;
        m.serialize_entry("weight", &self.lambda)?;
        m.serialize_entry("vanishing_root", &self.vanishing_root)?;
        m.serialize_entry("interval", self.interval.name())?;
        m.serialize_entry("special", &self.special)?;
        m.end()
    }
}

/// Degree of atypicality of a dominant weight: 1 when some isotropic root
/// is orthogonal to `lambda + rho`, else 0 (the defect of both algebras
/// is 1, so no higher degree occurs).
pub fn atypicality(rs: &RootSystem, lambda: &Weight) -> Result<u8> {
    if !is_dominant_coordinates(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let shifted = lambda + &rs.rho;
    for r in rs.isotropic_positive() {
        if pair(&rs.form, &shifted, &r.weight)?.is_zero() {
            return Ok(1);
        }
    }
    Ok(0)
}

/// The positive isotropic roots orthogonal to `lambda + rho`.
///
/// Exactly one root vanishes except at the `c = 0` vertex of a
/// non-symmetric F4 block, where the delta coordinate of `lambda + rho` is
/// zero and the vanishing roots come in an epsilon-opposite pair.
pub fn vanishing_roots(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Root>> {
    let shifted = lambda + &rs.rho;
    let mut hits = Vec::new();
    for r in rs.isotropic_positive() {
        if pair(&rs.form, &shifted, &r.weight)?.is_zero() {
            hits.push(r.clone());
        }
    }
    if hits.is_empty() {
        return Err(Error::NoVanishingRoot(lambda.to_string()));
    }
    Ok(hits)
}

fn reference_isotropic(algebra: AlgebraId) -> Weight {
    match algebra {
        // (eps1+eps2+eps3-delta)/2
        AlgebraId::F4 => Weight::from_scaled(AlgebraId::F4, vec![1, 1, 1, -1]),
        // eps1+eps2+delta
        AlgebraId::G3 => Weight::from_scaled(AlgebraId::G3, vec![2, 2, 2]),
        _ => panic!("blocks exist only for the superalgebras"),
    }
}

/// Central-character label of a dominant weight.
///
/// For an atypical weight: move the vanishing root onto the reference
/// isotropic root by a Weyl element, sort the epsilon part of the image of
/// `lambda + rho`, and read the block label off consecutive differences
/// (F4) or the sl(2) pairing (G3), normalizing `a >= b`.
pub fn block_of(rs: &RootSystem, group: &WeylGroup, lambda: &Weight) -> Result<BlockId> {
    if atypicality(rs, lambda)? == 0 {
        return Ok(BlockId::Typical(lambda.clone()));
    }
    let betas = vanishing_roots(rs, lambda)?;
    let reference = reference_isotropic(rs.algebra);
    let shifted = lambda + &rs.rho;
    match rs.algebra {
        AlgebraId::F4 => {
            for beta in &betas {
                for e in &group.elements {
                    if e.apply(&beta.weight) != reference {
                        continue;
                    }
                    let v = e.apply(&shifted);
                    let s = v.scaled();
                    if s[0] >= s[1] && s[1] >= s[2] {
                        let (a, b) = ((s[0] - s[1]) / 2, (s[1] - s[2]) / 2);
                        let (a, b) = if a >= b { (a, b) } else { (b, a) };
                        debug_assert!(a >= 1 && b >= 1 && (a - b) % 3 == 0);
                        return Ok(BlockId::F4 { a, b });
                    }
                }
            }
            Err(Error::NoBlockElement(lambda.to_string()))
        }
        AlgebraId::G3 => {
            for beta in &betas {
                for e in &group.elements {
                    if e.apply(&beta.weight) != reference {
                        continue;
                    }
                    let v = e.apply(&shifted);
                    // sl(2) label: (v, eps1 - eps2)/3 with this form
                    let sl2 = Weight::from_scaled(AlgebraId::G3, vec![2, -2, 0]);
                    let a = pair(&rs.form, &v, &sl2)? / qi(3);
                    if a.is_positive() && a.denom().is_one() {
                        let a = *a.numer();
                        debug_assert!(a % 2 == 1);
                        return Ok(BlockId::G3 { a });
                    }
                }
            }
            Err(Error::NoBlockElement(lambda.to_string()))
        }
        _ => Err(Error::ParityUndefined(rs.algebra.to_string())),
    }
}

/// The closed-form data of one allowed `c`: interval label, doubled
/// coordinates of `lambda_c + rho`, and the vanishing root vector.
fn classify_c(block: &BlockId, c: Q) -> Option<(IntervalLabel, Vec<i64>, Vec<i64>)> {
    use IntervalLabel::*;
    let two = |x: Q| -> i64 {
        let d = x * qi(2);
        debug_assert!(d.denom().is_one());
        *d.numer()
    };
    match block {
        BlockId::F4 { a, b } if a == b => {
            let a = qi(*a);
            // the two exceptional negative values producing lambda1
            if a.is_one() && c == q(-3, 2) {
                // e1 - e3 - 2c * (eps1+eps2+eps3-delta)/2
                let bq = [qi(1) - c, -c, qi(-1) - c, c];
                return Some((Special, bq.iter().map(|x| two(*x)).collect(), vec![-1, -1, -1, 1]));
            }
            if !a.is_one() && c == q(-1, 2) {
                let bq = [a - c, a + c, -c, c];
                return Some((Special, bq.iter().map(|x| two(*x)).collect(), vec![-1, 1, -1, 1]));
            }
            if c > a {
                let bq = [a + c, c, c - a, c];
                return Some((J1, bq.iter().map(|x| two(*x)).collect(), vec![1, 1, 1, 1]));
            }
            if c > a / qi(2) && c < a {
                let bq = [a + c, c, a - c, c];
                return Some((J2, bq.iter().map(|x| two(*x)).collect(), vec![1, 1, -1, 1]));
            }
            if c.is_positive() && c < a / qi(2) {
                let bq = [a + c, a - c, c, c];
                return Some((J3, bq.iter().map(|x| two(*x)).collect(), vec![1, -1, 1, 1]));
            }
            None
        }
        BlockId::F4 { a, b } => {
            let t = CParams::of(*a, *b);
            let (t1, t2, t3) = (t.t1, t.t2, t.t3);
            let table: [(IntervalLabel, bool, [Q; 4], [i64; 4]); 8] = [
                (I1, c > t2, [t1 + c, c - t3, c - t2, c], [1, 1, 1, 1]),
                (I2, c > t1 / qi(2) && c < t2, [t1 + c, c - t3, t2 - c, c], [1, 1, -1, 1]),
                (I3, c > t3 && c < t1 / qi(2), [t1 + c, t2 - c, c - t3, c], [1, -1, 1, 1]),
                (I4, !c.is_negative() && c < t3, [t1 + c, t2 - c, t3 - c, c], [1, -1, -1, 1]),
                (I5, c > -t3 / qi(2) && c.is_negative(), [t1 + c, t2 - c, t3 - c, -c], [-1, 1, 1, 1]),
                (I6, c > -t2 / qi(2) && c < -t3 / qi(2), [t2 - c, t1 + c, t3 - c, -c], [1, -1, 1, 1]),
                (I7, c > -t1 && c < -t2 / qi(2), [t2 - c, t3 - c, t1 + c, -c], [1, 1, -1, 1]),
                (I8, c < -t1, [t2 - c, t3 - c, -t1 - c, -c], [1, 1, 1, 1]),
            ];
            for (label, cond, bq, root) in table {
                if cond {
                    return Some((label, bq.iter().map(|x| two(*x)).collect(), root.to_vec()));
                }
            }
            None
        }
        BlockId::G3 { a } => {
            let a = qi(*a);
            if a.is_one() && c == q(-5, 2) {
                return Some((Special, vec![4, 6, -5], vec![-2, -2, 2]));
            }
            if !a.is_one() && c == q(-1, 2) {
                let bq = [a / qi(2) - c, a, c];
                return Some((Special, bq.iter().map(|x| two(*x)).collect(), vec![-2, 0, 2]));
            }
            if c > qi(3) * a / qi(2) {
                let bq = [c - a / qi(2), c + a / qi(2), c];
                return Some((J1, bq.iter().map(|x| two(*x)).collect(), vec![2, 2, 2]));
            }
            if c > a / qi(2) && c < qi(3) * a / qi(2) {
                let bq = [a, c + a / qi(2), c];
                return Some((J2, bq.iter().map(|x| two(*x)).collect(), vec![0, 2, 2]));
            }
            if c.is_positive() && c < a / qi(2) {
                let bq = [c + a / qi(2), a, c];
                return Some((J3, bq.iter().map(|x| two(*x)).collect(), vec![2, 0, 2]));
            }
            None
        }
        BlockId::Typical(_) => None,
    }
}

/// Half-integer candidates for `c` in a closed range, in ascending order.
fn c_candidates(block: &BlockId, c_lo: Q, c_hi: Q) -> Vec<Q> {
    let algebra = block.algebra();
    let mut out = Vec::new();
    // G3 uses half-odd c, F4 every half-integer
    let start = (c_lo * qi(2)).ceil().to_integer();
    let end = (c_hi * qi(2)).floor().to_integer();
    for d in start..=end {
        if algebra == AlgebraId::G3 && d.rem_euclid(2) == 0 {
            continue;
        }
        out.push(q(d, 2));
    }
    out
}

/// The three distinguished c values of a block, ascending:
/// `lambda1 < lambda2 < lambda0` for D-shaped blocks. A-shaped blocks have
/// the single distinguished vertex at `c = 0`.
pub fn special_c_values(block: &BlockId) -> Result<Vec<(Q, SpecialVertex)>> {
    match block {
        BlockId::Typical(w) => Err(Error::TypicalBlock(w.to_string())),
        BlockId::F4 { a, b } if a != b => Ok(vec![(Q::zero(), SpecialVertex::Lambda0)]),
        _ => {
            // two smallest allowed c are the endpoints, the next is the branch
            let mut found = Vec::new();
            let lo = if block.algebra() == AlgebraId::G3 { q(-5, 2) } else { q(-3, 2) };
            for c in c_candidates(block, lo, qi(100)) {
                if classify_c(block, c).is_some() {
                    found.push(c);
                    if found.len() == 3 {
                        break;
                    }
                }
            }
            assert_eq!(found.len(), 3);
            Ok(vec![
                (found[0], SpecialVertex::Lambda1),
                (found[1], SpecialVertex::Lambda2),
                (found[2], SpecialVertex::Lambda0),
            ])
        }
    }
}

/// Build the block weight at one allowed `c`, if `c` is allowed.
pub fn block_weight_at(rs: &RootSystem, block: &BlockId, c: Q) -> Result<BlockWeight> {
    let (interval, shifted_scaled, root_scaled) = classify_c(block, c).ok_or_else(|| {
        Error::CNotAllowed(q_to_string(c), block.to_string())
    })?;
    let algebra = block.algebra();
    let shifted = Weight::from_scaled(algebra, shifted_scaled);
    let lambda = &shifted - &rs.rho;
    debug_assert!(is_dominant_coordinates(&lambda), "{} at c={}", block, q_to_string(c));

    // the interval tables carry the canonical vanishing root; check it
    // against the recomputed set rather than trusting it blindly
    let candidates = vanishing_roots(rs, &lambda)?;
    let root = candidates
        .iter()
        .find(|r| r.weight.scaled() == &root_scaled[..])
        .cloned()
        .ok_or_else(|| Error::NoVanishingRoot(lambda.to_string()))?;
    debug_assert!(candidates.len() == 1 || c.is_zero());

    let special = special_c_values(block)?
        .into_iter()
        .find(|(sc, _)| *sc == c)
        .map(|(_, v)| v);
    Ok(BlockWeight { block: block.clone(), c, lambda, vanishing_root: root, interval, special })
}

/// Enumerate the dominant weights of an atypical block with `c` in
/// `[c_lo, c_hi]`, ascending in `c`.
pub fn weights_of_block(
    rs: &RootSystem,
    block: &BlockId,
    c_lo: Q,
    c_hi: Q,
) -> Result<Vec<BlockWeight>> {
    if !block.is_atypical() {
        return Err(Error::TypicalBlock(block.to_string()));
    }
    if block.algebra() != rs.algebra {
        return Err(Error::AlgebraMismatch {
            expected: rs.algebra.to_string(),
            found: block.algebra().to_string(),
        });
    }
    let mut out = Vec::new();
    for c in c_candidates(block, c_lo, c_hi) {
        if classify_c(block, c).is_some() {
            out.push(block_weight_at(rs, block, c)?);
        }
    }
    Ok(out)
}

/// All allowed `c` of a block in a closed range, ascending.
pub fn allowed_c_in(block: &BlockId, c_lo: Q, c_hi: Q) -> Vec<Q> {
    c_candidates(block, c_lo, c_hi)
        .into_iter()
        .filter(|&c| classify_c(block, c).is_some())
        .collect()
}

/// Locate a dominant weight inside a given block's enumeration, if it
/// belongs there.
pub fn find_in_block(rs: &RootSystem, block: &BlockId, lambda: &Weight) -> Option<BlockWeight> {
    let d = (lambda + &rs.rho).delta_coord();
    for c in [d, -d] {
        if classify_c(block, c).is_some() {
            if let Ok(bw) = block_weight_at(rs, block, c) {
                if bw.lambda == *lambda {
                    return Some(bw);
                }
            }
        }
    }
    None
}

/// Find the block weight of a dominant atypical weight.
pub fn block_weight_of(
    rs: &RootSystem,
    group: &WeylGroup,
    lambda: &Weight,
) -> Result<BlockWeight> {
    let block = block_of(rs, group, lambda)?;
    if !block.is_atypical() {
        return Err(Error::Typical(lambda.to_string()));
    }
    let d = (lambda + &rs.rho).delta_coord();
    for c in [d, -d] {
        if classify_c(&block, c).is_some() {
            let bw = block_weight_at(rs, &block, c)?;
            if bw.lambda == *lambda {
                return Ok(bw);
            }
        }
    }
    Err(Error::Internal(format!("{} not found in its block enumeration", lambda)))
}

/// Genericity: far from the walls of the Weyl chamber, where the direct
/// character formula needs no correction. F(4): `c > t2 + 3/2` or
/// `c < -t1 - 3/2`; G(3): `c > 3a/2 - 2`.
pub fn is_generic(bw: &BlockWeight) -> bool {
    match &bw.block {
        BlockId::F4 { a, b } => {
            let t = CParams::of(*a, *b);
            bw.c > t.t2 + q(3, 2) || bw.c < -t.t1 - q(3, 2)
        }
        BlockId::G3 { a } => bw.c > q(3 * a, 2) - qi(2),
        BlockId::Typical(_) => false,
    }
}

/// The sign exponent `s(lambda)` entering the superdimension formula.
///
/// For F(4) the parity of the interval decides: `s = p(lambda)` on J1, J3,
/// I1, I3, I6, I8 and `s = p(lambda) + 1` on J2, I2, I4, I5, I7. For G(3)
/// the assignment forced by the branch-vertex superdimension is the
/// complementary one: `s = p(lambda)` on J2 and `s = p(lambda) + 1` on J1
/// and J3. Undefined at the endpoints `lambda1`, `lambda2`.
pub fn sign_s(bw: &BlockWeight) -> Result<Parity> {
    if matches!(bw.special, Some(SpecialVertex::Lambda1) | Some(SpecialVertex::Lambda2)) {
        return Err(Error::SpecialWeight(bw.to_string()));
    }
    let p = parity_of(&bw.lambda)?;
    use IntervalLabel::*;
    let flip = match bw.block.algebra() {
        AlgebraId::F4 => matches!(bw.interval, J2 | I2 | I4 | I5 | I7),
        AlgebraId::G3 => matches!(bw.interval, J1 | J3),
        _ => unreachable!(),
    };
    Ok(if flip { p.flip() } else { p })
}

/// Ascend/descend one step along the allowed-c order.
fn step_c(block: &BlockId, c: Q, up: bool) -> Option<Q> {
    let step = if block.algebra() == AlgebraId::G3 { qi(1) } else { q(1, 2) };
    let mut probe = c;
    for _ in 0..64 {
        probe = if up { probe + step } else { probe - step };
        if classify_c(block, probe).is_some() {
            return Some(probe);
        }
    }
    None
}

/// The quiver neighbor of a non-special chain vertex in the direction of
/// `lambda0` (the constituent partner of its degree-zero cohomology).
pub fn adjacent_toward_lambda0(rs: &RootSystem, bw: &BlockWeight) -> Result<BlockWeight> {
    let specials = special_c_values(&bw.block)?;
    let c0 = specials.last().unwrap().0;
    match bw.special {
        Some(SpecialVertex::Lambda0) => Err(Error::SpecialWeight(bw.to_string())),
        Some(_) => block_weight_at(rs, &bw.block, c0),
        None => {
            if bw.block.is_d_shaped() {
                // chain runs upward from lambda0
                let c = step_c(&bw.block, bw.c, false).unwrap();
                block_weight_at(rs, &bw.block, c)
            } else {
                let down = bw.c > c0;
                let c = step_c(&bw.block, bw.c, !down).unwrap();
                block_weight_at(rs, &bw.block, c)
            }
        }
    }
}

/// Quiver neighbors of a vertex.
pub fn neighbors(rs: &RootSystem, bw: &BlockWeight) -> Result<Vec<BlockWeight>> {
    let specials = special_c_values(&bw.block)?;
    if bw.block.is_d_shaped() {
        let (c1, c2, c0) = (specials[0].0, specials[1].0, specials[2].0);
        match bw.special {
            Some(SpecialVertex::Lambda1) | Some(SpecialVertex::Lambda2) => {
                Ok(vec![block_weight_at(rs, &bw.block, c0)?])
            }
            Some(SpecialVertex::Lambda0) => {
                let c3 = step_c(&bw.block, c0, true).unwrap();
                Ok(vec![
                    block_weight_at(rs, &bw.block, c1)?,
                    block_weight_at(rs, &bw.block, c2)?,
                    block_weight_at(rs, &bw.block, c3)?,
                ])
            }
            None => {
                let mut out = Vec::new();
                // toward lambda0
                out.push(adjacent_toward_lambda0(rs, bw)?);
                // away from lambda0
                let c = step_c(&bw.block, bw.c, true).unwrap();
                out.push(block_weight_at(rs, &bw.block, c)?);
                Ok(out)
            }
        }
    } else {
        // chain: previous and next allowed c
        let mut out = Vec::new();
        if let Some(c) = step_c(&bw.block, bw.c, false) {
            out.push(block_weight_at(rs, &bw.block, c)?);
        }
        if let Some(c) = step_c(&bw.block, bw.c, true) {
            out.push(block_weight_at(rs, &bw.block, c)?);
        }
        Ok(out)
    }
}
