//! Root data for F(4), G(3), their even parts and the fiber algebras,
//! plus odd reflections and the orbit of simple-root systems.
//!
//! Root lists, distinguished bases, Cartan matrices and the rho vectors are
//! constructed from scratch; the closed-form rho values are asserted during
//! construction so a bad root table cannot survive long.

use crate::weightspace::{pair, q, qi, AlgebraId, BilinearForm, Parity, Q, Weight};
use crate::{Error, Result};
use num::{Signed, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use std::collections::VecDeque;

/// A root: its weight vector, its parity, and whether it is isotropic
/// (zero square length).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    pub weight: Weight,
    pub parity: Parity,
    pub isotropic: bool,
}

impl Root {
    fn new(form: &BilinearForm, weight: Weight, parity: Parity) -> Root {
        let norm = pair(form, &weight, &weight).expect("root in its own space");
        Root { weight, parity, isotropic: norm.is_zero() }
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("weight", &self.weight)?;
        m.serialize_entry("parity", &self.parity.0)?;
        m.serialize_entry("isotropic", &self.isotropic)?;
        m.end()
    }
}

/// Typed root lists, the distinguished base, the Cartan matrix and the rho
/// vectors of one algebra.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub algebra: AlgebraId,
    pub form: BilinearForm,
    pub delta0_plus: Vec<Root>,
    pub delta1_plus: Vec<Root>,
    pub base: Vec<Root>,
    pub cartan: Vec<Vec<Q>>,
    pub rho0: Weight,
    pub rho1: Weight,
    pub rho: Weight,
}

fn half_sum(algebra: AlgebraId, roots: &[Root]) -> Weight {
    let mut acc = Weight::zero(algebra);
    for r in roots {
        acc = &acc + &r.weight;
    }
    acc.scale(q(1, 2)).expect("half sum stays half-integral")
}

/// Construct the full typed root data of an algebra.
pub fn build_root_system(algebra: AlgebraId) -> RootSystem {
    let form = BilinearForm::for_algebra(algebra);
    let even = Parity::EVEN;
    let odd = Parity::ODD;
    let w = |scaled: Vec<i64>| Weight::from_scaled(algebra, scaled);

    let (delta0_plus, delta1_plus, base): (Vec<Root>, Vec<Root>, Vec<Root>) = match algebra {
        AlgebraId::F4 | AlgebraId::B3xA1 => {
            // doubled coordinates in (eps1, eps2, eps3, delta)
            let mut evens = vec![
                w(vec![0, 0, 0, 2]),
                w(vec![2, 0, 0, 0]),
                w(vec![0, 2, 0, 0]),
                w(vec![0, 0, 2, 0]),
                w(vec![2, -2, 0, 0]),
                w(vec![2, 2, 0, 0]),
                w(vec![2, 0, -2, 0]),
                w(vec![2, 0, 2, 0]),
                w(vec![0, 2, -2, 0]),
                w(vec![0, 2, 2, 0]),
            ];
            let mut odds = Vec::new();
            if algebra == AlgebraId::F4 {
                for s1 in [1i64, -1] {
                    for s2 in [1i64, -1] {
                        for s3 in [1i64, -1] {
                            odds.push(w(vec![s1, s2, s3, 1]));
                        }
                    }
                }
            }
            let base = if algebra == AlgebraId::F4 {
                vec![
                    Root::new(&form, w(vec![-1, -1, -1, 1]), odd),
                    Root::new(&form, w(vec![0, 0, 2, 0]), even),
                    Root::new(&form, w(vec![0, 2, -2, 0]), even),
                    Root::new(&form, w(vec![2, -2, 0, 0]), even),
                ]
            } else {
                // B3 simple roots then the A1 root
                vec![
                    Root::new(&form, w(vec![2, -2, 0, 0]), even),
                    Root::new(&form, w(vec![0, 2, -2, 0]), even),
                    Root::new(&form, w(vec![0, 0, 2, 0]), even),
                    Root::new(&form, w(vec![0, 0, 0, 2]), even),
                ]
            };
            let evens = evens.drain(..).map(|v| Root::new(&form, v, even)).collect();
            let odds = odds.drain(..).map(|v| Root::new(&form, v, odd)).collect();
            (evens, odds, base)
        }
        AlgebraId::G3 | AlgebraId::G2xA1 => {
            // doubled coordinates in (eps1, eps2, delta); eps3 = -eps1-eps2
            let mut evens = vec![
                w(vec![2, 0, 0]),
                w(vec![0, 2, 0]),
                w(vec![2, 2, 0]),
                w(vec![0, 0, 4]),
                w(vec![-2, 2, 0]),
                w(vec![4, 2, 0]),
                w(vec![2, 4, 0]),
            ];
            let mut odds = Vec::new();
            if algebra == AlgebraId::G3 {
                odds = vec![
                    w(vec![0, 0, 2]),
                    w(vec![2, 0, 2]),
                    w(vec![-2, 0, 2]),
                    w(vec![0, 2, 2]),
                    w(vec![0, -2, 2]),
                    w(vec![-2, -2, 2]),
                    w(vec![2, 2, 2]),
                ];
            }
            let base = if algebra == AlgebraId::G3 {
                vec![
                    Root::new(&form, w(vec![-2, -2, 2]), odd),
                    Root::new(&form, w(vec![2, 0, 0]), even),
                    Root::new(&form, w(vec![-2, 2, 0]), even),
                ]
            } else {
                vec![
                    Root::new(&form, w(vec![2, 0, 0]), even),
                    Root::new(&form, w(vec![-2, 2, 0]), even),
                    Root::new(&form, w(vec![0, 0, 4]), even),
                ]
            };
            let evens = evens.drain(..).map(|v| Root::new(&form, v, even)).collect();
            let odds = odds.drain(..).map(|v| Root::new(&form, v, odd)).collect();
            (evens, odds, base)
        }
        AlgebraId::Sl3 => {
            // fundamental-weight coordinates; simple roots (2,-1) and (-1,2)
            let evens = vec![
                Root::new(&form, w(vec![4, -2]), even),
                Root::new(&form, w(vec![-2, 4]), even),
                Root::new(&form, w(vec![2, 2]), even),
            ];
            let base = vec![
                Root::new(&form, w(vec![4, -2]), even),
                Root::new(&form, w(vec![-2, 4]), even),
            ];
            (evens, Vec::new(), base)
        }
        AlgebraId::Sl2 => {
            let evens = vec![Root::new(&form, w(vec![4]), even)];
            let base = vec![Root::new(&form, w(vec![4]), even)];
            (evens, Vec::new(), base)
        }
    };

    let rho0 = half_sum(algebra, &delta0_plus);
    let rho1 = half_sum(algebra, &delta1_plus);
    let rho = &rho0 - &rho1;
    let cartan = cartan_matrix(&base, &form).expect("distinguished base is independent");

    let rs =
        RootSystem { algebra, form, delta0_plus, delta1_plus, base, cartan, rho0, rho1, rho };

    // pin the construction against the closed forms
    match algebra {
        AlgebraId::F4 => {
            assert_eq!(rs.rho.scaled(), &[5, 3, 1, -3]);
            assert_eq!(rs.rho0.scaled(), &[5, 3, 1, 1]);
            assert_eq!(rs.rho1.scaled(), &[0, 0, 0, 4]);
            assert_eq!(rs.delta0_plus.len(), 10);
            assert_eq!(rs.delta1_plus.len(), 8);
        }
        AlgebraId::G3 => {
            assert_eq!(rs.rho.scaled(), &[4, 6, -5]);
            assert_eq!(rs.rho1.scaled(), &[0, 0, 7]);
            assert_eq!(rs.delta0_plus.len(), 7);
            assert_eq!(rs.delta1_plus.len(), 7);
        }
        _ => {}
    }
    rs
}

impl RootSystem {
    /// Every root, positive and negative.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut out = Vec::with_capacity(2 * (self.delta0_plus.len() + self.delta1_plus.len()));
        for r in self.delta0_plus.iter().chain(&self.delta1_plus) {
            out.push(r.clone());
            out.push(Root { weight: -&r.weight, parity: r.parity, isotropic: r.isotropic });
        }
        out
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.delta0_plus
            .iter()
            .chain(&self.delta1_plus)
            .any(|r| r.weight == *w || -&r.weight == *w)
    }

    /// Positive isotropic roots (for F4 all odd roots, for G3 all odd roots
    /// except delta).
    pub fn isotropic_positive(&self) -> impl Iterator<Item = &Root> {
        self.delta1_plus.iter().filter(|r| r.isotropic)
    }

    /// The even subalgebra's root system in the same coordinate space.
    pub fn even_part(&self) -> RootSystem {
        match self.algebra {
            AlgebraId::F4 => build_root_system(AlgebraId::B3xA1),
            AlgebraId::G3 => build_root_system(AlgebraId::G2xA1),
            _ => self.clone(),
        }
    }
}

/// Rank of a rational matrix, by Gaussian elimination.
fn rank(mut m: Vec<Vec<Q>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        if let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) {
            m.swap(r, p);
            let inv = m[r][c];
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c] / inv;
                    for j in c..cols {
                        let sub = m[r][j] * f;
                        m[i][j] -= sub;
                    }
                }
            }
            r += 1;
        }
    }
    r
}

/// Cartan matrix of an ordered base.
///
/// Rows attached to non-isotropic simple roots are the coroot pairings
/// `2(a_i, a_j)/(a_i, a_i)`. A row attached to an isotropic root is only
/// defined up to scale; it is normalized by its first nonzero entry, which
/// reproduces the distinguished integer matrices of both algebras.
pub fn cartan_matrix(base: &[Root], form: &BilinearForm) -> Result<Vec<Vec<Q>>> {
    let vectors: Vec<Vec<Q>> = base.iter().map(|r| r.weight.coords()).collect();
    if rank(vectors) != base.len() {
        return Err(Error::DegenerateBase);
    }
    let n = base.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut row: Vec<Q> = Vec::with_capacity(n);
        for j in 0..n {
            row.push(pair(form, &base[i].weight, &base[j].weight)?);
        }
        if base[i].isotropic {
            let pivot = row.iter().copied().find(|x| !x.is_zero());
            if let Some(p) = pivot {
                for x in row.iter_mut() {
                    *x /= p;
                }
            }
        } else {
            let norm = pair(form, &base[i].weight, &base[i].weight)?;
            for x in row.iter_mut() {
                *x = *x * qi(2) / norm;
            }
        }
        out.push(row);
    }
    Ok(out)
}

/// A base together with the positive system it determines.
#[derive(Clone, Debug)]
pub struct BaseState {
    pub base: Vec<Root>,
    pub positive: Vec<Root>,
}

impl BaseState {
    /// The distinguished base of a system with its positive roots.
    pub fn distinguished(rs: &RootSystem) -> BaseState {
        let mut positive: Vec<Root> = rs.delta0_plus.clone();
        positive.extend(rs.delta1_plus.iter().cloned());
        BaseState { base: rs.base.clone(), positive }
    }

    /// Order-insensitive key for deduplicating bases.
    pub fn base_key(&self) -> Vec<Vec<i64>> {
        let mut key: Vec<Vec<i64>> = self.base.iter().map(|r| r.weight.scaled().to_vec()).collect();
        key.sort();
        key
    }

    fn positive_key(&self) -> Vec<Vec<i64>> {
        let mut key: Vec<Vec<i64>> =
            self.positive.iter().map(|r| r.weight.scaled().to_vec()).collect();
        key.sort();
        key
    }
}

/// Reflect a base state in an odd isotropic simple root.
///
/// The base transforms by `a -> -a`, `b -> b` when `(a,b) = 0` and
/// `b -> b + a` otherwise; the positive system swaps `a` for `-a`
/// (and `2a` for `-2a` when `2a` happens to be a root).
pub fn odd_reflection(rs: &RootSystem, state: &BaseState, alpha: &Root) -> Result<BaseState> {
    let pos = state
        .base
        .iter()
        .position(|r| r.weight == alpha.weight)
        .ok_or_else(|| Error::NotInBase(alpha.weight.to_string()))?;
    let alpha = &state.base[pos];
    if alpha.parity != Parity::ODD || !alpha.isotropic {
        return Err(Error::NotIsotropic(alpha.weight.to_string()));
    }

    let mut base = Vec::with_capacity(state.base.len());
    for (i, beta) in state.base.iter().enumerate() {
        if i == pos {
            base.push(Root {
                weight: -&beta.weight,
                parity: beta.parity,
                isotropic: beta.isotropic,
            });
        } else {
            let coupling = pair(&rs.form, &alpha.weight, &beta.weight)?;
            if coupling.is_zero() {
                base.push(beta.clone());
            } else {
                let weight = &beta.weight + &alpha.weight;
                let parity = beta.parity + alpha.parity;
                base.push(Root::new(&rs.form, weight, parity));
            }
        }
    }

    let mut swap_out = vec![alpha.weight.clone()];
    let double = alpha.weight.scale(qi(2))?;
    if rs.is_root(&double) {
        swap_out.push(double);
    }
    let mut positive = Vec::with_capacity(state.positive.len());
    for r in &state.positive {
        if swap_out.contains(&r.weight) {
            positive.push(Root { weight: -&r.weight, parity: r.parity, isotropic: r.isotropic });
        } else {
            positive.push(r.clone());
        }
    }
    Ok(BaseState { base, positive })
}

/// Closure of the distinguished base under odd reflections, deduplicated up
/// to reordering. F(4) closes after six bases.
pub fn odd_base_orbit(rs: &RootSystem) -> Vec<BaseState> {
    let start = BaseState::distinguished(rs);
    let mut seen = vec![start.base_key()];
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        for alpha in state.base.clone() {
            if alpha.parity != Parity::ODD || !alpha.isotropic {
                continue;
            }
            let next = odd_reflection(rs, &state, &alpha).expect("simple odd isotropic root");
            let key = next.base_key();
            if !seen.contains(&key) {
                seen.push(key);
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    out
}

/// Recompute the positive system of a base extensionally: a root is positive
/// when it is a nonnegative rational combination of the base.
pub fn positives_from_base(rs: &RootSystem, base: &[Root]) -> Result<Vec<Root>> {
    let n = rs.algebra.rank();
    // solve base-coordinates for each root by Gaussian elimination
    let cols: Vec<Vec<Q>> = base.iter().map(|r| r.weight.coords()).collect();
    let mut out = Vec::new();
    for root in rs.all_roots() {
        let target = root.weight.coords();
        if let Some(sol) = solve(&cols, &target, n) {
            if sol.iter().all(|x| !x.is_negative()) {
                out.push(root);
            }
        }
    }
    Ok(out)
}

/// Solve `sum_j x_j cols[j] = target` if a solution exists.
pub(crate) fn solve(cols: &[Vec<Q>], target: &[Q], dim: usize) -> Option<Vec<Q>> {
    let m = cols.len();
    let mut aug: Vec<Vec<Q>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Q> = cols.iter().map(|c| c[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        if let Some(p) = (r..dim).find(|&i| !aug[i][c].is_zero()) {
            aug.swap(r, p);
            let inv = aug[r][c];
            for j in 0..=m {
                aug[r][j] /= inv;
            }
            for i in 0..dim {
                if i != r && !aug[i][c].is_zero() {
                    let f = aug[i][c];
                    for j in 0..=m {
                        let sub = aug[r][j] * f;
                        aug[i][j] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    // consistency: zero rows must have zero rhs
    for row in aug.iter().skip(r) {
        if !row[m].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Q::zero(); m];
    for (row, &c) in pivots.iter().enumerate() {
        sol[c] = aug[row][m];
    }
    Some(sol)
}

/// Check a base state's positive list against the extensional recomputation.
pub fn positives_consistent(rs: &RootSystem, state: &BaseState) -> bool {
    match positives_from_base(rs, &state.base) {
        Ok(ext) => {
            let mut a = state.positive_key();
            let mut b: Vec<Vec<i64>> = ext.iter().map(|r| r.weight.scaled().to_vec()).collect();
            a.sort();
            b.sort();
            a == b
        }
        Err(_) => false,
    }
}
