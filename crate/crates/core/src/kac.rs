//! The crystal of a Kac module, `𝒫(Φ⁻₁) × 𝓑^{λ₊} × 𝓑^{λ₋}`.
//!
//! Odd root sets are `m × n` bit matrices packed into a `u64`; bit
//! `(j-1)·m + (i-1)` holds the root `-ε_ī + ε_j`, so increasing bit order is
//! the order `≺`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::base::{Color, ColorKind, OddRoot, Partition, Rank, Weight};
use crate::error::{Error, Result};
use crate::graph::CrystalGraph;
use crate::tableau::{
    enumerate_sst, highest_weight_tableau, Alphabet, ReadingOrder, SkewShape, Tableau, TableauJson,
};
use crate::word::{act_at, signature, tableau_strings, Crystal, Dir, Rule, Signature};

/// A subset of the negative odd roots.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddRootSet {
    bits: u64,
    m: u8,
    n: u8,
}

/// Orders on odd roots `-ε_ī + ε_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootOrder {
    /// `≺`: `j` ascending, then `i` ascending.
    Prec,
    /// `≺′`: `i` ascending, then `j` descending.
    Prec1,
    /// `≺″`: `i` ascending, then `j` ascending.
    Prec2,
}

impl OddRootSet {
    pub fn empty(rank: Rank) -> Self {
        OddRootSet {
            bits: 0,
            m: rank.m() as u8,
            n: rank.n() as u8,
        }
    }

    pub fn from_bits(rank: Rank, bits: u64) -> Result<Self> {
        let size = rank.odd_root_count();
        if size < 64 && bits >> size != 0 {
            return Err(Error::ShapeViolation(format!(
                "bit pattern {bits:#x} has bits beyond {size}"
            )));
        }
        Ok(OddRootSet {
            bits,
            ..OddRootSet::empty(rank)
        })
    }

    pub fn from_roots(rank: Rank, roots: &[OddRoot]) -> Result<Self> {
        let mut s = OddRootSet::empty(rank);
        for &r in roots {
            if !(1..=rank.m()).contains(&r.i) || !(1..=rank.n()).contains(&r.j) {
                return Err(Error::ShapeViolation(format!("root {r} out of range for {rank}")));
            }
            s.bits |= 1 << s.bit(r.i, r.j);
        }
        Ok(s)
    }

    /// Rows `i = 1..m`, columns `j = 1..n`.
    pub fn from_matrix(rank: Rank, rows: &[Vec<u8>]) -> Result<Self> {
        if rows.len() != rank.m() || rows.iter().any(|r| r.len() != rank.n()) {
            return Err(Error::ShapeViolation(format!("S must be a {}x{} matrix", rank.m(), rank.n())));
        }
        let mut roots = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                match a {
                    0 => {}
                    1 => roots.push(OddRoot::new(i + 1, j + 1)),
                    _ => return Err(Error::ShapeViolation(format!("S entry {a} is not 0 or 1"))),
                }
            }
        }
        OddRootSet::from_roots(rank, &roots)
    }

    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        (1..=self.m as usize)
            .map(|i| (1..=self.n as usize).map(|j| self.contains(i, j) as u8).collect())
            .collect()
    }

    pub fn rank(&self) -> Rank {
        Rank::new(self.m as usize, self.n as usize).expect("valid rank")
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    fn bit(&self, i: usize, j: usize) -> usize {
        (j - 1) * self.m as usize + (i - 1)
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits >> self.bit(i, j) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self, rank: Rank) -> Weight {
        let mut w = Weight::zero(rank);
        for r in self.sorted(RootOrder::Prec) {
            *w.bar_mut(r.i) -= 1;
            *w.unbar_mut(r.j) += 1;
        }
        w
    }

    pub fn sorted(&self, order: RootOrder) -> Vec<OddRoot> {
        let mut buf = [(0u8, 0u8); 64];
        let len = self.fill(order, &mut buf);
        buf[..len]
            .iter()
            .map(|&(i, j)| OddRoot::new(i as usize, j as usize))
            .collect()
    }

    fn fill(&self, order: RootOrder, buf: &mut [(u8, u8); 64]) -> usize {
        let (m, n) = (self.m as usize, self.n as usize);
        let mut len = 0;
        let mut push = |i: usize, j: usize| {
            if self.contains(i, j) {
                buf[len] = (i as u8, j as u8);
                len += 1;
            }
        };
        match order {
            RootOrder::Prec => (1..=n).for_each(|j| (1..=m).for_each(|i| push(i, j))),
            RootOrder::Prec1 => (1..=m).for_each(|i| (1..=n).rev().for_each(|j| push(i, j))),
            RootOrder::Prec2 => (1..=m).for_each(|i| (1..=n).for_each(|j| push(i, j))),
        }
        len
    }

    fn toggled(&self, i: usize, j: usize) -> Self {
        OddRootSet {
            bits: self.bits ^ (1 << self.bit(i, j)),
            ..*self
        }
    }

    /// Signature of `S` for `k ≠ 0`: the lower rule over `≺` for `k ∈ I_{m|0}`,
    /// the upper rule over `≺′` for `k ∈ I_{0|n}`. Targets index `roots`.
    fn signature(&self, k: Color) -> (Signature, [(u8, u8); 64]) {
        let mut buf = [(0u8, 0u8); 64];
        let (order, rule) = match k.kind() {
            ColorKind::Odd(_) => (RootOrder::Prec1, Rule::Upper),
            _ => (RootOrder::Prec, Rule::Lower),
        };
        let len = self.fill(order, &mut buf);
        let sig = signature(buf[..len].iter().map(|&(i, j)| root_strings(k, i, j)), rule);
        (sig, buf)
    }

    fn act(&self, k: Color, dir: Dir, root: (u8, u8)) -> OddRootSet {
        let (i, j) = (root.0 as usize, root.1 as usize);
        let (i2, j2) = match (k.kind(), dir) {
            (ColorKind::Even(_), Dir::F) => (i + 1, j),
            (ColorKind::Even(_), Dir::E) => (i - 1, j),
            (ColorKind::Odd(_), Dir::F) => (i, j + 1),
            (ColorKind::Odd(_), Dir::E) => (i, j - 1),
            (ColorKind::Zero, _) => unreachable!("color 0 toggles -alpha_0"),
        };
        assert!(!self.contains(i2, j2), "operator would repeat a root");
        self.toggled(i, j).toggled(i2, j2)
    }
}

impl fmt::Debug for OddRootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OddRootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let roots: Vec<String> = self
            .sorted(RootOrder::Prec)
            .iter()
            .map(|r| r.to_string())
            .collect();
        write!(f, "{{{}}}", roots.join(", "))
    }
}

/// `(ε_k, φ_k)` of the single root `-ε_ī + ε_j` for `k ≠ 0`. Under the even
/// colors a root behaves like the dual letter `ī∨`, under the odd ones like `j`.
fn root_strings(k: Color, i: u8, j: u8) -> (u32, u32) {
    let (i, j) = (i as usize, j as usize);
    match k.kind() {
        ColorKind::Even(c) => ((i == c + 1) as u32, (i == c) as u32),
        ColorKind::Odd(c) => ((j == c + 1) as u32, (j == c) as u32),
        ColorKind::Zero => (0, 0),
    }
}

pub fn sort_roots(s: &OddRootSet, order: RootOrder) -> Vec<OddRoot> {
    s.sorted(order)
}

/// `x̃_k S` on `𝒫(Φ⁻₁)` alone.
pub fn apply_odd_root_set(k: Color, dir: Dir, s: &OddRootSet) -> Option<OddRootSet> {
    if k == Color::ZERO {
        return match (dir, s.contains(1, 1)) {
            (Dir::E, true) | (Dir::F, false) => Some(s.toggled(1, 1)),
            _ => None,
        };
    }
    let (sig, roots) = s.signature(k);
    sig.target(dir).map(|p| s.act(k, dir, roots[p]))
}

/// `(ε_k, φ_k)` of `S` for `k ≠ 0`.
pub fn odd_root_set_strings(k: Color, s: &OddRootSet) -> (u32, u32) {
    let (sig, _) = s.signature(k);
    (sig.eps, sig.phi)
}

/// A vertex `(S, T₊, T₋)` of the Kac crystal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KacElement {
    pub s: OddRootSet,
    pub t_plus: Tableau,
    pub t_minus: Tableau,
}

impl fmt::Display for KacElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [{}], [{}])", self.s, self.t_plus, self.t_minus)
    }
}

/// How `𝓑^{λ₊}` is realised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlusModel {
    /// `SST_{𝓑₊}(μ + c)` with `c = max(0, -λ_1̄)` full columns added, weight shifted back by `-cδ₊`.
    Standard { shift: i64 },
    /// `SST_{𝓑₊∨}((ℓ^m)/μ)` with `μ = (ℓ+λ_m̄, …, ℓ+λ_1̄)`.
    Dual { ell: usize },
}

/// The crystal `𝓑(K(λ))/{±1}`.
#[derive(Debug, Clone)]
pub struct KacCrystal {
    rank: Rank,
    lambda: Weight,
    model: PlusModel,
    plus_shape: SkewShape,
    plus_alphabet: Alphabet,
    plus_offset: Weight,
    minus_shape: SkewShape,
    minus_offset: Weight,
    order: ReadingOrder,
}

impl KacCrystal {
    /// The standard model; `λ` may have negative coordinates.
    pub fn new(rank: Rank, lambda: &Weight) -> Result<Self> {
        check_lambda(rank, lambda)?;
        let c = (-lambda.bar(1)).max(0);
        let mu: Vec<i64> = lambda.barred().iter().map(|x| x + c).collect();
        let plus_shape = SkewShape::straight(Partition::from_signed(&mu)?);
        let mut plus_offset = Weight::zero(rank);
        for i in 1..=rank.m() {
            *plus_offset.bar_mut(i) = -c;
        }
        Ok(KacCrystal {
            plus_shape,
            plus_alphabet: Alphabet::BPlus,
            plus_offset,
            model: PlusModel::Standard { shift: c },
            ..KacCrystal::minus_part(rank, lambda)?
        })
    }

    /// The dual model used by the skew dual RSK. Needs `λ_m̄ ≤ 0`, `λ_n ≥ 0`
    /// and `ℓ + λ_1̄ ≥ 0`.
    pub fn dual(rank: Rank, lambda: &Weight, ell: usize) -> Result<Self> {
        check_lambda(rank, lambda)?;
        check_window(rank, lambda, ell)?;
        let mu: Vec<i64> = lambda.barred().iter().map(|x| x + ell as i64).collect();
        let plus_shape = SkewShape::antinormal(ell, rank.m(), Partition::from_signed(&mu)?)?;
        Ok(KacCrystal {
            plus_shape,
            plus_alphabet: Alphabet::BPlusDual,
            plus_offset: Weight::zero(rank),
            model: PlusModel::Dual { ell },
            ..KacCrystal::minus_part(rank, lambda)?
        })
    }

    fn minus_part(rank: Rank, lambda: &Weight) -> Result<Self> {
        let d = (-lambda.unbar(rank.n())).max(0);
        let nu: Vec<i64> = lambda.unbarred().iter().map(|x| x + d).collect();
        let minus_shape = SkewShape::straight(Partition::from_signed(&nu)?.conjugate());
        let mut minus_offset = Weight::zero(rank);
        for j in 1..=rank.n() {
            *minus_offset.unbar_mut(j) = -d;
        }
        Ok(KacCrystal {
            rank,
            lambda: lambda.clone(),
            model: PlusModel::Standard { shift: 0 },
            plus_shape: SkewShape::straight(Partition::empty()),
            plus_alphabet: Alphabet::BPlus,
            plus_offset: Weight::zero(rank),
            minus_shape,
            minus_offset,
            order: ReadingOrder::ColumnsRightToLeft,
        })
    }

    pub fn with_reading_order(mut self, order: ReadingOrder) -> Self {
        self.order = order;
        self
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn model(&self) -> PlusModel {
        self.model
    }

    pub fn plus_shape(&self) -> &SkewShape {
        &self.plus_shape
    }

    pub fn plus_alphabet(&self) -> Alphabet {
        self.plus_alphabet
    }

    pub fn minus_shape(&self) -> &SkewShape {
        &self.minus_shape
    }

    /// The crystal of the `𝓑^{λ₊}` factor.
    pub fn plus_crystal(&self) -> crate::word::TableauCrystal {
        crate::word::TableauCrystal::new(self.rank, self.plus_alphabet, self.plus_shape.clone())
    }

    /// The crystal of the `𝓑^{λ₋}` factor.
    pub fn minus_crystal(&self) -> crate::word::TableauCrystal {
        crate::word::TableauCrystal::new(self.rank, Alphabet::BMinus, self.minus_shape.clone())
    }

    pub fn plus_weight(&self, t: &Tableau) -> Weight {
        &t.weight(self.rank) + &self.plus_offset
    }

    pub fn minus_weight(&self, t: &Tableau) -> Weight {
        &t.weight(self.rank) + &self.minus_offset
    }

    /// `(∅, H₊, H₋)`, the element of weight `λ`.
    pub fn highest_weight_element(&self) -> KacElement {
        KacElement {
            s: OddRootSet::empty(self.rank),
            t_plus: highest_weight_tableau(self.rank, self.plus_alphabet, &self.plus_shape)
                .expect("plus shape fits the rank"),
            t_minus: highest_weight_tableau(self.rank, Alphabet::BMinus, &self.minus_shape)
                .expect("minus shape fits the rank"),
        }
    }

    /// `2^{mn} · dim V_{m|0}(λ₊) · dim V_{0|n}(λ₋)` by the Weyl dimension formula.
    pub fn cardinality(&self) -> u128 {
        let powerset = 1u128.checked_shl(self.rank.odd_root_count() as u32).unwrap_or(u128::MAX);
        powerset
            .saturating_mul(weyl_dimension(self.lambda.barred()))
            .saturating_mul(weyl_dimension(self.lambda.unbarred()))
    }

    /// Every element, as the full product set.
    pub fn enumerate(&self) -> Vec<KacElement> {
        let plus = enumerate_sst(self.rank, self.plus_alphabet, &self.plus_shape);
        let minus = enumerate_sst(self.rank, Alphabet::BMinus, &self.minus_shape);
        let size = self.rank.odd_root_count();
        let mut out = Vec::with_capacity((1usize << size) * plus.len() * minus.len());
        for bits in 0..(1u64 << size) {
            let s = OddRootSet::from_bits(self.rank, bits).expect("in range");
            for p in &plus {
                for q in &minus {
                    out.push(KacElement {
                        s,
                        t_plus: p.clone(),
                        t_minus: q.clone(),
                    });
                }
            }
        }
        out
    }

    /// Whether `x` is an element of this crystal.
    pub fn contains(&self, x: &KacElement) -> bool {
        x.s.rank() == self.rank
            && x.t_plus.alphabet() == self.plus_alphabet
            && x.t_plus.shape() == &self.plus_shape
            && x.t_plus.validate(self.rank) == Ok(true)
            && x.t_minus.alphabet() == Alphabet::BMinus
            && x.t_minus.shape() == &self.minus_shape
            && x.t_minus.validate(self.rank) == Ok(true)
    }

    /// The crystal graph generated from the highest weight element.
    pub fn generate_graph(&self, cap: usize) -> Result<CrystalGraph<KacElement>> {
        let card = self.cardinality();
        if card > cap as u128 {
            return Err(Error::SizeCapExceeded {
                cardinality: card,
                cap: cap as u128,
            });
        }
        CrystalGraph::generate(self, vec![self.highest_weight_element()], cap)
    }

    pub fn element_json(&self, x: &KacElement) -> KacElementJson {
        KacElementJson {
            rank: [self.rank.m(), self.rank.n()],
            lambda: self.lambda.to_string(),
            s: x.s.to_matrix(),
            t_plus: x.t_plus.to_json(),
            t_minus: x.t_minus.to_json(),
        }
    }

    pub fn element_from_json(&self, j: &KacElementJson) -> Result<KacElement> {
        let rank = Rank::new(j.rank[0], j.rank[1])?;
        if rank != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: rank,
            });
        }
        let x = KacElement {
            s: OddRootSet::from_matrix(rank, &j.s)?,
            t_plus: Tableau::from_json(&j.t_plus)?,
            t_minus: Tableau::from_json(&j.t_minus)?,
        };
        if !self.contains(&x) {
            return Err(Error::NotSemistandard(format!("{x} is not an element of K({})", self.lambda)));
        }
        Ok(x)
    }

    pub fn graph_json(&self, g: &CrystalGraph<KacElement>) -> GraphJson {
        GraphJson {
            rank: [self.rank.m(), self.rank.n()],
            lambda: self.lambda.to_string(),
            vertices: g
                .vertices()
                .iter()
                .zip(g.weights())
                .enumerate()
                .map(|(id, (x, wt))| VertexJson {
                    id,
                    wt: wt.to_string(),
                    s: x.s.to_matrix(),
                    t_plus: x.t_plus.to_json(),
                    t_minus: x.t_minus.to_json(),
                })
                .collect(),
            edges: g.edges().into_iter().map(|(v, k, w)| (v, k.0, w)).collect(),
        }
    }
}

impl Crystal for KacCrystal {
    type Elem = KacElement;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn colors(&self) -> Vec<Color> {
        self.rank.colors()
    }

    fn apply(&self, k: Color, dir: Dir, x: &KacElement) -> Option<KacElement> {
        match k.kind() {
            ColorKind::Zero => apply_odd_root_set(k, dir, &x.s).map(|s| KacElement { s, ..x.clone() }),
            ColorKind::Even(_) => {
                // lower rule on S ⊗ T₊
                let (ss, roots) = x.s.signature(k);
                let st = tableau_strings(k, &x.t_plus, self.order);
                let on_s = match dir {
                    Dir::F => ss.phi > st.eps,
                    Dir::E => ss.phi >= st.eps,
                };
                if on_s {
                    let p = ss.target(dir)?;
                    Some(KacElement {
                        s: x.s.act(k, dir, roots[p]),
                        ..x.clone()
                    })
                } else {
                    let p = st.target(dir)?;
                    Some(KacElement {
                        s: x.s,
                        t_plus: act_at(k, dir, &x.t_plus, p),
                        t_minus: x.t_minus.clone(),
                    })
                }
            }
            ColorKind::Odd(_) => {
                // upper rule on S ⊗ T₋
                let (ss, roots) = x.s.signature(k);
                let st = tableau_strings(k, &x.t_minus, self.order);
                let on_t = match dir {
                    Dir::F => st.phi > ss.eps,
                    Dir::E => st.phi >= ss.eps,
                };
                if on_t {
                    let p = st.target(dir)?;
                    Some(KacElement {
                        s: x.s,
                        t_plus: x.t_plus.clone(),
                        t_minus: act_at(k, dir, &x.t_minus, p),
                    })
                } else {
                    let p = ss.target(dir)?;
                    Some(KacElement {
                        s: x.s.act(k, dir, roots[p]),
                        ..x.clone()
                    })
                }
            }
        }
    }

    fn weight(&self, x: &KacElement) -> Weight {
        let mut w = x.s.weight(self.rank);
        w.add_assign(&self.plus_weight(&x.t_plus));
        w.add_assign(&self.minus_weight(&x.t_minus));
        w
    }
}

fn check_lambda(rank: Rank, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rank {
        return Err(Error::RankMismatch {
            left: rank,
            right: lambda.rank(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// The conditions under which the dual model exists.
pub fn check_window(rank: Rank, lambda: &Weight, ell: usize) -> Result<()> {
    if lambda.bar(rank.m()) > 0 || lambda.unbar(rank.n()) < 0 || ell as i64 + lambda.bar(1) < 0 {
        return Err(Error::PreconditionViolated(format!(
            "need lambda_mbar <= 0, lambda_n >= 0 and l + lambda_1bar >= 0; got lambda = {lambda}, l = {ell}"
        )));
    }
    Ok(())
}

/// `∏_{p<q} (a_p - a_q + q - p) / (q - p)` for a dominant `a`.
pub fn weyl_dimension(a: &[i64]) -> u128 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for p in 0..a.len() {
        for q in p + 1..a.len() {
            num = num.saturating_mul((a[p] - a[q] + (q - p) as i64) as u128);
            den = den.saturating_mul((q - p) as u128);
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// `x̃_k` on a Kac element in the standard model of `K(λ)`.
pub fn apply_kac(rank: Rank, lambda: &Weight, k: Color, dir: Dir, x: &KacElement) -> Result<Option<KacElement>> {
    if !rank.has_color(k) {
        return Err(Error::ColorOutOfRange {
            color: k,
            context: format!("rank {rank}"),
        });
    }
    Ok(KacCrystal::new(rank, lambda)?.apply(k, dir, x))
}

/// `generate_graph` for the standard model.
pub fn generate_graph(rank: Rank, lambda: &Weight, cap: usize) -> Result<CrystalGraph<KacElement>> {
    KacCrystal::new(rank, lambda)?.generate_graph(cap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacElementJson {
    pub rank: [usize; 2],
    pub lambda: String,
    #[serde(rename = "S")]
    pub s: Vec<Vec<u8>>,
    #[serde(rename = "Tplus")]
    pub t_plus: TableauJson,
    #[serde(rename = "Tminus")]
    pub t_minus: TableauJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub wt: String,
    #[serde(rename = "S")]
    pub s: Vec<Vec<u8>>,
    #[serde(rename = "Tplus")]
    pub t_plus: TableauJson,
    #[serde(rename = "Tminus")]
    pub t_minus: TableauJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub rank: [usize; 2],
    pub lambda: String,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<(usize, i32, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Letter;

    fn rank(m: usize, n: usize) -> Rank {
        Rank::new(m, n).unwrap()
    }

    fn root(i: usize, j: usize) -> OddRoot {
        OddRoot::new(i, j)
    }

    #[test]
    fn worked_root_orders() {
        let r = rank(3, 3);
        let s = OddRootSet::from_roots(r, &[root(2, 1), root(2, 2), root(1, 3)]).unwrap();
        assert_eq!(s.sorted(RootOrder::Prec), vec![root(2, 1), root(2, 2), root(1, 3)]);
        assert_eq!(s.sorted(RootOrder::Prec1), vec![root(1, 3), root(2, 2), root(2, 1)]);
        assert_eq!(s.sorted(RootOrder::Prec2), vec![root(1, 3), root(2, 1), root(2, 2)]);
        let single = OddRootSet::from_roots(r, &[root(3, 2)]).unwrap();
        for order in [RootOrder::Prec, RootOrder::Prec1, RootOrder::Prec2] {
            assert_eq!(single.sorted(order), vec![root(3, 2)]);
        }
    }

    #[test]
    fn zero_toggles_minus_alpha0() {
        let r = rank(2, 2);
        let s = OddRootSet::from_roots(r, &[root(2, 1)]).unwrap();
        assert_eq!(apply_odd_root_set(Color::ZERO, Dir::E, &s), None);
        let t = apply_odd_root_set(Color::ZERO, Dir::F, &s).unwrap();
        assert!(t.contains(1, 1));
        assert_eq!(apply_odd_root_set(Color::ZERO, Dir::F, &t), None);
    }

    #[test]
    fn odd_root_sets_form_a_crystal() {
        let r = rank(3, 2);
        for bits in 0..64u64 {
            let s = OddRootSet::from_bits(r, bits).unwrap();
            for k in r.colors() {
                if let Some(t) = apply_odd_root_set(k, Dir::F, &s) {
                    assert_eq!(apply_odd_root_set(k, Dir::E, &t), Some(s));
                    if k != Color::ZERO {
                        assert_eq!(t.len(), s.len());
                    }
                    assert_eq!(t.weight(r), &s.weight(r) - &k.simple_root(r));
                }
            }
        }
    }

    #[test]
    fn matrix_round_trip() {
        let r = rank(2, 3);
        let s = OddRootSet::from_roots(r, &[root(1, 3), root(2, 1)]).unwrap();
        assert_eq!(s.to_matrix(), vec![vec![0, 0, 1], vec![1, 0, 0]]);
        assert_eq!(OddRootSet::from_matrix(r, &s.to_matrix()).unwrap(), s);
    }

    #[test]
    fn small_graphs() {
        let g = generate_graph(rank(1, 1), &Weight::parse("0|0").unwrap(), 100).unwrap();
        assert_eq!((g.len(), g.edge_count()), (2, 1));
        assert_eq!(g.edges()[0].1, Color::ZERO);
        let g = generate_graph(rank(2, 1), &Weight::parse("0,0|0").unwrap(), 100).unwrap();
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn vertex_count_is_the_product_formula() {
        for (r, lam) in [
            (rank(2, 2), "1,0|2,1"),
            (rank(2, 1), "1,0|0"),
            (rank(1, 2), "-1|2,-2"),
            (rank(2, 2), "0,-2|1,-1"),
        ] {
            let lam = Weight::parse(lam).unwrap();
            let kc = KacCrystal::new(r, &lam).unwrap();
            let g = kc.generate_graph(100_000).unwrap();
            assert_eq!(g.len() as u128, kc.cardinality(), "{lam}");
            assert_eq!(g.len(), kc.enumerate().len());
            assert_eq!(g.weights()[0], lam);
        }
    }

    #[test]
    fn cap_reports_cardinality() {
        let lam = Weight::parse("4,3,2|3,1,0").unwrap();
        let err = generate_graph(rank(3, 3), &lam, 10).unwrap_err();
        assert_eq!(
            err,
            Error::SizeCapExceeded {
                cardinality: 512 * 8 * 15,
                cap: 10
            }
        );
    }

    #[test]
    fn highest_weight_element_is_killed() {
        let r = rank(3, 3);
        let lam = Weight::parse("4,3,2|3,1,0").unwrap();
        let kc = KacCrystal::new(r, &lam).unwrap();
        let h = kc.highest_weight_element();
        for k in r.colors() {
            assert_eq!(kc.apply(k, Dir::E, &h), None);
        }
        assert_eq!(
            h.t_minus.rows(),
            vec![
                vec![Letter::Unbarred(1), Letter::Unbarred(2)],
                vec![Letter::Unbarred(1)],
                vec![Letter::Unbarred(1)]
            ]
        );
    }

    #[test]
    fn dual_model_requires_window() {
        let r = rank(2, 2);
        assert!(KacCrystal::dual(r, &Weight::parse("1,0|1,0").unwrap(), 2).is_err());
        let kc = KacCrystal::dual(r, &Weight::parse("-1,-2|2,1").unwrap(), 3).unwrap();
        let g = kc.generate_graph(100_000).unwrap();
        assert_eq!(g.len() as u128, kc.cardinality());
        assert_eq!(g.weights()[0].to_string(), "-1,-2|2,1");
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension(&[4, 3, 2]), 8);
        assert_eq!(weyl_dimension(&[3, 1, 0]), 15);
        assert_eq!(weyl_dimension(&[1, 0]), 2);
        assert_eq!(weyl_dimension(&[-1, -2]), 2);
        assert_eq!(weyl_dimension(&[5]), 1);
    }
}
