//! Shift isomorphisms between tableau crystals, the split of hook tableaux,
//! and the embedding `ξ_λ : SST_𝓑(λ°) → 𝓑(K(λ))/{±1}` with its partial
//! inverse `π̄_λ`.
//!
//! The shifts `σ^k`, `τ^k` are realised by transport of structure: both
//! crystals are connected with a unique source, so matching the sources and
//! following edges of the same color determines the map.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use crate::base::{delta_minus, delta_plus, hook_bijection_inv, Letter, Partition, Rank, Weight};
use crate::error::{Error, Result};
use crate::graph::{CrystalGraph, Link};
use crate::kac::{KacCrystal, KacElement};
use crate::rsk::{KappaCrystal, KappaElement};
use crate::tableau::{enumerate_sst, Alphabet, SkewShape, Tableau};
use crate::word::{Crystal, Dir, TableauCrystal};

/// A color-preserving bijection between two crystal graphs that shifts every
/// weight by the same amount.
#[derive(Debug, Clone)]
pub struct TransportIso<V, W> {
    forward: HashMap<V, W>,
    backward: HashMap<W, V>,
    shift: Weight,
}

impl<V: Eq + Hash + Clone, W: Eq + Hash + Clone> TransportIso<V, W> {
    pub fn apply(&self, v: &V) -> Option<&W> {
        self.forward.get(v)
    }

    pub fn invert(&self, w: &W) -> Option<&V> {
        self.backward.get(w)
    }

    pub fn shift(&self) -> &Weight {
        &self.shift
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&V, &W)> {
        self.forward.iter()
    }
}

fn unique_source<V>(g: &CrystalGraph<V>) -> Result<usize>
where
    V: Clone + Eq + Hash + Ord + Send + Sync + std::fmt::Debug,
{
    match g.sources().as_slice() {
        [s] => Ok(*s),
        other => Err(Error::MultipleSources(other.len())),
    }
}

/// Matches the unique sources of `src` and `dst` and extends the match along
/// same-colored edges. Fails on the first edge that has no counterpart.
pub fn transport_iso<V, W>(src: &CrystalGraph<V>, dst: &CrystalGraph<W>, shift: &Weight) -> Result<TransportIso<V, W>>
where
    V: Clone + Eq + Hash + Ord + Send + Sync + std::fmt::Debug,
    W: Clone + Eq + Hash + Ord + Send + Sync + std::fmt::Debug,
{
    if src.colors() != dst.colors() {
        return Err(Error::NotIsomorphic("color sets differ".into()));
    }
    if src.len() != dst.len() {
        return Err(Error::NotIsomorphic(format!("{} vertices vs {}", src.len(), dst.len())));
    }
    let s0 = unique_source(src)?;
    let d0 = unique_source(dst)?;
    let mut map: Vec<Option<usize>> = vec![None; src.len()];
    let mut inv: Vec<Option<usize>> = vec![None; dst.len()];
    map[s0] = Some(d0);
    inv[d0] = Some(s0);
    let mut queue = VecDeque::from([s0]);
    while let Some(v) = queue.pop_front() {
        let w = map[v].expect("queued vertices are mapped");
        if dst.weights()[w] != &src.weights()[v] + shift {
            return Err(Error::NotIsomorphic(format!(
                "vertex {v} has weight {} but its image {w} has {}",
                src.weights()[v],
                dst.weights()[w]
            )));
        }
        for (c, &k) in src.colors().iter().enumerate() {
            for dir in [Dir::F, Dir::E] {
                match (src.link(c, dir, v), dst.link(c, dir, w)) {
                    (Link::Null, Link::Null) => {}
                    (Link::To(a), Link::To(b)) => {
                        let (a, b) = (a as usize, b as usize);
                        match (map[a], inv[b]) {
                            (None, None) => {
                                map[a] = Some(b);
                                inv[b] = Some(a);
                                queue.push_back(a);
                            }
                            (Some(b2), Some(a2)) if b2 == b && a2 == a => {}
                            _ => {
                                return Err(Error::NotIsomorphic(format!(
                                    "{dir:?}_{k} edge {v} -> {a} maps inconsistently onto {w} -> {b}"
                                )))
                            }
                        }
                    }
                    (l, r) => {
                        return Err(Error::NotIsomorphic(format!(
                            "{dir:?}_{k} at vertex {v}: {l:?} vs {r:?} at {w}"
                        )))
                    }
                }
            }
        }
    }
    if map.iter().any(Option::is_none) {
        return Err(Error::NotIsomorphic("source graph is not connected".into()));
    }
    let forward = map
        .iter()
        .enumerate()
        .map(|(v, w)| (src.vertices()[v].clone(), dst.vertices()[w.expect("total")].clone()))
        .collect::<HashMap<_, _>>();
    let backward = forward.iter().map(|(v, w)| (w.clone(), v.clone())).collect();
    Ok(TransportIso {
        forward,
        backward,
        shift: shift.clone(),
    })
}

/// The full crystal graph of a tableau crystal.
pub fn tableau_graph(crystal: &TableauCrystal) -> CrystalGraph<Tableau> {
    CrystalGraph::from_vertices(crystal, crystal.elements())
}

fn tableau_transport(src: &TableauCrystal, dst: &TableauCrystal, raw_shift: &Weight) -> Result<TransportIso<Tableau, Tableau>> {
    transport_iso(&tableau_graph(src), &tableau_graph(dst), raw_shift)
}

/// `σ^{-ℓ} : SST_{𝓑₊}(η) → SST_{𝓑₊∨}((ℓ^m)/η)`, weight shift `-ℓδ₊`.
pub fn sigma_down(rank: Rank, eta: &Partition, ell: usize) -> Result<TransportIso<Tableau, Tableau>> {
    let src = TableauCrystal::new(rank, Alphabet::BPlus, SkewShape::straight(eta.clone()));
    let dst = TableauCrystal::new(rank, Alphabet::BPlusDual, SkewShape::antinormal(ell, rank.m(), eta.clone())?);
    tableau_transport(&src, &dst, &delta_plus(rank).scaled(-(ell as i64)))
}

/// Column complement in the rectangle `(ℓ^m)`: a column of `T` holding the
/// barred letters `X` becomes the column holding `ī∨` for `i ∉ X`.
pub fn complement_down(rank: Rank, t: &Tableau, ell: usize) -> Result<Tableau> {
    if t.alphabet() != Alphabet::BPlus || !t.shape().is_straight() {
        return Err(Error::ShapeViolation(format!("expected a straight B+ tableau, got {t}")));
    }
    let m = rank.m();
    let eta = t.shape().outer().clone();
    let shape = SkewShape::antinormal(ell, m, eta)?;
    let mut cells = HashMap::new();
    for c in 0..ell {
        let present: Vec<usize> = t.column(c).iter().map(|(_, a)| a.index()).collect();
        let missing = (1..=m).filter(|i| !present.contains(i));
        let top = shape.column_top(c);
        for (k, i) in missing.enumerate() {
            cells.insert((top + k, c), Letter::Dual(i));
        }
    }
    Tableau::from_fn(Alphabet::BPlusDual, shape, |r, c| cells.get(&(r, c)).copied())
}

/// Inverse of [`complement_down`].
pub fn complement_up(rank: Rank, t: &Tableau) -> Result<Tableau> {
    if t.alphabet() != Alphabet::BPlusDual || !t.shape().is_antinormal() {
        return Err(Error::ShapeViolation(format!("expected an anti-normal B+dual tableau, got {t}")));
    }
    let m = rank.m();
    let eta = t.shape().inner().clone();
    let shape = SkewShape::straight(eta);
    let mut cells = HashMap::new();
    for c in 0..t.shape().width() {
        let present: Vec<usize> = t.column(c).iter().map(|(_, a)| a.index()).collect();
        // barred letters increase down a column: m̄ first
        let missing = (1..=m).rev().filter(|i| !present.contains(i));
        for (r, i) in missing.enumerate() {
            cells.insert((r, c), Letter::Barred(i));
        }
    }
    Tableau::from_fn(Alphabet::BPlus, shape, |r, c| cells.get(&(r, c)).copied())
}

/// The bijection `ς^k = id × σ^k × τ^k` from `K(λ)` to `K(λ + kδ)`, both in
/// the standard model.
#[derive(Debug, Clone)]
pub struct Shift {
    pub k: i64,
    pub source: KacCrystal,
    pub target: KacCrystal,
    plus: TransportIso<Tableau, Tableau>,
    minus: TransportIso<Tableau, Tableau>,
}

impl Shift {
    pub fn new(rank: Rank, lambda: &Weight, k: i64) -> Result<Self> {
        let source = KacCrystal::new(rank, lambda)?;
        let shifted = lambda.try_add(&crate::base::delta(rank).scaled(k))?;
        let target = KacCrystal::new(rank, &shifted)?;
        let plus = transport_with_offsets(
            &source.plus_crystal(),
            &target.plus_crystal(),
            |t| source.plus_weight(t),
            |t| target.plus_weight(t),
            &delta_plus(rank).scaled(k),
        )?;
        let minus = transport_with_offsets(
            &source.minus_crystal(),
            &target.minus_crystal(),
            |t| source.minus_weight(t),
            |t| target.minus_weight(t),
            &delta_minus(rank).scaled(k),
        )?;
        Ok(Shift {
            k,
            source,
            target,
            plus,
            minus,
        })
    }

    pub fn apply(&self, x: &KacElement) -> Option<KacElement> {
        Some(KacElement {
            s: x.s,
            t_plus: self.plus.apply(&x.t_plus)?.clone(),
            t_minus: self.minus.apply(&x.t_minus)?.clone(),
        })
    }

    pub fn invert(&self, x: &KacElement) -> Option<KacElement> {
        Some(KacElement {
            s: x.s,
            t_plus: self.plus.invert(&x.t_plus)?.clone(),
            t_minus: self.minus.invert(&x.t_minus)?.clone(),
        })
    }
}

/// Transport between two tableau crystals whose model weights (raw weight
/// plus a fixed offset) differ by `shift`.
fn transport_with_offsets(
    src: &TableauCrystal,
    dst: &TableauCrystal,
    src_weight: impl Fn(&Tableau) -> Weight,
    dst_weight: impl Fn(&Tableau) -> Weight,
    shift: &Weight,
) -> Result<TransportIso<Tableau, Tableau>> {
    let hs = src.highest_weight()?;
    let hd = dst.highest_weight()?;
    if &dst_weight(&hd) - &src_weight(&hs) != *shift {
        return Err(Error::NotIsomorphic(format!(
            "highest weights {} and {} do not differ by {shift}",
            src_weight(&hs),
            dst_weight(&hd)
        )));
    }
    let raw = &hd.weight(src.rank) - &hs.weight(src.rank);
    let iso = tableau_transport(src, dst, &raw)?;
    Ok(TransportIso {
        shift: shift.clone(),
        ..iso
    })
}

/// The pieces `T⁺_{≤m}`, `T⁻_{≤m}`, `T_{>m}` of a hook tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookTableauSplit {
    /// Over `𝓑₊`, straight shape `η`.
    pub plus: Tableau,
    /// Over `𝓑₋`, shape `μ/η` where `μ` is the first `m` rows.
    pub minus: Tableau,
    /// Over `𝓑₋`, the rows below the `m`-th.
    pub below: Tableau,
}

pub fn split_hook(rank: Rank, t: &Tableau) -> Result<HookTableauSplit> {
    if t.alphabet() != Alphabet::B || !t.shape().is_straight() {
        return Err(Error::MalformedHookTableau(format!("{t} is not a straight tableau over B")));
    }
    let m = rank.m();
    let outer = t.shape().outer();
    let rows = t.rows();
    let eta: Vec<usize> = rows
        .iter()
        .take(m)
        .map(|row| row.iter().take_while(|a| matches!(a, Letter::Barred(_))).count())
        .collect();
    for (r, row) in rows.iter().enumerate() {
        let from = if r < m { eta[r] } else { 0 };
        if let Some(a) = row[from..].iter().find(|a| !matches!(a, Letter::Unbarred(_))) {
            return Err(Error::MalformedHookTableau(format!("unexpected {a} in row {r} of {t}")));
        }
    }
    let eta = Partition::new(eta).map_err(|e| Error::MalformedHookTableau(e.to_string()))?;
    let mu = Partition::new(outer.parts().iter().take(m).copied().collect())?;
    let nu = Partition::new(outer.parts().iter().skip(m).copied().collect())?;
    let plus = Tableau::from_fn(Alphabet::BPlus, SkewShape::straight(eta.clone()), |r, c| t.get(r, c))?;
    let minus = Tableau::from_fn(Alphabet::BMinus, SkewShape::new(mu, eta, false)?, |r, c| t.get(r, c))?;
    let below = Tableau::from_fn(Alphabet::BMinus, SkewShape::straight(nu), |r, c| t.get(r + m, c))?;
    Ok(HookTableauSplit { plus, minus, below })
}

/// Glues the pieces back; the result is checked for semistandardness.
pub fn reassemble(rank: Rank, split: &HookTableauSplit) -> Result<Tableau> {
    let m = rank.m();
    let mu = split.minus.shape().outer();
    if split.minus.shape().inner() != split.plus.shape().outer() {
        return Err(Error::MalformedHookTableau(format!(
            "plus part {} does not fit inside the minus part {}",
            split.plus.shape(),
            split.minus.shape()
        )));
    }
    if mu.len() < m && !split.below.is_empty() {
        return Err(Error::MalformedHookTableau("rows below row m under a short top part".into()));
    }
    let mut parts: Vec<usize> = (0..m).map(|r| mu.part(r)).collect();
    parts.extend_from_slice(split.below.shape().outer().parts());
    let shape = SkewShape::straight(Partition::new(parts)?);
    let t = Tableau::from_fn(Alphabet::B, shape, |r, c| {
        if r >= m {
            split.below.get(r - m, c)
        } else {
            split.plus.get(r, c).or_else(|| split.minus.get(r, c))
        }
    })?;
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard(t.to_string()));
    }
    Ok(t)
}

/// `ξ_λ` and `π̄_λ` for one polynomial weight `λ`, with the shift maps it
/// needs cached per inner shape `η`.
#[derive(Debug)]
pub struct Embedding {
    rank: Rank,
    lambda: Weight,
    hook: Partition,
    ell: usize,
    kappa: KappaCrystal,
    target: KacCrystal,
    up: TransportIso<Tableau, Tableau>,
    down: Mutex<HashMap<Partition, Arc<TransportIso<Tableau, Tableau>>>>,
}

impl Embedding {
    pub fn new(rank: Rank, lambda: &Weight) -> Result<Self> {
        let hook = hook_bijection_inv(rank, lambda)?;
        let ell = hook.part(0);
        let mu = Partition::new(hook.parts().iter().take(rank.m()).copied().collect())?;
        let lowered = lambda.try_sub(&delta_plus(rank).scaled(ell as i64))?;
        let kappa = KappaCrystal::new(rank, &lowered, ell)?;
        let target = KacCrystal::new(rank, lambda)?;
        // σ^ℓ : SST_{𝓑₊∨}((ℓ^m)/μ) → SST_{𝓑₊}(μ) is the inverse of σ^{-ℓ} on μ
        let up = sigma_down(rank, &mu, ell)?;
        Ok(Embedding {
            rank,
            lambda: lambda.clone(),
            hook,
            ell,
            kappa,
            target,
            up,
            down: Mutex::new(HashMap::new()),
        })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// `λ°`.
    pub fn hook(&self) -> &Partition {
        &self.hook
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// The crystal `SST_𝓑(λ°)`.
    pub fn domain(&self) -> TableauCrystal {
        TableauCrystal::new(self.rank, Alphabet::B, SkewShape::straight(self.hook.clone()))
    }

    /// The standard model of `K(λ)`.
    pub fn target(&self) -> &KacCrystal {
        &self.target
    }

    pub fn kappa(&self) -> &KappaCrystal {
        &self.kappa
    }

    fn down(&self, eta: &Partition) -> Result<Arc<TransportIso<Tableau, Tableau>>> {
        let mut cache = self.down.lock().expect("cache lock");
        if let Some(iso) = cache.get(eta) {
            return Ok(Arc::clone(iso));
        }
        let iso = Arc::new(sigma_down(self.rank, eta, self.ell)?);
        cache.insert(eta.clone(), Arc::clone(&iso));
        Ok(iso)
    }

    /// `ı_λ(T) = (σ^{-ℓ}(T⁺_{≤m}), T⁻_{≤m}, T_{>m}) ∈ 𝒦_{λ-ℓδ₊}`.
    pub fn iota(&self, t: &Tableau) -> Result<KappaElement> {
        self.check_domain(t)?;
        let split = split_hook(self.rank, t)?;
        let eta = split.plus.shape().outer().clone();
        let p = self
            .down(&eta)?
            .apply(&split.plus)
            .cloned()
            .ok_or_else(|| Error::NotSemistandard(split.plus.to_string()))?;
        Ok(KappaElement {
            p,
            q: split.minus,
            v: split.below,
        })
    }

    /// `ξ_λ(T) = (id × σ^ℓ × id) ∘ ρ⁻¹_{λ-ℓδ₊} ∘ ı_λ(T)`.
    pub fn xi(&self, t: &Tableau) -> Result<KacElement> {
        let y = self.iota(t)?;
        let x = self.kappa.rho_inv(&y)?;
        let t_plus = self
            .up
            .invert(&x.t_plus)
            .cloned()
            .ok_or_else(|| Error::NotInImage(x.t_plus.to_string()))?;
        Ok(KacElement {
            s: x.s,
            t_plus,
            t_minus: x.t_minus,
        })
    }

    /// `π̄_λ`: the tableau `T` with `ξ_λ(T) = b`, or `None` when `b` is
    /// outside the image.
    pub fn pi_bar(&self, b: &KacElement) -> Option<Tableau> {
        if !self.target.contains(b) {
            return None;
        }
        let u = self.up.apply(&b.t_plus)?.clone();
        let x = KacElement {
            s: b.s,
            t_plus: u,
            t_minus: b.t_minus.clone(),
        };
        let y = self.kappa.rho(&x).ok()?;
        let plus = self.down(y.eta()).ok()?.invert(&y.p)?.clone();
        let split = HookTableauSplit {
            plus,
            minus: y.q,
            below: y.v,
        };
        let t = reassemble(self.rank, &split).ok()?;
        (t.shape().outer() == &self.hook).then_some(t)
    }

    /// `ξ_λ` through the column-complement description of `σ^{∓ℓ}`.
    pub fn xi_by_complement(&self, t: &Tableau) -> Result<KacElement> {
        self.check_domain(t)?;
        let split = split_hook(self.rank, t)?;
        let y = KappaElement {
            p: complement_down(self.rank, &split.plus, self.ell)?,
            q: split.minus,
            v: split.below,
        };
        let x = self.kappa.rho_inv(&y)?;
        Ok(KacElement {
            s: x.s,
            t_plus: complement_up(self.rank, &x.t_plus)?,
            t_minus: x.t_minus,
        })
    }

    fn check_domain(&self, t: &Tableau) -> Result<()> {
        if t.alphabet() != Alphabet::B || t.shape() != &SkewShape::straight(self.hook.clone()) {
            return Err(Error::MalformedHookTableau(format!(
                "{t} is not a tableau of shape ({}) over B",
                self.hook
            )));
        }
        if t.validate(self.rank)? {
            Ok(())
        } else {
            Err(Error::NotSemistandard(t.to_string()))
        }
    }

    /// All of `SST_𝓑(λ°)`.
    pub fn enumerate_domain(&self) -> Vec<Tableau> {
        enumerate_sst(self.rank, Alphabet::B, &SkewShape::straight(self.hook.clone()))
    }

    /// Weight of a domain tableau.
    pub fn weight(&self, t: &Tableau) -> Weight {
        self.domain().weight(t)
    }
}
