//! Executable checks on exhaustively enumerated instances: crystal axioms,
//! connectedness with a census of fake highest weight vertices, the
//! character identity against independent counting oracles, commutation of
//! `ρ_λ` and `ς^k` with the operators, and compatibility of `ξ_λ`.
//!
//! Every check returns a [`CheckResult`]; failures carry a witness.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Debug;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::base::{delta, Color, ColorKind, Partition, Rank, Weight};
use crate::embedding::{Embedding, Shift};
use crate::error::{Error, Result};
use crate::graph::{CrystalGraph, Link};
use crate::kac::{KacCrystal, KacElement};
use crate::rsk::{default_ell, KappaCrystal, ZeroRule};
use crate::tableau::{Alphabet, ReadingOrder, SkewShape};
use crate::word::{alphabet_colors, apply_tableau, Crystal, Dir};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
    pub counts: BTreeMap<String, u64>,
    pub ms: u64,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            pass: true,
            witness: None,
            counts: BTreeMap::new(),
            ms: 0,
        }
    }

    /// Records the first failure; later ones only flip `pass`.
    fn fail(&mut self, witness: impl FnOnce() -> String) {
        if self.pass {
            self.witness = Some(witness());
        }
        self.pass = false;
    }

    fn count(&mut self, key: &str, value: usize) {
        self.counts.insert(key.to_string(), value as u64);
    }
}

fn timed(f: impl FnOnce() -> CheckResult) -> CheckResult {
    let start = Instant::now();
    let mut r = f();
    r.ms = start.elapsed().as_millis() as u64;
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub instance: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Zeroes the timing fields, which are the only nondeterministic part.
    pub fn strip_timing(&mut self) {
        for c in &mut self.checks {
            c.ms = 0;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Check {
    Axioms,
    Connected,
    Character,
    Rho,
    Shift,
    Compat,
    Readings,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Axioms,
        Check::Connected,
        Check::Character,
        Check::Rho,
        Check::Shift,
        Check::Compat,
        Check::Readings,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Axioms => "axioms",
            Check::Connected => "connected",
            Check::Character => "character",
            Check::Rho => "rho",
            Check::Shift => "shift",
            Check::Compat => "compat",
            Check::Readings => "readings",
        }
    }

    pub fn parse(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown check {s:?}"),
            })
    }

    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        s.split(',').map(|c| Check::parse(c.trim())).collect()
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    pub checks: Vec<Check>,
    pub cap: usize,
    /// Run every check against a deliberately broken fixture.
    pub corrupt: bool,
    /// `ρ` results by shifted weight. Neighbouring sweep instances `λ` and
    /// `λ + δ` usually land on the same window weight.
    pub rho_cache: Arc<Mutex<HashMap<String, CheckResult>>>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            checks: Check::ALL.to_vec(),
            cap: 200_000,
            corrupt: false,
            rho_cache: Arc::default(),
        }
    }
}

/// Per-color degree ≤ 1, `f̃_k b = b' ⇔ ẽ_k b' = b`, `wt(f̃_k b) = wt(b) - α_k`,
/// closure inside the valid element set, and the string condition
/// `φ_k - ε_k = ⟨h_k, wt⟩` (`k ≠ 0`), `ε_0, φ_0 ≤ 1`.
pub fn check_axioms<V: Clone + Eq + std::hash::Hash + Ord + Send + Sync + Debug>(
    g: &CrystalGraph<V>,
    valid: impl Fn(&V) -> bool + Sync,
) -> CheckResult {
    let mut res = CheckResult::new("axioms");
    res.count("vertices", g.len());
    res.count("edges", g.edge_count());
    if let Some(v) = g.vertices().par_iter().position_first(|v| !valid(v)) {
        res.fail(|| format!("vertex {v} is not a valid element: {:?}", g.vertices()[v]));
    }
    let rank = g.rank();
    for (c, &k) in g.colors().iter().enumerate() {
        let alpha = k.simple_root(rank);
        let mut indeg = vec![0u32; g.len()];
        for v in 0..g.len() {
            match g.link(c, Dir::F, v) {
                Link::To(w) => {
                    let w = w as usize;
                    indeg[w] += 1;
                    if indeg[w] > 1 {
                        res.fail(|| format!("vertex {w} has two incoming {k}-edges"));
                    }
                    if g.link(c, Dir::E, w) != Link::To(v as u32) {
                        res.fail(|| format!("f_{k}({v}) = {w} but e_{k}({w}) = {:?}", g.link(c, Dir::E, w)));
                    }
                    if g.weights()[w] != &g.weights()[v] - &alpha {
                        res.fail(|| {
                            format!(
                                "wt(f_{k} {v}) = {} but wt({v}) - alpha_{k} = {}",
                                g.weights()[w],
                                &g.weights()[v] - &alpha
                            )
                        });
                    }
                }
                Link::Outside => res.fail(|| format!("f_{k}({v}) leaves the vertex set")),
                Link::Null => {}
            }
            match g.link(c, Dir::E, v) {
                Link::To(u) => {
                    if g.link(c, Dir::F, u as usize) != Link::To(v as u32) {
                        res.fail(|| format!("e_{k}({v}) = {u} but f_{k}({u}) = {:?}", g.link(c, Dir::F, u as usize)));
                    }
                }
                Link::Outside => res.fail(|| format!("e_{k}({v}) leaves the vertex set")),
                Link::Null => {}
            }
        }
        if !res.pass {
            continue;
        }
        let walk = |dir: Dir, v: usize| {
            let (mut n, mut cur) = (0usize, v);
            while let Link::To(w) = g.link(c, dir, cur) {
                n += 1;
                cur = w as usize;
                if n > g.len() {
                    break;
                }
            }
            n
        };
        for v in 0..g.len() {
            let (eps, phi) = (walk(Dir::E, v) as i64, walk(Dir::F, v) as i64);
            let ok = match k.kind() {
                ColorKind::Zero => eps <= 1 && phi <= 1,
                _ => phi - eps == g.weights()[v].coroot(k),
            };
            if !ok {
                res.fail(|| format!("string lengths at vertex {v} for color {k}: eps={eps}, phi={phi}, wt={}", g.weights()[v]));
            }
        }
    }
    res
}

/// Exactly one connected component; sources of weight other than `λ` are
/// counted as fake highest weight vertices.
pub fn check_connected<V: Clone + Eq + std::hash::Hash + Ord + Send + Sync + Debug>(
    g: &CrystalGraph<V>,
    lambda: &Weight,
) -> (CheckResult, Option<String>) {
    let mut res = CheckResult::new("connected");
    let (count, _) = g.components();
    let sources = g.sources();
    let fake: Vec<usize> = sources.iter().copied().filter(|&v| &g.weights()[v] != lambda).collect();
    res.count("components", count);
    res.count("sources", sources.len());
    res.count("fake_sources", fake.len());
    if count != 1 {
        res.fail(|| format!("{count} connected components"));
    }
    if sources.len() == fake.len() {
        res.fail(|| format!("no source of weight {lambda}"));
    }
    let example = fake
        .first()
        .map(|&v| format!("{:?} of weight {}", g.vertices()[v], g.weights()[v]));
    (res, example)
}

type Multiset = HashMap<Vec<i64>, u64>;

/// Contents of classical semistandard tableaux (rows weak, columns strict)
/// of shape `shape` over `0..letters`, by dynamic programming over columns
/// viewed as subsets.
pub fn classical_contents(shape: &Partition, letters: usize) -> HashMap<Vec<u32>, u64> {
    let heights = shape.conjugate();
    let mut out = HashMap::new();
    if heights.is_empty() {
        out.insert(vec![0; letters], 1);
        return out;
    }
    let subsets = |h: usize| -> Vec<Vec<u8>> {
        (0u64..1 << letters)
            .filter(|b| b.count_ones() as usize == h)
            .map(|b| (0..letters as u8).filter(|&i| b >> i & 1 == 1).collect())
            .collect()
    };
    let content = |col: &[u8]| {
        let mut c = vec![0u32; letters];
        for &i in col {
            c[i as usize] += 1;
        }
        c
    };
    let mut layer: HashMap<Vec<u8>, HashMap<Vec<u32>, u64>> = subsets(heights.part(0))
        .into_iter()
        .map(|col| {
            let c = content(&col);
            (col, HashMap::from([(c, 1)]))
        })
        .collect();
    for &h in &heights.parts()[1..] {
        let cols = subsets(h);
        let mut next: HashMap<Vec<u8>, HashMap<Vec<u32>, u64>> = HashMap::new();
        for (prev, dist) in &layer {
            for col in cols.iter().filter(|col| col.iter().zip(prev).all(|(y, x)| y >= x)) {
                let add = content(col);
                let slot = next.entry(col.clone()).or_default();
                for (c, &mult) in dist {
                    let key: Vec<u32> = c.iter().zip(&add).map(|(a, b)| a + b).collect();
                    *slot.entry(key).or_default() += mult;
                }
            }
        }
        layer = next;
    }
    for dist in layer.into_values() {
        for (c, mult) in dist {
            *out.entry(c).or_default() += mult;
        }
    }
    out
}

/// The weight multiset of `K(λ)` predicted by
/// `ch K(λ) = Π(1 + e^{-β}) · ch V_{m|0}(λ₊) · ch V_{0|n}(λ₋)`.
pub fn oracle_character(rank: Rank, lambda: &Weight) -> Multiset {
    let (m, n) = (rank.m(), rank.n());
    let c = (-lambda.bar(1)).max(0);
    let d = (-lambda.unbar(n)).max(0);
    let plus_shape = Partition::from_signed(&lambda.barred().iter().map(|x| x + c).collect::<Vec<_>>())
        .expect("dominant");
    let minus_shape = Partition::from_signed(&lambda.unbarred().iter().map(|x| x + d).collect::<Vec<_>>())
        .expect("dominant");
    // classical letter t = 0 is m̄ on the plus side, 1 on the minus side
    let plus: Vec<(Vec<i64>, u64)> = classical_contents(&plus_shape, m)
        .into_iter()
        .map(|(cnt, mult)| {
            let mut w = vec![0i64; m + n];
            for (t, &k) in cnt.iter().enumerate() {
                w[t] = k as i64 - c;
            }
            (w, mult)
        })
        .collect();
    let minus: Vec<(Vec<i64>, u64)> = classical_contents(&minus_shape, n)
        .into_iter()
        .map(|(cnt, mult)| {
            let mut w = vec![0i64; m + n];
            for (t, &k) in cnt.iter().enumerate() {
                w[m + t] = k as i64 - d;
            }
            (w, mult)
        })
        .collect();
    let mut odd: Multiset = HashMap::new();
    for bits in 0u64..1 << (m * n) {
        let mut w = vec![0i64; m + n];
        for i in 1..=m {
            for j in 1..=n {
                if bits >> ((j - 1) * m + (i - 1)) & 1 == 1 {
                    w[m - i] -= 1;
                    w[m + j - 1] += 1;
                }
            }
        }
        *odd.entry(w).or_default() += 1;
    }
    let mut out: Multiset = HashMap::new();
    for (a, ma) in &odd {
        for (b, mb) in &plus {
            for (c2, mc) in &minus {
                let w: Vec<i64> = (0..m + n).map(|i| a[i] + b[i] + c2[i]).collect();
                *out.entry(w).or_default() += ma * mb * mc;
            }
        }
    }
    out
}

/// Vertex count and weight multiset against [`oracle_character`].
pub fn check_character<V: Clone + Eq + std::hash::Hash + Ord + Send + Sync + Debug>(
    g: &CrystalGraph<V>,
    lambda: &Weight,
) -> CheckResult {
    let mut res = CheckResult::new("character");
    let oracle = oracle_character(g.rank(), lambda);
    let expected: u64 = oracle.values().sum();
    let mut got: Multiset = HashMap::new();
    for w in g.weights() {
        *got.entry(w.coords().to_vec()).or_default() += 1;
    }
    res.count("vertices", g.len());
    res.count("oracle", expected as usize);
    res.count("weights", oracle.len());
    if g.len() as u64 != expected {
        res.fail(|| format!("{} vertices, oracle predicts {expected}", g.len()));
    }
    let mut keys: Vec<&Vec<i64>> = oracle.keys().chain(got.keys()).collect();
    keys.sort();
    keys.dedup();
    for w in keys {
        let (a, b) = (got.get(w).copied().unwrap_or(0), oracle.get(w).copied().unwrap_or(0));
        if a != b {
            res.fail(|| format!("weight {w:?}: multiplicity {a}, oracle {b}"));
        }
    }
    res
}

/// `ρ_λ` is a weight preserving bijection onto `𝒦_λ` commuting with every
/// `ẽ_k`, `f̃_k`, nulls included.
pub fn check_rho(rank: Rank, lambda: &Weight, ell: usize, rule: ZeroRule) -> CheckResult {
    let mut res = CheckResult::new("rho");
    let kappa = match KappaCrystal::new(rank, lambda, ell) {
        Ok(k) => k.with_rule(rule),
        Err(e) => {
            res.fail(|| e.to_string());
            return res;
        }
    };
    let kac = kappa.kac_domain();
    let domain = kac.enumerate();
    let target_size = kappa.enumerate().len();
    res.count("ell", ell);
    res.count("domain", domain.len());
    res.count("kappa", target_size);
    if domain.len() != target_size {
        res.fail(|| format!("|domain| = {} but |K_lambda| = {target_size}", domain.len()));
    }
    let images: Vec<Result<crate::rsk::KappaElement>> = domain.par_iter().map(|x| kappa.rho(x)).collect();
    let mut bad: Vec<String> = Vec::new();
    let mut rho_of = HashMap::with_capacity(domain.len());
    for (x, y) in domain.iter().zip(&images) {
        match y {
            Ok(y) => {
                rho_of.insert(x, y);
            }
            Err(e) => bad.push(format!("rho({x}): {e}")),
        }
    }
    // Injective into a set of the same size, hence a bijection.
    let distinct: HashSet<_> = rho_of.values().collect();
    if distinct.len() != rho_of.len() {
        bad.push(format!("rho is not injective: {} images for {} elements", distinct.len(), rho_of.len()));
    }
    let colors = rank.colors();
    bad.extend(domain.par_iter().filter_map(|x| {
        let y = *rho_of.get(x)?;
        if kappa.weight(y) != kac.weight(x) {
            return Some(format!("rho({x}) = {y} changes the weight"));
        }
        if !kappa.contains(y) {
            return Some(format!("rho({x}) = {y} is not in K_lambda"));
        }
        for &k in &colors {
            for dir in [Dir::E, Dir::F] {
                let lhs = kac.apply(k, dir, x).map(|z| rho_of.get(&z).copied());
                let rhs = kappa.apply(k, dir, y);
                if lhs != rhs.as_ref().map(Some) {
                    return Some(format!(
                        "{dir:?}_{k} on {x}: rho(x~ b) = {}, x~ rho(b) = {}",
                        show(&lhs),
                        show(&rhs.as_ref().map(Some))
                    ));
                }
            }
        }
        None
    }).collect::<Vec<_>>());
    res.count("failures", bad.len());
    if let Some(w) = bad.first() {
        res.fail(|| w.to_string());
    }
    res
}

fn show<T: std::fmt::Display>(x: &Option<Option<T>>) -> String {
    match x {
        None => "null".into(),
        Some(None) => "<error>".into(),
        Some(Some(y)) => y.to_string(),
    }
}

/// `ς^k` shifts weights by `kδ` and commutes with every operator.
pub fn check_shift(rank: Rank, lambda: &Weight, k: i64) -> CheckResult {
    let mut res = CheckResult::new("shift");
    let shift = match Shift::new(rank, lambda, k) {
        Ok(s) => s,
        Err(e) => {
            res.fail(|| e.to_string());
            return res;
        }
    };
    let kd = delta(rank).scaled(k);
    let domain = shift.source.enumerate();
    res.count("domain", domain.len());
    res.count("k_abs", k.unsigned_abs() as usize);
    let colors = rank.colors();
    let bad: Vec<String> = domain
        .par_iter()
        .filter_map(|x| {
            let y = shift.apply(x)?;
            if shift.target.weight(&y) != &shift.source.weight(x) + &kd {
                return Some(format!("weight of {x} not shifted by {kd}"));
            }
            for &c in &colors {
                for dir in [Dir::E, Dir::F] {
                    let lhs = shift.source.apply(c, dir, x).and_then(|z| shift.apply(&z));
                    let rhs = shift.target.apply(c, dir, &y);
                    if lhs != rhs {
                        return Some(format!("{dir:?}_{c} does not commute with the shift at {x}"));
                    }
                }
            }
            None
        })
        .collect();
    if let Some(w) = bad.first() {
        res.fail(|| w.clone());
    }
    res
}

/// `s_η(1^m)` by the hook-content formula.
fn schur_dim(shape: &Partition, m: usize) -> u128 {
    let conj = shape.conjugate();
    let (mut num, mut den) = (1u128, 1u128);
    for r in 0..shape.len() {
        for c in 0..shape.part(r) {
            let content = m as i64 + c as i64 - r as i64;
            if content <= 0 {
                return 0;
            }
            num *= content as u128;
            den *= (shape.part(r) - c + conj.part(c) - r - 1) as u128;
        }
    }
    num / den
}

fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `s_{α/β}(1^n)` by Jacobi-Trudi with `h_k(1^n) = C(n+k-1, k)`, evaluated
/// with fraction-free elimination.
fn skew_schur_dim(alpha: &Partition, beta: &Partition, n: usize) -> u128 {
    let l = alpha.len();
    if l == 0 {
        return 1;
    }
    let h = |k: i64| if k < 0 { 0 } else { binomial(n as i64 + k - 1, k) };
    let mut a: Vec<Vec<i128>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| h(alpha.part(i) as i64 - beta.part(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..l {
        if a[k][k] == 0 {
            match (k + 1..l).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..l {
            for j in k + 1..l {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[l - 1][l - 1]) as u128
}

/// `#SST_𝓑(λ°) = Σ_η s_η(1^m) · s_{λ°′/η′}(1^n)`, summed over `η ⊆ λ°`.
pub fn oracle_hook_count(rank: Rank, hook: &Partition) -> u128 {
    let conj = hook.conjugate();
    hook.subpartitions()
        .iter()
        .filter(|eta| eta.len() <= rank.m())
        .map(|eta| schur_dim(eta, rank.m()) * skew_schur_dim(&conj, &eta.conjugate(), rank.n()))
        .sum()
}

/// `ξ_λ` is injective, weight preserving and intertwining, agrees with the
/// column-complement description, `π̄_λ ∘ ξ_λ = id`, and the image has
/// `#SST_𝓑(λ°)` elements.
pub fn check_compat(rank: Rank, lambda: &Weight, cap: usize, corrupt: bool) -> CheckResult {
    let mut res = CheckResult::new("compat");
    let emb = match Embedding::new(rank, lambda) {
        Ok(e) => e,
        Err(e) => {
            res.fail(|| e.to_string());
            return res;
        }
    };
    let domain_crystal = emb.domain();
    let domain = emb.enumerate_domain();
    let oracle = oracle_hook_count(rank, emb.hook());
    res.count("domain", domain.len());
    res.count("oracle", oracle as usize);
    if domain.len() as u128 != oracle {
        res.fail(|| format!("|SST_B({})| = {}, oracle {oracle}", emb.hook(), domain.len()));
    }
    let xi = |t: &crate::tableau::Tableau| -> Result<KacElement> {
        let mut b = emb.xi(t)?;
        if corrupt {
            // forget the odd roots: breaks injectivity and weights
            b.s = crate::kac::OddRootSet::empty(rank);
        }
        Ok(b)
    };
    let images: Vec<Result<KacElement>> = domain.par_iter().map(xi).collect();
    let mut seen = HashSet::new();
    for (t, b) in domain.iter().zip(&images) {
        match b {
            Err(e) => res.fail(|| format!("xi({t}): {e}")),
            Ok(b) => {
                if !seen.insert(b.clone()) {
                    res.fail(|| format!("xi is not injective: {t} maps onto an earlier image {b}"));
                }
                if emb.target().weight(b) != domain_crystal.weight(t) {
                    res.fail(|| format!("xi({t}) = {b} changes the weight"));
                }
            }
        }
    }
    res.count("image", seen.len());
    if !res.pass {
        return res;
    }
    let colors = rank.colors();
    let index: HashMap<&crate::tableau::Tableau, &KacElement> =
        domain.iter().zip(images.iter().map(|b| b.as_ref().expect("checked"))).collect();
    let bad: Vec<String> = domain
        .par_iter()
        .filter_map(|t| {
            let b = index[t];
            for &k in &colors {
                for dir in [Dir::E, Dir::F] {
                    if let Some(t2) = domain_crystal.apply(k, dir, t) {
                        let lhs = index.get(&t2).copied();
                        let rhs = emb.target().apply(k, dir, b);
                        if lhs != rhs.as_ref() {
                            return Some(format!("{dir:?}_{k} on {t}: xi(x~ t) != x~ xi(t)"));
                        }
                    }
                }
            }
            if emb.xi_by_complement(t).as_ref() != Ok(b) {
                return Some(format!("column complement disagrees with transport at {t}"));
            }
            if emb.pi_bar(b).as_ref() != Some(t) {
                return Some(format!("pi_bar(xi({t})) != {t}"));
            }
            None
        })
        .collect();
    res.count("intertwining_failures", bad.len());
    if let Some(w) = bad.first() {
        res.fail(|| w.clone());
    }
    if emb.target().cardinality() <= cap as u128 {
        let preimages = emb
            .target()
            .enumerate()
            .par_iter()
            .filter(|b| emb.pi_bar(b).is_some())
            .count();
        res.count("pi_bar_defined", preimages);
        if preimages as u128 != oracle {
            res.fail(|| format!("pi_bar is defined on {preimages} elements, oracle {oracle}"));
        }
    }
    res
}

/// Both admissible readings give the same operators on every tableau of `shape`.
pub fn check_readings(rank: Rank, alphabet: Alphabet, shape: &SkewShape) -> CheckResult {
    let mut res = CheckResult::new("readings");
    let tableaux = crate::tableau::enumerate_sst(rank, alphabet, shape);
    res.count("tableaux", tableaux.len());
    let colors = alphabet_colors(rank, alphabet);
    let bad = tableaux.par_iter().find_first(|t| {
        colors.iter().any(|&k| {
            [Dir::E, Dir::F].into_iter().any(|dir| {
                apply_tableau(rank, k, dir, t, ReadingOrder::ColumnsRightToLeft).ok()
                    != apply_tableau(rank, k, dir, t, ReadingOrder::RowsRightToLeft).ok()
            })
        })
    });
    if let Some(t) = bad {
        res.fail(|| format!("readings disagree on {t}"));
    }
    res
}

/// The `k ≤ 0` closest to zero with `λ + kδ` in the window of the dual model.
pub fn window_shift(rank: Rank, lambda: &Weight) -> i64 {
    0.min(-lambda.bar(rank.m())).min(lambda.unbar(rank.n()))
}

fn instance_name(rank: Rank, lambda: &Weight) -> String {
    format!("{rank} {lambda}")
}

/// Runs the selected checks on `K(λ)`. Fake highest weight vertices found
/// by the connectedness check are returned alongside the report.
pub fn run_instance(rank: Rank, lambda: &Weight, opts: &Options) -> Result<(Report, Option<String>)> {
    let kac = KacCrystal::new(rank, lambda)?;
    let mut checks = Vec::new();
    let mut fake = None;
    let wants = |c: Check| opts.checks.contains(&c);
    if wants(Check::Axioms) || wants(Check::Connected) || wants(Check::Character) {
        let g = kac.generate_graph(opts.cap)?;
        if wants(Check::Axioms) {
            let mut g2;
            let graph = if opts.corrupt {
                g2 = g.clone();
                g2.corrupt_reverse_first_edge();
                &g2
            } else {
                &g
            };
            checks.push(timed(|| check_axioms(graph, |x| kac.contains(x))));
        }
        if wants(Check::Connected) {
            let mut g2;
            let graph = if opts.corrupt {
                g2 = g.clone();
                g2.corrupt_drop_color(Color::ZERO);
                &g2
            } else {
                &g
            };
            checks.push(timed(|| {
                let (r, example) = check_connected(graph, lambda);
                fake = example;
                r
            }));
        }
        if wants(Check::Character) {
            let mut g2;
            let graph = if opts.corrupt {
                g2 = g.clone();
                let w = &g2.weights()[0] - &Color::ZERO.simple_root(rank);
                g2.corrupt_weight(0, w);
                &g2
            } else {
                &g
            };
            checks.push(timed(|| check_character(graph, lambda)));
        }
    }
    let k = window_shift(rank, lambda);
    let shifted = lambda.try_add(&delta(rank).scaled(k))?;
    if wants(Check::Rho) {
        let rule = if opts.corrupt { ZeroRule::Corrupted } else { ZeroRule::Standard };
        let key = format!("{} {rule:?}", instance_name(rank, &shifted));
        let cached = opts.rho_cache.lock().expect("cache poisoned").get(&key).cloned();
        let result = match cached {
            Some(r) => r,
            None => {
                let r = timed(|| check_rho(rank, &shifted, default_ell(&shifted), rule));
                opts.rho_cache.lock().expect("cache poisoned").insert(key, r.clone());
                r
            }
        };
        checks.push(result);
    }
    if wants(Check::Shift) && k != 0 {
        checks.push(timed(|| check_shift(rank, lambda, k)));
    }
    if lambda.is_polynomial() {
        if wants(Check::Compat) {
            checks.push(timed(|| check_compat(rank, lambda, opts.cap, opts.corrupt)));
        }
        if wants(Check::Readings) {
            let hook = crate::base::hook_bijection_inv(rank, lambda)?;
            checks.push(timed(|| check_readings(rank, Alphabet::B, &SkewShape::straight(hook))));
        }
    }
    Ok((
        Report {
            instance: instance_name(rank, lambda),
            checks,
        },
        fake,
    ))
}

/// All dominant weights of rank `(m|n)` with coordinates in `lo..=hi`.
pub fn dominant_weights(rank: Rank, lo: i64, hi: i64) -> Vec<Weight> {
    fn seqs(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (lo..=hi).rev() {
            for mut rest in seqs(len - 1, lo, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut out = Vec::new();
    for b in seqs(rank.m(), lo, hi) {
        for u in seqs(rank.n(), lo, hi) {
            out.push(Weight::new(rank, &b, &u).expect("lengths match"));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub instance: String,
    pub cardinality: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub reports: Vec<Report>,
    pub skipped: Vec<Skipped>,
    /// Instances with a fake highest weight vertex, with one example each.
    pub fake_sources: Vec<(String, String)>,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.reports.iter().all(Report::pass)
    }

    pub fn strip_timing(&mut self) {
        self.reports.iter_mut().for_each(Report::strip_timing);
    }

    /// Reorders every list to follow `instances`.
    pub fn sort_canonical(&mut self, instances: &[(Rank, Weight)]) {
        let pos: HashMap<String, usize> = instances
            .iter()
            .enumerate()
            .map(|(i, (rank, lambda))| (instance_name(*rank, lambda), i))
            .collect();
        let key = |name: &str| pos.get(name).copied().unwrap_or(usize::MAX);
        self.reports.sort_by_key(|r| key(&r.instance));
        self.skipped.sort_by_key(|s| key(&s.instance));
        self.fake_sources.sort_by_key(|(name, _)| key(name));
    }

    pub fn failures(&self) -> Vec<(&str, &CheckResult)> {
        self.reports
            .iter()
            .flat_map(|r| r.checks.iter().filter(|c| !c.pass).map(move |c| (r.instance.as_str(), c)))
            .collect()
    }
}

pub const SWEEP_RANKS: [(usize, usize); 5] = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)];

/// The default sweep: every rank in [`SWEEP_RANKS`], every dominant `λ` with
/// coordinates in `[-2, 4]`. Instances above the cap are listed as skipped.
pub fn sweep(opts: &Options) -> Result<SweepReport> {
    sweep_over(&SWEEP_RANKS, -2, 4, opts)
}

pub fn sweep_over(ranks: &[(usize, usize)], lo: i64, hi: i64, opts: &Options) -> Result<SweepReport> {
    run_instances(&sweep_instances(ranks, lo, hi)?, opts)
}

/// Every dominant weight with coordinates in `lo..=hi`, rank by rank.
pub fn sweep_instances(ranks: &[(usize, usize)], lo: i64, hi: i64) -> Result<Vec<(Rank, Weight)>> {
    let mut instances = Vec::new();
    for &(m, n) in ranks {
        let rank = Rank::new(m, n)?;
        instances.extend(dominant_weights(rank, lo, hi).into_iter().map(|w| (rank, w)));
    }
    Ok(instances)
}

/// Runs every instance in parallel; the report lists them in input order.
pub fn run_instances(instances: &[(Rank, Weight)], opts: &Options) -> Result<SweepReport> {
    enum Outcome {
        Ran(Report, Option<String>),
        Skipped(Skipped),
    }
    let outcomes = instances
        .par_iter()
        .map(|(rank, lambda)| {
            let card = KacCrystal::new(*rank, lambda)?.cardinality();
            if card > opts.cap as u128 {
                return Ok(Outcome::Skipped(Skipped {
                    instance: instance_name(*rank, lambda),
                    cardinality: card.to_string(),
                }));
            }
            let (report, fake) = run_instance(*rank, lambda, opts)?;
            Ok(Outcome::Ran(report, fake))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = SweepReport {
        reports: Vec::new(),
        skipped: Vec::new(),
        fake_sources: Vec::new(),
    };
    for outcome in outcomes {
        match outcome {
            Outcome::Ran(report, fake) => {
                if let Some(example) = fake {
                    out.fake_sources.push((report.instance.clone(), example));
                }
                out.reports.push(report);
            }
            Outcome::Skipped(s) => out.skipped.push(s),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schur_oracles() {
        // s_(2,1)(1^3) = 8, s_(2)(1^2) = 3
        assert_eq!(schur_dim(&Partition::parse("2,1").unwrap(), 3), 8);
        assert_eq!(skew_schur_dim(&Partition::parse("2").unwrap(), &Partition::empty(), 2), 3);
        assert_eq!(skew_schur_dim(&Partition::parse("2,1").unwrap(), &Partition::parse("1").unwrap(), 2), 4);
        let total: u64 = classical_contents(&Partition::parse("2,1").unwrap(), 3).values().sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn small_instance_passes() {
        let rank = Rank::new(2, 1).unwrap();
        let lam = Weight::parse_for(rank, "2,1|1").unwrap();
        let (report, _) = run_instance(rank, &lam, &Options::default()).unwrap();
        assert!(report.pass(), "{report:?}");
        assert_eq!(report.checks.len(), 7);
    }

    #[test]
    fn corrupted_instance_fails_everywhere() {
        let rank = Rank::new(2, 1).unwrap();
        let lam = Weight::parse_for(rank, "2,1|1").unwrap();
        let opts = Options {
            corrupt: true,
            ..Options::default()
        };
        let (report, _) = run_instance(rank, &lam, &opts).unwrap();
        for name in ["axioms", "connected", "character", "rho", "compat"] {
            let c = report.check(name).unwrap();
            assert!(!c.pass && c.witness.is_some(), "{name}: {c:?}");
        }
    }
}
