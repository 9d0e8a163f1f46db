//! Ranks, graded alphabets, weights, roots and partitions for gl(m|n).
//!
//! Weights are stored in the order `λ_m̄, …, λ_1̄, λ_1, …, λ_n` and printed as
//! `"a,b,c|d,e,f"`. Simple-root colors are signed integers: `ī ↦ -i`, `0 ↦ 0`,
//! `j ↦ j`, so the integer order on colors is the order on the index set `I`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank {
    m: usize,
    n: usize,
}

impl Rank {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 || m * n > 64 {
            return Err(Error::InvalidRank { m, n });
        }
        Ok(Rank { m, n })
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn dim(self) -> usize {
        self.m + self.n
    }

    /// All colors of `I_{m|n}` in increasing order.
    pub fn colors(self) -> Vec<Color> {
        let mut out = Vec::with_capacity(self.m + self.n - 1);
        out.extend(self.even_colors());
        out.push(Color::ZERO);
        out.extend(self.odd_colors());
        out
    }

    /// `I_{m|0}`, increasing.
    pub fn even_colors(self) -> impl Iterator<Item = Color> {
        (1..self.m).rev().map(|i| Color(-(i as i32)))
    }

    /// `I_{0|n}`, increasing.
    pub fn odd_colors(self) -> impl Iterator<Item = Color> {
        (1..self.n).map(|j| Color(j as i32))
    }

    pub fn has_color(self, k: Color) -> bool {
        match k.kind() {
            ColorKind::Even(i) => i < self.m,
            ColorKind::Zero => true,
            ColorKind::Odd(j) => j < self.n,
        }
    }

    /// The main alphabet `m̄ < … < 1̄ < 1 < … < n`.
    pub fn letters(self) -> Vec<Letter> {
        (1..=self.m)
            .rev()
            .map(Letter::Barred)
            .chain((1..=self.n).map(Letter::Unbarred))
            .collect()
    }

    /// Number of negative odd roots, `mn`.
    pub fn odd_root_count(self) -> usize {
        self.m * self.n
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.m, self.n)
    }
}

/// A letter of the graded alphabets `𝓑 = 𝓑₊ ⊔ 𝓑₋` and of the dual alphabet `𝓑₊∨`.
///
/// Indices are 1-based. Barred and dual letters are even, unbarred letters odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Barred(usize),
    Unbarred(usize),
    Dual(usize),
}

impl Letter {
    pub fn is_odd(self) -> bool {
        matches!(self, Letter::Unbarred(_))
    }

    pub fn index(self) -> usize {
        match self {
            Letter::Barred(i) | Letter::Unbarred(i) | Letter::Dual(i) => i,
        }
    }

    fn sort_key(self) -> (u8, i64) {
        match self {
            Letter::Barred(i) => (0, -(i as i64)),
            Letter::Unbarred(j) => (1, j as i64),
            Letter::Dual(i) => (2, i as i64),
        }
    }

    /// The weight `ε_ī`, `ε_j` or `-ε_ī`.
    pub fn weight(self, rank: Rank) -> Weight {
        let mut w = Weight::zero(rank);
        match self {
            Letter::Barred(i) => *w.bar_mut(i) += 1,
            Letter::Unbarred(j) => *w.unbar_mut(j) += 1,
            Letter::Dual(i) => *w.bar_mut(i) -= 1,
        }
        w
    }

    /// Parses `b<i>`, `d<i>` or `<j>`.
    pub fn parse(s: &str) -> Result<Letter> {
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("bad letter {s:?}"),
        };
        let (ctor, digits): (fn(usize) -> Letter, &str) = if let Some(rest) = s.strip_prefix('b') {
            (Letter::Barred, rest)
        } else if let Some(rest) = s.strip_prefix('d') {
            (Letter::Dual, rest)
        } else {
            (Letter::Unbarred, s)
        };
        let i: usize = digits.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        Ok(ctor(i))
    }

    pub fn fits(self, rank: Rank) -> bool {
        match self {
            Letter::Barred(i) | Letter::Dual(i) => (1..=rank.m).contains(&i),
            Letter::Unbarred(j) => (1..=rank.n).contains(&j),
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Barred(i) => write!(f, "b{i}"),
            Letter::Unbarred(j) => write!(f, "{j}"),
            Letter::Dual(i) => write!(f, "d{i}"),
        }
    }
}

/// A simple-root color `k ∈ I`, encoded as a signed integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(pub i32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorKind {
    /// `ī ∈ I_{m|0}`
    Even(usize),
    Zero,
    /// `j ∈ I_{0|n}`
    Odd(usize),
}

impl Color {
    pub const ZERO: Color = Color(0);

    pub fn bar(i: usize) -> Color {
        Color(-(i as i32))
    }

    pub fn odd(j: usize) -> Color {
        Color(j as i32)
    }

    pub fn kind(self) -> ColorKind {
        match self.0.cmp(&0) {
            Ordering::Less => ColorKind::Even(self.0.unsigned_abs() as usize),
            Ordering::Equal => ColorKind::Zero,
            Ordering::Greater => ColorKind::Odd(self.0 as usize),
        }
    }

    /// The simple root `α_k`.
    pub fn simple_root(self, rank: Rank) -> Weight {
        let mut w = Weight::zero(rank);
        match self.kind() {
            ColorKind::Even(i) => {
                *w.bar_mut(i + 1) += 1;
                *w.bar_mut(i) -= 1;
            }
            ColorKind::Zero => {
                *w.bar_mut(1) += 1;
                *w.unbar_mut(1) -= 1;
            }
            ColorKind::Odd(j) => {
                *w.unbar_mut(j) += 1;
                *w.unbar_mut(j + 1) -= 1;
            }
        }
        w
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An integral weight `Σ λ_a ε_a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    rank: Rank,
    coords: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: Rank) -> Self {
        Weight {
            rank,
            coords: vec![0; rank.dim()],
        }
    }

    /// Builds a weight from the barred part `(λ_m̄, …, λ_1̄)` and unbarred part `(λ_1, …, λ_n)`.
    pub fn new(rank: Rank, barred: &[i64], unbarred: &[i64]) -> Result<Self> {
        if barred.len() != rank.m || unbarred.len() != rank.n {
            return Err(Error::Parse {
                pos: 0,
                msg: format!(
                    "expected {}|{} coordinates, got {}|{}",
                    rank.m,
                    rank.n,
                    barred.len(),
                    unbarred.len()
                ),
            });
        }
        let mut coords = barred.to_vec();
        coords.extend_from_slice(unbarred);
        Ok(Weight { rank, coords })
    }

    /// Parses `"a,b,c|d,e"`; the rank is read off the coordinate counts.
    pub fn parse(s: &str) -> Result<Self> {
        let Some(bar) = s.find('|') else {
            return Err(Error::Parse {
                pos: s.len(),
                msg: "missing '|'".into(),
            });
        };
        if s[bar + 1..].contains('|') {
            return Err(Error::Parse {
                pos: bar + 1 + s[bar + 1..].find('|').unwrap(),
                msg: "more than one '|'".into(),
            });
        }
        let barred = parse_int_list(&s[..bar], 0)?;
        let unbarred = parse_int_list(&s[bar + 1..], bar + 1)?;
        let rank = Rank::new(barred.len(), unbarred.len())?;
        Weight::new(rank, &barred, &unbarred)
    }

    /// Parses with a known rank.
    pub fn parse_for(rank: Rank, s: &str) -> Result<Self> {
        let w = Weight::parse(s)?;
        if w.rank != rank {
            return Err(Error::RankMismatch {
                left: rank,
                right: w.rank,
            });
        }
        Ok(w)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// `(λ_m̄, …, λ_1̄)`
    pub fn barred(&self) -> &[i64] {
        &self.coords[..self.rank.m]
    }

    /// `(λ_1, …, λ_n)`
    pub fn unbarred(&self) -> &[i64] {
        &self.coords[self.rank.m..]
    }

    /// `λ_ī`
    pub fn bar(&self, i: usize) -> i64 {
        self.coords[self.rank.m - i]
    }

    /// `λ_j`
    pub fn unbar(&self, j: usize) -> i64 {
        self.coords[self.rank.m + j - 1]
    }

    pub fn bar_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.coords[self.rank.m - i]
    }

    pub fn unbar_mut(&mut self, j: usize) -> &mut i64 {
        &mut self.coords[self.rank.m + j - 1]
    }

    pub fn try_add(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(Weight {
            rank: self.rank,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Weight) -> Result<Weight> {
        self.try_add(&-other)
    }

    pub fn add_assign(&mut self, other: &Weight) {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b;
        }
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            rank: self.rank,
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// The bilinear form with `(ε_a|ε_b) = (-1)^{|a|} δ_ab`.
    pub fn form(&self, other: &Weight) -> Result<i64> {
        self.check_rank(other)?;
        let m = self.rank.m;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .enumerate()
            .map(|(p, (a, b))| if p < m { a * b } else { -a * b })
            .sum())
    }

    /// `⟨h_k, λ⟩`.
    pub fn coroot(&self, k: Color) -> i64 {
        match k.kind() {
            ColorKind::Even(i) => self.bar(i + 1) - self.bar(i),
            ColorKind::Zero => self.bar(1) + self.unbar(1),
            ColorKind::Odd(j) => self.unbar(j) - self.unbar(j + 1),
        }
    }

    /// `(λ_1 + … + λ_n) mod 2`.
    pub fn parity(&self) -> u8 {
        (self.unbarred().iter().sum::<i64>().rem_euclid(2)) as u8
    }

    /// Membership in `P⁺`.
    pub fn is_dominant(&self) -> bool {
        self.barred().windows(2).all(|w| w[0] >= w[1])
            && self.unbarred().windows(2).all(|w| w[0] >= w[1])
    }

    /// Membership in `P̃⁺`: `λ_m̄ ≥ … ≥ λ_1̄ ≥ λ'_1 ≥ λ'_2 ≥ …` with `(λ_1,…,λ_n)` a partition.
    pub fn is_polynomial(&self) -> bool {
        if !self.is_dominant() || self.unbarred().iter().any(|&c| c < 0) {
            return false;
        }
        let minus = Partition::from_signed(self.unbarred()).expect("checked non-negative");
        let first_conj = minus.conjugate().part(0) as i64;
        self.bar(1) >= first_conj
    }

    fn check_rank(&self, other: &Weight) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[i64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}|{}", join(self.barred()), join(self.unbarred()))
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        self.try_add(rhs).expect("rank mismatch")
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.try_sub(rhs).expect("rank mismatch")
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

/// `δ₊ = ε_m̄ + … + ε_1̄`.
pub fn delta_plus(rank: Rank) -> Weight {
    let mut w = Weight::zero(rank);
    w.coords[..rank.m].fill(1);
    w
}

/// `δ₋ = -ε_1 - … - ε_n`.
pub fn delta_minus(rank: Rank) -> Weight {
    let mut w = Weight::zero(rank);
    w.coords[rank.m..].fill(-1);
    w
}

/// `δ = δ₊ + δ₋`.
pub fn delta(rank: Rank) -> Weight {
    &delta_plus(rank) + &delta_minus(rank)
}

/// Twice the Weyl vector, `2ρ = Σ_{Φ⁺₀} α - Σ_{Φ⁺₁} β`, which is integral.
pub fn two_rho(rank: Rank) -> Weight {
    let (m, n) = (rank.m as i64, rank.n as i64);
    let mut w = Weight::zero(rank);
    for i in 1..=rank.m {
        *w.bar_mut(i) = 2 * i as i64 - m - 1 - n;
    }
    for j in 1..=rank.n {
        *w.unbar_mut(j) = n + 1 - 2 * j as i64 + m;
    }
    w
}

/// A root of gl(m|n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Root {
    Simple(Color),
    /// `ε_a - ε_b`
    Difference(Letter, Letter),
}

impl Root {
    pub fn weight(self, rank: Rank) -> Weight {
        match self {
            Root::Simple(k) => k.simple_root(rank),
            Root::Difference(a, b) => &a.weight(rank) - &b.weight(rank),
        }
    }

    /// `Φ⁺₁ = {ε_ī - ε_j}`.
    pub fn odd_positive(rank: Rank) -> Vec<Root> {
        let mut out = Vec::with_capacity(rank.m * rank.n);
        for i in 1..=rank.m {
            for j in 1..=rank.n {
                out.push(Root::Difference(Letter::Barred(i), Letter::Unbarred(j)));
            }
        }
        out
    }
}

/// A negative odd root `-ε_ī + ε_j`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddRoot {
    pub i: usize,
    pub j: usize,
}

impl OddRoot {
    pub fn new(i: usize, j: usize) -> Self {
        OddRoot { i, j }
    }

    pub fn weight(self, rank: Rank) -> Weight {
        let mut w = Weight::zero(rank);
        *w.bar_mut(self.i) -= 1;
        *w.unbar_mut(self.j) += 1;
        w
    }
}

impl fmt::Display for OddRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "-e(b{})+e({})", self.i, self.j)
    }
}

/// Whether `λ ∈ P⁺` is typical: `(α | λ+ρ) ≠ 0` for every `α ∈ Φ⁺₁`.
pub fn is_typical(rank: Rank, lam: &Weight) -> Result<bool> {
    if lam.rank != rank {
        return Err(Error::RankMismatch {
            left: rank,
            right: lam.rank,
        });
    }
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    // (ε_ī - ε_j | 2λ + 2ρ) = 2(λ_ī + λ_j + i - j)
    let shifted = &lam.scaled(2) + &two_rho(rank);
    for root in Root::odd_positive(rank) {
        if root.weight(rank).form(&shifted)? == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A partition, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::ShapeViolation(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(k^rows)`
    pub fn rectangle(width: usize, rows: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition(vec![width; rows])
    }

    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::ShapeViolation(format!("{parts:?} has negative parts")));
        }
        Partition::new(parts.iter().map(|&p| p as usize).collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts = parse_int_list(s, 0)?;
        Partition::from_signed(&parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().take_while(|&&p| p > c).count())
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.0.iter().enumerate().all(|(i, &p)| self.part(i) >= p)
    }

    /// `μ_{m+1} ≤ n`.
    pub fn is_hook(&self, rank: Rank) -> bool {
        self.part(rank.m) <= rank.n
    }

    /// All partitions contained in `self`, in lexicographic order of parts.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(bound: &[usize], prefix: &mut Vec<usize>, cap: usize, out: &mut Vec<Partition>) {
            if prefix.len() == bound.len() {
                out.push(Partition::new(prefix.clone()).expect("decreasing"));
                return;
            }
            let limit = bound[prefix.len()].min(cap);
            for p in 0..=limit {
                prefix.push(p);
                go(bound, prefix, p, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, &mut Vec::new(), usize::MAX, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Sends an `(m|n)`-hook partition `μ` to `(μ_1,…,μ_m | ν'_1,…,ν'_n)` with `ν_i = μ_{m+i}`.
pub fn hook_bijection(rank: Rank, mu: &Partition) -> Result<Weight> {
    if !mu.is_hook(rank) {
        return Err(Error::HookViolation(mu.parts().to_vec()));
    }
    let barred: Vec<i64> = (0..rank.m).map(|i| mu.part(i) as i64).collect();
    let nu = Partition(mu.parts().iter().skip(rank.m).copied().collect());
    let nu_conj = nu.conjugate();
    let unbarred: Vec<i64> = (0..rank.n).map(|j| nu_conj.part(j) as i64).collect();
    Weight::new(rank, &barred, &unbarred)
}

/// Inverse of [`hook_bijection`] on `P̃⁺`.
pub fn hook_bijection_inv(rank: Rank, lam: &Weight) -> Result<Partition> {
    if lam.rank != rank {
        return Err(Error::RankMismatch {
            left: rank,
            right: lam.rank,
        });
    }
    if !lam.is_polynomial() {
        return Err(Error::NotPolynomial(lam.to_string()));
    }
    let mut parts: Vec<usize> = lam.barred().iter().map(|&c| c as usize).collect();
    let nu = Partition::from_signed(lam.unbarred())?.conjugate();
    parts.extend_from_slice(nu.parts());
    Partition::new(parts)
}

fn parse_int_list(s: &str, offset: usize) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for tok in s.split(',') {
        let t = tok.trim();
        let v = t.parse::<i64>().map_err(|_| Error::Parse {
            pos,
            msg: format!("expected an integer, found {t:?}"),
        })?;
        out.push(v);
        pos += tok.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(m: usize, n: usize) -> Rank {
        Rank::new(m, n).unwrap()
    }

    #[test]
    fn hook_bijection_examples() {
        let r = rank(3, 3);
        let mu = Partition::parse("4,3,2,1,1").unwrap();
        assert_eq!(hook_bijection(r, &mu).unwrap().to_string(), "4,3,2|2,0,0");
        assert_eq!(
            hook_bijection(r, &Partition::empty()).unwrap(),
            Weight::zero(r)
        );
        let mu = Partition::parse("3,3,2,1").unwrap();
        assert_eq!(
            hook_bijection(rank(2, 2), &mu).unwrap().to_string(),
            "3,3|2,1"
        );
    }

    #[test]
    fn hook_bijection_rejects_non_hook() {
        let mu = Partition::parse("3,3,3").unwrap();
        assert!(matches!(
            hook_bijection(rank(2, 2), &mu),
            Err(Error::HookViolation(_))
        ));
    }

    #[test]
    fn hook_bijection_round_trips_in_box() {
        // every μ ⊆ (4^4) that is a (2|2)-hook partition
        let r = rank(2, 2);
        let mut seen = std::collections::HashSet::new();
        for mu in Partition::rectangle(4, 4).subpartitions() {
            if !mu.is_hook(r) {
                continue;
            }
            let lam = hook_bijection(r, &mu).unwrap();
            assert!(lam.is_polynomial(), "{mu} -> {lam}");
            assert_eq!(hook_bijection_inv(r, &lam).unwrap(), mu);
            assert!(seen.insert(lam));
        }
    }

    #[test]
    fn form_signs() {
        let r = rank(2, 2);
        let e1bar = Letter::Barred(1).weight(r);
        let e1 = Letter::Unbarred(1).weight(r);
        assert_eq!(e1bar.form(&e1bar).unwrap(), 1);
        assert_eq!(e1.form(&e1).unwrap(), -1);
        let lam = Weight::parse("3,1|2,0").unwrap();
        assert_eq!(&lam + &Weight::zero(r), lam);
        assert!(matches!(
            lam.form(&Weight::zero(rank(1, 1))),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn simple_root_norms() {
        let r = rank(3, 4);
        for k in r.colors() {
            let a = k.simple_root(r);
            let expected = match k.kind() {
                ColorKind::Even(_) => 2,
                ColorKind::Zero => 0,
                ColorKind::Odd(_) => -2,
            };
            assert_eq!(a.form(&a).unwrap(), expected, "color {k}");
        }
    }

    #[test]
    fn coroot_matches_form() {
        // l_k ⟨h_k, λ⟩ = (α_k | λ), l_k = -1 on I_{0|n}
        let r = rank(3, 3);
        let lam = Weight::parse("5,-1,2|7,3,-4").unwrap();
        for k in r.colors() {
            let l = if matches!(k.kind(), ColorKind::Odd(_)) { -1 } else { 1 };
            assert_eq!(l * lam.coroot(k), k.simple_root(r).form(&lam).unwrap());
        }
    }

    #[test]
    fn parity_flips_across_alpha0() {
        let r = rank(2, 3);
        let a0 = Color::ZERO.simple_root(r);
        for s in ["0,0|0,0,0", "3,1|2,2,-1", "-2,-5|1,0,0"] {
            let lam = Weight::parse(s).unwrap();
            assert_eq!((&lam + &a0).parity(), 1 - lam.parity());
        }
    }

    #[test]
    fn weight_text_round_trip() {
        let w = Weight::parse("4,3,2|3,1,0").unwrap();
        assert_eq!(w.rank(), rank(3, 3));
        assert_eq!(w.bar(3), 4);
        assert_eq!(w.unbar(1), 3);
        assert_eq!(w.to_string(), "4,3,2|3,1,0");
        assert!(Weight::parse("4,3,2").is_err());
        assert!(matches!(
            Weight::parse("4,x|1"),
            Err(Error::Parse { pos: 2, .. })
        ));
    }

    #[test]
    fn partition_basics() {
        let p = Partition::parse("4,3,2,1,1").unwrap();
        assert_eq!(p.conjugate().parts(), &[5, 3, 2, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert!(p.contains(&Partition::parse("2,2").unwrap()));
        assert!(!p.is_hook(rank(2, 1)));
        assert!(p.is_hook(rank(3, 1)));
        assert_eq!(Partition::rectangle(2, 2).subpartitions().len(), 6);
    }

    #[test]
    fn dominance_and_polynomial() {
        assert!(Weight::parse("4,3,2|3,1,0").unwrap().is_polynomial());
        assert!(!Weight::parse("4,3,1|3,1,0").unwrap().is_polynomial());
        assert!(!Weight::parse("1,2|0,0").unwrap().is_dominant());
        assert!(Weight::parse("-1,-2|2,1").unwrap().is_dominant());
    }
}
