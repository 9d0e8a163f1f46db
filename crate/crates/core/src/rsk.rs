//! The skew dual RSK bridge `ρ_λ` between the dual model of a Kac crystal
//! and the tableau model
//!
//! ```text
//! 𝒦_λ = ⊔_{η ⊆ μ} SST_{𝓑₊∨}((ℓ^m)/η) × SST_{𝓑₋}(μ/η) × SST_{𝓑₋}(ν)
//! ```
//!
//! with `μ = (ℓ+λ_m̄, …, ℓ+λ_1̄)` and `ν = (λ_1, …, λ_n)′`.

use std::fmt;

use crate::base::{Color, ColorKind, Letter, OddRoot, Partition, Rank, Weight};
use crate::error::{Error, Result};
use crate::kac::{check_window, KacCrystal, KacElement, OddRootSet, RootOrder};
use crate::tableau::{enumerate_sst, Alphabet, ReadingOrder, SkewShape, Tableau};
use crate::word::{act_at, tableau_strings, Crystal, Dir};

/// An element `(P, Q, V)` of `𝒦_λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KappaElement {
    /// Over `𝓑₊∨`, anti-normal of shape `(ℓ^m)/η`.
    pub p: Tableau,
    /// Recording tableau over `𝓑₋` of shape `μ/η`.
    pub q: Tableau,
    /// Over `𝓑₋` of shape `ν`.
    pub v: Tableau,
}

impl KappaElement {
    /// The inner shape `η`.
    pub fn eta(&self) -> &Partition {
        self.p.shape().inner()
    }
}

impl fmt::Display for KappaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}], [{}], [{}])", self.p, self.q, self.v)
    }
}

/// How `ẽ_0`, `f̃_0` read the sign of a column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroRule {
    Standard,
    /// Drops the condition on the recording tableau; a negative control.
    Corrupted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sign {
    Plus,
    Minus,
    Dot,
}

/// The crystal `𝒦_λ`.
#[derive(Debug, Clone)]
pub struct KappaCrystal {
    rank: Rank,
    lambda: Weight,
    ell: usize,
    mu: Partition,
    v_shape: SkewShape,
    rule: ZeroRule,
    order: ReadingOrder,
    domain: KacCrystal,
}

/// Smallest `ℓ ≥ 1` with `ℓ + λ_1̄ ≥ n`, the range in which `ρ_λ` is a
/// bijection onto `𝒦_λ`.
pub fn default_ell(lambda: &Weight) -> usize {
    (lambda.rank().n() as i64 - lambda.bar(1)).max(1) as usize
}

impl KappaCrystal {
    pub fn new(rank: Rank, lambda: &Weight, ell: usize) -> Result<Self> {
        if lambda.rank() != rank {
            return Err(Error::RankMismatch {
                left: rank,
                right: lambda.rank(),
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        check_window(rank, lambda, ell)?;
        let mu: Vec<i64> = lambda.barred().iter().map(|x| x + ell as i64).collect();
        let nu = Partition::from_signed(lambda.unbarred())?.conjugate();
        Ok(KappaCrystal {
            rank,
            lambda: lambda.clone(),
            ell,
            mu: Partition::from_signed(&mu)?,
            v_shape: SkewShape::straight(nu),
            rule: ZeroRule::Standard,
            order: ReadingOrder::ColumnsRightToLeft,
            domain: KacCrystal::dual(rank, lambda, ell)?,
        })
    }

    pub fn with_rule(mut self, rule: ZeroRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Whether every row of `μ` has room for `n` insertions, so that `ρ_λ`
    /// is defined on the whole dual model. Below this, insertion can
    /// overflow the rectangle and `ρ_λ` is only a partial injection.
    pub fn is_bijective(&self) -> bool {
        self.mu.part(self.rank.m() - 1) >= self.rank.n()
    }

    /// The matching dual-model Kac crystal, the domain of `ρ_λ`.
    pub fn kac_domain(&self) -> &KacCrystal {
        &self.domain
    }

    fn p_shape(&self, eta: &Partition) -> Result<SkewShape> {
        SkewShape::antinormal(self.ell, self.rank.m(), eta.clone())
    }

    fn q_shape(&self, eta: &Partition) -> Result<SkewShape> {
        SkewShape::new(self.mu.clone(), eta.clone(), false)
    }

    /// Every element, summed over `η ⊆ μ`.
    pub fn enumerate(&self) -> Vec<KappaElement> {
        let vs = enumerate_sst(self.rank, Alphabet::BMinus, &self.v_shape);
        let mut out = Vec::new();
        for eta in self.mu.subpartitions() {
            let ps = enumerate_sst(self.rank, Alphabet::BPlusDual, &self.p_shape(&eta).expect("η ⊆ μ ⊆ rectangle"));
            let qs = enumerate_sst(self.rank, Alphabet::BMinus, &self.q_shape(&eta).expect("η ⊆ μ"));
            for p in &ps {
                for q in &qs {
                    for v in &vs {
                        out.push(KappaElement {
                            p: p.clone(),
                            q: q.clone(),
                            v: v.clone(),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, y: &KappaElement) -> bool {
        let eta = y.eta();
        self.mu.contains(eta)
            && y.p.alphabet() == Alphabet::BPlusDual
            && self.p_shape(eta).is_ok_and(|s| &s == y.p.shape())
            && y.q.alphabet() == Alphabet::BMinus
            && self.q_shape(eta).is_ok_and(|s| &s == y.q.shape())
            && y.v.alphabet() == Alphabet::BMinus
            && y.v.shape() == &self.v_shape
            && [&y.p, &y.q, &y.v].iter().all(|t| t.validate(self.rank) == Ok(true))
    }

    /// `ρ_λ(S, U, V) = (U ← w(S), Q(U ← S), V)`.
    pub fn rho(&self, x: &KacElement) -> Result<KappaElement> {
        if !self.domain.contains(x) {
            return Err(Error::PreconditionViolated(format!(
                "{x} is not in the dual model of K({})",
                self.lambda
            )));
        }
        let mut p = x.t_plus.clone();
        let mut records = Vec::with_capacity(x.s.len());
        // w(S) = ī₁∨ … ī_r∨ in ≺ order, inserted from the right.
        for root in x.s.sorted(RootOrder::Prec).into_iter().rev() {
            let (next, cell) = p.antinormal_insert(Letter::Dual(root.i))?;
            p = next;
            records.push((cell, Letter::Unbarred(root.j)));
        }
        let q_shape = self.q_shape(p.shape().inner())?;
        let q = Tableau::from_fn(Alphabet::BMinus, q_shape, |r, c| {
            records.iter().find(|(cell, _)| *cell == (r, c)).map(|&(_, j)| j)
        })?;
        Ok(KappaElement {
            p,
            q,
            v: x.t_minus.clone(),
        })
    }

    /// `ρ_λ⁻¹`: undo the insertions, latest first. The latest insertion
    /// carries the smallest record; among equal records it is the topmost.
    pub fn rho_inv(&self, y: &KappaElement) -> Result<KacElement> {
        if !self.contains(y) {
            return Err(Error::NotInImage(format!("{y} is not an element of K_{}", self.lambda)));
        }
        let mut cells: Vec<(Letter, usize, usize)> = y
            .q
            .shape()
            .cells()
            .zip(y.q.cells())
            .map(|((r, c), &j)| (j, r, c))
            .collect();
        cells.sort();
        let mut p = y.p.clone();
        let mut roots = Vec::with_capacity(cells.len());
        for (j, r, c) in cells {
            let (prev, a) = p.antinormal_uninsert((r, c))?;
            p = prev;
            roots.push(OddRoot::new(a.index(), j.index()));
        }
        let s = OddRootSet::from_roots(self.rank, &roots)
            .map_err(|e| Error::NotInImage(format!("{y}: {e}")))?;
        let x = KacElement {
            s,
            t_plus: p,
            t_minus: y.v.clone(),
        };
        if !self.domain.contains(&x) || self.rho(&x).as_ref() != Ok(y) {
            return Err(Error::NotInImage(format!("{y} does not come from the dual model")));
        }
        Ok(x)
    }

    fn sign(&self, y: &KappaElement, k: usize) -> (Sign, usize, usize) {
        let c = self.ell - k;
        let t = y.p.shape().column_top(c);
        if t == self.rank.m() {
            return (Sign::Plus, t, c);
        }
        let a = y.p.get(t, c).expect("top cell of a nonempty column");
        if a > Letter::Dual(1) {
            return (Sign::Plus, t, c);
        }
        let b = y.q.get(t, c);
        let minus = match self.rule {
            ZeroRule::Standard => b == Some(Letter::Unbarred(1)),
            ZeroRule::Corrupted => true,
        };
        (if minus { Sign::Minus } else { Sign::Dot }, t, c)
    }

    fn apply_zero(&self, dir: Dir, y: &KappaElement) -> Option<KappaElement> {
        let (sign, t, c) = (1..=self.ell)
            .map(|k| self.sign(y, k))
            .find(|(s, _, _)| *s != Sign::Dot)?;
        let eta = y.eta();
        let mut parts: Vec<usize> = (0..self.rank.m()).map(|r| eta.part(r)).collect();
        let extra = match (sign, dir) {
            (Sign::Plus, Dir::F) => {
                // add 1̄∨ / 1 on top of column c
                if t == 0 || parts[t - 1] != c + 1 || self.mu.part(t - 1) <= c {
                    return None;
                }
                parts[t - 1] = c;
                Some((t - 1, c))
            }
            (Sign::Minus, Dir::E) => {
                if parts[t] != c {
                    return None;
                }
                parts[t] = c + 1;
                None
            }
            _ => return None,
        };
        let eta2 = Partition::new(parts).ok()?;
        if !self.mu.contains(&eta2) {
            return None;
        }
        let p = refill(&y.p, self.p_shape(&eta2).ok()?, extra, Letter::Dual(1))?;
        let q = refill(&y.q, self.q_shape(&eta2).ok()?, extra, Letter::Unbarred(1))?;
        if !p.is_semistandard() || !q.is_semistandard() {
            return None;
        }
        Some(KappaElement { p, q, v: y.v.clone() })
    }
}

/// `t` restricted or extended to `shape`, with `a` in the `extra` cell.
fn refill(t: &Tableau, shape: SkewShape, extra: Option<(usize, usize)>, a: Letter) -> Option<Tableau> {
    Tableau::from_fn(t.alphabet(), shape, |r, c| {
        if extra == Some((r, c)) {
            Some(a)
        } else {
            t.get(r, c)
        }
    })
    .ok()
}

impl Crystal for KappaCrystal {
    type Elem = KappaElement;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn colors(&self) -> Vec<Color> {
        self.rank.colors()
    }

    fn apply(&self, k: Color, dir: Dir, y: &KappaElement) -> Option<KappaElement> {
        match k.kind() {
            ColorKind::Zero => self.apply_zero(dir, y),
            ColorKind::Even(_) => {
                let sig = tableau_strings(k, &y.p, self.order);
                Some(KappaElement {
                    p: act_at(k, dir, &y.p, sig.target(dir)?),
                    ..y.clone()
                })
            }
            ColorKind::Odd(_) => {
                // upper rule on Q ⊗ V
                let sq = tableau_strings(k, &y.q, self.order);
                let sv = tableau_strings(k, &y.v, self.order);
                let on_v = match dir {
                    Dir::F => sv.phi > sq.eps,
                    Dir::E => sv.phi >= sq.eps,
                };
                if on_v {
                    Some(KappaElement {
                        v: act_at(k, dir, &y.v, sv.target(dir)?),
                        ..y.clone()
                    })
                } else {
                    Some(KappaElement {
                        q: act_at(k, dir, &y.q, sq.target(dir)?),
                        ..y.clone()
                    })
                }
            }
        }
    }

    fn weight(&self, y: &KappaElement) -> Weight {
        let mut w = y.p.weight(self.rank);
        w.add_assign(&y.q.weight(self.rank));
        w.add_assign(&y.v.weight(self.rank));
        w
    }
}
