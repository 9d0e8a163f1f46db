//! Kashiwara operators on words and tableaux.
//!
//! Colors in `I_{m|0}` follow the lower tensor product rule, colors in
//! `I_{0|n}` the upper one (the lower rule with tensor factors exchanged),
//! and the odd isotropic color `0` acts on the leftmost letter `1̄` or `1`.

use std::hash::Hash;

use crate::base::{Color, ColorKind, Letter, Rank, Weight};
use crate::error::{Error, Result};
use crate::tableau::{Alphabet, ReadingOrder, SkewShape, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    E,
    F,
}

impl Dir {
    pub fn opposite(self) -> Dir {
        match self {
            Dir::E => Dir::F,
            Dir::F => Dir::E,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Lower,
    Upper,
}

impl Rule {
    pub fn for_color(k: Color) -> Rule {
        match k.kind() {
            ColorKind::Odd(_) => Rule::Upper,
            _ => Rule::Lower,
        }
    }
}

/// The reduced signature of a tensor product of factors, each given by its
/// string lengths `(ε_k, φ_k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Signature {
    pub eps: u32,
    pub phi: u32,
    /// Factor on which `ẽ_k` acts.
    pub e_at: Option<usize>,
    /// Factor on which `f̃_k` acts.
    pub f_at: Option<usize>,
}

impl Signature {
    pub fn target(&self, dir: Dir) -> Option<usize> {
        match dir {
            Dir::E => self.e_at,
            Dir::F => self.f_at,
        }
    }
}

/// Brackets `(ε, φ)` factors: each factor contributes `ε` minus signs followed
/// by `φ` plus signs, and a `+` cancels against a later `−`. `ẽ` acts at the
/// rightmost surviving `−`, `f̃` at the leftmost surviving `+`. The upper rule
/// runs the same procedure over the reversed sequence.
pub fn signature<I>(factors: I, rule: Rule) -> Signature
where
    I: IntoIterator<Item = (u32, u32)>,
    I::IntoIter: DoubleEndedIterator + ExactSizeIterator,
{
    let it = factors.into_iter().enumerate();
    match rule {
        Rule::Lower => bracket(it),
        Rule::Upper => bracket(it.rev()),
    }
}

fn bracket(it: impl Iterator<Item = (usize, (u32, u32))>) -> Signature {
    let mut sig = Signature::default();
    for (pos, (eps, phi)) in it {
        let cancelled = eps.min(sig.phi);
        sig.phi -= cancelled;
        if sig.phi == 0 {
            sig.f_at = None;
        }
        if eps > cancelled {
            sig.eps += eps - cancelled;
            sig.e_at = Some(pos);
        }
        if phi > 0 {
            if sig.phi == 0 {
                sig.f_at = Some(pos);
            }
            sig.phi += phi;
        }
    }
    sig
}

/// `(ε_k, φ_k)` of a single letter for `k ≠ 0`.
pub fn letter_strings(k: Color, a: Letter) -> (u32, u32) {
    match (k.kind(), a) {
        (ColorKind::Even(i), Letter::Barred(b)) => ((b == i) as u32, (b == i + 1) as u32),
        (ColorKind::Even(i), Letter::Dual(b)) => ((b == i + 1) as u32, (b == i) as u32),
        (ColorKind::Odd(j), Letter::Unbarred(b)) => ((b == j + 1) as u32, (b == j) as u32),
        _ => (0, 0),
    }
}

/// `ẽ_k` or `f̃_k` on a single letter, all colors.
pub fn letter_apply(k: Color, dir: Dir, a: Letter) -> Option<Letter> {
    match (k.kind(), dir, a) {
        (ColorKind::Even(i), Dir::F, Letter::Barred(b)) if b == i + 1 => Some(Letter::Barred(i)),
        (ColorKind::Even(i), Dir::E, Letter::Barred(b)) if b == i => Some(Letter::Barred(i + 1)),
        (ColorKind::Even(i), Dir::F, Letter::Dual(b)) if b == i => Some(Letter::Dual(i + 1)),
        (ColorKind::Even(i), Dir::E, Letter::Dual(b)) if b == i + 1 => Some(Letter::Dual(i)),
        (ColorKind::Zero, Dir::F, Letter::Barred(1)) => Some(Letter::Unbarred(1)),
        (ColorKind::Zero, Dir::E, Letter::Unbarred(1)) => Some(Letter::Barred(1)),
        (ColorKind::Odd(j), Dir::F, Letter::Unbarred(b)) if b == j => Some(Letter::Unbarred(j + 1)),
        (ColorKind::Odd(j), Dir::E, Letter::Unbarred(b)) if b == j + 1 => Some(Letter::Unbarred(j)),
        _ => None,
    }
}

/// Colors acting on a given alphabet.
pub fn alphabet_colors(rank: Rank, alphabet: Alphabet) -> Vec<Color> {
    match alphabet {
        Alphabet::B => rank.colors(),
        Alphabet::BPlus | Alphabet::BPlusDual => rank.even_colors().collect(),
        Alphabet::BMinus => rank.odd_colors().collect(),
    }
}

fn check_color(rank: Rank, alphabet: Alphabet, k: Color) -> Result<()> {
    let ok = rank.has_color(k)
        && matches!(
            (alphabet, k.kind()),
            (Alphabet::B, _)
                | (Alphabet::BPlus | Alphabet::BPlusDual, ColorKind::Even(_))
                | (Alphabet::BMinus, ColorKind::Odd(_))
        );
    if ok {
        Ok(())
    } else {
        Err(Error::ColorOutOfRange {
            color: k,
            context: format!("alphabet {} of rank {rank}", alphabet.name()),
        })
    }
}

/// Position acted on by `x̃_k` in a sequence of letters, if any.
fn word_target(k: Color, dir: Dir, letters: impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator) -> Option<usize> {
    if k == Color::ZERO {
        let (p, a) = letters
            .enumerate()
            .find(|(_, a)| matches!(a, Letter::Barred(1) | Letter::Unbarred(1)))?;
        return letter_apply(k, dir, a).map(|_| p);
    }
    signature(letters.map(|a| letter_strings(k, a)), Rule::for_color(k)).target(dir)
}

/// `x̃_k w` for a word `w = w_1 ⊗ ⋯ ⊗ w_r` over `alphabet`.
pub fn apply_word(rank: Rank, alphabet: Alphabet, k: Color, dir: Dir, w: &[Letter]) -> Result<Option<Vec<Letter>>> {
    check_color(rank, alphabet, k)?;
    let Some(p) = word_target(k, dir, w.iter().copied()) else {
        return Ok(None);
    };
    let mut out = w.to_vec();
    out[p] = letter_apply(k, dir, w[p]).expect("signature picked an active letter");
    Ok(Some(out))
}

/// The signature of a tableau read in the given order (`k ≠ 0`); the
/// targets are indices into [`Tableau::cells`].
pub fn tableau_strings(k: Color, t: &Tableau, order: ReadingOrder) -> Signature {
    let cells = t.cells();
    let positions = t.reading_positions(order);
    let mut sig = signature(
        positions.iter().map(|&p| letter_strings(k, cells[p as usize])),
        Rule::for_color(k),
    );
    sig.e_at = sig.e_at.map(|p| positions[p] as usize);
    sig.f_at = sig.f_at.map(|p| positions[p] as usize);
    sig
}

/// Reading-word position of the cell acted on, mapped back to a cell index.
pub(crate) fn tableau_target(k: Color, dir: Dir, t: &Tableau, order: ReadingOrder) -> Option<usize> {
    let positions = t.reading_positions(order);
    let cells = t.cells();
    let p = word_target(k, dir, positions.iter().map(|&p| cells[p as usize]))?;
    Some(positions[p] as usize)
}

/// `x̃_k` on a tableau with the letter at `pos` replaced.
pub(crate) fn act_at(k: Color, dir: Dir, t: &Tableau, pos: usize) -> Tableau {
    let mut cells = t.cells().to_vec();
    cells[pos] = letter_apply(k, dir, cells[pos]).expect("active letter");
    t.with_cells(cells)
}

/// `x̃_k T`: read `T` admissibly, act on the word, write back in place.
pub fn apply_tableau(rank: Rank, k: Color, dir: Dir, t: &Tableau, order: ReadingOrder) -> Result<Option<Tableau>> {
    check_color(rank, t.alphabet(), k)?;
    Ok(tableau_target(k, dir, t, order).map(|p| act_at(k, dir, t, p)))
}

/// A finite crystal: a set of elements with partial operators `ẽ_k`, `f̃_k`.
pub trait Crystal: Sync {
    type Elem: Clone + Eq + Hash + Ord + Send + Sync + std::fmt::Debug;

    fn rank(&self) -> Rank;

    fn colors(&self) -> Vec<Color>;

    /// `ẽ_k x` or `f̃_k x`; `None` is the crystal's `0`.
    fn apply(&self, k: Color, dir: Dir, x: &Self::Elem) -> Option<Self::Elem>;

    fn weight(&self, x: &Self::Elem) -> Weight;

    /// `ε_k` by iterating `ẽ_k`.
    fn epsilon(&self, k: Color, x: &Self::Elem) -> usize {
        string_length(|y| self.apply(k, Dir::E, y), x)
    }

    /// `φ_k` by iterating `f̃_k`.
    fn phi(&self, k: Color, x: &Self::Elem) -> usize {
        string_length(|y| self.apply(k, Dir::F, y), x)
    }
}

fn string_length<T: Clone>(step: impl Fn(&T) -> Option<T>, x: &T) -> usize {
    let mut n = 0;
    let mut cur = x.clone();
    while let Some(next) = step(&cur) {
        n += 1;
        cur = next;
    }
    n
}

/// All words of a fixed length over an alphabet.
#[derive(Debug, Clone)]
pub struct WordCrystal {
    pub rank: Rank,
    pub alphabet: Alphabet,
}

impl WordCrystal {
    pub fn words(&self, len: usize) -> Vec<Vec<Letter>> {
        let letters = self.alphabet.letters(self.rank);
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    letters.iter().map(move |&a| {
                        let mut w2 = w.clone();
                        w2.push(a);
                        w2
                    })
                })
                .collect();
        }
        out
    }
}

impl Crystal for WordCrystal {
    type Elem = Vec<Letter>;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn colors(&self) -> Vec<Color> {
        alphabet_colors(self.rank, self.alphabet)
    }

    fn apply(&self, k: Color, dir: Dir, x: &Vec<Letter>) -> Option<Vec<Letter>> {
        apply_word(self.rank, self.alphabet, k, dir, x).expect("color in range")
    }

    fn weight(&self, x: &Vec<Letter>) -> Weight {
        let mut w = Weight::zero(self.rank);
        for a in x {
            w.add_assign(&a.weight(self.rank));
        }
        w
    }
}

/// Semistandard tableaux of one shape over one alphabet.
#[derive(Debug, Clone)]
pub struct TableauCrystal {
    pub rank: Rank,
    pub alphabet: Alphabet,
    pub shape: SkewShape,
    pub order: ReadingOrder,
}

impl TableauCrystal {
    pub fn new(rank: Rank, alphabet: Alphabet, shape: SkewShape) -> Self {
        TableauCrystal {
            rank,
            alphabet,
            shape,
            order: ReadingOrder::ColumnsRightToLeft,
        }
    }

    pub fn elements(&self) -> Vec<Tableau> {
        crate::tableau::enumerate_sst(self.rank, self.alphabet, &self.shape)
    }

    pub fn highest_weight(&self) -> Result<Tableau> {
        crate::tableau::highest_weight_tableau(self.rank, self.alphabet, &self.shape)
    }
}

impl Crystal for TableauCrystal {
    type Elem = Tableau;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn colors(&self) -> Vec<Color> {
        alphabet_colors(self.rank, self.alphabet)
    }

    fn apply(&self, k: Color, dir: Dir, x: &Tableau) -> Option<Tableau> {
        apply_tableau(self.rank, k, dir, x, self.order).expect("color in range")
    }

    fn weight(&self, x: &Tableau) -> Weight {
        x.weight(self.rank)
    }
}
