//! Semistandard tableaux over graded alphabets, Schensted column insertion,
//! anti-normal insertion and admissible reading words.
//!
//! Coordinates are 0-based `(row, col)`. Skew shapes `outer/inner` keep the
//! cells in row-major order; an anti-normal tableau is a skew tableau whose
//! outer shape is a rectangle `(ℓ^m)` and whose inner shape `η` is the part
//! cut away from the top-left.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::base::{Letter, Partition, Rank, Weight};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    /// The full alphabet `𝓑 = [m|n]`.
    B,
    /// Barred letters only.
    BPlus,
    /// Unbarred letters only.
    BMinus,
    /// The dual alphabet `1̄∨ < … < m̄∨`.
    BPlusDual,
}

impl Alphabet {
    pub fn contains(self, a: Letter) -> bool {
        matches!(
            (self, a),
            (Alphabet::B, Letter::Barred(_) | Letter::Unbarred(_))
                | (Alphabet::BPlus, Letter::Barred(_))
                | (Alphabet::BMinus, Letter::Unbarred(_))
                | (Alphabet::BPlusDual, Letter::Dual(_))
        )
    }

    /// All letters, in increasing order.
    pub fn letters(self, rank: Rank) -> Vec<Letter> {
        match self {
            Alphabet::B => rank.letters(),
            Alphabet::BPlus => (1..=rank.m()).rev().map(Letter::Barred).collect(),
            Alphabet::BMinus => (1..=rank.n()).map(Letter::Unbarred).collect(),
            Alphabet::BPlusDual => (1..=rank.m()).map(Letter::Dual).collect(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Alphabet::B => "B",
            Alphabet::BPlus => "B+",
            Alphabet::BMinus => "B-",
            Alphabet::BPlusDual => "B+dual",
        }
    }

    pub fn parse(s: &str) -> Result<Alphabet> {
        match s {
            "B" => Ok(Alphabet::B),
            "B+" => Ok(Alphabet::BPlus),
            "B-" => Ok(Alphabet::BMinus),
            "B+dual" => Ok(Alphabet::BPlusDual),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown alphabet {s:?}"),
            }),
        }
    }
}

/// A skew shape `outer/inner`, optionally flagged as anti-normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    antinormal: bool,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition, antinormal: bool) -> Result<Self> {
        if !outer.contains(&inner) || inner.len() > outer.len() {
            return Err(Error::ShapeViolation(format!(
                "inner ({inner}) is not contained in outer ({outer})"
            )));
        }
        if antinormal && outer.parts().windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::ShapeViolation(format!(
                "anti-normal outer shape ({outer}) must be a rectangle"
            )));
        }
        Ok(SkewShape {
            outer,
            inner,
            antinormal,
        })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
            antinormal: false,
        }
    }

    /// The anti-normal shape `(ℓ^m)/η`.
    pub fn antinormal(width: usize, rows: usize, inner: Partition) -> Result<Self> {
        SkewShape::new(Partition::rectangle(width, rows), inner, true)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_antinormal(&self) -> bool {
        self.antinormal
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn width(&self) -> usize {
        self.outer.part(0)
    }

    pub fn row_range(&self, r: usize) -> std::ops::Range<usize> {
        self.inner.part(r)..self.outer.part(r)
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        self.row_range(r).contains(&c)
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows()).flat_map(move |r| self.row_range(r).map(move |c| (r, c)))
    }

    /// Top row of column `c` (equals `rows()` for an empty column).
    pub fn column_top(&self, c: usize) -> usize {
        (0..self.rows())
            .find(|&r| self.contains_cell(r, c))
            .unwrap_or(self.rows())
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "({})", self.outer)
        } else {
            write!(f, "({})/({})", self.outer, self.inner)
        }
    }
}

/// Which admissible reading to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReadingOrder {
    /// Columns right to left, each top to bottom.
    ColumnsRightToLeft,
    /// Rows top to bottom, each right to left.
    RowsRightToLeft,
}

#[derive(Debug)]
struct ShapeIndex {
    shape: SkewShape,
    offsets: Vec<usize>,
    by_columns: Vec<u16>,
    by_rows: Vec<u16>,
}

impl ShapeIndex {
    fn new(shape: SkewShape) -> Arc<Self> {
        let mut offsets = Vec::with_capacity(shape.rows() + 1);
        let mut acc = 0;
        for r in 0..shape.rows() {
            offsets.push(acc);
            acc += shape.row_range(r).len();
        }
        offsets.push(acc);
        let pos = |r: usize, c: usize| (offsets[r] + c - shape.inner.part(r)) as u16;
        let mut by_columns = Vec::with_capacity(acc);
        for c in (0..shape.width()).rev() {
            for r in 0..shape.rows() {
                if shape.contains_cell(r, c) {
                    by_columns.push(pos(r, c));
                }
            }
        }
        let mut by_rows = Vec::with_capacity(acc);
        for r in 0..shape.rows() {
            for c in shape.row_range(r).rev() {
                by_rows.push(pos(r, c));
            }
        }
        Arc::new(ShapeIndex {
            shape,
            offsets,
            by_columns,
            by_rows,
        })
    }
}

/// A filling of a skew shape with letters of one alphabet.
///
/// Construction checks shape and alphabet membership; semistandardness is
/// checked separately by [`Tableau::is_semistandard`].
#[derive(Clone)]
pub struct Tableau {
    alphabet: Alphabet,
    index: Arc<ShapeIndex>,
    cells: Vec<Letter>,
}

impl Tableau {
    pub fn empty(alphabet: Alphabet) -> Self {
        Tableau {
            alphabet,
            index: ShapeIndex::new(SkewShape::straight(Partition::empty())),
            cells: Vec::new(),
        }
    }

    /// Builds a tableau from its rows; row `r` lists the cells of `shape` in that row.
    pub fn from_rows(alphabet: Alphabet, shape: SkewShape, rows: &[Vec<Letter>]) -> Result<Self> {
        if rows.len() > shape.rows() && rows[shape.rows()..].iter().any(|r| !r.is_empty()) {
            return Err(Error::ShapeViolation(format!(
                "{} rows given for shape {shape}",
                rows.len()
            )));
        }
        let mut cells = Vec::with_capacity(shape.size());
        for r in 0..shape.rows() {
            let want = shape.row_range(r).len();
            let got = rows.get(r).map_or(0, Vec::len);
            if got != want {
                return Err(Error::ShapeViolation(format!(
                    "row {r} has {got} cells, shape {shape} needs {want}"
                )));
            }
            cells.extend_from_slice(&rows[r]);
        }
        Tableau::from_cells(alphabet, shape, cells)
    }

    /// Builds a tableau from cells listed in row-major order.
    pub fn from_cells(alphabet: Alphabet, shape: SkewShape, cells: Vec<Letter>) -> Result<Self> {
        if cells.len() != shape.size() {
            return Err(Error::ShapeViolation(format!(
                "{} cells given for shape {shape} of size {}",
                cells.len(),
                shape.size()
            )));
        }
        if let Some(a) = cells.iter().find(|a| !alphabet.contains(**a)) {
            return Err(Error::NotSemistandard(format!(
                "letter {a} is not in alphabet {}",
                alphabet.name()
            )));
        }
        Ok(Tableau {
            alphabet,
            index: ShapeIndex::new(shape),
            cells,
        })
    }

    /// Fills `shape` cell by cell; `fill` must cover every cell.
    pub fn from_fn(
        alphabet: Alphabet,
        shape: SkewShape,
        fill: impl Fn(usize, usize) -> Option<Letter>,
    ) -> Result<Self> {
        let cells = shape
            .cells()
            .map(|(r, c)| {
                fill(r, c).ok_or_else(|| Error::ShapeViolation(format!("no entry for cell ({r},{c})")))
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_cells(alphabet, shape, cells)
    }

    /// Same alphabet and shape as `self`, new cells (unchecked beyond length).
    pub(crate) fn with_cells(&self, cells: Vec<Letter>) -> Tableau {
        debug_assert_eq!(cells.len(), self.cells.len());
        Tableau {
            alphabet: self.alphabet,
            index: Arc::clone(&self.index),
            cells,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn shape(&self) -> &SkewShape {
        &self.index.shape
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[Letter] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn pos(&self, r: usize, c: usize) -> Option<usize> {
        let shape = &self.index.shape;
        shape
            .contains_cell(r, c)
            .then(|| self.index.offsets[r] + c - shape.inner.part(r))
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        self.pos(r, c).map(|p| self.cells[p])
    }

    pub fn row(&self, r: usize) -> &[Letter] {
        &self.cells[self.index.offsets[r]..self.index.offsets[r + 1]]
    }

    pub fn rows(&self) -> Vec<Vec<Letter>> {
        (0..self.shape().rows()).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries of column `c`, top to bottom, with their rows.
    pub fn column(&self, c: usize) -> Vec<(usize, Letter)> {
        (0..self.shape().rows())
            .filter_map(|r| self.get(r, c).map(|a| (r, a)))
            .collect()
    }

    /// Positions (indices into [`Tableau::cells`]) in reading order.
    pub fn reading_positions(&self, order: ReadingOrder) -> &[u16] {
        match order {
            ReadingOrder::ColumnsRightToLeft => &self.index.by_columns,
            ReadingOrder::RowsRightToLeft => &self.index.by_rows,
        }
    }

    pub fn reading_word(&self, order: ReadingOrder) -> Vec<Letter> {
        self.reading_positions(order)
            .iter()
            .map(|&p| self.cells[p as usize])
            .collect()
    }

    pub fn weight(&self, rank: Rank) -> Weight {
        let mut w = Weight::zero(rank);
        for &a in &self.cells {
            match a {
                Letter::Barred(i) => *w.bar_mut(i) += 1,
                Letter::Unbarred(j) => *w.unbar_mut(j) += 1,
                Letter::Dual(i) => *w.bar_mut(i) -= 1,
            }
        }
        w
    }

    /// Checks rows and columns weakly increase, even letters strictly down
    /// columns and odd letters strictly along rows.
    pub fn is_semistandard(&self) -> bool {
        let shape = self.shape();
        for (r, c) in shape.cells() {
            let a = self.get(r, c).expect("cell in shape");
            if let Some(left) = c.checked_sub(1).and_then(|c0| self.get(r, c0)) {
                if !fits_after(left, a, true) {
                    return false;
                }
            }
            if let Some(up) = r.checked_sub(1).and_then(|r0| self.get(r0, c)) {
                if !fits_after(up, a, false) {
                    return false;
                }
            }
        }
        true
    }

    /// Semistandardness plus membership of every letter in the rank's alphabet.
    pub fn validate(&self, rank: Rank) -> Result<bool> {
        if let Some(a) = self.cells.iter().find(|a| !a.fits(rank)) {
            return Err(Error::ShapeViolation(format!("letter {a} out of range for {rank}")));
        }
        Ok(self.is_semistandard())
    }

    /// Schensted column insertion `a → T` on a straight shape.
    ///
    /// An even letter bumps the smallest entry `≥ a`, an odd letter the
    /// smallest entry `> a`; a letter with nothing to bump goes to the bottom.
    pub fn column_insert(&self, a: Letter) -> Result<Tableau> {
        if !self.shape().is_straight() {
            return Err(Error::ShapeViolation("column insertion needs a straight shape".into()));
        }
        if !self.alphabet.contains(a) {
            return Err(Error::NotSemistandard(format!(
                "letter {a} is not in alphabet {}",
                self.alphabet.name()
            )));
        }
        let mut rows = self.rows();
        let mut carry = a;
        let mut c = 0;
        loop {
            let height = rows.iter().take_while(|row| row.len() > c).count();
            let bumped = (0..height).find(|&r| {
                let b = rows[r][c];
                if carry.is_odd() {
                    b > carry
                } else {
                    b >= carry
                }
            });
            match bumped {
                Some(r) => {
                    carry = std::mem::replace(&mut rows[r][c], carry);
                    c += 1;
                }
                None => {
                    if height == rows.len() {
                        rows.push(Vec::new());
                    }
                    rows[height].push(carry);
                    break;
                }
            }
        }
        let outer = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::from_rows(self.alphabet, SkewShape::straight(outer), &rows)
    }

    /// Anti-normal insertion `T ← a`.
    ///
    /// Returns the new tableau and the rectangle cell created when the
    /// bumping path stopped.
    pub fn antinormal_insert(&self, a: Letter) -> Result<(Tableau, (usize, usize))> {
        let shape = self.shape();
        if !shape.is_antinormal() {
            return Err(Error::ShapeViolation("anti-normal insertion needs (l^m)/eta".into()));
        }
        if !self.alphabet.contains(a) {
            return Err(Error::NotSemistandard(format!(
                "letter {a} is not in alphabet {}",
                self.alphabet.name()
            )));
        }
        let rows_n = shape.rows();
        let mut inner: Vec<usize> = (0..rows_n).map(|r| shape.inner().part(r)).collect();
        let mut grid = self.grid();
        let mut carry = a;
        for c in (0..shape.width()).rev() {
            let top = inner.iter().take_while(|&&e| e > c).count();
            let hit = (top..rows_n).rev().find(|&r| {
                let b = grid[r][c].expect("cell below the top");
                if carry.is_odd() {
                    b < carry
                } else {
                    b <= carry
                }
            });
            match hit {
                Some(r) => {
                    carry = grid[r][c].replace(carry).expect("occupied");
                }
                None => {
                    if top == 0 || inner[top - 1] != c + 1 {
                        return Err(Error::InsertionOverflow { row: top });
                    }
                    inner[top - 1] = c;
                    grid[top - 1][c] = Some(carry);
                    let t = self.rebuild(&grid, inner)?;
                    return Ok((t, (top - 1, c)));
                }
            }
        }
        Err(Error::InsertionOverflow { row: rows_n })
    }

    /// Undoes [`Tableau::antinormal_insert`] given the created cell; returns
    /// the previous tableau and the inserted letter.
    pub fn antinormal_uninsert(&self, cell: (usize, usize)) -> Result<(Tableau, Letter)> {
        let shape = self.shape();
        let (r0, c0) = cell;
        if !shape.is_antinormal() || shape.column_top(c0) != r0 || !shape.contains_cell(r0, c0) {
            return Err(Error::ShapeViolation(format!(
                "({r0},{c0}) is not a removable top cell of {shape}"
            )));
        }
        if shape.inner().part(r0) != c0 || (r0 > 0 && shape.inner().part(r0 - 1) < c0 + 1) {
            return Err(Error::ShapeViolation(format!(
                "({r0},{c0}) cannot be returned to the inner shape of {shape}"
            )));
        }
        let rows_n = shape.rows();
        let mut inner: Vec<usize> = (0..rows_n).map(|r| shape.inner().part(r)).collect();
        let mut grid = self.grid();
        let mut carry = grid[r0][c0].take().expect("cell present");
        inner[r0] = c0 + 1;
        for c in c0 + 1..shape.width() {
            let top = inner.iter().take_while(|&&e| e > c).count();
            let hit = (top..rows_n).find(|&r| {
                let b = grid[r][c].expect("cell below the top");
                b > carry || (b == carry && !carry.is_odd())
            });
            let Some(r) = hit else {
                return Err(Error::NotInImage(format!(
                    "reverse bumping found nothing to displace in column {c}"
                )));
            };
            carry = grid[r][c].replace(carry).expect("occupied");
        }
        let t = self.rebuild(&grid, inner)?;
        Ok((t, carry))
    }

    fn grid(&self) -> Vec<Vec<Option<Letter>>> {
        let shape = self.shape();
        (0..shape.rows())
            .map(|r| (0..shape.width()).map(|c| self.get(r, c)).collect())
            .collect()
    }

    fn rebuild(&self, grid: &[Vec<Option<Letter>>], inner: Vec<usize>) -> Result<Tableau> {
        let shape = SkewShape::new(
            self.shape().outer().clone(),
            Partition::new(inner)?,
            self.shape().is_antinormal(),
        )?;
        let cells: Vec<Letter> = shape
            .cells()
            .map(|(r, c)| grid[r][c].expect("cell filled"))
            .collect();
        Tableau::from_cells(self.alphabet, shape, cells)
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            alphabet: self.alphabet.name().to_string(),
            outer: self.shape().outer().parts().to_vec(),
            inner: self.shape().inner().parts().to_vec(),
            antinormal: self.shape().is_antinormal(),
            rows: (0..self.shape().rows())
                .map(|r| self.row(r).iter().map(|a| a.to_string()).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &TableauJson) -> Result<Tableau> {
        let alphabet = Alphabet::parse(&j.alphabet)?;
        let shape = SkewShape::new(
            Partition::new(j.outer.clone())?,
            Partition::new(j.inner.clone())?,
            j.antinormal,
        )?;
        let rows = j
            .rows
            .iter()
            .map(|row| row.iter().map(|s| Letter::parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(alphabet, shape, &rows)
    }
}

impl PartialEq for Tableau {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.cells == other.cells
            && (Arc::ptr_eq(&self.index, &other.index) || self.index.shape == other.index.shape)
    }
}

impl Eq for Tableau {}

impl Hash for Tableau {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.alphabet.hash(state);
        self.index.shape.hash(state);
        self.cells.hash(state);
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alphabet
            .cmp(&other.alphabet)
            .then_with(|| {
                if Arc::ptr_eq(&self.index, &other.index) {
                    Ordering::Equal
                } else {
                    self.index.shape.cmp(&other.index.shape)
                }
            })
            .then_with(|| self.cells.cmp(&other.cells))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{} {}: {}]", self.alphabet.name(), self.shape(), self)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.shape().rows())
            .map(|r| {
                let cells: Vec<String> = self.row(r).iter().map(|a| a.to_string()).collect();
                cells.join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Serialized form of a tableau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub alphabet: String,
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    pub antinormal: bool,
    pub rows: Vec<Vec<String>>,
}

/// Whether `b` may follow `a` in a row (`along_row`) or below it in a column.
fn fits_after(a: Letter, b: Letter, along_row: bool) -> bool {
    match a.cmp(&b) {
        Ordering::Less => true,
        Ordering::Greater => false,
        // equal letters: odd ones repeat down columns, even ones along rows
        Ordering::Equal => a.is_odd() != along_row,
    }
}

/// All semistandard tableaux of the given shape over `alphabet`, in
/// lexicographic order of their row-major cells.
pub fn enumerate_sst(rank: Rank, alphabet: Alphabet, shape: &SkewShape) -> Vec<Tableau> {
    let letters = alphabet.letters(rank);
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let index = ShapeIndex::new(shape.clone());
    let pos = |r: usize, c: usize| -> Option<usize> {
        shape
            .contains_cell(r, c)
            .then(|| index.offsets[r] + c - shape.inner().part(r))
    };
    let left: Vec<Option<usize>> = cells
        .iter()
        .map(|&(r, c)| c.checked_sub(1).and_then(|c0| pos(r, c0)))
        .collect();
    let up: Vec<Option<usize>> = cells
        .iter()
        .map(|&(r, c)| r.checked_sub(1).and_then(|r0| pos(r0, c)))
        .collect();

    let mut out = Vec::new();
    let mut fill: Vec<Letter> = Vec::with_capacity(cells.len());
    fn go(
        k: usize,
        letters: &[Letter],
        left: &[Option<usize>],
        up: &[Option<usize>],
        fill: &mut Vec<Letter>,
        emit: &mut dyn FnMut(&[Letter]),
    ) {
        if k == left.len() {
            emit(fill);
            return;
        }
        for &a in letters {
            if left[k].is_some_and(|p| !fits_after(fill[p], a, true)) {
                continue;
            }
            if up[k].is_some_and(|p| !fits_after(fill[p], a, false)) {
                continue;
            }
            fill.push(a);
            go(k + 1, letters, left, up, fill, emit);
            fill.pop();
        }
    }
    go(0, &letters, &left, &up, &mut fill, &mut |cells| {
        out.push(Tableau {
            alphabet,
            index: Arc::clone(&index),
            cells: cells.to_vec(),
        })
    });
    out
}

/// The unique highest weight tableau of a shape: `H_μ` over `𝓑₊` (row `r`
/// constant `\overline{m-r}`), columns `j` constant `j` over `𝓑₋`, the
/// minimal column fillings `1̄∨, 2̄∨, …` over `𝓑₊∨`, and the hook
/// combination of the first two over `𝓑`.
pub fn highest_weight_tableau(rank: Rank, alphabet: Alphabet, shape: &SkewShape) -> Result<Tableau> {
    let m = rank.m();
    let cells: Vec<Letter> = match alphabet {
        Alphabet::BPlus | Alphabet::BMinus | Alphabet::B if !shape.is_straight() => {
            return Err(Error::ShapeViolation(format!(
                "highest weight tableau over {} needs a straight shape",
                alphabet.name()
            )))
        }
        Alphabet::BPlus => {
            if shape.rows() > m {
                return Err(Error::ShapeViolation(format!("{shape} has more than {m} rows")));
            }
            shape.cells().map(|(r, _)| Letter::Barred(m - r)).collect()
        }
        Alphabet::BMinus => {
            if shape.width() > rank.n() {
                return Err(Error::ShapeViolation(format!(
                    "{shape} has more than {} columns",
                    rank.n()
                )));
            }
            shape.cells().map(|(_, c)| Letter::Unbarred(c + 1)).collect()
        }
        Alphabet::B => {
            if !shape.outer().is_hook(rank) {
                return Err(Error::HookViolation(shape.outer().parts().to_vec()));
            }
            shape
                .cells()
                .map(|(r, c)| {
                    if r < m {
                        Letter::Barred(m - r)
                    } else {
                        Letter::Unbarred(c + 1)
                    }
                })
                .collect()
        }
        Alphabet::BPlusDual => {
            if shape.rows() > m {
                return Err(Error::ShapeViolation(format!("{shape} has more than {m} rows")));
            }
            let tops: Vec<usize> = (0..shape.width()).map(|c| shape.column_top(c)).collect();
            shape
                .cells()
                .map(|(r, c)| Letter::Dual(r - tops[c] + 1))
                .collect()
        }
    };
    Tableau::from_cells(alphabet, shape.clone(), cells)
}
