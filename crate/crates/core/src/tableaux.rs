//! Fillings of skew diagrams: standard immaculate and extended tableaux,
//! the eight semistandard filling families, descent sets, reading words and
//! the special tableaux `S0`, `Srow`, `Scol`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{cells, leftmost_column_cells, Cell, Composition, SkewShape};

/// A filling of the skew cells of a shape. Entries are stored row by row,
/// bottom row first, each row listing only its skew cells from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        // trailing empty rows may be omitted
        let mut rows = rows;
        if rows.len() > shape.rows() {
            return Err(Error::ShapeMismatch(shape));
        }
        rows.resize(shape.rows(), Vec::new());
        let ok = rows.iter().enumerate().all(|(k, row)| row.len() == shape.row_len(k + 1));
        if !ok {
            return Err(Error::ShapeMismatch(shape));
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Skew entries of each row, bottom row first.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        let row = self.rows.get(cell.row.checked_sub(1)?)?;
        let start = self.shape.row_start(cell.row);
        cell.col.checked_sub(start).and_then(|k| row.get(k)).copied()
    }

    fn set(&mut self, cell: Cell, value: usize) {
        let start = self.shape.row_start(cell.row);
        self.rows[cell.row - 1][cell.col - start] = value;
    }

    /// Entries with their cells, in `cells()` order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(k, row)| {
            let start = self.shape.row_start(k + 1);
            row.iter().enumerate().map(move |(j, &v)| (Cell::new(k + 1, start + j), v))
        })
    }

    /// Cell of the entry `value`, if present.
    pub fn position(&self, value: usize) -> Option<Cell> {
        self.entries().find(|&(_, v)| v == value).map(|(c, _)| c)
    }

    /// Row of every entry of a standard tableau, indexed by value (index 0 unused).
    pub fn rows_by_value(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() + 1];
        for (c, v) in self.entries() {
            if v < out.len() {
                out[v] = c.row;
            }
        }
        out
    }

    /// Entries form a bijection onto `1..=size`.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (_, v) in self.entries() {
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    fn rows_increase(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    fn leftmost_column_increases(&self) -> bool {
        let col: Vec<usize> =
            leftmost_column_cells(&self.shape).into_iter().map(|c| self.get(c).unwrap()).collect();
        col.windows(2).all(|w| w[0] < w[1])
    }

    fn columns_increase(&self) -> bool {
        let width = self.shape.outer().parts().iter().copied().max().unwrap_or(0);
        (1..=width).all(|c| {
            let col: Vec<usize> =
                (1..=self.shape.rows()).filter_map(|r| self.get(Cell::new(r, c))).collect();
            col.windows(2).all(|w| w[0] < w[1])
        })
    }

    /// Standard, rows increasing, leftmost-column skew cells increasing.
    pub fn is_sit(&self) -> bool {
        self.is_standard() && self.rows_increase() && self.leftmost_column_increases()
    }

    /// Standard immaculate with every column increasing bottom to top.
    pub fn is_set(&self) -> bool {
        self.is_sit() && self.columns_increase()
    }

    /// Standard with increasing rows but some column not increasing.
    pub fn is_nset(&self) -> bool {
        self.is_standard() && self.rows_increase() && !self.columns_increase()
    }

    /// The tableau with entries `i` and `i + 1` exchanged.
    pub fn swap_values(&self, i: usize) -> Tableau {
        let mut out = self.clone();
        for row in &mut out.rows {
            for v in row.iter_mut() {
                if *v == i {
                    *v = i + 1;
                } else if *v == i + 1 {
                    *v = i;
                }
            }
        }
        out
    }

    /// Entries read right to left along rows, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flat_map(|r| r.iter().rev().copied()).collect()
    }

    /// Number of inversions of the reading word.
    pub fn inv(&self) -> usize {
        inversions(&self.reading_word())
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shape first, then reading word lexicographically.
impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.reading_word().cmp(&other.reading_word()))
    }
}

impl fmt::Display for Tableau {
    /// Top row first; inner cells print as `·`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries().map(|(_, v)| v.to_string().len()).max().unwrap_or(1);
        for r in (1..=self.shape.rows()).rev() {
            let mut line = Vec::new();
            for _ in 0..self.shape.inner().part(r) {
                line.push(format!("{:>width$}", "·"));
            }
            for v in &self.rows[r - 1] {
                line.push(format!("{v:>width$}"));
            }
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    outer: Composition,
    #[serde(default)]
    inner: Composition,
    rows: Vec<Vec<usize>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawTableau {
            outer: self.shape.outer().clone(),
            inner: self.shape.inner().clone(),
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTableau::deserialize(d)?;
        let shape = SkewShape::new(raw.outer, raw.inner).map_err(serde::de::Error::custom)?;
        Tableau::from_rows(shape, raw.rows).map_err(serde::de::Error::custom)
    }
}

/// The four descent conventions and their 0-Hecke actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DescentKind {
    /// `i + 1` strictly above `i` (dual immaculate).
    Di,
    /// `i + 1` weakly below `i` (row-strict dual immaculate).
    Rdi,
    /// `i + 1` strictly below `i`.
    AStar,
    /// `i + 1` weakly above `i`.
    ABarStar,
}

impl DescentKind {
    pub const ALL: [DescentKind; 4] =
        [DescentKind::Di, DescentKind::Rdi, DescentKind::AStar, DescentKind::ABarStar];

    /// The kind whose descent set is the complement of this one's.
    pub fn complementary(self) -> DescentKind {
        match self {
            DescentKind::Di => DescentKind::Rdi,
            DescentKind::Rdi => DescentKind::Di,
            DescentKind::AStar => DescentKind::ABarStar,
            DescentKind::ABarStar => DescentKind::AStar,
        }
    }

    /// Whether swaps under this action move up the rdI poset (inversions grow).
    pub fn moves_up(self) -> bool {
        matches!(self, DescentKind::Rdi | DescentKind::AStar)
    }

    /// Descent test given the rows of `i` and `i + 1`.
    pub fn is_descent(self, row_i: usize, row_next: usize) -> bool {
        match self {
            DescentKind::Di => row_next > row_i,
            DescentKind::Rdi => row_next <= row_i,
            DescentKind::AStar => row_next < row_i,
            DescentKind::ABarStar => row_next >= row_i,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DescentKind::Di => "di",
            DescentKind::Rdi => "rdi",
            DescentKind::AStar => "astar",
            DescentKind::ABarStar => "abarstar",
        }
    }
}

impl fmt::Display for DescentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DescentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "di" => Ok(DescentKind::Di),
            "rdi" => Ok(DescentKind::Rdi),
            "astar" => Ok(DescentKind::AStar),
            "abarstar" => Ok(DescentKind::ABarStar),
            _ => Err(Error::Parse(format!("unknown descent kind {s:?}"))),
        }
    }
}

/// Column condition of a filling family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColumnRule {
    /// Leftmost-column skew cells strictly increase bottom to top.
    FirstStrict,
    /// Leftmost-column skew cells weakly increase bottom to top.
    FirstWeak,
    /// Every column strictly increases bottom to top.
    AllStrict,
    /// Every column weakly increases bottom to top.
    AllWeak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowRule {
    Strict,
    Weak,
}

/// One of the eight semistandard filling families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FillingFamily {
    pub column: ColumnRule,
    pub row: RowRule,
}

impl FillingFamily {
    pub const fn new(column: ColumnRule, row: RowRule) -> Self {
        FillingFamily { column, row }
    }

    pub fn all() -> [FillingFamily; 8] {
        use ColumnRule::*;
        use RowRule::*;
        [
            Self::new(FirstStrict, Weak),
            Self::new(FirstWeak, Strict),
            Self::new(AllStrict, Weak),
            Self::new(AllWeak, Strict),
            Self::new(FirstWeak, Weak),
            Self::new(FirstStrict, Strict),
            Self::new(AllWeak, Weak),
            Self::new(AllStrict, Strict),
        ]
    }

    /// The family whose generating function equals the descent characteristic
    /// of `kind` over SIT (`extended = false`) or SET (`extended = true`).
    pub fn for_kind(kind: DescentKind, extended: bool) -> FillingFamily {
        use ColumnRule::*;
        use DescentKind::*;
        use RowRule::*;
        match (kind, extended) {
            (Di, false) => Self::new(FirstStrict, Weak),
            (Rdi, false) => Self::new(FirstWeak, Strict),
            (Di, true) => Self::new(AllStrict, Weak),
            (Rdi, true) => Self::new(AllWeak, Strict),
            (AStar, false) => Self::new(FirstWeak, Weak),
            (ABarStar, false) => Self::new(FirstStrict, Strict),
            (AStar, true) => Self::new(AllWeak, Weak),
            (ABarStar, true) => Self::new(AllStrict, Strict),
        }
    }
}

impl fmt::Display for FillingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let col = match self.column {
            ColumnRule::FirstStrict => "1st col <",
            ColumnRule::FirstWeak => "1st col <=",
            ColumnRule::AllStrict => "cols <",
            ColumnRule::AllWeak => "cols <=",
        };
        let row = match self.row {
            RowRule::Strict => "rows <",
            RowRule::Weak => "rows <=",
        };
        write!(f, "({col}, {row})")
    }
}

/// All standard immaculate tableaux of `shape`, in canonical order.
pub fn generate_sit(shape: &SkewShape) -> Vec<Tableau> {
    let n = shape.size();
    let nrows = shape.rows();
    let first_col_row = shape.inner().len() + 1;
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); nrows];
    let mut out = Vec::new();

    // Values are placed in increasing order, so rows and the leftmost column
    // increase as long as each value lands right of a filled cell, or above
    // the filled column-1 cell below it.
    fn place(
        v: usize,
        n: usize,
        shape: &SkewShape,
        first_col_row: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if v > n {
            out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        for r in 1..=rows.len() {
            let filled = rows[r - 1].len();
            if filled == shape.row_len(r) {
                continue;
            }
            let is_first_col = filled == 0 && shape.row_start(r) == 1;
            if is_first_col && r > first_col_row && rows[r - 2].is_empty() {
                continue;
            }
            rows[r - 1].push(v);
            place(v + 1, n, shape, first_col_row, rows, out);
            rows[r - 1].pop();
        }
    }

    place(1, n, shape, first_col_row, &mut rows, &mut out);
    out.sort();
    out
}

/// The standard extended tableaux: SIT with every column increasing.
pub fn generate_set(shape: &SkewShape) -> Vec<Tableau> {
    generate_sit(shape).into_iter().filter(Tableau::columns_increase).collect()
}

/// SIT tableaux with some column not increasing.
pub fn generate_nset(shape: &SkewShape) -> Vec<Tableau> {
    generate_sit(shape).into_iter().filter(|t| !t.columns_increase()).collect()
}

/// All fillings with entries in `1..=max_entry` satisfying the family's
/// row and column rules. Entries may repeat.
pub fn generate_fillings(shape: &SkewShape, family: FillingFamily, max_entry: usize) -> Vec<Tableau> {
    let cs = cells(shape);
    let index_of = |cell: Cell| cs.iter().position(|&c| c == cell);
    // predecessor constraints for each cell, all earlier in cells() order
    let left: Vec<Option<usize>> = cs.iter().map(|c| index_of(Cell { col: c.col.wrapping_sub(1), ..*c })).collect();
    let below: Vec<Option<usize>> = cs
        .iter()
        .map(|c| match family.column {
            ColumnRule::FirstStrict | ColumnRule::FirstWeak if c.col == 1 && c.row > 1 => {
                index_of(Cell::new(c.row - 1, 1))
            }
            ColumnRule::AllStrict | ColumnRule::AllWeak => {
                (1..c.row).rev().find_map(|r| index_of(Cell::new(r, c.col)))
            }
            _ => None,
        })
        .collect();
    let row_strict = family.row == RowRule::Strict;
    let col_strict = matches!(family.column, ColumnRule::FirstStrict | ColumnRule::AllStrict);

    let mut vals = vec![0usize; cs.len()];
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        max_entry: usize,
        left: &[Option<usize>],
        below: &[Option<usize>],
        row_strict: bool,
        col_strict: bool,
        vals: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if k == vals.len() {
            emit(vals);
            return;
        }
        let mut lo = 1;
        if let Some(l) = left[k] {
            lo = lo.max(vals[l] + usize::from(row_strict));
        }
        if let Some(b) = below[k] {
            lo = lo.max(vals[b] + usize::from(col_strict));
        }
        for v in lo..=max_entry {
            vals[k] = v;
            rec(k + 1, max_entry, left, below, row_strict, col_strict, vals, emit);
        }
    }

    let mut emit = |vals: &[usize]| {
        let mut rows = vec![Vec::new(); shape.rows()];
        for (c, &v) in cs.iter().zip(vals) {
            rows[c.row - 1].push(v);
        }
        out.push(Tableau { shape: shape.clone(), rows });
    };
    rec(0, max_entry, &left, &below, row_strict, col_strict, &mut vals, &mut emit);
    out
}

/// Descent set of a standard tableau under the given convention.
pub fn descent_set(t: &Tableau, kind: DescentKind) -> BTreeSet<usize> {
    let row = t.rows_by_value();
    (1..t.size()).filter(|&i| kind.is_descent(row[i], row[i + 1])).collect()
}

/// Entries read right to left along rows, from the top row down.
pub fn reading_word(t: &Tableau) -> Vec<usize> {
    t.reading_word()
}

/// Number of pairs `p < q` with `word[p] > word[q]`.
pub fn inversions(word: &[usize]) -> usize {
    word.iter()
        .enumerate()
        .map(|(p, &a)| word[p + 1..].iter().filter(|&&b| a > b).count())
        .sum()
}

/// Leftmost-column skew cells get `1..`, bottom to top; the remaining cells
/// are filled row by row from the top row down, left to right.
pub fn s0(shape: &SkewShape) -> Tableau {
    let mut t = empty_filling(shape);
    let first = leftmost_column_cells(shape);
    let mut next = 1;
    for &c in &first {
        t.set(c, next);
        next += 1;
    }
    for r in (1..=shape.rows()).rev() {
        for c in shape.row_start(r)..=shape.outer().part(r) {
            let cell = Cell::new(r, c);
            if !first.contains(&cell) {
                t.set(cell, next);
                next += 1;
            }
        }
    }
    t
}

/// Row superstandard: left to right, bottom row first.
pub fn srow(shape: &SkewShape) -> Tableau {
    let mut t = empty_filling(shape);
    for (k, c) in cells(shape).into_iter().enumerate() {
        t.set(c, k + 1);
    }
    t
}

/// Column superstandard: bottom to top, leftmost column first.
pub fn scol(shape: &SkewShape) -> Tableau {
    let mut t = empty_filling(shape);
    let mut cs = cells(shape);
    cs.sort_by_key(|c| (c.col, c.row));
    for (k, c) in cs.into_iter().enumerate() {
        t.set(c, k + 1);
    }
    t
}

fn empty_filling(shape: &SkewShape) -> Tableau {
    let rows = (1..=shape.rows()).map(|r| vec![0; shape.row_len(r)]).collect();
    Tableau { shape: shape.clone(), rows }
}

/// Embeds a skew tableau of shape `alpha / beta` into `SIT(alpha)`: skew
/// entries are shifted up by `|beta|` and the cells of `beta` are filled
/// with `fill` (row superstandard when `None`).
pub fn phi(t: &Tableau, fill: Option<&Tableau>) -> Result<Tableau> {
    let shape = t.shape();
    if !t.is_sit() {
        return Err(Error::NotImmaculate(shape.clone()));
    }
    let beta = SkewShape::straight(shape.inner().clone());
    let default_fill;
    let u = match fill {
        Some(u) => {
            if u.shape() != &beta {
                return Err(Error::ShapeMismatch(beta));
            }
            if !u.is_sit() {
                return Err(Error::NotImmaculate(beta));
            }
            u
        }
        None => {
            default_fill = srow(&beta);
            &default_fill
        }
    };
    let m = beta.size();
    let rows = (1..=shape.rows())
        .map(|r| {
            let mut row = u.rows.get(r - 1).cloned().unwrap_or_default();
            row.extend(t.rows[r - 1].iter().map(|v| v + m));
            row
        })
        .collect();
    Ok(Tableau { shape: SkewShape::straight(shape.outer().clone()), rows })
}

/// Closed form for the number of reading-word inversions of `phi_U(T)`
/// between a skew entry and an entry of `beta`. Rows up to `l(beta)`
/// contribute `(alpha_i - beta_i)(beta_1 + ... + beta_i)`; rows above
/// contribute `alpha_i |beta|`.
pub fn inv_alpha_beta(alpha: &Composition, beta: &Composition) -> Result<usize> {
    let shape = SkewShape::new(alpha.clone(), beta.clone())?;
    let m = beta.size();
    let mut partial = 0;
    let mut total = 0;
    for i in 1..=alpha.len() {
        if i <= beta.len() {
            partial += beta.part(i);
            total += shape.row_len(i) * partial;
        } else {
            total += alpha.part(i) * m;
        }
    }
    Ok(total)
}
