//! Compositions, skew shapes and the cell geometry of their diagrams.
//!
//! Rows are numbered from the bottom starting at 1 and columns from the left
//! starting at 1. A composition `(a_1, ..., a_k)` has `a_i` left-justified
//! cells in row `i`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers. The empty sequence is the empty
/// composition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// True when the parts weakly decrease, i.e. the composition is a partition.
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Conjugate of a partition. Meaningless for other compositions.
    pub fn conjugate(&self) -> Composition {
        let first = self.0.first().copied().unwrap_or(0);
        Composition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Shorthand used throughout the tests: panics on a zero part.
#[macro_export]
macro_rules! comp {
    () => { $crate::shapes::Composition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::shapes::Composition::new(vec![$($p),+]).expect("positive parts")
    };
}

/// A cell of a diagram, row 1 at the bottom, column 1 at the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }
}

/// A skew shape `outer / inner` with the inner diagram placed in the
/// bottom-left corner of the outer one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SkewShape {
    outer: Composition,
    inner: Composition,
}

#[derive(Deserialize)]
struct RawShape {
    outer: Composition,
    #[serde(default)]
    inner: Composition,
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawShape::deserialize(d)?;
        SkewShape::new(raw.outer, raw.inner).map_err(serde::de::Error::custom)
    }
}

impl SkewShape {
    pub fn new(outer: Composition, inner: Composition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::NotContained { inner, outer });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `outer / ∅`.
    pub fn straight(outer: Composition) -> Self {
        SkewShape { outer, inner: Composition::empty() }
    }

    pub fn outer(&self) -> &Composition {
        &self.outer
    }

    pub fn inner(&self) -> &Composition {
        &self.inner
    }

    /// Number of skew cells, `|outer| - |inner|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer diagram.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of skew cells in row `r`.
    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    /// Column of the first skew cell of row `r`.
    pub fn row_start(&self, r: usize) -> usize {
        self.inner.part(r) + 1
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.row <= self.outer.len()
            && cell.col > self.inner.part(cell.row)
            && cell.col <= self.outer.part(cell.row)
    }

    /// Whether the cell sits in the leftmost column of the skew diagram.
    pub fn in_leftmost_column(&self, cell: Cell) -> bool {
        cell.col == 1 && self.contains_cell(cell)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Partial sums of `alpha`, excluding the total.
pub fn set_of(alpha: &Composition) -> BTreeSet<usize> {
    let mut acc = 0;
    let mut out = BTreeSet::new();
    for &p in alpha.parts().iter().take(alpha.len().saturating_sub(1)) {
        acc += p;
        out.insert(acc);
    }
    out
}

/// Inverse of [`set_of`] for compositions of `n`.
pub fn comp_of(set: &BTreeSet<usize>, n: usize) -> Result<Composition> {
    if let Some(&bad) = set.iter().find(|&&s| s == 0 || s >= n) {
        return Err(Error::SetOutOfRange { element: bad, n });
    }
    if n == 0 {
        return Ok(Composition::empty());
    }
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for &s in set {
        parts.push(s - prev);
        prev = s;
    }
    parts.push(n - prev);
    Ok(Composition(parts))
}

/// The composition of the same size whose set is the complement of `set_of(alpha)`.
pub fn complement(alpha: &Composition) -> Composition {
    let n = alpha.size();
    let set = set_of(alpha);
    let rest: BTreeSet<usize> = (1..n).filter(|s| !set.contains(s)).collect();
    comp_of(&rest, n).expect("complement stays in range")
}

/// `beta ⊆ alpha`: `beta` has no more parts than `alpha` and is dominated
/// part by part.
pub fn contains(beta: &Composition, alpha: &Composition) -> bool {
    beta.len() <= alpha.len() && beta.parts().iter().zip(alpha.parts()).all(|(b, a)| b <= a)
}

/// All skew cells, bottom row first, left to right within a row.
pub fn cells(shape: &SkewShape) -> Vec<Cell> {
    (1..=shape.rows())
        .flat_map(|r| (shape.row_start(r)..=shape.outer.part(r)).map(move |c| Cell::new(r, c)))
        .collect()
}

/// Skew cells of column 1, bottom to top. These are the rows above the inner
/// shape.
pub fn leftmost_column_cells(shape: &SkewShape) -> Vec<Cell> {
    (shape.inner.len() + 1..=shape.outer.len()).map(|r| Cell::new(r, 1)).collect()
}

/// All compositions of `n`, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All compositions `beta ⊆ alpha`, including `∅` and `alpha` itself.
pub fn sub_compositions(alpha: &Composition) -> Vec<Composition> {
    let mut out = vec![Composition::empty()];
    let mut cur = Vec::new();
    fn rec(alpha: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        let k = cur.len();
        if k == alpha.len() {
            return;
        }
        for p in 1..=alpha[k] {
            cur.push(p);
            out.push(Composition(cur.clone()));
            rec(alpha, cur, out);
            cur.pop();
        }
    }
    rec(alpha.parts(), &mut cur, &mut out);
    out.sort();
    out
}

/// All compositions `beta ⊆ alpha` with `|beta| = m`.
pub fn sub_compositions_of_size(alpha: &Composition, m: usize) -> Vec<Composition> {
    sub_compositions(alpha).into_iter().filter(|b| b.size() == m).collect()
}

/// Every skew shape `alpha / beta` with `|alpha| <= max_n`, ordered by
/// `|alpha|`, then `alpha`, then `beta`.
pub fn all_skew_shapes(max_n: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for alpha in compositions(n) {
            for beta in sub_compositions(&alpha) {
                out.push(SkewShape { outer: alpha.clone(), inner: beta });
            }
        }
    }
    out
}

/// Parses `"3,1,2"` into a composition. The empty string is the empty composition.
pub fn parse_composition(s: &str) -> Result<Composition> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Composition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Composition::new(parts)
}
