//! The four 0-Hecke actions on skew standard immaculate tableaux, operator
//! relation checks, and the straightening words to `S0` and `Srow`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{leftmost_column_cells, Cell, SkewShape};
use crate::tableaux::{generate_sit, s0, srow, DescentKind, Tableau};

/// Outcome of applying one generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "result", content = "tableau", rename_all = "lowercase")]
pub enum HeckeResult {
    Fixed(Tableau),
    Swapped(Tableau),
    Zero,
}

impl HeckeResult {
    pub fn tableau(&self) -> Option<&Tableau> {
        match self {
            HeckeResult::Fixed(t) | HeckeResult::Swapped(t) => Some(t),
            HeckeResult::Zero => None,
        }
    }

    pub fn into_tableau(self) -> Option<Tableau> {
        match self {
            HeckeResult::Fixed(t) | HeckeResult::Swapped(t) => Some(t),
            HeckeResult::Zero => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, HeckeResult::Zero)
    }
}

/// A product `π_{i1} π_{i2} ⋯ π_{ir}` of generators, stored in the printed
/// (composition) order: the rightmost index acts first.
///
/// JSON lists the indices in application order, i.e. reversed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord(Vec<usize>);

impl GeneratorWord {
    pub fn new(indices: Vec<usize>) -> Self {
        GeneratorWord(indices)
    }

    pub fn from_application_order(mut indices: Vec<usize>) -> Self {
        indices.reverse();
        GeneratorWord(indices)
    }

    /// Indices as printed, leftmost acting last.
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn application_order(&self) -> Vec<usize> {
        self.0.iter().rev().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("pi_{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for GeneratorWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.application_order().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneratorWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<usize>::deserialize(d).map(GeneratorWord::from_application_order)
    }
}

/// `π_i(T)` without validating `T` or `i`; callers must pass a SIT tableau and
/// `1 <= i < |T|`.
pub fn act(kind: DescentKind, i: usize, t: &Tableau) -> HeckeResult {
    let rows = t.rows_by_value();
    if !kind.is_descent(rows[i], rows[i + 1]) {
        return HeckeResult::Fixed(t.clone());
    }
    let swapped = t.swap_values(i);
    if swapped.is_sit() {
        HeckeResult::Swapped(swapped)
    } else {
        HeckeResult::Zero
    }
}

fn check_index(i: usize, t: &Tableau) -> Result<()> {
    let max = t.size().saturating_sub(1);
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    Ok(())
}

/// `π_i(T)`: fixed off the descent set, swapped when the swap stays
/// immaculate, zero otherwise.
pub fn apply(kind: DescentKind, i: usize, t: &Tableau) -> Result<HeckeResult> {
    if !t.is_sit() {
        return Err(Error::NotImmaculate(t.shape().clone()));
    }
    check_index(i, t)?;
    Ok(act(kind, i, t))
}

/// Applies the word right to left. The result is `Fixed` when the final
/// tableau equals the input.
pub fn apply_word(kind: DescentKind, w: &GeneratorWord, t: &Tableau) -> Result<HeckeResult> {
    if !t.is_sit() {
        return Err(Error::NotImmaculate(t.shape().clone()));
    }
    for &i in w.indices() {
        check_index(i, t)?;
    }
    let mut cur = t.clone();
    for i in w.application_order() {
        match act(kind, i, &cur) {
            HeckeResult::Zero => return Ok(HeckeResult::Zero),
            r => cur = r.into_tableau().unwrap(),
        }
    }
    Ok(if &cur == t { HeckeResult::Fixed(cur) } else { HeckeResult::Swapped(cur) })
}

fn ensure_sit(t: &Tableau) -> Result<()> {
    if t.is_sit() {
        Ok(())
    } else {
        Err(Error::NotImmaculate(t.shape().clone()))
    }
}

/// A word `w` with `w(S0) = T` under the rdI action.
///
/// The leftmost column is repaired first, bottom to top, then the remaining
/// rows from the top down, each left to right: each cell is walked down to its
/// `S0` value by adjacent transpositions.
pub fn straighten_from_bottom(t: &Tableau) -> Result<GeneratorWord> {
    ensure_sit(t)?;
    let shape = t.shape();
    let target = s0(shape);
    let first = leftmost_column_cells(shape);
    let mut order = first.clone();
    for r in (1..=shape.rows()).rev() {
        for c in shape.row_start(r)..=shape.outer().part(r) {
            let cell = Cell::new(r, c);
            if !first.contains(&cell) {
                order.push(cell);
            }
        }
    }
    let mut cur = t.clone();
    let mut word = Vec::new();
    for cell in order {
        let want = target.get(cell).unwrap();
        while let Some(x) = cur.get(cell).filter(|&x| x != want) {
            cur = cur.swap_values(x - 1);
            word.push(x - 1);
        }
    }
    Ok(GeneratorWord(word))
}

/// A word `w` with `w(T) = Srow` under the rdI action.
///
/// Rows are repaired from the top down, each right to left, raising each
/// entry to its `Srow` value one transposition at a time.
pub fn straighten_to_top(t: &Tableau) -> Result<GeneratorWord> {
    ensure_sit(t)?;
    let shape = t.shape();
    let target = srow(shape);
    let mut cur = t.clone();
    let mut applied = Vec::new();
    for r in (1..=shape.rows()).rev() {
        for c in (shape.row_start(r)..=shape.outer().part(r)).rev() {
            let cell = Cell::new(r, c);
            let want = target.get(cell).unwrap();
            while let Some(x) = cur.get(cell).filter(|&x| x != want) {
                cur = cur.swap_values(x);
                applied.push(x);
            }
        }
    }
    Ok(GeneratorWord::from_application_order(applied))
}

/// Every generator as a map on basis indices, `None` standing for zero.
pub fn operator_table(kind: DescentKind, basis: &[Tableau]) -> Vec<Vec<Option<usize>>> {
    let index: HashMap<&Tableau, usize> = basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let n = basis.first().map_or(0, Tableau::size);
    (1..n)
        .map(|i| {
            basis
                .iter()
                .map(|t| act(kind, i, t).tableau().map(|u| index[u]))
                .collect()
        })
        .collect()
}

/// A failed 0-Hecke relation on a basis tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    pub relation: &'static str,
    pub i: usize,
    pub j: usize,
    pub tableau: Tableau,
}

/// First violation of `π_i² = π_i`, the braid relation, or far commutation.
pub fn find_relation_violation(kind: DescentKind, shape: &SkewShape) -> Option<RelationViolation> {
    let basis = generate_sit(shape);
    let ops = operator_table(kind, &basis);
    let apply_seq = |seq: &[usize], k: usize| -> Option<usize> {
        // seq in application order; generator i lives at ops[i - 1]
        seq.iter().try_fold(k, |cur, &i| ops[i - 1][cur])
    };
    let g = ops.len();
    for (k, t) in basis.iter().enumerate() {
        let witness = |relation, i, j| RelationViolation { relation, i, j, tableau: t.clone() };
        for i in 1..=g {
            if apply_seq(&[i, i], k) != apply_seq(&[i], k) {
                return Some(witness("idempotent", i, i));
            }
            if i < g && apply_seq(&[i, i + 1, i], k) != apply_seq(&[i + 1, i, i + 1], k) {
                return Some(witness("braid", i, i + 1));
            }
            for j in i + 2..=g {
                if apply_seq(&[i, j], k) != apply_seq(&[j, i], k) {
                    return Some(witness("commute", i, j));
                }
            }
        }
    }
    None
}

/// All three relation families hold as operators on the span of `SIT(shape)`.
pub fn check_relations(kind: DescentKind, shape: &SkewShape) -> bool {
    find_relation_violation(kind, shape).is_none()
}
