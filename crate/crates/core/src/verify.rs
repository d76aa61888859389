//! Theorem-level checks: the branching rule through the entry-threshold
//! split, composition series, cyclicity, closure of the extended and
//! non-extended subsets, and the enumeration formula. Every check returns a
//! report; nothing here panics on a failed identity.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{act, apply_word, find_relation_violation, straighten_from_bottom, straighten_to_top, GeneratorWord, HeckeResult};
use crate::poset::{build_poset, is_graded, maximal_elements, minimal_elements, rank_formula, transition_edges};
use crate::qsym::{
    char_of, char_tableaux, gf_fillings, hooked_product, skew_schur_poly, to_poly, two_alphabet_check, QSymF,
    SymKind,
};
use crate::shapes::{all_skew_shapes, compositions, sub_compositions, sub_compositions_of_size, Composition, SkewShape};
use crate::tableaux::{descent_set, generate_set, generate_sit, phi, s0, srow, DescentKind, FillingFamily, Tableau};

/// A failed check with the smallest useful witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub shape: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<DescentKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableau: Option<Tableau>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Failure {
    pub fn new(check: &str, shape: &SkewShape) -> Self {
        Failure {
            check: check.to_string(),
            shape: shape.to_string(),
            kind: None,
            tableau: None,
            index: None,
            detail: String::new(),
        }
    }

    pub fn kind(mut self, kind: DescentKind) -> Self {
        self.kind = Some(kind);
        self
    }

    pub fn tableau(mut self, t: &Tableau) -> Self {
        self.tableau = Some(t.clone());
        self
    }

    pub fn index(mut self, i: usize) -> Self {
        self.index = Some(i);
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }
}

// ---------------------------------------------------------------------------
// branching

/// `θ(T) = T_{≤m} ⊗ T_{>m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplitPair {
    /// Entries `1..=m`, of straight shape `β`.
    pub low: Tableau,
    /// Entries above `m`, shifted down by `m`, of shape `α/β`.
    pub high: Tableau,
}

/// Splits a straight tableau at the threshold `m`.
pub fn split(t: &Tableau, m: usize) -> Result<SplitPair> {
    let shape = t.shape();
    if !shape.is_straight() {
        return Err(Error::ShapeMismatch(shape.clone()));
    }
    if m > t.size() {
        return Err(Error::IndexOutOfRange { index: m, max: t.size() });
    }
    let counts: Vec<usize> = t.rows().iter().map(|r| r.iter().filter(|&&v| v <= m).count()).collect();
    let prefixes_ok = t.rows().iter().zip(&counts).all(|(r, &c)| r[..c].iter().all(|&v| v <= m));
    let len = counts.iter().rposition(|&c| c > 0).map_or(0, |p| p + 1);
    if !prefixes_ok || counts[..len].contains(&0) {
        return Err(Error::SplitNotComposition { m });
    }
    let beta = Composition::new(counts[..len].to_vec())?;
    let low_rows = t.rows()[..len].iter().zip(&counts).map(|(r, &c)| r[..c].to_vec()).collect();
    let high_rows = t
        .rows()
        .iter()
        .zip(counts.iter())
        .map(|(r, &c)| r[c..].iter().map(|v| v - m).collect())
        .collect();
    let low = Tableau::from_rows(SkewShape::straight(beta.clone()), low_rows)?;
    let high = Tableau::from_rows(SkewShape::new(shape.outer().clone(), beta)?, high_rows)?;
    Ok(SplitPair { low, high })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchBlock {
    pub beta: Composition,
    /// Tableaux of `α` whose entries `1..=m` fill `β`.
    pub block_size: usize,
    pub straight_count: usize,
    pub skew_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    pub index: usize,
    pub intertwines: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchReport {
    pub alpha: Composition,
    pub m: usize,
    pub kind: DescentKind,
    pub extended: bool,
    pub total: usize,
    pub blocks: Vec<BranchBlock>,
    /// Every tableau splits into a valid pair and reassembles under φ.
    pub partition: bool,
    /// Each block is all of `basis(β) × basis(α/β)`.
    pub blocks_bijective: bool,
    /// `Σ_β |basis(β)| |basis(α/β)| = |basis(α)|`.
    pub dimension_identity: bool,
    pub generators: Vec<GeneratorCheck>,
    pub failures: Vec<Failure>,
}

impl BranchReport {
    pub fn intertwining(&self) -> bool {
        self.generators.iter().all(|g| g.intertwines)
    }

    pub fn passed(&self) -> bool {
        self.partition && self.blocks_bijective && self.dimension_identity && self.intertwining()
    }
}

/// The action on SET, where dI and Ā* act on the quotient by the
/// non-extended tableaux: a swap leaving SET becomes zero.
pub fn act_extended(kind: DescentKind, i: usize, t: &Tableau) -> HeckeResult {
    match act(kind, i, t) {
        HeckeResult::Swapped(u) if !u.is_set() => HeckeResult::Zero,
        r => r,
    }
}

fn branching(alpha: &Composition, m: usize, kind: DescentKind, extended: bool) -> Result<BranchReport> {
    let n = alpha.size();
    if m == 0 || m > n {
        return Err(Error::IndexOutOfRange { index: m, max: n });
    }
    let whole = SkewShape::straight(alpha.clone());
    let basis_of = |s: &SkewShape| if extended { generate_set(s) } else { generate_sit(s) };
    let action = |i: usize, t: &Tableau| if extended { act_extended(kind, i, t) } else { act(kind, i, t) };
    let basis = basis_of(&whole);
    let mut failures = Vec::new();

    let mut block_members: HashMap<Composition, HashSet<SplitPair>> = HashMap::new();
    let mut partition = true;
    for t in &basis {
        match split(t, m) {
            Ok(pair) => {
                let in_basis = |u: &Tableau| if extended { u.is_set() } else { u.is_sit() };
                let ok = in_basis(&pair.low) && in_basis(&pair.high) && phi(&pair.high, Some(&pair.low)).as_ref() == Ok(t);
                if !ok {
                    partition = false;
                    failures.push(Failure::new("split round trip", &whole).tableau(t));
                }
                block_members.entry(pair.low.shape().outer().clone()).or_default().insert(pair);
            }
            Err(e) => {
                partition = false;
                failures.push(Failure::new("split", &whole).tableau(t).detail(e.to_string()));
            }
        }
    }

    let mut blocks = Vec::new();
    let mut blocks_bijective = true;
    let mut sum = 0;
    for beta in sub_compositions_of_size(alpha, m) {
        let straight_count = basis_of(&SkewShape::straight(beta.clone())).len();
        let skew_count = basis_of(&SkewShape::new(alpha.clone(), beta.clone())?).len();
        let block_size = block_members.get(&beta).map_or(0, HashSet::len);
        if block_size != straight_count * skew_count {
            blocks_bijective = false;
            failures.push(
                Failure::new("block is not the full product", &whole)
                    .detail(format!("beta {beta}: {block_size} tableaux vs {straight_count} x {skew_count}")),
            );
        }
        sum += straight_count * skew_count;
        blocks.push(BranchBlock { beta, block_size, straight_count, skew_count });
    }
    let dimension_identity = sum == basis.len();
    if !dimension_identity {
        failures.push(
            Failure::new("dimension identity", &whole)
                .detail(format!("sum over blocks {sum} vs {} basis elements", basis.len())),
        );
    }

    let mut generators = Vec::new();
    for i in (1..n).filter(|&i| i != m) {
        let mut intertwines = true;
        for t in &basis {
            let Ok(pair) = split(t, m) else { continue };
            let lhs = action(i, t).into_tableau().map(|u| split(&u, m));
            let rhs = if i < m {
                action(i, &pair.low).into_tableau().map(|low| SplitPair { low, high: pair.high.clone() })
            } else {
                action(i - m, &pair.high).into_tableau().map(|high| SplitPair { low: pair.low.clone(), high })
            };
            let ok = match (lhs, rhs) {
                (None, None) => true,
                (Some(Ok(a)), Some(b)) => a == b,
                _ => false,
            };
            if !ok {
                intertwines = false;
                if failures.len() < 20 {
                    failures.push(Failure::new("intertwining", &whole).kind(kind).tableau(t).index(i));
                }
            }
        }
        generators.push(GeneratorCheck { index: i, intertwines });
    }

    Ok(BranchReport {
        alpha: alpha.clone(),
        m,
        kind,
        extended,
        total: basis.len(),
        blocks,
        partition,
        blocks_bijective,
        dimension_identity,
        generators,
        failures,
    })
}

/// Restriction of the SIT module of `α` to `H_m(0) ⊗ H_{n−m}(0)`.
pub fn branching_check(alpha: &Composition, m: usize, kind: DescentKind) -> Result<BranchReport> {
    branching(alpha, m, kind, false)
}

/// The same over SET, with dI and Ā* acting on the quotient.
pub fn branching_check_set(alpha: &Composition, m: usize, kind: DescentKind) -> Result<BranchReport> {
    branching(alpha, m, kind, true)
}

// ---------------------------------------------------------------------------
// module structure

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionSeriesReport {
    pub shape: SkewShape,
    pub kind: DescentKind,
    /// Each generator sends each tableau to itself, to zero, or later in the
    /// filtration, fixing it exactly off its descent set.
    pub filtration: bool,
    pub characteristic: QSymF,
    pub matches_char: bool,
    pub failures: Vec<Failure>,
}

impl CompositionSeriesReport {
    pub fn passed(&self) -> bool {
        self.filtration && self.matches_char
    }
}

/// Orders `SIT(shape)` along a linear extension of the poset (or its dual for
/// dI and Ā*) and checks the filtration has one-dimensional simple quotients.
pub fn composition_series_check(shape: &SkewShape, kind: DescentKind) -> CompositionSeriesReport {
    let p = build_poset(shape);
    let mut order: Vec<usize> = (0..p.nodes().len()).collect();
    if kind.moves_up() {
        order.sort_by_key(|&k| (p.ranks()[k], k));
    } else {
        order.sort_by_key(|&k| (-p.ranks()[k], k));
    }
    let mut position = vec![0; order.len()];
    for (pos, &k) in order.iter().enumerate() {
        position[k] = pos;
    }
    let mut failures = Vec::new();
    for &k in &order {
        let t = &p.nodes()[k];
        let des = descent_set(t, kind);
        for j in 1..t.size() {
            let ok = match act(kind, j, t) {
                HeckeResult::Fixed(_) => !des.contains(&j),
                HeckeResult::Zero => des.contains(&j),
                HeckeResult::Swapped(u) => {
                    des.contains(&j) && p.index_of(&u).is_some_and(|q| position[q] > position[k])
                }
            };
            if !ok {
                failures.push(Failure::new("filtration", shape).kind(kind).tableau(t).index(j));
            }
        }
    }
    let ordered: Vec<Tableau> = order.iter().map(|&k| p.nodes()[k].clone()).collect();
    let characteristic = char_of(&ordered, shape.size(), kind);
    let matches_char = characteristic == char_tableaux(shape, kind, false);
    CompositionSeriesReport {
        shape: shape.clone(),
        kind,
        filtration: failures.is_empty(),
        characteristic,
        matches_char,
        failures,
    }
}

fn reachable(basis: &[Tableau], start: &Tableau, step: impl Fn(usize, &Tableau) -> HeckeResult) -> HashSet<Tableau> {
    let members: HashSet<&Tableau> = basis.iter().collect();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(t) = queue.pop_front() {
        for i in 1..t.size() {
            if let HeckeResult::Swapped(u) = step(i, &t) {
                if members.contains(&u) && seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
    }
    seen
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicityReport {
    pub shape: SkewShape,
    pub kind: DescentKind,
    pub extended: bool,
    /// Some basis tableau reaches every basis tableau.
    pub cyclic: bool,
    pub generator: Option<Tableau>,
    pub reached: usize,
    pub total: usize,
    /// Straightening words replay to every tableau (SIT only).
    pub replay: bool,
    pub failures: Vec<Failure>,
}

/// The SIT module is generated by `S0` (rdI, A*) or `Srow` (dI, Ā*): checked
/// by reachability and by replaying the straightening words.
pub fn cyclicity_check(shape: &SkewShape, kind: DescentKind) -> CyclicityReport {
    let basis = generate_sit(shape);
    let start = if kind.moves_up() { s0(shape) } else { srow(shape) };
    let seen = reachable(&basis, &start, |i, t| act(kind, i, t));
    let mut failures = Vec::new();
    for t in basis.iter().filter(|t| !seen.contains(*t)) {
        failures.push(Failure::new("unreachable", shape).kind(kind).tableau(t));
    }
    for t in &basis {
        let word = if kind.moves_up() {
            straighten_from_bottom(t)
        } else {
            straighten_to_top(t).map(|w| GeneratorWord::new(w.application_order()))
        };
        let replayed = word.and_then(|w| apply_word(kind, &w, &start)).ok();
        if replayed.as_ref().and_then(HeckeResult::tableau) != Some(t) {
            failures.push(Failure::new("straightening replay", shape).kind(kind).tableau(t));
        }
    }
    CyclicityReport {
        shape: shape.clone(),
        kind,
        extended: false,
        cyclic: seen.len() == basis.len(),
        generator: Some(start),
        reached: seen.len(),
        total: basis.len(),
        replay: !failures.iter().any(|f| f.check == "straightening replay"),
        failures,
    }
}

/// Whether a single SET tableau generates the SET module.
pub fn set_cyclicity_check(shape: &SkewShape, kind: DescentKind) -> CyclicityReport {
    let basis = generate_set(shape);
    let mut best: Option<(Tableau, usize)> = None;
    for t in &basis {
        let seen = reachable(&basis, t, |i, u| act_extended(kind, i, u));
        if best.as_ref().is_none_or(|(_, r)| seen.len() > *r) {
            best = Some((t.clone(), seen.len()));
        }
    }
    let (generator, reached) = match best {
        Some((t, r)) => (Some(t), r),
        None => (None, 0),
    };
    let cyclic = reached == basis.len();
    let mut failures = Vec::new();
    if !cyclic {
        failures.push(
            Failure::new("no single generator", shape)
                .kind(kind)
                .detail(format!("best tableau reaches {reached} of {}", basis.len())),
        );
    }
    CyclicityReport {
        shape: shape.clone(),
        kind,
        extended: true,
        cyclic,
        generator,
        reached,
        total: basis.len(),
        replay: true,
        failures,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub set_closed_rdi: bool,
    pub set_closed_astar: bool,
    pub nset_closed_di: bool,
    pub nset_closed_abarstar: bool,
    pub failures: Vec<Failure>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.set_closed_rdi && self.set_closed_astar && self.nset_closed_di && self.nset_closed_abarstar
    }
}

/// SET is closed under rdI and A*; its complement in SIT under dI and Ā*.
pub fn closure_check(shape: &SkewShape) -> ClosureReport {
    let basis = generate_sit(shape);
    let mut failures = Vec::new();
    let mut closed = |kind: DescentKind, keep: fn(&Tableau) -> bool, name: &str| {
        let mut ok = true;
        for t in basis.iter().filter(|t| keep(t)) {
            for i in 1..t.size() {
                if let HeckeResult::Swapped(u) = act(kind, i, t) {
                    if !keep(&u) {
                        ok = false;
                        failures.push(Failure::new(name, shape).kind(kind).tableau(t).index(i));
                    }
                }
            }
        }
        ok
    };
    let set_closed_rdi = closed(DescentKind::Rdi, Tableau::is_set, "SET leaves under rdI");
    let set_closed_astar = closed(DescentKind::AStar, Tableau::is_set, "SET leaves under astar");
    let not_set: fn(&Tableau) -> bool = |t| !t.is_set();
    let nset_closed_di = closed(DescentKind::Di, not_set, "NSET leaves under dI");
    let nset_closed_abarstar = closed(DescentKind::ABarStar, not_set, "NSET leaves under abarstar");
    ClosureReport { set_closed_rdi, set_closed_astar, nset_closed_di, nset_closed_abarstar, failures }
}

// ---------------------------------------------------------------------------
// enumeration

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn multinomial(top: usize, parts: &[usize]) -> Option<BigInt> {
    if parts.iter().sum::<usize>() != top {
        return None;
    }
    Some(parts.iter().fold(factorial(top), |acc, &p| acc / factorial(p)))
}

/// `|SIT(γ)|` for a straight composition by the hook-type product
/// `g! / (Π_{j=0}^{ℓ-1} (g − γ_1 − … − γ_j) · Π (γ_i − 1)!)`.
pub fn straight_sit_formula(gamma: &[usize]) -> BigInt {
    let g: usize = gamma.iter().sum();
    let mut denom = BigInt::one();
    let mut partial = 0;
    for &part in gamma {
        denom *= g - partial;
        denom *= factorial(part - 1);
        partial += part;
    }
    factorial(g) / denom
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SitCountReport {
    pub shape: SkewShape,
    /// Count by generation; normative.
    pub generated: usize,
    /// `|SIT(γ)|` times the multinomial over `n − m`.
    pub formula: String,
    pub formula_matches: bool,
    /// Pure multinomial over the row lengths, present when `ℓ(α) = ℓ(β)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multinomial: Option<String>,
    /// The printed hook product runs one step further and picks up a zero
    /// factor whenever `γ` is nonempty.
    pub printed_hook_has_zero_factor: bool,
    /// The printed multinomial has top index `n`, although its bottom entries
    /// sum to `n − m`; differs from the corrected value when `m > 0`.
    pub printed_top_index_differs: bool,
    pub findings: Vec<String>,
}

/// Generation count against the closed form with `γ = (α_{k+1}, …)`, `k = ℓ(β)`.
pub fn sit_count(shape: &SkewShape) -> SitCountReport {
    let generated = generate_sit(shape).len();
    let alpha = shape.outer();
    let k = shape.inner().len();
    let gamma: Vec<usize> = alpha.parts()[k..].to_vec();
    let g: usize = gamma.iter().sum();
    let mut parts = vec![g];
    parts.extend((1..=k).rev().map(|r| shape.row_len(r)));
    let total = shape.size();
    let coefficient = multinomial(total, &parts).expect("parts sum to n - m");
    let formula = straight_sit_formula(&gamma) * coefficient;
    let multinomial_value = (gamma.is_empty()).then(|| multinomial(total, &parts[1..]).unwrap());
    let formula_matches = formula == BigInt::from(generated)
        && multinomial_value.as_ref().is_none_or(|v| *v == BigInt::from(generated));
    let printed_hook_has_zero_factor = !gamma.is_empty();
    let printed_top_index_differs = !shape.inner().is_empty();
    let mut findings = Vec::new();
    if printed_hook_has_zero_factor {
        findings.push("hook product as printed includes the factor 0; stopped one step early".to_string());
    }
    if printed_top_index_differs {
        findings.push(format!(
            "multinomial as printed has top index {} but its entries sum to {}; used {}",
            alpha.size(),
            total,
            total
        ));
    }
    if !formula_matches {
        findings.push(format!("closed form {formula} disagrees with generated count {generated}"));
    }
    SitCountReport {
        shape: shape.clone(),
        generated,
        formula: formula.to_string(),
        formula_matches,
        multinomial: multinomial_value.map(|v| v.to_string()),
        printed_hook_has_zero_factor,
        printed_top_index_differs,
        findings,
    }
}

// ---------------------------------------------------------------------------
// suites

/// Exhaustive verification suites, each over all shapes up to a size bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Poset,
    Relations,
    EightFamilies,
    Corollaries,
    TwoAlphabet,
    Branching,
    BranchingSet,
    Module,
    Enumeration,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Poset,
        Suite::Relations,
        Suite::EightFamilies,
        Suite::Corollaries,
        Suite::TwoAlphabet,
        Suite::Branching,
        Suite::BranchingSet,
        Suite::Module,
        Suite::Enumeration,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Poset => "poset",
            Suite::Relations => "relations",
            Suite::EightFamilies => "eight-families",
            Suite::Corollaries => "corollaries",
            Suite::TwoAlphabet => "two-alphabet",
            Suite::Branching => "branching",
            Suite::BranchingSet => "branching-set",
            Suite::Module => "module",
            Suite::Enumeration => "enumeration",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub cases: usize,
    pub passed: bool,
    /// Failures beyond the first few are counted, not listed.
    pub failure_count: usize,
    pub failures: Vec<Failure>,
}

const MAX_LISTED: usize = 10;

struct Collector {
    cases: usize,
    count: usize,
    failures: Vec<Failure>,
}

impl Collector {
    fn new() -> Self {
        Collector { cases: 0, count: 0, failures: Vec::new() }
    }

    fn case(&mut self, fails: impl IntoIterator<Item = Failure>) {
        self.cases += 1;
        for f in fails {
            self.count += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(f);
            }
        }
    }

    fn finish(self, suite: Suite, max_n: usize) -> SuiteReport {
        SuiteReport {
            suite,
            max_n,
            cases: self.cases,
            passed: self.count == 0,
            failure_count: self.count,
            failures: self.failures,
        }
    }
}

/// Poset structure of one shape: extremes, grading, rank, and action
/// independence of the cover digraph.
pub fn poset_checks(shape: &SkewShape) -> Vec<Failure> {
    let mut out = Vec::new();
    let p = build_poset(shape);
    if minimal_elements(&p) != vec![s0(shape)] {
        out.push(Failure::new("unique minimum is S0", shape));
    }
    if maximal_elements(&p) != vec![srow(shape)] {
        out.push(Failure::new("unique maximum is Srow", shape));
    }
    if !is_graded(&p) {
        out.push(Failure::new("graded by inversions", shape));
    }
    if !p.is_connected() {
        out.push(Failure::new("connected", shape));
    }
    let expected_rank = srow(shape).inv() as i64 - s0(shape).inv() as i64;
    match rank_formula(shape.outer(), shape.inner()) {
        Ok(r) if r == expected_rank => {}
        r => out.push(Failure::new("rank formula", shape).detail(format!("{r:?} vs {expected_rank}"))),
    }
    if p.ranks().iter().max().copied().unwrap_or(0) != expected_rank {
        out.push(Failure::new("length of poset", shape));
    }
    let rdi = p.covers().to_vec();
    let reversed = {
        let mut v: Vec<_> = rdi.iter().map(|&(f, t, i)| (t, f, i)).collect();
        v.sort_unstable();
        v
    };
    if transition_edges(p.nodes(), DescentKind::AStar) != rdi {
        out.push(Failure::new("astar digraph equals rdI digraph", shape));
    }
    for kind in [DescentKind::Di, DescentKind::ABarStar] {
        if transition_edges(p.nodes(), kind) != reversed {
            out.push(Failure::new("digraph is the reversed rdI digraph", shape).kind(kind));
        }
    }
    out
}

pub fn relation_checks(shape: &SkewShape) -> Vec<Failure> {
    DescentKind::ALL
        .into_iter()
        .filter_map(|kind| {
            find_relation_violation(kind, shape).map(|v| {
                Failure::new(v.relation, shape).kind(kind).tableau(&v.tableau).index(v.i).detail(format!("pair ({}, {})", v.i, v.j))
            })
        })
        .collect()
}

/// All eight F-expansion / filling identities in `|α/β|` variables.
pub fn eight_family_checks(shape: &SkewShape) -> Vec<Failure> {
    let v = shape.size();
    let mut out = Vec::new();
    for kind in DescentKind::ALL {
        for extended in [false, true] {
            let family = FillingFamily::for_kind(kind, extended);
            if to_poly(&char_tableaux(shape, kind, extended), v) != gf_fillings(shape, family, v) {
                out.push(Failure::new("characteristic equals filling series", shape).kind(kind).detail(format!(
                    "{} basis, family {family}",
                    if extended { "SET" } else { "SIT" }
                )));
            }
        }
    }
    out
}

fn partitions(n: usize) -> Vec<Composition> {
    compositions(n).into_iter().filter(Composition::is_partition).collect()
}

/// Extended characteristics of partition shapes against skew Schur
/// polynomials, for all `μ ⊆ λ`.
pub fn schur_checks(lambda: &Composition) -> Vec<Failure> {
    let mut out = Vec::new();
    for mu in sub_compositions(lambda).into_iter().filter(Composition::is_partition) {
        let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("sub-composition");
        let v = shape.size();
        let schur = skew_schur_poly(lambda, &mu, v).expect("partitions");
        if to_poly(&char_tableaux(&shape, DescentKind::Di, true), v) != schur {
            out.push(Failure::new("extended dI characteristic is skew Schur", &shape));
        }
        let transposed = skew_schur_poly(&lambda.conjugate(), &mu.conjugate(), v).expect("partitions");
        if to_poly(&char_tableaux(&shape, DescentKind::Rdi, true), v) != transposed {
            out.push(Failure::new("extended rdI characteristic is transposed skew Schur", &shape));
        }
    }
    out
}

/// Row-length products for shapes with `ℓ(α) = ℓ(β)`.
pub fn product_checks(shape: &SkewShape) -> Vec<Failure> {
    let v = shape.size();
    let mut out = Vec::new();
    for (kind, sym) in [(DescentKind::Di, SymKind::H), (DescentKind::Rdi, SymKind::E)] {
        let Ok(product) = hooked_product(shape, sym, v) else { continue };
        if to_poly(&char_tableaux(shape, kind, false), v) != product {
            out.push(Failure::new("characteristic is a product of h or e", shape).kind(kind));
        }
        if gf_fillings(shape, FillingFamily::for_kind(kind, false), v) != product {
            out.push(Failure::new("filling series is a product of h or e", shape).kind(kind));
        }
    }
    out
}

pub fn module_checks(shape: &SkewShape) -> Vec<Failure> {
    let mut out = Vec::new();
    for kind in DescentKind::ALL {
        let r = composition_series_check(shape, kind);
        out.extend(r.failures);
        if !r.matches_char {
            out.push(Failure::new("series characteristic", shape).kind(kind));
        }
        out.extend(cyclicity_check(shape, kind).failures);
    }
    out.extend(closure_check(shape).failures);
    out
}

pub fn enumeration_checks(shape: &SkewShape) -> Vec<Failure> {
    let r = sit_count(shape);
    if r.formula_matches {
        Vec::new()
    } else {
        vec![Failure::new("closed-form count", shape).detail(r.findings.join("; "))]
    }
}

fn branch_failures(r: Result<BranchReport>) -> Vec<Failure> {
    match r {
        Ok(r) => r.failures,
        Err(e) => vec![Failure { check: "branching".into(), shape: String::new(), kind: None, tableau: None, index: None, detail: e.to_string() }],
    }
}

/// Runs one suite over every shape (or composition) of size at most `max_n`.
pub fn run_suite(suite: Suite, max_n: usize) -> SuiteReport {
    let mut c = Collector::new();
    let shapes = || all_skew_shapes(max_n);
    let comps = || (1..=max_n).flat_map(compositions);
    match suite {
        Suite::Poset => shapes().iter().for_each(|s| c.case(poset_checks(s))),
        Suite::Relations => shapes().iter().for_each(|s| c.case(relation_checks(s))),
        Suite::EightFamilies => shapes().iter().for_each(|s| c.case(eight_family_checks(s))),
        Suite::Corollaries => {
            (1..=max_n).flat_map(partitions).for_each(|l| c.case(schur_checks(&l)));
            shapes()
                .iter()
                .filter(|s| s.outer().len() == s.inner().len())
                .for_each(|s| c.case(product_checks(s)));
        }
        Suite::TwoAlphabet => {
            for alpha in comps() {
                let n = alpha.size();
                for kind in [DescentKind::Di, DescentKind::Rdi] {
                    let ok = two_alphabet_check(&alpha, kind, n, n).unwrap_or(false);
                    let shape = SkewShape::straight(alpha.clone());
                    c.case((!ok).then(|| Failure::new("two-alphabet identity", &shape).kind(kind)));
                }
            }
        }
        Suite::Branching | Suite::BranchingSet => {
            for alpha in comps() {
                for m in 1..=alpha.size() {
                    for kind in DescentKind::ALL {
                        let r = if suite == Suite::Branching {
                            branching_check(&alpha, m, kind)
                        } else {
                            branching_check_set(&alpha, m, kind)
                        };
                        c.case(branch_failures(r));
                    }
                }
            }
        }
        Suite::Module => shapes().iter().for_each(|s| c.case(module_checks(s))),
        Suite::Enumeration => shapes().iter().for_each(|s| c.case(enumeration_checks(s))),
    }
    c.finish(suite, max_n)
}
