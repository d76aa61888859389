//! The skew immaculate Hecke poset: covers are the genuine swaps of the rdI
//! action, ranks are reading-word inversions relative to `S0`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::hecke::{act, HeckeResult};
use crate::shapes::{Composition, SkewShape};
use crate::tableaux::{generate_sit, s0, DescentKind, Tableau};

/// A cover `(from, to, i)` with `to = π_i(from)`, indices into `nodes`.
pub type Cover = (usize, usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeckePoset {
    #[serde(skip)]
    shape: SkewShape,
    nodes: Vec<Tableau>,
    covers: Vec<Cover>,
    ranks: Vec<i64>,
}

/// Swap edges of the given action on `nodes`, sorted. Edges whose target is
/// outside `nodes` are dropped.
pub fn transition_edges(nodes: &[Tableau], kind: DescentKind) -> Vec<Cover> {
    let index: HashMap<&Tableau, usize> = nodes.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut edges = Vec::new();
    for (k, t) in nodes.iter().enumerate() {
        for i in 1..t.size() {
            if let HeckeResult::Swapped(u) = act(kind, i, t) {
                if let Some(&to) = index.get(&u) {
                    edges.push((k, to, i));
                }
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// The poset on `SIT(shape)` generated by the rdI swaps.
pub fn build_poset(shape: &SkewShape) -> HeckePoset {
    let nodes = generate_sit(shape);
    let covers = transition_edges(&nodes, DescentKind::Rdi);
    let base = s0(shape).inv() as i64;
    let ranks = nodes.iter().map(|t| t.inv() as i64 - base).collect();
    HeckePoset { shape: shape.clone(), nodes, covers, ranks }
}

impl HeckePoset {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn nodes(&self) -> &[Tableau] {
        &self.nodes
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn ranks(&self) -> &[i64] {
        &self.ranks
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.nodes.iter().position(|u| u == t)
    }

    fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut indeg = vec![0; self.nodes.len()];
        let mut outdeg = vec![0; self.nodes.len()];
        for &(f, t, _) in &self.covers {
            outdeg[f] += 1;
            indeg[t] += 1;
        }
        (indeg, outdeg)
    }

    pub fn minimal_indices(&self) -> Vec<usize> {
        let (indeg, _) = self.degrees();
        (0..self.nodes.len()).filter(|&k| indeg[k] == 0).collect()
    }

    pub fn maximal_indices(&self) -> Vec<usize> {
        let (_, outdeg) = self.degrees();
        (0..self.nodes.len()).filter(|&k| outdeg[k] == 0).collect()
    }

    /// Every cover raises rank by one.
    pub fn covers_raise_rank(&self) -> bool {
        self.covers.iter().all(|&(f, t, _)| self.ranks[t] == self.ranks[f] + 1)
    }

    /// Adjacent nodes of the underlying undirected graph are all linked.
    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(f, t, _) in &self.covers {
            adj[f].push(t);
            adj[t].push(f);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(k) = queue.pop_front() {
            for &j in &adj[k] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The subposet induced on the nodes satisfying `keep`, with the same ranks.
    pub fn induced(&self, keep: impl Fn(&Tableau) -> bool) -> HeckePoset {
        let mut remap = vec![None; self.nodes.len()];
        let mut nodes = Vec::new();
        let mut ranks = Vec::new();
        for (k, t) in self.nodes.iter().enumerate() {
            if keep(t) {
                remap[k] = Some(nodes.len());
                nodes.push(t.clone());
                ranks.push(self.ranks[k]);
            }
        }
        let covers = self
            .covers
            .iter()
            .filter_map(|&(f, t, i)| Some((remap[f]?, remap[t]?, i)))
            .collect();
        HeckePoset { shape: self.shape.clone(), nodes, covers, ranks }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("poset serializes")
    }
}

pub fn minimal_elements(p: &HeckePoset) -> Vec<Tableau> {
    p.minimal_indices().into_iter().map(|k| p.nodes[k].clone()).collect()
}

pub fn maximal_elements(p: &HeckePoset) -> Vec<Tableau> {
    p.maximal_indices().into_iter().map(|k| p.nodes[k].clone()).collect()
}

/// Covers raise rank by one and all maximal chains have the same length,
/// i.e. the minimal elements share one rank and the maximal elements another.
pub fn is_graded(p: &HeckePoset) -> bool {
    let same = |idx: Vec<usize>| idx.windows(2).all(|w| p.ranks[w[0]] == p.ranks[w[1]]);
    p.covers_raise_rank() && same(p.minimal_indices()) && same(p.maximal_indices())
}

/// The subposet on `SET(shape)`.
pub fn set_subposet(p: &HeckePoset) -> HeckePoset {
    p.induced(Tableau::is_set)
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Closed form for `inv(S0)` of `alpha / beta`.
pub fn inv_s0_formula(alpha: &Composition, beta: &Composition) -> Result<i64> {
    let shape = SkewShape::new(alpha.clone(), beta.clone())?;
    let k = beta.len() as i64;
    let mut total = 0;
    for i in 1..=alpha.len() {
        total += if i as i64 <= k {
            binom(shape.row_len(i) as i64, 2)
        } else {
            binom(alpha.part(i) as i64 + i as i64 - k - 1, 2)
        };
    }
    Ok(total - binom(alpha.len() as i64 - k, 3))
}

/// Closed form for the length of the poset: `C(n - m, 2) - inv(S0)`.
pub fn rank_formula(alpha: &Composition, beta: &Composition) -> Result<i64> {
    let inv_s0 = inv_s0_formula(alpha, beta)?;
    let n = (alpha.size() - beta.size()) as i64;
    Ok(binom(n, 2) - inv_s0)
}

/// Nodes to highlight in DOT output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Highlight {
    Set,
    Nset,
}

fn node_id(t: &Tableau) -> String {
    let rw: Vec<String> = t.reading_word().iter().map(ToString::to_string).collect();
    format!("t{}", rw.join("_"))
}

fn node_label(t: &Tableau) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|r| {
            let r: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("({})", r.join(","))
        })
        .collect();
    rows.join(" ")
}

/// Graphviz rendering, bottom to top, nodes grouped by rank.
pub fn export_dot(p: &HeckePoset, highlight: Option<Highlight>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph poset {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for (k, t) in p.nodes.iter().enumerate() {
        let marked = match highlight {
            Some(Highlight::Set) => t.is_set(),
            Some(Highlight::Nset) => !t.is_set(),
            None => false,
        };
        let style = if marked { ", style=bold, color=blue" } else { "" };
        writeln!(
            out,
            "  \"{}\" [label=\"{}\\nrank {}\"{}];",
            node_id(t),
            node_label(t),
            p.ranks[k],
            style
        )
        .unwrap();
    }
    let ranks: BTreeSet<i64> = p.ranks.iter().copied().collect();
    for r in ranks {
        let ids: Vec<String> = p
            .nodes
            .iter()
            .zip(&p.ranks)
            .filter(|(_, &q)| q == r)
            .map(|(t, _)| format!("\"{}\"", node_id(t)))
            .collect();
        writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
    }
    for &(f, t, i) in &p.covers {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"pi_{}\"];",
            node_id(&p.nodes[f]),
            node_id(&p.nodes[t]),
            i
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::shapes::all_skew_shapes;
    use crate::tableaux::{scol, srow};

    fn shape(outer: Composition, inner: Composition) -> SkewShape {
        SkewShape::new(outer, inner).unwrap()
    }

    #[test]
    fn two_element_chain() {
        let s = shape(comp![2, 3], comp![1, 2]);
        let p = build_poset(&s);
        assert_eq!(p.nodes().len(), 2);
        assert_eq!(p.covers().len(), 1);
        assert_eq!(p.covers()[0].2, 1);
        assert_eq!(minimal_elements(&p), vec![s0(&s)]);
        assert_eq!(maximal_elements(&p), vec![srow(&s)]);
        // the only minimal element of SET is not S^col
        let q = set_subposet(&p);
        assert_ne!(minimal_elements(&q), vec![scol(&s)]);
    }

    #[test]
    fn single_node() {
        let p = build_poset(&SkewShape::straight(comp![1, 2]));
        assert_eq!(p.nodes().len(), 1);
        assert!(p.covers().is_empty());
        assert!(is_graded(&p));
        let dot = export_dot(&p, None);
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("[label=").count(), 1);
    }

    #[test]
    fn set_subposet_four_two_four() {
        let s = shape(comp![4, 2, 4], comp![2, 1, 2]);
        let p = build_poset(&s);
        assert!(is_graded(&p));
        assert_eq!(rank_formula(&comp![4, 2, 4], &comp![2, 1, 2]).unwrap(), 8);
        let q = set_subposet(&p);
        assert_eq!(minimal_elements(&q).len(), 3);
        assert_eq!(maximal_elements(&q), vec![srow(&s)]);
        let dot = export_dot(&p, Some(Highlight::Set));
        assert_eq!(dot.matches("style=bold").count(), q.nodes().len());
        assert_eq!(dot.matches("->").count(), p.covers().len());
    }

    #[test]
    fn incomparable_set_minima() {
        let s = shape(comp![2, 3, 2], comp![1, 2, 1]);
        let q = set_subposet(&build_poset(&s));
        assert_eq!(q.nodes().len(), 3);
        assert_eq!(maximal_elements(&q), vec![srow(&s)]);
        let t1 = Tableau::from_rows(s.clone(), vec![vec![2], vec![1], vec![3]]).unwrap();
        let mut mins = minimal_elements(&q);
        mins.sort();
        let mut expect = vec![scol(&s), t1];
        expect.sort();
        assert_eq!(mins, expect);
    }

    #[test]
    fn rank_formula_small_cases() {
        assert_eq!(rank_formula(&comp![2, 2], &comp![2, 2]).unwrap(), 0);
        let s = SkewShape::straight(comp![3, 1, 2]);
        assert_eq!(
            rank_formula(&comp![3, 1, 2], &comp![]).unwrap(),
            srow(&s).inv() as i64 - s0(&s).inv() as i64
        );
        assert!(rank_formula(&comp![1], &comp![2]).is_err());
    }

    #[test]
    fn formulas_match_counts() {
        for s in all_skew_shapes(8) {
            let (a, b) = (s.outer(), s.inner());
            assert_eq!(inv_s0_formula(a, b).unwrap(), s0(&s).inv() as i64, "{s}");
            assert_eq!(rank_formula(a, b).unwrap(), srow(&s).inv() as i64 - s0(&s).inv() as i64, "{s}");
        }
    }

    #[test]
    fn json_layout() {
        let p = build_poset(&shape(comp![2, 3], comp![1, 2]));
        let j = p.to_json();
        assert_eq!(j["covers"], serde_json::json!([[0, 1, 1]]));
        assert_eq!(j["ranks"], serde_json::json!([0, 1]));
        assert_eq!(j["nodes"][0]["rows"], serde_json::json!([[2], [1]]));
    }
}
