//! Reversing grids and their DOT rendering.
//!
//! A reversing run draws a planar grid: the signed word is a path whose
//! positive entries step forward and negative entries step backward, and
//! every rewriting step fills in one square `s·θ(s,t) = t·θ(t,s)`. Deleted
//! `s⁻¹·s` factors identify the two surrounding corners. Replaying a
//! [`ReversingTrace`] reconstructs the grid; the DOT export lists corners as
//! point nodes and positive letters as labeled edges.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::reversing::ReversingTrace;
use crate::words::{Alphabet, Letter, Sign, SignedLetter};

/// A reversing grid: corner nodes and letter-labeled edges.
#[derive(Clone, Debug)]
pub struct ReversingGrid {
    node_count: usize,
    /// Deduplicated `(from, to, letter)` edges over merged corners.
    edges: Vec<(usize, usize, Letter)>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new() -> Self {
        UnionFind { parent: Vec::new() }
    }

    fn make(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        // Keep the smaller id as the root for stable numbering.
        let (keep, drop) = if ra <= rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop] = keep;
    }
}

impl ReversingGrid {
    /// Rebuilds the grid drawn by a trace.
    pub fn from_trace(trace: &ReversingTrace) -> Self {
        let mut uf = UnionFind::new();
        let mut edges: Vec<(usize, usize, Letter)> = Vec::new();

        // The current word as the path of corner nodes it visits.
        let mut path: Vec<usize> = Vec::with_capacity(trace.initial.len() + 1);
        path.push(uf.make());
        let emit =
            |uf: &mut UnionFind, edges: &mut Vec<(usize, usize, Letter)>, from: usize, entry: SignedLetter| {
                let to = uf.make();
                match entry.sign {
                    Sign::Positive => edges.push((from, to, entry.letter)),
                    Sign::Negative => edges.push((to, from, entry.letter)),
                }
                to
            };
        for entry in trace.initial.entries() {
            let from = *path.last().expect("path starts nonempty");
            let to = emit(&mut uf, &mut edges, from, entry);
            path.push(to);
        }

        for step in &trace.steps {
            let left = path[step.position];
            let right = path[step.position + 2];
            if step.replacement.is_empty() {
                // An s⁻¹·s deletion identifies the flanking corners.
                uf.union(left, right);
                path.splice(step.position..step.position + 3, [left]);
            } else {
                let mut new_nodes = Vec::with_capacity(step.replacement.len() + 1);
                new_nodes.push(left);
                let entries: Vec<SignedLetter> = step.replacement.entries().collect();
                let mut cur = left;
                for (k, entry) in entries.iter().enumerate() {
                    let to = if k + 1 == entries.len() {
                        match entry.sign {
                            Sign::Positive => edges.push((cur, right, entry.letter)),
                            Sign::Negative => edges.push((right, cur, entry.letter)),
                        }
                        right
                    } else {
                        emit(&mut uf, &mut edges, cur, *entry)
                    };
                    new_nodes.push(to);
                    cur = to;
                }
                path.splice(step.position..step.position + 3, new_nodes);
            }
        }

        // Collapse merged corners and renumber the survivors densely.
        let total = uf.parent.len();
        let mut dense = vec![usize::MAX; total];
        let mut node_count = 0;
        for i in 0..total {
            let root = uf.find(i);
            if dense[root] == usize::MAX {
                dense[root] = node_count;
                node_count += 1;
            }
        }
        let deduped: BTreeSet<(usize, usize, u8)> = edges
            .into_iter()
            .map(|(f, t, l)| (dense[uf.find(f)], dense[uf.find(t)], l.index() as u8))
            .collect();
        ReversingGrid {
            node_count,
            edges: deduped
                .into_iter()
                .map(|(f, t, l)| (f, t, Letter(l)))
                .collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, Letter)] {
        &self.edges
    }

    /// How many edges carry each letter, indexed by letter id.
    pub fn edge_letter_counts(&self, alphabet_len: usize) -> Vec<usize> {
        let mut counts = vec![0; alphabet_len];
        for &(_, _, l) in &self.edges {
            counts[l.index()] += 1;
        }
        counts
    }

    /// DOT document with point-shaped corners and letter-labeled edges.
    pub fn to_dot(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        out.push_str("digraph reversing_grid {\n");
        out.push_str("  rankdir=LR;\n");
        out.push_str("  node [shape=point];\n");
        for i in 0..self.node_count {
            let _ = writeln!(out, "  n{i};");
        }
        for &(from, to, letter) in &self.edges {
            let _ = writeln!(out, "  n{from} -> n{to} [label=\"{}\"];", alphabet.name(letter));
        }
        out.push_str("}\n");
        out
    }
}

/// Renders the grid drawn by `trace` as a DOT document.
pub fn export_trace_dot(trace: &ReversingTrace, alphabet: &Alphabet) -> String {
    ReversingGrid::from_trace(trace).to_dot(alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{Preset, RightComplementTable};
    use crate::reversing::reverse_traced;
    use crate::words::SignedWord;

    #[test]
    fn empty_trace_is_a_single_node() {
        let alpha = crate::words::Alphabet::latin(2).unwrap();
        let trace = ReversingTrace {
            initial: SignedWord::empty(),
            steps: vec![],
            final_word: SignedWord::empty(),
        };
        let grid = ReversingGrid::from_trace(&trace);
        assert_eq!(grid.node_count(), 1);
        assert_eq!(grid.edge_count(), 0);
        let dot = grid.to_dot(&alpha);
        assert!(dot.contains("n0;"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn three_step_a2t_grid_matches_the_drawn_figure() {
        let p = Preset::A2t.presentation();
        let table = RightComplementTable::derive(&p).unwrap();
        let w = p.alphabet().parse_signed("c'b'a").unwrap();
        let (_, trace) = reverse_traced(&w, &table, Some(3));
        let grid = ReversingGrid::from_trace(&trace);
        // Grid of the three-step reversing of (bc)⁻¹·a: 13 corners, 15
        // edges, five per letter.
        assert_eq!(grid.node_count(), 13);
        assert_eq!(grid.edge_count(), 15);
        assert_eq!(grid.edge_letter_counts(3), vec![5, 5, 5]);
    }

    #[test]
    fn b3_grid_has_the_expected_corner_count() {
        let p = Preset::B3.presentation();
        let table = RightComplementTable::derive(&p).unwrap();
        let w = p.alphabet().parse_signed("a'c'a'bc").unwrap();
        let (outcome, trace) = reverse_traced(&w, &table, None);
        assert_eq!(outcome.steps(), 11);
        let grid = ReversingGrid::from_trace(&trace);
        // Three of the eleven steps are deletions, which merge corners.
        assert_eq!(grid.node_count(), 23);
    }

    #[test]
    fn dot_is_deterministic() {
        let p = Preset::A2t.presentation();
        let table = RightComplementTable::derive(&p).unwrap();
        let w = p.alphabet().parse_signed("c'b'a").unwrap();
        let (_, t1) = reverse_traced(&w, &table, Some(3));
        let (_, t2) = reverse_traced(&w, &table, Some(3));
        assert_eq!(
            export_trace_dot(&t1, p.alphabet()),
            export_trace_dot(&t2, p.alphabet())
        );
    }
}
