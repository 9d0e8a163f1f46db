//! Colored crystal graphs: generation by operator closure, lookups, export.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::base::{Color, Rank, Weight};
use crate::error::{Error, Result};
use crate::word::{Crystal, Dir};

/// Result of applying an operator to a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Link {
    Null,
    To(u32),
    /// The operator produced an element that is not a vertex of the graph.
    Outside,
}

impl Link {
    pub fn target(self) -> Option<usize> {
        match self {
            Link::To(v) => Some(v as usize),
            _ => None,
        }
    }
}

/// A finite crystal graph with both operator tables recorded.
///
/// `b →ᵏ b'` is an edge exactly when `f̃_k b = b'`.
#[derive(Debug, Clone)]
pub struct CrystalGraph<V> {
    rank: Rank,
    colors: Vec<Color>,
    vertices: Vec<V>,
    weights: Vec<Weight>,
    index: HashMap<V, u32>,
    /// `f[c][v]`, `e[c][v]` for the `c`-th color.
    f: Vec<Vec<Link>>,
    e: Vec<Vec<Link>>,
}

type Applied<V> = Vec<(Option<V>, Option<V>)>;

fn apply_all<C: Crystal>(crystal: &C, colors: &[Color], x: &C::Elem) -> Applied<C::Elem> {
    colors
        .iter()
        .map(|&k| (crystal.apply(k, Dir::F, x), crystal.apply(k, Dir::E, x)))
        .collect()
}

impl<V: Clone + Eq + std::hash::Hash + Ord + Send + Sync + std::fmt::Debug> CrystalGraph<V> {
    /// Closes `seeds` under every `ẽ_k` and `f̃_k`, breadth first. Each level is
    /// sorted, so vertex ids do not depend on scheduling.
    pub fn generate<C: Crystal<Elem = V>>(crystal: &C, seeds: Vec<V>, cap: usize) -> Result<Self> {
        let colors = crystal.colors();
        let mut index: HashMap<V, u32> = HashMap::new();
        let mut vertices: Vec<V> = Vec::new();
        let mut applied: Vec<Applied<V>> = Vec::new();

        let mut level = seeds;
        level.sort();
        level.dedup();
        while !level.is_empty() {
            if vertices.len() + level.len() > cap {
                return Err(Error::SizeCapExceeded {
                    cardinality: (vertices.len() + level.len()) as u128,
                    cap: cap as u128,
                });
            }
            for v in &level {
                index.insert(v.clone(), vertices.len() as u32);
                vertices.push(v.clone());
            }
            let results: Vec<Applied<V>> = level
                .par_iter()
                .map(|x| apply_all(crystal, &colors, x))
                .collect();
            let mut next: Vec<V> = results
                .iter()
                .flat_map(|r| r.iter().flat_map(|(f, e)| f.iter().chain(e.iter())))
                .filter(|y| !index.contains_key(*y))
                .cloned()
                .collect();
            next.par_sort_unstable();
            next.dedup();
            applied.extend(results);
            level = next;
        }
        Ok(Self::assemble(crystal, colors, vertices, index, applied))
    }

    /// The graph on a given vertex set; applications leaving the set are
    /// recorded as [`Link::Outside`].
    pub fn from_vertices<C: Crystal<Elem = V>>(crystal: &C, vertices: Vec<V>) -> Self {
        let colors = crystal.colors();
        let index: HashMap<V, u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as u32))
            .collect();
        let applied: Vec<Applied<V>> = vertices
            .par_iter()
            .map(|x| apply_all(crystal, &colors, x))
            .collect();
        Self::assemble(crystal, colors, vertices, index, applied)
    }

    fn assemble<C: Crystal<Elem = V>>(
        crystal: &C,
        colors: Vec<Color>,
        vertices: Vec<V>,
        index: HashMap<V, u32>,
        applied: Vec<Applied<V>>,
    ) -> Self {
        let resolve = |y: &Option<V>| match y {
            None => Link::Null,
            Some(y) => index.get(y).map_or(Link::Outside, |&i| Link::To(i)),
        };
        let mut f = vec![Vec::with_capacity(vertices.len()); colors.len()];
        let mut e = vec![Vec::with_capacity(vertices.len()); colors.len()];
        for row in &applied {
            for (c, (fy, ey)) in row.iter().enumerate() {
                f[c].push(resolve(fy));
                e[c].push(resolve(ey));
            }
        }
        let weights = vertices.par_iter().map(|v| crystal.weight(v)).collect();
        CrystalGraph {
            rank: crystal.rank(),
            colors,
            vertices,
            weights,
            index,
            f,
            e,
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn id_of(&self, v: &V) -> Option<usize> {
        self.index.get(v).map(|&i| i as usize)
    }

    pub fn color_index(&self, k: Color) -> Option<usize> {
        self.colors.iter().position(|&c| c == k)
    }

    /// `x̃_k` on vertex `v` by table lookup.
    pub fn link(&self, c: usize, dir: Dir, v: usize) -> Link {
        match dir {
            Dir::F => self.f[c][v],
            Dir::E => self.e[c][v],
        }
    }

    /// Edges `(source, color, target)`, sorted by source then color.
    pub fn edges(&self) -> Vec<(usize, Color, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            for (c, &k) in self.colors.iter().enumerate() {
                if let Link::To(w) = self.f[c][v] {
                    out.push((v, k, w as usize));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.f
            .iter()
            .map(|col| col.iter().filter(|l| matches!(l, Link::To(_))).count())
            .sum()
    }

    /// Vertices killed by every `ẽ_k`.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.e.iter().all(|col| col[v] == Link::Null))
            .collect()
    }

    /// Connected components of the underlying undirected graph, as a
    /// component id per vertex; components are numbered by smallest vertex.
    pub fn components(&self) -> (usize, Vec<u32>) {
        let mut comp = vec![u32::MAX; self.len()];
        let mut count = 0u32;
        let mut queue = VecDeque::new();
        for start in 0..self.len() {
            if comp[start] != u32::MAX {
                continue;
            }
            comp[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for table in self.f.iter().chain(self.e.iter()) {
                    if let Link::To(w) = table[v] {
                        if comp[w as usize] == u32::MAX {
                            comp[w as usize] = count;
                            queue.push_back(w as usize);
                        }
                    }
                }
            }
            count += 1;
        }
        (count as usize, comp)
    }

    /// Graphviz DOT: vertices labelled by id, edges by color.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for v in 0..self.len() {
            let _ = writeln!(s, "  {v} [label=\"{v}\"];");
        }
        for (v, k, w) in self.edges() {
            let _ = writeln!(s, "  {v} -> {w} [label=\"{k}\"];");
        }
        s.push_str("}\n");
        s
    }

    /// Reverses the first edge in place, for negative-control fixtures.
    #[doc(hidden)]
    pub fn corrupt_reverse_first_edge(&mut self) -> Option<(usize, Color, usize)> {
        let (v, k, w) = self.edges().into_iter().next()?;
        let c = self.color_index(k).expect("edge color");
        self.f[c][v] = Link::Null;
        self.e[c][w] = Link::Null;
        self.f[c][w] = Link::To(v as u32);
        self.e[c][v] = Link::To(w as u32);
        Some((w, k, v))
    }

    /// Deletes every edge of color `k`, for negative-control fixtures.
    #[doc(hidden)]
    pub fn corrupt_drop_color(&mut self, k: Color) {
        if let Some(c) = self.color_index(k) {
            self.f[c].fill(Link::Null);
            self.e[c].fill(Link::Null);
        }
    }

    /// Overwrites the stored weight of a vertex, for negative-control fixtures.
    #[doc(hidden)]
    pub fn corrupt_weight(&mut self, v: usize, w: Weight) {
        self.weights[v] = w;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Partition;
    use crate::tableau::{Alphabet, SkewShape};
    use crate::word::{TableauCrystal, WordCrystal};

    #[test]
    fn generation_matches_enumeration() {
        let r = Rank::new(2, 2).unwrap();
        let tc = TableauCrystal::new(r, Alphabet::B, SkewShape::straight(Partition::parse("2,1").unwrap()));
        let all = tc.elements();
        let g = CrystalGraph::generate(&tc, vec![tc.highest_weight().unwrap()], 1000).unwrap();
        assert_eq!(g.len(), all.len());
        assert_eq!(g.components().0, 1);
        assert_eq!(g.sources(), vec![0]);
        let full = CrystalGraph::from_vertices(&tc, all);
        assert_eq!(full.edge_count(), g.edge_count());
    }

    #[test]
    fn cap_is_enforced() {
        let r = Rank::new(2, 2).unwrap();
        let wc = WordCrystal { rank: r, alphabet: Alphabet::B };
        let seed = wc.words(3).into_iter().next().unwrap();
        let err = CrystalGraph::generate(&wc, vec![seed], 3).unwrap_err();
        assert!(matches!(err, Error::SizeCapExceeded { .. }));
    }

    #[test]
    fn dot_lists_every_edge() {
        let r = Rank::new(1, 2).unwrap();
        let wc = WordCrystal { rank: r, alphabet: Alphabet::B };
        let g = CrystalGraph::from_vertices(&wc, wc.words(1));
        let dot = g.to_dot();
        assert_eq!(dot.matches("->").count(), g.edge_count());
        assert!(dot.contains("[label=\"0\"]"));
    }
}
