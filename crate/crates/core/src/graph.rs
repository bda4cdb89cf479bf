//! Finite simple undirected graphs over integer vertex ids, together with
//! the component/neighborhood primitives and the side order that the
//! decomposition engines are built on.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

/// Vertex identifier. Ids are arbitrary non-negative integers; they need not
/// be contiguous. All tie-breaks in this crate use numeric id order.
pub type Vertex = u32;

/// A sorted set of vertex ids.
pub type VertexSet = std::collections::BTreeSet<Vertex>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("vertex sets overlap at {0}")]
    OverlappingSets(Vertex),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set does not induce a connected subgraph")]
    SetNotConnected,
    #[error("vertices {0} and {1} are not adjacent, set is not a clique")]
    NotAClique(Vertex, Vertex),
    #[error("attachment set differs from the neighborhood of the component")]
    AttachmentMismatch,
}

/// An immutable simple undirected graph. Adjacency is kept symmetric and
/// loop-free; all derived sets are fresh values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, VertexSet>,
}

impl Graph {
    /// Builds a graph from an explicit vertex list and edge list. Rejects
    /// loops and edges with undeclared endpoints.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut adj: BTreeMap<Vertex, VertexSet> =
            vertices.into_iter().map(|v| (v, VertexSet::new())).collect();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if !adj.contains_key(&u) {
                return Err(GraphError::UnknownVertex(u));
            }
            if !adj.contains_key(&v) {
                return Err(GraphError::UnknownVertex(v));
            }
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph whose vertex set is implied by the edge endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
        let vertices: VertexSet = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        Self::new(vertices, edges)
    }

    /// Complete graph on vertices `0..n`.
    pub fn complete(n: u32) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Self::new(0..n, edges).unwrap()
    }

    /// Path `0 - 1 - ... - n-1`.
    pub fn path(n: u32) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::new(0..n, edges).unwrap()
    }

    /// Cycle on vertices `0..n`; requires `n >= 3`.
    pub fn cycle(n: u32) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Self::new(0..n, edges).unwrap()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn min_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (&u, nbrs) in &self.adj {
            for &v in nbrs.range((u + 1)..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    /// The open neighborhood `N(v)`; never contains `v` itself.
    pub fn neighborhood(&self, v: Vertex) -> Result<&VertexSet, GraphError> {
        self.adj.get(&v).ok_or(GraphError::UnknownVertex(v))
    }

    /// The set neighborhood `N(X) = (⋃_{v∈X} N(v)) \ X`.
    pub fn set_neighborhood(&self, x: &VertexSet) -> Result<VertexSet, GraphError> {
        let mut out = VertexSet::new();
        for &v in x {
            out.extend(self.neighborhood(v)?.iter().copied());
        }
        for v in x {
            out.remove(v);
        }
        Ok(out)
    }

    fn check_members(&self, x: &VertexSet) -> Result<(), GraphError> {
        for &v in x {
            if !self.contains(v) {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        Ok(())
    }

    /// Connected components of `G - removed`, as a partition ordered by
    /// smallest member. Each block is grown by breadth-first search from the
    /// smallest unvisited id.
    pub fn components(&self, removed: &VertexSet) -> Result<Vec<VertexSet>, GraphError> {
        self.check_members(removed)?;
        let allowed: VertexSet = self.vertices().filter(|v| !removed.contains(v)).collect();
        Ok(self.components_of_subset(&allowed))
    }

    /// Components of the subgraph induced on `allowed`, ordered by smallest
    /// member. Callers guarantee `allowed ⊆ V`.
    pub(crate) fn components_of_subset(&self, allowed: &VertexSet) -> Vec<VertexSet> {
        let mut blocks = Vec::new();
        let mut visited = VertexSet::new();
        for &start in allowed {
            if visited.contains(&start) {
                continue;
            }
            let block = self.bfs_block(start, allowed);
            visited.extend(block.iter().copied());
            blocks.push(block);
        }
        blocks
    }

    /// The component of `G - removed` containing `v`. `v` must not lie in
    /// `removed`.
    pub(crate) fn component_containing(&self, v: Vertex, removed: &VertexSet) -> VertexSet {
        debug_assert!(!removed.contains(&v));
        let allowed: VertexSet = self.vertices().filter(|u| !removed.contains(u)).collect();
        self.bfs_block(v, &allowed)
    }

    fn bfs_block(&self, start: Vertex, allowed: &VertexSet) -> VertexSet {
        let mut block = VertexSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[&v] {
                if allowed.contains(&w) && block.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        block
    }

    /// Shortest path from `from` to any member of `targets`, moving only
    /// through `allowed`. Neighbors are explored in ascending id order, so
    /// the result is deterministic. Returns the full path including both
    /// endpoints.
    pub(crate) fn shortest_path(
        &self,
        from: Vertex,
        targets: &VertexSet,
        allowed: &VertexSet,
    ) -> Option<Vec<Vertex>> {
        if !allowed.contains(&from) {
            return None;
        }
        if targets.contains(&from) {
            return Some(vec![from]);
        }
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        let mut seen = VertexSet::from([from]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[&v] {
                if !allowed.contains(&w) || !seen.insert(w) {
                    continue;
                }
                parent.insert(w, v);
                if targets.contains(&w) {
                    let mut path = vec![w];
                    let mut cur = w;
                    while let Some(&p) = parent.get(&cur) {
                        path.push(p);
                        cur = p;
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
        None
    }

    /// First non-adjacent pair inside `x` in ascending order, if any.
    pub(crate) fn non_adjacent_pair(&self, x: &VertexSet) -> Result<Option<(Vertex, Vertex)>, GraphError> {
        self.check_members(x)?;
        let members: Vec<Vertex> = x.iter().copied().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !self.has_edge(u, v) {
                    return Ok(Some((u, v)));
                }
            }
        }
        Ok(None)
    }

    /// True iff every two distinct members of `x` are adjacent. Empty sets
    /// and singletons count as cliques.
    pub fn is_clique(&self, x: &VertexSet) -> Result<bool, GraphError> {
        Ok(self.non_adjacent_pair(x)?.is_none())
    }

    /// True iff `x` is nonempty and induces a connected subgraph.
    pub fn is_connected_set(&self, x: &VertexSet) -> Result<bool, GraphError> {
        self.check_members(x)?;
        match x.first() {
            None => Ok(false),
            Some(&start) => Ok(self.bfs_block(start, x).len() == x.len()),
        }
    }

    /// True iff the graph is nonempty and has a single component.
    pub fn is_connected(&self) -> bool {
        match self.min_vertex() {
            None => false,
            Some(start) => {
                let all = self.vertex_set();
                self.bfs_block(start, &all).len() == all.len()
            }
        }
    }

    /// True iff the connected set `c` is attached to `a`, i.e. `a ⊆ N(c)`.
    /// `c` and `a` must be disjoint and `c` connected.
    pub fn is_attached(&self, c: &VertexSet, a: &VertexSet) -> Result<bool, GraphError> {
        self.check_members(a)?;
        if let Some(&v) = c.intersection(a).next() {
            return Err(GraphError::OverlappingSets(v));
        }
        if !self.is_connected_set(c)? {
            return Err(if c.is_empty() {
                GraphError::EmptySet
            } else {
                GraphError::SetNotConnected
            });
        }
        let n = self.set_neighborhood(c)?;
        Ok(a.is_subset(&n))
    }

    /// The subgraph induced on `x`.
    pub fn induced(&self, x: &VertexSet) -> Result<Graph, GraphError> {
        self.check_members(x)?;
        let adj = x
            .iter()
            .map(|&v| (v, self.adj[&v].intersection(x).copied().collect()))
            .collect();
        Ok(Graph { adj })
    }
}

/// A side `(C, S)`: a connected component `C` fully attached to the clique
/// `S = N(C)`. Sides are validated at construction and immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Side {
    component: VertexSet,
    attachment: VertexSet,
}

impl Side {
    pub fn new(g: &Graph, component: VertexSet, attachment: VertexSet) -> Result<Self, GraphError> {
        if component.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if !g.is_connected_set(&component)? {
            return Err(GraphError::SetNotConnected);
        }
        if g.set_neighborhood(&component)? != attachment {
            return Err(GraphError::AttachmentMismatch);
        }
        if let Some((u, v)) = g.non_adjacent_pair(&attachment)? {
            return Err(GraphError::NotAClique(u, v));
        }
        Ok(Side { component, attachment })
    }

    /// Builds the side of `component`, computing `S = N(C)` from the graph.
    pub fn from_component(g: &Graph, component: VertexSet) -> Result<Self, GraphError> {
        let attachment = g.set_neighborhood(&component)?;
        Self::new(g, component, attachment)
    }

    pub fn component(&self) -> &VertexSet {
        &self.component
    }

    pub fn attachment(&self) -> &VertexSet {
        &self.attachment
    }
}

/// The side order: `(C, S) ⪯ (C', S')` iff `C ⊆ C'`.
pub fn side_leq(lhs: &Side, rhs: &Side) -> bool {
    lhs.component.is_subset(&rhs.component)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(items: impl IntoIterator<Item = Vertex>) -> VertexSet {
        items.into_iter().collect()
    }

    /// Truncated h-obstruction: dominators 0 and 1 over the clique
    /// `{2, ..., k+1}`.
    fn h_trunc(k: u32) -> Graph {
        let mut edges = Vec::new();
        for c in 2..(k + 2) {
            edges.push((0, c));
            edges.push((1, c));
            for d in (c + 1)..(k + 2) {
                edges.push((c, d));
            }
        }
        Graph::new(0..(k + 2), edges).unwrap()
    }

    #[test]
    fn neighborhood_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(*k3.neighborhood(0).unwrap(), vs([1, 2]));

        let p4 = Graph::path(4);
        assert_eq!(*p4.neighborhood(1).unwrap(), vs([0, 2]));

        let h = h_trunc(5);
        assert_eq!(*h.neighborhood(0).unwrap(), vs([2, 3, 4, 5, 6]));

        assert_eq!(p4.neighborhood(9), Err(GraphError::UnknownVertex(9)));
    }

    #[test]
    fn set_neighborhood_examples() {
        let p4 = Graph::path(4);
        assert_eq!(p4.set_neighborhood(&vs([0])).unwrap(), vs([1]));
        assert_eq!(p4.set_neighborhood(&vs([1, 2])).unwrap(), vs([0, 3]));

        let k4 = Graph::complete(4);
        assert_eq!(k4.set_neighborhood(&vs([0, 1])).unwrap(), vs([2, 3]));
    }

    #[test]
    fn components_examples() {
        let p4 = Graph::path(4);
        assert_eq!(
            p4.components(&vs([1])).unwrap(),
            vec![vs([0]), vs([2, 3])]
        );

        let k4 = Graph::complete(4);
        assert_eq!(k4.components(&vs([])).unwrap(), vec![vs([0, 1, 2, 3])]);

        let h = h_trunc(3);
        assert_eq!(
            h.components(&vs([2, 3, 4])).unwrap(),
            vec![vs([0]), vs([1])]
        );
    }

    #[test]
    fn components_partition_and_singleton_neighborhood() {
        let g = Graph::new(0..7, [(0, 1), (1, 2), (3, 4), (5, 6), (0, 2)]).unwrap();
        for removed in [vs([]), vs([1]), vs([0, 4])] {
            let comps = g.components(&removed).unwrap();
            let mut union = VertexSet::new();
            for c in &comps {
                assert!(g.is_connected_set(c).unwrap());
                assert!(union.is_disjoint(c));
                union.extend(c.iter().copied());
            }
            let expected: VertexSet = g.vertices().filter(|v| !removed.contains(v)).collect();
            assert_eq!(union, expected);
        }
        for v in g.vertices() {
            assert_eq!(
                g.set_neighborhood(&vs([v])).unwrap(),
                *g.neighborhood(v).unwrap()
            );
        }
    }

    #[test]
    fn clique_predicate() {
        let k4 = Graph::complete(4);
        assert!(k4.is_clique(&vs([0, 1, 2])).unwrap());

        let p3 = Graph::path(3);
        assert!(!p3.is_clique(&vs([0, 2])).unwrap());
        assert!(p3.is_clique(&vs([])).unwrap());
        assert!(p3.is_clique(&vs([1])).unwrap());
    }

    #[test]
    fn attachment_examples() {
        let p4 = Graph::path(4);
        assert!(p4.is_attached(&vs([2, 3]), &vs([1])).unwrap());
        assert!(!p4.is_attached(&vs([3]), &vs([1])).unwrap());

        let h = h_trunc(3);
        assert!(h.is_attached(&vs([0]), &vs([2, 3, 4])).unwrap());

        assert_eq!(
            p4.is_attached(&vs([1, 3]), &vs([0])),
            Err(GraphError::SetNotConnected)
        );
        assert_eq!(
            p4.is_attached(&vs([1]), &vs([1])),
            Err(GraphError::OverlappingSets(1))
        );
    }

    #[test]
    fn side_order() {
        let p4 = Graph::path(4);
        let s1 = Side::from_component(&p4, vs([3])).unwrap();
        let s2 = Side::from_component(&p4, vs([2, 3])).unwrap();
        assert!(side_leq(&s1, &s1));
        assert!(side_leq(&s1, &s2));
        assert!(!side_leq(&s2, &s1));

        let left = Side::from_component(&p4, vs([0])).unwrap();
        assert!(!side_leq(&left, &s1));
        assert!(!side_leq(&s1, &left));
    }

    #[test]
    fn side_validation() {
        let p4 = Graph::path(4);
        assert_eq!(
            Side::new(&p4, vs([2, 3]), vs([0])),
            Err(GraphError::AttachmentMismatch)
        );
        assert_eq!(Side::new(&p4, vs([]), vs([])), Err(GraphError::EmptySet));

        // Attachment of {1, 3} in the path would be {0, 2}, which is not a
        // clique, so the component {2} with a fabricated attachment fails.
        let c4 = Graph::cycle(4);
        assert_eq!(
            Side::from_component(&c4, vs([0])),
            Err(GraphError::NotAClique(1, 3))
        );
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert_eq!(Graph::from_edges([(0, 0)]), Err(GraphError::LoopEdge(0)));
        assert_eq!(
            Graph::new([0, 1], [(0, 2)]),
            Err(GraphError::UnknownVertex(2))
        );
    }
}
