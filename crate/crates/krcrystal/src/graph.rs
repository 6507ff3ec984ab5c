//! Finite crystal graphs and their generation by closure under operators.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::hash::Hash;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::signature::Dir;
use crate::CrystalError;

/// Default vertex cap for generation.
pub const DEFAULT_CAP: usize = 200_000;

/// Current version of the JSON graph document.
pub const GRAPH_FORMAT_VERSION: u32 = 1;

/// A finite crystal graph with colored `e`/`f` edges.
///
/// Vertices are stored in a canonical order; `f[v][c]` and `e[v][c]` are the
/// targets of the operators of color `colors[c]`.
#[derive(Clone, Debug)]
pub struct CrystalGraph<P> {
    pub colors: Vec<usize>,
    pub vertices: Vec<P>,
    pub weights: Vec<Vec<i32>>,
    pub f: Vec<Vec<Option<usize>>>,
    pub e: Vec<Vec<Option<usize>>>,
    index: HashMap<P, usize>,
    eps: Vec<Vec<u32>>,
    phi: Vec<Vec<u32>>,
}

impl<P: PartialEq> PartialEq for CrystalGraph<P> {
    fn eq(&self, other: &Self) -> bool {
        self.colors == other.colors
            && self.vertices == other.vertices
            && self.weights == other.weights
            && self.f == other.f
            && self.e == other.e
    }
}

impl<P: Eq> Eq for CrystalGraph<P> {}

impl<P: Clone + Eq + Hash> CrystalGraph<P> {
    /// Builds a graph from explicit `f` edges; `e` is derived as the inverse.
    pub fn from_f_edges(
        colors: Vec<usize>,
        vertices: Vec<P>,
        weights: Vec<Vec<i32>>,
        f: Vec<Vec<Option<usize>>>,
    ) -> Result<Self, CrystalError> {
        let nv = vertices.len();
        let nc = colors.len();
        let mut e = vec![vec![None; nc]; nv];
        for v in 0..nv {
            for c in 0..nc {
                if let Some(w) = f[v][c] {
                    if e[w][c].is_some() {
                        return Err(CrystalError::Inconsistent(format!(
                            "two {}-edges enter vertex {w}",
                            colors[c]
                        )));
                    }
                    e[w][c] = Some(v);
                }
            }
        }
        let mut index = HashMap::with_capacity(nv);
        for (k, p) in vertices.iter().enumerate() {
            if index.insert(p.clone(), k).is_some() {
                return Err(CrystalError::Inconsistent(
                    "duplicate vertex payload".into(),
                ));
            }
        }
        let mut g = CrystalGraph {
            colors,
            vertices,
            weights,
            f,
            e,
            index,
            eps: vec![],
            phi: vec![],
        };
        g.compute_strings()?;
        Ok(g)
    }

    fn compute_strings(&mut self) -> Result<(), CrystalError> {
        let nv = self.vertices.len();
        let nc = self.colors.len();
        self.eps = vec![vec![0; nc]; nv];
        self.phi = vec![vec![0; nc]; nv];
        for c in 0..nc {
            // Walk each string from its head, the vertex with no raising edge.
            for v in 0..nv {
                if self.e[v][c].is_some() {
                    continue;
                }
                let mut string = vec![v];
                let mut cur = v;
                while let Some(w) = self.f[cur][c] {
                    string.push(w);
                    cur = w;
                    if string.len() > nv {
                        return Err(CrystalError::Inconsistent(format!(
                            "color {} has a cycle",
                            self.colors[c]
                        )));
                    }
                }
                let len = string.len() as u32;
                for (k, &w) in string.iter().enumerate() {
                    self.eps[w][c] = k as u32;
                    self.phi[w][c] = len - 1 - k as u32;
                }
            }
            // Any vertex not reached lies on a cycle.
            for v in 0..nv {
                let mut cur = v;
                let mut steps = 0;
                while let Some(w) = self.e[cur][c] {
                    cur = w;
                    steps += 1;
                    if steps > nv {
                        return Err(CrystalError::Inconsistent(format!(
                            "color {} has a cycle",
                            self.colors[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, p: &P) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Column index of a color label.
    pub fn color_index(&self, i: usize) -> Option<usize> {
        self.colors.iter().position(|&c| c == i)
    }

    fn ci(&self, i: usize) -> usize {
        self.color_index(i)
            .unwrap_or_else(|| panic!("color {i} is not in this graph"))
    }

    pub fn f_op(&self, v: usize, i: usize) -> Option<usize> {
        self.f[v][self.ci(i)]
    }

    pub fn e_op(&self, v: usize, i: usize) -> Option<usize> {
        self.e[v][self.ci(i)]
    }

    pub fn op(&self, v: usize, i: usize, dir: Dir) -> Option<usize> {
        match dir {
            Dir::E => self.e_op(v, i),
            Dir::F => self.f_op(v, i),
        }
    }

    /// `(ε_i(v), φ_i(v))` from string lengths.
    pub fn eps_phi(&self, v: usize, i: usize) -> (u32, u32) {
        let c = self.ci(i);
        (self.eps[v][c], self.phi[v][c])
    }

    /// `(ε_i, φ_i)` of a vertex given by payload.
    pub fn eps_phi_of(&self, p: &P, i: usize) -> Result<(u32, u32), CrystalError> {
        let v = self.index_of(p).ok_or(CrystalError::UnknownVertex)?;
        Ok(self.eps_phi(v, i))
    }

    /// Vertices killed by every raising operator of the given colors.
    pub fn highest_weight_vertices(&self, colors: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| colors.iter().all(|&i| self.e_op(v, i).is_none()))
            .collect()
    }

    /// Canonical raising path to the highest weight vertex of the component of
    /// `v` in the subgraph of `colors`: always apply the smallest available color.
    /// Returns the colors applied, in order, and the endpoint.
    pub fn raise_to_highest(&self, v: usize, colors: &[usize]) -> (Vec<usize>, usize) {
        let mut path = Vec::new();
        let mut cur = v;
        loop {
            let next = colors
                .iter()
                .find_map(|&i| self.e_op(cur, i).map(|w| (i, w)));
            match next {
                Some((i, w)) => {
                    path.push(i);
                    cur = w;
                }
                None => return (path, cur),
            }
        }
    }

    /// Applies `f` along the reverse of a raising path.
    pub fn lower_along(&self, v: usize, raising_path: &[usize]) -> Option<usize> {
        let mut cur = v;
        for &i in raising_path.iter().rev() {
            cur = self.f_op(cur, i)?;
        }
        Some(cur)
    }

    /// Connected components of the subgraph spanned by `colors`; returns the
    /// component id of each vertex (ids follow the order of first vertices).
    pub fn components(&self, colors: &[usize]) -> Vec<usize> {
        let cols: Vec<usize> = colors.iter().map(|&i| self.ci(i)).collect();
        let mut comp = vec![usize::MAX; self.len()];
        let mut next = 0;
        for s in 0..self.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = next;
            while let Some(v) = stack.pop() {
                for &c in &cols {
                    for w in [self.f[v][c], self.e[v][c]].into_iter().flatten() {
                        if comp[w] == usize::MAX {
                            comp[w] = next;
                            stack.push(w);
                        }
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Number of edges of each color.
    pub fn edge_count(&self) -> usize {
        self.f
            .iter()
            .map(|row| row.iter().filter(|x| x.is_some()).count())
            .sum()
    }

    /// All edges `(from, color, to)` in vertex order.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            for (c, t) in self.f[v].iter().enumerate() {
                if let Some(w) = t {
                    out.push((v, self.colors[c], *w));
                }
            }
        }
        out
    }
}

impl<P: Clone + Eq + Hash + Ord> CrystalGraph<P> {
    /// Closure of `seed` under all `e_i` and `f_i` for the given colors.
    ///
    /// Vertices are ordered by BFS layer and, within a layer, by payload order.
    /// `step` must be deterministic; it returns `None` for the zero element.
    pub fn generate<S, W>(
        seed: P,
        colors: &[usize],
        step: S,
        weight: W,
        cap: usize,
    ) -> Result<Self, CrystalError>
    where
        S: Fn(&P, usize, Dir) -> Option<P>,
        W: Fn(&P) -> Vec<i32>,
    {
        let mut order: Vec<P> = vec![seed.clone()];
        let mut index: HashMap<P, usize> = HashMap::new();
        index.insert(seed, 0);
        let mut layer_start = 0;
        while layer_start < order.len() {
            let layer_end = order.len();
            let mut next: BTreeSet<P> = BTreeSet::new();
            for k in layer_start..layer_end {
                for &i in colors {
                    for dir in [Dir::F, Dir::E] {
                        if let Some(q) = step(&order[k], i, dir) {
                            if !index.contains_key(&q) {
                                next.insert(q);
                            }
                        }
                    }
                }
            }
            for q in next {
                if order.len() >= cap {
                    return Err(CrystalError::CapExceeded(cap));
                }
                index.insert(q.clone(), order.len());
                order.push(q);
            }
            layer_start = layer_end;
        }
        let nc = colors.len();
        let mut f = vec![vec![None; nc]; order.len()];
        for (v, p) in order.iter().enumerate() {
            for (c, &i) in colors.iter().enumerate() {
                if let Some(q) = step(p, i, Dir::F) {
                    let w = index[&q];
                    if step(&q, i, Dir::E).as_ref() != Some(p) {
                        return Err(CrystalError::Inconsistent(format!(
                            "e_{i} f_{i} is not the identity"
                        )));
                    }
                    f[v][c] = Some(w);
                }
            }
        }
        let weights = order.iter().map(&weight).collect();
        let g = CrystalGraph::from_f_edges(colors.to_vec(), order, weights, f)?;
        for v in 0..g.len() {
            for (c, &i) in colors.iter().enumerate() {
                let has_e = step(&g.vertices[v], i, Dir::E).is_some();
                if has_e != g.e[v][c].is_some() {
                    return Err(CrystalError::Inconsistent(format!(
                        "f_{i} e_{i} is not the identity"
                    )));
                }
            }
        }
        Ok(g)
    }
}

/// Pen colors for edge colors `0, 1, 2, …` in DOT output (cycled).
pub const DOT_PENS: [&str; 8] = [
    "black",
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "deeppink",
];

/// Graphviz rendering with one pen color per edge color; color-0 edges are
/// dashed. Output depends only on the vertex order and the labels.
pub fn dot_with<P, L>(g: &CrystalGraph<P>, name: &str, label: L) -> String
where
    P: Clone + Eq + Hash,
    L: Fn(&P) -> String,
{
    render_dot(g, name, label, None)
}

/// As [`dot_with`], with the vertices of equal layer placed in one row;
/// rows are emitted in increasing layer order.
pub fn dot_layered<P, L>(g: &CrystalGraph<P>, name: &str, label: L, layers: &[usize]) -> String
where
    P: Clone + Eq + Hash,
    L: Fn(&P) -> String,
{
    render_dot(g, name, label, Some(layers))
}

fn render_dot<P, L>(g: &CrystalGraph<P>, name: &str, label: L, layers: Option<&[usize]>) -> String
where
    P: Clone + Eq + Hash,
    L: Fn(&P) -> String,
{
    let mut out = format!("digraph \"{name}\" {{\n  node [shape=box, fontname=\"monospace\"];\n");
    for (v, p) in g.vertices.iter().enumerate() {
        out.push_str(&format!(
            "  v{v} [label=\"{}\"];\n",
            label(p).replace('"', "\\\"")
        ));
    }
    if let Some(layers) = layers {
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &l) in layers.iter().enumerate().take(g.len()) {
            rows.entry(l).or_default().push(v);
        }
        for vs in rows.values() {
            let ids: Vec<String> = vs.iter().map(|v| format!("v{v}")).collect();
            out.push_str(&format!("  {{ rank=same; {} }}\n", ids.join("; ")));
        }
    }
    for (v, i, w) in g.edges() {
        let pen = DOT_PENS[i % DOT_PENS.len()];
        let style = if i == 0 { ", style=dashed" } else { "" };
        out.push_str(&format!(
            "  v{v} -> v{w} [label=\"{i}\", color={pen}, fontcolor={pen}{style}];\n"
        ));
    }
    out.push_str("}\n");
    out
}

impl<P: Clone + Eq + Hash> CrystalGraph<P> {
    /// Distance from the vertices without raising edges of the given colors,
    /// following lowering edges of those colors (breadth first). Vertices not
    /// reached get the layer `usize::MAX`.
    pub fn layers(&self, colors: &[usize]) -> Vec<usize> {
        let mut layer = vec![usize::MAX; self.len()];
        let mut queue = std::collections::VecDeque::new();
        for v in 0..self.len() {
            if colors.iter().all(|&i| self.e_op(v, i).is_none()) {
                layer[v] = 0;
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &i in colors {
                if let Some(w) = self.f_op(v, i) {
                    if layer[w] == usize::MAX {
                        layer[w] = layer[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        layer
    }
}

/// Serialized form of a crystal graph.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GraphDocument<P> {
    pub version: u32,
    pub colors: Vec<usize>,
    pub vertices: Vec<P>,
    pub weights: Vec<Vec<i32>>,
    /// `(from, color, to)` for every `f` edge.
    pub edges: Vec<(usize, usize, usize)>,
}

impl<P: Clone + Eq + Hash + Serialize + DeserializeOwned> CrystalGraph<P> {
    pub fn to_document(&self) -> GraphDocument<P> {
        GraphDocument {
            version: GRAPH_FORMAT_VERSION,
            colors: self.colors.clone(),
            vertices: self.vertices.clone(),
            weights: self.weights.clone(),
            edges: self.edges(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("graph documents always serialize")
    }

    pub fn from_document(doc: GraphDocument<P>) -> Result<Self, CrystalError> {
        if doc.version != GRAPH_FORMAT_VERSION {
            return Err(CrystalError::Format(format!(
                "unsupported graph version {}",
                doc.version
            )));
        }
        let nc = doc.colors.len();
        let mut f = vec![vec![None; nc]; doc.vertices.len()];
        for (v, i, w) in doc.edges {
            let c = doc
                .colors
                .iter()
                .position(|&x| x == i)
                .ok_or_else(|| CrystalError::Format(format!("edge uses unknown color {i}")))?;
            if v >= f.len() || w >= f.len() {
                return Err(CrystalError::Format("edge endpoint out of range".into()));
            }
            f[v][c] = Some(w);
        }
        CrystalGraph::from_f_edges(doc.colors, doc.vertices, doc.weights, f)
    }

    pub fn from_json(s: &str) -> Result<Self, CrystalError> {
        let doc: GraphDocument<P> =
            serde_json::from_str(s).map_err(|e| CrystalError::Format(e.to_string()))?;
        Self::from_document(doc)
    }
}
