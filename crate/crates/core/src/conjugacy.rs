//! Conjugacy through cyclic sliding and sets of sliding circuits.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{BraidError, Result};
use crate::normal_form::{normal_form, LeftNormalForm};
use crate::simple::SimpleElement;
use crate::words::{ensure_same_strands, BraidWord};

pub const DEFAULT_MAX_VERTICES: usize = 100_000;

/// `τ^p(a_1) ∧ ∂(a_r)`, trivial when there are no factors.
pub fn preferred_prefix(x: &LeftNormalForm) -> SimpleElement {
    match (x.factors().first(), x.factors().last()) {
        (Some(first), Some(last)) => first.tau(x.inf()).meet(&last.right_complement()),
        _ => SimpleElement::identity(x.strands()),
    }
}

/// One cyclic slide: conjugation by the preferred prefix.
pub fn cyclic_slide(x: &LeftNormalForm) -> (LeftNormalForm, SimpleElement) {
    let p = preferred_prefix(x);
    (x.conjugate_by_simple(&p), p)
}

/// Result of sliding until a normal form repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideOutcome {
    /// First element of the trajectory that lies on the circuit.
    pub element: LeftNormalForm,
    /// `c` with `element = c^{-1} x c`.
    pub conjugator: LeftNormalForm,
    pub period: usize,
}

pub fn slide_nf_to_circuit(x: &LeftNormalForm) -> SlideOutcome {
    let mut seen: HashMap<LeftNormalForm, usize> = HashMap::new();
    let mut trajectory = vec![x.clone()];
    let mut prefixes = Vec::new();
    seen.insert(x.clone(), 0);
    loop {
        let (next, p) = cyclic_slide(trajectory.last().expect("nonempty"));
        prefixes.push(p);
        if let Some(&k) = seen.get(&next) {
            let mut conjugator = LeftNormalForm::identity(x.strands());
            for p in &prefixes[..k] {
                conjugator.mul_simple_right(p);
            }
            return SlideOutcome {
                element: trajectory[k].clone(),
                conjugator,
                period: trajectory.len() - k,
            };
        }
        seen.insert(next.clone(), trajectory.len());
        trajectory.push(next);
    }
}

pub fn slide_to_circuit(x: &BraidWord) -> SlideOutcome {
    slide_nf_to_circuit(&normal_form(x))
}

/// Whether `z` returns to itself under repeated sliding.
pub fn lies_on_circuit(z: &LeftNormalForm) -> bool {
    let mut seen = BTreeSet::new();
    let mut cur = z.clone();
    loop {
        cur = cyclic_slide(&cur).0;
        if &cur == z {
            return true;
        }
        if !seen.insert(cur.clone()) {
            return false;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitEdge {
    pub from: usize,
    pub to: usize,
    /// Simple `s` with `vertices[to] = s^{-1} · vertices[from] · s`.
    pub conjugator: SimpleElement,
}

/// The set of sliding circuits of a conjugacy class, with the simple
/// conjugations between its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlidingCircuitGraph {
    pub vertices: Vec<LeftNormalForm>,
    pub edges: Vec<CircuitEdge>,
    /// Index of the circuit element reached by sliding the input.
    pub base: usize,
    /// `c` with `vertices[base] = c^{-1} x c`.
    pub base_conjugator: LeftNormalForm,
}

impl SlidingCircuitGraph {
    pub fn index_of(&self, v: &LeftNormalForm) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// For each vertex `v`, a product `P_v` of edge labels along a shortest path
    /// from the base, so that `v = P_v^{-1} · base · P_v`. Also returns which
    /// edges form that spanning tree.
    fn spanning_tree(&self) -> (Vec<LeftNormalForm>, Vec<bool>) {
        let n = self.base_conjugator.strands();
        let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for (k, e) in self.edges.iter().enumerate() {
            out_edges[e.from].push(k);
        }
        let mut path: Vec<Option<LeftNormalForm>> = vec![None; self.vertices.len()];
        let mut in_tree = vec![false; self.edges.len()];
        path[self.base] = Some(LeftNormalForm::identity(n));
        let mut queue = VecDeque::from([self.base]);
        while let Some(u) = queue.pop_front() {
            for &k in &out_edges[u] {
                let e = &self.edges[k];
                if path[e.to].is_none() {
                    let mut p = path[u].clone().expect("visited");
                    p.mul_simple_right(&e.conjugator);
                    path[e.to] = Some(p);
                    in_tree[k] = true;
                    queue.push_back(e.to);
                }
            }
        }
        let paths = path
            .into_iter()
            .map(|p| p.expect("graph is connected from its base"))
            .collect();
        (paths, in_tree)
    }
}

pub fn sliding_circuits_nf(x: &LeftNormalForm, max_vertices: usize) -> Result<SlidingCircuitGraph> {
    let n = x.strands();
    let start = slide_nf_to_circuit(x);
    let simples: Vec<SimpleElement> = SimpleElement::all(n)
        .into_iter()
        .filter(|s| !s.is_identity())
        .collect();
    // Circuit elements all share the same infimum and supremum, so a candidate
    // with different values is rejected before the slower sliding test.
    let (inf, sup) = (start.element.inf(), start.element.sup());

    let mut vertices = vec![start.element.clone()];
    let mut index: HashMap<LeftNormalForm, usize> = HashMap::from([(start.element.clone(), 0)]);
    let mut edges: Vec<(usize, usize, SimpleElement)> = Vec::new();
    let mut next = 0;
    while next < vertices.len() {
        let u = vertices[next].clone();
        for s in &simples {
            let v = u.conjugate_by_simple(s);
            let to = match index.get(&v) {
                Some(&k) => k,
                None => {
                    if v.inf() != inf || v.sup() != sup || !lies_on_circuit(&v) {
                        continue;
                    }
                    if vertices.len() >= max_vertices {
                        return Err(BraidError::VertexCapExceeded { cap: max_vertices });
                    }
                    index.insert(v.clone(), vertices.len());
                    vertices.push(v);
                    vertices.len() - 1
                }
            };
            edges.push((next, to, s.clone()));
        }
        next += 1;
    }

    // Canonical order for vertices and edges.
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
    let mut rank = vec![0; vertices.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let sorted_vertices: Vec<LeftNormalForm> = order.iter().map(|&k| vertices[k].clone()).collect();
    let mut sorted_edges: Vec<CircuitEdge> = edges
        .into_iter()
        .map(|(from, to, conjugator)| CircuitEdge {
            from: rank[from],
            to: rank[to],
            conjugator,
        })
        .collect();
    sorted_edges.sort_by(|a, b| (a.from, a.to, &a.conjugator).cmp(&(b.from, b.to, &b.conjugator)));
    Ok(SlidingCircuitGraph {
        vertices: sorted_vertices,
        edges: sorted_edges,
        base: rank[0],
        base_conjugator: start.conjugator,
    })
}

pub fn sliding_circuits(x: &BraidWord, max_vertices: usize) -> Result<SlidingCircuitGraph> {
    sliding_circuits_nf(&normal_form(x), max_vertices)
}

/// A conjugator `c` with `c^{-1} x c = y`, or `None` when `x` and `y` are not conjugate.
pub fn are_conjugate_nf(
    x: &LeftNormalForm,
    y: &LeftNormalForm,
    max_vertices: usize,
) -> Result<Option<LeftNormalForm>> {
    if x.strands() != y.strands() {
        return Err(BraidError::StrandMismatch {
            left: x.strands(),
            right: y.strands(),
        });
    }
    let graph = sliding_circuits_nf(x, max_vertices)?;
    let target = slide_nf_to_circuit(y);
    let Some(k) = graph.index_of(&target.element) else {
        return Ok(None);
    };
    let (paths, _) = graph.spanning_tree();
    // ỹ = P^{-1} c0^{-1} x c0 P and ỹ = d^{-1} y d, so y = (c0 P d^{-1})^{-1} x (c0 P d^{-1})
    let c = graph
        .base_conjugator
        .product(&paths[k])?
        .product(&target.conjugator.inverse())?;
    if &x.conjugate(&c)? != y {
        return Err(BraidError::Internal(
            "conjugator failed verification".into(),
        ));
    }
    Ok(Some(c))
}

pub fn are_conjugate(x: &BraidWord, y: &BraidWord, max_vertices: usize) -> Result<Option<BraidWord>> {
    ensure_same_strands(x, y)?;
    Ok(are_conjugate_nf(&normal_form(x), &normal_form(y), max_vertices)?.map(|c| c.to_word()))
}

/// Elements commuting with `x`, one for each edge of the circuit graph outside
/// a spanning tree, transported back to `x`. Verified and deduplicated.
pub fn centralizer_generators_nf(
    x: &LeftNormalForm,
    max_vertices: usize,
) -> Result<Vec<LeftNormalForm>> {
    let graph = sliding_circuits_nf(x, max_vertices)?;
    let (paths, in_tree) = graph.spanning_tree();
    let c0 = &graph.base_conjugator;
    let c0_inv = c0.inverse();
    let mut found = BTreeSet::new();
    for (e, tree) in graph.edges.iter().zip(in_tree) {
        if tree {
            continue;
        }
        let mut loop_elt = paths[e.from].clone();
        loop_elt.mul_simple_right(&e.conjugator);
        let loop_elt = loop_elt.product(&paths[e.to].inverse())?;
        let g = c0.product(&loop_elt)?.product(&c0_inv)?;
        if g.is_identity() {
            continue;
        }
        if &x.conjugate(&g)? != x {
            return Err(BraidError::Internal(
                "centralizer element failed verification".into(),
            ));
        }
        found.insert(g);
    }
    Ok(found.into_iter().collect())
}

pub fn centralizer_generators(x: &BraidWord, max_vertices: usize) -> Result<Vec<BraidWord>> {
    Ok(centralizer_generators_nf(&normal_form(x), max_vertices)?
        .into_iter()
        .map(|g| g.to_word())
        .collect())
}
