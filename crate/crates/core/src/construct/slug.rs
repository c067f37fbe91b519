//! Injective interval covers from simple construction sequences.
//!
//! Every template is a slug: a spline path whose spline vertices carry
//! leaves, the leaves at one spline vertex inducing a linear forest. Each
//! host vertex `v` owns one spline vertex `sigma(v)`. Each stackable clique
//! has a reserved end, which is either a spline end or a leaf of degree < 2
//! among its sibling leaves. Stacking a vertex consumes the end of its base
//! and reserves ends for the k new cliques.
//!
//! The owners of a slug are pairwise non-adjacent in the full k-tree, so all
//! copies of a new vertex land in different slugs and the cover is injective.

use std::collections::{HashMap, VecDeque};

use crate::classes::TemplateClass;
use crate::cover::{identity_cover, verify_cover, Component, CoverCertificate, Mode};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::sequence::{lift_to_simple, validate_sequence, ConstructionSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum End {
    Side { slug: usize, front: bool },
    Leaf(usize),
}

#[derive(Debug, Clone)]
struct Node {
    image: usize,
    slug: usize,
    /// Spline vertex this leaf hangs from; `None` on the spline.
    at: Option<usize>,
    leaf_degree: usize,
}

#[derive(Debug, Default, Clone)]
struct Slug {
    spline: VecDeque<usize>,
    owners: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

struct Builder<'a> {
    g: &'a Graph,
    k: usize,
    nodes: Vec<Node>,
    slugs: Vec<Slug>,
    sigma: Vec<usize>,
    count: Vec<usize>,
    reserved: HashMap<Vec<usize>, End>,
    load: HashMap<End, usize>,
}

impl<'a> Builder<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.vertex_count();
        Builder {
            g,
            k,
            nodes: Vec::new(),
            slugs: Vec::new(),
            sigma: vec![usize::MAX; n],
            count: vec![0; n],
            reserved: HashMap::new(),
            load: HashMap::new(),
        }
    }

    fn singleton(&mut self, image: usize) -> usize {
        let slug = self.slugs.len();
        let id = self.nodes.len();
        self.nodes.push(Node { image, slug, at: None, leaf_degree: 0 });
        self.slugs.push(Slug { spline: VecDeque::from([id]), ..Slug::default() });
        self.count[image] += 1;
        id
    }

    fn own(&mut self, v: usize, node: usize) {
        self.sigma[v] = node;
        let s = self.nodes[node].slug;
        self.slugs[s].owners.push(v);
    }

    fn append(&mut self, image: usize, slug: usize, front: bool) -> usize {
        let id = self.nodes.len();
        self.nodes.push(Node { image, slug, at: None, leaf_degree: 0 });
        let sp = &mut self.slugs[slug].spline;
        let end = if front { *sp.front().unwrap() } else { *sp.back().unwrap() };
        if front {
            sp.push_front(id);
        } else {
            sp.push_back(id);
        }
        self.slugs[slug].edges.push((end, id));
        self.count[image] += 1;
        id
    }

    fn leaf(&mut self, image: usize, at: usize) -> usize {
        let slug = self.nodes[at].slug;
        let id = self.nodes.len();
        self.nodes.push(Node { image, slug, at: Some(at), leaf_degree: 0 });
        self.slugs[slug].edges.push((at, id));
        self.count[image] += 1;
        id
    }

    fn link_leaves(&mut self, a: usize, b: usize) {
        self.nodes[a].leaf_degree += 1;
        self.nodes[b].leaf_degree += 1;
        let s = self.nodes[a].slug;
        self.slugs[s].edges.push((a, b));
    }

    fn pad(&mut self, v: usize) {
        while self.count[v] < self.k {
            self.singleton(v);
        }
    }

    fn end_node(&self, e: End) -> usize {
        match e {
            End::Side { slug, front } => {
                let sp = &self.slugs[slug].spline;
                if front {
                    sp[0]
                } else {
                    sp[sp.len() - 1]
                }
            }
            End::Leaf(x) => x,
        }
    }

    fn free(&self, e: End) -> usize {
        let used = self.load.get(&e).copied().unwrap_or(0);
        let cap = match e {
            End::Side { .. } => 1,
            End::Leaf(x) => 2 - self.nodes[x].leaf_degree,
        };
        cap.saturating_sub(used)
    }

    fn valid_for(&self, e: End, clique: &[usize]) -> bool {
        match e {
            End::Side { slug, .. } => {
                clique.contains(&self.nodes[self.end_node(e)].image)
                    && !self.slugs[slug].owners.iter().any(|o| clique.contains(o))
            }
            End::Leaf(x) => {
                let at = self.nodes[x].at.unwrap();
                clique.contains(&self.nodes[x].image) && clique.contains(&self.nodes[at].image)
            }
        }
    }

    /// All ends with spare capacity, newest first.
    fn candidates(&self) -> Vec<End> {
        let mut out = Vec::new();
        for (id, node) in self.nodes.iter().enumerate().rev() {
            if node.at.is_some() {
                if node.leaf_degree < 2 {
                    out.push(End::Leaf(id));
                }
                continue;
            }
            let sp = &self.slugs[node.slug].spline;
            if sp[0] == id {
                out.push(End::Side { slug: node.slug, front: true });
            }
            if sp[sp.len() - 1] == id {
                out.push(End::Side { slug: node.slug, front: false });
            }
        }
        out.retain(|&e| self.free(e) > 0);
        out
    }

    fn reserve_all(&mut self, cliques: Vec<Vec<usize>>) -> Result<()> {
        let cands = self.candidates();
        let mut spare: Vec<usize> = cands.iter().map(|&e| self.free(e)).collect();
        let options: Vec<Vec<usize>> =
            cliques.iter().map(|c| (0..cands.len()).filter(|&i| self.valid_for(cands[i], c)).collect()).collect();
        let mut pick = vec![usize::MAX; cliques.len()];
        if !assign(&options, 0, &mut spare, &mut pick) {
            return Err(Error::InvalidSequence("no end available for a new clique".into()));
        }
        for (c, &i) in cliques.into_iter().zip(&pick) {
            *self.load.entry(cands[i]).or_insert(0) += 1;
            self.reserved.insert(c, cands[i]);
        }
        Ok(())
    }

    fn present(&self, a: usize, b: usize) -> bool {
        self.g.has_edge(a, b)
    }

    fn bootstrap(&mut self, init: &[usize]) -> Result<()> {
        let k = self.k;
        let c0 = init[0];
        let s0 = self.singleton(c0);
        self.own(c0, s0);
        for i in 1..k {
            let c = init[i];
            let s = self.singleton(c);
            self.own(c, s);
            for &p in &init[..i] {
                if self.present(c, p) {
                    self.leaf(c, self.sigma[p]);
                }
            }
        }
        let ck = init[k];
        let y0 = self.singleton(c0);
        let s = if self.present(ck, c0) {
            let slug = self.nodes[y0].slug;
            self.append(ck, slug, false)
        } else {
            self.singleton(ck)
        };
        self.own(ck, s);
        for &p in &init[1..k] {
            if self.present(ck, p) {
                self.leaf(ck, self.sigma[p]);
            }
        }
        for &v in init {
            self.pad(v);
        }
        let cliques = (0..=k).map(|skip| sorted_without(init, init[skip])).collect();
        self.reserve_all(cliques)
    }

    fn stack(&mut self, z: usize, base: &[usize]) -> Result<()> {
        let key = sorted(base.to_vec());
        let end = self
            .reserved
            .remove(&key)
            .ok_or_else(|| Error::InvalidSequence(format!("stacking {z} onto a clique that is not stackable")))?;
        *self.load.get_mut(&end).unwrap() -= 1;
        let mut handled: Vec<usize> = Vec::new();
        match end {
            End::Side { slug, front } => {
                let t = self.nodes[self.end_node(end)].image;
                let s = if self.present(z, t) { self.append(z, slug, front) } else { self.singleton(z) };
                self.own(z, s);
                handled.push(t);
            }
            End::Leaf(tau) => {
                let t = self.nodes[tau].image;
                let at = self.nodes[tau].at.unwrap();
                let v = self.nodes[at].image;
                let s = self.singleton(z);
                self.own(z, s);
                if self.present(z, v) {
                    let x = self.leaf(z, self.sigma[v]);
                    handled.push(v);
                    if self.present(z, t) {
                        self.link_leaves(x, tau);
                        handled.push(t);
                    }
                }
            }
        }
        let mut slugs_used: Vec<usize> = vec![self.nodes[self.sigma[z]].slug];
        for &q in base {
            if handled.contains(&q) || !self.present(z, q) {
                continue;
            }
            let x = self.leaf(z, self.sigma[q]);
            slugs_used.push(self.nodes[x].slug);
        }
        slugs_used.sort_unstable();
        if slugs_used.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSequence(format!("two copies of {z} fell into one slug")));
        }
        self.pad(z);
        let cliques = base
            .iter()
            .map(|&q| {
                let mut c = sorted_without(base, q);
                c.push(z);
                sorted(c)
            })
            .collect();
        self.reserve_all(cliques)
    }

    fn certificate(&self) -> CoverCertificate {
        let mut cert = CoverCertificate::new(self.g.vertex_count());
        for slug in &self.slugs {
            if slug.edges.is_empty() {
                continue;
            }
            let mut ids: Vec<usize> = slug.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            ids.sort_unstable();
            ids.dedup();
            let local = |x: usize| ids.binary_search(&x).unwrap();
            let t = Graph::from_edges_lossy(ids.len(), slug.edges.iter().map(|&(a, b)| (local(a), local(b))));
            cert.components.push(Component::new(t, ids.iter().map(|&x| self.nodes[x].image).collect()));
        }
        cert
    }
}

fn assign(options: &[Vec<usize>], i: usize, spare: &mut [usize], pick: &mut [usize]) -> bool {
    if i == options.len() {
        return true;
    }
    for &c in &options[i] {
        if spare[c] > 0 {
            spare[c] -= 1;
            pick[i] = c;
            if assign(options, i + 1, spare, pick) {
                return true;
            }
            spare[c] += 1;
        }
    }
    false
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn sorted_without(vs: &[usize], x: usize) -> Vec<usize> {
    sorted(vs.iter().copied().filter(|&v| v != x).collect())
}

/// Builds an injective cover of `g` by slugs with at most
/// `max(3, seq.width)` copies of each vertex. Sequences of width below 3
/// are lifted first; `seq` must realize `g` exactly.
pub fn slug_cover(g: &Graph, seq: &ConstructionSequence) -> Result<CoverCertificate> {
    let check = validate_sequence(seq, false);
    if let Some(v) = check.violations.first() {
        return Err(Error::InvalidSequence(v.to_string()));
    }
    if check.realized.vertex_count() != g.vertex_count() || check.realized.edges() != g.edges() {
        return Err(Error::InvalidSequence("sequence does not realize the graph".into()));
    }
    if g.vertex_count() <= 3 {
        return Ok(identity_cover(g));
    }
    let mut seq = seq.clone();
    while seq.width < 3 {
        seq = lift_to_simple(&seq)?;
    }
    let check = validate_sequence(&seq, true);
    if let Some(v) = check.violations.first() {
        return Err(Error::InvalidSequence(format!("slug covers need a simple sequence: {v}")));
    }
    let mut b = Builder::new(g, seq.width);
    b.bootstrap(&seq.init)?;
    for st in &seq.steps {
        b.stack(st.vertex, &st.base)?;
    }
    let cert = b.certificate();
    let report = verify_cover(g, &cert, TemplateClass::Interval, Mode::Local)?;
    if !report.valid || report.max_preimage > seq.width {
        return Err(Error::InvalidSequence(format!("slug construction failed to verify: {:?}", report.violations)));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn k4_and_octahedron() {
        let k4 = complete(4).unwrap();
        let seq = ConstructionSequence::new(3, vec![0, 1, 2, 3]);
        let cert = slug_cover(&k4, &seq).unwrap();
        assert!(cert.max_preimage() <= 3);

        // K_{2,2,2} is 4-regular, so width 4 is the least possible
        let g = Graph::new(6, (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).filter(|&(a, b)| a / 2 != b / 2))
            .unwrap();
        let mut seq = ConstructionSequence::new(4, vec![0, 1, 2, 3, 4]);
        seq.set_init_present(|a, b| g.has_edge(a, b));
        seq.stack(5, vec![0, 1, 2, 3], 0b1111);
        assert!(validate_sequence(&seq, true).is_ok());
        let cert = slug_cover(&g, &seq).unwrap();
        assert!(cert.max_preimage() <= 4);
    }
}
