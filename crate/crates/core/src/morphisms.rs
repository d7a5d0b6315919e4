//! Graded homomorphisms between path algebras: those induced by graph
//! morphisms, the isomorphism `C_R^X(E) -> L_R(E(X))`, and checks on finite
//! chains of graph morphisms.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeffring::{solve_linear_system, LinearSystem, LinearTerm, Ring};
use crate::error::{Error, Result};
use crate::graph::{cohn_cover, morphism_validate, GraphMorphism, MorphismVerdict, RelativeGraph, VertexId};
use crate::pathalg::{Algebra, AlgebraElement, AlgebraSpec, Monomial};

/// A ring homomorphism given by the images of the generators `v`, `f`, `f*`.
#[derive(Clone, Debug)]
pub struct AlgebraHom {
    pub source: Algebra,
    pub target: Algebra,
    vertex_images: Vec<AlgebraElement>,
    edge_images: Vec<AlgebraElement>,
    ghost_images: Vec<AlgebraElement>,
}

impl AlgebraHom {
    /// Builds the homomorphism after checking that the images satisfy the
    /// defining relations of the source and have the generators' degrees.
    pub fn new(
        source: Algebra,
        target: Algebra,
        vertex_images: Vec<AlgebraElement>,
        edge_images: Vec<AlgebraElement>,
        ghost_images: Vec<AlgebraElement>,
    ) -> Result<Self> {
        let h = AlgebraHom { source, target, vertex_images, edge_images, ghost_images };
        h.check_relations()?;
        Ok(h)
    }

    fn check_relations(&self) -> Result<()> {
        let f = self.source.graph();
        let violation = |relation: &str, detail: String| {
            Err(Error::RelationViolation { relation: relation.to_string(), detail })
        };
        let deg_ok = |x: &AlgebraElement, d: i64| x.is_zero() || x.degree() == Some(d);
        for v in f.vertices() {
            if !deg_ok(&self.vertex_images[v.0], 0) {
                return violation("degree", format!("image of `{}` is not of degree 0", f.vertex_name(v)));
            }
        }
        for e in f.edge_ids() {
            if !deg_ok(&self.edge_images[e.0], 1) || !deg_ok(&self.ghost_images[e.0], -1) {
                return violation("degree", format!("images of `{}` have the wrong degree", f.edge_name(e)));
            }
        }
        let pv = |v: VertexId| &self.vertex_images[v.0];
        for v in f.vertices() {
            for w in f.vertices() {
                let expect = if v == w { pv(v).clone() } else { AlgebraElement::zero(&self.target) };
                if pv(v).mul(pv(w)) != expect {
                    return violation(
                        "(i)",
                        format!("images of `{}` and `{}`", f.vertex_name(v), f.vertex_name(w)),
                    );
                }
            }
        }
        for e in f.edge_ids() {
            let (s, r) = (f.source(e), f.range(e));
            let (pe, pg) = (&self.edge_images[e.0], &self.ghost_images[e.0]);
            let name = f.edge_name(e);
            if &pv(s).mul(pe) != pe || &pe.mul(pv(r)) != pe {
                return violation("(ii)", format!("image of `{name}`"));
            }
            if &pv(r).mul(pg) != pg || &pg.mul(pv(s)) != pg {
                return violation("(iii)", format!("image of `{name}*`"));
            }
            for e2 in f.edge_ids() {
                let got = pg.mul(&self.edge_images[e2.0]);
                let expect = if e == e2 { pv(r).clone() } else { AlgebraElement::zero(&self.target) };
                if got != expect {
                    return violation("(iv)", format!("image of `{name}*{}`", f.edge_name(e2)));
                }
            }
        }
        for &v in self.source.x() {
            let sum = f
                .out_edges(v)
                .iter()
                .fold(AlgebraElement::zero(&self.target), |acc, &e| {
                    acc.add(&self.edge_images[e.0].mul(&self.ghost_images[e.0]))
                });
            if &sum != pv(v) {
                return violation("(v)", format!("at `{}`", f.vertex_name(v)));
            }
        }
        Ok(())
    }

    /// `φ(α)` for a path `α`, with `φ(v)` for a vertex.
    fn real_image(&self, p: &crate::graph::Path) -> AlgebraElement {
        if p.is_vertex() {
            return self.vertex_images[p.source().0].clone();
        }
        let mut it = p.edges().iter();
        let first = self.edge_images[it.next().expect("nonempty").0].clone();
        it.fold(first, |acc, e| acc.mul(&self.edge_images[e.0]))
    }

    /// `φ(β*)`.
    fn ghost_image(&self, p: &crate::graph::Path) -> AlgebraElement {
        if p.is_vertex() {
            return self.vertex_images[p.source().0].clone();
        }
        let mut it = p.edges().iter().rev();
        let first = self.ghost_images[it.next().expect("nonempty").0].clone();
        it.fold(first, |acc, e| acc.mul(&self.ghost_images[e.0]))
    }

    pub fn apply_monomial(&self, m: &Monomial) -> AlgebraElement {
        if m.is_vertex() {
            return self.vertex_images[m.alpha.source().0].clone();
        }
        match (m.alpha.is_vertex(), m.beta.is_vertex()) {
            (false, true) => self.real_image(&m.alpha),
            (true, false) => self.ghost_image(&m.beta),
            _ => self.real_image(&m.alpha).mul(&self.ghost_image(&m.beta)),
        }
    }

    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        x.terms()
            .iter()
            .fold(AlgebraElement::zero(&self.target), |acc, (m, &c)| acc.add(&self.apply_monomial(m).scale(c)))
    }

    /// Some `x` with `φ(x) = y`, searched in the span of reduced source
    /// monomials of the degrees of `y` with both lengths at most `bound`.
    pub fn preimage(&self, y: &AlgebraElement, bound: usize) -> Result<Option<AlgebraElement>> {
        let ring = self.source.ring();
        let mut total = AlgebraElement::zero(&self.source);
        for (d, part) in y.homogeneous_components() {
            let span = self.source.reduced_monomials_of_degree(d, bound);
            let images: Vec<AlgebraElement> = span.iter().map(|m| self.apply_monomial(m)).collect();
            let mut rows: BTreeMap<Monomial, Vec<LinearTerm>> = BTreeMap::new();
            for (j, img) in images.iter().enumerate() {
                for (m, &k) in img.terms() {
                    rows.entry(m.clone()).or_default().push(LinearTerm { left: None, var: j, right: Some(k) });
                }
            }
            for m in part.terms().keys() {
                rows.entry(m.clone()).or_default();
            }
            let mut sys = LinearSystem::new(span.len());
            for (m, terms) in rows {
                sys.push(terms, part.coefficient(&m));
            }
            let Some(z) = solve_linear_system(ring, &sys)? else {
                return Ok(None);
            };
            total = total.add(&AlgebraElement::from_terms(&self.source, span.into_iter().zip(z)));
        }
        debug_assert_eq!(&self.apply(&total), y);
        Ok(Some(total))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraHom) -> Result<AlgebraHom> {
        self.target.check_same(&other.source).map_err(|_| Error::InvalidMorphism("homs are not composable".into()))?;
        Ok(AlgebraHom {
            source: Arc::clone(&self.source),
            target: Arc::clone(&other.target),
            vertex_images: self.vertex_images.iter().map(|x| other.apply(x)).collect(),
            edge_images: self.edge_images.iter().map(|x| other.apply(x)).collect(),
            ghost_images: self.ghost_images.iter().map(|x| other.apply(x)).collect(),
        })
    }

    /// Generators of the source paired with their names, in a fixed order.
    pub fn generator_images(&self) -> Vec<(String, &AlgebraElement)> {
        let f = self.source.graph();
        let mut out: Vec<(String, &AlgebraElement)> =
            f.vertices().map(|v| (f.vertex_name(v).to_string(), &self.vertex_images[v.0])).collect();
        for e in f.edge_ids() {
            out.push((f.edge_name(e).to_string(), &self.edge_images[e.0]));
            out.push((format!("{}*", f.edge_name(e)), &self.ghost_images[e.0]));
        }
        out
    }

    /// First generator on which two homs with the same source differ.
    pub fn first_difference(&self, other: &AlgebraHom) -> Option<String> {
        self.generator_images()
            .into_iter()
            .zip(other.generator_images())
            .find(|((_, a), (_, b))| a != b)
            .map(|((name, _), _)| name)
    }
}

/// `C_R(ψ)`: `v ↦ ψ⁰(v)`, `f ↦ ψ¹(f)`, `f* ↦ ψ¹(f)*`.
pub fn induced_hom(psi: &GraphMorphism, ring: &Ring) -> Result<AlgebraHom> {
    if let MorphismVerdict::Invalid { condition, detail } = morphism_validate(psi) {
        return Err(Error::InvalidMorphism(format!("condition ({condition}): {detail}")));
    }
    let source = AlgebraSpec::new(psi.source.clone(), ring.clone());
    let target = AlgebraSpec::new(psi.target.clone(), ring.clone());
    let g = &psi.source.graph;
    let vertex_images = g.vertices().map(|v| AlgebraElement::vertex(&target, psi.map_vertex(v))).collect();
    let edge_images = g.edge_ids().map(|e| AlgebraElement::edge(&target, psi.map_edge(e))).collect();
    let ghost_images = g.edge_ids().map(|e| AlgebraElement::ghost(&target, psi.map_edge(e))).collect();
    AlgebraHom::new(source, target, vertex_images, edge_images, ghost_images)
}

/// `φ : C_R^X(E) -> L_R(E(X))` with `φ(v) = v + v'` and `φ(f) = f + f'` for
/// `v`, `r(f)` in `Y = Reg(E) \ X`, identity on the other generators.
pub fn cohn_to_leavitt(rel: &RelativeGraph, ring: &Ring) -> Result<AlgebraHom> {
    let cover = cohn_cover(rel)?;
    let source = AlgebraSpec::new(rel.clone(), ring.clone());
    let target = AlgebraSpec::leavitt(cover, ring.clone());
    let (e, c) = (&rel.graph, target.graph());
    let y = rel.y();
    let primed = |n: &str| format!("{n}{}", crate::graph::PRIME_SUFFIX);
    let vid = |n: &str| c.vertex_id(n).expect("cover contains the vertex");
    let eid = |n: &str| c.edge_id(n).expect("cover contains the edge");
    let mut vertex_images = Vec::new();
    for v in e.vertices() {
        let name = e.vertex_name(v);
        let mut img = AlgebraElement::vertex(&target, vid(name));
        if y.contains(&v) {
            img = img.add(&AlgebraElement::vertex(&target, vid(&primed(name))));
        }
        vertex_images.push(img);
    }
    let mut edge_images = Vec::new();
    for f in e.edge_ids() {
        let name = e.edge_name(f);
        let mut img = AlgebraElement::edge(&target, eid(name));
        if y.contains(&e.range(f)) {
            img = img.add(&AlgebraElement::edge(&target, eid(&primed(name))));
        }
        edge_images.push(img);
    }
    let ghost_images = edge_images.iter().map(AlgebraElement::involution).collect();
    AlgebraHom::new(source, target, vertex_images, edge_images, ghost_images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// Bijective on every component; the spanning sets are complete bases.
    HoldsExactly { source_rank: usize, target_rank: usize },
    /// Bijective on the truncated spanning sets.
    HoldsAtBound { size_bound: usize },
    Fails { reason: String },
}

impl IsoVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, IsoVerdict::Fails { .. })
    }
}

/// Checks that `h` is bijective degree by degree on reduced monomials with
/// `|degree| <= degree_bound` and lengths `<= size_bound`.
///
/// Surjectivity: each target basis monomial gets a preimage `g(t)`.
/// Injectivity: `g(h(s)) = s` for each source basis monomial `s`, which rules
/// out a kernel even over coefficient rings with zero divisors.
pub fn verify_graded_iso(h: &AlgebraHom, degree_bound: usize, size_bound: usize) -> Result<IsoVerdict> {
    let ring = h.target.ring();
    let bound = degree_bound as i64;
    let in_range = |m: &Monomial| m.degree().abs() <= bound;
    let sources: Vec<Monomial> = h.source.reduced_monomials(size_bound).into_iter().filter(in_range).collect();
    let targets: Vec<Monomial> = h.target.reduced_monomials(size_bound).into_iter().filter(in_range).collect();
    let mut back: BTreeMap<Monomial, AlgebraElement> = BTreeMap::new();
    for t in &targets {
        let y = AlgebraElement::monomial(&h.target, t.clone(), ring.one());
        // primed vertices pull back to v - Σ ff*, one step longer
        match h.preimage(&y, size_bound + 1)? {
            Some(x) => {
                back.insert(t.clone(), x);
            }
            None => {
                return Ok(IsoVerdict::Fails {
                    reason: format!("target element {} is not hit", t.format(h.target.graph())),
                })
            }
        }
    }
    for s in &sources {
        let x = AlgebraElement::monomial(&h.source, s.clone(), ring.one());
        let y = h.apply(&x);
        let mut again = AlgebraElement::zero(&h.source);
        for (m, &c) in y.terms() {
            let Some(pre) = back.get(m) else {
                return Ok(IsoVerdict::Fails {
                    reason: format!("image of {} leaves the bounded target span", x),
                });
            };
            again = again.add(&pre.scale(c));
        }
        if again != x {
            return Ok(IsoVerdict::Fails { reason: format!("{x} is not recovered from its image {y}") });
        }
    }
    let longest = |a: &Algebra| a.graph().longest_path_len();
    let exact = match (longest(&h.source), longest(&h.target)) {
        (Some(a), Some(b)) => size_bound >= a.max(b) && degree_bound >= a.max(b),
        _ => false,
    };
    Ok(if exact {
        IsoVerdict::HoldsExactly { source_rank: sources.len(), target_rank: targets.len() }
    } else {
        IsoVerdict::HoldsAtBound { size_bound }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainVerdict {
    Commutes,
    Fails { generator: String, detail: String },
}

impl ChainVerdict {
    pub fn holds(&self) -> bool {
        self == &ChainVerdict::Commutes
    }
}

/// Checks a finite chain `A_0 -> A_1 -> ... -> A_m` of graph morphisms.
///
/// For all `i < j`, the hom induced by the composite `A_i -> A_j` must agree on
/// generators with the composite of the induced homs, and the canonical maps
/// into `A_m` must form a cocone. When `cocone` is given (one hom per object
/// into a common target), it is checked for commutation as well.
pub fn chain_colimit_check(
    chain: &[GraphMorphism],
    ring: &Ring,
    cocone: Option<&[AlgebraHom]>,
) -> Result<ChainVerdict> {
    for pair in chain.windows(2) {
        if pair[0].target != pair[1].source {
            return Err(Error::InvalidMorphism("consecutive morphisms do not compose".into()));
        }
    }
    let steps = chain.iter().map(|psi| induced_hom(psi, ring)).collect::<Result<Vec<_>>>()?;
    let m = chain.len();
    // composite graph morphisms and homs from A_i to A_j
    for i in 0..m {
        let mut graph_comp = chain[i].clone();
        let mut hom_comp = steps[i].clone();
        for j in i + 1..=m {
            if j > i + 1 {
                graph_comp = graph_comp.then(&chain[j - 1])?;
                hom_comp = hom_comp.then(&steps[j - 1])?;
            }
            let direct = induced_hom(&graph_comp, ring)?;
            if let Some(generator) = direct.first_difference(&hom_comp) {
                return Ok(ChainVerdict::Fails {
                    generator,
                    detail: format!("induced hom of the composite A{i} -> A{j} differs from the composite"),
                });
            }
        }
    }
    if let Some(maps) = cocone {
        if maps.len() != m + 1 {
            return Err(Error::InvalidMorphism(format!("cocone needs {} maps, got {}", m + 1, maps.len())));
        }
        for i in 0..m {
            let via = steps[i].then(&maps[i + 1])?;
            if let Some(generator) = maps[i].first_difference(&via) {
                return Ok(ChainVerdict::Fails {
                    generator,
                    detail: format!("cocone map from A{i} does not factor through A{}", i + 1),
                });
            }
        }
    }
    Ok(ChainVerdict::Commutes)
}

/// Morphism file: `{"vmap":{..},"emap":{..},"sourceX":[..],"targetX":[..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismFile {
    pub vmap: BTreeMap<String, String>,
    #[serde(default)]
    pub emap: BTreeMap<String, String>,
    #[serde(rename = "sourceX", default)]
    pub source_x: Vec<String>,
    #[serde(rename = "targetX", default)]
    pub target_x: Vec<String>,
}

impl MorphismFile {
    pub fn into_morphism(
        self,
        source: Arc<crate::graph::Graph>,
        target: Arc<crate::graph::Graph>,
    ) -> Result<GraphMorphism> {
        let names = |v: &[String]| v.iter().map(String::clone).collect::<Vec<_>>();
        let sx = names(&self.source_x);
        let tx = names(&self.target_x);
        let sx: Vec<&str> = sx.iter().map(String::as_str).collect();
        let tx: Vec<&str> = tx.iter().map(String::as_str).collect();
        let s = RelativeGraph::with_names(source, &sx)?;
        let t = RelativeGraph::with_names(target, &tx)?;
        GraphMorphism::from_names(s, t, &self.vmap, &self.emap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use std::collections::BTreeSet;

    fn rel(g: crate::graph::Graph, x: &[&str]) -> RelativeGraph {
        RelativeGraph::with_names(Arc::new(g), x).unwrap()
    }

    fn name_map(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn inclusion_of_a1() {
        let psi = GraphMorphism::from_names(
            rel(fixtures::a1(), &[]),
            rel(fixtures::v_to_w(), &["v"]),
            &name_map(&[("v", "v")]),
            &BTreeMap::new(),
        )
        .unwrap();
        let h = induced_hom(&psi, &fixtures::z(2)).unwrap();
        let v = AlgebraElement::generator(&h.source, "v").unwrap();
        assert_eq!(h.apply(&v), AlgebraElement::generator(&h.target, "v").unwrap());
    }

    #[test]
    fn identity_hom_is_identity() {
        let obj = rel(fixtures::toeplitz(), &["v"]);
        let h = induced_hom(&GraphMorphism::identity(obj), &fixtures::z(3)).unwrap();
        for m in h.source.reduced_monomials(2) {
            let x = AlgebraElement::monomial(&h.source, m, h.source.ring().one());
            assert_eq!(h.apply(&x).terms(), x.terms());
        }
    }

    #[test]
    fn cohn_to_leavitt_generators() {
        let z2 = fixtures::z(2);
        let h = cohn_to_leavitt(&rel(fixtures::v_to_w(), &[]), &z2).unwrap();
        let t = &h.target;
        let g = |a: &Algebra, n: &str| AlgebraElement::generator(a, n).unwrap();
        assert_eq!(h.apply(&g(&h.source, "v")), g(t, "v").add(&g(t, "v'")));
        assert_eq!(h.apply(&g(&h.source, "f")), g(t, "f"));

        let h = cohn_to_leavitt(&rel(fixtures::loop_graph(), &[]), &z2).unwrap();
        let t = &h.target;
        assert_eq!(h.apply(&g(&h.source, "e")), g(t, "e").add(&g(t, "e'")));

        let full = RelativeGraph::leavitt(Arc::new(fixtures::rose2()));
        let h = cohn_to_leavitt(&full, &z2).unwrap();
        assert_eq!(h.target.graph(), &fixtures::rose2());
        assert!(h.first_difference(&induced_hom(&GraphMorphism::identity(full), &z2).unwrap()).is_none());
    }

    #[test]
    fn prop_iso_on_single_edge() {
        let h = cohn_to_leavitt(&rel(fixtures::v_to_w(), &[]), &fixtures::z(2)).unwrap();
        assert_eq!(
            verify_graded_iso(&h, 1, 1).unwrap(),
            IsoVerdict::HoldsExactly { source_rank: 5, target_rank: 5 }
        );
    }

    #[test]
    fn broken_hom_misses_a_vertex() {
        let z2 = fixtures::z(2);
        let good = cohn_to_leavitt(&rel(fixtures::v_to_w(), &[]), &z2).unwrap();
        let (s, t) = (good.source.clone(), good.target.clone());
        let g = |a: &Algebra, n: &str| AlgebraElement::generator(a, n).unwrap();
        let broken = AlgebraHom::new(
            s,
            t.clone(),
            vec![g(&t, "v"), g(&t, "w")],
            vec![g(&t, "f")],
            vec![g(&t, "f*")],
        )
        .unwrap();
        match verify_graded_iso(&broken, 1, 1).unwrap() {
            IsoVerdict::Fails { reason } => assert!(reason.contains("v'"), "{reason}"),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn relation_violations_are_named() {
        let z2 = fixtures::z(2);
        let s = AlgebraSpec::leavitt(fixtures::v_to_w(), z2.clone());
        let t = AlgebraSpec::cohn(fixtures::v_to_w(), &[], z2).unwrap();
        let g = |a: &Algebra, n: &str| AlgebraElement::generator(a, n).unwrap();
        // relation (v) fails: ff* != v in the Cohn algebra
        let err = AlgebraHom::new(s, t.clone(), vec![g(&t, "v"), g(&t, "w")], vec![g(&t, "f")], vec![g(&t, "f*")])
            .unwrap_err();
        assert!(matches!(err, Error::RelationViolation { ref relation, .. } if relation == "(v)"));
    }

    #[test]
    fn chains() {
        let z2 = fixtures::z(2);
        let (a1, vw, vwu) = (rel(fixtures::a1(), &[]), rel(fixtures::v_to_w(), &["v"]), rel(fixtures::v_w_u(), &["v"]));
        let p1 = GraphMorphism::from_names(a1.clone(), vw.clone(), &name_map(&[("v", "v")]), &BTreeMap::new()).unwrap();
        let p2 = GraphMorphism::from_names(
            vw.clone(),
            vwu.clone(),
            &name_map(&[("v", "v"), ("w", "w")]),
            &name_map(&[("f", "f")]),
        )
        .unwrap();
        assert!(chain_colimit_check(&[p1.clone(), p2.clone()], &z2, None).unwrap().holds());
        assert!(chain_colimit_check(&[], &z2, None).unwrap().holds());

        // a cocone whose first map sends v to w cannot commute
        let to_end = |psi: &GraphMorphism| induced_hom(psi, &z2).unwrap();
        let id_end = to_end(&GraphMorphism::identity(vwu.clone()));
        let good = vec![to_end(&p1.then(&p2).unwrap()), to_end(&p2), id_end.clone()];
        assert!(chain_colimit_check(&[p1.clone(), p2.clone()], &z2, Some(&good)).unwrap().holds());
        let bad_map = GraphMorphism::from_names(a1, vwu, &name_map(&[("v", "w")]), &BTreeMap::new()).unwrap();
        let bad = vec![to_end(&bad_map), to_end(&p2), id_end];
        match chain_colimit_check(&[p1, p2], &z2, Some(&bad)).unwrap() {
            ChainVerdict::Fails { generator, .. } => assert_eq!(generator, "v"),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn morphism_file() {
        let json = r#"{"vmap":{"v":"v"},"emap":{},"sourceX":[],"targetX":["v"]}"#;
        let file: MorphismFile = serde_json::from_str(json).unwrap();
        let psi = file.into_morphism(Arc::new(fixtures::a1()), Arc::new(fixtures::v_to_w())).unwrap();
        assert!(psi.validate().is_valid());
        assert_eq!(psi.target.x, BTreeSet::from([VertexId(0)]));
    }
}
