//! The filtration `D_n = span{αβ* : len α = len β <= n}` of the degree-zero
//! part of `L_R(E)` and its block decomposition: one block indexed by
//! `P(i, v)` for each `i < n` and sink `v`, and one block indexed by
//! `P(n, v)` for each vertex `v`.

use std::collections::HashMap;

use super::{Algebra, AlgebraElement, Monomial};
use crate::coeffring::{Matrix, Ring};
use crate::error::{Error, Result};
use crate::graph::{Path, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockLabel {
    /// Paths of length `level < n` ending at the sink `vertex`.
    Sink { level: usize, vertex: VertexId },
    /// Paths of length exactly `n` ending at `vertex`.
    Full { vertex: VertexId },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub label: BlockLabel,
    /// Row and column labels, in lexicographic order.
    pub paths: Vec<Path>,
    pub matrix: Matrix,
}

/// Image of an element of `D_n` in the product of matrix rings.
/// Blocks with no index paths are left out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatricialImage {
    pub level: usize,
    pub blocks: Vec<Block>,
}

/// The nonempty blocks of `D_n` with their index paths.
pub fn dn_blocks(alg: &Algebra, n: usize) -> Vec<(BlockLabel, Vec<Path>)> {
    let g = alg.graph();
    let mut out = Vec::new();
    for i in 0..n {
        let layer = g.paths(i, None);
        for v in g.sinks() {
            let paths: Vec<Path> = layer.iter().filter(|p| p.range() == v).cloned().collect();
            if !paths.is_empty() {
                out.push((BlockLabel::Sink { level: i, vertex: v }, paths));
            }
        }
    }
    let layer = g.paths(n, None);
    for v in g.vertices() {
        let paths: Vec<Path> = layer.iter().filter(|p| p.range() == v).cloned().collect();
        if !paths.is_empty() {
            out.push((BlockLabel::Full { vertex: v }, paths));
        }
    }
    out
}

/// `Σ_{i<n, v sink} |P(i,v)|² + Σ_v |P(n,v)|²`.
pub fn dn_rank(alg: &Algebra, n: usize) -> usize {
    dn_blocks(alg, n).iter().map(|(_, p)| p.len() * p.len()).sum()
}

fn require_leavitt(alg: &Algebra) -> Result<()> {
    if alg.is_leavitt() {
        Ok(())
    } else {
        Err(Error::NotLeavitt)
    }
}

pub fn matricial_decompose(x: &AlgebraElement, n: usize) -> Result<MatricialImage> {
    let alg = x.algebra();
    require_leavitt(alg)?;
    let level = x.filtration_level()?;
    if level > n {
        return Err(Error::NotInDn(n));
    }
    let ring = alg.ring();
    let g = alg.graph();
    let mut image = MatricialImage::zero(alg, n);
    let index: HashMap<BlockLabel, (usize, HashMap<Path, usize>)> = image
        .blocks
        .iter()
        .enumerate()
        .map(|(b, blk)| {
            let pos = blk.paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
            (blk.label, (b, pos))
        })
        .collect();
    for (m, &c) in x.terms() {
        let mut stack = vec![(m.alpha.clone(), m.beta.clone())];
        while let Some((a, b)) = stack.pop() {
            let v = a.range();
            if a.len() < n && !g.is_sink(v) {
                // v = Σ_{f ∈ s^{-1}(v)} ff*
                for &f in g.out_edges(v) {
                    stack.push((a.extend(g, f), b.extend(g, f)));
                }
                continue;
            }
            let label = if a.len() == n {
                BlockLabel::Full { vertex: v }
            } else {
                BlockLabel::Sink { level: a.len(), vertex: v }
            };
            let (blk, pos) = &index[&label];
            let (i, j) = (pos[&a], pos[&b]);
            let mat = &mut image.blocks[*blk].matrix;
            mat.set(i, j, ring.add(mat.get(i, j), c));
        }
    }
    Ok(image)
}

pub fn matricial_lift(alg: &Algebra, image: &MatricialImage) -> AlgebraElement {
    let ring = alg.ring();
    let mut terms = Vec::new();
    for blk in &image.blocks {
        for (i, a) in blk.paths.iter().enumerate() {
            for (j, b) in blk.paths.iter().enumerate() {
                let c = blk.matrix.get(i, j);
                if !ring.is_zero(c) {
                    terms.push((Monomial { alpha: a.clone(), beta: b.clone() }, c));
                }
            }
        }
    }
    AlgebraElement::from_terms(alg, terms)
}

impl MatricialImage {
    pub fn zero(alg: &Algebra, n: usize) -> Self {
        let ring = alg.ring();
        let blocks = dn_blocks(alg, n)
            .into_iter()
            .map(|(label, paths)| {
                let k = paths.len();
                Block { label, paths, matrix: Matrix::zeros(ring, k, k) }
            })
            .collect();
        MatricialImage { level: n, blocks }
    }

    fn zip(&self, other: &Self, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> Self {
        assert_eq!(self.level, other.level, "images at different levels");
        MatricialImage {
            level: self.level,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| Block { label: a.label, paths: a.paths.clone(), matrix: f(&a.matrix, &b.matrix) })
                .collect(),
        }
    }

    pub fn mul(&self, ring: &Ring, other: &Self) -> Self {
        self.zip(other, |a, b| a.mul(ring, b))
    }

    pub fn add(&self, ring: &Ring, other: &Self) -> Self {
        self.zip(other, |a, b| a.add(ring, b))
    }

    pub fn sub(&self, ring: &Ring, other: &Self) -> Self {
        self.zip(other, |a, b| a.sub(ring, b))
    }

    pub fn is_zero(&self, ring: &Ring) -> bool {
        self.blocks.iter().all(|b| b.matrix.is_zero(ring))
    }

    /// Total number of matrix entries, i.e. the rank of `D_n` as a free module.
    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.paths.len() * b.paths.len()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::pathalg::AlgebraSpec;

    fn gen(alg: &Algebra, name: &str) -> AlgebraElement {
        AlgebraElement::generator(alg, name).unwrap()
    }

    #[test]
    fn single_edge_level_one() {
        let alg = AlgebraSpec::leavitt(fixtures::v_to_w(), fixtures::z(2));
        let x = gen(&alg, "v").add(&gen(&alg, "w"));
        let img = matricial_decompose(&x, 1).unwrap();
        let g = alg.graph();
        let w = g.vertex_id("w").unwrap();
        assert_eq!(img.blocks.len(), 2);
        assert_eq!(img.blocks[0].label, BlockLabel::Sink { level: 0, vertex: w });
        assert_eq!(img.blocks[0].matrix, Matrix::from_ints(alg.ring(), &[&[1]]));
        assert_eq!(img.blocks[1].label, BlockLabel::Full { vertex: w });
        assert_eq!(g.path_name(&img.blocks[1].paths[0]), "f");
        assert_eq!(img.blocks[1].matrix, Matrix::from_ints(alg.ring(), &[&[1]]));
        assert_eq!(matricial_lift(&alg, &img), x);
    }

    #[test]
    fn loop_vertex_at_level_two() {
        let alg = AlgebraSpec::leavitt(fixtures::loop_graph(), fixtures::z(2));
        let img = matricial_decompose(&gen(&alg, "v"), 2).unwrap();
        assert_eq!(img.blocks.len(), 1);
        assert_eq!(alg.graph().path_name(&img.blocks[0].paths[0]), "ee");
        assert_eq!(img.rank(), 1);
    }

    #[test]
    fn rank_formula_small_cases() {
        let lp = AlgebraSpec::leavitt(fixtures::loop_graph(), fixtures::z(2));
        assert_eq!((1..=3).map(|n| dn_rank(&lp, n)).collect::<Vec<_>>(), vec![1, 1, 1]);
        let vw = AlgebraSpec::leavitt(fixtures::v_to_w(), fixtures::z(2));
        assert_eq!(dn_rank(&vw, 1), 2);
        let rose = AlgebraSpec::leavitt(fixtures::rose2(), fixtures::z(2));
        assert_eq!(dn_rank(&rose, 2), 16);
    }

    #[test]
    fn errors() {
        let alg = AlgebraSpec::leavitt(fixtures::loop_graph(), fixtures::z(2));
        assert_eq!(matricial_decompose(&gen(&alg, "e"), 1), Err(Error::NotDegreeZero));
        let rose = AlgebraSpec::leavitt(fixtures::rose2(), fixtures::z(2));
        let ef = gen(&rose, "e").mul(&gen(&rose, "f"));
        assert_eq!(matricial_decompose(&ef.mul(&ef.involution()), 1), Err(Error::NotInDn(1)));
        let cohn = AlgebraSpec::cohn(fixtures::loop_graph(), &[], fixtures::z(2)).unwrap();
        assert_eq!(matricial_decompose(&gen(&cohn, "v"), 1), Err(Error::NotLeavitt));
    }
}
