//! Word rewriting over the generators `v`, `f`, `f*`.
//!
//! Rules act on adjacent pairs of letters: vertex absorption, the
//! composability zeros, `f*g -> δ_{f,g} r(f)` and, for the special edge `f`
//! at a vertex `u` of `X`, `ff* -> u - Σ_{h≠f} hh*`. Irreducible words are
//! exactly the reduced monomials.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Algebra, AlgebraElement, Monomial};
use crate::coeffring::RingElement;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Path, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Vertex(VertexId),
    Real(EdgeId),
    Ghost(EdgeId),
}

pub type Word = Vec<Generator>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Always rewrite the leftmost redex of the first pending word.
    Leftmost,
    /// Pick pending words and redexes at random from a seeded generator.
    Randomized(u64),
}

/// Result of rewriting one redex.
enum Step {
    Zero,
    /// Signed replacement words for the two letters.
    Replace(Vec<(bool, Vec<Generator>)>),
}

fn rule(alg: &Algebra, a: Generator, b: Generator) -> Option<Step> {
    use Generator::*;
    let g = alg.graph();
    let keep = |cond: bool, w: Vec<Generator>| Some(if cond { Step::Replace(vec![(false, w)]) } else { Step::Zero });
    match (a, b) {
        (Vertex(u), Vertex(w)) => keep(u == w, vec![Vertex(u)]),
        (Vertex(u), Real(f)) => keep(g.source(f) == u, vec![Real(f)]),
        (Vertex(u), Ghost(f)) => keep(g.range(f) == u, vec![Ghost(f)]),
        (Real(f), Vertex(u)) => keep(g.range(f) == u, vec![Real(f)]),
        (Ghost(f), Vertex(u)) => keep(g.source(f) == u, vec![Ghost(f)]),
        (Real(f), Real(h)) => (g.range(f) != g.source(h)).then_some(Step::Zero),
        (Ghost(f), Ghost(h)) => (g.source(f) != g.range(h)).then_some(Step::Zero),
        (Ghost(f), Real(h)) => keep(f == h, vec![Vertex(g.range(f))]),
        (Real(f), Ghost(h)) => {
            if g.range(f) != g.range(h) {
                Some(Step::Zero)
            } else if f == h && alg.is_special(f) {
                let u = g.source(f);
                let mut out = vec![(false, vec![Vertex(u)])];
                for &k in g.out_edges(u) {
                    if k != f {
                        out.push((true, vec![Real(k), Ghost(k)]));
                    }
                }
                Some(Step::Replace(out))
            } else {
                None
            }
        }
    }
}

fn redexes(alg: &Algebra, w: &[Generator]) -> Vec<usize> {
    (0..w.len().saturating_sub(1)).filter(|&i| rule(alg, w[i], w[i + 1]).is_some()).collect()
}

/// Reads an irreducible word as a monomial.
fn to_monomial(g: &Graph, w: &[Generator]) -> Monomial {
    if let [Generator::Vertex(v)] = w {
        return Monomial::vertex(*v);
    }
    let reals: Vec<EdgeId> = w
        .iter()
        .filter_map(|x| if let Generator::Real(e) = x { Some(*e) } else { None })
        .collect();
    let mut ghosts: Vec<EdgeId> = w
        .iter()
        .filter_map(|x| if let Generator::Ghost(e) = x { Some(*e) } else { None })
        .collect();
    ghosts.reverse();
    debug_assert_eq!(reals.len() + ghosts.len(), w.len(), "irreducible word contains a vertex");
    let alpha = if reals.is_empty() { None } else { Some(Path::from_edges(g, reals).expect("composable")) };
    let beta = if ghosts.is_empty() { None } else { Some(Path::from_edges(g, ghosts).expect("composable")) };
    match (alpha, beta) {
        (Some(a), Some(b)) => Monomial { alpha: a, beta: b },
        (Some(a), None) => Monomial::real(a),
        (None, Some(b)) => Monomial::ghost(b),
        (None, None) => unreachable!("words are nonempty"),
    }
}

/// Normal form of `Σ c_i w_i` using the leftmost strategy.
pub fn normal_form(alg: &Algebra, raw: &[(RingElement, Word)]) -> AlgebraElement {
    normal_form_with(alg, raw, Strategy::Leftmost)
}

pub fn normal_form_with(alg: &Algebra, raw: &[(RingElement, Word)], strategy: Strategy) -> AlgebraElement {
    let ring = alg.ring();
    let mut rng = match strategy {
        Strategy::Randomized(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::Leftmost => None,
    };
    let mut pending: Vec<(RingElement, Word)> =
        raw.iter().filter(|(c, w)| !ring.is_zero(*c) && !w.is_empty()).cloned().collect();
    if rng.is_none() {
        pending.reverse();
    }
    let mut done: BTreeMap<Monomial, RingElement> = BTreeMap::new();
    while !pending.is_empty() {
        let (c, w) = match rng.as_mut() {
            Some(r) => {
                let i = r.gen_range(0..pending.len());
                pending.swap_remove(i)
            }
            None => pending.pop().expect("nonempty"),
        };
        let spots = redexes(alg, &w);
        let Some(&i) = (match rng.as_mut() {
            Some(r) => spots.choose(r),
            None => spots.first(),
        }) else {
            let m = to_monomial(alg.graph(), &w);
            match done.entry(m) {
                Entry::Vacant(slot) => {
                    slot.insert(c);
                }
                Entry::Occupied(mut slot) => {
                    let s = ring.add(*slot.get(), c);
                    if ring.is_zero(s) {
                        slot.remove();
                    } else {
                        *slot.get_mut() = s;
                    }
                }
            }
            continue;
        };
        match rule(alg, w[i], w[i + 1]).expect("redex") {
            Step::Zero => {}
            Step::Replace(parts) => {
                // push in reverse so the leftmost strategy pops them in order
                for (negate, mid) in parts.into_iter().rev() {
                    let mut nw = Vec::with_capacity(w.len() + 1);
                    nw.extend_from_slice(&w[..i]);
                    nw.extend(mid);
                    nw.extend_from_slice(&w[i + 2..]);
                    pending.push((if negate { ring.neg(c) } else { c }, nw));
                }
            }
        }
    }
    AlgebraElement::from_terms(alg, done)
}

/// Parses a whitespace-separated word such as `"f f* v"`.
pub fn parse_word(g: &Graph, text: &str) -> Result<Word> {
    text.split_whitespace()
        .map(|tok| {
            if let Some(base) = tok.strip_suffix('*') {
                return g.edge_id(base).map(Generator::Ghost).ok_or_else(|| Error::UnknownGenerator(tok.into()));
            }
            if let Some(v) = g.vertex_id(tok) {
                return Ok(Generator::Vertex(v));
            }
            g.edge_id(tok).map(Generator::Real).ok_or_else(|| Error::UnknownGenerator(tok.into()))
        })
        .collect()
}

/// A random word of length `len`. Letters mostly follow a walk through the
/// graph (real edges forward, ghost edges backward) so that many words
/// survive reduction; one letter in five is drawn uniformly.
pub fn random_word(g: &Graph, rng: &mut impl rand::Rng, len: usize) -> Word {
    let mut all: Vec<Generator> = g.vertices().map(Generator::Vertex).collect();
    all.extend(g.edge_ids().map(Generator::Real));
    all.extend(g.edge_ids().map(Generator::Ghost));
    if all.is_empty() {
        return Vec::new();
    }
    let mut w = Vec::with_capacity(len);
    let mut at = g.vertices().collect::<Vec<_>>()[rng.gen_range(0..g.vertex_count())];
    for _ in 0..len {
        let mut moves: Vec<Generator> = vec![Generator::Vertex(at)];
        moves.extend(g.out_edges(at).iter().map(|&e| Generator::Real(e)));
        moves.extend(g.edge_ids().filter(|&e| g.range(e) == at).map(Generator::Ghost));
        let letter = if rng.gen_ratio(1, 5) { *all.choose(rng).expect("nonempty") } else { *moves.choose(rng).expect("nonempty") };
        at = match letter {
            Generator::Vertex(v) => v,
            Generator::Real(e) => g.range(e),
            Generator::Ghost(e) => g.source(e),
        };
        w.push(letter);
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::pathalg::AlgebraSpec;

    fn nf(alg: &Algebra, text: &str) -> AlgebraElement {
        let w = parse_word(alg.graph(), text).unwrap();
        normal_form(alg, &[(alg.ring().one(), w)])
    }

    #[test]
    fn single_edge_words() {
        let alg = AlgebraSpec::leavitt(fixtures::v_to_w(), fixtures::z(2));
        assert_eq!(nf(&alg, "f f*").to_string(), "v");
        assert_eq!(nf(&alg, "f* f").to_string(), "w");
        assert!(nf(&alg, "f f").is_zero());
        let cohn = AlgebraSpec::cohn(fixtures::v_to_w(), &[], fixtures::z(2)).unwrap();
        assert_eq!(nf(&cohn, "f f*").to_string(), "ff*");
    }

    #[test]
    fn unknown_generator() {
        let g = fixtures::loop_graph();
        assert_eq!(parse_word(&g, "e q"), Err(Error::UnknownGenerator("q".into())));
    }

    #[test]
    fn strategies_agree_on_rose() {
        let alg = AlgebraSpec::leavitt(fixtures::rose2(), fixtures::z(3));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..200 {
            let len = rng.gen_range(1..8);
            let w = random_word(alg.graph(), &mut rng, len);
            let raw = [(alg.ring().one(), w)];
            let a = normal_form(&alg, &raw);
            let b = normal_form_with(&alg, &raw, Strategy::Randomized(i));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn words_match_products() {
        let alg = AlgebraSpec::leavitt(fixtures::toeplitz(), fixtures::z(2));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let w = random_word(alg.graph(), &mut rng, 6);
            let by_words = normal_form(&alg, &[(alg.ring().one(), w.clone())]);
            let by_products = w.iter().fold(AlgebraElement::one(&alg), |acc, &x| {
                let gen = match x {
                    Generator::Vertex(v) => AlgebraElement::vertex(&alg, v),
                    Generator::Real(e) => AlgebraElement::edge(&alg, e),
                    Generator::Ghost(e) => AlgebraElement::ghost(&alg, e),
                };
                acc.mul(&gen)
            });
            assert_eq!(by_words, by_products);
        }
    }
}
