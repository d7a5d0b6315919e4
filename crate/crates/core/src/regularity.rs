//! Graded von Neumann regularity witnesses for path algebras.
//!
//! The constructive method builds a left local unit `ε = Σ a_i b_i` for a
//! homogeneous `x` of degree `d`, turns the degree-zero elements `c_i = b_i x`
//! into matrices in some `D_N`, finds an idempotent `y = Σ u_i c_i` generating
//! `Σ D_N c_i`, and returns `r = Σ u_i b_i`, which satisfies `x r x = x`.
//! The oracle method solves `x b x = x` directly over a truncated spanning set
//! of the component of degree `-d`.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeffring::{
    is_vnr, matrix_vnr_witness, solve_linear_system, vnr_witness, LinearSystem, LinearTerm, Matrix, Ring,
    RingElement,
};
use crate::error::{Error, Result};
use crate::graph::Path;
use crate::morphisms::cohn_to_leavitt;
use crate::pathalg::{matricial_decompose, matricial_lift, Algebra, AlgebraElement, MatricialImage, Monomial};

/// `ε = Σ a_i b_i` together with its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalUnit {
    pub epsilon: AlgebraElement,
    pub factors: Vec<(AlgebraElement, AlgebraElement)>,
}

/// Left unit `ε ∈ S_d S_{-d}` with `ε x = x` and right unit `ε' ∈ S_{-d} S_d`
/// with `x ε' = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalUnitPair {
    pub left: LocalUnit,
    pub right: LocalUnit,
}

fn require_homogeneous(x: &AlgebraElement) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    x.degree().ok_or(Error::NotHomogeneous)
}

/// Left local unit of a nonzero homogeneous `x`.
///
/// Each support monomial `αβ*` is expanded through `u = Σ ff*` at the range
/// of its real part until the real part reaches the maximal length `L` of the
/// support or ends at a sink. The distinct real parts `γ` obtained this way
/// are pairwise prefix-free, so `ε = Σ γγ*` fixes `x`; each `γγ*` factors as
/// `(γδ*)(δγ*)` through a ghost part `δ` met alongside `γ`.
pub fn local_unit_left(x: &AlgebraElement) -> Result<LocalUnit> {
    let d = require_homogeneous(x)?;
    let alg = x.algebra();
    if !alg.is_leavitt() {
        return transported_unit(x);
    }
    let g = alg.graph();
    let one = alg.ring().one();
    let top = x.terms().keys().map(|m| m.alpha.len()).max().unwrap_or(0);
    let mut companions: BTreeMap<Path, Path> = BTreeMap::new();
    for m in x.terms().keys() {
        let mut stack = vec![(m.alpha.clone(), m.beta.clone())];
        while let Some((a, b)) = stack.pop() {
            if a.len() < top && !g.is_sink(a.range()) {
                for &f in g.out_edges(a.range()) {
                    stack.push((a.extend(g, f), b.extend(g, f)));
                }
            } else {
                companions.entry(a).or_insert(b);
            }
        }
    }
    let mut epsilon = AlgebraElement::zero(alg);
    let mut factors = Vec::with_capacity(companions.len());
    for (gamma, delta) in companions {
        let a = AlgebraElement::monomial(alg, Monomial { alpha: gamma.clone(), beta: delta.clone() }, one);
        let b = AlgebraElement::monomial(alg, Monomial { alpha: delta, beta: gamma.clone() }, one);
        debug_assert_eq!(a.degree().unwrap_or(d), d);
        epsilon = epsilon.add(&AlgebraElement::monomial(alg, Monomial { alpha: gamma.clone(), beta: gamma }, one));
        factors.push((a, b));
    }
    check_unit(x, &epsilon, &factors, d, true)?;
    Ok(LocalUnit { epsilon, factors })
}

/// Right local unit, mirrored from the left unit of `x*`.
pub fn local_unit_right(x: &AlgebraElement) -> Result<LocalUnit> {
    let d = require_homogeneous(x)?;
    let left = local_unit_left(&x.involution())?;
    let factors: Vec<_> = left.factors.iter().map(|(a, b)| (b.involution(), a.involution())).collect();
    let epsilon = left.epsilon.involution();
    check_unit(x, &epsilon, &factors, -d, false)?;
    Ok(LocalUnit { epsilon, factors })
}

pub fn local_units(x: &AlgebraElement) -> Result<LocalUnitPair> {
    Ok(LocalUnitPair { left: local_unit_left(x)?, right: local_unit_right(x)? })
}

fn check_unit(
    x: &AlgebraElement,
    epsilon: &AlgebraElement,
    factors: &[(AlgebraElement, AlgebraElement)],
    d: i64,
    left: bool,
) -> Result<()> {
    let fixed = if left { epsilon.mul(x) } else { x.mul(epsilon) };
    if &fixed != x {
        return Err(Error::InternalVerificationFailure(format!("local unit {epsilon} does not fix {x}")));
    }
    let sum = factors.iter().fold(AlgebraElement::zero(x.algebra()), |acc, (a, b)| acc.add(&a.mul(b)));
    if &sum != epsilon {
        return Err(Error::InternalVerificationFailure(format!("factors do not multiply to {epsilon}")));
    }
    for (a, b) in factors {
        let ok = a.is_zero() || a.degree() == Some(d);
        let ok = ok && (b.is_zero() || b.degree() == Some(-d));
        if !ok {
            return Err(Error::InternalVerificationFailure(format!("factor pair ({a}, {b}) has wrong degrees")));
        }
    }
    Ok(())
}

/// Local unit of `x` in a relative Cohn algebra, pulled back from `L(E(X))`.
fn transported_unit(x: &AlgebraElement) -> Result<LocalUnit> {
    let alg = x.algebra();
    let phi = cohn_to_leavitt(alg.relative_graph(), alg.ring())?;
    let unit = local_unit_left(&phi.apply(x))?;
    let pull = |y: &AlgebraElement| -> Result<AlgebraElement> {
        phi.preimage(y, y.max_len() + 1)?.ok_or_else(|| {
            Error::InternalVerificationFailure(format!("{y} has no preimage in {}", alg.name()))
        })
    };
    let factors = unit
        .factors
        .iter()
        .map(|(a, b)| Ok((pull(a)?, pull(b)?)))
        .collect::<Result<Vec<_>>>()?;
    let epsilon = factors.iter().fold(AlgebraElement::zero(alg), |acc, (a, b)| acc.add(&a.mul(b)));
    check_unit(x, &epsilon, &factors, x.degree().expect("homogeneous"), true)?;
    Ok(LocalUnit { epsilon, factors })
}

/// Idempotent `y` and coefficients `u_i` with `y = Σ u_i c_i` and
/// `M y = Σ M c_i` in a full matrix ring `M`.
///
/// Generators are absorbed one at a time: with `e` idempotent and `f` the next
/// generator, `g = f(1-e)` has a witness `w`, `h = wg` is an idempotent with
/// `he = 0`, and `e + (1-e)h` generates `Me + Mf`.
pub fn idempotent_generator_block(ring: &Ring, gens: &[Matrix]) -> Result<(Matrix, Vec<Matrix>)> {
    let n = gens.first().map_or(0, Matrix::rows);
    let id = Matrix::identity(ring, n);
    let zero = Matrix::zeros(ring, n, n);
    let mut e = zero.clone();
    let mut coeffs = vec![zero.clone(); gens.len()];
    for (j, f) in gens.iter().enumerate() {
        let comp = id.sub(ring, &e);
        let g = f.mul(ring, &comp);
        let w = matrix_vnr_witness(ring, &g)?
            .ok_or_else(|| Error::CoefficientRingNotVnr(format!("{} has no witness over {}", g.format(ring), ring.name())))?;
        let h = w.mul(ring, &g);
        // h = w c_j - Σ_i (w f p_i) c_i
        let wf = w.mul(ring, f);
        let mut q: Vec<Matrix> = coeffs.iter().map(|p| zero.sub(ring, &wf.mul(ring, p))).collect();
        q[j] = q[j].add(ring, &w);
        for (p, qi) in coeffs.iter_mut().zip(&q) {
            *p = p.add(ring, &comp.mul(ring, qi));
        }
        e = e.add(ring, &comp.mul(ring, &h));
    }
    assert_eq!(e.mul(ring, &e), e, "generator is not idempotent");
    let sum = coeffs.iter().zip(gens).fold(zero, |acc, (u, c)| acc.add(ring, &u.mul(ring, c)));
    assert_eq!(sum, e, "coefficients do not reproduce the generator");
    for c in gens {
        assert_eq!(&c.mul(ring, &e), c, "generator does not absorb an input");
    }
    Ok((e, coeffs))
}

/// Blockwise [`idempotent_generator_block`] on images in `D_N`.
pub fn idempotent_generator(
    ring: &Ring,
    gens: &[MatricialImage],
) -> Result<(MatricialImage, Vec<MatricialImage>)> {
    if let Some(a) = first_irregular(ring) {
        return Err(Error::CoefficientRingNotVnr(format!("{} has no witness in {}", ring.format(a), ring.name())));
    }
    let template = gens.first().ok_or_else(|| Error::Unsupported("no generators".into()))?;
    let mut y = template.clone();
    let mut us: Vec<MatricialImage> = gens.to_vec();
    for b in 0..template.blocks.len() {
        let mats: Vec<Matrix> = gens.iter().map(|g| g.blocks[b].matrix.clone()).collect();
        let (e, coeffs) = idempotent_generator_block(ring, &mats)?;
        y.blocks[b].matrix = e;
        for (u, c) in us.iter_mut().zip(coeffs) {
            u.blocks[b].matrix = c;
        }
    }
    Ok((y, us))
}

/// Least element of `ring` without a von Neumann witness.
fn first_irregular(ring: &Ring) -> Option<RingElement> {
    ring.elements().find(|&a| vnr_witness(ring, a).is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Constructive,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Constructive => "constructive",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<E> {
    Witness(E),
    /// No witness supported on `searched`; `exact` when that set spans the
    /// whole component.
    Absent { exact: bool, searched: String },
}

/// Result of a witness computation for one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCertificate<E> {
    pub element: E,
    pub degree: i64,
    pub method: Method,
    pub outcome: Outcome<E>,
    pub bounds: String,
    pub verified: bool,
}

impl<E: fmt::Display> WitnessCertificate<E> {
    pub fn witness(&self) -> Option<&E> {
        match &self.outcome {
            Outcome::Witness(b) => Some(b),
            Outcome::Absent { .. } => None,
        }
    }

    pub fn is_exact_absence(&self) -> bool {
        matches!(self.outcome, Outcome::Absent { exact: true, .. })
    }

    pub fn record(&self) -> CertificateRecord {
        let (witness, absence) = match &self.outcome {
            Outcome::Witness(b) => (Some(b.to_string()), None),
            Outcome::Absent { exact, searched } => (
                None,
                Some(format!("{} ({searched})", if *exact { "exact" } else { "at bound" })),
            ),
        };
        CertificateRecord {
            element: self.element.to_string(),
            degree: self.degree,
            method: self.method,
            witness,
            absence,
            bounds: self.bounds.clone(),
            verified: self.verified,
        }
    }
}

/// Flat form of a certificate with a fixed field order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub element: String,
    pub degree: i64,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub absence: Option<String>,
    pub bounds: String,
    pub verified: bool,
}

impl fmt::Display for CertificateRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "element: {}", self.element)?;
        writeln!(f, "degree: {}", self.degree)?;
        writeln!(f, "method: {}", self.method)?;
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {w}")?;
        }
        if let Some(a) = &self.absence {
            writeln!(f, "absence: {a}")?;
        }
        writeln!(f, "bounds: {}", self.bounds)?;
        write!(f, "verified: {}", self.verified)
    }
}

pub type PathCertificate = WitnessCertificate<AlgebraElement>;

fn witness_certificate(
    x: &AlgebraElement,
    degree: i64,
    b: AlgebraElement,
    method: Method,
    bounds: String,
) -> Result<PathCertificate> {
    if &x.mul(&b).mul(x) != x {
        return Err(Error::InternalVerificationFailure(format!("{x} · {b} · {x} != {x}")));
    }
    Ok(WitnessCertificate { element: x.clone(), degree, method, outcome: Outcome::Witness(b), bounds, verified: true })
}

/// The constructive algorithm; requires a von Neumann regular coefficient ring.
pub fn graded_witness_constructive(x: &AlgebraElement) -> Result<PathCertificate> {
    let alg = x.algebra();
    let ring = alg.ring();
    if let Some(a) = first_irregular(ring) {
        return Err(Error::CoefficientRingNotVnr(format!("{} has no witness in {}", ring.format(a), ring.name())));
    }
    if x.is_zero() {
        return witness_certificate(x, 0, x.clone(), Method::Constructive, "none".into());
    }
    let d = x.degree().ok_or(Error::NotHomogeneous)?;
    if !alg.is_leavitt() {
        let phi = cohn_to_leavitt(alg.relative_graph(), ring)?;
        let image = graded_witness_constructive(&phi.apply(x))?;
        let b_img = image.witness().expect("constructive certificates carry witnesses");
        let b = phi.preimage(b_img, b_img.max_len() + 1)?.ok_or_else(|| {
            Error::InternalVerificationFailure(format!("witness {b_img} has no preimage"))
        })?;
        return witness_certificate(x, d, b, Method::Constructive, format!("{} via E(X)", image.bounds));
    }
    if d < 0 && ring.is_commutative() {
        let mirrored = graded_witness_constructive(&x.involution())?;
        let b = mirrored.witness().expect("witness").involution();
        return witness_certificate(x, d, b, Method::Constructive, mirrored.bounds);
    }
    let unit = local_unit_left(x)?;
    let cs: Vec<AlgebraElement> = unit.factors.iter().map(|(_, b)| b.mul(x)).collect();
    let n = cs.iter().map(|c| c.filtration_level()).collect::<Result<Vec<_>>>()?.into_iter().max().unwrap_or(0);
    let images = cs.iter().map(|c| matricial_decompose(c, n)).collect::<Result<Vec<_>>>()?;
    let (_, us) = idempotent_generator(ring, &images)?;
    let r = us
        .iter()
        .zip(&unit.factors)
        .fold(AlgebraElement::zero(alg), |acc, (u, (_, b))| acc.add(&matricial_lift(alg, u).mul(b)));
    witness_certificate(x, d, r, Method::Constructive, format!("N={n}"))
}

/// Solves `x b x = x` for `b` in the span of reduced monomials of degree `-d`
/// with both lengths at most `bound`.
pub fn graded_witness_oracle(x: &AlgebraElement, bound: usize) -> Result<PathCertificate> {
    let alg = x.algebra();
    let ring = alg.ring();
    if x.is_zero() {
        return witness_certificate(x, 0, x.clone(), Method::Oracle, format!("n={bound}"));
    }
    let d = x.degree().ok_or(Error::NotHomogeneous)?;
    let span = alg.reduced_monomials_of_degree(-d, bound);
    let mut rows: BTreeMap<Monomial, Vec<LinearTerm>> = BTreeMap::new();
    for (j, m) in span.iter().enumerate() {
        let mono = AlgebraElement::monomial(alg, m.clone(), ring.one());
        for (mi, &ri) in x.terms() {
            let left = AlgebraElement::monomial(alg, mi.clone(), ring.one()).mul(&mono);
            if left.is_zero() {
                continue;
            }
            for (mk, &rk) in x.terms() {
                let prod = left.mul(&AlgebraElement::monomial(alg, mk.clone(), ring.one()));
                for (out, &kappa) in prod.terms() {
                    // kappa is an integer multiple of 1, hence central
                    rows.entry(out.clone())
                        .or_default()
                        .push(LinearTerm::sandwich(ring.mul(ri, kappa), j, rk));
                }
            }
        }
    }
    let mut sys = LinearSystem::new(span.len());
    let mut targets: Vec<Monomial> = x.terms().keys().cloned().collect();
    targets.extend(rows.keys().cloned());
    targets.sort();
    targets.dedup();
    for t in targets {
        sys.push(rows.remove(&t).unwrap_or_default(), x.coefficient(&t));
    }
    let exact = alg.graph().longest_path_len().is_some_and(|l| bound >= l);
    let bounds = format!("n={bound}");
    match solve_linear_system(ring, &sys)? {
        Some(z) => {
            let b = AlgebraElement::from_terms(alg, span.into_iter().zip(z));
            witness_certificate(x, d, b, Method::Oracle, bounds)
        }
        None => Ok(WitnessCertificate {
            element: x.clone(),
            degree: d,
            method: Method::Oracle,
            outcome: Outcome::Absent {
                exact,
                searched: format!("{} reduced monomials of degree {} with lengths <= {bound}", span.len(), -d),
            },
            bounds,
            verified: true,
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictConfig {
    pub degree_bound: usize,
    pub size_bound: usize,
    pub samples: usize,
    pub seed: u64,
    /// `None` picks constructive for regular coefficient rings, oracle otherwise.
    pub method: Option<Method>,
}

impl Default for VerdictConfig {
    fn default() -> Self {
        VerdictConfig { degree_bound: 3, size_bound: 3, samples: 100, seed: 0, method: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every examined element has a verified witness.
    VerifiedAtBounds,
    /// Index into the certificates of the first element without a witness.
    Counterexample { index: usize, exact: bool },
}

#[derive(Clone, Debug)]
pub struct VerdictReport {
    pub algebra: String,
    pub method: Method,
    pub certificates: Vec<PathCertificate>,
    pub verdict: Verdict,
}

impl VerdictReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::VerifiedAtBounds
    }
}

/// Elements examined by [`graded_vnr_verdict`]: every reduced monomial in the
/// bounds, `c·u` for each vertex `u` and each coefficient `c` without a
/// witness in `R`, and seeded random homogeneous combinations.
pub fn verdict_elements(alg: &Algebra, cfg: &VerdictConfig) -> Vec<AlgebraElement> {
    let ring = alg.ring();
    let bound = cfg.degree_bound as i64;
    let monomials: Vec<Monomial> = alg
        .reduced_monomials(cfg.size_bound)
        .into_iter()
        .filter(|m| m.degree().abs() <= bound)
        .collect();
    let mut out: Vec<AlgebraElement> =
        monomials.iter().map(|m| AlgebraElement::monomial(alg, m.clone(), ring.one())).collect();
    for c in ring.elements().filter(|&c| vnr_witness(ring, c).is_none()) {
        for v in alg.graph().vertices() {
            out.push(AlgebraElement::vertex(alg, v).scale(c));
        }
    }
    let mut pools: BTreeMap<i64, Vec<Monomial>> = BTreeMap::new();
    for m in monomials {
        pools.entry(m.degree()).or_default().push(m);
    }
    let pools: Vec<Vec<Monomial>> = pools.into_values().collect();
    if pools.is_empty() {
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut drawn = 0;
    let mut attempts = 0;
    while drawn < cfg.samples && attempts < cfg.samples * 20 {
        attempts += 1;
        let pool = pools.choose(&mut rng).expect("nonempty");
        let terms = rng.gen_range(1..=3);
        let x = AlgebraElement::random_from_pool(alg, &mut rng, pool, terms);
        if !x.is_zero() {
            out.push(x);
            drawn += 1;
        }
    }
    out
}

pub fn graded_vnr_verdict(alg: &Algebra, cfg: &VerdictConfig) -> Result<VerdictReport> {
    let method = cfg.method.unwrap_or(if is_vnr(alg.ring()).is_regular() {
        Method::Constructive
    } else {
        Method::Oracle
    });
    let elements = verdict_elements(alg, cfg);
    let certificates = elements
        .par_iter()
        .map(|x| match method {
            Method::Constructive => graded_witness_constructive(x),
            Method::Oracle => graded_witness_oracle(x, cfg.size_bound),
        })
        .collect::<Result<Vec<_>>>()?;
    let verdict = certificates
        .iter()
        .position(|c| c.witness().is_none())
        .map_or(Verdict::VerifiedAtBounds, |index| Verdict::Counterexample {
            index,
            exact: certificates[index].is_exact_absence(),
        });
    Ok(VerdictReport { algebra: alg.name(), method, certificates, verdict })
}
