//! Ground truth by literal computation, and the deterministic random instance
//! stream the verification suites draw from.
//!
//! Nothing here consults [`crate::structure`]: levels come from repeated
//! differentiation, Hermite operators from the Gaussian-weighted definition.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::expr::{Expr, SRPoly};
use crate::quat::{default_probes, int, rat, ImagUnit, ProbePair, Quaternion, Rational};
use crate::slice::{dbar, restrict, restrict_srpoly, Level, SlicePoly};

/// Restricts `e` to `C_I` and applies `dbar` until the result vanishes.
pub fn brute_level(e: &Expr, unit: &ImagUnit) -> Level {
    brute_level_poly(&restrict(e, unit))
}

pub fn brute_level_poly(p: &SlicePoly) -> Level {
    if p.is_zero() {
        return Level::ZeroFunction;
    }
    // each application lowers the total degree, so this many steps suffice
    let cap = p.total_degree() + 1;
    let mut cur = p.clone();
    let mut steps = 0;
    loop {
        let next = dbar(&cur);
        if next.is_zero() {
            return Level::Lev(steps);
        }
        steps += 1;
        assert!(steps <= cap, "dbar failed to terminate");
        cur = next;
    }
}

pub fn brute_dbar_pow(p: &SlicePoly, k: u32) -> SlicePoly {
    let mut cur = p.clone();
    for _ in 0..k {
        cur = dbar(&cur);
    }
    cur
}

/// `sum_j binom(k, j) I^j a I^j` with powers of `I` and binomials built from
/// scratch.
pub fn s_sum_direct(unit: &ImagUnit, alpha: &Quaternion, k: u32) -> Quaternion {
    let mut row = vec![int(1)];
    for _ in 0..k {
        let mut next = vec![int(1); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    let mut acc = Quaternion::zero();
    for (j, c) in row.iter().enumerate() {
        let ij = unit.value().pow(j as u32);
        acc += &(&ij * alpha * &ij).scale(c);
    }
    acc
}

/// `(-1)^k e^{|q|^2} dslice^k (e^{-|q|^2} F)` on `C_I`, carrying the Gaussian
/// as an explicit factor: a weighted function `P e^{-(x^2+y^2)}` is stored as
/// `P` and differentiated with `d/dx (P w) = (P_x - 2x P) w`.
pub fn hermite_weighted(f: &SRPoly, k: u32, unit: &ImagUnit) -> SlicePoly {
    let x = SlicePoly::from_terms(unit, [((1, 0), Quaternion::one())]);
    let y = SlicePoly::from_terms(unit, [((0, 1), Quaternion::one())]);
    let two = int(2);
    let mut p = restrict_srpoly(f, unit);
    for _ in 0..k {
        let wx = p.partial_x().sub(&x.mul(&p).scale(&two));
        let wy = p.partial_y().sub(&y.mul(&p).scale(&two));
        p = wx.sub(&wy.left_mul(unit.value())).scale(&rat(1, 2));
    }
    if k % 2 == 1 {
        p.neg()
    } else {
        p
    }
}

/// Parameters of a reproducible instance stream.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RandomSpec {
    pub seed: u64,
    pub max_degree: u32,
    pub max_power: u32,
    pub coeff_bound: u32,
    pub trials: u32,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec { seed: 0xC0FFEE, max_degree: 6, max_power: 5, coeff_bound: 9, trials: 200 }
    }
}

impl RandomSpec {
    /// Default spec with the suite's trial count.
    pub fn for_suite(name: &str) -> Self {
        let trials = match name {
            "lemS" | "parser" => 500,
            "prodSR" => 2500,
            _ => 200,
        };
        RandomSpec { trials, ..RandomSpec::default() }
    }
}

/// Degenerate instance classes every suite exercises.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Degenerate {
    Zero,
    Real,
    /// Lies in the slice `C_I` of the accompanying probe.
    InSlice,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InstanceKind {
    Quat,
    ImagUnitChoice,
    SRPolyKind,
    GenericKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Instance {
    Quat(Quaternion),
    Probe(ProbePair),
    SRPoly(SRPoly),
    Generic { n: u32, m: u32, alpha: Quaternion },
}

/// First draw of the stream seeded by `spec`.
pub fn random_instance(spec: &RandomSpec, kind: InstanceKind) -> Instance {
    let mut g = Gen::new(spec);
    match kind {
        InstanceKind::Quat => Instance::Quat(g.quat(None)),
        InstanceKind::ImagUnitChoice => Instance::Probe(g.probe()),
        InstanceKind::SRPolyKind => Instance::SRPoly(g.srpoly(spec.max_degree, None)),
        InstanceKind::GenericKind => {
            let (n, m, alpha) = g.generic();
            Instance::Generic { n, m, alpha }
        }
    }
}

/// Seeded generator with exact rational draws.
pub struct Gen {
    rng: ChaCha8Rng,
    spec: RandomSpec,
    probes: Vec<ProbePair>,
}

impl Gen {
    pub fn new(spec: &RandomSpec) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(spec.seed), spec: spec.clone(), probes: default_probes() }
    }

    pub fn spec(&self) -> &RandomSpec {
        &self.spec
    }

    pub fn probes(&self) -> &[ProbePair] {
        &self.probes
    }

    pub fn below(&mut self, n: u32) -> u32 {
        self.rng.gen_range(0..n)
    }

    pub fn range(&mut self, lo: u32, hi: u32) -> u32 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn rational(&mut self) -> Rational {
        let b = self.spec.coeff_bound.max(1) as i64;
        let n = self.rng.gen_range(-b..=b);
        let d = self.rng.gen_range(1..=b);
        rat(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    fn generic_quat(&mut self) -> Quaternion {
        Quaternion::new(self.rational(), self.rational(), self.rational(), self.rational())
    }

    /// One of the degenerate classes at 10% each, else a generic draw.
    /// `InSlice` uses `unit`, or a random probe when none is given.
    pub fn quat(&mut self, unit: Option<&ImagUnit>) -> Quaternion {
        let roll = self.below(10);
        let class = match roll {
            0 => Some(Degenerate::Zero),
            1 => Some(Degenerate::Real),
            2 => Some(Degenerate::InSlice),
            _ => None,
        };
        self.quat_of(class, unit)
    }

    pub fn quat_of(&mut self, class: Option<Degenerate>, unit: Option<&ImagUnit>) -> Quaternion {
        match class {
            Some(Degenerate::Zero) => Quaternion::zero(),
            Some(Degenerate::Real) => Quaternion::real(self.nonzero_rational()),
            Some(Degenerate::InSlice) => {
                let u = match unit {
                    Some(u) => u.clone(),
                    None => self.probe().i,
                };
                self.slice_quat(&u)
            }
            None => self.generic_quat(),
        }
    }

    /// `s + t I` with `t != 0`.
    pub fn slice_quat(&mut self, unit: &ImagUnit) -> Quaternion {
        Quaternion::real(self.rational()) + unit.value().scale(&self.nonzero_rational())
    }

    /// Nonreal with a nonzero part perpendicular to some probe.
    pub fn nonreal_quat(&mut self) -> Quaternion {
        loop {
            let q = self.generic_quat();
            if !q.is_real() {
                return q;
            }
        }
    }

    pub fn probe(&mut self) -> ProbePair {
        let idx = self.below(self.probes.len() as u32) as usize;
        self.probes[idx].clone()
    }

    /// Polynomial of degree at most `max_degree`; coefficients drawn with the
    /// degenerate mix unless `class` pins them.
    pub fn srpoly(&mut self, max_degree: u32, class: Option<Degenerate>) -> SRPoly {
        let deg = self.range(0, max_degree);
        let unit = self.probe().i;
        let coeffs = (0..=deg)
            .map(|_| match class {
                Some(c) => self.quat_of(Some(c), Some(&unit)),
                None => self.quat(Some(&unit)),
            })
            .collect();
        SRPoly::new(coeffs)
    }

    /// Nonzero polynomial with exact degree `deg` and generic coefficients.
    pub fn srpoly_exact(&mut self, deg: u32) -> SRPoly {
        let mut coeffs: Vec<Quaternion> = (0..deg).map(|_| self.quat(None)).collect();
        let mut top = self.generic_quat();
        while top.is_zero() {
            top = self.generic_quat();
        }
        coeffs.push(top);
        SRPoly::new(coeffs)
    }

    pub fn real_srpoly(&mut self, max_degree: u32) -> SRPoly {
        let deg = self.range(0, max_degree);
        SRPoly::new((0..=deg).map(|_| Quaternion::real(self.rational())).collect())
    }

    /// `C_I`-valued coefficients with a nonzero leading one.
    pub fn slice_srpoly(&mut self, deg: u32, unit: &ImagUnit) -> SRPoly {
        let mut coeffs: Vec<Quaternion> = (0..deg)
            .map(|_| Quaternion::real(self.rational()) + unit.value().scale(&self.rational()))
            .collect();
        coeffs.push(self.slice_quat(unit));
        SRPoly::new(coeffs)
    }

    /// `(n, m, alpha)` with `n, m <= max_power`.
    pub fn generic(&mut self) -> (u32, u32, Quaternion) {
        let n = self.range(0, self.spec.max_power);
        let m = self.range(0, self.spec.max_power);
        let alpha = self.quat(None);
        (n, m, alpha)
    }

    /// Random slice polynomial with at most `terms` monomials of total degree
    /// `<= max_degree`.
    pub fn slice_poly(&mut self, unit: &ImagUnit, terms: u32) -> SlicePoly {
        let d = self.spec.max_degree;
        let count = self.range(0, terms);
        let items: Vec<_> = (0..count)
            .map(|_| {
                let a = self.range(0, d);
                let b = self.range(0, d - a);
                ((a, b), self.quat(Some(unit)))
            })
            .collect();
        SlicePoly::from_terms(unit, items)
    }

    /// A random tree in parser-normal shape: sums and products have at least
    /// two children, and no sum child is a bare constant after the first one
    /// unless its printed form round-trips.
    pub fn expr(&mut self, depth: u32) -> Expr {
        let leaf = depth == 0 || self.chance(0.3);
        if leaf {
            return match self.below(4) {
                0 => Expr::Var,
                1 => Expr::VarBar,
                2 => Expr::Const(self.quat(None)),
                _ => {
                    let (n, m, alpha) = self.generic();
                    Expr::generic(n, m, alpha)
                }
            };
        }
        match self.below(3) {
            0 => {
                let count = self.range(2, 3);
                let mut xs: Vec<Expr> = (0..count).map(|_| self.expr(depth - 1)).collect();
                // a difference `a - b` is how negated non-constants are spelled
                if self.chance(0.3) {
                    let x = xs.pop().unwrap();
                    if !matches!(x, Expr::Const(_)) {
                        xs.push(Expr::Product(vec![Expr::Const(Quaternion::from(-1)), x]));
                    } else {
                        xs.push(x);
                    }
                }
                Expr::Sum(xs)
            }
            1 => {
                let count = self.range(2, 3);
                Expr::Product((0..count).map(|_| self.expr(depth - 1)).collect())
            }
            _ => {
                let n = self.range(0, 3);
                Expr::power(self.expr(depth - 1), n)
            }
        }
    }

    /// Random rational point on a slice, `x + I y`.
    pub fn slice_point(&mut self) -> (Rational, Rational) {
        (self.rational(), self.rational())
    }
}

/// The first three trials of every suite are pinned to the degenerate
/// classes; later trials use the random mix.
pub fn pinned_class(trial: u32) -> Option<Degenerate> {
    match trial {
        0 => Some(Degenerate::Zero),
        1 => Some(Degenerate::Real),
        2 => Some(Degenerate::InSlice),
        _ => None,
    }
}
