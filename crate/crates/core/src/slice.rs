//! Restriction of expressions to a slice `C_I`, the slice Cauchy-Riemann
//! operators, exact levels, and the splitting / q-bar Taylor decompositions.
//!
//! On `C_I` every function is kept as `sum c_ab x^a y^b` with quaternion
//! coefficients on the left and `q = x + I y`. The monomials are real, so
//! products of restrictions only multiply coefficients in order. Both
//! operators act with `I` on the left:
//!
//! ```text
//! dbar = (d/dx + I d/dy) / 2        dslice = (d/dx - I d/dy) / 2
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::Error;
use crate::expr::{Expr, SRPoly};
use crate::quat::{int, perp_decompose, rat, ImagUnit, ProbePair, Quaternion, Rational, SliceComplex};

pub type Monomial = (u32, u32);

/// Exact restriction of a function to the slice `C_I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlicePoly {
    unit: ImagUnit,
    coeffs: BTreeMap<Monomial, Quaternion>,
}

impl SlicePoly {
    pub fn zero(unit: &ImagUnit) -> Self {
        SlicePoly { unit: unit.clone(), coeffs: BTreeMap::new() }
    }

    pub fn constant(unit: &ImagUnit, c: Quaternion) -> Self {
        SlicePoly::from_terms(unit, [((0, 0), c)])
    }

    /// `q = x + I y`.
    pub fn var(unit: &ImagUnit) -> Self {
        SlicePoly::from_terms(unit, [((1, 0), Quaternion::one()), ((0, 1), unit.value().clone())])
    }

    /// `qbar = x - I y`.
    pub fn var_bar(unit: &ImagUnit) -> Self {
        SlicePoly::from_terms(unit, [((1, 0), Quaternion::one()), ((0, 1), -unit.value())])
    }

    /// Sums coefficients of repeated monomials and drops zeros.
    pub fn from_terms(unit: &ImagUnit, terms: impl IntoIterator<Item = (Monomial, Quaternion)>) -> Self {
        let mut p = SlicePoly::zero(unit);
        for (mono, c) in terms {
            p.add_term(mono, &c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, c: &Quaternion) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(mono).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&mono);
        }
    }

    pub fn unit(&self) -> &ImagUnit {
        &self.unit
    }

    pub fn coeffs(&self) -> &BTreeMap<Monomial, Quaternion> {
        &self.coeffs
    }

    pub fn coeff(&self, a: u32, b: u32) -> Quaternion {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_y_degree(&self) -> u32 {
        self.coeffs.keys().map(|&(_, b)| b).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.coeffs.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    fn same_slice(&self, other: &SlicePoly) {
        assert_eq!(self.unit, other.unit, "slice polynomials on different slices");
    }

    pub fn add(&self, other: &SlicePoly) -> SlicePoly {
        self.same_slice(other);
        let mut out = self.clone();
        for (&mono, c) in &other.coeffs {
            out.add_term(mono, c);
        }
        out
    }

    pub fn sub(&self, other: &SlicePoly) -> SlicePoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SlicePoly {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, r: &Rational) -> SlicePoly {
        self.map_coeffs(|c| c.scale(r))
    }

    /// `c * p`.
    pub fn left_mul(&self, c: &Quaternion) -> SlicePoly {
        self.map_coeffs(|x| c * x)
    }

    /// `p * c`.
    pub fn right_mul(&self, c: &Quaternion) -> SlicePoly {
        self.map_coeffs(|x| x * c)
    }

    fn map_coeffs(&self, f: impl Fn(&Quaternion) -> Quaternion) -> SlicePoly {
        SlicePoly::from_terms(&self.unit, self.coeffs.iter().map(|(&m, c)| (m, f(c))))
    }

    /// Pointwise product, order preserved.
    ///
    /// Works on integer numerators over one shared denominator per factor,
    /// reducing each output component once.
    pub fn mul(&self, other: &SlicePoly) -> SlicePoly {
        self.same_slice(other);
        let (lhs, da) = integer_terms(self);
        let (rhs, db) = integer_terms(other);
        let mut acc: BTreeMap<Monomial, [BigInt; 4]> = BTreeMap::new();
        for ((a1, b1), [aw, ax, ay, az]) in &lhs {
            for ((a2, b2), [bw, bx, by, bz]) in &rhs {
                let e = acc.entry((a1 + a2, b1 + b2)).or_default();
                e[0] += aw * bw - ax * bx - ay * by - az * bz;
                e[1] += aw * bx + ax * bw + ay * bz - az * by;
                e[2] += aw * by - ax * bz + ay * bw + az * bx;
                e[3] += aw * bz + ax * by - ay * bx + az * bw;
            }
        }
        let d = da * db;
        let terms = acc.into_iter().map(|(m, [w, x, y, z])| {
            let r = |n: BigInt| Rational::new(n, d.clone());
            (m, Quaternion::new(r(w), r(x), r(y), r(z)))
        });
        SlicePoly::from_terms(&self.unit, terms)
    }

    pub fn pow(&self, n: u32) -> SlicePoly {
        (0..n).fold(SlicePoly::constant(&self.unit, Quaternion::one()), |acc, _| acc.mul(self))
    }

    pub fn partial_x(&self) -> SlicePoly {
        SlicePoly::from_terms(
            &self.unit,
            self.coeffs
                .iter()
                .filter(|(&(a, _), _)| a > 0)
                .map(|(&(a, b), c)| ((a - 1, b), c.scale(&int(a as i64)))),
        )
    }

    pub fn partial_y(&self) -> SlicePoly {
        SlicePoly::from_terms(
            &self.unit,
            self.coeffs
                .iter()
                .filter(|(&(_, b), _)| b > 0)
                .map(|(&(a, b), c)| ((a, b - 1), c.scale(&int(b as i64)))),
        )
    }

    /// Value at `q = x + I y`.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Quaternion {
        let mut acc = Quaternion::zero();
        for (&(a, b), c) in &self.coeffs {
            let w = num_traits::pow(x.clone(), a as usize) * num_traits::pow(y.clone(), b as usize);
            acc += &c.scale(&w);
        }
        acc
    }

    /// Terms in `(a + b, a)` order, the serialization order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, &Quaternion)> {
        let mut terms: Vec<_> = self.coeffs.iter().map(|(&m, c)| (m, c)).collect();
        terms.sort_by_key(|&((a, b), _)| (a + b, a));
        terms
    }

    /// `{"I": "<literal>", "terms": [{"a": .., "b": .., "c": ".."}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|((a, b), c)| json!({"a": a, "b": b, "c": c.to_string()}))
            .collect();
        json!({"I": self.unit.to_string(), "terms": terms})
    }
}

impl fmt::Display for SlicePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|((a, b), c)| {
                let mut s = format!("({c})");
                if a > 0 {
                    s.push_str(&if a == 1 { "x".to_string() } else { format!("x^{a}") });
                }
                if b > 0 {
                    s.push_str(&if b == 1 { "y".to_string() } else { format!("y^{b}") });
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Coefficients as integer 4-tuples over the lcm of all denominators.
fn integer_terms(p: &SlicePoly) -> (Vec<(Monomial, [BigInt; 4])>, BigInt) {
    let parts = |c: &Quaternion| [c.w.clone(), c.x.clone(), c.y.clone(), c.z.clone()];
    let d = p
        .coeffs
        .values()
        .flat_map(parts)
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let terms = p
        .coeffs
        .iter()
        .map(|(&m, c)| (m, parts(c).map(|r| r.numer() * (&d / r.denom()))))
        .collect();
    (terms, d)
}

/// Polyregularity level of a single function.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Level {
    ZeroFunction,
    Lev(u32),
}

impl Level {
    /// `None` for the zero function.
    pub fn value(self) -> Option<u32> {
        match self {
            Level::ZeroFunction => None,
            Level::Lev(k) => Some(k),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::ZeroFunction => write!(f, "zero"),
            Level::Lev(k) => write!(f, "{k}"),
        }
    }
}

/// Expands every `q` as `x + I y` and every `qbar` as `x - I y`.
pub fn restrict(e: &Expr, unit: &ImagUnit) -> SlicePoly {
    match e {
        Expr::Var => SlicePoly::var(unit),
        Expr::VarBar => SlicePoly::var_bar(unit),
        Expr::Const(c) => SlicePoly::constant(unit, c.clone()),
        Expr::Sum(xs) => xs.iter().fold(SlicePoly::zero(unit), |acc, x| acc.add(&restrict(x, unit))),
        Expr::Product(xs) => xs
            .iter()
            .fold(SlicePoly::constant(unit, Quaternion::one()), |acc, x| acc.mul(&restrict(x, unit))),
        Expr::Power(b, n) => restrict(b, unit).pow(*n),
        Expr::Generic { n, m, alpha } => {
            let q = SlicePoly::var(unit);
            q.pow(*n).right_mul(alpha).mul(&q.pow(*m))
        }
    }
}

/// `sum_n q^n a_n` on `C_I`, building the powers of `q` incrementally.
pub fn restrict_srpoly(p: &SRPoly, unit: &ImagUnit) -> SlicePoly {
    let q = SlicePoly::var(unit);
    let mut pw = SlicePoly::constant(unit, Quaternion::one());
    let mut acc = SlicePoly::zero(unit);
    for (n, c) in p.coeffs().iter().enumerate() {
        if n > 0 {
            pw = pw.mul(&q);
        }
        if !c.is_zero() {
            acc = acc.add(&pw.right_mul(c));
        }
    }
    acc
}

/// `(d/dx + sign I d/dy) / 2`, accumulated on integer numerators over the
/// denominator `2 D d_I`.
fn half_derivative(p: &SlicePoly, sign: i64) -> SlicePoly {
    let (terms, d) = integer_terms(p);
    let unit = SlicePoly::constant(&p.unit, p.unit.value().clone());
    let (iu, di) = integer_terms(&unit);
    let [iw, ix, iy, iz] = &iu[0].1;
    let mut acc: BTreeMap<Monomial, [BigInt; 4]> = BTreeMap::new();
    for ((a, b), [w, x, y, z]) in &terms {
        if *a > 0 {
            let e = acc.entry((a - 1, *b)).or_default();
            let f = BigInt::from(*a) * &di;
            for (slot, n) in e.iter_mut().zip([w, x, y, z]) {
                *slot += &f * n;
            }
        }
        if *b > 0 {
            let e = acc.entry((*a, b - 1)).or_default();
            let f = BigInt::from(sign * *b as i64);
            e[0] += &f * (iw * w - ix * x - iy * y - iz * z);
            e[1] += &f * (iw * x + ix * w + iy * z - iz * y);
            e[2] += &f * (iw * y - ix * z + iy * w + iz * x);
            e[3] += &f * (iw * z + ix * y - iy * x + iz * w);
        }
    }
    let den = d * di * BigInt::from(2);
    let out = acc.into_iter().map(|(m, [w, x, y, z])| {
        let r = |n: BigInt| Rational::new(n, den.clone());
        (m, Quaternion::new(r(w), r(x), r(y), r(z)))
    });
    SlicePoly::from_terms(&p.unit, out)
}

/// `(d/dx + I d/dy) / 2`.
pub fn dbar(p: &SlicePoly) -> SlicePoly {
    half_derivative(p, 1)
}

/// `(d/dx - I d/dy) / 2`.
pub fn dslice(p: &SlicePoly) -> SlicePoly {
    half_derivative(p, -1)
}

pub fn dbar_pow(p: &SlicePoly, k: u32) -> SlicePoly {
    (0..k).fold(p.clone(), |acc, _| dbar(&acc))
}

/// Largest `k` with `dbar^k p != 0`. Each application lowers the total
/// degree, so at most `1 + total degree` applications are needed. The
/// y-degree is no bound: `dbar x = 1/2`.
pub fn level_on_slice(p: &SlicePoly) -> Level {
    if p.is_zero() {
        return Level::ZeroFunction;
    }
    let mut cur = p.clone();
    for k in 0..=p.total_degree() {
        let next = dbar(&cur);
        if next.is_zero() {
            return Level::Lev(k);
        }
        cur = next;
    }
    unreachable!("dbar lowers the total degree of a nonzero polynomial")
}

/// Maximum of the per-slice levels over the probe set; a lower bound for the
/// supremum over the whole sphere.
pub fn global_level(e: &Expr, probes: &[ProbePair]) -> Result<Level, Error> {
    if probes.is_empty() {
        return Err(Error::EmptyProbeSet);
    }
    Ok(probes
        .iter()
        .map(|p| level_on_slice(&restrict(e, &p.i)))
        .max()
        .expect("nonempty"))
}

// ---------------------------------------------------------------------------
// Right-coefficient (qbar, q) form

fn cmul(a: &SliceComplex, b: &SliceComplex) -> SliceComplex {
    SliceComplex {
        s: &a.s * &b.s - &a.t * &b.t,
        t: &a.s * &b.t + &a.t * &b.s,
    }
}

type CPoly = BTreeMap<Monomial, SliceComplex>;

fn cpoly_mul(a: &CPoly, b: &CPoly) -> CPoly {
    let mut out = CPoly::new();
    for (&(j1, k1), c1) in a {
        for (&(j2, k2), c2) in b {
            let prod = cmul(c1, c2);
            let e = out.entry((j1 + j2, k1 + k2)).or_default();
            e.s += prod.s;
            e.t += prod.t;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `x^a y^b` as a commutative polynomial in `(qbar, q)` over `C_I`, keyed by
/// `(power of qbar, power of q)`.
fn monomial_in_q(a: u32, b: u32) -> CPoly {
    let half = rat(1, 2);
    let zero = Rational::zero();
    // x = (q + qbar)/2, y = -I (q - qbar)/2
    let x: CPoly = [
        ((1, 0), SliceComplex { s: half.clone(), t: zero.clone() }),
        ((0, 1), SliceComplex { s: half.clone(), t: zero.clone() }),
    ]
    .into();
    let y: CPoly = [
        ((1, 0), SliceComplex { s: zero.clone(), t: half.clone() }),
        ((0, 1), SliceComplex { s: zero, t: -half }),
    ]
    .into();
    let one: CPoly = [((0, 0), SliceComplex { s: Rational::one(), t: Rational::zero() })].into();
    let xs = (0..a).fold(one, |acc, _| cpoly_mul(&acc, &x));
    (0..b).fold(xs, |acc, _| cpoly_mul(&acc, &y))
}

/// Coefficients `e_jk` with `p = sum qbar^j q^k e_jk` on `C_I`. The part of a
/// left coefficient lying in `C_I` commutes with `q`; the perpendicular part
/// satisfies `c q = qbar c`, which swaps the roles of `j` and `k`.
pub fn to_right_form(p: &SlicePoly) -> BTreeMap<Monomial, Quaternion> {
    let unit = &p.unit;
    let mut out: BTreeMap<Monomial, Quaternion> = BTreeMap::new();
    for (&(a, b), c) in &p.coeffs {
        let split = perp_decompose(c, unit);
        for ((j, k), d) in monomial_in_q(a, b) {
            let dq = d.to_quaternion(unit);
            if !split.parallel.is_zero() {
                *out.entry((j, k)).or_default() += &(&dq * &split.parallel);
            }
            if !split.perp.is_zero() {
                *out.entry((k, j)).or_default() += &(dq.conj() * &split.perp);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Reads a slice-regular restriction back as `sum q^k a_k`.
pub fn read_srpoly(p: &SlicePoly) -> Result<SRPoly, Error> {
    let form = to_right_form(p);
    let mut coeffs = Vec::new();
    for ((j, k), e) in form {
        if j != 0 {
            return Err(Error::NotReducible(format!(
                "term qbar^{j} q^{k} survives in a slice regular reading"
            )));
        }
        let k = k as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Quaternion::zero());
        }
        coeffs[k] = e;
    }
    Ok(SRPoly::new(coeffs))
}

/// `f = sum_k qbar^k phi_k` on one slice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QbarDecomp {
    pub unit: ImagUnit,
    pub parts: Vec<SRPoly>,
}

impl QbarDecomp {
    pub fn reassemble(&self) -> SlicePoly {
        let bar = SlicePoly::var_bar(&self.unit);
        self.parts
            .iter()
            .enumerate()
            .fold(SlicePoly::zero(&self.unit), |acc, (k, phi)| {
                acc.add(&bar.pow(k as u32).mul(&restrict_srpoly(phi, &self.unit)))
            })
    }
}

fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}

/// Peels `phi_n = dbar^n(p) / n!` from the top level down.
pub fn qbar_taylor(p: &SlicePoly) -> Result<QbarDecomp, Error> {
    let unit = p.unit.clone();
    let bar = SlicePoly::var_bar(&unit);
    let mut rest = p.clone();
    let mut parts: Vec<SRPoly> = Vec::new();
    let mut last = None;
    while let Level::Lev(n) = level_on_slice(&rest) {
        if last.is_some_and(|prev| n >= prev) {
            return Err(Error::NotReducible(format!("level did not drop below {n}")));
        }
        last = Some(n);
        let phi = read_srpoly(&dbar_pow(&rest, n))?.scale(&factorial(n).recip());
        if parts.len() <= n as usize {
            parts.resize(n as usize + 1, SRPoly::zero());
        }
        rest = rest.sub(&bar.pow(n).mul(&restrict_srpoly(&phi, &unit)));
        parts[n as usize] = phi;
    }
    Ok(QbarDecomp { unit, parts })
}

// ---------------------------------------------------------------------------
// Splitting

/// `p = sum (F_ab + G_ab J) x^a y^b` with `F_ab, G_ab` in `C_I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitPair {
    pub i: ImagUnit,
    pub j: ImagUnit,
    pub f: BTreeMap<Monomial, SliceComplex>,
    pub g: BTreeMap<Monomial, SliceComplex>,
}

impl SplitPair {
    pub fn f_poly(&self) -> SlicePoly {
        SlicePoly::from_terms(&self.i, self.f.iter().map(|(&m, c)| (m, c.to_quaternion(&self.i))))
    }

    pub fn g_poly(&self) -> SlicePoly {
        SlicePoly::from_terms(&self.i, self.g.iter().map(|(&m, c)| (m, c.to_quaternion(&self.i))))
    }

    pub fn reassemble(&self) -> SlicePoly {
        self.f_poly().add(&self.g_poly().right_mul(self.j.value()))
    }

    pub fn to_json(&self) -> Value {
        let side = |m: &BTreeMap<Monomial, SliceComplex>| -> Vec<Value> {
            let mut terms: Vec<_> = m.iter().collect();
            terms.sort_by_key(|(&(a, b), _)| (a + b, a));
            terms
                .into_iter()
                .map(|(&(a, b), c)| json!({"a": a, "b": b, "s": crate::quat::fmt_rational(&c.s), "t": crate::quat::fmt_rational(&c.t)}))
                .collect()
        };
        json!({"I": self.i.to_string(), "J": self.j.to_string(), "F": side(&self.f), "G": side(&self.g)})
    }
}

/// `c = c_par + c_perpJ J` with `c_par = (c - IcI)/2` and
/// `c_perpJ = -(c + IcI) J / 2`, both in `C_I`.
pub fn split_poly(p: &SlicePoly, pair: &ProbePair) -> Result<SplitPair, Error> {
    if pair.i != p.unit {
        return Err(Error::SliceMismatch { poly: p.unit.to_string(), pair: pair.i.to_string() });
    }
    let unit = &pair.i;
    let mut f = BTreeMap::new();
    let mut g = BTreeMap::new();
    for (&mono, c) in &p.coeffs {
        let split = perp_decompose(c, unit);
        let gq = -(&split.perp * pair.j.value());
        let fc = SliceComplex::from_quaternion(&split.parallel, unit).expect("parallel part lies in C_I");
        let gc = SliceComplex::from_quaternion(&gq, unit).expect("perp part times J lies in C_I");
        if !fc.is_zero() {
            f.insert(mono, fc);
        }
        if !gc.is_zero() {
            g.insert(mono, gc);
        }
    }
    Ok(SplitPair { i: pair.i.clone(), j: pair.j.clone(), f, g })
}

// ---------------------------------------------------------------------------
// Hermite-type operators

/// `H_k = H_1^k` with `H_1(G) = qbar G - dslice(G)`; the Gaussian weight of
/// `(-1)^k e^{|q|^2} dslice^k(e^{-|q|^2} F)` cancels out of this recursion.
pub fn hermite_h(f: &SRPoly, k: u32, unit: &ImagUnit) -> SlicePoly {
    let bar = SlicePoly::var_bar(unit);
    (0..k).fold(restrict_srpoly(f, unit), |g, _| bar.mul(&g).sub(&dslice(&g)))
}

/// `binom(n, k)` as a rational.
pub fn binom(n: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(num_bigint::BigInt::from(n), num_bigint::BigInt::from(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;
    use crate::quat::default_probes;

    fn r(text: &str, unit: &ImagUnit) -> SlicePoly {
        restrict(&parse_expr(text).unwrap(), unit)
    }

    fn qi() -> Quaternion {
        Quaternion::i()
    }

    #[test]
    fn restrict_examples() {
        let j = ImagUnit::j();
        let p = restrict(&Expr::generic(0, 1, qi()), &j);
        assert_eq!(p, SlicePoly::from_terms(&j, [((1, 0), qi()), ((0, 1), Quaternion::k())]));

        for probe in default_probes() {
            let u = &probe.i;
            let p = r("q^2", u);
            let expected = SlicePoly::from_terms(
                u,
                [
                    ((2, 0), Quaternion::one()),
                    ((1, 1), u.value().scale(&int(2))),
                    ((0, 2), Quaternion::from(-1)),
                ],
            );
            assert_eq!(p, expected);
        }

        let p = restrict(&Expr::generic(1, 1, qi()), &j);
        assert_eq!(p, SlicePoly::from_terms(&j, [((2, 0), qi()), ((0, 2), qi())]));
    }

    #[test]
    fn dbar_examples() {
        for probe in default_probes() {
            assert!(dbar(&r("q^2", &probe.i)).is_zero());
            assert_eq!(dbar(&r("qbar", &probe.i)), SlicePoly::constant(&probe.i, Quaternion::one()));
        }
        let j = ImagUnit::j();
        assert_eq!(dbar(&r("A(0,1|i)", &j)), SlicePoly::constant(&j, qi()));
    }

    #[test]
    fn dslice_examples() {
        for probe in default_probes() {
            let u = &probe.i;
            assert_eq!(dslice(&r("q^3", u)), r("q^2 * 3", u));
            assert!(dslice(&r("qbar", u)).is_zero());
            assert!(dslice(&r("1", u)).is_zero());
        }
    }

    #[test]
    fn level_examples() {
        let e = "(q - i) * q";
        assert_eq!(level_on_slice(&r(e, &ImagUnit::i())), Level::Lev(0));
        assert_eq!(level_on_slice(&r(e, &ImagUnit::j())), Level::Lev(1));
        assert_eq!(level_on_slice(&r("0", &ImagUnit::k())), Level::ZeroFunction);
        assert!(Level::ZeroFunction < Level::Lev(0));
        // no y in sight, still level 2
        assert_eq!(level_on_slice(&r("(q + qbar) * (q + qbar)", &ImagUnit::i())), Level::Lev(2));
    }

    #[test]
    fn global_level_examples() {
        let probes = default_probes();
        let lev = |t: &str| global_level(&parse_expr(t).unwrap(), &probes).unwrap();
        assert_eq!(lev("A(1,1|i)"), Level::Lev(1));
        assert_eq!(lev("q^2 + 1"), Level::Lev(0));
        assert_eq!(lev("A(2,3|7)"), Level::Lev(0));
        assert!(matches!(global_level(&Expr::Var, &[]), Err(Error::EmptyProbeSet)));
    }

    #[test]
    fn right_form_examples() {
        for probe in default_probes() {
            let form = to_right_form(&r("qbar * q", &probe.i));
            assert_eq!(form, [((1, 1), Quaternion::one())].into());
        }
        assert_eq!(to_right_form(&r("A(1,1|i)", &ImagUnit::j())), [((1, 1), qi())].into());
        assert_eq!(to_right_form(&r("A(1,1|i)", &ImagUnit::i())), [((0, 2), qi())].into());
    }

    #[test]
    fn qbar_taylor_examples() {
        let d = qbar_taylor(&r("A(1,1|i)", &ImagUnit::j())).unwrap();
        assert_eq!(d.parts, vec![SRPoly::zero(), SRPoly::new(vec![Quaternion::zero(), qi()])]);
        let d = qbar_taylor(&r("A(1,1|i)", &ImagUnit::i())).unwrap();
        assert_eq!(d.parts, vec![SRPoly::new(vec![Quaternion::zero(), Quaternion::zero(), qi()])]);
        let u = default_probes()[6].i.clone();
        let d = qbar_taylor(&r("q^3", &u)).unwrap();
        assert_eq!(d.parts, vec![SRPoly::new(vec![0.into(), 0.into(), 0.into(), 1.into()])]);
        assert!(qbar_taylor(&SlicePoly::zero(&u)).unwrap().parts.is_empty());
    }

    #[test]
    fn split_examples() {
        let pair = &default_probes()[0];
        let i = &pair.i;
        let s = split_poly(&r("q * j", i), pair).unwrap();
        assert!(s.f.is_empty());
        let one = SliceComplex { s: int(1), t: int(0) };
        let unit_i = SliceComplex { s: int(0), t: int(1) };
        assert_eq!(s.g, [((1, 0), one.clone()), ((0, 1), unit_i)].into());

        let s = split_poly(&r("q^2 + 1", i), pair).unwrap();
        assert!(s.g.is_empty());
        assert_eq!(s.f_poly(), r("q^2 + 1", i));

        let s = split_poly(&r("[1+2i+3j+4k]", i), pair).unwrap();
        assert_eq!(s.f, [((0, 0), SliceComplex { s: int(1), t: int(2) })].into());
        assert_eq!(s.g, [((0, 0), SliceComplex { s: int(3), t: int(4) })].into());

        let other = &default_probes()[1];
        assert!(matches!(split_poly(&r("q", i), other), Err(Error::SliceMismatch { .. })));
    }

    #[test]
    fn hermite_examples() {
        for probe in default_probes() {
            let u = &probe.i;
            let one = SRPoly::constant(Quaternion::one());
            assert_eq!(hermite_h(&one, 1, u), r("qbar", u));
            let sq = SRPoly::new(vec![0.into(), 0.into(), 1.into()]);
            assert_eq!(hermite_h(&sq, 1, u), r("qbar*q^2 - q*2", u));
            assert_eq!(hermite_h(&sq, 0, u), r("q^2", u));
        }
    }

    #[test]
    fn json_term_order() {
        let p = r("q^2 + qbar + 1", &ImagUnit::i());
        let v = p.to_json();
        let terms = v["terms"].as_array().unwrap();
        let keys: Vec<(u64, u64)> = terms
            .iter()
            .map(|t| (t["a"].as_u64().unwrap(), t["b"].as_u64().unwrap()))
            .collect();
        assert_eq!(keys, vec![(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]);
        assert_eq!(v["I"], "i");
    }
}
