//! Closed forms for sandwich monomials `A^{n,m}(q|a) = q^n a q^m` and for
//! dot products of slice regular polynomials.
//!
//! Everything hinges on the binomial sum
//!
//! ```text
//! S_k(I, a) = sum_{j=0}^{k} binom(k, j) I^j a I^j
//! ```
//!
//! which equals `a` for `k = 0` and `2^k` times the part of `a` anticommuting
//! with `I` for `k >= 1`. Levels are computed from that closed form here and
//! certified against literal differentiation by [`crate::verify`].

use serde_json::{json, Value};

use crate::error::Error;
use crate::expr::{srpoly_to_expr, Expr, SRPoly};
use crate::oracle;
use crate::quat::{int, perp_decompose, rat, ImagUnit, ProbePair, Quaternion, Rational};
use crate::slice::{binom, qbar_taylor, restrict, restrict_srpoly, split_poly, Level, QbarDecomp, SlicePoly};

/// `sum_j binom(k, j) I^j a I^j`, evaluated term by term.
pub fn s_func(unit: &ImagUnit, alpha: &Quaternion, k: u32) -> Quaternion {
    let i = unit.value();
    let mut acc = Quaternion::zero();
    let mut left = alpha.clone();
    for j in 0..=k {
        // left = I^j a I^j
        acc += &left.scale(&binom(k, j));
        left = i * &left * i;
    }
    debug_assert_eq!(acc, s_closed_form(unit, alpha, k));
    acc
}

/// `a` for `k = 0`, else `2^k * perp(a)`.
pub fn s_closed_form(unit: &ImagUnit, alpha: &Quaternion, k: u32) -> Quaternion {
    if k == 0 {
        return alpha.clone();
    }
    perp_decompose(alpha, unit).perp.scale(&int(1i64 << k))
}

/// `S_k + I S_k I`, which is `S_{k+1}`.
pub fn s_binomial_step(unit: &ImagUnit, alpha: &Quaternion, k: u32) -> Quaternion {
    let s = s_func(unit, alpha, k);
    let i = unit.value();
    let out = &s + &(i * &s * i);
    debug_assert_eq!(out, s_func(unit, alpha, k + 1));
    out
}

/// Shape of the set `{k : S_k(I, a) = 0}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlephClass {
    /// `a = 0`; every `S_k` vanishes.
    AllK,
    /// `a` is a nonzero element of `C_I`; `S_k = 0` exactly for `k >= 1`.
    FromOne,
    /// `a` has a component anticommuting with `I`; no `S_k` vanishes.
    Never,
}

impl AlephClass {
    /// Smallest `k` with `S_k = 0`.
    pub fn min(self) -> Option<u32> {
        match self {
            AlephClass::AllK => Some(0),
            AlephClass::FromOne => Some(1),
            AlephClass::Never => None,
        }
    }

    pub fn contains(self, k: u32) -> bool {
        self.min().is_some_and(|m| k >= m)
    }
}

pub fn aleph_classify(unit: &ImagUnit, alpha: &Quaternion) -> AlephClass {
    if alpha.is_zero() {
        AlephClass::AllK
    } else if perp_decompose(alpha, unit).perp.is_zero() {
        AlephClass::FromOne
    } else {
        AlephClass::Never
    }
}

/// Literal `rho^{m,I}(a)`: `min(m, min aleph)` when the set is nonempty, else `m`.
pub fn literal_rho(unit: &ImagUnit, alpha: &Quaternion, m: u32) -> u32 {
    match aleph_classify(unit, alpha).min() {
        Some(lo) => lo.min(m),
        None => m,
    }
}

/// Exact level of `A^{n,m}(.|a)` on `C_I`: `max{k <= m : S_k(I, a) != 0}`.
pub fn generic_slice_level(unit: &ImagUnit, alpha: &Quaternion, m: u32) -> Level {
    match aleph_classify(unit, alpha) {
        AlephClass::AllK => Level::ZeroFunction,
        AlephClass::FromOne => Level::Lev(0),
        AlephClass::Never => Level::Lev(m),
    }
}

/// Level over the whole sphere. Every nonreal `a` has slices where its
/// perpendicular part is nonzero.
pub fn generic_global_level(alpha: &Quaternion, m: u32) -> Level {
    if alpha.is_zero() {
        Level::ZeroFunction
    } else if alpha.is_real() || m == 0 {
        Level::Lev(0)
    } else {
        Level::Lev(m)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SliceValue<T> {
    pub unit: ImagUnit,
    pub value: T,
}

/// Per-slice and global levels, with the literal index values and the
/// term-wise predicted bound where they apply.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexReport {
    pub per_slice: Vec<SliceValue<Level>>,
    pub global: Level,
    pub literal_rho: Vec<SliceValue<u32>>,
    pub literal_varrho: Option<u32>,
    pub predicted: Vec<SliceValue<u32>>,
    pub predicted_bound: Option<u32>,
    pub bound_tight: Option<bool>,
}

pub fn level_json(level: Level) -> Value {
    match level.value() {
        Some(k) => json!(k),
        None => Value::Null,
    }
}

impl IndexReport {
    pub fn to_json(&self) -> Value {
        let per_slice: Vec<Value> = self
            .per_slice
            .iter()
            .map(|s| json!({"I": s.unit.to_string(), "level": level_json(s.value)}))
            .collect();
        let rho: Vec<Value> = self
            .literal_rho
            .iter()
            .map(|s| json!({"I": s.unit.to_string(), "rho": s.value}))
            .collect();
        let mut out = json!({
            "global": {"level": level_json(self.global)},
            "per_slice": per_slice,
            "paper_rho": rho,
        });
        let obj = out.as_object_mut().expect("object");
        if let Some(v) = self.literal_varrho {
            obj.insert("paper_varrho".into(), json!(v));
        }
        if !self.predicted.is_empty() {
            let pred: Vec<Value> = self
                .predicted
                .iter()
                .map(|s| json!({"I": s.unit.to_string(), "bound": s.value}))
                .collect();
            obj.insert("predicted_per_slice".into(), json!(pred));
        }
        if let Some(b) = self.predicted_bound {
            obj.insert("predicted_bound".into(), json!(b));
        }
        if let Some(t) = self.bound_tight {
            obj.insert("bound_tight".into(), json!(t));
        }
        out
    }
}

/// Levels of `A^{n,m}(.|a)` over the probe slices (independent of `n`).
pub fn generic_index(alpha: &Quaternion, m: u32, probes: &[ProbePair]) -> IndexReport {
    let per_slice = probes
        .iter()
        .map(|p| SliceValue { unit: p.i.clone(), value: generic_slice_level(&p.i, alpha, m) })
        .collect();
    let literal_rho: Vec<SliceValue<u32>> = probes
        .iter()
        .map(|p| SliceValue { unit: p.i.clone(), value: literal_rho(&p.i, alpha, m) })
        .collect();
    let literal_varrho = literal_rho.iter().map(|s| s.value).max();
    IndexReport {
        per_slice,
        global: generic_global_level(alpha, m),
        literal_rho,
        literal_varrho,
        predicted: vec![],
        predicted_bound: None,
        bound_tight: None,
    }
}

fn factorial_ratio(m: u32, k: u32) -> Rational {
    ((m - k + 1)..=m).fold(int(1), |acc, x| acc * int(x as i64))
}

/// `dbar^k A^{n,m}(q|a) = 2^{-k} m!/(m-k)! q^n S_k(I, a) q^{m-k}`.
pub fn generic_dbar(n: u32, m: u32, alpha: &Quaternion, unit: &ImagUnit, k: u32) -> Result<SlicePoly, Error> {
    if k > m {
        return Err(Error::InvalidArg(format!("derivative order {k} exceeds m = {m}")));
    }
    let scale = factorial_ratio(m, k) * rat(1, 1i64 << k);
    let coeff = s_func(unit, alpha, k).scale(&scale);
    Ok(restrict(&Expr::generic(n, m - k, coeff), unit))
}

/// `A^{n,m}(.|a)` as a polynomial in `qbar` with slice regular coefficients
/// on `C_I`; at most `m + 1` parts.
pub fn linearize_generic(n: u32, m: u32, alpha: &Quaternion, unit: &ImagUnit) -> Result<QbarDecomp, Error> {
    let d = qbar_taylor(&restrict(&Expr::generic(n, m, alpha.clone()), unit))?;
    debug_assert!(d.parts.len() <= m as usize + 1);
    Ok(d)
}

/// Term-wise bound for the level of `f . g` on `C_I`: the largest `k <= deg g`
/// for which some `beta_m` with `m >= max(k, 1)` is nonzero while some
/// `alpha_n` has a nonzero part perpendicular to `I`.
pub fn predicted_product_bound(f: &SRPoly, g: &SRPoly, unit: &ImagUnit) -> u32 {
    let any_perp = f.coeffs().iter().any(|a| !perp_decompose(a, unit).perp.is_zero());
    if !any_perp {
        return 0;
    }
    let deg = g.degree().unwrap_or(0) as u32;
    (0..=deg)
        .rev()
        .find(|&k| (k.max(1)..=deg).any(|m| !g.coeff(m as usize).is_zero()))
        .unwrap_or(0)
}

/// Exact per-slice levels of the dot product `f . g` (by differentiation)
/// next to the predicted bound.
pub fn product_level(f: &SRPoly, g: &SRPoly, probes: &[ProbePair]) -> Result<IndexReport, Error> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if probes.is_empty() {
        return Err(Error::EmptyProbeSet);
    }
    let product = dot_product_expr(&srpoly_to_expr(f), &srpoly_to_expr(g));
    let per_slice: Vec<SliceValue<Level>> = probes
        .iter()
        .map(|p| SliceValue { unit: p.i.clone(), value: oracle::brute_level(&product, &p.i) })
        .collect();
    let predicted: Vec<SliceValue<u32>> = probes
        .iter()
        .map(|p| SliceValue { unit: p.i.clone(), value: predicted_product_bound(f, g, &p.i) })
        .collect();
    let global = per_slice.iter().map(|s| s.value).max().expect("nonempty");
    let bound = predicted.iter().map(|s| s.value).max().expect("nonempty");
    Ok(IndexReport {
        per_slice,
        global,
        literal_rho: vec![],
        literal_varrho: None,
        predicted,
        predicted_bound: Some(bound),
        bound_tight: Some(global == Level::Lev(bound)),
    })
}

/// Pointwise product.
pub fn dot_product_expr(f: &Expr, g: &Expr) -> Expr {
    Expr::dot(f.clone(), g.clone())
}

/// Coefficient convolution `(f * g)_n = sum_k a_k b_{n-k}`.
pub fn star_product(f: &SRPoly, g: &SRPoly) -> SRPoly {
    if f.is_zero() || g.is_zero() {
        return SRPoly::zero();
    }
    let mut out = vec![Quaternion::zero(); f.coeffs().len() + g.coeffs().len() - 1];
    for (i, a) in f.coeffs().iter().enumerate() {
        for (j, b) in g.coeffs().iter().enumerate() {
            out[i + j] += &(a * b);
        }
    }
    SRPoly::new(out)
}

/// `sum_{j,k} qbar^{j+k} (phi_j . psi_k)` restricted to `C_I`.
pub fn osp_product(fparts: &[SRPoly], gparts: &[SRPoly], unit: &ImagUnit) -> SlicePoly {
    let mut acc = SlicePoly::zero(unit);
    for (j, phi) in fparts.iter().enumerate() {
        for (k, psi) in gparts.iter().enumerate() {
            let term = Expr::Product(vec![
                Expr::power(Expr::VarBar, (j + k) as u32),
                srpoly_to_expr(phi),
                srpoly_to_expr(psi),
            ]);
            acc = acc.add(&restrict(&term, unit));
        }
    }
    acc
}

/// The two closed forms `I^k G_f J d^k g/dy^k` and `G_f J d^k g/dx^k` for
/// `dbar^k (f . g)` on `C_I`.
pub fn actionk_rhs(f: &SRPoly, g: &SRPoly, pair: &ProbePair, k: u32) -> Result<(SlicePoly, SlicePoly), Error> {
    if k == 0 {
        return Err(Error::InvalidArg("derivative order must be at least 1".into()));
    }
    let unit = &pair.i;
    let gf_j = split_poly(&restrict_srpoly(f, unit), pair)?.g_poly().right_mul(pair.j.value());
    let g_slice = restrict_srpoly(g, unit);
    let dy = (0..k).fold(g_slice.clone(), |acc, _| acc.partial_y());
    let dx = (0..k).fold(g_slice, |acc, _| acc.partial_x());
    let via_y = gf_j.mul(&dy).left_mul(&unit.value().pow(k));
    let via_x = gf_j.mul(&dx);
    Ok((via_y, via_x))
}

fn spans_two_directions(probes: &[ProbePair]) -> bool {
    probes.iter().any(|a| {
        probes.iter().any(|b| a.i.value() != b.i.value() && *a.i.value() != -b.i.value())
    })
}

/// `true` iff `G_f = 0` on every probe slice. For a probe set with two
/// independent directions this is the same as `f` having real coefficients.
pub fn char_sliceregular(f: &SRPoly, probes: &[ProbePair]) -> Result<bool, Error> {
    let mut all = true;
    for pair in probes {
        if !split_poly(&restrict_srpoly(f, &pair.i), pair)?.g.is_empty() {
            all = false;
        }
    }
    if spans_two_directions(probes) {
        assert_eq!(all, f.has_real_coeffs(), "G_f = 0 on all probes must mean real coefficients");
    }
    Ok(all)
}

/// Per slice, whether `G_f J d^{k0} g/dy^{k0}` vanishes identically.
/// Condition (a), "`G_f = 0` or `d^{k0} g/dy^{k0} = 0`", is computed as well
/// and must agree, since `C_I[x, y]` has no zero divisors.
pub fn char_polyregular(f: &SRPoly, g: &SRPoly, k0: u32, probes: &[ProbePair]) -> Result<bool, Error> {
    if k0 == 0 {
        return Err(Error::InvalidArg("k0 must be at least 1".into()));
    }
    let mut all = true;
    for pair in probes {
        let (b, a) = polyregular_conditions(f, g, k0, pair)?;
        assert_eq!(a, b, "zero-set condition and product condition disagree");
        all &= b;
    }
    Ok(all)
}

/// `(condition (b), condition (a))` on one slice.
pub fn polyregular_conditions(f: &SRPoly, g: &SRPoly, k0: u32, pair: &ProbePair) -> Result<(bool, bool), Error> {
    let unit = &pair.i;
    let gf = split_poly(&restrict_srpoly(f, unit), pair)?.g_poly();
    let dy = (0..k0).fold(restrict_srpoly(g, unit), |acc, _| acc.partial_y());
    let product_zero = gf.right_mul(pair.j.value()).mul(&dy).is_zero();
    let zero_sets_cover = gf.is_zero() || dy.is_zero();
    Ok((product_zero, zero_sets_cover))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;
    use crate::quat::default_probes;
    use crate::slice::{dbar_pow, level_on_slice};

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    fn poly(cs: &[Quaternion]) -> SRPoly {
        SRPoly::new(cs.to_vec())
    }

    #[test]
    fn s_examples() {
        let i = ImagUnit::i();
        assert!(s_func(&i, &q(5, 0, 0, 0), 2).is_zero());
        assert_eq!(s_func(&i, &Quaternion::j(), 1), q(0, 0, 2, 0));
        let u = default_probes()[5].i.clone();
        assert_eq!(s_func(&u, &q(1, 2, 3, 4), 0), q(1, 2, 3, 4));
    }

    #[test]
    fn binomial_step_examples() {
        let i = ImagUnit::i();
        assert_eq!(s_binomial_step(&i, &Quaternion::j(), 1), q(0, 0, 4, 0));
        assert_eq!(s_binomial_step(&i, &Quaternion::j(), 1), s_func(&i, &Quaternion::j(), 2));
        for p in default_probes() {
            assert!(s_binomial_step(&p.i, &q(-3, 0, 0, 0), 1).is_zero());
            assert!(s_binomial_step(&p.i, &Quaternion::zero(), 4).is_zero());
        }
    }

    #[test]
    fn aleph_examples() {
        assert_eq!(aleph_classify(&ImagUnit::i(), &q(7, 0, 0, 0)), AlephClass::FromOne);
        assert_eq!(aleph_classify(&ImagUnit::i(), &Quaternion::j()), AlephClass::Never);
        for k in 0..=10 {
            assert!(!s_func(&ImagUnit::i(), &Quaternion::j(), k).is_zero());
        }
        assert_eq!(aleph_classify(&ImagUnit::k(), &Quaternion::zero()), AlephClass::AllK);
    }

    #[test]
    fn generic_index_examples() {
        let probes = default_probes();
        assert_eq!(generic_index(&q(3, 0, 4, 0), 5, &probes).global, Level::Lev(5));
        let real = generic_index(&q(7, 0, 0, 0), 5, &probes);
        assert_eq!(real.global, Level::Lev(0));
        // the literal index reads 1 for a real constant
        assert_eq!(real.literal_varrho, Some(1));

        let r = generic_index(&Quaternion::i(), 1, &probes);
        assert_eq!(r.per_slice[0].value, Level::Lev(0));
        assert_eq!(r.per_slice[1].value, Level::Lev(1));
        assert_eq!(r.global, Level::Lev(1));
        for (idx, pair) in probes.iter().enumerate() {
            for n in 0..2 {
                let e = Expr::generic(n, 1, Quaternion::i());
                assert_eq!(level_on_slice(&restrict(&e, &pair.i)), r.per_slice[idx].value);
            }
        }
    }

    #[test]
    fn generic_dbar_examples() {
        for pair in default_probes() {
            let u = &pair.i;
            let alpha = q(1, -2, 3, 1);
            let expected = restrict(&Expr::generic(1, 0, alpha.clone() + u.value() * &alpha * u.value()), u)
                .scale(&rat(1, 2));
            assert_eq!(generic_dbar(1, 1, &alpha, u, 1).unwrap(), expected);
            assert!(generic_dbar(2, 3, &q(4, 0, 0, 0), u, 1).unwrap().is_zero());
        }
        let i = ImagUnit::i();
        let d = generic_dbar(0, 2, &Quaternion::j(), &i, 2).unwrap();
        assert_eq!(d, SlicePoly::constant(&i, q(0, 0, 2, 0)));
        assert_eq!(d, dbar_pow(&restrict(&Expr::generic(0, 2, Quaternion::j()), &i), 2));
        assert!(matches!(generic_dbar(0, 1, &Quaternion::j(), &i, 2), Err(Error::InvalidArg(_))));
    }

    #[test]
    fn linearize_examples() {
        let d = linearize_generic(1, 1, &Quaternion::i(), &ImagUnit::j()).unwrap();
        assert_eq!(d.parts, vec![SRPoly::zero(), poly(&[0.into(), Quaternion::i()])]);
        let d = linearize_generic(1, 1, &Quaternion::i(), &ImagUnit::i()).unwrap();
        assert_eq!(d.parts, vec![poly(&[0.into(), 0.into(), Quaternion::i()])]);
        let alpha = q(2, 1, -1, 3);
        for pair in default_probes() {
            let d = linearize_generic(2, 0, &alpha, &pair.i).unwrap();
            assert_eq!(d.parts, vec![poly(&[0.into(), 0.into(), alpha.clone()])]);
        }
    }

    #[test]
    fn product_level_examples() {
        let probes = default_probes();
        let f = poly(&[0.into(), Quaternion::i()]);
        let g = poly(&[0.into(), 0.into(), 1.into()]);
        let r = product_level(&f, &g, &probes).unwrap();
        assert_eq!(r.global, Level::Lev(2));
        assert_eq!(r.predicted_bound, Some(2));
        assert_eq!(r.bound_tight, Some(true));

        let g = poly(&[q(1, 2, 0, -1), Quaternion::j(), q(0, 0, 0, 3)]);
        let r = product_level(&poly(&[1.into()]), &g, &probes).unwrap();
        assert_eq!(r.global, Level::Lev(0));

        let r = product_level(&poly(&[5.into(), 7.into()]), &poly(&[0.into(), Quaternion::j()]), &probes).unwrap();
        assert!(r.per_slice.iter().all(|s| s.value == Level::Lev(0)));

        assert!(matches!(product_level(&f, &SRPoly::zero(), &probes), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn dot_product_examples() {
        let e = dot_product_expr(&parse_expr("q - i").unwrap(), &Expr::Var);
        assert_eq!(e, parse_expr("(q - i) * q").unwrap());
        let e = dot_product_expr(&Expr::Var, &Expr::Var);
        let p = q(1, 2, -1, 3);
        assert_eq!(crate::expr::eval_expr(&e, &p), &p * &p);
    }

    #[test]
    fn star_examples() {
        let s = star_product(&poly(&[0.into(), Quaternion::i()]), &poly(&[0.into(), Quaternion::j()]));
        assert_eq!(s, poly(&[0.into(), 0.into(), Quaternion::k()]));
        let f = poly(&[q(1, 2, 3, 4), q(0, -1, 0, 2)]);
        assert_eq!(star_product(&f, &poly(&[1.into()])), f);
        let s = star_product(&poly(&[-Quaternion::i(), 1.into()]), &poly(&[Quaternion::i(), 1.into()]));
        assert_eq!(s, poly(&[1.into(), 0.into(), 1.into()]));
    }

    #[test]
    fn osp_examples() {
        let phi = poly(&[q(1, 0, 2, 0), Quaternion::k()]);
        let psi = poly(&[0.into(), q(0, 1, 1, 0)]);
        for pair in default_probes() {
            let u = &pair.i;
            let direct = restrict(&Expr::dot(srpoly_to_expr(&phi), srpoly_to_expr(&psi)), u);
            assert_eq!(osp_product(&[phi.clone()], &[psi.clone()], u), direct);
            let shifted = restrict(&Expr::Product(vec![Expr::VarBar, srpoly_to_expr(&phi), srpoly_to_expr(&psi)]), u);
            assert_eq!(osp_product(&[SRPoly::zero(), phi.clone()], &[psi.clone()], u), shifted);
        }
        // real-coefficient parts of qbar-degree 2 and 3
        let r = |cs: &[i64]| SRPoly::new(cs.iter().map(|&c| Quaternion::from(c)).collect());
        let fparts = [r(&[1, 2]), r(&[0, 1]), r(&[3, 0, 1])];
        let gparts = [r(&[1]), r(&[2, 1]), r(&[0]), r(&[1, 1])];
        for pair in default_probes() {
            assert_eq!(level_on_slice(&osp_product(&fparts, &gparts, &pair.i)), Level::Lev(5));
        }
    }

    #[test]
    fn actionk_examples() {
        let pairs = default_probes();
        let pair = &pairs[0];
        let f = poly(&[0.into(), Quaternion::j()]);
        let g = poly(&[0.into(), 0.into(), 1.into()]);
        let (a, b) = actionk_rhs(&f, &g, pair, 2).unwrap();
        // 2 z j with z = x + i y
        let expected = SlicePoly::from_terms(&pair.i, [((1, 0), q(0, 0, 2, 0)), ((0, 1), q(0, 0, 0, 2))]);
        assert_eq!(a, expected);
        assert_eq!(b, expected);
        let prod = restrict(&Expr::dot(srpoly_to_expr(&f), srpoly_to_expr(&g)), &pair.i);
        assert_eq!(dbar_pow(&prod, 2), expected);

        let real = poly(&[2.into(), (-1).into(), 3.into()]);
        for p in &pairs {
            let (a, b) = actionk_rhs(&real, &g, p, 1).unwrap();
            assert!(a.is_zero() && b.is_zero());
            let (a, b) = actionk_rhs(&f, &poly(&[q(1, 1, 1, 1)]), p, 1).unwrap();
            assert!(a.is_zero() && b.is_zero());
        }
        assert!(matches!(actionk_rhs(&f, &g, pair, 0), Err(Error::InvalidArg(_))));
    }

    #[test]
    fn characterization_examples() {
        let probes = default_probes();
        assert!(char_sliceregular(&poly(&[1.into(), 0.into(), 1.into()]), &probes).unwrap());
        assert!(!char_sliceregular(&poly(&[0.into(), Quaternion::j()]), &probes).unwrap());
        assert!(!char_sliceregular(&poly(&[Quaternion::i()]), &probes).unwrap());

        let cubic = poly(&[1.into(), Quaternion::k(), 0.into(), q(1, 1, 0, 0)]);
        let f = poly(&[Quaternion::j(), q(1, 2, 3, 4)]);
        assert!(char_polyregular(&f, &cubic, 4, &probes).unwrap());
        let g = poly(&[0.into(), 0.into(), 1.into()]);
        assert!(!char_polyregular(&poly(&[0.into(), Quaternion::j()]), &g, 2, &probes).unwrap());
        assert!(char_polyregular(&poly(&[3.into(), 1.into()]), &g, 1, &probes).unwrap());
        assert!(matches!(char_polyregular(&f, &g, 0, &probes), Err(Error::InvalidArg(_))));
    }
}
