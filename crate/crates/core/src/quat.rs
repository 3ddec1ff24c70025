//! Exact rational quaternions, rational points of the imaginary unit sphere,
//! orthogonal probe frames, and the decomposition of a quaternion into the
//! parts that commute and anticommute with a given imaginary unit.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar. `BigRational` keeps values in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds the rational `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Lowest-terms text, `n` or `n/d`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A quaternion `w + x i + y j + z k` with exact rational components.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Small-integer constructor, mostly for fixtures.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(int(w), int(x), int(y), int(z))
    }

    pub fn real(w: Rational) -> Self {
        Quaternion::new(w, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Quaternion::default()
    }

    pub fn one() -> Self {
        Quaternion::real(Rational::one())
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    /// Squared norm `|a|^2`.
    pub fn norm_sq(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    /// Conjugate together with the squared norm.
    pub fn conj_norm(&self) -> (Quaternion, Rational) {
        (self.conj(), self.norm_sq())
    }

    /// `conj(a) / |a|^2`, `None` for zero.
    pub fn inv(&self) -> Option<Quaternion> {
        let n = self.norm_sq();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&n.recip()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Quaternion::zero();
        }
        let f = |c: &Rational| if c.is_zero() { Rational::zero() } else { c * r };
        Quaternion::new(f(&self.w), f(&self.x), f(&self.y), f(&self.z))
    }

    /// Integer power by repeated multiplication; `a^0 = 1`.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Quaternion::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Components in basis order `(1, i, j, k)`.
    pub fn components(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    /// Number of nonzero components.
    pub fn support(&self) -> usize {
        self.components().iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for Quaternion {
    /// Canonical literal: lowest terms, zero components omitted, unit
    /// coefficient `1` dropped (`i`, `-k`), `0` for the zero quaternion.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (c, unit) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            if unit.is_empty() || !mag.is_one() {
                out.push_str(&fmt_rational(&mag));
            }
            out.push_str(unit);
        }
        f.write_str(&out)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Quaternion> for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Quaternion> for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: &Quaternion) -> Quaternion {
                (&self).$method(rhs)
            }
        }
        impl $tr<Quaternion> for &Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &rhs.w,
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl Sub<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &rhs.w,
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

/// Integer numerators over a shared denominator.
fn over_common_denominator(q: &Quaternion) -> ([BigInt; 4], BigInt) {
    let d = [&q.w, &q.x, &q.y, &q.z].iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let n = [&q.w, &q.x, &q.y, &q.z].map(|r| r.numer() * (&d / r.denom()));
    (n, d)
}

/// Hamilton product, computed on integer numerators so each component is
/// reduced once.
impl Mul<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn mul(self, b: &Quaternion) -> Quaternion {
        if self.is_zero() || b.is_zero() {
            return Quaternion::zero();
        }
        let ([aw, ax, ay, az], da) = over_common_denominator(self);
        let ([bw, bx, by, bz], db) = over_common_denominator(b);
        let d = da * db;
        let part = |n: BigInt| Rational::new(n, d.clone());
        Quaternion::new(
            part(&aw * &bw - &ax * &bx - &ay * &by - &az * &bz),
            part(&aw * &bx + &ax * &bw + &ay * &bz - &az * &by),
            part(&aw * &by - &ax * &bz + &ay * &bw + &az * &bx),
            part(&aw * &bz + &ax * &by - &ay * &bx + &az * &bw),
        )
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -self.clone()
    }
}

impl AddAssign<&Quaternion> for Quaternion {
    fn add_assign(&mut self, rhs: &Quaternion) {
        for (a, b) in [(&mut self.w, &rhs.w), (&mut self.x, &rhs.x), (&mut self.y, &rhs.y), (&mut self.z, &rhs.z)] {
            if b.is_zero() {
                continue;
            }
            if a.is_zero() {
                *a = b.clone();
            } else {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Quaternion> for Quaternion {
    fn sub_assign(&mut self, rhs: &Quaternion) {
        self.w -= &rhs.w;
        self.x -= &rhs.x;
        self.y -= &rhs.y;
        self.z -= &rhs.z;
    }
}

impl From<i64> for Quaternion {
    fn from(n: i64) -> Self {
        Quaternion::real(int(n))
    }
}

/// A rational point `I` of the unit sphere of purely imaginary quaternions,
/// so that `I^2 = -1` holds exactly.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ImagUnit(Quaternion);

impl ImagUnit {
    /// Validates a literal: zero real part and unit squared norm.
    pub fn new(value: Quaternion) -> Result<Self, Error> {
        if !value.w.is_zero() || !value.norm_sq().is_one() {
            return Err(Error::NotImagUnit(value.to_string()));
        }
        Ok(ImagUnit(value))
    }

    /// Inverse stereographic projection of the rational point `(a, b)`:
    /// `(2a i + 2b j + (1 - a^2 - b^2) k) / (1 + a^2 + b^2)`.
    pub fn stereographic(a: &Rational, b: &Rational) -> Self {
        let s = a * a + b * b;
        let d = (Rational::one() + &s).recip();
        let two = int(2);
        ImagUnit(Quaternion::new(
            Rational::zero(),
            &two * a * &d,
            &two * b * &d,
            (Rational::one() - s) * d,
        ))
    }

    pub fn i() -> Self {
        ImagUnit(Quaternion::i())
    }

    pub fn j() -> Self {
        ImagUnit(Quaternion::j())
    }

    pub fn k() -> Self {
        ImagUnit(Quaternion::k())
    }

    pub fn value(&self) -> &Quaternion {
        &self.0
    }

    pub fn into_value(self) -> Quaternion {
        self.0
    }
}

impl fmt::Display for ImagUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Rational point of the sphere from the stereographic chart.
pub fn make_imag_unit(a: &Rational, b: &Rational) -> ImagUnit {
    ImagUnit::stereographic(a, b)
}

/// An imaginary unit `I` with an orthogonal companion `J` and `K = I J`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProbePair {
    pub i: ImagUnit,
    pub j: ImagUnit,
    pub k: Quaternion,
}

impl ProbePair {
    pub fn new(i: ImagUnit, j: ImagUnit) -> Result<Self, Error> {
        let anti = i.value() * j.value() + j.value() * i.value();
        if !anti.is_zero() {
            return Err(Error::NotOrthogonal {
                i: i.to_string(),
                j: j.to_string(),
            });
        }
        let k = i.value() * j.value();
        Ok(ProbePair { i, j, k })
    }
}

pub fn validate_probe_pair(i: ImagUnit, j: ImagUnit) -> Result<ProbePair, Error> {
    ProbePair::new(i, j)
}

/// The eight curated probe slices with their orthogonal companions.
pub fn default_probes() -> Vec<ProbePair> {
    const TABLE: [([i64; 3], [i64; 3], i64); 8] = [
        ([1, 0, 0], [0, 1, 0], 1),
        ([0, 1, 0], [0, 0, 1], 1),
        ([0, 0, 1], [1, 0, 0], 1),
        ([3, 4, 0], [0, 0, 5], 5),
        ([2, 2, -1], [2, -1, 2], 3),
        ([2, -2, 1], [1, 2, 2], 3),
        ([6, 2, 3], [3, -6, -2], 7),
        ([2, 3, 6], [3, -6, 2], 7),
    ];
    TABLE
        .iter()
        .map(|(iv, jv, d)| {
            let unit = |v: &[i64; 3]| {
                ImagUnit::new(Quaternion::new(
                    Rational::zero(),
                    rat(v[0], *d),
                    rat(v[1], *d),
                    rat(v[2], *d),
                ))
                .expect("curated probe is a unit")
            };
            ProbePair::new(unit(iv), unit(jv)).expect("curated probe is orthogonal")
        })
        .collect()
}

/// Splitting of a quaternion relative to `I`: `parallel` lies in the slice
/// `C_I` and commutes with `I`, `perp` anticommutes with `I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PerpSplit {
    pub parallel: Quaternion,
    pub perp: Quaternion,
}

/// `parallel = (a - I a I) / 2`, `perp = (a + I a I) / 2`.
pub fn perp_decompose(alpha: &Quaternion, unit: &ImagUnit) -> PerpSplit {
    let i = unit.value();
    let sandwich = i * alpha * i;
    let half = rat(1, 2);
    PerpSplit {
        parallel: (alpha - &sandwich).scale(&half),
        perp: (alpha + &sandwich).scale(&half),
    }
}

/// `k`-fold iterated commutator `[...[[v, I], I]..., I]` with `[v, I] = vI - Iv`.
pub fn commutator_iter(v: &Quaternion, unit: &ImagUnit, k: u32) -> Result<Quaternion, Error> {
    if k == 0 {
        return Err(Error::InvalidArg("commutator order must be at least 1".into()));
    }
    let i = unit.value();
    let mut acc = v.clone();
    for _ in 0..k {
        acc = &acc * i - i * &acc;
    }
    Ok(acc)
}

/// Element of `C_I` written as `s + t I`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SliceComplex {
    pub s: Rational,
    pub t: Rational,
}

impl SliceComplex {
    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.t.is_zero()
    }

    pub fn to_quaternion(&self, unit: &ImagUnit) -> Quaternion {
        Quaternion::real(self.s.clone()) + unit.value().scale(&self.t)
    }

    /// Reads `c` as `s + t I`; `None` when `c` is not in `C_I`.
    pub fn from_quaternion(c: &Quaternion, unit: &ImagUnit) -> Option<SliceComplex> {
        let s = c.w.clone();
        let t = -(c * unit.value()).w;
        let out = SliceComplex { s, t };
        (out.to_quaternion(unit) == *c).then_some(out)
    }
}

impl fmt::Display for SliceComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.s.is_zero(), self.t.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rational(&self.s)),
            _ => {
                let t = if self.t.is_one() {
                    "I".to_string()
                } else if (-&self.t).is_one() {
                    "-I".to_string()
                } else {
                    format!("{}I", fmt_rational(&self.t))
                };
                if self.s.is_zero() {
                    write!(f, "{t}")
                } else if self.t.is_negative() {
                    write!(f, "{}{t}", fmt_rational(&self.s))
                } else {
                    write!(f, "{}+{t}", fmt_rational(&self.s))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    #[test]
    fn basis_table() {
        assert_eq!(Quaternion::i() * Quaternion::j(), Quaternion::k());
        assert_eq!(Quaternion::j() * Quaternion::i(), -Quaternion::k());
        assert_eq!(q(1, 1, 0, 0) * q(1, 0, 1, 0), q(1, 1, 1, 1));
        let a = q(2, 3, -1, 0);
        assert_eq!(&a * a.inv().unwrap(), Quaternion::one());
    }

    #[test]
    fn conj_and_norm() {
        assert_eq!(q(1, 2, 3, 4).conj_norm(), (q(1, -2, -3, -4), int(30)));
        assert_eq!(Quaternion::zero().conj_norm(), (Quaternion::zero(), int(0)));
        assert_eq!(Quaternion::i().conj_norm(), (-Quaternion::i(), int(1)));
        assert!(Quaternion::zero().inv().is_none());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(q(1, 2, 0, 1).to_string(), "1+2i+k");
        assert_eq!(Quaternion::zero().to_string(), "0");
        assert_eq!(Quaternion::real(rat(-5, 2)).to_string(), "-5/2");
        assert_eq!((-Quaternion::i()).to_string(), "-i");
        let lit = Quaternion::new(int(1), int(2), rat(-3, 4), int(1));
        assert_eq!(lit.to_string(), "1+2i-3/4j+k");
    }

    #[test]
    fn stereographic_units() {
        assert_eq!(make_imag_unit(&int(0), &int(0)).value(), &Quaternion::k());
        assert_eq!(make_imag_unit(&int(1), &int(0)).value(), &Quaternion::i());
        let u = make_imag_unit(&int(1), &int(1));
        let expected = Quaternion::new(int(0), rat(2, 3), rat(2, 3), rat(-1, 3));
        assert_eq!(u.value(), &expected);
        assert_eq!(u.value() * u.value(), -Quaternion::one());
    }

    #[test]
    fn literal_units_are_validated() {
        assert!(ImagUnit::new(q(0, 1, 1, 0)).is_err());
        assert!(ImagUnit::new(q(1, 0, 0, 0)).is_err());
    }

    #[test]
    fn probe_pairs() {
        let p = validate_probe_pair(ImagUnit::i(), ImagUnit::j()).unwrap();
        assert_eq!(p.k, Quaternion::k());

        let i = ImagUnit::new(Quaternion::new(int(0), rat(3, 5), rat(4, 5), int(0))).unwrap();
        let p = validate_probe_pair(i, ImagUnit::k()).unwrap();
        // (3i+4j)/5 * k = (3ik + 4jk)/5 = (-3j + 4i)/5
        assert_eq!(p.k, Quaternion::new(int(0), rat(4, 5), rat(-3, 5), int(0)));
        assert_eq!(&p.k * &p.k, -Quaternion::one());

        assert!(matches!(
            validate_probe_pair(ImagUnit::i(), ImagUnit::i()),
            Err(Error::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn default_probe_frames() {
        let probes = default_probes();
        assert_eq!(probes.len(), 8);
        for p in &probes {
            assert_eq!(&p.k * &p.k, -Quaternion::one());
            assert_eq!(p.i.value() * p.j.value(), p.k);
        }
    }

    #[test]
    fn perp_examples() {
        let s = perp_decompose(&q(1, 2, 3, 4), &ImagUnit::i());
        assert_eq!(s.parallel, q(1, 2, 0, 0));
        assert_eq!(s.perp, q(0, 0, 3, 4));
        let s = perp_decompose(&q(5, 0, 0, 0), &ImagUnit::k());
        assert_eq!(s.perp, Quaternion::zero());
        let s = perp_decompose(&Quaternion::j(), &ImagUnit::i());
        assert_eq!(s.parallel, Quaternion::zero());
        assert_eq!(s.perp, Quaternion::j());
    }

    #[test]
    fn commutator_examples() {
        let i = ImagUnit::i();
        let c1 = commutator_iter(&Quaternion::j(), &i, 1).unwrap();
        assert_eq!(c1, q(0, 0, 0, -2));
        let c2 = commutator_iter(&Quaternion::j(), &i, 2).unwrap();
        assert_eq!(c2, q(0, -2, 0, 0) * &c1);
        assert!(commutator_iter(&q(7, 0, 0, 0), &i, 3).unwrap().is_zero());
        assert!(matches!(
            commutator_iter(&Quaternion::j(), &i, 0),
            Err(Error::InvalidArg(_))
        ));
    }

    #[test]
    fn slice_complex_roundtrip() {
        let u = default_probes()[4].i.clone();
        let c = SliceComplex { s: rat(1, 2), t: int(-3) };
        let back = SliceComplex::from_quaternion(&c.to_quaternion(&u), &u).unwrap();
        assert_eq!(back, c);
        assert!(SliceComplex::from_quaternion(&Quaternion::j(), &ImagUnit::i()).is_none());
        assert_eq!(c.to_string(), "1/2-3I");
    }
}
