//! Sturm sequences, isolation of negative real roots, and certified
//! comparison of largest negative roots.
//!
//! Sign evaluation runs on a primitive integer multiple of each polynomial,
//! homogenized at the rational point, so no rational normalization happens
//! inside the bisection loops.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::UnivariatePoly;
use crate::error::{Error, Result};
use crate::rational::{format_rational, pow2_neg, to_f64};

pub const DEFAULT_WIDTH_BITS: u32 = 40;

/// Extra bisection steps per side before a comparison gives up.
pub const REFINEMENT_BUDGET: usize = 80;

/// `2^-40`
pub fn default_width() -> BigRational {
    pow2_neg(DEFAULT_WIDTH_BITS)
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn new(p: &UnivariatePoly) -> Self {
        IntPoly(p.to_primitive_integers())
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Sign of the value at `x`, as -1, 0 or 1.
    fn sign_at(&self, x: &BigRational) -> i8 {
        let Some((lead, rest)) = self.0.split_last() else {
            return 0;
        };
        let (num, den) = (x.numer(), x.denom());
        let mut acc = lead.clone();
        let mut pw = BigInt::one();
        for a in rest.iter().rev() {
            pw *= den;
            acc = acc * num + a * &pw;
        }
        sign(&acc)
    }

    fn sign_at_infinity(&self, positive: bool) -> i8 {
        let Some(lead) = self.0.last() else {
            return 0;
        };
        let s = sign(lead);
        if positive || self.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }
}

fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm chain `p, p', -rem(p, p'), ...`, ending at a multiple of
/// `gcd(p, p')`.
struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    fn new(p: &UnivariatePoly) -> Self {
        let mut seq = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            seq.push(d);
            loop {
                let k = seq.len();
                let (_, r) = seq[k - 2].div_rem(&seq[k - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(-&r);
            }
        }
        SturmChain {
            polys: seq.iter().map(IntPoly::new).collect(),
        }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        variations(self.polys.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.polys.iter().map(|p| p.sign_at_infinity(positive)))
    }

    fn gcd_degree(&self) -> usize {
        self.polys.last().map_or(0, IntPoly::degree)
    }
}

/// Number of distinct real roots in the open interval `(lo, hi)`.
/// Both endpoints must be non-roots.
pub fn sturm_count(p: &UnivariatePoly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::InvalidInterval(format!(
            "({}, {}) is empty",
            format_rational(lo),
            format_rational(hi)
        )));
    }
    let ip = IntPoly::new(p);
    for x in [lo, hi] {
        if ip.sign_at(x) == 0 {
            return Err(Error::EndpointIsRoot(format_rational(x)));
        }
    }
    let chain = SturmChain::new(p);
    Ok(chain.variations_at(lo) - chain.variations_at(hi))
}

/// Number of distinct real roots.
pub fn real_root_count(p: &UnivariatePoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = SturmChain::new(p);
    Ok(chain.variations_at_infinity(false) - chain.variations_at_infinity(true))
}

/// Whether every complex root is real, i.e. the square-free part has as
/// many distinct real roots as its degree.
pub fn is_real_rooted(p: &UnivariatePoly) -> Result<bool> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let chain = SturmChain::new(p);
    let distinct_real = chain.variations_at_infinity(false) - chain.variations_at_infinity(true);
    Ok(distinct_real == degree - chain.gcd_degree())
}

/// `1 + max_{i<d} |a_i| / |a_d|`; every root has modulus strictly below it.
pub fn cauchy_bound(p: &UnivariatePoly) -> BigRational {
    let Some(lead) = p.leading() else {
        return BigRational::one();
    };
    let lead = lead.abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    BigRational::one() + max
}

/// Open interval with rational endpoints holding exactly one root of a
/// square-free polynomial, which has opposite nonzero signs at the ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn approx(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    fn bisect(&self, p: &IntPoly) -> RootInterval {
        let m = self.midpoint();
        let s_mid = p.sign_at(&m);
        if s_mid == 0 {
            let q = self.width() / BigRational::from_integer(BigInt::from(4));
            return RootInterval {
                lo: &m - &q,
                hi: &m + q,
            };
        }
        if s_mid == p.sign_at(&self.lo) {
            RootInterval { lo: m, hi: self.hi.clone() }
        } else {
            RootInterval { lo: self.lo.clone(), hi: m }
        }
    }

    fn refine_to(&self, p: &IntPoly, width: &BigRational) -> RootInterval {
        let mut cur = self.clone();
        while &cur.width() > width {
            let m = cur.midpoint();
            if p.sign_at(&m) == 0 {
                let half = width / BigRational::from_integer(BigInt::from(2));
                return RootInterval {
                    lo: &m - &half,
                    hi: m + half,
                };
            }
            cur = cur.bisect(p);
        }
        cur
    }
}

impl Serialize for RootInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RootInterval", 2)?;
        st.serialize_field("lo", &format_rational(&self.lo))?;
        st.serialize_field("hi", &format_rational(&self.hi))?;
        st.end()
    }
}

/// The largest negative root, or the sentinel when there is none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Zeta {
    NegInfinity,
    Root(RootInterval),
}

impl Zeta {
    pub fn interval(&self) -> Option<&RootInterval> {
        match self {
            Zeta::NegInfinity => None,
            Zeta::Root(iv) => Some(iv),
        }
    }

    pub fn approx(&self) -> f64 {
        self.interval().map_or(f64::NEG_INFINITY, RootInterval::approx)
    }
}

impl Serialize for Zeta {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Zeta::NegInfinity => s.serialize_str("-inf"),
            Zeta::Root(iv) => iv.serialize(s),
        }
    }
}

/// Certified isolation of every negative real root of a section.
#[derive(Clone, Debug)]
pub struct RootAnalysis {
    section: UnivariatePoly,
    square_free: UnivariatePoly,
    sf_int: IntPoly,
    negative_roots: Vec<RootInterval>,
}

impl RootAnalysis {
    pub fn section(&self) -> &UnivariatePoly {
        &self.section
    }

    pub fn square_free(&self) -> &UnivariatePoly {
        &self.square_free
    }

    /// Disjoint isolating intervals, ascending.
    pub fn negative_roots(&self) -> &[RootInterval] {
        &self.negative_roots
    }

    pub fn zeta(&self) -> Zeta {
        self.negative_roots
            .last()
            .cloned()
            .map_or(Zeta::NegInfinity, Zeta::Root)
    }

    /// Sign of the square-free part at `x`.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        self.sf_int.sign_at(x)
    }

    /// Halves the rightmost isolating interval.
    pub fn refine_zeta(&mut self) {
        if let Some(last) = self.negative_roots.last_mut() {
            *last = last.bisect(&self.sf_int);
        }
    }
}

impl Serialize for RootAnalysis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs = |p: &UnivariatePoly| -> Vec<String> { p.coeffs().iter().map(format_rational).collect() };
        let zeta = self.zeta();
        let mut st = s.serialize_struct("RootAnalysis", 5)?;
        st.serialize_field("section", &coeffs(&self.section))?;
        st.serialize_field("square_free", &coeffs(&self.square_free))?;
        st.serialize_field("negative_roots", &self.negative_roots)?;
        st.serialize_field("zeta", &zeta)?;
        st.serialize_field(
            "zeta_approx",
            &zeta.interval().map(RootInterval::approx),
        )?;
        st.end()
    }
}

/// Splitting point in `(a, b)` where `p` is nonzero: the midpoint, pulled
/// toward `a` by successive halvings if the midpoint is a root.
fn split_point(p: &IntPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let mid = (a + b) / &two;
    let mut m = mid.clone();
    let mut step = (b - a) / &two;
    while p.sign_at(&m) == 0 {
        step /= &two;
        m = &mid - &step;
    }
    m
}

/// Isolates all negative real roots of `p` to intervals of width at most
/// `width`, bisecting `(-2^k, 0)` where `2^k` bounds the Cauchy bound.
/// Requires `p(0) != 0`, which holds for every clique-polynomial section.
pub fn isolate_negative_roots(p: &UnivariatePoly, width: &BigRational) -> Result<RootAnalysis> {
    if !width.is_positive() {
        return Err(Error::OutOfRange("isolation width must be positive".into()));
    }
    let square_free = p.square_free()?;
    let sf_int = IntPoly::new(&square_free);
    let zero = BigRational::zero();
    if sf_int.sign_at(&zero) == 0 {
        return Err(Error::EndpointIsRoot("0/1".into()));
    }
    let mut analysis = RootAnalysis {
        section: p.clone(),
        square_free: square_free.clone(),
        sf_int,
        negative_roots: Vec::new(),
    };
    if square_free.degree() == Some(0) {
        return Ok(analysis);
    }

    let bound = cauchy_bound(&square_free);
    let mut lo = -BigRational::one();
    while -&lo < bound {
        lo *= BigRational::from_integer(BigInt::from(2));
    }
    let chain = SturmChain::new(&square_free);
    let v_lo = chain.variations_at(&lo);
    let v_hi = chain.variations_at(&zero);
    let mut stack = vec![(lo, v_lo, zero, v_hi)];
    let mut roots = Vec::new();
    while let Some((a, va, b, vb)) = stack.pop() {
        match va - vb {
            0 => {}
            1 => roots.push(RootInterval { lo: a, hi: b }.refine_to(&analysis.sf_int, width)),
            _ => {
                let m = split_point(&analysis.sf_int, &a, &b);
                let vm = chain.variations_at(&m);
                stack.push((a, va, m.clone(), vm));
                stack.push((m, vm, b, vb));
            }
        }
    }
    roots.sort_by(|x, y| x.lo.cmp(&y.lo));
    analysis.negative_roots = roots;
    Ok(analysis)
}

/// Order between two largest negative roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaOrder {
    Less,
    Greater,
    /// Certified equal: a common root of both lies in both intervals.
    Equal,
    /// Intervals still overlap after the refinement budget.
    Unresolved,
}

impl ZetaOrder {
    pub fn reversed(self) -> Self {
        match self {
            ZetaOrder::Less => ZetaOrder::Greater,
            ZetaOrder::Greater => ZetaOrder::Less,
            other => other,
        }
    }
}

pub fn compare_zeta(a: &RootAnalysis, b: &RootAnalysis) -> ZetaOrder {
    compare_zeta_with_budget(a, b, REFINEMENT_BUDGET)
}

/// Compares `zeta(a)` with `zeta(b)`. The sentinel sorts below every root
/// and equal to itself. Exact equality is detected through the gcd of the
/// square-free parts before any refinement.
pub fn compare_zeta_with_budget(a: &RootAnalysis, b: &RootAnalysis, budget: usize) -> ZetaOrder {
    let (ia, ib) = match (a.zeta(), b.zeta()) {
        (Zeta::NegInfinity, Zeta::NegInfinity) => return ZetaOrder::Equal,
        (Zeta::NegInfinity, _) => return ZetaOrder::Less,
        (_, Zeta::NegInfinity) => return ZetaOrder::Greater,
        (Zeta::Root(ia), Zeta::Root(ib)) => (ia, ib),
    };
    let disjoint = |x: &RootInterval, y: &RootInterval| {
        if x.hi <= y.lo {
            Some(ZetaOrder::Less)
        } else if y.hi <= x.lo {
            Some(ZetaOrder::Greater)
        } else {
            None
        }
    };
    if let Some(ord) = disjoint(&ia, &ib) {
        return ord;
    }

    let g = a.square_free.gcd(&b.square_free);
    if g.degree().is_some_and(|d| d >= 1) {
        let lo = (&ia.lo).max(&ib.lo);
        let hi = (&ia.hi).min(&ib.hi);
        // endpoints are non-roots of one of the two polynomials, hence of g
        let chain = SturmChain::new(&g);
        if chain.variations_at(lo) > chain.variations_at(hi) {
            return ZetaOrder::Equal;
        }
    }

    let (mut ia, mut ib) = (ia, ib);
    for _ in 0..budget {
        ia = ia.bisect(&a.sf_int);
        ib = ib.bisect(&b.sf_int);
        if let Some(ord) = disjoint(&ia, &ib) {
            return ord;
        }
    }
    ZetaOrder::Unresolved
}

/// Exact order of `zeta` relative to the rational `q`; `None` for the
/// sentinel.
pub fn compare_root_with(analysis: &RootAnalysis, q: &BigRational) -> Option<Ordering> {
    let iv = analysis.negative_roots.last()?;
    if q <= &iv.lo {
        return Some(Ordering::Greater);
    }
    if q >= &iv.hi {
        return Some(Ordering::Less);
    }
    let s = analysis.sf_int.sign_at(q);
    Some(if s == 0 {
        Ordering::Equal
    } else if s == analysis.sf_int.sign_at(&iv.lo) {
        // root lies in (q, hi)
        Ordering::Greater
    } else {
        Ordering::Less
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[i64]) -> UnivariatePoly {
        UnivariatePoly::from_ints(c)
    }

    fn contains(iv: &RootInterval, q: &BigRational) -> bool {
        &iv.lo < q && q < &iv.hi
    }

    #[test]
    fn sturm_count_examples() {
        assert_eq!(sturm_count(&p(&[1, 2]), &int(-1), &int(0)).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[1, 1, 1]), &int(-10), &int(0)).unwrap(), 0);
        let sf = p(&[1, 3, 3, 1]).square_free().unwrap();
        assert_eq!(sturm_count(&sf, &int(-2), &int(0)).unwrap(), 1);
        assert!(matches!(
            sturm_count(&p(&[1, 1]), &int(-1), &int(0)),
            Err(Error::EndpointIsRoot(_))
        ));
        assert!(sturm_count(&p(&[1, 1]), &int(0), &int(-2)).is_err());
    }

    #[test]
    fn isolation_examples() {
        let a = isolate_negative_roots(&p(&[1, 3]), &default_width()).unwrap();
        assert_eq!(a.negative_roots().len(), 1);
        let iv = a.zeta().interval().unwrap().clone();
        assert!(contains(&iv, &rat(-1, 3)));
        assert!(iv.width() <= default_width());

        let b = isolate_negative_roots(&p(&[1, 4, 4]), &default_width()).unwrap();
        assert!(contains(b.zeta().interval().unwrap(), &rat(-1, 2)));

        let c = isolate_negative_roots(&p(&[1, 1, 1]), &default_width()).unwrap();
        assert_eq!(c.zeta(), Zeta::NegInfinity);
    }

    #[test]
    fn isolates_several_close_roots() {
        // (1 + 2x)(1 + 3x)(1 + 5x)(1 - x)
        let q = &(&p(&[1, 2]) * &p(&[1, 3])) * &(&p(&[1, 5]) * &p(&[1, -1]));
        let a = isolate_negative_roots(&q, &pow2_neg(20)).unwrap();
        let roots = a.negative_roots();
        assert_eq!(roots.len(), 3);
        assert!(contains(&roots[0], &rat(-1, 2)));
        assert!(contains(&roots[1], &rat(-1, 3)));
        assert!(contains(&roots[2], &rat(-1, 5)));
        for iv in roots {
            assert_ne!(a.sign_at(&iv.lo), 0);
            assert_eq!(a.sign_at(&iv.lo), -a.sign_at(&iv.hi));
        }
    }

    #[test]
    fn rejects_zero_and_root_at_origin() {
        assert!(isolate_negative_roots(&p(&[]), &default_width()).is_err());
        assert!(isolate_negative_roots(&p(&[0, 1]), &default_width()).is_err());
    }

    #[test]
    fn real_rootedness() {
        assert!(is_real_rooted(&p(&[1, 2, 1])).unwrap());
        assert!(!is_real_rooted(&p(&[1, 1, 1])).unwrap());
        assert!(is_real_rooted(&p(&[5])).unwrap());
        // (1 + x^2)(1 + x)^2 is not real-rooted
        assert!(!is_real_rooted(&(&p(&[1, 0, 1]) * &p(&[1, 2, 1]))).unwrap());
        assert_eq!(real_root_count(&p(&[-1, 0, 1])).unwrap(), 2);
    }

    #[test]
    fn comparisons() {
        let third = isolate_negative_roots(&p(&[1, 3]), &default_width()).unwrap();
        let half = isolate_negative_roots(&p(&[1, 2]), &default_width()).unwrap();
        let none = isolate_negative_roots(&p(&[1, 1, 1]), &default_width()).unwrap();
        let one = isolate_negative_roots(&p(&[1, 1]), &default_width()).unwrap();
        assert_eq!(compare_zeta(&third, &half), ZetaOrder::Greater);
        assert_eq!(compare_zeta(&half, &third), ZetaOrder::Less);
        assert_eq!(compare_zeta(&none, &one), ZetaOrder::Less);
        assert_eq!(compare_zeta(&none, &none), ZetaOrder::Equal);
        assert_eq!(compare_zeta(&third, &third.clone()), ZetaOrder::Equal);
    }

    #[test]
    fn equal_irrational_roots_are_certified_equal() {
        // 1 + 5x + 5x^2 and (1 + 5x + 5x^2)(1 + x): same largest negative root
        let a = isolate_negative_roots(&p(&[1, 5, 5]), &pow2_neg(4)).unwrap();
        let b = isolate_negative_roots(&(&p(&[1, 5, 5]) * &p(&[1, 1])), &pow2_neg(10)).unwrap();
        assert_eq!(compare_zeta(&a, &b), ZetaOrder::Equal);
    }

    #[test]
    fn coarse_intervals_are_refined_on_demand() {
        let a = isolate_negative_roots(&p(&[1, 3]), &int(4)).unwrap();
        let b = isolate_negative_roots(&p(&[1000, 3001]), &int(4)).unwrap();
        // roots -1/3 and -1000/3001 differ by about 1e-4
        assert_eq!(compare_zeta(&a, &b), ZetaOrder::Less);
        assert_eq!(compare_zeta_with_budget(&a, &b, 2), ZetaOrder::Unresolved);
    }

    #[test]
    fn root_versus_rational() {
        let a = isolate_negative_roots(&p(&[1, 4, 4]), &default_width()).unwrap();
        assert_eq!(compare_root_with(&a, &rat(-1, 2)), Some(Ordering::Equal));
        assert_eq!(compare_root_with(&a, &rat(-1, 3)), Some(Ordering::Less));
        assert_eq!(compare_root_with(&a, &rat(-2, 3)), Some(Ordering::Greater));
        let none = isolate_negative_roots(&p(&[1, 1, 1]), &default_width()).unwrap();
        assert_eq!(compare_root_with(&none, &int(-1)), None);
    }
}
