use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::UnivariatePoly;

/// Exact polynomial in `x` and `y` with integer coefficients, keyed by
/// `(x-degree, y-degree)`. Only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    /// `c x^i y^j`
    pub fn monomial(i: u32, j: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms sorted by `(i, j)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Multiplication by `x^di y^dj`.
    pub fn shift(&self, di: u32, dj: u32) -> Self {
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients, i.e. the value at `x = y = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The univariate polynomial in `x` obtained by fixing `y = y0`:
    /// the coefficient of `x^i` is `sum_j c_{i,j} y0^j`.
    pub fn section_at_y(&self, y0: &BigRational) -> UnivariatePoly {
        let deg = self.x_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![BigRational::zero(); deg];
        let mut powers: Vec<BigRational> = vec![BigRational::one()];
        for (&(i, j), c) in &self.terms {
            while powers.len() <= j as usize {
                let next = powers.last().unwrap() * y0;
                powers.push(next);
            }
            coeffs[i as usize] += &powers[j as usize] * BigRational::from_integer(c.clone());
        }
        UnivariatePoly::new(coeffs)
    }

    /// Exact rational evaluation.
    pub fn evaluate_exact(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.section_at_y(y).eval(x)
    }

    /// Floating-point evaluation for diagnostics; never used to certify.
    pub fn evaluate(&self, x: Complex64, y: Complex64) -> Complex64 {
        let mut by_x: BTreeMap<u32, Complex64> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let c = c.to_f64().unwrap_or(f64::NAN);
            *by_x.entry(i).or_default() += y.powu(j) * c;
        }
        let top = by_x.keys().next_back().copied().unwrap_or(0);
        (0..=top)
            .rev()
            .fold(Complex64::zero(), |acc, i| acc * x + by_x.get(&i).copied().unwrap_or_default())
    }

    /// Terms with `i == j` as a polynomial in the product `xy`: entry `k`
    /// is the coefficient of `(xy)^k`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let top = self.x_degree().unwrap_or(0) as usize;
        (0..=top).map(|k| self.coeff(k as u32, k as u32)).collect()
    }

    /// Structural checks for a B-clique polynomial: constant term 1,
    /// nonnegative coefficients, `j <= min(i, |B|)` and `i <= omega`.
    pub fn check_clique_shape(&self, omega: usize, b_len: usize) -> Result<(), String> {
        if self.coeff(0, 0) != BigInt::one() {
            return Err("constant term is not 1".into());
        }
        for (&(i, j), c) in &self.terms {
            if c.is_negative() {
                return Err(format!("negative coefficient at ({i}, {j})"));
            }
            if j > i || j as usize > b_len {
                return Err(format!("term ({i}, {j}) outside 0 <= j <= min(i, |B|)"));
            }
            if i as usize > omega {
                return Err(format!("x-degree {i} exceeds clique number {omega}"));
            }
        }
        Ok(())
    }
}

impl AddAssign<&BivariatePoly> for BivariatePoly {
    fn add_assign(&mut self, rhs: &BivariatePoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: Self) -> BivariatePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: Self) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

/// Sorted monomials, e.g. `1 + 2x + 2xy + 3x^2y`.
impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            let a = c.abs();
            if !a.is_one() || (i == 0 && j == 0) {
                write!(f, "{a}")?;
            }
            write_power(f, 'x', i)?;
            write_power(f, 'y', j)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    i: u32,
    j: u32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

/// `{"terms": [{"i": 0, "j": 0, "c": "1"}, ...]}` sorted by `(i, j)`.
impl Serialize for BivariatePoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            terms: self
                .terms()
                .map(|(i, j, c)| TermRepr { i, j, c: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariatePoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let mut p = BivariatePoly::zero();
        for t in repr.terms {
            let c: BigInt = t.c.parse().map_err(serde::de::Error::custom)?;
            p.add_term(t.i, t.j, c);
        }
        Ok(p)
    }
}
