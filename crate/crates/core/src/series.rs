//! Truncated power series in `t` whose coefficients are integer polynomials
//! in `x`, `y`, `z`, with the generating functions used as oracles.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Default truncation order in `t`.
pub const DEFAULT_ORDER: usize = 12;

/// Exponents of `x`, `y`, `z`.
pub type Monomial = [u32; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }
}

/// Sparse polynomial in `x, y, z` with exact integer coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly(BTreeMap<Monomial, BigInt>);

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Poly::term([0, 0, 0], c)
    }

    pub fn term(m: Monomial, c: i64) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, BigInt::from(c));
        p
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0; 3];
        m[v.index()] = 1;
        Poly::term(m, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.0.get(&m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.0.iter()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff([0, 0, 0])
    }

    fn map_monomials(&self, f: impl Fn(Monomial) -> Monomial) -> Poly {
        let mut out = Poly::zero();
        for (&m, c) in &self.0 {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Substitute 1 for `v`.
    pub fn specialize(&self, v: Var) -> Poly {
        self.map_monomials(|mut m| {
            m[v.index()] = 0;
            m
        })
    }

    pub fn swap_yz(&self) -> Poly {
        self.map_monomials(|[x, y, z]| [x, z, y])
    }

    /// Coefficients of a polynomial in `x` alone, lowest degree first.
    pub fn x_coefficients(&self) -> Vec<BigInt> {
        let len = self.0.keys().map(|m| m[0] as usize + 1).max().unwrap_or(0);
        let mut out = vec![BigInt::zero(); len];
        for (m, c) in &self.0 {
            out[m[0] as usize] += c;
        }
        out
    }

    fn monomial_key(m: Monomial) -> String {
        let mut s = String::new();
        for (name, e) in ['x', 'y', 'z'].into_iter().zip(m) {
            match e {
                0 => {}
                1 => s.push(name),
                _ => s.push_str(&format!("{name}^{e}")),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// `{monomial: coefficient}`, with `"1"` for the constant monomial.
    /// Coefficients outside the `i64` range are written as strings.
    pub fn to_json_value(&self) -> Value {
        let mut map = Map::new();
        for (&m, c) in &self.0 {
            let v = c.to_i64().map_or_else(|| Value::String(c.to_string()), Value::from);
            map.insert(Poly::monomial_key(m), v);
        }
        Value::Object(map)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        // graded order: total degree, then x, y, z exponents
        let mut terms: Vec<(&Monomial, &BigInt)> = self.0.iter().collect();
        terms.sort_by_key(|(m, _)| (m.iter().sum::<u32>(), **m));
        for (i, (&m, c)) in terms.into_iter().enumerate() {
            let key = Poly::monomial_key(m);
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if key == "1" {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&key)?;
            } else {
                write!(f, "{abs}{key}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&m, c) in &rhs.0 {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|(&m, c)| (m, -c)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, c) in &self.0 {
            for (b, d) in &rhs.0 {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], c * d);
            }
        }
        out
    }
}

/// Power series in `t` truncated after `t^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Poly>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Poly::zero(); order + 1] }
    }

    pub fn constant(order: usize, p: Poly) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = p;
        s
    }

    pub fn one(order: usize) -> Self {
        Series::constant(order, Poly::one())
    }

    /// `p · t^d`; zero if `d` exceeds the order.
    pub fn monomial(order: usize, d: usize, p: Poly) -> Self {
        let mut s = Series::zero(order);
        if d <= order {
            s.coeffs[d] = p;
        }
        s
    }

    /// From coefficients, lowest degree first, padded or truncated to
    /// `order`.
    pub fn from_coeffs(order: usize, coeffs: Vec<Poly>) -> Self {
        let mut s = Series::zero(order);
        for (d, p) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[d] = p;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^d`; zero beyond the order.
    pub fn coeff(&self, d: usize) -> Poly {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    fn zip_with(&self, rhs: &Series, f: impl Fn(&Poly, &Poly) -> Poly) -> Series {
        let order = self.order().min(rhs.order());
        Series { coeffs: (0..=order).map(|d| f(&self.coeffs[d], &rhs.coeffs[d])).collect() }
    }

    /// Multiply every coefficient by `p`.
    pub fn scale(&self, p: &Poly) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Series {
        let order = self.order();
        let mut s = Series::zero(order);
        for d in k..=order {
            s.coeffs[d] = self.coeffs[d - k].clone();
        }
        s
    }

    /// `1 / self`; the constant term must be `±1`.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        let sign = c0.constant_term();
        if c0.terms().count() != 1 || !(sign.is_one() || (-&sign).is_one()) {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv0 = Poly::constant(if sign.is_one() { 1 } else { -1 });
        let order = self.order();
        let mut out = Series::zero(order);
        out.coeffs[0] = inv0.clone();
        for d in 1..=order {
            let mut acc = Poly::zero();
            for i in 1..=d {
                acc = &acc + &(&self.coeffs[i] * &out.coeffs[d - i]);
            }
            out.coeffs[d] = -&(&acc * &inv0);
        }
        Ok(out)
    }

    pub fn specialize(&self, v: Var) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| c.specialize(v)).collect() }
    }

    pub fn swap_yz(&self) -> Series {
        Series { coeffs: self.coeffs.iter().map(Poly::swap_yz).collect() }
    }

    /// `{degree: {monomial: coefficient}}`, omitting zero coefficients.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (d, p) in self.coeffs.iter().enumerate() {
            if !p.is_zero() {
                map.insert(d.to_string(), p.to_json_value());
            }
        }
        Value::Object(map)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let body = p.to_string();
            let simple = p.terms().count() == 1;
            let tpow = match d {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{d}"),
            };
            if d == 0 {
                f.write_str(&body)?;
            } else if body == "1" {
                f.write_str(&tpow)?;
            } else if simple && !body.starts_with('-') {
                write!(f, "{body}{tpow}")?;
            } else {
                write!(f, "({body}){tpow}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        out
    }
}

/// `C(t)` from `C_0 = 1`, `C_n = Σ C_{k-1} C_{n-k}`.
pub fn catalan_series(order: usize) -> Series {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=order {
        let v = (1..=n).map(|k| &c[k - 1] * &c[n - k]).sum();
        c.push(v);
    }
    Series::from_coeffs(order, c.into_iter().map(|v| poly_from_big([0, 0, 0], v)).collect())
}

fn poly_from_big(m: Monomial, c: BigInt) -> Poly {
    let mut p = Poly::zero();
    p.add_term(m, c);
    p
}

/// `N(x,t)`, the solution of `N = 1 + t(x-1)N + tN²`, coefficient by
/// coefficient.
pub fn narayana_series(order: usize) -> Series {
    let xm1 = &Poly::var(Var::X) - &Poly::one();
    let mut n: Vec<Poly> = vec![Poly::one()];
    for d in 1..=order {
        let mut acc = &xm1 * &n[d - 1];
        for i in 0..d {
            acc = &acc + &(&n[i] * &n[d - 1 - i]);
        }
        n.push(acc);
    }
    Series::from_coeffs(order, n)
}

/// `C(v,t) = 1 / (1 - v t C(t))`.
pub fn ballot_series(v: Var, order: usize) -> Series {
    let vtc = catalan_series(order).shift(1).scale(&Poly::var(v));
    (&Series::one(order) - &vtc).reciprocal().expect("constant term is 1")
}

/// `Σ_n Π_{k=1..n} (1 - (1-t)^k)`, truncated.
pub fn fishburn_series(order: usize) -> Series {
    let one = Series::one(order);
    let one_minus_t = &one - &Series::monomial(order, 1, Poly::one());
    let mut total = one.clone();
    let mut product = one.clone();
    let mut power = one.clone();
    // the n-th summand has t-valuation n, so n ≤ order suffices
    for _ in 1..=order {
        power = &power * &one_minus_t;
        product = &product * &(&one - &power);
        total = &total + &product;
    }
    total
}

/// `1 + yzt C(y,t) C(z,t)`.
pub fn ballot_product_series(order: usize) -> Series {
    let yz = &Poly::var(Var::Y) * &Poly::var(Var::Z);
    let prod = &ballot_series(Var::Y, order) * &ballot_series(Var::Z, order);
    &Series::one(order) + &prod.shift(1).scale(&yz)
}

/// `1 + xyzt / ((1 - ytN)(1 - zt(N + x - 1)))` with `N = N(x,t)`.
pub fn narayana_joint_series(order: usize) -> Series {
    let one = Series::one(order);
    let n = narayana_series(order);
    let a = &one - &n.shift(1).scale(&Poly::var(Var::Y));
    let xm1 = Series::constant(order, &Poly::var(Var::X) - &Poly::one());
    let b = &one - &(&n + &xm1).shift(1).scale(&Poly::var(Var::Z));
    let denom = (&a * &b).reciprocal().expect("constant term is 1");
    let xyz = &(&Poly::var(Var::X) * &Poly::var(Var::Y)) * &Poly::var(Var::Z);
    &one + &denom.shift(1).scale(&xyz)
}

/// `Σ x^{s1} y^{s2} z^{s3} t^{size}` over `(size, [s1, s2, s3])` items;
/// items larger than `order` fall outside the truncation.
pub fn distribution_polynomial<I>(order: usize, items: I) -> Series
where
    I: IntoIterator<Item = (usize, Monomial)>,
{
    let mut s = Series::zero(order);
    for (size, m) in items {
        if size <= order {
            s.coeffs[size].add_term(m, BigInt::one());
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs().iter().map(|p| p.constant_term().to_i64().unwrap()).collect()
    }

    fn x_poly(cs: &[i64]) -> Poly {
        let mut p = Poly::zero();
        for (e, &c) in cs.iter().enumerate() {
            p.add_term([e as u32, 0, 0], BigInt::from(c));
        }
        p
    }

    #[test]
    fn arithmetic() {
        let t = Series::monomial(4, 1, Poly::one());
        let one = Series::one(4);
        let prod = &(&one + &t) * &(&one - &t);
        assert_eq!(ints(&prod), vec![1, 0, -1, 0, 0]);
        assert_eq!(ints(&(&one - &t).reciprocal().unwrap()), vec![1; 5]);
        let a = &(&one + &t.scale(&Poly::var(Var::X))) - &t.shift(2);
        assert_eq!(a.reciprocal().unwrap().reciprocal().unwrap(), a);
        assert_eq!(Series::constant(3, Poly::constant(2)).reciprocal(), Err(Error::NonUnitConstantTerm));
        assert_eq!(Series::constant(3, Poly::var(Var::X)).reciprocal(), Err(Error::NonUnitConstantTerm));
        assert_eq!(ints(&Series::constant(3, Poly::constant(-1)).reciprocal().unwrap()), vec![-1, 0, 0, 0]);
    }

    #[test]
    fn catalan_and_fishburn() {
        assert_eq!(ints(&catalan_series(6)), vec![1, 1, 2, 5, 14, 42, 132]);
        assert_eq!(ints(&fishburn_series(9)), vec![1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240]);
        assert_eq!(ints(&fishburn_series(0)), vec![1]);
    }

    #[test]
    fn narayana() {
        let n = narayana_series(DEFAULT_ORDER);
        assert_eq!(n.coeff(3), x_poly(&[0, 1, 3, 1]));
        assert_eq!(n.coeff(4), x_poly(&[0, 1, 6, 6, 1]));
        // N = 1 + t(x-1)N + tN²
        let one = Series::one(DEFAULT_ORDER);
        let xm1 = &Poly::var(Var::X) - &Poly::one();
        let rhs = &(&one + &n.shift(1).scale(&xm1)) + &(&n * &n).shift(1);
        assert_eq!(rhs, n);
        assert_eq!(ints(&n.specialize(Var::X)), ints(&catalan_series(DEFAULT_ORDER)));
    }

    #[test]
    fn ballot_rows() {
        let b = ballot_series(Var::Y, 4);
        let y = |cs: &[i64]| {
            let mut p = Poly::zero();
            for (e, &c) in cs.iter().enumerate() {
                p.add_term([0, e as u32, 0], BigInt::from(c));
            }
            p
        };
        assert_eq!(b.coeff(0), y(&[1]));
        assert_eq!(b.coeff(1), y(&[0, 1]));
        assert_eq!(b.coeff(2), y(&[0, 1, 1]));
        assert_eq!(b.coeff(3), y(&[0, 2, 2, 1]));
    }

    #[test]
    fn joint_forms() {
        let t15 = ballot_product_series(DEFAULT_ORDER);
        let mut want = Poly::zero();
        want.add_term([0, 2, 1], BigInt::one());
        want.add_term([0, 1, 2], BigInt::one());
        assert_eq!(t15.coeff(2), want);
        assert_eq!(t15.swap_yz(), t15);
        let t16 = narayana_joint_series(DEFAULT_ORDER);
        assert_eq!(t16.specialize(Var::X), t15);
        let yz1 = t16.specialize(Var::Y).specialize(Var::Z);
        assert_eq!(yz1, narayana_series(DEFAULT_ORDER));
        assert_eq!(yz1.coeff(3), x_poly(&[0, 1, 3, 1]));
        let all1 = t15.specialize(Var::Y).specialize(Var::Z);
        assert_eq!(ints(&all1), ints(&catalan_series(DEFAULT_ORDER)));
    }

    #[test]
    fn distribution_and_output() {
        let d = distribution_polynomial(3, [(3, [1, 0, 0]), (3, [2, 0, 0]), (3, [2, 0, 0]), (3, [2, 0, 0]), (3, [3, 0, 0])]);
        assert_eq!(d.coeff(3), x_poly(&[0, 1, 3, 1]));
        assert_eq!(distribution_polynomial(3, []), Series::zero(3));
        assert_eq!(d.coeff(3).to_string(), "x + 3x^2 + x^3");
        assert_eq!(d.to_string(), "(x + 3x^2 + x^3)t^3 + O(t^4)");
        assert_eq!(d.to_json().to_string(), r#"{"3":{"x":1,"x^2":3,"x^3":1}}"#);
        assert_eq!(catalan_series(2).to_string(), "1 + t + 2t^2 + O(t^3)");
        assert_eq!((&Poly::one() - &Poly::var(Var::Y)).to_string(), "1 - y");
    }
}
