//! Exact integer polynomials and the ring `Z[rho(n)]`, `rho(n) = 2cos(pi/n)`.
//!
//! * `R(n, x)`: `R(0) = 2`, `R(1) = x`, `R(n) = x R(n-1) - R(n-2)`, so that
//!   `R(n, 2cos t) = 2cos(n t)`.
//! * `C(n, x)`: minimal polynomial of `rho(n)`, obtained by folding the
//!   palindromic cyclotomic polynomial `Phi_2n(z)` into `x = z + 1/z`.
//! * `MPR2(n, x)`: minimal polynomial of `2cos(2 pi/n)`, by folding `Phi_n`
//!   or by multiplying out its roots `R(2k, rho(n))`, `k` in `RRS*(n)`.
//! * `P*(b, x)`: the monic polynomial with roots `2cos(pi k/b)`, `k` in
//!   `RRS*(b)`, with coefficients in `Z[rho(b)]`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fixed::{cos_pi_ratio, Fixed};
use crate::residue::{rrs_star, Modulus, OddModulus};

/// Dense polynomial over `Z`, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(alloc::vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (IntPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![BigInt::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let lead = core::mem::take(&mut rem[i + d]);
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs[..d].iter().enumerate() {
                rem[i + j] -= &lead * c;
            }
            quot[i] = lead;
        }
        rem.truncate(d);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &IntPoly::constant(c.clone());
        }
        acc
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_fixed(&self, x: &Fixed) -> Fixed {
        let mut acc = Fixed {
            value: BigInt::zero(),
            prec: x.prec,
        };
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Fixed::from_int(c, x.prec));
        }
        acc
    }

    /// Value at `2cos(pi num/den)`, evaluated in fixed point with enough
    /// bits to absorb the cancellation, then rounded to `f64`.
    pub fn eval_at_2cos_pi(&self, num: i64, den: u64) -> f64 {
        let deg = self.degree().unwrap_or(0) as u32;
        let coeff_bits = self
            .coeffs
            .iter()
            .map(|c| c.bits() as u32)
            .max()
            .unwrap_or(0);
        let prec = 96 + 2 * deg + coeff_bits;
        let mut x = cos_pi_ratio(num, den, prec);
        x.value <<= 1;
        self.eval_fixed(&x).to_f64()
    }

    pub fn render(&self, style: PolyStyle) -> String {
        let terms: Vec<Term<'_>> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| Term {
                parts: alloc::vec![(c, 0)],
                x_pow: e,
            })
            .collect();
        render_terms(&terms, style)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(PolyStyle::Compact))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

/// `R(n, x)`, monic for `n >= 1`.
pub fn chebyshev_r(n: usize) -> IntPoly {
    let x = IntPoly::x();
    let mut prev = IntPoly::from_i64(&[2]);
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The cyclotomic polynomial `Phi_m(z)`, by exact division of `z^m - 1`.
pub fn cyclotomic(m: u64) -> IntPoly {
    assert!(m >= 1);
    let divs = divisors(m);
    let mut cache: BTreeMap<u64, IntPoly> = BTreeMap::new();
    for &d in &divs {
        let mut p = IntPoly::x_pow_minus_one(d as usize);
        for (&e, phi) in &cache {
            if d % e == 0 {
                let (q, r) = p.div_rem_monic(phi);
                debug_assert!(r.is_zero());
                p = q;
            }
        }
        cache.insert(d, p);
    }
    cache.remove(&m).expect("m divides itself")
}

/// Rewrites a palindromic polynomial `p(z)` of degree `2d` as `q(x)` with
/// `z^{-d} p(z) = q(z + 1/z)`, using `z^j + z^{-j} = R(j, x)`.
pub fn fold_palindromic(p: &IntPoly) -> Result<IntPoly> {
    let malformed = |reason| Error::Malformed {
        what: "palindromic polynomial",
        reason,
    };
    let deg = p.degree().ok_or(malformed("zero polynomial"))?;
    if deg % 2 != 0 {
        return Err(malformed("odd degree"));
    }
    if (0..=deg).any(|i| p.coeff(i) != p.coeff(deg - i)) {
        return Err(malformed("coefficients are not symmetric"));
    }
    let half = deg / 2;
    let mut out = IntPoly::constant(p.coeff(half));
    for j in 1..=half {
        out = &out + &chebyshev_r(j).scale(&p.coeff(half + j));
    }
    Ok(out)
}

/// `C(n, x)`, the minimal polynomial of `2cos(pi/n)`.
pub fn minimal_poly_c(n: Modulus) -> IntPoly {
    if n.get() == 1 {
        return IntPoly::from_i64(&[2, 1]);
    }
    fold_palindromic(&cyclotomic(2 * n.get())).expect("Phi_2n is palindromic of even degree")
}

/// `MPR2(n, x)`, the minimal polynomial of `2cos(2 pi/n)`, by folding `Phi_n`.
pub fn mpr2(n: Modulus) -> IntPoly {
    match n.get() {
        1 => IntPoly::from_i64(&[-2, 1]),
        2 => IntPoly::from_i64(&[2, 1]),
        m => fold_palindromic(&cyclotomic(m)).expect("Phi_n is palindromic of even degree"),
    }
}

/// `MPR2(n, x)` as the product of `x - R(2k, rho(n))` over `k` in
/// `RRS*(n)`, reduced modulo `C(n)`.
///
/// The product is accumulated in the group ring `Z[z]/(z^{2n} - 1)` with
/// `R(k, rho) = z^k + z^{-k}`, where each factor costs a shift; the
/// coefficients are then mapped into the power basis of `Z[rho(n)]` and
/// reduced modulo `C(n)`. Fails if a coefficient is not an integer.
pub fn mpr2_product(n: Modulus) -> Result<IntPoly> {
    let ring = RhoRing::new(n);
    let ks: Vec<u64> = rrs_star(n).elements.iter().map(|&r| 2 * r).collect();
    let poly = cosine_root_product(&ring, &ks);
    poly.to_int_poly().ok_or(Error::Malformed {
        what: "MPR2 product",
        reason: "coefficient outside Z",
    })
}

/// `prod (x - R(k, rho(n)))` over `ks`, via the group ring of `C_{2n}`.
fn cosine_root_product(ring: &RhoRing, ks: &[u64]) -> RhoPoly {
    let n = ring.n as usize;
    let order = 2 * n;
    let mut identity = alloc::vec![BigInt::zero(); order];
    identity[0] = BigInt::one();
    // coefficients of x^0, x^1, ..., each a dense element of Z[C_2n]
    let mut poly: Vec<Vec<BigInt>> = alloc::vec![identity];
    for &k in ks {
        let k = k as usize % order;
        let mut next: Vec<Vec<BigInt>> =
            alloc::vec![alloc::vec![BigInt::zero(); order]; poly.len() + 1];
        for (i, coeff) in poly.iter().enumerate() {
            for (j, a) in coeff.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                next[i + 1][j] += a;
                next[i][(j + k) % order] -= a;
                next[i][(j + order - k) % order] -= a;
            }
        }
        poly = next;
    }
    let cos_values = ring.chebyshev_values(n);
    let coeffs = poly
        .iter()
        .map(|coeff| {
            debug_assert!((1..order).all(|j| coeff[j] == coeff[order - j]));
            // a_0 + a_n z^n + sum_{j<n} a_j (z^j + z^-j) with z^n = -1
            let mut acc = ring.from_int(&coeff[0] - &coeff[n % order]);
            if n == 1 {
                acc = ring.from_int(&coeff[0] - &coeff[1]);
            }
            for j in 1..n {
                if !coeff[j].is_zero() {
                    acc = ring.add(&acc, &ring.scale(&cos_values[j], &coeff[j]));
                }
            }
            acc
        })
        .collect();
    RhoPoly { n: ring.n, coeffs }
}

/// Arithmetic in `Z[rho(n)] = Z[x]/(C(n, x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoRing {
    n: u64,
    modulus: IntPoly,
}

/// An element of `Z[rho(n)]` in the power basis `1, rho, ..., rho^{d-1}`,
/// `d = deg C(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RhoElement {
    pub n: u64,
    pub coeffs: Vec<BigInt>,
}

impl RhoElement {
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The integer value, if the element lies in `Z`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Table-style rendering, e.g. `-3+2ρ^2`.
    pub fn render(&self, style: PolyStyle) -> String {
        let parts: Vec<(&BigInt, usize)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (c, p))
            .collect();
        if parts.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        write_parts(&mut out, &parts, style);
        out
    }
}

impl RhoRing {
    pub fn new(n: Modulus) -> Self {
        RhoRing {
            n: n.get(),
            modulus: minimal_poly_c(n),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `delta(n) = deg C(n)`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("C(n) is non-zero")
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn reduce(&self, p: &IntPoly) -> RhoElement {
        let (_, rem) = p.div_rem_monic(&self.modulus);
        let mut coeffs = rem.coeffs;
        coeffs.resize(self.degree(), BigInt::zero());
        RhoElement { n: self.n, coeffs }
    }

    pub fn from_int(&self, c: BigInt) -> RhoElement {
        self.reduce(&IntPoly::constant(c))
    }

    pub fn rho(&self) -> RhoElement {
        self.reduce(&IntPoly::x())
    }

    fn check(&self, u: &RhoElement) -> Result<()> {
        if u.n != self.n {
            return Err(Error::ModulusMismatch {
                left: self.n,
                right: u.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, u: &RhoElement, v: &RhoElement) -> RhoElement {
        let coeffs = u.coeffs.iter().zip(&v.coeffs).map(|(a, b)| a + b).collect();
        RhoElement { n: self.n, coeffs }
    }

    pub fn sub(&self, u: &RhoElement, v: &RhoElement) -> RhoElement {
        let coeffs = u.coeffs.iter().zip(&v.coeffs).map(|(a, b)| a - b).collect();
        RhoElement { n: self.n, coeffs }
    }

    pub fn scale(&self, u: &RhoElement, c: &BigInt) -> RhoElement {
        let coeffs = u.coeffs.iter().map(|a| a * c).collect();
        RhoElement { n: self.n, coeffs }
    }

    pub fn mul(&self, u: &RhoElement, v: &RhoElement) -> Result<RhoElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.reduce(&(&u.to_poly() * &v.to_poly())))
    }

    /// `rho * u`: a shift, then one subtraction of the monic modulus.
    pub fn mul_rho(&self, u: &RhoElement) -> RhoElement {
        let d = self.degree();
        let mut coeffs = alloc::vec![BigInt::zero(); d + 1];
        for (i, c) in u.coeffs.iter().enumerate() {
            coeffs[i + 1] = c.clone();
        }
        let top = coeffs.pop().expect("d + 1 entries");
        if !top.is_zero() {
            for (c, m) in coeffs.iter_mut().zip(&self.modulus.coeffs) {
                *c -= &top * m;
            }
        }
        RhoElement { n: self.n, coeffs }
    }

    /// `R(k, rho)` for `k = 0..=up_to`.
    pub fn chebyshev_values(&self, up_to: usize) -> Vec<RhoElement> {
        let mut out = alloc::vec![self.from_int(BigInt::from(2))];
        if up_to >= 1 {
            out.push(self.rho());
        }
        for k in 2..=up_to {
            let next = self.sub(&self.mul_rho(&out[k - 1]), &out[k - 2]);
            out.push(next);
        }
        out
    }
}

/// Product in `Z[rho(n)]`; both factors must come from the same `n`.
pub fn rho_mul(u: &RhoElement, v: &RhoElement) -> Result<RhoElement> {
    if u.n != v.n {
        return Err(Error::ModulusMismatch {
            left: u.n,
            right: v.n,
        });
    }
    RhoRing::new(Modulus::new(u.n)?).mul(u, v)
}

/// Polynomial in `x` over `Z[rho(n)]`, ascending coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoPoly {
    pub n: u64,
    pub coeffs: Vec<RhoElement>,
}

impl RhoPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs
            .last()
            .and_then(RhoElement::as_integer)
            .is_some_and(One::is_one)
    }

    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.as_integer().cloned())
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    /// Descending powers of `x`; each coefficient in ascending powers of
    /// `ρ`, parenthesised when it has several terms.
    pub fn render(&self, style: PolyStyle) -> String {
        let terms: Vec<Term<'_>> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| Term {
                parts: c
                    .coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(p, a)| (a, p))
                    .collect(),
                x_pow: e,
            })
            .collect();
        render_terms(&terms, style)
    }
}

impl fmt::Display for RhoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(PolyStyle::Compact))
    }
}

fn linear_product(ring: &RhoRing, roots: &[RhoElement]) -> RhoPoly {
    let mut coeffs = alloc::vec![ring.from_int(BigInt::one())];
    for root in roots {
        let mut next = alloc::vec![ring.from_int(BigInt::zero()); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = ring.add(&next[i + 1], c);
            let prod = ring.mul(root, c).expect("same ring");
            next[i] = ring.sub(&next[i], &prod);
        }
        coeffs = next;
    }
    RhoPoly { n: ring.n, coeffs }
}

/// `P*(b, x) = prod (x - R(k, rho(b)))` over `k` in `RRS*(b)`, with every
/// product reduced modulo `C(b)`.
pub fn p_star(b: OddModulus) -> RhoPoly {
    let ring = RhoRing::new(b.into());
    let ks = rrs_star(b.into()).elements;
    let max = *ks.last().expect("RRS* is non-empty") as usize;
    let values = ring.chebyshev_values(max);
    let roots: Vec<RhoElement> = ks.iter().map(|&k| values[k as usize].clone()).collect();
    linear_product(&ring, &roots)
}

/// `prod (x - R(2k, rho(n)))` over `RRS*(n)` with ring arithmetic
/// throughout; the slow counterpart of [`mpr2_product`].
pub fn psi_re_in_ring(n: Modulus) -> RhoPoly {
    let ring = RhoRing::new(n);
    let ks = rrs_star(n).elements;
    let max = 2 * *ks.last().expect("RRS* is non-empty") as usize;
    let values = ring.chebyshev_values(max);
    let roots: Vec<RhoElement> = ks.iter().map(|&k| values[2 * k as usize].clone()).collect();
    linear_product(&ring, &roots)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PolyStyle {
    /// `x^3-2ρx^2+(-3+2ρ^2)x-1`
    #[default]
    Compact,
    /// `x³ − 2ρx² + (−3 + 2ρ²)x − 1`
    Pretty,
}

struct Term<'a> {
    /// `(coefficient, power of ρ)`, ascending, non-zero.
    parts: Vec<(&'a BigInt, usize)>,
    x_pow: usize,
}

fn minus(style: PolyStyle) -> &'static str {
    match style {
        PolyStyle::Compact => "-",
        PolyStyle::Pretty => "\u{2212}",
    }
}

fn separator(negative: bool, style: PolyStyle) -> &'static str {
    match (style, negative) {
        (PolyStyle::Compact, false) => "+",
        (PolyStyle::Compact, true) => "-",
        (PolyStyle::Pretty, false) => " + ",
        (PolyStyle::Pretty, true) => " \u{2212} ",
    }
}

fn write_power(out: &mut String, var: char, e: usize, style: PolyStyle) {
    if e == 0 {
        return;
    }
    out.push(var);
    if e == 1 {
        return;
    }
    match style {
        PolyStyle::Compact => {
            let _ = write!(out, "^{e}");
        }
        PolyStyle::Pretty => {
            const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
            let mut digits = String::new();
            let _ = write!(digits, "{e}");
            for d in digits.bytes() {
                out.push(SUP[(d - b'0') as usize]);
            }
        }
    }
}

/// `c ρ^p` without its sign; the integer 1 is implied before a power of ρ.
fn write_monomial(out: &mut String, c: &BigInt, p: usize, style: PolyStyle) {
    let mag = c.abs();
    if p == 0 || !mag.is_one() {
        let _ = write!(out, "{mag}");
    }
    write_power(out, 'ρ', p, style);
}

fn write_parts(out: &mut String, parts: &[(&BigInt, usize)], style: PolyStyle) {
    for (j, &(c, p)) in parts.iter().enumerate() {
        if j == 0 {
            if c.is_negative() {
                out.push_str(minus(style));
            }
        } else {
            out.push_str(separator(c.is_negative(), style));
        }
        write_monomial(out, c, p, style);
    }
}

fn render_terms(terms: &[Term<'_>], style: PolyStyle) -> String {
    if terms.is_empty() {
        return String::from("0");
    }
    let mut out = String::new();
    for (i, term) in terms.iter().enumerate() {
        if let [(c, p)] = term.parts[..] {
            if i == 0 {
                if c.is_negative() {
                    out.push_str(minus(style));
                }
            } else {
                out.push_str(separator(c.is_negative(), style));
            }
            let unit = c.abs().is_one();
            if p > 0 || !unit || term.x_pow == 0 {
                write_monomial(&mut out, c, p, style);
            }
        } else {
            if i > 0 {
                out.push_str(separator(false, style));
            }
            out.push('(');
            write_parts(&mut out, &term.parts, style);
            out.push(')');
        }
        write_power(&mut out, 'x', term.x_pow, style);
    }
    out
}
