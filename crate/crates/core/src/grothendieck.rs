//! Arithmetic in the Grothendieck group of finite-dimensional sl2-type
//! modules.
//!
//! A [`WeylVector`] is an element of the Grothendieck group written in the
//! basis of Weyl-module classes `[Delta(m)]`, `m >= 0`: a sparse map from
//! highest weight to a signed arbitrary-precision coefficient.
//!
//! Invariants:
//! - all stored weights are `>= 0` (`Delta(m) = 0` for `m < 0`; negative
//!   weights are dropped at construction),
//! - no stored zero coefficients (equality is map equality),
//! - iteration is in ascending weight order.
//!
//! A [`LaurentCharacter`] is the character of such an element: a symmetric
//! integer Laurent polynomial, `chi(m) = x^m + x^{m-2} + ... + x^{-m}`.
//! Characters multiply where modules tensor, which is how the
//! Frobenius-stretched product [`twisted_product`] is computed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Binomial coefficient `C(n, k)` as an exact big integer; 0 for `k < 0`
/// or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let mut k = k as u64;
    if k > n - k {
        k = n - k;
    }
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Multiplicity of the Weyl module of highest weight `m` in the `n`-th
/// tensor power of the 2-dimensional module:
/// `C(n, r) - C(n, r-1)` with `r = (n - m)/2`, and 0 when `m < 0`,
/// `m > n`, or `n - m` is odd.
pub fn weyl_multiplicity(n: u32, m: i64) -> BigInt {
    if m < 0 || m > n as i64 || (n as i64 - m) % 2 != 0 {
        return BigInt::zero();
    }
    let r = (n as i64 - m) / 2;
    binomial(n as u64, r) - binomial(n as u64, r - 1)
}

/// The class of the `n`-th tensor power of the 2-dimensional module in the
/// Weyl basis (row `n` of the Weyl multiplicity table).
pub fn vpower_to_weyl(n: u32) -> WeylVector {
    let mut v = WeylVector::zero();
    let mut m = (n % 2) as i64;
    while m <= n as i64 {
        v.add_term(m, &weyl_multiplicity(n, m));
        m += 2;
    }
    v
}

/// Weyl expansion of `(u stretched by f) tensor w`: the character of `u`
/// has its weights multiplied by `f` (Frobenius twist for `f = p^r`,
/// quantum Frobenius for `f = ell`), is multiplied by the character of
/// `w`, and the product is expanded back in the Weyl basis.
///
/// `f = 1` recovers the plain Clebsch-Gordan product.
pub fn twisted_product(u: &WeylVector, f: u32, w: &WeylVector) -> WeylVector {
    assert!(f >= 1, "stretch factor must be positive");
    u.to_character()
        .stretch(f)
        .mul(&w.to_character())
        .expand_in_weyl()
        .expect("product of symmetric characters is symmetric")
}

/// Element of the Grothendieck group in the Weyl basis (also used for
/// signed coefficient rows over the tilting basis, which have the same
/// shape: sparse signed vectors indexed by nonnegative weights).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylVector {
    coeffs: BTreeMap<u32, BigInt>,
}

impl WeylVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single class `[Delta(m)]`.
    pub fn unit(m: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(m, BigInt::one());
        Self { coeffs }
    }

    /// Build from `(weight, coefficient)` terms. Negative weights are
    /// dropped, duplicates are summed, zero totals are removed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut v = Self::zero();
        for (m, c) in terms {
            v.add_term(m, &c);
        }
        v
    }

    /// Add `c * [Delta(m)]`; a no-op for `m < 0` or `c = 0`.
    pub fn add_term(&mut self, m: i64, c: &BigInt) {
        if m < 0 || c.is_zero() {
            return;
        }
        let m = m as u32;
        let entry = self.coeffs.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    /// Coefficient at weight `m` (zero when absent).
    pub fn coeff(&self, m: u32) -> BigInt {
        self.coeffs.get(&m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn contains(&self, m: u32) -> bool {
        self.coeffs.contains_key(&m)
    }

    /// Terms in ascending weight order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when every coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m as i64, c);
        }
        out
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, other: &Self, k: &BigInt) -> Self {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m as i64, &(c * k));
        }
        out
    }

    /// Total dimension `sum c_m * (m + 1)` (each Weyl module of highest
    /// weight `m` has dimension `m + 1`).
    pub fn dimension(&self) -> BigInt {
        self.iter()
            .map(|(m, c)| c * BigInt::from(m + 1))
            .sum()
    }

    /// Clebsch-Gordan product: bilinear extension of
    /// `[Delta(r)] * [Delta(m)] = sum of [Delta(s)]` over
    /// `|r - m| <= s <= r + m` with `s = r + m (mod 2)`.
    pub fn cg_product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (r, a) in self.iter() {
            for (m, b) in other.iter() {
                let ab = a * b;
                let lo = r.abs_diff(m);
                let hi = r + m;
                let mut s = lo;
                while s <= hi {
                    out.add_term(s as i64, &ab);
                    s += 2;
                }
            }
        }
        out
    }

    /// Character: linear extension of
    /// `chi(m) = x^m + x^{m-2} + ... + x^{-m}`.
    pub fn to_character(&self) -> LaurentCharacter {
        let mut ch = LaurentCharacter::zero();
        for (m, c) in self.iter() {
            let mut e = -(m as i64);
            while e <= m as i64 {
                ch.add_term(e, c);
                e += 2;
            }
        }
        ch
    }

    /// Coefficients `b_n` of the same class written in the basis of tensor
    /// powers of the 2-dimensional module, via the inverse binomial
    /// relation `[Delta(m)] = sum_j (-1)^{(m-j)/2} C((m+j)/2, j) [V^j]`.
    pub fn to_vpower_coeffs(&self) -> BTreeMap<u32, BigInt> {
        let mut out: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (m, a) in self.iter() {
            let mut j = (m % 2) as i64;
            while j <= m as i64 {
                let half = (m as i64 - j) / 2;
                let mut term = a * binomial((m as i64 + j) as u64 / 2, j);
                if half % 2 != 0 {
                    term = -term;
                }
                if !term.is_zero() {
                    let entry = out.entry(j as u32).or_insert_with(BigInt::zero);
                    *entry += term;
                    if entry.is_zero() {
                        out.remove(&(j as u32));
                    }
                }
                j += 2;
            }
        }
        out
    }
}

impl fmt::Display for WeylVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.iter() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{m}:{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Symmetric integer Laurent polynomial in one variable: the character of
/// a self-dual-weight sl2 module. Sparse map exponent -> coefficient, no
/// stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentCharacter {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut ch = Self::zero();
        for (e, c) in terms {
            ch.add_term(e, &c);
        }
        ch
    }

    pub fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(e, c)| self.coeff(-e) == *c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in other.iter() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    /// Multiply every exponent by `f` (weight stretching under a
    /// Frobenius-type twist).
    pub fn stretch(&self, f: u32) -> Self {
        Self::from_terms(self.iter().map(|(e, c)| (e * f as i64, c.clone())))
    }

    /// Expand in the Weyl character basis: repeatedly subtract
    /// `(leading coefficient) * chi(leading exponent)`. Unique because the
    /// Weyl characters form a basis.
    ///
    /// Fails if the character is not symmetric (corrupted input).
    pub fn expand_in_weyl(&self) -> Result<WeylVector> {
        if let Some((e, _)) = self.coeffs.iter().find(|(e, c)| self.coeff(-**e) != **c) {
            return Err(Error::AsymmetricCharacter(*e));
        }
        let mut rest = self.clone();
        let mut v = WeylVector::zero();
        while let Some((&e, c)) = rest.coeffs.iter().next_back() {
            debug_assert!(e >= 0, "symmetric nonzero character has a nonnegative leading exponent");
            let c = c.clone();
            let neg = -&c;
            let mut t = -e;
            while t <= e {
                rest.add_term(t, &neg);
                t += 2;
            }
            v.add_term(e, &c);
        }
        Ok(v)
    }
}

impl fmt::Display for LaurentCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{e}")?;
            first = false;
        }
        Ok(())
    }
}
