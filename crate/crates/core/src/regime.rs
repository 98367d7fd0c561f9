//! The parameter cases governing tilting structure.

use std::fmt;

use crate::error::Error;
use crate::Result;

/// Which parameter case governs the tilting theory.
///
/// - `Semisimple`: `q` not a root of unity, or `q = +-1` in characteristic
///   zero. Tilting and Weyl classes coincide.
/// - `CharZeroRoot { l }`: characteristic 0, `q` a root of unity with
///   `l = ord(q^2) >= 2`.
/// - `ModularQOne { p }`: `q = 1` over a field of prime characteristic `p`
///   (equivalently, the algebraic group SL2 in characteristic `p`).
/// - `Mixed { l, p }`: characteristic `p > 0` and `q` a root of unity
///   different from `+-1`, so `l = ord(q^2) >= 2`. Roots of unity in
///   characteristic `p` have order prime to `p`, hence `p` never divides
///   `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Semisimple,
    CharZeroRoot { l: u32 },
    ModularQOne { p: u32 },
    Mixed { l: u32, p: u32 },
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Regime {
    pub fn semisimple() -> Self {
        Regime::Semisimple
    }

    pub fn char_zero_root(l: u32) -> Result<Self> {
        if l < 2 {
            return Err(Error::InvalidRegime(format!(
                "ord(q^2) must be at least 2, got {l}"
            )));
        }
        Ok(Regime::CharZeroRoot { l })
    }

    pub fn modular_q_one(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRegime(format!("{p} is not prime")));
        }
        Ok(Regime::ModularQOne { p })
    }

    pub fn mixed(l: u32, p: u32) -> Result<Self> {
        if l < 2 {
            return Err(Error::InvalidRegime(format!(
                "ord(q^2) must be at least 2, got {l}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidRegime(format!("{p} is not prime")));
        }
        if l % p == 0 {
            return Err(Error::InvalidRegime(format!(
                "no root of unity of order divisible by the characteristic exists: l = {l}, p = {p}"
            )));
        }
        Ok(Regime::Mixed { l, p })
    }

    /// The first weight where semisimplicity fails (`l`, or `p` when
    /// `q = 1`); `None` in the semisimple case.
    pub fn barrier(&self) -> Option<u32> {
        match *self {
            Regime::Semisimple => None,
            Regime::CharZeroRoot { l } => Some(l),
            Regime::ModularQOne { p } => Some(p),
            Regime::Mixed { l, .. } => Some(l),
        }
    }

    /// The characteristic of the ground field when positive.
    pub fn characteristic(&self) -> Option<u32> {
        match *self {
            Regime::ModularQOne { p } | Regime::Mixed { p, .. } => Some(p),
            _ => None,
        }
    }

    pub fn is_semisimple(&self) -> bool {
        matches!(self, Regime::Semisimple)
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Regime::Semisimple => write!(f, "semisimple"),
            Regime::CharZeroRoot { l } => write!(f, "char 0, l = {l}"),
            Regime::ModularQOne { p } => write!(f, "q = 1, p = {p}"),
            Regime::Mixed { l, p } => write!(f, "mixed, l = {l}, p = {p}"),
        }
    }
}
