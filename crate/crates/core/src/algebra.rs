//! Dimensions of cell and simple modules for the cellular endomorphism
//! algebras attached to tensor powers of tilting modules.
//!
//! - Temperley-Lieb `TL_n(q + q^{-1}) = End(V^{tensor n})`: cell
//!   dimensions are Weyl multiplicities, simple dimensions are tilting
//!   multiplicities.
//! - Jones quotients `Q_n = End(V^{fusion-tensor n})`: the fusion grid
//!   restricted to labels below the barrier; characteristic-independent.
//! - `End(T^{tensor n})` for a general tilting generator `T`: cell row is
//!   the Weyl expansion of `T^{tensor n}`, simple row pushes it through
//!   `d`. Two further routes (change of basis to tensor powers of `V`;
//!   the Clebsch-Gordan recursion on cell rows) exist as verification
//!   paths.
//! - The BMW specialization takes `T = Delta(2)`; alternating binomial
//!   sums over the `V`-power grids give both cell and simple dimensions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::grothendieck::{binomial, weyl_multiplicity, WeylVector};
use crate::regime::Regime;
use crate::tensor::{fusion_grid, tilting_grid_recurrence, weyl_grid, GridKind, MultiplicityGrid};
use crate::tilting::TiltingTable;
use crate::Result;

/// Dimension report for one tensor power: labels, cell dimensions,
/// simple dimensions, and whether the algebra is semisimple (cell and
/// simple rows coincide).
///
/// `simple_dims` carries only positive entries: a label whose tilting
/// multiplicity vanishes indexes no simple module. Labels outside the
/// admissible set are absent, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDimReport {
    pub regime: Regime,
    pub n: u32,
    pub labels: Vec<u32>,
    pub cell_dims: BTreeMap<u32, BigInt>,
    pub simple_dims: BTreeMap<u32, BigInt>,
    pub semisimple: bool,
    pub warning: Option<String>,
}

/// `dim C_n(m)`: the Weyl multiplicity, zero off the label set
/// `[0, n] with m = n (mod 2)`.
pub fn tl_cell_dim(n: u32, m: i64) -> BigInt {
    weyl_multiplicity(n, m)
}

fn lambda_n(n: u32) -> Vec<u32> {
    (n % 2..=n).step_by(2).collect()
}

/// Simple-module dimensions for `TL_n` in the given regime, together
/// with the cell dimensions.
pub fn tl_simple_dims(regime: Regime, n: u32) -> Result<AlgebraDimReport> {
    let grid = match regime {
        Regime::Semisimple => weyl_grid(n),
        _ => tilting_grid_recurrence(regime, n)?,
    };
    Ok(tl_report_from_grid(regime, &grid, n))
}

/// As [`tl_simple_dims`], reading row `n` from a prebuilt grid (the Weyl
/// grid in the semisimple regime, the regime's tilting grid otherwise).
pub fn tl_report_from_grid(regime: Regime, grid: &MultiplicityGrid, n: u32) -> AlgebraDimReport {
    assert!(grid.max_n() >= n, "grid too short for n = {n}");
    let labels = lambda_n(n);
    let mut cell_dims = BTreeMap::new();
    for &m in &labels {
        cell_dims.insert(m, weyl_multiplicity(n, m as i64));
    }
    let simple_dims = grid.row(n).clone();
    let semisimple = simple_dims == cell_dims;
    AlgebraDimReport {
        regime,
        n,
        labels,
        cell_dims,
        simple_dims,
        semisimple,
        warning: None,
    }
}

/// Simple-module dimensions of the Jones quotient: the fusion row
/// restricted to labels in `[0, barrier - 2]`. The same for every regime
/// sharing the barrier.
pub fn jones_simple_dims(barrier: u32, n: u32) -> Result<BTreeMap<u32, BigInt>> {
    Ok(fusion_grid(barrier, n)?.row(n).clone())
}

/// Weyl expansion of `generator^{tensor n}` by iterated Clebsch-Gordan
/// products.
pub fn endo_cell(generator: &WeylVector, n: u32) -> WeylVector {
    let mut acc = WeylVector::unit(0);
    for _ in 0..n {
        acc = acc.cg_product(generator);
    }
    acc
}

/// Cell and simple dimensions for `End(T^{tensor n})` where the caller
/// guarantees `generator` is the Weyl-basis class of a tilting module in
/// the table's regime. A negative coefficient downstream is a hard error
/// naming the generator.
pub fn endo_dims(table: &TiltingTable, generator: &WeylVector, n: u32) -> Result<AlgebraDimReport> {
    if !generator.is_nonnegative() {
        return Err(not_tilting(generator, 0, &BigInt::from(-1)));
    }
    let cell = endo_cell(generator, n);
    let mut acc = WeylVector::zero();
    for (r, coeff) in cell.iter() {
        acc = acc.add_scaled(&table.d_row(r), coeff);
    }
    let mut simple_dims = BTreeMap::new();
    for (m, coeff) in acc.iter() {
        if coeff.is_negative() {
            return Err(not_tilting(generator, m, coeff));
        }
        simple_dims.insert(m, coeff.clone());
    }
    let cell_dims: BTreeMap<u32, BigInt> = cell.iter().map(|(m, c)| (m, c.clone())).collect();
    let labels: Vec<u32> = cell_dims.keys().copied().collect();
    let semisimple = simple_dims == cell_dims;
    Ok(AlgebraDimReport {
        regime: table.regime(),
        n,
        labels,
        cell_dims,
        simple_dims,
        semisimple,
        warning: None,
    })
}

fn not_tilting(generator: &WeylVector, weight: u32, value: &BigInt) -> Error {
    let mut text = String::new();
    let _ = write!(text, "{generator}");
    Error::NotATiltingClass {
        generator: text,
        weight,
        value: value.to_string(),
    }
}

/// Verification route for the cell row: the Clebsch-Gordan recursion
/// `dim C^n(m) = sum_s dim C^{n-1}(s) * #{j in [0, min(s,m)] :
/// a_{|m-s|+2j} != 0 counted with multiplicity}`.
pub fn endo_cell_recurrence(generator: &WeylVector, n: u32) -> WeylVector {
    let mut row = WeylVector::unit(0);
    let gmax = generator.max_weight().unwrap_or(0);
    for k in 1..=n {
        let mut next = WeylVector::zero();
        let top = gmax as i64 * k as i64;
        for (s, c) in row.iter() {
            for m in 0..=top {
                let mut inner = BigInt::zero();
                let bound = (s as i64).min(m);
                for j in 0..=bound {
                    inner += generator.coeff(((m - s as i64).abs() + 2 * j) as u32);
                }
                if !inner.is_zero() {
                    next.add_term(m, &(c * inner));
                }
            }
        }
        row = next;
    }
    row
}

/// Verification route for the simple row: write the cell class in the
/// basis of tensor powers of `V`, then contract with the regime's
/// `(V^r : T(m))` grid.
pub fn endo_simple_method2(
    regime: Regime,
    generator: &WeylVector,
    n: u32,
) -> Result<BTreeMap<u32, BigInt>> {
    let cell = endo_cell(generator, n);
    let b = cell.to_vpower_coeffs();
    let max_r = b.keys().next_back().copied().unwrap_or(0);
    let grid = match regime {
        Regime::Semisimple => weyl_grid(max_r),
        _ => tilting_grid_recurrence(regime, max_r)?,
    };
    let mut out: BTreeMap<u32, BigInt> = BTreeMap::new();
    for (r, coeff) in b {
        for (m, mult) in grid.row(r) {
            let entry = out.entry(*m).or_insert_with(BigInt::zero);
            *entry += &coeff * mult;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Semisimplicity of `End(Delta(m)^{tensor n})` for `m` below the
/// barrier: holds exactly when `n * m` stays below the barrier. Requires
/// a barrier larger than 2.
pub fn endo_semisimple(regime: Regime, m: u32, n: u32) -> Result<bool> {
    let Some(l) = regime.barrier() else {
        return Err(Error::Unsupported(
            "semisimplicity criterion needs a root-of-unity regime".into(),
        ));
    };
    if l <= 2 {
        return Err(Error::Unsupported(format!(
            "semisimplicity criterion requires barrier > 2, got {l}"
        )));
    }
    if m >= l {
        return Err(Error::Unsupported(format!(
            "criterion applies to m below the barrier: m = {m}, barrier = {l}"
        )));
    }
    Ok((n as u64) * (m as u64) < l as u64)
}

/// Checks that `Delta(2)` is tilting in the regime; returns the `l = 6`
/// caveat when applicable.
fn bmw_admissibility(regime: Regime) -> Result<Option<String>> {
    match regime {
        Regime::ModularQOne { p: 2 } => Err(Error::Unsupported(
            "the 3-dimensional Weyl module is not tilting for q = 1 in characteristic 2".into(),
        )),
        Regime::CharZeroRoot { l: 2 } | Regime::Mixed { l: 2, .. } => Err(Error::Unsupported(
            "the 3-dimensional Weyl module is not tilting when q is a 4th root of unity (l = 2)"
                .into(),
        )),
        Regime::CharZeroRoot { l: 6 } | Regime::Mixed { l: 6, .. } => Ok(Some(
            "l = 6: dimensions describe End(W^n); surjectivity from the braid group onto it is not known here"
                .into(),
        )),
        _ => Ok(None),
    }
}

/// Cell dimensions for `End(W^{tensor n})`, `W` the 3-dimensional Weyl
/// module, by the alternating binomial sum
/// `dim C(s) = sum_i (-1)^i C(n,i) a_{2(n-i),s}`. Regime-independent.
pub fn bmw_cell_closed(n: u32) -> BTreeMap<u32, BigInt> {
    let mut out = BTreeMap::new();
    let mut s = 0u32;
    while s <= 2 * n {
        let mut v = BigInt::zero();
        for i in 0..=n {
            let term = binomial(n as u64, i as i64) * weyl_multiplicity(2 * (n - i), s as i64);
            if i % 2 == 0 {
                v += term;
            } else {
                v -= term;
            }
        }
        debug_assert!(!v.is_negative(), "cell dimension must be nonnegative");
        if !v.is_zero() {
            out.insert(s, v);
        }
        s += 2;
    }
    out
}

/// Cell dimensions by the recursion `dim C^n(0) = dim C^{n-1}(2)`,
/// `dim C^n(s) = dim C^{n-1}(s-2) + dim C^{n-1}(s) + dim C^{n-1}(s+2)`.
pub fn bmw_cell_recurrence(n: u32) -> BTreeMap<u32, BigInt> {
    let mut row: BTreeMap<u32, BigInt> = BTreeMap::from([(0, BigInt::from(1))]);
    for _ in 0..n {
        let at = |m: i64| -> BigInt {
            if m < 0 {
                BigInt::zero()
            } else {
                row.get(&(m as u32)).cloned().unwrap_or_else(BigInt::zero)
            }
        };
        let top = row.keys().next_back().copied().unwrap_or(0) + 2;
        let mut next = BTreeMap::new();
        let mut s = 0u32;
        while s <= top {
            let v = if s == 0 {
                at(2)
            } else {
                at(s as i64 - 2) + at(s as i64) + at(s as i64 + 2)
            };
            if !v.is_zero() {
                next.insert(s, v);
            }
            s += 2;
        }
        row = next;
    }
    row
}

/// Cell and simple dimensions for the BMW specialization
/// `W = Delta(2)`: simple dimensions are the alternating binomial sums
/// `sum_i (-1)^i C(n,i) b_{2(n-i),s}` over the regime's tilting grid.
pub fn bmw_dims(regime: Regime, n: u32) -> Result<AlgebraDimReport> {
    let grid = match regime {
        Regime::Semisimple => weyl_grid(2 * n),
        _ => tilting_grid_recurrence(regime, 2 * n)?,
    };
    bmw_report_from_grid(regime, &grid, n)
}

/// As [`bmw_dims`], reading from a prebuilt grid with rows to `2n`.
pub fn bmw_report_from_grid(
    regime: Regime,
    grid: &MultiplicityGrid,
    n: u32,
) -> Result<AlgebraDimReport> {
    let warning = bmw_admissibility(regime)?;
    assert!(grid.max_n() >= 2 * n, "grid too short for n = {n}");
    debug_assert!(matches!(grid.kind(), GridKind::Tilting | GridKind::Weyl));

    let cell_dims = bmw_cell_closed(n);
    let mut simple_dims = BTreeMap::new();
    let mut s = 0u32;
    while s <= 2 * n {
        let mut v = BigInt::zero();
        for i in 0..=n {
            let term = binomial(n as u64, i as i64) * grid.entry(2 * (n - i), s);
            if i % 2 == 0 {
                v += term;
            } else {
                v -= term;
            }
        }
        if v.is_negative() {
            return Err(Error::NegativeMultiplicity {
                n,
                m: s,
                value: v.to_string(),
            });
        }
        if !v.is_zero() {
            simple_dims.insert(s, v);
        }
        s += 2;
    }

    let labels: Vec<u32> = cell_dims.keys().copied().collect();
    let semisimple = simple_dims == cell_dims;
    Ok(AlgebraDimReport {
        regime,
        n,
        labels,
        cell_dims,
        simple_dims,
        semisimple,
        warning,
    })
}
