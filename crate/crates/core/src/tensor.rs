//! Multiplicity grids for tensor powers of the 2-dimensional module.
//!
//! Two independent algorithms produce the tilting multiplicities
//! `b_{n,m} = (V^{tensor n} : T(m))`:
//!
//! - [`tilting_grid_recurrence`]: row-by-row column recurrences. Columns
//!   `m = -2 (mod barrier)` echo the previous column, generic columns are
//!   two-term Pascal sums, and the `m = -1 (mod barrier)` columns follow
//!   the Steinberg-class recurrences (direct binomials in characteristic
//!   zero).
//! - [`tilting_grid_linear`]: push the Weyl row through the inverse
//!   change-of-basis matrix `d` of the regime's [`TiltingTable`].
//!
//! The two must agree entrywise; the test suites enforce it. A third
//! generator, [`tilt_tensor_v`], decomposes `T(m) tensor V` into
//! indecomposables and re-derives every recurrence rule.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::grothendieck::{vpower_to_weyl, weyl_multiplicity, WeylVector};
use crate::regime::Regime;
use crate::tilting::TiltingTable;
use crate::Result;

/// What a grid's entries count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridKind {
    /// Weyl multiplicities `a_{n,m}`.
    Weyl,
    /// Tilting multiplicities `b_{n,m}`.
    Tilting,
    /// Fusion-category multiplicities (columns below the barrier).
    Fusion,
}

/// Sparse row: weight -> nonnegative multiplicity.
pub type Row = BTreeMap<u32, BigInt>;

/// Rectangular grid of multiplicities, one sparse row per tensor power.
///
/// Row `n` has support only on `m <= n` with `m = n (mod 2)` (for fusion
/// grids, further truncated below the barrier). Rows are appended in `n`
/// order and never mutated afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityGrid {
    kind: GridKind,
    regime: Option<Regime>,
    barrier: Option<u32>,
    rows: Vec<Row>,
}

impl MultiplicityGrid {
    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn regime(&self) -> Option<Regime> {
        self.regime
    }

    /// Fusion barrier, for fusion grids.
    pub fn barrier(&self) -> Option<u32> {
        self.barrier
    }

    pub fn max_n(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn row(&self, n: u32) -> &Row {
        &self.rows[n as usize]
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn entry(&self, n: u32, m: u32) -> BigInt {
        self.rows[n as usize]
            .get(&m)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}

fn prev_at(prev: &Row, m: i64) -> BigInt {
    if m < 0 {
        BigInt::zero()
    } else {
        prev.get(&(m as u32)).cloned().unwrap_or_else(BigInt::zero)
    }
}

fn push_nonzero(row: &mut Row, m: u32, value: BigInt) {
    if !value.is_zero() {
        row.insert(m, value);
    }
}

fn p_valuation(mut x: u32, p: u32) -> u32 {
    debug_assert!(x > 0);
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

/// Weyl multiplicity grid `a_{n,m}`, built by the Pascal recurrence
/// `a_{n,m} = a_{n-1,m-1} + a_{n-1,m+1}`.
pub fn weyl_grid(max_n: u32) -> MultiplicityGrid {
    let mut rows: Vec<Row> = Vec::with_capacity(max_n as usize + 1);
    rows.push(Row::from([(0, BigInt::one())]));
    for n in 1..=max_n {
        let prev = &rows[n as usize - 1];
        let mut row = Row::new();
        let mut m = n % 2;
        while m <= n {
            let v = prev_at(prev, m as i64 - 1) + prev_at(prev, m as i64 + 1);
            push_nonzero(&mut row, m, v);
            m += 2;
        }
        rows.push(row);
    }
    MultiplicityGrid {
        kind: GridKind::Weyl,
        regime: None,
        barrier: None,
        rows,
    }
}

/// Tilting multiplicities by the per-regime column recurrences.
///
/// Rejects the semisimple regime, where the tilting grid coincides with
/// the Weyl grid.
pub fn tilting_grid_recurrence(regime: Regime, max_n: u32) -> Result<MultiplicityGrid> {
    let step: fn(&Row, u32, &Regime) -> Row = match regime {
        Regime::Semisimple => return Err(Error::SemisimpleTiltingGrid),
        Regime::CharZeroRoot { l } => {
            if l == 2 {
                |_prev, n, _r| char_zero_l2_row(n)
            } else {
                |prev, n, r| {
                    let Regime::CharZeroRoot { l } = *r else { unreachable!() };
                    char_zero_row(l, n, prev)
                }
            }
        }
        Regime::ModularQOne { p } => {
            if p == 2 {
                |prev, n, _r| modular_p2_row(n, prev)
            } else {
                |prev, n, r| {
                    let Regime::ModularQOne { p } = *r else { unreachable!() };
                    modular_odd_p_row(p, n, prev)
                }
            }
        }
        Regime::Mixed { l, .. } => {
            if l == 2 {
                |prev, n, r| {
                    let Regime::Mixed { p, .. } = *r else { unreachable!() };
                    mixed_l2_row(p, n, prev)
                }
            } else {
                |prev, n, r| {
                    let Regime::Mixed { l, p } = *r else { unreachable!() };
                    mixed_row(l, p, n, prev)
                }
            }
        }
    };

    let mut rows: Vec<Row> = Vec::with_capacity(max_n as usize + 1);
    rows.push(Row::from([(0, BigInt::one())]));
    for n in 1..=max_n {
        let row = step(&rows[n as usize - 1], n, &regime);
        rows.push(row);
    }
    Ok(MultiplicityGrid {
        kind: GridKind::Tilting,
        regime: Some(regime),
        barrier: None,
        rows,
    })
}

/// Char 0, `l = 2`: closed binomial columns. Odd columns equal the Weyl
/// multiplicities, even columns echo the previous Weyl row.
fn char_zero_l2_row(n: u32) -> Row {
    let mut row = Row::new();
    let mut m = n % 2;
    while m <= n {
        let v = if m % 2 == 1 {
            weyl_multiplicity(n, m as i64)
        } else {
            weyl_multiplicity(n - 1, m as i64 - 1)
        };
        push_nonzero(&mut row, m, v);
        m += 2;
    }
    row
}

/// Char 0, `l > 2`: columns `m = -1 (mod l)` filled directly from the
/// binomial formula, columns `m = l - 2 (mod l)` echo, the rest are
/// two-term sums of the previous row.
fn char_zero_row(l: u32, n: u32, prev: &Row) -> Row {
    let mut row = Row::new();
    let mut m = n % 2;
    while m <= n {
        let v = if (m + 1) % l == 0 {
            weyl_multiplicity(n, m as i64)
        } else if m % l == l - 2 {
            prev_at(prev, m as i64 - 1)
        } else {
            prev_at(prev, m as i64 - 1) + prev_at(prev, m as i64 + 1)
        };
        push_nonzero(&mut row, m, v);
        m += 2;
    }
    row
}

/// `q = 1`, `p = 2`: even columns echo; odd columns add twice the doubled
/// drop terms `m - 1 + 2^s` for `s = 1..v_2(m+1)`.
fn modular_p2_row(n: u32, prev: &Row) -> Row {
    let mut row = Row::new();
    let mut m = n % 2;
    while m <= n {
        let v = if m % 2 == 0 {
            prev_at(prev, m as i64 - 1)
        } else {
            let mut v = prev_at(prev, m as i64 - 1);
            for s in 1..=p_valuation(m + 1, 2) {
                v += prev_at(prev, m as i64 - 1 + (1i64 << s)) * 2;
            }
            v
        };
        push_nonzero(&mut row, m, v);
        m += 2;
    }
    row
}

/// Steinberg-class entry shared by the odd-prime modular recurrence:
/// for `m + 1 = b p^j` with `p` prime to `b`,
/// `b_{n,m} = b_{n-1,m-1} + 2 sum_{s<j} b_{n-1,m-1+2p^s}`, plus
/// `b_{n-1,m-1+2p^j}` unless `b = -1 (mod p)`.
fn modular_steinberg_entry(p: u32, prev: &Row, m: u32) -> BigInt {
    let j = p_valuation(m + 1, p);
    let b = (m + 1) / p.pow(j);
    let mut v = prev_at(prev, m as i64 - 1);
    let mut power = 1i64;
    for _ in 0..j {
        v += prev_at(prev, m as i64 - 1 + 2 * power) * 2;
        power *= p as i64;
    }
    if (b + 1) % p != 0 {
        v += prev_at(prev, m as i64 - 1 + 2 * power);
    }
    v
}

/// `q = 1`, odd `p`: three-way column split.
fn modular_odd_p_row(p: u32, n: u32, prev: &Row) -> Row {
    let mut row = Row::new();
    let mut m = n % 2;
    while m <= n {
        let v = if (m + 1) % p == 0 {
            modular_steinberg_entry(p, prev, m)
        } else if (m + 2) % p == 0 {
            prev_at(prev, m as i64 - 1)
        } else {
            prev_at(prev, m as i64 - 1) + prev_at(prev, m as i64 + 1)
        };
        push_nonzero(&mut row, m, v);
        m += 2;
    }
    row
}

/// Steinberg-class entry for the mixed regime at `m = t*l - 1` with
/// `t = b p^r`, `p` prime to `b`:
/// `b_{n,m} = b_{n-1,m-1} + 2 b_{n-1,m+1}
///          + 2 sum_{i<r} b_{n-1,m-1+2p^i l}`, plus
/// `b_{n-1,m-1+2p^r l}` unless `b = -1 (mod p)`.
fn mixed_steinberg_entry(l: u32, p: u32, prev: &Row, m: u32) -> BigInt {
    let t = (m + 1) / l;
    let r = p_valuation(t, p);
    let b = t / p.pow(r);
    let mut v = prev_at(prev, m as i64 - 1) + prev_at(prev, m as i64 + 1) * 2;
    let mut power = 1i64;
    for _ in 0..r {
        v += prev_at(prev, m as i64 - 1 + 2 * power * l as i64) * 2;
        power *= p as i64;
    }
    if (b + 1) % p != 0 {
        v += prev_at(prev, m as i64 - 1 + 2 * power * l as i64);
    }
    v
}

/// Mixed, `l = 2`: even columns echo; odd columns are all Steinberg
/// class.
fn mixed_l2_row(p: u32, n: u32, prev: &Row) -> Row {
    let mut row = Row::new();
    let mut m = n % 2;
    while m <= n {
        let v = if m % 2 == 0 {
            prev_at(prev, m as i64 - 1)
        } else {
            mixed_steinberg_entry(2, p, prev, m)
        };
        push_nonzero(&mut row, m, v);
        m += 2;
    }
    row
}

/// Mixed, `l > 2`: three-way column split as in char 0, with the
/// Steinberg columns recursing into characteristic-`p` drop terms.
fn mixed_row(l: u32, p: u32, n: u32, prev: &Row) -> Row {
    let mut row = Row::new();
    let mut m = n % 2;
    while m <= n {
        let v = if (m + 1) % l == 0 {
            mixed_steinberg_entry(l, p, prev, m)
        } else if (m + 2) % l == 0 {
            prev_at(prev, m as i64 - 1)
        } else {
            prev_at(prev, m as i64 - 1) + prev_at(prev, m as i64 + 1)
        };
        push_nonzero(&mut row, m, v);
        m += 2;
    }
    row
}

/// Tilting multiplicities by linear algebra: each Weyl row is pushed
/// through the `d` rows of the regime's tilting table.
///
/// Every resulting coefficient must be nonnegative (they are Krull-Schmidt
/// multiplicities); a negative coefficient reports an inconsistent `c`/`d`
/// pair.
pub fn tilting_grid_linear(regime: Regime, max_n: u32) -> Result<MultiplicityGrid> {
    let table = TiltingTable::new(regime);
    tilting_grid_linear_with(&table, max_n)
}

/// As [`tilting_grid_linear`], reusing a shared memoized table.
pub fn tilting_grid_linear_with(table: &TiltingTable, max_n: u32) -> Result<MultiplicityGrid> {
    let mut rows: Vec<Row> = Vec::with_capacity(max_n as usize + 1);
    for n in 0..=max_n {
        let a = vpower_to_weyl(n);
        let mut acc = WeylVector::zero();
        for (r, coeff) in a.iter() {
            acc = acc.add_scaled(&table.d_row(r), coeff);
        }
        let mut row = Row::new();
        for (m, coeff) in acc.iter() {
            if coeff.is_negative() {
                return Err(Error::NegativeMultiplicity {
                    n,
                    m,
                    value: coeff.to_string(),
                });
            }
            row.insert(m, coeff.clone());
        }
        rows.push(row);
    }
    Ok(MultiplicityGrid {
        kind: GridKind::Tilting,
        regime: Some(table.regime()),
        barrier: None,
        rows,
    })
}

/// Steinberg-class multiplicity `(V^{tensor n} : T(barrier . s))` with the
/// dot action `barrier . s = barrier(s+1) - 1`, computed as
/// `sum_r a_{n, barrier . r} d_{r,s}` over the `q = 1` `d` matrix.
///
/// Only modular and mixed regimes have Steinberg-class columns.
pub fn steinberg_column(regime: Regime, n: u32, s: u32) -> Result<BigInt> {
    let table = TiltingTable::new(regime);
    steinberg_column_with(&table, n, s)
}

/// As [`steinberg_column`], reusing a shared table.
pub fn steinberg_column_with(table: &TiltingTable, n: u32, s: u32) -> Result<BigInt> {
    let barrier = match table.regime() {
        Regime::ModularQOne { p } => p,
        Regime::Mixed { l, .. } => l,
        other => return Err(Error::RequiresModularRegime(other.to_string())),
    };
    let d_table = table
        .steinberg_d_table()
        .expect("modular and mixed regimes carry a q = 1 d matrix");
    let mut total = BigInt::zero();
    let mut r = s;
    loop {
        let dot = barrier as u64 * (r as u64 + 1) - 1;
        if dot > n as u64 {
            break;
        }
        let a = weyl_multiplicity(n, dot as i64);
        if !a.is_zero() {
            total += a * d_table.d_entry(r, s);
        }
        r += 1;
    }
    Ok(total)
}

/// Fusion multiplicities: the reflected Pascal triangle with walls at
/// `-1` and `barrier - 1`, identical for every regime sharing the
/// barrier.
pub fn fusion_grid(barrier: u32, max_n: u32) -> Result<MultiplicityGrid> {
    if barrier < 2 {
        return Err(Error::BarrierTooSmall(barrier));
    }
    let top = barrier - 2;
    let mut rows: Vec<Row> = Vec::with_capacity(max_n as usize + 1);
    rows.push(Row::from([(0, BigInt::one())]));
    for n in 1..=max_n {
        let prev = &rows[n as usize - 1];
        let mut row = Row::new();
        let mut m = n % 2;
        while m <= top {
            let mut v = prev_at(prev, m as i64 - 1);
            if m + 1 <= top {
                v += prev_at(prev, m as i64 + 1);
            }
            push_nonzero(&mut row, m, v);
            m += 2;
        }
        rows.push(row);
    }
    Ok(MultiplicityGrid {
        kind: GridKind::Fusion,
        regime: None,
        barrier: Some(barrier),
        rows,
    })
}

fn add_mult(out: &mut Row, m: i64, k: u32) {
    if m >= 0 && k > 0 {
        *out.entry(m as u32).or_insert_with(BigInt::zero) += BigInt::from(k);
    }
}

/// Weights `u` of a `q = 1` decomposition mapped through the dot action
/// `u -> (u+1) l - 1`.
fn stretch_dot(parts: Row, l: u32) -> Row {
    parts
        .into_iter()
        .map(|(u, c)| ((u + 1) * l - 1, c))
        .collect()
}

/// Decomposition of `T(m) tensor V` into indecomposable tilting weights,
/// as a multiset. This is the generator from which every grid recurrence
/// re-derives.
pub fn tilt_tensor_v(regime: Regime, m: u32) -> Row {
    let mut out = Row::new();
    let mi = m as i64;
    match regime {
        Regime::Semisimple => {
            add_mult(&mut out, mi + 1, 1);
            add_mult(&mut out, mi - 1, 1);
        }
        Regime::CharZeroRoot { l: 2 } => {
            add_mult(&mut out, mi + 1, 1);
            if m % 2 == 0 {
                add_mult(&mut out, mi - 1, 2);
                add_mult(&mut out, mi - 3, 1);
            }
        }
        Regime::CharZeroRoot { l } => match m % l {
            r if r == l - 1 => add_mult(&mut out, mi + 1, 1),
            0 => {
                add_mult(&mut out, mi + 1, 1);
                add_mult(&mut out, mi - 1, 2);
            }
            r if r == l - 2 => {
                add_mult(&mut out, mi + 1, 1);
                add_mult(&mut out, mi - 1, 1);
                add_mult(&mut out, mi + 1 - 2 * l as i64, 1);
            }
            _ => {
                add_mult(&mut out, mi + 1, 1);
                add_mult(&mut out, mi - 1, 1);
            }
        },
        Regime::ModularQOne { p: 2 } => {
            add_mult(&mut out, mi + 1, 1);
            if m % 2 == 0 {
                for s in 1..=p_valuation(m + 2, 2) {
                    add_mult(&mut out, mi + 1 - (1i64 << s), 2);
                }
            }
        }
        Regime::ModularQOne { p } => {
            if (m + 1) % p == 0 {
                add_mult(&mut out, mi + 1, 1);
            } else if m % p == 0 {
                add_mult(&mut out, mi + 1, 1);
                add_mult(&mut out, mi - 1, 2);
            } else if (m + 2) % p == 0 {
                add_mult(&mut out, mi + 1, 1);
                let r = p_valuation(m + 2, p);
                let mut power = 1i64;
                for _ in 0..r {
                    add_mult(&mut out, mi + 1 - 2 * power, 1);
                    power *= p as i64;
                }
                let m1 = (m + 2) as i64 / power - 2;
                let extra = if (m1 + 1) % p as i64 == 0 {
                    0
                } else if m1 % p as i64 == 0 {
                    2
                } else {
                    1
                };
                add_mult(&mut out, mi + 1 - 2 * power, extra);
            } else {
                add_mult(&mut out, mi + 1, 1);
                add_mult(&mut out, mi - 1, 1);
            }
        }
        Regime::Mixed { l: 2, p } => {
            if m % 2 == 1 {
                add_mult(&mut out, mi + 1, 1);
            } else if m == 0 {
                add_mult(&mut out, 1, 1);
            } else {
                let t = (m + 2) / 2;
                out = stretch_dot(tilt_tensor_v(Regime::ModularQOne { p }, t - 2), 2);
                add_mult(&mut out, mi - 1, 2);
            }
        }
        Regime::Mixed { l, p } => {
            if (m + 1) % l == 0 {
                add_mult(&mut out, mi + 1, 1);
            } else if m % l == 0 {
                add_mult(&mut out, mi + 1, 1);
                add_mult(&mut out, mi - 1, 2);
            } else if (m + 2) % l == 0 {
                if m == l - 2 {
                    add_mult(&mut out, mi + 1, 1);
                    add_mult(&mut out, mi - 1, 1);
                } else {
                    let t = (m + 2) / l;
                    out = stretch_dot(tilt_tensor_v(Regime::ModularQOne { p }, t - 2), l);
                    add_mult(&mut out, mi - 1, 1);
                }
            } else {
                add_mult(&mut out, mi + 1, 1);
                add_mult(&mut out, mi - 1, 1);
            }
        }
    }
    out
}

/// Push a tilting-multiplicity row through `tensor V`: row `n` of a grid
/// from row `n - 1`.
pub fn apply_tensor_v(regime: Regime, row: &Row) -> Row {
    let mut out = Row::new();
    for (m, count) in row {
        for (t, mult) in tilt_tensor_v(regime, *m) {
            let entry = out.entry(t).or_insert_with(BigInt::zero);
            *entry += count * mult;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn row(entries: &[(u32, i64)]) -> Row {
        entries.iter().map(|&(m, v)| (m, big(v))).collect()
    }

    #[test]
    fn weyl_grid_matches_binomial_formula() {
        let grid = weyl_grid(40);
        for n in 0..=40u32 {
            for m in (n % 2..=n).step_by(2) {
                assert_eq!(grid.entry(n, m), weyl_multiplicity(n, m as i64));
            }
        }
    }

    #[test]
    fn recurrence_rejects_semisimple() {
        assert!(matches!(
            tilting_grid_recurrence(Regime::Semisimple, 4),
            Err(Error::SemisimpleTiltingGrid)
        ));
    }

    #[test]
    fn golden_row_l5_n16() {
        let grid = tilting_grid_recurrence(Regime::char_zero_root(5).unwrap(), 16).unwrap();
        assert_eq!(
            *grid.row(16),
            row(&[
                (0, 610),
                (2, 987),
                (4, 3640),
                (6, 2445),
                (8, 820),
                (10, 440),
                (12, 103),
                (14, 15),
                (16, 1)
            ])
        );
    }

    #[test]
    fn golden_row_l3_n16() {
        let grid = tilting_grid_recurrence(Regime::char_zero_root(3).unwrap(), 16).unwrap();
        assert_eq!(
            *grid.row(16),
            row(&[
                (0, 1),
                (2, 3432),
                (4, 1429),
                (6, 2211),
                (8, 1260),
                (10, 337),
                (12, 103),
                (14, 15),
                (16, 1)
            ])
        );
    }

    #[test]
    fn golden_row_p2_n19() {
        let grid = tilting_grid_recurrence(Regime::modular_q_one(2).unwrap(), 19).unwrap();
        assert_eq!(
            *grid.row(19),
            row(&[
                (1, 512),
                (3, 22288),
                (5, 15504),
                (7, 15504),
                (9, 6972),
                (11, 2906),
                (13, 780),
                (15, 152),
                (17, 18),
                (19, 1)
            ])
        );
    }

    #[test]
    fn golden_row_p3_n11() {
        let grid = tilting_grid_recurrence(Regime::modular_q_one(3).unwrap(), 11).unwrap();
        assert_eq!(
            *grid.row(11),
            row(&[(1, 1), (3, 131), (5, 109), (7, 34), (9, 10), (11, 1)])
        );
    }

    #[test]
    fn golden_row_mixed_l2_p3_n19() {
        let grid = tilting_grid_recurrence(Regime::mixed(2, 3).unwrap(), 19).unwrap();
        assert_eq!(
            *grid.row(19),
            row(&[
                (1, 9842),
                (3, 9841),
                (5, 23256),
                (7, 15353),
                (9, 6954),
                (11, 2907),
                (13, 798),
                (15, 151),
                (17, 18),
                (19, 1)
            ])
        );
    }

    #[test]
    fn golden_row_mixed_l3_p2_n16() {
        let grid = tilting_grid_recurrence(Regime::mixed(3, 2).unwrap(), 16).unwrap();
        assert_eq!(
            *grid.row(16),
            row(&[
                (0, 1),
                (2, 2187),
                (4, 1093),
                (6, 2211),
                (8, 1245),
                (10, 336),
                (12, 103),
                (14, 15),
                (16, 1)
            ])
        );
    }

    #[test]
    fn linear_examples() {
        let grid = tilting_grid_linear(Regime::char_zero_root(5).unwrap(), 8).unwrap();
        assert_eq!(grid.entry(8, 2), big(21));
        assert_eq!(*grid.row(0), row(&[(0, 1)]));

        let grid = tilting_grid_linear(Regime::modular_q_one(3).unwrap(), 16).unwrap();
        assert_eq!(grid.entry(16, 2), big(3417));
    }

    #[test]
    fn steinberg_examples() {
        // p . 1 = 5 for p = 3; the n = 11 entry drops to 109.
        let p3 = Regime::modular_q_one(3).unwrap();
        assert_eq!(steinberg_column(p3, 11, 1).unwrap(), big(109));
        assert_eq!(steinberg_column(p3, 2, 0).unwrap(), big(1));

        let mixed = Regime::mixed(3, 2).unwrap();
        // l . 1 = 5; zero by parity at n = 16, 1638 at n = 15.
        assert_eq!(steinberg_column(mixed, 16, 1).unwrap(), big(0));
        assert_eq!(steinberg_column(mixed, 15, 1).unwrap(), big(1638));

        assert!(steinberg_column(Regime::char_zero_root(5).unwrap(), 4, 0).is_err());
        assert!(steinberg_column(Regime::Semisimple, 4, 0).is_err());
    }

    #[test]
    fn fusion_examples() {
        let grid = fusion_grid(5, 8).unwrap();
        assert_eq!(*grid.row(8), row(&[(0, 13), (2, 21)]));

        // Barrier 7: the first 6 columns of the l = 7 tilting grid. The
        // Weyl grid agrees only while no lattice path has touched the
        // wall at m = 6; the first wall echo lands at (n, m) = (7, 5).
        let grid = fusion_grid(7, 16).unwrap();
        let tilting = tilting_grid_recurrence(Regime::char_zero_root(7).unwrap(), 16).unwrap();
        let weyl = weyl_grid(16);
        for n in 0..=16u32 {
            for m in 0..=5u32 {
                assert_eq!(grid.entry(n, m), tilting.entry(n, m), "n = {n}, m = {m}");
            }
            assert!(grid.row(n).keys().all(|&m| m <= 5));
        }
        for n in 0..=6u32 {
            for m in 0..=5u32 {
                assert_eq!(grid.entry(n, m), weyl.entry(n, m), "n = {n}, m = {m}");
            }
        }
        assert_eq!(grid.entry(7, 5), big(5));
        assert_eq!(weyl.entry(7, 5), big(6));

        // Barrier 2: only the empty tensor power survives projection.
        let grid = fusion_grid(2, 10).unwrap();
        assert_eq!(*grid.row(0), row(&[(0, 1)]));
        for n in 1..=10u32 {
            assert!(grid.row(n).is_empty(), "n = {n}");
        }

        assert!(matches!(fusion_grid(1, 4), Err(Error::BarrierTooSmall(1))));
    }

    #[test]
    fn tilt_tensor_v_examples() {
        let l5 = Regime::char_zero_root(5).unwrap();
        assert_eq!(tilt_tensor_v(l5, 4), row(&[(5, 1)]));
        assert_eq!(tilt_tensor_v(l5, 0), row(&[(1, 1)]));
        assert_eq!(tilt_tensor_v(l5, 3), row(&[(4, 1), (2, 1)]));
        assert_eq!(tilt_tensor_v(l5, 5), row(&[(6, 1), (4, 2)]));
        // m = 8 = l - 2 (mod l): the drop term 8 + 1 - 2l lands below zero.
        assert_eq!(tilt_tensor_v(l5, 8), row(&[(9, 1), (7, 1)]));
        assert_eq!(tilt_tensor_v(l5, 13), row(&[(14, 1), (12, 1), (4, 1)]));

        // p = 2, m = 6: r(6) = 3, so the doubled drops are at weights
        // 7 - 2 and 7 - 4 (7 - 8 falls below zero and is gone); the
        // dimension count 2 dim T(6) = 32 = dim T(7) + 2(dim T(5) + dim T(3))
        // pins the multiset.
        let p2 = Regime::modular_q_one(2).unwrap();
        assert_eq!(tilt_tensor_v(p2, 6), row(&[(7, 1), (5, 2), (3, 2)]));
        assert_eq!(tilt_tensor_v(p2, 0), row(&[(1, 1)]));
        assert_eq!(tilt_tensor_v(p2, 2), row(&[(3, 1), (1, 2)]));
    }

    #[test]
    fn tilt_tensor_v_character_oracle() {
        // The decomposition of T(m) tensor V must reproduce the Weyl
        // expansion of c_row(m) * chi(1) through the c rows.
        let regimes = [
            Regime::Semisimple,
            Regime::char_zero_root(2).unwrap(),
            Regime::char_zero_root(3).unwrap(),
            Regime::char_zero_root(5).unwrap(),
            Regime::modular_q_one(2).unwrap(),
            Regime::modular_q_one(3).unwrap(),
            Regime::modular_q_one(5).unwrap(),
            Regime::mixed(2, 3).unwrap(),
            Regime::mixed(3, 2).unwrap(),
            Regime::mixed(5, 2).unwrap(),
            Regime::mixed(2, 5).unwrap(),
            Regime::mixed(3, 5).unwrap(),
        ];
        let v = WeylVector::unit(1);
        for regime in regimes {
            let table = TiltingTable::new(regime);
            for m in 0..=120u32 {
                let lhs = table.tilting_weyl_factors(m).cg_product(&v);
                let mut rhs = WeylVector::zero();
                for (t, mult) in tilt_tensor_v(regime, m) {
                    rhs = rhs.add_scaled(&table.tilting_weyl_factors(t), &mult);
                }
                assert_eq!(lhs, rhs, "{regime}, m = {m}");
            }
        }
    }

    #[test]
    fn rows_push_through_tensor_v() {
        let regimes = [
            Regime::char_zero_root(2).unwrap(),
            Regime::char_zero_root(5).unwrap(),
            Regime::modular_q_one(2).unwrap(),
            Regime::modular_q_one(3).unwrap(),
            Regime::mixed(2, 3).unwrap(),
            Regime::mixed(3, 2).unwrap(),
        ];
        for regime in regimes {
            let grid = tilting_grid_recurrence(regime, 30).unwrap();
            for n in 1..=30u32 {
                assert_eq!(
                    apply_tensor_v(regime, grid.row(n - 1)),
                    *grid.row(n),
                    "{regime}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn char_zero_column_echo() {
        for l in [3u32, 5] {
            let grid = tilting_grid_recurrence(Regime::char_zero_root(l).unwrap(), 30).unwrap();
            for n in 1..=30u32 {
                assert_eq!(grid.entry(n, 0), grid.entry(n - 1, 1), "l = {l}, n = {n}");
                for m in (n % 2..=n).step_by(2) {
                    if m > 0 && (m + 2) % l == 0 {
                        assert_eq!(
                            grid.entry(n, m),
                            grid.entry(n - 1, m - 1),
                            "l = {l}, n = {n}, m = {m}"
                        );
                    }
                }
            }
        }
    }
}
