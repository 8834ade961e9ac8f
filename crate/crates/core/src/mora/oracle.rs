//! Dimension of a local quotient by plain linear algebra on jets.
//!
//! Works in `(K[x]/m^D)^q`, which shares no code with the standard basis
//! machinery. If `I + m^{D-1} = I + m^D` then `m^{D-1} ⊂ I` by Nakayama, and
//! the truncated count is exact.

use std::collections::HashMap;

use crate::coeff::Field;
use crate::poly::{ExponentVector, FreeModuleVector};

use super::normal_form::check_compatible;
use super::MoraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleOutcome {
    Finite(u64),
    /// The count had not stabilized at the requested truncation.
    Unstable,
}

fn monomials_below(n: usize, d: u32) -> Vec<ExponentVector> {
    if d == 0 {
        return Vec::new();
    }
    let mut out = vec![ExponentVector::one(n)];
    let mut layer = out.clone();
    for _ in 1..d {
        let mut next = Vec::new();
        for m in &layer {
            // extend only at or after the last nonzero exponent to avoid repeats
            let last = m.as_slice().iter().rposition(|&e| e > 0).unwrap_or(0);
            for i in last..n {
                let mut e = m.as_slice().to_vec();
                e[i] += 1;
                next.push(ExponentVector::new(e));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

struct Truncation {
    count: u64,
    /// Every component has a pure power of every variable among the pivots.
    pure_powers: bool,
}

/// `dim_K (R^q / (M + m^D R^q))` for the submodule `M` generated by `gens`.
pub fn truncated_quotient_dimension<F: Field>(gens: &[FreeModuleVector<F>], d: u32) -> Result<u64, MoraError> {
    Ok(truncate(gens, d)?.count)
}

fn truncate<F: Field>(gens: &[FreeModuleVector<F>], d: u32) -> Result<Truncation, MoraError> {
    let first = gens.first().ok_or(MoraError::EmptyGenerators)?;
    check_compatible(first, &gens[1..])?;
    let ring = first.ring();
    let (n, q) = (ring.nvars(), first.rank());
    let monos = monomials_below(n, d);
    let index: HashMap<(&ExponentVector, usize), usize> =
        monos.iter().enumerate().flat_map(|(k, m)| (0..q).map(move |j| ((m, j), k * q + j))).collect();
    let ncols = monos.len() * q;

    let zero = F::zero(ring.ctx());
    let mut rows: Vec<Vec<F>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let ord = g.order().expect("nonzero");
        for m in monos.iter().filter(|m| m.degree() + ord < d as u64) {
            let mut row = vec![zero.clone(); ncols];
            for t in g.terms() {
                let e = t.exp.mul(m);
                if e.degree() < d as u64 {
                    row[index[&(&e, t.comp)]] = t.coeff.clone();
                }
            }
            rows.push(row);
        }
    }
    // columns run through monomials by ascending degree, so a pivot is the
    // lowest-degree term of its row
    let pivots = pivot_columns(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let pure_powers = (0..q).all(|j| {
        (0..n).all(|i| {
            monos.iter().enumerate().any(|(k, m)| {
                is_pivot[k * q + j] && (m.is_one() || matches!(m.as_pure_power(), Some((v, _)) if v == i))
            })
        })
    });
    Ok(Truncation { count: (ncols - pivots.len()) as u64, pure_powers })
}

fn pivot_columns<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        pivots.push(c);
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        let pivot: Vec<F> = rows[r].iter().map(|x| x.clone() * inv.clone()).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for k in c..ncols {
                if !pivot[k].is_zero() {
                    row[k] = row[k].clone() - f.clone() * pivot[k].clone();
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    pivots
}

/// Exact local quotient dimension certified at truncation `d`, or
/// [`OracleOutcome::Unstable`] if `d` is too small to decide. Certified
/// means the counts at `d − 1` and `d` agree and every component has a pure
/// power of every variable among the pivots.
pub fn truncated_dimension_oracle<F: Field>(gens: &[FreeModuleVector<F>], d: u32) -> Result<OracleOutcome, MoraError> {
    if d == 0 {
        return Ok(OracleOutcome::Unstable);
    }
    let hi = truncate(gens, d)?;
    let lo = truncate(gens, d - 1)?;
    Ok(if hi.count == lo.count && hi.pure_powers { OracleOutcome::Finite(hi.count) } else { OracleOutcome::Unstable })
}
