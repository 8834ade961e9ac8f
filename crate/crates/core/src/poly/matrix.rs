use std::sync::Arc;

use itertools::Itertools;

use super::{PolyError, PolyRing, Polynomial, Term};
use crate::coeff::Field;

/// Dense matrix of polynomials over a common ring, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    ring: Arc<PolyRing<F>>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn from_rows(ring: &Arc<PolyRing<F>>, rows: Vec<Vec<Polynomial<F>>>) -> Result<Self, PolyError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(PolyError::LengthMismatch);
        }
        let entries: Vec<Polynomial<F>> = rows.into_iter().flatten().collect();
        if entries.iter().any(|p| !PolyRing::same(p.ring(), ring)) {
            return Err(PolyError::RingMismatch);
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: nrows, cols: ncols, entries })
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial<F>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<F>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<Polynomial<F>>> {
        rows.iter().map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect()).collect()
    }
}

/// The n × m matrix with entry (i, j) = ∂F_j/∂x_i.
pub fn jacobian_matrix<F: Field>(gens: &[Polynomial<F>]) -> Result<PolyMatrix<F>, PolyError> {
    let ring = gens.first().ok_or(PolyError::LengthMismatch)?.ring().clone();
    if gens.iter().any(|g| !PolyRing::same(g.ring(), &ring)) {
        return Err(PolyError::RingMismatch);
    }
    let rows = (0..ring.nvars())
        .map(|i| gens.iter().map(|g| g.derivative(i)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    PolyMatrix::from_rows(&ring, rows)
}

/// All d × d minors, rows and columns chosen in lexicographic order.
pub fn minors<F: Field>(m: &PolyMatrix<F>, d: usize) -> Result<Vec<Polynomial<F>>, PolyError> {
    if d > m.rows.min(m.cols) {
        return Err(PolyError::SizeTooLarge { size: d, rows: m.rows, cols: m.cols });
    }
    if d == 0 {
        return Ok(vec![Polynomial::one(&m.ring)]);
    }
    let mut out = Vec::new();
    for rows in (0..m.rows).combinations(d) {
        for cols in (0..m.cols).combinations(d) {
            out.push(determinant(&m.ring, m.submatrix(&rows, &cols))?);
        }
    }
    Ok(out)
}

/// Determinant of a square polynomial matrix: cofactor expansion up to
/// 3 × 3, fraction-free Bareiss elimination beyond.
pub fn determinant<F: Field>(ring: &Arc<PolyRing<F>>, a: Vec<Vec<Polynomial<F>>>) -> Result<Polynomial<F>, PolyError> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(PolyError::LengthMismatch);
    }
    match n {
        0 => Ok(Polynomial::one(ring)),
        1 => Ok(a[0][0].clone()),
        2 => Ok(&(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0])),
        3 => {
            let minor = |r: usize, c: usize| {
                let (r0, r1) = ((r + 1) % 3, (r + 2) % 3);
                let (c0, c1) = ((c + 1) % 3, (c + 2) % 3);
                &(&a[r0][c0] * &a[r1][c1]) - &(&a[r0][c1] * &a[r1][c0])
            };
            // cyclic index choice makes every cofactor sign positive
            let mut acc = Polynomial::zero(ring);
            for (c, entry) in a[0].iter().enumerate() {
                acc = &acc + &(entry * &minor(0, c));
            }
            Ok(acc)
        }
        _ => bareiss(ring, a),
    }
}

fn bareiss<F: Field>(ring: &Arc<PolyRing<F>>, mut a: Vec<Vec<Polynomial<F>>>) -> Result<Polynomial<F>, PolyError> {
    let n = a.len();
    let mut negate = false;
    let mut prev = Polynomial::one(ring);
    for k in 0..n - 1 {
        let pivot = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].len());
        let Some(p) = pivot else {
            return Ok(Polynomial::zero(ring));
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = exact_div(&num, &prev)?;
            }
            a[i][k] = Polynomial::zero(ring);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Quotient of an exact polynomial division.
pub fn exact_div<F: Field>(num: &Polynomial<F>, den: &Polynomial<F>) -> Result<Polynomial<F>, PolyError> {
    let lead = den.leading_term().ok_or(PolyError::DivisionByZero { pos: 0 })?;
    let lead_inv = lead.coeff.inv().map_err(|_| PolyError::DivisionByZero { pos: 0 })?;
    if num.is_zero() {
        return Ok(Polynomial::zero(num.ring()));
    }
    // every quotient term has degree at most deg(num) - deg(den)
    let max_deg = num.degree().unwrap().checked_sub(den.degree().unwrap()).ok_or(PolyError::NotExact)?;
    let mut rem = num.clone();
    let mut quot = Vec::new();
    while let Some(t) = rem.leading_term() {
        let exp = t.exp.div(&lead.exp).ok_or(PolyError::NotExact)?;
        if exp.degree() > max_deg {
            return Err(PolyError::NotExact);
        }
        let c = t.coeff.clone() * lead_inv.clone();
        rem = &rem - &den.mul_term(&exp, &c);
        quot.push(Term { exp, coeff: c });
    }
    Ok(Polynomial::from_sorted_terms(num.ring(), quot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Fp, PrimeModulus, Rational};
    use crate::poly::{parse_polynomial, OrderingKind};

    fn ring() -> Arc<PolyRing<Rational>> {
        PolyRing::new((), &["x", "y"], OrderingKind::Ds).unwrap()
    }

    fn p(s: &str) -> Polynomial<Rational> {
        parse_polynomial(s, &ring()).unwrap()
    }

    #[test]
    fn jacobian_examples() {
        let j = jacobian_matrix(&[p("x^2+y^2"), p("x*y")]).unwrap();
        assert_eq!(j.row(0), &[p("2*x"), p("y")]);
        assert_eq!(j.row(1), &[p("2*y"), p("x")]);
        let j = jacobian_matrix(&[p("x+y")]).unwrap();
        assert_eq!(j.column(0), vec![p("1"), p("1")]);

        let f3 = PolyRing::<Fp>::new(PrimeModulus::new(3).unwrap(), &["x"], OrderingKind::Ds).unwrap();
        let j = jacobian_matrix(&[parse_polynomial("x^3", &f3).unwrap()]).unwrap();
        assert!(j.get(0, 0).is_zero());
    }

    #[test]
    fn minor_examples() {
        let m = PolyMatrix::from_rows(&ring(), vec![vec![p("2*x"), p("y")], vec![p("2*y"), p("x")]]).unwrap();
        assert_eq!(minors(&m, 2).unwrap(), vec![p("2*x^2 - 2*y^2")]);
        assert_eq!(minors(&m, 0).unwrap(), vec![p("1")]);
        assert!(matches!(minors(&m, 3), Err(PolyError::SizeTooLarge { .. })));
        let row = PolyMatrix::from_rows(&ring(), vec![vec![p("x"), p("y")]]).unwrap();
        assert_eq!(minors(&row, 1).unwrap(), vec![p("x"), p("y")]);
    }

    #[test]
    fn exact_division() {
        let a = p("x + y^2 - 3*x*y");
        let b = p("1 - x + y^3");
        assert_eq!(exact_div(&(&a * &b), &b).unwrap(), a);
        assert_eq!(exact_div(&p("x^2 + y"), &p("x")), Err(PolyError::NotExact));
        assert_eq!(exact_div(&p("x"), &p("1 + x")), Err(PolyError::NotExact));
    }

    #[test]
    fn bareiss_with_zero_pivot() {
        let m = vec![
            vec![p("0"), p("1"), p("0"), p("0")],
            vec![p("1"), p("0"), p("0"), p("0")],
            vec![p("0"), p("0"), p("x"), p("y")],
            vec![p("0"), p("0"), p("y"), p("x")],
        ];
        assert_eq!(determinant(&ring(), m).unwrap(), p("y^2 - x^2"));
    }
}
