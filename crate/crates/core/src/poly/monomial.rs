use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponents of a monomial `x^α`, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExponentVector(SmallVec<[u32; 4]>);

impl ExponentVector {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        ExponentVector(exps.into_iter().collect())
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, n))
    }

    /// The variable `x_i` in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = Self::one(n);
        e.0[i] = 1;
        e
    }

    pub fn pure_power(n: usize, i: usize, a: u32) -> Self {
        let mut e = Self::one(n);
        e.0[i] = a;
        e
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some((i, a))` if this is `x_i^a` with `a > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Indices of variables with positive exponent, as a bit mask.
    pub fn support_mask(&self) -> u32 {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | (1 << i))
    }

    pub(crate) fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub(crate) fn set(&mut self, i: usize, v: u32) {
        self.0[i] = v;
    }

    /// Writes the monomial as `x^2*y` using the given variable names; the
    /// empty string for 1.
    pub fn format(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (name, &e) in vars.iter().zip(self.0.iter()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Local orderings on monomials: 1 is the largest monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderingKind {
    /// Negative degree reverse lexicographic.
    Ds,
    /// Negative lexicographic.
    Ls,
}

impl fmt::Display for OrderingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderingKind::Ds => write!(f, "ds"),
            OrderingKind::Ls => write!(f, "ls"),
        }
    }
}

impl std::str::FromStr for OrderingKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "ds" => Ok(OrderingKind::Ds),
            "ls" => Ok(OrderingKind::Ls),
            other => Err(format!("unknown ordering `{other}` (expected ds or ls)")),
        }
    }
}

/// A local monomial ordering together with a variable priority.
///
/// `priority[k]` is the ring index of the variable ranked `k`; the identity
/// permutation ranks variables in ring order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalOrdering {
    kind: OrderingKind,
    priority: Vec<usize>,
}

impl LocalOrdering {
    pub fn new(kind: OrderingKind, n: usize) -> Self {
        LocalOrdering { kind, priority: (0..n).collect() }
    }

    pub fn ds(n: usize) -> Self {
        Self::new(OrderingKind::Ds, n)
    }

    pub fn ls(n: usize) -> Self {
        Self::new(OrderingKind::Ls, n)
    }

    /// Ordering with an explicit variable ranking; `None` unless `priority`
    /// is a permutation of `0..priority.len()`.
    pub fn with_priority(kind: OrderingKind, priority: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; priority.len()];
        for &i in &priority {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(LocalOrdering { kind, priority })
    }

    pub fn kind(&self) -> OrderingKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Compares two exponent vectors of the ordering's length.
    #[inline]
    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self.kind {
            OrderingKind::Ds => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return db.cmp(&da);
                }
                for &i in self.priority.iter().rev() {
                    let (x, y) = (a.get(i), b.get(i));
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                Ordering::Equal
            }
            OrderingKind::Ls => {
                for &i in &self.priority {
                    let (x, y) = (a.get(i), b.get(i));
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.iter().copied())
    }

    #[test]
    fn ds_examples() {
        let ds = LocalOrdering::ds(2);
        assert_eq!(ds.cmp(&ev(&[0, 0]), &ev(&[1, 0])), Ordering::Greater);
        assert_eq!(ds.cmp(&ev(&[1, 0]), &ev(&[0, 1])), Ordering::Greater);
        assert_eq!(ds.cmp(&ev(&[1, 0]), &ev(&[0, 2])), Ordering::Greater);
        assert_eq!(ds.cmp(&ev(&[1, 1]), &ev(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn ls_is_not_degree_compatible() {
        let ls = LocalOrdering::ls(2);
        assert_eq!(ls.cmp(&ev(&[0, 0]), &ev(&[0, 1])), Ordering::Greater);
        assert_eq!(ls.cmp(&ev(&[0, 1]), &ev(&[1, 0])), Ordering::Greater);
        assert_eq!(ls.cmp(&ev(&[0, 5]), &ev(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn priority_permutes_tie_break() {
        let swapped = LocalOrdering::with_priority(OrderingKind::Ds, vec![1, 0]).unwrap();
        assert_eq!(swapped.cmp(&ev(&[1, 0]), &ev(&[0, 1])), Ordering::Less);
        assert!(LocalOrdering::with_priority(OrderingKind::Ds, vec![0, 0]).is_none());
    }

    #[test]
    fn pure_powers() {
        assert_eq!(ev(&[0, 3, 0]).as_pure_power(), Some((1, 3)));
        assert_eq!(ev(&[1, 3, 0]).as_pure_power(), None);
        assert_eq!(ev(&[0, 0]).as_pure_power(), None);
        assert_eq!(ev(&[1, 0, 2]).support_mask(), 0b101);
    }

    fn exps() -> impl Strategy<Value = ExponentVector> {
        prop::collection::vec(0u32..6, 3).prop_map(ExponentVector::new)
    }

    proptest! {
        #[test]
        fn orderings_are_local_total_and_multiplicative(a in exps(), b in exps(), c in exps(), ls in any::<bool>()) {
            let ord = if ls { LocalOrdering::ls(3) } else { LocalOrdering::ds(3) };
            prop_assert_ne!(ord.cmp(&ExponentVector::one(3), &a), Ordering::Less);
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            prop_assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
        }

        #[test]
        fn transitivity(a in exps(), b in exps(), c in exps()) {
            let ord = LocalOrdering::ds(3);
            if ord.cmp(&a, &b) == Ordering::Greater && ord.cmp(&b, &c) == Ordering::Greater {
                prop_assert_eq!(ord.cmp(&a, &c), Ordering::Greater);
            }
        }
    }
}
