use crate::poly::ExponentVector;
use crate::Dimension;

use super::MoraError;

/// Largest variable count accepted by the exact vertex-cover search.
pub const MAX_COVER_VARS: usize = 16;

/// A monomial submodule of `R^rank`, given per component by its minimal
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialModule {
    nvars: usize,
    components: Vec<Vec<ExponentVector>>,
}

impl MonomialModule {
    /// Minimalizes the given `(monomial, component)` generators.
    pub fn new(nvars: usize, rank: usize, gens: impl IntoIterator<Item = (ExponentVector, usize)>) -> Self {
        let mut components: Vec<Vec<ExponentVector>> = vec![Vec::new(); rank];
        for (exp, comp) in gens {
            assert_eq!(exp.len(), nvars);
            components[comp].push(exp);
        }
        for gens in &mut components {
            // low degree first so a divisor is seen before its multiples
            gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.as_slice().cmp(b.as_slice())));
            gens.dedup();
            let mut minimal: Vec<ExponentVector> = Vec::with_capacity(gens.len());
            for g in gens.drain(..) {
                if !minimal.iter().any(|m| m.divides(&g)) {
                    minimal.push(g);
                }
            }
            *gens = minimal;
        }
        MonomialModule { nvars, components }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    /// Minimal generators of component `j`.
    pub fn component(&self, j: usize) -> &[ExponentVector] {
        &self.components[j]
    }

    pub fn contains(&self, exp: &ExponentVector, comp: usize) -> bool {
        self.components[comp].iter().any(|g| g.divides(exp))
    }

    fn component_is_finite(&self, j: usize) -> bool {
        let gens = &self.components[j];
        if gens.iter().any(ExponentVector::is_one) {
            return true;
        }
        (0..self.nvars).all(|i| gens.iter().any(|g| matches!(g.as_pure_power(), Some((v, _)) if v == i)))
    }

    /// Number of module monomials outside the module, or ∞ when some
    /// component misses a pure power of some variable.
    pub fn vector_space_dimension(&self) -> Dimension {
        if !(0..self.rank()).all(|j| self.component_is_finite(j)) {
            return Dimension::Infinite;
        }
        let total = (0..self.rank()).map(|j| self.count_standard(j)).sum();
        Dimension::Finite(total)
    }

    fn count_standard(&self, j: usize) -> u64 {
        let gens = &self.components[j];
        if gens.iter().any(ExponentVector::is_one) {
            return 0;
        }
        // Standard monomials form an order ideal; walk it incrementing
        // variables in non-decreasing index order so each is visited once.
        let mut count = 0;
        let mut stack = vec![(ExponentVector::one(self.nvars), 0usize)];
        while let Some((m, first)) = stack.pop() {
            count += 1;
            for i in first..self.nvars {
                let mut next = m.clone();
                next.set(i, m.get(i) + 1);
                if !gens.iter().any(|g| g.divides(&next)) {
                    stack.push((next, i));
                }
            }
        }
        count
    }

    /// Smallest `D` with every module monomial of degree at least `D` in
    /// `M`, or `None` when the quotient is infinite-dimensional.
    pub fn corner_degree(&self) -> Option<u64> {
        if !(0..self.rank()).all(|j| self.component_is_finite(j)) {
            return None;
        }
        let mut corner = 0;
        for gens in &self.components {
            if gens.iter().any(ExponentVector::is_one) {
                continue;
            }
            let mut stack = vec![(ExponentVector::one(self.nvars), 0usize)];
            while let Some((m, first)) = stack.pop() {
                corner = corner.max(m.degree() + 1);
                for i in first..self.nvars {
                    let mut next = m.clone();
                    next.set(i, m.get(i) + 1);
                    if !gens.iter().any(|g| g.divides(&next)) {
                        stack.push((next, i));
                    }
                }
            }
        }
        Some(corner)
    }

    /// Krull dimension of `R^rank / M`: per component, `n` minus the size
    /// of a smallest variable set meeting every generator's support; the
    /// maximum over components whose quotient is nonzero.
    pub fn krull_dimension(&self) -> Result<usize, MoraError> {
        if self.nvars > MAX_COVER_VARS {
            return Err(MoraError::TooManyVariables(self.nvars));
        }
        let mut best: Option<usize> = None;
        for gens in &self.components {
            if gens.iter().any(ExponentVector::is_one) {
                continue;
            }
            let masks: Vec<u32> = gens.iter().map(ExponentVector::support_mask).collect();
            let cover = min_hitting_set(self.nvars, &masks);
            let d = self.nvars - cover;
            best = Some(best.map_or(d, |b| b.max(d)));
        }
        best.ok_or(MoraError::ZeroModule)
    }

    /// Krull dimension with the empty quotient reported as −1.
    pub fn krull_dimension_signed(&self) -> Result<i64, MoraError> {
        match self.krull_dimension() {
            Ok(d) => Ok(d as i64),
            Err(MoraError::ZeroModule) => Ok(-1),
            Err(e) => Err(e),
        }
    }
}

/// Size of a smallest subset of `0..n` meeting every mask.
fn min_hitting_set(n: usize, masks: &[u32]) -> usize {
    if masks.is_empty() {
        return 0;
    }
    let mut subsets: Vec<u32> = (0..(1u32 << n)).collect();
    subsets.sort_by_key(|s| s.count_ones());
    subsets
        .into_iter()
        .find(|s| masks.iter().all(|m| m & s != 0))
        .map(|s| s.count_ones() as usize)
        .expect("the full variable set meets every nonempty support")
}
