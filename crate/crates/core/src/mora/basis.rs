use std::collections::BTreeSet;
use std::sync::Arc;

use crate::coeff::Field;
use crate::poly::{ExponentVector, FreeModuleVector, OrderingKind, PolyRing, Polynomial};
use crate::Dimension;

use super::normal_form::{check_compatible, reduce};
use super::{Budget, MonomialModule, MoraError, MoraOptions};

/// A standard basis of a submodule of `R^rank` with its leading module.
#[derive(Debug, Clone)]
pub struct StandardBasis<F: Field> {
    ring: Arc<PolyRing<F>>,
    rank: usize,
    elements: Vec<FreeModuleVector<F>>,
    leading: MonomialModule,
}

impl<F: Field> StandardBasis<F> {
    /// Standard basis of the ideal generated by `gens`.
    pub fn of_ideal(gens: &[Polynomial<F>]) -> Result<Self, MoraError> {
        let vecs: Vec<_> = gens.iter().map(|g| FreeModuleVector::from_poly(g, 0, 1)).collect();
        standard_basis(&vecs)
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Monic elements whose leading terms minimally generate the leading
    /// module.
    pub fn elements(&self) -> &[FreeModuleVector<F>] {
        &self.elements
    }

    pub fn leading_module(&self) -> &MonomialModule {
        &self.leading
    }

    pub fn vector_space_dimension(&self) -> Dimension {
        self.leading.vector_space_dimension()
    }

    /// Krull dimension of the quotient; [`MoraError::ZeroModule`] when it
    /// is zero.
    pub fn krull_dimension(&self) -> Result<usize, MoraError> {
        if self.ring.ordering().kind() == OrderingKind::Ds {
            return self.leading.krull_dimension();
        }
        // Leading modules only see the dimension under a degree ordering.
        let ds = self
            .ring
            .reordered(crate::poly::LocalOrdering::ds(self.ring.nvars()))
            .map_err(|_| MoraError::RingMismatch)?;
        let gens: Vec<_> = self.elements.iter().map(|e| e.to_ring(&ds).expect("same variables")).collect();
        standard_basis(&gens)?.leading.krull_dimension()
    }

    /// Whether `f` lies in the local submodule.
    pub fn contains(&self, f: &FreeModuleVector<F>) -> Result<bool, MoraError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn normal_form(&self, f: &FreeModuleVector<F>) -> Result<FreeModuleVector<F>, MoraError> {
        if f.is_zero() && f.rank() == self.rank && PolyRing::same(f.ring(), &self.ring) {
            return Ok(f.clone());
        }
        match self.elements.first() {
            Some(first) => check_compatible(first, std::slice::from_ref(f))?,
            None => {
                if !PolyRing::same(f.ring(), &self.ring) {
                    return Err(MoraError::RingMismatch);
                }
                if f.rank() != self.rank {
                    return Err(MoraError::RankMismatch);
                }
            }
        }
        let mut budget = Budget::new(MoraOptions::default().step_budget);
        Ok(reduce(f, &self.elements, false, None, &mut budget)?.0)
    }
}

pub fn standard_basis<F: Field>(gens: &[FreeModuleVector<F>]) -> Result<StandardBasis<F>, MoraError> {
    standard_basis_with(gens, &MoraOptions::default())
}

struct Lead {
    exp: ExponentVector,
    comp: usize,
}

fn lead_of<F: Field>(v: &FreeModuleVector<F>) -> Lead {
    let lt = v.leading_term().expect("nonzero");
    Lead { exp: lt.exp.clone(), comp: lt.comp }
}

/// `lcm/LM(a)·a − lcm/LM(b)·b` for monic `a`, `b` with the same lead
/// component.
fn s_vector<F: Field>(a: &FreeModuleVector<F>, la: &Lead, b: &FreeModuleVector<F>, lb: &Lead) -> FreeModuleVector<F> {
    let lcm = la.exp.lcm(&lb.exp);
    let one = F::one(a.ring().ctx());
    let zero = FreeModuleVector::zero(a.ring(), a.rank());
    let ma = lcm.div(&la.exp).expect("lcm");
    let mb = lcm.div(&lb.exp).expect("lcm");
    zero.sub_scaled(&(-one.clone()), &ma, a).sub_scaled(&one, &mb, b)
}

pub fn standard_basis_with<F: Field>(
    gens: &[FreeModuleVector<F>],
    opts: &MoraOptions,
) -> Result<StandardBasis<F>, MoraError> {
    let first = gens.first().ok_or(MoraError::EmptyGenerators)?;
    check_compatible(first, &gens[1..])?;
    let (ring, rank) = (first.ring().clone(), first.rank());
    let n = ring.nvars();
    let mut budget = Budget::new(opts.step_budget);

    let mut basis: Vec<FreeModuleVector<F>> = Vec::new();
    let mut leads: Vec<Lead> = Vec::new();
    let mut unit_comps = vec![false; rank];
    // (lcm degree, insertion counter, i, j)
    let mut pairs: BTreeSet<(u64, u64, usize, usize)> = BTreeSet::new();
    let mut counter = 0u64;

    let add = |h: FreeModuleVector<F>,
               basis: &mut Vec<FreeModuleVector<F>>,
               leads: &mut Vec<Lead>,
               pairs: &mut BTreeSet<(u64, u64, usize, usize)>,
               counter: &mut u64,
               unit_comps: &mut Vec<bool>| {
        let h = h.monic();
        let lh = lead_of(&h);
        let k = basis.len();
        for (i, li) in leads.iter().enumerate() {
            if li.comp != lh.comp {
                continue;
            }
            if rank == 1 && li.exp.is_coprime(&lh.exp) {
                continue;
            }
            pairs.insert((li.exp.lcm(&lh.exp).degree(), *counter, i, k));
            *counter += 1;
        }
        if lh.exp.is_one() {
            unit_comps[lh.comp] = true;
        }
        leads.push(lh);
        basis.push(h);
    };

    for g in gens.iter().filter(|g| !g.is_zero()) {
        if basis.iter().any(|b| *b == g.monic()) {
            continue;
        }
        add(g.clone(), &mut basis, &mut leads, &mut pairs, &mut counter, &mut unit_comps);
    }

    // Once every component has a unit leading term the leading module is
    // the whole free module, so the current set is already a standard basis.
    // Under a degree ordering, once the leading module holds every monomial
    // of degree D, so does the submodule itself (Nakayama), and higher terms
    // can be dropped.
    let degree_ordering = ring.ordering().kind() == OrderingKind::Ds;
    let mut corner: Option<u64> = None;
    let update_corner = |basis: &mut Vec<FreeModuleVector<F>>, leads: &[Lead], corner: &mut Option<u64>| {
        if !degree_ordering {
            return;
        }
        let lm = MonomialModule::new(n, rank, leads.iter().map(|l| (l.exp.clone(), l.comp)));
        if let Some(d) = lm.corner_degree() {
            if corner.is_none_or(|c| d < c) {
                *corner = Some(d);
                for (b, l) in basis.iter_mut().zip(leads) {
                    b.truncate_degree(d.max(l.exp.degree() + 1));
                }
            }
        }
    };
    update_corner(&mut basis, &leads, &mut corner);

    while !unit_comps.iter().all(|&u| u) {
        let Some((_, _, i, j)) = pairs.pop_first() else { break };
        let s = s_vector(&basis[i], &leads[i], &basis[j], &leads[j]);
        let (h, _) = reduce(&s, &basis, false, corner, &mut budget)?;
        if !h.is_zero() {
            add(h, &mut basis, &mut leads, &mut pairs, &mut counter, &mut unit_comps);
            update_corner(&mut basis, &leads, &mut corner);
        }
    }

    let leading = MonomialModule::new(n, rank, leads.iter().map(|l| (l.exp.clone(), l.comp)));
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&k| {
            !(0..basis.len()).any(|l| {
                l != k
                    && leads[l].comp == leads[k].comp
                    && leads[l].exp.divides(&leads[k].exp)
                    && (leads[l].exp != leads[k].exp || l < k)
            })
        })
        .collect();
    let elements = keep.into_iter().map(|k| basis[k].clone()).collect();
    Ok(StandardBasis { ring, rank, elements, leading })
}

pub fn leading_module<F: Field>(sb: &StandardBasis<F>) -> &MonomialModule {
    sb.leading_module()
}

pub fn vector_space_dimension<F: Field>(sb: &StandardBasis<F>) -> Dimension {
    sb.vector_space_dimension()
}

pub fn krull_dimension<F: Field>(sb: &StandardBasis<F>) -> Result<usize, MoraError> {
    sb.krull_dimension()
}

pub fn ideal_membership_local<F: Field>(f: &FreeModuleVector<F>, sb: &StandardBasis<F>) -> Result<bool, MoraError> {
    sb.contains(f)
}
