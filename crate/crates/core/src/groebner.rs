//! Buchberger's algorithm over free modules, full normal forms with
//! quotient recording, and Schreyer's syzygy construction.
//!
//! The engine is written once for module elements; ideals are the
//! rank-one case. Gröbner bases are kept monic and autoreduced, so for
//! a fixed order the output is the unique reduced basis.

use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::{AlgebraError, AlgebraStage};
use crate::monomial::{ModMonomial, ModOrder, Monomial, MonomialOrder};
use crate::poly::Poly;

/// A Gröbner basis together with the order that certifies it.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub polys: Vec<Poly>,
    pub order: ModOrder,
}

impl GroebnerBasis {
    /// Normal form of `f` against the basis.
    pub fn reduce(&self, f: &Poly) -> Poly {
        reduce_full(f, &self.polys, &self.order).0
    }

    /// Re-checks the defining property: every S-pair reduces to zero.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let Some(s) = s_pair(&self.polys[i], &self.polys[j], &self.order) else {
                    continue;
                };
                let (rem, _) = reduce_full(&s, &self.polys, &self.order);
                if !rem.is_zero() {
                    return Err(AlgebraError::InvariantViolation(format!(
                        "S-pair ({i},{j}) does not reduce to zero"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// S-pair of two monic elements; `None` when the leads sit in different
/// components.
fn s_pair(f: &Poly, g: &Poly, order: &ModOrder) -> Option<Poly> {
    let lf = f.lead_monomial();
    let lg = g.lead_monomial();
    if lf.part != lg.part {
        return None;
    }
    let lcm = lf.mono.lcm(&lg.mono);
    let mf = lcm.try_div(&lf.mono).expect("lcm divisible");
    let mg = lcm.try_div(&lg.mono).expect("lcm divisible");
    let cf = &f.lead().1;
    let cg = &g.lead().1;
    let scaled_f = f.mul_term(&mf, &(Rat::one() / cf));
    let scaled_g = g.mul_term(&mg, &(Rat::one() / cg));
    Some(scaled_f.sub(&scaled_g, order))
}

use crate::matrix::Rat;

/// Full normal form: every term of the remainder is irreducible. Also
/// returns, per basis element, the quotient polynomial used.
pub fn reduce_full(f: &Poly, basis: &[Poly], order: &ModOrder) -> (Poly, Vec<Poly>) {
    let mut quotients = vec![Poly::zero(); basis.len()];
    let mut remainder: Vec<(ModMonomial, Rat)> = Vec::new();
    let mut work = f.clone();
    'outer: while !work.is_zero() {
        let (m, c) = work.lead().clone();
        for (k, g) in basis.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let lg = g.lead_monomial();
            if lg.part == m.part {
                if let Some(q) = m.mono.try_div(&lg.mono) {
                    let factor = &c / &g.lead().1;
                    work = work.sub(&g.mul_term(&q, &factor), order);
                    quotients[k] = quotients[k].add(
                        &Poly::monomial(q, 0).mul_term(&Monomial::one(lg.mono.num_vars()), &factor),
                        order,
                    );
                    continue 'outer;
                }
            }
        }
        // irreducible lead: move it to the remainder
        remainder.push((m, c));
        work.terms.remove(0);
    }
    (Poly { terms: remainder }, quotients)
}

/// Buchberger's algorithm: completes the generators to a reduced
/// Gröbner basis for the given order.
pub fn buchberger(
    generators: &[Poly],
    order: &ModOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, AlgebraError> {
    let rank_one = generators.iter().all(|g| g.is_ring_element());
    let mut basis: Vec<Poly> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.resorted(order).monic())
        .collect();
    basis.sort_by(|a, b| order.cmp(b.lead_monomial(), a.lead_monomial()));
    basis.dedup();

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }

    while let Some(&(i, j)) = pairs.first() {
        pairs.remove(0);
        let total_terms: usize = basis.iter().map(|b| b.len()).sum();
        budget.check_size(AlgebraStage::GroebnerBasis, basis.len(), total_terms)?;

        let (f, g) = (&basis[i], &basis[j]);
        let lf = f.lead_monomial();
        let lg = g.lead_monomial();
        if lf.part != lg.part {
            continue;
        }
        // product criterion: only sound for ideals
        if rank_one && lf.mono.coprime(&lg.mono) {
            continue;
        }
        let s = s_pair(f, g, order).expect("same component");
        let (rem, _) = reduce_full(&s, &basis, order);
        if rem.is_zero() {
            continue;
        }
        let rem = rem.monic();
        let new_idx = basis.len();
        for k in 0..new_idx {
            pairs.push((k, new_idx));
        }
        basis.push(rem);
    }

    Ok(GroebnerBasis {
        polys: autoreduce(basis, order),
        order: order.clone(),
    })
}

/// Interreduces a basis: every element is fully reduced against the
/// others and monic; the span and the Gröbner property are preserved.
pub fn autoreduce(mut basis: Vec<Poly>, order: &ModOrder) -> Vec<Poly> {
    loop {
        let mut changed = false;
        let mut next: Vec<Poly> = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let others: Vec<Poly> = basis
                .iter()
                .enumerate()
                .filter(|(k, p)| *k != i && !p.is_zero())
                .map(|(_, p)| p.clone())
                .collect();
            let (rem, _) = reduce_full(&basis[i], &others, order);
            if rem != basis[i] {
                changed = true;
            }
            if !rem.is_zero() {
                next.push(rem.monic());
            }
        }
        next.sort_by(|a, b| order.cmp(b.lead_monomial(), a.lead_monomial()));
        next.dedup();
        basis = next;
        if !changed {
            break;
        }
    }
    basis
}

/// Schreyer's construction: given a monic Gröbner basis, returns a
/// Gröbner basis of its syzygy module together with the induced order
/// on the free module with one basis element per input polynomial.
///
/// Pairs whose lead quotient is divisible by another quotient on the
/// same component are skipped; the surviving syzygies still generate
/// the full lead module of the syzygies, hence form a Gröbner basis.
pub fn schreyer_syzygies(
    gb: &[Poly],
    order: &ModOrder,
    budget: &Budget,
) -> Result<(Vec<Poly>, ModOrder), AlgebraError> {
    let leads: Vec<ModMonomial> = gb.iter().map(|g| g.lead_monomial().clone()).collect();
    let syz_order = ModOrder::schreyer(leads.clone(), order.clone());

    // candidate pairs grouped by the component of the lead
    let mut kept: Vec<(usize, usize, Monomial)> = Vec::new();
    for i in 0..gb.len() {
        let mut quotients: Vec<(Monomial, usize)> = Vec::new();
        for j in i + 1..gb.len() {
            if leads[i].part != leads[j].part {
                continue;
            }
            let lcm = leads[i].mono.lcm(&leads[j].mono);
            let q = lcm.try_div(&leads[i].mono).expect("lcm divisible");
            quotients.push((q, j));
        }
        // keep only divisibility-minimal quotients, one per monomial
        let minimal: Vec<(Monomial, usize)> = quotients
            .iter()
            .filter(|(q, j)| {
                !quotients
                    .iter()
                    .any(|(q2, j2)| (q2.divides(q) && q2 != q) || (q2 == q && j2 < j))
            })
            .cloned()
            .collect();
        for (q, j) in minimal {
            kept.push((i, j, q));
        }
    }

    let mut syzygies: Vec<Poly> = Vec::new();
    for (i, j, _) in kept {
        budget.check(AlgebraStage::Syzygies)?;
        let s = s_pair(&gb[i], &gb[j], order).expect("same component");
        let (rem, quotients) = reduce_full(&s, gb, order);
        if !rem.is_zero() {
            return Err(AlgebraError::InvariantViolation(
                "input to syzygy computation is not a Groebner basis".into(),
            ));
        }
        let lcm = leads[i].mono.lcm(&leads[j].mono);
        let mi = lcm.try_div(&leads[i].mono).expect("lcm divisible");
        let mj = lcm.try_div(&leads[j].mono).expect("lcm divisible");
        let ci = Rat::one() / &gb[i].lead().1;
        let cj = Rat::one() / &gb[j].lead().1;
        let mut terms = vec![
            (ModMonomial { mono: mi, part: i }, ci),
            (ModMonomial { mono: mj, part: j }, -cj),
        ];
        for (k, q) in quotients.iter().enumerate() {
            for (m, c) in &q.terms {
                terms.push((
                    ModMonomial {
                        mono: m.mono.clone(),
                        part: k,
                    },
                    -c.clone(),
                ));
            }
        }
        let syz = Poly::from_terms(terms, &syz_order);
        debug_assert_eq!(
            syz.lead_monomial().part,
            i,
            "Schreyer lead must sit on the first component of the pair"
        );
        syzygies.push(syz.monic());
    }

    syzygies.sort_by(|a, b| syz_order.cmp(b.lead_monomial(), a.lead_monomial()));
    Ok((syzygies, syz_order))
}

/// Convenience entry point for ideal bases in a ring order.
pub fn groebner_basis(
    generators: &[Poly],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, AlgebraError> {
    buchberger(generators, &crate::poly::ring_order(order), budget)
}

/// Generators of the syzygy module of the given module elements. If the
/// input is not already a Gröbner basis it is completed internally, so
/// the syzygies refer to the completed basis, which is also returned.
pub fn syzygies(
    generators: &[Poly],
    order: &ModOrder,
    budget: &Budget,
) -> Result<(Vec<Poly>, Vec<Poly>, ModOrder), AlgebraError> {
    let gb = buchberger(generators, order, budget)?;
    let (syz, syz_order) = schreyer_syzygies(&gb.polys, order, budget)?;
    Ok((gb.polys, syz, syz_order))
}
