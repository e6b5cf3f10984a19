//! Monomials of a polynomial ring and of free modules over it, plus the
//! monomial orders used by the Gröbner machinery.
//!
//! Module monomials carry a basis index (`part`). Orders on them are
//! either a ring order with position tie-break, or a Schreyer order
//! induced by the lead monomials of the previous level of a resolution;
//! Schreyer orders nest, so the comparison walks down the tower.

use std::cmp::Ordering;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut m = Monomial::one(num_vars);
        m.0[i] = 1;
        m
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders on the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with the canonical variable order.
    GrevLex,
    /// Grevlex after permuting the variables; `perm[0]` is the most
    /// significant variable, `perm[last]` the cheapest.
    GrevLexPermuted(Vec<usize>),
    /// Eliminates the variables in `block`: compares the block degree
    /// first, then grevlex inside the block, then grevlex on the rest.
    Elimination { block: Vec<usize> },
}

impl MonomialOrder {
    /// Grevlex with variable `last` moved to the cheapest position,
    /// keeping the relative order of all others.
    pub fn grevlex_with_last(num_vars: usize, last: usize) -> MonomialOrder {
        let mut perm: Vec<usize> = (0..num_vars).filter(|&v| v != last).collect();
        perm.push(last);
        MonomialOrder::GrevLexPermuted(perm)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex_cmp(&a.0, &b.0),
            MonomialOrder::GrevLexPermuted(perm) => {
                let pa: Vec<u32> = perm.iter().map(|&v| a.0[v]).collect();
                let pb: Vec<u32> = perm.iter().map(|&v| b.0[v]).collect();
                grevlex_cmp(&pa, &pb)
            }
            MonomialOrder::Elimination { block } => {
                let da: u64 = block.iter().map(|&v| a.0[v] as u64).sum();
                let db: u64 = block.iter().map(|&v| b.0[v] as u64).sum();
                da.cmp(&db)
                    .then_with(|| {
                        let pa: Vec<u32> = block.iter().map(|&v| a.0[v]).collect();
                        let pb: Vec<u32> = block.iter().map(|&v| b.0[v]).collect();
                        grevlex_cmp(&pa, &pb)
                    })
                    .then_with(|| {
                        let rest: Vec<usize> =
                            (0..a.0.len()).filter(|v| !block.contains(v)).collect();
                        let pa: Vec<u32> = rest.iter().map(|&v| a.0[v]).collect();
                        let pb: Vec<u32> = rest.iter().map(|&v| b.0[v]).collect();
                        grevlex_cmp(&pa, &pb)
                    })
            }
        }
    }
}

fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // larger = the last nonzero entry of a - b is negative
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// A monomial of a free module: `mono * e_part`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMonomial {
    pub mono: Monomial,
    pub part: usize,
}

impl ModMonomial {
    pub fn ring(mono: Monomial) -> Self {
        ModMonomial { mono, part: 0 }
    }

    /// Divisibility inside the module: same component, dividing monomial.
    pub fn divides(&self, other: &ModMonomial) -> bool {
        self.part == other.part && self.mono.divides(&other.mono)
    }
}

/// Orders on module monomials. In the Schreyer case the order is the
/// one induced by a Gröbner basis of the previous level: compare the
/// images `mono * lead(part)` there, breaking ties by smaller part.
#[derive(Clone, Debug)]
pub enum ModOrder {
    /// Ring order first, then the smaller component wins.
    TermOverPosition(MonomialOrder),
    Schreyer {
        leads: Vec<ModMonomial>,
        base: Box<ModOrder>,
    },
}

impl ModOrder {
    pub fn schreyer(leads: Vec<ModMonomial>, base: ModOrder) -> ModOrder {
        ModOrder::Schreyer {
            leads,
            base: Box::new(base),
        }
    }

    pub fn cmp(&self, a: &ModMonomial, b: &ModMonomial) -> Ordering {
        match self {
            ModOrder::TermOverPosition(ring) => ring
                .cmp(&a.mono, &b.mono)
                .then_with(|| b.part.cmp(&a.part)),
            ModOrder::Schreyer { leads, base } => {
                let la = &leads[a.part];
                let lb = &leads[b.part];
                let image_a = ModMonomial {
                    mono: a.mono.mul(&la.mono),
                    part: la.part,
                };
                let image_b = ModMonomial {
                    mono: b.mono.mul(&lb.mono),
                    part: lb.part,
                };
                base.cmp(&image_a, &image_b)
                    .then_with(|| b.part.cmp(&a.part))
            }
        }
    }
}
