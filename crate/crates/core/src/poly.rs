//! Elements of free modules over the rational polynomial ring.
//!
//! A [`Poly`] is a linear combination of module monomials with rational
//! coefficients, kept sorted strictly descending with respect to the
//! active order. Ideals are the rank-one case where every component
//! index is zero. Terms are combined and zero coefficients dropped on
//! construction, so `terms.is_empty()` means the zero element.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::matrix::{Int, Rat};
use crate::monomial::{ModMonomial, ModOrder, Monomial, MonomialOrder};

pub type Term = (ModMonomial, Rat);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Builds an element from arbitrary terms: sorts, merges duplicates,
    /// drops zeros.
    pub fn from_terms(mut terms: Vec<Term>, order: &ModOrder) -> Poly {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    if last.1.is_zero() {
                        merged.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                merged.push((m, c));
            }
        }
        Poly { terms: merged }
    }

    /// A ring monomial with coefficient one, in component `part`.
    pub fn monomial(mono: Monomial, part: usize) -> Poly {
        Poly {
            terms: vec![(ModMonomial { mono, part }, Rat::one())],
        }
    }

    /// The binomial `x^a - x^b` in component 0, sorted under the order.
    pub fn binomial(a: Monomial, b: Monomial, order: &ModOrder) -> Poly {
        debug_assert_ne!(a, b);
        Poly::from_terms(
            vec![
                (ModMonomial::ring(a), Rat::one()),
                (ModMonomial::ring(b), -Rat::one()),
            ],
            order,
        )
    }

    pub fn lead(&self) -> &Term {
        self.terms.first().expect("lead term of zero element")
    }

    pub fn lead_monomial(&self) -> &ModMonomial {
        &self.lead().0
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every term lies in component 0, i.e. the element can be
    /// read as an ordinary polynomial.
    pub fn is_ring_element(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.part == 0)
    }

    /// The terms sorted under a different order.
    pub fn resorted(&self, order: &ModOrder) -> Poly {
        Poly::from_terms(self.terms.clone(), order)
    }

    pub fn add(&self, other: &Poly, order: &ModOrder) -> Poly {
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => {
                    out.push(a.next().expect("peeked").clone());
                }
                (None, Some(_)) => {
                    out.push(b.next().expect("peeked").clone());
                }
                (Some((ma, _)), Some((mb, _))) => match order.cmp(ma, mb) {
                    std::cmp::Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                    std::cmp::Ordering::Less => out.push(b.next().expect("peeked").clone()),
                    std::cmp::Ordering::Equal => {
                        let (m, ca) = a.next().expect("peeked").clone();
                        let (_, cb) = b.next().expect("peeked");
                        let c = ca + cb;
                        if !c.is_zero() {
                            out.push((m, c));
                        }
                    }
                },
            }
        }
        Poly { terms: out }
    }

    pub fn sub(&self, other: &Poly, order: &ModOrder) -> Poly {
        self.add(&other.neg(), order)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Multiply by the term `coeff * mono` (the component is untouched;
    /// this is the module action of the ring).
    pub fn mul_term(&self, mono: &Monomial, coeff: &Rat) -> Poly {
        if coeff.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        ModMonomial {
                            mono: m.mono.mul(mono),
                            part: m.part,
                        },
                        c * coeff,
                    )
                })
                .collect(),
        }
    }

    /// Divides by the lead coefficient.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.lead().1.clone();
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c / &lc))
                .collect(),
        }
    }

    /// Total degree of the lead term's monomial part.
    pub fn lead_degree(&self) -> u64 {
        self.lead().0.mono.degree()
    }

    /// Degree of a homogeneous module element given the degrees of the
    /// target's basis elements; `None` if the element is not homogeneous.
    pub fn homogeneous_degree(&self, basis_degrees: &[u64]) -> Option<u64> {
        let mut degree = None;
        for (m, _) in &self.terms {
            let d = m.mono.degree() + basis_degrees[m.part];
            match degree {
                None => degree = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        degree
    }

    /// Renders a ring element with the given variable names.
    pub fn render(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mut mono = String::new();
            for (v, &e) in m.mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                if e == 1 {
                    mono.push_str(&vars[v]);
                } else {
                    mono.push_str(&format!("{}^{}", vars[v], e));
                }
            }
            let abs = c.abs();
            let coeff = if abs.is_one() && !mono.is_empty() {
                String::new()
            } else {
                format!("{}", abs)
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {} ", sign));
            }
            let body = match (coeff.is_empty(), mono.is_empty()) {
                (true, false) => mono,
                (false, true) => coeff,
                (false, false) => format!("{}*{}", coeff, mono),
                (true, true) => "1".to_string(),
            };
            if m.part != 0 || !self.is_ring_element() {
                out.push_str(&format!("{}<e{}>", body, m.part));
            } else {
                out.push_str(&body);
            }
        }
        out
    }
}

/// Converts an integer exponent vector into the binomial
/// `x^{u+} - x^{u-}` given by its positive and negative parts.
pub fn binomial_from_exponent(u: &[Int]) -> Poly {
    let n = u.len();
    let mut plus = vec![0u32; n];
    let mut minus = vec![0u32; n];
    for (i, e) in u.iter().enumerate() {
        if e.is_positive() {
            plus[i] = u32::try_from(e.clone()).expect("exponent fits u32");
        } else if e.is_negative() {
            minus[i] = u32::try_from(-e.clone()).expect("exponent fits u32");
        }
    }
    Poly::binomial(Monomial(plus), Monomial(minus))
}

/// Ring order wrapped for rank-one (ideal) computations.
pub fn ring_order(order: MonomialOrder) -> ModOrder {
    ModOrder::TermOverPosition(order)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(Int::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o() -> ModOrder {
        ring_order(MonomialOrder::GrevLex)
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn terms_merge_and_sort() {
        let p = Poly::from_terms(
            vec![
                (ModMonomial::ring(mono(&[1, 0])), rat(2)),
                (ModMonomial::ring(mono(&[0, 2])), rat(1)),
                (ModMonomial::ring(mono(&[1, 0])), rat(-2)),
            ],
            &o(),
        );
        assert_eq!(p.len(), 1);
        assert_eq!(p.lead().0.mono, mono(&[0, 2]));
    }

    #[test]
    fn add_cancels() {
        let a = Poly::binomial(mono(&[2, 0]), mono(&[0, 1]));
        let b = Poly::binomial(mono(&[0, 1]), mono(&[2, 0]));
        assert!(a.add(&b, &o()).is_zero());
    }

    #[test]
    fn homogeneous_degree_detects() {
        let p = Poly::binomial(mono(&[1, 1]), mono(&[0, 2]));
        assert_eq!(p.homogeneous_degree(&[0]), Some(2));
        let q = Poly::binomial(mono(&[1, 0]), mono(&[0, 2]));
        assert_eq!(q.homogeneous_degree(&[0]), None);
    }

    #[test]
    fn binomial_from_signed_exponent() {
        let u = [Int::from(1), Int::from(-2), Int::from(1)];
        let p = binomial_from_exponent(&u);
        assert_eq!(p.len(), 2);
        assert_eq!(p.lead().0.mono, mono(&[1, 0, 1]));
    }

    #[test]
    fn render_readable() {
        let p = Poly::binomial(mono(&[1, 0, 1]), mono(&[0, 2, 0]));
        let vars = vec!["x1".into(), "x2".into(), "x3".into()];
        assert_eq!(p.render(&vars), "x1*x3 - x2^2");
    }
}
