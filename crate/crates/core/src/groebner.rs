//! Buchberger's algorithm, reduced bases, normal forms, quotient bases.

use std::collections::BTreeSet;

use crate::error::{KernelError, Result};
use crate::poly::{mono_div, mono_lcm, mono_mul, mono_total_degree, Monomial, MonomialOrder, Poly, Vars};
use crate::scalar::Field;

/// A reduced Gröbner basis: monic generators, no leading term divides
/// another, every tail monomial reduced.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<K: Field> {
    vars: Vars,
    order: MonomialOrder,
    gens: Vec<Poly<K>>,
    leads: Vec<Monomial>,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Poly<K>] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant() && !self.gens[0].is_zero()
    }
}

/// Multivariate division: returns (quotients, remainder) with
/// `p = sum q_i * d_i + r` and no remainder monomial divisible by a leading
/// monomial of `divisors`.
pub fn divide<K: Field>(
    p: &Poly<K>,
    divisors: &[Poly<K>],
    order: MonomialOrder,
) -> (Vec<Poly<K>>, Poly<K>) {
    let vars = p.vars().clone();
    let mut quots = vec![Poly::zero(&vars); divisors.len()];
    let mut rem = Poly::zero(&vars);
    let mut work = p.clone();
    let leads: Vec<(Monomial, K)> = divisors
        .iter()
        .map(|d| {
            let (m, c) = d.leading_term(order).expect("zero divisor polynomial");
            (m.clone(), c.clone())
        })
        .collect();
    while let Some((m, c)) = work.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let mut reduced = false;
        for (i, d) in divisors.iter().enumerate() {
            if let Some(q) = mono_div(&m, &leads[i].0) {
                let factor = c.clone() / leads[i].1.clone();
                quots[i].add_term(q.clone(), factor.clone());
                work = work.sub(&d.mul_term(&q, &factor));
                reduced = true;
                break;
            }
        }
        if !reduced {
            rem.add_term(m.clone(), c.clone());
            let mut w = work;
            w.add_term(m, -c);
            work = w;
        }
    }
    (quots, rem)
}

/// Buchberger with the coprimality criterion, followed by reduction to the
/// unique reduced monic basis.
pub fn groebner<K: Field>(gens: &[Poly<K>], order: MonomialOrder) -> Result<GroebnerBasis<K>> {
    let nonzero: Vec<Poly<K>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(KernelError::Invalid("groebner needs a nonempty generator list".into()));
    }
    let vars = nonzero[0].vars().clone();
    for g in &nonzero {
        if g.vars() != &vars {
            return Err(KernelError::Invalid("generators over different variable sets".into()));
        }
    }

    let mut basis = nonzero;
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.insert((i, j));
        }
    }

    while let Some(&(i, j)) = pairs.iter().next() {
        pairs.remove(&(i, j));
        let (mi, ci) = {
            let (m, c) = basis[i].leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        let (mj, cj) = {
            let (m, c) = basis[j].leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        let lcm = mono_lcm(&mi, &mj);
        // Coprime leading monomials: the S-polynomial reduces to zero.
        if lcm == mono_mul(&mi, &mj) {
            continue;
        }
        let s = basis[i]
            .mul_term(&mono_div(&lcm, &mi).unwrap(), &(K::one() / ci))
            .sub(&basis[j].mul_term(&mono_div(&lcm, &mj).unwrap(), &(K::one() / cj)));
        let (_, r) = divide(&s, &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r);
            for t in 0..k {
                pairs.insert((t, k));
            }
        }
    }

    // Minimalize: drop generators whose lead is divisible by another lead.
    let mut keep: Vec<Poly<K>> = Vec::new();
    'outer: for (i, g) in basis.iter().enumerate() {
        let (mg, _) = g.leading_term(order).unwrap();
        for (j, h) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let (mh, _) = h.leading_term(order).unwrap();
            if mono_div(mg, mh).is_some() && (mg != mh || j < i) {
                continue 'outer;
            }
        }
        keep.push(g.clone());
    }

    // Reduce tails and normalize to monic.
    let mut reduced: Vec<Poly<K>> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Poly<K>> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = if others.is_empty() {
            keep[i].clone()
        } else {
            let (_, r) = divide(&keep[i], &others, order);
            r
        };
        if !r.is_zero() {
            let (_, c) = r.leading_term(order).unwrap();
            let c = c.clone();
            reduced.push(r.scale(&(K::one() / c)));
        }
    }
    reduced.sort_by(|a, b| {
        order.cmp(a.leading_term(order).unwrap().0, b.leading_term(order).unwrap().0)
    });

    let leads = reduced
        .iter()
        .map(|g| g.leading_term(order).unwrap().0.clone())
        .collect();
    Ok(GroebnerBasis { vars, order, gens: reduced, leads })
}

/// Unique remainder of `p` modulo the basis. Zero iff `p` is in the ideal.
pub fn normal_form<K: Field>(p: &Poly<K>, gb: &GroebnerBasis<K>) -> Poly<K> {
    assert_eq!(p.vars(), &gb.vars, "normal_form: variable set mismatch");
    let (_, r) = divide(p, &gb.gens, gb.order);
    r
}

/// Normal form together with the cofactor certificate `p = sum q_i g_i + r`.
pub fn normal_form_with_certificate<K: Field>(
    p: &Poly<K>,
    gb: &GroebnerBasis<K>,
) -> (Vec<Poly<K>>, Poly<K>) {
    divide(p, &gb.gens, gb.order)
}

/// Standard monomials of the quotient, or `None` when infinite.
///
/// Finiteness test: every variable must have a pure power among the leading
/// monomials (otherwise its powers are all standard).
pub fn quotient_basis<K: Field>(gb: &GroebnerBasis<K>) -> Option<Vec<Monomial>> {
    let n = gb.vars.len();
    if gb.is_unit_ideal() {
        return Some(vec![]);
    }
    let mut bound = vec![0u32; n];
    for i in 0..n {
        let mut found = None;
        for m in &gb.leads {
            if m[i] > 0 && m.iter().enumerate().all(|(j, e)| j == i || *e == 0) {
                found = Some(m[i]);
                break;
            }
        }
        bound[i] = found?;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let reducible = gb.leads.iter().any(|l| mono_div(&cur, l).is_some());
        if !reducible {
            out.push(cur.clone());
        }
        // Odometer over the box determined by the pure-power bounds.
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| {
                    MonomialOrder::DegRevLex.cmp(a, b)
                });
                return Some(out);
            }
            if cur[i] + 1 < bound[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Krull dimension of the quotient ring, computed combinatorially as the
/// largest variable subset not meeting any leading monomial's support.
pub fn quotient_dimension<K: Field>(gb: &GroebnerBasis<K>) -> usize {
    let n = gb.vars.len();
    if gb.is_unit_ideal() {
        return 0;
    }
    let supports: Vec<BTreeSet<usize>> = gb
        .leads
        .iter()
        .map(|m| m.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i).collect())
        .collect();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let set: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if set.len() <= best {
            continue;
        }
        if supports.iter().all(|s| !s.is_subset(&set)) {
            best = set.len();
        }
    }
    best
}

/// Expresses `p` as a combination of the original generators if it lies in
/// the ideal: first reduces against the basis, then rewrites basis elements
/// in terms of `gens` is *not* tracked; this returns cofactors against the
/// reduced basis only.
pub fn ideal_member<K: Field>(p: &Poly<K>, gb: &GroebnerBasis<K>) -> Option<Vec<Poly<K>>> {
    let (q, r) = divide(p, gb.generators(), gb.order());
    if r.is_zero() {
        Some(q)
    } else {
        None
    }
}

pub fn max_total_degree<K: Field>(ps: &[Poly<K>]) -> u32 {
    ps.iter().map(|p| p.total_degree()).max().unwrap_or(0)
}

/// All standard monomials of total degree at most `d`.
pub fn standard_monomials_up_to<K: Field>(gb: &GroebnerBasis<K>, d: u32) -> Vec<Monomial> {
    let n = gb.vars.len();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        if mono_total_degree(&cur) <= d && !gb.leads.iter().any(|l| mono_div(&cur, l).is_some()) {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out;
            }
            if cur[i] < d {
                cur[i] += 1;
                for c in cur.iter_mut().take(i) {
                    *c = 0;
                }
                break;
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn parse(v: &Vars, s: &str) -> Poly<Rat> {
        Poly::parse(v, s).unwrap()
    }

    #[test]
    fn square_ideal_is_already_reduced() {
        // {x^2, xy, y^2} is its own reduced basis: all S-polynomials reduce to zero.
        let v = Vars::new(vec!["x", "y"]);
        let gens = vec![parse(&v, "x^2"), parse(&v, "x*y"), parse(&v, "y^2")];
        let gb = groebner(&gens, MonomialOrder::DegRevLex).unwrap();
        let mut got: Vec<String> = gb.generators().iter().map(|g| g.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["x*y", "x^2", "y^2"]);
    }

    #[test]
    fn principal_ideal() {
        let v = Vars::new(vec!["x"]);
        let gb = groebner(&[parse(&v, "x")], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.generators().len(), 1);
        assert_eq!(gb.generators()[0].to_string(), "x");
    }

    #[test]
    fn unit_ideal_detected() {
        let v = Vars::new(vec!["x"]);
        let gb = groebner(&[parse(&v, "x - 1"), parse(&v, "x")], MonomialOrder::DegRevLex).unwrap();
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn normal_form_decides_membership() {
        let v = Vars::new(vec!["x", "y"]);
        let gb = groebner(
            &[parse(&v, "x^2"), parse(&v, "x*y"), parse(&v, "y^2")],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert!(normal_form(&parse(&v, "(x+y)*(x+y)"), &gb).is_zero());
        assert_eq!(normal_form(&parse(&v, "x+y"), &gb), parse(&v, "x+y"));
        let vx = Vars::new(vec!["x"]);
        let gbx = groebner(&[parse(&vx, "x^2")], MonomialOrder::DegRevLex).unwrap();
        assert!(normal_form(&parse(&vx, "x^3"), &gbx).is_zero());
    }

    #[test]
    fn normal_form_idempotent_and_certified() {
        let v = Vars::new(vec!["x", "y"]);
        let gb = groebner(
            &[parse(&v, "x^2 - y"), parse(&v, "y^3")],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        let p = parse(&v, "x^5 + x*y^2 + 7");
        let (q, r) = normal_form_with_certificate(&p, &gb);
        assert_eq!(normal_form(&r, &gb), r);
        // p = sum q_i g_i + r exactly.
        let mut acc = r.clone();
        for (qi, gi) in q.iter().zip(gb.generators()) {
            acc = acc.add(&qi.mul(gi));
        }
        assert_eq!(acc, p);
    }

    #[test]
    fn quotient_basis_square_ideal() {
        let v = Vars::new(vec!["x", "y"]);
        let gb = groebner(
            &[parse(&v, "x^2"), parse(&v, "x*y"), parse(&v, "y^2")],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        let basis = quotient_basis(&gb).unwrap();
        assert_eq!(basis.len(), 3); // 1, x, y
    }

    #[test]
    fn quotient_basis_infinite_flag() {
        let v = Vars::new(vec!["x", "y"]);
        let gb = groebner(&[parse(&v, "x^2")], MonomialOrder::DegRevLex).unwrap();
        assert!(quotient_basis(&gb).is_none());
        let vx = Vars::new(vec!["x"]);
        let gbx = groebner(&[parse(&vx, "x")], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(quotient_basis(&gbx).unwrap().len(), 1);
    }

    #[test]
    fn dimension_of_hypersurface() {
        let v = Vars::new(vec!["x", "y"]);
        let gb = groebner(&[parse(&v, "x*y - 1")], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(quotient_dimension(&gb), 1);
        let gb2 = groebner(&[parse(&v, "x")], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(quotient_dimension(&gb2), 1);
        let gb3 = groebner(&[parse(&v, "x"), parse(&v, "y")], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(quotient_dimension(&gb3), 0);
    }

    #[test]
    fn lex_elimination_still_works() {
        let v = Vars::new(vec!["x", "y"]);
        let gb = groebner(
            &[parse(&v, "x^2 + y"), parse(&v, "x*y + 1")],
            MonomialOrder::Lex,
        )
        .unwrap();
        // The ideal contains a univariate polynomial in y: y^3 - 1 up to sign.
        let has_univariate = gb
            .generators()
            .iter()
            .any(|g| g.terms().all(|(m, _)| m[0] == 0));
        assert!(has_univariate);
    }
}
