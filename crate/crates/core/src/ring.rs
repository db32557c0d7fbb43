//! Presented commutative rings: polynomial patches, localizations and
//! tensor rings with artinian coefficients.
//!
//! A localization at `g` is realized by adjoining a variable `u` with the
//! relation `u*g - 1`, which turns equality and ideal membership into
//! Gröbner normal-form questions. Coefficient ("artinian") variables carry
//! their own ideal relations. Every element is kept in normal form against
//! the context's relation basis.

use std::fmt;

use crate::error::{KernelError, Result};
use crate::groebner::{self, GroebnerBasis};
use crate::poly::{Monomial, MonomialOrder, Poly, Vars};
use crate::scalar::Field;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarKind {
    /// A geometric coordinate of the patch.
    Base,
    /// The formal inverse of a declared invertible element; the payload is
    /// the index of the inverted polynomial in `inverted`.
    Inverse(usize),
    /// A coefficient variable of the artinian tensor factor.
    Coeff,
}

/// A presented ring plus relation Gröbner basis.
#[derive(Clone, Debug)]
pub struct RingCtx<K: Field> {
    vars: Vars,
    kinds: Vec<VarKind>,
    /// Polynomials that were inverted; entry `j` pairs with the variable of
    /// kind `Inverse(j)`. Each is a polynomial in base variables only.
    inverted: Vec<Poly<K>>,
    relations: Vec<Poly<K>>,
    gb: Option<GroebnerBasis<K>>,
    order: MonomialOrder,
}

impl<K: Field> RingCtx<K> {
    /// Plain polynomial ring.
    pub fn polynomial(vars: Vars, order: MonomialOrder) -> Self {
        let kinds = vec![VarKind::Base; vars.len()];
        RingCtx { vars, kinds, inverted: vec![], relations: vec![], gb: None, order }
    }

    /// Polynomial ring with declared invertible elements. `inverted` pairs an
    /// inverse-variable name with the polynomial it inverts (a polynomial in
    /// the base variables).
    pub fn localized(
        base: Vars,
        inverted: Vec<(String, String)>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let mut names: Vec<String> = base.names().to_vec();
        let mut kinds = vec![VarKind::Base; base.len()];
        for (j, (uname, _)) in inverted.iter().enumerate() {
            names.push(uname.clone());
            kinds.push(VarKind::Inverse(j));
        }
        let vars = Vars::new(names);
        let mut inv_polys = Vec::new();
        let mut relations = Vec::new();
        for (uname, gtext) in inverted.iter() {
            let g_base: Poly<K> = Poly::parse(&base, gtext)?;
            if g_base.is_zero() {
                return Err(KernelError::Invalid(format!("cannot invert zero ({uname})")));
            }
            let g = g_base.extend_vars(&vars);
            let u_idx = vars.index_of(uname).unwrap();
            let rel = Poly::var(&vars, u_idx).mul(&g).sub(&Poly::one(&vars));
            inv_polys.push(g);
            relations.push(rel);
        }
        let gb = if relations.is_empty() {
            None
        } else {
            Some(groebner::groebner(&relations, order)?)
        };
        Ok(RingCtx { vars, kinds, inverted: inv_polys, relations, gb, order })
    }

    /// Tensor of this ring with a presented artinian coefficient algebra.
    /// Variable names must be disjoint.
    pub fn tensor(&self, coeff_vars: &Vars, coeff_ideal: &[Poly<K>]) -> Result<RingCtx<K>> {
        for n in coeff_vars.names() {
            if self.vars.index_of(n).is_some() {
                return Err(KernelError::Invalid(format!(
                    "coefficient variable `{n}` collides with a ring variable"
                )));
            }
        }
        let vars = self.vars.join(coeff_vars);
        let mut kinds = self.kinds.clone();
        kinds.extend(vec![VarKind::Coeff; coeff_vars.len()]);
        let mut relations: Vec<Poly<K>> =
            self.relations.iter().map(|r| r.extend_vars(&vars)).collect();
        for g in coeff_ideal {
            relations.push(g.extend_vars(&vars));
        }
        let gb = if relations.is_empty() {
            None
        } else {
            Some(groebner::groebner(&relations, self.order)?)
        };
        Ok(RingCtx {
            kinds,
            inverted: self.inverted.iter().map(|g| g.extend_vars(&vars)).collect(),
            relations,
            gb,
            order: self.order,
            vars,
        })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn kinds(&self) -> &[VarKind] {
        &self.kinds
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn relations(&self) -> &[Poly<K>] {
        &self.relations
    }

    pub fn relation_basis(&self) -> Option<&GroebnerBasis<K>> {
        self.gb.as_ref()
    }

    pub fn base_var_indices(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|i| self.kinds[*i] == VarKind::Base).collect()
    }

    pub fn coeff_var_indices(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|i| self.kinds[*i] == VarKind::Coeff).collect()
    }

    pub fn zero(&self) -> Poly<K> {
        Poly::zero(&self.vars)
    }

    pub fn one(&self) -> Poly<K> {
        Poly::one(&self.vars)
    }

    pub fn parse(&self, text: &str) -> Result<Poly<K>> {
        Ok(self.nf(&Poly::parse(&self.vars, text)?))
    }

    /// Normal form against the relation basis.
    pub fn nf(&self, p: &Poly<K>) -> Poly<K> {
        match &self.gb {
            Some(gb) => groebner::normal_form(p, gb),
            None => p.clone(),
        }
    }

    pub fn eq(&self, a: &Poly<K>, b: &Poly<K>) -> bool {
        self.nf(&a.sub(b)).is_zero()
    }

    pub fn is_zero_elem(&self, p: &Poly<K>) -> bool {
        self.nf(p).is_zero()
    }

    pub fn mul_nf(&self, a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
        self.nf(&a.mul(b))
    }

    /// Exterior derivative of `p` as a map `form variable index -> coefficient`.
    ///
    /// Differentials of inverse variables are eliminated through
    /// `d(u) = -u^2 dg`, so the support is base and coefficient variables
    /// only.
    pub fn differential(&self, p: &Poly<K>) -> Vec<(usize, Poly<K>)> {
        let mut acc: Vec<Poly<K>> = vec![Poly::zero(&self.vars); self.vars.len()];
        for (i, kind) in self.kinds.iter().enumerate() {
            let dp = p.derivative(i);
            if dp.is_zero() {
                continue;
            }
            match kind {
                VarKind::Base | VarKind::Coeff => acc[i] = acc[i].add(&dp),
                VarKind::Inverse(j) => {
                    // d(u_j) = -u_j^2 * dg_j; g_j only involves base vars.
                    let u = Poly::var(&self.vars, i);
                    let factor = dp.mul(&u).mul(&u).neg();
                    let g = &self.inverted[*j];
                    for b in self.base_var_indices() {
                        let dg = g.derivative(b);
                        if !dg.is_zero() {
                            acc[b] = acc[b].add(&factor.mul(&dg));
                        }
                    }
                }
            }
        }
        acc.into_iter()
            .enumerate()
            .map(|(i, c)| (i, self.nf(&c)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Standard monomials of the relation basis up to total degree `d`
    /// (all monomials when there are no relations).
    pub fn monomials_up_to(&self, d: u32) -> Vec<Monomial> {
        match &self.gb {
            Some(gb) => groebner::standard_monomials_up_to(gb, d),
            None => {
                // Box enumeration with degree filter.
                let n = self.vars.len();
                let mut out = Vec::new();
                let mut cur = vec![0u32; n];
                loop {
                    if cur.iter().sum::<u32>() <= d {
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
        }
    }

    /// Gröbner basis of `extra + relations`, for ideal work inside the ring.
    pub fn ideal_with(&self, extra: &[Poly<K>]) -> Result<GroebnerBasis<K>> {
        let mut gens: Vec<Poly<K>> = self.relations.clone();
        gens.extend(extra.iter().cloned());
        groebner::groebner(&gens, self.order)
    }
}

/// A ring homomorphism given by variable images. Coefficient variables of a
/// tensor context must map to themselves (the morphisms of the pipeline are
/// always `R -> R'` tensored with the identity of the coefficients).
#[derive(Clone, Debug)]
pub struct RingMorphism<K: Field> {
    source: RingCtx<K>,
    target: RingCtx<K>,
    images: Vec<Poly<K>>,
}

impl<K: Field> RingMorphism<K> {
    pub fn new(source: &RingCtx<K>, target: &RingCtx<K>, images: Vec<Poly<K>>) -> Result<Self> {
        if images.len() != source.vars().len() {
            return Err(KernelError::DimensionMismatch(format!(
                "morphism needs {} images, got {}",
                source.vars().len(),
                images.len()
            )));
        }
        let m = RingMorphism { source: source.clone(), target: target.clone(), images };
        m.verify()?;
        Ok(m)
    }

    /// Builds a morphism from images of the base variables by textual name;
    /// inverse variables get the inverse images they are forced to, and
    /// coefficient variables map to their namesakes.
    pub fn from_base_images(
        source: &RingCtx<K>,
        target: &RingCtx<K>,
        base_images: &[(String, String)],
    ) -> Result<Self> {
        let mut images: Vec<Option<Poly<K>>> = vec![None; source.vars().len()];
        for (name, text) in base_images {
            let idx = source.vars().index_of(name).ok_or_else(|| {
                KernelError::Invalid(format!("morphism names unknown variable `{name}`"))
            })?;
            images[idx] = Some(target.parse(text)?);
        }
        for (i, kind) in source.kinds().iter().enumerate() {
            if images[i].is_some() {
                continue;
            }
            match kind {
                VarKind::Coeff => {
                    let name = source.vars().name(i);
                    let j = target.vars().index_of(name).ok_or_else(|| {
                        KernelError::Invalid(format!(
                            "coefficient variable `{name}` missing in morphism target"
                        ))
                    })?;
                    images[i] = Some(Poly::var(target.vars(), j));
                }
                _ => {
                    return Err(KernelError::Invalid(format!(
                        "no image given for variable `{}`",
                        source.vars().name(i)
                    )))
                }
            }
        }
        Self::new(source, target, images.into_iter().map(Option::unwrap).collect())
    }

    fn verify(&self) -> Result<()> {
        for rel in self.source.relations() {
            let img = self.apply_raw(rel);
            if !self.target.is_zero_elem(&img) {
                return Err(KernelError::Invalid(format!(
                    "variable images do not respect relation `{rel}`"
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &RingCtx<K> {
        &self.source
    }

    pub fn target(&self) -> &RingCtx<K> {
        &self.target
    }

    fn apply_raw(&self, p: &Poly<K>) -> Poly<K> {
        p.substitute(&self.images)
    }

    pub fn apply(&self, p: &Poly<K>) -> Poly<K> {
        self.target.nf(&self.apply_raw(p))
    }

    /// Pullback of the differential symbol of source variable `i`: the
    /// differential of its image, as target form coefficients.
    pub fn push_differential(&self, i: usize) -> Vec<(usize, Poly<K>)> {
        self.target.differential(&self.images[i])
    }
}

/// A localized fraction `num / prod inverted_j^exp_j`, the I/O-friendly view
/// of an element of a localized patch ring.
#[derive(Clone, Debug, PartialEq)]
pub struct LocElem<K: Field> {
    pub num: Poly<K>,
    /// Exponents indexed like `RingCtx::inverted`.
    pub den: Vec<u32>,
}

impl<K: Field> LocElem<K> {
    pub fn to_element(&self, ctx: &RingCtx<K>) -> Poly<K> {
        let mut p = self.num.extend_vars(ctx.vars());
        for (j, e) in self.den.iter().enumerate() {
            if *e > 0 {
                let u_idx = (0..ctx.vars().len())
                    .find(|i| ctx.kinds()[*i] == VarKind::Inverse(j))
                    .expect("LocElem denominator index out of range");
                p = p.mul(&Poly::var(ctx.vars(), u_idx).pow(*e));
            }
        }
        ctx.nf(&p)
    }

    /// Equality after clearing denominators modulo the ring's relations.
    pub fn eq_in(&self, other: &LocElem<K>, ctx: &RingCtx<K>) -> bool {
        ctx.eq(&self.to_element(ctx), &other.to_element(ctx))
    }
}

impl<K: Field> fmt::Display for LocElem<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.num)?;
        for (j, e) in self.den.iter().enumerate() {
            if *e > 0 {
                write!(f, " / inv_{j}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn degrevlex() -> MonomialOrder {
        MonomialOrder::DegRevLex
    }

    #[test]
    fn localization_turns_equality_into_membership() {
        // k[t, u]/(ut - 1): the two presentations of s - 1 at s = 1/t agree
        // up to the unit -t, i.e. (t - 1) = -t * (u - 1).
        let ctx: RingCtx<Rat> =
            RingCtx::localized(Vars::new(vec!["t"]), vec![("u".into(), "t".into())], degrevlex())
                .unwrap();
        let lhs = ctx.parse("t - 1").unwrap();
        let rhs = ctx.parse("-t*(u - 1)").unwrap();
        assert!(ctx.eq(&lhs, &rhs));
        assert!(ctx.is_zero_elem(&ctx.parse("u*t - 1").unwrap()));
    }

    #[test]
    fn inverse_variable_differential() {
        // d(u) = -u^2 dt for u = 1/t.
        let ctx: RingCtx<Rat> =
            RingCtx::localized(Vars::new(vec!["t"]), vec![("u".into(), "t".into())], degrevlex())
                .unwrap();
        let u = ctx.parse("u").unwrap();
        let d = ctx.differential(&u);
        assert_eq!(d.len(), 1);
        let (idx, coeff) = &d[0];
        assert_eq!(ctx.vars().name(*idx), "t");
        assert!(ctx.eq(coeff, &ctx.parse("-u^2").unwrap()));
    }

    #[test]
    fn tensor_with_dual_numbers() {
        let ctx: RingCtx<Rat> =
            RingCtx::polynomial(Vars::new(vec!["x"]), degrevlex());
        let evars = Vars::new(vec!["e"]);
        let eideal = vec![Poly::parse(&evars, "e^2").unwrap()];
        let t = ctx.tensor(&evars, &eideal).unwrap();
        let p = t.parse("(x + e)*(x + e)").unwrap();
        assert!(t.eq(&p, &t.parse("x^2 + 2*x*e").unwrap()));
    }

    #[test]
    fn morphism_respects_relations() {
        // k[s] -> k[t, u]/(ut-1), s |-> u.
        let src: RingCtx<Rat> = RingCtx::polynomial(Vars::new(vec!["s"]), degrevlex());
        let tgt =
            RingCtx::localized(Vars::new(vec!["t"]), vec![("u".into(), "t".into())], degrevlex())
                .unwrap();
        let m =
            RingMorphism::from_base_images(&src, &tgt, &[("s".into(), "u".into())]).unwrap();
        let img = m.apply(&src.parse("s^2 - 1").unwrap());
        assert!(tgt.eq(&img, &tgt.parse("u^2 - 1").unwrap()));
        // ds pulls back to du = -u^2 dt.
        let d = m.push_differential(0);
        assert_eq!(d.len(), 1);
        assert!(tgt.eq(&d[0].1, &tgt.parse("-u^2").unwrap()));
    }

    #[test]
    fn loc_elem_equality() {
        let ctx: RingCtx<Rat> =
            RingCtx::localized(Vars::new(vec!["t"]), vec![("u".into(), "t".into())], degrevlex())
                .unwrap();
        let base = Vars::new(vec!["t"]);
        let a = LocElem { num: Poly::<Rat>::parse(&base, "1").unwrap(), den: vec![1] };
        let b = LocElem { num: Poly::<Rat>::parse(&base, "t").unwrap(), den: vec![2] };
        assert!(a.eq_in(&b, &ctx)); // 1/t = t/t^2
    }
}
