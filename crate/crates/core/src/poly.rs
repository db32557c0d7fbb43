//! Multivariate polynomials with exact coefficients.
//!
//! A polynomial is a map from exponent vectors to nonzero coefficients over
//! an ordered, shared variable list. The ASCII grammar accepted by
//! [`Poly::parse`] is documented in `docs/format.md`:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := '-'* factor ('*' factor)*
//! factor   := rational | ident ('^' uint)? | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! Identifiers must name declared variables; implicit multiplication is not
//! accepted.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::KernelError;
use crate::scalar::Field;

/// Shared ordered variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::BTreeSet::new();
        for n in &names {
            assert!(seen.insert(n.clone()), "duplicate variable {n}");
        }
        Vars(Arc::new(names))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Concatenates two variable lists (used to form tensor rings).
    pub fn join(&self, other: &Vars) -> Vars {
        let mut v = self.0.as_ref().clone();
        v.extend(other.0.iter().cloned());
        Vars::new(v)
    }
}

/// Exponent vector; length always equals the variable count.
pub type Monomial = Vec<u32>;

pub fn mono_total_degree(m: &Monomial) -> u32 {
    m.iter().sum()
}

pub fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise division; `None` when `b` does not divide `a`.
pub fn mono_div(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    let mut out = Vec::with_capacity(a.len());
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return None;
        }
        out.push(x - y);
    }
    Some(out)
}

pub fn mono_lcm(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
}

impl MonomialOrder {
    /// Compares monomials; `Greater` means `a` is the larger monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => {
                let (da, db) = (mono_total_degree(a), mono_total_degree(b));
                if da != db {
                    return da.cmp(&db);
                }
                // Reverse-lex tie break: the last variable with differing
                // exponent decides, smaller exponent wins.
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Equal
            }
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = KernelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" => Ok(MonomialOrder::DegRevLex),
            other => Err(KernelError::Parse(format!("unknown monomial order `{other}`"))),
        }
    }
}

/// A multivariate polynomial. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<K: Field> {
    vars: Vars,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Field> Poly<K> {
    pub fn zero(vars: &Vars) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: K) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, K::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        let mut m = vec![0; vars.len()];
        m[i] = 1;
        Self::monomial(vars, m, K::one())
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: K) -> Self {
        assert_eq!(m.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| mono_total_degree(m) == 0)
    }

    pub fn constant_term(&self) -> K {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(K::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(mono_total_degree).max().unwrap_or(0)
    }

    fn assert_compatible(&self, other: &Poly<K>) {
        assert_eq!(self.vars, other.vars, "polynomials over different variable sets");
    }

    pub fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly<K>) -> Poly<K> {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly<K> {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Poly<K>) -> Poly<K> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &K) -> Poly<K> {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Poly<K>) -> Poly<K> {
        self.assert_compatible(other);
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(mono_mul(ma, mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &K) -> Poly<K> {
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            out.add_term(mono_mul(ma, m), ca.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly<K> {
        let mut out = Self::one(&self.vars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Leading (monomial, coefficient) under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &K)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly<K> {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[i] -= 1;
            out.add_term(m2, c.clone() * K::from_int(m[i] as i64));
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`; all images share a target
    /// variable set.
    pub fn substitute(&self, images: &[Poly<K>]) -> Poly<K> {
        assert_eq!(images.len(), self.vars.len());
        let target = if images.is_empty() {
            panic!("substitute needs at least one image to fix the target ring")
        } else {
            images[0].vars().clone()
        };
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(&target, c.clone());
            for (i, e) in m.iter().enumerate() {
                if *e > 0 {
                    term = term.mul(&images[i].pow(*e));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Reinterprets the polynomial over a superset variable list.
    pub fn extend_vars(&self, target: &Vars) -> Poly<K> {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| target.index_of(n).expect("extend_vars: missing variable"))
            .collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut m2 = vec![0; target.len()];
            for (i, e) in m.iter().enumerate() {
                m2[map[i]] = *e;
            }
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Restricts to a variable subset; errors if a dropped variable occurs.
    pub fn restrict_vars(&self, target: &Vars) -> Result<Poly<K>, KernelError> {
        let map: Vec<Option<usize>> =
            self.vars.names().iter().map(|n| target.index_of(n)).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut m2 = vec![0; target.len()];
            for (i, e) in m.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => m2[j] = *e,
                    None => {
                        return Err(KernelError::Parse(format!(
                            "variable `{}` not present in target ring",
                            self.vars.name(i)
                        )))
                    }
                }
            }
            out.add_term(m2, c.clone());
        }
        Ok(out)
    }

    pub fn parse(vars: &Vars, input: &str) -> Result<Poly<K>, KernelError> {
        Parser::<K> {
            vars,
            chars: input.chars().collect(),
            pos: 0,
            input: input.to_string(),
            _k: std::marker::PhantomData,
        }
        .parse_all()
    }
}

struct Parser<'a, K: Field> {
    vars: &'a Vars,
    chars: Vec<char>,
    pos: usize,
    input: String,
    _k: std::marker::PhantomData<K>,
}

impl<'a, K: Field> Parser<'a, K> {
    fn err(&self, msg: &str) -> KernelError {
        KernelError::Parse(format!("{msg} at byte {} in `{}`", self.pos, self.input))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn parse_all(mut self) -> Result<Poly<K>, KernelError> {
        let p = self.parse_expr()?;
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn parse_expr(&mut self) -> Result<Poly<K>, KernelError> {
        let mut acc = self.parse_term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.bump();
                    acc = acc.add(&self.parse_term()?);
                }
                '-' => {
                    self.bump();
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Poly<K>, KernelError> {
        let mut sign = K::one();
        while self.peek() == Some('-') {
            self.bump();
            sign = -sign;
        }
        let mut acc = self.parse_factor()?;
        while self.peek() == Some('*') {
            self.bump();
            acc = acc.mul(&self.parse_factor()?);
        }
        Ok(acc.scale(&sign))
    }

    fn parse_factor(&mut self) -> Result<Poly<K>, KernelError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.parse_expr()?;
                if self.bump() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.parse_uint()?;
                let den = if self.peek() == Some('/') {
                    self.bump();
                    let d = self.parse_uint()?;
                    if d == 0 {
                        return Err(self.err("zero denominator"));
                    }
                    d
                } else {
                    1
                };
                Ok(Poly::constant(self.vars, K::from_ratio(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.parse_ident();
                let idx = self
                    .vars
                    .index_of(&name)
                    .ok_or_else(|| self.err(&format!("unknown variable `{name}`")))?;
                let exp = if self.peek() == Some('^') {
                    self.bump();
                    self.parse_uint()? as u32
                } else {
                    1
                };
                let mut m = vec![0; self.vars.len()];
                m[idx] = exp;
                Ok(Poly::monomial(self.vars, m, K::one()))
            }
            _ => Err(self.err("expected factor")),
        }
    }

    fn parse_uint(&mut self) -> Result<i64, KernelError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>()
            .map_err(|_| self.err("integer literal out of range"))
    }

    fn parse_ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    /// Canonical form: monomials in descending degrevlex order, coefficients
    /// as `num` or `num/den`, `*` between coefficient and variables.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(b, a));
        for (k, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const_mono = mono_total_degree(m) == 0;
            if mag != "1" || is_const_mono {
                write!(f, "{mag}")?;
                if !is_const_mono {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, e) in m.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.vars.name(i))?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn xy() -> Vars {
        Vars::new(vec!["x", "y"])
    }

    #[test]
    fn parse_and_print_roundtrip() {
        let v = xy();
        let p: Poly<Rat> = Poly::parse(&v, "x^2*y - 3/2*x + 1").unwrap();
        assert_eq!(p.num_terms(), 3);
        let printed = p.to_string();
        let q: Poly<Rat> = Poly::parse(&v, &printed).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_rejects_unknown_variable() {
        let v = xy();
        assert!(Poly::<Rat>::parse(&v, "x + z").is_err());
    }

    #[test]
    fn parse_rejects_implicit_multiplication() {
        let v = xy();
        assert!(Poly::<Rat>::parse(&v, "x y").is_err());
    }

    #[test]
    fn arithmetic_basics() {
        let v = xy();
        let x: Poly<Rat> = Poly::parse(&v, "x").unwrap();
        let y = Poly::parse(&v, "y").unwrap();
        let s = x.add(&y);
        let sq = s.mul(&s);
        let expect = Poly::parse(&v, "x^2 + 2*x*y + y^2").unwrap();
        assert_eq!(sq, expect);
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn degrevlex_orders_by_degree_then_revlex() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > x > y > 1
        let m = |a: u32, b: u32| vec![a, b];
        assert_eq!(o.cmp(&m(2, 0), &m(1, 1)), std::cmp::Ordering::Greater);
        assert_eq!(o.cmp(&m(1, 1), &m(0, 2)), std::cmp::Ordering::Greater);
        assert_eq!(o.cmp(&m(1, 0), &m(0, 1)), std::cmp::Ordering::Greater);
    }

    #[test]
    fn derivative_leibniz() {
        let v = xy();
        let f: Poly<Rat> = Poly::parse(&v, "x^2*y").unwrap();
        let g = Poly::parse(&v, "x + y^3").unwrap();
        let lhs = f.mul(&g).derivative(0);
        let rhs = f.derivative(0).mul(&g).add(&f.mul(&g.derivative(0)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_composes() {
        let v = xy();
        let target = Vars::new(vec!["t"]);
        let f: Poly<Rat> = Poly::parse(&v, "x*y + y^2").unwrap();
        let t = Poly::parse(&target, "t").unwrap();
        let t2 = Poly::parse(&target, "t^2").unwrap();
        let got = f.substitute(&[t, t2]);
        let expect = Poly::parse(&target, "t^3 + t^4").unwrap();
        assert_eq!(got, expect);
    }
}
