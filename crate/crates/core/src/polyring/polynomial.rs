use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, Rational, Result, VarContext};

/// Polynomial with rational coefficients in a fixed [`VarContext`].
///
/// The term map never holds a zero coefficient, so two polynomials in the
/// same context are equal exactly when they are equal as polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: VarContext,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ctx: &VarContext) -> Self {
        Self {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &VarContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &VarContext, c: Rational) -> Self {
        Self::from_terms(ctx, [(Monomial::one(ctx.len()), c)])
    }

    pub fn var(ctx: &VarContext, name: &str) -> Result<Self> {
        let i = ctx.require(name)?;
        Ok(Self::var_at(ctx, i))
    }

    pub fn var_at(ctx: &VarContext, index: usize) -> Self {
        Self::from_terms(ctx, [(Monomial::var(ctx.len(), index), Rational::one())])
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms<I>(ctx: &VarContext, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.exponents().len(), ctx.len());
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self {
            ctx: ctx.clone(),
            terms: map,
        }
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn degree_in(&self, var: &str) -> Result<u32> {
        let i = self.ctx.require(var)?;
        Ok(self.degree_at(i))
    }

    pub(crate) fn degree_at(&self, index: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(index))
            .max()
            .unwrap_or(0)
    }

    /// Indices of variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ctx.len())
            .filter(|&i| self.terms.keys().any(|m| m.exponent(i) > 0))
            .collect()
    }

    /// Coefficients with respect to `var`: entry `k` multiplies `var^k`.
    /// The coefficients stay in the same context and are free of `var`.
    pub fn coefficients_in(&self, var: &str) -> Result<Vec<Polynomial>> {
        let i = self.ctx.require(var)?;
        let deg = self.degree_at(i) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exponent(i) as usize;
            buckets[k].push((m.with_exponent(i, 0), c.clone()));
        }
        Ok(buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(&self.ctx, b))
            .collect())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ctx.check_same(&other.ctx)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            *terms.entry(m.clone()).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ctx.check_same(&other.ctx)?;
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *terms.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ctx);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        let i = self.ctx.require(var)?;
        Ok(self.derivative_at(i))
    }

    pub(crate) fn derivative_at(&self, index: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(index);
            (e > 0).then(|| {
                (
                    m.with_exponent(index, e - 1),
                    c * Rational::from_integer(e.into()),
                )
            })
        });
        Polynomial::from_terms(&self.ctx, terms)
    }

    /// Ring homomorphism sending each variable of `self` to its image.
    pub fn substitute(&self, subst: &Substitution) -> Result<Polynomial> {
        let mut images: Vec<Option<&Polynomial>> = vec![None; self.ctx.len()];
        for (name, image) in &subst.images {
            if let Some(i) = self.ctx.index_of(name) {
                images[i] = Some(image);
            }
        }
        for i in self.support() {
            if images[i].is_none() {
                return Err(PolyError::MissingAssignment(self.ctx.name(i).to_string()));
            }
        }
        let target = &subst.target;
        // Powers are cached per variable; the cubics here need at most a few.
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].expect("checked above").pow(e));
                term = &term * p;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitutes values for the variables named in `values`, keeping the
    /// others. The result stays in the same context.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> Result<Polynomial> {
        let mut subst = Substitution::identity(&self.ctx);
        for (name, v) in values {
            self.ctx.require(name)?;
            subst = subst.with(name, Polynomial::constant(&self.ctx, v.clone()));
        }
        self.substitute(&subst)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ctx.len() {
            return Err(PolyError::LengthMismatch {
                expected: self.ctx.len(),
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Multiplies each term by `var^(degree - term degree)`.
    pub fn homogenize(&self, var: &str, degree: u32) -> Result<Polynomial> {
        let i = self.ctx.require(var)?;
        let d = self.total_degree();
        if degree < d {
            return Err(PolyError::DegreeTooLow {
                target: degree,
                degree: d,
            });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let lift = degree - m.degree();
            (m.with_exponent(i, m.exponent(i) + lift), c.clone())
        });
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    /// Sets `var` to 1.
    pub fn dehomogenize(&self, var: &str) -> Result<Polynomial> {
        let i = self.ctx.require(var)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_exponent(i, 0), c.clone()));
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    /// Returns `c` with `self = c * other`, when such a nonzero `c` exists.
    /// Two zero polynomials are related by `c = 1`.
    pub fn equal_up_to_scalar(&self, other: &Polynomial) -> Option<Rational> {
        if self.ctx != other.ctx || self.terms.len() != other.terms.len() {
            return None;
        }
        let Some(((m1, c1), (m2, c2))) = self.terms.iter().next().zip(other.terms.iter().next())
        else {
            return Some(Rational::one());
        };
        if m1 != m2 {
            return None;
        }
        let c = c1 / c2;
        (other.scale(&c) == *self).then_some(c)
    }

    /// Moves the polynomial into another context by matching variable
    /// names. Fails when a variable in use is absent from `target`.
    pub fn reembed(&self, target: &VarContext) -> Result<Polynomial> {
        let mut subst = Substitution::new(target);
        for i in self.support() {
            let name = self.ctx.name(i);
            subst = subst.with(name, Polynomial::var(target, name)?);
        }
        self.substitute(&subst)
    }

    /// Divides out the rational content and the largest monomial factor,
    /// leaving integer coefficients with gcd 1 and a positive leading term.
    pub fn primitive_part(&self) -> Polynomial {
        let Some((_, lead)) = self.leading_term() else {
            return self.clone();
        };
        let (num_gcd, den_lcm) = self
            .terms
            .values()
            .fold((BigInt::zero(), BigInt::one()), |(g, l), c| {
                (g.gcd(c.numer()), l.lcm(c.denom()))
            });
        let mut content = Rational::new(num_gcd, den_lcm);
        if lead.is_negative() {
            content = -content;
        }
        let n = self.ctx.len();
        let floor: Vec<u32> = (0..n)
            .map(|i| self.terms.keys().map(|m| m.exponent(i)).min().unwrap_or(0))
            .collect();
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m
                .exponents()
                .iter()
                .zip(&floor)
                .map(|(a, b)| a - b)
                .collect();
            (Monomial::from_exponents(e), c / &content)
        });
        Polynomial::from_terms(&self.ctx, terms)
    }

    /// The leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }
}

/// Images for a ring homomorphism into `target`.
#[derive(Clone, Debug)]
pub struct Substitution {
    target: VarContext,
    images: BTreeMap<String, Polynomial>,
}

impl Substitution {
    pub fn new(target: &VarContext) -> Self {
        Self {
            target: target.clone(),
            images: BTreeMap::new(),
        }
    }

    /// Sends every variable of `ctx` to itself.
    pub fn identity(ctx: &VarContext) -> Self {
        let mut s = Self::new(ctx);
        for (i, name) in ctx.names().iter().enumerate() {
            s.images.insert(name.clone(), Polynomial::var_at(ctx, i));
        }
        s
    }

    /// Panics when `image` is not in the target context.
    pub fn with(mut self, var: &str, image: Polynomial) -> Self {
        assert_eq!(
            image.ctx, self.target,
            "substitution image outside target context"
        );
        self.images.insert(var.to_string(), image);
        self
    }

    pub fn try_with(self, var: &str, image: Polynomial) -> Result<Self> {
        image.ctx.check_same(&self.target)?;
        Ok(self.with(var, image))
    }

    pub fn target(&self) -> &VarContext {
        &self.target
    }

    pub fn images(&self) -> impl Iterator<Item = (&str, &Polynomial)> {
        self.images.iter().map(|(k, v)| (k.as_str(), v))
    }
}

fn write_rational_abs(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    let c = c.abs();
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending graded-lex order, e.g. `z0^2*z3 - z0*z2*z4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = c.abs().is_one();
            let mut first = true;
            // A leading `-z^2` would read back as `(-z)^2`, so keep the 1.
            let leading_power = k == 0
                && neg
                && m.exponents()
                    .iter()
                    .find(|&&e| e > 0)
                    .is_some_and(|&e| e > 1);
            if !unit || m.is_one() || leading_power {
                write_rational_abs(f, c)?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.ctx.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.ctx, self)
    }
}

// Operator forms panic on context mismatch; the `checked_*` methods report it.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{rat, ratio};

    fn z() -> VarContext {
        VarContext::projective()
    }

    fn v(ctx: &VarContext, n: &str) -> Polynomial {
        Polynomial::var(ctx, n).unwrap()
    }

    fn bourgain(ctx: &VarContext) -> Polynomial {
        let [z0, z1, z2, z3, z4] = ["z0", "z1", "z2", "z3", "z4"].map(|n| v(ctx, n));
        &z1 * &z4.pow(2) + &z0 * &z2 * &z4 - &z0.pow(2) * &z3
    }

    #[test]
    fn additive_inverse_cancels() {
        let ctx = z();
        let z1 = v(&ctx, "z1");
        let sum = z1.checked_add(&-&z1).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn sum_of_parts_is_cubic() {
        let ctx = z();
        let [z0, z1, z2, z3, z4] = ["z0", "z1", "z2", "z3", "z4"].map(|n| v(&ctx, n));
        let a = &z1 * &z4 * &z4 + &z0 * &z2 * &z4;
        let b = -(&z0 * &z0 * &z3);
        let f = a.checked_add(&b).unwrap();
        assert_eq!(f.to_string(), "-1*z0^2*z3 + z0*z2*z4 + z1*z4^2");
        assert_eq!(f, bourgain(&ctx));
    }

    #[test]
    fn display_orders_terms_by_descending_grlex() {
        let ctx = z();
        assert_eq!(
            bourgain(&ctx).to_string(),
            "-1*z0^2*z3 + z0*z2*z4 + z1*z4^2"
        );
        let p = Polynomial::constant(&ctx, ratio(-3, 2));
        assert_eq!(p.to_string(), "-3/2");
        let q = v(&ctx, "z1").scale(&ratio(1, 2)) - Polynomial::one(&ctx);
        assert_eq!(q.to_string(), "1/2*z1 - 1");
    }

    #[test]
    fn context_mismatch_names_both_contexts() {
        let a = v(&z(), "z1");
        let other = VarContext::new(&["p", "u", "v"]).unwrap();
        let b = v(&other, "p");
        let err = a.checked_add(&b).unwrap_err();
        let msg = err.to_string();
        assert!(
            msg.contains("z0,z1,z2,z3,z4") && msg.contains("p,u,v"),
            "{msg}"
        );
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn products() {
        let ctx = z();
        let f = bourgain(&ctx);
        assert_eq!(&f * &Polynomial::one(&ctx), f);
        let z4 = v(&ctx, "z4");
        assert_eq!(&z4 * &z4, z4.pow(2));
        let xs = VarContext::new(&["x4", "u", "v"]).unwrap();
        let prod = &(v(&xs, "u").pow(2) + v(&xs, "v").pow(2)) * &v(&xs, "x4");
        assert_eq!(prod.to_string(), "x4*u^2 + x4*v^2");
    }

    #[test]
    fn derivatives_of_the_cubic() {
        let ctx = z();
        let f = bourgain(&ctx);
        let d0 = f.partial_derivative("z0").unwrap();
        assert_eq!(
            d0,
            &v(&ctx, "z2") * &v(&ctx, "z4") - (&v(&ctx, "z0") * &v(&ctx, "z3")).scale(&rat(2))
        );
        assert_eq!(f.partial_derivative("z3").unwrap(), -v(&ctx, "z0").pow(2));
        assert!(Polynomial::constant(&ctx, rat(7))
            .partial_derivative("z1")
            .unwrap()
            .is_zero());
        assert_eq!(
            f.partial_derivative("w").unwrap_err(),
            PolyError::UnknownVariable("w".into())
        );
    }

    #[test]
    fn evaluation() {
        let ctx = z();
        let f = bourgain(&ctx);
        let pt = [1, 1, 0, 1, 1].map(rat);
        assert_eq!(f.evaluate(&pt).unwrap(), rat(0));
        for (a, b, c) in [(1, 2, 3), (-5, 7, 11), (0, 0, 9)] {
            let pt = [0, a, b, c, 0].map(rat);
            assert_eq!(f.evaluate(&pt).unwrap(), rat(0));
        }
        let pt = [3, 0, 0, 0, 0].map(rat);
        assert_eq!(v(&ctx, "z0").evaluate(&pt).unwrap(), rat(3));
        assert!(matches!(
            f.evaluate(&[rat(1)]),
            Err(PolyError::LengthMismatch {
                expected: 5,
                got: 1
            })
        ));
    }

    #[test]
    fn homogenize_affine_cubic() {
        let ctx = z();
        // x_i renamed to z_i; the affine form lives in the same context.
        let [_, z1, z2, z3, z4] = ["z0", "z1", "z2", "z3", "z4"].map(|n| v(&ctx, n));
        let affine = &z1 * &z4.pow(2) + &z2 * &z4 - z3;
        let h = affine.homogenize("z0", 3).unwrap();
        assert_eq!(h, bourgain(&ctx));
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize("z0").unwrap(), affine);
        assert_eq!(
            Polynomial::one(&ctx).homogenize("z0", 2).unwrap(),
            v(&ctx, "z0").pow(2)
        );
        assert_eq!(
            affine.homogenize("z0", 2).unwrap_err(),
            PolyError::DegreeTooLow {
                target: 2,
                degree: 3
            }
        );
    }

    #[test]
    fn dehomogenize_examples() {
        let ctx = z();
        let z0sq = v(&ctx, "z0").pow(2);
        assert_eq!(z0sq.dehomogenize("z0").unwrap(), Polynomial::one(&ctx));
        let pc = VarContext::new(&["p", "z1", "z2", "z3"]).unwrap();
        let fam = &v(&pc, "p").pow(2) * &v(&pc, "z1") + &v(&pc, "p") * &v(&pc, "z2") - v(&pc, "z3");
        let expected = &v(&pc, "p").pow(2) * &v(&pc, "z1") + &v(&pc, "p") * &v(&pc, "z2")
            - Polynomial::one(&pc);
        assert_eq!(fam.dehomogenize("z3").unwrap(), expected);
    }

    #[test]
    fn substitution_requires_every_used_variable() {
        let ctx = z();
        let f = bourgain(&ctx);
        let s = Substitution::new(&ctx).with("z1", v(&ctx, "z1"));
        assert_eq!(
            f.substitute(&s).unwrap_err(),
            PolyError::MissingAssignment("z0".into())
        );
        let z1 = v(&ctx, "z1");
        assert_eq!(z1.substitute(&Substitution::identity(&ctx)).unwrap(), z1);
    }

    #[test]
    fn plane_family_lies_on_the_cubic() {
        let ctx = z();
        let pc = VarContext::new(&["alpha", "beta", "gamma", "p"]).unwrap();
        let [a, b, g, p] = ["alpha", "beta", "gamma", "p"].map(|n| v(&pc, n));
        let two = Polynomial::constant(&pc, rat(2));
        let s = Substitution::new(&pc)
            .with("z0", a.clone())
            .with("z1", b.clone())
            .with("z2", &g - &(&two * &p * &b))
            .with("z3", &p * &(&g - &(&p * &b)))
            .with("z4", &p * &a);
        assert!(bourgain(&ctx).substitute(&s).unwrap().is_zero());
    }

    #[test]
    fn scalar_multiples() {
        let ctx = z();
        let z1 = v(&ctx, "z1");
        assert_eq!(z1.scale(&rat(2)).equal_up_to_scalar(&z1), Some(rat(2)));
        let f = bourgain(&ctx);
        assert_eq!(f.scale(&rat(-3)).equal_up_to_scalar(&f), Some(rat(-3)));
        let conic = v(&ctx, "z2").pow(2) + (&v(&ctx, "z1") * &v(&ctx, "z3")).scale(&rat(4));
        assert_eq!(f.equal_up_to_scalar(&conic), None);
        let zero = Polynomial::zero(&ctx);
        assert_eq!(zero.equal_up_to_scalar(&zero), Some(rat(1)));
        assert_eq!(zero.equal_up_to_scalar(&f), None);
    }

    #[test]
    fn primitive_part_strips_content() {
        let ctx = z();
        let [z1, z2, z3] = ["z1", "z2", "z3"].map(|n| v(&ctx, n));
        let conic = &z2 * &z2 + (&z1 * &z3).scale(&rat(4));
        let messy = (&z1 * &conic).scale(&ratio(-3, 7));
        assert_eq!(messy.primitive_part(), conic);
        assert!(Polynomial::zero(&ctx).primitive_part().is_zero());
    }

    #[test]
    fn euler_identity_on_cubic() {
        let ctx = z();
        let f = bourgain(&ctx);
        let mut sum = Polynomial::zero(&ctx);
        for i in 0..5 {
            sum = sum + &Polynomial::var_at(&ctx, i) * &f.derivative_at(i);
        }
        assert_eq!(sum, f.scale(&rat(3)));
    }
}
