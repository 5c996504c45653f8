//! Dense univariate polynomials over the rationals, used for root finding
//! on one-variable specializations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Monomial, PolyError, Polynomial, Rational, Result, VarContext};

/// Coefficients from low to high degree, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    /// Reads `f` as a polynomial in `var`; other variables must be absent.
    pub fn from_polynomial(f: &Polynomial, var: &str) -> Result<Self> {
        let i = f.context().require(var)?;
        if let Some(j) = f.support().into_iter().find(|&j| j != i) {
            return Err(PolyError::UnknownVariable(format!(
                "{} (expected a polynomial in {var} only)",
                f.context().name(j)
            )));
        }
        let mut coeffs = vec![Rational::zero(); f.degree_at(i) as usize + 1];
        for (m, c) in f.terms() {
            coeffs[m.exponent(i) as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn to_polynomial(&self, ctx: &VarContext, var: &str) -> Result<Polynomial> {
        let i = ctx.require(var)?;
        let terms = self.0.iter().enumerate().map(|(k, c)| {
            let mut e = vec![0; ctx.len()];
            e[i] = k as u32;
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Polynomial::from_terms(ctx, terms))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => UniPoly(self.0.iter().map(|c| c / lc).collect()),
        }
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap();
        let mut rem = self.0.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (UniPoly(vec![]), self.clone());
        };
        let mut quot = vec![Rational::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let q = &rem[k + dd] / lc;
            if q.is_zero() {
                continue;
            }
            for (j, c) in d.0.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Rational roots with multiplicities, ascending, plus the cofactor
    /// left after dividing them out (constant when every root is rational).
    pub fn rational_roots(&self) -> (Vec<(Rational, u32)>, UniPoly) {
        let mut rest = self.clone();
        let mut roots = Vec::new();
        if rest.is_zero() {
            return (roots, rest);
        }
        for r in rest.candidate_roots() {
            let lin = UniPoly(vec![-r.clone(), Rational::one()]);
            let mut mult = 0;
            loop {
                let (q, rem) = rest.div_rem(&lin);
                if !rem.is_zero() || rest.degree() == Some(0) {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, rest)
    }

    /// Zero plus every `±a/b` with `a | constant term`, `b | leading`,
    /// after clearing denominators and stripping factors of `x`.
    fn candidate_roots(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero()];
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * &lcm).to_integer()).collect();
        let Some(first) = ints.iter().position(|c| !c.is_zero()) else {
            return out;
        };
        let lead = ints.last().unwrap();
        for a in divisors(&ints[first]) {
            for b in divisors(lead) {
                let r = Rational::new(a.clone(), b.clone());
                for cand in [r.clone(), -r] {
                    if !out.contains(&cand) {
                        out.push(cand);
                    }
                }
            }
        }
        out
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    // Trial division; the focal polynomials here have tiny coefficients.
    let limit = n.to_u64().unwrap_or(u64::MAX).min(1 << 20);
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= limit {
        let bd = BigInt::from(d);
        if (&n % &bd).is_zero() {
            out.push(bd.clone());
            let other = &n / &bd;
            if other != bd {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}
