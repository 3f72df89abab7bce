//! Univariate rational polynomials, just enough for minimal-polynomial work:
//! exact arithmetic, gcd/lcm, and complete integer root extraction via Sturm
//! chains (no factoring of constant terms, no numerics).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{rat, Rational};

/// Coefficients stored low degree first, with no trailing zeros. The zero
/// polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly { coeffs: vec![rat(1)] }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// The monic linear polynomial `x - c`.
    pub fn x_minus(c: &Rational) -> Self {
        RatPoly {
            coeffs: vec![-c.clone(), rat(1)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().expect("leading of the zero polynomial")
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }

    pub fn monic(&self) -> RatPoly {
        assert!(!self.is_zero());
        let lead = self.leading().clone();
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    /// Exact polynomial division with remainder.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.degree() < d.degree() {
            return (RatPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat(0); self.degree() - d.degree() + 1];
        let dl = d.leading().clone();
        for k in (0..quot.len()).rev() {
            let top = rem[k + d.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / &dl;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        (RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let (mut p, mut q) = (a.clone(), b.clone());
        while !q.is_zero() {
            let (_, r) = p.div_rem(&q);
            p = q;
            q = r;
        }
        if p.is_zero() {
            p
        } else {
            p.monic()
        }
    }

    /// Monic least common multiple.
    pub fn lcm(a: &RatPoly, b: &RatPoly) -> RatPoly {
        if a.is_zero() || b.is_zero() {
            return RatPoly::zero();
        }
        let g = RatPoly::gcd(a, b);
        let (q, r) = a.div_rem(&g);
        debug_assert!(r.is_zero());
        q.mul(b).monic()
    }

    /// Square-free part `self / gcd(self, self')`, monic.
    pub fn square_free(&self) -> RatPoly {
        assert!(!self.is_zero());
        if self.degree() == 0 {
            return RatPoly::one();
        }
        let g = RatPoly::gcd(self, &self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }
}

impl std::fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c}*x^{i}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// All distinct integer roots of a nonzero polynomial, found by Sturm-chain
/// isolation and exact candidate testing. Complete: every integer root is
/// returned, irrational and non-integer rational roots are ignored.
pub(crate) fn integer_roots(p: &RatPoly) -> Vec<BigInt> {
    assert!(!p.is_zero(), "integer_roots of the zero polynomial");
    if p.degree() == 0 {
        return vec![];
    }
    let g = p.square_free();
    if g.degree() == 0 {
        return vec![];
    }
    let chain = sturm_chain(&g);
    let bound = cauchy_bound(&g);
    let lo = -&bound - rat(1);
    let hi = bound + rat(1);
    let mut roots = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let count = sign_variations(&chain, &a) - sign_variations(&chain, &b);
        if count == 0 {
            continue;
        }
        if &b - &a <= rat(1) {
            // Narrow enough: test every integer in (a, b] directly.
            let mut n = a.ceil().to_integer();
            if Rational::from_integer(n.clone()) <= a {
                n += 1;
            }
            while Rational::from_integer(n.clone()) <= b {
                if g.eval(&Rational::from_integer(n.clone())).is_zero() {
                    roots.push(n.clone());
                }
                n += 1;
            }
            continue;
        }
        let mid = (&a + &b) / rat(2);
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Sturm chain of a square-free polynomial.
fn sturm_chain(g: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![g.clone(), g.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(RatPoly::from_coeffs(
            r.coeffs().iter().map(|c| -c.clone()).collect(),
        ));
    }
}

/// Number of sign variations of the chain at `x`, zeros skipped.
fn sign_variations(chain: &[RatPoly], x: &Rational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Cauchy root bound `1 + max |c_i / lead|`.
fn cauchy_bound(p: &RatPoly) -> Rational {
    let lead = p.leading();
    let mut m = rat(0);
    for c in &p.coeffs()[..p.degree()] {
        let a = (c / lead).abs();
        if a > m {
            m = a;
        }
    }
    m + rat(1)
}

/// The monic polynomial with the given roots, each simple.
pub(crate) fn poly_with_roots(roots: &[Rational]) -> RatPoly {
    let mut p = RatPoly::one();
    for r in roots {
        p = p.mul(&RatPoly::x_minus(r));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::super::frac;
    use super::*;

    fn int_poly(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn roots_of_cubic() {
        // x(x-2)(x+3) = x^3 + x^2 - 6x
        let p = int_poly(&[0, -6, 1, 1]);
        let roots = integer_roots(&p);
        assert_eq!(roots, vec![BigInt::from(-3), BigInt::from(0), BigInt::from(2)]);
    }

    #[test]
    fn no_integer_roots() {
        // x^2 + 1
        assert!(integer_roots(&int_poly(&[1, 0, 1])).is_empty());
        // x^2 - 2
        assert!(integer_roots(&int_poly(&[-2, 0, 1])).is_empty());
        // 2x - 1 has root 1/2
        assert!(integer_roots(&int_poly(&[-1, 2])).is_empty());
    }

    #[test]
    fn repeated_roots_found_once() {
        // (x-1)^2 (x+4)
        let p = RatPoly::x_minus(&rat(1))
            .mul(&RatPoly::x_minus(&rat(1)))
            .mul(&RatPoly::x_minus(&rat(-4)));
        assert_eq!(integer_roots(&p), vec![BigInt::from(-4), BigInt::from(1)]);
    }

    #[test]
    fn large_root_isolated() {
        let p = RatPoly::x_minus(&rat(100003)).mul(&RatPoly::x_minus(&rat(-7)));
        assert_eq!(
            integer_roots(&p),
            vec![BigInt::from(-7), BigInt::from(100003)]
        );
    }

    #[test]
    fn gcd_and_lcm() {
        let a = RatPoly::x_minus(&rat(1)).mul(&RatPoly::x_minus(&rat(2)));
        let b = RatPoly::x_minus(&rat(2)).mul(&RatPoly::x_minus(&rat(3)));
        assert_eq!(RatPoly::gcd(&a, &b), RatPoly::x_minus(&rat(2)));
        let l = RatPoly::lcm(&a, &b);
        assert_eq!(l.degree(), 3);
        assert!(l.eval(&rat(1)).is_zero());
        assert!(l.eval(&rat(3)).is_zero());
    }

    #[test]
    fn eval_with_fractions() {
        let p = RatPoly::from_coeffs(vec![frac(1, 2), rat(0), rat(1)]);
        assert_eq!(p.eval(&frac(1, 2)), frac(3, 4));
    }
}
