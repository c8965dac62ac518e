//! Exact arithmetic in the cyclotomic field ℚ(ζ_ℓ).
//!
//! Elements are polynomials in the class `t` of the indeterminate, reduced
//! modulo the ℓ-th cyclotomic polynomial Φ_ℓ, with arbitrary-precision
//! rational coefficients. Φ_ℓ is irreducible over ℚ, so ℚ[t]/(Φ_ℓ) is a
//! field and every nonzero element is invertible. Equality is coefficient
//! equality of the reduced form. No floating point anywhere.

use num::rational::BigRational;
use num::{BigInt, One, Zero};
use num_integer::Integer;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u64),
}

// ---- Field context cache ----

struct FieldCtx {
    degree: usize,
    /// Monic Φ_ℓ, ascending coefficients, length degree + 1.
    phi: Vec<BigRational>,
    /// t^k reduced mod Φ_ℓ for k in 0..2*degree-1 (what products need).
    pow_table: Vec<Vec<BigRational>>,
}

fn ctx_cache() -> &'static Mutex<HashMap<u64, Arc<FieldCtx>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FieldCtx>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn ctx(ell: u64) -> Arc<FieldCtx> {
    let mut cache = ctx_cache().lock().unwrap();
    if let Some(c) = cache.get(&ell) {
        return c.clone();
    }
    let phi = cyclotomic_poly(ell);
    let degree = phi.len() - 1;
    let mut pow_table: Vec<Vec<BigRational>> = Vec::with_capacity(2 * degree.max(1));
    for k in 0..(2 * degree).max(1) {
        if k < degree {
            let mut v = vec![BigRational::zero(); degree];
            v[k] = BigRational::one();
            pow_table.push(v);
        } else {
            // t^k = t * t^(k-1) mod Φ, using the previous row.
            let prev = pow_table[k - 1].clone();
            let mut v = vec![BigRational::zero(); degree];
            // multiply by t: shift up, then reduce the overflow via
            // t^degree = -(phi[0] + phi[1] t + ... + phi[degree-1] t^(degree-1)).
            let overflow = prev[degree - 1].clone();
            for i in (1..degree).rev() {
                v[i] = prev[i - 1].clone();
            }
            v[0] = BigRational::zero();
            if !overflow.is_zero() {
                for i in 0..degree {
                    v[i] -= &overflow * &phi[i];
                }
            }
            pow_table.push(v);
        }
    }
    let c = Arc::new(FieldCtx {
        degree,
        phi,
        pow_table,
    });
    cache.insert(ell, c.clone());
    c
}

// ---- Cyclotomic polynomial ----

/// Coefficients of the ℓ-th cyclotomic polynomial Φ_ℓ, ascending degree,
/// computed by the recursive division Φ_ℓ(x) = (x^ℓ - 1) / ∏_{d|ℓ, d<ℓ} Φ_d(x).
pub fn cyclotomic_poly(ell: u64) -> Vec<BigRational> {
    assert!(ell >= 1, "ell must be >= 1");
    fn compute(ell: u64, memo: &mut HashMap<u64, Vec<BigRational>>) -> Vec<BigRational> {
        if let Some(p) = memo.get(&ell) {
            return p.clone();
        }
        // x^ell - 1
        let mut num = vec![BigRational::zero(); ell as usize + 1];
        num[0] = -BigRational::one();
        num[ell as usize] = BigRational::one();
        for d in 1..ell {
            if ell % d == 0 {
                let phi_d = compute(d, memo);
                num = poly_div_exact(&num, &phi_d);
            }
        }
        memo.insert(ell, num.clone());
        num
    }
    let mut memo = HashMap::new();
    compute(ell, &mut memo)
}

/// Exact division of polynomials with rational coefficients (remainder must
/// vanish; panics otherwise since the caller divides known factors).
fn poly_div_exact(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![BigRational::zero(); dn - dd + 1];
    let lead = den[dd].clone();
    for k in (0..=dn - dd).rev() {
        let c = &rem[k + dd] / &lead;
        quot[k] = c.clone();
        if c.is_zero() {
            continue;
        }
        for i in 0..=dd {
            rem[k + i] -= &c * &den[i];
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Euler totient, by trial-division factorization (ℓ is desk-scale).
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result
}

/// Multiplicative order of θ^k where θ is a primitive ℓ-th root of unity:
/// ℓ / gcd(k mod ℓ, ℓ), with gcd(0, ℓ) = ℓ.
pub fn order_of_power(ell: u64, k: i64) -> u64 {
    assert!(ell >= 1);
    let r = k.rem_euclid(ell as i64) as u64;
    ell / r.gcd(&ell)
}

// ---- CycElem ----

/// An element of ℚ(ζ_ℓ): `coeffs[i]` is the coefficient of t^i, always
/// reduced modulo Φ_ℓ (length φ(ℓ) exactly).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycElem {
    ell: u64,
    coeffs: Vec<BigRational>,
}

impl CycElem {
    pub fn zero(ell: u64) -> Self {
        let degree = ctx(ell).degree;
        CycElem {
            ell,
            coeffs: vec![BigRational::zero(); degree],
        }
    }

    pub fn one(ell: u64) -> Self {
        Self::from_integer(ell, 1)
    }

    pub fn from_integer(ell: u64, v: i64) -> Self {
        Self::from_rational(ell, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(ell: u64, v: BigRational) -> Self {
        let mut e = CycElem::zero(ell);
        e.coeffs[0] = v;
        e
    }

    /// θ^k, with θ the class of the indeterminate (a fixed primitive ℓ-th
    /// root of unity) and k taken mod ℓ.
    pub fn root_power(ell: u64, k: i64) -> Self {
        let c = ctx(ell);
        let e = k.rem_euclid(ell as i64) as usize;
        let mut acc = CycElem::one(ell);
        // Repeated multiplication by t stays within the pow_table range.
        for _ in 0..e {
            acc = acc.mul_by_t(&c);
        }
        acc
    }

    fn mul_by_t(&self, c: &FieldCtx) -> CycElem {
        let d = c.degree;
        let mut v = vec![BigRational::zero(); d];
        let overflow = self.coeffs[d - 1].clone();
        for i in (1..d).rev() {
            v[i] = self.coeffs[i - 1].clone();
        }
        if !overflow.is_zero() {
            for i in 0..d {
                v[i] -= &overflow * &c.phi[i];
            }
        }
        CycElem {
            ell: self.ell,
            coeffs: v,
        }
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &CycElem) {
        assert_eq!(self.ell, other.ell, "mixed cyclotomic fields");
    }

    pub fn add(&self, other: &CycElem) -> CycElem {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycElem {
            ell: self.ell,
            coeffs,
        }
    }

    pub fn sub(&self, other: &CycElem) -> CycElem {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycElem {
            ell: self.ell,
            coeffs,
        }
    }

    pub fn neg(&self) -> CycElem {
        CycElem {
            ell: self.ell,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &CycElem) -> CycElem {
        self.check(other);
        let c = ctx(self.ell);
        let d = c.degree;
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        let mut out = vec![BigRational::zero(); d];
        for (k, coeff) in raw.into_iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if k < d {
                out[k] += coeff;
            } else {
                for (i, p) in c.pow_table[k].iter().enumerate() {
                    if !p.is_zero() {
                        out[i] += &coeff * p;
                    }
                }
            }
        }
        CycElem {
            ell: self.ell,
            coeffs: out,
        }
    }

    pub fn scale(&self, r: &BigRational) -> CycElem {
        CycElem {
            ell: self.ell,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> CycElem {
        let mut base = self.clone();
        let mut acc = CycElem::one(self.ell);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via extended Euclid against Φ_ℓ in ℚ[x].
    pub fn inv(&self) -> Result<CycElem, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero(self.ell));
        }
        let c = ctx(self.ell);
        // Extended Euclid on (a, Φ); Φ irreducible so the gcd is a constant.
        let mut r0: Vec<BigRational> = c.phi.clone();
        let mut r1: Vec<BigRational> = trim(self.coeffs.clone());
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() && r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        assert!(!r1.is_empty(), "gcd(a, phi) nonconstant: phi not irreducible?");
        let lead = r1[0].clone();
        let be = poly_scale(&s1, &(BigRational::one() / lead));
        // Reduce the Bezout coefficient mod Φ to canonical length.
        let mut out = CycElem::zero(self.ell);
        for (k, coeff) in be.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if k < c.degree {
                out.coeffs[k] += coeff;
            } else {
                for (i, p) in c.pow_table[k].iter().enumerate() {
                    out.coeffs[i] += coeff * p;
                }
            }
        }
        Ok(out)
    }

    /// Discrete log against θ: Some(k) if self = θ^k, by direct comparison.
    pub fn dlog(&self) -> Option<u64> {
        for k in 0..self.ell {
            if *self == CycElem::root_power(self.ell, k as i64) {
                return Some(k);
            }
        }
        None
    }
}

// ---- Small dense polynomial helpers (ascending coefficients) ----

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_scale(a: &[BigRational], r: &BigRational) -> Vec<BigRational> {
    trim(a.iter().map(|c| c * r).collect())
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!den.is_empty());
    if num.len() < den.len() {
        return (vec![], num.to_vec());
    }
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut quot = vec![BigRational::zero(); num.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for i in 0..=dd {
            rem[k + i] -= &c * &den[i];
        }
    }
    (trim(quot), trim(rem))
}

// ---- Rendering ----

impl fmt::Display for CycElem {
    /// Textual form "a0 + a1*t + ..." with t the class of the indeterminate.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let s = if i == 0 {
                format!("{c}")
            } else if c.is_one() {
                var
            } else if (-c).is_one() {
                format!("-{var}")
            } else {
                format!("{c}*{var}")
            };
            parts.push(s);
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn cyclotomic_poly_small() {
        assert_eq!(cyclotomic_poly(1), vec![rat(-1), rat(1)]);
        assert_eq!(cyclotomic_poly(3), vec![rat(1), rat(1), rat(1)]);
        assert_eq!(cyclotomic_poly(12), vec![rat(1), rat(0), rat(-1), rat(0), rat(1)]);
    }

    #[test]
    fn cyclotomic_product_oracle() {
        // (x^12 - 1) = prod_{d | 12} Phi_d(x), as dense polynomials.
        let mut prod = vec![rat(1)];
        for d in [1u64, 2, 3, 4, 6, 12] {
            prod = poly_mul(&prod, &cyclotomic_poly(d));
        }
        let mut expect = vec![rat(0); 13];
        expect[0] = rat(-1);
        expect[12] = rat(1);
        assert_eq!(prod, expect);
    }

    #[test]
    fn degree_is_totient() {
        for ell in 1..=30u64 {
            assert_eq!(
                cyclotomic_poly(ell).len() as u64 - 1,
                euler_phi(ell),
                "deg Phi_{ell}"
            );
        }
    }

    #[test]
    fn root_power_examples() {
        for ell in 1..=9u64 {
            assert!(CycElem::root_power(ell, 0).is_one());
        }
        assert!(CycElem::root_power(3, 3).is_one());
        // theta + theta^2 = -1 and theta * theta^2 = 1 in Q(zeta_3).
        let t1 = CycElem::root_power(3, 1);
        let t2 = CycElem::root_power(3, 2);
        assert_eq!(t1.add(&t2), CycElem::from_integer(3, -1));
        assert!(t1.mul(&t2).is_one());
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_of_power(6, 2), 3);
        for ell in 1..=10 {
            assert_eq!(order_of_power(ell, 0), 1);
        }
        // Direct powering oracle for theta^6 in Q(zeta_9).
        let x = CycElem::root_power(9, 6);
        let mut acc = CycElem::one(9);
        let mut order = 0;
        for m in 1..=9u64 {
            acc = acc.mul(&x);
            if acc.is_one() {
                order = m;
                break;
            }
        }
        assert_eq!(order, 3);
        assert_eq!(order_of_power(9, 6), 3);
    }

    #[test]
    fn inverse_examples() {
        // a * inv(a) = 1 for a = 2 + theta in Q(zeta_5).
        let a = CycElem::from_integer(5, 2).add(&CycElem::root_power(5, 1));
        assert!(a.mul(&a.inv().unwrap()).is_one());
        // (r - s) * inv(r - s) = 1 for y=1, z=2, l=3.
        let r = CycElem::root_power(3, 1);
        let s = CycElem::root_power(3, 2);
        let d = r.sub(&s);
        assert!(d.mul(&d.inv().unwrap()).is_one());
        assert_eq!(CycElem::zero(4).inv(), Err(CycError::DivisionByZero(4)));
        let a = CycElem::from_integer(7, 3);
        assert_eq!(a.add(&CycElem::zero(7)), a);
    }

    #[test]
    fn powers_are_distinct_and_homomorphic() {
        for ell in 1..=12u64 {
            let powers: Vec<CycElem> =
                (0..ell).map(|k| CycElem::root_power(ell, k as i64)).collect();
            for a in 0..ell {
                for b in 0..ell {
                    let prod = powers[a as usize].mul(&powers[b as usize]);
                    assert_eq!(prod, powers[((a + b) % ell) as usize]);
                    if a != b {
                        assert_ne!(powers[a as usize], powers[b as usize]);
                    }
                }
            }
        }
    }

    #[test]
    fn dlog_finds_exponent() {
        for k in 0..7i64 {
            assert_eq!(CycElem::root_power(7, k).dlog(), Some(k as u64));
        }
        assert_eq!(CycElem::from_integer(5, 2).dlog(), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(CycElem::zero(5).to_string(), "0");
        let e = CycElem::from_integer(5, 2)
            .add(&CycElem::root_power(5, 1).scale(&rat(-1)));
        assert_eq!(e.to_string(), "2 - t");
    }

    proptest! {
        #[test]
        fn field_laws(ell in 1u64..=12, a in -6i64..=6, b in -6i64..=6, c in -6i64..=6) {
            // Elements a + b*theta + c*theta^2 exercise reduced and unreduced shapes.
            let t = CycElem::root_power(ell, 1);
            let t2 = CycElem::root_power(ell, 2);
            let x = CycElem::from_integer(ell, a)
                .add(&t.scale(&rat(b)))
                .add(&t2.scale(&rat(c)));
            let y = CycElem::from_integer(ell, c).add(&t.scale(&rat(a)));
            let z = CycElem::from_integer(ell, b).add(&t2.scale(&rat(c)));
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            if !x.is_zero() {
                prop_assert!(x.mul(&x.inv().unwrap()).is_one());
            }
        }
    }
}
