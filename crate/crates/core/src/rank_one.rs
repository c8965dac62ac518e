//! Structural layer for rank-one data 𝒟 = (G, χ, a): the central subgroup
//! K of the double's group-likes, its annihilator K^⊥, one-dimensional and
//! quotient-type module parameters, the factorization criterion, coset
//! exponents, dimension formulas, and predicted tensor-product
//! decompositions on both the rank-one and Borel sides.
//!
//! G is presented as ℤ_{m_1} × ... × ℤ_{m_r}; characters of G are exponent
//! vectors against the dual generators, so both G and its character group Γ
//! live on the same presentation. All root-of-unity values are realized in
//! ℚ(ζ_L), L the exponent of G.

use crate::cyclotomic::CycElem;
use crate::zmod::Residue;
use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankOneError {
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("degenerate data: chi(a) = 1 makes x primitive of order < 2")]
    Degenerate,
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),
    #[error("state space too large: {states} > cap {cap}")]
    TooLarge { states: u128, cap: u128 },
    #[error("no r >= 0 solves beta(w') = theta^(2(c-r)) (ell even, odd residue)")]
    NoSuchR,
    #[error("tensor decomposition is unspecified for even ell")]
    UnspecifiedEvenEll,
}

/// Rank-one datum (G, χ, a) with its derived orders ℓ = |χ(a)|, N = |a|,
/// M = |χ|. Construction rejects ℓ < 2 (x would be primitive and the
/// algebra degenerates); ℓ | N and ℓ | M hold automatically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneData {
    orders: Vec<u64>,
    a_exps: Vec<u64>,
    chi_exps: Vec<u64>,
    field_ell: u64,
    ell: u64,
    order_a: u64,
    order_chi: u64,
}

impl RankOneData {
    pub fn new(orders: Vec<u64>, a_exps: Vec<u64>, chi_exps: Vec<u64>) -> Result<Self, RankOneError> {
        if orders.is_empty() {
            return Err(RankOneError::InvalidData("empty group presentation".into()));
        }
        if orders.iter().any(|&m| m == 0) {
            return Err(RankOneError::InvalidData("cyclic order 0".into()));
        }
        if a_exps.len() != orders.len() || chi_exps.len() != orders.len() {
            return Err(RankOneError::InvalidData(
                "exponent vector length must match the presentation".into(),
            ));
        }
        let a_exps: Vec<u64> = a_exps.iter().zip(&orders).map(|(&e, &m)| e % m).collect();
        let chi_exps: Vec<u64> = chi_exps.iter().zip(&orders).map(|(&e, &m)| e % m).collect();
        let field_ell = orders.iter().fold(1u64, |l, &m| l.lcm(&m));
        let order_a = orders
            .iter()
            .zip(&a_exps)
            .map(|(&m, &e)| m / e.gcd(&m))
            .fold(1u64, |l, o| l.lcm(&o));
        let order_chi = orders
            .iter()
            .zip(&chi_exps)
            .map(|(&m, &e)| m / e.gcd(&m))
            .fold(1u64, |l, o| l.lcm(&o));
        let e0 = chi_a_exponent(&orders, &chi_exps, &a_exps, field_ell);
        let ell = field_ell / e0.gcd(&field_ell);
        if ell < 2 {
            return Err(RankOneError::Degenerate);
        }
        debug_assert_eq!(order_a % ell, 0, "ell divides N");
        debug_assert_eq!(order_chi % ell, 0, "ell divides M");
        Ok(RankOneData {
            orders,
            a_exps,
            chi_exps,
            field_ell,
            ell,
            order_a,
            order_chi,
        })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn a_exps(&self) -> &[u64] {
        &self.a_exps
    }

    pub fn chi_exps(&self) -> &[u64] {
        &self.chi_exps
    }

    /// L: the exponent of G, so all character values live in ℚ(ζ_L).
    pub fn field_ell(&self) -> u64 {
        self.field_ell
    }

    /// ℓ = |χ(a)|.
    pub fn ell(&self) -> u64 {
        self.ell
    }

    /// N = |a|.
    pub fn order_a(&self) -> u64 {
        self.order_a
    }

    /// M = |χ|.
    pub fn order_chi(&self) -> u64 {
        self.order_chi
    }

    pub fn group_size(&self) -> u64 {
        self.orders.iter().product()
    }

    /// lcm(N, M) = |aχ⁻¹| = |im ev|, the modulus of [`ev_exponent`].
    pub fn ev_order(&self) -> u64 {
        self.order_a.lcm(&self.order_chi)
    }

    /// ζ_L-exponent of χ(a).
    pub fn chi_a_exponent(&self) -> u64 {
        chi_a_exponent(&self.orders, &self.chi_exps, &self.a_exps, self.field_ell)
    }
}

/// ζ_L-exponent of χ(g) for exponent vectors against the presentation.
fn chi_a_exponent(orders: &[u64], chi: &[u64], g: &[u64], l: u64) -> u64 {
    let mut acc: u128 = 0;
    for ((&m, &c), &e) in orders.iter().zip(chi).zip(g) {
        acc += (l / m) as u128 * c as u128 % l as u128 * e as u128 % l as u128;
    }
    (acc % l as u128) as u64
}

/// A group-like of the double: an element gγ of G × Γ, both components as
/// exponent vectors over the shared presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DoubleGroupLike {
    pub g_exps: Vec<u64>,
    pub gamma_exps: Vec<u64>,
}

impl DoubleGroupLike {
    pub fn new(data: &RankOneData, g_exps: Vec<u64>, gamma_exps: Vec<u64>) -> Self {
        let canon = |v: Vec<u64>| -> Vec<u64> {
            v.iter().zip(data.orders()).map(|(&e, &m)| e % m).collect()
        };
        DoubleGroupLike {
            g_exps: canon(g_exps),
            gamma_exps: canon(gamma_exps),
        }
    }

    pub fn identity(data: &RankOneData) -> Self {
        DoubleGroupLike {
            g_exps: vec![0; data.orders().len()],
            gamma_exps: vec![0; data.orders().len()],
        }
    }

    pub fn mul(&self, other: &DoubleGroupLike, data: &RankOneData) -> DoubleGroupLike {
        let add = |a: &[u64], b: &[u64]| -> Vec<u64> {
            a.iter()
                .zip(b)
                .zip(data.orders())
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect()
        };
        DoubleGroupLike {
            g_exps: add(&self.g_exps, &other.g_exps),
            gamma_exps: add(&self.gamma_exps, &other.gamma_exps),
        }
    }

    pub fn pow(&self, k: i64, data: &RankOneData) -> DoubleGroupLike {
        let scale = |a: &[u64]| -> Vec<u64> {
            a.iter()
                .zip(data.orders())
                .map(|(&x, &m)| ((x as i128 * k as i128).rem_euclid(m as i128)) as u64)
                .collect()
        };
        DoubleGroupLike {
            g_exps: scale(&self.g_exps),
            gamma_exps: scale(&self.gamma_exps),
        }
    }

    pub fn inv(&self, data: &RankOneData) -> DoubleGroupLike {
        self.pow(-1, data)
    }

    pub fn is_identity(&self) -> bool {
        self.g_exps.iter().all(|&e| e == 0) && self.gamma_exps.iter().all(|&e| e == 0)
    }
}

/// All of G × Γ in lexicographic order.
pub fn double_grouplikes(data: &RankOneData) -> Vec<DoubleGroupLike> {
    let grid = crate::hopf::mixed_radix_grid(data.orders());
    let mut out = Vec::with_capacity(grid.len() * grid.len());
    for g in &grid {
        for gamma in &grid {
            out.push(DoubleGroupLike {
                g_exps: g.clone(),
                gamma_exps: gamma.clone(),
            });
        }
    }
    out
}

/// The exponent of ev(gγ) = χ⁻¹(g)γ(a), as a residue mod |im ev| = lcm(N, M).
///
/// The value is computed exactly in ℚ(ζ_L) as a product of two character
/// values and then discrete-logged against the canonical primitive
/// lcm(N, M)-th root ζ_L^(L / lcm(N, M)).
pub fn ev_exponent(data: &RankOneData, p: &DoubleGroupLike) -> Residue {
    let l = data.field_ell();
    let lp = data.ev_order();
    let chi_g = chi_a_exponent(data.orders(), data.chi_exps(), &p.g_exps, l);
    let gamma_a = chi_a_exponent(data.orders(), &p.gamma_exps, data.a_exps(), l);
    let value = CycElem::root_power(l, gamma_a as i64 - chi_g as i64);
    let e = value.dlog().expect("character value is a power of zeta_L");
    // value lies in the subgroup of order lcm(N, M); rewrite in that base.
    let step = l / lp;
    debug_assert_eq!(e % step, 0, "ev image has order dividing lcm(N, M)");
    Residue::new((e / step) as i128, lp)
}

/// Default cap for exhaustive double-group sweeps.
pub const DEFAULT_GROUP_CAP: u128 = 1_000_000;

/// K = ker(ev) = the central group-likes of the double, by enumeration.
pub fn k_subgroup(data: &RankOneData, cap: Option<u128>) -> Result<Vec<DoubleGroupLike>, RankOneError> {
    let cap = cap.unwrap_or(DEFAULT_GROUP_CAP);
    let states = (data.group_size() as u128).pow(2);
    if states > cap {
        return Err(RankOneError::TooLarge { states, cap });
    }
    Ok(double_grouplikes(data)
        .into_iter()
        .filter(|p| ev_exponent(data, p).is_zero())
        .collect())
}

/// K^⊥ = ⟨aχ⁻¹⟩ inside G × Γ, by enumerating powers of the generator.
pub fn k_perp(data: &RankOneData) -> Vec<DoubleGroupLike> {
    let gen = DoubleGroupLike::new(
        data,
        data.a_exps().to_vec(),
        data.chi_exps().iter().zip(data.orders()).map(|(&e, &m)| (m - e % m) % m).collect(),
    );
    let mut out = vec![DoubleGroupLike::identity(data)];
    let mut cur = gen.clone();
    while !cur.is_identity() {
        out.push(cur.clone());
        cur = cur.mul(&gen, data);
    }
    out
}

/// Whether H ·_β g descends to the quotient by the central group-likes:
/// membership of gβ in K^⊥.
pub fn is_quotient_param(data: &RankOneData, beta_exps: &[u64], g_exps: &[u64]) -> bool {
    let p = DoubleGroupLike::new(data, g_exps.to_vec(), beta_exps.to_vec());
    k_perp(data).contains(&p)
}

/// Whether α = (β_α, g_α) indexes a one-dimensional module: α ∈ K.
pub fn is_one_dim_param(data: &RankOneData, alpha: &DoubleGroupLike) -> bool {
    ev_exponent(data, alpha).is_zero()
}

/// The factorization criterion: ℓ odd and ℓ = M = N.
pub fn factorization_bijective(data: &RankOneData) -> bool {
    data.ell() % 2 == 1 && data.ell() == data.order_a() && data.ell() == data.order_chi()
}

fn require_factorization(data: &RankOneData) -> Result<(), RankOneError> {
    if factorization_bijective(data) {
        Ok(())
    } else {
        Err(RankOneError::PreconditionFailed("ell odd and ell = M = N"))
    }
}

fn inv_mod(a: u64, m: u64) -> u64 {
    Residue::new(a as i128, m).inv().expect("unit residue").lift()
}

/// The unique c mod ℓ with p · (a⁻¹χ)^{−c} ∈ K, i.e. the exponent of the
/// coset of p in (G × Γ)/K against the representative system (a⁻¹χ)^c.
/// Solves 2c ≡ (exponent of ev(p) in base χ(a)) mod ℓ via 2⁻¹ (ℓ odd).
pub fn coset_exponent(data: &RankOneData, p: &DoubleGroupLike) -> Result<u64, RankOneError> {
    require_factorization(data)?;
    let ell = data.ell();
    // ev(p) in base zeta_ell; then in base chi(a) = zeta_ell^k, k a unit.
    let e = ev_exponent(data, p);
    debug_assert_eq!(e.modulus(), ell, "lcm(N, M) = ell under the factorization hypothesis");
    let k = data.chi_a_exponent() / (data.field_ell() / ell);
    let x = (inv_mod(k, ell) as u128 * e.lift() as u128 % ell as u128) as u64;
    let c = inv_mod(2, ell) as u128 * x as u128 % ell as u128;
    Ok(c as u64)
}

/// r_c = 2c mod ℓ; the corresponding simple has dimension r_c + 1.
pub fn r_of_c(ell: u64, c: u64) -> u64 {
    2 * (c % ell) % ell
}

/// Dimension of the simple module for parameter (β, g): r_{c} + 1 with c the
/// coset exponent of gβ.
pub fn dim_simple(data: &RankOneData, beta_exps: &[u64], g_exps: &[u64]) -> Result<u64, RankOneError> {
    let p = DoubleGroupLike::new(data, g_exps.to_vec(), beta_exps.to_vec());
    Ok(r_of_c(data.ell(), coset_exponent(data, &p)?) + 1)
}

// ---- exponent-vector character arithmetic ----

fn exps_mul(a: &[u64], b: &[u64], orders: &[u64]) -> Vec<u64> {
    a.iter()
        .zip(b)
        .zip(orders)
        .map(|((&x, &y), &m)| (x + y) % m)
        .collect()
}

fn exps_pow(a: &[u64], k: i64, orders: &[u64]) -> Vec<u64> {
    a.iter()
        .zip(orders)
        .map(|(&x, &m)| ((x as i128 * k as i128).rem_euclid(m as i128)) as u64)
        .collect()
}

/// Factorization of a simple parameter: (β, g) = quotient part (χ^c, a^{−c})
/// tensor a one-dimensional part in K.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleFactorization {
    pub c: u64,
    pub quotient_beta_exps: Vec<u64>,
    pub quotient_g_exps: Vec<u64>,
    pub k_part: DoubleGroupLike,
}

pub fn factor_simple(
    data: &RankOneData,
    beta_exps: &[u64],
    g_exps: &[u64],
) -> Result<SimpleFactorization, RankOneError> {
    let p = DoubleGroupLike::new(data, g_exps.to_vec(), beta_exps.to_vec());
    let c = coset_exponent(data, &p)?;
    // K-part = gβ · (a⁻¹χ)^{−c} = (g a^c, β χ^{−c}).
    let k_part = DoubleGroupLike::new(
        data,
        exps_mul(&p.g_exps, &exps_pow(data.a_exps(), c as i64, data.orders()), data.orders()),
        exps_mul(
            &p.gamma_exps,
            &exps_pow(data.chi_exps(), -(c as i64), data.orders()),
            data.orders(),
        ),
    );
    debug_assert!(is_one_dim_param(data, &k_part));
    Ok(SimpleFactorization {
        c,
        quotient_beta_exps: exps_pow(data.chi_exps(), c as i64, data.orders()),
        quotient_g_exps: exps_pow(data.a_exps(), -(c as i64), data.orders()),
        k_part,
    })
}

// ---- predicted tensor decompositions ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DecompMode {
    #[serde(rename = "COMPLETE")]
    Complete,
    #[serde(rename = "SOCLE_ONLY")]
    SocleOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankOneSummand {
    pub beta_exps: Vec<u64>,
    pub g_exps: Vec<u64>,
    pub dim: u64,
}

/// Predicted decomposition data: the complete summand list when the tensor
/// product is completely reducible (r_c + r_{c'} < ℓ), otherwise only the
/// socle summands, with t = r_c + r_{c'} − ℓ + 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankOneDecomposition {
    pub mode: DecompMode,
    pub t: Option<u64>,
    pub summands: Vec<RankOneSummand>,
}

/// Predict the decomposition of spin(β, g) ⊗ spin(β′, g′): summands
/// (χ^{−j} β β′, g g′ a^j) for j in the complete range 0..=min(r, r′) or the
/// socle range floor((t+1)/2)..=min(r, r′).
pub fn predict_tensor(
    data: &RankOneData,
    left: (&[u64], &[u64]),
    right: (&[u64], &[u64]),
) -> Result<RankOneDecomposition, RankOneError> {
    require_factorization(data)?;
    let ell = data.ell();
    let (beta, g) = left;
    let (beta2, g2) = right;
    let c = coset_exponent(data, &DoubleGroupLike::new(data, g.to_vec(), beta.to_vec()))?;
    let c2 = coset_exponent(data, &DoubleGroupLike::new(data, g2.to_vec(), beta2.to_vec()))?;
    let (r, r2) = (r_of_c(ell, c), r_of_c(ell, c2));
    let jmin_jmax = if r + r2 < ell {
        (0, r.min(r2))
    } else {
        let t = r + r2 - ell + 1;
        ((t + 1) / 2, r.min(r2))
    };
    let orders = data.orders();
    let bb = exps_mul(beta, beta2, orders);
    let gg = exps_mul(g, g2, orders);
    let mut summands = Vec::new();
    for j in jmin_jmax.0..=jmin_jmax.1 {
        let beta_j = exps_mul(&bb, &exps_pow(data.chi_exps(), -(j as i64), orders), orders);
        let g_j = exps_mul(&gg, &exps_pow(data.a_exps(), j as i64, orders), orders);
        let dim = dim_simple(data, &beta_j, &g_j)?;
        summands.push(RankOneSummand {
            beta_exps: beta_j,
            g_exps: g_j,
            dim,
        });
    }
    if r + r2 < ell {
        Ok(RankOneDecomposition {
            mode: DecompMode::Complete,
            t: None,
            summands,
        })
    } else {
        Ok(RankOneDecomposition {
            mode: DecompMode::SocleOnly,
            t: Some(r + r2 - ell + 1),
            summands,
        })
    }
}

// ---- Borel-side (u_{theta, theta^{-1}}(sl_2)) predictions ----

/// Minimal r ≥ 0 with β(ω′) = θ^{2(c−r)} for β(ω′) = θ^b, i.e. the least
/// solution of 2r ≡ 2c − b mod ℓ. For even ℓ this has no solution when
/// 2c − b is odd; that case is a distinct error, never a guessed dimension.
pub fn r_minimal(ell: u64, c: u64, b: u64) -> Result<u64, RankOneError> {
    let d = Residue::new(2 * (c % ell) as i128 - (b % ell) as i128, ell).lift();
    if ell % 2 == 1 {
        Ok((inv_mod(2, ell) as u128 * d as u128 % ell as u128) as u64)
    } else if d % 2 == 0 {
        // Solutions r0 and r0 + ell/2; the minimal one lies in [0, ell/2).
        Ok((d / 2) % (ell / 2))
    } else {
        Err(RankOneError::NoSuchR)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BorelSummand {
    pub beta_exp: u64,
    pub c_exp: u64,
    pub dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BorelDecomposition {
    pub mode: DecompMode,
    pub t: Option<u64>,
    pub summands: Vec<BorelSummand>,
}

/// Chen's decomposition for u_{θ,θ⁻¹}(sl₂)-simples H·_β (ω′)^c with
/// β(ω′) = θ^b: summands g_j = (ω′)^{c+c′−j}, β_j(ω′) = θ^{2j} β(ω′) β′(ω′).
/// Even ℓ is outside the verified theory and is reported as unspecified.
pub fn chen_predict(
    ell: u64,
    left: (u64, u64),
    right: (u64, u64),
) -> Result<BorelDecomposition, RankOneError> {
    let (c, b) = (left.0 % ell, left.1 % ell);
    let (c2, b2) = (right.0 % ell, right.1 % ell);
    let r = r_minimal(ell, c, b)?;
    let r2 = r_minimal(ell, c2, b2)?;
    if ell % 2 == 0 {
        return Err(RankOneError::UnspecifiedEvenEll);
    }
    let (jmin, jmax) = if r + r2 < ell {
        (0, r.min(r2))
    } else {
        let t = r + r2 - ell + 1;
        ((t + 1) / 2, r.min(r2))
    };
    let mut summands = Vec::new();
    for j in jmin..=jmax {
        let c_j = Residue::new((c + c2) as i128 - j as i128, ell).lift();
        let b_j = (2 * j + b + b2) % ell;
        let dim = r_minimal(ell, c_j, b_j)? + 1;
        summands.push(BorelSummand {
            beta_exp: b_j,
            c_exp: c_j,
            dim,
        });
    }
    Ok(BorelDecomposition {
        mode: if r + r2 < ell {
            DecompMode::Complete
        } else {
            DecompMode::SocleOnly
        },
        t: if r + r2 < ell { None } else { Some(r + r2 - ell + 1) },
        summands,
    })
}

/// Parameter-level ψ correspondence: the quotient-type simple with
/// parameter (χ^{−c}, a^c) matches the u_θ(sl₂) simple H·_β (ω′)^d with
/// d = −c and β(ω′) = θ^{2c}, where θ = χ(a)^{−2⁻¹ mod ℓ}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BorelParam {
    pub d_exp: u64,
    pub beta_exp: u64,
    /// ζ_L-exponent of the matching θ.
    pub theta_exp: u64,
}

pub fn psi_module_correspondence(data: &RankOneData, c: u64) -> Result<BorelParam, RankOneError> {
    require_factorization(data)?;
    let ell = data.ell();
    let c = c % ell;
    let inv2 = inv_mod(2, ell);
    let theta_exp = (data.chi_a_exponent() as u128 * (ell - inv2) as u128 % data.field_ell() as u128) as u64;
    Ok(BorelParam {
        d_exp: (ell - c) % ell,
        beta_exp: 2 * c % ell,
        theta_exp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3_data() -> RankOneData {
        RankOneData::new(vec![3], vec![1], vec![1]).unwrap()
    }

    #[test]
    fn data_orders() {
        let d = z3_data();
        assert_eq!((d.ell(), d.order_a(), d.order_chi()), (3, 3, 3));
        assert_eq!(d.ev_order(), 3);
        // Z6 with chi(a) = zeta_6^2: ell = 3, N = 6, M = 3.
        let d = RankOneData::new(vec![6], vec![1], vec![2]).unwrap();
        assert_eq!((d.ell(), d.order_a(), d.order_chi()), (3, 6, 3));
        // Degenerate: chi(a) = 1.
        assert_eq!(
            RankOneData::new(vec![2, 2], vec![1, 0], vec![0, 1]),
            Err(RankOneError::Degenerate)
        );
        // Z2 x Z2 with chi(a) = -1 is fine (ell = 2).
        let d = RankOneData::new(vec![2, 2], vec![1, 0], vec![1, 0]).unwrap();
        assert_eq!(d.ell(), 2);
    }

    #[test]
    fn ev_examples() {
        let d = z3_data();
        assert!(ev_exponent(&d, &DoubleGroupLike::identity(&d)).is_zero());
        // a*chi is in K.
        let achi = DoubleGroupLike::new(&d, vec![1], vec![1]);
        assert!(ev_exponent(&d, &achi).is_zero());
        // a^{-1} chi evaluates to chi(a)^2, of order ell / gcd(2, ell).
        let p = DoubleGroupLike::new(&d, vec![2], vec![1]);
        let e = ev_exponent(&d, &p);
        assert!(!e.is_zero());
        assert_eq!(
            crate::cyclotomic::order_of_power(e.modulus(), e.lift() as i64),
            3 / 2u64.gcd(&3)
        );
    }

    #[test]
    fn ev_matches_field_computation() {
        // Cross-check the exponent against a direct product of CycElem values.
        let d = RankOneData::new(vec![6], vec![1], vec![2]).unwrap();
        let l = d.field_ell();
        for p in double_grouplikes(&d) {
            let chi_inv_g = CycElem::root_power(
                l,
                -(chi_a_exponent(d.orders(), d.chi_exps(), &p.g_exps, l) as i64),
            );
            let gamma_a = CycElem::root_power(
                l,
                chi_a_exponent(d.orders(), &p.gamma_exps, d.a_exps(), l) as i64,
            );
            let value = chi_inv_g.mul(&gamma_a);
            let e = ev_exponent(&d, &p);
            let base = CycElem::root_power(l, (l / e.modulus()) as i64);
            assert_eq!(base.pow(e.lift()), value);
        }
    }

    #[test]
    fn k_subgroup_examples() {
        let d = z3_data();
        let k = k_subgroup(&d, None).unwrap();
        assert_eq!(k.len(), 3); // 9 / 3
        assert!(k.iter().any(|p| p.is_identity()));
        assert!(k.contains(&DoubleGroupLike::new(&d, vec![1], vec![1])));
        let kp = k_perp(&d);
        assert_eq!(kp.len(), 3); // |a chi^{-1}| = lcm(3, 3)
        assert!(kp.iter().any(|p| p.is_identity()));
        assert_eq!(k.len() * kp.len(), 9);
        // |K| * |K_perp| = |G x Gamma| over assorted data.
        for (orders, a, chi) in [
            (vec![5u64], vec![1u64], vec![1u64]),
            (vec![6], vec![1], vec![1]),
            (vec![6], vec![1], vec![2]),
            (vec![2, 2], vec![1, 0], vec![1, 0]),
            (vec![9], vec![3], vec![1]),
        ] {
            let d = RankOneData::new(orders, a, chi).unwrap();
            let k = k_subgroup(&d, None).unwrap();
            let kp = k_perp(&d);
            assert_eq!(
                (k.len() * kp.len()) as u64,
                d.group_size() * d.group_size(),
                "data {:?}",
                d
            );
            assert_eq!(kp.len() as u64, d.ev_order());
        }
    }

    #[test]
    fn k_cap_is_enforced() {
        let d = z3_data();
        assert!(matches!(
            k_subgroup(&d, Some(4)),
            Err(RankOneError::TooLarge { states: 9, cap: 4 })
        ));
    }

    #[test]
    fn quotient_param_examples() {
        let d = z3_data();
        for c in 0..3i64 {
            let beta = exps_pow(d.chi_exps(), -c, d.orders());
            let g = exps_pow(d.a_exps(), c, d.orders());
            assert!(is_quotient_param(&d, &beta, &g));
        }
        assert!(is_quotient_param(&d, &[0], &[0]));
        assert!(!is_quotient_param(&d, &[0], &[1])); // (eps, a)
    }

    #[test]
    fn one_dim_param_examples() {
        let d = z3_data();
        assert!(is_one_dim_param(&d, &DoubleGroupLike::identity(&d)));
        assert!(is_one_dim_param(&d, &DoubleGroupLike::new(&d, vec![1], vec![1])));
        assert!(!is_one_dim_param(&d, &DoubleGroupLike::new(&d, vec![2], vec![1])));
    }

    #[test]
    fn factorization_examples() {
        assert!(factorization_bijective(&z3_data()));
        let even = RankOneData::new(vec![6], vec![1], vec![1]).unwrap();
        assert!(!factorization_bijective(&even)); // ell = 6 even
        let mismatch = RankOneData::new(vec![6], vec![1], vec![2]).unwrap();
        assert!(!factorization_bijective(&mismatch)); // N = 6 != ell = 3
    }

    #[test]
    fn coset_exponent_examples() {
        let d = z3_data();
        for p in k_subgroup(&d, None).unwrap() {
            assert_eq!(coset_exponent(&d, &p).unwrap(), 0);
        }
        // The representative a^{-1} chi itself has exponent 1.
        let rep = DoubleGroupLike::new(&d, vec![2], vec![1]);
        assert_eq!(coset_exponent(&d, &rep).unwrap(), 1);
        // p = (a, eps): ev = chi^{-1}(a) = zeta_3^2, exponent 2 in base chi(a),
        // c = 2 * inv(2) = 1; confirm p (a^{-1}chi)^{-1} lies in K.
        let p = DoubleGroupLike::new(&d, vec![1], vec![0]);
        let c = coset_exponent(&d, &p).unwrap();
        assert_eq!(c, 1);
        let back = p.mul(&rep.pow(-(c as i64), &d), &d);
        assert!(is_one_dim_param(&d, &back));
        // The coset map is constant on K-cosets and hits each value.
        for p in double_grouplikes(&d) {
            let c = coset_exponent(&d, &p).unwrap();
            let shifted = p.mul(&rep.pow(-(c as i64), &d), &d);
            assert!(ev_exponent(&d, &shifted).is_zero());
        }
    }

    #[test]
    fn r_and_dim_examples() {
        assert_eq!(r_of_c(3, 0), 0);
        assert_eq!(r_of_c(3, 2), 1);
        assert_eq!(r_of_c(5, 3), 1);
        let d = z3_data();
        // (beta, g) = (chi^{-c0}, a^{c0}) has coset exponent -c0.
        let beta = exps_pow(d.chi_exps(), -1, d.orders());
        assert_eq!(dim_simple(&d, &beta, &[1]).unwrap(), 2);
        let beta = exps_pow(d.chi_exps(), -2, d.orders());
        assert_eq!(dim_simple(&d, &beta, &[2]).unwrap(), 3);
        assert_eq!(dim_simple(&d, &[0], &[0]).unwrap(), 1);
    }

    #[test]
    fn r_minimal_cases() {
        // Odd ell: unique solution in [0, ell).
        assert_eq!(r_minimal(3, 1, 1).unwrap(), 2); // 2r = 1 mod 3 -> r = 2
        assert_eq!(r_minimal(5, 2, 4).unwrap(), 0);
        // Even ell: minimal of the two solutions, or NoSuchR.
        assert_eq!(r_minimal(4, 1, 0).unwrap(), 1);
        assert_eq!(r_minimal(4, 3, 2).unwrap(), 0); // 2r = 4 = 0 mod 4 -> r = 0
        assert_eq!(r_minimal(4, 1, 1), Err(RankOneError::NoSuchR));
    }

    #[test]
    fn factor_simple_recombines() {
        let d = z3_data();
        for p in double_grouplikes(&d) {
            let f = factor_simple(&d, &p.gamma_exps, &p.g_exps).unwrap();
            assert!(is_one_dim_param(&d, &f.k_part));
            // g = a^{-c} g_K, beta = chi^c beta_K.
            let g_back = exps_mul(&f.quotient_g_exps, &f.k_part.g_exps, d.orders());
            let b_back = exps_mul(&f.quotient_beta_exps, &f.k_part.gamma_exps, d.orders());
            assert_eq!(g_back, p.g_exps);
            assert_eq!(b_back, p.gamma_exps);
            // gK-part in K, quotient part in K_perp.
            assert!(is_quotient_param(&d, &f.quotient_beta_exps, &f.quotient_g_exps));
        }
    }

    #[test]
    fn predict_tensor_examples() {
        let d = z3_data();
        // c = c' = 2 means inputs (chi^{-c0}, a^{c0}) with c0 = -2 = 1.
        let beta = exps_pow(d.chi_exps(), -1, d.orders());
        let g = vec![1u64];
        let dec = predict_tensor(&d, (&beta, &g), (&beta, &g)).unwrap();
        assert_eq!(dec.mode, DecompMode::Complete);
        let dims: Vec<u64> = dec.summands.iter().map(|s| s.dim).collect();
        assert_eq!(dims, vec![3, 1]);
        // One factor one-dimensional: single summand (beta beta', g g').
        let one_beta = vec![1u64];
        let one_g = vec![1u64]; // (chi, a) in K
        let dec = predict_tensor(&d, (&beta, &g), (&one_beta, &one_g)).unwrap();
        assert_eq!(dec.mode, DecompMode::Complete);
        assert_eq!(dec.summands.len(), 1);
        assert_eq!(dec.summands[0].beta_exps, exps_mul(&beta, &one_beta, d.orders()));
        assert_eq!(dec.summands[0].g_exps, exps_mul(&g, &one_g, d.orders()));
        // c = c' = 1: 3 (x) 3, socle only with t = 2, dims {3, 1}.
        let beta = exps_pow(d.chi_exps(), -2, d.orders());
        let g = vec![2u64];
        let dec = predict_tensor(&d, (&beta, &g), (&beta, &g)).unwrap();
        assert_eq!(dec.mode, DecompMode::SocleOnly);
        assert_eq!(dec.t, Some(2));
        let dims: Vec<u64> = dec.summands.iter().map(|s| s.dim).collect();
        assert_eq!(dims, vec![3, 1]);
    }

    #[test]
    fn chen_examples() {
        // l = 3, c = c' = 2 with beta = beta_g (b = -2c = 2): r = r' = 1.
        let dec = chen_predict(3, (2, 2), (2, 2)).unwrap();
        assert_eq!(dec.mode, DecompMode::Complete);
        let dims: Vec<u64> = dec.summands.iter().map(|s| s.dim).collect();
        assert_eq!(dims, vec![3, 1]);
        // beta_j = beta_{g_j} on quotient-type inputs.
        for s in &dec.summands {
            assert_eq!(s.beta_exp, (2 * (3 - s.c_exp)) % 3);
        }
        // r' = 0: single summand.
        let dec = chen_predict(3, (2, 2), (0, 0)).unwrap();
        assert_eq!(dec.summands.len(), 1);
        assert_eq!((dec.summands[0].c_exp, dec.summands[0].beta_exp), (2, 2));
        // l = 5, c = c' = 2, beta = beta_g (b = -4 = 1): r = r' = 4, t = 4,
        // socle over j in {2, 3, 4}.
        let dec = chen_predict(5, (2, 1), (2, 1)).unwrap();
        assert_eq!(dec.mode, DecompMode::SocleOnly);
        assert_eq!(dec.t, Some(4));
        assert_eq!(dec.summands.len(), 3);
        // Even ell is unspecified.
        assert_eq!(chen_predict(4, (1, 0), (1, 0)), Err(RankOneError::UnspecifiedEvenEll));
    }

    #[test]
    fn psi_correspondence_examples() {
        let d = z3_data();
        let p = psi_module_correspondence(&d, 0).unwrap();
        assert_eq!((p.d_exp, p.beta_exp), (0, 0));
        // theta = chi(a)^{-inv2} = zeta_3^{-2} = zeta_3.
        assert_eq!(p.theta_exp, 1);
        let p = psi_module_correspondence(&d, 1).unwrap();
        assert_eq!((p.d_exp, p.beta_exp), (2, 2));
        let even = RankOneData::new(vec![6], vec![1], vec![1]).unwrap();
        assert!(psi_module_correspondence(&even, 1).is_err());
    }
}
