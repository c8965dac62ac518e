//! Structural criteria for restricted two-parameter quantum groups at
//! general rank, computed purely in residue arithmetic mod ℓ.
//!
//! With r = θ^y and s = θ^z for θ a primitive ℓ-th root of unity, all the
//! questions handled here — which group-likes are central, which simple
//! parameters descend to the quotient by the central group-likes, when an
//! arbitrary simple parameter factors uniquely into a quotient-type
//! parameter times a one-dimensional one — reduce to linear algebra over
//! ℤ/ℓℤ with the tridiagonal exponent matrix A.

use crate::zmod::{gcd_with_modulus, invert_mod, solve_mod, Residue, ResidueMatrix, ZmodError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoParamError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),
    #[error("state space too large: {states} > cap {cap}")]
    TooLarge { states: u128, cap: u128 },
    #[error(transparent)]
    Linalg(#[from] ZmodError),
}

/// Parameters (n, ℓ, y, z) with y ≠ z mod ℓ; r = θ^y, s = θ^z.
///
/// Two flags are fixed at construction: `double_ok` (the alternating
/// determinant of A is a unit mod ℓ, required for the Drinfel'd-double
/// presentation) and `rs_primitive` (y − z is a unit, i.e. rs⁻¹ is again a
/// primitive ℓ-th root).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoParamConfig {
    n: usize,
    ell: u64,
    y: u64,
    z: u64,
    double_ok: bool,
    rs_primitive: bool,
}

/// Group-like of the full quantum group: ω-exponents and ω′-exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupLikeU {
    pub a_exp: Vec<u64>,
    pub b_exp: Vec<u64>,
}

/// Simple-module parameter on the Borel side: β(ω′_i) = θ^{β_i} together
/// with the group-like g = ∏ (ω′_i)^{c_i}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SimpleParamU {
    pub beta_exp: Vec<u64>,
    pub c_exp: Vec<u64>,
}

impl TwoParamConfig {
    pub fn new(n: usize, ell: u64, y: i128, z: i128) -> Result<Self, TwoParamError> {
        if n < 2 {
            return Err(TwoParamError::InvalidConfig(format!("n must be >= 2, got {n}")));
        }
        if ell < 2 {
            return Err(TwoParamError::InvalidConfig(format!("ell must be >= 2, got {ell}")));
        }
        let y = Residue::new(y, ell).lift();
        let z = Residue::new(z, ell).lift();
        if y == z {
            return Err(TwoParamError::InvalidConfig(format!(
                "y and z must differ mod ell (y = z = {y} mod {ell})"
            )));
        }
        let mut cfg = TwoParamConfig {
            n,
            ell,
            y,
            z,
            double_ok: false,
            rs_primitive: false,
        };
        cfg.double_ok = gcd_with_modulus(alt_det(&cfg).lift(), ell) == 1;
        cfg.rs_primitive = gcd_with_modulus(Residue::new(y as i128 - z as i128, ell).lift(), ell) == 1;
        Ok(cfg)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn double_ok(&self) -> bool {
        self.double_ok
    }

    pub fn rs_primitive(&self) -> bool {
        self.rs_primitive
    }

    fn res(&self, v: i128) -> Residue {
        Residue::new(v, self.ell)
    }
}

/// The (n−1)×(n−1) exponent matrix: diagonal y−z, superdiagonal z,
/// subdiagonal −y, everything mod ℓ.
pub fn build_a(cfg: &TwoParamConfig) -> ResidueMatrix {
    let m = cfg.n - 1;
    let mut a = ResidueMatrix::zeros(m, m, cfg.ell);
    for i in 0..m {
        a.set(i, i, cfg.res(cfg.y as i128 - cfg.z as i128));
        if i + 1 < m {
            a.set(i, i + 1, cfg.res(cfg.z as i128));
            a.set(i + 1, i, cfg.res(-(cfg.y as i128)));
        }
    }
    a
}

/// det A in closed form: y^{n−1} − y^{n−2} z + ... + (−1)^{n−1} z^{n−1}.
pub fn alt_det(cfg: &TwoParamConfig) -> Residue {
    let m = cfg.n - 1;
    let y = cfg.res(cfg.y as i128);
    let z = cfg.res(cfg.z as i128);
    let mut acc = Residue::zero(cfg.ell);
    for k in 0..=m {
        let term = y.pow((m - k) as u64).mul(&z.pow(k as u64));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Whether the quantum group is presented as a Drinfel'd double:
/// gcd(det A, ℓ) = 1, on the canonical lift of the alternating sum.
pub fn is_double(cfg: &TwoParamConfig) -> bool {
    cfg.double_ok
}

fn invert_a(cfg: &TwoParamConfig) -> Result<ResidueMatrix, TwoParamError> {
    if !cfg.double_ok {
        return Err(TwoParamError::PreconditionFailed("double_ok (gcd(det A, ell) = 1)"));
    }
    Ok(invert_mod(&build_a(cfg))?)
}

fn to_residues(cfg: &TwoParamConfig, exps: &[u64]) -> Vec<Residue> {
    exps.iter().map(|&e| cfg.res(e as i128)).collect()
}

fn to_lifts(v: &[Residue]) -> Vec<u64> {
    v.iter().map(|r| r.lift()).collect()
}

/// For ω-exponents a, the unique ω′-exponents b = A⁻¹Aᵗ a making
/// ω^a ω′^b central.
pub fn central_b_from_a(cfg: &TwoParamConfig, a_exp: &[u64]) -> Result<Vec<u64>, TwoParamError> {
    assert_eq!(a_exp.len(), cfg.n - 1);
    let a = build_a(cfg);
    let rhs = a.transpose().mul_vec(&to_residues(cfg, a_exp));
    let b = solve_mod(&a, &rhs)?;
    Ok(to_lifts(&b))
}

/// Centrality test straight from the commutation exponents: for every k,
/// z a_{k−1} + (y−z) a_k − y a_{k+1} ≡ −y b_{k−1} + (y−z) b_k + z b_{k+1},
/// with out-of-range indices read as 0.
pub fn is_central_pair(cfg: &TwoParamConfig, g: &GroupLikeU) -> bool {
    let m = cfg.n - 1;
    assert_eq!(g.a_exp.len(), m);
    assert_eq!(g.b_exp.len(), m);
    let y = cfg.y as i128;
    let z = cfg.z as i128;
    let at = |v: &[u64], i: isize| -> i128 {
        if i < 0 || i as usize >= m {
            0
        } else {
            v[i as usize] as i128
        }
    };
    (0..m as isize).all(|k| {
        let lhs = z * at(&g.a_exp, k - 1) + (y - z) * at(&g.a_exp, k) - y * at(&g.a_exp, k + 1);
        let rhs = -y * at(&g.b_exp, k - 1) + (y - z) * at(&g.b_exp, k) + z * at(&g.b_exp, k + 1);
        cfg.res(lhs) == cfg.res(rhs)
    })
}

/// The full central group-like subgroup: {(a, A⁻¹Aᵗ a)}, of order ℓ^{n−1}.
pub fn central_subgroup(cfg: &TwoParamConfig) -> Result<Vec<GroupLikeU>, TwoParamError> {
    let m = cfg.n - 1;
    let mut out = Vec::new();
    for a_exp in exponent_grid(cfg.ell, m) {
        let b_exp = central_b_from_a(cfg, &a_exp)?;
        out.push(GroupLikeU { a_exp, b_exp });
    }
    Ok(out)
}

/// All exponent vectors of length `len` with entries in [0, ell), ascending.
pub fn exponent_grid(ell: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; len];
    loop {
        out.push(cur.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < ell {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// β = −Aᵗ c: the character making H ·_β g a module for the quotient by the
/// central group-likes, for g = ∏ (ω′_i)^{c_i}.
pub fn beta_of_g(cfg: &TwoParamConfig, c_exp: &[u64]) -> Vec<u64> {
    assert_eq!(c_exp.len(), cfg.n - 1);
    let at = build_a(cfg).transpose();
    let v = at.mul_vec(&to_residues(cfg, c_exp));
    v.iter().map(|r| r.neg().lift()).collect()
}

/// d = A⁻¹ χ: the group-like g_χ = ∏ (ω′_i)^{d_i} attached to a
/// one-dimensional character χ.
pub fn g_of_chi(cfg: &TwoParamConfig, chi_exp: &[u64]) -> Result<Vec<u64>, TwoParamError> {
    assert_eq!(chi_exp.len(), cfg.n - 1);
    let ainv = invert_a(cfg)?;
    Ok(to_lifts(&ainv.mul_vec(&to_residues(cfg, chi_exp))))
}

/// Exponent e with ω_i · g = θ^e g for g = ∏ (ω′_j)^{c_j}:
/// e = −y c_{i−1} + (y−z) c_i + z c_{i+1} (indices outside the range are 0).
pub fn pair_w_exponent(cfg: &TwoParamConfig, i: usize, c_exp: &[u64]) -> Result<Residue, TwoParamError> {
    if !cfg.rs_primitive {
        return Err(TwoParamError::PreconditionFailed("rs_primitive (gcd(y - z, ell) = 1)"));
    }
    if !cfg.double_ok {
        return Err(TwoParamError::PreconditionFailed("double_ok (gcd(det A, ell) = 1)"));
    }
    let m = cfg.n - 1;
    assert!(i < m, "generator index out of range");
    assert_eq!(c_exp.len(), m);
    let at = |k: isize| -> i128 {
        if k < 0 || k as usize >= m {
            0
        } else {
            c_exp[k as usize] as i128
        }
    };
    let y = cfg.y as i128;
    let z = cfg.z as i128;
    let i = i as isize;
    Ok(cfg.res(-y * at(i - 1) + (y - z) * at(i) + z * at(i + 1)))
}

/// The factorization criterion: every simple module factors as
/// (quotient-type simple) ⊗ (one-dimensional) iff gcd((y−z)·n, ℓ) = 1.
pub fn factorization_bijective(cfg: &TwoParamConfig) -> Result<bool, TwoParamError> {
    if !cfg.double_ok {
        return Err(TwoParamError::PreconditionFailed("double_ok (gcd(det A, ell) = 1)"));
    }
    if !cfg.rs_primitive {
        return Err(TwoParamError::PreconditionFailed("rs_primitive (gcd(y - z, ell) = 1)"));
    }
    let ymz = Residue::new(cfg.y as i128 - cfg.z as i128, cfg.ell).lift();
    Ok(gcd_with_modulus(
        Residue::new(ymz as i128 * cfg.n as i128, cfg.ell).lift(),
        cfg.ell,
    ) == 1)
}

/// Solve the block system (Id, A⁻¹; −Aᵗ, Id)(c, χ) = (b, γ): the unique
/// factorization of an arbitrary simple-module parameter into its
/// quotient part c and one-dimensional part χ.
pub fn psi_solve(
    cfg: &TwoParamConfig,
    b_exp: &[u64],
    gamma_exp: &[u64],
) -> Result<SimpleParamU, TwoParamError> {
    if !factorization_bijective(cfg)? {
        return Err(TwoParamError::PreconditionFailed("factorization criterion gcd((y-z)n, ell) = 1"));
    }
    let m = cfg.n - 1;
    assert_eq!(b_exp.len(), m);
    assert_eq!(gamma_exp.len(), m);
    let ainv = invert_a(cfg)?;
    let at = build_a(cfg).transpose();
    let mut block = ResidueMatrix::zeros(2 * m, 2 * m, cfg.ell);
    for i in 0..m {
        block.set(i, i, Residue::one(cfg.ell));
        block.set(m + i, m + i, Residue::one(cfg.ell));
        for j in 0..m {
            block.set(i, m + j, ainv.get(i, j));
            block.set(m + i, j, at.get(i, j).neg());
        }
    }
    let rhs: Vec<Residue> = b_exp
        .iter()
        .chain(gamma_exp.iter())
        .map(|&e| cfg.res(e as i128))
        .collect();
    let sol = solve_mod(&block, &rhs)?;
    Ok(SimpleParamU {
        c_exp: to_lifts(&sol[..m]),
        beta_exp: to_lifts(&sol[m..]),
    })
}

/// Recombine a ψ factorization: h = g·g_χ has b = c + A⁻¹χ and the
/// character has γ = −Aᵗc + χ.
pub fn psi_recombine(
    cfg: &TwoParamConfig,
    param: &SimpleParamU,
) -> Result<(Vec<u64>, Vec<u64>), TwoParamError> {
    let ainv = invert_a(cfg)?;
    let d = ainv.mul_vec(&to_residues(cfg, &param.beta_exp));
    let beta = beta_of_g(cfg, &param.c_exp);
    let b: Vec<u64> = param
        .c_exp
        .iter()
        .zip(d.iter())
        .map(|(&c, dr)| cfg.res(c as i128 + dr.lift() as i128).lift())
        .collect();
    let gamma: Vec<u64> = beta
        .iter()
        .zip(param.beta_exp.iter())
        .map(|(&bt, &ch)| cfg.res(bt as i128 + ch as i128).lift())
        .collect();
    Ok((b, gamma))
}

/// Default cap for exhaustive state sweeps.
pub const DEFAULT_SWEEP_CAP: u128 = 10_000_000;

/// Brute-force test of whether (c, χ) ↦ (c + A⁻¹χ, −Aᵗc + χ) is a bijection
/// of (ℤ/ℓ)^{2(n−1)}; must agree with [`factorization_bijective`].
pub fn verify_psi_bijectivity(cfg: &TwoParamConfig, cap: Option<u128>) -> Result<bool, TwoParamError> {
    if !cfg.double_ok {
        return Err(TwoParamError::PreconditionFailed("double_ok (gcd(det A, ell) = 1)"));
    }
    if !cfg.rs_primitive {
        return Err(TwoParamError::PreconditionFailed("rs_primitive (gcd(y - z, ell) = 1)"));
    }
    let cap = cap.unwrap_or(DEFAULT_SWEEP_CAP);
    let m = cfg.n - 1;
    let states = (cfg.ell as u128).pow(2 * m as u32);
    if states > cap {
        return Err(TwoParamError::TooLarge { states, cap });
    }
    let ainv = invert_a(cfg)?;
    let at = build_a(cfg).transpose();
    let mut seen = vec![false; states as usize];
    for c_exp in exponent_grid(cfg.ell, m) {
        let c_res = to_residues(cfg, &c_exp);
        let beta: Vec<Residue> = at.mul_vec(&c_res).iter().map(|r| r.neg()).collect();
        for chi_exp in exponent_grid(cfg.ell, m) {
            let chi_res = to_residues(cfg, &chi_exp);
            let d = ainv.mul_vec(&chi_res);
            // Image point (c + d, beta + chi), packed base ell.
            let mut key: u128 = 0;
            for i in 0..m {
                key = key * cfg.ell as u128 + c_res[i].add(&d[i]).lift() as u128;
            }
            for i in 0..m {
                key = key * cfg.ell as u128 + beta[i].add(&chi_res[i]).lift() as u128;
            }
            if seen[key as usize] {
                return Ok(false);
            }
            seen[key as usize] = true;
        }
    }
    Ok(seen.iter().all(|&s| s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmod::det_mod;

    fn cfg(n: usize, ell: u64, y: i128, z: i128) -> TwoParamConfig {
        TwoParamConfig::new(n, ell, y, z).unwrap()
    }

    #[test]
    fn build_a_examples() {
        // theta, theta^{-1} case at l = 3: A = (2).
        let c = cfg(2, 3, 1, 2);
        let a = build_a(&c);
        assert_eq!(a.get(0, 0).lift(), 2);
        // n = 3, y = 1, z = 0: [[1, 0], [-1, 1]].
        let c = cfg(3, 5, 1, 0);
        let a = build_a(&c);
        assert_eq!(
            a,
            ResidueMatrix::from_rows(&[vec![1, 0], vec![-1, 1]], 5)
        );
    }

    #[test]
    fn alt_det_matches_determinant_oracle() {
        // Closed form vs det_mod(build_a) across a parameter sweep.
        for n in 2..=5usize {
            for ell in 2..=7u64 {
                for y in 0..ell {
                    for z in 0..ell {
                        if y == z {
                            continue;
                        }
                        let c = cfg(n, ell, y as i128, z as i128);
                        assert_eq!(
                            alt_det(&c),
                            det_mod(&build_a(&c)).unwrap(),
                            "n={n} ell={ell} y={y} z={z}"
                        );
                    }
                }
            }
        }
        // Spot values: n = 2 gives y - z; n = 3, y=1, z=2 gives 0 mod 3 and 3 mod 5.
        assert_eq!(alt_det(&cfg(2, 7, 3, 1)).lift(), 2);
        assert_eq!(alt_det(&cfg(3, 3, 1, 2)).lift(), 0);
        assert_eq!(alt_det(&cfg(3, 5, 1, 2)).lift(), 3);
    }

    #[test]
    fn is_double_examples() {
        assert!(is_double(&cfg(2, 3, 1, 2)));
        assert!(!is_double(&cfg(3, 3, 1, 2)));
        assert!(is_double(&cfg(2, 4, 1, 0)));
    }

    #[test]
    fn central_examples() {
        // Symmetric A (y = 1, z = l - 1): b = a.
        for ell in [3u64, 5, 7] {
            for n in [2usize, 3, 4] {
                let c = cfg(n, ell, 1, ell as i128 - 1);
                for a_exp in exponent_grid(ell, n - 1) {
                    assert_eq!(central_b_from_a(&c, &a_exp).unwrap(), a_exp);
                }
            }
        }
        let c = cfg(3, 5, 1, 0);
        let zero = vec![0u64, 0];
        assert_eq!(central_b_from_a(&c, &zero).unwrap(), zero);
        let b = central_b_from_a(&c, &[1, 0]).unwrap();
        assert!(is_central_pair(
            &c,
            &GroupLikeU { a_exp: vec![1, 0], b_exp: b }
        ));
    }

    #[test]
    fn central_pair_examples() {
        let c = cfg(2, 3, 1, 2);
        assert!(is_central_pair(&c, &GroupLikeU { a_exp: vec![0], b_exp: vec![0] }));
        assert!(is_central_pair(&c, &GroupLikeU { a_exp: vec![1], b_exp: vec![1] }));
        assert!(!is_central_pair(&c, &GroupLikeU { a_exp: vec![1], b_exp: vec![2] }));
    }

    #[test]
    fn central_subgroup_matches_exhaustive_scan() {
        for (n, ell, y, z) in [(2usize, 3u64, 1i128, 2i128), (2, 5, 1, 3), (3, 3, 1, 0), (3, 4, 1, 2)] {
            let c = cfg(n, ell, y, z);
            if !is_double(&c) {
                continue;
            }
            let listed = central_subgroup(&c).unwrap();
            assert_eq!(listed.len() as u128, (ell as u128).pow(n as u32 - 1));
            assert!(listed.iter().any(|g| g.a_exp.iter().all(|&e| e == 0) && g.b_exp.iter().all(|&e| e == 0)));
            let mut scanned = Vec::new();
            for a_exp in exponent_grid(ell, n - 1) {
                for b_exp in exponent_grid(ell, n - 1) {
                    let g = GroupLikeU { a_exp: a_exp.clone(), b_exp };
                    if is_central_pair(&c, &g) {
                        scanned.push(g);
                    }
                }
            }
            assert_eq!(scanned.len(), listed.len());
            for g in &listed {
                assert!(scanned.contains(g));
            }
        }
    }

    #[test]
    fn beta_of_g_examples() {
        // n = 2, y = 1, z = l - 1: beta = -2c.
        for ell in [3u64, 5] {
            let c = cfg(2, ell, 1, ell as i128 - 1);
            for cc in 0..ell {
                let beta = beta_of_g(&c, &[cc]);
                assert_eq!(beta[0], Residue::new(-2 * cc as i128, ell).lift());
            }
        }
        let c = cfg(3, 5, 1, 3);
        assert_eq!(beta_of_g(&c, &[0, 0]), vec![0, 0]);
        // Invariance over the central subgroup: the pairing exponent of every
        // central element against g must cancel the beta-values on its b-part.
        let g_c = vec![1u64, 2];
        let beta = beta_of_g(&c, &g_c);
        for h in central_subgroup(&c).unwrap() {
            let mut x = Residue::zero(5);
            for i in 0..2 {
                let e = pair_w_exponent(&c, i, &g_c).unwrap();
                x = x.add(&e.mul(&Residue::new(h.a_exp[i] as i128, 5)));
            }
            let mut bsum = Residue::zero(5);
            for i in 0..2 {
                bsum = bsum.add(&Residue::new((h.b_exp[i] * beta[i]) as i128, 5));
            }
            assert!(x.add(&bsum).is_zero(), "central element acts nontrivially");
        }
    }

    #[test]
    fn g_of_chi_examples() {
        let c = cfg(2, 3, 1, 2);
        assert_eq!(g_of_chi(&c, &[0]).unwrap(), vec![0]);
        assert_eq!(g_of_chi(&c, &[1]).unwrap(), vec![2]);
        // Consistency: A d = chi.
        for n in [2usize, 3] {
            let c = cfg(n, 5, 1, 3);
            let a = build_a(&c);
            for chi in exponent_grid(5, n - 1) {
                let d = g_of_chi(&c, &chi).unwrap();
                let back = a.mul_vec(&d.iter().map(|&e| Residue::new(e as i128, 5)).collect::<Vec<_>>());
                assert_eq!(back.iter().map(|r| r.lift()).collect::<Vec<_>>(), chi);
            }
        }
    }

    #[test]
    fn pair_w_exponent_examples() {
        let c = cfg(2, 5, 1, 3);
        assert_eq!(pair_w_exponent(&c, 0, &[0]).unwrap().lift(), 0);
        // n = 2: e = (y - z) c.
        for cc in 0..5u64 {
            assert_eq!(
                pair_w_exponent(&c, 0, &[cc]).unwrap(),
                Residue::new((1 - 3) * cc as i128, 5)
            );
        }
    }

    #[test]
    fn factorization_examples() {
        assert!(factorization_bijective(&cfg(2, 3, 1, 2)).unwrap());
        // Double and rs-primitive hold but gcd(2, 4) = 2.
        let c = cfg(2, 4, 1, 0);
        assert!(is_double(&c) && c.rs_primitive());
        assert!(!factorization_bijective(&c).unwrap());
        // Precondition failure reports which flag.
        let bad = cfg(3, 3, 1, 2);
        assert!(matches!(
            factorization_bijective(&bad),
            Err(TwoParamError::PreconditionFailed(msg)) if msg.contains("double_ok")
        ));
    }

    #[test]
    fn psi_solve_example_and_uniqueness() {
        let c = cfg(2, 3, 1, 2);
        assert_eq!(
            psi_solve(&c, &[0], &[0]).unwrap(),
            SimpleParamU { beta_exp: vec![0], c_exp: vec![0] }
        );
        // Exhaustive uniqueness oracle over (Z/3)^2 for rhs (1, 1).
        let mut solutions = Vec::new();
        for cc in 0..3u64 {
            for chi in 0..3u64 {
                let p = SimpleParamU { beta_exp: vec![chi], c_exp: vec![cc] };
                let (b, gamma) = psi_recombine(&c, &p).unwrap();
                if b == vec![1] && gamma == vec![1] {
                    solutions.push(p);
                }
            }
        }
        assert_eq!(solutions.len(), 1, "oracle: unique solution");
        let solved = psi_solve(&c, &[1], &[1]).unwrap();
        assert_eq!(solved, solutions[0]);
        assert_eq!(solved, SimpleParamU { beta_exp: vec![0], c_exp: vec![1] });
        // Round trip.
        let (b, gamma) = psi_recombine(&c, &solved).unwrap();
        assert_eq!((b, gamma), (vec![1], vec![1]));
    }

    #[test]
    fn verify_psi_examples() {
        assert!(verify_psi_bijectivity(&cfg(2, 3, 1, 2), None).unwrap());
        assert!(!verify_psi_bijectivity(&cfg(2, 4, 1, 0), None).unwrap());
        // Sweep n = 3, l = 5: brute force equals the gcd criterion.
        for y in 0..5i128 {
            for z in 0..5i128 {
                if y == z {
                    continue;
                }
                let c = cfg(3, 5, y, z);
                if !is_double(&c) || !c.rs_primitive() {
                    continue;
                }
                assert_eq!(
                    verify_psi_bijectivity(&c, None).unwrap(),
                    factorization_bijective(&c).unwrap(),
                    "y={y} z={z}"
                );
            }
        }
        // Cap is honored.
        assert!(matches!(
            verify_psi_bijectivity(&cfg(3, 5, 1, 3), Some(10)),
            Err(TwoParamError::TooLarge { .. })
        ));
    }

    #[test]
    fn det_a_plus_at_identity() {
        // det(A + A^t) = (y - z)^{n-1} n, checked over a broad deterministic sweep.
        for n in 2..=6usize {
            for ell in 2..=12u64 {
                for (y, z) in [(1u64, 0u64), (1, 2), (2, 5), (3, 1), (ell - 1, 1)] {
                    let (y, z) = (y % ell, z % ell);
                    if y == z {
                        continue;
                    }
                    let c = cfg(n, ell, y as i128, z as i128);
                    let a = build_a(&c);
                    let sum = a.add(&a.transpose());
                    let lhs = det_mod(&sum).unwrap();
                    let rhs = Residue::new(y as i128 - z as i128, ell)
                        .pow(n as u64 - 1)
                        .mul(&Residue::new(n as i128, ell));
                    assert_eq!(lhs, rhs, "n={n} ell={ell} y={y} z={z}");
                }
            }
        }
    }

    #[test]
    fn invalid_configs_rejected() {
        assert!(TwoParamConfig::new(2, 5, 1, 1).is_err());
        assert!(TwoParamConfig::new(2, 5, 1, 6).is_err()); // 6 = 1 mod 5
        assert!(TwoParamConfig::new(1, 5, 1, 2).is_err());
        assert!(TwoParamConfig::new(2, 1, 1, 0).is_err());
    }
}
