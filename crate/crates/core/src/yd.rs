//! Yetter-Drinfel'd modules over a structure-constant Hopf algebra, built
//! around Radford's construction: the β-twisted adjoint action
//! h ·_β a = Σ β(h₂) h₃ a S⁻¹(h₁) turns H into a YD module H_β, and
//! spinning a group-like g inside H_β yields the simple module H ·_β g.
//!
//! The toolkit carries everything the oracle needs: spin with exact closure
//! over the generators, the YD compatibility check, tensor products,
//! character twists (tensoring with a one-dimensional module), Hom spaces
//! of YD morphisms, socles as sums of images of the classified simples, and
//! simplicity/identification on top of the socle.
//!
//! A module stores one action matrix per parent basis element and one
//! coaction component per parent basis element: δ(e_m) = Σ (C_u e_m) ⊗ b_u.

use crate::cyclotomic::CycElem;
use crate::hopf::{Character, HopfAlgebra};
use crate::linalg::{CycMatrix, EchelonSpace};
use serde_json::{json, Value};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YdError {
    #[error("modules have different parent algebras")]
    ParentMismatch,
    #[error("exponents {0:?} do not name a group-like of the parent")]
    NotGrouplike(Vec<u64>),
    #[error("spin closure failed: {0}")]
    ClosureFailed(String),
    #[error("coaction of a spin basis vector leaves the module span (coideal violation)")]
    CoidealViolation,
    #[error("module is not simple")]
    NotSimple,
    #[error("twist parameter does not define a one-dimensional module")]
    TwistParamNotOneDim,
    #[error("not a submodule: vector leaves the span under the action")]
    NotClosed,
    #[error(transparent)]
    Hopf(#[from] crate::hopf::HopfError),
}

/// Parameter (β, g) for a simple: β by exponents against the group
/// presentation of the parent, g by its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleParam {
    pub beta_exps: Vec<u64>,
    pub g_exps: Vec<u64>,
}

impl SimpleParam {
    pub fn new(beta_exps: Vec<u64>, g_exps: Vec<u64>) -> Self {
        SimpleParam { beta_exps, g_exps }
    }

    pub fn beta(&self, h: &HopfAlgebra) -> Character {
        h.character_from_exps(&self.beta_exps.iter().map(|&e| e as i64).collect::<Vec<_>>())
    }

    pub fn g_pos(&self, h: &HopfAlgebra) -> Result<usize, YdError> {
        h.grouplike_pos_from_exps(&self.g_exps)
            .ok_or_else(|| YdError::NotGrouplike(self.g_exps.clone()))
    }

    /// Pointwise product: (β, g)·(β′, g′) = (ββ′, gg′).
    pub fn mul(&self, other: &SimpleParam, h: &HopfAlgebra) -> SimpleParam {
        let orders = h.group_orders();
        let add = |a: &[u64], b: &[u64]| -> Vec<u64> {
            a.iter().zip(b).zip(orders).map(|((&x, &y), &m)| (x + y) % m).collect()
        };
        SimpleParam {
            beta_exps: add(&self.beta_exps, &other.beta_exps),
            g_exps: add(&self.g_exps, &other.g_exps),
        }
    }

    pub fn inv(&self, h: &HopfAlgebra) -> SimpleParam {
        let orders = h.group_orders();
        let neg = |a: &[u64]| -> Vec<u64> {
            a.iter().zip(orders).map(|(&x, &m)| (m - x % m) % m).collect()
        };
        SimpleParam {
            beta_exps: neg(&self.beta_exps),
            g_exps: neg(&self.g_exps),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.beta_exps.iter().all(|&e| e == 0) && self.g_exps.iter().all(|&e| e == 0)
    }
}

/// A finite-dimensional Yetter-Drinfel'd module over `parent`.
#[derive(Debug, Clone)]
pub struct YDModule {
    parent: Arc<HopfAlgebra>,
    dim: usize,
    action: Vec<CycMatrix>,
    coaction: Vec<CycMatrix>,
    /// Basis vectors in the space the module was carved from (H for spin
    /// modules, the ambient module for socles); rows are the vectors.
    basis_in_parent: Option<CycMatrix>,
    /// Spin provenance: basis vector k arose as generator `gen` applied to
    /// basis vector `from` (None for the seed vector). Lets Hom spaces be
    /// solved from the seed alone.
    witnesses: Option<Vec<Option<(usize, usize)>>>,
}

impl PartialEq for YDModule {
    /// Structural equality of the module data (action and coaction) over
    /// the identical parent; provenance fields are ignored.
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent)
            && self.dim == other.dim
            && self.action == other.action
            && self.coaction == other.coaction
    }
}

impl YDModule {
    pub fn parent(&self) -> &Arc<HopfAlgebra> {
        &self.parent
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, u: usize) -> &CycMatrix {
        &self.action[u]
    }

    pub fn coaction_component(&self, u: usize) -> &CycMatrix {
        &self.coaction[u]
    }

    pub fn basis_in_parent(&self) -> Option<&CycMatrix> {
        self.basis_in_parent.as_ref()
    }

    fn ell(&self) -> u64 {
        self.parent.ell_field()
    }

    /// Act by an algebra element given as a vector in the parent basis.
    pub fn act_by_vec(&self, h_elem: &[CycElem], m: &[CycElem]) -> Vec<CycElem> {
        let mut out = vec![CycElem::zero(self.ell()); self.dim];
        for (u, c) in h_elem.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = self.action[u].mul_vec(m);
            for (k, e) in w.iter().enumerate() {
                if !e.is_zero() {
                    out[k] = out[k].add(&c.mul(e));
                }
            }
        }
        out
    }

    /// Testing fixture: a copy with one coaction constant perturbed.
    pub fn with_perturbed_coaction(&self) -> YDModule {
        let mut m = self.clone();
        let u = self.parent.unit_index();
        let v = m.coaction[u].get(0, 0).add(&CycElem::one(self.ell()));
        m.coaction[u].set(0, 0, v);
        m
    }

    /// JSON descriptor: parent id, dimension, optional identified parameter
    /// and socle multiset.
    pub fn descriptor_json(
        &self,
        param: Option<&SimpleParam>,
        socle: Option<&[(SimpleParam, usize)]>,
    ) -> Value {
        let mut obj = json!({
            "parent": self.parent.name(),
            "dim": self.dim,
        });
        if let Some(p) = param {
            obj["param"] = json!({ "beta_exps": p.beta_exps, "g_exps": p.g_exps });
        }
        if let Some(s) = socle {
            obj["socle"] = json!(s
                .iter()
                .map(|(p, m)| json!({
                    "beta_exps": p.beta_exps,
                    "g_exps": p.g_exps,
                    "multiplicity": m
                }))
                .collect::<Vec<_>>());
        }
        obj
    }
}

// ---- the β-action ----

fn beta_values(h: &HopfAlgebra, beta: &Character) -> Vec<CycElem> {
    (0..h.dim()).map(|u| h.character_on_basis(beta, u)).collect()
}

fn beta_action_basis(
    h: &HopfAlgebra,
    beta_vals: &[CycElem],
    h_idx: usize,
    a: &[CycElem],
) -> Result<Vec<CycElem>, YdError> {
    let sinv = h.antipode_inverse()?;
    let mut out = vec![CycElem::zero(h.ell_field()); h.dim()];
    for (h1, h2, h3, c) in h.comult2_basis(h_idx) {
        let bv = &beta_vals[*h2];
        if bv.is_zero() {
            continue;
        }
        // b_{h3} * a * S^{-1}(b_{h1})
        let right = h.mult_vec(a, &sinv.col_vec(*h1));
        let term = h.mult_basis_vec(*h3, &right);
        let scale = c.mul(bv);
        for (k, t) in term.iter().enumerate() {
            if !t.is_zero() {
                out[k] = out[k].add(&scale.mul(t));
            }
        }
    }
    Ok(out)
}

/// Radford's β-action h ·_β a = Σ β(h₂) h₃ a S⁻¹(h₁) on vectors in H.
pub fn beta_action(
    h: &HopfAlgebra,
    beta: &Character,
    h_elem: &[CycElem],
    a: &[CycElem],
) -> Result<Vec<CycElem>, YdError> {
    let vals = beta_values(h, beta);
    let mut out = vec![CycElem::zero(h.ell_field()); h.dim()];
    for (u, c) in h_elem.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let w = beta_action_basis(h, &vals, u, a)?;
        for (k, e) in w.iter().enumerate() {
            if !e.is_zero() {
                out[k] = out[k].add(&c.mul(e));
            }
        }
    }
    Ok(out)
}

/// All of H as a YD module: action ·_β, coaction Δ.
pub fn yd_from_beta(h: &Arc<HopfAlgebra>, beta: &Character) -> Result<YDModule, YdError> {
    let dim = h.dim();
    let ell = h.ell_field();
    let vals = beta_values(h, beta);
    let mut action = Vec::with_capacity(dim);
    for u in 0..dim {
        let mut m = CycMatrix::zeros(dim, dim, ell);
        for v in 0..dim {
            let col = beta_action_basis(h, &vals, u, &h.basis_vec(v))?;
            for (k, e) in col.into_iter().enumerate() {
                m.set(k, v, e);
            }
        }
        action.push(m);
    }
    let mut coaction = vec![CycMatrix::zeros(dim, dim, ell); dim];
    for v in 0..dim {
        for (i, j, c) in h.comult_basis(v) {
            let nv = coaction[*j].get(*i, v).add(c);
            coaction[*j].set(*i, v, nv);
        }
    }
    Ok(YDModule {
        parent: h.clone(),
        dim,
        action,
        coaction,
        basis_in_parent: Some(CycMatrix::identity(dim, ell)),
        witnesses: None,
    })
}

// ---- Radford spin ----

/// The simple YD module H ·_β g: close {g} under the β-action of the
/// algebra generators, then extract action matrices and the coaction by
/// rewriting Δ(basis vector) over (module basis) ⊗ H.
pub fn spin_simple(h: &Arc<HopfAlgebra>, param: &SimpleParam) -> Result<YDModule, YdError> {
    let dim_h = h.dim();
    let ell = h.ell_field();
    let beta = param.beta(h);
    let g_pos = param.g_pos(h)?;
    let g_idx = h.grouplike_basis(g_pos);
    let vals = beta_values(h, &beta);

    let mut space = EchelonSpace::new_tracked(dim_h, ell);
    let mut raw: Vec<Vec<CycElem>> = Vec::new();
    let mut witnesses: Vec<Option<(usize, usize)>> = Vec::new();
    let seed = h.basis_vec(g_idx);
    space.insert(seed.clone());
    raw.push(seed);
    witnesses.push(None);

    let mut cursor = 0;
    while cursor < raw.len() {
        for (gen_pos, &gen_idx) in h.generators().iter().enumerate() {
            let w = beta_action_basis(h, &vals, gen_idx, &raw[cursor])?;
            if w.iter().all(|e| e.is_zero()) {
                continue;
            }
            if space.insert(w.clone()) {
                raw.push(w);
                witnesses.push(Some((cursor, gen_pos)));
            }
        }
        cursor += 1;
    }

    let dim = raw.len();
    // Action matrices over the raw ladder basis.
    let mut action = Vec::with_capacity(dim_h);
    for u in 0..dim_h {
        let mut m = CycMatrix::zeros(dim, dim, ell);
        for (k, v) in raw.iter().enumerate() {
            let w = beta_action_basis(h, &vals, u, v)?;
            let coords = space
                .coords_in_raw(&w)
                .ok_or_else(|| YdError::ClosureFailed(format!("action of basis {u} leaves the span")))?;
            for (t, e) in coords.into_iter().enumerate() {
                m.set(t, k, e);
            }
        }
        action.push(m);
    }
    // Coaction: column j of Delta(raw_k) must lie in the module span.
    let mut coaction = vec![CycMatrix::zeros(dim, dim, ell); dim_h];
    for (k, v) in raw.iter().enumerate() {
        let d = h.comult_matrix_of_vec(v);
        for j in 0..dim_h {
            let col = d.col_vec(j);
            if col.iter().all(|e| e.is_zero()) {
                continue;
            }
            let coords = space.coords_in_raw(&col).ok_or(YdError::CoidealViolation)?;
            for (t, e) in coords.into_iter().enumerate() {
                if !e.is_zero() {
                    coaction[j].set(t, k, e);
                }
            }
        }
    }
    let basis = CycMatrix::from_rows(raw, ell);
    Ok(YDModule {
        parent: h.clone(),
        dim,
        action,
        coaction,
        basis_in_parent: Some(basis),
        witnesses: Some(witnesses),
    })
}

// ---- compatibility and the dual action ----

/// Exact check of Σ h₁·m₀ ⊗ h₂ m₁ = Σ (h₂·m)₀ ⊗ (h₂·m)₁ h₁ on all basis
/// pairs.
pub fn yd_compatibility_check(m: &YDModule) -> bool {
    let h = m.parent.as_ref();
    let dim_h = h.dim();
    let ell = m.ell();
    for u in 0..dim_h {
        for v in 0..m.dim {
            let mut acc = CycMatrix::zeros(m.dim, dim_h, ell);
            for (p, q, c) in h.comult_basis(u) {
                // LHS: act(p) (C_j e_v) (x) b_q b_j.
                for j in 0..dim_h {
                    let col = m.coaction[j].col_vec(v);
                    if col.iter().all(|e| e.is_zero()) {
                        continue;
                    }
                    let moved = m.action[*p].mul_vec(&col);
                    for (t, ct) in h.mult_basis(*q, j) {
                        let scale = c.mul(ct);
                        for (row, e) in moved.iter().enumerate() {
                            if !e.is_zero() {
                                let nv = acc.get(row, *t).add(&scale.mul(e));
                                acc.set(row, *t, nv);
                            }
                        }
                    }
                }
                // RHS: (C_j act(q) e_v) (x) b_j b_p.
                let z = m.action[*q].col_vec(v);
                for j in 0..dim_h {
                    let col = m.coaction[j].mul_vec(&z);
                    if col.iter().all(|e| e.is_zero()) {
                        continue;
                    }
                    for (t, ct) in h.mult_basis(j, *p) {
                        let scale = c.mul(ct);
                        for (row, e) in col.iter().enumerate() {
                            if !e.is_zero() {
                                let nv = acc.get(row, *t).sub(&scale.mul(e));
                                acc.set(row, *t, nv);
                            }
                        }
                    }
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Dual action of a character: γ · m = Σ ⟨γ, m₁⟩ m₀, as a matrix.
pub fn dual_action_char(m: &YDModule, gamma: &Character) -> CycMatrix {
    let h = m.parent.as_ref();
    let mut acc = CycMatrix::zeros(m.dim, m.dim, m.ell());
    for u in 0..h.dim() {
        let gv = h.character_on_basis(gamma, u);
        if gv.is_zero() {
            continue;
        }
        acc = acc.add(&m.coaction[u].scale(&gv));
    }
    acc
}

/// Dual action of the dual-basis functional b_u^*: m ↦ (C_u) m.
pub fn dual_action_functional(m: &YDModule, u: usize) -> CycMatrix {
    m.coaction[u].clone()
}

// ---- tensor, twist, direct sum ----

/// Tensor product with action h·(m⊗n) = Σ h₁·m ⊗ h₂·n and coaction
/// δ(m⊗n) = Σ m₀ ⊗ n₀ ⊗ n₁ m₁.
pub fn tensor(m: &YDModule, n: &YDModule) -> Result<YDModule, YdError> {
    if !Arc::ptr_eq(&m.parent, &n.parent) {
        return Err(YdError::ParentMismatch);
    }
    let h = m.parent.as_ref();
    let dim_h = h.dim();
    let ell = m.ell();
    let dim = m.dim * n.dim;
    let kron = |a: &CycMatrix, b: &CycMatrix, scale: &CycElem, out: &mut CycMatrix| {
        for i1 in 0..a.rows() {
            for j1 in 0..a.cols() {
                let av = a.get(i1, j1);
                if av.is_zero() {
                    continue;
                }
                let sav = scale.mul(av);
                for i2 in 0..b.rows() {
                    for j2 in 0..b.cols() {
                        let bv = b.get(i2, j2);
                        if bv.is_zero() {
                            continue;
                        }
                        let r = i1 * b.rows() + i2;
                        let c = j1 * b.cols() + j2;
                        let nv = out.get(r, c).add(&sav.mul(bv));
                        out.set(r, c, nv);
                    }
                }
            }
        }
    };
    let mut action = Vec::with_capacity(dim_h);
    for u in 0..dim_h {
        let mut acc = CycMatrix::zeros(dim, dim, ell);
        for (p, q, c) in h.comult_basis(u) {
            kron(&m.action[*p], &n.action[*q], c, &mut acc);
        }
        action.push(acc);
    }
    let mut coaction = vec![CycMatrix::zeros(dim, dim, ell); dim_h];
    for j1 in 0..dim_h {
        if m.coaction[j1].is_zero() {
            continue;
        }
        for j2 in 0..dim_h {
            if n.coaction[j2].is_zero() {
                continue;
            }
            // second legs multiply as n_1 m_1 = b_{j2} b_{j1}.
            for (t, ct) in h.mult_basis(j2, j1) {
                kron(&m.coaction[j1], &n.coaction[j2], ct, &mut coaction[*t]);
            }
        }
    }
    Ok(YDModule {
        parent: m.parent.clone(),
        dim,
        action,
        coaction,
        basis_in_parent: None,
        witnesses: None,
    })
}

/// Twist by the parameter of a one-dimensional module: the action becomes
/// h ·′ m = Σ β(h₂) h₁ · m and the coaction leg is multiplied by g on the
/// left (tensoring with k_{(β,g)} on the right, transported along
/// M ⊗ k ≅ M).
pub fn twist(m: &YDModule, param: &SimpleParam) -> Result<YDModule, YdError> {
    let h = m.parent.as_ref();
    let one_dim = spin_simple(&m.parent, param)?;
    if one_dim.dim() != 1 {
        return Err(YdError::TwistParamNotOneDim);
    }
    let beta = param.beta(h);
    let g_idx = h.grouplike_basis(param.g_pos(h)?);
    let ell = m.ell();
    let dim_h = h.dim();
    let mut action = Vec::with_capacity(dim_h);
    for u in 0..dim_h {
        let mut acc = CycMatrix::zeros(m.dim, m.dim, ell);
        for (p, q, c) in h.comult_basis(u) {
            let bv = h.character_on_basis(&beta, *q);
            if bv.is_zero() {
                continue;
            }
            acc = acc.add(&m.action[*p].scale(&c.mul(&bv)));
        }
        action.push(acc);
    }
    let mut coaction = vec![CycMatrix::zeros(m.dim, m.dim, ell); dim_h];
    for j in 0..dim_h {
        if m.coaction[j].is_zero() {
            continue;
        }
        for (t, ct) in h.mult_basis(g_idx, j) {
            coaction[*t] = coaction[*t].add(&m.coaction[j].scale(ct));
        }
    }
    Ok(YDModule {
        parent: m.parent.clone(),
        dim: m.dim,
        action,
        coaction,
        basis_in_parent: m.basis_in_parent.clone(),
        witnesses: None,
    })
}

/// Block direct sum (test fixture and general plumbing).
pub fn direct_sum(m: &YDModule, n: &YDModule) -> Result<YDModule, YdError> {
    if !Arc::ptr_eq(&m.parent, &n.parent) {
        return Err(YdError::ParentMismatch);
    }
    let h = m.parent.as_ref();
    let dim = m.dim + n.dim;
    let ell = m.ell();
    let block = |a: &CycMatrix, b: &CycMatrix| -> CycMatrix {
        let mut out = CycMatrix::zeros(dim, dim, ell);
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if !a.get(i, j).is_zero() {
                    out.set(i, j, a.get(i, j).clone());
                }
            }
        }
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                if !b.get(i, j).is_zero() {
                    out.set(m.dim + i, m.dim + j, b.get(i, j).clone());
                }
            }
        }
        out
    };
    Ok(YDModule {
        parent: m.parent.clone(),
        dim,
        action: (0..h.dim()).map(|u| block(&m.action[u], &n.action[u])).collect(),
        coaction: (0..h.dim()).map(|u| block(&m.coaction[u], &n.coaction[u])).collect(),
        basis_in_parent: None,
        witnesses: None,
    })
}

// ---- Hom spaces ----

/// Basis of the space of YD morphisms M → N: linear maps commuting with the
/// action of the algebra generators and with the coaction.
///
/// When the source is a spin module, a map is determined by the image of
/// the seed vector, which must land in the coinvariant eigenspace
/// {w : δ(w) = w ⊗ g, group generators act by β}; candidates are then
/// propagated along the spin witnesses and the full constraint system is
/// solved on that small space. Otherwise a generic kernel refinement runs.
pub fn hom_yd(m: &YDModule, n: &YDModule) -> Result<Vec<CycMatrix>, YdError> {
    if !Arc::ptr_eq(&m.parent, &n.parent) {
        return Err(YdError::ParentMismatch);
    }
    if let Some(maps) = hom_via_seed(m, n) {
        return Ok(maps);
    }
    Ok(hom_generic(m, n))
}

/// Constraint residual for a candidate map: action commutators over the
/// generators plus coaction commutators over every parent basis element.
fn hom_violations(m: &YDModule, n: &YDModule, phi: &CycMatrix) -> Vec<CycElem> {
    let h = m.parent.as_ref();
    let mut out = Vec::new();
    for &gen in h.generators() {
        let r = n.action[gen].mul(phi).sub(&phi.mul(&m.action[gen]));
        for i in 0..r.rows() {
            out.extend(r.row(i).iter().cloned());
        }
    }
    for u in 0..h.dim() {
        if m.coaction[u].is_zero() && n.coaction[u].is_zero() {
            continue;
        }
        let r = n.coaction[u].mul(phi).sub(&phi.mul(&m.coaction[u]));
        for i in 0..r.rows() {
            out.extend(r.row(i).iter().cloned());
        }
    }
    out
}

fn hom_via_seed(m: &YDModule, n: &YDModule) -> Option<Vec<CycMatrix>> {
    let witnesses = m.witnesses.as_ref()?;
    let h = m.parent.as_ref();
    let ell = m.ell();
    let dim_h = h.dim();
    // Seed coaction must be delta(v0) = v0 (x) b_g for a single group-like g.
    let mut g_idx = None;
    for u in 0..dim_h {
        let col = m.coaction[u].col_vec(0);
        if col.iter().all(|e| e.is_zero()) {
            continue;
        }
        let pure = col[0].is_one() && col[1..].iter().all(|e| e.is_zero());
        if !pure || g_idx.is_some() {
            return None;
        }
        g_idx = Some(u);
    }
    let g_idx = g_idx?;
    // Seed must be a joint eigenvector of the group-like generators.
    let group_gens: Vec<usize> = h
        .generators()
        .iter()
        .copied()
        .filter(|&b| h.grouplike_pos_of_basis(b).is_some())
        .collect();
    let mut eigen: Vec<(usize, CycElem)> = Vec::new();
    for &gb in &group_gens {
        let col = m.action[gb].col_vec(0);
        if !col[1..].iter().all(|e| e.is_zero()) {
            return None;
        }
        eigen.push((gb, col[0].clone()));
    }

    // Candidate space W: coaction coinvariants for g with matching
    // group-generator eigenvalues. Rows of the constraint system:
    //   (C_u - [u = g] Id) w = 0 for all u;  (act(gb) - lambda Id) w = 0.
    let mut rows: Vec<Vec<CycElem>> = Vec::new();
    let push_matrix_rows = |rows: &mut Vec<Vec<CycElem>>, mat: &CycMatrix| {
        for i in 0..mat.rows() {
            if mat.row(i).iter().any(|e| !e.is_zero()) {
                rows.push(mat.row(i).to_vec());
            }
        }
    };
    for u in 0..dim_h {
        let mut c = n.coaction[u].clone();
        if u == g_idx {
            c = c.sub(&CycMatrix::identity(n.dim, ell));
        }
        push_matrix_rows(&mut rows, &c);
    }
    for (gb, lambda) in &eigen {
        let c = n.action[*gb].sub(&CycMatrix::identity(n.dim, ell).scale(lambda));
        push_matrix_rows(&mut rows, &c);
    }
    let w_basis = if rows.is_empty() {
        // No constraints: the whole target (can only happen for trivial H).
        (0..n.dim)
            .map(|i| {
                let mut v = vec![CycElem::zero(ell); n.dim];
                v[i] = CycElem::one(ell);
                v
            })
            .collect::<Vec<_>>()
    } else {
        CycMatrix::from_rows(rows, ell).nullspace()
    };
    if w_basis.is_empty() {
        return Some(Vec::new());
    }

    // Propagate each candidate seed image along the witnesses.
    let candidates: Vec<CycMatrix> = w_basis
        .iter()
        .map(|w| {
            let mut img: Vec<Vec<CycElem>> = Vec::with_capacity(m.dim);
            img.push(w.clone());
            for k in 1..m.dim {
                let (from, gen_pos) = witnesses[k].expect("non-seed vector has a witness");
                let gen_idx = h.generators()[gen_pos];
                img.push(n.action[gen_idx].mul_vec(&img[from]));
            }
            let mut phi = CycMatrix::zeros(n.dim, m.dim, ell);
            for (k, col) in img.iter().enumerate() {
                for (r, e) in col.iter().enumerate() {
                    if !e.is_zero() {
                        phi.set(r, k, e.clone());
                    }
                }
            }
            phi
        })
        .collect();

    // Solve the full constraint system over the candidate coefficients.
    let violations: Vec<Vec<CycElem>> = candidates.iter().map(|c| hom_violations(m, n, c)).collect();
    let nrows = violations[0].len();
    let mut sys = CycMatrix::zeros(nrows, candidates.len(), ell);
    for (j, v) in violations.iter().enumerate() {
        for (i, e) in v.iter().enumerate() {
            if !e.is_zero() {
                sys.set(i, j, e.clone());
            }
        }
    }
    let kernel = sys.nullspace();
    let maps = kernel
        .into_iter()
        .map(|coeffs| {
            let mut acc = CycMatrix::zeros(n.dim, m.dim, ell);
            for (j, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&candidates[j].scale(c));
                }
            }
            acc
        })
        .collect();
    Some(maps)
}

fn hom_generic(m: &YDModule, n: &YDModule) -> Vec<CycMatrix> {
    let h = m.parent.as_ref();
    let ell = m.ell();
    // Kernel refinement: start from all elementary maps and intersect the
    // kernel of each constraint, generators first.
    let mut basis: Vec<CycMatrix> = Vec::with_capacity(m.dim * n.dim);
    for t in 0..n.dim {
        for s in 0..m.dim {
            let mut e = CycMatrix::zeros(n.dim, m.dim, ell);
            e.set(t, s, CycElem::one(ell));
            basis.push(e);
        }
    }
    let mut constraints: Vec<(CycMatrix, CycMatrix)> = Vec::new();
    for &gen in h.generators() {
        constraints.push((n.action[gen].clone(), m.action[gen].clone()));
    }
    for u in 0..h.dim() {
        if m.coaction[u].is_zero() && n.coaction[u].is_zero() {
            continue;
        }
        constraints.push((n.coaction[u].clone(), m.coaction[u].clone()));
    }
    for (p, q) in &constraints {
        if basis.is_empty() {
            break;
        }
        let residuals: Vec<CycMatrix> = basis
            .iter()
            .map(|b| p.mul(b).sub(&b.mul(q)))
            .collect();
        let mut sys = CycMatrix::zeros(n.dim * m.dim, basis.len(), ell);
        for (j, r) in residuals.iter().enumerate() {
            for i in 0..n.dim {
                for s in 0..m.dim {
                    let e = r.get(i, s);
                    if !e.is_zero() {
                        sys.set(i * m.dim + s, j, e.clone());
                    }
                }
            }
        }
        let kernel = sys.nullspace();
        basis = kernel
            .into_iter()
            .map(|coeffs| {
                let mut acc = CycMatrix::zeros(n.dim, m.dim, ell);
                for (j, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        acc = acc.add(&basis[j].scale(c));
                    }
                }
                acc
            })
            .collect();
    }
    basis
}

// ---- the classified simples and the socle ----

/// The complete list of simples of the parent, one spin per parameter
/// (β, g) ∈ Ĝ × G, cached for socle computations.
pub struct SimpleFamily {
    parent: Arc<HopfAlgebra>,
    items: Vec<(SimpleParam, YDModule)>,
}

impl SimpleFamily {
    pub fn new(parent: &Arc<HopfAlgebra>) -> Result<Self, YdError> {
        let grid = crate::hopf::mixed_radix_grid(parent.group_orders());
        let mut items = Vec::new();
        for g_exps in &grid {
            for beta_exps in &grid {
                let param = SimpleParam::new(beta_exps.clone(), g_exps.clone());
                let module = spin_simple(parent, &param)?;
                items.push((param, module));
            }
        }
        Ok(SimpleFamily {
            parent: parent.clone(),
            items,
        })
    }

    pub fn parent(&self) -> &Arc<HopfAlgebra> {
        &self.parent
    }

    pub fn items(&self) -> &[(SimpleParam, YDModule)] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, param: &SimpleParam) -> Option<&YDModule> {
        self.items.iter().find(|(p, _)| p == param).map(|(_, m)| m)
    }

    /// Schur guard for the splitting-field assumption: every simple must
    /// have a one-dimensional endomorphism space.
    pub fn verify_schur(&self) -> Result<(), YdError> {
        for (p, s) in &self.items {
            let endo = hom_yd(s, s)?;
            if endo.len() != 1 {
                return Err(YdError::ClosureFailed(format!(
                    "End(S) has dimension {} for param {:?}",
                    endo.len(),
                    p
                )));
            }
        }
        Ok(())
    }
}

/// Socle of a module: the sum of the images of all YD morphisms from the
/// classified simples, together with the multiset of parameters weighted by
/// dim Hom(S, M).
pub struct SocleResult {
    pub module: YDModule,
    pub multiset: Vec<(SimpleParam, usize)>,
}

pub fn socle(m: &YDModule, family: &SimpleFamily) -> Result<SocleResult, YdError> {
    if !Arc::ptr_eq(&m.parent, &family.parent) {
        return Err(YdError::ParentMismatch);
    }
    let ell = m.ell();
    let mut multiset: Vec<(SimpleParam, usize)> = Vec::new();
    let mut space = EchelonSpace::new(m.dim, ell);
    for (param, s) in &family.items {
        let maps = hom_yd(s, m)?;
        if maps.is_empty() {
            continue;
        }
        multiset.push((param.clone(), maps.len()));
        for phi in &maps {
            for k in 0..s.dim {
                space.insert(phi.col_vec(k));
            }
        }
    }
    multiset.sort_by(|a, b| (&a.0).cmp(&b.0));
    // Induced module structure on the echelonized socle basis.
    let h = m.parent.as_ref();
    let dim = space.rank();
    let mut action = Vec::with_capacity(h.dim());
    let mut coaction = Vec::with_capacity(h.dim());
    for u in 0..h.dim() {
        let mut a = CycMatrix::zeros(dim, dim, ell);
        let mut c = CycMatrix::zeros(dim, dim, ell);
        for (k, row) in space.rows().iter().enumerate() {
            let av = m.action[u].mul_vec(row);
            let coords = space.coords_in_rref(&av).ok_or(YdError::NotClosed)?;
            for (t, e) in coords.into_iter().enumerate() {
                a.set(t, k, e);
            }
            let cv = m.coaction[u].mul_vec(row);
            let coords = space.coords_in_rref(&cv).ok_or(YdError::NotClosed)?;
            for (t, e) in coords.into_iter().enumerate() {
                c.set(t, k, e);
            }
        }
        action.push(a);
        coaction.push(c);
    }
    let basis = CycMatrix::from_rows(space.rows().to_vec(), ell);
    Ok(SocleResult {
        module: YDModule {
            parent: m.parent.clone(),
            dim,
            action,
            coaction,
            basis_in_parent: Some(basis),
            witnesses: None,
        },
        multiset,
    })
}

/// A module is simple iff its socle is everything with a single
/// multiplicity-one parameter.
pub fn is_simple(m: &YDModule, family: &SimpleFamily) -> Result<bool, YdError> {
    let s = socle(m, family)?;
    Ok(s.module.dim() == m.dim() && s.multiset.len() == 1 && s.multiset[0].1 == 1)
}

/// Identify a simple module by its Radford parameter.
pub fn identify_simple(m: &YDModule, family: &SimpleFamily) -> Result<SimpleParam, YdError> {
    let s = socle(m, family)?;
    if s.module.dim() == m.dim() && s.multiset.len() == 1 && s.multiset[0].1 == 1 {
        Ok(s.multiset[0].0.clone())
    } else {
        Err(YdError::NotSimple)
    }
}
