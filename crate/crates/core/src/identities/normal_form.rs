//! The conjugation normal form `u_n = (1+g)·φ_n·(1+g)^-1`,
//! `v_n = (1+g)^-1·φ_n·(1+g)`, checked exactly in the partially commutative
//! group on `h, g, G1` and at truncation in the series ring.

use serde::Serialize;

use super::eval::{eval_expr, Env, EvalTarget, PcTarget, SeriesTarget};
use super::expr::WordExpr;
use super::pcword::PartiallyCommutativeWord as Pc;
use super::recursion::{build_u_v, build_w, phi_n, SeriesShapeDescriptor};
use crate::error::Result;
use crate::series::{ApproxJson, ApproxSeries, Series};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicReport {
    pub n: usize,
    pub descriptor: String,
    pub u_form_holds: bool,
    pub v_form_holds: bool,
    pub phi_in_h_g_subgroup: bool,
    pub phi_length: u64,
}

impl SymbolicReport {
    pub fn holds(&self) -> bool {
        self.u_form_holds && self.v_form_holds && self.phi_in_h_g_subgroup
    }
}

fn pc_u_v(n: usize, desc: &SeriesShapeDescriptor) -> Result<(Pc, Pc)> {
    let g1 = Pc::one_plus_g();
    let w = build_w(n, desc);
    let env_u = Env::new().with_var("x", Pc::h().conjugate_by(&g1)).with_var("y", Pc::g());
    let env_v = Env::new().with_var("x", Pc::h().conjugate_by(&g1.invert())).with_var("y", Pc::g());
    Ok((eval_expr(&w, &PcTarget, &env_u)?, eval_expr(&w, &PcTarget, &env_v)?))
}

fn pc_phi(phi: &WordExpr) -> Result<Pc> {
    eval_expr(phi, &PcTarget, &Env::new().with_var("h", Pc::h()).with_var("g", Pc::g()))
}

/// Exact check of both normal forms against a caller-supplied `φ_n` word.
pub fn verify_lemma5_symbolic_with_phi(
    n: usize,
    desc: &SeriesShapeDescriptor,
    phi: &WordExpr,
) -> Result<SymbolicReport> {
    let g1 = Pc::one_plus_g();
    let (u, v) = pc_u_v(n, desc)?;
    let p = pc_phi(phi)?;
    Ok(SymbolicReport {
        n,
        descriptor: desc.to_string(),
        u_form_holds: u == p.conjugate_by(&g1),
        v_form_holds: v == p.conjugate_by(&g1.invert()),
        phi_in_h_g_subgroup: p.is_in_h_g_subgroup(),
        phi_length: p.length(),
    })
}

pub fn verify_lemma5_symbolic(n: usize, desc: &SeriesShapeDescriptor) -> Result<SymbolicReport> {
    verify_lemma5_symbolic_with_phi(n, desc, &phi_n(n, desc))
}

/// `[φ_n, u_n] = G1·[v_n, φ_n]·G1^-1`, with `u_n`, `v_n` built from `w_n`.
pub fn verify_alpha_containment(n: usize, desc: &SeriesShapeDescriptor) -> Result<bool> {
    let t = PcTarget;
    let (u, v) = pc_u_v(n, desc)?;
    let p = pc_phi(&phi_n(n, desc))?;
    let comm = |a: &Pc, b: &Pc| -> Result<Pc> {
        let ab = t.mul(a, b)?;
        t.mul(&t.mul(&ab, &a.invert())?, &b.invert())
    };
    Ok(comm(&p, &u)? == comm(&v, &p)?.conjugate_by(&Pc::one_plus_g()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualSide {
    /// Number of terms of `(1+g)·φ_n` (resp. `φ_n·(1+g)`) strictly below the guarantee.
    pub verified_terms: usize,
    pub guarantee: Option<String>,
    /// Least word of the residual below the guarantee, if any survives.
    pub residual_min: Option<String>,
    pub residual: ApproxJson,
    pub success: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericReport {
    pub n: usize,
    pub descriptor: String,
    pub depth: usize,
    pub h: String,
    pub g: String,
    pub phi: String,
    /// `(1+g)·φ_n − u_n·(1+g)`
    pub u_side: ResidualSide,
    /// `φ_n·(1+g) − (1+g)·v_n`
    pub v_side: ResidualSide,
    pub success: bool,
}

fn side(exact_side: &ApproxSeries, delta: ApproxSeries) -> Result<ResidualSide> {
    let verified_terms = match delta.guarantee() {
        None => exact_side.terms().len(),
        Some(g) => exact_side.terms().truncated_below(g)?.len(),
    };
    let residual_min = if delta.terms().is_zero() { None } else { Some(delta.terms().d()?.to_string()) };
    let success = residual_min.is_none() && verified_terms > 0;
    Ok(ResidualSide {
        verified_terms,
        guarantee: delta.guarantee().map(ToString::to_string),
        residual_min,
        residual: delta.to_json()?,
        success,
    })
}

/// Truncated check with a caller-supplied `φ_n` word (the negative control
/// passes a wrong word here).
pub fn verify_lemma5_numeric_with_phi(
    n: usize,
    desc: &SeriesShapeDescriptor,
    phi: &WordExpr,
    h: &Series,
    g: &Series,
    target: &SeriesTarget,
) -> Result<NumericReport> {
    let twist = &target.twist;
    let (u, v) = build_u_v(n, desc, h, g, target)?;
    let env = Env::new()
        .with_var("h", ApproxSeries::exact(h.clone()))
        .with_var("g", ApproxSeries::exact(g.clone()));
    let p = eval_expr(phi, target, &env)?;
    let opg = ApproxSeries::exact(Series::one().add(g));
    let left = opg.mul(&p, twist)?;
    let right = p.mul(&opg, twist)?;
    let u_delta = left.sub(&u.mul(&opg, twist)?)?;
    let v_delta = right.sub(&opg.mul(&v, twist)?)?;
    let u_side = side(&left, u_delta)?;
    let v_side = side(&right, v_delta)?;
    let success = u_side.success && v_side.success;
    Ok(NumericReport {
        n,
        descriptor: desc.to_string(),
        depth: target.depth,
        h: h.to_string(),
        g: g.to_string(),
        phi: phi.to_string(),
        u_side,
        v_side,
        success,
    })
}

pub fn verify_lemma5_numeric(
    n: usize,
    desc: &SeriesShapeDescriptor,
    h: &Series,
    g: &Series,
    target: &SeriesTarget,
) -> Result<NumericReport> {
    verify_lemma5_numeric_with_phi(n, desc, &phi_n(n, desc), h, g, target)
}

/// The wrong word `h·g·h` standing in for `φ_1`.
pub fn mutated_phi_1() -> WordExpr {
    WordExpr::product(vec![WordExpr::var("h"), WordExpr::var("g"), WordExpr::var("h")])
}
