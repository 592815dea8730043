//! Prefix order, gcd and lcm on the whole group.

use crate::error::{BraidError, Result};
use crate::normal_form::{normal_form, LeftNormalForm};
use crate::simple::SimpleElement;
use crate::words::{ensure_same_strands, BraidWord};

pub fn is_positive(w: &BraidWord) -> bool {
    normal_form(w).inf() >= 0
}

/// `a ≼ b`: whether `a^{-1} b` is a positive braid.
pub fn prefix_divides(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    ensure_same_strands(a, b)?;
    Ok(nf_prefix_divides(&normal_form(a), &normal_form(b)))
}

pub fn nf_prefix_divides(a: &LeftNormalForm, b: &LeftNormalForm) -> bool {
    a.inverse()
        .product(b)
        .map(|q| q.inf() >= 0)
        .unwrap_or(false)
}

/// The largest simple prefix of a positive normal form.
fn leading_simple(x: &LeftNormalForm) -> SimpleElement {
    if x.inf() > 0 {
        SimpleElement::delta(x.strands())
    } else {
        x.factors()
            .first()
            .cloned()
            .unwrap_or_else(|| SimpleElement::identity(x.strands()))
    }
}

/// `s^{-1} x` for a positive `x` with `s ≼ x ∧ Δ`.
fn strip_prefix(x: &LeftNormalForm, s: &SimpleElement) -> LeftNormalForm {
    let n = x.strands();
    if x.inf() > 0 {
        // s^{-1} Δ^p A = ∂s · Δ^{p-1} A
        let mut rest =
            LeftNormalForm::from_parts(n, x.inf() - 1, x.factors().to_vec()).expect("same strands");
        rest.mul_simple_left(&s.right_complement());
        rest
    } else {
        let first = &x.factors()[0];
        let mut rest = LeftNormalForm::from_parts(n, 0, x.factors()[1..].to_vec()).expect("same strands");
        rest.mul_simple_left(&s.left_quotient(first));
        rest
    }
}

/// Greatest common prefix of two normal forms.
pub fn nf_gcd(x: &LeftNormalForm, y: &LeftNormalForm) -> Result<LeftNormalForm> {
    if x.strands() != y.strands() {
        return Err(BraidError::StrandMismatch {
            left: x.strands(),
            right: y.strands(),
        });
    }
    // Left multiplication by Δ^{-q} preserves ≼, and makes both arguments positive
    // with at least one of infimum zero.
    let q = x.inf().min(y.inf());
    let mut a = x.clone();
    let mut b = y.clone();
    a.mul_delta_left(-q);
    b.mul_delta_left(-q);
    let mut g = LeftNormalForm::identity(x.strands());
    loop {
        let s = leading_simple(&a).meet(&leading_simple(&b));
        if s.is_identity() {
            break;
        }
        g.mul_simple_right(&s);
        a = strip_prefix(&a, &s);
        b = strip_prefix(&b, &s);
    }
    g.mul_delta_left(q);
    Ok(g)
}

/// Least common multiple in the prefix order, through suffix gcds:
/// `x ∨ y = Δ^{2M} · (x^{-1}Δ^{2M} ∧_suffix y^{-1}Δ^{2M})^{-1}`.
pub fn nf_lcm(x: &LeftNormalForm, y: &LeftNormalForm) -> Result<LeftNormalForm> {
    if x.strands() != y.strands() {
        return Err(BraidError::StrandMismatch {
            left: x.strands(),
            right: y.strands(),
        });
    }
    let top = x.sup().max(y.sup()).max(0);
    let two_m = top + top.rem_euclid(2);
    let mut a = x.inverse();
    let mut b = y.inverse();
    a.mul_delta_right(two_m);
    b.mul_delta_right(two_m);
    let suffix_gcd = nf_gcd(&a.reverse(), &b.reverse())?.reverse();
    let mut out = suffix_gcd.inverse();
    out.mul_delta_left(two_m);
    Ok(out)
}

pub fn gcd(x: &BraidWord, y: &BraidWord) -> Result<BraidWord> {
    ensure_same_strands(x, y)?;
    Ok(nf_gcd(&normal_form(x), &normal_form(y))?.to_word())
}

pub fn lcm(x: &BraidWord, y: &BraidWord) -> Result<BraidWord> {
    ensure_same_strands(x, y)?;
    Ok(nf_lcm(&normal_form(x), &normal_form(y))?.to_word())
}

/// `d = 1 ∧ x ∧ x^2 ∧ ⋯ ∧ x^{k-1}`. If `x^k = 1` then `x d = d`.
pub fn torsion_witness(x: &BraidWord, k: i64) -> Result<BraidWord> {
    if k < 1 {
        return Err(BraidError::InvalidArgument(format!(
            "torsion witness needs k >= 1, got {k}"
        )));
    }
    let base = normal_form(x);
    let mut d = LeftNormalForm::identity(x.strands());
    let mut pow = LeftNormalForm::identity(x.strands());
    for _ in 1..k {
        pow = pow.product(&base)?;
        d = nf_gcd(&d, &pow)?;
    }
    Ok(d.to_word())
}
