//! Quasisymmetric functions in the fundamental basis, exact polynomial
//! expansions in finitely many variables, and the tableau generating
//! functions compared against them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{comp_of, complement, set_of, sub_compositions, Composition, SkewShape};
use crate::tableaux::{
    descent_set, generate_fillings, generate_set, generate_sit, DescentKind, FillingFamily,
};

fn serialize_int<S: Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match c.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&c.to_string()),
    }
}

struct Coeff<'a>(&'a BigInt);

impl Serialize for Coeff<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_int(self.0, s)
    }
}

/// A homogeneous quasisymmetric function `Σ c_α F_α` of fixed degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QSymF {
    degree: usize,
    coeffs: BTreeMap<Composition, BigInt>,
}

impl QSymF {
    pub fn zero(degree: usize) -> Self {
        QSymF { degree, coeffs: BTreeMap::new() }
    }

    /// The basis element `F_α`.
    pub fn fundamental(alpha: Composition) -> Self {
        let mut f = QSymF::zero(alpha.size());
        f.coeffs.insert(alpha, BigInt::one());
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, alpha: &Composition) -> BigInt {
        self.coeffs.get(alpha).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.coeffs.iter()
    }

    /// Adds `c F_α`; `α` must have the element's degree.
    pub fn add_term(&mut self, alpha: Composition, c: BigInt) {
        assert_eq!(alpha.size(), self.degree, "composition {alpha} has the wrong degree");
        let entry = self.coeffs.entry(alpha.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&alpha);
        }
    }

    /// Sum of the absolute values of the coefficients.
    pub fn weight(&self) -> BigInt {
        self.coeffs.values().map(BigInt::abs).sum()
    }
}

impl Add for QSymF {
    type Output = QSymF;

    fn add(mut self, rhs: QSymF) -> QSymF {
        self += rhs;
        self
    }
}

impl AddAssign for QSymF {
    fn add_assign(&mut self, rhs: QSymF) {
        if self.is_zero() && self.degree != rhs.degree {
            self.degree = rhs.degree;
        }
        for (a, c) in rhs.coeffs {
            self.add_term(a, c);
        }
    }
}

impl Neg for QSymF {
    type Output = QSymF;

    fn neg(mut self) -> QSymF {
        for c in self.coeffs.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for QSymF {
    type Output = QSymF;

    fn sub(self, rhs: QSymF) -> QSymF {
        self + (-rhs)
    }
}

impl Mul<QSymF> for i64 {
    type Output = QSymF;

    fn mul(self, mut rhs: QSymF) -> QSymF {
        if self == 0 {
            return QSymF::zero(rhs.degree);
        }
        for c in rhs.coeffs.values_mut() {
            *c *= self;
        }
        rhs
    }
}

impl fmt::Display for QSymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (a, c) in &self.coeffs {
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let sep = if first { "" } else { " " };
            let num = if mag.is_one() { String::new() } else { mag.to_string() };
            let gap = if first || sign.is_empty() { "" } else { " " };
            write!(f, "{sep}{sign}{gap}{num}F{a}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for QSymF {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a Composition, &'a BigInt);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut st = s.serialize_struct("Term", 2)?;
                st.serialize_field("comp", self.0)?;
                st.serialize_field("coeff", &Coeff(self.1))?;
                st.end()
            }
        }
        let terms: Vec<Term> = self.coeffs.iter().map(|(a, c)| Term(a, c)).collect();
        let mut st = s.serialize_struct("QSymF", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `ψ(F_α) = F_{α^c}`.
pub fn psi(f: &QSymF) -> QSymF {
    let mut out = QSymF::zero(f.degree);
    for (a, c) in &f.coeffs {
        out.add_term(complement(a), c.clone());
    }
    out
}

/// An exact polynomial in an ordered list of named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// `x1, …, xk`.
pub fn x_vars(k: usize) -> Vec<String> {
    (1..=k).map(|j| format!("x{j}")).collect()
}

/// `x1, …, xa, y1, …, yb`: two alphabets, X before Y.
pub fn xy_vars(a: usize, b: usize) -> Vec<String> {
    let mut v = x_vars(a);
    v.extend((1..=b).map(|j| format!("y{j}")));
    v
}

impl TruncatedPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        TruncatedPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: Vec<String>) -> Self {
        let mut p = TruncatedPoly::zero(vars);
        p.add_monomial(vec![0; p.vars.len()], BigInt::one());
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_monomial(&mut self, exp: Vec<u32>, c: BigInt) {
        assert_eq!(exp.len(), self.vars.len(), "exponent vector length");
        let entry = self.terms.entry(exp.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// The same polynomial in a larger variable list, its variables placed
    /// starting at `offset`.
    pub fn embed(&self, vars: Vec<String>, offset: usize) -> TruncatedPoly {
        assert!(offset + self.vars.len() <= vars.len(), "embedding out of range");
        let mut out = TruncatedPoly::zero(vars);
        for (e, c) in &self.terms {
            let mut exp = vec![0; out.vars.len()];
            exp[offset..offset + e.len()].copy_from_slice(e);
            out.add_monomial(exp, c.clone());
        }
        out
    }
}

impl Add for TruncatedPoly {
    type Output = TruncatedPoly;

    fn add(mut self, rhs: TruncatedPoly) -> TruncatedPoly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        for (e, c) in rhs.terms {
            self.add_monomial(e, c);
        }
        self
    }
}

impl Sub for TruncatedPoly {
    type Output = TruncatedPoly;

    fn sub(mut self, rhs: TruncatedPoly) -> TruncatedPoly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        for (e, c) in rhs.terms {
            self.add_monomial(e, -c);
        }
        self
    }
}

impl Mul for &TruncatedPoly {
    type Output = TruncatedPoly;

    fn mul(self, rhs: &TruncatedPoly) -> TruncatedPoly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut out = TruncatedPoly::zero(self.vars.clone());
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let exp = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_monomial(exp, c * d);
            }
        }
        out
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            let mono = mono.join("*");
            parts.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => c.to_string(),
                (false, true) => mono,
                (false, false) => format!("{c}*{mono}"),
            });
        }
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}

impl Serialize for TruncatedPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a Vec<u32>, &'a BigInt);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("exp", self.0)?;
                m.serialize_entry("coeff", &Coeff(self.1))?;
                m.end()
            }
        }
        let terms: Vec<Term> = self.terms.iter().map(|(e, c)| Term(e, c)).collect();
        let mut st = s.serialize_struct("TruncatedPoly", 2)?;
        st.serialize_field("vars", &self.vars)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `F_α` in the first `vars` variables: chains `i1 <= … <= in` with strict
/// rises at `set(α)`.
pub fn fundamental_poly(alpha: &Composition, vars: usize) -> TruncatedPoly {
    let n = alpha.size();
    let strict = set_of(alpha);
    let mut out = TruncatedPoly::zero(x_vars(vars));
    let mut exp = vec![0u32; vars];

    fn rec(
        j: usize,
        n: usize,
        low: usize,
        strict: &std::collections::BTreeSet<usize>,
        exp: &mut Vec<u32>,
        out: &mut TruncatedPoly,
    ) {
        if j > n {
            out.add_monomial(exp.clone(), BigInt::one());
            return;
        }
        for v in low..exp.len() {
            exp[v] += 1;
            let next = if strict.contains(&j) { v + 1 } else { v };
            rec(j + 1, n, next, strict, exp, out);
            exp[v] -= 1;
        }
    }

    rec(1, n, 0, &strict, &mut exp, &mut out);
    out
}

/// Linear extension of [`fundamental_poly`].
pub fn to_poly(f: &QSymF, vars: usize) -> TruncatedPoly {
    let mut out = TruncatedPoly::zero(x_vars(vars));
    for (a, c) in &f.coeffs {
        let p = fundamental_poly(a, vars);
        for (e, d) in p.terms {
            out.add_monomial(e, c * d);
        }
    }
    out
}

/// `Σ F_{comp(Des(T))}` over `SIT(shape)`, or over `SET(shape)` when
/// `extended` is set.
pub fn char_tableaux(shape: &SkewShape, kind: DescentKind, extended: bool) -> QSymF {
    let basis = if extended { generate_set(shape) } else { generate_sit(shape) };
    char_of(&basis, shape.size(), kind)
}

/// Characteristic of an explicit list of standard tableaux of size `n`.
pub fn char_of(basis: &[crate::tableaux::Tableau], n: usize, kind: DescentKind) -> QSymF {
    let mut out = QSymF::zero(n);
    for t in basis {
        let alpha = comp_of(&descent_set(t, kind), n).expect("descents lie in 1..n");
        out.add_term(alpha, BigInt::one());
    }
    out
}

/// `Σ x^T` over the family's fillings with entries at most `vars`.
pub fn gf_fillings(shape: &SkewShape, family: FillingFamily, vars: usize) -> TruncatedPoly {
    let mut out = TruncatedPoly::zero(x_vars(vars));
    for t in generate_fillings(shape, family, vars) {
        let mut exp = vec![0u32; vars];
        for (_, v) in t.entries() {
            exp[v - 1] += 1;
        }
        out.add_monomial(exp, BigInt::one());
    }
    out
}

/// Skew Schur polynomial `s_{λ/μ}(x1, …, x_vars)`, computed as a chain of
/// horizontal strips `μ = ν0 ⊆ ν1 ⊆ … ⊆ ν_vars = λ`.
pub fn skew_schur_poly(lambda: &Composition, mu: &Composition, vars: usize) -> Result<TruncatedPoly> {
    for p in [lambda, mu] {
        if !p.is_partition() {
            return Err(Error::NotPartition(p.clone()));
        }
    }
    if !crate::shapes::contains(mu, lambda) {
        return Err(Error::NotContained { inner: mu.clone(), outer: lambda.clone() });
    }
    let len = lambda.len();
    let lam: Vec<usize> = lambda.parts().to_vec();
    let mut start: Vec<usize> = (1..=len).map(|i| mu.part(i)).collect();
    let mut out = TruncatedPoly::zero(x_vars(vars));
    let mut exp = vec![0u32; vars];

    // Extend ν row by row: prev[i] <= next[i] <= min(λ_i, prev[i-1]).
    fn strips(
        k: usize,
        prev: &mut Vec<usize>,
        lam: &[usize],
        exp: &mut Vec<u32>,
        out: &mut TruncatedPoly,
    ) {
        if k == exp.len() {
            if prev.as_slice() == lam {
                out.add_monomial(exp.clone(), BigInt::one());
            }
            return;
        }
        let mut next = prev.clone();
        rows(0, k, prev, &mut next, lam, exp, out);
    }

    fn rows(
        i: usize,
        k: usize,
        prev: &mut Vec<usize>,
        next: &mut Vec<usize>,
        lam: &[usize],
        exp: &mut Vec<u32>,
        out: &mut TruncatedPoly,
    ) {
        if i == lam.len() {
            let added: usize = next.iter().zip(prev.iter()).map(|(a, b)| a - b).sum();
            exp[k] = added as u32;
            let mut nu = next.clone();
            strips(k + 1, &mut nu, lam, exp, out);
            exp[k] = 0;
            return;
        }
        let hi = if i == 0 { lam[0] } else { lam[i].min(prev[i - 1]) };
        for v in prev[i]..=hi {
            next[i] = v;
            rows(i + 1, k, prev, next, lam, exp, out);
        }
        next[i] = prev[i];
    }

    if len == 0 {
        out.add_monomial(exp, BigInt::one());
        return Ok(out);
    }
    strips(0, &mut start, &lam, &mut exp, &mut out);
    Ok(out)
}

/// Complete homogeneous or elementary symmetric polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    H,
    E,
}

fn sym_poly(kind: SymKind, k: usize, vars: usize) -> TruncatedPoly {
    let mut out = TruncatedPoly::zero(x_vars(vars));
    let cap = match kind {
        SymKind::H => k as u32,
        SymKind::E => 1,
    };
    let mut exp = vec![0u32; vars];

    fn rec(j: usize, left: u32, cap: u32, exp: &mut Vec<u32>, out: &mut TruncatedPoly) {
        if j == exp.len() {
            if left == 0 {
                out.add_monomial(exp.clone(), BigInt::one());
            }
            return;
        }
        for e in 0..=cap.min(left) {
            exp[j] = e;
            rec(j + 1, left - e, cap, exp, out);
        }
        exp[j] = 0;
    }

    rec(0, k as u32, cap, &mut exp, &mut out);
    out
}

/// `Π_i h_{α_i − β_i}` or `Π_i e_{α_i − β_i}` for a shape with `ℓ(α) = ℓ(β)`.
pub fn hooked_product(shape: &SkewShape, kind: SymKind, vars: usize) -> Result<TruncatedPoly> {
    if shape.outer().len() != shape.inner().len() {
        return Err(Error::LengthMismatch {
            outer: shape.outer().clone(),
            inner: shape.inner().clone(),
        });
    }
    let mut out = TruncatedPoly::one(x_vars(vars));
    for r in 1..=shape.rows() {
        out = &out * &sym_poly(kind, shape.row_len(r), vars);
    }
    Ok(out)
}

/// Compares the filling generating function of `α` over the alphabet X then
/// Y with `Σ_{β ⊆ α} gf(β)(X) · gf(α/β)(Y)`. Only the dI and rdI families are
/// covered by the identity.
pub fn two_alphabet_check(alpha: &Composition, kind: DescentKind, xvars: usize, yvars: usize) -> Result<bool> {
    if !matches!(kind, DescentKind::Di | DescentKind::Rdi) {
        return Err(Error::Parse(format!("two-alphabet identity is stated for di and rdi, not {kind}")));
    }
    let family = FillingFamily::for_kind(kind, false);
    let vars = xy_vars(xvars, yvars);
    let lhs = gf_fillings(&SkewShape::straight(alpha.clone()), family, xvars + yvars);
    let lhs = TruncatedPoly { vars: vars.clone(), terms: lhs.terms };
    let mut rhs = TruncatedPoly::zero(vars.clone());
    for beta in sub_compositions(alpha) {
        let x = gf_fillings(&SkewShape::straight(beta.clone()), family, xvars).embed(vars.clone(), 0);
        let skew = SkewShape::new(alpha.clone(), beta)?;
        let y = gf_fillings(&skew, family, yvars).embed(vars.clone(), xvars);
        rhs = rhs + &x * &y;
    }
    Ok(lhs == rhs)
}

/// Matrix whose row `α` holds the F-coefficients of the dI characteristic
/// of `α`, rows and columns indexed by `compositions(n)`.
pub fn dual_immaculate_matrix(n: usize) -> Vec<Vec<BigInt>> {
    let comps = crate::shapes::compositions(n);
    comps
        .iter()
        .map(|a| {
            let f = char_tableaux(&SkewShape::straight(a.clone()), DescentKind::Di, false);
            comps.iter().map(|b| f.coeff(b)).collect()
        })
        .collect()
}

/// Determinant by fraction-free elimination.
pub fn integer_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}
