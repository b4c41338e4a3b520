//! Homogeneous trivariate polynomials over GF(q).
//!
//! Coefficients are stored densely in a fixed triangular order on the
//! exponent triples (i,j,k) with i+j+k = d: i descending, then j
//! descending, so X^d comes first and Z^d last. The degree of a polynomial
//! is declared at construction; the zero polynomial of any degree is legal
//! and never has its degree inferred.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::equiv::{mat_inv, Projectivity};
use crate::gf::{FieldSpec, Felt};
use crate::projplane::{points_on_line, PLine, PPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HpolyError {
    FieldMismatch,
    DegreeMismatch { i: u32, j: u32, k: u32, d: u32 },
    ZeroDivisor,
    NoAffinePoint,
    SingularSubstitution,
}

impl fmt::Display for HpolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HpolyError::FieldMismatch => write!(f, "coefficients from a different field"),
            HpolyError::DegreeMismatch { i, j, k, d } => {
                write!(f, "exponents ({i},{j},{k}) do not sum to degree {d}")
            }
            HpolyError::ZeroDivisor => write!(f, "division by the zero polynomial"),
            HpolyError::NoAffinePoint => {
                write!(f, "no rational point off the divisor's zero set")
            }
            HpolyError::SingularSubstitution => write!(f, "substitution matrix is singular"),
        }
    }
}

/// Number of degree-d monomials in three variables.
#[inline]
pub fn term_count(d: u32) -> usize {
    ((d as usize + 1) * (d as usize + 2)) / 2
}

/// Position of (i,j,k) in the triangular order; i+j+k = d is assumed.
#[inline]
pub fn term_index(d: u32, i: u32, j: u32) -> usize {
    let t = (d - i) as usize;
    t * (t + 1) / 2 + (t - j as usize)
}

/// Iterate exponent triples of degree d in storage order.
pub fn exponents(d: u32) -> impl Iterator<Item = (u32, u32, u32)> {
    (0..=d).flat_map(move |t| (0..=t).rev().map(move |j| (d - t, j, t - j)))
}

/// A homogeneous polynomial of declared degree in X, Y, Z.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HPoly {
    q: u32,
    d: u32,
    coeffs: Vec<Felt>,
}

impl HPoly {
    pub fn zero(f: &FieldSpec, d: u32) -> HPoly {
        HPoly {
            q: f.q(),
            d,
            coeffs: vec![f.zero(); term_count(d)],
        }
    }

    pub fn from_terms(
        f: &FieldSpec,
        d: u32,
        terms: &[(u32, u32, u32, Felt)],
    ) -> Result<HPoly, HpolyError> {
        let mut p = HPoly::zero(f, d);
        for &(i, j, k, c) in terms {
            if c.field_order() != f.q() {
                return Err(HpolyError::FieldMismatch);
            }
            if i + j + k != d {
                return Err(HpolyError::DegreeMismatch { i, j, k, d });
            }
            let idx = term_index(d, i, j);
            p.coeffs[idx] = f.add(p.coeffs[idx], c);
        }
        Ok(p)
    }

    /// Single monomial c*X^i*Y^j*Z^k.
    pub fn monomial(f: &FieldSpec, i: u32, j: u32, k: u32, c: Felt) -> HPoly {
        HPoly::from_terms(f, i + j + k, &[(i, j, k, c)]).expect("consistent by construction")
    }

    /// Linear form a*X + b*Y + c*Z.
    pub fn linear(f: &FieldSpec, a: Felt, b: Felt, c: Felt) -> HPoly {
        HPoly::from_terms(f, 1, &[(1, 0, 0, a), (0, 1, 0, b), (0, 0, 1, c)])
            .expect("consistent by construction")
    }

    /// The linear form whose zero set is the given line.
    pub fn from_line(f: &FieldSpec, l: &PLine) -> HPoly {
        let [a, b, c] = l.coords();
        HPoly::linear(f, a, b, c)
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.d
    }

    #[inline]
    pub fn coeff(&self, i: u32, j: u32, k: u32) -> Felt {
        debug_assert_eq!(i + j + k, self.d);
        self.coeffs[term_index(self.d, i, j)]
    }

    #[inline]
    pub fn coeffs(&self) -> &[Felt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u32, Felt)> + '_ {
        exponents(self.d)
            .zip(self.coeffs.iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j, k), &c)| (i, j, k, c))
    }

    pub fn add(&self, f: &FieldSpec, other: &HPoly) -> HPoly {
        assert_eq!(self.d, other.d, "degree mismatch in add");
        HPoly {
            q: self.q,
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, f: &FieldSpec, other: &HPoly) -> HPoly {
        assert_eq!(self.d, other.d, "degree mismatch in sub");
        HPoly {
            q: self.q,
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, f: &FieldSpec, s: Felt) -> HPoly {
        HPoly {
            q: self.q,
            d: self.d,
            coeffs: self.coeffs.iter().map(|&c| f.mul(s, c)).collect(),
        }
    }

    pub fn mul(&self, f: &FieldSpec, other: &HPoly) -> HPoly {
        let d = self.d + other.d;
        let mut out = HPoly::zero(f, d);
        for (i1, j1, _, c1) in self.terms() {
            for (i2, j2, _, c2) in other.terms() {
                let idx = term_index(d, i1 + i2, j1 + j2);
                out.coeffs[idx] = f.add(out.coeffs[idx], f.mul(c1, c2));
            }
        }
        out
    }

    /// Scalar lambda with self = lambda*other, if the polynomials are
    /// proportional (both nonzero, same degree).
    pub fn proportional_to(&self, f: &FieldSpec, other: &HPoly) -> Option<Felt> {
        if self.d != other.d || self.is_zero() || other.is_zero() {
            return None;
        }
        let mut lambda = None;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return None,
                (false, false) => {
                    let r = f.div(*a, *b);
                    match lambda {
                        None => lambda = Some(r),
                        Some(l) if l == r => {}
                        _ => return None,
                    }
                }
            }
        }
        lambda
    }

    /// Scaled so the first nonzero coefficient in storage order is 1.
    pub fn normalized(&self, f: &FieldSpec) -> HPoly {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(&lead) if lead != f.one() => self.scale(f, f.inv(lead)),
            _ => self.clone(),
        }
    }

    /// Value at a coordinate triple.
    pub fn evaluate_raw(&self, f: &FieldSpec, v: [Felt; 3]) -> Felt {
        let d = self.d as usize;
        let mut px = Vec::with_capacity(d + 1);
        let mut py = Vec::with_capacity(d + 1);
        let mut pz = Vec::with_capacity(d + 1);
        let one = f.one();
        px.push(one);
        py.push(one);
        pz.push(one);
        for e in 1..=d {
            px.push(f.mul(px[e - 1], v[0]));
            py.push(f.mul(py[e - 1], v[1]));
            pz.push(f.mul(pz[e - 1], v[2]));
        }
        let mut acc = f.zero();
        for (i, j, k, c) in self.terms() {
            acc = f.add(
                acc,
                f.mul(c, f.mul(px[i as usize], f.mul(py[j as usize], pz[k as usize]))),
            );
        }
        acc
    }

    /// Value at a projective point (on the normalized representative; for
    /// homogeneous polynomials vanishing is representative-independent).
    pub fn evaluate(&self, f: &FieldSpec, p: &PPoint) -> Felt {
        self.evaluate_raw(f, p.coords())
    }

    /// Coefficients pushed through a field embedding.
    pub fn embed(&self, e: &crate::gf::Embedding, dst: &FieldSpec) -> HPoly {
        HPoly {
            q: dst.q(),
            d: self.d,
            coeffs: self.coeffs.iter().map(|&c| e.map(dst, c)).collect(),
        }
    }

    /// Formal partial derivative; var 0 = X, 1 = Y, 2 = Z.
    pub fn partial(&self, f: &FieldSpec, var: usize) -> HPoly {
        if self.d == 0 {
            return HPoly::zero(f, 0);
        }
        let d1 = self.d - 1;
        let mut out = HPoly::zero(f, d1);
        for (i, j, k, c) in self.terms() {
            let e = [i, j, k][var];
            if e == 0 {
                continue;
            }
            let scaled = f.mul(f.from_int(e as i64), c);
            if scaled.is_zero() {
                continue;
            }
            let (ni, nj) = match var {
                0 => (i - 1, j),
                1 => (i, j - 1),
                _ => (i, j),
            };
            let idx = term_index(d1, ni, nj);
            out.coeffs[idx] = f.add(out.coeffs[idx], scaled);
        }
        out
    }

    /// The gradient (F_X, F_Y, F_Z).
    pub fn partials(&self, f: &FieldSpec) -> [HPoly; 3] {
        [self.partial(f, 0), self.partial(f, 1), self.partial(f, 2)]
    }

    /// F composed with a linear coordinate change: (F o M)(v) = F(M v).
    pub fn compose_matrix(&self, f: &FieldSpec, m: &[[Felt; 3]; 3]) -> HPoly {
        let d = self.d;
        let rows: Vec<HPoly> = (0..3)
            .map(|r| HPoly::linear(f, m[r][0], m[r][1], m[r][2]))
            .collect();
        // Powers of each row form, up to degree d.
        let one = HPoly::from_terms(f, 0, &[(0, 0, 0, f.one())]).unwrap();
        let mut pows: [Vec<HPoly>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for (r, pw) in pows.iter_mut().enumerate() {
            pw.push(one.clone());
            for e in 1..=d as usize {
                let next = pw[e - 1].mul(f, &rows[r]);
                pw.push(next);
            }
        }
        let mut out = HPoly::zero(f, d);
        for (i, j, k, c) in self.terms() {
            let t = pows[0][i as usize]
                .mul(f, &pows[1][j as usize])
                .mul(f, &pows[2][k as usize]);
            out = out.add(f, &t.scale(f, c));
        }
        out
    }
}

/// F composed with the inverse of A, so that the zero set of the result is
/// the A-image of the zero set of F. The degree is preserved.
pub fn substitute(f: &FieldSpec, poly: &HPoly, a: &Projectivity) -> HPoly {
    let inv = mat_inv(f, a.matrix());
    poly.compose_matrix(f, &inv)
}

// ---------------------------------------------------------------------
// Univariate polynomials
// ---------------------------------------------------------------------

/// A univariate polynomial over GF(q); trailing zero coefficients trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    q: u32,
    coeffs: Vec<Felt>,
}

impl UniPoly {
    pub fn from_coeffs(f: &FieldSpec, mut coeffs: Vec<Felt>) -> UniPoly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        let _ = f;
        UniPoly { q: f.q(), coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Felt] {
        &self.coeffs
    }

    pub fn eval(&self, f: &FieldSpec, x: Felt) -> Felt {
        let mut acc = f.zero();
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Multiplicity of `r` as a root, by repeated exact division by (t - r).
    pub fn root_multiplicity(&self, f: &FieldSpec, r: Felt) -> u32 {
        let mut cur = self.coeffs.clone();
        let mut mult = 0u32;
        loop {
            if cur.is_empty() {
                return mult;
            }
            // synthetic division by (t - r)
            let mut rem = f.zero();
            let mut quo = vec![f.zero(); cur.len().saturating_sub(1)];
            for (i, &c) in cur.iter().enumerate().rev() {
                let v = f.add(c, f.mul(rem, r));
                if i == 0 {
                    rem = v;
                } else {
                    quo[i - 1] = v;
                    rem = v;
                }
            }
            // rem is now the value at r
            if !rem.is_zero() {
                return mult;
            }
            mult += 1;
            while quo.last().map_or(false, |c| c.is_zero()) {
                quo.pop();
            }
            cur = quo;
        }
    }

    /// Coefficient map through a field embedding.
    pub fn embed(&self, e: &crate::gf::Embedding, dst: &FieldSpec) -> UniPoly {
        UniPoly {
            q: dst.q(),
            coeffs: self.coeffs.iter().map(|&c| e.map(dst, c)).collect(),
        }
    }

    /// True when the polynomial has no root among the field's elements.
    pub fn has_no_root(&self, f: &FieldSpec) -> bool {
        f.elements_by_index().all(|x| !self.eval(f, x).is_zero())
    }
}

// ---------------------------------------------------------------------
// Line restriction
// ---------------------------------------------------------------------

/// Where a point sits in the (s:t) parameterization of a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineParam {
    /// P = P0 + t*P1 with the given t.
    Finite(Felt),
    /// P = P1.
    Infinity,
}

/// The binary form F(s*P0 + t*P1) on a line, with the fixed parameterizing
/// points P0, P1 being the first two points of the line in index order.
#[derive(Clone, Debug)]
pub struct LineRestriction {
    degree: u32,
    /// g[m] is the coefficient of s^(d-m) t^m.
    form: Vec<Felt>,
    p0: PPoint,
    p1: PPoint,
}

impl LineRestriction {
    pub fn is_zero(&self) -> bool {
        self.form.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn base_points(&self) -> (PPoint, PPoint) {
        (self.p0, self.p1)
    }

    pub fn form(&self) -> &[Felt] {
        &self.form
    }

    /// The restriction in the chart s = 1, as a polynomial in t.
    pub fn unipoly(&self, f: &FieldSpec) -> UniPoly {
        UniPoly::from_coeffs(f, self.form.clone())
    }

    /// Multiplicity of the parameterization's point at infinity (P1),
    /// i.e. of the root s = 0: d minus the top nonzero t-power.
    pub fn infinity_multiplicity(&self) -> u32 {
        match self.form.iter().rposition(|c| !c.is_zero()) {
            Some(top) => self.degree - top as u32,
            None => self.degree + 1, // identically zero: more than any root
        }
    }

    /// Parameter of a point of the line; None if P is not on the line.
    pub fn param_of(&self, f: &FieldSpec, p: &PPoint) -> Option<LineParam> {
        if *p == self.p1 {
            return Some(LineParam::Infinity);
        }
        let a = self.p0.coords();
        let b = self.p1.coords();
        for t in f.elements_by_index() {
            let v = [
                f.add(a[0], f.mul(t, b[0])),
                f.add(a[1], f.mul(t, b[1])),
                f.add(a[2], f.mul(t, b[2])),
            ];
            if &PPoint::new(f, v).expect("p0, p1 independent") == p {
                return Some(LineParam::Finite(t));
            }
        }
        None
    }

    /// Intersection multiplicity of the line with the polynomial's zero
    /// set at a point of the line.
    pub fn multiplicity_at(&self, f: &FieldSpec, p: &PPoint) -> Option<u32> {
        match self.param_of(f, p)? {
            LineParam::Infinity => Some(self.infinity_multiplicity()),
            LineParam::Finite(t) => Some(self.unipoly(f).root_multiplicity(f, t)),
        }
    }
}

/// Restriction of F to a line. The output is identically zero exactly when
/// the line's form divides F.
pub fn restrict_to_line(f: &FieldSpec, poly: &HPoly, l: &PLine) -> LineRestriction {
    let pts = points_on_line(f, l);
    let p0 = pts[0];
    let p1 = pts[1];
    let a = p0.coords();
    let b = p1.coords();
    let d = poly.degree() as usize;

    // pow[c][e] = coefficients (in t) of (s*a[c] + t*b[c])^e, length e+1.
    let mut pow: [Vec<Vec<Felt>>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for c in 0..3 {
        let mut rows: Vec<Vec<Felt>> = Vec::with_capacity(d + 1);
        rows.push(vec![f.one()]);
        for e in 1..=d {
            let prev = &rows[e - 1];
            let mut next = vec![f.zero(); e + 1];
            for (m, &pc) in prev.iter().enumerate() {
                next[m] = f.add(next[m], f.mul(pc, a[c]));
                next[m + 1] = f.add(next[m + 1], f.mul(pc, b[c]));
            }
            rows.push(next);
        }
        pow[c] = rows;
    }

    let mut form = vec![f.zero(); d + 1];
    let mut scratch = Vec::new();
    for (i, j, k, c) in poly.terms() {
        // convolve the three rows
        let x = &pow[0][i as usize];
        let y = &pow[1][j as usize];
        let z = &pow[2][k as usize];
        scratch.clear();
        scratch.resize(x.len() + y.len() - 1, f.zero());
        for (m1, &c1) in x.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (m2, &c2) in y.iter().enumerate() {
                scratch[m1 + m2] = f.add(scratch[m1 + m2], f.mul(c1, c2));
            }
        }
        for (m1, &c1) in scratch.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (m2, &c2) in z.iter().enumerate() {
                if c2.is_zero() {
                    continue;
                }
                form[m1 + m2] = f.add(form[m1 + m2], f.mul(c, f.mul(c1, c2)));
            }
        }
    }
    LineRestriction {
        degree: poly.degree(),
        form,
        p0,
        p1,
    }
}

// ---------------------------------------------------------------------
// Exact division
// ---------------------------------------------------------------------

/// Bivariate homogeneous slice: coefficient of X^a Y^(e-a) at position a.
type Bivar = Vec<Felt>;

fn bivar_is_zero(b: &Bivar) -> bool {
    b.iter().all(|c| c.is_zero())
}

fn bivar_conv(f: &FieldSpec, a: &Bivar, b: &Bivar) -> Bivar {
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

/// Z-slices of an HPoly: slice k is the bivariate coefficient of Z^k,
/// homogeneous of degree d-k in X, Y.
fn z_slices(f: &FieldSpec, p: &HPoly) -> Vec<Bivar> {
    let d = p.degree();
    let mut slices: Vec<Bivar> = (0..=d).map(|k| vec![f.zero(); (d - k) as usize + 1]).collect();
    for (i, _, k, c) in p.terms() {
        slices[k as usize][i as usize] = c;
    }
    slices
}

fn from_z_slices(f: &FieldSpec, d: u32, slices: &[Bivar]) -> HPoly {
    let mut out = HPoly::zero(f, d);
    for (k, s) in slices.iter().enumerate() {
        for (i, &c) in s.iter().enumerate() {
            if !c.is_zero() {
                let j = d as usize - k - i;
                out.coeffs[term_index(d, i as u32, j as u32)] = c;
            }
        }
    }
    out
}

/// Exact polynomial division: Ok(Some(Q)) with F = Q*G when G divides F,
/// Ok(None) otherwise.
///
/// The divisor is first made monic in Z by moving a rational point off its
/// zero set to (0:0:1) (the first such point in enumeration order); the
/// division then runs as a univariate division in Z over GF(q)[X,Y] and
/// the coordinate change is undone. When every rational point lies on the
/// divisor's zero set (possible only for degrees above q), a term-order
/// reduction handles the division instead.
pub fn exact_divide(f: &FieldSpec, num: &HPoly, den: &HPoly) -> Result<Option<HPoly>, HpolyError> {
    if den.is_zero() {
        return Err(HpolyError::ZeroDivisor);
    }
    if num.is_zero() {
        let d = num.degree().saturating_sub(den.degree());
        return Ok(Some(HPoly::zero(f, d)));
    }
    if num.degree() < den.degree() {
        return Ok(None);
    }

    // Affinization: make the divisor's Z^deg coefficient nonzero.
    let dg = den.degree();
    let z_lead = den.coeff(0, 0, dg);
    let (num_a, den_a, undo) = if !z_lead.is_zero() {
        (num.clone(), den.clone(), None)
    } else {
        match crate::projplane::points_iter(f).find(|p| !den.evaluate(f, p).is_zero()) {
            Some(p) => {
                let m = affinizing_matrix(f, &p);
                let inv = mat_inv(f, &m);
                (num.compose_matrix(f, &m), den.compose_matrix(f, &m), Some(inv))
            }
            None => {
                // The divisor vanishes at every rational point.
                return Ok(divide_by_reduction(f, num, den));
            }
        }
    };

    let dn = num_a.degree();
    let gamma = den_a.coeff(0, 0, dg);
    debug_assert!(!gamma.is_zero());
    let gamma_inv = f.inv(gamma);

    let mut rem = z_slices(f, &num_a);
    let den_slices = z_slices(f, &den_a);
    let dq = dn - dg;
    let mut quo: Vec<Bivar> = (0..=dq).map(|k| vec![f.zero(); (dq - k) as usize + 1]).collect();

    for zk in (0..=dq as usize).rev() {
        let pivot = rem[zk + dg as usize].clone();
        if bivar_is_zero(&pivot) {
            continue;
        }
        let qs: Bivar = pivot.iter().map(|&c| f.mul(gamma_inv, c)).collect();
        for (j, gs) in den_slices.iter().enumerate() {
            if bivar_is_zero(gs) {
                continue;
            }
            let prod = bivar_conv(f, &qs, gs);
            let target = &mut rem[zk + j];
            for (i, &c) in prod.iter().enumerate() {
                target[i] = f.sub(target[i], c);
            }
        }
        quo[zk] = qs;
    }

    if rem.iter().any(|s| !bivar_is_zero(s)) {
        return Ok(None);
    }
    let q_poly = from_z_slices(f, dq, &quo);
    let q_final = match undo {
        Some(inv) => q_poly.compose_matrix(f, &inv),
        None => q_poly,
    };
    debug_assert!(q_final.mul(f, den).proportional_to(f, num).map_or(
        q_final.is_zero() || num.is_zero(),
        |l| l == f.one()
    ));
    Ok(Some(q_final))
}

/// Matrix sending (0:0:1) to p, completed with standard basis columns.
fn affinizing_matrix(f: &FieldSpec, p: &PPoint) -> [[Felt; 3]; 3] {
    let v = p.coords();
    let lead = v.iter().position(|c| !c.is_zero()).expect("point is nonzero");
    let others: [usize; 2] = match lead {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let mut m = [[f.zero(); 3]; 3];
    m[others[0]][0] = f.one();
    m[others[1]][1] = f.one();
    for r in 0..3 {
        m[r][2] = v[r];
    }
    m
}

/// Single-divisor reduction in the storage term order (lex with X>Y>Z on
/// homogeneous polynomials). Sound and complete for divisibility by one
/// polynomial.
fn divide_by_reduction(f: &FieldSpec, num: &HPoly, den: &HPoly) -> Option<HPoly> {
    let (gi, gj, gk, gc) = den.terms().next().expect("divisor nonzero");
    let dq = num.degree() - den.degree();
    let mut quo = HPoly::zero(f, dq);
    let mut rem = num.clone();
    loop {
        let lt = match rem.terms().next() {
            None => return Some(quo),
            Some(t) => t,
        };
        let (fi, fj, fk, fc) = lt;
        if fi < gi || fj < gj || fk < gk {
            return None;
        }
        let c = f.div(fc, gc);
        let (mi, mj) = (fi - gi, fj - gj);
        quo.coeffs[term_index(dq, mi, mj)] = c;
        let m = HPoly::monomial(f, mi, mj, fk - gk, c);
        rem = rem.sub(f, &m.mul(f, den));
    }
}
