//! Arithmetic in GF(p^h) with exp/log tables.
//!
//! Elements are canonical indices in `[0, q)`: the base-p digits of the
//! index are the coefficients of the polynomial representation, lowest
//! degree first. The same integer is the element's text form in all file
//! formats. Multiplication and inversion go through exp/log tables over a
//! fixed generator, so they are O(1); addition works digit-wise mod p.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest field order constructed by default (`2^14`).
pub const DEFAULT_CAP: u32 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfError {
    NonPrime(u32),
    BadDegree(u32),
    CapExceeded { q: u64, cap: u32 },
    MixedFields { left: u32, right: u32 },
    DivisionByZero,
    ZeroToNegativePower,
    IncompatibleEmbedding { src: u32, dst: u32 },
    InvalidIndex { idx: u32, q: u32 },
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::NonPrime(p) => write!(f, "{p} is not prime"),
            GfError::BadDegree(h) => write!(f, "extension degree {h} is not >= 1"),
            GfError::CapExceeded { q, cap } => write!(f, "field order {q} exceeds cap {cap}"),
            GfError::MixedFields { left, right } => {
                write!(f, "elements of GF({left}) and GF({right}) mixed")
            }
            GfError::DivisionByZero => write!(f, "division or inversion by zero"),
            GfError::ZeroToNegativePower => write!(f, "zero raised to a negative power"),
            GfError::IncompatibleEmbedding { src, dst } => {
                write!(f, "GF({src}) does not embed into GF({dst})")
            }
            GfError::InvalidIndex { idx, q } => write!(f, "index {idx} out of range for GF({q})"),
        }
    }
}

/// A field element: canonical index plus the order of the owning field.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Felt {
    q: u32,
    idx: u32,
}

impl Felt {
    #[inline]
    pub fn index(self) -> u32 {
        self.idx
    }

    #[inline]
    pub fn field_order(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.idx == 0
    }
}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.idx, self.q)
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.idx)
    }
}

/// An immutable finite field GF(p^h), q = p^h.
///
/// Construction is deterministic: the modulus is the first irreducible
/// monic polynomial of degree h in index order (constant coefficient in
/// the lowest base-p digit), and the generator is the smallest-index
/// element of multiplicative order q-1.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    h: u32,
    q: u32,
    /// Coefficients of the monic modulus, degree h, lowest first; length h+1.
    modulus: Vec<u32>,
    /// exp[i] = index of g^i, for i in 0..q-1.
    exp: Vec<u32>,
    /// log[idx] = discrete log of the element, u32::MAX for zero.
    log: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// --- polynomial helpers over GF(p), used only during construction ---

fn poly_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for i in 0..=dm {
            let sub = (c as u64 * m[i] as u64) % p as u64;
            let pos = k + i;
            r[pos] = ((r[pos] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + ai as u64 * bj as u64) % p as u64) as u32;
        }
    }
    poly_rem(&prod, m, p)
}

fn poly_powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // p prime, a != 0
    mod_pow(a, p as u64 - 2, p)
}

fn mod_pow(a: u32, mut e: u64, p: u32) -> u32 {
    let mut base = a as u64 % p as u64;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Rabin's test: m (monic, degree h) is irreducible over GF(p) iff
/// x^{p^h} = x mod m and gcd(x^{p^{h/l}} - x, m) = 1 for every prime l | h.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let h = (m.len() - 1) as u32;
    let x = vec![0u32, 1];
    let ph = (p as u64).pow(h);
    let frob_h = poly_powmod(&x, ph, m, p);
    // x^{p^h} - x must be 0 mod m
    let mut diff = frob_h;
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    for l in prime_factors(h) {
        let e = (p as u64).pow(h / l);
        let frob = poly_powmod(&x, e, m, p);
        let mut d = frob;
        if d.len() < 2 {
            d.resize(2, 0);
        }
        d[1] = (d[1] + p - 1) % p;
        poly_trim(&mut d);
        if d.is_empty() {
            return false;
        }
        let g = poly_gcd(&d, m, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^h) with the default order cap.
    pub fn make_field(p: u32, h: u32) -> Result<FieldSpec, GfError> {
        Self::make_field_capped(p, h, DEFAULT_CAP)
    }

    /// Builds GF(p^h), rejecting orders above `cap`.
    pub fn make_field_capped(p: u32, h: u32, cap: u32) -> Result<FieldSpec, GfError> {
        if h < 1 {
            return Err(GfError::BadDegree(h));
        }
        if !is_prime(p) {
            return Err(GfError::NonPrime(p));
        }
        let q64 = (p as u64).checked_pow(h).ok_or(GfError::CapExceeded {
            q: u64::MAX,
            cap,
        })?;
        if q64 > cap as u64 {
            return Err(GfError::CapExceeded { q: q64, cap });
        }
        let q = q64 as u32;

        let (modulus, exp) = if h == 1 {
            // Prime field: generator is the smallest primitive root, the
            // modulus is x - g so that the modulus root and generator agree.
            let mut g = 1u32;
            let factors = prime_factors(p - 1);
            'outer: for cand in 1..p {
                for &l in &factors {
                    if mod_pow(cand, ((p - 1) / l) as u64, p) == 1 {
                        continue 'outer;
                    }
                }
                g = cand;
                break;
            }
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut x = 1u32;
            for _ in 0..q - 1 {
                exp.push(x);
                x = (x as u64 * g as u64 % p as u64) as u32;
            }
            (vec![(p - g) % p, 1], exp)
        } else {
            // First irreducible monic polynomial of degree h in index order.
            let mut modulus = None;
            for k in 0..q {
                let mut m = digits_of(k, p, h);
                m.push(1);
                if is_irreducible(&m, p) {
                    modulus = Some(m);
                    break;
                }
            }
            let m = modulus.expect("an irreducible polynomial of every degree exists");

            // Smallest-index generator of the multiplicative group, found
            // with bootstrap polynomial arithmetic before tables exist.
            let factors = prime_factors(q - 1);
            let mut gen_digits = None;
            'search: for idx in 1..q {
                let cand = digits_of(idx, p, h);
                for &l in &factors {
                    let pw = poly_powmod(&cand, ((q - 1) / l) as u64, &m, p);
                    if pw == [1] {
                        continue 'search;
                    }
                }
                gen_digits = Some(cand);
                break;
            }
            let g = gen_digits.expect("the multiplicative group of a finite field is cyclic");

            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut x = vec![1u32];
            for _ in 0..q - 1 {
                exp.push(index_of(&x, p));
                x = poly_mulmod(&x, &g, &m, p);
            }
            (m, exp)
        };

        let mut log = vec![u32::MAX; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        Ok(FieldSpec {
            p,
            h,
            q,
            modulus,
            exp,
            log,
        })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn h(&self) -> u32 {
        self.h
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Monic modulus, coefficients lowest-degree first (length h+1).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The fixed generator of the multiplicative group.
    #[inline]
    pub fn generator(&self) -> Felt {
        self.elt(self.exp[if self.q == 2 { 0 } else { 1 }])
    }

    #[inline]
    pub fn zero(&self) -> Felt {
        Felt { q: self.q, idx: 0 }
    }

    #[inline]
    pub fn one(&self) -> Felt {
        Felt { q: self.q, idx: 1 }
    }

    /// Element with the given canonical index. Panics out of range.
    #[inline]
    pub fn elt(&self, idx: u32) -> Felt {
        assert!(idx < self.q, "index {} out of range for GF({})", idx, self.q);
        Felt { q: self.q, idx }
    }

    pub fn elt_checked(&self, idx: u32) -> Result<Felt, GfError> {
        if idx < self.q {
            Ok(Felt { q: self.q, idx })
        } else {
            Err(GfError::InvalidIndex { idx, q: self.q })
        }
    }

    /// Canonical image of an integer (reduction into the prime subfield).
    pub fn from_int(&self, n: i64) -> Felt {
        let r = n.rem_euclid(self.p as i64) as u32;
        Felt { q: self.q, idx: r }
    }

    #[inline]
    fn check(&self, a: Felt) {
        assert!(
            a.q == self.q,
            "element of GF({}) used in GF({})",
            a.q,
            self.q
        );
    }

    #[inline]
    pub fn add(&self, a: Felt, b: Felt) -> Felt {
        self.check(a);
        self.check(b);
        if self.p == 2 {
            return Felt {
                q: self.q,
                idx: a.idx ^ b.idx,
            };
        }
        let p = self.p;
        let mut out = 0u32;
        let mut mult = 1u32;
        let (mut x, mut y) = (a.idx, b.idx);
        while x != 0 || y != 0 {
            let d = (x % p + y % p) % p;
            out += d * mult;
            mult *= p;
            x /= p;
            y /= p;
        }
        Felt { q: self.q, idx: out }
    }

    #[inline]
    pub fn neg(&self, a: Felt) -> Felt {
        self.check(a);
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut out = 0u32;
        let mut mult = 1u32;
        let mut x = a.idx;
        while x != 0 {
            let d = (p - x % p) % p;
            out += d * mult;
            mult *= p;
            x /= p;
        }
        Felt { q: self.q, idx: out }
    }

    #[inline]
    pub fn sub(&self, a: Felt, b: Felt) -> Felt {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        self.check(a);
        self.check(b);
        if a.idx == 0 || b.idx == 0 {
            return self.zero();
        }
        let i = self.log[a.idx as usize] as usize + self.log[b.idx as usize] as usize;
        let n = (self.q - 1) as usize;
        Felt {
            q: self.q,
            idx: self.exp[if i >= n { i - n } else { i }],
        }
    }

    /// Multiplicative inverse. Panics on zero; see `field_arith` for the
    /// checked entry point.
    #[inline]
    pub fn inv(&self, a: Felt) -> Felt {
        self.check(a);
        assert!(a.idx != 0, "inversion of zero in GF({})", self.q);
        let n = (self.q - 1) as usize;
        let l = self.log[a.idx as usize] as usize;
        Felt {
            q: self.q,
            idx: self.exp[(n - l) % n],
        }
    }

    #[inline]
    pub fn div(&self, a: Felt, b: Felt) -> Felt {
        self.mul(a, self.inv(b))
    }

    /// a^e for integer e; negative exponents require a nonzero base and
    /// 0^0 = 1.
    pub fn pow(&self, a: Felt, e: i64) -> Felt {
        self.check(a);
        if a.idx == 0 {
            if e > 0 {
                return self.zero();
            }
            if e == 0 {
                return self.one();
            }
            panic!("zero raised to negative power in GF({})", self.q);
        }
        let n = (self.q - 1) as i64;
        let r = e.rem_euclid(n) as usize;
        let l = self.log[a.idx as usize] as usize;
        Felt {
            q: self.q,
            idx: self.exp[(l * r) % n as usize],
        }
    }

    /// The field's Frobenius map x -> x^p.
    #[inline]
    pub fn frobenius(&self, a: Felt) -> Felt {
        self.pow(a, self.p as i64)
    }

    /// Base-p digits of an element (coefficients of its polynomial form),
    /// lowest degree first, length h.
    pub fn digits(&self, a: Felt) -> Vec<u32> {
        self.check(a);
        digits_of(a.idx, self.p, self.h)
    }

    /// Deterministic enumeration: 0 first, then the generator powers
    /// g^0, g^1, ..., g^{q-2}.
    pub fn enumerate_elements(&self) -> Vec<Felt> {
        let mut out = Vec::with_capacity(self.q as usize);
        out.push(self.zero());
        for &e in &self.exp {
            out.push(Felt { q: self.q, idx: e });
        }
        out
    }

    /// All elements in index order (0, 1, ..., q-1).
    pub fn elements_by_index(&self) -> impl Iterator<Item = Felt> + '_ {
        (0..self.q).map(move |idx| Felt { q: self.q, idx })
    }
}

fn digits_of(mut k: u32, p: u32, h: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(h as usize);
    for _ in 0..h {
        d.push(k % p);
        k /= p;
    }
    d
}

fn index_of(digits: &[u32], p: u32) -> u32 {
    let mut idx = 0u32;
    for &d in digits.iter().rev() {
        idx = idx * p + d;
    }
    idx
}

/// The seven checked arithmetic operations, in one dispatchable entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(i64),
    Inv,
    Neg,
}

/// Checked field arithmetic: validates field membership and domain
/// restrictions instead of panicking.
pub fn field_arith(f: &FieldSpec, op: ArithOp, a: Felt, b: Option<Felt>) -> Result<Felt, GfError> {
    let chk = |x: Felt| -> Result<(), GfError> {
        if x.q != f.q() {
            Err(GfError::MixedFields {
                left: x.q,
                right: f.q(),
            })
        } else {
            Ok(())
        }
    };
    chk(a)?;
    if let Some(b) = b {
        chk(b)?;
    }
    match op {
        ArithOp::Add => Ok(f.add(a, b.expect("add needs two operands"))),
        ArithOp::Sub => Ok(f.sub(a, b.expect("sub needs two operands"))),
        ArithOp::Mul => Ok(f.mul(a, b.expect("mul needs two operands"))),
        ArithOp::Div => {
            let b = b.expect("div needs two operands");
            if b.is_zero() {
                Err(GfError::DivisionByZero)
            } else {
                Ok(f.div(a, b))
            }
        }
        ArithOp::Inv => {
            if a.is_zero() {
                Err(GfError::DivisionByZero)
            } else {
                Ok(f.inv(a))
            }
        }
        ArithOp::Neg => Ok(f.neg(a)),
        ArithOp::Pow(e) => {
            if a.is_zero() && e < 0 {
                Err(GfError::ZeroToNegativePower)
            } else {
                Ok(f.pow(a, e))
            }
        }
    }
}

/// A subfield embedding GF(p^h) -> GF(p^{hm}), determined by the image of
/// the source modulus root (the smallest-index root in the target).
#[derive(Debug, Clone)]
pub struct Embedding {
    src_q: u32,
    dst_q: u32,
    src_p: u32,
    /// root^i for i in 0..h_src, precomputed in the target field.
    root_powers: Vec<Felt>,
}

impl Embedding {
    pub fn src_q(&self) -> u32 {
        self.src_q
    }

    pub fn dst_q(&self) -> u32 {
        self.dst_q
    }

    /// Image of the source modulus root.
    pub fn root(&self) -> Felt {
        if self.root_powers.len() > 1 {
            self.root_powers[1]
        } else {
            self.root_powers[0]
        }
    }

    /// Maps a source element into the target field.
    pub fn map(&self, dst: &FieldSpec, e: Felt) -> Felt {
        assert!(e.q == self.src_q, "embedding applied to foreign element");
        assert!(dst.q() == self.dst_q, "embedding target mismatch");
        let mut acc = dst.zero();
        let mut k = e.idx;
        let p = self.src_p;
        let mut i = 0usize;
        while k != 0 {
            let d = k % p;
            if d != 0 {
                acc = dst.add(acc, dst.mul(dst.from_int(d as i64), self.root_powers[i]));
            }
            k /= p;
            i += 1;
        }
        acc
    }
}

/// Finds the deterministic embedding of `src` into `dst`.
pub fn embed(src: &FieldSpec, dst: &FieldSpec) -> Result<Embedding, GfError> {
    if src.p() != dst.p() || dst.h() % src.h() != 0 {
        return Err(GfError::IncompatibleEmbedding {
            src: src.q(),
            dst: dst.q(),
        });
    }
    // Smallest-index root of the source modulus in the target. For the
    // same field this is always the modulus root itself, so the embedding
    // degenerates to the identity.
    let coeffs: Vec<Felt> = src.modulus().iter().map(|&c| dst.from_int(c as i64)).collect();
    let mut root = None;
    'search: for cand in dst.elements_by_index() {
        let mut acc = dst.zero();
        let mut pw = dst.one();
        for &c in &coeffs {
            acc = dst.add(acc, dst.mul(c, pw));
            pw = dst.mul(pw, cand);
        }
        if acc.is_zero() {
            root = Some(cand);
            break 'search;
        }
    }
    let root = root.ok_or(GfError::IncompatibleEmbedding {
        src: src.q(),
        dst: dst.q(),
    })?;
    let mut root_powers = Vec::with_capacity(src.h() as usize);
    let mut pw = dst.one();
    for _ in 0..src.h() {
        root_powers.push(pw);
        pw = dst.mul(pw, root);
    }
    Ok(Embedding {
        src_q: src.q(),
        dst_q: dst.q(),
        src_p: src.p(),
        root_powers,
    })
}
