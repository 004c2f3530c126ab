//! Exact arithmetic in `F_q` for odd prime powers `q = p^e`.
//!
//! Elements are stored by a canonical index in `[0, q)`: for `e = 1` the index
//! is the residue mod `p`; for `e > 1` it is the base-`p` encoding of the
//! coefficient vector of a polynomial of degree `< e`, digit `k` holding the
//! coefficient of `t^k`. Multiplication is schoolbook polynomial product
//! followed by reduction modulo a fixed monic irreducible polynomial, chosen
//! deterministically (smallest encoding) unless overridden. The encoding is a
//! bijection with `[0, q)` and is stable across runs, so indices can be
//! serialized directly.
//!
//! Characteristic 2 is rejected everywhere: the polar form of a quadratic
//! form divides by 2.

use std::fmt;

use thiserror::Error;

/// Largest supported extension degree. Enumeration work is O(q^n), so desk
/// scale never gets near this; the bound keeps digit buffers on the stack.
pub const MAX_EXT_DEGREE: u32 = 8;

const MAX_E: usize = MAX_EXT_DEGREE as usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported (the polar form divides by 2)")]
    EvenCharacteristic,
    #[error("{0} is not an odd prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be in 2..={MAX_EXT_DEGREE}, got {0}")]
    BadExtensionDegree(u32),
    #[error("modulus must be monic of degree {expected} with coefficients in [0,{p})")]
    BadModulus { expected: u32, p: u64 },
    #[error("modulus polynomial is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
}

/// An element of `F_q`, identified by its canonical index in `[0, q)`.
///
/// Indices are only meaningful relative to the [`FieldSpec`] that produced
/// them; all arithmetic goes through that `FieldSpec`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u64);

impl FieldElement {
    pub fn index(self) -> u64 {
        self.0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Value of the quadratic character: zero, a nonzero square, or a nonsquare.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chi {
    Zero,
    Square,
    NonSquare,
}

impl fmt::Display for Chi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chi::Zero => write!(f, "zero"),
            Chi::Square => write!(f, "square"),
            Chi::NonSquare => write!(f, "nonsquare"),
        }
    }
}

/// Description of a finite field `F_q`, `q = p^e` with `p` an odd prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    e: u32,
    q: u64,
    /// Monic modulus of degree `e`, coefficient of `t^k` at position `k`.
    /// For `e = 1` it is the placeholder `t` and is never consulted.
    modulus: Vec<u64>,
}

impl FieldSpec {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        check_odd_prime(p)?;
        Ok(FieldSpec {
            p,
            e: 1,
            q: p,
            modulus: vec![0, 1],
        })
    }

    /// The extension field `F_{p^e}`, `e >= 2`, with the deterministic
    /// modulus: the monic irreducible of degree `e` whose coefficient vector
    /// `(c_0, ..., c_{e-1})` has the smallest base-`p` encoding
    /// `sum c_k p^k`.
    pub fn extension(p: u64, e: u32) -> Result<Self, FieldError> {
        check_odd_prime(p)?;
        if !(2..=MAX_EXT_DEGREE).contains(&e) {
            return Err(FieldError::BadExtensionDegree(e));
        }
        let q = p.pow(e);
        let modulus = smallest_irreducible(p, e);
        Ok(FieldSpec { p, e, q, modulus })
    }

    /// An extension field with an explicit modulus override. The coefficients
    /// are `(c_0, ..., c_e)` with `c_e = 1`; the polynomial must be
    /// irreducible over `F_p`.
    pub fn with_modulus(p: u64, e: u32, modulus: Vec<u64>) -> Result<Self, FieldError> {
        check_odd_prime(p)?;
        if !(2..=MAX_EXT_DEGREE).contains(&e) {
            return Err(FieldError::BadExtensionDegree(e));
        }
        if modulus.len() != e as usize + 1
            || modulus[e as usize] != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(FieldError::BadModulus { expected: e, p });
        }
        if !poly_is_irreducible(p, &modulus) {
            return Err(FieldError::ReducibleModulus(p));
        }
        Ok(FieldSpec {
            p,
            e,
            q: p.pow(e),
            modulus,
        })
    }

    /// Build a field from its order: `q` must be an odd prime power.
    pub fn from_order(q: u64) -> Result<Self, FieldError> {
        if q < 2 {
            return Err(FieldError::NotPrimePower(q));
        }
        if q % 2 == 0 {
            return Err(FieldError::EvenCharacteristic);
        }
        let p = smallest_prime_factor(q);
        let mut e = 0u32;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(FieldError::NotPrimePower(q));
        }
        if e == 1 {
            Self::prime(p)
        } else {
            Self::extension(p, e)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients `(c_0, ..., c_e)`; only meaningful for `e > 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The element with the given canonical index.
    ///
    /// Panics if `index >= q`; indices come from this field's own encoding.
    pub fn element(&self, index: u64) -> FieldElement {
        assert!(index < self.q, "index {} out of range for F_{}", index, self.q);
        FieldElement(index)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Embed a signed integer via its residue in the prime subfield.
    pub fn from_int(&self, value: i64) -> FieldElement {
        FieldElement(value.rem_euclid(self.p as i64) as u64)
    }

    /// All `q` elements in increasing index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.e == 1 {
            FieldElement((a.0 + b.0) % self.p)
        } else {
            let da = self.decode(a);
            let db = self.decode(b);
            let mut out = [0u64; MAX_E];
            for k in 0..self.e as usize {
                out[k] = (da[k] + db[k]) % self.p;
            }
            self.encode(&out)
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.e == 1 {
            FieldElement((self.p - a.0) % self.p)
        } else {
            let da = self.decode(a);
            let mut out = [0u64; MAX_E];
            for k in 0..self.e as usize {
                out[k] = (self.p - da[k]) % self.p;
            }
            self.encode(&out)
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.e == 1 {
            FieldElement((a.0 * b.0) % self.p)
        } else {
            let e = self.e as usize;
            let da = self.decode(a);
            let db = self.decode(b);
            let mut prod = [0u64; 2 * MAX_E - 1];
            for i in 0..e {
                if da[i] == 0 {
                    continue;
                }
                for j in 0..e {
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.p;
                }
            }
            // Reduce t^i for i >= e via t^e = -(c_0 + c_1 t + ... + c_{e-1} t^{e-1}).
            for i in (e..2 * e - 1).rev() {
                let c = prod[i];
                if c == 0 {
                    continue;
                }
                prod[i] = 0;
                for k in 0..e {
                    let m = self.modulus[k];
                    prod[i - e + k] = (prod[i - e + k] + c * (self.p - m)) % self.p;
                }
            }
            let mut out = [0u64; MAX_E];
            out[..e].copy_from_slice(&prod[..e]);
            self.encode(&out)
        }
    }

    /// `a^k` by square-and-multiply; `a^0 = 1` including for `a = 0`.
    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.pow(a, self.q - 2))
        }
    }

    /// Quadratic character by Euler's criterion: `a^((q-1)/2)` is `1` exactly
    /// for the nonzero squares and `-1` for the nonsquares.
    ///
    /// ```
    /// use quadrank::ffield::{Chi, FieldSpec};
    /// let f7 = FieldSpec::prime(7).unwrap();
    /// assert_eq!(f7.chi(f7.element(2)), Chi::Square);    // 3^2 = 2 mod 7
    /// assert_eq!(f7.chi(f7.element(3)), Chi::NonSquare);
    /// assert_eq!(f7.chi(f7.zero()), Chi::Zero);
    /// ```
    pub fn chi(&self, a: FieldElement) -> Chi {
        if a.0 == 0 {
            return Chi::Zero;
        }
        let s = self.pow(a, (self.q - 1) / 2);
        if s == self.one() {
            Chi::Square
        } else {
            debug_assert_eq!(s, self.neg(self.one()));
            Chi::NonSquare
        }
    }

    /// The nonsquare with the smallest canonical index; deterministic.
    pub fn canonical_nonsquare(&self) -> FieldElement {
        self.elements()
            .find(|&a| self.chi(a) == Chi::NonSquare)
            .expect("every field of odd order has a nonsquare")
    }

    /// Render an element as a polynomial in `t` (plain residue for `e = 1`).
    pub fn render(&self, a: FieldElement) -> String {
        if self.e == 1 || a.0 == 0 {
            return a.0.to_string();
        }
        let d = self.decode(a);
        let mut terms = Vec::new();
        for k in (0..self.e as usize).rev() {
            if d[k] == 0 {
                continue;
            }
            let t = match (k, d[k]) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (k, 1) => format!("t^{k}"),
                (k, c) => format!("{c}t^{k}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }

    fn decode(&self, a: FieldElement) -> [u64; MAX_E] {
        let mut d = [0u64; MAX_E];
        let mut v = a.0;
        for slot in d.iter_mut().take(self.e as usize) {
            *slot = v % self.p;
            v /= self.p;
        }
        d
    }

    fn encode(&self, digits: &[u64; MAX_E]) -> FieldElement {
        let mut v = 0u64;
        for k in (0..self.e as usize).rev() {
            v = v * self.p + digits[k];
        }
        FieldElement(v)
    }
}

fn check_odd_prime(p: u64) -> Result<(), FieldError> {
    if p == 2 {
        return Err(FieldError::EvenCharacteristic);
    }
    if p < 2 || !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    Ok(())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// First monic irreducible of degree `e` over `F_p` in increasing order of
/// the coefficient encoding `sum c_k p^k`.
fn smallest_irreducible(p: u64, e: u32) -> Vec<u64> {
    let e = e as usize;
    let count = p.pow(e as u32);
    for k in 0..count {
        let mut f = vec![0u64; e + 1];
        let mut v = k;
        for c in f.iter_mut().take(e) {
            *c = v % p;
            v /= p;
        }
        f[e] = 1;
        if poly_is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

// --- dense polynomial arithmetic over F_p, used only by the modulus search ---

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mulmod(p: u64, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len().max(1) - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(p, prod, f)
}

/// Remainder of `a` modulo the monic polynomial `f`.
fn poly_rem(p: u64, mut a: Vec<u64>, f: &[u64]) -> Vec<u64> {
    let df = f.len() - 1;
    while a.len() > df {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - df;
        if lead != 0 {
            for k in 0..df {
                a[shift + k] = (a[shift + k] + lead * (p - f[k])) % p;
            }
        }
        a.pop();
        poly_trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

fn poly_powmod(p: u64, base: &[u64], mut k: u64, f: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    while k > 0 {
        if k & 1 == 1 {
            acc = poly_mulmod(p, &acc, &b, f);
        }
        b = poly_mulmod(p, &b, &b, f);
        k >>= 1;
    }
    acc
}

fn poly_gcd(p: u64, mut a: Vec<u64>, mut b: Vec<u64>) -> Vec<u64> {
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // Make b monic so poly_rem applies.
        let lead = *b.last().unwrap();
        if lead != 1 {
            let inv = mod_inv(p, lead);
            for c in b.iter_mut() {
                *c = *c * inv % p;
            }
        }
        let r = poly_rem(p, a, &b);
        a = b;
        b = r;
    }
    a
}

fn mod_inv(p: u64, a: u64) -> u64 {
    // p is a small prime; Fermat is plenty.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut k = p - 2;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        k >>= 1;
    }
    acc
}

/// Irreducibility of a monic `f` of degree `e >= 1` over `F_p`: any proper
/// factor has an irreducible factor of degree `d <= e/2`, whose roots lie in
/// `F_{p^d}`, i.e. divide `x^(p^d) - x`. So `f` is irreducible iff
/// `gcd(f, x^(p^d) - x) = 1` for every `d <= e/2`.
fn poly_is_irreducible(p: u64, f: &[u64]) -> bool {
    let e = f.len() - 1;
    if e == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let mut h = x.clone(); // x^(p^d) mod f, starting at d = 0
    for _ in 1..=e / 2 {
        h = poly_powmod(p, &h, p, f);
        // h - x
        let mut diff = h.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        let g = poly_gcd(p, f.to_vec(), diff);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldSpec {
        FieldSpec::extension(3, 2).unwrap()
    }

    /// Independent squareness oracle: enumerate the actual squares.
    fn square_set(spec: &FieldSpec) -> std::collections::HashSet<u64> {
        spec.elements()
            .filter(|a| a.index() != 0)
            .map(|a| spec.mul(a, a).index())
            .collect()
    }

    /// Independent irreducibility oracle for degree 2 and 3: no roots in F_p.
    fn has_root_in_prime_field(p: u64, f: &[u64]) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (acc * x + c) % p;
            }
            acc == 0
        })
    }

    #[test]
    fn prime_field_construction() {
        assert_eq!(FieldSpec::prime(3).unwrap().order(), 3);
        assert_eq!(FieldSpec::prime(7).unwrap().order(), 7);
        assert_eq!(FieldSpec::prime(2), Err(FieldError::EvenCharacteristic));
        assert_eq!(FieldSpec::prime(9), Err(FieldError::NotPrime(9)));
        assert_eq!(FieldSpec::prime(1), Err(FieldError::NotPrime(1)));
    }

    #[test]
    fn from_order_parses_prime_powers() {
        let f = FieldSpec::from_order(9).unwrap();
        assert_eq!((f.characteristic(), f.degree()), (3, 2));
        let f = FieldSpec::from_order(13).unwrap();
        assert_eq!((f.characteristic(), f.degree()), (13, 1));
        assert_eq!(FieldSpec::from_order(8), Err(FieldError::EvenCharacteristic));
        assert_eq!(FieldSpec::from_order(15), Err(FieldError::NotPrimePower(15)));
    }

    #[test]
    fn deterministic_moduli_match_exhaustive_search() {
        // Oracle: the winner must be irreducible and every smaller encoding
        // reducible, checked by root search (sufficient for degrees 2 and 3).
        let cases = [(3u64, 2u32), (5, 2), (3, 3), (7, 2)];
        for (p, e) in cases {
            let spec = FieldSpec::extension(p, e).unwrap();
            let f = spec.modulus().to_vec();
            assert_eq!(f.len() as u32, e + 1);
            assert!(!has_root_in_prime_field(p, &f), "chosen modulus has a root");
            let encoding: u64 = f
                .iter()
                .take(e as usize)
                .rev()
                .fold(0, |acc, &c| acc * p + c);
            for k in 0..encoding {
                let mut g = vec![0u64; e as usize + 1];
                let mut v = k;
                for c in g.iter_mut().take(e as usize) {
                    *c = v % p;
                    v /= p;
                }
                g[e as usize] = 1;
                assert!(
                    has_root_in_prime_field(p, &g),
                    "skipped polynomial with encoding {k} is irreducible"
                );
            }
        }
        // Frozen values from the oracle above.
        assert_eq!(FieldSpec::extension(3, 2).unwrap().modulus(), &[1, 0, 1]); // t^2 + 1
        assert_eq!(FieldSpec::extension(5, 2).unwrap().modulus(), &[2, 0, 1]); // t^2 + 2
        assert_eq!(FieldSpec::extension(3, 3).unwrap().modulus(), &[1, 2, 0, 1]); // t^3 + 2t + 1
    }

    #[test]
    fn modulus_override_validation() {
        // t^2 + 1 is irreducible over F_3 but reducible over F_5 (2^2 = -1).
        assert!(FieldSpec::with_modulus(3, 2, vec![1, 0, 1]).is_ok());
        assert_eq!(
            FieldSpec::with_modulus(5, 2, vec![1, 0, 1]),
            Err(FieldError::ReducibleModulus(5))
        );
        assert_eq!(
            FieldSpec::with_modulus(3, 2, vec![1, 0, 2]),
            Err(FieldError::BadModulus { expected: 2, p: 3 })
        );
        assert_eq!(
            FieldSpec::with_modulus(3, 2, vec![1, 1]),
            Err(FieldError::BadModulus { expected: 2, p: 3 })
        );
    }

    #[test]
    fn arithmetic_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.mul(f7.element(3), f7.element(5)), f7.element(1));
        assert_eq!(f7.inv(f7.element(3)).unwrap(), f7.element(5));
        assert_eq!(f7.inv(f7.zero()), Err(FieldError::DivisionByZero));

        // F_9 = F_3[t]/(t^2+1): t has index 3, and t*t = -1 = 2.
        let f9 = f9();
        let t = f9.element(3);
        assert_eq!(f9.mul(t, t), f9.element(2));
        assert_eq!(f9.from_int(-1), f9.element(2));
    }

    #[test]
    fn chi_matches_square_enumeration() {
        for spec in [
            FieldSpec::prime(7).unwrap(),
            FieldSpec::prime(13).unwrap(),
            f9(),
            FieldSpec::extension(5, 2).unwrap(),
        ] {
            let squares = square_set(&spec);
            assert_eq!(squares.len() as u64, (spec.order() - 1) / 2);
            for a in spec.elements() {
                let expected = if a.index() == 0 {
                    Chi::Zero
                } else if squares.contains(&a.index()) {
                    Chi::Square
                } else {
                    Chi::NonSquare
                };
                assert_eq!(spec.chi(a), expected, "chi({}) in F_{}", a, spec.order());
            }
        }
        // Frozen spot values.
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.chi(f7.element(2)), Chi::Square);
        assert_eq!(f7.chi(f7.element(3)), Chi::NonSquare);
        assert_eq!(f7.chi(f7.zero()), Chi::Zero);
        let f9 = f9();
        assert_eq!(f9.chi(f9.element(3)), Chi::Square); // t^4 = (-1)^2 = 1
    }

    #[test]
    fn canonical_nonsquare_is_smallest() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.canonical_nonsquare(), f3.element(2));
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.canonical_nonsquare(), f7.element(3));

        for spec in [f9(), FieldSpec::extension(3, 3).unwrap()] {
            let squares = square_set(&spec);
            let oracle = (1..spec.order())
                .find(|i| !squares.contains(i))
                .unwrap();
            assert_eq!(spec.canonical_nonsquare(), spec.element(oracle));
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for spec in [FieldSpec::prime(5).unwrap(), f9()] {
            let q = spec.order();
            let els: Vec<_> = spec.elements().collect();
            assert_eq!(els.len() as u64, q);
            for &a in &els {
                assert_eq!(spec.add(a, spec.zero()), a);
                assert_eq!(spec.mul(a, spec.one()), a);
                assert_eq!(spec.add(a, spec.neg(a)), spec.zero());
                if a.index() != 0 {
                    assert_eq!(spec.mul(a, spec.inv(a).unwrap()), spec.one());
                }
                for &b in &els {
                    assert_eq!(spec.add(a, b), spec.add(b, a));
                    assert_eq!(spec.mul(a, b), spec.mul(b, a));
                    for &c in &els {
                        assert_eq!(spec.add(spec.add(a, b), c), spec.add(a, spec.add(b, c)));
                        assert_eq!(spec.mul(spec.mul(a, b), c), spec.mul(a, spec.mul(b, c)));
                        assert_eq!(
                            spec.mul(a, spec.add(b, c)),
                            spec.add(spec.mul(a, b), spec.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for spec in [f9(), FieldSpec::extension(3, 3).unwrap()] {
            let p = spec.characteristic();
            for a in spec.elements() {
                for b in spec.elements() {
                    assert_eq!(
                        spec.pow(spec.add(a, b), p),
                        spec.add(spec.pow(a, p), spec.pow(b, p))
                    );
                }
            }
        }
    }

    #[test]
    fn chi_is_multiplicative() {
        for spec in [FieldSpec::prime(11).unwrap(), f9()] {
            for a in spec.elements().filter(|a| a.index() != 0) {
                for b in spec.elements().filter(|b| b.index() != 0) {
                    let sign = |c: Chi| if c == Chi::Square { 1i8 } else { -1 };
                    assert_eq!(
                        sign(spec.chi(spec.mul(a, b))),
                        sign(spec.chi(a)) * sign(spec.chi(b))
                    );
                }
            }
        }
    }

    #[test]
    fn element_count_and_order() {
        assert_eq!(
            FieldSpec::prime(3).unwrap().elements().map(|a| a.index()).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(f9().elements().count(), 9);
        assert_eq!(FieldSpec::extension(5, 2).unwrap().elements().count(), 25);
    }

    #[test]
    fn encoding_round_trips() {
        let spec = FieldSpec::extension(3, 3).unwrap();
        for a in spec.elements() {
            let digits = spec.decode(a);
            assert_eq!(spec.encode(&digits), a);
        }
    }

    #[test]
    fn render_polynomials() {
        let f9 = f9();
        assert_eq!(f9.render(f9.element(0)), "0");
        assert_eq!(f9.render(f9.element(3)), "t");
        assert_eq!(f9.render(f9.element(5)), "t + 2");
        assert_eq!(f9.render(f9.element(7)), "2t + 1");
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.render(f7.element(5)), "5");
    }
}
