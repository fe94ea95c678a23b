//! Finite rings with nonzero identity: construction, element classification,
//! annihilators, and an exhaustive axiom audit.
//!
//! Elements are canonical indices `0..order` with index 0 always the ring
//! zero. Each constructor fixes a deterministic enumeration:
//! `Z_n` ascending residues; polynomial quotients (and `GF(p^s)`) coefficient
//! tuples with the constant term varying fastest; products mixed-radix over
//! the factors with the last factor fastest; matrix rings row-major entry
//! tuples with the last entry fastest.

use std::fmt;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::Error;
use crate::poly::{find_irreducible, is_prime, Polynomial};

/// Size knobs for ring construction.
///
/// Operation tables are materialized for rings of order up to
/// `max_table_order` and computed on demand above it. Matrix rings refuse to
/// construct above `max_matrix_order` elements.
#[derive(Debug, Clone)]
pub struct BuildConfig {
    pub max_table_order: usize,
    pub max_matrix_order: usize,
}

pub const DEFAULT_TABLE_ORDER: usize = 4096;
pub const DEFAULT_MATRIX_ORDER: usize = 4096;

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            max_table_order: DEFAULT_TABLE_ORDER,
            max_matrix_order: DEFAULT_MATRIX_ORDER,
        }
    }
}

/// Which annihilator to take in a noncommutative ring. The three coincide on
/// commutative rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

#[derive(Clone)]
enum OpsKind {
    /// `Z_n`, index i = residue i.
    Modular { n: u64 },
    /// `Z_n[x]/(f)` with monic `f`; index encodes coefficients base n,
    /// constant term fastest.
    PolyQuot {
        n: u64,
        modulus: Arc<Polynomial>,
        degree: usize,
    },
    /// Componentwise product; index is mixed-radix over the factors, last
    /// factor fastest.
    Product {
        factors: Arc<Vec<FiniteRing>>,
        strides: Arc<Vec<usize>>,
    },
    /// k-by-k matrices over a commutative base; index is the row-major entry
    /// tuple read as a base-`|R|` number, last entry fastest.
    Matrix { base: Arc<FiniteRing>, k: usize },
    /// Cosets of an ideal in a parent ring; element i is the coset with
    /// least parent representative `reps[i]`.
    Quotient {
        parent: Arc<FiniteRing>,
        reps: Arc<Vec<usize>>,
        coset_of: Arc<Vec<u32>>,
    },
    /// Caller-provided tables (the tables live in the cache fields).
    Explicit { labels: Option<Arc<Vec<String>>> },
}

/// A fully enumerated finite ring with nonzero identity.
///
/// Values are immutable after construction and cheap to share behind `Arc`;
/// every operation is a pure function of its inputs.
#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    one: usize,
    commutative: bool,
    label: String,
    kind: OpsKind,
    add_table: Option<Vec<u16>>,
    mul_table: Option<Vec<u16>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("one", &self.one)
            .field("commutative", &self.commutative)
            .finish()
    }
}

impl FiniteRing {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn one_index(&self) -> usize {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        match &self.add_table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.compute_add(a, b),
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        match &self.mul_table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.compute_mul(a, b),
        }
    }

    fn compute_add(&self, a: usize, b: usize) -> usize {
        match &self.kind {
            OpsKind::Modular { n } => ((a as u64 + b as u64) % n) as usize,
            OpsKind::PolyQuot { n, degree, .. } => {
                let n = *n as usize;
                let mut out = 0;
                let mut stride = 1;
                let (mut ra, mut rb) = (a, b);
                for _ in 0..*degree {
                    out += ((ra + rb) % n) * stride;
                    ra /= n;
                    rb /= n;
                    stride *= n;
                }
                out
            }
            OpsKind::Product { factors, strides } => {
                let mut out = 0;
                for (f, &s) in factors.iter().zip(strides.iter()) {
                    let (ca, cb) = ((a / s) % f.order, (b / s) % f.order);
                    out += f.add(ca, cb) * s;
                }
                out
            }
            OpsKind::Matrix { base, k } => {
                let n = base.order;
                let cells = k * k;
                let mut out = 0;
                for p in 0..cells {
                    let stride = n.pow((cells - 1 - p) as u32);
                    let (ca, cb) = ((a / stride) % n, (b / stride) % n);
                    out += base.add(ca, cb) * stride;
                }
                out
            }
            OpsKind::Quotient {
                parent,
                reps,
                coset_of,
            } => coset_of[parent.add(reps[a], reps[b])] as usize,
            OpsKind::Explicit { .. } => unreachable!("explicit rings always carry tables"),
        }
    }

    fn compute_mul(&self, a: usize, b: usize) -> usize {
        match &self.kind {
            OpsKind::Modular { n } => ((a as u128 * b as u128) % *n as u128) as usize,
            OpsKind::PolyQuot { n, modulus, degree } => {
                let d = *degree;
                let nn = *n;
                let mut coeffs_a = vec![0u64; d];
                let mut coeffs_b = vec![0u64; d];
                let (mut ra, mut rb) = (a as u64, b as u64);
                for j in 0..d {
                    coeffs_a[j] = ra % nn;
                    coeffs_b[j] = rb % nn;
                    ra /= nn;
                    rb /= nn;
                }
                // convolve, then reduce by the monic modulus
                let mut conv = vec![0u64; 2 * d - 1];
                for (i, &ca) in coeffs_a.iter().enumerate() {
                    if ca == 0 {
                        continue;
                    }
                    for (j, &cb) in coeffs_b.iter().enumerate() {
                        conv[i + j] = (conv[i + j] + ca * cb) % nn;
                    }
                }
                for t in (d..2 * d - 1).rev() {
                    let lead = conv[t];
                    if lead != 0 {
                        conv[t] = 0;
                        for (i, &fc) in modulus.coeffs()[..d].iter().enumerate() {
                            let k = t - d + i;
                            conv[k] = (conv[k] + nn * lead - (lead * fc) % nn) % nn;
                        }
                    }
                }
                let mut out = 0usize;
                let mut stride = 1usize;
                for &c in conv[..d].iter() {
                    out += c as usize * stride;
                    stride *= nn as usize;
                }
                out
            }
            OpsKind::Product { factors, strides } => {
                let mut out = 0;
                for (f, &s) in factors.iter().zip(strides.iter()) {
                    let (ca, cb) = ((a / s) % f.order, (b / s) % f.order);
                    out += f.mul(ca, cb) * s;
                }
                out
            }
            OpsKind::Matrix { base, k } => {
                let n = base.order;
                let k = *k;
                let cells = k * k;
                let digit = |x: usize, p: usize| (x / n.pow((cells - 1 - p) as u32)) % n;
                let mut out = 0;
                for r in 0..k {
                    for c in 0..k {
                        let mut acc = 0; // ring zero
                        for m in 0..k {
                            acc = base.add(acc, base.mul(digit(a, r * k + m), digit(b, m * k + c)));
                        }
                        out += acc * n.pow((cells - 1 - (r * k + c)) as u32);
                    }
                }
                out
            }
            OpsKind::Quotient {
                parent,
                reps,
                coset_of,
            } => coset_of[parent.mul(reps[a], reps[b])] as usize,
            OpsKind::Explicit { .. } => unreachable!("explicit rings always carry tables"),
        }
    }

    /// Display string for one element under the constructor's canonical
    /// enumeration.
    pub fn element_label(&self, i: usize) -> String {
        debug_assert!(i < self.order);
        match &self.kind {
            OpsKind::Modular { .. } => i.to_string(),
            OpsKind::PolyQuot { n, degree, .. } => {
                let mut digits = Vec::with_capacity(*degree);
                let mut rest = i as u64;
                for _ in 0..*degree {
                    digits.push(rest % n);
                    rest /= n;
                }
                Polynomial::new(*n, digits).to_string()
            }
            OpsKind::Product { factors, strides } => {
                let parts: Vec<String> = factors
                    .iter()
                    .zip(strides.iter())
                    .map(|(f, &s)| f.element_label((i / s) % f.order))
                    .collect();
                format!("({})", parts.join(","))
            }
            OpsKind::Matrix { base, k } => {
                let n = base.order;
                let cells = k * k;
                let rows: Vec<String> = (0..*k)
                    .map(|r| {
                        let cols: Vec<String> = (0..*k)
                            .map(|c| {
                                let p = r * k + c;
                                base.element_label((i / n.pow((cells - 1 - p) as u32)) % n)
                            })
                            .collect();
                        format!("[{}]", cols.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            OpsKind::Quotient { parent, reps, .. } => parent.element_label(reps[i]),
            OpsKind::Explicit { labels } => match labels {
                Some(ls) => ls[i].clone(),
                None => i.to_string(),
            },
        }
    }

    /// True when both rings have the same order, identity index, and
    /// pointwise equal operation tables.
    pub fn tables_equal(&self, other: &FiniteRing) -> bool {
        if self.order != other.order || self.one != other.one {
            return false;
        }
        for a in 0..self.order {
            for b in 0..self.order {
                if self.add(a, b) != other.add(a, b) || self.mul(a, b) != other.mul(a, b) {
                    return false;
                }
            }
        }
        true
    }

    fn cache_tables(&mut self, cap: usize) {
        // u16 entries: never cache past 65535 elements regardless of cap.
        if self.order > cap || self.order > u16::MAX as usize {
            return;
        }
        if matches!(self.kind, OpsKind::Explicit { .. }) {
            return;
        }
        let n = self.order;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = self.compute_add(a, b) as u16;
                mul[a * n + b] = self.compute_mul(a, b) as u16;
            }
        }
        self.add_table = Some(add);
        self.mul_table = Some(mul);
    }
}

/// The ring `Z/nZ`, index i representing residue i.
pub fn make_zn(n: u64) -> Result<FiniteRing, Error> {
    make_zn_with(n, &BuildConfig::default())
}

pub fn make_zn_with(n: u64, cfg: &BuildConfig) -> Result<FiniteRing, Error> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let order = usize::try_from(n).map_err(|_| Error::Capacity(format!("Z{n} does not fit")))?;
    let mut ring = FiniteRing {
        order,
        one: 1,
        commutative: true,
        label: format!("Z{n}"),
        kind: OpsKind::Modular { n },
        add_table: None,
        mul_table: None,
    };
    ring.cache_tables(cfg.max_table_order);
    Ok(ring)
}

/// The field of order `p^s`, presented as `Z_p[x]` modulo the
/// lexicographically smallest monic irreducible polynomial of degree `s`.
pub fn make_gf(p: u64, s: u32) -> Result<FiniteRing, Error> {
    make_gf_with(p, s, &BuildConfig::default())
}

pub fn make_gf_with(p: u64, s: u32, cfg: &BuildConfig) -> Result<FiniteRing, Error> {
    if !is_prime(p) {
        return Err(Error::InvalidCharacteristic(p));
    }
    let modulus = find_irreducible(p, s)?;
    let q = p
        .checked_pow(s)
        .ok_or_else(|| Error::Capacity(format!("{p}^{s} overflows")))?;
    let ring = poly_quotient_unchecked(p, modulus, cfg)?;
    Ok(ring.with_label(format!("GF({q})")))
}

/// `Z_n[x]/(f)` for monic `f` of degree >= 1; order `n^deg(f)`.
pub fn make_poly_quotient(n: u64, f: &Polynomial) -> Result<FiniteRing, Error> {
    make_poly_quotient_with(n, f, &BuildConfig::default())
}

pub fn make_poly_quotient_with(
    n: u64,
    f: &Polynomial,
    cfg: &BuildConfig,
) -> Result<FiniteRing, Error> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let f = Polynomial::new(n, f.coeffs().to_vec());
    if !f.is_monic() || f.degree() == Some(0) || f.is_zero() {
        return Err(Error::NonMonicModulus);
    }
    poly_quotient_unchecked(n, f, cfg)
}

fn poly_quotient_unchecked(n: u64, f: Polynomial, cfg: &BuildConfig) -> Result<FiniteRing, Error> {
    let degree = f.degree().expect("modulus has positive degree");
    let order = n
        .checked_pow(degree as u32)
        .and_then(|o| usize::try_from(o).ok())
        .ok_or_else(|| Error::Capacity(format!("{n}^{degree} overflows")))?;
    let label = format!("Z{n}[x]/({f})");
    let mut ring = FiniteRing {
        order,
        one: 1,
        commutative: true,
        label,
        kind: OpsKind::PolyQuot {
            n,
            modulus: Arc::new(f),
            degree,
        },
        add_table: None,
        mul_table: None,
    };
    ring.cache_tables(cfg.max_table_order);
    Ok(ring)
}

/// Componentwise product of the given rings; element labels are tuples.
pub fn make_product(factors: Vec<FiniteRing>) -> Result<FiniteRing, Error> {
    make_product_with(factors, &BuildConfig::default())
}

pub fn make_product_with(factors: Vec<FiniteRing>, cfg: &BuildConfig) -> Result<FiniteRing, Error> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let mut order: usize = 1;
    for f in &factors {
        order = order
            .checked_mul(f.order)
            .ok_or_else(|| Error::Capacity("product order overflows".into()))?;
    }
    let mut strides = vec![1usize; factors.len()];
    for j in (0..factors.len() - 1).rev() {
        strides[j] = strides[j + 1] * factors[j + 1].order;
    }
    let one = factors
        .iter()
        .zip(&strides)
        .map(|(f, &s)| f.one * s)
        .sum();
    let commutative = factors.iter().all(|f| f.commutative);
    let label = factors
        .iter()
        .map(|f| {
            if matches!(f.kind, OpsKind::Product { .. }) {
                format!("({})", f.label)
            } else {
                f.label.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(" x ");
    let mut ring = FiniteRing {
        order,
        one,
        commutative,
        label,
        kind: OpsKind::Product {
            factors: Arc::new(factors),
            strides: Arc::new(strides),
        },
        add_table: None,
        mul_table: None,
    };
    ring.cache_tables(cfg.max_table_order);
    Ok(ring)
}

/// The ring of k-by-k matrices over a commutative base ring. Noncommutative
/// for k >= 2; annihilator-based constructions must then fix a [`Side`].
pub fn make_matrix_ring(base: &FiniteRing, k: usize) -> Result<FiniteRing, Error> {
    make_matrix_ring_with(base, k, &BuildConfig::default())
}

pub fn make_matrix_ring_with(
    base: &FiniteRing,
    k: usize,
    cfg: &BuildConfig,
) -> Result<FiniteRing, Error> {
    if !base.commutative {
        return Err(Error::NoncommutativeBase);
    }
    if k == 0 {
        return Err(Error::InvalidDimension(0));
    }
    let cells = k
        .checked_mul(k)
        .ok_or_else(|| Error::Capacity("matrix dimension overflows".into()))?;
    let order = (base.order as u128).checked_pow(cells as u32);
    let order = match order {
        Some(o) if o <= cfg.max_matrix_order as u128 => o as usize,
        _ => {
            return Err(Error::Capacity(format!(
                "matrix ring order {}^{} exceeds the budget of {} elements",
                base.order, cells, cfg.max_matrix_order
            )))
        }
    };
    let n = base.order;
    let one = (0..k)
        .map(|r| base.one * n.pow((cells - 1 - (r * k + r)) as u32))
        .sum();
    let mut ring = FiniteRing {
        order,
        one,
        commutative: k == 1,
        label: format!("M{k}({})", base.label),
        kind: OpsKind::Matrix {
            base: Arc::new(base.clone()),
            k,
        },
        add_table: None,
        mul_table: None,
    };
    ring.cache_tables(cfg.max_table_order);
    Ok(ring)
}

/// A ring given by raw operation tables. Index 0 must be the additive
/// identity; use [`ring_axiom_audit`] to certify the tables.
pub fn from_tables(
    label: impl Into<String>,
    order: usize,
    one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    labels: Option<Vec<String>>,
) -> Result<FiniteRing, Error> {
    if order < 2 {
        return Err(Error::InvalidOrder(order as u64));
    }
    if order > u16::MAX as usize {
        return Err(Error::BadTable(format!(
            "explicit tables support at most {} elements",
            u16::MAX
        )));
    }
    if add.len() != order * order || mul.len() != order * order {
        return Err(Error::BadTable(format!(
            "expected {} entries per table",
            order * order
        )));
    }
    if one >= order {
        return Err(Error::BadTable(format!("identity index {one} out of range")));
    }
    if let Some(entry) = add.iter().chain(mul.iter()).find(|&&e| e >= order) {
        return Err(Error::BadTable(format!("entry {entry} out of range")));
    }
    if let Some(ls) = &labels {
        if ls.len() != order {
            return Err(Error::BadTable("label count must equal the order".into()));
        }
    }
    let mul16: Vec<u16> = mul.iter().map(|&e| e as u16).collect();
    let commutative = (0..order)
        .all(|a| (0..order).all(|b| mul16[a * order + b] == mul16[b * order + a]));
    Ok(FiniteRing {
        order,
        one,
        commutative,
        label: label.into(),
        kind: OpsKind::Explicit {
            labels: labels.map(Arc::new),
        },
        add_table: Some(add.iter().map(|&e| e as u16).collect()),
        mul_table: Some(mul16),
    })
}

/// Quotient of `parent` by the ideal with the given members. Elements are the
/// cosets, each indexed by its least parent representative.
pub(crate) fn make_quotient(parent: &FiniteRing, ideal: &BitSet) -> Result<FiniteRing, Error> {
    if ideal.count() == parent.order {
        return Err(Error::InvalidQuotient);
    }
    let n = parent.order;
    let mut rep_of = vec![usize::MAX; n];
    for (e, slot) in rep_of.iter_mut().enumerate() {
        for i in ideal.iter() {
            *slot = (*slot).min(parent.add(e, i));
        }
    }
    let mut reps: Vec<usize> = (0..n).filter(|&e| rep_of[e] == e).collect();
    reps.sort_unstable();
    let mut index_of_rep = vec![u32::MAX; n];
    for (qi, &r) in reps.iter().enumerate() {
        index_of_rep[r] = qi as u32;
    }
    let coset_of: Vec<u32> = (0..n).map(|e| index_of_rep[rep_of[e]]).collect();
    let order = reps.len();
    let one = coset_of[parent.one] as usize;
    let ideal_members = ideal.members();
    let shown: Vec<String> = ideal_members.iter().take(16).map(|m| m.to_string()).collect();
    let suffix = if ideal_members.len() > 16 {
        format!(",+{} more", ideal_members.len() - 16)
    } else {
        String::new()
    };
    let label = format!("{}/{{{}{}}}", parent.label, shown.join(","), suffix);
    let parent_arc = Arc::new(parent.clone());
    let mut ring = FiniteRing {
        order,
        one,
        commutative: parent.commutative,
        label,
        kind: OpsKind::Quotient {
            parent: parent_arc,
            reps: Arc::new(reps),
            coset_of: Arc::new(coset_of),
        },
        add_table: None,
        mul_table: None,
    };
    if !parent.commutative {
        // A quotient of a noncommutative ring may become commutative.
        ring.commutative = (0..order)
            .all(|a| (0..order).all(|b| ring.compute_mul(a, b) == ring.compute_mul(b, a)));
    }
    ring.cache_tables(DEFAULT_TABLE_ORDER);
    Ok(ring)
}

/// `Ann(x)` on the requested side: elements whose product with `x` (in the
/// relevant order) is zero.
pub fn annihilator(ring: &FiniteRing, x: usize, side: Side) -> BitSet {
    let mut out = BitSet::new(ring.order());
    for r in ring.elements() {
        let hit = match side {
            Side::Left => ring.mul(r, x) == 0,
            Side::Right => ring.mul(x, r) == 0,
            Side::TwoSided => ring.mul(r, x) == 0 && ring.mul(x, r) == 0,
        };
        if hit {
            out.insert(r);
        }
    }
    out
}

/// Exhaustive classification of the elements of a ring.
#[derive(Debug, Clone)]
pub struct ElementClasses {
    /// Elements with a two-sided multiplicative inverse.
    pub units: BitSet,
    /// Elements with `e * e = e` (0 and 1 included).
    pub idempotents: BitSet,
    /// Elements with some power equal to zero (0 included).
    pub nilpotents: BitSet,
    /// `Z(R)`: elements killed by or killing some nonzero element, plus 0.
    pub zero_divisors: BitSet,
    /// The vertex set of the zero-annihilator graph.
    pub nonzero_nonunits: BitSet,
}

pub fn classify_elements(ring: &FiniteRing) -> ElementClasses {
    let n = ring.order();
    let one = ring.one_index();
    let mut units = BitSet::new(n);
    let mut idempotents = BitSet::new(n);
    let mut nilpotents = BitSet::new(n);
    let mut zero_divisors = BitSet::new(n);
    for a in 0..n {
        if (0..n).any(|b| ring.mul(a, b) == one && ring.mul(b, a) == one) {
            units.insert(a);
        }
        if ring.mul(a, a) == a {
            idempotents.insert(a);
        }
        let mut power = a;
        for _ in 0..n {
            if power == 0 {
                nilpotents.insert(a);
                break;
            }
            power = ring.mul(power, a);
        }
        if (0..n).any(|b| b != 0 && (ring.mul(a, b) == 0 || ring.mul(b, a) == 0)) || a == 0 {
            zero_divisors.insert(a);
        }
    }
    let mut nonzero_nonunits = units.complement();
    nonzero_nonunits.remove(0);
    ElementClasses {
        units,
        idempotents,
        nilpotents,
        zero_divisors,
        nonzero_nonunits,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    NonzeroIdentity,
    AddIdentity,
    AddInverse,
    AddCommutative,
    AddAssociative,
    MulIdentity,
    MulAssociative,
    DistributiveLeft,
    DistributiveRight,
    CommutativityFlag,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::NonzeroIdentity => "nonzero identity",
            Axiom::AddIdentity => "additive identity",
            Axiom::AddInverse => "additive inverse",
            Axiom::AddCommutative => "additive commutativity",
            Axiom::AddAssociative => "additive associativity",
            Axiom::MulIdentity => "multiplicative identity",
            Axiom::MulAssociative => "multiplicative associativity",
            Axiom::DistributiveLeft => "left distributivity",
            Axiom::DistributiveRight => "right distributivity",
            Axiom::CommutativityFlag => "commutativity flag",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    /// The elements witnessing the violation (empty when the flag claims
    /// noncommutativity but the law commutes everywhere).
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditOutcome {
    Pass {
        /// A pair with `ab != ba`, present exactly when the ring is flagged
        /// noncommutative.
        noncommutative_witness: Option<(usize, usize)>,
    },
    Fail(AxiomFailure),
}

impl AuditOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, AuditOutcome::Pass { .. })
    }
}

/// Checks every ring axiom on every tuple: group axioms for addition,
/// associativity and identity for multiplication, both distributive laws,
/// and agreement of the commutativity flag with the multiplication law.
/// Returns the first counterexample found. Cost is cubic in the order.
pub fn ring_axiom_audit(ring: &FiniteRing) -> AuditOutcome {
    let n = ring.order();
    let one = ring.one_index();
    let fail = |axiom, witness| AuditOutcome::Fail(AxiomFailure { axiom, witness });
    if one == 0 {
        return fail(Axiom::NonzeroIdentity, vec![one]);
    }
    for a in 0..n {
        if ring.add(0, a) != a || ring.add(a, 0) != a {
            return fail(Axiom::AddIdentity, vec![a]);
        }
        if !(0..n).any(|b| ring.add(a, b) == 0) {
            return fail(Axiom::AddInverse, vec![a]);
        }
        if ring.mul(one, a) != a || ring.mul(a, one) != a {
            return fail(Axiom::MulIdentity, vec![a]);
        }
    }
    let mut noncomm_witness = None;
    for a in 0..n {
        for b in 0..n {
            if ring.add(a, b) != ring.add(b, a) {
                return fail(Axiom::AddCommutative, vec![a, b]);
            }
            if noncomm_witness.is_none() && ring.mul(a, b) != ring.mul(b, a) {
                noncomm_witness = Some((a, b));
            }
        }
    }
    match (ring.is_commutative(), noncomm_witness) {
        (true, Some((a, b))) => return fail(Axiom::CommutativityFlag, vec![a, b]),
        (false, None) => return fail(Axiom::CommutativityFlag, vec![]),
        _ => {}
    }
    for a in 0..n {
        for b in 0..n {
            let ab_add = ring.add(a, b);
            let ab_mul = ring.mul(a, b);
            for c in 0..n {
                if ring.add(ab_add, c) != ring.add(a, ring.add(b, c)) {
                    return fail(Axiom::AddAssociative, vec![a, b, c]);
                }
                if ring.mul(ab_mul, c) != ring.mul(a, ring.mul(b, c)) {
                    return fail(Axiom::MulAssociative, vec![a, b, c]);
                }
                if ring.mul(a, ring.add(b, c)) != ring.add(ab_mul, ring.mul(a, c)) {
                    return fail(Axiom::DistributiveLeft, vec![a, b, c]);
                }
                if ring.mul(ab_add, c) != ring.add(ring.mul(a, c), ring.mul(b, c)) {
                    return fail(Axiom::DistributiveRight, vec![a, b, c]);
                }
            }
        }
    }
    AuditOutcome::Pass {
        noncommutative_witness: noncomm_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn zn_basics() {
        let z2 = make_zn(2).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.one_index(), 1);
        let z6 = make_zn(6).unwrap();
        assert_eq!(z6.mul(2, 3), 0);
        assert_eq!(z6.add(4, 5), 3);
        assert!(matches!(make_zn(1), Err(Error::InvalidOrder(1))));
        assert!(matches!(make_zn(0), Err(Error::InvalidOrder(0))));
    }

    #[test]
    fn audits_pass_on_constructors() {
        for ring in [
            make_zn(12).unwrap(),
            make_gf(2, 2).unwrap(),
            make_gf(3, 2).unwrap(),
            make_poly_quotient(2, &Polynomial::new(2, vec![0, 0, 1])).unwrap(),
            make_product(vec![make_zn(2).unwrap(), make_zn(3).unwrap()]).unwrap(),
        ] {
            assert!(
                ring_axiom_audit(&ring).is_pass(),
                "audit failed for {}",
                ring.label()
            );
        }
    }

    #[test]
    fn matrix_ring_audit_reports_noncommutative_witness() {
        let m2 = make_matrix_ring(&make_zn(2).unwrap(), 2).unwrap();
        match ring_axiom_audit(&m2) {
            AuditOutcome::Pass {
                noncommutative_witness: Some((a, b)),
            } => assert_ne!(m2.mul(a, b), m2.mul(b, a)),
            other => panic!("expected pass with witness, got {other:?}"),
        }
    }

    #[test]
    fn audit_catches_corrupted_table() {
        let z4 = make_zn(4).unwrap();
        let n = 4;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = z4.add(a, b);
                mul[a * n + b] = z4.mul(a, b);
            }
        }
        mul[2 * n + 3] = 1; // break 2*3
        let bad = from_tables("Z4corrupt", n, 1, add, mul, None).unwrap();
        match ring_axiom_audit(&bad) {
            AuditOutcome::Fail(f) => assert!(!f.witness.is_empty()),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn gf_is_a_field_with_cyclic_units() {
        let f4 = make_gf(2, 2).unwrap();
        assert_eq!(f4.order(), 4);
        let classes = classify_elements(&f4);
        assert_eq!(classes.units.count(), 3);
        // some generator has order exactly 3
        let cyclic = (1..4).any(|g| {
            let g2 = f4.mul(g, g);
            let g3 = f4.mul(g2, g);
            g3 == f4.one_index() && g2 != f4.one_index() && g != f4.one_index()
        });
        assert!(cyclic);
        assert!(matches!(
            make_gf(4, 1),
            Err(Error::InvalidCharacteristic(4))
        ));
    }

    #[test]
    fn gf_p_1_matches_zn() {
        let f5 = make_gf(5, 1).unwrap();
        let z5 = make_zn(5).unwrap();
        assert!(f5.tables_equal(&z5));
        assert_eq!(classify_elements(&f5).units.count(), 4);
    }

    #[test]
    fn gf_matches_poly_quotient_presentation() {
        for (p, s) in [(2u64, 2u32), (2, 3), (3, 2), (5, 2)] {
            let gf = make_gf(p, s).unwrap();
            let quotient = make_poly_quotient(p, &find_irreducible(p, s).unwrap()).unwrap();
            assert!(gf.tables_equal(&quotient), "GF({p}^{s})");
        }
    }

    #[test]
    fn poly_quotient_examples() {
        let x2 = Polynomial::new(2, vec![0, 0, 1]);
        let r = make_poly_quotient(2, &x2).unwrap();
        assert_eq!(r.order(), 4);
        // index 2 is the class of x; it squares to zero
        assert_eq!(r.element_label(2), "x");
        assert_eq!(r.mul(2, 2), 0);
        // x^2+x+1 gives the field of four elements
        let irr = Polynomial::new(2, vec![1, 1, 1]);
        let f = make_poly_quotient(2, &irr).unwrap();
        assert!(f.tables_equal(&make_gf(2, 2).unwrap()));
        // non-monic modulus is rejected
        let non_monic = Polynomial::new(4, vec![1, 2]); // 2x+1 over Z4
        assert!(matches!(
            make_poly_quotient(4, &non_monic),
            Err(Error::NonMonicModulus)
        ));
        assert!(matches!(
            make_poly_quotient(2, &Polynomial::new(2, vec![1])),
            Err(Error::NonMonicModulus)
        ));
    }

    #[test]
    fn product_examples() {
        let z2z2 = make_product(vec![make_zn(2).unwrap(), make_zn(2).unwrap()]).unwrap();
        assert_eq!(z2z2.order(), 4);
        assert_eq!(z2z2.one_index(), 3);
        assert_eq!(z2z2.element_label(3), "(1,1)");
        let z5z5 = make_product(vec![make_gf(5, 1).unwrap(), make_gf(5, 1).unwrap()]).unwrap();
        assert_eq!(z5z5.order(), 25);
        let mixed = make_product(vec![make_zn(2).unwrap(), make_gf(2, 2).unwrap()]).unwrap();
        assert_eq!(mixed.order(), 8);
        assert!(matches!(make_product(vec![]), Err(Error::EmptyProduct)));
    }

    #[test]
    fn matrix_ring_unit_counts() {
        let m1 = make_matrix_ring(&make_zn(2).unwrap(), 1).unwrap();
        assert!(m1.is_commutative());
        assert_eq!(m1.order(), 2);
        let m2z2 = make_matrix_ring(&make_zn(2).unwrap(), 2).unwrap();
        assert_eq!(m2z2.order(), 16);
        assert!(!m2z2.is_commutative());
        assert_eq!(classify_elements(&m2z2).units.count(), 6); // |GL(2,2)|
        let m2z3 = make_matrix_ring(&make_zn(3).unwrap(), 2).unwrap();
        assert_eq!(m2z3.order(), 81);
        assert_eq!(classify_elements(&m2z3).units.count(), 48); // |GL(2,3)|
        assert!(ring_axiom_audit(&m2z3).is_pass());
        // budget guard
        assert!(matches!(
            make_matrix_ring(&make_zn(9).unwrap(), 2),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(
            make_matrix_ring(&make_zn(2).unwrap(), 0),
            Err(Error::InvalidDimension(0))
        ));
    }

    #[test]
    fn classification_examples() {
        let z6 = make_zn(6).unwrap();
        let c = classify_elements(&z6);
        assert_eq!(c.units.members(), vec![1, 5]);
        assert_eq!(c.idempotents.members(), vec![0, 1, 3, 4]);
        assert_eq!(c.nilpotents.members(), vec![0]);
        assert_eq!(c.zero_divisors.members(), vec![0, 2, 3, 4]);
        assert_eq!(c.nonzero_nonunits.members(), vec![2, 3, 4]);

        let f7 = make_gf(7, 1).unwrap();
        assert!(classify_elements(&f7).nonzero_nonunits.is_empty());

        let z8 = make_zn(8).unwrap();
        let c8 = classify_elements(&z8);
        assert_eq!(c8.nilpotents.members(), vec![0, 2, 4, 6]);
        assert_eq!(c8.nonzero_nonunits.members(), vec![2, 4, 6]);
    }

    #[test]
    fn unit_counts_match_euler_phi() {
        for n in 2u64..=40 {
            let ring = make_zn(n).unwrap();
            let phi = (1..n).filter(|&k| gcd(k, n) == 1).count();
            assert_eq!(classify_elements(&ring).units.count(), phi, "n = {n}");
        }
    }

    #[test]
    fn annihilator_examples() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(annihilator(&z6, 2, Side::TwoSided).members(), vec![0, 3]);
        assert_eq!(annihilator(&z6, 0, Side::Left).count(), 6);
        assert!(annihilator(&z6, 1, Side::Left).is_only_zero());

        // in M2(Z2), the left annihilator of [[1,0],[0,0]] is the four
        // matrices with zero first column
        let m2 = make_matrix_ring(&make_zn(2).unwrap(), 2).unwrap();
        let e11 = (0..16)
            .find(|&i| m2.element_label(i) == "[[1,0],[0,0]]")
            .unwrap();
        let ann = annihilator(&m2, e11, Side::Left);
        assert_eq!(ann.count(), 4);
        for m in ann.iter() {
            assert_eq!(m2.mul(m, e11), 0);
        }
    }

    #[test]
    fn commutative_sides_coincide() {
        for ring in [make_zn(12).unwrap(), make_gf(2, 3).unwrap()] {
            for x in ring.elements() {
                let l = annihilator(&ring, x, Side::Left);
                let r = annihilator(&ring, x, Side::Right);
                let t = annihilator(&ring, x, Side::TwoSided);
                assert_eq!(l, r);
                assert_eq!(l, t);
            }
        }
    }

    #[test]
    fn annihilators_are_ideals() {
        // left annihilators are left ideals, right annihilators right
        // ideals, and the two-sided annihilator is their intersection (an
        // additive subgroup; a genuine ideal once the ring is commutative)
        let rings = [
            make_zn(12).unwrap(),
            make_matrix_ring(&make_zn(2).unwrap(), 2).unwrap(),
        ];
        for ring in &rings {
            for x in ring.elements() {
                let left = annihilator(ring, x, Side::Left);
                let right = annihilator(ring, x, Side::Right);
                let two = annihilator(ring, x, Side::TwoSided);
                assert_eq!(two, left.intersection(&right));
                for side in [Side::Left, Side::Right, Side::TwoSided] {
                    let ann = annihilator(ring, x, side);
                    for a in ann.iter() {
                        for b in ann.iter() {
                            assert!(ann.contains(ring.add(a, b)));
                        }
                    }
                }
                for a in left.iter() {
                    for r in ring.elements() {
                        assert!(left.contains(ring.mul(r, a)));
                    }
                }
                for a in right.iter() {
                    for r in ring.elements() {
                        assert!(right.contains(ring.mul(a, r)));
                    }
                }
                if ring.is_commutative() {
                    assert!(crate::ideal::is_ideal(ring, &two));
                }
            }
        }
    }

    #[test]
    fn every_nonzero_nonunit_divides_zero() {
        for ring in [
            make_zn(6).unwrap(),
            make_zn(8).unwrap(),
            make_zn(12).unwrap(),
            make_gf(3, 2).unwrap(),
            make_product(vec![make_zn(4).unwrap(), make_zn(3).unwrap()]).unwrap(),
            make_matrix_ring(&make_zn(2).unwrap(), 2).unwrap(),
        ] {
            let c = classify_elements(&ring);
            for x in c.nonzero_nonunits.iter() {
                assert!(c.zero_divisors.contains(x), "{} in {}", x, ring.label());
            }
        }
    }

    #[test]
    fn lazy_laws_match_tables() {
        // force the on-demand path by building with a tiny table cap
        let cfg = BuildConfig {
            max_table_order: 1,
            max_matrix_order: DEFAULT_MATRIX_ORDER,
        };
        let eager = make_product(vec![make_zn(4).unwrap(), make_zn(3).unwrap()]).unwrap();
        let lazy = make_product_with(
            vec![make_zn_with(4, &cfg).unwrap(), make_zn_with(3, &cfg).unwrap()],
            &cfg,
        )
        .unwrap();
        assert!(eager.tables_equal(&lazy));
        let eager_gf = make_gf(3, 2).unwrap();
        let lazy_gf = make_gf_with(3, 2, &cfg).unwrap();
        assert!(eager_gf.tables_equal(&lazy_gf));
        let eager_m = make_matrix_ring(&make_zn(2).unwrap(), 2).unwrap();
        let lazy_m = make_matrix_ring_with(&make_zn_with(2, &cfg).unwrap(), 2, &cfg).unwrap();
        assert!(eager_m.tables_equal(&lazy_m));
    }
}
