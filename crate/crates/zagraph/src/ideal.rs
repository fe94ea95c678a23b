//! Ideals of a finite ring: spans, the full lattice, spectra, quotients, and
//! the structural predicates (local, chained, Bezout, reduced, ...).

use crate::bitset::BitSet;
use crate::error::Error;
use crate::ring::{self, classify_elements, FiniteRing};

/// Ideals kept per lattice before giving up with a capacity error.
pub const DEFAULT_IDEAL_CAP: usize = 4096;

/// A two-sided ideal, stored as a membership bit vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub ring_label: String,
    pub members: BitSet,
}

impl Ideal {
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_zero(&self) -> bool {
        self.members.is_only_zero()
    }

    pub fn is_proper(&self, ring: &FiniteRing) -> bool {
        self.members.count() < ring.order()
    }

    /// `{a,b,...}` using the ring's element labels.
    pub fn describe(&self, ring: &FiniteRing) -> String {
        let labels: Vec<String> = self
            .members
            .iter()
            .map(|m| ring.element_label(m))
            .collect();
        format!("{{{}}}", labels.join(","))
    }
}

/// True when `set` contains 0 and is closed under addition and under
/// multiplication by every ring element on both sides.
pub fn is_ideal(ring: &FiniteRing, set: &BitSet) -> bool {
    if !set.contains(0) {
        return false;
    }
    for a in set.iter() {
        for b in set.iter() {
            if !set.contains(ring.add(a, b)) {
                return false;
            }
        }
        for r in ring.elements() {
            if !set.contains(ring.mul(r, a)) || !set.contains(ring.mul(a, r)) {
                return false;
            }
        }
    }
    true
}

/// Smallest two-sided ideal containing `generators`, computed by closure
/// iteration over sums and products with ring elements.
pub fn ideal_span(ring: &FiniteRing, generators: &BitSet) -> Ideal {
    let n = ring.order();
    let mut members = BitSet::new(n);
    members.insert(0);
    let mut queue: Vec<usize> = Vec::new();
    for g in generators.iter() {
        if !members.contains(g) {
            members.insert(g);
            queue.push(g);
        }
    }
    while let Some(x) = queue.pop() {
        let push = |v: usize, members: &mut BitSet, queue: &mut Vec<usize>| {
            if !members.contains(v) {
                members.insert(v);
                queue.push(v);
            }
        };
        for y in members.clone().iter() {
            push(ring.add(x, y), &mut members, &mut queue);
        }
        for r in ring.elements() {
            push(ring.mul(r, x), &mut members, &mut queue);
            push(ring.mul(x, r), &mut members, &mut queue);
        }
    }
    Ideal {
        ring_label: ring.label().to_string(),
        members,
    }
}

fn additive_closure(ring: &FiniteRing, seed: &BitSet) -> BitSet {
    let mut members = seed.clone();
    members.insert(0);
    let mut queue: Vec<usize> = members.members();
    while let Some(x) = queue.pop() {
        for y in members.clone().iter() {
            let s = ring.add(x, y);
            if !members.contains(s) {
                members.insert(s);
                queue.push(s);
            }
        }
    }
    members
}

/// The complete ideal lattice, sorted by (cardinality, member list).
///
/// Computed as the closure of the principal ideals under pairwise ideal sum;
/// in a finite ring every ideal is a finite sum of principal ideals, so the
/// fixpoint is the full lattice.
pub fn all_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>, Error> {
    all_ideals_capped(ring, DEFAULT_IDEAL_CAP)
}

pub fn all_ideals_capped(ring: &FiniteRing, cap: usize) -> Result<Vec<Ideal>, Error> {
    let mut seen: std::collections::BTreeSet<BitSet> = std::collections::BTreeSet::new();
    let mut queue: Vec<BitSet> = Vec::new();
    for x in ring.elements() {
        let span = ideal_span(ring, &BitSet::from_indices(ring.order(), &[x]));
        if seen.insert(span.members.clone()) {
            queue.push(span.members);
        }
    }
    while let Some(current) = queue.pop() {
        if seen.len() > cap {
            return Err(Error::Capacity(format!(
                "ideal lattice of {} exceeds {} ideals",
                ring.label(),
                cap
            )));
        }
        let snapshot: Vec<BitSet> = seen.iter().cloned().collect();
        for other in snapshot {
            // sums of ideals are ideals, so additive closure suffices
            let sum = additive_closure(ring, &current.union(&other));
            if seen.insert(sum.clone()) {
                queue.push(sum);
            }
        }
    }
    let mut ideals: Vec<Ideal> = seen
        .into_iter()
        .map(|members| Ideal {
            ring_label: ring.label().to_string(),
            members,
        })
        .collect();
    ideals.sort_by_key(|i| (i.members.count(), i.members.members()));
    Ok(ideals)
}

#[derive(Debug, Clone)]
pub struct IdealAlgebra {
    pub sum: Ideal,
    pub intersection: Ideal,
    pub product: Ideal,
}

pub fn ideal_algebra(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> IdealAlgebra {
    let sum = Ideal {
        ring_label: ring.label().to_string(),
        members: additive_closure(ring, &a.members.union(&b.members)),
    };
    let intersection = Ideal {
        ring_label: ring.label().to_string(),
        members: a.members.intersection(&b.members),
    };
    debug_assert!(is_ideal(ring, &intersection.members));
    let mut pairwise = BitSet::new(ring.order());
    for x in a.members.iter() {
        for y in b.members.iter() {
            pairwise.insert(ring.mul(x, y));
        }
    }
    let product = ideal_span(ring, &pairwise);
    IdealAlgebra {
        sum,
        intersection,
        product,
    }
}

/// `Ann(I) = {r : r a = 0 and a r = 0 for every a in I}`, the intersection of
/// the element annihilators over the members of `I`.
pub fn ideal_annihilator(ring: &FiniteRing, ideal: &Ideal) -> Ideal {
    let mut members = BitSet::full(ring.order());
    for a in ideal.members.iter() {
        members.intersect_with(&ring::annihilator(ring, a, ring::Side::TwoSided));
    }
    Ideal {
        ring_label: ring.label().to_string(),
        members,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealClass {
    pub proper: bool,
    pub prime: bool,
    pub maximal: bool,
}

/// Classifies `ideal` against the full lattice: prime by the elementwise
/// product test, maximal by the absence of a strictly intermediate ideal.
pub fn classify_ideal(ring: &FiniteRing, ideal: &Ideal, lattice: &[Ideal]) -> IdealClass {
    let proper = ideal.is_proper(ring);
    let mut prime = proper;
    'outer: for a in ring.elements() {
        if ideal.contains(a) {
            continue;
        }
        for b in ring.elements() {
            if !ideal.contains(b) && ideal.contains(ring.mul(a, b)) {
                prime = false;
                break 'outer;
            }
        }
    }
    prime = prime && proper;
    let maximal = proper
        && !lattice.iter().any(|j| {
            j.members.count() < ring.order()
                && j.members != ideal.members
                && ideal.members.is_subset_of(&j.members)
        });
    IdealClass {
        proper,
        prime,
        maximal,
    }
}

#[derive(Debug, Clone)]
pub struct SpectrumSummary {
    pub maximal_ideals: Vec<Ideal>,
    pub minimal_primes: Vec<Ideal>,
    pub jacobson_radical: Ideal,
}

pub fn spectrum(ring: &FiniteRing) -> Result<SpectrumSummary, Error> {
    let lattice = all_ideals(ring)?;
    Ok(spectrum_with(ring, &lattice))
}

pub fn spectrum_with(ring: &FiniteRing, lattice: &[Ideal]) -> SpectrumSummary {
    let classes: Vec<IdealClass> = lattice
        .iter()
        .map(|i| classify_ideal(ring, i, lattice))
        .collect();
    let maximal_ideals: Vec<Ideal> = lattice
        .iter()
        .zip(&classes)
        .filter(|(_, c)| c.maximal)
        .map(|(i, _)| i.clone())
        .collect();
    let primes: Vec<&Ideal> = lattice
        .iter()
        .zip(&classes)
        .filter(|(_, c)| c.prime)
        .map(|(i, _)| i)
        .collect();
    let minimal_primes: Vec<Ideal> = primes
        .iter()
        .filter(|p| {
            !primes
                .iter()
                .any(|q| q.members != p.members && q.members.is_subset_of(&p.members))
        })
        .map(|p| (*p).clone())
        .collect();
    let mut jac = BitSet::full(ring.order());
    for m in &maximal_ideals {
        jac.intersect_with(&m.members);
    }
    SpectrumSummary {
        maximal_ideals,
        minimal_primes,
        jacobson_radical: Ideal {
            ring_label: ring.label().to_string(),
            members: jac,
        },
    }
}

/// The quotient ring `R/I` on coset representatives (least index per coset).
pub fn quotient_ring(ring: &FiniteRing, ideal: &Ideal) -> Result<FiniteRing, Error> {
    if !ideal.is_proper(ring) {
        return Err(Error::InvalidQuotient);
    }
    debug_assert!(is_ideal(ring, &ideal.members));
    ring::make_quotient(ring, &ideal.members)
}

/// Structural predicates quantified over in the classification results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingPredicates {
    /// Exactly one maximal ideal.
    pub local: bool,
    /// Every nonzero element is a unit.
    pub field: bool,
    /// Ideals totally ordered by inclusion.
    pub chained: bool,
    /// Every ideal is principal (equivalent to the finitely-generated form
    /// in a finite ring, where every ideal is finitely generated).
    pub bezout: bool,
    /// No nonzero nilpotent.
    pub reduced: bool,
    /// Trivial Jacobson radical.
    pub semiprimitive: bool,
    /// No nonzero zero divisor.
    pub integral_domain: bool,
}

pub fn ring_predicates(ring: &FiniteRing) -> Result<RingPredicates, Error> {
    let lattice = all_ideals(ring)?;
    Ok(ring_predicates_with(ring, &lattice))
}

pub fn ring_predicates_with(ring: &FiniteRing, lattice: &[Ideal]) -> RingPredicates {
    let classes = classify_elements(ring);
    let spec = spectrum_with(ring, lattice);
    let chained = lattice.iter().all(|a| {
        lattice
            .iter()
            .all(|b| a.members.is_subset_of(&b.members) || b.members.is_subset_of(&a.members))
    });
    let bezout = lattice.iter().all(|i| {
        i.members
            .iter()
            .any(|x| ideal_span(ring, &BitSet::from_indices(ring.order(), &[x])).members == i.members)
    });
    RingPredicates {
        local: spec.maximal_ideals.len() == 1,
        field: classes.nonzero_nonunits.is_empty(),
        chained,
        bezout,
        reduced: classes.nilpotents.is_only_zero(),
        semiprimitive: spec.jacobson_radical.is_zero(),
        integral_domain: classes.zero_divisors.is_only_zero(),
    }
}

/// The canonical "product of fields" witness: when `Jac(R) = 0`, the
/// quotients by the maximal ideals, verified to be fields whose orders
/// multiply back to `|R|`. Returns `None` when no such witness exists.
pub fn crt_decompose(ring: &FiniteRing) -> Result<Option<Vec<FiniteRing>>, Error> {
    let spec = spectrum(ring)?;
    crt_decompose_with(ring, &spec)
}

pub fn crt_decompose_with(
    ring: &FiniteRing,
    spec: &SpectrumSummary,
) -> Result<Option<Vec<FiniteRing>>, Error> {
    if !spec.jacobson_radical.is_zero() {
        return Ok(None);
    }
    let mut quotients = Vec::with_capacity(spec.maximal_ideals.len());
    let mut order_product: u128 = 1;
    for m in &spec.maximal_ideals {
        let q = quotient_ring(ring, m)?;
        let is_field = classify_elements(&q).nonzero_nonunits.is_empty();
        if !is_field {
            return Ok(None);
        }
        order_product *= q.order() as u128;
        quotients.push(q);
    }
    if order_product != ring.order() as u128 {
        return Ok(None);
    }
    Ok(Some(quotients))
}
