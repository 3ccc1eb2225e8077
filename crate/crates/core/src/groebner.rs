//! Buchberger's algorithm and the ideal operations built on it.
//!
//! Pair selection uses the normal strategy (smallest lcm first, ties broken
//! by generator index) together with the Gebauer-Möller installation of
//! Buchberger's coprimality and chain criteria, so the output is
//! deterministic. Every computation runs under a [`GroebnerBudget`];
//! exhausting it is an error, never a partial answer.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::field::PrimeModulus;
use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial, RingRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("Gröbner budget exceeded: {what} went past {limit}")]
    BudgetExceeded { what: &'static str, limit: u64 },
    #[error("cannot take the colon by the zero polynomial")]
    ZeroDivisor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerBudget {
    pub max_basis_size: usize,
    pub max_reduction_steps: u64,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget { max_basis_size: 20_000, max_reduction_steps: 20_000_000 }
    }
}

type Terms = Vec<(Monomial, u64)>;

/// Polynomial with terms sorted descending in a fixed order.
#[derive(Clone, Debug)]
struct OrderedPoly {
    terms: Terms,
}

impl OrderedPoly {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> u64 {
        self.terms[0].1
    }

    fn make_monic(&mut self, p: PrimeModulus) {
        if let Some(&(_, c)) = self.terms.first() {
            if c != 1 {
                let inv = p.inv(c).expect("nonzero");
                for t in self.terms.iter_mut() {
                    t.1 = p.mul(t.1, inv);
                }
            }
        }
    }
}

/// `a - c * m * b` with both inputs sorted descending under `order`.
fn sub_scaled(order: &MonomialOrder, p: PrimeModulus, a: &[(Monomial, u64)], c: u64, m: &Monomial, b: &[(Monomial, u64)]) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(bm, bc)| (bm.mul(m), p.mul(*bc, c))).peekable();
    while i < a.len() {
        let Some((bm, _)) = bi.peek() else { break };
        match order.cmp(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (bm, bc) = bi.next().unwrap();
                out.push((bm, p.neg(bc)));
            }
            Ordering::Equal => {
                let (bm, bc) = bi.next().unwrap();
                let v = p.sub(a[i].1, bc);
                if v != 0 {
                    out.push((bm, v));
                }
                i += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(bi.map(|(bm, bc)| (bm, p.neg(bc))));
    out
}

struct Reducer<'a> {
    order: &'a MonomialOrder,
    p: PrimeModulus,
    steps: u64,
    max_steps: u64,
}

impl Reducer<'_> {
    /// Full reduction of `f` by the monic `basis` (only indices in `active`).
    fn reduce(&mut self, f: Terms, basis: &[OrderedPoly], active: &[usize]) -> Result<Terms, GroebnerError> {
        let mut rem: Terms = Vec::new();
        let mut cur = f;
        // `cur` holds the not-yet-inspected tail; its first term is the
        // largest remaining term.
        while let Some((m, c)) = cur.first().cloned() {
            let reducer = active.iter().map(|&i| &basis[i]).find(|g| g.lm().divides(&m));
            match reducer {
                Some(g) => {
                    self.steps += 1;
                    if self.steps > self.max_steps {
                        return Err(GroebnerError::BudgetExceeded { what: "reduction steps", limit: self.max_steps });
                    }
                    let shift = m.div(g.lm()).expect("divisible");
                    // g is monic, so the leading terms cancel exactly.
                    cur = sub_scaled(self.order, self.p, &cur, c, &shift, &g.terms);
                }
                None => {
                    rem.push((m, c));
                    cur.remove(0);
                }
            }
        }
        Ok(rem)
    }
}

/// A reduced Gröbner basis: monic, pairwise irreducible, sorted by leading
/// monomial (largest first).
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: RingRef,
    order: MonomialOrder,
    elements: Vec<OrderedPoly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Basis elements as canonical polynomials.
    pub fn elements(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|g| Polynomial::from_sorted_terms(&self.ring, &self.order, g.terms.clone())).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.lm().is_one())
    }

    /// Remainder of `f` with no term divisible by a leading monomial.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut red = Reducer { order: &self.order, p: self.ring.characteristic(), steps: 0, max_steps: u64::MAX };
        let active: Vec<usize> = (0..self.elements.len()).collect();
        let rem = red.reduce(f.terms_in_order(&self.order), &self.elements, &active).expect("unbounded reduction");
        Polynomial::from_sorted_terms(&self.ring, &self.order, rem)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Buchberger's criterion: every S-polynomial of the basis reduces to
    /// zero. Checked explicitly, for every pair.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let p = self.ring.characteristic();
        let active: Vec<usize> = (0..self.elements.len()).collect();
        let mut red = Reducer { order: &self.order, p, steps: 0, max_steps: u64::MAX };
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let s = s_polynomial(&self.order, p, &self.elements[i], &self.elements[j]);
                if !red.reduce(s, &self.elements, &active).expect("unbounded").is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Pairwise irreducible leading terms and monic elements.
    pub fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, g)| {
            g.lc() == 1
                && self.elements.iter().enumerate().all(|(j, h)| {
                    i == j || g.terms.iter().all(|(m, _)| !h.lm().divides(m))
                })
        })
    }
}

fn s_polynomial(order: &MonomialOrder, p: PrimeModulus, f: &OrderedPoly, g: &OrderedPoly) -> Terms {
    let lcm = f.lm().lcm(g.lm());
    let mf = lcm.div(f.lm()).unwrap();
    let mg = lcm.div(g.lm()).unwrap();
    let cf = p.inv(f.lc()).unwrap();
    let cg = p.inv(g.lc()).unwrap();
    let scaled_f: Terms = f.terms.iter().map(|(m, c)| (m.mul(&mf), p.mul(*c, cf))).collect();
    let mut s = sub_scaled(order, p, &scaled_f, cg, &mg, &g.terms);
    // Leading terms cancel; guard against rounding of the representation.
    s.retain(|(_, c)| *c != 0);
    s
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn buchberger(ring: &RingRef, generators: &[Polynomial], order: &MonomialOrder, budget: &GroebnerBudget) -> Result<GroebnerBasis, GroebnerError> {
    let p = ring.characteristic();
    let mut red = Reducer { order, p, steps: 0, max_steps: budget.max_reduction_steps };
    let mut polys: Vec<OrderedPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<OrderedPoly> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| OrderedPoly { terms: g.terms_in_order(order) })
        .collect();
    // Deterministic: smaller leading monomials first.
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    for mut f in inputs {
        f.make_monic(p);
        let r = red.reduce(f.terms, &polys, &active)?;
        if r.is_empty() {
            continue;
        }
        let mut h = OrderedPoly { terms: r };
        h.make_monic(p);
        install(&mut polys, &mut active, &mut pairs, h, budget)?;
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                order.cmp(&pairs[a].lcm, &pairs[b].lcm).then_with(|| (pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(order, p, &polys[pair.i], &polys[pair.j]);
        let r = red.reduce(s, &polys, &active)?;
        if r.is_empty() {
            continue;
        }
        let mut h = OrderedPoly { terms: r };
        h.make_monic(p);
        if h.lm().is_one() {
            return Ok(GroebnerBasis { ring: Arc::clone(ring), order: order.clone(), elements: vec![h] });
        }
        install(&mut polys, &mut active, &mut pairs, h, budget)?;
    }

    let basis: Vec<OrderedPoly> = active.iter().map(|&i| polys[i].clone()).collect();
    Ok(GroebnerBasis { ring: Arc::clone(ring), order: order.clone(), elements: interreduce(order, p, basis, &mut red)? })
}

/// Gebauer-Möller update.
fn install(polys: &mut Vec<OrderedPoly>, active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: OrderedPoly, budget: &GroebnerBudget) -> Result<(), GroebnerError> {
    if polys.len() >= budget.max_basis_size {
        return Err(GroebnerError::BudgetExceeded { what: "basis size", limit: budget.max_basis_size as u64 });
    }
    let hi = polys.len();
    let hlm = h.lm().clone();
    polys.push(h);

    let candidates: Vec<Pair> = active.iter().map(|&g| Pair { i: g, j: hi, lcm: polys[g].lm().lcm(&hlm) }).collect();
    let coprime = |pr: &Pair, polys: &[OrderedPoly]| polys[pr.i].lm().is_coprime(&hlm);

    // Chain criterion among the new pairs.
    let mut kept: Vec<Pair> = Vec::new();
    for (idx, c) in candidates.iter().enumerate() {
        if coprime(c, polys) {
            kept.push(c.clone());
            continue;
        }
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(k, other)| k != idx && other.lcm.divides(&c.lcm) && (other.lcm != c.lcm || k < idx));
        if !dominated {
            kept.push(c.clone());
        }
    }
    // Among pairs with equal lcm keep one, and drop the coprime ones.
    let mut new_pairs: Vec<Pair> = Vec::new();
    for c in kept {
        if coprime(&c, polys) || new_pairs.iter().any(|q| q.lcm == c.lcm) {
            continue;
        }
        new_pairs.push(c);
    }

    // Old pairs whose lcm is strictly divisible by lm(h) in both directions.
    pairs.retain(|pr| {
        !(hlm.divides(&pr.lcm) && polys[pr.i].lm().lcm(&hlm) != pr.lcm && polys[pr.j].lm().lcm(&hlm) != pr.lcm)
    });
    pairs.extend(new_pairs);

    active.retain(|&g| !hlm.divides(polys[g].lm()));
    active.push(hi);
    Ok(())
}

fn interreduce(order: &MonomialOrder, p: PrimeModulus, basis: Vec<OrderedPoly>, red: &mut Reducer<'_>) -> Result<Vec<OrderedPoly>, GroebnerError> {
    // Minimal basis first.
    let mut minimal: Vec<OrderedPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<usize> = (0..minimal.len()).filter(|&j| j != i).collect();
        let head = minimal[i].terms[0].clone();
        let tail = minimal[i].terms[1..].to_vec();
        let mut terms = vec![head];
        terms.extend(red.reduce(tail, &minimal, &others)?);
        let mut g = OrderedPoly { terms };
        g.make_monic(p);
        out.push(g);
    }
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    Ok(out)
}

/// Remainder of `f` modulo a Gröbner basis.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    basis.normal_form(f)
}

/// An ideal of `F_p[y_1, ..., y_n]` with cached Gröbner bases.
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Polynomial>,
    budget: GroebnerBudget,
    cache: RwLock<BTreeMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: Arc::clone(&self.ring),
            generators: self.generators.clone(),
            budget: self.budget,
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// `(g1, g2, ...)` in canonical polynomial form.
impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped; all generators must share `ring`.
    pub fn new(ring: &RingRef, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self, GroebnerError> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(PolyError::RingMismatch.into());
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal { ring: Arc::clone(ring), generators: gens, budget: GroebnerBudget::default(), cache: RwLock::new(BTreeMap::new()) })
    }

    pub fn principal(f: &Polynomial) -> Self {
        Self::new(f.ring(), [f.clone()]).expect("same ring")
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::new(ring, [Polynomial::one(ring)]).expect("same ring")
    }

    /// The irrelevant maximal ideal `(y_1, ..., y_n)`.
    pub fn maximal(ring: &RingRef) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i))).expect("same ring")
    }

    pub fn with_budget(mut self, budget: GroebnerBudget) -> Self {
        self.budget = budget;
        self.cache = RwLock::new(BTreeMap::new());
        self
    }

    pub fn budget(&self) -> GroebnerBudget {
        self.budget
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis in the ring's default (grevlex) order.
    pub fn groebner_basis(&self) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        self.groebner_basis_in(&self.ring.default_order())
    }

    pub fn groebner_basis_in(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(order) {
            return Ok(Arc::clone(gb));
        }
        let gb = Arc::new(buchberger(&self.ring, &self.generators, order, &self.budget)?);
        self.cache.write().expect("cache lock").entry(order.clone()).or_insert_with(|| Arc::clone(&gb));
        Ok(gb)
    }

    /// Ideal membership `f ∈ I`.
    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        if f.ring() != &self.ring {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(self.groebner_basis()?.reduces_to_zero(f))
    }

    /// Containment `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool, GroebnerError> {
        if other.ring != self.ring {
            return Err(PolyError::RingMismatch.into());
        }
        let gb = self.groebner_basis()?;
        Ok(other.generators.iter().all(|g| gb.reduces_to_zero(g)))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool, GroebnerError> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn is_proper(&self) -> Result<bool, GroebnerError> {
        Ok(!self.groebner_basis()?.is_unit_ideal())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        let gens = self.generators.iter().chain(other.generators.iter()).cloned();
        Ok(Ideal::new(&self.ring, gens)?.with_budget(self.budget))
    }

    pub fn add_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal, GroebnerError> {
        Ok(Ideal::new(&self.ring, self.generators.iter().cloned().chain(extra))?.with_budget(self.budget))
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        if other.ring != self.ring {
            return Err(PolyError::RingMismatch.into());
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ideal::new(&self.ring, []);
        }
        let ext = self.ring.with_leading_variables(1);
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(&t * &f.lift(&ext, 1));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.lift(&ext, 1));
        }
        let order = MonomialOrder::grevlex(ext.nvars()).eliminating(1);
        let gb = buchberger(&ext, &gens, &order, &self.budget)?;
        let kept: Vec<Polynomial> = gb.elements().iter().filter_map(|g| g.lower(&self.ring, 1)).collect();
        Ok(Ideal::new(&self.ring, kept)?.with_budget(self.budget))
    }

    /// `I : g = {h : h g ∈ I}`, from `I ∩ (g)` divided by `g`.
    pub fn quotient_by(&self, g: &Polynomial) -> Result<Ideal, GroebnerError> {
        if g.ring() != &self.ring {
            return Err(PolyError::RingMismatch.into());
        }
        if g.is_zero() {
            return Err(GroebnerError::ZeroDivisor);
        }
        if self.contains_poly(g)? {
            return Ok(Ideal::unit(&self.ring).with_budget(self.budget));
        }
        let inter = self.intersect(&Ideal::principal(g))?;
        let quotients: Vec<Polynomial> = inter
            .generators
            .iter()
            .map(|h| h.exact_div(g).expect("generators of I ∩ (g) are multiples of g"))
            .collect();
        let raw = Ideal::new(&self.ring, quotients)?.with_budget(self.budget);
        let tidy = raw.groebner_basis()?.elements();
        Ok(Ideal::new(&self.ring, tidy)?.with_budget(self.budget))
    }

    /// `I : J`, the intersection of `I : g` over the generators of `J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => {
                    let inter = a.intersect(&q)?;
                    let tidy = inter.groebner_basis()?.elements();
                    Ideal::new(&self.ring, tidy)?.with_budget(self.budget)
                }
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring).with_budget(self.budget)))
    }

    /// True iff the leading-term ideal contains a pure power of every
    /// variable (equivalently `R/I` is finite-dimensional over `F_p`).
    pub fn is_zero_dimensional(&self) -> Result<bool, GroebnerError> {
        let gb = self.groebner_basis()?;
        if gb.is_unit_ideal() {
            return Ok(true);
        }
        let lms = gb.leading_monomials();
        Ok((0..self.ring.nvars()).all(|v| lms.iter().any(|m| m.pure_power_var() == Some(v))))
    }
}
