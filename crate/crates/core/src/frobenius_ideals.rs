//! Frobenius powers of ideals and the colon criteria built from them.

use thiserror::Error;

use crate::groebner::{GroebnerError, Ideal};
use crate::poly::{PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusIdealError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("Frobenius exponent e must be at least 1")]
    ZeroExponent,
    #[error("the ideal must be proper")]
    ImproperIdeal,
    #[error("the ideal must be principal for this path")]
    NotPrincipal,
    #[error("precondition violated: I is not contained in tau")]
    NotContained,
    #[error("colon identity fails: ({generator}) + I^[q] differs from I^[q] : I, so the sequence is not regular")]
    NotRegularSequence { generator: String },
    #[error("colon (f^[q] : f) is not generated by f^(q-1) modulo f^[q]")]
    NotCyclic,
}

impl From<PolyError> for FrobeniusIdealError {
    fn from(e: PolyError) -> Self {
        FrobeniusIdealError::Groebner(e.into())
    }
}

fn q_of(i: &Ideal, e: u32) -> Result<u64, FrobeniusIdealError> {
    if e == 0 {
        return Err(FrobeniusIdealError::ZeroExponent);
    }
    i.ring().characteristic().get().checked_pow(e).ok_or(PolyError::ExponentOverflow.into())
}

/// `I^{[p^e]}`, generated by the `p^e`-th powers of the given generators.
pub fn bracket_power(i: &Ideal, e: u32) -> Result<Ideal, FrobeniusIdealError> {
    q_of(i, e)?;
    let gens = i.generators().iter().map(|g| g.frobenius(e)).collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(i.ring(), gens)?.with_budget(i.budget()))
}

/// True iff no term of `f` has all exponents below `q`, i.e. `f ∈ m^{[q]}`.
fn in_frobenius_power_of_maximal(f: &Polynomial, q: u64) -> bool {
    f.terms().iter().all(|(m, _)| m.exponents().iter().any(|&a| a >= q))
}

/// Fedder's criterion at the irrelevant ideal: `R/I` is F-pure iff
/// `(I^{[p]} : I) ⊄ m^{[p]}`.
pub fn fedder_is_fpure(i: &Ideal) -> Result<bool, FrobeniusIdealError> {
    if !i.is_proper()? {
        return Err(FrobeniusIdealError::ImproperIdeal);
    }
    let p = i.ring().characteristic().get();
    let colon = bracket_power(i, 1)?.quotient(i)?;
    Ok(colon.generators().iter().any(|g| !in_frobenius_power_of_maximal(g, p)))
}

/// Hypersurface form: `f^{p-1}` has a monomial with every exponent `≤ p-1`.
pub fn fedder_is_fpure_principal(f: &Polynomial) -> Result<bool, FrobeniusIdealError> {
    if f.is_zero() || f.is_constant() {
        return Err(FrobeniusIdealError::ImproperIdeal);
    }
    let p = f.ring().characteristic().get();
    Ok(!in_frobenius_power_of_maximal(&f.pow(p - 1)?, p))
}

/// `(x_1 ⋯ x_c)^{q-1}` for a regular sequence, checked against the colon.
pub fn ci_colon_generator(seq: &[Polynomial], e: u32) -> Result<Polynomial, FrobeniusIdealError> {
    let Some(first) = seq.first() else {
        return Err(FrobeniusIdealError::ImproperIdeal);
    };
    let ring = first.ring();
    let i = Ideal::new(ring, seq.iter().cloned())?;
    let q = q_of(&i, e)?;
    let product = seq.iter().skip(1).try_fold(first.clone(), |acc, g| acc.checked_mul(g))?;
    let y = product.pow(q - 1)?;
    let frob = bracket_power(&i, e)?;
    let colon = frob.quotient(&i)?;
    let candidate = frob.add_generators([y.clone()])?;
    if !candidate.equals(&colon)? {
        return Err(FrobeniusIdealError::NotRegularSequence { generator: y.to_string() });
    }
    Ok(y)
}

/// Frobenius structures on the injective hull of `R/I`, as the colon
/// `(I^{[q]} : I)` taken modulo `I^{[q]}`.
#[derive(Debug, Clone)]
pub struct EStructureModule {
    pub ideal: Ideal,
    pub e: u32,
    pub colon: Ideal,
    /// Colon generators in normal form modulo `I^{[q]}`; zero ones dropped.
    pub coset_generators: Vec<Polynomial>,
}

pub fn e_structure_module(i: &Ideal, e: u32) -> Result<EStructureModule, FrobeniusIdealError> {
    if !i.is_proper()? {
        return Err(FrobeniusIdealError::ImproperIdeal);
    }
    let q = q_of(i, e)?;
    let frob = bracket_power(i, e)?;
    let colon = frob.quotient(i)?;
    let gb = frob.groebner_basis()?;
    let mut coset_generators: Vec<Polynomial> = Vec::new();
    for g in colon.generators() {
        let r = gb.normal_form(g);
        if !r.is_zero() && !coset_generators.contains(&r) {
            coset_generators.push(r);
        }
    }
    if let [f] = i.generators() {
        let cyclic = frob.add_generators([f.pow(q - 1)?])?;
        if !cyclic.equals(&colon)? {
            return Err(FrobeniusIdealError::NotCyclic);
        }
    }
    Ok(EStructureModule { ideal: i.clone(), e, colon, coset_generators })
}

/// Whether `tau / I` is stable under every `e`-th Frobenius structure:
/// `(I^{[q]} : I) · tau ⊆ tau^{[q]}`.
pub fn is_rf_submodule(tau: &Ideal, i: &Ideal, e: u32) -> Result<bool, FrobeniusIdealError> {
    if !tau.contains(i)? {
        return Err(FrobeniusIdealError::NotContained);
    }
    let colon = bracket_power(i, e)?.quotient(i)?;
    let target = bracket_power(tau, e)?;
    for c in colon.generators() {
        for t in tau.generators() {
            if !target.contains_poly(&c.checked_mul(t)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::{PolyRing, RingRef};

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(g, r).unwrap())).unwrap()
    }

    #[test]
    fn bracket_powers() {
        let r = PolyRing::new(3, &["x", "y"]).unwrap();
        let b = bracket_power(&ideal(&r, &["x", "y"]), 1).unwrap();
        assert_eq!(b.generators(), ideal(&r, &["x^3", "y^3"]).generators());
        let r2 = PolyRing::new(2, &["x", "y"]).unwrap();
        let a = bracket_power(&ideal(&r2, &["x+y", "y"]), 1).unwrap();
        assert!(a.equals(&ideal(&r2, &["x^2", "y^2"])).unwrap());
        assert_eq!(bracket_power(&ideal(&r, &["x"]), 0).unwrap_err(), FrobeniusIdealError::ZeroExponent);
    }

    #[test]
    fn fedder_cubic() {
        for (p, expected) in [(5, false), (7, true)] {
            let r = PolyRing::new(p, &["x", "y", "z"]).unwrap();
            let f = parse_polynomial("x^3+y^3+z^3", &r).unwrap();
            assert_eq!(fedder_is_fpure_principal(&f).unwrap(), expected);
            assert_eq!(fedder_is_fpure(&Ideal::principal(&f)).unwrap(), expected);
        }
        let r = PolyRing::new(11, &["x", "y"]).unwrap();
        assert!(fedder_is_fpure(&ideal(&r, &["x"])).unwrap());
        assert!(fedder_is_fpure_principal(&parse_polynomial("x", &r).unwrap()).unwrap());
    }

    #[test]
    fn ci_generators() {
        let r = PolyRing::new(3, &["x", "y", "z"]).unwrap();
        let f = parse_polynomial("x^4+y^4-z^4", &r).unwrap();
        assert_eq!(ci_colon_generator(std::slice::from_ref(&f), 1).unwrap(), f.pow(2).unwrap());
        let r2 = PolyRing::new(3, &["x", "y"]).unwrap();
        let xy = [parse_polynomial("x", &r2).unwrap(), parse_polynomial("y", &r2).unwrap()];
        assert_eq!(ci_colon_generator(&xy, 1).unwrap().to_string(), "x^2*y^2");
        let colon = bracket_power(&ideal(&r2, &["x", "y"]), 1).unwrap().quotient(&ideal(&r2, &["x", "y"])).unwrap();
        assert!(colon.equals(&ideal(&r2, &["x^2*y^2", "x^3", "y^3"])).unwrap());
        let r3 = PolyRing::new(2, &["x"]).unwrap();
        assert_eq!(ci_colon_generator(&[parse_polynomial("x", &r3).unwrap()], 2).unwrap().to_string(), "x^3");
        // (x, x) is not a regular sequence.
        let xx = [xy[0].clone(), xy[0].clone()];
        assert!(matches!(ci_colon_generator(&xx, 1), Err(FrobeniusIdealError::NotRegularSequence { .. })));
    }

    #[test]
    fn e_structures() {
        let r = PolyRing::new(3, &["x", "y", "z"]).unwrap();
        let f = parse_polynomial("x^4+y^4-z^4", &r).unwrap();
        let m = e_structure_module(&Ideal::principal(&f), 1).unwrap();
        assert_eq!(m.coset_generators, vec![f.pow(2).unwrap()]);
        let r2 = PolyRing::new(3, &["x", "y"]).unwrap();
        let i = ideal(&r2, &["x^2", "x*y"]);
        let m = e_structure_module(&i, 1).unwrap();
        let frob = bracket_power(&i, 1).unwrap();
        for c in m.colon.generators() {
            for g in i.generators() {
                assert!(frob.contains_poly(&(c * g)).unwrap());
            }
        }
    }

    #[test]
    fn rf_submodules() {
        let r = PolyRing::new(5, &["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["x^4+y^4-z^4"]);
        assert!(is_rf_submodule(&i, &i, 1).unwrap());
        assert!(is_rf_submodule(&Ideal::unit(&r), &i, 1).unwrap());
        let tau = ideal(&r, &["x^2", "y", "z", "x^4+y^4-z^4"]);
        assert!(is_rf_submodule(&tau, &i, 1).unwrap());
        assert_eq!(is_rf_submodule(&ideal(&r, &["x"]), &i, 1).unwrap_err(), FrobeniusIdealError::NotContained);
    }
}
