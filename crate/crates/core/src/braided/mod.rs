//! ζ-twisted tensor products of graded presentations, leg embeddings and the
//! grading flip.
//!
//! A product is an ordinary [`Presentation`] whose generators are tagged by
//! leg. Its rules are the rules of every leg plus, for each letter `y` of a
//! later leg standing directly left of a letter `x` of an earlier leg,
//! `y x → ζ^{-deg x·deg y} x y`. Products are flattened: `(A⊠B)⊠C` and
//! `A⊠(B⊠C)` have identical generator tables, rules and structural keys.

use std::sync::Arc;

use crate::algebra::{Atom, AlgebraError, Element, Generator, PresKey, Presentation, RewriteRule, TwistTable, Word};
use crate::scalars::Scalar;

fn legs_of(p: &Arc<Presentation>) -> Vec<Arc<Presentation>> {
    if p.is_atomic() {
        vec![p.clone()]
    } else {
        p.factors.clone()
    }
}

fn leg_name(leg: usize, local: &str) -> String {
    format!("j{leg}({local})")
}

/// The atomic factor sitting on `leg` (1-based).
pub fn leg_factor(p: &Arc<Presentation>, leg: usize) -> Result<Arc<Presentation>, AlgebraError> {
    if leg == 0 || leg > p.num_legs() {
        return Err(AlgebraError::InvalidLeg(leg));
    }
    Ok(legs_of(p)[leg - 1].clone())
}

pub fn check_unimodular(zeta: &Scalar) -> Result<(), AlgebraError> {
    if zeta.mul(&zeta.conj()).is_one() {
        Ok(())
    } else {
        Err(AlgebraError::NonUnimodular(zeta.to_string()))
    }
}

/// `P1 ⊠_ζ P2`. With `ζ = 1` this is the ordinary tensor product.
pub fn twisted_tensor(p1: &Arc<Presentation>, p2: &Arc<Presentation>, zeta: &Scalar) -> Result<Arc<Presentation>, AlgebraError> {
    check_unimodular(zeta)?;
    let (l1, l2) = (p1.num_legs(), p2.num_legs());
    let n1 = p1.generators().len();
    let shift = |g: u16| g + n1 as u16;

    let mut factors = legs_of(p1);
    factors.extend(legs_of(p2));

    let mut gens = Vec::with_capacity(n1 + p2.generators().len());
    for (src, offset) in [(p1, 0usize), (p2, l1)] {
        let g_shift = if offset == 0 { 0 } else { n1 as u16 };
        for g in src.generators() {
            let leg = g.leg + offset;
            let pretty_local = factors[leg - 1]
                .generators()
                .iter()
                .find(|h| h.local_name == g.local_name)
                .map(|h| h.pretty.clone())
                .unwrap_or_else(|| g.local_name.clone());
            gens.push(Generator {
                name: leg_name(leg, &g.local_name),
                pretty: leg_name(leg, &pretty_local),
                local_name: g.local_name.clone(),
                degree: g.degree,
                adjoint: g.adjoint + g_shift,
                leg,
                weight: g.weight,
            });
        }
    }

    let mut rules: Vec<RewriteRule> = p1.rules().to_vec();
    for r in p2.rules() {
        rules.push(RewriteRule {
            lhs: r.lhs.letters().iter().map(|&g| shift(g)).collect(),
            rhs: r.rhs.iter().map(|(w, c)| (w.letters().iter().map(|&g| shift(g)).collect(), c.clone())).collect(),
        });
    }
    let zeta_inv = zeta.inv()?;
    for (y, gy) in p2.generators().iter().enumerate() {
        for (x, gx) in p1.generators().iter().enumerate() {
            let kl = gx.degree * gy.degree;
            let c = if kl >= 0 { zeta_inv.pow(kl) } else { zeta.pow(-kl) };
            let (x, y) = (x as u16, shift(y as u16));
            rules.push(RewriteRule { lhs: Word::from_slice(&[y, x]), rhs: vec![(Word::from_slice(&[x, y]), c)] });
        }
    }

    let mut twist = p1.twist().clone();
    for ((i, j), z) in p2.twist().pairs() {
        twist.insert(i + l1, j + l1, z.clone());
    }
    for i in 0..l1 {
        for j in 0..l2 {
            twist.insert(i, l1 + j, zeta.clone());
        }
    }
    let mut atoms: Vec<Atom> = p1.key().atoms.clone();
    atoms.extend(p2.key().atoms.iter().copied());

    let mut leg_offsets = p1.leg_offsets.clone();
    leg_offsets.extend(p2.leg_offsets.iter().map(|o| o + n1));

    let label = factors.iter().map(|f| f.label().to_string()).collect::<Vec<_>>().join(" ⊠ ");
    let param = p1.param().cloned();
    Ok(Arc::new(Presentation::assemble(
        PresKey { atoms, twist },
        label,
        gens,
        rules,
        param,
        factors,
        leg_offsets,
        p1.memo_enabled(),
    )))
}

/// `A ⊠_ζ A ⊠_ζ ... ` with `n` legs.
pub fn tensor_power(p: &Arc<Presentation>, n: usize, zeta: &Scalar) -> Result<Arc<Presentation>, AlgebraError> {
    let mut acc = p.clone();
    for _ in 1..n {
        acc = twisted_tensor(&acc, p, zeta)?;
    }
    Ok(acc)
}

/// Letter-wise retagging of an element of a leg's factor into the product.
pub fn embed(product: &Arc<Presentation>, leg: usize, x: &Element) -> Result<Element, AlgebraError> {
    let factor = leg_factor(product, leg)?;
    if !factor.same_as(x.presentation()) {
        return Err(AlgebraError::PresentationMismatch(x.presentation().label().into(), factor.label().into()));
    }
    embed_block(product, leg, x)
}

/// Retags an element of a product of consecutive legs `first_leg, ...` into
/// a larger product, e.g. an element of `A⊠A` into legs 2,3 of `A⊠A⊠A`.
pub fn embed_block(product: &Arc<Presentation>, first_leg: usize, x: &Element) -> Result<Element, AlgebraError> {
    let src = x.presentation();
    let k = src.num_legs();
    if first_leg == 0 || first_leg + k - 1 > product.num_legs() {
        return Err(AlgebraError::InvalidLeg(first_leg));
    }
    let start = first_leg - 1;
    let block_atoms = &product.key().atoms[start..start + k];
    let twist_ok = src.twist().pairs().iter().all(|((i, j), z)| product.twist().get(i + start, j + start) == Some(z));
    if block_atoms != src.key().atoms.as_slice() || !twist_ok {
        return Err(AlgebraError::PresentationMismatch(src.label().into(), product.label().into()));
    }
    let offset = product.leg_offsets[start] as u16;
    let terms = x
        .terms()
        .map(|(w, c)| (w.letters().iter().map(|&g| g + offset).collect::<Word>(), c.clone()))
        .collect();
    Ok(Element::from_normal_terms(product, terms))
}

/// `j_leg(name)` as an element of the product.
pub fn leg_generator(product: &Arc<Presentation>, leg: usize, name: &str) -> Result<Element, AlgebraError> {
    Element::named(product, &leg_name(leg, name)).map_err(|_| {
        if leg == 0 || leg > product.num_legs() {
            AlgebraError::InvalidLeg(leg)
        } else {
            AlgebraError::UnknownGenerator(leg_name(leg, name))
        }
    })
}

/// The same algebra with every degree negated.
pub fn grading_flip(p: &Arc<Presentation>) -> Arc<Presentation> {
    let gens = p.generators().iter().map(|g| Generator { degree: -g.degree, ..g.clone() }).collect();
    let atoms = p.key().atoms.iter().map(|a| Atom { uid: a.uid, flipped: !a.flipped }).collect();
    let factors = if p.is_atomic() { Vec::new() } else { p.factors.iter().map(grading_flip).collect() };
    let label = match p.label().strip_prefix("S(").and_then(|s| s.strip_suffix(')')) {
        Some(inner) => inner.to_string(),
        None => format!("S({})", p.label()),
    };
    Arc::new(Presentation::assemble(
        PresKey { atoms, twist: p.twist().clone() },
        label,
        gens,
        p.rules().to_vec(),
        p.param().cloned(),
        factors,
        p.leg_offsets.clone(),
        p.memo_enabled(),
    ))
}

/// The twist `ζ` between legs `i` and `j` (1-based).
pub fn twist_between(p: &Presentation, i: usize, j: usize) -> Option<Scalar> {
    if i == 0 || j == 0 || i == j {
        return None;
    }
    p.twist().get(i - 1, j - 1).cloned()
}

pub fn twist_table(p: &Presentation) -> &TwistTable {
    p.twist()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{suq2_presentation, Degree};

    fn setup() -> (Arc<Presentation>, Arc<Presentation>) {
        let a = suq2_presentation(&Scalar::q()).unwrap();
        let aa = twisted_tensor(&a, &a, &Scalar::zeta()).unwrap();
        (a, aa)
    }

    #[test]
    fn cross_leg_commutation() {
        let (_, aa) = setup();
        let j = |leg, n| leg_generator(&aa, leg, n).unwrap();
        let zi = Scalar::zeta().inv().unwrap();
        assert_eq!(&j(2, "g") * &j(1, "g"), (&j(1, "g") * &j(2, "g")).scale(&zi));
        assert_eq!(&j(2, "a") * &j(1, "g'"), &j(1, "g'") * &j(2, "a"));
        assert_eq!(&j(2, "g'") * &j(1, "g"), (&j(1, "g") * &j(2, "g'")).scale(&Scalar::zeta()));
    }

    #[test]
    fn embeddings_are_unital_and_graded() {
        let (a, aa) = setup();
        let ag = Element::monomial(&a, &["a", "g"]).unwrap();
        let e = embed(&aa, 1, &ag).unwrap();
        assert_eq!(e.to_string(), "qb*j1(g)*j1(a)");
        assert_eq!(embed(&aa, 2, &Element::named(&a, "g").unwrap()).unwrap().degree(), Degree::Homogeneous(1));
        assert_eq!(embed(&aa, 1, &Element::one(&a)).unwrap(), Element::one(&aa));
        assert_eq!(embed(&aa, 3, &ag).unwrap_err(), AlgebraError::InvalidLeg(3));
    }

    #[test]
    fn bracketings_agree() {
        let (a, aa) = setup();
        let left = twisted_tensor(&aa, &a, &Scalar::zeta()).unwrap();
        let right = twisted_tensor(&a, &aa, &Scalar::zeta()).unwrap();
        assert!(left.same_as(&right));
        assert_eq!(left.generators(), right.generators());
        let x = leg_generator(&left, 3, "g").unwrap();
        let y = leg_generator(&left, 1, "g").unwrap();
        let lhs = &x * &y;
        let x2 = leg_generator(&right, 3, "g").unwrap();
        let y2 = leg_generator(&right, 1, "g").unwrap();
        assert_eq!(lhs, &x2 * &y2);
    }

    #[test]
    fn flip_is_an_involution_and_keeps_the_twist() {
        let (a, aa) = setup();
        let s = grading_flip(&a);
        assert_eq!(s.degree_of(s.generator("g").unwrap()), -1);
        assert!(grading_flip(&s).same_as(&a));
        let ss = twisted_tensor(&s, &s, &Scalar::zeta()).unwrap();
        assert!(grading_flip(&aa).same_as(&ss));
        let j = |leg, n| leg_generator(&ss, leg, n).unwrap();
        let zi = Scalar::zeta().inv().unwrap();
        assert_eq!(&j(2, "g") * &j(1, "g"), (&j(1, "g") * &j(2, "g")).scale(&zi));
    }

    #[test]
    fn ordinary_tensor_commutes_legs() {
        let a = suq2_presentation(&Scalar::q()).unwrap();
        let aa = twisted_tensor(&a, &a, &Scalar::one()).unwrap();
        let x = leg_generator(&aa, 1, "g").unwrap();
        let y = leg_generator(&aa, 2, "g'").unwrap();
        assert_eq!(&y * &x, &x * &y);
    }
}
