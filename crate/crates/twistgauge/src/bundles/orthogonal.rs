//! The quantum orthogonal bundle: the special orthogonal group coordinate
//! algebra over the 4-sphere, deformed along the maximal torus.

use std::sync::Arc;

use crate::derivations::{module_act_plain, Derivation};
use crate::grading::{PhaseConvention, Weight};
use crate::polyalg::{Generator, GeneratorTable, Poly, RelationSet};
use crate::scalars::Scalar;

use super::{BundleSpec, Root};

/// Index of `n_{JK}` (1-based row and column labels).
fn idx(j: usize, k: usize) -> usize {
    (j - 1) * 5 + (k - 1)
}

/// Row prime map of the star structure: 1 <-> 3, 2 <-> 4, 5 fixed.
fn prime(j: usize) -> usize {
    match j {
        1 => 3,
        2 => 4,
        3 => 1,
        4 => 2,
        5 => 5,
        _ => unreachable!(),
    }
}

fn row_weight(j: usize) -> Weight {
    match j {
        1 => Weight(2, 0),
        2 => Weight(0, 2),
        3 => Weight(-2, 0),
        4 => Weight(0, -2),
        5 => Weight(0, 0),
        _ => unreachable!(),
    }
}

/// Nonzero entries of the quadratic form: pairs (L, M) with Q_{LM} = 1.
const Q_PAIRS: [(usize, usize); 5] = [(1, 3), (2, 4), (3, 1), (4, 2), (5, 5)];

fn q_entry(j: usize, k: usize) -> i64 {
    i64::from(Q_PAIRS.contains(&(j, k)))
}

fn table() -> Arc<GeneratorTable> {
    let mut gens = Vec::new();
    for j in 1..=5 {
        for k in 1..=5 {
            gens.push(Generator {
                name: format!("n{j}{k}"),
                weight: row_weight(j),
                star_partner: idx(prime(j), prime(k)),
                u_degree: 0,
                invertible: false,
            });
        }
    }
    Arc::new(GeneratorTable::new(gens))
}

/// A row-moving field `sum_K n_{aK} d/dn_{bK}` maps `n_{bK} -> n_{aK}`.
fn row_field(
    label: &str,
    t: &Arc<GeneratorTable>,
    moves: &[(usize, usize, i64)], // (target row a, source row b, sign)
) -> Derivation {
    let mut images = vec![Poly::zero(t); t.len()];
    for &(a, b, sign) in moves {
        for k in 1..=5 {
            let img = Poly::generator(t, idx(a, k)).scale(&Scalar::from_int(sign));
            images[idx(b, k)] = &images[idx(b, k)] + &img;
        }
    }
    Derivation::plain(label, t, images)
}

/// Builds the orthogonal bundle: 25 matrix-entry generators, the
/// orthogonality relations in membership mode, the ten symmetry fields,
/// the rescaled base coordinates, and the gauge generators.
pub fn build_orthogonal() -> BundleSpec {
    let t = table();
    let sqrt2 = Scalar::sqrt2();

    let h1 = row_field("H1", &t, &[(1, 1, 1), (3, 3, -1)]);
    let h2 = row_field("H2", &t, &[(2, 2, 1), (4, 4, -1)]);
    let e10 = row_field("E10", &t, &[(5, 3, 1), (1, 5, -1)]);
    let em10 = row_field("Em10", &t, &[(3, 5, 1), (5, 1, -1)]);
    let e01 = row_field("E01", &t, &[(5, 4, 1), (2, 5, -1)]);
    let e0m1 = row_field("E0m1", &t, &[(4, 5, 1), (5, 2, -1)]);
    let e11 = row_field("E11", &t, &[(2, 3, 1), (1, 4, -1)]);
    let em1m1 = row_field("Em1m1", &t, &[(3, 2, 1), (4, 1, -1)]);
    let e1m1 = row_field("E1m1", &t, &[(4, 3, 1), (1, 2, -1)]);
    let em11 = row_field("Em11", &t, &[(3, 4, 1), (2, 1, -1)]);

    // Base coordinates with the sqrt2 rescale making the radius exactly 1.
    let alpha = Poly::generator(&t, idx(1, 5)).scale(&sqrt2);
    let beta = Poly::generator(&t, idx(2, 5)).scale(&sqrt2);
    let alphac = Poly::generator(&t, idx(3, 5)).scale(&sqrt2);
    let betac = Poly::generator(&t, idx(4, 5)).scale(&sqrt2);
    let x = Poly::generator(&t, idx(5, 5));

    // Orthogonality relations N^t Q N = Q and N Q N^t = Q, membership mode.
    let mut relations = Vec::new();
    for j in 1..=5 {
        for k in j..=5 {
            // (N^t Q N)_{JK} - Q_{JK}
            let mut r1 = Poly::zero(&t);
            for (l, m) in Q_PAIRS {
                r1 = &r1 + &(&Poly::generator(&t, idx(l, j)) * &Poly::generator(&t, idx(m, k)));
            }
            r1.add_term(
                crate::polyalg::Monomial::one(t.len()),
                Scalar::from_int(-q_entry(j, k)),
            );
            relations.push(r1);
            // (N Q N^t)_{JK} - Q_{JK}
            let mut r2 = Poly::zero(&t);
            for (l, m) in Q_PAIRS {
                r2 = &r2 + &(&Poly::generator(&t, idx(j, l)) * &Poly::generator(&t, idx(k, m)));
            }
            r2.add_term(
                crate::polyalg::Monomial::one(t.len()),
                Scalar::from_int(-q_entry(j, k)),
            );
            relations.push(r2);
        }
    }
    let relations = RelationSet::membership(relations, 4);

    // Gauge generators: same base-coefficient combinations as the
    // instanton, with the orthogonal symmetry fields.
    let mact = module_act_plain;
    let two = Scalar::from_int(2);
    let s = |p: &Poly| p.scale(&sqrt2);
    let two_x = x.scale(&two);
    let k1 = mact(&two_x, &h2)
        .add(&mact(&s(&betac), &e01))
        .add(&mact(&s(&beta), &e0m1))
        .with_label("K1");
    let k2 = mact(&two_x, &h1)
        .add(&mact(&s(&alphac), &e10))
        .add(&mact(&s(&alpha), &em10))
        .with_label("K2");
    let w01 = mact(&s(&beta), &h1)
        .add(&mact(&s(&alphac), &e11))
        .add(&mact(&s(&alpha), &em11))
        .with_label("W01");
    let w0m1 = mact(&s(&betac), &h1)
        .add(&mact(&s(&alphac), &e1m1))
        .add(&mact(&s(&alpha), &em1m1))
        .with_label("W0m1");
    let w10 = mact(&s(&alpha), &h2)
        .sub(&mact(&s(&betac), &e11))
        .add(&mact(&s(&beta), &e1m1))
        .with_label("W10");
    let wm10 = mact(&s(&alphac), &h2)
        .add(&mact(&s(&betac), &em11))
        .sub(&mact(&s(&beta), &em1m1))
        .with_label("Wm10");
    let w11 = mact(&two_x, &e11)
        .add(&mact(&s(&alpha), &e01))
        .sub(&mact(&s(&beta), &e10))
        .with_label("W11");
    let wm1m1 = mact(&two_x, &em1m1)
        .add(&mact(&s(&alphac), &e0m1))
        .sub(&mact(&s(&betac), &em10))
        .with_label("Wm1m1");
    let w1m1 = mact(&(-&two_x).clone(), &e1m1)
        .add(&mact(&s(&betac), &e10))
        .add(&mact(&s(&alpha), &e0m1))
        .with_label("W1m1");
    let wm11 = mact(&(-&two_x).clone(), &em11)
        .add(&mact(&s(&beta), &em10))
        .add(&mact(&s(&alphac), &e01))
        .with_label("Wm11");

    let roots: Vec<(Root, String, Derivation)> = vec![
        ((1, 0), "E10".into(), e10),
        ((-1, 0), "Em10".into(), em10),
        ((0, 1), "E01".into(), e01),
        ((0, -1), "E0m1".into(), e0m1),
        ((1, 1), "E11".into(), e11),
        ((-1, -1), "Em1m1".into(), em1m1),
        ((1, -1), "E1m1".into(), e1m1),
        ((-1, 1), "Em11".into(), em11),
    ];

    BundleSpec {
        name: "orthogonal".into(),
        table: t,
        relations,
        conv: PhaseConvention::calibrated(),
        cartan: vec![("H1".into(), h1), ("H2".into(), h2)],
        roots,
        base: vec![
            ("alpha".into(), alpha),
            ("beta".into(), beta),
            ("x".into(), x),
            ("alphac".into(), alphac),
            ("betac".into(), betac),
        ],
        gauge: vec![
            ("K1".into(), k1),
            ("K2".into(), k2),
            ("W01".into(), w01),
            ("W0m1".into(), w0m1),
            ("W10".into(), w10),
            ("Wm10".into(), wm10),
            ("W11".into(), w11),
            ("Wm1m1".into(), wm1m1),
            ("W1m1".into(), w1m1),
            ("Wm11".into(), wm11),
        ],
        degree_bound: 4,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::ideal_member;

    #[test]
    fn row_weights_and_star() {
        let spec = build_orthogonal();
        for k in 1..=5 {
            assert_eq!(spec.table.weight(idx(1, k)), Weight(2, 0));
        }
        // star(n15) = n35
        let n15 = Poly::generator(&spec.table, idx(1, 5));
        let n35 = Poly::generator(&spec.table, idx(3, 5));
        assert_eq!(n15.star(), n35);
    }

    #[test]
    fn k2_annihilates_alpha_identically() {
        let spec = build_orthogonal();
        let conv = spec.conv;
        let k2 = spec.gauge_by_name("K2").unwrap();
        let alpha = spec.base_by_name("alpha").unwrap();
        // 2x*alpha + alpha*sqrt2*(-sqrt2 x) = 0 with no relations used
        assert!(k2.apply(alpha, conv).is_zero());
    }

    #[test]
    fn radius_relation_is_a_member_at_bound_two() {
        let spec = build_orthogonal();
        let a = spec.base_by_name("alpha").unwrap();
        let ac = spec.base_by_name("alphac").unwrap();
        let b = spec.base_by_name("beta").unwrap();
        let bc = spec.base_by_name("betac").unwrap();
        let x = spec.base_by_name("x").unwrap();
        let p = &(&(&(a * ac) + &(b * bc)) + &(x * x)) - &Poly::one(&spec.table);
        let RelationSet::Membership { relations, .. } = &spec.relations else {
            panic!("membership mode expected")
        };
        let w = ideal_member(&p, relations, 2).unwrap().expect("member at bound 2");
        assert_eq!(w.bound_used, 2);
        assert_eq!(w.expand(relations), p);
    }

    #[test]
    fn degree_one_element_is_not_a_member() {
        let spec = build_orthogonal();
        let n15 = Poly::generator(&spec.table, idx(1, 5));
        let RelationSet::Membership { relations, .. } = &spec.relations else {
            panic!("membership mode expected")
        };
        assert!(ideal_member(&n15, relations, 4).unwrap().is_none());
    }
}
