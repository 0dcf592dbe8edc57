//! The instanton bundle: the 7-sphere coordinate algebra with its
//! SU(2)-invariant vector fields, deformed along the maximal torus.

use std::sync::Arc;

use crate::derivations::{module_act_plain, Derivation};
use crate::grading::{PhaseConvention, Weight};
use crate::polyalg::{Generator, GeneratorTable, Monomial, Poly, RelationSet, RewriteRule};
use crate::scalars::Scalar;

use super::{BundleSpec, Root};

const Z1: usize = 0;
const Z2: usize = 1;
const Z3: usize = 2;
const Z4: usize = 3;
const Z1C: usize = 4;
const Z2C: usize = 5;
const Z3C: usize = 6;
const Z4C: usize = 7;

fn table() -> Arc<GeneratorTable> {
    let w = [
        Weight(1, -1),  // z1
        Weight(-1, 1),  // z2
        Weight(-1, -1), // z3
        Weight(1, 1),   // z4
    ];
    let mut gens = Vec::new();
    for (i, name) in ["z1", "z2", "z3", "z4"].iter().enumerate() {
        gens.push(Generator {
            name: (*name).into(),
            weight: w[i],
            star_partner: i + 4,
            u_degree: 0,
            invertible: false,
        });
    }
    for (i, name) in ["z1c", "z2c", "z3c", "z4c"].iter().enumerate() {
        gens.push(Generator {
            name: (*name).into(),
            weight: w[i].neg(),
            star_partner: i,
            u_degree: 0,
            invertible: false,
        });
    }
    Arc::new(GeneratorTable::new(gens))
}

/// Derivation from a sparse image list.
fn field(
    label: &str,
    table: &Arc<GeneratorTable>,
    images: &[(usize, Poly)],
) -> Derivation {
    let mut v = vec![Poly::zero(table); table.len()];
    for (i, p) in images {
        v[*i] = p.clone();
    }
    Derivation::plain(label, table, v)
}

/// Builds the instanton bundle: eight sphere coordinates, the unit-radius
/// relation, the ten symmetry fields, the base coordinates of the
/// 4-sphere, and the ten gauge generators.
pub fn build_instanton() -> BundleSpec {
    let t = table();
    let gen = |i: usize| Poly::generator(&t, i);
    let half = Scalar::from_ratio(1, 2);
    let inv_sqrt2 = &Scalar::sqrt2() * &half; // exact 1/sqrt2
    let sqrt2 = Scalar::sqrt2();

    // Cartan fields act with half-integer eigenvalues on the coordinates.
    let mut h1_imgs = Vec::new();
    let mut h2_imgs = Vec::new();
    let h1_signs = [1i64, -1, -1, 1];
    let h2_signs = [-1i64, 1, -1, 1];
    for i in 0..4 {
        h1_imgs.push((i, gen(i).scale(&(&half * &Scalar::from_int(h1_signs[i])))));
        h1_imgs.push((i + 4, gen(i + 4).scale(&(&half * &Scalar::from_int(-h1_signs[i])))));
        h2_imgs.push((i, gen(i).scale(&(&half * &Scalar::from_int(h2_signs[i])))));
        h2_imgs.push((i + 4, gen(i + 4).scale(&(&half * &Scalar::from_int(-h2_signs[i])))));
    }
    let h1 = field("H1", &t, &h1_imgs);
    let h2 = field("H2", &t, &h2_imgs);

    let neg = |p: Poly| p.scale(&Scalar::from_int(-1));

    // Ladder fields; the four short-root fields carry 1/sqrt2.
    let r = |p: Poly| p.scale(&inv_sqrt2);
    let e10 = field("E10", &t, &[
        (Z3, r(gen(Z1))),
        (Z1C, r(neg(gen(Z3C)))),
        (Z2, r(neg(gen(Z4)))),
        (Z4C, r(gen(Z2C))),
    ]);
    let em10 = field("Em10", &t, &[
        (Z1, r(gen(Z3))),
        (Z3C, r(neg(gen(Z1C)))),
        (Z4, r(neg(gen(Z2)))),
        (Z2C, r(gen(Z4C))),
    ]);
    let e01 = field("E01", &t, &[
        (Z3, r(gen(Z2))),
        (Z2C, r(neg(gen(Z3C)))),
        (Z1, r(gen(Z4))),
        (Z4C, r(neg(gen(Z1C)))),
    ]);
    let e0m1 = field("E0m1", &t, &[
        (Z4, r(gen(Z1))),
        (Z1C, r(neg(gen(Z4C)))),
        (Z2, r(gen(Z3))),
        (Z3C, r(neg(gen(Z2C)))),
    ]);
    let e11 = field("E11", &t, &[
        (Z3, neg(gen(Z4))),
        (Z4C, gen(Z3C)),
    ]);
    let em1m1 = field("Em1m1", &t, &[
        (Z3C, gen(Z4C)),
        (Z4, neg(gen(Z3))),
    ]);
    let e1m1 = field("E1m1", &t, &[
        (Z2, neg(gen(Z1))),
        (Z1C, gen(Z2C)),
    ]);
    let em11 = field("Em11", &t, &[
        (Z1, neg(gen(Z2))),
        (Z2C, gen(Z1C)),
    ]);

    // Base coordinates of the 4-sphere inside the 7-sphere algebra.
    let two = Scalar::from_int(2);
    let alpha = (&(&gen(Z1) * &gen(Z3C)) + &(&gen(Z2C) * &gen(Z4))).scale(&two);
    let beta = (&(&gen(Z2) * &gen(Z3C)) - &(&gen(Z1C) * &gen(Z4))).scale(&two);
    let x = &(&(&gen(Z1) * &gen(Z1C)) + &(&gen(Z2) * &gen(Z2C)))
        - &(&(&gen(Z3) * &gen(Z3C)) + &(&gen(Z4) * &gen(Z4C)));
    let alphac = alpha.star();
    let betac = beta.star();

    // Sphere relation as a terminating rewrite rule: the top quadratic
    // monomial z4*z4c rewrites to 1 - z1*z1c - z2*z2c - z3*z3c.
    let mut lead = Monomial::one(t.len());
    lead.0[Z4] = 1;
    lead.0[Z4C] = 1;
    let mut replacement = Poly::one(&t);
    for (a, ac) in [(Z1, Z1C), (Z2, Z2C), (Z3, Z3C)] {
        let mut m = Monomial::one(t.len());
        m.0[a] = 1;
        m.0[ac] = 1;
        replacement.add_term(m, Scalar::from_int(-1));
    }
    let relations = RelationSet::substitution(vec![RewriteRule { lead, replacement }])
        .expect("sphere rule terminates");

    // Gauge generators over the base.
    let mact = module_act_plain;
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

    let spec = BundleSpec {
        name: "instanton".into(),
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
    };

    debug_assert_eq!(spec.base[0].1.weight(), Some(Weight(2, 0)));
    debug_assert_eq!(spec.base[1].1.weight(), Some(Weight(0, 2)));
    debug_assert_eq!(spec.base[2].1.weight(), Some(Weight(0, 0)));
    spec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::PhaseConvention;

    #[test]
    fn coordinate_weights() {
        let spec = build_instanton();
        assert_eq!(spec.table.weight(Z1), Weight(1, -1));
        assert_eq!(spec.table.weight(Z1C), Weight(-1, 1));
        assert_eq!(spec.base_by_name("alpha").unwrap().weight(), Some(Weight(2, 0)));
        assert_eq!(spec.base_by_name("beta").unwrap().weight(), Some(Weight(0, 2)));
        assert_eq!(spec.base_by_name("x").unwrap().weight(), Some(Weight(0, 0)));
    }

    #[test]
    fn gauge_generator_count_and_weights() {
        let spec = build_instanton();
        assert_eq!(spec.gauge.len(), 10);
        for (name, d) in &spec.gauge {
            let w = d.weight().unwrap_or_else(|| panic!("{name} inhomogeneous"));
            match name.as_str() {
                "K1" | "K2" => assert_eq!(w, Weight(0, 0)),
                "W11" => assert_eq!(w, Weight(2, 2)),
                "W1m1" => assert_eq!(w, Weight(2, -2)),
                "W01" => assert_eq!(w, Weight(0, 2)),
                "Wm1m1" => assert_eq!(w, Weight(-2, -2)),
                _ => {}
            }
        }
    }

    #[test]
    fn em10_maps_alpha_to_base() {
        // E_{-10}(alpha) = -sqrt2 * x, used by the verticality of K2.
        let spec = build_instanton();
        let conv = PhaseConvention::calibrated();
        let em10 = &spec.roots.iter().find(|(r, _, _)| *r == (-1, 0)).unwrap().2;
        let alpha = spec.base_by_name("alpha").unwrap();
        let x = spec.base_by_name("x").unwrap();
        let expect = x.scale(&(-&Scalar::sqrt2()));
        assert_eq!(em10.apply(alpha, conv), expect);
    }

    #[test]
    fn h_fields_measure_weights() {
        let spec = build_instanton();
        let conv = PhaseConvention::calibrated();
        let h1 = &spec.cartan[0].1;
        let alpha = spec.base_by_name("alpha").unwrap();
        assert_eq!(h1.apply(alpha, conv), alpha.clone());
        let beta = spec.base_by_name("beta").unwrap();
        assert!(h1.apply(beta, conv).is_zero());
    }

    #[test]
    fn sphere_relation_in_base_coordinates() {
        // alpha*alphac + beta*betac + x^2 - 1 reduces to zero.
        let spec = build_instanton();
        let a = spec.base_by_name("alpha").unwrap();
        let ac = spec.base_by_name("alphac").unwrap();
        let b = spec.base_by_name("beta").unwrap();
        let bc = spec.base_by_name("betac").unwrap();
        let x = spec.base_by_name("x").unwrap();
        let p = &(&(&(a * ac) + &(b * bc)) + &(x * x)) - &Poly::one(&spec.table);
        assert!(spec.relations.reduce(&p).is_zero());
    }
}
