//! Sparse multigraded commutative polynomial algebra with star structure
//! and relation-ideal reduction.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::grading::Weight;
use crate::scalars::{AlgebraicCoeff, Scalar};

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("generator tables differ")]
    TableMismatch,
    #[error("rewrite rule does not decrease the monomial order: {0}")]
    NonTerminatingRule(String),
    #[error("degree bound {bound} is below the degree {degree} of the polynomial")]
    BoundTooSmall { bound: u32, degree: u32 },
    #[error("relation set is in the wrong mode for this operation")]
    WrongMode,
}

/// One generator of a coordinate algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub weight: Weight,
    /// Index of the star partner (an involution on indices).
    pub star_partner: usize,
    /// Eigenvalue under the dilation grading operator (used by the
    /// Jordanian algebra; zero elsewhere).
    pub u_degree: i64,
    /// Whether negative exponents are allowed (the invertible `u`).
    pub invertible: bool,
}

/// Ordered list of generators; fixes the monomial order and star structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTable {
    gens: Vec<Generator>,
}

impl GeneratorTable {
    pub fn new(gens: Vec<Generator>) -> Self {
        for (i, g) in gens.iter().enumerate() {
            let p = g.star_partner;
            assert!(p < gens.len(), "star partner out of range");
            assert_eq!(gens[p].star_partner, i, "star is not an involution");
            assert_eq!(gens[p].weight, g.weight.neg(), "star partner weight mismatch");
        }
        GeneratorTable { gens }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.gens.iter()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn weight(&self, i: usize) -> Weight {
        self.gens[i].weight
    }

    pub fn star_partner(&self, i: usize) -> usize {
        self.gens[i].star_partner
    }
}

/// Exponent vector over a generator table.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Monomial(v)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e.unsigned_abs() as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise divisibility (for nonnegative-exponent monomials).
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn weight(&self, table: &GeneratorTable) -> Weight {
        let mut w = Weight::ZERO;
        for (i, &e) in self.0.iter().enumerate() {
            let gw = table.weight(i);
            w = w + Weight(gw.0 * e as i64, gw.1 * e as i64);
        }
        w
    }

    pub fn u_degree(&self, table: &GeneratorTable) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| table.generator(i).u_degree * e as i64)
            .sum()
    }

    pub fn star(&self, table: &GeneratorTable) -> Monomial {
        let mut v = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            v[table.star_partner(i)] += e;
        }
        Monomial(v)
    }
}

/// Degree-lexicographic order: total degree first, ties broken
/// lexicographically with later-declared generators comparing higher.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let d1 = self.degree();
        let d2 = other.degree();
        if d1 != d2 {
            return d1.cmp(&d2);
        }
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            if a != b {
                return a.cmp(b);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over [`Scalar`] coefficients, canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    table: Arc<GeneratorTable>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(table: &Arc<GeneratorTable>) -> Self {
        Poly { table: Arc::clone(table), terms: BTreeMap::new() }
    }

    pub fn constant(table: &Arc<GeneratorTable>, c: Scalar) -> Self {
        let mut p = Self::zero(table);
        p.add_term(Monomial::one(table.len()), c);
        p
    }

    pub fn one(table: &Arc<GeneratorTable>) -> Self {
        Self::constant(table, Scalar::one())
    }

    pub fn generator(table: &Arc<GeneratorTable>, i: usize) -> Self {
        let mut p = Self::zero(table);
        p.add_term(Monomial::generator(table.len(), i), Scalar::one());
        p
    }

    pub fn from_terms(
        table: &Arc<GeneratorTable>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Self::zero(table);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> i64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m
            .0
            .iter()
            .enumerate()
            .all(|(i, &e)| e >= 0 || self.table.generator(i).invertible));
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut out = Self::zero(&self.table);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul_omega(&self, e: i64) -> Poly {
        let mut out = Self::zero(&self.table);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.mul_omega(e));
        }
        out
    }

    /// Star: conjugates coefficients and sends each generator to its partner.
    pub fn star(&self) -> Poly {
        let mut out = Self::zero(&self.table);
        for (m, v) in &self.terms {
            out.add_term(m.star(&self.table), v.star());
        }
        out
    }

    /// Ring morphism `w -> 1` on all coefficients.
    pub fn eval_at_omega_one(&self) -> Poly {
        let mut out = Self::zero(&self.table);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.eval_at_omega_one());
        }
        out
    }

    /// Weight if the polynomial is homogeneous, `None` otherwise (zero is
    /// homogeneous of every weight; reported as `Some(ZERO)`).
    pub fn weight(&self) -> Option<Weight> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(Weight::ZERO),
            Some(m) => m.weight(&self.table),
        };
        for m in it {
            if m.weight(&self.table) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Splits into weight-homogeneous components, sorted by weight.
    pub fn weight_components(&self) -> Vec<(Weight, Poly)> {
        let mut map: BTreeMap<Weight, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let w = m.weight(&self.table);
            map.entry(w)
                .or_insert_with(|| Self::zero(&self.table))
                .add_term(m.clone(), c.clone());
        }
        map.into_iter().collect()
    }

    /// Splits into components of fixed dilation degree (u-grading).
    pub fn u_components(&self) -> Vec<(i64, Poly)> {
        let mut map: BTreeMap<i64, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.u_degree(&self.table);
            map.entry(d)
                .or_insert_with(|| Self::zero(&self.table))
                .add_term(m.clone(), c.clone());
        }
        map.into_iter().collect()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn same_table(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.table, &other.table)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.same_table(rhs), "generator tables differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let mut out = Poly::zero(&self.table);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.same_table(rhs), "generator tables differ");
        let mut out = Poly::zero(&self.table);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest monomial first reads naturally.
        for (m, c) in self.terms.iter().rev() {
            let mono = render_monomial(m, &self.table);
            let coeff = format!("{c}");
            let multi = coeff.contains(" + ") || coeff.contains(" - ");
            let neg = !multi && coeff.starts_with('-');
            let mag = if neg { coeff[1..].to_string() } else { coeff.clone() };
            let body = match (&*mono, &*mag) {
                ("", _) => mag.clone(),
                (_, "1") if !multi => mono.clone(),
                _ if multi => format!("({coeff})*{mono}"),
                _ => format!("{mag}*{mono}"),
            };
            if first {
                if neg {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if neg {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

fn render_monomial(m: &Monomial, table: &GeneratorTable) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = &table.generator(i).name;
        if e == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

/// A substitution rewrite rule: lead monomial -> replacement polynomial.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub lead: Monomial,
    pub replacement: Poly,
}

/// Relation ideal, either as terminating rewrite rules or as a generating
/// set for bounded-degree membership certification.
#[derive(Clone, Debug)]
pub enum RelationSet {
    Substitution { rules: Vec<RewriteRule> },
    Membership { relations: Vec<Poly>, degree_bound: u32 },
    /// No relations (free polynomial algebra).
    Trivial,
}

impl RelationSet {
    /// Builds a substitution set, rejecting rules that do not strictly
    /// decrease the monomial order.
    pub fn substitution(rules: Vec<RewriteRule>) -> Result<Self, PolyError> {
        for rule in &rules {
            for (m, _) in rule.replacement.terms() {
                if *m >= rule.lead {
                    return Err(PolyError::NonTerminatingRule(format!(
                        "{} occurs in the replacement of {}",
                        render_monomial(m, rule.replacement.table()),
                        render_monomial(&rule.lead, rule.replacement.table()),
                    )));
                }
            }
        }
        Ok(RelationSet::Substitution { rules })
    }

    pub fn membership(relations: Vec<Poly>, degree_bound: u32) -> Self {
        RelationSet::Membership { relations, degree_bound }
    }

    /// Normal form under substitution rewriting; identity in the other modes.
    pub fn reduce(&self, p: &Poly) -> Poly {
        match self {
            RelationSet::Substitution { rules } => {
                let mut cur = p.clone();
                'outer: loop {
                    for rule in rules {
                        let hit = cur
                            .terms()
                            .map(|(m, _)| m)
                            .find(|m| rule.lead.divides(m))
                            .cloned();
                        if let Some(m) = hit {
                            let c = cur.coeff(&m);
                            let quot = m.div(&rule.lead);
                            let mut repl = Poly::zero(cur.table());
                            for (rm, rc) in rule.replacement.terms() {
                                repl.add_term(rm.mul(&quot), rc * &c);
                            }
                            cur.add_term(m, -&c);
                            cur = &cur + &repl;
                            continue 'outer;
                        }
                    }
                    break;
                }
                cur
            }
            _ => p.clone(),
        }
    }

    /// Does `p` reduce to zero (substitution mode), or is it certified a
    /// member at the configured bound (membership mode)?
    pub fn is_zero_mod(&self, p: &Poly) -> bool {
        match self {
            RelationSet::Trivial => p.is_zero(),
            RelationSet::Substitution { .. } => self.reduce(p).is_zero(),
            RelationSet::Membership { relations, degree_bound } => {
                if p.is_zero() {
                    return true;
                }
                ideal_member(p, relations, *degree_bound).is_ok_and(|w| w.is_some())
            }
        }
    }
}

/// An exact certificate `p = sum_i multiplier_i * relation_i`.
#[derive(Clone, Debug)]
pub struct MembershipWitness {
    /// Pairs (relation index, multiplier polynomial).
    pub combination: Vec<(usize, Poly)>,
    /// Largest total degree `deg(multiplier * relation)` used.
    pub bound_used: u32,
}

impl MembershipWitness {
    /// Re-expands the combination; must equal the certified polynomial.
    pub fn expand(&self, relations: &[Poly]) -> Poly {
        let table = relations[0].table();
        let mut acc = Poly::zero(table);
        for (idx, mult) in &self.combination {
            acc = &acc + &(mult * &relations[*idx]);
        }
        acc
    }
}

/// Field element for the linear solves: one `AlgebraicCoeff` per
/// `(omega, kappa)` key is handled by splitting beforehand.
type FieldElt = AlgebraicCoeff;

/// Certifies `p` as a member of the ideal generated by `relations` with
/// `deg(multiplier_i * relation_i) <= degree_bound`, by exact linear algebra.
///
/// Returns `Ok(Some(witness))` on success, `Ok(None)` if no combination
/// exists at this bound (not a proof of non-membership), and an error if the
/// bound is below `deg(p)`.
pub fn ideal_member(
    p: &Poly,
    relations: &[Poly],
    degree_bound: u32,
) -> Result<Option<MembershipWitness>, PolyError> {
    if p.is_zero() {
        return Ok(Some(MembershipWitness { combination: vec![], bound_used: 0 }));
    }
    let deg = p.degree();
    if (degree_bound as i64) < deg {
        return Err(PolyError::BoundTooSmall { bound: degree_bound, degree: deg as u32 });
    }
    // Escalate the multiplier degree so the minimal bound gets recorded.
    let min_rel_deg = relations.iter().map(|r| r.degree()).min().unwrap_or(0);
    let start = deg.max(min_rel_deg) as u32;
    for bound in start..=degree_bound {
        if let Some(w) = ideal_member_at(p, relations, bound) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn ideal_member_at(p: &Poly, relations: &[Poly], bound: u32) -> Option<MembershipWitness> {
    let table = p.table();

    // Split the target by (omega, kappa) coefficient key and weight;
    // the relations are assumed coefficient-rational and weight-homogeneous,
    // so the solve decomposes blockwise.
    #[derive(PartialEq, Eq, PartialOrd, Ord, Clone, Copy, Debug)]
    struct SliceKey {
        scalar_key: (i64, u32),
        weight: Weight,
    }

    let mut slices: BTreeMap<SliceKey, BTreeMap<Monomial, FieldElt>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let w = m.weight(table);
        for (sk, coeff) in c.terms() {
            slices
                .entry(SliceKey { scalar_key: *sk, weight: w })
                .or_default()
                .insert(m.clone(), coeff.clone());
        }
    }

    let mut combination: BTreeMap<usize, Poly> = BTreeMap::new();
    for (key, target) in slices {
        let sol = solve_slice(table, relations, &target, key.weight, bound)?;
        for (rel_idx, mono, coeff) in sol {
            let mut c = Scalar::zero();
            c.add_assign_term(key.scalar_key, &coeff);
            combination
                .entry(rel_idx)
                .or_insert_with(|| Poly::zero(table))
                .add_term(mono, c);
        }
    }
    let combination: Vec<(usize, Poly)> = combination
        .into_iter()
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let witness = MembershipWitness { combination, bound_used: bound };
    debug_assert_eq!(&witness.expand(relations), p);
    Some(witness)
}

/// Solves one weight slice: find multipliers with field coefficients such
/// that `sum multiplier_i * relation_i` equals the target monomial vector.
fn solve_slice(
    table: &Arc<GeneratorTable>,
    relations: &[Poly],
    target: &BTreeMap<Monomial, FieldElt>,
    weight: Weight,
    bound: u32,
) -> Option<Vec<(usize, Monomial, FieldElt)>> {
    // Column space: (relation index, multiplier monomial) with the monomial
    // weight matched so that relation * monomial is homogeneous of `weight`.
    let mut columns: Vec<(usize, Monomial, BTreeMap<Monomial, FieldElt>)> = Vec::new();
    for (ri, rel) in relations.iter().enumerate() {
        let rw = rel.weight().expect("membership relations must be weight-homogeneous");
        let rdeg = rel.degree();
        let mdeg = bound as i64 - rdeg;
        if mdeg < 0 {
            continue;
        }
        let mw = Weight(weight.0 - rw.0, weight.1 - rw.1);
        for mono in enumerate_monomials(table, mdeg, mw) {
            let mut col: BTreeMap<Monomial, FieldElt> = BTreeMap::new();
            for (rm, rc) in rel.terms() {
                // Relations carry plain rational coefficients on the (0,0)
                // scalar key by construction.
                let mut field = AlgebraicCoeff::zero();
                for (sk, cc) in rc.terms() {
                    assert_eq!(*sk, (0, 0), "relations must be omega- and kappa-free");
                    field = &field + cc;
                }
                let m = rm.mul(&mono);
                let e = col.entry(m).or_insert_with(AlgebraicCoeff::zero);
                *e = &*e + &field;
            }
            col.retain(|_, v| !v.is_zero());
            if !col.is_empty() {
                columns.push((ri, mono, col));
            }
        }
    }
    if columns.is_empty() {
        return None;
    }

    // Row dictionary.
    let mut row_index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for (_, _, col) in &columns {
        for m in col.keys() {
            let next = row_index.len();
            row_index.entry(m.clone()).or_insert(next);
        }
    }
    for m in target.keys() {
        let next = row_index.len();
        row_index.entry(m.clone()).or_insert(next);
    }
    let nrows = row_index.len();
    let ncols = columns.len();

    // Dense exact Gaussian elimination on [A | b].
    let mut mat: Vec<Vec<FieldElt>> = vec![vec![AlgebraicCoeff::zero(); ncols + 1]; nrows];
    for (j, (_, _, col)) in columns.iter().enumerate() {
        for (m, v) in col {
            mat[row_index[m]][j] = v.clone();
        }
    }
    for (m, v) in target {
        mat[row_index[m]][ncols] = v.clone();
    }

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut r = 0usize;
    for j in 0..ncols {
        let mut pivot = None;
        for i in r..nrows {
            if !mat[i][j].is_zero() {
                pivot = Some(i);
                break;
            }
        }
        let Some(pi) = pivot else { continue };
        mat.swap(r, pi);
        let inv = mat[r][j].inverse().unwrap();
        for jj in j..=ncols {
            mat[r][jj] = &mat[r][jj] * &inv;
        }
        for i in 0..nrows {
            if i != r && !mat[i][j].is_zero() {
                let f = mat[i][j].clone();
                for jj in j..=ncols {
                    let delta = &f * &mat[r][jj];
                    mat[i][jj] = &mat[i][jj] - &delta;
                }
            }
        }
        pivot_of_col[j] = Some(r);
        r += 1;
        if r == nrows {
            break;
        }
    }

    // Consistency: rows with zero coefficients must have zero rhs.
    for row in mat.iter() {
        if row[..ncols].iter().all(AlgebraicCoeff::is_zero) && !row[ncols].is_zero() {
            return None;
        }
    }

    // Back-substitution: free columns set to zero.
    let mut solution = Vec::new();
    for (j, piv) in pivot_of_col.iter().enumerate() {
        if let Some(pi) = piv {
            let v = mat[*pi][ncols].clone();
            if !v.is_zero() {
                let (ri, mono, _) = &columns[j];
                solution.push((*ri, mono.clone(), v));
            }
        }
    }
    Some(solution)
}

/// All monomials over `table` with total degree <= `max_degree` and the
/// given weight. Only nonnegative exponents are enumerated (membership
/// multipliers never need inverses).
fn enumerate_monomials(
    table: &Arc<GeneratorTable>,
    max_degree: i64,
    weight: Weight,
) -> Vec<Monomial> {
    let n = table.len();
    let mut out = Vec::new();
    let mut cur = vec![0i32; n];
    fn rec(
        table: &GeneratorTable,
        idx: usize,
        remaining: i64,
        cur: &mut Vec<i32>,
        target: Weight,
        acc: Weight,
        out: &mut Vec<Monomial>,
    ) {
        if idx == table.len() {
            if acc == target {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let gw = table.weight(idx);
        for e in 0..=remaining {
            cur[idx] = e as i32;
            let next = Weight(acc.0 + gw.0 * e, acc.1 + gw.1 * e);
            rec(table, idx + 1, remaining - e, cur, target, next, out);
        }
        cur[idx] = 0;
    }
    rec(table, 0, max_degree, &mut cur, weight, Weight::ZERO, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::Weight;
    use proptest::prelude::*;

    fn simple_table() -> Arc<GeneratorTable> {
        // Two conjugate pairs a, ac and b, bc with weights (1,0), (0,1).
        Arc::new(GeneratorTable::new(vec![
            Generator { name: "a".into(), weight: Weight(1, 0), star_partner: 1, u_degree: 0, invertible: false },
            Generator { name: "ac".into(), weight: Weight(-1, 0), star_partner: 0, u_degree: 0, invertible: false },
            Generator { name: "b".into(), weight: Weight(0, 1), star_partner: 3, u_degree: 0, invertible: false },
            Generator { name: "bc".into(), weight: Weight(0, -1), star_partner: 2, u_degree: 0, invertible: false },
        ]))
    }

    #[test]
    fn mul_and_weight() {
        let t = simple_table();
        let a = Poly::generator(&t, 0);
        let b = Poly::generator(&t, 2);
        let ab = &a * &b;
        assert_eq!(ab.weight(), Some(Weight(1, 1)));
        let one = Poly::one(&t);
        assert_eq!(&ab * &one, ab);
    }

    #[test]
    fn star_moves_generators() {
        let t = simple_table();
        let a = Poly::generator(&t, 0);
        let b = Poly::generator(&t, 2);
        let p = &(&a * &b).scale(&Scalar::i()) + &Poly::one(&t);
        let s = p.star();
        let expected = &(&Poly::generator(&t, 1) * &Poly::generator(&t, 3))
            .scale(&(-&Scalar::i()))
            + &Poly::one(&t);
        assert_eq!(s, expected);
        assert_eq!(s.star(), p);
    }

    #[test]
    fn substitution_reduce() {
        let t = simple_table();
        // Rule: b*bc -> 1 - a*ac  (a unit-sphere style relation; b*bc is
        // the highest degree-2 monomial in the declared order)
        let lead = Monomial(vec![0, 0, 1, 1]);
        let mut repl = Poly::one(&t);
        repl.add_term(Monomial(vec![1, 1, 0, 0]), Scalar::from_int(-1));
        let rel = RelationSet::substitution(vec![RewriteRule { lead, replacement: repl }]).unwrap();

        let a = Poly::generator(&t, 0);
        let ac = Poly::generator(&t, 1);
        let b = Poly::generator(&t, 2);
        let bc = Poly::generator(&t, 3);
        // a*ac + b*bc - 1 reduces to zero
        let p = &(&(&a * &ac) + &(&b * &bc)) - &Poly::one(&t);
        assert!(rel.reduce(&p).is_zero());
        // already normal
        assert_eq!(rel.reduce(&a), a);
        // idempotent
        let q = &(&b * &bc) * &a;
        assert_eq!(rel.reduce(&rel.reduce(&q)), rel.reduce(&q));
    }

    #[test]
    fn nonterminating_rule_rejected() {
        let t = simple_table();
        // Rule whose replacement contains a monomial above the lead.
        let lead = Monomial(vec![1, 0, 0, 0]);
        let repl = Poly::from_terms(&t, [(Monomial(vec![0, 0, 1, 1]), Scalar::one())]);
        assert!(RelationSet::substitution(vec![RewriteRule { lead, replacement: repl }]).is_err());
    }

    #[test]
    fn membership_simple() {
        let t = simple_table();
        let a = Poly::generator(&t, 0);
        let ac = Poly::generator(&t, 1);
        let b = Poly::generator(&t, 2);
        let bc = Poly::generator(&t, 3);
        // ideal generated by (a*ac + b*bc - 1); note this is weight (0,0).
        let g = &(&(&a * &ac) + &(&b * &bc)) - &Poly::one(&t);
        let rels = vec![g.clone()];

        // the generator itself
        let w = ideal_member(&g, &rels, 2).unwrap().unwrap();
        assert_eq!(w.expand(&rels), g);

        // b * relation at bound 3
        let p = &b * &g;
        let w = ideal_member(&p, &rels, 3).unwrap().unwrap();
        assert_eq!(w.expand(&rels), p);
        assert_eq!(w.bound_used, 3);

        // a degree-1 element is not a member at any small bound
        assert!(ideal_member(&a, &rels, 4).unwrap().is_none());

        // bound below the degree errors out
        assert!(ideal_member(&p, &rels, 1).is_err());
    }

    fn arb_poly(t: Arc<GeneratorTable>) -> impl Strategy<Value = Poly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0i32..3, 4),
                (-3i64..4, 1i64..3),
            ),
            0..5,
        )
        .prop_map(move |terms| {
            let mut p = Poly::zero(&t);
            for (exps, (num, den)) in terms {
                p.add_term(Monomial(exps), Scalar::from_ratio(num, den));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn reduce_is_ring_congruent(
            p in arb_poly(simple_table()),
            q in arb_poly(simple_table()),
        ) {
            // shared table instance for the relation set
            let t = p.table().clone();
            let lead = Monomial(vec![0, 0, 1, 1]);
            let mut repl = Poly::one(&t);
            repl.add_term(Monomial(vec![1, 1, 0, 0]), Scalar::from_int(-1));
            let rel = RelationSet::substitution(vec![RewriteRule { lead, replacement: repl }]).unwrap();

            // q may be over a different Arc; rebuild over p's table
            let q = Poly::from_terms(&t, q.terms().map(|(m, c)| (m.clone(), c.clone())));
            let lhs = rel.reduce(&(&p * &q));
            let rhs = rel.reduce(&(&rel.reduce(&p) * &rel.reduce(&q)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn monomial_weight_additivity(
            e1 in proptest::collection::vec(0i32..4, 4),
            e2 in proptest::collection::vec(0i32..4, 4),
        ) {
            let t = simple_table();
            let m1 = Monomial(e1);
            let m2 = Monomial(e2);
            let w12 = m1.mul(&m2).weight(&t);
            let w = m1.weight(&t) + m2.weight(&t);
            prop_assert_eq!(w12, w);
        }
    }
}
