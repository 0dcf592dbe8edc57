//! Bundle fixtures: the instanton bundle over the deformed 4-sphere and
//! the quantum orthogonal bundle, with their verification suites.

mod instanton;
mod orthogonal;
pub mod fixtures;
pub mod suites;

pub use instanton::build_instanton;
pub use orthogonal::build_orthogonal;

use std::sync::Arc;

use crate::derivations::Derivation;
use crate::dmap::d_apply;
use crate::grading::PhaseConvention;
use crate::polyalg::{GeneratorTable, Poly, RelationSet};

/// True (un-doubled) root label of a ladder field.
pub type Root = (i64, i64);

/// A packaged bundle: generators, relations, symmetry fields, base
/// coordinates, gauge generators and the phase convention.
#[derive(Clone)]
pub struct BundleSpec {
    pub name: String,
    pub table: Arc<GeneratorTable>,
    pub relations: RelationSet,
    pub conv: PhaseConvention,
    /// Cartan fields `H1`, `H2` (plain mode).
    pub cartan: Vec<(String, Derivation)>,
    /// Ladder fields `E_r` with their root labels (plain mode).
    pub roots: Vec<(Root, String, Derivation)>,
    /// Base coordinates: `alpha, beta, x, alphac, betac`.
    pub base: Vec<(String, Poly)>,
    /// Gauge generators `K1, K2, W_r` (plain mode).
    pub gauge: Vec<(String, Derivation)>,
    /// Default degree bound for membership certificates.
    pub degree_bound: u32,
}

impl BundleSpec {
    /// The ten symmetry fields in a fixed order: `H1, H2, E_r...`.
    pub fn symmetry_fields(&self) -> Vec<(String, Derivation)> {
        let mut out = self.cartan.clone();
        for (_, name, d) in &self.roots {
            out.push((name.clone(), d.clone()));
        }
        out
    }

    /// The braided gauge generators (images under the intertwiner).
    pub fn braided_gauge(&self) -> Vec<(String, Derivation)> {
        self.gauge
            .iter()
            .map(|(name, d)| {
                let braided = d_apply(d)
                    .expect("gauge generators are homogeneous")
                    .with_label(name.clone());
                (name.clone(), braided)
            })
            .collect()
    }

    pub fn gauge_by_name(&self, name: &str) -> Option<&Derivation> {
        self.gauge.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    pub fn base_by_name(&self, name: &str) -> Option<&Poly> {
        self.base.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    /// Monomials in the base coordinates up to the given degree, expanded
    /// to total-space polynomials, with display names. Degree 0 gives the
    /// constant 1 (named "1").
    pub fn base_monomials(&self, max_degree: u32) -> Vec<(String, Poly)> {
        let mut out: Vec<(String, Poly)> = vec![("1".into(), Poly::one(&self.table))];
        let mut frontier: Vec<(String, Poly)> = out.clone();
        for _ in 0..max_degree {
            let mut next = Vec::new();
            for (fname, fpoly) in &frontier {
                for (bname, bpoly) in &self.base {
                    // Keep a canonical name ordering to avoid duplicates:
                    // only extend by base elements >= the last factor.
                    if let Some(last) = fname.rsplit('*').next() {
                        if last != "1" && bname < &last.to_string() {
                            continue;
                        }
                    }
                    let name = if fname == "1" {
                        bname.clone()
                    } else {
                        format!("{fname}*{bname}")
                    };
                    next.push((name, fpoly * bpoly));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// The five base coordinates as (name, poly) pairs, conjugates included.
    pub fn base_with_conjugates(&self) -> &[(String, Poly)] {
        &self.base
    }
}
