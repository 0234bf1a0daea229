//! Buchberger completion for submodules of the free module of rank `n` over
//! the operator ring `Q[d_1, ..., d_m]`, with the canonical orderly ranking as
//! the module monomial order.
//!
//! Every basis element also carries a production level `L`: it is a
//! combination of derivatives `delta^theta eq` of input equations with
//! `ord theta + ord eq <= L`. The largest gap `L - ord g` over the reduced
//! basis is a margin after which truncated prolongations see the whole module.

use std::collections::BTreeSet;

use num_rational::BigRational;

use super::{LinearDiffSystem, LinearEquation};
use crate::diffrank::{DifferentialMonomial, LeaderProfile};

#[derive(Clone, Debug)]
struct Tracked {
    eq: LinearEquation,
    leader: DifferentialMonomial,
    level: u64,
}

impl Tracked {
    fn new(eq: LinearEquation, level: u64) -> Option<Self> {
        let eq = eq.monic();
        let leader = eq.leader().ok()?.clone();
        Some(Tracked { eq, leader, level })
    }
}

/// A reduced Groebner basis: monic elements sorted by increasing leader.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    m: usize,
    n: usize,
    elements: Vec<LinearEquation>,
    levels: Vec<u64>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[LinearEquation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leaders(&self) -> Vec<DifferentialMonomial> {
        self.elements
            .iter()
            .map(|e| e.leader().expect("basis elements are nonzero").clone())
            .collect()
    }

    /// `E_i` = exponents of the leaders sitting on `x_i`.
    pub fn leader_profile(&self) -> LeaderProfile {
        LeaderProfile::from_leaders(self.m, self.n, &self.leaders())
            .expect("leaders come from a validated system")
    }

    /// Maximum order of a basis element.
    pub fn order(&self) -> u64 {
        self.elements
            .iter()
            .map(LinearEquation::order)
            .max()
            .unwrap_or(0)
    }

    /// Largest `level - order` over the basis; see the module docs.
    pub fn certified_margin(&self) -> u64 {
        self.elements
            .iter()
            .zip(&self.levels)
            .map(|(e, l)| l - e.order())
            .max()
            .unwrap_or(0)
    }

    /// The basis as a system over the same unknowns.
    pub fn to_system(&self) -> LinearDiffSystem {
        LinearDiffSystem::new(self.m, self.n, self.elements.clone())
            .expect("same ambient as the input")
    }
}

/// Reduces `f` by `basis` (skipping index `skip`), walking its terms from the
/// top down. Returns the level of the result.
fn reduce(f: &mut LinearEquation, mut level: u64, basis: &[Tracked], skip: Option<usize>) -> u64 {
    let mut cursor: Option<DifferentialMonomial> = None;
    loop {
        let next = match &cursor {
            None => f.terms.keys().next_back(),
            Some(c) => f.terms.range(..c.clone()).next_back().map(|(k, _)| k),
        }
        .cloned();
        let Some(term) = next else { break };
        let divisor = basis
            .iter()
            .enumerate()
            .find(|(k, g)| Some(*k) != skip && g.leader.divides(&term));
        if let Some((_, g)) = divisor {
            let coeff: BigRational = f.terms[&term].clone();
            let theta = term.xi().sub(g.leader.xi());
            f.sub_scaled(&coeff, &g.eq.derive(&theta));
            level = level.max(theta.order() + g.level);
        }
        cursor = Some(term);
    }
    level
}

/// Reduced Groebner basis of the module generated by the equations of `sys`.
///
/// S-polynomials are formed only for pairs whose leaders sit on the same
/// unknown. No coprimality shortcut is taken: in a module, coprime leaders
/// on one component can still have a nonzero S-polynomial.
pub fn module_groebner(sys: &LinearDiffSystem) -> GroebnerBasis {
    let mut basis: Vec<Tracked> = Vec::new();
    // pending pairs ordered by the order of their lcm
    let mut pairs: BTreeSet<(u64, usize, usize)> = BTreeSet::new();

    let push = |basis: &mut Vec<Tracked>, pairs: &mut BTreeSet<(u64, usize, usize)>, t: Tracked| {
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            if g.leader.var() == t.leader.var() {
                let lcm = g.leader.xi().join(t.leader.xi());
                pairs.insert((lcm.order(), i, j));
            }
        }
        basis.push(t);
    };

    for eq in sys.equations() {
        let mut f = eq.clone();
        let level = reduce(&mut f, eq.order(), &basis, None);
        if let Some(t) = Tracked::new(f, level) {
            push(&mut basis, &mut pairs, t);
        }
    }

    while let Some(first) = pairs.iter().next().copied() {
        pairs.remove(&first);
        let (_, i, j) = first;
        let (gi, gj) = (&basis[i], &basis[j]);
        let lcm = gi.leader.xi().join(gj.leader.xi());
        let ti = lcm.sub(gi.leader.xi());
        let tj = lcm.sub(gj.leader.xi());
        let level = (ti.order() + gi.level).max(tj.order() + gj.level);
        let mut s = gi.eq.derive(&ti);
        s.sub_scaled(&BigRational::from_integer(1.into()), &gj.eq.derive(&tj));
        let level = reduce(&mut s, level, &basis, None);
        if let Some(t) = Tracked::new(s, level) {
            push(&mut basis, &mut pairs, t);
        }
    }

    // drop elements whose leader is a derivative of another kept leader
    let mut kept: Vec<Tracked> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(l, h)| l != k && h.leader.divides(&g.leader) && (h.leader != g.leader || l < k));
        if !redundant {
            kept.push(g.clone());
        }
    }

    // inter-reduce tails
    for k in 0..kept.len() {
        let mut f = kept[k].eq.clone();
        let level = reduce(&mut f, kept[k].level, &kept, Some(k));
        kept[k] = Tracked::new(f, level).expect("leaders are not reducible after minimization");
    }

    kept.sort_by(|a, b| a.leader.cmp(&b.leader));
    GroebnerBasis {
        m: sys.m(),
        n: sys.n(),
        levels: kept.iter().map(|t| t.level).collect(),
        elements: kept.into_iter().map(|t| t.eq).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::parse_system;
    use super::*;
    use crate::expsets::ExponentSet;

    #[test]
    fn heat_is_its_own_basis() {
        let gb = module_groebner(&heat());
        assert_eq!(gb.len(), 1);
        assert_eq!(gb.elements()[0], heat().equations()[0].monic());
        let profile = gb.leader_profile();
        assert_eq!(profile.set(1), &ExponentSet::from_tuples(2, &[&[0, 2]]));
        assert_eq!(gb.certified_margin(), 0);
    }

    #[test]
    fn cauchy_riemann_gains_laplacian() {
        let gb = module_groebner(&cauchy_riemann());
        let laplacian = parse_system("m = 2\nn = 2\neq: d[2,0]x1 + d[0,2]x1\n")
            .unwrap()
            .equations()[0]
            .clone();
        assert!(gb.elements().contains(&laplacian), "{:?}", gb.elements());
        assert_eq!(gb.len(), 3);
        let profile = gb.leader_profile();
        assert_eq!(profile.set(1), &ExponentSet::from_tuples(2, &[&[2, 0]]));
        assert_eq!(
            profile.set(2),
            &ExponentSet::from_tuples(2, &[&[0, 1], &[1, 0]])
        );
        // the Laplacian is one derivative of a first-order equation away
        assert_eq!(gb.certified_margin(), 0);
        assert_eq!(gb.order(), 2);
    }

    #[test]
    fn coprime_leaders_on_one_unknown() {
        let sys = parse_system("m = 2\nn = 1\neq: d[1,0]x1\neq: d[0,1]x1\n").unwrap();
        let gb = module_groebner(&sys);
        assert_eq!(gb.len(), 2);
        assert_eq!(
            gb.leader_profile().set(1),
            &ExponentSet::from_tuples(2, &[&[0, 1], &[1, 0]])
        );
    }

    #[test]
    fn coprime_leaders_with_tails_in_other_component() {
        // S = d2(d1 x1 + x2) - d1(d2 x1) = d2 x2 does not reduce to zero
        let sys = parse_system("m = 2\nn = 2\neq: d[1,0]x1 + x2\neq: d[0,1]x1\n").unwrap();
        let gb = module_groebner(&sys);
        let profile = gb.leader_profile();
        assert_eq!(profile.set(2), &ExponentSet::from_tuples(2, &[&[0, 1]]));
        assert_eq!(gb.certified_margin(), 1);
    }

    #[test]
    fn free_system_has_empty_basis() {
        let gb = module_groebner(&LinearDiffSystem::free(2, 2).unwrap());
        assert!(gb.is_empty());
        assert!(gb.leader_profile().sets().iter().all(ExponentSet::is_empty));
    }

    #[test]
    fn basis_is_reduced() {
        let sys = parse_system(
            "m = 2\nn = 2\neq: 2*d[1,0]x1 - 3*d[0,1]x2 + x1\neq: d[1,1]x2 + d[0,2]x1 - 2*x2\neq: d[2,0]x2 - x1\n",
        )
        .unwrap();
        let gb = module_groebner(&sys);
        let leaders = gb.leaders();
        for (k, e) in gb.elements().iter().enumerate() {
            assert_eq!(e.leader().unwrap(), &leaders[k]);
            for (l, lead) in leaders.iter().enumerate() {
                for (mono, _) in e.terms() {
                    if l != k || mono != &leaders[k] {
                        assert!(!lead.divides(mono), "{mono} reducible by {lead}");
                    }
                }
            }
        }
        // input order does not matter for a reduced basis
        let mut eqs = sys.equations().to_vec();
        eqs.reverse();
        let again = module_groebner(&LinearDiffSystem::new(2, 2, eqs).unwrap());
        assert_eq!(again.elements(), gb.elements());
    }
}
