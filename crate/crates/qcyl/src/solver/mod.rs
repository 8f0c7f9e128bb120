//! The Corteel–Welsh engine: solves the coupled q-difference system
//!
//! `G_c(z,q) = sum over nonempty J in I_c of (-1)^{|J|-1} (zq;q)_{|J|-1} G_{c(J)}(zq^{|J|},q)`
//!
//! for every composition reachable from a seed profile, and re-verifies the
//! written-out level-5 equations and the explicit order-4 recurrence on the
//! solver's output.
//!
//! Read coefficient-wise in z^k, every same-level unknown on the right-hand
//! side carries a factor q^{k|J|} of positive q-valuation, so the k-level
//! system is a q-adic contraction: Jacobi sweeps over the orbit converge in
//! at most ceil(order/k) rounds, independent of the sweep order.

mod recdata;

pub use recdata::{coefficients_at, TERM_COUNT_DIGEST};

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::profiles::Profile;
use crate::qalg::{qbinom, QLaurent, QSeries, ZQSeries};

/// The closure of a seed profile under the subset move, with the recursion
/// terms of each member's q-difference equation resolved to orbit indices.
pub struct OrbitSystem {
    profiles: Vec<Profile>,
    equations: Vec<Vec<EquationTerm>>,
}

/// One J-term of the recursion for a fixed profile: sign (-1)^{|J|-1},
/// substitution shift |J|, Pochhammer prefix length |J|-1, moved target.
#[derive(Clone, Debug)]
struct EquationTerm {
    sign: i8,
    shift: usize,
    prefix: usize,
    target: usize,
}

impl OrbitSystem {
    /// Breadth-first closure from the seed. For level 5, k = 3 this yields
    /// all 21 compositions.
    pub fn new(seed: &Profile) -> Self {
        let mut profiles = vec![seed.clone()];
        let mut index: HashMap<Profile, usize> = HashMap::from([(seed.clone(), 0)]);
        let mut equations = Vec::new();
        let mut next = 0;
        while next < profiles.len() {
            let c = profiles[next].clone();
            let mut terms = Vec::new();
            for j_set in c.subsets_of_support() {
                let moved = c.move_cj(&j_set).expect("subset comes from the support");
                let target = *index.entry(moved.clone()).or_insert_with(|| {
                    profiles.push(moved);
                    profiles.len() - 1
                });
                terms.push(EquationTerm {
                    sign: if j_set.len() % 2 == 1 { 1 } else { -1 },
                    shift: j_set.len(),
                    prefix: j_set.len() - 1,
                    target,
                });
            }
            equations.push(terms);
            next += 1;
        }
        OrbitSystem { profiles, equations }
    }

    pub fn profiles(&self) -> &[Profile] {
        &self.profiles
    }

    /// Solve for G_c(z,q) on the whole orbit, to z-degree bound `zdeg`
    /// (exclusive) and q-order `order` (exclusive).
    pub fn solve_g(&self, zdeg: usize, order: usize) -> OrbitSolution {
        let n = self.profiles.len();
        // g[p][k] is the z^k coefficient series of G for profile p.
        let mut g: Vec<Vec<QSeries>> = vec![vec![QSeries::one(order)]; n];

        // Pochhammer prefix coefficients: poch_coef[j][i] is the z^i
        // coefficient of (zq;q)_j, a polynomial in q.
        let max_prefix = self
            .equations
            .iter()
            .flatten()
            .map(|t| t.prefix)
            .max()
            .unwrap_or(0);
        let poch_coef: Vec<Vec<QLaurent>> = (0..=max_prefix)
            .map(|j| {
                (0..=j)
                    .map(|i| {
                        let mut c = &QLaurent::monomial(BigInt::from(1), (i * (i + 1) / 2) as i64)
                            * &qbinom(j as i64, i as i64);
                        if i % 2 == 1 {
                            c = -&c;
                        }
                        c
                    })
                    .collect()
            })
            .collect();

        for k in 1..zdeg {
            // Contribution of strictly lower z-levels, fixed during this level.
            let base: Vec<QSeries> = (0..n)
                .map(|p| {
                    let mut acc = QSeries::zero(order);
                    for term in &self.equations[p] {
                        for i in 1..=term.prefix.min(k) {
                            let lower = &g[term.target][k - i];
                            let mut contrib = lower.mul_laurent(&poch_coef[term.prefix][i]);
                            contrib = contrib.shifted((k - i) * term.shift);
                            if term.sign > 0 {
                                acc = &acc + &contrib;
                            } else {
                                acc = &acc - &contrib;
                            }
                        }
                    }
                    acc
                })
                .collect();

            // Jacobi fixed-point sweeps for the same-level terms, which all
            // carry q^{k * shift}.
            let mut cur: Vec<QSeries> = vec![QSeries::zero(order); n];
            let max_sweeps = order / k + 2;
            let mut converged = false;
            for _ in 0..max_sweeps {
                let next: Vec<QSeries> = (0..n)
                    .map(|p| {
                        let mut acc = base[p].clone();
                        for term in &self.equations[p] {
                            let shift = k * term.shift;
                            if shift >= order {
                                continue;
                            }
                            let sign = BigInt::from(term.sign);
                            acc.add_scaled_shifted(&cur[term.target], &sign, shift);
                        }
                        acc
                    })
                    .collect();
                if next == cur {
                    converged = true;
                    break;
                }
                cur = next;
            }
            assert!(
                converged,
                "fixed-point iteration failed to converge at level {k}: equation assembly bug"
            );
            for p in 0..n {
                g[p].push(cur[p].clone());
            }
        }

        let series = g.into_iter().map(ZQSeries::from_zcoeffs).collect();
        OrbitSolution {
            profiles: self.profiles.clone(),
            series,
        }
    }
}

/// G_c(z,q) for every profile of one orbit.
pub struct OrbitSolution {
    profiles: Vec<Profile>,
    series: Vec<ZQSeries>,
}

impl OrbitSolution {
    pub fn profiles(&self) -> &[Profile] {
        &self.profiles
    }

    /// The solved G_c(z,q) for a profile of the orbit.
    pub fn g(&self, c: &Profile) -> Option<&ZQSeries> {
        self.profiles.iter().position(|p| p == c).map(|i| &self.series[i])
    }

    /// F_c(z,q), recovered from G by dividing out (zq;q)_inf.
    pub fn f(&self, c: &Profile) -> Option<ZQSeries> {
        self.g(c).map(|g| g.div_poch_inf())
    }
}

/// Convenience wrapper: solve the orbit of `seed` and return the solution.
pub fn solve_g(seed: &Profile, zdeg: usize, order: usize) -> OrbitSolution {
    OrbitSystem::new(seed).solve_g(zdeg, order)
}

/// F_c(z,q) for the seed profile alone.
pub fn solve_f(seed: &Profile, zdeg: usize, order: usize) -> ZQSeries {
    solve_g(seed, zdeg, order)
        .f(seed)
        .expect("seed is in its own orbit")
}

/// Outcome of one residual check: `first_nonzero` is the first offending
/// (z-degree, q-exponent) pair, or None when the residual vanishes.
#[derive(Clone, Debug)]
pub struct ResidualItem {
    pub label: String,
    pub first_nonzero: Option<(usize, usize)>,
}

impl ResidualItem {
    pub fn ok(&self) -> bool {
        self.first_nonzero.is_none()
    }
}

/// One right-hand-side term of a written-out q-difference equation:
/// `sign * z^{z_pow} q^{q_pow} (zq;q)_{prefix} G_target(zq^{shift}, q)`.
struct PrintedTerm {
    sign: i8,
    z_pow: usize,
    q_pow: usize,
    prefix: usize,
    shift: usize,
    target: [usize; 3],
}

struct PrintedEquation {
    label: &'static str,
    lhs: [usize; 3],
    terms: &'static [PrintedTerm],
}

const fn pt(
    sign: i8,
    z_pow: usize,
    q_pow: usize,
    prefix: usize,
    shift: usize,
    target: [usize; 3],
) -> PrintedTerm {
    PrintedTerm { sign, z_pow, q_pow, prefix, shift, target }
}

/// The seven coupled equations for the level-5 profiles, written out
/// with rotation-normalized targets.
static PRINTED_SYSTEM: [PrintedEquation; 7] = [
    PrintedEquation {
        label: "qdiff500",
        lhs: [5, 0, 0],
        terms: &[pt(1, 0, 0, 0, 1, [4, 1, 0])],
    },
    PrintedEquation {
        label: "qdiff410",
        lhs: [4, 1, 0],
        terms: &[
            pt(1, 0, 0, 0, 1, [4, 0, 1]),
            pt(1, 0, 0, 0, 1, [3, 2, 0]),
            pt(-1, 0, 0, 1, 2, [3, 1, 1]),
        ],
    },
    PrintedEquation {
        label: "qdiff401",
        lhs: [4, 0, 1],
        terms: &[
            pt(1, 0, 0, 0, 1, [5, 0, 0]),
            pt(1, 0, 0, 0, 1, [3, 1, 1]),
            pt(-1, 0, 0, 1, 2, [4, 1, 0]),
        ],
    },
    PrintedEquation {
        label: "qdiff320",
        lhs: [3, 2, 0],
        terms: &[
            pt(1, 0, 0, 0, 1, [3, 1, 1]),
            pt(1, 0, 0, 0, 1, [3, 0, 2]),
            pt(-1, 0, 0, 1, 2, [2, 2, 1]),
        ],
    },
    PrintedEquation {
        label: "qdiff311",
        lhs: [3, 1, 1],
        terms: &[
            pt(1, 0, 0, 0, 1, [4, 1, 0]),
            pt(1, 0, 0, 0, 1, [3, 0, 2]),
            pt(1, 0, 0, 0, 1, [2, 2, 1]),
            pt(-1, 0, 0, 1, 2, [4, 0, 1]),
            pt(-1, 0, 0, 1, 2, [3, 2, 0]),
            pt(-1, 0, 0, 1, 2, [2, 2, 1]),
            pt(1, 0, 0, 2, 3, [3, 1, 1]),
        ],
    },
    PrintedEquation {
        label: "qdiff302",
        lhs: [3, 0, 2],
        terms: &[
            pt(1, 0, 0, 0, 1, [4, 0, 1]),
            pt(1, 0, 0, 0, 1, [2, 2, 1]),
            pt(-1, 0, 0, 1, 2, [3, 1, 1]),
        ],
    },
    PrintedEquation {
        label: "qdiff221",
        lhs: [2, 2, 1],
        terms: &[
            pt(1, 0, 0, 0, 1, [3, 2, 0]),
            pt(1, 0, 0, 0, 1, [3, 1, 1]),
            pt(1, 0, 0, 0, 1, [2, 2, 1]),
            pt(-1, 0, 0, 1, 2, [3, 1, 1]),
            pt(-1, 0, 0, 1, 2, [3, 0, 2]),
            pt(-1, 0, 0, 1, 2, [2, 2, 1]),
            pt(1, 0, 0, 2, 3, [2, 2, 1]),
        ],
    },
];

/// The three derived single-signed equations obtained by eliminating the
/// Pochhammer prefixes from the coupled system.
static DERIVED_SYSTEM: [PrintedEquation; 3] = [
    PrintedEquation {
        label: "qdiff401bis",
        lhs: [4, 0, 1],
        terms: &[
            pt(1, 0, 0, 0, 1, [3, 1, 1]),
            pt(1, 1, 1, 0, 2, [4, 1, 0]),
        ],
    },
    PrintedEquation {
        label: "qdiff302bis",
        lhs: [3, 0, 2],
        terms: &[
            pt(1, 0, 0, 0, 1, [2, 2, 1]),
            pt(1, 1, 1, 0, 2, [3, 1, 1]),
            pt(1, 1, 2, 0, 3, [4, 1, 0]),
        ],
    },
    PrintedEquation {
        label: "qdiff320bis",
        lhs: [3, 2, 0],
        terms: &[
            pt(1, 0, 0, 0, 1, [3, 1, 1]),
            pt(1, 1, 1, 0, 2, [2, 2, 1]),
            pt(1, 1, 2, 0, 3, [3, 1, 1]),
            pt(1, 1, 3, 0, 4, [4, 1, 0]),
        ],
    },
];

fn residual_of(eq: &PrintedEquation, sol: &OrbitSolution) -> ResidualItem {
    let lookup = |parts: &[usize; 3]| {
        let c = Profile::new(parts.to_vec()).unwrap();
        sol.g(&c)
            .unwrap_or_else(|| panic!("profile {c} missing from orbit"))
            .clone()
    };
    let mut residual = lookup(&eq.lhs);
    for term in eq.terms {
        let mut value = lookup(&term.target).subst_zq(term.shift);
        if term.prefix > 0 {
            value = value.mul_poch_prefix(term.prefix);
        }
        if term.z_pow > 0 || term.q_pow > 0 {
            value = value.mul_z_monomial(term.z_pow, term.q_pow);
        }
        residual = if term.sign > 0 {
            &residual - &value
        } else {
            &residual + &value
        };
    }
    ResidualItem {
        label: eq.label.to_string(),
        first_nonzero: residual.first_nonzero(),
    }
}

/// Independently re-evaluate the seven written-out level-5 equations on solver
/// output, term by term through the bivariate-series operations rather than
/// the coefficient recursion the solver itself runs on.
pub fn verify_qdiff_system(zdeg: usize, order: usize) -> Vec<ResidualItem> {
    let seed = Profile::new(vec![5, 0, 0]).unwrap();
    let sol = solve_g(&seed, zdeg, order);
    PRINTED_SYSTEM.iter().map(|eq| residual_of(eq, &sol)).collect()
}

/// Residuals of the three derived equations on solver output.
pub fn verify_qdiff_derived(zdeg: usize, order: usize) -> Vec<ResidualItem> {
    let seed = Profile::new(vec![5, 0, 0]).unwrap();
    let sol = solve_g(&seed, zdeg, order);
    DERIVED_SYSTEM.iter().map(|eq| residual_of(eq, &sol)).collect()
}

/// Residuals of the explicit order-4 recurrence
/// `a_k g(k) - b_k g(k-1) - c_k g(k-2) + d_k g(k-3) + e_k g(k-4) = 0`
/// against a supplied table g[0..=k_max] of z^k coefficients of
/// G_{(4,1,0)}(z,q), for k = k_from..=k_max.
pub fn recg410_residuals(g: &[QSeries], k_from: usize, k_max: usize) -> Vec<ResidualItem> {
    assert!(k_from >= 4 && k_max >= k_from && g.len() > k_max);
    let mut out = Vec::new();
    for k in k_from..=k_max {
        let [a, b, c, d, e] = coefficients_at(k as i64);
        let mut residual = g[k].mul_laurent(&a);
        residual = &residual - &g[k - 1].mul_laurent(&b);
        residual = &residual - &g[k - 2].mul_laurent(&c);
        residual = &residual + &g[k - 3].mul_laurent(&d);
        residual = &residual + &g[k - 4].mul_laurent(&e);
        out.push(ResidualItem {
            label: format!("recg410 k={k}"),
            first_nonzero: residual.valuation().map(|v| (k, v)),
        });
    }
    out
}

/// Residuals of the coefficient-level coupled equation
/// `g410(k) = q^k g401(k) + q^k g320(k) - q^{2k} g311(k) + q^{2k-1} g311(k-1)`
/// on solver output, for k = 1..=k_max.
pub fn qrec410_residuals(sol: &OrbitSolution, k_max: usize) -> Vec<ResidualItem> {
    let p = |parts: [usize; 3]| Profile::new(parts.to_vec()).unwrap();
    let g410 = sol.g(&p([4, 1, 0])).unwrap();
    let g401 = sol.g(&p([4, 0, 1])).unwrap();
    let g320 = sol.g(&p([3, 2, 0])).unwrap();
    let g311 = sol.g(&p([3, 1, 1])).unwrap();
    let order = g410.order();
    let one = BigInt::from(1);
    let mut out = Vec::new();
    for k in 1..=k_max {
        let mut residual = g410.zcoeff(k).clone();
        let mut rhs = QSeries::zero(order);
        rhs.add_scaled_shifted(g401.zcoeff(k), &one, k);
        rhs.add_scaled_shifted(g320.zcoeff(k), &one, k);
        rhs.add_scaled_shifted(g311.zcoeff(k - 1), &one, 2 * k - 1);
        let mut sq = QSeries::zero(order);
        sq.add_scaled_shifted(g311.zcoeff(k), &one, 2 * k);
        rhs = &rhs - &sq;
        residual = &residual - &rhs;
        out.push(ResidualItem {
            label: format!("qrec410 k={k}"),
            first_nonzero: residual.valuation().map(|v| (k, v)),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(parts: &[usize]) -> Profile {
        Profile::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn orbit_of_level5_has_21_compositions() {
        let orbit = OrbitSystem::new(&profile(&[5, 0, 0]));
        assert_eq!(orbit.profiles().len(), 21);
        let orbit = OrbitSystem::new(&profile(&[2, 1]));
        assert_eq!(orbit.profiles().len(), 4);
    }

    #[test]
    fn g21_level_one_is_geometric() {
        // g_{(2,1)}(1) = q/(1-q)
        let sol = solve_g(&profile(&[2, 1]), 3, 12);
        let g = sol.g(&profile(&[2, 1])).unwrap();
        let expect = QSeries::monomial(BigInt::from(1), 1, 12).div_one_minus(1);
        assert_eq!(g.zcoeff(1), &expect);
        assert_eq!(g.zcoeff(0), &QSeries::one(12));
    }

    #[test]
    fn g21_matches_rr_closed_form() {
        // G_{(2,1)}(z,q) = sum z^n q^{n^2}/(q;q)_n
        let (zdeg, order) = (6, 30);
        let sol = solve_g(&profile(&[2, 1]), zdeg, order);
        let g = sol.g(&profile(&[2, 1])).unwrap();
        let mut denom = QSeries::one(order);
        for n in 0..zdeg {
            if n > 0 {
                denom.div_assign_one_minus(n);
            }
            assert_eq!(g.zcoeff(n), &denom.shifted(n * n), "z^{n}");
        }
        // G_{(3,0)}(z,q) = sum z^n q^{n^2+n}/(q;q)_n
        let g30 = sol.g(&profile(&[3, 0])).unwrap();
        let mut denom = QSeries::one(order);
        for n in 0..zdeg {
            if n > 0 {
                denom.div_assign_one_minus(n);
            }
            assert_eq!(g30.zcoeff(n), &denom.shifted(n * n + n), "z^{n}");
        }
    }

    #[test]
    fn g500_shifts_g410() {
        // qdiff500 coefficient-wise: g_{(5,0,0)}(k) = q^k g_{(4,1,0)}(k)
        let sol = solve_g(&profile(&[5, 0, 0]), 6, 40);
        let g500 = sol.g(&profile(&[5, 0, 0])).unwrap();
        let g410 = sol.g(&profile(&[4, 1, 0])).unwrap();
        for k in 0..6 {
            assert_eq!(g500.zcoeff(k), &g410.zcoeff(k).shifted(k), "z^{k}");
        }
    }

    #[test]
    fn solution_is_sweep_schedule_independent() {
        // Seeding from different orbit members permutes the sweep order;
        // the fixed point must not care.
        let a = solve_g(&profile(&[2, 2, 1]), 5, 30);
        let b = solve_g(&profile(&[5, 0, 0]), 5, 30);
        let c = solve_g(&profile(&[0, 5, 0]), 5, 30);
        for parts in [[5, 0, 0], [4, 1, 0], [2, 2, 1], [1, 2, 2]] {
            let p = profile(&parts);
            assert_eq!(a.g(&p), b.g(&p), "{p}");
            assert_eq!(a.g(&p), c.g(&p), "{p}");
        }
    }

    #[test]
    fn g221_column_sums_match_product() {
        // z = 1 totals need z-degree >= order: g_c(k) has valuation >= k,
        // so dropped z-degrees only touch coefficients past the order.
        let order = 61;
        let sol = solve_g(&profile(&[2, 2, 1]), order, order);
        let g = sol.g(&profile(&[2, 2, 1])).unwrap();
        let product = crate::products::g_product(&profile(&[2, 2, 1]), order);
        assert_eq!(g.z1_sum(), product);
    }

    #[test]
    fn g_is_rotation_invariant() {
        let sol = solve_g(&profile(&[3, 1, 1]), 5, 25);
        for parts in [[3usize, 1, 1], [4, 1, 0], [3, 0, 2]] {
            let c = profile(&parts);
            assert_eq!(sol.g(&c), sol.g(&c.rotate()), "{c}");
        }
    }

    #[test]
    fn low_exponent_of_gk_is_at_least_k() {
        for seed in [vec![2usize, 1], vec![5, 0, 0], vec![2, 1, 1]] {
            let c = profile(&seed);
            let sol = solve_g(&c, 6, 40);
            for p in sol.profiles() {
                let g = sol.g(p).unwrap();
                for k in 1..6 {
                    let val = g.zcoeff(k).valuation();
                    assert!(
                        val.map_or(true, |v| v >= k),
                        "g_{p}({k}) has valuation {val:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn f30_satisfies_rational_form_equation() {
        // F_{(3,0)}(z,q) (1 - zq) = F_{(2,1)}(zq, q) up to truncation
        let (zdeg, order) = (6, 25);
        let sol = solve_g(&profile(&[3, 0]), zdeg, order);
        let f30 = sol.f(&profile(&[3, 0])).unwrap();
        let f21 = sol.f(&profile(&[2, 1])).unwrap();
        let lhs = f30.mul_poch_prefix(1);
        let rhs = f21.subst_zq(1);
        assert_eq!(&lhs - &rhs, ZQSeries::zero(zdeg, order));
    }

    #[test]
    fn written_system_residuals_vanish() {
        for item in verify_qdiff_system(5, 30) {
            assert!(item.ok(), "{} residual at {:?}", item.label, item.first_nonzero);
        }
    }

    #[test]
    fn derived_system_residuals_vanish() {
        for item in verify_qdiff_derived(5, 30) {
            assert!(item.ok(), "{} residual at {:?}", item.label, item.first_nonzero);
        }
    }

    #[test]
    fn qrec410_by_hand_at_k1() {
        // g410(1) = q g401(1) + q g320(1) - q^2 g311(1) + q g311(0), g311(0)=1
        let sol = solve_g(&profile(&[4, 1, 0]), 3, 20);
        let items = qrec410_residuals(&sol, 2);
        for item in &items {
            assert!(item.ok(), "{}", item.label);
        }
        let g410 = sol.g(&profile(&[4, 1, 0])).unwrap();
        let g401 = sol.g(&profile(&[4, 0, 1])).unwrap();
        let g320 = sol.g(&profile(&[3, 2, 0])).unwrap();
        let g311 = sol.g(&profile(&[3, 1, 1])).unwrap();
        let one = BigInt::from(1);
        let mut rhs = QSeries::monomial(one.clone(), 1, 20);
        rhs.add_scaled_shifted(g401.zcoeff(1), &one, 1);
        rhs.add_scaled_shifted(g320.zcoeff(1), &one, 1);
        rhs.add_scaled_shifted(g311.zcoeff(1), &BigInt::from(-1), 2);
        assert_eq!(g410.zcoeff(1), &rhs);
    }

    #[test]
    fn recg410_residuals_vanish_on_solver_output() {
        let sol = solve_g(&profile(&[4, 1, 0]), 9, 60);
        let g410 = sol.g(&profile(&[4, 1, 0])).unwrap();
        let g: Vec<QSeries> = (0..9).map(|k| g410.zcoeff(k).clone()).collect();
        for item in recg410_residuals(&g, 4, 8) {
            assert!(item.ok(), "{} residual at {:?}", item.label, item.first_nonzero);
        }
    }
}
