//! Product sides: the Borodin series for any profile, the named modulus-5/7/8
//! products, Andrews–Gordon products, and the series-level symmetry checks.

use crate::error::{Error, Result};
use crate::profiles::Profile;
use crate::qalg::{inv_poch_inf, QSeries};

/// A named infinite product `[1/(q;q)_inf] * prod 1/(q^s;q^m)_inf`.
#[derive(Clone, Debug)]
pub struct NamedProduct {
    pub name: &'static str,
    pub factors: Vec<(usize, usize)>,
    pub include_eta: bool,
}

impl NamedProduct {
    pub fn expand(&self, order: usize) -> QSeries {
        let mut factors = self.factors.clone();
        if self.include_eta {
            factors.push((1, 1));
        }
        inv_poch_inf(&factors, order)
    }
}

/// The built-in product table: both Rogers–Ramanujan products, the mod-7
/// product, and the five distinct mod-8 products attached to the level-5
/// profiles (with aliases for the profiles that share a product).
pub fn product_table() -> Vec<NamedProduct> {
    let p8 = |exps: [usize; 8]| exps.iter().map(|&e| (e, 8)).collect::<Vec<_>>();
    vec![
        NamedProduct {
            name: "rr1",
            factors: vec![(1, 5), (4, 5)],
            include_eta: false,
        },
        NamedProduct {
            name: "rr2",
            factors: vec![(2, 5), (3, 5)],
            include_eta: false,
        },
        NamedProduct {
            name: "asw7",
            factors: vec![(1, 7), (1, 7), (3, 7), (4, 7), (6, 7), (6, 7)],
            include_eta: false,
        },
        NamedProduct {
            name: "prod500",
            factors: p8([2, 3, 3, 4, 4, 5, 5, 6]),
            include_eta: false,
        },
        NamedProduct {
            name: "prod410",
            factors: p8([1, 2, 3, 4, 4, 5, 6, 7]),
            include_eta: false,
        },
        NamedProduct {
            name: "prod401",
            factors: p8([1, 2, 3, 4, 4, 5, 6, 7]),
            include_eta: false,
        },
        NamedProduct {
            name: "prod320",
            factors: p8([1, 2, 2, 3, 5, 6, 6, 7]),
            include_eta: false,
        },
        NamedProduct {
            name: "prod302",
            factors: p8([1, 2, 2, 3, 5, 6, 6, 7]),
            include_eta: false,
        },
        NamedProduct {
            name: "prod311",
            factors: p8([1, 1, 3, 3, 5, 5, 7, 7]),
            include_eta: false,
        },
        NamedProduct {
            name: "prod221",
            factors: p8([1, 1, 2, 4, 4, 6, 7, 7]),
            include_eta: false,
        },
    ]
}

/// Look up and expand a named product; `ag(r,i)` is accepted as well.
pub fn named_product(name: &str, order: usize) -> Result<QSeries> {
    if let Some(args) = name.strip_prefix("ag(").and_then(|s| s.strip_suffix(')')) {
        let mut it = args.split(',');
        let parse = |tok: Option<&str>| {
            tok.and_then(|v| v.trim().parse::<usize>().ok())
                .ok_or_else(|| Error::UnknownName(name.to_string()))
        };
        let r = parse(it.next())?;
        let i = parse(it.next())?;
        if it.next().is_some() || !(2..=20).contains(&r) || !(1..=r).contains(&i) {
            return Err(Error::UnknownName(name.to_string()));
        }
        return Ok(ag_product(r, i, order));
    }
    product_table()
        .iter()
        .find(|p| p.name == name)
        .map(|p| p.expand(order))
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// The Andrews–Gordon product for parameters r >= 2, 1 <= i <= r: partitions
/// into parts not congruent to 0 or +-i modulo 2r+1. The eta quotient in the
/// usual display cancels into pure inverse Pochhammer classes.
pub fn ag_product(r: usize, i: usize, order: usize) -> QSeries {
    assert!(r >= 2 && (1..=r).contains(&i));
    let m = 2 * r + 1;
    let factors: Vec<(usize, usize)> = (1..m)
        .filter(|&e| e != i && e != m - i)
        .map(|e| (e, m))
        .collect();
    inv_poch_inf(&factors, order)
}

/// F_c(1,q): the full Borodin product for a profile, truncated at `order`.
pub fn f_product(c: &Profile, order: usize) -> QSeries {
    inv_poch_inf(&c.borodin_exponents().factors(), order)
}

/// G_c(1,q) = (q;q)_inf F_c(1,q), computed by exact multiplication of the
/// truncated Borodin series by prod_{e<order} (1 - q^e).
///
/// The multiplication stays correct even when the exponent multiset lacks a
/// full ladder 1..t (which happens for k = 3 exactly when all parts are
/// equal, e.g. (1,1,1)). When the ladder is present, deleting it from the
/// multiset must give the same series; that fast path is asserted for k = 3.
pub fn g_product(c: &Profile, order: usize) -> QSeries {
    let mut out = f_product(c, order);
    for e in 1..order {
        out.mul_assign_one_minus(e);
    }
    if c.k() == 3 {
        let mut ms = c.borodin_exponents();
        if ms.remove_full_ladder() {
            let fast = inv_poch_inf(&ms.factors(), order);
            assert_eq!(out, fast, "ladder subtraction disagrees for {c}");
        }
    }
    out
}

/// Series-level symmetry of F_c(1,q): rotation invariance for any k, plus
/// the swap of the first two parts when k = 3.
pub fn check_symmetry(c: &Profile, order: usize) -> bool {
    let base = f_product(c, order);
    if f_product(&c.rotate(), order) != base {
        return false;
    }
    if c.k() == 3 {
        let parts = c.parts();
        let swapped = Profile::new(vec![parts[1], parts[0], parts[2]]).unwrap();
        if f_product(&swapped, order) != base {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::compositions;
    use crate::testutil::{count_colored_partitions, residue_parts};
    use num_bigint::BigInt;

    fn profile(parts: &[usize]) -> Profile {
        Profile::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn f_product_of_1_0_counts_partitions() {
        assert_eq!(f_product(&profile(&[1, 0]), 4), QSeries::from_i64s(&[1, 1, 2, 3]));
    }

    #[test]
    fn f_product_of_2_1_is_eta_times_mod5() {
        let n = 40;
        assert_eq!(
            f_product(&profile(&[2, 1]), n),
            inv_poch_inf(&[(1, 1), (1, 5), (4, 5)], n)
        );
    }

    #[test]
    fn f_product_of_3_1_1_expands_to_mod8_classes() {
        let n = 40;
        let expanded = inv_poch_inf(
            &[
                (1, 1),
                (1, 8),
                (1, 8),
                (3, 8),
                (3, 8),
                (5, 8),
                (5, 8),
                (7, 8),
                (7, 8),
            ],
            n,
        );
        assert_eq!(f_product(&profile(&[3, 1, 1]), n), expanded);
    }

    #[test]
    fn g_product_of_2_2_1_low_coefficients() {
        let g = g_product(&profile(&[2, 2, 1]), 12);
        assert_eq!(g.coeff(0), &BigInt::from(1));
        assert_eq!(g.coeff(1), &BigInt::from(2));
        assert_eq!(g.coeff(2), &BigInt::from(4));
        // brute-force multipartition count with parts {1,1,2,4,4,6,7,7} mod 8
        let parts = residue_parts(&[1, 1, 2, 4, 4, 6, 7, 7], 8, 12);
        for n in 0..12 {
            assert_eq!(
                g.coeff(n),
                &BigInt::from(count_colored_partitions(n, &parts)),
                "coefficient of q^{n}"
            );
        }
    }

    #[test]
    fn g_product_of_5_0_0_has_no_part_one() {
        let g = g_product(&profile(&[5, 0, 0]), 10);
        assert_eq!(g.coeff(1), &BigInt::from(0));
    }

    #[test]
    fn g_product_of_2_1_matches_rr_sum() {
        // sum q^{n^2}/(q;q)_n built term by term
        let n = 30;
        let mut sum = QSeries::zero(n);
        let mut denom = QSeries::one(n);
        let mut i = 0;
        while i * i < n {
            if i > 0 {
                denom.div_assign_one_minus(i);
            }
            sum.add_scaled_shifted(&denom, &BigInt::from(1), i * i);
            i += 1;
        }
        assert_eq!(g_product(&profile(&[2, 1]), n), sum);
    }

    #[test]
    fn symmetry_checks() {
        assert!(check_symmetry(&profile(&[3, 0, 2]), 80));
        assert!(check_symmetry(&profile(&[4, 1, 0]), 80));
        assert_eq!(
            f_product(&profile(&[3, 2, 0]), 80),
            f_product(&profile(&[3, 0, 2]), 80)
        );
    }

    #[test]
    fn g_times_eta_inverse_recovers_f() {
        let n = 80;
        for parts in [vec![2usize, 1], vec![5, 0, 0], vec![2, 2, 1]] {
            let c = profile(&parts);
            let g = g_product(&c, n);
            let recovered = &g * &inv_poch_inf(&[(1, 1)], n);
            assert_eq!(recovered, f_product(&c, n), "profile {c}");
        }
    }

    #[test]
    fn product_coefficients_are_nonnegative() {
        // F is always a colored-partition count. G is one too whenever the
        // eta factor cancels into the multiset, i.e. for levels not
        // divisible by 3.
        for level in 1..=5 {
            for parts in compositions(3, level) {
                let c = Profile::new(parts).unwrap();
                let f = f_product(&c, 60);
                let g = g_product(&c, 60);
                for i in 0..60 {
                    assert!(f.coeff(i).sign() != num_bigint::Sign::Minus);
                    if level % 3 != 0 {
                        assert!(g.coeff(i).sign() != num_bigint::Sign::Minus);
                    }
                }
            }
        }
    }

    #[test]
    fn named_products() {
        assert_eq!(
            named_product("rr1", 7).unwrap(),
            QSeries::from_i64s(&[1, 1, 1, 1, 2, 2, 3])
        );
        assert_eq!(named_product("ag(2,2)", 60).unwrap(), named_product("rr1", 60).unwrap());
        assert_eq!(named_product("ag(2,1)", 60).unwrap(), named_product("rr2", 60).unwrap());
        assert_eq!(named_product("asw7", 5).unwrap().coeff(0), &BigInt::from(1));
        assert!(named_product("nope", 5).is_err());
        assert!(named_product("ag(1,1)", 5).is_err());
        assert_eq!(
            named_product("prod410", 50).unwrap(),
            named_product("prod401", 50).unwrap()
        );
    }

    #[test]
    fn rr1_matches_brute_force() {
        let s = named_product("rr1", 30).unwrap();
        let parts = residue_parts(&[1, 4], 5, 30);
        for n in 0..30 {
            assert_eq!(s.coeff(n), &BigInt::from(count_colored_partitions(n, &parts)));
        }
    }
}
