use ogf_core::catalog::{catalog_entries, humbert_reduction};
use ogf_core::{catalog_eval, gegenbauer_2f1_crosscheck, x, Assignment, CatalogValue, Params, Polynomial, Rational};

fn at(v: Rational) -> Assignment {
    Assignment::from([(1, v)])
}

fn values(name: &str, params: &Params, n: usize) -> Vec<Polynomial> {
    catalog_eval(name, params, 0..=n)
        .unwrap()
        .iter()
        .map(CatalogValue::as_polynomial)
        .collect()
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

#[test]
fn every_cross_check_agrees_on_its_grid() {
    for entry in catalog_entries() {
        for params in entry.grid() {
            let vals = entry
                .values(&params, 0..=12)
                .unwrap_or_else(|e| panic!("{} {params:?}: {e}", entry.name));
            if !entry.has_cross_check() {
                continue;
            }
            for (n, v) in vals.iter().enumerate() {
                if let Some(expected) = entry.cross_check_value(&params, n as u64).unwrap() {
                    assert_eq!(&expected, v, "{} {params:?} n={n}", entry.name);
                }
            }
        }
    }
}

#[test]
fn errata_corrections_match_references() {
    for entry in catalog_entries().iter().filter(|e| e.erratum.is_some()) {
        let fixed = entry.corrected_values(&Params::new(), 0..=10).unwrap();
        let reference = entry.reference_values(&Params::new(), 0..=10).unwrap().unwrap();
        assert_eq!(fixed, reference, "{}", entry.name);
    }
}

#[test]
fn chebyshev_u_at_one() {
    for (n, u) in values("chebyshev_U", &Params::new(), 12).iter().enumerate() {
        assert_eq!(u.eval(&at(r(1, 1))).unwrap(), Rational::from(n + 1));
    }
}

#[test]
fn triangular_and_binomial_rows() {
    let tri = values("jgonal", &Params::new().with("j", 3), 5);
    assert_eq!(tri, [0, 1, 3, 6, 10, 15].map(Polynomial::from).to_vec());
    for (n, row) in values("binomial_row", &Params::new(), 10).iter().enumerate() {
        assert_eq!(row.eval(&at(r(1, 1))).unwrap(), Rational::from(1u64 << n));
    }
}

#[test]
fn known_rows() {
    let anti = values("antichain", &Params::new(), 4);
    let expected = [vec![1], vec![1, 2], vec![1, 4, 2], vec![1, 6, 8, 2], vec![1, 8, 18, 12, 2]];
    for (got, want) in anti.iter().zip(expected) {
        let want: Vec<Rational> = want.into_iter().map(Rational::from).collect();
        assert_eq!(got, &Polynomial::univariate(1, &want));
    }
    let pad = values("padovan_m", &Params::new(), 10);
    assert_eq!(pad, [0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9].map(Polynomial::from).to_vec());
    let fib3 = values("fibonacci_order_m", &Params::new().with("m", 3), 6);
    assert_eq!(fib3, [1, 1, 2, 4, 7, 13, 24].map(Polynomial::from).to_vec());
    let hex = values("hexagonal_prism", &Params::new(), 4);
    assert_eq!(hex, [0, 1, 14, 57, 148].map(Polynomial::from).to_vec());
    let fib = values("fibonacci_poly", &Params::new(), 7);
    let ones: Vec<Rational> = fib.iter().map(|p| p.eval(&at(r(1, 1))).unwrap()).collect();
    assert_eq!(ones, [0, 1, 1, 2, 3, 5, 8, 13].map(Rational::from).to_vec());
}

#[test]
fn printed_errata_values() {
    let pl = values("pell_lucas", &Params::new(), 5);
    assert_eq!(pl, [2, 0, 2, 2, 4, 6].map(Polynomial::from).to_vec());
    let oct = values("centered_octahedron", &Params::new(), 3);
    assert_eq!(oct, [0, 1, 7, 25].map(Polynomial::from).to_vec());
    let gar = values("rank_garland", &Params::new(), 2);
    assert_eq!(gar[1], &x(1) + &Polynomial::one());
}

#[test]
fn gegenbauer_grid_matches_entry() {
    let points = [r(0, 1), r(1, 1), r(-1, 1), r(1, 3), r(-5, 2)];
    for beta in [r(1, 1), r(1, 2), r(5, 3)] {
        let polys = values("gegenbauer", &Params::new().with("beta", beta.clone()), 8);
        for xv in &points {
            for (n, p) in polys.iter().enumerate() {
                let direct = gegenbauer_2f1_crosscheck(&beta, xv, n as u64).unwrap();
                assert_eq!(direct, p.eval(&at(xv.clone())).unwrap(), "beta={beta} x={xv} n={n}");
            }
        }
    }
}

#[test]
fn humbert_twovar_reduction() {
    for a in 1..=5i64 {
        for beta in 1..=2i64 {
            let tv = Params::new().with("h", beta).with("k", 1).with("m", 1).with("n", a - 1);
            let g = values("twovar_fibonacci_type_higher", &tv, 10);
            let h = values("humbert", &Params::new().with("m", a).with("beta", beta), 10);
            let reduced: Vec<Polynomial> = g.iter().map(|p| humbert_reduction(p, a)).collect();
            assert_eq!(reduced, h, "a={a} beta={beta}");
        }
    }
}
