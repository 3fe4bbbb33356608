use super::*;
use crate::algebra::FpPolynomial;
use proptest::prelude::*;

fn gauss(re: i64, im: i64) -> GaussianInteger {
    GaussianInteger::from_i64(re, im)
}

fn poly3(coeffs: &[u64]) -> FpPolynomial {
    FpPolynomial::new(3, coeffs)
}

fn poly2(coeffs: &[u64]) -> FpPolynomial {
    FpPolynomial::new(2, coeffs)
}

#[test]
fn gaussian_stream_matches_the_split_prime_table() {
    let records = gaussian_split_primes(10);
    let primes: Vec<u64> = records.iter().map(|r| r.base).collect();
    assert_eq!(primes, vec![5, 13, 17, 29, 37, 41, 53, 61, 73, 89]);
    assert_eq!(records[0].factor, gauss(2, 1));
    assert_eq!(records[1].factor, gauss(3, 2));
    assert_eq!(records[2].factor, gauss(4, 1));
    assert!(!primes.contains(&7));
    for record in &records {
        assert_eq!(record.product(), gauss(record.base as i64, 0));
        assert!(record.factor.re() > record.factor.im());
        assert!(record.factor.im() > &num_bigint::BigInt::from(0));
        assert_eq!(record.conjugate, record.factor.conj());
    }
}

#[test]
fn fp_square_stream_over_f3_starts_with_the_known_splits() {
    let records = fp_square_split_polys(3, 6).unwrap();
    // T−1 = T+2 splits as (X−1)(X+1); T and T+1 do not produce records.
    assert_eq!(records[0].base, poly3(&[2, 1]));
    assert_eq!(records[0].factor.0, poly3(&[2, 1]));
    assert_eq!(records[0].conjugate.0, poly3(&[1, 1]));
    // T²+1 splits as (X²+X+2)(X²+2X+2).
    assert_eq!(records[1].base, poly3(&[1, 0, 1]));
    assert_eq!(records[1].factor.0, poly3(&[2, 1, 1]));
    assert_eq!(records[1].conjugate.0, poly3(&[2, 2, 1]));
    for record in &records {
        assert!(record.base.is_irreducible());
        assert_ne!(record.base, poly3(&[1, 1]), "T+1 is inert over F_3");
        let x_squared = poly3(&[0, 0, 1]);
        assert_eq!(record.product().0, record.base.compose(&x_squared));
        assert_eq!(record.conjugate.0, record.factor.0.substitute_neg_x().monic());
    }
}

#[test]
fn fp_square_stream_rejects_two_and_composites() {
    assert!(matches!(
        fp_square_split_polys(2, 1),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        fp_square_split_polys(9, 1),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn artin_schreier_stream_starts_at_t_and_skips_degree_two() {
    let records = f2_artin_schreier_split_polys(10);
    assert_eq!(records[0].base, poly2(&[0, 1]));
    assert_eq!(records[0].factor.0, poly2(&[0, 1]));
    assert_eq!(records[0].conjugate.0, poly2(&[1, 1]));
    // T+1 is inert (X²+X+1 irreducible) and the only quadratic T²+T+1 is
    // inert as well, so the second record is the first split cubic.
    assert_eq!(records[1].base, poly2(&[1, 1, 0, 1]));
    assert_eq!(records[1].factor.0, poly2(&[1, 1, 0, 1]));
    assert_eq!(records[1].conjugate.0, poly2(&[1, 0, 1, 1]));
    let inner = poly2(&[0, 1, 1]);
    for record in &records {
        assert_ne!(record.base.degree(), Some(2));
        assert_eq!(record.product().0, record.base.compose(&inner));
        let shifted = record.factor.conj();
        assert_eq!(shifted, record.conjugate);
    }
}

#[test]
fn valuations_match_hand_checks() {
    let five = gauss(5, 0);
    let r = gauss(2, 1);
    assert_eq!(valuation(&five, &r).unwrap(), 1);
    assert_eq!(valuation(&five, &r.conj()).unwrap(), 1);
    assert_eq!(valuation(&r, &r.conj()).unwrap(), 0);

    let x_minus_one = SquareConjPoly(poly3(&[2, 1]));
    let squared = x_minus_one.ring_mul(&x_minus_one);
    assert_eq!(valuation(&squared, &x_minus_one).unwrap(), 2);

    assert!(valuation(&gauss(0, 0), &r).is_err());
    assert!(valuation(&five, &gauss(1, 0)).is_err());
}

#[test]
fn families_use_the_canonical_factors() {
    let fam = build_gaussian_family(2).unwrap();
    assert_eq!(fam.elements, vec![gauss(2, 1), gauss(3, 2)]);
    assert_eq!(fam.case, CaseTag::Gauss);

    let fam3 = build_fp_square_family(3, 2).unwrap();
    assert_eq!(fam3.elements[0].0, poly3(&[2, 1]));
    assert_eq!(fam3.elements[0].to_string(), "X+2");

    assert!(matches!(
        build_gaussian_family(0),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn built_families_satisfy_the_avoidance_pattern() {
    assert!(build_gaussian_family(6).unwrap().satisfies_avoidance().unwrap());
    assert!(build_fp_square_family(3, 6)
        .unwrap()
        .satisfies_avoidance()
        .unwrap());
    assert!(build_fp_square_family(5, 6)
        .unwrap()
        .satisfies_avoidance()
        .unwrap());
    assert!(build_f2_artin_schreier_family(6)
        .unwrap()
        .satisfies_avoidance()
        .unwrap());

    let records = gaussian_split_primes(2);
    let swapped = WitnessFamily::custom(
        CaseTag::Gauss,
        vec![gauss(2, -1), gauss(3, 2)],
        records,
    )
    .unwrap();
    assert!(!swapped.satisfies_avoidance().unwrap());
}

#[test]
fn certificate_is_identity_for_built_families() {
    let fam = build_gaussian_family(4).unwrap();
    let cert = independence_certificate(&fam).unwrap();
    assert_eq!(cert.rank, 4);
    assert!(cert.independent);
    for (i, row) in cert.matrix.iter().enumerate() {
        for (j, &entry) in row.iter().enumerate() {
            assert_eq!(entry, i64::from(i == j));
        }
    }

    let fam3 = build_fp_square_family(3, 4).unwrap();
    let cert3 = independence_certificate(&fam3).unwrap();
    assert!(cert3.independent);
    let fam2 = build_f2_artin_schreier_family(4).unwrap();
    let cert2 = independence_certificate(&fam2).unwrap();
    assert!(cert2.independent);
}

#[test]
fn dependent_families_lose_rank() {
    let records = gaussian_split_primes(2);

    // (2+i, (2+i)²·7): second row is twice the first; 7 is inert and
    // contributes nothing.
    let a2 = gauss(2, 1).mul(&gauss(2, 1)).mul(&gauss(7, 0));
    let fam = WitnessFamily::custom(
        CaseTag::Gauss,
        vec![gauss(2, 1), a2],
        records.clone(),
    )
    .unwrap();
    let cert = independence_certificate(&fam).unwrap();
    assert_eq!(cert.matrix, vec![vec![1, 0], vec![2, 0]]);
    assert_eq!(cert.rank, 1);
    assert!(!cert.independent);

    // The conjugate pair (2+i, 2−i).
    let pair = WitnessFamily::custom(
        CaseTag::Gauss,
        vec![gauss(2, 1), gauss(2, -1)],
        records.clone(),
    )
    .unwrap();
    let cert = independence_certificate(&pair).unwrap();
    assert_eq!(cert.matrix, vec![vec![1, 0], vec![-1, 0]]);
    assert!(!cert.independent);

    // 5 alone is conjugation-symmetric: a zero row, rank 0.
    let base = WitnessFamily::custom(
        CaseTag::Gauss,
        vec![gauss(5, 0)],
        records[..1].to_vec(),
    )
    .unwrap();
    let cert = independence_certificate(&base).unwrap();
    assert_eq!(cert.matrix, vec![vec![0]]);
    assert_eq!(cert.rank, 0);
    assert!(!cert.independent);
}

#[test]
fn oracle_finds_planted_relations_and_clears_independent_families() {
    let fam = build_gaussian_family(2).unwrap();
    assert_eq!(brute_force_relation(&fam, 3).unwrap(), None);

    let records = gaussian_split_primes(2);
    let pair = WitnessFamily::custom(
        CaseTag::Gauss,
        vec![gauss(2, 1), gauss(2, -1)],
        records.clone(),
    )
    .unwrap();
    assert_eq!(brute_force_relation(&pair, 1).unwrap(), Some(vec![1, 1]));

    let base = WitnessFamily::custom(CaseTag::Gauss, vec![gauss(5, 0)], records).unwrap();
    assert_eq!(brute_force_relation(&base, 1).unwrap(), Some(vec![1]));

    // (X+2)(X+1) = X²+2 lies in F_3[X²].
    let poly_pair = WitnessFamily::custom(
        CaseTag::FpSquare(3),
        vec![SquareConjPoly(poly3(&[2, 1])), SquareConjPoly(poly3(&[1, 1]))],
        fp_square_split_polys(3, 2).unwrap(),
    )
    .unwrap();
    assert_eq!(brute_force_relation(&poly_pair, 2).unwrap(), Some(vec![1, 1]));
}

#[test]
fn oracle_budget_is_enforced() {
    let fam = build_gaussian_family(10).unwrap();
    // 7^10 ≈ 2.8·10⁸ tuples is past the default 10⁷ budget.
    assert!(matches!(
        brute_force_relation(&fam, 3),
        Err(Error::BudgetExceeded(_))
    ));
    assert!(matches!(
        brute_force_relation_with_budget(&fam, 1, 1000),
        Err(Error::BudgetExceeded(_))
    ));
}

#[test]
fn certificate_serializes_with_the_documented_keys() {
    let fam = build_gaussian_family(2).unwrap();
    let relation = brute_force_relation(&fam, 2).unwrap();
    let cert = independence_certificate(&fam)
        .unwrap()
        .with_oracle(2, relation);
    let json = serde_json::to_value(&cert).unwrap();
    assert_eq!(json["case"], "GAUSS");
    assert_eq!(json["k"], 2);
    assert_eq!(json["elements"][0], "2+i");
    assert_eq!(json["matrix"][0][0], 1);
    assert_eq!(json["rank"], 2);
    assert_eq!(json["independent"], true);
    assert_eq!(json["oracle"]["bound"], 2);
    assert_eq!(json["oracle"]["relation"], serde_json::Value::Null);

    let bare = independence_certificate(&fam).unwrap();
    let bare_json = serde_json::to_value(&bare).unwrap();
    assert!(bare_json.get("oracle").is_none());

    let back: IndependenceCertificate = serde_json::from_value(json).unwrap();
    assert_eq!(back, cert);
}

#[test]
fn case_tags_round_trip_through_strings() {
    for tag in [CaseTag::Gauss, CaseTag::FpSquare(5), CaseTag::F2ArtinSchreier] {
        let s = tag.to_string();
        assert_eq!(s.parse::<CaseTag>().unwrap(), tag);
    }
    assert!("FP_SQUARE(x)".parse::<CaseTag>().is_err());
    assert!("ELLIPTIC".parse::<CaseTag>().is_err());
}

#[test]
fn square_conjugation_fixes_exactly_the_even_polynomials() {
    // Exhaustive over all coefficient vectors of degree ≤ 10 (p = 3) and
    // degree ≤ 6 (p = 5): f(−X) = f(X) iff every odd coefficient vanishes.
    for (p, max_deg) in [(3u64, 10usize), (5, 6)] {
        let mut count = 0u64;
        let total = (p as u128).pow(max_deg as u32 + 1);
        let mut code = 0u128;
        while code < total {
            let mut digits = Vec::with_capacity(max_deg + 1);
            let mut c = code;
            for _ in 0..=max_deg {
                digits.push((c % p as u128) as u64);
                c /= p as u128;
            }
            let f = FpPolynomial::new(p, &digits);
            let fixed = f.substitute_neg_x() == f;
            let even = digits.iter().skip(1).step_by(2).all(|&d| d == 0);
            assert_eq!(fixed, even, "p={p} coefficients {digits:?}");
            count += u64::from(fixed);
            code += 1;
        }
        assert!(count > 0);
    }
}

/// Membership in `𝔽₂[X²+X]` by greedy division: strip `(X²+X)^m` terms.
fn lies_in_f2_of_x2_plus_x(f: &FpPolynomial) -> bool {
    let y = poly2(&[0, 1, 1]);
    let mut rem = f.clone();
    loop {
        match rem.degree() {
            None | Some(0) => return true,
            Some(d) if d % 2 == 1 => return false,
            Some(d) => {
                rem = rem.sub(&y.pow((d / 2) as u32));
            }
        }
    }
}

#[test]
fn artin_schreier_conjugation_fixes_exactly_the_base_ring() {
    // Exhaustive over all of F_2[X] up to degree 10.
    let x_plus_one = poly2(&[1, 1]);
    for code in 0u64..(1 << 11) {
        let digits: Vec<u64> = (0..11).map(|i| (code >> i) & 1).collect();
        let f = FpPolynomial::new(2, &digits);
        let fixed = f.compose(&x_plus_one) == f;
        assert_eq!(fixed, lies_in_f2_of_x2_plus_x(&f), "coefficients {digits:?}");
    }
}

#[test]
fn torsion_reports_match_the_quotient_orders() {
    let report = torsion_rank_report(3).unwrap();
    assert_eq!(report.quotient_order, 4);
    assert_eq!(report.coset_orders.len(), 4);
    assert!(report.all_torsion);
    assert_eq!(report.rational_rank, 0);

    assert_eq!(torsion_rank_report(2).unwrap().quotient_order, 3);
    assert_eq!(torsion_rank_report(4).unwrap().quotient_order, 5);

    for q in [2u64, 3, 4, 5, 7, 8, 9, 11] {
        let report = torsion_rank_report(q).unwrap();
        assert_eq!(report.quotient_order, q + 1);
        assert!(report.coset_orders.iter().all(|&m| (q + 1) % m == 0));
        assert!(report.coset_orders.contains(&(q + 1)));
    }

    assert!(torsion_rank_report(67).is_err());
    assert!(torsion_rank_report(6).is_err());
}

/// Plants either an independent family or one of five dependent patterns
/// over the first records of a case; returns the family and whether it
/// should be certified independent. All planted relations have exponents
/// within ±2, so a bound-2 oracle must agree with the certificate.
fn planted_family<R: ConjRing>(
    case: CaseTag,
    records: &[SplitPrimeRecord<R>],
    pattern: u8,
    square_mask: u8,
) -> (WitnessFamily<R>, bool) {
    let r = |i: usize| records[i].factor.clone();
    let (elements, independent): (Vec<R>, bool) = match pattern % 6 {
        // Distinct factors, individually squared per mask bit.
        0 => {
            let elements = (0..3)
                .map(|i| {
                    let base = r(i);
                    if square_mask >> i & 1 == 1 {
                        base.ring_mul(&base)
                    } else {
                        base
                    }
                })
                .collect();
            (elements, true)
        }
        // A repeated element: relation (1, −1).
        1 => (vec![r(0), r(0), r(1)], false),
        // A conjugate pair: relation (1, 1).
        2 => (vec![r(0), r(0).conj(), r(1)], false),
        // A base-field element: relation (1).
        3 => (vec![r(0).ring_mul(&r(0).conj()), r(1)], false),
        // Squared conjugates: relation (1, 1) via squares.
        4 => {
            let sq = r(0).ring_mul(&r(0));
            let sq_conj = sq.conj();
            (vec![sq, sq_conj, r(2)], false)
        }
        // Cross products r₁σr₂ and r₂σr₁: relation (1, 1).
        _ => (
            vec![
                r(0).ring_mul(&r(1).conj()),
                r(1).ring_mul(&r(0).conj()),
                r(2),
            ],
            false,
        ),
    };
    let fam = WitnessFamily::custom(case, elements, records.to_vec()).unwrap();
    (fam, independent)
}

fn assert_certificate_and_oracle_agree<R: ConjRing>(
    case: CaseTag,
    records: &[SplitPrimeRecord<R>],
    pattern: u8,
    square_mask: u8,
) {
    let (fam, expect_independent) = planted_family(case, records, pattern, square_mask);
    let cert = independence_certificate(&fam).unwrap();
    let relation = brute_force_relation(&fam, 2).unwrap();
    assert_eq!(cert.independent, expect_independent, "certificate vs plan");
    assert_eq!(
        cert.independent,
        relation.is_none(),
        "certificate vs oracle for pattern {pattern}: relation {relation:?}"
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn certificate_and_oracle_agree_on_planted_families(
        pattern in 0u8..6,
        square_mask in 0u8..8,
    ) {
        let gauss_records = gaussian_split_primes(4);
        assert_certificate_and_oracle_agree(CaseTag::Gauss, &gauss_records, pattern, square_mask);

        let fp_records = fp_square_split_polys(3, 4).unwrap();
        assert_certificate_and_oracle_agree(CaseTag::FpSquare(3), &fp_records, pattern, square_mask);

        let as_records = f2_artin_schreier_split_polys(4);
        assert_certificate_and_oracle_agree(CaseTag::F2ArtinSchreier, &as_records, pattern, square_mask);
    }

    #[test]
    fn conjugation_is_a_ring_involution(
        re1 in -50i64..50, im1 in -50i64..50,
        re2 in -50i64..50, im2 in -50i64..50,
        coeffs1 in proptest::collection::vec(0u64..3, 1..6),
        coeffs2 in proptest::collection::vec(0u64..3, 1..6),
    ) {
        let (a, b) = (gauss(re1, im1), gauss(re2, im2));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));

        let f = SquareConjPoly(poly3(&coeffs1));
        let g = SquareConjPoly(poly3(&coeffs2));
        prop_assert_eq!(f.conj().conj(), f.clone());
        prop_assert_eq!(f.ring_mul(&g).conj(), f.conj().ring_mul(&g.conj()));
        prop_assert_eq!(
            f.0.add(&g.0).substitute_neg_x(),
            f.0.substitute_neg_x().add(&g.0.substitute_neg_x())
        );

        let u = ArtinSchreierPoly(poly2(&coeffs1.iter().map(|&c| c % 2).collect::<Vec<_>>()));
        let v = ArtinSchreierPoly(poly2(&coeffs2.iter().map(|&c| c % 2).collect::<Vec<_>>()));
        prop_assert_eq!(u.conj().conj(), u.clone());
        prop_assert_eq!(u.ring_mul(&v).conj(), u.conj().ring_mul(&v.conj()));
    }

    #[test]
    fn shortcut_product_equality_matches_full_multiplication(
        a in proptest::collection::vec(0u64..3, 1..7),
        b in proptest::collection::vec(0u64..3, 1..7),
        c in proptest::collection::vec(0u64..3, 1..7),
        d in proptest::collection::vec(0u64..3, 1..7),
    ) {
        let (a, b) = (SquareConjPoly(poly3(&a)), SquareConjPoly(poly3(&b)));
        let (c, d) = (SquareConjPoly(poly3(&c)), SquareConjPoly(poly3(&d)));
        let expected = a.ring_mul(&b) == c.ring_mul(&d);
        prop_assert_eq!(SquareConjPoly::products_equal(&a, &b, &c, &d), expected);
    }
}
