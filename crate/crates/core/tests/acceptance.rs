//! Acceptance criteria 1-10. Runs as a plain binary so that one verdict line
//! per criterion is always printed.
//!
//! `PASS` means the criterion holds as stated. `FAIL` means it does not hold
//! literally; the accompanying note names the discrepancy and the weaker
//! statement that was checked instead. The process exits non-zero only when a
//! check deviates from the outcome recorded here.

use std::sync::Arc;
use std::time::{Duration, Instant};

use hnash::groebner::{eliminate, is_groebner_basis, is_reduced, GroebnerBasis};
use hnash::hilbert::{graded_dim, local_hilbert, MonomialIdeal};
use hnash::hjac::{self, is_singular, tangent_space};
use hnash::limits::{limit_ideal, u_names, zero_set_planes, ContainmentOracle, Plane};
use hnash::linalg;
use hnash::multiindex::binomial_usize;
use hnash::polynomial::{rat, ratio};
use hnash::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<Verdict, String>;
type Check = fn(&mut Seen) -> Outcome;

enum Verdict {
    Pass(String),
    Fail(String),
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Gröbner bases met along the way, re-verified by criterion 10.
#[derive(Default)]
struct Seen {
    bases: Vec<Arc<GroebnerBasis>>,
}

impl Seen {
    fn grevlex(&mut self, ideal: &Ideal) -> Result<Arc<GroebnerBasis>, String> {
        let gb = ideal
            .groebner(&MonomialOrder::grevlex(ideal.ring().nvars()))
            .map_err(err)?;
        self.bases.push(gb.clone());
        Ok(gb)
    }

    fn equal(&mut self, a: &Ideal, b: &Ideal) -> Result<bool, String> {
        let (ga, gb) = (self.grevlex(a)?, self.grevlex(b)?);
        let eq = ideal_equal(a, b).map_err(err)?;
        debug_assert_eq!(eq, ga.polys() == gb.polys());
        Ok(eq)
    }
}

fn ring(vars: &[&str]) -> Arc<Ring> {
    Ring::new(vars).unwrap()
}

fn poly(r: &Arc<Ring>, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn polys(r: &Arc<Ring>, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| poly(r, s)).collect()
}

fn cusp() -> Polynomial {
    poly(&ring(&["x", "y"]), "x^3 - y^2")
}

fn node() -> Polynomial {
    poly(&ring(&["x", "y"]), "x^3 + x^2 - y^2")
}

fn surface() -> Polynomial {
    poly(&ring(&["x", "y", "z"]), "x*y - z^4")
}

/// Coordinate vector `e_i`, 1-based.
fn unit(len: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![rat(0); len];
    v[i - 1] = rat(1);
    v
}

fn plane(len: usize, support: &[usize]) -> Plane {
    let mut basis: Vec<Vec<Rational>> = support.iter().map(|&i| unit(len, i)).collect();
    linalg::rref(&mut basis);
    Plane { basis }
}

/// Renames `u_i` to `u_{perm[i]}`, both 1-based.
fn relabel(p: &Polynomial, perm: &[usize]) -> Polynomial {
    let map: Vec<usize> = perm.iter().map(|&j| j - 1).collect();
    p.rename_into(p.ring(), &map)
}

/// Indices (1-based) of the minors of lowest order along a curve, with their
/// leading coefficients.
fn curve_limit(
    minors: &[(MinorIndex, Polynomial)],
    curve: &[Polynomial],
) -> Vec<(usize, Rational)> {
    let restricted: Vec<(usize, Polynomial)> = minors
        .iter()
        .enumerate()
        .map(|(i, (_, m))| (i + 1, m.compose(curve).unwrap()))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let order = |p: &Polynomial| {
        p.lowest_homogeneous_component()
            .unwrap()
            .total_degree()
            .unwrap()
    };
    let Some(low) = restricted.iter().map(|(_, p)| order(p)).min() else {
        return Vec::new();
    };
    restricted
        .iter()
        .filter(|(_, p)| order(p) == low)
        .map(|(i, p)| {
            let lead = p.lowest_homogeneous_component().unwrap();
            let coeff = lead.terms().next().unwrap().1.clone();
            (*i, coeff)
        })
        .collect()
}

/// The line through a vector of leading coefficients.
fn line(len: usize, coords: &[(usize, Rational)]) -> Plane {
    let mut v = vec![rat(0); len];
    for (i, c) in coords {
        v[i - 1] = c.clone();
    }
    let mut basis = vec![v];
    linalg::rref(&mut basis);
    Plane { basis }
}

fn matrix_strings(j: &HigherJacobian) -> Vec<Vec<String>> {
    let ord = MonomialOrder::grevlex(j.nvars());
    j.entries()
        .iter()
        .map(|row| row.iter().map(|e| format_polynomial(e, &ord)).collect())
        .collect()
}

fn printed(r: &Arc<Ring>, f: &str, rows: &[&[&str]]) -> Vec<Vec<String>> {
    let ord = MonomialOrder::grevlex(r.nvars());
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|c| format_polynomial(&poly(r, &c.replace('F', &format!("({f})"))), &ord))
                .collect()
        })
        .collect()
}

fn criterion_1(_: &mut Seen) -> Outcome {
    let r2 = ring(&["x", "y"]);
    let r3 = ring(&["x", "y", "z"]);
    let fixtures: Vec<(Polynomial, Vec<Vec<String>>)> = vec![
        (
            cusp(),
            printed(
                &r2,
                "x^3 - y^2",
                &[
                    &["3*x^2", "-2*y", "3*x", "0", "-1"],
                    &["F", "0", "3*x^2", "-2*y", "0"],
                    &["0", "F", "0", "3*x^2", "-2*y"],
                ],
            ),
        ),
        (
            node(),
            printed(
                &r2,
                "x^3 + x^2 - y^2",
                &[
                    &["3*x^2 + 2*x", "-2*y", "3*x + 1", "0", "-1"],
                    &["F", "0", "3*x^2 + 2*x", "-2*y", "0"],
                    &["0", "F", "0", "3*x^2 + 2*x", "-2*y"],
                ],
            ),
        ),
        (
            surface(),
            printed(
                &r3,
                "x*y - z^4",
                &[
                    &["y", "x", "-4*z^3", "0", "1", "0", "0", "0", "-6*z^2"],
                    &["F", "0", "0", "y", "x", "0", "-4*z^3", "0", "0"],
                    &["0", "F", "0", "0", "y", "x", "0", "-4*z^3", "0"],
                    &["0", "0", "F", "0", "0", "0", "y", "x", "-4*z^3"],
                ],
            ),
        ),
    ];
    for (f, expected) in fixtures {
        let t = Instant::now();
        let j = HigherJacobian::build(&f, 2).map_err(err)?;
        ensure(
            matrix_strings(&j) == expected,
            format!("Jac_2({f}) differs"),
        )?;
        ensure(
            t.elapsed() < Duration::from_secs(1),
            "matrix build over 1 s",
        )?;
    }
    Ok(Verdict::Pass("3 matrices equal entry for entry".into()))
}

fn criterion_2(_: &mut Seen) -> Outcome {
    let f = cusp();
    let r = f.ring().clone();
    let minors = hjac::maximal_minors(&f, 2).map_err(err)?;
    ensure(minors.len() == 10, "cusp has 10 minors")?;
    let ff = &f * &f;
    let first = &(&poly(&r, "3*x") * &ff) - &(&poly(&r, "9*x^4") * &f);
    ensure(
        minors[0].0.one_based() == [1, 2, 3] && minors[0].1 == first,
        "u1 minor",
    )?;
    ensure(
        minors[9].0.one_based() == [3, 4, 5] && minors[9].1 == poly(&r, "12*x*y^2 - 9*x^4"),
        "u10 minor",
    )?;
    Ok(Verdict::Pass(
        "u1 = 3xF^2 - 9x^4 F, u10 = 12xy^2 - 9x^4".into(),
    ))
}

/// Computed limit of a plane curve, checked against the reference ideal
/// literally and after relabelling the minors.
struct CurveCase {
    f: Polynomial,
    reference: &'static [&'static str],
    reference_planes: usize,
    /// Curves through the origin, as polynomials in `t`.
    branches: Vec<Vec<&'static str>>,
}

/// Index map from the lexicographic labelling onto the reference labelling.
const RELABEL: [usize; 10] = [8, 9, 10, 1, 2, 4, 3, 5, 6, 7];

fn curve_case(case: CurveCase, seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let result = limit_ideal(
        &case.f,
        2,
        &RationalPoint::origin(2),
        LimitOptions::default(),
    )
    .map_err(err)?;
    let u = result.u_ring.clone();
    let computed = result.ideal();
    let reference = Ideal::new(&u, polys(&u, case.reference)).map_err(err)?;
    let literal = seen.equal(&computed, &reference)?;

    let relabelled = Ideal::new(
        &u,
        result
            .generators
            .iter()
            .map(|g| relabel(g, &RELABEL))
            .collect(),
    )
    .map_err(err)?;
    ensure(
        seen.equal(&relabelled, &reference)?,
        "relabelled ideal differs from reference",
    )?;

    let gb = seen.grevlex(&computed)?;
    let planes = zero_set_planes(gb.polys()).ok_or("zero set not a union of planes")?;
    ensure(
        planes.len() == case.reference_planes,
        format!("{} planes", planes.len()),
    )?;
    ensure(
        planes.iter().all(|p| p.dim() == 1),
        "limit planes are lines",
    )?;

    let oracle = ContainmentOracle::for_result(&result).map_err(err)?;
    ensure(
        oracle.contains_all(&result.generators).map_err(err)?,
        "oracle rejects a generator",
    )?;
    ensure(
        hnash::limits::eliminant_containment(&result).map_err(err)?,
        "eliminant not contained in the graph ideal",
    )?;

    let t = ring(&["t"]);
    for branch in &case.branches {
        let curve = polys(&t, branch);
        let limit = line(10, &curve_limit(&result.minors, &curve));
        ensure(
            planes.contains(&limit),
            format!("curve {branch:?} limit not found"),
        )?;
    }
    ensure(
        start.elapsed() < Duration::from_secs(600),
        "over 10 minutes",
    )?;

    let lines: Vec<String> = planes
        .iter()
        .map(|p| {
            let v: Vec<String> = p.basis[0].iter().map(|c| c.to_string()).collect();
            format!("({})", v.join(","))
        })
        .collect();
    let note = format!(
        "computed {} line(s) [{}]; relabelled ideal equals reference, curve limits agree",
        planes.len(),
        lines.join(", ")
    );
    Ok(if literal {
        Verdict::Pass(note)
    } else {
        Verdict::Fail(format!(
            "not equal under lexicographic minor labels; {note}"
        ))
    })
}

fn criterion_3(seen: &mut Seen) -> Outcome {
    let verdict = curve_case(
        CurveCase {
            f: cusp(),
            reference: &["u1", "u2", "u3", "u4", "u5", "u6^2", "u8", "u9", "u10"],
            reference_planes: 1,
            branches: vec![vec!["t^2", "t^3"]],
        },
        seen,
    )?;
    // Under lexicographic labels the limit is the line e10, not e7.
    let f = cusp();
    let result =
        limit_ideal(&f, 2, &RationalPoint::origin(2), LimitOptions::default()).map_err(err)?;
    let gb = seen.grevlex(&result.ideal())?;
    let planes = zero_set_planes(gb.polys()).ok_or("zero set")?;
    ensure(planes == vec![plane(10, &[10])], "cusp limit is e10")?;
    Ok(verdict)
}

fn criterion_4(seen: &mut Seen) -> Outcome {
    curve_case(
        CurveCase {
            f: node(),
            reference: &[
                "u1 - 2*u7",
                "u2 - u3",
                "u3 - u6",
                "u4 - u5",
                "u5 - 2*u7",
                "u6^2 - 4*u7^2",
                "u8",
                "u9",
                "u10",
            ],
            reference_planes: 2,
            // (t^2 - 1, t^3 - t) near t = 1 and t = -1.
            branches: vec![
                vec!["t^2 + 2*t", "t^3 + 3*t^2 + 2*t"],
                vec!["t^2 - 2*t", "t^3 - 3*t^2 + 2*t"],
            ],
        },
        seen,
    )
}

const SURFACE_REFERENCE: &[&str] = &[
    "u114^2",
    "u115^3",
    "u116^2",
    "u122^2",
    "u124^2",
    "u38*u83",
    "u38*u113",
    "u38*u114",
    "u38*u122",
    "u38*u124",
    "u83*u112",
    "u83*u114",
    "u83*u115",
    "u83*u116",
    "u112*u124",
    "u113*u115^2",
    "u113*u116",
    "u114*u115",
    "u114*u116",
    "u114*u122",
    "u114*u124",
    "u115*u116",
    "u115*u122",
    "u115*u124",
    "u116*u122",
    "u116*u124",
    "u122*u124",
    "u112*u114 + u113*u115",
    "u112*u122 - u113*u114",
    "8*u112*u116 + 3*u115^2",
    "8*u113*u124 + 3*u122^2",
];

fn surface_reference(u: &Arc<Ring>) -> Vec<Polynomial> {
    let linear = (1..=37)
        .chain(39..=82)
        .chain(84..=111)
        .chain(117..=121)
        .chain([123, 125, 126])
        .map(|i| Polynomial::var(u, i - 1));
    linear
        .chain(SURFACE_REFERENCE.iter().map(|s| poly(u, s)))
        .collect()
}

fn criterion_5(seen: &mut Seen) -> Outcome {
    let f = surface();
    let start = Instant::now();
    let minors = hjac::maximal_minors(&f, 2).map_err(err)?;
    ensure(minors.len() == 126, "126 minors")?;
    let u = Ring::new(&u_names(f.ring().vars(), 126)).map_err(err)?;
    let reference = surface_reference(&u);

    let oracle = ContainmentOracle::new(&f, &minors).map_err(err)?;
    let mut rejected = Vec::new();
    for g in &reference {
        if !oracle.contains(g).map_err(err)? {
            rejected.push(g.to_string());
        }
    }
    ensure(
        rejected == ["u122^2"],
        format!("oracle rejects {rejected:?}"),
    )?;
    // The x<->y symmetric counterparts of u115^3 and u113*u115^2.
    let symmetric = polys(&u, &["u122^3", "u112*u122^2"]);
    ensure(
        oracle.contains_all(&symmetric).map_err(err)?,
        "symmetric counterparts rejected",
    )?;
    ensure(
        start.elapsed() < Duration::from_secs(600),
        "oracle over 10 minutes",
    )?;

    let t = ring(&["t"]);
    for (curve, support) in [
        (["t", "t^3", "t"], vec![83]),
        (["t^3", "t", "t"], vec![38]),
        (["t^2", "t^2", "t"], vec![112, 113]),
    ] {
        let hit: Vec<usize> = curve_limit(&minors, &polys(&t, &curve))
            .iter()
            .map(|(i, _)| *i)
            .collect();
        ensure(hit == support, format!("curve {curve:?} hits {hit:?}"))?;
    }

    // Stretch: the full elimination.
    let stretch = Instant::now();
    let result =
        limit_ideal(&f, 2, &RationalPoint::origin(3), LimitOptions::default()).map_err(err)?;
    let computed = result.ideal();
    let printed = Ideal::new(&u, reference.clone()).map_err(err)?;
    ensure(
        !seen.equal(&computed, &printed)?,
        "printed basis unexpectedly equal",
    )?;
    let corrected: Vec<Polynomial> = reference
        .iter()
        .filter(|g| g.to_string() != "u122^2")
        .cloned()
        .chain(symmetric)
        .collect();
    let corrected = Ideal::new(&u, corrected).map_err(err)?;
    ensure(
        seen.equal(&computed, &corrected)?,
        "elimination differs from corrected basis",
    )?;
    let gb = seen.grevlex(&computed)?;
    let mut planes = zero_set_planes(gb.polys()).ok_or("zero set not a union of planes")?;
    planes.sort();
    let mut expected = vec![
        plane(126, &[112, 113]),
        plane(126, &[38, 112]),
        plane(126, &[83, 113]),
    ];
    expected.sort();
    ensure(planes == expected, "three coordinate 2-planes")?;
    ensure(
        stretch.elapsed() < Duration::from_secs(7200),
        "stretch over 2 hours",
    )?;

    Ok(Verdict::Fail(format!(
        "oracle rejects printed generator u122^2 (all {} others accepted); with u122^3, u112*u122^2 in its place \
         the full elimination ({} generators, {:.1} s) is ideal-equal and gives the three planes",
        reference.len() - 1,
        result.generators.len(),
        stretch.elapsed().as_secs_f64()
    )))
}

fn criterion_6(seen: &mut Seen) -> Outcome {
    let r = ring(&["x", "y"]);
    let start = Instant::now();
    for (p, q) in [(2u32, 3u32), (2, 5), (3, 4), (4, 5)] {
        let f = poly(&r, &format!("y^{p} - x^{q}"));
        let nash = hjac::nash_ideal(&f, 2)
            .map_err(err)?
            .extended([f.clone()])
            .map_err(err)?;
        let mut closed = vec![
            format!("x^{}*y^{}", q - 2, 2 * p - 2),
            format!("y^{}", 3 * p - 3),
        ];
        if p > 3 {
            closed.push(format!("x^{}*y^{}", q - 3, 2 * p));
        }
        let mut gens: Vec<Polynomial> = closed.iter().map(|s| poly(&r, s)).collect();
        gens.push(f.clone());
        let expected = Ideal::new(&r, gens).map_err(err)?;
        ensure(seen.equal(&nash, &expected)?, format!("(p,q)=({p},{q})"))?;
    }
    ensure(start.elapsed() < Duration::from_secs(300), "over 5 minutes")?;
    Ok(Verdict::Pass(
        "4 cases ideal-equal to the closed form".into(),
    ))
}

fn criterion_7(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for f in [cusp(), node(), surface()] {
        let r = f.ring().clone();
        let partials: Vec<Polynomial> = (0..r.nvars()).map(|i| f.partial(i)).collect();
        let classical = Ideal::new(
            &r,
            std::iter::once(f.clone()).chain(partials.clone()).collect(),
        )
        .map_err(err)?;
        seen.grevlex(&classical)?;
        for n in 2..=3 {
            let gens = hjac::nash_generators(&f, n).map_err(err)?;
            let with_f = Ideal::new(
                &r,
                std::iter::once(f.clone())
                    .chain(gens.iter().cloned())
                    .collect(),
            )
            .map_err(err)?;
            seen.grevlex(&with_f)?;
            for d in &partials {
                ensure(
                    radical_membership(d, &with_f).map_err(err)?,
                    format!("{d} not in rad(F + J_{n}) for {f}"),
                )?;
            }
            for g in &gens {
                ensure(
                    radical_membership(g, &classical).map_err(err)?,
                    format!("J_{n} generator of {f} off the singular locus"),
                )?;
            }
            cases += 1;
        }
    }
    ensure(
        start.elapsed() < Duration::from_secs(900),
        "over 15 minutes",
    )?;
    Ok(Verdict::Pass(format!(
        "{cases} (F, n) cases, both inclusions"
    )))
}

/// Swaps variable `i` into the first position.
fn swap_first(f: &Polynomial, p: &RationalPoint, i: usize) -> (Polynomial, RationalPoint) {
    let mut map: Vec<usize> = (0..f.nvars()).collect();
    map.swap(0, i);
    let mut coords = p.coords().to_vec();
    coords.swap(0, i);
    (f.rename_into(f.ring(), &map), RationalPoint::new(coords))
}

fn criterion_8(_: &mut Seen) -> Outcome {
    let start = Instant::now();
    let params: Vec<Rational> = (-10..=10)
        .map(rat)
        .chain([ratio(1, 2), ratio(-2, 3), ratio(5, 7)])
        .collect();
    let cusp_points: Vec<RationalPoint> = params
        .iter()
        .map(|t| RationalPoint::new(vec![t * t, t * t * t]))
        .collect();
    let node_points: Vec<RationalPoint> = params
        .iter()
        .map(|t| {
            let x = t * t - rat(1);
            RationalPoint::new(vec![x.clone(), t * &x])
        })
        .collect();
    let mut checked = 0;
    for (f, points) in [(cusp(), cusp_points), (node(), node_points)] {
        for p in &points {
            ensure(
                f.evaluate(p).map_err(err)? == rat(0),
                format!("{p} off the curve"),
            )?;
            let grads: Vec<Rational> = (0..2).map(|i| f.partial(i).evaluate(p).unwrap()).collect();
            let classical = grads.iter().all(|g| *g == rat(0));
            for n in 1..=3u32 {
                ensure(
                    is_singular(&f, n, p).map_err(err)? == classical,
                    format!("{f} n={n} at {p}"),
                )?;
                if classical {
                    continue;
                }
                let big_n = binomial_usize(n as usize + 2, 2);
                let m = binomial_usize(n as usize + 1, 2);
                let kernel = tangent_space(&f, n, p).map_err(err)?;
                ensure(kernel.len() == big_n - m - 1, "tangent space dimension")?;
                let i = grads.iter().position(|g| *g != rat(0)).unwrap();
                let (g, q) = swap_first(&f, p, i);
                let pivot = g.partial(0).evaluate(&q).unwrap();
                let evaluated = HigherJacobian::build(&g, n)
                    .map_err(err)?
                    .evaluate_at(&q)
                    .map_err(err)?;
                let pivots = linalg::echelon_pivots(&evaluated).ok_or("not in row echelon form")?;
                ensure(
                    pivots.len() == m && pivots.iter().all(|c| *c == pivot),
                    "echelon pivots",
                )?;
            }
            checked += 1;
        }
    }
    ensure(start.elapsed() < Duration::from_secs(60), "over 1 minute")?;
    Ok(Verdict::Pass(format!("{checked} points, n = 1..3")))
}

fn criterion_9(_: &mut Seen) -> Outcome {
    let start = Instant::now();
    for f in [cusp(), node(), surface()] {
        let origin = RationalPoint::origin(f.nvars());
        for n in 1..=3 {
            let sum: usize = (1..=n).map(|k| local_hilbert(&f, k).unwrap()).sum();
            let dim = hjac::dim_tn(&f, n, &origin).map_err(err)?;
            ensure(sum == dim, format!("{f} n={n}: {sum} vs {dim}"))?;
        }
    }
    let squares = MonomialIdeal::new(
        2,
        vec![MultiIndex::new(vec![2, 0]), MultiIndex::new(vec![0, 2])],
    )
    .map_err(err)?;
    ensure(
        (3..=10).all(|n| graded_dim(&squares, n) == 0),
        "<x^2, y^2> in high degree",
    )?;

    let strategy = (
        2usize..=4,
        0usize..4,
        prop::collection::vec(prop::collection::vec(0u32..=5, 4), 1..=6),
    );
    let mut runner = TestRunner::new(Config {
        cases: 200,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, |(s, var, raw)| {
            let var = var % s;
            let gens: Vec<MultiIndex> = raw
                .into_iter()
                .map(|mut e| {
                    e.truncate(s);
                    e[var] = e[var].max(1);
                    MultiIndex::new(e)
                })
                .collect();
            let ideal = MonomialIdeal::new(s, gens).unwrap();
            for n in 0..=10u32 {
                prop_assert!(ideal.graded_dim(n) >= binomial_usize(n as usize + s - 2, s - 2));
            }
            Ok(())
        })
        .map_err(err)?;
    ensure(start.elapsed() < Duration::from_secs(60), "over 1 minute")?;
    Ok(Verdict::Pass(
        "3 fixtures x n = 1..3, graded vanishing, 200 random ideals".into(),
    ))
}

fn criterion_10(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let r = ring(&["x", "y", "z"]);
    let twisted = Ideal::new(&r, polys(&r, &["x^2 - y", "x^3 - z"])).map_err(err)?;
    let elim = eliminate(&twisted, &["x"]).map_err(err)?;
    let yz = elim.ring().clone();
    ensure(
        seen.equal(
            &elim,
            &Ideal::new(&yz, vec![poly(&yz, "y^3 - z^2")]).map_err(err)?,
        )?,
        "twisted cubic elimination",
    )?;

    let gens = polys(&r, &["x^2*y - z", "x*y^2 + 3*z^2", "x*z - y^3 + 1"]);
    for ord in [
        MonomialOrder::lex(3),
        MonomialOrder::grlex(3),
        MonomialOrder::grevlex(3),
    ] {
        let base = Ideal::new(&r, gens.clone())
            .map_err(err)?
            .groebner(&ord)
            .map_err(err)?;
        for shift in 1..gens.len() {
            let mut permuted = gens.clone();
            permuted.rotate_left(shift);
            permuted.reverse();
            let other = Ideal::new(&r, permuted)
                .map_err(err)?
                .groebner(&ord)
                .map_err(err)?;
            ensure(
                base.polys() == other.polys(),
                "basis depends on generator order",
            )?;
        }
        seen.bases.push(base);
    }

    for gb in &seen.bases {
        ensure(
            is_groebner_basis(gb.polys(), gb.order()),
            "S-polynomial left a remainder",
        )?;
        ensure(is_reduced(gb.polys(), gb.order()), "basis not reduced")?;
    }
    ensure(start.elapsed() < Duration::from_secs(60), "over 1 minute")?;
    Ok(Verdict::Pass(format!(
        "{} bases verified",
        seen.bases.len()
    )))
}

fn main() {
    // `cargo test` passes harness flags such as `--nocapture`; they are ignored.
    let criteria: [(&str, Check); 10] = [
        ("matrix fixtures", criterion_1),
        ("cusp minors", criterion_2),
        ("cusp limit ideal", criterion_3),
        ("node limit ideal", criterion_4),
        ("xy - z^4 containment and elimination", criterion_5),
        ("Nash ideal family", criterion_6),
        ("singular locus from J_n", criterion_7),
        ("singularity criterion equivalence", criterion_8),
        ("dimension cross-check", criterion_9),
        ("engine self-checks", criterion_10),
    ];
    // Criteria known not to hold literally.
    let expected_fail = [3, 4, 5];
    let mut seen = Seen::default();
    let mut deviations = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let k = k + 1;
        let start = Instant::now();
        let outcome = run(&mut seen);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(Verdict::Pass(note)) => {
                println!("criterion {k:>2} PASS  {name} ({secs:.2} s): {note}");
                if expected_fail.contains(&k) {
                    deviations += 1;
                }
            }
            Ok(Verdict::Fail(note)) => {
                println!("criterion {k:>2} FAIL  {name} ({secs:.2} s): {note}");
                if !expected_fail.contains(&k) {
                    deviations += 1;
                }
            }
            Err(msg) => {
                println!("criterion {k:>2} ERROR {name} ({secs:.2} s): {msg}");
                deviations += 1;
            }
        }
    }
    if deviations > 0 {
        eprintln!("{deviations} criterion outcome(s) differ from the recorded expectation");
        std::process::exit(1);
    }
}
