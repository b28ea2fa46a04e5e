//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use advlin_core::ensembles::{
    bessel_convolve_check, bessel_pmf, empirical_colored_moments, euler_rodrigues, haar_orthogonal,
    hyperspherical_moment, poisson_pmf, sample_ensemble, sample_reflection_char, sample_rotation_char,
    total_variation, uniform_s3, EnsembleSpec, Estimate, Normals, ReflectionGroup, RotationGroup, SeedSpec,
};
use advlin_core::factor::{plu, qr, schur};
use advlin_core::graphs::{component_count_traversal, spanning_tree_bruteforce, spanning_tree_count, Graph};
use advlin_core::jordan::{jordan_expm, jordan_form_exact};
use advlin_core::matcore::{c64, det, det_int, perm_matrix, IntMat, Mat, RatMat};
use advlin_core::partitions::{
    all_partitions, asymptotic_moment, catalan, eval_moment_poly, gram_det_formula, gram_of, lower_factor,
    mobius_matrix, order_matrix, tpi_map, truncated_char_moment, two_row_partitions, weingarten_integral, Category,
    ColoredWord, TwoRowPartition,
};
use advlin_core::polyroots::{discriminant_closed_form, discriminant_exact, solve_cubic, solve_quartic, QPoly};
use advlin_core::spectra::{eigenvalues, eigvalsh, expm, polar, svd};
use advlin_core::structured::{circulant_hadamard_search, hadamard_construct, HadamardSpec};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rng(criterion: u64) -> ChaCha8Rng {
    SeedSpec::new(0xACCE_7000 + criterion).rng(0)
}

fn unit_disk(rng: &mut impl Rng) -> Complex64 {
    let r = rng.random::<f64>().sqrt();
    Complex64::from_polar(r, std::f64::consts::TAU * rng.random::<f64>())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn c1_discriminants() -> Check {
    let mut rng = rng(1);
    for _ in 0..10_000 {
        let deg = rng.random_range(2..=3usize);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.random_range(-9..=9)).collect();
        while c[deg] == 0 {
            c[deg] = rng.random_range(-9..=9);
        }
        let p = QPoly::from_i64(&c);
        let closed = discriminant_closed_form(&p).map_err(|e| e.to_string())?;
        let via_resultant = discriminant_exact(&p).map_err(|e| e.to_string())?;
        ensure(closed == via_resultant, || format!("{c:?}: {closed} vs {via_resultant}"))?;
    }
    Ok("10000 integer polynomials, closed form = resultant form".into())
}

fn c2_cardano() -> Check {
    let mut rng = rng(2);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let (p, q) = (unit_disk(&mut rng), unit_disk(&mut rng));
        for x in solve_cubic(p, q) {
            let r = (x * x * x + 3.0 * p * x + 2.0 * q).norm() / (1.0 + x.norm()).powi(3);
            worst = worst.max(r);
        }
        let r3 = unit_disk(&mut rng);
        for x in solve_quartic(p, q, r3) {
            let v = x.powu(4) + 6.0 * p * x * x + 4.0 * q * x + 3.0 * r3;
            worst = worst.max(v.norm() / (1.0 + x.norm()).powi(4));
        }
    }
    ensure(worst <= 1e-8, || format!("worst scaled residual {worst:e}"))?;
    Ok(format!("1000 cubics + 1000 quartics, worst scaled residual {worst:.1e}"))
}

/// A random `P·J·P⁻¹` with `N ≤ 8`, eigenvalues on a half-integer grid in
/// `[−2, 2]` and an integer `P` with `0 < |det P| ≤ 10⁶`.
fn random_jordan_instance(rng: &mut impl Rng) -> (RatMat, Vec<(BigRational, usize)>) {
    let n = rng.random_range(1..=8usize);
    let mut grid: Vec<i64> = (-4..=4).collect();
    let distinct = rng.random_range(1..=n.min(3));
    let mut values = Vec::new();
    for _ in 0..distinct {
        let i = rng.random_range(0..grid.len());
        values.push(rat(grid.swap_remove(i), 2));
    }
    let mut blocks: Vec<(BigRational, usize)> = Vec::new();
    let mut left = n;
    let mut v = 0;
    while left > 0 {
        let s = rng.random_range(1..=left);
        blocks.push((values[v % values.len()].clone(), s));
        left -= s;
        v += 1;
    }
    let jm = {
        let mats: Vec<RatMat> = blocks
            .iter()
            .map(|(l, s)| {
                RatMat::from_fn(*s, *s, |a, b| {
                    if a == b {
                        l.clone()
                    } else if b == a + 1 {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
            })
            .collect();
        RatMat::block_diag(&mats)
    };
    let p = loop {
        let p = IntMat::from_fn(n, n, |_, _| BigInt::from(rng.random_range(-2..=2i64)));
        let d = det_int(&p).expect("square");
        if !d.is_zero() && d.abs() <= BigInt::from(1_000_000) {
            break p.to_rational();
        }
    };
    let a = &(&p * &jm) * &p.inverse().expect("invertible");
    blocks.sort();
    (a, blocks)
}

fn c3_jordan() -> Check {
    let mut rng = rng(3);
    let (mut worst_res, mut worst_exp): (f64, f64) = (0.0, 0.0);
    for case in 0..500 {
        let (a, expected) = random_jordan_instance(&mut rng);
        let jf = jordan_form_exact(&a).map_err(|e| format!("case {case}: {e}"))?;
        let mut got = jf.blocks.clone();
        got.sort();
        ensure(got == expected, || format!("case {case}: blocks {got:?} vs {expected:?}"))?;
        let af = a.to_complex();
        let fl = jf.to_float();
        worst_res = worst_res.max(fl.relative_residual(&af).map_err(|e| e.to_string())?);
        let e1 = jordan_expm(&fl).map_err(|e| e.to_string())?;
        let e2 = expm(&af).map_err(|e| e.to_string())?;
        worst_exp = worst_exp.max((&e1 - &e2).norm_fro() / e2.norm_fro().max(1.0));
    }
    ensure(worst_res <= 1e-8, || format!("reconstruction residual {worst_res:e}"))?;
    ensure(worst_exp <= 1e-8, || format!("exponential mismatch {worst_exp:e}"))?;
    Ok(format!("500 instances, block multisets exact, residual {worst_res:.1e}, expm gap {worst_exp:.1e}"))
}

fn c4_det_exp() -> Check {
    let mut rng = rng(4);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let n = rng.random_range(1..=8usize);
        let a = Mat::from_fn(n, n, |_, _| unit_disk(&mut rng));
        let lhs = det(&expm(&a).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let rhs = a.trace().exp();
        worst = worst.max((lhs - rhs).norm() / rhs.norm());
    }
    ensure(worst <= 1e-10, || format!("relative error {worst:e}"))?;
    Ok(format!("1000 matrices, worst relative error {worst:.1e}"))
}

fn c5_matrix_tree() -> Check {
    let mut checked = 0usize;
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        let results: Vec<Result<bool, String>> = (0..1u64 << pairs)
            .into_par_iter()
            .map(|mask| {
                let g = Graph::from_edge_mask(n, mask);
                if component_count_traversal(&g) != 1 {
                    return Ok(false);
                }
                let fast = spanning_tree_count(&g);
                let slow = spanning_tree_bruteforce(&g).map_err(|e| e.to_string())?;
                ensure(fast == BigInt::from(slow), || format!("n={n} mask={mask:#x}: {fast} vs {slow}"))?;
                Ok(true)
            })
            .collect();
        for r in results {
            checked += r? as usize;
        }
    }
    for n in 1..=8u32 {
        let count = spanning_tree_count(&Graph::complete(n as usize));
        let expect = if n == 1 { BigInt::one() } else { BigInt::from(n).pow(n - 2) };
        ensure(count == expect, || format!("K_{n}: {count} vs {expect}"))?;
    }
    Ok(format!("{checked} connected labeled graphs on ≤ 6 vertices; K_1…K_8 match N^(N−2)"))
}

fn c6_hadamard() -> Check {
    let mut specs: Vec<HadamardSpec> = (1..=4).map(HadamardSpec::Walsh).collect();
    specs.extend([3, 7, 11, 19, 23].map(HadamardSpec::Paley1));
    specs.extend([5, 13].map(HadamardSpec::Paley2));
    for spec in &specs {
        let h = hadamard_construct(spec).map_err(|e| format!("{spec:?}: {e}"))?;
        let n = h.order() as u32;
        ensure(h.is_hadamard(), || format!("{spec:?} is not Hadamard"))?;
        // |det H| = N^{N/2}, squared to stay in integers for odd N
        let d = h.det();
        ensure(&d * &d == BigInt::from(n).pow(n), || format!("{spec:?}: det {d}"))?;
    }
    let four = circulant_hadamard_search(4).map_err(|e| e.to_string())?.len();
    ensure(four == 8, || format!("{four} circulant solutions at N=4"))?;
    for n in [8, 12, 16, 20] {
        let c = circulant_hadamard_search(n).map_err(|e| e.to_string())?.len();
        ensure(c == 0, || format!("{c} circulant solutions at N={n}"))?;
    }
    Ok(format!("{} constructions exact; circulant counts 8,0,0,0,0", specs.len()))
}

fn c7_lattice() -> Check {
    for k in 1..=5 {
        let parts = all_partitions(k).map_err(|e| e.to_string())?;
        let a = order_matrix(&parts);
        let m = mobius_matrix(k).map_err(|e| e.to_string())?;
        ensure(&m * &a == IntMat::identity(parts.len()), || format!("Möbius inverse fails at k={k}"))?;
        for n in 1..=10u64 {
            let g = gram_of(&parts, n);
            let d = det_int(&g).map_err(|e| e.to_string())?;
            let f = gram_det_formula(k, n).map_err(|e| e.to_string())?;
            ensure(d == f, || format!("det G at k={k}, N={n}: {d} vs {f}"))?;
            let l = lower_factor(k, n).map_err(|e| e.to_string())?;
            ensure(&a * &l == g, || format!("G ≠ A·L at k={k}, N={n}"))?;
        }
    }
    Ok("k ≤ 5, N ≤ 10: M·A = I, det G = ∏ N!/(N−|π|)!, G = A·L".into())
}

fn c8_tpi() -> Check {
    let all: Vec<TwoRowPartition> = (0..=3usize)
        .flat_map(|k| (0..=3 - k).map(move |l| (k, l)))
        .map(|(k, l)| two_row_partitions(k, l))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?
        .into_iter()
        .flatten()
        .collect();
    let mut compositions = 0;
    for n in 2..=4usize {
        let maps: Vec<_> = all.iter().map(|p| tpi_map(p, n)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        for (a, ta) in all.iter().zip(&maps) {
            let adj = tpi_map(&a.adjoint(), n).map_err(|e| e.to_string())?;
            ensure(adj == ta.transpose(), || format!("T_(π*) ≠ T_π* for {a:?}"))?;
            for (b, tb) in all.iter().zip(&maps) {
                let cat = tpi_map(&a.concat(b), n).map_err(|e| e.to_string())?;
                ensure(cat == ta.kron(tb), || format!("T_[πσ] ≠ T_π⊗T_σ for {a:?}, {b:?}"))?;
                if a.upper() == b.lower() {
                    let (comp, c) = a.compose(b).map_err(|e| e.to_string())?;
                    let lhs = ta * tb;
                    let rhs = tpi_map(&comp, n).map_err(|e| e.to_string())?.scale(&(n as i64).pow(c as u32));
                    ensure(lhs == rhs, || format!("composition law fails for {a:?}, {b:?} at N={n}"))?;
                    compositions += 1;
                }
            }
        }
    }
    Ok(format!("{} diagrams, N ∈ {{2,3,4}}: tensor and adjoint laws, {compositions} compositions", all.len()))
}

fn c9_weingarten_mc() -> Check {
    let n = 4usize;
    let seed = SeedSpec::new(0xACCE_7009);
    let samples = 100_000;
    let samples: Vec<[[f64; 4]; 4]> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let o = haar_orthogonal(n, &mut Normals::new(seed.rng(i as u64))).expect("QR");
            std::array::from_fn(|a| std::array::from_fn(|b| o[(a, b)].re))
        })
        .collect();
    let w2 = ColoredWord::white(2);
    let w4 = ColoredWord::white(4);
    let exact = |w: &ColoredWord, i: &[usize], j: &[usize]| -> Result<f64, String> {
        Ok(weingarten_integral(w, n as u64, Category::P2, i, j)
            .map_err(|e| e.to_string())?
            .to_f64()
            .expect("finite"))
    };
    // Haar measure is invariant under row and column permutations, so each
    // degree-4 integral is estimated by averaging its monomial over every
    // placement of the distinct row indices (a, d) and column indices (b, c)
    // inside each sample. Same samples, same target, smaller variance.
    fn placements(u: &[[f64; 4]; 4], f: impl Fn(&[[f64; 4]; 4], usize, usize, usize, usize) -> f64) -> f64 {
        let (mut sum, mut count) = (0.0, 0.0);
        for a in 0..4 {
            for d in (0..4).filter(|&d| d != a) {
                for b in 0..4 {
                    for c in (0..4).filter(|&c| c != b) {
                        sum += f(u, a, b, c, d);
                        count += 1.0;
                    }
                }
            }
        }
        sum / count
    }
    type Monomial = fn(&[[f64; 4]; 4]) -> f64;
    let cases: Vec<(&str, f64, Monomial)> = vec![
        ("u11^2", exact(&w2, &[0, 0], &[0, 0])?, |u| u[0][0].powi(2)),
        ("u11^4", exact(&w4, &[0; 4], &[0; 4])?, |u| placements(u, |u, a, b, _, _| u[a][b].powi(4))),
        ("u11^2 u12^2", exact(&w4, &[0; 4], &[0, 0, 1, 1])?, |u| {
            placements(u, |u, a, b, c, _| (u[a][b] * u[a][c]).powi(2))
        }),
        ("u11^2 u22^2", exact(&w4, &[0, 0, 1, 1], &[0, 0, 1, 1])?, |u| {
            placements(u, |u, a, b, c, d| (u[a][b] * u[d][c]).powi(2))
        }),
        ("u11 u12 u21 u22", exact(&w4, &[0, 0, 1, 1], &[0, 1, 0, 1])?, |u| {
            placements(u, |u, a, b, c, d| u[a][b] * u[a][c] * u[d][b] * u[d][c])
        }),
    ];
    ensure((cases[0].1 - 1.0 / n as f64).abs() < 1e-15, || "∫u11² ≠ 1/N".into())?;
    let mut report = Vec::new();
    for (label, value, f) in &cases {
        let est = Estimate::from_real(&samples.iter().map(f).collect::<Vec<_>>());
        let rel = (est.mean.re - value).abs() / value.abs();
        ensure(rel <= 0.02, || format!("{label}: MC {} vs {value} (rel {rel:.3})", est.mean.re))?;
        report.push(format!("{label} {rel:.1e}"));
    }

    let (big_n, s) = (50usize, 25u64);
    let chars = sample_reflection_char(ReflectionGroup::S, big_n, s as f64 / big_n as f64, seed.child(1), 100_000)
        .map_err(|e| e.to_string())?;
    for k in 1..=3u32 {
        let value = truncated_char_moment(Category::P, k as usize, big_n as u64, s)
            .map_err(|e| e.to_string())?
            .to_f64()
            .expect("finite");
        let est = chars.moment(k, 0);
        ensure(est.agrees_with(value, 3.0), || format!("S_N moment k={k}: MC {est:?} vs {value}"))?;
    }
    Ok(format!("O_4 relative errors [{}]; S_50 truncated moments k ≤ 3 within 3σ", report.join(", ")))
}

fn c10_asymptotics() -> Check {
    let (n, s, t) = (50u64, 25u64, 0.5);
    let mut worst: f64 = 0.0;
    for cat in [Category::P, Category::P2, Category::PEven] {
        for k in 1..=4usize {
            let exact = truncated_char_moment(cat, k, n, s).map_err(|e| e.to_string())?.to_f64().expect("finite");
            let limit = eval_moment_poly(&asymptotic_moment(cat, k).map_err(|e| e.to_string())?, t);
            let err = if limit == 0.0 { exact.abs() } else { (exact - limit).abs() / limit };
            ensure(err <= 0.05, || format!("{cat} k={k}: {exact} vs {limit}"))?;
            worst = worst.max(err);
        }
    }
    Ok(format!("P, P2, P_even, k ≤ 4 at N=50, t=1/2: worst relative error {worst:.3}"))
}

fn c11_limit_laws() -> Check {
    let seed = SeedSpec::new(0xACCE_7011);
    let moments = |spec: EnsembleSpec, count: usize, ks: &[usize], tag: u64| -> Result<Vec<f64>, String> {
        let samples = sample_ensemble(&spec, seed.child(tag), count).map_err(|e| e.to_string())?;
        let words: Vec<ColoredWord> = ks.iter().map(|&k| ColoredWord::white(k)).collect();
        Ok(empirical_colored_moments(&samples, &words, spec.normalization())
            .map_err(|e| e.to_string())?
            .iter()
            .map(|e| e.mean.re)
            .collect())
    };
    let w = moments(EnsembleSpec::Wigner { n: 200, t: 1.0 }, 20, &[2, 4], 0)?;
    ensure((w[0] - 1.0).abs() <= 0.05, || format!("Wigner M2 = {}", w[0]))?;
    ensure((w[1] - 2.0).abs() <= 0.15, || format!("Wigner M4 = {}", w[1]))?;
    let m = moments(EnsembleSpec::Wishart { n: 200, m: 200 }, 20, &[1, 2, 3, 4], 1)?;
    for (k, mk) in (1..=4u32).zip(&m) {
        let c = catalan(k).to_f64().expect("small");
        ensure((mk - c).abs() <= 0.05 * c, || format!("Wishart M{k} = {mk} vs {c}"))?;
    }
    let spec = EnsembleSpec::Wishart { n: 400, m: 200 };
    let samples = sample_ensemble(&spec, seed.child(2), 2).map_err(|e| e.to_string())?;
    let mut zero = 0usize;
    let mut total = 0usize;
    for s in &samples {
        let vals = eigvalsh(&s.scale_real(spec.normalization())).map_err(|e| e.to_string())?;
        let top = vals.last().copied().unwrap_or(0.0);
        zero += vals.iter().filter(|&&x| x.abs() <= 1e-8 * top).count();
        total += vals.len();
    }
    let mass = zero as f64 / total as f64;
    ensure((mass - 0.5).abs() <= 0.05 * 0.5, || format!("atom mass {mass}"))?;
    Ok(format!(
        "Wigner M2={:.3} M4={:.3}; Wishart M1..4={:.3?}; atom at 0 = {mass:.3}",
        w[0], w[1], m
    ))
}

fn c12_character_laws() -> Check {
    let seed = SeedSpec::new(0xACCE_7012);
    let s = sample_reflection_char(ReflectionGroup::S, 200, 1.0, seed, 100_000).map_err(|e| e.to_string())?;
    let emp = s.integer_pmf(0, 6);
    let lim: Vec<f64> = (0..=6).map(|k| poisson_pmf(1.0, k)).collect();
    let tv_s = total_variation(&emp, &lim);
    ensure(tv_s <= 0.01, || format!("S_N vs Poisson(1): TV {tv_s}"))?;
    let mut tvs = Vec::new();
    for (i, t) in [0.5, 1.0].into_iter().enumerate() {
        let h = sample_reflection_char(ReflectionGroup::H, 200, t, seed.child(i as u64), 100_000)
            .map_err(|e| e.to_string())?;
        let emp = h.integer_pmf(-4, 4);
        let lim: Vec<f64> = (-4..=4).map(|k| bessel_pmf(t, k)).collect();
        let tv = total_variation(&emp, &lim);
        ensure(tv <= 0.02, || format!("H_N vs Bessel({t}): TV {tv}"))?;
        tvs.push(tv);
    }
    let sup = bessel_convolve_check(0.5, 0.5, 20);
    ensure(sup <= 1e-6, || format!("Bessel semigroup sup-error {sup:e}"))?;
    Ok(format!("TV S_N {tv_s:.4}, H_N {:.4}/{:.4}; semigroup {sup:.1e}", tvs[0], tvs[1]))
}

fn c13_rotations() -> Check {
    let seed = SeedSpec::new(0xACCE_7013);
    let count = 1_000_000;
    let su2 = sample_rotation_char(RotationGroup::SU2, seed, count);
    let so3 = sample_rotation_char(RotationGroup::SO3, seed.child(1), count);
    let mut worst: f64 = 0.0;
    for k in 1..=4u32 {
        let c = catalan(k).to_f64().expect("small");
        let a = su2.moment(2 * k, 0).mean.re;
        let b = so3.moment(k, 0).mean.re;
        for (label, v) in [("SU2", a), ("SO3", b)] {
            let rel = (v - c).abs() / c;
            ensure(rel <= 0.02, || format!("{label} k={k}: {v} vs C_k = {c}"))?;
            worst = worst.max(rel);
        }
    }
    for k in 0..=6u32 {
        let m = hyperspherical_moment(4, 2 * k as u64).map_err(|e| e.to_string())?;
        let expect = BigRational::new(catalan(k), BigInt::from(4u64.pow(k)));
        ensure(m == expect, || format!("∫a^{} = {m} vs {expect}", 2 * k))?;
    }
    let bad: Vec<String> = (0..count as u64)
        .into_par_iter()
        .filter_map(|i| {
            let u = euler_rodrigues(uniform_s3(&mut Normals::new(seed.rng(i))));
            let orth = (&(&u.adjoint() * &u) - &Mat::identity(3)).norm_max();
            let d = det(&u).expect("square");
            (orth > 1e-10 || (d - 1.0).norm() > 1e-10).then(|| format!("sample {i}: ‖UᵀU − I‖ = {orth:e}, det = {d}"))
        })
        .collect();
    ensure(bad.is_empty(), || bad[0].clone())?;
    Ok(format!("10⁶ samples each, worst relative moment error {worst:.1e}; hyperspherical exact; 10⁶ rotations checked"))
}

fn c14_decompositions() -> Check {
    let mut rng = rng(14);
    let mut worst: f64 = 0.0;
    let mut worst_eig: f64 = 0.0;
    for _ in 0..1000 {
        let n = rng.random_range(1..=10usize);
        let a = Mat::from_fn(n, n, |_, _| c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        let scale = a.norm_fro().max(1.0);
        let e = |x: advlin_core::Error| x.to_string();
        let f = plu(&a).map_err(e)?;
        let pa = &perm_matrix(&f.perm).to_complex() * &a;
        let r_plu = (&pa - &(&f.lower * &f.upper)).norm_fro() / scale;
        let f = qr(&a).map_err(e)?;
        let r_qr = (&a - &(&f.q * &f.r)).norm_fro() / scale;
        let s = schur(&a).map_err(e)?;
        let r_schur = (&a - &(&(&s.q * &s.t) * &s.q.adjoint())).norm_fro() / scale;
        let r_svd = (&a - &svd(&a).map_err(e)?.reconstruct()).norm_fro() / scale;
        let p = polar(&a, 1e-10).map_err(e)?;
        let r_polar = (&a - &(&p.isometry * &p.modulus)).norm_fro() / scale;
        for (label, r) in [("PLU", r_plu), ("QR", r_qr), ("Schur", r_schur), ("SVD", r_svd), ("polar", r_polar)] {
            ensure(r <= 1e-10, || format!("{label} residual {r:e} at N={n}"))?;
            worst = worst.max(r);
        }
        // eigenvalues of the transpose come from an independent Schur run
        let mut others = eigenvalues(&a.transpose()).map_err(e)?;
        for lambda in s.t.diagonal() {
            let (i, d) = others
                .iter()
                .enumerate()
                .map(|(i, z)| (i, (z - lambda).norm()))
                .min_by(|x, y| x.1.total_cmp(&y.1))
                .expect("nonempty");
            ensure(d <= 1e-8 * scale, || format!("Schur diagonal entry {lambda} unmatched ({d:e})"))?;
            worst_eig = worst_eig.max(d);
            others.swap_remove(i);
        }
    }
    Ok(format!("1000 matrices, worst residual {worst:.1e}, worst eigenvalue gap {worst_eig:.1e}"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "exact discriminants", budget: secs(10), run: c1_discriminants },
        Criterion { id: 2, name: "Cardano/quartic residuals", budget: secs(5), run: c2_cardano },
        Criterion { id: 3, name: "Jordan recovery", budget: secs(30), run: c3_jordan },
        Criterion { id: 4, name: "det(e^A) = e^Tr(A)", budget: None, run: c4_det_exp },
        Criterion { id: 5, name: "matrix-tree theorem", budget: secs(120), run: c5_matrix_tree },
        Criterion { id: 6, name: "Hadamard constructions", budget: secs(60), run: c6_hadamard },
        Criterion { id: 7, name: "partition lattice identities", budget: secs(30), run: c7_lattice },
        Criterion { id: 8, name: "T_π categorical laws", budget: secs(30), run: c8_tpi },
        Criterion { id: 9, name: "Weingarten vs Monte Carlo", budget: secs(120), run: c9_weingarten_mc },
        Criterion { id: 10, name: "asymptotic truncated moments", budget: None, run: c10_asymptotics },
        Criterion { id: 11, name: "Wigner/Wishart limit laws", budget: secs(120), run: c11_limit_laws },
        Criterion { id: 12, name: "character laws", budget: secs(120), run: c12_character_laws },
        Criterion { id: 13, name: "SU2/SO3 characters", budget: secs(60), run: c13_rotations },
        Criterion { id: 14, name: "decomposition residuals", budget: None, run: c14_decompositions },
    ];
    let suite = Instant::now();
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.1?}, budget {b:?}")),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        failures += outcome.is_err() as usize;
        println!("{tag} criterion {:>2} ({}) [{elapsed:.2?}]: {detail}", c.id, c.name);
    }
    let total = suite.elapsed();
    let in_time = total <= Duration::from_secs(600);
    println!(
        "{} full suite [{total:.2?}]: {} of {} criteria passed",
        if in_time && failures == 0 { "PASS" } else { "FAIL" },
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 && in_time {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
