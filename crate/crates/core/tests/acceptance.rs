//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Run with `cargo test --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewlat::cli::{run, VerifyOutput};
use skewlat::codes::{Codeword, ConstacyclicCode};
use skewlat::fixtures::{Fixture, SABOTAGE};
use skewlat::lattice::{
    construction_a, dual_code_lattice, dual_lattice_inclusion_check, lift_codeword, rho_reduce,
    LatticeBasis, TraceForm,
};
use skewlat::matrix::IntMatrix;
use skewlat::number_ring::{QuotientRing, Splitting, DEFAULT_ENUMERATION_BOUND};
use skewlat::skew::SkewPoly;
use skewlat::spacetime::{
    coset_decode_label, coset_encode, matrix_rep, min_det_sample, sample_offsets, SampleMode,
    SampleOptions,
};

const PAIRS: usize = 1000;
const SEED: u64 = 0x5eed;
const BOUND: u128 = DEFAULT_ENUMERATION_BOUND;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e2s<T>(r: skewlat::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("{} ({})", e, e.code()))
}

fn code_set(code: &ConstacyclicCode) -> Result<BTreeSet<Codeword>, String> {
    Ok(e2s(code.codewords(BOUND))?.collect())
}

fn graph(ring: &QuotientRing, c: &RingConst) -> BTreeSet<Codeword> {
    let c = ring.element(c);
    (0..ring.size())
        .map(|i| {
            let a = ring.element_at(i);
            Codeword(vec![ring.mul(&c, &a), a])
        })
        .collect()
}

type RingConst = [i64];

fn fixtures() -> Vec<Fixture> {
    common::fixtures()
}

/// The `verify-examples` checks for one example, run through the CLI.
fn cli_checks(example: &str) -> Result<usize, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["skewlat", "verify-examples", "--json"], &mut out, &mut err);
    let v: VerifyOutput = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let mine: Vec<_> = v.checks.iter().filter(|c| c.example == example).collect();
    if let Some(bad) = mine.iter().find(|c| !c.passed) {
        return Err(format!(
            "verify-examples: {} failed: {}",
            bad.check, bad.detail
        ));
    }
    ensure(
        code == 0 && !mine.is_empty(),
        format!("verify-examples exit {code}"),
    )?;
    Ok(mine.len())
}

fn criterion_1() -> Check {
    let n_checks = cli_checks("example1")?;
    let f = &fixtures()[0];
    let r = &f.ring;
    let s = r.skew();
    let lhs = s.mul(&s.poly(&[&[-1, 1], &[1]]), &s.poly(&[&[1, 1], &[1]]));
    ensure(
        lhs == s.poly(&[&[1], &[], &[1]]),
        format!("(x-1+a)(x+1+a) = {lhs}"),
    )?;
    let code = e2s(f.code())?;
    let words = code_set(&code)?;
    ensure(
        words.len() == 9 && words == graph(r, &[1, 1]),
        "code is not {((a+1)b, b)}",
    )?;
    ensure(
        *code.parity_check() == s.poly(&[&[-1, 1], &[1]]),
        format!("h = {}", code.parity_check()),
    )?;
    let gp = e2s(code.dual_generator())?;
    ensure(
        gp == s.poly(&[&[1], &[-1, -1]]),
        format!("dual generator = {gp}"),
    )?;
    let brute: BTreeSet<Codeword> = e2s(code.brute_force_dual(BOUND))?.into_iter().collect();
    let dual = code_set(&e2s(code.dual())?)?;
    ensure(
        brute == dual,
        "exhaustive dual differs from the dual generator's code",
    )?;
    Ok(format!(
        "9 codewords, h = {}, dual generator = {gp}, {} CLI checks",
        code.parity_check(),
        n_checks
    ))
}

fn criterion_2() -> Check {
    let n_checks = cli_checks("example2")?;
    let f = &fixtures()[1];
    let r = &f.ring;
    let d = r.decompose();
    let image = d.project(&r.theta());
    ensure(
        d.splitting() == Splitting::Split,
        format!("{:?}", d.splitting()),
    )?;
    ensure(
        image == vec![vec![2], vec![3]],
        format!("pi(i) = {image:?}"),
    )?;
    let code = e2s(f.code())?;
    ensure(code_set(&code)? == graph(r, &[3]), "code is not {(3a, a)}")?;
    ensure(e2s(code.is_self_dual())?, "not self-dual")?;
    Ok(format!(
        "pi(i) = (2, 3), 25 codewords, self-dual, {n_checks} CLI checks"
    ))
}

fn criterion_3() -> Check {
    let n_checks = cli_checks("example3")?;
    let f = &fixtures()[2];
    let r = &f.ring;
    let v = r.element(&[1, 1]);
    ensure(!v.is_zero() && r.mul(&v, &v).is_zero(), "v^2 != 0")?;
    ensure(r.size() == 4, format!("|R| = {}", r.size()))?;
    let code = e2s(f.code())?;
    let words = code_set(&code)?;
    let rep: BTreeSet<Codeword> = (0..4)
        .map(|i| Codeword(vec![r.element_at(i), r.element_at(i)]))
        .collect();
    ensure(
        words == rep,
        format!("{} codewords, not the repetition code", words.len()),
    )?;
    Ok(format!(
        "v^2 = 0, repetition code with {} codewords, {n_checks} CLI checks",
        words.len()
    ))
}

fn criterion_4() -> Check {
    let n_checks = cli_checks("example4")?;
    let f = &fixtures()[3];
    let r = &f.ring;
    let s = r.skew();
    let g = s.poly(&[&[0, 1], &[1]]);
    ensure(
        s.mul(&g, &g) == s.poly(&[&[2], &[], &[1]]),
        "(x+a)^2 != x^2 + 2",
    )?;
    let code = e2s(f.code())?;
    ensure(
        code_set(&code)? == graph(r, &[0, 1]),
        "code is not {(a b, b)}",
    )?;
    let gp = e2s(code.dual_generator())?;
    let expected = s.scale_left(&r.element(&[0, -1]), &g);
    ensure(gp == expected, format!("dual generator {gp} != -a(a + x)"))?;
    ensure(e2s(code.is_self_dual())?, "not self-dual")?;
    Ok(format!(
        "dual generator = {gp} = -a(a+x), self-dual, {n_checks} CLI checks"
    ))
}

fn criterion_5() -> Check {
    let mut summary = Vec::new();
    for f in fixtures() {
        let r = &f.ring;
        let s = r.skew();
        let n = r.degree();
        let u = r.from_int(r.spec().u);
        let target = s.central(n, &u);
        let divisors = e2s(s.monic_right_divisors(n, &u, 1, BOUND))?;
        ensure(
            !divisors.is_empty(),
            format!("{}: no degree-1 divisors", f.name),
        )?;
        for g in &divisors {
            let code = e2s(ConstacyclicCode::for_algebra(r, g))?;
            let h = code.parity_check();
            ensure(
                s.mul(g, h) == target && s.mul(h, g) == target,
                format!("{}: g h or h g != x^n - u for g = {g}", f.name),
            )?;
            let words = code_set(&code)?;
            for idx in 0..e2s(r.tuple_count(n, BOUND))? {
                let v = Codeword(r.tuple_at(idx, n));
                ensure(
                    e2s(code.contains(&v))? == words.contains(&v),
                    format!("{}: membership disagrees for g = {g}", f.name),
                )?;
            }
        }
        summary.push(format!("{}: {}", f.name, divisors.len()));
    }
    Ok(format!("degree-1 divisors {}", summary.join(", ")))
}

fn division_run(
    f: &Fixture,
    seed: u64,
) -> Result<Vec<(SkewPoly, SkewPoly, SkewPoly, SkewPoly)>, String> {
    let r = &f.ring;
    let s = r.skew();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(PAIRS);
    for _ in 0..PAIRS {
        let len = rng.gen_range(0..=7);
        let dg = rng.gen_range(0..=3);
        let num = common::poly(r, len, &mut rng);
        let den = common::divisor(r, dg, &mut rng);
        let (qr, rr) = e2s(s.right_divide(&num, &den))?;
        ensure(
            s.add(&s.mul(&qr, &den), &rr) == num,
            format!("{}: f != q g + r", f.name),
        )?;
        ensure(
            common::deg(&rr) < dg as i64,
            format!("{}: deg r >= deg g (right)", f.name),
        )?;
        let (ql, rl) = e2s(s.left_divide(&num, &den))?;
        ensure(
            s.add(&s.mul(&den, &ql), &rl) == num,
            format!("{}: f != g q + r", f.name),
        )?;
        ensure(
            common::deg(&rl) < dg as i64,
            format!("{}: deg r >= deg g (left)", f.name),
        )?;
        out.push((qr, rr, ql, rl));
    }
    Ok(out)
}

fn criterion_6() -> Check {
    for f in fixtures() {
        let first = division_run(&f, SEED)?;
        let again = division_run(&f, SEED)?;
        ensure(first == again, format!("{}: repeated run differs", f.name))?;
    }
    Ok(format!(
        "{PAIRS} pairs per fixture, right and left, repeat runs identical"
    ))
}

fn criterion_7() -> Check {
    for f in fixtures() {
        let r = &f.ring;
        let s = r.skew();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
        for _ in 0..PAIRS {
            let a = common::poly(r, rng.gen_range(0..=5), &mut rng);
            let b = common::poly(r, rng.gen_range(0..=5), &mut rng);
            ensure(
                s.theta(&s.mul(&a, &b)) == s.theta_mul(&s.theta(&b), &s.theta(&a)),
                format!(
                    "{}: theta(fg) != theta(g) theta(f) for f = {a}, g = {b}",
                    f.name
                ),
            )?;
        }
    }
    Ok(format!("{PAIRS} pairs per fixture"))
}

fn criterion_8() -> Check {
    let mut parts = Vec::new();
    for f in [&fixtures()[0], &fixtures()[3]] {
        let r = &f.ring;
        let code = e2s(f.code())?;
        let (n, k) = (r.degree() as u32, code.dimension() as u32);
        let p = BigInt::from(r.p());
        let l = e2s(construction_a(&code))?;
        let form = TraceForm::standard(r);
        let lambda = e2s(LatticeBasis::lambda(r, &form))?;
        let expected = p.pow(2 * n * (n - k)) * &lambda.det;
        ensure(
            l.det == expected,
            format!("{}: det {} != {}", f.name, l.det, expected),
        )?;
        ensure(
            l.index_in_lambda == p.pow(n * (n - k)),
            format!("{}: index {}", f.name, l.index_in_lambda),
        )?;
        let p_lambda = e2s(LatticeBasis::from_generators(
            r,
            &IntMatrix::scalar((n * n) as usize, &p).columns(),
            &form,
        ))?;
        ensure(
            l.contains_lattice(&p_lambda),
            format!("{}: p Lambda not in L", f.name),
        )?;
        ensure(
            lambda.contains_lattice(&l),
            format!("{}: L not in Lambda", f.name),
        )?;
        parts.push(format!(
            "{}: det {} = {} * {}",
            f.name,
            l.det,
            p.pow(2 * n * (n - k)),
            lambda.det
        ));
    }
    ensure(
        parts[0].contains("det 1296 = 81 * 16"),
        format!("example1 value: {}", parts[0]),
    )?;
    Ok(parts.join("; "))
}

fn criterion_9() -> Check {
    let mut self_dual = Vec::new();
    for f in fixtures() {
        let code = e2s(f.code())?;
        if !e2s(code.is_self_dual())? {
            continue;
        }
        let l = e2s(construction_a(&code))?;
        let ld = e2s(dual_code_lattice(&code, BOUND))?;
        ensure(l == ld, format!("{}: L != L'", f.name))?;
        ensure(
            e2s(dual_lattice_inclusion_check(&code, &code, BOUND))?,
            format!("{}: inclusion false", f.name),
        )?;
        self_dual.push(f.name.clone());
    }
    ensure(
        self_dual.len() >= 2,
        format!("self-dual fixtures: {self_dual:?}"),
    )?;
    let f = &fixtures()[0];
    let code = e2s(f.code())?;
    let dual = e2s(code.dual())?;
    ensure(
        !e2s(dual.contains_code(&code))?,
        "example1: C is contained in its dual",
    )?;
    ensure(
        !e2s(dual_lattice_inclusion_check(&code, &code, BOUND))?,
        "example1: inclusion check returned true",
    )?;
    Ok(format!(
        "L = L' for {}; example1 inclusion correctly false",
        self_dual.join(", ")
    ))
}

fn criterion_10() -> Check {
    let f = &fixtures()[0];
    let r = &f.ring;
    let z = r.integers();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    let (mut forward, mut reversed) = (0, 0);
    for _ in 0..PAIRS {
        let a = common::order_element(2, 9, &mut rng);
        let b = common::order_element(2, 9, &mut rng);
        let mab = matrix_rep(r, &a.mul(&b, r));
        let (ma, mb) = (matrix_rep(r, &a), matrix_rep(r, &b));
        forward += usize::from(mab == ma.mul(z, &mb));
        reversed += usize::from(mab == mb.mul(z, &ma));
    }
    let l = e2s(construction_a(&e2s(f.code())?))?;
    let opts = SampleOptions {
        force_exhaustive: true,
        ..SampleOptions::default()
    };
    let rep = e2s(min_det_sample(r, &l.basis, 1, &opts))?;
    let sab = e2s(Fixture::load("sabotage", SABOTAGE))?;
    let ls = e2s(construction_a(&e2s(sab.code())?))?;
    let rep_sab = e2s(min_det_sample(&sab.ring, &ls.basis, 1, &opts))?;
    let detail = format!(
        "M(ab) = M(a)M(b) on {forward}/{PAIRS} pairs (M(ab) = M(b)M(a) on {reversed}/{PAIRS}); \
         min |N(det)| = {} ({:?}, {} differences); sabotage min = {}",
        rep.min_abs_norm, rep.mode, rep.evaluated, rep_sab.min_abs_norm
    );
    let sampling_ok = rep.mode == SampleMode::Exhaustive
        && rep.min_abs_norm > BigInt::from(0)
        && rep_sab.min_abs_norm == BigInt::from(0);
    if forward == PAIRS && sampling_ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_11() -> Check {
    let mut total = 0;
    for (i, f) in fixtures().into_iter().enumerate() {
        let r = &f.ring;
        let code = e2s(f.code())?;
        let n = r.degree();
        let p = BigInt::from(r.p());
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 11 + i as u64);
        let offsets = sample_offsets(SEED + 100 + i as u64, PAIRS, 5, n * n);
        for off in &offsets {
            let msg: Vec<_> = (0..code.dimension())
                .map(|_| common::element(r, &mut rng))
                .collect();
            let enc = e2s(coset_encode(&code, &msg, off))?;
            let word = e2s(code.encode(&msg))?;
            ensure(
                rho_reduce(r, &enc.point) == word,
                format!("{}: rho(point) != codeword", f.name),
            )?;
            let dec = e2s(coset_decode_label(&code, &enc.point))?;
            ensure(dec == enc, format!("{}: decode(encode) differs", f.name))?;
            let scaled: Vec<BigInt> = off.iter().map(|v| v * &p).collect();
            ensure(
                dec.offset.coords() == scaled,
                format!("{}: offset != p * draw", f.name),
            )?;
            ensure(
                dec.point == lift_codeword(r, &word).add(&dec.offset),
                format!("{}: point != lift + offset", f.name),
            )?;
            total += 1;
        }
    }
    Ok(format!("{total} round trips over 4 fixtures"))
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn main() {
    let secs = |s: u64| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            id: "1",
            title: "example 1 reproduction",
            limit: secs(1),
            run: criterion_1,
        },
        Criterion {
            id: "2",
            title: "example 2 reproduction",
            limit: secs(1),
            run: criterion_2,
        },
        Criterion {
            id: "3",
            title: "example 3 reproduction",
            limit: secs(1),
            run: criterion_3,
        },
        Criterion {
            id: "4",
            title: "example 4 reproduction",
            limit: secs(1),
            run: criterion_4,
        },
        Criterion {
            id: "5",
            title: "divisor and parity-check suite",
            limit: secs(10),
            run: criterion_5,
        },
        Criterion {
            id: "6",
            title: "left and right division laws",
            limit: None,
            run: criterion_6,
        },
        Criterion {
            id: "7",
            title: "theta reverses products",
            limit: None,
            run: criterion_7,
        },
        Criterion {
            id: "8",
            title: "lattice determinant and index law",
            limit: secs(1),
            run: criterion_8,
        },
        Criterion {
            id: "9",
            title: "dual lattice inclusion",
            limit: None,
            run: criterion_9,
        },
        Criterion {
            id: "10",
            title: "space-time homomorphism and min det",
            limit: secs(30),
            run: criterion_10,
        },
        Criterion {
            id: "11",
            title: "coset round trip",
            limit: None,
            run: criterion_11,
        },
    ];
    let mut failed = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let late = c.limit.is_some_and(|l| elapsed > l);
        let (status, detail) = match (&result, late) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => (
                "FAIL",
                format!("{d}; over the {:?} limit", c.limit.unwrap()),
            ),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if status == "FAIL" {
            failed.push(c.id);
        }
        println!(
            "criterion {:>2} {status} [{:>8.3}s] {}: {detail}",
            c.id,
            elapsed.as_secs_f64(),
            c.title
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed.len(),
        criteria.len()
    );
    if !failed.is_empty() {
        println!("acceptance: failed criteria {}", failed.join(", "));
        std::process::exit(1);
    }
}
