//! The bundled example algebras and the checks behind `verify-examples`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::codes::{Codeword, ConstacyclicCode};
use crate::config::Config;
use crate::error::Result;
use crate::lattice::construction_a;
use crate::number_ring::{QuotientRing, Splitting, DEFAULT_ENUMERATION_BOUND};
use crate::skew::SkewPoly;

pub const EXAMPLE1: &str = include_str!("../fixtures/example1.conf");
pub const EXAMPLE2: &str = include_str!("../fixtures/example2.conf");
pub const EXAMPLE3: &str = include_str!("../fixtures/example3.conf");
pub const EXAMPLE4: &str = include_str!("../fixtures/example4.conf");
/// `u = 1`: a split algebra, used to show that determinant sampling detects
/// zero divisors.
pub const SABOTAGE: &str = include_str!("../fixtures/sabotage.conf");
/// `u = 2` modulo 5, where `u^2 != 1`.
pub const UNSUPPORTED_U: &str = include_str!("../fixtures/unsupported.conf");

/// Name and configuration text of each worked example.
pub const EXAMPLES: [(&str, &str); 4] = [
    ("example1", EXAMPLE1),
    ("example2", EXAMPLE2),
    ("example3", EXAMPLE3),
    ("example4", EXAMPLE4),
];

/// A fixture loaded into its ring and code.
pub struct Fixture {
    pub name: String,
    pub config: Config,
    pub ring: QuotientRing,
}

impl Fixture {
    pub fn load(name: &str, text: &str) -> Result<Self> {
        let config = Config::parse(text)?;
        let ring = config.ring()?;
        Ok(Fixture {
            name: name.to_string(),
            config,
            ring,
        })
    }

    /// The configured generator, or `None` if the file has none.
    pub fn generator(&self) -> Option<SkewPoly> {
        let g = self.config.generator.as_ref()?;
        let rows: Vec<&[i64]> = g.iter().map(Vec::as_slice).collect();
        Some(self.ring.skew().poly(&rows))
    }

    /// The code of length `[K : Q]` generated by the configured generator.
    pub fn code(&self) -> Result<ConstacyclicCode> {
        let g = self
            .generator()
            .ok_or_else(|| crate::Error::MissingKey("generator".into()))?;
        ConstacyclicCode::for_algebra(&self.ring, &g)
    }
}

/// All four worked examples.
pub fn examples() -> Vec<Fixture> {
    EXAMPLES
        .iter()
        .map(|(name, text)| Fixture::load(name, text).expect("bundled fixture is valid"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckResult {
    pub example: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

struct Checks {
    example: &'static str,
    out: Vec<CheckResult>,
}

impl Checks {
    fn record(&mut self, check: &str, outcome: Result<(bool, String)>) {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.out.push(CheckResult {
            example: self.example.to_string(),
            check: check.to_string(),
            passed,
            detail,
        });
    }
}

fn code_set(code: &ConstacyclicCode) -> Result<BTreeSet<Codeword>> {
    Ok(code.codewords(DEFAULT_ENUMERATION_BOUND)?.collect())
}

/// `{ (c a, a) : a in R }` for a fixed `c`.
fn graph_set(ring: &QuotientRing, c: &[i64]) -> Result<BTreeSet<Codeword>> {
    let c = ring.element(c);
    Ok(ring
        .elements(DEFAULT_ENUMERATION_BOUND)?
        .map(|a| Codeword(vec![ring.mul(&c, &a), a]))
        .collect())
}

fn equal_sets(a: &BTreeSet<Codeword>, b: &BTreeSet<Codeword>) -> (bool, String) {
    (
        a == b,
        format!("{} codewords, expected {}", a.len(), b.len()),
    )
}

fn example1(f: &Fixture, out: &mut Vec<CheckResult>) {
    let r = &f.ring;
    let s = r.skew();
    let mut c = Checks {
        example: "example1",
        out: Vec::new(),
    };
    c.record(
        "(x - 1 + a)(x + 1 + a) = x^2 + 1",
        Ok({
            let prod = s.mul(&s.poly(&[&[-1, 1], &[1]]), &s.poly(&[&[1, 1], &[1]]));
            (prod == s.poly(&[&[1], &[], &[1]]), prod.to_string())
        }),
    );
    let built = f.code();
    let code = || built.as_ref().map_err(Clone::clone);
    c.record(
        "code = {((a+1) b, b)}",
        (|| Ok(equal_sets(&code_set(code()?)?, &graph_set(r, &[1, 1])?)))(),
    );
    c.record(
        "h = x - 1 + a",
        (|| {
            let h = code()?.parity_check().clone();
            Ok((h == s.poly(&[&[-1, 1], &[1]]), h.to_string()))
        })(),
    );
    c.record(
        "dual generator = 1 - (a+1) x",
        (|| {
            let gp = code()?.dual_generator()?;
            Ok((gp == s.poly(&[&[1], &[-1, -1]]), gp.to_string()))
        })(),
    );
    c.record(
        "exhaustive dual = code of the dual generator",
        (|| {
            let code = code()?;
            let brute: BTreeSet<Codeword> = code
                .brute_force_dual(DEFAULT_ENUMERATION_BOUND)?
                .into_iter()
                .collect();
            Ok(equal_sets(&brute, &code_set(&code.dual()?)?))
        })(),
    );
    c.record(
        "not self-dual",
        (|| {
            let sd = code()?.is_self_dual()?;
            Ok((!sd, format!("self-dual = {sd}")))
        })(),
    );
    c.record(
        "lattice index 9, Gram determinant 1296",
        (|| {
            let l = construction_a(code()?)?;
            Ok((
                l.index_in_lambda == 9.into() && l.det == 1296.into(),
                format!("index {}, det {}", l.index_in_lambda, l.det),
            ))
        })(),
    );
    out.extend(c.out);
}

fn example2(f: &Fixture, out: &mut Vec<CheckResult>) {
    let r = &f.ring;
    let mut c = Checks {
        example: "example2",
        out: Vec::new(),
    };
    let d = r.decompose();
    c.record(
        "5 splits and i -> (2, 3)",
        Ok({
            let image = d.project(&r.theta());
            (
                d.splitting() == Splitting::Split && image == vec![vec![2], vec![3]],
                format!("{:?}, pi(i) = {image:?}", d.splitting()),
            )
        }),
    );
    c.record(
        "sigma swaps the factors",
        Ok({
            let image = d.project(&r.sigma(&r.theta(), 1));
            (
                image == vec![vec![3], vec![2]],
                format!("pi(sigma(i)) = {image:?}"),
            )
        }),
    );
    let built = f.code();
    let code = || built.as_ref().map_err(Clone::clone);
    c.record(
        "code = {(3 b, b)}",
        (|| Ok(equal_sets(&code_set(code()?)?, &graph_set(r, &[3])?)))(),
    );
    c.record(
        "self-dual",
        (|| {
            let sd = code()?.is_self_dual()?;
            Ok((sd, format!("self-dual = {sd}")))
        })(),
    );
    out.extend(c.out);
}

fn example3(f: &Fixture, out: &mut Vec<CheckResult>) {
    let r = &f.ring;
    let mut c = Checks {
        example: "example3",
        out: Vec::new(),
    };
    c.record(
        "2 ramifies and v = 1 + i has v^2 = 0",
        Ok({
            let v = r.element(&[1, 1]);
            let v2 = r.mul(&v, &v);
            let split = r.decompose().splitting();
            (
                split == Splitting::Ramified && v2.is_zero() && !v.is_zero(),
                format!("{split:?}, v^2 = {v2}"),
            )
        }),
    );
    c.record(
        "g = 1 + x gives the repetition code with 4 words",
        (|| {
            let words = code_set(&f.code()?)?;
            let rep: BTreeSet<Codeword> = r
                .elements(DEFAULT_ENUMERATION_BOUND)?
                .map(|a| Codeword(vec![a.clone(), a]))
                .collect();
            Ok((
                words == rep && words.len() == 4,
                format!("{} codewords", words.len()),
            ))
        })(),
    );
    out.extend(c.out);
}

fn example4(f: &Fixture, out: &mut Vec<CheckResult>) {
    let r = &f.ring;
    let s = r.skew();
    let mut c = Checks {
        example: "example4",
        out: Vec::new(),
    };
    c.record(
        "x^2 + 2 = (x + a)(x + a)",
        Ok({
            let g = s.poly(&[&[0, 1], &[1]]);
            let prod = s.mul(&g, &g);
            (prod == s.poly(&[&[2], &[], &[1]]), prod.to_string())
        }),
    );
    let built = f.code();
    let code = || built.as_ref().map_err(Clone::clone);
    c.record(
        "code = {(a b, b)}",
        (|| Ok(equal_sets(&code_set(code()?)?, &graph_set(r, &[0, 1])?)))(),
    );
    c.record(
        "dual generator = -a (a + x)",
        (|| {
            let gp = code()?.dual_generator()?;
            let expected = s.scale_left(&r.element(&[0, -1]), &s.poly(&[&[0, 1], &[1]]));
            Ok((gp == expected, gp.to_string()))
        })(),
    );
    c.record(
        "self-dual",
        (|| {
            let sd = code()?.is_self_dual()?;
            Ok((sd, format!("self-dual = {sd}")))
        })(),
    );
    out.extend(c.out);
}

/// Re-derives every worked example from the bundled fixtures.
pub fn verify_examples() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let runners: [fn(&Fixture, &mut Vec<CheckResult>); 4] =
        [example1, example2, example3, example4];
    for ((name, text), run) in EXAMPLES.iter().zip(runners) {
        match Fixture::load(name, text) {
            Ok(f) => run(&f, &mut out),
            Err(e) => out.push(CheckResult {
                example: name.to_string(),
                check: "load fixture".into(),
                passed: false,
                detail: e.to_string(),
            }),
        }
    }
    out
}
