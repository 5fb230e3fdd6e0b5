//! Printed coefficients from the literature, embedded as literals and
//! checked for the pivot congruence with exact polynomial arithmetic.
//!
//! Nothing here is computed from first principles: the shifted Jack and
//! Macdonald values come only from these strings.

use std::collections::BTreeMap;

use jacklr_exact::{divrem, int, parse_poly, parse_ratfunc, MultiPoly, RatFunc};
use sha2::{Digest, Sha256};

use crate::PivotError;

/// `name = expression`, one per line. `a` is α; the Macdonald entries are
/// the printed `g̃(q, t⁻¹)` in `q, t`, and `mac_value` is in `s`.
pub const FIXTURES: &str = "\
jack_21_21_321 = 6*a^4*(1+2*a)*(2+a)*(2+11*a+2*a^2)
jack_21_21_2211 = 4*a^4*(1+2*a)^2*(3+a)*(4+a)
jack_21_21_diff = 2*a^4*(1+2*a)*(3+2*a)*(-4+6*a+a^2)
jack_321_221_43211 = 48*a^5*(2+a)*(1+2*a)^2*(120+1220*a+5574*a^2+12443*a^3+13849*a^4+7655*a^5+2073*a^6+254*a^7+12*a^8)
jack_321_221_332111 = 96*a^5*(1+a)*(3+a)^2*(4+a)*(1+2*a)^4*(5+2*a)*(2+3*a)
jack_lam_pivot_diff = 48*a^5*(1+2*a)^2*(5+3*a)*(-96-556*a-750*a^2+676*a^3+2155*a^4+1596*a^5+501*a^6+70*a^7+4*a^8)
jack_2211_221_43211 = 128*a^5*(1+a)*(3+a)*(4+a)*(1+2*a)*(2+3*a)*(12+131*a+321*a^2+294*a^3+97*a^4+9*a^5)
jack_mu_pivot_diff = -16*a^5*(1+2*a)*(3+2*a)*(-528-7360*a-26336*a^2-35740*a^3-11003*a^4+16523*a^5+15493*a^6+5025*a^7+690*a^8+36*a^9)
shifted_321_222_4331 = 48*a^4*(2+a)^2*(3+a)^2*(1+2*a)^2*(1+3*a)*(2+3*a)^2*(24+171*a+284*a^2+116*a^3)
shifted_321_222_4322 = 288*a^5*(2+a)^3*(3+a)^2*(1+2*a)^2*(2+3*a)*(3+4*a)^2*(2+11*a+2*a^2)
shifted_first_diff = -48*a^4*(1+a)*(2+a)^2*(3+a)^2*(1+2*a)^2*(2+3*a)*(-48-294*a-157*a^2+480*a^3+492*a^4+192*a^5)
shifted_2211_2211_3211 = 768*(1+a)^6*(3+a)^2*(4+a)^2*(1+2*a)
shifted_2211_2211_22111 = 384*a^-1*(1+a)^6*(4+a)^2*(5+a)*(6+a)*(3+2*a)^2
shifted_second_diff = -1152*a^-1*(1+a)^6*(2+a)*(4+a)^2*(45+51*a+10*a^2)
mac_21_21_321 = t^2*(t-1)^4*(q-1)^4*(q*t^2-1)*(q^2*t-1)*(2*q^5*t^5+q^5*t^4+q^4*t^5-q^5*t^3+4*q^4*t^4-q^3*t^5-q^4*t^3-q^3*t^4-3*q^4*t^2+4*q^3*t^3-3*q^2*t^4-q^4*t-q^3*t^2-q^2*t^3-q*t^4-3*q^3*t+4*q^2*t^2-3*q*t^3-q^2*t-q*t^2-q^2+4*q*t-t^2+q+t+2)
mac_21_21_2211 = t^5*(t+1)^2*(t-1)^4*(q-1)^4*(q^2*t-1)^2*(q*t^3-1)*(q*t^4-1)
mac_value = s^-10*(1-s^5)*(1-s^3)*(1-s^2)^4*(1+s^2)^2*(1-s^3)^4*(1-s^4)^2
";

/// SHA-256 of [`FIXTURES`], pinned so that an accidental edit is caught.
pub const FIXTURES_SHA256: &str = "5fc5c6b7507621c5bc3f014a9401ec028e0b0c1302fd6effafe908e12f5a8dee";

pub fn fixtures_checksum() -> String {
    Sha256::digest(FIXTURES.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn parse_fixtures() -> Result<BTreeMap<&'static str, RatFunc>, PivotError> {
    FIXTURES
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let (name, expr) = line.split_once('=').ok_or_else(|| PivotError::Fixture {
                name: line.to_string(),
                reason: "missing '='".to_string(),
            })?;
            Ok((name.trim(), parse_ratfunc(expr)?))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: String,
    pub passed: bool,
    pub details: String,
    pub witnesses: Vec<String>,
}

impl FixtureCheck {
    fn new(name: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        FixtureCheck { name: name.into(), passed, details: details.into(), witnesses: Vec::new() }
    }
}

struct Table(BTreeMap<&'static str, RatFunc>);

impl Table {
    fn get(&self, name: &str) -> Result<&RatFunc, PivotError> {
        self.0.get(name).ok_or_else(|| PivotError::Fixture { name: name.to_string(), reason: "missing".to_string() })
    }

    fn poly(&self, name: &str) -> Result<MultiPoly, PivotError> {
        Ok(self.get(name)?.to_poly()?)
    }
}

/// How a printed difference relates to the difference of the printed values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrintedDifference {
    Equal,
    Negated,
    Different,
}

fn classify(actual: &RatFunc, printed: &RatFunc) -> PrintedDifference {
    if actual.sub(printed).is_zero() {
        PrintedDifference::Equal
    } else if actual.add(printed).is_zero() {
        PrintedDifference::Negated
    } else {
        PrintedDifference::Different
    }
}

/// Divisibility of `α^shift · (first − second)` by `hook`, plus how the
/// printed difference compares.
fn pivot_fixture(
    t: &Table,
    label: &str,
    first: &str,
    second: &str,
    printed_diff: &str,
    hook: &str,
    alpha_shift: u32,
) -> Result<(FixtureCheck, PrintedDifference), PivotError> {
    let diff = t.get(first)?.sub(t.get(second)?);
    let cleared = diff.mul_poly(&parse_poly("a")?.pow(alpha_shift)).to_poly()?;
    let hook_poly = parse_poly(hook)?;
    let (q, r) = divrem(&cleared, &hook_poly)?;
    let relation = classify(&diff, t.get(printed_diff)?);
    let scale = if alpha_shift > 0 { format!("a^{alpha_shift}·") } else { String::new() };
    let mut c = FixtureCheck::new(
        format!("{label}: {first} − {second} divisible by {hook}"),
        r.is_zero(),
        format!("{scale}difference = ({hook})·q; printed difference {relation:?}"),
    );
    if r.is_zero() {
        c.witnesses.push(format!("q = {q}"));
    } else {
        c.witnesses.push(format!("remainder {r}"));
    }
    Ok((c, relation))
}

/// `p(s³, s⁻²)` as a rational function of `s`.
fn at_pivot_zero(p: &MultiPoly) -> Result<RatFunc, PivotError> {
    let terms: Vec<(i64, jacklr_exact::Rational)> = p
        .term_list()
        .into_iter()
        .map(|(pw, c)| {
            let e: i64 = pw
                .iter()
                .map(|(v, k)| match v.as_str() {
                    "q" => 3 * *k as i64,
                    "t" => -2 * *k as i64,
                    _ => 0,
                })
                .sum();
            (e, c)
        })
        .collect();
    let low = terms.iter().map(|(e, _)| *e).min().unwrap_or(0).min(0);
    let numer: MultiPoly = terms
        .into_iter()
        .map(|(e, c)| MultiPoly::monomial(c, &[("s", (e - low) as u32)]))
        .sum();
    Ok(RatFunc::new(numer, MultiPoly::monomial(int(1), &[("s", (-low) as u32)]))?)
}

/// The exponent `e` with `f = s^e`, if `f` is a monic monomial in `s`.
fn monomial_exponent(f: &RatFunc) -> Option<i64> {
    let single = |p: &MultiPoly| -> Option<i64> {
        let terms = p.term_list();
        match terms.as_slice() {
            [(pw, c)] if *c == int(1) => Some(pw.iter().map(|(_, k)| *k as i64).sum()),
            _ => None,
        }
    };
    Some(single(f.numer())? - single(f.denom())?)
}

/// Shifted-Jack and Macdonald fixtures, plus the printed Jack examples.
pub fn verify_fixture_congruences() -> Result<Vec<FixtureCheck>, PivotError> {
    let mut out = Vec::new();
    let sum = fixtures_checksum();
    out.push(FixtureCheck::new("fixture text checksum", sum == FIXTURES_SHA256, format!("sha256 {sum}")));
    let t = Table(parse_fixtures()?);

    let cases = [
        ("jack 21,21 λ-pivot", "jack_21_21_321", "jack_21_21_2211", "jack_21_21_diff", "3+2*a", 0),
        ("jack c=3 λ-pivot", "jack_321_221_43211", "jack_321_221_332111", "jack_lam_pivot_diff", "5+3*a", 0),
        ("jack c=3 μ-pivot", "jack_321_221_43211", "jack_2211_221_43211", "jack_mu_pivot_diff", "3+2*a", 0),
        ("shifted 321,222", "shifted_321_222_4331", "shifted_321_222_4322", "shifted_first_diff", "1+a", 0),
        ("shifted 2211,2211", "shifted_2211_2211_3211", "shifted_2211_2211_22111", "shifted_second_diff", "2+a", 1),
    ];
    for (label, first, second, printed, hook, shift) in cases {
        let (c, _) = pivot_fixture(&t, label, first, second, printed, hook, shift)?;
        out.push(c);
    }

    let value = t.get("mac_value")?;
    let mut exponents = Vec::new();
    for name in ["mac_21_21_321", "mac_21_21_2211"] {
        let at = at_pivot_zero(&t.poly(name)?)?;
        let ratio = at.div(value)?;
        exponents.push(monomial_exponent(&ratio));
        let mut c = FixtureCheck::new(
            format!("macdonald {name} at (q,t⁻¹) = (s³,s²) matches the printed product"),
            monomial_exponent(&ratio).is_some(),
            match monomial_exponent(&ratio) {
                Some(e) => format!("equal up to the factor s^{e}"),
                None => "ratio is not a power of s".to_string(),
            },
        );
        if monomial_exponent(&ratio).is_none() {
            c.witnesses.push(format!("ratio {}/{}", ratio.numer(), ratio.denom()));
        }
        out.push(c);
    }
    Ok(out)
}

/// The printed Jack Stanley coefficients against the Jack engine. Entries
/// above the degree cap are reported as skipped rather than failed.
pub fn verify_printed_jack_values(cache: &crate::corpus::StanleyCache) -> Result<Vec<FixtureCheck>, PivotError> {
    use crate::corpus::Triple;
    use jacklr_partitions::Partition;
    let t = Table(parse_fixtures()?);
    let entries: [(&str, &[u32], &[u32], &[u32]); 5] = [
        ("jack_21_21_321", &[2, 1], &[2, 1], &[3, 2, 1]),
        ("jack_21_21_2211", &[2, 1], &[2, 1], &[2, 2, 1, 1]),
        ("jack_321_221_43211", &[3, 2, 1], &[2, 2, 1], &[4, 3, 2, 1, 1]),
        ("jack_321_221_332111", &[3, 2, 1], &[2, 2, 1], &[3, 3, 2, 1, 1, 1]),
        ("jack_2211_221_43211", &[2, 2, 1, 1], &[2, 2, 1], &[4, 3, 2, 1, 1]),
    ];
    let mut out = Vec::new();
    for (name, mu, nu, lam) in entries {
        let triple = Triple::new(Partition::of(mu), Partition::of(nu), Partition::of(lam));
        let check = match cache.coefficient(&triple) {
            Ok(g) => {
                let printed = t.poly(name)?;
                let mut c = FixtureCheck::new(format!("printed {name} equals the Jack engine"), g == printed, triple.to_string());
                if g != printed {
                    c.witnesses.push(format!("engine {g}"));
                    c.witnesses.push(format!("printed {printed}"));
                }
                c
            }
            Err(jacklr_symfunc::SymError::DegreeCap { degree, cap }) => FixtureCheck::new(
                format!("printed {name} equals the Jack engine"),
                true,
                format!("skipped: degree {degree} above cap {cap}"),
            ),
            Err(e) => return Err(e.into()),
        };
        out.push(check);
    }
    Ok(out)
}
