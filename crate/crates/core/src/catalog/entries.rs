//! Catalog entries: generator order, weights, relations and expected facts.

use super::{family, int, scalar, Cancellation, CatalogEntry, CenterFact, FactKind, ParamSpec, Params};
use crate::coeff::Field;
use crate::engine::{Presentation, PresentationBuilder};
use crate::error::{Error, Result};

const Q: Field = Field::Rational;
const QP: Field = Field::RationalFunction;
const UC: Cancellation = Cancellation::UniversallyCancellative { generic_only: false };
const UC_GENERIC: Cancellation = Cancellation::UniversallyCancellative { generic_only: true };
const NONE: Cancellation = Cancellation::Unclassified;

fn central(field: Field, params: &[(&'static str, &'static str)], expr: &str) -> CenterFact {
    CenterFact { kind: FactKind::CentralElement(expr.into()), field, params: params.to_vec(), label: expr.into() }
}

fn basis(field: Field, params: &[(&'static str, &'static str)], degree: u32, elems: &[&str]) -> CenterFact {
    CenterFact {
        kind: FactKind::BoundedCenterBasis { degree, basis: elems.iter().map(|s| s.to_string()).collect() },
        field,
        params: params.to_vec(),
        label: format!("{{{}}}", elems.join(", ")),
    }
}

fn trivial(field: Field, params: &[(&'static str, &'static str)], degree: u32) -> CenterFact {
    CenterFact { kind: FactKind::TrivialUpTo(degree), field, params: params.to_vec(), label: "{1}".into() }
}

/// `base` for a single copy, `base{i}` otherwise.
fn ix(base: &str, i: u32, n: u32) -> String {
    if n == 1 {
        base.to_string()
    } else {
        format!("{base}{i}")
    }
}

fn count(p: &Params, default: &str, min: u32) -> Result<u32> {
    let n = p.int("n", default)?;
    if n < min || n > 9 {
        return Err(Error::BadParameter(format!("`n` must lie in {min}..=9, got {n}")));
    }
    Ok(n)
}

/// Value of the indexed slot `key{i}` (or `key{i}{j}`), falling back to the
/// plain slot `key`, then to `default`.
fn indexed(p: &Params, key: &str, suffix: &str, default: &str) -> Result<crate::coeff::FieldElement> {
    let shared = p.raw(key, default).to_string();
    p.nonzero(&format!("{key}{suffix}"), &shared)
}

/// Distinct ratios of consecutive primes for pairwise parameters.
fn prime_ratio(k: usize) -> String {
    const PRIMES: [u32; 40] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
        109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
    ];
    format!("{}/{}", PRIMES[2 * k], PRIMES[2 * k + 1])
}

fn builder(p: &Params, names: Vec<String>) -> PresentationBuilder {
    PresentationBuilder::from_names(p.field, names)
}

fn weyl(p: &Params) -> Result<Presentation> {
    let n = count(p, "1", 1)?;
    let names = (1..=n).flat_map(|i| [ix("t", i, n), ix("x", i, n)]).collect();
    let mut b = builder(p, names);
    for i in 1..=n {
        b.add_rel(&format!("{x}*{t} = {t}*{x} + 1", t = ix("t", i, n), x = ix("x", i, n)))?;
    }
    b.build()
}

fn shift(p: &Params) -> Result<Presentation> {
    let h = p.nonzero("h", "1")?;
    builder(p, vec!["t".into(), "x".into()]).param("h", h).rel("x*t = t*x - h*x")?.build()
}

fn mixed_dh(p: &Params) -> Result<Presentation> {
    let h = p.nonzero("h", "1")?;
    builder(p, vec!["t".into(), "x".into(), "xh".into()])
        .param("h", h)
        .rel("x*t = t*x + 1")?
        .rel("xh*t = t*xh - h*xh")?
        .rel("xh*x = x*xh")?
        .build()
}

fn qdiff_dqh(p: &Params) -> Result<Presentation> {
    let q = p.nonzero("q", "p")?;
    let h = p.scalar("h", "1")?;
    builder(p, vec!["y".into(), "x".into()]).param("q", q).param("h", h).rel("x*y = q*y*x + h")?.build()
}

/// `n` copies of a two-generator relation `rel(t, x)` with a shared `q`.
fn two_gen_family(p: &Params, t: &str, x: &str, q_default: Option<&str>, rel: &str) -> Result<Presentation> {
    let n = count(p, "1", 1)?;
    let names = (1..=n).flat_map(|i| [ix(t, i, n), ix(x, i, n)]).collect();
    let mut b = builder(p, names);
    if let Some(d) = q_default {
        b = b.param("q", p.nonzero("q", d)?);
    }
    for i in 1..=n {
        let text = rel.replace("{t}", &ix(t, i, n)).replace("{x}", &ix(x, i, n));
        b.add_rel(&text)?;
    }
    b.build()
}

fn dilation(p: &Params) -> Result<Presentation> {
    two_gen_family(p, "t", "H", Some("p"), "{x}*{t} = q*{t}*{x}")
}

fn qdifferential(p: &Params) -> Result<Presentation> {
    two_gen_family(p, "t", "D", Some("p"), "{x}*{t} = q*{t}*{x} + 1")
}

fn difference(p: &Params) -> Result<Presentation> {
    two_gen_family(p, "t", "d", None, "{x}*{t} = {t}*{x} + {x} + 1")
}

fn discrete_linear(p: &Params) -> Result<Presentation> {
    two_gen_family(p, "t", "x", None, "{x}*{t} = {t}*{x} + {x}")
}

fn partial_shift(p: &Params) -> Result<Presentation> {
    two_gen_family(p, "t", "E", None, "{x}*{t} = {t}*{x} + {x}")
}

fn additive_weyl(p: &Params) -> Result<Presentation> {
    let n = count(p, "1", 1)?;
    let names = (1..=n).flat_map(|i| [ix("x", i, n), ix("y", i, n)]).collect();
    let mut b = builder(p, names);
    for i in 1..=n {
        let q = indexed(p, "q", &i.to_string(), "p")?;
        let qn = format!("q{i}");
        b = b.param(&qn, q);
        b.add_rel(&format!("{y}*{x} = {qn}*{x}*{y} + 1", x = ix("x", i, n), y = ix("y", i, n)))?;
    }
    b.build()
}

fn operator(p: &Params) -> Result<Presentation> {
    let n = count(p, "1", 1)?;
    let names = (1..=n).flat_map(|i| [ix("x", i, n), ix("y", i, n)]).collect();
    let mut b = builder(p, names);
    for i in 1..=n {
        let s = i.to_string();
        let (qn, dn, an) = (format!("q{i}"), format!("d{i}"), format!("a{i}"));
        b = b
            .param(&qn, indexed(p, "q", &s, "p")?)
            .param(&dn, p.scalar(&dn, p.raw("d", "0"))?)
            .param(&an, p.scalar(&an, p.raw("a", "1"))?);
        b.add_rel(&format!("{y}*{x} = {qn}*{x}*{y} + {dn}*{y} + {an}", x = ix("x", i, n), y = ix("y", i, n)))?;
    }
    b.build()
}

fn multiparam_quantum_space(p: &Params) -> Result<Presentation> {
    let n = count(p, "3", 2)?;
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    let mut b = builder(p, names);
    let mut k = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let key = format!("q{i}{j}");
            b = b.param(&key, p.nonzero(&key, &prime_ratio(k))?);
            b.add_rel(&format!("x{j}*x{i} = {key}*x{i}*x{j}"))?;
            k += 1;
        }
    }
    b.build()
}

fn quantum_plane(p: &Params) -> Result<Presentation> {
    let q = p.nonzero("q", "p")?;
    builder(p, vec!["x".into(), "y".into()]).param("q", q).rel("y*x = q*x*y")?.build()
}

fn jordan_plane(p: &Params) -> Result<Presentation> {
    builder(p, vec!["x".into(), "y".into()]).rel("y*x = x*y - x^2")?.build()
}

fn xyz(p: &Params) -> PresentationBuilder {
    builder(p, vec!["x".into(), "y".into(), "z".into()])
}

fn usl2(p: &Params) -> Result<Presentation> {
    xyz(p).rel("y*x = x*y - z")?.rel("z*x = x*z + 2*x")?.rel("z*y = y*z - 2*y")?.build()
}

fn uso3(p: &Params) -> Result<Presentation> {
    xyz(p).rel("y*x = x*y - z")?.rel("z*x = x*z + y")?.rel("z*y = y*z - x")?.build()
}

fn solvable_lie3(p: &Params) -> Result<Presentation> {
    xyz(p)
        .param("q1", p.scalar("q1", "1")?)
        .param("q2", p.scalar("q2", "2")?)
        .rel("y*x = x*y + q1*y")?
        .rel("z*x = x*z + q2*z")?
        .rel("z*y = y*z")?
        .build()
}

fn uprime_so3(p: &Params) -> Result<Presentation> {
    if !p.field.has_param() {
        return Err(Error::BadParameter(format!("uprime_so3 needs a field with a parameter, got {}", p.field)));
    }
    builder(p, vec!["I1".into(), "I2".into(), "I3".into()])
        .rel("I2*I1 = p^2*I1*I2 - p*I3")?
        .rel("I3*I1 = 1/p^2*I1*I3 + 1/p*I2")?
        .rel("I3*I2 = p^2*I2*I3 - p*I1")?
        .build()
}

fn dispin(p: &Params) -> Result<Presentation> {
    xyz(p).rel("y*x = x*y - x")?.rel("z*x = -x*z + y")?.rel("z*y = y*z - z")?.build()
}

fn woronowicz(p: &Params) -> Result<Presentation> {
    xyz(p)
        .param("q", p.nonzero("q", "p")?)
        .rel("y*x = 1/q^2*x*y - 1/q*z")?
        .rel("z*x = 1/q^4*x*z - (1 + q^2)/q^4*x")?
        .rel("z*y = q^4*y*z + (1 + q^2)*y")?
        .build()
}

/// Names grouped by letter: `x1..xn, y1..yn, z1..zn`.
fn grouped(letters: &[&str], n: u32) -> Vec<String> {
    letters.iter().flat_map(|l| (1..=n).map(move |i| ix(l, i, n))).collect()
}

fn algebra_u(p: &Params) -> Result<Presentation> {
    let n = count(p, "1", 1)?;
    let mut b = builder(p, grouped(&["x", "y", "z"], n)).param("q", p.nonzero("q", "p")?);
    for i in 1..=n {
        let (x, y, z) = (ix("x", i, n), ix("y", i, n), ix("z", i, n));
        b.add_rel(&format!("{y}*{x} = q*{x}*{y}"))?;
        b.add_rel(&format!("{z}*{x} = 1/q*{x}*{z}"))?;
        b.add_rel(&format!("{z}*{y} = q^2*{y}*{z} - q^2*{x}^2"))?;
    }
    b.build()
}

fn qheisenberg(p: &Params) -> Result<Presentation> {
    let n = count(p, "1", 1)?;
    let mut b = builder(p, grouped(&["x", "y", "z"], n)).param("q", p.nonzero("q", "p")?);
    for i in 1..=n {
        let (x, y, z) = (ix("x", i, n), ix("y", i, n), ix("z", i, n));
        b.add_rel(&format!("{y}*{x} = q*{x}*{y}"))?;
        b.add_rel(&format!("{z}*{y} = q*{y}*{z}"))?;
        b.add_rel(&format!("{z}*{x} = 1/q*{x}*{z} + {y}"))?;
    }
    b.build()
}

fn mq2(p: &Params) -> Result<Presentation> {
    builder(p, vec!["u".into(), "v".into(), "x".into(), "y".into()])
        .param("q", p.nonzero("q", "p")?)
        .rel("x*u = q*u*x")?
        .rel("y*u = 1/q*u*y")?
        .rel("v*u = u*v")?
        .rel("x*v = q*v*x")?
        .rel("y*v = 1/q*v*y")?
        .rel("y*x = x*y - (q - 1/q)*u*v")?
        .build()
}

fn qsymplectic(p: &Params) -> Result<Presentation> {
    let n = count(p, "2", 1)?;
    let m = 2 * n;
    let mut b = builder(p, (1..=m).map(|i| format!("x{i}")).collect()).param("q", p.nonzero("q", "p")?);
    let prime = |i: u32| m - i + 1;
    for i in 1..=m {
        for j in i + 1..=m {
            if j != prime(i) {
                b.add_rel(&format!("x{j}*x{i} = q*x{i}*x{j}"))?;
                continue;
            }
            let mut rhs = format!("q^2*x{i}*x{j}");
            for k in 1..i {
                rhs.push_str(&format!(" + (q^2 - 1)*q^{}*x{k}*x{}", i - k, prime(k)));
            }
            b.add_rel(&format!("x{j}*x{i} = {rhs}"))?;
        }
    }
    b.build()
}

/// Order `y1, x1, y2, x2, ...`.
fn weyl_pairs(n: u32) -> Vec<String> {
    (1..=n).flat_map(|i| [format!("y{i}"), format!("x{i}")]).collect()
}

fn pair_default(i: u32, j: u32, n: u32) -> String {
    // Index of (i, j) among pairs i < j in row order.
    let k = (1..i).map(|r| n - r).sum::<u32>() + (j - i - 1);
    prime_ratio(k as usize + 1)
}

fn maltsiniotis_weyl(p: &Params) -> Result<Presentation> {
    let n = count(p, "2", 1)?;
    let mut b = builder(p, weyl_pairs(n));
    for i in 1..=n {
        let l = format!("lambda{i}");
        b = b.param(&l, p.nonzero(&l, &(i + 1).to_string())?);
        for j in i + 1..=n {
            let key = format!("q{i}{j}");
            b = b.param(&key, p.nonzero(&key, &pair_default(i, j, n))?);
        }
    }
    for j in 1..=n {
        for i in 1..j {
            let (q, l) = (format!("q{i}{j}"), format!("lambda{i}"));
            b.add_rel(&format!("y{j}*y{i} = 1/{q}*y{i}*y{j}"))?;
            b.add_rel(&format!("y{j}*x{i} = {q}*x{i}*y{j}"))?;
            b.add_rel(&format!("x{j}*y{i} = {l}*{q}*y{i}*x{j}"))?;
            b.add_rel(&format!("x{j}*x{i} = 1/({l}*{q})*x{i}*x{j}"))?;
        }
        let mut rhs = format!("lambda{j}*y{j}*x{j} + 1");
        for k in 1..j {
            rhs.push_str(&format!(" + (lambda{k} - 1)*y{k}*x{k}"));
        }
        b.add_rel(&format!("x{j}*y{j} = {rhs}"))?;
    }
    b.build()
}

fn multiparam_weyl_sym(p: &Params) -> Result<Presentation> {
    let n = count(p, "2", 1)?;
    let mut b = builder(p, weyl_pairs(n));
    for i in 1..=n {
        let q = format!("q{i}");
        b = b.param(&q, p.nonzero(&q, &(i + 1).to_string())?);
        for j in i + 1..=n {
            let key = format!("g{i}{j}");
            b = b.param(&key, p.nonzero(&key, &pair_default(i, j, n))?);
        }
    }
    for j in 1..=n {
        for i in 1..j {
            let g = format!("g{i}{j}");
            b.add_rel(&format!("y{j}*y{i} = 1/{g}*y{i}*y{j}"))?;
            b.add_rel(&format!("y{j}*x{i} = {g}*x{i}*y{j}"))?;
            b.add_rel(&format!("x{j}*y{i} = {g}*y{i}*x{j}"))?;
            b.add_rel(&format!("x{j}*x{i} = 1/{g}*x{i}*x{j}"))?;
        }
        b.add_rel(&format!("x{j}*y{j} = q{j}*y{j}*x{j} + 1"))?;
    }
    b.build()
}

fn two_var_generic(p: &Params) -> Result<Presentation> {
    builder(p, vec!["x".into(), "y".into()])
        .param("q1", p.nonzero("q1", "p")?)
        .param("q2", p.scalar("q2", "0")?)
        .param("q3", p.scalar("q3", "0")?)
        .param("q4", p.scalar("q4", "1")?)
        .rel("y*x = q1*x*y + q2*x + q3*y + q4")?
        .build()
}

fn quadratic_a1(p: &Params) -> Result<Presentation> {
    let mut b = builder(p, vec!["y".into(), "z".into(), "x".into()]).weights(&[1, 1, 2]);
    for k in ["a2", "a3", "xi1", "xi2", "a5", "a6"] {
        b = b.param(k, p.scalar(k, "1")?);
    }
    b.rel("x*y = y*x - a2*y^2 - a3*y*z - xi1*z^2")?
        .rel("x*z = z*x - xi2*y^2 - a5*y*z - a6*z^2")?
        .rel("z*y = y*z")?
        .build()
}

fn quadratic_a2(p: &Params) -> Result<Presentation> {
    xyz(p)
        .weights(&[1, 4, 2])
        .param("a", p.scalar("a", "1")?)
        .param("b", p.scalar("b", "1")?)
        .param("c", p.scalar("c", "-1")?)
        .rel("y*x = x*y + a*x*z + b*z^2")?
        .rel("z*x = x*z")?
        .rel("z*y = y*z + c*z^2")?
        .build()
}

fn quadratic_a3(p: &Params) -> Result<Presentation> {
    xyz(p)
        .weights(&[2, 1, 1])
        .param("a2", p.scalar("a2", "2")?)
        .param("xi2", p.scalar("xi2", "3")?)
        .rel("y*x = x*y + a2*y^2")?
        .rel("z*x = x*z + xi2*y^2")?
        .rel("z*y = y*z")?
        .build()
}

fn xzy(p: &Params) -> PresentationBuilder {
    builder(p, vec!["x".into(), "z".into(), "y".into()]).weights(&[1, 1, 2])
}

fn conformal(p: &Params) -> Result<Presentation> {
    xzy(p)
        .param("a", p.nonzero("a", "2")?)
        .param("b", p.nonzero("b", "1")?)
        .param("c", p.nonzero("c", "3")?)
        .rel("y*x = c*x*y + b*z^2 + z")?
        .rel("z*x = 1/a*x*z - 1/a*x")?
        .rel("y*z = 1/a*z*y - 1/a*y")?
        .build()
}

fn witten_7param(p: &Params) -> Result<Presentation> {
    const DEFAULTS: [&str; 7] = ["2", "1", "2", "1", "3", "1", "1"];
    let mut b = xzy(p);
    for (k, d) in DEFAULTS.iter().enumerate() {
        let key = format!("xi{}", k + 1);
        let v = if [0, 2, 4].contains(&k) { p.nonzero(&key, d)? } else { p.scalar(&key, d)? };
        b = b.param(&key, v);
    }
    b.rel("z*x = 1/xi1*x*z - xi2/xi1*x")?
        .rel("y*z = 1/xi3*z*y - xi4/xi3*y")?
        .rel("y*x = xi5*x*y + xi6*z^2 + xi7*z")?
        .build()
}

fn diffusion(p: &Params) -> Result<Presentation> {
    let n = count(p, "2", 2)?;
    let names = (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("D{i}"))).collect();
    let mut b = builder(p, names);
    for i in 1..=n {
        for j in i + 1..=n {
            let (cij, cji) = (format!("c{i}{j}"), format!("c{j}{i}"));
            b = b.param(&cij, p.nonzero(&cij, "2")?).param(&cji, p.nonzero(&cji, "3")?);
            b.add_rel(&format!("D{j}*D{i} = {cij}/{cji}*D{i}*D{j} - 1/{cji}*x{j}*D{i} + 1/{cji}*x{i}*D{j}"))?;
        }
    }
    b.build()
}

const C3: Field = Field::Cyclotomic(3);
const C2: Field = Field::Cyclotomic(2);

macro_rules! entry {
    ($id:literal, $params:expr, $field:expr, $desc:literal, $canc:expr, $deg:expr, $build:ident, $facts:expr) => {
        CatalogEntry {
            id: $id,
            params: $params,
            default_field: $field,
            description: $desc,
            cancellation: $canc,
            cancel_degree: $deg,
            builder: $build,
            facts: $facts,
        }
    };
}

const N1: &[ParamSpec] = &[int("n", "1")];
const NQ: &[ParamSpec] = &[int("n", "1"), scalar("q", "p")];

pub(super) static ENTRIES: &[CatalogEntry] = &[
    entry!("weyl", N1, Q, "Weyl algebra A_n: x_i t_i = t_i x_i + 1", UC, 4, weyl, || vec![
        trivial(Q, &[], 4),
        trivial(Q, &[("n", "2")], 3),
    ]),
    entry!("shift", &[scalar("h", "1")], Q, "shift operators S_h: x t = t x - h x", UC, 5, shift, || vec![
        trivial(Q, &[], 5),
    ]),
    entry!("mixed_dh", &[scalar("h", "1")], Q, "mixed algebra D_h: differential and shift operators in t", UC, 4, mixed_dh, || vec![
        trivial(Q, &[], 4),
    ]),
    entry!("qdiff_dqh", &[scalar("q", "p"), scalar("h", "1")], QP, "q-differential operators D_{q,h}: x y = q y x + h", UC_GENERIC, 5, qdiff_dqh, || vec![
        trivial(QP, &[], 5),
        basis(C3, &[], 3, &["1", "y^3", "x^3"]),
    ]),
    entry!("dilation", NQ, QP, "q-dilation operators: H t = q t H", UC_GENERIC, 5, dilation, || vec![
        trivial(QP, &[], 5),
        basis(C3, &[], 3, &["1", "t^3", "H^3"]),
    ]),
    entry!("qdifferential", NQ, QP, "q-differential operators: D t = q t D + 1", UC_GENERIC, 5, qdifferential, || vec![
        trivial(QP, &[], 5),
        basis(C3, &[], 3, &["1", "t^3", "D^3"]),
    ]),
    entry!("difference", N1, Q, "linear partial difference operators: d t = t d + d + 1", UC, 5, difference, || vec![
        trivial(Q, &[], 5),
    ]),
    entry!("discrete_linear", N1, Q, "discrete linear systems: x t = t x + x", UC, 5, discrete_linear, || vec![
        trivial(Q, &[], 5),
    ]),
    entry!("partial_shift", N1, Q, "linear partial shift operators: E t = t E + E", UC, 5, partial_shift, || vec![
        trivial(Q, &[], 5),
    ]),
    entry!("operator", &[int("n", "1"), family("q", "p"), family("d", "0"), family("a", "1")], QP,
        "operator algebra family: y_i x_i = q_i x_i y_i + d_i y_i + a_i", NONE, 4, operator, || vec![
        trivial(QP, &[], 4),
        trivial(QP, &[("d", "2")], 4),
        central(C3, &[("d", "1")], "y^3"),
        central(C3, &[], "y^3"),
        central(C3, &[], "x^3"),
    ]),
    entry!("additive_weyl", &[int("n", "1"), family("q", "p")], QP, "additive analogue of the Weyl algebra: y_i x_i = q_i x_i y_i + 1", UC_GENERIC, 5, additive_weyl, || vec![
        trivial(QP, &[], 5),
        basis(C3, &[], 3, &["1", "x^3", "y^3"]),
        central(C2, &[("n", "2")], "y1^2"),
        central(C2, &[("n", "2")], "x2^2"),
    ]),
    entry!("multiparam_quantum_space", &[int("n", "3"), family("q", "2/3")], Q, "multiparametric quantum space: x_j x_i = q_ij x_i x_j", UC, 4, multiparam_quantum_space, || vec![
        trivial(Q, &[], 4),
    ]),
    entry!("quantum_plane", &[scalar("q", "p")], QP, "quantum plane: y x = q x y", UC_GENERIC, 6, quantum_plane, || vec![
        trivial(QP, &[], 6),
        basis(C2, &[], 2, &["1", "x^2", "y^2"]),
        basis(C3, &[], 3, &["1", "x^3", "y^3"]),
    ]),
    entry!("jordan_plane", &[], Q, "Jordan plane: y x = x y - x^2", UC, 5, jordan_plane, || vec![
        trivial(Q, &[], 5),
    ]),
    entry!("usl2", &[], Q, "enveloping algebra of sl(2)", NONE, 2, usl2, || vec![
        central(Q, &[], "4*x*y + z^2 - 2*z"),
        basis(Q, &[], 2, &["1", "4*x*y + z^2 - 2*z"]),
    ]),
    entry!("uso3", &[], Q, "enveloping algebra of so(3)", NONE, 2, uso3, || vec![
        central(Q, &[], "x^2 + y^2 + z^2"),
        basis(Q, &[], 2, &["1", "x^2 + y^2 + z^2"]),
    ]),
    entry!("solvable_lie3", &[scalar("q1", "1"), scalar("q2", "2")], Q, "enveloping algebra of a solvable three-dimensional Lie algebra", NONE, 4, solvable_lie3, || vec![
        trivial(Q, &[], 4),
        central(Q, &[("q2", "-1")], "y*z"),
    ]),
    entry!("uprime_so3", &[], QP, "nonstandard quantum deformation U'(so(3)) with q = p^2", NONE, 3, uprime_so3, || vec![
        central(QP, &[], "-p*(p^4 - 1)*I1*I2*I3 + p^4*I1^2 + I2^2 + p^4*I3^2"),
    ]),
    entry!("dispin", &[], Q, "dispin algebra U(osp(1,2))", NONE, 4, dispin, || vec![
        central(Q, &[], "4*x^2*z^2 - y^2 - 2*x*z - y"),
    ]),
    entry!("woronowicz", &[scalar("q", "p")], QP, "Woronowicz algebra", UC, 5, woronowicz, || vec![
        trivial(QP, &[], 5),
    ]),
    entry!("algebra_u", NQ, QP, "algebra U: y x = q x y, z x = q^-1 x z, z y = q^2 y z - q^2 x^2", UC_GENERIC, 4, algebra_u, || vec![
        trivial(QP, &[], 4),
        central(C3, &[], "x^3"),
    ]),
    entry!("qheisenberg", NQ, QP, "q-Heisenberg algebra", NONE, 3, qheisenberg, || vec![
        central(QP, &[], "(p^2 - 1)*x*y*z - y^2"),
        central(C3, &[], "x^3"),
        central(C3, &[], "y^3"),
        central(C3, &[], "z^3"),
        central(C3, &[], "(p^2 - 1)*x*y*z - y^2"),
    ]),
    entry!("mq2", &[scalar("q", "p")], QP, "quantum matrix algebra M_q(2)", NONE, 2, mq2, || vec![
        central(QP, &[], "x*y - p*u*v"),
        central(C2, &[], "x^2"),
        central(C2, &[], "y^2"),
        central(C2, &[], "u^2"),
        central(C2, &[], "u*v"),
        central(C2, &[], "v^2"),
    ]),
    entry!("qsymplectic", &[int("n", "2"), scalar("q", "p")], QP, "quantum symplectic space O_q(sp(K^2n))", UC_GENERIC, 3, qsymplectic, || vec![
        trivial(QP, &[], 3),
        central(C3, &[("n", "1")], "x1^3"),
        central(C3, &[("n", "1")], "x2^3"),
        central(C3, &[], "x1^3"),
        central(C3, &[], "x2^3"),
        central(C3, &[], "x3^3"),
        central(C3, &[], "x4^3"),
    ]),
    entry!("maltsiniotis_weyl", &[int("n", "2"), family("q", "5/7"), family("lambda", "2")], Q, "quantum Weyl algebra of Maltsiniotis", UC, 3, maltsiniotis_weyl, || vec![
        trivial(Q, &[], 3),
    ]),
    entry!("multiparam_weyl_sym", &[int("n", "2"), family("q", "2"), family("g", "5/7")], Q, "multiparameter quantized Weyl algebra of symmetric type", UC, 3, multiparam_weyl_sym, || vec![
        trivial(Q, &[], 3),
    ]),
    entry!("two_var_generic", &[scalar("q1", "p"), scalar("q2", "0"), scalar("q3", "0"), scalar("q4", "1")], QP,
        "two-generator family y x = q1 x y + q2 x + q3 y + q4", NONE, 5, two_var_generic, || vec![
        trivial(QP, &[], 5),
        basis(C2, &[], 4, &["1", "x^2", "y^2", "x^4", "x^2*y^2", "y^4"]),
        basis(C3, &[], 3, &["1", "x^3", "y^3"]),
        central(C3, &[("q2", "1")], "x^3"),
        central(C3, &[("q3", "1")], "y^3"),
    ]),
    entry!("quadratic_a1", &[scalar("a2", "1"), scalar("a3", "1"), scalar("xi1", "1"), scalar("xi2", "1"), scalar("a5", "1"), scalar("a6", "1")], Q,
        "quadratic algebra A1 in three variables", NONE, 3, quadratic_a1, Vec::new),
    entry!("quadratic_a2", &[scalar("a", "1"), scalar("b", "1"), scalar("c", "-1")], Q, "quadratic algebra A2 in three variables", UC, 5, quadratic_a2, || vec![
        trivial(Q, &[], 5),
    ]),
    entry!("quadratic_a3", &[scalar("a2", "2"), scalar("xi2", "3")], Q, "quadratic algebra A3 in three variables", NONE, 2, quadratic_a3, || vec![
        central(Q, &[], "3*y - 2*z"),
        central(Q, &[("a2", "1"), ("xi2", "1")], "y - z"),
        central(Q, &[("a2", "-1/2"), ("xi2", "5")], "5*y + 1/2*z"),
        central(Q, &[("a2", "7"), ("xi2", "-3/4")], "-3/4*y - 7*z"),
    ]),
    entry!("conformal", &[scalar("a", "2"), scalar("b", "1"), scalar("c", "3")], Q, "conformal sl(2) algebra", UC, 5, conformal, || vec![
        trivial(Q, &[], 5),
    ]),
    entry!("witten_7param", &[scalar("xi1", "2"), scalar("xi2", "1"), scalar("xi3", "2"), scalar("xi4", "1"), scalar("xi5", "3"), scalar("xi6", "1"), scalar("xi7", "1")], Q,
        "seven-parameter Witten deformation of sl(2)", NONE, 4, witten_7param, || vec![
        trivial(Q, &[], 4),
    ]),
    entry!("diffusion", &[int("n", "2"), family("c", "2")], Q, "algebra of diffusion type", NONE, 2, diffusion, || vec![
        central(Q, &[], "x1"),
        central(Q, &[], "x2"),
    ]),
];
