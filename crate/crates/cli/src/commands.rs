use serde::Serialize;
use serde_json::{json, Value};
use ultrametric::analytic::{
    coefficient_valuations, count_zeros_in_ball, lagrange_inverse_truncation, reduce_polynomial, reduce_rational_map,
    AnalyticMap, NewtonPolygon, Polynomial, RationalMap, ReductionKind,
};
use ultrametric::criterion::{
    cross_ratio, cross_ratio_preserved, eq_one_holds, eq_one_sweep, exhaustive_injectivity_oracle,
    isometry_certificate, normalize_to_gauss_fixing, OracleVerdict, Status,
};
use ultrametric::hyperspace::{median, Affinoid, ConvexHull, HPoint, Homography};
use ultrametric::padic::{PadicNumber, Prime, RadiusExp, Valuation};
use ultrametric::{Error, Result};

use crate::{Cli, MapArgs, Verb};

pub struct Report {
    pub body: Value,
    pub code: u8,
}

impl Report {
    fn ok(body: Value) -> Report {
        Report { body, code: 0 }
    }

    fn verdict(body: Value, status: Status) -> Report {
        let code = match status {
            Status::Holds => 0,
            Status::Fails => 1,
            Status::Indeterminate => 2,
        };
        Report { body, code }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Literal form together with the expansion `p^v * u mod p^(v+k)`.
fn number(x: &PadicNumber, prec: u32) -> Value {
    json!({"value": x.to_string(), "expansion": x.describe(prec)})
}

/// Snake-case name of the error variant, for scripts.
pub fn error_kind(e: &Error) -> String {
    let debug = format!("{e:?}");
    let name: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
    let mut out = String::new();
    for (i, c) in name.chars().enumerate() {
        if c.is_uppercase() {
            if i > 0 {
                out.push('_');
            }
            out.extend(c.to_lowercase());
        } else {
            out.push(c);
        }
    }
    out
}

enum Map {
    Poly(Polynomial),
    Quotient(RationalMap),
}

impl Map {
    fn parse(p: Prime, args: &MapArgs) -> Result<Map> {
        let num = Polynomial::parse(p, &args.f)?;
        match &args.den {
            None => Ok(Map::Poly(num)),
            Some(d) => Ok(Map::Quotient(RationalMap::new(num, Polynomial::parse(p, d)?)?)),
        }
    }

    fn as_dyn(&self) -> &dyn AnalyticMap {
        match self {
            Map::Poly(f) => f,
            Map::Quotient(r) => r,
        }
    }

    fn describe(&self) -> String {
        match self {
            Map::Poly(f) => f.to_string(),
            Map::Quotient(r) => r.to_string(),
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    let p = Prime::new(cli.p)?;
    let point = |s: &str| HPoint::parse(p, s);
    let poly = |s: &str| Polynomial::parse(p, s);
    let num = |s: &str| PadicNumber::parse(p, s);
    match &cli.verb {
        Verb::Dist { a, b } => Ok(Report::ok(json!({"distance": point(a)?.distance(&point(b)?)?}))),
        Verb::Act { h, point: x } => {
            let h = Homography::parse(p, h)?;
            Ok(Report::ok(json!({"homography": h, "image": h.act(&point(x)?)?})))
        }
        Verb::Join { a, b } => Ok(Report::ok(json!({"join": point(a)?.join(&point(b)?)?}))),
        Verb::Median { a, b, c } => Ok(Report::ok(json!({"median": median(&point(a)?, &point(b)?, &point(c)?)?}))),
        Verb::Hull { base, points } => {
            let zs = points.split(',').map(num).collect::<Result<Vec<_>>>()?;
            Ok(Report::ok(to_json(&ConvexHull::of_points(&zs, &point(base)?)?)))
        }
        Verb::Gaussnorm { f, ball } => {
            let e = poly(f)?.gauss_norm_exp(&point(ball)?)?;
            Ok(Report::ok(json!({"gauss_norm_exp": e})))
        }
        Verb::Induce { f, ball } => Ok(Report::ok(json!({"image": poly(f)?.induced_image(&point(ball)?)?}))),
        Verb::Newton { f, ball } => newton(&poly(f)?, ball.as_deref().map(point).transpose()?),
        Verb::Reduce { map } => {
            let class = match Map::parse(p, map)? {
                Map::Poly(f) => reduce_polynomial(&f)?,
                Map::Quotient(r) => reduce_rational_map(&r)?,
            };
            Ok(Report::ok(to_json(&class)))
        }
        Verb::InvertSeries { f, n } => {
            let g = lagrange_inverse_truncation(&poly(f)?, *n)?;
            let vals = coefficient_valuations(&g)?;
            Ok(Report::ok(json!({"N": n, "inverse": g, "valuations": vals})))
        }
        Verb::Eq1 { map, x, y } => {
            let f = Map::parse(p, map)?;
            let (x, y) = (num(x)?, num(y)?);
            let v = eq_one_holds(f.as_dyn(), &x, &y)?;
            let mut body = json!({
                "status": v.status,
                "witness": {"x": x, "y": y, "lhs_exp": v.lhs_exp, "rhs_exp": v.rhs_exp},
                "pairs_tested": 1,
                "prime": p.get(),
                "map": f.describe(),
            });
            if let Some(r) = &v.reason {
                body["reason"] = json!(r);
            }
            Ok(Report::verdict(body, v.status))
        }
        Verb::Eq1Sweep { map, domain } => {
            let f = Map::parse(p, map)?;
            let v = eq_one_sweep(f.as_dyn(), &Affinoid::parse(p, domain)?, cli.depth, cli.workers)?;
            Ok(Report::verdict(to_json(&v), v.status))
        }
        Verb::Crossratio { f, den, a, b, c, d } => {
            let quad = [num(a)?, num(b)?, num(c)?, num(d)?];
            let r = cross_ratio(&quad[0], &quad[1], &quad[2], &quad[3])?;
            let mut body = json!({"value": number(&r.value, cli.prec), "exponent": r.exponent});
            let Some(f) = f else {
                return Ok(Report::ok(body));
            };
            let map = Map::parse(p, &MapArgs { f: f.clone(), den: den.clone() })?;
            let cmp = cross_ratio_preserved(map.as_dyn(), &quad)?;
            body["map"] = json!(map.describe());
            body["comparison"] = to_json(&cmp);
            Ok(Report { body, code: if cmp.holds { 0 } else { 1 } })
        }
        Verb::IsometryCert { f } => {
            let cert = isometry_certificate(&poly(f)?)?;
            Ok(Report { body: to_json(&cert), code: if cert.is_valid() { 0 } else { 1 } })
        }
        Verb::Normalize { f } => Ok(Report::ok(to_json(&normalize_to_gauss_fixing(&poly(f)?)?))),
        Verb::Oracle { f, domain } => {
            let v = exhaustive_injectivity_oracle(&poly(f)?, cli.depth, &Affinoid::parse(p, domain)?, cli.workers)?;
            let code = if matches!(v, OracleVerdict::Bijective { .. }) { 0 } else { 1 };
            Ok(Report { body: to_json(&v), code })
        }
        Verb::ExampleZPlusZ2 { n, table } => example_z_plus_z2(p, *n, *table),
    }
}

fn newton(f: &Polynomial, ball: Option<HPoint>) -> Result<Report> {
    let np = NewtonPolygon::of(f)?;
    let vertices: Vec<Value> = np.vertices.iter().map(|(i, v)| json!([i, v])).collect();
    let segments: Vec<Value> =
        np.segments.iter().map(|s| json!({"slope": s.slope.to_string(), "length": s.length})).collect();
    let mut body = json!({"vertices": vertices, "segments": segments, "order_at_zero": np.order_at_zero});
    if let Some(b) = ball {
        body["ball"] = to_json(&b);
        body["zeros_in_ball"] = json!(count_zeros_in_ball(f, &b)?);
    }
    Ok(Report::ok(body))
}

/// Good reduction of `z + z^2`, the truncated inverses `R_N` with
/// `|R_N ∘ P - z| = 1` on the unit ball, and the valuations of the exact
/// inverse coefficients, which keep returning to 0.
fn example_z_plus_z2(p: Prime, n: usize, table: usize) -> Result<Report> {
    let f = Polynomial::from_integers(p, &[0, 1, 1]);
    let red = reduce_polynomial(&f)?;
    let mut ok = red.kind == ReductionKind::Good;
    let mut rows = Vec::new();
    for k in 1..=n {
        let r = lagrange_inverse_truncation(&f, k)?;
        let defect = &r.compose(&f) - &Polynomial::identity(p);
        let e = defect.gauss_norm_exp(&HPoint::gauss(p))?;
        ok &= e == RadiusExp::ZERO;
        rows.push(json!({"N": k, "inverse": r, "defect_gauss_norm_exp": e}));
    }
    let g = lagrange_inverse_truncation(&f, table)?;
    let vals = coefficient_valuations(&g)?;
    let units = vals.iter().skip(1).filter(|v| **v == Valuation::Finite(0)).count();
    let body = json!({
        "prime": p.get(),
        "map": f,
        "reduction": red,
        "truncations": rows,
        "coefficient_valuations": {
            "max_degree": table,
            "valuations": vals.iter().skip(1).collect::<Vec<_>>(),
            "unit_coefficients": units,
        },
        "consistent": ok,
    });
    Ok(Report { body, code: if ok { 0 } else { 1 } })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_kinds_are_snake_case() {
        assert_eq!(error_kind(&Error::DivisionByZero), "division_by_zero");
        assert_eq!(error_kind(&Error::MalformedLiteral("x".into())), "malformed_literal");
        assert_eq!(error_kind(&Error::ImageCollision { x: "1".into(), y: "2".into() }), "image_collision");
    }
}
