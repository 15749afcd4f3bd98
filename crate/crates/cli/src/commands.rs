use std::fmt::Write as _;
use std::sync::Arc;

use hnash::groebner::{
    eliminate_with, groebner_basis, is_groebner_basis, EliminationOrder, GbLimits,
};
use hnash::hilbert::{self, MonomialIdeal};
use hnash::hjac::{self, HigherJacobian, MinorIndex};
use hnash::limits::{
    annihilator, build_graph_ideal, containment_oracle, limit_ideal_of, pluecker_reconstruct,
    zero_set_planes, LimitOptions, Plane,
};
use hnash::multiindex::binomial_usize;
use hnash::parser::{parse_point, parse_vars};
use hnash::{parse_polynomial, Ideal, MonomialOrder, OrderKind, Polynomial, RationalPoint, Ring};
use serde_json::{json, Value};

use crate::report::{
    monomial_label, poly_strings, table, vector_strings, vector_text, CommandResult, Failure,
};

/// Polynomial input shared by most commands.
pub struct PolyInput {
    pub ring: Arc<Ring>,
    pub f: Polynomial,
}

pub fn ring_from(vars: &str) -> Result<Arc<Ring>, Failure> {
    Ok(Ring::new(&parse_vars(vars)?)?)
}

pub fn poly_input(poly: &str, vars: &str) -> Result<PolyInput, Failure> {
    let ring = ring_from(vars)?;
    let f = parse_polynomial(poly, &ring)?;
    Ok(PolyInput { ring, f })
}

pub fn point_in(ring: &Ring, text: &str) -> Result<RationalPoint, Failure> {
    let p = parse_point(text)?;
    if p.len() != ring.nvars() {
        return Err(Failure::input(format!(
            "point has {} coordinates, expected {}",
            p.len(),
            ring.nvars()
        )));
    }
    Ok(p)
}

fn order_check(n: u32) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::input("the order -n must be at least 1"));
    }
    Ok(())
}

fn minor_rows(minors: &[(MinorIndex, Polynomial)]) -> (Value, String) {
    let json: Vec<Value> = minors
        .iter()
        .enumerate()
        .map(|(i, (idx, d))| json!({ "label": format!("u{}", i + 1), "columns": idx.one_based(), "minor": d.to_string() }))
        .collect();
    let rows: Vec<Vec<String>> = minors
        .iter()
        .enumerate()
        .map(|(i, (idx, d))| vec![format!("u{}", i + 1), idx.to_string(), d.to_string()])
        .collect();
    let header = ["label", "columns", "minor"].map(String::from);
    (Value::Array(json), table(&header, &rows))
}

pub fn jac(input: &PolyInput, n: u32) -> Result<CommandResult, Failure> {
    order_check(n)?;
    let j = HigherJacobian::build(&input.f, n)?;
    let rows: Vec<String> = j
        .row_labels()
        .iter()
        .map(|b| monomial_label(&input.ring, b))
        .collect();
    let cols: Vec<String> = j
        .col_labels()
        .iter()
        .map(|a| monomial_label(&input.ring, a))
        .collect();
    let cells: Vec<Vec<String>> = j.entries().iter().map(|r| poly_strings(r)).collect();
    let payload = json!({
        "polynomial": input.f.to_string(),
        "s": input.ring.nvars(),
        "n": n,
        "M": j.num_rows(),
        "N": j.num_cols() + 1,
        "rows": rows,
        "cols": cols,
        "matrix": cells,
    });
    let mut text = format!(
        "Jac_{n}({})  {} x {}\n",
        input.f,
        j.num_rows(),
        j.num_cols()
    );
    let mut header = vec![String::new()];
    header.extend(cols);
    let body: Vec<Vec<String>> = rows
        .into_iter()
        .zip(cells)
        .map(|(label, row)| std::iter::once(label).chain(row).collect())
        .collect();
    text.push_str(&table(&header, &body));
    Ok(CommandResult::ok("jac", payload, text))
}

pub fn singular(input: &PolyInput, n: u32, point: &str) -> Result<CommandResult, Failure> {
    order_check(n)?;
    let p = point_in(&input.ring, point)?;
    let j = HigherJacobian::build(&input.f, n)?;
    let rank = j.rank_at(&p)?;
    let m = j.num_rows();
    let singular = rank < m;
    let payload = json!({
        "polynomial": input.f.to_string(),
        "n": n,
        "point": vector_strings(p.coords()),
        "rank": rank,
        "M": m,
        "singular": singular,
    });
    let verdict = if singular { "singular" } else { "non-singular" };
    let text = format!("{p}: {verdict} (rank {rank} of {m})\n");
    Ok(CommandResult::ok("singular", payload, text))
}

pub fn tangent(input: &PolyInput, n: u32, point: &str) -> Result<CommandResult, Failure> {
    order_check(n)?;
    let p = point_in(&input.ring, point)?;
    let basis = hjac::tangent_space(&input.f, n, &p)?;
    let payload = json!({
        "polynomial": input.f.to_string(),
        "n": n,
        "point": vector_strings(p.coords()),
        "dim": basis.len(),
        "basis": basis.iter().map(|v| vector_strings(v)).collect::<Vec<_>>(),
    });
    let mut text = format!("T^{n} at {p}: dimension {}\n", basis.len());
    for v in &basis {
        let _ = writeln!(text, "  {}", vector_text(v));
    }
    Ok(CommandResult::ok("tangent", payload, text))
}

pub fn minors(input: &PolyInput, n: u32) -> Result<CommandResult, Failure> {
    order_check(n)?;
    let minors = hjac::maximal_minors(&input.f, n)?;
    let (rows, table) = minor_rows(&minors);
    let payload =
        json!({ "polynomial": input.f.to_string(), "n": n, "count": minors.len(), "minors": rows });
    let text = format!(
        "{} maximal minors of Jac_{n}({})\n{table}",
        minors.len(),
        input.f
    );
    Ok(CommandResult::ok("minors", payload, text))
}

pub fn nashideal(input: &PolyInput, n: u32, limits: GbLimits) -> Result<CommandResult, Failure> {
    order_check(n)?;
    let minors = hjac::maximal_minors(&input.f, n)?;
    let generators = hjac::nash_generators(&input.f, n)?;
    let mut with_f = generators.clone();
    with_f.push(input.f.clone());
    let order = MonomialOrder::grevlex(input.ring.nvars());
    let basis = groebner_basis(&input.ring, &with_f, &order, limits)?;
    let (rows, minor_table) = minor_rows(&minors);
    let payload = json!({
        "polynomial": input.f.to_string(),
        "n": n,
        "minors": rows,
        "generators": poly_strings(&generators),
        "basis_with_f": poly_strings(basis.polys()),
        "unit_ideal": basis.is_unit(),
    });
    let mut text = format!(
        "{minor_table}\nJ_{n} modulo F: {} generator(s)\n",
        generators.len()
    );
    for g in &generators {
        let _ = writeln!(text, "  {g}");
    }
    let _ = writeln!(text, "reduced basis of J_{n} + <F> (grevlex):");
    for g in basis.polys() {
        let _ = writeln!(text, "  {g}");
    }
    Ok(CommandResult::ok("nashideal", payload, text))
}

fn plane_json(plane: &Plane, m: usize, ncols: usize) -> (Value, String) {
    let basis: Vec<Vec<String>> = plane.basis.iter().map(|v| vector_strings(v)).collect();
    let mut text = String::new();
    for v in &plane.basis {
        let _ = writeln!(text, "    {}", vector_text(v));
    }
    let mut value = json!({ "dim": plane.dim(), "basis": basis });
    if plane.dim() == 1 {
        if let Ok(rows) = pluecker_reconstruct(&plane.basis[0], m, ncols) {
            let kernel = annihilator(&rows, ncols).unwrap_or_default();
            let _ = writeln!(text, "    row space:");
            for r in &rows {
                let _ = writeln!(text, "      {}", vector_text(r));
            }
            let _ = writeln!(text, "    limit tangent space:");
            for k in &kernel {
                let _ = writeln!(text, "      {}", vector_text(k));
            }
            value["row_space"] = json!(rows.iter().map(|r| vector_strings(r)).collect::<Vec<_>>());
            value["tangent_space"] =
                json!(kernel.iter().map(|r| vector_strings(r)).collect::<Vec<_>>());
        }
    }
    (value, text)
}

pub fn limits(
    input: &PolyInput,
    n: u32,
    center: Option<&str>,
    order: EliminationOrder,
    limits: GbLimits,
) -> CommandResult {
    let center = match center {
        Some(text) => match point_in(&input.ring, text) {
            Ok(p) => p,
            Err(e) => return CommandResult::failed("limits", e, None),
        },
        None => RationalPoint::origin(input.ring.nvars()),
    };
    if let Err(e) = order_check(n) {
        return CommandResult::failed("limits", e, None);
    }
    let graph = match build_graph_ideal(&input.f, n, &center) {
        Ok(g) => g,
        Err(e) => return CommandResult::failed("limits", e.into(), None),
    };
    let (rows, minor_table) = minor_rows(&graph.minors);
    let mut payload = json!({
        "polynomial": input.f.to_string(),
        "n": n,
        "center": vector_strings(center.coords()),
        "minor_count": graph.minor_count(),
        "elimination_order": match order { EliminationOrder::Block => "block", EliminationOrder::Lex => "lex" },
        "minors": rows,
    });
    let mut text = format!(
        "{} minors of Jac_{n}({}) at {center}\n{minor_table}",
        graph.minor_count(),
        input.f
    );
    let result = match limit_ideal_of(&graph, &input.f, LimitOptions { order, limits }) {
        Ok(r) => r,
        Err(e) => return CommandResult::failed("limits", e.into(), Some((payload, text))),
    };
    let oracle = match containment_oracle(&result) {
        Ok(ok) => ok,
        Err(e) => return CommandResult::failed("limits", e.into(), Some((payload, text))),
    };
    payload["generators"] = json!(poly_strings(&result.generators));
    payload["containment_oracle"] = json!(oracle);
    let _ = writeln!(
        text,
        "\nlimit ideal after x = 0: {} generator(s)",
        result.generators.len()
    );
    for g in &result.generators {
        let _ = writeln!(text, "  {g}");
    }
    let _ = writeln!(
        text,
        "containment oracle: {}",
        if oracle { "ok" } else { "FAILED" }
    );

    let reduced = result
        .ideal()
        .groebner_with(&MonomialOrder::grevlex(result.u_ring.nvars()), limits);
    let planes = match reduced {
        Ok(gb) => zero_set_planes(gb.polys()),
        Err(e) => return CommandResult::failed("limits", e.into(), Some((payload, text))),
    };
    match planes {
        Some(planes) => {
            let m = hjac::HigherJacobian::build(&input.f, n)
                .map(|j| j.num_rows())
                .unwrap_or(0);
            let ncols = binomial_usize(n as usize + input.ring.nvars(), n as usize) - 1;
            let _ = writeln!(text, "zero set: {} linear component(s)", planes.len());
            let mut values = Vec::new();
            for (i, plane) in planes.iter().enumerate() {
                let (value, desc) = plane_json(plane, m, ncols);
                let _ = writeln!(text, "  component {} (dim {}):", i + 1, plane.dim());
                text.push_str(&desc);
                values.push(value);
            }
            payload["planes"] = Value::Array(values);
        }
        None => {
            payload["planes"] = Value::Null;
            let _ = writeln!(text, "zero set: not a recognised union of linear spaces");
        }
    }
    CommandResult::ok("limits", payload, text)
}

pub enum HilbertInput<'a> {
    Monomials(&'a str),
    Poly {
        poly: &'a str,
        point: Option<&'a str>,
    },
}

pub fn hilbert(input: HilbertInput<'_>, vars: &str, n: u32) -> Result<CommandResult, Failure> {
    let ring = ring_from(vars)?;
    match input {
        HilbertInput::Monomials(list) => {
            let mut gens = Vec::new();
            for piece in list.split(',') {
                let p = parse_polynomial(piece, &ring)?;
                let mut terms = p.terms();
                match (terms.next(), terms.next()) {
                    (Some((m, _)), None) => gens.push(m.clone()),
                    _ => {
                        return Err(Failure::input(format!(
                            "`{}` is not a monomial",
                            piece.trim()
                        )))
                    }
                }
            }
            let ideal = MonomialIdeal::new(ring.nvars(), gens)?;
            let dims: Vec<usize> = (0..=n).map(|k| ideal.graded_dim(k)).collect();
            let labels: Vec<String> = ideal
                .generators()
                .iter()
                .map(|g| monomial_label(&ring, g))
                .collect();
            let payload = json!({
                "generators": labels,
                "n": n,
                "graded_dim": dims[n as usize],
                "by_degree": dims,
            });
            let text = format!(
                "standard monomials of degree {n} outside <{}>: {}\n",
                labels.join(", "),
                dims[n as usize]
            );
            Ok(CommandResult::ok("hilbert", payload, text))
        }
        HilbertInput::Poly { poly, point } => {
            let f = parse_polynomial(poly, &ring)?;
            let p = match point {
                Some(text) => point_in(&ring, text)?,
                None => RationalPoint::origin(ring.nvars()),
            };
            if f.evaluate(&p)? != hnash::polynomial::rat(0) {
                return Err(hnash::hilbert::HilbertError::NotOnHypersurface(p).into());
            }
            let shifted = f.translate(&p)?;
            let initial = hilbert::tangent_cone_initial(&shifted)?;
            let dims: Vec<usize> = (0..=n).map(|k| initial.graded_dim(k)).collect();
            let total: usize = dims.iter().skip(1).sum();
            let s = ring.nvars();
            let smooth = binomial_usize(n as usize + s - 1, s - 1) - 1;
            let nonsingular = n >= 1 && total == smooth;
            let lead = monomial_label(&ring, &initial.generators()[0]);
            let payload = json!({
                "polynomial": f.to_string(),
                "point": vector_strings(p.coords()),
                "initial_monomial": lead,
                "n": n,
                "local_hilbert": dims,
                "dimension": total,
                "smooth_dimension": smooth,
                "nonsingular": nonsingular,
            });
            let mut text = format!("initial monomial of the tangent cone at {p}: {lead}\n");
            for (k, d) in dims.iter().enumerate() {
                let _ = writeln!(text, "  dim m^{k}/m^{} = {d}", k + 1);
            }
            let _ = writeln!(
                text,
                "dim m/m^{} = {total} (smooth value {smooth}): {}",
                n + 1,
                if nonsingular {
                    "non-singular"
                } else {
                    "singular"
                }
            );
            Ok(CommandResult::ok("hilbert", payload, text))
        }
    }
}

pub fn gb(
    vars: &str,
    generators: &[String],
    order: OrderKind,
    eliminate: Option<&str>,
    limits: GbLimits,
) -> Result<CommandResult, Failure> {
    let ring = ring_from(vars)?;
    let gens = generators
        .iter()
        .map(|g| parse_polynomial(g, &ring))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = Ideal::new(&ring, gens)?;
    if let Some(list) = eliminate {
        let drop = parse_vars(list)?;
        let drop_refs: Vec<&str> = drop.iter().map(String::as_str).collect();
        for name in &drop {
            if ring.index_of(name).is_none() {
                return Err(Failure::input(format!("unknown variable `{name}`")));
            }
        }
        let elim = eliminate_with(&ideal, &drop_refs, EliminationOrder::Block, limits)?;
        let remaining = elim.ring().vars().to_vec();
        let basis = elim.groebner_with(&MonomialOrder::grevlex(remaining.len()), limits)?;
        let payload = json!({
            "vars": ring.vars(),
            "eliminated": drop,
            "remaining_vars": remaining,
            "order": "grevlex",
            "basis": poly_strings(basis.polys()),
        });
        let mut text = format!("elimination ideal in {}:\n", remaining.join(", "));
        for g in basis.polys() {
            let _ = writeln!(text, "  {g}");
        }
        return Ok(CommandResult::ok("gb", payload, text));
    }
    let ord = MonomialOrder::of_kind(order, ring.nvars());
    let basis = ideal.groebner_with(&ord, limits)?;
    let formatted: Vec<String> = basis
        .polys()
        .iter()
        .map(|g| hnash::format_polynomial(g, &ord))
        .collect();
    let payload = json!({
        "vars": ring.vars(),
        "order": order.name(),
        "basis": formatted,
        "verified": is_groebner_basis(basis.polys(), &ord),
    });
    let mut text = format!(
        "reduced Groebner basis ({}, {}):\n",
        order.name(),
        ring.vars().join(" > ")
    );
    for g in &formatted {
        let _ = writeln!(text, "  {g}");
    }
    Ok(CommandResult::ok("gb", payload, text))
}
