use std::fmt::Write;

use super::InvariantReport;
use crate::algebra::capprox::fmt_sig;
use crate::algebra::{CApprox, GRat};
use crate::model::Direction;

const DIGITS: usize = 12;

fn vec_text(v: &Direction) -> String {
    let p: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", p.join(", "))
}

fn value(c: &CApprox, exact: Option<&GRat>) -> String {
    match exact {
        Some(q) => format!("{} [exact]", q),
        None => format!("{} [±{:.1e}]", crate::algebra::capprox::fmt_complex(c.re(), c.im(), DIGITS), c.err()),
    }
}

pub(super) fn render(r: &InvariantReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "command: {}", r.command.name());
    let _ = writeln!(s, "descriptor (N = {}):", r.dim);
    for d in &r.descriptor {
        let _ = writeln!(s, "  {}", d);
    }
    if let Some(diags) = &r.diagnostics {
        if diags.is_empty() {
            let _ = writeln!(s, "validation: ok");
        } else {
            let _ = writeln!(s, "validation: {} problem(s)", diags.len());
            for d in diags {
                let _ = writeln!(s, "  {}", d);
            }
        }
    }
    if let Some(c) = &r.rank {
        let _ = writeln!(s, "rank: {} [exact]", c.rank);
        let per: Vec<String> = c.per_component.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(s, "  covering degree per component: [{}]", per.join(", "));
        if let Some(v) = c.volume {
            let _ = writeln!(s, "  normalized torus volume: {} [exact]", v);
        }
    }
    for (w, v) in &r.omega {
        let _ = writeln!(s, "omega at w = {}: {}", vec_text(w), if v.member { "in Ω" } else { "not in Ω" });
        let _ = writeln!(s, "  certificate: {}", v.certificate());
    }
    if let Some(d) = &r.discriminant {
        let _ = writeln!(s, "discriminant: Δ = {} [exact]", d.text());
        for c in &d.components {
            let f: Vec<String> = c.factors.iter().map(|p| crate::algebra::format_poly(p, &d.names)).collect();
            let _ = writeln!(s, "  component {}: {}", c.component, if f.is_empty() { "none".into() } else { f.join(" · ") });
        }
        for c in &d.cross {
            let _ = writeln!(
                s,
                "  collision {}/{}: {}{}",
                c.components.0,
                c.components.1,
                crate::algebra::format_poly(&c.factor, &d.names),
                if c.verified { "" } else { " (unverified, kept)" }
            );
        }
    }
    for (w, jumps) in &r.profiles {
        let _ = writeln!(s, "stalk profile at w = {}:", vec_text(w));
        for j in jumps {
            let pos = match &j.exact {
                Some(q) => format!("{} [exact]", q),
                None => format!("{} [±1e-9]", fmt_sig(j.position, DIGITS)),
            };
            let _ = writeln!(s, "  jump at Re c = {}, multiplicity {}", pos, j.mult);
        }
    }
    for sl in &r.slices {
        let b = &sl.boundary;
        let _ = writeln!(s, "slice {}: v = {}, direction {}", sl.label, vec_text(&sl.base), vec_text(&sl.dir));
        for (i, p) in &b.slice_polys {
            let _ = writeln!(s, "  F_{}(u, c) = {} [exact]", i, p);
        }
        for br in &b.branches {
            let _ = writeln!(
                s,
                "  branch (component {}, ramification {}, copies {}): {}",
                br.component,
                br.series.ram,
                br.branch_mult * br.mult,
                br.series.render("u", DIGITS)
            );
        }
        for f in &b.factors {
            let _ = writeln!(s, "  factor E^({}) x{}", f.pole_series.render("u", DIGITS), f.mult);
        }
        if !b.regular_ramified.is_empty() {
            let _ = writeln!(s, "  regular ramified branches: {}", b.regular_ramified.len());
        }
        let _ = writeln!(s, "  irregularity: {} [exact]", b.irregularity);
    }
    for inf in &r.infinity {
        let _ = writeln!(s, "infinity at w = {}:", vec_text(&inf.w));
        for f in &inf.factors {
            let _ = writeln!(s, "  factor E^(-c λ), c = {}, multiplicity {}", value(&f.c, f.exact.as_ref()), f.mult);
        }
        let _ = writeln!(s, "  regular at λ = 0: {}", inf.regular_at_origin);
    }
    for st in &r.stokes {
        let _ = writeln!(s, "stokes lines at w = {}: {}", vec_text(&st.w), st.directions.len());
        for l in &st.directions {
            let p: Vec<String> = l.pairs.iter().map(|(i, j)| format!("{}-{}", i, j)).collect();
            let _ = writeln!(s, "  θ = {} [±1e-12], pairs {}", fmt_sig(l.theta, DIGITS), p.join(" "));
        }
    }
    if let Some(c) = &r.chi {
        let _ = writeln!(s, "euler characteristics:");
        let _ = writeln!(s, "  χ_c(C^N, F) = {} [exact]", c.chi_total);
        for (d, tau, x) in &c.slices {
            let _ = writeln!(s, "  χ_c(ℓ({})⁻¹(τ)) = {} at τ = {} [exact]", vec_text(d), x, tau);
        }
        for (d, x) in &c.pointwise {
            let _ = writeln!(s, "  χ of the transformed solutions at {} = {} [exact]", vec_text(d), x);
        }
    }
    if !r.multiplicities.is_empty() {
        let _ = writeln!(s, "multiplicities:");
        for m in &r.multiplicities {
            let _ = writeln!(s, "  slice {} on {{{} = 0}}, irr = {}", m.slice, m.factor, m.irr);
            if let Some(c) = &m.chi_route {
                let _ = writeln!(
                    s,
                    "    χ route: {} - ({}) + {} = {} [exact], v0 = {}",
                    c.chi_v,
                    c.chi_v0,
                    c.irr,
                    c.mult,
                    vec_text(&m.v0)
                );
            }
            if let Some((n, k)) = &m.conified {
                let _ = writeln!(s, "    conified route: {} + {} = {} [exact]", n, m.irr, k);
            }
            if let Some(a) = m.agree() {
                let _ = writeln!(s, "    routes agree: {}", a);
            }
            for n in &m.notes {
                let _ = writeln!(s, "    note: {}", n);
            }
        }
    }
    let p = &r.provenance;
    let _ = writeln!(s, "precision {} bits, seed {}, version {}", p.precision, p.seed, p.version);
    s
}
