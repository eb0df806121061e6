use std::fmt::Write;

use crate::error::Result;
use crate::invariants::StokesArrangement;

const SIZE: f64 = 400.0;
const R: f64 = 160.0;

/// Unit disk in the `λ`-plane with one chord per Stokes line, labelled by value pairs.
pub fn render_stokes_svg(a: &StokesArrangement) -> String {
    let c = SIZE / 2.0;
    let mut s = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#, SIZE);
    let _ = writeln!(s, r#"  <circle cx="{c}" cy="{c}" r="{R}" fill="none" stroke="black" stroke-width="1"/>"#);
    for l in &a.directions {
        let (dx, dy) = (l.theta.cos() * R, -l.theta.sin() * R);
        let _ = writeln!(
            s,
            r#"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="steelblue" stroke-width="1.5"/>"#,
            c - dx,
            c - dy,
            c + dx,
            c + dy
        );
        let label: Vec<String> = l.pairs.iter().map(|(i, j)| format!("{}-{}", i, j)).collect();
        let _ = writeln!(
            s,
            r#"  <text x="{:.3}" y="{:.3}" font-size="11" font-family="monospace">{}</text>"#,
            c + dx * 1.12,
            c + dy * 1.12,
            label.join(",")
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn emit_stokes_svg(a: &StokesArrangement, path: &std::path::Path) -> Result<()> {
    std::fs::write(path, render_stokes_svg(a))?;
    Ok(())
}
