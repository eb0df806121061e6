//! Newton–Puiseux expansion of a plane curve in (u, c).

use holofourier::algebra::parse_poly;
use holofourier::puiseux::newton_puiseux;

fn main() -> holofourier::Result<()> {
    let names = vec!["c".to_string(), "u".to_string()];
    for text in ["c^2 - u^2 - 2*u", "c*u^2 - 4/27", "c^3 - u", "c^2 - 2*c*u + u^2 - u^3"] {
        let f = parse_poly(text, &names)?;
        println!("{} = 0", text);
        let trunc = rug::Rational::from(3);
        for (s, m) in newton_puiseux(&f, Some(&trunc), 128)? {
            println!("  ×{} e={}  c = {}", m, s.ram, s.render("u", 10));
        }
    }
    Ok(())
}
