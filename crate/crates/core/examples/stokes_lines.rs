//! Exponential factors at infinity on a line and the Stokes arrangement, drawn as SVG.

use holofourier::critical::Analysis;
use holofourier::invariants::{infinity_factors, stokes_directions};
use holofourier::model::{parse_vector, DescriptorFile};
use holofourier::report::emit_stokes_svg;
use holofourier::Settings;

fn main() -> holofourier::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/torus2.json");
    let file = DescriptorFile::read(std::path::Path::new(path))?;
    let an = Analysis::new(&file.descriptor, Settings::default());
    let w = parse_vector("2,3,5", 3)?;
    for f in infinity_factors(&an, &w)?.factors {
        println!("E^(-c λ)  c = {}", f.c);
    }
    let st = stokes_directions(&an, &w)?;
    for l in &st.directions {
        println!("θ = {:.6}  pairs {:?}", l.theta, l.pairs);
    }
    let out = std::env::temp_dir().join("torus2_stokes.svg");
    emit_stokes_svg(&st, &out)?;
    println!("wrote {}", out.display());
    Ok(())
}
