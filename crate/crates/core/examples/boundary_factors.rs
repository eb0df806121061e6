//! Exponential factors and irregularity along a normal slice through the discriminant.

use holofourier::critical::Analysis;
use holofourier::invariants::boundary_factors;
use holofourier::model::DescriptorFile;
use holofourier::Settings;

fn main() -> holofourier::Result<()> {
    for name in ["a23", "paraboloid3", "quadric2"] {
        let path = format!("{}/data/{}.json", env!("CARGO_MANIFEST_DIR"), name);
        let file = DescriptorFile::read(std::path::Path::new(&path))?;
        let an = Analysis::new(&file.descriptor, Settings::default());
        for s in &file.slices {
            let b = boundary_factors(&an, s)?;
            println!("{} slice {}: irr {}", name, s.label, b.irregularity);
            for f in &b.factors {
                println!("  E^({}) ×{}", f.pole_series.render("u", 10), f.mult);
            }
        }
    }
    Ok(())
}
