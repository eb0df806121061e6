//! Jumps of the Fourier–Sato stalk along a ray: one per critical value.

use holofourier::critical::Analysis;
use holofourier::model::{parse_vector, DescriptorFile};
use holofourier::Settings;

fn main() -> holofourier::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/torus2.json");
    let file = DescriptorFile::read(std::path::Path::new(path))?;
    let an = Analysis::new(&file.descriptor, Settings::default());
    let w = parse_vector("1,1,1", 3)?;
    let jumps = an.stalk_profile(&w)?;
    let total: u32 = jumps.iter().map(|j| j.mult).sum();
    for j in &jumps {
        println!("jump at Re c = {:+.9}, multiplicity {}", j.position, j.mult);
    }
    println!("total {} (rank {})", total, an.covering_degree()?.rank);
    Ok(())
}
