//! The critical-value polynomial of each component and the fiber over one direction.

use holofourier::critical::Analysis;
use holofourier::model::{parse_vector, DescriptorFile};
use holofourier::Settings;

fn main() -> holofourier::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/quadric3.json");
    let file = DescriptorFile::read(std::path::Path::new(path))?;
    let an = Analysis::new(&file.descriptor, Settings::default());
    println!("Φ = {}", an.symbolic(0)?.text());
    let w = parse_vector("1, 2, i", 3)?;
    for p in an.fiber(&w)?.points {
        let alpha: Vec<String> = p.alpha.iter().map(|a| a.to_string()).collect();
        println!("α = [{}]\n  c = {}", alpha.join(", "), p.c);
    }
    Ok(())
}
