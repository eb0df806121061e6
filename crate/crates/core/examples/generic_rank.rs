//! Generic rank of the Fourier transform as a covering degree.

use holofourier::critical::Analysis;
use holofourier::model::DescriptorFile;
use holofourier::Settings;

fn main() -> holofourier::Result<()> {
    for name in ["quadric2", "quadric3", "paraboloid3", "a23", "torus2"] {
        let path = format!("{}/data/{}.json", env!("CARGO_MANIFEST_DIR"), name);
        let file = DescriptorFile::read(std::path::Path::new(&path))?;
        let an = Analysis::new(&file.descriptor, Settings::default());
        let deg = an.covering_degree()?;
        print!("{:12} rank {}  per component {:?}", name, deg.rank, deg.per_component);
        match deg.volume {
            Some(v) => println!("  torus volume {}", v),
            None => println!(),
        }
    }
    Ok(())
}
