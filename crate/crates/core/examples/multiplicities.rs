//! Characteristic-cycle multiplicities of the Fourier transform along discriminant components.

use holofourier::model::DescriptorFile;
use holofourier::report::{run, Command, RunConfig};

fn main() -> holofourier::Result<()> {
    for name in ["a23", "quadric2", "paraboloid3", "torus2"] {
        let path = format!("{}/data/{}.json", env!("CARGO_MANIFEST_DIR"), name);
        let file = DescriptorFile::read(std::path::Path::new(&path))?;
        let rep = run(&file, &RunConfig::new(Command::Multiplicity))?;
        for m in &rep.multiplicities {
            let chi = m.chi_route.as_ref().map(|c| c.mult.to_string()).unwrap_or("-".into());
            let con = m.conified.map(|(_, k)| k.to_string()).unwrap_or("-".into());
            println!("{:12} {{{} = 0}}  irr {}  χ route {}  conified route {}", name, m.factor, m.irr, chi, con);
        }
    }
    Ok(())
}
