//! Membership in the smooth locus and the discriminant polynomial.

use holofourier::critical::Analysis;
use holofourier::model::{parse_vector, DescriptorFile};
use holofourier::Settings;

fn main() -> holofourier::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/a23.json");
    let file = DescriptorFile::read(std::path::Path::new(path))?;
    let an = Analysis::new(&file.descriptor, Settings::default());
    println!("Δ = {}", an.discriminant_locus()?.text());
    for w in ["1,1", "2,-3", "0,1", "1,0", "1/3,i"] {
        let v = an.omega(&parse_vector(w, 2)?)?;
        println!("w = ({:6}) {:9} {}", w, if v.member { "in Ω" } else { "not in Ω" }, v.certificate());
    }
    Ok(())
}
