//! Euler characteristics of constructible functions and their hyperplane slices.

use holofourier::algebra::parse_poly;
use holofourier::algebra::parse::indexed_names;
use holofourier::invariants::{chi_hypersurface, chi_slice, pointwise_solution_chi};
use holofourier::model::{default_constructible, parse_vector, DescriptorFile};
use holofourier::Settings;

fn main() -> holofourier::Result<()> {
    let st = Settings::default();
    let z = indexed_names("z", 3);
    for text in ["z1*z2 - 1", "z1^2 + z2^2 + z3^2 - 1", "z2^2 - z1^3 - z1 - 1"] {
        println!("χ({{{} = 0}}) = {}", text, chi_hypersurface(&parse_poly(text, &z)?, &st)?);
    }
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/a23.json");
    let file = DescriptorFile::read(std::path::Path::new(path))?;
    let model = default_constructible(&file.descriptor)?;
    for v in ["1,0", "0,1", "1,1"] {
        let v = parse_vector(v, 2)?;
        let (x, tau) = chi_slice(&model, &v, &st)?;
        let shown: Vec<String> = v.iter().map(|q| q.to_string()).collect();
        println!("a23: χ_c on ⟨z, ({})⟩ = {} is {}", shown.join(", "), tau, x);
    }
    println!("a23: pointwise χ at (1,1) = {}", pointwise_solution_chi(&model, &parse_vector("1,1", 2)?, &st)?);
    Ok(())
}
