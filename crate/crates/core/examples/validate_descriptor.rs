//! Parse descriptor files and report structural problems.

use holofourier::model::{validate, DescriptorFile};

fn main() {
    let ok = r#"{"dim": 2, "components": [{"kind": "conormal_hypersurface", "poly": "z1^2 + z2^2 - 1", "mult": 1}]}"#;
    let squared = r#"{"dim": 2, "components": [{"kind": "conormal_hypersurface", "poly": "(z1^2 + z2^2 - 1)^2", "mult": 1}]}"#;
    let broken = r#"{"dim": 2, "components": [{"kind": "conormal_hypersurface", "poly": "z1^^2", "mult": 1}]}"#;
    for (name, text) in [("circle", ok), ("squared circle", squared), ("typo", broken)] {
        match DescriptorFile::from_json(text) {
            Ok(f) => {
                let diags = validate(&f.descriptor);
                if diags.is_empty() {
                    println!("{}: valid", name);
                }
                for d in diags {
                    println!("{}: {}", name, d);
                }
            }
            Err(e) => println!("{}: {} (exit code {})", name, e, e.exit_code()),
        }
    }
}
