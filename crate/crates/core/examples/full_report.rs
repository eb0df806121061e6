//! Every invariant for one descriptor, as text and as structured JSON.

use holofourier::model::DescriptorFile;
use holofourier::report::{run, Command, Format, RunConfig};

fn main() -> holofourier::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "quadric2".into());
    let path = format!("{}/data/{}.json", env!("CARGO_MANIFEST_DIR"), name);
    let file = DescriptorFile::read(std::path::Path::new(&path))?;
    let rep = run(&file, &RunConfig::new(Command::Report))?;
    println!("{}", rep.render(Format::Text));
    let json = rep.render(Format::Structured);
    println!("structured: {} bytes, schema {}", json.len(), holofourier::report::SCHEMA_VERSION);
    Ok(())
}
