#![allow(dead_code)]

use holofourier::algebra::GRat;
use holofourier::critical::Analysis;
use holofourier::model::DescriptorFile;
use holofourier::Settings;
use rug::Complex;

pub const EXAMPLES: [&str; 5] = ["quadric2", "quadric3", "paraboloid3", "a23", "torus2"];

pub fn load(name: &str) -> DescriptorFile {
    let path = format!("{}/data/{}.json", env!("CARGO_MANIFEST_DIR"), name);
    DescriptorFile::read(std::path::Path::new(&path)).unwrap()
}

pub fn analysis(name: &str) -> Analysis {
    Analysis::new(&load(name).descriptor, Settings::default())
}

pub fn ints(v: &[i64]) -> Vec<GRat> {
    v.iter().map(|&x| GRat::from_int(x)).collect()
}

pub fn gaussian(re: i64, im: i64, den: i64) -> GRat {
    GRat::new(rug::Rational::from((re, den)), rug::Rational::from((im, den)))
}

pub fn c64(z: &Complex) -> (f64, f64) {
    (z.real().to_f64(), z.imag().to_f64())
}

/// Small deterministic generator for test-side sampling.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    pub fn grat(&mut self) -> GRat {
        let den = self.range(1, 9);
        gaussian(self.range(-20, 20), self.range(-20, 20), den)
    }

    pub fn direction(&mut self, n: usize) -> Vec<GRat> {
        (0..n).map(|_| self.grat()).collect()
    }
}
