use braid_core::BraidWord;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

fn main() {
    let mut rng = StdRng::seed_from_u64(0);
    for len in [10usize, 20, 40, 80] {
        let n = 10usize;
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let j = rng.random_range(1..n as i32);
                if rng.random_bool(0.5) { j } else { -j }
            })
            .collect();
        let w = BraidWord::new(n, letters).unwrap();
        let t = Instant::now();
        let nf = braid_core::normal_form(&w);
        println!("len {len}: {} us, canon {}", t.elapsed().as_micros(), nf.canonical_length());
    }
}
