use braid_core::{normal_form, BraidWord};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

fn main() {
    let mut rng = StdRng::seed_from_u64(0);
    for (n, len) in [(10usize, 1000usize), (10, 2000), (13, 1000)] {
        let mut times = vec![];
        for _ in 0..11 {
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let j = rng.random_range(1..n as i32);
                    if rng.random_bool(0.5) { j } else { -j }
                })
                .collect();
            let w = BraidWord::new(n, letters).unwrap();
            let t = Instant::now();
            let nf = normal_form(&w);
            times.push(t.elapsed().as_micros());
            std::hint::black_box(nf);
        }
        times.sort();
        println!("B_{n} len {len}: median {} us", times[times.len()/2]);
    }
}
