/// `points` equally spaced values from `a` to `b`, both endpoints included.
pub fn grid(a: f64, b: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let last = points - 1;
            (0..points)
                .map(|i| {
                    if i == last {
                        b
                    } else {
                        a + (b - a) * i as f64 / last as f64
                    }
                })
                .collect()
        }
    }
}
