//! Auslander-Reiten towers over the fan angulation and the relations they give.

use std::env;

use k0cat::polygon::{ar_angle, ar_relation, index_polygon, Angulation, PolygonParams};

fn main() {
    let args: Vec<u32> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, q) = match args[..] {
        [p, q, ..] => (p, q),
        _ => (3, 3),
    };
    let pp = PolygonParams::new(p, q).expect("p >= 1, q >= 2");
    let t = Angulation::fan(pp);
    println!("{pp}");
    for m in t.diagonals() {
        let angle = ar_angle(&t, m).unwrap();
        println!("tower of {m}");
        for (k, (mid, cone)) in angle.middles.iter().zip(&angle.cones).enumerate() {
            println!("  {k}: middle {:<10} cone {cone}", mid.to_string());
        }
        println!("  closes at {}", angle.cones.last().unwrap());
        println!("  relation: {}", ar_relation(&angle, q));
    }
    println!("indices of the first suspensions:");
    for m in t.diagonals() {
        let x = pp.suspend(m, 1);
        println!("  index({x}) = {}", index_polygon(&t, x).unwrap());
    }
}
