//! K0 of C_q(A_p) over the fan angulation for a grid of parameters.

use k0cat::polygon::{k0_polygon, Angulation, PolygonParams};

fn main() {
    print!("{:>4}", "q\\p");
    for p in 1..=8 {
        print!("{p:>8}");
    }
    println!();
    for q in 2..=7 {
        print!("{q:>4}");
        for p in 1..=8 {
            let pp = PolygonParams::new(p, q).unwrap();
            let g = k0_polygon(&Angulation::fan(pp)).unwrap();
            print!("{:>8}", g.to_string());
        }
        println!();
    }
}
