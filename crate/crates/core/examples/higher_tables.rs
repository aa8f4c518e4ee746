//! Index and θ tables of O(A^2_3) and the group they cut out.

use k0cat::cli::{emit_index_table, emit_theta_table};
use k0cat::higher::{ar_angle_higher, k0_higher_ar, k0_higher_theta, HigherParams, TiltingSet};

fn main() {
    let h = HigherParams::new(3, 2).unwrap();
    let t = TiltingSet::default_for(h);
    let names: Vec<String> = t.summands().map(|s| s.to_string()).collect();
    println!("{h}, T = {}", names.join(" + "));
    print!("{}", emit_index_table(&t).unwrap());
    println!();
    print!("{}", emit_theta_table(&t).unwrap());
    println!();
    let m = h.indec(&[2, 4, 6]).unwrap();
    println!("AR angle of {m}: {}", ar_angle_higher(&h, &m));
    println!("K0 via theta: {}", k0_higher_theta(&t).unwrap());
    println!("K0 via AR angles: {}", k0_higher_ar(&h));
}
