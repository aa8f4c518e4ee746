//! Smith normal form of a relation matrix and the group it presents.

use k0cat::abelian::{invariants_of_relations, quotient_invariants, smith_normal_form, GroupPresentation, IntMatrix};

fn main() {
    let m = IntMatrix::from_rows_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m);
    snf.check(&m).expect("valid decomposition");
    let factors: Vec<String> = snf.invariant_factors().iter().map(|x| x.to_string()).collect();
    println!("invariant factors: {}", factors.join(", "));
    println!("Z^3 / rows = {}", invariants_of_relations(&m));

    // the same thing through a labelled presentation
    let mut pres = GroupPresentation::new(vec!["x", "y", "z"]).unwrap();
    pres.add_relation([("x", 4.into()), ("y", 6.into())]).unwrap();
    pres.add_relation([("y", 3.into()), ("z", (-3).into())]).unwrap();
    let g = quotient_invariants(&pres);
    println!("<x, y, z | 4x + 6y, 3y - 3z> = {g}");
    println!("json: {}", g.to_json());
}
