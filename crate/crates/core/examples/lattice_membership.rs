//! Membership and equality of subgroups of Z^n.

use k0cat::abelian::{hermite_normal_form, subgroup_contains, subgroup_equal, IntMatrix, IntVector};

fn main() {
    let gens =
        vec![IntVector::from_i64s(&[2, 4, 0]), IntVector::from_i64s(&[0, 3, 3]), IntVector::from_i64s(&[2, 1, -3])];
    let rows: Vec<Vec<i64>> = vec![vec![2, 4, 0], vec![0, 3, 3], vec![2, 1, -3]];
    let h = hermite_normal_form(&IntMatrix::from_rows_i64(&rows));
    println!("hermite basis:");
    for i in 0..h.rows() {
        let row: Vec<String> = h.row(i).iter().map(|x| x.to_string()).collect();
        println!("  [{}]", row.join(", "));
    }

    for v in [[4, 11, 3], [1, 0, 0], [2, 7, 3]] {
        let v = IntVector::from_i64s(&v);
        println!("{v} in span: {}", subgroup_contains(&gens, &v).unwrap());
    }

    let other = vec![IntVector::from_i64s(&[2, 4, 0]), IntVector::from_i64s(&[2, 7, 3])];
    println!("spans equal: {}", subgroup_equal(&gens, &other).unwrap());
}
