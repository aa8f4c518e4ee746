//! Every angulation of a small polygon, written to JSON, reloaded and
//! checked to give the same group.

use std::collections::BTreeMap;

use k0cat::polygon::{enumerate_angulations, k0_polygon, Angulation, PolygonParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pp = PolygonParams::new(3, 2)?;
    let dir = tempfile::tempdir()?;
    let mut groups = BTreeMap::new();
    let all = enumerate_angulations(pp);
    for (i, t) in all.iter().enumerate() {
        let path = dir.path().join(format!("t{i}.json"));
        std::fs::write(&path, serde_json::to_string(&t.to_file_data())?)?;
        let back = Angulation::load(&path)?;
        assert_eq!(&back, t);
        *groups.entry(k0_polygon(&back)?.to_string()).or_insert(0) += 1;
    }
    println!("{pp}: {} angulations", all.len());
    println!("first file: {}", std::fs::read_to_string(dir.path().join("t0.json"))?);
    for (g, n) in groups {
        println!("K0 = {g} for {n} of them");
    }
    Ok(())
}
