use coxarr::involutions::rootspace_special_set;
use coxarr::rootsys::{build_root_system, CoxeterType};
fn main() {
    for name in ["E7", "E8"] {
        let t0 = std::time::Instant::now();
        let rs = build_root_system(CoxeterType::parse(name).unwrap()).unwrap();
        let xs = rootspace_special_set(&rs).unwrap();
        println!("{name}: |X| = {} in {:?}", xs.len(), t0.elapsed());
        for c in &xs.classes {
            println!("  J={:?} dim={} even={} r1={:?} r2={:?} g1={} g2={}",
                c.j_set, c.dim_minus, c.even, c.r1_types, c.r2_types, c.g1_order, c.g2_order);
        }
    }
}
