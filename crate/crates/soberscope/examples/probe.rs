use soberscope::gen::{random_t0_space, sample_rng};
use soberscope::map::SpaceMap;
use soberscope::sobriety::{is_continuous, si_continuity_iff_sup_preserving};
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    for i in 0..3 {
        let mut rng = sample_rng(0x24, i);
        let source = random_t0_space(&mut rng, 4);
        let target = random_t0_space(&mut rng, 4);
        let mut count = 0;
        for table in soberscope::gen::all_tables(source.len(), target.len()) {
            let map = SpaceMap::new(source.clone(), target.clone(), table).unwrap();
            if is_continuous(&map) {
                assert!(si_continuity_iff_sup_preserving(&map).unwrap());
                count += 1;
            }
        }
        println!("pair {i}: {count} continuous maps, {:?}", t0.elapsed());
    }
}
