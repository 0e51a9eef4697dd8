use std::time::Instant;
use ttk::combin::Partition;
use ttk::opcalc::*;
use ttk::repcore::*;

fn main() {
    let arena = OpArena::new();
    let params = Params { scale: 2 };
    let dict = PerpDict::new(&arena, 3, params);
    let m = Module::fock(3, 0, params);
    let ev = Evaluator::new(&arena, &m);
    let vac = ModVec::basis(Label::Part(Partition::empty()));
    let t = Instant::now();
    let _ = ev.apply(dict.perp_mode(PerpGen::E, 0, -3), &vac).unwrap();
    let (a, mu, _) = ttk::symrat::rat::rat_stats();
    let (gc, gn, _) = ttk::symrat::gcd::gcd_stats();
    eprintln!("-3: total {:?} | add {:.2}s mul {:.2}s | gcd {} calls {:.2}s",
        t.elapsed(), a as f64/1e9, mu as f64/1e9, gc, gn as f64/1e9);
    let t = Instant::now();
    let _ = ev.apply(dict.perp_mode(PerpGen::E, 0, -4), &vac).unwrap();
    let (a, mu, _) = ttk::symrat::rat::rat_stats();
    let (gc, gn, _) = ttk::symrat::gcd::gcd_stats();
    eprintln!("-4: total {:?} | add {:.2}s mul {:.2}s | gcd {} calls {:.2}s",
        t.elapsed(), a as f64/1e9, mu as f64/1e9, gc, gn as f64/1e9);
}
