use std::time::Instant;
use qschur::rseries::*;
fn main() {
    let n = 5i64;
    let mut s = RSeries::new(n, PsiDefinition::ViaG);
    let t0 = Instant::now();
    for k in -3*n..=3*n { s.phi(k); }
    println!("phi precompute: {:.2?}", t0.elapsed());
    for a in -2*n..=2*n {
        let t = Instant::now();
        let item = verify_main_identity(&mut s, a, 0);
        println!("a={a}: {:.2?} pass={}", t.elapsed(), item.pass);
    }
}
