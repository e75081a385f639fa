use bwm_core::field::{Exact, Modular};
use bwm_core::modular::{PrimePoint, DEFAULT_PRIME};
use bwm_core::rules::RuleSet;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let modular = std::env::args().any(|a| a == "--modular");
    let t = std::time::Instant::now();
    if modular {
        let f = Modular::new(PrimePoint::new(DEFAULT_PRIME, 1234567, 7654321, n as u32).unwrap());
        let rs = RuleSet::complete(&f, n);
        println!("n={n} rules={} log={} {:?}", rs.len(), rs.log().len(), t.elapsed());
    } else {
        let rs = RuleSet::complete(&Exact::new(), n);
        println!("n={n} rules={} log={} {:?}", rs.len(), rs.log().len(), t.elapsed());
    }
}
