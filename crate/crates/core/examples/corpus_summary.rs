//! Runs the corpus suite and prints the per-anchor summary with any failures.

fn main() {
    let start = std::time::Instant::now();
    let run = spined_core::suite::corpus_run(2);
    for r in &run.reports {
        for row in r.failures() {
            println!("{}: {} / {} [{}]", r.instance, row.anchor, row.check, row.witness.as_deref().unwrap_or(""));
        }
    }
    print!("{}", run.summary());
    eprintln!("elapsed {:?}", start.elapsed());
}
