//! Driving the command line in-process, as the `braidkit` binary does.

use braidkit::cli::run_args;

fn main() {
    let sessions: [&[&str]; 4] = [
        &["check", "--preset", "su2-minkowski"],
        &["act", "c2", "x1.x4", "--preset", "su2-euclidean"],
        &["act", "c2", "x1.x4", "--preset", "su2-euclidean", "--q1"],
        &["verify", "gaussian", "--preset", "su2-euclidean", "--json"],
    ];
    for args in sessions {
        println!("$ braidkit {}", args.join(" "));
        let code = run_args(args.iter().copied(), &mut std::io::stdout(), &mut std::io::stderr());
        println!("(exit {code})\n");
    }
}
