use std::process::ExitCode;

fn main() -> ExitCode {
    // optional cap on worker threads for the sweep subcommands
    if let Ok(value) = std::env::var("COINV_MAX_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build_global();
        }
    }
    let args: Vec<String> = std::env::args().collect();
    let result = coinv::cli::run(&args);
    println!("{}", coinv::cli::render(&args, &result).trim_end());
    ExitCode::from(result.exit_code as u8)
}
