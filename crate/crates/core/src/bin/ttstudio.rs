fn main() {
    std::process::exit(timetable_studio::cli::run_cli(std::env::args_os()));
}
