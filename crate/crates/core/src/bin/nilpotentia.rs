fn main() {
    nilpotentia::cli::main_exit()
}
