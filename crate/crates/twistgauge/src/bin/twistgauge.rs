fn main() {
    // Placeholder; the CLI is wired up once the suites exist.
}
