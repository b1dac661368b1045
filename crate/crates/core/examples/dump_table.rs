//! Prints the derived universal table in the golden dump format.
fn main() {
    print!("{}", pcaxial::algebra::universal().dump());
}
