fn main() {
    println!("qtb");
}
