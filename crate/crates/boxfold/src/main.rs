fn main() {
    println!("boxfold");
}
