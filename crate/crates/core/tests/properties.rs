mod common;

const CASES: u32 = 1000;

fn run(name: &str) {
    let law = common::laws().into_iter().find(|l| l.name == name).expect("law exists");
    if let Err(e) = (law.run)(CASES) {
        panic!("{name}: {e}");
    }
}

#[test]
fn scalar_field_and_conjugation() {
    run("scalar field and conjugation");
}

#[test]
fn ring_laws() {
    run("ring laws");
}

#[test]
fn normal_forms() {
    run("normal forms");
}

#[test]
fn involution() {
    run("involution");
}

#[test]
fn degrees() {
    run("degrees");
}

#[test]
fn twisted_leg_commutation() {
    run("twisted leg commutation");
}

#[test]
fn delta_is_a_star_homomorphism() {
    run("Δ is a *-homomorphism");
}

#[test]
fn alpha_moves_past_functions_of_gamma() {
    run("α f(γ) = f(q̄γ) α");
}

#[test]
fn render_and_parse() {
    run("render and parse");
}

#[test]
fn numeric_soundness() {
    run("numeric soundness");
}

#[test]
fn circle_action() {
    run("circle action");
}
