//! Gröbner basis of a zero-dimensional ideal and its staircase.

use abdim::exactmath::FieldCtx;
use abdim::groebner::{buchberger, quotient_monomial_basis, Poly};

fn main() -> abdim::Result<()> {
    let q = FieldCtx::Rationals;
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let v = |i| Poly::var(q, 3, i);
    // (x^2 - yz, y^2 - xz, z^2 - xy) together with the cubes
    let gens = vec![
        v(0).pow(2).sub(&v(1).mul(&v(2))),
        v(1).pow(2).sub(&v(0).mul(&v(2))),
        v(2).pow(2).sub(&v(0).mul(&v(1))),
        v(0).pow(3),
        v(1).pow(3),
        v(2).pow(3),
    ];
    let gb = buchberger(&gens, &vars)?;
    println!("reduced basis ({} elements):", gb.generators().len());
    for g in gb.generators() {
        println!("  {}", g.display_with(&vars));
    }
    assert!(gb.satisfies_buchberger_criterion());

    let staircase = quotient_monomial_basis(&gb)?;
    let names: Vec<String> = staircase.iter().map(|m| m.display_with(&vars)).collect();
    println!(
        "standard monomials ({}): {}",
        staircase.len(),
        names.join(", ")
    );

    let f = v(0).pow(2).mul(&v(1)).add(&v(2).pow(2));
    println!(
        "NF({}) = {}",
        f.display_with(&vars),
        gb.normal_form(&f).display_with(&vars)
    );
    Ok(())
}
