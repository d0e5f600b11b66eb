// Exact arithmetic in Z[q^(1/2), q^(-1/2)].

use bqf_braid::laurent::{HalfLaurent, UnitBase};

fn main() -> bqf_braid::Result<()> {
    let q = HalfLaurent::q();
    let one = HalfLaurent::one();
    let cyclotomic = one.try_add(&q)?.try_add(&q.try_mul(&q)?)?;
    println!("1 + q + q^2 = {cyclotomic}");

    // (1 - q^3) / (1 - q) = 1 + q + q^2
    let num = one.try_sub(&HalfLaurent::q_monomial(1, 3))?;
    let den = one.try_sub(&q)?;
    println!("(1 - q^3) / (1 - q) = {}", num.exact_div(&den)?);

    let s = HalfLaurent::sqrt_q();
    println!("(q^1/2)^3 = {}", s.try_mul(&s)?.try_mul(&s)?);
    println!("(-q^1/2)^-3 = {}", HalfLaurent::monomial_pow(UnitBase::NegSqrtQ, -3));

    let v = HalfLaurent::from_q_terms([(1, 1), (3, 1), (4, -1)])?;
    println!("{v} at q = -1: {}", v.eval_q_minus_one()?);
    Ok(())
}
