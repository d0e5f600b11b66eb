// Conjugacy in SL2(Z) through the matrix/form correspondence.

use bqf_braid::quadforms;
use bqf_braid::sl2z::{self, Mat2Z};

fn main() -> bqf_braid::Result<()> {
    let m = Mat2Z::new(2, 1, 1, 1)?;
    let p = Mat2Z::S.try_mul(&Mat2Z::t_pow(3))?;
    let n = m.conjugate_by(&p)?;
    println!("{m} ~ {n}: {}", sl2z::is_conjugate(&m, &n)?);
    println!("{m} ~ {}: {}", Mat2Z::new(1, 2, 1, 3)?, sl2z::is_conjugate(&m, &Mat2Z::new(1, 2, 1, 3)?)?);

    let word = n.decompose_st();
    println!("{n} = {:?}, exponent mod 12 = {}", word.syllables(), n.exponent_mod12());

    let f = quadforms::ccc_form(&m)?;
    println!("form of {m}: {f}; back to a matrix: {}", quadforms::ccc_matrix(&f, 3)?);
    Ok(())
}
