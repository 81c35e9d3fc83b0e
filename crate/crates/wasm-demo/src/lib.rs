//! Browser bindings. Every function takes and returns strings so the page
//! can print results directly; errors come back as `error: ...`.

use ufsg::tsemigroup::{folner_ratios, TGenerator};
use ufsg::{Side, ThompsonElement, TruncationBasis};
use wasm_bindgen::prelude::*;

fn or_error(r: Result<String, ufsg::Error>) -> String {
    r.unwrap_or_else(|e| format!("error: {e}"))
}

fn side(s: &str) -> Result<Side, ufsg::Error> {
    s.parse()
}

/// Product, order and both divisions of two elements of Thompson's semigroup.
#[wasm_bindgen]
pub fn thompson_pair(u: &str, v: &str) -> String {
    or_error((|| {
        let u: ThompsonElement = u.parse()?;
        let v: ThompsonElement = v.parse()?;
        let show = |q: Option<ThompsonElement>| q.map_or("none".to_string(), |q| q.to_string());
        let order = match u.cmp(&v) {
            std::cmp::Ordering::Less => "<",
            std::cmp::Ordering::Equal => "=",
            std::cmp::Ordering::Greater => ">",
        };
        Ok(format!(
            "u = {u}\nv = {v}\nu v = {}\nv u = {}\nu {order} v\nu \\ v = {}\nv / u = {}",
            u.multiply(&v),
            v.multiply(&u),
            show(u.left_divide(&v)),
            show(v.right_divide(&u)),
        ))
    })())
}

/// Tab-separated `N count ratio symdiff_ratio` rows for one generator of T.
#[wasm_bindgen]
pub fn t_folner_table(generator: &str, side_name: &str, n_max: u32) -> String {
    or_error((|| {
        let g: TGenerator = generator.parse()?;
        let side = side(side_name)?;
        let mut out = String::from("N\tcount\tratio\tsymdiff_ratio\n");
        for n in 1..=n_max.clamp(1, 200) {
            let r = folner_ratios(g, n, side)?;
            out.push_str(&format!(
                "{n}\t{}\t{}\t{:.6}\n",
                r.count,
                r.ratio,
                *r.symdiff_ratio.numer() as f64 / *r.symdiff_ratio.denom() as f64
            ));
        }
        Ok(out)
    })())
}

/// Norm estimates of compressions of left convolution by a vector given in
/// the `element<TAB>re[<TAB>im]` format, on growing index balls.
#[wasm_bindgen]
pub fn compression_norms(vector_tsv: &str, max_ind: u32, max_gen: u32) -> String {
    or_error((|| {
        let f = ufsg::SemigroupVector::<ThompsonElement>::parse_tsv(vector_tsv)?;
        let mut out = String::from("max_ind\tdim\tnorm\n");
        for i in 0..=max_ind.min(8) {
            let basis = TruncationBasis::new(ufsg::thompson::enumerate_elements(i, max_gen.min(8)))?;
            let m = f.compress_operator(&basis, Side::Left);
            let norm = m.norm_estimate(ufsg::norm::DEFAULT_REL_TOL, ufsg::norm::DEFAULT_MAX_ITER)?;
            out.push_str(&format!("{i}\t{}\t{norm:.9}\n", basis.len()));
        }
        Ok(out)
    })())
}
