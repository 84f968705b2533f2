use super::Permutation;

/// Left regular representation of an abstract group on `0..order`.
///
/// `mul(a, b)` is the product in the abstract group, with `0` its identity;
/// the returned permutation for `g` sends `i` to `mul(g, i)`. The map
/// `g ↦ P_g` is a homomorphism under [`Permutation::compose`].
pub fn regular_representation(
    order: usize,
    mul: impl Fn(usize, usize) -> usize,
    gens: &[usize],
) -> Vec<Permutation> {
    gens.iter()
        .map(|&g| {
            let images = (0..order).map(|i| mul(g, i) as u32).collect();
            Permutation::from_images(images).expect("left multiplication is a bijection")
        })
        .collect()
}
