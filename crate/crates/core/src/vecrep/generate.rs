use super::cyclotomic::is_prime;
use super::{orthogonality_graph, GaussInt, RepError, VectorRep, Vectors};
use crate::graph::{ClassicalColouring, Graph};

/// Largest `n` accepted by [`hadamard_graph`] (`2^n` vertices).
pub const MAX_HADAMARD_N: u32 = 20;
/// Largest prime accepted by [`roots_of_unity_graph`] (`p^p` vertices).
pub const MAX_ROOTS_P: u32 = 5;

fn check_hadamard_n(n: u32) -> Result<(), RepError> {
    if n == 0 {
        return Err(RepError::Invalid("Hadamard graph needs n >= 1".into()));
    }
    if n > MAX_HADAMARD_N {
        return Err(RepError::TooLarge {
            what: "n",
            value: n,
            max: MAX_HADAMARD_N,
        });
    }
    if n % 2 == 1 {
        return Err(RepError::OddHadamard(n));
    }
    Ok(())
}

/// `n`-bit strings in lexicographic order (vertex `i` is the binary expansion
/// of `i`, most significant bit first), adjacent at Hamming distance `n/2`.
pub fn hadamard_graph(n: u32) -> Result<Graph, RepError> {
    check_hadamard_n(n)?;
    let half = n / 2;
    Ok(Graph::from_predicate(1 << n, |u, v| (u ^ v).count_ones() == half)?)
}

/// The `+-1` vectors of the Hadamard graph: bit `b` becomes `(-1)^b`.
pub fn hadamard_rep(n: u32) -> Result<VectorRep, RepError> {
    check_hadamard_n(n)?;
    let vectors = (0..1usize << n)
        .map(|i| {
            (0..n)
                .map(|j| if (i >> (n - 1 - j)) & 1 == 1 { -1 } else { 1 })
                .collect()
        })
        .collect();
    VectorRep::new(n as usize, Vectors::Int(vectors))
}

fn check_prime_p(p: u32) -> Result<(), RepError> {
    if !is_prime(p) {
        return Err(RepError::NotPrime(p));
    }
    if p > MAX_ROOTS_P {
        return Err(RepError::TooLarge {
            what: "p",
            value: p,
            max: MAX_ROOTS_P,
        });
    }
    Ok(())
}

fn exponent_vector(p: u32, mut i: usize) -> Vec<u32> {
    let mut digits = vec![0; p as usize];
    for d in digits.iter_mut().rev() {
        *d = (i % p as usize) as u32;
        i /= p as usize;
    }
    digits
}

/// All vectors of `C^p` with `p`-th-root-of-unity entries, in lexicographic
/// exponent order, with their orthogonality graph.
pub fn roots_of_unity_graph(p: u32) -> Result<(Graph, VectorRep), RepError> {
    check_prime_p(p)?;
    let count = (p as usize).pow(p);
    let vectors = (0..count).map(|i| exponent_vector(p, i)).collect();
    let rep = VectorRep::new(p as usize, Vectors::RootExp { order: p, vectors })?;
    let g = orthogonality_graph(&rep, 0.0)?;
    Ok((g, rep))
}

/// Colour of `x` is `(x_1 - x_2) mod p` on exponents. Equal colours make the
/// first two entries of `conj(x) o y` equal, so the endpoints are not adjacent.
pub fn roots_of_unity_colouring(p: u32) -> Result<ClassicalColouring, RepError> {
    if !is_prime(p) {
        return Err(RepError::NotPrime(p));
    }
    if p > MAX_ROOTS_P {
        return Err(RepError::TooLarge {
            what: "p",
            value: p,
            max: MAX_ROOTS_P,
        });
    }
    let count = (p as usize).pow(p);
    let colours = (0..count)
        .map(|i| {
            let x = exponent_vector(p, i);
            ((x[0] + p - x[1]) % p) as usize
        })
        .collect();
    Ok(ClassicalColouring::new(p as usize, colours)?)
}

/// Vertices `x` with `x_1 = x_2`: an independent set of size `p^(p-1)`.
pub fn roots_of_unity_independent_set(p: u32) -> Result<Vec<usize>, RepError> {
    check_prime_p(p)?;
    let count = (p as usize).pow(p);
    Ok((0..count)
        .filter(|&i| {
            let x = exponent_vector(p, i);
            x[0] == x[1]
        })
        .collect())
}

/// Vectors `(1, i^a, i^b, i^c)` for `a, b, c` in `0..4`, vertex `16a + 4b + c`,
/// on the Gaussian-integer backend, with their orthogonality graph.
pub fn fourth_roots_dim4_graph() -> Result<(Graph, VectorRep), RepError> {
    let powers = [
        GaussInt::new(1, 0),
        GaussInt::new(0, 1),
        GaussInt::new(-1, 0),
        GaussInt::new(0, -1),
    ];
    let vectors = (0..64)
        .map(|k| vec![powers[0], powers[k / 16], powers[(k / 4) % 4], powers[k % 4]])
        .collect();
    let rep = VectorRep::new(4, Vectors::Gauss(vectors))?;
    let g = orthogonality_graph(&rep, 0.0)?;
    Ok((g, rep))
}
