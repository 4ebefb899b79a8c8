//! Shared fixtures for the benchmark targets; see `benches/kernels.rs`.

use codepth3::koszul::RingPresentation;

/// `(xy, xz)` in three variables over the rationals: the smallest
/// positive-depth corpus member, exercising the depth certificates.
pub fn wxwy() -> RingPresentation {
    RingPresentation::parse("ring v1\nfield 0\nvars 3\ngen 1:1,1,0\ngen 1:1,0,1\n")
        .expect("fixture parses")
}

/// `x(x,y,z)^2`: six cubics, a Golod quotient with two-dimensional
/// parameter space, the heaviest classify fixture in the corpus.
pub fn golod_w() -> RingPresentation {
    RingPresentation::parse(concat!(
        "ring v1\nfield 0\nvars 3\n",
        "gen 1:3,0,0\ngen 1:2,1,0\ngen 1:2,0,1\n",
        "gen 1:1,2,0\ngen 1:1,1,1\ngen 1:1,0,2\n"
    ))
    .expect("fixture parses")
}
