//! Hop distances with an absorbing infinity.

/// An unweighted shortest-path length. [`INF`] marks "unreachable".
pub type Dist = u32;

/// Larger than any achievable distance and absorbing under [`add`].
pub const INF: Dist = Dist::MAX;

/// Saturating sum: anything plus [`INF`] stays [`INF`].
#[inline]
pub fn add(a: Dist, b: Dist) -> Dist {
    if a == INF || b == INF {
        INF
    } else {
        a.saturating_add(b)
    }
}

#[inline]
pub fn is_finite(d: Dist) -> bool {
    d != INF
}

/// Converts to `Option`, `None` for infinity. Handy for serialization.
#[inline]
pub fn to_option(d: Dist) -> Option<Dist> {
    (d != INF).then_some(d)
}

#[inline]
pub fn from_option(d: Option<Dist>) -> Dist {
    d.unwrap_or(INF)
}

/// Formats a distance, writing `inf` for infinity.
pub fn display(d: Dist) -> String {
    if d == INF {
        "inf".to_string()
    } else {
        d.to_string()
    }
}
