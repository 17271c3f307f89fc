"""Closed-form path counts for perfect m-ary trees.

Every function returns an exact Python ``int``. Half-integer coefficients are
computed numerator-first and divided with :func:`exact_div`, which raises
:class:`ExactDivisionError` instead of rounding.

Two families are provided for both tree kinds:

* ``*_prop`` -- piecewise forms indexed by ``k = ceil(t/2)``; total in ``t``
  (zero past the diameter).
* ``*_theorem`` -- compact forms written in terms of vertex counts; defined
  only for ``1 <= t <= diameter``.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass

__all__ = [
    "ExactDivisionError",
    "RootedShape",
    "UnrootedShape",
    "exact_div",
    "geom_sum",
    "vr",
    "vu",
    "type_path_count",
    "rooted_count_prop",
    "rooted_count_theorem",
    "unrooted_count_prop",
    "unrooted_count_theorem",
    "bridge_path_count",
    "half_depths",
    "dejong_binary",
    "unrooted_leaf_count",
    "pair_total",
]


class ExactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder."""


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ExactDivisionError(f"{num} is not divisible by {den}")
    return q


def _as_int(value, name: str) -> int:
    if isinstance(value, bool):
        raise TypeError(f"{name} must be an integer, not bool")
    try:
        return operator.index(value)
    except TypeError:
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}") from None


def _check_m(m) -> int:
    m = _as_int(m, "m")
    if m < 2:
        raise ValueError(f"branching factor m must be >= 2, got {m}")
    return m


def _check_t(t) -> int:
    t = _as_int(t, "t")
    if t < 1:
        raise ValueError(f"path length t must be >= 1, got {t}")
    return t


@dataclass(frozen=True)
class RootedShape:
    """Perfect rooted m-ary tree of depth ``r`` (root degree m)."""

    m: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "m", _check_m(self.m))
        r = _as_int(self.r, "r")
        if r < 0:
            raise ValueError(f"depth r must be >= 0, got {r}")
        object.__setattr__(self, "r", r)

    @property
    def diameter(self) -> int:
        return 2 * self.r


@dataclass(frozen=True)
class UnrootedShape:
    """Perfect unrooted m-ary tree of diameter ``D`` (all degrees 1 or m+1)."""

    m: int
    D: int

    def __post_init__(self):
        object.__setattr__(self, "m", _check_m(self.m))
        D = _as_int(self.D, "D")
        if D < 0:
            raise ValueError(f"diameter D must be >= 0, got {D}")
        object.__setattr__(self, "D", D)

    @property
    def diameter(self) -> int:
        return self.D

    @property
    def r(self) -> int:
        """Half-depth: ``D = 2r - 1`` for odd D, ``D = 2r`` for even D."""
        return (self.D + 1) // 2 if self.D % 2 else self.D // 2


def geom_sum(m: int, a: int, b: int) -> int:
    """Return ``m**a + m**(a+1) + ... + m**b`` (zero when ``b < a``)."""
    m = _check_m(m)
    a, b = _as_int(a, "a"), _as_int(b, "b")
    if a < 0:
        raise ValueError(f"lower exponent must be >= 0, got {a}")
    if b < a:
        return 0
    return exact_div(m ** (b + 1) - m**a, m - 1)


def vr(m: int, d: int) -> int:
    """Vertex count of the perfect rooted m-ary tree of depth ``d``."""
    m = _check_m(m)
    d = _as_int(d, "d")
    if d < 0:
        raise ValueError(f"depth must be >= 0, got {d}")
    return exact_div(m ** (d + 1) - 1, m - 1)


def vu(m: int, d: int) -> int:
    """Vertex count of the perfect unrooted m-ary tree of diameter ``d``."""
    m = _check_m(m)
    d = _as_int(d, "d")
    if d < 0:
        raise ValueError(f"diameter must be >= 0, got {d}")
    if d % 2:
        return exact_div(2 * m ** ((d + 1) // 2) - 2, m - 1)
    return exact_div((m + 1) * m ** (d // 2) - 2, m - 1)


def type_path_count(shape: RootedShape, s: int, t: int) -> int:
    """Number of type-[s, t-s] paths whose top vertex is the root.

    Such a path descends ``s`` edges on one side of the root and ``t - s`` on
    the other, so it fits only when ``t - s <= r``.
    """
    t = _check_t(t)
    s = _as_int(s, "s")
    if not 0 <= s <= t // 2:
        raise ValueError(f"type index s must lie in [0, {t // 2}], got {s}")
    m, r = shape.m, shape.r
    if r < t - s:
        return 0
    if s == 0:
        return m**t
    if 2 * s < t:
        return (m - 1) * m ** (t - 1)
    return exact_div((m - 1) * m ** (t - 1), 2)


# Piecewise pieces of the rooted counts, kept separate so the tests can check
# that adjacent branches join up.

def _rooted_odd(m: int, r: int, k: int, *, long_branch: bool) -> int:
    tail = k if long_branch else r - k + 2
    return m ** (2 * k - 2) * (geom_sum(m, 0, r - k + 1) - tail)


def _rooted_even(m: int, r: int, k: int, *, long_branch: bool) -> int:
    tail = k if long_branch else r - k + 1
    # (m+1) * geom_sum alone can be odd (m=2, r=k); the m**(2k-1) factor
    # restores evenness, so halve only after multiplying it in
    scale = m ** (2 * k - 1)
    return exact_div(scale * (m + 1) * geom_sum(m, 0, r - k), 2) - tail * scale


def rooted_count_prop(shape: RootedShape, t: int) -> int:
    """Paths of length ``t`` in the perfect rooted tree; 0 when ``t > 2r``."""
    t = _check_t(t)
    m, r = shape.m, shape.r
    if t > 2 * r:
        return 0
    k = (t + 1) // 2
    if t % 2:
        return _rooted_odd(m, r, k, long_branch=r >= 2 * k - 1)
    return _rooted_even(m, r, k, long_branch=r >= 2 * k)


def rooted_count_theorem(shape: RootedShape, t: int) -> int:
    """Same count as :func:`rooted_count_prop`, via ``vr``; needs ``1 <= t <= 2r``."""
    t = _check_t(t)
    m, r = shape.m, shape.r
    if t > 2 * r:
        raise ValueError(f"t must lie in [1, {2 * r}] for depth {r}, got {t}")
    if t % 2:
        h = (t - 1) // 2
        head = m**h * (vr(m, r) - vr(m, h))
        tail = h if t <= r else r - h
    else:
        h = t // 2 - 1
        head = exact_div((m + 1) * m**h * (vr(m, r) - vr(m, h)), 2)
        tail = t // 2 if t <= r else r - t // 2 + 1
    return head - tail * m ** (t - 1)


def half_depths(shape: UnrootedShape) -> tuple[int, int]:
    """Depths of the two rooted halves joined by the bridge edge (D >= 1)."""
    if shape.D == 0:
        raise ValueError("a single-vertex tree has no bridge edge")
    r = shape.r
    return (r - 1, r - 1) if shape.D % 2 else (r, r - 1)


def unrooted_count_prop(shape: UnrootedShape, t: int) -> int:
    """Paths of length ``t`` in the perfect unrooted tree; 0 when ``t > D``."""
    t = _check_t(t)
    m, D = shape.m, shape.D
    if t > D:
        return 0
    r, k = shape.r, (t + 1) // 2
    if D % 2:
        if t % 2:
            return exact_div(m ** (2 * k - 2) * (2 * m ** (r - k + 1) - (m + 1)), m - 1)
        return exact_div(m ** (2 * k - 1) * ((m + 1) * m ** (r - k) - (m + 1)), m - 1)
    if t % 2:
        return exact_div(m ** (2 * k - 2) * ((m + 1) * m ** (r - k + 1) - (m + 1)), m - 1)
    num = m ** (2 * k - 1) * ((m + 1) ** 2 * m ** (r - k) - 2 * (m + 1))
    return exact_div(num, 2 * (m - 1))


def unrooted_count_theorem(shape: UnrootedShape, t: int) -> int:
    """Same count as :func:`unrooted_count_prop`, via ``vu``; needs ``1 <= t <= D``."""
    t = _check_t(t)
    m, D = shape.m, shape.D
    if t > D:
        raise ValueError(f"t must lie in [1, {D}] for diameter {D}, got {t}")
    # t = 1 relies on vu(m, 0) == 1
    spread = vu(m, D) - vu(m, t - 1)
    if t % 2:
        return m ** ((t - 1) // 2) * spread
    return exact_div((m + 1) * m ** (t // 2 - 1) * spread, 2)


def bridge_path_count(shape: UnrootedShape, t: int) -> int:
    """Paths of length ``t`` that use the central edge joining the two halves."""
    t = _check_t(t)
    m, D = shape.m, shape.D
    if D == 0:
        raise ValueError("a single-vertex tree has no bridge edge")
    r, k = shape.r, (t + 1) // 2
    if D % 2:
        if t % 2:
            if r < k:
                return 0
            width = 2 * r - 2 * k + 1 if r < 2 * k - 1 else 2 * k - 1
            return width * m ** (2 * k - 2)
        if r <= k:
            return 0
        width = 2 * r - 2 * k if r <= 2 * k else 2 * k
        return width * m ** (2 * k - 1)
    if r < k:
        return 0
    if t % 2:
        width = 2 * r - 2 * k + 2 if r < 2 * k - 1 else 2 * k - 1
        return width * m ** (2 * k - 2)
    width = 2 * r - 2 * k + 1 if r < 2 * k else 2 * k
    return width * m ** (2 * k - 1)


def unrooted_leaf_count(shape: UnrootedShape) -> int:
    """Degree-1 vertex count of the perfect unrooted tree (D >= 1)."""
    m, D = shape.m, shape.D
    if D == 0:
        raise ValueError("a single-vertex tree has no degree-1 vertices")
    r = shape.r
    if D % 2:
        return 2 * m ** (r - 1)
    return m**r + m ** (r - 1)


def dejong_binary(n: int, t: int, D: int) -> int:
    """Binary-tree path count written in terms of the leaf count ``n``.

    Valid for ``3 <= t <= D`` on the perfect unrooted binary tree of diameter
    ``D``; ``n`` must be that tree's leaf count.
    """
    n, t, D = _as_int(n, "n"), _check_t(t), _as_int(D, "D")
    if D < 3:
        raise ValueError(f"diameter must be >= 3, got {D}")
    if not 3 <= t <= D:
        raise ValueError(f"t must lie in [3, {D}], got {t}")
    expected = unrooted_leaf_count(UnrootedShape(2, D))
    if n != expected:
        raise ValueError(f"leaf count {n} does not match diameter {D} (expected {expected})")
    if t % 2:
        return 2 ** ((t + 1) // 2) * (n - 3 * 2 ** ((t - 3) // 2))
    return 3 * 2 ** (t // 2 - 1) * (n - 2 ** (t // 2))


def pair_total(n: int) -> int:
    """Unordered vertex pairs among ``n`` vertices."""
    n = _as_int(n, "n")
    if n < 0:
        raise ValueError(f"vertex count must be >= 0, got {n}")
    return n * (n - 1) // 2
