"""Face-vector calculus and residual checks.

This module handles:
- f_to_h / h_to_f / g_vector: the f <-> h transform and first differences
- h_prime / h_from_h_prime / h_dprime_closed / h_dprime_boundary / gbar: Betti-corrected vectors
- pseudopower: real-x Macaulay pseudopower by monotone bisection
- ds_closed_residual / ds_boundary_residual / hprime_ds_residual / boundary_duality_residual
- macaulay_bounds, kuhnel_middle_check, kuhnel_general_check, kalai_monotonicity_check
- mk_reference / f_from_middle_betti / kalai_comparison
- hprime_surjectivity_check / hprime_growth_check / h2_boundary_check

Betti arguments are reduced Betti numbers β̃_0..β̃_{d-1} unless stated otherwise;
β̃_{-1} is taken to be 0 (every complex handed to these checks has a vertex).
"""

import math
from collections.abc import Sequence
from fractions import Fraction

from src.exceptions import (
    BadIndex,
    BettiPreconditionViolated,
    DimensionTooSmall,
    EmptyBoundary,
    LengthMismatch,
    NegativeInput,
    WrongParity,
)
from src.models.schemas import CheckReport, FaceVectorSet
from src.utils.config import settings


def binom(a: int, b: int) -> int:
    """C(a, b) for integers, zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def real_binom(x: float, k: int) -> float:
    """x(x-1)...(x-k+1)/k! for real x."""
    value = 1.0
    for t in range(k):
        value *= (x - t) / (t + 1)
    return value


def _beta(betti: Sequence[int], j: int) -> int:
    return betti[j] if 0 <= j < len(betti) else 0


def _check_length(name: str, values: Sequence, expected: int) -> None:
    if len(values) != expected:
        raise LengthMismatch(f"{name} has length {len(values)}, expected {expected}")


# ---------------------------------------------------------------------------
# Transforms
# ---------------------------------------------------------------------------


def f_to_h(f: Sequence[int], d: int) -> list[int]:
    """h_i = Σ_{j<=i} (-1)^{i-j} C(d-j, i-j) f_{j-1}, with f = (f_{-1}, ..., f_{d-1}).

    Raises:
        LengthMismatch: If len(f) != d + 1
    """
    _check_length("f", f, d + 1)
    return [
        sum((-1) ** (i - j) * binom(d - j, i - j) * f[j] for j in range(i + 1))
        for i in range(d + 1)
    ]


def h_to_f(h: Sequence[int], d: int) -> list[int]:
    """Inverse of f_to_h: f_{j-1} = Σ_{i<=j} C(d-i, j-i) h_i.

    Raises:
        LengthMismatch: If len(h) != d + 1
    """
    _check_length("h", h, d + 1)
    return [sum(binom(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1)]


def g_vector(h: Sequence[int]) -> list[int]:
    """g_0 = h_0 and g_i = h_i - h_{i-1}."""
    return [h[0]] + [h[i] - h[i - 1] for i in range(1, len(h))] if h else []


def _prime_correction(betti: Sequence[int], d: int, i: int) -> int:
    """C(d, i) Σ_{j=1}^{i-1} (-1)^{i-j-1} β̃_{j-1}."""
    total = sum((-1) ** (i - j - 1) * _beta(betti, j - 1) for j in range(1, i))
    return binom(d, i) * total


def h_prime(h: Sequence[int], betti: Sequence[int], d: int) -> list[int]:
    """h′_i = h_i + C(d,i) Σ_{j=1}^{i-1} (-1)^{i-j-1} β̃_{j-1}.

    Raises:
        LengthMismatch: If len(h) != d + 1 or len(betti) != d
    """
    _check_length("h", h, d + 1)
    _check_length("betti", betti, d)
    return [h[i] + _prime_correction(betti, d, i) for i in range(d + 1)]


def h_from_h_prime(h_prime_: Sequence[int], betti: Sequence[int], d: int) -> list[int]:
    """Undo the Betti correction of h_prime."""
    _check_length("h_prime", h_prime_, d + 1)
    _check_length("betti", betti, d)
    return [h_prime_[i] - _prime_correction(betti, d, i) for i in range(d + 1)]


def h_dprime_closed(h_prime_: Sequence[int], betti: Sequence[int], d: int) -> list[int]:
    """h″_i = h′_i - C(d,i) β̃_{i-1} for i < d and h″_d = h′_d."""
    _check_length("h_prime", h_prime_, d + 1)
    return [h_prime_[i] - binom(d, i) * _beta(betti, i - 1) for i in range(d)] + [h_prime_[d]]


def gbar(h_prime_boundary: Sequence[int], betti_boundary: Sequence[int], d: int) -> list[int]:
    """ḡ_i(∂Δ) = h′_i(∂Δ) - h′_{i-1}(∂Δ) + C(d-1, i-1) β̃_{i-2}(∂Δ) for i = 0..d.

    Args:
        h_prime_boundary: h′ of the (d-2)-dimensional boundary, length d
        betti_boundary: β̃_0..β̃_{d-2} of the boundary
        d: Facet size of Δ (not of the boundary)
    """
    _check_length("h_prime_boundary", h_prime_boundary, d)
    padded = [0] + list(h_prime_boundary) + [0]
    return [
        padded[i + 1] - padded[i] + binom(d - 1, i - 1) * _beta(betti_boundary, i - 2)
        for i in range(d + 1)
    ]


def h_dprime_boundary(
    h_prime_: Sequence[int],
    gbar_: Sequence[int],
    im_psi: Sequence[int],
    betti: Sequence[int],
    d: int,
) -> tuple[list[int], int | None]:
    """h″ of an orientable homology manifold with nonempty boundary.

    h″_i = h′_i - ḡ_i - C(d,i)·dim Im ψ_i for i <= d/2 and h″_i = h′_i - C(d,i) β̃_{i-1}
    for i > d/2. At i = d/2 (d even) both expressions are evaluated.

    Args:
        im_psi: dim Im ψ_i for i = 1..d (ψ_0 is taken to be zero)

    Returns:
        (h″, difference of the two expressions at d/2, or None for odd d)

    Raises:
        EmptyBoundary: If no ḡ data is given
    """
    if not gbar_:
        raise EmptyBoundary("h″ with boundary needs the boundary's ḡ vector")
    _check_length("h_prime", h_prime_, d + 1)
    _check_length("gbar", gbar_, d + 1)
    _check_length("im_psi", im_psi, d)

    def psi(i: int) -> int:
        return im_psi[i - 1] if i >= 1 else 0

    def lower(i: int) -> int:
        return h_prime_[i] - gbar_[i] - binom(d, i) * psi(i)

    def upper(i: int) -> int:
        return h_prime_[i] - binom(d, i) * _beta(betti, i - 1)

    values = [lower(i) if 2 * i <= d else upper(i) for i in range(d + 1)]
    midpoint = lower(d // 2) - upper(d // 2) if d % 2 == 0 else None
    return values, midpoint


# ---------------------------------------------------------------------------
# Pseudopowers
# ---------------------------------------------------------------------------


def pseudopower(m: int | float | Fraction, i: int) -> float:
    """m^{<i>}: C(x+1, i+1) for the real x > i-1 with C(x, i) = m; 0^{<i>} = 0.

    Raises:
        NegativeInput: If m < 0
        BadIndex: If i < 1
    """
    if m < 0:
        raise NegativeInput(f"pseudopower of negative value {m}")
    if i < 1:
        raise BadIndex(f"pseudopower index must be positive (got {i})")
    if m == 0:
        return 0.0
    if float(m).is_integer():
        target = int(m)
        a = i
        while math.comb(a, i) < target:
            a += 1
        if math.comb(a, i) == target:
            return float(math.comb(a + 1, i + 1))

    target_value = float(m)
    lo, hi = float(i - 1), float(i)
    while real_binom(hi, i) < target_value:
        lo, hi = hi, 2 * hi
    while hi - lo > settings.pseudopower_tolerance:
        mid = (lo + hi) / 2
        if real_binom(mid, i) < target_value:
            lo = mid
        else:
            hi = mid
    return real_binom((lo + hi) / 2 + 1, i + 1)


# ---------------------------------------------------------------------------
# Identity residuals
# ---------------------------------------------------------------------------


def ds_closed_residual(h: Sequence[int], reduced_euler_: int, d: int) -> CheckReport:
    """Dehn-Sommerville for closed homology manifolds.

    residual_i = (h_{d-i} - h_i) - (-1)^i C(d,i) ((-1)^{d-1} χ̃ - 1), i = 0..d.
    """
    _check_length("h", h, d + 1)
    residuals = [
        (h[d - i] - h[i]) - (-1) ** i * binom(d, i) * ((-1) ** (d - 1) * reduced_euler_ - 1)
        for i in range(d + 1)
    ]
    return CheckReport.from_residuals(
        "ds_closed", residuals, context={"reduced_euler": reduced_euler_, "h": list(h)}
    )


def ds_boundary_residual(
    h: Sequence[int], reduced_euler_: int, g_boundary: Sequence[int], d: int
) -> CheckReport:
    """Dehn-Sommerville for manifolds with boundary.

    residual_i = (h_{d-i} - h_i) - [C(d,i)(-1)^{d-1-i} χ̃ - g_i(∂Δ)], i = 0..d, where
    g(∂Δ) is taken over i = 0..d with h_d(∂Δ) = 0.
    """
    _check_length("h", h, d + 1)
    _check_length("g_boundary", g_boundary, d + 1)
    residuals = [
        (h[d - i] - h[i])
        - (binom(d, i) * (-1) ** (d + 1 + i) * reduced_euler_ - g_boundary[i])
        for i in range(d + 1)
    ]
    return CheckReport.from_residuals(
        "ds_boundary",
        residuals,
        context={"reduced_euler": reduced_euler_, "h": list(h), "g_boundary": list(g_boundary)},
    )


def hprime_ds_residual(h_prime_: Sequence[int], betti: Sequence[int], d: int) -> CheckReport:
    """h′_{d-i} - h′_i = C(d,i)(β̃_i - β̃_{i-1}) for 0 <= i <= d-2 (closed orientable)."""
    _check_length("h_prime", h_prime_, d + 1)
    indices = list(range(0, max(d - 1, 0)))
    residuals = [
        (h_prime_[d - i] - h_prime_[i]) - binom(d, i) * (_beta(betti, i) - _beta(betti, i - 1))
        for i in indices
    ]
    return CheckReport.from_residuals(
        "hprime_ds", residuals, indices=indices, context={"betti": list(betti)}
    )


def boundary_duality_residual(
    h_prime_: Sequence[int],
    gbar_: Sequence[int],
    im_psi: Sequence[int],
    betti: Sequence[int],
    d: int,
) -> CheckReport:
    """(h′_{d-i} - C(d,d-i) β̃_{d-i-1}) - (h′_i - ḡ_i - C(d,i) dim Im ψ_i) for 0 <= i < d."""
    _check_length("h_prime", h_prime_, d + 1)
    _check_length("gbar", gbar_, d + 1)
    _check_length("im_psi", im_psi, d)
    residuals = []
    for i in range(d):
        psi = im_psi[i - 1] if i >= 1 else 0
        left = h_prime_[d - i] - binom(d, d - i) * _beta(betti, d - i - 1)
        right = h_prime_[i] - gbar_[i] - binom(d, i) * psi
        residuals.append(left - right)
    return CheckReport.from_residuals(
        "boundary_duality",
        residuals,
        context={"gbar": list(gbar_), "im_psi": list(im_psi), "betti": list(betti)},
    )


# ---------------------------------------------------------------------------
# Inequalities
# ---------------------------------------------------------------------------


def macaulay_bounds(h_prime_: Sequence[int], betti: Sequence[int], d: int) -> CheckReport:
    """h′_i >= C(d,i) β̃_{i-1} and h′_{i+1} <= (h′_i - C(d,i) β̃_{i-1})^{<i>}.

    The first family covers 1 <= i <= d, the second 1 <= i <= d-1. Upper-bound slacks
    are real and compared with the configured guard band.
    """
    _check_length("h_prime", h_prime_, d + 1)
    guard = settings.inequality_guard_band
    lower: list[int | float] = []
    upper: list[int | float] = []
    near: list[int] = []
    for i in range(1, d + 1):
        base = h_prime_[i] - binom(d, i) * _beta(betti, i - 1)
        lower.append(base)
        if i < d:
            bound = pseudopower(base, i) if base >= 0 else float("-inf")
            slack = bound - h_prime_[i + 1]
            if 0 < abs(slack) <= guard:
                near.append(i)
            upper.append(slack)
    return CheckReport.from_residuals(
        "macaulay",
        lower + upper,
        indices=list(range(1, d + 1)) + list(range(1, d)),
        relation="ge",
        tolerance=guard,
        context={
            "bounds": ["lower"] * d + ["upper"] * (d - 1),
            "near_boundary": near,
            "betti": list(betti),
        },
    )


def kuhnel_middle_check(n: int, betti: Sequence[int], d: int) -> CheckReport:
    """C(2k+1,k) β̃_k <= C(n-k-2, k+1) for a 2k-dimensional closed orientable manifold.

    On equality, β̃_i = 0 for every i < k is asserted. When β̃_k >= 1 the
    consequence n >= 3k+3 is asserted as well.

    Raises:
        WrongParity: If d is even (the manifold is not even-dimensional)
    """
    if d % 2 == 0:
        raise WrongParity(f"middle Betti bound needs odd d (got d={d})")
    k = (d - 1) // 2
    beta_k = _beta(betti, k)
    slack = binom(n - k - 2, k + 1) - binom(2 * k + 1, k) * beta_k
    assertions: dict[str, bool] = {}
    if slack == 0:
        assertions["lower_betti_vanish"] = all(_beta(betti, i) == 0 for i in range(k))
    if beta_k >= 1:
        assertions["vertex_count_at_least_3k_plus_3"] = n >= 3 * k + 3
    return CheckReport.from_residuals(
        "kuhnel_middle",
        [slack],
        indices=[k],
        relation="ge",
        assertions=assertions,
        context={"n": n, "k": k, "beta_k": beta_k, "equality": slack == 0},
    )


def kuhnel_general_check(
    n: int, betti: Sequence[int], d: int, j: int, neighborly: int | None = None
) -> CheckReport:
    """C(d+1, j+1) β̃_j <= C(n-d+j-1, j+1) for 0 <= j <= ⌊d/2⌋-1.

    The bound is proved when every vertex link has the hard Lefschetz property.
    On equality, β̃_i = 0 for the other i in range is asserted, and when the
    neighborliness of Δ is supplied, Δ being (j+1)-neighborly is asserted too.

    Raises:
        BadIndex: If j is out of range
    """
    top = d // 2 - 1
    if not 0 <= j <= top:
        raise BadIndex(f"j={j} outside [0, {top}]")
    slack = binom(n - d + j - 1, j + 1) - binom(d + 1, j + 1) * _beta(betti, j)
    assertions: dict[str, bool] = {}
    if slack == 0:
        assertions["other_betti_vanish"] = all(
            _beta(betti, i) == 0 for i in range(top + 1) if i != j
        )
        if neighborly is not None:
            assertions["neighborly"] = neighborly >= j + 1
    return CheckReport.from_residuals(
        "kuhnel_general",
        [slack],
        indices=[j],
        relation="ge",
        assertions=assertions,
        context={"n": n, "d": d, "equality": slack == 0},
    )


def kalai_monotonicity_check(h_dprime: Sequence[int], betti: Sequence[int], d: int) -> CheckReport:
    """(h″_{j+1} - h″_j) - C(d,j) β̃_j >= 0 for 0 <= j <= ⌊d/2⌋-1."""
    _check_length("h_dprime", h_dprime, d + 1)
    indices = list(range(0, d // 2))
    slacks = [
        (h_dprime[j + 1] - h_dprime[j]) - binom(d, j) * _beta(betti, j) for j in indices
    ]
    return CheckReport.from_residuals("kalai_monotonicity", slacks, indices=indices, relation="ge")


def hprime_surjectivity_check(h_prime_: Sequence[int], betti: Sequence[int], d: int) -> CheckReport:
    """h′_{d-j} <= h′_{d-j-1} - C(d, d-j-1) β̃_{d-j-2} for 0 <= j <= ⌊d/2⌋-1."""
    _check_length("h_prime", h_prime_, d + 1)
    indices = list(range(0, d // 2))
    slacks = [
        h_prime_[d - j - 1] - binom(d, d - j - 1) * _beta(betti, d - j - 2) - h_prime_[d - j]
        for j in indices
    ]
    return CheckReport.from_residuals("hprime_surjectivity", slacks, indices=indices, relation="ge")


def hprime_growth_check(h_prime_: Sequence[int], betti: Sequence[int], d: int) -> CheckReport:
    """C(d+1, j+1) β̃_j <= h′_{j+1} - (h′_j - C(d,j) β̃_{j-1}) for 0 <= j <= ⌊d/2⌋-1."""
    _check_length("h_prime", h_prime_, d + 1)
    indices = list(range(0, d // 2))
    slacks = [
        h_prime_[j + 1]
        - (h_prime_[j] - binom(d, j) * _beta(betti, j - 1))
        - binom(d + 1, j + 1) * _beta(betti, j)
        for j in indices
    ]
    return CheckReport.from_residuals("hprime_growth", slacks, indices=indices, relation="ge")


def h2_boundary_check(
    h2: int,
    interior_vertices: int,
    beta1_boundary: int,
    beta0_boundary: int,
    d: int,
    characteristic: int,
) -> CheckReport:
    """h_2 >= f_0° + C(d,2) β̃_1(∂Δ) + d β̃_0(∂Δ) for d >= 5.

    For d = 4 the bound reads h_2 >= f_0° + 3 β̃_1(∂Δ) + 4 β̃_0(∂Δ) and is only
    available in characteristic two.

    Raises:
        DimensionTooSmall: If d < 4, or d = 4 over a field of odd characteristic
    """
    if d < 4:
        raise DimensionTooSmall(f"boundary h_2 bound needs d >= 4 (got {d})")
    if d == 4:
        if characteristic != 2:
            raise DimensionTooSmall("boundary h_2 bound with d = 4 needs characteristic 2")
        coefficients = (3, 4)
    else:
        coefficients = (binom(d, 2), d)
    bound = interior_vertices + coefficients[0] * beta1_boundary + coefficients[1] * beta0_boundary
    slack = h2 - bound
    return CheckReport.from_residuals(
        "h2_boundary",
        [slack],
        indices=[2],
        relation="ge",
        context={
            "h2": h2,
            "interior_vertices": interior_vertices,
            "beta1_boundary": beta1_boundary,
            "beta0_boundary": beta0_boundary,
            "equality": slack == 0,
        },
    )


# ---------------------------------------------------------------------------
# Minimal 2k-manifolds with one middle Betti number
# ---------------------------------------------------------------------------


def reference_h_prime_low(k: int) -> list[int]:
    """h′_0..h′_k of the minimal reference manifold: C(k+1+i, i)."""
    return [binom(k + 1 + i, i) for i in range(k + 1)]


def mk_reference(k: int) -> FaceVectorSet:
    """Face numbers of a (3k+3)-vertex 2k-manifold with β̃_k = 1 and β̃_i = 0 for 0 <= i < k.

    h′_i = C(k+1+i, i) for i <= k+1; the remaining entries follow from the
    h′ Dehn-Sommerville relation, then h and f from the Betti correction and the
    h -> f transform.

    Raises:
        BadIndex: If k < 1
    """
    if k < 1:
        raise BadIndex(f"k must be >= 1 (got {k})")
    d = 2 * k + 1
    betti = [0] * d
    betti[k] = 1
    betti[d - 1] = 1
    hp = reference_h_prime_low(k) + [0] * (d - k)
    for i in range(k + 1):
        hp[d - i] = hp[i] + binom(d, i) * (_beta(betti, i) - _beta(betti, i - 1))
    h = h_from_h_prime(hp, betti, d)
    f = h_to_f(h, d)
    return FaceVectorSet(
        d=d,
        field="any",
        f=f,
        h=h,
        g=g_vector(h),
        f_interior=f,
        h_interior=h,
        betti=betti,
        h_prime=hp,
        h_dprime=h_dprime_closed(hp, betti, d),
    )


def f_from_middle_betti(
    h_prime_low: Sequence[int], beta_k: int, k: int
) -> tuple[list[int], list[int]]:
    """Reconstruct f_{-1}..f_{2k} of a 2k-manifold with β̃_l = 0 for l < k.

    For i <= k, f_{i-1} = Σ_{j<=i} C(2k+1-j, 2k+1-i) h′_j. For i >= k+1 the sum runs
    over j <= k with coefficient C(2k+1-j, 2k+1-i) + C(j, 2k+1-i), plus β̃_k times
    Σ_{j=0}^{i-k-1} (-1)^j C(k-j, 2k+1-i) C(2k+1, k-j).

    Args:
        h_prime_low: h′_0..h′_k

    Returns:
        (f, coefficients of β̃_k for i = k+1..2k+1)
    """
    _check_length("h_prime_low", h_prime_low, k + 1)
    top = 2 * k + 1
    f = [1]
    coefficients = []
    for i in range(1, top + 1):
        if i <= k:
            value = sum(binom(top - j, top - i) * h_prime_low[j] for j in range(i + 1))
        else:
            value = sum(
                (binom(top - j, top - i) + binom(j, top - i)) * h_prime_low[j]
                for j in range(k + 1)
            )
            coefficient = sum(
                (-1) ** j * binom(k - j, top - i) * binom(top, k - j) for j in range(i - k)
            )
            coefficients.append(coefficient)
            value += beta_k * coefficient
        f.append(value)
    return f, coefficients


def kalai_comparison(f: Sequence[int], betti: Sequence[int], k: int) -> CheckReport:
    """f_{i-1}(Δ) - f_{i-1}(M_k) >= 0 for 1 <= i <= 2k+1.

    Raises:
        BettiPreconditionViolated: Unless β̃_l = 0 for l < k and β̃_k >= 1
        LengthMismatch: If f is not f_{-1}..f_{2k}
    """
    if any(_beta(betti, i) for i in range(k)) or _beta(betti, k) < 1:
        raise BettiPreconditionViolated(
            f"need β̃_l = 0 for l < {k} and β̃_{k} >= 1 (got {list(betti)})"
        )
    _check_length("f", f, 2 * k + 2)
    reference = mk_reference(k).f
    slacks = [f[i] - reference[i] for i in range(1, 2 * k + 2)]
    _, coefficients = f_from_middle_betti(reference_h_prime_low(k), 1, k)
    return CheckReport.from_residuals(
        "kalai_comparison",
        slacks,
        indices=list(range(1, 2 * k + 2)),
        relation="ge",
        assertions={"betti_coefficients_nonnegative": all(c >= 0 for c in coefficients)},
        context={"k": k, "reference_f": reference},
    )
