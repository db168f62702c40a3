"""Pydantic models for type-safe data validation and serialization.

These models represent the core data structures used throughout the toolkit:
complexes, fields, and the reports produced by the checkers.
"""

import re
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.utils.config import settings
from src.utils.modular import is_irreducible, is_prime

Face = tuple[int, ...]

FIELD_SPEC_PATTERN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def field_size_problem(p: int, m: int) -> str | None:
    """Why GF(p^m) is outside the supported sizes, or None.

    Runs before any primality test so oversized input is rejected cheaply.
    """
    if m < 1:
        return f"extension degree must be >= 1 (got {m})"
    if m == 1:
        if p > settings.max_prime:
            return f"prime {p} exceeds the supported maximum {settings.max_prime}"
        return None
    cap = settings.max_extension_field_size
    # p >= 2, so p^m >= 2^m
    if m >= cap.bit_length() or p > cap or p**m > cap:
        return f"GF({p}^{m}) exceeds the supported size {cap}"
    return None


class SimplicialComplex(BaseModel):
    """Finite abstract simplicial complex in canonical facet form.

    Vertices carry dense ids 1..n; `labels[i - 1]` is the original label of id i.
    Facets are sorted vertex-id tuples, inclusion-maximal, in lexicographic order.
    A complex with no facets is the complex {∅} (n = 0, d = 0).
    """

    model_config = ConfigDict(frozen=True)

    facets: tuple[Face, ...] = Field(..., description="Inclusion-maximal faces, lex sorted")
    n: int = Field(..., ge=0, description="Number of vertices")
    d: int = Field(..., ge=0, description="Largest facet size (dimension is d - 1)")
    labels: tuple[int, ...] = Field(..., description="Original label of each vertex id")

    @model_validator(mode="after")
    def check_canonical(self) -> "SimplicialComplex":
        """Enforce the canonical-form invariants."""
        if len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")
        if any(label <= 0 for label in self.labels):
            raise ValueError("labels must be positive")
        if any(a >= b for a, b in zip(self.labels, self.labels[1:])):
            raise ValueError("labels must be strictly increasing")
        if list(self.facets) != sorted(self.facets):
            raise ValueError("facets must be in lexicographic order")
        used: set[int] = set()
        for facet in self.facets:
            if not facet or any(a >= b for a, b in zip(facet, facet[1:])):
                raise ValueError(f"facet {facet} is not a strictly increasing nonempty tuple")
            if facet[0] < 1 or facet[-1] > self.n:
                raise ValueError(f"facet {facet} uses ids outside 1..{self.n}")
            used.update(facet)
        if len(used) != self.n:
            raise ValueError("every vertex id must lie in some facet")
        expected_d = max((len(f) for f in self.facets), default=0)
        if self.d != expected_d:
            raise ValueError(f"d must be the largest facet size {expected_d}")
        sets = [frozenset(f) for f in self.facets]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    raise ValueError(f"facet {self.facets[i]} is not inclusion-maximal")
        return self

    @property
    def dim(self) -> int:
        return self.d - 1

    @property
    def label_map(self) -> dict[int, int]:
        """Original label -> dense vertex id."""
        return {label: i + 1 for i, label in enumerate(self.labels)}


class FieldSpec(BaseModel):
    """Finite field GF(p^m) given by a monic irreducible modulus over GF(p).

    Elements are encoded as integers in [0, p^m) whose base-p digits are the
    coefficients of a polynomial of degree < m. For m = 1 the modulus is x.
    """

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=2, description="Characteristic")
    m: int = Field(default=1, ge=1, description="Extension degree")
    modulus: tuple[int, ...] = Field(
        default=(0, 1),
        description="Monic irreducible polynomial, lowest coefficient first"
    )

    @field_validator("p")
    @classmethod
    def p_must_be_prime(cls, v: int) -> int:
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        return v

    @model_validator(mode="after")
    def modulus_must_be_irreducible(self) -> "FieldSpec":
        if len(self.modulus) != self.m + 1 or self.modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.m}")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {self.p})")
        if self.m > 1 and not is_irreducible(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over GF({self.p})")
        return self

    @property
    def q(self) -> int:
        return self.p**self.m

    def __str__(self) -> str:
        return str(self.p) if self.m == 1 else f"{self.p}^{self.m}"


class BettiProfile(BaseModel):
    """Betti numbers of a complex, its boundary, and the pair."""

    field: str
    beta: list[int] = Field(..., description="Reduced Betti numbers for degrees -1..d-1")
    beta_relative: list[int] = Field(
        default_factory=list,
        description="Relative Betti numbers of (Δ, ∂Δ) for degrees 0..d-1 (empty when closed)"
    )
    beta_boundary: list[int] = Field(
        default_factory=list,
        description="Reduced Betti numbers of ∂Δ for degrees -1..d-2 (empty when closed)"
    )
    im_psi: list[int] = Field(
        default_factory=list,
        description="dim Im(H_{i-1}(Δ) -> H_{i-1}(Δ, ∂Δ)) for i = 1..d"
    )

    @field_validator("beta", "beta_relative", "beta_boundary", "im_psi")
    @classmethod
    def must_be_nonnegative(cls, v: list[int]) -> list[int]:
        if any(b < 0 for b in v):
            raise ValueError("Betti numbers are nonnegative")
        return v

    def reduced(self, i: int) -> int:
        """β̃_i, zero outside the stored range."""
        k = i + 1
        return self.beta[k] if 0 <= k < len(self.beta) else 0


class FaceVectorSet(BaseModel):
    """Face numbers of a complex; every vector is indexed from its 0th entry.

    `f` runs over f_{-1}..f_{d-1}; h-type vectors run over 0..d.
    """

    d: int
    field: str
    f: list[int]
    h: list[int]
    g: list[int]
    f_interior: list[int]
    h_interior: list[int]
    betti: list[int] = Field(..., description="β̃_0..β̃_{d-1}")
    h_prime: list[int]
    h_dprime: list[int] | None = None
    gbar: list[int] | None = None

    @model_validator(mode="after")
    def lengths_match_dimension(self) -> "FaceVectorSet":
        for name in ("f", "h", "g", "f_interior", "h_interior", "h_prime"):
            if len(getattr(self, name)) != self.d + 1:
                raise ValueError(f"{name} must have length d + 1 = {self.d + 1}")
        if self.f and self.f[0] != 1:
            raise ValueError("f_{-1} must be 1")
        return self


class CheckReport(BaseModel):
    """Outcome of one identity or inequality check.

    For relation "eq" every residual must be 0; for "ge" every residual is a
    slack that must be >= -tolerance. Named assertions must all hold.
    """

    name: str
    passed: bool = Field(..., serialization_alias="pass")
    relation: Literal["eq", "ge"] = "eq"
    indices: list[int] = Field(default_factory=list)
    residuals: list[int | float] = Field(default_factory=list)
    assertions: dict[str, bool] = Field(default_factory=dict)
    context: dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_residuals(
        cls,
        name: str,
        residuals: list[int | float],
        indices: list[int] | None = None,
        relation: Literal["eq", "ge"] = "eq",
        tolerance: float = 0.0,
        assertions: dict[str, bool] | None = None,
        context: dict[str, Any] | None = None,
    ) -> "CheckReport":
        if relation == "eq":
            residual_ok = all(abs(r) <= tolerance for r in residuals)
        else:
            residual_ok = all(r >= -tolerance for r in residuals)
        assertions = assertions or {}
        return cls(
            name=name,
            passed=residual_ok and all(assertions.values()),
            relation=relation,
            indices=list(indices) if indices is not None else list(range(len(residuals))),
            residuals=list(residuals),
            assertions=assertions,
            context=context or {},
        )


class Witness(BaseModel):
    """A face whose link violates the manifold condition."""

    face: Face = Field(..., description="Face in original labels")
    degree: int = Field(..., description="Offending homology degree of the link")
    reason: str = ""


class ManifoldReport(BaseModel):
    """Homology-manifold verdict for a complex over one field."""

    field: str
    is_manifold: bool
    pure: bool
    boundary: SimplicialComplex
    boundary_is_closed_manifold: bool
    connected: bool
    orientable: bool
    witnesses: list[Witness] = Field(default_factory=list)

    @property
    def closed(self) -> bool:
        return self.boundary.n == 0


class GradedQuotient(BaseModel):
    """Graded dimensions of k[Δ]/(θ_1..θ_r) for generic linear forms.

    `forms` holds the coefficient rows (one per form, indexed by vertex id - 1).
    `omega`, when present, is an extra generic form kept out of the quotient.
    """

    complex: SimplicialComplex
    field: FieldSpec
    seed: int = Field(..., ge=0)
    attempts: int = Field(default=1, ge=1)
    forms: list[list[int]]
    omega: list[int] | None = None
    dims: list[int] = Field(..., description="dim of the quotient in degrees 0..max_degree")
    lsop_certificate: bool = Field(
        default=False,
        description="Every facet column block of the first d forms has full rank"
    )

    @model_validator(mode="after")
    def field_is_large_enough(self) -> "GradedQuotient":
        if self.field.q < 2**16:
            raise ValueError("graded quotients need |k| >= 2^16")
        if self.dims and self.dims[0] != 1:
            raise ValueError("degree-0 piece must be one-dimensional")
        return self

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1


class RigidityReport(BaseModel):
    """Step-by-step injectivity of ·θ_i from degree 1 to degree 2."""

    field: str
    seed: int
    rigid: bool
    step_ranks: list[int]
    step_kernels: list[int]
    first_failing_step: int | None = None
    dim2_after_d: int
    dim2_after_d_plus_1: int


class UnionRigidityReport(BaseModel):
    """Measured versus predicted dimensions for a disjoint union of rigid complexes."""

    components: int
    dim2: int
    expected_dim2: int
    omega_kernel: int
    expected_omega_kernel: int

    @property
    def passed(self) -> bool:
        return self.dim2 == self.expected_dim2 and self.omega_kernel == self.expected_omega_kernel


class FixtureEntry(BaseModel):
    """A catalog fixture with its documented invariants."""

    name: str
    filename: str
    description: str
    fields: list[str] = Field(..., min_length=1)
    betti: dict[str, list[int]] = Field(
        ...,
        description="Field string -> reduced Betti numbers for degrees -1..d-1"
    )


class RunConfig(BaseModel):
    """Validated CLI invocation."""

    command: Literal["info", "vectors", "check", "gen", "catalog"]
    inputs: list[str] = Field(default_factory=list)
    field: str = "2"
    seed: int = Field(default=0, ge=0)
    output_format: Literal["json", "text"] = "json"
    output: str | None = None

    @field_validator("field")
    @classmethod
    def field_must_parse(cls, v: str) -> str:
        match = FIELD_SPEC_PATTERN.match(v)
        if not match:
            raise ValueError(f"field must be p or p^m with p prime (got '{v}')")
        p_text, m_text = match.group(1), match.group(2) or "1"
        if len(p_text) > len(str(settings.max_prime)) or len(m_text) > 3:
            raise ValueError(f"field '{v}' exceeds the supported sizes")
        problem = field_size_problem(int(p_text), int(m_text))
        if problem:
            raise ValueError(problem)
        if not is_prime(int(p_text)):
            raise ValueError(f"field must be p or p^m with p prime (got '{v}')")
        return v.replace(" ", "")


class RunReport(BaseModel):
    """Top-level JSON document emitted by the CLI."""

    command: str
    kind: str | None = None
    input: str | None = None
    field: str | None = None
    seed: int | None = None
    passed: bool = Field(..., serialization_alias="pass")
    checks: list[CheckReport] = Field(default_factory=list)
    data: dict[str, Any] = Field(default_factory=dict)
