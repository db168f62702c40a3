"""Data models and schemas for the toolkit."""

from src.models.schemas import (
    BettiProfile,
    CheckReport,
    Face,
    FaceVectorSet,
    FieldSpec,
    FixtureEntry,
    GradedQuotient,
    ManifoldReport,
    RigidityReport,
    RunConfig,
    RunReport,
    SimplicialComplex,
    UnionRigidityReport,
    Witness,
)

__all__ = [
    "BettiProfile",
    "CheckReport",
    "Face",
    "FaceVectorSet",
    "FieldSpec",
    "FixtureEntry",
    "GradedQuotient",
    "ManifoldReport",
    "RigidityReport",
    "RunConfig",
    "RunReport",
    "SimplicialComplex",
    "UnionRigidityReport",
    "Witness",
]
