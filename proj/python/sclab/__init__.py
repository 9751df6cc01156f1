"""State complexity of combined catenation and boolean operations."""

from ._sclab import (
    Dfa,
    StateLimitExceeded,
    bound,
    brzozowski,
    build,
    count_union_classes,
    is_isomorphic,
    minimize,
    saturate,
    state_complexity,
    sweep_csv,
    verify,
    witness,
    xor_demo,
)

__all__ = [
    "Dfa",
    "StateLimitExceeded",
    "bound",
    "brzozowski",
    "build",
    "count_union_classes",
    "is_isomorphic",
    "minimize",
    "saturate",
    "state_complexity",
    "sweep_csv",
    "verify",
    "witness",
    "xor_demo",
]
