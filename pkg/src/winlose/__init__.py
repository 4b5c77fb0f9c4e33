"""Exact Nash equilibria for win-lose bimatrix games via strategy-graph cycles."""

from .errors import (
    Disconnected,
    GuaranteeViolation,
    NotACycle,
    NotBiconnected,
    ParseError,
    ShapeMismatch,
    StitchDirectionMismatch,
    StitchSelectionFailed,
    StitchVerificationError,
    SubdividedCycle,
    TooLarge,
    UnsupportedComponent,
    WinLoseError,
)
from .fileio import parse_game, parse_profile, write_game, write_profile
from .game import (
    DirectedCycle,
    GameGraph,
    MixedProfile,
    Side,
    VerificationReport,
    Vertex,
    WinLoseGame,
    build_graph,
    cycle_to_profile,
    expected_payoffs,
    pure_profile,
    verify_nash,
)
from .generate import generate
from .oracle import OracleResult, solve_bruteforce
from .pipeline import SolveResult, solve_game

__all__ = [
    "Disconnected",
    "DirectedCycle",
    "GameGraph",
    "GuaranteeViolation",
    "MixedProfile",
    "NotACycle",
    "NotBiconnected",
    "OracleResult",
    "ParseError",
    "ShapeMismatch",
    "Side",
    "SolveResult",
    "StitchDirectionMismatch",
    "StitchSelectionFailed",
    "StitchVerificationError",
    "SubdividedCycle",
    "TooLarge",
    "UnsupportedComponent",
    "VerificationReport",
    "Vertex",
    "WinLoseError",
    "WinLoseGame",
    "build_graph",
    "cycle_to_profile",
    "expected_payoffs",
    "generate",
    "parse_game",
    "parse_profile",
    "pure_profile",
    "solve_bruteforce",
    "solve_game",
    "verify_nash",
    "write_game",
    "write_profile",
]
