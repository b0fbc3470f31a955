"""Registration of identity checks.

Each check is a function of a ``CheckContext`` that returns the largest
residual it observed. Checks register themselves with the ``check`` decorator
when their suite module is imported; the suite is the prefix of the name.
"""

import importlib
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from src.qcore.schemas import QContext
from src.shared.logging import get_logger
from src.verify.schemas import SUITES, Suite


logger = get_logger(__name__)


@dataclass(frozen=True)
class CheckContext:
    """What a check may depend on: the context, the grid anchor and its own seeded generator."""

    ctx: QContext
    gamma: float
    rng: np.random.Generator


CheckFunction = Callable[[CheckContext], float]


@dataclass(frozen=True)
class RegisteredCheck:
    name: str
    suite: Suite
    tol: float
    func: CheckFunction


_REGISTRY: dict[str, RegisteredCheck] = {}


def check(name: str, *, tol: float) -> Callable[[CheckFunction], CheckFunction]:
    """Register ``func`` under ``name`` ("<suite>.<identity>") with nominal tolerance ``tol``.

    Raises:
        ValueError: If the suite prefix is unknown or the name is taken.
    """
    suite = name.split(".", 1)[0]
    if suite not in SUITES:
        msg = f"check {name!r} does not start with a known suite"
        raise ValueError(msg)
    if name in _REGISTRY:
        msg = f"check {name!r} is already registered"
        raise ValueError(msg)

    def decorator(func: CheckFunction) -> CheckFunction:
        _REGISTRY[name] = RegisteredCheck(name=name, suite=suite, tol=tol, func=func)  # type: ignore[arg-type]
        return func

    return decorator


def load_suites() -> None:
    """Import every suite module so that its checks are registered."""
    for suite in SUITES:
        importlib.import_module(f"src.verify.checks.{suite}")


def checks_for(suite: Suite | None = None) -> list[RegisteredCheck]:
    """Registered checks of one suite (all suites for None), sorted by name."""
    load_suites()
    selected = [c for c in _REGISTRY.values() if suite is None or c.suite == suite]
    logger.debug("checks_selected", suite=suite or "all", count=len(selected))
    return sorted(selected, key=lambda c: c.name)


def rel_gap(actual: complex, expected: complex, scale: float = 0.0) -> float:
    """|actual - expected| relative to the larger of the two magnitudes and ``scale``."""
    size = max(abs(actual), abs(expected), scale)
    return abs(actual - expected) / size if size > 0.0 else 0.0
