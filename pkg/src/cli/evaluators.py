"""Named scalar functions reachable from ``qh eval``.

Each evaluator takes the context, its keyword parameters and one point.
Parameters arrive as floats from the command line; integer ones are checked
and converted here, and polynomial parameters go through ``PolyParams``.
"""

from collections.abc import Callable
from dataclasses import dataclass

from src.qbessel.service import besselJ1, besselJ2
from src.qcore.schemas import QContext
from src.qcore.service import exp_big, exp_small, q_bracket, q_gamma2
from src.qhankel.service import d_const
from src.qpolys.schemas import PolyParams
from src.qpolys.service import gegenbauer, hermite, laguerre_q2, laguerre_q2inv
from src.sphere.service import funk_hecke_alpha


Params = dict[str, float]
Row = dict[str, float | int | None]


@dataclass(frozen=True)
class Evaluator:
    """A scalar function with its parameter names and the name of its point, shown in help."""

    params: tuple[str, ...]
    point: str
    func: Callable[[QContext, Params, float], float]
    integers: tuple[str, ...] = ()


def _integer(name: str, value: float) -> int:
    if not float(value).is_integer():
        msg = f"parameter {name} must be an integer, got {value}"
        raise ValueError(msg)
    return int(value)


def _poly(family: str, p: Params, degree: str, parameter: str | None = None) -> PolyParams:
    return PolyParams(family=family, degree=int(p[degree]), parameter=p[parameter] if parameter else 0.0)


def _hermite(ctx: QContext, p: Params, t: float) -> float:
    return hermite(ctx, _poly("hermite", p, "k").degree, t)


def _laguerre_q2(ctx: QContext, p: Params, u: float) -> float:
    params = _poly("laguerre_q2", p, "j", "alpha")
    return laguerre_q2(ctx, params.degree, params.parameter, u)


def _laguerre_q2inv(ctx: QContext, p: Params, u: float) -> float:
    params = _poly("laguerre_q2inv", p, "j", "alpha")
    return laguerre_q2inv(ctx, params.degree, params.parameter, u)


def _gegenbauer(ctx: QContext, p: Params, t: float) -> float:
    params = _poly("gegenbauer", p, "n", "lam")
    return gegenbauer(ctx, params.degree, params.parameter, t)


EVALUATORS: dict[str, Evaluator] = {
    "q_bracket": Evaluator((), "u", lambda ctx, _p, u: q_bracket(ctx, u)),
    "q_gamma2": Evaluator((), "t", lambda ctx, _p, t: q_gamma2(ctx, t)),
    "e_q": Evaluator((), "t", lambda ctx, _p, t: exp_small(ctx, t)),
    "E_q": Evaluator((), "t", lambda ctx, _p, t: exp_big(ctx, t)),
    "hermite": Evaluator(("k",), "t", _hermite, integers=("k",)),
    "laguerre_q2": Evaluator(("j", "alpha"), "u", _laguerre_q2, integers=("j",)),
    "laguerre_q2inv": Evaluator(("j", "alpha"), "u", _laguerre_q2inv, integers=("j",)),
    "gegenbauer": Evaluator(("n", "lam"), "t", _gegenbauer, integers=("n",)),
    "besselJ1": Evaluator(("nu",), "x", lambda ctx, p, x: besselJ1(ctx, p["nu"], x)),
    "besselJ2": Evaluator(("nu",), "x", lambda ctx, p, x: besselJ2(ctx, p["nu"], x)),
    "d_const": Evaluator(("alpha",), "lam", lambda ctx, p, lam: d_const(ctx, lam, p["alpha"])),
    "funk_hecke_alpha": Evaluator(
        ("k",), "l", lambda ctx, p, x: funk_hecke_alpha(ctx, int(p["k"]), _integer("l", x)), integers=("k",)
    ),
}


def evaluate(name: str, ctx: QContext, params: Params, points: list[float]) -> list[Row]:
    """Rows {point, value} of one named function.

    Raises:
        ValueError: If the function is unknown or its parameters do not match.
    """
    evaluator = EVALUATORS.get(name)
    if evaluator is None:
        msg = f"unknown function {name!r}; choose from {', '.join(sorted(EVALUATORS))}"
        raise ValueError(msg)
    missing = [p for p in evaluator.params if p not in params]
    extra = [p for p in params if p not in evaluator.params]
    if missing or extra:
        msg = f"{name} takes parameters {list(evaluator.params)}; missing {missing}, unexpected {extra}"
        raise ValueError(msg)
    for key in evaluator.integers:
        _integer(key, params[key])
    return [{"point": x, "value": evaluator.func(ctx, params, x)} for x in points]
