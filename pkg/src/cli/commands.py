"""The three CLI commands as functions of a validated run configuration."""

import time
from typing import Literal

from pydantic import BaseModel, Field, TypeAdapter

from src.cli.evaluators import Params, Row, evaluate
from src.fischer.fourier import Sign, fourier_forward, fourier_inverse, quadrature_block
from src.fischer.schemas import FischerDocument, FischerElement
from src.fischer.service import profile_at
from src.qbessel.schemas import BesselOrder
from src.qcore.schemas import QContext
from src.qhankel.braided import (
    forward_closed,
    fourier_braided_line,
    inverse_closed,
    monomial_gaussian_1d,
    weighted_hermite,
)
from src.qhankel.schemas import HankelSpec, KnownForm, Opaque, RadialFunction
from src.qhankel.service import hankel1, hankel2
from src.shared.errors import QDomainError
from src.shared.logging import get_logger
from src.verify.registry import rel_gap
from src.verify.schemas import RunConfig, Suite, VerificationReport
from src.verify.service import run_suite


logger = get_logger(__name__)

TransformKind = Literal["hankel1", "hankel2", "fourier_fwd", "fourier_inv", "braided"]


class BraidedInput(BaseModel):
    """Real coefficients of weighted Hermite functions (forward) or monomial Gaussians (inverse)."""

    coefficients: list[float] = Field(min_length=1)
    direction: Literal["forward", "inverse"] = "forward"


class TransformResult(BaseModel):
    """Sampled output, its closed-form comparison and the transformed element when there is one."""

    samples: list[Row]
    max_residual: float | None = None
    element: FischerDocument | None = None


def cmd_eval(config: RunConfig, name: str, params: Params, points: list[float]) -> list[Row]:
    """Evaluate one named function on a list of points."""
    start_time = time.perf_counter()
    rows = evaluate(name, config.context(), params, points)
    logger.info(
        "eval_completed",
        function=name,
        points=len(points),
        duration_ms=(time.perf_counter() - start_time) * 1000,
    )
    return rows


def _residual(rows: list[Row], value: str, closed: str, floor: float) -> float | None:
    gaps = [
        rel_gap(float(row[value]), float(row[closed]), floor)  # type: ignore[arg-type]
        for row in rows
        if row.get(closed) is not None
    ]
    return max(gaps) if gaps else None


def _hankel(
    config: RunConfig, kind: TransformKind, text: str, nu: float, scale: float, points: list[float]
) -> TransformResult:
    order = BesselOrder(nu=nu)
    if not order.transform_ready:
        msg = f"q-Hankel transforms need nu >= -1/2, got {nu}"
        raise QDomainError(msg)
    ctx = config.context()
    form = TypeAdapter(KnownForm).validate_json(text)
    if isinstance(form, Opaque):
        msg = "a transform input needs a laguerre_block or monomial_gaussian descriptor"
        raise QDomainError(msg)
    spec = HankelSpec(nu=order.nu, scale=scale)
    source = RadialFunction.from_form(ctx, form)
    image = hankel1(ctx, spec, source) if kind == "hankel1" else hankel2(ctx, spec, source)
    known = not isinstance(image.known_form, Opaque)
    if not known:
        # Laguerre blocks need the transform's own order and scale to get a closed image
        logger.warning("transform_image_untagged", kind=kind, input=form.kind, nu=nu, scale=scale)
    rows: list[Row] = [{"point": x, "value": image(x), "closed": image.exact(x) if known else None} for x in points]
    return TransformResult(samples=rows, max_residual=_residual(rows, "value", "closed", config.rel_tol))


def _fourier(config: RunConfig, kind: TransformKind, text: str, sign: Sign, points: list[float]) -> TransformResult:
    source = FischerElement.from_document(FischerDocument.model_validate_json(text), config.context().precision)
    ctx = source.ctx
    if kind == "fourier_fwd":
        image = fourier_forward(source, sign)
    else:
        image = fourier_inverse(source, sign, gamma=config.gamma)
    direction: Literal["forward", "inverse"] = "forward" if kind == "fourier_fwd" else "inverse"
    rows: list[Row] = []
    for k, block in image.blocks.items():
        for r in points:
            quadrature = quadrature_block(ctx, k, source.block(k), r, direction=direction, gamma=config.gamma)
            rows.append({"k": k, "point": r, "value": quadrature, "closed": profile_at(ctx, block, r)})
    residual = _residual(rows, "value", "closed", config.rel_tol)
    return TransformResult(samples=rows, max_residual=residual, element=image.to_document())


def _braided(config: RunConfig, text: str, points: list[float]) -> TransformResult:
    request = BraidedInput.model_validate_json(text)
    line = QContext(q=config.q, m=1, precision=config.context().precision)
    coefficients = [complex(c) for c in request.coefficients]
    transform = fourier_braided_line(line, coefficients, request.direction, delta=config.gamma)
    rows: list[Row] = []
    gaps: list[float] = []
    for x in points:
        value = transform(x)
        if request.direction == "forward":
            closed = sum(c * monomial_gaussian_1d(line, k, x) for k, c in enumerate(forward_closed(line, coefficients)))
        else:
            closed = sum(c * weighted_hermite(line, k, x) for k, c in enumerate(inverse_closed(line, coefficients)))
        rows.append(
            {"point": x, "real": value.real, "imag": value.imag, "closed_real": closed.real, "closed_imag": closed.imag}
        )
        gaps.append(rel_gap(value, closed, config.rel_tol))
    return TransformResult(samples=rows, max_residual=max(gaps, default=None))


def cmd_transform(
    config: RunConfig,
    kind: TransformKind,
    text: str,
    points: list[float],
    *,
    nu: float = 0.0,
    scale: float = 1.0,
    sign: Sign = 1,
) -> TransformResult:
    """Run one transform on a JSON input and sample it against its closed form.

    ``hankel1`` and ``hankel2`` read a known-form descriptor, the Fourier
    transforms a Fischer element document and ``braided`` a coefficient list.

    Raises:
        QDomainError: If the input's Gaussian does not suit the transform direction.
        pydantic.ValidationError: If the input does not parse.
    """
    start_time = time.perf_counter()
    if kind in ("hankel1", "hankel2"):
        result = _hankel(config, kind, text, nu, scale, points)
    elif kind == "braided":
        result = _braided(config, text, points)
    else:
        result = _fourier(config, kind, text, sign, points)
    logger.info(
        "transform_completed",
        kind=kind,
        points=len(points),
        max_residual=result.max_residual,
        duration_ms=(time.perf_counter() - start_time) * 1000,
    )
    return result


def cmd_verify(config: RunConfig, suite: Suite | Literal["all"]) -> VerificationReport:
    """Run one suite, or all of them."""
    return run_suite(None if suite == "all" else suite, config)
