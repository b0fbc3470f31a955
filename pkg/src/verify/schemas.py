"""Run configuration and verification report models."""

import json
from typing import Literal, get_args

from pydantic import BaseModel, ConfigDict, Field

from src.qcore.schemas import QContext, SeriesPolicy
from src.shared.config import Settings


Suite = Literal["qcore", "qpolys", "qbessel", "qhankel", "fischer", "sphere", "oscillator"]
SUITES: tuple[Suite, ...] = get_args(Suite)

CheckStatus = Literal["pass", "fail", "skip"]
OutputFormat = Literal["csv", "json"]

# Series never sum more loosely than this, whatever the verification tolerance
SERIES_REL_TOL = 1e-14


class RunConfig(BaseModel):
    """Parameters of one CLI run, validated against the context invariants."""

    model_config = ConfigDict(frozen=True)

    q: float = Field(gt=0.0, lt=1.0)
    m: int = Field(ge=1)
    rel_tol: float = Field(gt=0.0)
    max_terms: int = Field(ge=1)
    gamma: float = Field(gt=0.0)
    seed: int
    output: OutputFormat = "json"

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: object) -> "RunConfig":
        """Settings defaults, replaced by every override that is not None."""
        values: dict[str, object] = {
            "q": settings.q,
            "m": settings.m,
            "rel_tol": settings.rel_tol,
            "max_terms": settings.max_terms,
            "gamma": settings.gamma,
            "seed": settings.seed,
            "output": settings.output_format,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls.model_validate(values)

    def context(self, consecutive_small: int = 3) -> QContext:
        """Deformation context of the run."""
        policy = SeriesPolicy(
            rel_tol=min(self.rel_tol, SERIES_REL_TOL),
            max_terms=self.max_terms,
            consecutive_small=consecutive_small,
        )
        return QContext(q=self.q, m=self.m, precision=policy)


class CheckResult(BaseModel):
    """Outcome of one named identity check."""

    model_config = ConfigDict(frozen=True)

    name: str
    residual: float | None = Field(description="Largest residual; None when the check was skipped")
    tol: float
    status: CheckStatus
    reason: str | None = None


class ReportSummary(BaseModel):
    """Counts per status."""

    passed: int = 0
    failed: int = 0
    skipped: int = 0


def _check_document(result: CheckResult) -> dict[str, object]:
    document = result.model_dump(mode="json")
    if document["reason"] is None:
        del document["reason"]
    return document


class VerificationReport(BaseModel):
    """Checks sorted by name with the configuration that produced them."""

    config: RunConfig
    checks: list[CheckResult]
    summary: ReportSummary

    @classmethod
    def from_results(cls, config: RunConfig, results: list[CheckResult]) -> "VerificationReport":
        ordered = sorted(results, key=lambda r: r.name)
        summary = ReportSummary(
            passed=sum(r.status == "pass" for r in ordered),
            failed=sum(r.status == "fail" for r in ordered),
            skipped=sum(r.status == "skip" for r in ordered),
        )
        return cls(config=config, checks=ordered, summary=summary)

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0

    def to_json(self) -> str:
        """Stable JSON text; ``reason`` only appears on checks that carry one."""
        payload = {
            "config": self.config.model_dump(mode="json"),
            "checks": [_check_document(r) for r in self.checks],
            "summary": self.summary.model_dump(mode="json"),
        }
        return json.dumps(payload, indent=2, sort_keys=False)
