"""Problem files: one JSON document, three shapes told apart by `kind`.

generic   points, mu, an ordered core and u (or eta); the Hardy operator is the
          canonical one, item s ↦ the first core set containing s, with τ = tau
          (default μ)
coremap   points, mu, an ordered core, u (or eta) and explicit items with τ and
          a chain index for B(y) (0 = ∅)
metric    points, mu and a distance matrix (or line coordinates) with anchor,
          omega and v; the core is made of the closed anchor balls

Rationals are written as "num/den" strings (plain integers are accepted).
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Literal, Union

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    TypeAdapter,
    ValidationError,
    model_validator,
)

from core.hardy import HardyProblem, decompose_eta
from core.metric import LineMetricSpace, MetricSpace, WeightedMetric, ball_core
from core.spaces import CoreMap, MeasureSpace, OrderedCore, ScalarField, rank_of
from core.utils.logs import logger
from core.utils.rationals import div, format_rational, to_fraction

from .errors import ProblemFileError

Rational = Annotated[
    Fraction,
    BeforeValidator(to_fraction),
    PlainSerializer(format_rational, return_type=str),
]


class _Document(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")

    points: list[str]
    mu: list[Rational]
    p: Rational = Fraction(1)
    q: Rational = Fraction(1)
    f: list[Rational] | None = Field(default=None, description="Test function for `minorant`; defaults to 1.")


class _WeightedDocument(_Document):
    core: list[list[int]]
    u: list[Rational] | None = None
    eta: list[Rational] | None = None

    @model_validator(mode="after")
    def _one_weight(self):
        if (self.u is None) == (self.eta is None):
            raise ValueError("exactly one of 'u' and 'eta' must be given")
        return self


class GenericDocument(_WeightedDocument):
    kind: Literal["generic"]
    tau: list[Rational] | None = None


class CoreMapSpec(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")

    items: list[str]
    tau: list[Rational]
    ball: list[int] = Field(description="Chain index of B(y), 1-based; 0 is the empty set.")


class CoreMapDocument(_WeightedDocument):
    kind: Literal["coremap"]
    coremap: CoreMapSpec


class MetricSpec(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")

    dist: list[list[Rational]] | None = None
    coordinates: list[Rational] | None = None
    anchor: int = 0
    strict: bool = True
    omega: list[Rational]
    v: list[Rational]

    @model_validator(mode="after")
    def _one_geometry(self):
        if (self.dist is None) == (self.coordinates is None):
            raise ValueError("exactly one of 'dist' and 'coordinates' must be given")
        return self


class MetricDocument(_Document):
    kind: Literal["metric"]
    metric: MetricSpec


ProblemDocument = Annotated[
    Union[GenericDocument, CoreMapDocument, MetricDocument],
    Field(discriminator="kind"),
]
_adapter: TypeAdapter[ProblemDocument] = TypeAdapter(ProblemDocument)


@dataclass(frozen=True)
class LoadedProblem:
    """A parsed document and everything the commands need from it.

    `omega` and `v` are only set where the p > 1 conditions make sense: metric
    documents, and generic documents (ω = τ/μ, v = u).
    """

    document: GenericDocument | CoreMapDocument | MetricDocument
    problem: HardyProblem
    core: OrderedCore
    u: ScalarField
    f: ScalarField
    omega: ScalarField | None = None
    v: ScalarField | None = None
    metric: WeightedMetric | None = None


def _field_path(error: dict) -> str:
    loc = [str(part) for part in error.get("loc", ())]
    if loc and loc[0] in {"generic", "coremap", "metric"}:
        loc = loc[1:]
    return ".".join(loc)


def parse_problem(text: str) -> GenericDocument | CoreMapDocument | MetricDocument:
    try:
        return _adapter.validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ProblemFileError(first.get("msg", str(exc)), field=_field_path(first)) from exc


def serialize_problem(document: GenericDocument | CoreMapDocument | MetricDocument) -> str:
    return json.dumps(_adapter.dump_python(document, mode="json", exclude_none=True), ensure_ascii=False, indent=2)


def _check_length(name: str, values: list | None, n: int) -> None:
    if values is not None and len(values) != n:
        raise ProblemFileError(f"{name} has {len(values)} entries for {n} points", field=name)


def _build_core(document: _WeightedDocument) -> OrderedCore:
    try:
        return OrderedCore.from_sets(document.core, n_points=len(document.points))
    except ValueError as exc:
        raise ProblemFileError(str(exc), field="core") from exc


def _weighted_problem(space: MeasureSpace, document: _WeightedDocument, cm: CoreMap) -> tuple[HardyProblem, ScalarField]:
    if document.u is not None:
        u = ScalarField(values=tuple(document.u))
        return HardyProblem.from_weight(space, u, cm, p=document.p, q=document.q), u
    problem = HardyProblem(space=space, eta=ScalarField(values=tuple(document.eta)), cm=cm, p=document.p, q=document.q)
    return problem, decompose_eta(problem).u


def to_problem(document: GenericDocument | CoreMapDocument | MetricDocument) -> LoadedProblem:
    n = len(document.points)
    _check_length("mu", document.mu, n)
    _check_length("f", document.f, n)
    space = MeasureSpace(points=tuple(document.points), mu=tuple(document.mu))
    f = ScalarField(values=tuple(document.f)) if document.f is not None else ScalarField.constant(n, 1)

    if isinstance(document, MetricDocument):
        spec = document.metric
        _check_length("metric.omega", spec.omega, n)
        _check_length("metric.v", spec.v, n)
        if spec.coordinates is not None:
            _check_length("metric.coordinates", spec.coordinates, n)
            geometry = LineMetricSpace(space=space, coordinates=tuple(spec.coordinates), anchor=spec.anchor)
        else:
            geometry = MetricSpace(
                space=space,
                dist=tuple(tuple(row) for row in spec.dist),
                anchor=spec.anchor,
                strict=spec.strict,
            )
        weighted = WeightedMetric(metric=geometry, omega=ScalarField(values=tuple(spec.omega)), v=ScalarField(values=tuple(spec.v)))
        core, _ = ball_core(geometry)
        return LoadedProblem(
            document=document,
            problem=weighted.problem(p=document.p, q=document.q),
            core=core,
            u=weighted.v,
            f=f,
            omega=weighted.omega,
            v=weighted.v,
            metric=weighted,
        )

    _check_length("u", document.u, n)
    _check_length("eta", document.eta, n)
    core = _build_core(document)

    if isinstance(document, CoreMapDocument):
        spec = document.coremap
        if not len(spec.items) == len(spec.tau) == len(spec.ball):
            raise ProblemFileError("coremap items, tau and ball differ in length", field="coremap")
        for index, rank in enumerate(spec.ball):
            if not 0 <= rank <= core.depth:
                raise ProblemFileError(f"ball index {rank} outside 0..{core.depth}", field=f"coremap.ball.{index}")
        cm = CoreMap(
            items=tuple(spec.items),
            tau=tuple(spec.tau),
            balls=tuple(core.chain[rank - 1] if rank else frozenset() for rank in spec.ball),
            n_points=n,
        )
        problem, u = _weighted_problem(space, document, cm)
        return LoadedProblem(document=document, problem=problem, core=core, u=u, f=f)

    _check_length("tau", document.tau, n)
    tau = tuple(document.tau) if document.tau is not None else space.mu
    cm = CoreMap(
        items=space.points,
        tau=tau,
        balls=tuple(core.chain[rank_of(core, s) - 1] for s in range(n)),
        n_points=n,
    )
    problem, u = _weighted_problem(space, document, cm)
    omega = ScalarField(values=tuple(div(t, m) for t, m in zip(tau, space.mu)))
    return LoadedProblem(document=document, problem=problem, core=core, u=u, f=f, omega=omega, v=u)


def load_problem(path: str | Path) -> LoadedProblem:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc.strerror}") from exc
    document = parse_problem(text)
    logger.debug(f"Loaded {document.kind} problem with {len(document.points)} points from {path}.")
    return to_problem(document)
