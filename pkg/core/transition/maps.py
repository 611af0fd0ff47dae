"""Transition maps between (U, μ, 𝒜) and the half line with its induced measure λ.

Layer i of the core sits at the atom x_i = μ(A_i) with mass μ(A_i ∖ A_{i−1});
layers of zero measure have no atom. R averages a field over each layer and Q
spreads a line field back onto the layers.
"""

from fractions import Fraction
from typing import Sequence

import numpy as np

from core.spaces import CoreMap, MeasureSpace, OrderedCore, ScalarField, induced_core, layers
from core.spaces.errors import InvalidMeasureError
from core.utils.logs import logger
from core.utils.rationals import INF, Extended, div, ext_sum, mul, to_fraction

from .line import LineField, LineMeasure


def _layer_masses(core: OrderedCore, space: MeasureSpace) -> list[Fraction]:
    return [space.measure(layer) for layer in layers(core)]


def layer_atoms(core: OrderedCore, space: MeasureSpace) -> list[int | None]:
    """Atom index of every layer, None for layers of zero measure."""
    out: list[int | None] = []
    count = 0
    for mass in _layer_masses(core, space):
        if mass > 0:
            out.append(count)
            count += 1
        else:
            out.append(None)
    return out


def induced_line_measure(core: OrderedCore, space: MeasureSpace) -> LineMeasure:
    """λ: atoms at μ(A_i) with mass μ(A_i) − μ(A_{i−1}), zero masses dropped."""
    atoms: list[tuple[Fraction, Fraction]] = []
    position = Fraction(0)
    for mass in _layer_masses(core, space):
        position += mass
        if mass > 0:
            atoms.append((position, mass))
    return LineMeasure(atoms=tuple(atoms))


def R_map(core: OrderedCore, space: MeasureSpace, f: ScalarField) -> LineField:
    """Rf at x_i: the μ-average of f over layer i."""
    f = f.check_size(space.size)
    measure = induced_line_measure(core, space)
    values: list[Extended] = []
    for layer, mass in zip(layers(core), _layer_masses(core, space)):
        if mass > 0:
            values.append(div(ext_sum(mul(f.values[s], space.mu[s]) for s in layer), mass))
    return LineField(measure=measure, values=tuple(values))


def Q_map(core: OrderedCore, space: MeasureSpace, phi: LineField) -> ScalarField:
    """Qφ(s) = φ at the atom of s's layer.

    Points of zero-measure layers take the nearest surviving atom to the left,
    or the first atom when none lies to the left.
    """
    if phi.measure != induced_line_measure(core, space):
        raise InvalidMeasureError("Line field does not live on the core's induced measure.")
    atoms = layer_atoms(core, space)
    values: list[Extended] = [Fraction(0)] * space.size
    previous: int | None = None
    first = next((a for a in atoms if a is not None), None)
    for layer, atom in zip(layers(core), atoms):
        if atom is not None:
            previous = atom
        chosen = previous if previous is not None else first
        for s in layer:
            values[s] = phi.values[chosen] if chosen is not None else Fraction(0)
    return ScalarField(values=tuple(values))


def pushforward_measure(cm: CoreMap, space: MeasureSpace) -> LineMeasure:
    """ν = τ∘φ⁻¹ for φ(y) = μ(B(y)); B(y) = ∅ lands at 0."""
    grouped: dict[Fraction, Fraction] = {}
    for weight, position in zip(cm.tau, cm.ball_measures(space)):
        grouped[position] = grouped.get(position, Fraction(0)) + weight
    return LineMeasure(atoms=tuple((x, m) for x, m in sorted(grouped.items()) if m > 0))


def _weights(measure: MeasureSpace | LineMeasure | Sequence[Fraction]) -> tuple[Fraction, ...]:
    if isinstance(measure, MeasureSpace):
        return measure.mu
    if isinstance(measure, LineMeasure):
        return measure.masses
    return tuple(to_fraction(w) for w in measure)


def _values(field: ScalarField | LineField | Sequence[Extended]) -> tuple[Extended, ...]:
    if isinstance(field, (ScalarField, LineField)):
        return field.values
    return tuple(field)


def distribution(
    measure: MeasureSpace | LineMeasure | Sequence[Fraction],
    field: ScalarField | LineField | Sequence[Extended],
    alpha: Fraction,
) -> Fraction:
    """μ_f(α) = μ({|f| > α})."""
    weights = _weights(measure)
    values = _values(field)
    if len(weights) != len(values):
        raise ValueError(f"{len(values)} values for {len(weights)} weights.")
    return sum((w for w, v in zip(weights, values) if abs(v) > alpha), Fraction(0))


def hardy_transform(core: OrderedCore, space: MeasureSpace, f: ScalarField) -> LineField:
    """Hf(x_i) = ∫_{[0, x_i]} Rf dλ at every atom of λ."""
    rf = R_map(core, space, f)
    running: Extended = Fraction(0)
    values: list[Extended] = []
    for value, mass in zip(rf.values, rf.measure.masses):
        running = ext_sum([running, mul(value, mass)])
        values.append(running)
    return LineField(measure=rf.measure, values=tuple(values))


def core_transform(cm: CoreMap, space: MeasureSpace, f: ScalarField) -> tuple[Extended, ...]:
    """Tf(y) = ∫_{B(y)} f dμ per item."""
    f = f.check_size(space.size)
    return tuple(ext_sum(mul(f.values[s], space.mu[s]) for s in ball) for ball in cm.balls)


def _transforms(cm: CoreMap, space: MeasureSpace, f: ScalarField):
    induced = induced_core(cm, space)
    f_kept = f.check_size(space.size).restrict(induced.kept)
    hf = hardy_transform(induced.core, induced.space, f_kept)
    nu = pushforward_measure(induced.coremap, induced.space)
    # Hf as a right-continuous step function evaluated at the atoms of ν
    hf_at_nu: list[Extended] = []
    for position in nu.positions:
        count = hf.measure.count_upto(position)
        hf_at_nu.append(hf.values[count - 1] if count else Fraction(0))
    tf = core_transform(cm, space, f)
    return nu, tuple(hf_at_nu), tf


def check_equimeasurable(cm: CoreMap, space: MeasureSpace, f: ScalarField) -> bool:
    """Hf under ν and Tf under τ have the same distribution function."""
    nu, hf_at_nu, tf = _transforms(cm, space, f)
    thresholds = sorted({Fraction(0)} | {v for v in hf_at_nu + tf if v != INF})
    for alpha in thresholds:
        left = distribution(nu, hf_at_nu, alpha)
        right = distribution(cm.tau, tf, alpha)
        if left != right:
            logger.warning(f"Distribution mismatch at alpha={alpha}: nu={left}, tau={right}.")
            return False
    return True


def check_equal_norms(cm: CoreMap, space: MeasureSpace, f: ScalarField, exponent: Fraction, rtol: float = 1e-12) -> bool:
    """∫ (Hf)^e dν = ∫ (Tf)^e dτ, the norm identity shared by equimeasurable functions."""
    nu, hf_at_nu, tf = _transforms(cm, space, f)
    e = float(exponent)
    left = float(np.sum([float(m) * float(v) ** e for m, v in zip(nu.masses, hf_at_nu) if v != 0]))
    right = float(np.sum([float(t) * float(v) ** e for t, v in zip(cm.tau, tf) if v != 0 and t != 0]))
    return bool(np.isclose(left, right, rtol=rtol, atol=0.0))
