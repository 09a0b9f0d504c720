"""Continuous-variable teleporter channels and their operating points.

Three channel families share one parameterization: a feedforward gain
and the pump gain ``H`` of the squeezer supplying the entanglement.
``H = 1`` means no squeezing, which is the classical (entanglement-free)
channel. The squeezing fraction ``s`` is the noise-variance reduction
``(sqrt(H) - sqrt(H-1))^2 = 1 - s``; conversions both ways are provided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .modes import (
    LinearField,
    ModeId,
    ModeRegistry,
    Role,
    annihilator_field,
    beamsplitter,
    combine,
    dagger,
    field_from_terms,
    quadrature_variances,
    two_mode_squeezer,
)

__all__ = [
    "KIND_TWO_MODE",
    "KIND_SINGLE_SQUEEZER",
    "KIND_CLASSICAL",
    "KINDS",
    "TeleporterSpec",
    "noise_amplitudes",
    "teleport_two_mode",
    "teleport_single_squeezer",
    "teleport_composed",
    "optimal_gain",
    "squeezing_to_H",
    "H_to_squeezing",
    "coherent_fidelity",
]

KIND_TWO_MODE = "two-mode"
KIND_SINGLE_SQUEEZER = "single-squeezer"
KIND_CLASSICAL = "classical"
KINDS = (KIND_TWO_MODE, KIND_SINGLE_SQUEEZER, KIND_CLASSICAL)

_INV_SQRT2 = math.sqrt(0.5)


@dataclass(frozen=True)
class TeleporterSpec:
    """Channel family plus feedforward gain and squeezer pump gain."""

    kind: str
    gain: float
    H: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown teleporter kind {self.kind!r}")
        if self.gain < 0.0:
            raise ValueError(f"feedforward gain must be >= 0, got {self.gain!r}")
        if self.H < 1.0:
            raise ValueError(f"pump gain must be >= 1, got {self.H!r}")
        if self.kind == KIND_CLASSICAL and self.H != 1.0:
            raise ValueError("the classical channel has no squeezing; H must be exactly 1")


def noise_amplitudes(spec: TeleporterSpec) -> tuple[float, float]:
    """Ancilla coefficients of the channel at this operating point.

    Returns ``(gain*sqrt(H) - sqrt(H-1), sqrt(H) - gain*sqrt(H-1))``: the
    creation-side amplitude (spurious photons) and the annihilation-side
    amplitude (vacuum passthrough that keeps the output canonical).
    """
    root_h = math.sqrt(spec.H)
    root_h1 = math.sqrt(spec.H - 1.0)
    return spec.gain * root_h - root_h1, root_h - spec.gain * root_h1


def teleport_two_mode(
    c: LinearField, spec: TeleporterSpec, f1: ModeId, f2: ModeId
) -> LinearField:
    """Teleporter channel backed by a two-mode entangled pair.

    Output is ``gain*c + A f1^dag + B f2`` with ``(A, B)`` the noise
    amplitudes; (f1, f2) must be fresh squeezer ancillas, one pair per
    invocation. The classical kind is the same map pinned at ``H = 1``.
    """
    if spec.kind not in (KIND_TWO_MODE, KIND_CLASSICAL):
        raise ValueError(f"two-mode channel cannot run a {spec.kind!r} spec")
    _claim_ancillas(c.registry, f1, f2)
    creation_amp, passthrough_amp = noise_amplitudes(spec)
    noise = field_from_terms(
        c.registry,
        {f1: (0.0, creation_amp), f2: (passthrough_amp, 0.0)},
    )
    return combine(spec.gain, c, 1.0, noise)


def teleport_single_squeezer(
    c: LinearField, spec: TeleporterSpec, f1: ModeId, f2: ModeId
) -> LinearField:
    """Teleporter channel whose resource is one squeezed beam split in half.

    Output is ``gain*c + (A f1^dag + B f1 + gain f2^dag + f2)/sqrt(2)``;
    the extra ``f2`` terms are the vacuum entering the splitting
    beamsplitter, which is what degrades this channel relative to the
    genuinely two-mode one.
    """
    if spec.kind != KIND_SINGLE_SQUEEZER:
        raise ValueError(f"single-squeezer channel cannot run a {spec.kind!r} spec")
    _claim_ancillas(c.registry, f1, f2)
    creation_amp, passthrough_amp = noise_amplitudes(spec)
    noise = field_from_terms(
        c.registry,
        {
            f1: (passthrough_amp * _INV_SQRT2, creation_amp * _INV_SQRT2),
            f2: (_INV_SQRT2, spec.gain * _INV_SQRT2),
        },
    )
    return combine(spec.gain, c, 1.0, noise)


def teleport_composed(
    c: LinearField, spec: TeleporterSpec, f1: ModeId, f2: ModeId
) -> LinearField:
    """The two-mode channel built from its physical parts.

    Entangle (f1, f2), mix ``c`` with one entangled beam on a 50:50
    beamsplitter, read the amplitude quadrature of the difference output
    and the phase quadrature of the sum output (carried as operator
    identities, i.e. ideal homodyne), then displace the other entangled
    beam by ``gain*sqrt(2)`` times the measured combination.

    Agrees with :func:`teleport_two_mode` on every coefficient magnitude
    and every downstream expectation value; the creation-side coefficient
    carries the opposite sign, which no observable sees.
    """
    if spec.kind != KIND_TWO_MODE:
        raise ValueError(f"composed channel cannot run a {spec.kind!r} spec")
    e1, e2 = two_mode_squeezer(f1, f2, spec.H)
    mix_sum, mix_diff = beamsplitter(c, e1)
    x_meas = combine(1.0, mix_diff, 1.0, dagger(mix_diff))
    p_meas = combine(-1j, mix_sum, 1j, dagger(mix_sum))
    measured = combine(0.5, x_meas, 0.5j, p_meas)
    return combine(1.0, e2, spec.gain * math.sqrt(2.0), measured)


def optimal_gain(H: float) -> float:
    """The gain ``sqrt((H-1)/H)`` zeroing the creation-side noise amplitude.

    At this point the channel adds no spurious photons and acts as pure
    attenuation with intensity transmission ``optimal_gain(H)**2``.
    """
    if H < 1.0:
        raise ValueError(f"pump gain must be >= 1, got {H!r}")
    return math.sqrt((H - 1.0) / H)


def squeezing_to_H(s: float) -> float:
    """Pump gain for squeezing fraction ``s``: solves (sqrt(H)-sqrt(H-1))^2 = 1-s."""
    if not 0.0 <= s < 1.0:
        raise ValueError(f"squeezing fraction must lie in [0, 1), got {s!r}")
    remaining = 1.0 - s
    return (1.0 + remaining) ** 2 / (4.0 * remaining)


def H_to_squeezing(H: float) -> float:
    """Inverse of :func:`squeezing_to_H`."""
    if H < 1.0:
        raise ValueError(f"pump gain must be >= 1, got {H!r}")
    return 1.0 - 1.0 / (math.sqrt(H) + math.sqrt(H - 1.0)) ** 2


def coherent_fidelity(spec: TeleporterSpec) -> float:
    """Average coherent-state fidelity of the channel at unity gain.

    Computed from the quadrature variances (V_X, V_P) of the added noise
    (output minus the transmitted input term) as
    ``2 / sqrt((2 + V_X) * (2 + V_P))``; the classical channel lands on
    exactly 1/2, the usual no-entanglement bound.
    """
    if spec.gain != 1.0:
        raise ValueError("coherent fidelity is defined at unity gain only")
    registry = ModeRegistry()
    probe = annihilator_field(registry.fresh_mode("probe", Role.SIGNAL_H))
    f1 = registry.fresh_mode("ancilla_1", Role.SQUEEZER_ANCILLA)
    f2 = registry.fresh_mode("ancilla_2", Role.SQUEEZER_ANCILLA)
    if spec.kind == KIND_SINGLE_SQUEEZER:
        output = teleport_single_squeezer(probe, spec, f1, f2)
    else:
        output = teleport_two_mode(probe, spec, f1, f2)
    added_noise = combine(1.0, output, -spec.gain, probe)
    v_x, v_p = quadrature_variances(added_noise)
    return 2.0 / math.sqrt((2.0 + v_x) * (2.0 + v_p))


def _claim_ancillas(registry: ModeRegistry, f1: ModeId, f2: ModeId) -> None:
    for mode in (f1, f2):
        if mode.registry is not registry:
            raise ValueError("ancilla modes belong to a different registry")
        if mode.role is not Role.SQUEEZER_ANCILLA:
            raise ValueError(
                f"mode {mode.label!r} has role {mode.role.value!r}; expected "
                f"{Role.SQUEEZER_ANCILLA.value!r}"
            )
    if f1.index == f2.index:
        raise ValueError("a teleporter needs two distinct ancilla modes")
    registry.claim_fresh(f1, f2)
