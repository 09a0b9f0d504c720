"""Labeled bosonic modes and the linear ladder-operator algebra.

A field is a finite sum ``sum_k (u_k a_k + v_k a_k^dag)`` over registered
modes, with complex coefficients. Every optical element used by the
interferometer networks (beamsplitters, squeezers, attenuators,
teleporters) maps such fields to such fields, so an entire network
evaluates to one closed-form field per output port.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field as dataclass_field
from typing import Iterator, Mapping

__all__ = [
    "Role",
    "ModeId",
    "ModeRegistry",
    "LinearField",
    "annihilator_field",
    "creator_field",
    "field_from_terms",
    "combine",
    "dagger",
    "commutator",
    "beamsplitter",
    "two_mode_squeezer",
    "single_mode_squeezer",
    "attenuate",
    "quadrature_variances",
]

_INV_SQRT2 = math.sqrt(0.5)
_ZERO_TERM = (0j, 0j)


class Role(enum.Enum):
    """What a mode feeds into the network."""

    SIGNAL_H = "signal-h"
    SIGNAL_V = "signal-v"
    PORT_B_H = "port-b-h"
    PORT_B_V = "port-b-v"
    SQUEEZER_ANCILLA = "squeezer-ancilla"
    ATTENUATOR_VACUUM = "attenuator-vacuum"


# At most one mode per registry may carry each of these roles; the photon
# state lives on them.
_UNIQUE_ROLES = (Role.SIGNAL_H, Role.SIGNAL_V)


@dataclass(frozen=True)
class ModeId:
    """Handle for one registered bosonic input mode."""

    index: int
    label: str
    role: Role
    registry: "ModeRegistry" = dataclass_field(repr=False, compare=False)


class ModeRegistry:
    """Allocates modes and tracks which ones an element has consumed.

    The registry is the only mutable object in this module: it grows as
    modes are allocated and remembers which modes were claimed as fresh
    vacuum inputs by squeezers, teleporters and attenuators. Mode handles
    and fields are immutable values.
    """

    def __init__(self) -> None:
        self._modes: list[ModeId] = []
        self._by_label: dict[str, ModeId] = {}
        self._claimed: set[int] = set()

    def __len__(self) -> int:
        return len(self._modes)

    def __iter__(self) -> Iterator[ModeId]:
        return iter(self._modes)

    def fresh_mode(self, label: str, role: Role) -> ModeId:
        """Register a new mode; labels are unique, signal roles at most once."""
        if not isinstance(role, Role):
            raise ValueError(f"unknown mode role {role!r}")
        if label in self._by_label:
            raise ValueError(f"mode label {label!r} already registered")
        if role in _UNIQUE_ROLES and any(m.role is role for m in self._modes):
            raise ValueError(f"a {role.value} mode is already registered")
        mode = ModeId(len(self._modes), label, role, self)
        self._modes.append(mode)
        self._by_label[label] = mode
        return mode

    def mode(self, index: int) -> ModeId:
        return self._modes[index]

    def contains(self, mode: ModeId) -> bool:
        return (
            mode.registry is self
            and 0 <= mode.index < len(self._modes)
            and self._modes[mode.index] is mode
        )

    def claim_fresh(self, *modes: ModeId) -> None:
        """Consume modes as exclusive vacuum inputs of one element.

        A mode can be claimed once; a second claim means two elements are
        trying to share an ancilla, which the networks forbid.
        """
        for mode in modes:
            self._require_member(mode)
            if mode.index in self._claimed:
                raise ValueError(
                    f"mode {mode.label!r} was already consumed as a fresh vacuum input"
                )
        for mode in modes:
            self._claimed.add(mode.index)

    def is_claimed(self, mode: ModeId) -> bool:
        self._require_member(mode)
        return mode.index in self._claimed

    def signal_pair(self) -> tuple[ModeId, ModeId]:
        """The (horizontal, vertical) signal modes; error if either is missing."""
        found: dict[Role, ModeId] = {}
        for mode in self._modes:
            if mode.role in _UNIQUE_ROLES:
                found[mode.role] = mode
        try:
            return found[Role.SIGNAL_H], found[Role.SIGNAL_V]
        except KeyError as exc:
            raise ValueError("registry has no signal mode pair") from exc

    def _require_member(self, mode: ModeId) -> None:
        if not self.contains(mode):
            raise ValueError(f"mode {mode.label!r} is not registered here")


@dataclass(frozen=True)
class LinearField:
    """``sum_k (u_k a_k + v_k a_k^dag)`` with sparse complex coefficients.

    ``terms`` maps mode index to the pair ``(u, v)``; entries that are
    exactly ``(0, 0)`` are never stored. Instances are immutable values --
    all operations return new fields.
    """

    registry: ModeRegistry
    terms: dict[int, tuple[complex, complex]]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mode: ModeId) -> tuple[complex, complex]:
        """The (annihilator, creator) coefficient pair carried on ``mode``."""
        if not self.registry.contains(mode):
            raise ValueError(f"mode {mode.label!r} is not registered here")
        return self.terms.get(mode.index, _ZERO_TERM)

    def support(self) -> tuple[ModeId, ...]:
        """Modes with a nonzero coefficient, ordered by index."""
        return tuple(self.registry.mode(i) for i in sorted(self.terms))


def field_from_terms(
    registry: ModeRegistry, terms: Mapping[ModeId, tuple[complex, complex]]
) -> LinearField:
    """Build a field directly from per-mode coefficient pairs."""
    pruned: dict[int, tuple[complex, complex]] = {}
    for mode, (u, v) in sorted(terms.items(), key=lambda item: item[0].index):
        if not registry.contains(mode):
            raise ValueError(f"mode {mode.label!r} is not registered here")
        if u != 0 or v != 0:
            pruned[mode.index] = (u, v)
    return LinearField(registry, pruned)


def annihilator_field(mode: ModeId) -> LinearField:
    """The bare input operator of ``mode`` as a field."""
    registry = mode.registry
    if not registry.contains(mode):
        raise ValueError(f"mode {mode.label!r} is not registered here")
    return LinearField(registry, {mode.index: (1.0 + 0j, 0j)})


def creator_field(mode: ModeId) -> LinearField:
    """The bare creation operator of ``mode`` as a field."""
    return dagger(annihilator_field(mode))


def combine(
    coeff_a: complex, field_a: LinearField, coeff_b: complex, field_b: LinearField
) -> LinearField:
    """Termwise linear combination ``coeff_a * field_a + coeff_b * field_b``."""
    if field_a.registry is not field_b.registry:
        raise ValueError("cannot combine fields from different registries")
    terms: dict[int, tuple[complex, complex]] = {}
    for index in sorted(field_a.terms.keys() | field_b.terms.keys()):
        ua, va = field_a.terms.get(index, _ZERO_TERM)
        ub, vb = field_b.terms.get(index, _ZERO_TERM)
        u = coeff_a * ua + coeff_b * ub
        v = coeff_a * va + coeff_b * vb
        if u != 0 or v != 0:
            terms[index] = (u, v)
    return LinearField(field_a.registry, terms)


def dagger(field: LinearField) -> LinearField:
    """Hermitian conjugate: per mode, (u, v) -> (conj(v), conj(u))."""
    terms = {
        index: (complex(v).conjugate(), complex(u).conjugate())
        for index, (u, v) in field.terms.items()
    }
    return LinearField(field.registry, terms)


def commutator(field_a: LinearField, field_b: LinearField) -> complex:
    """The scalar ``[A, B^dag] = sum_k (u_Ak conj(u_Bk) - v_Ak conj(v_Bk))``.

    A field built by any element chain from fresh inputs is canonical,
    i.e. ``commutator(O, O) == 1``; distinct outputs of one network
    commute, i.e. the cross value is 0.
    """
    if field_a.registry is not field_b.registry:
        raise ValueError("cannot compare fields from different registries")
    total = 0j
    for index in field_a.terms.keys() & field_b.terms.keys():
        ua, va = field_a.terms[index]
        ub, vb = field_b.terms[index]
        total += ua * complex(ub).conjugate() - va * complex(vb).conjugate()
    return total


def beamsplitter(
    field_a: LinearField, field_b: LinearField
) -> tuple[LinearField, LinearField]:
    """50:50 beamsplitter: returns ``((A + B)/sqrt2, (A - B)/sqrt2)``."""
    out_sum = combine(_INV_SQRT2, field_a, _INV_SQRT2, field_b)
    out_diff = combine(_INV_SQRT2, field_a, -_INV_SQRT2, field_b)
    return out_sum, out_diff


def two_mode_squeezer(f1: ModeId, f2: ModeId, H: float) -> tuple[LinearField, LinearField]:
    """Entangled pair from two fresh ancillas at pump gain ``H >= 1``.

    Returns ``(sqrt(H) f1 + sqrt(H-1) f2^dag, sqrt(H) f2 + sqrt(H-1) f1^dag)``.
    ``H = 1`` is the identity (no entanglement).
    """
    if H < 1.0:
        raise ValueError(f"pump gain must be >= 1, got {H!r}")
    if f1.registry is not f2.registry:
        raise ValueError("ancilla modes belong to different registries")
    if f1.index == f2.index:
        raise ValueError("a two-mode squeezer needs two distinct ancilla modes")
    _require_role(f1, Role.SQUEEZER_ANCILLA)
    _require_role(f2, Role.SQUEEZER_ANCILLA)
    f1.registry.claim_fresh(f1, f2)
    cosh = math.sqrt(H)
    sinh = math.sqrt(H - 1.0)
    registry = f1.registry
    e1 = field_from_terms(registry, {f1: (cosh, 0.0), f2: (0.0, sinh)})
    e2 = field_from_terms(registry, {f2: (cosh, 0.0), f1: (0.0, sinh)})
    return e1, e2


def single_mode_squeezer(f: ModeId, H: float) -> LinearField:
    """Squeezed beam ``sqrt(H) f + sqrt(H-1) f^dag`` from one fresh ancilla."""
    if H < 1.0:
        raise ValueError(f"pump gain must be >= 1, got {H!r}")
    _require_role(f, Role.SQUEEZER_ANCILLA)
    f.registry.claim_fresh(f)
    return field_from_terms(f.registry, {f: (math.sqrt(H), math.sqrt(H - 1.0))})


def attenuate(field_d: LinearField, eta: float, g: ModeId) -> LinearField:
    """Beam attenuation ``sqrt(eta) D + sqrt(1 - eta) g`` with fresh vacuum ``g``."""
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"transmission must lie in [0, 1], got {eta!r}")
    if g.registry is not field_d.registry:
        raise ValueError("vacuum mode belongs to a different registry")
    _require_role(g, Role.ATTENUATOR_VACUUM)
    g.registry.claim_fresh(g)
    return combine(math.sqrt(eta), field_d, math.sqrt(1.0 - eta), annihilator_field(g))


def quadrature_variances(field: LinearField) -> tuple[float, float]:
    """Variances of X = a + a^dag and P = -i(a - a^dag) over vacuum inputs.

    ``V_X = sum_k |u_k + conj(v_k)|^2`` and ``V_P = sum_k |u_k - conj(v_k)|^2``;
    a bare annihilator gives (1, 1), the vacuum variance of this convention.
    """
    v_x = 0.0
    v_p = 0.0
    for u, v in field.terms.values():
        v_conj = complex(v).conjugate()
        v_x += abs(u + v_conj) ** 2
        v_p += abs(u - v_conj) ** 2
    return v_x, v_p


def _require_role(mode: ModeId, role: Role) -> None:
    if mode.role is not role:
        raise ValueError(
            f"mode {mode.label!r} has role {mode.role.value!r}; expected {role.value!r}"
        )
