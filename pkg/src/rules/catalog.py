"""Classical rules as named parameterizations of build_weights."""

from fractions import Fraction
from typing import Callable, Dict, List, Tuple, Union

from .builder import build_weights
from ..models.enums import Direction
from ..models.rule_spec import RuleSpec
from ..models.weight_vector import WeightVector
from ..utils.exceptions import RuleParameterError, UnknownRuleError


def _require(rule: str, condition: bool, detail: str):
    if not condition:
        raise RuleParameterError(rule=rule, detail=detail)


def newton_cotes_closed(points: int) -> WeightVector:
    """Closed Newton-Cotes rule on ``points`` nodes (alpha = beta = 0, m = n)."""
    _require("newton_cotes_closed", points >= 2, f"points must be at least 2, got {points}")
    m = points - 1
    return build_weights(RuleSpec(alpha=0, beta=0, m_left=m, n=m))


def newton_cotes_open(points: int) -> WeightVector:
    """Open Newton-Cotes rule whose outer nodes are one step inside the terminals."""
    _require("newton_cotes_open", points >= 1, f"points must be at least 1, got {points}")
    m = points - 1
    return build_weights(RuleSpec(alpha=1, beta=1, m_left=m, n=m))


def gregory_rule(m: int, n: int) -> WeightVector:
    """Gregory rule: composite trapezoid plus m+1 end corrections at each end."""
    return build_weights(RuleSpec(alpha=0, beta=0, m_left=m, n=n))


def lacroix_rule(n: int) -> WeightVector:
    """Gregory rule with m = 2 on six or more nodes."""
    _require("lacroix_rule", n >= 5, f"n must be at least 5 (six nodes), got {n}")
    return gregory_rule(2, n)


def adams_bashforth(steps: int, direction: Union[Direction, str] = Direction.FORWARD) -> WeightVector:
    """Adams-Bashforth weights over one step beyond the last of ``steps`` nodes.

    The forward rule integrates over [n, n+1] (alpha = -(steps-1), beta = 1,
    m = n = steps-1). The backward rule is its mirror image, integrating
    over [-1, 0] (alpha = 1, beta = 1 - steps).
    """
    _require("adams_bashforth", steps >= 1, f"steps must be at least 1, got {steps}")
    if isinstance(direction, str):
        try:
            direction = Direction.from_text(direction)
        except ValueError:
            raise RuleParameterError(
                rule="adams_bashforth", detail=f"direction must be forward or backward, got {direction!r}"
            ) from None

    m = steps - 1
    forward = build_weights(RuleSpec(alpha=-m, beta=1, m_left=m, n=m))
    if direction is Direction.FORWARD:
        return forward
    return build_weights(forward.spec.mirrored())


def adams_moulton(steps: int) -> WeightVector:
    """Adams-Moulton weights over the last step of ``steps`` nodes."""
    _require("adams_moulton", steps >= 2, f"steps must be at least 2, got {steps}")
    m = steps - 1
    return build_weights(RuleSpec(alpha=1 - m, beta=0, m_left=m, n=m))


def discretized_corrected_trapezoid(n: int, order: int = 1) -> WeightVector:
    """Corrected composite trapezoid with terminals ``order`` nodes inside.

    alpha = beta = -order and m = 2 * order, so the corrections use only
    nodes within the sampled range.
    """
    _require("discretized_corrected_trapezoid", order >= 1, f"order must be at least 1, got {order}")
    return build_weights(RuleSpec(alpha=-order, beta=-order, m_left=2 * order, n=n))


def discretized_corrected_midpoint(n: int, order: int = 1) -> WeightVector:
    """Corrected composite midpoint rule with terminals between nodes.

    alpha = beta = -(2 order - 1)/2 and m = 2 order - 1.
    """
    _require("discretized_corrected_midpoint", order >= 1, f"order must be at least 1, got {order}")
    alpha = -Fraction(2 * order - 1, 2)
    return build_weights(RuleSpec(alpha=alpha, beta=alpha, m_left=2 * order - 1, n=n))


# Fixed names take no arguments
_NAMED: Dict[str, Callable[[], WeightVector]] = {
    "trapezoid": lambda: newton_cotes_closed(2),
    "simpson13": lambda: newton_cotes_closed(3),
    "simpson38": lambda: newton_cotes_closed(4),
    "boole": lambda: newton_cotes_closed(5),
}

# key -> (pattern shown to users, accepted argument counts, builder)
_PARAMETERIZED: Dict[str, Tuple[str, Tuple[int, ...], Callable[..., WeightVector]]] = {
    "nc-closed": ("nc-closed:k", (1,), newton_cotes_closed),
    "nc-open": ("nc-open:k", (1,), newton_cotes_open),
    "gregory": ("gregory:m:n", (2,), gregory_rule),
    "lacroix": ("lacroix:n", (1,), lacroix_rule),
    "am": ("am:k", (1,), adams_moulton),
    "ctrap": ("ctrap:n[:order]", (1, 2), discretized_corrected_trapezoid),
    "cmid": ("cmid:n[:order]", (1, 2), discretized_corrected_midpoint),
}


def catalog_names() -> List[str]:
    """Accepted rule names and patterns."""
    names = list(_NAMED) + [pattern for pattern, _, _ in _PARAMETERIZED.values()]
    names.insert(names.index("am:k"), "ab:k:{fwd,bwd}")
    return names


def _unknown(name: str) -> UnknownRuleError:
    return UnknownRuleError(name=name, valid=", ".join(catalog_names()))


def _parse_int(name: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise _unknown(name) from None


def resolve_rule(name: str) -> WeightVector:
    """Build a catalogue rule from its name, e.g. "simpson38" or "ab:3:bwd".

    Raises:
        UnknownRuleError: Unrecognized name or malformed arguments
        RuleParameterError: Arguments out of range for the rule
    """
    key, *args = name.strip().lower().split(":")

    if key in _NAMED and not args:
        return _NAMED[key]()

    if key == "ab" and len(args) in (1, 2):
        steps = _parse_int(name, args[0])
        try:
            direction = Direction.from_text(args[1]) if len(args) == 2 else Direction.FORWARD
        except ValueError:
            raise _unknown(name) from None
        return adams_bashforth(steps, direction)

    if key in _PARAMETERIZED:
        _, arities, builder = _PARAMETERIZED[key]
        if len(args) in arities:
            return builder(*(_parse_int(name, arg) for arg in args))

    raise _unknown(name)
