"""Free modules with indexed bases over the Laurent polynomial ring.

A ``LinComb`` is a finitely supported map from hashable basis keys to
``LaurentPoly`` scalars.  Zero scalars are never stored, so equality is
key-wise exact equality.
"""
from __future__ import annotations

from typing import Callable, Hashable, Iterable, Mapping

from .laurent import LaurentPoly


class LinComb:
    """Finitely supported linear combination of basis keys."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Hashable, LaurentPoly] | Iterable[tuple[Hashable, LaurentPoly]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict = {}
        for k, p in items:
            if not isinstance(p, LaurentPoly):
                raise TypeError("scalars must be LaurentPoly")
            if k in acc:
                acc[k] = acc[k] + p
            else:
                acc[k] = p
        object.__setattr__(self, "_coeffs", {k: p for k, p in acc.items() if not p.is_zero()})

    def __setattr__(self, name, value):
        raise AttributeError("LinComb is immutable")

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def unit(cls, key: Hashable, scalar: LaurentPoly | None = None) -> "LinComb":
        return cls(((key, scalar if scalar is not None else LaurentPoly.one()),))

    def coefficient(self, key: Hashable) -> LaurentPoly:
        return self._coeffs.get(key, LaurentPoly.zero())

    def items(self):
        return self._coeffs.items()

    def keys(self):
        return self._coeffs.keys()

    def support(self) -> frozenset:
        return frozenset(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "LinComb") -> "LinComb":
        acc = dict(self._coeffs)
        for k, p in other._coeffs.items():
            acc[k] = acc[k] + p if k in acc else p
        return LinComb(acc)

    def __neg__(self) -> "LinComb":
        return LinComb({k: -p for k, p in self._coeffs.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def scale(self, scalar: LaurentPoly) -> "LinComb":
        return LinComb({k: p * scalar for k, p in self._coeffs.items()})

    def map_keys(self, f: Callable[[Hashable], Hashable]) -> "LinComb":
        return LinComb(((f(k), p) for k, p in self._coeffs.items()))

    def map_terms(self, f: Callable[[Hashable, LaurentPoly], "LinComb"]) -> "LinComb":
        out = LinComb.zero()
        for k, p in self._coeffs.items():
            out = out + f(k, p)
        return out

    def bilinear(self, other: "LinComb", key_mul: Callable[[Hashable, Hashable], "LinComb"]) -> "LinComb":
        """Extend a key-level product bilinearly over the coefficients."""
        out = LinComb.zero()
        for k1, p1 in self._coeffs.items():
            for k2, p2 in other._coeffs.items():
                out = out + key_mul(k1, k2).scale(p1 * p2)
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinComb) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def render(self, key_str: Callable[[Hashable], str] = str) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs, key=key_str):
            p = self._coeffs[k]
            s = str(p)
            if " " in s or "-" in s[1:]:
                s = f"({s})"
            parts.append(f"{s}*{key_str(k)}" if s != "1" else key_str(k))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LinComb({self.render()})"
