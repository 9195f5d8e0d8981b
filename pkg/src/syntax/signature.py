"""Signatures and fresh-name schemes"""

import re
from dataclasses import dataclass, replace
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from src.errors import SignatureError

IDENTIFIER = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')
RESERVED = frozenset({'forall', 'exists'})


def check_identifier(name: str, kind: str) -> None:
    if not IDENTIFIER.match(name) or name in RESERVED:
        raise SignatureError(f"invalid {kind} name '{name}'")


@dataclass(frozen=True)
class Signature:
    """
    Predicate symbols with positive arities plus constant symbols.

    Predicates are stored as a sorted tuple of (name, arity) pairs so that
    signatures hash and compare structurally.
    """

    predicates: Tuple[Tuple[str, int], ...] = ()
    constants: FrozenSet[str] = frozenset()
    with_equality: bool = False

    @classmethod
    def create(cls,
               predicates: Optional[Mapping[str, int]] = None,
               constants: Iterable[str] = (),
               with_equality: bool = False) -> 'Signature':
        """
        Build a signature, checking arities and name-space disjointness.

        Args:
            predicates: Mapping from predicate name to arity
            constants: Constant names
            with_equality: Whether the language has the equality atom

        Returns:
            Signature

        Raises:
            SignatureError: On arity < 1, bad identifiers or name clashes
        """
        predicates = dict(predicates or {})
        constants = frozenset(constants)

        for name, arity in predicates.items():
            check_identifier(name, 'predicate')
            if not isinstance(arity, int) or arity < 1:
                raise SignatureError(
                    f"predicate '{name}' has arity {arity}; arities must be >= 1"
                )
        for name in constants:
            check_identifier(name, 'constant')

        clash = constants & set(predicates)
        if clash:
            raise SignatureError(
                f"names used both as predicate and constant: {sorted(clash)}"
            )

        return cls(tuple(sorted(predicates.items())), constants, bool(with_equality))

    @property
    def predicate_map(self) -> Dict[str, int]:
        return dict(self.predicates)

    @property
    def predicate_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.predicates)

    def arity(self, name: str) -> int:
        for pred, arity in self.predicates:
            if pred == name:
                return arity
        raise SignatureError(f"unknown predicate '{name}'")

    def has_predicate(self, name: str) -> bool:
        return any(pred == name for pred, _ in self.predicates)

    def symbols(self) -> FrozenSet[str]:
        return frozenset(self.predicate_names) | self.constants

    def is_subsignature_of(self, other: 'Signature') -> bool:
        """Predicates (with arities) and constants all present in other"""
        other_preds = other.predicate_map
        for name, arity in self.predicates:
            if other_preds.get(name) != arity:
                return False
        return self.constants <= other.constants

    def union(self, other: 'Signature') -> 'Signature':
        merged = self.predicate_map
        for name, arity in other.predicates:
            if merged.get(name, arity) != arity:
                raise SignatureError(
                    f"predicate '{name}' used with arities {merged[name]} and {arity}"
                )
            merged[name] = arity
        return Signature.create(merged, self.constants | other.constants,
                                self.with_equality or other.with_equality)

    def with_constants(self, names: Iterable[str]) -> 'Signature':
        return Signature.create(self.predicate_map, self.constants | set(names),
                                self.with_equality)

    def with_predicates(self, predicates: Mapping[str, int]) -> 'Signature':
        merged = self.predicate_map
        merged.update(predicates)
        return Signature.create(merged, self.constants, self.with_equality)

    def without_constants(self, names: Iterable[str]) -> 'Signature':
        return replace(self, constants=self.constants - set(names))

    def with_equality_flag(self, flag: bool) -> 'Signature':
        return replace(self, with_equality=bool(flag))

    def describe(self) -> str:
        """Compact text form, e.g. 'P/1,Q/1; c; eq'"""
        preds = ','.join(f"{name}/{arity}" for name, arity in self.predicates)
        consts = ','.join(sorted(self.constants))
        text = f"{preds}; {consts}"
        return text + ('; eq' if self.with_equality else '')


EMPTY_SIGNATURE = Signature()


def _numbered(prefix: str, taken: Iterable[str]):
    taken = set(taken)
    index = 1
    while True:
        name = f"{prefix}{index}"
        if name not in taken:
            yield name
        index += 1


def fresh_constants(sig: Signature, count: int, avoid: Iterable[str] = ()) -> Tuple[str, ...]:
    """Smallest unused names c1, c2, ... outside the signature and avoid-set"""
    taken = set(sig.symbols()) | set(avoid)
    names = _numbered('c', taken)
    return tuple(next(names) for _ in range(count))


def fresh_variable(avoid: Iterable[str]) -> str:
    """Smallest unused name in the x1, x2, ... scheme"""
    return next(_numbered('x', avoid))


def fresh_variables(count: int, avoid: Iterable[str] = ()) -> Tuple[str, ...]:
    names = _numbered('x', avoid)
    return tuple(next(names) for _ in range(count))


def parse_signature(text: str) -> Signature:
    """
    Parse the compact form produced by Signature.describe().

    Example: 'P/1,R/2; c,d; eq'
    """
    parts = [part.strip() for part in text.split(';')]
    while len(parts) < 2:
        parts.append('')

    predicates = {}
    for item in filter(None, (p.strip() for p in parts[0].split(','))):
        name, _, arity = item.partition('/')
        if not arity.isdigit():
            raise SignatureError(f"bad predicate declaration '{item}'")
        predicates[name.strip()] = int(arity)

    constants = [c.strip() for c in parts[1].split(',') if c.strip()]
    with_equality = len(parts) > 2 and parts[2].lower() in ('eq', 'equality', '=')
    return Signature.create(predicates, constants, with_equality)
