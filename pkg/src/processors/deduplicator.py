"""Sentence deduplication"""

import hashlib
import logging
from typing import Dict, List, Sequence

from src.syntax.formula import (
    And, Atom, Bottom, Eq, Exists, Forall, Formula, Implies, Or, Var,
)

logger = logging.getLogger(__name__)


class Deduplicator:
    """Remove formulas that coincide after normalization"""

    @staticmethod
    def normal_form(f: Formula) -> str:
        """
        Normalized text of a formula.

        Conjunction and disjunction chains are flattened and their members
        sorted; bound variables are renamed by binding depth.

        Args:
            f: Formula

        Returns:
            Canonical string; equal strings mean equal up to the normalization
        """
        return _normalize(f, {}, 0)

    @staticmethod
    def generate_hash(f: Formula) -> str:
        """
        Generate unique hash for a formula.

        Returns:
            SHA256 hash of the normal form as hex string
        """
        content = Deduplicator.normal_form(f)
        return hashlib.sha256(content.encode('utf-8')).hexdigest()

    @staticmethod
    def add_hashes(formulas: Sequence[Formula]) -> Dict[str, Formula]:
        """Map hash to the first formula carrying it"""
        table: Dict[str, Formula] = {}
        for f in formulas:
            table.setdefault(Deduplicator.generate_hash(f), f)
        return table

    @staticmethod
    def remove_duplicates(formulas: Sequence[Formula]) -> List[Formula]:
        """
        Remove duplicate formulas (keeps first occurrence).

        Args:
            formulas: Formulas in priority order

        Returns:
            List of unique formulas
        """
        seen_hashes = set()
        unique = []

        for f in formulas:
            digest = Deduplicator.generate_hash(f)
            if digest not in seen_hashes:
                seen_hashes.add(digest)
                unique.append(f)

        removed_count = len(formulas) - len(unique)
        if removed_count > 0:
            logger.debug(f"Removed {removed_count} duplicate formulas")

        return unique


def _term(t, renaming: Dict[str, str]) -> str:
    if isinstance(t, Var):
        return renaming.get(t.name, t.name)
    return f"'{t.name}"


def _flatten(f: Formula, kind) -> List[Formula]:
    if isinstance(f, kind):
        return _flatten(f.left, kind) + _flatten(f.right, kind)
    return [f]


def _normalize(f: Formula, renaming: Dict[str, str], depth: int) -> str:
    if isinstance(f, Atom):
        return f"{f.predicate}({','.join(_term(t, renaming) for t in f.terms)})"
    if isinstance(f, Eq):
        left, right = sorted((_term(f.left, renaming), _term(f.right, renaming)))
        return f"={left},{right}"
    if isinstance(f, Bottom):
        return '#'
    if isinstance(f, (And, Or)):
        kind = type(f)
        members = sorted({_normalize(g, renaming, depth) for g in _flatten(f, kind)})
        tag = '&' if kind is And else '|'
        return f"{tag}[{';'.join(members)}]"
    if isinstance(f, Implies):
        return f">[{_normalize(f.left, renaming, depth)};{_normalize(f.right, renaming, depth)}]"
    if isinstance(f, (Exists, Forall)):
        tag = 'E' if isinstance(f, Exists) else 'A'
        inner = {**renaming, f.var: f"%{depth}"}
        return f"{tag}%{depth}.{_normalize(f.body, inner, depth + 1)}"
    raise TypeError(f"not a formula: {f!r}")
