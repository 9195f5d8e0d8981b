"""JSON model files

Format:

    {"signature": {"preds": {"P": 1}, "consts": ["c"], "equality": false},
     "worlds": ["w", "v"],
     "order": [["w", "v"]],
     "domains": {"w": ["a"], "v": ["b", "b2"]},
     "interp": {"w": {"P": [["a"]], "c": "a"}, "v": {...}},
     "homs": {"w>v": {"a": "b"}}}

Element names are local to their world. The order lists generator edges and
is closed reflexive-transitively on load; homs along generator edges are
composed for the remaining pairs.
"""

import json
from pathlib import Path
from typing import Dict, Tuple, Union

from src.errors import ModelFormatError, SignatureError
from src.kripke.model import Element, KripkeModel
from src.syntax.signature import Signature


def _split_hom_key(key: str, worlds) -> Tuple[str, str]:
    candidates = []
    parts = key.split('>')
    for i in range(1, len(parts)):
        src, dst = '>'.join(parts[:i]), '>'.join(parts[i:])
        if src in worlds and dst in worlds:
            candidates.append((src, dst))
    if not candidates:
        raise ModelFormatError(f"hom key '{key}' does not name two worlds")
    if len(candidates) > 1:
        # path-named worlds: a covering edge appends one segment
        covering = [(s, d) for s, d in candidates
                    if d.startswith(s + '>') and d.count('>') == s.count('>') + 1]
        if len(covering) == 1:
            return covering[0]
        raise ModelFormatError(f"hom key '{key}' is ambiguous")
    return candidates[0]


def model_from_dict(data: Dict) -> KripkeModel:
    """
    Build a model from the JSON structure.

    Raises:
        ModelFormatError: If a section is missing or malformed
    """
    try:
        sig_data = data.get('signature', {})
        try:
            signature = Signature.create(sig_data.get('preds', {}),
                                         sig_data.get('consts', []),
                                         sig_data.get('equality', False))
        except SignatureError as e:
            raise ModelFormatError(f"bad signature: {e}") from e

        worlds = [str(w) for w in data['worlds']]
        world_set = set(worlds)
        order = []
        for edge in data.get('order', []):
            if len(edge) != 2 or edge[0] not in world_set or edge[1] not in world_set:
                raise ModelFormatError(f"bad order edge {edge}")
            order.append((edge[0], edge[1]))

        domains = {}
        for w in worlds:
            names = data.get('domains', {}).get(w, [])
            if len(set(names)) != len(names):
                raise ModelFormatError(f"duplicate element names at '{w}'")
            domains[w] = [Element(w, str(name)) for name in names]

        predicates, constants = {}, {}
        for w, table in data.get('interp', {}).items():
            if w not in world_set:
                raise ModelFormatError(f"interpretation for unknown world '{w}'")
            predicates[w], constants[w] = {}, {}
            for symbol, value in table.items():
                if symbol in signature.constants:
                    constants[w][symbol] = Element(w, str(value))
                elif signature.has_predicate(symbol):
                    predicates[w][symbol] = [tuple(Element(w, str(a)) for a in row)
                                             for row in value]
                else:
                    raise ModelFormatError(f"symbol '{symbol}' at '{w}' not in signature")

        homs = {}
        for key, mapping in data.get('homs', {}).items():
            w, v = _split_hom_key(key, world_set)
            homs[(w, v)] = {Element(w, str(a)): Element(v, str(b)) for a, b in mapping.items()}

    except (KeyError, TypeError, AttributeError) as e:
        raise ModelFormatError(f"malformed model data: {e}") from e

    return KripkeModel.build(signature, worlds, order, domains, predicates, constants, homs)


def model_to_dict(m: KripkeModel, all_homs: bool = False) -> Dict:
    """
    Serialize a model; homs are written for covering edges only unless
    all_homs is set.
    """
    sig = m.signature
    covering = {(w, v) for w, v in m.order if w != v and not any(
        u not in (w, v) and m.leq(w, u) and m.leq(u, v) for u in m.worlds)}

    interp = {}
    for w in m.worlds:
        table = {}
        for name in sig.predicate_names:
            table[name] = sorted([a.name for a in args] for args in m.extension(w, name))
        for c in sorted(sig.constants):
            if c in m.constants[w]:
                table[c] = m.constants[w][c].name
        interp[w] = table

    homs = {}
    for (w, v), mapping in sorted(m.homs.items()):
        if w == v or (not all_homs and (w, v) not in covering):
            continue
        homs[f"{w}>{v}"] = {a.name: b.name for a, b in sorted(mapping.items())}

    return {
        'signature': {
            'preds': sig.predicate_map,
            'consts': sorted(sig.constants),
            'equality': sig.with_equality,
        },
        'worlds': list(m.worlds),
        'order': sorted([w, v] for w, v in covering),
        'domains': {w: [e.name for e in m.sorted_domain(w)] for w in m.worlds},
        'interp': interp,
        'homs': homs,
    }


def load_model(path: Union[str, Path]) -> KripkeModel:
    """Read a model file"""
    path = Path(path)
    try:
        with open(path, 'r') as f:
            data = json.load(f)
    except OSError as e:
        raise ModelFormatError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"{path} is not valid JSON: {e}") from e
    return model_from_dict(data)


def dump_model(m: KripkeModel, path: Union[str, Path, None] = None) -> str:
    """Write a model file (or just return the JSON text when path is None)"""
    text = json.dumps(model_to_dict(m), indent=2)
    if path is not None:
        with open(path, 'w') as f:
            f.write(text + '\n')
    return text
