"""Semantic knowledge bases: per-party class-id sets over the global
prototype collection, plus the membership indicator."""

from dataclasses import dataclass, field

import numpy as np

from .errors import DuplicateIds, EmptySkb, SizeExceedsPrototypes, UnknownClass
from .extractor import SemanticPrototypes


@dataclass(frozen=True)
class Skb:
    """A party's knowledge base: subset of prototype class ids."""

    class_ids: frozenset
    prototypes: SemanticPrototypes = field(repr=False)

    def __post_init__(self):
        ids = frozenset(int(c) for c in self.class_ids)
        object.__setattr__(self, "class_ids", ids)
        if not ids:
            raise EmptySkb("SKB must contain at least one class")
        unknown = ids - set(self.prototypes.class_ids)
        if unknown:
            raise UnknownClass(f"SKB classes without prototypes: {sorted(unknown)}")

    def __len__(self):
        return len(self.class_ids)


def indicator(skb, c):
    """1 if class ``c`` is in the SKB, else 0; ``c`` must exist globally."""
    c = int(c)
    if c not in set(skb.prototypes.class_ids):
        raise UnknownClass(f"class {c} has no prototype")
    return 1 if c in skb.class_ids else 0


def parse_selection(spec):
    """Parse an SKB selection spec string.

    Accepted forms: ``full``, ``first:<k>``, ``random:<k>:<seed>``,
    ``ids:<id,id,...>``.
    """
    spec = spec.strip()
    if spec == "full":
        return ("full",)
    kind, _, rest = spec.partition(":")
    if kind == "first":
        return ("first", int(rest))
    if kind == "random":
        k, _, seed = rest.partition(":")
        return ("random", int(k), int(seed))
    if kind == "ids":
        return ("ids", [int(x) for x in rest.split(",") if x.strip() != ""])
    raise ValueError(f"unrecognized SKB selection spec: {spec!r}")


def build_skb(prototypes, selection):
    """Build an SKB from a selection: a spec string (see parse_selection),
    a parsed tuple, or an explicit iterable of class ids."""
    if isinstance(selection, str):
        selection = parse_selection(selection)
    elif not isinstance(selection, tuple):
        selection = ("ids", list(selection))

    ids = list(prototypes.class_ids)
    kind = selection[0]
    if kind == "full":
        chosen = ids
    elif kind == "first":
        k = selection[1]
        if k > len(ids):
            raise SizeExceedsPrototypes(f"first:{k} over {len(ids)} prototypes")
        chosen = ids[:k]
    elif kind == "random":
        k, seed = selection[1], selection[2]
        if k > len(ids):
            raise SizeExceedsPrototypes(f"random:{k} over {len(ids)} prototypes")
        rng = np.random.default_rng(seed)
        chosen = [ids[i] for i in rng.choice(len(ids), size=k, replace=False)]
    elif kind == "ids":
        chosen = [int(c) for c in selection[1]]
        if len(set(chosen)) != len(chosen):
            raise DuplicateIds(f"duplicate ids in explicit selection: {chosen}")
    else:
        raise ValueError(f"unrecognized selection kind: {kind!r}")
    return Skb(class_ids=frozenset(chosen), prototypes=prototypes)
