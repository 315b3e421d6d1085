import re
from dataclasses import dataclass, field

import numpy as np

from nfoldlib import constants
from nfoldlib.errors import GuardExceededError


class Subcat:
    """
    An additive, summand-closed subcategory: add of a set of catalog indecomposables, stored as a bitmask.

    Parameters
    ----------
    cat : IndecCatalog
        The catalog the bits refer to.
    mask : int
        Bit ``i`` is set when ``cat.indecs[i]`` belongs to the subcategory.

    Raises
    ------
    ValueError
        If `mask` has bits outside the catalog.
    """

    def __init__(self, cat, mask=0):
        mask = int(mask)
        if mask < 0 or mask >> len(cat):
            raise ValueError(f"mask {mask:#x} has bits outside a catalog of {len(cat)} modules")
        self.cat = cat
        self.mask = mask

    @classmethod
    def from_indices(cls, cat, indices):
        mask = 0
        for i in indices:
            if not 0 <= i < len(cat):
                raise ValueError(f"catalog index {i} out of range")
            mask |= 1 << int(i)
        return cls(cat, mask)

    @classmethod
    def full(cls, cat):
        return cls(cat, (1 << len(cat)) - 1)

    @classmethod
    def empty(cls, cat):
        return cls(cat, 0)

    @classmethod
    def from_labels(cls, cat, text):
        """
        Parse ``"P2+S3"``, ``"add(P2+S3)"``, ``"P2,S3"``, ``"0"`` / ``"{0}"`` (zero subcategory) or ``"mod"``.
        """
        text = text.strip()
        if text in ("mod", "mod A"):
            return cls.full(cat)
        match = re.fullmatch(r"add\((.*)\)", text)
        if match:
            text = match.group(1).strip()
        if text in ("", "0", "{0}"):
            return cls.empty(cat)
        labels = [part.strip() for part in re.split(r"[+,]", text)]
        if any(not label for label in labels):
            raise ValueError(f"malformed subcategory {text!r}")
        return cls.from_indices(cat, [cat.index(label) for label in labels])

    @property
    def indices(self):
        return [i for i in range(len(self.cat)) if self.mask >> i & 1]

    @property
    def modules(self):
        return [self.cat.indecs[i] for i in self.indices]

    @property
    def labels(self):
        return [self.cat.labels[i] for i in self.indices]

    def label(self):
        """``{0}`` for the zero subcategory, ``mod`` for everything, else ``add(P1+P2+S2)``."""
        if not self.mask:
            return "{0}"
        if self.is_full():
            return "mod"
        return "add(" + "+".join(self.labels) + ")"

    def is_full(self):
        return self.mask == (1 << len(self.cat)) - 1

    def is_empty(self):
        return self.mask == 0

    def __len__(self):
        return bin(self.mask).count("1")

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, i):
        return bool(self.mask >> int(i) & 1)

    def _same(self, other):
        if other.cat is not self.cat:
            raise ValueError("subcategories of different catalogs")

    def __or__(self, other):
        self._same(other)
        return Subcat(self.cat, self.mask | other.mask)

    def __and__(self, other):
        self._same(other)
        return Subcat(self.cat, self.mask & other.mask)

    def __sub__(self, other):
        self._same(other)
        return Subcat(self.cat, self.mask & ~other.mask)

    def __le__(self, other):
        self._same(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __eq__(self, other):
        return isinstance(other, Subcat) and other.cat is self.cat and other.mask == self.mask

    def __hash__(self):
        return hash((id(self.cat), self.mask))

    def __repr__(self):
        return f"Subcat({self.label()})"

    def sort_key(self):
        return len(self), self.indices

    def to_dict(self):
        return {"mask": self.mask, "labels": self.labels}


def mask_of(indices):
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def check_catalog_size(cat, limit=constants.MAX_CATALOG):
    if len(cat) > limit:
        raise GuardExceededError(f"catalog of {len(cat)} modules exceeds the bitmask limit {limit}")


def uint_masks(values):
    return np.array([int(v) for v in values], dtype=np.uint64)


@dataclass
class Verdict:
    """A yes/no answer with a replayable witness on failure."""
    ok: bool
    witness: object = None

    def __bool__(self):
        return bool(self.ok)


@dataclass
class ClosureReport:
    """
    Audit trail of a saturation.

    `witnesses` maps each added catalog index to the description of the exact sequence that added it.
    `exact` is False when the answer is only guaranteed up to the multiplicity bound `mu`.
    """
    input: Subcat
    result: Subcat
    rounds: int = 0
    mu: int = constants.MU
    witnesses: dict = field(default_factory=dict)
    exact: bool = False

    def to_dict(self):
        return {
            "input": self.input.to_dict(),
            "result": self.result.to_dict(),
            "rounds": self.rounds,
            "mu": self.mu,
            "exact": self.exact,
            "witnesses": {self.result.cat.labels[i]: w for i, w in sorted(self.witnesses.items())},
        }
